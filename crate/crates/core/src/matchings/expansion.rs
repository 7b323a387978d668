//! Expansions of `(xy)^{⧢s} ⧢ (yx)^{⧢t}`: labelled words recording which
//! factor each letter came from. Factor `i ≤ s` is an `xy` factor and
//! contributes `x^i` before `y^i`; factor `j ≤ t` is a `yx` factor and
//! contributes `y_j` before `x_j`.

use std::fmt;

use super::xy::XyMatching;
use crate::error::{Error, Result};
use crate::shuffle_algebra::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    /// The `i`-th `xy` factor (labels `x^i`, `y^i`), 1-indexed.
    Upper(usize),
    /// The `j`-th `yx` factor (labels `y_j`, `x_j`), 1-indexed.
    Lower(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub letter: Letter,
    pub factor: Factor,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.factor {
            Factor::Upper(i) => write!(f, "{}^{i}", self.letter.as_char()),
            Factor::Lower(j) => write!(f, "{}_{j}", self.letter.as_char()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Expansion {
    word: Word,
    labels: Vec<Label>,
    s: usize,
    t: usize,
}

impl Expansion {
    /// Checks every label is used exactly once, letters agree with `word`,
    /// and each factor's letters appear in the factor's order.
    pub fn new(word: Word, labels: Vec<Label>, s: usize, t: usize) -> Result<Self> {
        let bad = |msg: String| Err(Error::Inconsistent(msg));
        if word.len() != 2 * (s + t) || labels.len() != word.len() {
            return bad(format!("expansion of length {} cannot use s = {s}, t = {t}", labels.len()));
        }
        // first/second occurrence position for each factor
        let mut upper = vec![[None::<usize>; 2]; s];
        let mut lower = vec![[None::<usize>; 2]; t];
        for (pos, label) in labels.iter().enumerate() {
            if label.letter != word.letter(pos) {
                return bad(format!("label {label} sits on letter {}", word.letter(pos).as_char()));
            }
            let (slots, index) = match label.factor {
                Factor::Upper(i) => (&mut upper, i),
                Factor::Lower(j) => (&mut lower, j),
            };
            if index == 0 || index > slots.len() {
                return bad(format!("label {label} out of range"));
            }
            let slot = &mut slots[index - 1][usize::from(label.letter == Letter::Y)];
            if slot.replace(pos).is_some() {
                return bad(format!("label {label} used twice"));
            }
        }
        let ordered = |slots: &[[Option<usize>; 2]], x_first: bool| {
            slots.iter().all(|[x, y]| match (x, y) {
                (Some(x), Some(y)) => (x < y) == x_first,
                _ => false,
            })
        };
        if !ordered(&upper, true) || !ordered(&lower, false) {
            return bad("factor letters out of order".to_string());
        }
        Ok(Expansion { word, labels, s, t })
    }

    pub fn word(&self) -> Word {
        self.word
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn factors(&self) -> (usize, usize) {
        (self.s, self.t)
    }

    /// Superscripts and subscripts on the x's appear in increasing order
    /// from left to right.
    pub fn is_canonical(&self) -> bool {
        let x_indices = |upper: bool| -> Vec<usize> {
            self.labels
                .iter()
                .filter(|l| l.letter == Letter::X)
                .filter_map(|l| match (l.factor, upper) {
                    (Factor::Upper(i), true) | (Factor::Lower(i), false) => Some(i),
                    _ => None,
                })
                .collect()
        };
        let increasing = |v: Vec<usize>| v.windows(2).all(|p| p[0] < p[1]);
        increasing(x_indices(true)) && increasing(x_indices(false))
    }

    /// Relabels factors: upper index `i` becomes `upper[i-1]`, lower index
    /// `j` becomes `lower[j-1]` (both 1-indexed permutations).
    pub fn relabel(&self, upper: &[usize], lower: &[usize]) -> Expansion {
        let labels = self
            .labels
            .iter()
            .map(|l| Label {
                letter: l.letter,
                factor: match l.factor {
                    Factor::Upper(i) => Factor::Upper(upper[i - 1]),
                    Factor::Lower(j) => Factor::Lower(lower[j - 1]),
                },
            })
            .collect();
        Expansion { labels, ..self.clone() }
    }

    /// The `S_s × S_t` orbit of this expansion.
    pub fn orbit(&self) -> Vec<Expansion> {
        let upper_ids: Vec<usize> = (1..=self.s).collect();
        let lower_ids: Vec<usize> = (1..=self.t).collect();
        let mut out = Vec::new();
        super::perm::for_each_arrangement(&upper_ids, &mut |up| {
            super::perm::for_each_arrangement(&lower_ids, &mut |low| {
                out.push(self.relabel(up, low));
            });
        });
        out
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(Label::to_string).collect();
        write!(f, "({})", parts.join(" "))
    }
}

/// Every expansion of `(xy)^{⧢s} ⧢ (yx)^{⧢t}` whose underlying word is `w`.
pub fn enumerate_expansions(w: Word, s: usize, t: usize) -> Result<Vec<Expansion>> {
    if w.len() != 2 * (s + t) {
        return Err(Error::Inconsistent(format!(
            "|{w}| = {} but s + t = {}",
            w.len(),
            s + t
        )));
    }
    let xs: Vec<usize> = (0..w.len()).filter(|&i| w.letter(i) == Letter::X).collect();
    let ys: Vec<usize> = (0..w.len()).filter(|&i| w.letter(i) == Letter::Y).collect();
    let mut out = Vec::new();
    if xs.len() != s + t {
        return Ok(out);
    }

    struct Search<'a> {
        xs: &'a [usize],
        ys: &'a [usize],
        s: usize,
        t: usize,
        used_x: Vec<bool>,
        used_y: Vec<bool>,
        labels: Vec<Option<Label>>,
    }

    impl Search<'_> {
        fn run(&mut self, factor: usize, word: Word, out: &mut Vec<Expansion>) {
            if factor == self.s + self.t {
                let labels = self.labels.iter().map(|l| l.expect("all placed")).collect();
                out.push(Expansion {
                    word,
                    labels,
                    s: self.s,
                    t: self.t,
                });
                return;
            }
            let (id, x_first) = if factor < self.s {
                (Factor::Upper(factor + 1), true)
            } else {
                (Factor::Lower(factor - self.s + 1), false)
            };
            for a in 0..self.xs.len() {
                if self.used_x[a] {
                    continue;
                }
                for b in 0..self.ys.len() {
                    let (px, py) = (self.xs[a], self.ys[b]);
                    if self.used_y[b] || (px < py) != x_first {
                        continue;
                    }
                    self.used_x[a] = true;
                    self.used_y[b] = true;
                    self.labels[px] = Some(Label { letter: Letter::X, factor: id });
                    self.labels[py] = Some(Label { letter: Letter::Y, factor: id });
                    self.run(factor + 1, word, out);
                    self.labels[px] = None;
                    self.labels[py] = None;
                    self.used_x[a] = false;
                    self.used_y[b] = false;
                }
            }
        }
    }

    Search {
        xs: &xs,
        ys: &ys,
        s,
        t,
        used_x: vec![false; xs.len()],
        used_y: vec![false; ys.len()],
        labels: vec![None; w.len()],
    }
    .run(0, w, &mut out);
    out.sort();
    Ok(out)
}

/// Joins the two positions carrying each factor's labels.
pub fn matching_from_expansion(e: &Expansion) -> Result<XyMatching> {
    let mut sigma = vec![usize::MAX; e.labels.len()];
    for (p, lp) in e.labels.iter().enumerate() {
        let q = e
            .labels
            .iter()
            .position(|lq| lq.factor == lp.factor && lq.letter != lp.letter)
            .expect("validated expansions pair every label");
        sigma[p] = q;
    }
    XyMatching::new(e.word, sigma)
}

/// The unique canonical expansion mapping to `d` with `s` xy-factors and
/// `t` yx-factors. Requires `negativity(d) = t` and `s + t` = pair count.
pub fn canonical_expansion(d: &XyMatching, s: usize, t: usize) -> Result<Expansion> {
    let word = d.word();
    let sigma = d.sigma();
    if s + t != word.len() / 2 {
        return Err(Error::Inconsistent(format!(
            "s + t = {} but {word} has {} pairs",
            s + t,
            word.len() / 2
        )));
    }
    if d.negativity() != t {
        return Err(Error::Inconsistent(format!(
            "matching has negativity {}, expected t = {t}",
            d.negativity()
        )));
    }
    let mut labels = vec![None; word.len()];
    let (mut upper, mut lower) = (0, 0);
    for i in (0..word.len()).filter(|&i| word.letter(i) == Letter::X) {
        let factor = if sigma[i] > i {
            upper += 1;
            Factor::Upper(upper)
        } else {
            lower += 1;
            Factor::Lower(lower)
        };
        labels[i] = Some(Label { letter: Letter::X, factor });
        labels[sigma[i]] = Some(Label { letter: Letter::Y, factor });
    }
    let labels = labels.into_iter().map(|l| l.expect("every position labelled")).collect();
    Expansion::new(word, labels, s, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matchings::xy::{coefficient_by_xy, enumerate_xy_matchings};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn sample_matching() -> XyMatching {
        XyMatching::from_cycles("xxyyxxyy", &[&[1, 3], &[2, 8], &[4, 6], &[5, 7]]).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_expansions(w("xxyy"), 2, 0).unwrap().len(), 4);
        assert_eq!(enumerate_expansions(w("xxyyxxyy"), 3, 1).unwrap().len(), 96);
        assert_eq!(enumerate_expansions(w("xy"), 0, 1).unwrap().len(), 0);
        assert_eq!(enumerate_expansions(w("yx"), 0, 1).unwrap().len(), 1);
        assert!(enumerate_expansions(w("xy"), 1, 1).is_err());
    }

    #[test]
    fn appendix_canonical_labels() {
        let e = canonical_expansion(&sample_matching(), 3, 1).unwrap();
        assert_eq!(e.to_string(), "(x^1 x^2 y^1 y_1 x^3 x_1 y^3 y^2)");
        assert!(e.is_canonical());
        assert_eq!(matching_from_expansion(&e).unwrap(), sample_matching());
        assert!(canonical_expansion(&sample_matching(), 2, 2).is_err());
        assert!(canonical_expansion(&sample_matching(), 4, 1).is_err());
    }

    #[test]
    fn expansion_orbit() {
        let e = canonical_expansion(&sample_matching(), 3, 1).unwrap();
        let orbit = e.orbit();
        assert_eq!(orbit.len(), 6);
        assert_eq!(orbit.iter().filter(|o| o.is_canonical()).count(), 1);
        for member in &orbit {
            assert_eq!(matching_from_expansion(member).unwrap(), sample_matching());
        }
    }

    #[test]
    fn round_trip_on_xxyy() {
        for d in enumerate_xy_matchings(w("xxyy")).unwrap() {
            let t = d.negativity();
            let e = canonical_expansion(&d, 2 - t, t).unwrap();
            assert_eq!(matching_from_expansion(&e).unwrap(), d);
        }
    }

    #[test]
    fn validation_rejects_bad_labels() {
        let up = |letter, i| Label { letter, factor: Factor::Upper(i) };
        assert!(Expansion::new(w("xy"), vec![up(Letter::X, 1), up(Letter::Y, 1)], 1, 0).is_ok());
        assert!(Expansion::new(w("yx"), vec![up(Letter::Y, 1), up(Letter::X, 1)], 1, 0).is_err());
        assert!(Expansion::new(w("xy"), vec![up(Letter::X, 1), up(Letter::X, 1)], 1, 0).is_err());
        assert!(Expansion::new(w("xy"), vec![up(Letter::X, 2), up(Letter::Y, 2)], 1, 0).is_err());
    }

    #[test]
    fn expansions_partition_into_orbits() {
        for pairs in [2, 4] {
            for word in Word::even_words(pairs) {
                for t in 0..=pairs {
                    let s = pairs - t;
                    let all = enumerate_expansions(word, s, t).unwrap();
                    assert_eq!(
                        num_bigint::BigInt::from(all.len()),
                        coefficient_by_xy(word, s, t).unwrap()
                    );
                    let canonical: Vec<&Expansion> = all.iter().filter(|e| e.is_canonical()).collect();
                    let orbit_size = (1..=s).product::<usize>() * (1..=t).product::<usize>();
                    assert_eq!(canonical.len() * orbit_size, all.len());
                    for e in canonical {
                        let d = matching_from_expansion(e).unwrap();
                        assert_eq!(&canonical_expansion(&d, s, t).unwrap(), e);
                    }
                }
            }
        }
    }
}
