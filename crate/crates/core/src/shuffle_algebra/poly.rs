use std::collections::btree_map::{self, BTreeMap};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{parse_rational, to_display_string, to_ratio_string, Rational};
use super::word::{concat, Word};

/// A finitely supported linear combination of words with exact rational
/// coefficients. Zero coefficients are never stored, so structural equality
/// is equality of tensors.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorPoly {
    terms: BTreeMap<Word, Rational>,
}

impl TensorPoly {
    pub fn zero() -> Self {
        TensorPoly::default()
    }

    /// `1·ε`
    pub fn unit() -> Self {
        TensorPoly::monomial(Word::empty(), Rational::one())
    }

    pub fn word(word: Word) -> Self {
        TensorPoly::monomial(word, Rational::one())
    }

    pub fn monomial(word: Word, coeff: Rational) -> Self {
        let mut poly = TensorPoly::zero();
        poly.add_term(word, coeff);
        poly
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Rational)>>(terms: I) -> Self {
        let mut poly = TensorPoly::zero();
        for (word, coeff) in terms {
            poly.add_term(word, coeff);
        }
        poly
    }

    /// Collects a hash-map accumulator into canonical form.
    pub(crate) fn from_accumulator(acc: HashMap<Word, Rational>) -> Self {
        TensorPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn add_term(&mut self, word: Word, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn coeff(&self, word: &Word) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of words with a nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, factor: &Rational) -> TensorPoly {
        if factor.is_zero() {
            return TensorPoly::zero();
        }
        TensorPoly {
            terms: self.terms.iter().map(|(w, c)| (*w, c * factor)).collect(),
        }
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Bilinear extension of concatenation (the tensor product).
    pub fn concat_product(&self, other: &TensorPoly) -> TensorPoly {
        let mut acc: HashMap<Word, Rational> = HashMap::new();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                *acc.entry(concat(*u, *v)).or_insert_with(Rational::zero) += cu * cv;
            }
        }
        TensorPoly::from_accumulator(acc)
    }

    /// The part of `self` supported on words satisfying `keep`.
    pub fn filter<F: Fn(&Word) -> bool>(&self, keep: F) -> TensorPoly {
        TensorPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (*w, c.clone()))
                .collect(),
        }
    }
}

impl<'a> Add<&'a TensorPoly> for &'a TensorPoly {
    type Output = TensorPoly;

    fn add(self, rhs: &'a TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a TensorPoly> for &'a TensorPoly {
    type Output = TensorPoly;

    fn sub(self, rhs: &'a TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, -c.clone());
        }
        out
    }
}

impl Neg for &TensorPoly {
    type Output = TensorPoly;

    fn neg(self) -> TensorPoly {
        TensorPoly {
            terms: self.terms.iter().map(|(w, c)| (*w, -c.clone())).collect(),
        }
    }
}

impl Mul<&Rational> for &TensorPoly {
    type Output = TensorPoly;

    fn mul(self, rhs: &Rational) -> TensorPoly {
        self.scale(rhs)
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})·{:?}", to_display_string(c), w)?;
        }
        Ok(())
    }
}

impl Serialize for TensorPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            map.serialize_entry(&w.to_string(), &to_ratio_string(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for TensorPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PolyVisitor;

        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = TensorPoly;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object mapping words to \"p/q\" coefficient strings")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<TensorPoly, A::Error> {
                let mut poly = TensorPoly::zero();
                while let Some((word, coeff)) = access.next_entry::<String, String>()? {
                    let word: Word = word.parse().map_err(de::Error::custom)?;
                    let coeff = parse_rational(&coeff).map_err(de::Error::custom)?;
                    poly.add_term(word, coeff);
                }
                Ok(poly)
            }
        }

        deserializer.deserialize_map(PolyVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::{integer, rational};
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let mut p = TensorPoly::word(w("xy"));
        p.add_term(w("xy"), integer(-1));
        assert!(p.is_zero());
        assert_eq!(p, TensorPoly::zero());
        p.add_term(w("yx"), integer(0));
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn arithmetic() {
        let a = TensorPoly::from_terms([(w("xy"), integer(1)), (w("yx"), integer(-1))]);
        let b = TensorPoly::from_terms([(w("yx"), integer(1))]);
        let sum = &a + &b;
        assert_eq!(sum, TensorPoly::word(w("xy")));
        assert_eq!(&(&a - &a), &TensorPoly::zero());
        assert_eq!((-&a).coeff(&w("yx")), integer(1));
        assert_eq!(a.scale(&rational(1, 2)).coeff(&w("xy")), rational(1, 2));
        assert!(a.scale(&integer(0)).is_zero());
    }

    #[test]
    fn concat_product_expands() {
        let diag = TensorPoly::from_terms([(w("xx"), integer(1)), (w("yy"), integer(1))]);
        let sq = diag.concat_product(&diag);
        assert_eq!(sq.len(), 4);
        assert_eq!(sq.coeff(&w("xxyy")), integer(1));
        assert_eq!(TensorPoly::unit().concat_product(&diag), diag);
    }

    #[test]
    fn json_shape() {
        let p = TensorPoly::from_terms([
            (Word::empty(), integer(2)),
            (w("xxyy"), rational(-3, 4)),
        ]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"":"2/1","xxyy":"-3/4"}"#);
        let back: TensorPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        let loose: TensorPoly = serde_json::from_str(r#"{"xy":"4","yx":"0/1"}"#).unwrap();
        assert_eq!(loose, TensorPoly::monomial(w("xy"), integer(4)));
        assert!(serde_json::from_str::<TensorPoly>(r#"{"xz":"1/1"}"#).is_err());
    }
}
