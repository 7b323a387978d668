//! Permutations stored as 0-indexed image arrays: `perm[i]` is the image
//! of `i`. Conversions to and from 1-indexed notation live at the edges.

use crate::error::{Error, Result};

pub fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    perm.iter().all(|&p| p < perm.len() && !std::mem::replace(&mut seen[p], true))
}

pub fn is_fixed_point_free_involution(perm: &[usize]) -> bool {
    is_permutation(perm) && perm.iter().enumerate().all(|(i, &p)| p != i && perm[p] == i)
}

pub fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// Disjoint cycles, each starting at its smallest element, ordered by that
/// element. Fixed points appear as 1-cycles.
pub fn cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = perm[i];
        }
        out.push(cycle);
    }
    out
}

/// Builds a permutation of `{0..n}` from 1-indexed cycles, e.g.
/// `from_cycles(8, &[&[1, 3], &[2, 8]])`. Unmentioned points are fixed.
pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut touched = vec![false; n];
    for cycle in cycles {
        for (k, &point) in cycle.iter().enumerate() {
            if point == 0 || point > n {
                return Err(Error::InvalidPermutation(format!("point {point} outside 1..={n}")));
            }
            if std::mem::replace(&mut touched[point - 1], true) {
                return Err(Error::InvalidPermutation(format!("point {point} repeated")));
            }
            let next = cycle[(k + 1) % cycle.len()];
            perm[point - 1] = next - 1;
        }
    }
    Ok(perm)
}

pub fn from_one_indexed(images: &[usize]) -> Result<Vec<usize>> {
    let perm: Vec<usize> = images
        .iter()
        .map(|&i| {
            i.checked_sub(1)
                .ok_or_else(|| Error::InvalidPermutation("images are 1-indexed".into()))
        })
        .collect::<Result<_>>()?;
    if !is_permutation(&perm) {
        return Err(Error::InvalidPermutation(format!("{images:?} is not a permutation")));
    }
    Ok(perm)
}

pub fn to_one_indexed(perm: &[usize]) -> Vec<usize> {
    perm.iter().map(|&p| p + 1).collect()
}

/// Cycle notation with 1-indexed points, omitting fixed points:
/// `(1 3)(2 8)(4 6)(5 7)`. The identity renders as `()`.
pub fn cycle_notation(perm: &[usize]) -> String {
    let text: String = cycles(perm)
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| {
            let points: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            format!("({})", points.join(" "))
        })
        .collect();
    if text.is_empty() {
        "()".to_string()
    } else {
        text
    }
}

/// Calls `visit` with every permutation of `items`, in lexicographic order
/// of index choices.
pub fn for_each_arrangement<T: Copy>(items: &[T], visit: &mut impl FnMut(&[T])) {
    fn go<T: Copy>(pool: &mut Vec<T>, prefix: &mut Vec<T>, visit: &mut impl FnMut(&[T])) {
        if pool.is_empty() {
            visit(prefix);
            return;
        }
        for k in 0..pool.len() {
            let item = pool.remove(k);
            prefix.push(item);
            go(pool, prefix, visit);
            prefix.pop();
            pool.insert(k, item);
        }
    }
    go(&mut items.to_vec(), &mut Vec::with_capacity(items.len()), visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_round_trip() {
        let perm = from_cycles(8, &[&[1, 3], &[2, 8], &[4, 6], &[5, 7]]).unwrap();
        assert!(is_fixed_point_free_involution(&perm));
        assert_eq!(cycle_notation(&perm), "(1 3)(2 8)(4 6)(5 7)");
        assert_eq!(to_one_indexed(&perm), vec![3, 8, 1, 6, 7, 4, 5, 2]);
        assert_eq!(from_one_indexed(&to_one_indexed(&perm)).unwrap(), perm);
    }

    #[test]
    fn long_cycles() {
        let perm = from_cycles(6, &[&[1, 2, 3, 4], &[5, 6]]).unwrap();
        assert_eq!(cycles(&perm).len(), 2);
        assert_eq!(cycle_notation(&perm), "(1 2 3 4)(5 6)");
        assert_eq!(cycle_notation(&inverse(&perm)), "(1 4 3 2)(5 6)");
        assert!(!is_fixed_point_free_involution(&perm));
        assert_eq!(cycle_notation(&[0, 1, 2]), "()");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(from_cycles(3, &[&[1, 4]]).is_err());
        assert!(from_cycles(3, &[&[1, 2], &[2, 3]]).is_err());
        assert!(from_one_indexed(&[1, 1]).is_err());
        assert!(from_one_indexed(&[0, 1]).is_err());
        assert!(!is_permutation(&[0, 2]));
    }

    #[test]
    fn arrangements() {
        let mut seen = Vec::new();
        for_each_arrangement(&[1, 2, 3], &mut |p| seen.push(p.to_vec()));
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![1, 2, 3]);
        assert_eq!(seen[5], vec![3, 2, 1]);
        let mut count = 0;
        for_each_arrangement::<u8>(&[], &mut |_| count += 1);
        assert_eq!(count, 1);
    }
}
