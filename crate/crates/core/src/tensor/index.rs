//! Index sets, permutation parity and the generalized Kronecker symbol.
//!
//! All indices are zero-based: an ambient dimension `n` means indices `0..n`.

use std::ops::Deref;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Strictly increasing set of indices drawn from `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    indices: Vec<usize>,
    n: usize,
}

impl MultiIndex {
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::InvalidIndex(format!("index {bad} out of range 0..{n}")));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndex(format!("{indices:?} is not strictly increasing")));
        }
        Ok(Self { indices, n })
    }

    /// Sorts an arbitrary tuple of distinct indices and returns the sign of the sort.
    pub fn sorted(tuple: &[usize], n: usize) -> Result<(Self, i8)> {
        let sign =
            sequence_sign(tuple).ok_or_else(|| Error::InvalidIndex(format!("{tuple:?} contains a repeated index")))?;
        let mut indices = tuple.to_vec();
        indices.sort_unstable();
        Ok((Self::new(indices, n)?, sign))
    }

    pub fn empty(n: usize) -> Self {
        Self { indices: Vec::new(), n }
    }

    pub fn full(n: usize) -> Self {
        Self { indices: (0..n).collect(), n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// `{0..n} \ self`, in increasing order.
    pub fn complement(&self) -> Self {
        Self { indices: complement_of(&self.indices, self.n), n: self.n }
    }

    /// All `r`-subsets of `0..n` in lexicographic order.
    pub fn all(n: usize, r: usize) -> impl Iterator<Item = MultiIndex> {
        (0..n).combinations(r).map(move |indices| MultiIndex { indices, n })
    }

    /// Position of this set in the lexicographic order of [`MultiIndex::all`].
    pub fn rank(&self) -> usize {
        let r = self.indices.len();
        let mut rank = 0;
        let mut next = 0;
        for (t, &j) in self.indices.iter().enumerate() {
            for v in next..j {
                rank += binomial(self.n - 1 - v, r - 1 - t);
            }
            next = j + 1;
        }
        rank
    }
}

impl Deref for MultiIndex {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.indices
    }
}

/// Indices of `0..n` not present in `set`, ascending.
pub fn complement_of(set: &[usize], n: usize) -> Vec<usize> {
    let mut present = vec![false; n];
    for &i in set {
        present[i] = true;
    }
    (0..n).filter(|&i| !present[i]).collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Parity of a permutation of `0..s`, by cycle decomposition.
pub fn perm_sign(p: &[usize]) -> Result<i8> {
    let s = p.len();
    let mut seen = vec![false; s];
    for &v in p {
        if v >= s || seen[v] {
            return Err(Error::InvalidPermutation(p.to_vec()));
        }
        seen[v] = true;
    }
    seen.iter_mut().for_each(|x| *x = false);
    let mut sign = 1i8;
    for start in 0..s {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    Ok(sign)
}

/// Sign of the permutation that sorts a tuple of distinct values; `None` on a repeat.
pub fn sequence_sign(seq: &[usize]) -> Option<i8> {
    let mut inversions = 0usize;
    for a in 0..seq.len() {
        for b in a + 1..seq.len() {
            match seq[a].cmp(&seq[b]) {
                std::cmp::Ordering::Greater => inversions += 1,
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
}

/// Generalized Kronecker symbol `delta^{upper}_{lower}` in dimension `n`.
///
/// Zero when either tuple repeats an index or the two tuples differ as sets,
/// otherwise the sign of the permutation carrying `lower` onto `upper`.
pub fn kronecker(upper: &[usize], lower: &[usize], n: usize) -> Result<i8> {
    if upper.len() != lower.len() {
        return Err(Error::InvalidIndex(format!(
            "Kronecker symbol needs equal-length index lists, got {} and {}",
            upper.len(),
            lower.len()
        )));
    }
    if upper.len() > n {
        return Err(Error::InvalidIndex(format!("order {} exceeds dimension {n}", upper.len())));
    }
    if let Some(&bad) = upper.iter().chain(lower).find(|&&i| i >= n) {
        return Err(Error::InvalidIndex(format!("index {bad} out of range 0..{n}")));
    }
    Ok(kronecker_unchecked(upper, lower))
}

pub(crate) fn kronecker_unchecked(upper: &[usize], lower: &[usize]) -> i8 {
    let (Some(su), Some(sl)) = (sequence_sign(upper), sequence_sign(lower)) else {
        return 0;
    };
    let mut a = upper.to_vec();
    let mut b = lower.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return 0;
    }
    su * sl
}

/// All ordered `k`-tuples over `0..n` (repeats allowed).
pub fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    (0..k).map(|_| 0..n).multi_cartesian_product().collect()
}

/// All ordered `k`-tuples of distinct indices from `0..n`.
pub fn arrangements(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    (0..n).permutations(k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_sign_examples() {
        assert_eq!(perm_sign(&[0, 1, 2]).unwrap(), 1);
        assert_eq!(perm_sign(&[1, 0, 2]).unwrap(), -1);
        // (3,1,2) one-based has two inversions
        assert_eq!(perm_sign(&[2, 0, 1]).unwrap(), 1);
        assert_eq!(perm_sign(&[]).unwrap(), 1);
    }

    #[test]
    fn perm_sign_rejects_non_bijections() {
        assert!(matches!(perm_sign(&[0, 0, 1]), Err(Error::InvalidPermutation(_))));
        assert!(matches!(perm_sign(&[0, 3]), Err(Error::InvalidPermutation(_))));
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(&[0, 1], &[0, 1], 2).unwrap(), 1);
        assert_eq!(kronecker(&[0, 1], &[1, 0], 2).unwrap(), -1);
        assert_eq!(kronecker(&[0, 1], &[0, 2], 3).unwrap(), 0);
        assert_eq!(kronecker(&[0, 0], &[0, 0], 3).unwrap(), 0);
        assert_eq!(kronecker(&[], &[], 3).unwrap(), 1);
    }

    #[test]
    fn kronecker_errors() {
        assert!(kronecker(&[0, 1, 2], &[0, 1, 2], 2).is_err());
        assert!(kronecker(&[0, 5], &[0, 1], 3).is_err());
        assert!(kronecker(&[0], &[0, 1], 3).is_err());
    }

    #[test]
    fn multi_index_invariants() {
        assert!(MultiIndex::new(vec![1, 0], 3).is_err());
        assert!(MultiIndex::new(vec![0, 3], 3).is_err());
        let j = MultiIndex::new(vec![0, 2], 4).unwrap();
        let c = j.complement();
        assert_eq!(c.indices(), &[1, 3]);
        let mut union: Vec<usize> = j.iter().chain(c.iter()).copied().collect();
        union.sort_unstable();
        assert_eq!(union, vec![0, 1, 2, 3]);
    }

    #[test]
    fn rank_matches_enumeration_order() {
        for n in 0..7 {
            for r in 0..=n {
                for (pos, set) in MultiIndex::all(n, r).enumerate() {
                    assert_eq!(set.rank(), pos, "n={n} r={r} set={set:?}");
                }
                assert_eq!(MultiIndex::all(n, r).count(), binomial(n, r));
            }
        }
    }

    #[test]
    fn sorted_reports_sign() {
        let (set, sign) = MultiIndex::sorted(&[2, 0, 1], 3).unwrap();
        assert_eq!(set.indices(), &[0, 1, 2]);
        assert_eq!(sign, 1);
        let (_, sign) = MultiIndex::sorted(&[1, 0], 3).unwrap();
        assert_eq!(sign, -1);
        assert!(MultiIndex::sorted(&[1, 1], 3).is_err());
    }

    #[test]
    fn tuple_counts() {
        assert_eq!(tuples(3, 2).len(), 9);
        assert_eq!(tuples(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(arrangements(4, 2).len(), 12);
        assert_eq!(arrangements(4, 0).len(), 1);
    }
}
