//! Counting, ranking and enumeration of canonical multi-indices.
//!
//! Nondecreasing tuples index symmetric tensors, strictly increasing tuples
//! index antisymmetric ones. Both are ranked in colexicographic order so a
//! dense `Vec<f64>` can stand in for a map in the hot loops.

use smallvec::SmallVec;
use std::sync::OnceLock;

/// A multi-index with 0-based entries.
pub type Index = SmallVec<[u8; 16]>;

const TABLE: usize = 160;

fn table() -> &'static [Vec<u64>] {
    static T: OnceLock<Vec<Vec<u64>>> = OnceLock::new();
    T.get_or_init(|| {
        let mut t = vec![vec![0u64; TABLE]; TABLE];
        for n in 0..TABLE {
            t[n][0] = 1;
            for k in 1..=n {
                t[n][k] = t[n - 1][k - 1].saturating_add(t[n - 1][k]);
            }
        }
        t
    })
}

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    if n < TABLE {
        return table()[n][k];
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Number of nondecreasing `m`-tuples over `0..r`.
pub fn multiset_count(r: usize, m: usize) -> u64 {
    if m == 0 {
        return 1;
    }
    if r == 0 {
        return 0;
    }
    binom(r + m - 1, m)
}

/// Number of strictly increasing `q`-tuples over `0..r`.
pub fn strict_count(r: usize, q: usize) -> u64 {
    binom(r, q)
}

/// Colex rank of a nondecreasing tuple.
#[inline]
pub fn multiset_rank(idx: &[u8]) -> usize {
    let t = table();
    let mut rank = 0u64;
    for (k, &a) in idx.iter().enumerate() {
        rank += t[a as usize + k][k + 1];
    }
    rank as usize
}

/// Colex rank of a strictly increasing tuple.
#[inline]
pub fn strict_rank(idx: &[u8]) -> usize {
    let t = table();
    let mut rank = 0u64;
    for (k, &a) in idx.iter().enumerate() {
        rank += t[a as usize][k + 1];
    }
    rank as usize
}

/// Advance a nondecreasing tuple to its lexicographic successor.
pub fn next_multiset(idx: &mut [u8], r: usize) -> bool {
    let top = (r - 1) as u8;
    let Some(i) = idx.iter().rposition(|&a| a < top) else {
        return false;
    };
    let v = idx[i] + 1;
    for a in &mut idx[i..] {
        *a = v;
    }
    true
}

/// Advance a strictly increasing tuple to its lexicographic successor.
pub fn next_strict(idx: &mut [u8], r: usize) -> bool {
    let q = idx.len();
    let Some(i) = (0..q).rev().find(|&i| (idx[i] as usize) < r - (q - i)) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..q {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

/// All nondecreasing `m`-tuples over `0..r` in lexicographic order.
pub fn multisets(r: usize, m: usize) -> impl Iterator<Item = Index> {
    let mut cur: Option<Index> = if r == 0 && m > 0 { None } else { Some(SmallVec::from_elem(0, m)) };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        cur = if m > 0 && next_multiset(&mut next, r) { Some(next) } else { None };
        Some(out)
    })
}

/// All strictly increasing `q`-tuples over `0..r` in lexicographic order.
pub fn strict_tuples(r: usize, q: usize) -> impl Iterator<Item = Index> {
    let mut cur: Option<Index> = if q > r { None } else { Some((0..q as u8).collect()) };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        cur = if q > 0 && next_strict(&mut next, r) { Some(next) } else { None };
        Some(out)
    })
}

/// Sort in place and return the sign of the sorting permutation, or 0 when
/// two entries coincide.
#[inline]
pub fn sort_sign(idx: &mut [u8]) -> i32 {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && idx[j - 1] == idx[j] {
            sign = 0;
        }
    }
    sign
}

/// Sign of the permutation that sorts `idx` (0 on repeats). Does not modify it.
pub fn perm_sign(idx: &[u8]) -> i32 {
    let mut v: Index = idx.into();
    sort_sign(&mut v)
}

pub fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |a, k| a * k as f64)
}

/// Number of distinct arrangements of a sorted multiset: m!/prod(mult!).
#[inline]
pub fn multinomial(sorted: &[u8]) -> f64 {
    let mut out = 1.0;
    let mut run = 1usize;
    let mut pos = 1usize;
    for i in 1..sorted.len() {
        pos += 1;
        if sorted[i] == sorted[i - 1] {
            run += 1;
            out *= pos as f64 / run as f64;
        } else {
            run = 1;
            out *= pos as f64;
        }
    }
    out
}

/// Product of factorials of the multiplicities of a sorted multiset.
pub fn mult_factorials(sorted: &[u8]) -> f64 {
    let mut out = 1.0;
    let mut run = 1usize;
    for i in 1..sorted.len() {
        if sorted[i] == sorted[i - 1] {
            run += 1;
            out *= run as f64;
        } else {
            run = 1;
        }
    }
    out
}

/// A perfect matching of positions `0..2k`: pairs `(a, b)` with `a < b`,
/// listed by increasing first element, plus the sign of the permutation
/// `(a1 b1 a2 b2 ...)`.
#[derive(Clone, Debug)]
pub struct Matching {
    pub sign: i32,
    pub pairs: Vec<(u8, u8)>,
}

/// All perfect matchings of `0..n` (`n` even).
pub fn matchings(n: usize) -> Vec<Matching> {
    assert!(n % 2 == 0, "matchings need an even count");
    let mut out = Vec::new();
    let mut pairs = Vec::with_capacity(n / 2);
    let mut used = vec![false; n];
    fn rec(n: usize, used: &mut [bool], pairs: &mut Vec<(u8, u8)>, out: &mut Vec<Matching>) {
        let Some(a) = used.iter().position(|u| !u) else {
            let word: Index = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
            out.push(Matching { sign: perm_sign(&word), pairs: pairs.clone() });
            return;
        };
        used[a] = true;
        for b in a + 1..n {
            if used[b] {
                continue;
            }
            used[b] = true;
            pairs.push((a as u8, b as u8));
            rec(n, used, pairs, out);
            pairs.pop();
            used[b] = false;
        }
        used[a] = false;
    }
    rec(n, &mut used, &mut pairs, &mut out);
    out
}

/// Integer partitions of `n` as multiplicity vectors: `nu[k]` counts parts
/// equal to `k` (index 0 unused). With `even_only`, only even parts appear.
pub fn partitions(n: usize, even_only: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut nu = vec![0usize; n + 1];
    fn rec(rest: usize, max: usize, even: bool, nu: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(nu.clone());
            return;
        }
        for k in (1..=max.min(rest)).rev() {
            if even && k % 2 == 1 {
                continue;
            }
            nu[k] += 1;
            rec(rest - k, k, even, nu, out);
            nu[k] -= 1;
        }
    }
    rec(n, n, even_only, &mut nu, &mut out);
    out
}

/// Split a sorted multiset into (distinct values, multiplicities).
pub fn runs(sorted: &[u8]) -> (Index, SmallVec<[u8; 16]>) {
    let mut vals = Index::new();
    let mut mult = SmallVec::new();
    for &a in sorted {
        if vals.last() == Some(&a) {
            *mult.last_mut().unwrap() += 1;
        } else {
            vals.push(a);
            mult.push(1);
        }
    }
    (vals, mult)
}

/// Every distinct sub-multiset of size `l` of a sorted multiset, together
/// with its complement. Both halves come out sorted.
pub fn sub_multisets(sorted: &[u8], l: usize) -> Vec<(Index, Index)> {
    let (vals, mult) = runs(sorted);
    let mut out = Vec::new();
    let mut take = vec![0u8; vals.len()];
    fn rec(
        i: usize,
        left: usize,
        vals: &[u8],
        mult: &[u8],
        take: &mut [u8],
        out: &mut Vec<(Index, Index)>,
    ) {
        if i == vals.len() {
            if left == 0 {
                let mut a = Index::new();
                let mut b = Index::new();
                for (j, &v) in vals.iter().enumerate() {
                    a.extend(std::iter::repeat_n(v, take[j] as usize));
                    b.extend(std::iter::repeat_n(v, (mult[j] - take[j]) as usize));
                }
                out.push((a, b));
            }
            return;
        }
        for t in 0..=(mult[i] as usize).min(left) {
            take[i] = t as u8;
            rec(i + 1, left - t, vals, mult, take, out);
        }
        take[i] = 0;
    }
    rec(0, l, &vals, &mult, &mut take, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_are_dense_and_ordered() {
        for (r, m) in [(4, 3), (5, 2), (3, 4)] {
            let mut seen = vec![false; multiset_count(r, m) as usize];
            for idx in multisets(r, m) {
                let k = multiset_rank(&idx);
                assert!(!seen[k]);
                seen[k] = true;
            }
            assert!(seen.iter().all(|&s| s));
        }
        for (r, q) in [(6, 3), (5, 5), (7, 1)] {
            let mut seen = vec![false; strict_count(r, q) as usize];
            for idx in strict_tuples(r, q) {
                seen[strict_rank(&idx)] = true;
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn matching_counts_and_signs() {
        assert_eq!(matchings(2).len(), 1);
        assert_eq!(matchings(4).len(), 3);
        assert_eq!(matchings(6).len(), 15);
        let m4 = matchings(4);
        // (01)(23) even, (02)(13) odd, (03)(12) even
        let signs: Vec<i32> = m4.iter().map(|m| m.sign).collect();
        assert_eq!(signs, vec![1, -1, 1]);
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(4, false).len(), 5);
        assert_eq!(partitions(6, true).len(), 3);
        assert_eq!(partitions(8, true).len(), 5);
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[0, 0, 1]), 3.0);
        assert_eq!(multinomial(&[2, 2, 2, 2]), 1.0);
        assert_eq!(multinomial(&[0, 1, 2, 3]), 24.0);
        assert_eq!(multinomial(&[0, 0, 1, 1]), 6.0);
        assert_eq!(mult_factorials(&[0, 0, 1, 1, 1]), 12.0);
    }

    #[test]
    fn sub_multiset_split() {
        let s = sub_multisets(&[0, 0, 1, 2], 2);
        assert_eq!(s.len(), 4);
    }
}
