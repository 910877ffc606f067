//! Sparse symmetric and antisymmetric tensors over the adjoint index space.
//!
//! Keys are canonical 0-based tuples: nondecreasing for [`SymTensor`],
//! strictly increasing for [`AltTensor`]. Entries with magnitude at or below
//! [`DROP_TOL`] are never stored. Files and the CLI shift to 1-based labels.

use std::collections::BTreeMap;

use crate::combinat::{self, Index};
use crate::error::{check_budget, LieError, Result};

pub const DROP_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct SymTensor {
    order: usize,
    dim: usize,
    entries: BTreeMap<Index, f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AltTensor {
    order: usize,
    dim: usize,
    entries: BTreeMap<Index, f64>,
}

fn to_key(idx: &[usize], dim: usize) -> Index {
    idx.iter()
        .map(|&i| {
            assert!(i < dim, "index {i} out of range for dimension {dim}");
            i as u8
        })
        .collect()
}

impl SymTensor {
    pub fn zeros(order: usize, dim: usize) -> Self {
        assert!(dim <= 255, "dimension above 255 is not supported");
        SymTensor { order, dim, entries: BTreeMap::new() }
    }

    /// The unit metric as an order-2 tensor.
    pub fn delta(dim: usize) -> Self {
        let mut t = SymTensor::zeros(2, dim);
        for i in 0..dim {
            t.entries.insert([i as u8, i as u8].into_iter().collect(), 1.0);
        }
        t
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry at any ordering of `idx` (0-based).
    pub fn get(&self, idx: &[usize]) -> f64 {
        let mut k = to_key(idx, self.dim);
        k.sort_unstable();
        self.entries.get(&k).copied().unwrap_or(0.0)
    }

    /// Entry at an already sorted key.
    pub fn get_sorted(&self, key: &[u8]) -> f64 {
        self.entries.get(key).copied().unwrap_or(0.0)
    }

    /// Store `v` at the canonical position of `idx`; small values erase.
    pub fn set(&mut self, idx: &[usize], v: f64) {
        assert_eq!(idx.len(), self.order);
        let mut k = to_key(idx, self.dim);
        k.sort_unstable();
        self.set_sorted(k, v);
    }

    pub fn set_sorted(&mut self, key: Index, v: f64) {
        debug_assert!(key.windows(2).all(|w| w[0] <= w[1]));
        if v.abs() > DROP_TOL {
            self.entries.insert(key, v);
        } else {
            self.entries.remove(&key);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[u8], f64)> + '_ {
        self.entries.iter().map(|(k, v)| (k.as_slice(), *v))
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.values().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn scaled(&self, c: f64) -> Self {
        let mut out = SymTensor::zeros(self.order, self.dim);
        for (k, v) in &self.entries {
            out.set_sorted(k.clone(), v * c);
        }
        out
    }

    /// `sum_j c_j * t_j` over tensors of one shape.
    pub fn lin_comb(terms: &[(f64, &SymTensor)]) -> Result<Self> {
        let first = terms.first().ok_or_else(|| LieError::Shape("empty combination".into()))?.1;
        let mut acc: BTreeMap<Index, f64> = BTreeMap::new();
        for (c, t) in terms {
            if t.order != first.order || t.dim != first.dim {
                return Err(LieError::Shape("terms of different order or dimension".into()));
            }
            for (k, v) in &t.entries {
                *acc.entry(k.clone()).or_insert(0.0) += c * v;
            }
        }
        let mut out = SymTensor::zeros(first.order, first.dim);
        for (k, v) in acc {
            out.set_sorted(k, v);
        }
        Ok(out)
    }

    /// Largest entrywise difference over the union of both supports.
    pub fn max_abs_diff(&self, other: &SymTensor) -> f64 {
        max_diff(&self.entries, &other.entries)
    }

    /// Full contraction with itself over all `dim^order` ordered tuples.
    pub fn full_norm_sq(&self) -> f64 {
        self.entries.iter().map(|(k, v)| combinat::multinomial(k) * v * v).sum()
    }

    pub fn to_dense(&self) -> Result<DenseSym> {
        let mut d = DenseSym::zeros(self.order, self.dim)?;
        for (k, v) in &self.entries {
            d.data[combinat::multiset_rank(k)] = *v;
        }
        Ok(d)
    }

    pub(crate) fn insert_raw(&mut self, key: Index, v: f64) {
        self.entries.insert(key, v);
    }
}

impl AltTensor {
    pub fn zeros(order: usize, dim: usize) -> Self {
        assert!(dim <= 255, "dimension above 255 is not supported");
        AltTensor { order, dim, entries: BTreeMap::new() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry at any ordering of `idx` (0-based), with the permutation sign.
    pub fn get(&self, idx: &[usize]) -> f64 {
        let mut k = to_key(idx, self.dim);
        let s = combinat::sort_sign(&mut k);
        if s == 0 {
            return 0.0;
        }
        s as f64 * self.entries.get(&k).copied().unwrap_or(0.0)
    }

    pub fn get_sorted(&self, key: &[u8]) -> f64 {
        self.entries.get(key).copied().unwrap_or(0.0)
    }

    /// Store `v` at `idx`, i.e. `sign * v` at the sorted key. Repeated
    /// indices are rejected.
    pub fn set(&mut self, idx: &[usize], v: f64) {
        assert_eq!(idx.len(), self.order);
        let mut k = to_key(idx, self.dim);
        let s = combinat::sort_sign(&mut k);
        assert!(s != 0, "antisymmetric tensor cannot hold a repeated index");
        self.set_sorted(k, s as f64 * v);
    }

    pub fn set_sorted(&mut self, key: Index, v: f64) {
        debug_assert!(key.windows(2).all(|w| w[0] < w[1]));
        if v.abs() > DROP_TOL {
            self.entries.insert(key, v);
        } else {
            self.entries.remove(&key);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[u8], f64)> + '_ {
        self.entries.iter().map(|(k, v)| (k.as_slice(), *v))
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.values().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn scaled(&self, c: f64) -> Self {
        let mut out = AltTensor::zeros(self.order, self.dim);
        for (k, v) in &self.entries {
            out.set_sorted(k.clone(), v * c);
        }
        out
    }

    pub fn max_abs_diff(&self, other: &AltTensor) -> f64 {
        max_diff(&self.entries, &other.entries)
    }

    pub fn to_dense(&self) -> Result<DenseAlt> {
        let mut d = DenseAlt::zeros(self.order, self.dim)?;
        for (k, v) in &self.entries {
            d.data[combinat::strict_rank(k)] = *v;
        }
        Ok(d)
    }
}

fn max_diff(a: &BTreeMap<Index, f64>, b: &BTreeMap<Index, f64>) -> f64 {
    let mut m: f64 = 0.0;
    for (k, v) in a {
        m = m.max((v - b.get(k).copied().unwrap_or(0.0)).abs());
    }
    for (k, v) in b {
        if !a.contains_key(k) {
            m = m.max(v.abs());
        }
    }
    m
}

/// Symmetric tensor stored densely by colex rank of its canonical keys.
#[derive(Clone, Debug)]
pub struct DenseSym {
    pub order: usize,
    pub dim: usize,
    pub data: Vec<f64>,
}

impl DenseSym {
    pub fn zeros(order: usize, dim: usize) -> Result<Self> {
        let n = combinat::multiset_count(dim, order);
        check_budget(|| format!("symmetric order-{order} tensor over dimension {dim}"), n)?;
        Ok(DenseSym { order, dim, data: vec![0.0; n as usize] })
    }

    #[inline]
    pub fn at_sorted(&self, key: &[u8]) -> f64 {
        self.data[combinat::multiset_rank(key)]
    }

    /// Lookup at an arbitrary ordering; sorts a small copy.
    #[inline]
    pub fn at(&self, idx: &[u8]) -> f64 {
        let mut k: Index = idx.into();
        k.sort_unstable();
        self.at_sorted(&k)
    }

    pub fn to_sparse(&self) -> SymTensor {
        let mut t = SymTensor::zeros(self.order, self.dim);
        for key in combinat::multisets(self.dim, self.order) {
            let v = self.data[combinat::multiset_rank(&key)];
            if v.abs() > DROP_TOL {
                t.insert_raw(key, v);
            }
        }
        t
    }
}

/// Antisymmetric tensor stored densely by colex rank of increasing keys.
#[derive(Clone, Debug)]
pub struct DenseAlt {
    pub order: usize,
    pub dim: usize,
    pub data: Vec<f64>,
}

impl DenseAlt {
    pub fn zeros(order: usize, dim: usize) -> Result<Self> {
        let n = combinat::strict_count(dim, order);
        check_budget(|| format!("antisymmetric order-{order} tensor over dimension {dim}"), n)?;
        Ok(DenseAlt { order, dim, data: vec![0.0; n as usize] })
    }

    #[inline]
    pub fn at_sorted(&self, key: &[u8]) -> f64 {
        self.data[combinat::strict_rank(key)]
    }

    /// Signed lookup at an arbitrary ordering.
    #[inline]
    pub fn at(&self, idx: &[u8]) -> f64 {
        let mut k: Index = idx.into();
        let s = combinat::sort_sign(&mut k);
        if s == 0 {
            0.0
        } else {
            s as f64 * self.at_sorted(&k)
        }
    }

    pub fn to_sparse(&self) -> AltTensor {
        let mut t = AltTensor::zeros(self.order, self.dim);
        if self.order > self.dim {
            return t;
        }
        for key in combinat::strict_tuples(self.dim, self.order) {
            let v = self.data[combinat::strict_rank(&key)];
            if v.abs() > DROP_TOL {
                t.entries.insert(key, v);
            }
        }
        t
    }
}

/// Collects words of free indices and turns their sum into a unit-weight
/// symmetrization: each canonical entry is divided by the number of its
/// distinct arrangements when finished.
pub struct SymAccumulator {
    dense: DenseSym,
}

impl SymAccumulator {
    pub fn new(order: usize, dim: usize) -> Result<Self> {
        Ok(SymAccumulator { dense: DenseSym::zeros(order, dim)? })
    }

    /// Add `value` for the word `word` (any order; sorted in place).
    #[inline]
    pub fn emit(&mut self, word: &mut [u8], value: f64) {
        word.sort_unstable();
        self.dense.data[combinat::multiset_rank(word)] += value;
    }

    pub fn finish(mut self) -> SymTensor {
        for key in combinat::multisets(self.dense.dim, self.dense.order) {
            let r = combinat::multiset_rank(&key);
            if self.dense.data[r] != 0.0 {
                self.dense.data[r] /= combinat::multinomial(&key);
            }
        }
        self.dense.to_sparse()
    }
}
