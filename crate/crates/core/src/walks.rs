//! Traces of products of sparse matrices as sums over closed walks.
//!
//! Tr(M^{a_1} ... M^{a_m}) = sum over x_1..x_m of M^{a_1}_{x_1 x_2} ... M^{a_m}_{x_m x_1}.
//! Walking only along nonzero entries and emitting the label word of every
//! closed walk gives all traces at once, in time proportional to the number
//! of nonzero walks rather than r^m.

use std::ops::{AddAssign, Mul};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::algebra::CMat;

pub trait Scalar: Copy + Mul<Output = Self> + AddAssign + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
}

/// A labelled family of n x n matrices indexed by nonzero entries.
pub struct SparseFamily<T: Scalar> {
    n: usize,
    rows: Vec<Vec<(u8, u8, T)>>,
    closing: Vec<Vec<(u8, T)>>,
}

impl<T: Scalar> SparseFamily<T> {
    fn from_entries(n: usize, entries: impl Iterator<Item = (u8, usize, usize, T)>) -> Self {
        let mut rows = vec![Vec::new(); n];
        let mut closing = vec![Vec::new(); n * n];
        for (a, x, y, v) in entries {
            rows[x].push((a, y as u8, v));
            closing[x * n + y].push((a, v));
        }
        SparseFamily { n, rows, closing }
    }

    pub fn size(&self) -> usize {
        self.n
    }
}

impl SparseFamily<f64> {
    pub fn real(mats: &[DMatrix<f64>]) -> Self {
        let n = mats.first().map_or(0, |m| m.nrows());
        let entries = mats.iter().enumerate().flat_map(|(a, m)| {
            (0..n).flat_map(move |x| (0..n).map(move |y| (a as u8, x, y, m[(x, y)])))
        });
        Self::from_entries(n, entries.filter(|e| e.3 != 0.0))
    }
}

impl SparseFamily<Complex64> {
    pub fn complex(mats: &[CMat]) -> Self {
        let n = mats.first().map_or(0, |m| m.nrows());
        let entries = mats.iter().enumerate().flat_map(|(a, m)| {
            (0..n).flat_map(move |x| (0..n).map(move |y| (a as u8, x, y, m[(x, y)])))
        });
        Self::from_entries(n, entries.filter(|e| e.3.norm() != 0.0))
    }
}

/// Visit every closed walk whose i-th step uses `fams[i]`, calling
/// `emit(labels, product)`.
pub fn closed_walks<T: Scalar>(fams: &[&SparseFamily<T>], mut emit: impl FnMut(&[u8], T)) {
    let m = fams.len();
    if m == 0 {
        return;
    }
    let n = fams[0].n;
    let mut labels = vec![0u8; m];
    for start in 0..n {
        walk(fams, start, start, 0, T::one(), &mut labels, &mut emit);
    }
}

fn walk<T: Scalar>(
    fams: &[&SparseFamily<T>],
    start: usize,
    cur: usize,
    depth: usize,
    prod: T,
    labels: &mut [u8],
    emit: &mut impl FnMut(&[u8], T),
) {
    let fam = fams[depth];
    if depth + 1 == fams.len() {
        for &(a, v) in &fam.closing[cur * fam.n + start] {
            labels[depth] = a;
            emit(labels, prod * v);
        }
        return;
    }
    for &(a, y, v) in &fam.rows[cur] {
        labels[depth] = a;
        walk(fams, start, y as usize, depth + 1, prod * v, labels, emit);
    }
}

/// Closed walks of length m in a single family, one per rotation class:
/// only walks whose first label is the largest are visited and each is
/// emitted with weight m / (copies of that label). Summing the emitted
/// values by sorted word gives the same totals as [`closed_walks`] over all
/// walks, which is all a symmetrized trace needs.
pub fn closed_walks_sym<T: Scalar + Mul<f64, Output = T>>(fam: &SparseFamily<T>, m: usize, mut emit: impl FnMut(&[u8], T)) {
    if m == 0 {
        return;
    }
    let mut labels = vec![0u8; m];
    for start in 0..fam.n {
        for &(a, y, v) in &fam.rows[start] {
            labels[0] = a;
            if m == 1 {
                if y as usize == start {
                    emit(&labels, v);
                }
                continue;
            }
            capped(fam, start, y as usize, 1, m, a, v, &mut labels, &mut emit);
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn capped<T: Scalar + Mul<f64, Output = T>>(
    fam: &SparseFamily<T>,
    start: usize,
    cur: usize,
    depth: usize,
    m: usize,
    cap: u8,
    prod: T,
    labels: &mut [u8],
    emit: &mut impl FnMut(&[u8], T),
) {
    if depth + 1 == m {
        for &(a, v) in &fam.closing[cur * fam.n + start] {
            if a > cap {
                continue;
            }
            labels[depth] = a;
            let copies = labels.iter().filter(|&&l| l == cap).count();
            emit(labels, prod * v * (m as f64 / copies as f64));
        }
        return;
    }
    for &(a, y, v) in &fam.rows[cur] {
        if a > cap {
            continue;
        }
        labels[depth] = a;
        capped(fam, start, y as usize, depth + 1, m, cap, prod * v, labels, emit);
    }
}
