//! Ad-invariance residuals: max over nu and canonical tuples of
//! sum_s C_{nu i_s}^rho h_{i_1 .. rho .. i_m}.

use crate::combinat::{self, Index};
use crate::error::Result;
use crate::structure::Brackets;
use crate::tensor::{AltTensor, DenseAlt, DenseSym, SymTensor};

pub fn sym_invariance(h: &SymTensor, b: &Brackets) -> Result<f64> {
    let r = h.dim();
    let m = h.order();
    if h.is_empty() {
        return Ok(0.0);
    }
    let mut acc = DenseSym::zeros(m, r)?;
    let mut worst: f64 = 0.0;
    let mut touched: Vec<usize> = Vec::new();
    let mut word = Index::new();
    for nu in 0..r as u8 {
        for (k, hv) in h.iter() {
            for p in 0..m {
                if p > 0 && k[p] == k[p - 1] {
                    continue;
                }
                let rho = k[p];
                for &(i, c) in b.pair(rho, nu) {
                    word.clear();
                    word.extend_from_slice(k);
                    word[p] = i;
                    word.sort_unstable();
                    let mult = word.iter().filter(|&&w| w == i).count() as f64;
                    let rank = combinat::multiset_rank(&word);
                    if acc.data[rank] == 0.0 {
                        touched.push(rank);
                    }
                    acc.data[rank] += mult * c * hv;
                }
            }
        }
        for &t in &touched {
            worst = worst.max(acc.data[t].abs());
            acc.data[t] = 0.0;
        }
        touched.clear();
    }
    Ok(worst)
}

pub fn alt_invariance(t: &AltTensor, b: &Brackets) -> Result<f64> {
    let r = t.dim();
    let q = t.order();
    if t.is_empty() {
        return Ok(0.0);
    }
    let mut acc = DenseAlt::zeros(q, r)?;
    let mut worst: f64 = 0.0;
    let mut touched: Vec<usize> = Vec::new();
    let mut word = Index::new();
    for nu in 0..r as u8 {
        for (k, tv) in t.iter() {
            for p in 0..q {
                let rho = k[p];
                for &(i, c) in b.pair(rho, nu) {
                    word.clear();
                    word.extend_from_slice(k);
                    word[p] = i;
                    let s = combinat::sort_sign(&mut word);
                    if s == 0 {
                        continue;
                    }
                    let rank = combinat::strict_rank(&word);
                    if acc.data[rank] == 0.0 {
                        touched.push(rank);
                    }
                    acc.data[rank] += s as f64 * c * tv;
                }
            }
        }
        for &x in &touched {
            worst = worst.max(acc.data[x].abs());
            acc.data[x] = 0.0;
        }
        touched.clear();
    }
    Ok(worst)
}
