#![allow(dead_code)]

pub mod tables;

use lieinv::{AltTensor, SymTensor};

pub fn radical(a: i64, b: i64, c: i64) -> f64 {
    a as f64 * (b as f64).sqrt() / c as f64
}

/// Max deviation between a tensor and a table, plus the number of tensor
/// entries missing from the table.
pub fn compare_alt(t: &AltTensor, table: &[(&[usize], i64, i64, i64)]) -> (f64, usize) {
    let mut worst: f64 = 0.0;
    let mut listed = std::collections::BTreeSet::new();
    for (idx, a, b, c) in table {
        let zero_based: Vec<usize> = idx.iter().map(|i| i - 1).collect();
        worst = worst.max((t.get(&zero_based) - radical(*a, *b, *c)).abs());
        let mut k = zero_based.clone();
        k.sort_unstable();
        listed.insert(k);
    }
    let extra = t
        .iter()
        .filter(|(k, v)| v.abs() > 1e-12 && !listed.contains(&k.iter().map(|&i| i as usize).collect::<Vec<_>>()))
        .count();
    (worst, extra)
}

pub fn compare_sym(t: &SymTensor, table: &[(&[usize], i64, i64, i64)]) -> (f64, usize) {
    let mut worst: f64 = 0.0;
    let mut listed = std::collections::BTreeSet::new();
    for (idx, a, b, c) in table {
        let zero_based: Vec<usize> = idx.iter().map(|i| i - 1).collect();
        worst = worst.max((t.get(&zero_based) - radical(*a, *b, *c)).abs());
        let mut k = zero_based.clone();
        k.sort_unstable();
        listed.insert(k);
    }
    let extra = t
        .iter()
        .filter(|(k, v)| v.abs() > 1e-12 && !listed.contains(&k.iter().map(|&i| i as usize).collect::<Vec<_>>()))
        .count();
    (worst, extra)
}
