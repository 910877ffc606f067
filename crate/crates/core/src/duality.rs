//! Hodge star, wedge and scalar product on antisymmetric tensors over the
//! r-dimensional index space with unit metric.

use crate::cocycles::proportionality_alt;
use crate::combinat::Index;
use crate::error::{LieError, Result};
use crate::report::IdentityReport;
use crate::tensor::AltTensor;

/// Sign of the permutation taking (I, J) to increasing order, for disjoint
/// increasing I and J.
fn merge_sign(i: &[u8], j: &[u8]) -> (f64, Index) {
    let mut out = Index::with_capacity(i.len() + j.len());
    let (mut a, mut b, mut inv) = (0, 0, 0usize);
    while a < i.len() || b < j.len() {
        if b == j.len() || (a < i.len() && i[a] < j[b]) {
            out.push(i[a]);
            a += 1;
        } else {
            // j[b] jumps over the i's not yet placed
            inv += i.len() - a;
            out.push(j[b]);
            b += 1;
        }
    }
    (if inv % 2 == 0 { 1.0 } else { -1.0 }, out)
}

/// (*a)_J = sgn(I, J) a_I with J the complement of I in 0..r.
pub fn hodge_dual(a: &AltTensor) -> AltTensor {
    let r = a.dim();
    let mut out = AltTensor::zeros(r - a.order(), r);
    for (i, v) in a.iter() {
        let j: Index = (0..r as u8).filter(|x| !i.contains(x)).collect();
        let (s, _) = merge_sign(i, &j);
        out.set_sorted(j, s * v);
    }
    out
}

/// (a ^ b)_K = sum over splits K = I u J of sgn(I, J) a_I b_J.
pub fn wedge(a: &AltTensor, b: &AltTensor) -> Result<AltTensor> {
    if a.dim() != b.dim() {
        return Err(LieError::Shape("wedge of tensors over different dimensions".into()));
    }
    let r = a.dim();
    let q = a.order() + b.order();
    let mut acc: std::collections::BTreeMap<Index, f64> = std::collections::BTreeMap::new();
    if q <= r {
        for (i, av) in a.iter() {
            for (j, bv) in b.iter() {
                if j.iter().any(|x| i.contains(x)) {
                    continue;
                }
                let (s, k) = merge_sign(i, j);
                *acc.entry(k).or_insert(0.0) += s * av * bv;
            }
        }
    }
    let mut out = AltTensor::zeros(q, r);
    for (k, v) in acc {
        out.set_sorted(k, v);
    }
    Ok(out)
}

/// <a, b> = sum over increasing tuples of a_I b_I.
pub fn inner(a: &AltTensor, b: &AltTensor) -> Result<f64> {
    if a.order() != b.order() || a.dim() != b.dim() {
        return Err(LieError::Shape("inner product of tensors of different shape".into()));
    }
    Ok(a.iter().map(|(k, v)| v * b.get_sorted(k)).sum())
}

pub fn normalize_cocycle(a: &AltTensor) -> Result<AltTensor> {
    let n = inner(a, a)?;
    if n <= 0.0 {
        return Err(LieError::ZeroNorm);
    }
    Ok(a.scaled(1.0 / n.sqrt()))
}

/// For a complete primitive tower, check each normalized member against the
/// dual of the wedge of the others. Passing needs proportionality with
/// |constant| = 1; the constant and its sign are in the details.
pub fn check_duality(cocycles: &[AltTensor], algebra: &str, tol: f64) -> Result<Vec<IdentityReport>> {
    let first = cocycles.first().ok_or_else(|| LieError::Shape("empty tower".into()))?;
    let r = first.dim();
    let sum: usize = cocycles.iter().map(|c| c.order()).sum();
    if sum != r {
        return Err(LieError::IncompleteTower { sum, dim: r });
    }
    let normed: Vec<AltTensor> = cocycles.iter().map(normalize_cocycle).collect::<Result<_>>()?;
    let mut reports = Vec::new();
    if normed.len() == 1 {
        let top = &normed[0];
        let res = (top.max_abs() - 1.0).abs();
        reports.push(IdentityReport::new(
            format!("*Omega^({}) is the unit 0-form", top.order()),
            algebra,
            res,
            tol,
            format!("single component {:.12}", top.iter().next().map_or(0.0, |x| x.1)),
        ));
        return Ok(reports);
    }
    for (i, target) in normed.iter().enumerate() {
        let mut others = normed.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, t)| t);
        let mut w = others.next().unwrap().clone();
        for t in others {
            w = wedge(&w, t)?;
        }
        let dual = hodge_dual(&w);
        let name = format!("Omega^({}) = c *(wedge of the others)", target.order());
        match proportionality_alt(target, &dual) {
            Some((c, dev)) => {
                let res = dev.max((c.abs() - 1.0).abs());
                reports.push(IdentityReport::new(name, algebra, res, tol, format!("c = {c:.12}, proportionality residual {dev:.3e}")));
            }
            None => reports.push(IdentityReport::new(name, algebra, f64::INFINITY, tol, "dual of the wedge vanishes")),
        }
    }
    Ok(reports)
}
