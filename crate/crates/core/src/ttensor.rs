//! The t-family of symmetric invariants obtained from cocycles, the scalars
//! K^(m), orthogonality, and Casimir operators as concrete matrices.

use std::collections::HashMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{build_algebra, AlgebraSpec, CMat, Convention, GeneratorSet};
use crate::cocycles::{cocycle_from_sym, matchings_rec, proportionality_sym};
use crate::combinat::{self, Index};
use crate::error::{check_budget, LieError, Result};
use crate::invariants::{d_family, expand_in, sym_product, tower_tensor};
use crate::report::IdentityReport;
use crate::structure::{adjoint_rep, d_tensor, structure_constants, Brackets};
use crate::tensor::{AltTensor, SymTensor};

const T_TOL: f64 = 1e-9;

/// t^{i1..im} = Omega^{j1..j_{2m-2} i_m} C^{i1}_{j1 j2} .. C^{i_{m-1}}_{j_{2m-3} j_{2m-2}}.
/// Symmetry in all m slots and, for m > 2, tracelessness are verified.
pub fn t_tensor(cocycle: &AltTensor, f: &AltTensor) -> Result<SymTensor> {
    let c = t_tensor_unchecked(cocycle, f)?;
    if c.symmetry > T_TOL {
        return Err(LieError::Construction(format!("t-tensor is not symmetric (relative residual {:.3e})", c.symmetry)));
    }
    if c.t.order() > 2 && c.trace > T_TOL {
        return Err(LieError::Construction(format!("t-tensor is not traceless (relative residual {:.3e})", c.trace)));
    }
    Ok(c.t)
}

/// A t-tensor with its residuals, both relative to max(1, max|t|).
#[derive(Clone, Debug)]
pub struct TWithResiduals {
    pub t: SymTensor,
    /// Largest disagreement between the m ways of choosing the free slot
    /// that is contracted with the cocycle directly.
    pub symmetry: f64,
    /// [`trace_residual`] of t.
    pub trace: f64,
}

/// [`t_tensor`] without the pass/fail verdict.
pub fn t_tensor_unchecked(cocycle: &AltTensor, f: &AltTensor) -> Result<TWithResiduals> {
    let q = cocycle.order();
    if q < 3 || q % 2 == 0 {
        return Err(LieError::OrderOutOfRange { op: "t_tensor", order: q, range: "odd >= 3" });
    }
    if cocycle.dim() != f.dim() {
        return Err(LieError::Shape("cocycle and f live on different index spaces".into()));
    }
    let m = (q + 1) / 2;
    let r = f.dim();
    if cocycle.is_empty() {
        return Ok(TWithResiduals { t: SymTensor::zeros(m, r), symmetry: 0.0, trace: 0.0 });
    }
    let rows = combinat::multiset_count(r, m - 1);
    check_budget(|| format!("order-{m} t-tensor over dimension {r}"), rows.saturating_mul(r as u64))?;
    let b = Brackets::new(f);
    let mut acc = vec![0.0; rows as usize * r];
    let pair_factor = 2f64.powi(m as i32 - 1);
    let mut labels = Index::new();
    let mut rest = Index::with_capacity(q);
    for (key, w) in cocycle.iter() {
        for p in 0..q {
            let e = key[p] as usize;
            let sign = if (q - 1 - p) % 2 == 0 { 1.0 } else { -1.0 };
            rest.clear();
            rest.extend_from_slice(&key[..p]);
            rest.extend_from_slice(&key[p + 1..]);
            labels.clear();
            matchings_rec(&b, &rest, &mut labels, sign * w * pair_factor, &mut |ls, v| {
                let mut k: Index = Index::from_slice(ls);
                k.sort_unstable();
                acc[combinat::multiset_rank(&k) * r + e] += v * combinat::mult_factorials(&k);
            });
        }
    }
    let mut t = SymTensor::zeros(m, r);
    let mut spread: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for key in combinat::multisets(r, m) {
        let mut last = 0.0;
        let mut first: Option<f64> = None;
        for p in 0..m {
            if p > 0 && key[p] == key[p - 1] {
                continue;
            }
            let mut k = key.clone();
            let e = k.remove(p) as usize;
            let v = acc[combinat::multiset_rank(&k) * r + e];
            match first {
                None => first = Some(v),
                Some(f0) => spread = spread.max((v - f0).abs()),
            }
            last = v;
        }
        scale = scale.max(last.abs());
        t.set_sorted(key, last);
    }
    let scale = scale.max(1.0);
    let trace = trace_residual(&t) / scale;
    Ok(TWithResiduals { t, symmetry: spread / scale, trace })
}

/// max over J of |sum_s t_{s s J}|.
pub fn trace_residual(t: &SymTensor) -> f64 {
    let mut tr: HashMap<Index, f64> = HashMap::new();
    for (key, v) in t.iter() {
        for p in 1..key.len() {
            if key[p] == key[p - 1] && (p < 2 || key[p - 2] != key[p]) {
                let mut j: Index = Index::from_slice(key);
                j.remove(p);
                j.remove(p - 1);
                *tr.entry(j).or_insert(0.0) += v;
            }
        }
    }
    tr.values().fold(0.0, |m, v| m.max(v.abs()))
}

/// K = t^{i1..im} t_{i1..im} over all ordered tuples.
pub fn k_scalar(t: &SymTensor) -> f64 {
    t.full_norm_sq()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum ClosedForm {
    /// |K^(m)(n)| in closed form.
    Value(f64),
    /// Nonzero with an undetermined overall constant.
    NonzeroUnknown,
}

/// Closed forms of |K^(m)(n)| for su(n), m = 2..5.
pub fn closed_form_k(m: usize, n: usize) -> Option<ClosedForm> {
    let x = n as f64;
    let x2 = x * x;
    match m {
        2 => Some(ClosedForm::Value(x2 * (x2 - 1.0))),
        3 => Some(ClosedForm::Value(x2 * x * (x2 - 1.0) * (x2 - 4.0) / 144.0)),
        4 => Some(ClosedForm::Value(
            (1.0 / 14400.0) * (2.0 / 3.0) * x2 * (x2 + 1.0) * (x2 - 1.0) * (x2 - 4.0) * (x2 - 9.0),
        )),
        5 if n <= 4 => Some(ClosedForm::Value(0.0)),
        5 => Some(ClosedForm::NonzeroUnknown),
        _ => None,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScalarReport {
    pub algebra: String,
    pub m: usize,
    pub k_value: f64,
    pub closed_form_value: Option<f64>,
    pub matched: bool,
}

/// Compare |K| with the closed form at relative tolerance `rel` (absolute
/// when the closed form is zero).
pub fn scalar_report(algebra: &str, m: usize, n: usize, k: f64, rel: f64) -> ScalarReport {
    let cf = closed_form_k(m, n);
    let (closed, matched) = match cf {
        Some(ClosedForm::Value(v)) => {
            let ok = if v == 0.0 { k.abs() < rel } else { ((k.abs() - v) / v).abs() < rel };
            (Some(v), ok)
        }
        Some(ClosedForm::NonzeroUnknown) => (None, k.abs() > rel),
        None => (None, true),
    };
    ScalarReport { algebra: algebra.to_string(), m, k_value: k, closed_form_value: closed, matched }
}

/// For l < m: R_J = t_l^{I} t_m^{I J}. Returns the max |R| over all pairs,
/// each tensor scaled to unit max entry first.
pub fn orthogonality_check(ts: &[&SymTensor]) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for (a, tl) in ts.iter().enumerate() {
        for tm in ts.iter().skip(a + 1) {
            let (tl, tm) = if tl.order() <= tm.order() { (tl, tm) } else { (tm, tl) };
            if tl.dim() != tm.dim() {
                return Err(LieError::Shape("t-tensors over different dimensions".into()));
            }
            if tl.order() == tm.order() {
                continue;
            }
            let scale = tl.max_abs() * tm.max_abs();
            if scale > 0.0 {
                worst = worst.max(partial_contraction(tl, tm) / scale);
            }
        }
    }
    Ok(worst)
}

fn partial_contraction(tl: &SymTensor, tm: &SymTensor) -> f64 {
    let l = tl.order();
    let mut acc: HashMap<Index, f64> = HashMap::new();
    for (key, v) in tm.iter() {
        for (k, j) in combinat::sub_multisets(key, l) {
            let a = tl.get_sorted(&k);
            if a != 0.0 {
                *acc.entry(j).or_insert(0.0) += combinat::multinomial(&k) * a * v;
            }
        }
    }
    acc.values().fold(0.0, |m, v| m.max(v.abs()))
}

/// The canonical su(n) t-tower: t^(m) from the cocycle of the symmetric
/// trace k^(m) (the metric for m = 2).
pub fn su_t_tensor(g: &GeneratorSet, f: &AltTensor, m: usize) -> Result<SymTensor> {
    let h = tower_tensor(g, m)?;
    let omega = cocycle_from_sym(f, &h)?;
    t_tensor(&omega, f)
}

/// Checks of t^(4) and t^(5) for su(n) against their expansions in the
/// d-family: t^(4) = (1/120)[n(n^2+1) d^(4) - 2(n^2-4) delta delta], and
/// t^(5) on the ray n(n^2+5) d^(5) - 2(3n^2-20) d delta.
pub fn t_explicit_check(n: usize, tol: f64) -> Result<Vec<IdentityReport>> {
    if !(3..=6).contains(&n) {
        return Err(LieError::OrderOutOfRange { op: "t_explicit_check", order: n, range: "3..=6" });
    }
    let g = build_algebra(&AlgebraSpec::su(n)?)?;
    let f = structure_constants(&g)?;
    let d = d_tensor(&g)?;
    let t4 = su_t_tensor(&g, &f, 4)?;
    let t5 = if combinat::strict_count(g.dim(), 9) <= crate::error::budget() { Some(su_t_tensor(&g, &f, 5)?) } else { None };
    t_explicit_reports(&g.spec.label, n, &d, &t4, t5.as_ref(), tol)
}

/// The comparisons behind [`t_explicit_check`] for already built t^(4)
/// and t^(5) (the latter absent when over budget).
pub fn t_explicit_reports(label: &str, n: usize, d: &SymTensor, t4: &SymTensor, t5: Option<&SymTensor>, tol: f64) -> Result<Vec<IdentityReport>> {
    let r = d.dim();
    let nf = n as f64;
    let n2 = nf * nf;
    let delta = SymTensor::delta(r);
    let mut out = Vec::new();

    let d4 = d_family(d, 4)?;
    let dd = sym_product(&[&delta, &delta])?;
    let want4 = SymTensor::lin_comb(&[(nf * (n2 + 1.0) / 120.0, &d4), (-2.0 * (n2 - 4.0) / 120.0, &dd)])?;
    let dev = t4.max_abs_diff(&want4);
    out.push(IdentityReport::new("t4 = (1/120)[n(n^2+1) d4 - 2(n^2-4) dd]", label, dev, tol, format!("max |t4| = {:.6}", t4.max_abs())));
    if n > 3 {
        let e = expand_in(t4, &[&d4, &dd])?;
        let ratio = e.coefficients[1] / e.coefficients[0];
        let want = -2.0 * (n2 - 4.0) / (nf * (n2 + 1.0));
        out.push(IdentityReport::new(
            "t4 coefficient ratio dd/d4",
            label,
            (ratio - want).abs().max(e.residual),
            tol,
            format!("ratio {ratio:.12}, expected {want:.12}"),
        ));
    }

    let Some(t5) = t5 else {
        out.push(IdentityReport::skipped("t5 on the d5 / d delta ray", label, "Omega^(9) exceeds the entry budget"));
        return Ok(out);
    };
    if n <= 4 {
        out.push(IdentityReport::new("t5 = 0", label, t5.max_abs(), tol, "no primitive order-5 invariant"));
        return Ok(out);
    }
    let d5 = d_family(d, 5)?;
    let dxd = sym_product(&[d, &delta])?;
    let ray = SymTensor::lin_comb(&[(nf * (n2 + 5.0), &d5), (-2.0 * (3.0 * n2 - 20.0), &dxd)])?;
    match proportionality_sym(t5, &ray) {
        Some((lambda, dev)) => {
            out.push(IdentityReport::new("t5 on the d5 / d delta ray", label, dev, tol, format!("fitted lambda(n) = {lambda:.12}")))
        }
        None => out.push(IdentityReport::new("t5 on the d5 / d delta ray", label, f64::INFINITY, tol, "ray vanishes")),
    }
    Ok(out)
}

/// Scale-aware zero test: max|t| relative to max|reference|, where the
/// reference is the same construction one step up (e.g. su(n+1)) and is
/// known to be nonzero.
pub fn relative_size(t: &SymTensor, reference: &SymTensor) -> f64 {
    let s = reference.max_abs();
    if s == 0.0 {
        return f64::INFINITY;
    }
    t.max_abs() / s
}

#[derive(Clone, Debug)]
pub struct CasimirMatrix {
    pub matrix: CMat,
    /// Tr(C)/dim.
    pub scalar: Complex64,
    /// max |C - scalar 1|.
    pub off_scalar: f64,
}

fn finish(matrix: CMat) -> CasimirMatrix {
    let n = matrix.nrows();
    let scalar = matrix.trace() / n as f64;
    let off = (&matrix - CMat::identity(n, n) * scalar).iter().fold(0.0f64, |m, z| m.max(z.norm()));
    CasimirMatrix { matrix, scalar, off_scalar: off }
}

/// C = h^{i1..im} X_{i1} .. X_{im}, built from the back: G(P) = sum_j X_j G(P + j).
pub fn casimir_matrix(h: &SymTensor, rep: &[CMat]) -> Result<CasimirMatrix> {
    if rep.len() != h.dim() {
        return Err(LieError::Shape("representation size does not match the tensor".into()));
    }
    casimir_rec(h.order(), rep, h.iter(), |_, _| 1.0)
}

/// C' = Omega^{j1..jq} X_{j1} .. X_{jq} for an antisymmetric tensor.
pub fn casimir_matrix_alt(t: &AltTensor, rep: &[CMat]) -> Result<CasimirMatrix> {
    if rep.len() != t.dim() {
        return Err(LieError::Shape("representation size does not match the tensor".into()));
    }
    casimir_rec(t.order(), rep, t.iter(), |len, pos| if (len - 1 - pos) % 2 == 0 { 1.0 } else { -1.0 })
}

fn casimir_rec<'a>(
    order: usize,
    rep: &[CMat],
    entries: impl Iterator<Item = (&'a [u8], f64)>,
    sign: impl Fn(usize, usize) -> f64,
) -> Result<CasimirMatrix> {
    let n = rep.first().map_or(0, |x| x.nrows());
    if order == 0 {
        return Ok(finish(CMat::zeros(n, n)));
    }
    let entries: Vec<(&[u8], f64)> = entries.collect();
    // the prefixes alive at each level fix the memory; the identity is then
    // pushed through in column blocks as wide as the budget allows
    let nnz = rep.iter().map(|x| x.iter().filter(|z| z.norm() != 0.0).count()).sum::<usize>() as f64 / rep.len().max(1) as f64;
    let mut widest = 0usize;
    let mut work = 0.0;
    let mut keys: std::collections::HashSet<Index> = entries.iter().map(|(k, _)| Index::from_slice(k)).collect();
    for _ in 0..order {
        let mut next = std::collections::HashSet::new();
        for key in &keys {
            for p in 0..key.len() {
                let mut pre = key.clone();
                pre.remove(p);
                next.insert(pre);
            }
            work += key.len() as f64 * nnz * n as f64;
        }
        widest = widest.max(next.len());
        keys = next;
    }
    let per_column = (widest as u64).saturating_mul(n as u64);
    check_budget(|| format!("Casimir recursion over {widest} prefixes in dimension {n}"), per_column)?;
    // one budget unit per hundred multiply-adds
    check_budget(|| format!("Casimir recursion with {work:.2e} multiply-adds"), (work / 100.0) as u64)?;
    let width = ((crate::error::budget() / per_column.max(1)) as usize).clamp(1, n.max(1));
    // representation matrices are sparse, so X G is done row by row
    let sparse: Vec<Vec<(usize, usize, Complex64)>> = rep
        .iter()
        .map(|x| {
            let mut nz = Vec::new();
            for c in 0..n {
                for r in 0..n {
                    let v = x[(r, c)];
                    if v != Complex64::new(0.0, 0.0) {
                        nz.push((r, c, v));
                    }
                }
            }
            nz
        })
        .collect();
    let mut matrix = CMat::zeros(n, n);
    for start in (0..n).step_by(width) {
        let w = width.min(n - start);
        let mut level: HashMap<Index, CMat> = HashMap::new();
        for (key, v) in &entries {
            for p in 0..key.len() {
                if p > 0 && key[p] == key[p - 1] {
                    continue;
                }
                let mut pre: Index = Index::from_slice(key);
                let j = pre.remove(p) as usize;
                let c = Complex64::new(sign(key.len(), p) * v, 0.0);
                let slot = level.entry(pre).or_insert_with(|| CMat::zeros(n, w));
                *slot += rep[j].columns(start, w) * c;
            }
        }
        for _ in 1..order {
            let mut next: HashMap<Index, CMat> = HashMap::new();
            let mut keys: Vec<&Index> = level.keys().collect();
            keys.sort_unstable();
            for key in keys {
                let g = &level[key];
                for p in 0..key.len() {
                    if p > 0 && key[p] == key[p - 1] {
                        continue;
                    }
                    let mut pre = key.clone();
                    let j = pre.remove(p) as usize;
                    let s = sign(key.len(), p);
                    let slot = next.entry(pre).or_insert_with(|| CMat::zeros(n, w));
                    for &(r, c, x) in &sparse[j] {
                        let x = x * s;
                        for k in 0..w {
                            slot[(r, k)] += x * g[(c, k)];
                        }
                    }
                }
            }
            level = next;
        }
        if let Some(block) = level.remove(&Index::new()) {
            matrix.columns_mut(start, w).copy_from(&block);
        }
    }
    Ok(finish(matrix))
}

/// Factor relating C' of the cocycle to the Casimir of its t-tensor:
/// (i/2)^(m-1) for hermitian generators, (1/2)^(m-1) otherwise.
pub fn cprime_factor(convention: Convention, m: usize) -> Complex64 {
    let base = match convention {
        Convention::Hermitian => Complex64::new(0.0, 0.5),
        Convention::Antihermitian => Complex64::new(0.5, 0.0),
    };
    base.powu(m as u32 - 1)
}

fn max_norm(m: &CMat) -> f64 {
    m.iter().fold(0.0f64, |a, z| a.max(z.norm()))
}

/// The su(3) order-4 and su(4) order-5 Casimir relations
/// C4 = (1/3) C2^2 + (s/6) C2 and C5 = (2/3) C2 C3 + (2/3) s C3, with
/// C(r) = d^(r) X..X. The scale s is fitted in the defining representation
/// and then required to work unchanged in the adjoint representation.
pub fn casimir_relation_check(n: usize, tol: f64) -> Result<Vec<IdentityReport>> {
    if !(3..=4).contains(&n) {
        return Err(LieError::OrderOutOfRange { op: "casimir_relation_check", order: n, range: "3..=4" });
    }
    let spec = AlgebraSpec::su(n)?;
    let g = build_algebra(&spec)?;
    let f = structure_constants(&g)?;
    let d = d_tensor(&g)?;
    let delta = SymTensor::delta(g.dim());
    let adj = adjoint_rep(&f, g.convention);
    let reps: [(&str, &[CMat]); 2] = [("defining", &g.matrices), ("adjoint", &adj)];
    let (top, name) = if n == 3 { (d_family(&d, 4)?, "C4 = (1/3) C2^2 + (s/6) C2") } else { (d_family(&d, 5)?, "C5 = (2/3) C2 C3 + (2/3) s C3") };
    let mut scale: Option<f64> = None;
    let mut out = Vec::new();
    for (rep_name, rep) in reps {
        let c2 = casimir_matrix(&delta, rep)?.matrix;
        let ctop = casimir_matrix(&top, rep)?.matrix;
        let (base, lin, lin_coef) = if n == 3 {
            (&c2 * &c2 * Complex64::new(1.0 / 3.0, 0.0), c2.clone(), 1.0 / 6.0)
        } else {
            let c3 = casimir_matrix(&d, rep)?.matrix;
            (&c2 * &c3 * Complex64::new(2.0 / 3.0, 0.0), c3, 2.0 / 3.0)
        };
        let s = match scale {
            Some(s) => s,
            None => {
                // fit on the scalar parts
                let nn = lin.nrows() as f64;
                let num = (ctop.trace() - base.trace()) / nn;
                let den = lin.trace() / nn * lin_coef;
                let s = (num / den).re;
                scale = Some(s);
                s
            }
        };
        let resid = &ctop - &base - &lin * Complex64::new(lin_coef * s, 0.0);
        out.push(IdentityReport::new(
            format!("{name} ({rep_name})"),
            &spec.label,
            max_norm(&resid),
            tol,
            format!("fitted s = {s:.12}"),
        ));
    }
    Ok(out)
}
