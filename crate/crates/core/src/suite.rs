//! The full verification run for one algebra, shared by the CLI and the C
//! interface. Checks that would exceed the entry budget are reported as
//! skipped rather than failed.

use crate::algebra::{build_algebra, AlgebraSpec, Family, GeneratorSet};
use crate::cocycles::{check_invariance, check_lemma31, cocycle_from_sym, proportionality_alt, recurrence_bcd, recurrence_su};
use crate::combinat;
use crate::duality::check_duality;
use crate::error::{budget, LieError, Result};
use crate::identities::{cayley_hamilton_check, trace_identity_suite};
use crate::invariance::sym_invariance;
use crate::invariants::{d_family, pfaffian_tensor, primitive_tensors, sym_product, tower_tensor, v_family, v_tensor};
use crate::io::AnyTensor;
use crate::report::IdentityReport;
use crate::structure::{adjoint_rep, d_tensor, jacobi_residual, rep_residual, structure_constants, Brackets};
use crate::tensor::{AltTensor, SymTensor};
use crate::ttensor::{
    casimir_matrix, casimir_matrix_alt, casimir_relation_check, closed_form_k, cprime_factor, k_scalar, orthogonality_check, t_explicit_reports,
    t_tensor, ClosedForm,
};

/// The antisymmetrized C..C h check costs (index tuples) x (pairings per
/// tuple); above this it is skipped in a verification run.
const PAIRING_WORK: f64 = 1e8;

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub tolerance: f64,
    pub seed: u64,
    pub trials: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { tolerance: 1e-9, seed: 42, trials: 20 }
    }
}

/// One member of the primitive tower: the symmetric tensor, its cocycle
/// and t-tensor (each absent when over budget or failed).
pub struct TowerMember {
    pub name: String,
    pub h: SymTensor,
    pub cocycle: Option<AltTensor>,
    pub t: Option<SymTensor>,
}

fn outcome<T>(r: Result<T>, name: &str, label: &str, out: &mut Vec<IdentityReport>) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(e @ LieError::Budget { .. }) => {
            out.push(IdentityReport::skipped(name, label, e.to_string()));
            None
        }
        Err(e) => {
            out.push(IdentityReport::new(name, label, f64::INFINITY, 0.0, e.to_string()));
            None
        }
    }
}

/// Build the primitive tower of `g` with its cocycles and t-tensors,
/// recording construction failures and budget skips in `out`.
pub fn build_tower(g: &GeneratorSet, f: &AltTensor, out: &mut Vec<IdentityReport>) -> Result<Vec<TowerMember>> {
    let label = g.spec.label.as_str();
    let mut tower = Vec::new();
    for (name, h) in primitive_tensors(g)? {
        let cname = format!("cocycle of {name}");
        let cocycle = outcome(cocycle_from_sym(f, &h), &cname, label, out);
        let t = match &cocycle {
            Some(c) => outcome(t_tensor(c, f), &format!("t-tensor of {name}"), label, out),
            None => None,
        };
        tower.push(TowerMember { name, h, cocycle, t });
    }
    Ok(tower)
}

pub fn verify_algebra(spec: &AlgebraSpec, opts: &VerifyOptions) -> Result<Vec<IdentityReport>> {
    let tol = opts.tolerance;
    let g = build_algebra(spec)?;
    let label = spec.label.clone();
    let label = label.as_str();
    let f = structure_constants(&g)?;
    let br = Brackets::new(&f);
    let adj = adjoint_rep(&f, g.convention);
    let r = g.dim();
    let mut out = Vec::new();

    out.push(IdentityReport::new("Jacobi identity", label, jacobi_residual(&f), tol, format!("dimension {r}")));
    out.push(IdentityReport::new("defining representation closes with f", label, rep_residual(&g.matrices, &f, g.convention), tol, ""));
    out.push(IdentityReport::new("adjoint representation closes with f", label, rep_residual(&adj, &f, g.convention), tol, ""));
    let orders = spec.cocycle_orders();
    let sum: usize = orders.iter().sum();
    out.push(IdentityReport::new(
        "cocycle orders sum to the dimension",
        label,
        (sum as f64 - r as f64).abs(),
        0.5,
        format!("{orders:?} sum to {sum}, dimension {r}"),
    ));

    let tower = build_tower(&g, &f, &mut out)?;
    for m in &tower {
        let name = &m.name;
        out.push(IdentityReport::new(format!("{name} is invariant"), label, sym_invariance(&m.h, &br)?, tol, format!("order {}", m.h.order())));
        if let Some(c) = &m.cocycle {
            out.push(IdentityReport::new(
                format!("cocycle of {name} is invariant"),
                label,
                check_invariance(c, &f)?,
                tol,
                format!("order {}, {} entries", c.order(), c.nnz()),
            ));
        }
        let what = format!("antisymmetrized C..C {name} vanishes");
        let tuples = combinat::strict_count(r, 2 * m.h.order());
        let work = (tuples as f64) * (1..m.h.order()).map(|k| (2 * k + 1) as f64).product::<f64>();
        if work > PAIRING_WORK {
            out.push(IdentityReport::skipped(&what, label, format!("{tuples} order-{} tuples, each summed over its pairings", 2 * m.h.order())));
        } else if let Some(v) = outcome(check_lemma31(&f, &m.h), &what, label, &mut out) {
            out.push(IdentityReport::new(&what, label, v, tol, ""));
        }
        for (rep_name, rep) in [("defining", &g.matrices), ("adjoint", &adj)] {
            let what = format!("Casimir of {name} is scalar ({rep_name})");
            if let Some(c) = outcome(casimir_matrix(&m.h, rep), &what, label, &mut out) {
                out.push(IdentityReport::new(&what, label, c.off_scalar, tol, format!("scalar {:.12}", c.scalar)));
            }
            if let (Some(om), Some(t)) = (&m.cocycle, &m.t) {
                let what = format!("C' of {name} = factor * Casimir of t ({rep_name})");
                let pair = casimir_matrix_alt(om, rep).and_then(|a| Ok((a, casimir_matrix(t, rep)?)));
                if let Some((lhs, rhs)) = outcome(pair, &what, label, &mut out) {
                    let rhs = rhs.matrix * cprime_factor(g.convention, t.order());
                    let dev = (&lhs.matrix - &rhs).iter().fold(0.0f64, |w, z| w.max(z.norm()));
                    out.push(IdentityReport::new(&what, label, dev, tol, ""));
                }
            }
        }
    }

    non_primitive(&g, &f, &adj, tol, &mut out)?;

    let ts: Vec<&SymTensor> = tower.iter().filter_map(|m| m.t.as_ref()).collect();
    out.push(IdentityReport::new("t-tensors are mutually orthogonal", label, orthogonality_check(&ts)?, tol, format!("{} t-tensors", ts.len())));
    if spec.family == Family::A {
        for m in &tower {
            let Some(t) = &m.t else { continue };
            let mo = t.order();
            let k = k_scalar(t);
            match closed_form_k(mo, g.n()) {
                Some(ClosedForm::Value(v)) => {
                    let dev = if v == 0.0 { k.abs() } else { ((k.abs() - v) / v).abs() };
                    out.push(IdentityReport::new(format!("K^({mo}) closed form"), label, dev, tol, format!("K = {k:.12}, closed form {v:.12}")));
                }
                Some(ClosedForm::NonzeroUnknown) => {
                    out.push(IdentityReport::new(format!("K^({mo}) is nonzero"), label, if k.abs() > 1e-9 { 0.0 } else { 1.0 }, 0.5, format!("K = {k:.12}")))
                }
                None => {}
            }
        }
    }

    recurrences(&g, &f, &tower, tol, &mut out)?;

    let cocycles: Vec<AltTensor> = tower.iter().filter_map(|m| m.cocycle.clone()).collect();
    if cocycles.len() == tower.len() {
        out.extend(check_duality(&cocycles, label, tol)?);
    } else {
        out.push(IdentityReport::skipped("duality of the cocycle tower", label, "not every cocycle was constructed"));
    }

    out.extend(cayley_hamilton_check(&g, opts.trials, opts.seed, tol)?);

    if spec.family == Family::A {
        let n = g.n();
        if (3..=6).contains(&n) {
            out.extend(trace_identity_suite(n, tol)?);
            let d = d_tensor(&g)?;
            let from_tower = |o: usize| tower.iter().find(|m| m.h.order() == o && m.name != "pf").and_then(|m| m.t.clone());
            // below the top of the tower the t-tensors are built from the
            // non-primitive symmetric traces and must vanish
            let extra = |o: usize, out: &mut Vec<IdentityReport>| -> Result<Option<SymTensor>> {
                let h = tower_tensor(&g, o)?;
                Ok(outcome(cocycle_from_sym(&f, &h).and_then(|c| t_tensor(&c, &f)), &format!("t-tensor of k{o}"), label, out))
            };
            let t4 = match from_tower(4) {
                Some(t) => Some(t),
                None if n == 3 => extra(4, &mut out)?,
                None => None,
            };
            let t5 = match from_tower(5) {
                Some(t) => Some(t),
                None if n <= 4 => extra(5, &mut out)?,
                None => None,
            };
            if let Some(t4) = t4 {
                out.extend(t_explicit_reports(label, n, &d, &t4, t5.as_ref(), tol)?);
            }
        }
        if (3..=4).contains(&n) {
            out.extend(casimir_relation_check(n, tol)?);
        }
    }
    Ok(out)
}

/// Symmetric products of lower invariants give zero cocycles; so does the
/// first non-primitive symmetric trace of su(n).
fn non_primitive(g: &GeneratorSet, f: &AltTensor, adj: &[crate::algebra::CMat], tol: f64, out: &mut Vec<IdentityReport>) -> Result<()> {
    let label = g.spec.label.as_str();
    let r = g.dim();
    let delta = SymTensor::delta(r);
    // (name, order, builder): the tensor is only built when its cocycle is
    // small enough to check
    type Build<'a> = Box<dyn Fn() -> Result<SymTensor> + 'a>;
    let mut cases: Vec<(String, usize, Build)> = vec![("delta delta".into(), 4, Box::new(|| sym_product(&[&delta, &delta])))];
    if g.spec.family == Family::A && g.n() >= 3 {
        cases.push(("delta k3".into(), 5, Box::new(|| sym_product(&[&delta, &tower_tensor(g, 3)?]))));
        let top = g.n() + 1;
        if top <= 8 {
            cases.push((format!("k{top}"), top, Box::new(move || tower_tensor(g, top))));
        }
    }
    let small = budget().min(200_000);
    for (name, order, build) in cases {
        let q = 2 * order - 1;
        let what = format!("cocycle of non-primitive {name} vanishes");
        if combinat::strict_count(r, q) > small {
            out.push(IdentityReport::skipped(what, label, format!("{} order-{q} tuples", combinat::strict_count(r, q))));
            continue;
        }
        let Some(h) = outcome(build(), &what, label, out) else { continue };
        let Some(c) = outcome(cocycle_from_sym(f, &h), &what, label, out) else { continue };
        out.push(IdentityReport::new(&what, label, c.max_abs(), tol, format!("order {q}")));
        if c.is_empty() {
            for (rep_name, rep) in [("defining", &g.matrices[..]), ("adjoint", adj)] {
                let cm = casimir_matrix_alt(&c, rep)?;
                let z = cm.matrix.iter().fold(0.0f64, |w, x| w.max(x.norm()));
                out.push(IdentityReport::new(format!("C' of non-primitive {name} is zero ({rep_name})"), label, z, tol, ""));
            }
        }
    }
    Ok(())
}

fn recurrences(g: &GeneratorSet, f: &AltTensor, tower: &[TowerMember], tol: f64, out: &mut Vec<IdentityReport>) -> Result<()> {
    let label = g.spec.label.as_str();
    let by_order = |q: usize| tower.iter().find(|m| m.name != "pf" && m.cocycle.as_ref().is_some_and(|c| c.order() == q)).and_then(|m| m.cocycle.as_ref());
    let compare = |name: String, got: Result<AltTensor>, want: Option<&AltTensor>, out: &mut Vec<IdentityReport>| {
        let Some(got) = outcome(got, &name, label, out) else { return };
        match want {
            Some(w) => match proportionality_alt(&got, w) {
                Some((c, dev)) => out.push(IdentityReport::new(&name, label, dev, tol, format!("fitted constant {c:.12}"))),
                None => out.push(IdentityReport::new(&name, label, f64::INFINITY, tol, "target vanishes")),
            },
            None => out.push(IdentityReport::new(&name, label, got.max_abs(), tol, "past the top of the tower")),
        }
    };
    match g.spec.family {
        Family::A if g.n() >= 3 => {
            let d = d_tensor(g)?;
            let o5 = by_order(5);
            compare("recurrence from f gives Omega^(5)".into(), recurrence_su(f, f, &d), o5, out);
            if let Some(o5) = o5 {
                let q = 7;
                if combinat::strict_count(g.dim(), q) <= budget() {
                    compare("recurrence from Omega^(5) gives Omega^(7)".into(), recurrence_su(o5, f, &d), by_order(7), out);
                }
            }
        }
        Family::B | Family::C | Family::D => {
            let v = v_tensor(g)?;
            let o7 = by_order(7);
            compare("recurrence from f gives Omega^(7)".into(), recurrence_bcd(f, f, &v), o7, out);
        }
        _ => {}
    }
    Ok(())
}

/// The primitive cocycle of order q, built from the matching member of the
/// symmetric tower.
pub fn tower_cocycle(g: &GeneratorSet, f: &AltTensor, q: usize, pfaffian: bool) -> Result<AltTensor> {
    if q < 3 || q % 2 == 0 {
        return Err(LieError::OrderOutOfRange { op: "cocycle", order: q, range: "odd >= 3" });
    }
    let m = (q + 1) / 2;
    let tower = primitive_tensors(g)?;
    let mut hits = tower.iter().filter(|(_, h)| h.order() == m);
    let pick = if pfaffian { hits.find(|(n, _)| n == "pf") } else { hits.next() };
    let (_, h) = pick.ok_or(LieError::OrderOutOfRange { op: "primitive cocycle", order: q, range: "the cocycle orders of the algebra" })?;
    cocycle_from_sym(f, h)
}

/// A tensor by short name: f, d, v, pf, delta, k<m>, d<m>, v<m>, omega<q>
/// or t<m>.
pub fn named_tensor(g: &GeneratorSet, f: &AltTensor, name: &str, pfaffian: bool) -> Result<AnyTensor> {
    let num = |prefix: &str| name.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok());
    Ok(match name {
        "f" => f.clone().into(),
        "d" => d_tensor(g)?.into(),
        "v" => v_tensor(g)?.into(),
        "pf" => pfaffian_tensor(g)?.into(),
        "delta" => SymTensor::delta(g.dim()).into(),
        _ => {
            if let Some(q) = num("omega") {
                tower_cocycle(g, f, q, pfaffian)?.into()
            } else if let Some(m) = num("k") {
                tower_tensor(g, m)?.into()
            } else if let Some(m) = num("d") {
                d_family(&d_tensor(g)?, m)?.into()
            } else if let Some(m) = num("v") {
                v_family(&v_tensor(g)?, m)?.into()
            } else if let Some(m) = num("t").filter(|&m| m >= 2) {
                t_tensor(&tower_cocycle(g, f, 2 * m - 1, pfaffian)?, f)?.into()
            } else {
                return Err(LieError::Shape(format!("unknown tensor `{name}`")));
            }
        }
    })
}
