//! Trace identities for products of the su(n) adjoint F and D matrices, and
//! the Cayley-Hamilton type partition identities of the defining
//! representation.
//!
//! Unsymmetrized identities with up to four free indices are compared on all
//! r^k index tuples. Symmetrized ones are compared on every canonical tuple:
//! the left side is a full symmetrized trace built from closed walks.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{build_algebra, AlgebraSpec, CMat, Family, GeneratorSet};
use crate::combinat::{self, partitions};
use crate::error::{LieError, Result};
use crate::invariants::{d_family, pfaffian, sym_product};
use crate::report::IdentityReport;
use crate::structure::{adjoint_d, adjoint_f, d_tensor, structure_constants};
use crate::tensor::{SymAccumulator, SymTensor};
use crate::walks::{closed_walks, closed_walks_sym, SparseFamily};

struct Ctx {
    n: f64,
    r: usize,
    label: String,
    fm: Vec<DMatrix<f64>>,
    dm: Vec<DMatrix<f64>>,
    ff: SparseFamily<f64>,
    fd: SparseFamily<f64>,
    d: SymTensor,
}

impl Ctx {
    fn f(&self, a: usize, b: usize, c: usize) -> f64 {
        // (F_b)_ac = f_abc
        self.fm[b][(a, c)]
    }

    fn d(&self, a: usize, b: usize, c: usize) -> f64 {
        self.dm[a][(b, c)]
    }
}

fn delta(a: usize, b: usize) -> f64 {
    if a == b {
        1.0
    } else {
        0.0
    }
}

/// Dense r^k array of Tr(X1_a X2_b ...) over all index tuples.
fn trace_array(fams: &[&SparseFamily<f64>], r: usize) -> Vec<f64> {
    let mut out = vec![0.0; r.pow(fams.len() as u32)];
    closed_walks(fams, |labels, v| {
        let k = labels.iter().fold(0usize, |k, &l| k * r + l as usize);
        out[k] += v;
    });
    out
}

/// R[a,b,c,d] = sum_x P_abx Q_cdx with P, Q given by matrix families
/// (P_x)_ab.
fn pair_product(p: &[DMatrix<f64>], q: &[DMatrix<f64>], r: usize) -> Vec<f64> {
    let nz = |m: &DMatrix<f64>| -> Vec<(usize, usize, f64)> {
        let mut v = Vec::new();
        for a in 0..r {
            for b in 0..r {
                if m[(a, b)] != 0.0 {
                    v.push((a, b, m[(a, b)]));
                }
            }
        }
        v
    };
    let mut out = vec![0.0; r * r * r * r];
    for x in 0..r {
        let lp = nz(&p[x]);
        let lq = nz(&q[x]);
        for &(a, b, u) in &lp {
            for &(c, d, w) in &lq {
                out[((a * r + b) * r + c) * r + d] += u * w;
            }
        }
    }
    out
}

/// Symmetrized trace Tr X_(a1 .. X_am) of one family.
fn sym_trace(fam: &SparseFamily<f64>, m: usize, r: usize) -> Result<SymTensor> {
    let mut acc = SymAccumulator::new(m, r)?;
    let mut word = vec![0u8; m];
    closed_walks_sym(fam, m, |labels, v| {
        word.copy_from_slice(labels);
        acc.emit(&mut word, v);
    });
    Ok(acc.finish())
}

/// d_(ab^x d_cd^y d_ef)^z d_xyz.
fn star_tensor(dm: &[DMatrix<f64>], r: usize) -> Result<SymTensor> {
    let lists: Vec<Vec<(u8, u8, f64)>> = dm
        .iter()
        .map(|m| {
            let mut v = Vec::new();
            for a in 0..r {
                for b in a..r {
                    let x = m[(a, b)];
                    if x != 0.0 {
                        v.push((a as u8, b as u8, if a < b { 2.0 * x } else { x }));
                    }
                }
            }
            v
        })
        .collect();
    let mut acc = SymAccumulator::new(6, r)?;
    for x in 0..r {
        for y in x..r {
            for z in y..r {
                let w = dm[x][(y, z)];
                if w == 0.0 {
                    continue;
                }
                let perms = if x == z {
                    1.0
                } else if x == y || y == z {
                    3.0
                } else {
                    6.0
                };
                for &(a, b, p) in &lists[x] {
                    for &(c, d, q) in &lists[y] {
                        for &(e, f, s) in &lists[z] {
                            let mut word = [a, b, c, d, e, f];
                            acc.emit(&mut word, w * perms * p * q * s);
                        }
                    }
                }
            }
        }
    }
    Ok(acc.finish())
}

fn worst2(lhs: &[f64], r: usize, rhs: impl Fn(usize, usize) -> f64) -> (f64, String) {
    let mut worst = (0.0, String::new());
    for a in 0..r {
        for b in 0..r {
            let dev = (lhs[a * r + b] - rhs(a, b)).abs();
            if dev > worst.0 {
                worst = (dev, format!("worst at ({}, {})", a + 1, b + 1));
            }
        }
    }
    worst
}

fn worst3(lhs: &[f64], r: usize, rhs: impl Fn(usize, usize, usize) -> f64) -> (f64, String) {
    let mut worst = (0.0, String::new());
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                let dev = (lhs[(a * r + b) * r + c] - rhs(a, b, c)).abs();
                if dev > worst.0 {
                    worst = (dev, format!("worst at ({}, {}, {})", a + 1, b + 1, c + 1));
                }
            }
        }
    }
    worst
}

fn worst4(lhs: &[f64], r: usize, rhs: impl Fn(usize, usize, usize, usize) -> f64) -> (f64, String) {
    let mut worst = (0.0, String::new());
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                for d in 0..r {
                    let dev = (lhs[((a * r + b) * r + c) * r + d] - rhs(a, b, c, d)).abs();
                    if dev > worst.0 {
                        worst = (dev, format!("worst at ({}, {}, {}, {})", a + 1, b + 1, c + 1, d + 1));
                    }
                }
            }
        }
    }
    worst
}

fn sym_report(name: &str, label: &str, lhs: &SymTensor, rhs: &SymTensor, tol: f64) -> IdentityReport {
    let dev = lhs.max_abs_diff(rhs);
    IdentityReport::new(name, label, dev, tol, format!("{} canonical entries on the left", lhs.nnz()))
}

/// Every trace identity for su(n), 3 <= n <= 6.
pub fn trace_identity_suite(n: usize, tol: f64) -> Result<Vec<IdentityReport>> {
    if !(3..=6).contains(&n) {
        return Err(LieError::OrderOutOfRange { op: "trace_identity_suite", order: n, range: "3..=6" });
    }
    let g = build_algebra(&AlgebraSpec::su(n)?)?;
    let f = structure_constants(&g)?;
    let d = d_tensor(&g)?;
    let fm = adjoint_f(&f);
    let dm = adjoint_d(&d);
    let c = Ctx {
        n: n as f64,
        r: g.dim(),
        label: g.spec.label.clone(),
        ff: SparseFamily::real(&fm),
        fd: SparseFamily::real(&dm),
        fm,
        dm,
        d,
    };
    let mut out = Vec::new();
    two_and_three_fold(&c, tol, &mut out);
    four_fold(&c, tol, &mut out);
    symmetrized(&c, tol, &mut out)?;
    Ok(out)
}

fn two_and_three_fold(c: &Ctx, tol: f64, out: &mut Vec<IdentityReport>) {
    let (n, r) = (c.n, c.r);
    let (ff, fd) = (&c.ff, &c.fd);
    let two: [(&str, [&SparseFamily<f64>; 2], f64); 3] = [
        ("Tr F_a F_b = -n delta_ab", [ff, ff], -n),
        ("Tr F_a D_b = 0", [ff, fd], 0.0),
        ("Tr D_a D_b = (n^2-4)/n delta_ab", [fd, fd], (n * n - 4.0) / n),
    ];
    for (name, fams, k) in two {
        let lhs = trace_array(&fams, r);
        let (dev, at) = worst2(&lhs, r, |a, b| k * delta(a, b));
        out.push(IdentityReport::new(name, &c.label, dev, tol, at));
    }
    type Rhs<'a> = Box<dyn Fn(usize, usize, usize) -> f64 + 'a>;
    let three: [(&str, [&SparseFamily<f64>; 3], Rhs); 4] = [
        ("Tr F_a F_b F_c = -(n/2) f_abc", [ff, ff, ff], Box::new(|a, b, x| -n / 2.0 * c.f(a, b, x))),
        ("Tr F_a F_b D_c = -(n/2) d_abc", [ff, ff, fd], Box::new(|a, b, x| -n / 2.0 * c.d(a, b, x))),
        ("Tr F_a D_b D_c = (n^2-4)/(2n) f_abc", [ff, fd, fd], Box::new(|a, b, x| (n * n - 4.0) / (2.0 * n) * c.f(a, b, x))),
        ("Tr D_a D_b D_c = (n^2-12)/(2n) d_abc", [fd, fd, fd], Box::new(|a, b, x| (n * n - 12.0) / (2.0 * n) * c.d(a, b, x))),
    ];
    for (name, fams, rhs) in three {
        let lhs = trace_array(&fams, r);
        let (dev, at) = worst3(&lhs, r, rhs);
        out.push(IdentityReport::new(name, &c.label, dev, tol, at));
    }
}

fn four_fold(c: &Ctx, tol: f64, out: &mut Vec<IdentityReport>) {
    let (n, r) = (c.n, c.r);
    let n2 = n * n;
    let (ff, fd) = (&c.ff, &c.fd);
    let dd = pair_product(&c.dm, &c.dm, r);
    let df = pair_product(&c.dm, &c.fm_by_third(), r);
    let fdp = pair_product(&c.fm_by_third(), &c.dm, r);
    let ix = |a: usize, b: usize, x: usize, y: usize| ((a * r + b) * r + x) * r + y;
    let dd = |a, b, x, y| dd[ix(a, b, x, y)];
    let df = |a, b, x, y| df[ix(a, b, x, y)];
    let fd_ = |a, b, x, y| fdp[ix(a, b, x, y)];
    let dl = delta;

    type Rhs<'a> = Box<dyn Fn(usize, usize, usize, usize) -> f64 + 'a>;
    let mut list: Vec<(&str, [&SparseFamily<f64>; 4], Rhs)> = vec![
        (
            "Tr F_a F_b F_c F_d",
            [ff, ff, ff, ff],
            Box::new(|a, b, x, y| dl(a, b) * dl(x, y) + dl(a, y) * dl(b, x) + n / 4.0 * (dd(a, b, x, y) + dd(a, y, b, x) - dd(a, x, b, y))),
        ),
        ("Tr F_a F_b F_c D_d", [ff, ff, ff, fd], Box::new(|a, b, x, y| -n / 4.0 * df(a, b, x, y) - n / 4.0 * fd_(a, b, x, y))),
        (
            "Tr F_a F_b D_c D_d",
            [ff, ff, fd, fd],
            Box::new(|a, b, x, y| {
                (4.0 - n2) / n2 * (dl(a, b) * dl(x, y) - dl(a, x) * dl(b, y)) + (8.0 - n2) / (4.0 * n) * (dd(a, b, x, y) - dd(a, x, b, y))
                    - n / 4.0 * dd(a, y, b, x)
            }),
        ),
        ("Tr F_a D_b F_c D_d", [ff, fd, ff, fd], Box::new(|a, b, x, y| n / 4.0 * (dd(a, x, b, y) - dd(a, y, b, x)) - n / 4.0 * dd(a, b, x, y))),
        (
            "Tr F_a D_b D_c D_d",
            [ff, fd, fd, fd],
            Box::new(|a, b, x, y| {
                (n2 - 12.0) / (4.0 * n) * fd_(a, b, x, y) + n / 4.0 * df(a, b, x, y) + (fd_(a, y, b, x) - fd_(a, x, b, y)) / n
            }),
        ),
        (
            "Tr D_a D_b D_c D_d",
            [fd, fd, fd, fd],
            Box::new(|a, b, x, y| {
                (n2 - 4.0) / n2 * (dl(a, b) * dl(x, y) + dl(a, y) * dl(b, x)) - n / 4.0 * dd(a, x, b, y)
                    + (n2 - 16.0) / (4.0 * n) * (dd(a, b, x, y) + dd(a, y, b, x))
            }),
        ),
    ];
    if c.r == 8 {
        list.push((
            "Tr D_a D_b D_c D_d, su(3) form",
            [fd, fd, fd, fd],
            Box::new(|a, b, x, y| {
                let sym = (dl(a, b) * dl(x, y) + dl(a, x) * dl(b, y) + dl(a, y) * dl(b, x)) / 3.0;
                5.0 / 9.0 * (dl(a, b) * dl(x, y) + dl(a, y) * dl(b, x)) - 7.0 / 12.0 * sym - dd(a, x, b, y) / 6.0
            }),
        ));
    }
    for (name, fams, rhs) in list {
        let lhs = trace_array(&fams, r);
        let (dev, at) = worst4(&lhs, r, rhs);
        out.push(IdentityReport::new(name, &c.label, dev, tol, at));
    }
}

impl Ctx {
    /// (P_x)_ab = f_abx, the family used to build f_abx Q_cdx products.
    fn fm_by_third(&self) -> Vec<DMatrix<f64>> {
        (0..self.r).map(|x| DMatrix::from_fn(self.r, self.r, |a, b| self.f(a, b, x))).collect()
    }
}

fn symmetrized(c: &Ctx, tol: f64, out: &mut Vec<IdentityReport>) -> Result<()> {
    let (n, r) = (c.n, c.r);
    let n2 = n * n;
    let label = c.label.as_str();
    let delta = SymTensor::delta(r);
    let d4 = d_family(&c.d, 4)?;
    let dd = sym_product(&[&delta, &delta])?;

    let f4 = sym_trace(&c.ff, 4, r)?;
    let want = SymTensor::lin_comb(&[(n / 4.0, &d4), (2.0, &dd)])?;
    out.push(sym_report("Tr F_(a F_b F_c F_d) = (n/4) d4 + 2 dd", label, &f4, &want, tol));
    let d4t = sym_trace(&c.fd, 4, r)?;
    let want = SymTensor::lin_comb(&[((n2 - 32.0) / (4.0 * n), &d4), (2.0 * (n2 - 4.0) / n2, &dd)])?;
    out.push(sym_report("Tr D_(a D_b D_c D_d) = (n^2-32)/(4n) d4 + 2(n^2-4)/n^2 dd", label, &d4t, &want, tol));
    if r == 8 {
        out.push(sym_report("Tr F_(a F_b F_c F_d) = (9/4) dd, su(3)", label, &f4, &dd.scaled(9.0 / 4.0), tol));
        out.push(sym_report("Tr D_(a D_b D_c D_d) = (17/36) dd, su(3)", label, &d4t, &dd.scaled(17.0 / 36.0), tol));
    }

    let d5 = d_family(&c.d, 5)?;
    let dxd = sym_product(&[&delta, &c.d])?;
    let d5t = sym_trace(&c.fd, 5, r)?;
    let want = SymTensor::lin_comb(&[((n2 - 80.0) / (8.0 * n), &d5), ((3.0 * n2 - 20.0) / n2, &dxd)])?;
    out.push(sym_report("Tr D_(a..D_e) = (n^2-80)/(8n) d5 + (3n^2-20)/n^2 delta d", label, &d5t, &want, tol));
    match n as usize {
        3 => out.push(sym_report("Tr D_(a..D_e) = -(5/24) d delta, su(3)", label, &d5t, &dxd.scaled(-5.0 / 24.0), tol)),
        4 => out.push(sym_report("Tr D_(a..D_e) = (5/12) d delta, su(4)", label, &d5t, &dxd.scaled(5.0 / 12.0), tol)),
        _ => {}
    }

    let d6t = sym_trace(&c.fd, 6, r)?;
    let ddd = sym_product(&[&delta, &delta, &delta])?;
    let star = star_tensor(&c.dm, r)?;
    let dd4 = sym_product(&[&delta, &d4])?;
    let dxd3 = sym_product(&[&c.d, &c.d])?;
    let want = SymTensor::lin_comb(&[
        (4.0 * (n2 - 4.0) / (n2 * n), &ddd),
        ((n2 - 192.0) / (16.0 * n), &star),
        (0.75 * (3.0 * n2 - 64.0) / n2, &dd4),
        ((5.0 * n2 + 48.0) / (4.0 * n2), &dxd3),
    ])?;
    out.push(sym_report("Tr D_(a..D_f) six-fold expansion", label, &d6t, &want, tol));
    let chain = d_family(&c.d, 6)?;
    // the chain of six d's differs from the star term by d d and delta d4
    let want = SymTensor::lin_comb(&[(1.0, &star), (-2.0 / n, &dxd3), (2.0 / n, &dd4)])?;
    out.push(sym_report("d6 chain = star - (2/n)(d d - delta d4)", label, &chain, &want, tol));

    let dd_scalar = c.d.full_norm_sq();
    let want = (n2 - 1.0) * (n2 - 4.0) / n;
    out.push(IdentityReport::new("d_ijk d_ijk = (n^2-1)(n^2-4)/n", label, (dd_scalar - want).abs(), tol, format!("{dd_scalar:.12}")));
    let d5d5 = d5.full_norm_sq();
    let want = (n2 - 4.0) * (n2 - 1.0) * (5.0 * n2 * n2 - 96.0 * n2 + 480.0) / (15.0 * n2 * n);
    out.push(IdentityReport::new(
        "d5 . d5 = (n^2-4)(n^2-1)(5n^4-96n^2+480)/(15n^3)",
        label,
        (d5d5 - want).abs(),
        tol,
        format!("{d5d5:.12}"),
    ));
    Ok(())
}

/// Trace powers Tr(M^k) for k = 1..=top.
fn trace_powers(m: &CMat, top: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); top + 1];
    let mut p = m.clone();
    for (k, slot) in out.iter_mut().enumerate().skip(1) {
        if k > 1 {
            p = &p * m;
        }
        *slot = p.trace();
    }
    out
}

/// Sum over partitions nu of N of (-1)^(nu2+nu4+..) N!/prod(k^nu_k nu_k!)
/// prod Tr(M^k)^nu_k, and the sum of absolute values of the terms.
fn partition_sum(tr: &[Complex64], parts: &[Vec<usize>], big_n: usize) -> (f64, f64) {
    let nf = combinat::factorial(big_n);
    let mut sum = 0.0;
    let mut scale = 0.0;
    for nu in parts {
        let mut w = nf;
        let mut sign = 1.0;
        let mut prod = Complex64::new(1.0, 0.0);
        for (k, &v) in nu.iter().enumerate().skip(1) {
            if v == 0 {
                continue;
            }
            w /= (k as f64).powi(v as i32) * combinat::factorial(v);
            if k % 2 == 0 && v % 2 == 1 {
                sign = -sign;
            }
            prod *= tr[k].powu(v as u32);
        }
        let term = sign * w * prod.re;
        sum += term;
        scale += term.abs();
    }
    (sum, scale)
}

/// Partition identities of the defining representation at random points
/// M = lambda^i X_i. For A_l the order-(l+2) sum vanishes; for B_l and C_l
/// the sum over even partitions of the first even order above the matrix
/// size vanishes; for D_l the order-2l sum equals (2l)! Pf(M)^2, and
/// det(M) = Pf(M)^2 is checked as well.
pub fn cayley_hamilton_check(g: &GeneratorSet, trials: usize, seed: u64, tol: f64) -> Result<Vec<IdentityReport>> {
    if trials == 0 {
        return Err(LieError::Shape("at least one trial is needed".into()));
    }
    let size = g.n();
    let (big_n, even) = match g.spec.family {
        Family::A => (size + 1, false),
        Family::B | Family::C => ((size + 1).next_multiple_of(2), true),
        Family::D => (size, true),
    };
    let parts = partitions(big_n, even);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    let mut worst_det: f64 = 0.0;
    let mut lambda = vec![0.0; g.dim()];
    for _ in 0..trials {
        lambda.iter_mut().for_each(|x| *x = rng.random_range(-1.0..=1.0));
        let m = g.combine(&lambda);
        let tr = trace_powers(&m, big_n);
        let (sum, scale) = partition_sum(&tr, &parts, big_n);
        let target = if g.spec.family == Family::D {
            let real = m.map(|z| z.re);
            let pf = pfaffian(&real);
            let det = real.determinant();
            worst_det = worst_det.max((det - pf * pf).abs() / det.abs().max(f64::MIN_POSITIVE));
            combinat::factorial(big_n) * pf * pf
        } else {
            0.0
        };
        worst = worst.max((sum - target).abs() / scale.max(f64::MIN_POSITIVE));
    }
    let label = g.spec.label.as_str();
    let what = if g.spec.family == Family::D { "equals N! Pf^2" } else { "vanishes" };
    let mut out = vec![IdentityReport::new(
        format!("order-{big_n} partition identity {what}"),
        label,
        worst,
        tol,
        format!("{} partitions, {trials} trials, seed {seed}, residual relative to the sum of |terms|", parts.len()),
    )];
    if g.spec.family == Family::D {
        out.push(IdentityReport::new("det M = Pf(M)^2", label, worst_det, tol, format!("{trials} trials, relative to |det M|")));
    }
    Ok(out)
}

