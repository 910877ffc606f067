//! The four classical series in their defining representations.

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{LieError, Result};

pub type CMat = DMatrix<Complex64>;

const GEN_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B => 2,
            Family::C => 3,
            Family::D => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraSpec {
    pub family: Family,
    pub rank: usize,
    pub adjoint_dim: usize,
    pub defining_dim: usize,
    pub label: String,
}

impl AlgebraSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(LieError::UnsupportedRank { family: family.letter(), rank, min: family.min_rank() });
        }
        let l = rank;
        let (r, n, label) = match family {
            Family::A => ((l + 1) * (l + 1) - 1, l + 1, format!("su({})", l + 1)),
            Family::B => (l * (2 * l + 1), 2 * l + 1, format!("so({})", 2 * l + 1)),
            Family::C => (l * (2 * l + 1), 2 * l, format!("sp({l})")),
            Family::D => (l * (2 * l - 1), 2 * l, format!("so({})", 2 * l)),
        };
        if r > 255 {
            return Err(LieError::UnsupportedRank { family: family.letter(), rank, min: family.min_rank() });
        }
        Ok(AlgebraSpec { family, rank, adjoint_dim: r, defining_dim: n, label })
    }

    pub fn su(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(LieError::UnsupportedRank { family: 'A', rank: n.saturating_sub(1), min: 1 });
        }
        Self::new(Family::A, n - 1)
    }

    /// Parse `su3`, `so5`, `so8`, `sp3`, `su(4)` or Cartan labels `A2`, `B2`, `C3`, `D4`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || LieError::BadLabel(s.to_string());
        let t: String = s.chars().filter(|c| !matches!(c, '(' | ')' | ' ' | '_')).collect::<String>().to_lowercase();
        let num = |p: &str| p.parse::<usize>().map_err(|_| bad());
        if let Some(rest) = t.strip_prefix("su") {
            let n = num(rest)?;
            return Self::su(n);
        }
        if let Some(rest) = t.strip_prefix("so") {
            let n = num(rest)?;
            return if n % 2 == 1 { Self::new(Family::B, n / 2) } else { Self::new(Family::D, n / 2) };
        }
        if let Some(rest) = t.strip_prefix("usp") {
            let n = num(rest)?;
            if n % 2 == 1 {
                return Err(bad());
            }
            return Self::new(Family::C, n / 2);
        }
        if let Some(rest) = t.strip_prefix("sp") {
            return Self::new(Family::C, num(rest)?);
        }
        let mut chars = t.chars();
        let fam = match chars.next() {
            Some('a') => Family::A,
            Some('b') => Family::B,
            Some('c') => Family::C,
            Some('d') => Family::D,
            _ => return Err(bad()),
        };
        Self::new(fam, num(chars.as_str())?)
    }

    /// Orders m of the primitive symmetric invariants.
    pub fn primitive_orders(&self) -> Vec<usize> {
        let l = self.rank;
        match self.family {
            Family::A => (2..=l + 1).collect(),
            Family::B | Family::C => (1..=l).map(|p| 2 * p).collect(),
            Family::D => {
                let mut v: Vec<usize> = (1..l).map(|p| 2 * p).collect();
                v.push(l);
                v.sort_unstable();
                v
            }
        }
    }

    /// Orders 2m-1 of the primitive cocycles.
    pub fn cocycle_orders(&self) -> Vec<usize> {
        self.primitive_orders().iter().map(|m| 2 * m - 1).collect()
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Convention {
    /// `[T_i, T_j] = i f_ijk T_k`, hermitian generators.
    Hermitian,
    /// `[X_i, X_j] = f_ijk X_k`, antihermitian generators.
    Antihermitian,
}

#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub spec: AlgebraSpec,
    pub matrices: Vec<CMat>,
    pub kappa: f64,
    pub convention: Convention,
}

impl GeneratorSet {
    pub fn dim(&self) -> usize {
        self.matrices.len()
    }

    pub fn n(&self) -> usize {
        self.spec.defining_dim
    }

    /// `sum_i lambda_i X_i`.
    pub fn combine(&self, lambda: &[f64]) -> CMat {
        let n = self.n();
        let mut m = CMat::zeros(n, n);
        for (x, &c) in self.matrices.iter().zip(lambda) {
            m += x * Complex64::new(c, 0.0);
        }
        m
    }
}

fn unit(n: usize, a: usize, b: usize) -> CMat {
    let mut m = CMat::zeros(n, n);
    m[(a, b)] = Complex64::new(1.0, 0.0);
    m
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Generalized Gell-Mann basis T = lambda/2. Matrix size grows one step at a
/// time; each step adds the symmetric and antisymmetric pair for every new
/// off-diagonal position, then one new diagonal generator.
fn su_generators(n: usize) -> Vec<CMat> {
    let mut out = Vec::with_capacity(n * n - 1);
    let half = c(0.5, 0.0);
    for k in 1..n {
        for j in 0..k {
            let sym = unit(n, j, k) + unit(n, k, j);
            let asym = unit(n, j, k) * c(0.0, -1.0) + unit(n, k, j) * c(0.0, 1.0);
            out.push(sym * half);
            out.push(asym * half);
        }
        let kk = (k + 1) as f64;
        let s = (2.0 / (kk * (kk - 1.0))).sqrt();
        let mut d = CMat::zeros(n, n);
        for i in 0..k {
            d[(i, i)] = c(s, 0.0);
        }
        d[(k, k)] = c(-s * k as f64, 0.0);
        out.push(d * half);
    }
    out
}

fn so_generators(n: usize) -> Vec<CMat> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for a in 0..n {
        for b in a + 1..n {
            out.push(unit(n, a, b) - unit(n, b, a));
        }
    }
    out
}

/// Compact symplectic basis: block-diagonal diag(A, conj A) with A
/// antihermitian, then off-diagonal [[0, B], [-conj B, 0]] with B symmetric.
fn usp_generators(l: usize) -> Vec<CMat> {
    let n = 2 * l;
    let r2 = std::f64::consts::FRAC_1_SQRT_2;
    let block = |a: &CMat, upper: bool| {
        let mut m = CMat::zeros(n, n);
        for i in 0..l {
            for j in 0..l {
                if upper {
                    m[(i, l + j)] = a[(i, j)];
                    m[(l + i, j)] = -a[(i, j)].conj();
                } else {
                    m[(i, j)] = a[(i, j)];
                    m[(l + i, l + j)] = a[(i, j)].conj();
                }
            }
        }
        m
    };
    let mut out = Vec::with_capacity(l * (2 * l + 1));
    for a in 0..l {
        for b in a + 1..l {
            out.push(block(&((unit(l, a, b) - unit(l, b, a)) * c(r2, 0.0)), false));
            out.push(block(&((unit(l, a, b) + unit(l, b, a)) * c(0.0, r2)), false));
        }
    }
    for a in 0..l {
        out.push(block(&(unit(l, a, a) * c(0.0, 1.0)), false));
    }
    for a in 0..l {
        out.push(block(&unit(l, a, a), true));
        out.push(block(&(unit(l, a, a) * c(0.0, 1.0)), true));
    }
    for a in 0..l {
        for b in a + 1..l {
            out.push(block(&((unit(l, a, b) + unit(l, b, a)) * c(r2, 0.0)), true));
            out.push(block(&((unit(l, a, b) + unit(l, b, a)) * c(0.0, r2)), true));
        }
    }
    out
}

/// Metric matrix `eta` preserved by the B/C/D generators.
pub fn eta(spec: &AlgebraSpec) -> CMat {
    let n = spec.defining_dim;
    match spec.family {
        Family::C => {
            let l = n / 2;
            let mut e = CMat::zeros(n, n);
            for i in 0..l {
                e[(i, l + i)] = c(1.0, 0.0);
                e[(l + i, i)] = c(-1.0, 0.0);
            }
            e
        }
        _ => CMat::identity(n, n),
    }
}

pub fn trace_product(a: &CMat, b: &CMat) -> Complex64 {
    let n = a.nrows();
    let mut s = Complex64::new(0.0, 0.0);
    for i in 0..n {
        for k in 0..n {
            s += a[(i, k)] * b[(k, i)];
        }
    }
    s
}

/// Gram-Schmidt under the trace form, rescaled so that Tr(X_i X_j) = kappa delta_ij.
fn orthonormalize(mats: Vec<CMat>, kappa: f64) -> Vec<CMat> {
    let mut out: Vec<CMat> = Vec::with_capacity(mats.len());
    for mut m in mats {
        for q in &out {
            let proj = trace_product(q, &m) / kappa;
            if proj.norm() > GEN_TOL {
                m -= q * proj;
            }
        }
        let norm = trace_product(&m, &m).re / kappa;
        out.push(m * Complex64::new(1.0 / norm.sqrt(), 0.0));
    }
    out
}

pub fn build_algebra(spec: &AlgebraSpec) -> Result<GeneratorSet> {
    let (matrices, kappa, convention) = match spec.family {
        Family::A => (su_generators(spec.defining_dim), 0.5, Convention::Hermitian),
        Family::B | Family::D => (orthonormalize(so_generators(spec.defining_dim), -2.0), -2.0, Convention::Antihermitian),
        Family::C => (orthonormalize(usp_generators(spec.rank), -2.0), -2.0, Convention::Antihermitian),
    };
    let g = GeneratorSet { spec: spec.clone(), matrices, kappa, convention };
    validate(&g)?;
    Ok(g)
}

fn validate(g: &GeneratorSet) -> Result<()> {
    let r = g.dim();
    if r != g.spec.adjoint_dim {
        return Err(LieError::Convention(format!("built {r} generators, expected {}", g.spec.adjoint_dim)));
    }
    let e = eta(&g.spec);
    for (i, x) in g.matrices.iter().enumerate() {
        if x.trace().norm() > GEN_TOL {
            return Err(LieError::Convention(format!("generator {} is not traceless", i + 1)));
        }
        let adj = x.adjoint();
        let dev = match g.convention {
            Convention::Hermitian => (x - &adj).camax(),
            Convention::Antihermitian => (x + &adj).camax(),
        };
        if dev > GEN_TOL {
            return Err(LieError::Convention(format!("generator {} has the wrong hermiticity", i + 1)));
        }
        if g.spec.family != Family::A && (x * &e + &e * x.transpose()).camax() > GEN_TOL {
            return Err(LieError::Convention(format!("generator {} does not preserve the metric", i + 1)));
        }
        for (j, y) in g.matrices.iter().enumerate() {
            let t = trace_product(x, y);
            let want = if i == j { g.kappa } else { 0.0 };
            if (t - Complex64::new(want, 0.0)).norm() > 1e-10 {
                return Err(LieError::Convention(format!("trace form fails at ({}, {})", i + 1, j + 1)));
            }
        }
    }
    Ok(())
}
