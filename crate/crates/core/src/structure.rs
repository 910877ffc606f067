//! Structure constants, the symmetric d tensor and the adjoint F/D matrices.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::algebra::{trace_product, CMat, Convention, Family, GeneratorSet};
use crate::combinat::Index;
use crate::error::{LieError, Result};
use crate::tensor::{AltTensor, SymTensor};

const REAL_TOL: f64 = 1e-10;

/// f_ijk from Tr([X_i, X_j] X_k), real and totally antisymmetric.
pub fn structure_constants(g: &GeneratorSet) -> Result<AltTensor> {
    let r = g.dim();
    let scale = match g.convention {
        Convention::Hermitian => Complex64::new(0.0, -1.0 / g.kappa),
        Convention::Antihermitian => Complex64::new(1.0 / g.kappa, 0.0),
    };
    let mut full = vec![0.0; r * r * r];
    for i in 0..r {
        for j in 0..r {
            let comm: CMat = &g.matrices[i] * &g.matrices[j] - &g.matrices[j] * &g.matrices[i];
            for k in 0..r {
                let v = trace_product(&comm, &g.matrices[k]) * scale;
                if v.im.abs() > REAL_TOL {
                    return Err(LieError::Convention(format!("f_{},{},{} is not real", i + 1, j + 1, k + 1)));
                }
                full[(i * r + j) * r + k] = v.re;
            }
        }
    }
    let mut f = AltTensor::zeros(3, r);
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let v = full[(i * r + j) * r + k];
                let checks = [full[(j * r + i) * r + k], full[(i * r + k) * r + j], full[(k * r + j) * r + i]];
                if checks.iter().any(|w| (v + w).abs() > REAL_TOL) {
                    return Err(LieError::Convention(format!("f is not antisymmetric at {},{},{}", i + 1, j + 1, k + 1)));
                }
                if i < j && j < k {
                    f.set_sorted([i as u8, j as u8, k as u8].into_iter().collect(), v);
                }
            }
        }
    }
    Ok(f)
}

/// d_ijk = (1/kappa) Tr({T_i, T_j} T_k) for su(n).
pub fn d_tensor(g: &GeneratorSet) -> Result<SymTensor> {
    if g.spec.family != Family::A {
        return Err(LieError::UnsupportedFamily { op: "d_tensor", family: g.spec.family.letter() });
    }
    let r = g.dim();
    let mut d = SymTensor::zeros(3, r);
    for i in 0..r {
        for j in i..r {
            let anti: CMat = &g.matrices[i] * &g.matrices[j] + &g.matrices[j] * &g.matrices[i];
            for k in 0..r {
                let v = trace_product(&anti, &g.matrices[k]) / g.kappa;
                if v.im.abs() > REAL_TOL {
                    return Err(LieError::Convention(format!("d_{},{},{} is not real", i + 1, j + 1, k + 1)));
                }
                if k >= j {
                    d.set(&[i, j, k], v.re);
                } else if (d.get(&[i, j, k]) - v.re).abs() > REAL_TOL {
                    return Err(LieError::Convention(format!("d is not symmetric at {},{},{}", i + 1, j + 1, k + 1)));
                }
            }
        }
    }
    Ok(d)
}

/// (F_a)_bc = f_bac.
pub fn adjoint_f(f: &AltTensor) -> Vec<DMatrix<f64>> {
    let r = f.dim();
    let mut out = vec![DMatrix::zeros(r, r); r];
    for (k, v) in f.iter() {
        let (i, j, l) = (k[0] as usize, k[1] as usize, k[2] as usize);
        for (b, a, c, s) in [(i, j, l, 1.0), (j, l, i, 1.0), (l, i, j, 1.0), (j, i, l, -1.0), (i, l, j, -1.0), (l, j, i, -1.0)] {
            out[a][(b, c)] = s * v;
        }
    }
    out
}

/// (D_a)_bc = d_abc.
pub fn adjoint_d(d: &SymTensor) -> Vec<DMatrix<f64>> {
    let r = d.dim();
    let mut out = vec![DMatrix::zeros(r, r); r];
    for (k, v) in d.iter() {
        let (i, j, l) = (k[0] as usize, k[1] as usize, k[2] as usize);
        for (a, b, c) in [(i, j, l), (i, l, j), (j, i, l), (j, l, i), (l, i, j), (l, j, i)] {
            out[a][(b, c)] = v;
        }
    }
    out
}

/// Adjoint representation as complex matrices in the same convention as
/// the defining generators: i F_a for hermitian, F_a for antihermitian.
pub fn adjoint_rep(f: &AltTensor, convention: Convention) -> Vec<CMat> {
    let factor = match convention {
        Convention::Hermitian => Complex64::new(0.0, 1.0),
        Convention::Antihermitian => Complex64::new(1.0, 0.0),
    };
    adjoint_f(f).into_iter().map(|m| m.map(|x| Complex64::new(x, 0.0) * factor)).collect()
}

/// Fast lookup of the brackets C_ab^l = f_abl: for every ordered pair the
/// short list of nonzero (l, C_ab^l), plus a dense copy of f.
pub struct Brackets {
    pub dim: usize,
    pairs: Vec<Vec<(u8, f64)>>,
    dense: Vec<f64>,
}

impl Brackets {
    pub fn new(f: &AltTensor) -> Self {
        let r = f.dim();
        let mut dense = vec![0.0; r * r * r];
        let mut pairs = vec![Vec::new(); r * r];
        for (k, v) in f.iter() {
            let (i, j, l) = (k[0] as usize, k[1] as usize, k[2] as usize);
            for (a, b, c, s) in [(i, j, l, 1.0), (j, l, i, 1.0), (l, i, j, 1.0), (j, i, l, -1.0), (i, l, j, -1.0), (l, j, i, -1.0)] {
                dense[(a * r + b) * r + c] = s * v;
                pairs[a * r + b].push((c as u8, s * v));
            }
        }
        for p in &mut pairs {
            p.sort_by_key(|x| x.0);
        }
        Brackets { dim: r, pairs, dense }
    }

    /// Nonzero (l, C_ab^l).
    #[inline]
    pub fn pair(&self, a: u8, b: u8) -> &[(u8, f64)] {
        &self.pairs[a as usize * self.dim + b as usize]
    }

    #[inline]
    pub fn f(&self, a: usize, b: usize, c: usize) -> f64 {
        self.dense[(a * self.dim + b) * self.dim + c]
    }

    /// For each l, all ordered pairs (a, b) with C_ab^l nonzero.
    pub fn by_target(&self) -> Vec<Vec<(u8, u8, f64)>> {
        let r = self.dim;
        let mut out = vec![Vec::new(); r];
        for a in 0..r {
            for b in 0..r {
                for &(l, v) in self.pair(a as u8, b as u8) {
                    out[l as usize].push((a as u8, b as u8, v));
                }
            }
        }
        out
    }
}

/// Jacobi residual: max |C_ij^s C_sk^t + C_jk^s C_si^t + C_ki^s C_sj^t|.
pub fn jacobi_residual(f: &AltTensor) -> f64 {
    let b = Brackets::new(f);
    let r = f.dim();
    let mut worst: f64 = 0.0;
    let mut acc = vec![0.0; r];
    for i in 0..r {
        for j in i + 1..r {
            for k in j + 1..r {
                acc.iter_mut().for_each(|x| *x = 0.0);
                for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                    for &(s, c1) in b.pair(x as u8, y as u8) {
                        for &(t, c2) in b.pair(s, z as u8) {
                            acc[t as usize] += c1 * c2;
                        }
                    }
                }
                worst = acc.iter().fold(worst, |m, v| m.max(v.abs()));
            }
        }
    }
    worst
}

/// Sparse d lookups: for each pair (a, b), the nonzero (c, d_abc).
pub struct SymPairs {
    pub dim: usize,
    pairs: Vec<Vec<(u8, f64)>>,
}

impl SymPairs {
    pub fn new(d: &SymTensor) -> Self {
        assert_eq!(d.order(), 3);
        let r = d.dim();
        let mut pairs = vec![Vec::new(); r * r];
        for (k, v) in d.iter() {
            let mut perms: Vec<Index> = Vec::new();
            for (a, b, c) in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)] {
                let p: Index = [k[a], k[b], k[c]].into_iter().collect();
                if !perms.contains(&p) {
                    perms.push(p);
                }
            }
            for p in perms {
                pairs[p[0] as usize * r + p[1] as usize].push((p[2], v));
            }
        }
        for p in &mut pairs {
            p.sort_by_key(|x| x.0);
        }
        SymPairs { dim: r, pairs }
    }

    #[inline]
    pub fn pair(&self, a: u8, b: u8) -> &[(u8, f64)] {
        &self.pairs[a as usize * self.dim + b as usize]
    }
}

/// max over a, b of |[X_a, X_b] - phi f_abc X_c| with phi = i for hermitian
/// generators and 1 otherwise.
pub fn rep_residual(rep: &[CMat], f: &AltTensor, convention: Convention) -> f64 {
    let b = Brackets::new(f);
    let phi = match convention {
        Convention::Hermitian => Complex64::new(0.0, 1.0),
        Convention::Antihermitian => Complex64::new(1.0, 0.0),
    };
    let mut worst: f64 = 0.0;
    for x in 0..rep.len() {
        for y in x + 1..rep.len() {
            let mut m: CMat = &rep[x] * &rep[y] - &rep[y] * &rep[x];
            for &(l, c) in b.pair(x as u8, y as u8) {
                m -= &rep[l as usize] * (phi * c);
            }
            worst = m.iter().fold(worst, |w, z| w.max(z.norm()));
        }
    }
    worst
}
