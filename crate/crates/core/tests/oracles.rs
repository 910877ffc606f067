//! Library results against direct, slow computations.

use lieinv::cocycles::{cocycle_from_sym, proportionality_alt};
use lieinv::combinat::{matchings, multisets};
use lieinv::invariants::{eval_polynomial, pfaffian, pfaffian_tensor, sym_trace_tensor};
use lieinv::structure::{adjoint_rep, d_tensor, structure_constants};
use lieinv::ttensor::{casimir_matrix, su_t_tensor};
use lieinv::{build_algebra, AlgebraSpec, GeneratorSet, SymTensor};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn algebra(label: &str) -> GeneratorSet {
    build_algebra(&AlgebraSpec::parse(label).unwrap()).unwrap()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// (1/m!) sum over orderings of Tr(X_i1 ... X_im).
fn brute_sym_trace(g: &GeneratorSet, key: &[u8]) -> Complex64 {
    let perms = permutations(key.len());
    let n = g.n();
    let mut total = Complex64::new(0.0, 0.0);
    for p in &perms {
        let mut prod = nalgebra::DMatrix::<Complex64>::identity(n, n);
        for &i in p {
            prod = prod * &g.matrices[key[i] as usize];
        }
        total += prod.trace();
    }
    total / perms.len() as f64
}

#[test]
fn symmetric_traces_match_permutation_sums() {
    for (label, m) in [("su3", 3), ("su3", 4), ("su2", 4), ("so5", 4), ("sp3", 4), ("so8", 3)] {
        let g = algebra(label);
        let k = sym_trace_tensor(&g, m).unwrap();
        let mut worst: f64 = 0.0;
        for key in multisets(g.dim(), m) {
            let want = brute_sym_trace(&g, &key);
            assert!(want.im.abs() < 1e-12, "{label} trace is not real");
            worst = worst.max((k.get_sorted(&key) - want.re).abs());
        }
        assert!(worst < 1e-13, "{label} order {m}: {worst:e}");
    }
}

#[test]
fn d_is_four_times_the_cubic_trace() {
    // T = lambda/2, so d_abc = (1/4) Tr({lambda_a, lambda_b} lambda_c) = 4 Tr(T_(a T_b T_c))
    for n in 3..=5 {
        let g = build_algebra(&AlgebraSpec::su(n).unwrap()).unwrap();
        let d = d_tensor(&g).unwrap();
        let k3 = sym_trace_tensor(&g, 3).unwrap();
        assert!(d.max_abs_diff(&k3.scaled(4.0)) < 1e-13, "su({n})");
    }
}

#[test]
fn quadratic_casimirs() {
    for n in 2..=5 {
        let g = build_algebra(&AlgebraSpec::su(n).unwrap()).unwrap();
        let f = structure_constants(&g).unwrap();
        let delta = SymTensor::delta(g.dim());
        let nf = n as f64;
        let fund = casimir_matrix(&delta, &g.matrices).unwrap();
        assert!((fund.scalar.re - (nf * nf - 1.0) / (2.0 * nf)).abs() < 1e-13 && fund.off_scalar < 1e-13);
        let adj = casimir_matrix(&delta, &adjoint_rep(&f, g.convention)).unwrap();
        assert!((adj.scalar.re - nf).abs() < 1e-12 && adj.off_scalar < 1e-12);
    }
}

#[test]
fn t2_is_n_times_the_metric() {
    for n in 2..=4 {
        let g = build_algebra(&AlgebraSpec::su(n).unwrap()).unwrap();
        let f = structure_constants(&g).unwrap();
        let t2 = su_t_tensor(&g, &f, 2).unwrap();
        assert!(t2.max_abs_diff(&SymTensor::delta(g.dim()).scaled(n as f64)) < 1e-12, "su({n})");
    }
}

#[test]
fn metric_cocycle_is_the_structure_constants() {
    for label in ["su3", "so5", "sp3", "so8"] {
        let g = algebra(label);
        let f = structure_constants(&g).unwrap();
        let c = cocycle_from_sym(&f, &SymTensor::delta(g.dim())).unwrap();
        let (k, dev) = proportionality_alt(&c, &f).unwrap();
        assert!(k != 0.0 && dev < 1e-12, "{label}: {k} {dev}");
    }
}

fn leibniz_pfaffian(m: &DMatrix<f64>) -> f64 {
    matchings(m.nrows())
        .iter()
        .map(|mt| mt.sign as f64 * mt.pairs.iter().map(|&(a, b)| m[(a as usize, b as usize)]).product::<f64>())
        .sum()
}

#[test]
fn pfaffian_matches_the_matching_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for size in [2usize, 4, 6, 8] {
        for _ in 0..10 {
            let mut m = DMatrix::zeros(size, size);
            for i in 0..size {
                for j in i + 1..size {
                    let v: f64 = rng.random_range(-1.0..1.0);
                    m[(i, j)] = v;
                    m[(j, i)] = -v;
                }
            }
            let (a, b) = (pfaffian(&m), leibniz_pfaffian(&m));
            assert!((a - b).abs() < 1e-12, "{size}: {a} vs {b}");
        }
    }
}

#[test]
fn pfaffian_tensor_is_the_pfaffian_polynomial() {
    // so(2l) generators are real antisymmetric; the tensor's polynomial is
    // a fixed multiple of Pf(sum lambda_a X_a)
    for label in ["so8", "so10"] {
        let g = algebra(label);
        let pf = pfaffian_tensor(&g).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut ratio = None;
        for _ in 0..5 {
            let lambda: Vec<f64> = (0..g.dim()).map(|_| rng.random_range(-1.0..1.0)).collect();
            let x = g.combine(&lambda).map(|z| z.re);
            let want = pfaffian(&x);
            let got = eval_polynomial(&pf, &lambda);
            let r = got / want;
            match ratio {
                None => ratio = Some(r),
                Some(r0) => assert!((r - r0).abs() < 1e-10 * r0.abs(), "{label}: {r} vs {r0}"),
            }
        }
    }
}
