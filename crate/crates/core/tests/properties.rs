use lieinv::combinat::{multiset_rank, multisets, perm_sign, strict_rank, strict_tuples};
use lieinv::duality::{hodge_dual, inner, normalize_cocycle, wedge};
use lieinv::invariants::{eval_polynomial, pfaffian, sym_trace_tensor};
use lieinv::io::{parse_text, to_text, AnyTensor};
use lieinv::{build_algebra, AlgebraSpec, AltTensor, SymTensor};
use nalgebra::DMatrix;
use proptest::prelude::*;

/// Random sparse antisymmetric tensor of the given order over `dim` indices.
fn alt_tensor(order: usize, dim: usize) -> impl Strategy<Value = AltTensor> {
    let tuples: Vec<Vec<u8>> = strict_tuples(dim, order).map(|k| k.to_vec()).collect();
    let n = tuples.len();
    prop::collection::vec((0..n, -4.0f64..4.0), 1..12).prop_map(move |picks| {
        let mut t = AltTensor::zeros(order, dim);
        for (i, v) in picks {
            let idx: Vec<usize> = tuples[i].iter().map(|&x| x as usize).collect();
            t.set(&idx, v);
        }
        t
    })
}

fn sym_tensor(order: usize, dim: usize) -> impl Strategy<Value = SymTensor> {
    let keys: Vec<Vec<u8>> = multisets(dim, order).map(|k| k.to_vec()).collect();
    let n = keys.len();
    prop::collection::vec((0..n, prop::num::f64::NORMAL), 1..20).prop_map(move |picks| {
        let mut t = SymTensor::zeros(order, dim);
        for (i, v) in picks {
            let idx: Vec<usize> = keys[i].iter().map(|&x| x as usize).collect();
            t.set(&idx, v);
        }
        t
    })
}

fn inversions(w: &[u8]) -> i32 {
    let mut count = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] == w[j] {
                return 0;
            }
            if w[i] > w[j] {
                count += 1;
            }
        }
    }
    if count % 2 == 0 {
        1
    } else {
        -1
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn double_dual_sign(a in (1usize..5).prop_flat_map(|q| alt_tensor(q, 7))) {
        let q = a.order();
        let back = hodge_dual(&hodge_dual(&a));
        let sign = if (q * (7 - q)) % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!(back.max_abs_diff(&a.scaled(sign)) < 1e-14);
    }

    #[test]
    fn dual_is_an_isometry((a, b) in (1usize..6).prop_flat_map(|q| (alt_tensor(q, 8), alt_tensor(q, 8)))) {
        let lhs = inner(&hodge_dual(&a), &hodge_dual(&b)).unwrap();
        let rhs = inner(&a, &b).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-12 * (1.0 + rhs.abs()));
    }

    #[test]
    fn wedge_with_dual_is_inner_times_volume((a, b) in (1usize..5).prop_flat_map(|q| (alt_tensor(q, 6), alt_tensor(q, 6)))) {
        let top = wedge(&a, &hodge_dual(&b)).unwrap();
        let vol = top.get(&[0, 1, 2, 3, 4, 5]);
        prop_assert!((vol - inner(&a, &b).unwrap()).abs() < 1e-12 * (1.0 + vol.abs()));
    }

    #[test]
    fn wedge_is_graded_commutative((a, b) in (alt_tensor(2, 7), alt_tensor(3, 7))) {
        let ab = wedge(&a, &b).unwrap();
        let ba = wedge(&b, &a).unwrap();
        prop_assert!(ab.max_abs_diff(&ba) < 1e-12);
        let c = alt_tensor_fixed();
        let x = wedge(&wedge(&a, &b).unwrap(), &c).unwrap();
        let y = wedge(&a, &wedge(&b, &c).unwrap()).unwrap();
        prop_assert!(x.max_abs_diff(&y) < 1e-12);
    }

    #[test]
    fn normalize_is_idempotent(a in alt_tensor(3, 8)) {
        prop_assume!(inner(&a, &a).unwrap() > 1e-12);
        let once = normalize_cocycle(&a).unwrap();
        let twice = normalize_cocycle(&once).unwrap();
        prop_assert!((inner(&once, &once).unwrap() - 1.0).abs() < 1e-14);
        prop_assert!(once.max_abs_diff(&twice) < 1e-15);
    }

    #[test]
    fn text_round_trip_is_bit_exact(t in (1usize..5).prop_flat_map(|m| sym_tensor(m, 9)), a in (1usize..5).prop_flat_map(|q| alt_tensor(q, 9))) {
        for any in [AnyTensor::from(t.clone()), AnyTensor::from(a.clone())] {
            let text = to_text(&any, "su(3)", true);
            let back = parse_text(&text).unwrap();
            prop_assert_eq!(&back.algebra, "su(3)");
            let (x, y) = (any.entries(), back.tensor.entries());
            prop_assert_eq!(x.len(), y.len());
            for ((kx, vx), (ky, vy)) in x.iter().zip(&y) {
                prop_assert_eq!(kx, ky);
                prop_assert_eq!(vx.to_bits(), vy.to_bits());
            }
            prop_assert_eq!(to_text(&back.tensor, "su(3)", true), text);
        }
    }

    #[test]
    fn perm_sign_counts_inversions(w in prop::collection::vec(0u8..9, 0..9)) {
        prop_assert_eq!(perm_sign(&w), inversions(&w));
    }

    #[test]
    fn pfaffian_squares_to_determinant(n in 1usize..5, seed in prop::collection::vec(-2.0f64..2.0, 64)) {
        let size = 2 * n;
        let mut m = DMatrix::zeros(size, size);
        let mut k = 0;
        for i in 0..size {
            for j in i + 1..size {
                m[(i, j)] = seed[k % seed.len()] + 0.1 * k as f64;
                m[(j, i)] = -m[(i, j)];
                k += 1;
            }
        }
        let pf = pfaffian(&m);
        let det = m.determinant();
        prop_assert!((pf * pf - det).abs() < 1e-9 * (1.0 + det.abs()));
    }

    #[test]
    fn symmetric_trace_evaluates_to_matrix_power(lambda in prop::collection::vec(-1.0f64..1.0, 15), m in 2usize..6) {
        let g = build_algebra(&AlgebraSpec::su(4).unwrap()).unwrap();
        let k = sym_trace_tensor(&g, m).unwrap();
        let x = g.combine(&lambda);
        let mut p = x.clone();
        for _ in 1..m {
            p = &p * &x;
        }
        let want = p.trace().re;
        prop_assert!((eval_polynomial(&k, &lambda) - want).abs() < 1e-12 * (1.0 + want.abs()));
    }
}

fn alt_tensor_fixed() -> AltTensor {
    let mut c = AltTensor::zeros(1, 7);
    c.set(&[0], 0.5);
    c.set(&[4], -1.25);
    c
}

#[test]
fn ranks_are_dense_in_colex_order() {
    let colex = |mut v: Vec<lieinv::combinat::Index>| {
        v.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
        v
    };
    for (i, k) in colex(multisets(6, 3).collect()).iter().enumerate() {
        assert_eq!(multiset_rank(k), i);
    }
    for (i, k) in colex(strict_tuples(7, 4).collect()).iter().enumerate() {
        assert_eq!(strict_rank(k), i);
    }
}
