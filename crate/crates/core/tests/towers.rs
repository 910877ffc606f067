use lieinv::cocycles::{check_invariance, cocycle_from_sym, omega5, omega7_su, proportionality_alt, recurrence_su};
use lieinv::duality::check_duality;
use lieinv::identities::{cayley_hamilton_check, trace_identity_suite};
use lieinv::invariants::primitive_tensors;
use lieinv::structure::{d_tensor, structure_constants};
use lieinv::ttensor::{casimir_relation_check, closed_form_k, k_scalar, orthogonality_check, su_t_tensor, t_explicit_check, trace_residual, ClosedForm};
use lieinv::{build_algebra, AlgebraSpec, AltTensor};

fn all_pass(reps: &[lieinv::report::IdentityReport]) {
    for r in reps {
        assert!(r.pass, "{} [{}]: {:e} ({})", r.name, r.algebra, r.max_residual, r.details);
    }
}

#[test]
fn su4_tower_is_dual_and_orthogonal() {
    let g = build_algebra(&AlgebraSpec::su(4).unwrap()).unwrap();
    let f = structure_constants(&g).unwrap();
    let mut cocycles = Vec::new();
    let mut ts = Vec::new();
    for (name, h) in primitive_tensors(&g).unwrap() {
        let c = cocycle_from_sym(&f, &h).unwrap();
        assert!(check_invariance(&c, &f).unwrap() < 1e-10, "{name}");
        let t = su_t_tensor(&g, &f, h.order()).unwrap();
        if t.order() > 2 {
            assert!(trace_residual(&t) < 1e-10);
        }
        match closed_form_k(t.order(), 4) {
            Some(ClosedForm::Value(v)) => assert!((k_scalar(&t).abs() - v).abs() < 1e-9 * v.max(1.0), "K^({})", t.order()),
            other => panic!("no closed form for order {}: {other:?}", t.order()),
        }
        cocycles.push(c);
        ts.push(t);
    }
    assert_eq!(cocycles.iter().map(AltTensor::order).collect::<Vec<_>>(), [3, 5, 7]);
    let refs: Vec<_> = ts.iter().collect();
    assert!(orthogonality_check(&refs).unwrap() < 1e-10);
    all_pass(&check_duality(&cocycles, "su(4)", 1e-10).unwrap());
}

#[test]
fn omega7_constructions_agree() {
    let g = build_algebra(&AlgebraSpec::su(4).unwrap()).unwrap();
    let f = structure_constants(&g).unwrap();
    let d = d_tensor(&g).unwrap();
    let o5 = omega5(&f, &d).unwrap();
    let o7 = omega7_su(&f, &d).unwrap();
    let k4 = lieinv::invariants::tower_tensor(&g, 4).unwrap();
    for other in [recurrence_su(&o5, &f, &d).unwrap(), cocycle_from_sym(&f, &k4).unwrap()] {
        let (c, dev) = proportionality_alt(&other, &o7).unwrap();
        assert!(c != 0.0 && dev < 1e-10, "{c} {dev}");
    }
    assert_eq!(o7.nnz(), 349);
}

#[test]
fn explicit_t_tensors() {
    for n in [3, 4] {
        all_pass(&t_explicit_check(n, 1e-10).unwrap());
    }
}

#[test]
fn casimir_relations() {
    for n in [3, 4] {
        let reps = casimir_relation_check(n, 1e-9).unwrap();
        assert!(!reps.is_empty());
        all_pass(&reps);
    }
    assert!(casimir_relation_check(5, 1e-9).is_err());
}

#[test]
fn trace_identities_su3_su4() {
    for n in [3, 4] {
        let reps = trace_identity_suite(n, 1e-10).unwrap();
        assert!(reps.iter().any(|r| r.name.contains("d5")), "d5.d5 missing for su({n})");
        all_pass(&reps);
    }
}

#[test]
fn partition_identities_are_seeded() {
    let g = build_algebra(&AlgebraSpec::parse("so8").unwrap()).unwrap();
    let a = cayley_hamilton_check(&g, 5, 3, 1e-9).unwrap();
    let b = cayley_hamilton_check(&g, 5, 3, 1e-9).unwrap();
    all_pass(&a);
    assert_eq!(a.iter().map(|r| r.max_residual.to_bits()).collect::<Vec<_>>(), b.iter().map(|r| r.max_residual.to_bits()).collect::<Vec<_>>());
    assert!(a.iter().any(|r| r.name.contains("Pf")));
}

#[test]
fn orders_outside_the_tower_are_rejected() {
    let g = build_algebra(&AlgebraSpec::su(3).unwrap()).unwrap();
    let f = structure_constants(&g).unwrap();
    let h = lieinv::SymTensor::delta(8);
    assert!(lieinv::ttensor::t_tensor(&f.scaled(0.0), &f).unwrap().is_empty());
    assert!(lieinv::ttensor::t_tensor(&AltTensor::zeros(4, 8), &f).is_err());
    assert!(cocycle_from_sym(&f, &h).is_ok());
}
