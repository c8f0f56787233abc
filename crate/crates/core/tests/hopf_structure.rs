use hbk_core::eval::verify_relations;
use hbk_core::hopf::*;
use hbk_core::scalar::Scalar;
use hbk_core::tangle::RelationCatalogue;
use hbk_core::zoo::*;

fn int(k: i64) -> Scalar {
    Scalar::int(k)
}

fn kg(name: &str) -> HopfPresentation {
    group_algebra(&builtin_group(name).unwrap()).unwrap().0
}

#[test]
fn zoo_presentations_are_hopf_algebras() {
    let mut algebras: Vec<HopfPresentation> = ["Z2", "Z3", "Z6", "S3", "D4"].iter().map(|g| kg(g)).collect();
    for g in ["Z2", "S3"] {
        algebras.push(quantum_double(&builtin_group(g).unwrap()).unwrap().0);
    }
    algebras.push(kac_b4m(3).unwrap().0);
    algebras.push(uq_sl2(3).unwrap().0);
    algebras.push(uq_sl2(4).unwrap().0);
    for h in &algebras {
        let r = verify_hopf(h);
        assert!(r.all_passed(), "{}: {r}", h.name());
    }
}

#[test]
fn corrupted_product_breaks_associativity() {
    let mut data = kg("Z6").to_data();
    // g·g = g³ instead of g²
    data.mult[6 + 1] = SparseVec::basis(3, 1);
    let h = HopfPresentation::new(data).unwrap();
    let r = verify_hopf(&h);
    let assoc = r.get("associativity").unwrap();
    assert!(!assoc.passed());
    assert!(assoc.failures.iter().any(|f| f.starts_with("triple (")), "{:?}", assoc.failures.first());
}

#[test]
fn malformed_presentations_are_rejected() {
    let mut data = kg("Z3").to_data();
    data.mult.pop();
    assert!(matches!(HopfPresentation::new(data), Err(HopfError::Malformed(_))));
    let mut data = kg("Z3").to_data();
    data.comult[0] = vec![(0, 7, int(1))];
    assert!(matches!(HopfPresentation::new(data), Err(HopfError::Malformed(_))));
}

#[test]
fn integrals_of_cyclic_group() {
    let h = kg("Z3");
    let ints = compute_integrals(&h).unwrap();
    assert!(ints.unimodular && ints.cosemisimple);
    assert_eq!(ints.lambda, vec![int(1), int(0), int(0)]);
    assert_eq!(ints.big_lambda, SparseVec::from_pairs((0..3).map(|i| (i, int(1)))));
}

#[test]
fn integrals_of_small_quantum_group() {
    let u = uq_sl2_root(3, 1).unwrap();
    let ints = compute_integrals(&u.hopf).unwrap();
    assert!(ints.unimodular);
    assert!(!ints.cosemisimple);
    let p = u.params;
    let top = p.index(0, 2, 2);
    for (i, l) in ints.lambda.iter().enumerate() {
        assert_eq!(*l, int((i == top) as i64), "λ at {}", p.label(i));
    }
    let expected: SparseVec = (0..3).map(|i| (p.index(i, 2, 2), Scalar::one(3))).collect();
    assert_eq!(ints.big_lambda, expected);
}

#[test]
fn double_normalization() {
    let h = quantum_double(&builtin_group("Z2").unwrap()).unwrap().0;
    let ints = compute_integrals(&h).unwrap();
    assert!(ints.cosemisimple);
    let mut at_one = int(0);
    for (k, u) in h.unit().iter() {
        at_one.add_mul(u, &ints.lambda[*k]);
    }
    assert!(at_one.is_one());
    // raw λ(a⊗e_g) = δ_{1,a} has λ(1) = 2, so the normalized Λ is doubled
    let b = build_qcqs(h.clone().into_shared(), ints).unwrap();
    assert_eq!(b.integrals().lambda_of(b.big_lambda()), int(1));
}

#[test]
fn group_center_has_class_number_dimension() {
    assert_eq!(center(&kg("S3")).len(), 3);
    assert_eq!(center(&kg("D4")).len(), 5);
    assert_eq!(center(&kg("Z6")).len(), 6);
}

#[test]
fn group_bundle_closed_forms() {
    let b = prepare(kg("Z3")).unwrap();
    assert_eq!(*b.ev(1, 2), int(1));
    assert_eq!(*b.ev(1, 1), int(0));
    let coev: SparseVec = (0..3).map(|g| (g * 3 + (3 - g) % 3, int(1))).collect();
    assert_eq!(*b.coev(), coev);

    let g = builtin_group("S3").unwrap();
    let b = prepare(group_algebra(&g).unwrap().0).unwrap();
    for x in 0..6 {
        for y in 0..6 {
            let conj = g.mul(g.mul(x, y), g.inv(x));
            assert_eq!(*b.braid_basis(x, y), SparseVec::basis(conj * 6 + x, 1));
        }
    }
}

#[test]
fn yd_suites_pass() {
    for h in [kg("S3"), kac_b4m(3).unwrap().0, uq_sl2(4).unwrap().0] {
        let name = h.name().to_string();
        let b = prepare(h).unwrap();
        let r = verify_yd(&b);
        assert!(r.all_passed(), "{name}: {r}");
    }
}

#[test]
fn flip_braiding_breaks_quantum_commutativity() {
    let b = prepare(kg("S3")).unwrap();
    let d = b.dim();
    let flip: Vec<SparseVec> = (0..d * d).map(|p| SparseVec::basis((p % d) * d + p / d, 1)).collect();
    let bad = b.with_braiding(flip.clone(), flip);
    let r = verify_relations(&bad, &RelationCatalogue::standard());
    assert!(!r.get("new5").unwrap().passed(), "{r}");
    assert!(!r.get("old8").unwrap().passed(), "{r}");
    // λ(gh) = λ(hg) on kG, so ∩∘X = ∩ survives the flip
    assert!(r.get("new2").unwrap().passed(), "{r}");
}

#[test]
fn non_integral_pairing_is_detected() {
    let b = prepare(kg("S3")).unwrap();
    let mut l = vec![int(0); 6];
    l[0] = int(1);
    l[1] = int(1);
    let bad = b.with_pairing_functional(l);
    let r = verify_yd(&bad);
    assert!(!r.all_passed());
    assert!(!r.get("ev_colinear").unwrap().passed(), "{r}");
    // ev∘c(g⊗h) = λ′(ghg⁻¹g) = λ′(gh) for every λ′, so this check cannot see the fault on kG
    assert!(r.get("quantum_symmetry").unwrap().passed());
}

#[test]
fn raw_file_roundtrip() {
    for h in [kg("S3"), uq_sl2(3).unwrap().0, kac_b4m(3).unwrap().0] {
        let text = write_hopf(&h);
        let back = read_hopf(&text).unwrap();
        assert!(back.same_structure(&h), "{}", h.name());
        assert_eq!(back.labels(), h.labels());
        assert_eq!(back.conductor(), h.conductor());
    }
}

#[test]
fn raw_file_errors() {
    assert!(read_hopf("").is_err());
    let e = read_hopf("hopf v1 dim=2 conductor=1\nMULT\n0 0 -> 5 : 1\n").unwrap_err();
    assert_eq!(e.line, 3);
    let text = write_hopf(&kg("Z2")).replace("1 1 -> 0 : 1", "1 1 -> 1 : 1");
    let broken = read_hopf(&text).unwrap();
    assert!(!verify_hopf(&broken).all_passed());
}
