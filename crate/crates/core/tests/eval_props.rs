use hbk_core::eval::*;
use hbk_core::hopf::*;
use hbk_core::scalar::Scalar;
use hbk_core::tangle::random::{random_closed, random_expr, random_rewrite};
use hbk_core::tangle::*;
use hbk_core::zoo::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

fn group_bundle(name: &str) -> QcqsBundle {
    prepare(group_algebra(&builtin_group(name).unwrap()).unwrap().0).unwrap()
}

fn ks3() -> &'static QcqsBundle {
    static B: OnceLock<QcqsBundle> = OnceLock::new();
    B.get_or_init(|| group_bundle("S3"))
}

fn b12() -> &'static QcqsBundle {
    static B: OnceLock<QcqsBundle> = OnceLock::new();
    B.get_or_init(|| prepare(kac_b4m(3).unwrap().0).unwrap())
}

fn p(s: &str) -> TangleExpr {
    parse(s).unwrap()
}

/// Number of homomorphisms F_g → G, by listing all g-tuples of elements.
fn hom_count(g: &GroupTable, rank: u32) -> usize {
    let n = g.order();
    let mut count = 0;
    let mut tuple = vec![0usize; rank as usize];
    loop {
        // F_g is free, so every tuple of generator images extends uniquely
        count += 1;
        let mut pos = 0;
        loop {
            if pos == tuple.len() {
                return count;
            }
            tuple[pos] += 1;
            if tuple[pos] < n {
                break;
            }
            tuple[pos] = 0;
            pos += 1;
        }
    }
}

#[test]
fn generator_maps_on_cyclic_group() {
    let b = group_bundle("Z3");
    let one = Scalar::int(1);
    let cap = generator_map(&b, Gen::Cap);
    assert_eq!(cap.arity(), (2, 0));
    for x in 0..3 {
        for y in 0..3 {
            let expected = ((x + y) % 3 == 0) as i64;
            assert_eq!(cap.column(x * 3 + y).get(0).cloned().unwrap_or(Scalar::int(0)), Scalar::int(expected));
        }
    }
    let cup = generator_map(&b, Gen::Cup);
    let coev: SparseVec = (0..3).map(|g| (g * 3 + (3 - g) % 3, one.clone())).collect();
    assert_eq!(*cup.column(0), coev);
    let mu = generator_map(&b, Gen::Mu);
    assert_eq!(*mu.column(3 + 2), SparseVec::basis(0, 1));
    let x = generator_map(&b, Gen::X);
    assert_eq!(*x.column(3 + 2), SparseVec::basis(2 * 3 + 1, 1));
    let nu = generator_map(&b, Gen::Nu);
    assert_eq!(nu, evaluate(&b, &nu_expansion()));
    let id = generator_map(&b, Gen::Id);
    assert_eq!(id, SparseMap::identity(1, 3, 1));
}

#[test]
fn braid_word_matches_hexagon() {
    let b = ks3();
    let d = b.dim();
    let w = evaluate(b, &braid_word(2, 1));
    for s in 0..d * d * d {
        let (a, x, c) = (s / (d * d), (s / d) % d, s % d);
        // c_{A⊗A,A}(a⊗x⊗c) = (c ⊗ id)(id ⊗ c)(a⊗x⊗c)
        let mut out = SparseVec::new();
        for (cx, k) in b.braid_basis(x, c).iter() {
            let (c1, x1) = (cx / d, cx % d);
            for (ca, k2) in b.braid_basis(a, c1).iter() {
                let (c2, a1) = (ca / d, ca % d);
                out = out.add(&SparseVec::basis((c2 * d + a1) * d + x1, 1).scale(&(k * k2)));
            }
        }
        assert_eq!(*w.column(s), out);
    }
}

#[test]
fn cap_cup_tensor_agrees_with_two_layers() {
    let b = ks3();
    assert_eq!(evaluate(b, &p("cap & cup")), evaluate(b, &p("(cap & id & id) . (id & id & cup)")));
    assert_eq!(evaluate(b, &p("cap & cup")), evaluate(b, &p("cup . cap")));
}

#[test]
fn trace_of_s_squared() {
    let cases: Vec<(HopfPresentation, i64)> = vec![
        (group_algebra(&builtin_group("Z3").unwrap()).unwrap().0, 3),
        (group_algebra(&builtin_group("S3").unwrap()).unwrap().0, 6),
        (quantum_double(&builtin_group("Z2").unwrap()).unwrap().0, 4),
        (kac_b4m(3).unwrap().0, 12),
        (kac_b4m(5).unwrap().0, 20),
        (uq_sl2(3).unwrap().0, 0),
        (uq_sl2(4).unwrap().0, 0),
    ];
    for (h, expected) in cases {
        let trace = h.trace_s2();
        let name = h.name().to_string();
        let b = prepare(h).unwrap();
        let f = invariant_f(&b, &trivial_knot()).unwrap().value;
        assert_eq!(f, trace, "{name}");
        assert_eq!(f, Scalar::int(expected), "{name}");
    }
}

#[test]
fn hom_counting_oracle() {
    for name in ["Z2", "Z3", "S3"] {
        let g = builtin_group(name).unwrap();
        let b = group_bundle(name);
        for rank in 1..=3 {
            let v = invariant_v(&b, &genus(rank as usize)).unwrap().value;
            assert_eq!(v, Scalar::int(hom_count(&g, rank) as i64), "{name}, genus {rank}");
        }
    }
    let b = group_bundle("Z3");
    let h = horn(&theta(), 0).unwrap();
    let col = evaluate(&b, &h);
    assert_eq!(b.algebra().counit(col.column(0)), Scalar::int(9));
}

#[test]
fn b4m_table_row() {
    for (m, expected) in [(3, 144), (4, 256), (5, 400)] {
        let b = prepare(kac_b4m(m).unwrap().0).unwrap();
        assert_eq!(invariant_v(&b, &theta()).unwrap().value, Scalar::int(expected), "m = {m}");
    }
}

#[test]
fn disk_sums_multiply() {
    let ht = horn(&theta(), 0).unwrap();
    let s = disk_sum(&ht, &ht).unwrap();
    assert_eq!(invariant_v(b12(), &s).unwrap().value, Scalar::int(20736));
    let b = group_bundle("Z3");
    let ho = horn(&trivial_knot(), 0).unwrap();
    assert_eq!(invariant_v(&b, &disk_sum(&ho, &ho).unwrap()).unwrap().value, Scalar::int(9));
    let bd = prepare(quantum_double(&builtin_group("Z2").unwrap()).unwrap().0).unwrap();
    let oo = disk_sum(&ho, &ho).unwrap();
    assert!(check_horn_independence(&bd, &oo).unwrap());
    let unlink = p("(cap & cap) . (cup & cup)");
    let sweep = horn_sweep(&bd, &unlink).unwrap();
    assert_eq!(sweep.values.len(), 2);
    assert!(sweep.independent());
}

#[test]
fn invariant_errors() {
    let b = ks3();
    assert!(matches!(invariant_f(b, &p("mu")), Err(EvalError::NotClosed(2, 1))));
    assert!(matches!(invariant_v(b, &p("cup")), Err(EvalError::NotHornable(0, 2))));
}

#[test]
fn scaling_laws() {
    for b in [ks3(), b12()] {
        for c in [2, 3] {
            for e in [trivial_knot(), theta()] {
                let s = check_scaling(b, &e, &Scalar::int(c)).unwrap();
                assert!(s.holds(), "{} c = {c} {e}", b.algebra().name());
            }
        }
    }
    let ho = horn(&trivial_knot(), 0).unwrap();
    let s = check_scaling(ks3(), &disk_sum(&ho, &ho).unwrap(), &Scalar::int(3)).unwrap();
    assert_eq!(s.exponent_f, -1);
    assert!(s.holds());
}

#[test]
fn mirror_generators() {
    for b in [ks3(), b12()] {
        let op = opposite_bundle(b).unwrap();
        for g in Gen::ALL {
            assert!(check_mirror(b, &op, &g.into()), "{} {g}", b.algebra().name());
        }
    }
}

#[test]
fn non_cosemisimple_vanishes() {
    let b = prepare(uq_sl2(3).unwrap().0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5 {
        let e = random_closed(&mut rng, 4, 3);
        assert!(invariant_f(&b, &e).unwrap().value.is_zero(), "{e}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn slice_and_tree_evaluation_agree(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_expr(&mut rng, 2, 4, 3);
        let ev = Evaluator::new(ks3());
        prop_assert_eq!(ev.evaluate(&e), ev.evaluate_tree(&e));
        prop_assert_eq!(ev.evaluate(&e), ev.evaluate(&to_slices(&e).to_expr()));
    }

    #[test]
    fn rewrites_do_not_change_the_map(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_expr(&mut rng, 1, 4, 3);
        let mut r = e.clone();
        for _ in 0..3 {
            r = random_rewrite(&mut rng, &r);
        }
        prop_assert_eq!(evaluate(b12(), &e), evaluate(b12(), &r));
    }

    #[test]
    fn mirror_random(seed in any::<u64>()) {
        static OP: OnceLock<QcqsBundle> = OnceLock::new();
        let op = OP.get_or_init(|| opposite_bundle(ks3()).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_expr(&mut rng, 1, 4, 3);
        prop_assert!(check_mirror(ks3(), op, &e));
    }

    #[test]
    fn closed_values_are_horn_independent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_closed(&mut rng, 3, 3);
        prop_assert!(check_horn_independence(ks3(), &e).unwrap());
    }
}
