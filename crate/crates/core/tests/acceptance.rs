//! One line per acceptance criterion. Run with `cargo test --test acceptance`.

use std::time::Instant;

use hbk_core::eval::*;
use hbk_core::hopf::*;
use hbk_core::report::{AxiomReport, Coverage};
use hbk_core::scalar::Scalar;
use hbk_core::tangle::random::{random_closed, random_expr};
use hbk_core::tangle::*;
use hbk_core::zoo::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Entry {
    name: String,
    hopf: AxiomReport,
    expected: ExpectedData,
    bundle: QcqsBundle,
}

fn entry(h: HopfPresentation, expected: ExpectedData) -> Entry {
    let hopf = verify_hopf(&h);
    let ints = compute_integrals(&h).expect("integrals");
    let name = h.name().to_string();
    let bundle = build_qcqs(h.into_shared(), ints).expect("bundle");
    Entry {
        name,
        hopf,
        expected,
        bundle,
    }
}

fn zoo() -> Vec<Entry> {
    let mut out = Vec::new();
    for g in ["Z2", "Z3", "Z6", "S3", "D4"] {
        let (h, e) = group_algebra(&builtin_group(g).unwrap()).unwrap();
        out.push(entry(h, e));
    }
    for g in ["Z2", "S3"] {
        let (h, e) = quantum_double(&builtin_group(g).unwrap()).unwrap();
        out.push(entry(h, e));
    }
    for m in 3..=7 {
        let (h, e) = kac_b4m(m).unwrap();
        out.push(entry(h, e));
    }
    for n in [3, 4, 5] {
        let (h, e) = uq_sl2(n).unwrap();
        out.push(entry(h, e));
    }
    out
}

fn find<'a>(zoo: &'a [Entry], name: &str) -> &'a Entry {
    zoo.iter().find(|e| e.name == name).unwrap_or_else(|| panic!("no {name}"))
}

fn is_uq(e: &Entry) -> bool {
    e.name.starts_with("Uq")
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, ok_detail: String) -> Outcome {
    if failures.is_empty() {
        Outcome {
            pass: true,
            detail: ok_detail,
        }
    } else {
        Outcome {
            pass: false,
            detail: failures.join("; "),
        }
    }
}

fn v(b: &QcqsBundle, e: &TangleExpr) -> Scalar {
    invariant_v(b, e).expect("v").value
}

fn f(b: &QcqsBundle, e: &TangleExpr) -> Scalar {
    invariant_f(b, e).expect("F").value
}

fn c1_axioms(zoo: &[Entry]) -> Outcome {
    let cat = RelationCatalogue::standard();
    let mut fails = Vec::new();
    let mut sampled = 0;
    for e in zoo {
        let yd = verify_yd_with(&e.bundle, Coverage::default());
        let rel = verify_relations_with(&e.bundle, &cat, Coverage::default());
        for (suite, r) in [("hopf", &e.hopf), ("yd", &yd), ("relations", &rel)] {
            sampled += r.checks.iter().filter(|c| c.scope.is_some()).count();
            for name in r.failed_names() {
                fails.push(format!("{} {suite}:{name}", e.name));
            }
        }
        if rel.len() != 17 {
            fails.push(format!("{}: {} relations checked", e.name, rel.len()));
        }
    }
    outcome(fails, format!("{} algebras, 17 relations each, {sampled} sampled checks (Uq n=5)", zoo.len()))
}

fn c2_table(zoo: &[Entry]) -> Outcome {
    let mut fails = Vec::new();
    let mut row = Vec::new();
    for (m, expected) in [(3, 144), (4, 256), (5, 400), (6, 576), (7, 784)] {
        let got = v(&find(zoo, &format!("B{}", 4 * m)).bundle, &theta());
        if got != Scalar::int(expected) {
            fails.push(format!("m={m}: {got} ≠ {expected}"));
        }
        row.push(got.to_string());
    }
    outcome(fails, row.join(", "))
}

fn c3_trace(zoo: &[Entry]) -> Outcome {
    let mut fails = Vec::new();
    for e in zoo {
        let val = f(&e.bundle, &trivial_knot());
        if val != e.bundle.algebra().trace_s2() {
            fails.push(format!("{}: F(O) = {val}, Tr S² = {}", e.name, e.bundle.algebra().trace_s2()));
        }
    }
    let mut concrete: Vec<(&str, i64)> = vec![("kZ3", 3), ("kS3", 6), ("D(kZ2)", 4), ("Uq(n=3)", 0), ("Uq(n=4)", 0), ("Uq(n=5)", 0)];
    let names: Vec<String> = (3..=7).map(|m| format!("B{}", 4 * m)).collect();
    for (m, n) in (3..=7).zip(&names) {
        concrete.push((n, 4 * m));
    }
    for (name, want) in concrete {
        let got = f(&find(zoo, name).bundle, &trivial_knot());
        if got != Scalar::int(want) {
            fails.push(format!("{name}: {got} ≠ {want}"));
        }
    }
    outcome(fails, format!("{} algebras", zoo.len()))
}

/// |Hom(F_g, G)| by enumerating g-tuples of group elements.
fn hom_count(g: &GroupTable, rank: usize) -> usize {
    fn rec(g: &GroupTable, left: usize) -> usize {
        if left == 0 {
            return 1;
        }
        (0..g.order()).map(|_| rec(g, left - 1)).sum()
    }
    rec(g, rank)
}

fn c4_hom(zoo: &[Entry]) -> Outcome {
    let mut fails = Vec::new();
    for name in ["Z2", "Z3", "S3"] {
        let g = builtin_group(name).unwrap();
        let b = &find(zoo, &format!("k{name}")).bundle;
        for rank in 1..=3 {
            let got = v(b, &genus(rank));
            let want = hom_count(&g, rank);
            if got != Scalar::int(want as i64) || want != g.order().pow(rank as u32) {
                fails.push(format!("k{name} genus {rank}: {got} vs {want}"));
            }
        }
    }
    outcome(fails, "kZ2, kZ3, kS3 at genus 1..3".into())
}

/// Bound on the estimated term operations of one evaluation.
const COST_LIMIT: f64 = 2e7;

fn cost(b: &QcqsBundle, e: &TangleExpr) -> f64 {
    Evaluator::new(b).column_cost(&PreparedTangle::new(e)) * (b.dim() as f64).powi(e.arity().0 as i32)
}

fn fits(b: &QcqsBundle, e: &TangleExpr) -> bool {
    cost(b, e) <= COST_LIMIT
}

/// `count` random expressions drawn until each passes `keep`.
fn randoms(
    seed: u64,
    count: usize,
    keep: impl Fn(&TangleExpr) -> bool,
    mut draw: impl FnMut(&mut ChaCha8Rng) -> TangleExpr,
) -> Vec<TangleExpr> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    std::iter::repeat_with(|| draw(&mut rng)).filter(|e| keep(e)).take(count).collect()
}

fn horn_fits(b: &QcqsBundle, e: &TangleExpr) -> bool {
    fits(b, e) && horn_positions(e).iter().all(|&(p, ok)| !ok || fits(b, &horn(e, p).unwrap()))
}

fn c5_vanishing(zoo: &[Entry]) -> Outcome {
    let mut fails = Vec::new();
    for e in zoo.iter().filter(|e| is_uq(e)) {
        let fixed = [trivial_knot(), theta(), genus(3)];
        let rand = randoms(5, 20, |t| fits(&e.bundle, t), |rng| random_closed(rng, 5, 3));
        for t in fixed.iter().chain(&rand) {
            let got = f(&e.bundle, t);
            if !got.is_zero() {
                fails.push(format!("{} {t}: {got}", e.name));
            }
        }
    }
    outcome(fails, "Uq n=3,4,5 on O, theta, genus(3) and 20 random closed".into())
}

fn closures() -> Vec<(String, TangleExpr)> {
    let o = trivial_knot();
    let t = theta();
    let ho = horn(&o, 0).unwrap();
    let ht = horn(&t, 0).unwrap();
    vec![
        ("theta".into(), t),
        ("O#O".into(), disk_sum(&ho, &ho).unwrap()),
        ("O#theta".into(), disk_sum(&ho, &ht).unwrap()),
        ("theta#theta".into(), disk_sum(&ht, &ht).unwrap()),
        ("O⊔O".into(), parse("(cap & cap) . (cup & cup)").unwrap()),
    ]
}

fn c6_horns(zoo: &[Entry]) -> Outcome {
    let mut fails = Vec::new();
    let (mut count, mut skipped) = (0, Vec::new());
    for e in zoo.iter().filter(|e| e.bundle.lambda_symmetry().assumption15) {
        count += 1;
        for (name, t) in closures() {
            if !horn_fits(&e.bundle, &t) {
                skipped.push(format!("{} {name}", e.name));
                continue;
            }
            if !check_horn_independence(&e.bundle, &t).unwrap() {
                fails.push(format!("{} {name}", e.name));
            }
        }
    }
    outcome(
        fails,
        format!("{count} algebras satisfy the assumption; over the cost limit: {}", skipped.join(", ")),
    )
}

fn c7_multiplicative(zoo: &[Entry]) -> Outcome {
    let mut fails = Vec::new();
    let base = [("O", trivial_knot()), ("theta", theta())];
    let mut b12_value = None;
    let mut skipped = Vec::new();
    for e in zoo.iter().filter(|e| e.bundle.lambda_symmetry().assumption15) {
        let vals: Vec<Scalar> = base.iter().map(|(_, t)| v(&e.bundle, t)).collect();
        for (i, (n1, t1)) in base.iter().enumerate() {
            for (j, (n2, t2)) in base.iter().enumerate() {
                let s = disk_sum(&horn(t1, 0).unwrap(), &horn(t2, 0).unwrap()).unwrap();
                if !horn_fits(&e.bundle, &s) {
                    skipped.push(format!("{} {n1}#{n2}", e.name));
                    continue;
                }
                let got = v(&e.bundle, &s);
                if got != &vals[i] * &vals[j] {
                    fails.push(format!("{} {n1}#{n2}", e.name));
                }
                if e.name == "B12" && i == 1 && j == 1 {
                    b12_value = Some(got);
                }
            }
        }
    }
    if b12_value != Some(Scalar::int(20736)) {
        fails.push(format!("B12 theta#theta = {b12_value:?}"));
    }
    outcome(fails, format!("B12 theta#theta = 20736; over the cost limit: {}", skipped.join(", ")))
}

fn c8_mirror(zoo: &[Entry]) -> Outcome {
    let mut fails = Vec::new();
    for name in ["kS3", "B12", "Uq(n=4)"] {
        let b = &find(zoo, name).bundle;
        let op = opposite_bundle(b).unwrap();
        let mut exprs: Vec<TangleExpr> = Gen::ALL.iter().map(|g| (*g).into()).collect();
        exprs.extend(randoms(8, 20, |t| fits(b, t), |rng| {
            let src = rand::Rng::gen_range(rng, 0..=2);
            random_expr(rng, src, 4, 3)
        }));
        for e in &exprs {
            if !check_mirror(b, &op, e) {
                fails.push(format!("{name} {e}"));
            }
        }
    }
    for n in [3, 4] {
        let bq = &find(zoo, &format!("Uq(n={n})")).bundle;
        let bbar = prepare(uq_sl2_conj(n).unwrap().hopf).unwrap();
        for t in [trivial_knot(), theta(), genus(3)] {
            let a = v(bq, &t);
            let (mirrored, conjugate) = (v(bq, &t.mirror()), v(&bbar, &t));
            if a.conj() != mirrored || a.conj() != conjugate {
                fails.push(format!("Uq n={n} {t}: {a}, {mirrored}, {conjugate}"));
            }
        }
    }
    outcome(fails, "7 generators + 20 random on kS3, B12, Uq(n=4); conjugate Uq n=3,4".into())
}

fn c9_scaling(zoo: &[Entry]) -> Outcome {
    let mut fails = Vec::new();
    for name in ["kS3", "B12"] {
        let b = &find(zoo, name).bundle;
        for c in [2, 3] {
            for t in [trivial_knot(), theta()] {
                let s = check_scaling(b, &t, &Scalar::int(c)).unwrap();
                if !s.holds() || s.v_holds.is_none() {
                    fails.push(format!("{name} c={c} {t}"));
                }
            }
        }
    }
    outcome(fails, "exponents #∩−#∪ and #∩−#∪−1".into())
}

fn c10_uq(zoo: &[Entry]) -> Outcome {
    let mut fails = Vec::new();
    let mut corrected = Vec::new();
    for n in [3u32, 4, 5] {
        let u = uq_sl2_root(n, 1).unwrap();
        let ub = uq_sl2_conj(n).unwrap();
        let p = u.params;
        let e = p.e;
        let h = &u.hopf;
        let b = &find(zoo, &format!("Uq(n={n})")).bundle;
        if h.dim() != e * e * e {
            fails.push(format!("n={n}: dim {}", h.dim()));
        }
        let ints = b.integrals();
        let exp = &u.expected;
        let lam_ok = Some(&ints.lambda) == exp.lambda.as_ref()
            && Some(&ints.lambda_right) == exp.lambda_right.as_ref()
            && Some(&ints.big_lambda) == exp.big_lambda.as_ref()
            && ints.lambda_of(&ints.big_lambda).is_one()
            && {
                let mut s = Scalar::zero(n);
                for (k, c) in ints.big_lambda.iter() {
                    s.add_mul(c, &ints.lambda_right[*k]);
                }
                s.is_one()
            };
        if !lam_ok {
            fails.push(format!("n={n}: integrals"));
        }
        let basis = |i, j, k| SparseVec::basis(p.index(i, j, k), n);
        for j in 1..e {
            let mut qj = Scalar::zero(n);
            for t in 0..j {
                qj += &p.q_pow(2 * t as i64);
            }
            let lhs = h.mul(&basis(0, 0, 1), &basis(0, j, 0));
            let rhs = basis(0, j, 1)
                .scale(&p.q_pow(-2 * j as i64))
                .add(&basis(2 % e, j - 1, 0).scale(&qj))
                .sub(&basis(0, j - 1, 0).scale(&(&p.q_pow(-2 * (j as i64 - 1)) * &qj)));
            if lhs != rhs {
                fails.push(format!("n={n}: yx^{j}"));
            }
        }
        let kef = u.kef_integral().scale(&p.eps_q().pow(e as i64 - 1));
        if u.big_lambda_q() != kef {
            fails.push(format!("n={n}: Λ_q ≠ ε_q^(e−1)(ΣK^i)F^(e−1)E^(e−1)"));
        }
        let diff = |p: &UqParams| (&p.q() - &p.q_pow(-1)).pow(p.e as i64 - 1);
        let big = exp.big_lambda.as_ref().unwrap();
        corrected.push(kef == big.scale(&diff(&p)));

        let phi = uq_op_isomorphism(&u);
        let hb = &ub.hopf;
        let d = h.dim();
        let map = |v: &SparseVec| {
            let mut acc = SparseVec::new();
            for (i, c) in v.iter() {
                acc = acc.add(&phi[*i].scale(c));
            }
            acc
        };
        let map2 = |v: &SparseVec| {
            let mut acc = SparseVec::new();
            for (pq, c) in v.iter() {
                let t: SparseVec = phi[pq / d]
                    .iter()
                    .flat_map(|(i, a)| phi[pq % d].iter().map(move |(j, b)| (i * d + j, a * b)))
                    .collect();
                acc = acc.add(&t.scale(c));
            }
            acc
        };
        let structure_ok = map(hb.unit()) == *h.unit()
            && (0..d).all(|i| {
                (0..d).all(|j| map(hb.mul_basis(i, j)) == h.mul(&phi[j], &phi[i]))
                    && map2(hb.comult_basis(i)) == h.comult(&phi[i])
                    && *hb.counit_basis(i) == h.counit(&phi[i])
                    && map(hb.antipode_basis(i)) == h.antipode_inv(&phi[i])
            });
        if !structure_ok {
            fails.push(format!("n={n}: Ū_q̄ → Ū_q^op structure constants"));
        }
        if map(&ub.big_lambda_q()) != u.big_lambda_q() {
            fails.push(format!("n={n}: Λ_q̄ ↦ Λ_q"));
        }
        let lam_b = ub.expected.big_lambda.as_ref().unwrap().scale(&diff(&ub.params));
        corrected.push(map(&lam_b) == big.scale(&diff(&p)));
    }
    let mut out = outcome(fails, "dim, integrals, yx^j, Λ_q, isomorphism".into());
    if !out.pass {
        let fixed = corrected.iter().all(|x| *x);
        out.detail.push_str(&format!(
            " | with c_q = (q−q̄)^(e−1) both identities {}",
            if fixed { "hold" } else { "still fail" }
        ));
    }
    out
}

fn c11_closed_forms(zoo: &[Entry]) -> Outcome {
    let mut fails = Vec::new();
    let mut checks = 0;
    for e in zoo.iter().filter(|e| !is_uq(e)) {
        let r = e.expected.compare(&e.bundle);
        checks += r.len();
        for name in r.failed_names() {
            fails.push(format!("{} {name}", e.name));
        }
    }
    outcome(fails, format!("{checks} closed-form comparisons on kG, D(kG), B4m"))
}

fn main() {
    let start = Instant::now();
    let zoo = zoo();
    let criteria: [(&str, fn(&[Entry]) -> Outcome); 11] = [
        ("axiom suites", c1_axioms),
        ("B4m theta row", c2_table),
        ("F(O) = Tr S²", c3_trace),
        ("hom-counting oracle", c4_hom),
        ("vanishing for Uq", c5_vanishing),
        ("horn independence", c6_horns),
        ("multiplicativity", c7_multiplicative),
        ("mirror", c8_mirror),
        ("scaling", c9_scaling),
        ("Uq structure", c10_uq),
        ("closed-form cross-checks", c11_closed_forms),
    ];
    // only the printed Λ_q identities of criterion 10 are expected to fail
    let expected_fail = [10];
    let mut unexpected = Vec::new();
    for (i, (title, run)) in criteria.iter().enumerate() {
        let k = i + 1;
        let t = Instant::now();
        let o = run(&zoo);
        println!(
            "criterion {k:>2} {:<26} {}  {}  ({:.1}s)",
            title,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            t.elapsed().as_secs_f64()
        );
        let ok = if expected_fail.contains(&k) {
            !o.pass && !o.detail.contains("still fail") && o.detail.split("; ").all(|d| d.contains("Λ"))
        } else {
            o.pass
        };
        if !ok {
            unexpected.push(k);
        }
    }
    println!("total {:.1}s", start.elapsed().as_secs_f64());
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
