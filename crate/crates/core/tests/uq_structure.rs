use hbk_core::hopf::*;
use hbk_core::scalar::Scalar;
use hbk_core::zoo::*;

fn q_int(p: &UqParams, j: usize) -> Scalar {
    let mut s = Scalar::zero(p.n);
    for t in 0..j {
        s += &p.q_pow(2 * t as i64);
    }
    s
}

#[test]
fn dimension_and_order() {
    for (n, e) in [(3u32, 3usize), (4, 2), (5, 5), (6, 3), (8, 4)] {
        let u = uq_sl2_root(n, 1).unwrap();
        assert_eq!(u.params.e, e, "n = {n}");
        assert_eq!(u.hopf.dim(), e * e * e);
    }
    assert!(uq_sl2(2).is_err());
}

#[test]
fn constants_for_n4() {
    let p = UqParams::new(4, 1).unwrap();
    let i = Scalar::root_of_unity(4, 1);
    assert_eq!(p.c_q(), &Scalar::int(-2) * &i);
    assert_eq!(p.eps_q(), Scalar::int(-1));
    let u = uq_sl2_root(4, 1).unwrap();
    let lr = u.expected.lambda_right.as_ref().unwrap();
    let top = p.index(0, 1, 1);
    // a² = 1 when e = 2, so δ at (2, 1, 1) is δ at (0, 1, 1)
    assert!(lr.iter().enumerate().all(|(k, v)| v.is_one() == (k == top)));
}

#[test]
fn integrals_match_closed_forms() {
    for n in [3u32, 4, 5] {
        let u = uq_sl2_root(n, 1).unwrap();
        let ints = compute_integrals(&u.hopf).unwrap();
        assert!(ints.unimodular);
        let exp = &u.expected;
        assert_eq!(&ints.lambda, exp.lambda.as_ref().unwrap(), "λ, n = {n}");
        assert_eq!(&ints.lambda_right, exp.lambda_right.as_ref().unwrap(), "λ′, n = {n}");
        assert_eq!(&ints.big_lambda, exp.big_lambda.as_ref().unwrap(), "Λ, n = {n}");
        let pair = |l: &[Scalar]| {
            let mut s = Scalar::zero(n);
            for (i, c) in ints.big_lambda.iter() {
                s.add_mul(c, &l[*i]);
            }
            s
        };
        assert!(pair(&ints.lambda).is_one());
        assert!(pair(&ints.lambda_right).is_one());
        // λ is a left integral and λ′ a right integral of the dual, checked directly
        let h = &u.hopf;
        for b in 0..h.dim() {
            let mut left = vec![Scalar::zero(n); h.dim()];
            let mut right = vec![Scalar::zero(n); h.dim()];
            for (p, q, c) in h.comult_terms(b) {
                left[p].add_mul(c, &ints.lambda[q]);
                right[q].add_mul(c, &ints.lambda_right[p]);
            }
            let expect = |l: &[Scalar]| {
                let mut v = vec![Scalar::zero(n); h.dim()];
                for (k, c) in h.unit().iter() {
                    v[*k] = c * &l[b];
                }
                v
            };
            assert_eq!(left, expect(&ints.lambda));
            assert_eq!(right, expect(&ints.lambda_right));
        }
    }
}

#[test]
fn y_x_power_commutation() {
    for n in [3u32, 4, 5] {
        let u = uq_sl2_root(n, 1).unwrap();
        let p = u.params;
        let e = p.e;
        let h = &u.hopf;
        let b = |i, j, k| SparseVec::basis(p.index(i, j, k), n);
        let y = b(0, 0, 1);
        let mut xj = h.unit().clone();
        for j in 1..e {
            xj = h.mul(&xj, &b(0, 1, 0));
            assert_eq!(xj, b(0, j, 0));
            let lhs = h.mul(&y, &xj);
            let qj = q_int(&p, j);
            let rhs = b(0, j, 1)
                .scale(&p.q_pow(-2 * j as i64))
                .add(&b(2 % e, j - 1, 0).scale(&qj))
                .sub(&b(0, j - 1, 0).scale(&(&p.q_pow(-2 * (j as i64 - 1)) * &qj)));
            assert_eq!(lhs, rhs, "n = {n}, j = {j}");
        }
    }
}

#[test]
fn kef_integral_is_a_multiple_of_lambda() {
    for n in [3u32, 4, 5] {
        let u = uq_sl2_root(n, 1).unwrap();
        let p = u.params;
        let e = p.e as i64;
        let diff = &p.q() - &p.q_pow(-1);
        let big = u.expected.big_lambda.as_ref().unwrap();
        let coeff = &p.eps_q().pow(e - 1) * &diff.pow(e - 1);
        assert_eq!(u.kef_integral(), big.scale(&coeff), "n = {n}");
    }
}

#[test]
fn printed_lambda_q_identity_is_off_by_q_bar_squared() {
    for n in [3u32, 4, 5] {
        let u = uq_sl2_root(n, 1).unwrap();
        let p = u.params;
        let printed = u.kef_integral().scale(&p.eps_q().pow(p.e as i64 - 1));
        assert_ne!(u.big_lambda_q(), printed, "n = {n}");
        assert_eq!(u.big_lambda_q(), printed.scale(&p.q_pow(-2)), "n = {n}");
    }
}

#[test]
fn kef_basis_is_a_basis() {
    let u = uq_sl2_root(5, 1).unwrap();
    let alt = u.expected.alt_basis.as_ref().unwrap();
    let d = u.hopf.dim();
    let rows: Vec<Vec<Scalar>> = alt.vectors.iter().map(|v| v.to_dense(d, 5)).collect();
    let m = hbk_core::scalar::DenseMatrix::from_rows(rows, 5);
    assert_eq!(m.rank(), d);
}

#[test]
fn conjugate_algebra_is_isomorphic_to_opposite() {
    for n in [3u32, 4, 5] {
        let uq = uq_sl2_root(n, 1).unwrap();
        let ub = uq_sl2_conj(n).unwrap();
        let phi = uq_op_isomorphism(&uq);
        let h = &uq.hopf;
        let hb = &ub.hopf;
        let d = h.dim();
        let map = |v: &SparseVec| -> SparseVec {
            let mut acc = SparseVec::new();
            for (i, c) in v.iter() {
                acc = acc.add(&phi[*i].scale(c));
            }
            acc
        };
        let map2 = |v: &SparseVec| -> SparseVec {
            let mut acc = SparseVec::new();
            for (pq, c) in v.iter() {
                let (p, q) = (pq / d, pq % d);
                let t: SparseVec = phi[p]
                    .iter()
                    .flat_map(|(i, a)| phi[q].iter().map(move |(j, b)| (i * d + j, a * b)))
                    .collect();
                acc = acc.add(&t.scale(c));
            }
            acc
        };
        let rank = hbk_core::scalar::DenseMatrix::from_rows(phi.iter().map(|v| v.to_dense(d, n)).collect(), n).rank();
        assert_eq!(rank, d);
        assert_eq!(map(hb.unit()), *h.unit());
        for i in 0..d {
            for j in 0..d {
                // product in Ū_q^op
                assert_eq!(map(hb.mul_basis(i, j)), h.mul(&phi[j], &phi[i]), "n = {n}, ({i}, {j})");
            }
            assert_eq!(map2(hb.comult_basis(i)), h.comult(&phi[i]));
            assert_eq!(*hb.counit_basis(i), h.counit(&phi[i]));
            assert_eq!(map(hb.antipode_basis(i)), h.antipode_inv(&phi[i]));
        }
        // the images of the integrals agree once the q̄² in c_q is dropped
        let diff = |p: &UqParams| (&p.q() - &p.q_pow(-1)).pow(p.e as i64 - 1);
        let lam_b = ub.expected.big_lambda.as_ref().unwrap().scale(&diff(&ub.params));
        let lam_q = uq.expected.big_lambda.as_ref().unwrap().scale(&diff(&uq.params));
        assert_eq!(map(&lam_b), lam_q, "n = {n}");
        assert_eq!(map(&ub.big_lambda_q()), uq.big_lambda_q().scale(&uq.params.q_pow(4)), "n = {n}");
    }
}
