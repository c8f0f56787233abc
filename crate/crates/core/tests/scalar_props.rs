use hbk_core::scalar::{cyclotomic_poly, parse_scalar, format_scalar_coeffs, CycNumber, DenseMatrix, Rational, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn big(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn rat() -> impl Strategy<Value = (i64, i64)> {
    (-1_000_000_000_000i64..1_000_000_000_000, 1i64..1_000_000)
}

fn cyc(n: u32) -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-20i64..20, 1i64..6), n as usize).prop_map(move |v| {
        let c: Vec<Rational> = v.into_iter().map(|(p, q)| Rational::new(p, q)).collect();
        CycNumber::make(n, &c)
    })
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    let scale = 1.0 + a.0.abs() + a.1.abs();
    (a.0 - b.0).abs() < 1e-6 * scale && (a.1 - b.1).abs() < 1e-6 * scale
}

proptest! {
    #[test]
    fn rational_matches_bigrational((a, b) in rat(), (c, d) in rat()) {
        let x = Rational::new(a, b);
        let y = Rational::new(c, d);
        let (bx, by) = (big(a, b), big(c, d));
        prop_assert_eq!((&x + &y).to_big(), &bx + &by);
        prop_assert_eq!((&x - &y).to_big(), &bx - &by);
        prop_assert_eq!((&x * &y).to_big(), &bx * &by);
        if c != 0 {
            prop_assert_eq!((&x / &y).to_big(), &bx / &by);
        }
        prop_assert_eq!(x.cmp(&y), bx.cmp(&by));
    }

    #[test]
    fn rational_display_roundtrip((a, b) in rat()) {
        let x = Rational::new(a, b);
        prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
    }

    #[test]
    fn field_axioms((a, b, c) in prop::sample::select(vec![1u32, 3, 4, 5, 8, 12]).prop_flat_map(|n| (cyc(n), cyc(n), cyc(n)))) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
            prop_assert!((&b * &b.inverse().unwrap()).is_one());
        }
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn approx_is_a_ring_map(n in prop::sample::select(vec![3u32, 4, 5, 7, 12]), k in 0i64..17) {
        let x = CycNumber::root_of_unity(n, k);
        let y = &x + &CycNumber::frac(1, 3);
        let (xr, xi) = x.approx();
        let (yr, yi) = y.approx();
        prop_assert!(close((&x * &y).approx(), (xr * yr - xi * yi, xr * yi + xi * yr)));
        prop_assert!(close(x.conj().approx(), (xr, -xi)));
    }

    #[test]
    fn roots_of_unity_multiply(n in 2u32..16, i in -40i64..40, j in -40i64..40) {
        let z = |k| CycNumber::root_of_unity(n, k);
        prop_assert_eq!(&z(i) * &z(j), z(i + j));
        prop_assert!(z(n as i64 * i).is_one());
        let angle = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
        prop_assert!(close(z(i).approx(), (angle.cos(), angle.sin())));
    }

    #[test]
    fn coeff_text_roundtrip(x in cyc(5)) {
        prop_assert_eq!(parse_scalar(5, &format_scalar_coeffs(&x)).unwrap(), x);
    }
}

#[test]
fn sum_of_primitive_roots_is_mobius() {
    for (n, mu) in [(3u32, -1i64), (4, 0), (5, -1), (6, 1), (8, 0), (10, 1), (12, 0)] {
        let mut s = CycNumber::zero(n);
        for k in 1..=n as i64 {
            if num_integer::gcd(k, n as i64) == 1 {
                s += &CycNumber::root_of_unity(n, k);
            }
        }
        assert_eq!(s, CycNumber::int(mu), "n = {n}");
    }
    assert_eq!(cyclotomic_poly(5), &[1, 1, 1, 1, 1]);
}

#[test]
fn nullspace_of_vandermonde_style_matrix() {
    let n = 5;
    let z = |k| CycNumber::root_of_unity(n, k);
    let rows: Vec<Vec<Scalar>> = (0..3).map(|r| (0..4).map(|c| z(r * c)).collect()).collect();
    let m = DenseMatrix::from_rows(rows.clone(), n);
    let ns = m.nullspace();
    assert_eq!(ns.len(), 1);
    for row in &rows {
        let mut s = CycNumber::zero(n);
        for (a, b) in row.iter().zip(&ns[0]) {
            s.add_mul(a, b);
        }
        assert!(s.is_zero());
    }
}
