use num_integer::Integer;

use super::{algebra_only, finish, tensor2, AltBasis, ExpectedData, ZooError};
use crate::hopf::{Accumulator, HopfPresentation, SparseVec};
use crate::scalar::Scalar;

/// q = ζ_n^power and e = ord(q²).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UqParams {
    pub n: u32,
    pub power: i64,
    pub e: usize,
}

impl UqParams {
    pub fn new(n: u32, power: i64) -> Result<Self, ZooError> {
        if n < 3 {
            return Err(ZooError::QOutOfRange(n));
        }
        if power.gcd(&(n as i64)) != 1 {
            return Err(ZooError::Parse(format!("ζ_{n}^{power} is not a primitive root of unity")));
        }
        let e = (n / n.gcd(&2)) as usize;
        Ok(UqParams { n, power, e })
    }

    /// q^t.
    pub fn q_pow(&self, t: i64) -> Scalar {
        Scalar::root_of_unity(self.n, self.power * t)
    }

    pub fn q(&self) -> Scalar {
        self.q_pow(1)
    }

    /// c_q = q̄²(q − q̄)^{e−1}.
    pub fn c_q(&self) -> Scalar {
        let diff = &self.q() - &self.q_pow(-1);
        &self.q_pow(-2) * &diff.pow(self.e as i64 - 1)
    }

    /// ε_q = q^e.
    pub fn eps_q(&self) -> Scalar {
        self.q_pow(self.e as i64)
    }

    pub fn dim(&self) -> usize {
        self.e * self.e * self.e
    }

    /// Index of aⁱxʲyᵏ.
    pub fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.e + j) * self.e + k
    }

    pub fn exponents(&self, idx: usize) -> (usize, usize, usize) {
        let e = self.e;
        (idx / (e * e), (idx / e) % e, idx % e)
    }

    pub fn label(&self, idx: usize) -> String {
        let (i, j, k) = self.exponents(idx);
        let part = |s: &str, p: usize| match p {
            0 => String::new(),
            1 => s.to_string(),
            _ => format!("{s}^{p}"),
        };
        let l = format!("{}{}{}", part("a", i), part("x", j), part("y", k));
        if l.is_empty() {
            "1".into()
        } else {
            l
        }
    }
}

/// Ū_q together with its parameters and closed-form data.
#[derive(Debug, Clone)]
pub struct UqAlgebra {
    pub params: UqParams,
    pub hopf: HopfPresentation,
    pub expected: ExpectedData,
}

impl UqAlgebra {
    fn mono(&self, i: usize, j: usize, k: usize) -> SparseVec {
        SparseVec::basis(self.params.index(i, j, k), self.params.n)
    }

    fn power(&self, x: &SparseVec, p: usize) -> SparseVec {
        let mut acc = self.hopf.unit().clone();
        for _ in 0..p {
            acc = self.hopf.mul(&acc, x);
        }
        acc
    }

    /// F = (q − q⁻¹)·x·a⁻¹.
    pub fn f(&self) -> SparseVec {
        let p = &self.params;
        let c = &p.q() - &p.q_pow(-1);
        self.hopf.mul(&self.mono(0, 1, 0), &self.mono(p.e - 1, 0, 0)).scale(&c)
    }

    /// Kⁱ Fʲ Eᵏ in the PBW basis.
    pub fn kef(&self, i: usize, j: usize, k: usize) -> SparseVec {
        let fj = self.power(&self.f(), j);
        self.hopf.mul_all(&[&self.mono(i % self.params.e, 0, 0), &fj, &self.mono(0, 0, k)])
    }

    /// (Σ Kⁱ) F^{e−1} E^{e−1}.
    pub fn kef_integral(&self) -> SparseVec {
        let e = self.params.e;
        let mut sum_k = SparseVec::new();
        for i in 0..e {
            sum_k = sum_k.add(&self.mono(i, 0, 0));
        }
        let fe = self.power(&self.f(), e - 1);
        let ee = self.power(&self.mono(0, 0, 1), e - 1);
        self.hopf.mul_all(&[&sum_k, &fe, &ee])
    }

    /// Λ_q = c_q Λ.
    pub fn big_lambda_q(&self) -> SparseVec {
        self.expected.big_lambda.as_ref().expect("Λ present").scale(&self.params.c_q())
    }
}

/// Ū_q with q = ζ_n.
pub fn uq_sl2(n: u32) -> Result<(HopfPresentation, ExpectedData), ZooError> {
    let u = uq_sl2_root(n, 1)?;
    Ok((u.hopf, u.expected))
}

/// Ū_q̄ with q̄ = ζ_n⁻¹, i.e. the complex-conjugate structure constants.
pub fn uq_sl2_conj(n: u32) -> Result<UqAlgebra, ZooError> {
    uq_sl2_root(n, -1)
}

/// Ū_q with q = ζ_n^power in the PBW basis aⁱxʲyᵏ, where a = K, x = (q − q⁻¹)⁻¹FK, y = E.
pub fn uq_sl2_root(n: u32, power: i64) -> Result<UqAlgebra, ZooError> {
    let p = UqParams::new(n, power)?;
    let e = p.e;
    let d = p.dim();
    let zero = Scalar::zero(n);
    let basis = |i: usize, j: usize, k: usize| SparseVec::basis(p.index(i, j, k), n);

    let left_a = |v: &SparseVec, s: usize| {
        v.map_indices(|idx| {
            let (i, j, k) = p.exponents(idx);
            p.index((i + s) % e, j, k)
        })
    };
    // x·aⁱxʲyᵏ = q^{2i} aⁱx^{j+1}yᵏ
    let left_x = |v: &SparseVec| {
        let mut acc = Accumulator::new();
        for (idx, c) in v.iter() {
            let (i, j, k) = p.exponents(*idx);
            if j + 1 < e {
                acc.add_product(p.index(i, j + 1, k), c, &p.q_pow(2 * i as i64));
            }
        }
        acc.finish()
    };
    // y·(xʲyᵏ) from yx = q⁻²xy + a² − 1
    let mut y_on: Vec<Vec<SparseVec>> = vec![vec![SparseVec::new(); e]; e];
    for j in 0..e {
        for k in 0..e {
            y_on[j][k] = if j == 0 {
                if k + 1 < e {
                    basis(0, 0, k + 1)
                } else {
                    SparseVec::new()
                }
            } else {
                left_x(&y_on[j - 1][k])
                    .scale(&p.q_pow(-2))
                    .add(&basis(2 % e, j - 1, k))
                    .sub(&basis(0, j - 1, k))
            };
        }
    }
    let left_y = |v: &SparseVec| {
        let mut acc = Accumulator::new();
        for (idx, c) in v.iter() {
            let (i, j, k) = p.exponents(*idx);
            let f = c * &p.q_pow(-2 * i as i64);
            acc.add_vec(&left_a(&y_on[j][k], i), Some(&f));
        }
        acc.finish()
    };

    let mut mult = Vec::with_capacity(d * d);
    for x in 0..d {
        let (i, j, k) = p.exponents(x);
        for y in 0..d {
            let mut v = SparseVec::basis(y, n);
            for _ in 0..k {
                v = left_y(&v);
            }
            for _ in 0..j {
                v = left_x(&v);
            }
            mult.push(left_a(&v, i));
        }
    }
    let labels: Vec<String> = (0..d).map(|x| p.label(x)).collect();
    let name = if power == 1 { format!("Uq(n={n})") } else { format!("Uq(n={n},q=z^{power})") };
    let alg = algebra_only(&name, &labels, n, mult, basis(0, 0, 0));

    let one = basis(0, 0, 0);
    let (a, x, y) = (basis(1 % e, 0, 0), basis(0, 1, 0), basis(0, 0, 1));
    let a_inv = basis(e - 1, 0, 0);
    let delta_a = tensor2(&a, &a, d);
    let delta_x = tensor2(&one, &x, d).add(&tensor2(&x, &a, d));
    let delta_y = tensor2(&one, &y, d).add(&tensor2(&y, &a, d));
    let minus_one = Scalar::from_rational(n, crate::scalar::Rational::from_integer(-1));
    let s_x = alg.mul(&x, &a_inv).scale(&minus_one);
    let s_y = alg.mul(&y, &a_inv).scale(&minus_one);

    let powers = |g: &SparseVec, unit: SparseVec, f: &dyn Fn(&SparseVec, &SparseVec) -> SparseVec| {
        let mut out = vec![unit];
        for t in 1..e {
            let next = f(&out[t - 1], g);
            out.push(next);
        }
        out
    };
    let mt = |u: &SparseVec, v: &SparseVec| alg.mul_tensor2(u, v);
    let mm = |u: &SparseVec, v: &SparseVec| alg.mul(u, v);
    let one2 = tensor2(&one, &one, d);
    let da = powers(&delta_a, one2.clone(), &mt);
    let dx = powers(&delta_x, one2.clone(), &mt);
    let dy = powers(&delta_y, one2, &mt);
    let sa = powers(&a_inv, one.clone(), &mm);
    let sx = powers(&s_x, one.clone(), &mm);
    let sy = powers(&s_y, one.clone(), &mm);

    let mut comult = Vec::with_capacity(d);
    let mut antipode = Vec::with_capacity(d);
    let mut counit = Vec::with_capacity(d);
    for idx in 0..d {
        let (i, j, k) = p.exponents(idx);
        comult.push(alg.mul_tensor2(&alg.mul_tensor2(&da[i], &dx[j]), &dy[k]));
        antipode.push(alg.mul(&alg.mul(&sy[k], &sx[j]), &sa[i]));
        counit.push(if j == 0 && k == 0 { Scalar::one(n) } else { zero.clone() });
    }
    let hopf = finish(alg, comult, counit, antipode)?;

    let delta_at = |target: usize| (0..d).map(|x| if x == target { Scalar::one(n) } else { zero.clone() }).collect();
    let mut big_lambda = SparseVec::new();
    for i in 0..e {
        big_lambda = big_lambda.add(&basis(i, e - 1, e - 1));
    }
    let c_q = p.c_q();
    let mut u = UqAlgebra {
        params: p,
        hopf,
        expected: ExpectedData {
            lambda: Some(delta_at(p.index(0, e - 1, e - 1))),
            lambda_right: Some(delta_at(p.index(2 % e, e - 1, e - 1))),
            big_lambda: Some(big_lambda),
            cosemisimple: Some(false),
            preferred_lambda_scale: Some(c_q.inverse().expect("c_q ≠ 0")),
            ..Default::default()
        },
    };
    let mut alt_labels = Vec::with_capacity(d);
    let mut alt_vectors = Vec::with_capacity(d);
    for idx in 0..d {
        let (i, j, k) = p.exponents(idx);
        let part = |s: &str, t: usize| match t {
            0 => String::new(),
            1 => s.to_string(),
            _ => format!("{s}^{t}"),
        };
        let l = format!("{}{}{}", part("K", i), part("F", j), part("E", k));
        alt_labels.push(if l.is_empty() { "1".into() } else { l });
        alt_vectors.push(u.kef(i, j, k));
    }
    u.expected.alt_basis = Some(AltBasis {
        labels: alt_labels,
        vectors: alt_vectors,
    });
    Ok(u)
}

/// Images of the PBW basis of Ū_q̄ under K ↦ K, E ↦ E, F ↦ F into Ū_q^op,
/// written in the PBW basis of Ū_q. On generators a ↦ a, y ↦ y, x ↦ −q̄²x,
/// and a monomial goes to the reversed product in Ū_q.
pub fn uq_op_isomorphism(uq: &UqAlgebra) -> Vec<SparseVec> {
    let p = &uq.params;
    let e = p.e;
    let h = &uq.hopf;
    let minus = Scalar::from_rational(p.n, crate::scalar::Rational::from_integer(-1));
    let x_img = uq.mono(0, 1, 0).scale(&(&minus * &p.q_pow(-2)));
    let (a, y) = (uq.mono(1 % e, 0, 0), uq.mono(0, 0, 1));
    (0..p.dim())
        .map(|idx| {
            let (i, j, k) = p.exponents(idx);
            let yk = uq.power(&y, k);
            let xj = uq.power(&x_img, j);
            let ai = uq.power(&a, i);
            h.mul_all(&[&yk, &xj, &ai])
        })
        .collect()
}
