use super::{algebra_only, finish, tensor2, AltBasis, ExpectedData, ZooError};
use crate::hopf::{HopfPresentation, SparseVec};
use crate::scalar::Scalar;

/// Index of aⁱtʲzᵏ, 0 ≤ i, j < 2, 0 ≤ k < m.
pub fn b4m_index(m: usize, i: usize, j: usize, k: usize) -> usize {
    (i * 2 + j) * m + k
}

pub fn b4m_label(m: usize, idx: usize) -> String {
    let (i, j, k) = (idx / (2 * m), (idx / m) % 2, idx % m);
    let mut s = String::new();
    if i == 1 {
        s.push('a');
    }
    if j == 1 {
        s.push('t');
    }
    match k {
        0 => {}
        1 => s.push('z'),
        _ => s.push_str(&format!("z^{k}")),
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

/// Element constructors for B₄ₘ in the basis aⁱtʲzᵏ.
#[derive(Debug, Clone, Copy)]
pub struct B4mElements {
    pub m: usize,
}

impl B4mElements {
    /// aⁱtʲzᵏ for arbitrary integers, reduced with a² = t² = 1, zᵐ = a.
    pub fn monomial(&self, i: i64, j: i64, k: i64) -> usize {
        let m = self.m as i64;
        let carry = k.div_euclid(m);
        b4m_index(
            self.m,
            (i + carry).rem_euclid(2) as usize,
            j.rem_euclid(2) as usize,
            k.rem_euclid(m) as usize,
        )
    }

    pub fn mono(&self, i: i64, j: i64, k: i64) -> SparseVec {
        SparseVec::basis(self.monomial(i, j, k), 1)
    }

    /// e₀ = (1 + a)/2, e₁ = (1 − a)/2.
    pub fn idempotent(&self, i: usize) -> SparseVec {
        let sign = if i == 0 { 1 } else { -1 };
        SparseVec::from_pairs([(self.monomial(0, 0, 0), Scalar::frac(1, 2)), (self.monomial(1, 0, 0), Scalar::frac(sign, 2))])
    }

    /// e_i tʲ zᵏ in the basis aⁱtʲzᵏ; k may be any integer.
    pub fn e_basis(&self, i: usize, j: i64, k: i64) -> SparseVec {
        let sign = if i == 0 { 1 } else { -1 };
        SparseVec::from_pairs([
            (self.monomial(0, j, k), Scalar::frac(1, 2)),
            (self.monomial(1, j, k), Scalar::frac(sign, 2)),
        ])
    }

    /// Product of two basis monomials: aⁱtʲzᵏ · aᵖt^q zʳ = a^{i+p} t^{j+q} z^{(−1)^q k + r}.
    fn product(&self, x: usize, y: usize) -> usize {
        let m = self.m;
        let (i, j, k) = ((x / (2 * m)) as i64, ((x / m) % 2) as i64, (x % m) as i64);
        let (p, q, r) = ((y / (2 * m)) as i64, ((y / m) % 2) as i64, (y % m) as i64);
        let sign = if q == 1 { -1 } else { 1 };
        self.monomial(i + p, j + q, sign * k + r)
    }
}

/// The braiding exponent d(i,j,k,p,q,r) = (−1)ʲ{r − (−1)^{i+p}(2k − j)q} + jq.
pub(crate) fn braid_exponent(i: i64, j: i64, k: i64, p: i64, q: i64, r: i64) -> i64 {
    let s = |e: i64| if e.rem_euclid(2) == 0 { 1 } else { -1 };
    s(j) * (r - s(i + p) * (2 * k - j) * q) + j * q
}

pub fn kac_b4m(m: usize) -> Result<(HopfPresentation, ExpectedData), ZooError> {
    if m <= 2 {
        return Err(ZooError::MOutOfRange(m));
    }
    let el = B4mElements { m };
    let d = 4 * m;
    let labels: Vec<String> = (0..d).map(|x| b4m_label(m, x)).collect();
    let mult = (0..d * d).map(|xy| SparseVec::basis(el.product(xy / d, xy % d), 1)).collect();
    let name = format!("B{}", 4 * m);
    let alg = algebra_only(&name, &labels, 1, mult, el.mono(0, 0, 0));

    let (a, t, z, z_inv) = (el.mono(1, 0, 0), el.mono(0, 1, 0), el.mono(0, 0, 1), el.mono(0, 0, -1));
    let (e0, e1) = (el.idempotent(0), el.idempotent(1));
    let delta_a = tensor2(&a, &a, d);
    let delta_t = tensor2(&t, &alg.mul(&e0, &t), d).add(&tensor2(&alg.mul(&t, &z), &alg.mul(&e1, &t), d));
    let delta_z = tensor2(&z, &alg.mul(&e0, &z), d).add(&tensor2(&z_inv, &alg.mul(&e1, &z), d));
    let s_a = a.clone();
    let s_t = alg.mul(&t, &e0.add(&alg.mul(&e1, &z)));
    let s_z = alg.mul(&e0, &z_inv).add(&alg.mul(&e1, &z));

    let pow2 = |x: &SparseVec, e: usize, f: &dyn Fn(&SparseVec, &SparseVec) -> SparseVec, one: SparseVec| {
        let mut acc = one;
        for _ in 0..e {
            acc = f(&acc, x);
        }
        acc
    };
    let one1 = el.mono(0, 0, 0);
    let one2 = tensor2(&one1, &one1, d);
    let mt = |u: &SparseVec, v: &SparseVec| alg.mul_tensor2(u, v);
    let mm = |u: &SparseVec, v: &SparseVec| alg.mul(u, v);
    let mut comult = Vec::with_capacity(d);
    let mut antipode = Vec::with_capacity(d);
    for x in 0..d {
        let (i, j, k) = (x / (2 * m), (x / m) % 2, x % m);
        let da = pow2(&delta_a, i, &mt, one2.clone());
        let dt = pow2(&delta_t, j, &mt, one2.clone());
        let dz = pow2(&delta_z, k, &mt, one2.clone());
        comult.push(alg.mul_tensor2(&alg.mul_tensor2(&da, &dt), &dz));
        // S is an anti-homomorphism
        let sz = pow2(&s_z, k, &mm, one1.clone());
        let st = pow2(&s_t, j, &mm, one1.clone());
        let sa = pow2(&s_a, i, &mm, one1.clone());
        antipode.push(alg.mul(&alg.mul(&sz, &st), &sa));
    }
    let counit = vec![Scalar::int(1); d];
    let h = finish(alg, comult, counit, antipode)?;

    let expected = b4m_expected(&h, m);
    Ok((h, expected))
}

fn b4m_expected(h: &HopfPresentation, m: usize) -> ExpectedData {
    let el = B4mElements { m };
    let d = 4 * m;
    let one = Scalar::int(1);
    let lambda = (0..d).map(|x| Scalar::int((x == 0) as i64)).collect();

    let mut tail = SparseVec::new();
    for k in 0..m - 1 {
        tail = tail.add(&el.mono(0, 0, k as i64));
    }
    tail = tail.add(&el.mono(1, 0, m as i64 - 1));
    let one_plus = |x: SparseVec| el.mono(0, 0, 0).add(&x);
    let big_lambda = h.mul_all(&[&one_plus(el.mono(1, 0, 0)), &one_plus(el.mono(0, 1, 0)), &tail]);

    let ev = (0..d * d)
        .map(|xy| {
            let (x, y) = (xy / d, xy % d);
            let (i, j, k) = (x / (2 * m), (x / m) % 2, x % m);
            let (p, q, r) = (y / (2 * m), (y / m) % 2, y % m);
            let first = (i, j, k) == (p, q, r) && ((j, k) == (0, 0) || j == 1);
            let second = j == 0 && (i, j, k) == (1 - p, q, m - r);
            Scalar::int(first as i64 + second as i64)
        })
        .collect();

    // Σ aⁱ⊗aⁱ + Σ aⁱtzᵏ⊗aⁱtzᵏ + Σ_{0<k<m} aⁱzᵏ⊗a^{i+1}z^{m−k}
    let mut coev = Vec::new();
    for i in 0..2i64 {
        coev.push((el.monomial(i, 0, 0) * d + el.monomial(i, 0, 0), one.clone()));
        for k in 0..m as i64 {
            let x = el.monomial(i, 1, k);
            coev.push((x * d + x, one.clone()));
        }
        for k in 1..m as i64 {
            coev.push((el.monomial(i, 0, k) * d + el.monomial(i + 1, 0, m as i64 - k), one.clone()));
        }
    }

    let mut braid = Vec::with_capacity(d * d);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..m as i64 {
                for p in 0..2 {
                    for q in 0..2 {
                        for r in 0..m as i64 {
                            let x = el.e_basis(i, j, k);
                            let y = el.e_basis(p, q, r);
                            let dd = braid_exponent(i as i64, j, k, p as i64, q, r);
                            braid.push((tensor2(&x, &y, d), tensor2(&el.e_basis(p, q, dd), &x, d)));
                        }
                    }
                }
            }
        }
    }

    let mut alt_labels = Vec::with_capacity(d);
    let mut alt_vectors = Vec::with_capacity(d);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..m {
                let mono = b4m_label(m, b4m_index(m, 0, j, k));
                alt_labels.push(if mono == "1" { format!("e{i}") } else { format!("e{i}{mono}") });
                alt_vectors.push(el.e_basis(i, j as i64, k as i64));
            }
        }
    }

    ExpectedData {
        lambda: Some(lambda),
        big_lambda: Some(big_lambda),
        ev: Some(ev),
        coev: Some(SparseVec::from_pairs(coev)),
        braid,
        cosemisimple: Some(true),
        alt_basis: Some(AltBasis {
            labels: alt_labels,
            vectors: alt_vectors,
        }),
        ..Default::default()
    }
}
