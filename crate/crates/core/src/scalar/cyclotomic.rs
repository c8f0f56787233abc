use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::sync::{OnceLock, RwLock};

use smallvec::{smallvec, SmallVec};

use super::{Rational, ScalarError};

type Coeffs = SmallVec<[Rational; 4]>;

/// Element of the cyclotomic field Q(ζ_n) in the power basis 1, ζ, …, ζ^{φ(n)−1}.
///
/// Conductor 1 is the rational field. A conductor-1 value mixes freely with
/// any other conductor (it is promoted); two different conductors above 1
/// never mix.
#[derive(Clone)]
pub struct CycNumber {
    n: u32,
    c: Coeffs,
}

/// The scalar type used throughout the crate.
pub type Scalar = CycNumber;

/// Coefficients of Φ_n, low degree first, monic.
pub fn cyclotomic_poly(n: u32) -> &'static [i64] {
    static CACHE: OnceLock<RwLock<HashMap<u32, &'static [i64]>>> = OnceLock::new();
    static SMALL: [OnceLock<&'static [i64]>; 64] = [const { OnceLock::new() }; 64];
    if let Some(slot) = SMALL.get(n as usize) {
        return slot.get_or_init(|| Box::leak(compute_cyclotomic(n).into_boxed_slice()));
    }
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().unwrap().get(&n) {
        return p;
    }
    let poly: &'static [i64] = Box::leak(compute_cyclotomic(n).into_boxed_slice());
    cache.write().unwrap().insert(n, poly);
    poly
}

fn compute_cyclotomic(n: u32) -> Vec<i64> {
    assert!(n >= 1, "conductor must be positive");
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = exact_div_monic(&num, &compute_cyclotomic(d));
        }
    }
    num
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quo = vec![0i64; num.len() - dn];
    for k in (dn..num.len()).rev() {
        let c = rem[k];
        if c != 0 {
            quo[k - dn] = c;
            for (t, &dt) in den.iter().enumerate() {
                rem[k - dn + t] -= c * dt;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quo
}

/// Euler's totient, i.e. the degree of Q(ζ_n).
pub fn totient(n: u32) -> usize {
    cyclotomic_poly(n).len() - 1
}

/// Reduce Σ v_i x^i modulo Φ_n, in place; returns the first φ(n) coefficients.
fn reduce<A: smallvec::Array<Item = Rational>>(n: u32, mut v: SmallVec<A>) -> Coeffs {
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    if v.len() > deg {
        for k in (deg..v.len()).rev() {
            if v[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut v[k]);
            for (t, &pt) in phi[..deg].iter().enumerate() {
                if pt != 0 {
                    let idx = k - deg + t;
                    let t = c.mul_int(pt);
                    v[idx] -= &t;
                }
            }
        }
        v.truncate(deg);
    }
    v.resize(deg, Rational::ZERO);
    v.into_iter().collect()
}

impl CycNumber {
    pub fn zero(n: u32) -> Self {
        CycNumber {
            n,
            c: smallvec![Rational::ZERO; totient(n)],
        }
    }

    pub fn one(n: u32) -> Self {
        Self::from_rational(n, Rational::ONE)
    }

    /// A rational embedded in Q(ζ_n).
    pub fn from_rational(n: u32, r: Rational) -> Self {
        let mut c: Coeffs = smallvec![Rational::ZERO; totient(n)];
        c[0] = r;
        CycNumber { n, c }
    }

    pub fn rational(r: Rational) -> Self {
        Self::from_rational(1, r)
    }

    pub fn int(k: i64) -> Self {
        Self::rational(Rational::from_integer(k))
    }

    pub fn frac(p: i64, q: i64) -> Self {
        Self::rational(Rational::new(p, q))
    }

    /// ζ_n^k for any integer k.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![Rational::ZERO; e + 1];
        poly[e] = Rational::ONE;
        Self::make(n, &poly)
    }

    /// Reduction of Σ poly_i ζ_n^i.
    pub fn make(n: u32, poly: &[Rational]) -> Self {
        assert!(n >= 1, "conductor must be positive");
        CycNumber {
            n,
            c: reduce::<[Rational; 8]>(n, poly.iter().cloned().collect()),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Rational::is_zero)
    }

    /// The value as a rational, if it lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.c[1..].iter().all(Rational::is_zero) {
            Some(&self.c[0])
        } else {
            None
        }
    }

    fn common_field(&self, other: &Self) -> Result<u32, ScalarError> {
        if self.n == other.n || other.n == 1 {
            Ok(self.n)
        } else if self.n == 1 {
            Ok(other.n)
        } else {
            Err(ScalarError::FieldMismatch(self.n, other.n))
        }
    }

    /// Re-express in the field Q(ζ_target). Only conductor 1 can be promoted.
    pub fn promote(&self, target: u32) -> Result<Self, ScalarError> {
        if self.n == target {
            Ok(self.clone())
        } else if self.n == 1 {
            Ok(Self::from_rational(target, self.c[0].clone()))
        } else {
            Err(ScalarError::FieldMismatch(self.n, target))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ScalarError> {
        if self.n == other.n {
            let c = self.c.iter().zip(other.c.iter()).map(|(x, y)| x + y).collect();
            return Ok(CycNumber { n: self.n, c });
        }
        let n = self.common_field(other)?;
        let (a, b) = (self.promote(n)?, other.promote(n)?);
        let c = a.c.iter().zip(b.c.iter()).map(|(x, y)| x + y).collect();
        Ok(CycNumber { n, c })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        let n = self.common_field(other)?;
        if self.n == 1 || other.n == 1 {
            let (r, x) = if self.n == 1 { (&self.c[0], other) } else { (&other.c[0], self) };
            let c = x.c.iter().map(|v| v * r).collect();
            return Ok(CycNumber { n, c });
        }
        let deg = self.c.len();
        let mut prod: SmallVec<[Rational; 16]> = smallvec![Rational::ZERO; 2 * deg - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.c.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += &(x * y);
                }
            }
        }
        Ok(CycNumber {
            n,
            c: reduce(n, prod),
        })
    }

    /// Multiplicative inverse, found by solving y·z = 1 over the power basis.
    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::ZeroDivisor);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(self.n, r.recip().unwrap()));
        }
        let deg = self.c.len();
        // Column j of the matrix is self·ζ^j.
        let mut cols = Vec::with_capacity(deg);
        let mut cur = self.clone();
        let zeta = Self::root_of_unity(self.n, 1);
        for _ in 0..deg {
            cols.push(cur.c.clone());
            cur = cur.try_mul(&zeta)?;
        }
        let mut m: Vec<Vec<Rational>> = (0..deg)
            .map(|r| {
                let mut row: Vec<Rational> = (0..deg).map(|j| cols[j][r].clone()).collect();
                row.push(if r == 0 { Rational::ONE } else { Rational::ZERO });
                row
            })
            .collect();
        solve_rational_augmented(&mut m).ok_or(ScalarError::ZeroDivisor)?;
        let c = m.into_iter().map(|row| row[deg].clone()).collect();
        Ok(CycNumber { n: self.n, c })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ScalarError> {
        self.common_field(other)?;
        self.try_mul(&other.inverse()?)
    }

    /// Complex conjugation ζ ↦ ζ^{n−1}.
    pub fn conj(&self) -> Self {
        if self.n <= 2 {
            return self.clone();
        }
        let n = self.n as usize;
        let mut poly = vec![Rational::ZERO; n];
        for (i, c) in self.c.iter().enumerate() {
            if !c.is_zero() {
                poly[(i * (n - 1)) % n] += c;
            }
        }
        CycNumber {
            n: self.n,
            c: reduce::<[Rational; 8]>(self.n, poly.into_iter().collect()),
        }
    }

    pub fn pow(&self, exp: i64) -> Self {
        if exp < 0 {
            return self.inverse().expect("zero to a negative power").pow(-exp);
        }
        let mut acc = Self::one(self.n);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// `self += a * b`.
    #[inline]
    pub fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = a * b;
        *self += &p;
    }

    /// Floating-point value (re, im) with ζ_n = exp(2πi/n); display only.
    pub fn approx(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.c.iter().enumerate() {
            let th = 2.0 * std::f64::consts::PI * k as f64 / self.n as f64;
            let v = c.to_f64();
            re += v * th.cos();
            im += v * th.sin();
        }
        (re, im)
    }
}

/// Gauss–Jordan on an augmented rational system; leaves the solution in the
/// last column. `None` if singular.
fn solve_rational_augmented(m: &mut [Vec<Rational>]) -> Option<()> {
    let n = m.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip().unwrap();
        for v in m[col].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let t = &m[col][c] * &f;
                    m[r][c] -= &t;
                }
            }
        }
    }
    Some(())
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        if self.n != 1 && other.n != 1 {
            return false;
        }
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for CycNumber {}

impl Hash for CycNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // Trailing zeros trimmed so promoted rationals hash alike.
        let len = self.c.iter().rposition(|c| !c.is_zero()).map_or(0, |p| p + 1);
        for c in &self.c[..len] {
            c.hash(state);
        }
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            write!(f, "{}", self)
        } else {
            write!(f, "{} [n={}]", self, self.n)
        }
    }
}

/// Prints rationals as `p/q` and field elements as `c0 + c1*z + c2*z^2 …`,
/// `z` standing for the primitive root ζ_n.
impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "{var}")?,
                (_, false) => write!(f, "{mag}*{var}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber {
            n: self.n,
            c: self.c.iter().map(|x| -x).collect(),
        }
    }
}

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}

// Operator forms panic on a field mismatch; that is an internal invariant
// violation since every algebra fixes one conductor at construction.
impl Add for &CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Div for &CycNumber {
    type Output = CycNumber;
    fn div(self, rhs: &CycNumber) -> CycNumber {
        self.try_div(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: CycNumber) -> CycNumber {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: &CycNumber) -> CycNumber {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&CycNumber> for CycNumber {
    fn add_assign(&mut self, rhs: &CycNumber) {
        if rhs.is_zero() {
            return;
        }
        if self.n == rhs.n {
            for (x, y) in self.c.iter_mut().zip(rhs.c.iter()) {
                *x += y;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&CycNumber> for CycNumber {
    fn sub_assign(&mut self, rhs: &CycNumber) {
        if rhs.is_zero() {
            return;
        }
        if self.n == rhs.n {
            for (x, y) in self.c.iter_mut().zip(rhs.c.iter()) {
                *x -= y;
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl serde::Serialize for CycNumber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64) -> Rational {
        Rational::from_integer(p)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), &[-1, 1]);
        assert_eq!(cyclotomic_poly(4), &[1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), &[1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), &[1, 0, -1, 0, 1]);
        assert_eq!(totient(7), 6);
        assert_eq!(totient(8), 4);
    }

    #[test]
    fn make_reduces() {
        let x = CycNumber::make(4, &[q(0), q(0), q(1)]);
        assert_eq!(x.coeffs(), &[q(-1), q(0)]);
        assert!(CycNumber::make(3, &[q(1), q(1), q(1)]).is_zero());
        let z5 = CycNumber::make(5, &[q(0), q(1)]);
        assert_eq!(z5.coeffs(), &[q(0), q(1), q(0), q(0)]);
    }

    #[test]
    fn arithmetic_examples() {
        let i = CycNumber::root_of_unity(4, 1);
        assert_eq!(&i * &i, CycNumber::int(-1));
        assert_eq!(CycNumber::one(4).try_div(&i).unwrap(), -&i);
        let w = CycNumber::root_of_unity(3, 1);
        let w2 = CycNumber::root_of_unity(3, 2);
        assert_eq!(&w + &w2, CycNumber::int(-1));
    }

    #[test]
    fn errors() {
        let a = CycNumber::root_of_unity(3, 1);
        let b = CycNumber::root_of_unity(4, 1);
        assert_eq!(a.try_add(&b), Err(ScalarError::FieldMismatch(3, 4)));
        assert_eq!(a.try_div(&CycNumber::zero(3)), Err(ScalarError::ZeroDivisor));
        assert_eq!(ScalarError::ZeroDivisor.to_string(), "zero divisor");
        assert_eq!(ScalarError::FieldMismatch(3, 4).to_string(), "field mismatch (conductors 3 and 4)");
    }

    #[test]
    fn conjugation_examples() {
        let i = CycNumber::root_of_unity(4, 1);
        assert_eq!(i.conj(), -&i);
        assert_eq!(CycNumber::frac(3, 2).conj(), CycNumber::frac(3, 2));
        let x = &CycNumber::root_of_unity(5, 1) + &CycNumber::int(2);
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn display() {
        let x = CycNumber::make(5, &[q(3), q(0), Rational::new(-1, 2), q(1)]);
        assert_eq!(x.to_string(), "3 - 1/2*z^2 + z^3");
        assert_eq!(CycNumber::zero(7).to_string(), "0");
        assert_eq!((-CycNumber::root_of_unity(4, 1)).to_string(), "-z");
    }

    #[test]
    fn promoted_equality_and_hash() {
        use std::collections::hash_map::DefaultHasher;
        let a = CycNumber::int(5);
        let b = CycNumber::from_rational(7, q(5));
        assert_eq!(a, b);
        let h = |x: &CycNumber| {
            let mut s = DefaultHasher::new();
            x.hash(&mut s);
            s.finish()
        };
        assert_eq!(h(&a), h(&b));
    }
}
