//! Exact scalars: arbitrary-precision rationals and cyclotomic field elements.
//!
//! A [`Cyclotomic`] value of order `n` is a residue in Q[x]/(Phi_n(x)), stored
//! as a coefficient vector of length phi(n) over [`Rational`]. Arithmetic
//! reduces modulo Phi_n after every operation so equal values have equal
//! representations. Values of different orders never mix implicitly; callers
//! embed into a common order with [`Cyclotomic::embed`] first.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};
use thiserror::Error;

/// Exact rational scalar. `num_rational` keeps values reduced with a positive
/// denominator and a canonical zero, which is exactly the invariant we need.
pub type Rational = BigRational;

/// `p/q` as a [`Rational`]. Panics on `q == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(text: &str) -> Result<Rational, NumError> {
    let trimmed = text.trim();
    // Ratio's FromStr rejects a lone integer's error case inconsistently across
    // signs of whitespace, so normalize here and map the error.
    BigRational::from_str(trimmed).map_err(|_| NumError::BadRational(trimmed.to_string()))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("order {0} does not divide target order {1}")]
    NotASubfield(u32, u32),
    #[error("cannot parse rational from {0:?}")]
    BadRational(String),
}

pub fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|k| gcd(*k, n) == 1).count() as u32
}

pub fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

// --- dense univariate helpers over Q (ascending coefficients, trimmed) ---

fn poly_trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    poly_trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    poly_trim(out)
}

fn poly_scale(a: &[Rational], s: &Rational) -> Vec<Rational> {
    poly_trim(a.iter().map(|c| c * s).collect())
}

/// Quotient and remainder of `a` by `b`, `b` nonzero.
fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem: Vec<Rational> = a.to_vec();
    let db = b.len() - 1;
    let lead = &b[db];
    let mut quo = vec![Rational::zero(); a.len().saturating_sub(db)];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let factor = &rem[dr] / lead;
        quo[dr - db] = factor.clone();
        for (i, c) in b.iter().enumerate() {
            let t = c * &factor;
            rem[dr - db + i] -= t;
        }
        rem = poly_trim(rem);
        if rem.is_empty() {
            break;
        }
    }
    (poly_trim(quo), rem)
}

/// Extended gcd in Q[x]: returns `(g, u)` with `u*a = g (mod m)` and `g` the
/// monic gcd of `a` and `m`.
fn poly_half_ext_gcd(a: &[Rational], m: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0: Vec<Rational> = a.to_vec();
    let mut r1: Vec<Rational> = m.to_vec();
    let mut u0 = vec![Rational::one()];
    let mut u1: Vec<Rational> = Vec::new();
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let u = poly_sub(&u0, &poly_mul(&q, &u1));
        r0 = std::mem::replace(&mut r1, r);
        u0 = std::mem::replace(&mut u1, u);
    }
    let lead = r0.last().expect("gcd of nonzero inputs").clone();
    let inv = Rational::one() / lead;
    (poly_scale(&r0, &inv), poly_scale(&u0, &inv))
}

/// Coefficients of the n-th cyclotomic polynomial, ascending, monic.
/// Computed as (x^n - 1) / prod of Phi_d over proper divisors d | n.
pub fn cyclotomic_polynomial(n: u32) -> Vec<Rational> {
    assert!(n > 0, "cyclotomic order must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<Rational>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let mut xn_minus_1 = vec![Rational::zero(); n as usize + 1];
    xn_minus_1[0] = -Rational::one();
    xn_minus_1[n as usize] = Rational::one();
    let mut value = xn_minus_1;
    for d in 1..n {
        if n % d == 0 {
            let (q, r) = poly_divmod(&value, &cyclotomic_polynomial(d));
            debug_assert!(r.is_empty());
            value = q;
        }
    }
    cache.lock().unwrap().insert(n, value.clone());
    value
}

/// Element of Q(zeta_n), reduced modulo Phi_n. Coefficient `i` multiplies
/// zeta_n^i, and the vector always has length phi(n).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    fn reduce(order: u32, raw: Vec<Rational>) -> Cyclotomic {
        let modulus = cyclotomic_polynomial(order);
        let (_, rem) = poly_divmod(&poly_trim(raw), &modulus);
        let mut coeffs = rem;
        coeffs.resize(euler_phi(order) as usize, Rational::zero());
        Cyclotomic { order, coeffs }
    }

    pub fn zero(order: u32) -> Cyclotomic {
        Cyclotomic {
            order,
            coeffs: vec![Rational::zero(); euler_phi(order) as usize],
        }
    }

    pub fn one(order: u32) -> Cyclotomic {
        Cyclotomic::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, value: Rational) -> Cyclotomic {
        let mut out = Cyclotomic::zero(order);
        out.coeffs[0] = value;
        out
    }

    /// zeta_n^k (k taken modulo n, negatives allowed).
    pub fn root_of_unity(order: u32, k: i64) -> Result<Cyclotomic, NumError> {
        if order == 0 {
            return Err(NumError::ZeroOrder);
        }
        let k = k.rem_euclid(order as i64) as usize;
        let mut raw = vec![Rational::zero(); k + 1];
        raw[k] = Rational::one();
        Ok(Cyclotomic::reduce(order, raw))
    }

    /// Builds an element from coefficients of powers of zeta_n (any length).
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Result<Cyclotomic, NumError> {
        if order == 0 {
            return Err(NumError::ZeroOrder);
        }
        Ok(Cyclotomic::reduce(order, coeffs))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    /// The value as a rational, if the higher coefficients vanish.
    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    fn check_order(&self, other: &Cyclotomic) -> Result<(), NumError> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(NumError::OrderMismatch(self.order, other.order))
        }
    }

    pub fn try_add(&self, other: &Cyclotomic) -> Result<Cyclotomic, NumError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Cyclotomic {
            order: self.order,
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Cyclotomic) -> Result<Cyclotomic, NumError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Cyclotomic {
            order: self.order,
            coeffs,
        })
    }

    pub fn try_mul(&self, other: &Cyclotomic) -> Result<Cyclotomic, NumError> {
        self.check_order(other)?;
        let raw = poly_mul(&self.coeffs, &other.coeffs);
        Ok(Cyclotomic::reduce(self.order, raw))
    }

    pub fn inv(&self) -> Result<Cyclotomic, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        // Phi_n is irreducible over Q, so the gcd with any nonzero residue is 1
        // and the Bezout coefficient is the inverse.
        let modulus = cyclotomic_polynomial(self.order);
        let (g, u) = poly_half_ext_gcd(&poly_trim(self.coeffs.clone()), &modulus);
        debug_assert_eq!(g, vec![Rational::one()]);
        Ok(Cyclotomic::reduce(self.order, u))
    }

    pub fn try_div(&self, other: &Cyclotomic) -> Result<Cyclotomic, NumError> {
        self.check_order(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Cyclotomic {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one(self.order);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.try_mul(&base).expect("same order");
            }
            base = base.try_mul(&base).expect("same order");
            exp >>= 1;
        }
        acc
    }

    /// Re-expresses the value in Q(zeta_m) for a multiple m of the order,
    /// via zeta_n = zeta_m^(m/n).
    pub fn embed(&self, target_order: u32) -> Result<Cyclotomic, NumError> {
        if target_order == 0 {
            return Err(NumError::ZeroOrder);
        }
        if target_order % self.order != 0 {
            return Err(NumError::NotASubfield(self.order, target_order));
        }
        let step = (target_order / self.order) as usize;
        let mut raw = vec![Rational::zero(); self.coeffs.len() * step.max(1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let idx = i * step;
                if idx >= raw.len() {
                    raw.resize(idx + 1, Rational::zero());
                }
                raw[idx] = c.clone();
            }
        }
        Ok(Cyclotomic::reduce(target_order, raw))
    }

    /// Multiplicative order, when the value is a root of unity; None otherwise.
    pub fn multiplicative_order(&self) -> Option<u32> {
        let one = Cyclotomic::one(self.order);
        let mut acc = self.clone();
        for k in 1..=self.order {
            if acc == one {
                return Some(k);
            }
            acc = acc.try_mul(self).expect("same order");
        }
        None
    }

    /// Numeric value via zeta_n = exp(2 pi i / n), for float cross-checks.
    pub fn to_complex_f64(&self) -> num_complex::Complex64 {
        use num_complex::Complex64;
        use num_traits::ToPrimitive;
        let n = self.order as f64;
        let mut out = Complex64::new(0.0, 0.0);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * (i as f64) / n;
            let v = c.to_f64().unwrap_or(f64::NAN);
            out += Complex64::new(angle.cos(), angle.sin()) * v;
        }
        out
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let var = format!("z{}", self.order);
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "{var}")?;
                } else {
                    write!(f, "{var}^{i}")?;
                }
            }
        }
        Ok(())
    }
}

/// Field operations used generically by the exact linear algebra. The receiver
/// doubles as a field carrier so zero/one come out in the right field (a
/// cyclotomic zero needs an order).
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn s_zero(&self) -> Self;
    fn s_one(&self) -> Self;
    fn is_zero_val(&self) -> bool;
    fn s_add(&self, rhs: &Self) -> Self;
    fn s_sub(&self, rhs: &Self) -> Self;
    fn s_mul(&self, rhs: &Self) -> Self;
    fn s_neg(&self) -> Self;
    fn s_inv(&self) -> Result<Self, NumError>;

    fn s_div(&self, rhs: &Self) -> Result<Self, NumError> {
        Ok(self.s_mul(&rhs.s_inv()?))
    }
}

impl Scalar for Rational {
    fn s_zero(&self) -> Self {
        Rational::zero()
    }
    fn s_one(&self) -> Self {
        Rational::one()
    }
    fn is_zero_val(&self) -> bool {
        self.is_zero()
    }
    fn s_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn s_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn s_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn s_neg(&self) -> Self {
        -self
    }
    fn s_inv(&self) -> Result<Self, NumError> {
        if self.is_zero() {
            Err(NumError::DivisionByZero)
        } else {
            Ok(Rational::one() / self)
        }
    }
}

impl Scalar for Cyclotomic {
    fn s_zero(&self) -> Self {
        Cyclotomic::zero(self.order)
    }
    fn s_one(&self) -> Self {
        Cyclotomic::one(self.order)
    }
    fn is_zero_val(&self) -> bool {
        self.is_zero()
    }
    fn s_add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("order mismatch in scalar add")
    }
    fn s_sub(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("order mismatch in scalar sub")
    }
    fn s_mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("order mismatch in scalar mul")
    }
    fn s_neg(&self) -> Self {
        self.neg()
    }
    fn s_inv(&self) -> Result<Self, NumError> {
        self.inv()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_table() {
        let expected = [(1, 1), (2, 1), (3, 2), (4, 2), (6, 2), (12, 4)];
        for (n, phi) in expected {
            assert_eq!(euler_phi(n), phi, "phi({n})");
        }
    }

    #[test]
    fn cyclotomic_polynomials_divisors_of_12() {
        // Phi_1 = x-1, Phi_2 = x+1, Phi_3 = x^2+x+1, Phi_4 = x^2+1,
        // Phi_6 = x^2-x+1, Phi_12 = x^4-x^2+1.
        let as_i64 = |n: u32| -> Vec<i64> {
            cyclotomic_polynomial(n)
                .iter()
                .map(|c| {
                    assert!(c.is_integer());
                    i64::try_from(c.to_integer()).unwrap()
                })
                .collect()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn zeta6_squared_reduces() {
        let z2 = Cyclotomic::root_of_unity(6, 2).unwrap();
        let expected =
            Cyclotomic::from_coeffs(6, vec![rat_int(-1), rat_int(1)]).unwrap();
        assert_eq!(z2, expected); // zeta_6^2 = zeta_6 - 1
    }

    #[test]
    fn zeta6_inverse_is_fifth_power() {
        let one = Cyclotomic::one(6);
        let z = Cyclotomic::root_of_unity(6, 1).unwrap();
        let z5 = Cyclotomic::root_of_unity(6, 5).unwrap();
        assert_eq!(one.try_div(&z).unwrap(), z5);
        assert_eq!(z.try_mul(&z5).unwrap(), one);
    }

    #[test]
    fn zeta6_plus_fifth_power_is_one() {
        let z = Cyclotomic::root_of_unity(6, 1).unwrap();
        let z5 = Cyclotomic::root_of_unity(6, 5).unwrap();
        assert_eq!(z.try_add(&z5).unwrap(), Cyclotomic::one(6));
    }

    #[test]
    fn zeta6_cubed_is_minus_one() {
        let z3 = Cyclotomic::root_of_unity(6, 3).unwrap();
        assert_eq!(z3, Cyclotomic::from_rational(6, rat_int(-1)));
    }

    #[test]
    fn phi_vanishes_on_its_root() {
        for n in [1u32, 2, 3, 4, 6, 12] {
            let z = Cyclotomic::root_of_unity(n, 1).unwrap();
            let phi = cyclotomic_polynomial(n);
            let mut acc = Cyclotomic::zero(n);
            for (i, c) in phi.iter().enumerate() {
                let term = z.pow(i as u64).scale(c);
                acc = acc.try_add(&term).unwrap();
            }
            assert!(acc.is_zero(), "Phi_{n}(zeta_{n}) != 0");
        }
    }

    #[test]
    fn root_powers_multiply_to_one() {
        for n in [1u32, 2, 3, 4, 6, 12] {
            for k in 0..n as i64 {
                let a = Cyclotomic::root_of_unity(n, k).unwrap();
                let b = Cyclotomic::root_of_unity(n, n as i64 - k).unwrap();
                assert_eq!(a.try_mul(&b).unwrap(), Cyclotomic::one(n));
            }
        }
    }

    #[test]
    fn multiplicative_order_matches_gcd() {
        for n in [6u32, 12] {
            for k in 1..n as i64 {
                let z = Cyclotomic::root_of_unity(n, k).unwrap();
                let expected = n / gcd(k as u32, n);
                assert_eq!(z.multiplicative_order(), Some(expected));
            }
        }
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = Cyclotomic::one(6);
        let b = Cyclotomic::one(12);
        assert_eq!(a.try_add(&b), Err(NumError::OrderMismatch(6, 12)));
        assert_eq!(a.try_mul(&b), Err(NumError::OrderMismatch(6, 12)));
    }

    #[test]
    fn embedding_into_order_12() {
        let z6 = Cyclotomic::root_of_unity(6, 1).unwrap();
        let embedded = z6.embed(12).unwrap();
        assert_eq!(embedded, Cyclotomic::root_of_unity(12, 2).unwrap());
        assert_eq!(z6.embed(5), Err(NumError::NotASubfield(6, 5)));
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(Cyclotomic::zero(6).inv(), Err(NumError::DivisionByZero));
    }

    #[test]
    fn rational_parsing_round_trip() {
        for text in ["-11/6", "8", "11/192", "-5/4", "0"] {
            let v = parse_rational(text).unwrap();
            assert_eq!(v.to_string(), text);
        }
        assert!(parse_rational("x/y").is_err());
    }

    use proptest::prelude::*;

    fn cyclotomic_strategy(order: u32) -> impl Strategy<Value = Cyclotomic> {
        let dim = euler_phi(order) as usize;
        proptest::collection::vec((-12i64..=12, 1i64..=6), dim).prop_map(move |entries| {
            let coeffs = entries.into_iter().map(|(n, d)| rat(n, d)).collect();
            Cyclotomic::from_coeffs(order, coeffs).expect("phi(order) coefficients")
        })
    }

    fn assert_field_axioms(a: &Cyclotomic, b: &Cyclotomic, c: &Cyclotomic) {
        let n = a.order();
        let ab = a.try_add(b).unwrap();
        assert_eq!(ab, b.try_add(a).unwrap());
        assert_eq!(ab.try_add(c).unwrap(), a.try_add(&b.try_add(c).unwrap()).unwrap());
        let amb = a.try_mul(b).unwrap();
        assert_eq!(amb, b.try_mul(a).unwrap());
        assert_eq!(amb.try_mul(c).unwrap(), a.try_mul(&b.try_mul(c).unwrap()).unwrap());
        assert_eq!(
            a.try_mul(&b.try_add(c).unwrap()).unwrap(),
            amb.try_add(&a.try_mul(c).unwrap()).unwrap()
        );
        assert!(a.try_add(&a.neg()).unwrap().is_zero());
        if !a.is_zero() {
            assert_eq!(a.try_mul(&a.inv().unwrap()).unwrap(), Cyclotomic::one(n));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms_order_6(
            a in cyclotomic_strategy(6),
            b in cyclotomic_strategy(6),
            c in cyclotomic_strategy(6),
        ) {
            assert_field_axioms(&a, &b, &c);
        }

        #[test]
        fn field_axioms_order_12(
            a in cyclotomic_strategy(12),
            b in cyclotomic_strategy(12),
            c in cyclotomic_strategy(12),
        ) {
            assert_field_axioms(&a, &b, &c);
        }
    }
}
