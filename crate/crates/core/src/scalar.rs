//! Laurent polynomials in `s = q^(1/2)` with exact rational coefficients.
//!
//! Every scalar in this crate lives in the ring `Q[s, s^-1]`. Exponents are
//! stored relative to `s` rather than `q`, so half-integer powers of `q` sit
//! at integer keys and no fractional exponent representation is needed.
//! Canonical form keeps no zero coefficients, which makes structural equality
//! coincide with ring equality; the zero element is the empty map.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

pub type Rational = BigRational;

/// Convenience constructor for an exact rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A Laurent polynomial in `s = q^(1/2)` over the rationals.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: BTreeMap<i64, Rational>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::s_pow(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(rat(v, 1))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    /// The monomial `c * s^exp`.
    pub fn monomial(exp: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Laurent { terms }
    }

    /// `s^exp`.
    pub fn s_pow(exp: i64) -> Self {
        Self::monomial(exp, Rational::one())
    }

    /// `q^exp` for an integer exponent, i.e. `s^(2 exp)`.
    pub fn q_pow(exp: i64) -> Self {
        Self::s_pow(2 * exp)
    }

    /// `q^h` for a half-integer `h`; rejects anything with 2h not an integer.
    pub fn q_power(h: &Rational) -> Result<Self, Error> {
        let doubled = h * rat(2, 1);
        if !doubled.is_integer() {
            return Err(Error::NotHalfInteger(h.clone()));
        }
        let exp = doubled
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::NotHalfInteger(h.clone()))?;
        Ok(Self::s_pow(exp))
    }

    /// Canonicalising constructor: sums duplicate exponents, drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(iter: I) -> Self {
        let mut out = Laurent::zero();
        for (exp, c) in iter {
            out.add_term(exp, c);
        }
        out
    }

    /// The symmetric q-integer `[m] = (q^m - q^-m) / (q - q^-1)`.
    pub fn q_int(m: i64) -> Self {
        if m == 0 {
            return Self::zero();
        }
        let a = m.abs();
        let mut out = Self::zero();
        for j in 0..a {
            out.add_term(2 * (a - 1) - 4 * j, Rational::one());
        }
        if m < 0 {
            out = -&out;
        }
        out
    }

    /// `q - q^-1`, the ubiquitous deformation prefactor.
    pub fn q_minus_q_inv() -> Self {
        Self::from_terms([(2, Rational::one()), (-2, -Rational::one())])
    }

    /// `q + q^-1`.
    pub fn q_plus_q_inv() -> Self {
        Self::from_terms([(2, Rational::one()), (-2, Rational::one())])
    }

    fn add_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Coefficient of `s^exp` (zero if absent).
    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// True when every exponent of `s` is even, i.e. the value lies in `Q[q, q^-1]`.
    pub fn has_only_even_powers(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// Exact evaluation at a nonzero rational value of `s`.
    pub fn eval_s(&self, s: &Rational) -> Result<Rational, Error> {
        if s.is_zero() {
            return Err(Error::EvalAtZero);
        }
        let mut acc = Rational::zero();
        for (e, c) in self.terms() {
            acc += c * pow_rational(s, e);
        }
        Ok(acc)
    }

    /// Exact evaluation at a nonzero rational value of `q = s^2`.
    ///
    /// Only defined for values in `Q[q, q^-1]`; odd powers of `s` are rejected.
    pub fn eval_q(&self, q: &Rational) -> Result<Rational, Error> {
        if q.is_zero() {
            return Err(Error::EvalAtZero);
        }
        let mut acc = Rational::zero();
        for (e, c) in self.terms() {
            if e % 2 != 0 {
                return Err(Error::OddPowerOfS(q.clone()));
            }
            acc += c * pow_rational(q, e / 2);
        }
        Ok(acc)
    }
}

fn pow_rational(base: &Rational, exp: i64) -> Rational {
    let e = i32::try_from(exp).expect("exponent out of range");
    if e >= 0 {
        num_traits::pow::Pow::pow(base, e as u32)
    } else {
        num_traits::pow::Pow::pow(&base.recip(), (-e) as u32)
    }
}

/// Exact square root of a nonnegative rational, if one exists.
pub fn sqrt_rational(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let num = q.numer();
    let den = q.denom();
    let rn = num_integer::Roots::sqrt(num);
    let rd = num_integer::Roots::sqrt(den);
    if &(&rn * &rn) == num && &(&rd * &rd) == den {
        Some(Rational::new(rn, rd))
    } else {
        None
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Laurent {
            type Output = Laurent;
            fn $method(self, rhs: Laurent) -> Laurent {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Laurent> for Laurent {
            type Output = Laurent;
            fn $method(self, rhs: &Laurent) -> Laurent {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Laurent> for &Laurent {
            type Output = Laurent;
            fn $method(self, rhs: Laurent) -> Laurent {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}

forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -&self
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && e != 0;
            if !unit_coeff {
                write!(f, "{}", mag)?;
            }
            match e {
                0 => {}
                1 => {
                    if !unit_coeff {
                        write!(f, "*")?;
                    }
                    write!(f, "s")?;
                }
                _ => {
                    if !unit_coeff {
                        write!(f, "*")?;
                    }
                    write!(f, "s^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalize_cancels_to_zero() {
        let x = Laurent::from_terms([(0, rat(1, 1)), (0, rat(-1, 1))]);
        assert!(x.is_zero());
    }

    #[test]
    fn normalize_merges_like_terms() {
        let x = Laurent::from_terms([(1, rat(1, 2)), (1, rat(1, 2))]);
        assert_eq!(x, Laurent::s_pow(1));
    }

    #[test]
    fn q_minus_q_inv_has_expected_terms() {
        let x = Laurent::q_minus_q_inv();
        assert_eq!(x.coeff(2), rat(1, 1));
        assert_eq!(x.coeff(-2), rat(-1, 1));
        assert_eq!(x.num_terms(), 2);
    }

    #[test]
    fn product_of_conjugate_binomials() {
        // (q - q^-1)(q + q^-1) = q^2 - q^-2
        let p = Laurent::q_minus_q_inv() * Laurent::q_plus_q_inv();
        assert_eq!(p, Laurent::from_terms([(4, rat(1, 1)), (-4, rat(-1, 1))]));
    }

    #[test]
    fn unit_cancellation_and_absorption() {
        assert!((Laurent::s_pow(1) * Laurent::s_pow(-1)).is_one());
        assert!((Laurent::zero() * Laurent::q_minus_q_inv()).is_zero());
    }

    #[test]
    fn q_power_examples() {
        assert_eq!(Laurent::q_power(&rat(1, 2)).unwrap(), Laurent::s_pow(1));
        assert_eq!(Laurent::q_power(&rat(-1, 1)).unwrap(), Laurent::s_pow(-2));
        assert_eq!(Laurent::q_power(&rat(3, 2)).unwrap(), Laurent::s_pow(3));
        assert!(Laurent::q_power(&rat(1, 3)).is_err());
    }

    #[test]
    fn eval_examples() {
        // q - q^-1 at s = 2 (q = 4) is 15/4
        let x = Laurent::q_minus_q_inv();
        assert_eq!(x.eval_s(&rat(2, 1)).unwrap(), rat(15, 4));
        // s^3 at s = 3/2 is 27/8
        assert_eq!(Laurent::s_pow(3).eval_s(&rat(3, 2)).unwrap(), rat(27, 8));
        // any q^h at s = 1 is 1
        assert_eq!(Laurent::s_pow(-7).eval_s(&rat(1, 1)).unwrap(), rat(1, 1));
        assert!(Laurent::s_pow(-1).eval_s(&rat(0, 1)).is_err());
        assert!(Laurent::s_pow(1).eval_q(&rat(2, 1)).is_err());
        assert_eq!(Laurent::q_pow(-1).eval_q(&rat(3, 2)).unwrap(), rat(2, 3));
    }

    #[test]
    fn q_int_values() {
        assert!(Laurent::q_int(0).is_zero());
        assert!(Laurent::q_int(1).is_one());
        // [2] = q + q^-1
        assert_eq!(Laurent::q_int(2), Laurent::q_plus_q_inv());
        assert_eq!(Laurent::q_int(-2), -Laurent::q_plus_q_inv());
        // [3] = q^2 + 1 + q^-2
        assert_eq!(
            Laurent::q_int(3),
            Laurent::from_terms([(4, rat(1, 1)), (0, rat(1, 1)), (-4, rat(1, 1))])
        );
    }

    #[test]
    fn sqrt_rational_examples() {
        assert_eq!(sqrt_rational(&rat(4, 9)), Some(rat(2, 3)));
        assert_eq!(sqrt_rational(&rat(4, 1)), Some(rat(2, 1)));
        assert_eq!(sqrt_rational(&rat(3, 2)), None);
        assert_eq!(sqrt_rational(&rat(-4, 1)), None);
    }

    fn arb_laurent() -> impl Strategy<Value = Laurent> {
        proptest::collection::vec(((-6i64..=6), (-9i64..=9), (1i64..=4)), 0..6)
            .prop_map(|v| Laurent::from_terms(v.into_iter().map(|(e, n, d)| (e, rat(n, d)))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &Laurent::zero(), a.clone());
            prop_assert_eq!(&a * &Laurent::one(), a.clone());
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn eval_is_ring_homomorphism(a in arb_laurent(), b in arb_laurent(), sn in 1i64..6, sd in 1i64..4) {
            let s = rat(sn, sd);
            let lhs = (&a * &b).eval_s(&s).unwrap();
            let rhs = a.eval_s(&s).unwrap() * b.eval_s(&s).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = (&a + &b).eval_s(&s).unwrap();
            let rhs = a.eval_s(&s).unwrap() + b.eval_s(&s).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn q_power_is_additive(a in -8i64..8, b in -8i64..8) {
            let ha = rat(a, 2);
            let hb = rat(b, 2);
            let lhs = Laurent::q_power(&ha).unwrap() * Laurent::q_power(&hb).unwrap();
            let rhs = Laurent::q_power(&(ha + hb)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
