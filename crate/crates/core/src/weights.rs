//! Weights and root data for `Uq[osp(2|n)]`.
//!
//! Weights are stored in the coordinate basis `(eps_1, delta_1 .. delta_k)`
//! with exact rational coefficients; `eps_2` is represented as `-eps_1`. The
//! invariant bilinear form is `(eps_1, eps_1) = 1`, `(delta_m, delta_n) =
//! -delta^m_n`, `(eps_1, delta_m) = 0`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;
use crate::scalar::{rat, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weight {
    eps1: Rational,
    delta: Vec<Rational>,
}

impl Weight {
    pub fn zero(k: usize) -> Self {
        Weight {
            eps1: Rational::zero(),
            delta: vec![Rational::zero(); k],
        }
    }

    pub fn eps1(k: usize) -> Self {
        let mut w = Self::zero(k);
        w.eps1 = Rational::one();
        w
    }

    /// `delta_mu` for a 1-based `mu` in `1..=k`.
    pub fn delta(k: usize, mu: usize) -> Self {
        assert!(
            (1..=k).contains(&mu),
            "delta index {mu} out of range for k={k}"
        );
        let mut w = Self::zero(k);
        w.delta[mu - 1] = Rational::one();
        w
    }

    pub fn k(&self) -> usize {
        self.delta.len()
    }

    pub fn eps1_coeff(&self) -> &Rational {
        &self.eps1
    }

    pub fn delta_coeff(&self, mu: usize) -> &Rational {
        &self.delta[mu - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.eps1.is_zero() && self.delta.iter().all(|c| c.is_zero())
    }

    /// The invariant bilinear form.
    pub fn bilinear(&self, other: &Weight) -> Rational {
        assert_eq!(self.k(), other.k(), "mismatched weight lengths");
        let mut acc = &self.eps1 * &other.eps1;
        for (a, b) in self.delta.iter().zip(other.delta.iter()) {
            acc -= a * b;
        }
        acc
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.k(), rhs.k());
        Weight {
            eps1: &self.eps1 + &rhs.eps1,
            delta: self
                .delta
                .iter()
                .zip(&rhs.delta)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.k(), rhs.k());
        Weight {
            eps1: &self.eps1 - &rhs.eps1,
            delta: self
                .delta
                .iter()
                .zip(&rhs.delta)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            eps1: -self.eps1.clone(),
            delta: self.delta.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut put = |f: &mut fmt::Formatter<'_>, c: &Rational, name: String| -> fmt::Result {
            if c.is_zero() {
                return Ok(());
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{name}")
            } else {
                write!(f, "{c}*{name}")
            }
        };
        put(f, &self.eps1.clone(), "eps1".to_string())?;
        for (i, c) in self.delta.clone().iter().enumerate() {
            put(f, c, format!("delta{}", i + 1))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Which simple root a generator index refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootLabel {
    /// `alpha_mu = delta_mu - delta_{mu+1}`, `1 <= mu < k`.
    Mu(usize),
    /// `alpha_s = delta_k - eps_1` (odd, isotropic).
    S,
    /// `alpha_t = delta_k + eps_1` (odd, isotropic).
    T,
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootLabel::Mu(mu) => write!(f, "alpha_{mu}"),
            RootLabel::S => write!(f, "alpha_s"),
            RootLabel::T => write!(f, "alpha_t"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SimpleRoot {
    pub label: RootLabel,
    pub weight: Weight,
    /// Parity of the attached generators `e`, `f`.
    pub parity: u8,
}

/// Simple roots, Cartan matrix and `rho` for a given even `n`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub n: usize,
    pub k: usize,
    pub simple: Vec<SimpleRoot>,
    pub rho: Weight,
}

impl RootSystem {
    pub fn new(n: usize) -> Result<Self, Error> {
        if n < 2 || !n.is_multiple_of(2) {
            return Err(Error::InvalidN(n as i64));
        }
        let k = n / 2;
        let mut simple = Vec::with_capacity(k + 1);
        for mu in 1..k {
            simple.push(SimpleRoot {
                label: RootLabel::Mu(mu),
                weight: &Weight::delta(k, mu) - &Weight::delta(k, mu + 1),
                parity: 0,
            });
        }
        simple.push(SimpleRoot {
            label: RootLabel::S,
            weight: &Weight::delta(k, k) - &Weight::eps1(k),
            parity: 1,
        });
        simple.push(SimpleRoot {
            label: RootLabel::T,
            weight: &Weight::delta(k, k) + &Weight::eps1(k),
            parity: 1,
        });
        // rho = sum_mu (k - mu) delta_mu, the graded half-sum of positive roots
        let mut rho = Weight::zero(k);
        for mu in 1..=k {
            rho = &rho + &Weight::delta(k, mu).scale_int((k - mu) as i64);
        }
        Ok(RootSystem { n, k, simple, rho })
    }

    pub fn num_simple(&self) -> usize {
        self.simple.len()
    }

    pub fn root(&self, c: usize) -> &SimpleRoot {
        &self.simple[c]
    }

    pub fn weight(&self, c: usize) -> &Weight {
        &self.simple[c].weight
    }

    /// `(alpha_c, alpha_c)`.
    pub fn norm(&self, c: usize) -> Rational {
        self.simple[c].weight.bilinear(&self.simple[c].weight)
    }

    pub fn is_isotropic(&self, c: usize) -> bool {
        self.norm(c).is_zero()
    }

    /// Cartan matrix entry: `2 (a_b, a_c) / (a_b, a_b)` for non-isotropic rows,
    /// `(a_b, a_c)` for isotropic rows.
    pub fn cartan_entry(&self, b: usize, c: usize) -> Rational {
        let pairing = self.weight(b).bilinear(self.weight(c));
        let norm = self.norm(b);
        if norm.is_zero() {
            pairing
        } else {
            rat(2, 1) * pairing / norm
        }
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<Rational>> {
        (0..self.num_simple())
            .map(|b| {
                (0..self.num_simple())
                    .map(|c| self.cartan_entry(b, c))
                    .collect()
            })
            .collect()
    }

    /// Expresses `w` over the simple-root basis; the simple roots span the
    /// weight space, so this always succeeds and the result is exact.
    pub fn decompose(&self, w: &Weight) -> Vec<Rational> {
        let k = self.k;
        assert_eq!(w.k(), k);
        let mut coeffs = vec![Rational::zero(); self.num_simple()];
        // c_1 = w_{d1}; c_mu = w_{dmu} + c_{mu-1} for mu < k; then the
        // delta_k and eps_1 components fix c_s and c_t.
        let mut prev = Rational::zero();
        for mu in 1..k {
            let c = w.delta_coeff(mu) + &prev;
            coeffs[mu - 1] = c.clone();
            prev = c;
        }
        let dk = w.delta_coeff(k) + &prev;
        let we = w.eps1_coeff().clone();
        let half = rat(1, 2);
        coeffs[self.num_simple() - 2] = (&dk - &we) * &half; // c_s
        coeffs[self.num_simple() - 1] = (&dk + &we) * &half; // c_t
        coeffs
    }
}

impl Weight {
    fn scale_int(&self, v: i64) -> Weight {
        let c = rat(v, 1);
        Weight {
            eps1: &self.eps1 * &c,
            delta: self.delta.iter().map(|d| d * &c).collect(),
        }
    }
}

/// Converts an exact rational known to be integral; panics otherwise.
pub fn rational_to_i64(r: &Rational) -> i64 {
    assert!(r.is_integer(), "expected integer, got {r}");
    r.to_integer().to_i64().expect("integer out of i64 range")
}
