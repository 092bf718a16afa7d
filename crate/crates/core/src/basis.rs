//! Basis bookkeeping for the `(n+2)`-dimensional graded vector module `V`.
//!
//! Positions are 0-based and ordered by strictly decreasing weight:
//! `delta_1, ..., delta_k, eps_1, -eps_1, -delta_k, ..., -delta_1`. With this
//! order every weight comparison used by the construction becomes a position
//! comparison, and the sigma-table index set is the strict upper triangle.

use std::sync::Arc;

use crate::error::Error;
use crate::weights::Weight;

/// Label of a basis position: odd indices `1..=n`, even indices `1..=2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Label {
    Odd(usize),
    Even(usize),
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Label::Odd(mu) => write!(f, "odd{mu}"),
            Label::Even(i) => write!(f, "even{i}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BasisPoint {
    pub label: Label,
    pub parity: u8,
    pub weight: Weight,
    /// Position of the conjugate label (an involution).
    pub bar: usize,
    /// Sign factor: `+1` on even positions, `(-1)^mu` on odd position `mu`.
    pub xi: i64,
}

/// An ordered pair of positions with `position(b) < position(a)`, i.e.
/// `weight(b) > weight(a)`; indexes one sigma-table entry.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Pair {
    pub b: usize,
    pub a: usize,
}

#[derive(Clone, Debug)]
pub struct BasisTable {
    pub n: usize,
    pub k: usize,
    pub dim: usize,
    points: Vec<BasisPoint>,
}

impl BasisTable {
    pub fn new(n: usize) -> Result<Arc<Self>, Error> {
        if n < 2 || !n.is_multiple_of(2) {
            return Err(Error::InvalidN(n as i64));
        }
        let k = n / 2;
        let dim = n + 2;
        let mut points = Vec::with_capacity(dim);
        // Odd labels mu = 1..k carry weight delta_mu; the even pair carries
        // +-eps_1; odd labels mu = k+1..n carry -delta_{n+1-mu}.
        for mu in 1..=k {
            points.push(BasisPoint {
                label: Label::Odd(mu),
                parity: 1,
                weight: Weight::delta(k, mu),
                bar: dim - 1 - (mu - 1),
                xi: if mu % 2 == 0 { 1 } else { -1 },
            });
        }
        points.push(BasisPoint {
            label: Label::Even(1),
            parity: 0,
            weight: Weight::eps1(k),
            bar: k + 1,
            xi: 1,
        });
        points.push(BasisPoint {
            label: Label::Even(2),
            parity: 0,
            weight: -&Weight::eps1(k),
            bar: k,
            xi: 1,
        });
        for j in 1..=k {
            let mu = k + j;
            points.push(BasisPoint {
                label: Label::Odd(mu),
                parity: 1,
                weight: -&Weight::delta(k, k + 1 - j),
                bar: dim - 1 - (k + 2 + j - 1),
                xi: if mu.is_multiple_of(2) { 1 } else { -1 },
            });
        }
        Ok(Arc::new(BasisTable { n, k, dim, points }))
    }

    pub fn point(&self, p: usize) -> &BasisPoint {
        &self.points[p]
    }

    pub fn parity(&self, p: usize) -> u8 {
        self.points[p].parity
    }

    pub fn weight(&self, p: usize) -> &Weight {
        &self.points[p].weight
    }

    pub fn bar(&self, p: usize) -> usize {
        self.points[p].bar
    }

    pub fn xi(&self, p: usize) -> i64 {
        self.points[p].xi
    }

    /// Position of odd label `mu` in `1..=n`.
    pub fn position_of_odd(&self, mu: usize) -> usize {
        assert!((1..=self.n).contains(&mu), "odd label {mu} out of range");
        if mu <= self.k {
            mu - 1
        } else {
            self.k + 2 + (mu - self.k) - 1
        }
    }

    /// Position of even label `i` in `1..=2`.
    pub fn position_of_even(&self, i: usize) -> usize {
        assert!((1..=2).contains(&i), "even label {i} out of range");
        self.k + i - 1
    }

    /// Conjugate of an odd label: `n + 1 - mu`.
    pub fn bar_odd(&self, mu: usize) -> usize {
        self.n + 1 - mu
    }

    /// All ordered pairs `(b, a)` with `position(b) < position(a)`.
    pub fn strict_pairs(&self) -> Vec<Pair> {
        let mut out = Vec::with_capacity(self.dim * (self.dim - 1) / 2);
        for b in 0..self.dim {
            for a in (b + 1)..self.dim {
                out.push(Pair { b, a });
            }
        }
        out
    }

    pub fn side(&self, arity: usize) -> usize {
        self.dim.pow(arity as u32)
    }

    /// Splits a composite index into its per-factor digits, first factor most
    /// significant.
    pub fn split(&self, idx: usize, arity: usize) -> Vec<usize> {
        let mut digits = vec![0usize; arity];
        let mut rest = idx;
        for slot in (0..arity).rev() {
            digits[slot] = rest % self.dim;
            rest /= self.dim;
        }
        assert_eq!(rest, 0, "index out of range for arity {arity}");
        digits
    }

    pub fn compose(&self, digits: &[usize]) -> usize {
        let mut idx = 0usize;
        for &d in digits {
            assert!(d < self.dim);
            idx = idx * self.dim + d;
        }
        idx
    }

    /// Parity of a composite index: mod-2 sum of factor parities.
    pub fn parity_multi(&self, idx: usize, arity: usize) -> u8 {
        self.split(idx, arity)
            .into_iter()
            .fold(0u8, |acc, d| (acc + self.parity(d)) % 2)
    }

    /// Weight of a composite index: sum of factor weights.
    pub fn weight_multi(&self, idx: usize, arity: usize) -> Weight {
        let mut w = Weight::zero(self.k);
        for d in self.split(idx, arity) {
            w = &w + self.weight(d);
        }
        w
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn n2_table() {
        let t = BasisTable::new(2).unwrap();
        assert_eq!(t.dim, 4);
        let parities: Vec<u8> = (0..4).map(|p| t.parity(p)).collect();
        assert_eq!(parities, vec![1, 0, 0, 1]);
        assert_eq!(*t.weight(0), Weight::delta(1, 1));
        assert_eq!(*t.weight(1), Weight::eps1(1));
        assert_eq!(*t.weight(2), -&Weight::eps1(1));
        assert_eq!(*t.weight(3), -&Weight::delta(1, 1));
        let bars: Vec<usize> = (0..4).map(|p| t.bar(p)).collect();
        assert_eq!(bars, vec![3, 2, 1, 0]);
        let xis: Vec<i64> = (0..4).map(|p| t.xi(p)).collect();
        assert_eq!(xis, vec![-1, 1, 1, 1]);
    }

    #[test]
    fn n4_table() {
        let t = BasisTable::new(4).unwrap();
        assert_eq!(t.dim, 6);
        let odd: Vec<usize> = (0..6).filter(|&p| t.parity(p) == 1).collect();
        assert_eq!(odd, vec![0, 1, 4, 5]);
        // positions 4, 5 carry odd labels mu = 3, 4
        assert_eq!(t.point(4).label, Label::Odd(3));
        assert_eq!(t.point(5).label, Label::Odd(4));
        assert_eq!(t.xi(0), -1);
        assert_eq!(t.xi(4), -1);
        assert_eq!(t.xi(5), 1);
    }

    #[test]
    fn bar_is_an_involution_negating_weights() {
        for n in (2..=10).step_by(2) {
            let t = BasisTable::new(n).unwrap();
            for p in 0..t.dim {
                assert_eq!(t.bar(t.bar(p)), p);
                assert_eq!(*t.weight(t.bar(p)), -t.weight(p));
                assert_eq!(t.parity(t.bar(p)), t.parity(p));
            }
            // exactly two even positions
            let evens = (0..t.dim).filter(|&p| t.parity(p) == 0).count();
            assert_eq!(evens, 2);
        }
    }

    #[test]
    fn weights_strictly_decrease_in_position_order() {
        // checked through the decomposition over simple roots: consecutive
        // differences must be nonzero sums of positive-root directions, which
        // for this order means weight(p) - weight(p+1) has positive pairing
        // order; we assert the simpler statement that all weights are
        // pairwise distinct and that each difference against the next has a
        // positive first nonzero coordinate in (delta_1..delta_k, eps1).
        for n in (2..=8).step_by(2) {
            let t = BasisTable::new(n).unwrap();
            for p in 0..t.dim - 1 {
                let d = t.weight(p) - t.weight(p + 1);
                let mut coords: Vec<_> = (1..=t.k).map(|mu| d.delta_coeff(mu).clone()).collect();
                coords.push(d.eps1_coeff().clone());
                let first = coords.iter().find(|c| !num_traits::Zero::is_zero(*c));
                assert!(first.is_some(), "weights must be distinct");
                assert!(first.unwrap() > &rat(0, 1), "weights must decrease");
            }
        }
    }

    #[test]
    fn strict_pair_differences_decompose_over_simple_roots() {
        use crate::weights::RootSystem;
        for n in (2..=8).step_by(2) {
            let t = BasisTable::new(n).unwrap();
            let rs = RootSystem::new(n).unwrap();
            for pair in t.strict_pairs() {
                let diff = t.weight(pair.b) - t.weight(pair.a);
                let coeffs = rs.decompose(&diff);
                let two_eps1 = pair.b == t.position_of_even(1) && pair.a == t.position_of_even(2);
                if two_eps1 {
                    // 2 eps_1 = alpha_t - alpha_s
                    let m = rs.num_simple();
                    assert_eq!(coeffs[m - 2], rat(-1, 1));
                    assert_eq!(coeffs[m - 1], rat(1, 1));
                    assert!(coeffs[..m - 2].iter().all(num_traits::Zero::is_zero));
                } else {
                    for c in &coeffs {
                        assert!(
                            c.is_integer() && c >= &rat(0, 1),
                            "non-positive decomposition for {pair:?} in n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn composite_index_round_trip() {
        let t = BasisTable::new(4).unwrap();
        for idx in 0..t.side(3) {
            let digits = t.split(idx, 3);
            assert_eq!(t.compose(&digits), idx);
        }
    }

    #[test]
    fn rejects_bad_n() {
        assert!(BasisTable::new(0).is_err());
        assert!(BasisTable::new(5).is_err());
    }
}
