//! Sparse matrices over the Laurent ring on `V`, `V⊗V` or `V⊗3`, with the
//! grading signs of the tensor calculus baked into the tensor-product matrix.
//!
//! The sign convention is `(A ⊗ B)(|u> ⊗ |v>) = (-1)^{[B][u]} A|u> ⊗ B|v>`,
//! so plain matrix products downstream reproduce
//! `(A ⊗ B)(C ⊗ D) = (-1)^{[B][C]} (AC ⊗ BD)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::basis::BasisTable;
use crate::error::Error;
use crate::scalar::{Laurent, Rational};
use crate::weights::Weight;

#[derive(Clone)]
pub struct GradedMatrix {
    table: Arc<BasisTable>,
    arity: usize,
    entries: BTreeMap<(usize, usize), Laurent>,
}

pub fn sign(parity_product: u8) -> Laurent {
    if parity_product.is_multiple_of(2) {
        Laurent::one()
    } else {
        -Laurent::one()
    }
}

impl GradedMatrix {
    pub fn zero(table: Arc<BasisTable>, arity: usize) -> Self {
        GradedMatrix {
            table,
            arity,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(table: Arc<BasisTable>, arity: usize) -> Self {
        let side = table.side(arity);
        let mut m = Self::zero(table, arity);
        for i in 0..side {
            m.entries.insert((i, i), Laurent::one());
        }
        m
    }

    /// Elementary matrix `E^a_b` with a single 1 in row `a`, column `b`.
    pub fn elem(table: Arc<BasisTable>, a: usize, b: usize) -> Self {
        let dim = table.dim;
        assert!(a < dim && b < dim, "elementary index out of range");
        let mut m = Self::zero(table, 1);
        m.entries.insert((a, b), Laurent::one());
        m
    }

    pub fn diagonal<F: FnMut(usize) -> Laurent>(
        table: Arc<BasisTable>,
        arity: usize,
        mut f: F,
    ) -> Self {
        let side = table.side(arity);
        let mut m = Self::zero(table, arity);
        for i in 0..side {
            let v = f(i);
            if !v.is_zero() {
                m.entries.insert((i, i), v);
            }
        }
        m
    }

    pub fn table(&self) -> &Arc<BasisTable> {
        &self.table
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn side(&self) -> usize {
        self.table.side(self.arity)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, r: usize, c: usize) -> Laurent {
        self.entries
            .get(&(r, c))
            .cloned()
            .unwrap_or_else(Laurent::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Laurent)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    /// First nonzero entry in lexicographic (row, col) order.
    pub fn first_entry(&self) -> Option<(usize, usize, &Laurent)> {
        self.entries.iter().next().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn insert_add(&mut self, r: usize, c: usize, v: Laurent) {
        if v.is_zero() {
            return;
        }
        let side = self.side();
        assert!(r < side && c < side, "entry out of range");
        match self.entries.get_mut(&(r, c)) {
            Some(cur) => {
                let next = &*cur + &v;
                if next.is_zero() {
                    self.entries.remove(&(r, c));
                } else {
                    *cur = next;
                }
            }
            None => {
                self.entries.insert((r, c), v);
            }
        }
    }

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(self.table.n, other.table.n, "mismatched basis tables");
        assert_eq!(self.arity, other.arity, "mismatched arities");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.insert_add(r, c, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.insert_add(r, c, -v);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for v in out.entries.values_mut() {
            *v = -&*v;
        }
        out
    }

    pub fn scale(&self, c: &Laurent) -> Self {
        if c.is_zero() {
            return Self::zero(self.table.clone(), self.arity);
        }
        let mut out = self.clone();
        for v in out.entries.values_mut() {
            *v = &*v * c;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        // group rhs entries by row once
        let mut rows: BTreeMap<usize, Vec<(usize, &Laurent)>> = BTreeMap::new();
        for (r, c, v) in other.entries() {
            rows.entry(r).or_default().push((c, v));
        }
        let mut out = Self::zero(self.table.clone(), self.arity);
        for (r, mid, v1) in self.entries() {
            if let Some(row) = rows.get(&mid) {
                for (c, v2) in row {
                    out.insert_add(r, *c, v1 * *v2);
                }
            }
        }
        out
    }

    /// Graded commutator `AB - (-1)^{[A][B]} BA`; panics on non-homogeneous input.
    pub fn gcomm(&self, other: &Self) -> Self {
        let pa = self
            .homogeneous_parity()
            .expect("gcomm: lhs not homogeneous");
        let pb = other
            .homogeneous_parity()
            .expect("gcomm: rhs not homogeneous");
        let ab = self.mul(other);
        let ba = other.mul(self).scale(&sign(pa * pb));
        ab.sub(&ba)
    }

    /// Parity if every nonzero entry has the same row+column parity; the zero
    /// matrix reports parity 0.
    pub fn homogeneous_parity(&self) -> Option<u8> {
        let mut parity = None;
        for (r, c, _) in self.entries() {
            let p = (self.table.parity_multi(r, self.arity)
                + self.table.parity_multi(c, self.arity))
                % 2;
            match parity {
                None => parity = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(parity.unwrap_or(0))
    }

    /// Weight if every nonzero entry has the same row-minus-column weight; the
    /// zero matrix reports the zero weight.
    pub fn homogeneous_weight(&self) -> Option<Weight> {
        let mut weight: Option<Weight> = None;
        for (r, c, _) in self.entries() {
            let w =
                &self.table.weight_multi(r, self.arity) - &self.table.weight_multi(c, self.arity);
            match &weight {
                None => weight = Some(w),
                Some(prev) if *prev != w => return None,
                _ => {}
            }
        }
        Some(weight.unwrap_or_else(|| Weight::zero(self.table.k)))
    }

    /// Graded tensor product; both factors must be parity-homogeneous.
    pub fn gtensor(&self, other: &Self) -> Self {
        assert_eq!(self.table.n, other.table.n, "mismatched basis tables");
        self.homogeneous_parity()
            .expect("gtensor: lhs not homogeneous");
        let pb = other
            .homogeneous_parity()
            .expect("gtensor: rhs not homogeneous");
        let arity = self.arity + other.arity;
        let shift = other.table.side(other.arity);
        let mut out = Self::zero(self.table.clone(), arity);
        for (r1, c1, v1) in self.entries() {
            let col_parity = self.table.parity_multi(c1, self.arity);
            let s = sign(pb * col_parity);
            let v1s = v1 * &s;
            for (r2, c2, v2) in other.entries() {
                out.entries
                    .insert((r1 * shift + r2, c1 * shift + c2), &v1s * v2);
            }
        }
        out
    }

    /// Conjugation by the graded permutation `P(|u>⊗|v>) = (-1)^{[u][v]} |v>⊗|u>`.
    pub fn graded_twist(&self) -> Self {
        assert_eq!(self.arity, 2, "graded_twist needs arity 2");
        let dim = self.table.dim;
        let mut out = Self::zero(self.table.clone(), 2);
        for (r, c, v) in self.entries() {
            let (r1, r2) = (r / dim, r % dim);
            let (c1, c2) = (c / dim, c % dim);
            let s = sign(
                self.table.parity(r1) * self.table.parity(r2)
                    + self.table.parity(c1) * self.table.parity(c2),
            );
            out.insert_add(r2 * dim + r1, c2 * dim + c1, v * &s);
        }
        out
    }

    /// Conjugation by the graded swap of tensor slots 2 and 3 on `V⊗3`.
    pub fn swap_legs_23(&self) -> Self {
        assert_eq!(self.arity, 3, "swap_legs_23 needs arity 3");
        let mut out = Self::zero(self.table.clone(), 3);
        for (r, c, v) in self.entries() {
            let rd = self.table.split(r, 3);
            let cd = self.table.split(c, 3);
            let s = sign(
                self.table.parity(rd[1]) * self.table.parity(rd[2])
                    + self.table.parity(cd[1]) * self.table.parity(cd[2]),
            );
            out.insert_add(
                self.table.compose(&[rd[0], rd[2], rd[1]]),
                self.table.compose(&[cd[0], cd[2], cd[1]]),
                v * &s,
            );
        }
        out
    }

    /// Embeds an arity-2 matrix into slots (1,2) of `V⊗3`.
    pub fn leg_12(&self) -> Self {
        assert_eq!(self.arity, 2);
        self.gtensor(&Self::identity(self.table.clone(), 1))
    }

    /// Embeds an arity-2 matrix into slots (2,3) of `V⊗3`.
    pub fn leg_23(&self) -> Self {
        assert_eq!(self.arity, 2);
        Self::identity(self.table.clone(), 1).gtensor(self)
    }

    /// Embeds an arity-2 matrix into slots (1,3) of `V⊗3`.
    pub fn leg_13(&self) -> Self {
        self.leg_12().swap_legs_23()
    }

    /// Graded conjugate-transpose on `End V`: maps each `E^a_b` term by
    /// `(E^a_b)^† = (-1)^{[a]([a]+[b])} E^b_a`, leaving coefficients alone.
    pub fn gdagger(&self) -> Self {
        assert_eq!(self.arity, 1, "gdagger is defined on End V");
        let mut out = Self::zero(self.table.clone(), 1);
        for (a, b, v) in self.entries() {
            let pa = self.table.parity(a);
            let pb = self.table.parity(b);
            out.insert_add(b, a, v * &sign(pa * ((pa + pb) % 2)));
        }
        out
    }

    pub fn eval_s(&self, s: &Rational) -> Result<Self, Error> {
        self.map_entries(|v| Ok(Laurent::from_rational(v.eval_s(s)?)))
    }

    pub fn eval_q(&self, q: &Rational) -> Result<Self, Error> {
        self.map_entries(|v| Ok(Laurent::from_rational(v.eval_q(q)?)))
    }

    fn map_entries<F: Fn(&Laurent) -> Result<Laurent, Error>>(&self, f: F) -> Result<Self, Error> {
        let mut out = Self::zero(self.table.clone(), self.arity);
        for (r, c, v) in self.entries() {
            out.insert_add(r, c, f(v)?);
        }
        Ok(out)
    }

    /// Column `c` as a dense vector, for bra/ket style assertions in tests.
    pub fn column(&self, c: usize) -> Vec<Laurent> {
        let mut out = vec![Laurent::zero(); self.side()];
        for (r, cc, v) in self.entries() {
            if cc == c {
                out[r] = v.clone();
            }
        }
        out
    }
}

impl PartialEq for GradedMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.table.n == other.table.n && self.arity == other.arity && self.entries == other.entries
    }
}

impl Eq for GradedMatrix {}

impl fmt::Debug for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "GradedMatrix(n={}, arity={}, nnz={})",
            self.table.n,
            self.arity,
            self.entries.len()
        )?;
        for (r, c, v) in self.entries() {
            writeln!(f, "  ({r}, {c}) -> {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use proptest::prelude::*;

    fn table(n: usize) -> Arc<BasisTable> {
        BasisTable::new(n).unwrap()
    }

    #[test]
    fn elementary_action_on_kets() {
        // E^a_b |c> = delta^c_b |a>
        let t = table(2);
        let e = GradedMatrix::elem(t.clone(), 0, 1);
        let col = e.column(1);
        assert!(col[0].is_one());
        assert!(e.column(0).iter().all(Laurent::is_zero));
        // E^1_1 fixes |1>
        let d = GradedMatrix::elem(t, 0, 0);
        assert!(d.column(0)[0].is_one());
    }

    #[test]
    fn gtensor_sign_rule_example() {
        // n=2: (I ⊗ E^2_1)(|1> ⊗ |1>) = -|1> ⊗ |2>, since [E^2_1] and [|1>] are odd
        let t = table(2);
        let id = GradedMatrix::identity(t.clone(), 1);
        let e21 = GradedMatrix::elem(t.clone(), 1, 0);
        let m = id.gtensor(&e21);
        let col = m.column(0); // |1> ⊗ |1> is composite index 0
        assert_eq!(col[1], -Laurent::one()); // composite (0,1) = |1> ⊗ |2>
        assert_eq!(m.num_entries(), 4);
    }

    #[test]
    fn gtensor_identity_is_identity() {
        let t = table(2);
        let id = GradedMatrix::identity(t.clone(), 1);
        assert_eq!(id.gtensor(&id), GradedMatrix::identity(t, 2));
    }

    proptest! {
        #[test]
        fn gtensor_multiplication_rule(a in 0usize..4, b in 0usize..4, c in 0usize..4,
                                        d in 0usize..4, e in 0usize..4, f in 0usize..4,
                                        g in 0usize..4, h in 0usize..4) {
            // (A ⊗ B)(C ⊗ D) = (-1)^{[B][C]} (AC ⊗ BD) on elementary matrices
            let t = table(2);
            let ma = GradedMatrix::elem(t.clone(), a, b);
            let mb = GradedMatrix::elem(t.clone(), c, d);
            let mc = GradedMatrix::elem(t.clone(), e, f);
            let md = GradedMatrix::elem(t.clone(), g, h);
            let lhs = ma.gtensor(&mb).mul(&mc.gtensor(&md));
            let pb = mb.homogeneous_parity().unwrap();
            let pc = mc.homogeneous_parity().unwrap();
            let rhs = ma.mul(&mc).gtensor(&mb.mul(&md)).scale(&sign(pb * pc));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn twist_is_involutive(entries in proptest::collection::vec((0usize..16, 0usize..16, -3i64..=3), 1..8)) {
            let t = table(2);
            let mut m = GradedMatrix::zero(t, 2);
            for (r, c, v) in entries {
                m.insert_add(r, c, Laurent::from_int(v));
            }
            prop_assert_eq!(m.graded_twist().graded_twist(), m);
        }
    }

    #[test]
    fn twist_of_elementary_tensor() {
        // twist(E^1_2 ⊗ E^2_1) = (-1)^{1*1} E^2_1 ⊗ E^1_2 for n=2, both odd
        let t = table(2);
        let e12 = GradedMatrix::elem(t.clone(), 0, 1); // parities [p1]+[p2] = 1
        let e21 = GradedMatrix::elem(t.clone(), 1, 0);
        let lhs = e12.gtensor(&e21).graded_twist();
        let rhs = e21.gtensor(&e12).neg();
        assert_eq!(lhs, rhs);
        let id2 = GradedMatrix::identity(t, 2);
        assert_eq!(id2.graded_twist(), id2);
    }

    #[test]
    fn twist_matches_parity_rule_for_all_elementary_tensors() {
        let t = table(2);
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let ma = GradedMatrix::elem(t.clone(), a, b);
                        let mb = GradedMatrix::elem(t.clone(), c, d);
                        let pa = ma.homogeneous_parity().unwrap();
                        let pb = mb.homogeneous_parity().unwrap();
                        let lhs = ma.gtensor(&mb).graded_twist();
                        let rhs = mb.gtensor(&ma).scale(&sign(pa * pb));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn gtensor_parity_adds() {
        let t = table(2);
        let odd = GradedMatrix::elem(t.clone(), 0, 1); // odd+even
        let even = GradedMatrix::elem(t.clone(), 1, 2);
        assert_eq!(odd.homogeneous_parity(), Some(1));
        assert_eq!(even.homogeneous_parity(), Some(0));
        assert_eq!(odd.gtensor(&even).homogeneous_parity(), Some(1));
        assert_eq!(odd.gtensor(&odd).homogeneous_parity(), Some(0));
    }

    #[test]
    fn gtensor_associates_on_index_triples() {
        let t = table(2);
        let x = GradedMatrix::elem(t.clone(), 0, 1);
        let y = GradedMatrix::elem(t.clone(), 2, 3);
        let z = GradedMatrix::elem(t.clone(), 1, 1);
        assert_eq!(x.gtensor(&y).gtensor(&z), x.gtensor(&y.gtensor(&z)));
    }

    #[test]
    fn gdagger_examples() {
        let t = table(2);
        // diagonal entries are fixed
        let d = GradedMatrix::elem(t.clone(), 0, 0);
        assert_eq!(d.gdagger(), d);
        // double dagger fixes even matrices
        let even = GradedMatrix::elem(t.clone(), 0, 3); // odd+odd = even
        assert_eq!(even.gdagger().gdagger(), even);
        // and negates odd ones
        let odd = GradedMatrix::elem(t, 0, 1);
        assert_eq!(odd.gdagger().gdagger(), odd.neg());
    }

    #[test]
    fn gdagger_is_a_graded_antihomomorphism() {
        let t = table(2);
        for a in 0..4usize {
            for b in 0..4usize {
                for c in 0..4usize {
                    for d in 0..4usize {
                        let x = GradedMatrix::elem(t.clone(), a, b);
                        let y = GradedMatrix::elem(t.clone(), c, d);
                        let px = x.homogeneous_parity().unwrap();
                        let py = y.homogeneous_parity().unwrap();
                        let lhs = x.mul(&y).gdagger();
                        let rhs = y.gdagger().mul(&x.gdagger()).scale(&sign(px * py));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn gcomm_basics() {
        let t = table(2);
        let id = GradedMatrix::identity(t.clone(), 1);
        let b = GradedMatrix::elem(t.clone(), 0, 1);
        assert!(id.gcomm(&b).is_zero());
        // odd A: [A, A] = 2 A^2
        let a = GradedMatrix::elem(t, 0, 1);
        assert_eq!(a.gcomm(&a), a.mul(&a).scale(&Laurent::from_int(2)));
    }

    #[test]
    fn eval_maps_entries() {
        let t = table(2);
        let m = GradedMatrix::elem(t, 0, 1).scale(&Laurent::q_minus_q_inv());
        let at2 = m.eval_s(&rat(2, 1)).unwrap();
        assert_eq!(at2.get(0, 1), Laurent::from_rational(rat(15, 4)));
    }
}
