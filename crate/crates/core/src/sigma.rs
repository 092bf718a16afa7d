//! The sigma operators: formal noncommutative words in the raised simple
//! generators, the seeded table indexed by strict basis pairs, the induction
//! that fills the remaining pairs, and the closed two-term form every entry
//! evaluates to in the vector representation.

use std::collections::{btree_map, BTreeMap, HashMap};
use std::sync::Arc;

use crate::basis::{BasisTable, Pair};
use crate::error::Error;
use crate::matrix::{sign, GradedMatrix};
use crate::rep::Rep;
use crate::scalar::Laurent;
use crate::weights::{rational_to_i64, RootLabel, RootSystem};

/// Alphabet of the word algebra. `Raise(c)` stands for `E_c = e_c q^{h_c/2}`;
/// `Lower(c)` stands for its graded conjugate `q^{h_c/2} e_c^†`. Lowering
/// symbols only appear in conjugated expressions.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GenSymbol {
    Raise(usize),
    Lower(usize),
}

impl GenSymbol {
    fn root(&self) -> usize {
        match self {
            GenSymbol::Raise(c) | GenSymbol::Lower(c) => *c,
        }
    }
}

/// A linear combination of words with Laurent coefficients. Words are kept in
/// a canonical key order for storage only; no rewriting against relations is
/// attempted, so equality of the underlying operators is decided after
/// evaluation in a representation.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SigmaExpr {
    terms: BTreeMap<Vec<GenSymbol>, Laurent>,
}

impl SigmaExpr {
    pub fn zero() -> Self {
        SigmaExpr {
            terms: BTreeMap::new(),
        }
    }

    pub fn symbol(sym: GenSymbol) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![sym], Laurent::one());
        SigmaExpr { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_words(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, word: Vec<GenSymbol>, coeff: Laurent) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                let next = o.get() + &coeff;
                if next.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = next;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Laurent) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    /// Word concatenation extended bilinearly.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    /// Graded conjugation: words reverse with `(AB)^† = (-1)^{[A][B]} B^† A^†`,
    /// `Raise(c)^† = Lower(c)` and `Lower(c)^† = (-1)^{[c]} Raise(c)`.
    /// Coefficients are untouched (`q` is treated as real).
    pub fn dagger(&self, roots: &RootSystem) -> Self {
        let mut out = Self::zero();
        for (word, coeff) in &self.terms {
            let parities: Vec<u8> = word.iter().map(|s| roots.simple[s.root()].parity).collect();
            let mut exponent = 0u8;
            for i in 0..word.len() {
                for j in (i + 1)..word.len() {
                    exponent = (exponent + parities[i] * parities[j]) % 2;
                }
            }
            let mut c = coeff * &sign(exponent);
            let mut new_word = Vec::with_capacity(word.len());
            for sym in word.iter().rev() {
                match sym {
                    GenSymbol::Raise(r) => new_word.push(GenSymbol::Lower(*r)),
                    GenSymbol::Lower(r) => {
                        c = &c * &sign(roots.simple[*r].parity);
                        new_word.push(GenSymbol::Raise(*r));
                    }
                }
            }
            out.add_term(new_word, c);
        }
        out
    }

    /// Homomorphic evaluation: substitute each symbol by its matrix image in
    /// `rep` and multiply out. Also usable with coproduct images on `V⊗V`.
    pub fn eval(&self, rep: &Rep) -> GradedMatrix {
        let mut cache: HashMap<GenSymbol, GradedMatrix> = HashMap::new();
        let mut image = |sym: GenSymbol| -> GradedMatrix {
            assert!(
                sym.root() < rep.num_simple(),
                "unresolved generator symbol {sym:?} for n = {}",
                rep.table.n
            );
            cache
                .entry(sym)
                .or_insert_with(|| match sym {
                    GenSymbol::Raise(c) => rep.e_cap(c),
                    GenSymbol::Lower(c) => rep.f_cap(c),
                })
                .clone()
        };
        let mut out = GradedMatrix::zero(rep.table.clone(), rep.arity);
        for (word, coeff) in &self.terms {
            let mut acc = GradedMatrix::identity(rep.table.clone(), rep.arity);
            for sym in word {
                acc = acc.mul(&image(*sym));
            }
            out = out.add(&acc.scale(&rep.scalar(coeff.clone())));
        }
        out
    }
}

/// The sigma table: one expression per strict pair `(b, a)`.
#[derive(Clone, Debug)]
pub struct SigmaTable {
    pub table: Arc<BasisTable>,
    pub roots: Arc<RootSystem>,
    entries: BTreeMap<(usize, usize), SigmaExpr>,
}

impl SigmaTable {
    /// Seeds the table with the simple values: per `alpha_mu` both bar-paired
    /// entries equal `q^{-1/2} E_mu`; per `alpha_s` and `alpha_t` the leading
    /// entry is `q^{1/2} E_c` with the partner carrying the `(-1)^k q^{-1}`
    /// cross-coefficient; the `2 eps_1` entry is identically zero.
    pub fn simple(n: usize) -> Result<Self, Error> {
        let table = BasisTable::new(n)?;
        let roots = Arc::new(RootSystem::new(n)?);
        let k = table.k;
        let po = |mu: usize| table.position_of_odd(mu);
        let pe = |i: usize| table.position_of_even(i);
        // (-1)^k q^{-1}
        let cross = &Laurent::s_pow(-2) * &sign((k % 2) as u8);

        let mut entries = BTreeMap::new();
        for (c, root) in roots.simple.iter().enumerate() {
            match root.label {
                RootLabel::Mu(mu) => {
                    let expr = SigmaExpr::symbol(GenSymbol::Raise(c)).scale(&Laurent::s_pow(-1));
                    entries.insert((po(mu), po(mu + 1)), expr.clone());
                    entries.insert((po(table.bar_odd(mu + 1)), po(table.bar_odd(mu))), expr);
                }
                RootLabel::S => {
                    let main = SigmaExpr::symbol(GenSymbol::Raise(c)).scale(&Laurent::s_pow(1));
                    entries.insert((pe(2), po(table.bar_odd(k))), main.scale(&cross));
                    entries.insert((po(k), pe(1)), main);
                }
                RootLabel::T => {
                    let main = SigmaExpr::symbol(GenSymbol::Raise(c)).scale(&Laurent::s_pow(1));
                    entries.insert((pe(1), po(table.bar_odd(k))), main.scale(&cross));
                    entries.insert((po(k), pe(2)), main);
                }
            }
        }
        entries.insert((pe(1), pe(2)), SigmaExpr::zero());
        Ok(SigmaTable {
            table,
            roots,
            entries,
        })
    }

    /// Builds the complete table: seeds, then the induction
    /// `s_ba = q^{-(w_b, w_a)} s_bc s_ca
    ///        - q^{-(w_c, w_c)} (-1)^{([b]+[c])([a]+[c])} s_ca s_bc`
    /// with a pivot `c` strictly between `b` and `a` in weight order and `c`
    /// outside `{bar a, bar b}`. The fill covers, in order: pairs inside the
    /// leading odd block and its mirror, pairs into the even positions, and
    /// finally block-to-mirror pairs; running each group by increasing span
    /// keeps every pivot's sub-entries available.
    pub fn extended(n: usize) -> Result<Self, Error> {
        let mut t = Self::simple(n)?;
        let dim = t.table.dim;
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for b in 0..dim {
            for a in (b + 1)..dim {
                pairs.push((b, a));
            }
        }
        pairs.sort_by_key(|&(b, a)| (a - b, b));
        for (b, a) in pairs {
            if t.entries.contains_key(&(b, a)) {
                continue;
            }
            let c = t.choose_pivot(b, a);
            let expr = t.induction_step(b, c, a);
            t.entries.insert((b, a), expr);
        }
        debug_assert_eq!(t.entries.len(), dim * (dim - 1) / 2);
        Ok(t)
    }

    /// Deterministic pivot: the first admissible position strictly between
    /// `b` and `a`, skipping `bar a` and `bar b`. At least one admissible
    /// pivot exists for every non-seed pair.
    fn choose_pivot(&self, b: usize, a: usize) -> usize {
        for c in (b + 1)..a {
            if c == self.table.bar(a) || c == self.table.bar(b) {
                continue;
            }
            if self.entries.contains_key(&(b, c)) && self.entries.contains_key(&(c, a)) {
                return c;
            }
        }
        unreachable!("no admissible pivot for pair ({b}, {a}); fill order violated");
    }

    /// One application of the induction relation with pivot `c`.
    pub fn induction_step(&self, b: usize, c: usize, a: usize) -> SigmaExpr {
        let t = &self.table;
        let s_bc = self.entries.get(&(b, c)).expect("missing (b, c) entry");
        let s_ca = self.entries.get(&(c, a)).expect("missing (c, a) entry");
        let w_ba = rational_to_i64(&t.weight(b).bilinear(t.weight(a)));
        let w_cc = rational_to_i64(&t.weight(c).bilinear(t.weight(c)));
        let par = ((t.parity(b) + t.parity(c)) % 2) * ((t.parity(a) + t.parity(c)) % 2);
        let first = s_bc.mul(s_ca).scale(&Laurent::s_pow(-2 * w_ba));
        let second = s_ca
            .mul(s_bc)
            .scale(&(&Laurent::s_pow(-2 * w_cc) * &sign(par)));
        first.sub(&second)
    }

    pub fn expr(&self, b: usize, a: usize) -> Option<&SigmaExpr> {
        self.entries.get(&(b, a))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Pair, &SigmaExpr)> {
        self.entries.iter().map(|(&(b, a), e)| (Pair { b, a }, e))
    }

    /// Evaluates every entry in a representation.
    pub fn evaluate(&self, rep: &Rep) -> BTreeMap<(usize, usize), GradedMatrix> {
        self.entries
            .iter()
            .map(|(&(b, a), expr)| ((b, a), expr.eval(rep)))
            .collect()
    }
}

/// Closed form of the evaluated sigma operator in the vector representation:
/// `s_ba = q^{-(w_a, w_b)} E^b_a
///         - (-1)^{[b]([a]+[b])} xi_a xi_b q^{(w_a, w_a)} q^{(rho, w_a - w_b)} E^{bar a}_{bar b}`.
pub fn closed_form_sigma(
    table: &Arc<BasisTable>,
    roots: &RootSystem,
    b: usize,
    a: usize,
) -> Result<GradedMatrix, Error> {
    if b >= a || a >= table.dim {
        return Err(Error::InvalidPair {
            b,
            a,
            dim: table.dim,
        });
    }
    let wa = table.weight(a);
    let wb = table.weight(b);
    let first = GradedMatrix::elem(table.clone(), b, a)
        .scale(&Laurent::s_pow(-2 * rational_to_i64(&wa.bilinear(wb))));
    let pb = table.parity(b);
    let pab = (table.parity(a) + pb) % 2;
    let aa_exp = rational_to_i64(&wa.bilinear(wa));
    let rho_exp = rational_to_i64(&roots.rho.bilinear(&(wa - wb)));
    let mut coeff = Laurent::s_pow(2 * (aa_exp + rho_exp));
    if table.xi(a) * table.xi(b) < 0 {
        coeff = -coeff;
    }
    coeff = &coeff * &sign(pb * pab);
    let second = GradedMatrix::elem(table.clone(), table.bar(a), table.bar(b)).scale(&coeff);
    Ok(first.sub(&second))
}

/// The reduced operator appearing in the closed-form R-matrix:
/// `t_ba = E^b_a - (-1)^{[b]([a]+[b])} xi_a xi_b q^{(rho, w_a - w_b)} E^{bar a}_{bar b}`.
pub fn closed_form_sigma_tilde(
    table: &Arc<BasisTable>,
    roots: &RootSystem,
    b: usize,
    a: usize,
) -> GradedMatrix {
    let wa = table.weight(a);
    let wb = table.weight(b);
    let pb = table.parity(b);
    let pab = (table.parity(a) + pb) % 2;
    let rho_exp = rational_to_i64(&roots.rho.bilinear(&(wa - wb)));
    let mut coeff = Laurent::s_pow(2 * rho_exp);
    if table.xi(a) * table.xi(b) < 0 {
        coeff = -coeff;
    }
    coeff = &coeff * &sign(pb * pab);
    GradedMatrix::elem(table.clone(), b, a)
        .sub(&GradedMatrix::elem(table.clone(), table.bar(a), table.bar(b)).scale(&coeff))
}

/// The opposite-side analogue:
/// `t_ab = E^a_b - (-1)^{[a]([a]+[b])} xi_a xi_b q^{(rho, w_a - w_b)} E^{bar b}_{bar a}`.
pub fn closed_form_sigma_tilde_op(
    table: &Arc<BasisTable>,
    roots: &RootSystem,
    b: usize,
    a: usize,
) -> GradedMatrix {
    let wa = table.weight(a);
    let wb = table.weight(b);
    let pa = table.parity(a);
    let pab = (pa + table.parity(b)) % 2;
    let rho_exp = rational_to_i64(&roots.rho.bilinear(&(wa - wb)));
    let mut coeff = Laurent::s_pow(2 * rho_exp);
    if table.xi(a) * table.xi(b) < 0 {
        coeff = -coeff;
    }
    coeff = &coeff * &sign(pa * pab);
    GradedMatrix::elem(table.clone(), a, b)
        .sub(&GradedMatrix::elem(table.clone(), table.bar(b), table.bar(a)).scale(&coeff))
}
