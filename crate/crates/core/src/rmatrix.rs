//! Assembly of the vector R-matrix and its opposite, either from the closed
//! two-term form or by running the sigma recursion through the ansatz
//! `R = q^{Cartan pairing} [ I⊗I + (q - q^{-1}) sum (-1)^{[b]} E^a_b ⊗ s_ba ]`.

use std::sync::Arc;

use crate::basis::BasisTable;
use crate::error::Error;
use crate::matrix::{sign, GradedMatrix};
use crate::rep::Rep;
use crate::scalar::Laurent;
use crate::sigma::{closed_form_sigma_tilde, closed_form_sigma_tilde_op, SigmaTable};
use crate::weights::rational_to_i64;

/// Construction route for the vector R-matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RMode {
    ClosedForm,
    Recursion,
}

/// Construction route for the opposite vector R-matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RtMode {
    ClosedForm,
    /// Graded twist of the recursion-built R-matrix.
    Dagger,
}

/// The diagonal Cartan factor on `V⊗V`: entry `q^{(w_u, w_v)}` at `(u, v)`.
pub fn cartan_diag2(table: &Arc<BasisTable>) -> GradedMatrix {
    let dim = table.dim;
    GradedMatrix::diagonal(table.clone(), 2, |idx| {
        let (u, v) = (idx / dim, idx % dim);
        Laurent::s_pow(2 * rational_to_i64(&table.weight(u).bilinear(table.weight(v))))
    })
}

/// The Lax ansatz with the second slot realised in `slot2`: the Cartan factor
/// becomes the diagonal `q^{(w_u, w_m)}` over `V ⊗ (slot2 space)`, and each
/// strict pair contributes `(-1)^{[b]} E^a_b ⊗ eval(s_ba)`.
///
/// With `slot2` the vector representation this is the recursion-mode vector
/// R-matrix; with coproduct images it realises the fusion left-hand side.
pub fn lax_matrix(sigma: &SigmaTable, slot2: &Rep) -> GradedMatrix {
    let table = &sigma.table;
    let arity = 1 + slot2.arity;
    let side2 = table.side(slot2.arity);
    let prefactor = slot2.scalar(Laurent::q_minus_q_inv());

    let mut sum = GradedMatrix::identity(table.clone(), arity);
    for (pair, expr) in sigma.pairs() {
        let image = expr.eval(slot2);
        if image.is_zero() {
            continue;
        }
        let elem = GradedMatrix::elem(table.clone(), pair.a, pair.b);
        let term = elem
            .gtensor(&image)
            .scale(&(&prefactor * &sign(table.parity(pair.b))));
        sum = sum.add(&term);
    }

    let cartan = GradedMatrix::diagonal(table.clone(), arity, |idx| {
        let u = idx / side2;
        let m = idx % side2;
        let pairing = table
            .weight(u)
            .bilinear(&table.weight_multi(m, slot2.arity));
        Laurent::s_pow(2 * rational_to_i64(&pairing))
    });
    let cartan = match slot2.s_point() {
        Some(s) => cartan.eval_s(s).expect("substitution point is nonzero"),
        None => cartan,
    };
    cartan.mul(&sum)
}

/// The opposite Lax ansatz with the second slot realised in `slot2`:
/// `sum_a E^a_a ⊗ q^{h_{w_a}} + (q - q^{-1}) sum (-1)^{[a]} E^b_a ⊗ s_ab q^{h_{w_a}}`
/// with `s_ab = (-1)^{[b]([a]+[b])} s_ba^†`.
pub fn opposite_lax_matrix(sigma: &SigmaTable, slot2: &Rep) -> GradedMatrix {
    let table = &sigma.table;
    let arity = 1 + slot2.arity;
    let prefactor = slot2.scalar(Laurent::q_minus_q_inv());

    let mut out = GradedMatrix::zero(table.clone(), arity);
    for a in 0..table.dim {
        let elem = GradedMatrix::elem(table.clone(), a, a);
        out = out.add(&elem.gtensor(&slot2.cartan_exp(table.weight(a))));
    }
    for (pair, expr) in sigma.pairs() {
        let conj = expr.dagger(&sigma.roots);
        let pair_parity =
            table.parity(pair.b) * ((table.parity(pair.a) + table.parity(pair.b)) % 2);
        let image = conj.eval(slot2).scale(&sign(pair_parity));
        if image.is_zero() {
            continue;
        }
        let image = image.mul(&slot2.cartan_exp(table.weight(pair.a)));
        let elem = GradedMatrix::elem(table.clone(), pair.b, pair.a);
        let term = elem
            .gtensor(&image)
            .scale(&(&prefactor * &sign(table.parity(pair.a))));
        out = out.add(&term);
    }
    out
}

/// The vector R-matrix on `V⊗V`.
pub fn build_vector_r(n: usize, mode: RMode) -> Result<GradedMatrix, Error> {
    match mode {
        RMode::ClosedForm => {
            let table = BasisTable::new(n)?;
            let roots = crate::weights::RootSystem::new(n)?;
            let mut out = cartan_diag2(&table);
            let prefactor = Laurent::q_minus_q_inv();
            for pair in table.strict_pairs() {
                let tilde = closed_form_sigma_tilde(&table, &roots, pair.b, pair.a);
                if tilde.is_zero() {
                    continue;
                }
                let elem = GradedMatrix::elem(table.clone(), pair.a, pair.b);
                let term = elem
                    .gtensor(&tilde)
                    .scale(&(&prefactor * &sign(table.parity(pair.b))));
                out = out.add(&term);
            }
            Ok(out)
        }
        RMode::Recursion => {
            let sigma = SigmaTable::extended(n)?;
            let rep = Rep::vector(n)?;
            Ok(lax_matrix(&sigma, &rep))
        }
    }
}

/// The opposite vector R-matrix on `V⊗V`.
pub fn build_vector_rt(n: usize, mode: RtMode) -> Result<GradedMatrix, Error> {
    match mode {
        RtMode::ClosedForm => {
            let table = BasisTable::new(n)?;
            let roots = crate::weights::RootSystem::new(n)?;
            let mut out = cartan_diag2(&table);
            let prefactor = Laurent::q_minus_q_inv();
            for pair in table.strict_pairs() {
                let tilde = closed_form_sigma_tilde_op(&table, &roots, pair.b, pair.a);
                if tilde.is_zero() {
                    continue;
                }
                let elem = GradedMatrix::elem(table.clone(), pair.b, pair.a);
                let term = elem
                    .gtensor(&tilde)
                    .scale(&(&prefactor * &sign(table.parity(pair.a))));
                out = out.add(&term);
            }
            Ok(out)
        }
        RtMode::Dagger => Ok(build_vector_r(n, RMode::Recursion)?.graded_twist()),
    }
}
