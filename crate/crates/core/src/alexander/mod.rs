//! Alexander matrices, elementary ideals, the Alexander polynomial and the
//! knot determinant.

mod ideal;
mod matrix;

pub use ideal::{
    all_minors_vanish, binomial, combinations, elementary_ideal, elementary_ideal_bounded, minor_plan, Ideal,
    IdealKind, MinorPlan, FINGERPRINT_POINTS,
};
pub use matrix::{Equivalence, PolyMatrix};

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::Error;
use crate::fox::{alexander_matrix, WeightAssignment};
use crate::laurent::LaurentPoly;
use crate::words::Presentation;

/// Rejects anything that is not shaped like a Wirtinger presentation: as many
/// relators as generators, each with total exponent sum zero.
fn check_wirtinger(p: &Presentation) -> Result<(), Error> {
    let l = p.generator_count();
    if p.relators().len() != l {
        return Err(Error::InvalidPresentation(format!(
            "expected a Wirtinger presentation with {l} relators, found {}",
            p.relators().len()
        )));
    }
    for (i, r) in p.relators().iter().enumerate() {
        let total: i64 = (0..l).map(|g| r.exponent_sum(g)).sum();
        if total != 0 {
            return Err(Error::InvalidPresentation(format!(
                "relator {} is not a conjugation relator (exponent sum {total})",
                i + 1
            )));
        }
    }
    Ok(())
}

/// Alexander matrix of a Wirtinger presentation with every generator ↦ t.
pub fn wirtinger_matrix(p: &Presentation) -> Result<PolyMatrix, Error> {
    check_wirtinger(p)?;
    alexander_matrix(p, &WeightAssignment::uniform(p.generator_count(), 1))
}

/// Normalized gcd of all `(l-1) × (l-1)` minors of the Wirtinger matrix.
///
/// Returns `0` (with a warning) if every such minor vanishes, which no knot
/// diagram produces.
pub fn alexander_polynomial(p: &Presentation) -> Result<LaurentPoly, Error> {
    let a = wirtinger_matrix(p)?;
    let e1 = elementary_ideal(&a, 1);
    Ok(match e1.kind() {
        IdealKind::Unit => LaurentPoly::one(),
        IdealKind::Zero => {
            log::warn!("all (l-1)-minors vanish; presentation does not come from a knot diagram");
            LaurentPoly::zero()
        }
        IdealKind::General => e1.gcd().unwrap_or_default(),
    })
}

/// `|Δ(-1)|`.
pub fn knot_determinant(p: &Presentation) -> Result<BigInt, Error> {
    Ok(alexander_polynomial(p)?.evaluate_at_unit(-1)?.abs())
}

/// Second elementary ideal of the Wirtinger matrix.
pub fn e2_generators(p: &Presentation) -> Result<Ideal, Error> {
    Ok(elementary_ideal(&wirtinger_matrix(p)?, 2))
}
