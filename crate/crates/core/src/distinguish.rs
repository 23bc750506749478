//! The knot-determinant criterion for telling branched twist spins apart.
//!
//! Given `K_1^{m_1,n_1}` and `K_2^{m_2,n_2}` with determinants `d_1`, `d_2`:
//!
//! * both `m_i` even and `d_1 ≠ d_2` ⇒ not equivalent (case 1);
//! * one `m_i` even, the other odd, and the even side has `d ≠ 1` ⇒ not
//!   equivalent (case 2).
//!
//! Equivalence is symmetric, so case 2 is applied with either side as the
//! even one. Anything else is inconclusive, which never means "equivalent".

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::alexander::knot_determinant;
use crate::error::Error;
use crate::words::Presentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Distinguished,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// Both `m` even, determinants differ.
    Case1,
    /// Opposite parities, the even side has determinant ≠ 1.
    Case2,
    None,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Distinguished => "DISTINGUISHED",
            Outcome::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Case1 => "case1",
            Rule::Case2 => "case2",
            Rule::None => "none",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(x: i64) -> Self {
        if x.is_even() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evidence {
    pub det1: BigInt,
    pub det2: BigInt,
    pub parity1: Parity,
    pub parity2: Parity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub rule: Rule,
    pub evidence: Evidence,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Evidence {
            det1, det2, parity1, ..
        } = &self.evidence;
        match self.rule {
            Rule::Case1 => write!(f, "DISTINGUISHED (Thm 1 case 1: {det1} ≠ {det2})"),
            Rule::Case2 => {
                let even_det = if *parity1 == Parity::Even { det1 } else { det2 };
                write!(f, "DISTINGUISHED (Thm 1 case 2: det {even_det} ≠ 1)")
            }
            Rule::None => f.write_str("INCONCLUSIVE (no theorem case applies)"),
        }
    }
}

fn check_side(m: i64, n: i64) -> Result<(), Error> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "m = 0 (spun knots) is outside the criterion".into(),
        ));
    }
    if n <= 0 {
        return Err(Error::InvalidArgument(format!("n must be positive, got {n}")));
    }
    if m.abs().gcd(&n) != 1 {
        return Err(Error::InvalidArgument(format!(
            "|m| = {} and n = {n} are not coprime",
            m.abs()
        )));
    }
    Ok(())
}

/// Applies the criterion to already computed determinants.
pub fn verdict_from_determinants(
    det1: BigInt,
    m1: i64,
    n1: i64,
    det2: BigInt,
    m2: i64,
    n2: i64,
) -> Result<Verdict, Error> {
    check_side(m1, n1)?;
    check_side(m2, n2)?;
    let (parity1, parity2) = (Parity::of(m1), Parity::of(m2));
    let rule = match (parity1, parity2) {
        (Parity::Even, Parity::Even) if det1 != det2 => Rule::Case1,
        (Parity::Even, Parity::Odd) if !det1.is_one() => Rule::Case2,
        (Parity::Odd, Parity::Even) if !det2.is_one() => Rule::Case2,
        _ => Rule::None,
    };
    let outcome = if rule == Rule::None {
        Outcome::Inconclusive
    } else {
        Outcome::Distinguished
    };
    Ok(Verdict {
        outcome,
        rule,
        evidence: Evidence {
            det1,
            det2,
            parity1,
            parity2,
        },
    })
}

pub fn distinguish(k1: &Presentation, m1: i64, n1: i64, k2: &Presentation, m2: i64, n2: i64) -> Result<Verdict, Error> {
    check_side(m1, n1)?;
    check_side(m2, n2)?;
    verdict_from_determinants(knot_determinant(k1)?, m1, n1, knot_determinant(k2)?, m2, n2)
}

/// Constraint recorded for one closed-form generator when substituting `t = -1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    /// No information about the determinants.
    P,
    Z2,
    ZBeta2,
    ZM2,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Constraint::P => "P",
            Constraint::Z2 => "Z/2",
            Constraint::ZBeta2 => "Z/beta2",
            Constraint::ZM2 => "Z/m2",
        })
    }
}

/// Constraints obtained from the four generators `Δ_2(t^{β_2})·{1 - t^{|m_2|},
/// 1 - t^{β_2}, (1 - t^{|m_2|β_2})/(1 - t^{β_2}), (1 - t^{|m_2|β_2})/(1 - t^{|m_2|})}`
/// with `m_1` even. Only two parity rows are admissible.
pub fn parity_table_row(m2: Parity, beta1: Parity, beta2: Parity) -> Result<[Constraint; 4], Error> {
    use Constraint::*;
    match (m2, beta1, beta2) {
        (Parity::Even, Parity::Odd, Parity::Odd) => Ok([P, Z2, P, ZBeta2]),
        (Parity::Odd, Parity::Odd, Parity::Even) => Ok([Z2, P, ZM2, P]),
        (_, Parity::Even, _) => Err(Error::InvalidArgument(
            "β1 even with m1 even contradicts gcd(β1, m1) = 1".into(),
        )),
        (Parity::Even, _, Parity::Even) => Err(Error::InvalidArgument(
            "β2 even with m2 even contradicts gcd(β2, m2) = 1".into(),
        )),
        _ => Err(Error::InvalidArgument("β2 is chosen even whenever m2 is odd".into())),
    }
}
