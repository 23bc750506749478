use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::PolyMatrix;
use crate::error::Error;
use crate::laurent::LaurentPoly;

/// Evaluation points used whenever two ideals are compared.
pub const FINGERPRINT_POINTS: [i64; 4] = [-1, 2, 3, 5];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealKind {
    Zero,
    Unit,
    General,
}

/// Finitely generated ideal of ℤ[t, t⁻¹], stored as a sorted list of
/// normalized, distinct, nonzero generators. The unit ideal is `(1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    generators: Vec<LaurentPoly>,
    kind: IdealKind,
}

impl Ideal {
    pub fn zero() -> Self {
        Self {
            generators: Vec::new(),
            kind: IdealKind::Zero,
        }
    }

    pub fn unit() -> Self {
        Self {
            generators: vec![LaurentPoly::one()],
            kind: IdealKind::Unit,
        }
    }

    pub fn from_generators<I: IntoIterator<Item = LaurentPoly>>(gens: I) -> Self {
        let set: BTreeSet<(u64, LaurentPoly)> = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                let g = g.normalize();
                (g.span().unwrap_or(0), g)
            })
            .collect();
        if set.is_empty() {
            return Self::zero();
        }
        if set.iter().any(|(_, g)| g.is_one()) {
            return Self::unit();
        }
        Self {
            generators: set.into_iter().map(|(_, g)| g).collect(),
            kind: IdealKind::General,
        }
    }

    pub fn kind(&self) -> IdealKind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.kind == IdealKind::Zero
    }

    pub fn is_unit(&self) -> bool {
        self.kind == IdealKind::Unit
    }

    pub fn generators(&self) -> &[LaurentPoly] {
        &self.generators
    }

    /// Normalized gcd of the generators; `None` for the zero ideal.
    pub fn gcd(&self) -> Option<LaurentPoly> {
        LaurentPoly::gcd_all(&self.generators)
    }

    /// For each point `t0`, the gcd of the generators' values at `t0` with
    /// every prime factor of `t0` removed (`0` if all values vanish).
    ///
    /// Evaluation at `t0` maps the ideal into ℤ[1/t0], where the primes
    /// dividing `t0` are units, so only the part coprime to `t0` is an
    /// invariant of the ideal. Equal ideals always have equal fingerprints;
    /// the converse does not hold.
    pub fn fingerprint(&self, points: &[i64]) -> Result<Vec<BigInt>, Error> {
        points
            .iter()
            .map(|&p| {
                let t0 = BigInt::from(p);
                let mut g = BigInt::zero();
                for gen in &self.generators {
                    g = g.gcd(&gen.evaluate_cleared(&t0)?);
                    if g.is_one() {
                        break;
                    }
                }
                Ok(strip_factors_of(g.abs(), &t0))
            })
            .collect()
    }

    pub fn render(&self, k: usize) -> String {
        match self.kind {
            IdealKind::Zero => format!("E_{k} = 0"),
            IdealKind::Unit => format!("E_{k} = (1)"),
            IdealKind::General => {
                let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
                format!("E_{k} = < {} >", gens.join(" ; "))
            }
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            IdealKind::Zero => f.write_str("0"),
            IdealKind::Unit => f.write_str("(1)"),
            IdealKind::General => {
                let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
                write!(f, "< {} >", gens.join(" ; "))
            }
        }
    }
}

fn strip_factors_of(mut g: BigInt, t0: &BigInt) -> BigInt {
    if g.is_zero() {
        return g;
    }
    loop {
        let c = g.gcd(t0);
        if c.is_one() {
            return g;
        }
        g /= c;
    }
}

/// `C(n, k)` without overflow for the sizes used here.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// How the `k`-th elementary ideal of a `p × q` matrix is determined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorPlan {
    /// `q - k ≤ 0`.
    Unit,
    /// `q - k > p`.
    Zero,
    /// Enumerate `count` minors of the given size.
    Minors { size: usize, count: u128 },
}

pub fn minor_plan(a: &PolyMatrix, k: usize) -> MinorPlan {
    let (p, q) = (a.rows(), a.cols());
    if q <= k {
        return MinorPlan::Unit;
    }
    let size = q - k;
    if size > p {
        return MinorPlan::Zero;
    }
    MinorPlan::Minors {
        size,
        count: binomial(p, size).saturating_mul(binomial(q, size)),
    }
}

fn check_limit(count: u128, limit: Option<u128>) -> Result<(), Error> {
    match limit {
        Some(l) if count > l => Err(Error::TooManyMinors {
            needed: count,
            limit: l,
        }),
        _ => Ok(()),
    }
}

fn minor_index_pairs(a: &PolyMatrix, size: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let rows = combinations(a.rows(), size);
    let cols = combinations(a.cols(), size);
    rows.iter()
        .flat_map(|r| cols.iter().map(move |c| (r.clone(), c.clone())))
        .collect()
}

/// The `k`-th elementary ideal: generated by all `(q-k) × (q-k)` minors when
/// `0 < q-k ≤ p`, zero when `q-k > p`, the whole ring when `q-k ≤ 0`.
pub fn elementary_ideal(a: &PolyMatrix, k: usize) -> Ideal {
    elementary_ideal_bounded(a, k, None).expect("no limit was set")
}

/// As [`elementary_ideal`], refusing when more than `limit` minors are needed.
pub fn elementary_ideal_bounded(a: &PolyMatrix, k: usize, limit: Option<u128>) -> Result<Ideal, Error> {
    let size = match minor_plan(a, k) {
        MinorPlan::Unit => return Ok(Ideal::unit()),
        MinorPlan::Zero => return Ok(Ideal::zero()),
        MinorPlan::Minors { size, count } => {
            check_limit(count, limit)?;
            size
        }
    };
    let minors: BTreeSet<LaurentPoly> = minor_index_pairs(a, size)
        .into_par_iter()
        .map(|(r, c)| a.minor_det(&r, &c).expect("indices in range").normalize())
        .filter(|m| !m.is_zero())
        .collect();
    Ok(Ideal::from_generators(minors))
}

/// True iff every `size × size` minor vanishes; stops at the first nonzero
/// one. Also returns how many minors the full check covers.
pub fn all_minors_vanish(a: &PolyMatrix, size: usize, limit: Option<u128>) -> Result<(bool, u128), Error> {
    if size > a.rows() || size > a.cols() {
        return Ok((true, 0));
    }
    let count = binomial(a.rows(), size).saturating_mul(binomial(a.cols(), size));
    check_limit(count, limit)?;
    let nonzero = minor_index_pairs(a, size)
        .into_par_iter()
        .any(|(r, c)| !a.minor_det(&r, &c).expect("indices in range").is_zero());
    Ok((!nonzero, count))
}
