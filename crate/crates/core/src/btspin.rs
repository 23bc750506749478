//! Branched twist spins `K^{m,n}`: the integer data `(ε, β, α)`, the knot
//! group presentation, its meridian, the Alexander matrix under the induced
//! abelianization, and the first elementary ideal in closed form and by
//! brute force.
//!
//! For a knot group `<x_1..x_l | r_1..r_l>` the branched twist spin has
//!
//! ```text
//! <x_1..x_l, h | r_1..r_l, x_i h x_i⁻¹ h⁻¹ (each i), x_1^|m| h^β>
//! ```
//!
//! with meridian `x_1^{-εn} h^α`, where `mα + nβ = ε` and `ε` is the sign of
//! `m`. Abelianizing sends every `x_i ↦ t^{-β}` and `h ↦ t^{|m|}`.

use std::fmt;

use num_integer::Integer;

use crate::alexander::{
    alexander_polynomial, all_minors_vanish, e2_generators, elementary_ideal_bounded, Ideal, PolyMatrix,
};
use crate::error::Error;
use crate::fox::{alexander_matrix, WeightAssignment};
use crate::laurent::LaurentPoly;
use crate::words::{Presentation, Word};

/// Default ceiling on the number of minors a brute-force check may evaluate.
pub const DEFAULT_MINOR_LIMIT: u128 = 5_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ParityPreference {
    #[default]
    Any,
    PreferEven,
    PreferOdd,
}

impl std::str::FromStr for ParityPreference {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "any" => Ok(Self::Any),
            "even" | "prefer-even" | "prefer_even" => Ok(Self::PreferEven),
            "odd" | "prefer-odd" | "prefer_odd" => Ok(Self::PreferOdd),
            _ => Err(Error::InvalidArgument(format!("unknown parity preference '{s}'"))),
        }
    }
}

/// `(m, n, ε, β, α)` with `mα + nβ = ε`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BtSpinParams {
    m: i64,
    n: i64,
    epsilon: i64,
    beta: i64,
    alpha: i64,
}

impl BtSpinParams {
    /// Smallest positive `β` with `nβ ≡ ε (mod |m|)`, moved to the preferred
    /// parity when `|m|` is odd (then `β` and `β + |m|` differ in parity).
    pub fn solve(m: i64, n: i64, parity: ParityPreference) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::InvalidArgument(
                "m = 0 (spun knot) has no Bézout data; see BtSpinParams::spun".into(),
            ));
        }
        check_pair(m, n)?;
        let am = m.abs();
        let epsilon = m.signum();
        // n is invertible mod |m|.
        let inv = mod_inverse(n.rem_euclid(am), am).expect("coprime");
        let mut beta = (epsilon * inv).rem_euclid(am);
        if beta == 0 {
            beta = am;
        }
        let want_even = match parity {
            ParityPreference::Any => None,
            ParityPreference::PreferEven => Some(true),
            ParityPreference::PreferOdd => Some(false),
        };
        if let Some(even) = want_even {
            if am.is_odd() && beta.is_even() != even {
                beta += am;
            }
        }
        let alpha = (epsilon - n * beta) / m;
        let p = Self {
            m,
            n,
            epsilon,
            beta,
            alpha,
        };
        debug_assert!(p.check().is_ok());
        Ok(p)
    }

    /// The spun knot `(m, n) = (0, 1)`: the last relator degenerates to `h`.
    pub fn spun() -> Self {
        Self {
            m: 0,
            n: 1,
            epsilon: 1,
            beta: 1,
            alpha: 0,
        }
    }

    /// Checks every identity the parameters must satisfy.
    pub fn check(&self) -> Result<(), Error> {
        let Self {
            m,
            n,
            epsilon,
            beta,
            alpha,
        } = *self;
        let fail = |what: &str| Err(Error::InvalidArgument(format!("{self}: {what}")));
        if m == 0 {
            return if *self == Self::spun() {
                Ok(())
            } else {
                fail("m = 0 requires (n, β) = (1, 1)")
            };
        }
        if n <= 0 || beta <= 0 {
            return fail("n and β must be positive");
        }
        if m.abs().gcd(&n) != 1 {
            return fail("|m| and n must be coprime");
        }
        if epsilon != m.signum() {
            return fail("ε must be the sign of m");
        }
        if m * alpha + n * beta != epsilon {
            return fail("mα + nβ ≠ ε");
        }
        if epsilon * n * beta + alpha * m.abs() != 1 {
            return fail("εnβ + α|m| ≠ 1");
        }
        if (n * beta - epsilon).rem_euclid(m.abs()) != 0 {
            return fail("nβ ≢ ε (mod m)");
        }
        Ok(())
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn abs_m(&self) -> i64 {
        self.m.abs()
    }

    pub fn epsilon(&self) -> i64 {
        self.epsilon
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    /// `x_1^{-εn} h^α` with `h` at index `h_index`.
    pub fn meridian_word(&self, h_index: usize) -> Word {
        Word::from_syllables([(0, -self.epsilon * self.n), (h_index, self.alpha)])
    }

    /// `x_1..x_s ↦ t^{-β}`, `h ↦ t^{|m|}`; `h` is index `s`.
    pub fn weights(&self, s: usize) -> WeightAssignment {
        let mut w = vec![-self.beta; s];
        w.push(self.abs_m());
        WeightAssignment::new(w)
    }
}

impl fmt::Display for BtSpinParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(m, n) = ({}, {}), ε = {}, β = {}, α = {}",
            self.m, self.n, self.epsilon, self.beta, self.alpha
        )
    }
}

fn check_pair(m: i64, n: i64) -> Result<(), Error> {
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

fn mod_inverse(a: i64, modulus: i64) -> Option<i64> {
    if modulus == 1 {
        return Some(0);
    }
    let e = a.extended_gcd(&modulus);
    (e.gcd == 1).then(|| e.x.rem_euclid(modulus))
}

/// Knot group presentation of `K^{m,n}` from a presentation of `K` whose
/// meridian is generator 0. Generators keep their names and `h` is appended.
pub fn btspin_presentation(k: &Presentation, params: &BtSpinParams) -> Result<Presentation, Error> {
    if k.meridian_generator() != Some(0) {
        return Err(Error::InvalidPresentation(
            "the knot's meridian must be generator x1".into(),
        ));
    }
    let s = k.generator_count();
    let h = s;
    let mut relators: Vec<Word> = k.relators().to_vec();
    relators.extend((0..s).map(|i| Word::from_syllables([(i, 1), (h, 1), (i, -1), (h, -1)])));
    relators.push(Word::from_syllables([(0, params.abs_m()), (h, params.beta())]));
    let mut names = k.generator_names().to_vec();
    names.push("h".into());
    Presentation::new(names, relators, params.meridian_word(h))
}

/// Alexander matrix of `K^{m,n}` under the induced abelianization: a
/// `(2l+1) × (l+1)` matrix for a Wirtinger `K` with `l` arcs.
pub fn btspin_matrix(k: &Presentation, params: &BtSpinParams) -> Result<PolyMatrix, Error> {
    let p = btspin_presentation(k, params)?;
    alexander_matrix(&p, &params.weights(k.generator_count()))
}

fn require_nonzero_m(params: &BtSpinParams) -> Result<(), Error> {
    if params.m() == 0 {
        return Err(Error::InvalidArgument(
            "the elementary ideal formulas require m ≠ 0 (spun knots are not covered)".into(),
        ));
    }
    Ok(())
}

/// `{1 - t^|m|, 1 - t^β, (1 - t^{|m|β})/(1 - t^β), (1 - t^{|m|β})/(1 - t^|m|)}`,
/// the last two built as geometric sums.
pub fn closed_form_factors(params: &BtSpinParams) -> [LaurentPoly; 4] {
    let (am, b) = (params.abs_m(), params.beta());
    let one = LaurentPoly::one();
    [
        &one - &LaurentPoly::t_pow(am),
        &one - &LaurentPoly::t_pow(b),
        LaurentPoly::geometric_sum(b, am as u64).expect("β > 0"),
        LaurentPoly::geometric_sum(am, b as u64).expect("|m| > 0"),
    ]
}

/// The closed-form generator list of `E_1(K^{m,n})`, in order:
/// `Δ(t^β)·S`, then `G_i(t^β)(1 - t^|m|)·S` for each generator `G_i` of
/// `E_2(K)`, then `(1 - t^|m|)^{l-1}·S`. Every entry is normalized.
pub fn e1_closed_form_list(k: &Presentation, params: &BtSpinParams) -> Result<Vec<LaurentPoly>, Error> {
    require_nonzero_m(params)?;
    let b = params.beta();
    let l = k.generator_count();
    let factors = closed_form_factors(params);
    let one_minus_tm = factors[0].clone();

    let delta = alexander_polynomial(k)?.substitute_power(b)?;
    let e2 = e2_generators(k)?;
    let mut prefixes = vec![delta];
    for g in e2.generators() {
        prefixes.push(&g.substitute_power(b)? * &one_minus_tm);
    }
    prefixes.push(one_minus_tm.pow((l - 1) as u32));

    Ok(prefixes
        .iter()
        .flat_map(|pre| factors.iter().map(move |f| (pre * f).normalize()))
        .collect())
}

/// `E_1(K^{m,n})` from the closed-form generator list.
pub fn e1_closed_form(k: &Presentation, params: &BtSpinParams) -> Result<Ideal, Error> {
    Ok(Ideal::from_generators(e1_closed_form_list(k, params)?))
}

/// `E_1(K^{m,n})` from all `l × l` minors of the Alexander matrix.
pub fn e1_brute_force(k: &Presentation, params: &BtSpinParams, limit: Option<u128>) -> Result<Ideal, Error> {
    require_nonzero_m(params)?;
    let a = btspin_matrix(k, params)?;
    elementary_ideal_bounded(&a, 1, limit)
}

/// Outcome of checking that `E_0(K^{m,n})` vanishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct E0Report {
    pub vanishes: bool,
    /// Number of `(l+1) × (l+1)` minors the full check covers.
    pub minors: u128,
}

/// True iff every `(l+1) × (l+1)` minor of the Alexander matrix is zero.
pub fn e0_check(k: &Presentation, params: &BtSpinParams, limit: Option<u128>) -> Result<E0Report, Error> {
    require_nonzero_m(params)?;
    let a = btspin_matrix(k, params)?;
    e0_check_matrix(&a, limit)
}

/// The same check on an explicit matrix.
pub fn e0_check_matrix(a: &PolyMatrix, limit: Option<u128>) -> Result<E0Report, Error> {
    let (vanishes, minors) = all_minors_vanish(a, a.cols(), limit)?;
    Ok(E0Report { vanishes, minors })
}
