//! Exact arithmetic in the Laurent polynomial ring ℤ[t, t⁻¹].
//!
//! A [`LaurentPoly`] is a sparse map from exponent to nonzero big-integer
//! coefficient. Everything here is exact; the zero polynomial is the empty map.

mod gcd;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub use parse::parse_laurent;

/// Element of ℤ[t, t⁻¹].
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · t^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// The unit `t^e`.
    pub fn t_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense constructor: `coeffs[i]` is the coefficient of `t^(low + i)`.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(low: i64, coeffs: &[C]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (low + i as i64, c.clone().into())),
        )
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// True for `±t^k`, the units of the ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_exp - min_exp`; the zero polynomial has no span.
    pub fn span(&self) -> Option<u64> {
        Some(self.max_exp()?.abs_diff(self.min_exp()?))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Returns `p(t^k)`.
    pub fn substitute_power(&self, k: i64) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::InvalidArgument(
                "substitute_power: exponent multiplier must be nonzero".into(),
            ));
        }
        Ok(Self {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        })
    }

    /// `Σ_{i=0}^{b-1} t^{a·i}`, the polynomial value of `(1 - t^{ab}) / (1 - t^a)`.
    pub fn geometric_sum(a: i64, b: u64) -> Result<Self, Error> {
        if a == 0 {
            return Err(Error::InvalidArgument("geometric_sum: step must be nonzero".into()));
        }
        Ok(Self {
            terms: (0..b as i64).map(|i| (a * i, BigInt::one())).collect(),
        })
    }

    /// Exact value at `t = ±1`.
    pub fn evaluate_at_unit(&self, u: i64) -> Result<BigInt, Error> {
        match u {
            1 => Ok(self.terms.values().sum()),
            -1 => Ok(self
                .terms
                .iter()
                .map(|(e, c)| if e.is_even() { c.clone() } else { -c })
                .sum()),
            _ => Err(Error::InvalidArgument(format!(
                "evaluate_at_unit: {u} is not a unit of ℤ"
            ))),
        }
    }

    /// Value of `t^s · p` at `t0`, where `s` moves the lowest exponent to 0.
    /// Agrees with `p(t0)` up to a power of `t0`.
    pub fn evaluate_cleared(&self, t0: &BigInt) -> Result<BigInt, Error> {
        if t0.is_zero() {
            return Err(Error::InvalidArgument("evaluate_cleared: t0 must be nonzero".into()));
        }
        let Some(low) = self.min_exp() else {
            return Ok(BigInt::zero());
        };
        // Horner from the top exponent down to `low`.
        let mut acc = BigInt::zero();
        let mut prev = None;
        for (e, c) in self.terms.iter().rev() {
            if let Some(p) = prev {
                acc *= num_traits::pow(t0.clone(), (p - e) as usize);
            }
            acc += c;
            prev = Some(*e);
        }
        if let Some(p) = prev {
            acc *= num_traits::pow(t0.clone(), (p - low) as usize);
        }
        Ok(acc)
    }

    /// Canonical associate under the units `±t^k`: lowest exponent 0 and a
    /// positive lowest coefficient.
    pub fn normalize(&self) -> Self {
        let Some((&low, c)) = self.terms.iter().next() else {
            return Self::zero();
        };
        let shifted = self.shift(-low);
        if c.is_negative() {
            -shifted
        } else {
            shifted
        }
    }

    /// gcd in ℤ[t, t⁻¹], returned normalized.
    pub fn gcd_up_to_unit(&self, other: &Self) -> Result<Self, Error> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::InvalidArgument("gcd of two zero polynomials".into()));
        }
        Ok(gcd::laurent_gcd(self, other))
    }

    /// Normalized gcd of a collection; `None` when every element is zero.
    pub fn gcd_all<'a, I>(polys: I) -> Option<Self>
    where
        I: IntoIterator<Item = &'a LaurentPoly>,
    {
        let mut acc: Option<Self> = None;
        for p in polys {
            if p.is_zero() {
                continue;
            }
            acc = Some(match acc {
                None => p.normalize(),
                Some(g) if g.is_one() => return Some(g),
                Some(g) => gcd::laurent_gcd(&g, p),
            });
        }
        acc
    }

    /// Exact quotient `self / d`; `None` when `d` does not divide `self` in
    /// ℤ[t, t⁻¹] (or `d` is zero).
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (nl, dl) = (self.min_exp()?, d.min_exp()?);
        let num = gcd::to_dense(self);
        let den = gcd::to_dense(d);
        let q = gcd::dense_div_exact(&num, &den)?;
        Some(gcd::from_dense(&q, nl - dl))
    }

    /// True when `d` divides `self` in ℤ[t, t⁻¹].
    pub fn is_divisible_by(&self, d: &Self) -> bool {
        self.div_exact(d).is_some()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match e {
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for LaurentPoly {
    type Err = crate::error::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_laurent(s)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$m(&rhs) }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly { (&self).$m(rhs) }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(p("1 - t") + p("t"), p("1"));
        assert_eq!(p("t^-1 + 1 + t^2") + LaurentPoly::zero(), p("t^-1 + 1 + t^2"));
        assert_eq!(p("t^-1 + 1") + p("1 + t"), p("t^-1 + 2 + t"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("1 - t") * p("1 + t"), p("1 - t^2"));
        assert_eq!(p("3t^-2 - t") * LaurentPoly::one(), p("3t^-2 - t"));
        assert_eq!(p("1 + t + t^2") * p("1 - t"), p("1 - t^3"));
    }

    #[test]
    fn substitute_power_examples() {
        assert_eq!(p("1 - t").substitute_power(-1).unwrap(), p("1 - t^-1"));
        assert_eq!(p("t^2 - t + 1").substitute_power(2).unwrap(), p("t^4 - t^2 + 1"));
        assert_eq!(p("2 - t^-3").substitute_power(1).unwrap(), p("2 - t^-3"));
        assert!(p("t").substitute_power(0).is_err());
    }

    #[test]
    fn geometric_sum_examples() {
        assert_eq!(LaurentPoly::geometric_sum(1, 3).unwrap(), p("1 + t + t^2"));
        assert_eq!(LaurentPoly::geometric_sum(-2, 2).unwrap(), p("1 + t^-2"));
        assert!(LaurentPoly::geometric_sum(5, 0).unwrap().is_zero());
        assert!(LaurentPoly::geometric_sum(0, 3).is_err());
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(p("t^2 - t + 1").evaluate_at_unit(-1).unwrap(), BigInt::from(3));
        assert_eq!(LaurentPoly::zero().evaluate_at_unit(-1).unwrap(), BigInt::zero());
        assert!(p("t").evaluate_at_unit(2).is_err());

        let two = BigInt::from(2);
        assert_eq!(p("t^-1 - 1").evaluate_cleared(&two).unwrap(), BigInt::from(-1));
        assert_eq!(p("1 - t").evaluate_cleared(&two).unwrap(), BigInt::from(-1));
        assert_eq!(
            LaurentPoly::zero().evaluate_cleared(&BigInt::from(3)).unwrap(),
            BigInt::zero()
        );
        assert_eq!(p("t^3 + 2t^5").evaluate_cleared(&two).unwrap(), BigInt::from(9));
        assert!(p("t").evaluate_cleared(&BigInt::zero()).is_err());
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(p("-t^-1 + 1 - t").normalize(), p("1 - t + t^2"));
        assert_eq!(p("1").normalize(), p("1"));
        assert_eq!(p("t^3 - t^4").normalize(), p("1 - t"));
        assert!(LaurentPoly::zero().normalize().is_zero());
    }

    #[test]
    fn gcd_examples() {
        let g = p("1 - t^2").gcd_up_to_unit(&p("1 - t^3")).unwrap();
        assert_eq!(g, p("1 - t").normalize());
        let q = p("3 - 2t^-1 + t^4");
        assert_eq!(q.gcd_up_to_unit(&LaurentPoly::zero()).unwrap(), q.normalize());
        assert_eq!(p("2 - 2t").gcd_up_to_unit(&p("3 - 3t")).unwrap(), p("1 - t"));
        assert!(LaurentPoly::zero().gcd_up_to_unit(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn render_examples() {
        assert_eq!(p("t^2 - t + 1").to_string(), "1 - t + t^2");
        assert_eq!(p("-t^-1 + 2 - 3t^4").to_string(), "-t^-1 + 2 - 3t^4");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
    }

    #[test]
    fn div_exact_cases() {
        assert_eq!(p("1 - t^3").div_exact(&p("1 - t")), Some(p("1 + t + t^2")));
        assert_eq!(p("t^-4 - t^-1").div_exact(&p("t - 1")), Some(p("-t^-4 - t^-3 - t^-2")));
        assert_eq!(p("1 + t").div_exact(&p("2")), None);
        assert_eq!(p("1 + t").div_exact(&p("1 - t")), None);
        assert_eq!(LaurentPoly::zero().div_exact(&p("5 + t")), Some(LaurentPoly::zero()));
        assert_eq!(p("t").div_exact(&LaurentPoly::zero()), None);
    }

    pub(crate) fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-4i64..5, -6i64..7), 0..5).prop_map(LaurentPoly::from_terms)
    }

    fn arb_unit() -> impl Strategy<Value = LaurentPoly> {
        (-5i64..6, any::<bool>()).prop_map(|(k, neg)| LaurentPoly::monomial(if neg { -1 } else { 1 }, k))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn substitution_composes(a in arb_poly(), j in -4i64..5, k in -4i64..5) {
            prop_assume!(j != 0 && k != 0);
            let lhs = a.substitute_power(j).unwrap().substitute_power(k).unwrap();
            prop_assert_eq!(lhs, a.substitute_power(j * k).unwrap());
        }

        #[test]
        fn geometric_sum_telescopes(a in -6i64..7, b in 0u64..9) {
            prop_assume!(a != 0);
            let s = LaurentPoly::geometric_sum(a, b).unwrap();
            let lhs = s * (LaurentPoly::one() - LaurentPoly::t_pow(a));
            prop_assert_eq!(lhs, LaurentPoly::one() - LaurentPoly::t_pow(a * b as i64));
        }

        #[test]
        fn unit_evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly()) {
            for u in [1, -1] {
                let (ea, eb) = (a.evaluate_at_unit(u).unwrap(), b.evaluate_at_unit(u).unwrap());
                prop_assert_eq!((&a * &b).evaluate_at_unit(u).unwrap(), &ea * &eb);
                prop_assert_eq!((&a + &b).evaluate_at_unit(u).unwrap(), ea + eb);
            }
        }

        #[test]
        fn normalize_ignores_units(a in arb_poly(), u in arb_unit()) {
            prop_assert_eq!((&u * &a).normalize(), a.normalize());
        }

        #[test]
        fn gcd_divides_both(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let (a, b) = (&a * &c, &b * &c);
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let g = a.gcd_up_to_unit(&b).unwrap();
            prop_assert!(a.is_divisible_by(&g));
            prop_assert!(b.is_divisible_by(&g));
            if !c.is_zero() {
                prop_assert!(g.is_divisible_by(&c));
            }
        }

        #[test]
        fn render_parse_round_trip(a in arb_poly()) {
            let back: LaurentPoly = a.to_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
