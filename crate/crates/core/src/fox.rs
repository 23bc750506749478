//! Fox free differential calculus and abelianization into ℤ[t, t⁻¹].

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::alexander::PolyMatrix;
use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::words::{GroupRingElement, Presentation, Word};

/// Sends generator `g` to `t^weights[g]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightAssignment {
    weights: Vec<i64>,
}

impl WeightAssignment {
    pub fn new(weights: Vec<i64>) -> Self {
        Self { weights }
    }

    /// Every one of `n` generators goes to `t^w`.
    pub fn uniform(n: usize, w: i64) -> Self {
        Self { weights: vec![w; n] }
    }

    pub fn weight(&self, g: usize) -> Option<i64> {
        self.weights.get(g).copied()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Exponent of `t` that `w` maps to.
    pub fn degree_of(&self, w: &Word) -> Result<i64, Error> {
        w.letters().iter().try_fold(0i64, |acc, l| {
            let wt = self.weight(l.generator).ok_or_else(|| missing(l.generator))?;
            Ok(acc + l.sign() * wt)
        })
    }
}

fn missing(g: usize) -> Error {
    Error::InvalidArgument(format!("no weight assigned to generator {g}"))
}

/// `∂w/∂x_g`, accumulated in one left-to-right pass over the prefixes of `w`.
pub fn fox_derivative(w: &Word, g: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::empty();
    for &l in w.letters() {
        let next = prefix.concat(&Word::from_letters([l]));
        if l.generator == g {
            if l.inverse {
                // ∂(x⁻¹) = -x⁻¹, so the term is -(prefix · x⁻¹).
                out.add_term(next.clone(), BigInt::from(-1));
            } else {
                out.add_term(prefix.clone(), BigInt::from(1));
            }
        }
        prefix = next;
    }
    out
}

/// Image of a group-ring element under the weight homomorphism.
pub fn abelianize(e: &GroupRingElement, wa: &WeightAssignment) -> Result<LaurentPoly, Error> {
    let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
    for (w, c) in e.terms() {
        *terms.entry(wa.degree_of(w)?).or_default() += c;
    }
    Ok(LaurentPoly::from_terms(terms))
}

/// `abelianize(∂w/∂x_g)` computed directly on exponents, without building the
/// intermediate group-ring element.
pub fn abelianized_derivative(w: &Word, g: usize, wa: &WeightAssignment) -> Result<LaurentPoly, Error> {
    let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
    let mut deg = 0i64;
    for l in w.letters() {
        let wt = wa.weight(l.generator).ok_or_else(|| missing(l.generator))?;
        if l.generator == g {
            if l.inverse {
                *out.entry(deg - wt).or_default() -= 1;
            } else {
                *out.entry(deg).or_default() += 1;
            }
        }
        deg += l.sign() * wt;
    }
    Ok(LaurentPoly::from_terms(out))
}

/// The Alexander matrix: one row per relator, one column per generator, entry
/// `(i, j) = abelianize(∂r_i/∂x_j)`.
pub fn alexander_matrix(p: &Presentation, wa: &WeightAssignment) -> Result<PolyMatrix, Error> {
    let cols = p.generator_count();
    if wa.len() < cols {
        return Err(missing(wa.len()));
    }
    let rows: Result<Vec<Vec<LaurentPoly>>, Error> = p
        .relators()
        .par_iter()
        .map(|r| (0..cols).map(|j| abelianized_derivative(r, j, wa)).collect())
        .collect();
    PolyMatrix::from_rows_with_width(rows?, cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    use crate::words::Letter;

    fn w(s: &[(usize, i64)]) -> Word {
        Word::from_syllables(s.iter().copied())
    }

    fn ring(terms: &[(&[(usize, i64)], i64)]) -> GroupRingElement {
        let mut e = GroupRingElement::zero();
        for (word, c) in terms {
            e.add_term(w(word), BigInt::from(*c));
        }
        e
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(fox_derivative(&w(&[(0, 2)]), 0), ring(&[(&[], 1), (&[(0, 1)], 1)]));
        assert_eq!(fox_derivative(&w(&[(0, -1)]), 0), ring(&[(&[(0, -1)], -1)]));
        assert!(fox_derivative(&Word::empty(), 0).is_zero());
        assert!(fox_derivative(&w(&[(1, 3)]), 0).is_zero());
    }

    #[test]
    fn wirtinger_relator_row_matches_closed_form() {
        // r = x_i x_j x_i⁻¹ x_k⁻¹ with all generators ↦ t^{-β}.
        for beta in 1..4i64 {
            let (i, j, k) = (0, 1, 2);
            let r = w(&[(i, 1), (j, 1), (i, -1), (k, -1)]);
            let wa = WeightAssignment::uniform(4, -beta);
            let entry = |p| abelianize(&fox_derivative(&r, p), &wa).unwrap();
            let tb = LaurentPoly::t_pow(-beta);
            assert_eq!(entry(i), LaurentPoly::one() - &tb);
            assert_eq!(entry(j), tb);
            assert_eq!(entry(k), LaurentPoly::constant(-1));
            assert!(entry(3).is_zero());
        }
    }

    #[test]
    fn abelianize_examples() {
        let e = ring(&[(&[], 1), (&[(0, 1)], 1)]);
        assert_eq!(
            abelianize(&e, &WeightAssignment::uniform(1, -1)).unwrap(),
            "1 + t^-1".parse().unwrap()
        );
        let rel = ring(&[(&[(0, 1), (1, 1), (0, -1), (2, -1)], 1)]);
        assert!(abelianize(&rel, &WeightAssignment::uniform(3, 7)).unwrap().is_one());
        // h^β with h ↦ t^{|m|}: |m| = 3, β = 2.
        let hb = ring(&[(&[(1, 2)], 1)]);
        let wa = WeightAssignment::new(vec![-2, 3]);
        assert_eq!(abelianize(&hb, &wa).unwrap(), LaurentPoly::t_pow(6));
        assert!(abelianize(&hb, &WeightAssignment::new(vec![1])).is_err());
    }

    #[test]
    fn empty_relator_gives_zero_row() {
        let p = Presentation::with_default_names(2, vec![Word::empty(), w(&[(0, 1), (1, -1)])], Word::generator(0))
            .unwrap();
        let a = alexander_matrix(&p, &WeightAssignment::uniform(2, 1)).unwrap();
        assert_eq!((a.rows(), a.cols()), (2, 2));
        assert!(a.row(0).iter().all(LaurentPoly::is_zero));
    }

    fn arb_word(gens: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((0..gens, any::<bool>()), 0..16)
            .prop_map(|ls| Word::from_letters(ls.into_iter().map(|(g, i)| Letter::new(g, i))))
    }

    proptest! {
        #[test]
        fn product_rule(u in arb_word(3), v in arb_word(3), g in 0usize..3) {
            let lhs = fox_derivative(&u.concat(&v), g);
            let rhs = fox_derivative(&u, g).add(&fox_derivative(&v, g).left_mul_word(&u));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn spelling_independent(letters in prop::collection::vec((0usize..3, any::<bool>()), 0..12),
                                at in 0usize..13, g in 0usize..3, ins in 0usize..3) {
            let ls: Vec<Letter> = letters.into_iter().map(|(g, i)| Letter::new(g, i)).collect();
            let reduced = Word::from_letters(ls.clone());
            // Build the same element through an unreduced product u · (x x⁻¹) · v.
            let at = at.min(ls.len());
            let u = Word::from_letters(ls[..at].iter().copied());
            let v = Word::from_letters(ls[at..].iter().copied());
            let x = Word::generator(ins);
            let xi = Word::power(ins, -1);
            let d = |w: &Word| fox_derivative(w, g);
            let built = d(&u)
                .add(&d(&x).left_mul_word(&u))
                .add(&d(&xi).left_mul_word(&u.concat(&x)))
                .add(&d(&v).left_mul_word(&u.concat(&x).concat(&xi)));
            prop_assert_eq!(built, d(&reduced));
        }

        #[test]
        fn direct_abelianized_derivative_agrees(u in arb_word(3), g in 0usize..3, ws in prop::collection::vec(-3i64..4, 3)) {
            let wa = WeightAssignment::new(ws);
            prop_assert_eq!(
                abelianized_derivative(&u, g, &wa).unwrap(),
                abelianize(&fox_derivative(&u, g), &wa).unwrap()
            );
        }
    }
}
