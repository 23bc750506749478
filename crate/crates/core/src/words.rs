//! Free-group words, integral group-ring elements and finite presentations.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Self { generator, inverse }
    }

    pub fn inv(self) -> Self {
        Self {
            inverse: !self.inverse,
            ..self
        }
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A freely reduced word in the free group on generators `0, 1, ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn generator(g: usize) -> Self {
        Self {
            letters: vec![Letter::new(g, false)],
        }
    }

    /// Freely reduces the given letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = Self::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Builds a word from `(generator, exponent)` syllables.
    pub fn from_syllables<I: IntoIterator<Item = (usize, i64)>>(syllables: I) -> Self {
        let mut w = Self::empty();
        for (g, k) in syllables {
            w = w.concat(&Self::power(g, k));
        }
        w
    }

    /// `g^k`.
    pub fn power(g: usize, k: i64) -> Self {
        let l = Letter::new(g, k < 0);
        Self {
            letters: vec![l; k.unsigned_abs() as usize],
        }
    }

    fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inv()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn invert(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.letters.iter().filter(|l| l.generator == g).map(|l| l.sign()).sum()
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator).max()
    }

    /// Maximal runs of a repeated letter, as `(generator, signed length)`.
    pub fn syllables(&self) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for l in &self.letters {
            match out.last_mut() {
                Some((g, k)) if *g == l.generator && k.signum() == l.sign() => *k += l.sign(),
                _ => out.push((l.generator, l.sign())),
            }
        }
        out
    }

    /// Renders as `x1 x2^-1 h`; the empty word is `1`.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_empty() {
            return "1".into();
        }
        self.syllables()
            .into_iter()
            .map(|(g, k)| {
                let name = names.get(g).cloned().unwrap_or_else(|| default_name(g));
                if k == 1 {
                    name
                } else {
                    format!("{name}^{k}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub(crate) fn default_name(g: usize) -> String {
    format!("x{}", g + 1)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

/// Finite ℤ-linear combination of words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_word(w: Word) -> Self {
        let mut e = Self::zero();
        e.add_term(w, BigInt::from(1));
        e
    }

    pub fn add_term(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    /// Group-ring product: words multiply by concatenation.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// Left multiplication by a single word.
    pub fn left_mul_word(&self, u: &Word) -> Self {
        let mut out = Self::zero();
        for (v, c) in &self.terms {
            out.add_term(u.concat(v), c.clone());
        }
        out
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{c}·{w}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `<generators | relators>` with a distinguished meridian word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generator_names: Vec<String>,
    relators: Vec<Word>,
    meridian: Word,
}

impl Presentation {
    pub fn new(generator_names: Vec<String>, relators: Vec<Word>, meridian: Word) -> Result<Self, Error> {
        let n = generator_names.len();
        if n == 0 {
            return Err(Error::InvalidPresentation("no generators".into()));
        }
        let bad = |w: &Word| w.max_generator().is_some_and(|g| g >= n);
        if let Some(i) = relators.iter().position(bad) {
            return Err(Error::InvalidPresentation(format!(
                "relator {} references a generator outside 0..{n}",
                i + 1
            )));
        }
        if bad(&meridian) {
            return Err(Error::InvalidPresentation(
                "meridian references an unknown generator".into(),
            ));
        }
        Ok(Self {
            generator_names,
            relators,
            meridian,
        })
    }

    /// Presentation with generators named `x1..xn`.
    pub fn with_default_names(n: usize, relators: Vec<Word>, meridian: Word) -> Result<Self, Error> {
        Self::new((0..n).map(default_name).collect(), relators, meridian)
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn meridian(&self) -> &Word {
        &self.meridian
    }

    /// Index of the meridian when it is a single generator.
    pub fn meridian_generator(&self) -> Option<usize> {
        match self.meridian.letters() {
            [l] if !l.inverse => Some(l.generator),
            _ => None,
        }
    }

    pub fn render_word(&self, w: &Word) -> String {
        w.render(&self.generator_names)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.render_word(r)).collect();
        write!(f, "<{} | {}>", self.generator_names.join(", "), rels.join(", "))
    }
}
