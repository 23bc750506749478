//! Braid words `s1 s2^-1 ...` and their closures.
//!
//! Strands run upward. In `s_i` the strand at position `i` crosses over the
//! strand at `i + 1` (a positive crossing); `s_i^-1` is its mirror.

use std::fmt;

use super::lex::Lexer;
use super::pd::PdCode;
use super::KnotDiagram;
use crate::error::{Error, ParseError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    /// Signed 1-based Artin generator indices.
    generators: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, generators: Vec<i64>) -> Result<Self, Error> {
        if strands == 0 {
            return Err(Error::InvalidCode("braid needs at least one strand".into()));
        }
        for &g in &generators {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(Error::InvalidCode(format!(
                    "generator s{} out of range for {strands} strands",
                    g.unsigned_abs()
                )));
            }
        }
        Ok(Self { strands, generators })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Number of components of the closure (cycles of the permutation).
    pub fn closure_components(&self) -> usize {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &g in &self.generators {
            let i = g.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for s in 0..self.strands {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
            }
        }
        cycles
    }

    /// PD code of the standard closure.
    pub fn to_pd(&self) -> Result<PdCode, Error> {
        // Each crossing joins at most two cycles; skip the permutation walk
        // for strand counts that cannot close up to one component.
        if self.strands > self.generators.len() + 1 {
            return Err(Error::NotAKnot(format!(
                "braid closure has at least {} components",
                self.strands - self.generators.len()
            )));
        }
        let comps = self.closure_components();
        if comps != 1 {
            return Err(Error::NotAKnot(format!("braid closure has {comps} components")));
        }
        if self.generators.is_empty() {
            return Err(Error::InvalidCode(
                "braid closure has no crossings; use a kink such as PD[X(1,1,2,2)] for the unknot".into(),
            ));
        }
        let mut cur: Vec<u64> = (1..=self.strands as u64).collect();
        let mut next = self.strands as u64 + 1;
        let mut xs: Vec<[u64; 4]> = Vec::with_capacity(self.generators.len());
        for &g in &self.generators {
            let i = g.unsigned_abs() as usize - 1;
            let (left, right) = (cur[i], cur[i + 1]);
            // New edge labels: `to_right` continues the left strand, `to_left` the right one.
            let (to_right, to_left) = (next, next + 1);
            next += 2;
            xs.push(if g > 0 {
                [right, to_right, to_left, left]
            } else {
                [left, right, to_right, to_left]
            });
            cur[i] = to_left;
            cur[i + 1] = to_right;
        }
        // Close up: the top edge at position p is the bottom edge p + 1.
        let rename: std::collections::HashMap<u64, u64> =
            cur.iter().enumerate().map(|(p, &l)| (l, p as u64 + 1)).collect();
        for x in &mut xs {
            for l in x.iter_mut() {
                if let Some(&r) = rename.get(l) {
                    *l = r;
                }
            }
        }
        PdCode::new(xs)
    }

    pub fn to_diagram(&self) -> Result<KnotDiagram, Error> {
        self.to_pd()?.to_diagram()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *g > 0 {
                write!(f, "s{g}")?;
            } else {
                write!(f, "s{}^-1", -g)?;
            }
        }
        Ok(())
    }
}

/// Parses `s1 s2^-1 s1^3 ...`. With `strands = None` the strand count is
/// one more than the largest generator index.
pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord, Error> {
    let mut lx = Lexer::new(text);
    let mut gens = Vec::new();
    while !lx.at_end() {
        let pos = lx.pos();
        if !(lx.eat('s') || lx.eat('S')) {
            return Err(ParseError::new(pos, "expected a generator like s1 or s2^-1").into());
        }
        let ipos = lx.pos();
        let i = lx.unsigned()?;
        if i == 0 {
            return Err(ParseError::new(ipos, "generator indices start at 1").into());
        }
        let i = i64::try_from(i).map_err(|_| ParseError::new(ipos, "generator index too large"))?;
        let mut k = 1;
        if lx.eat('^') {
            let kpos = lx.pos();
            k = lx.signed()?;
            if k == 0 || k.unsigned_abs() > 1 << 16 {
                return Err(ParseError::new(kpos, "generator exponent must be nonzero and small").into());
            }
        }
        gens.extend(std::iter::repeat_n(i * k.signum(), k.unsigned_abs() as usize));
        lx.eat(',');
    }
    let inferred = gens.iter().map(|g| g.unsigned_abs() as usize + 1).max().unwrap_or(1);
    BraidWord::new(strands.unwrap_or(inferred), gens)
}
