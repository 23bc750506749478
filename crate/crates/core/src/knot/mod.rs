//! Knot diagram notations and the Wirtinger presentation.

mod braid;
mod gauss;
mod lex;
mod pd;
pub mod table;

use std::fmt;
use std::str::FromStr;

pub use braid::{parse_braid, BraidWord};
pub use gauss::{parse_gauss, GaussCode, GaussEvent};
pub use pd::{parse_pd, PdCode};

use crate::error::Error;
use crate::words::{Presentation, Word};

/// A crossing between Wirtinger arcs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
    /// `+1` or `-1`.
    pub sign: i8,
}

/// Arcs `0..arc_count` joined at crossings; always a single closed component
/// with as many crossings as arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotDiagram {
    arc_count: usize,
    crossings: Vec<Crossing>,
}

impl KnotDiagram {
    pub fn new(arc_count: usize, crossings: Vec<Crossing>) -> Result<Self, Error> {
        if arc_count == 0 {
            return Err(Error::InvalidCode("diagram has no arcs".into()));
        }
        if crossings.len() != arc_count {
            return Err(Error::InvalidCode(format!(
                "{} crossings but {arc_count} arcs",
                crossings.len()
            )));
        }
        let mut ends_at = vec![None; arc_count];
        let mut starts = vec![0usize; arc_count];
        for (i, c) in crossings.iter().enumerate() {
            if [c.over, c.under_in, c.under_out].iter().any(|&a| a >= arc_count) {
                return Err(Error::InvalidCode(format!("crossing {} names an unknown arc", i + 1)));
            }
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::InvalidCode(format!("crossing {} has sign {}", i + 1, c.sign)));
            }
            if ends_at[c.under_in].replace(i).is_some() {
                return Err(Error::InvalidCode(format!("arc {} ends twice", c.under_in)));
            }
            starts[c.under_out] += 1;
        }
        if let Some(a) = starts.iter().position(|&n| n != 1) {
            return Err(Error::InvalidCode(format!("arc {a} does not start exactly once")));
        }
        // Follow arc -> crossing where it ends -> next arc; must be one cycle.
        let mut seen = 0;
        let mut a = 0;
        loop {
            seen += 1;
            let x = ends_at[a].ok_or_else(|| Error::InvalidCode(format!("arc {a} never ends")))?;
            a = crossings[x].under_out;
            if a == 0 {
                break;
            }
            if seen > arc_count {
                break;
            }
        }
        if seen != arc_count {
            return Err(Error::NotAKnot("diagram arcs do not form a single component".into()));
        }
        Ok(Self { arc_count, crossings })
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| i64::from(c.sign)).sum()
    }

    /// One generator per arc and one relator per crossing:
    /// `o u o⁻¹ w⁻¹` for a positive crossing and `o⁻¹ u o w⁻¹` for a negative
    /// one, where `o` is the over-arc and the under-strand runs `u → w`.
    /// All relators are kept; the meridian is generator 0.
    pub fn wirtinger(&self) -> Presentation {
        let relators = self
            .crossings
            .iter()
            .map(|c| {
                let s = i64::from(c.sign);
                Word::from_syllables([(c.over, s), (c.under_in, 1), (c.over, -s), (c.under_out, -1)])
            })
            .collect();
        Presentation::with_default_names(self.arc_count, relators, Word::generator(0))
            .expect("diagram arcs index valid generators")
    }
}

impl fmt::Display for KnotDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pos = self.crossings.iter().filter(|c| c.sign > 0).count();
        write!(
            f,
            "{} arcs, {} crossings ({} positive, {} negative), writhe {}",
            self.arc_count,
            self.crossings.len(),
            pos,
            self.crossings.len() - pos,
            self.writhe()
        )
    }
}

/// Supported input notations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    Pd,
    Gauss,
    Braid,
}

impl Format {
    pub fn as_str(self) -> &'static str {
        match self {
            Format::Pd => "pd",
            Format::Gauss => "gauss",
            Format::Braid => "braid",
        }
    }

    /// Guesses the notation from the first significant character.
    pub fn detect(text: &str) -> Option<Format> {
        let first = text
            .lines()
            .filter(|l| !l.trim_start().starts_with('#'))
            .flat_map(|l| l.chars())
            .find(|c| !c.is_whitespace())?;
        match first {
            'P' => Some(Format::Pd),
            'O' | 'U' | 'o' | 'u' => Some(Format::Gauss),
            's' | 'S' => Some(Format::Braid),
            _ => None,
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "pd" => Ok(Format::Pd),
            "gauss" => Ok(Format::Gauss),
            "braid" => Ok(Format::Braid),
            other => Err(Error::InvalidArgument(format!(
                "unknown format '{other}' (expected pd, gauss or braid)"
            ))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A parsed code in any supported notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotCode {
    Pd(PdCode),
    Gauss(GaussCode),
    Braid(BraidWord),
}

impl KnotCode {
    pub fn parse(format: Format, text: &str) -> Result<Self, Error> {
        Ok(match format {
            Format::Pd => KnotCode::Pd(parse_pd(text)?),
            Format::Gauss => KnotCode::Gauss(parse_gauss(text)?),
            Format::Braid => KnotCode::Braid(parse_braid(text, None)?),
        })
    }

    /// Parses with an auto-detected format.
    pub fn parse_any(text: &str) -> Result<Self, Error> {
        let f = Format::detect(text)
            .ok_or_else(|| Error::InvalidArgument("cannot tell which knot notation this is".into()))?;
        Self::parse(f, text)
    }

    pub fn format(&self) -> Format {
        match self {
            KnotCode::Pd(_) => Format::Pd,
            KnotCode::Gauss(_) => Format::Gauss,
            KnotCode::Braid(_) => Format::Braid,
        }
    }

    pub fn to_diagram(&self) -> Result<KnotDiagram, Error> {
        match self {
            KnotCode::Pd(c) => c.to_diagram(),
            KnotCode::Gauss(c) => c.to_diagram(),
            KnotCode::Braid(c) => c.to_diagram(),
        }
    }
}

impl fmt::Display for KnotCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotCode::Pd(c) => c.fmt(f),
            KnotCode::Gauss(c) => c.fmt(f),
            KnotCode::Braid(c) => c.fmt(f),
        }
    }
}
