//! Signed Gauss codes: `O1+ U2+ O3- ...`, the crossings met while walking
//! once along the knot, each tagged over/under and with its sign.

use std::collections::BTreeMap;
use std::fmt;

use super::lex::Lexer;
use super::{Crossing, KnotDiagram};
use crate::error::{Error, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaussEvent {
    pub crossing: u64,
    pub over: bool,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussCode {
    events: Vec<GaussEvent>,
}

impl GaussCode {
    pub fn new(events: Vec<GaussEvent>) -> Result<Self, Error> {
        if events.is_empty() {
            return Err(Error::InvalidCode("Gauss code has no crossings".into()));
        }
        let mut seen: BTreeMap<u64, (usize, usize, Option<i8>)> = BTreeMap::new();
        for e in &events {
            let (o, u, s) = seen.entry(e.crossing).or_insert((0, 0, None));
            if e.over {
                *o += 1;
            } else {
                *u += 1;
            }
            match s {
                Some(prev) if *prev != e.sign => {
                    return Err(Error::InvalidCode(format!(
                        "crossing {} has inconsistent signs",
                        e.crossing
                    )))
                }
                _ => *s = Some(e.sign),
            }
        }
        for (id, (o, u, _)) in &seen {
            match (o, u) {
                (1, 1) => {}
                (0, _) => return Err(Error::InvalidCode(format!("crossing {id} has no over-pass"))),
                (_, 0) => return Err(Error::InvalidCode(format!("crossing {id} has no under-pass"))),
                _ => {
                    return Err(Error::InvalidCode(format!(
                        "crossing {id} appears {} times; expected exactly twice",
                        o + u
                    )))
                }
            }
        }
        Ok(Self { events })
    }

    pub fn events(&self) -> &[GaussEvent] {
        &self.events
    }

    /// Arcs start right after each under-pass; crossings are ordered by id.
    pub fn to_diagram(&self) -> Result<KnotDiagram, Error> {
        let n = self.events.len();
        // arc_start[i]: index of the under-event that begins the arc holding
        // edge i (the edge from event i to event i + 1).
        let first_under = self
            .events
            .iter()
            .position(|e| !e.over)
            .ok_or_else(|| Error::InvalidCode("Gauss code has no under-pass".into()))?;
        let mut arc_of_edge = vec![usize::MAX; n];
        let mut arc_ids: BTreeMap<usize, usize> = BTreeMap::new();
        let mut current = first_under;
        for step in 0..n {
            let i = (first_under + step) % n;
            if !self.events[i].over {
                current = i;
            }
            arc_of_edge[i] = current;
        }
        // Number arcs in order of first appearance from edge 0.
        for &a in &arc_of_edge {
            let next = arc_ids.len();
            arc_ids.entry(a).or_insert(next);
        }
        let arc = |i: usize| arc_ids[&arc_of_edge[i]];

        let mut by_id: BTreeMap<u64, (Option<usize>, Option<usize>, i8)> = BTreeMap::new();
        for (i, e) in self.events.iter().enumerate() {
            let slot = by_id.entry(e.crossing).or_insert((None, None, e.sign));
            if e.over {
                slot.0 = Some(i);
            } else {
                slot.1 = Some(i);
            }
        }
        let crossings = by_id
            .values()
            .map(|&(o, u, sign)| {
                let (o, u) = (o.unwrap_or_default(), u.unwrap_or_default());
                Crossing {
                    over: arc(o),
                    under_in: arc((u + n - 1) % n),
                    under_out: arc(u),
                    sign,
                }
            })
            .collect();
        KnotDiagram::new(arc_ids.len(), crossings)
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.events.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let ou = if e.over { 'O' } else { 'U' };
            let s = if e.sign > 0 { '+' } else { '-' };
            write!(f, "{ou}{}{s}", e.crossing)?;
        }
        Ok(())
    }
}

/// Parses `O1+ U2+ O3- ...`; tokens may also be comma separated.
pub fn parse_gauss(text: &str) -> Result<GaussCode, Error> {
    let mut lx = Lexer::new(text);
    let mut events = Vec::new();
    while !lx.at_end() {
        let pos = lx.pos();
        let over = match lx.peek() {
            Some('O' | 'o') => true,
            Some('U' | 'u') => false,
            _ => return Err(ParseError::new(pos, "expected a token like O1+ or U2-").into()),
        };
        lx.eat(lx.peek().unwrap_or('O'));
        let crossing = lx.unsigned()?;
        let spos = lx.pos();
        let sign = if lx.eat('+') {
            1
        } else if lx.eat('-') {
            -1
        } else {
            return Err(ParseError::new(spos, "expected crossing sign '+' or '-'").into());
        };
        events.push(GaussEvent { crossing, over, sign });
        lx.eat(',');
    }
    GaussCode::new(events)
}
