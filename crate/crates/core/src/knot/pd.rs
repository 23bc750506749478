//! Planar diagram codes `PD[X(a,b,c,d), ...]`.
//!
//! Each `X(a,b,c,d)` lists the four edge labels counterclockwise starting at
//! the incoming under-edge: the under-strand runs `a → c`, and `b`, `d` are
//! the two halves of the over-strand. The crossing is positive when the
//! over-strand runs `d → b`, negative when it runs `b → d`.

use std::collections::HashMap;
use std::fmt;

use super::lex::Lexer;
use super::{Crossing, KnotDiagram};
use crate::error::{Error, ParseError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdCode {
    crossings: Vec<[u64; 4]>,
}

/// One pass of the oriented knot through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Pass {
    Under,
    /// Over-strand entering at slot 3 (`d`) and leaving at slot 1 (`b`).
    OverDtoB,
    OverBtoD,
}

/// Result of walking once around the knot.
struct Trace {
    /// Edge labels in traversal order.
    edges: Vec<u64>,
    signs: Vec<i8>,
}

impl PdCode {
    pub fn crossings(&self) -> &[[u64; 4]] {
        &self.crossings
    }

    /// Validates label multiplicities, orientation consistency and that the
    /// code describes a single closed component.
    pub fn new(crossings: Vec<[u64; 4]>) -> Result<Self, Error> {
        if crossings.is_empty() {
            return Err(Error::InvalidCode("PD code has no crossings".into()));
        }
        let code = Self { crossings };
        code.trace()?;
        Ok(code)
    }

    fn positions(&self) -> Result<HashMap<u64, Vec<(usize, usize)>>, Error> {
        let mut at: HashMap<u64, Vec<(usize, usize)>> = HashMap::new();
        for (x, labels) in self.crossings.iter().enumerate() {
            for (s, &l) in labels.iter().enumerate() {
                at.entry(l).or_default().push((x, s));
            }
        }
        let mut bad: Vec<_> = at
            .iter()
            .filter(|(_, v)| v.len() != 2)
            .map(|(l, v)| (*l, v.len()))
            .collect();
        bad.sort_unstable();
        if let Some((l, n)) = bad.first() {
            return Err(Error::InvalidCode(format!(
                "edge label {l} appears {n} time(s); every label must appear exactly twice"
            )));
        }
        Ok(at)
    }

    fn trace(&self) -> Result<Trace, Error> {
        let at = self.positions()?;
        let other = |(x, s): (usize, usize)| -> (usize, usize) {
            let v = &at[&self.crossings[x][s]];
            if v[0] == (x, s) {
                v[1]
            } else {
                v[0]
            }
        };
        let n = self.crossings.len();
        let mut passes: Vec<[Option<Pass>; 2]> = vec![[None, None]; n];
        let mut edges = Vec::with_capacity(2 * n);
        let start = (0usize, 2usize);
        passes[0][0] = Some(Pass::Under);
        let mut out = start;
        loop {
            edges.push(self.crossings[out.0][out.1]);
            let (x, s) = other(out);
            let (pass, exit) = match s {
                0 => (Pass::Under, 2),
                3 => (Pass::OverDtoB, 1),
                1 => (Pass::OverBtoD, 3),
                _ => {
                    return Err(Error::InvalidCode(format!(
                        "inconsistent orientation: edge {} leaves two under-strands",
                        self.crossings[x][s]
                    )))
                }
            };
            if (x, exit) == start {
                break;
            }
            let slot = usize::from(pass != Pass::Under);
            if passes[x][slot].is_some() {
                return Err(Error::InvalidCode(format!(
                    "crossing {} is traversed twice in the same role",
                    x + 1
                )));
            }
            passes[x][slot] = Some(pass);
            out = (x, exit);
        }
        if edges.len() != 2 * n || passes.iter().any(|p| p[1].is_none()) {
            return Err(Error::NotAKnot(format!(
                "PD code has more than one component ({} of {} edges reached)",
                edges.len(),
                2 * n
            )));
        }
        let signs = passes
            .iter()
            .map(|p| if p[1] == Some(Pass::OverDtoB) { 1 } else { -1 })
            .collect();
        Ok(Trace { edges, signs })
    }

    /// Crossing signs in input order.
    pub fn signs(&self) -> Vec<i8> {
        self.trace().map(|t| t.signs).unwrap_or_default()
    }

    /// Merges edges through over-passes into arcs and builds the diagram.
    pub fn to_diagram(&self) -> Result<KnotDiagram, Error> {
        let trace = self.trace()?;
        // Canonical orientation start: the smallest label.
        let min_at = trace
            .edges
            .iter()
            .enumerate()
            .min_by_key(|(_, l)| **l)
            .map(|(i, _)| i)
            .unwrap_or(0);
        let mut order = trace.edges.clone();
        order.rotate_left(min_at);

        let index: HashMap<u64, usize> = order.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut uf = UnionFind::new(order.len());
        for c in &self.crossings {
            uf.union(index[&c[1]], index[&c[3]]);
        }
        let mut arc_of_root: HashMap<usize, usize> = HashMap::new();
        let mut arc_of_edge = vec![0usize; order.len()];
        for (i, slot) in arc_of_edge.iter_mut().enumerate() {
            let r = uf.find(i);
            let next = arc_of_root.len();
            *slot = *arc_of_root.entry(r).or_insert(next);
        }
        let arc = |l: u64| arc_of_edge[index[&l]];
        let crossings = self
            .crossings
            .iter()
            .zip(&trace.signs)
            .map(|(c, &sign)| Crossing {
                over: arc(c[1]),
                under_in: arc(c[0]),
                under_out: arc(c[2]),
                sign,
            })
            .collect();
        KnotDiagram::new(arc_of_root.len(), crossings)
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("PD[")?;
        for (i, [a, b, c, d]) in self.crossings.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "X({a},{b},{c},{d})")?;
        }
        f.write_str("]")
    }
}

/// Parses `PD[X(a,b,c,d), ...]`.
pub fn parse_pd(text: &str) -> Result<PdCode, Error> {
    let mut lx = Lexer::new(text);
    lx.expect_word("PD")?;
    lx.expect('[')?;
    let mut crossings = Vec::new();
    if lx.eat(']') {
        lx.expect_end()?;
        return Err(Error::InvalidCode("PD code has no crossings".into()));
    }
    loop {
        lx.expect('X')?;
        lx.expect('(')?;
        let mut labels = [0u64; 4];
        for (i, slot) in labels.iter_mut().enumerate() {
            if i > 0 {
                let pos = lx.pos();
                if !lx.eat(',') {
                    let msg = if lx.peek() == Some(')') {
                        "crossing has fewer than 4 edge labels"
                    } else {
                        "expected ','"
                    };
                    return Err(ParseError::new(pos, msg).into());
                }
            }
            let pos = lx.pos();
            let v = lx.unsigned()?;
            if v == 0 {
                return Err(ParseError::new(pos, "edge labels must be positive").into());
            }
            *slot = v;
        }
        let pos = lx.pos();
        if !lx.eat(')') {
            let msg = if lx.peek() == Some(',') {
                "crossing has more than 4 edge labels"
            } else {
                "expected ')'"
            };
            return Err(ParseError::new(pos, msg).into());
        }
        crossings.push(labels);
        if lx.eat(']') {
            break;
        }
        lx.expect(',')?;
    }
    lx.expect_end()?;
    PdCode::new(crossings)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Smaller root wins so labels follow traversal order.
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}
