use num_bigint::BigInt;

use super::LaurentPoly;
use crate::error::ParseError;

/// Parses the rendering grammar: signed terms `c`, `t`, `c t^k`, `c*t^k`,
/// e.g. `1 - t + t^2` or `-t^-1 + 2 - 3t^4`. Whitespace is ignored.
pub fn parse_laurent(text: &str) -> Result<LaurentPoly, ParseError> {
    let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(ParseError::new(0, "empty polynomial"));
    }
    let mut cur = Cursor {
        chars: &chars,
        i: 0,
        end: text.len(),
    };
    let mut out = LaurentPoly::zero();
    let mut first = true;
    while !cur.done() {
        let negative = match cur.peek() {
            Some('+') => {
                cur.bump();
                false
            }
            Some('-') => {
                cur.bump();
                true
            }
            _ if first => false,
            _ => return Err(ParseError::new(cur.pos(), "expected '+' or '-' between terms")),
        };
        first = false;
        let start = cur.pos();
        let coeff = cur.digits();
        let mut exp = 0i64;
        let has_t = match cur.peek() {
            Some('*') if coeff.is_some() => {
                cur.bump();
                if cur.peek() != Some('t') {
                    return Err(ParseError::new(cur.pos(), "expected 't' after '*'"));
                }
                true
            }
            Some('t') => true,
            _ => false,
        };
        if has_t {
            cur.bump();
            exp = 1;
            if cur.peek() == Some('^') {
                cur.bump();
                let neg = if cur.peek() == Some('-') {
                    cur.bump();
                    true
                } else {
                    false
                };
                let p = cur.pos();
                let e = cur
                    .digits()
                    .ok_or_else(|| ParseError::new(p, "expected exponent after '^'"))?;
                let e: i64 = e.try_into().map_err(|_| ParseError::new(p, "exponent out of range"))?;
                exp = if neg { -e } else { e };
            }
        } else if coeff.is_none() {
            return Err(ParseError::new(start, "expected a coefficient or 't'"));
        }
        let mut c = coeff.unwrap_or_else(|| BigInt::from(1));
        if negative {
            c = -c;
        }
        out += &LaurentPoly::monomial(c, exp);
    }
    Ok(out)
}

struct Cursor<'a> {
    chars: &'a [(usize, char)],
    i: usize,
    end: usize,
}

impl Cursor<'_> {
    fn done(&self) -> bool {
        self.i >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).map(|(_, c)| *c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.i).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) {
        self.i += 1;
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        if start == self.i {
            return None;
        }
        let s: String = self.chars[start..self.i].iter().map(|(_, c)| *c).collect();
        s.parse().ok()
    }
}
