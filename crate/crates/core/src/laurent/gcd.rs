//! Dense ℤ[t] helpers: exact division and the subresultant gcd.
//!
//! Laurent inputs are shifted so their lowest exponent is 0; a gcd in
//! ℤ[t, t⁻¹] is then a gcd of those representatives in ℤ[t], since `t` is a
//! unit on one side and coprime to every shifted representative.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::LaurentPoly;

/// Coefficients low → high; never has a trailing (top) zero.
pub(super) type Dense = Vec<BigInt>;

pub(super) fn to_dense(p: &LaurentPoly) -> Dense {
    let Some(low) = p.min_exp() else {
        return Vec::new();
    };
    let high = p.max_exp().unwrap_or(low);
    let mut v = vec![BigInt::zero(); (high - low + 1) as usize];
    for (e, c) in p.terms() {
        v[(e - low) as usize] = c.clone();
    }
    v
}

pub(super) fn from_dense(v: &[BigInt], low: i64) -> LaurentPoly {
    LaurentPoly::from_terms(
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (low + i as i64, c.clone())),
    )
}

fn trim(v: &mut Dense) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn degree(v: &Dense) -> usize {
    v.len() - 1
}

fn content(v: &Dense) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn div_scalar(v: &Dense, c: &BigInt) -> Dense {
    v.iter().map(|x| x / c).collect()
}

/// Exact quotient in ℤ[t]; `None` if there is a remainder or a coefficient
/// division is not exact.
pub(super) fn dense_div_exact(num: &Dense, den: &Dense) -> Option<Dense> {
    if den.is_empty() {
        return None;
    }
    if num.is_empty() {
        return Some(Vec::new());
    }
    if num.len() < den.len() {
        return None;
    }
    let mut rem = num.clone();
    let dd = degree(den);
    let lead = den.last()?;
    let mut q = vec![BigInt::zero(); num.len() - dd];
    for i in (0..q.len()).rev() {
        let top = &rem[i + dd];
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        q[i] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

/// Pseudo-remainder with the exact multiplier `lc(b)^(deg a - deg b + 1)`.
fn prem(a: &Dense, b: &Dense) -> Dense {
    let db = degree(b);
    let da = degree(a);
    let lb = &b[db];
    let mut r = a.clone();
    let mut e = da - db + 1;
    while !r.is_empty() && r.len() > db {
        let dr = degree(&r);
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let off = dr - db;
        for (j, bj) in b.iter().enumerate() {
            r[off + j] -= &lr * bj;
        }
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = num_traits::pow(lb.clone(), e);
        for c in r.iter_mut() {
            *c *= &f;
        }
    }
    r
}

/// Subresultant polynomial remainder sequence gcd of two nonzero dense
/// polynomials; result is primitive up to the content gcd factor.
fn subresultant_gcd(a: &Dense, b: &Dense) -> Dense {
    let (mut a, mut b) = if a.len() >= b.len() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    let ca = content(&a);
    let cb = content(&b);
    let d = ca.gcd(&cb);
    a = div_scalar(&a, &ca);
    b = div_scalar(&b, &cb);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = degree(&a) - degree(&b);
        let r = prem(&a, &b);
        if r.is_empty() {
            break;
        }
        if degree(&r) == 0 {
            b = vec![BigInt::one()];
            break;
        }
        a = b;
        let divisor = &g * num_traits::pow(h.clone(), delta);
        b = div_scalar(&r, &divisor);
        g = a[degree(&a)].clone();
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
    }
    let cb = content(&b);
    let mut out: Dense = b.iter().map(|c| c / &cb * &d).collect();
    if out.last().is_some_and(|c| c.is_negative()) {
        out.iter_mut().for_each(|c| *c = -std::mem::take(c));
    }
    out
}

pub(super) fn laurent_gcd(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    match (p.is_zero(), q.is_zero()) {
        (true, _) => return q.normalize(),
        (_, true) => return p.normalize(),
        _ => {}
    }
    let g = subresultant_gcd(&to_dense(p), &to_dense(q));
    from_dense(&g, 0).normalize()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(v: &[i64]) -> Dense {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn prem_matches_definition() {
        // a = t^3 + 1, b = 2t + 1: lc(b)^3 a = 8t^3 + 8, remainder = 8·(-1/8) + 8 = 7
        let r = prem(&d(&[1, 0, 0, 1]), &d(&[1, 2]));
        assert_eq!(r, d(&[7]));
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (1 - t + t^2)(1 + t) and (1 - t + t^2)(2 - t)
        let a = d(&[1, 0, 0, 1]);
        let b = d(&[2, -3, 3, -1]);
        assert_eq!(subresultant_gcd(&a, &b), d(&[1, -1, 1]));
    }

    #[test]
    fn gcd_keeps_content() {
        assert_eq!(subresultant_gcd(&d(&[4, 4]), &d(&[6, 6])), d(&[2, 2]));
        assert_eq!(subresultant_gcd(&d(&[4]), &d(&[6, 3])), d(&[1]));
    }

    #[test]
    fn exact_division() {
        assert_eq!(dense_div_exact(&d(&[1, 0, 0, -1]), &d(&[1, -1])), Some(d(&[1, 1, 1])));
        assert_eq!(dense_div_exact(&d(&[1, 1]), &d(&[1, 0, 1])), None);
        assert_eq!(dense_div_exact(&d(&[3, 3]), &d(&[2])), None);
    }
}
