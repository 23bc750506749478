//! Independent oracles shared by the integration tests. Nothing here calls the
//! library's determinant, gcd or Fox-calculus code.

#![allow(dead_code)]

use btspin_core::alexander::PolyMatrix;
use btspin_core::knot::table::KnotTable;
use btspin_core::knot::KnotDiagram;
use btspin_core::LaurentPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &PolyMatrix) -> LaurentPoly {
    assert_eq!(m.rows(), m.cols(), "square matrix");
    let n = m.rows();
    let rows: Vec<Vec<LaurentPoly>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    laplace(&rows)
}

fn laplace(a: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = a.len();
    match n {
        0 => LaurentPoly::one(),
        1 => a[0][0].clone(),
        _ => {
            let mut acc = LaurentPoly::zero();
            for j in 0..n {
                if a[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<LaurentPoly>> = a[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &a[0][j] * &laplace(&minor);
                if j % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            acc
        }
    }
}

type QPoly = Vec<BigRational>;

fn to_q(p: &LaurentPoly) -> QPoly {
    let lo = p.min_exp().unwrap_or(0);
    let hi = p.max_exp().unwrap_or(0);
    let mut v = vec![BigRational::zero(); (hi - lo + 1) as usize];
    for (e, c) in p.terms() {
        v[(e - lo) as usize] = BigRational::from_integer(c.clone());
    }
    trim_q(v)
}

fn trim_q(mut v: QPoly) -> QPoly {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn rem_q(mut a: QPoly, b: &QPoly) -> QPoly {
    let lb = b.last().unwrap().clone();
    while a.len() >= b.len() {
        let shift = a.len() - b.len();
        let f = a.last().unwrap() / &lb;
        for (i, c) in b.iter().enumerate() {
            a[i + shift] -= &f * c;
        }
        a = trim_q(a);
    }
    a
}

fn content(p: &LaurentPoly) -> BigInt {
    p.terms().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
}

/// gcd in ℤ[t, t⁻¹] via Euclid over ℚ[t] times the gcd of the contents.
pub fn euclid_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return b.normalize();
    }
    if b.is_zero() {
        return a.normalize();
    }
    let (mut x, mut y) = (to_q(a), to_q(b));
    while !y.is_empty() {
        let r = rem_q(x, &y);
        x = y;
        y = r;
    }
    // Clear denominators, then divide out the content.
    let lcm = x.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = x
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let prim = LaurentPoly::from_coeffs(0, &ints);
    let c = content(&prim);
    let prim = LaurentPoly::from_terms(prim.terms().map(|(e, v)| (e, v / &c)));
    prim.scale(&content(a).gcd(&content(b))).normalize()
}

/// Wirtinger Alexander matrix written down from crossing data alone:
/// row `o u o⁻¹ w⁻¹` is `(1 - t) e_o + t e_u - e_w`, row `o⁻¹ u o w⁻¹` is
/// `(1 - t⁻¹) e_o + t⁻¹ e_u - e_w`.
pub fn wirtinger_oracle(d: &KnotDiagram) -> PolyMatrix {
    let l = d.arc_count();
    let mut m = PolyMatrix::zeros(l, l);
    for (i, c) in d.crossings().iter().enumerate() {
        let s = i64::from(c.sign);
        let add = |m: &mut PolyMatrix, j: usize, v: LaurentPoly| {
            let cur = m.get(i, j).clone();
            m.set(i, j, &cur + &v);
        };
        add(&mut m, c.over, &LaurentPoly::one() - &LaurentPoly::t_pow(s));
        add(&mut m, c.under_in, LaurentPoly::t_pow(s));
        add(&mut m, c.under_out, LaurentPoly::constant(-1));
    }
    m
}

/// Δ from one `(l-1)`-minor of the oracle matrix (last row and column deleted).
pub fn alexander_oracle(d: &KnotDiagram) -> LaurentPoly {
    let a = wirtinger_oracle(d);
    let l = a.rows();
    if l == 1 {
        return LaurentPoly::one();
    }
    let keep: Vec<usize> = (0..l - 1).collect();
    cofactor_det(&a.submatrix(&keep, &keep).unwrap()).normalize()
}

pub fn bundled() -> Vec<(String, KnotDiagram)> {
    KnotTable::bundled()
        .entries()
        .iter()
        .map(|e| (e.name.clone(), e.code.to_diagram().unwrap()))
        .collect()
}

pub fn random_poly<R: Rng>(rng: &mut R, max_terms: usize, exp: i64, coeff: i64) -> LaurentPoly {
    let n = rng.gen_range(0..=max_terms);
    LaurentPoly::from_terms((0..n).map(|_| (rng.gen_range(-exp..=exp), BigInt::from(rng.gen_range(-coeff..=coeff)))))
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, random_poly(rng, 3, 2, 4));
        }
    }
    m
}
