use std::fmt;

use crate::error::Error;
use crate::laurent::LaurentPoly;

/// Dense rectangular matrix over ℤ[t, t⁻¹].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

/// The matrix moves that preserve every elementary ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    /// New row `i` is old row `perm[i]`.
    PermuteRows(Vec<usize>),
    /// New column `j` is old column `perm[j]`.
    PermuteCols(Vec<usize>),
    /// `row[target] += Σ c · row[src]` over other rows.
    AddRowCombination {
        target: usize,
        terms: Vec<(usize, LaurentPoly)>,
    },
    /// `col[target] += Σ c · col[src]` over other columns.
    AddColCombination {
        target: usize,
        terms: Vec<(usize, LaurentPoly)>,
    },
    /// Appends a zero row.
    AdjoinZeroRow,
    /// `A ↦ [[A, 0], [0, 1]]`.
    StabilizeUnit,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![LaurentPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    /// Rows must all have the same length.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self, Error> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_width(rows, cols)
    }

    /// Like [`from_rows`](Self::from_rows) but fixes the width, so a matrix
    /// with no rows still has `cols` columns.
    pub fn from_rows_with_width(rows: Vec<Vec<LaurentPoly>>, cols: usize) -> Result<Self, Error> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::InvalidArgument(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            entries.extend(r);
        }
        Ok(Self { rows: n, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Applies `f` to every entry.
    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Copy of the square submatrix on the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self, Error> {
        if let Some(&r) = rows.iter().find(|&&r| r >= self.rows) {
            return Err(Error::IndexOutOfRange(format!("row {r} of {}", self.rows)));
        }
        if let Some(&c) = cols.iter().find(|&&c| c >= self.cols) {
            return Err(Error::IndexOutOfRange(format!("column {c} of {}", self.cols)));
        }
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &r) in rows.iter().enumerate() {
            for (b, &c) in cols.iter().enumerate() {
                m.set(a, b, self.get(r, c).clone());
            }
        }
        Ok(m)
    }

    /// Determinant of the square submatrix picked out by `rows` × `cols`.
    pub fn minor_det(&self, rows: &[usize], cols: &[usize]) -> Result<LaurentPoly, Error> {
        if rows.len() != cols.len() {
            return Err(Error::InvalidArgument(format!(
                "minor needs as many rows as columns ({} vs {})",
                rows.len(),
                cols.len()
            )));
        }
        Ok(bareiss_det(self.submatrix(rows, cols)?))
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Result<LaurentPoly, Error> {
        if self.rows != self.cols {
            return Err(Error::InvalidArgument("determinant of a non-square matrix".into()));
        }
        Ok(bareiss_det(self.clone()))
    }

    pub fn apply_equivalence(&self, op: &Equivalence) -> Result<Self, Error> {
        match op {
            Equivalence::PermuteRows(perm) => {
                check_perm(perm, self.rows)?;
                let mut m = Self::zeros(self.rows, self.cols);
                for (i, &src) in perm.iter().enumerate() {
                    for j in 0..self.cols {
                        m.set(i, j, self.get(src, j).clone());
                    }
                }
                Ok(m)
            }
            Equivalence::PermuteCols(perm) => Ok(self
                .transpose()
                .apply_equivalence(&Equivalence::PermuteRows(perm.clone()))?
                .transpose()),
            Equivalence::AddRowCombination { target, terms } => {
                check_combination(*target, terms, self.rows)?;
                let mut m = self.clone();
                for j in 0..self.cols {
                    let mut acc = self.get(*target, j).clone();
                    for (src, c) in terms {
                        acc += &(c * self.get(*src, j));
                    }
                    m.set(*target, j, acc);
                }
                Ok(m)
            }
            Equivalence::AddColCombination { target, terms } => Ok(self
                .transpose()
                .apply_equivalence(&Equivalence::AddRowCombination {
                    target: *target,
                    terms: terms.clone(),
                })?
                .transpose()),
            Equivalence::AdjoinZeroRow => {
                let mut m = self.clone();
                m.entries.extend(std::iter::repeat_n(LaurentPoly::zero(), self.cols));
                m.rows += 1;
                Ok(m)
            }
            Equivalence::StabilizeUnit => {
                let mut m = Self::zeros(self.rows + 1, self.cols + 1);
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        m.set(i, j, self.get(i, j).clone());
                    }
                }
                m.set(self.rows, self.cols, LaurentPoly::one());
                Ok(m)
            }
        }
    }
}

fn check_perm(perm: &[usize], n: usize) -> Result<(), Error> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::InvalidArgument(format!(
            "permutation of length {} for {n} lines",
            perm.len()
        )));
    }
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidArgument(format!(
                "{perm:?} is not a permutation of 0..{n}"
            )));
        }
    }
    Ok(())
}

fn check_combination(target: usize, terms: &[(usize, LaurentPoly)], n: usize) -> Result<(), Error> {
    if target >= n {
        return Err(Error::IndexOutOfRange(format!("target {target} of {n}")));
    }
    for (src, _) in terms {
        if *src >= n {
            return Err(Error::IndexOutOfRange(format!("source {src} of {n}")));
        }
        if *src == target {
            return Err(Error::InvalidArgument("a line cannot be combined into itself".into()));
        }
    }
    Ok(())
}

/// Fraction-free elimination; every division is exact in ℤ[t, t⁻¹].
fn bareiss_det(mut m: PolyMatrix) -> LaurentPoly {
    let n = m.rows;
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        // Prefer the sparsest nonzero pivot to keep intermediate terms small.
        let pivot = (k..n)
            .filter(|&i| !m.get(i, k).is_zero())
            .min_by_key(|&i| m.get(i, k).len());
        let Some(p) = pivot else {
            return LaurentPoly::zero();
        };
        if p != k {
            for j in 0..n {
                m.entries.swap(p * n + j, k * n + j);
            }
            negate = !negate;
        }
        let pk = m.get(k, k).clone();
        for i in k + 1..n {
            let ik = m.get(i, k).clone();
            for j in k + 1..n {
                let num = &(m.get(i, j) * &pk) - &(&ik * m.get(k, j));
                let v = if prev.is_one() {
                    num
                } else {
                    num.div_exact(&prev).expect("Bareiss step divides exactly")
                };
                m.set(i, j, v);
            }
            m.set(i, k, LaurentPoly::zero());
        }
        prev = pk;
    }
    let d = m.get(n - 1, n - 1).clone();
    if negate {
        -d
    } else {
        d
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
