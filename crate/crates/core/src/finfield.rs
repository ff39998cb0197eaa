//! Exact arithmetic over prime fields GF(p) and dense row-major matrices
//! with reduced-row-echelon canonicalization, kernels, and independence
//! tests. Every operation is exact; there is no floating point anywhere.
//!
//! Only prime moduli below 10 are accepted so that matrix rows serialize
//! as strings of single base-p digits (`"1100"`).

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combin::k_subsets;
use crate::{Error, Result};

/// A checked prime modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    /// Accepts 2, 3, 5 and 7; anything else is a construction error.
    pub fn new(p: u32) -> Result<Prime> {
        match p {
            2 | 3 | 5 | 7 => Ok(Prime(p)),
            _ => Err(Error::BadModulus(p)),
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Multiplicative inverse of `a` modulo `self`, for nonzero `a`.
    pub fn inverse(self, a: u32) -> u32 {
        debug_assert!(a % self.0 != 0, "zero has no inverse");
        // p is tiny; scan instead of extended Euclid
        (1..self.0).find(|b| (a * b) % self.0 == 1).unwrap()
    }
}

impl fmt::Debug for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0)
    }
}

/// A scalar of GF(p). Arithmetic between mismatched moduli panics; the
/// mismatch is a programming error, not a data error.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    modulus: Prime,
}

impl FieldElement {
    pub fn new(value: u32, modulus: Prime) -> FieldElement {
        FieldElement {
            value: value % modulus.get(),
            modulus,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> Prime {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inverse(self) -> Result<FieldElement> {
        if self.value == 0 {
            return Err(Error::domain("inverse of zero"));
        }
        Ok(FieldElement::new(
            self.modulus.inverse(self.value),
            self.modulus,
        ))
    }

    fn check(self, rhs: FieldElement) -> u32 {
        assert_eq!(self.modulus, rhs.modulus, "mixed moduli in field arithmetic");
        self.modulus.get()
    }
}

impl std::ops::Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        let p = self.check(rhs);
        FieldElement::new((self.value + rhs.value) % p, self.modulus)
    }
}

impl std::ops::Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        let p = self.check(rhs);
        FieldElement::new((p + self.value - rhs.value) % p, self.modulus)
    }
}

impl std::ops::Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        let p = self.check(rhs);
        FieldElement::new((self.value * rhs.value) % p, self.modulus)
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let p = self.modulus.get();
        FieldElement::new((p - self.value) % p, self.modulus)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus.get())
    }
}

/// Dense row-major matrix over GF(p). Entries are reduced residues.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: Prime,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl Matrix {
    pub fn new(p: Prime, rows: usize, cols: usize, entries: Vec<u32>) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(Error::domain(format!(
                "entry count {} does not match {rows}x{cols}",
                entries.len()
            )));
        }
        let entries = entries.into_iter().map(|e| e % p.get()).collect();
        Ok(Matrix {
            p,
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(p: Prime, rows: usize, cols: usize) -> Matrix {
        Matrix {
            p,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(p: Prime, n: usize) -> Matrix {
        let mut m = Matrix::zeros(p, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from row slices, all of one length.
    pub fn from_rows(p: Prime, rows: &[Vec<u32>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::domain("rows of unequal length"));
        }
        Matrix::new(p, rows.len(), cols, rows.concat())
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        FieldElement::new(self.entries[r * self.cols + c], self.p)
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    fn set(&mut self, r: usize, c: usize, v: u32) {
        self.entries[r * self.cols + c] = v % self.p.get();
    }

    /// Stacks `other` below `self`; column counts must agree.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p.get(), other.p.get()));
        }
        if self.cols != other.cols && self.rows != 0 && other.rows != 0 {
            return Err(Error::AmbientMismatch(self.cols, other.cols));
        }
        let cols = if self.rows == 0 { other.cols } else { self.cols };
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Matrix::new(self.p, self.rows + other.rows, cols, entries)
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.p != rhs.p {
            return Err(Error::ModulusMismatch(self.p.get(), rhs.p.get()));
        }
        if self.cols != rhs.rows {
            return Err(Error::AmbientMismatch(self.cols, rhs.rows));
        }
        let p = self.p.get();
        let mut out = Matrix::zeros(self.p, self.rows, rhs.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.entries[i * self.cols + t];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cur = out.entries[i * rhs.cols + j];
                    out.entries[i * rhs.cols + j] =
                        (cur + a * rhs.entries[t * rhs.cols + j]) % p;
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.entries[c * self.rows + r] = self.entries[r * self.cols + c];
            }
        }
        out
    }

    /// Reduced row echelon form with zero rows removed, plus the rank.
    ///
    /// Pivot columns are strictly increasing, every pivot is 1 and its
    /// column is otherwise zero, so the result is a canonical basis of the
    /// row space.
    pub fn rref(&self) -> (Matrix, usize) {
        let p = self.p.get();
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            let Some(src) = (pivot_row..m.rows).find(|&r| m.entries[r * m.cols + col] != 0)
            else {
                continue;
            };
            if src != pivot_row {
                for c in 0..m.cols {
                    m.entries.swap(pivot_row * m.cols + c, src * m.cols + c);
                }
            }
            let inv = self.p.inverse(m.entries[pivot_row * m.cols + col]);
            for c in 0..m.cols {
                let v = m.entries[pivot_row * m.cols + c];
                m.entries[pivot_row * m.cols + c] = (v * inv) % p;
            }
            for r in 0..m.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = m.entries[r * m.cols + col];
                if factor == 0 {
                    continue;
                }
                for c in 0..m.cols {
                    let sub = (factor * m.entries[pivot_row * m.cols + c]) % p;
                    let v = m.entries[r * m.cols + c];
                    m.entries[r * m.cols + c] = (v + p * p - sub) % p;
                }
            }
            pivot_row += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        let rank = pivot_row;
        m.entries.truncate(rank * m.cols);
        m.rows = rank;
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Pivot column of each row. Only meaningful on a matrix in RREF.
    pub fn pivot_cols(&self) -> Vec<usize> {
        (0..self.rows)
            .map(|r| self.row(r).iter().position(|&e| e != 0).expect("zero row"))
            .collect()
    }

    /// Canonical (RREF) basis of the right kernel {v : self · vᵀ = 0}.
    ///
    /// The row count is always `cols - rank`.
    pub fn kernel(&self) -> Matrix {
        let (r, rank) = self.rref();
        let pivots = r.pivot_cols();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let p = self.p.get();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![0u32; self.cols];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                let coeff = r.entries[i * r.cols + f];
                v[pc] = (p - coeff) % p;
            }
            rows.push(v);
        }
        let raw = if rows.is_empty() {
            Matrix::zeros(self.p, 0, self.cols)
        } else {
            Matrix::from_rows(self.p, &rows).expect("kernel rows uniform")
        };
        debug_assert_eq!(raw.rows, self.cols - rank);
        raw.rref().0
    }

    /// True iff the matrix is already in reduced row echelon form with no
    /// zero rows.
    pub fn is_canonical(&self) -> bool {
        let (r, rank) = self.rref();
        rank == self.rows && r == *self
    }

    /// One text line per row, each a string of base-p digits.
    pub fn to_text(&self) -> String {
        self.row_vecs()
            .iter()
            .map(|r| row_to_digits(r))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Parses the text form produced by [`Matrix::to_text`].
    pub fn parse_text(p: Prime, text: &str) -> Result<Matrix> {
        let rows: Vec<Vec<u32>> = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| digits_to_row(p, l.trim()))
            .collect::<Result<_>>()?;
        Matrix::from_rows(p, &rows)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[GF({}) {}x{}]", self.p.get(), self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, " {}", row_to_digits(self.row(r)))?;
        }
        Ok(())
    }
}

pub(crate) fn row_to_digits(row: &[u32]) -> String {
    row.iter()
        .map(|&e| char::from_digit(e, 10).expect("single digit entry"))
        .collect()
}

pub(crate) fn digits_to_row(p: Prime, s: &str) -> Result<Vec<u32>> {
    s.chars()
        .map(|c| {
            let d = c
                .to_digit(10)
                .ok_or_else(|| Error::Parse(format!("bad digit {c:?}")))?;
            if d >= p.get() {
                return Err(Error::Parse(format!("digit {d} out of range for GF({})", p.get())));
            }
            Ok(d)
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    p: u32,
    rows: Vec<String>,
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            p: self.p.get(),
            rows: self.row_vecs().iter().map(|r| row_to_digits(r)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(deserializer)?;
        let p = Prime::new(raw.p).map_err(D::Error::custom)?;
        let rows: Vec<Vec<u32>> = raw
            .rows
            .iter()
            .map(|s| digits_to_row(p, s))
            .collect::<Result<_>>()
            .map_err(D::Error::custom)?;
        Matrix::from_rows(p, &rows).map_err(D::Error::custom)
    }
}

/// True iff every m-element subset of `vectors` is linearly independent.
///
/// Rejects `m` larger than the vector count or the ambient dimension (rank
/// m would be impossible).
pub fn is_m_independent(p: Prime, vectors: &[Vec<u32>], m: usize) -> Result<bool> {
    let ambient = vectors.first().map_or(0, |v| v.len());
    if vectors.iter().any(|v| v.len() != ambient) {
        return Err(Error::domain("vectors of unequal length"));
    }
    if m > vectors.len() {
        return Err(Error::domain(format!(
            "m = {m} exceeds the {} given vectors",
            vectors.len()
        )));
    }
    if m > ambient {
        return Err(Error::domain(format!(
            "m = {m} exceeds the ambient dimension {ambient}"
        )));
    }
    Ok(violating_subset(p, vectors, m)?.is_none())
}

/// First (in lex subset order) m-element subset of `vectors` that is
/// dependent, or None when all are independent. Same preconditions as
/// [`is_m_independent`].
pub fn violating_subset(
    p: Prime,
    vectors: &[Vec<u32>],
    m: usize,
) -> Result<Option<Vec<usize>>> {
    for subset in k_subsets(vectors.len(), m) {
        let rows: Vec<Vec<u32>> = subset.iter().map(|&i| vectors[i - 1].clone()).collect();
        if Matrix::from_rows(p, &rows)?.rank() < m {
            // report 0-based indices
            return Ok(Some(subset.iter().map(|&i| i - 1).collect()));
        }
    }
    Ok(None)
}
