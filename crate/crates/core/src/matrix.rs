//! Prime fields and small square matrices over them.

use std::fmt;

use crate::combinatorics::{Label, SetComposition};
use crate::error::{Error, Result};

pub const MAX_DIM: usize = 6;

/// `F_p` for a prime `p < 37` (so that entries render as single digits).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u8,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        let prime = p >= 2
            && (2..p)
                .take_while(|d| d * d <= p)
                .all(|d| !p.is_multiple_of(d));
        if !prime || p >= 37 {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p: p as u8 })
    }

    pub fn p(&self) -> u32 {
        self.p as u32
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.p as u16) as u8
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        ((a as u16 + self.p as u16 - b as u16) % self.p as u16) as u8
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.sub(0, a)
    }

    /// Panics on zero.
    pub fn inv(&self, a: u8) -> u8 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        let mut r = 1u8;
        for _ in 0..self.p - 2 {
            r = self.mul(r, a);
        }
        r
    }

    /// Least generator of `F_p^×`.
    pub fn primitive_root(&self) -> u8 {
        (1..self.p)
            .find(|g| {
                let mut x = 1u8;
                (1..self.p - 1).all(|_| {
                    x = self.mul(x, *g);
                    x != 1
                })
            })
            .expect("cyclic multiplicative group")
    }
}

/// Square matrix over `F_p`, rows and columns indexed by `1..=n`.
///
/// Equality and ordering compare the row-major entry vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqMatrix {
    n: u8,
    p: u8,
    e: [u8; MAX_DIM * MAX_DIM],
}

impl FqMatrix {
    pub fn zero(n: usize, field: PrimeField) -> Self {
        assert!(n <= MAX_DIM, "dimension {n} exceeds {MAX_DIM}");
        Self {
            n: n as u8,
            p: field.p,
            e: [0; MAX_DIM * MAX_DIM],
        }
    }

    pub fn identity(n: usize, field: PrimeField) -> Self {
        let mut m = Self::zero(n, field);
        for i in 0..n {
            m.e[i * MAX_DIM + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u32>], field: PrimeField) -> Result<Self> {
        let n = rows.len();
        if n > MAX_DIM {
            return Err(Error::DimensionTooLarge(n));
        }
        let mut m = Self::zero(n, field);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, v) in row.iter().enumerate() {
                m.e[i * MAX_DIM + j] = (v % field.p()) as u8;
            }
        }
        Ok(m)
    }

    /// Row-major entries, first `n*n` of which are used.
    pub fn from_entries(n: usize, field: PrimeField, entries: &[u8]) -> Self {
        let mut m = Self::zero(n, field);
        for (k, v) in entries.iter().enumerate().take(n * n) {
            m.e[(k / n) * MAX_DIM + k % n] = v % field.p;
        }
        m
    }

    /// `1 + c·E_{ij}` (labels are 1-based).
    pub fn elementary(n: usize, field: PrimeField, i: Label, j: Label, c: u8) -> Self {
        let mut m = Self::identity(n, field);
        m.set(i, j, c);
        m
    }

    /// Permutation matrix sending basis vector `e_j` to `e_{w(j)}`, so that
    /// `(W X W⁻¹)_{w(r), w(s)} = X_{r, s}`.
    pub fn permutation(w: &[Label], field: PrimeField) -> Self {
        let n = w.len();
        let mut m = Self::zero(n, field);
        for (j, wj) in w.iter().enumerate() {
            m.set(*wj, j as Label + 1, 1);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    /// Entry at 1-based labels `(i, j)`.
    pub fn get(&self, i: Label, j: Label) -> u8 {
        self.e[(i as usize - 1) * MAX_DIM + j as usize - 1]
    }

    pub fn set(&mut self, i: Label, j: Label, v: u8) {
        self.e[(i as usize - 1) * MAX_DIM + j as usize - 1] = v % self.p;
    }

    /// Row-major entries.
    pub fn entries(&self) -> Vec<u8> {
        let n = self.n();
        (0..n * n)
            .map(|k| self.e[(k / n) * MAX_DIM + k % n])
            .collect()
    }

    pub fn mul(&self, other: &FqMatrix) -> FqMatrix {
        debug_assert_eq!((self.n, self.p), (other.n, other.p));
        let n = self.n();
        let p = self.p as u32;
        let mut out = Self {
            n: self.n,
            p: self.p,
            e: [0; MAX_DIM * MAX_DIM],
        };
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u32;
                for k in 0..n {
                    acc += self.e[i * MAX_DIM + k] as u32 * other.e[k * MAX_DIM + j] as u32;
                }
                out.e[i * MAX_DIM + j] = (acc % p) as u8;
            }
        }
        out
    }

    /// Row-reduces a copy and returns the rank.
    pub fn rank(&self) -> usize {
        self.reduce(None).0
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n()
    }

    pub fn inverse(&self) -> Option<FqMatrix> {
        let mut inv = Self::identity(self.n(), self.field());
        let (rank, _) = self.reduce(Some(&mut inv));
        (rank == self.n()).then_some(inv)
    }

    /// Gauss-Jordan elimination, applying the same row operations to `aux`.
    fn reduce(&self, mut aux: Option<&mut FqMatrix>) -> (usize, FqMatrix) {
        let f = self.field();
        let n = self.n();
        let mut m = *self;
        let mut rank = 0;
        for col in 0..n {
            let Some(pivot) = (rank..n).find(|r| m.e[r * MAX_DIM + col] != 0) else {
                continue;
            };
            for k in 0..n {
                m.e.swap(rank * MAX_DIM + k, pivot * MAX_DIM + k);
                if let Some(a) = aux.as_deref_mut() {
                    a.e.swap(rank * MAX_DIM + k, pivot * MAX_DIM + k);
                }
            }
            let s = f.inv(m.e[rank * MAX_DIM + col]);
            for k in 0..n {
                m.e[rank * MAX_DIM + k] = f.mul(m.e[rank * MAX_DIM + k], s);
                if let Some(a) = aux.as_deref_mut() {
                    a.e[rank * MAX_DIM + k] = f.mul(a.e[rank * MAX_DIM + k], s);
                }
            }
            for r in 0..n {
                let c = m.e[r * MAX_DIM + col];
                if r == rank || c == 0 {
                    continue;
                }
                for k in 0..n {
                    m.e[r * MAX_DIM + k] =
                        f.sub(m.e[r * MAX_DIM + k], f.mul(c, m.e[rank * MAX_DIM + k]));
                    if let Some(a) = aux.as_deref_mut() {
                        a.e[r * MAX_DIM + k] =
                            f.sub(a.e[r * MAX_DIM + k], f.mul(c, a.e[rank * MAX_DIM + k]));
                    }
                }
            }
            rank += 1;
        }
        (rank, m)
    }

    pub fn transpose(&self) -> FqMatrix {
        let mut out = *self;
        let n = self.n();
        for i in 0..n {
            for j in 0..n {
                out.e[i * MAX_DIM + j] = self.e[j * MAX_DIM + i];
            }
        }
        out
    }

    /// `(x†)_{r,s} = x_{w̃(s), w̃(r)}` with `w̃(i) = n + 1 - i`.
    pub fn dagger(&self) -> FqMatrix {
        let n = self.n();
        let mut out = *self;
        for r in 0..n {
            for s in 0..n {
                out.e[r * MAX_DIM + s] = self.e[(n - 1 - s) * MAX_DIM + (n - 1 - r)];
            }
        }
        out
    }

    /// `W X W⁻¹` for the permutation `w`: `(^wX)_{w(r), w(s)} = X_{r, s}`.
    pub fn conjugate_by_permutation(&self, w: &[Label]) -> FqMatrix {
        let n = self.n();
        let mut out = *self;
        for r in 0..n {
            for s in 0..n {
                out.e[(w[r] as usize - 1) * MAX_DIM + w[s] as usize - 1] = self.e[r * MAX_DIM + s];
            }
        }
        out
    }

    /// Submatrix on the given (sorted) labels, relabelled to `1..=|labels|`.
    pub fn block(&self, labels: &[Label]) -> FqMatrix {
        let mut out = Self::zero(labels.len(), self.field());
        for (r, i) in labels.iter().enumerate() {
            for (s, j) in labels.iter().enumerate() {
                out.e[r * MAX_DIM + s] = self.get(*i, *j);
            }
        }
        out
    }

    /// Block-diagonal matrix placing `blocks[k]` on the labels of part `k`.
    pub fn direct_sum(blocks: &[FqMatrix], parts: &SetComposition) -> Result<FqMatrix> {
        if blocks.len() != parts.len() {
            return Err(Error::Precondition(format!(
                "{} blocks for {} parts",
                blocks.len(),
                parts.len()
            )));
        }
        let ground = parts.ground();
        if !ground.is_interval() {
            return Err(Error::Precondition(format!(
                "ground {:?} is not [n]",
                ground.labels()
            )));
        }
        let field = match blocks.first() {
            Some(b) => b.field(),
            None => return Ok(Self::zero(0, PrimeField { p: 2 })),
        };
        let mut out = Self::zero(ground.len(), field);
        for (b, part) in blocks.iter().zip(parts.parts()) {
            if b.n() != part.len() || b.p != field.p {
                return Err(Error::GroundMismatch {
                    left: part.clone(),
                    right: (1..=b.n() as Label).collect(),
                });
            }
            for (r, i) in part.iter().enumerate() {
                for (s, j) in part.iter().enumerate() {
                    out.set(*i, *j, b.e[r * MAX_DIM + s]);
                }
            }
        }
        Ok(out)
    }

    /// Row-major digit string, e.g. `"1101"`.
    pub fn digits(&self) -> String {
        self.entries()
            .iter()
            .map(|v| char::from_digit(*v as u32, 36).expect("digit"))
            .collect()
    }

    pub fn parse_digits(s: &str, field: PrimeField) -> Result<FqMatrix> {
        let n = (s.len() as f64).sqrt().round() as usize;
        if n * n != s.len() || n > MAX_DIM {
            return Err(Error::Parse(format!("{s:?} is not a square digit string")));
        }
        let entries: Option<Vec<u8>> = s
            .chars()
            .map(|c| c.to_digit(36).filter(|d| *d < field.p()).map(|d| d as u8))
            .collect();
        let entries = entries
            .ok_or_else(|| Error::Parse(format!("{s:?} has digits outside F_{}", field.p())))?;
        Ok(Self::from_entries(n, field, &entries))
    }
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{}[{}]", self.p, self.digits())
    }
}

impl fmt::Display for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.digits())
    }
}
