//! Dense linear algebra over GF(2).
//!
//! Rows are packed into `u64` words, bit `j` of row `i` living in word
//! `j / 64` at position `j % 64`. Elimination walks columns left to right and
//! takes the first row (from the current rank down) with the column bit set as
//! pivot. Matrices up to 128 columns are eliminated in registers.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A length-`n` vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Vector {
    n: usize,
    words: Vec<u64>,
}

impl Gf2Vector {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector with ones at the given 0-based positions.
    pub fn from_ones(n: usize, ones: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v = Self::zeros(n);
        for i in ones {
            if i >= n {
                return Err(Error::invalid(format!(
                    "index {i} out of range for length {n}"
                )));
            }
            v.set(i, true);
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.n, "bit {i} out of range (len {})", self.n);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.n, "bit {i} out of range (len {})", self.n);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// 0-based positions of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&i| self.get(i))
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.n)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        write!(f, "Gf2Vector({s})")
    }
}

/// A square `n x n` matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    n: usize,
    stride: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be positive");
        let stride = words_for(n);
        Self {
            n,
            stride,
            data: vec![0; n * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(n: usize, mut entry: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                if entry(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Builds a matrix from rows of 0/1 entries.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::invalid("matrix must have at least one row"));
        }
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::invalid(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            for (j, &e) in row.iter().enumerate() {
                match e {
                    0 => {}
                    1 => m.set(i, j, true),
                    other => {
                        return Err(Error::invalid(format!(
                            "entry ({i},{j}) = {other} is not 0 or 1"
                        )))
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.n && j < self.n);
        (self.data[i * self.stride + j / WORD] >> (j % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.n && j < self.n);
        let w = &mut self.data[i * self.stride + j / WORD];
        let mask = 1u64 << (j % WORD);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul_vec(&self, x: &Gf2Vector) -> Result<Gf2Vector> {
        self.check_len(x)?;
        let mut out = Gf2Vector::zeros(self.n);
        for i in 0..self.n {
            let parity = self
                .row_words(i)
                .iter()
                .zip(x.words())
                .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones());
            out.set(i, parity & 1 == 1);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if other.n != self.n {
            return Err(Error::invalid("matrix dimensions differ"));
        }
        let t = other.transpose();
        Ok(Self::from_fn(self.n, |i, j| {
            self.row_words(i)
                .iter()
                .zip(t.row_words(j))
                .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
                & 1
                == 1
        }))
    }

    /// Row rank over GF(2). The matrix itself is not modified.
    pub fn rank(&self) -> usize {
        match self.stride {
            1 => {
                let mut rows: Vec<u64> = self.data.clone();
                rank_packed(&mut rows, self.n)
            }
            2 => {
                let mut rows: Vec<u128> = self
                    .data
                    .chunks_exact(2)
                    .map(|w| w[0] as u128 | (w[1] as u128) << 64)
                    .collect();
                rank_packed(&mut rows, self.n)
            }
            _ => {
                let mut scratch = self.data.clone();
                rank_wide(&mut scratch, self.n, self.stride)
            }
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    /// Finds some `x` with `self * x = b`, or `None` if `b` is outside the
    /// column space. Free variables are set to zero.
    pub fn solve(&self, b: &Gf2Vector) -> Result<Option<Gf2Vector>> {
        self.check_len(b)?;
        let n = self.n;
        let stride = self.stride;
        let mut a = self.data.clone();
        let mut rhs: Vec<bool> = (0..n).map(|i| b.get(i)).collect();
        let mut pivot_cols = Vec::with_capacity(n);
        let mut rank = 0;
        for col in 0..n {
            let (cw, cb) = (col / WORD, col % WORD);
            let Some(p) = (rank..n).find(|&r| (a[r * stride + cw] >> cb) & 1 == 1) else {
                continue;
            };
            swap_rows(&mut a, stride, p, rank);
            rhs.swap(p, rank);
            for r in 0..n {
                if r != rank && (a[r * stride + cw] >> cb) & 1 == 1 {
                    xor_row_into(&mut a, stride, rank, r);
                    rhs[r] ^= rhs[rank];
                }
            }
            pivot_cols.push(col);
            rank += 1;
        }
        if rhs[rank..].iter().any(|&v| v) {
            return Ok(None);
        }
        let mut x = Gf2Vector::zeros(n);
        for (row, &col) in pivot_cols.iter().enumerate() {
            if rhs[row] {
                x.set(col, true);
            }
        }
        Ok(Some(x))
    }

    fn check_len(&self, v: &Gf2Vector) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::invalid(format!(
                "vector length {} does not match matrix dimension {}",
                v.len(),
                self.n
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            let s: String = (0..self.n)
                .map(|j| if self.get(i, j) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}

/// Row types that fit a whole matrix row in one register.
pub(crate) trait PackedRow:
    Copy + Eq + std::ops::BitXorAssign + std::ops::BitAnd<Output = Self>
{
    const ZERO: Self;
    fn bit(col: usize) -> Self;
}

impl PackedRow for u8 {
    const ZERO: Self = 0;
    fn bit(col: usize) -> Self {
        1 << col
    }
}

impl PackedRow for u64 {
    const ZERO: Self = 0;
    fn bit(col: usize) -> Self {
        1 << col
    }
}

impl PackedRow for u128 {
    const ZERO: Self = 0;
    fn bit(col: usize) -> Self {
        1 << col
    }
}

/// Rank of the `rows.len() x cols` matrix whose rows are packed registers.
/// Destroys `rows`.
pub(crate) fn rank_packed<R: PackedRow>(rows: &mut [R], cols: usize) -> usize {
    let n = rows.len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == n {
            break;
        }
        let mask = R::bit(col);
        let Some(p) = (rank..n).find(|&r| rows[r] & mask != R::ZERO) else {
            continue;
        };
        rows.swap(p, rank);
        let pivot = rows[rank];
        for row in rows[rank + 1..].iter_mut() {
            if *row & mask != R::ZERO {
                *row ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

fn rank_wide(a: &mut [u64], n: usize, stride: usize) -> usize {
    let mut rank = 0;
    for col in 0..n {
        let (cw, cb) = (col / WORD, col % WORD);
        let Some(p) = (rank..n).find(|&r| (a[r * stride + cw] >> cb) & 1 == 1) else {
            continue;
        };
        swap_rows(a, stride, p, rank);
        for r in rank + 1..n {
            if (a[r * stride + cw] >> cb) & 1 == 1 {
                xor_row_into(a, stride, rank, r);
            }
        }
        rank += 1;
    }
    rank
}

fn swap_rows(a: &mut [u64], stride: usize, i: usize, j: usize) {
    if i == j {
        return;
    }
    for w in 0..stride {
        a.swap(i * stride + w, j * stride + w);
    }
}

fn xor_row_into(a: &mut [u64], stride: usize, src: usize, dst: usize) {
    for w in 0..stride {
        let v = a[src * stride + w];
        a[dst * stride + w] ^= v;
    }
}
