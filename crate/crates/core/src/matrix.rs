//! Dense square matrices over either scalar backend, plus the exact
//! row reduction used for ranks and kernels. Dimensions here are desk
//! scale (N <= 64), so everything is straightforward O(n^3) code.

use num_complex::Complex64;

use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq)]
pub struct SquareMatrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: std::fmt::Debug> std::fmt::Debug for SquareMatrix<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "SquareMatrix(n = {})", self.n)?;
        for r in 0..self.n {
            write!(f, "  [")?;
            for c in 0..self.n {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.entries[r * self.n + c])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: Scalar> SquareMatrix<T> {
    pub fn from_fn(n: usize, mut entry: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(entry(r, c));
            }
        }
        SquareMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.entries[r * self.n + c] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.n)
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        Self::from_fn(n, |r, c| {
            let mut acc = self.get(r, 0).mul(rhs.get(0, c));
            for k in 1..n {
                acc = acc.add(&self.get(r, k).mul(rhs.get(k, c)));
            }
            acc
        })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        Self::from_fn(self.n, |r, c| self.get(r, c).add(rhs.get(r, c)))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        Self::from_fn(self.n, |r, c| self.get(r, c).sub(rhs.get(r, c)))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.n, |r, c| self.get(r, c).neg())
    }

    pub fn scale(&self, factor: &T) -> Self {
        Self::from_fn(self.n, |r, c| self.get(r, c).mul(factor))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |r, c| self.get(c, r).clone())
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.n, |r, c| self.get(c, r).conj())
    }

    pub fn trace(&self) -> T {
        let mut acc = self.get(0, 0).clone();
        for k in 1..self.n {
            acc = acc.add(self.get(k, k));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Max |entry| of the numeric image.
    pub fn inf_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.to_complex().norm())
            .fold(0.0, f64::max)
    }

    pub fn to_complex_matrix(&self) -> SquareMatrix<Complex64> {
        SquareMatrix::from_fn(self.n, |r, c| self.get(r, c).to_complex())
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.n, "dimension mismatch");
        (0..self.n)
            .map(|r| {
                let mut acc = self.get(r, 0).mul(&v[0]);
                for (k, vk) in v.iter().enumerate().skip(1) {
                    acc = acc.add(&self.get(r, k).mul(vk));
                }
                acc
            })
            .collect()
    }

    /// A^k by repeated multiplication (exponents here are tiny).
    pub fn pow(&self, k: usize) -> Self {
        assert!(
            k >= 1,
            "zero matrix power needs an identity; use operators::identity"
        );
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.matmul(self);
        }
        acc
    }
}

pub fn commutator<T: Scalar>(a: &SquareMatrix<T>, b: &SquareMatrix<T>) -> SquareMatrix<T> {
    a.matmul(b).sub(&b.matmul(a))
}

pub fn anticommutator<T: Scalar>(a: &SquareMatrix<T>, b: &SquareMatrix<T>) -> SquareMatrix<T> {
    a.matmul(b).add(&b.matmul(a))
}

/// Reduced row echelon form in place over an exact field; returns the
/// pivot columns. Pivoting takes the first nonzero entry, which is only
/// sound when `is_zero` is exact, so this is not offered for floats.
pub fn reduced_row_echelon<T: Scalar>(rows: &mut [Vec<T>]) -> Result<Vec<usize>> {
    let ncols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(AlgebraError::Internal(
            "ragged row lengths in elimination".into(),
        ));
    }
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                // two rows of the same slice are touched, so stay indexed
                #[allow(clippy::needless_range_loop)]
                for j in 0..ncols {
                    let delta = rows[r][j].mul(&factor);
                    rows[i][j] = rows[i][j].sub(&delta);
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Ok(pivot_cols)
}

/// Exact rank of a rectangular coefficient matrix.
pub fn exact_row_rank<T: Scalar>(rows: &[Vec<T>]) -> Result<usize> {
    let mut work = rows.to_vec();
    Ok(reduced_row_echelon(&mut work)?.len())
}

/// Basis of the solution space of `rows * x = 0`, one vector per free
/// column. `zero`/`one` seed the basis entries since `T` carries no
/// constants of its own.
pub fn kernel_basis<T: Scalar>(
    rows: &[Vec<T>],
    ncols: usize,
    zero: &T,
    one: &T,
) -> Result<Vec<Vec<T>>> {
    let mut work: Vec<Vec<T>> = rows.to_vec();
    let pivot_cols = reduced_row_echelon(&mut work)?;
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![zero.clone(); ncols];
        v[free] = one.clone();
        for (i, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = work[i][free].neg();
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Exact rank and null-space basis of a square matrix over Q(zeta_M).
pub fn rank_and_kernel<T: Scalar>(
    m: &SquareMatrix<T>,
    zero: &T,
    one: &T,
) -> Result<(usize, Vec<Vec<T>>)> {
    let rows: Vec<Vec<T>> = m.rows().map(<[T]>::to_vec).collect();
    let basis = kernel_basis(&rows, m.n(), zero, one)?;
    Ok((m.n() - basis.len(), basis))
}
