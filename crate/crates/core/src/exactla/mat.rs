use std::fmt;

use num_traits::{One, Zero};

use super::{one, zero, Scalar, Subspace};

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of row reduction: the reduced rows and their pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    /// Nonzero reduced rows, one per pivot, pivot columns strictly
    /// increasing, pivot entries 1, pivot columns cleared elsewhere.
    pub rows: Vec<Vec<Scalar>>,
    /// Pivot column of each reduced row.
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "from_rows: ragged rows");
            data.extend(row);
        }
        Mat { rows: r, cols: c, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Integer literal constructor, mainly for tests and bundled corpora.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| super::qi(x)).collect())
                .collect(),
        )
    }

    /// Column vector from a slice.
    pub fn col_vec(v: &[Scalar]) -> Self {
        Mat {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    /// Row vector from a slice.
    pub fn row_vec(v: &[Scalar]) -> Self {
        Mat {
            rows: 1,
            cols: v.len(),
            data: v.to_vec(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(ambient: usize, cols: &[Vec<Scalar>]) -> Self {
        let mut m = Mat::zero(ambient, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), ambient, "from_cols: wrong column length");
            for i in 0..ambient {
                m.set(i, j, c[i].clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row_slice(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    /// Flat row-major entries; the `vec_r` coordinates of the matrix seen
    /// as a vector.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    /// Rebuild a `rows × cols` matrix from row-major entries.
    pub fn from_entries(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "from_entries: wrong length");
        Mat { rows, cols, data }
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(
            self.cols, other.rows,
            "mul: {}x{} times {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j).clone();
                    out.set(i, j, cur + a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "add: shape");
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + other.at(i, j))
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sub: shape");
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) - other.at(i, j))
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * c)
    }

    /// Apply to a coordinate vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "apply: length mismatch");
        let mut out = vec![zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = zero();
            for j in 0..self.cols {
                let a = self.at(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    acc += a * &v[j];
                }
            }
            out[i] = acc;
        }
        out
    }

    /// Kronecker product in the crate-wide index convention:
    /// `kron(a, b)[(i_a·rb + i_b), (j_a·cb + j_b)] = a[i_a, j_a] · b[i_b, j_b]`.
    pub fn kron(&self, other: &Mat) -> Mat {
        let mut out = Mat::zero(self.rows * other.rows, self.cols * other.cols);
        for ia in 0..self.rows {
            for ja in 0..self.cols {
                let a = self.at(ia, ja);
                if a.is_zero() {
                    continue;
                }
                for ib in 0..other.rows {
                    for jb in 0..other.cols {
                        let b = other.at(ib, jb);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(ia * other.rows + ib, ja * other.cols + jb, a * b);
                    }
                }
            }
        }
        out
    }

    /// Stack side by side.
    pub fn hstack(blocks: &[&Mat]) -> Mat {
        assert!(!blocks.is_empty());
        let rows = blocks[0].rows;
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zero(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack: row mismatch");
            for i in 0..rows {
                for j in 0..b.cols {
                    out.set(i, off + j, b.at(i, j).clone());
                }
            }
            off += b.cols;
        }
        out
    }

    /// Stack on top of each other.
    pub fn vstack(blocks: &[&Mat]) -> Mat {
        assert!(!blocks.is_empty());
        let cols = blocks[0].cols;
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Mat::zero(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack: col mismatch");
            for i in 0..b.rows {
                for j in 0..cols {
                    out.set(off + i, j, b.at(i, j).clone());
                }
            }
            off += b.rows;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.at(i, j);
                if i == j {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Reduced row echelon form, computed by incremental row insertion.
    ///
    /// Rows are folded in one at a time and reduced against the pivots found
    /// so far; rows that collapse to zero are dropped early, which keeps the
    /// cost proportional to the rank for the sparse constraint systems this
    /// crate generates.
    pub fn rref(&self) -> Rref {
        let mut acc = RrefAccum::new(self.cols);
        for i in 0..self.rows {
            acc.insert(self.row_slice(i).to_vec());
        }
        acc.finish()
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right kernel `{v : self · v = 0}`, canonical w.r.t. the
    /// RREF of `self`: one vector per free column, unit coordinate at the
    /// free column.
    pub fn kernel_basis(&self) -> Subspace {
        let Rref { rows, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis: Vec<Vec<Scalar>> = Vec::new();
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![zero(); self.cols];
            v[f] = one();
            for (r, &p) in rows.iter().zip(pivots.iter()) {
                let c = &r[f];
                if !c.is_zero() {
                    v[p] = -c.clone();
                }
            }
            basis.push(v);
        }
        Subspace::from_basis_unchecked(self.cols, basis)
    }

    /// One solution of `self · x = rhs`, or `None` if inconsistent.  Free
    /// variables are set to zero, so the answer is deterministic.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        self.solve_mat(&Mat::col_vec(rhs)).map(|m| m.col(0))
    }

    /// Solve `self · X = rhs` column-wise, or `None` if any column is
    /// inconsistent.
    pub fn solve_mat(&self, rhs: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, rhs.rows, "solve: row mismatch");
        let aug = Mat::hstack(&[self, rhs]);
        let Rref { rows, pivots } = aug.rref();
        let n = self.cols;
        // a pivot inside the rhs block means that column is not in the span
        if pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut x = Mat::zero(n, rhs.cols);
        for (r, &p) in rows.iter().zip(pivots.iter()) {
            for j in 0..rhs.cols {
                x.set(p, j, r[n + j].clone());
            }
        }
        Some(x)
    }

    /// Exact inverse, or `None` if singular.
    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = Mat::hstack(&[self, &Mat::identity(n)]);
        let Rref { rows, pivots } = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Mat::zero(n, n);
        for (i, r) in rows.iter().enumerate() {
            for j in 0..n {
                inv.set(i, j, r[n + j].clone());
            }
        }
        Some(inv)
    }

    /// Determinant by fraction-preserving Gaussian elimination.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "det: not square");
        let n = self.rows;
        let mut a: Vec<Vec<Scalar>> = (0..n).map(|i| self.row_slice(i).to_vec()).collect();
        let mut det = one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return zero();
            };
            if piv != col {
                a.swap(piv, col);
                det = -det;
            }
            let p = a[col][col].clone();
            det *= &p;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] / &p;
                for c in col..n {
                    let s = &a[col][c] * &factor;
                    a[r][c] -= s;
                }
            }
        }
        det
    }
}

/// Incremental echelon accumulator: maintains a reduced set of rows with
/// strictly increasing pivots.
pub(crate) struct RrefAccum {
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RrefAccum {
    pub(crate) fn new(cols: usize) -> Self {
        RrefAccum {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Reduce `row` against the accumulated rows; if a new pivot survives,
    /// normalize, back-substitute and insert.  Returns true when the row
    /// enlarged the span.
    pub(crate) fn insert(&mut self, mut row: Vec<Scalar>) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        for (r, &p) in self.rows.iter().zip(self.pivots.iter()) {
            let c = row[p].clone();
            if c.is_zero() {
                continue;
            }
            for j in p..self.cols {
                if !r[j].is_zero() {
                    let s = &r[j] * &c;
                    row[j] -= s;
                }
            }
        }
        let Some(lead) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[lead].clone();
        for x in row.iter_mut().skip(lead) {
            if !x.is_zero() {
                *x /= &inv;
            }
        }
        // clear the new pivot column from existing rows
        for r in self.rows.iter_mut() {
            let c = r[lead].clone();
            if c.is_zero() {
                continue;
            }
            for j in lead..self.cols {
                if !row[j].is_zero() {
                    let s = &row[j] * &c;
                    r[j] -= s;
                }
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, row);
        true
    }

    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub(crate) fn finish(self) -> Rref {
        Rref {
            rows: self.rows,
            pivots: self.pivots,
        }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row_slice(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
