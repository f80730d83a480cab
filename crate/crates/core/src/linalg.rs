//! Exact integer and rational linear algebra.
//!
//! Matrices are dense and small (the largest ones have a few hundred rows),
//! so everything is written for clarity rather than asymptotic speed.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{AddAssign, Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<Int>;
pub type RatMatrix = Matrix<Rat>;

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors; all rows must have `cols` entries.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Shape(alloc::format!("row of length {} in {cols}-column matrix", r.len())));
            }
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(columns: &[Vec<T>], rows: usize) -> Result<Self> {
        if let Some(c) = columns.iter().find(|c| c.len() != rows) {
            return Err(Error::Shape(alloc::format!("column of length {} in {rows}-row matrix", c.len())));
        }
        Ok(Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + for<'a> AddAssign<&'a T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(alloc::format!("{}x{} times {}x{}", self.rows, self.cols, rhs.rows, rhs.cols)));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let p = a * &rhs[(k, j)];
                    out[(i, j)] += &p;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::Shape(alloc::format!("{}-column matrix times {}-vector", self.cols, v.len())));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    acc += &(a * b);
                }
                acc
            })
            .collect())
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl IntMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect();
        Self::from_rows(rows, cols).expect("ragged rows")
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |i, j| Rat::from_integer(self[(i, j)].clone()))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<Int> {
        if !self.is_square() {
            return Err(Error::Shape("determinant of non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Int::one());
        }
        let mut m = self.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return Ok(Int::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&m[(i, j)] * &m[(k, k)]) - &(&m[(i, k)] * &m[(k, j)]);
                    m[(i, j)] = v / &prev;
                }
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * &m[(n - 1, n - 1)])
    }

    pub fn rank(&self) -> usize {
        rank(&self.to_rat())
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &Int) {
        for j in 0..self.cols {
            let v = factor * &self[(source, j)];
            self[(target, j)] += &v;
        }
    }

    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &Int) {
        for i in 0..self.rows {
            let v = factor * &self[(i, source)];
            self[(i, target)] += &v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -core::mem::take(&mut self[(i, j)]);
            self[(i, j)] = v;
        }
    }

    /// Replaces rows (r, s) by (x r + y s, p r + q s).
    fn combine_rows(&mut self, r: usize, s: usize, x: &Int, y: &Int, p: &Int, q: &Int) {
        for j in 0..self.cols {
            let a = self[(r, j)].clone();
            let b = self[(s, j)].clone();
            self[(r, j)] = x * &a + y * &b;
            self[(s, j)] = p * &a + q * &b;
        }
    }
}

impl RatMatrix {
    /// Integer matrix if every entry is integral.
    pub fn to_int(&self) -> Option<IntMatrix> {
        if self.data.iter().all(|x| x.is_integer()) {
            Some(IntMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].to_integer()))
        } else {
            None
        }
    }

    pub fn trace(&self) -> Rat {
        let mut t = Rat::zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }
}

/// Reduced row echelon form over Q; returns the reduced matrix and pivot columns.
pub fn rref(a: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
            continue;
        };
        m.swap_rows(p, row);
        let inv = m[(row, col)].recip();
        for j in col..m.cols {
            let v = &m[(row, j)] * &inv;
            m[(row, j)] = v;
        }
        for i in 0..m.rows {
            if i == row || m[(i, col)].is_zero() {
                continue;
            }
            let f = m[(i, col)].clone();
            for j in col..m.cols {
                let v = &f * &m[(row, j)];
                m[(i, j)] -= v;
            }
        }
        pivots.push(col);
        row += 1;
    }
    (m, pivots)
}

pub fn rank(a: &RatMatrix) -> usize {
    rref(a).1.len()
}

/// Basis of the right kernel `{x : a x = 0}` over Q.
pub fn kernel_basis(a: &RatMatrix) -> Vec<Vec<Rat>> {
    let (r, pivots) = rref(a);
    let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); a.cols];
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, f)].clone();
            }
            v
        })
        .collect()
}

/// Kernel basis of an integer matrix, each vector scaled to a primitive integer vector.
pub fn kernel_basis_int(a: &IntMatrix) -> Vec<Vec<Int>> {
    kernel_basis(&a.to_rat()).into_iter().map(|v| primitive_from_rat(&v)).collect()
}

/// Some solution of `a x = b`, if one exists.
pub fn solve_rational(a: &RatMatrix, b: &[Rat]) -> Option<Vec<Rat>> {
    if b.len() != a.rows {
        return None;
    }
    let aug = RatMatrix::from_fn(a.rows, a.cols + 1, |i, j| if j < a.cols { a[(i, j)].clone() } else { b[i].clone() });
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&a.cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); a.cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r[(i, a.cols)].clone();
    }
    Some(x)
}

pub fn inverse(a: &RatMatrix) -> Option<RatMatrix> {
    if !a.is_square() {
        return None;
    }
    let n = a.rows;
    let aug = RatMatrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            a[(i, j)].clone()
        } else if j - n == i {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(RatMatrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
}

/// Inverse of a matrix in `GL(n, Z)`; fails unless the determinant is ±1.
pub fn invert_unimodular(a: &IntMatrix) -> Result<IntMatrix> {
    if !a.is_square() {
        return Err(Error::Shape("inverse of non-square matrix".into()));
    }
    if !a.determinant()?.abs().is_one() {
        return Err(Error::NotUnimodular);
    }
    let inv = inverse(&a.to_rat()).ok_or(Error::NotUnimodular)?;
    inv.to_int().ok_or(Error::NotUnimodular)
}

/// All `r x r` minors, row subsets outer and column subsets inner, both in
/// lexicographic order.
pub fn max_minors(a: &IntMatrix, r: usize) -> Vec<Int> {
    let mut out = Vec::new();
    if r > a.rows || r > a.cols {
        return out;
    }
    for rows in combinations(a.rows, r) {
        for cols in combinations(a.cols, r) {
            out.push(a.submatrix(&rows, &cols).determinant().expect("square"));
        }
    }
    out
}

/// Row-style Hermite normal form: returns `(h, u)` with `h = u a`, `u` unimodular,
/// `h` in echelon form with positive pivots and entries above each pivot
/// reduced into `[0, pivot)`.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut row = 0;
    for col in 0..h.cols {
        if row == h.rows {
            break;
        }
        for i in row + 1..h.rows {
            if h[(i, col)].is_zero() {
                continue;
            }
            let a0 = h[(row, col)].clone();
            let b0 = h[(i, col)].clone();
            let egcd = a0.extended_gcd(&b0);
            let (g, x, y) = (egcd.gcd, egcd.x, egcd.y);
            let p = -(&b0 / &g);
            let q = &a0 / &g;
            h.combine_rows(row, i, &x, &y, &p, &q);
            u.combine_rows(row, i, &x, &y, &p, &q);
        }
        if h[(row, col)].is_zero() {
            continue;
        }
        if h[(row, col)].is_negative() {
            h.negate_row(row);
            u.negate_row(row);
        }
        let piv = h[(row, col)].clone();
        for i in 0..row {
            let q = h[(i, col)].div_floor(&piv);
            if !q.is_zero() {
                let f = -q;
                h.add_row_multiple(i, row, &f);
                u.add_row_multiple(i, row, &f);
            }
        }
        row += 1;
    }
    (h, u)
}

/// Elementary divisors `d1 | d2 | ...`, one per diagonal position (zeros included).
pub fn snf(a: &IntMatrix) -> Vec<Int> {
    let mut m = a.clone();
    let n = m.rows.min(m.cols);
    for t in 0..n {
        // smallest nonzero entry in the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..m.rows {
            for j in t..m.cols {
                if !m[(i, j)].is_zero() && best.map_or(true, |(bi, bj)| m[(i, j)].abs() < m[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap_rows(t, bi);
        m.swap_cols(t, bj);
        loop {
            let mut clean = true;
            for i in t + 1..m.rows {
                let q = m[(i, t)].div_floor(&m[(t, t)]);
                if !q.is_zero() {
                    m.add_row_multiple(i, t, &-q);
                }
                if !m[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..m.cols {
                let q = m[(t, j)].div_floor(&m[(t, t)]);
                if !q.is_zero() {
                    m.add_col_multiple(j, t, &-q);
                }
                if !m[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // move the smallest remainder in row/column t to the pivot
                let mut best = (t, t);
                for i in t + 1..m.rows {
                    if !m[(i, t)].is_zero() && m[(i, t)].abs() < m[best].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..m.cols {
                    if !m[(t, j)].is_zero() && m[(t, j)].abs() < m[best].abs() {
                        best = (t, j);
                    }
                }
                m.swap_rows(t, best.0);
                m.swap_cols(t, best.1);
                continue;
            }
            let piv = m[(t, t)].clone();
            let bad = (t + 1..m.rows).find(|&i| (t + 1..m.cols).any(|j| !m[(i, j)].is_multiple_of(&piv)));
            match bad {
                Some(i) => {
                    m.add_row_multiple(t, i, &Int::one());
                }
                None => break,
            }
        }
    }
    (0..n).map(|i| m[(i, i)].abs()).collect()
}

/// Z-basis of `{x in Z^cols : a x = 0}`.
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vec<Int>> {
    let (h, u) = hnf(&a.transpose());
    (0..h.rows()).filter(|&i| h.row(i).iter().all(Zero::is_zero)).map(|i| u.row(i).to_vec()).collect()
}

/// Basis (in Hermite normal form) of the saturation `(L ⊗ Q) ∩ Z^N` of the
/// lattice spanned by `basis`.
pub fn saturate(basis: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let Some(first) = basis.first() else {
        return Vec::new();
    };
    let n = first.len();
    let a = IntMatrix::from_rows(basis.to_vec(), n).expect("vectors of equal length");
    let orth = integer_kernel(&a);
    let sat = if orth.is_empty() {
        IntMatrix::identity(n).to_rows()
    } else {
        integer_kernel(&IntMatrix::from_rows(orth, n).expect("kernel rows"))
    };
    if sat.is_empty() {
        return sat;
    }
    let (h, _) = hnf(&IntMatrix::from_rows(sat, n).expect("rows"));
    h.to_rows().into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect()
}

/// True when the Z-span of `vectors` is saturated in `Z^N`.
pub fn spans_saturated(vectors: &[Vec<Int>]) -> bool {
    let Some(first) = vectors.first() else { return true };
    let a = IntMatrix::from_rows(vectors.to_vec(), first.len()).expect("equal length");
    let r = a.rank();
    snf(&a).iter().take(r).all(One::is_one)
}

pub fn gcd_all(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
pub fn primitive(v: &[Int]) -> Vec<Int> {
    let g = gcd_all(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Clears denominators and divides out the content.
pub fn primitive_from_rat(v: &[Rat]) -> Vec<Int> {
    let l = v.iter().fold(Int::one(), |l, x| l.lcm(x.denom()));
    let scaled: Vec<Int> = v.iter().map(|x| (x * Rat::from_integer(l.clone())).to_integer()).collect();
    primitive(&scaled)
}

/// Flips the sign so that the first nonzero entry is positive.
pub fn sign_canonical(v: &[Int]) -> Vec<Int> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => v.iter().map(|x| -x).collect(),
        _ => v.to_vec(),
    }
}

pub fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub(crate) fn rat_vec(v: &[Int]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

pub(crate) fn dot<T>(a: &[T], b: &[T]) -> T
where
    T: Zero + for<'a> AddAssign<&'a T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    let mut acc = T::zero();
    for (x, y) in a.iter().zip(b) {
        acc += &(x * y);
    }
    acc
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        if idx[i] == i + n - k {
            return out;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    #[test]
    fn hnf_of_identity_is_identity() {
        let id = IntMatrix::identity(3);
        let (h, u) = hnf(&id);
        assert_eq!(h, id);
        assert_eq!(u, id);
    }

    #[test]
    fn hnf_of_column_has_gcd_leading() {
        let a = m(&[&[4], &[6]]);
        let (h, u) = hnf(&a);
        assert_eq!(h, m(&[&[2], &[0]]));
        assert_eq!(u.mul(&a).unwrap(), h);
        assert!(u.determinant().unwrap().abs().is_one());
    }

    #[test]
    fn diag_two_three() {
        let a = m(&[&[2, 0], &[0, 3]]);
        let (h, u) = hnf(&a);
        assert_eq!(u.mul(&a).unwrap(), h);
        assert_eq!(h.determinant().unwrap().abs(), Int::from(6));
        assert_eq!(snf(&a), ints(&[1, 6]));
    }

    #[test]
    fn snf_basic_cases() {
        assert_eq!(snf(&IntMatrix::identity(4)), ints(&[1, 1, 1, 1]));
        assert_eq!(snf(&IntMatrix::zeros(2, 3)), ints(&[0, 0]));
        // columns e1..e4 and (-1,-1,-1,-1,2): an index-2 sublattice of Z^5
        let ns = IntMatrix::from_columns(
            &[
                ints(&[1, 0, 0, 0, 0]),
                ints(&[0, 1, 0, 0, 0]),
                ints(&[0, 0, 1, 0, 0]),
                ints(&[0, 0, 0, 1, 0]),
                ints(&[-1, -1, -1, -1, 2]),
            ],
            5,
        )
        .unwrap();
        assert_eq!(snf(&ns), ints(&[1, 1, 1, 1, 2]));
    }

    #[test]
    fn saturate_examples() {
        assert_eq!(saturate(&[ints(&[2, 0])]), vec![ints(&[1, 0])]);
        assert_eq!(saturate(&[ints(&[1, 1]), ints(&[1, -1])]), vec![ints(&[1, 0]), ints(&[0, 1])]);
        assert!(saturate(&[]).is_empty());
        assert_eq!(saturate(&[ints(&[2, 4, 6]), ints(&[0, 3, 3])]).len(), 2);
    }

    #[test]
    fn minors_of_small_matrix() {
        let a = m(&[&[1, 0, 1], &[0, 1, 0], &[0, 0, -1]]);
        let minors = max_minors(&a, 3);
        assert_eq!(minors, ints(&[-1]));
        let two = max_minors(&a, 2);
        assert_eq!(two.len(), 9);
        // rows 0,1 and columns 0,2 give [[1, 1], [0, 0]]
        assert_eq!(two[1], Int::zero());
    }

    #[test]
    fn invert_unimodular_rejects_det_two() {
        assert_eq!(invert_unimodular(&m(&[&[2, 0], &[0, 1]])), Err(Error::NotUnimodular));
        let a = m(&[&[1, 1], &[0, 1]]);
        let inv = invert_unimodular(&a).unwrap();
        assert_eq!(a.mul(&inv).unwrap(), IntMatrix::identity(2));
    }

    #[test]
    fn kernel_and_solve() {
        let a = m(&[&[1, 1, 0], &[0, 1, 1]]);
        let k = kernel_basis_int(&a);
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).unwrap().iter().all(Zero::is_zero));
        let x = solve_rational(&a.to_rat(), &rat_vec(&ints(&[1, 2]))).unwrap();
        assert_eq!(a.to_rat().mul_vec(&x).unwrap(), rat_vec(&ints(&[1, 2])));
        assert!(solve_rational(&m(&[&[1, 1], &[1, 1]]).to_rat(), &rat_vec(&ints(&[0, 1]))).is_none());
    }

    #[test]
    fn combinatorics_helpers() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(5, 5).len(), 1);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(binomial(22, 8), Int::from(319770));
    }
}
