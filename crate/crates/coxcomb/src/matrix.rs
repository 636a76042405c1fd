//! Arbitrary-precision integer linear algebra: Hermite and Smith normal
//! forms, kernels, and sublattice arithmetic.
//!
//! The canonical Hermite form used throughout is column-style: pivot rows
//! strictly increase, pivots are positive, entries above a pivot are zero,
//! entries in a pivot row right of the pivot are zero and left of it are
//! reduced into `[0, pivot)`. Two sublattices are equal iff their canonical
//! bases agree entrywise.

use std::fmt;

use crate::{Error, Result, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Matrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![T::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = T::one();
        }
        m
    }

    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        let mut m = Matrix::zero(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for i in 0..rows {
                *m.at_mut(i, j) = c[i].clone();
            }
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut m = Matrix::zero(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row length mismatch");
            for j in 0..cols {
                *m.at_mut(i, j) = r[j].clone();
            }
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix::new(
            rows,
            cols,
            data.iter().map(|v| T::from_i64(*v).unwrap()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn select_columns(&self, indices: &[usize]) -> Self {
        let cols: Vec<Vec<T>> = indices.iter().map(|&j| self.column(j)).collect();
        Matrix::from_columns(self.rows, &cols)
    }

    pub fn transpose(&self) -> Self {
        let mut m = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *m.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut m = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = T::zero();
                for l in 0..self.cols {
                    acc = acc + self.at(i, l).clone() * other.at(l, j).clone();
                }
                *m.at_mut(i, j) = acc;
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    acc = acc + self.at(i, j).clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = self.at(i, j).clone();
            *self.at_mut(i, j) = -v;
        }
    }

    /// col_dst -= q * col_src
    fn submul_col(&mut self, dst: usize, src: usize, q: &T) {
        for i in 0..self.rows {
            let v = self.at(i, dst).clone() - q.clone() * self.at(i, src).clone();
            *self.at_mut(i, dst) = v;
        }
    }

    /// Unimodular two-column operation bringing `gcd(row[a], row[b])` into
    /// column `a` and zero into column `b` of the given row.
    fn gcd_cols(&mut self, row: usize, a: usize, b: usize, partner: &mut Option<&mut Matrix<T>>) {
        let va = self.at(row, a).clone();
        let vb = self.at(row, b).clone();
        debug_assert!(!vb.is_zero());
        if va.is_zero() {
            self.swap_cols(a, b);
            if let Some(u) = partner {
                u.swap_cols(a, b);
            }
            return;
        }
        let eg = va.extended_gcd(&vb);
        let (g, x, y) = (eg.gcd, eg.x, eg.y);
        let ca = va.clone() / g.clone();
        let cb = vb.clone() / g.clone();
        let apply = |m: &mut Matrix<T>| {
            for i in 0..m.rows {
                let p = m.at(i, a).clone();
                let q = m.at(i, b).clone();
                *m.at_mut(i, a) = x.clone() * p.clone() + y.clone() * q.clone();
                *m.at_mut(i, b) = ca.clone() * q - cb.clone() * p;
            }
        };
        apply(self);
        if let Some(u) = partner {
            apply(u);
        }
    }

    /// Canonical column Hermite normal form `H` with unimodular `U` such
    /// that `H = self * U`.
    pub fn hnf(&self) -> (Matrix<T>, Matrix<T>) {
        let mut h = self.clone();
        let mut u = Matrix::identity(self.cols);
        h.hermitize(&mut Some(&mut u));
        (h, u)
    }

    /// Canonical column Hermite form without the transform.
    pub fn hnf_form(&self) -> Matrix<T> {
        let mut h = self.clone();
        h.hermitize(&mut None);
        h
    }

    fn hermitize(&mut self, u: &mut Option<&mut Matrix<T>>) {
        let mut pivot_col = 0usize;
        for row in 0..self.rows {
            if pivot_col >= self.cols {
                break;
            }
            // sweep the gcd of this row into pivot_col
            let mut any = !self.at(row, pivot_col).is_zero();
            for j in pivot_col + 1..self.cols {
                if !self.at(row, j).is_zero() {
                    self.gcd_cols(row, pivot_col, j, u);
                    any = true;
                }
            }
            if !any {
                continue;
            }
            if self.at(row, pivot_col).is_negative() {
                self.negate_col(pivot_col);
                if let Some(m) = u {
                    m.negate_col(pivot_col);
                }
            }
            let pivot = self.at(row, pivot_col).clone();
            for j in 0..pivot_col {
                let q = self.at(row, j).div_floor(&pivot);
                if !q.is_zero() {
                    self.submul_col(j, pivot_col, &q);
                    if let Some(m) = u {
                        m.submul_col(j, pivot_col, &q);
                    }
                }
            }
            pivot_col += 1;
        }
    }

    /// Number of nonzero columns of the Hermite form, i.e. the rank.
    pub fn rank(&self) -> usize {
        let h = self.hnf_form();
        (0..h.cols)
            .filter(|&j| (0..h.rows).any(|i| !h.at(i, j).is_zero()))
            .count()
    }

    /// Basis of the saturated integer kernel `{v : self·v = 0}`, columns in
    /// canonical Hermite form.
    pub fn kernel_basis(&self) -> Matrix<T> {
        let (h, u) = self.hnf();
        let mut cols = Vec::new();
        for j in 0..h.cols {
            if (0..h.rows).all(|i| h.at(i, j).is_zero()) {
                cols.push(u.column(j));
            }
        }
        Matrix::from_columns(self.cols, &cols).hnf_nonzero()
    }

    /// Hermite form with zero columns dropped.
    fn hnf_nonzero(&self) -> Matrix<T> {
        let h = self.hnf_form();
        let cols: Vec<Vec<T>> = (0..h.cols)
            .map(|j| h.column(j))
            .filter(|c| c.iter().any(|v| !v.is_zero()))
            .collect();
        Matrix::from_columns(self.rows, &cols)
    }

    /// Smith normal form: `(S, U, V)` with `S = U * self * V` diagonal,
    /// positive entries, each dividing the next.
    pub fn snf(&self) -> (Matrix<T>, Matrix<T>, Matrix<T>) {
        let mut s = self.clone();
        let mut u = Matrix::identity(self.rows);
        let mut v = Matrix::identity(self.cols);
        s.smithify(&mut Some((&mut u, &mut v)));
        (s, u, v)
    }

    /// Diagonal of the Smith form, without transforms.
    pub fn snf_diagonal(&self) -> Vec<T> {
        let mut s = self.clone();
        s.smithify(&mut None);
        (0..self.rows.min(self.cols))
            .map(|i| s.at(i, i).clone())
            .filter(|d| !d.is_zero())
            .collect()
    }

    fn smithify(&mut self, uv: &mut Option<(&mut Matrix<T>, &mut Matrix<T>)>) {
        let n = self.rows.min(self.cols);
        let mut t = 0usize;
        'outer: while t < n {
            // locate a nonzero entry for position (t, t)
            let mut found = None;
            'search: for j in t..self.cols {
                for i in t..self.rows {
                    if !self.at(i, j).is_zero() {
                        found = Some((i, j));
                        break 'search;
                    }
                }
            }
            let (pi, pj) = match found {
                Some(p) => p,
                None => break,
            };
            self.swap_rows(t, pi);
            if let Some((u, _)) = uv {
                u.swap_rows(t, pi);
            }
            self.swap_cols(t, pj);
            if let Some((_, v)) = uv {
                v.swap_cols(t, pj);
            }
            loop {
                for j in t + 1..self.cols {
                    if !self.at(t, j).is_zero() {
                        let mut partner = uv.as_mut().map(|(_, v)| &mut **v);
                        self.gcd_cols(t, t, j, &mut partner);
                    }
                }
                let mut dirtied = false;
                for i in t + 1..self.rows {
                    if !self.at(i, t).is_zero() {
                        let mut partner = uv.as_mut().map(|(u, _)| &mut **u);
                        self.gcd_rows(t, t, i, &mut partner);
                        dirtied = true;
                    }
                }
                if !dirtied && (t + 1..self.cols).all(|j| self.at(t, j).is_zero()) {
                    break;
                }
            }
            if self.at(t, t).is_negative() {
                self.negate_row(t);
                if let Some((u, _)) = uv {
                    u.negate_row(t);
                }
            }
            // divisibility: the pivot must divide every later entry
            let pivot = self.at(t, t).clone();
            if !pivot.is_one() {
                for i in t + 1..self.rows {
                    for j in t + 1..self.cols {
                        if !self.at(i, j).mod_floor(&pivot).is_zero() {
                            self.addmul_row(t, i, &T::one());
                            if let Some((u, _)) = uv {
                                u.addmul_row(t, i, &T::one());
                            }
                            continue 'outer;
                        }
                    }
                }
            }
            t += 1;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = self.at(i, j).clone();
            *self.at_mut(i, j) = -v;
        }
    }

    /// row_dst += q * row_src
    fn addmul_row(&mut self, dst: usize, src: usize, q: &T) {
        for j in 0..self.cols {
            let v = self.at(dst, j).clone() + q.clone() * self.at(src, j).clone();
            *self.at_mut(dst, j) = v;
        }
    }

    /// Row version of `gcd_cols`.
    fn gcd_rows(&mut self, col: usize, a: usize, b: usize, partner: &mut Option<&mut Matrix<T>>) {
        let va = self.at(a, col).clone();
        let vb = self.at(b, col).clone();
        debug_assert!(!vb.is_zero());
        if va.is_zero() {
            self.swap_rows(a, b);
            if let Some(u) = partner {
                u.swap_rows(a, b);
            }
            return;
        }
        let eg = va.extended_gcd(&vb);
        let (g, x, y) = (eg.gcd, eg.x, eg.y);
        let ca = va.clone() / g.clone();
        let cb = vb.clone() / g.clone();
        let apply = |m: &mut Matrix<T>| {
            for j in 0..m.cols {
                let p = m.at(a, j).clone();
                let q = m.at(b, j).clone();
                *m.at_mut(a, j) = x.clone() * p.clone() + y.clone() * q.clone();
                *m.at_mut(b, j) = ca.clone() * q - cb.clone() * p;
            }
        };
        apply(self);
        if let Some(u) = partner {
            apply(u);
        }
    }

    /// True iff the columns generate `Z^rows`.
    pub fn is_surjective(&self) -> bool {
        if self.rows == 0 {
            return true;
        }
        let h = self.hnf_nonzero();
        h.cols == self.rows && (0..self.rows).all(|i| h.at(i, i).is_one())
    }

    /// Exact determinant of a square matrix by fraction-free elimination.
    pub fn determinant(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut m = self.clone();
        let mut sign = false;
        let mut prev = T::one();
        for t in 0..n - 1 {
            if m.at(t, t).is_zero() {
                match (t + 1..n).find(|&i| !m.at(i, t).is_zero()) {
                    Some(i) => {
                        m.swap_rows(t, i);
                        sign = !sign;
                    }
                    None => return T::zero(),
                }
            }
            for i in t + 1..n {
                for j in t + 1..n {
                    let v = m.at(t, t).clone() * m.at(i, j).clone()
                        - m.at(i, t).clone() * m.at(t, j).clone();
                    *m.at_mut(i, j) = exact_div(v, &prev);
                }
                *m.at_mut(i, t) = T::zero();
            }
            prev = m.at(t, t).clone();
        }
        let d = m.at(n - 1, n - 1).clone();
        if sign {
            -d
        } else {
            d
        }
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(
                f,
                "  {}",
                (0..self.cols)
                    .map(|j| self.at(i, j).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            )?;
        }
        write!(f, "]")
    }
}

pub(crate) fn exact_div<T: Scalar>(v: T, d: &T) -> T {
    debug_assert!(!d.is_zero());
    let (q, r) = v.div_rem(d);
    debug_assert!(r.is_zero(), "division was not exact");
    q
}

/// Divide a nonzero integer vector by the gcd of its entries.
pub fn primitive<T: Scalar>(v: &[T]) -> Result<Vec<T>> {
    let mut g = T::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| exact_div(x.clone(), &g)).collect())
}

pub(crate) fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = T::zero();
    for (x, y) in a.iter().zip(b) {
        acc = acc + x.clone() * y.clone();
    }
    acc
}

/// Index of a sublattice in an ambient one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex<T> {
    Finite(T),
    Infinite,
}

impl<T: fmt::Display> fmt::Display for LatticeIndex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeIndex::Finite(v) => write!(f, "{v}"),
            LatticeIndex::Infinite => write!(f, "infinite"),
        }
    }
}

/// Sublattice of `Z^k`, stored by its canonical Hermite basis; equality is
/// entrywise equality of the stored bases.
#[derive(Clone, PartialEq, Eq)]
pub struct Sublattice<T> {
    ambient: usize,
    basis: Matrix<T>,
}

impl<T: Scalar> Sublattice<T> {
    /// Sublattice generated by the columns of `m`.
    pub fn from_generators(m: &Matrix<T>) -> Self {
        Sublattice {
            ambient: m.rows(),
            basis: m.hnf_nonzero(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Sublattice {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn basis_columns(&self) -> Vec<Vec<T>> {
        self.basis.columns()
    }

    /// Solve `basis · c = v` over the integers, if possible.
    fn solve(&self, v: &[T]) -> Option<Vec<T>> {
        assert_eq!(v.len(), self.ambient, "vector dimension mismatch");
        let mut rem: Vec<T> = v.to_vec();
        let mut coeffs = vec![T::zero(); self.basis.cols()];
        for j in 0..self.basis.cols() {
            let pivot_row = (0..self.ambient).find(|&i| !self.basis.at(i, j).is_zero())?;
            let pivot = self.basis.at(pivot_row, j);
            let (q, r) = rem[pivot_row].div_rem(pivot);
            if !r.is_zero() {
                return None;
            }
            for i in 0..self.ambient {
                rem[i] = rem[i].clone() - q.clone() * self.basis.at(i, j).clone();
            }
            coeffs[j] = q;
        }
        if rem.iter().all(|x| x.is_zero()) {
            Some(coeffs)
        } else {
            None
        }
    }

    /// True iff `v` is an integer combination of the basis.
    pub fn contains(&self, v: &[T]) -> bool {
        self.solve(v).is_some()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient && (0..self.ambient).all(|i| self.basis.at(i, i).is_one())
    }

    /// Canonical intersection of two sublattices of the same ambient lattice.
    pub fn intersect(&self, other: &Sublattice<T>) -> Result<Sublattice<T>> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        // solve B1 x = B2 y via the kernel of [B1 | -B2]
        let m1 = self.basis.cols();
        let m2 = other.basis.cols();
        let mut stacked = Matrix::zero(self.ambient, m1 + m2);
        for i in 0..self.ambient {
            for j in 0..m1 {
                *stacked.at_mut(i, j) = self.basis.at(i, j).clone();
            }
            for j in 0..m2 {
                *stacked.at_mut(i, m1 + j) = -other.basis.at(i, j).clone();
            }
        }
        let ker = stacked.kernel_basis();
        let mut gens = Vec::new();
        for j in 0..ker.cols() {
            let x: Vec<T> = (0..m1).map(|i| ker.at(i, j).clone()).collect();
            gens.push(self.basis.mul_vec(&x));
        }
        Ok(Sublattice::from_generators(&Matrix::from_columns(
            self.ambient,
            &gens,
        )))
    }

    /// Index `[super : self]`; `Infinite` when the ranks differ.
    pub fn index_in(&self, ambient: &Sublattice<T>) -> Result<LatticeIndex<T>> {
        if self.ambient != ambient.ambient {
            return Err(Error::DimensionMismatch {
                expected: ambient.ambient,
                got: self.ambient,
            });
        }
        let mut coords = Vec::new();
        for j in 0..self.basis.cols() {
            match ambient.solve(&self.basis.column(j)) {
                Some(c) => coords.push(c),
                None => {
                    return Err(Error::NotASublattice(
                        "basis vector lies outside the ambient sublattice".into(),
                    ))
                }
            }
        }
        if self.rank() < ambient.rank() {
            return Ok(LatticeIndex::Infinite);
        }
        let m = Matrix::from_columns(ambient.rank(), &coords);
        Ok(LatticeIndex::Finite(m.determinant().abs()))
    }

    /// Saturation: `span(self) ∩ Z^k`.
    pub fn saturation(&self) -> Sublattice<T> {
        // orthogonal complement of the span, then its kernel
        let complement = self.basis.transpose().kernel_basis();
        let span = complement.transpose().kernel_basis();
        Sublattice {
            ambient: self.ambient,
            basis: span,
        }
    }
}

impl<T: Scalar> fmt::Debug for Sublattice<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Sublattice(ambient {}, basis {:?})",
            self.ambient, self.basis
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;
    use num_traits::Signed;

    type M = Matrix<Int>;

    fn m(rows: usize, cols: usize, data: &[i64]) -> M {
        M::from_i64(rows, cols, data)
    }

    #[test]
    fn hnf_identity() {
        let id = m(2, 2, &[1, 0, 0, 1]);
        let (h, u) = id.hnf();
        assert_eq!(h, id);
        assert_eq!(u, id);
    }

    #[test]
    fn hnf_gcd_row() {
        let a = m(1, 2, &[4, 6]);
        let (h, u) = a.hnf();
        assert_eq!(h, m(1, 2, &[2, 0]));
        assert_eq!(a.mul(&u), h);
        assert_eq!(u.determinant().abs(), Int::from(1));
    }

    #[test]
    fn hnf_diagonal_fixed_point() {
        let a = m(2, 2, &[2, 0, 0, 3]);
        let (h, _) = a.hnf();
        assert_eq!(h, a);
    }

    #[test]
    fn hnf_reconstruction_identity() {
        let a = m(3, 4, &[2, -1, 7, 0, 4, 3, -5, 2, 0, 6, 1, -8]);
        let (h, u) = a.hnf();
        assert_eq!(a.mul(&u), h);
        assert_eq!(u.determinant().abs(), Int::from(1));
    }

    #[test]
    fn snf_diag_2_3() {
        let a = m(2, 2, &[2, 0, 0, 3]);
        let (s, u, v) = a.snf();
        assert_eq!(s, m(2, 2, &[1, 0, 0, 6]));
        assert_eq!(u.mul(&a).mul(&v), s);
        assert_eq!(u.determinant().abs(), Int::from(1));
        assert_eq!(v.determinant().abs(), Int::from(1));
    }

    #[test]
    fn snf_identity_and_zero() {
        let id = m(2, 2, &[1, 0, 0, 1]);
        let (s, _, _) = id.snf();
        assert_eq!(s, id);
        let z = M::zero(2, 3);
        let (s, _, _) = z.snf();
        assert!(s.is_zero());
    }

    #[test]
    fn kernel_of_sum_map() {
        let a = m(1, 2, &[1, 1]);
        let k = a.kernel_basis();
        assert_eq!(k, m(2, 1, &[1, -1]));
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        let a = m(2, 2, &[1, 0, 0, 1]);
        assert_eq!(a.kernel_basis().cols(), 0);
    }

    #[test]
    fn kernel_is_saturated() {
        let a = m(1, 2, &[2, 4]);
        let k = a.kernel_basis();
        assert_eq!(k, m(2, 1, &[2, -1]));
        // primitive kernel vector stays in the kernel lattice
        let sub = Sublattice::from_generators(&k);
        assert!(sub.contains(&[Int::from(2), Int::from(-1)]));
        assert!(!sub.contains(&[Int::from(1), Int::from(-1)]));
    }

    #[test]
    fn image_lattice_canonical() {
        let a = m(2, 2, &[2, 0, 0, 3]);
        let l = Sublattice::from_generators(&a);
        assert_eq!(l.basis(), &m(2, 2, &[2, 0, 0, 3]));
        let b = m(2, 3, &[2, 2, 4, 0, 3, 3]);
        assert_eq!(Sublattice::from_generators(&b), l);
    }

    #[test]
    fn lattice_intersection_diagonal() {
        let l1 = Sublattice::from_generators(&m(2, 2, &[2, 0, 0, 1]));
        let l2 = Sublattice::from_generators(&m(2, 2, &[1, 0, 0, 3]));
        let i = l1.intersect(&l2).unwrap();
        assert_eq!(i.basis(), &m(2, 2, &[2, 0, 0, 3]));
        assert_eq!(l1.intersect(&l1).unwrap(), l1);
        let full = Sublattice::full(2);
        assert_eq!(full.intersect(&l1).unwrap(), l1);
    }

    #[test]
    fn lattice_index_cases() {
        let sub = Sublattice::from_generators(&m(2, 2, &[2, 0, 0, 3]));
        let full = Sublattice::full(2);
        assert_eq!(sub.index_in(&full).unwrap(), LatticeIndex::Finite(6.into()));
        let rank1 = Sublattice::from_generators(&m(2, 1, &[2, 0]));
        assert_eq!(rank1.index_in(&full).unwrap(), LatticeIndex::Infinite);
        assert!(full.index_in(&sub).is_err());
    }

    #[test]
    fn membership() {
        let l = Sublattice::from_generators(&m(2, 2, &[2, 0, 0, 3]));
        assert!(l.contains(&[Int::from(2), Int::from(0)]));
        assert!(!l.contains(&[Int::from(1), Int::from(0)]));
    }

    #[test]
    fn surjectivity() {
        assert!(m(2, 2, &[1, 0, 0, 1]).is_surjective());
        assert!(!m(1, 1, &[2]).is_surjective());
        // three degrees with determinant 3 do not generate Z^3
        let a = m(3, 3, &[1, 0, -1, 0, 1, -1, 1, 1, 1]);
        assert_eq!(a.determinant().abs(), Int::from(3));
        assert!(!a.is_surjective());
    }

    #[test]
    fn primitive_examples() {
        let p = |v: &[i64]| {
            primitive(&v.iter().map(|&x| Int::from(x)).collect::<Vec<_>>())
                .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect::<Vec<_>>())
        };
        assert_eq!(p(&[2, 4, 6]).unwrap(), vec![1, 2, 3]);
        assert_eq!(p(&[1, 0]).unwrap(), vec![1, 0]);
        assert_eq!(p(&[-3, -6]).unwrap(), vec![-1, -2]);
        assert!(p(&[0, 0]).is_err());
    }

    #[test]
    fn saturation_of_scaled_lattice() {
        let l = Sublattice::from_generators(&m(2, 1, &[2, 4]));
        let sat = l.saturation();
        assert_eq!(sat.basis(), &m(2, 1, &[1, 2]));
    }
}
