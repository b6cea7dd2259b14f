//! Exact linear algebra over the rationals.
//!
//! Dense matrices, reduced row-echelon forms computed by fraction-free
//! elimination, kernels, and a lattice of subspaces of `Q^d` (sum,
//! intersection, membership, quotient coordinates). Every other module
//! reduces its work to the operations here.
//!
//! A [`Subspace`] always stores the reduced row-echelon form of its basis,
//! so two subspaces are equal exactly when their stored bases are equal.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` as a rational. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero_vector(len: usize) -> Vec<Rational> {
    vec![Rational::zero(); len]
}

pub fn unit_vector(len: usize, index: usize) -> Vec<Rational> {
    let mut v = zero_vector(len);
    v[index] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += scale * v`.
pub fn axpy(acc: &mut [Rational], scale: &Rational, v: &[Rational]) {
    if scale.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += scale * b;
        }
    }
}

/// Kronecker product of two coordinate vectors, `u ⊗ v` with `v` varying fastest.
pub fn kron(u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(u.len() * v.len());
    for a in u {
        for b in v {
            if a.is_zero() || b.is_zero() {
                out.push(Rational::zero());
            } else {
                out.push(a * b);
            }
        }
    }
    out
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows that must all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: nrows,
            cols,
            entries,
        })
    }

    /// Integer matrix literal; panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().copied().map(rat).collect())
            .collect();
        Self::from_rows(cols, rows).expect("ragged integer matrix literal")
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.entries)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.entries[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self
            .row_iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    /// Inverse of a square matrix, via the RREF of `[M | I]`.
    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let augmented: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend(unit_vector(n, r));
                row
            })
            .collect();
        let red = rref(&Matrix::from_rows(2 * n, augmented)?);
        if n > 0 && (red.rank < n || red.pivots[n - 1] != n - 1) {
            return Err(Error::SingularMatrix);
        }
        let rows = (0..n)
            .map(|r| red.reduced.row(r)[n..].to_vec())
            .collect();
        Matrix::from_rows(n, rows)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_iter() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Output of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// The reduced row-echelon form, same shape as the input (zero rows last).
    pub reduced: Matrix,
    pub rank: usize,
    /// Pivot column of each nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
}

/// Clears denominators; `None` for a zero row.
fn integer_row(row: &[Rational]) -> Option<Vec<BigInt>> {
    if is_zero_vector(row) {
        return None;
    }
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    Some(
        row.iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect(),
    )
}

/// Divides a row by the gcd of its entries.
fn remove_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in row.iter_mut() {
            *c /= &g;
        }
    }
}

/// Reduced row-echelon form.
///
/// Rows are scaled to integers, then a fraction-free (Bareiss) forward pass
/// produces an integer echelon form in which every division is exact. A
/// fraction-free back substitution with content removal follows, and only
/// the final normalization by the pivots goes back to rationals. The pivot
/// in each column is the first nonzero entry at or below the current row.
pub fn rref(m: &Matrix) -> Rref {
    let cols = m.cols;
    let mut work: Vec<Vec<BigInt>> = (0..m.rows).filter_map(|r| integer_row(m.row(r))).collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;

    for c in 0..cols {
        if r == work.len() {
            break;
        }
        let Some(p) = (r..work.len()).find(|&i| !work[i][c].is_zero()) else {
            continue;
        };
        work.swap(r, p);
        let (head, tail) = work.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = &pivot_row[c];
        for row in tail.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let mut v = pivot * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v -= &factor * &pivot_row[j];
                }
                if v.is_zero() {
                    row[j] = v;
                } else {
                    debug_assert!((&v % &prev).is_zero(), "Bareiss division must be exact");
                    row[j] = v / &prev;
                }
            }
        }
        prev = pivot.clone();
        pivots.push(c);
        r += 1;
        // Zero rows stay zero; drop them so later pivots touch less.
        let rest = work.split_off(r);
        work.extend(rest.into_iter().filter(|row| row.iter().any(|x| !x.is_zero())));
    }
    work.truncate(r);

    for row in work.iter_mut() {
        remove_content(row);
    }
    for k in (0..r).rev() {
        let pc = pivots[k];
        let (above, below) = work.split_at_mut(k);
        let pivot_row = &below[0];
        for row in above.iter_mut() {
            if row[pc].is_zero() {
                continue;
            }
            let factor = row[pc].clone();
            for j in 0..cols {
                let mut v = &pivot_row[pc] * &row[j];
                if !pivot_row[j].is_zero() {
                    v -= &factor * &pivot_row[j];
                }
                row[j] = v;
            }
            remove_content(row);
        }
    }

    let mut reduced = Matrix::zeros(m.rows, cols);
    for (k, row) in work.iter().enumerate() {
        let pivot = &row[pivots[k]];
        for (j, x) in row.iter().enumerate() {
            if !x.is_zero() {
                reduced.set(k, j, Rational::new(x.clone(), pivot.clone()));
            }
        }
    }
    Rref {
        reduced,
        rank: r,
        pivots,
    }
}

/// Null space `{v : m·v = 0}`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let red = rref(m);
    let cols = m.cols;
    let mut is_pivot = vec![false; cols];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vec<Rational>> = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = unit_vector(cols, f);
            for (k, &p) in red.pivots.iter().enumerate() {
                v[p] = -red.reduced.get(k, f).clone();
            }
            v
        })
        .collect();
    let kernel = Subspace::from_rows_unchecked(cols, vectors);
    assert_eq!(
        kernel.dim() + red.rank,
        cols,
        "rank-nullity violated in kernel computation"
    );
    kernel
}

/// A subspace of `Q^ambient`, stored as the RREF of a basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary vectors, each of length `ambient`.
    pub fn span<V: AsRef<[Rational]>>(ambient: usize, vectors: &[V]) -> Result<Self> {
        let rows = vectors
            .iter()
            .map(|v| {
                let v = v.as_ref();
                if v.len() == ambient {
                    Ok(v.to_vec())
                } else {
                    Err(Error::DimensionMismatch {
                        expected: ambient,
                        found: v.len(),
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_rows_unchecked(ambient, rows))
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Matrix) -> Self {
        let red = rref(m);
        Self::from_rref(m.ncols(), red)
    }

    pub(crate) fn from_rows_unchecked(ambient: usize, rows: Vec<Vec<Rational>>) -> Self {
        let m = Matrix::from_rows(ambient, rows).expect("vector lengths checked by caller");
        Self::row_space(&m)
    }

    fn from_rref(ambient: usize, red: Rref) -> Self {
        let rows = (0..red.rank).map(|k| red.reduced.row(k).to_vec()).collect();
        Self {
            ambient,
            basis: Matrix::from_rows(ambient, rows).expect("rref rows have ambient length"),
            pivots: red.pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Basis in reduced row-echelon form, one row per basis vector.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rational]> {
        self.basis.row_iter()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of the complement to the pivots, i.e. the free positions.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&j| !is_pivot[j]).collect()
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len == self.ambient {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: len,
            })
        }
    }

    /// Residue of `v` after clearing every pivot coordinate with the basis.
    /// It is zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(v.len())?;
        let mut out = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let c = -out[p].clone();
            axpy(&mut out, &c, self.basis.row(k));
        }
        Ok(out)
    }

    /// Coefficients of `v` in the stored basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if !is_zero_vector(&self.reduce(v)?) {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(is_zero_vector(&self.reduce(v)?))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_len(other.ambient)?;
        for v in other.basis_vectors() {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        span_sum(self, other)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        span_intersect(self, other)
    }
}

/// Smallest subspace containing both.
pub fn span_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.check_len(b.ambient)?;
    let rows: Vec<Vec<Rational>> = a
        .basis_vectors()
        .chain(b.basis_vectors())
        .map(<[Rational]>::to_vec)
        .collect();
    Ok(Subspace::from_rows_unchecked(a.ambient, rows))
}

/// Intersection by the Zassenhaus algorithm: the RREF of the block rows
/// `[a | a]` and `[b | 0]` has rows `[0 | w]` whose tails span `A ∩ B`.
pub fn span_intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.check_len(b.ambient)?;
    let d = a.ambient;
    let mut rows = Vec::with_capacity(a.dim() + b.dim());
    for v in a.basis_vectors() {
        let mut row = v.to_vec();
        row.extend_from_slice(v);
        rows.push(row);
    }
    for v in b.basis_vectors() {
        let mut row = v.to_vec();
        row.extend(zero_vector(d));
        rows.push(row);
    }
    let red = rref(&Matrix::from_rows(2 * d, rows)?);
    let tails: Vec<Vec<Rational>> = (0..red.rank)
        .filter(|&k| red.pivots[k] >= d)
        .map(|k| red.reduced.row(k)[d..].to_vec())
        .collect();
    Ok(Subspace::from_rows_unchecked(d, tails))
}

pub fn in_span(v: &[Rational], s: &Subspace) -> Result<bool> {
    s.contains(v)
}

/// Coordinates on a quotient `V/W` with `W ⊆ V`.
///
/// The representatives are the RREF of the residues of `V` modulo `W`; when
/// `V` is the whole space they are exactly the unit vectors at the non-pivot
/// coordinates of `W`.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    denominator: Subspace,
    complement: Subspace,
}

impl QuotientBasis {
    pub fn new(numerator: &Subspace, denominator: &Subspace) -> Result<Self> {
        if !numerator.contains_subspace(denominator)? {
            return Err(Error::PreconditionFailed(
                "quotient denominator is not inside the numerator".into(),
            ));
        }
        let residues = numerator
            .basis_vectors()
            .map(|v| denominator.reduce(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            denominator: denominator.clone(),
            complement: Subspace::from_rows_unchecked(numerator.ambient, residues),
        })
    }

    /// Quotient of the whole ambient space.
    pub fn of_ambient(denominator: &Subspace) -> Self {
        Self::new(&Subspace::full(denominator.ambient), denominator)
            .expect("every subspace lies in the ambient space")
    }

    pub fn dim(&self) -> usize {
        self.complement.dim()
    }

    /// Representatives in the ambient space of the quotient basis.
    pub fn representatives(&self) -> impl Iterator<Item = &[Rational]> {
        self.complement.basis_vectors()
    }

    pub fn denominator(&self) -> &Subspace {
        &self.denominator
    }

    /// Quotient coordinates of `v`, which must lie in the numerator.
    pub fn coords(&self, v: &[Rational]) -> Vec<Rational> {
        let residue = self
            .denominator
            .reduce(v)
            .expect("vector length matches the ambient space");
        debug_assert!(self.complement.contains(&residue).unwrap_or(false));
        self.complement
            .pivots()
            .iter()
            .map(|&p| residue[p].clone())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().copied().map(rat).collect()
    }

    #[test]
    fn rref_identity() {
        let r = rref(&Matrix::identity(2));
        assert_eq!(r.reduced, Matrix::identity(2));
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_proportional_rows() {
        let r = rref(&Matrix::from_ints(&[&[1, 2], &[2, 4]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.reduced, Matrix::from_ints(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_with_fractions_and_skipped_column() {
        let m = Matrix::from_rows(
            4,
            vec![
                vec![rat(0), ratio(1, 2), rat(1), rat(3)],
                vec![rat(0), rat(1), rat(2), ratio(-1, 3)],
                vec![rat(0), rat(0), rat(0), rat(5)],
            ],
        )
        .unwrap();
        let r = rref(&m);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![1, 3]);
        assert_eq!(
            r.reduced,
            Matrix::from_ints(&[&[0, 1, 2, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]])
        );
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::identity(3)).is_zero());
        assert_eq!(kernel_basis(&Matrix::zeros(2, 5)), Subspace::full(5));
        let k = kernel_basis(&Matrix::from_ints(&[&[1, 1, 0]]));
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&v(&[1, -1, 0])).unwrap());
        assert!(k.contains(&v(&[0, 0, 1])).unwrap());
    }

    #[test]
    fn sum_examples() {
        let e1 = Subspace::span(3, &[v(&[1, 0, 0])]).unwrap();
        let e2 = Subspace::span(3, &[v(&[0, 1, 0])]).unwrap();
        assert_eq!(span_sum(&e1, &Subspace::zero(3)).unwrap(), e1);
        assert_eq!(
            span_sum(&e1, &e2).unwrap(),
            Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap()
        );
        let a = Subspace::span(2, &[v(&[1, 1])]).unwrap();
        let b = Subspace::span(2, &[v(&[1, -1])]).unwrap();
        assert_eq!(span_sum(&a, &b).unwrap().dim(), 2);
    }

    #[test]
    fn intersect_examples() {
        let x = Subspace::span(3, &[v(&[1, 2, 3]), v(&[0, 1, 1])]).unwrap();
        assert_eq!(span_intersect(&x, &x).unwrap(), x);
        let e1 = Subspace::span(3, &[v(&[1, 0, 0])]).unwrap();
        let e2 = Subspace::span(3, &[v(&[0, 1, 0])]).unwrap();
        assert!(span_intersect(&e1, &e2).unwrap().is_zero());
        let e12 = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let e23 = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(span_intersect(&e12, &e23).unwrap(), e2);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert!(matches!(
            span_sum(&a, &b),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(span_intersect(&a, &b).is_err());
        assert!(in_span(&v(&[1, 0, 0]), &a).is_err());
    }

    #[test]
    fn membership_examples() {
        let s = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert!(in_span(&v(&[0, 0, 0]), &s).unwrap());
        let e2 = Subspace::span(3, &[v(&[0, 1, 0])]).unwrap();
        assert!(!in_span(&v(&[1, 0, 0]), &e2).unwrap());
        let s2 = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert!(in_span(&v(&[1, 1, 0]), &s2).unwrap());
    }

    #[test]
    fn inverse_round_trip() {
        let p = Matrix::from_ints(&[&[2, 1, 0], &[1, 1, 0], &[0, 3, 1]]);
        let inv = p.inverse().unwrap();
        assert_eq!(p.mul(&inv).unwrap(), Matrix::identity(3));
        assert_eq!(
            Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse(),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn quotient_coordinates_use_non_pivot_complement() {
        // W = span(e1 + e3) in Q^3; complement is e2, e3.
        let w = Subspace::span(3, &[v(&[1, 0, 1])]).unwrap();
        let q = QuotientBasis::of_ambient(&w);
        assert_eq!(q.dim(), 2);
        let reps: Vec<Vec<Rational>> = q.representatives().map(<[_]>::to_vec).collect();
        assert_eq!(reps, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(q.coords(&v(&[1, 0, 0])), v(&[0, -1]));
        assert_eq!(q.coords(&v(&[1, 0, 1])), v(&[0, 0]));
    }

    #[test]
    fn quotient_of_nested_subspaces() {
        let big = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        let small = Subspace::span(3, &[v(&[0, 1, 1])]).unwrap();
        let q = QuotientBasis::new(&big, &small).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.coords(&v(&[0, 1, 1])), v(&[0]));
        assert_ne!(q.coords(&v(&[0, 0, 1])), v(&[0]));
        assert!(QuotientBasis::new(&small, &big).is_err());
    }
}
