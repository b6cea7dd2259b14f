//! Nilpotent Lie algebras over Q given by structure constants.
//!
//! A [`LieAlgebra`] can only be obtained through validation: the Jacobi
//! identity is checked on every basis triple and the lower central series
//! must reach zero. Everything downstream assumes nilpotency.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `(i, j, &[(k, c)])`: 1-based `[x_i, x_j] = Σ c·x_k` with integer coefficients.
pub type SparseBracket<'a> = (usize, usize, &'a [(usize, i64)]);
use crate::exactla::{
    axpy, is_zero_vector, rat, span_intersect, span_sum, unit_vector, zero_vector, Matrix,
    QuotientBasis, Rational, Subspace,
};

/// One nonzero bracket `[x_i, x_j] = value` with 0-based `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub value: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    /// `table[i * dim + j]` is `[x_i, x_j]`, stored for every ordered pair.
    table: Vec<Vec<Rational>>,
}

/// Dimension invariants of a nilpotent Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub n: usize,
    /// dim L²
    pub m: usize,
    pub class: usize,
    /// dim L^i for i = 1..=class+1, ending in 0.
    pub lcs_dims: Vec<usize>,
    pub z_dim: usize,
    /// dim Z(L) / (Z(L) ∩ L²)
    pub t: usize,
    /// dim L / (Z(L) + L²)
    pub d: usize,
    pub is_stem: bool,
    pub is_generalized_heisenberg: bool,
    pub heisenberg_rank: Option<usize>,
}

impl StructureReport {
    /// dim L³, zero for class ≤ 2.
    pub fn m1(&self) -> usize {
        self.lcs_dims.get(2).copied().unwrap_or(0)
    }

    pub fn is_abelian(&self) -> bool {
        self.m == 0
    }
}

/// Result of [`LieAlgebra::quotient`].
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    /// Maps L-coordinates to quotient coordinates.
    pub projection: Matrix,
}

fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("x{i}")).collect()
}

fn bar_label(label: &str) -> String {
    let mut chars = label.chars();
    match chars.next() {
        Some(first) => format!("{first}\u{304}{}", chars.as_str()),
        None => String::new(),
    }
}

pub fn validate(
    dim: usize,
    labels: Option<Vec<String>>,
    brackets: Vec<Bracket>,
) -> Result<LieAlgebra> {
    LieAlgebra::new(dim, labels, brackets)
}

impl LieAlgebra {
    /// Validates structure constants: index ranges, Jacobi on all triples,
    /// and nilpotency.
    pub fn new(dim: usize, labels: Option<Vec<String>>, brackets: Vec<Bracket>) -> Result<Self> {
        let labels = match labels {
            Some(l) if l.len() != dim => {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: l.len(),
                })
            }
            Some(l) => l,
            None => default_labels(dim),
        };
        let mut table = vec![zero_vector(dim); dim * dim];
        let mut seen = vec![false; dim * dim];
        for b in brackets {
            if b.i >= b.j || b.j >= dim {
                return Err(Error::InvalidInput(format!(
                    "bracket pair ({}, {}) must satisfy 1 <= i < j <= {dim}",
                    b.i + 1,
                    b.j + 1
                )));
            }
            if b.value.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: b.value.len(),
                });
            }
            if std::mem::replace(&mut seen[b.i * dim + b.j], true) {
                return Err(Error::InvalidInput(format!(
                    "bracket pair ({}, {}) given twice",
                    b.i + 1,
                    b.j + 1
                )));
            }
            table[b.j * dim + b.i] = b.value.iter().map(|c| -c.clone()).collect();
            table[b.i * dim + b.j] = b.value;
        }
        let algebra = Self { dim, labels, table };
        algebra.check_jacobi()?;
        algebra.check_nilpotent()?;
        Ok(algebra)
    }

    /// Builds from a 1-based sparse presentation, e.g. `(1, 2, &[(4, 1)])`
    /// for `[x1, x2] = x4`.
    pub fn from_sparse(dim: usize, brackets: &[SparseBracket]) -> Result<Self> {
        let brackets = brackets
            .iter()
            .map(|&(i, j, terms)| {
                if i == 0 || j == 0 {
                    return Err(Error::InvalidInput("indices are 1-based".into()));
                }
                let mut value = zero_vector(dim);
                for &(k, c) in terms {
                    if k == 0 || k > dim {
                        return Err(Error::InvalidInput(format!("basis index {k} out of range")));
                    }
                    value[k - 1] += rat(c);
                }
                Ok(Bracket {
                    i: i - 1,
                    j: j - 1,
                    value,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, None, brackets)
    }

    pub fn abelian(dim: usize) -> Self {
        Self {
            dim,
            labels: default_labels(dim),
            table: vec![zero_vector(dim); dim * dim],
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `[x_i, x_j]` for 0-based basis indices.
    pub fn structure_constants(&self, i: usize, j: usize) -> &[Rational] {
        &self.table[i * self.dim + j]
    }

    /// Nonzero brackets with `i < j`, lexicographic.
    pub fn brackets(&self) -> Vec<Bracket> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let value = self.structure_constants(i, j);
                if !is_zero_vector(value) {
                    out.push(Bracket {
                        i,
                        j,
                        value: value.to_vec(),
                    });
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| is_zero_vector(v))
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: len,
            })
        }
    }

    /// Bilinear extension of the bracket table.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(u.len())?;
        self.check_len(v.len())?;
        Ok(self.bracket_unchecked(u, v))
    }

    pub(crate) fn bracket_unchecked(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = zero_vector(n);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                let value = &self.table[i * n + j];
                if !is_zero_vector(value) {
                    axpy(&mut out, &(a * b), value);
                }
            }
        }
        out
    }

    fn basis_bracket(&self, i: usize, j: usize) -> &[Rational] {
        &self.table[i * self.dim + j]
    }

    fn check_jacobi(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let defect = self.jacobiator(i, j, k);
                    if !is_zero_vector(&defect) {
                        return Err(Error::JacobiViolation {
                            triple: (i, j, k),
                            defect,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `[[x_i,x_j],x_k] + [[x_k,x_i],x_j] + [[x_j,x_k],x_i]`
    fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let n = self.dim;
        let mut sum = self.bracket_unchecked(self.basis_bracket(i, j), &unit_vector(n, k));
        let second = self.bracket_unchecked(self.basis_bracket(k, i), &unit_vector(n, j));
        let third = self.bracket_unchecked(self.basis_bracket(j, k), &unit_vector(n, i));
        axpy(&mut sum, &rat(1), &second);
        axpy(&mut sum, &rat(1), &third);
        sum
    }

    fn check_nilpotent(&self) -> Result<()> {
        let full = Subspace::full(self.dim);
        let mut term = full.clone();
        while !term.is_zero() {
            let next = self.product_subspace_unchecked(&term, &full);
            if next.dim() == term.dim() {
                return Err(Error::NotNilpotent {
                    stable_term: term.basis_vectors().map(<[_]>::to_vec).collect(),
                });
            }
            term = next;
        }
        // A nilpotent algebra is never generated modulo L² by a single element.
        if self.dim > 1 {
            let m = self.derived().dim();
            if self.dim - m < 2 {
                return Err(Error::TheoremViolation(format!(
                    "nilpotent algebra of dimension {} with dim L/L² = {}",
                    self.dim,
                    self.dim - m
                )));
            }
        }
        Ok(())
    }

    /// `[U, V]`, spanned by brackets of basis vectors.
    pub fn product_subspace(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.check_len(u.ambient_dim())?;
        self.check_len(v.ambient_dim())?;
        Ok(self.product_subspace_unchecked(u, v))
    }

    fn product_subspace_unchecked(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut products = Vec::new();
        for a in u.basis_vectors() {
            for b in v.basis_vectors() {
                let p = self.bracket_unchecked(a, b);
                if !is_zero_vector(&p) {
                    products.push(p);
                }
            }
        }
        Subspace::span(self.dim, &products).expect("brackets have length dim")
    }

    /// `[L¹ = L, L², …, L^{c+1} = 0]`.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim);
        let mut series = vec![full.clone()];
        while !series.last().expect("nonempty").is_zero() {
            let next = self.product_subspace_unchecked(series.last().expect("nonempty"), &full);
            series.push(next);
        }
        series
    }

    pub fn derived(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.product_subspace_unchecked(&full, &full)
    }

    pub fn nilpotency_class(&self) -> usize {
        self.lower_central_series().len() - 1
    }

    /// Kernel of the stacked adjoint maps `v ↦ [v, x_j]`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut m = Matrix::zeros(n * n, n);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.basis_bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        m.set(j * n + k, i, c.clone());
                    }
                }
            }
        }
        crate::exactla::kernel_basis(&m)
    }

    /// Checks `[L, K] ⊆ K`.
    pub fn ensure_ideal(&self, k: &Subspace) -> Result<()> {
        self.check_len(k.ambient_dim())?;
        for v in k.basis_vectors() {
            for j in 0..self.dim {
                let w = self.bracket_unchecked(v, &unit_vector(self.dim, j));
                if !k.contains(&w)? {
                    return Err(Error::NotAnIdeal { witness: w });
                }
            }
        }
        Ok(())
    }

    /// `L/K` on the basis given by the non-pivot coordinates of K's RREF.
    pub fn quotient(&self, k: &Subspace) -> Result<Quotient> {
        self.ensure_ideal(k)?;
        let q = QuotientBasis::of_ambient(k);
        let reps: Vec<Vec<Rational>> = q.representatives().map(<[_]>::to_vec).collect();
        let free = k.non_pivots();
        let qdim = reps.len();
        let mut brackets = Vec::new();
        for a in 0..qdim {
            for b in a + 1..qdim {
                let value = q.coords(&self.bracket_unchecked(&reps[a], &reps[b]));
                if !is_zero_vector(&value) {
                    brackets.push(Bracket { i: a, j: b, value });
                }
            }
        }
        let labels = free.iter().map(|&j| bar_label(&self.labels[j])).collect();
        let algebra = LieAlgebra::new(qdim, Some(labels), brackets)?;
        let columns: Vec<Vec<Rational>> = (0..self.dim)
            .map(|j| q.coords(&unit_vector(self.dim, j)))
            .collect();
        let projection = Matrix::from_rows(qdim, columns)?.transpose();
        Ok(Quotient {
            algebra,
            projection,
        })
    }

    /// Restriction of the bracket to a subalgebra U, in U's RREF basis.
    pub fn subalgebra_on(&self, u: &Subspace) -> Result<LieAlgebra> {
        self.check_len(u.ambient_dim())?;
        let basis: Vec<&[Rational]> = u.basis_vectors().collect();
        let mut brackets = Vec::new();
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                let w = self.bracket_unchecked(basis[a], basis[b]);
                let value = u
                    .coordinates(&w)?
                    .ok_or(Error::NotClosed { pair: (a, b) })?;
                if !is_zero_vector(&value) {
                    brackets.push(Bracket { i: a, j: b, value });
                }
            }
        }
        LieAlgebra::new(basis.len(), None, brackets)
    }

    /// Block sum, `self`'s basis first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (p, q) = (self.dim, other.dim);
        let n = p + q;
        let mut table = vec![zero_vector(n); n * n];
        for i in 0..p {
            for j in 0..p {
                let dst = &mut table[i * n + j];
                dst[..p].clone_from_slice(self.basis_bracket(i, j));
            }
        }
        for i in 0..q {
            for j in 0..q {
                let dst = &mut table[(p + i) * n + p + j];
                dst[p..].clone_from_slice(other.basis_bracket(i, j));
            }
        }
        let mut labels = self.labels.clone();
        let clash = other.labels.iter().any(|l| labels.contains(l));
        if clash {
            labels = default_labels(n);
        } else {
            labels.extend(other.labels.iter().cloned());
        }
        LieAlgebra {
            dim: n,
            labels,
            table,
        }
    }

    /// Rewrites the algebra in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<LieAlgebra> {
        if p.nrows() != self.dim || p.ncols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.nrows(),
            });
        }
        let inverse = p.inverse()?;
        let columns: Vec<Vec<Rational>> = (0..self.dim).map(|c| p.column(c)).collect();
        let mut brackets = Vec::new();
        for a in 0..self.dim {
            for b in a + 1..self.dim {
                let w = self.bracket_unchecked(&columns[a], &columns[b]);
                let value = inverse.mul_vec(&w)?;
                if !is_zero_vector(&value) {
                    brackets.push(Bracket { i: a, j: b, value });
                }
            }
        }
        LieAlgebra::new(self.dim, None, brackets)
    }

    pub fn structure_report(&self) -> StructureReport {
        let series = self.lower_central_series();
        let center = self.center();
        let lcs_dims: Vec<usize> = series.iter().map(Subspace::dim).collect();
        let derived = series.get(1).cloned().unwrap_or_else(|| Subspace::zero(self.dim));
        let m = derived.dim();
        let z_dim = center.dim();
        let cap = span_intersect(&center, &derived).expect("same ambient");
        let sum = span_sum(&center, &derived).expect("same ambient");
        let t = z_dim - cap.dim();
        let is_generalized_heisenberg = m > 0 && center == derived;
        StructureReport {
            n: self.dim,
            m,
            class: series.len() - 1,
            lcs_dims,
            z_dim,
            t,
            d: self.dim - sum.dim(),
            is_stem: t == 0,
            is_generalized_heisenberg,
            heisenberg_rank: is_generalized_heisenberg.then_some(m),
        }
    }
}
