//! The multiplier engine.
//!
//! For an algebra with basis `x_1..x_n` the extension adjoins one central
//! symbol `s_{ij}` per pair `i < j` and declares `[x_i, x_j] = value + s_{ij}`
//! (with `s_{ji} = -s_{ij}`). The Jacobi identity on every basis triple
//! forces linear relations among the symbols. Of the surviving symbols,
//! `dim L²` of them are absorbed by redefining the basis of `L²`; what is
//! left spans the multiplier:
//!
//! ```text
//! dim M(L) = C(n,2) − rank(Jacobi relations) − dim L²
//! ```

use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{
    axpy, is_zero_vector, rat, span_intersect, span_sum, unit_vector, zero_vector, Matrix,
    Rational, Subspace,
};
use crate::liealg::{LieAlgebra, StructureReport};

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Lexicographic position of the pair `(i, j)`, `i < j`, 0-based.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

pub fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// Adds `coef * s_{p,q}` to an s-space vector, honouring `s_{qp} = −s_{pq}`.
fn add_symbol(row: &mut [Rational], n: usize, p: usize, q: usize, coef: &Rational) {
    match p.cmp(&q) {
        std::cmp::Ordering::Less => row[pair_index(n, p, q)] += coef,
        std::cmp::Ordering::Greater => row[pair_index(n, q, p)] -= coef,
        std::cmp::Ordering::Equal => {}
    }
}

/// s-part of `[ũ, ṽ]` in the extension: `Σ u_p v_q s_{pq}`.
fn symbol_part(n: usize, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    let mut out = zero_vector(pair_count(n));
    for (p, a) in u.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (q, b) in v.iter().enumerate() {
            if !b.is_zero() {
                add_symbol(&mut out, n, p, q, &(a * b));
            }
        }
    }
    out
}

/// One row per basis triple `i < j < k` (lexicographic), one column per
/// symbol: the s-linear part of
/// `[[x_i,x_j],x_k] + [[x_k,x_i],x_j] + [[x_j,x_k],x_i]` in the extension.
pub fn jacobi_relation_matrix(l: &LieAlgebra) -> Matrix {
    let n = l.dim();
    let rows: Vec<Vec<Rational>> = triples(n)
        .into_iter()
        .map(|(i, j, k)| {
            let mut row = zero_vector(pair_count(n));
            for (a, b, c) in [(i, j, k), (k, i, j), (j, k, i)] {
                for (r, coef) in l.structure_constants(a, b).iter().enumerate() {
                    if !coef.is_zero() {
                        add_symbol(&mut row, n, r, c, coef);
                    }
                }
            }
            row
        })
        .collect();
    Matrix::from_rows(pair_count(n), rows).expect("rows have one entry per pair")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplierResult {
    #[serde(rename = "dim_M")]
    pub dim_m: usize,
    pub dim_wedge: usize,
    pub report: StructureReport,
}

pub fn schur_multiplier_dim(l: &LieAlgebra) -> MultiplierResult {
    let report = l.structure_report();
    let rank = jacobi_relation_matrix(l).rank();
    let dim_m = pair_count(l.dim()) - rank - report.m;
    MultiplierResult {
        dim_m,
        dim_wedge: dim_m + report.m,
        report,
    }
}

/// Shorthand for `schur_multiplier_dim(l).dim_m`.
pub fn multiplier_dim(l: &LieAlgebra) -> usize {
    let m = l.derived().dim();
    pair_count(l.dim()) - jacobi_relation_matrix(l).rank() - m
}

pub fn exterior_square_dim(l: &LieAlgebra) -> usize {
    schur_multiplier_dim(l).dim_wedge
}

/// Explicit cover presentation.
#[derive(Clone, Debug)]
pub struct CoverPresentation {
    pub base: LieAlgebra,
    /// `pairs[k]` names the symbol `s_{k+1}`.
    pub pairs: Vec<(usize, usize)>,
    pub relation_matrix: Matrix,
    pub relation_rank: usize,
    /// Pairs whose symbols are absorbed into a new basis of L².
    pub absorbed_pairs: Vec<(usize, usize)>,
    /// Pairs whose symbols form the multiplier basis.
    pub survivors: Vec<(usize, usize)>,
    pub multiplier_dim: usize,
    /// Dimension of the symbol space modulo relations, `C(n,2) − rank`.
    pub s_space_dim: usize,
}

impl CoverPresentation {
    pub fn relation_space(&self) -> Subspace {
        Subspace::row_space(&self.relation_matrix)
    }

    /// Text rendering in the `[x_i, x_j] = value + s_k` notation.
    pub fn render(&self) -> String {
        let n = self.base.dim();
        let labels = self.base.labels();
        let sym = |(i, j): (usize, usize)| format!("s{}", pair_index(n, i, j) + 1);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "symbols: s_k = s({{i,j}}) for i < j in lexicographic order; [x_j, x_i] = -s_k"
        );
        for &(i, j) in &self.pairs {
            let value = self.base.structure_constants(i, j);
            let lhs = format!("[{}, {}]", labels[i], labels[j]);
            if is_zero_vector(value) {
                let _ = writeln!(out, "{lhs} = {}", sym((i, j)));
            } else {
                let _ = writeln!(
                    out,
                    "{lhs} = {} + {}",
                    format_combination(value, labels),
                    sym((i, j))
                );
            }
        }
        let names: Vec<String> = self.pairs.iter().map(|&p| sym(p)).collect();
        let relations = self.relation_space();
        let _ = writeln!(out, "relations (rank {}):", self.relation_rank);
        for row in relations.basis_vectors() {
            let _ = writeln!(out, "  {} = 0", format_combination(row, &names));
        }
        let absorbed: Vec<String> = self.absorbed_pairs.iter().map(|&p| sym(p)).collect();
        let _ = writeln!(out, "absorbed into L²: {{{}}}", absorbed.join(", "));
        let survivors: Vec<String> = self.survivors.iter().map(|&p| sym(p)).collect();
        let _ = writeln!(
            out,
            "M(L) = <{}>, dim {}",
            survivors.join(", "),
            self.multiplier_dim
        );
        out
    }
}

/// `2 x4 - 1/2 x5` style rendering.
pub fn format_combination(coeffs: &[Rational], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in coeffs.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if !magnitude.is_one() {
            let _ = write!(out, "{magnitude} ");
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn cover_presentation(l: &LieAlgebra) -> Result<CoverPresentation> {
    let n = l.dim();
    let npairs = pair_count(n);
    let all_pairs = pairs(n);
    let relation_matrix = jacobi_relation_matrix(l);
    let relations = Subspace::row_space(&relation_matrix);
    let relation_rank = relations.dim();

    let mut absorbed_values = Subspace::zero(n);
    let mut absorbed_pairs = Vec::new();
    for &(i, j) in &all_pairs {
        let value = l.structure_constants(i, j);
        if !absorbed_values.contains(value)? {
            absorbed_values = span_sum(&absorbed_values, &Subspace::span(n, &[value])?)?;
            absorbed_pairs.push((i, j));
        }
    }
    let m = absorbed_pairs.len();
    if m != l.derived().dim() {
        return Err(Error::InternalInconsistency(format!(
            "absorbed {m} pairs but dim L² = {}",
            l.derived().dim()
        )));
    }

    let absorbed_units: Vec<Vec<Rational>> = absorbed_pairs
        .iter()
        .map(|&(i, j)| unit_vector(npairs, pair_index(n, i, j)))
        .collect();
    let killed = span_sum(&relations, &Subspace::span(npairs, &absorbed_units)?)?;
    if killed.dim() != relation_rank + m {
        return Err(Error::InternalInconsistency(
            "absorbed symbols are dependent modulo the Jacobi relations".into(),
        ));
    }
    let survivors: Vec<(usize, usize)> = killed
        .non_pivots()
        .into_iter()
        .map(|k| all_pairs[k])
        .collect();
    let multiplier_dim = survivors.len();
    debug_assert_eq!(multiplier_dim, npairs - relation_rank - m);
    Ok(CoverPresentation {
        base: l.clone(),
        pairs: all_pairs,
        relation_matrix,
        relation_rank,
        absorbed_pairs,
        survivors,
        multiplier_dim,
        s_space_dim: npairs - relation_rank,
    })
}

/// The extension `E = span(x) ⊕ span(s) / relations`, coordinates `n + C(n,2)`.
struct Extension {
    n: usize,
    npairs: usize,
    /// Relations embedded in the extension coordinates.
    relations: Subspace,
    /// Symbols only, `0 ⊕ Q^{C(n,2)}`.
    symbols: Subspace,
    /// `E²` modulo nothing: all `value_pq + s_pq` plus the relations.
    products: Subspace,
}

impl Extension {
    fn new(l: &LieAlgebra) -> Result<Self> {
        let n = l.dim();
        let npairs = pair_count(n);
        let width = n + npairs;
        let embed = |s: &[Rational]| {
            let mut v = zero_vector(n);
            v.extend_from_slice(s);
            v
        };
        let rel_rows: Vec<Vec<Rational>> = Subspace::row_space(&jacobi_relation_matrix(l))
            .basis_vectors()
            .map(embed)
            .collect();
        let relations = Subspace::span(width, &rel_rows)?;
        let symbol_rows: Vec<Vec<Rational>> =
            (0..npairs).map(|k| unit_vector(width, n + k)).collect();
        let symbols = Subspace::span(width, &symbol_rows)?;
        let product_rows: Vec<Vec<Rational>> = pairs(n)
            .into_iter()
            .enumerate()
            .map(|(k, (i, j))| {
                let mut v = l.structure_constants(i, j).to_vec();
                v.extend(unit_vector(npairs, k));
                v
            })
            .collect();
        let products = span_sum(&Subspace::span(width, &product_rows)?, &relations)?;
        Ok(Self {
            n,
            npairs,
            relations,
            symbols,
            products,
        })
    }

    fn embed_symbols(&self, s: &[Rational]) -> Vec<Rational> {
        let mut v = zero_vector(self.n);
        v.extend_from_slice(s);
        v
    }

    /// Preimage of `S ∩ E²` in the extension coordinates (contains the relations).
    fn multiplier_preimage(&self) -> Result<Subspace> {
        span_intersect(&self.products, &self.symbols)
    }

    /// Dimension of the image of a set of symbol vectors modulo relations.
    fn dim_modulo_relations(&self, vectors: &[Vec<Rational>]) -> Result<usize> {
        let embedded: Vec<Vec<Rational>> =
            vectors.iter().map(|s| self.embed_symbols(s)).collect();
        let total = span_sum(&Subspace::span(self.n + self.npairs, &embedded)?, &self.relations)?;
        Ok(total.dim() - self.relations.dim())
    }
}

/// Second, independent route to dim M(L): `dim(S ∩ E²)` inside the extension.
pub fn multiplier_dim_via_cover(l: &LieAlgebra) -> Result<usize> {
    let ext = Extension::new(l)?;
    Ok(ext.multiplier_preimage()?.dim() - ext.relations.dim())
}

/// dim(I ∧ L) for a central ideal `I ⊆ L²`, i.e. `dim I · dim L/L²`.
pub fn central_wedge_dim(l: &LieAlgebra, ideal: &Subspace) -> Result<usize> {
    if !l.center().contains_subspace(ideal)? {
        return Err(Error::NotCentral);
    }
    let derived = l.derived();
    if !derived.contains_subspace(ideal)? {
        return Err(Error::NotInsideDerived);
    }
    Ok(ideal.dim() * (l.dim() - derived.dim()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectSumCheck {
    pub lhs: usize,
    pub rhs: usize,
    pub ok: bool,
}

/// `dim M(A ⊕ B)` against `dim M(A) + dim M(B) + dim A^ab · dim B^ab`.
pub fn direct_sum_multiplier_check(a: &LieAlgebra, b: &LieAlgebra) -> DirectSumCheck {
    let lhs = multiplier_dim(&a.direct_sum(b));
    let ab = |x: &LieAlgebra| x.dim() - x.derived().dim();
    let rhs = multiplier_dim(a) + multiplier_dim(b) + ab(a) * ab(b);
    DirectSumCheck {
        lhs,
        rhs,
        ok: lhs == rhs,
    }
}

/// Both sides of
/// `dim M(L) + dim(L² ∩ K) ≤ dim M(L/K) + dim M(K) + dim (L/K)^ab · dim K^ab`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientInequality {
    pub dim_m_algebra: usize,
    pub dim_derived_cap_ideal: usize,
    pub dim_m_quotient: usize,
    pub dim_m_ideal: usize,
    pub dim_abelianization_tensor: usize,
    pub lhs: usize,
    pub rhs: usize,
    pub ok: bool,
}

pub fn quotient_inequality_check(l: &LieAlgebra, ideal: &Subspace) -> Result<QuotientInequality> {
    let quotient = l.quotient(ideal)?.algebra;
    let ideal_algebra = l.subalgebra_on(ideal)?;
    let dim_m_algebra = multiplier_dim(l);
    let dim_derived_cap_ideal = span_intersect(&l.derived(), ideal)?.dim();
    let dim_m_quotient = multiplier_dim(&quotient);
    let dim_m_ideal = multiplier_dim(&ideal_algebra);
    let ab = |x: &LieAlgebra| x.dim() - x.derived().dim();
    let dim_abelianization_tensor = ab(&quotient) * ab(&ideal_algebra);
    let lhs = dim_m_algebra + dim_derived_cap_ideal;
    let rhs = dim_m_quotient + dim_m_ideal + dim_abelianization_tensor;
    Ok(QuotientInequality {
        dim_m_algebra,
        dim_derived_cap_ideal,
        dim_m_quotient,
        dim_m_ideal,
        dim_abelianization_tensor,
        lhs,
        rhs,
        ok: lhs <= rhs,
    })
}

/// The map `g: L² ⊗ L^ab → M(L)`, `x ⊗ z̄ ↦ [x̃, z̃]`, for class-two algebras.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GMapAnalysis {
    pub dim_m: usize,
    /// dim(S ∩ E²) computed inside the extension.
    pub dim_m_cover: usize,
    pub dim_im_g: usize,
    pub dim_ker_g: usize,
    /// `dim ker g − dim(L²⊗L^ab) + dim M(L) − dim M(L^ab) + dim L² = 0`.
    pub exactness_ok: bool,
    /// g kills `[x,y]⊗z̄ + [z,x]⊗ȳ + [y,z]⊗x̄` on every basis triple.
    pub k_in_kernel_ok: bool,
    /// Im g lies in `S ∩ E²`.
    pub image_in_multiplier_ok: bool,
}

fn ensure_class_two(l: &LieAlgebra) -> Result<()> {
    let class = l.nilpotency_class();
    if class == 2 {
        Ok(())
    } else {
        Err(Error::NotClassTwo { class })
    }
}

/// g evaluated on spanning pairs `(basis of L²) × representatives`.
fn g_vectors(l: &LieAlgebra, representatives: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = l.dim();
    let derived = l.derived();
    let mut out = Vec::new();
    for x in derived.basis_vectors() {
        for z in representatives {
            out.push(symbol_part(n, x, z));
        }
    }
    out
}

/// dim Im g computed with caller-chosen representatives of a basis of L/L².
pub fn g_image_dim_with_representatives(
    l: &LieAlgebra,
    representatives: &[Vec<Rational>],
) -> Result<usize> {
    ensure_class_two(l)?;
    let n = l.dim();
    let ab = n - l.derived().dim();
    if representatives.len() != ab {
        return Err(Error::DimensionMismatch {
            expected: ab,
            found: representatives.len(),
        });
    }
    for r in representatives {
        if r.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: r.len(),
            });
        }
    }
    let mut span = l.derived();
    for r in representatives {
        span = span_sum(&span, &Subspace::span(n, &[r])?)?;
    }
    if span.dim() != n {
        return Err(Error::PreconditionFailed(
            "representatives do not span L modulo L²".into(),
        ));
    }
    let ext = Extension::new(l)?;
    ext.dim_modulo_relations(&g_vectors(l, representatives))
}

/// Canonical representatives of L/L²: unit vectors at the non-pivot
/// coordinates of L².
pub fn abelianization_representatives(l: &LieAlgebra) -> Vec<Vec<Rational>> {
    l.derived()
        .non_pivots()
        .into_iter()
        .map(|j| unit_vector(l.dim(), j))
        .collect()
}

pub fn g_map_analysis(l: &LieAlgebra) -> Result<GMapAnalysis> {
    ensure_class_two(l)?;
    let n = l.dim();
    let m = l.derived().dim();
    let ab = n - m;
    let ext = Extension::new(l)?;
    let dim_m = multiplier_dim(l);
    let preimage = ext.multiplier_preimage()?;
    let dim_m_cover = preimage.dim() - ext.relations.dim();

    let reps = abelianization_representatives(l);
    let vectors = g_vectors(l, &reps);
    let dim_im_g = ext.dim_modulo_relations(&vectors)?;
    let mut image_in_multiplier_ok = true;
    for v in &vectors {
        image_in_multiplier_ok &= preimage.contains(&ext.embed_symbols(v))?;
    }
    let dim_ker_g = m * ab - dim_im_g;
    let dim_m_ab = pair_count(ab);
    let exactness_ok = dim_ker_g as i64 - (m * ab) as i64 + dim_m as i64 - dim_m_ab as i64
        + m as i64
        == 0;

    let mut k_in_kernel_ok = true;
    for (i, j, k) in triples(n) {
        let e = |a: usize| unit_vector(n, a);
        let mut s = zero_vector(pair_count(n));
        for (a, b, c) in [(i, j, k), (k, i, j), (j, k, i)] {
            let product = l.structure_constants(a, b);
            axpy(&mut s, &rat(1), &symbol_part(n, product, &e(c)));
        }
        k_in_kernel_ok &= ext.relations.contains(&ext.embed_symbols(&s))?;
    }

    Ok(GMapAnalysis {
        dim_m,
        dim_m_cover,
        dim_im_g,
        dim_ker_g,
        exactness_ok,
        k_in_kernel_ok,
        image_in_multiplier_ok,
    })
}
