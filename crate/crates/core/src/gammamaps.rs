//! Multilinear maps on the lower central quotients and the dimension audits
//! built on them.
//!
//! Three maps are evaluated as explicit vectors in tensor coordinates:
//!
//! * `γ_L: L^ab ⊗ L^ab ⊗ L^ab → (L²/L³) ⊗ L^ab`,
//!   `x⊗y⊗z ↦ [x,y]⊗z̄ + [z,x]⊗ȳ + [y,z]⊗x̄`;
//! * `γ'_2`, the same formula with `L/(Z+L²)` in place of `L^ab`;
//! * `γ'_3: (L/(Z+L²))^⊗4 → (L³/L⁴) ⊗ L/(Z+L²)`, the four-term expression
//!   `[[x,y],z]⊗w̄ + [w,[x,y]]⊗z̄ + [[z,w],x]⊗ȳ + [y,[z,w]]⊗x̄`.
//!
//! Tensor coordinates are `kron(left, right)` with the right factor varying
//! fastest.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{
    axpy, kron, rat, span_sum, unit_vector, zero_vector, QuotientBasis, Rational, Subspace,
};
use crate::liealg::LieAlgebra;
use crate::multiplier::{pair_count, schur_multiplier_dim};

/// Quotient maps and representatives needed to evaluate the γ maps.
///
/// The representative lists default to the canonical complements; tests
/// replace them with shifted copies to confirm the images do not depend on
/// the choice.
#[derive(Clone, Debug)]
pub struct GammaContext<'a> {
    algebra: &'a LieAlgebra,
    /// `L → L/L²`
    abelian: QuotientBasis,
    /// `L → L/(Z+L²)`
    central: QuotientBasis,
    /// `L² → L²/L³`
    second: QuotientBasis,
    /// `L³ → L³/L⁴`
    third: QuotientBasis,
    class: usize,
    center: Subspace,
    pub abelian_reps: Vec<Vec<Rational>>,
    pub central_reps: Vec<Vec<Rational>>,
}

impl<'a> GammaContext<'a> {
    pub fn new(algebra: &'a LieAlgebra) -> Self {
        let n = algebra.dim();
        let series = algebra.lower_central_series();
        let term = |i: usize| series.get(i - 1).cloned().unwrap_or_else(|| Subspace::zero(n));
        let center = algebra.center();
        let derived = term(2);
        let abelian = QuotientBasis::of_ambient(&derived);
        let central =
            QuotientBasis::of_ambient(&span_sum(&center, &derived).expect("same ambient"));
        let second = QuotientBasis::new(&derived, &term(3)).expect("L³ ⊆ L²");
        let third = QuotientBasis::new(&term(3), &term(4)).expect("L⁴ ⊆ L³");
        let abelian_reps = abelian.representatives().map(<[_]>::to_vec).collect();
        let central_reps = central.representatives().map(<[_]>::to_vec).collect();
        Self {
            algebra,
            abelian,
            central,
            second,
            third,
            class: series.len() - 1,
            center,
            abelian_reps,
            central_reps,
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        self.algebra
    }

    pub fn class(&self) -> usize {
        self.class
    }

    fn br(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        self.algebra.bracket_unchecked(u, v)
    }

    /// Dimension of `(L²/L³) ⊗ L^ab`.
    pub fn gamma_l_target_dim(&self) -> usize {
        self.second.dim() * self.abelian.dim()
    }

    /// Dimension of `(L²/L³) ⊗ L/(Z+L²)`.
    pub fn gamma2_target_dim(&self) -> usize {
        self.second.dim() * self.central.dim()
    }

    /// Dimension of `(L³/L⁴) ⊗ L/(Z+L²)`.
    pub fn gamma3_target_dim(&self) -> usize {
        self.third.dim() * self.central.dim()
    }

    fn cyclic(
        &self,
        right: &QuotientBasis,
        x: &[Rational],
        y: &[Rational],
        z: &[Rational],
    ) -> Vec<Rational> {
        let mut out = zero_vector(self.second.dim() * right.dim());
        for (a, b, c) in [(x, y, z), (z, x, y), (y, z, x)] {
            let t = kron(&self.second.coords(&self.br(a, b)), &right.coords(c));
            axpy(&mut out, &rat(1), &t);
        }
        out
    }

    /// `γ_L(x̄ ⊗ ȳ ⊗ z̄)` for arbitrary vectors of L.
    pub fn eval_gamma_l(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        self.cyclic(&self.abelian, x, y, z)
    }

    /// `γ'_2(x̄ ⊗ ȳ ⊗ z̄)` for arbitrary vectors of L.
    pub fn eval_gamma2(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        self.cyclic(&self.central, x, y, z)
    }

    /// `γ'_3(x̄ ⊗ ȳ ⊗ z̄ ⊗ w̄)` for arbitrary vectors of L.
    pub fn eval_gamma3(
        &self,
        x: &[Rational],
        y: &[Rational],
        z: &[Rational],
        w: &[Rational],
    ) -> Vec<Rational> {
        let xy = self.br(x, y);
        let zw = self.br(z, w);
        let terms = [
            (self.br(&xy, z), w),
            (self.br(w, &xy), z),
            (self.br(&zw, x), y),
            (self.br(y, &zw), x),
        ];
        let mut out = zero_vector(self.gamma3_target_dim());
        for (left, right) in terms {
            let t = kron(&self.third.coords(&left), &self.central.coords(right));
            axpy(&mut out, &rat(1), &t);
        }
        out
    }

    /// Image of `γ_L`, spanned by strictly increasing representative triples.
    pub fn gamma_l_image(&self) -> Subspace {
        let reps = &self.abelian_reps;
        let vectors = increasing_triples(reps.len())
            .map(|(a, b, c)| self.eval_gamma_l(&reps[a], &reps[b], &reps[c]))
            .collect::<Vec<_>>();
        Subspace::span(self.gamma_l_target_dim(), &vectors).expect("target length")
    }

    pub fn gamma2_image(&self) -> Subspace {
        let reps = &self.central_reps;
        let vectors = increasing_triples(reps.len())
            .map(|(a, b, c)| self.eval_gamma2(&reps[a], &reps[b], &reps[c]))
            .collect::<Vec<_>>();
        Subspace::span(self.gamma2_target_dim(), &vectors).expect("target length")
    }

    /// Image of `γ'_3` over all `d⁴` representative tuples (the map is not
    /// alternating, so repeated entries contribute).
    pub fn gamma3_image(&self, lenient: bool) -> Result<Subspace> {
        if self.class < 3 {
            return if lenient {
                Ok(Subspace::zero(self.gamma3_target_dim()))
            } else {
                Err(Error::ClassTooSmall { class: self.class })
            };
        }
        let reps = &self.central_reps;
        let d = reps.len();
        let mut vectors = Vec::with_capacity(d.pow(4));
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    for e in 0..d {
                        vectors.push(self.eval_gamma3(&reps[a], &reps[b], &reps[c], &reps[e]));
                    }
                }
            }
        }
        Ok(Subspace::span(self.gamma3_target_dim(), &vectors).expect("target length"))
    }

    /// Image of `(L²/L³) ⊗ ((Z+L²)/L²) → (L²/L³) ⊗ L^ab`.
    pub fn tau2_image(&self) -> Subspace {
        let left = self.second.dim();
        let mut vectors = Vec::new();
        for a in 0..left {
            let e = unit_vector(left, a);
            for z in self.center.basis_vectors() {
                vectors.push(kron(&e, &self.abelian.coords(z)));
            }
        }
        Subspace::span(self.gamma_l_target_dim(), &vectors).expect("target length")
    }

    /// `id ⊗ (L^ab → L/(Z+L²))` applied to a subspace of `(L²/L³) ⊗ L^ab`.
    pub fn project_second_factor(&self, s: &Subspace) -> Subspace {
        let left = self.second.dim();
        let ab = self.abelian.dim();
        let d = self.central.dim();
        let columns: Vec<Vec<Rational>> = self
            .abelian_reps
            .iter()
            .map(|r| self.central.coords(r))
            .collect();
        let images: Vec<Vec<Rational>> = s
            .basis_vectors()
            .map(|v| {
                let mut out = zero_vector(left * d);
                for a in 0..left {
                    for (b, col) in columns.iter().enumerate() {
                        let coef = &v[a * ab + b];
                        axpy(&mut out[a * d..(a + 1) * d], coef, col);
                    }
                }
                out
            })
            .collect();
        Subspace::span(left * d, &images).expect("target length")
    }
}

fn increasing_triples(len: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..len).flat_map(move |a| {
        (a + 1..len).flat_map(move |b| (b + 1..len).map(move |c| (a, b, c)))
    })
}

pub fn gamma_l_image(l: &LieAlgebra) -> Subspace {
    GammaContext::new(l).gamma_l_image()
}

pub fn gamma2_image(l: &LieAlgebra) -> Subspace {
    GammaContext::new(l).gamma2_image()
}

/// `ClassTooSmall` below class 3 unless `lenient`, which returns the zero image.
pub fn gamma3_image(l: &LieAlgebra, lenient: bool) -> Result<Subspace> {
    GammaContext::new(l).gamma3_image(lenient)
}

/// `dim(L^i/L^{i+1}) · dim((Z+L²)/L²)` for `2 ≤ i ≤ class`.
pub fn tau_prime_dim(l: &LieAlgebra, i: usize) -> Result<usize> {
    let report = l.structure_report();
    if i < 2 || i > report.class {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 2,
            max: report.class,
        });
    }
    Ok((report.lcs_dims[i - 1] - report.lcs_dims[i]) * report.t)
}

/// An inequality `lhs ≤ rhs` with its verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityCheck {
    pub lhs: usize,
    pub rhs: usize,
    pub ok: bool,
}

impl InequalityCheck {
    fn new(lhs: usize, rhs: usize) -> Self {
        Self {
            lhs,
            rhs,
            ok: lhs <= rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaReport {
    #[serde(rename = "dim_im_gamma_L")]
    pub dim_im_gamma_l: usize,
    pub dim_im_gamma2: usize,
    /// Zero below class 3.
    pub dim_im_gamma3: usize,
    pub tau2_dim: usize,
    /// `dim L^i/L^{i+1}` for `i = 2..=class`.
    pub level_dims: Vec<usize>,
    /// `dim L/L²`
    pub abelianization_dim: usize,
    /// `dim (Z+L²)/L²`
    pub central_part_dim: usize,
    /// `dim L/(Z+L²)`
    pub d: usize,
    pub dim_wedge: usize,
    /// `dim(L/L² ∧ L/L²) = C(n−m, 2)`
    pub dim_wedge_abelianization: usize,
    /// Sum of the kernel dimensions along the wedge filtration, derived from
    /// the exact sequences rather than materialized.
    pub sum_ker_alpha: usize,
    /// `dim Im γ_L ≤ sum_ker_alpha`
    pub gamma_l_bound: InequalityCheck,
    /// `dim L∧L + dim Im γ'_2 ≤ C(n−m,2) + Σ dim(L^i/L^{i+1}) · d`
    pub gamma2_bound: InequalityCheck,
    /// `Im τ'_2 ⊆ Im γ_L`
    pub tau2_contained: bool,
    /// `dim Im γ_L = dim Im γ'_2 + dim Im τ'_2`
    pub split_holds: bool,
    /// Projecting `Im γ_L` onto `L/(Z+L²)` in the second factor gives `Im γ'_2`.
    pub projection_matches: bool,
}

impl GammaReport {
    pub fn all_ok(&self) -> bool {
        self.gamma_l_bound.ok
            && self.gamma2_bound.ok
            && self.tau2_contained
            && self.split_holds
            && self.projection_matches
    }

    /// Converts a failed audit into `TheoremViolation`.
    pub fn ensure_ok(&self) -> Result<()> {
        let mut failed = Vec::new();
        if !self.gamma_l_bound.ok {
            failed.push(format!(
                "dim Im γ_L = {} exceeds the kernel sum {}",
                self.gamma_l_bound.lhs, self.gamma_l_bound.rhs
            ));
        }
        if !self.gamma2_bound.ok {
            failed.push(format!(
                "γ'_2 bound fails: {} > {}",
                self.gamma2_bound.lhs, self.gamma2_bound.rhs
            ));
        }
        if !self.tau2_contained {
            failed.push("Im τ'_2 is not inside Im γ_L".into());
        }
        if !self.split_holds {
            failed.push("dim Im γ_L ≠ dim Im γ'_2 + dim Im τ'_2".into());
        }
        if !self.projection_matches {
            failed.push("projection of Im γ_L differs from Im γ'_2".into());
        }
        if failed.is_empty() {
            Ok(())
        } else {
            Err(Error::TheoremViolation(failed.join("; ")))
        }
    }
}

pub fn sequence_audit(l: &LieAlgebra) -> Result<GammaReport> {
    let ctx = GammaContext::new(l);
    let report = l.structure_report();
    let n = report.n;
    let m = report.m;
    let ab = n - m;
    let dim_wedge = schur_multiplier_dim(l).dim_wedge;
    let dim_wedge_abelianization = pair_count(ab);

    let gamma_l = ctx.gamma_l_image();
    let gamma2 = ctx.gamma2_image();
    let gamma3 = ctx.gamma3_image(true)?;
    let tau2 = ctx.tau2_image();

    let kernel_sum = (dim_wedge_abelianization + m * ab) as i64 - dim_wedge as i64;
    let sum_ker_alpha = usize::try_from(kernel_sum).map_err(|_| {
        Error::TheoremViolation(format!(
            "wedge dimension {dim_wedge} exceeds C(n−m,2) + m(n−m)"
        ))
    })?;
    let level_dims: Vec<usize> = report
        .lcs_dims
        .windows(2)
        .skip(1)
        .map(|w| w[0] - w[1])
        .collect();
    let gamma2_rhs = dim_wedge_abelianization + level_dims.iter().sum::<usize>() * report.d;

    Ok(GammaReport {
        dim_im_gamma_l: gamma_l.dim(),
        dim_im_gamma2: gamma2.dim(),
        dim_im_gamma3: gamma3.dim(),
        tau2_dim: tau2.dim(),
        level_dims,
        abelianization_dim: ab,
        central_part_dim: report.t,
        d: report.d,
        dim_wedge,
        dim_wedge_abelianization,
        sum_ker_alpha,
        gamma_l_bound: InequalityCheck::new(gamma_l.dim(), sum_ker_alpha),
        gamma2_bound: InequalityCheck::new(dim_wedge + gamma2.dim(), gamma2_rhs),
        tau2_contained: gamma_l.contains_subspace(&tau2)?,
        split_holds: gamma_l.dim() == gamma2.dim() + tau2.dim(),
        projection_matches: ctx.project_second_factor(&gamma_l) == gamma2,
    })
}

/// Terms of the class-three inequality for stem algebras.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StemClassThreeAudit {
    pub dim_wedge: usize,
    pub dim_im_gamma2: usize,
    pub dim_im_gamma3: usize,
    pub dim_wedge_abelianization: usize,
    /// `dim(L²/L³) · (n−m)`
    pub second_level_term: usize,
    /// `dim L³ · (n−m)`
    pub third_level_term: usize,
    pub check: InequalityCheck,
}

pub fn stem_class3_audit(l: &LieAlgebra) -> Result<StemClassThreeAudit> {
    let report = l.structure_report();
    if !report.is_stem || report.class != 3 {
        return Err(Error::PreconditionFailed(format!(
            "requires a stem algebra of class 3 (class {}, t = {})",
            report.class, report.t
        )));
    }
    let ctx = GammaContext::new(l);
    let ab = report.n - report.m;
    let m1 = report.m1();
    let dim_wedge = schur_multiplier_dim(l).dim_wedge;
    let dim_im_gamma2 = ctx.gamma2_image().dim();
    let dim_im_gamma3 = ctx.gamma3_image(false)?.dim();
    let dim_wedge_abelianization = pair_count(ab);
    let second_level_term = (report.m - m1) * ab;
    let third_level_term = m1 * ab;
    Ok(StemClassThreeAudit {
        dim_wedge,
        dim_im_gamma2,
        dim_im_gamma3,
        dim_wedge_abelianization,
        second_level_term,
        third_level_term,
        check: InequalityCheck::new(
            dim_wedge + dim_im_gamma2 + dim_im_gamma3,
            dim_wedge_abelianization + second_level_term + third_level_term,
        ),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gamma2LowerBound {
    pub d: usize,
    pub dim_im_gamma2: usize,
    /// `d − 2 ≤ dim Im γ'_2`
    pub ok: bool,
}

pub fn gamma2_lower_bound_check(l: &LieAlgebra) -> Result<Gamma2LowerBound> {
    let ctx = GammaContext::new(l);
    let d = ctx.central.dim();
    if d < 2 {
        return Err(Error::PreconditionFailed(format!(
            "needs dim L/(Z+L²) ≥ 2, found {d}"
        )));
    }
    let dim_im_gamma2 = ctx.gamma2_image().dim();
    Ok(Gamma2LowerBound {
        d,
        dim_im_gamma2,
        ok: d - 2 <= dim_im_gamma2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(dim: usize, brackets: &[crate::liealg::SparseBracket]) -> LieAlgebra {
        LieAlgebra::from_sparse(dim, brackets).unwrap()
    }

    fn h(m: usize) -> LieAlgebra {
        let z = 2 * m + 1;
        let coef: [(usize, i64); 1] = [(z, 1)];
        let brackets: Vec<crate::liealg::SparseBracket> =
            (1..=m).map(|i| (2 * i - 1, 2 * i, &coef[..])).collect();
        l(z, &brackets)
    }

    fn l5_7() -> LieAlgebra {
        l(5, &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (1, 4, &[(5, 1)])])
    }

    fn l5_8() -> LieAlgebra {
        l(5, &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)])])
    }

    fn l5_9() -> LieAlgebra {
        l(5, &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (2, 3, &[(5, 1)])])
    }

    fn l6_26() -> LieAlgebra {
        l(6, &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)]), (2, 3, &[(6, 1)])])
    }

    fn e(n: usize, i: usize) -> Vec<Rational> {
        unit_vector(n, i - 1)
    }

    #[test]
    fn gamma_l_values() {
        assert_eq!(gamma_l_image(&LieAlgebra::abelian(4)).dim(), 0);
        assert_eq!(gamma_l_image(&h(1)).dim(), 0);
        assert_eq!(gamma_l_image(&h(2)).dim(), 4);
        let lie = l6_26();
        let img = gamma_l_image(&lie);
        assert_eq!(img.dim(), 1);
        // x4⊗x̄3 − x5⊗x̄2 + x6⊗x̄1 in (L²/L³) ⊗ L^ab coordinates.
        let ctx = GammaContext::new(&lie);
        let v = ctx.eval_gamma_l(&e(6, 1), &e(6, 2), &e(6, 3));
        let mut expected = zero_vector(9);
        expected[2] = rat(1);
        expected[3 + 1] = rat(-1);
        expected[6] = rat(1);
        assert_eq!(v, expected);
    }

    #[test]
    fn gamma2_values() {
        assert_eq!(gamma2_image(&l5_7()).dim(), 0);
        assert_eq!(gamma2_image(&l6_26()).dim(), 1);
        assert_eq!(gamma2_image(&h(2)).dim(), 4);
    }

    #[test]
    fn gamma3_values() {
        assert_eq!(
            gamma3_image(&l6_26(), false),
            Err(Error::ClassTooSmall { class: 2 })
        );
        assert_eq!(gamma3_image(&l6_26(), true).unwrap().dim(), 0);
        assert_eq!(gamma3_image(&l5_9(), false).unwrap().dim(), 1);
        assert_eq!(gamma3_image(&l5_7(), false).unwrap().dim(), 1);
    }

    #[test]
    fn gamma3_does_not_vanish_on_repeated_entries() {
        let lie = l5_7();
        let ctx = GammaContext::new(&lie);
        let v = ctx.eval_gamma3(&e(5, 1), &e(5, 2), &e(5, 1), &e(5, 2));
        assert_eq!(v, vec![rat(0), rat(-2)]);
    }

    #[test]
    fn tau_prime_values() {
        let sum = l5_8().direct_sum(&LieAlgebra::abelian(1));
        assert_eq!(tau_prime_dim(&sum, 2).unwrap(), 2);
        assert_eq!(tau_prime_dim(&h(3), 2).unwrap(), 0);
        assert_eq!(tau_prime_dim(&l5_7(), 4).unwrap(), 0);
        assert_eq!(
            tau_prime_dim(&l5_7(), 5),
            Err(Error::IndexOutOfRange { index: 5, min: 2, max: 4 })
        );
        assert!(tau_prime_dim(&h(1), 1).is_err());
    }

    #[test]
    fn sequence_audit_examples() {
        let r = sequence_audit(&h(1)).unwrap();
        assert_eq!(r.dim_wedge, 3);
        assert_eq!(r.dim_wedge_abelianization, 1);
        assert_eq!(r.sum_ker_alpha, 0);
        assert_eq!((r.gamma2_bound.lhs, r.gamma2_bound.rhs), (3, 3));
        assert!(r.all_ok());

        let r = sequence_audit(&h(2)).unwrap();
        assert_eq!((r.dim_im_gamma_l, r.sum_ker_alpha), (4, 4));
        assert!(r.all_ok());

        let r = sequence_audit(&l6_26()).unwrap();
        assert_eq!(r.dim_wedge, 11);
        assert_eq!((r.dim_im_gamma_l, r.dim_im_gamma2, r.sum_ker_alpha), (1, 1, 1));
        assert_eq!((r.gamma2_bound.lhs, r.gamma2_bound.rhs), (12, 12));
        r.ensure_ok().unwrap();

        let r = sequence_audit(&l5_8().direct_sum(&LieAlgebra::abelian(1))).unwrap();
        assert_eq!((r.dim_im_gamma_l, r.dim_im_gamma2, r.tau2_dim), (3, 1, 2));
        assert!(r.all_ok());
    }

    #[test]
    fn stem_class3_examples() {
        let a = stem_class3_audit(&l5_9()).unwrap();
        assert_eq!(a.dim_wedge, 6);
        assert_eq!((a.dim_im_gamma2, a.dim_im_gamma3), (0, 1));
        assert_eq!((a.check.lhs, a.check.rhs), (7, 7));
        assert!(a.check.ok);
        assert!(matches!(stem_class3_audit(&l5_7()), Err(Error::PreconditionFailed(_))));
        assert!(matches!(stem_class3_audit(&l6_26()), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn gamma2_lower_bound_examples() {
        let c = gamma2_lower_bound_check(&l5_7()).unwrap();
        assert_eq!((c.d, c.dim_im_gamma2, c.ok), (2, 0, true));
        let c = gamma2_lower_bound_check(&l6_26()).unwrap();
        assert_eq!((c.d, c.ok), (3, true));
        assert!(matches!(
            gamma2_lower_bound_check(&LieAlgebra::abelian(3)),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn images_ignore_representative_shifts() {
        let lie = l5_8().direct_sum(&LieAlgebra::abelian(1));
        let mut ctx = GammaContext::new(&lie);
        let before = (ctx.gamma_l_image(), ctx.gamma2_image());
        for (k, r) in ctx.abelian_reps.iter_mut().enumerate() {
            r[3] += rat(k as i64 + 1);
            r[4] -= rat(2);
        }
        for r in ctx.central_reps.iter_mut() {
            r[5] += rat(3);
            r[3] += rat(1);
        }
        assert_eq!((ctx.gamma_l_image(), ctx.gamma2_image()), before);
    }
}
