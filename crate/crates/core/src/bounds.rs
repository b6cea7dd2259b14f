//! Upper bounds on dim M(L) in terms of `n = dim L` and `m = dim L²`, and
//! recognition of the algebras that reach them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::Subspace;
use crate::liealg::{LieAlgebra, StructureReport};
use crate::multiplier::{multiplier_dim, pair_count};

fn check_domain(n: usize, m: usize) -> Result<()> {
    if m >= 1 && n > m {
        Ok(())
    } else {
        Err(Error::DomainViolation(format!(
            "bound needs n > m ≥ 1, got n = {n}, m = {m}"
        )))
    }
}

/// `½(n+m−2)(n−m−1) + 1`; the product is always even.
pub fn bound_theorem15(n: usize, m: usize) -> Result<usize> {
    check_domain(n, m)?;
    Ok((n + m - 2) * (n - m - 1) / 2 + 1)
}

/// The general bound lowered by `t(m−1)`, where `t = dim Z/(Z ∩ L²)`.
pub fn bound_theorem212(n: usize, m: usize, t: usize) -> Result<usize> {
    let general = bound_theorem15(n, m)?;
    general.checked_sub(t * (m - 1)).ok_or_else(|| {
        Error::DomainViolation(format!("t = {t} is too large for n = {n}, m = {m}"))
    })
}

/// `½(n+m−2)(n−m−1)`, the bound for class at least three.
pub fn bound_class3(n: usize, m: usize) -> Result<usize> {
    Ok(bound_theorem15(n, m)? - 1)
}

/// Prediction for algebras with one-dimensional derived algebra, which are
/// `H(k) ⊕ A(n−2k−1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedLineRecognition {
    /// Heisenberg rank, `(n − dim Z)/2`.
    pub k: usize,
    #[serde(rename = "predicted_dim_M")]
    pub predicted_dim_m: usize,
}

fn predict_derived_line(n: usize, z_dim: usize) -> DerivedLineRecognition {
    let k = (n - z_dim) / 2;
    let base = (n - 1) * (n - 2) / 2;
    let predicted_dim_m = if k == 1 { base + 1 } else { base - 1 };
    DerivedLineRecognition { k, predicted_dim_m }
}

pub fn recognize_m1(l: &LieAlgebra) -> Result<DerivedLineRecognition> {
    let report = l.structure_report();
    if report.m != 1 {
        return Err(Error::PreconditionFailed(format!(
            "derived algebra has dimension {}, expected 1",
            report.m
        )));
    }
    let prediction = predict_derived_line(report.n, report.z_dim);
    let computed = multiplier_dim(l);
    if computed != prediction.predicted_dim_m {
        return Err(Error::InternalInconsistency(format!(
            "dim M = {computed} but H({}) ⊕ A(n−2k−1) predicts {}",
            prediction.k, prediction.predicted_dim_m
        )));
    }
    Ok(prediction)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundName {
    /// `½(n+m−2)(n−m−1) + 1`
    #[serde(rename = "theorem15")]
    General,
    /// The general bound minus `t(m−1)`.
    #[serde(rename = "theorem212")]
    CentralRefined,
    /// `½(n+m−2)(n−m−1)` for class ≥ 3.
    #[serde(rename = "class3")]
    HigherClass,
    /// `dim M ≤ m` when `m = n − 2`, `n ≥ 4`.
    #[serde(rename = "lemma14")]
    DerivedCodimTwo,
    /// Exact value when `m = 1`.
    #[serde(rename = "prop29")]
    DerivedLine,
}

impl BoundName {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::General => "theorem15",
            BoundName::CentralRefined => "theorem212",
            BoundName::HigherClass => "class3",
            BoundName::DerivedCodimTwo => "lemma14",
            BoundName::DerivedLine => "prop29",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Strict,
    Attained,
    Violated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound_name: BoundName,
    pub bound_value: usize,
    #[serde(rename = "dim_M")]
    pub dim_m: usize,
    pub verdict: Verdict,
}

impl BoundReport {
    fn upper(bound_name: BoundName, bound_value: usize, dim_m: usize) -> Self {
        let verdict = match dim_m.cmp(&bound_value) {
            std::cmp::Ordering::Less => Verdict::Strict,
            std::cmp::Ordering::Equal => Verdict::Attained,
            std::cmp::Ordering::Greater => Verdict::Violated,
        };
        Self {
            bound_name,
            bound_value,
            dim_m,
            verdict,
        }
    }
}

/// Every bound that applies to `l`, evaluated against the computed dim M.
///
/// Abelian input has no applicable bound and yields an empty list. For
/// class ≥ 3 the general bound must be strict, so equality there is
/// reported as a violation.
pub fn evaluate_bounds(l: &LieAlgebra) -> Vec<BoundReport> {
    let report = l.structure_report();
    evaluate_bounds_with(&report, multiplier_dim(l))
}

/// [`evaluate_bounds`] from precomputed invariants.
pub fn evaluate_bounds_with(report: &StructureReport, dim_m: usize) -> Vec<BoundReport> {
    let (n, m) = (report.n, report.m);
    let Ok(general) = bound_theorem15(n, m) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut general_report = BoundReport::upper(BoundName::General, general, dim_m);
    if report.class >= 3 && general_report.verdict == Verdict::Attained {
        general_report.verdict = Verdict::Violated;
    }
    out.push(general_report);
    if let Ok(refined) = bound_theorem212(n, m, report.t) {
        out.push(BoundReport::upper(BoundName::CentralRefined, refined, dim_m));
    } else {
        out.push(BoundReport {
            bound_name: BoundName::CentralRefined,
            bound_value: 0,
            dim_m,
            verdict: Verdict::Violated,
        });
    }
    if report.class >= 3 {
        out.push(BoundReport::upper(BoundName::HigherClass, general - 1, dim_m));
    }
    if n >= 4 && m + 2 == n {
        out.push(BoundReport::upper(BoundName::DerivedCodimTwo, m, dim_m));
    }
    if m == 1 {
        let predicted = predict_derived_line(n, report.z_dim).predicted_dim_m;
        let verdict = if predicted == dim_m {
            Verdict::Attained
        } else {
            Verdict::Violated
        };
        out.push(BoundReport {
            bound_name: BoundName::DerivedLine,
            bound_value: predicted,
            dim_m,
            verdict,
        });
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "H1_plus_abelian")]
    HeisenbergPlusAbelian,
    #[serde(rename = "L_5_8")]
    L58,
    #[serde(rename = "L_6_26")]
    L626,
    #[serde(rename = "none")]
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttainerVerdict {
    #[serde(rename = "attains_theorem15")]
    pub attains_general_bound: bool,
    pub family: Family,
    /// For attainers: the profile matched a known family and class ≤ 2.
    /// For everything else: the profile matched no family.
    #[serde(rename = "consistent_with_theorem220")]
    pub consistent_with_classification: bool,
}

/// Matches invariants against the three families that reach the general bound.
pub fn match_family(report: &StructureReport, dim_m: usize) -> Family {
    let n = report.n;
    if report.m == 1
        && report.class == 2
        && n >= 3
        && report.z_dim == n - 2
        && dim_m == (n - 1) * (n - 2) / 2 + 1
    {
        return Family::HeisenbergPlusAbelian;
    }
    let profile = (n, report.m, report.class, report.z_dim, report.lcs_dims.as_slice(), dim_m);
    match profile {
        (5, 2, 2, 2, [5, 2, 0], 6) => Family::L58,
        (6, 3, 2, 3, [6, 3, 0], 8) => Family::L626,
        _ => Family::None,
    }
}

pub fn classify_attainer(l: &LieAlgebra) -> Result<AttainerVerdict> {
    classify_attainer_with(&l.structure_report(), multiplier_dim(l))
}

/// [`classify_attainer`] from precomputed invariants. Fails with
/// `TheoremViolation` if an attainer with `m ≥ 2` has a central element
/// outside L².
pub fn classify_attainer_with(report: &StructureReport, dim_m: usize) -> Result<AttainerVerdict> {
    let attains = bound_theorem15(report.n, report.m).is_ok_and(|b| b == dim_m);
    if attains && report.m >= 2 && !report.is_stem {
        return Err(Error::TheoremViolation(format!(
            "algebra attains the general bound with m = {} but t = {}",
            report.m, report.t
        )));
    }
    let family = match_family(report, dim_m);
    let consistent = if attains {
        family != Family::None && report.class <= 2
    } else {
        family == Family::None
    };
    Ok(AttainerVerdict {
        attains_general_bound: attains,
        family,
        consistent_with_classification: consistent,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralQuotientAttainment {
    pub k: usize,
    #[serde(rename = "dim_M_quotient")]
    pub dim_m_quotient: usize,
    pub predicted: usize,
    pub quotient_report: StructureReport,
}

/// Quotients an attainer with `m ≥ 2` by the span of the first `k` basis
/// vectors of its center and checks the quotient still attains the general
/// bound, `½(n+m−2(k+1))(n−m−1) + 1`.
///
/// Needs `1 ≤ k < m`: at `k = m` the quotient is abelian and the bound no
/// longer applies.
pub fn central_quotient_attainment(l: &LieAlgebra, k: usize) -> Result<CentralQuotientAttainment> {
    let report = l.structure_report();
    let dim_m = multiplier_dim(l);
    let attains = bound_theorem15(report.n, report.m).is_ok_and(|b| b == dim_m);
    if !attains || report.m < 2 {
        return Err(Error::PreconditionFailed(
            "algebra must attain the general bound with m ≥ 2".into(),
        ));
    }
    let center = l.center();
    if k == 0 || k >= report.m || k > center.dim() {
        return Err(Error::PreconditionFailed(format!(
            "central ideal dimension must satisfy 1 ≤ k < m = {} and k ≤ dim Z = {}, got {k}",
            report.m,
            center.dim()
        )));
    }
    let ideal = Subspace::span(report.n, &center.basis_vectors().take(k).collect::<Vec<_>>())?;
    let quotient = l.quotient(&ideal)?.algebra;
    let dim_m_quotient = multiplier_dim(&quotient);
    let (n, m) = (report.n, report.m);
    let predicted = (n + m - 2 * (k + 1)) * (n - m - 1) / 2 + 1;
    if dim_m_quotient != predicted {
        return Err(Error::TheoremViolation(format!(
            "quotient by a {k}-dimensional central ideal has dim M = {dim_m_quotient}, expected {predicted}"
        )));
    }
    Ok(CentralQuotientAttainment {
        k,
        dim_m_quotient,
        predicted,
        quotient_report: quotient.structure_report(),
    })
}

/// `dim L² ≤ C(q, 2)` where `q = dim L/Z(L)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedByCentralQuotient {
    pub m: usize,
    pub central_quotient_dim: usize,
    pub bound: usize,
    pub ok: bool,
}

pub fn derived_dim_check(report: &StructureReport) -> DerivedByCentralQuotient {
    let q = report.n - report.z_dim;
    let bound = pair_count(q);
    DerivedByCentralQuotient {
        m: report.m,
        central_quotient_dim: q,
        bound,
        ok: report.m <= bound,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(dim: usize, brackets: &[crate::liealg::SparseBracket]) -> LieAlgebra {
        LieAlgebra::from_sparse(dim, brackets).unwrap()
    }

    fn h1() -> LieAlgebra {
        l(3, &[(1, 2, &[(3, 1)])])
    }

    fn h2() -> LieAlgebra {
        l(5, &[(1, 2, &[(5, 1)]), (3, 4, &[(5, 1)])])
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

    fn find(reports: &[BoundReport], name: BoundName) -> &BoundReport {
        reports.iter().find(|r| r.bound_name == name).unwrap()
    }

    #[test]
    fn bound_formulas() {
        assert_eq!(bound_theorem15(5, 2), Ok(6));
        assert_eq!(bound_theorem15(6, 3), Ok(8));
        for n in 3..10 {
            assert_eq!(bound_theorem15(n, 1), Ok((n - 1) * (n - 2) / 2 + 1));
        }
        assert_eq!(bound_theorem15(5, 3), Ok(4));
        assert_eq!(bound_theorem212(6, 2, 1), Ok(9));
        assert_eq!(bound_theorem212(6, 3, 1), Ok(6));
        assert_eq!(bound_theorem212(7, 3, 0), bound_theorem15(7, 3));
        assert_eq!(bound_class3(5, 3), Ok(3));
        assert_eq!(bound_class3(6, 3), Ok(7));
        assert_eq!(bound_class3(4, 2), Ok(2));
        assert!(matches!(bound_theorem15(3, 3), Err(Error::DomainViolation(_))));
        assert!(matches!(bound_theorem15(3, 0), Err(Error::DomainViolation(_))));
        assert!(matches!(bound_class3(2, 2), Err(Error::DomainViolation(_))));
    }

    #[test]
    fn derived_line_recognition() {
        let sum = h1().direct_sum(&LieAlgebra::abelian(2));
        assert_eq!(
            recognize_m1(&sum),
            Ok(DerivedLineRecognition { k: 1, predicted_dim_m: 7 })
        );
        assert_eq!(
            recognize_m1(&h2()),
            Ok(DerivedLineRecognition { k: 2, predicted_dim_m: 5 })
        );
        assert_eq!(
            recognize_m1(&h1()),
            Ok(DerivedLineRecognition { k: 1, predicted_dim_m: 2 })
        );
        assert!(matches!(recognize_m1(&l5_8()), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn bounds_for_examples() {
        let r = evaluate_bounds(&l5_8());
        assert_eq!(find(&r, BoundName::General).verdict, Verdict::Attained);

        let r = evaluate_bounds(&l5_7());
        let general = find(&r, BoundName::General);
        assert_eq!((general.bound_value, general.dim_m), (4, 3));
        assert_eq!(general.verdict, Verdict::Strict);
        assert_eq!(find(&r, BoundName::HigherClass).verdict, Verdict::Attained);
        assert_eq!(find(&r, BoundName::DerivedCodimTwo).verdict, Verdict::Attained);

        let r = evaluate_bounds(&h2());
        let general = find(&r, BoundName::General);
        assert_eq!((general.bound_value, general.verdict), (7, Verdict::Strict));
        assert_eq!(find(&r, BoundName::DerivedLine).verdict, Verdict::Attained);

        let sum = l5_8().direct_sum(&LieAlgebra::abelian(1));
        let r = evaluate_bounds(&sum);
        let refined = find(&r, BoundName::CentralRefined);
        assert_eq!((refined.bound_value, refined.verdict), (9, Verdict::Attained));

        assert!(evaluate_bounds(&LieAlgebra::abelian(3)).is_empty());
    }

    #[test]
    fn bound_names_match_report_labels() {
        let names: Vec<&str> = evaluate_bounds(&h1())
            .iter()
            .map(|r| r.bound_name.as_str())
            .collect();
        assert_eq!(names, ["theorem15", "theorem212", "prop29"]);
    }

    #[test]
    fn attainer_classification() {
        let v = classify_attainer(&h1().direct_sum(&LieAlgebra::abelian(4))).unwrap();
        assert!(v.attains_general_bound);
        assert_eq!(v.family, Family::HeisenbergPlusAbelian);
        assert!(v.consistent_with_classification);

        let v = classify_attainer(&l6_26()).unwrap();
        assert_eq!((v.attains_general_bound, v.family), (true, Family::L626));

        let v = classify_attainer(&l5_8()).unwrap();
        assert_eq!((v.attains_general_bound, v.family), (true, Family::L58));

        let v = classify_attainer(&l5_9()).unwrap();
        assert!(!v.attains_general_bound);
        assert_eq!(v.family, Family::None);
        assert!(v.consistent_with_classification);

        let v = classify_attainer(&h2()).unwrap();
        assert!(!v.attains_general_bound && v.consistent_with_classification);
    }

    #[test]
    fn central_quotients_of_attainers() {
        let a = central_quotient_attainment(&l6_26(), 1).unwrap();
        assert_eq!((a.dim_m_quotient, a.predicted), (6, 6));
        assert_eq!(a.quotient_report, l5_8().structure_report());
        let a = central_quotient_attainment(&l6_26(), 2).unwrap();
        assert_eq!(a.dim_m_quotient, 4);
        let a = central_quotient_attainment(&l5_8(), 1).unwrap();
        assert_eq!(a.dim_m_quotient, 4);

        assert!(matches!(
            central_quotient_attainment(&l6_26(), 3),
            Err(Error::PreconditionFailed(_))
        ));
        assert!(matches!(
            central_quotient_attainment(&l6_26(), 0),
            Err(Error::PreconditionFailed(_))
        ));
        assert!(matches!(
            central_quotient_attainment(&l5_9(), 1),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn derived_dim_against_central_quotient() {
        let c = derived_dim_check(&l6_26().structure_report());
        assert_eq!((c.m, c.central_quotient_dim, c.bound, c.ok), (3, 3, 3, true));
        let c = derived_dim_check(&l5_7().structure_report());
        assert_eq!((c.central_quotient_dim, c.bound), (4, 6));
        assert!(c.ok);
    }
}
