//! The analysis document and its text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use nilschur::bounds::{
    classify_attainer_with, derived_dim_check, evaluate_bounds_with, recognize_m1,
    AttainerVerdict, BoundReport, DerivedByCentralQuotient, DerivedLineRecognition, Family,
    Verdict,
};
use nilschur::gammamaps::{
    gamma2_lower_bound_check, gamma3_image, sequence_audit, stem_class3_audit, Gamma2LowerBound,
    GammaReport, StemClassThreeAudit,
};
use nilschur::multiplier::{
    cover_presentation, g_map_analysis, multiplier_dim_via_cover, pair_index,
    quotient_inequality_check, schur_multiplier_dim, CoverPresentation, GMapAnalysis,
    MultiplierResult, QuotientInequality,
};
use nilschur::{LieAlgebra, StructureReport};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub cover: bool,
    pub audit: bool,
    pub lenient: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisDocument {
    pub name: String,
    pub structure: StructureReport,
    pub multiplier: MultiplierSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<GammaReport>,
    pub bounds: Vec<BoundReport>,
    pub classification: AttainerVerdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub audits: Option<AuditSection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplierSection {
    #[serde(flatten)]
    pub result: MultiplierResult,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover: Option<CoverSection>,
}

/// Cover presentation with 1-based pairs and rational strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSection {
    /// `pairs[k]` names the symbol `s_{k+1}`.
    pub pairs: Vec<[usize; 2]>,
    pub relation_rank: usize,
    /// Reduced row echelon basis of the Jacobi relations over the symbols.
    pub relations: Vec<Vec<String>>,
    pub absorbed_pairs: Vec<[usize; 2]>,
    pub survivors: Vec<[usize; 2]>,
    pub multiplier_dim: usize,
    pub s_space_dim: usize,
}

impl CoverSection {
    pub fn from_presentation(c: &CoverPresentation) -> Self {
        let one_based = |v: &[(usize, usize)]| v.iter().map(|&(i, j)| [i + 1, j + 1]).collect();
        Self {
            pairs: one_based(&c.pairs),
            relation_rank: c.relation_rank,
            relations: c
                .relation_space()
                .basis_vectors()
                .map(|row| row.iter().map(ToString::to_string).collect())
                .collect(),
            absorbed_pairs: one_based(&c.absorbed_pairs),
            survivors: one_based(&c.survivors),
            multiplier_dim: c.multiplier_dim,
            s_space_dim: c.s_space_dim,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealCheck {
    /// `center`, or `L^i` for a lower central term.
    pub ideal: String,
    pub check: QuotientInequality,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditSection {
    /// dim M computed a second way, inside the extension.
    #[serde(rename = "dim_M_via_cover")]
    pub dim_m_via_cover: usize,
    /// `None` below class 3 unless lenient.
    pub dim_im_gamma3: Option<usize>,
    pub g_map: Option<GMapAnalysis>,
    pub stem_class3: Option<StemClassThreeAudit>,
    pub gamma2_lower_bound: Option<Gamma2LowerBound>,
    pub derived_line: Option<DerivedLineRecognition>,
    pub derived_by_central_quotient: DerivedByCentralQuotient,
    pub quotient_inequalities: Vec<IdealCheck>,
}

fn ideals_to_check(l: &LieAlgebra) -> Vec<(String, nilschur::Subspace)> {
    let mut out = vec![("center".to_string(), l.center())];
    // K = L makes the quotient zero and the inequality false for every
    // non-abelian L, so the series starts at L^2.
    for (i, term) in l.lower_central_series().into_iter().enumerate().skip(1) {
        out.push((format!("L^{}", i + 1), term));
    }
    out
}

pub fn audit_section(l: &LieAlgebra, report: &StructureReport, dim_m: usize, lenient: bool) -> Result<AuditSection, CliError> {
    let dim_im_gamma3 = match gamma3_image(l, lenient) {
        Ok(image) => Some(image.dim()),
        Err(nilschur::Error::ClassTooSmall { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let quotient_inequalities = ideals_to_check(l)
        .into_iter()
        .map(|(ideal, k)| Ok(IdealCheck { ideal, check: quotient_inequality_check(l, &k)? }))
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(AuditSection {
        dim_m_via_cover: multiplier_dim_via_cover(l)?,
        dim_im_gamma3,
        g_map: (report.class == 2).then(|| g_map_analysis(l)).transpose()?,
        stem_class3: (report.is_stem && report.class == 3)
            .then(|| stem_class3_audit(l))
            .transpose()?,
        gamma2_lower_bound: (report.d >= 2).then(|| gamma2_lower_bound_check(l)).transpose()?,
        derived_line: (report.m == 1).then(|| recognize_m1(l)).transpose()?,
        derived_by_central_quotient: derived_dim_check(report),
        quotient_inequalities,
    })
    .and_then(|a| {
        if a.dim_m_via_cover == dim_m {
            Ok(a)
        } else {
            Err(CliError::Algebra(nilschur::Error::InternalInconsistency(format!(
                "multiplier routes disagree: {dim_m} vs {}",
                a.dim_m_via_cover
            ))))
        }
    })
}

pub fn analyze(name: &str, l: &LieAlgebra, opts: Options) -> Result<AnalysisDocument, CliError> {
    let result = schur_multiplier_dim(l);
    let structure = result.report.clone();
    let dim_m = result.dim_m;
    let cover = if opts.cover {
        Some(CoverSection::from_presentation(&cover_presentation(l)?))
    } else {
        None
    };
    let (gamma, audits) = if opts.audit {
        (
            Some(sequence_audit(l)?),
            Some(audit_section(l, &structure, dim_m, opts.lenient)?),
        )
    } else {
        (None, None)
    };
    Ok(AnalysisDocument {
        name: name.to_string(),
        bounds: evaluate_bounds_with(&structure, dim_m),
        classification: classify_attainer_with(&structure, dim_m)?,
        structure,
        multiplier: MultiplierSection { result, cover },
        gamma,
        audits,
    })
}

/// Every failed check in the document; empty means the analysis is clean.
pub fn violations(doc: &AnalysisDocument) -> Vec<String> {
    let mut out = Vec::new();
    for b in &doc.bounds {
        if b.verdict == Verdict::Violated {
            out.push(format!(
                "bound {} = {} violated by dim M = {}",
                b.bound_name.as_str(),
                b.bound_value,
                b.dim_m
            ));
        }
    }
    if !doc.classification.consistent_with_classification {
        out.push(format!(
            "classification inconsistent: attains = {}, family = {}, class = {}",
            doc.classification.attains_general_bound,
            family_name(doc.classification.family),
            doc.structure.class
        ));
    }
    if let Some(g) = &doc.gamma {
        if let Err(e) = g.ensure_ok() {
            out.push(e.to_string());
        }
    }
    if let Some(a) = &doc.audits {
        if let Some(g) = &a.g_map {
            if !(g.exactness_ok && g.k_in_kernel_ok && g.image_in_multiplier_ok) {
                out.push("g-map exactness or kernel check failed".into());
            }
            if g.dim_m_cover != g.dim_m {
                out.push("multiplier inside the extension has the wrong dimension".into());
            }
        }
        if let Some(s) = &a.stem_class3 {
            if !s.check.ok {
                out.push(format!("stem class-3 inequality fails: {} > {}", s.check.lhs, s.check.rhs));
            }
        }
        if let Some(c) = &a.gamma2_lower_bound {
            if !c.ok {
                out.push(format!("d − 2 = {} exceeds dim Im γ'_2 = {}", c.d - 2, c.dim_im_gamma2));
            }
        }
        if !a.derived_by_central_quotient.ok {
            out.push("dim L² exceeds C(dim L/Z, 2)".into());
        }
        for q in &a.quotient_inequalities {
            if !q.check.ok {
                out.push(format!(
                    "quotient inequality fails for {}: {} > {}",
                    q.ideal, q.check.lhs, q.check.rhs
                ));
            }
        }
    }
    out
}

pub fn family_name(f: Family) -> &'static str {
    match f {
        Family::HeisenbergPlusAbelian => "H1_plus_abelian",
        Family::L58 => "L_5_8",
        Family::L626 => "L_6_26",
        Family::None => "none",
    }
}

pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Strict => "strict",
        Verdict::Attained => "attained",
        Verdict::Violated => "violated",
    }
}

pub fn render_structure(r: &StructureReport) -> String {
    let mut s = format!(
        "n = {}, m = {}, class {}, lower central dims {:?}, dim Z = {}, t = {}, d = {}",
        r.n, r.m, r.class, r.lcs_dims, r.z_dim, r.t, r.d
    );
    if r.is_stem {
        s.push_str("; stem");
    }
    if let Some(rank) = r.heisenberg_rank {
        let _ = write!(s, "; generalized Heisenberg of rank {rank}");
    }
    s
}

pub fn render_bounds(bounds: &[BoundReport], out: &mut String) {
    for b in bounds {
        let _ = writeln!(
            out,
            "  {:<11} bound {:>3}  dim M {:>3}  {}",
            b.bound_name.as_str(),
            b.bound_value,
            b.dim_m,
            verdict_name(b.verdict)
        );
    }
}

pub fn render_classification(c: &AttainerVerdict) -> String {
    format!(
        "{}; family {}; {}",
        if c.attains_general_bound {
            "attains the general bound"
        } else {
            "does not attain the general bound"
        },
        family_name(c.family),
        if c.consistent_with_classification {
            "consistent with the known attainers"
        } else {
            "INCONSISTENT with the known attainers"
        }
    )
}

pub fn render_gamma(g: &GammaReport, out: &mut String) {
    let mark = |ok: bool| if ok { "ok" } else { "FAILED" };
    let _ = writeln!(
        out,
        "  dim Im γ_L = {}, dim Im γ'_2 = {}, dim Im γ'_3 = {}, dim Im τ'_2 = {}",
        g.dim_im_gamma_l, g.dim_im_gamma2, g.dim_im_gamma3, g.tau2_dim
    );
    let _ = writeln!(
        out,
        "  dim L∧L = {}, dim L^ab∧L^ab = {}, kernel sum = {}",
        g.dim_wedge, g.dim_wedge_abelianization, g.sum_ker_alpha
    );
    let _ = writeln!(
        out,
        "  γ_L bound {} <= {}: {}",
        g.gamma_l_bound.lhs,
        g.gamma_l_bound.rhs,
        mark(g.gamma_l_bound.ok)
    );
    let _ = writeln!(
        out,
        "  γ'_2 bound {} <= {}: {}",
        g.gamma2_bound.lhs,
        g.gamma2_bound.rhs,
        mark(g.gamma2_bound.ok)
    );
    let _ = writeln!(
        out,
        "  Im τ'_2 ⊆ Im γ_L: {}; split: {}; projection: {}",
        mark(g.tau2_contained),
        mark(g.split_holds),
        mark(g.projection_matches)
    );
}

pub fn render_audits(a: &AuditSection, out: &mut String) {
    let mark = |ok: bool| if ok { "ok" } else { "FAILED" };
    let _ = writeln!(out, "  dim M via the extension = {}", a.dim_m_via_cover);
    match a.dim_im_gamma3 {
        Some(d) => {
            let _ = writeln!(out, "  γ'_3 image: {d}");
        }
        None => {
            let _ = writeln!(out, "  γ'_3 image: undefined below class 3 (use --lenient to report 0)");
        }
    }
    if let Some(g) = &a.g_map {
        let _ = writeln!(
            out,
            "  g map: dim Im g = {}, dim ker g = {}, exactness {}, K ⊆ ker g {}",
            g.dim_im_g,
            g.dim_ker_g,
            mark(g.exactness_ok),
            mark(g.k_in_kernel_ok)
        );
    }
    if let Some(s) = &a.stem_class3 {
        let _ = writeln!(
            out,
            "  stem class 3: {} <= {}: {}",
            s.check.lhs,
            s.check.rhs,
            mark(s.check.ok)
        );
    }
    if let Some(c) = &a.gamma2_lower_bound {
        let _ = writeln!(
            out,
            "  d − 2 = {} <= dim Im γ'_2 = {}: {}",
            c.d - 2,
            c.dim_im_gamma2,
            mark(c.ok)
        );
    }
    if let Some(r) = &a.derived_line {
        let _ = writeln!(
            out,
            "  one-dimensional L²: H({}) ⊕ abelian, predicted dim M = {}",
            r.k, r.predicted_dim_m
        );
    }
    let c = &a.derived_by_central_quotient;
    let _ = writeln!(
        out,
        "  dim L² = {} <= C({}, 2) = {}: {}",
        c.m,
        c.central_quotient_dim,
        c.bound,
        mark(c.ok)
    );
    for q in &a.quotient_inequalities {
        let _ = writeln!(
            out,
            "  quotient by {}: {} <= {}: {}",
            q.ideal,
            q.check.lhs,
            q.check.rhs,
            mark(q.check.ok)
        );
    }
}

/// Human-readable rendering of a full document.
pub fn render_document(doc: &AnalysisDocument, cover_text: Option<&str>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", doc.name);
    let _ = writeln!(out, "structure: {}", render_structure(&doc.structure));
    let m = &doc.multiplier.result;
    let _ = writeln!(out, "multiplier: dim M(L) = {}, dim L∧L = {}", m.dim_m, m.dim_wedge);
    if doc.structure.is_abelian() {
        let n = doc.structure.n;
        let _ = writeln!(
            out,
            "note: abelian algebra; dim M(L) = n(n-1)/2 = {} and the bounds need a non-abelian algebra",
            n * n.saturating_sub(1) / 2
        );
    } else {
        let _ = writeln!(out, "bounds:");
        render_bounds(&doc.bounds, &mut out);
    }
    let _ = writeln!(out, "classification: {}", render_classification(&doc.classification));
    if let Some(text) = cover_text {
        let _ = writeln!(out, "cover:");
        for line in text.lines() {
            let _ = writeln!(out, "  {line}");
        }
    }
    if let Some(g) = &doc.gamma {
        let _ = writeln!(out, "gamma maps:");
        render_gamma(g, &mut out);
    }
    if let Some(a) = &doc.audits {
        let _ = writeln!(out, "audits:");
        render_audits(a, &mut out);
    }
    out
}

/// Symbol number (1-based) of a 1-based pair.
pub fn symbol_number(n: usize, pair: [usize; 2]) -> usize {
    pair_index(n, pair[0] - 1, pair[1] - 1) + 1
}
