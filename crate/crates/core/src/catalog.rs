//! Named algebras, a `+`-separated direct-sum expression language, and the
//! regression corpus.
//!
//! Accepted names: `A(n)`, `H(m)`, `L5_7`, `L5_8` (alias `L(4,5,2,4)`),
//! `L5_9`, `L6_26`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Rational};
use crate::liealg::LieAlgebra;

type Sparse<'a> = &'a [crate::liealg::SparseBracket<'a>];

const L5_7: Sparse = &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (1, 4, &[(5, 1)])];
const L5_8: Sparse = &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)])];
const L5_9: Sparse = &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (2, 3, &[(5, 1)])];
const L6_26: Sparse = &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)]), (2, 3, &[(6, 1)])];

pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian(n)
}

/// `H(m)`: `[x_{2i−1}, x_{2i}] = x_{2m+1}` for `i = 1..m`.
pub fn heisenberg(m: usize) -> Result<LieAlgebra> {
    if m == 0 {
        return Err(Error::BadParameter("H(m) needs m ≥ 1".into()));
    }
    let z = 2 * m + 1;
    let coef = [(z, 1)];
    let brackets: Vec<crate::liealg::SparseBracket> =
        (1..=m).map(|i| (2 * i - 1, 2 * i, &coef[..])).collect();
    LieAlgebra::from_sparse(z, &brackets)
}

fn parameter(name: &str, prefix: &str) -> Option<Result<usize>> {
    let inner = name.strip_prefix(prefix)?.strip_suffix(')')?;
    Some(
        inner
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::BadParameter(format!("`{inner}` is not a non-negative integer"))),
    )
}

pub fn get_named(name: &str) -> Result<LieAlgebra> {
    let name = name.trim();
    if let Some(n) = parameter(name, "A(") {
        let n = n?;
        if n == 0 {
            return Err(Error::BadParameter("A(n) needs n ≥ 1".into()));
        }
        return Ok(abelian(n));
    }
    if let Some(m) = parameter(name, "H(") {
        return heisenberg(m?);
    }
    let (dim, table) = match name {
        "L5_7" => (5, L5_7),
        "L5_8" | "L(4,5,2,4)" => (5, L5_8),
        "L5_9" => (5, L5_9),
        "L6_26" => (6, L6_26),
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    LieAlgebra::from_sparse(dim, table)
}

/// Left fold of direct sums over `+`-separated names, e.g. `L5_8+A(1)`.
///
/// `+` inside parentheses does not split, so `L(4,5,2,4)` is one term.
pub fn parse_spec(expr: &str) -> Result<LieAlgebra> {
    let mut terms = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (pos, ch) in expr.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth = depth.checked_sub(1).ok_or_else(|| Error::Parse {
                    position: pos,
                    message: "unbalanced `)`".into(),
                })?
            }
            '+' if depth == 0 => {
                terms.push((start, &expr[start..pos]));
                start = pos + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse {
            position: expr.len(),
            message: "unclosed `(`".into(),
        });
    }
    terms.push((start, &expr[start..]));

    let mut result: Option<LieAlgebra> = None;
    for (offset, term) in terms {
        if term.trim().is_empty() {
            return Err(Error::Parse {
                position: offset,
                message: "empty term".into(),
            });
        }
        let position = offset + (term.len() - term.trim_start().len());
        let algebra = get_named(term).map_err(|e| Error::Parse {
            position,
            message: e.to_string(),
        })?;
        result = Some(match result {
            None => algebra,
            Some(acc) => acc.direct_sum(&algebra),
        });
    }
    Ok(result.expect("at least one term"))
}

/// Known invariants of a catalog entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub dim_m: usize,
    pub class: usize,
    pub m: usize,
    /// Where the multiplier value comes from.
    pub note: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    /// A `parse_spec` expression.
    pub name: String,
    pub expected: Option<Expected>,
}

impl CatalogEntry {
    pub fn build(&self) -> LieAlgebra {
        parse_spec(&self.name).expect("catalog names parse")
    }
}

fn entry(name: String, dim_m: usize, class: usize, m: usize, note: &'static str) -> CatalogEntry {
    CatalogEntry {
        name,
        expected: Some(Expected {
            dim_m,
            class,
            m,
            note,
        }),
    }
}

/// The catalog in a fixed order.
pub fn list_all() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push(entry(format!("A({n})"), n * (n - 1) / 2, 1, 0, "abelian: n(n-1)/2"));
    }
    out.push(entry("H(1)".into(), 2, 2, 1, "Heisenberg of dimension 3"));
    for m in 2..=4 {
        out.push(entry(format!("H({m})"), 2 * m * m - m - 1, 2, 1, "Heisenberg: 2m^2-m-1"));
    }
    for k in 1..=4 {
        let n = k + 3;
        out.push(entry(
            format!("H(1)+A({k})"),
            (n - 1) * (n - 2) / 2 + 1,
            2,
            1,
            "m = 1 attainer: (n-1)(n-2)/2+1",
        ));
    }
    out.push(entry("H(2)+A(1)".into(), 9, 2, 1, "direct sum: 5 + 0 + 4"));
    out.push(entry("L5_7".into(), 3, 4, 3, "filiform, worked by hand"));
    out.push(entry("L5_8".into(), 6, 2, 2, "m = 2 attainer"));
    out.push(entry("L5_9".into(), 3, 3, 3, "class three, worked by hand"));
    out.push(entry("L6_26".into(), 8, 2, 3, "cover with 15 symbols, 4 relations"));
    out.push(entry("L5_8+A(1)".into(), 9, 2, 2, "direct sum: 6 + 0 + 3"));
    out
}

/// Expressions of the regression corpus: abelian algebras up to dimension 6,
/// `H(1..3)`, `H(1) ⊕ A(1..4)`, the four five- and six-dimensional named
/// algebras, `L5_8 ⊕ A(1)` and `H(2) ⊕ A(1)`.
pub fn corpus_names() -> Vec<String> {
    let mut names: Vec<String> = (1..=6).map(|n| format!("A({n})")).collect();
    names.extend((1..=3).map(|m| format!("H({m})")));
    names.extend((1..=4).map(|k| format!("H(1)+A({k})")));
    names.extend(
        ["L5_7", "L5_8", "L5_9", "L6_26", "L5_8+A(1)", "H(2)+A(1)"]
            .into_iter()
            .map(String::from),
    );
    names
}

pub fn corpus() -> Vec<(String, LieAlgebra)> {
    corpus_names()
        .into_iter()
        .map(|name| {
            let algebra = parse_spec(&name).expect("corpus names parse");
            (name, algebra)
        })
        .collect()
}

/// A random invertible matrix with entries `p/q`, `|p| ≤ 3`, `1 ≤ q ≤ 3`.
pub fn random_invertible_matrix<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Matrix {
    loop {
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| Rational::new(rng.gen_range(-3..=3).into(), rng.gen_range(1..=3).into()))
                    .collect()
            })
            .collect();
        let candidate = Matrix::from_rows(n, rows).expect("square");
        if candidate.rank() == n {
            return candidate;
        }
    }
}

/// `l` rewritten in a random basis.
pub fn random_basis_change<R: Rng + ?Sized>(l: &LieAlgebra, rng: &mut R) -> LieAlgebra {
    let p = random_invertible_matrix(l.dim(), rng);
    l.change_basis(&p).expect("invertible change of basis")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplier::multiplier_dim;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn named_algebras() {
        let a = get_named("A(4)").unwrap();
        assert_eq!((a.dim(), a.is_abelian()), (4, true));
        let h = get_named("H(2)").unwrap();
        let r = h.structure_report();
        assert_eq!((r.n, r.m, r.z_dim), (5, 1, 1));
        assert_eq!(h.center(), h.derived());
        let l = get_named("L6_26").unwrap();
        assert_eq!(l.brackets().len(), 3);
        assert_eq!(get_named("L(4,5,2,4)").unwrap(), get_named("L5_8").unwrap());
    }

    #[test]
    fn named_errors() {
        assert_eq!(get_named("L7_1"), Err(Error::UnknownName("L7_1".into())));
        assert!(matches!(get_named("A(0)"), Err(Error::BadParameter(_))));
        assert!(matches!(get_named("H(0)"), Err(Error::BadParameter(_))));
        assert!(matches!(get_named("H(x)"), Err(Error::BadParameter(_))));
    }

    #[test]
    fn expressions() {
        let l = parse_spec("H(1)+A(1)").unwrap();
        assert_eq!((l.dim(), multiplier_dim(&l)), (4, 4));
        let l = parse_spec("L5_8+A(1)").unwrap();
        assert_eq!(l.structure_report().t, 1);
        assert_eq!(parse_spec("A(2)+A(3)").unwrap(), abelian(5));
        assert_eq!(parse_spec(" L(4,5,2,4) + A(1) ").unwrap(), l);
    }

    #[test]
    fn expression_errors_carry_positions() {
        assert!(matches!(parse_spec("A(2)++A(1)"), Err(Error::Parse { position: 5, .. })));
        assert!(matches!(parse_spec("A(2)+Q"), Err(Error::Parse { position: 5, .. })));
        assert!(matches!(parse_spec(""), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(parse_spec("A(2"), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(parse_spec("A2)"), Err(Error::Parse { position: 2, .. })));
    }

    #[test]
    fn every_expected_value_matches() {
        for e in list_all() {
            let l = e.build();
            let x = e.expected.as_ref().unwrap();
            let r = l.structure_report();
            assert_eq!(multiplier_dim(&l), x.dim_m, "{}", e.name);
            assert_eq!((r.class, r.m), (x.class, x.m), "{}", e.name);
        }
    }

    #[test]
    fn catalog_contains_key_entries() {
        let all = list_all();
        let dim = |name: &str| {
            all.iter()
                .find(|e| e.name == name)
                .and_then(|e| e.expected.as_ref())
                .map(|x| x.dim_m)
        };
        assert_eq!(dim("L6_26"), Some(8));
        assert_eq!(dim("L5_9"), Some(3));
        assert_eq!(dim("H(3)"), Some(14));
    }

    #[test]
    fn random_basis_changes_are_invertible() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let l = get_named("L5_9").unwrap();
        for _ in 0..5 {
            let p = random_invertible_matrix(5, &mut rng);
            assert!(p.inverse().is_ok());
            let q = random_basis_change(&l, &mut rng);
            assert_eq!(q.structure_report(), l.structure_report());
        }
    }
}
