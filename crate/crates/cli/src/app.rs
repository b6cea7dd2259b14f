//! Command definitions and dispatch.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use nilschur::bounds::evaluate_bounds_with;
use nilschur::catalog;
use nilschur::multiplier::{cover_presentation, schur_multiplier_dim};
use nilschur::LieAlgebra;

use crate::error::{CliError, EXIT_INTERNAL, EXIT_OK};
use crate::file::{load_file, resolve, AlgebraFile};
use crate::report::{
    analyze, render_bounds, render_document, render_structure, verdict_name, violations,
    AnalysisDocument, CoverSection, Options,
};

#[derive(Debug, Parser)]
#[command(name = "nilschur", version, about = "Schur multipliers of nilpotent Lie algebras over Q")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Default, Args)]
pub struct Flags {
    /// Print JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// Include the cover presentation.
    #[arg(long)]
    pub cover: bool,
    /// Run the γ-map and quotient audits.
    #[arg(long)]
    pub audit: bool,
    /// Report γ'_3 as 0 below class 3 instead of leaving it undefined.
    #[arg(long)]
    pub lenient: bool,
}

impl Flags {
    fn options(self) -> Options {
        Options {
            cover: self.cover,
            audit: self.audit,
            lenient: self.lenient,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that the input is a nilpotent Lie algebra.
    Validate {
        /// Catalog expression such as `L5_8+A(1)`, or `@file.json`.
        spec: String,
        #[command(flatten)]
        flags: Flags,
    },
    /// Structure, multiplier, bounds and classification.
    Analyze {
        spec: String,
        #[command(flatten)]
        flags: Flags,
    },
    /// Multiplier dimension, optionally with the cover presentation.
    Multiplier {
        spec: String,
        #[command(flatten)]
        flags: Flags,
    },
    /// Upper bounds and their verdicts.
    Bounds {
        spec: String,
        #[command(flatten)]
        flags: Flags,
    },
    /// Full analysis with every audit enabled.
    Audit {
        spec: String,
        #[command(flatten)]
        flags: Flags,
    },
    /// List the catalog, or export it as algebra files.
    Catalog {
        /// Write one JSON file per entry into this directory.
        #[arg(long, value_name = "DIR")]
        export: Option<PathBuf>,
        #[command(flatten)]
        flags: Flags,
    },
    /// Analyze every `.json` file in a directory.
    Batch {
        dir: PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

/// Runs a parsed command, writing to `out` and `err`; returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    let io = |source| CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    };
    let text = match command {
        Command::Validate { spec, flags } => {
            let l = resolve(&spec)?;
            let r = l.structure_report();
            if flags.json {
                to_json(&serde_json::json!({ "valid": true, "structure": r })) + "\n"
            } else {
                format!("valid: {}\n", render_structure(&r))
            }
        }
        Command::Analyze { spec, flags } => return document(&spec, flags.options(), flags.json, out),
        Command::Audit { spec, flags } => {
            let opts = Options { audit: true, ..flags.options() };
            return document(&spec, opts, flags.json, out);
        }
        Command::Multiplier { spec, flags } => {
            let l = resolve(&spec)?;
            multiplier_text(&l, flags)?
        }
        Command::Bounds { spec, flags } => {
            let l = resolve(&spec)?;
            let result = schur_multiplier_dim(&l);
            let bounds = evaluate_bounds_with(&result.report, result.dim_m);
            let code = if bounds.iter().any(|b| b.verdict == nilschur::bounds::Verdict::Violated) {
                EXIT_INTERNAL
            } else {
                EXIT_OK
            };
            let text = if flags.json {
                to_json(&bounds) + "\n"
            } else if bounds.is_empty() {
                "abelian algebra: no bounds apply\n".to_string()
            } else {
                let mut s = String::new();
                render_bounds(&bounds, &mut s);
                s
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            return Ok(code);
        }
        Command::Catalog { export, flags } => catalog_text(export.as_deref(), flags)?,
        Command::Batch { dir, flags } => return batch(&dir, flags, out),
    };
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}

fn multiplier_text(l: &LieAlgebra, flags: Flags) -> Result<String, CliError> {
    let result = schur_multiplier_dim(l);
    let cover = if flags.cover { Some(cover_presentation(l)?) } else { None };
    Ok(if flags.json {
        let mut v = serde_json::to_value(&result).expect("serializable");
        if let Some(c) = &cover {
            v["cover"] = serde_json::to_value(CoverSection::from_presentation(c)).expect("serializable");
        }
        to_json(&v) + "\n"
    } else {
        let mut s = format!("dim M(L) = {}, dim L∧L = {}\n", result.dim_m, result.dim_wedge);
        if let Some(c) = &cover {
            s.push_str(&c.render());
        }
        s
    })
}

fn document(spec: &str, opts: Options, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let l = resolve(spec)?;
    let doc = analyze(spec, &l, opts)?;
    let text = if json {
        to_json(&doc) + "\n"
    } else {
        let cover = if opts.cover { Some(cover_presentation(&l)?.render()) } else { None };
        render_document(&doc, cover.as_deref())
    };
    out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })?;
    let found = violations(&doc);
    if found.is_empty() {
        Ok(EXIT_OK)
    } else {
        Err(CliError::Violation(found.join("; ")))
    }
}

/// File name for a catalog expression: `H(1)+A(2)` becomes `H_1_plus_A_2.json`.
pub fn export_file_name(name: &str) -> String {
    let mut s = String::new();
    for ch in name.chars() {
        let piece = match ch {
            '+' => "_plus_",
            c if c.is_ascii_alphanumeric() => {
                s.push(c);
                continue;
            }
            _ => "_",
        };
        for p in piece.chars() {
            if !(p == '_' && s.ends_with('_')) {
                s.push(p);
            }
        }
    }
    format!("{}.json", s.trim_end_matches('_'))
}

fn catalog_text(export: Option<&Path>, flags: Flags) -> Result<String, CliError> {
    let entries = catalog::list_all();
    if let Some(dir) = export {
        std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
            path: dir.to_path_buf(),
            source,
        })?;
        for e in &entries {
            let path = dir.join(export_file_name(&e.name));
            let text = to_json(&AlgebraFile::from_algebra(&e.build())) + "\n";
            std::fs::write(&path, text).map_err(|source| CliError::Io { path, source })?;
        }
    }
    Ok(if flags.json {
        let rows: Vec<_> = entries
            .iter()
            .map(|e| {
                let x = e.expected.as_ref();
                serde_json::json!({
                    "name": e.name,
                    "dim_M": x.map(|x| x.dim_m),
                    "class": x.map(|x| x.class),
                    "m": x.map(|x| x.m),
                    "note": x.map(|x| x.note),
                })
            })
            .collect();
        to_json(&rows) + "\n"
    } else {
        let mut s = String::new();
        for e in &entries {
            match &e.expected {
                Some(x) => s.push_str(&format!(
                    "{:<12} dim M = {:>2}  class {}  m = {}  ({})\n",
                    e.name, x.dim_m, x.class, x.m, x.note
                )),
                None => s.push_str(&format!("{}\n", e.name)),
            }
        }
        if let Some(dir) = export {
            s.push_str(&format!("exported {} files to {}\n", entries.len(), dir.display()));
        }
        s
    })
}

/// One line of the batch summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchRow {
    pub file: String,
    pub exit_code: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub document: Option<AnalysisDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn analyze_file(path: &Path, opts: Options) -> BatchRow {
    let file = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let outcome = load_file(path).and_then(|l| {
        let doc = analyze(&file, &l, opts)?;
        let found = violations(&doc);
        Ok((doc, found))
    });
    match outcome {
        Ok((doc, found)) if found.is_empty() => BatchRow {
            file,
            exit_code: EXIT_OK,
            document: Some(doc),
            error: None,
        },
        Ok((doc, found)) => {
            let e = CliError::Violation(found.join("; "));
            BatchRow {
                file,
                exit_code: e.exit_code(),
                document: Some(doc),
                error: Some(e.to_string()),
            }
        }
        Err(e) => BatchRow {
            file,
            exit_code: e.exit_code(),
            document: None,
            error: Some(e.to_string()),
        },
    }
}

/// Analyzes every `.json` file in `dir`, sorted by file name.
pub fn batch_rows(dir: &Path, opts: Options) -> Result<Vec<BatchRow>, CliError> {
    let read = std::fs::read_dir(dir).map_err(|source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut paths = Vec::new();
    for entry in read {
        let entry = entry.map_err(|source| CliError::Io {
            path: dir.to_path_buf(),
            source,
        })?;
        let path = entry.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "json") {
            paths.push(path);
        }
    }
    paths.sort();
    Ok(paths.par_iter().map(|p| analyze_file(p, opts)).collect())
}

fn batch(dir: &Path, flags: Flags, out: &mut dyn Write) -> Result<i32, CliError> {
    let rows = batch_rows(dir, flags.options())?;
    let code = rows.iter().map(|r| r.exit_code).max().unwrap_or(EXIT_OK);
    let text = if flags.json {
        to_json(&rows) + "\n"
    } else {
        let mut s = format!(
            "{:<28} {:>3} {:>3} {:>5} {:>5}  verdicts\n",
            "file", "n", "m", "class", "dim M"
        );
        for r in &rows {
            if let Some(doc) = &r.document {
                let st = &doc.structure;
                let verdicts: Vec<String> = doc
                    .bounds
                    .iter()
                    .map(|b| format!("{}={}", b.bound_name.as_str(), verdict_name(b.verdict)))
                    .collect();
                s.push_str(&format!(
                    "{:<28} {:>3} {:>3} {:>5} {:>5}  {}{}\n",
                    r.file,
                    st.n,
                    st.m,
                    st.class,
                    doc.multiplier.result.dim_m,
                    if verdicts.is_empty() { "abelian".to_string() } else { verdicts.join(" ") },
                    if doc.classification.consistent_with_classification { "" } else { " INCONSISTENT" }
                ));
            }
            if let Some(e) = &r.error {
                s.push_str(&format!("{:<28} error (exit {}): {e}\n", r.file, r.exit_code));
            }
        }
        let failed = rows.iter().filter(|r| r.exit_code != EXIT_OK).count();
        s.push_str(&format!("{} files, {} failed\n", rows.len(), failed));
        s
    };
    out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })?;
    Ok(code)
}
