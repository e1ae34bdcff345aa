//! Command line front end. `run` returns the full output so that the binary
//! and the tests share one code path.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use serde_json::json;

use crate::combinatorics::{GrassPerm, Subset};
use crate::error::{Error, Result};
use crate::ideal::{degree2_dimension, matching_field_generators};
use crate::matching_field::MatchingField;
use crate::polytope::{f_vector, polytope_vertices};
use crate::schubert::{
    classify_bruteforce, classify_closed_form, percent_toric, render_table, summary_counts,
    toric_table,
};
use crate::tableau::{classify2, normalize2, swap_sequence, Tableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
    Paper,
}

#[derive(Debug, Parser)]
#[command(
    name = "matchfield",
    version,
    about = "Block diagonal matching fields for Gr(k, n)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "tsv")]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Field {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub ell: usize,
}

impl Field {
    fn build(&self) -> Result<MatchingField> {
        MatchingField::new(self.k, self.n, self.ell)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that the weight matrix induces the matching field.
    Coherence(Field),
    /// Plücker weight of every subset.
    Weights(Field),
    /// Canonical two-column tableau row-wise equal to columns I, J.
    Normalize {
        #[command(flatten)]
        field: Field,
        i: String,
        j: String,
    },
    /// Swap sequence between two row-wise equal tableaux.
    Swaps {
        #[command(flatten)]
        field: Field,
        t: String,
        t2: String,
    },
    /// Quadratic binomial generators of the matching field ideal.
    Generators(Field),
    /// Dimension of the degree-two piece of the matching field algebra.
    Dim2(Field),
    /// Zero / toric / non-toric classification for a Grassmannian permutation.
    Classify {
        #[command(flatten)]
        field: Field,
        #[arg(long)]
        w: String,
    },
    /// Toric permutations per field, the zero set, and summary counts.
    Tables {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Only the permutation rows, in digit-string notation.
        #[arg(long)]
        paper_format: bool,
    },
    /// f-vector of the matching field polytope.
    Fvector(Field),
    /// Vertices of the matching field polytope, one 0/1 grid per line.
    Vertices(Field),
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("json values serialize") + "\n"
}

fn parse_subset(text: &str, n: usize) -> Result<Subset> {
    Subset::parse(text, n).map_err(|e| Error::Parse(e.to_string()))
}

pub fn run(cli: &Cli) -> Result<String> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Coherence(f) => {
            let mf = f.build()?;
            let violations = mf.verify_coherence();
            Ok(if json {
                pretty(json!({
                    "coherent": violations.is_empty(),
                    "violations": violations
                        .iter()
                        .map(|v| json!({"subset": v.subset.entries(), "reason": v.reason}))
                        .collect_vec(),
                }))
            } else if violations.is_empty() {
                "OK\n".into()
            } else {
                lines(
                    violations
                        .iter()
                        .map(|v| format!("{}\t{}", v.subset, v.reason)),
                )
            })
        }
        Command::Weights(f) => {
            let w = f.build()?.weight_vector()?;
            Ok(if json {
                pretty(json!(w
                    .iter()
                    .map(|(s, x)| json!({"subset": s.entries(), "weight": x}))
                    .collect_vec()))
            } else {
                lines(w.iter().map(|(s, x)| format!("{s}\t{x}")))
            })
        }
        Command::Normalize { field, i, j } => {
            let mf = field.build()?;
            let (i, j) = (parse_subset(i, mf.n())?, parse_subset(j, mf.n())?);
            let (a, b) = normalize2(&mf, &i, &j)?;
            let class = classify2(&mf, &a, &b)
                .ok_or_else(|| Error::Check(format!("normal form {a},{b} is not canonical")))?;
            let t = Tableau::new(mf, vec![a, b])?;
            Ok(if json {
                pretty(json!({"tableau": t.grid(), "class": class.to_string()}))
            } else {
                format!("{t}\t{class}\n")
            })
        }
        Command::Swaps { field, t, t2 } => {
            let mf = field.build()?;
            let (t, t2) = (Tableau::parse(mf, t)?, Tableau::parse(mf, t2)?);
            let d = swap_sequence(&t, &t2)?;
            Ok(if json {
                pretty(json!({
                    "steps": d.steps.iter().map(|s| json!({
                        "columns": [s.columns.0 + 1, s.columns.1 + 1],
                        "rows": s.rows,
                        "before": s.before.to_string(),
                        "after": s.after.to_string(),
                    })).collect_vec(),
                    "bound": d.bound,
                }))
            } else {
                lines(d.steps.iter().map(|s| s.to_string()))
            })
        }
        Command::Generators(f) => {
            let gens = matching_field_generators(&f.build()?)?;
            Ok(if json {
                pretty(serde_json::to_value(&gens).expect("binomials serialize"))
            } else {
                lines(gens.iter().map(|b| b.to_string()))
            })
        }
        Command::Dim2(f) => Ok(format!("{}\n", degree2_dimension(&f.build()?))),
        Command::Classify { field, w } => {
            let mf = field.build()?;
            let w = GrassPerm(parse_subset(w, mf.n())?);
            let c = classify_bruteforce(&mf, &w)?;
            let closed = classify_closed_form(&mf, &w)?;
            if c.tag != closed.tag {
                return Err(Error::Check(format!(
                    "substitution gives {}, closed form gives {}",
                    c.tag, closed.tag
                )));
            }
            Ok(if json {
                pretty(json!({"tag": c.tag.to_string(), "detail": c.to_string()}))
            } else {
                format!("{c}\n")
            })
        }
        Command::Tables { k, n, paper_format } => {
            let (k, n) = (*k, *n);
            let paper = *paper_format || cli.format == Format::Paper;
            if paper && n > 9 {
                return Err(Error::Domain("digit-string notation needs n <= 9".into()));
            }
            let rows = toric_table(k, n)?;
            if paper {
                return Ok(render_table(&rows));
            }
            let counts = summary_counts(k, n)?;
            let percent = percent_toric(k, n)?;
            Ok(if json {
                pretty(json!({
                    "rows": rows.iter().map(|r| json!({
                        "label": r.label,
                        "permutations": r.perms.iter().map(|w| w.entries()).collect_vec(),
                    })).collect_vec(),
                    "toric": counts.toric,
                    "zero": counts.zero,
                    "nontoric": counts.nontoric,
                    "percent_toric": percent,
                }))
            } else {
                let mut out: String = rows
                    .iter()
                    .map(|r| format!("{}\t{}\n", r.label, r.perms.iter().join(" ")))
                    .collect();
                out += "\nk\tn\ttoric\tzero\tnontoric\tpercent_toric\n";
                out += &format!(
                    "{k}\t{n}\t{}\t{}\t{}\t{percent}\n",
                    counts.toric, counts.zero, counts.nontoric
                );
                out
            })
        }
        Command::Fvector(f) => {
            let fv = f_vector(&polytope_vertices(&f.build()?))?;
            Ok(if json {
                pretty(json!(fv.0))
            } else {
                format!("{fv}\n")
            })
        }
        Command::Vertices(f) => {
            let v = polytope_vertices(&f.build()?);
            Ok(lines(v.iter().map(|p| p.to_string())))
        }
    }
}

/// Reads `MATCHFIELD_WORKERS`; `None` when unset.
pub fn workers_from_env() -> Result<Option<usize>> {
    match std::env::var("MATCHFIELD_WORKERS") {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Error::Parse(format!(
                "MATCHFIELD_WORKERS must be a positive integer, got {v:?}"
            ))),
        },
    }
}
