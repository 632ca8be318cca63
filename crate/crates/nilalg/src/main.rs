//! Command-line front end: classification runs, verification reports,
//! cohomology and automorphism computations, isomorphism tests, and catalog
//! lookups, all over JSON files in the crate's algebra format.
//!
//! Exit codes: 0 on success, 2 on malformed input or guard violations;
//! `iso` uses 0 for isomorphic, 1 for not isomorphic, 2 for input errors.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use nilalg::algebra::{Algebra, AlgebraJson};
use nilalg::classify::{records_markdown, RecordJson};
use nilalg::field::{make_field, FieldSpec};
use nilalg::orbits::automorphism_group;

#[derive(Parser)]
#[command(name = "nilalg", version, about = "classify nilpotent associative algebras over small finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Classify all nilpotent algebras of a dimension over F_{p^m}.
    Classify {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Restrict to commutative algebras (required for dimension 4).
        #[arg(long)]
        commutative: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write the output to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify and compare the result against the catalog presentations.
    Verify {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long)]
        commutative: bool,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Cocycle, coboundary and cohomology dimensions of an algebra file.
    Cohomology {
        #[arg(long)]
        algebra: PathBuf,
        /// Print only the symmetric variant.
        #[arg(long)]
        symmetric: bool,
    },
    /// Automorphism group of an algebra file.
    Aut {
        #[arg(long)]
        algebra: PathBuf,
        /// Also print the full element list when it was enumerated.
        #[arg(long)]
        full: bool,
    },
    /// Test two algebra files for isomorphism.
    Iso {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Print a catalog presentation as an algebra file.
    Catalog {
        #[arg(long)]
        name: String,
        /// Parameter assignments, e.g. --param alpha=2.
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Driver-level guard: the classification tooling targets tiny fields.
fn load_field(p: u32, m: u32) -> Result<FieldSpec, String> {
    let field = make_field(p, m).map_err(|e| e.to_string())?;
    if field.q() > 9 {
        return Err(format!("field order {} exceeds the supported bound of 9", field.q()));
    }
    Ok(field)
}

fn load_algebra(path: &PathBuf) -> Result<Algebra, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    let json: AlgebraJson = serde_json::from_str(&text)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    load_field(json.field.p, json.field.m)?;
    let algebra = json.to_algebra().map_err(|e| e.to_string())?;
    if !algebra.is_associative() {
        return Err(format!("{}: algebra is not associative", path.display()));
    }
    Ok(algebra)
}

#[derive(Serialize)]
struct ClassifyOutput {
    dim: usize,
    field: nilalg::algebra::FieldJson,
    commutative: bool,
    count: usize,
    records: Vec<RecordJson>,
}

#[derive(Serialize)]
struct CohomologyBlock {
    #[serde(rename = "dimZ2")]
    dim_z2: usize,
    #[serde(rename = "dimB2")]
    dim_b2: usize,
    #[serde(rename = "dimH2")]
    dim_h2: usize,
    h2_reps: Vec<Vec<Vec<u32>>>,
}

#[derive(Serialize)]
struct CohomologyOutput {
    #[serde(flatten)]
    full: CohomologyBlock,
    symmetric: CohomologyBlock,
}

fn matrix_to_ints(m: &nilalg::linalg::Matrix) -> Vec<Vec<u32>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|e| e.0).collect())
        .collect()
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Classify { dim, p, m, commutative, format, out } => {
            let field = load_field(p, m)?;
            let records =
                nilalg::classify(dim, &field, commutative).map_err(|e| e.to_string())?;
            let text = match format {
                Format::Json => {
                    let output = ClassifyOutput {
                        dim,
                        field: nilalg::algebra::FieldJson { p, m },
                        commutative,
                        count: records.len(),
                        records: records.iter().map(|r| r.to_json()).collect(),
                    };
                    serde_json::to_string_pretty(&output).expect("serialisable") + "\n"
                }
                Format::Md => records_markdown(&records),
            };
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| format!("{}: {e}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { dim, p, m, commutative, format } => {
            let field = load_field(p, m)?;
            let report = nilalg::verify(dim, &field, commutative).map_err(|e| e.to_string())?;
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&report).expect("serialisable"))
                }
                Format::Md => print!("{report}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cohomology { algebra, symmetric } => {
            let a = load_algebra(&algebra)?;
            let h = nilalg::h2(&a);
            let sym_block = CohomologyBlock {
                dim_z2: h.dim_sym_z2(),
                dim_b2: h.dim_sym_b2(),
                dim_h2: h.dim_sym_h2(),
                h2_reps: h.sym_h2_reps.iter().map(|c| matrix_to_ints(c.matrix())).collect(),
            };
            let text = if symmetric {
                serde_json::to_string_pretty(&sym_block).expect("serialisable")
            } else {
                let output = CohomologyOutput {
                    full: CohomologyBlock {
                        dim_z2: h.dim_z2(),
                        dim_b2: h.dim_b2(),
                        dim_h2: h.dim_h2(),
                        h2_reps: h.h2_reps.iter().map(|c| matrix_to_ints(c.matrix())).collect(),
                    },
                    symmetric: sym_block,
                };
                serde_json::to_string_pretty(&output).expect("serialisable")
            };
            println!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Aut { algebra, full } => {
            let a = load_algebra(&algebra)?;
            let aut = automorphism_group(&a).map_err(|e| e.to_string())?;
            let order = u64::try_from(aut.order)
                .map_err(|_| "automorphism group order does not fit in 64 bits".to_string())?;
            let mut output = serde_json::Map::new();
            output.insert("order".into(), order.into());
            output.insert(
                "generators".into(),
                serde_json::to_value(
                    aut.generators.iter().map(|g| matrix_to_ints(g.matrix())).collect::<Vec<_>>(),
                )
                .expect("serialisable"),
            );
            if full {
                match &aut.elements {
                    Some(els) => {
                        output.insert(
                            "elements".into(),
                            serde_json::to_value(
                                els.iter().map(|g| matrix_to_ints(g.matrix())).collect::<Vec<_>>(),
                            )
                            .expect("serialisable"),
                        );
                    }
                    None => {
                        return Err(
                            "the full element list was not enumerated for this group".to_string()
                        )
                    }
                }
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::Value::Object(output))
                    .expect("serialisable")
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Iso { a, b } => {
            let left = load_algebra(&a)?;
            let right = load_algebra(&b)?;
            if left.field() != right.field() {
                return Err("the two algebras live over different fields".to_string());
            }
            let witness =
                nilalg::are_isomorphic(&left, &right).map_err(|e| e.to_string())?;
            match witness {
                Some(p) => {
                    let out = serde_json::json!({
                        "isomorphic": true,
                        "witness": matrix_to_ints(&p),
                    });
                    println!("{}", serde_json::to_string_pretty(&out).expect("serialisable"));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    let out = serde_json::json!({ "isomorphic": false });
                    println!("{}", serde_json::to_string_pretty(&out).expect("serialisable"));
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Catalog { name, params, p, m } => {
            let field = load_field(p, m)?;
            let mut map = BTreeMap::new();
            for spec in &params {
                let (key, value) = spec
                    .split_once('=')
                    .ok_or_else(|| format!("expected KEY=VALUE, got `{spec}`"))?;
                let value: u32 = value
                    .parse()
                    .map_err(|_| format!("parameter value `{value}` is not an integer"))?;
                if value >= field.q() {
                    return Err(format!(
                        "parameter encoding {value} out of range for field of order {}",
                        field.q()
                    ));
                }
                map.insert(key.to_string(), field.element(value));
            }
            let algebra = nilalg::catalog::build(&name, &map, &field).map_err(|e| e.to_string())?;
            println!(
                "{}",
                serde_json::to_string_pretty(&algebra.to_json()).expect("serialisable")
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}
