//! Command line front end: Schubert polynomials, theta/eta expansions,
//! transition trees, splitting formulas, and degeneracy locus formulas,
//! with text, JSON, and LaTeX output.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use schubert_core::error::Error;
use schubert_core::formal::{eta_formal, theta_formal};
use schubert_core::locus::{emit_locus, rank_conditions};
use schubert_core::mpoly::MPoly;
use schubert_core::nilcox::double_schubert;
use schubert_core::polyring::mixed_to_mpoly;
use schubert_core::shapes::{KIndex, LieType, Shape};
use schubert_core::split::{split_formula, split_terms, SplitProblem};
use schubert_core::transition::{stanley_coeffs, transition_tree, TreeKind};
use schubert_core::weyl::{Group, SignedPermutation};

#[derive(Parser)]
#[command(name = "schubert", version, about = "Exact Schubert calculus for the classical groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TypeArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "D", alias = "d")]
    D,
}

impl TypeArg {
    fn lie(self) -> LieType {
        match self {
            TypeArg::A => LieType::A,
            TypeArg::B => LieType::B,
            TypeArg::C => LieType::C,
            TypeArg::D => LieType::D,
        }
    }

    fn group(self) -> Group {
        match self {
            TypeArg::A => Group::A,
            TypeArg::B | TypeArg::C => Group::BC,
            TypeArg::D => Group::D,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Double Schubert polynomial of a (signed) permutation.
    Schubert {
        #[arg(long = "type", value_enum)]
        lie_type: TypeArg,
        /// One-line notation, e.g. "3,-1,-2".
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        /// Number of x variables (defaults to the length of w).
        #[arg(long)]
        xvars: Option<usize>,
        /// Drop the z variables (single polynomial).
        #[arg(long)]
        single: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Theta polynomial of a k-strict partition.
    Theta {
        #[arg(long)]
        k: u32,
        /// Partition, e.g. "3,1,1".
        #[arg(long)]
        shape: String,
        /// Print the raising operator expansion in the abstract c symbols.
        #[arg(long)]
        formal: bool,
        /// Number of x variables for the concrete polynomial.
        #[arg(long)]
        xvars: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Eta polynomial of a typed k-strict partition.
    Eta {
        /// k, or "box".
        #[arg(long)]
        k: String,
        #[arg(long)]
        shape: String,
        /// Type tag in {0, 1, 2}.
        #[arg(long = "tag", default_value = "0")]
        tag: u8,
        #[arg(long)]
        formal: bool,
        #[arg(long)]
        xvars: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Transition tree of an element.
    Tree {
        #[arg(long = "type", value_enum)]
        lie_type: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        /// k, or "box" (ignored in type A).
        #[arg(long, default_value = "0")]
        k: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// (Mixed) Stanley coefficients of an element.
    Coeffs {
        #[arg(long = "type", value_enum)]
        lie_type: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, default_value = "0")]
        k: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Splitting formula for a double Schubert polynomial.
    Split {
        #[arg(long = "type", value_enum)]
        lie_type: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        /// Increasing sequence, e.g. "1,2" (entries may include "box").
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Degeneracy locus Chern class formula.
    Locus {
        #[arg(long = "type", value_enum)]
        lie_type: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Print the rank condition table instead of the formula.
        #[arg(long)]
        rank_table: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a verification suite.
    Verify {
        /// Suite name, or "all".
        #[arg(long)]
        suite: String,
        /// Size parameter (rank); default is the acceptance size.
        #[arg(long)]
        n: Option<u32>,
    },
}

fn parse_kindex(text: &str) -> Result<KIndex, Error> {
    if text == "box" || text == "B" {
        Ok(KIndex::Box)
    } else {
        text.parse::<u32>()
            .map(KIndex::K)
            .map_err(|_| Error::Validation(format!("bad k value '{text}'")))
    }
}

fn parse_seq(text: &str) -> Result<Vec<KIndex>, Error> {
    text.split(',').map(|s| parse_kindex(s.trim())).collect()
}

fn parse_parts(text: &str) -> Result<Vec<u32>, Error> {
    if text.trim().is_empty() || text.trim() == "-" {
        return Ok(vec![]);
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| Error::Validation(format!("bad part '{s}'")))
        })
        .collect()
}

/// Renders an MPoly in LaTeX, factoring out linear factors (y_i - z_j)
/// where possible.
fn latex_mpoly(p: &MPoly) -> String {
    let mut rest = p.clone();
    let mut factors: Vec<(usize, usize)> = Vec::new();
    let ys: Vec<usize> = p.vars.iter().enumerate().filter(|(_, v)| v.starts_with('y')).map(|(i, _)| i).collect();
    let zs: Vec<usize> = p.vars.iter().enumerate().filter(|(_, v)| v.starts_with('z')).map(|(i, _)| i).collect();
    loop {
        let mut found = false;
        for &yi in &ys {
            for &zj in &zs {
                let y = MPoly::var(p.vars.clone(), &p.vars[yi]).unwrap();
                let z = MPoly::var(p.vars.clone(), &p.vars[zj]).unwrap();
                let lin = y.sub(&z);
                if let Ok(q) = rest.div_exact(&lin) {
                    rest = q;
                    factors.push((yi, zj));
                    found = true;
                    break;
                }
            }
            if found {
                break;
            }
        }
        if !found {
            break;
        }
    }
    factors.sort();
    let mut out = String::new();
    for (yi, zj) in &factors {
        out.push_str(&format!("({}-{})", latex_var(&p.vars[*yi]), latex_var(&p.vars[*zj])));
    }
    if factors.is_empty() || rest != MPoly::one(p.vars.clone()) {
        out.push_str(&latex_sum(&rest));
    }
    out
}

fn latex_var(name: &str) -> String {
    let (head, idx) = name.split_at(1);
    format!("{head}_{idx}")
}

fn latex_sum(p: &MPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let text = p.to_string();
    // Convert x1 -> x_1 and * -> \, spacing.
    let mut out = String::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '*' => out.push_str("\\,"),
            'x' | 'y' | 'z' | 'X' | 'Y' | 'Z' => {
                let mut idx = String::new();
                while chars.peek().is_some_and(|d| d.is_ascii_digit()) {
                    idx.push(chars.next().unwrap());
                }
                if idx.is_empty() {
                    out.push(c);
                } else {
                    out.push_str(&format!("{c}_{{{idx}}}"));
                }
            }
            other => out.push(other),
        }
    }
    out
}

fn emit(output: &OutputArgs, text: String) -> Result<(), Error> {
    let data = if text.ends_with('\n') { text } else { format!("{text}\n") };
    match &output.out {
        None => {
            print!("{data}");
            std::io::stdout().flush().ok();
        }
        Some(path) => {
            std::fs::write(path, data).map_err(|e| Error::Internal(format!("write failed: {e}")))?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Schubert { lie_type, w, xvars, single, output } => {
            let w = SignedPermutation::parse(lie_type.group(), &w)?;
            let x_count = xvars.unwrap_or(w.length()).max(w.length());
            let poly = double_schubert(&w, lie_type.lie(), x_count, true, !single)?;
            let text = match output.format {
                Format::Text => poly.to_string(),
                Format::Json => poly.to_json().to_string(),
                Format::Latex => latex_mpoly(&poly),
            };
            emit(&output, text)
        }
        Command::Theta { k, shape, formal, xvars, output } => {
            let shape = Shape::untyped(parse_parts(&shape)?, k)?;
            if formal {
                let poly = theta_formal(&shape)?;
                let text = match output.format {
                    Format::Text => poly.render(),
                    Format::Json => poly.to_json().to_string(),
                    Format::Latex => poly.render(),
                };
                return emit(&output, text);
            }
            let m = xvars.unwrap_or(shape.weight() as usize);
            let mixed = schubert_core::polyring::theta_lambda_mixed(&shape)?;
            let poly = mixed_to_mpoly(&mixed, m);
            let text = match output.format {
                Format::Text => poly.to_string(),
                Format::Json => poly.to_json().to_string(),
                Format::Latex => latex_sum(&poly),
            };
            emit(&output, text)
        }
        Command::Eta { k, shape, tag, formal, xvars, output } => {
            let k = parse_kindex(&k)?;
            let shape = Shape::new(parse_parts(&shape)?, k, tag)?;
            if formal {
                let poly = eta_formal(&shape)?;
                let text = match output.format {
                    Format::Json => poly.to_json().to_string(),
                    _ => poly.render(),
                };
                return emit(&output, text);
            }
            let m = xvars.unwrap_or(shape.weight() as usize);
            let mixed = schubert_core::polyring::eta_lambda_mixed(&shape)?;
            let poly = mixed_to_mpoly(&mixed, m);
            let text = match output.format {
                Format::Json => poly.to_json().to_string(),
                Format::Latex => latex_sum(&poly),
                Format::Text => poly.to_string(),
            };
            emit(&output, text)
        }
        Command::Tree { lie_type, w, k, output } => {
            let w = SignedPermutation::parse(lie_type.group(), &w)?;
            let k = parse_kindex(&k)?;
            let kind = match lie_type {
                TypeArg::A => TreeKind::A,
                TypeArg::B | TypeArg::C => TreeKind::C,
                TypeArg::D => TreeKind::D,
            };
            let tree = transition_tree(&w, kind, k)?;
            let text = match output.format {
                Format::Json => tree.to_json().to_string(),
                Format::Latex => tree.to_dot(),
                Format::Text => {
                    let mut lines = vec![format!("root: {}", tree.root)];
                    for (leaf, shape) in &tree.leaves {
                        lines.push(format!("leaf: {} shape: {}", leaf, shape.text()));
                    }
                    lines.join("\n")
                }
            };
            emit(&output, text)
        }
        Command::Coeffs { lie_type, w, k, output } => {
            let w = SignedPermutation::parse(lie_type.group(), &w)?;
            let k = parse_kindex(&k)?;
            let kind = match lie_type {
                TypeArg::A => TreeKind::A,
                TypeArg::B | TypeArg::C => TreeKind::C,
                TypeArg::D => TreeKind::D,
            };
            let counts = stanley_coeffs(&w, kind, k)?;
            let text = match output.format {
                Format::Json => {
                    let entries: Vec<serde_json::Value> = counts
                        .iter()
                        .map(|(s, c)| serde_json::json!({"shape": s.to_json(), "count": c}))
                        .collect();
                    serde_json::Value::Array(entries).to_string()
                }
                _ => counts
                    .iter()
                    .map(|(s, c)| format!("{}  x{}", s.text(), c))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(&output, text)
        }
        Command::Split { lie_type, w, a, b, output } => {
            let w = SignedPermutation::parse(lie_type.group(), &w)?;
            let problem = SplitProblem::new(lie_type.lie(), w, parse_seq(&a)?, parse_seq(&b)?)?;
            let terms = split_terms(&problem)?;
            let text = match output.format {
                Format::Json => {
                    let entries: Vec<serde_json::Value> = terms
                        .iter()
                        .map(|t| {
                            serde_json::json!({
                                "coeff": t.coeff,
                                "shapes": t.shapes.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    serde_json::Value::Array(entries).to_string()
                }
                Format::Latex => {
                    let mixed = split_formula(&problem)?;
                    let poly = mixed_to_mpoly(&mixed, problem.w.length());
                    latex_sum(&poly)
                }
                Format::Text => {
                    let mut lines: Vec<String> = terms
                        .iter()
                        .map(|t| {
                            format!(
                                "{} * [{}]",
                                t.coeff,
                                t.shapes
                                    .iter()
                                    .map(|s| s.text())
                                    .collect::<Vec<_>>()
                                    .join(" ; ")
                            )
                        })
                        .collect();
                    lines.sort();
                    let mixed = split_formula(&problem)?;
                    let poly = mixed_to_mpoly(&mixed, problem.w.length());
                    lines.push(format!("= {poly}"));
                    lines.join("\n")
                }
            };
            emit(&output, text)
        }
        Command::Locus { lie_type, w, n, a, b, rank_table, output } => {
            let w = SignedPermutation::parse(lie_type.group(), &w)?;
            let a = parse_seq(&a)?;
            let b = parse_seq(&b)?;
            if rank_table {
                let table = rank_conditions(&w, lie_type.lie(), n, &a)?;
                let text = match output.format {
                    Format::Json => serde_json::json!(table).to_string(),
                    _ => table
                        .iter()
                        .map(|row| {
                            row.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
                        })
                        .collect::<Vec<_>>()
                        .join("\n"),
                };
                return emit(&output, text);
            }
            let formula = emit_locus(&w, lie_type.lie(), n, &a, &b)?;
            let text = match output.format {
                Format::Json => formula.to_json().to_string(),
                Format::Latex => formula.latex(),
                Format::Text => formula.latex(),
            };
            emit(&output, text)
        }
        Command::Verify { suite, n } => {
            let names: Vec<&str> = if suite == "all" {
                schubert_core::verify::suite_names()
            } else {
                schubert_core::verify::suite_names()
                    .into_iter()
                    .filter(|s| *s == suite)
                    .collect()
            };
            if names.is_empty() {
                return Err(Error::Validation(format!("unknown suite '{suite}'")));
            }
            let mut failed = false;
            for name in names {
                match schubert_core::verify::run_suite(name, n) {
                    Ok(detail) => println!("[{name}] PASS: {detail}"),
                    Err(msg) => {
                        println!("[{name}] FAIL: {msg}");
                        failed = true;
                    }
                }
            }
            if failed {
                Err(Error::Internal("verification suite failed".to_string()))
            } else {
                Ok(())
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::from(0),
        Err(Error::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(2)
        }
    }
}
