//! The `moduli` command line.
//!
//! Reports are `key = value` lines. Exit status is 0 on success, 1 for usage
//! errors (bad flags, unreadable or malformed input) and 2 when the input is
//! well formed but violates a mathematical precondition.
//!
//! Binary form coefficients are given as `a_0,...,a_d`, where `a_i`
//! multiplies `X0^i X1^(d-i)`: ascending powers of `X0`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{Read, Write};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::error::Error;
use crate::exact_math::{format_rational, parse_point, BinaryForm, TernaryForm};
use crate::git_stability::{
    binary_form_stability, classify_point, lambda_status, max_multiplicity, monomial_weights, OnePS,
};
use crate::numerology::{canonical_hilbert, gieseker_parameters, hurwitz_genus, moduli_facts};
use crate::stable_graphs::{
    automorphism_count, base_change, canonical_form, enumerate_stable_graphs, resolve, stabilize, StableGraph,
};

#[derive(Parser, Debug)]
#[command(
    name = "moduli",
    version,
    about = "Stability, singularities, dual graphs and numerology of curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// SL(2) stability of a binary form
    Stability {
        #[arg(long)]
        degree: usize,
        /// Coefficients a_0,...,a_d (a_i multiplies X0^i X1^(d-i))
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// Also report the weights for the diagonal 1-PS of weight r
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<i64>,
    },
    /// Classify a point on a plane curve
    Point {
        /// Ternary form JSON file, or - for stdin
        #[arg(long)]
        form: String,
        /// Projective point x:y:z
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Genus, stability and symmetry of a dual graph
    GraphCheck {
        /// Graph JSON file, or - for stdin
        #[arg(long = "in")]
        input: String,
        /// Print the canonical key ignoring thicknesses
        #[arg(long)]
        thickness_blind: bool,
    },
    /// List the stable graphs of a genus
    GraphEnumerate {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        edges: Option<usize>,
        #[arg(long)]
        count_only: bool,
    },
    /// Base change, resolve and stabilize a degeneration, in that order
    Reduce {
        /// Graph JSON file, or - for stdin
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        base_change: Option<u32>,
        #[arg(long)]
        resolve: bool,
        #[arg(long)]
        stabilize: bool,
        /// Output file; the graph goes to stdout when omitted
        #[arg(long)]
        out: Option<String>,
    },
    /// Dimension counts and Hilbert polynomials
    Numerology {
        #[arg(long)]
        genus: i64,
        /// Pluricanonical exponent
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        gieseker_degree: Option<i64>,
        #[arg(long, requires = "branch_points")]
        cover_degree: Option<i64>,
        #[arg(long, requires = "cover_degree")]
        branch_points: Option<i64>,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            Error::Domain(_) | Error::Capacity(_) => Failure::Domain(e.to_string()),
        }
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    1
                }
            };
        }
    };
    match execute(cli.command, stdin) {
        Ok(out) => {
            if stdout.write_all(out.as_bytes()).is_err() {
                return 1;
            }
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {path}: {e}")))
    }
}

fn line(out: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{key} = {value}");
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut out = String::new();
    match command {
        Command::Stability { degree, coeffs, lambda } => {
            let form = BinaryForm::parse_coeffs(&coeffs)?;
            if form.degree() != degree {
                return Err(Failure::Usage(format!(
                    "--degree {degree} needs {} coefficients, got {}",
                    degree + 1,
                    form.coeffs().len()
                )));
            }
            let status = binary_form_stability(&form)?;
            let mult = max_multiplicity(&form)?;
            line(&mut out, "degree", degree);
            line(&mut out, "coeffs", form.coeff_list());
            line(&mut out, "form", &form);
            line(&mut out, "max_multiplicity", mult.m_star);
            let witnesses: Vec<String> = mult.witnesses.iter().map(|(m, d)| format!("({m},{d})")).collect();
            line(&mut out, "multiplicity_witnesses", witnesses.join(" "));
            line(&mut out, "status", status);
            if let Some(r) = lambda {
                let lam = OnePS::new(r)?;
                let report = lambda_status(&form, lam)?;
                line(&mut out, "lambda_r", r);
                line(&mut out, "lambda_weights", join(monomial_weights(degree, lam)));
                line(&mut out, "lambda_weights_present", join(&report.weights_present));
                line(&mut out, "lambda_min_weight", report.min_weight);
                line(&mut out, "lambda_status", report.status.as_str());
            }
        }
        Command::Point { form, point } => {
            let f = TernaryForm::from_json(&read_input(&form, stdin)?)?;
            let p = parse_point(&point)?;
            let class = classify_point(&f, &p)?;
            line(&mut out, "point", join(p.iter().map(format_rational)).replace(',', ":"));
            line(&mut out, "degree", f.degree());
            line(&mut out, "class", class);
        }
        Command::GraphCheck { input, thickness_blind } => {
            let g = StableGraph::from_json(&read_input(&input, stdin)?)?;
            line(&mut out, "vertices", g.vertex_count());
            line(&mut out, "edges", g.edge_count());
            line(&mut out, "total_genus", g.total_genus());
            line(&mut out, "stability_class", g.stability_class());
            line(&mut out, "automorphism_count", automorphism_count(&g)?);
            line(&mut out, "canonical_key", canonical_form(&g, thickness_blind)?);
        }
        Command::GraphEnumerate {
            genus,
            edges,
            count_only,
        } => {
            let classes = enumerate_stable_graphs(genus, edges)?;
            if count_only {
                let _ = writeln!(out, "{}", classes.len());
            } else {
                for c in &classes {
                    let _ = writeln!(out, "{}", c.representative().to_json_line());
                }
            }
        }
        Command::Reduce {
            input,
            base_change: degree,
            resolve: do_resolve,
            stabilize: do_stabilize,
            out: target,
        } => {
            let mut g = StableGraph::from_json(&read_input(&input, stdin)?)?;
            if let Some(e) = degree {
                g = base_change(&g, e)?;
            }
            if do_resolve {
                g = resolve(&g);
            }
            if do_stabilize {
                g = stabilize(&g)?;
            }
            match target {
                Some(path) => {
                    fs::write(&path, g.to_json()).map_err(|e| Failure::Usage(format!("writing {path}: {e}")))?;
                    line(&mut out, "total_genus", g.total_genus());
                    line(&mut out, "stability_class", g.stability_class());
                }
                None => out.push_str(&g.to_json()),
            }
        }
        Command::Numerology {
            genus,
            n,
            gieseker_degree,
            cover_degree,
            branch_points,
        } => {
            for (k, v) in moduli_facts(genus)?.report_lines() {
                line(&mut out, k, v);
            }
            if let Some(n) = n {
                let e = canonical_hilbert(genus, n)?;
                line(&mut out, "n", n);
                line(&mut out, "hilbert_poly", e.poly);
                line(&mut out, "rank", e.rank);
                line(&mut out, "ambient_dim", e.ambient_dim);
            }
            if let Some(d) = gieseker_degree {
                let p = gieseker_parameters(genus, d)?;
                line(&mut out, "gieseker_degree", d);
                line(&mut out, "gieseker_ambient_dim", p.ambient_dim);
                line(&mut out, "gieseker_hilbert_poly", p.poly);
            }
            if let (Some(k), Some(b)) = (cover_degree, branch_points) {
                line(&mut out, "cover_degree", k);
                line(&mut out, "branch_points", b);
                line(&mut out, "hurwitz_genus", hurwitz_genus(k, b)?);
            }
        }
    }
    Ok(out)
}
