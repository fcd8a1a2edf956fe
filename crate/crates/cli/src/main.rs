//! `zsum` — exact additive combinatorics over Z_n from the command line.
//!
//! Every subcommand is a pure function of its flags: identical invocations
//! produce byte-identical output. Data rows go to stdout; diagnostics and
//! FINDING summaries go to stderr. Exit code 0 means success, 1 means a
//! verification subcommand produced findings, 2 means a usage error.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use zsum_core::{
    additive_energy, bound_report, build_family_a, condf_status, dft_indicator, energy_closed_form,
    is_counterpoint_dichotomy, scan_ks, table1, units, Finding, ResidueSet,
};

/// Claim label for a lower bound that exceeds the exact sumset size.
const CLAIM_BOUND: &str = "bound-exceeds-actual";

#[derive(Parser)]
#[command(
    name = "zsum",
    version,
    about = "Exact additive combinatorics over cyclic groups Z_n",
    long_about = "Sumsets, additive energy, Fourier coefficients, sumset lower bounds, \
                  affine symmetry verdicts, and a scan harness for the family \
                  A(k) = {0,1} u {3..k-1} u {k+2} inside Z_2k."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable lines, reals to 4 decimal places
    Text,
    /// One JSON object per row, full precision
    Json,
    /// Comma-separated with a header row
    Csv,
}

/// `--k` accepts a comma-separated list ("8,9,12") or an inclusive range
/// ("6..1024").
#[derive(Clone, Debug)]
struct KList(Vec<usize>);

impl FromStr for KList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some((lo, hi)) = s.split_once("..") {
            let lo: usize = lo
                .trim()
                .parse()
                .map_err(|_| format!("bad range start {lo:?}"))?;
            let hi: usize = hi
                .trim()
                .parse()
                .map_err(|_| format!("bad range end {hi:?}"))?;
            if lo > hi {
                return Err(format!("empty range {s:?}"));
            }
            Ok(KList((lo..=hi).collect()))
        } else {
            s.split(',')
                .map(|part| {
                    part.trim()
                        .parse()
                        .map_err(|_| format!("bad k value {part:?}"))
                })
                .collect::<Result<Vec<usize>, _>>()
                .map(KList)
        }
    }
}

/// `--v` accepts a single unit or the word "all".
#[derive(Clone, Copy, Debug)]
enum UnitArg {
    All,
    One(usize),
}

impl FromStr for UnitArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            Ok(UnitArg::All)
        } else {
            s.parse()
                .map(UnitArg::One)
                .map_err(|_| format!("bad unit {s:?} (number or \"all\")"))
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Energy table for A(k): exact E(A,A), k^4/E, and k^3/(2E)
    Table1 {
        /// k values, list or inclusive range
        #[arg(long, default_value = "8,9,10,11,12,100,1000")]
        k: KList,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Additive energy of a set pair, or of A(k) with its closed form
    Energy {
        /// Family parameter(s); mutually exclusive with --mod/--a/--b
        #[arg(long, conflicts_with_all = ["modulus", "a", "b"])]
        k: Option<KList>,
        /// Group order for --a/--b
        #[arg(long = "mod", requires = "a")]
        modulus: Option<usize>,
        /// First set literal, e.g. "0,1" or "0-2,5"
        #[arg(long, requires = "modulus")]
        a: Option<String>,
        /// Second set literal; defaults to --a
        #[arg(long, requires = "a")]
        b: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact |A + v.comp(A)| against every lower bound, per unit v
    Bounds {
        #[arg(long)]
        k: KList,
        /// A single unit or "all"
        #[arg(long, default_value = "all")]
        v: UnitArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Scan k values: covering status, bounds, symmetry, energy per k
    Scan {
        #[arg(long, default_value = "6..1024")]
        k: KList,
        /// Worker threads (0 = runtime default)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Counterpoint-dichotomy verdict for a set or for A(k)
    Dichotomy {
        #[arg(long, conflicts_with_all = ["modulus", "a"])]
        k: Option<KList>,
        #[arg(long = "mod", requires = "a")]
        modulus: Option<usize>,
        #[arg(long, requires = "modulus")]
        a: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Fourier coefficients of an indicator function
    Dft {
        #[arg(long, conflicts_with_all = ["modulus", "a"])]
        k: Option<KList>,
        #[arg(long = "mod", requires = "a")]
        modulus: Option<usize>,
        #[arg(long, requires = "modulus")]
        a: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sumset of two sets modulo n
    Sumset {
        #[arg(long = "mod")]
        modulus: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Covering status of A + v.comp(A) for each unit v (JSON output)
    Condf {
        #[arg(long)]
        k: KList,
        /// A single unit or "all"
        #[arg(long, default_value = "all")]
        v: UnitArg,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(), // clap prints usage and exits 2 (0 for --help)
    };
    match run(cli.command) {
        Ok(findings) => {
            if findings.is_empty() {
                ExitCode::SUCCESS
            } else {
                for finding in &findings {
                    eprintln!("{finding}");
                }
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Vec<Finding>, Box<dyn std::error::Error>> {
    let mut out = String::new();
    let mut findings = Vec::new();
    match command {
        Command::Table1 { k, format } => {
            let rows = table1(&k.0)?;
            if format == Format::Csv {
                out.push_str("k,energy,energy_bound,coverage_fraction\n");
            }
            for r in &rows {
                match format {
                    Format::Text => writeln!(
                        out,
                        "k={} energy={} energy_bound={:.4} coverage={:.4}",
                        r.k, r.energy, r.energy_bound, r.coverage_fraction
                    )?,
                    Format::Json => writeln!(out, "{}", serde_json::to_string(r)?)?,
                    Format::Csv => writeln!(
                        out,
                        "{},{},{:.2},{:.3}",
                        r.k, r.energy, r.energy_bound, r.coverage_fraction
                    )?,
                }
            }
        }
        Command::Energy {
            k: Some(k), format, ..
        } => {
            #[derive(Serialize)]
            struct Row {
                k: usize,
                energy: u64,
                closed_form: u64,
                matches: bool,
            }
            if format == Format::Csv {
                out.push_str("k,energy,closed_form,matches\n");
            }
            for &k in &k.0 {
                let a = build_family_a(k)?;
                let row = Row {
                    k,
                    energy: additive_energy(&a, &a)?,
                    closed_form: energy_closed_form(k),
                    matches: additive_energy(&a, &a)? == energy_closed_form(k),
                };
                match format {
                    Format::Text => writeln!(
                        out,
                        "k={} energy={} closed_form={} matches={}",
                        row.k, row.energy, row.closed_form, row.matches
                    )?,
                    Format::Json => writeln!(out, "{}", serde_json::to_string(&row)?)?,
                    Format::Csv => writeln!(
                        out,
                        "{},{},{},{}",
                        row.k, row.energy, row.closed_form, row.matches
                    )?,
                }
            }
        }
        Command::Energy {
            k: None,
            modulus,
            a,
            b,
            format,
        } => {
            let (modulus, a) = require_set_args(modulus, a)?;
            let u = ResidueSet::parse(&a, modulus)?;
            let v = match &b {
                Some(b) => ResidueSet::parse(b, modulus)?,
                None => u.clone(),
            };
            let energy = additive_energy(&u, &v)?;
            #[derive(Serialize)]
            struct Row {
                modulus: usize,
                a: String,
                b: String,
                energy: u64,
            }
            let row = Row {
                modulus,
                a: u.to_literal(),
                b: v.to_literal(),
                energy,
            };
            match format {
                Format::Text => writeln!(out, "energy={energy}")?,
                Format::Json => writeln!(out, "{}", serde_json::to_string(&row)?)?,
                Format::Csv => return Err("csv is not supported for pair energy".into()),
            }
        }
        Command::Bounds { k, v, format } => {
            for &k in &k.0 {
                for v in selected_units(2 * k, v)? {
                    let r = bound_report(k, v)?;
                    match format {
                        Format::Text => writeln!(
                            out,
                            "k={} v={} actual={} full={} ruzsa={:.4} energy={:.4} \
                             olson={:.4} olson_applicable={} mann={} mann_applicable={} \
                             fourier={:.4}",
                            r.k,
                            r.v,
                            r.actual,
                            r.full,
                            r.ruzsa,
                            r.energy,
                            r.olson,
                            r.olson_applicable,
                            r.mann,
                            r.mann_applicable,
                            r.fourier
                        )?,
                        Format::Json => writeln!(out, "{}", serde_json::to_string(&r)?)?,
                        Format::Csv => return Err("csv is not supported for bounds output".into()),
                    }
                    let actual = r.actual as f64;
                    let mut exceeded = Vec::new();
                    if r.ruzsa > actual {
                        exceeded.push(format!("ruzsa {:.4}", r.ruzsa));
                    }
                    if r.energy > actual {
                        exceeded.push(format!("energy {:.4}", r.energy));
                    }
                    if r.olson_applicable && r.olson > actual {
                        exceeded.push(format!("olson {:.4}", r.olson));
                    }
                    if r.mann_applicable && r.mann > r.actual {
                        exceeded.push(format!("mann {}", r.mann));
                    }
                    if r.fourier > 0.0 && !r.full {
                        exceeded.push(format!("fourier margin {:.4} without covering", r.fourier));
                    }
                    if !exceeded.is_empty() {
                        findings.push(Finding {
                            claim: CLAIM_BOUND,
                            k,
                            witness: format!(
                                "v={} actual={} exceeded by {}",
                                v,
                                r.actual,
                                exceeded.join(", ")
                            ),
                        });
                    }
                }
            }
        }
        Command::Scan { k, jobs, format } => {
            let (records, scan_findings) = scan_ks(&k.0, jobs)?;
            findings = scan_findings;
            if format == Format::Csv {
                out.push_str(
                    "k,condf_overall,failing_units,min_sumset_size,mann_empty,\
                     dichotomy_verdict,polarity_count,energy,energy_matches_poly\n",
                );
            }
            for r in &records {
                match format {
                    Format::Text => writeln!(
                        out,
                        "k={} condf={} failing={:?} min_sumset={} mann_empty={} \
                         dichotomy={} polarities={} energy={} energy_poly={}",
                        r.k,
                        r.condf_overall,
                        r.failing_units,
                        r.min_sumset_size,
                        r.mann_empty,
                        r.dichotomy_verdict,
                        r.polarity_count,
                        r.energy,
                        r.energy_matches_poly
                    )?,
                    Format::Json => writeln!(out, "{}", serde_json::to_string(r)?)?,
                    Format::Csv => {
                        let failing: Vec<String> =
                            r.failing_units.iter().map(|v| v.to_string()).collect();
                        writeln!(
                            out,
                            "{},{},{},{},{},{},{},{},{}",
                            r.k,
                            r.condf_overall,
                            failing.join(";"),
                            r.min_sumset_size,
                            r.mann_empty,
                            r.dichotomy_verdict,
                            r.polarity_count,
                            r.energy,
                            r.energy_matches_poly
                        )?;
                    }
                }
            }
        }
        Command::Dichotomy {
            k,
            modulus,
            a,
            format,
        } => {
            #[derive(Serialize)]
            struct Row {
                modulus: usize,
                set: String,
                #[serde(flatten)]
                verdict: zsum_core::DichotomyVerdict,
            }
            let sets = match (k, modulus, a) {
                (Some(k), _, _) => {
                    k.0.iter()
                        .map(|&k| build_family_a(k))
                        .collect::<zsum_core::Result<Vec<_>>>()?
                }
                (None, modulus, a) => {
                    let (modulus, a) = require_set_args(modulus, a)?;
                    vec![ResidueSet::parse(&a, modulus)?]
                }
            };
            for s in &sets {
                let row = Row {
                    modulus: s.modulus(),
                    set: s.to_literal(),
                    verdict: is_counterpoint_dichotomy(s),
                };
                match format {
                    Format::Text => {
                        write!(
                            out,
                            "modulus={} set={} verdict={} stabilizer_size={} polarity_count={}",
                            row.modulus,
                            row.set,
                            row.verdict.verdict,
                            row.verdict.stabilizer_size,
                            row.verdict.polarity_count
                        )?;
                        if let Some(p) = row.verdict.polarity {
                            write!(out, " polarity={p}")?;
                        }
                        if let Some(reason) = &row.verdict.reason {
                            write!(out, " reason=\"{reason}\"")?;
                        }
                        out.push('\n');
                    }
                    Format::Json => writeln!(out, "{}", serde_json::to_string(&row)?)?,
                    Format::Csv => return Err("csv is not supported for dichotomy output".into()),
                }
            }
        }
        Command::Dft {
            k,
            modulus,
            a,
            format,
        } => {
            let s = match (k, modulus, a) {
                (Some(k), _, _) => {
                    let [k] = k.0[..] else {
                        return Err("dft takes a single k".into());
                    };
                    build_family_a(k)?
                }
                (None, modulus, a) => {
                    let (modulus, a) = require_set_args(modulus, a)?;
                    ResidueSet::parse(&a, modulus)?
                }
            };
            let spectrum = dft_indicator(&s);
            if format == Format::Csv {
                out.push_str("xi,re,im,magnitude\n");
            }
            for (xi, c) in spectrum.coefficients().iter().enumerate() {
                match format {
                    Format::Text => writeln!(
                        out,
                        "xi={xi} re={:.4} im={:.4} magnitude={:.4}",
                        c.re,
                        c.im,
                        c.norm()
                    )?,
                    Format::Json => writeln!(
                        out,
                        "{}",
                        serde_json::json!({
                            "xi": xi, "re": c.re, "im": c.im, "magnitude": c.norm()
                        })
                    )?,
                    Format::Csv => writeln!(out, "{xi},{},{},{}", c.re, c.im, c.norm())?,
                }
            }
        }
        Command::Sumset {
            modulus,
            a,
            b,
            format,
        } => {
            let u = ResidueSet::parse(&a, modulus)?;
            let v = ResidueSet::parse(&b, modulus)?;
            let sum = u.sumset(&v)?;
            match format {
                Format::Text => writeln!(out, "{}", sum.to_literal())?,
                Format::Json => {
                    #[derive(Serialize)]
                    struct Row {
                        modulus: usize,
                        a: String,
                        b: String,
                        sum: String,
                        size: usize,
                    }
                    let row = Row {
                        modulus,
                        a: u.to_literal(),
                        b: v.to_literal(),
                        sum: sum.to_literal(),
                        size: sum.len(),
                    };
                    writeln!(out, "{}", serde_json::to_string(&row)?)?;
                }
                Format::Csv => return Err("csv is not supported for sumset output".into()),
            }
        }
        Command::Condf { k, v } => {
            for &k in &k.0 {
                let status = condf_status(&build_family_a(k)?)?;
                match v {
                    UnitArg::All => writeln!(out, "{}", serde_json::to_string(&status)?)?,
                    UnitArg::One(v) => {
                        let row = status
                            .units
                            .iter()
                            .find(|r| r.v == v)
                            .ok_or_else(|| format!("{v} is not a unit of Z_{}", 2 * k))?;
                        writeln!(out, "{}", serde_json::to_string(row)?)?;
                    }
                }
            }
        }
    }
    print!("{out}");
    Ok(findings)
}

/// Units selected by a `--v` flag, validated against the modulus.
fn selected_units(n: usize, v: UnitArg) -> Result<Vec<usize>, Box<dyn std::error::Error>> {
    let all = units(n)?;
    match v {
        UnitArg::All => Ok(all),
        UnitArg::One(v) => {
            if all.contains(&(v % n)) {
                Ok(vec![v % n])
            } else {
                Err(format!("{v} is not a unit of Z_{n}").into())
            }
        }
    }
}

fn require_set_args(
    modulus: Option<usize>,
    a: Option<String>,
) -> Result<(usize, String), Box<dyn std::error::Error>> {
    match (modulus, a) {
        (Some(modulus), Some(a)) => Ok((modulus, a)),
        _ => Err("either --k or both --mod and --a are required".into()),
    }
}
