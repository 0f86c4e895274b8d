//! `skein`: exact annular invariants of braids and the homology of
//! their evaluated Koszul cubes, from the command line.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 resource bound
//! exceeded, 4 verification failure.

use clap::{Parser, Subcommand, ValueEnum};
use skein_core::annular::{coxeter_invariant_formula, hopf_pairing, wedge_wrap_dims};
use skein_core::cube::{
    coxeter_cube_homology, end_complex_dims, schur_cube_dims, BigradedDims, EndMode, EvalObject,
};
use skein_core::groupalg::{frobenius_character, solomon_ideal_basis};
use skein_core::hecke::{annular_trace, sln_invariant, BraidWord};
use skein_core::shapes::{
    composition_to_epsilon, epsilon_to_composition, Composition, Partition, SignSequence,
};
use skein_core::symfunc::{Basis, PlethDirection, SymFunc};
use skein_core::verify::{run_suite, SUITE_IDS};
use skein_core::{Error, Result};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "skein", version, about = "Exact annular skein invariants of braid closures")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Full,
    Symmetric,
}

#[derive(Subcommand)]
enum Cmd {
    /// Universal annular trace of a braid, e.g. `trace "n=2: 1 1"`.
    Trace {
        /// Braid word, `n=STRANDS: LETTERS` with negative letters for inverses.
        braid: String,
        /// Also evaluate the braid-closure invariant for sl_N.
        #[arg(long = "N")]
        n_color: Option<u32>,
        /// Basis for the symmetric-function output (s, h, e, or p).
        #[arg(long, default_value = "s")]
        basis: char,
    },
    /// Ribbon function of a composition ("3.2.1.2") or sign sequence ("++-").
    Psi {
        shape: String,
        #[arg(long, default_value = "s")]
        basis: char,
    },
    /// Pairing of two colored unknots wrapped around each other, at sl_N.
    Hopf {
        /// First color, a partition like "3,2,1" (or "-" for empty).
        lambda: String,
        /// Second color.
        mu: String,
        #[arg(long = "N")]
        n_color: u32,
    },
    /// Graded dimension of wrappings of one exterior power around another.
    WedgeWrap {
        i: u32,
        j: u32,
        #[arg(long = "N")]
        n_color: u32,
    },
    /// Solomon left ideal of a sign sequence, or the full decomposition for n strands.
    Solomon {
        /// A sign sequence like "++-", or a strand count like "4".
        arg: String,
    },
    /// Homology of the projected Koszul cube evaluated at a nilpotent Jordan block.
    Cube {
        /// A sign sequence (Solomon projection) or a partition (Young projection).
        arg: String,
        /// Jordan block size of the evaluation module.
        #[arg(long = "N")]
        n_color: usize,
    },
    /// Graded dimensions of the endomorphism complex homology of the cube.
    End {
        /// Number of strands.
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Full)]
        mode: ModeArg,
        /// Largest q-degree to compute (trusted window ends below it).
        #[arg(long, default_value_t = 8)]
        qcutoff: i64,
    },
    /// Run verification suites (A1..A9; all by default).
    Verify {
        suites: Vec<String>,
        /// Run this many suites in parallel.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(Error::Parse(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(e @ Error::BoundExceeded { .. }) => {
            eprintln!("error: {}", e);
            ExitCode::from(3)
        }
        Err(Error::Internal(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(4)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<ExitCode> {
    let json = cli.format == Format::Json;
    match &cli.cmd {
        Cmd::Trace {
            braid,
            n_color,
            basis,
        } => cmd_trace(braid, *n_color, *basis, json),
        Cmd::Psi { shape, basis } => cmd_psi(shape, *basis, json),
        Cmd::Hopf {
            lambda,
            mu,
            n_color,
        } => cmd_hopf(lambda, mu, *n_color, json),
        Cmd::WedgeWrap { i, j, n_color } => cmd_wedge_wrap(*i, *j, *n_color, json),
        Cmd::Solomon { arg } => cmd_solomon(arg, json),
        Cmd::Cube { arg, n_color } => cmd_cube(arg, *n_color, json),
        Cmd::End { n, mode, qcutoff } => cmd_end(*n, *mode, *qcutoff, json),
        Cmd::Verify { suites, jobs } => cmd_verify(suites, *jobs, json),
    }
}

/// JSON key for a symmetric function: the basis letter, as in
/// {"s":[{"partition":[2],"coeff":"q"}, ...]}.
fn sym_json(f: &SymFunc) -> (String, serde_json::Value) {
    let terms: Vec<_> = f
        .terms()
        .map(|(l, c)| serde_json::json!({"partition": l.parts(), "coeff": c.to_string()}))
        .collect();
    (f.basis().letter().to_string(), serde_json::json!(terms))
}

fn sym_text(f: &SymFunc) -> String {
    if f.is_zero() {
        return "0".into();
    }
    f.terms()
        .map(|(l, c)| format!("({})·{}_{{{}}}", c, f.basis().letter(), l))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn dims_json(h: &BigradedDims) -> serde_json::Value {
    let rows: Vec<_> = h
        .entries()
        .map(|(&(q, hom), &d)| serde_json::json!({"hom": hom, "q": q, "dim": d}))
        .collect();
    serde_json::json!(rows)
}

fn dims_text(h: &BigradedDims) -> String {
    let mut out = String::new();
    for (&(q, hom), &d) in h.entries() {
        out.push_str(&format!("hom {:>2}  q {:>3}  dim {}\n", hom, q, d));
    }
    out
}

fn emit(json: bool, value: serde_json::Value, text: String) -> Result<ExitCode> {
    if json {
        let mut obj = serde_json::Map::new();
        obj.insert("schema".into(), "1".into());
        if let serde_json::Value::Object(m) = value {
            obj.extend(m);
        }
        println!("{}", serde_json::Value::Object(obj));
    } else {
        println!("{}", text.trim_end());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_trace(braid: &str, n_color: Option<u32>, basis: char, json: bool) -> Result<ExitCode> {
    let beta = BraidWord::parse(braid)?;
    let tr = annular_trace(&beta)?.convert(Basis::from_letter(basis)?)?;
    let (key, terms) = sym_json(&tr);
    let mut obj = serde_json::json!({ key: terms });
    let mut text = sym_text(&tr);
    if let Some(nc) = n_color {
        let inv = sln_invariant(&beta, nc)?;
        obj["slN"] = serde_json::json!(inv.to_string());
        obj["N"] = serde_json::json!(nc);
        text.push_str(&format!("\nsl_{} invariant: {}", nc, inv));
    }
    emit(json, obj, text)
}

fn parse_composition_or_signs(s: &str) -> Result<Composition> {
    if s.contains('+') || s.contains('-') {
        Ok(epsilon_to_composition(&SignSequence::parse(s)?))
    } else {
        Composition::parse(s)
    }
}

fn cmd_psi(shape: &str, basis: char, json: bool) -> Result<ExitCode> {
    let a = parse_composition_or_signs(shape)?;
    let target = Basis::from_letter(basis)?;
    let f = skein_core::symfunc::psi(&a)?.convert(target)?;
    let transform = f.pleth_transform(PlethDirection::Minus)?.convert(target)?;
    let invariant = coxeter_invariant_formula(&composition_to_epsilon(&a))?;
    let (key, terms) = sym_json(&f);
    let (_, tterms) = sym_json(&transform);
    let (_, iterms) = sym_json(&invariant);
    let obj = serde_json::json!({
        "composition": a.parts(),
        key: terms,
        "transform": tterms,
        "coxeter_invariant": iterms,
    });
    let text = format!(
        "Ψ({}) = {}\ntransform = {}\ncoxeter invariant = {}",
        a,
        sym_text(&f),
        sym_text(&transform),
        sym_text(&invariant)
    );
    emit(json, obj, text)
}

fn parse_partition(s: &str) -> Result<Partition> {
    if s == "-" || s.is_empty() {
        Ok(Partition::empty())
    } else {
        Partition::parse(s)
    }
}

fn cmd_hopf(lambda: &str, mu: &str, n_color: u32, json: bool) -> Result<ExitCode> {
    let lam = parse_partition(lambda)?;
    let mu = parse_partition(mu)?;
    let pairing = hopf_pairing(&lam, &SymFunc::schur(mu), n_color)?;
    emit(
        json,
        serde_json::json!({"pairing": pairing.to_string()}),
        pairing.to_string(),
    )
}

fn cmd_wedge_wrap(i: u32, j: u32, n_color: u32, json: bool) -> Result<ExitCode> {
    let dims = wedge_wrap_dims(i, j, n_color)?;
    let rows: Vec<_> = dims
        .terms()
        .map(|(t, c)| serde_json::json!({"t": t, "coeff": c.to_string()}))
        .collect();
    emit(
        json,
        serde_json::json!({"dims": rows}),
        dims.to_string(),
    )
}

fn cmd_solomon(arg: &str, json: bool) -> Result<ExitCode> {
    let signs = if arg.contains('+') || arg.contains('-') {
        vec![SignSequence::parse(arg)?]
    } else {
        let n: usize = arg
            .parse()
            .map_err(|_| Error::Parse(format!("expected a sign sequence or strand count, got {:?}", arg)))?;
        SignSequence::all(n)
    };
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut total = 0usize;
    for eps in &signs {
        let basis = solomon_ideal_basis(eps)?;
        let ch = frobenius_character(&basis)?;
        total += basis.len();
        let (_, terms) = sym_json(&ch);
        rows.push(serde_json::json!({
            "epsilon": eps.to_string(),
            "composition": epsilon_to_composition(eps).parts(),
            "dimension": basis.len(),
            "character": terms,
        }));
        text.push_str(&format!(
            "ε = {:<8} a = {:<10} dim {:>3}   ch = {}\n",
            eps.to_string(),
            epsilon_to_composition(eps).to_string(),
            basis.len(),
            sym_text(&ch)
        ));
    }
    if signs.len() > 1 {
        text.push_str(&format!("total dimension {}\n", total));
    }
    emit(
        json,
        serde_json::json!({"ideals": rows, "total_dimension": total}),
        text,
    )
}

fn cmd_cube(arg: &str, n_color: usize, json: bool) -> Result<ExitCode> {
    let e = EvalObject::nilpotent(&[n_color]);
    let h = if arg.contains('+') || (arg.contains('-') && !arg.contains(',')) {
        coxeter_cube_homology(&SignSequence::parse(arg)?, &e)?
    } else {
        schur_cube_dims(&Partition::parse(arg)?, &e)?.1
    };
    let obj = serde_json::json!({
        "homology": dims_json(&h),
        "total_dim": h.total_dim(),
        "euler": h.euler().to_string(),
    });
    let text = format!(
        "{}total dim {}\neuler {}",
        dims_text(&h),
        h.total_dim(),
        h.euler()
    );
    emit(json, obj, text)
}

fn cmd_end(n: usize, mode: ModeArg, qcutoff: i64, json: bool) -> Result<ExitCode> {
    let mode = match mode {
        ModeArg::Full => EndMode::Full,
        ModeArg::Symmetric => EndMode::Symmetric,
    };
    let h = end_complex_dims(n, mode, qcutoff)?;
    emit(
        json,
        serde_json::json!({"dims": dims_json(&h), "total_dim": h.total_dim()}),
        format!("{}total dim {}", dims_text(&h), h.total_dim()),
    )
}

fn cmd_verify(suites: &[String], jobs: usize, json: bool) -> Result<ExitCode> {
    let ids: Vec<String> = if suites.is_empty() {
        SUITE_IDS.iter().map(|s| s.to_string()).collect()
    } else {
        suites.to_vec()
    };
    for id in &ids {
        if !SUITE_IDS.contains(&id.as_str()) {
            return Err(Error::Parse(format!("unknown suite {:?}, expected A1..A9", id)));
        }
    }
    let jobs = jobs.max(1);
    // Fan the suites out over worker threads; collect in input order so
    // the report is deterministic regardless of scheduling.
    let mut results: Vec<(String, std::result::Result<_, Error>)> = Vec::new();
    for chunk in ids.chunks(jobs) {
        let handles: Vec<_> = chunk
            .iter()
            .map(|id| {
                let id = id.clone();
                std::thread::spawn(move || (id.clone(), run_suite(&id)))
            })
            .collect();
        for handle in handles {
            results.push(handle.join().expect("verification thread panicked"));
        }
    }
    let mut rows = Vec::new();
    let mut all_pass = true;
    for (id, res) in &results {
        match res {
            Ok(report) => {
                rows.push(serde_json::json!({"id": id, "pass": true, "detail": report.detail}));
                if !json {
                    println!(
                        "{} PASS ({:.2?} of {:.0?} budget) — {}",
                        report.id, report.elapsed, report.budget, report.detail
                    );
                }
            }
            Err(err) => {
                all_pass = false;
                rows.push(serde_json::json!({"id": id, "pass": false, "error": err.to_string()}));
                if !json {
                    println!("{} FAIL — {}", id, err);
                }
            }
        }
    }
    if json {
        println!(
            "{}",
            serde_json::json!({"schema": "1", "results": rows, "pass": all_pass})
        );
    }
    if all_pass {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(4))
    }
}
