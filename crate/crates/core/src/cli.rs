//! Command-line front end: computation and verification subcommands with
//! canonical machine-readable output.
//!
//! Every invocation prints one JSON record per line with sorted keys, so
//! identical invocations are byte-reproducible. Roots of unity are encoded
//! exactly (string form plus integer exponent and integer real/imaginary
//! parts); floats appear only in explicitly requested oracle comparisons.
//!
//! Exit codes: 0 on success, 1 when a computation or verification check
//! fails, 2 on invalid input. The residue-field size bound honors the
//! `TAME_LAMBDA_QMAX` environment variable.

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::cyclotomic::Mu4;
use crate::error::{Error, Result};
use crate::finite_field::build_field;
use crate::gauss::{gauss_closed_quadratic, ResidueChar};
use crate::lambda::{lambda_q2, lambda_tame_quadratic, QuadExt};
use crate::local_field::TameField;
use crate::oracle::gauss_numeric;
use crate::verify::{run_suites, Suite, VerifyBounds};

/// Comma-separated coefficient list in the deterministic polynomial basis
/// of the residue field; a bare integer when f = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffList(pub Vec<u64>);

impl std::str::FromStr for CoeffList {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<CoeffList, String> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|e| format!("bad coefficient {t:?}: {e}"))
            })
            .collect::<std::result::Result<Vec<u64>, String>>()
            .map(CoeffList)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "tame-lambda",
    version,
    about = "Exact lambda values of quadratic extensions of p-adic fields in the tame case"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lambda value of a ramified quadratic extension of the tame field
    /// (p, f, e, w), with its squareness and Gauss factors
    LambdaTame {
        /// Residue characteristic (an odd prime here)
        #[arg(long)]
        p: u64,
        /// Residue degree over Q_p
        #[arg(long, default_value_t = 1)]
        f: u32,
        /// Ramification index over Q_p (p must not divide it)
        #[arg(long, default_value_t = 1)]
        e: u32,
        /// Unit residue w of pi^e = p w, as coefficients in the residue
        /// field basis
        #[arg(long, default_value = "1")]
        w: CoeffList,
        /// Unit residue of the admissible c to assemble with; defaults to 1
        #[arg(long)]
        c_unit: Option<CoeffList>,
    },
    /// Closed form of the quadratic Gauss sum over F_{p^s}
    Gauss {
        /// Odd prime p
        #[arg(long)]
        p: u64,
        /// Extension degree s
        #[arg(long, default_value_t = 1)]
        s: u32,
        /// Also sum numerically and report the deviation
        #[arg(long)]
        numeric: bool,
    },
    /// Lambda value of a quadratic extension of Q_2, by square class
    Q2 {
        /// One of the seven nontrivial square classes:
        /// 5, -1, -5, 2, 10, -2, -10
        #[arg(long, allow_hyphen_values = true)]
        class: i64,
    },
    /// Sweep the closed forms against the independent oracles on a grid
    Verify {
        /// Suite to run: gauss, lambda, trace, or all
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Largest prime in the grid
        #[arg(long)]
        pmax: Option<u64>,
        /// Largest ramification index in the grid
        #[arg(long)]
        emax: Option<u32>,
        /// Largest residue degree in the grid
        #[arg(long)]
        fmax: Option<u32>,
    },
}

#[derive(Debug)]
struct Outcome {
    records: Vec<Value>,
    code: i32,
}

fn mu4_json(v: Mu4) -> Value {
    json!({
        "str": v.to_string(),
        "exp": v.exponent(),
        "re": v.re(),
        "im": v.im(),
    })
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Inconsistent(_) => 1,
        _ => 2,
    }
}

fn cmd_lambda_tame(
    p: u64,
    f: u32,
    e: u32,
    w: &CoeffList,
    c_unit: Option<&CoeffList>,
) -> Result<Outcome> {
    let field = TameField::from_w_coeffs(p, f, e, &w.0)?;
    let ext = QuadExt::ramified(field.clone())?;
    let c = match c_unit {
        Some(cs) => Some(field.admissible_c(field.residue_field().from_coeffs(&cs.0)?)?),
        None => None,
    };
    let result = lambda_tame_quadratic(&ext, c.as_ref())?;
    if result.value != result.delta_factor * result.gauss_factor {
        return Err(Error::Inconsistent(
            "lambda value differs from the product of its factors".into(),
        ));
    }
    let record = json!({
        "command": "lambda-tame",
        "inputs": {
            "p": p,
            "f": f,
            "e": e,
            "w": result.provenance.w_res.coeffs().to_vec(),
            "c_unit": result.provenance.c.unit_res().coeffs().to_vec(),
            "c_val": result.provenance.c.val(),
        },
        "result": {
            "value": mu4_json(result.value),
            "delta_factor": mu4_json(result.delta_factor),
            "gauss_factor": mu4_json(result.gauss_factor),
        },
    });
    Ok(Outcome {
        records: vec![record],
        code: 0,
    })
}

fn cmd_gauss(p: u64, s: u32, numeric: bool) -> Result<Outcome> {
    let closed = gauss_closed_quadratic(p, s)?;
    let mut result = json!({
        "eps": mu4_json(closed.eps),
        "half_power": closed.half_power.to_string(),
        "half_power_halves": closed.half_power.halves(),
    });
    let mut code = 0;
    if numeric {
        let field = build_field(p, s)?;
        let summed = gauss_numeric(&field, ResidueChar::Quadratic, &field.one())?;
        let predicted = closed.embed(p);
        let deviation = (summed - predicted).norm();
        let tolerance = 1e-6 * (p as f64).powf(s as f64 / 2.0);
        let within = deviation < tolerance;
        result["oracle"] = json!({
            "numeric_re": summed.re,
            "numeric_im": summed.im,
            "closed_re": predicted.re,
            "closed_im": predicted.im,
            "deviation": deviation,
            "tolerance": tolerance,
            "within_tolerance": within,
        });
        if !within {
            code = 1;
        }
    }
    let record = json!({
        "command": "gauss",
        "inputs": {"p": p, "s": s},
        "result": result,
    });
    Ok(Outcome {
        records: vec![record],
        code,
    })
}

fn cmd_q2(class: i64) -> Result<Outcome> {
    let value = lambda_q2(class)?;
    let record = json!({
        "command": "q2",
        "inputs": {"class": class},
        "result": {"value": mu4_json(value)},
    });
    Ok(Outcome {
        records: vec![record],
        code: 0,
    })
}

fn cmd_verify(
    suite: Suite,
    pmax: Option<u64>,
    emax: Option<u32>,
    fmax: Option<u32>,
) -> Result<Outcome> {
    let defaults = VerifyBounds::default();
    let bounds = VerifyBounds {
        pmax: pmax.unwrap_or(defaults.pmax),
        emax: emax.unwrap_or(defaults.emax),
        fmax: fmax.unwrap_or(defaults.fmax),
    };
    let reports = run_suites(suite, &bounds);
    let code = if reports.iter().all(|r| r.all_passed()) {
        0
    } else {
        1
    };
    let records = reports
        .into_iter()
        .map(|r| {
            json!({
                "command": "verify",
                "inputs": {
                    "suite": r.suite,
                    "pmax": bounds.pmax,
                    "emax": bounds.emax,
                    "fmax": bounds.fmax,
                },
                "result": {
                    "points": r.points,
                    "passed": r.passed,
                    "failed": r.failed,
                    "first_failure": r.first_failure,
                },
            })
        })
        .collect();
    Ok(Outcome { records, code })
}

fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::LambdaTame { p, f, e, w, c_unit } => {
            cmd_lambda_tame(*p, *f, *e, w, c_unit.as_ref())
        }
        Command::Gauss { p, s, numeric } => cmd_gauss(*p, *s, *numeric),
        Command::Q2 { class } => cmd_q2(*class),
        Command::Verify {
            suite,
            pmax,
            emax,
            fmax,
        } => cmd_verify(*suite, *pmax, *emax, *fmax),
    }
}

/// Runs a parsed invocation, printing one record per line; returns the
/// process exit code.
pub fn run(cli: &Cli) -> i32 {
    match execute(&cli.command) {
        Ok(outcome) => {
            for record in &outcome.records {
                println!("{record}");
            }
            outcome.code
        }
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}
