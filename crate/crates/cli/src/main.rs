mod args;
mod output;

use std::fs;
use std::process::ExitCode;

use clap::Parser;
use rayon::prelude::*;
use serde_json::{json, Value};

use zetalab::exact::DirichletCharacter;
use zetalab::identities::{parse_rational, parse_real_expr, registry, verify, EisensteinParams, IdentityId, Matrix2};
use zetalab::numerics::{BigComplex, PrecisionContext};
use zetalab::polyroots::{conjecture_jobs, family_report, generalized_report, Family, PairReport};
use zetalab::zeta::{zeta_at_integer, zeta_nonpositive, zeta_odd_fast};
use zetalab::Error;

use args::{CharacterArgs, Cli, Command, Common, ConjectureArgs, RootsArgs, VerifyArgs};
use output::{emit, Table};

/// Failure modes mapped onto exit codes.
enum Failure {
    /// Bad flag or parameter: exit 2.
    Usage(String),
    /// Library error during a job.
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<String> for Failure {
    fn from(msg: String) -> Self {
        Failure::Usage(msg)
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Zeta { s, common } => run_zeta(&s, &common),
        Command::Verify(a) => run_verify(&a),
        Command::Roots(a) => run_roots(&a),
        Command::Conjecture(a) => run_conjecture(&a),
        Command::List { json, output } => run_list(json, output),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Domain(_) | Error::Pole(_) | Error::Validation(_) | Error::Unsupported(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn context(digits: u32) -> Result<PrecisionContext, Failure> {
    let ctx = PrecisionContext::digits(digits)?;
    match std::env::var("ZETALAB_MAX_TERMS") {
        Ok(v) => {
            let n: usize = v
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("ZETALAB_MAX_TERMS: cannot parse '{v}'")))?;
            Ok(ctx.set_max_terms(n)?)
        }
        Err(_) => Ok(ctx),
    }
}

/// `7`, `1,3,5` or the inclusive range `1..10`.
fn parse_int_list(flag: &str, s: &str) -> Result<Vec<i64>, Failure> {
    let bad = || Failure::Usage(format!("--{flag}: cannot parse '{s}' (expected N, N,M,... or A..B)"));
    if let Some((a, b)) = s.split_once("..") {
        let a: i64 = a.trim().parse().map_err(|_| bad())?;
        let b: i64 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| bad()))
        .collect()
}

fn parse_u32_list(flag: &str, s: &str) -> Result<Vec<u32>, Failure> {
    parse_int_list(flag, s)?
        .into_iter()
        .map(|v| u32::try_from(v).map_err(|_| Failure::Usage(format!("--{flag}: {v} must be non-negative"))))
        .collect()
}

fn run_zeta(s: &str, common: &Common) -> Outcome {
    let ctx = context(common.digits)?;
    let values = parse_int_list("s", s)?;
    let digits = common.digits as usize;
    let rows: Vec<Result<(i64, String, &'static str), Error>> = values
        .par_iter()
        .map(|&s| {
            if s >= 3 && s % 2 == 1 {
                let v = zeta_odd_fast(s as u32, &ctx)?;
                Ok((s, v.value.to_decimal_string(digits), "ramanujan"))
            } else if s <= 0 {
                Ok((s, zeta_nonpositive(s)?.to_string(), "exact"))
            } else {
                Ok((s, zeta_at_integer(s, &ctx)?.to_decimal_string(digits), "euler"))
            }
        })
        .collect();
    let mut table = Table::new(&["s", "value", "method"]);
    let mut records = Vec::new();
    for r in rows {
        let (s, value, method) = r?;
        table.push(vec![s.to_string(), value.clone(), method.to_string()]);
        records.push(json!({ "s": s, "value": value, "method": method }));
    }
    let doc = json!({ "schema": 1, "command": "zeta", "digits": common.digits, "values": records });
    emit(common, &doc, &table, &output::plain(&table))?;
    Ok(true)
}

fn opt_list(s: &Option<String>) -> Vec<Option<String>> {
    match s {
        Some(v) => v.split(';').map(|t| Some(t.trim().to_string())).collect(),
        None => vec![None],
    }
}

fn build_params(
    a: &VerifyArgs,
    alpha: &Option<String>,
    n: Option<i64>,
    m: Option<i64>,
    ctx: &PrecisionContext,
) -> Result<EisensteinParams, Failure> {
    let real = |flag: &str, v: &Option<String>| -> Result<Option<_>, Failure> {
        v.as_ref()
            .map(|s| parse_real_expr(s, ctx).map_err(|e| Failure::Usage(format!("--{flag}: {e}"))))
            .transpose()
    };
    let rational = |flag: &str, v: &Option<String>| -> Result<Option<_>, Failure> {
        v.as_ref()
            .map(|s| parse_rational(s).map_err(|e| Failure::Usage(format!("--{flag}: {e}"))))
            .transpose()
    };
    Ok(EisensteinParams {
        alpha: real("alpha", alpha)?,
        beta: real("beta", &a.beta)?,
        n,
        m,
        w: real("w", &a.w)?,
        x: real("x", &a.x)?,
        y: real("y", &a.y)?,
        z: a.z
            .as_ref()
            .map(|s| BigComplex::parse(s, ctx).map_err(|e| Failure::Usage(format!("--z: {e}"))))
            .transpose()?,
        r1: rational("r1", &a.r1)?,
        r2: rational("r2", &a.r2)?,
        matrix: a
            .matrix
            .as_ref()
            .map(|s| Matrix2::parse(s).map_err(|e| Failure::Usage(format!("--matrix: {e}"))))
            .transpose()?,
    })
}

fn run_verify(a: &VerifyArgs) -> Outcome {
    let ctx = context(a.common.digits)?;
    let ids: Vec<IdentityId> = if a.id.eq_ignore_ascii_case("all") {
        IdentityId::ALL.to_vec()
    } else {
        vec![a.id.parse().map_err(|e: Error| Failure::Usage(format!("--id: {e}")))?]
    };
    let ns: Vec<Option<i64>> = match &a.n {
        Some(s) => parse_int_list("n", s)?.into_iter().map(Some).collect(),
        None => vec![None],
    };
    let ms: Vec<Option<i64>> = match &a.m {
        Some(s) => parse_int_list("m", s)?.into_iter().map(Some).collect(),
        None => vec![None],
    };
    let mut jobs = Vec::new();
    for id in &ids {
        for alpha in opt_list(&a.alpha) {
            for n in &ns {
                for m in &ms {
                    jobs.push((*id, build_params(a, &alpha, *n, *m, &ctx)?));
                }
            }
        }
    }
    let results: Vec<_> = jobs.par_iter().map(|(id, p)| verify(*id, p, &ctx)).collect();
    let mut reports = Vec::with_capacity(results.len());
    for r in results {
        reports.push(r?);
    }
    let digits = a.common.digits as usize;
    let all_passed = reports.iter().all(|r| r.passed);
    let mut table = Table::new(&["id", "params", "lhs", "rhs", "residual", "passed"]);
    for r in &reports {
        table.push(vec![
            r.id.clone(),
            r.params_string(),
            r.lhs.to_string_digits(digits),
            r.rhs.to_string_digits(digits),
            r.abs_residual.to_sci_string(6),
            r.passed.to_string(),
        ]);
    }
    let doc = json!({
        "schema": 1,
        "command": "verify",
        "digits": a.common.digits,
        "all_passed": all_passed,
        "reports": reports.iter().map(|r| r.to_json(digits)).collect::<Vec<_>>(),
    });
    let mut text = String::new();
    for r in &reports {
        text.push_str(&format!(
            "{} {} [{}] residual={} tol={}",
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.params_string(),
            r.abs_residual.to_sci_string(4),
            r.tolerance.to_sci_string(2),
        ));
        if let Some(n) = &r.note {
            text.push_str(&format!(" ({n})"));
        }
        text.push('\n');
        text.push_str(&format!(
            "  lhs = {}\n  rhs = {}\n",
            r.lhs.to_string_digits(digits),
            r.rhs.to_string_digits(digits)
        ));
    }
    emit(&a.common, &doc, &table, &text)?;
    Ok(all_passed)
}

fn load_character(path: &Option<std::path::PathBuf>, flag: &str) -> Result<Option<DirichletCharacter>, Failure> {
    match path {
        None => Ok(None),
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| Failure::Usage(format!("--{flag} {}: {e}", p.display())))?;
            DirichletCharacter::from_json(&text)
                .map(Some)
                .map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
        }
    }
}

fn character_pair(c: &CharacterArgs) -> Result<Option<(DirichletCharacter, DirichletCharacter)>, Failure> {
    let chi = load_character(&c.chi_file, "chi-file")?;
    let psi = load_character(&c.psi_file, "psi-file")?;
    match (chi, psi) {
        (Some(a), Some(b)) => Ok(Some((a, b))),
        (None, None) => Ok(None),
        _ => Err(Failure::Usage(
            "--chi-file and --psi-file must be given together".into(),
        )),
    }
}

fn pair_rows(reports: &[PairReport], digits: usize) -> (Vec<Value>, Table, String) {
    let mut table = Table::new(&[
        "chi_modulus",
        "psi_modulus",
        "k",
        "M",
        "outcome",
        "max_unit_distance",
        "flagged",
    ]);
    let mut text = String::new();
    let mut json_rows = Vec::new();
    for r in reports {
        let v = r.to_json(digits);
        let dist = v["report"]["max_unit_distance"].as_str().unwrap_or("").to_string();
        let outcome = v["outcome"].as_str().unwrap_or("").to_string();
        table.push(vec![
            r.chi.modulus().to_string(),
            r.psi.modulus().to_string(),
            r.k.to_string(),
            r.modulus_m.to_string(),
            outcome.clone(),
            dist.clone(),
            r.flagged().to_string(),
        ]);
        text.push_str(&format!(
            "{} chi mod {} {:?} psi mod {} {:?} k={} M={} {}{}\n",
            if r.flagged() { "FLAG" } else { "ok  " },
            r.chi.modulus(),
            r.chi.values(),
            r.psi.modulus(),
            r.psi.values(),
            r.k,
            r.modulus_m,
            outcome,
            if dist.is_empty() {
                String::new()
            } else {
                format!(" max||r|-1|={dist}")
            },
        ));
        json_rows.push(v);
    }
    (json_rows, table, text)
}

fn run_roots(a: &RootsArgs) -> Outcome {
    let ctx = context(a.common.digits)?;
    let digits = a.common.digits as usize;
    if a.family.eq_ignore_ascii_case("generalized") {
        let (chi, psi) = character_pair(&a.chars)?
            .ok_or_else(|| Failure::Usage("--family generalized needs --chi-file and --psi-file".into()))?;
        let mm = a.chars.modulus_m.unwrap_or(psi.modulus());
        let tol = a.log10_tol.unwrap_or(-25);
        let ks = parse_u32_list("k", &a.k)?;
        let reports: Vec<PairReport> = ks
            .par_iter()
            .map(|&k| generalized_report(&chi, &psi, k, mm, tol, &ctx))
            .collect();
        let (rows, table, text) = pair_rows(&reports, digits);
        let ok = !reports.iter().any(PairReport::flagged);
        let doc = json!({ "schema": 1, "command": "roots", "family": "generalized", "digits": a.common.digits, "reports": rows });
        emit(&a.common, &doc, &table, &text)?;
        return Ok(ok);
    }
    let family: Family = a
        .family
        .parse()
        .map_err(|e: Error| Failure::Usage(format!("--family: {e}")))?;
    let tol = a.log10_tol.unwrap_or(family.default_log10_tolerance());
    let ms = parse_u32_list("m", &a.m)?;
    let results: Vec<_> = ms.par_iter().map(|&m| family_report(family, m, tol, &ctx)).collect();
    let mut reports = Vec::new();
    for r in results {
        reports.push(r?);
    }
    let ok = reports.iter().all(|r| r.verdict);
    let mut table = Table::new(&["poly_id", "degree", "num_real", "max_unit_distance", "verdict"]);
    let mut text = String::new();
    for r in &reports {
        let dist = r
            .max_unit_distance
            .as_ref()
            .map(|d| d.to_sci_string(4))
            .unwrap_or_else(|| "-".into());
        table.push(vec![
            r.poly_id.clone(),
            r.degree.to_string(),
            r.num_real.to_string(),
            dist.clone(),
            r.verdict.to_string(),
        ]);
        text.push_str(&format!(
            "{} {} degree={} real={} max||r|-1|={}",
            if r.verdict { "ok  " } else { "FLAG" },
            r.poly_id,
            r.degree,
            r.num_real,
            dist
        ));
        if let Some(x) = r.largest_real_root() {
            text.push_str(&format!(" largest_real={}", x.to_sci_string(20)));
        }
        text.push('\n');
    }
    let doc = json!({
        "schema": 1,
        "command": "roots",
        "family": family.as_str(),
        "digits": a.common.digits,
        "reports": reports.iter().map(|r| r.to_json(digits)).collect::<Vec<_>>(),
    });
    emit(&a.common, &doc, &table, &text)?;
    Ok(ok)
}

fn run_conjecture(a: &ConjectureArgs) -> Outcome {
    let ctx = context(a.common.digits)?;
    let digits = a.common.digits as usize;
    let ks = parse_u32_list("k", &a.k)?;
    let (lo, hi) = match (ks.first(), ks.last()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => return Err(Failure::Usage("--k: empty range".into())),
    };
    let jobs = match character_pair(&a.chars)? {
        Some((chi, psi)) => ks.iter().map(|&k| (chi.clone(), psi.clone(), k)).collect(),
        None => conjecture_jobs(a.max_modulus, lo..=hi),
    };
    let reports: Vec<PairReport> = jobs
        .par_iter()
        .map(|(chi, psi, k)| {
            let mm = a.chars.modulus_m.unwrap_or(psi.modulus());
            generalized_report(chi, psi, *k, mm, a.log10_tol, &ctx)
        })
        .collect();
    let flagged = reports.iter().filter(|r| r.flagged()).count();
    let zero = reports
        .iter()
        .filter(|r| matches!(r.outcome, zetalab::polyroots::PairOutcome::Zero))
        .count();
    let (rows, table, mut text) = pair_rows(&reports, digits);
    text.push_str(&format!(
        "{} jobs, {} identically zero, {} flagged\n",
        reports.len(),
        zero,
        flagged
    ));
    let doc = json!({
        "schema": 1,
        "command": "conjecture",
        "digits": a.common.digits,
        "log10_tolerance": a.log10_tol,
        "jobs": reports.len(),
        "zero": zero,
        "flagged": flagged,
        "reports": rows,
    });
    emit(&a.common, &doc, &table, &text)?;
    Ok(flagged == 0)
}

fn run_list(as_json: bool, output: Option<std::path::PathBuf>) -> Outcome {
    let common = Common {
        digits: 50,
        format: if as_json {
            args::Format::Json
        } else {
            args::Format::Text
        },
        output,
    };
    let doc = json!({ "schema": 1, "identities": registry().iter().map(|s| s.to_json()).collect::<Vec<_>>() });
    let mut table = Table::new(&["id", "tag", "params"]);
    for s in registry() {
        let params: Vec<String> = s.params.iter().map(|p| format!("{}={}", p.name, p.default)).collect();
        table.push(vec![s.id.to_string(), s.tag.to_string(), params.join(" ")]);
    }
    emit(&common, &doc, &table, &output::plain(&table))?;
    Ok(true)
}
