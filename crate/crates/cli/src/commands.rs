use std::time::Instant;

use clap::{Args, ValueEnum};
use klm_core::closed_forms::coeff_uniform_klum;
use klm_core::identities::identity_findings;
use klm_core::tableaux::in_skyt_rho;
use klm_core::verify::{Suite, SuiteReport};
use klm_core::{
    build_rho_uniform, coeff_rho, count_overline_skyt, count_skyt_rho_direct, enumerate_skyt, kl_poly,
    BigInt, IntPoly, RhoUniformParams,
};
use serde_json::{json, Value};

use crate::output::{CliError, CliResult, Format, OutputEnvelope};

const DEFAULT_MAX_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Skew tableau count minus rho times the overline count.
    Tableau,
    /// Hypergeometric closed sum, minus rho times the overline count.
    ClosedForm,
    /// Recurrence over the lattice of flats.
    Oracle,
    /// Enumerate the restricted family of fillings.
    Direct,
    /// Every method, with a consistency check.
    All,
}

impl Method {
    const SINGLE: [Method; 4] = [Method::Tableau, Method::ClosedForm, Method::Oracle, Method::Direct];

    fn name(self) -> &'static str {
        match self {
            Method::Tableau => "tableau",
            Method::ClosedForm => "closed-form",
            Method::Oracle => "oracle",
            Method::Direct => "direct",
            Method::All => "all",
        }
    }

    fn expand(self) -> Vec<Method> {
        if self == Method::All {
            Self::SINGLE.to_vec()
        } else {
            vec![self]
        }
    }
}

#[derive(Debug, Args)]
pub struct MatroidArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = 0)]
    rho: usize,
}

impl MatroidArgs {
    fn params(&self) -> Result<RhoUniformParams, CliError> {
        Ok(RhoUniformParams::new(self.m, self.d, self.rho)?)
    }
}

#[derive(Debug, Args)]
pub struct CoeffArgs {
    #[command(flatten)]
    matroid: MatroidArgs,
    #[arg(long)]
    i: usize,
    #[arg(long, value_enum, default_value_t = Method::Tableau)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
pub struct KlpolyArgs {
    #[command(flatten)]
    matroid: MatroidArgs,
    #[arg(long, value_enum, default_value_t = Method::Tableau)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Skyt,
    Overline,
    Rho,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    a: usize,
    #[arg(long)]
    i: usize,
    #[arg(long)]
    b: usize,
    #[arg(long, value_enum, default_value_t = Family::Skyt)]
    family: Family,
    /// Rank for `--family rho`.
    #[arg(long)]
    d: Option<usize>,
    /// Removed bases for `--family rho`.
    #[arg(long, default_value_t = 0)]
    rho: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    #[value(alias = "theorem1")]
    RhoCoeffs,
    #[value(alias = "theorem2")]
    UniformCoeffs,
    Symmetry,
    Charpoly,
    Minors,
    Flats,
    Identities,
    Gf,
    Monotonicity,
    Counting,
    Catalan,
    Exchange,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// Overrides every suite's largest ground set.
    #[arg(long)]
    max_n: Option<usize>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
    /// Also report the parameter ranges where identities are known not to hold.
    #[arg(long)]
    findings: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    m_max: usize,
    #[arg(long)]
    d_max: usize,
    #[arg(long, default_value_t = 0)]
    rho: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Ground-set cap for the oracle, from `KLM_MAX_N`.
fn oracle_limit() -> Result<usize, CliError> {
    match std::env::var("KLM_MAX_N") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("KLM_MAX_N must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn oracle_poly(p: RhoUniformParams) -> Result<IntPoly, CliError> {
    let limit = oracle_limit()?;
    if p.ground_size() > limit {
        return Err(CliError::Usage(format!(
            "oracle needs {} elements, above KLM_MAX_N = {limit}",
            p.ground_size()
        )));
    }
    Ok(kl_poly(&build_rho_uniform(p)?))
}

fn overline_term(p: RhoUniformParams, i: usize) -> BigInt {
    let b = p.d as i64 - 2 * i as i64 + 1;
    count_overline_skyt(i as i64, b) * p.removed()
}

fn coeff_by(method: Method, p: RhoUniformParams, i: usize) -> Result<BigInt, CliError> {
    let v = match method {
        Method::Tableau => coeff_rho(p.m, p.d, i, p.rho)?,
        Method::ClosedForm => coeff_uniform_klum(p.m, p.d, i)? - overline_term(p, i),
        Method::Oracle => oracle_poly(p)?.coeff(i),
        Method::Direct => count_skyt_rho_direct(p.m, p.d, i, p.rho)?,
        Method::All => unreachable!("expanded before evaluation"),
    };
    Ok(v)
}

fn poly_by(method: Method, p: RhoUniformParams) -> Result<IntPoly, CliError> {
    if method == Method::Oracle {
        return oracle_poly(p);
    }
    let top = if p.d == 0 { 1 } else { p.coefficient_range().end };
    let coeffs = (0..top).map(|i| coeff_by(method, p, i)).collect::<Result<Vec<_>, _>>()?;
    Ok(IntPoly::new(coeffs))
}

fn params_json(p: RhoUniformParams) -> Value {
    json!({"m": p.m, "d": p.d, "rho": p.rho})
}

fn disagreement(names: &[&str]) -> CliError {
    CliError::Failure(format!("methods disagree: {}", names.join(", ")))
}

fn all_equal<T: PartialEq>(values: &[T]) -> bool {
    values.windows(2).all(|w| w[0] == w[1])
}

pub fn coeff(args: CoeffArgs) -> CliResult {
    let start = Instant::now();
    let p = args.matroid.params()?;
    let methods = args.method.expand();
    let values = methods
        .iter()
        .map(|&m| coeff_by(m, p, args.i))
        .collect::<Result<Vec<_>, _>>()?;
    let agree = all_equal(&values);
    let names: Vec<&str> = methods.iter().map(|m| m.name()).collect();
    match args.format {
        Format::Text if methods.len() == 1 => println!("{}", values[0]),
        Format::Text => {
            for (n, v) in names.iter().zip(&values) {
                println!("{n}: {v}");
            }
            println!("{}", if agree { "agree" } else { "FAIL" });
        }
        Format::Csv => {
            println!("m,d,rho,i,method,coefficient");
            for (n, v) in names.iter().zip(&values) {
                println!("{},{},{},{},{n},{v}", p.m, p.d, p.rho, args.i);
            }
        }
        Format::Json => {
            let by_method: serde_json::Map<String, Value> = names
                .iter()
                .zip(&values)
                .map(|(n, v)| (n.to_string(), Value::String(v.to_string())))
                .collect();
            let mut query = params_json(p);
            query["i"] = json!(args.i);
            let result = json!({"values": by_method, "agree": agree});
            OutputEnvelope::new(query, result, args.method.name(), start).print();
        }
    }
    if agree {
        Ok(())
    } else {
        Err(disagreement(&names))
    }
}

pub fn klpoly(args: KlpolyArgs) -> CliResult {
    let start = Instant::now();
    let p = args.matroid.params()?;
    let methods = args.method.expand();
    let polys = methods
        .iter()
        .map(|&m| poly_by(m, p))
        .collect::<Result<Vec<_>, _>>()?;
    let agree = all_equal(&polys);
    let names: Vec<&str> = methods.iter().map(|m| m.name()).collect();
    match args.format {
        Format::Text if methods.len() == 1 => println!("{}", polys[0]),
        Format::Text => {
            for (n, q) in names.iter().zip(&polys) {
                println!("{n}: {q}");
            }
            println!("{}", if agree { "agree" } else { "FAIL" });
        }
        Format::Csv => {
            println!("m,d,rho,i,coefficient");
            for (i, c) in polys[0].coeffs().iter().enumerate() {
                println!("{},{},{},{i},{c}", p.m, p.d, p.rho);
            }
        }
        Format::Json => {
            let by_method: serde_json::Map<String, Value> = names
                .iter()
                .zip(&polys)
                .map(|(n, q)| {
                    let cs: Vec<String> = q.coeffs().iter().map(|c| c.to_string()).collect();
                    (n.to_string(), json!({"coefficients": cs, "display": q.to_string()}))
                })
                .collect();
            let result = json!({"polynomials": by_method, "agree": agree});
            OutputEnvelope::new(params_json(p), result, args.method.name(), start).print();
        }
    }
    if agree {
        Ok(())
    } else {
        Err(disagreement(&names))
    }
}

pub fn enumerate(args: EnumerateArgs) -> CliResult {
    if args.format == Format::Csv {
        return Err(CliError::Usage("enumerate supports --format text or json".into()));
    }
    let all = enumerate_skyt(args.a, args.i, args.b)?;
    let keep: Box<dyn Fn(&klm_core::Filling) -> bool> = match args.family {
        Family::Skyt => Box::new(|_| true),
        Family::Overline => Box::new(|f| f.is_overline()),
        Family::Rho => {
            let d = args
                .d
                .ok_or_else(|| CliError::Usage("--family rho needs --d".into()))?;
            let p = RhoUniformParams::new(args.a.saturating_sub(1), d, args.rho)?;
            if 2 * args.i >= d || args.b != d - 2 * args.i + 1 {
                return Err(CliError::Usage(format!(
                    "--family rho needs b = d - 2i + 1 with 2i < d (got b = {}, d = {d}, i = {})",
                    args.b, args.i
                )));
            }
            Box::new(move |f| in_skyt_rho(f, p.d, p.removed()))
        }
    };
    let mut count = 0u64;
    for f in all.iter().filter(|f| keep(f)) {
        count += 1;
        match args.format {
            Format::Json => println!("{}", serde_json::to_string(f).expect("filling serializes")),
            _ => {
                let cols: Vec<String> = f
                    .columns()
                    .iter()
                    .map(|c| {
                        let v: Vec<String> = c.iter().map(u32::to_string).collect();
                        format!("[{}]", v.join(" "))
                    })
                    .collect();
                println!("{}", cols.join(" "));
            }
        }
    }
    match args.format {
        Format::Json => println!("{}", json!({"count": count.to_string()})),
        _ => println!("count: {count}"),
    }
    Ok(())
}

pub fn verify(args: VerifyArgs) -> CliResult {
    if args.format == Format::Csv {
        return Err(CliError::Usage("verify supports --format text or json".into()));
    }
    if let Some(j) = args.jobs {
        if j == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let start = Instant::now();
    let suites: Vec<Suite> = match args.suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        one => vec![suite_of(one)],
    };
    let reports: Vec<SuiteReport> = suites.iter().map(|s| s.run(args.max_n)).collect();
    let findings = if args.findings { identity_findings() } else { Vec::new() };
    let passed = reports.iter().all(|r| r.passed);
    match args.format {
        Format::Json => {
            let query = json!({"suite": format!("{:?}", args.suite).to_lowercase(), "max_n": args.max_n});
            let result = json!({"passed": passed, "suites": reports, "findings": findings});
            OutputEnvelope::new(query, result, "verify", start).print();
        }
        _ => {
            for r in &reports {
                println!("suite {}: {}", r.suite, if r.passed { "PASS" } else { "FAIL" });
                for line in &r.reports {
                    println!("  {line}");
                }
            }
            for f in &findings {
                println!("finding (expected to fail): {f}");
            }
            println!("{}", if passed { "all suites passed" } else { "FAIL" });
        }
    }
    if passed {
        Ok(())
    } else {
        let first = reports
            .iter()
            .flat_map(|r| &r.reports)
            .find(|r| !r.passed)
            .map(|r| r.to_string())
            .unwrap_or_default();
        Err(CliError::Failure(format!("verification failed: {first}")))
    }
}

fn suite_of(s: SuiteArg) -> Suite {
    match s {
        SuiteArg::RhoCoeffs => Suite::RhoCoeffs,
        SuiteArg::UniformCoeffs => Suite::UniformCoeffs,
        SuiteArg::Symmetry => Suite::Symmetry,
        SuiteArg::Charpoly => Suite::Charpoly,
        SuiteArg::Minors => Suite::Minors,
        SuiteArg::Flats => Suite::Flats,
        SuiteArg::Identities => Suite::Identities,
        SuiteArg::Gf => Suite::Gf,
        SuiteArg::Monotonicity => Suite::Monotonicity,
        SuiteArg::Counting => Suite::Counting,
        SuiteArg::Catalan => Suite::Catalan,
        SuiteArg::Exchange => Suite::Exchange,
        SuiteArg::All => unreachable!("expanded by the caller"),
    }
}

pub fn table(args: TableArgs) -> CliResult {
    let start = Instant::now();
    let mut rows = Vec::new();
    for m in 1..=args.m_max {
        for d in 0..=args.d_max {
            let Ok(p) = RhoUniformParams::new(m, d, args.rho) else { continue };
            let top = if d == 0 { 1 } else { p.coefficient_range().end };
            for i in 0..top {
                rows.push((p, i, coeff_rho(m, d, i, args.rho)?));
            }
        }
    }
    match args.format {
        Format::Csv => {
            println!("m,d,rho,i,coefficient");
            for (p, i, c) in &rows {
                println!("{},{},{},{i},{c}", p.m, p.d, p.rho);
            }
        }
        Format::Text => {
            println!("{:>3} {:>3} {:>4} {:>3}  coefficient", "m", "d", "rho", "i");
            for (p, i, c) in &rows {
                println!("{:>3} {:>3} {:>4} {:>3}  {c}", p.m, p.d, p.rho, i);
            }
        }
        Format::Json => {
            let out: Vec<Value> = rows
                .iter()
                .map(|(p, i, c)| json!({"m": p.m, "d": p.d, "rho": p.rho, "i": i, "coefficient": c.to_string()}))
                .collect();
            let query = json!({"m_max": args.m_max, "d_max": args.d_max, "rho": args.rho});
            OutputEnvelope::new(query, Value::Array(out), "tableau", start).print();
        }
    }
    Ok(())
}
