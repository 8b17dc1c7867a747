//! `oddsum`: exact evaluation, verification and scans for sums of the largest
//! odd divisor.

mod functions;
mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{ToPrimitive, Zero};
use oddsum::bitcore::{format_rational, parse_nat, parse_rational, to_decimal};
use oddsum::extremal::{self, MaxShape};
use oddsum::sums::{self, BruteLimits, FunctionId};
use oddsum::verify::{self, RangeConfig, Status, TheoremId, VerifyReport};
use oddsum::{Error, ExactRational, Nat};
use serde_json::Value;

use functions::Function;
use render::{csv_line, record, strings, value, Format};

#[derive(Parser, Debug)]
#[command(
    name = "oddsum",
    version,
    about = "Sums of the largest odd divisor, exactly"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Render rational values with this many significant digits.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..=10000))]
    decimal: Option<u32>,

    /// Cap on the number of terms a brute-force pass or scan may touch.
    #[arg(long, global = true, default_value_t = BruteLimits::default().max_terms)]
    max_terms: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one function at n (decimal or 0b-prefixed binary).
    Eval { function: String, n: String },
    /// Run one checker, or all of them.
    Verify {
        theorem: String,
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Minimum and maximum of g over the block [2^m, 2^(m+1)).
    Extremal { m: u64 },
    /// Maximum of g over the interval [a, b).
    MaxG { a: String, b: String },
    /// List n <= bound satisfying a predicate.
    Scan {
        predicate: Predicate,
        threshold: String,
        bound: String,
    },
    /// Weighted mean (1/n)·Σ f(k/n)·α(k)/k and its limit.
    Cesaro { function: String, n: String },
    /// One row per n in [from, to], one column per function.
    Table {
        functions: String,
        from: String,
        to: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Predicate {
    GBelow,
}

#[derive(Args, Debug)]
struct RangeArgs {
    #[arg(long)]
    max_n: Option<u64>,
    #[arg(long)]
    max_m: Option<u64>,
    #[arg(long)]
    max_r: Option<u64>,
    #[arg(long)]
    max_p: Option<u64>,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long)]
    bits: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
}

impl RangeArgs {
    fn config(&self) -> RangeConfig {
        let d = RangeConfig::default();
        RangeConfig {
            max_n: self.max_n.unwrap_or(d.max_n),
            max_m: self.max_m.unwrap_or(d.max_m),
            max_r: self.max_r.unwrap_or(d.max_r),
            max_p: self.max_p.unwrap_or(d.max_p),
            random_big_trials: self.trials.unwrap_or(d.random_big_trials),
            random_bits: self.bits.unwrap_or(d.random_bits),
            seed: self.seed.unwrap_or(d.seed),
        }
    }
}

struct Ctx {
    format: Format,
    decimal: Option<usize>,
    limits: BruteLimits,
}

impl Ctx {
    fn value(&self, r: &ExactRational) -> String {
        value(r, self.decimal)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        format: cli.format,
        decimal: cli.decimal.map(|d| d as usize),
        limits: BruteLimits {
            max_terms: cli.max_terms,
        },
    };
    let mut out = io::stdout().lock();
    match run(&cli.command, &ctx, &mut out) {
        Ok(code) => code,
        Err(err) => {
            let _ = out.flush();
            eprintln!("oddsum: {err}");
            ExitCode::from(match err {
                Error::Resource { .. } => 3,
                Error::Domain(_) | Error::Usage(_) => 2,
            })
        }
    }
}

fn run(command: &Command, ctx: &Ctx, out: &mut impl Write) -> oddsum::Result<ExitCode> {
    let text = match command {
        Command::Eval { function, n } => eval(ctx, function, n)?,
        Command::Verify { theorem, range } => return verify(ctx, theorem, &range.config(), out),
        Command::Extremal { m } => extremal_report(ctx, *m),
        Command::MaxG { a, b } => max_g(ctx, &parse_nat(a)?, &parse_nat(b)?)?,
        Command::Scan {
            predicate: Predicate::GBelow,
            threshold,
            bound,
        } => scan_g_below(ctx, &parse_rational(threshold)?, &parse_nat(bound)?)?,
        Command::Cesaro { function, n } => cesaro(ctx, function.parse()?, &parse_nat(n)?)?,
        Command::Table {
            functions,
            from,
            to,
        } => table(
            ctx,
            &functions::parse_list(functions)?,
            &parse_nat(from)?,
            &parse_nat(to)?,
        )?,
    };
    write_out(out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn write_out(out: &mut impl Write, text: &str) -> oddsum::Result<()> {
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Error::Usage(format!("cannot write output: {e}")))
}

fn domain(err: Error) -> Error {
    match err {
        Error::Domain(msg) => Error::Usage(msg.to_string()),
        other => other,
    }
}

fn eval(ctx: &Ctx, function: &str, n: &str) -> oddsum::Result<String> {
    let f: Function = function.parse()?;
    let n = parse_nat(n)?;
    let v = ctx.value(&f.eval(&n).map_err(domain)?);
    Ok(match ctx.format {
        Format::Plain => format!("{v}\n"),
        Format::Csv => format!(
            "function,n,value\n{}\n",
            csv_line(&[f.name(), &n.to_string(), &v])
        ),
        Format::Json => {
            let rec = record([
                ("function", f.name().to_string()),
                ("n", n.to_string()),
                ("value", v),
            ]);
            format!("{rec}\n")
        }
    })
}

const REPORT_COLUMNS: [&str; 15] = [
    "theorem", "status", "checked", "max_n", "max_m", "max_r", "max_p", "trials", "bits", "seed",
    "case", "claim", "relation", "expected", "actual",
];

fn report_fields(r: &VerifyReport) -> Vec<(&'static str, String)> {
    let status = match r.status {
        Status::Pass => "pass",
        Status::Fail => "fail",
    };
    let range = &r.range;
    let mut fields = vec![
        ("theorem", r.theorem.to_string()),
        ("status", status.to_string()),
        ("checked", r.checked_count.to_string()),
        ("max_n", range.max_n.to_string()),
        ("max_m", range.max_m.to_string()),
        ("max_r", range.max_r.to_string()),
        ("max_p", range.max_p.to_string()),
        ("trials", range.random_big_trials.to_string()),
        ("bits", range.random_bits.to_string()),
        ("seed", range.seed.to_string()),
    ];
    let cx = r.counterexample.as_ref();
    fields.push(("case", cx.map(|c| c.case.to_string()).unwrap_or_default()));
    fields.push(("claim", cx.map(|c| c.claim.to_string()).unwrap_or_default()));
    fields.push((
        "relation",
        cx.map(|c| c.relation.name().to_string())
            .unwrap_or_default(),
    ));
    fields.push((
        "expected",
        cx.map(|c| c.expected.clone()).unwrap_or_default(),
    ));
    fields.push(("actual", cx.map(|c| c.actual.clone()).unwrap_or_default()));
    fields
}

fn verify(
    ctx: &Ctx,
    theorem: &str,
    range: &RangeConfig,
    out: &mut impl Write,
) -> oddsum::Result<ExitCode> {
    let ids: Vec<TheoremId> = if theorem == "all" {
        TheoremId::ALL.to_vec()
    } else {
        vec![theorem.parse()?]
    };
    range.validate()?;
    let mut all_pass = true;
    let mut records = Vec::new();
    if ctx.format == Format::Csv {
        write_out(out, &format!("{}\n", REPORT_COLUMNS.join(",")))?;
    }
    for id in ids {
        let report = verify::check(id, range);
        all_pass &= report.passed();
        match ctx.format {
            Format::Plain => write_out(out, &format!("{}\n", report.to_record()))?,
            Format::Csv => {
                let values: Vec<String> =
                    report_fields(&report).into_iter().map(|(_, v)| v).collect();
                write_out(out, &format!("{}\n", csv_line(&values)))?;
            }
            Format::Json => records.push(record(report_fields(&report))),
        }
    }
    if ctx.format == Format::Json {
        write_out(out, &format!("{}\n", Value::Array(records)))?;
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn braces<'a>(points: impl IntoIterator<Item = &'a Nat>) -> String {
    let parts: Vec<String> = points.into_iter().map(Nat::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn extremal_report(ctx: &Ctx, m: u64) -> String {
    let report = extremal::argmax_g(m);
    let shape = match report.shape {
        MaxShape::Single => "single",
        MaxShape::Pair => "pair",
    };
    let min = ctx.value(&report.min_value);
    let max = ctx.value(&report.max_value);
    match ctx.format {
        Format::Plain => format!(
            "m {m}\nmin {min} at {}\nmax {max} at {}\n",
            braces(&report.min_points),
            braces(&report.max_points)
        ),
        Format::Csv => {
            let mut s = String::from("m,kind,value,point\n");
            for (kind, v, points) in [
                ("min", &min, &report.min_points),
                ("max", &max, &report.max_points),
            ] {
                for p in points {
                    s.push_str(&csv_line(&[&m.to_string(), kind, v, &p.to_string()]));
                    s.push('\n');
                }
            }
            s
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("m".into(), Value::String(m.to_string()));
            obj.insert("min_value".into(), Value::String(min));
            obj.insert("min_points".into(), strings(&report.min_points));
            obj.insert("max_value".into(), Value::String(max));
            obj.insert("max_points".into(), strings(&report.max_points));
            obj.insert("shape".into(), Value::String(shape.into()));
            format!("{}\n", Value::Object(obj))
        }
    }
}

/// `[a, b)` as `[2^m·n, 2^m·(n+1))` when it is an aligned dyadic block.
fn as_block(a: &Nat, b: &Nat) -> Option<(Nat, u64)> {
    let width = b - a;
    if width.count_ones() != 1 {
        return None;
    }
    let m = width.bits() - 1;
    let n = a >> m;
    (m >= 1 && !n.is_zero() && (&n << m) == *a).then_some((n, m))
}

fn max_g(ctx: &Ctx, a: &Nat, b: &Nat) -> oddsum::Result<String> {
    if a.is_zero() || b <= a {
        return Err(Error::Usage("max-g needs 1 <= a < b".into()));
    }
    let width = b - a;
    let (max, points, method) = match (width.to_u64(), b.to_u64()) {
        (Some(w), Some(hi)) if w <= ctx.limits.max_terms => {
            let lo = a.to_u64().expect("a < b");
            let (max, points) = extremal::scan_block_max(lo..hi).expect("nonempty interval");
            let points: Vec<Nat> = points.into_iter().map(Nat::from).collect();
            (max, Some(points), "scan")
        }
        _ => match as_block(a, b) {
            Some((n, m)) => (extremal::lambda_block(&n, m)?, None, "closed-form"),
            None => {
                return Err(Error::Resource {
                    what: "max-g over a non-dyadic interval",
                    requested: width.to_string(),
                    cap: ctx.limits.max_terms,
                })
            }
        },
    };
    let max = ctx.value(&max);
    let listed = points.as_ref().map(braces).unwrap_or_default();
    Ok(match ctx.format {
        Format::Plain => match &points {
            Some(_) => format!("max {max} at {listed}\n"),
            None => format!("max {max}\n"),
        },
        Format::Csv => format!(
            "a,b,max,points,method\n{}\n",
            csv_line(&[&a.to_string(), &b.to_string(), &max, &listed, method])
        ),
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("a".into(), Value::String(a.to_string()));
            obj.insert("b".into(), Value::String(b.to_string()));
            obj.insert("max".into(), Value::String(max));
            if let Some(p) = &points {
                obj.insert("points".into(), strings(p));
            }
            obj.insert("method".into(), Value::String(method.into()));
            format!("{}\n", Value::Object(obj))
        }
    })
}

fn scan_g_below(ctx: &Ctx, threshold: &ExactRational, bound: &Nat) -> oddsum::Result<String> {
    let found = extremal::scan_g_below(threshold, bound, &ctx.limits)?;
    Ok(match ctx.format {
        Format::Plain => {
            let parts: Vec<String> = found.iter().map(Nat::to_string).collect();
            format!("{}\n", parts.join(" "))
        }
        Format::Csv => {
            let mut s = String::from("n\n");
            for n in &found {
                s.push_str(&format!("{n}\n"));
            }
            s
        }
        Format::Json => format!("{}\n", strings(&found)),
    })
}

fn cesaro(ctx: &Ctx, f: FunctionId, n: &Nat) -> oddsum::Result<String> {
    let mean = sums::cesaro_mean(f, n, &ctx.limits).map_err(domain)?;
    let limit = sums::cesaro_limit(f);
    let mut fields = vec![
        ("function", f.name().to_string()),
        ("n", n.to_string()),
        ("mean", format_rational(&mean)),
        ("limit", limit.expr.to_string()),
    ];
    if let Some(sig) = ctx.decimal {
        let limit_value = limit
            .exact
            .clone()
            .unwrap_or_else(|| render::two_thirds_ln2(4 * sig as u64 + 64));
        fields.push(("mean_decimal", to_decimal(&mean, sig)));
        fields.push(("limit_decimal", to_decimal(&limit_value, sig)));
    }
    Ok(match ctx.format {
        Format::Plain => fields
            .iter()
            .skip(2)
            .map(|(k, v)| format!("{k} {v}\n"))
            .collect(),
        Format::Csv => {
            let keys: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            let values: Vec<&str> = fields.iter().map(|(_, v)| v.as_str()).collect();
            format!("{}\n{}\n", keys.join(","), csv_line(&values))
        }
        Format::Json => format!("{}\n", record(fields)),
    })
}

fn table(ctx: &Ctx, fns: &[Function], from: &Nat, to: &Nat) -> oddsum::Result<String> {
    if from > to {
        return Err(Error::Usage(format!(
            "empty range: from {from} exceeds to {to}"
        )));
    }
    ctx.limits.admit(&(to - from + 1u32), "table")?;
    let header: Vec<String> = std::iter::once("n".to_string())
        .chain(fns.iter().map(|f| f.name().to_string()))
        .collect();
    let mut rows = Vec::new();
    let mut n = from.clone();
    while &n <= to {
        let mut row = vec![n.to_string()];
        for f in fns {
            row.push(ctx.value(&f.eval(&n).map_err(domain)?));
        }
        rows.push(row);
        n += 1u32;
    }
    Ok(render::table(ctx.format, &header, &rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligned_blocks() {
        let nat = |v: u64| Nat::from(v);
        assert_eq!(as_block(&nat(8), &nat(16)), Some((nat(1), 3)));
        assert_eq!(as_block(&nat(24), &nat(32)), Some((nat(3), 3)));
        assert_eq!(as_block(&nat(9), &nat(17)), None);
        assert_eq!(as_block(&nat(8), &nat(15)), None);
    }

    #[test]
    fn decimal_only_on_request() {
        let r = ExactRational::new(1.into(), 6.into());
        assert_eq!(value(&r, None), "1/6");
        assert_eq!(value(&r, Some(5)), "0.16667");
    }
}
