use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use numsg::sylvester::ClosedForms;
use numsg::verify::{self, VerifyConfig};
use numsg::*;

use crate::{CliConfig, Command, OutputFormat};

/// Outcome of a command that ran to completion.
pub enum Status {
    Ok,
    /// A self-check (verify, closed form against enumeration) reported a mismatch.
    CheckFailed,
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn emit_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

pub fn execute(command: &Command, config: &CliConfig) -> Result<Status> {
    let json = config.output_format == OutputFormat::Json;
    let cap = config.enumeration_cap;
    match command {
        Command::Gaps { gens } => {
            let s = NumericalSemigroup::from_big(gens)?;
            let gaps = s.gaps_capped(cap)?;
            if json {
                emit_json(gaps);
            } else {
                let list = if gaps.gaps.is_empty() {
                    "(none)".to_string()
                } else {
                    gaps.gaps.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
                };
                println!("gaps: {list}; genus {}; frobenius {}", gaps.genus, gaps.frobenius);
            }
        }
        Command::Apery { gens, t } => {
            let ap = NumericalSemigroup::from_big(gens)?.apery_set(*t)?;
            if json {
                emit_json(&ap);
            } else {
                println!("{}", join(&ap.sorted()));
            }
        }
        Command::Frobenius { gens } => {
            let f = NumericalSemigroup::from_big(gens)?.gaps_capped(cap)?.frobenius;
            if json {
                emit_json(&json!({ "frobenius": f.to_string() }));
            } else {
                println!("{f}");
            }
        }
        Command::Genus { gens } => {
            let g = NumericalSemigroup::from_big(gens)?.gaps_capped(cap)?.genus;
            if json {
                emit_json(&json!({ "genus": g.to_string() }));
            } else {
                println!("{g}");
            }
        }
        Command::Hilbert { gens, t } => {
            let h = hilbert_series(&NumericalSemigroup::from_big(gens)?, *t)?;
            if json {
                emit_json(&h);
            } else {
                println!("({}) / (1 - x^{})", h.numerator, h.denominator_exponent);
            }
        }
        Command::Analyze { seq } => {
            let a = analyze_sequence(seq)?;
            if json {
                emit_json(&a);
            } else {
                let verdict = if a.is_smooth { "smooth" } else { "not smooth" };
                println!("{verdict} (c = {})", join(&a.c_values));
                if a.require_free().is_ok() {
                    println!("frobenius {}; genus {}", a.frobenius_closed(), a.genus_closed());
                }
            }
        }
        Command::Compound { a, b } => {
            let pair = SuitablePair::new(a.clone(), b.clone())?;
            let g = compound_from_pair(&pair);
            if json {
                emit_json(&json!({ "a": strings(a), "b": strings(b), "sequence": strings(&g) }));
            } else {
                println!("{}", join(&g));
            }
        }
        Command::Detect { seq } => {
            let found = detect_compound(seq)?;
            if json {
                let value = match &found {
                    Some(p) => json!({ "compound": true, "a": strings(p.a()), "b": strings(p.b()) }),
                    None => json!({ "compound": false }),
                };
                emit_json(&value);
            } else {
                match found {
                    Some(p) => println!("compound: A = {}; B = {}", join(p.a()), join(p.b())),
                    None => println!("not compound"),
                }
            }
        }
        Command::Rho { seq, j } => {
            let (p, c) = permute_rho(seq, *j)?;
            if json {
                emit_json(&json!({ "sequence": strings(&p), "c": strings(&c) }));
            } else {
                println!("{} (c = {})", join(&p), join(&c));
            }
        }
        Command::Represent { seq, n } => {
            let a = analyze_sequence(seq)?;
            let rep = unique_representation(&a, n)?;
            let class = classify(&a, n)?;
            if json {
                emit_json(&json!({
                    "n": rep.n.to_string(),
                    "digits": strings(&rep.digits),
                    "membership": class,
                }));
            } else {
                let terms: Vec<String> =
                    rep.digits.iter().zip(seq).map(|(d, g)| format!("{d}*{g}")).collect();
                let label = match class {
                    Membership::NotInSemigroup => "not in S",
                    Membership::InSemigroup => "in S, not in the Apery set",
                    Membership::InApery => "in the Apery set",
                };
                println!("{} = {} ({label})", rep.n, terms.join(" + "));
            }
        }
        Command::Sylvester { seq, m } | Command::Alternating { seq, m } => {
            let report = invariant_report(seq, m, cap)?;
            if json {
                emit_json(&report);
            } else {
                print_sums(&report, matches!(command, Command::Sylvester { .. }));
            }
            if !report.all_agree() {
                eprintln!("numsg: closed form disagrees with enumeration");
                return Ok(Status::CheckFailed);
            }
        }
        Command::Wangwang { a, b, m } => {
            let t = wang_wang_t(*a, *b, *m)?;
            if json {
                emit_json(&json!({ "a": a.to_string(), "b": b.to_string(), "m": m, "T": t.to_string() }));
            } else {
                println!("{t}");
            }
        }
        Command::Verify { count, .. } => {
            let cfg = VerifyConfig {
                count: *count,
                seed: config.seed.unwrap_or(0),
                enumeration_cap: cap,
                ..VerifyConfig::default()
            };
            let summary = verify::run(&cfg);
            if json {
                emit_json(&summary);
            } else {
                println!("seed {}", summary.seed);
                for check in &summary.checks {
                    println!("{}: {} passed, {} failed", check.name, check.passed, check.failed);
                }
            }
            for check in &summary.checks {
                for failure in &check.failures {
                    eprintln!("numsg: {}: {failure}", check.name);
                }
            }
            if !summary.all_passed() {
                return Ok(Status::CheckFailed);
            }
        }
        Command::Bench { seq } => return bench(seq, json, cap),
    }
    Ok(Status::Ok)
}

fn print_sums(report: &SylvesterReport, with_plain: bool) {
    let rows: Vec<(u32, String, String)> = report
        .t
        .iter()
        .map(|(m, t)| (*m, report.s[m].to_string(), t.to_string()))
        .collect();
    let ws = rows.iter().map(|r| r.1.len()).max().unwrap_or(0).max(3);
    let wt = rows.iter().map(|r| r.2.len()).max().unwrap_or(0).max(3);
    if with_plain {
        println!("{:>3}  {:>ws$}  {:>wt$}", "m", "S_m", "T_m");
        for (m, s, t) in &rows {
            println!("{m:>3}  {s:>ws$}  {t:>wt$}");
        }
    } else {
        println!("{:>3}  {:>wt$}", "m", "T_m");
        for (m, _, t) in &rows {
            println!("{m:>3}  {t:>wt$}");
        }
    }
}

#[derive(Serialize)]
struct BenchResult {
    sequence: Vec<String>,
    closed_seconds: f64,
    enumeration_seconds: f64,
    speedup: f64,
    agree: bool,
}

fn bench(seq: &[BigInt], json: bool, cap: u64) -> Result<Status> {
    let start = Instant::now();
    let forms = ClosedForms::with_cap(&analyze_sequence(seq)?, cap)?;
    let closed: Vec<(BigInt, BigInt)> = (0..=2)
        .map(|m| Ok((forms.sylvester(m)?, forms.alternating(m)?)))
        .collect::<Result<_>>()?;
    let closed_time = start.elapsed().as_secs_f64();

    let start = Instant::now();
    let s = NumericalSemigroup::from_big(seq)?;
    let enumerated: Vec<(BigInt, BigInt)> =
        (0..=2).map(|m| sums_by_enumeration(&s, m, cap)).collect::<Result<_>>()?;
    let enumeration_time = start.elapsed().as_secs_f64();

    let result = BenchResult {
        sequence: strings(seq),
        closed_seconds: closed_time,
        enumeration_seconds: enumeration_time,
        speedup: enumeration_time / closed_time.max(1e-9),
        agree: closed == enumerated,
    };
    if json {
        emit_json(&result);
    } else {
        println!("closed form:  {:.6} s", result.closed_seconds);
        println!("enumeration:  {:.6} s", result.enumeration_seconds);
        println!("speedup:      {:.0}x", result.speedup);
        println!("agree:        {}", if result.agree { "yes" } else { "no" });
    }
    Ok(if result.agree { Status::Ok } else { Status::CheckFailed })
}
