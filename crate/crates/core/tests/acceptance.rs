//! Acceptance suite. Runs without the libtest harness so every criterion prints
//! exactly one PASS/FAIL line; the process exits non-zero if any criterion fails.

use std::collections::{BTreeSet, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use numsg::random::{random_semigroup, random_smooth_bounded};
use numsg::smooth::to_big;
use numsg::sylvester::{wang_wang_explicit, ClosedForms};
use numsg::*;

type Outcome = std::result::Result<String, Box<dyn std::error::Error>>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+).into());
        }
    };
}

fn within(label: &str, elapsed: Duration, limit: Duration) -> Outcome {
    ensure!(elapsed < limit, "{label} took {elapsed:.2?}, limit {limit:?}");
    Ok(format!("{elapsed:.2?}"))
}

/// Gap list by an unbounded-knapsack sieve up to the Schur bound `(min-1)(max-1)`.
fn sieve_gaps(gens: &[u64]) -> Vec<u64> {
    let lo = *gens.iter().min().unwrap();
    let hi = *gens.iter().max().unwrap();
    let bound = ((lo - 1) * (hi - 1)) as usize + 1;
    let mut reach = vec![false; bound + 1];
    reach[0] = true;
    for &g in gens {
        for n in g as usize..=bound {
            reach[n] |= reach[n - g as usize];
        }
    }
    (1..=bound).filter(|&n| !reach[n]).map(|n| n as u64).collect()
}

fn power_sums(gaps: &[u64], m: u32) -> (BigInt, BigInt) {
    let mut s = BigInt::from(0);
    let mut t = BigInt::from(0);
    for &n in gaps {
        let v = BigInt::from(n).pow(m);
        if n % 2 == 0 {
            t += &v;
        } else {
            t -= &v;
        }
        s += v;
    }
    (s, t)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let cases: [(&[u64], Option<(u64, i64)>, Option<[i64; 3]>, [i64; 3]); 3] = [
        (&[3, 5], Some((4, 7)), Some([4, 14, 70]), [0, -2, -30]),
        (&[4, 6, 9], Some((6, 11)), Some([6, 29, 209]), [-4, -25, -201]),
        (&[2, 3], None, None, [-1, -1, -1]),
    ];
    for (gens, gf, s_exp, t_exp) in cases {
        let gaps = sieve_gaps(gens);
        let seq = to_big(gens);
        let forms = ClosedForms::new(&analyze_sequence(&seq)?)?;
        let sg = NumericalSemigroup::new(gens.iter().copied())?;
        if let Some((g, f)) = gf {
            ensure!(gaps.len() as u64 == g && *gaps.last().unwrap() as i64 == f, "oracle disagrees with golden on {gens:?}");
            ensure!(sg.genus() == g && sg.frobenius() == f, "genus/Frobenius of {gens:?}");
        }
        for m in 0..3u32 {
            let (s_oracle, t_oracle) = power_sums(&gaps, m);
            if let Some(s) = s_exp {
                ensure!(s_oracle == BigInt::from(s[m as usize]), "oracle S{m} of {gens:?} is {s_oracle}");
                ensure!(forms.sylvester(m)? == s_oracle, "closed S{m} of {gens:?}");
            }
            ensure!(t_oracle == BigInt::from(t_exp[m as usize]), "oracle T{m} of {gens:?} is {t_oracle}");
            ensure!(forms.alternating(m)? == t_oracle, "closed T{m} of {gens:?}");
        }
    }
    within("golden values", start.elapsed(), Duration::from_secs(1))
}

fn criterion_2() -> Outcome {
    let a = analyze_sequence(&to_big(&[6, 10, 11]))?;
    ensure!(a.is_smooth && a.c_values == to_big(&[3, 2]), "(6,10,11) should be smooth with c=(3,2)");
    let reversed = analyze_sequence(&to_big(&[11, 10, 6]))?;
    ensure!(!reversed.is_smooth && reversed.c_values == to_big(&[11, 1]), "(11,10,6) should be non-smooth with c=(11,1)");
    let pair = SuitablePair::from_u64(&[2, 2], &[3, 3])?;
    let g = compound_from_pair(&pair);
    ensure!(g == to_big(&[4, 6, 9]), "G((2,2),(3,3)) = {g:?}");
    let (rho, _) = permute_rho(&g, 1)?;
    ensure!(rho == to_big(&[6, 4, 9]), "rho_1 = {rho:?}");
    ensure!(analyze_sequence(&rho)?.is_smooth, "(6,4,9) should be smooth");
    ensure!(detect_compound(&rho)?.is_none(), "(6,4,9) should not be compound");
    Ok("4 classifications".into())
}

fn identity_instances() -> Vec<NumericalSemigroup> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    (0..120).map(|_| random_semigroup(&mut rng, 4, 30)).collect()
}

fn criterion_3(instances: &[NumericalSemigroup]) -> Outcome {
    let start = Instant::now();
    let family = TestFunction::standard_family();
    let mut checks = 0usize;
    for s in instances {
        let nr: BTreeSet<u64> = s.gaps().gaps.iter().copied().collect();
        for t in (1..=60u64).filter(|&t| s.contains(t as i64)) {
            for f in &family {
                let r = identity_sides(s, t, f)?;
                ensure!(r.lhs == r.rhs && r.rhs == r.rhs_congruence_form, "{s} t={t} f={f}");
                checks += 1;
            }
            let ap = s.apery_set(t)?;
            let ap_all: BTreeSet<u64> = ap.elements.iter().copied().collect();
            let ap_low: BTreeSet<u64> = ap_all.iter().copied().filter(|&n| n < t).collect();
            let shifted: BTreeSet<u64> = nr.iter().map(|n| n + t).collect();
            let lhs1: BTreeSet<u64> = shifted.difference(&nr).copied().collect();
            let rhs1: BTreeSet<u64> = ap_all.difference(&ap_low).copied().collect();
            let lhs2: BTreeSet<u64> = nr.difference(&shifted).copied().collect();
            let rhs2: BTreeSet<u64> = (0..t).filter(|n| !ap_low.contains(n)).collect();
            ensure!(lhs1 == rhs1 && lhs2 == rhs2, "set equalities fail for {s} t={t}");
        }
    }
    let time = within("identity suite", start.elapsed(), Duration::from_secs(30))?;
    Ok(format!("{} semigroups, {checks} identity checks, {time}", instances.len()))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let count = 220;
    for _ in 0..count {
        let seq = random_smooth_bounded(&mut rng, 4, 12, 1_000_000, u64::MAX);
        let a = analyze_sequence(&seq)?;
        let forms = ClosedForms::new(&a)?;
        let s = a.semigroup()?;
        ensure!(s.frobenius() == 2 * s.genus() as i64 - 1, "{seq:?} not symmetric");
        for m in 0..3 {
            let (so, to) = sums_by_enumeration(&s, m, DEFAULT_ENUMERATION_CAP)?;
            ensure!(forms.sylvester(m)? == so, "S{m} of {seq:?}");
            ensure!(forms.alternating(m)? == to, "T{m} of {seq:?}");
        }
    }
    let time = within("closed forms", start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{count} sequences, {time}"))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    for a in 1..=40u64 {
        for b in (1..=40u64).step_by(2) {
            if num_integer::gcd(a, b) != 1 {
                continue;
            }
            pairs += 1;
            let s = NumericalSemigroup::new([a, b])?;
            let explicit = wang_wang_explicit(a, b);
            for m in 0..=6 {
                let (_, tm) = sums_by_enumeration(&s, m, DEFAULT_ENUMERATION_CAP)?;
                let rec = wang_wang_t(a, b, m)?;
                ensure!(rec == tm, "T{m}({a},{b}) recurrence {rec} vs {tm}");
                if m <= 2 {
                    ensure!(explicit[m as usize] == BigRational::from_integer(tm.clone()), "explicit T{m}({a},{b})");
                }
                if a % 2 == 1 {
                    ensure!(wang_wang_t(b, a, m)? == rec, "T{m} not symmetric at ({a},{b})");
                }
            }
        }
    }
    let time = within("Wang-Wang", start.elapsed(), Duration::from_secs(30))?;
    Ok(format!("{pairs} pairs, {time}"))
}

fn criterion_6(instances: &[NumericalSemigroup]) -> Outcome {
    let mut checks = 0;
    for s in instances {
        for t in (1..=60u64).filter(|&t| s.contains(t as i64)) {
            let h = hilbert_series(s, t)?;
            let degree = (s.frobenius() + t as i64).max(0) as usize;
            let expansion = h.expand(degree);
            for (n, c) in expansion.iter().enumerate() {
                let expect = BigInt::from(s.contains(n as i64) as u8);
                ensure!(*c == expect, "{s} t={t}: coefficient of x^{n} is {c}");
            }
            checks += 1;
        }
    }
    Ok(format!("{checks} expansions"))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut points = 0usize;
    for _ in 0..50 {
        let seq = random_smooth_bounded(&mut rng, 4, 8, u64::MAX, 60);
        let a = analyze_sequence(&seq)?;
        let s = a.semigroup()?;
        let g0 = u64::try_from(&seq[0]).unwrap();
        let ap = s.apery_set(g0)?;
        let f = s.frobenius();
        let w = f + 2 * g0 as i64;
        let mut seen = HashSet::new();
        for n in -w..=w {
            let big = BigInt::from(n);
            let rep = unique_representation(&a, &big)?;
            ensure!(rep.reconstruct() == big, "{seq:?}: n={n} does not round-trip");
            for (d, c) in rep.digits[1..].iter().zip(&a.c_values) {
                ensure!(*d >= BigInt::from(0) && d < c, "{seq:?}: digit {d} out of range for n={n}");
            }
            ensure!(seen.insert(rep.digits), "{seq:?}: duplicate digits at n={n}");
            let in_s = s.contains(n);
            let in_ap = n >= 0 && ap.contains(n as u64);
            let expect = match (in_s, in_ap) {
                (false, _) => Membership::NotInSemigroup,
                (true, false) => Membership::InSemigroup,
                (true, true) => Membership::InApery,
            };
            ensure!(classify(&a, &big)? == expect, "{seq:?}: classify({n})");
            points += 1;
        }
    }
    Ok(format!("50 sequences, {points} points"))
}

fn criterion_8() -> Outcome {
    let pair = SuitablePair::from_u64(&[15, 16, 19, 23], &[17, 17, 18, 20])?;
    let seq = compound_from_pair(&pair);

    let start = Instant::now();
    let forms = ClosedForms::new(&analyze_sequence(&seq)?)?;
    let closed = (forms.sylvester(2)?, forms.alternating(2)?);
    let closed_time = start.elapsed();

    let start = Instant::now();
    let s = NumericalSemigroup::from_big(&seq)?;
    let enumerated = sums_by_enumeration(&s, 2, DEFAULT_ENUMERATION_CAP)?;
    let enum_time = start.elapsed();

    ensure!(closed == enumerated, "closed {closed:?} vs enumerated {enumerated:?}");
    let ratio = enum_time.as_secs_f64() / closed_time.as_secs_f64().max(1e-9);
    ensure!(ratio >= 100.0, "speedup only {ratio:.0}x");
    Ok(format!(
        "g0 = {}, closed {closed_time:.2?}, enumeration {enum_time:.2?}, {ratio:.0}x",
        seq[0]
    ))
}

fn main() -> ExitCode {
    let instances = identity_instances();
    let results: Vec<(&str, Outcome)> = vec![
        ("golden values", criterion_1()),
        ("explicit classifications", criterion_2()),
        ("identity suite", criterion_3(&instances)),
        ("closed forms vs enumeration", criterion_4()),
        ("Wang-Wang recurrence", criterion_5()),
        ("Hilbert series", criterion_6(&instances)),
        ("representation bijectivity", criterion_7()),
        ("closed-form speedup", criterion_8()),
    ];
    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {} ({name}): PASS [{detail}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL [{why}]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
