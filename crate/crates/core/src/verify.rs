//! Randomized property runs reproducing the identities at desk scale.
//!
//! Each instance draws from its own ChaCha stream, so results do not depend on
//! scheduling and a fixed seed always produces the same summary.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::identity::{apery_rhs_excluding_zero, hilbert_series, identity_sides, TestFunction};
use crate::random::{random_semigroup, random_smooth_bounded};
use crate::semigroup::NumericalSemigroup;
use crate::smooth::{analyze_sequence, classify, unique_representation, Membership};
use crate::sylvester::invariant_report;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub count: usize,
    pub seed: u64,
    pub enumeration_cap: u64,
    pub max_t: u64,
    pub frobenius_bound: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            count: 100,
            seed: 0,
            enumeration_cap: crate::semigroup::DEFAULT_ENUMERATION_CAP,
            max_t: 60,
            frobenius_bound: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifySummary {
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
}

impl VerifySummary {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }
}

pub fn instance_rng(seed: u64, check: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((check << 32) | index as u64);
    rng
}

fn run_check<F>(name: &'static str, id: u64, config: &VerifyConfig, f: F) -> CheckOutcome
where
    F: Fn(&mut ChaCha8Rng) -> Result<(), String> + Sync,
{
    let results: Vec<Result<(), String>> = (0..config.count)
        .into_par_iter()
        .map(|i| f(&mut instance_rng(config.seed, id, i)).map_err(|e| format!("#{i}: {e}")))
        .collect();
    let failures: Vec<String> = results.into_iter().filter_map(Result::err).collect();
    CheckOutcome {
        name,
        passed: config.count - failures.len(),
        failed: failures.len(),
        failures,
    }
}

pub fn run(config: &VerifyConfig) -> VerifySummary {
    let checks = vec![
        run_check("identity", 1, config, |rng| {
            check_identity(&random_semigroup(rng, 4, 30), config.max_t)
        }),
        run_check("set-equalities", 2, config, |rng| {
            let s = random_semigroup(rng, 4, 30);
            let bad: Vec<u64> = valid_moduli(&s, config.max_t)
                .filter(|&t| !set_equalities_hold(&s, t))
                .collect();
            bad.is_empty()
                .then_some(())
                .ok_or_else(|| format!("{s} t={bad:?}"))
        }),
        run_check("closed-form", 3, config, |rng| {
            let seq = random_smooth_bounded(rng, 4, 12, config.frobenius_bound, u64::MAX);
            let report = invariant_report(&seq, &[], config.enumeration_cap).map_err(|e| e.to_string())?;
            report
                .all_agree()
                .then_some(())
                .ok_or_else(|| format!("{:?}: {:?}", seq, report.agreement))
        }),
        run_check("representation", 4, config, |rng| {
            let seq = random_smooth_bounded(rng, 4, 8, u64::MAX, 60);
            check_representation(&seq)
        }),
    ];
    VerifySummary {
        seed: config.seed,
        checks,
    }
}

/// Elements of `S` in `1..=max_t`.
pub fn valid_moduli(s: &NumericalSemigroup, max_t: u64) -> impl Iterator<Item = u64> + '_ {
    (1..=max_t).filter(move |&t| s.contains(t as i64))
}

fn check_identity(s: &NumericalSemigroup, max_t: u64) -> Result<(), String> {
    for t in valid_moduli(s, max_t) {
        let ap = s.apery_set(t).map_err(|e| e.to_string())?;
        for f in TestFunction::standard_family() {
            let r = identity_sides(s, t, &f).map_err(|e| e.to_string())?;
            if !r.holds || apery_rhs_excluding_zero(&ap, &f) != r.rhs {
                return Err(format!("{s} t={t} f={f}: lhs {} rhs {}", r.lhs, r.rhs));
            }
        }
        let h = hilbert_series(s, t).map_err(|e| e.to_string())?;
        if !h.matches_semigroup(s) {
            return Err(format!("{s} t={t}: Hilbert expansion mismatch"));
        }
    }
    Ok(())
}

/// `(NR + t) \ NR = Ap(S;t) \ Ap_t` and `NR \ (NR + t) = [0, t) \ Ap_t`.
pub fn set_equalities_hold(s: &NumericalSemigroup, t: u64) -> bool {
    let Ok(ap) = s.apery_set(t) else {
        return false;
    };
    let nr: BTreeSet<u64> = s.gaps().gaps.iter().copied().collect();
    let shifted: BTreeSet<u64> = nr.iter().map(|n| n + t).collect();
    let all: BTreeSet<u64> = ap.elements.iter().copied().collect();
    let low: BTreeSet<u64> = ap.below_t().into_iter().collect();
    let interval: BTreeSet<u64> = (0..t).collect();
    let first = shifted.difference(&nr).copied().collect::<BTreeSet<_>>()
        == all.difference(&low).copied().collect::<BTreeSet<_>>();
    let second = nr.difference(&shifted).copied().collect::<BTreeSet<_>>()
        == interval.difference(&low).copied().collect::<BTreeSet<_>>();
    first && second
}

fn check_representation(seq: &[BigInt]) -> Result<(), String> {
    let a = analyze_sequence(seq).map_err(|e| e.to_string())?;
    let s = a.semigroup().map_err(|e| e.to_string())?;
    let lead = u64::try_from(&seq[0]).map_err(|e| e.to_string())?;
    let ap = s.apery_set(lead).map_err(|e| e.to_string())?;
    let bound = s.frobenius() + 2 * lead as i64;
    let mut seen = BTreeSet::new();
    for n in -bound..=bound {
        let nb = BigInt::from(n);
        let rep = unique_representation(&a, &nb).map_err(|e| e.to_string())?;
        if rep.reconstruct() != nb || !seen.insert(rep.digits.clone()) {
            return Err(format!("{seq:?}: representation of {n} is wrong or repeated"));
        }
        let expected = if !s.contains(n) {
            Membership::NotInSemigroup
        } else if ap.contains(n as u64) {
            Membership::InApery
        } else {
            Membership::InSemigroup
        };
        if classify(&a, &nb).map_err(|e| e.to_string())? != expected {
            return Err(format!("{seq:?}: classification of {n} disagrees"));
        }
    }
    Ok(())
}
