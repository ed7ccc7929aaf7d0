//! Seeded generators of random semigroups and smooth sequences for property runs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;

use crate::semigroup::NumericalSemigroup;
use crate::smooth::{analyze_sequence, compound_from_pair, permute_rho, SuitablePair};

/// Between 1 and `max_gens` generators drawn from `1..=max_gen`, resampled until coprime.
pub fn random_semigroup<R: Rng + ?Sized>(rng: &mut R, max_gens: usize, max_gen: u64) -> NumericalSemigroup {
    loop {
        let n = rng.gen_range(1..=max_gens);
        let gens: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=max_gen)).collect();
        if gens.iter().fold(0, |acc, g| g.gcd(&acc)) == 1 {
            return NumericalSemigroup::new(gens).expect("coprime by construction");
        }
    }
}

/// A suitable pair of `k`-tuples with entries in `2..=max_entry`, by rejection.
pub fn random_suitable_pair<R: Rng + ?Sized>(rng: &mut R, k: usize, max_entry: u64) -> SuitablePair {
    loop {
        let a: Vec<u64> = (0..k).map(|_| rng.gen_range(2..=max_entry)).collect();
        let b: Vec<u64> = (0..k).map(|_| rng.gen_range(2..=max_entry)).collect();
        if let Ok(pair) = SuitablePair::from_u64(&a, &b) {
            return pair;
        }
    }
}

/// A compound sequence with `1..=max_k` steps.
pub fn random_compound<R: Rng + ?Sized>(rng: &mut R, max_k: usize, max_entry: u64) -> Vec<BigInt> {
    let k = rng.gen_range(1..=max_k);
    compound_from_pair(&random_suitable_pair(rng, k, max_entry))
}

/// A compound sequence, half the time passed through a random `rho_j`, which keeps it
/// smooth but usually not compound.
pub fn random_smooth<R: Rng + ?Sized>(rng: &mut R, max_k: usize, max_entry: u64) -> Vec<BigInt> {
    let seq = random_compound(rng, max_k, max_entry);
    if rng.gen_bool(0.5) {
        let j = rng.gen_range(0..seq.len());
        permute_rho(&seq, j).expect("compound by construction").0
    } else {
        seq
    }
}

/// Smooth sequence whose Frobenius number is at most `frobenius_bound` and whose
/// leading entry is at most `max_leading`.
pub fn random_smooth_bounded<R: Rng + ?Sized>(
    rng: &mut R,
    max_k: usize,
    max_entry: u64,
    frobenius_bound: u64,
    max_leading: u64,
) -> Vec<BigInt> {
    loop {
        let seq = random_smooth(rng, max_k, max_entry);
        let a = analyze_sequence(&seq).expect("positive entries");
        let f_ok = a.frobenius_closed() <= BigInt::from(frobenius_bound);
        let lead_ok = seq[0].to_u64().is_some_and(|g| g <= max_leading);
        if f_ok && lead_ok {
            return seq;
        }
    }
}
