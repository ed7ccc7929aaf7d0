//! Smooth and compound generating sequences.
//!
//! For `G = (g_0, ..., g_k)` let `d_i = gcd(g_0, ..., g_i)` and `c_i = d_{i-1} / d_i`.
//! `G` is smooth when every `c_i g_i` lies in the semigroup generated by `g_0, ..., g_{i-1}`.
//! Every integer then has a unique digit representation `n = sum n_i g_i` with
//! `0 <= n_i < c_i` for `i >= 1`, and the sign of `n_0` decides membership.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{AperySet, NumericalSemigroup};

/// Longest input accepted by [`detect_compound_set`].
pub const MAX_SET_SEARCH_LEN: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothAnalysis {
    #[serde(with = "crate::serde_big::int_vec")]
    pub sequence: Vec<BigInt>,
    #[serde(rename = "d", with = "crate::serde_big::int_vec")]
    pub d_values: Vec<BigInt>,
    /// `c_1, ..., c_k`; `c_0 = 1` is implicit.
    #[serde(rename = "c", with = "crate::serde_big::int_vec")]
    pub c_values: Vec<BigInt>,
    #[serde(rename = "smooth")]
    pub is_smooth: bool,
    /// Row `i - 1` holds non-negative `w_0, ..., w_{i-1}` with `sum w_j g_j = c_i g_i`.
    /// Present exactly when the sequence is smooth.
    #[serde(with = "crate::serde_big::int_vec_vec")]
    pub certificates: Option<Vec<Vec<BigInt>>>,
}

/// How `c_i g_i in <G_{i-1}>` is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MembershipTest {
    /// Digit representation over the prefix, which is smooth by induction; `n_0 >= 0`
    /// decides membership. Works for arbitrarily large entries.
    #[default]
    Digits,
    /// Scale by `d_{i-1}` and ask the gap enumeration of the resulting semigroup.
    Enumeration,
}

impl SmoothAnalysis {
    /// Index of the last entry.
    pub fn k(&self) -> usize {
        self.sequence.len() - 1
    }

    /// `c_i` with the convention `c_0 = 1`.
    pub fn c(&self, i: usize) -> BigInt {
        if i == 0 {
            BigInt::one()
        } else {
            self.c_values[i - 1].clone()
        }
    }

    /// `gcd` of the whole sequence.
    pub fn gcd(&self) -> &BigInt {
        self.d_values.last().expect("nonempty")
    }

    /// Smooth with gcd 1, i.e. generating a free numerical semigroup.
    pub fn require_free(&self) -> Result<()> {
        if !self.is_smooth {
            return Err(Error::NotSmooth);
        }
        if !self.gcd().is_one() {
            return Err(Error::NotCoprime {
                gcd: self.gcd().to_string(),
            });
        }
        Ok(())
    }

    /// `sum_{i>=1} (c_i - 1) g_i - g_0`, the Frobenius number of a free semigroup.
    pub fn frobenius_closed(&self) -> BigInt {
        self.weighted_excess() - &self.sequence[0]
    }

    /// `(1 - g_0 + sum_{i>=1} (c_i - 1) g_i) / 2`, the genus of a free semigroup.
    pub fn genus_closed(&self) -> BigInt {
        (BigInt::one() + self.frobenius_closed()) / 2
    }

    fn weighted_excess(&self) -> BigInt {
        self.c_values
            .iter()
            .zip(&self.sequence[1..])
            .map(|(c, g)| (c - 1) * g)
            .sum()
    }

    pub fn semigroup(&self) -> Result<NumericalSemigroup> {
        NumericalSemigroup::from_big(&self.sequence)
    }
}

fn validate(seq: &[BigInt]) -> Result<()> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    if let Some(index) = seq.iter().position(|g| !g.is_positive()) {
        return Err(Error::ZeroEntry { index });
    }
    Ok(())
}

pub fn to_big(seq: &[u64]) -> Vec<BigInt> {
    seq.iter().map(|&g| BigInt::from(g)).collect()
}

pub fn analyze_sequence(seq: &[BigInt]) -> Result<SmoothAnalysis> {
    analyze_sequence_with(seq, MembershipTest::Digits)
}

pub fn analyze_sequence_with(seq: &[BigInt], test: MembershipTest) -> Result<SmoothAnalysis> {
    validate(seq)?;
    let mut d_values = vec![seq[0].clone()];
    let mut c_values = Vec::with_capacity(seq.len() - 1);
    for g in &seq[1..] {
        let prev = d_values.last().unwrap().clone();
        let d = prev.gcd(g);
        c_values.push(&prev / &d);
        d_values.push(d);
    }
    let mut certificates = Vec::with_capacity(seq.len() - 1);
    for i in 1..seq.len() {
        let target = &c_values[i - 1] * &seq[i];
        let witness = match test {
            MembershipTest::Digits => {
                let digits = extract_digits(seq, &d_values, &c_values, i - 1, &target);
                (!digits[0].is_negative()).then_some(digits)
            }
            MembershipTest::Enumeration => enumeration_witness(&seq[..i], &d_values[i - 1], &target)?,
        };
        match witness {
            Some(w) => certificates.push(w),
            None => break,
        }
    }
    let is_smooth = certificates.len() == seq.len() - 1;
    Ok(SmoothAnalysis {
        sequence: seq.to_vec(),
        d_values,
        c_values,
        is_smooth,
        certificates: is_smooth.then_some(certificates),
    })
}

/// Digits `n_0, ..., n_top` with `0 <= n_j < c_j` for `j >= 1` and `sum n_j g_j = n`.
/// Requires `d_top | n`. Peels off the top digit using the inverse of `g_j / d_j` mod `c_j`.
fn extract_digits(seq: &[BigInt], d: &[BigInt], c: &[BigInt], top: usize, n: &BigInt) -> Vec<BigInt> {
    let mut rest = n.clone();
    let mut digits = vec![BigInt::zero(); top + 1];
    for j in (1..=top).rev() {
        let cj = &c[j - 1];
        if cj.is_one() {
            continue;
        }
        let q = &rest / &d[j];
        let unit = (&seq[j] / &d[j]).mod_floor(cj);
        let inv = unit.extended_gcd(cj).x;
        let nj = (q * inv).mod_floor(cj);
        rest -= &nj * &seq[j];
        digits[j] = nj;
    }
    debug_assert!((&rest % &seq[0]).is_zero());
    digits[0] = rest / &seq[0];
    digits
}

fn enumeration_witness(prefix: &[BigInt], scale: &BigInt, target: &BigInt) -> Result<Option<Vec<BigInt>>> {
    let too_large = |v: &BigInt| Error::ValueTooLarge(v.to_string());
    let gens = prefix
        .iter()
        .map(|g| (g / scale).to_u64().ok_or_else(|| too_large(g)))
        .collect::<Result<Vec<u64>>>()?;
    let n = (target / scale).to_u64().ok_or_else(|| too_large(target))?;
    let s = NumericalSemigroup::new(gens.iter().copied())?;
    if !s.contains(n as i64) {
        return Ok(None);
    }
    // Backtrack through a reachability table to produce an explicit combination.
    let size = n as usize + 1;
    let mut via = vec![usize::MAX; size];
    via[0] = 0;
    for m in 1..size {
        if let Some(j) = gens
            .iter()
            .position(|&g| g as usize <= m && via[m - g as usize] != usize::MAX)
        {
            via[m] = j;
        }
    }
    let mut witness = vec![BigInt::zero(); gens.len()];
    let mut m = n as usize;
    while m > 0 {
        let j = via[m];
        witness[j] += 1;
        m -= gens[j] as usize;
    }
    Ok(Some(witness))
}

/// `(A, B)` with `gcd(a_i, b_j) = 1` whenever `i >= j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuitablePair {
    a: Vec<BigInt>,
    b: Vec<BigInt>,
}

impl SuitablePair {
    pub fn new(a: Vec<BigInt>, b: Vec<BigInt>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::PairLengthMismatch {
                a: a.len(),
                b: b.len(),
            });
        }
        if let Some(index) = a.iter().chain(&b).position(|x| !x.is_positive()) {
            return Err(Error::ZeroEntry { index });
        }
        for i in 0..a.len() {
            for j in 0..=i {
                let g = a[i].gcd(&b[j]);
                if !g.is_one() {
                    return Err(Error::UnsuitablePair {
                        i: i + 1,
                        j: j + 1,
                        gcd: g.to_string(),
                    });
                }
            }
        }
        Ok(SuitablePair { a, b })
    }

    pub fn from_u64(a: &[u64], b: &[u64]) -> Result<Self> {
        Self::new(to_big(a), to_big(b))
    }

    pub fn a(&self) -> &[BigInt] {
        &self.a
    }

    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    pub fn k(&self) -> usize {
        self.a.len()
    }
}

/// `g_i = b_1 ... b_i a_{i+1} ... a_k` for `0 <= i <= k`.
pub fn compound_from_pair(pair: &SuitablePair) -> Vec<BigInt> {
    let k = pair.k();
    (0..=k)
        .map(|i| {
            let bs = pair.b[..i].iter().fold(BigInt::one(), |acc, x| acc * x);
            pair.a[i..].iter().fold(bs, |acc, x| acc * x)
        })
        .collect()
}

/// Validates `(A, B)` and builds the compound sequence.
pub fn compound_sequence(a: &[u64], b: &[u64]) -> Result<Vec<BigInt>> {
    Ok(compound_from_pair(&SuitablePair::from_u64(a, b)?))
}

/// Recovers `(A, B)` from consecutive ratios `g_{i-1} / g_i = a_i / b_i` in lowest terms,
/// and accepts only if the pair is suitable and rebuilds `seq` exactly.
pub fn detect_compound(seq: &[BigInt]) -> Result<Option<SuitablePair>> {
    validate(seq)?;
    let (a, b): (Vec<BigInt>, Vec<BigInt>) = seq
        .iter()
        .tuple_windows()
        .map(|(prev, next)| {
            let g = prev.gcd(next);
            (prev / &g, next / &g)
        })
        .unzip();
    let Ok(pair) = SuitablePair::new(a, b) else {
        return Ok(None);
    };
    Ok((compound_from_pair(&pair) == seq).then_some(pair))
}

/// Tries every ordering of `set` for a compound arrangement.
pub fn detect_compound_set(set: &[BigInt]) -> Result<Option<(Vec<BigInt>, SuitablePair)>> {
    validate(set)?;
    if set.len() > MAX_SET_SEARCH_LEN {
        return Err(Error::SequenceTooLongForSetSearch { len: set.len() });
    }
    for order in set.iter().cloned().permutations(set.len()) {
        if let Some(pair) = detect_compound(&order)? {
            return Ok(Some((order, pair)));
        }
    }
    Ok(None)
}

/// `rho_j(G) = (g_j, ..., g_0, g_{j+1}, ..., g_k)` with c values
/// `(b_j, ..., b_1, a_{j+1}, ..., a_k)`.
pub fn permute_rho(seq: &[BigInt], j: usize) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    let pair = detect_compound(seq)?.ok_or(Error::NotCompoundInput)?;
    let k = pair.k();
    if j > k {
        return Err(Error::IndexOutOfRange { j, k });
    }
    let permuted = seq[..=j].iter().rev().chain(&seq[j + 1..]).cloned().collect();
    let c = pair.b[..j]
        .iter()
        .rev()
        .chain(&pair.a[j..])
        .cloned()
        .collect();
    Ok((permuted, c))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigitRepresentation {
    #[serde(with = "crate::serde_big::int")]
    pub n: BigInt,
    #[serde(with = "crate::serde_big::int_vec")]
    pub digits: Vec<BigInt>,
    #[serde(skip)]
    pub sequence: Vec<BigInt>,
}

impl DigitRepresentation {
    pub fn reconstruct(&self) -> BigInt {
        self.digits.iter().zip(&self.sequence).map(|(x, g)| x * g).sum()
    }
}

pub fn unique_representation(analysis: &SmoothAnalysis, n: &BigInt) -> Result<DigitRepresentation> {
    analysis.require_free()?;
    let digits = extract_digits(
        &analysis.sequence,
        &analysis.d_values,
        &analysis.c_values,
        analysis.k(),
        n,
    );
    Ok(DigitRepresentation {
        n: n.clone(),
        digits,
        sequence: analysis.sequence.clone(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Membership {
    NotInSemigroup,
    /// In `S` but not in `Ap(S; g_0)`.
    InSemigroup,
    /// In `Ap(S; g_0)`.
    InApery,
}

pub fn classify(analysis: &SmoothAnalysis, n: &BigInt) -> Result<Membership> {
    let rep = unique_representation(analysis, n)?;
    Ok(match rep.digits[0].sign() {
        num_bigint::Sign::Minus => Membership::NotInSemigroup,
        num_bigint::Sign::NoSign => Membership::InApery,
        num_bigint::Sign::Plus => Membership::InSemigroup,
    })
}

/// `Ap(S; g_0) = { sum_{i>=1} n_i g_i : 0 <= n_i < c_i }`.
pub fn explicit_apery(analysis: &SmoothAnalysis) -> Result<AperySet> {
    analysis.require_free()?;
    let too_large = |v: &BigInt| Error::ValueTooLarge(v.to_string());
    let g0 = analysis.sequence[0].to_u64().ok_or_else(|| too_large(&analysis.sequence[0]))?;
    let mut values = vec![BigInt::zero()];
    for (c, g) in analysis.c_values.iter().zip(&analysis.sequence[1..]) {
        let c = c.to_u64().ok_or_else(|| too_large(c))?;
        values = values
            .iter()
            .flat_map(|v| (0..c).map(move |n| v + g * n))
            .collect();
    }
    let values = values
        .iter()
        .map(|v| v.to_u64().ok_or_else(|| too_large(v)))
        .collect::<Result<Vec<_>>>()?;
    AperySet::from_unordered(g0, values)
}
