//! Power sums over the gaps of a numerical semigroup:
//! `S_m = sum_{n in NR} n^m` and `T_m = sum_{n in NR} (-1)^n n^m`.
//!
//! Closed forms for `m <= 2` on free semigroups, the two-generator recurrence for
//! alternating sums at any `m`, and the enumeration oracle they are all checked against.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_rational::BigRational;
use num_traits::{Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{NumericalSemigroup, DEFAULT_ENUMERATION_CAP};
use crate::smooth::{analyze_sequence, SmoothAnalysis};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSequence {
    pub base: Vec<BigInt>,
    pub exponent: u32,
    pub result: Vec<BigInt>,
}

/// Element-wise `g_i^e`.
pub fn power_sequence(seq: &[BigInt], e: u32) -> PowerSequence {
    PowerSequence {
        base: seq.to_vec(),
        exponent: e,
        result: seq.iter().map(|g| Pow::pow(g, e)).collect(),
    }
}

fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn integral(v: BigRational, context: &'static str) -> Result<BigInt> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::NonIntegralResult {
            context,
            value: v.to_string(),
        })
    }
}

/// Genus of `<G^e>` for a free sequence `G`.
///
/// When `G^e` itself analyzes as smooth the genus comes from its c values; otherwise the
/// gap set of `<G^e>` is enumerated (subject to `cap`).
pub fn genus_of_power(analysis: &SmoothAnalysis, e: u32, cap: u64) -> Result<BigInt> {
    let powered = power_sequence(&analysis.sequence, e).result;
    let pa = analyze_sequence(&powered)?;
    if pa.require_free().is_ok() {
        Ok(pa.genus_closed())
    } else {
        let s = NumericalSemigroup::from_big(&powered)?;
        Ok(BigInt::from(s.gaps_capped(cap)?.genus))
    }
}

/// Shared quantities for the closed forms of one free sequence.
#[derive(Debug, Clone)]
pub struct ClosedForms {
    analysis: SmoothAnalysis,
    s0: BigRational,
    s0_squares: BigRational,
    first_odd: usize,
    even_indices: Vec<usize>,
}

impl ClosedForms {
    pub fn new(analysis: &SmoothAnalysis) -> Result<Self> {
        Self::with_cap(analysis, DEFAULT_ENUMERATION_CAP)
    }

    pub fn with_cap(analysis: &SmoothAnalysis, cap: u64) -> Result<Self> {
        analysis.require_free()?;
        let g = &analysis.sequence;
        let excess: BigInt = (1..=analysis.k()).map(|i| (analysis.c(i) - 1) * &g[i]).sum();
        let s0 = (rat(1) - rat(g[0].clone()) + rat(excess)) / rat(2);
        integral(s0.clone(), "S_0")?;
        let s0_squares = rat(genus_of_power(analysis, 2, cap)?);

        // The c values of G^2 are the squares of those of G, so this is the
        // genus formula for G^2; it must agree with however S_0(G^2) was obtained.
        let lhs: BigInt = (1..=analysis.k())
            .map(|i| (Pow::pow(analysis.c(i), 2u32) - 1) * Pow::pow(&g[i], 2u32))
            .sum();
        let rhs = rat(2) * &s0_squares + rat(Pow::pow(&g[0], 2u32)) - rat(1);
        if rat(lhs.clone()) != rhs {
            return Err(Error::InvariantViolation(format!(
                "sum (c_i^2 - 1) g_i^2 = {lhs} but 2 S_0(G^2) + g_0^2 - 1 = {rhs}"
            )));
        }

        let first_odd = g.iter().position(|x| x.is_odd()).ok_or_else(|| {
            Error::InvariantViolation("coprime sequence without an odd entry".into())
        })?;
        let even_indices = (0..g.len()).filter(|&i| g[i].is_even()).collect();
        Ok(ClosedForms {
            analysis: analysis.clone(),
            s0,
            s0_squares,
            first_odd,
            even_indices,
        })
    }

    pub fn analysis(&self) -> &SmoothAnalysis {
        &self.analysis
    }

    /// `J`: index of the first odd entry.
    pub fn first_odd_index(&self) -> usize {
        self.first_odd
    }

    /// `I_G`: indices of the even entries.
    pub fn even_indices(&self) -> &[usize] {
        &self.even_indices
    }

    /// `S_0(G^2)`.
    pub fn genus_of_squares(&self) -> BigInt {
        self.s0_squares.to_integer()
    }

    fn g(&self, i: usize) -> BigRational {
        rat(self.analysis.sequence[i].clone())
    }

    fn even_c_product(&self) -> BigRational {
        self.even_indices
            .iter()
            .fold(rat(1), |acc, &i| acc * rat(self.analysis.c(i)))
    }

    // sum_{i in I_G} g_i^2 (c_i^2 - 1)
    fn even_square_excess(&self) -> BigRational {
        self.even_indices
            .iter()
            .map(|&i| {
                let c = rat(self.analysis.c(i));
                self.g(i).pow(2) * (&c * &c - rat(1))
            })
            .sum()
    }

    fn cj_gj(&self) -> BigRational {
        rat(self.analysis.c(self.first_odd)) * self.g(self.first_odd)
    }

    fn s_rational(&self, m: u32) -> Result<BigRational> {
        let s0 = &self.s0;
        let sq = &self.s0_squares;
        match m {
            0 => Ok(s0.clone()),
            1 => Ok((s0 * s0 - s0) / rat(2) + sq / rat(12)),
            2 => Ok((rat(2) * s0 - rat(1)) / rat(6) * (s0 * s0 - s0 + sq / rat(2))),
            _ => Err(Error::UnsupportedPower { m }),
        }
    }

    fn t_rational(&self, m: u32) -> Result<BigRational> {
        let s0 = &self.s0;
        let t0 = (rat(1) - self.cj_gj() / self.g(0) * self.even_c_product()) / rat(2);
        match m {
            0 => Ok(t0),
            1 => Ok(((rat(2) * s0 - rat(1)) * (rat(2) * &t0 - rat(1)) - rat(1)) / rat(4)),
            2 => {
                let inner = rat(6) * s0 * s0 - rat(6) * s0 + rat(3) * &self.s0_squares + self.g(0).pow(2)
                    - self.cj_gj().pow(2)
                    - self.even_square_excess();
                Ok((rat(2) * t0 - rat(1)) / rat(12) * inner)
            }
            _ => Err(Error::UnsupportedPower { m }),
        }
    }

    /// `S_m(G)` for `m` in `{0, 1, 2}`.
    pub fn sylvester(&self, m: u32) -> Result<BigInt> {
        integral(self.s_rational(m)?, "a Sylvester sum")
    }

    /// `T_m(G)` for `m` in `{0, 1, 2}`, cross-checked against the simplified forms
    /// that apply when `g_0` is odd or every entry is odd.
    pub fn alternating(&self, m: u32) -> Result<BigInt> {
        let t = self.t_rational(m)?;
        let mut checks: Vec<(&str, BigRational)> = Vec::new();
        if let Some(forms) = self.odd_leading_forms()? {
            checks.push(("odd g_0 form", forms[m as usize].clone()));
        }
        if let Some(forms) = self.all_odd_forms()? {
            checks.extend(forms[m as usize].iter().map(|v| ("all-odd form", v.clone())));
        }
        for (name, v) in checks {
            if v != t {
                return Err(Error::InvariantViolation(format!(
                    "T_{m}: {name} gives {v}, general form gives {t}"
                )));
            }
        }
        integral(t, "an alternating Sylvester sum")
    }

    /// `S_2` from `S_0` and `S_1` alone.
    pub fn s2_from_lower(&self) -> Result<BigRational> {
        let s0 = &self.s0;
        let s1 = self.s_rational(1)?;
        Ok((rat(2) * s0 - rat(1)) / rat(3) * (rat(3) * s1 - s0 * s0 + s0))
    }

    /// The two rewritings of `T_2` through `S_1` and through `S_2`.
    pub fn t2_alternative_forms(&self) -> Result<[BigRational; 2]> {
        let s0 = &self.s0;
        let t0 = self.t_rational(0)?;
        let tail = (self.g(0).pow(2) - self.cj_gj().pow(2) - self.even_square_excess()) / rat(12);
        let lead = rat(2) * t0 - rat(1);
        let via_s1 = &lead * (rat(3) * self.s_rational(1)? - s0 * s0 + s0 + &tail);
        let via_s2 = &lead * (rat(3) * self.s_rational(2)? / (rat(2) * s0 - rat(1)) + &tail);
        Ok([via_s1, via_s2])
    }

    /// `[T_0, T_1, T_2]` in the simplified shape valid when `g_0` is odd.
    pub fn odd_leading_forms(&self) -> Result<Option<[BigRational; 3]>> {
        if self.analysis.sequence[0].is_even() {
            return Ok(None);
        }
        let s0 = &self.s0;
        let prod = self.even_c_product();
        let t0 = (rat(1) - &prod) / rat(2);
        let t1 = -(rat(1) + (rat(2) * s0 - rat(1)) * &prod) / rat(4);
        let t2 = -(rat(3) * self.s_rational(2)? / (rat(2) * s0 - rat(1))
            - self.even_square_excess() / rat(12))
            * &prod;
        Ok(Some([t0, t1, t2]))
    }

    /// Every form of `T_0`, `T_1`, `T_2` given for sequences of odd entries.
    ///
    /// The `T_1(G^2)` form is included only when `G^2` analyzes as smooth.
    pub fn all_odd_forms(&self) -> Result<Option<[Vec<BigRational>; 3]>> {
        if !self.even_indices.is_empty() {
            return Ok(None);
        }
        let s0 = &self.s0;
        let sq = &self.s0_squares;
        let t1 = -s0 / rat(2);
        let mut t2 = vec![
            -(s0 * (s0 - rat(1))) / rat(2) - sq / rat(4),
            -rat(3) * self.s_rational(2)? / (rat(2) * s0 - rat(1)),
        ];
        let squares = analyze_sequence(&power_sequence(&self.analysis.sequence, 2).result)?;
        if squares.require_free().is_ok() {
            let t1_sq = ClosedForms::alternating_one_without_squares(&squares)?;
            t2.push(rat(-2) * &t1 * &t1 - &t1 + t1_sq / rat(2));
        }
        Ok(Some([vec![rat(0)], vec![t1], t2]))
    }

    // T_1 only needs S_0 and T_0, neither of which involves G^2.
    fn alternating_one_without_squares(analysis: &SmoothAnalysis) -> Result<BigRational> {
        let g = &analysis.sequence;
        let excess: BigInt = (1..=analysis.k()).map(|i| (analysis.c(i) - 1) * &g[i]).sum();
        let s0 = (rat(1) - rat(g[0].clone()) + rat(excess)) / rat(2);
        let j = g.iter().position(|x| x.is_odd()).unwrap_or(0);
        let prod = (0..g.len())
            .filter(|&i| g[i].is_even())
            .fold(rat(1), |acc, i| acc * rat(analysis.c(i)));
        let t0 = (rat(1) - rat(analysis.c(j) * &g[j]) / rat(g[0].clone()) * prod) / rat(2);
        Ok(((rat(2) * s0 - rat(1)) * (rat(2) * t0 - rat(1)) - rat(1)) / rat(4))
    }
}

pub fn sylvester_closed(analysis: &SmoothAnalysis, m: u32) -> Result<BigInt> {
    ClosedForms::new(analysis)?.sylvester(m)
}

pub fn alternating_closed(analysis: &SmoothAnalysis, m: u32) -> Result<BigInt> {
    ClosedForms::new(analysis)?.alternating(m)
}

/// `(sigma_m(g), tau_m(g))`: plain and alternating sums of `n^m` over `0..=g`, with `0^0 = 1`.
pub fn sigma_tau(m: u32, g: u64) -> (BigInt, BigInt) {
    let mut sigma = BigInt::zero();
    let mut tau = BigInt::zero();
    for n in 0..=g {
        let p: BigInt = Pow::pow(BigInt::from(n), m);
        if n % 2 == 0 {
            tau += &p;
        } else {
            tau -= &p;
        }
        sigma += p;
    }
    (sigma, tau)
}

/// `T_m(<a, b>)` by the recurrence obtained from the two-generator identity with `t = b`.
///
/// `b` must be odd; `a` may have either parity.
pub fn wang_wang_t(a: u64, b: u64, m: u32) -> Result<BigInt> {
    if a == 0 || b == 0 {
        return Err(Error::ZeroEntry {
            index: usize::from(a != 0),
        });
    }
    let g = a.gcd(&b);
    if g != 1 {
        return Err(Error::NotCoprime { gcd: g.to_string() });
    }
    if b % 2 == 0 {
        return Err(Error::EvenSecondArgument { b });
    }
    let a_big = BigInt::from(a);
    let b_big = BigInt::from(b);
    let mut ts: Vec<BigInt> = Vec::with_capacity(m as usize + 1);
    for k in 0..=m {
        let (sigma, tau) = sigma_tau(k, b - 1);
        let second = if a % 2 == 0 { sigma } else { tau.clone() };
        let mut acc = tau - Pow::pow(&a_big, k) * second;
        for (i, ti) in ts.iter().enumerate() {
            acc -= binomial(BigInt::from(k), BigInt::from(i)) * Pow::pow(&b_big, k - i as u32) * ti;
        }
        if acc.is_odd() {
            return Err(Error::NonIntegralResult {
                context: "the two-generator recurrence",
                value: format!("{acc}/2"),
            });
        }
        ts.push(acc / 2);
    }
    let initial = if a % 2 == 0 {
        -(BigInt::from(b) - 1u32) / 2u32
    } else {
        BigInt::zero()
    };
    if ts[0] != initial {
        return Err(Error::InvariantViolation(format!(
            "recurrence gives T_0 = {} for <{a},{b}>, expected {initial}",
            ts[0]
        )));
    }
    Ok(ts.pop().unwrap())
}

/// `[T_0, T_1, T_2]` of `<a, b>` from the explicit two-generator formulas (`b` odd).
pub fn wang_wang_explicit(a: u64, b: u64) -> [BigRational; 3] {
    let a = rat(a);
    let b = rat(b);
    let one = rat(1);
    if a.to_integer().is_even() {
        [
            -(&b - &one) / rat(2),
            (&b - &one) * (&b - &a * &b + &one) / rat(4),
            &a * &b * (&b - &one) * (&a + rat(3) * &b - rat(2) * &a * &b) / rat(12),
        ]
    } else {
        [
            rat(0),
            -(&a - &one) * (&b - &one) / rat(4),
            -&a * &b * (&a - &one) * (&b - &one) / rat(4),
        ]
    }
}

/// `(S_m, T_m)` summed over the enumerated gap set.
pub fn sums_by_enumeration(s: &NumericalSemigroup, m: u32, cap: u64) -> Result<(BigInt, BigInt)> {
    let gaps = &s.gaps_capped(cap)?.gaps;
    Ok(power_sums(gaps, m))
}

fn power_sums(gaps: &[u64], m: u32) -> (BigInt, BigInt) {
    // Machine arithmetic while it cannot overflow.
    let fast = || -> Option<(i128, i128)> {
        let (mut s, mut t) = (0i128, 0i128);
        for &n in gaps {
            let p = (n as i128).checked_pow(m)?;
            s = s.checked_add(p)?;
            t = if n % 2 == 0 { t.checked_add(p)? } else { t.checked_sub(p)? };
        }
        Some((s, t))
    };
    if let Some((s, t)) = fast() {
        return (s.into(), t.into());
    }
    let mut s = BigInt::zero();
    let mut t = BigInt::zero();
    for &n in gaps {
        let p: BigInt = Pow::pow(BigInt::from(n), m);
        if n % 2 == 0 {
            t += &p;
        } else {
            t -= &p;
        }
        s += p;
    }
    (s, t)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SylvesterReport {
    #[serde(with = "crate::serde_big::int_vec")]
    pub sequence: Vec<BigInt>,
    #[serde(rename = "c", with = "crate::serde_big::int_vec")]
    pub c_values: Vec<BigInt>,
    /// `S` values: closed form for `m <= 2`, enumeration for any extra `m`.
    #[serde(rename = "S", with = "crate::serde_big::int_map")]
    pub s: BTreeMap<u32, BigInt>,
    #[serde(rename = "T", with = "crate::serde_big::int_map")]
    pub t: BTreeMap<u32, BigInt>,
    #[serde(rename = "S_oracle", with = "crate::serde_big::int_map")]
    pub s_oracle: BTreeMap<u32, BigInt>,
    #[serde(rename = "T_oracle", with = "crate::serde_big::int_map")]
    pub t_oracle: BTreeMap<u32, BigInt>,
    #[serde(with = "crate::serde_big::int")]
    pub frobenius: BigInt,
    #[serde(with = "crate::serde_big::int")]
    pub genus: BigInt,
    pub symmetric: bool,
    #[serde(rename = "J")]
    pub first_odd_index: usize,
    #[serde(rename = "I_G")]
    pub even_indices: Vec<usize>,
    /// Keys `S0`..`S2`, `T0`..`T2`: closed form equals enumeration.
    pub agreement: BTreeMap<String, bool>,
}

impl SylvesterReport {
    pub fn all_agree(&self) -> bool {
        self.agreement.values().all(|&ok| ok) && self.symmetric
    }
}

/// Closed forms, enumeration values, and their agreement for one free sequence.
pub fn invariant_report(seq: &[BigInt], extra_m: &[u32], cap: u64) -> Result<SylvesterReport> {
    let analysis = analyze_sequence(seq)?;
    let forms = ClosedForms::with_cap(&analysis, cap)?;
    let s = analysis.semigroup()?;
    let gap_set = s.gaps_capped(cap)?;

    let mut report = SylvesterReport {
        sequence: seq.to_vec(),
        c_values: analysis.c_values.clone(),
        s: BTreeMap::new(),
        t: BTreeMap::new(),
        s_oracle: BTreeMap::new(),
        t_oracle: BTreeMap::new(),
        frobenius: gap_set.frobenius.into(),
        genus: gap_set.genus.into(),
        symmetric: false,
        first_odd_index: forms.first_odd_index(),
        even_indices: forms.even_indices().to_vec(),
        agreement: BTreeMap::new(),
    };
    for m in (0..=2).chain(extra_m.iter().copied()) {
        let (so, to) = power_sums(&gap_set.gaps, m);
        report.s_oracle.insert(m, so.clone());
        report.t_oracle.insert(m, to.clone());
        if m <= 2 {
            let sc = forms.sylvester(m)?;
            let tc = forms.alternating(m)?;
            report.agreement.insert(format!("S{m}"), sc == so);
            report.agreement.insert(format!("T{m}"), tc == to);
            report.s.insert(m, sc);
            report.t.insert(m, tc);
        } else {
            report.s.insert(m, so);
            report.t.insert(m, to);
        }
    }
    let two_g_minus_one = BigInt::from(2) * &report.genus - 1;
    report.symmetric = report.frobenius == two_g_minus_one
        && report.frobenius == analysis.frobenius_closed();
    Ok(report)
}
