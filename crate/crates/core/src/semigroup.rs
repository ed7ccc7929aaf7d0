//! Numerical semigroups given by generators, with the baseline computations every
//! closed form in this crate is checked against: membership, gap enumeration,
//! Apéry sets, Frobenius number, genus and symmetry.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on the Frobenius number for anything that materializes the gap set.
pub const DEFAULT_ENUMERATION_CAP: u64 = 100_000_000;

/// The semigroup `<G>` of all non-negative integer combinations of a coprime generator set.
///
/// Generators are sorted and deduplicated but not reduced to a minimal system.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "SemigroupRepr", into = "SemigroupRepr")]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    gaps: OnceLock<GapSet>,
    multiplicity_apery: OnceLock<AperySet>,
}

#[derive(Clone, Serialize, Deserialize)]
struct SemigroupRepr {
    generators: Vec<u64>,
}

impl TryFrom<SemigroupRepr> for NumericalSemigroup {
    type Error = Error;

    fn try_from(r: SemigroupRepr) -> Result<Self> {
        NumericalSemigroup::new(r.generators)
    }
}

impl From<NumericalSemigroup> for SemigroupRepr {
    fn from(s: NumericalSemigroup) -> Self {
        SemigroupRepr {
            generators: s.generators,
        }
    }
}

/// The gaps `NR = N0 \ S` together with genus and Frobenius number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapSet {
    pub gaps: Vec<u64>,
    pub genus: u64,
    /// Largest gap, or -1 when there are none.
    pub frobenius: i64,
}

impl GapSet {
    fn from_gaps(gaps: Vec<u64>) -> Self {
        let frobenius = gaps.last().map_or(-1, |&f| f as i64);
        GapSet {
            genus: gaps.len() as u64,
            gaps,
            frobenius,
        }
    }

    pub fn contains(&self, n: u64) -> bool {
        self.gaps.binary_search(&n).is_ok()
    }
}

/// `Ap(S;t)`: the least element of `S` in each residue class mod `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperySet {
    pub t: u64,
    /// `elements[r]` is the least element of `S` congruent to `r` mod `t`.
    pub elements: Vec<u64>,
}

impl AperySet {
    /// Elements strictly below `t`.
    pub fn below_t(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.elements.iter().copied().filter(|&w| w < self.t).collect();
        v.sort_unstable();
        v
    }

    pub fn max(&self) -> u64 {
        self.elements.iter().copied().max().unwrap_or(0)
    }

    pub fn contains(&self, n: u64) -> bool {
        self.elements[(n % self.t) as usize] == n
    }

    pub fn sorted(&self) -> Vec<u64> {
        let mut v = self.elements.clone();
        v.sort_unstable();
        v
    }

    /// Builds an Apéry set from an unordered list, placing each element by residue.
    /// Fails unless the list hits every residue class exactly once.
    pub fn from_unordered(t: u64, values: impl IntoIterator<Item = u64>) -> Result<Self> {
        if t == 0 {
            return Err(Error::ZeroModulus);
        }
        let mut slots: Vec<Option<u64>> = vec![None; t as usize];
        for v in values {
            let slot = &mut slots[(v % t) as usize];
            if slot.is_some() {
                return Err(Error::InvariantViolation(format!(
                    "two Apéry candidates in residue class {} mod {t}",
                    v % t
                )));
            }
            *slot = Some(v);
        }
        let elements = slots
            .into_iter()
            .enumerate()
            .map(|(r, v)| {
                v.ok_or_else(|| {
                    Error::InvariantViolation(format!("no Apéry candidate in residue class {r} mod {t}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AperySet { t, elements })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Symmetric,
    NotSymmetric,
    /// `S = N0`; treated as not symmetric.
    FullSemigroup,
}

impl NumericalSemigroup {
    pub fn new(generators: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut generators: Vec<u64> = generators.into_iter().collect();
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if generators.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        generators.sort_unstable();
        generators.dedup();
        let gcd = generators.iter().fold(0u64, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::NonCoprimeGenerators { gcd });
        }
        Ok(NumericalSemigroup {
            generators,
            gaps: OnceLock::new(),
            multiplicity_apery: OnceLock::new(),
        })
    }

    /// Converts a big-integer sequence (e.g. a smooth sequence) into a semigroup.
    pub fn from_big(seq: &[BigInt]) -> Result<Self> {
        let gens = seq
            .iter()
            .map(|g| {
                if g.sign() == num_bigint::Sign::Minus {
                    Err(Error::ZeroGenerator)
                } else {
                    g.to_u64().ok_or_else(|| Error::ValueTooLarge(g.to_string()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(gens)
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Smallest generator.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn is_full(&self) -> bool {
        self.generators[0] == 1
    }

    /// Membership, answered from the cached gap set.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let gaps = self.gaps();
        n > gaps.frobenius || !gaps.contains(n as u64)
    }

    /// Exhaustive gap set by dynamic programming over `0, 1, 2, ...`.
    ///
    /// Stops after `multiplicity` consecutive representable integers, since
    /// every larger integer is then reachable by adding the smallest generator.
    pub fn gaps(&self) -> &GapSet {
        self.gaps.get_or_init(|| enumerate_gaps(&self.generators))
    }

    /// As [`gaps`](Self::gaps), but refuses when the Frobenius number exceeds `cap`.
    /// The bound is found from the Apéry set of the multiplicity before any enumeration.
    pub fn gaps_capped(&self, cap: u64) -> Result<&GapSet> {
        if let Some(g) = self.gaps.get() {
            return Ok(g);
        }
        let f = self.frobenius_bound();
        if f > cap as i64 {
            return Err(Error::EnumerationCapExceeded {
                frobenius: f.to_string(),
                cap,
            });
        }
        Ok(self.gaps())
    }

    fn frobenius_bound(&self) -> i64 {
        let ap = self.multiplicity_apery();
        ap.max() as i64 - ap.t as i64
    }

    pub fn frobenius(&self) -> i64 {
        self.gaps().frobenius
    }

    pub fn genus(&self) -> u64 {
        self.gaps().genus
    }

    /// Apéry set of `t`, by single-source shortest paths on the residue graph mod `t`.
    pub fn apery_set(&self, t: u64) -> Result<AperySet> {
        self.check_modulus(t)?;
        if t == self.multiplicity() {
            return Ok(self.multiplicity_apery().clone());
        }
        Ok(shortest_path_apery(&self.generators, t))
    }

    pub(crate) fn check_modulus(&self, t: u64) -> Result<()> {
        if t == 0 {
            return Err(Error::ZeroModulus);
        }
        if !self.contains_via_multiplicity(t) {
            return Err(Error::ModulusNotInSemigroup { t });
        }
        Ok(())
    }

    // n is in S iff n is at least the Apéry element of its class mod the multiplicity.
    fn contains_via_multiplicity(&self, n: u64) -> bool {
        let ap = self.multiplicity_apery();
        n >= ap.elements[(n % ap.t) as usize]
    }

    fn multiplicity_apery(&self) -> &AperySet {
        self.multiplicity_apery
            .get_or_init(|| shortest_path_apery(&self.generators, self.multiplicity()))
    }

    /// `max(Ap(S;t)) - t`.
    pub fn frobenius_via_apery(&self, t: u64) -> Result<i64> {
        let ap = self.apery_set(t)?;
        if self.is_full() {
            return Err(Error::FullSemigroup);
        }
        Ok(ap.max() as i64 - t as i64)
    }

    /// `-(t-1)/2 + (1/t) * sum(Ap(S;t))`, in exact rationals.
    pub fn genus_via_apery(&self, t: u64) -> Result<u64> {
        let ap = self.apery_set(t)?;
        let sum: BigInt = ap.elements.iter().map(|&w| BigInt::from(w)).sum();
        let t_big = BigInt::from(t);
        let g = BigRational::new(sum, t_big.clone())
            - BigRational::new(t_big - 1, BigInt::from(2));
        if !g.is_integer() {
            return Err(Error::NonIntegralResult {
                context: "genus from the Apéry set",
                value: g.to_string(),
            });
        }
        g.to_integer()
            .to_u64()
            .ok_or_else(|| Error::InvariantViolation(format!("negative genus {g}")))
    }

    /// Checks directly that exactly one of `n`, `F - n` lies in `S` for every `n` in `[0, F]`.
    pub fn symmetry(&self) -> Symmetry {
        if self.is_full() {
            return Symmetry::FullSemigroup;
        }
        let f = self.frobenius();
        let symmetric = (0..=f).all(|n| self.contains(n) != self.contains(f - n));
        if symmetric {
            Symmetry::Symmetric
        } else {
            Symmetry::NotSymmetric
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry() == Symmetry::Symmetric
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{:?}", self.generators)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

fn enumerate_gaps(generators: &[u64]) -> GapSet {
    let m = generators[0];
    let mut reachable = vec![true];
    let mut run = 1u64;
    let mut gaps = Vec::new();
    let mut n = 0u64;
    while run < m {
        n += 1;
        let r = generators
            .iter()
            .take_while(|&&g| g <= n)
            .any(|&g| reachable[(n - g) as usize]);
        reachable.push(r);
        if r {
            run += 1;
        } else {
            gaps.push(n);
            run = 0;
        }
    }
    GapSet::from_gaps(gaps)
}

fn shortest_path_apery(generators: &[u64], t: u64) -> AperySet {
    let size = t as usize;
    let mut dist = vec![u64::MAX; size];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    let steps: Vec<(u64, usize)> = generators
        .iter()
        .filter(|&&g| g % t != 0)
        .map(|&g| (g, (g % t) as usize))
        .collect();
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &(g, step) in &steps {
            let next = (r + step) % size;
            let nd = d + g;
            if nd < dist[next] {
                dist[next] = nd;
                heap.push(Reverse((nd, next)));
            }
        }
    }
    AperySet { t, elements: dist }
}
