//! Fixtures for comparing closed-form gap sums with gap enumeration.

use num_bigint::BigInt;
use numsg::{compound_from_pair, SuitablePair};

/// A named compound sequence.
pub struct Fixture {
    pub name: &'static str,
    pub sequence: Vec<BigInt>,
}

fn compound(a: &[u64], b: &[u64]) -> Vec<BigInt> {
    compound_from_pair(&SuitablePair::from_u64(a, b).expect("fixture pairs are suitable"))
}

/// Compound sequences of increasing size; the last has leading entry 104880.
pub fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture { name: "g0=36", sequence: compound(&[3, 4, 3], &[5, 5, 7]) },
        Fixture { name: "g0=1155", sequence: compound(&[5, 7, 11, 3], &[2, 2, 4, 4]) },
        Fixture { name: "g0=17017", sequence: compound(&[7, 11, 13, 17], &[3, 5, 2, 4]) },
        Fixture { name: "g0=104880", sequence: large() },
    ]
}

/// The acceptance-scale sequence: `G((15,16,19,23), (17,17,18,20))`.
pub fn large() -> Vec<BigInt> {
    compound(&[15, 16, 19, 23], &[17, 17, 18, 20])
}
