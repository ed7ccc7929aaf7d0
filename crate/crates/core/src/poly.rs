use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Dense integer polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPoly {
    #[serde(with = "crate::serde_big::int_vec")]
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Sum of `x^e` over the given exponents (repeats accumulate).
    pub fn from_exponents(exps: impl IntoIterator<Item = u64>) -> Self {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for e in exps {
            let e = e as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            coeffs[e] += 1;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_trim() {
        assert_eq!(IntPoly::from_exponents([1, 2, 4, 7]).to_string(), "x + x^2 + x^4 + x^7");
        assert_eq!(IntPoly::from_exponents([0, 3]).to_string(), "1 + x^3");
        let p = IntPoly::new(vec![BigInt::from(-2), BigInt::from(0), BigInt::from(3), BigInt::zero()]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.to_string(), "-2 + 3x^2");
        assert_eq!(IntPoly::new(vec![BigInt::zero()]).to_string(), "0");
    }

    #[test]
    fn json_is_string_array() {
        let p = IntPoly::from_exponents([0, 2]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["1","0","1"]"#);
        assert_eq!(serde_json::from_str::<IntPoly>(&s).unwrap(), p);
    }
}
