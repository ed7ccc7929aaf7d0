//! Both sides of the Apéry-set identity
//!
//! ```text
//! sum_{n in NR} [f(n+t) - f(n)] = sum_{n in Ap(S;t)} f(n) - sum_{n=0}^{t-1} f(n)
//! ```
//!
//! evaluated exactly for a closed family of test functions, plus the genus and
//! Hilbert-series consequences.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::semigroup::{AperySet, NumericalSemigroup};

/// A function on `N0` that can be evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TestFunction {
    /// `sum c_i n^i`, ascending coefficients, no trailing zero.
    Polynomial(Vec<BigRational>),
    /// `z^n` for a nonzero rational `z`.
    Exponential(BigRational),
    /// `(-1)^n n^m`.
    SignedMonomial(u32),
}

impl TestFunction {
    pub fn polynomial(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TestFunction::Polynomial(coeffs)
    }

    /// `n^m`.
    pub fn monomial(m: u32) -> Self {
        let mut coeffs = vec![BigRational::zero(); m as usize];
        coeffs.push(BigRational::one());
        TestFunction::Polynomial(coeffs)
    }

    pub fn exponential(base: BigRational) -> Result<Self> {
        if base.is_zero() {
            return Err(Error::ZeroExponentialBase);
        }
        Ok(TestFunction::Exponential(base))
    }

    /// The functions the property suites sweep over: `n^0..n^5`, `2^n`, `(-1)^n n^0..n^3`.
    pub fn standard_family() -> Vec<TestFunction> {
        let mut fs: Vec<TestFunction> = (0..=5).map(TestFunction::monomial).collect();
        fs.push(TestFunction::Exponential(BigRational::from_integer(2.into())));
        fs.extend((0..=3).map(TestFunction::SignedMonomial));
        fs
    }

    fn is_integral(&self) -> bool {
        match self {
            TestFunction::Polynomial(c) => c.iter().all(|x| x.is_integer()),
            TestFunction::Exponential(z) => z.is_integer(),
            TestFunction::SignedMonomial(_) => true,
        }
    }

    fn eval_int(&self, n: u64) -> BigInt {
        match self {
            TestFunction::Polynomial(c) => {
                let x = BigInt::from(n);
                c.iter()
                    .rev()
                    .fold(BigInt::zero(), |acc, k| acc * &x + k.to_integer())
            }
            TestFunction::Exponential(z) => Pow::pow(z.to_integer(), n),
            TestFunction::SignedMonomial(m) => {
                let v = Pow::pow(BigInt::from(n), *m);
                if n % 2 == 1 {
                    -v
                } else {
                    v
                }
            }
        }
    }

    pub fn eval(&self, n: u64) -> BigRational {
        match self {
            TestFunction::Polynomial(c) => {
                let x = BigRational::from_integer(n.into());
                c.iter().rev().fold(BigRational::zero(), |acc, k| acc * &x + k)
            }
            TestFunction::Exponential(z) => Pow::pow(z, n),
            TestFunction::SignedMonomial(_) => BigRational::from_integer(self.eval_int(n)),
        }
    }

    /// Exact sum of `f` over the given points.
    pub fn sum_over(&self, points: impl IntoIterator<Item = u64>) -> BigRational {
        if self.is_integral() {
            let s: BigInt = points.into_iter().map(|n| self.eval_int(n)).sum();
            BigRational::from_integer(s)
        } else {
            points.into_iter().map(|n| self.eval(n)).sum()
        }
    }
}

impl std::fmt::Display for TestFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TestFunction::Polynomial(c) => {
                let terms: Vec<String> = c
                    .iter()
                    .enumerate()
                    .filter(|(_, k)| !k.is_zero())
                    .map(|(i, k)| format!("({k})n^{i}"))
                    .collect();
                if terms.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", terms.join(" + "))
                }
            }
            TestFunction::Exponential(z) => write!(f, "({z})^n"),
            TestFunction::SignedMonomial(m) => write!(f, "(-1)^n n^{m}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    #[serde(with = "crate::serde_big::rational")]
    pub lhs: BigRational,
    #[serde(with = "crate::serde_big::rational")]
    pub rhs: BigRational,
    /// `sum_{n in Ap(S;t)} [f(n) - f(n mod t)]`.
    #[serde(with = "crate::serde_big::rational")]
    pub rhs_congruence_form: BigRational,
    pub holds: bool,
}

/// Evaluates the gap side, the Apéry side, and the residue form of the Apéry side.
///
/// A report with `holds == false` is returned as is; callers decide how loudly to fail.
pub fn identity_sides(s: &NumericalSemigroup, t: u64, f: &TestFunction) -> Result<IdentityReport> {
    let ap = s.apery_set(t)?;
    let gaps = &s.gaps().gaps;
    let lhs = f.sum_over(gaps.iter().map(|&n| n + t)) - f.sum_over(gaps.iter().copied());
    let rhs = apery_rhs(&ap, f);
    let rhs_congruence_form = f.sum_over(ap.elements.iter().copied())
        - f.sum_over(ap.elements.iter().map(|&n| n % t));
    let holds = lhs == rhs && rhs == rhs_congruence_form;
    Ok(IdentityReport {
        lhs,
        rhs,
        rhs_congruence_form,
        holds,
    })
}

/// `sum_{n in Ap(S;t)} f(n) - sum_{n=0}^{t-1} f(n)`.
pub fn apery_rhs(ap: &AperySet, f: &TestFunction) -> BigRational {
    f.sum_over(ap.elements.iter().copied()) - f.sum_over(0..ap.t)
}

/// The Apéry side with `n = 0` dropped from both sums.
pub fn apery_rhs_excluding_zero(ap: &AperySet, f: &TestFunction) -> BigRational {
    f.sum_over(ap.elements.iter().copied().filter(|&n| n != 0)) - f.sum_over(1..ap.t)
}

/// Right side specialised to two coprime generators with `t = a`, where
/// `Ap(S;a) = {nb : 0 <= n < a}`: `sum_{n=1}^{a-1} [f(nb) - f(n)]`.
pub fn two_generator_rhs(a: u64, b: u64, f: &TestFunction) -> BigRational {
    f.sum_over((1..a).map(|n| n * b)) - f.sum_over(1..a)
}

/// Solves the identity for `#NR` with `f(n) = n`: the gap side is `t * #NR`.
pub fn genus_from_identity(s: &NumericalSemigroup, t: u64) -> Result<u64> {
    let report = identity_sides(s, t, &TestFunction::monomial(1))?;
    if !report.holds {
        return Err(Error::InvariantViolation(format!(
            "identity failed for {s} at t = {t}: {} != {}",
            report.lhs, report.rhs
        )));
    }
    let g = report.rhs / BigRational::from_integer(t.into());
    if !g.is_integer() {
        return Err(Error::NonIntegralResult {
            context: "genus from the identity",
            value: g.to_string(),
        });
    }
    g.to_integer()
        .to_u64()
        .ok_or_else(|| Error::InvariantViolation(format!("negative genus {g}")))
}

/// `H_S(x) = numerator / (1 - x^t)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub numerator: IntPoly,
    pub denominator_exponent: u64,
}

impl HilbertSeries {
    /// Coefficients of the power series through `x^degree`.
    pub fn expand(&self, degree: usize) -> Vec<BigInt> {
        let t = self.denominator_exponent as usize;
        let mut out = vec![BigInt::zero(); degree + 1];
        for n in 0..=degree {
            let mut c = self.numerator.coeff(n);
            if n >= t {
                c += &out[n - t];
            }
            out[n] = c;
        }
        out
    }

    /// Compares the expansion with the indicator series of `s` through degree `F(S) + t`.
    pub fn matches_semigroup(&self, s: &NumericalSemigroup) -> bool {
        let degree = (s.frobenius() + self.denominator_exponent as i64).max(0) as usize;
        self.expand(degree) == indicator_series(s, degree)
    }
}

pub fn hilbert_series(s: &NumericalSemigroup, t: u64) -> Result<HilbertSeries> {
    let ap = s.apery_set(t)?;
    Ok(HilbertSeries {
        numerator: IntPoly::from_exponents(ap.elements.iter().copied()),
        denominator_exponent: t,
    })
}

/// `sum_{n in NR} x^n`.
pub fn gap_polynomial(s: &NumericalSemigroup) -> IntPoly {
    IntPoly::from_exponents(s.gaps().gaps.iter().copied())
}

/// `1/(1-x) - sum_{n in NR} x^n`, truncated after `x^degree`.
pub fn indicator_series(s: &NumericalSemigroup, degree: usize) -> Vec<BigInt> {
    let gaps = gap_polynomial(s);
    (0..=degree).map(|n| BigInt::one() - gaps.coeff(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g.iter().copied()).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn linear_on_three_five() {
        let r = identity_sides(&sg(&[3, 5]), 3, &TestFunction::monomial(1)).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (q(12), q(12)));
        assert!(r.holds);
    }

    #[test]
    fn constant_function_is_zero() {
        let f = TestFunction::monomial(0);
        for (g, t) in [(&[3u64, 5][..], 5), (&[4, 6, 9], 9), (&[1], 1)] {
            let r = identity_sides(&sg(g), t, &f).unwrap();
            assert_eq!((r.lhs, r.rhs), (q(0), q(0)));
        }
    }

    #[test]
    fn square_on_two_three() {
        let r = identity_sides(&sg(&[2, 3]), 2, &TestFunction::monomial(2)).unwrap();
        assert_eq!((r.lhs, r.rhs), (q(8), q(8)));
    }

    #[test]
    fn rational_functions_hold() {
        let s = sg(&[5, 7, 9]);
        let poly = TestFunction::polynomial(vec![
            BigRational::new(1.into(), 3.into()),
            q(0),
            BigRational::new((-5).into(), 7.into()),
            q(0),
        ]);
        let expo = TestFunction::exponential(BigRational::new((-2).into(), 3.into())).unwrap();
        for f in [poly, expo] {
            for t in [5, 7, 12, 14] {
                assert!(identity_sides(&s, t, &f).unwrap().holds, "{f} t={t}");
            }
        }
        assert_eq!(
            TestFunction::exponential(q(0)).unwrap_err(),
            Error::ZeroExponentialBase
        );
    }

    #[test]
    fn modulus_errors() {
        assert_eq!(
            identity_sides(&sg(&[3, 5]), 4, &TestFunction::monomial(1)).unwrap_err(),
            Error::ModulusNotInSemigroup { t: 4 }
        );
    }

    #[test]
    fn zero_excluded_and_two_generator_forms() {
        let s = sg(&[5, 8]);
        for f in TestFunction::standard_family() {
            let ap = s.apery_set(5).unwrap();
            assert_eq!(apery_rhs(&ap, &f), apery_rhs_excluding_zero(&ap, &f));
            assert_eq!(apery_rhs(&ap, &f), two_generator_rhs(5, 8, &f));
        }
    }

    #[test]
    fn genus_via_identity() {
        assert_eq!(genus_from_identity(&sg(&[3, 5]), 3).unwrap(), 4);
        assert_eq!(genus_from_identity(&sg(&[4, 6, 9]), 6).unwrap(), 6);
        assert_eq!(genus_from_identity(&sg(&[1]), 1).unwrap(), 0);
    }

    #[test]
    fn hilbert_numerators() {
        let h = hilbert_series(&sg(&[2, 3]), 2).unwrap();
        assert_eq!(h.numerator, IntPoly::from_exponents([0, 3]));
        assert_eq!(h.denominator_exponent, 2);
        assert!(h.matches_semigroup(&sg(&[2, 3])));
        let h = hilbert_series(&sg(&[3, 5]), 3).unwrap();
        assert_eq!(h.numerator.to_string(), "1 + x^5 + x^10");
        let h = hilbert_series(&sg(&[1]), 1).unwrap();
        assert_eq!(h.numerator.to_string(), "1");
        assert!(h.matches_semigroup(&sg(&[1])));
        // 1/(1-x^3) * (1 + x^5 + x^10) = 1 + x^3 + x^5 + x^6 + ...
        let coeffs: Vec<i32> = hilbert_series(&sg(&[3, 5]), 3)
            .unwrap()
            .expand(9)
            .iter()
            .map(|c| c.to_i32().unwrap())
            .collect();
        assert_eq!(coeffs, vec![1, 0, 0, 1, 0, 1, 1, 0, 1, 1]);
    }

    #[test]
    fn gap_polynomials() {
        assert_eq!(gap_polynomial(&sg(&[2, 3])).to_string(), "x");
        assert_eq!(gap_polynomial(&sg(&[3, 5])).to_string(), "x + x^2 + x^4 + x^7");
        assert!(gap_polynomial(&sg(&[1])).is_zero());
    }

    #[test]
    fn report_json() {
        let r = identity_sides(&sg(&[3, 5]), 3, &TestFunction::monomial(1)).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["lhs"], "12");
        assert_eq!(v["rhs"], "12");
        assert_eq!(v["holds"], true);
        let back: IdentityReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }
}
