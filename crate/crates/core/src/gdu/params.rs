use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Parameters `(λ, ω, γ, f)` of a generalized down-up algebra, with
/// `f(X1) = Σ f[i]·X1^i` stored constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GduParams {
    pub lambda: Scalar,
    pub omega: Scalar,
    pub gamma: Scalar,
    f: Vec<Scalar>,
}

impl GduParams {
    /// Trailing zero coefficients of `f` are dropped; an all-zero `f` is
    /// stored as the single constant `0`.
    pub fn new(lambda: Scalar, omega: Scalar, gamma: Scalar, mut f: Vec<Scalar>) -> Result<GduParams> {
        if f.is_empty() {
            return Err(Error::input("f needs at least one coefficient"));
        }
        while f.len() > 1 && f.last().is_some_and(Scalar::is_zero) {
            f.pop();
        }
        Ok(GduParams { lambda, omega, gamma, f })
    }

    pub fn f_coeffs(&self) -> &[Scalar] {
        &self.f
    }

    /// Degree of `f`; `0` for constants (including `f = 0`).
    pub fn degree_f(&self) -> usize {
        self.f.len() - 1
    }

    /// Coefficient of `X1^i` in `f`.
    pub fn f_coeff(&self, i: usize) -> Scalar {
        self.f.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Small random rationals; `degree` fixes `deg f`, whose leading
    /// coefficient is nonzero. λ, ω and γ may come out zero.
    pub fn random<R: Rng>(rng: &mut R, degree: usize) -> GduParams {
        let mut scalar = |allow_zero: bool| loop {
            let num: i64 = rng.gen_range(-6..=6);
            let den: i64 = rng.gen_range(1..=4);
            if allow_zero || num != 0 {
                return Scalar::new(num, den);
            }
        };
        let lambda = scalar(true);
        let omega = scalar(true);
        let gamma = scalar(true);
        let mut f: Vec<Scalar> = (0..degree).map(|_| scalar(true)).collect();
        f.push(scalar(false));
        GduParams::new(lambda, omega, gamma, f).expect("nonempty f")
    }
}

impl fmt::Display for GduParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<String> = self.f.iter().map(|c| c.to_string()).collect();
        write!(f, "λ={}, ω={}, γ={}, f=[{}]", self.lambda, self.omega, self.gamma, coeffs.join(", "))
    }
}

/// How degrees are assigned to `X1, X2, X3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightScheme {
    /// All generators have degree 1; needs `deg f ≤ 2`.
    AllOnes,
    /// `X1` has degree 1, `X2` and `X3` have degree `deg f`; needs `deg f ≥ 1`.
    DegF,
}

impl WeightScheme {
    pub fn name(self) -> &'static str {
        match self {
            WeightScheme::AllOnes => "all-ones",
            WeightScheme::DegF => "deg-f",
        }
    }

    pub fn parse(s: &str) -> Result<WeightScheme> {
        match s {
            "all-ones" => Ok(WeightScheme::AllOnes),
            "deg-f" => Ok(WeightScheme::DegF),
            other => Err(Error::input(format!("unknown weight scheme '{other}' (expected all-ones or deg-f)"))),
        }
    }

    pub fn check(self, degree_f: usize) -> Result<()> {
        match self {
            WeightScheme::AllOnes if degree_f > 2 => {
                Err(Error::input(format!("all-ones weights need deg f ≤ 2, got {degree_f}")))
            }
            WeightScheme::DegF if degree_f == 0 => Err(Error::input("deg-f weights need deg f ≥ 1")),
            _ => Ok(()),
        }
    }

    /// Weights of `(X1, X2, X3)`.
    pub fn weights(self, degree_f: usize) -> [u32; 3] {
        match self {
            WeightScheme::AllOnes => [1, 1, 1],
            WeightScheme::DegF => {
                let n = degree_f as u32;
                [1, n, n]
            }
        }
    }
}

impl fmt::Display for WeightScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
