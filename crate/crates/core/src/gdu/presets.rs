use std::fmt;

use super::algebra::GduAlgebra;
use super::params::{GduParams, WeightScheme};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Named specializations of the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Preset {
    /// `U(sl2)`: λ = ω = 1, γ = 2, f = −X1.
    Sl2,
    /// Smith's algebras `[X1, X3] = X3`, `[X1, X2] = −X2`, `[X3, X2] = f(X1)`,
    /// with `f` given constant term first.
    Smith { f: Vec<Scalar> },
    /// Woronowicz's deformation, ζ ≠ 0.
    Woronowicz { zeta: Scalar },
    /// Conformal sl2 enveloping algebra with `f = b·X1² + X1`.
    Conformal { b: Scalar, lambda: Scalar, omega: Scalar, gamma: Scalar },
    /// Down-up algebra `A(α, β, γ)`; λ and ω are the roots of `z² − αz − β`.
    DownUp { alpha: Scalar, beta: Scalar, gamma: Scalar },
}

pub const PRESET_NAMES: [&str; 5] = ["sl2", "smith", "woronowicz", "conformal", "down_up"];

impl Preset {
    pub fn name(&self) -> &'static str {
        match self {
            Preset::Sl2 => "sl2",
            Preset::Smith { .. } => "smith",
            Preset::Woronowicz { .. } => "woronowicz",
            Preset::Conformal { .. } => "conformal",
            Preset::DownUp { .. } => "down_up",
        }
    }

    pub fn conformal(b: Scalar) -> Preset {
        Preset::Conformal { b, lambda: Scalar::one(), omega: Scalar::one(), gamma: Scalar::one() }
    }

    /// One representative of each preset, as used by sweeps and `presets list`.
    pub fn defaults() -> Vec<Preset> {
        vec![
            Preset::Sl2,
            Preset::Smith { f: vec![Scalar::zero(), Scalar::one()] },
            Preset::Woronowicz { zeta: Scalar::from_int(2) },
            Preset::conformal(Scalar::one()),
            Preset::DownUp { alpha: Scalar::from_int(2), beta: Scalar::from_int(-1), gamma: Scalar::one() },
        ]
    }

    /// Parameters in the standard form, plus notes on the translation.
    pub fn params(&self) -> Result<(GduParams, Vec<String>)> {
        let one = Scalar::one;
        match self {
            Preset::Sl2 => {
                let p = GduParams::new(one(), one(), Scalar::from_int(2), vec![Scalar::zero(), -one()])?;
                Ok((p, vec![]))
            }
            Preset::Smith { f } => {
                let neg: Vec<Scalar> = f.iter().map(|c| -c).collect();
                let p = GduParams::new(one(), one(), one(), neg)?;
                let note = "X1X3 − X3X1 = X3, X1X2 − X2X1 = −X2, X3X2 − X2X3 = f rewritten as \
                            λ = ω = 1, γ = 1 and f replaced by −f"
                    .to_string();
                Ok((p, vec![note]))
            }
            Preset::Woronowicz { zeta } => {
                if zeta.is_zero() {
                    return Err(Error::input("woronowicz needs ζ ≠ 0"));
                }
                let z2 = zeta.pow(2);
                let p = GduParams::new(z2.pow(2), z2.clone(), -(one() + &z2), vec![Scalar::zero(), -zeta])?;
                let note = "a = 0 = c, b = −ζ read as f = aX1² + bX1 + c, so f = −ζX1".to_string();
                Ok((p, vec![note]))
            }
            Preset::Conformal { b, lambda, omega, gamma } => {
                if (lambda * omega * gamma * b).is_zero() {
                    return Err(Error::input("conformal needs λγωb ≠ 0"));
                }
                let p = GduParams::new(lambda.clone(), omega.clone(), gamma.clone(), vec![Scalar::zero(), one(), b.clone()])?;
                Ok((p, vec![]))
            }
            Preset::DownUp { alpha, beta, gamma } => {
                let disc = &alpha.pow(2) + &(Scalar::from_int(4) * beta);
                let root = disc.sqrt_exact().ok_or_else(|| {
                    Error::Unsupported(format!(
                        "z² − ({alpha})z − ({beta}) has no rational roots (discriminant {disc}); \
                         algebraic extensions are not supported"
                    ))
                })?;
                let half = Scalar::new(1, 2);
                let lambda = (alpha + &root) * &half;
                let omega = (alpha - &root) * &half;
                let p = GduParams::new(lambda, omega, gamma.clone(), vec![Scalar::zero(), one()])?;
                let note = "λ, ω are the roots of z² − αz − β (λ takes the larger), f = X1".to_string();
                Ok((p, vec![note]))
            }
        }
    }

    /// Weight scheme used when none is requested: all-ones when `deg f ≤ 2`.
    pub fn default_scheme(&self) -> Result<WeightScheme> {
        let (p, _) = self.params()?;
        Ok(if p.degree_f() <= 2 { WeightScheme::AllOnes } else { WeightScheme::DegF })
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::Sl2 => f.write_str("sl2"),
            Preset::Smith { f: coeffs } => {
                let c: Vec<String> = coeffs.iter().map(Scalar::to_string).collect();
                write!(f, "smith(f=[{}])", c.join(", "))
            }
            Preset::Woronowicz { zeta } => write!(f, "woronowicz(ζ={zeta})"),
            Preset::Conformal { b, lambda, omega, gamma } => write!(f, "conformal(b={b}, λ={lambda}, ω={omega}, γ={gamma})"),
            Preset::DownUp { alpha, beta, gamma } => write!(f, "down_up(α={alpha}, β={beta}, γ={gamma})"),
        }
    }
}

/// Builds a preset under `scheme`.
pub fn preset(p: &Preset, scheme: WeightScheme) -> Result<GduAlgebra> {
    let (params, _) = p.params()?;
    GduAlgebra::build(params, scheme)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn woronowicz_two() {
        let (p, _) = Preset::Woronowicz { zeta: Scalar::from_int(2) }.params().unwrap();
        assert_eq!(p.lambda, Scalar::from_int(16));
        assert_eq!(p.omega, Scalar::from_int(4));
        assert_eq!(p.gamma, Scalar::from_int(-5));
        assert_eq!(p.f_coeffs(), &[Scalar::zero(), Scalar::from_int(-2)]);
    }

    #[test]
    fn down_up_double_root() {
        let pre = Preset::DownUp { alpha: Scalar::from_int(2), beta: Scalar::from_int(-1), gamma: Scalar::one() };
        let (p, _) = pre.params().unwrap();
        assert!(p.lambda.is_one() && p.omega.is_one());
        assert_eq!(p.f_coeffs(), &[Scalar::zero(), Scalar::one()]);
        let irrational = Preset::DownUp { alpha: Scalar::zero(), beta: Scalar::from_int(2), gamma: Scalar::one() };
        assert!(matches!(irrational.params(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn smith_signs() {
        let (p, _) = Preset::Smith { f: vec![Scalar::one(), Scalar::from_int(3)] }.params().unwrap();
        assert_eq!(p.gamma, Scalar::one());
        assert_eq!(p.f_coeffs(), &[-Scalar::one(), Scalar::from_int(-3)]);
    }

    #[test]
    fn all_defaults_build() {
        for pre in Preset::defaults() {
            for scheme in [WeightScheme::AllOnes, WeightScheme::DegF] {
                let alg = preset(&pre, scheme).unwrap();
                assert!(alg.certificate().holds, "{pre}");
            }
        }
    }

    #[test]
    fn conformal_is_solvable() {
        let alg = preset(&Preset::conformal(Scalar::one()), WeightScheme::AllOnes).unwrap();
        let s = alg.to_solvable().unwrap();
        assert_eq!(s.weights(), &[2, 1, 2]);
        assert!(s.verify_solvable().holds);
    }
}
