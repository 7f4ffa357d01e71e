//! Exact-rational twins of the floating-point kernels.
//!
//! These are the independent oracles: terminating hypergeometric sums, the
//! argument-2 recurrence, scaled coefficient ratios and small polynomial
//! algebra over `BigRational`. Double-precision paths are cross-checked
//! against them wherever the inputs are rational.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub type Rat = BigRational;

/// `n/d` as a rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Nearest double, usable even when numerator and denominator are huge.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Signed Pochhammer: (z)_n = z (z+1) … (z+n−1) for n ≥ 0,
/// and (z)_{−m} = 1 / ((z−1)(z−2) … (z−m)) for n < 0.
pub fn rat_pochhammer(z: &Rat, n: i64) -> Result<Rat> {
    let mut acc = Rat::one();
    if n >= 0 {
        for j in 0..n {
            acc *= z + rint(j);
        }
    } else {
        for j in 1..=(-n) {
            let factor = z - rint(j);
            if factor.is_zero() {
                return Err(Error::GammaRatioPole {
                    factor: format!("{} - {}", z, j),
                    step: j,
                });
            }
            acc /= factor;
        }
    }
    Ok(acc)
}

/// Falling factorial ζ(ζ−1)…(ζ−n+1) for integer ζ ≥ 0.
pub fn rat_falling(zeta: u64, n: u64) -> Rat {
    let mut acc = Rat::one();
    for j in 0..n {
        if j > zeta {
            return Rat::zero();
        }
        acc *= rint(zeta as i64 - j as i64);
    }
    acc
}

/// Terminating series F(−n, b; c; x) in exact arithmetic.
pub fn rat_hyp2f1_terminating(n: u32, b: &Rat, c: &Rat, x: &Rat) -> Result<Rat> {
    for j in 0..n as i64 {
        if (c + rint(j)).is_zero() {
            return Err(Error::HypergeometricPole(j));
        }
    }
    let mut term = Rat::one();
    let mut sum = Rat::one();
    for j in 0..n as i64 {
        let jr = rint(j);
        term *= (rint(-(n as i64)) + &jr) * (b + &jr) * x;
        term /= (c + &jr) * (&jr + Rat::one());
        sum += &term;
    }
    Ok(sum)
}

/// The sequence F(−m, a; c; 2) for m = 0..=n_max via the exact three-term
/// recurrence `(c+m) F_{m+1} = (c−2a) F_m + m F_{m−1}`.
pub fn rat_hyp2f1_arg2_seq(a: &Rat, c: &Rat, n_max: usize) -> Result<Vec<Rat>> {
    for m in 0..n_max as i64 {
        if (c + rint(m)).is_zero() {
            return Err(Error::HypergeometricPole(m));
        }
    }
    let mut seq = Vec::with_capacity(n_max + 1);
    seq.push(Rat::one());
    if n_max == 0 {
        return Ok(seq);
    }
    seq.push(Rat::one() - rint(2) * a / c);
    for m in 1..n_max {
        let mr = rint(m as i64);
        let next = ((c - rint(2) * a) * &seq[m] + &mr * &seq[m - 1]) / (c + &mr);
        seq.push(next);
    }
    Ok(seq)
}

/// Exact value (or scaled value) of the series coefficient
/// C_kn = Γ(A)/Γ(B), A = 1+τ+ε+k+n, B = 1+2ε+2k+n, for rational τ.
///
/// * τ−ε ∈ ℤ: A−B is an integer and the gamma factors cancel completely;
///   the returned value is the true coefficient. Points where C has a pole
///   (A ≤ 0 with B ≥ 1) return `None`; A ≤ 0 with B ≤ 0 takes the finite
///   limit (−1)^{A−B} Γ(1−B)/Γ(1−A).
/// * τ−ε ∉ ℤ: A never hits a pole; the value is returned scaled by the
///   (k,n)-independent constant Γ(1+τ+ε)/Γ(1+2ε), which cancels from the
///   homogeneous recurrences this feeds.
pub fn rat_c_kn(tau: &Rat, two_eps: i64, k: i64, n: i64) -> Option<Rat> {
    let eps = rat(two_eps, 2);
    let a = Rat::one() + tau + &eps + rint(k + n);
    let b = 1 + two_eps + 2 * k + n;
    let a_nonpos_int = a.is_integer() && !a.numer().is_positive();
    if a.is_integer() {
        let ai = a.to_integer();
        let ai: i64 = ai.try_into().expect("small integers");
        match (ai >= 1, b >= 1) {
            (true, true) => Some(rat_pochhammer(&rint(b), ai - b).expect("positive factors")),
            (false, true) => None,
            (true, false) => Some(Rat::zero()),
            (false, false) => {
                // lim Γ(A)/Γ(B) at two nonpositive-integer arguments
                let sign = if (ai - b) % 2 == 0 {
                    Rat::one()
                } else {
                    -Rat::one()
                };
                let mut num = Rat::one();
                for j in 1..=(-b) {
                    num *= rint(j); // (−B)! with B = b here: Γ(1−b) = (−b)!
                }
                let mut den = Rat::one();
                for j in 1..=(-ai) {
                    den *= rint(j);
                }
                Some(sign * num / den)
            }
        }
    } else {
        debug_assert!(!a_nonpos_int);
        if b <= 0 {
            return Some(Rat::zero());
        }
        // scaled by Γ(1+τ+ε)/Γ(1+2ε)
        let upper = Rat::one() + tau + &eps;
        let lower = Rat::one() + rint(two_eps);
        Some(
            rat_pochhammer(&upper, k + n).expect("non-integer base")
                / rat_pochhammer(&lower, 2 * k + n).expect("b >= 1 keeps factors positive"),
        )
    }
}

/// Dense polynomial over the rationals, coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq)]
pub struct RatPoly(pub Vec<Rat>);

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly(vec![])
    }

    pub fn constant(c: Rat) -> Self {
        RatPoly(vec![c])
    }

    /// 1 + x
    pub fn one_plus_x() -> Self {
        RatPoly(vec![Rat::one(), Rat::one()])
    }

    pub fn degree(&self) -> usize {
        self.0.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] += c;
        }
        RatPoly(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RatPoly(self.0.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(Rat::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Terminating F(−n, b; c; −x) as a polynomial in x.
    pub fn hyp2f1_neg_x(n: u32, b: &Rat, c: &Rat) -> Result<Self> {
        for j in 0..n as i64 {
            if (c + rint(j)).is_zero() {
                return Err(Error::HypergeometricPole(j));
            }
        }
        let mut coeffs = vec![Rat::one()];
        let mut term = Rat::one();
        for j in 0..n as i64 {
            let jr = rint(j);
            // x ↦ −x absorbs a sign into each step.
            term *= (rint(-(n as i64)) + &jr) * (b + &jr) * rint(-1);
            term /= (c + &jr) * (&jr + Rat::one());
            coeffs.push(term.clone());
        }
        Ok(RatPoly(coeffs))
    }

    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match i {
                0 => format!("{}", mag),
                1 => {
                    if mag.is_one() {
                        var.to_string()
                    } else {
                        format!("{}*{}", mag, var)
                    }
                }
                _ => {
                    if mag.is_one() {
                        format!("{}^{}", var, i)
                    } else {
                        format!("{}*{}^{}", mag, var, i)
                    }
                }
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{}", body)
                } else {
                    body
                });
            } else if c.is_negative() {
                parts.push(format!("- {}", body));
            } else {
                parts.push(format!("+ {}", body));
            }
        }
        parts.join(" ")
    }
}

/// Partial sum of the generating-function identity's left-hand side,
/// Σ_{n<terms} (λ)_n / n! · sⁿ · F(−n, a; λ; 2) F(−n, b; λ; 2),
/// in exact arithmetic.
pub fn rat_genfun_lhs(a: &Rat, b: &Rat, lam: &Rat, s: &Rat, terms: usize) -> Result<Rat> {
    if terms == 0 {
        return Ok(Rat::zero());
    }
    let fa = rat_hyp2f1_arg2_seq(a, lam, terms - 1)?;
    let fb = rat_hyp2f1_arg2_seq(b, lam, terms - 1)?;
    let mut weight = Rat::one(); // (λ)_n sⁿ / n!
    let mut sum = Rat::zero();
    for n in 0..terms {
        sum += &weight * &fa[n] * &fb[n];
        let nr = rint(n as i64);
        weight *= (lam + &nr) * s / (&nr + Rat::one());
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_signed() {
        // (3)_2 = 12, (3)_{−2} = 1/((2)(1)) = 1/2
        assert_eq!(rat_pochhammer(&rint(3), 2).unwrap(), rint(12));
        assert_eq!(rat_pochhammer(&rint(3), -2).unwrap(), rat(1, 2));
        assert!(rat_pochhammer(&rint(1), -1).is_err());
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(rat_falling(5, 0), rint(1));
        assert_eq!(rat_falling(5, 2), rint(20));
        assert_eq!(rat_falling(2, 3), rint(0));
    }

    #[test]
    fn terminating_reference_sum() {
        // F(−2, 3; 2; 2) = 1 − 6 + 8 = 3 exactly.
        let v = rat_hyp2f1_terminating(2, &rint(3), &rint(2), &rint(2)).unwrap();
        assert_eq!(v, rint(3));
    }

    #[test]
    fn arg2_recurrence_agrees_with_direct_sum() {
        let a = rat(7, 3);
        let c = rat(5, 2);
        let x = rint(2);
        let seq = rat_hyp2f1_arg2_seq(&a, &c, 12).unwrap();
        for n in 0..=12u32 {
            let direct = rat_hyp2f1_terminating(n, &a, &c, &x).unwrap();
            assert_eq!(seq[n as usize], direct, "n = {n}");
        }
    }

    #[test]
    fn poly_algebra() {
        // (1+x)^2 = 1 + 2x + x^2
        let p = RatPoly::one_plus_x().pow(2);
        assert_eq!(p.0, vec![rint(1), rint(2), rint(1)]);
        assert_eq!(p.render("x"), "1 + 2*x + x^2");
    }

    #[test]
    fn poly_hyp_neg_x() {
        // F(−1, b; c; −x) = 1 + (b/c) x
        let p = RatPoly::hyp2f1_neg_x(1, &rint(3), &rint(2)).unwrap();
        assert_eq!(p.0, vec![rint(1), rat(3, 2)]);
    }

    #[test]
    fn genfun_lhs_binomial_case() {
        // a = b = 0 makes both F factors ≡ 1, so the sum telescopes to the
        // binomial series of (1−s)^{−λ}; check a deep partial sum against it.
        let lam = rat(3, 2);
        let s = rat(1, 4);
        let partial = rat_genfun_lhs(&rint(0), &rint(0), &lam, &s, 200).unwrap();
        let f = rat_to_f64(&partial);
        let expect = (1.0f64 - 0.25).powf(-1.5);
        assert!((f - expect).abs() < 1e-10, "{f} vs {expect}");
    }
}
