//! Gauss hypergeometric series: terminating sums, the argument-2 family, and
//! a convergent evaluator for x < 1.

use num_complex::Complex64;

use super::gamma::gamma;
use crate::{Error, Result};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Result of a summed series together with a cancellation estimate
/// `condition = Σ|term| / |Σ term|`. Values near 1 mean no cancellation;
/// 10^d means roughly d digits lost.
#[derive(Debug, Clone, Copy)]
pub struct TermSum {
    pub value: Complex64,
    pub condition: f64,
}

/// Kahan-compensated complex accumulator.
#[derive(Default)]
struct Compensated {
    sum: Complex64,
    carry: Complex64,
}

impl Compensated {
    fn add(&mut self, x: Complex64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
}

fn is_nonpositive_integer(z: Complex64) -> Option<i64> {
    if z.im == 0.0 && z.re <= 1e-9 {
        let r = z.re.round();
        if (z.re - r).abs() < 1e-9 && r <= 0.0 {
            return Some(r as i64);
        }
    }
    None
}

/// Terminating series F(−n, b; c; x) = Σ_{j=0}^{n} (−n)_j (b)_j / ((c)_j j!) xʲ.
///
/// At the alternating argument x = 2 the direct sum loses one digit per few
/// terms, so that case is routed through the stable three-term recurrence of
/// [`hyp2f1_arg2_seq`]; everywhere else the sum is compensated and the
/// cancellation estimate is reported in the result.
pub fn hyp2f1_terminating(n: u32, b: Complex64, c: Complex64, x: Complex64) -> Result<TermSum> {
    // The lower parameter must survive until termination.
    for j in 0..n as i64 {
        if (c + j as f64).norm() == 0.0 {
            return Err(Error::HypergeometricPole(j));
        }
    }
    if x == Complex64::new(2.0, 0.0) {
        let seq = hyp2f1_arg2_seq(b, c, n as usize)?;
        let value = seq[n as usize];
        // Forward-recurrence error grows at most linearly in the oscillatory
        // regime; report the worst intermediate-to-final ratio as condition.
        let max_mid = seq.iter().fold(0.0f64, |m, v| m.max(v.norm()));
        let condition = if value.norm() > 0.0 {
            max_mid / value.norm()
        } else {
            f64::INFINITY
        };
        return Ok(TermSum { value, condition });
    }
    let mut term = ONE;
    let mut acc = Compensated::default();
    let mut abs_sum = 0.0;
    acc.add(term);
    abs_sum += term.norm();
    for j in 0..n as i64 {
        let jf = j as f64;
        term *= (Complex64::new(-(n as f64) + jf, 0.0) * (b + jf) * x) / ((c + jf) * (jf + 1.0));
        acc.add(term);
        abs_sum += term.norm();
    }
    let value = acc.sum;
    let condition = if value.norm() > 0.0 {
        abs_sum / value.norm()
    } else {
        f64::INFINITY
    };
    Ok(TermSum { value, condition })
}

/// The sequence F(−m, a; c; 2) for m = 0..=n_max.
///
/// The values satisfy the three-term recurrence
/// `(c + m) F_{m+1} = (c − 2a) F_m + m F_{m−1}`, which is the
/// Meixner–Pollaczek recurrence at angle π/2 rewritten in hypergeometric
/// normalization. Unlike the alternating direct series at argument 2 it is
/// numerically benign: both homogeneous solutions have comparable magnitude,
/// so the forward pass loses only a polynomial factor.
pub fn hyp2f1_arg2_seq(a: Complex64, c: Complex64, n_max: usize) -> Result<Vec<Complex64>> {
    for m in 0..n_max as i64 {
        if (c + m as f64).norm() == 0.0 {
            return Err(Error::HypergeometricPole(m));
        }
    }
    let mut seq = Vec::with_capacity(n_max + 1);
    seq.push(ONE);
    if n_max == 0 {
        return Ok(seq);
    }
    seq.push(ONE - 2.0 * a / c);
    for m in 1..n_max {
        let mf = m as f64;
        let next = ((c - 2.0 * a) * seq[m] + mf * seq[m - 1]) / (c + mf);
        seq.push(next);
    }
    Ok(seq)
}

/// Gauss hypergeometric F(a, b; c; x) for real x < 1.
///
/// Terminating cases (a or b a nonpositive integer) sum directly for any x.
/// For x < 0 the Pfaff transformation
/// `F(a,b;c;x) = (1−x)^(−a) F(a, c−b; c; x/(x−1))` maps the argument into
/// [0, 1); for 0 ≤ x < 1 the series is summed with a geometric tail bound.
pub fn hyp2f1(a: Complex64, b: Complex64, c: Complex64, x: f64) -> Result<Complex64> {
    if x >= 1.0 {
        return Err(Error::HypergeometricArgument(x));
    }
    if let Some(n) = is_nonpositive_integer(a) {
        return Ok(hyp2f1_terminating((-n) as u32, b, c, Complex64::new(x, 0.0))?.value);
    }
    if let Some(n) = is_nonpositive_integer(b) {
        return Ok(hyp2f1_terminating((-n) as u32, a, c, Complex64::new(x, 0.0))?.value);
    }
    if is_nonpositive_integer(c).is_some() {
        // No termination rescues the series from the pole of (c)_j.
        return Err(Error::HypergeometricPole(-c.re.round() as i64));
    }
    if x < 0.0 {
        let mapped = x / (x - 1.0);
        let prefactor = Complex64::new(1.0 - x, 0.0).powc(-a);
        return Ok(prefactor * series_0_1(a, c - b, c, mapped)?);
    }
    series_0_1(a, b, c, x)
}

/// Direct series on 0 ≤ x < 1 with dual stopping rules: a geometric tail
/// bound, plus a floating-point floor (three consecutive terms below the
/// representable increment of the accumulated sum).
fn series_0_1(a: Complex64, b: Complex64, c: Complex64, x: f64) -> Result<Complex64> {
    const CAP: usize = 2_000_000;
    let mut term = ONE;
    let mut acc = Compensated::default();
    acc.add(term);
    let tail_factor = if x > 0.0 { x / (1.0 - x) } else { 0.0 };
    let mut below_floor = 0;
    for j in 0..CAP {
        let jf = j as f64;
        term *= (a + jf) * (b + jf) * x / ((c + jf) * (jf + 1.0));
        acc.add(term);
        let scale = acc.sum.norm().max(1e-300);
        if term.norm() * tail_factor.max(1.0) < 1e-13 * scale || term.norm() < 1e-300 {
            return Ok(acc.sum);
        }
        if term.norm() < 1e-15 * scale {
            below_floor += 1;
            if below_floor >= 3 {
                return Ok(acc.sum);
            }
        } else {
            below_floor = 0;
        }
    }
    Err(Error::NonConvergence {
        terms: CAP,
        last: term.norm(),
    })
}

/// The Gauss summation value F(a, b; c; 1) = Γ(c)Γ(c−a−b) / (Γ(c−a)Γ(c−b)),
/// valid for Re(c − a − b) > 0. Used as the x → 1 limiting check.
pub fn gauss_value(a: Complex64, b: Complex64, c: Complex64) -> Result<Complex64> {
    let cab = c - a - b;
    if cab.re <= 0.0 {
        return Err(Error::HypergeometricArgument(1.0));
    }
    Ok(gamma(c) * gamma(cab) / (gamma(c - a) * gamma(c - b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn terminating_empty_series_is_one() {
        let v = hyp2f1_terminating(0, c(3.7, -1.0), c(0.3, 2.0), c(5.0, 1.0)).unwrap();
        assert_eq!(v.value, ONE);
    }

    #[test]
    fn terminating_two_term() {
        // F(−1, b; c; x) = 1 − (b/c) x
        let (b, cc, x) = (c(2.5, 0.5), c(1.5, -1.0), c(0.7, 0.0));
        let v = hyp2f1_terminating(1, b, cc, x).unwrap().value;
        let expect = ONE - b / cc * x;
        assert!((v - expect).norm() < 1e-15);
    }

    #[test]
    fn terminating_exact_rational_reference() {
        // F(−2, 3; 2; 2): exact term-by-term sum 1 − 6 + 8 = 3.
        let v = hyp2f1_terminating(2, c(3.0, 0.0), c(2.0, 0.0), c(2.0, 0.0))
            .unwrap()
            .value;
        assert_relative_eq!(v.re, 3.0, max_relative = 1e-12);
        assert!(v.im.abs() < 1e-12);
    }

    #[test]
    fn terminating_pole_before_termination() {
        // c = −1 hits zero at j = 1 < n.
        let err = hyp2f1_terminating(3, c(1.0, 0.0), c(-1.0, 0.0), c(0.5, 0.0));
        assert!(err.is_err());
    }

    #[test]
    fn arg2_recurrence_matches_small_direct_sums() {
        let a = c(1.3, -0.4);
        let cc = c(2.1, 0.7);
        let seq = hyp2f1_arg2_seq(a, cc, 6).unwrap();
        // Direct sums at small n are still well-conditioned.
        for n in 0..=6u32 {
            let mut term = ONE;
            let mut sum = ONE;
            for j in 0..n as i64 {
                let jf = j as f64;
                term *= (c(-(n as f64) + jf, 0.0) * (a + jf) * 2.0) / ((cc + jf) * (jf + 1.0));
                sum += term;
            }
            assert!(
                (seq[n as usize] - sum).norm() < 1e-12 * sum.norm().max(1.0),
                "n = {n}"
            );
        }
    }

    #[test]
    fn arg2_route_used_by_terminating_matches() {
        let v = hyp2f1_terminating(2, c(3.0, 0.0), c(2.0, 0.0), c(2.0, 0.0)).unwrap();
        assert_relative_eq!(v.value.re, 3.0, max_relative = 1e-12);
        // F(a,b;b;x) = (1−x)^{−a}: F(−4, 3; 3; 2) = (1−2)^4 = 1.
        let v = hyp2f1_terminating(4, c(3.0, 0.0), c(3.0, 0.0), c(2.0, 0.0)).unwrap();
        assert_relative_eq!(v.value.re, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn hyp2f1_at_zero_is_one() {
        let v = hyp2f1(c(0.3, 0.4), c(-1.2, 0.0), c(0.9, -0.1), 0.0).unwrap();
        assert!((v - ONE).norm() < 1e-15);
    }

    #[test]
    fn hyp2f1_log_identity() {
        // F(1, 1; 2; x) = −ln(1 − x)/x at x = 0.5
        let v = hyp2f1(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), 0.5).unwrap();
        let expect = -(0.5f64.ln()) / 0.5;
        assert_relative_eq!(v.re, expect, max_relative = 1e-13);
    }

    #[test]
    fn hyp2f1_pfaff_self_consistency() {
        // Both evaluation paths where both converge: x ∈ (0, 1) direct vs
        // mapped through Pfaff manually.
        let (a, b, cc) = (c(0.4, 0.3), c(1.1, -0.2), c(2.3, 0.1));
        for &x in &[-3.0, -1.0, -0.25] {
            let direct = hyp2f1(a, b, cc, x).unwrap();
            let mapped = x / (x - 1.0);
            let via_pfaff =
                Complex64::new(1.0 - x, 0.0).powc(-b) * hyp2f1(b, cc - a, cc, mapped).unwrap();
            assert!(
                (direct - via_pfaff).norm() < 1e-10 * direct.norm().max(1.0),
                "x = {x}"
            );
        }
    }

    #[test]
    fn hyp2f1_terminating_at_one_matches_gauss_value() {
        // Chu–Vandermonde: F(−n, b; c; 1) = (c−b)_n / (c)_n, equal to the
        // gamma-ratio limit value.
        let b = c(0.7, 0.4);
        let cc = c(3.2, -0.5);
        let n = 5;
        let series = hyp2f1_terminating(n, b, cc, ONE).unwrap().value;
        let gauss = gauss_value(c(-(n as f64), 0.0), b, cc).unwrap();
        assert!((series - gauss).norm() < 1e-12 * gauss.norm());
    }

    #[test]
    fn hyp2f1_near_one_approaches_gauss_value() {
        let (a, b, cc) = (c(0.3, 0.0), c(0.25, 0.0), c(2.0, 0.0));
        let limit = gauss_value(a, b, cc).unwrap();
        let near = hyp2f1(a, b, cc, 1.0 - 1e-4).unwrap();
        assert!((near - limit).norm() < 1e-2 * limit.norm());
        let nearer = hyp2f1(a, b, cc, 1.0 - 1e-5).unwrap();
        assert!((nearer - limit).norm() < (near - limit).norm());
    }

    #[test]
    fn hyp2f1_rejects_x_at_or_above_one() {
        assert!(hyp2f1(c(0.5, 0.0), c(0.5, 0.0), c(2.0, 0.0), 1.0).is_err());
        assert!(hyp2f1(c(0.5, 0.0), c(0.5, 0.0), c(2.0, 0.0), 1.5).is_err());
    }

    #[test]
    fn hyp2f1_nonpositive_c_without_termination_is_error() {
        assert!(hyp2f1(c(0.5, 0.0), c(0.7, 0.0), c(-2.0, 0.0), 0.3).is_err());
        // ... but termination before the pole is fine: F(−1, b; −2; x).
        assert!(hyp2f1(c(-1.0, 0.0), c(0.7, 0.0), c(-2.0, 0.0), 0.3).is_ok());
    }
}
