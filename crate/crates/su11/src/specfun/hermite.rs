//! L²-normalized Hermite functions and Gauss–Hermite quadrature.

use crate::{Error, Result};

/// Largest index accepted by the public Hermite evaluators.
pub const MAX_HERMITE_N: usize = 128;

/// Orthonormal Hermite polynomials h̃_k(x) = H_k(x) / √(2ᵏ k! √π) for
/// k = 0..=n_max, by the recurrence
/// `h̃_{k+1} = √(2/(k+1)) x h̃_k − √(k/(k+1)) h̃_{k−1}`.
///
/// These satisfy ∫ h̃_j h̃_k e^{−x²} dx = δ_jk. They grow like e^{x²/2} at
/// large |x|, which stays representable for every argument this crate feeds
/// them (|x| ≲ 15).
pub fn hermite_h_vec(n_max: usize, x: f64) -> Vec<f64> {
    let mut v = Vec::with_capacity(n_max + 1);
    let h0 = std::f64::consts::PI.powf(-0.25);
    v.push(h0);
    if n_max == 0 {
        return v;
    }
    v.push(std::f64::consts::SQRT_2 * x * h0);
    for k in 1..n_max {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * v[k] - (kf / (kf + 1.0)).sqrt() * v[k - 1];
        v.push(next);
    }
    v
}

/// Hermite function Ψ_n(x) = h̃_n(x) e^{−x²/2}, the L²-normalized harmonic
/// oscillator eigenfunction. Returns the value and an underflow flag that is
/// set when e^{−x²/2} is below the representable range (the value is then 0).
pub fn hermite_psi_flagged(n: usize, x: f64) -> Result<(f64, bool)> {
    if n > MAX_HERMITE_N {
        return Err(Error::HermiteIndex(n, MAX_HERMITE_N));
    }
    let gauss = (-0.5 * x * x).exp();
    if gauss == 0.0 {
        return Ok((0.0, true));
    }
    let h = hermite_h_vec(n, x);
    Ok((h[n] * gauss, false))
}

/// [`hermite_psi_flagged`] without the flag.
pub fn hermite_psi(n: usize, x: f64) -> Result<f64> {
    hermite_psi_flagged(n, x).map(|(v, _)| v)
}

/// Gauss–Hermite rule: ∫ f(x) e^{−x²} dx ≈ Σ w_i f(x_i), exact for
/// polynomials of degree ≤ 2·order − 1.
#[derive(Debug, Clone)]
pub struct GaussHermite {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussHermite {
    /// Build the rule of the given order. Nodes are the roots of h̃_order,
    /// located by a sign-change scan over the oscillatory region followed by
    /// Newton polishing on the bounded function Ψ_order; weights are the
    /// Christoffel numbers 1 / Σ_{k<order} h̃_k(x_i)².
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 || order > 512 {
            return Err(Error::QuadratureOrder { order, required: 1 });
        }
        let n = order;
        let psi = |x: f64| -> f64 {
            let g = (-0.5 * x * x).exp();
            if g == 0.0 {
                return 0.0;
            }
            hermite_h_vec(n, x)[n] * g
        };
        // All roots lie below the classical turning point √(2n+1).
        let x_max = (2.0 * n as f64 + 1.0).sqrt() + 1.0;
        let samples = 24 * n + 48;
        let dx = x_max / samples as f64;
        let mut positive_roots = Vec::new();
        let mut x_prev = if n % 2 == 1 { dx * 1e-6 } else { 0.0 };
        let mut f_prev = psi(x_prev);
        for i in 1..=samples {
            let x = i as f64 * dx;
            let f = psi(x);
            if f_prev != 0.0 && f != 0.0 && f_prev.signum() != f.signum() {
                positive_roots.push(Self::polish(n, x_prev, x));
            }
            x_prev = x;
            f_prev = f;
        }
        let expected = n / 2;
        if positive_roots.len() != expected {
            return Err(Error::QuadratureOrder {
                order,
                required: positive_roots.len(),
            });
        }
        let mut nodes = Vec::with_capacity(n);
        for &r in positive_roots.iter().rev() {
            nodes.push(-r);
        }
        if n % 2 == 1 {
            nodes.push(0.0);
        }
        nodes.extend(positive_roots.iter().copied());
        let weights = nodes
            .iter()
            .map(|&x| {
                let h = hermite_h_vec(n - 1, x);
                1.0 / h.iter().map(|v| v * v).sum::<f64>()
            })
            .collect();
        Ok(GaussHermite { nodes, weights })
    }

    /// Newton iteration on Ψ_n inside the bracket [lo, hi].
    fn polish(n: usize, mut lo: f64, mut hi: f64) -> f64 {
        let eval = |x: f64| -> (f64, f64) {
            let h = hermite_h_vec(n, x);
            let g = (-0.5 * x * x).exp();
            let psi = h[n] * g;
            // Ψ_n' = √(2n) Ψ_{n−1} − x Ψ_n
            let dpsi = (2.0 * n as f64).sqrt() * h[n - 1] * g - x * psi;
            (psi, dpsi)
        };
        let (mut flo, _) = eval(lo);
        let mut x = 0.5 * (lo + hi);
        for _ in 0..60 {
            let (f, df) = eval(x);
            if f == 0.0 {
                return x;
            }
            if f.signum() == flo.signum() {
                lo = x;
                flo = f;
            } else {
                hi = x;
            }
            let step = f / df;
            let mut next = x - step;
            if !(lo < next && next < hi) {
                next = 0.5 * (lo + hi);
            }
            if (next - x).abs() < 1e-15 * x.abs().max(1.0) {
                return next;
            }
            x = next;
        }
        x
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// ∫ f(x) e^{−x²} dx
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn psi0_at_origin() {
        let v = hermite_psi(0, 0.0).unwrap();
        assert_relative_eq!(v, std::f64::consts::PI.powf(-0.25), max_relative = 1e-15);
    }

    #[test]
    fn psi1_at_origin_vanishes() {
        assert_eq!(hermite_psi(1, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn psi_underflow_flag() {
        let (v, flag) = hermite_psi_flagged(3, 60.0).unwrap();
        assert_eq!(v, 0.0);
        assert!(flag);
    }

    #[test]
    fn psi_rejects_index_above_cap() {
        assert!(hermite_psi(MAX_HERMITE_N + 1, 0.0).is_err());
    }

    #[test]
    fn quadrature_total_mass() {
        for order in [3, 8, 31, 64, 97] {
            let q = GaussHermite::new(order).unwrap();
            assert_relative_eq!(
                q.integrate(|_| 1.0),
                std::f64::consts::PI.sqrt(),
                max_relative = 1e-13
            );
        }
    }

    #[test]
    fn quadrature_moments_exact() {
        // ∫ x^{2m} e^{−x²} = Γ(m + 1/2); odd moments vanish.
        let q = GaussHermite::new(24).unwrap();
        let mut expect = std::f64::consts::PI.sqrt();
        for m in 0..20 {
            let v = q.integrate(|x| x.powi(2 * m));
            assert_relative_eq!(v, expect, max_relative = 1e-11);
            let next = expect * (m as f64 + 0.5);
            // odd moments vanish up to rounding of the large paired terms
            assert!(q.integrate(|x| x.powi(2 * m + 1)).abs() < 1e-12 * next.max(1.0));
            expect = next;
        }
    }

    #[test]
    fn psi3_normalization_by_quadrature() {
        // ∫ Ψ_3(x)² dx = ∫ h̃_3(x)² e^{−x²} dx = 1 with a 64-point rule.
        let q = GaussHermite::new(64).unwrap();
        let v = q.integrate(|x| {
            let h = hermite_h_vec(3, x);
            h[3] * h[3]
        });
        assert_relative_eq!(v, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn hermite_orthonormality_under_quadrature() {
        // ∫ Ψ_m Ψ_n = δ_mn for m, n ≤ 30 with enough nodes.
        let q = GaussHermite::new(2 * 30 + 16).unwrap();
        for m in (0..=30).step_by(5) {
            for n in (0..=30).step_by(3) {
                let v = q.integrate(|x| {
                    let h = hermite_h_vec(30, x);
                    h[m] * h[n]
                });
                let expect = if m == n { 1.0 } else { 0.0 };
                assert!((v - expect).abs() < 1e-10, "m={m} n={n} got {v}");
            }
        }
    }
}
