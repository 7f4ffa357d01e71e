//! Legendre polynomials at hyperbolic arguments.

/// Legendre polynomial P_l(u) by the Bonnet recurrence
/// `(l+1) P_{l+1} = (2l+1) u P_l − l P_{l−1}`.
///
/// The argument here is u = cosh α ≥ 1, where the recurrence is dominated by
/// the growing solution and is stable.
pub fn legendre_p(l: u32, u: f64) -> f64 {
    if l == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = u;
    for k in 1..l {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * u * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}
