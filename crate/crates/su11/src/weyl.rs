//! The metaplectic (Weyl) representation U(g) on truncated Fock space.
//!
//! `U(g)` implements the SU(1,1) automorphism by conjugation,
//! `g·z = U(g) z U(g)⁻¹`, and is double-valued on the group (a global ± sign
//! relates `U(g₁)U(g₂)` and `U(g₁g₂)`). The rotation subgroup acts diagonally,
//! `U(k(ψ))|n⟩ = e^{−inψ/2}|n⟩`; the boost (squeeze) matrix follows from the
//! dilation action on oscillator wavefunctions,
//! `U(h(α)) Ψ_m(x) = e^{α/4} Ψ_m(e^{α/2} x)`, and has two independent
//! realizations used to check each other:
//!
//! * a closed form: for n ≥ m and n + m even,
//!   `U_mn = 2^{(m−n)/2}/((n−m)/2)! · √(n! sinh^{n−m}(α/2) / (m! cosh^{n+m+1}(α/2)))
//!          · F(−m/2, (1−m)/2; 1+(n−m)/2; −sinh²(α/2))`,
//!   zero for odd n + m, and `U_mn(α) = U_nm(−α)` for m > n;
//! * Gauss–Hermite quadrature of the overlap integral
//!   `U_mn = e^{α/4} ∫ Ψ_m(x) Ψ_n(e^{α/2} x) dx`.
//!
//! Squeeze columns are not banded: column n has weight up to roughly
//! `n·e^{|α|}` with a tanh(α/2)-geometric tail beyond. Products such as U†U
//! or U(g₁)U(g₂) therefore run at a padded build dimension ([`required_dim`])
//! and are compared on the requested interior block only.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::fock::{FockOperator, FockSpace};
use crate::grp::{cartan_decompose, GroupElement};
use crate::specfun::{hermite_h_vec, hyp2f1_terminating, ln_factorial_table, GaussHermite};
use crate::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// How a unitary block was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixSource {
    ClosedForm,
    Quadrature,
    CartanProduct,
}

impl std::fmt::Display for MatrixSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MatrixSource::ClosedForm => write!(f, "closed_form"),
            MatrixSource::Quadrature => write!(f, "quadrature"),
            MatrixSource::CartanProduct => write!(f, "cartan_product"),
        }
    }
}

/// Dense N×N representation matrix. Squeeze matrices are half-dense by
/// parity, so dense storage is the honest layout.
#[derive(Debug, Clone)]
pub struct UnitaryBlock {
    space: FockSpace,
    matrix: DMatrix<Complex64>,
    source: MatrixSource,
}

impl UnitaryBlock {
    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn source(&self) -> MatrixSource {
        self.source
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn entry(&self, m: usize, n: usize) -> Complex64 {
        self.matrix[(m, n)]
    }

    pub fn adjoint(&self) -> UnitaryBlock {
        UnitaryBlock {
            space: self.space,
            matrix: self.matrix.adjoint(),
            source: self.source,
        }
    }

    pub fn mul(&self, other: &UnitaryBlock) -> Result<UnitaryBlock> {
        if self.space != other.space {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(UnitaryBlock {
            space: self.space,
            matrix: &self.matrix * &other.matrix,
            source: MatrixSource::CartanProduct,
        })
    }

    /// ‖U†U − I‖_max over the leading `interior` rows and columns.
    pub fn unitarity_residual(&self, interior: usize) -> f64 {
        let n = self.dim();
        let interior = interior.min(n);
        let mut max = 0.0f64;
        for mm in 0..interior {
            for nn in 0..interior {
                let mut acc = ZERO;
                for r in 0..n {
                    acc += self.matrix[(r, mm)].conj() * self.matrix[(r, nn)];
                }
                if mm == nn {
                    acc -= Complex64::new(1.0, 0.0);
                }
                max = max.max(acc.norm());
            }
        }
        max
    }

    /// Apply to a coefficient vector.
    pub fn apply(&self, coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
        if coeffs.len() != self.dim() {
            return Err(Error::DimensionMismatch(self.dim(), coeffs.len()));
        }
        let v = nalgebra::DVector::from_column_slice(coeffs);
        Ok((&self.matrix * v).iter().copied().collect())
    }
}

/// U(k(ψ)): diagonal phases e^{−inψ/2}. Note the 4π period in ψ — the n = 1
/// entry at ψ = 2π is −1, the double-cover sign.
pub fn u_phase(psi: f64, space: FockSpace) -> UnitaryBlock {
    let n = space.dim();
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = Complex64::from_polar(1.0, -(i as f64) * psi / 2.0);
    }
    UnitaryBlock {
        space,
        matrix: m,
        source: MatrixSource::ClosedForm,
    }
}

/// U(h(α)) from the closed hypergeometric form. Parity zeros are structural
/// (exact 0.0), prefactors are assembled in log space to survive large
/// factorial ratios at padded build dimensions.
pub fn u_squeeze_closed(alpha: f64, space: FockSpace) -> UnitaryBlock {
    let n = space.dim();
    let lnfact = ln_factorial_table(n);
    let mut m = DMatrix::zeros(n, n);
    for row in 0..n {
        for col in 0..n {
            if (row + col) % 2 != 0 {
                continue; // structural parity zero
            }
            m[(row, col)] = squeeze_entry(row, col, alpha, &lnfact);
        }
    }
    UnitaryBlock {
        space,
        matrix: m,
        source: MatrixSource::ClosedForm,
    }
}

fn squeeze_entry(row: usize, col: usize, alpha: f64, lnfact: &[f64]) -> Complex64 {
    // Formula stated for col ≥ row; otherwise swap indices and flip α.
    let (mt, nt, at) = if col >= row {
        (row, col, alpha)
    } else {
        (col, row, -alpha)
    };
    let q = (nt - mt) / 2;
    let half = at / 2.0;
    let (sh, ch) = (half.sinh(), half.cosh());
    if q > 0 && sh == 0.0 {
        return ZERO;
    }
    let x = Complex64::new(-sh * sh, 0.0);
    // one of the two upper parameters is a nonpositive integer; pass it first
    let (terms, other) = if mt % 2 == 0 {
        (mt / 2, Complex64::new((1.0 - mt as f64) / 2.0, 0.0))
    } else {
        ((mt - 1) / 2, Complex64::new(-(mt as f64) / 2.0, 0.0))
    };
    let c = Complex64::new(1.0 + q as f64, 0.0);
    let f = hyp2f1_terminating(terms as u32, other, c, x)
        .expect("lower parameter 1+q is a positive integer")
        .value;
    let mut ln_mag = -(q as f64) * std::f64::consts::LN_2 - lnfact[q]
        + 0.5 * (lnfact[nt] - lnfact[mt])
        - 0.5 * (nt + mt + 1) as f64 * ch.ln();
    if q > 0 {
        ln_mag += q as f64 * sh.abs().ln();
    }
    let sign = if q % 2 == 1 && sh < 0.0 { -1.0 } else { 1.0 };
    sign * ln_mag.exp() * f
}

/// U(h(α)) by Gauss–Hermite quadrature of the overlap integral: the
/// independent oracle for the closed form. The rule order defaults to
/// 2(m+n)+16 at the largest (m,n), well past the exactness threshold.
pub fn u_squeeze_quadrature(alpha: f64, space: FockSpace) -> Result<UnitaryBlock> {
    let order = 4 * space.dim() + 12;
    u_squeeze_quadrature_with_order(alpha, space, order)
}

/// As [`u_squeeze_quadrature`] with an explicit rule order. The integrand for
/// entry (m, n) is a degree-(m+n) polynomial against a Gaussian, so orders
/// below the space dimension are refused rather than silently degraded.
pub fn u_squeeze_quadrature_with_order(
    alpha: f64,
    space: FockSpace,
    order: usize,
) -> Result<UnitaryBlock> {
    let n = space.dim();
    if order < n {
        return Err(Error::QuadratureOrder { order, required: n });
    }
    let rule = GaussHermite::new(order)?;
    let stretch = (alpha / 2.0).exp();
    let scale = ((1.0 + stretch * stretch) / 2.0).sqrt();
    let pref = (alpha / 4.0).exp() / scale;
    let mut m = DMatrix::zeros(n, n);
    for (&x, &w) in rule.nodes().iter().zip(rule.weights()) {
        let ha = hermite_h_vec(n - 1, x / scale);
        let hb = hermite_h_vec(n - 1, stretch * x / scale);
        for row in 0..n {
            let lhs = w * ha[row];
            if lhs == 0.0 {
                continue;
            }
            for col in 0..n {
                m[(row, col)] += Complex64::new(pref * lhs * hb[col], 0.0);
            }
        }
    }
    Ok(UnitaryBlock {
        space,
        matrix: m,
        source: MatrixSource::Quadrature,
    })
}

/// U(g) assembled through the Cartan factorization:
/// `U = U(k(φ)) U(h(α)) U(k(ψ))`. The rotation factors are diagonal, so the
/// assembly is an exact entrywise phase dressing of the squeeze block.
pub fn u_of_g(g: &GroupElement, space: FockSpace) -> UnitaryBlock {
    let d = cartan_decompose(g);
    let mut u = u_squeeze_closed(d.angles.alpha, space);
    for row in 0..space.dim() {
        let lp = Complex64::from_polar(1.0, -(row as f64) * d.angles.phi / 2.0);
        for col in 0..space.dim() {
            let rp = Complex64::from_polar(1.0, -(col as f64) * d.angles.psi / 2.0);
            u.matrix[(row, col)] *= lp * rp;
        }
    }
    u.source = MatrixSource::CartanProduct;
    u
}

/// Build dimension needed so that entries of squeeze-bearing products are
/// truncation-clean on the leading `interior` rows and columns.
///
/// Column n of a squeeze with total rapidity A carries weight up to about
/// `n e^A + sinh²(A/2)`, decaying geometrically (ratio tanh(A/2) per level)
/// beyond; the returned dimension adds the levels needed to push that tail
/// below `tol`.
pub fn required_dim(interior: usize, total_rapidity: f64, tol: f64) -> usize {
    let a = total_rapidity.abs();
    let floor = interior + 8;
    if a < 1e-9 {
        return floor;
    }
    let spread = (interior + 1) as f64 * a.exp() + (a / 2.0).sinh().powi(2);
    // measured tail decay of truncated products: √tanh(A/2) per level
    let rate = (a / 2.0).tanh().sqrt();
    let excess = if rate < 1e-6 {
        0.0
    } else {
        (1.0 / tol.max(1e-300)).ln() / (1.0 / rate).ln()
    };
    ((spread + excess).ceil() as usize + 8).clamp(floor, 4096)
}

/// Exact entry block ⟨m|U(g)|n⟩ for m < rows, n < cols. Single entries carry
/// no truncation error (the closed form is entrywise); only summed products
/// do, so heavy checks build just the slices their sums need.
pub fn u_entries(g: &GroupElement, rows: usize, cols: usize) -> DMatrix<Complex64> {
    let d = cartan_decompose(g);
    let lnfact = ln_factorial_table(rows.max(cols));
    let mut m = DMatrix::zeros(rows, cols);
    for row in 0..rows {
        let lp = Complex64::from_polar(1.0, -(row as f64) * d.angles.phi / 2.0);
        for col in 0..cols {
            if (row + col) % 2 != 0 {
                continue;
            }
            let rp = Complex64::from_polar(1.0, -(col as f64) * d.angles.psi / 2.0);
            m[(row, col)] = lp * rp * squeeze_entry(row, col, d.angles.alpha, &lnfact);
        }
    }
    m
}

/// ‖U†U − I‖_max on the leading `interior` block, with the internal sum over
/// `sum_len` levels (choose via [`required_dim`]).
pub fn unitarity_residual_padded(g: &GroupElement, interior: usize, sum_len: usize) -> f64 {
    let u = u_entries(g, sum_len, interior);
    let mut max = 0.0f64;
    for m in 0..interior {
        for n in 0..interior {
            let mut acc = ZERO;
            for r in 0..sum_len {
                acc += u[(r, m)].conj() * u[(r, n)];
            }
            if m == n {
                acc -= Complex64::new(1.0, 0.0);
            }
            max = max.max(acc.norm());
        }
    }
    max
}

/// Which way the conjugation is oriented in the intertwining relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// U z U†
    ConjugateByU,
    /// U† z U
    ConjugateByUInverse,
}

impl std::fmt::Display for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Orientation::ConjugateByU => write!(f, "u_z_udag"),
            Orientation::ConjugateByUInverse => write!(f, "udag_z_u"),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct IntertwiningReport {
    pub residual: f64,
    pub orientation: Orientation,
    pub other_residual: f64,
    /// Residual of `U z U⁻¹ − (a z + conj(b) z*)`. With the Cartan-ordered
    /// assembly the conjugation acts by the transposed matrix, so for mixed
    /// phase angles this is the relation that holds exactly; it coincides
    /// with `residual` whenever b is real (pure boosts, in particular).
    pub transposed_residual: f64,
}

/// Interior max-norm of `U z U⁻¹ − (a z + b z*)`, measured for both
/// conjugation orientations; returns the better one and reports which it was,
/// along with the transposed-coefficient residual (see report docs).
pub fn intertwining_residual(
    g: &GroupElement,
    space: FockSpace,
    interior: usize,
) -> IntertwiningReport {
    let u = u_of_g(g, space).matrix;
    let z = FockOperator::annihilation(space).to_dense();
    let target = {
        let (gz, _) = g.act_on_generators(space);
        gz.to_dense()
    };
    let transposed_target = {
        let zs = FockOperator::creation(space);
        let zop = FockOperator::annihilation(space);
        zop.scale(g.a())
            .add(&zs.scale(g.b().conj()))
            .expect("same space")
            .to_dense()
    };
    let udag = u.adjoint();
    let by_u = &u * &z * &udag;
    let by_uinv = &udag * &z * &u;
    let r1 = interior_max_diff(&by_u, &target, interior);
    let r2 = interior_max_diff(&by_uinv, &target, interior);
    let rt = interior_max_diff(&by_u, &transposed_target, interior);
    if r1 <= r2 {
        IntertwiningReport {
            residual: r1,
            orientation: Orientation::ConjugateByU,
            other_residual: r2,
            transposed_residual: rt,
        }
    } else {
        IntertwiningReport {
            residual: r2,
            orientation: Orientation::ConjugateByUInverse,
            other_residual: r1,
            transposed_residual: rt,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct HomomorphismReport {
    pub residual: f64,
    /// The metaplectic sign aligning U(g₁)U(g₂) with U(g₁g₂) after the
    /// zero-point cocycle is removed, fixed by comparing the (0,0) entries
    /// (never zero: |U_00| = cosh^{−1/2}(α/2)).
    pub sign: f64,
    /// The zero-point phase (φ₁+ψ₁+φ₂+ψ₂−φ₁₂−ψ₁₂)/4. The rotation factor
    /// diag(e^{−inψ/2}) omits the oscillator zero-point e^{−iψ/4}, so lifts
    /// compose with this predictable U(1) phase on top of the ± sign.
    pub cocycle_phase: f64,
}

/// ‖U(g₁)U(g₂) ∓ e^{iθ} U(g₁g₂)‖_max on the interior block, where θ is the
/// zero-point cocycle phase computed from the Cartan angles and the ± sign is
/// resolved and reported. The product sums over `sum_len` internal levels
/// (choose via [`required_dim`] at the combined rapidity).
pub fn homomorphism_residual(
    g1: &GroupElement,
    g2: &GroupElement,
    interior: usize,
    sum_len: usize,
) -> HomomorphismReport {
    let a = u_entries(g1, interior, sum_len);
    let b = u_entries(g2, sum_len, interior);
    let g12 = g1.compose(g2);
    let c = u_entries(&g12, interior, interior);
    let d1 = cartan_decompose(g1).angles;
    let d2 = cartan_decompose(g2).angles;
    let d12 = cartan_decompose(&g12).angles;
    let cocycle_phase = (d1.phi + d1.psi + d2.phi + d2.psi - d12.phi - d12.psi) / 4.0;
    let product = &a * &b;
    let corrected = product * Complex64::from_polar(1.0, -cocycle_phase);
    let ratio = corrected[(0, 0)] / c[(0, 0)];
    let sign = if ratio.re < 0.0 { -1.0 } else { 1.0 };
    let aligned = &c * Complex64::new(sign, 0.0);
    HomomorphismReport {
        residual: interior_max_diff(&corrected, &aligned, interior),
        sign,
        cocycle_phase,
    }
}

/// Max-modulus difference over the leading `interior` rows and columns.
pub fn interior_max_diff(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>, interior: usize) -> f64 {
    let interior = interior.min(a.nrows()).min(b.nrows());
    let mut max = 0.0f64;
    for i in 0..interior {
        for j in 0..interior {
            max = max.max((a[(i, j)] - b[(i, j)]).norm());
        }
    }
    max
}
