//! SU(1,1) group elements and the Cartan factorization.
//!
//! An element is the 2×2 matrix
//! ```text
//!     ( a          b      )
//!     ( conj(b)    conj(a) )        |a|² − |b|² = 1,
//! ```
//! acting linearly on the generator pair (z, z*). The Cartan factorization
//! `g = k(φ) h(α) k(ψ)` splits it into phase rotations
//! `k(ψ) = diag(e^{iψ/2}, e^{−iψ/2})` and a hyperbolic boost `h(α)` with
//! entries cosh(α/2), sinh(α/2).
//!
//! Because half-angles enter the unitary representation (`U(k(ψ))` multiplies
//! |n⟩ by e^{−inψ/2}), the phases φ, ψ live on the 4π circle: ψ and ψ + 2π
//! describe the same group element only up to the metaplectic sign.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::fock::{FockOperator, FockSpace};
use crate::{Error, Result};

const TAU2: f64 = 4.0 * std::f64::consts::PI; // the 4π period of the half-angle phases

/// SU(1,1) element, normalized so that |a|² − |b|² = 1 at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    a: Complex64,
    b: Complex64,
}

impl GroupElement {
    pub fn new(a: Complex64, b: Complex64) -> Result<Self> {
        let det = a.norm_sqr() - b.norm_sqr();
        if det <= 0.0 || !det.is_finite() {
            return Err(Error::InvalidGroupElement(det));
        }
        let scale = det.sqrt();
        Ok(GroupElement {
            a: a / scale,
            b: b / scale,
        })
    }

    pub fn identity() -> Self {
        GroupElement {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
        }
    }

    /// The boost h(α) with a = cosh(α/2), b = sinh(α/2).
    pub fn squeeze(alpha: f64) -> Self {
        GroupElement {
            a: Complex64::new((alpha / 2.0).cosh(), 0.0),
            b: Complex64::new((alpha / 2.0).sinh(), 0.0),
        }
    }

    /// The rotation k(ψ) = diag(e^{iψ/2}, e^{−iψ/2}).
    pub fn phase_rotation(psi: f64) -> Self {
        GroupElement {
            a: Complex64::from_polar(1.0, psi / 2.0),
            b: Complex64::new(0.0, 0.0),
        }
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    /// |a|² − |b|² − 1, which construction keeps at rounding level.
    pub fn constraint_residual(&self) -> f64 {
        (self.a.norm_sqr() - self.b.norm_sqr() - 1.0).abs()
    }

    /// Matrix product g₁ g₂.
    pub fn compose(&self, other: &Self) -> Self {
        GroupElement {
            a: self.a * other.a + self.b * other.b.conj(),
            b: self.a * other.b + self.b * other.a.conj(),
        }
    }

    /// (a, b) ↦ (conj(a), −b).
    pub fn inverse(&self) -> Self {
        GroupElement {
            a: self.a.conj(),
            b: -self.b,
        }
    }

    /// The transformed generator pair (g·z, g·z*) =
    /// (a z + b z*, conj(b) z + conj(a) z*) on the given truncated space.
    pub fn act_on_generators(&self, space: FockSpace) -> (FockOperator, FockOperator) {
        let z = FockOperator::annihilation(space);
        let zs = FockOperator::creation(space);
        let gz = z.scale(self.a).add(&zs.scale(self.b)).expect("same space");
        let gzs = z
            .scale(self.b.conj())
            .add(&zs.scale(self.a.conj()))
            .expect("same space");
        (gz, gzs)
    }

    /// Cartan angles of this element; see [`cartan_decompose`].
    pub fn cartan(&self) -> CartanDecomposition {
        cartan_decompose(self)
    }
}

/// Cartan parameters (φ, α, ψ) of g = k(φ) h(α) k(ψ), with α ≥ 0 and the
/// phases reduced to [0, 4π).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CartanAngles {
    pub phi: f64,
    pub alpha: f64,
    pub psi: f64,
}

impl CartanAngles {
    pub fn new(phi: f64, alpha: f64, psi: f64) -> Self {
        CartanAngles { phi, alpha, psi }
    }

    pub fn to_group(&self) -> GroupElement {
        cartan_compose(self)
    }
}

/// Result of a Cartan decomposition. The half-angle phases are canonicalized
/// by full 4π periods, which leaves the recomposed element equal to `sign · g`;
/// with the canonicalization used here the sign is always +1, but it is kept
/// explicit because the metaplectic lift is only defined up to it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartanDecomposition {
    pub angles: CartanAngles,
    pub sign: f64,
}

/// Assemble k(φ) h(α) k(ψ):
/// a = e^{i(φ+ψ)/2} cosh(α/2), b = e^{i(φ−ψ)/2} sinh(α/2).
pub fn cartan_compose(c: &CartanAngles) -> GroupElement {
    let a = Complex64::from_polar((c.alpha / 2.0).cosh(), (c.phi + c.psi) / 2.0);
    let b = Complex64::from_polar((c.alpha / 2.0).sinh(), (c.phi - c.psi) / 2.0);
    GroupElement { a, b }
}

/// Split g into Cartan angles: α = 2 arcosh|a|, φ = arg a + arg b,
/// ψ = arg a − arg b, phases reduced modulo 4π. In the degenerate case
/// b = 0 the difference φ − ψ is undetermined and ψ is fixed to 0.
pub fn cartan_decompose(g: &GroupElement) -> CartanDecomposition {
    let mod_4pi = |x: f64| x.rem_euclid(TAU2);
    let alpha = 2.0 * g.a.norm().max(1.0).acosh();
    let (phi, psi) = if g.b.norm() == 0.0 || alpha == 0.0 {
        (mod_4pi(2.0 * g.a.arg()), 0.0)
    } else {
        (
            mod_4pi(g.a.arg() + g.b.arg()),
            mod_4pi(g.a.arg() - g.b.arg()),
        )
    };
    // Shifting a phase by a full 4π period leaves both half-angle factors
    // untouched, so recomposition reproduces +g.
    CartanDecomposition {
        angles: CartanAngles { phi, alpha, psi },
        sign: 1.0,
    }
}

/// Flat JSON form of a group element: {re_a, im_a, re_b, im_b}.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct GroupElementJson {
    pub re_a: f64,
    pub im_a: f64,
    pub re_b: f64,
    pub im_b: f64,
}

impl From<&GroupElement> for GroupElementJson {
    fn from(g: &GroupElement) -> Self {
        GroupElementJson {
            re_a: g.a.re,
            im_a: g.a.im,
            re_b: g.b.re,
            im_b: g.b.im,
        }
    }
}

impl TryFrom<GroupElementJson> for GroupElement {
    type Error = Error;

    fn try_from(j: GroupElementJson) -> Result<GroupElement> {
        GroupElement::new(
            Complex64::new(j.re_a, j.im_a),
            Complex64::new(j.re_b, j.im_b),
        )
    }
}

/// Entrywise distance between two group elements.
pub fn element_distance(g1: &GroupElement, g2: &GroupElement) -> f64 {
    (g1.a - g2.a).norm().max((g1.b - g2.b).norm())
}
