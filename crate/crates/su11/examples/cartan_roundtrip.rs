//! Decompose random SU(1,1) elements into Cartan angles g = k(φ)h(α)k(ψ)
//! and recompose them; the half-angle phases live on the 4π circle.
//!
//!     cargo run --release --example cartan_roundtrip

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};
use su11::grp::{cartan_compose, cartan_decompose, element_distance, CartanAngles};

fn main() {
    let mut rng = StdRng::seed_from_u64(42);
    let mut max_residual = 0.0f64;
    for _ in 0..1000 {
        let angles = CartanAngles::new(
            rng.random_range(0.0..4.0 * std::f64::consts::PI),
            rng.random_range(0.0..3.0),
            rng.random_range(0.0..4.0 * std::f64::consts::PI),
        );
        let g = cartan_compose(&angles);
        let d = cartan_decompose(&g);
        let back = cartan_compose(&d.angles);
        max_residual = max_residual.max(element_distance(&back, &g));
    }
    println!("1000 random elements: max roundtrip residual {max_residual:.3e}");

    let g = cartan_compose(&CartanAngles::new(1.2, 0.8, 3.9));
    let d = cartan_decompose(&g);
    println!(
        "example: a = {}, b = {} decomposes to (phi, alpha, psi) = ({:.6}, {:.6}, {:.6}), sign {}",
        g.a(),
        g.b(),
        d.angles.phi,
        d.angles.alpha,
        d.angles.psi,
        d.sign
    );
}
