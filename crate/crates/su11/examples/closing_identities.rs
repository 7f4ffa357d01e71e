//! The two closing special-function identities: the Legendre expansion in
//! squeezed-vacuum weights and the finite unity identity.
//!
//!     cargo run --release --example closing_identities

use su11::verify::{check_legendre_identity, check_unity_identity};

fn main() {
    println!("P_tau(cosh a) against its expansion in tanh^2n(a/2) weights:");
    for tau in 0..=3u32 {
        for alpha in [0.25, 1.0, 2.0] {
            let rep = check_legendre_identity(tau, alpha, 1e-10).unwrap();
            println!(
                "  tau = {tau}, alpha = {alpha}: residual {:.3e} in {} terms",
                rep.residual, rep.parameters["terms"]
            );
        }
    }
    println!("\nfinite unity identity (alternating sign convention):");
    for tau in 0..=3u32 {
        let rep = check_unity_identity(tau, 1.3, 1e-11).unwrap();
        println!("  tau = {tau}: |sum − 1| = {:.3e}", rep.residual);
    }
}
