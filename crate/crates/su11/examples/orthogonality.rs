//! Orthogonality under the trace pairing (F, G) = tr(F†G): structural zeros
//! between different diagonals, the regulated sums against their closed
//! hypergeometric form, and the s → 1 divergence trend.
//!
//!     cargo run --release --example orthogonality

use num_complex::Complex64;
use su11::irrep::{Epsilon, IrrepLabel};
use su11::verify::{check_orthogonality_regulated, regulated_orthogonality_value};

fn main() {
    let p1 = IrrepLabel::new(Complex64::new(-0.5, 1.0), Epsilon::Zero);
    let p2 = IrrepLabel::new(Complex64::new(-0.5, 2.0), Epsilon::Zero);

    let rep = check_orthogonality_regulated(&p1, &p2, 0, 2, 0.5, 0.0, 1e-9).unwrap();
    println!(
        "different k: trace pairing = {:.1e} (structurally zero)",
        rep.residual
    );

    for s in [0.5, 0.9] {
        let rep = check_orthogonality_regulated(&p1, &p2, 0, 0, s, 0.0, 1e-9).unwrap();
        println!(
            "regulated sum vs closed form at s = {s}: residual {:.3e} ({} terms)",
            rep.residual, rep.parameters["terms"]
        );
    }

    println!("\nsame-label regulated value grows toward the s → 1 divergence:");
    for s in [0.5, 0.9, 0.99, 0.999] {
        let (value, terms, _) = regulated_orthogonality_value(&p1, &p1, 0, s).unwrap();
        println!("  s = {s}: value = {:.6} ({terms} terms)", value.re);
    }
    println!("while the cross-label value stays bounded and oscillates:");
    for s in [0.5, 0.9, 0.99, 0.999] {
        let (value, terms, _) = regulated_orthogonality_value(&p1, &p2, 0, s).unwrap();
        println!(
            "  s = {s}: value = {:.6}{:+.6}i ({terms} terms)",
            value.re, value.im
        );
    }
}
