//! The ladder action on the basis operators D_k for one label of each series
//! kind: H₋D_k = −(k+τ+ε)D_{k−1}, H₊D_k = (k−τ+ε)D_{k+1}, HD_k = (k+ε)D_k,
//! with the finite limiting images at discrete-pair subspace edges.
//!
//!     cargo run --release --example ladder_relations

use num_complex::Complex64;
use su11::fock::FockSpace;
use su11::irrep::{
    classify, d_operator, highest_lowest_weight_check, ladder_edge_image, ladder_h, ladder_minus,
    Epsilon, IrrepLabel,
};

fn main() {
    let space = FockSpace::new(32).unwrap();
    let labels = [
        IrrepLabel::new(Complex64::new(-0.5, 1.0), Epsilon::Zero), // principal series
        IrrepLabel::real(-1.0, Epsilon::Zero),                     // discrete pair
        IrrepLabel::real(2.0, Epsilon::Zero),                      // finite window
    ];
    for label in &labels {
        let class = classify(label);
        println!("label {label}: {}", class.describe());
        for k in -3..=3i64 {
            if !class.contains(k) {
                continue;
            }
            let d = d_operator(label, k, space).unwrap();
            let interior = 32 - (d.shift().unsigned_abs() as usize + 6);
            let h = ladder_h(d.op());
            let expect = d
                .op()
                .scale(Complex64::new(k as f64 + label.epsilon().value(), 0.0));
            let residual = h.sub(&expect).unwrap().interior_max_norm(interior);
            println!("  H D_{k} − (k+ε) D_{k}: interior residual {residual:.3e}");
        }
        if class.kind() != su11::irrep::SeriesKind::Continuous {
            let edges = highest_lowest_weight_check(label, space).unwrap();
            println!(
                "  edges: H+ at k={} residual {:.3e}, H- at k={} residual {:.3e}",
                edges.top.k, edges.top.residual, edges.bottom.k, edges.bottom.residual
            );
        }
        println!();
    }
    // the discrete pair's edge image is the finite limit of 0·∞: for τ = −1
    // the lowering ladder sends D_1 to −identity, not to zero
    let label = IrrepLabel::real(-1.0, Epsilon::Zero);
    let d1 = d_operator(&label, 1, space).unwrap();
    let image = ladder_minus(d1.op());
    let limit = ladder_edge_image(&label, 0, space).unwrap().unwrap();
    println!(
        "discrete pair τ=−1: H₋D₁ entry (0,0) = {:.6} (limiting image {:.6})",
        image.entry(0, 0).re,
        limit.entry(0, 0).re
    );
}
