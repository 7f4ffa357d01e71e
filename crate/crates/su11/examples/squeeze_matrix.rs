//! Build the squeeze block U(h(α)) two independent ways — closed
//! hypergeometric form and Gauss–Hermite quadrature of the overlap integral —
//! and compare them entrywise.
//!
//!     cargo run --release --example squeeze_matrix

use su11::fock::FockSpace;
use su11::weyl::{interior_max_diff, u_squeeze_closed, u_squeeze_quadrature};

fn main() {
    let dim = 16;
    let space = FockSpace::new(dim).unwrap();
    for alpha in [0.3, 1.0, 2.0] {
        let closed = u_squeeze_closed(alpha, space);
        let quad = u_squeeze_quadrature(alpha, space).unwrap();
        let diff = interior_max_diff(closed.matrix(), quad.matrix(), dim);
        println!("alpha = {alpha}: closed vs quadrature, max entry difference {diff:.3e}");
    }
    let alpha = 1.0;
    let u = u_squeeze_closed(alpha, space);
    println!("\nU(h({alpha})), top-left 6x6 block (odd m+n entries are structural zeros):");
    for m in 0..6 {
        let row: Vec<String> = (0..6)
            .map(|n| format!("{:+.5}", u.entry(m, n).re))
            .collect();
        println!("  {}", row.join("  "));
    }
    println!(
        "\nU_00 = cosh(α/2)^(-1/2) = {:.12}",
        (alpha / 2.0_f64).cosh().powf(-0.5)
    );
}
