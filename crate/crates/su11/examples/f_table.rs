//! Dump symbol tables f_k(ζ) for a label, demonstrating the three series
//! kinds and the k < 0 reflection.
//!
//!     cargo run --release --example f_table

use num_complex::Complex64;
use su11::irrep::{classify, f_values, Epsilon, IrrepLabel};

fn main() {
    for label in [
        IrrepLabel::real(1.0, Epsilon::Zero),
        IrrepLabel::real(-1.0, Epsilon::Zero),
        IrrepLabel::new(Complex64::new(-0.5, 1.0), Epsilon::Half),
    ] {
        let class = classify(&label);
        println!("label {label}: {}", class.describe());
        for k in -2..=2i64 {
            if !class.contains(k) {
                println!("  k = {k:+}: outside the invariant ranges");
                continue;
            }
            let fs = f_values(&label, k, 5).unwrap();
            let row: Vec<String> = fs
                .iter()
                .map(|z| format!("{:+.4}{:+.4}i", z.re, z.im))
                .collect();
            println!("  k = {k:+}: f(0..=5) = [{}]", row.join(", "));
        }
        println!();
    }
}
