//! The addition theorem U(g) D_k U*(g) = Σ_n t_nk(g) D_n on each kind of
//! invariant subspace, compared entrywise on an interior block.
//!
//!     cargo run --release --example addition_theorem

use num_complex::Complex64;
use su11::grp::GroupElement;
use su11::irrep::{Epsilon, IrrepLabel};
use su11::verify::check_addition;

fn main() {
    let g = GroupElement::squeeze(1.0);
    let cases = [
        (
            IrrepLabel::real(1.0, Epsilon::Zero),
            0i64,
            "finite window, 3-term sum",
        ),
        (
            IrrepLabel::real(2.0, Epsilon::Zero),
            -1,
            "finite window, 5-term sum",
        ),
        (
            IrrepLabel::new(Complex64::new(-0.5, 1.0), Epsilon::Zero),
            0,
            "principal series",
        ),
        (
            IrrepLabel::real(-1.0, Epsilon::Zero),
            1,
            "discrete pair (with gap limit)",
        ),
        (
            IrrepLabel::real(-1.5, Epsilon::Half),
            -2,
            "discrete pair, half-integer ε",
        ),
    ];
    for (label, k, what) in cases {
        let rep = check_addition(&label, k, &g, 32, 1e-8).unwrap();
        println!(
            "{what}: label {label}, k = {k}: residual {:.3e} over a 32x32 interior block ({} expansion terms, build dim {})",
            rep.residual, rep.parameters["terms_used"], rep.parameters["build_dim"],
        );
    }
}
