//! Irreducible SU(1,1) representation content inside the operator algebra.
//!
//! A label is a pair (τ, ε) with τ complex and ε ∈ {0, ½}. The basis
//! operators `D_k^(τ,ε)` are single shifted diagonals of offset 2(k+ε) whose
//! symbol is the hypergeometric function
//!
//! ```text
//! f_k(ζ) = 2^{k'} Γ(1+τ+k')/Γ(1+2k') F(−ζ, 1+τ+k'; 1+2k'; 2),   k' = k+ε,
//! ```
//!
//! for k ≥ 0, extended to k < 0 by the reflection `f_k^(τ,ε) = f_{−k}^(τ,−ε)`.
//! The prefactor base is +2, not −2: the defining series
//! `f_k = Σ_n (−1)ⁿ 2^{n+k+ε}/n! C_kn ζ(ζ−1)…(ζ−n+1)` sums to the +2 form,
//! and the ladder relations below fix the relative normalization across k —
//! an alternating (−1)^k would flip their signs (see
//! `tests::minus_two_prefactor_breaks_the_ladder`).
//!
//! The Lie algebra acts by the commutator superoperators
//! `H₋F = ½[F, z²]`, `H₊F = ½[z*², F]`, `HF = ½[ζ, F]`, under which
//!
//! ```text
//! H₋ D_k = −(k+τ+ε) D_{k−1},   H₊ D_k = (k−τ+ε) D_{k+1},   H D_k = (k+ε) D_k.
//! ```
//!
//! Classification by k-range of the invariant subspaces: all of ℤ when
//! τ+ε ∉ ℤ (continuous); the pair (−∞, τ−ε], [−τ−ε, ∞) when τ+ε ∈ ℤ and
//! τ−ε < 0 (discrete pair); the finite window [−τ−ε, τ−ε] when τ+ε ∈ ℤ and
//! τ−ε ≥ 0.

use num_complex::Complex64;

use crate::fock::{FockOperator, FockSpace};
use crate::specfun::{gamma, hyp2f1_arg2_seq, ln_factorial_table};
use crate::{Error, Result};

/// Parity label ε, exactly 0 or ½.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Epsilon {
    Zero,
    Half,
}

impl Epsilon {
    pub fn value(self) -> f64 {
        match self {
            Epsilon::Zero => 0.0,
            Epsilon::Half => 0.5,
        }
    }

    /// 2ε as an integer.
    pub fn doubled(self) -> i64 {
        match self {
            Epsilon::Zero => 0,
            Epsilon::Half => 1,
        }
    }

    pub fn from_doubled(two_eps: i64) -> Result<Self> {
        match two_eps {
            0 => Ok(Epsilon::Zero),
            1 => Ok(Epsilon::Half),
            other => Err(Error::Config(format!(
                "epsilon must be 0 or 1/2, got {}/2",
                other
            ))),
        }
    }
}

impl std::fmt::Display for Epsilon {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Epsilon::Zero => write!(f, "0"),
            Epsilon::Half => write!(f, "1/2"),
        }
    }
}

/// Representation label (τ, ε).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IrrepLabel {
    tau: Complex64,
    epsilon: Epsilon,
}

impl IrrepLabel {
    pub fn new(tau: Complex64, epsilon: Epsilon) -> Self {
        IrrepLabel { tau, epsilon }
    }

    pub fn real(tau: f64, epsilon: Epsilon) -> Self {
        Self::new(Complex64::new(tau, 0.0), epsilon)
    }

    pub fn tau(&self) -> Complex64 {
        self.tau
    }

    pub fn epsilon(&self) -> Epsilon {
        self.epsilon
    }

    /// τ+ε as an integer, when it is one (within 1e−9).
    fn tau_plus_eps_integer(&self) -> Option<i64> {
        if self.tau.im.abs() > 1e-9 {
            return None;
        }
        let x = self.tau.re + self.epsilon.value();
        let r = x.round();
        ((x - r).abs() < 1e-9).then_some(r as i64)
    }
}

impl std::fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(tau={}, eps={})", self.tau, self.epsilon)
    }
}

/// Which of the three families a label belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// τ+ε ∉ ℤ: a single two-sided family over all integers k.
    Continuous,
    /// τ+ε ∈ ℤ, τ−ε < 0: two half-infinite invariant subspaces.
    DiscretePair,
    /// τ+ε ∈ ℤ, τ−ε ≥ 0: one finite window of dimension 2τ+1.
    Finite,
}

impl std::fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SeriesKind::Continuous => write!(f, "continuous"),
            SeriesKind::DiscretePair => write!(f, "discrete_pair"),
            SeriesKind::Finite => write!(f, "finite"),
        }
    }
}

/// Integer interval of k values, possibly half-infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KRange {
    All,
    UpTo(i64),
    From(i64),
    Between(i64, i64),
}

impl KRange {
    pub fn contains(&self, k: i64) -> bool {
        match *self {
            KRange::All => true,
            KRange::UpTo(hi) => k <= hi,
            KRange::From(lo) => k >= lo,
            KRange::Between(lo, hi) => lo <= k && k <= hi,
        }
    }
}

impl std::fmt::Display for KRange {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            KRange::All => write!(f, "Z"),
            KRange::UpTo(hi) => write!(f, "(-inf, {hi}]"),
            KRange::From(lo) => write!(f, "[{lo}, inf)"),
            KRange::Between(lo, hi) => write!(f, "[{lo}, {hi}]"),
        }
    }
}

/// Classification result: series kind plus the k-ranges of the invariant
/// subspaces (two of them for the discrete pair).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesClass {
    kind: SeriesKind,
    ranges: Vec<KRange>,
}

impl SeriesClass {
    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn ranges(&self) -> &[KRange] {
        &self.ranges
    }

    /// Whether k lies in some invariant subspace.
    pub fn contains(&self, k: i64) -> bool {
        self.ranges.iter().any(|r| r.contains(k))
    }

    pub fn describe(&self) -> String {
        let rs: Vec<String> = self.ranges.iter().map(|r| r.to_string()).collect();
        format!("{} {}", self.kind, rs.join(" u "))
    }
}

/// Classify a label into its series kind and invariant k-ranges.
pub fn classify(label: &IrrepLabel) -> SeriesClass {
    match label.tau_plus_eps_integer() {
        None => SeriesClass {
            kind: SeriesKind::Continuous,
            ranges: vec![KRange::All],
        },
        Some(tpe) => {
            // τ−ε = (τ+ε) − 2ε is an integer as well
            let tme = tpe - label.epsilon.doubled();
            if tme < 0 {
                SeriesClass {
                    kind: SeriesKind::DiscretePair,
                    ranges: vec![KRange::UpTo(tme), KRange::From(-tpe)],
                }
            } else {
                SeriesClass {
                    kind: SeriesKind::Finite,
                    ranges: vec![KRange::Between(-tpe, tme)],
                }
            }
        }
    }
}

/// Coefficient C_kn = Γ(1+τ+ε+k+n) / Γ(1+2ε+2k+n) of the defining series.
/// The denominator argument is an integer; hitting it at a nonpositive value
/// with a finite numerator gives a vanishing coefficient, while a numerator
/// pole is a domain error (k outside the invariant range).
pub fn coefficient_c(label: &IrrepLabel, k: i64, n: u32) -> Result<Complex64> {
    let den_arg = 1 + label.epsilon.doubled() + 2 * k + n as i64;
    let num_arg =
        label.tau + Complex64::new((1 + k + n as i64) as f64 + label.epsilon.value(), 0.0);
    let num_pole =
        num_arg.im == 0.0 && num_arg.re <= 0.01 && (num_arg.re - num_arg.re.round()).abs() < 1e-12;
    if num_pole {
        return Err(Error::GammaRatioPole {
            factor: format!("Gamma({num_arg})/Gamma({den_arg})"),
            step: k,
        });
    }
    if den_arg <= 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let value = gamma(num_arg) / gamma(Complex64::new(den_arg as f64, 0.0));
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::GammaRatioPole {
            factor: format!("Gamma({num_arg})/Gamma({den_arg})"),
            step: k,
        });
    }
    Ok(value)
}

/// Effective order k' ≥ 0: the reflection `f_k^(τ,ε) = f_{−k}^(τ,−ε)` folds
/// k < 0 onto k' = −k−ε.
fn f_order(label: &IrrepLabel, k: i64) -> f64 {
    if k >= 0 {
        k as f64 + label.epsilon.value()
    } else {
        -(k as f64) - label.epsilon.value()
    }
}

/// Reflection sign for k < 0: the cross-zero ladder relations force the
/// reflected branch to carry (−1)^{2ε} (visible by sandwiching H₊D₋₁ against
/// D₀ at ε = ½; see `tests::reflection_sign_forced_by_crossing_ladder`).
fn reflection_sign(label: &IrrepLabel, k: i64) -> f64 {
    if k < 0 && label.epsilon == Epsilon::Half {
        -1.0
    } else {
        1.0
    }
}

/// The symbol values f_k(ζ) for ζ = 0..=zeta_max, computed in one recurrence
/// sweep of the argument-2 hypergeometric family.
pub fn f_values(label: &IrrepLabel, k: i64, zeta_max: u32) -> Result<Vec<Complex64>> {
    let kp = f_order(label, k);
    let a = label.tau + Complex64::new(1.0 + kp, 0.0);
    let c = Complex64::new(1.0 + 2.0 * kp, 0.0);
    // Γ(1+τ+k') pole means the symbol is undefined: k is outside the
    // invariant subspace of a degenerate label.
    if a.im == 0.0 && a.re <= 0.01 && (a.re - a.re.round()).abs() < 1e-12 {
        return Err(Error::GammaRatioPole {
            factor: format!("Gamma({a})"),
            step: k,
        });
    }
    let prefactor = reflection_sign(label, k) * 2.0f64.powf(kp) * gamma(a) / gamma(c);
    let seq = hyp2f1_arg2_seq(a, c, zeta_max as usize)?;
    Ok(seq.into_iter().map(|f| prefactor * f).collect())
}

/// Symbol values with the Γ(1+τ+k') factor dropped:
/// σ 2^{k'}/Γ(1+2k') F(−ζ, 1+τ+k'; 1+2k'; 2). Finite even where the full
/// symbol has a gamma pole; used for the limiting images at subspace edges.
fn f_values_dropped_gamma(label: &IrrepLabel, k: i64, zeta_max: u32) -> Result<Vec<Complex64>> {
    let kp = f_order(label, k);
    let a = label.tau + Complex64::new(1.0 + kp, 0.0);
    let c = Complex64::new(1.0 + 2.0 * kp, 0.0);
    let prefactor = reflection_sign(label, k) * 2.0f64.powf(kp) / gamma(c);
    let seq = hyp2f1_arg2_seq(a, c, zeta_max as usize)?;
    Ok(seq.into_iter().map(|f| prefactor * f).collect())
}

/// Single symbol value f_k(ζ).
pub fn f_value(label: &IrrepLabel, k: i64, zeta: u32) -> Result<Complex64> {
    Ok(f_values(label, k, zeta)?[zeta as usize])
}

/// Basis operator D_k^(τ,ε): a single shifted diagonal of offset 2k+2ε.
#[derive(Debug, Clone)]
pub struct DOperator {
    label: IrrepLabel,
    k: i64,
    op: FockOperator,
}

impl DOperator {
    pub fn label(&self) -> IrrepLabel {
        self.label
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn shift(&self) -> i64 {
        2 * self.k + self.label.epsilon.doubled()
    }

    pub fn op(&self) -> &FockOperator {
        &self.op
    }

    pub fn into_op(self) -> FockOperator {
        self.op
    }
}

/// Build D_k from the explicit matrix elements: for k ≥ 0
/// `(D_k)_{mt} = √(m!/t!) f_k(t) δ_{m,t+2k+2ε}`, and for k < 0
/// `(D_k)_{mt} = √(t!/m!) f_k(m) δ_{m,t+2k+2ε}`.
///
/// k must lie in an invariant subspace of the label; outside it the gamma
/// factors hit poles and the operator does not exist.
pub fn d_operator(label: &IrrepLabel, k: i64, space: FockSpace) -> Result<DOperator> {
    let class = classify(label);
    if !class.contains(k) {
        return Err(Error::OutOfRange {
            k,
            range: class.describe(),
        });
    }
    let n = space.dim();
    let shift = 2 * k + label.epsilon.doubled();
    if shift.unsigned_abs() as usize >= n {
        return Err(Error::ShiftExceedsTruncation { shift, dim: n });
    }
    let lnfact = ln_factorial_table(n);
    let band = n - shift.unsigned_abs() as usize;
    let fs = f_values(label, k, band as u32 - 1)?;
    let op = if k >= 0 {
        FockOperator::from_diagonal_fn(space, shift, |t| {
            let m = t + shift as usize;
            (0.5 * (lnfact[m] - lnfact[t])).exp() * fs[t]
        })?
    } else {
        FockOperator::from_diagonal_fn(space, shift, |t| {
            let m = (t as i64 + shift) as usize;
            (0.5 * (lnfact[t] - lnfact[m])).exp() * fs[m]
        })?
    };
    Ok(DOperator {
        label: *label,
        k,
        op,
    })
}

/// The same operator from its defining factorization — `z*^{2(k+ε)} f_k(ζ)`
/// for k ≥ 0 and `f_k(ζ) z^{−2(k+ε)}` for k < 0 — built by actual matrix
/// products of creation/annihilation powers against the symbol diagonal.
/// Oracle for [`d_operator`].
pub fn d_operator_from_product(
    label: &IrrepLabel,
    k: i64,
    space: FockSpace,
) -> Result<FockOperator> {
    let class = classify(label);
    if !class.contains(k) {
        return Err(Error::OutOfRange {
            k,
            range: class.describe(),
        });
    }
    let n = space.dim();
    let shift = 2 * k + label.epsilon.doubled();
    if shift.unsigned_abs() as usize >= n {
        return Err(Error::ShiftExceedsTruncation { shift, dim: n });
    }
    let fs = f_values(label, k, n as u32 - 1)?;
    let symbol = FockOperator::from_diagonal_fn(space, 0, |t| fs[t])?;
    let mut power = FockOperator::identity(space);
    let step = if k >= 0 {
        FockOperator::creation(space)
    } else {
        FockOperator::annihilation(space)
    };
    for _ in 0..shift.unsigned_abs() {
        power = power.mul(&step)?;
    }
    if k >= 0 {
        power.mul(&symbol)
    } else {
        symbol.mul(&power)
    }
}

/// Lowering superoperator H₋F = ½ [F, z²].
pub fn ladder_minus(f: &FockOperator) -> FockOperator {
    let z = FockOperator::annihilation(f.space());
    let z2 = z.mul(&z).expect("same space");
    f.commutator(&z2)
        .expect("same space")
        .scale(Complex64::new(0.5, 0.0))
}

/// Raising superoperator H₊F = ½ [z*², F].
pub fn ladder_plus(f: &FockOperator) -> FockOperator {
    let zs = FockOperator::creation(f.space());
    let zs2 = zs.mul(&zs).expect("same space");
    zs2.commutator(f)
        .expect("same space")
        .scale(Complex64::new(0.5, 0.0))
}

/// Cartan superoperator HF = ½ [ζ, F].
pub fn ladder_h(f: &FockOperator) -> FockOperator {
    let zeta = FockOperator::number(f.space());
    zeta.commutator(f)
        .expect("same space")
        .scale(Complex64::new(0.5, 0.0))
}

/// The residue data of D_j at a label where its symbol prefactor
/// Γ(1+τ+k') sits on a pole −m: near the label, D_j(τ+δ) ≈ r/δ · D̂_j with
/// r = (−1)^m/m! and D̂_j the operator built from the gamma-stripped symbol
/// σ 2^{k'}/Γ(1+2k') F(−ζ, 1+τ+k'; 1+2k'; 2).
///
/// Returns `None` when the symbol is regular (no pole to regularize). The
/// pair (D̂_j, r) supplies the finite limits of `vanishing coefficient × D_j`
/// products: ladder images at subspace edges and the expansion terms that
/// land in the spectral gap of a discrete pair.
pub fn d_operator_regularized(
    label: &IrrepLabel,
    j: i64,
    space: FockSpace,
) -> Result<Option<(FockOperator, f64)>> {
    let a = label.tau + Complex64::new(1.0 + f_order(label, j), 0.0);
    if !(a.im == 0.0 && a.re <= 0.01 && (a.re - a.re.round()).abs() < 1e-12) {
        return Ok(None);
    }
    let m = (-a.re.round()) as u32;
    let mut residue = 1.0f64;
    for i in 1..=m {
        residue /= i as f64;
    }
    if m % 2 == 1 {
        residue = -residue;
    }
    let n = space.dim();
    let shift = 2 * j + label.epsilon.doubled();
    if shift.unsigned_abs() as usize >= n {
        return Err(Error::ShiftExceedsTruncation { shift, dim: n });
    }
    let lnfact = ln_factorial_table(n);
    let band = n - shift.unsigned_abs() as usize;
    let fs = f_values_dropped_gamma(
        label,
        j,
        if j >= 0 {
            band as u32 - 1
        } else {
            n as u32 - 1
        },
    )?;
    let op = if j >= 0 {
        FockOperator::from_diagonal_fn(space, shift, |t| {
            let m = t + shift as usize;
            (0.5 * (lnfact[m] - lnfact[t])).exp() * fs[t]
        })?
    } else {
        FockOperator::from_diagonal_fn(space, shift, |t| {
            let m = (t as i64 + shift) as usize;
            (0.5 * (lnfact[t] - lnfact[m])).exp() * fs[m]
        })?
    };
    Ok(Some((op, residue)))
}

/// The limit of `coefficient · D_j` when the ladder steps from a subspace
/// edge to the neighbor index j outside it.
///
/// For finite-window labels the neighbor symbol is regular and the vanishing
/// coefficient makes the image zero (`None`); for the discrete pair the
/// neighbor pole cancels the zero and the image is the finite −r·D̂_j of
/// [`d_operator_regularized`] (the edge coefficient is −δ to first order).
pub fn ladder_edge_image(
    label: &IrrepLabel,
    j: i64,
    space: FockSpace,
) -> Result<Option<FockOperator>> {
    Ok(d_operator_regularized(label, j, space)?
        .map(|(dhat, r)| dhat.scale(Complex64::new(-r, 0.0))))
}

/// One edge of an invariant subspace: the ladder coefficient that vanishes
/// there and the measured interior norm of the annihilated image.
#[derive(Debug, Clone, Copy)]
pub struct EdgeCheck {
    pub k: i64,
    pub coefficient: Complex64,
    pub residual: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct LadderEdgeReport {
    /// k = τ−ε, where H₊ annihilates.
    pub top: EdgeCheck,
    /// k = −τ−ε, where H₋ annihilates.
    pub bottom: EdgeCheck,
}

/// Verify the ladder action at the subspace edges of a discrete-pair or
/// finite label: the coefficients (k−τ+ε), (k+τ+ε) vanish at k = τ−ε and
/// k = −τ−ε, so H₊ D_{τ−ε} and H₋ D_{−τ−ε} must equal the (usually zero)
/// limiting images of [`ladder_edge_image`] on the interior block.
pub fn highest_lowest_weight_check(
    label: &IrrepLabel,
    space: FockSpace,
) -> Result<LadderEdgeReport> {
    let class = classify(label);
    let tpe = label
        .tau_plus_eps_integer()
        .ok_or_else(|| Error::OutOfRange {
            k: 0,
            range: format!("edge check needs tau+eps integer, label {}", label),
        })?;
    let k_top = tpe - label.epsilon.doubled();
    let k_bot = -tpe;
    debug_assert!(class.contains(k_top) && class.contains(k_bot));
    let eps = label.epsilon.value();
    let top = {
        let d = d_operator(label, k_top, space)?;
        let mut image = ladder_plus(d.op());
        if let Some(limit) = ladder_edge_image(label, k_top + 1, space)? {
            image = image.sub(&limit)?;
        }
        let interior = space.dim() - (d.shift().unsigned_abs() as usize + 4);
        EdgeCheck {
            k: k_top,
            coefficient: Complex64::new(k_top as f64 + eps, 0.0) - label.tau,
            residual: image.interior_max_norm(interior),
        }
    };
    let bottom = {
        let d = d_operator(label, k_bot, space)?;
        let mut image = ladder_minus(d.op());
        if let Some(limit) = ladder_edge_image(label, k_bot - 1, space)? {
            image = image.sub(&limit)?;
        }
        let interior = space.dim() - (d.shift().unsigned_abs() as usize + 4);
        EdgeCheck {
            k: k_bot,
            coefficient: Complex64::new(k_bot as f64 + eps, 0.0) + label.tau,
            residual: image.interior_max_norm(interior),
        }
    };
    Ok(LadderEdgeReport { top, bottom })
}
