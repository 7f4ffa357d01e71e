//! Truncated Fock-space operator algebra.
//!
//! Operators are stored as sparse sets of *shifted diagonals*: an operator
//! supported on a single diagonal `m = t + d` keeps its shift `d` and the
//! values along the diagonal, so shift bookkeeping under products and
//! adjoints is exact. Dense conversion exists only for oracle cross-checks.
//!
//! Truncation at dimension N corrupts only entries within shift-distance of
//! the cutoff; comparisons therefore happen on an *interior block*
//! (rows and columns `0..N−B` for banded computations with total shift B).

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Truncated Fock space with number basis |0⟩ … |N−1⟩.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockSpace {
    dim: usize,
}

impl FockSpace {
    pub fn new(dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidDimension(dim));
        }
        Ok(FockSpace { dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// A single diagonal of offset `shift`: entry (t + shift, t) holds
/// `values[t − t_min]` where `t_min = max(0, −shift)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftedDiagonal {
    shift: i64,
    values: Vec<Complex64>,
}

impl ShiftedDiagonal {
    pub fn shift(&self) -> i64 {
        self.shift
    }

    fn col_start(&self) -> usize {
        (-self.shift).max(0) as usize
    }

    /// Value at matrix entry (t + shift, t), zero outside the stored band.
    pub fn value_at_col(&self, t: usize) -> Complex64 {
        let start = self.col_start();
        if t < start {
            return ZERO;
        }
        self.values.get(t - start).copied().unwrap_or(ZERO)
    }

    pub fn values(&self) -> impl Iterator<Item = (usize, Complex64)> + '_ {
        let start = self.col_start();
        self.values
            .iter()
            .enumerate()
            .map(move |(i, &v)| (start + i, v))
    }
}

/// Finite sum of shifted diagonals on a truncated Fock space, at most one
/// diagonal per shift.
#[derive(Debug, Clone, PartialEq)]
pub struct FockOperator {
    space: FockSpace,
    terms: BTreeMap<i64, Vec<Complex64>>,
}

impl FockOperator {
    pub fn zero(space: FockSpace) -> Self {
        FockOperator {
            space,
            terms: BTreeMap::new(),
        }
    }

    /// Build a single shifted diagonal from a function of the column index.
    /// `f(t)` is evaluated for every column t with both (t, t+shift) in range.
    pub fn from_diagonal_fn(
        space: FockSpace,
        shift: i64,
        f: impl Fn(usize) -> Complex64,
    ) -> Result<Self> {
        let n = space.dim() as i64;
        if shift.abs() >= n {
            return Err(Error::ShiftExceedsTruncation {
                shift,
                dim: space.dim(),
            });
        }
        let start = (-shift).max(0) as usize;
        let count = (n - shift.abs()) as usize;
        let values = (0..count).map(|i| f(start + i)).collect();
        let mut terms = BTreeMap::new();
        terms.insert(shift, values);
        let mut op = FockOperator { space, terms };
        op.prune();
        Ok(op)
    }

    pub fn identity(space: FockSpace) -> Self {
        Self::from_diagonal_fn(space, 0, |_| ONE).expect("shift 0 always fits")
    }

    /// Annihilation operator z |n⟩ = √n |n−1⟩: shift −1, value √t at column t.
    pub fn annihilation(space: FockSpace) -> Self {
        Self::from_diagonal_fn(space, -1, |t| Complex64::new((t as f64).sqrt(), 0.0))
            .expect("shift -1 fits for dim >= 2")
    }

    /// Creation operator z* |n⟩ = √(n+1) |n+1⟩, the adjoint of annihilation.
    pub fn creation(space: FockSpace) -> Self {
        Self::annihilation(space).adjoint()
    }

    /// Number operator ζ = z*z with spectrum {0, 1, 2, …}.
    pub fn number(space: FockSpace) -> Self {
        Self::from_diagonal_fn(space, 0, |t| Complex64::new(t as f64, 0.0))
            .expect("shift 0 always fits")
    }

    /// Diagonal of falling factorials t(t−1)…(t−n+1); equals the matrix
    /// product (z*)ⁿ zⁿ exactly, including at the truncation boundary.
    pub fn falling_factorial_diagonal(n: u32, space: FockSpace) -> Self {
        Self::from_diagonal_fn(space, 0, |t| {
            let mut acc = 1.0;
            for j in 0..n as i64 {
                acc *= t as f64 - j as f64;
            }
            // one factor is exactly zero whenever t < n
            Complex64::new(if (t as i64) < n as i64 { 0.0 } else { acc }, 0.0)
        })
        .expect("shift 0 always fits")
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn shifts(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().copied()
    }

    pub fn term(&self, shift: i64) -> Option<ShiftedDiagonal> {
        self.terms.get(&shift).map(|v| ShiftedDiagonal {
            shift,
            values: v.clone(),
        })
    }

    /// Largest |shift| present; 0 for the zero operator.
    pub fn max_abs_shift(&self) -> i64 {
        self.terms.keys().map(|s| s.abs()).max().unwrap_or(0)
    }

    /// Matrix entry (m, t).
    pub fn entry(&self, m: usize, t: usize) -> Complex64 {
        let shift = m as i64 - t as i64;
        match self.terms.get(&shift) {
            Some(values) => {
                let start = (-shift).max(0) as usize;
                if t < start {
                    ZERO
                } else {
                    values.get(t - start).copied().unwrap_or(ZERO)
                }
            }
            None => ZERO,
        }
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::DimensionMismatch(
                self.space.dim(),
                other.space.dim(),
            ));
        }
        Ok(())
    }

    /// Drop diagonals that are exactly zero, so the shift set reflects the
    /// structural support (structural orthogonality relies on this).
    fn prune(&mut self) {
        self.terms.retain(|_, v| v.iter().any(|c| *c != ZERO));
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (&shift, values) in &other.terms {
            match out.terms.get_mut(&shift) {
                Some(existing) => {
                    for (a, b) in existing.iter_mut().zip(values) {
                        *a += b;
                    }
                }
                None => {
                    out.terms.insert(shift, values.clone());
                }
            }
        }
        out.prune();
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-ONE))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut out = self.clone();
        for values in out.terms.values_mut() {
            for v in values {
                *v *= c;
            }
        }
        out.prune();
        out
    }

    pub fn adjoint(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (&shift, values) in &self.terms {
            terms.insert(-shift, values.iter().map(|v| v.conj()).collect());
        }
        FockOperator {
            space: self.space,
            terms,
        }
    }

    /// Matrix product. Diagonals of shifts d₁, d₂ combine into shift d₁+d₂;
    /// entries whose intermediate index would cross the cutoff are dropped,
    /// exactly as in the dense truncated product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let n = self.space.dim() as i64;
        let mut out = FockOperator::zero(self.space);
        for (&d1, v1) in &self.terms {
            let a = ShiftedDiagonal {
                shift: d1,
                values: v1.clone(),
            };
            for (&d2, v2) in &other.terms {
                let b = ShiftedDiagonal {
                    shift: d2,
                    values: v2.clone(),
                };
                let d = d1 + d2;
                if d.abs() >= n {
                    continue;
                }
                let start = (-d).max(0) as usize;
                let count = (n - d.abs()) as usize;
                let values: Vec<Complex64> = (0..count)
                    .map(|i| {
                        let t = start + i;
                        // intermediate index r = t + d2 must be inside the space
                        let r = t as i64 + d2;
                        if r < 0 || r >= n {
                            return ZERO;
                        }
                        a.value_at_col(r as usize) * b.value_at_col(t)
                    })
                    .collect();
                match out.terms.get_mut(&d) {
                    Some(existing) => {
                        for (x, y) in existing.iter_mut().zip(&values) {
                            *x += y;
                        }
                    }
                    None => {
                        out.terms.insert(d, values);
                    }
                }
            }
        }
        out.prune();
        Ok(out)
    }

    /// AB − BA. Truncation artifacts stay within the last |shift| rows and
    /// columns of each product term.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Trace inner product (F, G) = tr(F†G). Only diagonals with equal shift
    /// pair up; operators with disjoint shift sets give exactly zero.
    pub fn trace_inner_product(&self, other: &Self) -> Result<Complex64> {
        self.check_space(other)?;
        let mut acc = ZERO;
        for (&shift, values) in &self.terms {
            if let Some(others) = other.terms.get(&shift) {
                for (a, b) in values.iter().zip(others) {
                    acc += a.conj() * b;
                }
            }
        }
        Ok(acc)
    }

    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let n = self.space.dim();
        let mut m = DMatrix::zeros(n, n);
        for (&shift, values) in &self.terms {
            let start = (-shift).max(0) as usize;
            for (i, &v) in values.iter().enumerate() {
                let t = start + i;
                let row = (t as i64 + shift) as usize;
                m[(row, t)] = v;
            }
        }
        m
    }

    /// Apply to a coefficient vector.
    pub fn apply(&self, vec: &[Complex64]) -> Result<Vec<Complex64>> {
        if vec.len() != self.space.dim() {
            return Err(Error::DimensionMismatch(self.space.dim(), vec.len()));
        }
        let mut out = vec![ZERO; vec.len()];
        for (&shift, values) in &self.terms {
            let start = (-shift).max(0) as usize;
            for (i, &v) in values.iter().enumerate() {
                let t = start + i;
                let row = (t as i64 + shift) as usize;
                out[row] += v * vec[t];
            }
        }
        Ok(out)
    }

    /// Max-modulus over entries with row and column < `interior`.
    pub fn interior_max_norm(&self, interior: usize) -> f64 {
        let interior = interior.min(self.space.dim());
        let mut max = 0.0f64;
        for (&shift, values) in &self.terms {
            let start = (-shift).max(0) as usize;
            for (i, &v) in values.iter().enumerate() {
                let t = start + i;
                let row = (t as i64 + shift) as usize;
                if t < interior && row < interior {
                    max = max.max(v.norm());
                }
            }
        }
        max
    }

    /// Max-modulus over the whole truncated matrix.
    pub fn max_norm(&self) -> f64 {
        self.interior_max_norm(self.space.dim())
    }
}
