//! Harmonic analysis on scaled finite grids.
//!
//! The central object is the grid of 2n² points `j/n` for `-n² <= j < n²`,
//! carrying counting measure `1/n` per cell. On complex-valued functions over
//! that grid the crate provides:
//!
//! - [`dft`]: a π-scaled discrete Fourier transform
//!   `ĝ(k/n) = (1/n) Σ_j g(j/n) exp(-πi jk/n²)` whose inverse (with a single
//!   extra factor ½) recovers the input exactly, plus an FFT-backed fast path
//!   equivalent to the naive sum.
//! - [`chargroup`]: the finite commutative groups behind that transform
//!   (cyclic, shift, and scaled-shift), their full character sets, and the
//!   generic character-basis transform and inversion.
//! - [`dcalc`]: forward-difference derivative and shift operators, the
//!   discrete fundamental theorem / product rule / summation by parts, and
//!   the boundary terms that relate the transform of a derivative back to the
//!   transform itself.
//! - [`bounds`]: decay constants of rapidly decreasing functions and the
//!   quantitative tail estimates they imply for discrete spectra.
//! - [`catalog`] and [`quadrature`]: rapidly decreasing test functions with
//!   analytic derivatives and closed-form transforms, and an adaptive
//!   Gauss–Kronrod integrator used as the continuous reference.
//! - [`converge`]: experiments that measure, for growing n, how the discrete
//!   transform approaches the continuous one, and emit CSV report rows.
//!
//! Grid points, group elements, and kernel phases are kept as exact integers
//! internally; every complex exponential is evaluated from a phase reduced
//! modulo the group period, so characters are unit modulus to the last bit
//! and the transform inverts to near machine precision.

use num_complex::Complex;

pub mod bounds;
pub mod catalog;
pub mod chargroup;
pub mod converge;
pub mod dcalc;
pub mod dft;
pub mod grid;
pub mod phase;
pub mod quadrature;
pub mod report;
pub mod sum;

pub use bounds::DecayConstants;
pub use catalog::SchwartzFunction;
pub use chargroup::{Character, FiniteGroup};
pub use converge::ReportRow;
pub use dcalc::{BoundaryData, PhaseFactors, Residual};
pub use dft::{Kernel, Sign};
pub use grid::{GridFunction, ScaledGrid};

/// Scalar type for grid values: `f32` or `f64`.
pub trait Real:
    num_traits::Float + num_traits::FloatConst + num_traits::FromPrimitive + rustfft::FftNum
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Grid function over `f64`, the precision used by the test catalog and CLI.
pub type GridFunction64 = GridFunction<f64>;
/// Grid function over `f32`.
pub type GridFunction32 = GridFunction<f32>;
/// Complex scalar over `f64`.
pub type Complex64 = Complex<f64>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("grid parameter n={0} must be in 1..={max}", max = grid::MAX_GRID_PARAM)]
    InvalidGridParam(u32),
    #[error("x={0} lies outside the grid domain [-{1}, {1})")]
    OutOfDomain(f64, u32),
    #[error("value length {got} does not match grid size {want}")]
    LengthMismatch { got: usize, want: usize },
    #[error("evaluator produced a non-finite value at x={0}")]
    NonFiniteSample(f64),
    #[error("grids differ: n={0} vs n={1}")]
    GridMismatch(u32, u32),
    #[error("group order must be positive")]
    EmptyGroup,
    #[error("t=0 is excluded here: psi_n(0) = 0")]
    ZeroFrequency,
    #[error("epsilon must be positive, got {0}")]
    NonPositiveEpsilon(f64),
    #[error("tail range [{0}, {1}) must satisfy L*L' > 0 and |L| <= |L'|")]
    InvalidTailRange(f64, f64),
    #[error("probe {0} is not a grid point for n={1}")]
    ProbeOffGrid(f64, u32),
    #[error("quadrature did not converge: achieved {achieved:e} > requested {requested:e}")]
    QuadratureDidNotConverge { achieved: f64, requested: f64 },
    #[error("unknown catalog function `{0}`")]
    UnknownFunction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
