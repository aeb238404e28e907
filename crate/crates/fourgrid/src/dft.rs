//! The π-scaled discrete Fourier transform on the 2n²-point grid.
//!
//! Forward: `ĝ(k/n) = (1/n) Σ_j g(j/n)·exp(-πi·jk/n²)`, output on the same
//! grid. Inverse: `g(j/n) = (1/2)·(1/n) Σ_k ĝ(k/n)·exp(+πi·jk/n²)` — the ½
//! lives in the inverse only. Because the kernel exponent `jk` is reduced
//! mod 2n² as an exact integer, `idft ∘ dft` is the identity up to plain
//! rounding.
//!
//! [`dft`]/[`idft`] are the naive O(N²) sums and serve as the oracle of
//! record. [`dft_fast`]/[`idft_fast`] reindex to a standard length-2n² DFT
//! (`exp(-πi·jk/n²) = exp(-2πi·jk/(2n²))` after recentring, which costs two
//! alternating-sign twists) and run through `rustfft`; they must agree with
//! the naive path to 1e-10.

use crate::grid::{GridFunction, ScaledGrid};
use crate::phase::unit_phase;
use crate::sum::pairwise_sum;
use crate::{Real, Result};
use num_complex::Complex;
use rustfft::FftPlanner;

/// Sign of the kernel exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn factor(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// The discretized kernel `exp(sign·πi·(⌊nx⌋/n)(⌊nt⌋/n))` on a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Kernel {
    grid: ScaledGrid,
    sign: Sign,
}

impl Kernel {
    pub fn new(grid: ScaledGrid, sign: Sign) -> Self {
        Kernel { grid, sign }
    }

    pub fn grid(&self) -> ScaledGrid {
        self.grid
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// Kernel value at exact grid indices: `exp(sign·πi·jk/n²)`.
    pub fn eval_indices<T: Real>(&self, j: i64, k: i64) -> Complex<T> {
        debug_assert!(self.grid.contains_index(j) && self.grid.contains_index(k));
        unit_phase(self.sign.factor() * j * k, self.grid.half())
    }

    /// Kernel value at real arguments, flooring both onto the grid.
    /// Arguments outside `[-n, n)` are rejected.
    pub fn eval<T: Real>(&self, x: T, t: T) -> Result<Complex<T>> {
        let j = self.grid.floor_project(x)?;
        let k = self.grid.floor_project(t)?;
        Ok(self.eval_indices(j, k))
    }
}

/// Free-function form of [`Kernel::eval`].
pub fn kernel_eval<T: Real>(grid: ScaledGrid, sign: Sign, x: T, t: T) -> Result<Complex<T>> {
    Kernel::new(grid, sign).eval(x, t)
}

fn naive_transform<T: Real>(g: &GridFunction<T>, sign: Sign, post: T) -> GridFunction<T> {
    let grid = g.grid();
    let half = grid.half();
    let two_m = 2 * half;
    // one table entry per reduced phase; indexing goes through the same
    // reduction as `unit_phase`, so this is bit-identical to Kernel::eval
    let table: Vec<Complex<T>> = (0..two_m).map(|r| unit_phase(r, half)).collect();
    let s = sign.factor();
    let vals = g.values();
    let mut terms = vec![Complex::new(T::zero(), T::zero()); grid.len()];
    let mut out = Vec::with_capacity(grid.len());
    for k in grid.indices() {
        for (pos, j) in grid.indices().enumerate() {
            let r = (s * j * k).rem_euclid(two_m) as usize;
            terms[pos] = vals[pos] * table[r];
        }
        out.push(pairwise_sum(&terms) * post);
    }
    GridFunction::from_values_unchecked(grid, out)
}

/// Naive π-scaled transform: `ĝ(k/n) = (1/n) Σ_j g(j/n)·exp(-πi·jk/n²)`.
pub fn dft<T: Real>(g: &GridFunction<T>) -> GridFunction<T> {
    naive_transform(g, Sign::Minus, g.grid().weight())
}

/// Naive inverse: `g(j/n) = ½·(1/n) Σ_k ĝ(k/n)·exp(+πi·jk/n²)`.
pub fn idft<T: Real>(ghat: &GridFunction<T>) -> GridFunction<T> {
    let half_weight = ghat.grid().weight::<T>() / T::from_u32(2).unwrap();
    naive_transform(ghat, Sign::Plus, half_weight)
}

fn fast_transform<T: Real>(g: &GridFunction<T>, inverse: bool, post: T) -> GridFunction<T> {
    let grid = g.grid();
    let len = grid.len();
    // recentring j = j' - n², k = k' - n² turns exp(±πi·jk/n²) into the
    // standard exp(±2πi·j'k'/N) kernel times (-1)^{j'}·(-1)^{k'}·(-1)^n
    let mut buf: Vec<Complex<T>> = g
        .values()
        .iter()
        .enumerate()
        .map(|(jp, &v)| if jp % 2 == 1 { -v } else { v })
        .collect();
    let mut planner = FftPlanner::<T>::new();
    let fft = if inverse {
        planner.plan_fft_inverse(len)
    } else {
        planner.plan_fft_forward(len)
    };
    fft.process(&mut buf);
    let parity_n = if grid.n() % 2 == 1 { -T::one() } else { T::one() };
    let out: Vec<Complex<T>> = buf
        .into_iter()
        .enumerate()
        .map(|(kp, v)| {
            let sign = if kp % 2 == 1 { -parity_n } else { parity_n };
            v * (sign * post)
        })
        .collect();
    GridFunction::from_values_unchecked(grid, out)
}

/// FFT-backed transform with the same contract as [`dft`].
pub fn dft_fast<T: Real>(g: &GridFunction<T>) -> GridFunction<T> {
    fast_transform(g, false, g.grid().weight())
}

/// FFT-backed inverse with the same contract as [`idft`].
pub fn idft_fast<T: Real>(ghat: &GridFunction<T>) -> GridFunction<T> {
    let half_weight = ghat.grid().weight::<T>() / T::from_u32(2).unwrap();
    fast_transform(ghat, true, half_weight)
}
