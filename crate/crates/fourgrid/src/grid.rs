//! The scaled grid `{j/n : -n² <= j < n²}` and complex functions on it.
//!
//! A grid of parameter `n` has 2n² points filling `[-n, n)` with spacing
//! `1/n`, and each cell carries measure `1/n`, so the discrete integral of a
//! function is `(1/n)·Σ_j g(j/n)` and the total measure is `2n`. Points are
//! addressed by their exact integer index `j`; real coordinates appear only
//! at the API edges.

use crate::sum::pairwise_sum;
use crate::{Error, Real, Result};
use num_complex::Complex;
use num_traits::Zero;

/// Largest accepted grid parameter (a grid then has 2·512² = 524288 points).
pub const MAX_GRID_PARAM: u32 = 512;

/// The point set `{j/n : -n² <= j < n²}` with cell weight `1/n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScaledGrid {
    n: u32,
}

impl ScaledGrid {
    /// Builds the grid of parameter `n`. Rejects `n = 0` and `n` beyond
    /// [`MAX_GRID_PARAM`] (memory guard).
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 || n > MAX_GRID_PARAM {
            return Err(Error::InvalidGridParam(n));
        }
        Ok(ScaledGrid { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of grid points, `2n²`.
    pub fn len(&self) -> usize {
        2 * (self.n as usize) * (self.n as usize)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `n²`, the index bound: valid indices are `-n² <= j < n²`.
    pub fn half(&self) -> i64 {
        (self.n as i64) * (self.n as i64)
    }

    pub fn min_index(&self) -> i64 {
        -self.half()
    }

    pub fn max_index(&self) -> i64 {
        self.half() - 1
    }

    pub fn contains_index(&self, j: i64) -> bool {
        -self.half() <= j && j < self.half()
    }

    /// Indices `-n², ..., n²-1` in point order.
    pub fn indices(&self) -> std::ops::Range<i64> {
        -self.half()..self.half()
    }

    /// Array position of index `j`.
    pub fn offset(&self, j: i64) -> usize {
        debug_assert!(self.contains_index(j));
        (j + self.half()) as usize
    }

    /// Index stored at array position `pos`.
    pub fn index_at(&self, pos: usize) -> i64 {
        debug_assert!(pos < self.len());
        pos as i64 - self.half()
    }

    /// The point `j/n`.
    pub fn point<T: Real>(&self, j: i64) -> T {
        T::from_i64(j).unwrap() / T::from_u32(self.n).unwrap()
    }

    /// Cell measure `1/n`.
    pub fn weight<T: Real>(&self) -> T {
        T::from_u32(self.n).unwrap().recip()
    }

    /// Total measure `2n`.
    pub fn total_measure<T: Real>(&self) -> T {
        T::from_u32(2 * self.n).unwrap()
    }

    /// Floor toward -∞ onto the grid: returns the index `j` with
    /// `j/n <= x < (j+1)/n`. Out-of-range `x` (including NaN) is an error;
    /// callers clamp explicitly if they want saturation.
    pub fn floor_project<T: Real>(&self, x: T) -> Result<i64> {
        let n_t = T::from_u32(self.n).unwrap();
        if !(x >= -n_t && x < n_t) {
            return Err(Error::OutOfDomain(x.to_f64().unwrap_or(f64::NAN), self.n));
        }
        let mut j = (x * n_t)
            .floor()
            .to_i64()
            .ok_or(Error::OutOfDomain(x.to_f64().unwrap_or(f64::NAN), self.n))?
            .clamp(self.min_index(), self.max_index());
        // The multiply above can land one cell off at exact cell boundaries;
        // settle against the same j/n arithmetic used by `point`.
        while j < self.max_index() && self.point::<T>(j + 1) <= x {
            j += 1;
        }
        while j > self.min_index() && self.point::<T>(j) > x {
            j -= 1;
        }
        Ok(j)
    }
}

/// Complex values on a [`ScaledGrid`], index `j` holding the value at `j/n`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction<T: Real> {
    grid: ScaledGrid,
    values: Vec<Complex<T>>,
}

impl<T: Real> GridFunction<T> {
    /// Wraps a value vector; the length must equal `grid.len()` and every
    /// entry must be finite.
    pub fn new(grid: ScaledGrid, values: Vec<Complex<T>>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::LengthMismatch {
                got: values.len(),
                want: grid.len(),
            });
        }
        for (pos, v) in values.iter().enumerate() {
            if !(v.re.is_finite() && v.im.is_finite()) {
                let x: f64 = grid.point(grid.index_at(pos));
                return Err(Error::NonFiniteSample(x));
            }
        }
        Ok(GridFunction { grid, values })
    }

    pub(crate) fn from_values_unchecked(grid: ScaledGrid, values: Vec<Complex<T>>) -> Self {
        debug_assert_eq!(values.len(), grid.len());
        GridFunction { grid, values }
    }

    pub fn zero(grid: ScaledGrid) -> Self {
        GridFunction {
            grid,
            values: vec![Complex::zero(); grid.len()],
        }
    }

    /// Samples `f` at every grid point: `values[j] = f(j/n)`. A non-finite
    /// result is reported together with the offending point.
    pub fn sample(grid: ScaledGrid, mut f: impl FnMut(T) -> Complex<T>) -> Result<Self> {
        let mut values = Vec::with_capacity(grid.len());
        for j in grid.indices() {
            let x = grid.point(j);
            let v = f(x);
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(Error::NonFiniteSample(x.to_f64().unwrap_or(f64::NAN)));
            }
            values.push(v);
        }
        Ok(GridFunction { grid, values })
    }

    /// Samples a real-valued function.
    pub fn sample_real(grid: ScaledGrid, mut f: impl FnMut(T) -> T) -> Result<Self> {
        Self::sample(grid, |x| Complex::new(f(x), T::zero()))
    }

    pub fn grid(&self) -> ScaledGrid {
        self.grid
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    /// Value at grid index `j`.
    pub fn value(&self, j: i64) -> Complex<T> {
        self.values[self.grid.offset(j)]
    }

    /// `(index, value)` pairs in point order.
    pub fn enumerate(&self) -> impl Iterator<Item = (i64, Complex<T>)> + '_ {
        self.grid.indices().zip(self.values.iter().copied())
    }

    /// The discrete integral `weight · Σ_j values[j]`.
    pub fn integrate(&self) -> Complex<T> {
        pairwise_sum(&self.values) * self.grid.weight::<T>()
    }

    /// `weight · Σ_j |values[j]|`.
    pub fn l1_norm(&self) -> T {
        let abs: Vec<T> = self.values.iter().map(|v| v.norm()).collect();
        pairwise_sum(&abs) * self.grid.weight::<T>()
    }

    /// Largest absolute value on the grid.
    pub fn max_abs(&self) -> T {
        self.values
            .iter()
            .map(|v| v.norm())
            .fold(T::zero(), |a, b| a.max(b))
    }

    /// Pointwise map onto the same grid.
    pub fn map(&self, mut f: impl FnMut(Complex<T>) -> Complex<T>) -> Self {
        GridFunction {
            grid: self.grid,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Pointwise combination of two functions on the same grid.
    pub fn zip_map(
        &self,
        other: &Self,
        mut f: impl FnMut(Complex<T>, Complex<T>) -> Complex<T>,
    ) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch(self.grid.n, other.grid.n));
        }
        Ok(GridFunction {
            grid: self.grid,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    /// Pointwise product (panics on grid mismatch; use [`Self::zip_map`] to
    /// handle mixed grids as an error).
    pub fn pointwise_mul(&self, other: &Self) -> Self {
        self.zip_map(other, |a, b| a * b).expect("grid mismatch")
    }
}

impl<T: Real> std::ops::Add for &GridFunction<T> {
    type Output = GridFunction<T>;
    fn add(self, rhs: Self) -> GridFunction<T> {
        self.zip_map(rhs, |a, b| a + b).expect("grid mismatch")
    }
}

impl<T: Real> std::ops::Sub for &GridFunction<T> {
    type Output = GridFunction<T>;
    fn sub(self, rhs: Self) -> GridFunction<T> {
        self.zip_map(rhs, |a, b| a - b).expect("grid mismatch")
    }
}

impl<T: Real> std::ops::Mul<Complex<T>> for &GridFunction<T> {
    type Output = GridFunction<T>;
    fn mul(self, rhs: Complex<T>) -> GridFunction<T> {
        self.map(|v| v * rhs)
    }
}
