//! Rapidly decreasing test functions with analytic derivatives and
//! closed-form transforms under the `e^{-πixt}` convention.
//!
//! Every member is real-valued (a complex member would be carried as a pair
//! of real components and fed through the bound machinery part by part).
//! Derivatives are written out analytically so the second-derivative L¹
//! norms behind the decay bounds are reliable. The continuous transform of
//! record is [`reference_transform`], an adaptive quadrature whose
//! truncation radius comes from the function's own decay constants; when a
//! closed form is known the two must agree and this is asserted on every
//! call.

use crate::bounds::{self, DecayConstants};
use crate::grid::{GridFunction, ScaledGrid};
use crate::quadrature;
use crate::{Complex64, Error, Result};
use std::f64::consts::PI;
use std::sync::OnceLock;

/// A catalog function: evaluator, first and second derivatives, optional
/// closed-form transform, and lazily computed decay constants.
#[derive(Debug, Clone)]
pub struct SchwartzFunction {
    name: &'static str,
    f: fn(f64) -> f64,
    df: fn(f64) -> f64,
    d2f: fn(f64) -> f64,
    transform: Option<fn(f64) -> Complex64>,
    decay: OnceLock<DecayConstants>,
}

impl SchwartzFunction {
    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    pub fn eval_complex(&self, x: f64) -> Complex64 {
        Complex64::new((self.f)(x), 0.0)
    }

    /// First derivative.
    pub fn d1(&self, x: f64) -> f64 {
        (self.df)(x)
    }

    /// Second derivative.
    pub fn d2(&self, x: f64) -> f64 {
        (self.d2f)(x)
    }

    pub fn has_closed_form(&self) -> bool {
        self.transform.is_some()
    }

    /// Closed-form transform `ĝ(t)`, when one is on file.
    pub fn closed_form_transform(&self, t: f64) -> Option<Complex64> {
        self.transform.map(|tf| tf(t))
    }

    /// Decay constants, computed on first use with the default search
    /// settings of [`bounds::decay_constants`].
    pub fn decay(&self) -> DecayConstants {
        *self
            .decay
            .get_or_init(|| bounds::decay_constants_default(self).expect("catalog decay search"))
    }

    /// Samples the function on a grid.
    pub fn sample(&self, grid: ScaledGrid) -> Result<GridFunction<f64>> {
        GridFunction::sample_real(grid, |x| (self.f)(x))
    }
}

fn gaussian(x: f64) -> f64 {
    (-PI * x * x / 2.0).exp()
}
fn gaussian_d1(x: f64) -> f64 {
    -PI * x * gaussian(x)
}
fn gaussian_d2(x: f64) -> f64 {
    PI * (PI * x * x - 1.0) * gaussian(x)
}
fn gaussian_hat(t: f64) -> Complex64 {
    Complex64::new(2.0f64.sqrt() * (-PI * t * t / 2.0).exp(), 0.0)
}

fn gauss1(x: f64) -> f64 {
    (-x * x).exp()
}
fn gauss1_d1(x: f64) -> f64 {
    -2.0 * x * gauss1(x)
}
fn gauss1_d2(x: f64) -> f64 {
    (4.0 * x * x - 2.0) * gauss1(x)
}
fn gauss1_hat(t: f64) -> Complex64 {
    Complex64::new(PI.sqrt() * (-PI * PI * t * t / 4.0).exp(), 0.0)
}

fn gausspi(x: f64) -> f64 {
    (-PI * x * x).exp()
}
fn gausspi_d1(x: f64) -> f64 {
    -2.0 * PI * x * gausspi(x)
}
fn gausspi_d2(x: f64) -> f64 {
    (4.0 * PI * PI * x * x - 2.0 * PI) * gausspi(x)
}
fn gausspi_hat(t: f64) -> Complex64 {
    Complex64::new((-PI * t * t / 4.0).exp(), 0.0)
}

fn hermite1(x: f64) -> f64 {
    x * gaussian(x)
}
fn hermite1_d1(x: f64) -> f64 {
    (1.0 - PI * x * x) * gaussian(x)
}
fn hermite1_d2(x: f64) -> f64 {
    (PI * PI * x * x * x - 3.0 * PI * x) * gaussian(x)
}
fn hermite1_hat(t: f64) -> Complex64 {
    Complex64::new(0.0, -(2.0f64.sqrt()) * t * (-PI * t * t / 2.0).exp())
}

fn xsqgauss(x: f64) -> f64 {
    x * x * gauss1(x)
}
fn xsqgauss_d1(x: f64) -> f64 {
    (2.0 * x - 2.0 * x * x * x) * gauss1(x)
}
fn xsqgauss_d2(x: f64) -> f64 {
    (2.0 - 10.0 * x * x + 4.0 * x * x * x * x) * gauss1(x)
}
fn xsqgauss_hat(t: f64) -> Complex64 {
    Complex64::new(
        PI.sqrt() * (0.5 - PI * PI * t * t / 4.0) * (-PI * PI * t * t / 4.0).exp(),
        0.0,
    )
}

fn zero_fn(_: f64) -> f64 {
    0.0
}
fn zero_hat(_: f64) -> Complex64 {
    Complex64::new(0.0, 0.0)
}

fn member(
    name: &'static str,
    f: fn(f64) -> f64,
    df: fn(f64) -> f64,
    d2f: fn(f64) -> f64,
    transform: fn(f64) -> Complex64,
) -> SchwartzFunction {
    SchwartzFunction {
        name,
        f,
        df,
        d2f,
        transform: Some(transform),
        decay: OnceLock::new(),
    }
}

/// All catalog members:
///
/// | name       | g(x)            | ĝ(t)                                 |
/// |------------|-----------------|--------------------------------------|
/// | `gaussian` | e^{-πx²/2}      | √2·e^{-πt²/2}                        |
/// | `gauss1`   | e^{-x²}         | √π·e^{-π²t²/4}                       |
/// | `gausspi`  | e^{-πx²}        | e^{-πt²/4}                           |
/// | `hermite1` | x·e^{-πx²/2}    | -i√2·t·e^{-πt²/2}                    |
/// | `xsqgauss` | x²·e^{-x²}      | √π·(1/2 - π²t²/4)·e^{-π²t²/4}        |
/// | `zero`     | 0               | 0                                    |
pub fn catalog_list() -> Vec<SchwartzFunction> {
    vec![
        member("gaussian", gaussian, gaussian_d1, gaussian_d2, gaussian_hat),
        member("gauss1", gauss1, gauss1_d1, gauss1_d2, gauss1_hat),
        member("gausspi", gausspi, gausspi_d1, gausspi_d2, gausspi_hat),
        member("hermite1", hermite1, hermite1_d1, hermite1_d2, hermite1_hat),
        member("xsqgauss", xsqgauss, xsqgauss_d1, xsqgauss_d2, xsqgauss_hat),
        member("zero", zero_fn, zero_fn, zero_fn, zero_hat),
    ]
}

/// Looks a member up by name.
pub fn find(name: &str) -> Result<SchwartzFunction> {
    catalog_list()
        .into_iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::UnknownFunction(name.to_string()))
}

/// Truncation radius for integrating |g| down to `tail_budget`: beyond R the
/// mass is at most 2·C2/R.
fn truncation_radius(dc: DecayConstants, tail_budget: f64) -> f64 {
    (4.0 * dc.c2 / tail_budget).clamp(16.0, 1e12)
}

/// The continuous transform `ĝ(t) = ∫ g(x)·e^{-πixt} dx` by adaptive
/// quadrature, absolute error at most `tol`. When the member has a closed
/// form, agreement within `2·tol` is asserted.
pub fn reference_transform(f: &SchwartzFunction, t: f64, tol: f64) -> Result<Complex64> {
    assert!(tol > 0.0, "tolerance must be positive");
    let radius = truncation_radius(f.decay(), tol / 2.0);
    let result = quadrature::integrate(
        |x| f.eval_complex(x) * Complex64::new(0.0, -PI * x * t).exp(),
        -radius,
        radius,
        tol / 2.0,
    )?;
    if let Some(closed) = f.closed_form_transform(t) {
        let dev = (result.value - closed).norm();
        assert!(
            dev <= 2.0 * tol,
            "{}: quadrature transform deviates from closed form by {dev:e} at t={t}",
            f.name
        );
    }
    Ok(result.value)
}

/// L¹ distance between `g` and its left-endpoint discretization
/// `x ↦ g(⌊nx⌋/n)` over `[-n, n)`, plus the exterior mass `∫_{|x|>n} |g|`.
/// First-order in the cell width for smooth `g`.
pub fn l1_discretization_error(f: &SchwartzFunction, n: u32) -> Result<f64> {
    let grid = ScaledGrid::new(n)?;
    let cell_tol = 1e-12;
    let mut total = 0.0;
    for j in grid.indices() {
        let a: f64 = grid.point(j);
        let b: f64 = grid.point::<f64>(j) + grid.weight::<f64>();
        let left = f.eval(a);
        let (cell, _) = quadrature::integrate_real(|x| (f.eval(x) - left).abs(), a, b, cell_tol)?;
        total += cell;
    }
    let radius = truncation_radius(f.decay(), 1e-12).max(n as f64 + 1.0);
    let (upper, _) = quadrature::integrate_real(|x| f.eval(x).abs(), n as f64, radius, 1e-12)?;
    let (lower, _) = quadrature::integrate_real(|x| f.eval(x).abs(), -radius, -(n as f64), 1e-12)?;
    Ok(total + upper + lower)
}
