//! Decay constants and the quantitative tail machinery they feed.
//!
//! For a rapidly decreasing `g` the constants are `B = sup|g|`,
//! `D₁ = sup|x·g(x)|`, `C₂ = sup|x²·g(x)|` and `M = ‖g''‖_{L¹}`. Out of
//! these, `W = 16·D₁ + M + 2·B` bounds `|ĝ''(t) + F(t)| = |ψ(t)²·ĝ(t)|`
//! uniformly in `n ≥ 2` and `t` (the two summands are bounded by `16·D₁`
//! and `M + 2B` respectively). Combined with `|ψ(t)|² ≥ 4t²` this puts
//! `|ĝ(t)| ≤ W/(4t²)` on the discrete spectrum, so the spectrum's tail mass
//! beyond `L` is below `ε` once `min(n, L) > N(ε) = W/(2ε) + 1`.
//!
//! The constants are *valid* bounds, not sharp ones: suprema come from a
//! dense scan plus golden-section refinement, `M` from adaptive quadrature.

use crate::catalog::SchwartzFunction;
use crate::grid::GridFunction;
use crate::quadrature;
use crate::sum::pairwise_sum;
use crate::{Error, Real, Result};

/// Decay constants of one catalog function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayConstants {
    /// `sup |g|`.
    pub b: f64,
    /// `sup |x·g(x)|`.
    pub d1: f64,
    /// `sup |x²·g(x)|`.
    pub c2: f64,
    /// `‖g''‖_{L¹}`.
    pub m: f64,
}

/// Default search domain half-width for the suprema scan.
pub const DEFAULT_SEARCH_RADIUS: f64 = 16.0;
/// Default scan step.
pub const DEFAULT_SEARCH_STEP: f64 = 1e-3;
/// Absolute tolerance for the `M` quadrature.
const M_QUAD_TOL: f64 = 1e-9;

fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    const INV_PHI: f64 = 0.618033988749894848;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..90 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    fc.max(fd)
}

fn supremum(f: impl Fn(f64) -> f64 + Copy, radius: f64, step: f64) -> f64 {
    let count = (radius / step).ceil() as i64;
    let mut best_x = 0.0;
    let mut best = f(0.0);
    for i in -count..=count {
        let x = i as f64 * step;
        let v = f(x);
        if v > best {
            best = v;
            best_x = x;
        }
    }
    best.max(golden_max(
        f,
        (best_x - step).max(-radius),
        (best_x + step).min(radius),
    ))
}

/// Numerically maximizes `|g|`, `|x·g|`, `|x²·g|` over `[-radius, radius]`
/// (dense scan at `step`, then golden-section refinement) and integrates
/// `|g''|` adaptively.
pub fn decay_constants(
    f: &SchwartzFunction,
    radius: f64,
    step: f64,
) -> Result<DecayConstants> {
    assert!(radius > 0.0 && step > 0.0 && step < radius);
    let b = supremum(|x| f.eval(x).abs(), radius, step);
    let d1 = supremum(|x| (x * f.eval(x)).abs(), radius, step);
    let c2 = supremum(|x| (x * x * f.eval(x)).abs(), radius, step);
    let (m, _) = quadrature::integrate_real(|x| f.d2(x).abs(), -radius, radius, M_QUAD_TOL)?;
    Ok(DecayConstants { b, d1, c2, m })
}

/// [`decay_constants`] with the default domain and step.
pub fn decay_constants_default(f: &SchwartzFunction) -> Result<DecayConstants> {
    decay_constants(f, DEFAULT_SEARCH_RADIUS, DEFAULT_SEARCH_STEP)
}

/// `W = 16·D₁ + M + 2·B`, valid for `n ≥ 2`.
pub fn uniform_bound_w(dc: DecayConstants) -> f64 {
    16.0 * dc.d1 + dc.m + 2.0 * dc.b
}

/// The tail threshold `N(ε) = W/(2ε) + 1`.
pub fn tail_threshold(epsilon: f64, w: f64) -> Result<f64> {
    if epsilon <= 0.0 {
        return Err(Error::NonPositiveEpsilon(epsilon));
    }
    Ok(w / (2.0 * epsilon) + 1.0)
}

/// Mass of `|g|` over the grid points in the lattice interval between `l`
/// and `lp`: `(1/n)·Σ_{t ∈ [min, max)} |g(t)|`. Both endpoints must sit on
/// one side of zero with `|l| <= |lp|`; `lp` may equal the grid's right
/// edge `n`.
pub fn tail_mass<T: Real>(g: &GridFunction<T>, l: T, lp: T) -> Result<T> {
    let grid = g.grid();
    let lf = l.to_f64().unwrap_or(f64::NAN);
    let lpf = lp.to_f64().unwrap_or(f64::NAN);
    if !(lf * lpf > 0.0 || (lf == 0.0 && lpf == 0.0)) || lf.abs() > lpf.abs() {
        return Err(Error::InvalidTailRange(lf, lpf));
    }
    let lo = l.min(lp);
    let hi = l.max(lp);
    let n_t = T::from_u32(grid.n()).unwrap();
    let lo_idx = grid.floor_project(lo)?;
    let hi_idx = if hi >= n_t {
        grid.half()
    } else {
        grid.floor_project(hi)?
    };
    let terms: Vec<T> = (lo_idx..hi_idx)
        .map(|j| g.value(j).norm())
        .collect();
    Ok(pairwise_sum(&terms) * grid.weight())
}

/// Measured exterior mass of the discretization
/// `(1/n)(Σ_{|j| ≥ Nn+1} |g(j/n)| + |g(N)|)` against the bound `3·C₂/N`.
/// Returns `(measured, bound)`.
pub fn ext_tail_bound(f: &SchwartzFunction, n: u32, n_cut: u32) -> (f64, f64) {
    assert!(n >= 1 && n_cut >= 1);
    let nn = n as i64;
    let start = n_cut as i64 * nn + 1;
    // catalog members decay at least like a Gaussian; 64 units past the cut
    // everything underflows
    let stop = (n_cut as i64 + 64) * nn;
    let terms: Vec<f64> = (start..=stop)
        .map(|j| {
            let x = j as f64 / n as f64;
            f.eval(x).abs() + f.eval(-x).abs()
        })
        .collect();
    debug_assert!(terms.last().is_none_or(|&t| t == 0.0));
    let measured = (pairwise_sum(&terms) + f.eval(n_cut as f64).abs()) / n as f64;
    let bound = 3.0 * f.decay().c2 / n_cut as f64;
    (measured, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog_list, find};
    use crate::dft::dft_fast;
    use crate::grid::{GridFunction, ScaledGrid};
    use crate::{dcalc, dft};
    use std::f64::consts::PI;

    #[test]
    fn gaussian_constants_match_calculus() {
        let dc = find("gaussian").unwrap().decay();
        assert!((dc.b - 1.0).abs() <= 1e-9, "B={}", dc.b);
        // argmax of x·e^{-πx²/2} is 1/√π
        let d1_exact = (1.0 / PI.sqrt()) * (-0.5f64).exp();
        assert!((dc.d1 - d1_exact).abs() <= 1e-9, "D1={}", dc.d1);
        // argmax of x²·e^{-πx²/2} is √(2/π)
        let c2_exact = (2.0 / PI) * (-1.0f64).exp();
        assert!((dc.c2 - c2_exact).abs() <= 1e-9, "C2={}", dc.c2);
        // ∫|g''| telescopes to 4·|g'(1/√π)| = 4·√π·e^{-1/2}
        let m_exact = 4.0 * PI.sqrt() * (-0.5f64).exp();
        assert!((dc.m - m_exact).abs() <= 1e-7, "M={}", dc.m);
    }

    #[test]
    fn zero_function_constants() {
        let dc = find("zero").unwrap().decay();
        assert_eq!((dc.b, dc.d1, dc.c2, dc.m), (0.0, 0.0, 0.0, 0.0));
        assert_eq!(uniform_bound_w(dc), 0.0);
    }

    #[test]
    fn w_formula() {
        let dc = DecayConstants {
            b: 1.0,
            d1: 0.25,
            c2: 0.5,
            m: 3.0,
        };
        assert_eq!(uniform_bound_w(dc), 16.0 * 0.25 + 3.0 + 2.0);
    }

    #[test]
    fn gaussian_uniform_bound_holds_empirically() {
        // max over grid t of |ĝ''(t) + F(t)| = |ψ(t)²·ĝ(t)| stays under W
        let f = find("gaussian").unwrap();
        let w = uniform_bound_w(f.decay());
        for n in [2u32, 4, 8, 16] {
            let grid = ScaledGrid::new(n).unwrap();
            let g = f.sample(grid).unwrap();
            let ghat = dft::dft(&g);
            let pf = dcalc::phase_factors::<f64>(grid);
            for k in grid.indices() {
                let v = (pf.psi_at(k) * pf.psi_at(k) * ghat.value(k)).norm();
                assert!(v <= w, "n={n} k={k}: {v} > W={w}");
            }
        }
    }

    #[test]
    fn tail_threshold_examples() {
        assert_eq!(tail_threshold(0.5, 1.0).unwrap(), 2.0);
        assert_eq!(tail_threshold(0.1, 8.0).unwrap(), 41.0);
        assert!(tail_threshold(0.1, 8.0).unwrap() < tail_threshold(0.05, 8.0).unwrap());
        assert!(matches!(
            tail_threshold(0.0, 1.0),
            Err(Error::NonPositiveEpsilon(_))
        ));
    }

    #[test]
    fn tail_mass_counts_cells() {
        let grid = ScaledGrid::new(2).unwrap();
        let ones = GridFunction::sample(grid, |_| num_complex::Complex64::new(1.0, 0.0)).unwrap();
        // [1, 2) holds the points 1 and 3/2, each of mass 1/2
        assert_eq!(tail_mass(&ones, 1.0, 2.0).unwrap(), 1.0);
        let z = GridFunction::<f64>::zero(grid);
        assert_eq!(tail_mass(&z, 1.0, 2.0).unwrap(), 0.0);
    }

    #[test]
    fn tail_mass_negative_side() {
        let grid = ScaledGrid::new(2).unwrap();
        let ones = GridFunction::sample(grid, |_| num_complex::Complex64::new(1.0, 0.0)).unwrap();
        // [-2, -1) holds -2 and -3/2
        assert_eq!(tail_mass(&ones, -1.0, -2.0).unwrap(), 1.0);
    }

    #[test]
    fn tail_mass_rejects_bad_ranges() {
        let grid = ScaledGrid::new(2).unwrap();
        let z = GridFunction::<f64>::zero(grid);
        assert!(matches!(
            tail_mass(&z, -1.0, 2.0),
            Err(Error::InvalidTailRange(..))
        ));
        assert!(matches!(
            tail_mass(&z, 2.0, 1.0),
            Err(Error::InvalidTailRange(..))
        ));
    }

    #[test]
    fn gaussian_tail_mass_below_epsilon() {
        let f = find("gaussian").unwrap();
        let w = uniform_bound_w(f.decay());
        let eps = 0.1;
        let thr = tail_threshold(eps, w).unwrap();
        let n = 64u32;
        assert!((n as f64) > thr);
        let grid = ScaledGrid::new(n).unwrap();
        let ghat = dft_fast(&f.sample(grid).unwrap());
        let l = thr.floor() + 1.0;
        let mass = tail_mass(&ghat, l, n as f64).unwrap();
        assert!(mass < eps, "mass={mass}");
    }

    #[test]
    fn spectrum_tail_bound_w_over_4t2() {
        for f in catalog_list() {
            let w = uniform_bound_w(f.decay());
            for n in [4u32, 8, 16] {
                let grid = ScaledGrid::new(n).unwrap();
                let ghat = dft::dft(&f.sample(grid).unwrap());
                for k in grid.indices() {
                    let t: f64 = grid.point(k);
                    if t.abs() >= 1.0 {
                        let v = ghat.value(k).norm();
                        assert!(
                            v <= w / (4.0 * t * t),
                            "{} n={n} t={t}: {v} > {}",
                            f.name(),
                            w / (4.0 * t * t)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn ext_tail_examples() {
        let z = find("zero").unwrap();
        assert_eq!(ext_tail_bound(&z, 4, 2), (0.0, 0.0));

        let f = find("gaussian").unwrap();
        for (n, n_cut) in [(4u32, 2u32), (4, 4), (8, 2), (8, 8)] {
            let (measured, bound) = ext_tail_bound(&f, n, n_cut);
            assert!(measured <= bound, "n={n} N={n_cut}: {measured} > {bound}");
        }
        // the bound halves when N doubles
        let (_, b2) = ext_tail_bound(&f, 4, 2);
        let (_, b4) = ext_tail_bound(&f, 4, 4);
        assert!((b2 - 2.0 * b4).abs() <= 1e-15);
    }
}
