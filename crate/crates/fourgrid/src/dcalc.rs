//! Forward-difference calculus on the grid and its interaction with the
//! transform.
//!
//! The discrete derivative is `g'(j/n) = n(g((j+1)/n) - g(j/n))`, forced to
//! zero at the last point; the shift is `g^sh(j/n) = g((j+1)/n)`, likewise
//! zero at the last point. The three checks below are the fundamental
//! theorem, the product rule (with the shifted factor), and summation by
//! parts; all hold exactly, so the returned residuals are pure rounding.
//!
//! [`boundary_data`] assembles the boundary terms C, D, C', D' produced by
//! summation by parts against the kernel, and the combined error terms
//! `E = φ·D - C` and `F = ψφ·D - ψ·C + φ·D' - C'`. With
//! `ψ(t) = n(exp(πit/n) - 1)` and `φ = conj(ψ)` these satisfy, at every grid
//! frequency t ≠ 0,
//!
//! ```text
//! ψ(t)·ĝ(t)  = ĝ'(t)  + E(t)
//! ψ(t)²·ĝ(t) = ĝ''(t) + F(t)
//! ```
//!
//! where `ĝ'` means the transform of the discrete derivative (never the
//! derivative of the transform). [`DftIdentity`] checks both in multiplied
//! form, avoiding division by small `ψ`.

use crate::dft::{dft, Kernel, Sign};
use crate::grid::{GridFunction, ScaledGrid};
use crate::phase::unit_phase;
use crate::{Error, Real, Result};
use num_complex::Complex;
use num_traits::Zero;

/// A residual together with the magnitude of the quantities that cancelled
/// to produce it. The identity behind a check holds when
/// `value <= tol · max(scale, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual<T> {
    pub value: T,
    pub scale: T,
}

impl<T: Real> Residual<T> {
    pub fn within(&self, tol: T) -> bool {
        self.value <= tol * self.scale.max(T::one())
    }

    /// Residual relative to its scale (floored at 1).
    pub fn relative(&self) -> T {
        self.value / self.scale.max(T::one())
    }
}

/// Forward difference, last point forced to zero.
pub fn derivative<T: Real>(g: &GridFunction<T>) -> GridFunction<T> {
    let grid = g.grid();
    let n = T::from_u32(grid.n()).unwrap();
    let vals = g.values();
    let mut out = Vec::with_capacity(grid.len());
    for pos in 0..grid.len() - 1 {
        out.push((vals[pos + 1] - vals[pos]) * n);
    }
    out.push(Complex::zero());
    GridFunction::from_values_unchecked(grid, out)
}

/// Left shift, last point forced to zero.
pub fn shift<T: Real>(g: &GridFunction<T>) -> GridFunction<T> {
    let grid = g.grid();
    let vals = g.values();
    let mut out = Vec::with_capacity(grid.len());
    out.extend_from_slice(&vals[1..]);
    out.push(Complex::zero());
    GridFunction::from_values_unchecked(grid, out)
}

/// Fundamental theorem: `∫ g' dλ = g((n²-1)/n) - g(-n)`.
pub fn check_ftc<T: Real>(g: &GridFunction<T>) -> Residual<T> {
    let grid = g.grid();
    let dg = derivative(g);
    let integral = dg.integrate();
    let boundary = g.value(grid.max_index()) - g.value(grid.min_index());
    Residual {
        value: (integral - boundary).norm(),
        scale: dg.l1_norm() + boundary.norm(),
    }
}

/// Product rule: `(gh)' = g'·h^sh + g·h'`, checked in max norm.
pub fn check_product_rule<T: Real>(
    g: &GridFunction<T>,
    h: &GridFunction<T>,
) -> Result<Residual<T>> {
    if g.grid() != h.grid() {
        return Err(Error::GridMismatch(g.grid().n(), h.grid().n()));
    }
    let lhs = derivative(&g.pointwise_mul(h));
    let rhs = &derivative(g).pointwise_mul(&shift(h)) + &g.pointwise_mul(&derivative(h));
    let mut value = T::zero();
    let mut scale = T::zero();
    for (l, r) in lhs.values().iter().zip(rhs.values()) {
        value = value.max((l - r).norm());
        scale = scale.max(l.norm() + r.norm());
    }
    Ok(Residual { value, scale })
}

/// Summation by parts:
/// `∫ g'h dλ = -∫ g^sh h' dλ + gh((n²-1)/n) - gh(-n)`.
pub fn check_parts<T: Real>(g: &GridFunction<T>, h: &GridFunction<T>) -> Result<Residual<T>> {
    if g.grid() != h.grid() {
        return Err(Error::GridMismatch(g.grid().n(), h.grid().n()));
    }
    let grid = g.grid();
    let left = derivative(g).pointwise_mul(h).integrate();
    let cross = shift(g).pointwise_mul(&derivative(h)).integrate();
    let gh = g.pointwise_mul(h);
    let boundary = gh.value(grid.max_index()) - gh.value(grid.min_index());
    Ok(Residual {
        value: (left + cross - boundary).norm(),
        scale: left.norm() + cross.norm() + boundary.norm(),
    })
}

/// The symbol factors `ψ(t) = n(exp(πit/n) - 1)` and `φ = conj(ψ)` sampled
/// at every grid frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseFactors<T: Real> {
    pub phi: GridFunction<T>,
    pub psi: GridFunction<T>,
}

/// Builds [`PhaseFactors`] on a grid: `psi(k/n) = n(exp(πi·k/n²) - 1)`.
pub fn phase_factors<T: Real>(grid: ScaledGrid) -> PhaseFactors<T> {
    let n = T::from_u32(grid.n()).unwrap();
    let one = Complex::new(T::one(), T::zero());
    let psi_vals: Vec<Complex<T>> = grid
        .indices()
        .map(|k| (unit_phase::<T>(k, grid.half()) - one) * n)
        .collect();
    let phi_vals: Vec<Complex<T>> = psi_vals.iter().map(|v| v.conj()).collect();
    PhaseFactors {
        phi: GridFunction::from_values_unchecked(grid, phi_vals),
        psi: GridFunction::from_values_unchecked(grid, psi_vals),
    }
}

impl<T: Real> PhaseFactors<T> {
    pub fn grid(&self) -> ScaledGrid {
        self.psi.grid()
    }

    pub fn psi_at(&self, k: i64) -> Complex<T> {
        self.psi.value(k)
    }

    pub fn phi_at(&self, k: i64) -> Complex<T> {
        self.phi.value(k)
    }
}

/// Boundary terms of summation by parts against the kernel, evaluated at
/// every grid frequency. With `x₋ = -n` and `x₊ = (n²-1)/n`:
///
/// ```text
/// C(t)  =  g(x₊)·e(x₊,t) - g(x₋)·e(x₋,t)
/// D(t)  = -(1/n)·g(x₋)·e⁺(1/n,t)·e(x₋,t)
/// C'(t) = -g'(x₋)·e(x₋,t)
/// D'(t) = -(1/n)·g'(x₋)·e⁺(1/n,t)·e(x₋,t)
/// ```
///
/// where `e(x,t) = exp(-πixt)` and `e⁺(x,t) = exp(+πixt)` are the grid
/// kernels, and `E`, `F` combine them with the phase factors.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryData<T: Real> {
    pub c: GridFunction<T>,
    pub d: GridFunction<T>,
    pub cp: GridFunction<T>,
    pub dp: GridFunction<T>,
    pub e: GridFunction<T>,
    pub f: GridFunction<T>,
}

/// Computes the six boundary functions of `g`.
pub fn boundary_data<T: Real>(g: &GridFunction<T>) -> BoundaryData<T> {
    let grid = g.grid();
    let minus = Kernel::new(grid, Sign::Minus);
    let weight = grid.weight::<T>();
    let dg = derivative(g);
    let g_last = g.value(grid.max_index());
    let g_first = g.value(grid.min_index());
    let dg_first = dg.value(grid.min_index());
    let factors = phase_factors::<T>(grid);

    let len = grid.len();
    let mut c = Vec::with_capacity(len);
    let mut d = Vec::with_capacity(len);
    let mut cp = Vec::with_capacity(len);
    let mut dp = Vec::with_capacity(len);
    let mut e = Vec::with_capacity(len);
    let mut f = Vec::with_capacity(len);

    for k in grid.indices() {
        let e_last = minus.eval_indices::<T>(grid.max_index(), k);
        let e_first = minus.eval_indices::<T>(grid.min_index(), k);
        // exp(+πi·t/n) at t = k/n; the exponent 1·k/n² is not a grid pairing
        let e_step = unit_phase::<T>(k, grid.half());
        let ck = g_last * e_last - g_first * e_first;
        let dk = -(g_first * e_step * e_first * weight);
        let cpk = -(dg_first * e_first);
        let dpk = -(dg_first * e_step * e_first * weight);
        let phi = factors.phi_at(k);
        let psi = factors.psi_at(k);
        let ek = phi * dk - ck;
        let fk = psi * phi * dk - psi * ck + phi * dpk - cpk;
        c.push(ck);
        d.push(dk);
        cp.push(cpk);
        dp.push(dpk);
        e.push(ek);
        f.push(fk);
    }

    BoundaryData {
        c: GridFunction::from_values_unchecked(grid, c),
        d: GridFunction::from_values_unchecked(grid, d),
        cp: GridFunction::from_values_unchecked(grid, cp),
        dp: GridFunction::from_values_unchecked(grid, dp),
        e: GridFunction::from_values_unchecked(grid, e),
        f: GridFunction::from_values_unchecked(grid, f),
    }
}

/// Precomputed pieces of the derivative identities for one input function:
/// the transforms of g, g', g'' plus phase factors and boundary terms.
/// Uses the naive transform, which is the oracle of record.
#[derive(Debug, Clone)]
pub struct DftIdentity<T: Real> {
    ghat: GridFunction<T>,
    ghat1: GridFunction<T>,
    ghat2: GridFunction<T>,
    factors: PhaseFactors<T>,
    boundary: BoundaryData<T>,
}

impl<T: Real> DftIdentity<T> {
    pub fn new(g: &GridFunction<T>) -> Self {
        let dg = derivative(g);
        let ddg = derivative(&dg);
        DftIdentity {
            ghat: dft(g),
            ghat1: dft(&dg),
            ghat2: dft(&ddg),
            factors: phase_factors(g.grid()),
            boundary: boundary_data(g),
        }
    }

    pub fn grid(&self) -> ScaledGrid {
        self.ghat.grid()
    }

    /// Residuals of the two identities at frequency index `k ≠ 0`:
    /// `|ψ·ĝ - ĝ' - E|` and `|ψ²·ĝ - ĝ'' - F|`, each with its scale.
    pub fn residuals(&self, k: i64) -> Result<(Residual<T>, Residual<T>)> {
        if k == 0 {
            return Err(Error::ZeroFrequency);
        }
        let psi = self.factors.psi_at(k);
        let ghat = self.ghat.value(k);
        let first = psi * ghat - self.ghat1.value(k) - self.boundary.e.value(k);
        let scale1 =
            (psi * ghat).norm() + self.ghat1.value(k).norm() + self.boundary.e.value(k).norm();
        let second = psi * psi * ghat - self.ghat2.value(k) - self.boundary.f.value(k);
        let scale2 = (psi * psi * ghat).norm()
            + self.ghat2.value(k).norm()
            + self.boundary.f.value(k).norm();
        Ok((
            Residual {
                value: first.norm(),
                scale: scale1,
            },
            Residual {
                value: second.norm(),
                scale: scale2,
            },
        ))
    }

    /// Worst-case residuals over every nonzero grid frequency.
    pub fn max_residuals(&self) -> (Residual<T>, Residual<T>) {
        let mut worst1 = Residual {
            value: T::zero(),
            scale: T::one(),
        };
        let mut worst2 = worst1;
        for k in self.grid().indices() {
            if k == 0 {
                continue;
            }
            let (r1, r2) = self.residuals(k).expect("k != 0");
            if r1.relative() > worst1.relative() {
                worst1 = r1;
            }
            if r2.relative() > worst2.relative() {
                worst2 = r2;
            }
        }
        (worst1, worst2)
    }
}

/// One-shot form of [`DftIdentity::residuals`] at frequency index `k`
/// (the grid point `t = k/n`).
pub fn check_dft_identity<T: Real>(
    g: &GridFunction<T>,
    k: i64,
) -> Result<(Residual<T>, Residual<T>)> {
    DftIdentity::new(g).residuals(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn grid(n: u32) -> ScaledGrid {
        ScaledGrid::new(n).unwrap()
    }

    fn gf(n: u32, vals: &[f64]) -> GridFunction<f64> {
        GridFunction::new(
            grid(n),
            vals.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        )
        .unwrap()
    }

    fn pseudo_random(grid: ScaledGrid, seed: u64) -> GridFunction<f64> {
        let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(12345);
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        GridFunction::sample(grid, |_| c(next(), next())).unwrap()
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(
            derivative(&gf(1, &[2.0, 5.0])).values(),
            &[c(3.0, 0.0), c(0.0, 0.0)]
        );
        let constant = gf(2, &[7.0; 8]);
        assert!(derivative(&constant).max_abs() == 0.0);
        let id = GridFunction::sample_real(grid(2), |x: f64| x).unwrap();
        let d = derivative(&id);
        for j in grid(2).indices() {
            let expected = if j == grid(2).max_index() { 0.0 } else { 1.0 };
            assert!((d.value(j) - c(expected, 0.0)).norm() < 1e-15, "j={j}");
        }
    }

    #[test]
    fn shift_examples() {
        assert_eq!(
            shift(&gf(1, &[2.0, 5.0])).values(),
            &[c(5.0, 0.0), c(0.0, 0.0)]
        );
        assert_eq!(shift(&GridFunction::<f64>::zero(grid(3))).max_abs(), 0.0);
        // δ at 0 shifts to δ at -1/2 on the n=2 grid
        let mut vals = vec![c(0.0, 0.0); 8];
        vals[grid(2).offset(0)] = c(1.0, 0.0);
        let delta = GridFunction::new(grid(2), vals).unwrap();
        let sh = shift(&delta);
        assert_eq!(sh.value(-1), c(1.0, 0.0));
        assert_eq!(sh.value(0), c(0.0, 0.0));
    }

    #[test]
    fn shift_twice_shrinks_support_by_two() {
        let g = pseudo_random(grid(3), 5);
        let sh2 = shift(&shift(&g));
        assert_eq!(sh2.value(grid(3).max_index()), Complex64::ZERO);
        assert_eq!(sh2.value(grid(3).max_index() - 1), Complex64::ZERO);
        assert_eq!(sh2.value(0), g.value(2));
    }

    #[test]
    fn ftc_hand_and_trivial() {
        let r = check_ftc(&gf(1, &[2.0, 5.0]));
        assert_eq!(r.value, 0.0);
        let r = check_ftc(&gf(2, &[3.0; 8]));
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn product_rule_hand() {
        let g = gf(1, &[2.0, 5.0]);
        let h = gf(1, &[1.0, 3.0]);
        // (gh)'(-1) = 13 = g'h^sh + gh' = 3·3 + 2·2
        let lhs = derivative(&g.pointwise_mul(&h));
        assert_eq!(lhs.value(-1), c(13.0, 0.0));
        let r = check_product_rule(&g, &h).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn parts_hand() {
        let g = gf(1, &[2.0, 5.0]);
        let h = gf(1, &[1.0, 3.0]);
        // ∫g'h = 3, ∫g^sh h' = 10, boundary = 13: 3 = -10 + 13
        let gp_h = derivative(&g).pointwise_mul(&h).integrate();
        assert_eq!(gp_h, c(3.0, 0.0));
        let gsh_hp = shift(&g).pointwise_mul(&derivative(&h)).integrate();
        assert_eq!(gsh_hp, c(10.0, 0.0));
        let r = check_parts(&g, &h).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn checks_reject_grid_mismatch() {
        let g = GridFunction::<f64>::zero(grid(2));
        let h = GridFunction::<f64>::zero(grid(3));
        assert!(matches!(
            check_product_rule(&g, &h),
            Err(Error::GridMismatch(2, 3))
        ));
        assert!(matches!(check_parts(&g, &h), Err(Error::GridMismatch(2, 3))));
    }

    #[test]
    fn parts_with_zero_factor() {
        let g = pseudo_random(grid(2), 7);
        let z = GridFunction::<f64>::zero(grid(2));
        assert_eq!(check_parts(&g, &z).unwrap().value, 0.0);
        assert_eq!(check_parts(&z, &g).unwrap().value, 0.0);
    }

    #[test]
    fn phase_factor_values() {
        let pf = phase_factors::<f64>(grid(2));
        assert_eq!(pf.psi_at(0), Complex64::ZERO);
        assert_eq!(pf.phi_at(0), Complex64::ZERO);
        // ψ₂(1) = 2(e^{iπ/2} - 1) = -2 + 2i
        let v = pf.psi_at(2); // t = 1 is index k = 2 on the n=2 grid
        assert!((v - c(-2.0, 2.0)).norm() < 1e-14);
        assert!((v.norm() - 2.0 * 2.0_f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn psi_modulus_and_lower_bound() {
        for n in [1u32, 2, 5, 16, 64] {
            let gr = grid(n);
            let pf = phase_factors::<f64>(gr);
            for k in gr.indices() {
                let t: f64 = gr.point(k);
                let psi = pf.psi_at(k);
                let expected = 2.0 * n as f64 * (PI * t / (2.0 * n as f64)).sin().abs();
                assert!((psi.norm() - expected).abs() <= 1e-12 * (1.0 + expected));
                assert!(psi.norm() >= 2.0 * t.abs() - 1e-12, "n={n} t={t}");
                assert_eq!(pf.phi_at(k), psi.conj());
            }
        }
    }

    #[test]
    fn boundary_data_zero_function() {
        let bd = boundary_data(&GridFunction::<f64>::zero(grid(3)));
        for f in [&bd.c, &bd.d, &bd.cp, &bd.dp, &bd.e, &bd.f] {
            assert_eq!(f.max_abs(), 0.0);
        }
    }

    #[test]
    fn boundary_data_hand_values() {
        let bd = boundary_data(&gf(1, &[2.0, 5.0]));
        assert_eq!(bd.c.value(0), c(3.0, 0.0));
        assert_eq!(bd.d.value(0), c(-2.0, 0.0));
        assert_eq!(bd.e.value(0), c(-3.0, 0.0));
    }

    #[test]
    fn d_term_bounded_by_first_value() {
        for n in [1u32, 2, 4, 8] {
            let g = pseudo_random(grid(n), n as u64 + 17);
            let bd = boundary_data(&g);
            let cap = g.value(grid(n).min_index()).norm() / n as f64;
            for k in grid(n).indices() {
                assert!(bd.d.value(k).norm() <= cap * (1.0 + 1e-12));
            }
        }
    }

    #[test]
    fn boundary_combinations_match_definitions() {
        let g = pseudo_random(grid(4), 21);
        let bd = boundary_data(&g);
        let pf = phase_factors::<f64>(grid(4));
        for k in grid(4).indices() {
            let e = pf.phi_at(k) * bd.d.value(k) - bd.c.value(k);
            assert!((bd.e.value(k) - e).norm() <= 1e-14 * (1.0 + e.norm()));
            let f = pf.psi_at(k) * pf.phi_at(k) * bd.d.value(k) - pf.psi_at(k) * bd.c.value(k)
                + pf.phi_at(k) * bd.dp.value(k)
                - bd.cp.value(k);
            assert!((bd.f.value(k) - f).norm() <= 1e-14 * (1.0 + f.norm()));
        }
    }

    #[test]
    fn dft_identity_zero_function() {
        let id = DftIdentity::new(&GridFunction::<f64>::zero(grid(2)));
        for k in grid(2).indices() {
            if k == 0 {
                continue;
            }
            let (r1, r2) = id.residuals(k).unwrap();
            assert_eq!(r1.value, 0.0);
            assert_eq!(r2.value, 0.0);
        }
    }

    #[test]
    fn dft_identity_rejects_zero_frequency() {
        let g = pseudo_random(grid(2), 3);
        assert!(matches!(check_dft_identity(&g, 0), Err(Error::ZeroFrequency)));
    }

    #[test]
    fn dft_identity_random_inputs() {
        for n in [2u32, 4, 8] {
            let g = pseudo_random(grid(n), 100 + n as u64);
            let id = DftIdentity::new(&g);
            let (r1, r2) = id.max_residuals();
            assert!(r1.within(1e-10), "n={n} r1={:e}", r1.relative());
            assert!(r2.within(1e-10), "n={n} r2={:e}", r2.relative());
        }
    }

    #[test]
    fn dft_identity_gaussian_n16() {
        let g = GridFunction::sample_real(grid(16), |x: f64| (-PI * x * x / 2.0).exp()).unwrap();
        let id = DftIdentity::new(&g);
        let (r1, r2) = id.residuals(16).unwrap(); // t = 1
        assert!(r1.within(1e-10), "r1={:e}", r1.relative());
        assert!(r2.within(1e-10), "r2={:e}", r2.relative());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn calculus_lemmas_random(n in 1u32..=8, seed in 0u64..10_000) {
            let gr = grid(n);
            let g = pseudo_random(gr, seed);
            let h = pseudo_random(gr, seed ^ 0xabcdef);
            prop_assert!(check_ftc(&g).within(1e-12));
            prop_assert!(check_product_rule(&g, &h).unwrap().within(1e-12));
            prop_assert!(check_parts(&g, &h).unwrap().within(1e-12));
        }
    }
}
