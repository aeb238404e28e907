//! Exactly reduced roots of unity.
//!
//! Every complex exponential in this crate has the form `exp(iπ·num/den)`
//! with integer `num` and positive integer `den`. Reducing `num` modulo
//! `2·den` in integer arithmetic before touching `sin`/`cos` keeps the
//! argument inside `(-π, π]`, so there is no large-argument trigonometric
//! error and equal phases produce bit-identical complex values.

use crate::Real;
use num_complex::Complex;

/// Reduces `num` modulo `2·den` into the symmetric window `(-den, den]`.
pub fn reduce(num: i64, den: i64) -> i64 {
    debug_assert!(den > 0);
    let mut r = num.rem_euclid(2 * den);
    if r > den {
        r -= 2 * den;
    }
    r
}

/// `exp(iπ·num/den)` with the phase reduced exactly first.
///
/// Quarter and half turns are returned exactly, and the sign of the
/// imaginary part follows the sign of the reduced phase, so conjugate
/// phases give bit-for-bit conjugate values.
pub fn unit_phase<T: Real>(num: i64, den: i64) -> Complex<T> {
    let r = reduce(num, den);
    if r == 0 {
        return Complex::new(T::one(), T::zero());
    }
    if r == den {
        return Complex::new(-T::one(), T::zero());
    }
    if 2 * r.abs() == den {
        let im = if r > 0 { T::one() } else { -T::one() };
        return Complex::new(T::zero(), im);
    }
    let angle = T::PI() * T::from_i64(r.abs()).unwrap() / T::from_i64(den).unwrap();
    let im = if r > 0 { angle.sin() } else { -angle.sin() };
    Complex::new(angle.cos(), im)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_lands_in_symmetric_window() {
        for num in -50..=50 {
            let r = reduce(num, 4);
            assert!(-4 < r && r <= 4);
            assert_eq!((num - r).rem_euclid(8), 0);
        }
    }

    #[test]
    fn quarter_turns_are_exact() {
        assert_eq!(unit_phase::<f64>(1, 2), Complex::new(0.0, 1.0));
        assert_eq!(unit_phase::<f64>(-1, 2), Complex::new(0.0, -1.0));
        assert_eq!(unit_phase::<f64>(1, 1), Complex::new(-1.0, 0.0));
        assert_eq!(unit_phase::<f64>(-3, 3), Complex::new(-1.0, 0.0));
        assert_eq!(unit_phase::<f64>(0, 7), Complex::new(1.0, 0.0));
        assert_eq!(unit_phase::<f64>(6, 4), Complex::new(0.0, -1.0));
    }

    #[test]
    fn conjugate_phases_are_bitwise_conjugate() {
        for num in -60..=60 {
            let p: Complex<f64> = unit_phase(num, 7);
            let m: Complex<f64> = unit_phase(-num, 7);
            assert_eq!(p.re.to_bits(), m.re.to_bits());
            assert!(p.im == -m.im);
        }
    }

    #[test]
    fn equal_phases_are_bit_identical() {
        // 3/4 turn expressed three ways
        let a: Complex<f64> = unit_phase(3, 2);
        let b: Complex<f64> = unit_phase(-1, 2);
        let c: Complex<f64> = unit_phase(7, 2);
        assert_eq!(a, b);
        assert_eq!(b, c);
    }

    #[test]
    fn unit_modulus() {
        for num in -100..100 {
            let z: Complex<f64> = unit_phase(num, 9);
            assert!((z.norm() - 1.0).abs() < 1e-15);
        }
    }
}
