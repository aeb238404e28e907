//! Finite commutative groups and their characters.
//!
//! Three families are provided: the cyclic group `Z_m` on `{0, ..., m-1}`,
//! the shift group on `{-m, ..., m-1}` (order 2m, addition by iterating the
//! shift map `S(x) = x+1`, `S(m-1) = -m`), and the scaled group on
//! `{j/n : -m <= j < m}` which carries the same addition on integer labels.
//! Character evaluation goes through [`phase::unit_phase`], so pulling a
//! scaled-group character back through the `x ↦ nx` isomorphism reproduces
//! the shift-group character bit for bit.

use crate::phase::{self, unit_phase};
use crate::sum::pairwise_sum;
use crate::{Error, Real, Result};
use num_complex::Complex;

/// A finite commutative group from one of the three supported families.
///
/// Elements are canonical integer labels: `0..m` for [`FiniteGroup::CyclicZ`],
/// `-m..m` for the other two (the scaled group's label `j` stands for the
/// rational point `j/n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiniteGroup {
    /// Integers mod `m`; order `m`.
    CyclicZ { m: u32 },
    /// `{-m, ..., m-1}` with shift-map addition; order `2m`.
    ShiftG { m: u32 },
    /// `{j/n : -m <= j < m}` with shift-map addition on labels; order `2m`.
    ScaledG { m: u32, n: u32 },
}

impl FiniteGroup {
    pub fn cyclic(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyGroup);
        }
        Ok(FiniteGroup::CyclicZ { m })
    }

    pub fn shift(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyGroup);
        }
        Ok(FiniteGroup::ShiftG { m })
    }

    pub fn scaled(m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::EmptyGroup);
        }
        Ok(FiniteGroup::ScaledG { m, n })
    }

    pub fn order(&self) -> usize {
        match *self {
            FiniteGroup::CyclicZ { m } => m as usize,
            FiniteGroup::ShiftG { m } | FiniteGroup::ScaledG { m, .. } => 2 * m as usize,
        }
    }

    /// Canonical element labels in enumeration order.
    pub fn labels(&self) -> std::ops::Range<i64> {
        match *self {
            FiniteGroup::CyclicZ { m } => 0..m as i64,
            FiniteGroup::ShiftG { m } | FiniteGroup::ScaledG { m, .. } => {
                -(m as i64)..m as i64
            }
        }
    }

    pub fn contains(&self, label: i64) -> bool {
        self.labels().contains(&label)
    }

    /// Array position of a label.
    pub fn offset(&self, label: i64) -> usize {
        debug_assert!(self.contains(label));
        match *self {
            FiniteGroup::CyclicZ { .. } => label as usize,
            FiniteGroup::ShiftG { m } | FiniteGroup::ScaledG { m, .. } => {
                (label + m as i64) as usize
            }
        }
    }

    /// Label stored at array position `pos`.
    pub fn label_at(&self, pos: usize) -> i64 {
        debug_assert!(pos < self.order());
        match *self {
            FiniteGroup::CyclicZ { .. } => pos as i64,
            FiniteGroup::ShiftG { m } | FiniteGroup::ScaledG { m, .. } => pos as i64 - m as i64,
        }
    }

    /// Group addition on labels. For the shift families this is
    /// `S^a(b)` with wraparound `m-1 → -m`, i.e. addition mod `2m` recentred
    /// onto `[-m, m)`.
    pub fn add(&self, a: i64, b: i64) -> i64 {
        debug_assert!(self.contains(a) && self.contains(b));
        match *self {
            FiniteGroup::CyclicZ { m } => (a + b).rem_euclid(m as i64),
            FiniteGroup::ShiftG { m } | FiniteGroup::ScaledG { m, .. } => {
                let m = m as i64;
                (a + b + m).rem_euclid(2 * m) - m
            }
        }
    }

    pub fn neg(&self, a: i64) -> i64 {
        match *self {
            FiniteGroup::CyclicZ { m } => (-a).rem_euclid(m as i64),
            FiniteGroup::ShiftG { m } | FiniteGroup::ScaledG { m, .. } => {
                let m = m as i64;
                (-a + m).rem_euclid(2 * m) - m
            }
        }
    }

    /// Real coordinate of an element (`j/n` for the scaled group, the label
    /// itself otherwise).
    pub fn element_value<T: Real>(&self, label: i64) -> T {
        match *self {
            FiniteGroup::ScaledG { n, .. } => {
                T::from_i64(label).unwrap() / T::from_u32(n).unwrap()
            }
            _ => T::from_i64(label).unwrap(),
        }
    }

    /// The character labelled by group element `y`.
    pub fn character(&self, label: i64) -> Character {
        debug_assert!(self.contains(label));
        Character {
            group: *self,
            label,
        }
    }

    /// All characters, indexed by label; exactly `order()` of them.
    pub fn characters(&self) -> Vec<Character> {
        self.labels().map(|y| self.character(y)).collect()
    }

    /// Exhaustive check of closure, associativity, identity, and inverses.
    /// O(order³); intended for orders up to a few dozen.
    pub fn check_axioms(&self) -> bool {
        let labels: Vec<i64> = self.labels().collect();
        for &a in &labels {
            if !self.contains(self.add(a, 0)) || self.add(a, 0) != a || self.add(0, a) != a {
                return false;
            }
            if self.add(a, self.neg(a)) != 0 {
                return false;
            }
            for &b in &labels {
                let ab = self.add(a, b);
                if !self.contains(ab) || ab != self.add(b, a) {
                    return false;
                }
                for &c in &labels {
                    if self.add(ab, c) != self.add(a, self.add(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// A character `γ_y`, one per group element `y` (the dual group is labelled
/// by group elements).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Character {
    group: FiniteGroup,
    label: i64,
}

impl Character {
    pub fn group(&self) -> FiniteGroup {
        self.group
    }

    pub fn label(&self) -> i64 {
        self.label
    }

    /// The exact phase exponent: `eval(x) = exp(iπ·num/den)` with `num`
    /// already reduced into `(-den, den]`.
    ///
    /// - `Z_m`:        `exp(2πi·kx/m)`        →  `(2kx, m)`
    /// - shift group:  `exp(πi·xy/m)`          →  `(xy, m)`
    /// - scaled group: `exp(πi·n²·(j/n)(k/n)/m) = exp(πi·jk/m)` → `(jk, m)`
    pub fn phase_exponent(&self, x: i64) -> (i64, i64) {
        debug_assert!(self.group.contains(x));
        let (num, den) = match self.group {
            FiniteGroup::CyclicZ { m } => (2 * self.label * x, m as i64),
            FiniteGroup::ShiftG { m } | FiniteGroup::ScaledG { m, .. } => {
                (self.label * x, m as i64)
            }
        };
        (phase::reduce(num, den), den)
    }

    /// Character value at element `x`.
    pub fn eval<T: Real>(&self, x: i64) -> Complex<T> {
        let (num, den) = self.phase_exponent(x);
        unit_phase(num, den)
    }

    /// Values at every element, in enumeration order.
    pub fn table<T: Real>(&self) -> Vec<Complex<T>> {
        self.group.labels().map(|x| self.eval(x)).collect()
    }
}

/// `<g, h> = (1/order) Σ_x g(x)·conj(h(x))`, the inner product against the
/// probability measure on the group.
pub fn inner_product<T: Real>(
    group: FiniteGroup,
    g: &[Complex<T>],
    h: &[Complex<T>],
) -> Result<Complex<T>> {
    if g.len() != group.order() || h.len() != group.order() {
        return Err(Error::LengthMismatch {
            got: g.len().min(h.len()),
            want: group.order(),
        });
    }
    let terms: Vec<Complex<T>> = g.iter().zip(h).map(|(&a, &b)| a * b.conj()).collect();
    Ok(pairwise_sum(&terms) / T::from_usize(group.order()).unwrap())
}

/// `ĝ(γ_y) = <g, γ_y>` for every character label `y`, in enumeration order.
pub fn char_transform<T: Real>(group: FiniteGroup, g: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
    if g.len() != group.order() {
        return Err(Error::LengthMismatch {
            got: g.len(),
            want: group.order(),
        });
    }
    let mut out = Vec::with_capacity(group.order());
    for y in group.labels() {
        let gamma = group.character(y).table::<T>();
        out.push(inner_product(group, g, &gamma)?);
    }
    Ok(out)
}

/// Inversion on the character basis: `g(x) = Σ_y ĝ(γ_y)·γ_y(x)`.
pub fn char_invert<T: Real>(group: FiniteGroup, ghat: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
    if ghat.len() != group.order() {
        return Err(Error::LengthMismatch {
            got: ghat.len(),
            want: group.order(),
        });
    }
    let mut out = Vec::with_capacity(group.order());
    for x in group.labels() {
        let terms: Vec<Complex<T>> = group
            .labels()
            .zip(ghat)
            .map(|(y, &c)| c * group.character(y).eval::<T>(x))
            .collect();
        out.push(pairwise_sum(&terms));
    }
    Ok(out)
}

/// A bijective homomorphism between two of the supported groups, acting on
/// labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupIso {
    pub domain: FiniteGroup,
    pub codomain: FiniteGroup,
    kind: IsoKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum IsoKind {
    /// `x ↦ (x + 2m) mod 2m` from the shift group onto `Z_2m`.
    ShiftToCyclic,
    /// `j/n ↦ j`, i.e. `x ↦ nx`, from the scaled group onto the shift group.
    ScaledToShift,
}

impl GroupIso {
    pub fn map(&self, label: i64) -> i64 {
        debug_assert!(self.domain.contains(label));
        match self.kind {
            IsoKind::ShiftToCyclic => {
                let two_m = self.codomain.order() as i64;
                (label + two_m).rem_euclid(two_m)
            }
            IsoKind::ScaledToShift => label,
        }
    }

    /// Exhaustive homomorphism check, O(order²).
    pub fn is_homomorphism(&self) -> bool {
        for a in self.domain.labels() {
            for b in self.domain.labels() {
                if self.map(self.domain.add(a, b))
                    != self.codomain.add(self.map(a), self.map(b))
                {
                    return false;
                }
            }
        }
        true
    }

    /// Exhaustive bijectivity check.
    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.codomain.order()];
        for a in self.domain.labels() {
            let img = self.map(a);
            if !self.codomain.contains(img) {
                return false;
            }
            let pos = self.codomain.offset(img);
            if seen[pos] {
                return false;
            }
            seen[pos] = true;
        }
        seen.into_iter().all(|s| s)
    }
}

/// The pair `(φ, ψ)`: `φ` maps the shift group of order 2m onto `Z_2m` via
/// `x ↦ (x + 2m) mod 2m`, and `ψ` maps the scaled group `{j/n}` onto the
/// shift group via `x ↦ nx`. For orders up to 64 both maps are verified
/// exhaustively on construction.
pub fn group_isomorphisms(m: u32, n: u32) -> Result<(GroupIso, GroupIso)> {
    let scaled = FiniteGroup::scaled(m, n)?;
    let shift = FiniteGroup::shift(m)?;
    let cyclic = FiniteGroup::cyclic(2 * m)?;
    let phi = GroupIso {
        domain: shift,
        codomain: cyclic,
        kind: IsoKind::ShiftToCyclic,
    };
    let psi = GroupIso {
        domain: scaled,
        codomain: shift,
        kind: IsoKind::ScaledToShift,
    };
    if shift.order() <= 64 {
        assert!(phi.is_homomorphism() && phi.is_bijective());
        assert!(psi.is_homomorphism() && psi.is_bijective());
    }
    Ok((phi, psi))
}
