//! Basis blades of the conformal algebra and bitset subspaces.
//!
//! The five basis vectors are ordered `(e0, e1, e2, e3, einf)` and mapped to
//! bits 0..4 of a factor mask. A basis blade is the outer product of the
//! vectors whose bits are set, taken in ascending bit order, and its index is
//! the mask value itself. Index 0 is the scalar, index 31 the pseudoscalar
//! `e0 ^ e1 ^ e2 ^ e3 ^ einf`, and the grade of a blade is its popcount.

use std::fmt;

/// Number of basis blades in the algebra.
pub const BLADE_COUNT: usize = 32;

/// Blade index constants.
pub mod blades {
    pub const SCALAR: u8 = 0;
    pub const E0: u8 = 0b00001;
    pub const E1: u8 = 0b00010;
    pub const E2: u8 = 0b00100;
    pub const E3: u8 = 0b01000;
    pub const EINF: u8 = 0b10000;

    pub const E01: u8 = E0 | E1;
    pub const E02: u8 = E0 | E2;
    pub const E03: u8 = E0 | E3;
    pub const E0INF: u8 = E0 | EINF;
    pub const E12: u8 = E1 | E2;
    pub const E13: u8 = E1 | E3;
    pub const E23: u8 = E2 | E3;
    pub const E1INF: u8 = E1 | EINF;
    pub const E2INF: u8 = E2 | EINF;
    pub const E3INF: u8 = E3 | EINF;

    pub const E012: u8 = E0 | E1 | E2;
    pub const E013: u8 = E0 | E1 | E3;
    pub const E023: u8 = E0 | E2 | E3;
    pub const E01INF: u8 = E0 | E1 | EINF;
    pub const E02INF: u8 = E0 | E2 | EINF;
    pub const E03INF: u8 = E0 | E3 | EINF;
    pub const E123: u8 = E1 | E2 | E3;
    pub const E12INF: u8 = E1 | E2 | EINF;
    pub const E13INF: u8 = E1 | E3 | EINF;
    pub const E23INF: u8 = E2 | E3 | EINF;

    pub const E0123: u8 = E0 | E1 | E2 | E3;
    pub const E012INF: u8 = E0 | E1 | E2 | EINF;
    pub const E013INF: u8 = E0 | E1 | E3 | EINF;
    pub const E023INF: u8 = E0 | E2 | E3 | EINF;
    pub const E123INF: u8 = E1 | E2 | E3 | EINF;

    pub const PSEUDOSCALAR: u8 = 0b11111;
}

/// Grade of a basis blade.
#[inline]
pub const fn grade(blade: u8) -> u32 {
    blade.count_ones()
}

/// Human readable blade name such as `"e12"`, `"e0inf"` or `"1"` for the scalar.
pub fn blade_name(blade: u8) -> String {
    if blade == 0 {
        return "1".to_string();
    }
    let mut name = String::from("e");
    for (bit, label) in ["0", "1", "2", "3", "inf"].iter().enumerate() {
        if blade & (1 << bit) != 0 {
            name.push_str(label);
        }
    }
    name
}

/// Inverse of [`blade_name`]. Accepts `"1"`/`"scalar"` for the scalar blade.
pub fn parse_blade_name(name: &str) -> Option<u8> {
    if name == "1" || name == "scalar" {
        return Some(0);
    }
    let mut rest = name.strip_prefix('e')?;
    if rest.is_empty() {
        return None;
    }
    let mut blade = 0u8;
    let mut last_bit: i32 = -1;
    while !rest.is_empty() {
        let (bit, tail) = if let Some(tail) = rest.strip_prefix("inf") {
            (4, tail)
        } else {
            let c = rest.as_bytes()[0];
            match c {
                b'0'..=b'3' => ((c - b'0') as i32, &rest[1..]),
                _ => return None,
            }
        };
        // factors must be listed in canonical ascending order
        if bit <= last_bit {
            return None;
        }
        last_bit = bit;
        blade |= 1 << bit;
        rest = tail;
    }
    Some(blade)
}

/// Set of basis blades, one bit per blade index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct BladeSet(u32);

impl BladeSet {
    pub const EMPTY: BladeSet = BladeSet(0);
    pub const FULL: BladeSet = BladeSet(u32::MAX);

    #[inline]
    pub const fn from_mask(mask: u32) -> Self {
        BladeSet(mask)
    }

    #[inline]
    pub const fn mask(self) -> u32 {
        self.0
    }

    pub const fn from_blades(blades: &[u8]) -> Self {
        let mut mask = 0u32;
        let mut i = 0;
        while i < blades.len() {
            mask |= 1 << blades[i];
            i += 1;
        }
        BladeSet(mask)
    }

    #[inline]
    pub const fn single(blade: u8) -> Self {
        BladeSet(1 << blade)
    }

    /// All blades of grade `k`.
    pub const fn of_grade(k: u32) -> Self {
        let mut mask = 0u32;
        let mut b = 0u32;
        while b < 32 {
            if b.count_ones() == k {
                mask |= 1 << b;
            }
            b += 1;
        }
        BladeSet(mask)
    }

    /// All blades of even grade.
    pub const fn even() -> Self {
        BladeSet(Self::of_grade(0).0 | Self::of_grade(2).0 | Self::of_grade(4).0)
    }

    #[inline]
    pub const fn contains(self, blade: u8) -> bool {
        self.0 & (1 << blade) != 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        BladeSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        BladeSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        BladeSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Position of `blade` in the ascending coefficient layout, if present.
    #[inline]
    pub const fn position(self, blade: u8) -> Option<usize> {
        if !self.contains(blade) {
            return None;
        }
        let below = if blade == 0 { 0 } else { self.0 & ((1u32 << blade) - 1) };
        Some(below.count_ones() as usize)
    }

    /// Restricts the set to blades of grade `k`.
    pub const fn grade_part(self, k: u32) -> Self {
        self.intersection(Self::of_grade(k))
    }

    /// Blade indices in ascending order.
    pub fn iter(self) -> BladeIter {
        BladeIter(self.0)
    }
}

impl fmt::Debug for BladeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(blade_name)).finish()
    }
}

impl std::ops::BitOr for BladeSet {
    type Output = BladeSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl std::ops::BitAnd for BladeSet {
    type Output = BladeSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl FromIterator<u8> for BladeSet {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        BladeSet(iter.into_iter().fold(0, |m, b| m | (1 << b)))
    }
}

#[derive(Clone, Debug)]
pub struct BladeIter(u32);

impl Iterator for BladeIter {
    type Item = u8;

    #[inline]
    fn next(&mut self) -> Option<u8> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(b as u8)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for BladeIter {}
