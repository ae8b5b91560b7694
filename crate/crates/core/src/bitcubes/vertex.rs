use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Largest supported string length; a vertex must fit one `u32`.
pub const MAX_LEN: usize = 32;

/// A binary string `b_1 b_2 ... b_n` stored as a bitmask.
///
/// Coordinate `b_1` is the most significant of the `n` used bits, so the
/// bitmask order of same-length vertices is the lexicographic order of their
/// strings. Coordinates are addressed 1-based, `1..=n`, left to right.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    len: u8,
    bits: u32,
}

impl Vertex {
    pub fn new(bits: u32, len: usize) -> Result<Self> {
        if len > MAX_LEN {
            return Err(Error::InvalidArgument(format!(
                "vertex length {len} exceeds {MAX_LEN}"
            )));
        }
        if bits & !low_mask(len) != 0 {
            return Err(Error::InvalidArgument(format!(
                "bitmask {bits:#b} has bits beyond length {len}"
            )));
        }
        Ok(Self {
            len: len as u8,
            bits,
        })
    }

    /// Caller guarantees `len <= 32` and no stray high bits.
    pub(crate) fn from_raw(bits: u32, len: usize) -> Self {
        debug_assert!(len <= MAX_LEN && bits & !low_mask(len) == 0);
        Self {
            len: len as u8,
            bits,
        }
    }

    /// The all-zero string of length `len`.
    pub fn zeros(len: usize) -> Result<Self> {
        Self::new(0, len)
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    /// Bitmask selecting coordinate `coord` (1-based).
    pub(crate) fn coord_mask(len: usize, coord: usize) -> u32 {
        debug_assert!((1..=len).contains(&coord));
        1u32 << (len - coord)
    }

    /// Value of coordinate `b_coord`.
    ///
    /// # Panics
    ///
    /// If `coord` is not in `1..=len`.
    pub fn bit(self, coord: usize) -> bool {
        assert!((1..=self.len()).contains(&coord), "coordinate {coord} out of range");
        self.bits & Self::coord_mask(self.len(), coord) != 0
    }

    /// Flips coordinate `b_coord`.
    ///
    /// # Panics
    ///
    /// If `coord` is not in `1..=len`.
    pub fn flip(self, coord: usize) -> Self {
        assert!((1..=self.len()).contains(&coord), "coordinate {coord} out of range");
        Self::from_raw(self.bits ^ Self::coord_mask(self.len(), coord), self.len())
    }

    pub fn hamming(self, other: Vertex) -> usize {
        debug_assert_eq!(self.len, other.len);
        (self.bits ^ other.bits).count_ones() as usize
    }

    /// Coordinates (ascending) where `self` and `other` differ.
    pub fn differing_coords(self, other: Vertex) -> Vec<usize> {
        debug_assert_eq!(self.len, other.len);
        (1..=self.len())
            .filter(|&c| self.bit(c) != other.bit(c))
            .collect()
    }

    pub fn complement(self) -> Self {
        Self::from_raw(!self.bits & low_mask(self.len()), self.len())
    }

    /// Right cyclic shift of the string by `k` places: `b_n` moves to the front.
    pub fn rotate_right(self, k: usize) -> Self {
        let n = self.len();
        if n == 0 {
            return self;
        }
        let k = k % n;
        if k == 0 {
            return self;
        }
        let bits = (self.bits >> k) | (self.bits << (n - k));
        Self::from_raw(bits & low_mask(n), n)
    }

    /// Drops coordinate `coord`, giving a string of length `len - 1`.
    pub fn remove_coord(self, coord: usize) -> Self {
        let n = self.len();
        assert!((1..=n).contains(&coord), "coordinate {coord} out of range");
        let pos = n - coord;
        let low = self.bits & low_mask(pos);
        let high = self.bits >> (pos + 1);
        Self::from_raw((high << pos) | low, n - 1)
    }
}

pub(crate) fn low_mask(len: usize) -> u32 {
    if len >= 32 {
        u32::MAX
    } else {
        (1u32 << len) - 1
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in 1..=self.len() {
            f.write_str(if self.bit(c) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vertex({self})")
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() > MAX_LEN {
            return Err(Error::VertexParse(s.to_string()));
        }
        let mut bits = 0u32;
        for ch in s.chars() {
            bits <<= 1;
            match ch {
                '0' => {}
                '1' => bits |= 1,
                _ => return Err(Error::VertexParse(s.to_string())),
            }
        }
        Ok(Self::from_raw(bits, s.len()))
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
