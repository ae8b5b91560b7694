//! The four cube families as vertex predicates over bitstrings.
//!
//! `Q_n` has every length-`n` string. The Fibonacci cube `Γ_n` keeps the
//! strings without two consecutive 1s; the Lucas cube `Λ_n` additionally
//! forbids `b_1 = b_n = 1`, and the Alternate Lucas cube additionally forbids
//! `b_{n-2} = b_n = 1`. Every family is an induced subgraph of `Q_n`: two
//! members are adjacent exactly when they differ in one coordinate.

mod decomposition;
mod vertex;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use decomposition::{fundamental_decomposition, Decomposition, LabeledPart};
pub use vertex::{Vertex, MAX_LEN};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CubeFamily {
    Hypercube,
    Fibonacci,
    Lucas,
    AlternateLucas,
}

impl CubeFamily {
    pub const ALL: [CubeFamily; 4] = [
        CubeFamily::Hypercube,
        CubeFamily::Fibonacci,
        CubeFamily::Lucas,
        CubeFamily::AlternateLucas,
    ];

    /// Smallest string length for which the family is defined.
    pub fn min_len(self) -> usize {
        match self {
            CubeFamily::Hypercube | CubeFamily::Fibonacci => 0,
            CubeFamily::Lucas => 1,
            CubeFamily::AlternateLucas => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CubeFamily::Hypercube => "hypercube",
            CubeFamily::Fibonacci => "fibonacci",
            CubeFamily::Lucas => "lucas",
            CubeFamily::AlternateLucas => "alternatelucas",
        }
    }

    pub fn check_len(self, n: usize) -> Result<()> {
        if n < self.min_len() || n > MAX_LEN {
            return Err(Error::InvalidLength {
                family: self,
                n,
                supported: format!("{}..={MAX_LEN}", self.min_len()),
            });
        }
        Ok(())
    }

    /// Pairs of coordinates that may not both be 1, as seen from `coord`.
    ///
    /// Turning `coord` on along a path requires every returned coordinate to
    /// be 0 at that moment.
    pub fn conflicts(self, n: usize, coord: usize) -> Vec<usize> {
        let mut out = Vec::new();
        if self == CubeFamily::Hypercube {
            return out;
        }
        if coord > 1 {
            out.push(coord - 1);
        }
        if coord < n {
            out.push(coord + 1);
        }
        let extra = match self {
            CubeFamily::Lucas if n >= 3 => Some((1, n)),
            CubeFamily::AlternateLucas if n >= 3 => Some((n - 2, n)),
            _ => None,
        };
        if let Some((a, b)) = extra {
            if coord == a {
                out.push(b);
            } else if coord == b {
                out.push(a);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl fmt::Display for CubeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CubeFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hypercube" | "q" => Ok(CubeFamily::Hypercube),
            "fibonacci" | "fib" => Ok(CubeFamily::Fibonacci),
            "lucas" => Ok(CubeFamily::Lucas),
            "alternatelucas" | "alternate-lucas" | "alucas" => Ok(CubeFamily::AlternateLucas),
            _ => Err(Error::InvalidArgument(format!("unknown cube family {s:?}"))),
        }
    }
}

/// Membership predicate on a raw bitmask of length `n`, with no range checks.
pub(crate) fn member_bits(family: CubeFamily, bits: u32, n: usize) -> bool {
    if family == CubeFamily::Hypercube {
        return true;
    }
    if bits & (bits >> 1) != 0 {
        return false;
    }
    match family {
        CubeFamily::Lucas => {
            let first = 1u32 << (n - 1);
            bits & first == 0 || bits & 1 == 0
        }
        CubeFamily::AlternateLucas => bits & 0b101 != 0b101,
        _ => true,
    }
}

pub fn is_member(family: CubeFamily, v: Vertex) -> Result<bool> {
    family.check_len(v.len())?;
    Ok(member_bits(family, v.bits(), v.len()))
}

pub(crate) fn require_member(family: CubeFamily, v: Vertex) -> Result<()> {
    if is_member(family, v)? {
        Ok(())
    } else {
        Err(Error::InvalidVertex {
            family,
            vertex: v.to_string(),
        })
    }
}

/// All members of length `n` in ascending bitmask order.
///
/// The list is materialized; beyond `n ≈ 24` the Fibonacci families get
/// large and the hypercube is hopeless long before that.
pub fn generate_vertices(family: CubeFamily, n: usize) -> Result<Vec<Vertex>> {
    family.check_len(n)?;
    let bits: Vec<u32> = match family {
        CubeFamily::Hypercube => {
            let count = 1u64 << n;
            (0..count).map(|b| b as u32).collect()
        }
        _ => {
            let mut out = Vec::new();
            fibonacci_strings(n, 0, 0, false, &mut out);
            out.retain(|&b| member_bits(family, b, n));
            out
        }
    };
    Ok(bits.into_iter().map(|b| Vertex::from_raw(b, n)).collect())
}

// Depth-first, 0 before 1, from b_1: yields ascending order.
fn fibonacci_strings(n: usize, depth: usize, acc: u32, prev_one: bool, out: &mut Vec<u32>) {
    if depth == n {
        out.push(acc);
        return;
    }
    fibonacci_strings(n, depth + 1, acc << 1, false, out);
    if !prev_one {
        fibonacci_strings(n, depth + 1, (acc << 1) | 1, true, out);
    }
}

/// Members at Hamming distance 1 from `v`, ascending.
pub fn neighbors(family: CubeFamily, v: Vertex) -> Result<Vec<Vertex>> {
    require_member(family, v)?;
    let n = v.len();
    let mut out: Vec<Vertex> = (0..n)
        .map(|pos| v.bits() ^ (1 << pos))
        .filter(|&b| member_bits(family, b, n))
        .map(|b| Vertex::from_raw(b, n))
        .collect();
    out.sort();
    Ok(out)
}
