use std::collections::BTreeSet;

use serde::Serialize;

use super::{generate_vertices, CubeFamily, Vertex};
use crate::{Error, Result};

/// One side of a decomposition: `prefix · X_m · suffix` for a sub-family `X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledPart {
    pub prefix: String,
    pub sub_family: CubeFamily,
    pub sub_len: usize,
    pub suffix: String,
    pub vertices: Vec<Vertex>,
}

impl LabeledPart {
    fn build(prefix: &str, sub_family: CubeFamily, sub_len: usize, suffix: &str) -> Result<Self> {
        let vertices = generate_vertices(sub_family, sub_len)?
            .into_iter()
            .map(|w| format!("{prefix}{w}{suffix}").parse())
            .collect::<Result<Vec<Vertex>>>()?;
        Ok(Self {
            prefix: prefix.to_string(),
            sub_family,
            sub_len,
            suffix: suffix.to_string(),
            vertices,
        })
    }

    /// Label such as `10Γ_{3}0`.
    pub fn label(&self) -> String {
        let sym = match self.sub_family {
            CubeFamily::Hypercube => "Q",
            CubeFamily::Fibonacci => "Γ",
            CubeFamily::Lucas => "Λ",
            CubeFamily::AlternateLucas => "ℒ",
        };
        format!("{}{sym}_{{{}}}{}", self.prefix, self.sub_len, self.suffix)
    }
}

/// Split of a cube by leading bit(s) with a perfect matching from the right
/// part into the left part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub family: CubeFamily,
    pub n: usize,
    pub left: LabeledPart,
    pub right: LabeledPart,
    /// `(right vertex, left vertex)` pairs, in the order of `right.vertices`.
    pub matching: Vec<(Vertex, Vertex)>,
}

impl Decomposition {
    /// Checks the partition and matching invariants against a fresh
    /// enumeration of the family.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidArgument(format!("decomposition: {msg}")));
        let all: BTreeSet<Vertex> = generate_vertices(self.family, self.n)?.into_iter().collect();
        let left: BTreeSet<Vertex> = self.left.vertices.iter().copied().collect();
        let right: BTreeSet<Vertex> = self.right.vertices.iter().copied().collect();
        if left.len() != self.left.vertices.len() || right.len() != self.right.vertices.len() {
            return fail("duplicate vertices".into());
        }
        if !left.is_disjoint(&right) {
            return fail("parts overlap".into());
        }
        if left.union(&right).copied().collect::<BTreeSet<_>>() != all {
            return fail("parts do not cover the vertex set".into());
        }
        if self.matching.len() != right.len() {
            return fail("matching size differs from right part".into());
        }
        let mut matched_right = BTreeSet::new();
        let mut matched_left = BTreeSet::new();
        for &(r, l) in &self.matching {
            if !right.contains(&r) || !left.contains(&l) {
                return fail(format!("edge {r}-{l} leaves its parts"));
            }
            if r.hamming(l) != 1 {
                return fail(format!("edge {r}-{l} is not a cube edge"));
            }
            if !matched_right.insert(r) || !matched_left.insert(l) {
                return fail(format!("edge {r}-{l} reuses an endpoint"));
            }
        }
        Ok(())
    }
}

/// The recursive split of a cube by its leading bit(s).
///
/// | family          | left            | right            | minimum `n` |
/// |-----------------|-----------------|------------------|-------------|
/// | hypercube       | `0Q_{n-1}`      | `1Q_{n-1}`       | 1           |
/// | fibonacci       | `0Γ_{n-1}`      | `10Γ_{n-2}`      | 2           |
/// | lucas           | `0Γ_{n-1}`      | `10Γ_{n-3}0`     | 3           |
/// | alternate lucas | `0ℒ_{n-1}`      | `10ℒ_{n-2}`      | 5           |
///
/// In every case the right part is matched into the left by clearing `b_1`.
pub fn fundamental_decomposition(family: CubeFamily, n: usize) -> Result<Decomposition> {
    use CubeFamily::*;
    let min = match family {
        Hypercube => 1,
        Fibonacci => 2,
        Lucas => 3,
        AlternateLucas => 5,
    };
    if n < min || n > super::MAX_LEN {
        return Err(Error::InvalidLength {
            family,
            n,
            supported: format!("{min}..={} for the decomposition", super::MAX_LEN),
        });
    }
    let (left, right) = match family {
        Hypercube => (
            LabeledPart::build("0", Hypercube, n - 1, "")?,
            LabeledPart::build("1", Hypercube, n - 1, "")?,
        ),
        Fibonacci => (
            LabeledPart::build("0", Fibonacci, n - 1, "")?,
            LabeledPart::build("10", Fibonacci, n - 2, "")?,
        ),
        Lucas => (
            LabeledPart::build("0", Fibonacci, n - 1, "")?,
            LabeledPart::build("10", Fibonacci, n - 3, "0")?,
        ),
        AlternateLucas => (
            LabeledPart::build("0", AlternateLucas, n - 1, "")?,
            LabeledPart::build("10", AlternateLucas, n - 2, "")?,
        ),
    };
    let matching = right.vertices.iter().map(|&r| (r, r.flip(1))).collect();
    Ok(Decomposition {
        family,
        n,
        left,
        right,
        matching,
    })
}
