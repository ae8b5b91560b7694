//! Distances, diameter and diametrically opposite pairs.
//!
//! Searches run BFS from every vertex. The closed forms in
//! [`expected_diametral_pairs`] build the same pairs without any search, so
//! the two can be compared directly.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitcubes::{generate_vertices, member_bits, require_member, CubeFamily, Vertex};
use crate::{Error, Result};

const UNREACHED: u32 = u32::MAX;

/// A family at a fixed length with its adjacency lists materialized.
#[derive(Debug, Clone)]
pub struct CubeGraph {
    family: CubeFamily,
    n: usize,
    vertices: Vec<Vertex>,
    adjacency: Vec<Vec<u32>>,
}

impl CubeGraph {
    pub fn new(family: CubeFamily, n: usize) -> Result<Self> {
        let vertices = generate_vertices(family, n)?;
        let index_of = |bits: u32| {
            vertices
                .binary_search_by_key(&bits, |v| v.bits())
                .expect("flip of a member that passes the predicate is generated") as u32
        };
        let adjacency = vertices
            .iter()
            .map(|v| {
                (0..n)
                    .map(|pos| v.bits() ^ (1 << pos))
                    .filter(|&b| member_bits(family, b, n))
                    .map(index_of)
                    .collect()
            })
            .collect();
        Ok(Self {
            family,
            n,
            vertices,
            adjacency,
        })
    }

    pub fn family(&self) -> CubeFamily {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        if v.len() != self.n {
            return None;
        }
        self.vertices.binary_search(&v).ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Distances from vertex index `src`, indexed like [`CubeGraph::vertices`].
    pub fn bfs(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHED; self.vertices.len()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src as u32);
        while let Some(x) = queue.pop_front() {
            let d = dist[x as usize] + 1;
            for &y in &self.adjacency[x as usize] {
                if dist[y as usize] == UNREACHED {
                    dist[y as usize] = d;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub(crate) fn neighbor_indices(&self, idx: usize) -> &[u32] {
        &self.adjacency[idx]
    }

    /// Per source: eccentricity and the later-indexed vertices realizing it.
    fn eccentricities(&self) -> Vec<(u32, Vec<u32>)> {
        (0..self.vertices.len())
            .into_par_iter()
            .map(|s| {
                let dist = self.bfs(s);
                let ecc = dist.iter().copied().filter(|&d| d != UNREACHED).max().unwrap_or(0);
                let far = (s..dist.len())
                    .filter(|&t| dist[t] == ecc)
                    .map(|t| t as u32)
                    .collect();
                (ecc, far)
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMap {
    pub source: Vertex,
    pub dist: BTreeMap<Vertex, usize>,
}

impl DistanceMap {
    pub fn get(&self, v: Vertex) -> Option<usize> {
        self.dist.get(&v).copied()
    }
}

/// A pair at distance equal to the diameter, smaller bitmask first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DiametralPair {
    pub u: Vertex,
    pub v: Vertex,
    pub distance: usize,
}

impl DiametralPair {
    pub fn new(a: Vertex, b: Vertex, distance: usize) -> Self {
        let (u, v) = if a <= b { (a, b) } else { (b, a) };
        Self { u, v, distance }
    }
}

impl fmt::Display for DiametralPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.u, self.v)
    }
}

pub fn bfs_distances(family: CubeFamily, n: usize, source: Vertex) -> Result<DistanceMap> {
    family.check_len(n)?;
    if source.len() != n {
        return Err(Error::InvalidArgument(format!(
            "source {source} has length {}, expected {n}",
            source.len()
        )));
    }
    require_member(family, source)?;
    let graph = CubeGraph::new(family, n)?;
    let src = graph.index_of(source).expect("member is generated");
    let dist = graph
        .bfs(src)
        .into_iter()
        .zip(graph.vertices())
        .filter(|(d, _)| *d != UNREACHED)
        .map(|(d, &v)| (v, d as usize))
        .collect();
    Ok(DistanceMap { source, dist })
}

pub fn diameter(family: CubeFamily, n: usize) -> Result<usize> {
    let graph = CubeGraph::new(family, n)?;
    Ok(graph
        .eccentricities()
        .iter()
        .map(|(e, _)| *e as usize)
        .max()
        .unwrap_or(0))
}

/// Every unordered pair at distance equal to the diameter, found by search.
///
/// A one-vertex graph has diameter 0 and the single pair `(x, x)`.
pub fn diametral_pairs(family: CubeFamily, n: usize) -> Result<Vec<DiametralPair>> {
    let graph = CubeGraph::new(family, n)?;
    Ok(pairs_of(&graph))
}

pub(crate) fn pairs_of(graph: &CubeGraph) -> Vec<DiametralPair> {
    let ecc = graph.eccentricities();
    let diam = ecc.iter().map(|(e, _)| *e).max().unwrap_or(0);
    let mut pairs: Vec<DiametralPair> = ecc
        .iter()
        .enumerate()
        .filter(|(_, (e, _))| *e == diam)
        .flat_map(|(s, (_, far))| {
            far.iter().map(move |&t| {
                DiametralPair::new(graph.vertices[s], graph.vertices[t as usize], diam as usize)
            })
        })
        .collect();
    pairs.sort();
    pairs
}

fn repeat(unit: &str, times: usize) -> String {
    unit.repeat(times)
}

fn vx(s: String) -> Vertex {
    s.parse().expect("closed-form strings are binary")
}

/// The unique diametral pair of `Γ_n`, oriented `u → v`.
pub fn fibonacci_pair(n: usize) -> Result<(Vertex, Vertex)> {
    CubeFamily::Fibonacci.check_len(n)?;
    let half = n / 2;
    Ok(if n.is_multiple_of(2) {
        (vx(repeat("01", half)), vx(repeat("10", half)))
    } else {
        (vx(repeat("01", half) + "0"), vx(repeat("10", half) + "1"))
    })
}

/// Lucas diametral pair number `shift` (1-based), oriented `u → v`.
///
/// For even `n` only `shift = 1` exists: `(01)^{n/2}`, `(10)^{n/2}`. For odd
/// `n` pair `i` is the right cyclic shift by `i - 1` of
/// `0(01)^{(n-1)/2}`, `0(10)^{(n-1)/2}`.
pub fn lucas_pair(n: usize, shift: usize) -> Result<(Vertex, Vertex)> {
    CubeFamily::Lucas.check_len(n)?;
    let half = n / 2;
    if n.is_multiple_of(2) {
        if shift != 1 {
            return Err(Error::InvalidArgument(format!(
                "even Lucas cube has a single diametral pair, got shift {shift}"
            )));
        }
        return Ok((vx(repeat("01", half)), vx(repeat("10", half))));
    }
    if !(1..=n).contains(&shift) {
        return Err(Error::InvalidArgument(format!("shift {shift} not in 1..={n}")));
    }
    let u1 = vx(format!("0{}", repeat("01", half)));
    let v1 = vx(format!("0{}", repeat("10", half)));
    Ok((u1.rotate_right(shift - 1), v1.rotate_right(shift - 1)))
}

/// The four kinds of diametral pair in the Alternate Lucas cube, by the
/// three trailing coordinates of `u` and `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AlucasKind {
    /// `u` ends `001`, `v` ends `010`.
    I,
    /// `u` ends `010`, `v` ends `001`.
    II,
    /// `u` ends `100`, `v` ends `001`.
    III,
    /// `u` ends `100`, `v` ends `010`.
    IV,
}

impl AlucasKind {
    pub const ALL: [AlucasKind; 4] = [AlucasKind::I, AlucasKind::II, AlucasKind::III, AlucasKind::IV];

    fn tails(self) -> (&'static str, &'static str) {
        match self {
            AlucasKind::I => ("001", "010"),
            AlucasKind::II => ("010", "001"),
            AlucasKind::III => ("100", "001"),
            AlucasKind::IV => ("100", "010"),
        }
    }

    /// The coordinate (of `n`) that both endpoints hold at 0.
    pub fn frozen_coord(self, n: usize) -> usize {
        match self {
            AlucasKind::I | AlucasKind::II => n - 2,
            AlucasKind::III => n - 1,
            AlucasKind::IV => n,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlucasKind::I => "i",
            AlucasKind::II => "ii",
            AlucasKind::III => "iii",
            AlucasKind::IV => "iv",
        }
    }

    /// Identifies the kind of an oriented pair, if it is one of the four.
    pub fn of_pair(u: Vertex, v: Vertex) -> Option<AlucasKind> {
        let n = u.len();
        if n < 4 || v.len() != n {
            return None;
        }
        AlucasKind::ALL
            .into_iter()
            .find(|&k| alternate_lucas_pair(n, k).ok() == Some((u, v)))
    }
}

impl fmt::Display for AlucasKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlucasKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "i" | "1" => Ok(AlucasKind::I),
            "ii" | "2" => Ok(AlucasKind::II),
            "iii" | "3" => Ok(AlucasKind::III),
            "iv" | "4" => Ok(AlucasKind::IV),
            _ => Err(Error::InvalidArgument(format!("unknown pair kind {s:?}"))),
        }
    }
}

/// Alternate Lucas pair of the given kind, oriented `u → v`.
///
/// With `n = 2k + 3 + s`, `s ∈ {0, 1}`: `u = 0^s (10)^k t_u`,
/// `v = 1^s (01)^k t_v`, where `t_u`, `t_v` are the kind's tails.
pub fn alternate_lucas_pair(n: usize, kind: AlucasKind) -> Result<(Vertex, Vertex)> {
    if !(4..=crate::bitcubes::MAX_LEN).contains(&n) {
        return Err(Error::InvalidLength {
            family: CubeFamily::AlternateLucas,
            n,
            supported: format!("4..={} for the diametral pair forms", crate::bitcubes::MAX_LEN),
        });
    }
    let s = (n - 3) % 2;
    let k = (n - 3 - s) / 2;
    let (tu, tv) = kind.tails();
    let u = vx(format!("{}{}{tu}", "0".repeat(s), repeat("10", k)));
    let v = vx(format!("{}{}{tv}", "1".repeat(s), repeat("01", k)));
    Ok((u, v))
}

/// Diametral pairs built from the closed forms, canonically oriented and
/// sorted; comparable with [`diametral_pairs`].
pub fn expected_diametral_pairs(family: CubeFamily, n: usize) -> Result<Vec<DiametralPair>> {
    let mut pairs = match family {
        CubeFamily::Hypercube => {
            return Err(Error::InvalidArgument(
                "no closed-form pair list for the hypercube".into(),
            ))
        }
        CubeFamily::Fibonacci => {
            let (u, v) = fibonacci_pair(n)?;
            vec![DiametralPair::new(u, v, n)]
        }
        CubeFamily::Lucas => {
            CubeFamily::Lucas.check_len(n)?;
            if n.is_multiple_of(2) {
                let (u, v) = lucas_pair(n, 1)?;
                vec![DiametralPair::new(u, v, n)]
            } else {
                (1..=n)
                    .map(|i| lucas_pair(n, i).map(|(u, v)| DiametralPair::new(u, v, n - 1)))
                    .collect::<Result<_>>()?
            }
        }
        CubeFamily::AlternateLucas => AlucasKind::ALL
            .into_iter()
            .map(|k| alternate_lucas_pair(n, k).map(|(u, v)| DiametralPair::new(u, v, n - 1)))
            .collect::<Result<_>>()?,
    };
    pairs.sort();
    pairs.dedup();
    Ok(pairs)
}

/// Diameter predicted by the closed forms.
pub fn expected_diameter(family: CubeFamily, n: usize) -> Result<usize> {
    family.check_len(n)?;
    Ok(match family {
        CubeFamily::Hypercube | CubeFamily::Fibonacci => n,
        CubeFamily::Lucas if n.is_multiple_of(2) => n,
        CubeFamily::Lucas | CubeFamily::AlternateLucas => n - 1,
    })
}
