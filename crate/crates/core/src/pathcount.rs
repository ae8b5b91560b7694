//! Exact shortest-path counting and enumeration.
//!
//! Every family here is a partial cube: graph distance equals Hamming
//! distance. A shortest `u → v` path therefore flips each coordinate where
//! `u` and `v` differ exactly once and never touches the others, so the
//! search space is the Hamming interval between them intersected with the
//! family. Counting walks that interval layer by layer, the layer of `w`
//! being the number of coordinates already flipped.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bitcubes::{member_bits, require_member, CubeFamily, Vertex};
use crate::metrics::{self, CubeGraph, DiametralPair};
use crate::{Error, Result};

pub type BigCount = BigUint;

/// A directed vertex sequence `s_0 → s_1 → … → s_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Path {
    steps: Vec<Vertex>,
}

impl Path {
    pub fn new(steps: Vec<Vertex>) -> Result<Self> {
        let Some(first) = steps.first() else {
            return Err(Error::InvalidPath("a path needs at least one vertex".into()));
        };
        if steps.iter().any(|s| s.len() != first.len()) {
            return Err(Error::InvalidPath("vertices of different lengths".into()));
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Vertex] {
        &self.steps
    }

    pub fn start(&self) -> Vertex {
        self.steps[0]
    }

    pub fn end(&self) -> Vertex {
        *self.steps.last().expect("paths are non-empty")
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn n(&self) -> usize {
        self.start().len()
    }

    /// Coordinate flipped by each step, or `None` if some step is not an edge
    /// of the hypercube.
    pub fn flips(&self) -> Option<Vec<usize>> {
        self.steps
            .windows(2)
            .map(|w| {
                let diff = w[0].bits() ^ w[1].bits();
                (diff.count_ones() == 1).then(|| self.n() - diff.trailing_zeros() as usize)
            })
            .collect()
    }

    /// Checks that this is a shortest path inside `family`: all vertices are
    /// members, each step flips one coordinate, and the flipped coordinates
    /// are exactly the ones where the endpoints differ, each once.
    pub fn validate(&self, family: CubeFamily) -> Result<()> {
        for &s in &self.steps {
            require_member(family, s).map_err(|e| Error::InvalidPath(e.to_string()))?;
        }
        let flips = self
            .flips()
            .ok_or_else(|| Error::InvalidPath("consecutive vertices differ in more than one coordinate".into()))?;
        let mut seen = HashSet::new();
        for &c in &flips {
            if !seen.insert(c) {
                return Err(Error::InvalidPath(format!("coordinate {c} flipped twice")));
            }
        }
        if flips.len() != self.start().hamming(self.end()) {
            return Err(Error::InvalidPath("length exceeds the Hamming distance of its ends".into()));
        }
        Ok(())
    }

    /// Applies the same right cyclic shift to every vertex.
    pub fn rotate_right(&self, k: usize) -> Path {
        Path {
            steps: self.steps.iter().map(|s| s.rotate_right(k)).collect(),
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

fn check_endpoints(family: CubeFamily, u: Vertex, v: Vertex) -> Result<()> {
    if u.len() != v.len() {
        return Err(Error::InvalidArgument(format!(
            "endpoints {u} and {v} have different lengths"
        )));
    }
    require_member(family, u)?;
    require_member(family, v)
}

/// Number of shortest `u → v` paths in the family's induced graph.
pub fn count_shortest_paths(family: CubeFamily, u: Vertex, v: Vertex) -> Result<BigCount> {
    check_endpoints(family, u, v)?;
    let n = u.len();
    let diff = u.bits() ^ v.bits();
    let mut layer: HashMap<u32, BigCount> = HashMap::from([(u.bits(), BigCount::one())]);
    for _ in 0..diff.count_ones() {
        let mut next: HashMap<u32, BigCount> = HashMap::with_capacity(layer.len() * 2);
        for (w, count) in &layer {
            let mut todo = (w ^ v.bits()) & diff;
            while todo != 0 {
                let bit = todo & todo.wrapping_neg();
                todo ^= bit;
                let x = w ^ bit;
                if member_bits(family, x, n) {
                    *next.entry(x).or_default() += count;
                }
            }
        }
        layer = next;
    }
    Ok(layer.remove(&v.bits()).unwrap_or_default())
}

/// Same count, restricted by BFS distances instead of the Hamming interval.
///
/// Does not rely on the partial-cube property; used to cross-check
/// [`count_shortest_paths`].
pub fn count_shortest_paths_bfs(family: CubeFamily, u: Vertex, v: Vertex) -> Result<BigCount> {
    check_endpoints(family, u, v)?;
    let graph = CubeGraph::new(family, u.len())?;
    let (ui, vi) = (graph.index_of(u).unwrap(), graph.index_of(v).unwrap());
    let from_u = graph.bfs(ui);
    let to_v = graph.bfs(vi);
    let d = from_u[vi];
    if d == u32::MAX {
        return Ok(BigCount::zero());
    }
    let mut layers: Vec<Vec<usize>> = vec![Vec::new(); d as usize + 1];
    for w in 0..graph.vertices().len() {
        if from_u[w] != u32::MAX && to_v[w] != u32::MAX && from_u[w] + to_v[w] == d {
            layers[from_u[w] as usize].push(w);
        }
    }
    let mut counts: HashMap<usize, BigCount> = HashMap::from([(ui, BigCount::one())]);
    for layer in layers.iter().skip(1) {
        for &w in layer {
            let total: BigCount = graph
                .neighbor_indices(w)
                .iter()
                .filter(|&&x| from_u[x as usize] + 1 == from_u[w])
                .filter_map(|&x| counts.get(&(x as usize)))
                .sum();
            counts.insert(w, total);
        }
    }
    Ok(counts.remove(&vi).unwrap_or_default())
}

/// Lazily yields every shortest `u → v` path once, ordered
/// lexicographically by the sequence of flipped coordinates.
#[derive(Debug, Clone)]
pub struct ShortestPaths {
    target: Vertex,
    /// Interval members from which `target` is reachable.
    alive: HashSet<u32>,
    path: Vec<Vertex>,
    /// Next coordinate to try at each depth.
    cursor: Vec<usize>,
    trivial: bool,
}

impl Iterator for ShortestPaths {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        if self.trivial {
            self.trivial = false;
            self.cursor.clear();
            return Some(Path {
                steps: self.path.clone(),
            });
        }
        let n = self.target.len();
        while let Some(coord) = self.cursor.last_mut() {
            let cur = *self.path.last().expect("path tracks cursor");
            let remaining = cur.bits() ^ self.target.bits();
            let mut found = None;
            while *coord <= n {
                let c = *coord;
                *coord += 1;
                let mask = Vertex::coord_mask(n, c);
                if remaining & mask != 0 && self.alive.contains(&(cur.bits() ^ mask)) {
                    found = Some(cur.flip(c));
                    break;
                }
            }
            match found {
                None => {
                    self.cursor.pop();
                    self.path.pop();
                }
                Some(next) if next == self.target => {
                    let mut steps = self.path.clone();
                    steps.push(next);
                    return Some(Path { steps });
                }
                Some(next) => {
                    self.path.push(next);
                    self.cursor.push(1);
                }
            }
        }
        None
    }
}

pub fn enumerate_shortest_paths(family: CubeFamily, u: Vertex, v: Vertex) -> Result<ShortestPaths> {
    check_endpoints(family, u, v)?;
    let n = u.len();
    let diff = u.bits() ^ v.bits();
    // Walk back from v toward u inside the interval.
    let mut alive = HashSet::from([v.bits()]);
    let mut frontier = vec![v.bits()];
    while let Some(w) = frontier.pop() {
        let mut todo = (w ^ u.bits()) & diff;
        while todo != 0 {
            let bit = todo & todo.wrapping_neg();
            todo ^= bit;
            let x = w ^ bit;
            if member_bits(family, x, n) && alive.insert(x) {
                frontier.push(x);
            }
        }
    }
    let reachable = alive.contains(&u.bits());
    Ok(ShortestPaths {
        target: v,
        alive,
        path: vec![u],
        cursor: if reachable && u != v { vec![1] } else { Vec::new() },
        trivial: u == v,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCount {
    pub pair: DiametralPair,
    #[serde(serialize_with = "decimal")]
    pub count: BigCount,
}

/// Counts serialize as decimal strings, never as numbers.
pub fn decimal<S: serde::Serializer>(x: &BigCount, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.collect_str(x)
}

/// Every diametral pair of the family at length `n` with its path count.
pub fn count_all_diametral(family: CubeFamily, n: usize) -> Result<Vec<PairCount>> {
    let pairs = metrics::diametral_pairs(family, n)?;
    pairs
        .into_par_iter()
        .map(|pair| {
            count_shortest_paths(family, pair.u, pair.v).map(|count| PairCount { pair, count })
        })
        .collect()
}
