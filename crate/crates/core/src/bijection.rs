//! Diametral paths as permutations.
//!
//! Write a shortest path `u = s_0 → … → s_d = v` as a table, one row per
//! step and one column per coordinate. Every coordinate where `u` and `v`
//! differ flips exactly once; marking, in each column, the row at which it
//! reaches its final value gives a map from columns to step numbers. For the
//! Fibonacci pair `u = (01)…`, `v = (10)…` the odd columns are marked where
//! they first read 1 and the even columns where they first read 0, and the
//! marks read left to right form an alternating permutation. Conversely the
//! marks determine the table: a column holds its `u` value strictly below
//! its mark and its `v` value from the mark up.
//!
//! A column can only turn on once all of its conflicting neighbours are off,
//! which is what forces the alternation. The Lucas and Alternate Lucas
//! variants reuse the same table and differ only in the extra conflict
//! (cyclic `b_1`/`b_n`, or `b_{n-2}`/`b_n`) and in columns frozen at 0.

use std::fmt::Write as _;

use serde::Serialize;

use crate::bitcubes::{CubeFamily, Vertex};
use crate::euler::{is_alternating, is_circular_alternating, Permutation};
use crate::metrics::{alternate_lucas_pair, fibonacci_pair, lucas_pair, AlucasKind};
use crate::pathcount::Path;
use crate::{Error, Result};

/// Rows `s_0 ..= s_d` of a shortest path with the flip step of each column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepTable {
    rows: Vec<Vertex>,
    /// Per column `b_1 ..= b_n`: the step at which it flips, `None` if it
    /// never does.
    marks: Vec<Option<usize>>,
}

impl StepTable {
    /// Reads the marks off a path. The path must flip each coordinate where
    /// its ends differ exactly once (family membership is not checked here).
    pub fn from_path(path: &Path) -> Result<Self> {
        let flips = path
            .flips()
            .ok_or_else(|| Error::InvalidPath("a step changes more than one coordinate".into()))?;
        let mut marks = vec![None; path.n()];
        for (step, &c) in flips.iter().enumerate() {
            if marks[c - 1].replace(step + 1).is_some() {
                return Err(Error::InvalidPath(format!(
                    "coordinate {c} changes more than once, so the path is not shortest"
                )));
            }
        }
        Ok(Self {
            rows: path.steps().to_vec(),
            marks,
        })
    }

    /// Fills in the table for `u → v` from the column marks.
    ///
    /// Marks must be given exactly for the coordinates where `u` and `v`
    /// differ and must use each step `1..=d` once.
    pub fn from_marks(u: Vertex, v: Vertex, marks: Vec<Option<usize>>) -> Result<Self> {
        let n = u.len();
        if v.len() != n || marks.len() != n {
            return Err(Error::InvalidArgument("marks and endpoints disagree on length".into()));
        }
        let d = u.hamming(v);
        let mut used = vec![false; d + 1];
        for (i, m) in marks.iter().enumerate() {
            let c = i + 1;
            match (*m, u.bit(c) != v.bit(c)) {
                (Some(t), true) if (1..=d).contains(&t) && !used[t] => used[t] = true,
                (None, false) => {}
                _ => {
                    return Err(Error::InvalidPermutation(format!(
                        "column {c} has an invalid mark {m:?}"
                    )))
                }
            }
        }
        let rows = (0..=d)
            .map(|r| {
                let mut bits = u.bits();
                for (i, m) in marks.iter().enumerate() {
                    if matches!(m, Some(t) if *t <= r) {
                        bits ^= Vertex::coord_mask(n, i + 1);
                    }
                }
                Vertex::new(bits, n).expect("same length as u")
            })
            .collect();
        Ok(Self { rows, marks })
    }

    pub fn rows(&self) -> &[Vertex] {
        &self.rows
    }

    pub fn marks(&self) -> &[Option<usize>] {
        &self.marks
    }

    pub fn n(&self) -> usize {
        self.marks.len()
    }

    pub fn to_path(&self) -> Path {
        Path::new(self.rows.clone()).expect("tables have at least one row")
    }

    /// Marks of the flipped columns, left to right.
    pub fn flipped_marks(&self) -> Vec<usize> {
        self.marks.iter().flatten().copied().collect()
    }

    /// Whenever a column turns on at step `t`, each conflicting column that
    /// started at 1 has already been turned off at an earlier step.
    pub fn turn_on_precedence(&self, family: CubeFamily) -> bool {
        let n = self.n();
        let u = self.rows[0];
        (1..=n).all(|c| {
            let Some(t) = self.marks[c - 1] else {
                return true;
            };
            if u.bit(c) {
                return true;
            }
            family
                .conflicts(n, c)
                .into_iter()
                .filter(|&o| u.bit(o))
                .all(|o| matches!(self.marks[o - 1], Some(s) if s < t))
        })
    }

    /// Text layout: header `step b1 .. bn`, then rows from `s_d` down to
    /// `s_0`, marked entries as `[x]`.
    pub fn render(&self) -> String {
        let n = self.n();
        let d = self.rows.len() - 1;
        let label = |r: usize| match r {
            0 if d == 0 => "u=v=s0".to_string(),
            0 => "u=s0".to_string(),
            r if r == d => format!("v=s{r}"),
            r => format!("s{r}"),
        };
        let width = (0..=d).map(|r| label(r).len()).max().unwrap_or(0).max(4);
        let col_width = (1..=n).map(|c| format!("b{c}").len()).max().unwrap_or(2).max(3);
        let mut out = String::new();
        let _ = write!(out, "{:<width$}", "step");
        for c in 1..=n {
            let _ = write!(out, " {:>col_width$}", format!("b{c}"));
        }
        out.push('\n');
        for r in (0..=d).rev() {
            let _ = write!(out, "{:<width$}", label(r));
            for c in 1..=n {
                let bit = if self.rows[r].bit(c) { '1' } else { '0' };
                let cell = if self.marks[c - 1] == Some(r) {
                    format!("[{bit}]")
                } else {
                    format!("{bit} ")
                };
                let _ = write!(out, " {cell:>col_width$}");
            }
            out.truncate(out.trim_end().len());
            out.push('\n');
        }
        out
    }
}

fn require_path(path: &Path, family: CubeFamily, u: Vertex, v: Vertex) -> Result<StepTable> {
    if path.start() != u || path.end() != v {
        return Err(Error::InvalidPath(format!(
            "path runs {} → {}, expected {u} → {v}",
            path.start(),
            path.end()
        )));
    }
    path.validate(family)?;
    StepTable::from_path(path)
}

fn permutation_from_marks(table: &StepTable) -> Permutation {
    Permutation::new(table.flipped_marks()).expect("shortest-path marks are a permutation")
}

/// Step table of a diametral path of `Γ_n`.
pub fn fibonacci_table(path: &Path) -> Result<StepTable> {
    let (u, v) = fibonacci_pair(path.n())?;
    require_path(path, CubeFamily::Fibonacci, u, v)
}

/// Diametral path of `Γ_n` to its alternating permutation of `[n]`.
pub fn path_to_permutation(path: &Path) -> Result<Permutation> {
    let table = fibonacci_table(path)?;
    let sigma = permutation_from_marks(&table);
    if !is_alternating(&sigma) {
        return Err(Error::InvalidPath(format!("marks {sigma} are not alternating")));
    }
    Ok(sigma)
}

/// Alternating permutation of `[n]` to its diametral path of `Γ_n`.
pub fn permutation_to_path(sigma: &Permutation, n: usize) -> Result<Path> {
    if sigma.len() != n {
        return Err(Error::InvalidPermutation(format!(
            "{sigma} has length {}, expected {n}",
            sigma.len()
        )));
    }
    if !is_alternating(sigma) {
        return Err(Error::InvalidPermutation(format!("{sigma} is not alternating")));
    }
    let (u, v) = fibonacci_pair(n)?;
    let marks = sigma.entries().iter().map(|&t| Some(t)).collect();
    let path = StepTable::from_marks(u, v, marks)?.to_path();
    debug_assert!(path.validate(CubeFamily::Fibonacci).is_ok());
    Ok(path)
}

fn require_even(n: usize) -> Result<()> {
    if n % 2 == 1 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "the Lucas pair (01)^(n/2) → (10)^(n/2) needs even n >= 2, got {n}"
        )));
    }
    Ok(())
}

/// Diametral path of `Λ_n` (n even) to a circular alternating permutation.
pub fn lucas_path_to_permutation(path: &Path, n: usize) -> Result<Permutation> {
    require_even(n)?;
    if path.n() != n {
        return Err(Error::InvalidPath(format!("path has length {}, expected {n}", path.n())));
    }
    let (u, v) = lucas_pair(n, 1)?;
    let table = require_path(path, CubeFamily::Lucas, u, v)?;
    let sigma = permutation_from_marks(&table);
    if !is_circular_alternating(&sigma)? {
        return Err(Error::InvalidPath(format!("marks {sigma} are not circular alternating")));
    }
    Ok(sigma)
}

/// Circular alternating permutation of `[n]` (n even) to a diametral path of `Λ_n`.
pub fn lucas_permutation_to_path(sigma: &Permutation) -> Result<Path> {
    let n = sigma.len();
    require_even(n)?;
    if !is_circular_alternating(sigma)? {
        return Err(Error::InvalidPermutation(format!("{sigma} is not circular alternating")));
    }
    let (u, v) = lucas_pair(n, 1)?;
    let marks = sigma.entries().iter().map(|&t| Some(t)).collect();
    let path = StepTable::from_marks(u, v, marks)?.to_path();
    debug_assert!(path.validate(CubeFamily::Lucas).is_ok());
    Ok(path)
}

fn require_odd(n: usize) -> Result<()> {
    if n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("expected odd n, got {n}")));
    }
    Ok(())
}

/// Moves a diametral path of `Λ_n` (n odd) between pair 1 and pair `shift`
/// by right-shifting every vertex cyclically `shift - 1` places.
pub fn lucas_odd_shift_transport(path: &Path, shift: usize) -> Result<Path> {
    let n = path.n();
    require_odd(n)?;
    let (u1, v1) = lucas_pair(n, 1)?;
    let (ui, vi) = lucas_pair(n, shift)?;
    require_path(path, CubeFamily::Lucas, u1, v1)?;
    let moved = path.rotate_right(shift - 1);
    debug_assert_eq!((moved.start(), moved.end()), (ui, vi));
    Ok(moved)
}

/// Inverse of [`lucas_odd_shift_transport`]: a path between pair `shift`
/// back to pair 1.
pub fn lucas_odd_shift_back(path: &Path, shift: usize) -> Result<Path> {
    let n = path.n();
    require_odd(n)?;
    let (ui, vi) = lucas_pair(n, shift)?;
    require_path(path, CubeFamily::Lucas, ui, vi)?;
    Ok(path.rotate_right(n - (shift - 1)))
}

/// Diametral path of `Λ_n` (n odd) to `(shift, σ)`.
///
/// The path is shifted back to pair 1, where `b_1` stays 0 throughout;
/// dropping that column leaves a diametral path of `Γ_{n-1}` and `σ` is its
/// alternating permutation.
pub fn lucas_odd_path_to_permutation(path: &Path) -> Result<(usize, Permutation)> {
    let n = path.n();
    require_odd(n)?;
    let shift = (1..=n)
        .find(|&i| lucas_pair(n, i).ok() == Some((path.start(), path.end())))
        .ok_or_else(|| Error::InvalidPath("endpoints are not a diametral Lucas pair".into()))?;
    let base = lucas_odd_shift_back(path, shift)?;
    let reduced = Path::new(base.steps().iter().map(|s| s.remove_coord(1)).collect())?;
    Ok((shift, path_to_permutation(&reduced)?))
}

pub fn lucas_odd_permutation_to_path(sigma: &Permutation, shift: usize) -> Result<Path> {
    let n = sigma.len() + 1;
    require_odd(n)?;
    lucas_pair(n, shift)?;
    let reduced = permutation_to_path(sigma, n - 1)?;
    let base = Path::new(
        reduced
            .steps()
            .iter()
            .map(|s| Vertex::new(s.bits(), n).expect("n <= 32 checked by lucas_pair"))
            .collect(),
    )?;
    let path = base.rotate_right(shift - 1);
    debug_assert!(path.validate(CubeFamily::Lucas).is_ok());
    Ok(path)
}

/// Permutation encoding of an Alternate Lucas diametral path.
///
/// For kinds (iii)/(iv), `tau` is an alternating permutation of `[n-1]` and
/// `tail` is `None`. For kinds (i)/(ii), `tau` is an alternating permutation
/// of `[n-3]` and `tail` holds the two step numbers of columns `n-1`, `n`,
/// larger first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AlucasCode {
    pub kind: AlucasKind,
    pub tau: Permutation,
    pub tail: Option<(usize, usize)>,
    /// Coordinate held at 0 along every path of this kind.
    pub frozen_coord: usize,
    /// True for odd `n`: steps were read from `v` back to `u` (`t ↦ d + 1 - t`).
    pub reversed: bool,
}

/// Diametral path of the Alternate Lucas cube to its permutation code.
///
/// Marks are read on the `n - 1` flipping columns, the frozen column
/// deleted. For odd `n` the prefix `(10)^k` starts with a column turning
/// off, which makes the marks up–down; reading the steps backwards
/// restores the down–up convention.
pub fn alucas_path_to_permutation(path: &Path, kind: AlucasKind) -> Result<AlucasCode> {
    let n = path.n();
    let (u, v) = alternate_lucas_pair(n, kind)?;
    let table = require_path(path, CubeFamily::AlternateLucas, u, v)?;
    let frozen = kind.frozen_coord(n);
    debug_assert!(table.marks()[frozen - 1].is_none());
    let reversed = n % 2 == 1;
    let d = n - 1;
    let sigma: Vec<usize> = table
        .flipped_marks()
        .into_iter()
        .map(|t| if reversed { d + 1 - t } else { t })
        .collect();
    let code = match kind {
        AlucasKind::III | AlucasKind::IV => AlucasCode {
            kind,
            tau: Permutation::new(sigma)?,
            tail: None,
            frozen_coord: frozen,
            reversed,
        },
        AlucasKind::I | AlucasKind::II => {
            let (prefix, tail) = sigma.split_at(n - 3);
            let (b, c) = (tail[0], tail[1]);
            // b turns on after c turns off (i), or c after b (ii); reversal swaps.
            let b_later = matches!(kind, AlucasKind::I) != reversed;
            if (b > c) != b_later {
                return Err(Error::InvalidPath(format!("tail marks {b}, {c} are out of order")));
            }
            AlucasCode {
                kind,
                tau: Permutation::standardize(prefix)?,
                tail: Some((b.max(c), b.min(c))),
                frozen_coord: frozen,
                reversed,
            }
        }
    };
    if !is_alternating(&code.tau) {
        return Err(Error::InvalidPath(format!("reduced marks {} are not alternating", code.tau)));
    }
    Ok(code)
}

/// Inverse of [`alucas_path_to_permutation`].
pub fn alucas_permutation_to_path(code: &AlucasCode, n: usize) -> Result<Path> {
    let (u, v) = alternate_lucas_pair(n, code.kind)?;
    let frozen = code.kind.frozen_coord(n);
    let reversed = n % 2 == 1;
    if code.frozen_coord != frozen || code.reversed != reversed {
        return Err(Error::InvalidArgument(format!(
            "code metadata does not match kind {} at n = {n}",
            code.kind
        )));
    }
    if !is_alternating(&code.tau) {
        return Err(Error::InvalidPermutation(format!("{} is not alternating", code.tau)));
    }
    let d = n - 1;
    let sigma: Vec<usize> = match (code.kind, code.tail) {
        (AlucasKind::III | AlucasKind::IV, None) => {
            if code.tau.len() != d {
                return Err(Error::InvalidPermutation(format!(
                    "{} should have length {d}",
                    code.tau
                )));
            }
            code.tau.entries().to_vec()
        }
        (AlucasKind::I | AlucasKind::II, Some((hi, lo))) => {
            if code.tau.len() != n - 3 {
                return Err(Error::InvalidPermutation(format!(
                    "{} should have length {}",
                    code.tau,
                    n - 3
                )));
            }
            if !(hi > lo && lo >= 1 && hi <= d) {
                return Err(Error::InvalidPermutation(format!(
                    "tail ({hi}, {lo}) must be decreasing values in 1..={d}"
                )));
            }
            let rest: Vec<usize> = (1..=d).filter(|&x| x != hi && x != lo).collect();
            let mut out: Vec<usize> = code.tau.entries().iter().map(|&r| rest[r - 1]).collect();
            let b_later = matches!(code.kind, AlucasKind::I) != reversed;
            if b_later {
                out.extend([hi, lo]);
            } else {
                out.extend([lo, hi]);
            }
            out
        }
        _ => {
            return Err(Error::InvalidPermutation(format!(
                "kind {} {} a tail pair",
                code.kind,
                if code.tail.is_some() { "does not take" } else { "needs" }
            )))
        }
    };
    let mut steps = sigma.into_iter().map(|t| if reversed { d + 1 - t } else { t });
    let marks: Vec<Option<usize>> = (1..=n)
        .map(|c| if c == frozen { None } else { steps.next() })
        .collect();
    let path = StepTable::from_marks(u, v, marks)?.to_path();
    path.validate(CubeFamily::AlternateLucas)
        .map_err(|e| Error::InvalidPermutation(e.to_string()))?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::enumerate_alternating;
    use crate::pathcount::enumerate_shortest_paths;

    fn v(s: &str) -> Vertex {
        s.parse().unwrap()
    }

    fn path(rows: &[&str]) -> Path {
        Path::new(rows.iter().map(|r| v(r)).collect()).unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    // bottom row first, as the table is read upward
    const EIGHT_STEP: [&str; 9] = [
        "01010101", "01000101", "01000001", "01001001", "00001001", "10001001", "10001000",
        "10101000", "10101010",
    ];

    const SEVEN_STEP: [&str; 8] = [
        "0101010", "0001010", "0001000", "1001000", "1000000", "1000001", "1010001", "1010101",
    ];

    #[test]
    fn eight_step_table_reads_off() {
        let p = path(&EIGHT_STEP);
        assert_eq!(path_to_permutation(&p).unwrap(), perm("5 4 7 1 3 2 8 6"));
        let table = fibonacci_table(&p).unwrap();
        assert!(table.turn_on_precedence(CubeFamily::Fibonacci));
    }

    #[test]
    fn seven_step_table_is_rebuilt() {
        let p = permutation_to_path(&perm("3 1 6 4 7 2 5"), 7).unwrap();
        assert_eq!(p, path(&SEVEN_STEP));
    }

    #[test]
    fn small_cases() {
        assert_eq!(path_to_permutation(&path(&["010", "000", "100", "101"])).unwrap(), perm("2 1 3"));
        assert_eq!(permutation_to_path(&perm("2 1 3"), 3).unwrap(), path(&["010", "000", "100", "101"]));
        assert_eq!(path_to_permutation(&path(&["0", "1"])).unwrap(), perm("1"));
        assert_eq!(permutation_to_path(&perm("1"), 1).unwrap(), path(&["0", "1"]));
        assert_eq!(lucas_path_to_permutation(&path(&["01", "00", "10"]), 2).unwrap(), perm("2 1"));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            permutation_to_path(&perm("1 2 3"), 3),
            Err(Error::InvalidPermutation(_))
        ));
        assert!(permutation_to_path(&perm("2 1 3"), 4).is_err());
        // wrong endpoints
        assert!(path_to_permutation(&path(&["000", "100"])).is_err());
        assert!(lucas_path_to_permutation(&path(&["01", "00", "10"]), 3).is_err());
        assert!(lucas_permutation_to_path(&perm("2 1 3")).is_err());
        assert!(lucas_permutation_to_path(&perm("1 2 4 3")).is_err());
        let p5 = enumerate_shortest_paths(
            CubeFamily::Lucas,
            lucas_pair(5, 1).unwrap().0,
            lucas_pair(5, 1).unwrap().1,
        )
        .unwrap()
        .next()
        .unwrap();
        assert!(lucas_odd_shift_transport(&p5, 0).is_err());
        assert!(lucas_odd_shift_transport(&p5, 6).is_err());
    }

    #[test]
    fn from_marks_rejects_bad_marks() {
        let (u, w) = fibonacci_pair(3).unwrap();
        assert!(StepTable::from_marks(u, w, vec![Some(1), Some(1), Some(3)]).is_err());
        assert!(StepTable::from_marks(u, w, vec![Some(1), None, Some(3)]).is_err());
        assert!(StepTable::from_marks(u, w, vec![Some(1), Some(2), Some(4)]).is_err());
    }

    #[test]
    fn fibonacci_roundtrips() {
        for n in 0..=8 {
            let (a, b) = fibonacci_pair(n).unwrap();
            let mut count = 0;
            for p in enumerate_shortest_paths(CubeFamily::Fibonacci, a, b).unwrap() {
                let sigma = path_to_permutation(&p).unwrap();
                assert!(is_alternating(&sigma));
                assert_eq!(permutation_to_path(&sigma, n).unwrap(), p);
                assert!(fibonacci_table(&p).unwrap().turn_on_precedence(CubeFamily::Fibonacci));
                count += 1;
            }
            let perms: Vec<Permutation> = enumerate_alternating(n).collect();
            assert_eq!(perms.len(), count);
            for sigma in perms {
                let p = permutation_to_path(&sigma, n).unwrap();
                assert_eq!(path_to_permutation(&p).unwrap(), sigma);
            }
        }
    }

    #[test]
    fn lucas_even_roundtrips() {
        for n in (2..=8).step_by(2) {
            let (a, b) = lucas_pair(n, 1).unwrap();
            let mut images = std::collections::HashSet::new();
            for p in enumerate_shortest_paths(CubeFamily::Lucas, a, b).unwrap() {
                let sigma = lucas_path_to_permutation(&p, n).unwrap();
                assert_eq!(lucas_permutation_to_path(&sigma).unwrap(), p);
                assert!(images.insert(sigma));
            }
            let e = crate::euler::euler_numbers(n);
            assert_eq!(images.len() * 2, n * e.get(n - 1).unwrap().to_u64_digits().first().copied().unwrap_or(0) as usize);
        }
    }

    #[test]
    fn lucas_odd_shift_roundtrip() {
        let n = 7;
        let (a, b) = lucas_pair(n, 1).unwrap();
        for p in enumerate_shortest_paths(CubeFamily::Lucas, a, b).unwrap() {
            assert_eq!(lucas_odd_shift_transport(&p, 1).unwrap(), p);
            for i in 1..=n {
                let moved = lucas_odd_shift_transport(&p, i).unwrap();
                moved.validate(CubeFamily::Lucas).unwrap();
                assert_eq!(lucas_odd_shift_back(&moved, i).unwrap(), p);
                let (shift, sigma) = lucas_odd_path_to_permutation(&moved).unwrap();
                assert_eq!(shift, i);
                assert_eq!(lucas_odd_permutation_to_path(&sigma, i).unwrap(), moved);
            }
        }
    }

    #[test]
    fn alucas_four_examples() {
        let (a, b) = alternate_lucas_pair(4, AlucasKind::III).unwrap();
        assert_eq!((a, b), (v("0100"), v("1001")));
        let taus: Vec<Permutation> = enumerate_shortest_paths(CubeFamily::AlternateLucas, a, b)
            .unwrap()
            .map(|p| alucas_path_to_permutation(&p, AlucasKind::III).unwrap().tau)
            .collect();
        assert_eq!(taus.len(), 2);
        let mut sorted = taus.clone();
        sorted.sort();
        assert_eq!(sorted, [perm("2 1 3"), perm("3 1 2")]);

        let (a, b) = alternate_lucas_pair(4, AlucasKind::I).unwrap();
        let codes: Vec<AlucasCode> = enumerate_shortest_paths(CubeFamily::AlternateLucas, a, b)
            .unwrap()
            .map(|p| alucas_path_to_permutation(&p, AlucasKind::I).unwrap())
            .collect();
        let tails: std::collections::BTreeSet<_> = codes.iter().map(|c| c.tail.unwrap()).collect();
        assert_eq!(tails.into_iter().collect::<Vec<_>>(), [(2, 1), (3, 1), (3, 2)]);
        assert!(codes.iter().all(|c| c.tau == perm("1") && c.frozen_coord == 2 && !c.reversed));
    }

    #[test]
    fn alucas_roundtrips() {
        for n in 4..=9 {
            for kind in AlucasKind::ALL {
                let (a, b) = alternate_lucas_pair(n, kind).unwrap();
                let mut codes = std::collections::HashSet::new();
                for p in enumerate_shortest_paths(CubeFamily::AlternateLucas, a, b).unwrap() {
                    let code = alucas_path_to_permutation(&p, kind).unwrap();
                    assert_eq!(alucas_permutation_to_path(&code, n).unwrap(), p, "n={n} {kind}");
                    assert!(StepTable::from_path(&p)
                        .unwrap()
                        .turn_on_precedence(CubeFamily::AlternateLucas));
                    assert!(codes.insert(code));
                }
                assert!(!codes.is_empty());
            }
        }
    }

    #[test]
    fn alucas_code_errors() {
        let code = AlucasCode {
            kind: AlucasKind::I,
            tau: perm("1"),
            tail: None,
            frozen_coord: 2,
            reversed: false,
        };
        assert!(alucas_permutation_to_path(&code, 4).is_err());
        let code = AlucasCode {
            tail: Some((1, 3)),
            ..code
        };
        assert!(alucas_permutation_to_path(&code, 4).is_err());
        let code = AlucasCode {
            kind: AlucasKind::III,
            tau: perm("1 2 3"),
            tail: None,
            frozen_coord: 3,
            reversed: false,
        };
        assert!(alucas_permutation_to_path(&code, 4).is_err());
    }

    #[test]
    fn render_layout() {
        let table = fibonacci_table(&path(&["010", "000", "100", "101"])).unwrap();
        let expected = "\
step  b1  b2  b3
v=s3  1   0  [1]
s2   [1]  0   0
s1    0  [0]  0
u=s0  0   1   0
";
        assert_eq!(table.render(), expected);
    }
}
