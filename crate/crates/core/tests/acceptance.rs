//! Acceptance suite: one PASS/FAIL line per criterion, exact equality only.
//!
//! Runs with `harness = false` so the output stays one line per criterion.
//! Oracles below (zigzag values, membership, BFS, path DFS) are written
//! from scratch here and share no code with the library.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use cubepaths::bijection::{
    alucas_path_to_permutation, alucas_permutation_to_path, lucas_odd_shift_transport,
    lucas_path_to_permutation, lucas_permutation_to_path, path_to_permutation, permutation_to_path,
};
use cubepaths::bitcubes::{fundamental_decomposition, generate_vertices};
use cubepaths::euler::{
    binomial, enumerate_alternating, euler_numbers, euler_via_andre, is_alternating,
    is_circular_alternating,
};
use cubepaths::metrics::{
    alternate_lucas_pair, diametral_pairs, expected_diametral_pairs, fibonacci_pair, lucas_pair,
    AlucasKind, CubeGraph, DiametralPair,
};
use cubepaths::pathcount::{count_shortest_paths, enumerate_shortest_paths};
use cubepaths::{BigCount, CubeFamily, Path, Permutation, Vertex};
use rayon::prelude::*;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

macro_rules! ensure_eq {
    ($left:expr, $right:expr, $($msg:tt)+) => {{
        let (l, r) = (&$left, &$right);
        if l != r {
            return Err(format!("{}: {:?} != {:?}", format!($($msg)+), l, r));
        }
    }};
}

fn ok<T>(r: cubepaths::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Euler (zigzag) numbers E_0..E_12, typed in from the standard table.
const ZIGZAG: [u64; 13] = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765];

fn zigzag(n: usize) -> BigCount {
    BigCount::from(ZIGZAG[n])
}

fn vx(s: &str) -> Vertex {
    s.parse().expect("binary literal")
}

fn path_of(rows: &[&str]) -> Path {
    Path::new(rows.iter().map(|r| vx(r)).collect()).expect("rows share a length")
}

fn perm(s: &str) -> Permutation {
    s.parse().expect("permutation literal")
}

fn factorial(n: usize) -> BigCount {
    (1..=n).map(BigCount::from).product()
}

// ---- independent oracles -------------------------------------------------

fn admits(family: CubeFamily, s: &[u8]) -> bool {
    let n = s.len();
    let one = |i: usize| s[i - 1] == b'1';
    if family == CubeFamily::Hypercube {
        return true;
    }
    if (1..n).any(|i| one(i) && one(i + 1)) {
        return false;
    }
    match family {
        CubeFamily::Lucas => !(n >= 1 && one(1) && one(n)),
        CubeFamily::AlternateLucas => !(n >= 3 && one(n - 2) && one(n)),
        _ => true,
    }
}

/// Vertex strings and adjacency lists, built from the predicate alone.
struct Oracle {
    names: Vec<String>,
    adj: Vec<Vec<usize>>,
}

impl Oracle {
    fn new(family: CubeFamily, n: usize) -> Self {
        let names: Vec<String> = (0..1u32 << n)
            .map(|x| format!("{x:0n$b}"))
            .map(|s| if n == 0 { String::new() } else { s })
            .filter(|s| admits(family, s.as_bytes()))
            .collect();
        let index: HashMap<&str, usize> =
            names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let adj = names
            .iter()
            .map(|s| {
                (0..n)
                    .filter_map(|i| {
                        let mut t = s.clone().into_bytes();
                        t[i] = if t[i] == b'0' { b'1' } else { b'0' };
                        index.get(String::from_utf8(t).unwrap().as_str()).copied()
                    })
                    .collect()
            })
            .collect();
        Oracle { names, adj }
    }

    fn bfs(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.names.len()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// All (unordered) pairs realising the maximum distance.
    fn far_pairs(&self) -> (usize, BTreeSet<(String, String)>) {
        let dists: Vec<Vec<usize>> = (0..self.names.len()).map(|s| self.bfs(s)).collect();
        let diam = dists.iter().flatten().copied().max().unwrap_or(0);
        let mut pairs = BTreeSet::new();
        for (a, row) in dists.iter().enumerate() {
            for (b, &d) in row.iter().enumerate() {
                if d == diam && a <= b {
                    pairs.insert((self.names[a].clone(), self.names[b].clone()));
                }
            }
        }
        (diam, pairs)
    }

    /// Counts walks of length `dist(a, b)` from `a` to `b` by plain recursion.
    fn count_paths(&self, a: usize, b: usize) -> u64 {
        let to_b = self.bfs(b);
        fn walk(o: &Oracle, to_b: &[usize], x: usize, b: usize) -> u64 {
            if x == b {
                return 1;
            }
            o.adj[x]
                .iter()
                .filter(|&&y| to_b[y] + 1 == to_b[x])
                .map(|&y| walk(o, to_b, y, b))
                .sum()
        }
        walk(self, &to_b, a, b)
    }
}

fn pair_strings(p: &DiametralPair) -> (String, String) {
    (p.u.to_string(), p.v.to_string())
}

// ---- criteria -------------------------------------------------------------

fn euler_prefix() -> Outcome {
    let table = euler_numbers(30);
    let prefix: Vec<BigCount> = [1u32, 1, 1, 2, 5, 16, 61].into_iter().map(BigCount::from).collect();
    ensure_eq!(euler_numbers(6).values().to_vec(), prefix, "E_0..E_6");
    for n in 0..ZIGZAG.len() {
        ensure_eq!(table.values()[n], zigzag(n), "E_{n}");
    }
    for m in 0..=30 {
        ensure_eq!(euler_numbers(m).values().to_vec(), euler_via_andre(m), "methods at m={m}");
    }
    Ok(())
}

fn fibonacci_counts() -> Outcome {
    for n in 1..=12usize {
        let searched = ok(diametral_pairs(CubeFamily::Fibonacci, n))?;
        let (u, v) = ok(fibonacci_pair(n))?;
        ensure_eq!(searched, vec![DiametralPair::new(u, v, n)], "pair at n={n}");
        let (a, b): (String, String) = if n % 2 == 0 {
            ("01".repeat(n / 2), "10".repeat(n / 2))
        } else {
            (format!("{}0", "01".repeat(n / 2)), format!("{}1", "10".repeat(n / 2)))
        };
        ensure_eq!((u.to_string(), v.to_string()), (a, b), "closed form at n={n}");
        ensure_eq!(ok(count_shortest_paths(CubeFamily::Fibonacci, u, v))?, zigzag(n), "count at n={n}");
    }
    let first: Vec<BigCount> = (1..=5)
        .map(|n| {
            let (u, v) = fibonacci_pair(n).unwrap();
            count_shortest_paths(CubeFamily::Fibonacci, u, v).unwrap()
        })
        .collect();
    let inspected: Vec<BigCount> = [1u32, 1, 2, 5, 16].into_iter().map(BigCount::from).collect();
    ensure_eq!(first, inspected, "n=1..5");
    Ok(())
}

fn lucas_counts() -> Outcome {
    for n in (2..=12usize).step_by(2) {
        let pairs = ok(diametral_pairs(CubeFamily::Lucas, n))?;
        let (u, v) = ok(lucas_pair(n, 1))?;
        ensure_eq!((u.to_string(), v.to_string()), ("01".repeat(n / 2), "10".repeat(n / 2)), "n={n}");
        ensure_eq!(pairs, vec![DiametralPair::new(u, v, n)], "pairs at n={n}");
        let want = BigCount::from(n / 2) * zigzag(n - 1);
        ensure_eq!(ok(count_shortest_paths(CubeFamily::Lucas, u, v))?, want, "count at n={n}");
    }
    for n in (3..=11usize).step_by(2) {
        let searched = ok(diametral_pairs(CubeFamily::Lucas, n))?;
        ensure_eq!(searched.len(), n, "pair count at n={n}");
        // right cyclic shifts of 0(01)^k / 0(10)^k
        let k = n / 2;
        let (a, b) = (format!("0{}", "01".repeat(k)), format!("0{}", "10".repeat(k)));
        let rot = |s: &str, r: usize| format!("{}{}", &s[n - r..], &s[..n - r]);
        let closed: BTreeSet<DiametralPair> = (0..n)
            .map(|r| DiametralPair::new(vx(&rot(&a, r)), vx(&rot(&b, r)), n - 1))
            .collect();
        ensure_eq!(searched.iter().copied().collect::<BTreeSet<_>>(), closed, "closed form at n={n}");
        for p in &searched {
            ensure_eq!(ok(count_shortest_paths(CubeFamily::Lucas, p.u, p.v))?, zigzag(n - 1), "{p} at n={n}");
        }
        let (u1, v1) = ok(lucas_pair(n, 1))?;
        let base: Vec<Path> = ok(enumerate_shortest_paths(CubeFamily::Lucas, u1, v1))?.collect();
        for shift in 1..=n {
            let moved: HashSet<Path> = base
                .iter()
                .map(|p| ok(lucas_odd_shift_transport(p, shift)))
                .collect::<Result<_, _>>()?;
            ensure_eq!(moved.len(), base.len(), "transport injective at n={n}, shift={shift}");
            let (ui, vi) = ok(lucas_pair(n, shift))?;
            let target: HashSet<Path> = ok(enumerate_shortest_paths(CubeFamily::Lucas, ui, vi))?.collect();
            ensure!(moved == target, "transport image differs at n={n}, shift={shift}");
        }
    }
    Ok(())
}

fn alucas_closed_form(n: usize, kind: AlucasKind) -> (String, String) {
    let s = (n - 3) % 2;
    let k = (n - 3 - s) / 2;
    let (tu, tv) = match kind {
        AlucasKind::I => ("001", "010"),
        AlucasKind::II => ("010", "001"),
        AlucasKind::III => ("100", "001"),
        AlucasKind::IV => ("100", "010"),
    };
    (
        format!("{}{}{tu}", "0".repeat(s), "10".repeat(k)),
        format!("{}{}{tv}", "1".repeat(s), "01".repeat(k)),
    )
}

fn alucas_count(kind: AlucasKind, n: usize) -> BigCount {
    match kind {
        AlucasKind::III | AlucasKind::IV => zigzag(n - 1),
        AlucasKind::I | AlucasKind::II => binomial(n - 1, 2) * zigzag(n - 3),
    }
}

fn alucas_counts() -> Outcome {
    for n in 4..=12usize {
        let searched: BTreeSet<DiametralPair> =
            ok(diametral_pairs(CubeFamily::AlternateLucas, n))?.into_iter().collect();
        ensure_eq!(searched.len(), 4, "pair count at n={n}");
        let mut closed = BTreeSet::new();
        for kind in AlucasKind::ALL {
            let (u, v) = ok(alternate_lucas_pair(n, kind))?;
            ensure_eq!((u.to_string(), v.to_string()), alucas_closed_form(n, kind), "kind {kind} at n={n}");
            closed.insert(DiametralPair::new(u, v, n - 1));
            ensure_eq!(
                ok(count_shortest_paths(CubeFamily::AlternateLucas, u, v))?,
                alucas_count(kind, n),
                "kind {kind} count at n={n}"
            );
        }
        ensure_eq!(searched, closed, "pairs at n={n}");
    }
    let anchor: Vec<BigCount> = AlucasKind::ALL
        .into_iter()
        .map(|k| {
            let (u, v) = alternate_lucas_pair(4, k).unwrap();
            count_shortest_paths(CubeFamily::AlternateLucas, u, v).unwrap()
        })
        .collect();
    let want: Vec<BigCount> = [3u32, 3, 2, 2].into_iter().map(BigCount::from).collect();
    ensure_eq!(anchor, want, "anchor at n=4");
    Ok(())
}

fn fibonacci_bijection() -> Outcome {
    for n in 1..=8usize {
        let (u, v) = ok(fibonacci_pair(n))?;
        let mut images = HashSet::new();
        let mut paths = 0usize;
        for p in ok(enumerate_shortest_paths(CubeFamily::Fibonacci, u, v))? {
            let sigma = ok(path_to_permutation(&p))?;
            ensure!(is_alternating(&sigma), "{sigma} not alternating at n={n}");
            ensure_eq!(ok(permutation_to_path(&sigma, n))?, p, "path roundtrip at n={n}");
            images.insert(sigma);
            paths += 1;
        }
        let mut perms = 0usize;
        for sigma in enumerate_alternating(n) {
            ensure_eq!(ok(path_to_permutation(&ok(permutation_to_path(&sigma, n))?))?, sigma, "n={n}");
            ensure!(images.contains(&sigma), "{sigma} has no path at n={n}");
            perms += 1;
        }
        ensure_eq!(BigCount::from(paths), zigzag(n), "paths at n={n}");
        ensure_eq!((images.len(), perms), (paths, paths), "sizes at n={n}");
    }
    let eight = path_of(&[
        "01010101", "01000101", "01000001", "01001001", "00001001", "10001001", "10001000",
        "10101000", "10101010",
    ]);
    ensure_eq!(ok(path_to_permutation(&eight))?, perm("5 4 7 1 3 2 8 6"), "eight-column table");
    let seven = path_of(&[
        "0101010", "0001010", "0001000", "1001000", "1000000", "1000001", "1010001", "1010101",
    ]);
    ensure_eq!(ok(permutation_to_path(&perm("3 1 6 4 7 2 5"), 7))?, seven, "seven-column table");
    Ok(())
}

fn next_perm(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).unwrap();
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

fn variant_bijections() -> Outcome {
    for n in (2..=8usize).step_by(2) {
        let (u, v) = ok(lucas_pair(n, 1))?;
        let mut images = HashSet::new();
        for p in ok(enumerate_shortest_paths(CubeFamily::Lucas, u, v))? {
            let sigma = ok(lucas_path_to_permutation(&p, n))?;
            ensure_eq!(ok(lucas_permutation_to_path(&sigma))?, p, "lucas roundtrip at n={n}");
            ensure!(images.insert(sigma), "lucas collision at n={n}");
        }
        let mut xs: Vec<usize> = (1..=n).collect();
        let mut circular = 0usize;
        loop {
            let sigma = Permutation::new(xs.clone()).unwrap();
            if ok(is_circular_alternating(&sigma))? {
                circular += 1;
                ensure!(images.contains(&sigma), "{sigma} missed at n={n}");
            }
            if !next_perm(&mut xs) {
                break;
            }
        }
        let want = BigCount::from(n / 2) * zigzag(n - 1);
        ensure_eq!(BigCount::from(images.len()), want, "lucas paths at n={n}");
        ensure_eq!(BigCount::from(circular), want, "circular perms at n={n}");
    }
    for n in 4..=8usize {
        for kind in AlucasKind::ALL {
            let (u, v) = ok(alternate_lucas_pair(n, kind))?;
            let mut codes = HashSet::new();
            for p in ok(enumerate_shortest_paths(CubeFamily::AlternateLucas, u, v))? {
                let code = ok(alucas_path_to_permutation(&p, kind))?;
                ensure!(is_alternating(&code.tau), "kind {kind} n={n}: {} not alternating", code.tau);
                ensure_eq!(ok(alucas_permutation_to_path(&code, n))?, p, "kind {kind} roundtrip at n={n}");
                ensure!(codes.insert(code), "kind {kind} collision at n={n}");
            }
            ensure_eq!(BigCount::from(codes.len()), alucas_count(kind, n), "kind {kind} at n={n}");
        }
    }
    Ok(())
}

fn structure() -> Outcome {
    for family in CubeFamily::ALL {
        for n in family.min_len()..=12 {
            let graph = ok(CubeGraph::new(family, n))?;
            let verts = graph.vertices();
            let names: Vec<String> = verts.iter().map(|v| v.to_string()).collect();
            ensure_eq!(names, Oracle::new(family, n).names, "{family} vertices at n={n}");
            let bad = (0..verts.len()).into_par_iter().find_any(|&s| {
                let d = graph.bfs(s);
                verts.iter().enumerate().any(|(t, w)| d[t] as usize != verts[s].hamming(*w))
            });
            ensure!(bad.is_none(), "{family} at n={n} is not isometric from {}", verts[bad.unwrap()]);
        }
        for n in family.min_len()..=16 {
            if let Ok(dec) = fundamental_decomposition(family, n) {
                ok(dec.validate())?;
                let total = dec.left.vertices.len() + dec.right.vertices.len();
                ensure_eq!(total, ok(generate_vertices(family, n))?.len(), "{family} split at n={n}");
                ensure_eq!(dec.matching.len(), dec.right.vertices.len(), "{family} matching at n={n}");
            }
        }
    }
    for n in 1..=8usize {
        for x in 0..1u32 << n {
            let u = Vertex::new(x, n).unwrap();
            let got = ok(count_shortest_paths(CubeFamily::Hypercube, u, u.complement()))?;
            ensure_eq!(got, factorial(n), "hypercube antipodes of {u}");
        }
    }
    Ok(())
}

fn counting_oracle() -> Outcome {
    for family in CubeFamily::ALL {
        for n in family.min_len().max(1)..=7 {
            let oracle = Oracle::new(family, n);
            let (diam, far) = oracle.far_pairs();
            let searched = ok(diametral_pairs(family, n))?;
            ensure_eq!(
                searched.iter().map(pair_strings).collect::<BTreeSet<_>>(),
                far,
                "{family} pairs at n={n}"
            );
            if let Ok(closed) = expected_diametral_pairs(family, n) {
                ensure_eq!(closed, searched, "{family} closed form at n={n}");
            }
            let index: HashMap<&str, usize> =
                oracle.names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
            for p in &searched {
                ensure_eq!(p.distance, diam, "{family} diameter at n={n}");
                let naive = oracle.count_paths(index[p.u.to_string().as_str()], index[p.v.to_string().as_str()]);
                ensure_eq!(
                    ok(count_shortest_paths(family, p.u, p.v))?,
                    BigCount::from(naive),
                    "{family} {p}"
                );
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("euler numbers: prefix and two methods agree (m <= 30)", euler_prefix),
        ("fibonacci: unique diametral pair, count E_n (n <= 12)", fibonacci_counts),
        ("lucas: pairs, counts and shift transport (n <= 12)", lucas_counts),
        ("alternate lucas: four pairs and their counts (4 <= n <= 12)", alucas_counts),
        ("fibonacci bijection roundtrip (n <= 8) and worked tables", fibonacci_bijection),
        ("lucas and alternate lucas bijections (n <= 8)", variant_bijections),
        ("partial cubes, decompositions, hypercube n!", structure),
        ("dp counts equal naive dfs (n <= 7)", counting_oracle),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|p| {
                let msg = p
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                Err(format!("panicked: {msg}"))
            });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {} {name} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
