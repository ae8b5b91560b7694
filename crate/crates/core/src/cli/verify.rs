//! Claim-by-claim verification: each claim pairs a closed-form expectation
//! with a brute-force observation and passes only on exact equality.

use std::collections::HashSet;
use std::fmt;

use clap::ValueEnum;
use num_bigint::BigUint;
use rayon::prelude::*;

use crate::bijection::{
    alucas_path_to_permutation, alucas_permutation_to_path, lucas_odd_shift_transport,
    lucas_path_to_permutation, lucas_permutation_to_path, path_to_permutation, permutation_to_path,
};
use crate::bitcubes::CubeFamily;
use crate::euler::{
    binomial, count_class, enumerate_alternating, euler_numbers, euler_via_andre, is_alternating,
    is_circular_alternating, EulerTable, Permutation, PermutationClass,
};
use crate::metrics::{
    alternate_lucas_pair, expected_diametral_pairs, fibonacci_pair, lucas_pair, AlucasKind,
    DiametralPair,
};
use crate::pathcount::{count_all_diametral, enumerate_shortest_paths, BigCount, Path};
use crate::Result;

pub const DEFAULT_COUNT_MAX: usize = 12;
pub const DEFAULT_BIJECTION_MAX: usize = 8;
pub const DEFAULT_EULER_MAX: usize = 30;

/// The values listed for `E_0 ..= E_6`.
const EULER_PREFIX: [u32; 7] = [1, 1, 1, 2, 5, 16, 61];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    Fibonacci,
    Lucas,
    #[value(name = "alternatelucas")]
    AlternateLucas,
    Euler,
    Bijection,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimValue {
    Count(BigCount),
    Sequence(Vec<BigCount>),
    PairCounts(Vec<(DiametralPair, BigCount)>),
    /// Sizes of both sides of a bijection and whether both compositions
    /// were identities.
    Bijection {
        domain: BigCount,
        image: BigCount,
        roundtrip: bool,
    },
    Failed(String),
}

impl fmt::Display for ClaimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimValue::Count(c) => write!(f, "{c}"),
            ClaimValue::Sequence(xs) => {
                let s: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                f.write_str(&s.join(","))
            }
            ClaimValue::PairCounts(pcs) => {
                let s: Vec<String> = pcs.iter().map(|(p, c)| format!("{}/{}={c}", p.u, p.v)).collect();
                f.write_str(&s.join(" "))
            }
            ClaimValue::Bijection {
                domain,
                image,
                roundtrip,
            } => write!(
                f,
                "paths={domain} perms={image} roundtrip={}",
                if *roundtrip { "ok" } else { "broken" }
            ),
            ClaimValue::Failed(msg) => write!(f, "error: {msg}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub id: String,
    pub family: String,
    pub n: Option<usize>,
    pub expected: ClaimValue,
    pub observed: ClaimValue,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub claims: Vec<Claim>,
    pub passed: usize,
    pub failed: usize,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

type Check = Box<dyn Fn() -> Result<(ClaimValue, ClaimValue)> + Send + Sync>;

struct Pending {
    id: String,
    family: &'static str,
    n: Option<usize>,
    check: Check,
}

fn pending(
    id: String,
    family: &'static str,
    n: Option<usize>,
    check: impl Fn() -> Result<(ClaimValue, ClaimValue)> + Send + Sync + 'static,
) -> Pending {
    Pending {
        id,
        family,
        n,
        check: Box::new(check),
    }
}

/// Sizes used by [`verify`]: `max_n` sets the counting range, the euler
/// range and (capped at its default) the bijection range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub count: usize,
    pub bijection: usize,
    pub euler: usize,
}

impl Limits {
    pub fn for_scope(scope: Scope, max_n: Option<usize>) -> Self {
        match (scope, max_n) {
            (_, None) => Limits {
                count: DEFAULT_COUNT_MAX,
                bijection: DEFAULT_BIJECTION_MAX,
                euler: DEFAULT_EULER_MAX,
            },
            (Scope::All, Some(m)) => Limits {
                count: m,
                bijection: m.min(DEFAULT_BIJECTION_MAX),
                euler: m,
            },
            (_, Some(m)) => Limits {
                count: m,
                bijection: m,
                euler: m,
            },
        }
    }
}

pub fn verify(scope: Scope, limits: Limits) -> VerificationReport {
    let table = euler_numbers(limits.count.max(limits.bijection).max(limits.euler).max(6));
    let e = move |n: usize| table.get(n).cloned().expect("table covers every requested n");
    let mut todo = Vec::new();
    let wants = |s: Scope| scope == s || scope == Scope::All;
    if wants(Scope::Fibonacci) {
        fibonacci_claims(limits.count, &e, &mut todo);
    }
    if wants(Scope::Lucas) {
        lucas_claims(limits.count, &e, &mut todo);
    }
    if wants(Scope::AlternateLucas) {
        alucas_claims(limits.count, &e, &mut todo);
    }
    if wants(Scope::Euler) {
        euler_claims(limits.euler, &mut todo);
    }
    if wants(Scope::Bijection) {
        bijection_claims(limits.bijection, &e, &mut todo);
    }
    let mut claims: Vec<Claim> = todo
        .into_par_iter()
        .map(|p| {
            let (expected, observed) = (p.check)().unwrap_or_else(|err| {
                (ClaimValue::Failed("not evaluated".into()), ClaimValue::Failed(err.to_string()))
            });
            let pass = expected == observed && !matches!(expected, ClaimValue::Failed(_));
            Claim {
                id: p.id,
                family: p.family.to_string(),
                n: p.n,
                expected,
                observed,
                pass,
            }
        })
        .collect();
    claims.sort_by(|a, b| a.id.cmp(&b.id));
    let passed = claims.iter().filter(|c| c.pass).count();
    let failed = claims.len() - passed;
    VerificationReport {
        claims,
        passed,
        failed,
    }
}

fn observed_pairs(family: CubeFamily, n: usize) -> Result<ClaimValue> {
    Ok(ClaimValue::PairCounts(
        count_all_diametral(family, n)?
            .into_iter()
            .map(|pc| (pc.pair, pc.count))
            .collect(),
    ))
}

fn fibonacci_claims(max: usize, e: &(impl Fn(usize) -> BigCount + Clone + Send + Sync + 'static), todo: &mut Vec<Pending>) {
    for n in 1..=max {
        let e = e.clone();
        todo.push(pending(format!("fibonacci/count/n={n:02}"), "fibonacci", Some(n), move || {
            let expected = expected_diametral_pairs(CubeFamily::Fibonacci, n)?
                .into_iter()
                .map(|p| (p, e(n)))
                .collect();
            Ok((ClaimValue::PairCounts(expected), observed_pairs(CubeFamily::Fibonacci, n)?))
        }));
    }
}

fn lucas_claims(max: usize, e: &(impl Fn(usize) -> BigCount + Clone + Send + Sync + 'static), todo: &mut Vec<Pending>) {
    for n in 2..=max {
        let e = e.clone();
        todo.push(pending(format!("lucas/count/n={n:02}"), "lucas", Some(n), move || {
            let per_pair = if n % 2 == 0 {
                BigCount::from(n / 2) * e(n - 1)
            } else {
                e(n - 1)
            };
            let expected = expected_diametral_pairs(CubeFamily::Lucas, n)?
                .into_iter()
                .map(|p| (p, per_pair.clone()))
                .collect();
            Ok((ClaimValue::PairCounts(expected), observed_pairs(CubeFamily::Lucas, n)?))
        }));
    }
}

/// Path count per kind: `E_{n-1}` for (iii)/(iv), `C(n-1, 2) E_{n-3}` for (i)/(ii).
pub fn alucas_expected_count(kind: AlucasKind, n: usize, euler: &EulerTable) -> Option<BigCount> {
    match kind {
        AlucasKind::III | AlucasKind::IV => euler.get(n - 1).cloned(),
        AlucasKind::I | AlucasKind::II => euler.get(n - 3).map(|x| binomial(n - 1, 2) * x),
    }
}

fn alucas_claims(max: usize, e: &(impl Fn(usize) -> BigCount + Clone + Send + Sync + 'static), todo: &mut Vec<Pending>) {
    for n in 4..=max {
        let e = e.clone();
        todo.push(pending(format!("alternatelucas/count/n={n:02}"), "alternatelucas", Some(n), move || {
            let mut expected: Vec<(DiametralPair, BigCount)> = AlucasKind::ALL
                .into_iter()
                .map(|k| {
                    let (u, v) = alternate_lucas_pair(n, k)?;
                    let count = match k {
                        AlucasKind::III | AlucasKind::IV => e(n - 1),
                        AlucasKind::I | AlucasKind::II => binomial(n - 1, 2) * e(n - 3),
                    };
                    Ok((DiametralPair::new(u, v, n - 1), count))
                })
                .collect::<Result<_>>()?;
            expected.sort();
            Ok((ClaimValue::PairCounts(expected), observed_pairs(CubeFamily::AlternateLucas, n)?))
        }));
    }
}

fn euler_claims(max: usize, todo: &mut Vec<Pending>) {
    todo.push(pending("euler/prefix".into(), "euler", Some(6), || {
        let expected = EULER_PREFIX.iter().map(|&x| BigCount::from(x)).collect();
        Ok((ClaimValue::Sequence(expected), ClaimValue::Sequence(euler_numbers(6).values().to_vec())))
    }));
    todo.push(pending(format!("euler/andre/m={max:02}"), "euler", Some(max), move || {
        Ok((
            ClaimValue::Sequence(euler_numbers(max).values().to_vec()),
            ClaimValue::Sequence(euler_via_andre(max)),
        ))
    }));
    let table = euler_numbers(max.max(1));
    for n in 1..=max.min(9) {
        for (name, class) in [("alternating", PermutationClass::Alternating), ("reverse", PermutationClass::Reverse)] {
            let want = table.get(n).cloned().expect("n <= max");
            todo.push(pending(format!("euler/{name}/n={n:02}"), "euler", Some(n), move || {
                Ok((ClaimValue::Count(want.clone()), ClaimValue::Count(count_class(class, n)?)))
            }));
        }
    }
    for n in (2..=max.min(10)).step_by(2) {
        let want = BigCount::from(n / 2) * table.get(n - 1).expect("n <= max");
        todo.push(pending(format!("euler/circular/n={n:02}"), "euler", Some(n), move || {
            Ok((
                ClaimValue::Count(want.clone()),
                ClaimValue::Count(count_class(PermutationClass::Circular, n)?),
            ))
        }));
    }
}

fn bijection_value(domain: usize, image: usize, roundtrip: bool) -> ClaimValue {
    ClaimValue::Bijection {
        domain: BigCount::from(domain),
        image: BigCount::from(image),
        roundtrip,
    }
}

fn expected_bijection(size: BigCount) -> ClaimValue {
    ClaimValue::Bijection {
        domain: size.clone(),
        image: size,
        roundtrip: true,
    }
}

/// Exhaustive check of the Fibonacci bijection at `n`, both compositions.
pub fn check_fibonacci_bijection(n: usize) -> Result<ClaimValue> {
    let (u, v) = fibonacci_pair(n)?;
    let mut images = HashSet::new();
    let mut ok = true;
    let mut domain = 0;
    for p in enumerate_shortest_paths(CubeFamily::Fibonacci, u, v)? {
        domain += 1;
        let sigma = path_to_permutation(&p)?;
        ok &= is_alternating(&sigma) && permutation_to_path(&sigma, n)? == p;
        images.insert(sigma);
    }
    for sigma in enumerate_alternating(n) {
        ok &= path_to_permutation(&permutation_to_path(&sigma, n)?)? == sigma;
    }
    Ok(bijection_value(domain, images.len(), ok))
}

pub fn check_lucas_even_bijection(n: usize) -> Result<ClaimValue> {
    let (u, v) = lucas_pair(n, 1)?;
    let mut images = HashSet::new();
    let mut ok = true;
    let mut domain = 0;
    for p in enumerate_shortest_paths(CubeFamily::Lucas, u, v)? {
        domain += 1;
        let sigma = lucas_path_to_permutation(&p, n)?;
        ok &= is_circular_alternating(&sigma)? && lucas_permutation_to_path(&sigma)? == p;
        images.insert(sigma);
    }
    // every circular-alternating permutation has a path
    let mut xs: Vec<usize> = (1..=n).collect();
    loop {
        let sigma = Permutation::new(xs.clone())?;
        if is_circular_alternating(&sigma)? {
            ok &= images.contains(&sigma)
                && lucas_path_to_permutation(&lucas_permutation_to_path(&sigma)?, n)? == sigma;
        }
        if !crate::euler::next_permutation(&mut xs) {
            break;
        }
    }
    Ok(bijection_value(domain, images.len(), ok))
}

/// Shift transport from pair 1 onto every pair `i` of odd `Λ_n`: the
/// transported set must equal the enumerated set for each shift. Sizes are
/// totals over all `n` pairs.
pub fn check_lucas_shift_transport(n: usize) -> Result<ClaimValue> {
    let (u1, v1) = lucas_pair(n, 1)?;
    let base: Vec<Path> = enumerate_shortest_paths(CubeFamily::Lucas, u1, v1)?.collect();
    let mut domain = 0;
    let mut image = 0;
    let mut ok = true;
    for i in 1..=n {
        let moved: HashSet<Path> = base
            .iter()
            .map(|p| lucas_odd_shift_transport(p, i))
            .collect::<Result<_>>()?;
        let (ui, vi) = lucas_pair(n, i)?;
        let target: HashSet<Path> = enumerate_shortest_paths(CubeFamily::Lucas, ui, vi)?.collect();
        domain += base.len();
        image += target.len();
        ok &= moved.len() == base.len() && moved == target;
    }
    Ok(bijection_value(domain, image, ok))
}

pub fn check_alucas_bijection(n: usize, kind: AlucasKind) -> Result<ClaimValue> {
    let (u, v) = alternate_lucas_pair(n, kind)?;
    let mut codes = HashSet::new();
    let mut ok = true;
    let mut domain = 0;
    for p in enumerate_shortest_paths(CubeFamily::AlternateLucas, u, v)? {
        domain += 1;
        let code = alucas_path_to_permutation(&p, kind)?;
        ok &= alucas_permutation_to_path(&code, n)? == p;
        codes.insert(code);
    }
    // every decorated permutation decodes to a path that encodes back
    let tau_len = match kind {
        AlucasKind::III | AlucasKind::IV => n - 1,
        AlucasKind::I | AlucasKind::II => n - 3,
    };
    let tails: Vec<Option<(usize, usize)>> = match kind {
        AlucasKind::III | AlucasKind::IV => vec![None],
        AlucasKind::I | AlucasKind::II => (1..n)
            .flat_map(|hi| (1..hi).map(move |lo| Some((hi, lo))))
            .collect(),
    };
    let mut decoded = 0;
    for tau in enumerate_alternating(tau_len) {
        for &tail in &tails {
            let code = crate::bijection::AlucasCode {
                kind,
                tau: tau.clone(),
                tail,
                frozen_coord: kind.frozen_coord(n),
                reversed: n % 2 == 1,
            };
            let p = alucas_permutation_to_path(&code, n)?;
            ok &= alucas_path_to_permutation(&p, kind)? == code;
            decoded += 1;
        }
    }
    ok &= decoded == codes.len();
    Ok(bijection_value(domain, codes.len(), ok))
}

fn bijection_claims(max: usize, e: &(impl Fn(usize) -> BigCount + Clone + Send + Sync + 'static), todo: &mut Vec<Pending>) {
    for n in 1..=max {
        let e = e.clone();
        todo.push(pending(format!("bijection/fibonacci/n={n:02}"), "fibonacci", Some(n), move || {
            Ok((expected_bijection(e(n)), check_fibonacci_bijection(n)?))
        }));
    }
    for n in (2..=max).step_by(2) {
        let e = e.clone();
        todo.push(pending(format!("bijection/lucas-even/n={n:02}"), "lucas", Some(n), move || {
            Ok((
                expected_bijection(BigCount::from(n / 2) * e(n - 1)),
                check_lucas_even_bijection(n)?,
            ))
        }));
    }
    for n in (3..=max).step_by(2) {
        let e = e.clone();
        todo.push(pending(format!("bijection/lucas-shift/n={n:02}"), "lucas", Some(n), move || {
            Ok((
                expected_bijection(BigCount::from(n) * e(n - 1)),
                check_lucas_shift_transport(n)?,
            ))
        }));
    }
    for n in 4..=max {
        for kind in AlucasKind::ALL {
            let e = e.clone();
            todo.push(pending(
                format!("bijection/alternatelucas-{kind}/n={n:02}"),
                "alternatelucas",
                Some(n),
                move || {
                    let size: BigUint = match kind {
                        AlucasKind::III | AlucasKind::IV => e(n - 1),
                        AlucasKind::I | AlucasKind::II => binomial(n - 1, 2) * e(n - 3),
                    };
                    Ok((expected_bijection(size), check_alucas_bijection(n, kind)?))
                },
            ));
        }
    }
}
