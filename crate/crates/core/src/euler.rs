//! Euler numbers and alternating permutations.
//!
//! `E_n` counts the alternating permutations of `[n]`, here in the down–up
//! convention `σ_1 > σ_2 < σ_3 > …`. Two independent integer methods compute
//! the sequence: the Seidel–Entringer boustrophedon triangle and André's
//! convolution `2 E_{n+1} = Σ_k C(n, k) E_k E_{n-k}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::pathcount::BigCount;
use crate::{Error, Result};

/// Largest `n` for which [`count_class`] will brute-force `S_n`.
pub const BRUTE_FORCE_MAX: usize = 10;

/// A permutation `σ_1 … σ_n` of `{1, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &x in &entries {
            if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{entries:?} is not a rearrangement of 1..={n}"
                )));
            }
        }
        Ok(Self(entries))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `σ_i ↦ n + 1 - σ_i`; swaps alternating and reverse alternating.
    pub fn complement(&self) -> Self {
        let n = self.len();
        Self(self.0.iter().map(|&x| n + 1 - x).collect())
    }

    /// Relabels any sequence of distinct integers to `1..=len`, keeping the
    /// relative order.
    pub fn standardize(values: &[usize]) -> Result<Self> {
        let mut sorted = values.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPermutation(format!("{values:?} has repeated values")));
        }
        Ok(Self(
            values
                .iter()
                .map(|x| sorted.binary_search(x).expect("present") + 1)
                .collect(),
        ))
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Parses `3,1,6,4` or `3 1 6 4`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerTable {
    values: Vec<BigCount>,
    entringer: Vec<Vec<BigCount>>,
}

impl EulerTable {
    /// `E_0 ..= E_m`.
    pub fn values(&self) -> &[BigCount] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Option<&BigCount> {
        self.values.get(n)
    }

    /// Entringer numbers `T(n, k)`, row `n` having `n + 1` entries.
    pub fn entringer(&self) -> &[Vec<BigCount>] {
        &self.entringer
    }
}

/// `E_0 ..= E_m` via the boustrophedon:
/// `T(0,0) = 1`, `T(n,0) = 0`, `T(n,k) = T(n,k-1) + T(n-1,n-k)`, `E_n = T(n,n)`.
pub fn euler_numbers(m: usize) -> EulerTable {
    let mut entringer: Vec<Vec<BigCount>> = vec![vec![BigCount::one()]];
    for n in 1..=m {
        let prev = &entringer[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        row.push(BigCount::default());
        for k in 1..=n {
            let next = &row[k - 1] + &prev[n - k];
            row.push(next);
        }
        entringer.push(row);
    }
    let values = entringer.iter().enumerate().map(|(n, row)| row[n].clone()).collect();
    EulerTable { values, entringer }
}

/// `E_0 ..= E_m` from André's recurrence alone, seeded with `E_0 = E_1 = 1`.
pub fn euler_via_andre(m: usize) -> Vec<BigCount> {
    let mut e: Vec<BigCount> = vec![BigCount::one()];
    if m >= 1 {
        e.push(BigCount::one());
    }
    let mut binom: Vec<BigCount> = vec![BigCount::one(), BigCount::one()];
    for n in 1..m {
        let sum: BigCount = (0..=n).map(|k| &binom[k] * &e[k] * &e[n - k]).sum();
        e.push(sum >> 1u32);
        binom = next_binomial_row(&binom);
    }
    e
}

fn next_binomial_row(row: &[BigCount]) -> Vec<BigCount> {
    let mut out = Vec::with_capacity(row.len() + 1);
    out.push(BigCount::one());
    out.extend(row.windows(2).map(|w| &w[0] + &w[1]));
    out.push(BigCount::one());
    out
}

pub fn binomial(n: usize, k: usize) -> BigCount {
    if k > n {
        return BigCount::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `σ_1 > σ_2 < σ_3 > …`
pub fn is_alternating(p: &Permutation) -> bool {
    zigzag(p.entries(), true)
}

/// `σ_1 < σ_2 > σ_3 < …`
pub fn is_reverse_alternating(p: &Permutation) -> bool {
    zigzag(p.entries(), false)
}

fn zigzag(xs: &[usize], first_down: bool) -> bool {
    xs.windows(2).enumerate().all(|(i, w)| {
        let down = (i % 2 == 0) == first_down;
        if down {
            w[0] > w[1]
        } else {
            w[0] < w[1]
        }
    })
}

/// Even-length permutations whose odd positions exceed both cyclic
/// neighbours, `σ_n` being the left neighbour of `σ_1`.
pub fn is_circular_alternating(p: &Permutation) -> Result<bool> {
    let xs = p.entries();
    let n = xs.len();
    if n % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "circular alternation needs even length, got {n}"
        )));
    }
    // 0-based even index = odd position
    Ok((0..n).step_by(2).all(|i| {
        let left = xs[(i + n - 1) % n];
        let right = xs[(i + 1) % n];
        xs[i] > left && xs[i] > right
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PermutationClass {
    Alternating,
    Reverse,
    Circular,
}

impl PermutationClass {
    pub fn contains(self, p: &Permutation) -> Result<bool> {
        match self {
            PermutationClass::Alternating => Ok(is_alternating(p)),
            PermutationClass::Reverse => Ok(is_reverse_alternating(p)),
            PermutationClass::Circular => is_circular_alternating(p),
        }
    }
}

/// In-place lexicographic successor; `false` once `xs` is the last permutation.
pub(crate) fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs.iter().rposition(|&x| x > xs[i]).expect("pivot has a larger suffix entry");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

/// Exhaustive count of the class members in `S_n`.
pub fn count_class(class: PermutationClass, n: usize) -> Result<BigCount> {
    if n > BRUTE_FORCE_MAX {
        return Err(Error::InvalidArgument(format!(
            "brute-force counting is limited to n <= {BRUTE_FORCE_MAX}, got {n}"
        )));
    }
    if class == PermutationClass::Circular && n % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "circular alternation needs even length, got {n}"
        )));
    }
    if n == 0 {
        return Ok(BigCount::one());
    }
    // shard by first entry
    let total: u64 = (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut xs: Vec<usize> = std::iter::once(first)
                .chain((1..=n).filter(|&x| x != first))
                .collect();
            let mut count = 0u64;
            loop {
                let p = Permutation(xs.clone());
                if class.contains(&p).expect("length checked above") {
                    count += 1;
                }
                if !next_permutation(&mut xs[1..]) {
                    break;
                }
            }
            count
        })
        .sum();
    Ok(BigCount::from(total))
}

/// Lexicographic stream of the alternating permutations of `[n]`.
#[derive(Debug, Clone)]
pub struct AlternatingPermutations {
    n: usize,
    prefix: Vec<usize>,
    used: Vec<bool>,
    /// Next candidate value at each depth.
    cursor: Vec<usize>,
    empty_pending: bool,
}

impl AlternatingPermutations {
    fn fits(&self, x: usize) -> bool {
        match self.prefix.last() {
            None => true,
            Some(&prev) => {
                // prefix.len() - 1 is the 0-based index of prev
                if (self.prefix.len() - 1).is_multiple_of(2) {
                    prev > x
                } else {
                    prev < x
                }
            }
        }
    }
}

impl Iterator for AlternatingPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.empty_pending {
            self.empty_pending = false;
            return Some(Permutation(Vec::new()));
        }
        while let Some(&start) = self.cursor.last() {
            let pick = (start..=self.n).find(|&x| !self.used[x] && self.fits(x));
            match pick {
                None => {
                    self.cursor.pop();
                    if let Some(x) = self.prefix.pop() {
                        self.used[x] = false;
                    }
                }
                Some(x) => {
                    *self.cursor.last_mut().expect("non-empty") = x + 1;
                    self.prefix.push(x);
                    if self.prefix.len() == self.n {
                        let out = Permutation(self.prefix.clone());
                        self.prefix.pop();
                        return Some(out);
                    }
                    self.used[x] = true;
                    self.cursor.push(1);
                }
            }
        }
        None
    }
}

pub fn enumerate_alternating(n: usize) -> AlternatingPermutations {
    AlternatingPermutations {
        n,
        prefix: Vec::with_capacity(n),
        used: vec![false; n + 1],
        cursor: if n == 0 { Vec::new() } else { vec![1] },
        empty_pending: n == 0,
    }
}
