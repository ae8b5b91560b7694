//! The `cubepaths` command line.
//!
//! Exit codes: 0 success, 1 a verification claim failed, 2 usage error
//! (bad arguments, unsupported length, safety cap exceeded), 3 domain error
//! (vertex outside the family, invalid path or permutation).
//!
//! Data goes to stdout, diagnostics to stderr. `--format` selects text, JSON
//! lines or CSV; counts are always decimal strings.

mod output;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

pub use output::{Cell, Format, Records};
pub use verify::{verify, ClaimValue, Limits, Scope, VerificationReport};

use crate::bijection::{
    alucas_path_to_permutation, alucas_permutation_to_path, fibonacci_table,
    lucas_odd_path_to_permutation, lucas_odd_permutation_to_path, lucas_path_to_permutation,
    lucas_permutation_to_path, permutation_to_path, AlucasCode, StepTable,
};
use crate::bitcubes::{generate_vertices, CubeFamily, Vertex};
use crate::euler::{euler_numbers, euler_via_andre, Permutation};
use crate::metrics::{self, AlucasKind};
use crate::pathcount::{count_all_diametral, count_shortest_paths, enumerate_shortest_paths, Path};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// Environment variable that raises every safety cap to its value.
pub const MAX_N_ENV: &str = "CUBEPATHS_MAX_N";

const CAP_VERTICES: usize = 24;
const CAP_SEARCH: usize = 16;
const CAP_ENUMERATE: usize = 10;
const CAP_EULER: usize = 1000;

#[derive(Debug, Parser)]
#[command(name = "cubepaths", version, about = "Diametral paths in Fibonacci, Lucas and Alternate Lucas cubes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Hypercube,
    Fibonacci,
    Lucas,
    #[value(name = "alternatelucas", alias = "alternate-lucas")]
    AlternateLucas,
}

impl From<FamilyArg> for CubeFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Hypercube => CubeFamily::Hypercube,
            FamilyArg::Fibonacci => CubeFamily::Fibonacci,
            FamilyArg::Lucas => CubeFamily::Lucas,
            FamilyArg::AlternateLucas => CubeFamily::AlternateLucas,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EulerMethod {
    Boustrophedon,
    Andre,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the vertices of a cube, ascending.
    Gen {
        family: FamilyArg,
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Diameter by all-pairs BFS.
    Diameter {
        family: FamilyArg,
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Diametrically opposite pairs, smaller bitmask first.
    Pairs {
        family: FamilyArg,
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Shortest-path counts for every diametral pair, or for one pair.
    Count {
        family: FamilyArg,
        n: usize,
        #[arg(long, requires = "to")]
        from: Option<String>,
        #[arg(long, requires = "from")]
        to: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List shortest paths for every diametral pair, or for one pair.
    Enumerate {
        family: FamilyArg,
        n: usize,
        #[arg(long, requires = "to")]
        from: Option<String>,
        #[arg(long, requires = "from")]
        to: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Euler numbers E_0 ..= E_m.
    Euler {
        m: usize,
        #[arg(long, value_enum, default_value_t = EulerMethod::Boustrophedon)]
        method: EulerMethod,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Show the step table linking a diametral path and its permutation.
    Explain {
        family: FamilyArg,
        n: usize,
        /// Permutation, e.g. 3,1,6,4,7,2,5.
        #[arg(long, conflicts_with = "path", required_unless_present = "path")]
        perm: Option<String>,
        /// Path s_0,s_1,...,s_d as comma-separated vertices.
        #[arg(long)]
        path: Option<String>,
        /// Pair kind for alternate Lucas permutations.
        #[arg(long)]
        kind: Option<String>,
        /// Tail pair `hi,lo` for alternate Lucas kinds i and ii.
        #[arg(long)]
        tail: Option<String>,
        /// Pair number for odd Lucas permutations.
        #[arg(long, default_value_t = 1)]
        shift: usize,
    },
    /// Check every claim in a scope by brute force against its closed form.
    Verify {
        #[arg(value_enum)]
        scope: Scope,
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidLength { .. } | Error::InvalidArgument(_) | Error::VertexParse(_) => EXIT_USAGE,
            Error::InvalidVertex { .. } | Error::InvalidPath(_) | Error::InvalidPermutation(_) => {
                EXIT_DOMAIN
            }
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: format!("output error: {e}"),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn cap(default: usize) -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .map_or(default, |raised| raised.max(default))
}

fn check_cap(what: &str, n: usize, default: usize) -> Result<(), Failure> {
    let limit = cap(default);
    if n > limit {
        return Err(usage(format!(
            "{what} with n = {n} exceeds the safety cap {limit}; set {MAX_N_ENV} to raise it"
        )));
    }
    Ok(())
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn parse_vertex(s: &str, family: CubeFamily, n: usize) -> Result<Vertex, Failure> {
    let v: Vertex = s.parse()?;
    if v.len() != n {
        return Err(usage(format!("vertex {s} has length {}, expected {n}", v.len())));
    }
    crate::bitcubes::require_member(family, v)?;
    Ok(v)
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Gen { family, n, format } => {
            check_cap("gen", n, CAP_VERTICES)?;
            let mut rec = Records::new(vec!["vertex"]);
            for v in generate_vertices(family.into(), n)? {
                rec.push(vec![v.to_string().into()]);
            }
            rec.write(format, out)?;
        }
        Command::Diameter { family, n, format } => {
            check_cap("diameter", n, CAP_SEARCH)?;
            let family = CubeFamily::from(family);
            let d = metrics::diameter(family, n)?;
            let mut rec = Records::new(vec!["family", "n", "diameter"]);
            rec.push(vec![family.name().into(), n.into(), d.into()]);
            if format == Format::Text {
                writeln!(out, "{d}")?;
            } else {
                rec.write(format, out)?;
            }
        }
        Command::Pairs { family, n, format } => {
            check_cap("pairs", n, CAP_SEARCH)?;
            let mut rec = Records::new(vec!["u", "v", "distance"]);
            for p in metrics::diametral_pairs(family.into(), n)? {
                rec.push(vec![p.u.to_string().into(), p.v.to_string().into(), p.distance.into()]);
            }
            rec.write(format, out)?;
        }
        Command::Count {
            family,
            n,
            from,
            to,
            format,
        } => {
            let family = CubeFamily::from(family);
            family.check_len(n)?;
            let mut rec = Records::new(vec!["u", "v", "count"]);
            if let (Some(a), Some(b)) = (from, to) {
                check_cap("count", n, CAP_VERTICES)?;
                let (u, v) = (parse_vertex(&a, family, n)?, parse_vertex(&b, family, n)?);
                let c = count_shortest_paths(family, u, v)?;
                if format == Format::Text {
                    writeln!(out, "{c}")?;
                    return Ok(EXIT_OK);
                }
                rec.push(vec![u.to_string().into(), v.to_string().into(), c.to_string().into()]);
            } else {
                check_cap("count", n, CAP_SEARCH)?;
                for pc in count_all_diametral(family, n)? {
                    rec.push(vec![
                        pc.pair.u.to_string().into(),
                        pc.pair.v.to_string().into(),
                        pc.count.to_string().into(),
                    ]);
                }
            }
            rec.write(format, out)?;
        }
        Command::Enumerate {
            family,
            n,
            from,
            to,
            format,
        } => {
            let family = CubeFamily::from(family);
            family.check_len(n)?;
            check_cap("enumerate", n, CAP_ENUMERATE)?;
            let pairs = match (from, to) {
                (Some(a), Some(b)) => vec![(parse_vertex(&a, family, n)?, parse_vertex(&b, family, n)?)],
                _ => metrics::diametral_pairs(family, n)?
                    .into_iter()
                    .map(|p| (p.u, p.v))
                    .collect(),
            };
            let mut rec = Records::new(vec!["u", "v", "path"]);
            for (u, v) in pairs {
                for p in enumerate_shortest_paths(family, u, v)? {
                    let steps = p.steps().iter().map(|s| s.to_string()).collect();
                    rec.push(vec![u.to_string().into(), v.to_string().into(), Cell::List(steps)]);
                }
            }
            if format == Format::Text {
                for row in &rec.rows {
                    if let Cell::List(steps) = &row[2] {
                        writeln!(out, "{}", steps.join(","))?;
                    }
                }
            } else {
                rec.write(format, out)?;
            }
        }
        Command::Euler { m, method, format } => {
            check_cap("euler", m, CAP_EULER)?;
            let values = match method {
                EulerMethod::Boustrophedon => euler_numbers(m).values().to_vec(),
                EulerMethod::Andre => euler_via_andre(m),
            };
            let mut rec = Records::new(vec!["n", "value"]);
            for (n, e) in values.iter().enumerate() {
                rec.push(vec![n.into(), e.to_string().into()]);
            }
            rec.write(format, out)?;
        }
        Command::Explain {
            family,
            n,
            perm,
            path,
            kind,
            tail,
            shift,
        } => {
            check_cap("explain", n, CAP_SEARCH)?;
            let text = explain(family.into(), n, perm, path, kind, tail, shift)?;
            write!(out, "{text}")?;
        }
        Command::Verify {
            scope,
            max_n,
            format,
        } => {
            if let Some(m) = max_n {
                let limit = if scope == Scope::Euler { CAP_EULER } else { CAP_SEARCH };
                check_cap("verify", m, limit)?;
            }
            let report = verify(scope, Limits::for_scope(scope, max_n));
            write_report(&report, format, out)?;
            return Ok(if report.all_pass() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            });
        }
    }
    Ok(EXIT_OK)
}

fn write_report(report: &VerificationReport, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    let columns = vec!["id", "family", "n", "expected", "observed", "pass"];
    let row = |c: &verify::Claim| -> Vec<Cell> {
        vec![
            c.id.as_str().into(),
            c.family.as_str().into(),
            c.n.map_or(Cell::Str(String::new()), |n| n.into()),
            c.expected.to_string().into(),
            c.observed.to_string().into(),
            c.pass.into(),
        ]
    };
    match format {
        Format::Text => {
            for c in &report.claims {
                let status = if c.pass { "PASS" } else { "FAIL" };
                writeln!(out, "{status} {} expected={} observed={}", c.id, c.expected, c.observed)?;
            }
            writeln!(out, "summary: {} passed, {} failed", report.passed, report.failed)?;
        }
        Format::Json => {
            for c in &report.claims {
                writeln!(out, "{}", output::json_line(&columns, &row(c)))?;
            }
            let summary = serde_json::json!({
                "summary": { "passed": report.passed, "failed": report.failed }
            });
            writeln!(out, "{summary}")?;
        }
        Format::Csv => {
            let mut rec = Records::new(columns.clone());
            for c in &report.claims {
                rec.push(row(c));
            }
            rec.write(Format::Csv, out)?;
        }
    }
    Ok(())
}

fn parse_path(s: &str, n: usize) -> Result<Path, Failure> {
    let steps = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<Vertex>()
                .map_err(|_| Error::InvalidPath(format!("bad vertex {t:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let path = Path::new(steps)?;
    if path.n() != n {
        return Err(Error::InvalidPath(format!("path vertices have length {}, expected {n}", path.n())).into());
    }
    Ok(path)
}

fn parse_perm(s: &str) -> Result<Permutation, Failure> {
    Ok(s.parse::<Permutation>()?)
}

fn explain(
    family: CubeFamily,
    n: usize,
    perm: Option<String>,
    path: Option<String>,
    kind: Option<String>,
    tail: Option<String>,
    shift: usize,
) -> Result<String, Failure> {
    family.check_len(n)?;
    let (table, summary) = match family {
        CubeFamily::Hypercube => {
            return Err(usage("explain supports fibonacci, lucas and alternatelucas"));
        }
        CubeFamily::Fibonacci => {
            let p = match (perm, path) {
                (Some(s), _) => {
                    let sigma = parse_perm(&s)?;
                    if sigma.len() != n {
                        return Err(Error::InvalidPermutation(format!("{sigma} has length {}, expected {n}", sigma.len())).into());
                    }
                    permutation_to_path(&sigma, n)?
                }
                (None, Some(s)) => parse_path(&s, n)?,
                (None, None) => return Err(usage("one of --perm or --path is required")),
            };
            let table = fibonacci_table(&p)?;
            let sigma = crate::bijection::path_to_permutation(&p)?;
            (table, format!("permutation: {sigma}\n"))
        }
        CubeFamily::Lucas if n.is_multiple_of(2) => {
            let p = match (perm, path) {
                (Some(s), _) => {
                    let sigma = parse_perm(&s)?;
                    if sigma.len() != n {
                        return Err(Error::InvalidPermutation(format!("{sigma} has length {}, expected {n}", sigma.len())).into());
                    }
                    lucas_permutation_to_path(&sigma)?
                }
                (None, Some(s)) => parse_path(&s, n)?,
                (None, None) => return Err(usage("one of --perm or --path is required")),
            };
            let sigma = lucas_path_to_permutation(&p, n)?;
            (StepTable::from_path(&p)?, format!("circular permutation: {sigma}\n"))
        }
        CubeFamily::Lucas => {
            let p = match (perm, path) {
                (Some(s), _) => {
                    let sigma = parse_perm(&s)?;
                    if sigma.len() + 1 != n {
                        return Err(Error::InvalidPermutation(format!("{sigma} has length {}, expected {}", sigma.len(), n - 1)).into());
                    }
                    lucas_odd_permutation_to_path(&sigma, shift)?
                }
                (None, Some(s)) => parse_path(&s, n)?,
                (None, None) => return Err(usage("one of --perm or --path is required")),
            };
            let (shift, sigma) = lucas_odd_path_to_permutation(&p)?;
            (
                StepTable::from_path(&p)?,
                format!("pair: {shift}\npermutation (b1 of pair 1 removed): {sigma}\n"),
            )
        }
        CubeFamily::AlternateLucas => {
            let (p, kind) = match (perm, path) {
                (Some(s), _) => {
                    let kind: AlucasKind = kind
                        .as_deref()
                        .ok_or_else(|| usage("--kind is required with --perm for alternatelucas"))?
                        .parse()?;
                    let tail = match tail {
                        Some(t) => {
                            let pair = parse_perm_values(&t)?;
                            Some(pair)
                        }
                        None => None,
                    };
                    let code = AlucasCode {
                        kind,
                        tau: parse_perm(&s)?,
                        tail,
                        frozen_coord: if n >= 4 { kind.frozen_coord(n) } else { 0 },
                        reversed: n % 2 == 1,
                    };
                    (alucas_permutation_to_path(&code, n)?, kind)
                }
                (None, Some(s)) => {
                    let p = parse_path(&s, n)?;
                    let kind = AlucasKind::of_pair(p.start(), p.end()).ok_or_else(|| {
                        Error::InvalidPath("endpoints are not a diametral alternate Lucas pair".into())
                    })?;
                    (p, kind)
                }
                (None, None) => return Err(usage("one of --perm or --path is required")),
            };
            let code = alucas_path_to_permutation(&p, kind)?;
            let mut summary = format!("kind: {kind}\nfrozen: b{}\n", code.frozen_coord);
            if code.reversed {
                summary.push_str("steps read from v to u\n");
            }
            summary.push_str(&format!("tau: {}\n", code.tau));
            if let Some((hi, lo)) = code.tail {
                summary.push_str(&format!("tail: {hi},{lo}\n"));
            }
            (StepTable::from_path(&p)?, summary)
        }
    };
    Ok(format!("{}{summary}", table.render()))
}

fn parse_perm_values(s: &str) -> Result<(usize, usize), Failure> {
    let xs: Vec<usize> = s
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| Error::InvalidPermutation(format!("bad tail {s:?}")))?;
    match xs[..] {
        [hi, lo] => Ok((hi, lo)),
        _ => Err(Error::InvalidPermutation(format!("tail {s:?} needs two values")).into()),
    }
}
