//! Command line front end: prints the triangles, runs the identity
//! checkers over parameter boxes, and exposes the enumeration oracles,
//! constructive bijections and generating-function checks for spot runs.
//!
//! Exit codes: 0 all checks pass / output produced, 1 a check found a
//! counterexample (details on stdout), 2 usage error (details on stderr).

use std::collections::BTreeMap;
use std::fmt::Display;
use std::process;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use catalan_core::bijections::{dyck_split, phi_backward, phi_forward, PhiInput};
use catalan_core::exact::{catalan, int, rat, Int, Rat};
use catalan_core::identities::{self, VerificationReport, VerifyOptions};
use catalan_core::paths::{
    enumerate_motzkin, enumerate_partial_dyck, motzkin_flat_count_matrix, r_visible_up_steps,
    reverse_path, weight_from_flat_counts, LatticePath, Step,
};
use catalan_core::render::{render_reports, render_table, Format};
use catalan_core::series::{riordan_column_check, RiordanFamily};
use catalan_core::transforms::{AnyTable, DerivedKind};
use catalan_core::triangles::{ballot, MotzkinTable, Triangle};

#[derive(Parser)]
#[command(
    name = "catalan",
    version,
    about = "Exact tables, identity checks and path oracles for a family of Catalan-style triangles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one of the triangles
    Table(TableArgs),
    /// Check a single identity over a parameter box
    Verify(VerifyArgs),
    /// Check every registered identity over a parameter box
    VerifyAll(VerifyAllArgs),
    /// Recount table entries by explicit path enumeration
    Oracle(OracleArgs),
    /// Run a constructive bijection and confirm it round-trips
    Bijection(BijectionArgs),
    /// Compare triangle columns against their generating-function description
    Series(SeriesArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum TriangleArg {
    /// Ballot triangle
    #[value(name = "C")]
    C,
    /// Alternating-sum companion of the ballot triangle
    #[value(name = "B")]
    B,
    /// Odd-index ballot triangle
    #[value(name = "A")]
    A,
    /// Determinant transform of C
    #[value(name = "X")]
    X,
    /// Determinant transform of B
    #[value(name = "Y")]
    Y,
    /// Permanent transform of C
    #[value(name = "Z")]
    Z,
    /// Permanent transform of B
    #[value(name = "W")]
    W,
    /// Weighted path table; needs --x and --y
    #[value(name = "M")]
    M,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Ascii,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Ascii => Format::Ascii,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Args)]
struct TableArgs {
    /// Which triangle to print
    #[arg(long, value_enum)]
    triangle: TriangleArg,
    /// How many rows (rows 0 through N-1)
    #[arg(long, value_name = "N")]
    rows: i64,
    /// Weight of a flat step on the axis, as an integer or p/q fraction (M only)
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Weight of a flat step above the axis (M only)
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    #[arg(long, value_enum, default_value_t = FormatArg::Ascii)]
    format: FormatArg,
}

/// Box bounds shared by `verify` and `verify-all`. The defaults are the
/// desk-scale box every identity is expected to clear in well under a minute.
#[derive(Args)]
struct RangeArgs {
    /// Largest row index n
    #[arg(long, default_value_t = 25)]
    n_max: i64,
    /// Largest second row index m
    #[arg(long, default_value_t = 25)]
    m_max: i64,
    /// Cap on the column parameter l (defaults to its natural bound)
    #[arg(long)]
    l_max: Option<i64>,
    /// Smallest shift p
    #[arg(long, default_value_t = -5, allow_hyphen_values = true)]
    p_min: i64,
    /// Largest shift p
    #[arg(long, default_value_t = 5, allow_hyphen_values = true)]
    p_max: i64,
    /// Smallest lift r
    #[arg(long, default_value_t = -5, allow_hyphen_values = true)]
    r_min: i64,
    /// Largest lift r
    #[arg(long, default_value_t = 5, allow_hyphen_values = true)]
    r_max: i64,
}

impl RangeArgs {
    fn to_options(&self) -> VerifyOptions {
        VerifyOptions {
            n_max: self.n_max,
            m_max: self.m_max,
            l_max: self.l_max,
            p_min: self.p_min,
            p_max: self.p_max,
            r_min: self.r_min,
            r_max: self.r_max,
            ..VerifyOptions::default()
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity id; run `verify-all` to see the full list
    #[arg(long, value_name = "ID")]
    identity: String,
    #[command(flatten)]
    range: RangeArgs,
    #[arg(long, value_enum, default_value_t = FormatArg::Ascii)]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyAllArgs {
    #[command(flatten)]
    range: RangeArgs,
    #[arg(long, value_enum, default_value_t = FormatArg::Ascii)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleArg {
    /// Weighted path table against per-path weights at sample points
    Motzkin,
    /// Ballot numbers against partial Dyck path counts
    Ballot,
    /// Catalan numbers against full Dyck path counts
    Dyck,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    check: OracleArg,
    /// Largest path size to enumerate
    #[arg(long, value_name = "N", default_value_t = 8)]
    n_max: i64,
}

#[derive(Clone, Copy, ValueEnum)]
enum BijectionArg {
    /// Pairs lifted path pairs with single paths ending at level 1
    Phi,
    /// Cuts a Dyck path at its pivot step
    DyckSplit,
}

#[derive(Args)]
struct BijectionArgs {
    #[arg(long, value_enum)]
    which: BijectionArg,
    /// First size parameter
    #[arg(long, default_value_t = 1)]
    n: i64,
    /// Second size parameter
    #[arg(long, default_value_t = 1)]
    m: i64,
    /// Lift (phi only)
    #[arg(long, default_value_t = 1)]
    r: i64,
    /// Dump every pairing, one line each
    #[arg(long)]
    list: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesArg {
    /// Column k of each triangle against the product g(t) f(t)^k
    Riordan,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    check: SeriesArg,
    /// Truncation order of the power series
    #[arg(long, value_name = "N", default_value_t = 20)]
    order: usize,
    /// Check columns 0 through K
    #[arg(long, value_name = "K", default_value_t = 12)]
    k_max: usize,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Table(args) => run_table(args),
        Command::Verify(args) => run_verify(args),
        Command::VerifyAll(args) => run_verify_all(args),
        Command::Oracle(args) => match args.check {
            OracleArg::Motzkin => run_oracle_motzkin(args.n_max),
            OracleArg::Ballot => run_oracle_ballot(args.n_max),
            OracleArg::Dyck => run_oracle_dyck(args.n_max),
        },
        Command::Bijection(args) => match args.which {
            BijectionArg::Phi => run_phi(args.n, args.m, args.r, args.list),
            BijectionArg::DyckSplit => run_dyck_split(args.n, args.m, args.list),
        },
        Command::Series(args) => match args.check {
            SeriesArg::Riordan => run_riordan(args.order, args.k_max),
        },
    }
}

/// Accepts integer or `p/q` literals; decimals are deliberately rejected so
/// everything downstream stays exact.
fn parse_rat(flag: &str, text: &str) -> Result<Rat, String> {
    let err = || format!("--{flag}: expected an integer or p/q fraction, got {text:?}");
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num: Int = num.trim().parse().map_err(|_| err())?;
    let den: Int = den.trim().parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(format!("--{flag}: zero denominator in {text:?}"));
    }
    Ok(Rat::new(num, den))
}

fn run_table(args: TableArgs) -> Result<i32, String> {
    if args.rows < 0 {
        return Err(format!("--rows must be nonnegative, got {}", args.rows));
    }
    let table = match args.triangle {
        TriangleArg::M => {
            let (Some(x), Some(y)) = (&args.x, &args.y) else {
                return Err("triangle M needs both --x and --y".into());
            };
            let x = parse_rat("x", x)?;
            let y = parse_rat("y", y)?;
            AnyTable::Base(Triangle::motzkin(x, y))
        }
        other => {
            if args.x.is_some() || args.y.is_some() {
                return Err("--x and --y only apply to --triangle M".into());
            }
            AnyTable::Base(match other {
                TriangleArg::C => Triangle::Ballot,
                TriangleArg::B => Triangle::Shapiro,
                TriangleArg::A => Triangle::Admissible,
                TriangleArg::X => return finish_table(AnyTable::Derived(DerivedKind::X), &args),
                TriangleArg::Y => return finish_table(AnyTable::Derived(DerivedKind::Y), &args),
                TriangleArg::Z => return finish_table(AnyTable::Derived(DerivedKind::Z), &args),
                TriangleArg::W => return finish_table(AnyTable::Derived(DerivedKind::W), &args),
                TriangleArg::M => unreachable!(),
            })
        }
    };
    finish_table(table, &args)
}

fn finish_table(table: AnyTable, args: &TableArgs) -> Result<i32, String> {
    println!("{}", render_table(&table, args.rows, args.format.into()));
    Ok(0)
}

fn run_verify(args: VerifyArgs) -> Result<i32, String> {
    let report = identities::verify(&args.identity, &args.range.to_options())
        .map_err(|e| e.to_string())?;
    let code = exit_code_for(std::slice::from_ref(&report));
    println!("{}", render_reports(&[report], args.format.into()));
    Ok(code)
}

fn run_verify_all(args: VerifyAllArgs) -> Result<i32, String> {
    let reports = identities::verify_all(&args.range.to_options());
    let code = exit_code_for(&reports);
    println!("{}", render_reports(&reports, args.format.into()));
    Ok(code)
}

/// 1 exactly when some report carries a counterexample.
fn exit_code_for(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(|r| r.pass) {
        0
    } else {
        1
    }
}

fn fail_line(what: &str, place: impl Display, lhs: impl Display, rhs: impl Display) -> i32 {
    println!("{what}: FAIL at {place}");
    println!("  enumerated = {lhs}");
    println!("  tabled     = {rhs}");
    1
}

/// Weighted table vs. a flat-statistic census of the actual paths, evaluated
/// at a spread of sample points (degenerate, the three specializations used
/// elsewhere, a negative weight, and a non-integer pair).
fn run_oracle_motzkin(n_max: i64) -> Result<i32, String> {
    if n_max < 0 {
        return Err(format!("--n-max must be nonnegative, got {n_max}"));
    }
    let points = [
        (rat(0), rat(0)),
        (rat(1), rat(1)),
        (rat(2), rat(2)),
        (rat(1), rat(2)),
        (rat(-1), rat(3)),
        (Rat::new(int(1), int(2)), Rat::new(int(1), int(3))),
    ];
    let tables: Vec<MotzkinTable> = points
        .iter()
        .map(|(x, y)| MotzkinTable::new(x.clone(), y.clone()))
        .collect();
    let mut cells = 0u64;
    for n in 0..=n_max {
        for k in 0..=n {
            let cnt = motzkin_flat_count_matrix(n, k);
            for ((x, y), table) in points.iter().zip(&tables) {
                let enumerated = weight_from_flat_counts(&cnt, x, y);
                let tabled = table.entry(n, k);
                if enumerated != tabled {
                    return Ok(fail_line(
                        "motzkin",
                        format!("n={n} k={k} x={x} y={y}"),
                        enumerated,
                        tabled,
                    ));
                }
            }
            cells += 1;
        }
    }
    println!("motzkin: {cells} cells at {} sample points, pass", points.len());
    Ok(0)
}

fn run_oracle_ballot(n_max: i64) -> Result<i32, String> {
    if n_max < 0 {
        return Err(format!("--n-max must be nonnegative, got {n_max}"));
    }
    let mut cells = 0u64;
    for n in 0..=n_max {
        for k in 0..=n {
            let enumerated = Int::from(enumerate_partial_dyck(n, k).len());
            let tabled = ballot(n, k);
            if enumerated != tabled {
                return Ok(fail_line("ballot", format!("n={n} k={k}"), enumerated, tabled));
            }
            cells += 1;
        }
    }
    println!("ballot: {cells} cells recounted by enumeration, pass");
    Ok(0)
}

fn run_oracle_dyck(n_max: i64) -> Result<i32, String> {
    if n_max < 0 {
        return Err(format!("--n-max must be nonnegative, got {n_max}"));
    }
    for n in 0..=n_max {
        let enumerated = Int::from(enumerate_partial_dyck(n, 0).len());
        let tabled = catalan(n);
        if enumerated != tabled {
            return Ok(fail_line("dyck", format!("n={n}"), enumerated, tabled));
        }
    }
    println!("dyck: sizes 0..={n_max} recounted by enumeration, pass");
    Ok(0)
}

fn show_path(p: &LatticePath) -> String {
    if p.is_empty() {
        "-".into()
    } else {
        p.to_string()
    }
}

fn run_phi(n: i64, m: i64, r: i64, list: bool) -> Result<i32, String> {
    if n < 0 || m < 0 || r < 0 {
        return Err(format!("phi needs n, m, r >= 0, got ({n}, {m}, {r})"));
    }
    let mut inputs: Vec<PhiInput> = Vec::new();
    let mut first_count = 0u64;
    for k in 0.. {
        if k + 1 > n + r || k > m {
            break;
        }
        for p in enumerate_motzkin(n + r, k + 1) {
            for q in enumerate_motzkin(m, k) {
                inputs.push(PhiInput::LiftedFirst { p: p.clone(), q });
                first_count += 1;
            }
        }
    }
    let mut second_count = 0u64;
    let mut excluded = 0u64;
    for k in 0.. {
        if k > n || k + 1 > m + r {
            break;
        }
        for p in enumerate_motzkin(n, k) {
            for q in enumerate_motzkin(m + r, k + 1) {
                // membership: the last R-visible up step of the lifted
                // component must have at least r steps before it
                if (*r_visible_up_steps(&q).last().expect("ends above the axis") as i64) >= r {
                    inputs.push(PhiInput::LiftedSecond { p: p.clone(), q });
                    second_count += 1;
                } else {
                    excluded += 1;
                }
            }
        }
    }

    let mut seen: BTreeMap<LatticePath, PhiInput> = BTreeMap::new();
    for input in inputs {
        let target = phi_forward(&input, n, m, r).map_err(|e| e.to_string())?;
        let (p, q) = match &input {
            PhiInput::LiftedFirst { p, q } | PhiInput::LiftedSecond { p, q } => (p, q),
        };
        let flats = |l: &LatticePath| {
            let (a, b) = l.flat_counts();
            a + b
        };
        if flats(p) + flats(q) != flats(&target) {
            return Ok(fail_line(
                "phi",
                format!("flat count not preserved for ({}, {})", show_path(p), show_path(q)),
                flats(p) + flats(q),
                flats(&target),
            ));
        }
        let back = phi_backward(&target, n, m, r).map_err(|e| e.to_string())?;
        if back != input {
            return Ok(fail_line(
                "phi",
                format!("round trip through {target}"),
                format!("({}, {})", show_path(p), show_path(q)),
                "a different pair",
            ));
        }
        if let Some(prev) = seen.insert(target.clone(), input) {
            let (pp, pq) = match &prev {
                PhiInput::LiftedFirst { p, q } | PhiInput::LiftedSecond { p, q } => (p, q),
            };
            return Ok(fail_line(
                "phi",
                format!("two pairs map to {target}"),
                format!("({}, {})", show_path(pp), show_path(pq)),
                "another pair",
            ));
        }
    }
    let targets = enumerate_motzkin(n + m + r, 1);
    if seen.len() as u64 != targets.len() as u64 {
        return Ok(fail_line(
            "phi",
            format!("(n, m, r) = ({n}, {m}, {r})"),
            format!("{} pairs", seen.len()),
            format!("{} target paths", targets.len()),
        ));
    }
    if list {
        for (target, input) in &seen {
            let (side, p, q) = match input {
                PhiInput::LiftedFirst { p, q } => ("first-lifted", p, q),
                PhiInput::LiftedSecond { p, q } => ("second-lifted", p, q),
            };
            println!("{side} ({}, {}) -> {}", show_path(p), show_path(q), show_path(target));
        }
    }
    println!(
        "phi: {first_count} + {second_count} pairs <-> {} target paths \
         ({excluded} excluded) at (n, m, r) = ({n}, {m}, {r}), pass",
        targets.len()
    );
    Ok(0)
}

fn run_dyck_split(n: i64, m: i64, list: bool) -> Result<i32, String> {
    if n < 0 || m < 0 {
        return Err(format!("dyck-split needs n, m >= 0, got ({n}, {m})"));
    }
    let paths = enumerate_partial_dyck(n + m + 1, 0);
    let (mut up, mut down) = (0u64, 0u64);
    for p in &paths {
        let split = dyck_split(p, n).map_err(|e| e.to_string())?;
        let mut rebuilt = split.first.clone();
        rebuilt.0.push(split.pivot);
        rebuilt = rebuilt.concat(&reverse_path(&split.second_reversed));
        if &rebuilt != p {
            return Ok(fail_line("dyck-split", format!("reassembling {p}"), rebuilt, p));
        }
        match split.pivot {
            Step::Up => up += 1,
            Step::Down => down += 1,
            Step::Flat => unreachable!("Dyck paths have no flat steps"),
        }
        if list {
            println!(
                "{p}  pivot={} k={} first={} second={}",
                split.pivot.to_char(),
                split.k,
                show_path(&split.first),
                show_path(&split.second_reversed)
            );
        }
    }
    let total = Int::from(up + down);
    let expected = catalan(n + m + 1);
    if total != expected {
        return Ok(fail_line("dyck-split", format!("(n, m) = ({n}, {m})"), total, expected));
    }
    println!(
        "dyck-split: {} paths of length {}, pivot up {up} / down {down}, pass",
        paths.len(),
        2 * (n + m + 1)
    );
    Ok(0)
}

fn run_riordan(order: usize, k_max: usize) -> Result<i32, String> {
    let families = [
        ("C", RiordanFamily::Ballot),
        ("B", RiordanFamily::Shapiro),
        ("A", RiordanFamily::Admissible),
    ];
    for (letter, family) in families {
        for k in 0..=k_max {
            if !riordan_column_check(family, k, order) {
                return Ok(fail_line(
                    "riordan",
                    format!("triangle {letter} column {k} at order {order}"),
                    "column series",
                    "g(t) f(t)^k",
                ));
            }
        }
        println!("riordan {letter}: columns 0..={k_max} at order {order}, pass");
    }
    Ok(0)
}
