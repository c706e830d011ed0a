//! `rdpcalc`: classify rational double points in characteristic p, rebuild
//! the length tables and run the verification suites.
//!
//! Exit status: 0 on success, 1 when a computed result disagrees with what
//! was checked, 2 on usage, parse or out-of-catalog errors.

mod report;
mod suite;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rdpcalc::derivations::{
    check_sl2_triple_mod, d_odd_derivations, stabilizes_ideal, verify_hilbert_burch,
    verify_jacobi_matrix_identity, Derivation, DerivationError,
};
use rdpcalc::ideals::{
    frobenius_power, jacobian_ideal, local_colength, min_generators, partials_ideal,
    truncation_colength, IdealError, IdealPresentation, Truncation,
};
use rdpcalc::rdp::{
    classify, invariants_of, table1, table2, Family, RdpError, RdpSpec, Table1Ranges, TABLE2,
};
use rdpcalc::ring::{Polynomial, Ring, RingError};

use report::{
    ColengthOut, DOddLine, DtypeOut, EquationRecord, HilbertBurchLine, MuOut, OracleOut, Output,
    RelationLine, Table1Line, Table2Line, TripleOut,
};
use suite::Sampling;

#[derive(Parser, Debug)]
#[command(
    name = "rdpcalc",
    version,
    about = "Tangent modules of rational double points in characteristic p"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (defaults to one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lengths, μ and the two flags for a catalog entry or an equation.
    Classify(ClassifyArgs),
    /// Qualitative freeness/surjectivity sweep.
    Table1(Table1Args),
    /// The populated E-type length cells.
    Table2(Table2Args),
    /// Local length of an ideal of A/(P).
    Colength(IdealArgs),
    /// Minimal number of generators of an ideal of A/(P).
    Mu(IdealArgs),
    /// Structure identities of sl₂(F_p) against the matrix model.
    #[command(name = "sl2-check")]
    Sl2Check(Sl2Args),
    /// sl₂ relations for three derivations on A/(P).
    #[command(name = "triple-check")]
    TripleCheck(TripleArgs),
    /// Hilbert–Burch minors and the δ-derivations of D-types at p = 2.
    #[command(name = "verify-dtype")]
    VerifyDtype(DtypeArgs),
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[arg(long = "char")]
    p: u32,
    #[arg(long, requires = "index", conflicts_with = "equation")]
    family: Option<Family>,
    #[arg(long)]
    index: Option<u32>,
    #[arg(long, default_value_t = 0)]
    coindex: u32,
    /// Classify an arbitrary isolated hypersurface instead of a catalog entry.
    #[arg(long)]
    equation: Option<String>,
    #[arg(long, default_value = "x,y,z", value_delimiter = ',')]
    vars: Vec<String>,
}

#[derive(Args, Debug)]
struct Table1Args {
    /// Characteristics to sweep.
    #[arg(long = "char", value_delimiter = ',', default_value = "2,3,5,7")]
    p: Vec<u32>,
    #[arg(long, default_value_t = 20)]
    a_max: u32,
    #[arg(long, default_value_t = 13)]
    d_max_char2: u32,
    #[arg(long, default_value_t = 10)]
    d_max_odd: u32,
    #[arg(long)]
    no_e: bool,
    /// Exit 1 unless every entry agrees with its row.
    #[arg(long)]
    check: bool,
}

#[derive(Args, Debug)]
struct Table2Args {
    /// Restrict to one characteristic.
    #[arg(long = "char")]
    p: Option<u32>,
    /// Exit 1 unless every cell matches the published values.
    #[arg(long)]
    check: bool,
}

#[derive(Args, Debug)]
struct IdealArgs {
    /// The hypersurface equation P.
    equation: String,
    #[arg(long = "char")]
    p: u32,
    #[arg(long, default_value = "x,y,z", value_delimiter = ',')]
    vars: Vec<String>,
    /// Generator of the ideal (repeatable); defaults to the partials of P.
    #[arg(long = "gen")]
    gens: Vec<String>,
    /// Use (P, ∂P/∂v for each v).
    #[arg(long, conflicts_with = "gens")]
    with_jacobian: bool,
    /// Replace every generator by its p-th power.
    #[arg(long)]
    frobenius: bool,
    /// Also run the truncation oracle up to this level and compare.
    #[arg(long)]
    oracle_cap: Option<u32>,
}

#[derive(Args, Debug)]
struct Sl2Args {
    #[arg(long = "char")]
    p: u32,
    /// Random samples; without it the check is exhaustive for p ≤ 5.
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

#[derive(Args, Debug)]
struct TripleArgs {
    #[arg(long = "char")]
    p: u32,
    #[arg(long, default_value = "x,y,z", value_delimiter = ',')]
    vars: Vec<String>,
    #[arg(long)]
    equation: String,
    /// Derivations as `var=coefficient; ...`, e.g. `x=-2*x; y=2*y`.
    #[arg(long, allow_hyphen_values = true)]
    h: String,
    #[arg(long, allow_hyphen_values = true)]
    e: String,
    #[arg(long, allow_hyphen_values = true)]
    f: String,
}

#[derive(Args, Debug)]
struct DtypeArgs {
    /// Only p = 2 is meaningful here.
    #[arg(long = "char", default_value_t = 2)]
    p: u32,
    /// Largest n for the D_{2n}^r and D_{2n+1}^r sweeps.
    #[arg(long, default_value_t = 5)]
    max_n: u32,
}

/// Failure classes, mapped to exit codes 1 and 2.
#[derive(Debug)]
enum CliError {
    Usage(String),
    Compute(String),
}

impl From<RingError> for CliError {
    fn from(e: RingError) -> Self {
        match e {
            RingError::AmbientMismatch | RingError::ZeroPolynomial => {
                CliError::Compute(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<RdpError> for CliError {
    fn from(e: RdpError) -> Self {
        match e {
            RdpError::OutOfCatalog(_) | RdpError::NotPrime(_) | RdpError::UnknownFamily(_) => {
                CliError::Usage(e.to_string())
            }
            RdpError::Ring(r) => r.into(),
            _ => CliError::Compute(e.to_string()),
        }
    }
}

impl From<IdealError> for CliError {
    fn from(e: IdealError) -> Self {
        match e {
            IdealError::CapTooSmall(_) => CliError::Usage(e.to_string()),
            _ => CliError::Compute(e.to_string()),
        }
    }
}

impl From<DerivationError> for CliError {
    fn from(e: DerivationError) -> Self {
        match e {
            DerivationError::Syntax(_)
            | DerivationError::Arity { .. }
            | DerivationError::OutOfRange(_) => CliError::Usage(e.to_string()),
            DerivationError::Ring(r) => r.into(),
            DerivationError::Rdp(r) => r.into(),
            _ => CliError::Compute(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: --jobs: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok((out, ok)) => {
            print!("{}", out.render(cli.format));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<(Output, bool), CliError> {
    match command {
        Command::Classify(a) => run_classify(a),
        Command::Table1(a) => run_table1(a),
        Command::Table2(a) => run_table2(a),
        Command::Colength(a) => run_colength(a),
        Command::Mu(a) => run_mu(a),
        Command::Sl2Check(a) => run_sl2(a),
        Command::TripleCheck(a) => run_triple(a),
        Command::VerifyDtype(a) => run_dtype(a),
    }
}

fn run_classify(a: ClassifyArgs) -> Result<(Output, bool), CliError> {
    if let Some(text) = a.equation {
        let ring = Ring::new(&a.vars, a.p)?;
        let equation = ring.parse(&text)?;
        let inv = invariants_of(&equation)?;
        let free = inv.len_ap == u64::from(a.p) * u64::from(a.p) * inv.len_a;
        return Ok((
            Output::Equation(EquationRecord {
                p: a.p,
                equation: equation.to_string(),
                len_a: inv.len_a,
                len_ap: inv.len_ap,
                mu: inv.mu,
                free,
                surjective: inv.mu < 3,
            }),
            true,
        ));
    }
    let (Some(family), Some(index)) = (a.family, a.index) else {
        return Err(CliError::Usage(
            "give --family and --index, or --equation".into(),
        ));
    };
    let spec = RdpSpec::new(family, index, a.coindex, a.p)?;
    Ok((Output::Records(vec![classify(&spec)?.record()]), true))
}

fn run_table1(a: Table1Args) -> Result<(Output, bool), CliError> {
    let ranges = Table1Ranges {
        primes: a.p,
        a_max: a.a_max,
        d_max_char2: a.d_max_char2,
        d_max_odd_char: a.d_max_odd,
        include_e: !a.no_e,
    };
    for &p in &ranges.primes {
        if !rdpcalc::ring::is_prime(p) {
            return Err(CliError::Usage(format!("--char: {p} is not a prime")));
        }
    }
    let lines: Vec<Table1Line> = table1(&ranges)?
        .into_iter()
        .map(|entry| Table1Line {
            row: entry.row,
            agrees: entry.agrees(),
            record: entry.report.record(),
        })
        .collect();
    let ok = !a.check || lines.iter().all(|l| l.agrees);
    if a.check {
        for l in lines.iter().filter(|l| !l.agrees) {
            eprintln!(
                "mismatch: {}{}^{} at p={} computed (free={}, surjective={}) against row {:?}",
                l.record.family,
                l.record.l,
                l.record.r,
                l.record.p,
                l.record.free,
                l.record.surjective,
                l.row
            );
        }
    }
    Ok((Output::Table1(lines), ok))
}

fn run_table2(a: Table2Args) -> Result<(Output, bool), CliError> {
    if let Some(p) = a.p {
        if !TABLE2.iter().any(|c| c.0 == p) {
            return Err(CliError::Usage(format!(
                "--char: no populated cells at p={p}"
            )));
        }
    }
    let lines: Vec<Table2Line> = table2()?
        .into_iter()
        .filter(|r| a.p.is_none_or(|p| r.spec.p == p))
        .map(|r| {
            let cell = TABLE2
                .iter()
                .find(|c| (c.0, c.1, c.2) == (r.spec.p, r.spec.index, r.spec.coindex))
                .expect("table2 returns table cells");
            Table2Line {
                matches: (cell.3, cell.4, cell.5) == (r.len_a, r.len_ap, r.mu),
                record: r.record(),
            }
        })
        .collect();
    let ok = !a.check || lines.iter().all(|l| l.matches);
    if a.check {
        for l in lines.iter().filter(|l| !l.matches) {
            eprintln!(
                "mismatch: E{}^{} at p={}",
                l.record.l, l.record.r, l.record.p
            );
        }
    }
    Ok((Output::Table2(lines), ok))
}

/// The ideal selected by the flags, in `A/(P)`.
fn build_ideal(a: &IdealArgs) -> Result<(Polynomial, IdealPresentation), CliError> {
    let ring = Ring::new(&a.vars, a.p)?;
    let equation = ring.parse(&a.equation)?;
    let ideal = if a.with_jacobian {
        jacobian_ideal(&equation)?
    } else if a.gens.is_empty() {
        partials_ideal(&equation)?
    } else {
        let gens = a
            .gens
            .iter()
            .map(|g| ring.parse(g))
            .collect::<Result<Vec<_>, _>>()?;
        IdealPresentation::new(&ring, gens, Some(equation.clone()))?
    };
    let ideal = if a.frobenius {
        frobenius_power(&ideal)
    } else {
        ideal
    };
    Ok((equation, ideal))
}

fn run_colength(a: IdealArgs) -> Result<(Output, bool), CliError> {
    let (equation, ideal) = build_ideal(&a)?;
    let length = local_colength(&ideal).finite();
    let (oracle, ok) = match a.oracle_cap {
        None => (None, true),
        Some(cap) => {
            let value = match truncation_colength(&ideal, cap)? {
                Truncation::Stable(n) => Some(n),
                Truncation::Unstable => None,
            };
            (Some(OracleOut { cap, length: value }), value == length)
        }
    };
    Ok((
        Output::Colength(ColengthOut {
            p: a.p,
            modulus: equation.to_string(),
            generators: ideal.gens().iter().map(ToString::to_string).collect(),
            length,
            oracle,
        }),
        ok,
    ))
}

fn run_mu(a: IdealArgs) -> Result<(Output, bool), CliError> {
    if a.oracle_cap.is_some() {
        return Err(CliError::Usage(
            "--oracle-cap applies to colength only".into(),
        ));
    }
    let (equation, ideal) = build_ideal(&a)?;
    Ok((
        Output::Mu(MuOut {
            p: a.p,
            modulus: equation.to_string(),
            generators: ideal.gens().iter().map(ToString::to_string).collect(),
            mu: min_generators(&ideal)?,
        }),
        true,
    ))
}

fn run_sl2(a: Sl2Args) -> Result<(Output, bool), CliError> {
    if !rdpcalc::ring::is_prime(a.p) || a.p > 1 << 15 {
        return Err(CliError::Usage(format!(
            "--char: {} is not a supported prime",
            a.p
        )));
    }
    let sampling = match a.samples {
        Some(samples) => Sampling::Random {
            samples,
            seed: a.seed,
        },
        None if a.p <= 5 => Sampling::Exhaustive,
        None => Sampling::Random {
            samples: 10_000,
            seed: a.seed,
        },
    };
    let summary = suite::run(a.p, sampling);
    let ok = summary.passed();
    Ok((Output::Sl2(summary), ok))
}

fn run_triple(a: TripleArgs) -> Result<(Output, bool), CliError> {
    let ring = Ring::new(&a.vars, a.p)?;
    let equation = ring.parse(&a.equation)?;
    let h = Derivation::parse(&ring, &a.h)?;
    let e = Derivation::parse(&ring, &a.e)?;
    let f = Derivation::parse(&ring, &a.f)?;
    let mut out = TripleOut {
        p: a.p,
        equation: equation.to_string(),
        h: h.to_string(),
        e: e.to_string(),
        f: f.to_string(),
        not_stabilizing: Vec::new(),
        relations: Vec::new(),
        holds: false,
    };
    match check_sl2_triple_mod(&equation, &h, &e, &f) {
        Ok(report) => {
            out.holds = report.holds();
            out.relations = report
                .relations
                .iter()
                .map(|(rel, ok)| RelationLine {
                    relation: rel.label().to_string(),
                    holds: *ok,
                })
                .collect();
        }
        Err(DerivationError::NotStabilized(_)) => {
            for (name, d) in [("h", &h), ("e", &e), ("f", &f)] {
                if !stabilizes_ideal(d, &equation)? {
                    out.not_stabilizing.push(name.to_string());
                }
            }
        }
        Err(other) => return Err(other.into()),
    }
    let ok = out.holds;
    Ok((Output::Triple(out), ok))
}

fn run_dtype(a: DtypeArgs) -> Result<(Output, bool), CliError> {
    if a.p != 2 {
        return Err(CliError::Usage(
            "--char: the D-type identities are stated for p = 2".into(),
        ));
    }
    if a.max_n < 2 {
        return Err(CliError::Usage("--max-n must be at least 2".into()));
    }
    let mut out = DtypeOut::default();
    for n in 2..=a.max_n {
        for r in 1..n {
            let spec = RdpSpec::d(2 * n, r, 2)?;
            let hb = verify_hilbert_burch(&spec)?;
            out.hilbert_burch.push(HilbertBurchLine {
                n,
                r,
                minors_match: hb.minors_match,
                entries_in_maximal_ideal: hb.entries_in_maximal_ideal,
                holds: hb.holds(),
            });
        }
        for r in 1..n {
            let spec = RdpSpec::d(2 * n + 1, r, 2)?;
            let (equation, deltas) = d_odd_derivations(&spec)?;
            let mut stabilizes = [false; 3];
            for (slot, d) in stabilizes.iter_mut().zip(&deltas) {
                *slot = stabilizes_ideal(d, &equation)?;
            }
            let jm = verify_jacobi_matrix_identity(&spec)?;
            out.d_odd.push(DOddLine {
                n,
                r,
                stabilizes,
                product_in_ideal: jm.product_in_ideal,
                matches_stated: jm.matches_stated(),
                holds: stabilizes.iter().all(|&b| b) && jm.holds(),
            });
        }
    }
    let ok = out.hilbert_burch.iter().all(|l| l.holds) && out.d_odd.iter().all(|l| l.holds);
    Ok((Output::Dtype(out), ok))
}
