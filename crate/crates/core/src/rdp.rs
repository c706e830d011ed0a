//! The ADE catalog in characteristic p and the two classification predicates.
//!
//! For an equation `P` with Jacobian ideal 𝔞 = (P_x, P_y, P_z) in
//! `R = k[x,y,z]_loc/(P)`:
//!
//! * the tangent module is free iff `ℓ(R/𝔞^{[p]}) = p²·ℓ(R/𝔞)`,
//! * the evaluation pairing is surjective iff `μ(𝔞) < 3`.
//!
//! E-type forms with an upper index at p ∈ {2, 3, 5} follow Artin's list and
//! are checked against [`TABLE2`] the first time they are requested.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ideals::{frobenius_power, local_colength, min_generators, partials_ideal, IdealError};
use crate::ring::{is_prime, Polynomial, Ring, RingError};
use crate::stdbasis::Colength;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RdpError {
    #[error("{0} is outside the catalog")]
    OutOfCatalog(RdpSpec),
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("transcribed equation for {spec} gives {got:?}, expected {want:?}")]
    TranscriptionMismatch {
        spec: RdpSpec,
        got: Invariants,
        want: Invariants,
    },
    #[error("length of R/𝔞 or R/𝔞^[p] is infinite; the singularity is not isolated")]
    NotIsolated,
    #[error("{0}: surjective pairing without free tangent module")]
    InconsistentFlags(RdpSpec),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        })
    }
}

impl FromStr for Family {
    type Err = RdpError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(Family::A),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            other => Err(RdpError::UnknownFamily(other.to_string())),
        }
    }
}

/// A Dynkin type `X_l^r` in characteristic `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RdpSpec {
    pub p: u32,
    pub family: Family,
    pub index: u32,
    pub coindex: u32,
}

impl fmt::Display for RdpSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}^{} (p={})",
            self.family, self.index, self.coindex, self.p
        )
    }
}

/// Largest legal E coindex at a small prime; `None` for blank table columns.
fn e_max_coindex(l: u32, p: u32) -> Option<u32> {
    match (p, l) {
        (2, 6) => Some(1),
        (2, 7) => Some(3),
        (2, 8) => Some(4),
        (3, 6) | (3, 7) => Some(1),
        (3, 8) => Some(2),
        (5, 6) | (5, 7) => Some(0),
        (5, 8) => Some(1),
        (_, 6..=8) => Some(0),
        _ => None,
    }
}

impl RdpSpec {
    /// Validates a catalog entry.
    pub fn new(family: Family, index: u32, coindex: u32, p: u32) -> Result<Self, RdpError> {
        if !is_prime(p) {
            return Err(RdpError::NotPrime(p));
        }
        let spec = RdpSpec {
            p,
            family,
            index,
            coindex,
        };
        let ok = match family {
            Family::A => index >= 1 && coindex == 0,
            Family::D if p == 2 => index >= 4 && coindex < index / 2,
            Family::D => index >= 4 && coindex == 0,
            Family::E => e_max_coindex(index, p).is_some_and(|m| coindex <= m),
        };
        if ok {
            Ok(spec)
        } else {
            Err(RdpError::OutOfCatalog(spec))
        }
    }

    pub fn a(l: u32, p: u32) -> Result<Self, RdpError> {
        Self::new(Family::A, l, 0, p)
    }

    pub fn d(l: u32, r: u32, p: u32) -> Result<Self, RdpError> {
        Self::new(Family::D, l, r, p)
    }

    pub fn e(l: u32, r: u32, p: u32) -> Result<Self, RdpError> {
        Self::new(Family::E, l, r, p)
    }

    /// Every legal coindex for a family and index at `p`.
    pub fn all_coindices(family: Family, index: u32, p: u32) -> Vec<RdpSpec> {
        (0..=index)
            .filter_map(|r| RdpSpec::new(family, index, r, p).ok())
            .collect()
    }
}

/// The triple (ℓ₁, ℓ_p, μ).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Invariants {
    pub len_a: u64,
    pub len_ap: u64,
    pub mu: usize,
}

/// Populated cells of the E-type length table: (p, l, r, ℓ₁, ℓ_p, μ).
pub const TABLE2: [(u32, u32, u32, u64, u64, usize); 22] = [
    (2, 6, 0, 8, 32, 2),
    (2, 6, 1, 6, 28, 3),
    (2, 7, 0, 14, 56, 2),
    (2, 7, 1, 12, 48, 3),
    (2, 7, 2, 10, 40, 3),
    (2, 7, 3, 8, 35, 3),
    (2, 8, 0, 16, 64, 2),
    (2, 8, 1, 14, 56, 3),
    (2, 8, 2, 12, 48, 3),
    (2, 8, 3, 10, 44, 3),
    (2, 8, 4, 8, 37, 3),
    (3, 6, 0, 9, 81, 2),
    (3, 6, 1, 7, 71, 3),
    (3, 7, 0, 9, 81, 2),
    (3, 7, 1, 7, 75, 3),
    (3, 8, 0, 12, 108, 2),
    (3, 8, 1, 10, 99, 3),
    (3, 8, 2, 8, 85, 3),
    (5, 6, 0, 6, 173, 3),
    (5, 7, 0, 7, 198, 3),
    (5, 8, 0, 10, 250, 2),
    (5, 8, 1, 8, 239, 3),
];

fn table2_cell(spec: &RdpSpec) -> Option<Invariants> {
    TABLE2
        .iter()
        .find(|c| spec.family == Family::E && (c.0, c.1, c.2) == (spec.p, spec.index, spec.coindex))
        .map(|c| Invariants {
            len_a: c.3,
            len_ap: c.4,
            mu: c.5,
        })
}

fn e_equation_text(l: u32, r: u32, p: u32) -> String {
    let base = match l {
        6 if p == 2 => "z^2 + x^3 + y^2*z",
        6 => "z^2 + x^3 + y^4",
        7 => "z^2 + x^3 + x*y^3",
        _ => "z^2 + x^3 + y^5",
    };
    let extra = match (p, l, r) {
        (_, _, 0) => "",
        (2, 6, 1) => "x*y*z",
        (2, 7, 1) => "x^2*y*z",
        (2, 7, 2) => "y^3*z",
        (2, 7, 3) => "x*y*z",
        (2, 8, 1) => "x*y^3*z",
        (2, 8, 2) => "x*y^2*z",
        (2, 8, 3) => "y^3*z",
        (2, 8, 4) => "x*y*z",
        (3, 6, 1) | (3, 7, 1) | (3, 8, 2) => "x^2*y^2",
        (3, 8, 1) => "x^2*y^3",
        (5, 8, 1) => "x*y^4",
        _ => unreachable!("coindex validated by RdpSpec::new"),
    };
    if extra.is_empty() {
        base.to_string()
    } else {
        format!("{base} + {extra}")
    }
}

fn equation_text(spec: &RdpSpec) -> String {
    let (l, r) = (spec.index, spec.coindex);
    match spec.family {
        Family::A => format!("z^{} - x*y", l + 1),
        Family::D if spec.p != 2 => format!("z^2 + x^2*y + x*y^{}", l - 1),
        Family::D => {
            let n = l / 2;
            let head = if l % 2 == 0 {
                format!("z^2 + x^2*y + x*y^{n}")
            } else {
                format!("z^2 + x^2*y + y^{n}*z")
            };
            if r == 0 {
                head
            } else {
                format!("{head} + x*y^{}*z", n - r)
            }
        }
        Family::E => e_equation_text(l, r, spec.p),
    }
}

fn raw_equation(spec: &RdpSpec) -> Result<Polynomial, RdpError> {
    let spec = RdpSpec::new(spec.family, spec.index, spec.coindex, spec.p)?;
    Ok(Ring::xyz(spec.p)?.parse(&equation_text(&spec))?)
}

/// Invariants of every E-type equation validated so far.
fn validated_cells() -> &'static Mutex<HashMap<RdpSpec, Invariants>> {
    static CELLS: OnceLock<Mutex<HashMap<RdpSpec, Invariants>>> = OnceLock::new();
    CELLS.get_or_init(Default::default)
}

/// The normal-form equation of `spec` over F_p in variables x, y, z.
pub fn catalog_equation(spec: &RdpSpec) -> Result<Polynomial, RdpError> {
    let equation = raw_equation(spec)?;
    if let Some(want) = table2_cell(spec) {
        let known = validated_cells()
            .lock()
            .expect("poisoned")
            .get(spec)
            .copied();
        if known.is_none() {
            let got = invariants_of(&equation)?;
            if got != want {
                return Err(RdpError::TranscriptionMismatch {
                    spec: *spec,
                    got,
                    want,
                });
            }
            validated_cells()
                .lock()
                .expect("poisoned")
                .insert(*spec, got);
        }
    }
    Ok(equation)
}

/// (ℓ₁, ℓ_p, μ) of an arbitrary isolated hypersurface equation.
pub fn invariants_of(equation: &Polynomial) -> Result<Invariants, RdpError> {
    let a = partials_ideal(equation)?;
    let len = |c: Colength| c.finite();
    let (len_a, len_ap) = match (
        len(local_colength(&a)),
        len(local_colength(&frobenius_power(&a))),
    ) {
        (Some(x), Some(y)) => (x, y),
        _ => return Err(RdpError::NotIsolated),
    };
    Ok(Invariants {
        len_a,
        len_ap,
        mu: min_generators(&a)?,
    })
}

/// Computed invariants and flags of one catalog entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RdpReport {
    pub spec: RdpSpec,
    pub equation: Polynomial,
    pub len_a: u64,
    pub len_ap: u64,
    pub mu: usize,
    pub free: bool,
    pub surjective: bool,
}

/// Flat, serialisable view of an [`RdpReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RdpRecord {
    pub p: u32,
    pub family: Family,
    pub l: u32,
    pub r: u32,
    pub equation: String,
    pub len_a: u64,
    pub len_ap: u64,
    pub mu: usize,
    pub free: bool,
    pub surjective: bool,
}

pub const CSV_HEADER: &str = "p,family,l,r,len_a,len_ap,mu,free,surjective";

impl RdpRecord {
    /// One line under [`CSV_HEADER`].
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.p,
            self.family,
            self.l,
            self.r,
            self.len_a,
            self.len_ap,
            self.mu,
            self.free,
            self.surjective
        )
    }
}

impl RdpReport {
    pub fn invariants(&self) -> Invariants {
        Invariants {
            len_a: self.len_a,
            len_ap: self.len_ap,
            mu: self.mu,
        }
    }

    pub fn record(&self) -> RdpRecord {
        RdpRecord {
            p: self.spec.p,
            family: self.spec.family,
            l: self.spec.index,
            r: self.spec.coindex,
            equation: self.equation.to_string(),
            len_a: self.len_a,
            len_ap: self.len_ap,
            mu: self.mu,
            free: self.free,
            surjective: self.surjective,
        }
    }

    pub fn csv_row(&self) -> String {
        self.record().csv_row()
    }
}

/// Full report; the flags are derived from the three lengths.
pub fn classify(spec: &RdpSpec) -> Result<RdpReport, RdpError> {
    let equation = catalog_equation(spec)?;
    let cached = validated_cells()
        .lock()
        .expect("poisoned")
        .get(spec)
        .copied();
    let inv = match cached {
        Some(inv) => inv,
        None => invariants_of(&equation)?,
    };
    let p2 = u64::from(spec.p) * u64::from(spec.p);
    let free = inv.len_ap == p2 * inv.len_a;
    let surjective = inv.mu < 3;
    if surjective && !free {
        return Err(RdpError::InconsistentFlags(*spec));
    }
    Ok(RdpReport {
        spec: *spec,
        equation,
        len_a: inv.len_a,
        len_ap: inv.len_ap,
        mu: inv.mu,
        free,
        surjective,
    })
}

pub fn tangent_module_free(spec: &RdpSpec) -> Result<bool, RdpError> {
    Ok(classify(spec)?.free)
}

pub fn pairing_surjective(spec: &RdpSpec) -> Result<bool, RdpError> {
    Ok(classify(spec)?.surjective)
}

/// Every populated cell of the E-type length table, in table order.
pub fn table2() -> Result<Vec<RdpReport>, RdpError> {
    let specs: Vec<RdpSpec> = TABLE2
        .iter()
        .map(|c| RdpSpec::e(c.1, c.2, c.0))
        .collect::<Result<_, _>>()?;
    classify_all(&specs)
}

/// Classifies in parallel; output keeps the input order.
pub fn classify_all(specs: &[RdpSpec]) -> Result<Vec<RdpReport>, RdpError> {
    specs.par_iter().map(classify).collect()
}

/// Rows of the qualitative table, plus a catch-all for unlisted types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Table1Row {
    /// A_l with l ≡ −1 mod p.
    AMinusOne,
    /// D_{2n}^0 and D_{2n+1}^0 at p = 2.
    DZero,
    /// D_{2n}^r, 1 ≤ r ≤ n−1, at p = 2.
    DEvenPositive,
    /// D_{2n+1}^r, 1 ≤ r ≤ n−1, at p = 2.
    DOddPositive,
    /// E_8^0 at p = 2, 3, 5.
    E8Zero,
    /// E_6^0 and E_7^0 at p = 2, 3.
    E67Zero,
    /// E_6^1, E_7^1, E_8^1, E_8^2 at p = 2.
    EPositive,
    /// Every type not listed: neither property holds.
    Unlisted,
}

impl Table1Row {
    pub fn of(spec: &RdpSpec) -> Table1Row {
        let (p, l, r) = (spec.p, spec.index, spec.coindex);
        match spec.family {
            Family::A if (l + 1) % p == 0 => Table1Row::AMinusOne,
            Family::D if p == 2 && r == 0 => Table1Row::DZero,
            Family::D if p == 2 && l % 2 == 0 => Table1Row::DEvenPositive,
            Family::D if p == 2 => Table1Row::DOddPositive,
            Family::E if l == 8 && r == 0 && p <= 5 => Table1Row::E8Zero,
            Family::E if l < 8 && r == 0 && p <= 3 => Table1Row::E67Zero,
            Family::E if p == 2 && matches!((l, r), (6, 1) | (7, 1) | (8, 1) | (8, 2)) => {
                Table1Row::EPositive
            }
            _ => Table1Row::Unlisted,
        }
    }

    /// The (free, surjective) pair the row asserts.
    pub fn expected(self) -> (bool, bool) {
        match self {
            Table1Row::AMinusOne | Table1Row::DZero | Table1Row::E8Zero | Table1Row::E67Zero => {
                (true, true)
            }
            Table1Row::DEvenPositive | Table1Row::EPositive => (true, false),
            Table1Row::DOddPositive | Table1Row::Unlisted => (false, false),
        }
    }
}

/// Index bounds for a qualitative sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Ranges {
    pub primes: Vec<u32>,
    /// A_l for 1 ≤ l ≤ a_max.
    pub a_max: u32,
    /// D_l for 4 ≤ l ≤ d_max_even_char at p = 2, all coindices.
    pub d_max_char2: u32,
    /// D_l for 4 ≤ l ≤ d_max_odd_char at odd p.
    pub d_max_odd_char: u32,
    pub include_e: bool,
}

impl Default for Table1Ranges {
    fn default() -> Self {
        Table1Ranges {
            primes: vec![2, 3, 5, 7],
            a_max: 20,
            d_max_char2: 13,
            d_max_odd_char: 10,
            include_e: true,
        }
    }
}

impl Table1Ranges {
    pub fn specs(&self) -> Vec<RdpSpec> {
        let mut out = Vec::new();
        for &p in &self.primes {
            out.extend((1..=self.a_max).filter_map(|l| RdpSpec::a(l, p).ok()));
            let d_max = if p == 2 {
                self.d_max_char2
            } else {
                self.d_max_odd_char
            };
            for l in 4..=d_max {
                out.extend(RdpSpec::all_coindices(Family::D, l, p));
            }
            if self.include_e {
                for l in 6..=8 {
                    out.extend(RdpSpec::all_coindices(Family::E, l, p));
                }
            }
        }
        out
    }
}

/// One classified entry of the qualitative table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Entry {
    pub row: Table1Row,
    pub report: RdpReport,
}

impl Table1Entry {
    /// Whether the computed flags agree with the row's assertion.
    pub fn agrees(&self) -> bool {
        (self.report.free, self.report.surjective) == self.row.expected()
    }
}

/// Classifies every spec in range, grouped by qualitative row.
pub fn table1(ranges: &Table1Ranges) -> Result<Vec<Table1Entry>, RdpError> {
    let reports = classify_all(&ranges.specs())?;
    let mut entries: Vec<Table1Entry> = reports
        .into_iter()
        .map(|report| Table1Entry {
            row: Table1Row::of(&report.spec),
            report,
        })
        .collect();
    entries.sort_by_key(|e| (e.row, e.report.spec));
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equations() {
        let a3 = catalog_equation(&RdpSpec::a(3, 2).unwrap()).unwrap();
        assert_eq!(a3, Ring::xyz(2).unwrap().parse("z^4 - x*y").unwrap());
        let d9 = catalog_equation(&RdpSpec::d(9, 1, 2).unwrap()).unwrap();
        assert_eq!(
            d9,
            Ring::xyz(2)
                .unwrap()
                .parse("z^2 + x^2*y + y^4*z + x*y^3*z")
                .unwrap()
        );
        let d8 = catalog_equation(&RdpSpec::d(8, 2, 2).unwrap()).unwrap();
        assert_eq!(
            d8.to_string(),
            Ring::xyz(2)
                .unwrap()
                .parse("z^2 + x^2*y + x*y^4 + x*y^2*z")
                .unwrap()
                .to_string()
        );
        let d5 = catalog_equation(&RdpSpec::d(5, 0, 3).unwrap()).unwrap();
        assert_eq!(
            d5,
            Ring::xyz(3).unwrap().parse("z^2 + x^2*y + x*y^4").unwrap()
        );
    }

    #[test]
    fn catalog_bounds() {
        assert!(RdpSpec::d(8, 1, 3).is_err());
        assert!(RdpSpec::d(8, 3, 2).is_ok());
        assert!(RdpSpec::d(8, 4, 2).is_err());
        assert!(RdpSpec::d(9, 3, 2).is_ok());
        assert!(RdpSpec::e(7, 1, 5).is_err());
        assert!(RdpSpec::e(8, 1, 5).is_ok());
        assert!(RdpSpec::e(6, 1, 7).is_err());
        assert!(RdpSpec::e(9, 0, 7).is_err());
        assert!(RdpSpec::a(0, 7).is_err());
        assert_eq!(RdpSpec::a(3, 4), Err(RdpError::NotPrime(4)));
        assert_eq!(RdpSpec::all_coindices(Family::E, 8, 2).len(), 5);
        assert_eq!("E".parse::<Family>().unwrap(), Family::E);
    }

    #[test]
    fn e8_at_five() {
        let spec = RdpSpec::e(8, 0, 5).unwrap();
        let r = classify(&spec).unwrap();
        assert_eq!((r.len_a, r.len_ap, r.mu), (10, 250, 2));
        assert!(r.free && r.surjective);
        assert!(!tangent_module_free(&RdpSpec::e(6, 0, 5).unwrap()).unwrap());
    }

    #[test]
    fn small_a_and_d() {
        let a1 = classify(&RdpSpec::a(1, 2).unwrap()).unwrap();
        assert!(a1.free && a1.surjective);
        assert!(pairing_surjective(&RdpSpec::a(2, 3).unwrap()).unwrap());
        assert!(!pairing_surjective(&RdpSpec::d(6, 1, 2).unwrap()).unwrap());
        let d9 = classify(&RdpSpec::d(9, 2, 2).unwrap()).unwrap();
        assert_eq!(d9.len_a, 12);
        assert!(!d9.free && !d9.surjective);
    }

    #[test]
    fn table1_rows() {
        assert_eq!(
            Table1Row::of(&RdpSpec::a(5, 3).unwrap()),
            Table1Row::AMinusOne
        );
        assert_eq!(
            Table1Row::of(&RdpSpec::a(4, 3).unwrap()),
            Table1Row::Unlisted
        );
        assert_eq!(
            Table1Row::of(&RdpSpec::d(9, 0, 2).unwrap()),
            Table1Row::DZero
        );
        assert_eq!(
            Table1Row::of(&RdpSpec::e(8, 2, 2).unwrap()),
            Table1Row::EPositive
        );
        assert_eq!(
            Table1Row::of(&RdpSpec::e(7, 2, 2).unwrap()),
            Table1Row::Unlisted
        );
        assert_eq!(Table1Row::EPositive.expected(), (true, false));
    }

    #[test]
    fn record_csv() {
        let r = classify(&RdpSpec::e(8, 4, 2).unwrap()).unwrap();
        assert_eq!(r.csv_row(), "2,E,8,4,8,37,3,false,false");
        assert_eq!(r.record().equation, r.equation.to_string());
    }

    fn csv(reports: impl Iterator<Item = RdpReport>) -> String {
        let mut out = format!("{CSV_HEADER}\n");
        for r in reports {
            out.push_str(&r.csv_row());
            out.push('\n');
        }
        out
    }

    #[test]
    fn golden_tables() {
        let t1 = table1(&Table1Ranges::default()).unwrap();
        assert_eq!(
            csv(t1.into_iter().map(|e| e.report)),
            include_str!("../golden/table1.csv")
        );
        assert_eq!(
            csv(table2().unwrap().into_iter()),
            include_str!("../golden/table2.csv")
        );
    }

    #[test]
    fn d_type_law_in_characteristic_two() {
        for l in 4..=13 {
            for spec in RdpSpec::all_coindices(Family::D, l, 2) {
                let r = classify(&spec).unwrap();
                assert_eq!(r.free, spec.coindex == 0 || l % 2 == 0, "{spec:?}");
                assert_eq!(r.surjective, spec.coindex == 0, "{spec:?}");
            }
        }
    }

    #[test]
    fn a_type_law() {
        for p in [2, 3, 5, 7, 11] {
            for l in 1..=30 {
                let r = classify(&RdpSpec::a(l, p).unwrap()).unwrap();
                let expected = (l + 1) % p == 0;
                assert_eq!(
                    (r.free, r.surjective),
                    (expected, expected),
                    "A_{l} at p={p}"
                );
            }
        }
        for (p, n) in [(2u32, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (5, 2)] {
            let r = classify(&RdpSpec::a(p.pow(n) - 1, p).unwrap()).unwrap();
            assert!(r.free && r.surjective, "A_{{{p}^{n}-1}}");
        }
    }

    #[test]
    fn surjective_implies_free() {
        for r in table1(&Table1Ranges::default()).unwrap() {
            assert!(!r.report.surjective || r.report.free, "{:?}", r.report.spec);
        }
    }
}
