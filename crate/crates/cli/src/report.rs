//! Result records of every verb and their text, JSON and CSV renderings.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use rdpcalc::rdp::{RdpRecord, Table1Row, CSV_HEADER};

use crate::suite::{Sampling, Sl2Summary};
use crate::Format;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquationRecord {
    pub p: u32,
    pub equation: String,
    pub len_a: u64,
    pub len_ap: u64,
    pub mu: usize,
    pub free: bool,
    pub surjective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Table1Line {
    pub row: Table1Row,
    pub record: RdpRecord,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Table2Line {
    pub record: RdpRecord,
    pub matches: bool,
}

/// `length: None` means infinite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColengthOut {
    pub p: u32,
    pub modulus: String,
    pub generators: Vec<String>,
    pub length: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleOut>,
}

/// Truncation oracle result; `length: None` if it did not stabilise by `cap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleOut {
    pub cap: u32,
    pub length: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MuOut {
    pub p: u32,
    pub modulus: String,
    pub generators: Vec<String>,
    pub mu: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationLine {
    pub relation: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleOut {
    pub p: u32,
    pub equation: String,
    pub h: String,
    pub e: String,
    pub f: String,
    /// Members that do not map (P) into itself; relations are then unchecked.
    pub not_stabilizing: Vec<String>,
    pub relations: Vec<RelationLine>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HilbertBurchLine {
    pub n: u32,
    pub r: u32,
    pub minors_match: [bool; 3],
    pub entries_in_maximal_ideal: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DOddLine {
    pub n: u32,
    pub r: u32,
    pub stabilizes: [bool; 3],
    pub product_in_ideal: [bool; 3],
    pub matches_stated: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DtypeOut {
    pub hilbert_burch: Vec<HilbertBurchLine>,
    pub d_odd: Vec<DOddLine>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Output {
    Records(Vec<RdpRecord>),
    Equation(EquationRecord),
    Table1(Vec<Table1Line>),
    Table2(Vec<Table2Line>),
    Colength(ColengthOut),
    Mu(MuOut),
    Sl2(Sl2Summary),
    Triple(TripleOut),
    Dtype(DtypeOut),
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn length_text(n: Option<u64>) -> String {
    n.map_or_else(|| "infinite".to_string(), |n| n.to_string())
}

fn bools(b: &[bool; 3]) -> String {
    b.iter().map(|&x| if x { "1" } else { "0" }).collect()
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("records serialise");
                s.push('\n');
                s
            }
            Format::Csv => self.csv(),
            Format::Text => self.text(),
        }
    }

    fn csv(&self) -> String {
        let mut s = String::new();
        match self {
            Output::Records(rs) => {
                writeln!(s, "{CSV_HEADER}").unwrap();
                for r in rs {
                    writeln!(s, "{}", r.csv_row()).unwrap();
                }
            }
            Output::Table1(lines) => {
                writeln!(s, "{CSV_HEADER}").unwrap();
                for l in lines {
                    writeln!(s, "{}", l.record.csv_row()).unwrap();
                }
            }
            Output::Table2(lines) => {
                writeln!(s, "{CSV_HEADER}").unwrap();
                for l in lines {
                    writeln!(s, "{}", l.record.csv_row()).unwrap();
                }
            }
            Output::Equation(r) => {
                writeln!(s, "p,equation,len_a,len_ap,mu,free,surjective").unwrap();
                writeln!(
                    s,
                    "{},{},{},{},{},{},{}",
                    r.p, r.equation, r.len_a, r.len_ap, r.mu, r.free, r.surjective
                )
                .unwrap();
            }
            Output::Colength(c) => {
                writeln!(s, "p,length,oracle").unwrap();
                let oracle = c.oracle.map_or_else(String::new, |o| length_text(o.length));
                writeln!(s, "{},{},{}", c.p, length_text(c.length), oracle).unwrap();
            }
            Output::Mu(m) => {
                writeln!(s, "p,mu").unwrap();
                writeln!(s, "{},{}", m.p, m.mu).unwrap();
            }
            Output::Sl2(sum) => {
                writeln!(s, "p,check,cases,failures").unwrap();
                for c in &sum.checks {
                    writeln!(s, "{},{},{},{}", sum.p, c.name, c.cases, c.failures).unwrap();
                }
            }
            Output::Triple(t) => {
                writeln!(s, "p,relation,holds").unwrap();
                for name in &t.not_stabilizing {
                    writeln!(s, "{},{} stabilizes (P),false", t.p, name).unwrap();
                }
                for r in &t.relations {
                    writeln!(s, "{},{},{}", t.p, r.relation, r.holds).unwrap();
                }
            }
            Output::Dtype(d) => {
                writeln!(s, "check,l,r,detail,holds").unwrap();
                for l in &d.hilbert_burch {
                    writeln!(
                        s,
                        "hilbert-burch,{},{},minors={},{}",
                        2 * l.n,
                        l.r,
                        bools(&l.minors_match),
                        l.holds
                    )
                    .unwrap();
                }
                for l in &d.d_odd {
                    writeln!(
                        s,
                        "delta,{},{},stabilizes={} product={} stated={},{}",
                        2 * l.n + 1,
                        l.r,
                        bools(&l.stabilizes),
                        bools(&l.product_in_ideal),
                        l.matches_stated,
                        l.holds
                    )
                    .unwrap();
                }
            }
        }
        s
    }

    fn text(&self) -> String {
        let mut s = String::new();
        let header = "type        p   ℓ₁    ℓ_p   μ  free  surjective";
        let line = |r: &RdpRecord| {
            format!(
                "{:<10} {:>2} {:>4} {:>6} {:>3}  {:<4}  {}",
                format!("{}{}^{}", r.family, r.l, r.r),
                r.p,
                r.len_a,
                r.len_ap,
                r.mu,
                yes_no(r.free),
                yes_no(r.surjective)
            )
        };
        match self {
            Output::Records(rs) => {
                for r in rs {
                    writeln!(
                        s,
                        "{}{}^{} at p={}: {}",
                        r.family, r.l, r.r, r.p, r.equation
                    )
                    .unwrap();
                    writeln!(
                        s,
                        "  ℓ(R/𝔞) = {}, ℓ(R/𝔞^[p]) = {}, μ(𝔞) = {}",
                        r.len_a, r.len_ap, r.mu
                    )
                    .unwrap();
                    writeln!(s, "  tangent module free: {}", yes_no(r.free)).unwrap();
                    writeln!(
                        s,
                        "  evaluation pairing surjective: {}",
                        yes_no(r.surjective)
                    )
                    .unwrap();
                }
            }
            Output::Equation(r) => {
                writeln!(s, "{} at p={}", r.equation, r.p).unwrap();
                writeln!(
                    s,
                    "  ℓ(R/𝔞) = {}, ℓ(R/𝔞^[p]) = {}, μ(𝔞) = {}",
                    r.len_a, r.len_ap, r.mu
                )
                .unwrap();
                writeln!(s, "  tangent module free: {}", yes_no(r.free)).unwrap();
                writeln!(
                    s,
                    "  evaluation pairing surjective: {}",
                    yes_no(r.surjective)
                )
                .unwrap();
            }
            Output::Table1(lines) => {
                let mut current = None;
                for l in lines {
                    if current != Some(l.row) {
                        current = Some(l.row);
                        writeln!(s, "[{:?}]", l.row).unwrap();
                        writeln!(s, "  {header}  agrees").unwrap();
                    }
                    writeln!(s, "  {}  {}", line(&l.record), yes_no(l.agrees)).unwrap();
                }
            }
            Output::Table2(lines) => {
                writeln!(s, "{header}  matches").unwrap();
                for l in lines {
                    writeln!(s, "{}  {}", line(&l.record), yes_no(l.matches)).unwrap();
                }
            }
            Output::Colength(c) => {
                writeln!(s, "{}", length_text(c.length)).unwrap();
                if let Some(o) = c.oracle {
                    let value = o.length.map_or_else(
                        || format!("unstable up to level {}", o.cap),
                        |n| n.to_string(),
                    );
                    writeln!(s, "truncation oracle: {value}").unwrap();
                }
            }
            Output::Mu(m) => writeln!(s, "{}", m.mu).unwrap(),
            Output::Sl2(sum) => {
                let mode = match sum.sampling {
                    Sampling::Exhaustive => "exhaustive".to_string(),
                    Sampling::Random { samples, seed } => {
                        format!("{samples} random samples, seed {seed}")
                    }
                };
                writeln!(s, "sl2 over F_{} ({mode})", sum.p).unwrap();
                for c in &sum.checks {
                    let verdict = if c.failures == 0 { "ok" } else { "FAILED" };
                    writeln!(
                        s,
                        "  {:<22} {:>9} cases  {:>5} failures  {verdict}",
                        c.name, c.cases, c.failures
                    )
                    .unwrap();
                }
            }
            Output::Triple(t) => {
                writeln!(s, "P = {} at p={}", t.equation, t.p).unwrap();
                writeln!(s, "  h: {}\n  e: {}\n  f: {}", t.h, t.e, t.f).unwrap();
                for name in &t.not_stabilizing {
                    writeln!(s, "  {name} does not stabilize (P); relations not checked").unwrap();
                }
                for r in &t.relations {
                    writeln!(
                        s,
                        "  {:<10} {}",
                        r.relation,
                        if r.holds { "holds" } else { "FAILS" }
                    )
                    .unwrap();
                }
                writeln!(s, "sl2-triple: {}", yes_no(t.holds)).unwrap();
            }
            Output::Dtype(d) => {
                writeln!(s, "Hilbert–Burch minors, D_2n^r at p=2").unwrap();
                for l in &d.hilbert_burch {
                    writeln!(
                        s,
                        "  D{}^{}: minors {}  entries in 𝔪: {}  {}",
                        2 * l.n,
                        l.r,
                        bools(&l.minors_match),
                        yes_no(l.entries_in_maximal_ideal),
                        if l.holds { "ok" } else { "FAILED" }
                    )
                    .unwrap();
                }
                writeln!(s, "δ-derivations and J₁·J₂, D_2n+1^r at p=2").unwrap();
                for l in &d.d_odd {
                    writeln!(
                        s,
                        "  D{}^{}: stabilize {}  J₁·J₂ ∈ (P) {}  J₂ mod 𝔪² as stated: {}  {}",
                        2 * l.n + 1,
                        l.r,
                        bools(&l.stabilizes),
                        bools(&l.product_in_ideal),
                        yes_no(l.matches_stated),
                        if l.holds { "ok" } else { "FAILED" }
                    )
                    .unwrap();
                }
            }
        }
        s
    }
}
