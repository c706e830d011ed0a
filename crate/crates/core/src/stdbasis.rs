//! Standard bases for local orders (Mora) and Gröbner bases for global orders.
//!
//! Both cases share one completion loop; the normal form dispatches on
//! [`MonomialOrder::is_local`]. For a local order the normal form is Mora's
//! weak normal form: the result `r` satisfies `u·f − r ∈ (G)` for a unit
//! `u` at the origin, and only the leading term of `r` is guaranteed to be
//! irreducible. For a global order `u = 1` and every term of `r` is reduced.

use std::borrow::Cow;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ring::{inv_mod, mul_mod, neg_mod, Monomial, MonomialOrder, Polynomial, Ring};
use crate::ring::{merge_add, normalize_terms};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StdBasisError {
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomials or order do not share one ambient ring")]
    AmbientMismatch,
}

/// Length of a quotient ring: a natural number, or infinite when the ideal
/// is not primary to the maximal ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn finite(self) -> Option<u64> {
        match self {
            Colength::Finite(n) => Some(n),
            Colength::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Colength::Infinite
    }
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(n) => write!(f, "{n}"),
            Colength::Infinite => f.write_str("infinite"),
        }
    }
}

type Terms = Vec<(Monomial, u32)>;

/// Terms sorted descending under an order, leading term first.
#[derive(Clone, Debug)]
struct Sorted {
    terms: Terms,
    ecart: u64,
}

impl Sorted {
    fn new(f: &Polynomial, ord: &MonomialOrder) -> Self {
        Self::from_terms(f.raw_terms().to_vec(), f.characteristic(), ord)
    }

    fn from_terms(terms: Terms, p: u32, ord: &MonomialOrder) -> Self {
        let terms = normalize_terms(terms, p, |a, b| ord.cmp(a, b));
        let ecart = ecart(&terms, ord);
        Sorted { terms, ecart }
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> u32 {
        self.terms[0].1
    }
}

fn ecart(terms: &[(Monomial, u32)], ord: &MonomialOrder) -> u64 {
    match terms.first() {
        None => 0,
        Some((lm, _)) => {
            let w = ord.weights();
            let top = terms
                .iter()
                .map(|(m, _)| m.weighted_degree(w))
                .max()
                .unwrap_or(0);
            top - lm.weighted_degree(w)
        }
    }
}

fn make_monic(terms: &mut Terms, p: u32) {
    if let Some(&(_, lc)) = terms.first() {
        let inv = inv_mod(lc, p);
        for t in terms.iter_mut() {
            t.1 = mul_mod(t.1, inv, p);
        }
    }
}

/// `h − c·m·g` for term lists sorted under `ord`.
fn sub_multiple(
    h: &[(Monomial, u32)],
    c: u32,
    m: &Monomial,
    g: &[(Monomial, u32)],
    p: u32,
    ord: &MonomialOrder,
) -> Terms {
    let shifted: Terms = g.iter().map(|(t, v)| (t.mul(m), *v)).collect();
    merge_add(h, &shifted, neg_mod(c, p), p, |a, b| ord.cmp(a, b))
}

/// Representation `u·f = Σ cofactors[i]·G[i] + r` of a normal form.
#[derive(Clone, Debug)]
pub struct NormalFormWitness {
    pub remainder: Polynomial,
    pub unit: Polynomial,
    pub cofactors: Vec<Polynomial>,
}

/// Witness bookkeeping: `t = u·f − Σ b_i·g_i` for every tracked element.
#[derive(Clone)]
struct Track {
    u: Polynomial,
    b: Vec<Polynomial>,
}

impl Track {
    fn sub_multiple(&self, c: u32, m: &Monomial, other: &Track) -> Track {
        let ring = self.u.ring();
        let scale = Polynomial::from_terms(ring, [(m.clone(), c)]);
        Track {
            u: &self.u - &(&scale * &other.u),
            b: self
                .b
                .iter()
                .zip(&other.b)
                .map(|(x, y)| x - &(&scale * y))
                .collect(),
        }
    }
}

struct Reducer<'a> {
    terms: Cow<'a, [(Monomial, u32)]>,
    ecart: u64,
    track: Option<Track>,
}

/// Core normal-form routine shared by the public entry points.
fn reduce_terms(
    f: Terms,
    basis: &[Sorted],
    ord: &MonomialOrder,
    p: u32,
    track: Option<(&Ring, usize)>,
    shortcuts: Shortcuts,
) -> Option<(Terms, Option<Track>)> {
    let mut h = f;
    shortcuts.apply(&mut h, ord);
    let mut h_track = track.map(|(ring, n)| Track {
        u: ring.one(),
        b: vec![ring.zero(); n],
    });
    let mut reducers: Vec<Reducer<'_>> = basis
        .iter()
        .enumerate()
        .map(|(i, g)| Reducer {
            terms: Cow::Borrowed(&g.terms),
            ecart: g.ecart,
            track: track.map(|(ring, n)| {
                let mut b = vec![ring.zero(); n];
                b[i] = -ring.one();
                Track { u: ring.zero(), b }
            }),
        })
        .collect();
    let local = ord.is_local();
    let mut remainder: Terms = Vec::new();
    let mut work = 0usize;

    while let Some((lm, lc)) = h.first().cloned() {
        work += h.len();
        if shortcuts.budget.is_some_and(|b| work > b) {
            return None;
        }
        let mut chosen: Option<usize> = None;
        for (i, g) in reducers.iter().enumerate() {
            if !g.terms[0].0.divides(&lm) {
                continue;
            }
            if !local {
                chosen = Some(i);
                break;
            }
            if chosen.is_none_or(|j| g.ecart < reducers[j].ecart) {
                chosen = Some(i);
            }
        }
        let Some(i) = chosen else {
            if local {
                break;
            }
            remainder.push(h.remove(0));
            continue;
        };
        if local {
            let h_ecart = ecart(&h, ord);
            if reducers[i].ecart > h_ecart {
                reducers.push(Reducer {
                    terms: Cow::Owned(h.clone()),
                    ecart: h_ecart,
                    track: h_track.clone(),
                });
            }
        }
        let g = &reducers[i];
        let m = lm.div(&g.terms[0].0).expect("divisibility checked");
        let c = mul_mod(lc, inv_mod(g.terms[0].1, p), p);
        if let (Some(ht), Some(gt)) = (&h_track, &g.track) {
            h_track = Some(ht.sub_multiple(c, &m, gt));
        }
        h = sub_multiple(&h, c, &m, &g.terms, p, ord);
        shortcuts.apply(&mut h, ord);
    }
    remainder.extend(h);
    Some((remainder, h_track))
}

/// Local simplifications used during completion only; they change an
/// element by a unit or by a member of the ideal, which leaves the
/// leading ideal intact but breaks exact witnesses.
#[derive(Clone, Copy, Default)]
struct Shortcuts {
    cutoff: Option<u64>,
    strip_units: bool,
    /// Give up once this many terms have been processed.
    budget: Option<usize>,
}

impl Shortcuts {
    fn apply(self, terms: &mut Terms, ord: &MonomialOrder) {
        truncate(terms, self.cutoff, ord);
        if self.strip_units {
            strip_unit(terms);
        }
    }
}

/// `m·(1 + …)` with every term divisible by `m` is `m` times a local unit.
fn strip_unit(terms: &mut Terms) {
    if let Some((lm, _)) = terms.first() {
        if terms.len() > 1 && terms[1..].iter().all(|(t, _)| lm.divides(t)) {
            terms.truncate(1);
        }
    }
}

/// Drops every term of weighted degree at least `cutoff`.
fn truncate(terms: &mut Terms, cutoff: Option<u64>, ord: &MonomialOrder) {
    if let Some(bound) = cutoff {
        let w = ord.weights();
        terms.retain(|(m, _)| m.weighted_degree(w) < bound);
    }
}

/// For a local order: a weighted degree `D` such that every monomial of
/// weighted degree `≥ D` is divisible by some leading monomial. Such
/// monomials lie in the ideal, so terms beyond `D` can be discarded.
fn corner_cutoff(elements: &[Sorted], ord: &MonomialOrder) -> Option<u64> {
    if !ord.is_local() {
        return None;
    }
    let w = ord.weights();
    let mut bounds: Vec<Option<u32>> = vec![None; w.len()];
    for g in elements {
        let e = g.lm().exponents();
        let support: Vec<usize> = (0..e.len()).filter(|&v| e[v] > 0).collect();
        match support.as_slice() {
            [] => return Some(0),
            [v] => bounds[*v] = Some(bounds[*v].map_or(e[*v], |b| b.min(e[*v]))),
            _ => {}
        }
    }
    let mut total = 1u64;
    for (b, &wv) in bounds.iter().zip(w) {
        total += u64::from(wv) * u64::from((*b)? - 1);
    }
    Some(total)
}

fn check_ambient(
    ring: &Ring,
    polys: &[&Polynomial],
    ord: &MonomialOrder,
) -> Result<(), StdBasisError> {
    if ord.nvars() != ring.nvars() || polys.iter().any(|f| f.ring() != ring) {
        return Err(StdBasisError::AmbientMismatch);
    }
    Ok(())
}

/// S-polynomial `(L/lt(f))·f − (L/lt(g))·g` with `L = lcm(lm f, lm g)`.
pub fn s_polynomial(
    f: &Polynomial,
    g: &Polynomial,
    ord: &MonomialOrder,
) -> Result<Polynomial, StdBasisError> {
    check_ambient(f.ring(), &[g], ord)?;
    if f.is_zero() || g.is_zero() {
        return Err(StdBasisError::ZeroPolynomial);
    }
    let p = f.characteristic();
    let (a, b) = (Sorted::new(f, ord), Sorted::new(g, ord));
    let s = spoly_terms(&a, &b, p, ord);
    Ok(Polynomial::from_terms(f.ring(), s))
}

fn spoly_terms(a: &Sorted, b: &Sorted, p: u32, ord: &MonomialOrder) -> Terms {
    let l = a.lm().lcm(b.lm());
    let ma = l.div(a.lm()).expect("lcm");
    let mb = l.div(b.lm()).expect("lcm");
    let ca = inv_mod(a.lc(), p);
    let cb = inv_mod(b.lc(), p);
    let left: Terms = a
        .terms
        .iter()
        .map(|(t, v)| (t.mul(&ma), mul_mod(*v, ca, p)))
        .collect();
    let right: Terms = b.terms.iter().map(|(t, v)| (t.mul(&mb), *v)).collect();
    merge_add(&left, &right, neg_mod(cb, p), p, |x, y| ord.cmp(x, y))
}

fn sorted_basis(basis: &[Polynomial], ord: &MonomialOrder) -> Result<Vec<Sorted>, StdBasisError> {
    basis
        .iter()
        .map(|g| {
            if g.is_zero() {
                Err(StdBasisError::ZeroPolynomial)
            } else {
                Ok(Sorted::new(g, ord))
            }
        })
        .collect()
}

/// Normal form of `f` with respect to `basis` (weak normal form for local orders).
pub fn normal_form(
    f: &Polynomial,
    basis: &[Polynomial],
    ord: &MonomialOrder,
) -> Result<Polynomial, StdBasisError> {
    check_ambient(f.ring(), &basis.iter().collect::<Vec<_>>(), ord)?;
    let sorted = sorted_basis(basis, ord)?;
    let start = Sorted::new(f, ord).terms;
    let (r, _) = reduce_terms(
        start,
        &sorted,
        ord,
        f.characteristic(),
        None,
        Shortcuts::default(),
    )
    .expect("no budget");
    Ok(Polynomial::from_terms(f.ring(), r))
}

/// Normal form together with the unit and cofactors certifying it.
pub fn normal_form_with_witness(
    f: &Polynomial,
    basis: &[Polynomial],
    ord: &MonomialOrder,
) -> Result<NormalFormWitness, StdBasisError> {
    check_ambient(f.ring(), &basis.iter().collect::<Vec<_>>(), ord)?;
    let sorted = sorted_basis(basis, ord)?;
    let start = Sorted::new(f, ord).terms;
    let ring = f.ring();
    let (r, track) = reduce_terms(
        start,
        &sorted,
        ord,
        f.characteristic(),
        Some((ring, basis.len())),
        Shortcuts::default(),
    )
    .expect("no budget");
    let track = track.expect("tracking requested");
    Ok(NormalFormWitness {
        remainder: Polynomial::from_terms(ring, r),
        unit: track.u,
        cofactors: track.b,
    })
}

/// Completion options for [`standard_basis_with`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    /// Minimise the leading terms and, for global orders, tail-reduce.
    pub reduce: bool,
}

/// A completed standard basis with monic leading terms.
#[derive(Clone, Debug)]
pub struct StandardBasis {
    ring: Ring,
    order: MonomialOrder,
    elements: Vec<Sorted>,
    reduced: bool,
}

/// Completes `gens` to a standard basis under `ord`. Zero generators are dropped.
pub fn standard_basis(
    gens: &[Polynomial],
    ord: &MonomialOrder,
) -> Result<StandardBasis, StdBasisError> {
    standard_basis_with(gens, ord, Options::default())
}

pub fn standard_basis_with(
    gens: &[Polynomial],
    ord: &MonomialOrder,
    options: Options,
) -> Result<StandardBasis, StdBasisError> {
    let Some(first) = gens.first() else {
        return Err(StdBasisError::ZeroPolynomial);
    };
    let ring = first.ring().clone();
    check_ambient(&ring, &gens.iter().collect::<Vec<_>>(), ord)?;
    let p = ring.characteristic();

    let mut elements: Vec<Sorted> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let mut s = Sorted::new(g, ord);
        make_monic(&mut s.terms, p);
        if ord.is_local() {
            strip_unit(&mut s.terms);
            s.ecart = ecart(&s.terms, ord);
        }
        elements.push(s);
    }

    // Pending pairs (i, j) with i < j; selected by lcm degree, then age.
    let mut pairs: Vec<(u64, usize, usize)> = Vec::new();
    for j in 0..elements.len() {
        for i in 0..j {
            push_pair(&elements, &mut pairs, i, j);
        }
    }
    let mut cutoff = corner_cutoff(&elements, ord);
    // Reductions that exceed the budget are retried after the others, since
    // a corner found meanwhile can make them cheap. Pair order does not
    // affect the leading ideal of the result.
    let mut deferred: Vec<(u64, usize, usize)> = Vec::new();
    let mut budget = INITIAL_BUDGET;
    loop {
        if pairs.is_empty() {
            if deferred.is_empty() {
                break;
            }
            pairs.append(&mut deferred);
            budget = budget.saturating_mul(16);
        }
        let (best, _) = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &(deg, i, j))| (deg, j, i))
            .expect("non-empty");
        let (deg, i, j) = pairs.swap_remove(best);
        if let Some(bound) = cutoff {
            // Every term of this S-polynomial lies beyond the corner.
            if elements[i]
                .lm()
                .lcm(elements[j].lm())
                .weighted_degree(ord.weights())
                >= bound
            {
                continue;
            }
        }
        let s = spoly_terms(&elements[i], &elements[j], p, ord);
        let shortcuts = Shortcuts {
            cutoff,
            strip_units: ord.is_local(),
            budget: Some(budget),
        };
        let Some((mut h, _)) = reduce_terms(s, &elements, ord, p, None, shortcuts) else {
            deferred.push((deg, i, j));
            continue;
        };
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h, p);
        let e = ecart(&h, ord);
        elements.push(Sorted { terms: h, ecart: e });
        cutoff = corner_cutoff(&elements, ord);
        if let Some(bound) = cutoff {
            for g in elements.iter_mut() {
                if g.lm().weighted_degree(ord.weights()) < bound {
                    truncate(&mut g.terms, cutoff, ord);
                    g.ecart = ecart(&g.terms, ord);
                }
            }
        }
        let k = elements.len() - 1;
        for i in 0..k {
            push_pair(&elements, &mut pairs, i, k);
        }
    }

    let mut basis = StandardBasis {
        ring,
        order: ord.clone(),
        elements,
        reduced: false,
    };
    if options.reduce {
        basis.reduce();
    }
    Ok(basis)
}

const INITIAL_BUDGET: usize = 1 << 16;

fn push_pair(elements: &[Sorted], pairs: &mut Vec<(u64, usize, usize)>, i: usize, j: usize) {
    let (a, b) = (elements[i].lm(), elements[j].lm());
    if a.is_coprime(b) {
        return;
    }
    pairs.push((a.lcm(b).degree(), i, j));
}

impl StandardBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn generators(&self) -> Vec<Polynomial> {
        self.elements
            .iter()
            .map(|s| Polynomial::from_terms(&self.ring, s.terms.iter().cloned()))
            .collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|s| s.lm().clone()).collect()
    }

    /// Drops redundant leading terms and, for global orders, reduces tails.
    pub fn reduce(&mut self) {
        let lms = self.leading_monomials();
        let mut keep = Vec::new();
        for (i, m) in lms.iter().enumerate() {
            let redundant = lms
                .iter()
                .enumerate()
                .any(|(j, n)| j != i && n.divides(m) && (n != m || j < i));
            if !redundant {
                keep.push(self.elements[i].clone());
            }
        }
        if !self.order.is_local() {
            let p = self.ring.characteristic();
            for i in 0..keep.len() {
                let others: Vec<Sorted> = keep
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, s)| s.clone())
                    .collect();
                let lead = keep[i].terms[0].clone();
                let tail = keep[i].terms[1..].to_vec();
                let (r, _) =
                    reduce_terms(tail, &others, &self.order, p, None, Shortcuts::default())
                        .expect("no budget");
                let mut terms = vec![lead];
                terms.extend(r);
                keep[i] = Sorted {
                    ecart: ecart(&terms, &self.order),
                    terms,
                };
            }
            keep.sort_by(|a, b| self.order.cmp(a.lm(), b.lm()));
        }
        self.elements = keep;
        self.reduced = true;
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, StdBasisError> {
        if f.ring() != &self.ring {
            return Err(StdBasisError::AmbientMismatch);
        }
        let start = Sorted::new(f, &self.order).terms;
        let (r, _) = reduce_terms(
            start,
            &self.elements,
            &self.order,
            self.ring.characteristic(),
            None,
            Shortcuts::default(),
        )
        .expect("no budget");
        Ok(Polynomial::from_terms(&self.ring, r))
    }

    pub fn is_member(&self, f: &Polynomial) -> Result<bool, StdBasisError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn staircase(&self) -> Staircase {
        Staircase::new(self.ring.vars().to_vec(), self.leading_monomials())
    }

    pub fn colength(&self) -> Colength {
        self.staircase().colength()
    }
}

/// Free-function form of [`StandardBasis::colength`].
pub fn colength(basis: &StandardBasis) -> Colength {
    basis.colength()
}

/// Free-function form of [`StandardBasis::is_member`].
pub fn is_member(f: &Polynomial, basis: &StandardBasis) -> Result<bool, StdBasisError> {
    basis.is_member(f)
}

/// A monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    vars: Vec<String>,
    corners: Vec<Monomial>,
}

impl Staircase {
    pub fn new(vars: Vec<String>, generators: Vec<Monomial>) -> Self {
        let mut corners: Vec<Monomial> = Vec::new();
        let mut sorted = generators;
        sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        sorted.dedup();
        for m in sorted {
            if !corners.iter().any(|c| c.divides(&m)) {
                corners.push(m);
            }
        }
        Staircase { vars, corners }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Minimal generators of the monomial ideal.
    pub fn corners(&self) -> &[Monomial] {
        &self.corners
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.corners.iter().any(|c| c.divides(m))
    }

    /// Smallest pure power of each variable in the ideal, if any.
    pub fn pure_power_bounds(&self) -> Vec<Option<u32>> {
        (0..self.vars.len())
            .map(|v| {
                self.corners
                    .iter()
                    .filter(|c| {
                        c.exponents()
                            .iter()
                            .enumerate()
                            .all(|(i, &e)| i == v || e == 0)
                    })
                    .map(|c| c.exponent(v))
                    .min()
            })
            .collect()
    }

    pub fn colength(&self) -> Colength {
        let n = self.vars.len();
        if n == 0 {
            return Colength::Finite(u64::from(self.corners.is_empty()));
        }
        let bounds: Option<Vec<u32>> = self.pure_power_bounds().into_iter().collect();
        let Some(bounds) = bounds else {
            return Colength::Infinite;
        };
        let last = (0..n).max_by_key(|&v| (bounds[v], v)).expect("n > 0");
        let prefix: Vec<usize> = (0..n).filter(|&v| v != last).collect();
        let mut counter = vec![0u32; prefix.len()];
        let mut total = 0u64;
        loop {
            let mut height = bounds[last];
            for c in &self.corners {
                if prefix
                    .iter()
                    .zip(&counter)
                    .all(|(&v, &e)| c.exponent(v) <= e)
                {
                    height = height.min(c.exponent(last));
                }
            }
            total += u64::from(height);
            let mut k = 0;
            loop {
                if k == prefix.len() {
                    return Colength::Finite(total);
                }
                counter[k] += 1;
                if counter[k] < bounds[prefix[k]] {
                    break;
                }
                counter[k] = 0;
                k += 1;
            }
        }
    }

    /// Standard monomials (outside the ideal), if finitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        let bounds: Vec<u32> = self
            .pure_power_bounds()
            .into_iter()
            .collect::<Option<_>>()?;
        let n = bounds.len();
        let mut out = Vec::new();
        let mut e = vec![0u32; n];
        loop {
            let m = Monomial::from_exponents(&e);
            if !self.contains(&m) {
                out.push(m);
            }
            let mut k = 0;
            loop {
                if k == n {
                    return Some(out);
                }
                e[k] += 1;
                if e[k] < bounds[k] {
                    break;
                }
                e[k] = 0;
                k += 1;
            }
        }
    }
}

impl fmt::Display for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char('(')?;
        for (i, c) in self.corners.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            c.write_with(f, &self.vars)?;
        }
        f.write_char(')')
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz(p: u32) -> Ring {
        Ring::xyz(p).unwrap()
    }

    /// Weights w(x)=w(z)=n−1, w(y)=1, ties x ≻ z ≻ y.
    fn dtype_order(n: u32) -> MonomialOrder {
        MonomialOrder::local_weighted(vec![n - 1, 1, n - 1], vec![0, 2, 1]).unwrap()
    }

    fn d_odd(n: u32, r: u32) -> (Ring, Polynomial) {
        let ring = xyz(2);
        let p = ring
            .parse(&format!("z^2 + x^2*y + y^{n}*z + x*y^{}*z", n - r))
            .unwrap();
        (ring, p)
    }

    fn jacobian(p: &Polynomial) -> Vec<Polynomial> {
        let mut g = vec![p.clone()];
        g.extend([2, 0, 1].iter().map(|&i| p.derivative(i)));
        g
    }

    #[test]
    fn s_polynomials_of_odd_d_type() {
        let (ring, p) = d_odd(3, 1);
        let ord = dtype_order(3);
        let (pz, px) = (p.derivative(2), p.derivative(0));
        let s = s_polynomial(&pz, &px, &ord).unwrap();
        assert_eq!(s, &ring.gen(0) * &px);
        // S(P, P_x) = y^{n-r}·(P − z^2); it is not a multiple of P_x, but it
        // still reduces to zero against the Jacobian generators.
        let s = s_polynomial(&p, &px, &ord).unwrap();
        let tail = &p - &ring.parse("z^2").unwrap();
        assert_eq!(s, &ring.parse("y^2").unwrap() * &tail);
        let cof = ring.parse("x^2*y + y^3 + x*y^2").unwrap();
        assert_ne!(s, &cof * &px);
        assert!(normal_form(&s, &jacobian(&p), &ord).unwrap().is_zero());
        assert!(s_polynomial(&p, &p, &ord).unwrap().is_zero());
        assert_eq!(
            s_polynomial(&p, &ring.zero(), &ord),
            Err(StdBasisError::ZeroPolynomial)
        );
    }

    #[test]
    fn jacobian_of_odd_d_type_is_already_standard() {
        let (ring, p) = d_odd(4, 1);
        let ord = dtype_order(4);
        let gens = jacobian(&p);
        let sb = standard_basis(&gens, &ord).unwrap();
        assert_eq!(sb.len(), 4);
        let xpx = &ring.gen(0) * &gens[2];
        assert!(normal_form(&xpx, &gens, &ord).unwrap().is_zero());
        assert_eq!(sb.colength(), Colength::Finite(14));
    }

    #[test]
    fn partial_jacobians_have_infinite_colength() {
        let (_, p) = d_odd(4, 1);
        let ord = dtype_order(4);
        let bz = vec![p.clone(), p.derivative(0), p.derivative(1)];
        assert_eq!(
            standard_basis(&bz, &ord).unwrap().colength(),
            Colength::Infinite
        );
    }

    #[test]
    fn trivial_cases() {
        let ring = xyz(5);
        let ord = MonomialOrder::local(3);
        let m = ring.gens();
        assert_eq!(normal_form(&ring.one(), &m, &ord).unwrap(), ring.one());
        let sb = standard_basis(&m, &ord).unwrap();
        assert_eq!(sb.colength(), Colength::Finite(1));
        let x = standard_basis(&[ring.gen(0)], &ord).unwrap();
        assert_eq!(x.generators(), vec![ring.gen(0)]);
        assert_eq!(x.colength(), Colength::Infinite);
    }

    #[test]
    fn local_units_are_invisible() {
        // (x − x·y) = (x) locally because 1 − y is a unit.
        let ring = xyz(3);
        let ord = MonomialOrder::local(3);
        let sb = standard_basis(&[ring.parse("x - x*y").unwrap()], &ord).unwrap();
        assert!(sb.is_member(&ring.gen(0)).unwrap());
        let global = standard_basis(
            &[ring.parse("x - x*y").unwrap()],
            &MonomialOrder::degrevlex(3),
        )
        .unwrap();
        assert!(!global.is_member(&ring.gen(0)).unwrap());
    }

    #[test]
    fn a_type_frobenius_quotient_is_nonzero() {
        // z^{lp} survives in k[x,y,z]/(P, x^p, y^p) for A_2 at p = 5.
        let ring = xyz(5);
        let ord = MonomialOrder::local(3);
        let gens = vec![
            ring.parse("z^3 - x*y").unwrap(),
            ring.parse("x^5").unwrap(),
            ring.parse("y^5").unwrap(),
        ];
        let z = ring.parse("z^10").unwrap();
        assert!(!normal_form(&z, &gens, &ord).unwrap().is_zero());
    }

    #[test]
    fn witness_certifies_normal_form() {
        let ring = xyz(3);
        let ord = MonomialOrder::local(3);
        let gens = vec![
            ring.parse("x - y^2 - x*z").unwrap(),
            ring.parse("y + x^2*z").unwrap(),
        ];
        let f = ring.parse("x^2 + y*z + x*y*z^2").unwrap();
        let w = normal_form_with_witness(&f, &gens, &ord).unwrap();
        assert!(w.unit.is_unit_at_origin());
        let mut rhs = w.remainder.clone();
        for (a, g) in w.cofactors.iter().zip(&gens) {
            rhs = &rhs + &(a * g);
        }
        assert_eq!(&w.unit * &f, rhs);
    }

    #[test]
    fn global_reduced_basis() {
        let ring = xyz(7);
        let ord = MonomialOrder::lex(3);
        let gens = vec![
            ring.parse("x^2 - y").unwrap(),
            ring.parse("x*y - 1").unwrap(),
        ];
        let sb = standard_basis_with(&gens, &ord, Options { reduce: true }).unwrap();
        assert!(sb.is_reduced());
        // Reduced lex basis of (x^2 − y, xy − 1) is {x − y^2, y^3 − 1}.
        let mut got: Vec<String> = sb.generators().iter().map(|g| g.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["6*y^2 + x", "y^3 + 6"]);
    }

    #[test]
    fn staircase_counting() {
        let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let m = |e: &[u32]| Monomial::from_exponents(e);
        // (z^2, y^4, y^3 z, x^2): 2·(4 + 3) = 14.
        let st = Staircase::new(
            vars.clone(),
            vec![
                m(&[0, 0, 2]),
                m(&[0, 4, 0]),
                m(&[0, 3, 1]),
                m(&[2, 0, 0]),
                m(&[2, 1, 0]),
            ],
        );
        assert_eq!(st.corners().len(), 4);
        assert_eq!(st.colength(), Colength::Finite(14));
        assert_eq!(st.standard_monomials().unwrap().len(), 14);
        assert_eq!(st.to_string(), "(z^2, x^2, y^3*z, y^4)");
        let open = Staircase::new(vars.clone(), vec![m(&[1, 0, 0]), m(&[0, 1, 1])]);
        assert_eq!(open.colength(), Colength::Infinite);
        let unit = Staircase::new(vars, vec![m(&[0, 0, 0])]);
        assert_eq!(unit.colength(), Colength::Finite(0));
    }

    mod properties {
        use super::*;
        use crate::ideals::{truncation_colength, IdealPresentation, Truncation};
        use proptest::prelude::*;

        fn arb_small_poly(ring: Ring) -> impl Strategy<Value = Polynomial> {
            let p = ring.characteristic();
            prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), 1u32..p), 1..4).prop_map(
                move |ts| {
                    Polynomial::from_terms(
                        &ring,
                        ts.into_iter()
                            .map(|((a, b, c), v)| (Monomial::from_exponents(&[a, b, c]), v)),
                    )
                },
            )
        }

        fn arb_ideal(
            p: u32,
            len: std::ops::Range<usize>,
        ) -> impl Strategy<Value = Vec<Polynomial>> {
            prop::collection::vec(arb_small_poly(xyz(p)), len)
                .prop_filter("non-zero generators", |g| g.iter().any(|f| !f.is_zero()))
        }

        /// Small generators plus pure powers, so the ideal is 𝔪-primary.
        fn arb_primary_ideal(p: u32) -> impl Strategy<Value = Vec<Polynomial>> {
            (arb_ideal(p, 1..3), (2u32..6, 2u32..6, 2u32..6)).prop_map(
                move |(mut gens, (a, b, c))| {
                    let ring = xyz(p);
                    gens.push(Polynomial::from_terms(
                        &ring,
                        [(Monomial::from_exponents(&[a, 0, 0]), 1)],
                    ));
                    gens.push(Polynomial::from_terms(
                        &ring,
                        [(Monomial::from_exponents(&[0, b, 0]), 1)],
                    ));
                    gens.push(Polynomial::from_terms(
                        &ring,
                        [(Monomial::from_exponents(&[0, 0, c]), 1)],
                    ));
                    gens
                },
            )
        }

        fn arb_homogeneous(ring: Ring) -> impl Strategy<Value = Polynomial> {
            let p = ring.characteristic();
            (1u32..=3).prop_flat_map(move |d| {
                let ring = ring.clone();
                prop::collection::vec(((0..=d), (0..=d), 1u32..p), 1..4).prop_map(move |ts| {
                    Polynomial::from_terms(
                        &ring,
                        ts.into_iter()
                            .filter(|(a, b, _)| a + b <= d)
                            .map(|(a, b, v)| (Monomial::from_exponents(&[a, b, d - a - b]), v)),
                    )
                })
            })
        }

        /// Classical Buchberger with full division, minimised and interreduced.
        fn buchberger_oracle(gens: &[Polynomial], ord: &MonomialOrder) -> Vec<Polynomial> {
            let lt = |f: &Polynomial| f.leading_term(ord).unwrap();
            let divide = |f: &Polynomial, g: &[Polynomial]| {
                let mut f = f.clone();
                let mut r = f.ring().zero();
                while !f.is_zero() {
                    let (m, c) = lt(&f);
                    match g.iter().find(|g| lt(g).0.divides(&m)) {
                        Some(g) => {
                            let (gm, gc) = lt(g);
                            let q = c * gc.inv().unwrap();
                            f = f.add_scaled(-q, &g.mul_monomial(&m.div(&gm).unwrap()));
                        }
                        None => {
                            let t = Polynomial::from_terms(f.ring(), [(m, c.value())]);
                            r = &r + &t;
                            f = &f - &t;
                        }
                    }
                }
                r
            };
            let mut g: Vec<Polynomial> = gens.iter().filter(|f| !f.is_zero()).cloned().collect();
            let mut pairs: Vec<(usize, usize)> = (0..g.len())
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .collect();
            while let Some((i, j)) = pairs.pop() {
                let ((mi, ci), (mj, cj)) = (lt(&g[i]), lt(&g[j]));
                let l = mi.lcm(&mj);
                let s = &g[i]
                    .mul_monomial(&l.div(&mi).unwrap())
                    .scale(ci.inv().unwrap())
                    - &g[j]
                        .mul_monomial(&l.div(&mj).unwrap())
                        .scale(cj.inv().unwrap());
                let r = divide(&s, &g);
                if !r.is_zero() {
                    g.push(r);
                    let k = g.len() - 1;
                    pairs.extend((0..k).map(|i| (i, k)));
                }
            }
            let mut minimal: Vec<Polynomial> = Vec::new();
            for (i, f) in g.iter().enumerate() {
                let m = lt(f).0;
                let redundant = g.iter().enumerate().any(|(j, h)| {
                    let hm = lt(h).0;
                    j != i && hm.divides(&m) && (hm != m || j < i)
                });
                if !redundant {
                    minimal.push(f.scale(lt(f).1.inv().unwrap()));
                }
            }
            (0..minimal.len())
                .map(|i| {
                    let others: Vec<Polynomial> = minimal
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != i)
                        .map(|(_, f)| f.clone())
                        .collect();
                    let (m, c) = lt(&minimal[i]);
                    let head = Polynomial::from_terms(minimal[i].ring(), [(m, c.value())]);
                    &head + &divide(&(&minimal[i] - &head), &others)
                })
                .collect()
        }

        fn rank(c: Colength) -> u64 {
            c.finite().unwrap_or(u64::MAX)
        }

        proptest! {
            #[test]
            fn witness_certifies_normal_forms(
                gens in arb_ideal(5, 1..3),
                f in arb_small_poly(xyz(5)),
                local in any::<bool>(),
            ) {
                let ord = if local { MonomialOrder::local(3) } else { MonomialOrder::degrevlex(3) };
                let basis = standard_basis(&gens, &ord).unwrap().generators();
                let w = normal_form_with_witness(&f, &basis, &ord).unwrap();
                prop_assert!(w.unit.is_unit_at_origin());
                let combo = basis.iter().zip(&w.cofactors).fold(w.remainder.clone(), |acc, (g, a)| &acc + &(a * g));
                prop_assert_eq!(&w.unit * &f, combo);
                prop_assert_eq!(standard_basis(&gens, &ord).unwrap().normal_form(&f).unwrap(), w.remainder.clone());
                if !w.remainder.is_zero() {
                    let lead = w.remainder.leading_term(&ord).unwrap().0;
                    let lms = standard_basis(&gens, &ord).unwrap().leading_monomials();
                    prop_assert!(lms.iter().all(|m| !m.divides(&lead)));
                }
            }

            #[test]
            fn enlarging_never_increases_colength(
                gens in prop_oneof![arb_ideal(3, 1..3), arb_primary_ideal(3)],
                extra in arb_small_poly(xyz(3)),
            ) {
                let ord = MonomialOrder::local(3);
                let small = standard_basis(&gens, &ord).unwrap().colength();
                let mut more = gens.clone();
                more.push(extra);
                let big = standard_basis(&more, &ord).unwrap().colength();
                prop_assert!(rank(big) <= rank(small), "{:?} > {:?}", big, small);
            }

            #[test]
            fn local_colength_matches_truncation(gens in arb_primary_ideal(3)) {
                let basis = standard_basis(&gens, &MonomialOrder::local(3)).unwrap();
                let ideal = IdealPresentation::new(&xyz(3), gens, None).unwrap();
                let expected = truncation_colength(&ideal, 24).unwrap();
                prop_assert_eq!(Truncation::Stable(basis.colength().finite().unwrap()), expected);
            }
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(20))]

            #[test]
            fn homogeneous_input_matches_buchberger(
                gens in prop::collection::vec(arb_homogeneous(xyz(7)), 2..4)
                    .prop_filter("non-zero", |g| g.iter().any(|f| !f.is_zero())),
            ) {
                let ord = MonomialOrder::degrevlex(3);
                let ours = standard_basis_with(&gens, &ord, Options { reduce: true }).unwrap();
                let mut got: Vec<String> = ours.generators().iter().map(ToString::to_string).collect();
                let mut want: Vec<String> = buchberger_oracle(&gens, &ord).iter().map(ToString::to_string).collect();
                got.sort();
                want.sort();
                prop_assert_eq!(got, want);
            }
        }
    }
}
