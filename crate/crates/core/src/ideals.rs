//! Ideals of `A = F_p[x_1..x_n]` localised at the origin, optionally taken
//! modulo a hypersurface equation `P`.

use std::collections::HashMap;

use thiserror::Error;

use crate::ring::{inv_mod, mul_mod, neg_mod, Monomial, MonomialOrder, Polynomial, Ring};
use crate::stdbasis::{standard_basis, Colength, StandardBasis, StdBasisError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("generators and modulus do not share one ambient ring")]
    AmbientMismatch,
    #[error("truncation cap must be at least 2, got {0}")]
    CapTooSmall(u32),
    #[error("box weights must be positive and match the variable count")]
    BadBoxWeights,
    #[error(transparent)]
    StdBasis(#[from] StdBasisError),
}

/// Generators `f_1..f_r` of an ideal, with an optional modulus `P`. All
/// lengths are of `A_loc / (f_1..f_r, P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    ring: Ring,
    gens: Vec<Polynomial>,
    modulus: Option<Polynomial>,
}

impl IdealPresentation {
    pub fn new(
        ring: &Ring,
        gens: Vec<Polynomial>,
        modulus: Option<Polynomial>,
    ) -> Result<Self, IdealError> {
        if gens.iter().chain(&modulus).any(|g| g.ring() != ring) {
            return Err(IdealError::AmbientMismatch);
        }
        Ok(IdealPresentation {
            ring: ring.clone(),
            gens,
            modulus,
        })
    }

    /// The maximal ideal at the origin.
    pub fn maximal(ring: &Ring, modulus: Option<Polynomial>) -> Result<Self, IdealError> {
        Self::new(ring, ring.gens(), modulus)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn modulus(&self) -> Option<&Polynomial> {
        self.modulus.as_ref()
    }

    pub fn with_gens(&self, gens: Vec<Polynomial>) -> Result<Self, IdealError> {
        Self::new(&self.ring, gens, self.modulus.clone())
    }

    /// Generators with the modulus appended, zeros removed.
    pub fn lifted_gens(&self) -> Vec<Polynomial> {
        self.gens
            .iter()
            .chain(&self.modulus)
            .filter(|g| !g.is_zero())
            .cloned()
            .collect()
    }

    /// Standard basis of the lifted ideal under `ord`, or `None` for the zero ideal.
    pub fn standard_basis(&self, ord: &MonomialOrder) -> Result<Option<StandardBasis>, IdealError> {
        let gens = self.lifted_gens();
        if gens.is_empty() {
            return Ok(None);
        }
        Ok(Some(standard_basis(&gens, ord)?))
    }
}

/// `(P, ∂P/∂x_1, .., ∂P/∂x_n)` with modulus `P`; vanishing partials are dropped.
pub fn jacobian_ideal(p: &Polynomial) -> Result<IdealPresentation, IdealError> {
    if p.is_zero() {
        return Err(IdealError::ZeroPolynomial);
    }
    let ring = p.ring();
    let mut gens = vec![p.clone()];
    gens.extend(
        (0..ring.nvars())
            .map(|i| p.derivative(i))
            .filter(|d| !d.is_zero()),
    );
    IdealPresentation::new(ring, gens, Some(p.clone()))
}

/// The partial derivatives of `P` alone (the ideal 𝔞 of R = A/(P)), zeros dropped.
pub fn partials_ideal(p: &Polynomial) -> Result<IdealPresentation, IdealError> {
    if p.is_zero() {
        return Err(IdealError::ZeroPolynomial);
    }
    let ring = p.ring();
    let gens = (0..ring.nvars())
        .map(|i| p.derivative(i))
        .filter(|d| !d.is_zero())
        .collect();
    IdealPresentation::new(ring, gens, Some(p.clone()))
}

/// `𝔞^{[p]} = (f_1^p, .., f_r^p)`; the modulus is kept as it is.
pub fn frobenius_power(ideal: &IdealPresentation) -> IdealPresentation {
    IdealPresentation {
        ring: ideal.ring.clone(),
        gens: ideal.gens.iter().map(Polynomial::frobenius).collect(),
        modulus: ideal.modulus.clone(),
    }
}

/// Length of `A_loc/(I + (P))` under the unit-weight local order.
pub fn local_colength(ideal: &IdealPresentation) -> Colength {
    local_colength_with_order(ideal, &MonomialOrder::local(ideal.ring.nvars()))
        .expect("order built for this ring")
}

/// As [`local_colength`] under a caller-chosen local order.
pub fn local_colength_with_order(
    ideal: &IdealPresentation,
    ord: &MonomialOrder,
) -> Result<Colength, IdealError> {
    if ord.nvars() != ideal.ring.nvars() || !ord.is_local() {
        return Err(IdealError::AmbientMismatch);
    }
    Ok(match ideal.standard_basis(ord)? {
        Some(sb) => sb.colength(),
        None if ideal.ring.nvars() == 0 => Colength::Finite(1),
        None => Colength::Infinite,
    })
}

/// `μ(I) = dim_k I/𝔪I` in `R = A_loc/(P)`, by greedy Nakayama selection.
pub fn min_generators(ideal: &IdealPresentation) -> Result<usize, IdealError> {
    let ring = &ideal.ring;
    let ord = MonomialOrder::local(ring.nvars());
    let gens: Vec<&Polynomial> = ideal.gens.iter().filter(|g| !g.is_zero()).collect();
    let mut base: Vec<Polynomial> = Vec::new();
    for g in &gens {
        for v in ring.gens() {
            base.push(&v * *g);
        }
    }
    base.extend(ideal.modulus.iter().filter(|m| !m.is_zero()).cloned());
    let mut accepted: Vec<Polynomial> = Vec::new();
    for g in gens {
        let mut current = accepted.clone();
        current.extend(base.iter().cloned());
        let member = if current.is_empty() {
            false
        } else {
            standard_basis(&current, &ord)?.is_member(g)?
        };
        if !member {
            accepted.push(g.clone());
        }
    }
    Ok(accepted.len())
}

/// Result of the linear-algebra oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Truncation {
    /// `dim A/(I + J_N)` agreed for two consecutive truncation levels.
    Stable(u64),
    /// No agreement up to the cap.
    Unstable,
}

/// Family of 𝔪-primary monomial ideals `J_N` used to truncate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TruncationShape {
    /// `J_N = 𝔪^N`.
    MaximalPower,
    /// `J_N = (x_v^{w_v·N})`, a box of side lengths `w_v·N`.
    Box(Vec<u32>),
}

impl TruncationShape {
    /// Box whose side along each variable is scaled by that variable's
    /// largest exponent in the modulus, so that one step adds a full period.
    pub fn box_for(ideal: &IdealPresentation) -> TruncationShape {
        let n = ideal.ring.nvars();
        let mut w = vec![1u32; n];
        if let Some(p) = &ideal.modulus {
            for (m, _) in p.terms() {
                for (v, &e) in m.exponents().iter().enumerate() {
                    w[v] = w[v].max(e);
                }
            }
        }
        TruncationShape::Box(w)
    }
}

/// `dim_k A/(I + 𝔪^N)` for `N = 1, 2, ..` until two consecutive levels agree.
pub fn truncation_colength(ideal: &IdealPresentation, cap: u32) -> Result<Truncation, IdealError> {
    truncation_colength_with(ideal, cap, &TruncationShape::MaximalPower)
}

/// As [`truncation_colength`] with a chosen truncation family.
///
/// Agreement at consecutive levels `N-1, N` means `J_{N-1} ⊆ I + J_N ⊆ I + 𝔪J_{N-1}`,
/// so `J_{N-1}` lies in `I` locally by Nakayama and the common value is the
/// local length.
pub fn truncation_colength_with(
    ideal: &IdealPresentation,
    cap: u32,
    shape: &TruncationShape,
) -> Result<Truncation, IdealError> {
    if cap < 2 {
        return Err(IdealError::CapTooSmall(cap));
    }
    if let TruncationShape::Box(w) = shape {
        if w.len() != ideal.ring.nvars() || w.contains(&0) {
            return Err(IdealError::BadBoxWeights);
        }
    }
    let gens = ideal.lifted_gens();
    let mut previous = truncated_dimension(&gens, ideal.ring.nvars(), 1, shape);
    for level in 2..=cap {
        let d = truncated_dimension(&gens, ideal.ring.nvars(), level, shape);
        if d == previous {
            return Ok(Truncation::Stable(d));
        }
        previous = d;
    }
    Ok(Truncation::Unstable)
}

/// Monomials outside `J_level`, sorted by total degree then exponents.
fn truncation_columns(nvars: usize, level: u32, shape: &TruncationShape) -> Vec<Monomial> {
    let bounds: Vec<u32> = match shape {
        TruncationShape::MaximalPower => vec![level; nvars],
        TruncationShape::Box(w) => w.iter().map(|&wv| wv * level).collect(),
    };
    let mut out = Vec::new();
    let mut e = vec![0u32; nvars];
    if nvars == 0 {
        return vec![Monomial::one(0)];
    }
    loop {
        let keep = match shape {
            TruncationShape::MaximalPower => {
                e.iter().map(|&x| u64::from(x)).sum::<u64>() < u64::from(level)
            }
            TruncationShape::Box(_) => true,
        };
        if keep {
            out.push(Monomial::from_exponents(&e));
        }
        let mut k = 0;
        loop {
            if k == nvars {
                out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
                return out;
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

fn truncated_dimension(
    gens: &[Polynomial],
    nvars: usize,
    level: u32,
    shape: &TruncationShape,
) -> u64 {
    let columns = truncation_columns(nvars, level, shape);
    let index: HashMap<&Monomial, usize> =
        columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let p = gens.first().map_or(2, Polynomial::characteristic);
    let mut pivots: Vec<Option<Vec<(usize, u32)>>> = vec![None; columns.len()];
    let mut rank = 0u64;
    for g in gens {
        for m in &columns {
            let mut row: Vec<(usize, u32)> = g
                .terms()
                .filter_map(|(t, c)| index.get(&t.mul(m)).map(|&i| (i, c)))
                .collect();
            if row.is_empty() {
                continue;
            }
            row.sort_unstable_by_key(|t| t.0);
            if insert_row(&mut pivots, row, p) {
                rank += 1;
            }
        }
    }
    columns.len() as u64 - rank
}

/// Echelonises `row` against `pivots`; returns whether it raised the rank.
fn insert_row(
    pivots: &mut [Option<Vec<(usize, u32)>>],
    mut row: Vec<(usize, u32)>,
    p: u32,
) -> bool {
    while let Some(&(lead, c)) = row.first() {
        match &pivots[lead] {
            Some(pivot) => {
                row = axpy(&row, pivot, neg_mod(c, p), p);
            }
            None => {
                let inv = inv_mod(c, p);
                for t in row.iter_mut() {
                    t.1 = mul_mod(t.1, inv, p);
                }
                pivots[lead] = Some(row);
                return true;
            }
        }
    }
    false
}

/// `a + c·b` for sparse rows sorted by column.
fn axpy(a: &[(usize, u32)], b: &[(usize, u32)], c: u32, p: u32) -> Vec<(usize, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, mul_mod(b[j].1, c, p)));
            j += 1;
        } else {
            let v = (a[i].1 + mul_mod(b[j].1, c, p)) % p;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz(p: u32) -> Ring {
        Ring::xyz(p).unwrap()
    }

    #[test]
    fn jacobian_generators() {
        let ring = xyz(5);
        let p = ring.parse("z^2 - x*y").unwrap();
        let j = jacobian_ideal(&p).unwrap();
        let want: Vec<Polynomial> = ["z^2 - x*y", "-y", "-x", "2*z"]
            .iter()
            .map(|s| ring.parse(s).unwrap())
            .collect();
        assert_eq!(j.gens(), want.as_slice());
        assert_eq!(j.modulus(), Some(&p));

        let ring = xyz(3);
        let d4 = ring.parse("z^2 + x^2*y + x*y^3").unwrap();
        let got = jacobian_ideal(&d4).unwrap();
        assert_eq!(got.gens()[1], ring.parse("2*x*y + y^3").unwrap());
        assert_eq!(got.gens()[2], ring.parse("x^2").unwrap());
        assert_eq!(got.gens()[3], ring.parse("2*z").unwrap());

        let ring = xyz(2);
        let d8 = ring.parse("z^2 + x^2*y + x*y^4").unwrap();
        assert_eq!(jacobian_ideal(&d8).unwrap().gens().len(), 3);
        assert_eq!(
            jacobian_ideal(&ring.zero()),
            Err(IdealError::ZeroPolynomial)
        );
    }

    #[test]
    fn frobenius_keeps_modulus() {
        let ring = xyz(3);
        let i = IdealPresentation::new(&ring, vec![ring.gen(0), ring.gen(1)], None).unwrap();
        let f = frobenius_power(&i);
        assert_eq!(
            f.gens(),
            &[ring.parse("x^3").unwrap(), ring.parse("y^3").unwrap()]
        );
        let p = ring.parse("z^3 - x*y").unwrap();
        let a = partials_ideal(&p).unwrap();
        assert_eq!(frobenius_power(&a).modulus(), Some(&p));
    }

    #[test]
    fn a_type_lengths() {
        let ring = xyz(5);
        let p = ring.parse("z^3 - x*y").unwrap();
        let a = jacobian_ideal(&p).unwrap();
        assert_eq!(local_colength(&a), Colength::Finite(2));
        let unit = IdealPresentation::new(&ring, vec![ring.one()], None).unwrap();
        assert_eq!(local_colength(&unit), Colength::Finite(0));
    }

    #[test]
    fn e8_at_five() {
        let ring = xyz(5);
        let p = ring.parse("z^2 + x^3 + y^5").unwrap();
        let a = jacobian_ideal(&p).unwrap();
        assert_eq!(local_colength(&a), Colength::Finite(10));
        assert_eq!(local_colength(&frobenius_power(&a)), Colength::Finite(250));
        assert_eq!(min_generators(&partials_ideal(&p).unwrap()).unwrap(), 2);
    }

    #[test]
    fn min_generators_basics() {
        let ring = Ring::new(&["x", "y"], 3).unwrap();
        let i = IdealPresentation::new(&ring, vec![ring.gen(0), ring.gen(0), ring.gen(1)], None)
            .unwrap();
        assert_eq!(min_generators(&i).unwrap(), 2);
        let unit_multiple = ring.parse("x + x*y").unwrap();
        let j = IdealPresentation::new(&ring, vec![unit_multiple, ring.gen(1)], None).unwrap();
        assert_eq!(min_generators(&j).unwrap(), 2);
    }

    #[test]
    fn truncation_examples() {
        let ring = xyz(3);
        let m2: Vec<Polynomial> = ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]
            .iter()
            .map(|s| ring.parse(s).unwrap())
            .collect();
        let i = IdealPresentation::new(&ring, m2, None).unwrap();
        assert_eq!(truncation_colength(&i, 64).unwrap(), Truncation::Stable(4));
        assert_eq!(truncation_colength(&i, 1), Err(IdealError::CapTooSmall(1)));

        let ring = xyz(2);
        let d9 = ring.parse("z^2 + x^2*y + y^4*z + x*y^2*z").unwrap();
        let b = jacobian_ideal(&d9).unwrap();
        assert_eq!(truncation_colength(&b, 64).unwrap(), Truncation::Stable(12));
        assert_eq!(local_colength(&b), Colength::Finite(12));
        let bz = IdealPresentation::new(
            &ring,
            vec![d9.derivative(0), d9.derivative(1)],
            Some(d9.clone()),
        )
        .unwrap();
        assert_eq!(truncation_colength(&bz, 16).unwrap(), Truncation::Unstable);
        let boxed = TruncationShape::box_for(&b);
        assert_eq!(boxed, TruncationShape::Box(vec![2, 4, 2]));
        assert_eq!(
            truncation_colength_with(&b, 64, &boxed).unwrap(),
            Truncation::Stable(12)
        );
    }

    #[test]
    fn away_from_origin_components_are_ignored() {
        // (x(x−1), y) has length 2 globally but 1 at the origin.
        let ring = Ring::new(&["x", "y"], 5).unwrap();
        let i = IdealPresentation::new(
            &ring,
            vec![ring.parse("x^2 - x").unwrap(), ring.gen(1)],
            None,
        )
        .unwrap();
        assert_eq!(local_colength(&i), Colength::Finite(1));
        assert_eq!(truncation_colength(&i, 16).unwrap(), Truncation::Stable(1));
    }

    mod properties {
        use super::*;
        use crate::rdp::{catalog_equation, Family, RdpSpec, Table1Ranges, Table1Row};
        use crate::ring::Monomial;
        use proptest::prelude::*;

        fn sample_specs() -> Vec<RdpSpec> {
            Table1Ranges {
                primes: vec![2, 3, 5, 7],
                a_max: 12,
                d_max_char2: 11,
                d_max_odd_char: 9,
                include_e: true,
            }
            .specs()
        }

        #[test]
        fn frobenius_length_bound_and_free_rows() {
            // Rows whose computed lengths disagree with the qualitative table.
            let conflicts = [(Family::E, 6, 1, 2), (Family::E, 7, 2, 2)];
            for spec in sample_specs() {
                let a = partials_ideal(&catalog_equation(&spec).unwrap()).unwrap();
                let la = local_colength(&a).finite().unwrap();
                let lap = local_colength(&frobenius_power(&a)).finite().unwrap();
                let p2 = u64::from(spec.p * spec.p);
                assert!(lap >= p2 * la, "{spec:?}: {lap} < {p2}·{la}");
                let row_free = Table1Row::of(&spec).expected().0;
                let listed = !conflicts.contains(&(spec.family, spec.index, spec.coindex, spec.p));
                assert_eq!(
                    lap == p2 * la,
                    row_free == listed,
                    "{spec:?}: ℓ₁={la}, ℓ_p={lap}"
                );
            }
        }

        fn arb_unit(ring: Ring) -> impl Strategy<Value = Polynomial> {
            let p = ring.characteristic();
            prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), 1u32..p), 0..3).prop_map(
                move |ts| {
                    let tail = ts
                        .into_iter()
                        .filter(|((a, b, c), _)| a + b + c > 0)
                        .map(|((a, b, c), v)| (Monomial::from_exponents(&[a, b, c]), v));
                    &ring.one() + &Polynomial::from_terms(&ring, tail.collect::<Vec<_>>())
                },
            )
        }

        fn arb_spec() -> impl Strategy<Value = RdpSpec> {
            let specs = sample_specs();
            (0..specs.len()).prop_map(move |i| specs[i])
        }

        fn arb_twisted(spec: RdpSpec) -> impl Strategy<Value = (RdpSpec, Vec<Polynomial>)> {
            let ring = Ring::xyz(spec.p).unwrap();
            let a = partials_ideal(&catalog_equation(&spec).unwrap()).unwrap();
            let n = a.gens().len();
            (
                Just(a.gens().to_vec()).prop_shuffle(),
                prop::collection::vec(arb_unit(ring), n),
            )
                .prop_map(move |(gens, units)| {
                    (spec, gens.iter().zip(&units).map(|(g, u)| g * u).collect())
                })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn min_generators_ignore_order_and_units((spec, gens) in arb_spec().prop_flat_map(arb_twisted)) {
                let a = partials_ideal(&catalog_equation(&spec).unwrap()).unwrap();
                let twisted = a.with_gens(gens).unwrap();
                prop_assert_eq!(min_generators(&twisted).unwrap(), min_generators(&a).unwrap());
            }

            #[test]
            fn length_does_not_depend_on_local_order(
                spec in arb_spec(),
                weights in prop::collection::vec(1u32..4, 3),
                precedence in Just(vec![0usize, 1, 2]).prop_shuffle(),
            ) {
                let a = partials_ideal(&catalog_equation(&spec).unwrap()).unwrap();
                let ord = MonomialOrder::local_weighted(weights, precedence).unwrap();
                prop_assert_eq!(local_colength_with_order(&a, &ord).unwrap(), local_colength(&a));
                let ap = frobenius_power(&a);
                prop_assert_eq!(local_colength_with_order(&ap, &ord).unwrap(), local_colength(&ap));
            }
        }
    }
}
