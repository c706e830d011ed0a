use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{add_mod, mul_mod, neg_mod, pow_mod, reduce_i64};
use super::{FpElement, Monomial, MonomialOrder, Ring, RingError};

/// A polynomial over F_p.
///
/// Terms are kept sorted in descending degree-reverse-lexicographic order
/// with no zero coefficients; the zero polynomial has no terms. Arithmetic
/// operators panic when the operands live in different rings.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, u32)>,
}

/// Storage order for [`Polynomial`] terms.
pub(crate) fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (ea, eb) in a.exponents().iter().zip(b.exponents()).rev() {
            match ea.cmp(eb) {
                Ordering::Equal => continue,
                other => return other.reverse(),
            }
        }
        Ordering::Equal
    })
}

/// Merges `a + c*b` for two term lists sorted descending under `cmp`.
pub(crate) fn merge_add(
    a: &[(Monomial, u32)],
    b: &[(Monomial, u32)],
    c: u32,
    p: u32,
    cmp: impl Fn(&Monomial, &Monomial) -> Ordering,
) -> Vec<(Monomial, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let v = mul_mod(b[j].1, c, p);
                if v != 0 {
                    out.push((b[j].0.clone(), v));
                }
                j += 1;
            }
            Ordering::Equal => {
                let v = add_mod(a[i].1, mul_mod(b[j].1, c, p), p);
                if v != 0 {
                    out.push((a[i].0.clone(), v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (m, v) in &b[j..] {
        let v = mul_mod(*v, c, p);
        if v != 0 {
            out.push((m.clone(), v));
        }
    }
    out
}

/// Sorts descending under `cmp` and combines equal monomials.
pub(crate) fn normalize_terms(
    mut terms: Vec<(Monomial, u32)>,
    p: u32,
    cmp: impl Fn(&Monomial, &Monomial) -> Ordering,
) -> Vec<(Monomial, u32)> {
    terms.sort_by(|a, b| cmp(&b.0, &a.0));
    let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        match out.last_mut() {
            Some(last) if last.0 == m => last.1 = add_mod(last.1, c, p),
            _ => out.push((m, c % p)),
        }
    }
    out.retain(|t| t.1 != 0);
    out
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    /// A single term `c * m`.
    pub fn term(ring: &Ring, m: Monomial, c: i64) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial length mismatch");
        let c = reduce_i64(c, ring.characteristic());
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (monomial, residue) pairs.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, u32)>) -> Self {
        let p = ring.characteristic();
        let terms: Vec<_> = terms.into_iter().map(|(m, c)| (m, c % p)).collect();
        debug_assert!(terms.iter().all(|(m, _)| m.nvars() == ring.nvars()));
        Polynomial {
            ring: ring.clone(),
            terms: normalize_terms(terms, p, canonical_cmp),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn characteristic(&self) -> u32 {
        self.ring.characteristic()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in storage order as (monomial, residue).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u32)> {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    pub(crate) fn raw_terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> FpElement {
        let p = self.characteristic();
        let c = self
            .terms
            .binary_search_by(|(t, _)| canonical_cmp(m, t))
            .map(|i| self.terms[i].1)
            .unwrap_or(0);
        FpElement::from_residue(c, p)
    }

    pub fn constant_term(&self) -> FpElement {
        self.coefficient(&Monomial::one(self.ring.nvars()))
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// Lowest total degree of a term (the order at the origin); `None` for zero.
    pub fn order(&self) -> Option<u64> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    /// A unit of the local ring at the origin.
    pub fn is_unit_at_origin(&self) -> bool {
        !self.constant_term().is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    fn check_ring(&self, other: &Polynomial) {
        assert_eq!(self.ring, other.ring, "ambient mismatch");
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        if self.ring != other.ring {
            return Err(RingError::AmbientMismatch);
        }
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        if self.ring != other.ring {
            return Err(RingError::AmbientMismatch);
        }
        Ok(self * other)
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: FpElement, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let p = self.characteristic();
        Polynomial {
            ring: self.ring.clone(),
            terms: merge_add(&self.terms, &other.terms, c.value(), p, canonical_cmp),
        }
    }

    pub fn scale(&self, c: FpElement) -> Polynomial {
        let p = self.characteristic();
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), mul_mod(*v, c.value(), p)))
                .collect(),
        }
    }

    /// Multiplication by a monomial preserves the storage order.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), *c)).collect(),
        }
    }

    pub fn pow(&self, e: u64) -> Polynomial {
        self.checked_pow(e).expect("exponent overflow")
    }

    /// Square-and-multiply power; `None` if an exponent would overflow.
    pub fn checked_pow(&self, mut e: u64) -> Option<Polynomial> {
        if let Some(d) = self.terms.iter().flat_map(|(m, _)| m.exponents()).max() {
            if u64::from(*d).checked_mul(e)? > u64::from(u32::MAX) {
                return None;
            }
        }
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Some(acc)
    }

    /// `f^p`, computed termwise since the Frobenius is additive in characteristic p.
    pub fn frobenius(&self) -> Polynomial {
        let p = self.characteristic();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                (
                    m.checked_pow(p).expect("exponent overflow"),
                    pow_mod(*c, u64::from(p), p),
                )
            })
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Formal partial derivative with respect to the variable at `index`.
    pub fn derivative(&self, index: usize) -> Polynomial {
        let p = self.characteristic();
        let terms: Vec<_> = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let e = m.exponent(index);
                let factor = (u64::from(e) % u64::from(p)) as u32;
                if factor == 0 {
                    return None;
                }
                let mut q = m.clone();
                q.exponents_mut()[index] -= 1;
                Some((q, mul_mod(*c, factor, p)))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<(Monomial, FpElement), RingError> {
        if ord.nvars() != self.ring.nvars() {
            return Err(RingError::AmbientMismatch);
        }
        let p = self.characteristic();
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.0, &b.0))
            .map(|(m, c)| (m.clone(), FpElement::from_residue(*c, p)))
            .ok_or(RingError::ZeroPolynomial)
    }

    /// Terms of total degree below `bound`.
    pub fn truncate_below(&self, bound: u64) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() < bound)
                .cloned()
                .collect(),
        }
    }

    /// Evaluation at a point of F_p^n.
    pub fn evaluate(&self, point: &[FpElement]) -> FpElement {
        let p = self.characteristic();
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = 0u32;
        for (m, c) in &self.terms {
            let mut v = *c;
            for (e, x) in m.exponents().iter().zip(point) {
                v = mul_mod(v, pow_mod(x.value(), u64::from(*e), p), p);
            }
            acc = add_mod(acc, v, p);
        }
        FpElement::from_residue(acc, p)
    }

    /// Renders the terms in descending `ord` order, e.g. `z^2 + 4*x*y`.
    pub fn display_with(&self, ord: &MonomialOrder) -> String {
        let mut terms: Vec<&(Monomial, u32)> = self.terms.iter().collect();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        render(self.ring.vars(), terms.into_iter())
    }
}

fn render<'a>(vars: &[String], terms: impl Iterator<Item = &'a (Monomial, u32)>) -> String {
    use fmt::Write;
    let mut out = String::new();
    for (i, (m, c)) in terms.enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        if m.is_one() {
            write!(out, "{c}").unwrap();
            continue;
        }
        if *c != 1 {
            write!(out, "{c}*").unwrap();
        }
        m.write_with(&mut out, vars).unwrap();
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self.ring.vars(), self.terms.iter()))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self} in {})", self.ring)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled(FpElement::one(self.characteristic()), rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let p = self.characteristic();
        self.add_scaled(FpElement::from_residue(p - 1, p), rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let p = self.characteristic();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), neg_mod(*c, p)))
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let p = self.characteristic();
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                terms.push((a.mul(b), mul_mod(*ca, *cb, p)));
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: normalize_terms(terms, p, canonical_cmp),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(p: u32) -> Ring {
        Ring::xyz(p).unwrap()
    }

    #[test]
    fn partial_derivatives_of_catalog_equations() {
        let r5 = ring(5);
        let a3 = r5.parse("z^4 - x*y").unwrap();
        assert_eq!(a3.derivative(2), r5.parse("4*z^3").unwrap());

        let r3 = ring(3);
        assert!(r3.parse("z^3 - x*y").unwrap().derivative(2).is_zero());

        // D_9^1 in characteristic two, n = 4, r = 1.
        let r2 = ring(2);
        let p = r2.parse("z^2 + x^2*y + y^4*z + x*y^3*z").unwrap();
        assert_eq!(p.derivative(0), r2.parse("y^3*z").unwrap());
    }

    #[test]
    fn leading_terms_under_orders() {
        let r = ring(7);
        let f = r.parse("x + y^2").unwrap();
        let (m, c) = f.leading_term(&MonomialOrder::lex(3)).unwrap();
        assert_eq!(m.exponents(), &[1, 0, 0]);
        assert_eq!(c.value(), 1);
        let (m, _) = f.leading_term(&MonomialOrder::local(3)).unwrap();
        assert_eq!(m.exponents(), &[1, 0, 0]);
        assert_eq!(
            r.zero().leading_term(&MonomialOrder::lex(3)),
            Err(RingError::ZeroPolynomial)
        );
    }

    #[test]
    fn dtype_leading_terms() {
        // D_{2n+1}^r at p = 2 with n = 4, r = 1 and the weights (n-1, 1, n-1).
        let r = ring(2);
        let ord = MonomialOrder::local_weighted(vec![3, 1, 3], vec![0, 2, 1]).unwrap();
        let p = r.parse("z^2 + x^2*y + y^4*z + x*y^3*z").unwrap();
        assert_eq!(p.leading_term(&ord).unwrap().0.exponents(), &[0, 0, 2]);
        let px = p.derivative(0);
        assert_eq!(px.leading_term(&ord).unwrap().0.exponents(), &[0, 3, 1]);
    }

    #[test]
    fn frobenius_matches_pow() {
        for p in [2u32, 3, 5] {
            let r = ring(p);
            let f = r.parse("x + 2*y*z - z^2 + 1").unwrap();
            assert_eq!(f.frobenius(), f.pow(u64::from(p)));
        }
    }

    #[test]
    fn evaluation_and_unit_detection() {
        let r = ring(5);
        let f = r.parse("1 + x*y + 3*z").unwrap();
        assert!(f.is_unit_at_origin());
        assert!(!r.parse("x").unwrap().is_unit_at_origin());
        let pt = [r.element(1), r.element(2), r.element(3)];
        assert_eq!(f.evaluate(&pt).value(), (1 + 2 + 9) % 5);
    }

    #[test]
    fn display_uses_requested_order() {
        let r = ring(5);
        let f = r.parse("z^2 - x*y").unwrap();
        assert_eq!(f.display_with(&MonomialOrder::lex(3)), "4*x*y + z^2");
        let zyx = MonomialOrder::lex(3)
            .with_precedence(vec![2, 1, 0])
            .unwrap();
        assert_eq!(f.display_with(&zyx), "z^2 + 4*x*y");
        assert_eq!(r.zero().to_string(), "0");
    }

    #[test]
    #[should_panic(expected = "ambient mismatch")]
    fn mixing_rings_panics() {
        let _ = &ring(5).one() + &ring(7).one();
    }

    fn arb_poly(p: u32) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(((0u32..4, 0u32..4, 0u32..4), 0u32..p), 0..6).prop_map(move |ts| {
            Polynomial::from_terms(
                &ring(p),
                ts.into_iter()
                    .map(|((a, b, c), v)| (Monomial::from_exponents(&[a, b, c]), v)),
            )
        })
    }

    fn arb_triple() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
        prop::sample::select(vec![2u32, 3, 5, 7])
            .prop_flat_map(|p| (arb_poly(p), arb_poly(p), arb_poly(p)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn distributive((f, g, h) in arb_triple()) {
            prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        }

        #[test]
        fn derivative_is_additive_and_leibniz((f, g, _) in arb_triple(), v in 0usize..3) {
            prop_assert_eq!((&f + &g).derivative(v), &f.derivative(v) + &g.derivative(v));
            let lhs = (&f * &g).derivative(v);
            let rhs = &(&f.derivative(v) * &g) + &(&f * &g.derivative(v));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn derivative_kills_pth_powers((f, _, _) in arb_triple(), v in 0usize..3) {
            let p = u64::from(f.characteristic());
            prop_assert!(f.pow(p).derivative(v).is_zero());
        }
    }
}
