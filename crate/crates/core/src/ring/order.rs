//! Monomial orderings, global and local.
//!
//! `Ordering::Greater` from [`MonomialOrder::cmp`] means the first monomial
//! is the larger one (`a ≻ b`). Local orders are anti-graded: a smaller
//! weighted degree is *larger*, so the constant monomial is the maximum.

use std::cmp::Ordering;

use super::{Monomial, RingError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegRevLex,
    LocalWeighted,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    weights: Vec<u32>,
    /// Variable indices from most to least significant.
    precedence: Vec<usize>,
}

impl MonomialOrder {
    pub fn lex(nvars: usize) -> Self {
        Self::global(OrderKind::Lex, nvars)
    }

    pub fn degrevlex(nvars: usize) -> Self {
        Self::global(OrderKind::DegRevLex, nvars)
    }

    fn global(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder {
            kind,
            weights: vec![1; nvars],
            precedence: (0..nvars).collect(),
        }
    }

    /// Local order with unit weights and the natural variable precedence.
    pub fn local(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::LocalWeighted,
            weights: vec![1; nvars],
            precedence: (0..nvars).collect(),
        }
    }

    /// Anti-graded order: `m ≻ m'` iff `wdeg(m) < wdeg(m')`, ties broken
    /// lexicographically along `precedence`.
    pub fn local_weighted(weights: Vec<u32>, precedence: Vec<usize>) -> Result<Self, RingError> {
        if weights.contains(&0) {
            return Err(RingError::InvalidOrder("weights must be positive".into()));
        }
        let order = MonomialOrder {
            kind: OrderKind::LocalWeighted,
            weights,
            precedence,
        };
        order.validate_precedence()?;
        Ok(order)
    }

    /// Replaces the tie-breaking precedence (a permutation of `0..nvars`).
    pub fn with_precedence(mut self, precedence: Vec<usize>) -> Result<Self, RingError> {
        self.precedence = precedence;
        self.validate_precedence()?;
        Ok(self)
    }

    fn validate_precedence(&self) -> Result<(), RingError> {
        let n = self.weights.len();
        let mut seen = vec![false; n];
        if self.precedence.len() != n {
            return Err(RingError::InvalidOrder(format!(
                "precedence has {} entries, expected {n}",
                self.precedence.len()
            )));
        }
        for &i in &self.precedence {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(RingError::InvalidOrder(
                    "precedence is not a permutation".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn is_local(&self) -> bool {
        self.kind == OrderKind::LocalWeighted
    }

    /// Total order on monomials of matching length (unchecked).
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Lex => self.lex_cmp(a, b),
            OrderKind::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for &i in self.precedence.iter().rev() {
                    match a.exponent(i).cmp(&b.exponent(i)) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }),
            OrderKind::LocalWeighted => b
                .weighted_degree(&self.weights)
                .cmp(&a.weighted_degree(&self.weights))
                .then_with(|| self.lex_cmp(a, b)),
        }
    }

    fn lex_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &i in &self.precedence {
            match a.exponent(i).cmp(&b.exponent(i)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// Checked comparison; errors when either monomial has the wrong length.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, RingError> {
        if a.nvars() != self.nvars() || b.nvars() != self.nvars() {
            return Err(RingError::AmbientMismatch);
        }
        Ok(self.cmp(a, b))
    }
}
