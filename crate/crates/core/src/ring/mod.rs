//! Exact arithmetic in F_p and in F_p[x_1, ..., x_n].

mod field;
mod monomial;
mod order;
mod parser;
mod polynomial;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub(crate) use field::{inv_mod, mul_mod, neg_mod};
pub use field::{is_prime, FpElement, MAX_CHARACTERISTIC};
pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use polynomial::Polynomial;
pub(crate) use polynomial::{merge_add, normalize_terms};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable `{name}`")]
    UnknownVariable { name: String },
    #[error("exponent overflow at byte {pos}")]
    ExponentOverflow { pos: usize },
    #[error("{0} is not a supported prime characteristic")]
    NotPrime(u32),
    #[error("invalid variable list: {0}")]
    InvalidVariables(String),
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("operands live in different rings")]
    AmbientMismatch,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
}

#[derive(Debug, PartialEq, Eq)]
struct RingData {
    vars: Vec<String>,
    p: u32,
}

/// The polynomial ring F_p[vars]. Cheap to clone.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S], p: u32) -> Result<Ring, RingError> {
        if !is_prime(p) || p > MAX_CHARACTERISTIC {
            return Err(RingError::NotPrime(p));
        }
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            let mut chars = v.chars();
            let valid = chars
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(RingError::InvalidVariables(format!("bad name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(RingError::InvalidVariables(format!("duplicate `{v}`")));
            }
        }
        Ok(Ring(Arc::new(RingData { vars, p })))
    }

    /// `F_p[x, y, z]`, the ambient ring of every surface singularity here.
    pub fn xyz(p: u32) -> Result<Ring, RingError> {
        Ring::new(&["x", "y", "z"], p)
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn var_index(&self, name: &str) -> Result<usize, RingError> {
        self.0
            .vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| RingError::UnknownVariable {
                name: name.to_string(),
            })
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self)
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        Polynomial::term(self, Monomial::one(self.nvars()), c)
    }

    /// The coordinate function of the `index`-th variable.
    pub fn gen(&self, index: usize) -> Polynomial {
        Polynomial::term(self, Monomial::var(self.nvars(), index), 1)
    }

    pub fn var(&self, name: &str) -> Result<Polynomial, RingError> {
        Ok(self.gen(self.var_index(name)?))
    }

    pub fn gens(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.gen(i)).collect()
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial, RingError> {
        parser::parse(self, text)
    }

    pub fn element(&self, value: i64) -> FpElement {
        FpElement::new(value, self.characteristic())
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[{}]", self.0.p, self.0.vars.join(","))
    }
}

/// Parses `text` as a polynomial in `vars` over F_p.
pub fn parse_polynomial<S: AsRef<str>>(
    text: &str,
    vars: &[S],
    p: u32,
) -> Result<Polynomial, RingError> {
    Ring::new(vars, p)?.parse(text)
}

/// Formal partial derivative with respect to the named variable.
pub fn partial_derivative(f: &Polynomial, var: &str) -> Result<Polynomial, RingError> {
    Ok(f.derivative(f.ring().var_index(var)?))
}

/// Compares two monomials under `ord`; `Greater` means `a ≻ b`.
pub fn compare(
    a: &Monomial,
    b: &Monomial,
    ord: &MonomialOrder,
) -> Result<std::cmp::Ordering, RingError> {
    ord.compare(a, b)
}

/// The order-maximal term of a non-zero polynomial.
pub fn leading_term(
    f: &Polynomial,
    ord: &MonomialOrder,
) -> Result<(Monomial, FpElement), RingError> {
    f.leading_term(ord)
}
