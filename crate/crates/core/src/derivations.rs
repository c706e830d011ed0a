//! Derivations `δ = Σ c_v ∂/∂v` of F_p[v₁,…,v_n] and of hypersurface quotients.
//!
//! Equality of derivations on `A/(P)` is decided coordinate by coordinate by
//! division against `P` in degrevlex; a single polynomial is its own Gröbner
//! basis.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::rdp::{catalog_equation, Family, RdpError, RdpSpec};
use crate::ring::{MonomialOrder, Polynomial, Ring, RingError};
use crate::stdbasis::{standard_basis, StdBasisError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DerivationError {
    #[error("derivation and polynomial live in different rings")]
    AmbientMismatch,
    #[error("expected {expected} coefficients, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("the zero polynomial generates no hypersurface")]
    ZeroPolynomial,
    #[error("`{0}` does not stabilize (P)")]
    NotStabilized(&'static str),
    #[error("syntax error in derivation: {0}")]
    Syntax(String),
    #[error("{0} is outside the supported range")]
    OutOfRange(RdpSpec),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Rdp(#[from] RdpError),
    #[error(transparent)]
    StdBasis(#[from] StdBasisError),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Derivation {
    ring: Ring,
    coeffs: Vec<Polynomial>,
}

impl Derivation {
    pub fn new(ring: &Ring, coeffs: Vec<Polynomial>) -> Result<Self, DerivationError> {
        if coeffs.len() != ring.nvars() {
            return Err(DerivationError::Arity {
                expected: ring.nvars(),
                got: coeffs.len(),
            });
        }
        if coeffs.iter().any(|c| c.ring() != ring) {
            return Err(DerivationError::AmbientMismatch);
        }
        Ok(Derivation {
            ring: ring.clone(),
            coeffs,
        })
    }

    pub fn zero(ring: &Ring) -> Self {
        Derivation {
            ring: ring.clone(),
            coeffs: vec![ring.zero(); ring.nvars()],
        }
    }

    /// `∂/∂v` for the variable at `index`.
    pub fn partial(ring: &Ring, index: usize) -> Self {
        let mut d = Self::zero(ring);
        d.coeffs[index] = ring.one();
        d
    }

    /// `c · ∂/∂v`.
    pub fn along(ring: &Ring, var: &str, c: Polynomial) -> Result<Self, DerivationError> {
        let i = ring.var_index(var)?;
        let mut d = Self::zero(ring);
        if c.ring() != ring {
            return Err(DerivationError::AmbientMismatch);
        }
        d.coeffs[i] = c;
        Ok(d)
    }

    /// Parses `"x=-2*x; y=2*y"`; unnamed variables get coefficient 0.
    pub fn parse(ring: &Ring, text: &str) -> Result<Self, DerivationError> {
        let mut d = Self::zero(ring);
        let mut seen = vec![false; ring.nvars()];
        for part in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (var, expr) = part.split_once('=').ok_or_else(|| {
                DerivationError::Syntax(format!("expected `var=expr`, got `{part}`"))
            })?;
            let i = ring.var_index(var.trim())?;
            if seen[i] {
                return Err(DerivationError::Syntax(format!(
                    "`{}` assigned twice",
                    var.trim()
                )));
            }
            seen[i] = true;
            d.coeffs[i] = ring.parse(expr)?;
        }
        Ok(d)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn coefficient(&self, index: usize) -> &Polynomial {
        &self.coeffs[index]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    fn zip(
        &self,
        other: &Self,
        f: impl Fn(&Polynomial, &Polynomial) -> Polynomial,
    ) -> Result<Self, DerivationError> {
        if self.ring != other.ring {
            return Err(DerivationError::AmbientMismatch);
        }
        Ok(Derivation {
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self, DerivationError> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, DerivationError> {
        self.zip(other, |a, b| a - b)
    }

    /// `g · δ` for a polynomial `g`.
    pub fn mul_poly(&self, g: &Polynomial) -> Result<Self, DerivationError> {
        if g.ring() != &self.ring {
            return Err(DerivationError::AmbientMismatch);
        }
        Ok(Derivation {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| c * g).collect(),
        })
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = self.ring.element(c);
        Derivation {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// `δ(f) = Σ c_v ∂f/∂v`.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial, DerivationError> {
        if f.ring() != &self.ring {
            return Err(DerivationError::AmbientMismatch);
        }
        Ok(self.apply_unchecked(f))
    }

    fn apply_unchecked(&self, f: &Polynomial) -> Polynomial {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(self.ring.zero(), |acc, (i, c)| {
                let df = f.derivative(i);
                if df.is_zero() {
                    acc
                } else {
                    &acc + &(c * &df)
                }
            })
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .ring
            .vars()
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(v, c)| format!("{v}={c}"))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("; "))
        }
    }
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Derivation({self})")
    }
}

/// `a∘b − b∘a`, evaluated on the coordinate functions.
pub fn der_bracket(a: &Derivation, b: &Derivation) -> Result<Derivation, DerivationError> {
    if a.ring != b.ring {
        return Err(DerivationError::AmbientMismatch);
    }
    let coeffs = a
        .coeffs
        .iter()
        .zip(&b.coeffs)
        .map(|(ac, bc)| &a.apply_unchecked(bc) - &b.apply_unchecked(ac))
        .collect();
    Ok(Derivation {
        ring: a.ring.clone(),
        coeffs,
    })
}

/// `δ^[p]`: δ applied p times to each coordinate function.
pub fn der_p_power(d: &Derivation) -> Derivation {
    let p = d.ring.characteristic();
    let coeffs = d
        .coeffs
        .iter()
        .map(|c| (1..p).fold(c.clone(), |acc, _| d.apply_unchecked(&acc)))
        .collect();
    Derivation {
        ring: d.ring.clone(),
        coeffs,
    }
}

/// δ applied `times` times to `f`.
pub fn iterate_apply(
    d: &Derivation,
    f: &Polynomial,
    times: u32,
) -> Result<Polynomial, DerivationError> {
    let mut acc = f.clone();
    for _ in 0..times {
        acc = d.apply(&acc)?;
    }
    Ok(acc)
}

fn principal_member(f: &Polynomial, p: &Polynomial) -> Result<bool, DerivationError> {
    if p.is_zero() {
        return Err(DerivationError::ZeroPolynomial);
    }
    if f.ring() != p.ring() {
        return Err(DerivationError::AmbientMismatch);
    }
    let basis = standard_basis(
        std::slice::from_ref(p),
        &MonomialOrder::degrevlex(p.ring().nvars()),
    )?;
    Ok(basis.is_member(f)?)
}

/// Whether `δ(P) ∈ (P)`.
pub fn stabilizes_ideal(d: &Derivation, p: &Polynomial) -> Result<bool, DerivationError> {
    let image = d.apply(p)?;
    principal_member(&image, p)
}

/// Whether every coefficient of `d` lies in `(P)`.
pub fn vanishes_mod(d: &Derivation, p: &Polynomial) -> Result<bool, DerivationError> {
    for c in &d.coeffs {
        if !principal_member(c, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The five defining relations of an sl₂-triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    /// `[h,e] = 2e`
    HE,
    /// `[h,f] = −2f`
    HF,
    /// `[e,f] = −h`
    EF,
    /// `e^[p] = 0`
    EPower,
    /// `f^[p] = 0`
    FPower,
    /// `h^[p] = h`
    HPower,
}

impl Relation {
    pub const ALL: [Relation; 6] = [
        Relation::HE,
        Relation::HF,
        Relation::EF,
        Relation::EPower,
        Relation::FPower,
        Relation::HPower,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Relation::HE => "[h,e]=2e",
            Relation::HF => "[h,f]=-2f",
            Relation::EF => "[e,f]=-h",
            Relation::EPower => "e^[p]=0",
            Relation::FPower => "f^[p]=0",
            Relation::HPower => "h^[p]=h",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleReport {
    pub relations: Vec<(Relation, bool)>,
}

impl TripleReport {
    pub fn holds(&self) -> bool {
        self.relations.iter().all(|(_, ok)| *ok)
    }

    pub fn failed(&self) -> Vec<Relation> {
        self.relations
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(r, _)| *r)
            .collect()
    }
}

/// Checks the sl₂ relations for `(h, e, f)` on `A/(P)`.
///
/// Fails with [`DerivationError::NotStabilized`] when one of the three does
/// not descend to the quotient.
pub fn check_sl2_triple_mod(
    p: &Polynomial,
    h: &Derivation,
    e: &Derivation,
    f: &Derivation,
) -> Result<TripleReport, DerivationError> {
    for (name, d) in [("h", h), ("e", e), ("f", f)] {
        if !stabilizes_ideal(d, p)? {
            return Err(DerivationError::NotStabilized(name));
        }
    }
    let defect = |rel: Relation| -> Result<Derivation, DerivationError> {
        match rel {
            Relation::HE => der_bracket(h, e)?.sub(&e.scale(2)),
            Relation::HF => der_bracket(h, f)?.add(&f.scale(2)),
            Relation::EF => der_bracket(e, f)?.add(h),
            Relation::EPower => Ok(der_p_power(e)),
            Relation::FPower => Ok(der_p_power(f)),
            Relation::HPower => der_p_power(h).sub(h),
        }
    };
    let relations = Relation::ALL
        .into_iter()
        .map(|rel| Ok((rel, vanishes_mod(&defect(rel)?, p)?)))
        .collect::<Result<_, DerivationError>>()?;
    Ok(TripleReport { relations })
}

/// `(2u∂u, u²∂u, ∂u)` for the variable at `index`.
pub fn obvious_triple(ring: &Ring, index: usize) -> [Derivation; 3] {
    let u = ring.gen(index);
    let f = Derivation::partial(ring, index);
    let h = f.mul_poly(&u.scale(ring.element(2))).expect("same ring");
    let e = f.mul_poly(&(&u * &u)).expect("same ring");
    [h, e, f]
}

/// The variable `u` with `∂P/∂u = 0` used for the obvious triple of a
/// catalog entry, when the entry carries one.
pub fn obvious_triple_variable(spec: &RdpSpec) -> Option<&'static str> {
    match (spec.family, spec.index, spec.coindex, spec.p) {
        (Family::A, l, _, p) if (l + 1) % p == 0 => Some("z"),
        (Family::E, 8, 0, 5) => Some("y"),
        (Family::E, 6, 0, 3) | (Family::E, 8, 0, 3) => Some("x"),
        (Family::E, 7, 0, 3) => Some("y"),
        _ => None,
    }
}

/// Catalog equation and obvious triple of `spec`.
pub fn catalog_triple(spec: &RdpSpec) -> Result<(Polynomial, [Derivation; 3]), DerivationError> {
    let var = obvious_triple_variable(spec).ok_or(DerivationError::OutOfRange(*spec))?;
    let equation = catalog_equation(spec)?;
    let ring = equation.ring().clone();
    let i = ring.var_index(var)?;
    Ok((equation, obvious_triple(&ring, i)))
}

/// The explicit triple printed for `z² − xy`.
pub fn a1_printed_triple(p: u32) -> Result<(Polynomial, [Derivation; 3]), DerivationError> {
    let ring = Ring::xyz(p)?;
    let equation = ring.parse("z^2 - x*y")?;
    let h = Derivation::parse(&ring, "x=-2*x; y=2*y")?;
    let e = Derivation::parse(&ring, "x=2*z; z=y")?;
    let f = Derivation::parse(&ring, "y=2*z; z=x")?;
    Ok((equation, [h, e, f]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBurchReport {
    /// Rows of the 3×2 matrix φ₁.
    pub phi1: [[Polynomial; 2]; 3],
    /// Minor deleting row i, against `(P_z, P_x, P_y)[i]`.
    pub minors_match: [bool; 3],
    pub entries_in_maximal_ideal: bool,
}

impl HilbertBurchReport {
    pub fn holds(&self) -> bool {
        self.minors_match.iter().all(|&b| b) && self.entries_in_maximal_ideal
    }
}

fn d_char2_params(spec: &RdpSpec, even: bool) -> Result<(u32, u32), DerivationError> {
    let ok = spec.family == Family::D
        && spec.p == 2
        && spec.coindex >= 1
        && spec.index.is_multiple_of(2) == even;
    if !ok {
        return Err(DerivationError::OutOfRange(*spec));
    }
    let n = spec.index / 2;
    if spec.coindex >= n {
        return Err(DerivationError::OutOfRange(*spec));
    }
    Ok((n, spec.coindex))
}

fn partials_zxy(equation: &Polynomial) -> Result<[Polynomial; 3], DerivationError> {
    let ring = equation.ring();
    let (x, y, z) = (
        ring.var_index("x")?,
        ring.var_index("y")?,
        ring.var_index("z")?,
    );
    Ok([
        equation.derivative(z),
        equation.derivative(x),
        equation.derivative(y),
    ])
}

fn in_maximal_ideal(f: &Polynomial) -> bool {
    f.constant_term().is_zero()
}

/// The factorization of the partials of `D_{2n}^r` (p = 2, r ≥ 1) as maximal
/// minors of a 3×2 matrix with entries in 𝔪.
pub fn verify_hilbert_burch(spec: &RdpSpec) -> Result<HilbertBurchReport, DerivationError> {
    let (n, r) = d_char2_params(spec, true)?;
    let equation = catalog_equation(spec)?;
    let ring = equation.ring().clone();
    let q = ring.parse(&format!(
        "x + {n}*y^{} + {}*y^{}*z",
        n - 1,
        n - r,
        n - r - 1
    ))?;
    let phi1 = [
        [ring.parse(&format!("y^{r} + z"))?, q],
        [ring.parse("x")?, ring.zero()],
        [ring.zero(), ring.parse(&format!("y^{}", n - r))?],
    ];
    let partials = partials_zxy(&equation)?;
    let minor = |skip: usize| {
        let rows: Vec<&[Polynomial; 2]> = (0..3).filter(|&i| i != skip).map(|i| &phi1[i]).collect();
        &(&rows[0][0] * &rows[1][1]) - &(&rows[0][1] * &rows[1][0])
    };
    let minors_match = [0, 1, 2].map(|i| {
        let m = minor(i);
        m == partials[i] || m == -partials[i].clone()
    });
    let entries_in_maximal_ideal = phi1.iter().flatten().all(in_maximal_ideal);
    Ok(HilbertBurchReport {
        phi1,
        minors_match,
        entries_in_maximal_ideal,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiMatrixReport {
    /// `J₂[row][col]`: coefficient of `∂/∂(z, x, y)[row]` in `δ_{col+1}`.
    pub j2: [[Polynomial; 3]; 3],
    /// Whether each entry of `J₁·J₂` lies in `(P)`.
    pub product_in_ideal: [bool; 3],
    /// `J₂ mod 𝔪²`.
    pub linear_part: [[Polynomial; 3]; 3],
    /// The stated reduction `(z 0 0 / x z 0 / 0 0 0)`.
    pub stated: [[Polynomial; 3]; 3],
}

impl JacobiMatrixReport {
    pub fn product_vanishes(&self) -> bool {
        self.product_in_ideal.iter().all(|&b| b)
    }

    pub fn matches_stated(&self) -> bool {
        self.linear_part == self.stated
    }

    pub fn holds(&self) -> bool {
        self.product_vanishes() && self.matches_stated()
    }
}

/// The three derivations δ₁, δ₂, δ₃ of `D_{2n+1}^r` with `ν = n − r`.
pub fn d_odd_derivations(spec: &RdpSpec) -> Result<(Polynomial, [Derivation; 3]), DerivationError> {
    let (n, r) = d_char2_params(spec, false)?;
    let nu = n - r;
    let equation = catalog_equation(spec)?;
    let ring = equation.ring().clone();
    let d = |text: String| Derivation::parse(&ring, &text);
    let d1 = d(format!("z=z; x=x + y^{r}"))?;
    let d2 = d(format!(
        "z={}*y^{nu}*z; x={nu}*y^{n} + z; y=y^{}",
        nu + 1,
        nu + 1
    ))?;
    let d3 = d(format!(
        "z=x*z + y^{r}*z + {nu}*y^{}*z; x=y^{} + {}*y^{}*z; y=y^{nu}*z",
        nu - 1,
        2 * r,
        nu + 1,
        n - 1
    ))?;
    Ok((equation, [d1, d2, d3]))
}

/// `J₁·J₂ ≡ 0 mod P` and the linear part of `J₂` for `D_{2n+1}^r`
/// (p = 2, r ≥ 1).
pub fn verify_jacobi_matrix_identity(
    spec: &RdpSpec,
) -> Result<JacobiMatrixReport, DerivationError> {
    let (equation, deltas) = d_odd_derivations(spec)?;
    let ring = equation.ring().clone();
    let order = [
        ring.var_index("z")?,
        ring.var_index("x")?,
        ring.var_index("y")?,
    ];
    let j2: [[Polynomial; 3]; 3] =
        order.map(|v| [0, 1, 2].map(|c| deltas[c].coefficient(v).clone()));
    let j1 = partials_zxy(&equation)?;
    let mut product_in_ideal = [false; 3];
    for (c, slot) in product_in_ideal.iter_mut().enumerate() {
        let entry = (0..3).fold(ring.zero(), |acc, k| &acc + &(&j1[k] * &j2[k][c]));
        *slot = principal_member(&entry, &equation)?;
    }
    let linear_part = j2.clone().map(|row| row.map(|e| e.truncate_below(2)));
    let z = ring.parse("z")?;
    let x = ring.parse("x")?;
    let o = ring.zero();
    let stated = [
        [z.clone(), o.clone(), o.clone()],
        [x, z, o.clone()],
        [o.clone(), o.clone(), o],
    ];
    Ok(JacobiMatrixReport {
        j2,
        product_in_ideal,
        linear_part,
        stated,
    })
}
