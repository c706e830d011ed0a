//! The restricted Lie algebra sl₂ over F_p.
//!
//! Basis `h, e, f` with `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = −h`. The vector
//! `αh + βe + γf` is the traceless matrix `[[α, β], [−γ, −α]]`.
//!
//! # Plücker convention
//!
//! For `v = (α,β,γ)` and `v' = (α',β',γ')` this module uses
//!
//! ```text
//! T0 = βγ' − γβ'     (coefficient of e∧f)
//! T1 = αβ' − βα'     (coefficient of h∧e)
//! T2 = γα' − αγ'     (coefficient of f∧h)
//! ```
//!
//! so that `v ∧ v' ∧ [v,v'] = −(T0² − 4·T1·T2)·(h∧e∧f)`. The sign cannot be
//! made `+1` by relabelling or rescaling coordinates over F_p, and it does
//! not affect the zero locus, so the discriminant is `T0² − 4·T1·T2`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ring::FpElement;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Sl2Error {
    #[error("operands have different characteristics")]
    CharacteristicMismatch,
    #[error("the zero vector spans no line")]
    ZeroVector,
    #[error("the vectors are linearly dependent")]
    DependentVectors,
}

type Mat2 = [[u32; 2]; 2];
type Mat3 = [[u32; 3]; 3];

fn fp(v: u32, p: u32) -> FpElement {
    FpElement::new(i64::from(v), p)
}

/// `αh + βe + γf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sl2Vector {
    pub alpha: FpElement,
    pub beta: FpElement,
    pub gamma: FpElement,
}

impl Sl2Vector {
    pub fn new(alpha: i64, beta: i64, gamma: i64, p: u32) -> Self {
        Sl2Vector {
            alpha: FpElement::new(alpha, p),
            beta: FpElement::new(beta, p),
            gamma: FpElement::new(gamma, p),
        }
    }

    pub fn from_elements(
        alpha: FpElement,
        beta: FpElement,
        gamma: FpElement,
    ) -> Result<Self, Sl2Error> {
        let p = alpha.characteristic();
        if beta.characteristic() != p || gamma.characteristic() != p {
            return Err(Sl2Error::CharacteristicMismatch);
        }
        Ok(Sl2Vector { alpha, beta, gamma })
    }

    pub fn zero(p: u32) -> Self {
        Self::new(0, 0, 0, p)
    }

    pub fn h(p: u32) -> Self {
        Self::new(1, 0, 0, p)
    }

    pub fn e(p: u32) -> Self {
        Self::new(0, 1, 0, p)
    }

    pub fn f(p: u32) -> Self {
        Self::new(0, 0, 1, p)
    }

    pub fn characteristic(&self) -> u32 {
        self.alpha.characteristic()
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.gamma.is_zero()
    }

    pub fn coords(&self) -> [u32; 3] {
        [self.alpha.value(), self.beta.value(), self.gamma.value()]
    }

    fn from_coords(c: [u32; 3], p: u32) -> Self {
        Sl2Vector {
            alpha: fp(c[0], p),
            beta: fp(c[1], p),
            gamma: fp(c[2], p),
        }
    }

    pub fn scale(&self, c: FpElement) -> Self {
        Sl2Vector {
            alpha: self.alpha * c,
            beta: self.beta * c,
            gamma: self.gamma * c,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Sl2Vector {
            alpha: self.alpha + other.alpha,
            beta: self.beta + other.beta,
            gamma: self.gamma + other.gamma,
        }
    }

    /// `α² − βγ`, the negated determinant of the matrix.
    pub fn norm(&self) -> FpElement {
        self.alpha * self.alpha - self.beta * self.gamma
    }

    /// The traceless matrix `[[α, β], [−γ, −α]]`.
    pub fn matrix(&self) -> [[FpElement; 2]; 2] {
        [[self.alpha, self.beta], [-self.gamma, -self.alpha]]
    }

    /// Every vector of sl₂(F_p), in lexicographic coordinate order.
    pub fn all(p: u32) -> impl Iterator<Item = Sl2Vector> {
        (0..p).flat_map(move |a| {
            (0..p).flat_map(move |b| (0..p).map(move |c| Sl2Vector::from_coords([a, b, c], p)))
        })
    }
}

impl fmt::Display for Sl2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}h + {}e + {}f", self.alpha, self.beta, self.gamma)
    }
}

fn check_same(a: &Sl2Vector, b: &Sl2Vector) -> Result<u32, Sl2Error> {
    let p = a.characteristic();
    if b.characteristic() != p {
        return Err(Sl2Error::CharacteristicMismatch);
    }
    Ok(p)
}

/// The Lie bracket.
pub fn bracket(x: &Sl2Vector, y: &Sl2Vector) -> Result<Sl2Vector, Sl2Error> {
    check_same(x, y)?;
    let w = wedge(x, y);
    let two = FpElement::new(2, x.characteristic());
    // [x,y] = −T0·h + 2·T1·e + 2·T2·f
    Ok(Sl2Vector {
        alpha: -w.t0,
        beta: two * w.t1,
        gamma: two * w.t2,
    })
}

/// The p-th power `x^{[p]}`: `(α²−βγ)^{(p−1)/2}·x` for odd p and `(α²−βγ)·h` for p = 2.
pub fn p_map(x: &Sl2Vector) -> Sl2Vector {
    let p = x.characteristic();
    if p == 2 {
        Sl2Vector::h(2).scale(x.norm())
    } else {
        x.scale(x.norm().pow(u64::from((p - 1) / 2)))
    }
}

/// Behaviour of the line `k·x` under the p-map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PClosedness {
    /// `x^{[p]} = λx` with `λ ≠ 0`.
    Multiplicative,
    /// `x^{[p]} = 0`.
    Additive,
    /// `x^{[p]} ∉ k·x`.
    NotClosed,
}

pub fn is_p_closed(x: &Sl2Vector) -> Result<PClosedness, Sl2Error> {
    if x.is_zero() {
        return Err(Sl2Error::ZeroVector);
    }
    let xp = p_map(x);
    if xp.is_zero() {
        return Ok(PClosedness::Additive);
    }
    if wedge(x, &xp).is_zero() {
        Ok(PClosedness::Multiplicative)
    } else {
        Ok(PClosedness::NotClosed)
    }
}

/// Coordinates `(T0 : T1 : T2)` of a bivector in the module convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PluckerVector {
    pub t0: FpElement,
    pub t1: FpElement,
    pub t2: FpElement,
}

impl PluckerVector {
    pub fn new(t0: i64, t1: i64, t2: i64, p: u32) -> Self {
        PluckerVector {
            t0: FpElement::new(t0, p),
            t1: FpElement::new(t1, p),
            t2: FpElement::new(t2, p),
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.t0.characteristic()
    }

    pub fn coords(&self) -> [u32; 3] {
        [self.t0.value(), self.t1.value(), self.t2.value()]
    }

    fn from_coords(c: [u32; 3], p: u32) -> Self {
        PluckerVector {
            t0: fp(c[0], p),
            t1: fp(c[1], p),
            t2: fp(c[2], p),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.t0.is_zero() && self.t1.is_zero() && self.t2.is_zero()
    }

    pub fn neg(&self) -> Self {
        PluckerVector {
            t0: -self.t0,
            t1: -self.t1,
            t2: -self.t2,
        }
    }

    /// Projective representative with first non-zero coordinate 1.
    pub fn normalized(&self) -> Option<Self> {
        let lead = [self.t0, self.t1, self.t2]
            .into_iter()
            .find(|t| !t.is_zero())?;
        let inv = lead.inv()?;
        Some(PluckerVector {
            t0: self.t0 * inv,
            t1: self.t1 * inv,
            t2: self.t2 * inv,
        })
    }

    /// Equality as projective points; the zero vector equals only itself.
    pub fn projectively_eq(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// Coordinates permuted: `result[i] = self[perm[i]]`.
    pub fn permuted(&self, perm: [usize; 3]) -> Self {
        let c = self.coords();
        Self::from_coords([c[perm[0]], c[perm[1]], c[perm[2]]], self.characteristic())
    }
}

impl fmt::Display for PluckerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.t0, self.t1, self.t2)
    }
}

/// Plücker coordinates of `v ∧ w`, zero when dependent.
pub fn wedge(v: &Sl2Vector, w: &Sl2Vector) -> PluckerVector {
    PluckerVector {
        t0: v.beta * w.gamma - v.gamma * w.beta,
        t1: v.alpha * w.beta - v.beta * w.alpha,
        t2: v.gamma * w.alpha - v.alpha * w.gamma,
    }
}

/// Plücker coordinates of the plane `span(v, w)`.
pub fn plane_plucker(v: &Sl2Vector, w: &Sl2Vector) -> Result<PluckerVector, Sl2Error> {
    check_same(v, w)?;
    let t = wedge(v, w);
    if t.is_zero() {
        return Err(Sl2Error::DependentVectors);
    }
    Ok(t)
}

/// `T0² − 4·T1·T2`; zero exactly on subalgebras.
pub fn subalgebra_discriminant(t: &PluckerVector) -> FpElement {
    let four = FpElement::new(4, t.characteristic());
    t.t0 * t.t0 - four * t.t1 * t.t2
}

/// `det(v, w, [v,w])`, the coefficient of `h∧e∧f` in `v ∧ w ∧ [v,w]`.
pub fn triple_wedge(v: &Sl2Vector, w: &Sl2Vector) -> Result<FpElement, Sl2Error> {
    let b = bracket(v, w)?;
    let rows = [v.coords(), w.coords(), b.coords()];
    Ok(det3(&rows, v.characteristic()))
}

/// Whether `span(v, w)` is closed under the bracket, by the wedge criterion.
pub fn is_subalgebra(v: &Sl2Vector, w: &Sl2Vector) -> Result<bool, Sl2Error> {
    plane_plucker(v, w)?;
    Ok(triple_wedge(v, w)?.is_zero())
}

fn det3(m: &Mat3, p: u32) -> FpElement {
    let e = |r: usize, c: usize| fp(m[r][c], p);
    e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
        - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
}

/// A 3×3 matrix acting on Plücker columns `(T0, T1, T2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AdjointMatrix {
    pub entries: [[FpElement; 3]; 3],
}

impl AdjointMatrix {
    fn from_fn(p: u32, f: impl Fn(usize, usize) -> FpElement) -> Self {
        let mut entries = [[FpElement::zero(p); 3]; 3];
        for (r, row) in entries.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                *x = f(r, c);
            }
        }
        AdjointMatrix { entries }
    }

    pub fn apply(&self, t: &PluckerVector) -> PluckerVector {
        let p = t.characteristic();
        let v = [t.t0, t.t1, t.t2];
        let row =
            |r: usize| (0..3).fold(FpElement::zero(p), |acc, c| acc + self.entries[r][c] * v[c]);
        PluckerVector {
            t0: row(0),
            t1: row(1),
            t2: row(2),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.entries[0][0].characteristic(), |r, c| {
            self.entries[c][r]
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|x| x.is_zero())
    }
}

impl fmt::Display for AdjointMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{} {} {}", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

/// `Λ²(ad u)`: the matrix of `v∧v' ↦ [u,v]∧[u,v']` in the module convention.
///
/// With `u = πh + φe + ψf` the rows `(T0', T1', T2')` are
///
/// ```text
/// [ −4π²   −4πψ   −4πφ ]
/// [  2πφ    2φψ    2φ² ]
/// [  2πψ    2ψ²    2φψ ]
/// ```
pub fn lambda2_ad(u: &Sl2Vector) -> AdjointMatrix {
    let p = u.characteristic();
    let (pi, phi, psi) = (u.alpha, u.beta, u.gamma);
    let k = |c: i64| FpElement::new(c, p);
    let m = [
        [k(-4) * pi * pi, k(-4) * pi * psi, k(-4) * pi * phi],
        [k(2) * pi * phi, k(2) * phi * psi, k(2) * phi * phi],
        [k(2) * pi * psi, k(2) * psi * psi, k(2) * phi * psi],
    ];
    AdjointMatrix { entries: m }
}

/// The infinitesimal action `v∧v' ↦ [u,v]∧v' + v∧[u,v']`, linear in `u`.
///
/// ```text
/// [   0   −2ψ   2φ ]
/// [   φ    2π    0  ]
/// [  −ψ    0   −2π  ]
/// ```
pub fn adjoint_derivation(u: &Sl2Vector) -> AdjointMatrix {
    let p = u.characteristic();
    let (pi, phi, psi) = (u.alpha, u.beta, u.gamma);
    let k = |c: i64| FpElement::new(c, p);
    let z = FpElement::zero(p);
    AdjointMatrix {
        entries: [
            [z, k(-2) * psi, k(2) * phi],
            [phi, k(2) * pi, z],
            [-psi, z, k(-2) * pi],
        ],
    }
}

/// The 3×3 matrix printed alongside the relabelled coordinates
/// `T0 = βγ'−γβ'`, `T1 = αγ'−γα'`, `T2 = αβ'−βα'`, entry by entry.
pub fn printed_adjoint_matrix(u: &Sl2Vector) -> AdjointMatrix {
    let p = u.characteristic();
    let (pi, phi, psi) = (u.alpha, u.beta, u.gamma);
    let k = |c: i64| FpElement::new(c, p);
    AdjointMatrix {
        entries: [
            [k(-4) * pi * pi, k(-2) * pi * phi, k(2) * pi * phi],
            [k(4) * pi * phi, k(2) * phi * psi, k(-2) * phi * phi],
            [k(-4) * pi * psi, k(-2) * psi * psi, k(2) * phi * psi],
        ],
    }
}

/// Direct computation of `Λ²(ad u)` in the relabelled coordinates
/// `(βγ'−γβ', αγ'−γα', αβ'−βα')` used by [`printed_adjoint_matrix`].
pub fn lambda2_ad_relabelled(u: &Sl2Vector) -> AdjointMatrix {
    let p = u.characteristic();
    // Basis bivectors with relabelled coordinates e_j: e∧f, h∧f, h∧e.
    let basis = [
        (Sl2Vector::e(p), Sl2Vector::f(p)),
        (Sl2Vector::h(p), Sl2Vector::f(p)),
        (Sl2Vector::h(p), Sl2Vector::e(p)),
    ];
    let coords = |t: PluckerVector| [t.t0, -t.t2, t.t1];
    let images: Vec<[FpElement; 3]> = basis
        .iter()
        .map(|(a, b)| {
            let ua = bracket(u, a).expect("same p");
            let ub = bracket(u, b).expect("same p");
            coords(wedge(&ua, &ub))
        })
        .collect();
    AdjointMatrix::from_fn(p, |r, c| images[c][r])
}

/// Permutations `σ` such that reading `source` and `target` as displayed
/// tuples `(T_{σ0} : T_{σ1} : T_{σ2})` makes `m` send one to the other
/// projectively.
pub fn display_permutations(
    m: &AdjointMatrix,
    source: &PluckerVector,
    target: &PluckerVector,
) -> Vec<[usize; 3]> {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    PERMS
        .into_iter()
        .filter(|&perm| {
            let inv = invert(perm);
            let src = source.permuted(inv);
            let dst = target.permuted(inv);
            let img = m.apply(&src);
            !img.is_zero() && img.projectively_eq(&dst)
        })
        .collect()
}

fn invert(perm: [usize; 3]) -> [usize; 3] {
    let mut out = [0; 3];
    for (i, &j) in perm.iter().enumerate() {
        out[j] = i;
    }
    out
}

/// Checks against matrix-algebra oracles, shared by tests and the CLI.
pub mod checks {
    use super::*;

    fn mul2(a: &Mat2, b: &Mat2, p: u32) -> Mat2 {
        let mut out = [[0u32; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                let s: u64 = (0..2)
                    .map(|k| u64::from(a[i][k]) * u64::from(b[k][j]))
                    .sum();
                out[i][j] = (s % u64::from(p)) as u32;
            }
        }
        out
    }

    fn mul3(a: &Mat3, b: &Mat3, p: u32) -> Mat3 {
        let mut out = [[0u32; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let s: u64 = (0..3)
                    .map(|k| u64::from(a[i][k]) * u64::from(b[k][j]))
                    .sum();
                out[i][j] = (s % u64::from(p)) as u32;
            }
        }
        out
    }

    fn mat2(x: &Sl2Vector) -> Mat2 {
        let m = x.matrix();
        [
            [m[0][0].value(), m[0][1].value()],
            [m[1][0].value(), m[1][1].value()],
        ]
    }

    /// `x` read back from a traceless matrix `[[α, β], [−γ, −α]]`.
    fn from_mat2(m: &Mat2, p: u32) -> Option<Sl2Vector> {
        if !(m[0][0] + m[1][1]).is_multiple_of(p) {
            return None;
        }
        Some(Sl2Vector::from_coords(
            [m[0][0], m[0][1], (p - m[1][0]) % p],
            p,
        ))
    }

    /// Matrix commutator `XY − YX`, read back as a vector.
    pub fn matrix_bracket(x: &Sl2Vector, y: &Sl2Vector) -> Sl2Vector {
        let p = x.characteristic();
        let (a, b) = (mat2(x), mat2(y));
        let (ab, ba) = (mul2(&a, &b, p), mul2(&b, &a, p));
        let mut d = [[0u32; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                d[i][j] = (ab[i][j] + p - ba[i][j]) % p;
            }
        }
        from_mat2(&d, p).expect("commutators are traceless")
    }

    /// `X^p` in the matrix algebra, read back as a vector.
    pub fn matrix_p_power(x: &Sl2Vector) -> Sl2Vector {
        let p = x.characteristic();
        let a = mat2(x);
        let mut acc = a;
        for _ in 1..p {
            acc = mul2(&acc, &a, p);
        }
        from_mat2(&acc, p).expect("p-th powers of traceless 2x2 matrices are traceless")
    }

    /// `ad x` as a 3×3 matrix on coordinates (α, β, γ), built from the bracket.
    pub fn ad_matrix(x: &Sl2Vector) -> Mat3 {
        let p = x.characteristic();
        let cols = [Sl2Vector::h(p), Sl2Vector::e(p), Sl2Vector::f(p)]
            .map(|b| matrix_bracket(x, &b).coords());
        let mut m = [[0u32; 3]; 3];
        for (c, col) in cols.iter().enumerate() {
            for r in 0..3 {
                m[r][c] = col[r];
            }
        }
        m
    }

    pub fn jacobi_holds(x: &Sl2Vector, y: &Sl2Vector, z: &Sl2Vector) -> bool {
        let b = |a: &Sl2Vector, c: &Sl2Vector| bracket(a, c).expect("same p");
        let t1 = b(&b(x, y), z);
        let t2 = b(&b(y, z), x);
        let t3 = b(&b(z, x), y);
        t1.add(&t2).add(&t3).is_zero()
    }

    pub fn bracket_matches_matrices(x: &Sl2Vector, y: &Sl2Vector) -> bool {
        bracket(x, y).expect("same p") == matrix_bracket(x, y)
    }

    pub fn p_map_matches_matrix_power(x: &Sl2Vector) -> bool {
        p_map(x) == matrix_p_power(x)
    }

    /// `p_map(λx) = λ^p · p_map(x)`.
    pub fn semilinear(x: &Sl2Vector, lambda: FpElement) -> bool {
        let p = u64::from(x.characteristic());
        p_map(&x.scale(lambda)) == p_map(x).scale(lambda.pow(p))
    }

    /// `ad(x^{[p]}) = (ad x)^p`.
    pub fn restricted(x: &Sl2Vector) -> bool {
        let p = x.characteristic();
        let a = ad_matrix(x);
        let mut acc = a;
        for _ in 1..p {
            acc = mul3(&acc, &a, p);
        }
        ad_matrix(&p_map(x)) == acc
    }

    /// The closed-form `Λ²(ad u)` against `[u,v]∧[u,v']` on every basis plane.
    pub fn lambda2_matches_direct(u: &Sl2Vector) -> bool {
        let p = u.characteristic();
        let m = lambda2_ad(u);
        let basis = [Sl2Vector::h(p), Sl2Vector::e(p), Sl2Vector::f(p)];
        basis.iter().all(|a| {
            basis.iter().all(|b| {
                let direct = wedge(&matrix_bracket(u, a), &matrix_bracket(u, b));
                m.apply(&wedge(a, b)) == direct
            })
        })
    }

    /// The linear action against `[u,v]∧v' + v∧[u,v']` on every basis plane.
    pub fn derivation_matches_direct(u: &Sl2Vector) -> bool {
        let p = u.characteristic();
        let m = adjoint_derivation(u);
        let basis = [Sl2Vector::h(p), Sl2Vector::e(p), Sl2Vector::f(p)];
        basis.iter().all(|a| {
            basis.iter().all(|b| {
                let l = wedge(&matrix_bracket(u, a), b);
                let r = wedge(a, &matrix_bracket(u, b));
                let direct = PluckerVector {
                    t0: l.t0 + r.t0,
                    t1: l.t1 + r.t1,
                    t2: l.t2 + r.t2,
                };
                m.apply(&wedge(a, b)) == direct
            })
        })
    }

    /// `is_subalgebra ⟺ discriminant = 0` for one independent pair.
    pub fn discriminant_matches_wedge(v: &Sl2Vector, w: &Sl2Vector) -> Option<bool> {
        let t = plane_plucker(v, w).ok()?;
        let by_wedge = is_subalgebra(v, w).ok()?;
        Some(by_wedge == subalgebra_discriminant(&t).is_zero())
    }

    /// A point of the curve whose image under `Λ²(ad u)` is a non-zero
    /// point off the curve, if any.
    pub fn curve_escape(u: &Sl2Vector) -> Option<(PluckerVector, PluckerVector)> {
        let p = u.characteristic();
        let m = lambda2_ad(u);
        all_points(p).find_map(|t| {
            if !subalgebra_discriminant(&t).is_zero() {
                return None;
            }
            let img = m.apply(&t);
            (!img.is_zero() && !subalgebra_discriminant(&img).is_zero()).then_some((t, img))
        })
    }

    /// Tangency of the linear action: `Q(T + εD T) = 0 mod ε²` on the curve,
    /// where `Q` is the discriminant.
    pub fn derivation_tangent_to_curve(u: &Sl2Vector) -> bool {
        let p = u.characteristic();
        let d = adjoint_derivation(u);
        let k = |c: i64| FpElement::new(c, p);
        all_points(p).all(|t| {
            if !subalgebra_discriminant(&t).is_zero() {
                return true;
            }
            let dt = d.apply(&t);
            // dQ = 2·T0·dT0 − 4·(dT1·T2 + T1·dT2)
            let dq = k(2) * t.t0 * dt.t0 - k(4) * (dt.t1 * t.t2 + t.t1 * dt.t2);
            dq.is_zero()
        })
    }

    /// Non-zero Plücker vectors with first non-zero coordinate 1.
    pub fn all_points(p: u32) -> impl Iterator<Item = PluckerVector> {
        Sl2Vector::all(p)
            .map(move |v| PluckerVector::from_coords(v.coords(), p))
            .filter(|t| t.normalized().as_ref() == Some(t))
    }

    /// Whether `ad u` is nilpotent, i.e. `u` is a nilpotent matrix.
    pub fn is_nilpotent(u: &Sl2Vector) -> bool {
        u.norm().is_zero()
    }
}
