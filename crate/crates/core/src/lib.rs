//! Computer algebra for rational double points in positive characteristic.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`]: F_p arithmetic, polynomials, monomial orders and a parser.
//! * [`stdbasis`]: Mora/Buchberger completion, normal forms and colengths.
//! * [`ideals`]: Jacobian ideals, Frobenius powers, local lengths, μ.
//! * [`rdp`]: the ADE catalog and the freeness/surjectivity classification.
//! * [`sl2`]: the restricted Lie algebra sl₂ and its plane geometry.
//! * [`derivations`]: derivations of hypersurface rings and sl₂-triples.

pub mod derivations;
pub mod ideals;
pub mod rdp;
pub mod ring;
pub mod sl2;
pub mod stdbasis;
