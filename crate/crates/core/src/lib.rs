//! Matroids, their quantum automorphism group ideals, and a noncommutative Gröbner
//! basis engine for deciding when those quantum groups are classical.

pub mod classical;
pub mod groebner;
pub mod matroid;
pub mod ncpoly;
pub mod quantum;
pub mod strong_maps;

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;
/// Polynomials over [`Rational`].
pub type Poly = ncpoly::NcPolynomial<Rational>;
/// A Gröbner basis over [`Rational`].
pub type Basis = groebner::GroebnerBasis<Rational>;
/// A quantum group presentation over [`Rational`].
pub type Spec = quantum::QuantumGroupSpec<Rational>;
