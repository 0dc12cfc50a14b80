//! Exact rational arithmetic: Bernoulli numbers, real Dirichlet characters
//! and polynomials over `Q`.

pub mod bernoulli;
pub mod character;
pub mod poly;

pub use rug::{Integer, Rational};

pub use bernoulli::{
    bernoulli, bernoulli_poly, binomial, factorial, generalized_bernoulli, BernoulliTable, DEFAULT_BERNOULLI_CAP,
};
pub use character::{
    is_fundamental_discriminant, make_character, real_nonprincipal_characters, CharacterSource, CharacterViolation,
    DirichletCharacter,
};
pub use poly::{LaurentPoly, RationalPoly};
