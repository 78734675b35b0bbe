//! Error type shared by every module of the library.
//!
//! Programmer errors (mixing elements from different contexts, handing a
//! vector of the wrong length to an arithmetic routine) panic with a message;
//! everything a caller can legitimately trigger with bad input or oversized
//! work is reported through [`Error`].

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All recoverable failure modes of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The requested modulus is not a prime number.
    #[error("p = {0} is not prime")]
    NotPrime(u64),

    /// The modulus is 2 in a context that needs 2 to be invertible
    /// (the unit 1 - 2u^k and the idempotents all divide by 2).
    #[error("p = {0} is even: 2 is not invertible modulo {0}, so the coefficient ring is undefined")]
    EvenModulus(u64),

    /// The modulus does not fit the word-sized arithmetic this crate uses.
    #[error("p = {0} exceeds the supported bound 2^16")]
    ModulusTooLarge(u64),

    /// The nilpotency degree k of the coefficient ring must be at least 1.
    #[error("k must be at least 1 (got {0})")]
    InvalidK(u64),

    /// Code length m must be at least 1.
    #[error("code length m must be at least 1 (got {0})")]
    InvalidLength(u64),

    /// Division by a non-invertible element (only 0 in a prime field).
    #[error("{value} has no inverse modulo {modulus}")]
    NoInverse { value: u32, modulus: u32 },

    /// Polynomial division by the zero polynomial.
    #[error("polynomial division by zero")]
    DivisionByZero,

    /// Factorization or divisor enumeration of the zero polynomial.
    #[error("the zero polynomial cannot be factored")]
    ZeroPolynomial,

    /// Reciprocal of a polynomial with zero constant term is not defined
    /// (the reversal would silently drop a root at zero).
    #[error("reciprocal undefined: the constant term is zero")]
    ConstantTermZero,

    /// sigma_2 and sigma_3 need u^{k-1} distinct from 1, which fails at k = 1.
    #[error("sigma_{i} is undefined for k = {k}: u^{{k-1}} collides with 1")]
    SigmaUndefined { i: u8, k: u32 },

    /// Substituting u -> c is only a ring homomorphism when c^{k+1} = c.
    #[error("evaluation at c = {c} is not a ring homomorphism: c^{{k+1}} != c for k = {k}")]
    EvalNotHomomorphism { c: u32, k: u32 },

    /// The sigma-decomposition needs the evaluation point -1, which requires even k.
    #[error("decomposition requires even k (got k = {0}): -1 is not an evaluation point")]
    OddK(u32),

    /// Constructions that rely on the sigma elements being orthogonal
    /// idempotents are only sound at k = 2.
    #[error("construction requires k = 2 (got k = {k}): the identity {identity} fails for this k")]
    SigmaGate { k: u32, identity: &'static str },

    /// A generator polynomial does not divide the required modulus.
    #[error("{poly} does not divide {modulus}")]
    NotADivisor { poly: String, modulus: String },

    /// An operation needed shift invariance that the code does not have.
    #[error("the code is not invariant under the {0} shift")]
    NotInvariant(&'static str),

    /// Minimum distance of the zero code is undefined.
    #[error("the zero code has no nonzero codeword")]
    ZeroCode,

    /// An enumeration would exceed the configured cap.
    #[error("enumeration of {needed} elements exceeds the cap of {cap}")]
    CapExceeded { needed: u128, cap: u64 },

    /// The Gray map is only invertible at k = 2.
    #[error("the Gray map is not invertible for k = {0} (components are dropped)")]
    GrayNotInvertible(u32),

    /// A vector had the wrong number of coordinates for the operation.
    #[error("expected a vector of length {expected}, got {got}")]
    BadVectorLength { expected: usize, got: usize },

    /// The Nechaev permutation is only defined for odd lengths.
    #[error("the coordinate permutation is only defined for odd m (got {0})")]
    EvenLength(u64),

    /// The lambda shift only acts on vectors over the coefficient ring.
    #[error("the lambda shift is not defined over the prime field; use cyclic or negacyclic")]
    LambdaOverFp,

    /// An unknown claim identifier was requested from the lab.
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),

    /// A counterexample payload did not match the claim it was attached to.
    #[error("counterexample payload rejected: {0}")]
    BadPayload(String),
}
