//! Linear and constacyclic codes over the chain-of-fields ring
//! R = F_p[u]/(u^{k+1} - u), together with the Gray map to F_p codes and a
//! claim-checking lab for the structural theory.

pub mod codes;
pub mod error;
pub mod field;
pub mod gray;
pub mod lab;
pub mod linalg;
pub mod poly;
pub mod ring;

pub use codes::{
    mu_bar, shift_fp, shift_r, CodeFile, ConstaCodeR, Decomposition, HkReport, LinearCodeFp,
    ReciprocalDual, ShiftKind, SigmaTriple, UnitKind,
};
pub use error::{Error, Result};
pub use field::{validate_params, Fp, Params};
pub use gray::{
    gray_image, nechaev_psi, nechaev_rho, nechaev_rho_perm, permute_code, GrayLayout, Permutation,
};
pub use lab::{
    check, recheck_counterexample, run_claims, run_suite, Caps, ClaimId, Counterexample,
    DirectionReport, Grid, Status, Strategy, SuiteReport, Summary, TheoremCheck, ALL_CLAIMS,
};
pub use linalg::RowBasis;
pub use poly::{sigma_combine, Factorization, PolyFp, PolyR};
pub use ring::{IdempotentReport, RingCtx, RingElem};
