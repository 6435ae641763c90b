pub mod ci;
pub mod error;
pub mod laurent;
pub mod ledger;
pub mod pencil;
pub mod polytope;
pub mod report;
pub mod toric;

pub use ci::CiSpec;
pub use error::{Error, Result};
pub use laurent::{LaurentFraction, LaurentPolynomial, Substitution};
pub use polytope::{LatticePoint, LatticePolytope, RationalPoint};
pub use report::{Check, Status, VerificationReport};
