//! K-theoretic Schubert calculus: Grothendieck, Lascoux and key
//! polynomials, increasing tableaux, K-theoretic jeu de taquin and
//! left keys, with exact basis expansions used to check tableau rules.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod expand;
pub mod families;
pub mod kjdt;
pub mod symgroup;
pub mod tableaux;
pub mod verify;

pub use algebra::{BetaScalar, Exponent, MVPolynomial};
pub use error::{Error, Result};
pub use expand::{Basis, Expansion};
pub use families::FamilyCache;
pub use symgroup::{Permutation, Word};
pub use tableaux::{Composition, IncreasingTableau, Partition, Tableau};
