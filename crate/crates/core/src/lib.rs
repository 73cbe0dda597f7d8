//! Lie-algebraic construction of spacetime symmetries from SU(2): Pauli and
//! (2⊕2) representations, Lorentz and Poincaré checks, transfer of
//! commutators to the 4-vector representation, finite transforms of
//! coordinates, and the SU(N) anticommutator obstruction.

pub mod check;
pub mod error;
pub mod linalg;
pub mod reps;
pub mod spacetime;
pub mod suite;
pub mod sun;
pub mod transfer;

pub use check::{CheckReport, IdentityId, Witness};
pub use error::{Error, Result};
pub use linalg::{CMatrix, CScalar, Tolerance};
pub use reps::{Branch, GeneratorKind, GeneratorSet, RepLabel, RepTag, VectorParams};
pub use spacetime::{AffineTransform, FourVector, RotBoostParams};
pub use suite::{Suite, SuiteConfig, SuiteOutput};
pub use sun::{ObstructionReport, StructureTensors};
pub use transfer::CoeffTensor;
