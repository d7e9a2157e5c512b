mod dense;
pub mod characters;
pub mod checks;
pub mod error;
pub mod int;
pub mod laurent;
pub mod linalg;
pub mod modular;
pub mod oracle;
pub mod quiver;
pub mod reconstruct;
pub mod transjective;
pub mod tubes;

pub use characters::{CharacterReport, Engine, Evaluator, ObjectSpec};
pub use error::{Error, Result};
pub use int::Int;
pub use laurent::LaurentPoly;
pub use quiver::{CanonicalModel, DimVec, EuclideanType, Quiver};
pub use transjective::{Frieze, FriezeRing, TransjectiveLabel, ZQPoint};
pub use tubes::{Lambda, RegularIndex, TubeData};
