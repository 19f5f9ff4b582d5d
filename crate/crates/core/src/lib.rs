//! Exact arithmetic for congruent numbers: rational right triangles,
//! the curves y^2 = x^3 - N^2 x, and the families of triangles and points
//! built from Pythagorean triples.

pub mod cassini;
pub mod conics;
pub mod elliptic;
pub mod error;
pub mod exact;
pub mod fermat;
pub mod footprints;
pub mod par;
pub mod polyrat;
pub mod recurrence;
pub mod report;
pub mod sequences;
pub mod suite;
pub mod tangent;
pub mod trinity;
pub mod triples;

pub use elliptic::{Curve, Point};
pub use error::{Error, Result};
pub use exact::{Int, Rat};
pub use par::Exec;
pub use report::Check;
pub use triples::RatTriangle;
