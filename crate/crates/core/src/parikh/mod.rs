//! Commutative images of words: Parikh vectors, linear and semilinear sets,
//! canonical word encodings, exact independence utilities, and the bounded
//! Parikh-image oracle every conversion is checked against.

mod intlin;
mod linear;
mod oracle;
mod semilinear;
mod vector;
mod words;

pub use intlin::{determinant, independent_indices, is_independent, primitive_dependency, rank};
pub use linear::{independence_reduce, LinearSet};
pub use oracle::{parikh_image_bounded, parikh_image_by_enumeration, ParikhSource};
pub use semilinear::{LinearSetJson, SemilinearJson, SemilinearRep};
pub use vector::{parikh_vector, ParikhVector};
pub use words::{canonical_word, rotate_to_letter, shifted_word};
