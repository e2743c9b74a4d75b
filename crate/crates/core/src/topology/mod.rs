//! Surfaces, polygon words and embedded graphs.

mod rotation;
mod surface;
mod word;

pub use rotation::{Dart, Face, RotationSystem};
pub use surface::{euler_characteristic_from_counts, min_genus_lower_bound, Surface};
pub use word::{SurfaceWord, Symbol};
