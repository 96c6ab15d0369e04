//! Vertex model: parameters, s-stable subsets, gap words and rotation classes.

mod class;
mod gaps;
mod params;
mod vertex;

pub use class::{canonical_class, class_order, ClassInfo};
pub use gaps::{gap_sequence, least_rotation, primitive_period, GapSequence};
pub use params::Params;
pub use vertex::{is_stable, Vertex};
pub(crate) use vertex::parse_list as vertex_list;
