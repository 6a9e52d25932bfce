//! The repetition quiver `ZΔ`, its labelling by roots and shifts, and
//! brute-force classification of invariant thick subcategories.

mod labels;
mod model;
mod quiver;
mod thick;

pub use labels::{LabelWalk, VertexLabel};
pub use model::{brute_force_classify, DerivedModel};
pub use quiver::{lift_graph_automorphism, phi, phi_triality, suspension_composite, MapKind, Vertex, VertexMap};
pub use thick::{image_roots, is_invariant_vertex_set, thick_from_nc, ThickDescriptor, ThickDescriptorJson};
