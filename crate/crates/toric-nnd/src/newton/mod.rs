//! Newton polyhedra over a cone, their dual fans, pointedness tests,
//! tropicalization and transverse curves.

pub mod cone;
pub mod fan;
pub mod pointed;
pub mod polyhedron;
pub mod trop;

pub use cone::ConeData;
pub use fan::{dual_fan, DualFan, FanRay, TwoCone};
pub use pointed::{gorenstein_pointed_at, pointed_at, Ring};
pub use polyhedron::{FaceData, NewtonData};
pub use trop::{generated_cone, tropicalization_cone, transverse_curves, transverse_projection, GeneratedCone, Transverse};
