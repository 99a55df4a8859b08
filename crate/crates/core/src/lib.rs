//! Exact computations for holes in the baker's map: rational geometry,
//! binary words, symbolic coding, named holes, survivor-set certificates and
//! the trap-area search.

pub mod analysis;
pub mod exact_geom;
pub mod holes;
pub mod svg;
pub mod symbolic;
pub mod trap_search;
pub mod words;

pub use exact_geom::{ConvexPoly, Mode, Point, Rat, Rect};
pub use holes::{named_hole, Hole};
pub use symbolic::{BiSeq, Cycle, Window};
pub use words::{Frac, Word};
