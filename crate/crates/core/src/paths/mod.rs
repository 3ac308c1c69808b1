//! Lattice paths for tableaux with at most `k` columns, wall geometry and
//! tail reflections, with a scalar fast form for `k = 2`.

mod path2;
mod pathk;
mod render;

pub use path2::{
    dominant_paths, dominant_paths_to, on_wall, paths_of_shape, step_degree, Arc, ArcSign, Path2,
    Segment,
};
pub use pathk::{deg_step, pairing, PathK};
pub use render::render_ascii;
