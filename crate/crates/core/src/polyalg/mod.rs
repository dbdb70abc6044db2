//! Exact univariate polynomial arithmetic over ℚ.

mod interval;
mod poly;
mod resultant;
mod roots;

pub use interval::{Bound, Interval};
pub use poly::RatPoly;
pub use resultant::resultant;
pub(crate) use roots::is_x;
pub use roots::{
    gcd, isolate_roots, ord_at, rotate_imaginary, share_root, squarefree_decomposition,
    squarefree_part, sturm_count, sturm_count_detailed, IsolatedRoot, RootCount, RootIsolator,
    SquarefreeFactor, SturmSequence,
};
