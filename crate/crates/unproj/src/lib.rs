//! Weighted-homogeneous commutative algebra over exact rationals: sparse
//! polynomial arithmetic, Gröbner bases for ideals and modules, graded free
//! resolutions, Pfaffians of skew matrices, Hilbert series, and the
//! verification pipelines built on top of them.

pub mod fixtures;
pub mod gb;
pub mod hilbert;
pub mod ideal;
pub mod io;
pub mod k3db;
pub mod linalg;
pub mod matrix;
pub mod order;
pub mod parse;
pub mod pfaffian;
pub mod pipeline;
pub mod poly;
pub mod resolve;
pub mod ring;
