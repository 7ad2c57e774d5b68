pub mod zmatrix;
pub mod pc;
pub mod nq;
pub mod analysis;
pub mod lie;
pub mod catalog;
