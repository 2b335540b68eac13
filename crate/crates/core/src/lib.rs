//! Cell 2-representations of projective bimodule functors over star algebras.

pub mod bimodule_2cat;
pub mod cell_rep;
pub mod cli;
pub mod int_matrix;
pub mod linalg;
pub mod matrix_solver;
pub mod quiver_algebra;
pub mod verify;
