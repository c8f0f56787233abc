pub mod eval;
pub mod hopf;
pub mod report;
pub mod scalar;
pub mod tangle;
pub mod zoo;
