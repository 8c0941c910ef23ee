pub mod cli;
pub mod cyclic;
pub mod error;
pub mod field;
pub mod linalg;
pub mod poly;
pub mod qc;
pub mod quantum;
