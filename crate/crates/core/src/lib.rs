pub mod gf;
pub mod poly;
pub mod skew;
pub mod catalog;
pub mod engine;
pub mod props;
pub mod acceptance;
pub mod cli;
