#![no_std]

extern crate alloc;

pub mod albert;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod octonion;
pub mod orbits;
pub mod ortho;
pub mod packed;
pub mod se6;
