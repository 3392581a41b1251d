#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod codes;
pub mod designs;
pub mod error;
pub mod families;
pub mod gf;
pub mod linalg;
pub mod pg3;
pub mod projline;
pub mod util;

pub use error::{Error, Result};
pub use gf::{build_field, FieldCtx, FieldElem};
