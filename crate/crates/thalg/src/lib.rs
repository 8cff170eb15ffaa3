pub mod axioms;
pub mod cinterval;
pub mod embedding;
pub mod error;
pub mod factor;
pub mod galois;
pub mod group;
pub mod membership;
pub mod modp;
pub mod numfield;
pub mod orbit;
pub mod parse;
pub mod perm;
pub mod poly;
pub mod roots;
pub mod sentence;
pub mod sturm;

pub use error::{Error, Result};
pub use poly::{PolyQ, PolyZ, Rat};
