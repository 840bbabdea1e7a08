pub mod depthcheck;
pub mod error;
pub mod free;
pub mod groebner;
pub mod homology;
pub mod instance;
pub mod module;
pub mod poly;
pub mod resolution;
pub mod ring;
pub mod suite;

pub use error::{Error, Result};
pub use free::{FreeModule, ModuleMap};
pub use homology::{depth, ext, is_tor_independent, tor, Bounded, Verdict};
pub use module::{is_regular_on, FPModule, QuotientTarget};
pub use poly::{FieldElem, Monomial, Poly, PrimeField};
pub use resolution::{free_resolution, syzygy, BettiTable, Over, Resolution};
pub use ring::{Ring, RingRef};
