//! Subdivisions of triangles by an interior point into angles that are
//! rational multiples of π (rational numbers of degrees).
//!
//! A subdivision is a tuple `(u, v, w, x, y, z)` of degrees with
//! `A = u + x`, `B = v + y`, `C = w + z`; the three cevians meet in one
//! point exactly when `sin u · sin v · sin w = sin x · sin y · sin z`.
//! That identity is decided exactly by reduction modulo a cyclotomic
//! polynomial ([`cyclotomic::ceva_holds_exact`]).
//!
//! ```
//! use cevian::{io::parse_tuple, cyclotomic::ceva_holds_exact};
//!
//! let t = parse_tuple("30,10,40,70,10,20").unwrap();
//! assert!(ceva_holds_exact(&t).unwrap());
//! ```

pub mod angles;
pub mod catalog;
pub mod census;
pub mod config;
pub mod cyclotomic;
pub mod embed;
pub mod error;
pub mod io;
pub mod rational;
pub mod recursion;
pub mod svg;

pub use angles::{CevaTuple, Triangle};
pub use error::{Error, Result};
pub use rational::Rational;
