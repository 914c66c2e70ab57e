//! Finite abstract simplicial complexes.
//!
//! Faces, f-vectors and Euler characteristics ([`Complex`]), stars, closures
//! and links ([`star_link`]), exact face/coface counting identities
//! ([`counting`]), Euler complex classification ([`euler_check`]), standard
//! constructions ([`generators`]), and a plain-text facet format ([`io`]).
//!
//! ```
//! use eulerplex_core::{io, euler_check::{verify_theorem, CheckOptions}};
//!
//! let t = io::parse_str("a b c\na b d\na c d\nb c d\n").unwrap();
//! assert_eq!(t.f_vector().unwrap().counts(), &[4, 6, 4]);
//! assert_eq!(t.euler_characteristic().unwrap(), 2);
//! assert!(verify_theorem(&t, &CheckOptions::default()).unwrap().is_euler);
//! ```

pub mod complex;
pub mod counting;
pub mod error;
pub mod euler_check;
pub mod generators;
pub mod io;
pub mod simplex;
pub mod star_link;

pub use complex::{Complex, FVector};
pub use counting::{Identity, LemmaReport, Parameters};
pub use error::{Error, Result};
pub use euler_check::{CheckOptions, EulerReport, LinkCheck};
pub use generators::Seed;
pub use simplex::{Simplex, VertexId};
pub use star_link::SimplexSet;
