//! Tangle expressions over the generators of the handlebody-tangle category.

mod builtin;
mod catalogue;
mod expr;
mod horn;
mod parse;
pub mod random;
mod slice;

pub use builtin::{braid_word, builtin, genus, theta, trivial_knot, BuiltinError};
pub use catalogue::{Relation, RelationCatalogue};
pub use expr::{nu_expansion, ArityError, Gen, TangleExpr};
pub use horn::{cap_occurrences, disk_sum, horn, horn_positions, HornError};
pub use parse::{parse, ParseError};
pub use slice::{to_slices, SliceForm};
