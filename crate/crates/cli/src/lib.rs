//! Shared pieces of the `digitop` command-line tool: the `.pts` file
//! format and the figure renderers. The binary in `main.rs` wires these
//! to the library operations.

pub mod pts;
pub mod render;
