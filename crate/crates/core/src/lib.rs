pub mod algebra;
pub mod cli;
pub mod corner;
pub mod error;
pub mod io;
pub mod linalg;
pub mod modrep;
pub mod poly;
pub mod quiver;
pub mod repscheme;

pub use error::{Error, ParseError, Result};
