//! Classification of presented complete local rings `K[[x]]/I` against the
//! characterizations of completions of (noncatenary) local domains and UFDs.

pub mod analyzer;
pub mod error;
pub mod exec;
pub mod families;
pub mod field;
pub mod groebner;
pub mod monomial;
pub mod poly;
pub mod script;
pub mod spectra;
