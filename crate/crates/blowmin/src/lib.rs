//! File formats, verification reports and the command-line front end for
//! `blowmin-core`.

mod error;
pub mod formats;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use report::{Verdict, VerificationReport};
pub use verify::Budget;
