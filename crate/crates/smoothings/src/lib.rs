pub mod classifier;
pub mod cli;
pub mod cohomops;
pub mod complex_core;
pub mod exact_algebra;
pub mod oracle;
pub mod profile;
