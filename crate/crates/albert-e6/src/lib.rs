//! Standard-library companion to `albert-e6-core`: text formats, seeded
//! sampling, parallel enumeration and orbit search, verification suites,
//! versioned reports and the command-line front end.

pub mod bfs;
pub mod checks;
pub mod cli;
pub mod enumerate;
pub mod report;
pub mod sample;
pub mod suites;
pub mod text;
