//! File formats, report rendering and acceptance checks on top of
//! `perfcone-core`.

pub mod catalog_text;
pub mod report;
pub mod verify;
