pub mod bound;
pub mod error;
pub mod family;
pub mod field;
pub mod format;
pub mod geometry;
pub mod grm;
pub mod linalg;
pub mod switching;
pub mod verify;
pub mod words;
