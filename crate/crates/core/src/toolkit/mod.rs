//! Serialization, export, fixtures and instance generation.

pub mod corpus;
pub mod document;
pub mod dot;
pub mod fixtures;
pub mod generate;

pub use corpus::ordered_flag_corpus;
pub use document::{parse_complex, parse_document, serialize_complex, ComplexDocument};
pub use dot::export_dot;
pub use fixtures::{edge, path, point, Fixture};
pub use generate::gen_random_ordered_flag;
