//! Library side of the `pairlab` binary: the JSON instance schema and the
//! report/flag machinery, shared with the integration tests.

pub mod report;
pub mod schema;
