//! Compiles every Rust listing of the guide in `book/` as a doc-test, so the guide cannot
//! drift from the library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/values.md")]
pub mod values {}

#[doc = include_str!("../../../book/src/crisp.md")]
pub mod crisp {}

#[doc = include_str!("../../../book/src/hypergraphs.md")]
pub mod hypergraphs {}

#[doc = include_str!("../../../book/src/levels.md")]
pub mod levels {}

#[doc = include_str!("../../../book/src/duality.md")]
pub mod duality {}

#[doc = include_str!("../../../book/src/tempered.md")]
pub mod tempered {}

#[doc = include_str!("../../../book/src/partitions.md")]
pub mod partitions {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
