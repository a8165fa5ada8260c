//! Guide chapters, compiled as doc-tests. One module per chapter so that a
//! failing snippet points at its file.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}
#[doc = include_str!("../../../book/src/treewidth.md")]
pub mod treewidth {}
#[doc = include_str!("../../../book/src/brambles.md")]
pub mod brambles {}
#[doc = include_str!("../../../book/src/minors.md")]
pub mod minors {}
#[doc = include_str!("../../../book/src/constructions.md")]
pub mod constructions {}
#[doc = include_str!("../../../book/src/bounds.md")]
pub mod bounds {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
