//! Graph file formats, corpus generators, output rendering and the `rsp`
//! command line built on [`rsp_core`].

pub mod bench;
pub mod cli;
pub mod corpus;
pub mod format;
pub mod output;
