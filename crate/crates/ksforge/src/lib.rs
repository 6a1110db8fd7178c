//! Toolkit for 4-dimensional Kochen-Specker vector sets represented as MMP
//! hypergraphs: notation parsing, 0/1 colorability, edge stripping,
//! isomorphism rejection, maximal-loop classification, parity proofs, exact
//! 600-cell geometry, and the census pipeline tying them together.

pub mod coloring;
pub mod geometry;
pub mod iso;
pub mod loops;
pub mod corpus;
pub mod mmp;
pub mod parity;
pub mod pipeline;
pub mod strip;
