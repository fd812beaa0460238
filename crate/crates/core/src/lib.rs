//! Permutational representations of bipartite graphs.
//!
//! A word represents a graph when two vertices alternate in it exactly when
//! they are adjacent. This crate builds such words as concatenations of
//! permutations, using chain covers of the poset formed by neighborhood
//! containment, and checks them against exhaustive searches on small
//! instances.

pub mod builder;
pub mod catalog;
pub mod cli;
pub mod families;
pub mod format;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod poset;
pub mod words;
