//! Plane rooted trees and their symmetric, rootable and plane rootable variants.

pub mod arrows;
pub mod plane;
pub mod variants;

pub use arrows::{arrow, dir_of, dual, edge_of, ArrowId, ArrowStructure, Dir, End, PredecessorTree};
pub use plane::{enumerate_trees, EdgeId, EdgeInfo, EdgeRef, Shape, Tree};
pub use variants::{
    enumerate_cyc, enumerate_rootable, enumerate_sym, reroot, sort_children, CycTree, RootableTree, SymTree,
};
