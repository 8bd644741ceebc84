//! Plane rooted trees.
//!
//! A tree is either the trivial tree `η` (a single edge that is both root and
//! leaf) or a root vertex carrying an ordered list of child trees. Edges are
//! named by [`EdgeRef`] paths and, internally, by their pre-order index
//! ([`EdgeId`]); the root edge always has index 0.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Pre-order index of an edge inside a [`Tree`].
pub type EdgeId = usize;

/// Address of an edge: the child indices walked from the root edge.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeRef(pub Vec<usize>);

impl EdgeRef {
    pub fn root() -> Self {
        EdgeRef(Vec::new())
    }

    pub fn child(&self, i: usize) -> Self {
        let mut path = self.0.clone();
        path.push(i);
        EdgeRef(path)
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` lies weakly below `other` (on the path from `other` to the root).
    pub fn is_prefix_of(&self, other: &EdgeRef) -> bool {
        other.0.starts_with(&self.0)
    }

    /// Dot-joined indices; the root edge is the empty string.
    pub fn to_dotted(&self) -> String {
        self.0.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(".")
    }

    pub fn parse_dotted(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(EdgeRef::root());
        }
        s.split('.')
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad edge path component {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(EdgeRef)
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_root() {
            write!(f, "root")
        } else {
            write!(f, "{}", self.to_dotted())
        }
    }
}

/// The bare recursive structure of a plane rooted tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Eta,
    Vertex(Vec<Shape>),
}

impl Shape {
    /// Compact encoding: `e` for `η`, `(` children `)` for a vertex.
    pub fn code(&self) -> String {
        let mut s = String::new();
        self.write_code(&mut s);
        s
    }

    fn write_code(&self, out: &mut String) {
        match self {
            Shape::Eta => out.push('e'),
            Shape::Vertex(children) => {
                out.push('(');
                for c in children {
                    c.write_code(out);
                }
                out.push(')');
            }
        }
    }

    pub fn parse_code(code: &str) -> Result<Shape> {
        let bytes = code.as_bytes();
        let (shape, used) = Self::parse_at(bytes, 0)
            .ok_or_else(|| Error::Parse(format!("malformed tree code {code:?}")))?;
        if used != bytes.len() {
            return Err(Error::Parse(format!("trailing characters in tree code {code:?}")));
        }
        Ok(shape)
    }

    fn parse_at(bytes: &[u8], mut pos: usize) -> Option<(Shape, usize)> {
        match bytes.get(pos)? {
            b'e' => Some((Shape::Eta, pos + 1)),
            b'(' => {
                pos += 1;
                let mut children = Vec::new();
                loop {
                    match bytes.get(pos)? {
                        b')' => return Some((Shape::Vertex(children), pos + 1)),
                        _ => {
                            let (c, next) = Self::parse_at(bytes, pos)?;
                            children.push(c);
                            pos = next;
                        }
                    }
                }
            }
            _ => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Shape::Eta => serde_json::Value::String("e".into()),
            Shape::Vertex(children) => {
                serde_json::json!({ "v": children.iter().map(Shape::to_json).collect::<Vec<_>>() })
            }
        }
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Shape> {
        match value {
            serde_json::Value::String(s) if s == "e" => Ok(Shape::Eta),
            serde_json::Value::Object(map) if map.len() == 1 => match map.get("v") {
                Some(serde_json::Value::Array(items)) => Ok(Shape::Vertex(
                    items.iter().map(Shape::from_json).collect::<Result<Vec<_>>>()?,
                )),
                _ => Err(Error::Parse(format!("expected {{\"v\": [...]}}, got {value}"))),
            },
            _ => Err(Error::Parse(format!("not a tree: {value}"))),
        }
    }
}

/// Per-edge bookkeeping. Leaves and areas are counted left to right.
#[derive(Clone, Debug)]
pub struct EdgeInfo {
    pub path: EdgeRef,
    /// The edge directly below (the output of the vertex this edge enters).
    pub parent: Option<EdgeId>,
    /// Input edges of the vertex sitting on top of this edge; `None` for a leaf.
    pub children: Option<Vec<EdgeId>>,
    /// Number of leaves strictly to the left of this edge's subtree.
    pub left: usize,
    /// `left` plus the number of leaves above this edge.
    pub right: usize,
    /// Position among the leaves, if this edge is a leaf.
    pub leaf_index: Option<usize>,
}

/// Admissible cuts of the free operad, grouped by output edge and arity.
#[derive(Debug, Default)]
struct OperationTable {
    by_output: Vec<Vec<Vec<EdgeId>>>,
    by_output_arity: Vec<Vec<Vec<Vec<EdgeId>>>>,
    lookup: Vec<HashSet<Vec<EdgeId>>>,
}

struct TreeInner {
    shape: Shape,
    code: String,
    edges: Vec<EdgeInfo>,
    leaves: Vec<EdgeId>,
    vertices: Vec<EdgeId>,
    by_path: HashMap<EdgeRef, EdgeId>,
    ops: OnceLock<OperationTable>,
}

/// A plane rooted tree with cached edge tables. Cheap to clone.
#[derive(Clone)]
pub struct Tree(Arc<TreeInner>);

impl Tree {
    pub fn from_shape(shape: Shape) -> Tree {
        let code = shape.code();
        let mut edges = Vec::new();
        let mut leaves = Vec::new();
        Self::index(&shape, EdgeRef::root(), None, &mut edges, &mut leaves);
        let vertices = (0..edges.len()).filter(|&e| edges[e].children.is_some()).collect();
        let by_path = edges.iter().enumerate().map(|(i, e)| (e.path.clone(), i)).collect();
        Tree(Arc::new(TreeInner {
            shape,
            code,
            edges,
            leaves,
            vertices,
            by_path,
            ops: OnceLock::new(),
        }))
    }

    fn index(
        shape: &Shape,
        path: EdgeRef,
        parent: Option<EdgeId>,
        edges: &mut Vec<EdgeInfo>,
        leaves: &mut Vec<EdgeId>,
    ) -> EdgeId {
        let id = edges.len();
        let left = leaves.len();
        edges.push(EdgeInfo { path: path.clone(), parent, children: None, left, right: left, leaf_index: None });
        match shape {
            Shape::Eta => {
                edges[id].leaf_index = Some(leaves.len());
                leaves.push(id);
            }
            Shape::Vertex(children) => {
                let ids = children
                    .iter()
                    .enumerate()
                    .map(|(i, c)| Self::index(c, path.child(i), Some(id), edges, leaves))
                    .collect();
                edges[id].children = Some(ids);
            }
        }
        edges[id].right = leaves.len();
        id
    }

    /// The trivial tree `η`.
    pub fn eta() -> Tree {
        Tree::from_shape(Shape::Eta)
    }

    /// The `n`-corolla: one vertex with `n` leaves.
    pub fn corolla(n: usize) -> Tree {
        Tree::from_shape(Shape::Vertex(vec![Shape::Eta; n]))
    }

    /// A chain of `n` unary vertices; `linear(0)` is `η`.
    pub fn linear(n: usize) -> Tree {
        let mut shape = Shape::Eta;
        for _ in 0..n {
            shape = Shape::Vertex(vec![shape]);
        }
        Tree::from_shape(shape)
    }

    /// A root vertex carrying the given subtrees in planar order.
    pub fn vertex(children: &[Tree]) -> Tree {
        Tree::from_shape(Shape::Vertex(children.iter().map(|c| c.shape().clone()).collect()))
    }

    pub fn parse(code: &str) -> Result<Tree> {
        Shape::parse_code(code).map(Tree::from_shape)
    }

    pub fn shape(&self) -> &Shape {
        &self.0.shape
    }

    pub fn code(&self) -> &str {
        &self.0.code
    }

    pub fn is_eta(&self) -> bool {
        matches!(self.0.shape, Shape::Eta)
    }

    /// Number of leaves.
    pub fn arity(&self) -> usize {
        self.0.leaves.len()
    }

    pub fn num_edges(&self) -> usize {
        self.0.edges.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.0.vertices.len()
    }

    pub const fn root(&self) -> EdgeId {
        0
    }

    pub fn edge(&self, e: EdgeId) -> &EdgeInfo {
        &self.0.edges[e]
    }

    pub fn edges(&self) -> &[EdgeInfo] {
        &self.0.edges
    }

    /// Leaves in planar order.
    pub fn leaves(&self) -> &[EdgeId] {
        &self.0.leaves
    }

    /// Edges that carry a vertex on top, in pre-order. A vertex is named by
    /// its output edge.
    pub fn vertices(&self) -> &[EdgeId] {
        &self.0.vertices
    }

    pub fn is_leaf(&self, e: EdgeId) -> bool {
        self.0.edges[e].children.is_none()
    }

    /// Inputs of the vertex on top of `e` (empty for a leaf as well as for a
    /// nullary vertex; use [`Tree::is_leaf`] to tell them apart).
    pub fn inputs(&self, e: EdgeId) -> &[EdgeId] {
        self.0.edges[e].children.as_deref().unwrap_or(&[])
    }

    pub fn max_vertex_arity(&self) -> usize {
        self.vertices().iter().map(|&v| self.inputs(v).len()).max().unwrap_or(0)
    }

    pub fn id_of(&self, path: &EdgeRef) -> Option<EdgeId> {
        self.0.by_path.get(path).copied()
    }

    pub fn path(&self, e: EdgeId) -> &EdgeRef {
        &self.0.edges[e].path
    }

    /// `lower` lies on the path from `upper` down to the root (or equals it).
    pub fn is_weakly_below(&self, lower: EdgeId, upper: EdgeId) -> bool {
        self.path(lower).is_prefix_of(self.path(upper))
    }

    /// The subtree sitting above `e`, rooted at `e`.
    pub fn subtree(&self, e: EdgeId) -> Tree {
        let mut shape = &self.0.shape;
        for &i in &self.path(e).0 {
            match shape {
                Shape::Vertex(children) => shape = &children[i],
                Shape::Eta => unreachable!("edge paths only descend through vertices"),
            }
        }
        Tree::from_shape(shape.clone())
    }

    /// The tree with everything strictly above `e` removed, so that `e` becomes a leaf.
    pub fn prune(&self, e: EdgeId) -> Tree {
        fn go(shape: &Shape, path: &[usize]) -> Shape {
            match (shape, path.split_first()) {
                (_, None) => Shape::Eta,
                (Shape::Vertex(children), Some((&i, rest))) => Shape::Vertex(
                    children
                        .iter()
                        .enumerate()
                        .map(|(j, c)| if j == i { go(c, rest) } else { c.clone() })
                        .collect(),
                ),
                (Shape::Eta, Some(_)) => unreachable!(),
            }
        }
        Tree::from_shape(go(&self.0.shape, &self.path(e).0))
    }

    /// Graft `top` onto the leaf `leaf` of `self`.
    pub fn graft(&self, leaf: &EdgeRef, top: &Tree) -> Result<Tree> {
        let id = self
            .id_of(leaf)
            .ok_or_else(|| Error::InvalidEdge(format!("{leaf} is not an edge of {self}")))?;
        if !self.is_leaf(id) {
            return Err(Error::InvalidEdge(format!("{leaf} is not a leaf of {self}")));
        }
        fn go(shape: &Shape, path: &[usize], top: &Shape) -> Shape {
            match (shape, path.split_first()) {
                (_, None) => top.clone(),
                (Shape::Vertex(children), Some((&i, rest))) => Shape::Vertex(
                    children
                        .iter()
                        .enumerate()
                        .map(|(j, c)| if j == i { go(c, rest, top) } else { c.clone() })
                        .collect(),
                ),
                (Shape::Eta, Some(_)) => unreachable!(),
            }
        }
        Ok(Tree::from_shape(go(self.shape(), &leaf.0, top.shape())))
    }

    fn ops(&self) -> &OperationTable {
        self.0.ops.get_or_init(|| self.build_operations())
    }

    fn build_operations(&self) -> OperationTable {
        let n = self.num_edges();
        let mut by_output: Vec<Vec<Vec<EdgeId>>> = vec![Vec::new(); n];
        // children have larger pre-order indices, so fill from the back
        for b in (0..n).rev() {
            let mut ops = vec![vec![b]];
            if let Some(children) = &self.0.edges[b].children {
                let mut partial: Vec<Vec<EdgeId>> = vec![Vec::new()];
                for &c in children {
                    let mut next = Vec::with_capacity(partial.len() * by_output[c].len());
                    for p in &partial {
                        for op in &by_output[c] {
                            let mut v = p.clone();
                            v.extend_from_slice(op);
                            next.push(v);
                        }
                    }
                    partial = next;
                }
                ops.extend(partial);
            }
            by_output[b] = ops;
        }
        let by_output_arity = by_output
            .iter()
            .map(|ops| {
                let max_arity = ops.iter().map(Vec::len).max().unwrap_or(0);
                let mut grouped = vec![Vec::new(); max_arity + 1];
                for op in ops {
                    grouped[op.len()].push(op.clone());
                }
                grouped
            })
            .collect();
        let lookup = by_output.iter().map(|ops| ops.iter().cloned().collect()).collect();
        OperationTable { by_output, by_output_arity, lookup }
    }

    /// All operations of the free operad with output `b`, as input lists in
    /// planar order. The identity `[b]` comes first.
    pub fn operations_at(&self, b: EdgeId) -> &[Vec<EdgeId>] {
        &self.ops().by_output[b]
    }

    /// Operations with output `b` and exactly `arity` inputs.
    pub fn operations_with_arity(&self, b: EdgeId, arity: usize) -> &[Vec<EdgeId>] {
        self.ops().by_output_arity[b].get(arity).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Whether `inputs` (in this exact order) is an admissible cut above `b`.
    pub fn is_operation(&self, b: EdgeId, inputs: &[EdgeId]) -> bool {
        self.ops().lookup[b].contains(inputs)
    }

    /// Whether `inputs`, in some order, is an admissible cut above `b`.
    pub fn is_operation_unordered(&self, b: EdgeId, inputs: &[EdgeId]) -> bool {
        let mut sorted = inputs.to_vec();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1]) && self.ops().lookup[b].contains(&sorted)
    }

    /// Multi-line rendering, one edge per line, children indented.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for info in self.edges() {
            let depth = info.path.0.len();
            let kind = match &info.children {
                None => "leaf".to_string(),
                Some(c) => format!("vertex/{}", c.len()),
            };
            out.push_str(&format!("{}{} [{}]\n", "  ".repeat(depth), info.path, kind));
        }
        out
    }
}

impl PartialEq for Tree {
    fn eq(&self, other: &Self) -> bool {
        self.0.code == other.0.code
    }
}

impl Eq for Tree {}

impl Hash for Tree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.code.hash(state)
    }
}

/// Length-lexicographic order on the encoding.
impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.code.len().cmp(&other.0.code.len()).then_with(|| self.0.code.cmp(&other.0.code))
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.code)
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({})", self.0.code)
    }
}

impl Serialize for Tree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.shape().to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        Shape::from_json(&value).map(Tree::from_shape).map_err(serde::de::Error::custom)
    }
}

/// All plane rooted trees with at most `max_vertices` vertices, each of arity
/// at most `max_arity`, sorted in encoding order.
pub fn enumerate_trees(max_vertices: usize, max_arity: usize) -> Vec<Tree> {
    // exact[k] = all shapes with exactly k vertices
    let mut exact: Vec<Vec<Shape>> = vec![vec![Shape::Eta]];
    for k in 1..=max_vertices {
        let mut level = Vec::new();
        for arity in 0..=max_arity {
            // distribute k - 1 vertices over `arity` ordered children
            for split in compositions(k - 1, arity) {
                let mut partial: Vec<Vec<Shape>> = vec![Vec::new()];
                for &part in &split {
                    partial = partial
                        .into_iter()
                        .flat_map(|p| {
                            exact[part].iter().map(move |c| {
                                let mut v = p.clone();
                                v.push(c.clone());
                                v
                            })
                        })
                        .collect();
                }
                level.extend(partial.into_iter().map(Shape::Vertex));
            }
        }
        exact.push(level);
    }
    let mut trees: Vec<Tree> = exact.into_iter().flatten().map(Tree::from_shape).collect();
    trees.sort();
    trees
}

/// Ordered ways to write `total` as a sum of `parts` naturals.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_is_a_single_edge() {
        let eta = Tree::eta();
        assert_eq!(eta.arity(), 1);
        assert_eq!(eta.leaves(), &[0]);
        assert!(eta.vertices().is_empty());
        assert_eq!(eta.code(), "e");
    }

    #[test]
    fn corollas() {
        let c2 = Tree::corolla(2);
        assert_eq!((c2.num_vertices(), c2.arity()), (1, 2));
        let c0 = Tree::corolla(0);
        assert_eq!((c0.num_vertices(), c0.arity(), c0.num_edges()), (1, 0, 1));
    }

    #[test]
    fn linear_trees() {
        assert_eq!(Tree::linear(0), Tree::eta());
        assert_eq!(Tree::linear(1), Tree::corolla(1));
        let l2 = Tree::linear(2);
        assert_eq!(l2.code(), "((e))");
        assert_eq!((l2.num_vertices(), l2.arity()), (2, 1));
    }

    #[test]
    fn grafting_adds_arities() {
        let left = Tree::corolla(1).graft(&EdgeRef(vec![0]), &Tree::corolla(4)).unwrap();
        assert_eq!(left.code(), "((eeee))");
        let t = Tree::corolla(2).graft(&EdgeRef(vec![0]), &Tree::corolla(3)).unwrap();
        assert_eq!(t.arity(), 4);
        assert_eq!(t.graft(&EdgeRef(vec![1]), &Tree::eta()).unwrap(), t);
    }

    #[test]
    fn grafting_onto_a_non_leaf_fails() {
        let t = Tree::corolla(2);
        assert!(matches!(t.graft(&EdgeRef::root(), &Tree::eta()), Err(Error::InvalidEdge(_))));
        assert!(t.graft(&EdgeRef(vec![5]), &Tree::eta()).is_err());
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_trees(0, 3), vec![Tree::eta()]);
        let codes: Vec<_> = enumerate_trees(1, 2).iter().map(|t| t.code().to_string()).collect();
        assert_eq!(codes, ["e", "()", "(e)", "(ee)"]);
    }

    #[test]
    fn code_and_json_round_trip() {
        for t in enumerate_trees(3, 2) {
            assert_eq!(Tree::parse(t.code()).unwrap(), t);
            let json = serde_json::to_string(&t).unwrap();
            assert_eq!(serde_json::from_str::<Tree>(&json).unwrap(), t);
        }
        assert_eq!(serde_json::to_string(&Tree::corolla(2)).unwrap(), r#"{"v":["e","e"]}"#);
    }

    #[test]
    fn malformed_codes_are_rejected() {
        for bad in ["", "(", "ee", "(e))", "x"] {
            assert!(Tree::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn areas_bracket_each_edge() {
        let t = Tree::parse("((ee)e(e))").unwrap();
        let root = t.edge(0);
        assert_eq!((root.left, root.right), (0, 4));
        let e = t.id_of(&EdgeRef(vec![2])).unwrap();
        assert_eq!((t.edge(e).left, t.edge(e).right), (3, 4));
    }

    #[test]
    fn operations_of_a_corolla_with_a_nullary_branch() {
        // a binary vertex whose second input carries a nullary vertex
        let t = Tree::parse("(e())").unwrap();
        let ops = t.operations_at(0);
        assert_eq!(ops.len(), 1 + 2);
        assert!(t.is_operation(0, &[1]));
        assert!(t.is_operation(0, &[1, 2]));
        assert!(!t.is_operation(0, &[2, 1]));
        assert!(t.is_operation_unordered(0, &[2, 1]));
    }
}
