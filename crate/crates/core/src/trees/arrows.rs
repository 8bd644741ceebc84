//! Oriented edges ("arrows") of a tree once the root is forgotten.
//!
//! A rootable tree is stored through a plane rooted representative. Every
//! edge `e` of the representative yields two anti-parallel arrows: `Down`
//! (pointing towards the representative's root) and `Up`. The arrows pointing
//! into a given arrow `b` form a plane rooted tree with root `b`, its
//! *predecessor tree*; operations of the cyclic operad with output `b` are
//! exactly the operations of that plane tree with output its root.


use super::plane::{EdgeId, Shape, Tree};

pub type ArrowId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    /// Towards the representative's root.
    Down = 0,
    Up = 1,
}

pub fn arrow(e: EdgeId, dir: Dir) -> ArrowId {
    2 * e + dir as usize
}

/// The anti-parallel arrow on the same edge.
pub fn dual(a: ArrowId) -> ArrowId {
    a ^ 1
}

pub fn edge_of(a: ArrowId) -> EdgeId {
    a / 2
}

pub fn dir_of(a: ArrowId) -> Dir {
    if a.is_multiple_of(2) {
        Dir::Down
    } else {
        Dir::Up
    }
}

/// Where an arrow starts or ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum End {
    Infinity,
    /// A vertex, named by its output edge in the representative.
    Vertex(EdgeId),
}

/// The predecessor tree of one arrow, with its edges labelled by arrows.
#[derive(Clone, Debug)]
pub struct PredecessorTree {
    pub tree: Tree,
    /// Arrow carried by each edge of `tree` (pre-order), all oriented towards the root.
    pub arrows: Vec<ArrowId>,
    /// Edge carrying each arrow of the whole tree, if any.
    index: Vec<Option<EdgeId>>,
}

impl PredecessorTree {
    pub fn edge_of_arrow(&self, a: ArrowId) -> Option<EdgeId> {
        self.index.get(a).copied().flatten()
    }
}

#[derive(Clone, Debug)]
pub struct ArrowStructure {
    rep: Tree,
    preds: Vec<PredecessorTree>,
}

impl ArrowStructure {
    pub fn new(rep: &Tree) -> Self {
        let preds = (0..2 * rep.num_edges()).map(|a| predecessor_tree(rep, a)).collect();
        ArrowStructure { rep: rep.clone(), preds }
    }

    pub fn rep(&self) -> &Tree {
        &self.rep
    }

    pub fn num_arrows(&self) -> usize {
        self.preds.len()
    }

    pub fn predecessors(&self, a: ArrowId) -> &PredecessorTree {
        &self.preds[a]
    }

    pub fn source(&self, a: ArrowId) -> End {
        source(&self.rep, a)
    }

    pub fn target(&self, a: ArrowId) -> End {
        source(&self.rep, dual(a))
    }

    /// Comes in from infinity.
    pub fn is_leaf_arrow(&self, a: ArrowId) -> bool {
        self.source(a) == End::Infinity
    }

    /// Goes out to infinity.
    pub fn is_root_arrow(&self, a: ArrowId) -> bool {
        self.target(a) == End::Infinity
    }

    /// Number of boundary positions minus one; equals the arity of the representative.
    pub fn arity(&self) -> usize {
        self.rep.arity()
    }

    /// Leaf arrow at boundary position `t` (clockwise from the representative's root end).
    pub fn leaf_arrow_at(&self, t: usize) -> ArrowId {
        if t == 0 {
            arrow(0, Dir::Up)
        } else {
            arrow(self.rep.leaves()[t - 1], Dir::Down)
        }
    }

    pub fn root_arrow_at(&self, t: usize) -> ArrowId {
        dual(self.leaf_arrow_at(t))
    }

    /// Boundary position of a leaf or root arrow.
    pub fn boundary_position(&self, a: ArrowId) -> Option<usize> {
        (0..=self.arity()).find(|&t| self.leaf_arrow_at(t) == a || self.root_arrow_at(t) == a)
    }

    /// The area just clockwise after `a`; area `t` lies between boundary
    /// positions `t` and `t + 1`. The areas of the predecessor tree of `a`
    /// are this one and the following ones, in order.
    pub fn area_offset(&self, a: ArrowId) -> usize {
        let info = self.rep.edge(edge_of(a));
        match dir_of(a) {
            Dir::Down => info.left,
            Dir::Up => info.right,
        }
    }
}

fn source(rep: &Tree, a: ArrowId) -> End {
    let e = edge_of(a);
    match dir_of(a) {
        Dir::Down => {
            if rep.is_leaf(e) {
                End::Infinity
            } else {
                End::Vertex(e)
            }
        }
        Dir::Up => match rep.edge(e).parent {
            None => End::Infinity,
            Some(p) => End::Vertex(p),
        },
    }
}

/// Incident edges of the vertex on top of `v`, in clockwise order starting
/// with its output edge.
fn incident(rep: &Tree, v: EdgeId) -> Vec<EdgeId> {
    let mut out = vec![v];
    out.extend_from_slice(rep.inputs(v));
    out
}

fn predecessor_tree(rep: &Tree, a: ArrowId) -> PredecessorTree {
    fn go(rep: &Tree, a: ArrowId, arrows: &mut Vec<ArrowId>) -> Shape {
        arrows.push(a);
        match source(rep, a) {
            End::Infinity => Shape::Eta,
            End::Vertex(v) => {
                let inc = incident(rep, v);
                let pos = inc.iter().position(|&e| e == edge_of(a)).expect("arrow is incident");
                let k = inc.len();
                let children = (1..k)
                    .map(|t| {
                        let e = inc[(pos + t) % k];
                        // the arrow along e that points into v
                        let into = if e == v { arrow(e, Dir::Up) } else { arrow(e, Dir::Down) };
                        go(rep, into, arrows)
                    })
                    .collect();
                Shape::Vertex(children)
            }
        }
    }
    let mut arrows = Vec::new();
    let shape = go(rep, a, &mut arrows);
    let mut index = vec![None; 2 * rep.num_edges()];
    for (i, &x) in arrows.iter().enumerate() {
        index[x] = Some(i);
    }
    PredecessorTree { tree: Tree::from_shape(shape), arrows, index }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_has_two_boundary_arrows() {
        let s = ArrowStructure::new(&Tree::eta());
        assert_eq!(s.num_arrows(), 2);
        for a in 0..2 {
            assert!(s.is_leaf_arrow(a) && s.is_root_arrow(a));
            assert_eq!(s.predecessors(a).tree, Tree::eta());
        }
        assert_eq!(s.leaf_arrow_at(0), 1);
        assert_eq!(s.leaf_arrow_at(1), 0);
    }

    #[test]
    fn predecessors_of_the_down_root_arrow_is_the_whole_tree() {
        let t = Tree::parse("((ee)e(e))").unwrap();
        let s = ArrowStructure::new(&t);
        let p = s.predecessors(arrow(0, Dir::Down));
        assert_eq!(p.tree, t);
        assert_eq!(p.arrows, (0..t.num_edges()).map(|e| arrow(e, Dir::Down)).collect::<Vec<_>>());
    }

    #[test]
    fn rerooting_a_corolla_gives_a_corolla() {
        let t = Tree::corolla(3);
        let s = ArrowStructure::new(&t);
        for pos in 0..=3 {
            assert_eq!(s.predecessors(s.root_arrow_at(pos)).tree, t);
        }
    }

    #[test]
    fn up_arrow_predecessors_start_clockwise_after_the_edge() {
        // binary root vertex; left input carries a binary vertex
        let t = Tree::parse("((ee)e)").unwrap();
        let s = ArrowStructure::new(&t);
        let left = t.id_of(&crate::trees::EdgeRef(vec![0])).unwrap();
        let p = s.predecessors(arrow(left, Dir::Up));
        // inputs clockwise after the left edge: the right leaf, then the root end
        assert_eq!(p.tree.code(), "(ee)");
        assert_eq!(p.arrows[1], arrow(t.id_of(&crate::trees::EdgeRef(vec![1])).unwrap(), Dir::Down));
        assert_eq!(p.arrows[2], arrow(0, Dir::Up));
        assert_eq!(s.area_offset(arrow(left, Dir::Up)), 2);
    }
}
