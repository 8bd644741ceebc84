//! The dendroidal nerve: operad maps out of the free operad on a tree.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use itertools::Itertools;

use super::FiniteOperad;
use crate::error::{Error, Result};
use crate::hom::TreeMorphism;
use crate::presheaves::DendroidalSet;
use crate::trees::{enumerate_trees, EdgeId, Tree};

/// A labelling of `T`: an operation on every vertex edge and a colour on
/// every leaf, compatible along inner edges.
type Labelling = Vec<usize>;

struct Level {
    elements: Vec<Labelling>,
    index: HashMap<Labelling, usize>,
}

pub struct OperadNerve {
    operad: Arc<FiniteOperad>,
    trees: Vec<Tree>,
    levels: Mutex<HashMap<Tree, Arc<Level>>>,
}

impl OperadNerve {
    /// Over the trees with at most `max_vertices` vertices of arity at most
    /// the operad's bound.
    pub fn new(operad: &FiniteOperad, max_vertices: usize) -> Self {
        let trees = enumerate_trees(max_vertices, operad.arity_bound());
        OperadNerve { operad: Arc::new(operad.clone()), trees, levels: Mutex::new(HashMap::new()) }
    }

    pub fn operad(&self) -> &FiniteOperad {
        &self.operad
    }

    fn level(&self, t: &Tree) -> Result<Arc<Level>> {
        if !self.admits(t) {
            return Err(Error::OutOfBounds(format!("{t} has a vertex above arity {}", self.operad.arity_bound())));
        }
        if let Some(level) = self.levels.lock().expect("not poisoned").get(t) {
            return Ok(level.clone());
        }
        let elements = labellings(&self.operad, t);
        let index = elements.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let level = Arc::new(Level { elements, index });
        self.levels.lock().expect("not poisoned").insert(t.clone(), level.clone());
        Ok(level)
    }

    /// The labellings of `t`, in enumeration order.
    pub fn elements(&self, t: &Tree) -> Result<Vec<Labelling>> {
        Ok(self.level(t)?.elements.clone())
    }

    pub fn find(&self, t: &Tree, labelling: &[usize]) -> Result<usize> {
        self.level(t)?
            .index
            .get(labelling)
            .copied()
            .ok_or_else(|| Error::Inconsistent(format!("{labelling:?} is not a labelling of {t}")))
    }

    fn color(&self, t: &Tree, l: &[usize], e: EdgeId) -> usize {
        if t.is_leaf(e) {
            l[e]
        } else {
            self.operad.op(l[e]).output
        }
    }

    /// The composite in `O` of the operation `cut → b` of the free operad on `t`.
    fn evaluate(&self, t: &Tree, l: &[usize], b: EdgeId, cut: &[EdgeId]) -> Result<usize> {
        if cut == [b] {
            return Ok(self.operad.unit(self.color(t, l, b)));
        }
        let children = t.inputs(b);
        let mut inners = Vec::with_capacity(children.len());
        let mut rest = cut;
        for &c in children {
            let k = rest.iter().take_while(|&&e| t.is_weakly_below(c, e)).count();
            inners.push(self.evaluate(t, l, c, &rest[..k])?);
            rest = &rest[k..];
        }
        self.operad.compose(l[b], &inners).ok_or_else(|| {
            Error::OutOfBounds(format!("γ({}; ...) beyond the composition table", self.operad.op(l[b]).id))
        })
    }
}

fn labellings(o: &FiniteOperad, t: &Tree) -> Vec<Labelling> {
    fn fill(o: &FiniteOperad, t: &Tree, pending: &mut Vec<(EdgeId, usize)>, l: &mut Labelling, out: &mut Vec<Labelling>) {
        let Some((e, color)) = pending.pop() else {
            out.push(l.clone());
            return;
        };
        if t.is_leaf(e) {
            l[e] = color;
            fill(o, t, pending, l, out);
        } else {
            let children = t.inputs(e);
            for &op in o.with_output_arity(color, children.len()) {
                l[e] = op;
                let before = pending.len();
                pending.extend(children.iter().copied().zip(o.op(op).inputs.iter().copied()));
                fill(o, t, pending, l, out);
                pending.truncate(before);
            }
        }
        pending.push((e, color));
    }
    let mut out = Vec::new();
    for y in 0..o.colors().len() {
        fill(o, t, &mut vec![(0, y)], &mut vec![0; t.num_edges()], &mut out);
    }
    out.sort();
    out
}

/// The nerve of `o` at `t`, as labels.
pub fn dendroidal_nerve(o: &FiniteOperad, t: &Tree) -> Result<Vec<String>> {
    let nerve = OperadNerve::new(o, 0);
    Ok((0..nerve.size(t)?).map(|x| nerve.label(t, x)).collect())
}

impl DendroidalSet for OperadNerve {
    fn trees(&self) -> &[Tree] {
        &self.trees
    }

    fn admits(&self, t: &Tree) -> bool {
        t.max_vertex_arity() <= self.operad.arity_bound()
    }

    fn size(&self, t: &Tree) -> Result<usize> {
        Ok(self.level(t)?.elements.len())
    }

    fn act(&self, alpha: &TreeMorphism, x: usize) -> Result<usize> {
        let (s, t) = (alpha.source(), alpha.target());
        let target = self.level(t)?;
        let l = target.elements.get(x).ok_or_else(|| Error::OutOfBounds(format!("element {x} of {t}")))?;
        let pulled = (0..s.num_edges())
            .map(|e| {
                if s.is_leaf(e) {
                    Ok(self.color(t, l, alpha.apply(e)))
                } else {
                    let cut: Vec<EdgeId> = s.inputs(e).iter().map(|&c| alpha.apply(c)).collect();
                    self.evaluate(t, l, alpha.apply(e), &cut)
                }
            })
            .collect::<Result<Labelling>>()?;
        self.find(s, &pulled)
    }

    fn label(&self, t: &Tree, x: usize) -> String {
        let Ok(level) = self.level(t) else { return format!("#{x}") };
        let l = &level.elements[x];
        fn term(o: &FiniteOperad, t: &Tree, l: &[usize], e: EdgeId) -> String {
            if t.is_leaf(e) {
                o.colors()[l[e]].clone()
            } else {
                format!("{}({})", o.op(l[e]).id, t.inputs(e).iter().map(|&c| term(o, t, l, c)).join(","))
            }
        }
        term(&self.operad, t, l, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localization::collapse_map;
    use crate::presheaves::{check_dendroidal_functoriality, check_dendroidal_segal, SmallCategory};

    #[test]
    fn small_values() {
        let o = FiniteOperad::of_category(&SmallCategory::linear_order(2), 2);
        assert_eq!(dendroidal_nerve(&o, &Tree::eta()).unwrap(), vec!["0", "1"]);
        assert_eq!(dendroidal_nerve(&o, &Tree::corolla(1)).unwrap().len(), 3);
        assert_eq!(dendroidal_nerve(&o, &Tree::corolla(2)).unwrap().len(), 0);
        assert_eq!(dendroidal_nerve(&o, &Tree::linear(2)).unwrap().len(), 4);
        let t = FiniteOperad::terminal(3);
        assert_eq!(dendroidal_nerve(&t, &Tree::parse("((ee)(ee)())").unwrap()).unwrap(), vec!["μ3(μ2(*,*),μ2(*,*),μ0())"]);
    }

    #[test]
    fn collapse_composes() {
        let o = FiniteOperad::sum(3, 3);
        let nerve = OperadNerve::new(&o, 2);
        let t = Tree::parse("((ee)e)").unwrap();
        let alpha = collapse_map(&t);
        let x = nerve.elements(&t).unwrap().iter().position(|l| l[0] == o.find_op("μ2.1").unwrap() && l[1] == o.find_op("μ2.2").unwrap()).unwrap();
        let y = nerve.act(&alpha, x).unwrap();
        assert_eq!(nerve.label(alpha.source(), y), "μ3.0(*,*,*)");
    }

    #[test]
    fn nerves_are_segal_and_functorial() {
        let o = FiniteOperad::sum(2, 2);
        let nerve = OperadNerve::new(&o, 3);
        assert!(check_dendroidal_segal(&nerve).ok());
        assert!(check_dendroidal_functoriality(&nerve, &enumerate_trees(2, 2)).ok());
    }
}
