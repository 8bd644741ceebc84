//! `{"source": tree, "target": tree, "edges": {"0.1": "0", ...}}`.
//!
//! Rooted flavours name edges by dotted paths ("" is the root). Rootable
//! flavours name arrows as `"<path>:down"` (towards the representative's
//! root) or `"<path>:up"`, under the key `"arrows"`. Non-plane flavours add a
//! `"kind"` tag. Trees given in a non-canonical presentation are accepted
//! and canonicalized, with the colour names read in the given presentation.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::trees::{Shape, Tree};

use super::{Morphism, TreeObject};

fn colors_key<T: TreeObject>() -> &'static str {
    match T::KIND {
        "plane" | "sym" => "edges",
        _ => "arrows",
    }
}

impl<T: TreeObject> Morphism<T> {
    pub fn to_json(&self) -> Value {
        let colors: Map<String, Value> = self
            .map()
            .iter()
            .enumerate()
            .map(|(c, &d)| (self.source().color_name(c), Value::String(self.target().color_name(d))))
            .collect();
        let mut out = Map::new();
        if T::KIND != "plane" {
            out.insert("kind".into(), json!(T::KIND));
        }
        out.insert("source".into(), self.source().rep().shape().to_json());
        out.insert("target".into(), self.target().rep().shape().to_json());
        out.insert(colors_key::<T>().into(), Value::Object(colors));
        Value::Object(out)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        if let Some(kind) = value.get("kind").and_then(Value::as_str) {
            if kind != T::KIND {
                return Err(Error::Parse(format!("expected a {} morphism, found {kind:?}", T::KIND)));
            }
        }
        let tree = |key: &str| -> Result<Tree> {
            let v = value.get(key).ok_or_else(|| Error::Parse(format!("missing {key:?}")))?;
            Ok(Tree::from_shape(Shape::from_json(v)?))
        };
        let (s_given, t_given) = (tree("source")?, tree("target")?);
        let (source, s_colors) = T::present(&s_given);
        let (target, t_colors) = T::present(&t_given);
        let given_s = Given::new::<T>(&s_given);
        let given_t = Given::new::<T>(&t_given);
        let table = value
            .get(colors_key::<T>())
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Parse(format!("missing {:?} object", colors_key::<T>())))?;
        let mut map = vec![None; source.num_colors()];
        for (k, v) in table {
            let c = given_s.parse_color(k)?;
            let d = given_t.parse_color(v.as_str().ok_or_else(|| Error::Parse(format!("{v} is not a string")))?)?;
            map[s_colors[c]] = Some(t_colors[d]);
        }
        let map = map
            .into_iter()
            .enumerate()
            .map(|(c, d)| d.ok_or_else(|| Error::Parse(format!("colour {} has no image", source.color_name(c)))))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(source, target, map)
    }
}

/// Colour naming of a possibly non-canonical presentation.
struct Given {
    tree: Tree,
    arrows: bool,
}

impl Given {
    fn new<T: TreeObject>(t: &Tree) -> Self {
        Given { tree: t.clone(), arrows: colors_key::<T>() == "arrows" }
    }

    fn parse_color(&self, s: &str) -> Result<usize> {
        if self.arrows {
            super::cyclic::parse_arrow(&self.tree, s)
        } else {
            super::parse_edge(&self.tree, s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::hom;
    use crate::trees::{CycTree, SymTree};

    #[test]
    fn plane_morphisms_round_trip() {
        let s = Tree::parse("((ee)e)").unwrap();
        let t = Tree::parse("(e(ee)e)").unwrap();
        for m in hom(&s, &t) {
            let v = m.to_json();
            assert_eq!(Morphism::<Tree>::from_json(&v).unwrap(), m);
        }
    }

    #[test]
    fn example_file_format() {
        let v: Value = serde_json::from_str(
            r#"{"source": {"v":["e","e"]}, "target": {"v":["e","e"]}, "edges": {"": "", "0": "0", "1": "1"}}"#,
        )
        .unwrap();
        let m = Morphism::<Tree>::from_json(&v).unwrap();
        assert!(m.is_identity());
        let bad: Value = serde_json::from_str(
            r#"{"source": {"v":["e","e"]}, "target": {"v":["e","e"]}, "edges": {"": "", "0": "1", "1": "1"}}"#,
        )
        .unwrap();
        assert!(Morphism::<Tree>::from_json(&bad).is_err());
    }

    #[test]
    fn non_plane_flavours_round_trip() {
        let s = Tree::parse("((e)e)").unwrap();
        let t = Tree::parse("(e(ee))").unwrap();
        for m in hom(&SymTree::from_tree(&s), &SymTree::from_tree(&t)) {
            assert_eq!(Morphism::<SymTree>::from_json(&m.to_json()).unwrap(), m);
        }
        for m in hom(&CycTree::from_tree(&s), &CycTree::from_tree(&t)) {
            assert_eq!(Morphism::<CycTree>::from_json(&m.to_json()).unwrap(), m);
        }
    }
}
