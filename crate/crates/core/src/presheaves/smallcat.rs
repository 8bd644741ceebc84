//! Finite categories given by tables, and their nerves.

use std::collections::HashMap;

use itertools::Itertools;

use super::simplicial::TruncatedSimplicialSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct SmallCategory {
    pub objects: Vec<String>,
    /// `(name, source, target)`.
    pub morphisms: Vec<(String, usize, usize)>,
    pub identities: Vec<usize>,
    /// `compose[(g, f)] = g ∘ f` for every composable pair.
    pub compose: HashMap<(usize, usize), usize>,
}

impl SmallCategory {
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<(String, usize, usize)>,
        identities: Vec<usize>,
        compose: HashMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let c = SmallCategory { objects, morphisms, identities, compose };
        c.validate()?;
        Ok(c)
    }

    /// The poset `0 < 1 < ... < k-1`.
    pub fn linear_order(k: usize) -> Self {
        let objects = (0..k).map(|i| i.to_string()).collect();
        let morphisms: Vec<(String, usize, usize)> =
            (0..k).flat_map(|a| (a..k).map(move |b| (format!("{a}{b}"), a, b))).collect();
        let find = |a: usize, b: usize| morphisms.iter().position(|m| m.1 == a && m.2 == b).unwrap();
        let identities = (0..k).map(|a| find(a, a)).collect();
        let mut compose = HashMap::new();
        for (f, &(_, a, b)) in morphisms.iter().enumerate() {
            for (g, &(_, b2, c)) in morphisms.iter().enumerate() {
                if b == b2 {
                    compose.insert((g, f), find(a, c));
                }
            }
        }
        SmallCategory { objects, morphisms, identities, compose }
    }

    /// A group of order `k` as a one-object category.
    pub fn cyclic_group(k: usize) -> Self {
        let morphisms = (0..k).map(|i| (format!("g{i}"), 0, 0)).collect();
        let compose = (0..k).cartesian_product(0..k).map(|(g, f)| ((g, f), (g + f) % k)).collect();
        SmallCategory { objects: vec!["*".into()], morphisms, identities: vec![0], compose }
    }

    /// Objects only.
    pub fn discrete(k: usize) -> Self {
        let morphisms = (0..k).map(|a| (format!("id{a}"), a, a)).collect();
        let compose = (0..k).map(|a| ((a, a), a)).collect();
        SmallCategory { objects: (0..k).map(|a| a.to_string()).collect(), morphisms, identities: (0..k).collect(), compose }
    }

    pub fn source(&self, f: usize) -> usize {
        self.morphisms[f].1
    }

    pub fn target(&self, f: usize) -> usize {
        self.morphisms[f].2
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidPresheaf(format!("category: {msg}")));
        for (a, &id) in self.identities.iter().enumerate() {
            if self.morphisms.get(id).map(|m| (m.1, m.2)) != Some((a, a)) {
                return bad(format!("identity of {a}"));
            }
        }
        for f in 0..self.morphisms.len() {
            for g in 0..self.morphisms.len() {
                let composable = self.target(f) == self.source(g);
                match self.compose.get(&(g, f)) {
                    Some(&h) if composable => {
                        if (self.source(h), self.target(h)) != (self.source(f), self.target(g)) {
                            return bad(format!("{g} ∘ {f} has the wrong ends"));
                        }
                    }
                    None if !composable => {}
                    _ => return bad(format!("composition table at ({g}, {f})")),
                }
            }
            if self.compose[&(self.identities[self.target(f)], f)] != f
                || self.compose[&(f, self.identities[self.source(f)])] != f
            {
                return bad(format!("unit law at {f}"));
            }
        }
        for (&(g, f), &gf) in &self.compose {
            for h in 0..self.morphisms.len() {
                if self.source(h) == self.target(g) && self.compose[&(h, gf)] != self.compose[&(self.compose[&(h, g)], f)] {
                    return bad(format!("associativity at ({h}, {g}, {f})"));
                }
            }
        }
        Ok(())
    }
}

/// Strings of `n` composable morphisms, with faces composing or dropping
/// and degeneracies inserting identities.
pub fn nerve_of_category(c: &SmallCategory, trunc: usize) -> TruncatedSimplicialSet {
    let mut levels: Vec<Vec<Vec<usize>>> = vec![(0..c.objects.len()).map(|a| vec![a]).collect()];
    for n in 1..=trunc {
        let chains = if n == 1 {
            (0..c.morphisms.len()).map(|f| vec![f]).collect()
        } else {
            levels[n - 1]
                .iter()
                .flat_map(|chain| {
                    let last = *chain.last().unwrap();
                    (0..c.morphisms.len()).filter(move |&f| c.source(f) == c.target(last)).map(move |f| {
                        let mut next = chain.clone();
                        next.push(f);
                        next
                    })
                })
                .collect()
        };
        levels.push(chains);
    }
    let index: Vec<HashMap<Vec<usize>, usize>> =
        levels.iter().map(|l| l.iter().enumerate().map(|(i, ch)| (ch.clone(), i)).collect()).collect();
    let labels = levels
        .iter()
        .enumerate()
        .map(|(n, l)| {
            l.iter()
                .map(|ch| if n == 0 { c.objects[ch[0]].clone() } else { ch.iter().map(|&f| &c.morphisms[f].0).join(",") })
                .collect()
        })
        .collect();
    TruncatedSimplicialSet::from_action(labels, |f, x| {
        let (m, n) = (f.n_src, f.n_dst);
        let chain = &levels[n][x];
        // objects x_0, ..., x_n of the chain
        let objects: Vec<usize> = if n == 0 {
            vec![chain[0]]
        } else {
            std::iter::once(c.source(chain[0])).chain(chain.iter().map(|&g| c.target(g))).collect()
        };
        let image = if m == 0 {
            vec![objects[f.values[0]]]
        } else {
            (1..=m)
                .map(|k| {
                    (f.values[k - 1]..f.values[k])
                        .fold(c.identities[objects[f.values[k - 1]]], |acc, i| c.compose[&(chain[i], acc)])
                })
                .collect()
        };
        index[m][&image]
    })
    .expect("nerves are simplicial sets")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::targets::DeltaMap;

    #[test]
    fn fixtures_are_categories() {
        for c in [SmallCategory::linear_order(3), SmallCategory::cyclic_group(3), SmallCategory::discrete(2)] {
            c.validate().unwrap();
        }
    }

    #[test]
    fn nerve_sizes() {
        let x = nerve_of_category(&SmallCategory::linear_order(2), 3);
        assert_eq!(x.size(1), 3);
        assert_eq!(x.size(2), 4);
        assert!(x.check_functoriality().ok());
        let point = nerve_of_category(&SmallCategory::discrete(1), 2);
        assert_eq!((0..=2).map(|n| point.size(n)).collect::<Vec<_>>(), vec![1, 1, 1]);
    }

    #[test]
    fn inner_face_composes() {
        let x = nerve_of_category(&SmallCategory::linear_order(3), 2);
        let s = x.find(2, "01,12").unwrap();
        let d1 = x.act(&DeltaMap::face(2, 1), s).unwrap();
        assert_eq!(x.label(1, d1), "02");
        assert_eq!(x.label(1, x.act(&DeltaMap::face(2, 0), s).unwrap()), "12");
    }

    #[test]
    fn broken_tables_are_rejected() {
        let mut c = SmallCategory::cyclic_group(3);
        c.compose.insert((1, 1), 0);
        assert!(c.validate().is_err());
    }
}
