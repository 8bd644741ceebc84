//! Truncated simplicial sets `X_0, ..., X_N` with their action of Δ.
//!
//! The data are faces and degeneracies; the action of every other map is
//! computed through its epi–mono factorisation and tabulated once.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::category::LawReport;
use crate::error::{Error, Result};
use crate::targets::DeltaMap;

/// `X(f)` for `f: [m] → [n]` is a table `X_n → X_m`.
type Table = Vec<usize>;

#[derive(Clone)]
pub struct TruncatedSimplicialSet {
    trunc: usize,
    labels: Vec<Vec<String>>,
    index: Vec<HashMap<String, usize>>,
    /// `faces[n][i] = d_i: X_n → X_{n-1}`; empty for `n = 0`.
    faces: Vec<Vec<Table>>,
    /// `degeneracies[n][i] = s_i: X_n → X_{n+1}`; empty for `n = N`.
    degeneracies: Vec<Vec<Table>>,
    tables: HashMap<DeltaMap, Table>,
}

fn missing_value(f: &DeltaMap) -> usize {
    (0..=f.n_dst).find(|v| !f.values.contains(v)).expect("a face misses one value")
}

fn repeated_value(f: &DeltaMap) -> usize {
    f.values.windows(2).find(|w| w[0] == w[1]).expect("a degeneracy repeats one value")[0]
}

impl TruncatedSimplicialSet {
    pub fn from_generators(
        labels: Vec<Vec<String>>,
        faces: Vec<Vec<Table>>,
        degeneracies: Vec<Vec<Table>>,
    ) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidPresheaf("no levels".into()));
        }
        let trunc = labels.len() - 1;
        let size = |n: usize| labels[n].len();
        for n in 0..=trunc {
            let expect_faces = if n == 0 { 0 } else { n + 1 };
            let expect_degs = if n == trunc { 0 } else { n + 1 };
            if faces.get(n).map_or(0, Vec::len) != expect_faces || degeneracies.get(n).map_or(0, Vec::len) != expect_degs {
                return Err(Error::InvalidPresheaf(format!("wrong number of generators at level {n}")));
            }
            for d in &faces[n] {
                if d.len() != size(n) || d.iter().any(|&x| x >= size(n - 1)) {
                    return Err(Error::InvalidPresheaf(format!("face out of range at level {n}")));
                }
            }
            for s in &degeneracies[n] {
                if s.len() != size(n) || s.iter().any(|&x| x >= size(n + 1)) {
                    return Err(Error::InvalidPresheaf(format!("degeneracy out of range at level {n}")));
                }
            }
        }
        let index = labels
            .iter()
            .map(|level| level.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect::<HashMap<_, _>>())
            .collect::<Vec<_>>();
        if index.iter().zip(&labels).any(|(ix, l)| ix.len() != l.len()) {
            return Err(Error::InvalidPresheaf("repeated label".into()));
        }
        let mut x = TruncatedSimplicialSet { trunc, labels, index, faces, degeneracies, tables: HashMap::new() };
        for m in 0..=trunc {
            for n in 0..=trunc {
                for f in DeltaMap::all(m, n) {
                    let table = (0..x.size(n)).map(|e| x.act_by_generators(&f, e)).collect();
                    x.tables.insert(f, table);
                }
            }
        }
        Ok(x)
    }

    /// Generators read off from an action given on all maps.
    pub fn from_action(labels: Vec<Vec<String>>, act: impl Fn(&DeltaMap, usize) -> usize) -> Result<Self> {
        let trunc = labels.len().checked_sub(1).ok_or_else(|| Error::InvalidPresheaf("no levels".into()))?;
        let size = |n: usize| labels[n].len();
        let faces = (0..=trunc)
            .map(|n| {
                if n == 0 {
                    Vec::new()
                } else {
                    (0..=n).map(|i| (0..size(n)).map(|x| act(&DeltaMap::face(n, i), x)).collect()).collect()
                }
            })
            .collect();
        let degeneracies = (0..=trunc)
            .map(|n| {
                if n == trunc {
                    Vec::new()
                } else {
                    (0..=n).map(|i| (0..size(n)).map(|x| act(&DeltaMap::degeneracy(n, i), x)).collect()).collect()
                }
            })
            .collect();
        Self::from_generators(labels, faces, degeneracies)
    }

    /// One point in every degree.
    pub fn point(trunc: usize) -> Self {
        Self::from_action(vec![vec!["*".to_string()]; trunc + 1], |_, _| 0).expect("the point is a simplicial set")
    }

    /// The ordered simplicial complex on `0..vertices` with the given faces:
    /// `X_n` holds the weakly increasing `(v_0, ..., v_n)` whose vertex set
    /// lies in one of `facets`.
    pub fn from_complex(vertices: usize, facets: &[Vec<usize>], trunc: usize) -> Result<Self> {
        if facets.iter().flatten().any(|&v| v >= vertices) {
            return Err(Error::InvalidPresheaf("facet vertex out of range".into()));
        }
        let levels: Vec<Vec<Vec<usize>>> = (0..=trunc)
            .map(|n| {
                (0..vertices)
                    .combinations_with_replacement(n + 1)
                    .filter(|s| facets.iter().any(|f| s.iter().all(|v| f.contains(v))))
                    .collect()
            })
            .collect();
        let index: Vec<HashMap<Vec<usize>, usize>> =
            levels.iter().map(|l| l.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()).collect();
        let labels = levels.iter().map(|l| l.iter().map(|s| s.iter().join("")).collect()).collect();
        Self::from_action(labels, |f, x| index[f.n_src][&f.values.iter().map(|&i| levels[f.n_dst][x][i]).collect::<Vec<_>>()])
    }

    /// A copy with a second `k`-simplex glued in along the boundary of
    /// `sigma`, together with its degeneracies.
    pub fn with_doubled_simplex(&self, k: usize, sigma: usize) -> Result<Self> {
        if k > self.trunc || sigma >= self.size(k) {
            return Err(Error::OutOfBounds(format!("no {k}-simplex {sigma}")));
        }
        let base = format!("{}'", self.labels[k][sigma]);
        // the new n-simplices are indexed by the surjections [n] → [k]
        let copies: Vec<Vec<DeltaMap>> =
            (0..=self.trunc).map(|n| if n < k { Vec::new() } else { DeltaMap::all(n, k).into_iter().filter(DeltaMap::is_surjective).collect() }).collect();
        let labels = (0..=self.trunc)
            .map(|n| {
                let mut level = self.labels[n].clone();
                level.extend(copies[n].iter().map(|g| if n == k { base.clone() } else { format!("{base}{g}") }));
                level
            })
            .collect();
        Self::from_action(labels, |f, x| {
            if x < self.size(f.n_dst) {
                return self.tables[f][x];
            }
            let g = &copies[f.n_dst][x - self.size(f.n_dst)];
            let h = DeltaMap::compose(g, f).expect("composable");
            if h.is_surjective() {
                self.size(f.n_src) + copies[f.n_src].iter().position(|c| *c == h).expect("listed")
            } else {
                self.tables[&h][sigma]
            }
        })
    }

    fn act_by_generators(&self, f: &DeltaMap, x: usize) -> usize {
        let (degeneracies, faces) = f.epi_mono();
        let mut x = x;
        for d in faces.iter().rev() {
            x = self.faces[d.n_dst][missing_value(d)][x];
        }
        for s in degeneracies.iter().rev() {
            x = self.degeneracies[s.n_dst][repeated_value(s)][x];
        }
        x
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn size(&self, n: usize) -> usize {
        self.labels[n].len()
    }

    pub fn labels(&self, n: usize) -> &[String] {
        &self.labels[n]
    }

    pub fn label(&self, n: usize, x: usize) -> &str {
        &self.labels[n][x]
    }

    pub fn find(&self, n: usize, label: &str) -> Option<usize> {
        self.index.get(n)?.get(label).copied()
    }

    /// `X(f): X_n → X_m`.
    pub fn table(&self, f: &DeltaMap) -> Result<&[usize]> {
        self.tables
            .get(f)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::OutOfBounds(format!("{f:?} beyond truncation {}", self.trunc)))
    }

    pub fn act(&self, f: &DeltaMap, x: usize) -> Result<usize> {
        Ok(self.table(f)?[x])
    }

    pub fn face(&self, n: usize, i: usize) -> &[usize] {
        &self.faces[n][i]
    }

    pub fn degeneracy(&self, n: usize, i: usize) -> &[usize] {
        &self.degeneracies[n][i]
    }

    /// A copy with one face table replaced.
    pub fn with_face(&self, n: usize, i: usize, table: Table) -> Result<Self> {
        let mut faces = self.faces.clone();
        faces[n][i] = table;
        Self::from_generators(self.labels.clone(), faces, self.degeneracies.clone())
    }

    /// Functoriality on every composable pair of maps within the truncation;
    /// this includes every simplicial identity.
    pub fn check_functoriality(&self) -> LawReport {
        let mut report = LawReport::default();
        let n = self.trunc;
        for a in 0..=n {
            for b in 0..=n {
                for f in DeltaMap::all(a, b) {
                    for c in 0..=n {
                        for g in DeltaMap::all(b, c) {
                            report.checks += 1;
                            let gf = DeltaMap::compose(&g, &f).expect("composable");
                            let (tf, tg, tgf) = (&self.tables[&f], &self.tables[&g], &self.tables[&gf]);
                            if let Some(x) = (0..self.size(c)).find(|&x| tgf[x] != tf[tg[x]]) {
                                report.fail(format!(
                                    "X({g:?} ∘ {f:?}) ≠ X({f:?}) X({g:?}) at {}",
                                    self.labels[c][x]
                                ));
                            }
                        }
                    }
                }
            }
        }
        report
    }

    pub fn to_json(&self) -> serde_json::Value {
        let name = |n: usize, table: &Table| table.iter().map(|&x| self.labels[n][x].clone()).collect::<Vec<_>>();
        let mut faces = Vec::new();
        let mut degeneracies = Vec::new();
        for n in 0..=self.trunc {
            for (i, d) in self.faces[n].iter().enumerate() {
                faces.push(GeneratorJson { n, i, values: name(n - 1, d) });
            }
            for (i, s) in self.degeneracies[n].iter().enumerate() {
                degeneracies.push(GeneratorJson { n, i, values: name(n + 1, s) });
            }
        }
        serde_json::to_value(SimplicialJson { trunc: self.trunc, levels: self.labels.clone(), faces, degeneracies })
            .expect("plain data")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: SimplicialJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(format!("simplicial set: {e}")))?;
        if raw.levels.len() != raw.trunc + 1 {
            return Err(Error::InvalidPresheaf(format!("{} levels for truncation {}", raw.levels.len(), raw.trunc)));
        }
        let lookup = |n: usize, label: &str| -> Result<usize> {
            raw.levels
                .get(n)
                .and_then(|l| l.iter().position(|x| x == label))
                .ok_or_else(|| Error::Parse(format!("unknown {n}-simplex {label:?}")))
        };
        let n = raw.trunc;
        let mut faces: Vec<Vec<Table>> = (0..=n).map(|k| vec![Vec::new(); if k == 0 { 0 } else { k + 1 }]).collect();
        let mut degeneracies: Vec<Vec<Table>> = (0..=n).map(|k| vec![Vec::new(); if k == n { 0 } else { k + 1 }]).collect();
        for g in &raw.faces {
            let slot = faces
                .get_mut(g.n)
                .and_then(|l| l.get_mut(g.i))
                .ok_or_else(|| Error::InvalidPresheaf(format!("no face d_{} on level {}", g.i, g.n)))?;
            *slot = g.values.iter().map(|l| lookup(g.n - 1, l)).collect::<Result<_>>()?;
        }
        for g in &raw.degeneracies {
            let slot = degeneracies
                .get_mut(g.n)
                .and_then(|l| l.get_mut(g.i))
                .ok_or_else(|| Error::InvalidPresheaf(format!("no degeneracy s_{} on level {}", g.i, g.n)))?;
            *slot = g.values.iter().map(|l| lookup(g.n + 1, l)).collect::<Result<_>>()?;
        }
        Self::from_generators(raw.levels, faces, degeneracies)
    }
}

impl fmt::Debug for TruncatedSimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes: Vec<usize> = (0..=self.trunc).map(|n| self.size(n)).collect();
        write!(f, "TruncatedSimplicialSet{sizes:?}")
    }
}

#[derive(Serialize, Deserialize)]
struct GeneratorJson {
    n: usize,
    i: usize,
    values: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct SimplicialJson {
    trunc: usize,
    levels: Vec<Vec<String>>,
    faces: Vec<GeneratorJson>,
    degeneracies: Vec<GeneratorJson>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_is_functorial() {
        let x = TruncatedSimplicialSet::point(3);
        assert!(x.check_functoriality().ok());
        assert_eq!(x.act(&DeltaMap::face(2, 1), 0).unwrap(), 0);
        assert!(x.act(&DeltaMap::identity(4), 0).is_err());
    }

    #[test]
    fn json_round_trip() {
        let x = TruncatedSimplicialSet::point(2);
        let y = TruncatedSimplicialSet::from_json(&x.to_json()).unwrap();
        assert_eq!(x.to_json(), y.to_json());
    }

    #[test]
    fn complexes_and_doubled_simplices() {
        let x = TruncatedSimplicialSet::from_complex(3, &[vec![0, 1, 2]], 3).unwrap();
        assert!(x.check_functoriality().ok());
        assert_eq!(x.size(1), 6);
        let y = x.with_doubled_simplex(2, x.find(2, "012").unwrap()).unwrap();
        assert!(y.check_functoriality().ok());
        assert_eq!(y.size(2), x.size(2) + 1);
        assert_eq!(y.size(3), x.size(3) + 3);
        let s = y.find(2, "012'").unwrap();
        assert_eq!(y.label(1, y.act(&DeltaMap::face(2, 1), s).unwrap()), "02");
    }
}
