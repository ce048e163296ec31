//! Finite abstract simplicial complexes stored by their maximal faces.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Vertices are `0..labels.len()`; `facets` are the maximal faces, each a
/// sorted vertex list, kept in sorted order so equal complexes compare
/// equal. A vertex in no listed face is its own facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn new(labels: Vec<String>, faces: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        for mut f in faces {
            f.sort_unstable();
            f.dedup();
            if let Some(&v) = f.iter().find(|&&v| v >= n) {
                return Err(Error::IndexOutOfRange { index: v, max: n });
            }
            if !f.is_empty() {
                all.insert(f);
            }
        }
        let mut seen = vec![false; n];
        for f in &all {
            for &v in f {
                seen[v] = true;
            }
        }
        for (v, _) in seen.iter().enumerate().filter(|(_, s)| !**s) {
            all.insert(vec![v]);
        }
        // longest first, so every superset is kept before its subsets
        let mut by_size: Vec<Vec<usize>> = all.into_iter().collect();
        by_size.sort_by_key(|f| std::cmp::Reverse(f.len()));
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for f in by_size {
            if !facets.iter().any(|g| is_subset(&f, g)) {
                facets.push(f);
            }
        }
        facets.sort();
        Ok(SimplicialComplex { labels, facets })
    }

    /// Faces given by label.
    pub fn from_labelled(labels: Vec<String>, faces: &[Vec<String>]) -> Result<Self> {
        let index: HashMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        if index.len() != labels.len() {
            return Err(Error::Parse("duplicate vertex label".into()));
        }
        let mut idx_faces = Vec::new();
        for f in faces {
            let mut g = Vec::new();
            for l in f {
                g.push(
                    *index
                        .get(l.as_str())
                        .ok_or_else(|| Error::Parse(format!("unknown vertex {l:?}")))?,
                );
            }
            idx_faces.push(g);
        }
        SimplicialComplex::new(labels, idx_faces)
    }

    /// The complex with no vertices.
    pub fn empty() -> Self {
        SimplicialComplex {
            labels: Vec::new(),
            facets: Vec::new(),
        }
    }

    /// The full simplex on the given vertices.
    pub fn simplex(labels: Vec<String>) -> Self {
        let all = (0..labels.len()).collect();
        SimplicialComplex::new(labels, [all]).expect("valid simplex")
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// `-1` for the empty complex.
    pub fn dim(&self) -> i64 {
        self.facets
            .iter()
            .map(|f| f.len() as i64 - 1)
            .max()
            .unwrap_or(-1)
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        f.dedup();
        f.is_empty() || self.facets.iter().any(|g| is_subset(&f, g))
    }

    /// All faces of dimension `k`, sorted.
    pub fn faces(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            if f.len() > k {
                for_each_subset(f, k + 1, &mut |s| {
                    out.insert(s.to_vec());
                });
            }
        }
        out.into_iter().collect()
    }

    /// Face counts `f_0, f_1, …`.
    pub fn face_counts(&self) -> Vec<usize> {
        if self.is_empty() {
            return Vec::new();
        }
        (0..=self.dim() as usize)
            .map(|k| self.faces(k).len())
            .collect()
    }

    /// Unreduced Euler characteristic.
    pub fn euler_characteristic(&self) -> i64 {
        self.face_counts()
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// The full subcomplex on `vertices` (indices into this complex).
    pub fn induced(&self, vertices: &[usize]) -> SimplicialComplex {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let faces = self.facets.iter().map(|f| {
            f.iter()
                .filter_map(|v| pos.get(v).copied())
                .collect::<Vec<_>>()
        });
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        SimplicialComplex::new(labels, faces).expect("indices in range")
    }

    /// `{τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}`, on the vertices that occur in it.
    pub fn link(&self, sigma: &[usize]) -> Result<SimplicialComplex> {
        if !self.contains_face(sigma) {
            return Err(Error::NotAFace);
        }
        let s: BTreeSet<usize> = sigma.iter().copied().collect();
        let faces: Vec<Vec<usize>> = self
            .facets
            .iter()
            .filter(|f| s.iter().all(|v| f.binary_search(v).is_ok()))
            .map(|f| {
                f.iter()
                    .copied()
                    .filter(|v| !s.contains(v))
                    .collect::<Vec<_>>()
            })
            .filter(|f| !f.is_empty())
            .collect();
        let used: BTreeSet<usize> = faces.iter().flatten().copied().collect();
        let used: Vec<usize> = used.into_iter().collect();
        let pos: HashMap<usize, usize> = used.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let labels = used.iter().map(|&v| self.labels[v].clone()).collect();
        SimplicialComplex::new(
            labels,
            faces
                .into_iter()
                .map(|f| f.iter().map(|v| pos[v]).collect()),
        )
    }

    /// Adjacency of the 1-skeleton.
    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let n = self.vertex_count();
        let mut adj = vec![vec![false; n]; n];
        for f in &self.facets {
            for (i, &a) in f.iter().enumerate() {
                for &b in &f[i + 1..] {
                    adj[a][b] = true;
                    adj[b][a] = true;
                }
            }
        }
        adj
    }

    fn neighbours(&self) -> Vec<Vec<usize>> {
        self.adjacency()
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &e)| e)
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect()
    }

    /// BFS distances from `u` in the 1-skeleton (`None` = unreachable).
    pub fn distances_from(&self, u: usize) -> Vec<Option<usize>> {
        self.bfs(u, &self.neighbours())
    }

    fn bfs(&self, u: usize, nbrs: &[Vec<usize>]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[u] = Some(0);
        let mut queue = VecDeque::from([u]);
        while let Some(a) = queue.pop_front() {
            let d = dist[a].expect("queued vertices have distances");
            for &b in &nbrs[a] {
                if dist[b].is_none() {
                    dist[b] = Some(d + 1);
                    queue.push_back(b);
                }
            }
        }
        dist
    }

    /// Edge-path distance in the 1-skeleton; `None` when disconnected.
    pub fn graph_distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        let n = self.vertex_count();
        for x in [u, v] {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, max: n });
            }
        }
        Ok(self.distances_from(u)[v])
    }

    /// Largest distance between the ends of the given pairs (`None` if one
    /// pair is disconnected).
    pub fn qi_constant(&self, pairs: &[(usize, usize)]) -> Result<Option<usize>> {
        let nbrs = self.neighbours();
        let mut worst = 0;
        let mut cache: HashMap<usize, Vec<Option<usize>>> = HashMap::new();
        for &(u, v) in pairs {
            if u >= self.vertex_count() || v >= self.vertex_count() {
                return Err(Error::IndexOutOfRange {
                    index: u.max(v),
                    max: self.vertex_count(),
                });
            }
            let d = cache.entry(u).or_insert_with(|| self.bfs(u, &nbrs))[v];
            match d {
                Some(d) => worst = worst.max(d),
                None => return Ok(None),
            }
        }
        Ok(Some(worst))
    }

    pub fn component_count(&self) -> usize {
        let nbrs = self.neighbours();
        let mut seen = vec![false; self.vertex_count()];
        let mut count = 0;
        for v in 0..self.vertex_count() {
            if !seen[v] {
                count += 1;
                for (w, d) in self.bfs(v, &nbrs).into_iter().enumerate() {
                    if d.is_some() {
                        seen[w] = true;
                    }
                }
            }
        }
        count
    }

    /// Nonempty and path-connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Every clique of the 1-skeleton spans a face.
    pub fn is_flag(&self) -> bool {
        maximal_cliques(&self.adjacency())
            .iter()
            .all(|c| self.facets.iter().any(|f| is_subset(c, f)))
    }

    /// Same faces, comparing vertices by label.
    pub fn same_as(&self, other: &SimplicialComplex) -> bool {
        let key = |k: &SimplicialComplex| -> BTreeSet<BTreeSet<String>> {
            k.facets
                .iter()
                .map(|f| f.iter().map(|&v| k.labels[v].clone()).collect())
                .collect()
        };
        self.vertex_count() == other.vertex_count() && key(self) == key(other)
    }

    /// Brute-force isomorphism test, meant for complexes with a handful of
    /// vertices.
    pub fn is_isomorphic(&self, other: &SimplicialComplex) -> bool {
        let n = self.vertex_count();
        if n != other.vertex_count() || self.face_counts() != other.face_counts() {
            return false;
        }
        let degree = |k: &SimplicialComplex| -> Vec<usize> {
            k.adjacency()
                .iter()
                .map(|r| r.iter().filter(|&&e| e).count())
                .collect()
        };
        let (da, db) = (degree(self), degree(other));
        let target: BTreeSet<Vec<usize>> = other.facets.iter().cloned().collect();
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn extend(
            v: usize,
            a: &SimplicialComplex,
            target: &BTreeSet<Vec<usize>>,
            da: &[usize],
            db: &[usize],
            image: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            let n = image.len();
            if v == n {
                let mapped: BTreeSet<Vec<usize>> = a
                    .facets
                    .iter()
                    .map(|f| {
                        let mut g: Vec<usize> = f.iter().map(|&x| image[x]).collect();
                        g.sort_unstable();
                        g
                    })
                    .collect();
                return &mapped == target;
            }
            for w in 0..n {
                if !used[w] && da[v] == db[w] {
                    used[w] = true;
                    image[v] = w;
                    if extend(v + 1, a, target, da, db, image, used) {
                        return true;
                    }
                    used[w] = false;
                }
            }
            false
        }
        extend(0, self, &target, &da, &db, &mut image, &mut used)
    }

    /// Graphviz rendering of the 1-skeleton.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph K {\n");
        for l in &self.labels {
            let _ = writeln!(s, "  \"{l}\";");
        }
        for (a, row) in self.adjacency().iter().enumerate() {
            for (b, _) in row.iter().enumerate().skip(a + 1).filter(|(_, &e)| e) {
                let _ = writeln!(s, "  \"{}\" -- \"{}\";", self.labels[a], self.labels[b]);
            }
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Serialize, Deserialize)]
struct RawComplex {
    vertices: Vec<String>,
    maximal_faces: Vec<Vec<String>>,
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawComplex {
            vertices: self.labels.clone(),
            maximal_faces: self
                .facets
                .iter()
                .map(|f| f.iter().map(|&v| self.labels[v].clone()).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawComplex::deserialize(d)?;
        SimplicialComplex::from_labelled(raw.vertices, &raw.maximal_faces)
            .map_err(serde::de::Error::custom)
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}

fn for_each_subset(set: &[usize], k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(
        set: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..set.len() {
            if set.len() - i < k - cur.len() {
                break;
            }
            cur.push(set[i]);
            go(set, k, i + 1, cur, f);
            cur.pop();
        }
    }
    go(set, k, 0, &mut Vec::with_capacity(k), f);
}

/// Maximal cliques of a graph given by a symmetric adjacency matrix
/// (Bron–Kerbosch with pivoting). Each clique is sorted.
pub fn maximal_cliques(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    fn bk(
        adj: &[Vec<bool>],
        r: &mut Vec<usize>,
        p: Vec<usize>,
        x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| adj[u][v]).count())
            .expect("p or x is nonempty");
        let mut p = p;
        let mut x = x;
        let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
        for v in candidates {
            r.push(v);
            let np = p.iter().copied().filter(|&w| adj[v][w]).collect();
            let nx = x.iter().copied().filter(|&w| adj[v][w]).collect();
            bk(adj, r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let n = adj.len();
    let mut out = Vec::new();
    if n > 0 {
        bk(adj, &mut Vec::new(), (0..n).collect(), Vec::new(), &mut out);
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::graph::{matching_complex, Graph};

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("v{i}")).collect()
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::new(labels(3), [vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    #[test]
    fn normalises_facets() {
        let k = SimplicialComplex::new(labels(4), [vec![1, 0], vec![0, 1, 2], vec![2]]).unwrap();
        assert_eq!(k.facets(), &[vec![0, 1, 2], vec![3]]);
        assert_eq!(k.dim(), 2);
        assert_eq!(k.face_counts(), vec![4, 3, 1]);
        assert_eq!(SimplicialComplex::empty().dim(), -1);
    }

    #[test]
    fn flag_examples() {
        assert!(!hollow_triangle().is_flag());
        assert!(SimplicialComplex::simplex(labels(5)).is_flag());
        assert!(matching_complex(&Graph::complete(5)).is_flag());
    }

    #[test]
    fn link_examples() {
        let k = matching_complex(&Graph::path(5));
        let e1 = k.index_of("1-2").unwrap();
        let l = k.link(&[e1]).unwrap();
        let expected = SimplicialComplex::from_labelled(
            vec!["3-4".into(), "4-5".into(), "5-6".into()],
            &[vec!["3-4".into(), "5-6".into()], vec!["4-5".into()]],
        )
        .unwrap();
        assert!(l.same_as(&expected));
        let s = SimplicialComplex::simplex(labels(3));
        assert!(s.link(&[0, 1, 2]).unwrap().is_empty());
        assert_eq!(k.link(&[]).unwrap(), k);
        assert_eq!(hollow_triangle().link(&[0, 1, 2]), Err(Error::NotAFace));
    }

    #[test]
    fn distance_examples() {
        let k5 = matching_complex(&Graph::complete(5));
        let (a, b) = (k5.index_of("1-2").unwrap(), k5.index_of("1-3").unwrap());
        assert_eq!(k5.graph_distance(a, b).unwrap(), Some(2));
        assert_eq!(k5.graph_distance(a, a).unwrap(), Some(0));
        let k4 = matching_complex(&Graph::complete(4));
        let (a, b) = (k4.index_of("1-2").unwrap(), k4.index_of("1-3").unwrap());
        assert_eq!(k4.graph_distance(a, b).unwrap(), None);
    }

    #[test]
    fn isomorphism() {
        let a = matching_complex(&Graph::path(4));
        let relabelled =
            SimplicialComplex::new(labels(4), [vec![3, 1], vec![3, 0], vec![2, 0]]).unwrap();
        assert!(a.is_isomorphic(&relabelled));
        assert!(!a.is_isomorphic(&hollow_triangle()));
    }

    #[test]
    fn json_and_dot() {
        let k = hollow_triangle();
        let s = serde_json::to_string(&k).unwrap();
        assert!(s.starts_with(r#"{"vertices":["v0","v1","v2"],"maximal_faces":"#));
        assert_eq!(serde_json::from_str::<SimplicialComplex>(&s).unwrap(), k);
        assert!(k.to_dot().contains("\"v0\" -- \"v1\""));
    }
}
