//! Finite pieces of the Stein–Farley cube complex.
//!
//! A 0-cube is a coset `[T, p, F]_PB`: a diagram with a single tree on top
//! and a forest `F` of `h` roots at the bottom, up to right multiplication
//! by pure braids on `h` strands. Splitting feet (`x·[D, 1, 1]`, `D`
//! elementary) raises `h`; merging (`x·[1, q, E]`, `E` elementary) lowers it.
//! Cubes at `x` come from a set of merges sharing one braid `q` and a set of
//! splits, all with disjoint supports.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use super::simplicial::SimplicialComplex;
use crate::braid::BraidWord;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::forest::{Address, Forest, Tree};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubePatchVertex {
    diagram: Diagram,
}

impl CubePatchVertex {
    pub fn new(d: Diagram) -> Result<Self> {
        if d.neg().root_count() != 1 {
            return Err(Error::ShapeMismatch(
                "a 0-cube has a single tree on top".into(),
            ));
        }
        if !d.is_pure() {
            return Err(Error::NotPure);
        }
        Ok(CubePatchVertex {
            diagram: d.reduce(),
        })
    }

    /// `[ε, 1, 1₁]`.
    pub fn base() -> Self {
        CubePatchVertex {
            diagram: Diagram::identity(1),
        }
    }

    /// `[T, 1, 1_n]`.
    pub fn from_tree(t: Tree) -> Self {
        let n = t.leaf_count();
        CubePatchVertex::new(
            Diagram::new(t, BraidWord::identity(n), Forest::trivial(n)).expect("leaf counts agree"),
        )
        .expect("trivial braid is pure")
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn tree(&self) -> &Tree {
        self.diagram.neg_tree().expect("single tree on top")
    }

    pub fn forest(&self) -> &Forest {
        self.diagram.pos()
    }

    /// The Morse function: number of feet.
    pub fn height(&self) -> usize {
        self.forest().root_count()
    }

    fn times(&self, d: &Diagram) -> Result<CubePatchVertex> {
        CubePatchVertex::new(self.diagram.multiply(d)?)
    }

    /// `x·[D, 1, 1]`, splitting the listed feet.
    pub fn split(&self, feet: &[usize]) -> Result<CubePatchVertex> {
        let d = split_forest(self.height(), feet)?;
        self.apply_split(&d)
    }

    /// `x·[C, 1, 1]` for an elementary forest `C` on the feet of `x`.
    pub fn apply_split(&self, c: &Forest) -> Result<CubePatchVertex> {
        let n = c.leaf_count();
        self.times(&Diagram::new(
            c.clone(),
            BraidWord::identity(n),
            Forest::trivial(n),
        )?)
    }

    /// `x·[1, q, E]` where `E` merges feet `c, c+1` for each listed `c`.
    pub fn merge(&self, q: &BraidWord, carets: &[usize]) -> Result<CubePatchVertex> {
        self.times(&merge_diagram(self.height(), q, carets)?)
    }

    /// Membership in `X(n)`: after the forced expansions, the tree is
    /// `1ⁿ`-deferred and the first `n` feet are bare.
    pub fn in_x(&self, n: usize) -> bool {
        let w = Address::ones(n);
        let mut d = self.diagram.clone();
        loop {
            let t = d.neg_tree().expect("single tree on top");
            match t.leaves().iter().position(|a| a.is_proper_prefix_of(&w)) {
                Some(j) => d = d.expand_neg(j + 1).expect("leaf in range"),
                None => break,
            }
        }
        d.neg_tree().expect("single tree on top").is_deferred(&w) && d.pos().is_bare(n)
    }
}

impl fmt::Display for CubePatchVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_PB", self.diagram)
    }
}

fn check_feet(h: usize, feet: &[usize]) -> Result<Vec<usize>> {
    let mut fs = feet.to_vec();
    fs.sort_unstable();
    for w in fs.windows(2) {
        if w[0] == w[1] {
            return Err(Error::SupportOverlap(w[0]));
        }
    }
    if let Some(&d) = fs.iter().find(|&&d| d == 0 || d > h) {
        return Err(Error::IndexOutOfRange { index: d, max: h });
    }
    Ok(fs)
}

fn check_carets(h: usize, carets: &[usize]) -> Result<Vec<usize>> {
    let mut cs = carets.to_vec();
    cs.sort_unstable();
    if let Some(&c) = cs.iter().find(|&&c| c == 0 || c + 1 > h) {
        return Err(Error::IndexOutOfRange {
            index: c,
            max: h.saturating_sub(1),
        });
    }
    for w in cs.windows(2) {
        if w[1] < w[0] + 2 {
            return Err(Error::SupportOverlap(w[1]));
        }
    }
    Ok(cs)
}

/// The elementary forest on `h` roots splitting the listed feet.
pub fn split_forest(h: usize, feet: &[usize]) -> Result<Forest> {
    let fs = check_feet(h, feet)?;
    Forest::elementary(h, &fs)
}

/// The elementary forest with `h` leaves merging leaves `c, c+1` for each
/// listed `c`.
pub fn merge_forest(h: usize, carets: &[usize]) -> Result<Forest> {
    let cs = check_carets(h, carets)?;
    let roots: Vec<usize> = cs.iter().enumerate().map(|(i, &c)| c - i).collect();
    Forest::elementary(h - cs.len(), &roots)
}

fn merge_diagram(h: usize, q: &BraidWord, carets: &[usize]) -> Result<Diagram> {
    if q.strands() != h {
        return Err(Error::StrandMismatch {
            left: h,
            right: q.strands(),
        });
    }
    if !q.is_pure() {
        return Err(Error::NotPure);
    }
    Diagram::new(Forest::trivial(h), q.clone(), merge_forest(h, carets)?)
}

/// Do two diagrams with one root on top and the same number of feet define
/// the same coset? True iff `b⁻¹·a` reduces to `[1, r, 1]` with `r` pure.
pub fn coset_equal(a: &Diagram, b: &Diagram) -> bool {
    if a.neg().root_count() != b.neg().root_count() || a.pos().root_count() != b.pos().root_count()
    {
        return false;
    }
    match b.invert().multiply(a) {
        Ok(r) => r.neg().is_trivial() && r.pos().is_trivial() && r.is_pure(),
        Err(_) => false,
    }
}

pub fn vertex_equal(x: &CubePatchVertex, y: &CubePatchVertex) -> bool {
    x.height() == y.height() && coset_equal(&x.diagram, &y.diagram)
}

/// The ascending link: every set of feet can be split at once, so this is
/// the full simplex on the `h` single splits.
pub fn ascending_link(x: &CubePatchVertex) -> SimplicialComplex {
    let h = x.height();
    let labels = (1..=h).map(|d| format!("up{d}")).collect();
    let faces = (1u64..1 << h).filter_map(|mask| {
        let feet: Vec<usize> = (1..=h).filter(|d| mask >> (d - 1) & 1 == 1).collect();
        split_forest(h, &feet)
            .ok()
            .map(|_| feet.iter().map(|d| d - 1).collect())
    });
    SimplicialComplex::new(labels, faces).expect("indices in range")
}

/// Distinct freely reduced pure braid words on `m` strands with at most
/// `bound` letters, shortest first.
pub fn pure_braids_up_to(m: usize, bound: usize) -> Vec<BraidWord> {
    let mut out = Vec::new();
    let mut word = Vec::new();
    fn go(m: usize, bound: usize, word: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        out.push(word.clone());
        if word.len() == bound || m < 2 {
            return;
        }
        for i in 1..m as i32 {
            for l in [i, -i] {
                if word.last() == Some(&-l) {
                    continue;
                }
                word.push(l);
                go(m, bound, word, out);
                word.pop();
            }
        }
    }
    go(m, bound, &mut word, &mut out);
    let mut braids: Vec<BraidWord> = out
        .into_iter()
        .map(|w| BraidWord::new(m, w).expect("letters in range"))
        .filter(BraidWord::is_pure)
        .collect();
    braids.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.letters().cmp(b.letters()))
    });
    braids
}

/// A single merge direction: feet `caret, caret+1` merged after `braid`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Merge {
    pub braid: BraidWord,
    pub caret: usize,
}

impl fmt::Display for Merge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{}:{}", self.caret, self.braid)
    }
}

/// Winding data of `q` that survives multiplying by braids doubled along
/// the caret: equal keys are necessary for equal merge directions.
fn merge_key(q: &BraidWord, c: usize) -> (usize, Vec<i64>) {
    let w = |i: usize, j: usize| {
        q.winding_number(i.min(j), i.max(j))
            .expect("pure braid, valid strands")
    };
    let mut key = vec![w(c, c + 1)];
    for j in (1..=q.strands()).filter(|&j| j != c && j != c + 1) {
        key.push(w(c, j) - w(c + 1, j));
    }
    (c, key)
}

/// Get-or-insert table of merge directions of a fixed height, up to
/// equality of the resulting 0-cubes.
#[derive(Debug, Default)]
struct MergeInterner {
    buckets: HashMap<(usize, Vec<i64>), Vec<usize>>,
    reps: Vec<Merge>,
    diagrams: Vec<Diagram>,
}

impl MergeInterner {
    fn intern(&mut self, q: &BraidWord, c: usize) -> usize {
        let d = merge_diagram(q.strands(), q, &[c]).expect("valid merge");
        let bucket = self.buckets.entry(merge_key(q, c)).or_default();
        if let Some(&i) = bucket.iter().find(|&&i| coset_equal(&d, &self.diagrams[i])) {
            return i;
        }
        let i = self.reps.len();
        bucket.push(i);
        self.reps.push(Merge {
            braid: q.clone(),
            caret: c,
        });
        self.diagrams.push(d);
        i
    }
}

/// Sets of carets `c` (merging `c, c+1`) on `m` feet with disjoint
/// supports, including the empty set.
pub fn caret_matchings(m: usize) -> Vec<Vec<usize>> {
    fn go(c: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if c + 1 > m {
            out.push(cur.clone());
            return;
        }
        go(c + 1, m, cur, out);
        cur.push(c);
        go(c + 2, m, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    go(1, m, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The braid-bounded part of a descending link, with the matching each
/// vertex projects to.
#[derive(Debug, Clone, Serialize)]
pub struct DescendingLinkShadow {
    pub height: usize,
    pub braid_bound: usize,
    pub vertices: Vec<Merge>,
    /// The edge `{c, c+1}` of the linear graph under each vertex.
    pub projection: Vec<(usize, usize)>,
    pub complex: SimplicialComplex,
    /// For each maximal face, a braid realising it.
    #[serde(skip)]
    face_braids: BTreeMap<Vec<usize>, BraidWord>,
}

impl DescendingLinkShadow {
    /// A braid shared by all merges in `face`, if the face was seen.
    pub fn braid_for(&self, face: &[usize]) -> Option<&BraidWord> {
        let mut f = face.to_vec();
        f.sort_unstable();
        self.face_braids
            .iter()
            .find(|(g, _)| f.iter().all(|v| g.binary_search(v).is_ok()))
            .map(|(_, b)| b)
    }

    /// The complex relabelled by projection, as a set of matchings.
    pub fn projected(&self) -> SimplicialComplex {
        let mut edges: Vec<(usize, usize)> = self.projection.clone();
        edges.sort_unstable();
        edges.dedup();
        let labels = edges.iter().map(|&(a, b)| format!("{a}-{b}")).collect();
        let faces = self.complex.facets().iter().map(|f| {
            f.iter()
                .map(|&v| {
                    edges
                        .binary_search(&self.projection[v])
                        .expect("projected edge listed")
                })
                .collect()
        });
        SimplicialComplex::new(labels, faces).expect("indices in range")
    }
}

/// Merge simplices `[1, q, E]` with `q` pure of at most `bound` letters,
/// deduplicated by equality of their bottom 0-cubes. Depends only on the
/// height `m` of the vertex.
pub fn descending_link_shadow(m: usize, bound: usize) -> Result<DescendingLinkShadow> {
    if m < 2 {
        return Err(Error::Precondition(
            "the descending link is empty below height 2".into(),
        ));
    }
    let braids = pure_braids_up_to(m, bound);
    let matchings = caret_matchings(m);
    let mut interner = MergeInterner::default();
    let mut faces: BTreeMap<Vec<usize>, BraidWord> = BTreeMap::new();
    for q in &braids {
        for mt in &matchings {
            if mt.is_empty() {
                continue;
            }
            let mut face: Vec<usize> = mt.iter().map(|&c| interner.intern(q, c)).collect();
            face.sort_unstable();
            faces.entry(face).or_insert_with(|| q.clone());
        }
    }
    let labels = interner.reps.iter().map(|v| v.to_string()).collect();
    let complex = SimplicialComplex::new(labels, faces.keys().cloned())?;
    let maximal: BTreeSet<&Vec<usize>> = complex.facets().iter().collect();
    faces.retain(|f, _| maximal.contains(f));
    Ok(DescendingLinkShadow {
        height: m,
        braid_bound: bound,
        projection: interner
            .reps
            .iter()
            .map(|v| (v.caret, v.caret + 1))
            .collect(),
        vertices: interner.reps,
        complex,
        face_braids: faces,
    })
}

/// A cube with its corners, indexed by (merge subset, split subset) bitmasks.
#[derive(Debug, Clone, Serialize)]
pub struct Cube {
    pub dim: usize,
    pub bottom: CubePatchVertex,
    pub top: CubePatchVertex,
    /// `C` with `bottom·[C, 1, 1] = top`.
    pub corner_forest: Forest,
    pub braid: BraidWord,
    pub vertices: Vec<CubePatchVertex>,
    /// Whether `bottom·[C, 1, 1]_PB = top` was confirmed.
    pub identity_verified: bool,
}

/// The cube at `x` spanned by the given merges and splits.
pub fn cube_span(x: &CubePatchVertex, downs: &[Merge], ups: &[usize]) -> Result<Cube> {
    let h = x.height();
    let carets: Vec<usize> = downs.iter().map(|m| m.caret).collect();
    let cs = check_carets(h, &carets)?;
    let fs = check_feet(h, ups)?;
    if let Some(&d) = fs
        .iter()
        .find(|&&d| cs.iter().any(|&c| d == c || d == c + 1))
    {
        return Err(Error::SupportOverlap(d));
    }
    let q = common_braid(h, downs)?;
    let e = merge_forest(h, &cs)?;
    let d = split_forest(h, &fs)?;
    let c = e.elementary_compose(&d)?;
    let bottom = x.merge(&q, &cs)?;
    let top = x.split(&fs)?;
    let identity_verified = vertex_equal(&bottom.apply_split(&c)?, &top);
    let mut vertices = Vec::with_capacity(1 << (cs.len() + fs.len()));
    for down_mask in 0..1usize << cs.len() {
        let a: Vec<usize> = (0..cs.len())
            .filter(|i| down_mask >> i & 1 == 1)
            .map(|i| cs[i])
            .collect();
        let y = x.merge(&q, &a)?;
        for up_mask in 0..1usize << fs.len() {
            // feet of y: a foot d of x sits at d minus the merges before it
            let b: Vec<usize> = (0..fs.len())
                .filter(|i| up_mask >> i & 1 == 1)
                .map(|i| fs[i] - a.iter().filter(|&&c| c < fs[i]).count())
                .collect();
            vertices.push(y.split(&b)?);
        }
    }
    Ok(Cube {
        dim: cs.len() + fs.len(),
        bottom,
        top,
        corner_forest: c,
        braid: q,
        vertices,
        identity_verified,
    })
}

/// A braid `q` such that each merge equals the merge at its caret after `q`.
fn common_braid(h: usize, downs: &[Merge]) -> Result<BraidWord> {
    if downs.is_empty() {
        return Ok(BraidWord::identity(h));
    }
    let diagrams: Vec<Diagram> = downs
        .iter()
        .map(|m| merge_diagram(h, &m.braid, &[m.caret]))
        .collect::<Result<_>>()?;
    for cand in downs {
        let ok = downs.iter().zip(&diagrams).all(|(m, d)| {
            merge_diagram(h, &cand.braid, &[m.caret]).is_ok_and(|e| coset_equal(&e, d))
        });
        if ok {
            return Ok(cand.braid.clone());
        }
    }
    Err(Error::Precondition(
        "the merges share no common braid".into(),
    ))
}

/// The braid-bounded link of `x`: splits `up d` and the merge classes of
/// the descending shadow, with a face for every cube at `x`.
#[derive(Debug, Clone)]
pub struct VertexLink {
    pub complex: SimplicialComplex,
    pub height: usize,
    /// Vertex `i < height` is the split of foot `i + 1`; the rest are merges.
    pub merges: Vec<Merge>,
    face_braids: Vec<(Vec<usize>, BraidWord)>,
}

impl VertexLink {
    /// Merges and splits of a face, with a braid shared by its merges.
    pub fn directions(&self, face: &[usize]) -> Option<(Vec<Merge>, Vec<usize>)> {
        let h = self.height;
        let ups: Vec<usize> = face.iter().filter(|&&v| v < h).map(|v| v + 1).collect();
        let down_ids: Vec<usize> = face.iter().filter(|&&v| v >= h).copied().collect();
        if down_ids.is_empty() {
            return Some((Vec::new(), ups));
        }
        let (_, q) = self
            .face_braids
            .iter()
            .find(|(f, _)| down_ids.iter().all(|v| f.binary_search(v).is_ok()))?;
        let downs = down_ids
            .iter()
            .map(|&v| Merge {
                braid: q.clone(),
                caret: self.merges[v - h].caret,
            })
            .collect();
        Some((downs, ups))
    }

    /// The neighbour reached along link vertex `v`.
    pub fn neighbour(&self, x: &CubePatchVertex, v: usize) -> Result<CubePatchVertex> {
        if v < self.height {
            x.split(&[v + 1])
        } else {
            let m = &self.merges[v - self.height];
            x.merge(&m.braid, &[m.caret])
        }
    }
}

/// The link of `x` with merges drawn from a descending shadow of height
/// `h(x)` (or none when `h(x) = 1`).
pub fn vertex_link(
    x: &CubePatchVertex,
    shadow: Option<&DescendingLinkShadow>,
) -> Result<VertexLink> {
    let h = x.height();
    let mut labels: Vec<String> = (1..=h).map(|d| format!("up{d}")).collect();
    let mut merges = Vec::new();
    let mut faces: Vec<(Vec<usize>, BraidWord)> = Vec::new();
    let all_feet: Vec<usize> = (0..h).collect();
    faces.push((all_feet, BraidWord::identity(h)));
    if let Some(s) = shadow {
        if s.height != h {
            return Err(Error::Precondition(format!(
                "shadow of height {} at a vertex of height {h}",
                s.height
            )));
        }
        merges = s.vertices.clone();
        labels.extend(merges.iter().map(|m| m.to_string()));
        for f in s.complex.facets() {
            let q = s.braid_for(f).expect("facets carry braids").clone();
            // every subset of the facet's merges, with all free feet
            for mask in 1usize..1 << f.len() {
                let sub: Vec<usize> = (0..f.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| f[i])
                    .collect();
                let merged: BTreeSet<usize> = sub
                    .iter()
                    .flat_map(|&v| [merges[v].caret, merges[v].caret + 1])
                    .collect();
                let mut face: Vec<usize> = (1..=h)
                    .filter(|d| !merged.contains(d))
                    .map(|d| d - 1)
                    .collect();
                face.extend(sub.iter().map(|v| v + h));
                faces.push((face, q.clone()));
            }
        }
    }
    let complex = SimplicialComplex::new(labels, faces.iter().map(|(f, _)| f.clone()))?;
    for (f, _) in faces.iter_mut() {
        f.sort_unstable();
    }
    let face_braids = faces
        .into_iter()
        .filter(|(f, _)| f.iter().any(|&v| v >= h))
        .map(|(f, q)| (f.into_iter().filter(|&v| v >= h).collect(), q))
        .collect();
    Ok(VertexLink {
        complex,
        height: h,
        merges,
        face_braids,
    })
}

/// A ball around the base vertex in the 1-skeleton, cut off at a height
/// bound, using merges with braids of at most `braid_bound` letters.
#[derive(Debug, Clone)]
pub struct Patch {
    pub height_bound: usize,
    pub braid_bound: usize,
    pub radius: usize,
    table: VertexTable,
    distance: Vec<usize>,
}

impl Patch {
    pub fn around_base(height_bound: usize, braid_bound: usize, radius: usize) -> Result<Patch> {
        if height_bound == 0 {
            return Err(Error::Precondition("height bound must be positive".into()));
        }
        let mut table = VertexTable::default();
        let mut distance = Vec::new();
        let mut queue = VecDeque::new();
        table.intern(CubePatchVertex::base());
        distance.push(0);
        queue.push_back(0);
        let mut braids: HashMap<usize, Vec<BraidWord>> = HashMap::new();
        while let Some(i) = queue.pop_front() {
            if distance[i] == radius {
                continue;
            }
            let x = table.vertices[i].clone();
            let h = x.height();
            let mut next = Vec::new();
            if h < height_bound {
                for d in 1..=h {
                    next.push(x.split(&[d])?);
                }
            }
            if h >= 2 {
                let qs = braids
                    .entry(h)
                    .or_insert_with(|| pure_braids_up_to(h, braid_bound));
                for q in qs.iter() {
                    for c in 1..h {
                        next.push(x.merge(q, &[c])?);
                    }
                }
            }
            for y in next {
                let (j, fresh) = table.intern(y);
                if fresh {
                    distance.push(distance[i] + 1);
                    queue.push_back(j);
                }
            }
        }
        Ok(Patch {
            height_bound,
            braid_bound,
            radius,
            table,
            distance,
        })
    }

    pub fn empty(height_bound: usize, braid_bound: usize) -> Patch {
        Patch {
            height_bound,
            braid_bound,
            radius: 0,
            table: VertexTable::default(),
            distance: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[CubePatchVertex] {
        &self.table.vertices
    }

    pub fn len(&self) -> usize {
        self.table.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.vertices.is_empty()
    }

    /// Vertices whose whole bounded link lies in the patch.
    pub fn interior(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| {
                self.distance[i] < self.radius
                    && self.table.vertices[i].height() < self.height_bound
            })
            .collect()
    }

    pub fn contains(&self, x: &CubePatchVertex) -> bool {
        self.table.find(x).is_some()
    }
}

/// Get-or-insert map from 0-cubes to indices; reduced forms of equal
/// cosets share their forests, so those key the buckets.
#[derive(Debug, Clone, Default)]
struct VertexTable {
    buckets: HashMap<(Tree, Forest), Vec<usize>>,
    vertices: Vec<CubePatchVertex>,
}

impl VertexTable {
    fn find(&self, x: &CubePatchVertex) -> Option<usize> {
        let bucket = self.buckets.get(&(x.tree().clone(), x.forest().clone()))?;
        bucket
            .iter()
            .copied()
            .find(|&i| vertex_equal(x, &self.vertices[i]))
    }

    fn intern(&mut self, x: CubePatchVertex) -> (usize, bool) {
        let key = (x.tree().clone(), x.forest().clone());
        let bucket = self.buckets.entry(key).or_default();
        if let Some(&i) = bucket
            .iter()
            .find(|&&i| vertex_equal(&x, &self.vertices[i]))
        {
            return (i, false);
        }
        let i = self.vertices.len();
        bucket.push(i);
        self.vertices.push(x);
        (i, true)
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct XReport {
    pub n: usize,
    pub vertices_in_x: usize,
    pub links_checked: usize,
    pub certificates_passed: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct PatchReport {
    pub vertices: usize,
    pub height_bound: usize,
    pub braid_bound: usize,
    pub links_checked: usize,
    pub flag_links: usize,
    pub flag_failures: Vec<String>,
    pub x_reports: Vec<XReport>,
}

impl PatchReport {
    pub fn passed(&self) -> bool {
        self.flag_failures.is_empty() && self.x_reports.iter().all(|r| r.failures.is_empty())
    }
}

/// Checks the Gromov link condition at every interior vertex of the patch
/// and, for each `n`, that the links inside `X(n)` are full subcomplexes:
/// every link face whose directions all stay in `X(n)` spans a cube lying
/// entirely in `X(n)`.
pub fn patch_check(patch: &Patch, xs: &[usize]) -> Result<PatchReport> {
    let mut report = PatchReport {
        vertices: patch.len(),
        height_bound: patch.height_bound,
        braid_bound: patch.braid_bound,
        ..Default::default()
    };
    let mut shadows: HashMap<usize, DescendingLinkShadow> = HashMap::new();
    let mut x_reports: Vec<XReport> = xs
        .iter()
        .map(|&n| XReport {
            n,
            vertices_in_x: patch.vertices().iter().filter(|v| v.in_x(n)).count(),
            ..Default::default()
        })
        .collect();
    for i in patch.interior() {
        let x = &patch.vertices()[i];
        let h = x.height();
        if h >= 2 && !shadows.contains_key(&h) {
            shadows.insert(h, descending_link_shadow(h, patch.braid_bound)?);
        }
        let link = vertex_link(x, shadows.get(&h))?;
        for v in 0..link.complex.vertex_count() {
            if !patch.contains(&link.neighbour(x, v)?) {
                return Err(Error::Precondition(format!("patch not face-closed at {x}")));
            }
        }
        report.links_checked += 1;
        if link.complex.is_flag() {
            report.flag_links += 1;
        } else {
            report.flag_failures.push(x.to_string());
        }
        for xr in x_reports.iter_mut() {
            if !x.in_x(xr.n) {
                continue;
            }
            xr.links_checked += 1;
            match fullness_certificate(x, &link, xr.n) {
                Ok(()) => xr.certificates_passed += 1,
                Err(e) => xr.failures.push(format!("{x}: {e}")),
            }
        }
    }
    report.x_reports = x_reports;
    Ok(report)
}

fn fullness_certificate(x: &CubePatchVertex, link: &VertexLink, n: usize) -> Result<()> {
    let inside: Vec<usize> = (0..link.complex.vertex_count())
        .filter(|&v| link.neighbour(x, v).is_ok_and(|y| y.in_x(n)))
        .collect();
    let sub = link.complex.induced(&inside);
    for f in sub.facets() {
        let face: Vec<usize> = f.iter().map(|&v| inside[v]).collect();
        let (downs, ups) = link
            .directions(&face)
            .ok_or_else(|| Error::Precondition("link face without a braid".into()))?;
        let cube = cube_span(x, &downs, &ups)?;
        if let Some(y) = cube.vertices.iter().find(|y| !y.in_x(n)) {
            return Err(Error::Precondition(format!(
                "cube corner {y} leaves X({n})"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::graph::{matching_complex, Graph};

    fn b(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn vertex_equality() {
        let x = CubePatchVertex::new(
            Diagram::new(Tree::caret(), b(2, &[1, 1]), Forest::trivial(2)).unwrap(),
        )
        .unwrap();
        let y = CubePatchVertex::from_tree(Tree::caret());
        assert!(vertex_equal(&x, &x));
        assert!(vertex_equal(&x, &y));
        assert!(!vertex_equal(&y, &CubePatchVertex::base()));
        let z = CubePatchVertex::new(
            Diagram::new(Tree::caret(), b(2, &[1, 1]), Tree::caret()).unwrap(),
        )
        .unwrap();
        assert!(!vertex_equal(&z, &CubePatchVertex::base()));
    }

    #[test]
    fn ascending_links_are_simplices() {
        let x = CubePatchVertex::from_tree(Tree::vine(&Address::ones(2)));
        let l = ascending_link(&x);
        assert_eq!(l.dim(), 2);
        assert_eq!(l.facets().len(), 1);
        assert_eq!(ascending_link(&CubePatchVertex::base()).dim(), 0);
    }

    #[test]
    fn shadow_height_two() {
        let s = descending_link_shadow(2, 2).unwrap();
        assert_eq!(s.vertices.len(), 3);
        assert_eq!(s.complex.dim(), 0);
        assert!(s.projection.iter().all(|&e| e == (1, 2)));
        assert!(descending_link_shadow(1, 2).is_err());
    }

    #[test]
    fn shadow_trivial_slice_is_matching_complex() {
        for m in 3..=6 {
            let s = descending_link_shadow(m, 0).unwrap();
            let expected = matching_complex(&Graph::linear(m));
            assert!(s.projected().same_as(&expected), "m = {m}");
            assert!(s.complex.is_isomorphic(&expected));
        }
    }

    #[test]
    fn cube_span_examples() {
        let x = CubePatchVertex::from_tree(Tree::vine(&Address::ones(3)));
        let c = cube_span(&x, &[], &[]).unwrap();
        assert_eq!(c.dim, 0);
        assert!(vertex_equal(&c.vertices[0], &x));
        let m = Merge {
            braid: b(4, &[1, 1]),
            caret: 1,
        };
        let c = cube_span(&x, std::slice::from_ref(&m), &[4]).unwrap();
        assert_eq!(c.dim, 2);
        assert_eq!(c.vertices.len(), 4);
        assert!(c.identity_verified);
        assert_eq!(c.top.height(), c.bottom.height() + 2);
        assert!(matches!(
            cube_span(&x, std::slice::from_ref(&m), &[2]),
            Err(Error::SupportOverlap(2))
        ));
        let m2 = Merge {
            braid: BraidWord::identity(4),
            caret: 2,
        };
        assert!(matches!(
            cube_span(&x, &[m, m2], &[]),
            Err(Error::SupportOverlap(_))
        ));
    }

    #[test]
    fn x_membership() {
        let right_vine = CubePatchVertex::from_tree(Tree::vine(&Address::ones(2)));
        assert!(right_vine.in_x(1));
        assert!(right_vine.in_x(2));
        assert!(!CubePatchVertex::base().in_x(1));
        let left = CubePatchVertex::from_tree(Tree::vine(&"00".parse().unwrap()));
        assert!(!left.in_x(1));
        // T = caret is 1-deferred after no expansion, feet bare
        assert!(CubePatchVertex::from_tree(Tree::caret()).in_x(1));
    }

    #[test]
    fn small_patch() {
        let p = Patch::around_base(3, 2, 2).unwrap();
        let r = patch_check(&p, &[1]).unwrap();
        assert!(r.links_checked >= 2);
        assert!(r.passed(), "{r:?}");
        let r = patch_check(&Patch::empty(3, 2), &[1, 2]).unwrap();
        assert_eq!(r.links_checked, 0);
        assert!(r.passed());
    }
}
