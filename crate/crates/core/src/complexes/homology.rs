//! Reduced integral homology via Smith normal form, and connectivity.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::simplicial::SimplicialComplex;

/// `H̃_dim ≅ ℤ^betti ⊕ ⊕ ℤ/t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub dim: i64,
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    /// `"0"`, `"Z"`, `"Z^2 + Z/2"`, …
    pub fn group_string(&self) -> String {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{} = {}", self.dim, self.group_string())
    }
}

impl Serialize for HomologyGroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw {
            dim: i64,
            betti: usize,
            torsion: Vec<String>,
        }
        Raw {
            dim: self.dim,
            betti: self.betti,
            torsion: self.torsion.iter().map(BigInt::to_string).collect(),
        }
        .serialize(s)
    }
}

/// Invariant factors (nonzero, each dividing the next) of an integer matrix.
#[allow(clippy::needless_range_loop)]
pub fn invariant_factors(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the remaining block
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
        else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = &a[i][t] / &a[t][t];
                    for j in t..cols {
                        let v = &q * &a[t][j];
                        a[i][j] -= v;
                    }
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = &a[t][j] / &a[t][t];
                    for i in t..rows {
                        let v = &q * &a[i][t];
                        a[i][j] -= v;
                    }
                    clean &= a[t][j].is_zero();
                }
            }
            if clean {
                break;
            }
            // a remainder is smaller than the pivot: move it into place
            let (bi, bj) = (t..rows)
                .map(|i| (i, t))
                .chain((t..cols).map(|j| (t, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
                .expect("pivot is nonzero");
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    // normalise to a divisibility chain
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = &diag[i] / &g * &diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

fn boundary(rows: &[Vec<usize>], cols: &[Vec<usize>]) -> Vec<Vec<BigInt>> {
    let index: BTreeMap<&[usize], usize> = rows
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let mut m = vec![vec![BigInt::zero(); cols.len()]; rows.len()];
    for (j, face) in cols.iter().enumerate() {
        for i in 0..face.len() {
            let mut sub = face.clone();
            sub.remove(i);
            let r = index[sub.as_slice()];
            m[r][j] = if i % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
        }
    }
    m
}

/// Reduced homology in dimensions `-1..=dim K`.
pub fn homology(k: &SimplicialComplex) -> Vec<HomologyGroup> {
    let top = k.dim();
    // chain groups C_{-1} = ℤ (the empty face), C_0, …, C_top
    let mut chains: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
    for d in 0..=top {
        chains.push(k.faces(d as usize));
    }
    // factors[d + 1] = invariant factors of ∂_d : C_d → C_{d-1}
    let mut factors: Vec<Vec<BigInt>> = vec![Vec::new()];
    for d in 0..=top {
        let idx = (d + 1) as usize;
        factors.push(invariant_factors(boundary(&chains[idx - 1], &chains[idx])));
    }
    factors.push(Vec::new());
    (-1..=top)
        .map(|d| {
            let idx = (d + 1) as usize;
            let n = chains[idx].len();
            let rank_out = factors[idx].len();
            let rank_in = factors[idx + 1].len();
            HomologyGroup {
                dim: d,
                betti: n - rank_out - rank_in,
                torsion: factors[idx + 1]
                    .iter()
                    .filter(|t| !t.is_one())
                    .cloned()
                    .collect(),
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Pi1 {
    Trivial,
    Nontrivial,
    Unknown,
    /// Not path-connected, so there is no single fundamental group.
    NotApplicable,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConnectivityReport {
    pub vertices: usize,
    pub dim: i64,
    pub path_connected: bool,
    /// Largest `k` with `H̃_i = 0` for all `i ≤ k`; `None` when every
    /// reduced homology group vanishes.
    pub homological_connectivity: Option<i64>,
    pub pi1: Pi1,
    pub homology: Vec<HomologyGroup>,
}

impl ConnectivityReport {
    /// The homological connectivity, with acyclic complexes counted as
    /// `dim`-connected.
    pub fn connectivity_lower_bound(&self) -> i64 {
        self.homological_connectivity.unwrap_or(self.dim)
    }
}

impl fmt::Display for ConnectivityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.homological_connectivity {
            Some(k) => write!(f, "homologically {k}-connected")?,
            None => write!(f, "acyclic")?,
        }
        write!(
            f,
            " (path-connected: {}, pi1: {})",
            self.path_connected,
            match self.pi1 {
                Pi1::Trivial => "trivial",
                Pi1::Nontrivial => "nontrivial",
                Pi1::Unknown => "unknown",
                Pi1::NotApplicable => "n/a",
            }
        )
    }
}

pub fn connectivity_report(k: &SimplicialComplex) -> ConnectivityReport {
    let homology = homology(k);
    let homological_connectivity = homology.iter().find(|h| !h.is_zero()).map(|h| h.dim - 1);
    let path_connected = k.is_connected();
    let pi1 = if !path_connected {
        Pi1::NotApplicable
    } else if homology.iter().any(|h| h.dim == 1 && !h.is_zero()) {
        Pi1::Nontrivial
    } else {
        collapse_pi1(k)
    };
    ConnectivityReport {
        vertices: k.vertex_count(),
        dim: k.dim(),
        path_connected,
        homological_connectivity,
        pi1,
        homology,
    }
}

/// Greedy elementary collapses of the 2-skeleton. If no triangle survives,
/// what is left is a connected graph whose π₁ is free of rank `E − V + 1`.
fn collapse_pi1(k: &SimplicialComplex) -> Pi1 {
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for d in 0..=k.dim().min(2) {
        faces.extend(k.faces(d as usize));
    }
    loop {
        let mut collapsed = false;
        let maximal: Vec<Vec<usize>> = faces
            .iter()
            .filter(|f| f.len() >= 2)
            .filter(|f| {
                !faces
                    .iter()
                    .any(|g| g.len() == f.len() + 1 && f.iter().all(|v| g.contains(v)))
            })
            .cloned()
            .collect();
        for top in maximal {
            if !faces.contains(&top) {
                continue;
            }
            for i in 0..top.len() {
                let mut free = top.clone();
                free.remove(i);
                let cofaces = faces
                    .iter()
                    .filter(|g| g.len() == free.len() + 1 && free.iter().all(|v| g.contains(v)))
                    .count();
                if cofaces == 1 {
                    faces.remove(&top);
                    faces.remove(&free);
                    collapsed = true;
                    break;
                }
            }
        }
        if !collapsed {
            break;
        }
    }
    if faces.iter().any(|f| f.len() == 3) {
        return Pi1::Unknown;
    }
    let v = faces.iter().filter(|f| f.len() == 1).count();
    let e = faces.iter().filter(|f| f.len() == 2).count();
    if e + 1 == v {
        Pi1::Trivial
    } else {
        Pi1::Nontrivial
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::graph::{matching_complex, Graph};

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("v{i}")).collect()
    }

    fn nonzero(k: &SimplicialComplex) -> Vec<String> {
        homology(k)
            .into_iter()
            .filter(|h| !h.is_zero())
            .map(|h| h.to_string())
            .collect()
    }

    #[test]
    fn circle_and_disc() {
        let circle =
            SimplicialComplex::new(labels(3), [vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(nonzero(&circle), vec!["H1 = Z"]);
        assert!(nonzero(&SimplicialComplex::simplex(labels(3))).is_empty());
        assert_eq!(nonzero(&SimplicialComplex::empty()), vec!["H-1 = Z"]);
    }

    #[test]
    fn matching_complex_of_path5() {
        assert_eq!(nonzero(&matching_complex(&Graph::path(5))), vec!["H1 = Z"]);
    }

    #[test]
    fn projective_plane_has_torsion() {
        // the six-vertex triangulation of RP²
        let faces = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        let k = SimplicialComplex::new(labels(6), faces.iter().map(|f| f.to_vec())).unwrap();
        assert_eq!(nonzero(&k), vec!["H1 = Z/2"]);
        assert_eq!(connectivity_report(&k).pi1, Pi1::Nontrivial);
    }

    #[test]
    fn smith_chain() {
        let m = |v: &[&[i64]]| {
            v.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect()
        };
        assert_eq!(
            invariant_factors(m(&[&[2, 0], &[0, 3]])),
            vec![BigInt::from(1), BigInt::from(6)]
        );
        assert_eq!(
            invariant_factors(m(&[&[4, 6], &[6, 9]])),
            vec![BigInt::from(1)]
        );
        assert!(invariant_factors(m(&[&[0, 0]])).is_empty());
    }

    #[test]
    fn reports() {
        let point = SimplicialComplex::simplex(labels(1));
        let r = connectivity_report(&point);
        assert!(r.path_connected);
        assert_eq!(r.homological_connectivity, None);
        assert_eq!(r.pi1, Pi1::Trivial);
        let two = SimplicialComplex::new(labels(2), []).unwrap();
        let r = connectivity_report(&two);
        assert!(!r.path_connected);
        assert_eq!(r.homological_connectivity, Some(-1));
        let circle =
            SimplicialComplex::new(labels(4), [vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]])
                .unwrap();
        assert_eq!(connectivity_report(&circle).pi1, Pi1::Nontrivial);
        let disc = SimplicialComplex::new(labels(4), [vec![0, 1, 2], vec![0, 2, 3]]).unwrap();
        assert_eq!(connectivity_report(&disc).pi1, Pi1::Trivial);
    }
}
