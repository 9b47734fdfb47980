//! Rectangular lattice geometry: vertex set plus nearest-neighbor edge list.

use serde::{Deserialize, Serialize};

use crate::basis::MAX_VERTICES;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    Open,
    Periodic,
}

impl std::fmt::Display for Boundary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Boundary::Open => write!(f, "open"),
            Boundary::Periodic => write!(f, "periodic"),
        }
    }
}

/// A rectangular box of arbitrary spatial dimension with nearest-neighbor
/// bonds. Vertices are indexed row-major over `dims`; edges are stored as
/// `(a, b)` with `a < b`, each exactly once, in a fixed deterministic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lattice {
    pub dims: Vec<usize>,
    pub boundary: Boundary,
    pub v: usize,
    pub edges: Vec<(usize, usize)>,
}

/// Builds the nearest-neighbor box lattice with the given side lengths.
///
/// Open boundary accepts any side lengths >= 1; periodic boundary requires
/// every side length >= 3 so that wrap bonds neither duplicate an interior
/// bond nor pair a vertex with itself.
pub fn build_rectangular(dims: &[usize], boundary: Boundary) -> Result<Lattice> {
    if dims.is_empty() {
        return Err(Error::InvalidLattice(
            "dims must contain at least one side length".into(),
        ));
    }
    if dims.contains(&0) {
        return Err(Error::InvalidLattice(
            "side lengths must be positive".into(),
        ));
    }
    if boundary == Boundary::Periodic {
        if let Some(&d) = dims.iter().find(|&&d| d < 3) {
            return Err(Error::InvalidLattice(format!(
                "periodic boundary requires every side length >= 3, got {d}"
            )));
        }
    }
    let mut v = 1usize;
    for &d in dims {
        v = v
            .checked_mul(d)
            .ok_or(Error::Overflow("lattice vertex count"))?;
        if v > MAX_VERTICES {
            return Err(Error::InvalidLattice(format!(
                "vertex count {v}+ exceeds the {MAX_VERTICES}-vertex bitmask cap"
            )));
        }
    }

    // Row-major strides: stride[d] = product of dims[d+1..].
    let nd = dims.len();
    let mut strides = vec![1usize; nd];
    for d in (0..nd.saturating_sub(1)).rev() {
        strides[d] = strides[d + 1] * dims[d + 1];
    }

    let mut edges = Vec::new();
    for idx in 0..v {
        for d in 0..nd {
            let coord = (idx / strides[d]) % dims[d];
            if coord + 1 < dims[d] {
                edges.push((idx, idx + strides[d]));
            } else if boundary == Boundary::Periodic {
                // wrap bond back to coordinate 0; dims[d] >= 3 keeps it distinct
                let partner = idx - coord * strides[d];
                edges.push((partner, idx));
            }
        }
    }

    let lattice = Lattice {
        dims: dims.to_vec(),
        boundary,
        v,
        edges,
    };
    debug_assert!(lattice.is_connected());
    Ok(lattice)
}

impl Lattice {
    /// Breadth-first reachability of every vertex from vertex 0.
    pub fn is_connected(&self) -> bool {
        if self.v == 0 {
            return true;
        }
        let mut adjacency = vec![Vec::new(); self.v];
        for &(a, b) in &self.edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let mut seen = vec![false; self.v];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(a) = queue.pop_front() {
            for &b in &adjacency[a] {
                if !seen[b] {
                    seen[b] = true;
                    count += 1;
                    queue.push_back(b);
                }
            }
        }
        count == self.v
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == vertex || b == vertex)
            .count()
    }

    /// JSON document `{"dims":[...],"boundary":"open","v":N,"edges":[[a,b],...]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("lattice serialization cannot fail")
    }

    /// Short label like `2x5-open`, used in report headers.
    pub fn label(&self) -> String {
        let dims: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        format!("{}-{}", dims.join("x"), self.boundary)
    }
}
