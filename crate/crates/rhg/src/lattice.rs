//! Geometry of the Raussendorf (RHG) lattice.
//!
//! # Coordinate system
//!
//! Integer triples `(x, y, t)` in half-step units: the corners of primal unit
//! cells sit at all-even coordinates and the cells have side 2. A site hosts a
//! qubit iff it has exactly one or exactly two odd components:
//!
//! - two odd components: a qubit in the middle of a primal cell face,
//! - one odd component: a qubit on a primal cell edge, which is at the same
//!   time the middle of a dual cell face.
//!
//! Primal cell centers are the all-odd sites, dual cell centers the all-even
//! sites (the dual lattice is the primal one shifted by half a cell). Edges of
//! the cluster state connect each face qubit to the four edge qubits around
//! it, i.e. every edge joins a 2-odd site to a 1-odd site at distance 1.
//!
//! The third axis is simulated time: even `t` slices play the role of
//! Z-stabilizer rounds of the foliated planar code, odd slices the X rounds.
//!
//! Nodes are ordered lexicographically by `(t, y, x)`, which fixes tableau
//! indices and makes every exported artifact reproducible.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A lattice site in half-step units.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coord {
    pub x: i32,
    pub y: i32,
    pub t: i32,
}

impl Coord {
    pub const fn new(x: i32, y: i32, t: i32) -> Self {
        Coord { x, y, t }
    }

    /// Number of odd components.
    pub fn odd_count(&self) -> u32 {
        (self.x & 1) as u32 + (self.y & 1) as u32 + (self.t & 1) as u32
    }

    /// The six axis neighbors at distance 1.
    pub fn neighbors(&self) -> [Coord; 6] {
        let &Coord { x, y, t } = self;
        [
            Coord::new(x - 1, y, t),
            Coord::new(x + 1, y, t),
            Coord::new(x, y - 1, t),
            Coord::new(x, y + 1, t),
            Coord::new(x, y, t - 1),
            Coord::new(x, y, t + 1),
        ]
    }
}

impl fmt::Debug for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.t)
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.x, self.y, self.t)
    }
}

/// Role of a site, a pure function of coordinate parity.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NodeRole {
    /// Two odd components: face of a primal cell.
    PrimalFace,
    /// One odd component: primal edge, equivalently a dual cell face.
    DualFace,
    NotAQubit,
}

/// Parity tag of a constant-`t` plane.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SliceParity {
    /// Even slices correspond to Z-stabilizer rounds of the foliated code.
    Even,
    /// Odd slices correspond to X-stabilizer rounds.
    Odd,
}

/// Which cell complex a cell belongs to.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CellKind {
    Primal,
    Dual,
}

/// Extent of the lattice in unit cells per axis.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extent {
    pub nx: u32,
    pub ny: u32,
    pub nt: u32,
}

impl Extent {
    pub const fn new(nx: u32, ny: u32, nt: u32) -> Self {
        Extent { nx, ny, nt }
    }

    /// Largest coordinate value along each axis (`2n`).
    pub fn max_coord(&self) -> (i32, i32, i32) {
        (2 * self.nx as i32, 2 * self.ny as i32, 2 * self.nt as i32)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("invalid extent: every component must be >= 1")]
    InvalidExtent,
    #[error("unknown cell {0:?}")]
    UnknownCell(Coord),
    #[error("time slice {0} out of range")]
    OutOfRange(i32),
}

/// Classify a coordinate by parity.
pub fn node_role(c: Coord) -> NodeRole {
    match c.odd_count() {
        1 => NodeRole::DualFace,
        2 => NodeRole::PrimalFace,
        _ => NodeRole::NotAQubit,
    }
}

/// Closed-form qubit count for a rectangular volume.
///
/// Sites with one odd component choose the odd axis; sites with two odd
/// components choose the even axis. Along an axis of `n` cells there are `n`
/// odd and `n + 1` even coordinate values.
pub fn node_count(extent: Extent) -> u64 {
    let (nx, ny, nt) = (extent.nx as u64, extent.ny as u64, extent.nt as u64);
    let one_odd =
        nx * (ny + 1) * (nt + 1) + (nx + 1) * ny * (nt + 1) + (nx + 1) * (ny + 1) * nt;
    let two_odd = nx * ny * (nt + 1) + nx * (ny + 1) * nt + (nx + 1) * ny * nt;
    one_odd + two_odd
}

/// Immutable RHG lattice: nodes, adjacency and cell inventory.
#[derive(Clone)]
pub struct Lattice {
    extent: Extent,
    nodes: Vec<Coord>,
    index: HashMap<Coord, u32>,
    adjacency: Vec<Vec<u32>>,
    primal_cells: Vec<Coord>,
    dual_cells: Vec<Coord>,
    edge_count: usize,
}

impl Lattice {
    /// Build the full node/edge/cell inventory for a rectangular volume.
    pub fn build(extent: Extent) -> Result<Self, LatticeError> {
        if extent.nx < 1 || extent.ny < 1 || extent.nt < 1 {
            return Err(LatticeError::InvalidExtent);
        }
        let (mx, my, mt) = extent.max_coord();
        let mut nodes = Vec::new();
        // (t, y, x) lexicographic order.
        for t in 0..=mt {
            for y in 0..=my {
                for x in 0..=mx {
                    let c = Coord::new(x, y, t);
                    if node_role(c) != NodeRole::NotAQubit {
                        nodes.push(c);
                    }
                }
            }
        }
        let index: HashMap<Coord, u32> = nodes
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i as u32))
            .collect();

        let mut adjacency = vec![Vec::new(); nodes.len()];
        let mut edge_count = 0;
        for (i, &c) in nodes.iter().enumerate() {
            for nb in c.neighbors() {
                if let Some(&j) = index.get(&nb) {
                    adjacency[i].push(j);
                    if (j as usize) > i {
                        edge_count += 1;
                    }
                }
            }
        }

        let mut primal_cells = Vec::new();
        let mut dual_cells = Vec::new();
        for t in 0..=mt {
            for y in 0..=my {
                for x in 0..=mx {
                    let c = Coord::new(x, y, t);
                    match c.odd_count() {
                        3 => primal_cells.push(c),
                        0 => dual_cells.push(c),
                        _ => {}
                    }
                }
            }
        }

        Ok(Lattice {
            extent,
            nodes,
            index,
            adjacency,
            primal_cells,
            dual_cells,
            edge_count,
        })
    }

    pub fn extent(&self) -> Extent {
        self.extent
    }

    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edge_count
    }

    /// Nodes in `(t, y, x)` order.
    pub fn nodes(&self) -> &[Coord] {
        &self.nodes
    }

    pub fn coord(&self, idx: u32) -> Coord {
        self.nodes[idx as usize]
    }

    pub fn node_index(&self, c: Coord) -> Option<u32> {
        self.index.get(&c).copied()
    }

    pub fn contains(&self, c: Coord) -> bool {
        self.index.contains_key(&c)
    }

    pub fn neighbors_of(&self, idx: u32) -> &[u32] {
        &self.adjacency[idx as usize]
    }

    /// Undirected edges, each reported once with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(i, nbs)| {
            nbs.iter()
                .filter(move |&&j| j as usize > i)
                .map(move |&j| (i as u32, j))
        })
    }

    pub fn primal_cells(&self) -> &[Coord] {
        &self.primal_cells
    }

    pub fn dual_cells(&self) -> &[Coord] {
        &self.dual_cells
    }

    pub fn cells(&self, kind: CellKind) -> &[Coord] {
        match kind {
            CellKind::Primal => &self.primal_cells,
            CellKind::Dual => &self.dual_cells,
        }
    }

    /// The in-volume face qubits of a cell, plus a flag set when the cell is
    /// clipped by the volume boundary.
    pub fn cell_faces(
        &self,
        cell: Coord,
        kind: CellKind,
    ) -> Result<(Vec<Coord>, bool), LatticeError> {
        let expected = match kind {
            CellKind::Primal => 3,
            CellKind::Dual => 0,
        };
        if cell.odd_count() != expected || !self.in_volume(cell) {
            return Err(LatticeError::UnknownCell(cell));
        }
        let faces: Vec<Coord> = cell
            .neighbors()
            .into_iter()
            .filter(|c| self.contains(*c))
            .collect();
        let truncated = faces.len() < 6;
        Ok((faces, truncated))
    }

    fn in_volume(&self, c: Coord) -> bool {
        let (mx, my, mt) = self.extent.max_coord();
        (0..=mx).contains(&c.x) && (0..=my).contains(&c.y) && (0..=mt).contains(&c.t)
    }

    /// All qubits with the given time coordinate, plus the slice parity.
    pub fn time_slice(&self, t: i32) -> Result<(Vec<Coord>, SliceParity), LatticeError> {
        let (_, _, mt) = self.extent.max_coord();
        if !(0..=mt).contains(&t) {
            return Err(LatticeError::OutOfRange(t));
        }
        let qubits = self.nodes.iter().copied().filter(|c| c.t == t).collect();
        let parity = if t % 2 == 0 {
            SliceParity::Even
        } else {
            SliceParity::Odd
        };
        Ok((qubits, parity))
    }

    /// Structured text summary used for golden-file checks.
    pub fn summary(&self) -> String {
        let e = self.extent;
        let mut s = String::new();
        s.push_str("rhg-lattice-summary v1\n");
        s.push_str(&format!("extent: {} {} {}\n", e.nx, e.ny, e.nt));
        s.push_str(&format!("nodes: {}\n", self.num_nodes()));
        s.push_str(&format!(
            "primal_face_qubits: {}\n",
            self.nodes
                .iter()
                .filter(|c| node_role(**c) == NodeRole::PrimalFace)
                .count()
        ));
        s.push_str(&format!(
            "dual_face_qubits: {}\n",
            self.nodes
                .iter()
                .filter(|c| node_role(**c) == NodeRole::DualFace)
                .count()
        ));
        s.push_str(&format!("edges: {}\n", self.num_edges()));
        s.push_str(&format!("primal_cells: {}\n", self.primal_cells.len()));
        s.push_str(&format!("dual_cells: {}\n", self.dual_cells.len()));
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_count(extent: Extent) -> u64 {
        let (mx, my, mt) = extent.max_coord();
        let mut n = 0;
        for t in 0..=mt {
            for y in 0..=my {
                for x in 0..=mx {
                    let k = Coord::new(x, y, t).odd_count();
                    if k == 1 || k == 2 {
                        n += 1;
                    }
                }
            }
        }
        n
    }

    #[test]
    fn unit_cell_counts() {
        let lat = Lattice::build(Extent::new(1, 1, 1)).unwrap();
        assert_eq!(lat.num_nodes(), 18);
        assert_eq!(lat.num_edges(), 24);
    }

    #[test]
    fn two_cell_counts() {
        let lat = Lattice::build(Extent::new(2, 2, 2)).unwrap();
        assert_eq!(lat.num_nodes(), 90);
        let one_odd = lat
            .nodes()
            .iter()
            .filter(|c| node_role(**c) == NodeRole::DualFace)
            .count();
        let two_odd = lat
            .nodes()
            .iter()
            .filter(|c| node_role(**c) == NodeRole::PrimalFace)
            .count();
        assert_eq!(one_odd, 54);
        assert_eq!(two_odd, 36);
    }

    #[test]
    fn invalid_extent_rejected() {
        assert_eq!(
            Lattice::build(Extent::new(0, 1, 1)).unwrap_err(),
            LatticeError::InvalidExtent
        );
    }

    #[test]
    fn roles_by_parity() {
        assert_eq!(node_role(Coord::new(1, 1, 0)), NodeRole::PrimalFace);
        assert_eq!(node_role(Coord::new(1, 0, 0)), NodeRole::DualFace);
        assert_eq!(node_role(Coord::new(0, 0, 0)), NodeRole::NotAQubit);
        assert_eq!(node_role(Coord::new(1, 1, 1)), NodeRole::NotAQubit);
    }

    #[test]
    fn primal_cell_faces_are_two_odd() {
        let lat = Lattice::build(Extent::new(1, 1, 1)).unwrap();
        let (faces, truncated) = lat.cell_faces(Coord::new(1, 1, 1), CellKind::Primal).unwrap();
        assert_eq!(faces.len(), 6);
        assert!(!truncated);
        assert!(faces.iter().all(|c| node_role(*c) == NodeRole::PrimalFace));
    }

    #[test]
    fn interior_dual_cell_faces_are_one_odd() {
        let lat = Lattice::build(Extent::new(2, 2, 2)).unwrap();
        let (faces, truncated) = lat.cell_faces(Coord::new(2, 2, 2), CellKind::Dual).unwrap();
        assert_eq!(faces.len(), 6);
        assert!(!truncated);
        assert!(faces.iter().all(|c| node_role(*c) == NodeRole::DualFace));
    }

    #[test]
    fn corner_dual_cell_is_truncated() {
        let lat = Lattice::build(Extent::new(1, 1, 1)).unwrap();
        let (faces, truncated) = lat.cell_faces(Coord::new(0, 0, 0), CellKind::Dual).unwrap();
        assert_eq!(faces.len(), 3);
        assert!(truncated);
    }

    #[test]
    fn unknown_cell_rejected() {
        let lat = Lattice::build(Extent::new(1, 1, 1)).unwrap();
        assert!(matches!(
            lat.cell_faces(Coord::new(1, 1, 0), CellKind::Primal),
            Err(LatticeError::UnknownCell(_))
        ));
        assert!(matches!(
            lat.cell_faces(Coord::new(4, 0, 0), CellKind::Dual),
            Err(LatticeError::UnknownCell(_))
        ));
    }

    #[test]
    fn time_slices_of_unit_cell() {
        let lat = Lattice::build(Extent::new(1, 1, 1)).unwrap();
        let (q0, p0) = lat.time_slice(0).unwrap();
        assert_eq!(q0.len(), 5);
        assert_eq!(p0, SliceParity::Even);
        let (q1, p1) = lat.time_slice(1).unwrap();
        assert_eq!(q1.len(), 8);
        assert_eq!(p1, SliceParity::Odd);
        assert!(matches!(lat.time_slice(3), Err(LatticeError::OutOfRange(3))));
    }

    #[test]
    fn slice_parities_alternate() {
        let lat = Lattice::build(Extent::new(2, 1, 2)).unwrap();
        let mut prev = None;
        for t in 0..=4 {
            let (_, p) = lat.time_slice(t).unwrap();
            if let Some(q) = prev {
                assert_ne!(p, q);
            }
            prev = Some(p);
        }
    }

    #[test]
    fn closed_form_matches_enumeration() {
        for nx in 1..=4 {
            for ny in 1..=4 {
                for nt in 1..=4 {
                    let e = Extent::new(nx, ny, nt);
                    assert_eq!(node_count(e), brute_force_count(e), "extent {e:?}");
                    let lat = Lattice::build(e).unwrap();
                    assert_eq!(lat.num_nodes() as u64, node_count(e));
                }
            }
        }
    }

    #[test]
    fn edges_are_bipartite_face_to_edge() {
        let lat = Lattice::build(Extent::new(2, 2, 2)).unwrap();
        for (i, j) in lat.edges() {
            let a = node_role(lat.coord(i));
            let b = node_role(lat.coord(j));
            assert_ne!(a, b);
        }
    }

    #[test]
    fn bulk_face_qubits_have_degree_four() {
        let lat = Lattice::build(Extent::new(2, 2, 2)).unwrap();
        for (i, c) in lat.nodes().iter().enumerate() {
            if node_role(*c) == NodeRole::PrimalFace {
                assert_eq!(lat.neighbors_of(i as u32).len(), 4);
            }
        }
    }
}
