use std::collections::HashSet;

use num_complex::Complex64;
use serde::Serialize;

use crate::angle::DyadicAngle;
use crate::error::{LejaError, Result};

/// Coordinate tolerance for node equality when a node is not angle-backed.
pub const COORD_EQ_TOL: f64 = 1e-12;
/// Modulus tolerance for a node to count as lying on the unit circle.
pub const CIRCLE_TOL: f64 = 1e-14;

/// A node of a section: exact when produced by a disk construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Node {
    Angle(DyadicAngle),
    Coord(Complex64),
}

impl Node {
    pub fn point(&self) -> Complex64 {
        match self {
            Node::Angle(a) => a.to_point(),
            Node::Coord(z) => *z,
        }
    }

    pub fn angle(&self) -> Option<DyadicAngle> {
        match self {
            Node::Angle(a) => Some(*a),
            Node::Coord(_) => None,
        }
    }

    /// Exact on two angle-backed nodes, within [`COORD_EQ_TOL`] otherwise.
    pub fn same_as(&self, other: &Node) -> bool {
        match (self, other) {
            (Node::Angle(a), Node::Angle(b)) => a == b,
            _ => (self.point() - other.point()).norm() < COORD_EQ_TOL,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Origin {
    /// Closed-form binary-expansion sequence.
    Explicit,
    /// Rotate-and-concatenate construction.
    Doubling,
    /// Greedy maximization over a discretized compact set.
    Greedy,
    /// Supplied by the caller.
    Custom,
}

/// An ordered tuple of pairwise distinct interpolation nodes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LejaSection {
    nodes: Vec<Node>,
    origin: Origin,
}

impl LejaSection {
    /// Builds a section after checking the nodes are pairwise distinct.
    pub fn new(nodes: Vec<Node>, origin: Origin) -> Result<Self> {
        if nodes.is_empty() {
            return Err(LejaError::EmptySection);
        }
        if nodes.iter().all(|n| matches!(n, Node::Angle(_))) {
            let mut seen = std::collections::HashMap::with_capacity(nodes.len());
            for (i, n) in nodes.iter().enumerate() {
                if let Some(j) = seen.insert(n.angle().unwrap(), i) {
                    return Err(LejaError::DuplicateNode(j, i));
                }
            }
        } else {
            for i in 0..nodes.len() {
                for j in 0..i {
                    if nodes[i].same_as(&nodes[j]) {
                        return Err(LejaError::DuplicateNode(j, i));
                    }
                }
            }
        }
        Ok(LejaSection { nodes, origin })
    }

    pub fn from_angles(angles: Vec<DyadicAngle>, origin: Origin) -> Result<Self> {
        Self::new(angles.into_iter().map(Node::Angle).collect(), origin)
    }

    pub fn from_points(points: Vec<Complex64>) -> Result<Self> {
        Self::new(points.into_iter().map(Node::Coord).collect(), Origin::Custom)
    }

    /// Caller guarantees distinctness.
    pub(crate) fn from_nodes_unchecked(nodes: Vec<Node>, origin: Origin) -> Self {
        debug_assert!(!nodes.is_empty());
        LejaSection { nodes, origin }
    }

    pub(crate) fn push_unchecked(&mut self, node: Node) {
        self.nodes.push(node);
    }

    pub(crate) fn set_origin(&mut self, origin: Origin) {
        self.origin = origin;
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    pub fn points(&self) -> Vec<Complex64> {
        self.nodes.iter().map(Node::point).collect()
    }

    /// All angles, if every node is angle-backed.
    pub fn angles(&self) -> Result<Vec<DyadicAngle>> {
        self.nodes
            .iter()
            .enumerate()
            .map(|(i, n)| n.angle().ok_or(LejaError::NotAngleBacked(i)))
            .collect()
    }

    pub fn is_on_circle(&self) -> bool {
        self.nodes.iter().all(|n| (n.point().norm() - 1.0).abs() <= CIRCLE_TOL)
    }

    pub fn prefix(&self, len: usize) -> LejaSection {
        LejaSection { nodes: self.nodes[..len.min(self.len())].to_vec(), origin: self.origin }
    }

    /// Exact angle set, for set comparisons of angle-backed sections.
    pub fn angle_set(&self) -> Result<HashSet<DyadicAngle>> {
        Ok(self.angles()?.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates() {
        let a = DyadicAngle::new(1, 1).unwrap();
        let err = LejaSection::from_angles(vec![DyadicAngle::ZERO, a, a], Origin::Custom).unwrap_err();
        assert_eq!(err, LejaError::DuplicateNode(1, 2));
        let z = Complex64::new(0.6, 0.8);
        assert!(LejaSection::from_points(vec![z, z + Complex64::new(1e-13, 0.0)]).is_err());
        assert!(LejaSection::from_points(vec![z, z + Complex64::new(1e-11, 0.0)]).is_ok());
        assert_eq!(LejaSection::from_points(vec![]).unwrap_err(), LejaError::EmptySection);
    }

    #[test]
    fn mixed_nodes_compare_by_coordinates() {
        let nodes = vec![Node::Angle(DyadicAngle::HALF_TURN), Node::Coord(Complex64::new(-1.0, 0.0))];
        assert!(LejaSection::new(nodes, Origin::Custom).is_err());
    }

    #[test]
    fn angles_require_angle_backing() {
        let s = LejaSection::from_points(vec![Complex64::new(1.0, 0.0)]).unwrap();
        assert_eq!(s.angles().unwrap_err(), LejaError::NotAngleBacked(0));
        assert!(s.is_on_circle());
    }
}
