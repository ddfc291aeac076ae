//! Exact Leja sections of the closed unit disk started at `e_0 = 1`.

use serde::Serialize;

use crate::angle::DyadicAngle;
use crate::binary::binary_expand;
use crate::error::{LejaError, Result};
use crate::section::{LejaSection, Node, Origin};

/// Angle of `e_k = exp(iπ Σ_j 2^{-p_j})` where `k = Σ_j 2^{p_j}`; `e_0 = 1`.
pub fn explicit_leja_point(k: u64) -> DyadicAngle {
    if k == 0 {
        return DyadicAngle::ZERO;
    }
    let expansion = binary_expand(k).expect("k > 0");
    let p_max = expansion.highest();
    // Σ 2^{-p_j} = (Σ 2^{p_max - p_j}) / 2^{p_max}
    let numerator: u64 = expansion.exponents().iter().map(|&p| 1u64 << (p_max - p)).sum();
    DyadicAngle::new(numerator, p_max).expect("k < 2^62")
}

/// The first `k` points of the explicit sequence.
pub fn explicit_section(k: usize) -> Result<LejaSection> {
    if k == 0 {
        return Err(LejaError::ZeroIndex);
    }
    let nodes = (0..k as u64).map(|i| Node::Angle(explicit_leja_point(i))).collect();
    Ok(LejaSection::from_nodes_unchecked(nodes, Origin::Explicit))
}

/// `E_{2^{n+1}} = (E_{2^n}, e^{iπ/2^n} E_{2^n})`, starting from `E_1 = (1)`.
pub fn doubling_section(n: u32) -> Result<LejaSection> {
    if n >= 40 {
        return Err(LejaError::InvalidParameter(format!("doubling depth {n} is too large")));
    }
    let mut angles = vec![DyadicAngle::ZERO];
    for level in 0..=n {
        let rho = DyadicAngle::pow2_fraction(level)?;
        let rotated: Vec<_> = angles.iter().map(|a| a.add(rho)).collect();
        angles.extend(rotated);
    }
    let nodes = angles.into_iter().map(Node::Angle).collect();
    Ok(LejaSection::from_nodes_unchecked(nodes, Origin::Doubling))
}

/// Outcome of checking one family of relations over all indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RelationStatus {
    pub relation: &'static str,
    pub checked: usize,
    pub first_violation: Option<usize>,
}

impl RelationStatus {
    pub fn holds(&self) -> bool {
        self.first_violation.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    /// `e_{2j+1} = -e_{2j}`
    pub negation: RelationStatus,
    /// `e_{2j}^2 = e_j`
    pub even_square: RelationStatus,
    /// `e_{2j+1}^2 = e_j`
    pub odd_square: RelationStatus,
}

impl SymmetryReport {
    pub fn all_hold(&self) -> bool {
        self.relations().iter().all(RelationStatus::holds)
    }

    pub fn relations(&self) -> [RelationStatus; 3] {
        [self.negation, self.even_square, self.odd_square]
    }

    /// Converts the first failed relation into an error.
    pub fn into_result(self) -> Result<()> {
        for r in self.relations() {
            if let Some(index) = r.first_violation {
                return Err(LejaError::SymmetryViolation { relation: r.relation, index });
            }
        }
        Ok(())
    }
}

/// Checks `e_{2j+1} = -e_{2j}` and `e_{2j}^2 = e_{2j+1}^2 = e_j` exactly on angles.
pub fn check_symmetry_relations(section: &LejaSection) -> Result<SymmetryReport> {
    let angles = section.angles()?;
    if angles.len() % 2 != 0 {
        return Err(LejaError::OddLength(angles.len()));
    }
    let m = angles.len() / 2;
    let first = |pred: &dyn Fn(usize) -> bool| (0..m).find(|&j| !pred(j));
    let negation = first(&|j| angles[2 * j + 1] == angles[2 * j].add(DyadicAngle::HALF_TURN));
    let even_square = first(&|j| angles[2 * j].double() == angles[j]);
    let odd_square = first(&|j| angles[2 * j + 1].double() == angles[j]);
    let status = |relation, first_violation| RelationStatus { relation, checked: m, first_violation };
    Ok(SymmetryReport {
        negation: status("e_{2j+1} = -e_{2j}", negation),
        even_square: status("e_{2j}^2 = e_j", even_square),
        odd_square: status("e_{2j+1}^2 = e_j", odd_square),
    })
}
