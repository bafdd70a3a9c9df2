//! Clifford groups on one and two qubits as abstract groups: the closure,
//! its scalar center and the inner group modulo that center.

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::matrix::{clifford_group, MatGroup, UMatrix};
use crate::structure::{center, normal_subgroups, quotient, Quotient};

/// A Clifford group with its center and inner quotient.
pub struct InnerClifford {
    pub qubits: usize,
    pub matrices: MatGroup,
    /// The full Clifford group; element `i` is `matrices.element(i)`.
    pub full: FiniteGroup,
    pub center: Subgroup,
    pub inner: Quotient,
}

impl InnerClifford {
    pub fn build(qubits: usize) -> Result<InnerClifford> {
        InnerClifford::from_matrices(qubits, clifford_group(qubits)?)
    }

    pub fn from_matrices(qubits: usize, matrices: MatGroup) -> Result<InnerClifford> {
        if matrices.dim() != 1 << qubits {
            return Err(Error::UnexpectedStructure(format!(
                "{qubits}-qubit group needs dimension {}, got {}",
                1 << qubits,
                matrices.dim()
            )));
        }
        let full = matrices.as_finite_group();
        let center = center(&full);
        let inner = quotient(&full, &center)?;
        Ok(InnerClifford { qubits, matrices, full, center, inner })
    }

    /// The inner group `C/Z(C)`.
    pub fn group(&self) -> &FiniteGroup {
        &self.inner.group
    }

    /// Matrix of the least-index representative of an inner element.
    pub fn matrix_of(&self, x: usize) -> &UMatrix {
        self.matrices.element(self.inner.representative(x))
    }

    /// Normal subgroups of the inner group other than the trivial one and
    /// the whole group, sorted by order.
    pub fn proper_normal_subgroups(&self) -> Vec<Subgroup> {
        let n = self.group().order();
        normal_subgroups(self.group()).into_iter().filter(|s| s.order() != 1 && s.order() != n).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ident::{isomorphic, recognize, Named, Recognition};
    use crate::perm::symmetric_group;

    #[test]
    fn one_qubit_inner_group() {
        let c = InnerClifford::build(1).unwrap();
        assert_eq!(c.center.order(), 8);
        assert_eq!(c.group().order(), 24);
        for z in c.center.members() {
            assert!(c.matrices.element(*z).as_scalar().is_some());
        }
        let normals = c.proper_normal_subgroups();
        assert_eq!(normals.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![4, 12]);
        let s4 = symmetric_group(4).as_finite_group().unwrap().0;
        assert!(isomorphic(c.group(), &s4, 10_000).is_certified());
        let z = c.full.subgroup_as_group(&c.center).unwrap();
        assert_eq!(recognize(&z.group, 1000), Recognition::Named(Named::Cyclic(8)));
        assert!(c.matrix_of(0).is_identity());
    }
}
