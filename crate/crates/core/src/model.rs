//! ILO settings: an operation `d` whose column maps `z -> d(z, x)` are all
//! invertible, together with the adjoint `o` inverting them.

use crate::classes::{classify, try_adjoint, ClassSet, StructureClass};
use crate::error::{Error, Result};
use crate::table::{check_element, swap_to_zero, OpTable};

/// Computes the adjoint `o` of `d`: `x o y` is the unique `t` with
/// `d(t, x) = y`.
pub fn adjoint(d: &OpTable) -> Result<OpTable> {
    try_adjoint(d).ok_or_else(|| Error::NonInvertibleTranslation(d.first_bad_column().unwrap_or(0)))
}

/// An ILO setting on `{0..n-1}` with its adjoint and classification.
///
/// A unit passed explicitly to [`IloModel::new`] is moved to `0` by the
/// transposition `(0 u)`; the permutation applied is kept in
/// [`IloModel::relabeling`]. A unit recovered from a constant diagonal is
/// left where it is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IloModel {
    d: OpTable,
    adjoint: OpTable,
    unit: Option<usize>,
    flags: ClassSet,
    relabeling: Option<Vec<usize>>,
}

impl IloModel {
    pub fn new(d: OpTable, unit: Option<usize>) -> Result<Self> {
        if let Some(u) = unit {
            check_element(d.order(), u)?;
        }
        match unit {
            Some(u) if u != 0 => {
                let perm = swap_to_zero(d.order(), u);
                let mut model = IloModel::build(d.relabel(&perm), Some(0))?;
                model.relabeling = Some(perm);
                Ok(model)
            }
            _ => IloModel::build(d, unit),
        }
    }

    /// Builds the model exactly as labeled, recovering a unit from a
    /// constant diagonal when none is given.
    pub(crate) fn build(d: OpTable, unit: Option<usize>) -> Result<Self> {
        let adjoint = adjoint(&d)?;
        let unit = unit.or_else(|| d.constant_diagonal());
        let flags = classify(&d, unit);
        Ok(IloModel {
            d,
            adjoint,
            unit,
            flags,
            relabeling: None,
        })
    }

    pub fn order(&self) -> usize {
        self.d.order()
    }

    pub fn d(&self) -> &OpTable {
        &self.d
    }

    pub fn adjoint(&self) -> &OpTable {
        &self.adjoint
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.d.get(x, y)
    }

    #[inline]
    pub fn adj(&self, x: usize, y: usize) -> usize {
        self.adjoint.get(x, y)
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn flags(&self) -> &ClassSet {
        &self.flags
    }

    pub fn has(&self, class: StructureClass) -> bool {
        self.flags.contains(&class)
    }

    /// Permutation applied on ingestion to bring an explicit unit to `0`.
    pub fn relabeling(&self) -> Option<&[usize]> {
        self.relabeling.as_deref()
    }

    /// `(X, d, o)^op = (X, o^op, d^op)`. The unit, if any, is carried over.
    pub fn dual(&self) -> IloModel {
        let d = self.adjoint.transpose();
        let adjoint = self.d.transpose();
        let flags = classify(&d, self.unit);
        IloModel {
            d,
            adjoint,
            unit: self.unit,
            flags,
            relabeling: None,
        }
    }

    /// The isomorphic copy transported along `perm` (see [`OpTable::relabel`]).
    pub fn relabeled(&self, perm: &[usize]) -> IloModel {
        let d = self.d.relabel(perm);
        let adjoint = self.adjoint.relabel(perm);
        let unit = self.unit.map(|u| perm[u]);
        let flags = classify(&d, unit);
        IloModel {
            d,
            adjoint,
            unit,
            flags,
            relabeling: None,
        }
    }

    /// Axioms i) `d(x o z, x) = z` and ii) `x o d(z, x) = z` at every pair.
    pub fn axioms_hold(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| {
            (0..n).all(|z| self.op(self.adj(x, z), x) == z && self.adj(x, self.op(z, x)) == z)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use StructureClass::*;

    #[test]
    fn first_projection_has_second_projection_adjoint() {
        let d = OpTable::from_rows(vec![vec![0, 0], vec![1, 1]]).unwrap();
        assert_eq!(adjoint(&d).unwrap(), OpTable::from_rows(vec![vec![0, 1], vec![0, 1]]).unwrap());
    }

    #[test]
    fn group_difference_has_sum_adjoint() {
        let d = OpTable::from_fn(3, |x, y| (3 + x - y) % 3);
        assert_eq!(adjoint(&d).unwrap(), OpTable::from_fn(3, |x, y| (x + y) % 3));
    }

    #[test]
    fn constant_table_is_not_ilo() {
        let d = OpTable::from_fn(2, |_, _| 0);
        assert_eq!(adjoint(&d), Err(Error::NonInvertibleTranslation(0)));
    }

    #[test]
    fn explicit_unit_is_moved_to_zero() {
        // Z2 written with unit 1.
        let d = OpTable::from_rows(vec![vec![1, 0], vec![0, 1]]).unwrap();
        let m = IloModel::new(d, Some(1)).unwrap();
        assert_eq!(m.unit(), Some(0));
        assert_eq!(m.relabeling(), Some(&[1, 0][..]));
        assert_eq!(m.d(), &OpTable::from_fn(2, |x, y| (x + y) % 2));
        assert!(m.has(Hypersubtraction));
    }

    #[test]
    fn dual_of_group_ilo() {
        let m = IloModel::new(OpTable::from_fn(3, |x, y| (3 + x - y) % 3), None).unwrap();
        let dual = m.dual();
        assert_eq!(dual.d(), &OpTable::from_fn(3, |x, y| (x + y) % 3));
        assert_eq!(dual.adjoint(), &OpTable::from_fn(3, |x, y| (3 + y - x) % 3));
        assert!(dual.axioms_hold());
        assert_eq!(dual.dual(), m);
    }

    #[test]
    fn trivial_quandle_is_self_dual() {
        let m = IloModel::new(OpTable::from_fn(2, |x, _| x), None).unwrap();
        assert!(m.has(Involutive));
        assert_eq!(m.dual().d(), m.d());
    }
}
