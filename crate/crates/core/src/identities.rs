//! Exhaustive checks of the equational equivalences satisfied by ILO
//! settings.

use serde::Serialize;

use crate::classes::StructureClass;
use crate::error::{Error, Result};
use crate::model::IloModel;
use crate::table::TernaryTable;

fn all_pairs(n: usize, mut p: impl FnMut(usize, usize) -> bool) -> bool {
    (0..n).all(|x| (0..n).all(|y| p(x, y)))
}

fn all_triples(n: usize, mut p: impl FnMut(usize, usize, usize) -> bool) -> bool {
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| p(x, y, z))))
}

/// Truth values of the four conditions equivalent to associativity of `o`:
///
/// 1. `o` is associative;
/// 2. `d(y,z) o d(x,y) = d(x,z)`;
/// 3. `d(d(x,z), d(y,z)) = d(x,y)`;
/// 4. `d(x,y) o t = d(x o t, y)`.
pub fn check_associativity_equivalence(m: &IloModel) -> [bool; 4] {
    let n = m.order();
    let d = |a, b| m.op(a, b);
    let o = |a, b| m.adj(a, b);
    [
        m.adjoint().is_associative(),
        all_triples(n, |x, y, z| o(d(y, z), d(x, y)) == d(x, z)),
        all_triples(n, |x, y, z| d(d(x, z), d(y, z)) == d(x, y)),
        all_triples(n, |x, y, t| o(d(x, y), t) == d(o(x, t), y)),
    ]
}

/// Truth values of the three conditions equivalent to commutativity of `o`:
///
/// 1. `o` is commutative;
/// 2. `x = d(x o y, y)`;
/// 3. `d(y, d(y, x)) = x`.
pub fn check_commutativity_equivalence(m: &IloModel) -> [bool; 3] {
    let n = m.order();
    [
        m.adjoint().is_commutative(),
        all_pairs(n, |x, y| m.op(m.adj(x, y), y) == x),
        all_pairs(n, |x, y| m.op(y, m.op(y, x)) == x),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SlominskiReport {
    /// `x o 1 = x`
    pub right_unit: bool,
    /// `1 o d(x, 1) = x`
    pub unit_recovers: bool,
    /// `x o d(1, x) = 1`
    pub right_inverse: bool,
    /// `x = y <=> d(x, y) = 1`
    pub separates: bool,
}

impl SlominskiReport {
    pub fn all(&self) -> bool {
        self.right_unit && self.unit_recovers && self.right_inverse && self.separates
    }
}

pub fn check_slominski_identities(m: &IloModel) -> Result<SlominskiReport> {
    let unit = match m.unit() {
        Some(u) if m.has(StructureClass::Slominski) => u,
        _ => return Err(Error::NotSlominski),
    };
    let n = m.order();
    Ok(SlominskiReport {
        right_unit: (0..n).all(|x| m.adj(x, unit) == x),
        unit_recovers: (0..n).all(|x| m.adj(unit, m.op(x, unit)) == x),
        right_inverse: (0..n).all(|x| m.adj(x, m.op(unit, x)) == unit),
        separates: all_pairs(n, |x, y| (x == y) == (m.op(x, y) == unit)),
    })
}

/// `p(x, y, z) = x o d(z, y)`, the Mal'tsev operation of a Slominski
/// setting.
pub fn slominski_maltsev(m: &IloModel) -> Result<TernaryTable> {
    if !m.has(StructureClass::Slominski) {
        return Err(Error::NotSlominski);
    }
    Ok(TernaryTable::from_fn(m.order(), |x, y, z| m.adj(x, m.op(z, y))))
}

pub fn is_maltsev(p: &TernaryTable) -> bool {
    let n = p.order();
    all_pairs(n, |x, z| p.get(x, x, z) == z && p.get(z, x, x) == z)
}
