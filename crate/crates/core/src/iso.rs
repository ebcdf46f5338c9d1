//! Isomorphism search and canonical forms.
//!
//! Canonical forms are the lexicographically least relabeled table over
//! all bijections; the unit, when present, travels with the relabeling and
//! breaks ties after the table.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::classes::{classify, ClassSet};
use crate::model::IloModel;
use crate::table::{cycle_type, invert_permutation, is_permutation, OpTable};

/// A bijection `map[x]` from one carrier onto another preserving `d` (and
/// therefore the adjoint) and the unit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Isomorphism {
    pub map: Vec<usize>,
}

/// Cheap isomorphism invariants. Differing invariants rule out an
/// isomorphism; equal invariants decide nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Invariants {
    flags: ClassSet,
    idempotents: usize,
    columns: Vec<Vec<usize>>,
    has_unit: bool,
}

fn invariants(d: &OpTable, unit: Option<usize>) -> Invariants {
    let n = d.order();
    let mut columns: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            let col = d.column(x);
            if is_permutation(&col) {
                cycle_type(&col)
            } else {
                // marker that cannot collide with a cycle type of length n
                vec![0, col.iter().unique().count()]
            }
        })
        .collect();
    columns.sort();
    Invariants {
        flags: classify(d, unit),
        idempotents: (0..n).filter(|&x| d.get(x, x) == x).count(),
        columns,
        has_unit: unit.is_some(),
    }
}

/// First isomorphism `a -> b` in lexicographic backtracking order.
pub fn find_isomorphism(
    a: &OpTable,
    unit_a: Option<usize>,
    b: &OpTable,
    unit_b: Option<usize>,
) -> Option<Vec<usize>> {
    let n = a.order();
    if n != b.order() || invariants(a, unit_a) != invariants(b, unit_b) {
        return None;
    }
    let mut search = IsoSearch {
        a,
        b,
        units: unit_a.zip(unit_b),
        map: vec![None; n],
        preimage: vec![None; n],
    };
    search.extend(0).then(|| search.map.into_iter().map(Option::unwrap).collect())
}

struct IsoSearch<'t> {
    a: &'t OpTable,
    b: &'t OpTable,
    units: Option<(usize, usize)>,
    map: Vec<Option<usize>>,
    preimage: Vec<Option<usize>>,
}

impl IsoSearch<'_> {
    fn extend(&mut self, x: usize) -> bool {
        let n = self.a.order();
        if x == n {
            return true;
        }
        for y in 0..n {
            if self.preimage[y].is_some() {
                continue;
            }
            if let Some((ua, ub)) = self.units {
                if (x == ua) != (y == ub) {
                    continue;
                }
            }
            self.map[x] = Some(y);
            self.preimage[y] = Some(x);
            if self.consistent(x) && self.extend(x + 1) {
                return true;
            }
            self.map[x] = None;
            self.preimage[y] = None;
        }
        false
    }

    /// Checks every product among elements `0..=x` against the partial map.
    fn consistent(&self, x: usize) -> bool {
        for p in 0..=x {
            for q in 0..=x {
                if p != x && q != x {
                    continue;
                }
                let (mp, mq) = (self.map[p].unwrap(), self.map[q].unwrap());
                let target = self.b.get(mp, mq);
                let c = self.a.get(p, q);
                match self.map[c] {
                    Some(mc) if mc != target => return false,
                    None if self.preimage[target].is_some() => return false,
                    _ => {}
                }
            }
        }
        // products of earlier elements landing on x
        for p in 0..x {
            for q in 0..x {
                if self.a.get(p, q) == x {
                    let target = self.b.get(self.map[p].unwrap(), self.map[q].unwrap());
                    if self.map[x] != Some(target) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

pub fn are_isomorphic(a: &IloModel, b: &IloModel) -> Option<Isomorphism> {
    find_isomorphism(a.d(), a.unit(), b.d(), b.unit()).map(|map| Isomorphism { map })
}

/// Least relabeling of `(d, unit)` and the bijection producing it.
pub fn canonical_form(d: &OpTable, unit: Option<usize>) -> (OpTable, Option<usize>, Vec<usize>) {
    let n = d.order();
    let mut best: Option<(Vec<usize>, Option<usize>, Vec<usize>)> = None;
    for new_to_old in (0..n).permutations(n) {
        let old_to_new = invert_permutation(&new_to_old);
        let relabeled_unit = unit.map(|u| old_to_new[u]);
        let cell = |i: usize, j: usize| old_to_new[d.get(new_to_old[i], new_to_old[j])];
        let better = match &best {
            None => true,
            Some((cells, best_unit, _)) => {
                let mut ordering = std::cmp::Ordering::Equal;
                'scan: for i in 0..n {
                    for j in 0..n {
                        ordering = cell(i, j).cmp(&cells[i * n + j]);
                        if ordering.is_ne() {
                            break 'scan;
                        }
                    }
                }
                ordering.then(relabeled_unit.cmp(best_unit)).is_lt()
            }
        };
        if better {
            let cells = (0..n * n).map(|k| cell(k / n, k % n)).collect();
            best = Some((cells, relabeled_unit, old_to_new));
        }
    }
    let (cells, unit, perm) = best.expect("carrier is nonempty");
    (OpTable::from_cells(n, cells), unit, perm)
}

/// The canonical representative of the isomorphism class of `m`.
pub fn canonical_model(m: &IloModel) -> IloModel {
    let (_, _, perm) = canonical_form(m.d(), m.unit());
    m.relabeled(&perm)
}

/// Whether `(d, unit)` is its own canonical form.
pub fn is_canonical(d: &OpTable, unit: Option<usize>) -> bool {
    let (c, u, _) = canonical_form(d, unit);
    &c == d && u == unit
}

/// Partitions `models` into isomorphism classes. Each class is reported by
/// its canonical representative and its size; classes are sorted by
/// representative table.
pub fn iso_classes(models: &[IloModel]) -> Vec<(IloModel, usize)> {
    let mut classes: BTreeMap<(OpTable, Option<usize>), (IloModel, usize)> = BTreeMap::new();
    for m in models {
        let (_, _, perm) = canonical_form(m.d(), m.unit());
        let rep = m.relabeled(&perm);
        classes
            .entry((rep.d().clone(), rep.unit()))
            .or_insert((rep, 0))
            .1 += 1;
    }
    classes.into_values().collect()
}
