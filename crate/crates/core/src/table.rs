//! Cayley tables on the carrier `{0..n-1}`.
//!
//! Every structure in the crate is ultimately a set of [`OpTable`]s. The
//! row index is the left argument: `table.get(a, b)` is `op(a, b)`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A binary operation on `{0..order-1}` stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpTable {
    order: usize,
    cells: Vec<usize>,
}

impl OpTable {
    /// Builds a table from nested rows, validating shape and range.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut cells = Vec::with_capacity(order * order);
        for (row, values) in rows.into_iter().enumerate() {
            if values.len() != order {
                return Err(Error::NotSquare {
                    order,
                    rows: values.len(),
                });
            }
            for (col, value) in values.into_iter().enumerate() {
                if value >= order {
                    return Err(Error::EntryOutOfRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
                cells.push(value);
            }
        }
        Ok(OpTable { order, cells })
    }

    /// Builds a table by evaluating `op` at every pair. Panics if `op`
    /// leaves the carrier.
    pub fn from_fn(order: usize, mut op: impl FnMut(usize, usize) -> usize) -> Self {
        assert!(order > 0, "order must be positive");
        let mut cells = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let v = op(a, b);
                assert!(v < order, "op({a}, {b}) = {v} leaves carrier of order {order}");
                cells.push(v);
            }
        }
        OpTable { order, cells }
    }

    pub(crate) fn from_cells(order: usize, cells: Vec<usize>) -> Self {
        debug_assert_eq!(cells.len(), order * order);
        OpTable { order, cells }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.order + b]
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.cells[a * self.order..(a + 1) * self.order]
    }

    pub fn column(&self, b: usize) -> Vec<usize> {
        (0..self.order).map(|a| self.get(a, b)).collect()
    }

    /// `op^op(a, b) = op(b, a)`.
    pub fn transpose(&self) -> Self {
        OpTable::from_fn(self.order, |a, b| self.get(b, a))
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.order).all(|x| self.get(x, x) == x)
    }

    /// The common value of `op(x, x)` if the diagonal is constant.
    pub fn constant_diagonal(&self) -> Option<usize> {
        let c = self.get(0, 0);
        (1..self.order).all(|x| self.get(x, x) == c).then_some(c)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.get(a, b) == self.get(b, a)))
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.get(a, b);
                (0..n).all(|c| self.get(ab, c) == self.get(a, self.get(b, c)))
            })
        })
    }

    /// Every column map `z -> op(z, x)` is a permutation.
    pub fn columns_are_permutations(&self) -> bool {
        (0..self.order).all(|x| self.first_non_injective_column_at(x).is_none())
    }

    /// Every row map `y -> op(x, y)` is a permutation.
    pub fn rows_are_permutations(&self) -> bool {
        (0..self.order).all(|x| is_permutation(self.row(x)))
    }

    fn first_non_injective_column_at(&self, x: usize) -> Option<usize> {
        let mut seen = vec![false; self.order];
        for z in 0..self.order {
            let v = self.get(z, x);
            if seen[v] {
                return Some(x);
            }
            seen[v] = true;
        }
        None
    }

    /// First `x` whose column map is not injective.
    pub fn first_bad_column(&self) -> Option<usize> {
        (0..self.order).find_map(|x| self.first_non_injective_column_at(x))
    }

    /// Transport the operation along the bijection `perm`:
    /// the result satisfies `r(perm[a], perm[b]) = perm[op(a, b)]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.order;
        debug_assert!(perm.len() == n && is_permutation(perm));
        let mut cells = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                cells[perm[a] * n + perm[b]] = perm[self.get(a, b)];
            }
        }
        OpTable::from_cells(n, cells)
    }

    /// Checks that the element map `h` from `self` to `target` preserves the
    /// operation. Returns the first offending pair otherwise.
    pub fn homomorphism_violation(&self, target: &OpTable, h: &[usize]) -> Option<(usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                if h[self.get(a, b)] != target.get(h[a], h[b]) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Componentwise operation on the product carrier, pairing `(i, j)` with
    /// `i * other.order() + j`.
    pub fn product(&self, other: &OpTable) -> Self {
        let m = other.order;
        OpTable::from_fn(self.order * m, |p, q| {
            self.get(p / m, q / m) * m + other.get(p % m, q % m)
        })
    }

    /// Restriction to `subset` (which must be closed), re-indexed in the
    /// order the subset is given.
    pub fn restrict(&self, subset: &[usize]) -> Self {
        let index = inverse_index(self.order, subset);
        OpTable::from_fn(subset.len(), |a, b| {
            index[self.get(subset[a], subset[b])].expect("subset is not closed")
        })
    }
}

impl fmt::Debug for OpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.cells.chunks(self.order)).finish()
    }
}

impl Serialize for OpTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for OpTable {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<usize>>::deserialize(deserializer)?;
        OpTable::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// A ternary operation, `get(x, y, z)` stored with `x` slowest.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TernaryTable {
    order: usize,
    cells: Vec<usize>,
}

impl TernaryTable {
    pub fn from_fn(order: usize, mut op: impl FnMut(usize, usize, usize) -> usize) -> Self {
        let mut cells = Vec::with_capacity(order * order * order);
        for x in 0..order {
            for y in 0..order {
                for z in 0..order {
                    cells.push(op(x, y, z));
                }
            }
        }
        TernaryTable { order, cells }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize, z: usize) -> usize {
        self.cells[(x * self.order + y) * self.order + z]
    }
}

impl fmt::Debug for TernaryTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TernaryTable(order {})", self.order)
    }
}

pub fn is_permutation(values: &[usize]) -> bool {
    let mut seen = vec![false; values.len()];
    values.iter().all(|&v| v < values.len() && !std::mem::replace(&mut seen[v], true))
}

pub fn invert_permutation(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// Sorted lengths of the cycles of a permutation.
pub fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    lengths
}

/// `index[x] = Some(i)` when `subset[i] == x`.
pub(crate) fn inverse_index(order: usize, subset: &[usize]) -> Vec<Option<usize>> {
    let mut index = vec![None; order];
    for (i, &x) in subset.iter().enumerate() {
        index[x] = Some(i);
    }
    index
}

/// The transposition swapping `0` and `u` (identity when `u == 0`).
pub(crate) fn swap_to_zero(order: usize, u: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..order).collect();
    perm.swap(0, u);
    perm
}

pub(crate) fn check_element(order: usize, element: usize) -> Result<()> {
    if element < order {
        Ok(())
    } else {
        Err(Error::ElementOutOfRange { element, order })
    }
}

pub(crate) fn check_map(domain: usize, codomain: usize, map: &[usize]) -> Result<()> {
    if map.len() != domain {
        return Err(Error::MapLength {
            expected: domain,
            got: map.len(),
        });
    }
    map.iter().try_for_each(|&v| check_element(codomain, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_ragged_and_out_of_range() {
        assert_eq!(
            OpTable::from_rows(vec![vec![0, 1], vec![0]]),
            Err(Error::NotSquare { order: 2, rows: 1 })
        );
        assert!(matches!(
            OpTable::from_rows(vec![vec![0, 2], vec![0, 1]]),
            Err(Error::EntryOutOfRange { value: 2, .. })
        ));
        assert_eq!(OpTable::from_rows(vec![]), Err(Error::EmptyCarrier));
    }

    #[test]
    fn relabel_transports_operation() {
        let t = OpTable::from_fn(3, |a, b| (a + 2 * b) % 3);
        let perm = [2, 0, 1];
        let r = t.relabel(&perm);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(r.get(perm[a], perm[b]), perm[t.get(a, b)]);
            }
        }
    }

    #[test]
    fn product_pairs_lexicographically() {
        let a = OpTable::from_fn(2, |x, y| (x + y) % 2);
        let b = OpTable::from_fn(3, |x, y| (x + y) % 3);
        let p = a.product(&b);
        // (1,2) + (1,2) = (0,1)
        assert_eq!(p.get(5, 5), 1);
        assert_eq!(p.order(), 6);
    }

    #[test]
    fn cycle_types() {
        assert_eq!(cycle_type(&[1, 0, 2]), vec![1, 2]);
        assert_eq!(cycle_type(&[1, 2, 0]), vec![3]);
    }
}
