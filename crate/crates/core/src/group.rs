//! Finite groups given by multiplication tables, the fixture catalog, and
//! brute-force homomorphism enumeration.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::table::{check_map, swap_to_zero, OpTable};

/// A finite group with unit `0` after normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    mult: OpTable,
    unit: usize,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Validates the group axioms and moves the unit to `0`.
    pub fn from_table(mult: OpTable) -> Result<Self> {
        let unit = find_unit(&mult).ok_or(Error::NotGroup("no two-sided unit"))?;
        let mult = if unit == 0 {
            mult
        } else {
            mult.relabel(&swap_to_zero(mult.order(), unit))
        };
        FiniteGroup::with_unit(mult, 0)
    }

    /// Validates the group axioms keeping the labeling as given.
    pub(crate) fn with_unit(mult: OpTable, unit: usize) -> Result<Self> {
        let n = mult.order();
        if !(0..n).all(|x| mult.get(unit, x) == x && mult.get(x, unit) == x) {
            return Err(Error::NotGroup("no two-sided unit"));
        }
        if !mult.is_associative() {
            return Err(Error::NotGroup("not associative"));
        }
        let inv = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| mult.get(x, y) == unit && mult.get(y, x) == unit)
                    .ok_or(Error::NotGroup("missing inverse"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroup { mult, unit, inv })
    }

    pub fn order(&self) -> usize {
        self.mult.order()
    }

    pub fn mult(&self) -> &OpTable {
        &self.mult
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.mult.get(a, b)
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inv
    }

    pub fn is_abelian(&self) -> bool {
        self.mult.is_commutative()
    }

    /// Every element squares to the unit.
    pub fn has_exponent_two(&self) -> bool {
        (0..self.order()).all(|x| self.op(x, x) == self.unit)
    }

    /// The opposite group `a *op b = b * a`.
    pub fn opposite(&self) -> FiniteGroup {
        FiniteGroup {
            mult: self.mult.transpose(),
            unit: self.unit,
            inv: self.inv.clone(),
        }
    }

    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.order();
        FiniteGroup {
            mult: self.mult.product(&other.mult),
            unit: self.unit * m + other.unit,
            inv: (0..self.order() * m)
                .map(|p| self.inv(p / m) * m + other.inv(p % m))
                .collect(),
        }
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.unit] = true;
        let mut queue = vec![self.unit];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.op(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        (0..self.order()).filter(|&x| seen[x]).collect()
    }

    /// A generating set built greedily in ascending element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.generated(&gens);
        for x in 0..self.order() {
            if span.binary_search(&x).is_err() {
                gens.push(x);
                span = self.generated(&gens);
            }
        }
        gens
    }

    pub fn is_homomorphism_to(&self, target: &FiniteGroup, h: &[usize]) -> bool {
        check_map(self.order(), target.order(), h).is_ok()
            && self.mult.homomorphism_violation(&target.mult, h).is_none()
    }
}

pub(crate) fn find_unit(mult: &OpTable) -> Option<usize> {
    let n = mult.order();
    (0..n).find(|&e| (0..n).all(|x| mult.get(e, x) == x && mult.get(x, e) == x))
}

/// All homomorphisms `source -> target`, ordered lexicographically by the
/// images of `source.generators()`.
pub fn homomorphisms(source: &FiniteGroup, target: &FiniteGroup) -> Vec<Vec<usize>> {
    let gens = source.generators();
    if gens.is_empty() {
        return vec![vec![target.unit(); source.order()]];
    }
    let mut homs = Vec::new();
    for images in (0..gens.len()).map(|_| 0..target.order()).multi_cartesian_product() {
        if let Some(h) = extend_on_generators(source, target, &gens, &images) {
            homs.push(h);
        }
    }
    homs
}

fn extend_on_generators(
    source: &FiniteGroup,
    target: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let mut h = vec![UNSET; source.order()];
    h[source.unit()] = target.unit();
    let mut queue = vec![source.unit()];
    while let Some(x) = queue.pop() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = source.op(x, g);
            let hy = target.op(h[x], img);
            if h[y] == UNSET {
                h[y] = hy;
                queue.push(y);
            } else if h[y] != hy {
                return None;
            }
        }
    }
    source.is_homomorphism_to(target, &h).then_some(h)
}

/// A permutation group with its elements listed identity-first, then in
/// lexicographic order of the image arrays.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    pub group: FiniteGroup,
    pub perms: Vec<Vec<usize>>,
}

impl PermutationGroup {
    /// `(p * q)(i) = p(q(i))`.
    pub fn from_perms(mut perms: Vec<Vec<usize>>) -> Self {
        perms.sort();
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("not closed");
        let mult = OpTable::from_fn(perms.len(), |a, b| {
            let composed: Vec<usize> = perms[b].iter().map(|&i| perms[a][i]).collect();
            index(&composed)
        });
        let group = FiniteGroup::from_table(mult).expect("permutations form a group");
        PermutationGroup { group, perms }
    }

    pub fn symmetric(degree: usize) -> Self {
        PermutationGroup::from_perms((0..degree).permutations(degree).collect())
    }

    pub fn alternating(degree: usize) -> Self {
        let even = (0..degree)
            .permutations(degree)
            .filter(|p| {
                let inversions = (0..degree)
                    .flat_map(|i| (i + 1..degree).map(move |j| (i, j)))
                    .filter(|&(i, j)| p[i] > p[j])
                    .count();
                inversions % 2 == 0
            })
            .collect();
        PermutationGroup::from_perms(even)
    }

    /// Element index of the permutation given by its image array.
    pub fn element(&self, perm: &[usize]) -> Option<usize> {
        self.perms.iter().position(|p| p == perm)
    }

    /// Element index of a transposition on `0..degree`.
    pub fn transposition(&self, a: usize, b: usize) -> Option<usize> {
        let mut p: Vec<usize> = (0..self.perms[0].len()).collect();
        p.swap(a, b);
        self.element(&p)
    }
}

pub fn cyclic(n: usize) -> FiniteGroup {
    FiniteGroup::with_unit(OpTable::from_fn(n, |a, b| (a + b) % n), 0).expect("cyclic group")
}

/// Dihedral group of order `2m`: element `i + m*j` is `r^i s^j`.
pub fn dihedral(m: usize) -> FiniteGroup {
    let mult = OpTable::from_fn(2 * m, |x, y| {
        let (a, b) = (x % m, x / m);
        let (c, d) = (y % m, y / m);
        let rot = if b == 0 { (a + c) % m } else { (a + m - c) % m };
        rot + m * ((b + d) % 2)
    });
    FiniteGroup::with_unit(mult, 0).expect("dihedral group")
}

/// Quaternion group; index `2u + s` is `(-1)^s` times unit `u` of `1, i, j, k`.
pub fn quaternion() -> FiniteGroup {
    // unit products among 1, i, j, k as (sign, unit)
    const UNITS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mult = OpTable::from_fn(8, |x, y| {
        let (sign, u) = UNITS[x / 2][y / 2];
        2 * u + (sign + x % 2 + y % 2) % 2
    });
    FiniteGroup::with_unit(mult, 0).expect("quaternion group")
}

/// The fixture catalog, in a fixed order.
pub fn catalog() -> Vec<(String, FiniteGroup)> {
    let mut groups: Vec<(String, FiniteGroup)> =
        (1..=16).map(|n| (format!("Z{n}"), cyclic(n))).collect();
    groups.push(("Z2xZ2".into(), cyclic(2).product(&cyclic(2))));
    groups.push(("Z2xZ4".into(), cyclic(2).product(&cyclic(4))));
    for m in 3..=6 {
        groups.push((format!("D{m}"), dihedral(m)));
    }
    groups.push(("Q8".into(), quaternion()));
    groups.push(("S3".into(), PermutationGroup::symmetric(3).group));
    groups.push(("A4".into(), PermutationGroup::alternating(4).group));
    groups
}

/// Catalog entries of order at most `max_order`.
pub fn catalog_up_to(max_order: usize) -> Vec<(String, FiniteGroup)> {
    catalog().into_iter().filter(|(_, g)| g.order() <= max_order).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_groups_are_groups() {
        for (name, g) in catalog() {
            let again = FiniteGroup::with_unit(g.mult().clone(), 0);
            assert!(again.is_ok(), "{name}");
            assert_eq!(g.unit(), 0, "{name}");
        }
    }

    #[test]
    fn catalog_orders_and_commutativity() {
        let expect = [
            ("D3", 6, false),
            ("D4", 8, false),
            ("D6", 12, false),
            ("Q8", 8, false),
            ("S3", 6, false),
            ("A4", 12, false),
            ("Z2xZ4", 8, true),
        ];
        let cat = catalog();
        for (name, order, abelian) in expect {
            let g = &cat.iter().find(|(n, _)| n == name).unwrap().1;
            assert_eq!(g.order(), order, "{name}");
            assert_eq!(g.is_abelian(), abelian, "{name}");
        }
    }

    #[test]
    fn quaternion_relations() {
        let q = quaternion();
        let (minus_one, i, j, k) = (1, 2, 4, 6);
        assert_eq!(q.op(i, i), minus_one);
        assert_eq!(q.op(i, j), k);
        assert_eq!(q.op(j, i), k + 1);
        assert_eq!(q.op(q.op(i, j), k), minus_one);
    }

    #[test]
    fn unit_is_normalized_to_zero() {
        // Z2 with unit 1
        let g = FiniteGroup::from_table(OpTable::from_rows(vec![vec![1, 0], vec![0, 1]]).unwrap()).unwrap();
        assert_eq!(g.unit(), 0);
        assert_eq!(g.mult(), cyclic(2).mult());
    }

    #[test]
    fn rejects_non_groups() {
        let t = OpTable::from_fn(3, |a, _| a);
        assert!(FiniteGroup::from_table(t).is_err());
    }

    #[test]
    fn hom_counts_match_gcd() {
        // |Hom(Z_m, Z_n)| = gcd(m, n)
        for m in 1..=8usize {
            for n in 1..=8usize {
                let gcd = (1..=m.min(n)).rev().find(|d| m % d == 0 && n % d == 0).unwrap();
                assert_eq!(homomorphisms(&cyclic(m), &cyclic(n)).len(), gcd, "{m} {n}");
            }
        }
    }

    #[test]
    fn s3_has_ten_endomorphisms() {
        // 6 automorphisms, 3 onto Z2-images, 1 trivial
        let s3 = PermutationGroup::symmetric(3).group;
        assert_eq!(homomorphisms(&s3, &s3).len(), 10);
    }

    #[test]
    fn generators_generate() {
        for (name, g) in catalog() {
            assert_eq!(g.generated(&g.generators()).len(), g.order(), "{name}");
        }
    }
}
