//! Named families of models: group-derived hypersubtractions, Alexander,
//! conjugation and trivial quandles, products, and subalgebra closure.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::model::IloModel;
use crate::table::{check_element, check_map, is_permutation, OpTable};

/// `d(x, y) = y^-1 x` with adjoint the group law.
pub fn from_group(g: &FiniteGroup) -> IloModel {
    let d = OpTable::from_fn(g.order(), |x, y| g.op(g.inv(y), x));
    IloModel::build(d, Some(g.unit())).expect("group translations are invertible")
}

/// An abelian group with an automorphism `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderDatum {
    group: FiniteGroup,
    f: Vec<usize>,
}

impl AlexanderDatum {
    pub fn new(group: FiniteGroup, f: Vec<usize>) -> Result<Self> {
        if !group.is_abelian() {
            return Err(Error::NotAbelian);
        }
        check_map(group.order(), group.order(), &f)?;
        if !is_permutation(&f) || !group.is_homomorphism_to(&group, &f) {
            return Err(Error::NotAutomorphism);
        }
        Ok(AlexanderDatum { group, f })
    }

    /// `f(x) = k x` on the cyclic group `Z_n`.
    pub fn cyclic_multiplier(n: usize, k: usize) -> Result<Self> {
        AlexanderDatum::new(crate::group::cyclic(n), (0..n).map(|x| (k * x) % n).collect())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn f(&self) -> &[usize] {
        &self.f
    }

    /// `x |> y = f(x) + y - f(y)`.
    pub fn triangle(&self, x: usize, y: usize) -> usize {
        let g = &self.group;
        g.op(g.op(self.f[x], y), g.inv(self.f[y]))
    }

    /// `Id - f` is a bijection.
    pub fn id_minus_f_bijective(&self) -> bool {
        let g = &self.group;
        let map: Vec<usize> = (0..g.order()).map(|x| g.op(x, g.inv(self.f[x]))).collect();
        is_permutation(&map)
    }
}

/// The Alexander quandle of `datum`, with adjoint `x o y = y |>_{f^-1} x`.
pub fn alexander(datum: &AlexanderDatum) -> IloModel {
    let n = datum.group.order();
    let d = OpTable::from_fn(n, |x, y| datum.triangle(x, y));
    let model = IloModel::build(d, None).expect("Alexander quandles are ILO");
    let g = &datum.group;
    let mut f_inv = vec![0; n];
    for (x, &fx) in datum.f.iter().enumerate() {
        f_inv[fx] = x;
    }
    let inverse_triangle = |x: usize, y: usize| g.op(g.op(f_inv[x], y), g.inv(f_inv[y]));
    debug_assert!((0..n).all(|x| (0..n).all(|y| model.adj(x, y) == inverse_triangle(y, x))));
    model
}

/// `x |> y = y x y^-1`.
pub fn conjugation_quandle(g: &FiniteGroup) -> IloModel {
    let d = OpTable::from_fn(g.order(), |x, y| g.op(g.op(y, x), g.inv(y)));
    IloModel::build(d, None).expect("conjugation is invertible")
}

/// First projection on `n` elements.
pub fn trivial_quandle(n: usize) -> IloModel {
    IloModel::build(OpTable::from_fn(n, |x, _| x), None).expect("projection is ILO")
}

/// Componentwise product on pairs indexed `i * |b| + j`.
pub fn product(a: &IloModel, b: &IloModel) -> IloModel {
    let m = b.order();
    let unit = match (a.unit(), b.unit()) {
        (Some(u), Some(v)) => Some(u * m + v),
        _ => None,
    };
    IloModel::build(a.d().product(b.d()), unit).expect("products of ILO settings are ILO")
}

/// Smallest subset containing `seed` and the unit (if any) that is closed
/// under `d` and its adjoint. Returned in ascending order.
pub fn subalgebra_closure(m: &IloModel, seed: &[usize]) -> Result<Vec<usize>> {
    let mut members = closure_trace(m, seed)?;
    members.sort_unstable();
    Ok(members)
}

/// The elements of [`subalgebra_closure`] in the order they are reached:
/// sorted seed (plus unit) first, then products as the work list is drained.
pub fn closure_trace(m: &IloModel, seed: &[usize]) -> Result<Vec<usize>> {
    let n = m.order();
    for &x in seed {
        check_element(n, x)?;
    }
    let mut inside = vec![false; n];
    let mut members = Vec::new();
    let add = |x: usize, inside: &mut Vec<bool>, members: &mut Vec<usize>| {
        if !inside[x] {
            inside[x] = true;
            members.push(x);
        }
    };
    let mut start: Vec<usize> = seed.to_vec();
    start.extend(m.unit());
    start.sort_unstable();
    for x in start {
        add(x, &mut inside, &mut members);
    }
    // members only grows; every pair is visited once
    let mut done = 0;
    while done < members.len() {
        let x = members[done];
        for i in 0..=done {
            let y = members[i];
            for v in [m.op(x, y), m.op(y, x), m.adj(x, y), m.adj(y, x)] {
                add(v, &mut inside, &mut members);
            }
        }
        done += 1;
    }
    Ok(members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::StructureClass::*;
    use crate::group::{cyclic, PermutationGroup};

    #[test]
    fn from_group_tables() {
        assert_eq!(
            from_group(&cyclic(2)).d(),
            &OpTable::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap()
        );
        assert_eq!(from_group(&cyclic(3)).op(2, 1), 1);
        let s3 = from_group(&PermutationGroup::symmetric(3).group);
        assert!(s3.has(Hypersubtraction) && s3.has(Latin) && !s3.has(Symmetric));
    }

    #[test]
    fn alexander_examples() {
        let z5 = alexander(&AlexanderDatum::cyclic_multiplier(5, 2).unwrap());
        assert_eq!(z5.op(3, 1), 0);
        let r3 = alexander(&AlexanderDatum::cyclic_multiplier(3, 2).unwrap());
        assert_eq!(r3.d(), &OpTable::from_fn(3, |x, y| (2 * x + 3 - y) % 3));
        assert!(r3.has(Latin) && r3.has(Autonomous) && r3.has(Quandle));
        assert_eq!(AlexanderDatum::cyclic_multiplier(4, 2), Err(Error::NotAutomorphism));
    }

    #[test]
    fn alexander_rejects_nonabelian() {
        let s3 = PermutationGroup::symmetric(3).group;
        let id: Vec<usize> = (0..6).collect();
        assert_eq!(AlexanderDatum::new(s3, id), Err(Error::NotAbelian));
    }

    #[test]
    fn conjugation_in_s3() {
        let s3 = PermutationGroup::symmetric(3);
        let q = conjugation_quandle(&s3.group);
        let t = |a, b| s3.transposition(a, b).unwrap();
        // (12) |> (13) = (23), with points 1,2,3 written 0,1,2
        assert_eq!(q.op(t(0, 1), t(0, 2)), t(1, 2));
        assert!(q.has(Quandle));
        assert_eq!(conjugation_quandle(&cyclic(4)).d(), trivial_quandle(4).d());
        assert_eq!(conjugation_quandle(&cyclic(1)).d(), trivial_quandle(1).d());
    }

    #[test]
    fn trivial_quandles() {
        assert_eq!(trivial_quandle(2).d(), &OpTable::from_rows(vec![vec![0, 0], vec![1, 1]]).unwrap());
        assert!(trivial_quandle(1).has(Latin));
        assert!(!trivial_quandle(3).has(Latin));
    }

    #[test]
    fn products() {
        let t = product(&trivial_quandle(2), &trivial_quandle(2));
        assert_eq!(t.d(), trivial_quandle(4).d());
        let r3 = alexander(&AlexanderDatum::cyclic_multiplier(3, 2).unwrap());
        let r9 = product(&r3, &r3);
        assert_eq!(r9.order(), 9);
        assert!(r9.has(Latin) && r9.has(Quandle));
    }

    #[test]
    fn closures() {
        let r3 = alexander(&AlexanderDatum::cyclic_multiplier(3, 2).unwrap());
        assert_eq!(subalgebra_closure(&r3, &[0]).unwrap(), vec![0]);
        assert_eq!(subalgebra_closure(&r3, &[0, 1]).unwrap(), vec![0, 1, 2]);
        let z4 = from_group(&cyclic(4));
        assert_eq!(subalgebra_closure(&z4, &[]).unwrap(), vec![0]);
        assert_eq!(subalgebra_closure(&z4, &[2]).unwrap(), vec![0, 2]);
        assert_eq!(subalgebra_closure(&trivial_quandle(3), &[]).unwrap(), Vec::<usize>::new());
        assert!(subalgebra_closure(&z4, &[7]).is_err());
    }
}
