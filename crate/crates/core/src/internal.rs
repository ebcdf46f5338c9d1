//! Operations internal to finite abelian groups: Slominski settings split
//! as `d(x, y) = f(x - y)`, prequandles are Alexander quandles, and a
//! unitary magma with a compatible hypersubtraction is an abelian group.

use serde::Serialize;

use crate::classes::{classify, StructureClass};
use crate::constructions::{alexander, AlexanderDatum};
use crate::error::{Error, Result};
use crate::group::{homomorphisms, FiniteGroup};
use crate::table::{is_permutation, OpTable};

/// An operation on the carrier of an abelian group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InternalOpDatum {
    ambient: FiniteGroup,
    op: OpTable,
}

impl InternalOpDatum {
    pub fn new(ambient: FiniteGroup, op: OpTable) -> Result<Self> {
        if !ambient.is_abelian() {
            return Err(Error::NotAbelian);
        }
        if ambient.order() != op.order() {
            return Err(Error::MapLength {
                expected: ambient.order(),
                got: op.order(),
            });
        }
        Ok(InternalOpDatum { ambient, op })
    }

    pub fn ambient(&self) -> &FiniteGroup {
        &self.ambient
    }

    pub fn op(&self) -> &OpTable {
        &self.op
    }

    pub fn is_internal(&self) -> bool {
        internal_violation(&self.ambient, &self.op).is_none()
    }
}

/// `op(x + x', y + y') = op(x, y) + op(x', y')` for all arguments.
pub fn internal_check(ambient: &FiniteGroup, op: &OpTable) -> Result<bool> {
    InternalOpDatum::new(ambient.clone(), op.clone()).map(|d| d.is_internal())
}

/// First `(x, y, x', y')` breaking additivity.
pub fn internal_violation(g: &FiniteGroup, op: &OpTable) -> Option<[usize; 4]> {
    let n = g.order();
    for x in 0..n {
        for y in 0..n {
            for xp in 0..n {
                for yp in 0..n {
                    let lhs = op.get(g.op(x, xp), g.op(y, yp));
                    if lhs != g.op(op.get(x, y), op.get(xp, yp)) {
                        return Some([x, y, xp, yp]);
                    }
                }
            }
        }
    }
    None
}

/// Every internal operation `op(x, y) = a(x) + b(y)` with `a`, `b`
/// endomorphisms, ordered by `(a, b)`.
pub fn internal_operations(ambient: &FiniteGroup) -> Result<Vec<OpTable>> {
    if !ambient.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let endos = homomorphisms(ambient, ambient);
    let n = ambient.order();
    Ok(endos
        .iter()
        .flat_map(|a| endos.iter().map(move |b| OpTable::from_fn(n, |x, y| ambient.op(a[x], b[y]))))
        .collect())
}

/// `f(x) = d(x, 0)` and `g(y) = 0 o y`, so that `d(x, y) = f(x - y)`,
/// `x o y = x + g(y)` and `g f = Id`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlominskiDecomposition {
    pub f: Vec<usize>,
    pub g: Vec<usize>,
}

pub fn decompose_slominski(datum: &InternalOpDatum) -> Result<SlominskiDecomposition> {
    if !datum.is_internal() {
        return Err(Error::NotInternal);
    }
    let (grp, d) = (&datum.ambient, &datum.op);
    let zero = grp.unit();
    if !classify(d, Some(zero)).contains(&StructureClass::Slominski) {
        return Err(Error::NotSlominski);
    }
    let n = grp.order();
    let adjoint = crate::model::adjoint(d)?;
    let f: Vec<usize> = (0..n).map(|x| d.get(x, zero)).collect();
    let g: Vec<usize> = (0..n).map(|y| adjoint.get(zero, y)).collect();
    assert!(is_permutation(&f), "d(-, 0) is a bijection");
    for x in 0..n {
        assert_eq!(g[f[x]], x, "g f = Id");
        for y in 0..n {
            assert_eq!(d.get(x, y), f[grp.op(x, grp.inv(y))], "d(x, y) = f(x - y)");
            assert_eq!(adjoint.get(x, y), grp.op(x, g[y]), "x o y = x + g(y)");
        }
    }
    Ok(SlominskiDecomposition { f, g })
}

/// Reads `f(x) = op(x, 0)` off an internal prequandle and checks that the
/// Alexander quandle of `f` is `op`.
pub fn extract_alexander(datum: &InternalOpDatum) -> Result<AlexanderDatum> {
    if !datum.is_internal() {
        return Err(Error::NotInternal);
    }
    let op = &datum.op;
    if !classify(op, None).contains(&StructureClass::Prequandle) {
        return Err(Error::NotPrequandle);
    }
    let zero = datum.ambient.unit();
    let f = (0..op.order()).map(|x| op.get(x, zero)).collect();
    let alex = AlexanderDatum::new(datum.ambient.clone(), f)?;
    assert_eq!(alexander(&alex).d(), op, "internal prequandles are Alexander");
    Ok(alex)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UmagHstReport {
    /// `d(a, b) * d(c, e) = d(a * c, b * e)` everywhere.
    pub mutually_internal: bool,
    /// First `(a, b, c, e)` breaking the interchange law.
    pub violation: Option<[usize; 4]>,
}

/// For a unitary magma `star` and a hypersubtraction `d` with the same
/// unit, decides whether each is a homomorphism for the other; when they
/// are, checks that `star` is an abelian group with `d(x, y) = x * y^-1`.
pub fn umag_hst_abelian_check(star: &OpTable, unit: usize, d: &OpTable) -> Result<UmagHstReport> {
    let n = star.order();
    crate::table::check_element(n, unit)?;
    if d.order() != n {
        return Err(Error::MapLength {
            expected: n,
            got: d.order(),
        });
    }
    if (0..n).any(|x| star.get(x, unit) != x || star.get(unit, x) != x) {
        return Err(Error::NotUnitaryMagma);
    }
    if let Some(du) = d.constant_diagonal() {
        if du != unit {
            return Err(Error::UnitMismatch {
                left: unit,
                right: du,
            });
        }
    }
    if !classify(d, Some(unit)).contains(&StructureClass::Hypersubtraction) {
        return Err(Error::NotHypersubtraction);
    }

    let mut violation = None;
    'search: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for e in 0..n {
                    if star.get(d.get(a, b), d.get(c, e)) != d.get(star.get(a, c), star.get(b, e)) {
                        violation = Some([a, b, c, e]);
                        break 'search;
                    }
                }
            }
        }
    }
    if violation.is_none() {
        let group = FiniteGroup::from_table(star.clone())
            .expect("a magma with a compatible hypersubtraction is a group");
        assert!(group.is_abelian(), "and it is abelian");
        for x in 0..n {
            for y in 0..n {
                assert_eq!(d.get(x, y), star.get(x, group.inv(y)), "d(x, y) = x - y");
            }
        }
    }
    Ok(UmagHstReport {
        mutually_internal: violation.is_none(),
        violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, PermutationGroup};

    fn linear(n: usize, a: usize, b: usize) -> OpTable {
        OpTable::from_fn(n, |x, y| (a * x + b * y) % n)
    }

    #[test]
    fn internality() {
        let z3 = cyclic(3);
        assert!(internal_check(&z3, &linear(3, 1, 2)).unwrap());
        assert!(internal_check(&z3, &linear(3, 2, 2)).unwrap());
        let times = OpTable::from_fn(3, |x, y| x * y % 3);
        assert!(!internal_check(&z3, &times).unwrap());
        // (0+1)(1+0) = 1 but 0*1 + 1*0 = 0
        assert_eq!(internal_violation(&z3, &times), Some([0, 1, 1, 0]));
        let s3 = PermutationGroup::symmetric(3).group;
        assert_eq!(internal_check(&s3, s3.mult()), Err(Error::NotAbelian));
    }

    #[test]
    fn decomposition_over_z5() {
        let d = OpTable::from_fn(5, |x, y| 2 * (5 + x - y) % 5);
        let dec = decompose_slominski(&InternalOpDatum::new(cyclic(5), d).unwrap()).unwrap();
        assert_eq!(dec.f, vec![0, 2, 4, 1, 3]);
        assert_eq!(dec.g, vec![0, 3, 1, 4, 2]);
        let minus = OpTable::from_fn(7, |x, y| (7 + x - y) % 7);
        let dec = decompose_slominski(&InternalOpDatum::new(cyclic(7), minus).unwrap()).unwrap();
        assert_eq!(dec.f, (0..7).collect::<Vec<_>>());
        assert_eq!(dec.f, dec.g);
        let first = OpTable::from_fn(3, |x, _| x);
        assert_eq!(
            decompose_slominski(&InternalOpDatum::new(cyclic(3), first).unwrap()),
            Err(Error::NotSlominski)
        );
        let times = OpTable::from_fn(3, |x, y| x * y % 3);
        assert_eq!(
            decompose_slominski(&InternalOpDatum::new(cyclic(3), times).unwrap()),
            Err(Error::NotInternal)
        );
    }

    #[test]
    fn alexander_extraction() {
        let alex = extract_alexander(&InternalOpDatum::new(cyclic(3), linear(3, 2, 2)).unwrap()).unwrap();
        assert_eq!(alex.f(), &[0, 2, 1]);
        let alex = extract_alexander(&InternalOpDatum::new(cyclic(5), linear(5, 3, 3)).unwrap()).unwrap();
        assert_eq!(alex.f(), &[0, 3, 1, 4, 2]);
        let first = OpTable::from_fn(4, |x, _| x);
        let alex = extract_alexander(&InternalOpDatum::new(cyclic(4), first).unwrap()).unwrap();
        assert_eq!(alex.f(), &[0, 1, 2, 3]);
        assert_eq!(
            extract_alexander(&InternalOpDatum::new(cyclic(3), linear(3, 1, 2)).unwrap()),
            Err(Error::NotPrequandle)
        );
    }

    #[test]
    fn internal_operations_over_z4() {
        // four endomorphisms each side
        assert_eq!(internal_operations(&cyclic(4)).unwrap().len(), 16);
    }

    #[test]
    fn umag_hst() {
        let plus = OpTable::from_fn(3, |x, y| (x + y) % 3);
        let minus = OpTable::from_fn(3, |x, y| (3 + x - y) % 3);
        assert!(umag_hst_abelian_check(&plus, 0, &minus).unwrap().mutually_internal);

        let s3 = PermutationGroup::symmetric(3).group;
        let d = crate::constructions::from_group(&s3);
        let report = umag_hst_abelian_check(s3.mult(), s3.unit(), d.d()).unwrap();
        assert!(!report.mutually_internal);
        let [a, b, c, e] = report.violation.unwrap();
        let (star, d) = (s3.mult(), d.d());
        assert_ne!(star.get(d.get(a, b), d.get(c, e)), d.get(star.get(a, c), star.get(b, e)));

        let one = OpTable::from_fn(1, |_, _| 0);
        assert!(umag_hst_abelian_check(&one, 0, &one).unwrap().mutually_internal);
    }

    #[test]
    fn umag_hst_errors() {
        let plus = OpTable::from_fn(3, |x, y| (x + y) % 3);
        let shifted = OpTable::from_fn(3, |x, y| (3 + x - y + 1) % 3);
        assert_eq!(
            umag_hst_abelian_check(&plus, 0, &shifted),
            Err(Error::UnitMismatch { left: 0, right: 1 })
        );
        let first = OpTable::from_fn(3, |x, _| x);
        assert_eq!(umag_hst_abelian_check(&first, 0, &plus), Err(Error::NotUnitaryMagma));
    }
}
