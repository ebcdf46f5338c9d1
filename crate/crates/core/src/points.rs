//! Split epimorphisms between finite models, their kernels, and
//! semi-direct index / hyperindex witnesses.
//!
//! For a split epimorphism `(f, s): X -> Y` with kernel `K = f^-1(1)`, an
//! index is a map `gamma: X -> K` vanishing on the image of `s` such that
//! `rho = (f, gamma): X -> Y x K` is a bijection. It is a hyperindex when
//! `gamma` also fixes every kernel element.

use serde::Serialize;

use crate::classes::StructureClass;
use crate::constructions::product;
use crate::error::{Error, Result};
use crate::group::{homomorphisms, FiniteGroup};
use crate::model::IloModel;
use crate::table::{check_map, inverse_index, is_permutation, OpTable};

/// A finite algebra: a carrier, a list of binary operations, and maybe a
/// unit. Homomorphisms must preserve every operation.
pub trait Structure: Clone {
    fn order(&self) -> usize;
    fn unit(&self) -> Option<usize>;
    fn operations(&self) -> Vec<&OpTable>;
}

impl Structure for FiniteGroup {
    fn order(&self) -> usize {
        FiniteGroup::order(self)
    }

    fn unit(&self) -> Option<usize> {
        Some(FiniteGroup::unit(self))
    }

    fn operations(&self) -> Vec<&OpTable> {
        vec![self.mult()]
    }
}

impl Structure for IloModel {
    fn order(&self) -> usize {
        IloModel::order(self)
    }

    fn unit(&self) -> Option<usize> {
        IloModel::unit(self)
    }

    fn operations(&self) -> Vec<&OpTable> {
        vec![self.d()]
    }
}

/// Checks that `h` preserves every operation of `source`.
pub fn homomorphism_violation<S: Structure>(
    source: &S,
    target: &S,
    h: &[usize],
) -> Result<Option<(usize, usize)>> {
    check_map(source.order(), target.order(), h)?;
    Ok(source
        .operations()
        .into_iter()
        .zip(target.operations())
        .find_map(|(a, b)| a.homomorphism_violation(b, h)))
}

/// A retraction `f: total -> base` with section `s`.
#[derive(Debug, Clone)]
pub struct SplitEpi<S> {
    total: S,
    base: S,
    f: Vec<usize>,
    s: Vec<usize>,
    kernel: Vec<usize>,
}

/// Validates `f` and `s` as homomorphisms with `f . s = id` and computes
/// the kernel (empty when the base has no unit).
pub fn split_epi<S: Structure>(total: S, base: S, f: Vec<usize>, s: Vec<usize>) -> Result<SplitEpi<S>> {
    if let Some((a, b)) = homomorphism_violation(&total, &base, &f)? {
        return Err(Error::NotHomomorphism(a, b));
    }
    if let Some((a, b)) = homomorphism_violation(&base, &total, &s)? {
        return Err(Error::NotHomomorphism(a, b));
    }
    if let Some(y) = (0..base.order()).find(|&y| f[s[y]] != y) {
        return Err(Error::NotSection(y));
    }
    if let (Some(ux), Some(uy)) = (total.unit(), base.unit()) {
        if f[ux] != uy {
            return Err(Error::NotHomomorphism(ux, ux));
        }
        if s[uy] != ux {
            return Err(Error::NotHomomorphism(uy, uy));
        }
    }
    let kernel = match base.unit() {
        Some(u) => (0..total.order()).filter(|&x| f[x] == u).collect(),
        None => Vec::new(),
    };
    Ok(SplitEpi {
        total,
        base,
        f,
        s,
        kernel,
    })
}

impl<S: Structure> SplitEpi<S> {
    pub fn total(&self) -> &S {
        &self.total
    }

    pub fn base(&self) -> &S {
        &self.base
    }

    pub fn f(&self) -> &[usize] {
        &self.f
    }

    pub fn s(&self) -> &[usize] {
        &self.s
    }

    /// Kernel elements in ascending carrier order; position `i` is kernel
    /// coordinate `i`.
    pub fn kernel(&self) -> &[usize] {
        &self.kernel
    }

    pub fn kernel_coordinate(&self, x: usize) -> Option<usize> {
        self.kernel.binary_search(&x).ok()
    }

    /// `f^-1(y)` in ascending order.
    pub fn fiber(&self, y: usize) -> Vec<usize> {
        (0..self.total.order()).filter(|&x| self.f[x] == y).collect()
    }
}

/// A candidate index and its verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexWitness {
    /// `gamma(x)` in kernel coordinates.
    pub gamma: Vec<usize>,
    /// `rho(x) = (f(x), gamma(x))`.
    pub rho: Vec<(usize, usize)>,
    pub is_index: bool,
    pub is_hyperindex: bool,
    /// The supplied inverse formula inverts `rho` in both directions.
    pub rho_inverse_verified: bool,
}

impl IndexWitness {
    /// Evaluates `gamma` (given in carrier elements) against `epi`, using
    /// `inverse(y, k)` as the proposed inverse of `rho` (with `k` a kernel
    /// element).
    pub fn evaluate<S: Structure>(
        epi: &SplitEpi<S>,
        raw_gamma: &[usize],
        inverse: impl Fn(usize, usize) -> usize,
    ) -> Result<IndexWitness> {
        let n = epi.total.order();
        let gamma = raw_gamma
            .iter()
            .enumerate()
            .map(|(x, &g)| epi.kernel_coordinate(g).ok_or(Error::GammaOutsideKernel(x)))
            .collect::<Result<Vec<_>>>()?;
        let rho: Vec<(usize, usize)> = (0..n).map(|x| (epi.f[x], gamma[x])).collect();

        let k = epi.kernel.len();
        let codes: Vec<usize> = rho.iter().map(|&(y, c)| y * k + c).collect();
        let bijective = epi.base.order() * k == n && is_permutation(&codes);
        let unit_coordinate = epi.total.unit().and_then(|u| epi.kernel_coordinate(u));
        let vanishes_on_section = unit_coordinate
            .is_some_and(|u| (0..epi.base.order()).all(|y| gamma[epi.s[y]] == u));
        let is_index = bijective && vanishes_on_section;
        let is_hyperindex = is_index && (0..k).all(|c| gamma[epi.kernel[c]] == c);

        let forward = (0..n).all(|x| inverse(epi.f[x], epi.kernel[gamma[x]]) == x);
        let backward = (0..epi.base.order()).all(|y| {
            epi.kernel.iter().enumerate().all(|(c, &kx)| {
                let x = inverse(y, kx);
                x < n && rho[x] == (y, c)
            })
        });
        Ok(IndexWitness {
            gamma,
            rho,
            is_index,
            is_hyperindex,
            rho_inverse_verified: forward && backward,
        })
    }
}

/// `gamma(x) = s(f(x))^-1 x`, inverse `(y, k) -> s(y) k`.
pub fn group_index(e: &SplitEpi<FiniteGroup>) -> IndexWitness {
    let g = &e.total;
    let raw: Vec<usize> = (0..g.order()).map(|x| g.op(g.inv(e.s[e.f[x]]), x)).collect();
    IndexWitness::evaluate(e, &raw, |y, k| g.op(e.s[y], k))
        .expect("group index lands in the kernel")
}

/// `gamma(x) = d(x, s(f(x)))`, inverse `(y, k) -> s(y) o k`.
pub fn model_index(e: &SplitEpi<IloModel>) -> Result<IndexWitness> {
    if !e.total.has(StructureClass::HyperSlominski) || !e.base.has(StructureClass::HyperSlominski) {
        return Err(Error::NotSlominski);
    }
    let m = &e.total;
    let raw: Vec<usize> = (0..m.order()).map(|x| m.op(x, e.s[e.f[x]])).collect();
    IndexWitness::evaluate(e, &raw, |y, k| m.adj(e.s[y], k))
}

/// Source of an index formula for [`induced_self_structure`].
#[derive(Debug, Clone, Copy)]
pub enum IndexFormula<'a> {
    Group(&'a FiniteGroup),
    Model(&'a IloModel),
}

/// The operation `d_X` read off an index on the split epimorphism
/// `(second projection, diagonal): X x X -> X`, with the kernel
/// `{(k, 1)}` identified with `X`.
#[derive(Debug, Clone)]
pub struct InducedStructure {
    pub model: IloModel,
    pub witness: IndexWitness,
}

pub fn induced_self_structure(x: IndexFormula<'_>) -> Result<InducedStructure> {
    let (n, witness) = match x {
        IndexFormula::Group(g) => {
            let n = g.order();
            let e = split_epi(g.product(g), g.clone(), second_projection(n), diagonal(n))?;
            (n, group_index(&e))
        }
        IndexFormula::Model(m) => {
            let n = m.order();
            let e = split_epi(product(m, m), m.clone(), second_projection(n), diagonal(n))?;
            (n, model_index(&e)?)
        }
    };
    let unit = match x {
        IndexFormula::Group(g) => g.unit(),
        IndexFormula::Model(m) => m.unit().ok_or(Error::NotSlominski)?,
    };
    // kernel {(k, unit)} sorted ascending is k = 0..n, so coordinates are
    // carrier elements
    let d = OpTable::from_fn(n, |a, b| witness.gamma[a * n + b]);
    let model = IloModel::build(d, Some(unit))?;
    assert!(
        model.has(StructureClass::HyperSlominski),
        "an index always induces a hyper-Slominski setting"
    );
    if witness.is_hyperindex {
        assert!(
            model.has(StructureClass::Hypersubtraction),
            "a hyperindex always induces a hypersubtraction"
        );
    }
    Ok(InducedStructure { model, witness })
}

fn second_projection(n: usize) -> Vec<usize> {
    (0..n * n).map(|p| p % n).collect()
}

fn diagonal(n: usize) -> Vec<usize> {
    (0..n).map(|x| x * n + x).collect()
}

/// Outcome of testing a morphism of split epimorphisms over one base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KernelIsoVerdict {
    pub kernel_restriction_bijective: bool,
    pub total_bijective: bool,
}

impl KernelIsoVerdict {
    pub fn implication_holds(&self) -> bool {
        !self.kernel_restriction_bijective || self.total_bijective
    }
}

/// Validates `h: e.total -> e2.total` as a morphism over the identity of
/// the common base and reports whether it is bijective on kernels and on
/// totals.
pub fn kernel_iso_implies_iso<S: Structure>(
    e: &SplitEpi<S>,
    e2: &SplitEpi<S>,
    h: &[usize],
) -> Result<KernelIsoVerdict> {
    check_morphism(e, e2, h)?;
    let index = inverse_index(e2.total.order(), &e2.kernel);
    let mut hit = vec![false; e2.kernel.len()];
    let mut injective = true;
    for &k in &e.kernel {
        match index[h[k]] {
            Some(c) if !hit[c] => hit[c] = true,
            _ => injective = false,
        }
    }
    Ok(KernelIsoVerdict {
        kernel_restriction_bijective: injective && e.kernel.len() == e2.kernel.len(),
        total_bijective: e.total.order() == e2.total.order() && is_permutation(h),
    })
}

fn check_morphism<S: Structure>(e: &SplitEpi<S>, e2: &SplitEpi<S>, h: &[usize]) -> Result<()> {
    let same_base = e.base.order() == e2.base.order()
        && e.base.operations() == e2.base.operations()
        && e.base.unit() == e2.base.unit();
    if !same_base {
        return Err(Error::NotMorphismOfSplitEpis);
    }
    match homomorphism_violation(&e.total, &e2.total, h) {
        Ok(None) => {}
        _ => return Err(Error::NotMorphismOfSplitEpis),
    }
    let over_base = (0..e.total.order()).all(|x| e2.f[h[x]] == e.f[x]);
    let respects_sections = (0..e.base.order()).all(|y| h[e.s[y]] == e2.s[y]);
    if !(over_base && respects_sections) {
        return Err(Error::NotMorphismOfSplitEpis);
    }
    Ok(())
}

/// First `x` where `h(gamma(x)) != gamma'(h(x))`, for a morphism `h` from
/// `e` to `e2` over the identity of the base.
pub fn naturality_violation<S: Structure>(
    e: &SplitEpi<S>,
    w: &IndexWitness,
    e2: &SplitEpi<S>,
    w2: &IndexWitness,
    h: &[usize],
) -> Option<usize> {
    (0..e.total.order()).find(|&x| h[e.kernel[w.gamma[x]]] != e2.kernel[w2.gamma[h[x]]])
}

/// Every split epimorphism `total -> base` of groups, ordered by `f` then `s`
/// in homomorphism enumeration order.
pub fn group_split_epis(total: &FiniteGroup, base: &FiniteGroup) -> Vec<SplitEpi<FiniteGroup>> {
    let sections = homomorphisms(base, total);
    let mut epis = Vec::new();
    for f in homomorphisms(total, base) {
        for s in &sections {
            if (0..base.order()).all(|y| f[s[y]] == y) {
                epis.push(
                    split_epi(total.clone(), base.clone(), f.clone(), s.clone())
                        .expect("homomorphisms with f.s = id"),
                );
            }
        }
    }
    epis
}

/// Homomorphisms `h` forming morphisms of split epimorphisms `e -> e2`
/// over the identity of the base.
pub fn group_morphisms_over(
    e: &SplitEpi<FiniteGroup>,
    e2: &SplitEpi<FiniteGroup>,
    homs: &[Vec<usize>],
) -> Vec<Vec<usize>> {
    homs.iter()
        .filter(|h| check_morphism(e, e2, h).is_ok())
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::from_group;
    use crate::group::{cyclic, PermutationGroup};

    fn z6_to_z2(section: usize) -> Result<SplitEpi<FiniteGroup>> {
        split_epi(cyclic(6), cyclic(2), (0..6).map(|x| x % 2).collect(), vec![0, section])
    }

    #[test]
    fn split_epi_kernels_and_errors() {
        assert_eq!(z6_to_z2(3).unwrap().kernel(), &[0, 2, 4]);
        let id = split_epi(cyclic(3), cyclic(3), vec![0, 1, 2], vec![0, 1, 2]).unwrap();
        assert_eq!(id.kernel(), &[0]);
        assert!(matches!(z6_to_z2(1), Err(Error::NotHomomorphism(..))));
        let bad_section = split_epi(cyclic(2), cyclic(2), vec![0, 1], vec![0, 0]);
        assert!(matches!(bad_section, Err(Error::NotSection(1))));
    }

    #[test]
    fn group_index_on_z6() {
        let e = z6_to_z2(3).unwrap();
        let w = group_index(&e);
        // gamma(5) = 5 - 3 = 2, kernel coordinate 1
        assert_eq!(e.kernel()[w.gamma[5]], 2);
        assert!(w.is_index && w.is_hyperindex && w.rho_inverse_verified);
    }

    #[test]
    fn group_index_on_sign_map() {
        let s3 = PermutationGroup::symmetric(3);
        let g = &s3.group;
        let t12 = s3.transposition(0, 1).unwrap();
        let sign: Vec<usize> = s3
            .perms
            .iter()
            .map(|p| {
                let inv = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j)));
                inv.filter(|&(i, j)| p[i] > p[j]).count() % 2
            })
            .collect();
        let e = split_epi(g.clone(), cyclic(2), sign, vec![0, t12]).unwrap();
        let w = group_index(&e);
        assert_eq!(e.kernel()[w.gamma[t12]], g.unit());
        assert!(w.is_hyperindex);
        for (c, &k) in e.kernel().iter().enumerate() {
            assert_eq!(w.gamma[k], c);
        }
    }

    #[test]
    fn model_index_agrees_with_group_index() {
        let e = z6_to_z2(3).unwrap();
        let me = split_epi(from_group(&cyclic(6)), from_group(&cyclic(2)), e.f().to_vec(), e.s().to_vec())
            .unwrap();
        assert_eq!(model_index(&me).unwrap(), group_index(&e));
    }

    #[test]
    fn scaled_difference_has_index_but_no_hyperindex() {
        let total = IloModel::new(OpTable::from_fn(3, |x, y| (2 * (3 + x - y)) % 3), None).unwrap();
        let point = IloModel::new(OpTable::from_fn(1, |_, _| 0), None).unwrap();
        let e = split_epi(total, point, vec![0; 3], vec![0]).unwrap();
        let w = model_index(&e).unwrap();
        assert_eq!(w.gamma, vec![0, 2, 1]);
        assert!(w.is_index && !w.is_hyperindex && w.rho_inverse_verified);
    }

    #[test]
    fn induced_structures() {
        let z3 = cyclic(3);
        let induced = induced_self_structure(IndexFormula::Group(&z3)).unwrap();
        assert_eq!(induced.model.d(), from_group(&z3).d());
        let one = IloModel::new(OpTable::from_fn(1, |_, _| 0), None).unwrap();
        let induced = induced_self_structure(IndexFormula::Model(&one)).unwrap();
        assert_eq!(induced.model.d(), one.d());
    }

    #[test]
    fn kernel_iso_examples() {
        let z2 = cyclic(2);
        let v4 = z2.product(&z2);
        // first projection, pairs (a, b) indexed 2a + b
        let p0: Vec<usize> = (0..4).map(|x| x / 2).collect();
        let e = split_epi(v4.clone(), z2.clone(), p0.clone(), vec![0, 2]).unwrap();
        let h = vec![0, 1, 3, 2]; // (a, b) -> (a, a + b)
        let e2 = split_epi(v4.clone(), z2.clone(), p0.clone(), vec![0, h[2]]).unwrap();
        let v = kernel_iso_implies_iso(&e, &e2, &h).unwrap();
        assert!(v.kernel_restriction_bijective && v.total_bijective);

        let id = split_epi(z2.clone(), z2.clone(), vec![0, 1], vec![0, 1]).unwrap();
        let v = kernel_iso_implies_iso(&e, &id, &p0).unwrap();
        assert!(!v.kernel_restriction_bijective && !v.total_bijective && v.implication_holds());

        let ident = z6_to_z2(3).unwrap();
        let v = kernel_iso_implies_iso(&ident, &ident, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(v.kernel_restriction_bijective && v.total_bijective);

        assert_eq!(
            kernel_iso_implies_iso(&e, &e2, &[0, 1, 2, 3]),
            Err(Error::NotMorphismOfSplitEpis)
        );
    }
}
