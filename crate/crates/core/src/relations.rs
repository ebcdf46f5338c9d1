//! Acupuncturing elements, split epimorphisms and relations of
//! prequandles; pullbacks of split epimorphisms; the Mal'tsev term of a
//! latin prequandle; autonomy.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::classes::{is_medial, StructureClass};
use crate::constructions::closure_trace;
use crate::error::{Error, Result};
use crate::model::IloModel;
use crate::points::{split_epi, SplitEpi, Structure};
use crate::table::{inverse_index, OpTable, TernaryTable};

fn require_prequandle(m: &IloModel) -> Result<()> {
    if m.has(StructureClass::Prequandle) {
        Ok(())
    } else {
        Err(Error::NotPrequandle)
    }
}

/// `y -> x |> y` is a bijection of the carrier.
pub fn is_acupuncturing_element(m: &IloModel, x: usize) -> Result<bool> {
    require_prequandle(m)?;
    crate::table::check_element(m.order(), x)?;
    Ok(acts_bijectively(m, x, &(0..m.order()).collect::<Vec<_>>()))
}

/// `y -> x |> y` restricted to `subset` is a bijection of `subset`.
fn acts_bijectively(m: &IloModel, x: usize, subset: &[usize]) -> bool {
    let index = inverse_index(m.order(), subset);
    let mut hit = vec![false; subset.len()];
    subset.iter().all(|&y| match index[m.op(x, y)] {
        Some(i) if !hit[i] => {
            hit[i] = true;
            true
        }
        _ => false,
    })
}

/// Fibers of a split epimorphism of prequandles and, when every `s(y)` is
/// acupuncturing in its fiber, the inverse maps `theta_y` with
/// `s(y) |> theta_y(w) = w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Acupuncture {
    pub fibers: Vec<Vec<usize>>,
    /// `theta[y][i] = theta_y(fibers[y][i])`.
    pub theta: Option<Vec<Vec<usize>>>,
}

impl Acupuncture {
    pub fn is_acupuncturing(&self) -> bool {
        self.theta.is_some()
    }
}

pub fn is_acupuncturing_split_epi(e: &SplitEpi<IloModel>) -> Result<Acupuncture> {
    require_prequandle(e.total())?;
    require_prequandle(e.base())?;
    let m = e.total();
    let fibers: Vec<Vec<usize>> = (0..e.base().order()).map(|y| e.fiber(y)).collect();
    let mut theta = Vec::with_capacity(fibers.len());
    for (y, fiber) in fibers.iter().enumerate() {
        let sy = e.s()[y];
        if !acts_bijectively(m, sy, fiber) {
            return Ok(Acupuncture {
                fibers,
                theta: None,
            });
        }
        let index = inverse_index(m.order(), fiber);
        let mut inverse = vec![0; fiber.len()];
        for &w in fiber {
            inverse[index[m.op(sy, w)].unwrap()] = w;
        }
        theta.push(inverse);
    }
    Ok(Acupuncture {
        fibers,
        theta: Some(theta),
    })
}

/// The pullback `X x_Z Y` of `(f, s): X -> Z` and `(g, t): Y -> Z` with
/// its canonical injections `iota_X(x) = (x, t f x)` and
/// `iota_Y(y) = (s g y, y)`.
#[derive(Debug, Clone)]
pub struct PullbackOfSplitEpis {
    left: SplitEpi<IloModel>,
    right: SplitEpi<IloModel>,
    pairs: Vec<(usize, usize)>,
    model: IloModel,
    iota_x: Vec<usize>,
    iota_y: Vec<usize>,
}

impl PullbackOfSplitEpis {
    pub fn new(left: SplitEpi<IloModel>, right: SplitEpi<IloModel>) -> Result<Self> {
        if left.base().d() != right.base().d() {
            return Err(Error::BaseMismatch);
        }
        require_prequandle(left.total())?;
        require_prequandle(right.total())?;
        let (x, y) = (left.total(), right.total());
        let pairs: Vec<(usize, usize)> = (0..x.order())
            .flat_map(|a| (0..y.order()).map(move |b| (a, b)))
            .filter(|&(a, b)| left.f()[a] == right.f()[b])
            .collect();
        let lookup = |p: (usize, usize)| pairs.binary_search(&p).expect("pair in pullback");
        let d = OpTable::from_fn(pairs.len(), |i, j| {
            let ((a, b), (c, e)) = (pairs[i], pairs[j]);
            lookup((x.op(a, c), y.op(b, e)))
        });
        let model = IloModel::build(d, None)?;
        let iota_x = (0..x.order()).map(|a| lookup((a, right.s()[left.f()[a]]))).collect();
        let iota_y = (0..y.order()).map(|b| lookup((left.s()[right.f()[b]], b))).collect();
        Ok(PullbackOfSplitEpis {
            left,
            right,
            pairs,
            model,
            iota_x,
            iota_y,
        })
    }

    pub fn left(&self) -> &SplitEpi<IloModel> {
        &self.left
    }

    pub fn right(&self) -> &SplitEpi<IloModel> {
        &self.right
    }

    /// Carrier pairs in lexicographic order; position = element index.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn model(&self) -> &IloModel {
        &self.model
    }

    pub fn iota_x(&self) -> &[usize] {
        &self.iota_x
    }

    pub fn iota_y(&self) -> &[usize] {
        &self.iota_y
    }

    /// Checks `(x, y) = iota_X(s(z) o x) |> iota_Y(theta_z(y))` at every pair,
    /// using the theta maps of the right leg. `None` when the right leg is
    /// not acupuncturing.
    pub fn theta_decomposition_holds(&self) -> Result<Option<bool>> {
        let acu = is_acupuncturing_split_epi(&self.right)?;
        let Some(theta) = acu.theta else {
            return Ok(None);
        };
        let x = self.left.total();
        Ok(Some(self.pairs.iter().enumerate().all(|(i, &(a, b))| {
            let z = self.left.f()[a];
            let pos = acu.fibers[z].binary_search(&b).expect("b lies over z");
            let t = x.adj(self.left.s()[z], a);
            self.model.op(self.iota_x[t], self.iota_y[theta[z][pos]]) == i
        })))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub jointly_strongly_epic: bool,
    pub pullback_size: usize,
    /// Pairs in the order the closure reached them.
    pub trace: Vec<(usize, usize)>,
}

/// Whether `iota_X(X) u iota_Y(Y)` generates the whole pullback.
pub fn jointly_strongly_epic_check(p: &PullbackOfSplitEpis) -> ClosureReport {
    let mut seed: Vec<usize> = p.iota_x.iter().chain(&p.iota_y).copied().collect();
    seed.sort_unstable();
    seed.dedup();
    let reached = closure_trace(&p.model, &seed).expect("seed lies in the pullback");
    ClosureReport {
        jointly_strongly_epic: reached.len() == p.pairs.len(),
        pullback_size: p.pairs.len(),
        trace: reached.into_iter().map(|i| p.pairs[i]).collect(),
    }
}

/// A reflexive relation on a prequandle, closed under componentwise `|>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflexiveRelation {
    base: IloModel,
    pairs: BTreeSet<(usize, usize)>,
}

impl ReflexiveRelation {
    pub fn new(base: IloModel, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        require_prequandle(&base)?;
        let n = base.order();
        let pairs: BTreeSet<(usize, usize)> = pairs.into_iter().collect();
        if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| a >= n || b >= n) {
            return Err(Error::InvalidRelation(a, b));
        }
        if let Some(x) = (0..n).find(|&x| !pairs.contains(&(x, x))) {
            return Err(Error::InvalidRelation(x, x));
        }
        for &(a, b) in &pairs {
            for &(c, d) in &pairs {
                let prod = (base.op(a, c), base.op(b, d));
                if !pairs.contains(&prod) {
                    return Err(Error::InvalidRelation(prod.0, prod.1));
                }
            }
        }
        Ok(ReflexiveRelation { base, pairs })
    }

    pub fn diagonal(base: IloModel) -> Result<Self> {
        let n = base.order();
        ReflexiveRelation::new(base, (0..n).map(|x| (x, x)))
    }

    pub fn full(base: IloModel) -> Result<Self> {
        let n = base.order();
        ReflexiveRelation::new(base, (0..n).flat_map(|a| (0..n).map(move |b| (a, b))))
    }

    pub fn base(&self) -> &IloModel {
        &self.base
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.pairs.contains(&(a, b))
    }

    /// `(d0, s0): R -> X` with `R` as a subprequandle of `X x X`.
    pub fn as_split_epi(&self) -> SplitEpi<IloModel> {
        let list: Vec<(usize, usize)> = self.pairs.iter().copied().collect();
        let lookup = |p| list.binary_search(&p).expect("closed relation");
        let d = OpTable::from_fn(list.len(), |i, j| {
            lookup((self.base.op(list[i].0, list[j].0), self.base.op(list[i].1, list[j].1)))
        });
        let total = IloModel::build(d, None).expect("subprequandle of a prequandle");
        let d0 = list.iter().map(|&(a, _)| a).collect();
        let s0 = (0..self.base.order()).map(|x| lookup((x, x))).collect();
        split_epi(total, self.base.clone(), d0, s0).expect("projection and diagonal split")
    }

    pub fn is_transitive(&self) -> bool {
        self.pairs.iter().all(|&(a, b)| {
            self.pairs
                .range((b, 0)..=(b, usize::MAX))
                .all(|&(_, c)| self.contains(a, c))
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs.iter().all(|&(a, b)| self.contains(b, a))
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_symmetric() && self.is_transitive()
    }

    /// Equivalence classes (only meaningful for equivalence relations).
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let n = self.base.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let class: Vec<usize> = (0..n).filter(|&y| self.contains(x, y)).collect();
            for &y in &class {
                seen[y] = true;
            }
            classes.push(class);
        }
        classes
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub acupuncturing: bool,
    pub transitive: bool,
    /// Every class is a latin prequandle; `None` unless the relation is an
    /// equivalence.
    pub classes_latin: Option<bool>,
}

pub fn check_relation(r: &ReflexiveRelation) -> RelationReport {
    let acupuncturing = is_acupuncturing_split_epi(&r.as_split_epi())
        .expect("relations live on prequandles")
        .is_acupuncturing();
    let classes_latin = r.is_equivalence().then(|| {
        r.classes()
            .iter()
            .all(|class| class.iter().all(|&x| acts_bijectively(&r.base, x, class)))
    });
    RelationReport {
        acupuncturing,
        transitive: r.is_transitive(),
        classes_latin,
    }
}

/// Every reflexive relation on `base` closed under componentwise `|>`, in
/// increasing order of the bitmask over off-diagonal pairs.
pub fn reflexive_relations(base: &IloModel) -> Result<Vec<ReflexiveRelation>> {
    require_prequandle(base)?;
    let n = base.order();
    if n > 4 {
        return Err(Error::OrderTooLarge { order: n, max: 4 });
    }
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b)
        .collect();
    let cell = |(a, b): (usize, usize)| a * n + b;
    let diagonal: u32 = (0..n).map(|x| 1u32 << cell((x, x))).sum();
    let mut found = Vec::new();
    for mask in 0u32..(1 << off.len()) {
        let mut bits = diagonal;
        for (i, &p) in off.iter().enumerate() {
            if mask & (1 << i) != 0 {
                bits |= 1 << cell(p);
            }
        }
        let members: Vec<(usize, usize)> = (0..n * n)
            .filter(|&c| bits & (1 << c) != 0)
            .map(|c| (c / n, c % n))
            .collect();
        let closed = members.iter().all(|&(a, b)| {
            members
                .iter()
                .all(|&(c, d)| bits & (1 << cell((base.op(a, c), base.op(b, d)))) != 0)
        });
        if closed {
            found.push(ReflexiveRelation {
                base: base.clone(),
                pairs: members.into_iter().collect(),
            });
        }
    }
    Ok(found)
}

/// `p(x, y, z) = (y o x) |> delta(z, y)` where `o` is the adjoint of `|>`
/// and `delta(z, y)` is the unique `w` with `y |> w = z`.
pub fn maltsev_term(m: &IloModel) -> Result<TernaryTable> {
    if !m.has(StructureClass::Latin) {
        return Err(Error::NotLatin);
    }
    require_prequandle(m)?;
    let n = m.order();
    let mut delta = vec![0; n * n];
    for y in 0..n {
        for w in 0..n {
            delta[m.op(y, w) * n + y] = w;
        }
    }
    Ok(TernaryTable::from_fn(n, |x, y, z| m.op(m.adj(y, x), delta[z * n + y])))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AutonomyReport {
    pub autonomous: bool,
    /// Whether the Mal'tsev term is a `|>`-homomorphism `m^3 -> m`; `None`
    /// unless `m` is latin.
    pub p_is_homomorphism: Option<bool>,
}

pub fn check_autonomy_naturality(m: &IloModel) -> Result<AutonomyReport> {
    require_prequandle(m)?;
    let p_is_homomorphism = match maltsev_term(m) {
        Ok(p) => Some(ternary_is_homomorphism(m, &p)),
        Err(Error::NotLatin) => None,
        Err(e) => return Err(e),
    };
    Ok(AutonomyReport {
        autonomous: is_medial(m.d()),
        p_is_homomorphism,
    })
}

fn ternary_is_homomorphism(m: &IloModel, p: &TernaryTable) -> bool {
    let n = m.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let left = p.get(a, b, c);
                for a2 in 0..n {
                    for b2 in 0..n {
                        for c2 in 0..n {
                            let lhs = p.get(m.op(a, a2), m.op(b, b2), m.op(c, c2));
                            if lhs != m.op(left, p.get(a2, b2, c2)) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// The one-point prequandle.
pub fn point() -> IloModel {
    IloModel::build(OpTable::from_fn(1, |_, _| 0), None).expect("singleton")
}

/// The split epimorphism `X -> 1` with section picking `x`.
pub fn to_point(m: &IloModel, x: usize) -> Result<SplitEpi<IloModel>> {
    split_epi(m.clone(), point(), vec![0; m.order()], vec![x])
}

impl Structure for PullbackOfSplitEpis {
    fn order(&self) -> usize {
        self.pairs.len()
    }

    fn unit(&self) -> Option<usize> {
        self.model.unit()
    }

    fn operations(&self) -> Vec<&OpTable> {
        vec![self.model.d()]
    }
}
