//! Exhaustive property suites over enumerated models and the group
//! catalog. Each suite reports how many instances it checked and the first
//! counterexample, if any.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::brace::{brace_indexes, is_skew_brace, opposite_brace, opposite_split_epi, SkewBrace};
use crate::classes::{classify, is_medial, is_right_distributive, lattice_violation, StructureClass};
use crate::constructions::{
    alexander, conjugation_quandle, from_group, product, trivial_quandle, AlexanderDatum,
};
use crate::enumerate::{enumerate, EnumerationRequest};
use crate::group::{catalog_up_to, homomorphisms, FiniteGroup, PermutationGroup};
use crate::identities::{
    check_associativity_equivalence, check_commutativity_equivalence, check_slominski_identities,
    is_maltsev, slominski_maltsev,
};
use crate::internal::{
    decompose_slominski, extract_alexander, internal_operations, umag_hst_abelian_check,
    InternalOpDatum,
};
use crate::iso::{canonical_form, find_isomorphism, iso_classes};
use crate::model::IloModel;
use crate::points::{
    group_index, group_morphisms_over, group_split_epis, induced_self_structure,
    kernel_iso_implies_iso, model_index, naturality_violation, split_epi, IndexFormula, SplitEpi,
};
use crate::relations::{
    check_autonomy_naturality, check_relation, is_acupuncturing_split_epi,
    jointly_strongly_epic_check, maltsev_term, reflexive_relations, to_point, PullbackOfSplitEpis,
};
use crate::table::{is_permutation, OpTable};

use StructureClass::*;

/// Bounds for a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremConfig {
    /// Largest order for enumerated models (each suite also has its own cap).
    pub max_order: usize,
    /// Largest catalog group used by the group and brace suites.
    pub group_order: usize,
    /// Seed for the sampled suites.
    pub seed: u64,
    /// Random relabelings per sampled model.
    pub samples: usize,
}

impl TheoremConfig {
    pub fn new(max_order: usize) -> Self {
        TheoremConfig {
            max_order,
            group_order: 12,
            seed: 0,
            samples: 4,
        }
    }

    fn orders(&self, cap: usize) -> std::ops::RangeInclusive<usize> {
        1..=self.max_order.min(cap)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteOutcome {
    pub suite: &'static str,
    pub status: &'static str,
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

struct Tally {
    suite: &'static str,
    checked: u64,
    failure: Option<Value>,
}

impl Tally {
    fn new(suite: &'static str) -> Self {
        Tally {
            suite,
            checked: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    fn finish(self) -> SuiteOutcome {
        SuiteOutcome {
            suite: self.suite,
            status: if self.failure.is_none() { "pass" } else { "fail" },
            checked: self.checked,
            counterexample: self.failure,
        }
    }
}

fn model_json(m: &IloModel) -> Value {
    json!({ "d": m.d(), "unit": m.unit() })
}

fn models(order: usize, class: StructureClass) -> impl Iterator<Item = IloModel> {
    enumerate(&EnumerationRequest::new(order, class)).expect("suite orders stay within the caps")
}

fn iso_models(order: usize, class: StructureClass) -> impl Iterator<Item = IloModel> {
    enumerate(&EnumerationRequest::new(order, class).up_to_iso())
        .expect("suite orders stay within the caps")
}

type Suite = fn(&TheoremConfig) -> SuiteOutcome;

/// Every suite in run order.
pub const SUITES: &[(&str, Suite)] = &[
    ("prop-assos", prop_assos),
    ("prop-commut", prop_commut),
    ("slominski-identities", slominski_identities),
    ("finite-collapse", finite_collapse),
    ("class-lattice", class_lattice),
    ("dual-involution", dual_involution),
    ("group-inclusion", group_inclusion),
    ("latin-alexander", latin_alexander),
    ("semi-direct-index", semi_direct_index),
    ("index-naturality", index_naturality),
    ("protomodular-kernel", protomodular_kernel),
    ("factorization", factorization),
    ("theta-maltsev", theta_maltsev),
    ("acupuncturing-transitive", acupuncturing_transitive),
    ("maltsev-term", maltsev_term_suite),
    ("latin-stability", latin_stability),
    ("autonomous-quandle", autonomous_quandle),
    ("slominski-maltsev", slominski_maltsev_suite),
    ("internal-slominski", internal_slominski),
    ("internal-prequandle", internal_prequandle),
    ("umag-hst", umag_hst),
    ("skew-brace", skew_brace),
    ("enumeration-consistency", enumeration_consistency),
    ("canonical-invariance", canonical_invariance),
];

pub fn suite_names() -> impl Iterator<Item = &'static str> {
    SUITES.iter().map(|(name, _)| *name)
}

pub fn run_suite(name: &str, cfg: &TheoremConfig) -> Option<SuiteOutcome> {
    SUITES.iter().find(|(n, _)| *n == name).map(|(_, run)| run(cfg))
}

pub fn run_all(cfg: &TheoremConfig) -> Vec<SuiteOutcome> {
    SUITES.iter().map(|(_, run)| run(cfg)).collect()
}

fn agree<const N: usize>(values: [bool; N]) -> bool {
    values.iter().all(|&v| v == values[0])
}

/// Over every labeled ILO model: the four conditions equivalent to
/// associativity of the adjoint agree.
pub fn prop_assos(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("prop-assos");
    for n in cfg.orders(4) {
        for m in models(n, Ilo) {
            let values = check_associativity_equivalence(&m);
            t.check(agree(values), || json!({ "model": model_json(&m), "conditions": values }));
        }
    }
    t.finish()
}

/// Over every labeled ILO model: the three conditions equivalent to
/// commutativity of the adjoint agree.
pub fn prop_commut(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("prop-commut");
    for n in cfg.orders(4) {
        for m in models(n, Ilo) {
            let values = check_commutativity_equivalence(&m);
            t.check(agree(values), || json!({ "model": model_json(&m), "conditions": values }));
        }
    }
    t.finish()
}

pub fn slominski_identities(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("slominski-identities");
    for n in cfg.orders(4) {
        for m in models(n, Slominski) {
            let report = check_slominski_identities(&m).expect("enumerated as Slominski");
            t.check(report.all(), || json!({ "model": model_json(&m), "report": report }));
        }
    }
    t.finish()
}

/// Injective `d(-, x)` on a finite carrier is bijective, so every Slominski
/// model is hyper-Slominski.
pub fn finite_collapse(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("finite-collapse");
    for n in cfg.orders(4) {
        for m in models(n, Slominski) {
            let ok = m.has(HyperSlominski) && (0..n).all(|x| is_permutation(&m.d().column(x)));
            t.check(ok, || model_json(&m));
        }
    }
    t.finish()
}

pub fn class_lattice(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("class-lattice");
    for n in cfg.orders(3) {
        for class in [Ilo, Subtraction] {
            let req = EnumerationRequest::new(n, class);
            for table in crate::enumerate::enumerate_tables(&req).expect("within caps") {
                let flags = classify(&table.d, table.unit);
                let broken = lattice_violation(&flags, n);
                t.check(broken.is_none(), || json!({ "d": table.d, "rule": broken }));
            }
        }
    }
    t.finish()
}

/// `dual` is an involution; Involutive iff the dual has the same table;
/// Symmetric iff the dual table is commutative.
pub fn dual_involution(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("dual-involution");
    for n in cfg.orders(3) {
        for m in models(n, Ilo) {
            let dual = m.dual();
            let ok = dual.dual().d() == m.d()
                && m.has(Involutive) == (dual.d() == m.d())
                && m.has(Symmetric) == dual.d().is_commutative()
                && dual.axioms_hold();
            t.check(ok, || model_json(&m));
        }
    }
    t.finish()
}

/// Groups are hypersubtractions; abelian groups are Symmetric; Involutive
/// exactly at exponent two.
pub fn group_inclusion(_cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("group-inclusion");
    for (name, g) in catalog_up_to(16) {
        let m = from_group(&g);
        let ok = m.has(Hypersubtraction)
            && m.has(GroupDerived)
            && m.has(Symmetric) == g.is_abelian()
            && m.has(Involutive) == g.has_exponent_two();
        t.check(ok, || json!({ "group": name, "flags": m.flags() }));
    }
    t.finish()
}

/// Alexander quandles are autonomous, and latin exactly when `Id - f` is
/// bijective; conjugation quandles are quandles.
pub fn latin_alexander(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("latin-alexander");
    for (name, g) in catalog_up_to(cfg.group_order) {
        let q = conjugation_quandle(&g);
        t.check(q.has(Quandle), || json!({ "conjugation": name }));
        if !g.is_abelian() {
            continue;
        }
        for f in homomorphisms(&g, &g).into_iter().filter(|f| is_permutation(f)) {
            let datum = AlexanderDatum::new(g.clone(), f.clone()).expect("automorphism");
            let m = alexander(&datum);
            let ok = m.has(Autonomous) && m.has(Latin) == datum.id_minus_f_bijective();
            t.check(ok, || json!({ "group": name, "f": f }));
        }
    }
    t.finish()
}

/// Split epimorphisms between catalog groups grouped by base, keyed by
/// catalog position.
/// Split epis between catalog groups, keyed by (total, base) catalog indices.
type CatalogEpis = (Vec<(String, FiniteGroup)>, Vec<(usize, usize, SplitEpi<FiniteGroup>)>);

fn catalog_split_epis(cfg: &TheoremConfig) -> CatalogEpis {
    let groups = catalog_up_to(cfg.group_order);
    let mut epis = Vec::new();
    for (b, (_, base)) in groups.iter().enumerate() {
        for (x, (_, total)) in groups.iter().enumerate() {
            if total.order() % base.order() != 0 {
                continue;
            }
            for e in group_split_epis(total, base) {
                epis.push((x, b, e));
            }
        }
    }
    (groups, epis)
}

/// `group_index` is a hyperindex on every split epimorphism with the
/// inverse `(y, k) -> s(y) k`, and agrees with `model_index` on the
/// associated hypersubtractions.
pub fn semi_direct_index(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("semi-direct-index");
    let (groups, epis) = catalog_split_epis(cfg);
    for (x, b, e) in &epis {
        let w = group_index(e);
        let as_models = split_epi(
            from_group(e.total()),
            from_group(e.base()),
            e.f().to_vec(),
            e.s().to_vec(),
        )
        .expect("group homomorphisms preserve d");
        let agrees = model_index(&as_models).is_ok_and(|mw| mw == w);
        let ok = w.is_index && w.is_hyperindex && w.rho_inverse_verified && agrees;
        t.check(ok, || {
            json!({ "total": groups[*x].0, "base": groups[*b].0, "f": e.f(), "s": e.s(), "witness": w })
        });
    }
    t.finish()
}

fn for_each_morphism(
    cfg: &TheoremConfig,
    mut visit: impl FnMut(&[(String, FiniteGroup)], &(usize, usize, SplitEpi<FiniteGroup>), &(usize, usize, SplitEpi<FiniteGroup>), &[usize]),
) {
    let (groups, epis) = catalog_split_epis(cfg);
    let mut homs: BTreeMap<(usize, usize), Vec<Vec<usize>>> = BTreeMap::new();
    for a in &epis {
        for b in epis.iter().filter(|b| b.1 == a.1) {
            let hs = homs
                .entry((a.0, b.0))
                .or_insert_with(|| homomorphisms(&groups[a.0].1, &groups[b.0].1));
            for h in group_morphisms_over(&a.2, &b.2, hs) {
                visit(&groups, a, b, &h);
            }
        }
    }
}

/// `gamma' h = h gamma` for every morphism `h` of split epimorphisms over
/// a common base.
pub fn index_naturality(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("index-naturality");
    for_each_morphism(cfg, |groups, (x, b, e), (x2, _, e2), h| {
        let bad = naturality_violation(e, &group_index(e), e2, &group_index(e2), h);
        t.check(bad.is_none(), || {
            json!({ "total": groups[*x].0, "total2": groups[*x2].0, "base": groups[*b].0, "h": h, "at": bad })
        });
    });
    t.finish()
}

/// A morphism of split epimorphisms over a common base that restricts to
/// a bijection of kernels is a bijection.
pub fn protomodular_kernel(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("protomodular-kernel");
    for_each_morphism(cfg, |groups, (x, b, e), (x2, _, e2), h| {
        let verdict = kernel_iso_implies_iso(e, e2, h).expect("enumerated morphisms");
        t.check(verdict.implication_holds(), || {
            json!({ "total": groups[*x].0, "total2": groups[*x2].0, "base": groups[*b].0, "h": h })
        });
    });
    t.finish()
}

/// The index of `(p2, diagonal): X x X -> X` gives back the group
/// subtraction and every hypersubtraction; on a hyper-Slominski setting
/// that is not a subtraction it yields an index that is no hyperindex.
pub fn factorization(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("factorization");
    for (name, g) in catalog_up_to(cfg.group_order) {
        let induced = induced_self_structure(IndexFormula::Group(&g)).expect("groups have indexes");
        t.check(induced.model.d() == from_group(&g).d(), || json!({ "group": name }));
    }
    for n in cfg.orders(4) {
        for m in models(n, Hypersubtraction) {
            let ok = induced_self_structure(IndexFormula::Model(&m)).is_ok_and(|s| {
                s.model.d() == m.d()
                    && induced_self_structure(IndexFormula::Model(&s.model))
                        .is_ok_and(|again| again.model.d() == m.d())
            });
            t.check(ok, || model_json(&m));
        }
    }
    let d = OpTable::from_fn(3, |x, y| 2 * (3 + x - y) % 3);
    let m = IloModel::new(d, Some(0)).expect("2(x - y) on Z3");
    let ok = induced_self_structure(IndexFormula::Model(&m)).is_ok_and(|s| {
        s.witness.is_index
            && !s.witness.is_hyperindex
            && s.model.has(HyperSlominski)
            && !s.model.has(Hypersubtraction)
    });
    t.check(ok, || model_json(&m));
    t.finish()
}

/// Prequandles for the pullback and relation suites.
pub fn prequandle_catalog() -> Vec<(String, IloModel)> {
    let mut out: Vec<(String, IloModel)> =
        (1..=3).map(|n| (format!("T{n}"), trivial_quandle(n))).collect();
    out.push(("R3".into(), alexander(&AlexanderDatum::cyclic_multiplier(3, 2).unwrap())));
    out.push(("Z4[3]".into(), alexander(&AlexanderDatum::cyclic_multiplier(4, 3).unwrap())));
    let v4 = crate::group::cyclic(2).product(&crate::group::cyclic(2));
    // (a, b) -> (b, a + b), of order three
    let f = vec![0, 3, 1, 2];
    out.push(("V4[w]".into(), alexander(&AlexanderDatum::new(v4, f).unwrap())));
    for k in 2..=4 {
        out.push((format!("Z5[{k}]"), alexander(&AlexanderDatum::cyclic_multiplier(5, k).unwrap())));
    }
    out.push(("Conj(S3)".into(), conjugation_quandle(&PermutationGroup::symmetric(3).group)));
    out
}

/// Pullbacks of split epimorphisms of catalog prequandles: when the right
/// leg is acupuncturing, the two injections generate the pullback and the
/// theta decomposition reaches every pair. Two trivial quandles of order
/// two give a pullback that is not generated.
pub fn theta_maltsev(_cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("theta-maltsev");
    let cat = prequandle_catalog();
    let mut legs: Vec<(String, SplitEpi<IloModel>)> = Vec::new();
    for (name, m) in &cat {
        for x in 0..m.order() {
            legs.push((format!("{name}->1@{x}"), to_point(m, x).expect("to a point")));
        }
    }
    for (left_name, left) in &legs {
        for (right_name, right) in &legs {
            if left.total().order() * right.total().order() > 36 {
                continue;
            }
            let acupuncturing = is_acupuncturing_split_epi(right).expect("prequandles").is_acupuncturing();
            if !acupuncturing {
                continue;
            }
            let p = PullbackOfSplitEpis::new(left.clone(), right.clone()).expect("common base");
            let report = jointly_strongly_epic_check(&p);
            let ok = report.jointly_strongly_epic && p.theta_decomposition_holds().ok() == Some(Some(true));
            t.check(ok, || json!({ "left": left_name, "right": right_name, "trace": report.trace }));
        }
    }
    // fibred over a non-trivial base: X x Z -> Z
    for (zname, z) in cat.iter().filter(|(_, z)| z.order() <= 3) {
        for (xname, x) in cat.iter().filter(|(_, x)| x.order() * z.order() <= 12) {
            let leg = projection_leg(x, z);
            if !is_acupuncturing_split_epi(&leg).unwrap().is_acupuncturing() {
                continue;
            }
            for (yname, y) in cat.iter().filter(|(_, y)| y.order() * z.order() <= 12) {
                let left = projection_leg(y, z);
                if left.total().order() * leg.total().order() / z.order() > 36 {
                    continue;
                }
                let p = PullbackOfSplitEpis::new(left, leg.clone()).expect("common base");
                let report = jointly_strongly_epic_check(&p);
                let ok = report.jointly_strongly_epic && p.theta_decomposition_holds().ok() == Some(Some(true));
                t.check(ok, || json!({ "left": [yname, zname], "right": [xname, zname] }));
            }
        }
    }
    let t2 = trivial_quandle(2);
    let p = PullbackOfSplitEpis::new(to_point(&t2, 0).unwrap(), to_point(&t2, 0).unwrap()).unwrap();
    let report = jointly_strongly_epic_check(&p);
    t.check(!report.jointly_strongly_epic, || json!({ "left": "T2->1@0", "right": "T2->1@0" }));
    t.finish()
}

/// `X x Z -> Z` with section `z -> (0, z)`.
fn projection_leg(x: &IloModel, z: &IloModel) -> SplitEpi<IloModel> {
    let m = z.order();
    split_epi(
        product(x, z),
        z.clone(),
        (0..x.order() * m).map(|p| p % m).collect(),
        (0..m).collect(),
    )
    .expect("product projections split")
}

/// Acupuncturing reflexive relations are transitive; an equivalence
/// relation is acupuncturing exactly when its classes are latin.
pub fn acupuncturing_transitive(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("acupuncturing-transitive");
    for n in cfg.orders(4) {
        for m in iso_models(n, Prequandle) {
            for r in reflexive_relations(&m).expect("order at most four") {
                let report = check_relation(&r);
                let ok = (!report.acupuncturing || report.transitive)
                    && report.classes_latin.is_none_or(|latin| latin == report.acupuncturing);
                t.check(ok, || json!({ "base": model_json(&m), "pairs": r.pairs(), "report": report }));
            }
        }
    }
    t.finish()
}

/// The Mal'tsev term of every latin prequandle; on `R3` it is
/// `x - y + z`; on autonomous ones it is a homomorphism.
pub fn maltsev_term_suite(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("maltsev-term");
    for n in cfg.orders(5) {
        let req = EnumerationRequest::new(n, Prequandle).also(Latin);
        for m in enumerate(&req).expect("within caps") {
            let p = maltsev_term(&m).expect("latin prequandle");
            t.check(is_maltsev(&p), || model_json(&m));
            if m.has(Autonomous) {
                let report = check_autonomy_naturality(&m).expect("prequandle");
                t.check(report.p_is_homomorphism == Some(true), || model_json(&m));
            }
        }
    }
    let r3 = alexander(&AlexanderDatum::cyclic_multiplier(3, 2).unwrap());
    let p = maltsev_term(&r3).expect("R3 is latin");
    let affine = (0..27).all(|i| {
        let (x, y, z) = (i / 9, i / 3 % 3, i % 3);
        p.get(x, y, z) == (x + 3 - y + z) % 3
    });
    t.check(affine, || json!({ "model": "R3" }));
    t.finish()
}

/// Products and subalgebras of latin prequandles are latin prequandles.
pub fn latin_stability(_cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("latin-stability");
    let latin: Vec<(String, IloModel)> =
        prequandle_catalog().into_iter().filter(|(_, m)| m.has(Latin)).collect();
    for (a, ma) in &latin {
        for (b, mb) in &latin {
            if ma.order() * mb.order() > 36 {
                continue;
            }
            let p = product(ma, mb);
            t.check(p.has(Latin) && p.has(Prequandle), || json!({ "product": [a, b] }));
        }
        for x in 0..ma.order() {
            for y in x..ma.order() {
                let sub = crate::constructions::subalgebra_closure(ma, &[x, y]).expect("in range");
                let restricted = IloModel::new(ma.d().restrict(&sub), None);
                let ok = restricted.is_ok_and(|r| r.has(Latin) && r.has(Prequandle));
                t.check(ok, || json!({ "model": a, "seed": [x, y] }));
            }
        }
    }
    t.finish()
}

pub fn autonomous_quandle(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("autonomous-quandle");
    for n in cfg.orders(4) {
        for m in models(n, Prequandle) {
            t.check(!is_medial(m.d()) || is_right_distributive(m.d()), || model_json(&m));
        }
    }
    t.finish()
}

/// `p(x, y, z) = x o d(z, y)` is a Mal'tsev operation on every Slominski
/// model.
pub fn slominski_maltsev_suite(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("slominski-maltsev");
    for n in cfg.orders(4) {
        for m in models(n, Slominski) {
            let p = slominski_maltsev(&m).expect("Slominski");
            t.check(is_maltsev(&p), || model_json(&m));
        }
    }
    t.finish()
}

fn abelian_catalog(cfg: &TheoremConfig) -> Vec<(String, FiniteGroup)> {
    catalog_up_to(cfg.group_order).into_iter().filter(|(_, g)| g.is_abelian()).collect()
}

fn automorphism_count(g: &FiniteGroup) -> usize {
    homomorphisms(g, g).iter().filter(|f| is_permutation(f)).count()
}

/// Internal Slominski operations are `d(x, y) = f(x - y)` with `f` an
/// automorphism and `g f = Id`; there is one per automorphism.
pub fn internal_slominski(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("internal-slominski");
    for (name, g) in abelian_catalog(cfg) {
        let mut count = 0;
        for op in internal_operations(&g).expect("abelian") {
            let datum = InternalOpDatum::new(g.clone(), op.clone()).expect("abelian");
            let Ok(dec) = decompose_slominski(&datum) else { continue };
            count += 1;
            let n = g.order();
            let ok = is_permutation(&dec.f)
                && g.is_homomorphism_to(&g, &dec.f)
                && (0..n).all(|x| dec.g[dec.f[x]] == x)
                && (0..n).all(|x| (0..n).all(|y| op.get(x, y) == dec.f[g.op(x, g.inv(y))]));
            t.check(ok, || json!({ "group": name, "op": op }));
        }
        t.check(count == automorphism_count(&g), || json!({ "group": name, "count": count }));
    }
    t.finish()
}

/// Internal prequandles are exactly the Alexander quandles.
pub fn internal_prequandle(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("internal-prequandle");
    for (name, g) in abelian_catalog(cfg) {
        let mut count = 0;
        for op in internal_operations(&g).expect("abelian") {
            let datum = InternalOpDatum::new(g.clone(), op.clone()).expect("abelian");
            let Ok(alex) = extract_alexander(&datum) else { continue };
            count += 1;
            t.check(alexander(&alex).d() == &op, || json!({ "group": name, "op": op }));
        }
        t.check(count == automorphism_count(&g), || json!({ "group": name, "count": count }));
    }
    t.finish()
}

/// Unitary magmas on `{0..n-1}` with unit `0`: every one up to order three,
/// latin ones at order four.
fn unitary_magmas(n: usize) -> Vec<OpTable> {
    if n == 0 {
        return Vec::new();
    }
    let free = (n - 1) * (n - 1);
    let total = n.pow(free as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut vals = vec![0; free];
        for v in vals.iter_mut() {
            *v = c % n;
            c /= n;
        }
        let table = OpTable::from_fn(n, |x, y| match (x, y) {
            (0, y) => y,
            (x, 0) => x,
            (x, y) => vals[(x - 1) * (n - 1) + (y - 1)],
        });
        if n < 4 || (table.rows_are_permutations() && table.columns_are_permutations()) {
            out.push(table);
        }
    }
    out
}

/// A unitary magma and a hypersubtraction that are internal to each other
/// form an abelian group with `d(x, y) = x - y`.
pub fn umag_hst(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("umag-hst");
    for n in cfg.orders(4) {
        let subtractions: Vec<IloModel> = models(n, Hypersubtraction).collect();
        for star in unitary_magmas(n) {
            for d in &subtractions {
                let report = umag_hst_abelian_check(&star, 0, d.d()).expect("shared unit");
                let ok = !report.mutually_internal
                    || FiniteGroup::from_table(star.clone()).is_ok_and(|g| {
                        g.is_abelian()
                            && (0..n).all(|x| (0..n).all(|y| d.op(x, y) == g.op(x, g.inv(y))))
                    });
                t.check(ok, || json!({ "star": star, "d": d.d() }));
            }
        }
    }
    t.finish()
}

/// Trivial and opposite braces on catalog groups; the two indexes of
/// every induced split epimorphism are hyperindexes, they agree on trivial
/// braces, and on `G x G -> G` they differ when `G` is not abelian.
pub fn skew_brace(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("skew-brace");
    let groups = catalog_up_to(cfg.group_order);
    for (name, g) in &groups {
        let ok = is_skew_brace(SkewBrace::trivial(g).digroup()) && is_skew_brace(opposite_brace(g).digroup());
        t.check(ok, || json!({ "group": name }));
    }
    let (groups, epis) = catalog_split_epis(cfg);
    for (x, b, e) in &epis {
        let (ws, wc) = brace_indexes(&opposite_split_epi(e));
        let ok = ws.is_hyperindex && wc.is_hyperindex && ws.rho_inverse_verified && wc.rho_inverse_verified;
        t.check(ok, || json!({ "total": groups[*x].0, "base": groups[*b].0, "f": e.f(), "s": e.s() }));
        let trivial = crate::brace::brace_split_epi(
            SkewBrace::trivial(e.total()),
            SkewBrace::trivial(e.base()),
            e.f().to_vec(),
            e.s().to_vec(),
        )
        .expect("group split epimorphism");
        let (ts, tc) = brace_indexes(&trivial);
        t.check(ts == tc, || json!({ "trivial": groups[*x].0, "base": groups[*b].0 }));
    }
    for (name, g) in groups.iter().filter(|(_, g)| g.order() <= 8) {
        let n = g.order();
        let square = g.product(g);
        let e = split_epi(
            square,
            g.clone(),
            (0..n * n).map(|p| p % n).collect(),
            (0..n).map(|y| y * n + y).collect(),
        )
        .expect("projection and diagonal");
        let (ws, wc) = brace_indexes(&opposite_split_epi(&e));
        let differ = ws.gamma != wc.gamma;
        t.check(differ != g.is_abelian(), || json!({ "square": name }));
    }
    t.finish()
}

/// Labeled counts are sums of iso-class sizes, and shards partition the
/// labeled stream.
pub fn enumeration_consistency(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("enumeration-consistency");
    for n in cfg.orders(3) {
        for class in [Quandle, Hypersubtraction] {
            let labeled: Vec<IloModel> = models(n, class).collect();
            let classes = iso_classes(&labeled);
            let reps: Vec<IloModel> = iso_models(n, class).collect();
            let sizes: usize = classes.iter().map(|(_, c)| c).sum();
            let ok = sizes == labeled.len()
                && reps.len() == classes.len()
                && reps.iter().zip(&classes).all(|(r, (c, _))| r.d() == c.d());
            t.check(ok, || json!({ "class": class, "order": n }));
        }
        let whole: Vec<OpTable> = models(n, Ilo).map(|m| m.d().clone()).collect();
        let mut merged: Vec<OpTable> = (0..3)
            .flat_map(|i| {
                enumerate(&EnumerationRequest::new(n, Ilo).shard(i, 3))
                    .expect("valid shard")
                    .map(|m| m.d().clone())
                    .collect::<Vec<_>>()
            })
            .collect();
        merged.sort();
        t.check(merged == whole, || json!({ "shards": 3, "order": n }));
    }
    t.finish()
}

/// Canonical forms and flags are invariant under random relabelings, and
/// the isomorphism search recovers a witness.
pub fn canonical_invariance(cfg: &TheoremConfig) -> SuiteOutcome {
    let mut t = Tally::new("canonical-invariance");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for n in cfg.orders(4) {
        let mut sample: Vec<IloModel> = Vec::new();
        for class in [Quandle, Hypersubtraction, Latin] {
            sample.extend(iso_models(n, class));
        }
        for m in &sample {
            let (canon, cunit, _) = canonical_form(m.d(), m.unit());
            for _ in 0..cfg.samples {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let moved_unit = m.unit().map(|u| perm[u]);
                let moved = m.d().relabel(&perm);
                let ok = canonical_form(&moved, moved_unit).0 == canon
                    && canonical_form(&moved, moved_unit).1 == cunit
                    && classify(&moved, moved_unit) == *m.flags()
                    && find_isomorphism(m.d(), m.unit(), &moved, moved_unit).is_some();
                t.check(ok, || json!({ "model": model_json(m), "perm": perm }));
            }
        }
    }
    t.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_at_order_two() {
        let mut cfg = TheoremConfig::new(2);
        cfg.group_order = 6;
        for outcome in run_all(&cfg) {
            assert!(outcome.passed(), "{outcome:?}");
            assert!(outcome.checked > 0, "{}", outcome.suite);
        }
    }

    #[test]
    fn suites_are_found_by_name() {
        assert_eq!(suite_names().count(), SUITES.len());
        assert!(run_suite("no-such-suite", &TheoremConfig::new(1)).is_none());
        let out = run_suite("group-inclusion", &TheoremConfig::new(1)).unwrap();
        assert_eq!(out.checked, 25);
    }
}
