use proptest::prelude::*;

use ilo_core::classes::lattice_violation;
use ilo_core::constructions::{product, subalgebra_closure};
use ilo_core::iso::{canonical_form, find_isomorphism};
use ilo_core::json::{Document, ModelDoc};
use ilo_core::{adjoint, classify, IloModel, OpTable};

/// A random ILO table: each column is a shuffled identity.
fn ilo_table(max: usize) -> impl Strategy<Value = OpTable> {
    (1..=max).prop_flat_map(|n| {
        let column = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
        prop::collection::vec(column, n).prop_map(move |cols| OpTable::from_fn(n, |x, y| cols[y][x]))
    })
}

fn with_perm(max: usize) -> impl Strategy<Value = (OpTable, Vec<usize>)> {
    ilo_table(max).prop_flat_map(|t| {
        let n = t.order();
        (Just(t), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn adjoint_satisfies_both_axioms(t in ilo_table(6)) {
        let o = adjoint(&t).unwrap();
        let n = t.order();
        for x in 0..n {
            for z in 0..n {
                prop_assert_eq!(t.get(o.get(x, z), x), z);
                prop_assert_eq!(o.get(x, t.get(z, x)), z);
            }
        }
    }

    #[test]
    fn classification_is_invariant_under_relabeling((t, p) in with_perm(5)) {
        let moved = t.relabel(&p);
        prop_assert_eq!(classify(&t, None), classify(&moved, None));
        prop_assert!(lattice_violation(&classify(&t, None), t.order()).is_none());
    }

    #[test]
    fn canonical_forms_agree_across_relabeling((t, p) in with_perm(5)) {
        let moved = t.relabel(&p);
        prop_assert_eq!(canonical_form(&t, None).0, canonical_form(&moved, None).0);
        let map = find_isomorphism(&t, None, &moved, None).expect("relabeling is an isomorphism");
        prop_assert!(t.homomorphism_violation(&moved, &map).is_none());
    }

    #[test]
    fn canonical_form_is_a_relabeling(t in ilo_table(5)) {
        let (canon, _, perm) = canonical_form(&t, None);
        prop_assert_eq!(t.relabel(&perm), canon.clone());
        prop_assert!(canon <= t);
    }

    #[test]
    fn dual_is_an_involution(t in ilo_table(5)) {
        let m = IloModel::new(t, None).unwrap();
        let back = m.dual().dual();
        prop_assert_eq!(back.d(), m.d());
        prop_assert_eq!(back.adjoint(), m.adjoint());
    }

    #[test]
    fn closure_is_extensive_and_idempotent(t in ilo_table(5), seed in prop::collection::vec(0usize..5, 0..3)) {
        let m = IloModel::new(t, None).unwrap();
        let seed: Vec<usize> = seed.into_iter().filter(|&x| x < m.order()).collect();
        let once = subalgebra_closure(&m, &seed).unwrap();
        prop_assert!(seed.iter().all(|x| once.contains(x)));
        prop_assert_eq!(subalgebra_closure(&m, &once).unwrap(), once);
    }

    #[test]
    fn product_projections_are_homomorphisms(a in ilo_table(3), b in ilo_table(3)) {
        let (ma, mb) = (IloModel::new(a, None).unwrap(), IloModel::new(b, None).unwrap());
        let p = product(&ma, &mb);
        let m = mb.order();
        let first: Vec<usize> = (0..p.order()).map(|i| i / m).collect();
        let second: Vec<usize> = (0..p.order()).map(|i| i % m).collect();
        prop_assert!(p.d().homomorphism_violation(ma.d(), &first).is_none());
        prop_assert!(p.adjoint().homomorphism_violation(ma.adjoint(), &first).is_none());
        prop_assert!(p.d().homomorphism_violation(mb.d(), &second).is_none());
        prop_assert!(p.adjoint().homomorphism_violation(mb.adjoint(), &second).is_none());
    }

    #[test]
    fn model_documents_round_trip(t in ilo_table(5)) {
        let doc = Document::Ilo(ModelDoc::from_table(t, None));
        let text = doc.to_json();
        let back: Document = text.parse().unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.to_json(), text);
    }
}
