use affine_endo::builder::build_prime_plane;
use affine_endo::collineation::enumerate_translations;
use affine_endo::endo::{self, enumerate_endomorphisms};
use affine_endo::transgroup::build_group;
use affine_endo::{AffinePlane, Bounds, IncidenceDocument, IncidencePlane, LineId, PointBijection};
use proptest::prelude::*;
use proptest::sample::Index;

fn permutation(n: usize) -> impl Strategy<Value = PointBijection> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| PointBijection::from_images(v).unwrap())
}

fn random_structure() -> impl Strategy<Value = IncidencePlane> {
    (2usize..8).prop_flat_map(|n| {
        prop::collection::btree_set(prop::collection::btree_set(0..n, 1..=n), 0..10).prop_map(
            move |lines| {
                IncidencePlane::new(
                    n,
                    lines.into_iter().map(|l| l.into_iter().collect()).collect(),
                )
                .unwrap()
            },
        )
    })
}

proptest! {
    #[test]
    fn composing_with_inverse_gives_identity(f in permutation(9)) {
        prop_assert!(f.compose(&f.inverse()).is_identity());
        prop_assert!(f.inverse().compose(&f).is_identity());
    }

    #[test]
    fn composition_is_associative(a in permutation(6), b in permutation(6), c in permutation(6)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn parallel_is_reflexive_and_symmetric(plane in random_structure()) {
        for l in plane.line_ids() {
            prop_assert!(plane.parallel(l, l));
            for m in plane.line_ids() {
                prop_assert_eq!(plane.parallel(l, m), plane.parallel(m, l));
            }
        }
    }

    #[test]
    fn partition_classes_are_parallel_or_rejected(plane in random_structure()) {
        if let Ok(partition) = plane.parallel_partition() {
            let covered: usize = partition.classes().iter().map(Vec::len).sum();
            prop_assert_eq!(covered, plane.num_lines());
            for l in plane.line_ids() {
                for m in plane.line_ids() {
                    prop_assert_eq!(
                        partition.class_of(l) == partition.class_of(m),
                        plane.parallel(l, m)
                    );
                }
            }
        }
    }

    #[test]
    fn documents_round_trip(plane in random_structure()) {
        let doc = plane.to_document();
        let again = IncidenceDocument::from_json(&doc.to_json()).unwrap();
        prop_assert_eq!(&again, &doc);
        let reloaded = affine_endo::incidence::load_plane(&again).unwrap();
        prop_assert_eq!(reloaded, plane);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ag3_endomorphism_sums_commute(a in any::<Index>(), b in any::<Index>(), c in any::<Index>()) {
        let plane = AffinePlane::new(build_prime_plane(3).unwrap()).unwrap();
        let tr = enumerate_translations(&plane, &Bounds::default()).unwrap();
        let g = build_group(&plane, &tr).unwrap();
        let ends = enumerate_endomorphisms(&g, &Bounds::default()).unwrap();
        let (a, b, c) = (a.get(&ends), b.get(&ends), c.get(&ends));
        prop_assert_eq!(endo::add(&g, a, b).unwrap(), endo::add(&g, b, a).unwrap());
        // composition distributes over addition on the left for any endomorphisms
        let lhs = endo::compose(&g, a, &endo::add(&g, b, c).unwrap()).unwrap();
        let rhs = endo::add(&g, &endo::compose(&g, a, b).unwrap(), &endo::compose(&g, a, c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(endo::is_endomorphism(&g, &endo::add(&g, a, b).unwrap()).unwrap());
    }
}

#[test]
fn line_ids_are_dense() {
    let plane = build_prime_plane(5).unwrap();
    let ids: Vec<LineId> = plane.line_ids().collect();
    assert_eq!(ids.len(), 30);
    assert!(ids.iter().enumerate().all(|(i, l)| l.index() == i));
}
