//! Enumerations cross-checked against brute force.

use std::collections::BTreeSet;

use affine_endo::builder::build_prime_plane;
use affine_endo::collineation::{
    enumerate_collineations, enumerate_dilations, enumerate_translations, is_collineation,
    is_dilation, is_translation, trace,
};
use affine_endo::endo::{self, enumerate_endomorphisms, GroupSelfMap};
use affine_endo::transgroup::build_group;
use affine_endo::{AffinePlane, Bounds, PointBijection, PointId};
use itertools::Itertools;

fn plane(p: u64) -> AffinePlane {
    AffinePlane::new(build_prime_plane(p).unwrap()).unwrap()
}

fn all_permutations(n: usize) -> impl Iterator<Item = PointBijection> {
    (0..n)
        .permutations(n)
        .map(|images| PointBijection::from_images(images).unwrap())
}

fn images(maps: &[affine_endo::ClassifiedMap]) -> BTreeSet<PointBijection> {
    maps.iter().map(|m| m.map.clone()).collect()
}

#[test]
fn ag2_every_permutation_is_a_collineation() {
    let p2 = plane(2);
    let brute: BTreeSet<_> = all_permutations(4)
        .filter(|f| is_collineation(&p2, f).unwrap())
        .collect();
    assert_eq!(brute.len(), 24);
    let searched = enumerate_collineations(&p2, &Bounds::default()).unwrap();
    assert_eq!(images(&searched), brute);
}

#[test]
fn ag2_dilations_and_translations_by_brute_force() {
    let p2 = plane(2);
    let bounds = Bounds::default();
    let dil: BTreeSet<_> = all_permutations(4)
        .filter(|f| is_dilation(&p2, f).unwrap())
        .collect();
    let tr: BTreeSet<_> = all_permutations(4)
        .filter(|f| is_translation(&p2, f).unwrap())
        .collect();
    assert_eq!(dil.len(), 4);
    assert_eq!(tr.len(), 4);
    assert_eq!(images(&enumerate_dilations(&p2, &bounds).unwrap()), dil);
    assert_eq!(images(&enumerate_translations(&p2, &bounds).unwrap()), tr);
}

#[test]
fn ag3_collineations_by_brute_force() {
    let p3 = plane(3);
    let brute: BTreeSet<_> = all_permutations(9)
        .filter(|f| is_collineation(&p3, f).unwrap())
        .collect();
    // |AGL(2,3)| = 9 * 48
    assert_eq!(brute.len(), 432);
    let searched = enumerate_collineations(&p3, &Bounds::default()).unwrap();
    assert_eq!(images(&searched), brute);
}

#[test]
fn two_point_dilations_match_filtered_collineations() {
    for p in [2, 3] {
        let pl = plane(p);
        let bounds = Bounds::default();
        let filtered: BTreeSet<_> = enumerate_collineations(&pl, &bounds)
            .unwrap()
            .into_iter()
            .map(|c| c.map)
            .filter(|f| is_dilation(&pl, f).unwrap())
            .collect();
        let constructed = enumerate_dilations(&pl, &bounds).unwrap();
        assert_eq!(images(&constructed), filtered);
        let n = p as usize;
        assert_eq!(filtered.len(), n * n * (n - 1));
    }
}

#[test]
fn ag5_dilations_all_pass_the_predicate() {
    let p5 = plane(5);
    let dil = enumerate_dilations(&p5, &Bounds::default()).unwrap();
    assert_eq!(dil.len(), 100);
    assert!(dil.iter().all(|d| is_dilation(&p5, &d.map).unwrap()));
}

#[test]
fn dilations_form_a_group() {
    for p in [2, 3] {
        let pl = plane(p);
        let dil = images(&enumerate_dilations(&pl, &Bounds::default()).unwrap());
        for a in &dil {
            assert!(dil.contains(&a.inverse()));
            for b in &dil {
                assert!(dil.contains(&a.compose(b)));
            }
        }
    }
}

#[test]
fn collineations_closed_on_ag2() {
    let p2 = plane(2);
    let col = images(&enumerate_collineations(&p2, &Bounds::default()).unwrap());
    for a in &col {
        assert!(is_collineation(&p2, &a.inverse()).unwrap());
        for b in &col {
            assert!(is_collineation(&p2, &a.compose(b)).unwrap());
        }
    }
}

#[test]
fn dilation_with_two_fixed_points_is_identity() {
    for p in [2, 3, 5] {
        let pl = plane(p);
        for d in enumerate_dilations(&pl, &Bounds::default()).unwrap() {
            if d.fixed_points.len() >= 2 {
                assert!(d.map.is_identity());
            }
        }
    }
}

#[test]
fn translation_traces_share_one_class() {
    for p in [2, 3, 5] {
        let pl = plane(p);
        for t in enumerate_translations(&pl, &Bounds::default()).unwrap() {
            let classes: BTreeSet<_> = pl
                .points()
                .filter_map(|pt| trace(&pl, &t, pt).unwrap())
                .map(|l| pl.direction_of(l))
                .collect();
            if t.map.is_identity() {
                assert!(classes.is_empty());
                assert_eq!(t.direction, None);
            } else {
                assert_eq!(classes.len(), 1);
                assert_eq!(t.direction, classes.into_iter().next());
            }
        }
    }
}

#[test]
fn dilation_traces_meet_or_are_parallel() {
    // traces of a non-identity dilation either all pass through one point or are all parallel
    for p in [3, 5] {
        let pl = plane(p);
        for d in enumerate_dilations(&pl, &Bounds::default()).unwrap() {
            if d.map.is_identity() {
                continue;
            }
            let traces: BTreeSet<_> = pl
                .points()
                .filter_map(|pt| trace(&pl, &d, pt).unwrap())
                .collect();
            match d.fixed_points.as_slice() {
                [] => {
                    let dirs: BTreeSet<_> = traces.iter().map(|&l| pl.direction_of(l)).collect();
                    assert_eq!(dirs.len(), 1);
                }
                [center] => assert!(traces.iter().all(|&l| pl.contains(l, *center))),
                _ => unreachable!("non-identity dilation with two fixed points"),
            }
        }
    }
}

fn brute_force_endomorphisms(g: &affine_endo::TranslationGroup) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    (0..n)
        .map(|_| 0..n)
        .multi_cartesian_product()
        .filter(|table| {
            (0..n).all(|i| (0..n).all(|j| table[g.compose(i, j)] == g.compose(table[i], table[j])))
        })
        .collect()
}

#[test]
fn generator_method_matches_brute_force_on_klein_group() {
    let pl = plane(2);
    let tr = enumerate_translations(&pl, &Bounds::default()).unwrap();
    let g = build_group(&pl, &tr).unwrap();
    let brute = brute_force_endomorphisms(&g);
    assert_eq!(brute.len(), 16);
    let generated: BTreeSet<Vec<usize>> = enumerate_endomorphisms(&g, &Bounds::default())
        .unwrap()
        .iter()
        .map(|a| a.table().to_vec())
        .collect();
    assert_eq!(generated, brute);

    // every one of the 256 tables that is an endomorphism fixes the identity
    assert!(brute.iter().all(|t| t[0] == 0));
    let tp: BTreeSet<Vec<usize>> = brute
        .iter()
        .filter(|t| {
            let a = GroupSelfMap::from_table(&g, t.to_vec()).unwrap();
            endo::is_trace_preserving(&g, &a).unwrap()
        })
        .cloned()
        .collect();
    assert_eq!(tp, BTreeSet::from([vec![0, 0, 0, 0], vec![0, 1, 2, 3]]));
}

#[test]
fn ag3_endomorphisms_satisfy_the_predicate() {
    let pl = plane(3);
    let tr = enumerate_translations(&pl, &Bounds::default()).unwrap();
    let g = build_group(&pl, &tr).unwrap();
    let ends = enumerate_endomorphisms(&g, &Bounds::default()).unwrap();
    assert_eq!(ends.len(), 81);
    for a in &ends {
        let n = g.order();
        assert!(
            (0..n)
                .all(|i| (0..n)
                    .all(|j| a.apply(g.compose(i, j)) == g.compose(a.apply(i), a.apply(j))))
        );
    }
    // the trace-preserving ones are exactly σ ↦ σ^k
    let powers: BTreeSet<Vec<usize>> = (0..3)
        .map(|k| {
            (0..g.order())
                .map(|s| (0..k).fold(0, |acc, _| g.compose(acc, s)))
                .collect()
        })
        .collect();
    let tp: BTreeSet<Vec<usize>> = endo::enumerate_tp_endomorphisms(&g, &Bounds::default())
        .unwrap()
        .iter()
        .map(|a| a.table().to_vec())
        .collect();
    assert_eq!(tp, powers);
}

#[test]
fn parallel_through_point_is_unique() {
    for p in [2, 3, 5] {
        let pl = plane(p);
        let inc = pl.incidence();
        for l in inc.line_ids() {
            for pt in pl.points() {
                let m = pl.parallel_through_point(l, pt);
                assert!(pl.contains(m, pt));
                assert!(inc.parallel(l, m));
                let candidates = inc
                    .lines_through(pt)
                    .iter()
                    .filter(|&&k| inc.parallel(l, k))
                    .count();
                assert_eq!(candidates, 1);
            }
        }
    }
}

#[test]
fn parallelism_is_an_equivalence_on_verified_planes() {
    for p in [2, 3, 5] {
        let pl = plane(p);
        let inc = pl.incidence();
        let lines: Vec<_> = inc.line_ids().collect();
        for &a in &lines {
            assert!(inc.parallel(a, a));
            for &b in &lines {
                assert_eq!(inc.parallel(a, b), inc.parallel(b, a));
                assert_eq!(inc.parallel(a, b), pl.direction_of(a) == pl.direction_of(b));
                if !inc.parallel(a, b) {
                    continue;
                }
                for &c in &lines {
                    if inc.parallel(b, c) {
                        assert!(inc.parallel(a, c));
                    }
                }
            }
        }
        let n = p as usize;
        let partition = pl.partition();
        assert_eq!(partition.num_classes(), n + 1);
        assert!(partition.classes().iter().all(|c| c.len() == n));
        assert_eq!(partition.num_classes() * n, inc.num_lines());
    }
}

#[test]
fn unique_join_on_verified_planes() {
    for p in [2, 3, 5] {
        let pl = plane(p);
        let n = pl.num_points();
        for a in 0..n {
            for b in a + 1..n {
                assert_eq!(
                    pl.incidence().joining_lines(PointId(a), PointId(b)).len(),
                    1
                );
            }
        }
    }
}
