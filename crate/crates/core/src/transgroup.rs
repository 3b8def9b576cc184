//! The translations of a plane as an explicit finite group.
//!
//! Elements are ordered canonically: the identity first, then by image
//! array. `cayley[i][j]` is the index of `elements[i] ∘ elements[j]`.

use std::collections::HashMap;

use crate::check::{CheckResult, Witness};
use crate::collineation::{direction, ClassifiedMap, MapKind, PointBijection};
use crate::error::{Error, Result};
use crate::incidence::{AffinePlane, DirectionId};

#[derive(Debug, Clone)]
pub struct TranslationGroup {
    elements: Vec<ClassifiedMap>,
    cayley: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    direction_of: Vec<Option<DirectionId>>,
    index: HashMap<PointBijection, usize>,
    /// Row-major copy of `cayley` for the hot paths.
    flat: Vec<usize>,
}

/// Packages a translation set as a group, failing if it is not closed.
pub fn build_group(
    plane: &AffinePlane,
    translations: &[ClassifiedMap],
) -> Result<TranslationGroup> {
    let mut elements = translations.to_vec();
    elements.sort_by(|a, b| {
        b.is_identity()
            .cmp(&a.is_identity())
            .then_with(|| a.map.cmp(&b.map))
    });
    elements.dedup_by(|a, b| a.map == b.map);
    if !elements.first().is_some_and(ClassifiedMap::is_identity) {
        return Err(Error::MissingIdentity);
    }
    for e in &elements {
        if e.map.len() != plane.num_points() {
            return Err(Error::SizeMismatch {
                expected: plane.num_points(),
                found: e.map.len(),
            });
        }
        if e.kind != MapKind::Translation {
            return Err(Error::NotTranslation);
        }
    }
    let index: HashMap<PointBijection, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.map.clone(), i))
        .collect();
    let n = elements.len();
    let mut cayley = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let composite = elements[i].map.compose(&elements[j].map);
            cayley[i][j] = *index
                .get(&composite)
                .ok_or(Error::NotClosed { left: i, right: j })?;
        }
    }
    let inverse = (0..n)
        .map(|i| {
            (0..n)
                .find(|&j| cayley[i][j] == 0)
                .ok_or(Error::MissingInverse(i))
        })
        .collect::<Result<Vec<_>>>()?;
    let direction_of = elements
        .iter()
        .map(|e| direction(plane, e))
        .collect::<Result<Vec<_>>>()?;
    Ok(TranslationGroup {
        elements,
        flat: cayley.concat(),
        cayley,
        inverse,
        direction_of,
        index,
    })
}

impl TranslationGroup {
    /// Assembles a group from raw tables without any validation.
    ///
    /// Meant for fixtures that exercise the failure paths of the checks.
    pub fn from_raw_parts(
        elements: Vec<ClassifiedMap>,
        cayley: Vec<Vec<usize>>,
        inverse: Vec<usize>,
        direction_of: Vec<Option<DirectionId>>,
    ) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.map.clone(), i))
            .collect();
        Self {
            elements,
            flat: cayley.concat(),
            cayley,
            inverse,
            direction_of,
            index,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[ClassifiedMap] {
        &self.elements
    }

    pub fn cayley(&self) -> &[Vec<usize>] {
        &self.cayley
    }

    pub fn inverse(&self) -> &[usize] {
        &self.inverse
    }

    pub fn direction_of(&self) -> &[Option<DirectionId>] {
        &self.direction_of
    }

    pub fn index_of(&self, map: &PointBijection) -> Option<usize> {
        self.index.get(map).copied()
    }

    /// Index of `elements[i] ∘ elements[j]`.
    #[inline]
    pub fn compose(&self, i: usize, j: usize) -> usize {
        self.flat[i * self.elements.len() + j]
    }

    /// Smallest `k ≥ 1` with `g^k = id`.
    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut acc = i;
        while acc != 0 {
            acc = self.cayley[acc][i];
            k += 1;
        }
        k
    }

    /// The subgroup generated by `gens`, as a membership mask.
    pub fn saturate(&self, gens: &[usize]) -> Vec<bool> {
        self.spanning_tree(gens)
            .into_iter()
            .map(|node| node.is_some())
            .collect()
    }

    /// Breadth-first words over `gens`: for each reached element, the
    /// `(parent, generator)` step that first reached it. The identity maps
    /// to `Some((0, usize::MAX))`.
    pub(crate) fn spanning_tree(&self, gens: &[usize]) -> Vec<Option<(usize, usize)>> {
        let mut tree = vec![None; self.order()];
        tree[0] = Some((0, usize::MAX));
        let mut queue = std::collections::VecDeque::from([0]);
        while let Some(e) = queue.pop_front() {
            for (s, &g) in gens.iter().enumerate() {
                let next = self.cayley[e][g];
                if tree[next].is_none() {
                    tree[next] = Some((e, s));
                    queue.push_back(next);
                }
            }
        }
        tree
    }

    /// Conjugates every element by `delta`, returning `δ⁻¹ ∘ σ ∘ δ` for each σ,
    /// or `None` if some conjugate leaves the group.
    pub fn conjugation_action(&self, delta: &PointBijection) -> Option<Vec<usize>> {
        let delta_inv = delta.inverse();
        self.elements
            .iter()
            .map(|sigma| self.index_of(&delta_inv.compose(&sigma.map).compose(delta)))
            .collect()
    }
}

/// The Cayley table is symmetric.
pub fn check_abelian(g: &TranslationGroup) -> CheckResult {
    const NAME: &str = "translation group is abelian";
    let n = g.order();
    for i in 0..n {
        for j in i + 1..n {
            if g.cayley[i][j] != g.cayley[j][i] {
                return CheckResult::fail(
                    NAME,
                    i * n + j,
                    Witness::new("σ_i ∘ σ_j differs from σ_j ∘ σ_i")
                        .with("i", i)
                        .with("j", j),
                );
            }
        }
    }
    CheckResult::pass(NAME, n * n.saturating_sub(1) / 2)
}

/// Group axioms on the Cayley table: closure, identity, inverses, associativity.
pub fn check_group_axioms(g: &TranslationGroup) -> CheckResult {
    const NAME: &str = "translations form a group under composition";
    let n = g.order();
    let mut cases = 0;
    for i in 0..n {
        if g.cayley[i].len() != n || g.cayley[i].iter().any(|&k| k >= n) {
            return CheckResult::fail(
                NAME,
                cases,
                Witness::new("row leaves the element set").with("i", i),
            );
        }
    }
    for i in 0..n {
        cases += 1;
        if g.cayley[0][i] != i || g.cayley[i][0] != i {
            return CheckResult::fail(
                NAME,
                cases,
                Witness::new("index 0 is not a two-sided identity").with("i", i),
            );
        }
        let inv = g.inverse[i];
        if inv >= n || g.cayley[i][inv] != 0 || g.cayley[inv][i] != 0 {
            return CheckResult::fail(
                NAME,
                cases,
                Witness::new("inverse entry is wrong").with("i", i),
            );
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                cases += 1;
                if g.cayley[g.cayley[i][j]][k] != g.cayley[i][g.cayley[j][k]] {
                    return CheckResult::fail(
                        NAME,
                        cases,
                        Witness::new("composition is not associative")
                            .with("i", i)
                            .with("j", j)
                            .with("k", k),
                    );
                }
            }
        }
    }
    // the table must also agree with actual composition of the maps
    for i in 0..n {
        for j in 0..n {
            cases += 1;
            let composite = g.elements[i].map.compose(&g.elements[j].map);
            if g.index_of(&composite) != Some(g.cayley[i][j]) {
                return CheckResult::fail(
                    NAME,
                    cases,
                    Witness::new("table entry disagrees with composing the maps")
                        .with("i", i)
                        .with("j", j),
                );
            }
        }
    }
    CheckResult::pass(NAME, cases)
}

/// `δ⁻¹ ∘ σ ∘ δ` is a translation for every dilation δ and translation σ.
pub fn check_normal_in_dilations(g: &TranslationGroup, dilations: &[ClassifiedMap]) -> CheckResult {
    const NAME: &str = "translations are normal in the dilation group";
    let mut cases = 0;
    for (d, delta) in dilations.iter().enumerate() {
        let delta_inv = delta.map.inverse();
        for (s, sigma) in g.elements.iter().enumerate() {
            cases += 1;
            let conj = delta_inv.compose(&sigma.map).compose(&delta.map);
            if g.index_of(&conj).is_none() {
                return CheckResult::fail(
                    NAME,
                    cases,
                    Witness::new("conjugate is not a translation")
                        .with("dilation", d)
                        .with("translation", s),
                );
            }
        }
    }
    CheckResult::pass(NAME, cases)
}

/// Conjugating a translation by a dilation keeps its direction.
pub fn check_conjugation_direction(
    g: &TranslationGroup,
    dilations: &[ClassifiedMap],
) -> CheckResult {
    const NAME: &str = "conjugation by a dilation preserves direction";
    let mut cases = 0;
    for (d, delta) in dilations.iter().enumerate() {
        let delta_inv = delta.map.inverse();
        for s in 1..g.order() {
            cases += 1;
            let conj = delta_inv.compose(&g.elements[s].map).compose(&delta.map);
            let witness = || {
                Witness::new("conjugate has a different direction")
                    .with("dilation", d)
                    .with("translation", s)
            };
            match g.index_of(&conj) {
                Some(k) if g.direction_of[k] == g.direction_of[s] => {}
                Some(k) => return CheckResult::fail(NAME, cases, witness().with("conjugate", k)),
                None => {
                    return CheckResult::fail(
                        NAME,
                        cases,
                        Witness::new("conjugate is not a translation")
                            .with("dilation", d)
                            .with("translation", s),
                    )
                }
            }
        }
    }
    CheckResult::pass(NAME, cases)
}

/// Two translations with a common direction compose to the identity or to
/// a translation with that direction.
pub fn check_composition_direction(g: &TranslationGroup) -> CheckResult {
    const NAME: &str = "composition preserves a shared direction";
    let n = g.order();
    let mut cases = 0;
    for first in 1..n {
        for second in 1..n {
            let dir = g.direction_of[first];
            if dir != g.direction_of[second] {
                continue;
            }
            cases += 1;
            let k = g.cayley[second][first];
            if k != 0 && g.direction_of[k] != dir {
                return CheckResult::fail(
                    NAME,
                    cases,
                    Witness::new("σ₂ ∘ σ₁ changes direction")
                        .with("first", first)
                        .with("second", second)
                        .with("composite", k),
                );
            }
        }
    }
    CheckResult::pass(NAME, cases)
}

/// A generating set chosen greedily by lowest index.
pub fn generators(g: &TranslationGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut reached = g.saturate(&gens);
    while let Some(next) = reached.iter().position(|&r| !r) {
        gens.push(next);
        reached = g.saturate(&gens);
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::build_prime_plane;
    use crate::collineation::{enumerate_dilations, enumerate_translations};
    use crate::Bounds;

    fn group(p: u64) -> (AffinePlane, TranslationGroup) {
        let plane = AffinePlane::new(build_prime_plane(p).unwrap()).unwrap();
        let tr = enumerate_translations(&plane, &Bounds::default()).unwrap();
        let g = build_group(&plane, &tr).unwrap();
        (plane, g)
    }

    #[test]
    fn klein_group_structure() {
        let (_, g) = group(2);
        assert_eq!(g.order(), 4);
        assert_eq!(g.inverse(), &[0, 1, 2, 3]);
        assert!((1..4).all(|i| g.element_order(i) == 2));
        assert_eq!(g.direction_of()[0], None);
        assert!(g.direction_of()[1..].iter().all(Option::is_some));
        assert!(check_abelian(&g).passed);
        assert!(check_group_axioms(&g).passed);
        assert_eq!(generators(&g).len(), 2);
    }

    #[test]
    fn ag3_group_is_elementary_abelian() {
        let (_, g) = group(3);
        assert_eq!(g.order(), 9);
        assert!((1..9).all(|i| g.element_order(i) == 3));
        assert!(check_abelian(&g).passed);
        let gens = generators(&g);
        assert_eq!(gens.len(), 2);
        assert!(g.saturate(&gens).iter().all(|&r| r));
    }

    #[test]
    fn missing_identity_is_rejected() {
        let plane = AffinePlane::new(build_prime_plane(2).unwrap()).unwrap();
        let tr = enumerate_translations(&plane, &Bounds::default()).unwrap();
        assert_eq!(
            build_group(&plane, &tr[1..]).unwrap_err(),
            Error::MissingIdentity
        );
    }

    #[test]
    fn unclosed_set_is_rejected() {
        let plane = AffinePlane::new(build_prime_plane(3).unwrap()).unwrap();
        let tr = enumerate_translations(&plane, &Bounds::default()).unwrap();
        assert!(matches!(
            build_group(&plane, &tr[..2]),
            Err(Error::NotClosed { .. })
        ));
    }

    #[test]
    fn corrupted_table_breaks_commutativity() {
        let (_, g) = group(2);
        let mut cayley = g.cayley().to_vec();
        cayley[1].swap(2, 3);
        let bad = TranslationGroup::from_raw_parts(
            g.elements().to_vec(),
            cayley,
            g.inverse().to_vec(),
            g.direction_of().to_vec(),
        );
        let result = check_abelian(&bad);
        assert!(!result.passed);
        let w = result.witness.unwrap();
        assert_eq!((w.index("i"), w.index("j")), (Some(1), Some(2)));
        assert!(!check_group_axioms(&bad).passed);
    }

    #[test]
    fn normality_and_direction_checks() {
        for p in [2, 3] {
            let (plane, g) = group(p);
            let dil = enumerate_dilations(&plane, &Bounds::default()).unwrap();
            assert!(check_normal_in_dilations(&g, &dil).passed);
            assert!(check_conjugation_direction(&g, &dil).passed);
            assert!(check_composition_direction(&g).passed);
            for d in &dil {
                let mut action = g.conjugation_action(&d.map).unwrap();
                action.sort_unstable();
                assert_eq!(action, (0..g.order()).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn trivial_group_has_no_generators() {
        let (plane, g) = group(2);
        let trivial = build_group(&plane, &g.elements()[..1]).unwrap();
        assert!(generators(&trivial).is_empty());
        assert_eq!(trivial.element_order(0), 1);
    }
}
