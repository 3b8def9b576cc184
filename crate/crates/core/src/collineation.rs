//! Point bijections and their classification as collineations, dilations
//! and translations.
//!
//! Composition follows function notation: `f.compose(&g)` maps `P` to
//! `f(g(P))`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::builder::intersect;
use crate::check::{CheckResult, Witness};
use crate::error::{Error, Result};
use crate::incidence::{AffinePlane, DirectionId, LineId, PointId};
use crate::Bounds;

/// A permutation of the points of a plane, stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PointBijection {
    image: Vec<PointId>,
}

impl PointBijection {
    pub fn identity(n: usize) -> Self {
        Self {
            image: (0..n).map(PointId).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n {
                return Err(Error::NotPermutation(format!("image {i} out of range")));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotPermutation(format!("image {i} repeated")));
            }
        }
        Ok(Self {
            image: images.into_iter().map(PointId).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, p: PointId) -> PointId {
        self.image[p.0]
    }

    pub fn images(&self) -> &[PointId] {
        &self.image
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            self.len(),
            other.len(),
            "composing maps on different point sets"
        );
        Self {
            image: other.image.iter().map(|&p| self.image[p.0]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![PointId(0); self.len()];
        for (i, &p) in self.image.iter().enumerate() {
            image[p.0] = PointId(i);
        }
        Self { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, p)| p.0 == i)
    }

    pub fn fixed_points(&self) -> Vec<PointId> {
        self.image
            .iter()
            .enumerate()
            .filter(|(i, p)| p.0 == *i)
            .map(|(i, _)| PointId(i))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MapKind {
    General,
    Collineation,
    Dilation,
    Translation,
}

/// A point bijection tagged with its most specific kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifiedMap {
    pub map: PointBijection,
    pub kind: MapKind,
    pub fixed_points: Vec<PointId>,
    pub direction: Option<DirectionId>,
}

impl ClassifiedMap {
    pub fn is_identity(&self) -> bool {
        self.map.is_identity()
    }
}

fn check_size(plane: &AffinePlane, f: &PointBijection) -> Result<()> {
    if f.len() != plane.num_points() {
        return Err(Error::SizeMismatch {
            expected: plane.num_points(),
            found: f.len(),
        });
    }
    Ok(())
}

/// Whether the image of every line is again a line.
pub fn is_collineation(plane: &AffinePlane, f: &PointBijection) -> Result<bool> {
    check_size(plane, f)?;
    let incidence = plane.incidence();
    let mut buf = Vec::new();
    Ok(incidence.line_ids().all(|l| {
        buf.clear();
        buf.extend(plane.line(l).iter().map(|&p| f.apply(p)));
        buf.sort_unstable();
        incidence.find_line(&buf).is_some()
    }))
}

fn parallel_on_all_pairs(plane: &AffinePlane, f: &PointBijection) -> bool {
    let n = plane.num_points();
    (0..n).map(PointId).all(|p| {
        (p.0 + 1..n)
            .map(PointId)
            .all(|q| plane.parallel(plane.join(f.apply(p), f.apply(q)), plane.join(p, q)))
    })
}

/// A collineation that maps every line `PQ` to a line parallel to `PQ`.
pub fn is_dilation(plane: &AffinePlane, f: &PointBijection) -> Result<bool> {
    Ok(is_collineation(plane, f)? && parallel_on_all_pairs(plane, f))
}

/// The identity, or a dilation without fixed points.
pub fn is_translation(plane: &AffinePlane, f: &PointBijection) -> Result<bool> {
    check_size(plane, f)?;
    if f.is_identity() {
        return Ok(true);
    }
    Ok(f.fixed_points().is_empty() && is_dilation(plane, f)?)
}

/// Classifies a bijection, computing fixed points and, for non-identity
/// translations, the direction.
pub fn classify(plane: &AffinePlane, f: PointBijection) -> Result<ClassifiedMap> {
    let kind = if !is_collineation(plane, &f)? {
        MapKind::General
    } else if !parallel_on_all_pairs(plane, &f) {
        MapKind::Collineation
    } else if f.is_identity() || f.fixed_points().is_empty() {
        MapKind::Translation
    } else {
        MapKind::Dilation
    };
    let mut classified = ClassifiedMap {
        fixed_points: f.fixed_points(),
        map: f,
        kind,
        direction: None,
    };
    if kind == MapKind::Translation {
        classified.direction = direction(plane, &classified)?;
    }
    Ok(classified)
}

/// The line through `p` and its image, or `None` when `p` is fixed.
pub fn trace(plane: &AffinePlane, f: &ClassifiedMap, p: PointId) -> Result<Option<LineId>> {
    if f.kind < MapKind::Dilation {
        return Err(Error::NotDilation);
    }
    let image = f.map.apply(p);
    Ok((image != p).then(|| plane.join(p, image)))
}

/// The parallel class holding every trace of a translation.
///
/// All traces are computed and compared; `None` for the identity.
pub fn direction(plane: &AffinePlane, sigma: &ClassifiedMap) -> Result<Option<DirectionId>> {
    if sigma.kind != MapKind::Translation {
        return Err(Error::NotTranslation);
    }
    let mut found = None;
    for p in plane.points() {
        if let Some(l) = trace(plane, sigma, p)? {
            let d = plane.direction_of(l);
            match found {
                None => found = Some(d),
                Some(prev) if prev != d => return Err(Error::TraceClassMismatch(p)),
                Some(_) => {}
            }
        }
    }
    Ok(found)
}

/// All collineations, by backtracking over point images.
///
/// Points are assigned in index order. When point `c` is sent to `x`, each
/// earlier point `a` fixes the pair of lines `L = ac` and `L' = f(a)x`; the
/// two must have the same size and every assigned point must lie on `L`
/// exactly when its image lies on `L'`.
pub fn enumerate_collineations(plane: &AffinePlane, bounds: &Bounds) -> Result<Vec<ClassifiedMap>> {
    let n = plane.num_points();
    if n > bounds.collineation_points {
        return Err(Error::OrderTooLarge {
            order: n,
            bound: bounds.collineation_points,
        });
    }
    let mut search = CollineationSearch {
        plane,
        image: Vec::with_capacity(n),
        used: vec![false; n],
        found: Vec::new(),
    };
    search.extend();
    let mut found = search.found;
    found.sort();
    found.into_iter().map(|f| classify(plane, f)).collect()
}

struct CollineationSearch<'a> {
    plane: &'a AffinePlane,
    image: Vec<PointId>,
    used: Vec<bool>,
    found: Vec<PointBijection>,
}

impl CollineationSearch<'_> {
    fn extend(&mut self) {
        let n = self.plane.num_points();
        let c = self.image.len();
        if c == n {
            let f = PointBijection {
                image: self.image.clone(),
            };
            if is_collineation(self.plane, &f).unwrap_or(false) {
                self.found.push(f);
            }
            return;
        }
        for x in (0..n).map(PointId) {
            if self.used[x.0] || !self.consistent(PointId(c), x) {
                continue;
            }
            self.used[x.0] = true;
            self.image.push(x);
            self.extend();
            self.image.pop();
            self.used[x.0] = false;
        }
    }

    fn consistent(&self, c: PointId, x: PointId) -> bool {
        let plane = self.plane;
        (0..c.0).map(PointId).all(|a| {
            let line = plane.join(a, c);
            let image_line = plane.join(self.image[a.0], x);
            plane.line(line).len() == plane.line(image_line).len()
                && (0..c.0)
                    .map(PointId)
                    .all(|b| plane.contains(line, b) == plane.contains(image_line, self.image[b.0]))
        })
    }
}

/// All dilations, each determined by the images of two fixed base points.
///
/// With base points `A`, `B` and candidate images `A'`, `B'` on the parallel
/// to `AB` through `A'`, every point `C` off `AB` must go to the meet of the
/// parallel to `AC` through `A'` and the parallel to `BC` through `B'`.
/// Points on `AB` are then placed through an already constructed off-line
/// point `D`. Every candidate is validated with [`is_dilation`].
pub fn enumerate_dilations(plane: &AffinePlane, bounds: &Bounds) -> Result<Vec<ClassifiedMap>> {
    let order = plane.order();
    if order > bounds.plane_order {
        return Err(Error::OrderTooLarge {
            order,
            bound: bounds.plane_order,
        });
    }
    let base_line = LineId(0);
    let (a, b) = {
        let pts = plane.line(base_line);
        (pts[0], pts[1])
    };
    let mut found = BTreeSet::new();
    for a_img in plane.points() {
        let image_line = plane.parallel_through_point(base_line, a_img);
        for &b_img in plane.line(image_line) {
            if b_img == a_img {
                continue;
            }
            if let Some(f) =
                construct_dilation(plane, base_line, (a, b), (a_img, b_img), image_line)
            {
                if is_dilation(plane, &f)? {
                    found.insert(f);
                }
            }
        }
    }
    found.into_iter().map(|f| classify(plane, f)).collect()
}

fn construct_dilation(
    plane: &AffinePlane,
    base_line: LineId,
    (a, b): (PointId, PointId),
    (a_img, b_img): (PointId, PointId),
    image_line: LineId,
) -> Option<PointBijection> {
    let n = plane.num_points();
    let mut image: Vec<Option<PointId>> = vec![None; n];
    image[a.0] = Some(a_img);
    image[b.0] = Some(b_img);
    let mut anchor = None;
    for c in plane.points().filter(|&c| !plane.contains(base_line, c)) {
        let via_a = plane.parallel_through_point(plane.join(a, c), a_img);
        let via_b = plane.parallel_through_point(plane.join(b, c), b_img);
        let c_img = intersect(plane, via_a, via_b).ok()??;
        image[c.0] = Some(c_img);
        anchor.get_or_insert((c, c_img));
    }
    let (d, d_img) = anchor?;
    for &c in plane.line(base_line) {
        if image[c.0].is_some() {
            continue;
        }
        let via_d = plane.parallel_through_point(plane.join(d, c), d_img);
        image[c.0] = Some(intersect(plane, via_d, image_line).ok()??);
    }
    let images = image
        .into_iter()
        .map(|p| p.map(|p| p.0))
        .collect::<Option<Vec<_>>>()?;
    PointBijection::from_images(images).ok()
}

/// The identity together with every fixed-point-free dilation.
pub fn translations_from_dilations(dilations: &[ClassifiedMap]) -> Vec<ClassifiedMap> {
    dilations
        .iter()
        .filter(|d| d.kind == MapKind::Translation)
        .cloned()
        .collect()
}

pub fn enumerate_translations(plane: &AffinePlane, bounds: &Bounds) -> Result<Vec<ClassifiedMap>> {
    Ok(translations_from_dilations(&enumerate_dilations(
        plane, bounds,
    )?))
}

/// Closure of a set of maps under composition and inversion.
pub fn check_group_closure(name: &str, maps: &[ClassifiedMap]) -> CheckResult {
    let set: BTreeSet<&PointBijection> = maps.iter().map(|m| &m.map).collect();
    if !set.iter().any(|m| m.is_identity()) {
        return CheckResult::fail(name, 0, Witness::new("identity is missing"));
    }
    let mut cases = 0;
    for (i, a) in maps.iter().enumerate() {
        cases += 1;
        if !set.contains(&a.map.inverse()) {
            return CheckResult::fail(name, cases, Witness::new("inverse is missing").with("i", i));
        }
        for (j, b) in maps.iter().enumerate() {
            cases += 1;
            if !set.contains(&a.map.compose(&b.map)) {
                return CheckResult::fail(
                    name,
                    cases,
                    Witness::new("composite is missing")
                        .with("i", i)
                        .with("j", j),
                );
            }
        }
    }
    CheckResult::pass(name, cases)
}
