//! Finite incidence structures, the affine plane axioms, and parallelism.
//!
//! An [`IncidencePlane`] is whatever a document describes: a point count and
//! a list of lines. It may or may not satisfy the axioms. An [`AffinePlane`]
//! can only be obtained from an incidence plane that passes all three axioms,
//! and it carries the precomputed join table and parallel partition that the
//! rest of the crate relies on.
//!
//! The incidence document is JSON:
//!
//! ```json
//! { "points": 4, "lines": [[0, 1], [2, 3], [0, 2], [1, 3], [0, 3], [1, 2]] }
//! ```
//!
//! Unknown top-level fields are kept and reported through
//! [`IncidenceDocument::unknown_fields`] rather than rejected.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::unionfind::UnionFind;

macro_rules! index_newtype {
    ($(#[$meta:meta])* $name:ident, $prefix:literal) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub usize);

        impl $name {
            #[inline]
            pub fn index(self) -> usize {
                self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, concat!($prefix, "{}"), self.0)
            }
        }
    };
}

index_newtype!(
    /// Dense point index in `[0, num_points)`.
    PointId,
    "P"
);
index_newtype!(
    /// Dense line index in `[0, num_lines)`.
    LineId,
    "L"
);
index_newtype!(
    /// Index of a parallel class.
    DirectionId,
    "D"
);

/// Serialized form of an incidence structure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IncidenceDocument {
    pub points: usize,
    pub lines: Vec<Vec<usize>>,
    #[serde(flatten, skip_serializing)]
    pub extra: BTreeMap<String, serde_json::Value>,
}

impl IncidenceDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::MalformedDocument(e.to_string()))
    }

    /// Top-level fields other than `points` and `lines`.
    pub fn unknown_fields(&self) -> Vec<&str> {
        self.extra.keys().map(String::as_str).collect()
    }

    /// Renders the document with one line per row.
    pub fn to_json(&self) -> String {
        let mut out = format!("{{\n  \"points\": {},\n  \"lines\": [", self.points);
        for (i, line) in self.lines.iter().enumerate() {
            out.push_str(if i == 0 { "\n    " } else { ",\n    " });
            out.push_str(&serde_json::to_string(line).expect("integer list serializes"));
        }
        if !self.lines.is_empty() {
            out.push_str("\n  ");
        }
        out.push_str("]\n}\n");
        out
    }
}

/// A finite point/line incidence structure, not yet known to be an affine plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidencePlane {
    num_points: usize,
    lines: Vec<Vec<PointId>>,
    lines_through: Vec<Vec<LineId>>,
    line_index: HashMap<Vec<PointId>, LineId>,
}

/// Parses and validates the shape of an incidence document.
pub fn load_plane(doc: &IncidenceDocument) -> Result<IncidencePlane> {
    IncidencePlane::new(doc.points, doc.lines.clone())
}

impl IncidencePlane {
    /// Builds a structure from raw line lists. Lines are stored sorted.
    pub fn new(num_points: usize, lines: Vec<Vec<usize>>) -> Result<Self> {
        let mut stored = Vec::with_capacity(lines.len());
        let mut line_index = HashMap::with_capacity(lines.len());
        let mut lines_through = vec![Vec::new(); num_points];
        for (i, raw) in lines.into_iter().enumerate() {
            if raw.is_empty() {
                return Err(Error::MalformedDocument(format!("line {i} is empty")));
            }
            let mut pts: Vec<PointId> = raw.into_iter().map(PointId).collect();
            pts.sort_unstable();
            if let Some(bad) = pts.iter().find(|p| p.0 >= num_points) {
                return Err(Error::MalformedDocument(format!(
                    "line {i} references point {} but there are only {num_points} points",
                    bad.0
                )));
            }
            if pts.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::MalformedDocument(format!(
                    "line {i} repeats a point"
                )));
            }
            let id = LineId(stored.len());
            if let Some(prev) = line_index.insert(pts.clone(), id) {
                return Err(Error::MalformedDocument(format!(
                    "line {i} duplicates line {}",
                    prev.0
                )));
            }
            for p in &pts {
                lines_through[p.0].push(id);
            }
            stored.push(pts);
        }
        Ok(Self {
            num_points,
            lines: stored,
            lines_through,
            line_index,
        })
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn points(&self) -> impl Iterator<Item = PointId> {
        (0..self.num_points).map(PointId)
    }

    pub fn line_ids(&self) -> impl Iterator<Item = LineId> {
        (0..self.lines.len()).map(LineId)
    }

    /// Sorted points of a line.
    pub fn line(&self, l: LineId) -> &[PointId] {
        &self.lines[l.0]
    }

    pub fn lines_through(&self, p: PointId) -> &[LineId] {
        &self.lines_through[p.0]
    }

    pub fn contains(&self, l: LineId, p: PointId) -> bool {
        self.lines[l.0].binary_search(&p).is_ok()
    }

    /// Looks up a line by its sorted point set.
    pub fn find_line(&self, sorted_points: &[PointId]) -> Option<LineId> {
        self.line_index.get(sorted_points).copied()
    }

    pub fn to_document(&self) -> IncidenceDocument {
        IncidenceDocument {
            points: self.num_points,
            lines: self
                .lines
                .iter()
                .map(|l| l.iter().map(|p| p.0).collect())
                .collect(),
            extra: BTreeMap::new(),
        }
    }

    pub fn joining_lines(&self, p: PointId, q: PointId) -> Vec<LineId> {
        self.lines_through[p.0]
            .iter()
            .copied()
            .filter(|&l| self.contains(l, q))
            .collect()
    }

    /// The unique line through two distinct points.
    pub fn line_through(&self, p: PointId, q: PointId) -> Result<LineId> {
        if p == q {
            return Err(Error::SamePoint);
        }
        match self.joining_lines(p, q).as_slice() {
            [] => Err(Error::NoJoin(p, q)),
            [l] => Ok(*l),
            many => Err(Error::MultipleJoins {
                p,
                q,
                count: many.len(),
            }),
        }
    }

    /// Lines are parallel when they coincide or share no point.
    pub fn parallel(&self, l: LineId, m: LineId) -> bool {
        l == m || disjoint(&self.lines[l.0], &self.lines[m.0])
    }

    pub fn verify_axioms(&self) -> AxiomReport {
        AxiomReport {
            unique_join: self.check_unique_join(),
            unique_parallel: self.check_unique_parallel(),
            triangle: self.check_triangle(),
        }
    }

    fn check_unique_join(&self) -> AxiomCheck {
        if let Some((i, l)) = self.lines.iter().enumerate().find(|(_, l)| l.len() < 2) {
            return AxiomCheck::fail(
                Axiom::UniqueJoin,
                AxiomWitness::ShortLine {
                    line: LineId(i),
                    size: l.len(),
                },
            );
        }
        for p in self.points() {
            for q in (p.0 + 1..self.num_points).map(PointId) {
                let count = self.joining_lines(p, q).len();
                if count != 1 {
                    return AxiomCheck::fail(
                        Axiom::UniqueJoin,
                        AxiomWitness::JoinCount {
                            points: [p, q],
                            lines: count,
                        },
                    );
                }
            }
        }
        AxiomCheck::pass(Axiom::UniqueJoin)
    }

    fn check_unique_parallel(&self) -> AxiomCheck {
        for l in self.line_ids() {
            for p in self.points() {
                let count = self.lines_through[p.0]
                    .iter()
                    .filter(|&&m| self.parallel(l, m))
                    .count();
                if count != 1 {
                    return AxiomCheck::fail(
                        Axiom::UniqueParallel,
                        AxiomWitness::ParallelCount {
                            point: p,
                            line: l,
                            parallels: count,
                        },
                    );
                }
            }
        }
        AxiomCheck::pass(Axiom::UniqueParallel)
    }

    fn check_triangle(&self) -> AxiomCheck {
        let n = self.num_points;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let collinear = self.lines_through[a]
                        .iter()
                        .any(|&l| self.contains(l, PointId(b)) && self.contains(l, PointId(c)));
                    if !collinear {
                        return AxiomCheck {
                            axiom: Axiom::Triangle,
                            passed: true,
                            witness: None,
                            triangle: Some([PointId(a), PointId(b), PointId(c)]),
                        };
                    }
                }
            }
        }
        AxiomCheck::fail(Axiom::Triangle, AxiomWitness::NoTriangle)
    }

    /// Groups lines into parallel classes.
    ///
    /// Classes are numbered by their smallest line. Every grouped pair is
    /// re-checked, so a structure where parallelism is not transitive is
    /// rejected with the offending pair.
    pub fn parallel_partition(&self) -> Result<DirectionPartition> {
        let n = self.lines.len();
        let mut uf = UnionFind::new(n);
        for l in 0..n {
            for m in l + 1..n {
                if self.parallel(LineId(l), LineId(m)) {
                    uf.union(l, m);
                }
            }
        }
        let mut root_to_class = HashMap::new();
        let mut class_of = Vec::with_capacity(n);
        let mut classes: Vec<Vec<LineId>> = Vec::new();
        for l in 0..n {
            let root = uf.find(l);
            let class = *root_to_class.entry(root).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[class].push(LineId(l));
            class_of.push(DirectionId(class));
        }
        for class in &classes {
            for (i, &l) in class.iter().enumerate() {
                for &m in &class[i + 1..] {
                    if !self.parallel(l, m) {
                        return Err(Error::NotEquivalence {
                            first: l,
                            second: m,
                        });
                    }
                }
            }
        }
        Ok(DirectionPartition { class_of, classes })
    }
}

fn disjoint(a: &[PointId], b: &[PointId]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Axiom {
    /// A.1: two distinct points lie on exactly one common line.
    #[serde(rename = "A.1")]
    UniqueJoin,
    /// A.2: through a point there is exactly one parallel to a given line.
    #[serde(rename = "A.2")]
    UniqueParallel,
    /// A.3: there are three points not on a common line.
    #[serde(rename = "A.3")]
    Triangle,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::UniqueJoin => "A.1",
            Axiom::UniqueParallel => "A.2",
            Axiom::Triangle => "A.3",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AxiomWitness {
    /// A pair of points lying on zero or several common lines.
    JoinCount { points: [PointId; 2], lines: usize },
    /// A line with fewer than two points.
    ShortLine { line: LineId, size: usize },
    /// A point with zero or several parallels to a line.
    ParallelCount {
        point: PointId,
        line: LineId,
        parallels: usize,
    },
    /// Every triple of points is collinear.
    NoTriangle,
}

impl fmt::Display for AxiomWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomWitness::JoinCount { points, lines } => write!(
                f,
                "points ({}, {}) lie on {lines} common lines",
                points[0].0, points[1].0
            ),
            AxiomWitness::ShortLine { line, size } => {
                write!(f, "line {} has only {size} point(s)", line.0)
            }
            AxiomWitness::ParallelCount {
                point,
                line,
                parallels,
            } => write!(
                f,
                "point {} has {parallels} parallels to line {}",
                point.0, line.0
            ),
            AxiomWitness::NoTriangle => f.write_str("no three non-collinear points exist"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<AxiomWitness>,
    /// A non-collinear triple, when the triangle axiom passes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangle: Option<[PointId; 3]>,
}

impl AxiomCheck {
    fn pass(axiom: Axiom) -> Self {
        Self {
            axiom,
            passed: true,
            witness: None,
            triangle: None,
        }
    }

    fn fail(axiom: Axiom, witness: AxiomWitness) -> Self {
        Self {
            axiom,
            passed: false,
            witness: Some(witness),
            triangle: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub unique_join: AxiomCheck,
    pub unique_parallel: AxiomCheck,
    pub triangle: AxiomCheck,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomStatus {
    Unchecked,
    Verified,
    Failed(Axiom, AxiomWitness),
}

impl AxiomReport {
    pub fn checks(&self) -> [&AxiomCheck; 3] {
        [&self.unique_join, &self.unique_parallel, &self.triangle]
    }

    pub fn all_passed(&self) -> bool {
        self.checks().iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks().into_iter().find(|c| !c.passed)
    }

    pub fn status(&self) -> AxiomStatus {
        match self.first_failure() {
            None => AxiomStatus::Verified,
            Some(c) => AxiomStatus::Failed(
                c.axiom,
                c.witness.clone().unwrap_or(AxiomWitness::NoTriangle),
            ),
        }
    }
}

/// Partition of the lines into parallel classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DirectionPartition {
    class_of: Vec<DirectionId>,
    classes: Vec<Vec<LineId>>,
}

impl DirectionPartition {
    pub fn class_of(&self, l: LineId) -> DirectionId {
        self.class_of[l.0]
    }

    pub fn classes(&self) -> &[Vec<LineId>] {
        &self.classes
    }

    pub fn class(&self, d: DirectionId) -> &[LineId] {
        &self.classes[d.0]
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }
}

/// An incidence structure that satisfies all three affine plane axioms.
#[derive(Debug, Clone)]
pub struct AffinePlane {
    plane: IncidencePlane,
    partition: DirectionPartition,
    /// `join[p * n + q]` is the line through `p` and `q` (unused on the diagonal).
    join: Vec<LineId>,
    /// `parallel_at[l * n + p]` is the parallel to `l` through `p`.
    parallel_at: Vec<LineId>,
}

impl AffinePlane {
    /// Verifies the axioms and precomputes the join and parallel tables.
    pub fn new(plane: IncidencePlane) -> Result<Self> {
        let report = plane.verify_axioms();
        if let Some(failed) = report.first_failure() {
            let witness = failed
                .witness
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_default();
            return Err(Error::NotVerified(format!(
                "axiom {} fails: {witness}",
                failed.axiom
            )));
        }
        let partition = plane.parallel_partition()?;
        let n = plane.num_points();
        let mut join = vec![LineId(usize::MAX); n * n];
        for (l, pts) in plane.lines.iter().enumerate() {
            for (i, &p) in pts.iter().enumerate() {
                for &q in &pts[i + 1..] {
                    join[p.0 * n + q.0] = LineId(l);
                    join[q.0 * n + p.0] = LineId(l);
                }
            }
        }
        let mut parallel_at = vec![LineId(usize::MAX); plane.num_lines() * n];
        for l in plane.line_ids() {
            let d = partition.class_of(l);
            for &m in partition.class(d) {
                for &p in plane.line(m) {
                    parallel_at[l.0 * n + p.0] = m;
                }
            }
        }
        Ok(Self {
            plane,
            partition,
            join,
            parallel_at,
        })
    }

    pub fn incidence(&self) -> &IncidencePlane {
        &self.plane
    }

    pub fn into_incidence(self) -> IncidencePlane {
        self.plane
    }

    pub fn num_points(&self) -> usize {
        self.plane.num_points
    }

    pub fn num_lines(&self) -> usize {
        self.plane.num_lines()
    }

    pub fn points(&self) -> impl Iterator<Item = PointId> {
        self.plane.points()
    }

    /// Number of points on a line (the same for every line).
    pub fn order(&self) -> usize {
        self.plane.lines[0].len()
    }

    pub fn line(&self, l: LineId) -> &[PointId] {
        self.plane.line(l)
    }

    pub fn contains(&self, l: LineId, p: PointId) -> bool {
        self.plane.contains(l, p)
    }

    pub fn partition(&self) -> &DirectionPartition {
        &self.partition
    }

    pub fn direction_of(&self, l: LineId) -> DirectionId {
        self.partition.class_of(l)
    }

    pub fn parallel(&self, l: LineId, m: LineId) -> bool {
        self.partition.class_of(l) == self.partition.class_of(m)
    }

    pub fn line_through(&self, p: PointId, q: PointId) -> Result<LineId> {
        if p == q {
            return Err(Error::SamePoint);
        }
        Ok(self.join(p, q))
    }

    /// Table lookup for the line through two distinct points.
    #[inline]
    pub(crate) fn join(&self, p: PointId, q: PointId) -> LineId {
        debug_assert_ne!(p, q);
        self.join[p.0 * self.num_points() + q.0]
    }

    /// The unique line through `p` parallel to `l`.
    pub fn parallel_through_point(&self, l: LineId, p: PointId) -> LineId {
        self.parallel_at[l.0 * self.num_points() + p.0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ag2_doc() -> IncidenceDocument {
        IncidenceDocument::from_json(
            r#"{"points":4,"lines":[[0,1],[2,3],[0,2],[1,3],[0,3],[1,2]]}"#,
        )
        .unwrap()
    }

    #[test]
    fn loads_ag2_listing() {
        let plane = load_plane(&ag2_doc()).unwrap();
        assert_eq!(plane.num_points(), 4);
        assert_eq!(plane.num_lines(), 6);
        assert!(plane.verify_axioms().all_passed());
    }

    #[test]
    fn single_point_loads_but_fails_triangle() {
        let doc = IncidenceDocument::from_json(r#"{"points":1,"lines":[]}"#).unwrap();
        let plane = load_plane(&doc).unwrap();
        let report = plane.verify_axioms();
        assert!(!report.triangle.passed);
        assert_eq!(report.triangle.witness, Some(AxiomWitness::NoTriangle));
        assert!(matches!(
            AffinePlane::new(plane),
            Err(Error::NotVerified(_))
        ));
    }

    #[test]
    fn rejects_malformed_documents() {
        let dup = IncidenceDocument::from_json(r#"{"points":3,"lines":[[0,1],[0,1]]}"#).unwrap();
        assert!(matches!(load_plane(&dup), Err(Error::MalformedDocument(_))));
        let reordered_dup =
            IncidenceDocument::from_json(r#"{"points":3,"lines":[[0,1],[1,0]]}"#).unwrap();
        assert!(matches!(
            load_plane(&reordered_dup),
            Err(Error::MalformedDocument(_))
        ));
        let out_of_range = IncidenceDocument::from_json(r#"{"points":2,"lines":[[0,2]]}"#).unwrap();
        assert!(matches!(
            load_plane(&out_of_range),
            Err(Error::MalformedDocument(_))
        ));
        let empty_line = IncidenceDocument::from_json(r#"{"points":2,"lines":[[]]}"#).unwrap();
        assert!(matches!(
            load_plane(&empty_line),
            Err(Error::MalformedDocument(_))
        ));
        let repeated = IncidenceDocument::from_json(r#"{"points":2,"lines":[[1,1]]}"#).unwrap();
        assert!(matches!(
            load_plane(&repeated),
            Err(Error::MalformedDocument(_))
        ));
        assert!(IncidenceDocument::from_json(r#"{"points":2,"lines":[[0,1]"#).is_err());
        assert!(IncidenceDocument::from_json(r#"{"points":-1,"lines":[]}"#).is_err());
        assert!(IncidenceDocument::from_json(r#"{"lines":[]}"#).is_err());
    }

    #[test]
    fn unknown_fields_are_kept_not_rejected() {
        let doc = IncidenceDocument::from_json(
            r#"{"points":2,"lines":[[0,1]],"name":"segment","meta":{"a":1}}"#,
        )
        .unwrap();
        assert_eq!(doc.unknown_fields(), vec!["meta", "name"]);
        assert!(load_plane(&doc).is_ok());
    }

    #[test]
    fn document_text_round_trips() {
        let doc = ag2_doc();
        let again = IncidenceDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(doc, again);
        let empty = IncidenceDocument::from_json(r#"{"points":1,"lines":[]}"#).unwrap();
        assert_eq!(
            IncidenceDocument::from_json(&empty.to_json()).unwrap(),
            empty
        );
    }

    #[test]
    fn missing_line_fails_a1_at_that_pair() {
        let doc =
            IncidenceDocument::from_json(r#"{"points":4,"lines":[[0,1],[2,3],[0,2],[1,3],[0,3]]}"#)
                .unwrap();
        let report = load_plane(&doc).unwrap().verify_axioms();
        assert!(!report.unique_join.passed);
        assert_eq!(
            report.unique_join.witness,
            Some(AxiomWitness::JoinCount {
                points: [PointId(1), PointId(2)],
                lines: 0
            })
        );
        assert!(matches!(
            report.status(),
            AxiomStatus::Failed(Axiom::UniqueJoin, _)
        ));
    }

    #[test]
    fn extra_line_fails_with_multiple_joins() {
        let plane = IncidencePlane::new(
            4,
            vec![
                vec![0, 1],
                vec![2, 3],
                vec![0, 2],
                vec![1, 3],
                vec![0, 3],
                vec![1, 2],
                vec![0, 1, 2],
            ],
        )
        .unwrap();
        let report = plane.verify_axioms();
        assert!(!report.unique_join.passed);
        assert!(matches!(
            plane.line_through(PointId(0), PointId(1)),
            Err(Error::MultipleJoins { count: 2, .. })
        ));
    }

    #[test]
    fn short_line_is_an_a1_failure() {
        let plane = IncidencePlane::new(2, vec![vec![0, 1], vec![0]]).unwrap();
        let report = plane.verify_axioms();
        assert_eq!(
            report.unique_join.witness,
            Some(AxiomWitness::ShortLine {
                line: LineId(1),
                size: 1
            })
        );
    }

    #[test]
    fn line_through_and_parallel_on_ag2() {
        let plane = load_plane(&ag2_doc()).unwrap();
        assert_eq!(plane.line_through(PointId(0), PointId(1)), Ok(LineId(0)));
        assert_eq!(plane.line_through(PointId(0), PointId(3)), Ok(LineId(4)));
        assert_eq!(
            plane.line_through(PointId(0), PointId(0)),
            Err(Error::SamePoint)
        );
        assert!(plane.parallel(LineId(0), LineId(1)));
        assert!(plane.parallel(LineId(2), LineId(2)));
        assert!(!plane.parallel(LineId(0), LineId(2)));

        let affine = AffinePlane::new(plane).unwrap();
        assert_eq!(affine.line_through(PointId(3), PointId(0)), Ok(LineId(4)));
        assert_eq!(
            affine.line_through(PointId(2), PointId(2)),
            Err(Error::SamePoint)
        );
        assert_eq!(
            affine.parallel_through_point(LineId(0), PointId(2)),
            LineId(1)
        );
        assert_eq!(
            affine.parallel_through_point(LineId(0), PointId(1)),
            LineId(0)
        );
    }

    #[test]
    fn ag2_partition_has_three_pairs() {
        let partition = load_plane(&ag2_doc())
            .unwrap()
            .parallel_partition()
            .unwrap();
        assert_eq!(partition.num_classes(), 3);
        assert_eq!(
            partition.classes(),
            &[
                vec![LineId(0), LineId(1)],
                vec![LineId(2), LineId(3)],
                vec![LineId(4), LineId(5)]
            ]
        );
    }

    #[test]
    fn intransitive_parallelism_is_reported() {
        // {0,1} and {2,3} are disjoint, {2,3} and {0,4} are disjoint, but {0,1} meets {0,4}.
        let plane = IncidencePlane::new(5, vec![vec![0, 1], vec![2, 3], vec![0, 4]]).unwrap();
        assert_eq!(
            plane.parallel_partition(),
            Err(Error::NotEquivalence {
                first: LineId(0),
                second: LineId(2)
            })
        );
    }
}
