use std::fs;
use std::path::Path;
use std::process::ExitCode;

use affine_endo::builder::build_prime_plane_bounded;
use affine_endo::collineation::{
    check_group_closure, enumerate_dilations, translations_from_dilations,
};
use affine_endo::endo::{self, GroupSelfMap};
use affine_endo::incidence::load_plane;
use affine_endo::transgroup::{self, TranslationGroup};
use affine_endo::{
    AffinePlane, Bounds, CheckResult, ClassifiedMap, Error, IncidenceDocument, IncidencePlane,
    Witness,
};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::report::{to_value, PlaneSummary, ReportDocument, Status};

pub fn build(order: u64, out: Option<&Path>, max_order: usize) -> ExitCode {
    let plane = match build_prime_plane_bounded(order, max_order) {
        Ok(plane) => plane,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = plane.to_document().to_json();
    let written = match out {
        Some(path) => fs::write(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: cannot write plane: {e}");
        return ExitCode::from(2);
    }
    eprintln!(
        "built AG(2,{order}): {} points, {} lines",
        plane.num_points(),
        plane.num_lines()
    );
    ExitCode::SUCCESS
}

fn load(path: &Path) -> Result<IncidencePlane, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let doc = IncidenceDocument::from_json(&text).map_err(|e| e.to_string())?;
    for field in doc.unknown_fields() {
        eprintln!(
            "warning: ignoring unknown field `{field}` in {}",
            path.display()
        );
    }
    load_plane(&doc).map_err(|e| e.to_string())
}

/// Loads a plane that must pass the axioms; anything else is an input error.
fn load_verified(command: &'static str, path: &Path) -> Result<AffinePlane, Box<ReportDocument>> {
    let plane = load(path).map_err(|e| Box::new(ReportDocument::error(command, None, e)))?;
    let summary = PlaneSummary::unverified(&plane);
    AffinePlane::new(plane)
        .map_err(|e| Box::new(ReportDocument::error(command, Some(summary), e.to_string())))
}

pub fn check(path: &Path) -> ReportDocument {
    const COMMAND: &str = "check";
    let plane = match load(path) {
        Ok(plane) => plane,
        Err(e) => return ReportDocument::error(COMMAND, None, e),
    };
    let report = plane.verify_axioms();
    for failed in report.checks().iter().filter(|c| !c.passed) {
        if let Some(w) = &failed.witness {
            eprintln!("axiom {} fails: {w}", failed.axiom);
        }
    }
    ReportDocument::new(
        COMMAND,
        Some(PlaneSummary::unverified(&plane)),
        to_value(&report),
        Status::from_passed(report.all_passed()),
    )
}

#[derive(Debug, Clone, Copy, Default)]
pub struct GroupFlags {
    pub dilations: bool,
    pub translations: bool,
    pub check_abelian: bool,
    pub check_normal: bool,
    pub check_directions: bool,
}

#[derive(Serialize)]
struct MapListing<'a> {
    count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    maps: Option<Vec<&'a affine_endo::PointBijection>>,
}

fn listing(maps: &[ClassifiedMap], include: bool) -> MapListing<'_> {
    MapListing {
        count: maps.len(),
        maps: include.then(|| maps.iter().map(|m| &m.map).collect()),
    }
}

fn group_payload(g: &TranslationGroup, include_maps: bool) -> Value {
    let mut payload = json!({
        "order": g.order(),
        "directions": g.direction_of(),
        "inverse": g.inverse(),
        "generators": transgroup::generators(g),
        "cayley": g.cayley(),
    });
    if include_maps {
        payload["maps"] = to_value(&g.elements().iter().map(|e| &e.map).collect::<Vec<_>>());
    }
    payload
}

/// Builds the group, turning a closure failure into a failed check.
fn build_group(
    plane: &AffinePlane,
    translations: &[ClassifiedMap],
) -> Result<TranslationGroup, CheckResult> {
    const NAME: &str = "translations form a group under composition";
    transgroup::build_group(plane, translations).map_err(|e| {
        let witness = match e {
            Error::NotClosed { left, right } => {
                Witness::new(e.to_string()).with("i", left).with("j", right)
            }
            Error::MissingInverse(i) => Witness::new(e.to_string()).with("i", i),
            other => Witness::new(other.to_string()),
        };
        CheckResult::fail(NAME, 0, witness)
    })
}

fn all_passed(checks: &[CheckResult]) -> bool {
    checks.iter().all(|c| c.passed)
}

pub fn groups(path: &Path, flags: GroupFlags, bounds: &Bounds) -> ReportDocument {
    const COMMAND: &str = "groups";
    let plane = match load_verified(COMMAND, path) {
        Ok(plane) => plane,
        Err(report) => return *report,
    };
    let summary = PlaneSummary::verified(&plane);
    let any_flag = flags.dilations
        || flags.translations
        || flags.check_abelian
        || flags.check_normal
        || flags.check_directions;
    let want_translations = flags.translations || !any_flag;

    let dilations = match enumerate_dilations(&plane, bounds) {
        Ok(d) => d,
        Err(e) => return ReportDocument::error(COMMAND, Some(summary), e.to_string()),
    };
    let translations = translations_from_dilations(&dilations);

    let mut results = Map::new();
    let mut checks = Vec::new();
    results.insert(
        "dilations".into(),
        to_value(&listing(&dilations, flags.dilations)),
    );
    if flags.dilations {
        checks.push(check_group_closure(
            "dilations form a group under composition",
            &dilations,
        ));
    }
    results.insert(
        "translations".into(),
        to_value(&listing(&translations, want_translations)),
    );

    match build_group(&plane, &translations) {
        Ok(g) => {
            checks.push(transgroup::check_group_axioms(&g));
            if flags.check_abelian {
                checks.push(transgroup::check_abelian(&g));
            }
            if flags.check_normal {
                checks.push(transgroup::check_normal_in_dilations(&g, &dilations));
            }
            if flags.check_directions {
                checks.push(transgroup::check_conjugation_direction(&g, &dilations));
                checks.push(transgroup::check_composition_direction(&g));
            }
            if want_translations {
                results.insert("group".into(), group_payload(&g, false));
            }
        }
        Err(failed) => checks.push(failed),
    }
    let status = Status::from_passed(all_passed(&checks));
    results.insert("checks".into(), to_value(&checks));
    eprintln!(
        "{} dilations, {} translations",
        dilations.len(),
        translations.len()
    );
    ReportDocument::new(COMMAND, Some(summary), Value::Object(results), status)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct EndoFlags {
    pub trace_preserving: bool,
    pub check_ring: bool,
    pub dump: bool,
}

fn tables(maps: &[GroupSelfMap]) -> Vec<&[usize]> {
    maps.iter().map(GroupSelfMap::table).collect()
}

pub fn endo(path: &Path, flags: EndoFlags, bounds: &Bounds) -> ReportDocument {
    const COMMAND: &str = "endo";
    let plane = match load_verified(COMMAND, path) {
        Ok(plane) => plane,
        Err(report) => return *report,
    };
    let summary = PlaneSummary::verified(&plane);
    let dilations = match enumerate_dilations(&plane, bounds) {
        Ok(d) => d,
        Err(e) => return ReportDocument::error(COMMAND, Some(summary), e.to_string()),
    };
    let g = match build_group(&plane, &translations_from_dilations(&dilations)) {
        Ok(g) => g,
        Err(failed) => {
            return ReportDocument::new(
                COMMAND,
                Some(summary),
                json!({ "checks": [failed] }),
                Status::Fail,
            )
        }
    };
    let ends = match endo::enumerate_endomorphisms(&g, bounds) {
        Ok(ends) => ends,
        Err(e) => return ReportDocument::error(COMMAND, Some(summary), e.to_string()),
    };

    let mut results = Map::new();
    let mut passed = true;
    let mut end_listing = json!({ "count": ends.len() });
    if flags.dump {
        end_listing["tables"] = to_value(&tables(&ends));
    }
    results.insert("endomorphisms".into(), end_listing);

    if flags.trace_preserving || flags.check_ring {
        let tp: Vec<GroupSelfMap> = ends
            .iter()
            .filter(|a| endo::is_trace_preserving(&g, a).unwrap_or(false))
            .cloned()
            .collect();
        let mut tp_listing = json!({ "count": tp.len() });
        if flags.dump {
            tp_listing["tables"] = to_value(&tables(&tp));
        }
        results.insert("trace_preserving".into(), tp_listing);
        if flags.check_ring {
            let closure = endo::check_tp_closure(&g, &tp);
            let mut ring = endo::check_ring_axioms(&g, &tp);
            ring.end_count = Some(ends.len());
            passed = ring.all_passed() && all_passed(&closure);
            results.insert("checks".into(), to_value(&closure));
            results.insert("ring".into(), to_value(&ring));
        }
        eprintln!("|End| = {}, |End^TP| = {}", ends.len(), tp.len());
    } else {
        eprintln!("|End| = {}", ends.len());
    }
    ReportDocument::new(
        COMMAND,
        Some(summary),
        Value::Object(results),
        Status::from_passed(passed),
    )
}

#[derive(Serialize)]
struct Claim {
    claim: &'static str,
    passed: bool,
    checks: Vec<CheckResult>,
}

impl Claim {
    fn new(claim: &'static str, checks: Vec<CheckResult>) -> Self {
        Self {
            claim,
            passed: all_passed(&checks),
            checks,
        }
    }
}

pub fn verify_all(path: &Path, bounds: &Bounds) -> ReportDocument {
    const COMMAND: &str = "verify-all";
    let incidence = match load(path) {
        Ok(plane) => plane,
        Err(e) => return ReportDocument::error(COMMAND, None, e),
    };
    let axioms = incidence.verify_axioms();
    if !axioms.all_passed() {
        return ReportDocument::new(
            COMMAND,
            Some(PlaneSummary::unverified(&incidence)),
            json!({ "stopped_at": "axioms", "axioms": axioms }),
            Status::Fail,
        );
    }
    let plane = match AffinePlane::new(incidence) {
        Ok(plane) => plane,
        Err(e) => return ReportDocument::error(COMMAND, None, e.to_string()),
    };
    let summary = PlaneSummary::verified(&plane);

    let dilations = match enumerate_dilations(&plane, bounds) {
        Ok(d) => d,
        Err(e) => return ReportDocument::error(COMMAND, Some(summary), e.to_string()),
    };
    let translations = translations_from_dilations(&dilations);
    let mut claims = vec![
        Claim::new(
            "the incidence structure is an affine plane",
            vec![CheckResult::pass("axioms A.1, A.2, A.3", 3)],
        ),
        Claim::new(
            "dilations form a group under composition",
            vec![check_group_closure(
                "dilations are closed under composition and inverse",
                &dilations,
            )],
        ),
    ];
    let g = match build_group(&plane, &translations) {
        Ok(g) => g,
        Err(failed) => {
            claims.push(Claim::new(
                "translations form a group under composition",
                vec![failed],
            ));
            return ReportDocument::new(
                COMMAND,
                Some(summary),
                json!({ "stopped_at": "translation group", "axioms": axioms, "claims": claims }),
                Status::Fail,
            );
        }
    };
    claims.extend([
        Claim::new(
            "translations form a group under composition",
            vec![transgroup::check_group_axioms(&g)],
        ),
        Claim::new(
            "the translation group is abelian",
            vec![transgroup::check_abelian(&g)],
        ),
        Claim::new(
            "translations form a normal subgroup of the dilations",
            vec![transgroup::check_normal_in_dilations(&g, &dilations)],
        ),
        Claim::new(
            "conjugation by a dilation preserves the direction of a translation",
            vec![transgroup::check_conjugation_direction(&g, &dilations)],
        ),
        Claim::new(
            "translations with a common direction compose to that direction or the identity",
            vec![transgroup::check_composition_direction(&g)],
        ),
    ]);

    let ends = match endo::enumerate_endomorphisms(&g, bounds) {
        Ok(ends) => ends,
        Err(e) => return ReportDocument::error(COMMAND, Some(summary), e.to_string()),
    };
    let tp: Vec<GroupSelfMap> = ends
        .iter()
        .filter(|a| endo::is_trace_preserving(&g, a).unwrap_or(false))
        .cloned()
        .collect();
    let mut ring = endo::check_ring_axioms(&g, &tp);
    ring.end_count = Some(ends.len());

    let [end_sum, end_comp] = endo::check_endomorphism_closure(&g, &ends);
    let [tp_sum, tp_comp] = endo::check_tp_closure(&g, &tp);
    claims.extend([
        Claim::new(
            "the sum of two endomorphisms is an endomorphism",
            vec![end_sum],
        ),
        Claim::new(
            "the composite of two endomorphisms is an endomorphism",
            vec![end_comp],
        ),
        Claim::new(
            "zero, unit and inversion maps are trace-preserving endomorphisms",
            vec![endo::check_special_maps(&g)],
        ),
        Claim::new(
            "the sum of two trace-preserving endomorphisms is trace-preserving",
            vec![tp_sum],
        ),
        Claim::new(
            "the composite of two trace-preserving endomorphisms is trace-preserving",
            vec![tp_comp],
        ),
        Claim::new(
            "zero, negation, unit and inversion identities hold on every endomorphism",
            endo::check_identities(&g, &ends),
        ),
        Claim::new(
            "trace-preserving endomorphisms form an abelian group under addition",
            vec![
                ring.add_closure.clone(),
                ring.add_associative.clone(),
                ring.add_identity.clone(),
                ring.add_inverses.clone(),
                ring.add_commutative.clone(),
            ],
        ),
        Claim::new(
            "trace-preserving endomorphisms form an associative ring with identity",
            ring.axioms().into_iter().cloned().collect(),
        ),
    ]);

    let passed = claims.iter().all(|c| c.passed);
    for claim in claims.iter().filter(|c| !c.passed) {
        eprintln!("FAILED: {}", claim.claim);
    }
    eprintln!(
        "{} dilations, {} translations, |End| = {}, |End^TP| = {}",
        dilations.len(),
        translations.len(),
        ends.len(),
        tp.len()
    );
    let results = json!({
        "axioms": axioms,
        "counts": {
            "dilations": dilations.len(),
            "translations": translations.len(),
            "endomorphisms": ends.len(),
            "trace_preserving": tp.len(),
        },
        "claims": claims,
        "ring": ring,
    });
    ReportDocument::new(COMMAND, Some(summary), results, Status::from_passed(passed))
}
