//! Endomorphisms of the translation group and the ring they form.
//!
//! A self-map of the group is an index table: `table[i]` is the index of the
//! image of `elements[i]`. Sum and product are pointwise composition and map
//! composition:
//!
//! * `(α + β)(σ) = α(σ) ∘ β(σ)`
//! * `(α ∘ β)(σ) = α(β(σ))`
//!
//! A trace-preserving endomorphism keeps the direction of every translation.
//! Where `α(σ)` is the identity its direction is undefined and the condition
//! holds vacuously; this is what makes the zero map trace-preserving.

use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use serde::Serialize;

use crate::check::{CheckResult, Witness};
use crate::error::{Error, Result};
use crate::transgroup::{generators, TranslationGroup};
use crate::Bounds;

/// A map from the translation group to itself.
///
/// Equality, ordering and hashing look only at the table; the predicate
/// flags are memoized on first use.
#[derive(Debug, Clone, Serialize)]
#[serde(transparent)]
pub struct GroupSelfMap {
    table: Vec<usize>,
    #[serde(skip)]
    endomorphism: OnceLock<bool>,
    #[serde(skip)]
    trace_preserving: OnceLock<bool>,
}

impl PartialEq for GroupSelfMap {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for GroupSelfMap {}

impl Hash for GroupSelfMap {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.table.hash(state);
    }
}

impl PartialOrd for GroupSelfMap {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupSelfMap {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.table.cmp(&other.table)
    }
}

impl GroupSelfMap {
    /// Wraps a table after checking its length and entries against `g`.
    pub fn from_table(g: &TranslationGroup, table: Vec<usize>) -> Result<Self> {
        if table.len() != g.order() {
            return Err(Error::SizeMismatch {
                expected: g.order(),
                found: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&t| t >= g.order()) {
            return Err(Error::SizeMismatch {
                expected: g.order(),
                found: bad + 1,
            });
        }
        Ok(Self::raw(table))
    }

    fn raw(table: Vec<usize>) -> Self {
        Self {
            table,
            endomorphism: OnceLock::new(),
            trace_preserving: OnceLock::new(),
        }
    }

    fn known(table: Vec<usize>, endomorphism: bool, trace_preserving: bool) -> Self {
        let map = Self::raw(table);
        map.endomorphism.set(endomorphism).unwrap();
        map.trace_preserving.set(trace_preserving).unwrap();
        map
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    /// Cached endomorphism flag, if it has been computed.
    pub fn endomorphism_flag(&self) -> Option<bool> {
        self.endomorphism.get().copied()
    }

    pub fn trace_preserving_flag(&self) -> Option<bool> {
        self.trace_preserving.get().copied()
    }
}

fn check_len(g: &TranslationGroup, alpha: &GroupSelfMap) -> Result<()> {
    if alpha.table.len() != g.order() {
        return Err(Error::SizeMismatch {
            expected: g.order(),
            found: alpha.table.len(),
        });
    }
    Ok(())
}

/// `(α + β)(σ) = α(σ) ∘ β(σ)`.
pub fn add(
    g: &TranslationGroup,
    alpha: &GroupSelfMap,
    beta: &GroupSelfMap,
) -> Result<GroupSelfMap> {
    check_len(g, alpha)?;
    check_len(g, beta)?;
    Ok(GroupSelfMap::raw(
        alpha
            .table
            .iter()
            .zip(&beta.table)
            .map(|(&a, &b)| g.compose(a, b))
            .collect(),
    ))
}

/// `(α ∘ β)(σ) = α(β(σ))`.
pub fn compose(
    g: &TranslationGroup,
    alpha: &GroupSelfMap,
    beta: &GroupSelfMap,
) -> Result<GroupSelfMap> {
    check_len(g, alpha)?;
    check_len(g, beta)?;
    Ok(GroupSelfMap::raw(
        beta.table.iter().map(|&b| alpha.table[b]).collect(),
    ))
}

fn endomorphism_predicate(g: &TranslationGroup, alpha: &GroupSelfMap) -> bool {
    homomorphic(g, &alpha.table)
}

fn homomorphic(g: &TranslationGroup, table: &[usize]) -> bool {
    let n = g.order();
    table.first() == Some(&0)
        && (0..n).all(|i| (0..n).all(|j| table[g.compose(i, j)] == g.compose(table[i], table[j])))
}

/// `α(σ₁ ∘ σ₂) = α(σ₁) ∘ α(σ₂)` for all pairs, and `α(id) = id`.
pub fn is_endomorphism(g: &TranslationGroup, alpha: &GroupSelfMap) -> Result<bool> {
    check_len(g, alpha)?;
    Ok(*alpha
        .endomorphism
        .get_or_init(|| endomorphism_predicate(g, alpha)))
}

fn require_endomorphism(g: &TranslationGroup, alpha: &GroupSelfMap) -> Result<()> {
    if is_endomorphism(g, alpha)? {
        Ok(())
    } else {
        Err(Error::NotEndomorphism)
    }
}

/// Every σ goes to the identity.
pub fn zero_endo(g: &TranslationGroup) -> GroupSelfMap {
    GroupSelfMap::known(vec![0; g.order()], true, true)
}

/// The identity map of the group.
pub fn unit_endo(g: &TranslationGroup) -> GroupSelfMap {
    GroupSelfMap::known((0..g.order()).collect(), true, true)
}

/// `φ(σ) = σ⁻¹`, an endomorphism because the group is abelian.
pub fn inversion_endo(g: &TranslationGroup) -> GroupSelfMap {
    GroupSelfMap::known(g.inverse().to_vec(), true, true)
}

/// `(−α)(σ) = α(σ)⁻¹`, computed as `φ ∘ α`.
pub fn negate(g: &TranslationGroup, alpha: &GroupSelfMap) -> Result<GroupSelfMap> {
    require_endomorphism(g, alpha)?;
    compose(g, &inversion_endo(g), alpha)
}

fn trace_preserving_predicate(g: &TranslationGroup, alpha: &GroupSelfMap) -> bool {
    let dirs = g.direction_of();
    (1..g.order()).all(|s| {
        let image = alpha.table[s];
        image == 0 || dirs[image] == dirs[s]
    })
}

/// Whether α keeps the direction of every translation it does not kill.
pub fn is_trace_preserving(g: &TranslationGroup, alpha: &GroupSelfMap) -> Result<bool> {
    require_endomorphism(g, alpha)?;
    Ok(*alpha
        .trace_preserving
        .get_or_init(|| trace_preserving_predicate(g, alpha)))
}

/// Trace preservation of a single endomorphism, with the first translation
/// whose image changes direction as the witness.
pub fn check_trace_preserving(g: &TranslationGroup, alpha: &GroupSelfMap) -> Result<CheckResult> {
    const NAME: &str = "endomorphism preserves traces";
    require_endomorphism(g, alpha)?;
    let dirs = g.direction_of();
    for s in 1..g.order() {
        let image = alpha.table[s];
        if image != 0 && dirs[image] != dirs[s] {
            return Ok(CheckResult::fail(
                NAME,
                s,
                Witness::new("image of σ has a different direction")
                    .with("sigma", s)
                    .with("image", image),
            ));
        }
    }
    Ok(CheckResult::pass(NAME, g.order().saturating_sub(1)))
}

/// All endomorphisms, by choosing generator images and extending along
/// breadth-first words.
///
/// An assignment is rejected as soon as some element would receive two
/// different images; survivors are confirmed with [`is_endomorphism`].
/// Output is sorted by table.
pub fn enumerate_endomorphisms(g: &TranslationGroup, bounds: &Bounds) -> Result<Vec<GroupSelfMap>> {
    let n = g.order();
    if n > bounds.group_order {
        return Err(Error::OrderTooLarge {
            order: n,
            bound: bounds.group_order,
        });
    }
    let gens = generators(g);
    let tree = g.spanning_tree(&gens);
    let mut bfs: Vec<usize> = (1..n).filter(|&e| tree[e].is_some()).collect();
    // parents come before children when sorted by depth
    let depth = |mut e: usize| {
        let mut d = 0;
        while e != 0 {
            e = tree[e].expect("reached").0;
            d += 1;
        }
        d
    };
    bfs.sort_by_key(|&e| (depth(e), e));

    let mut found = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    let mut table = vec![0usize; n];
    loop {
        table[0] = 0;
        for &e in &bfs {
            let (parent, s) = tree[e].expect("reached");
            table[e] = g.compose(table[parent], choice[s]);
        }
        let consistent = (0..n).all(|e| {
            gens.iter()
                .zip(&choice)
                .all(|(&gen, &img)| table[g.compose(e, gen)] == g.compose(table[e], img))
        });
        if consistent {
            let map = GroupSelfMap::raw(table.clone());
            if is_endomorphism(g, &map)? {
                found.push(map);
            }
        }
        // odometer over generator images
        let mut k = 0;
        while k < choice.len() {
            choice[k] += 1;
            if choice[k] < n {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
        if k == choice.len() {
            break;
        }
    }
    found.sort();
    Ok(found)
}

pub fn enumerate_tp_endomorphisms(
    g: &TranslationGroup,
    bounds: &Bounds,
) -> Result<Vec<GroupSelfMap>> {
    let mut tp = Vec::new();
    for alpha in enumerate_endomorphisms(g, bounds)? {
        if is_trace_preserving(g, &alpha)? {
            tp.push(alpha);
        }
    }
    Ok(tp)
}

/// Outcome of the ring-axiom checks on a set of trace-preserving endomorphisms.
///
/// Witness indices refer to positions in the checked list (`alpha`, `beta`,
/// `gamma`) and to translation group elements (`sigma`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingReport {
    pub add_closure: CheckResult,
    pub add_associative: CheckResult,
    pub add_identity: CheckResult,
    pub add_inverses: CheckResult,
    pub add_commutative: CheckResult,
    pub mul_closure: CheckResult,
    pub mul_associative: CheckResult,
    pub left_distributive: CheckResult,
    pub right_distributive: CheckResult,
    pub mul_identity: CheckResult,
    /// Informational only; not part of [`RingReport::all_passed`].
    pub mul_commutative: CheckResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub end_count: Option<usize>,
    pub tp_count: usize,
    /// `Some(n)` when the addition and multiplication tables are those of
    /// the integers mod `n` under the labeling `k ↦ 1 + ... + 1`.
    pub integers_mod: Option<usize>,
}

impl RingReport {
    pub fn axioms(&self) -> [&CheckResult; 10] {
        [
            &self.add_closure,
            &self.add_associative,
            &self.add_identity,
            &self.add_inverses,
            &self.add_commutative,
            &self.mul_closure,
            &self.mul_associative,
            &self.left_distributive,
            &self.right_distributive,
            &self.mul_identity,
        ]
    }

    pub fn all_passed(&self) -> bool {
        self.axioms().iter().all(|c| c.passed)
    }
}

fn first_difference(a: &GroupSelfMap, b: &GroupSelfMap) -> usize {
    a.table
        .iter()
        .zip(&b.table)
        .position(|(x, y)| x != y)
        .unwrap_or(0)
}

/// Exhaustive ring-axiom check over `tp`.
pub fn check_ring_axioms(g: &TranslationGroup, tp: &[GroupSelfMap]) -> RingReport {
    let index: HashMap<&[usize], usize> = tp
        .iter()
        .enumerate()
        .map(|(i, a)| (a.table.as_slice(), i))
        .collect();
    let m = tp.len();
    let sum = |a: &GroupSelfMap, b: &GroupSelfMap| add(g, a, b).expect("tables sized to group");
    let prod =
        |a: &GroupSelfMap, b: &GroupSelfMap| compose(g, a, b).expect("tables sized to group");

    let closure = |name: &str, op: &dyn Fn(&GroupSelfMap, &GroupSelfMap) -> GroupSelfMap| {
        for i in 0..m {
            for j in 0..m {
                if !index.contains_key(op(&tp[i], &tp[j]).table.as_slice()) {
                    return CheckResult::fail(
                        name,
                        i * m + j + 1,
                        Witness::new("result is not in the set")
                            .with("alpha", i)
                            .with("beta", j),
                    );
                }
            }
        }
        CheckResult::pass(name, m * m)
    };

    let associative = |name: &str, op: &dyn Fn(&GroupSelfMap, &GroupSelfMap) -> GroupSelfMap| {
        let mut cases = 0;
        for i in 0..m {
            for j in 0..m {
                let ij = op(&tp[i], &tp[j]);
                for k in 0..m {
                    cases += 1;
                    let left = op(&ij, &tp[k]);
                    let right = op(&tp[i], &op(&tp[j], &tp[k]));
                    if left != right {
                        return CheckResult::fail(
                            name,
                            cases,
                            Witness::new("(a·b)·c differs from a·(b·c)")
                                .with("alpha", i)
                                .with("beta", j)
                                .with("gamma", k)
                                .with("sigma", first_difference(&left, &right)),
                        );
                    }
                }
            }
        }
        CheckResult::pass(name, cases)
    };

    let commutative = |name: &str, op: &dyn Fn(&GroupSelfMap, &GroupSelfMap) -> GroupSelfMap| {
        let mut cases = 0;
        for i in 0..m {
            for j in i + 1..m {
                cases += 1;
                let (ab, ba) = (op(&tp[i], &tp[j]), op(&tp[j], &tp[i]));
                if ab != ba {
                    return CheckResult::fail(
                        name,
                        cases,
                        Witness::new("a·b differs from b·a")
                            .with("alpha", i)
                            .with("beta", j)
                            .with("sigma", first_difference(&ab, &ba)),
                    );
                }
            }
        }
        CheckResult::pass(name, cases)
    };

    let two_sided_identity =
        |name: &str,
         neutral: GroupSelfMap,
         op: &dyn Fn(&GroupSelfMap, &GroupSelfMap) -> GroupSelfMap| {
            let Some(&e) = index.get(neutral.table.as_slice()) else {
                return CheckResult::fail(
                    name,
                    0,
                    Witness::new("neutral element is not in the set"),
                );
            };
            for (i, a) in tp.iter().enumerate() {
                for (left, right) in [(a, &tp[e]), (&tp[e], a)] {
                    let r = op(left, right);
                    if &r != a {
                        return CheckResult::fail(
                            name,
                            i + 1,
                            Witness::new("neutral element changes a")
                                .with("alpha", i)
                                .with("neutral", e)
                                .with("sigma", first_difference(&r, a)),
                        );
                    }
                }
            }
            CheckResult::pass(name, m)
        };

    let add_inverses = {
        const NAME: &str = "additive inverses";
        let zero = zero_endo(g);
        let mut result = CheckResult::pass(NAME, m);
        for (i, a) in tp.iter().enumerate() {
            let neg = match negate(g, a) {
                Ok(neg) => neg,
                Err(_) => {
                    result = CheckResult::fail(
                        NAME,
                        i + 1,
                        Witness::new("not an endomorphism").with("alpha", i),
                    );
                    break;
                }
            };
            if !index.contains_key(neg.table.as_slice()) {
                result = CheckResult::fail(
                    NAME,
                    i + 1,
                    Witness::new("−a is not in the set").with("alpha", i),
                );
                break;
            }
            let s = sum(a, &neg);
            if s != zero {
                result = CheckResult::fail(
                    NAME,
                    i + 1,
                    Witness::new("a + (−a) is not zero")
                        .with("alpha", i)
                        .with("sigma", first_difference(&s, &zero)),
                );
                break;
            }
        }
        result
    };

    let distributive = |name: &str, left_side: bool| {
        let mut cases = 0;
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    cases += 1;
                    let (a, b, c) = (&tp[i], &tp[j], &tp[k]);
                    let (lhs, rhs) = if left_side {
                        (prod(a, &sum(b, c)), sum(&prod(a, b), &prod(a, c)))
                    } else {
                        (prod(&sum(a, b), c), sum(&prod(a, c), &prod(b, c)))
                    };
                    if lhs != rhs {
                        return CheckResult::fail(
                            name,
                            cases,
                            Witness::new("distributive law fails")
                                .with("alpha", i)
                                .with("beta", j)
                                .with("gamma", k)
                                .with("sigma", first_difference(&lhs, &rhs)),
                        );
                    }
                }
            }
        }
        CheckResult::pass(name, cases)
    };

    RingReport {
        add_closure: closure("addition is closed", &sum),
        add_associative: associative("addition is associative", &sum),
        add_identity: two_sided_identity("zero is an additive identity", zero_endo(g), &sum),
        add_inverses,
        add_commutative: commutative("addition is commutative", &sum),
        mul_closure: closure("composition is closed", &prod),
        mul_associative: associative("composition is associative", &prod),
        left_distributive: distributive("a∘(b+c) = a∘b + a∘c", true),
        right_distributive: distributive("(a+b)∘c = a∘c + b∘c", false),
        mul_identity: two_sided_identity("unit is a two-sided identity", unit_endo(g), &prod),
        mul_commutative: commutative("composition is commutative", &prod),
        end_count: None,
        tp_count: m,
        integers_mod: integers_mod_labeling(g, tp).map(|_| m),
    }
}

/// Labels `tp` by `k ↦ 1 + ... + 1` (k terms) and checks that addition and
/// composition become arithmetic mod `|tp|`. Returns the position in `tp` of
/// each label.
pub fn integers_mod_labeling(g: &TranslationGroup, tp: &[GroupSelfMap]) -> Option<Vec<usize>> {
    let n = tp.len();
    if n == 0 {
        return None;
    }
    let index: HashMap<&[usize], usize> = tp
        .iter()
        .enumerate()
        .map(|(i, a)| (a.table.as_slice(), i))
        .collect();
    let unit = unit_endo(g);
    let mut multiples = vec![zero_endo(g)];
    for _ in 1..n {
        let next = add(g, multiples.last().unwrap(), &unit).ok()?;
        multiples.push(next);
    }
    let labels = multiples
        .iter()
        .map(|k| index.get(k.table.as_slice()).copied())
        .collect::<Option<Vec<_>>>()?;
    let mut distinct = labels.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != n {
        return None;
    }
    for a in 0..n {
        for b in 0..n {
            let (x, y) = (&multiples[a], &multiples[b]);
            if add(g, x, y).ok()? != multiples[(a + b) % n]
                || compose(g, x, y).ok()? != multiples[(a * b) % n]
            {
                return None;
            }
        }
    }
    Some(labels)
}

/// Sums and composites of endomorphisms are endomorphisms, checked with the
/// predicate itself rather than by membership.
pub fn check_endomorphism_closure(g: &TranslationGroup, ends: &[GroupSelfMap]) -> [CheckResult; 2] {
    let n = g.order();
    let run = |name: &str, op: &dyn Fn(&GroupSelfMap, &GroupSelfMap, usize) -> usize| {
        let mut buf = vec![0; n];
        let mut cases = 0;
        for (i, a) in ends.iter().enumerate() {
            for (j, b) in ends.iter().enumerate() {
                cases += 1;
                let sized = a.table.len() == n && b.table.len() == n;
                if sized {
                    for (s, slot) in buf.iter_mut().enumerate() {
                        *slot = op(a, b, s);
                    }
                }
                if !sized || !homomorphic(g, &buf) {
                    return CheckResult::fail(
                        name,
                        cases,
                        Witness::new("result is not an endomorphism")
                            .with("alpha", i)
                            .with("beta", j),
                    );
                }
            }
        }
        CheckResult::pass(name, cases)
    };
    [
        run("sum of endomorphisms is an endomorphism", &|a, b, s| {
            g.compose(a.table[s], b.table[s])
        }),
        run(
            "composite of endomorphisms is an endomorphism",
            &|a, b, s| a.table[b.table[s]],
        ),
    ]
}

/// Sums and composites of trace-preserving endomorphisms are trace-preserving.
pub fn check_tp_closure(g: &TranslationGroup, tp: &[GroupSelfMap]) -> [CheckResult; 2] {
    let run =
        |name: &str,
         op: fn(&TranslationGroup, &GroupSelfMap, &GroupSelfMap) -> Result<GroupSelfMap>| {
            let mut cases = 0;
            for (i, a) in tp.iter().enumerate() {
                for (j, b) in tp.iter().enumerate() {
                    cases += 1;
                    let ok = op(g, a, b)
                        .map(|r| endomorphism_predicate(g, &r) && trace_preserving_predicate(g, &r))
                        .unwrap_or(false);
                    if !ok {
                        return CheckResult::fail(
                            name,
                            cases,
                            Witness::new("result is not trace-preserving")
                                .with("alpha", i)
                                .with("beta", j),
                        );
                    }
                }
            }
            CheckResult::pass(name, cases)
        };
    [
        run(
            "sum of trace-preserving endomorphisms is trace-preserving",
            add,
        ),
        run(
            "composite of trace-preserving endomorphisms is trace-preserving",
            compose,
        ),
    ]
}

/// Pointwise identities over a list of endomorphisms:
/// `α + 0 = α`, `α + (−α) = 0`, `α ∘ 1 = α`, `−α = φ ∘ α`, and `φ ∘ φ = 1`.
pub fn check_identities(g: &TranslationGroup, ends: &[GroupSelfMap]) -> Vec<CheckResult> {
    let zero = zero_endo(g);
    let unit = unit_endo(g);
    let phi = inversion_endo(g);
    let ok = |r: Result<GroupSelfMap>, want: &GroupSelfMap| r.as_ref() == Ok(want);

    let per_alpha = |name: &str, holds: &dyn Fn(&GroupSelfMap) -> bool| match ends
        .iter()
        .position(|a| !holds(a))
    {
        Some(i) => CheckResult::fail(name, i + 1, Witness::new("identity fails").with("alpha", i)),
        None => CheckResult::pass(name, ends.len()),
    };

    let mut results = vec![
        per_alpha("α + 0 = α", &|a| ok(add(g, a, &zero), a)),
        per_alpha("α + (−α) = 0", &|a| {
            negate(g, a).and_then(|n| add(g, a, &n)).as_ref() == Ok(&zero)
        }),
        per_alpha("α ∘ 1 = α", &|a| ok(compose(g, a, &unit), a)),
        per_alpha("−α = φ ∘ α", &|a| {
            let pointwise = GroupSelfMap::raw(a.table.iter().map(|&t| g.inverse()[t]).collect());
            negate(g, a).ok() == Some(pointwise.clone()) && ok(compose(g, &phi, a), &pointwise)
        }),
    ];
    results.push(if ok(compose(g, &phi, &phi), &unit) {
        CheckResult::pass("φ ∘ φ = 1", 1)
    } else {
        CheckResult::fail("φ ∘ φ = 1", 1, Witness::new("φ is not an involution"))
    });
    results
}

/// Zero, unit and inversion maps re-checked from bare tables as
/// trace-preserving endomorphisms.
pub fn check_special_maps(g: &TranslationGroup) -> CheckResult {
    const NAME: &str = "zero, unit and inversion maps are trace-preserving endomorphisms";
    let specials = [
        ("zero", zero_endo(g)),
        ("unit", unit_endo(g)),
        ("inversion", inversion_endo(g)),
    ];
    for (i, (label, map)) in specials.iter().enumerate() {
        let fresh = GroupSelfMap::raw(map.table.clone());
        if !(endomorphism_predicate(g, &fresh) && trace_preserving_predicate(g, &fresh)) {
            return CheckResult::fail(NAME, i + 1, Witness::new(format!("{label} map fails")));
        }
    }
    CheckResult::pass(NAME, specials.len())
}
