//! Exhaustive verification suites over bounded ranges of objects.
//!
//! Every suite returns a [`SuiteReport`] with the number of instances checked
//! and the first few failures. Instances are visited in a fixed order, so the
//! output is deterministic for given bounds.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arc::{
    self, brute_force_equivariant_count, delta, enumerate, hom_count_sets, identity, orbit_image, pi,
    projective_points, psi_k_on_morphism, sigma, subdivide, submodule_from_subset, tau, AbstractCircle,
    ArcMorphism,
};
use crate::bmod::{self, BChain, DeltaMorphism};
use crate::dualtrans::{double_transpose_twist_check, star_transpose, transpose, transpose_at};
use crate::error::{Error, Result};
use crate::hyper;
use crate::permgeom::{cdesc, fullness_check, lift, minimality_witness, project, SetMapFin};
use crate::tropic::{self, TropElem, TropRatElem};

const KEPT_FAILURES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Category,
    Presentation,
    Epicyclic,
    Duality,
    Descent,
    Hypergroup,
    Counts,
    Tropic,
    Circle,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Category,
        Suite::Presentation,
        Suite::Epicyclic,
        Suite::Duality,
        Suite::Descent,
        Suite::Hypergroup,
        Suite::Counts,
        Suite::Tropic,
        Suite::Circle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Category => "category",
            Suite::Presentation => "presentation",
            Suite::Epicyclic => "epicyclic",
            Suite::Duality => "duality",
            Suite::Descent => "descent",
            Suite::Hypergroup => "hypergroup",
            Suite::Counts => "counts",
            Suite::Tropic => "tropic",
            Suite::Circle => "circle",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::arg("suite", format!("unknown suite `{s}`")))
    }
}

/// Ranges explored by the suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Largest period of an arc object (and side of a set map).
    pub max_period: i64,
    /// Largest degree, Frobenius index `k` and cyclic multiplicity `a`.
    pub max_deg: i64,
    /// Largest chain rank for the B-module and hyperfield suites.
    pub max_rank: i64,
    /// Largest period for literal associativity triples in all degrees.
    pub triple_period: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_period: 4,
            max_deg: 3,
            max_rank: 6,
            triple_period: 3,
        }
    }
}

impl Bounds {
    fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("max_period", self.max_period),
            ("max_deg", self.max_deg),
            ("triple_period", self.triple_period),
        ] {
            if v < 1 {
                return Err(Error::arg(name, format!("must be >= 1, got {v}")));
            }
        }
        if self.max_rank < 0 {
            return Err(Error::arg("max_rank", format!("must be >= 0, got {}", self.max_rank)));
        }
        if self.max_period > 8 || self.max_deg > 6 || self.max_rank > 10 || self.triple_period > 4 {
            return Err(Error::BoundExceeded {
                what: "verification bounds",
                requested: self.max_period.max(self.max_deg).max(self.max_rank),
                bound: 8,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checked: u64,
    pub failed: u64,
    /// The first few failures, in visiting order.
    pub failures: Vec<String>,
    /// Named sub-checks with their instance counts.
    pub parts: BTreeMap<&'static str, u64>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite,
            checked: 0,
            failed: 0,
            failures: Vec::new(),
            parts: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn check(&mut self, part: &'static str, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        *self.parts.entry(part).or_default() += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(format!("{part}: {}", what()));
            }
        }
    }

    /// Records an error from the library as a failure of `part`.
    fn check_result<T>(&mut self, part: &'static str, r: Result<T>, ok: impl FnOnce(&T) -> bool, what: impl FnOnce() -> String) {
        match r {
            Ok(v) => {
                let good = ok(&v);
                self.check(part, good, what)
            }
            Err(e) => self.check(part, false, || format!("{}: {e}", what())),
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {:<12} {:>12} checked, {} failed", self.suite.name(), self.checked, self.failed)?;
        for (part, n) in &self.parts {
            write!(f, "\n    {part}: {n}")?;
        }
        for msg in &self.failures {
            write!(f, "\n    ! {msg}")?;
        }
        Ok(())
    }
}

pub fn run(suite: Suite, bounds: &Bounds) -> Result<SuiteReport> {
    bounds.validate()?;
    match suite {
        Suite::Category => category(bounds),
        Suite::Presentation => presentation(bounds),
        Suite::Epicyclic => epicyclic(bounds),
        Suite::Duality => duality(bounds),
        Suite::Descent => descent(bounds),
        Suite::Hypergroup => hypergroup(bounds),
        Suite::Counts => counts(bounds),
        Suite::Tropic => tropic_laws(bounds),
        Suite::Circle => circle(bounds),
    }
}

pub fn run_all(bounds: &Bounds) -> Result<Vec<SuiteReport>> {
    Suite::ALL.into_iter().map(|s| run(s, bounds)).collect()
}

/// Canonical morphisms of `Arc ⋉ N` grouped by `(src, dst)`.
pub struct HomTable {
    pub max_period: i64,
    homs: Vec<Vec<ArcMorphism>>,
}

impl HomTable {
    pub fn new(max_period: i64, degrees: impl Iterator<Item = i64> + Clone) -> Result<Self> {
        let p = max_period as usize;
        let mut homs = vec![Vec::new(); p * p];
        for a in 1..=max_period {
            for b in 1..=max_period {
                let cell = &mut homs[(a as usize - 1) * p + b as usize - 1];
                for d in degrees.clone() {
                    cell.extend(enumerate(a, b, d, 1)?);
                }
            }
        }
        Ok(HomTable { max_period, homs })
    }

    pub fn get(&self, src: i64, dst: i64) -> &[ArcMorphism] {
        let p = self.max_period as usize;
        &self.homs[(src as usize - 1) * p + dst as usize - 1]
    }

    pub fn len(&self) -> usize {
        self.homs.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &ArcMorphism> {
        self.homs.iter().flatten()
    }
}

/// `compose(g, f)` is the class of the pointwise composite, of the expected
/// degree.
pub fn composite_law_holds(g: &ArcMorphism, f: &ArcMorphism) -> bool {
    let Ok(h) = arc::compose(g, f) else {
        return false;
    };
    if h.deg() != g.deg() * f.deg() || h.src() != f.src() || h.dst() != g.dst() {
        return false;
    }
    let c = g.dst();
    let shift = h.eval(0) - g.eval(f.eval(0));
    shift % c == 0
        && (0..f.src()).all(|x| h.eval(x) - g.eval(f.eval(x)) == shift)
        && (0..c).contains(&h.vals()[0])
}

fn associativity_triples(r: &mut SuiteReport, table: &HomTable, max_period: i64, deg_one_only: bool) {
    let keep = |f: &&ArcMorphism| !deg_one_only || f.deg() == 1;
    for a in 1..=max_period {
        for b in 1..=max_period {
            for c in 1..=max_period {
                for d in 1..=max_period {
                    for f in table.get(a, b).iter().filter(keep) {
                        for g in table.get(b, c).iter().filter(keep) {
                            let gf = arc::compose(g, f).expect("composable");
                            for h in table.get(c, d).iter().filter(keep) {
                                let lhs = arc::compose(&arc::compose(h, g).expect("composable"), f);
                                let rhs = arc::compose(h, &gf);
                                r.check("associativity", lhs == rhs, || format!("h = {h}, g = {g}, f = {f}"));
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Unitality and the composite law on every morphism and composable pair;
/// literal associativity on every triple up to `triple_period`, and on
/// linear triples up to `max_period`.
///
/// Together with the composite law, the literal triples cover associativity
/// in the full range: both bracketings are the class of `h(g(f(x)))`.
pub fn category(bounds: &Bounds) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Category);
    let p = bounds.max_period;
    let table = HomTable::new(p, 0..=bounds.max_deg)?;
    for f in table.iter() {
        let left = arc::compose(&identity(f.dst(), 1)?, f);
        let right = arc::compose(f, &identity(f.src(), 1)?);
        r.check("unitality", left.as_ref() == Ok(f) && right.as_ref() == Ok(f), || f.to_string());
    }
    for a in 1..=p {
        for b in 1..=p {
            for c in 1..=p {
                for f in table.get(a, b) {
                    for g in table.get(b, c) {
                        r.check("composite_law", composite_law_holds(g, f), || format!("g = {g}, f = {f}"));
                    }
                }
            }
        }
    }
    associativity_triples(&mut r, &table, bounds.triple_period.min(p), false);
    if p > bounds.triple_period {
        associativity_triples(&mut r, &table, p, true);
    }
    Ok(r)
}

/// The relations presenting `Lambda_a` as an extension of `Delta`, for
/// `[n]` with `n <= max_period` and `a <= max_deg`.
pub fn presentation(bounds: &Bounds) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Presentation);
    for a in 1..=bounds.max_deg {
        for n in 0..=bounds.max_period {
            presentation_at(&mut r, n, a)?;
        }
    }
    Ok(r)
}

fn eq_check(r: &mut SuiteReport, part: &'static str, lhs: Result<ArcMorphism>, rhs: Result<ArcMorphism>, what: impl FnOnce() -> String) {
    match (lhs, rhs) {
        (Ok(l), Ok(rr)) => r.check(part, l == rr, || format!("{}: {l} vs {rr}", what())),
        (l, rr) => r.check(part, false, || format!("{}: {:?} vs {:?}", what(), l.err(), rr.err())),
    }
}

/// Relations at the bracket object `[n]`, i.e. period `n + 1`.
pub fn presentation_at(r: &mut SuiteReport, n: i64, a: i64) -> Result<()> {
    let p = n + 1;
    let c = |g: &ArcMorphism, f: &ArcMorphism| arc::compose(g, f);
    let tau_p = tau(p, a)?;
    let mut acc = identity(p, a)?;
    for _ in 0..p * a {
        acc = c(&tau_p, &acc)?;
    }
    eq_check(r, "tau_order", Ok(acc), identity(p, a), || format!("n = {n}, a = {a}"));

    let tau_next = tau(p + 1, a)?;
    let tau_next2 = c(&tau_next, &tau_next)?;
    eq_check(
        r,
        "tau_sigma",
        c(&tau_p, &sigma(p, 0, a)?),
        c(&sigma(p, n, a)?, &tau_next2),
        || format!("j = 0, n = {n}, a = {a}"),
    );
    for j in 1..=n {
        eq_check(
            r,
            "tau_sigma",
            c(&tau_p, &sigma(p, j, a)?),
            c(&sigma(p, j - 1, a)?, &tau_next),
            || format!("j = {j}, n = {n}, a = {a}"),
        );
    }
    if n >= 1 {
        let tau_prev = tau(n, a)?;
        eq_check(r, "tau_delta", c(&tau_p, &delta(n, 0, a)?), delta(n, n, a), || format!("j = 0, n = {n}, a = {a}"));
        for j in 1..=n {
            eq_check(
                r,
                "tau_delta",
                c(&tau_p, &delta(n, j, a)?),
                c(&delta(n, j - 1, a)?, &tau_prev),
                || format!("j = {j}, n = {n}, a = {a}"),
            );
        }
    }
    simplicial_at(r, p, a)
}

/// Cosimplicial identities among faces and degeneracies out of `hat p`.
fn simplicial_at(r: &mut SuiteReport, p: i64, a: i64) -> Result<()> {
    let c = |g: &ArcMorphism, f: &ArcMorphism| arc::compose(g, f);
    for j in 0..=p + 1 {
        for i in 0..j {
            eq_check(
                r,
                "delta_delta",
                c(&delta(p + 1, j, a)?, &delta(p, i, a)?),
                c(&delta(p + 1, i, a)?, &delta(p, j - 1, a)?),
                || format!("i = {i}, j = {j}, p = {p}, a = {a}"),
            );
        }
    }
    for j in 0..p {
        for i in 0..=j {
            eq_check(
                r,
                "sigma_sigma",
                c(&sigma(p, j, a)?, &sigma(p + 1, i, a)?),
                c(&sigma(p, i, a)?, &sigma(p + 1, j + 1, a)?),
                || format!("i = {i}, j = {j}, p = {p}, a = {a}"),
            );
        }
    }
    // sigma_j ∘ delta_i : hat p -> hat (p+1) -> hat p
    for j in 0..p {
        for i in 0..=p {
            let lhs = c(&sigma(p, j, a)?, &delta(p, i, a)?);
            let rhs = if i == j || i == j + 1 {
                identity(p, a)
            } else if i < j {
                c(&delta(p - 1, i, a)?, &sigma(p - 1, j - 1, a)?)
            } else {
                c(&delta(p - 1, i - 1, a)?, &sigma(p - 1, j, a)?)
            };
            eq_check(r, "sigma_delta", lhs, rhs, || format!("i = {i}, j = {j}, p = {p}, a = {a}"));
        }
    }
    Ok(())
}

/// Faces and degeneracies `hat m -> hat n` with `m, n <= max_period`.
pub fn face_degeneracy_generators(max_period: i64) -> Result<Vec<ArcMorphism>> {
    let mut out = Vec::new();
    for m in 1..max_period {
        for j in 0..=m {
            out.push(delta(m, j, 1)?);
        }
        for j in 0..m {
            out.push(sigma(m, j, 1)?);
        }
    }
    Ok(out)
}

/// The relations of the epicyclic category, the correspondence `Psi_k-bar`,
/// and the factorization `f = psi_k ∘ h`.
pub fn epicyclic(bounds: &Bounds) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Epicyclic);
    let c = |g: &ArcMorphism, f: &ArcMorphism| arc::compose(g, f);
    let (p, kmax) = (bounds.max_period, bounds.max_deg);
    for n in 1..=p {
        eq_check(&mut r, "pi_unit", pi(n, 1), identity(n, 1), || format!("n = {n}"));
        for k in 1..=kmax {
            for l in 1..=kmax {
                eq_check(
                    &mut r,
                    "pi_pi",
                    c(&pi(n, l)?, &pi(l * n, k)?),
                    pi(n, k * l),
                    || format!("n = {n}, k = {k}, l = {l}"),
                );
            }
            eq_check(
                &mut r,
                "tau_pi",
                c(&tau(n, 1)?, &pi(n, k)?),
                c(&pi(n, k)?, &tau(k * n, 1)?),
                || format!("n = {n}, k = {k}"),
            );
        }
    }
    for alpha in face_degeneracy_generators(p + 1)? {
        for k in 1..=kmax {
            let (m, n) = (alpha.src(), alpha.dst());
            eq_check(
                &mut r,
                "pi_subdivision",
                c(&alpha, &pi(m, k)?),
                c(&pi(n, k)?, &subdivide(&alpha, k)?),
                || format!("alpha = {alpha}, k = {k}"),
            );
            let classes = psi_k_on_morphism(&alpha, k)?;
            r.check("subdivision_in_correspondence", classes.contains(&subdivide(&alpha, k)?), || {
                format!("alpha = {alpha}, k = {k}")
            });
        }
    }
    let linear = HomTable::new(p, 1..=1)?;
    for f in linear.iter() {
        for k in 1..=kmax {
            r.check_result("correspondence_size", psi_k_on_morphism(f, k), |s| s.len() as i64 == k, || {
                format!("f = {f}, k = {k}")
            });
        }
    }
    let all = HomTable::new(p, 1..=kmax)?;
    for f in all.iter() {
        r.check_result(
            "factorization",
            arc::factor(f).and_then(|(psi_k, h)| {
                let back = arc::compose(&psi_k, &h)?;
                Ok(h.deg() == 1 && back == *f)
            }),
            |ok| *ok,
            || f.to_string(),
        );
    }
    Ok(r)
}

/// Transpose laws on linear morphisms with periods `<= max_period`.
pub fn duality(bounds: &Bounds) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Duality);
    let table = HomTable::new(bounds.max_period, 1..=1)?;
    for f in table.iter() {
        let (n, m) = (f.src(), f.dst());
        let ts: Vec<i64> = (0..m).map(|y| transpose_at(f, y)).collect::<Result<_>>()?;
        // the window of x covers one period beyond the fundamental one on each side
        let ok = (-n..2 * n).all(|x| (0..m).all(|y| (f.eval(x) >= y) == (x >= ts[y as usize])));
        r.check("adjunction", ok, || f.to_string());
        r.check_result("double_transpose", double_transpose_twist_check(f), |b| *b, || f.to_string());
        r.check_result(
            "star_inverse",
            star_transpose(f).and_then(|s| transpose(&s)),
            |t| t == f,
            || f.to_string(),
        );
        r.check_result(
            "transpose_periodic",
            transpose(f),
            |t| (0..m).all(|y| t.eval(y + m) == t.eval(y) + n),
            || f.to_string(),
        );
    }
    for a in 1..=bounds.max_period {
        for b in 1..=bounds.max_period {
            for c in 1..=bounds.max_period {
                for f in table.get(a, b) {
                    let tf = transpose(f)?;
                    for g in table.get(b, c) {
                        let lhs = transpose(&arc::compose(g, f)?)?;
                        let rhs = arc::compose(&tf, &transpose(g)?)?;
                        r.check("contravariance", lhs == rhs, || format!("g = {g}, f = {f}"));
                    }
                }
            }
        }
    }
    for n in 1..=bounds.max_period {
        for m in 1..=bounds.max_period {
            let homs = table.get(n, m);
            let mut images: Vec<ArcMorphism> = homs.iter().map(transpose).collect::<Result<_>>()?;
            images.sort();
            images.dedup();
            let mut back = table.get(m, n).to_vec();
            back.sort();
            r.check("transpose_bijective", images == back, || format!("Hom(hat {n}, hat {m})"));
        }
    }
    Ok(r)
}

/// Lifting of set maps with both sides `<= max_period`.
pub fn descent(bounds: &Bounds) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Descent);
    let b = bounds.max_period;
    for p in 1..=b {
        for q in 1..=b {
            for s in SetMapFin::all(p, q)? {
                let f = lift(&s);
                r.check("project_lift", project(&f).as_ref() == Ok(&s), || s.to_string());
                r.check("degree_is_cdesc", f.mod_degree() == cdesc(&s), || s.to_string());
                r.check("canonical_at_zero", f.vals()[0] == s.table()[0], || s.to_string());
                r.check("constant_iff_no_descent", (cdesc(&s) == 0) == s.is_constant(), || s.to_string());
                r.check_result("minimal_unique", minimality_witness(&s, b), |ok| *ok, || s.to_string());
                if s.is_permutation() && (2..=5).contains(&p) {
                    let k = cdesc(&s);
                    r.check("permutation_range", (1..p).contains(&k), || s.to_string());
                }
            }
            r.check_result("fullness", fullness_check(p, q, b), |ok| *ok, || format!("p = {p}, q = {q}"));
        }
    }
    Ok(r)
}

/// Hypergroup and S-module axioms on `B^(n,1) ⊗ S` for ranks `<= max_rank`.
pub fn hypergroup(bounds: &Bounds) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Hypergroup);
    let mut strict_seen = false;
    for n in 0..=bounds.max_rank {
        let width = (2 * n + 1) as u64;
        let failures = hyper::hypergroup_failures(n);
        r.checked += width.pow(3) - 1;
        *r.parts.entry("hypergroup_triples").or_default() += width.pow(3) - 1;
        r.check("hypergroup_axioms", failures.is_empty(), || format!("rank {n}: {:?}", failures.first()));
        let sm = hyper::s_module_check(n);
        r.checked += sm.checked - 1;
        *r.parts.entry("s_module_cases").or_default() += sm.checked - 1;
        r.check("s_module_laws", sm.holds(), || format!("rank {n}: {:?}", sm.failures.first()));
        strict_seen |= !sm.strict.is_empty();
        for x in hyper::elements(n) {
            for y in hyper::elements(n) {
                let s = hyper::smile(x, y);
                let expected = if y == -x && x.mag() > 0 { 2 * x.mag() as usize + 1 } else { 1 };
                r.check("sum_size", s.len() == expected, || format!("{x} + {y}"));
            }
        }
        let classes: std::collections::BTreeSet<i64> = hyper::elements(n).filter(|x| x.mag() > 0).map(|x| x.mag()).collect();
        r.check("projective_points", classes.len() as i64 == n, || format!("rank {n}"));
        r.check("share_condition", hyper::share_condition(n.min(6)), || format!("rank {n}"));
    }
    if bounds.max_rank >= 2 {
        r.check("weak_inclusion_strict", strict_seen, || "no strict case of the weak inclusion".into());
    }
    for n in 1..=bounds.max_rank.min(3) as u32 {
        for m in 1..=bounds.max_rank.min(3) as u32 {
            for d in DeltaMorphism::enumerate(n, m) {
                let f = d.to_chain_map();
                for mask in 0..1u32 << n {
                    let eps: Vec<i64> = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                    r.check_result(
                        "decompose_round_trip",
                        hyper::tensor_morphism(&f, &eps).and_then(|g| hyper::decompose(&g)),
                        |(f2, e2)| *f2 == f && *e2 == eps,
                        || format!("f = {:?}, eps = {eps:?}", f.table()),
                    );
                }
            }
        }
    }
    Ok(r)
}

/// Counting identities: equivariant maps, submodules, chain sizes and
/// subobjects.
pub fn counts(bounds: &Bounds) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Counts);
    let side = bounds.max_period.min(3);
    for n in 1..=side {
        for m in 1..=side {
            for a in 1..=bounds.max_deg.min(3) {
                let formula = hom_count_sets(n, m, a)?;
                let brute = brute_force_equivariant_count(n, m, a, 12)?;
                r.check("equivariant_maps", formula == brute, || format!("n = {n}, m = {m}, a = {a}: {formula} vs {brute}"));
            }
        }
    }
    for n in 0..=bounds.max_rank as u32 {
        for k in 0..=n {
            let brute = brute_force_submodules(n, k);
            r.check("submodules", bmod::count_submodules(n, k)? == brute, || format!("n = {n}, k = {k}"));
        }
    }
    for n in 1..=bounds.max_rank + 2 {
        r.check("chain_size", BChain::new(n as u32).elements().count() as i64 == n + 1, || format!("n = {n}"));
        r.check("projective_space", projective_points(n)? as i64 == n, || format!("n = {n}"));
    }
    for n in 1..=bounds.max_period + 1 {
        for mask in 1u32..1 << n {
            let ys: Vec<i64> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            r.check_result(
                "subobject_bijection",
                submodule_from_subset(n, &ys),
                |f| orbit_image(f).into_iter().collect::<Vec<_>>() == ys && f.src() == ys.len() as i64,
                || format!("n = {n}, Y = {ys:?}"),
            );
        }
    }
    for n in 1..=bounds.max_rank.min(5) as u32 {
        for m in 1..=bounds.max_rank.min(5) as u32 {
            let homs = DeltaMorphism::enumerate(n, m);
            let mut lifted: Vec<ArcMorphism> = homs.iter().map(bmod::delta_to_lambda).collect();
            lifted.sort();
            lifted.dedup();
            r.check("delta_embedding", lifted.len() == homs.len() && lifted.iter().all(|g| g.deg() == 1), || {
                format!("n = {n}, m = {m}")
            });
        }
    }
    Ok(r)
}

/// Subsets of `{1..n}` of size `k` together with `0` that are closed under
/// `max`; every subset of a chain is, so this counts `k`-subsets directly.
fn brute_force_submodules(n: u32, k: u32) -> u64 {
    (0u64..1 << n)
        .filter(|mask| mask.count_ones() == k)
        .filter(|mask| {
            let members: Vec<u32> = (0..=n).filter(|&x| x == 0 || mask >> (x - 1) & 1 == 1).collect();
            members.iter().all(|&x| members.iter().all(|&y| members.contains(&x.max(y))))
        })
        .count() as u64
}

/// Semifield laws in `Z_max` and `Q_max`, the Frobenius semigroup, and the
/// subfield lattice of `Q_max`.
pub fn tropic_laws(_bounds: &Bounds) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Tropic);
    let els: Vec<TropElem> = std::iter::once(TropElem::Zero).chain((-20..=20).map(TropElem::Pow)).collect();
    for &x in &els {
        r.check("additive_identity", x + TropElem::Zero == x, || x.to_string());
        r.check("multiplicative_identity", x * TropElem::ONE == x, || x.to_string());
        r.check("idempotent", x + x == x, || x.to_string());
        r.check("inverse", x.is_zero() || x * x.inverse().expect("nonzero") == TropElem::ONE, || x.to_string());
        for &y in &els {
            r.check("commutative", x + y == y + x && x * y == y * x, || format!("{x}, {y}"));
            r.check("selective", x + y == x || x + y == y, || format!("{x}, {y}"));
            for &z in &els {
                r.check("associative", (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z), || {
                    format!("{x}, {y}, {z}")
                });
                r.check("distributive", x * (y + z) == x * y + x * z, || format!("{x}, {y}, {z}"));
            }
        }
    }
    for n in 1..=10 {
        for &x in &els {
            for &y in &els {
                let hom = tropic::frobenius(n, x + y).ok() == Some(tropic::frobenius(n, x)? + tropic::frobenius(n, y)?)
                    && tropic::frobenius(n, x * y).ok() == Some(tropic::frobenius(n, x)? * tropic::frobenius(n, y)?);
                r.check("frobenius_endomorphism", hom, || format!("n = {n}, {x}, {y}"));
            }
            for m in 1..=10 {
                let lhs = tropic::frobenius(n, tropic::frobenius(m, x)?)?;
                r.check("frobenius_semigroup", lhs == tropic::frobenius(n * m, x)?, || format!("{n}, {m}, {x}"));
            }
        }
        let mut image: Vec<TropElem> = els.iter().map(|&x| tropic::frobenius(n, x)).collect::<Result<_>>()?;
        image.dedup();
        r.check("frobenius_injective", image.len() == els.len(), || format!("n = {n}"));
    }
    for n in 1..=12 {
        for m in 1..=12 {
            // Q_max^(n) := {u^(a/n)} sits inside Q_max^(m) iff n | m
            let generator = TropRatElem::pow(1, n)?;
            let contained = tropic::in_subfield(generator, m)?;
            r.check("subfield_lattice", contained == (m % n == 0), || format!("n = {n}, m = {m}"));
        }
    }
    Ok(r)
}

/// Segments of the abstract circle `hat n / theta` for `n <= max_rank`.
pub fn circle(bounds: &Bounds) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Circle);
    for n in 1..=bounds.max_rank.max(1) {
        let c = AbstractCircle::new(n)?;
        for x in c.points() {
            for y in c.points() {
                let joining: Vec<_> = c.segments().filter(|&s| c.boundary0(s) == x && c.boundary1(s) == y).collect();
                let expected = if x == y { 2 } else { 1 };
                r.check("unique_segment", joining.len() == expected, || format!("n = {n}, ({x}, {y})"));
            }
            r.check("zero_one_star", c.star(c.zero(x)) == c.one(x) && c.star(c.one(x)) == c.zero(x), || {
                format!("n = {n}, x = {x}")
            });
        }
        for s in c.segments() {
            let t = c.star(s);
            r.check(
                "involution",
                c.star(t) == s && c.boundary0(t) == c.boundary1(s) && c.boundary1(t) == c.boundary0(s),
                || format!("n = {n}, {s}"),
            );
            r.check("zero_unit", c.union(c.zero(s.start), s) == Ok(s), || format!("n = {n}, {s}"));
            r.check("complement", c.union(s, t) == Ok(c.one(s.start)), || format!("n = {n}, {s}"));
            for u in c.segments() {
                let Ok(su) = c.union(s, u) else { continue };
                for v in c.segments() {
                    if let Ok(uv) = c.union(u, v) {
                        let lhs = c.union(su, v).ok();
                        let rhs = c.union(s, uv).ok();
                        r.check("union_associative", lhs == rhs, || format!("n = {n}, {s}, {u}, {v}"));
                    }
                }
            }
        }
    }
    Ok(r)
}
