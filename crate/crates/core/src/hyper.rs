//! The symmetrization `E ⊗_B S` of a chain `B^(n,1)` by the sign hyperfield:
//! elements `±x`, the multivalued sum `x ⌣ y`, and S-module morphisms.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Neg;

use serde::{Deserialize, Serialize};

use crate::bmod::ChainMap;
use crate::error::{Error, Result};

/// `±x` for a chain element `x`, stored as the signed integer `±x`, so the
/// two zeros coincide by construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "SignedWire", into = "SignedWire")]
pub struct SignedElem(i64);

#[derive(Serialize, Deserialize)]
struct SignedWire {
    mag: i64,
    sign: i64,
}

impl TryFrom<SignedWire> for SignedElem {
    type Error = Error;

    fn try_from(w: SignedWire) -> Result<Self> {
        SignedElem::new(w.mag, w.sign)
    }
}

impl From<SignedElem> for SignedWire {
    fn from(x: SignedElem) -> Self {
        SignedWire {
            mag: x.mag(),
            sign: x.sign(),
        }
    }
}

impl SignedElem {
    pub const ZERO: SignedElem = SignedElem(0);

    pub fn new(mag: i64, sign: i64) -> Result<Self> {
        if mag < 0 {
            return Err(Error::arg("mag", format!("magnitude must be >= 0, got {mag}")));
        }
        if sign != 1 && sign != -1 {
            return Err(Error::arg("sign", format!("sign must be +1 or -1, got {sign}")));
        }
        Ok(SignedElem(sign * mag))
    }

    pub fn from_signed(v: i64) -> Self {
        SignedElem(v)
    }

    pub fn value(self) -> i64 {
        self.0
    }

    pub fn mag(self) -> i64 {
        self.0.abs()
    }

    /// `+1` for zero.
    pub fn sign(self) -> i64 {
        if self.0 < 0 {
            -1
        } else {
            1
        }
    }

    /// Action of `λ ∈ S = {-1, 0, 1}`.
    pub fn scale(self, lambda: i64) -> Self {
        SignedElem(lambda.signum() * self.0)
    }
}

impl fmt::Display for SignedElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => f.write_str("0"),
            v if v > 0 => write!(f, "+{v}"),
            v => write!(f, "{v}"),
        }
    }
}

impl Neg for SignedElem {
    type Output = SignedElem;

    fn neg(self) -> SignedElem {
        SignedElem(-self.0)
    }
}

pub type HyperSet = BTreeSet<SignedElem>;

/// Every element of `E ⊗ S` for `E = B^(n,1)`.
pub fn elements(n: i64) -> impl Iterator<Item = SignedElem> + Clone {
    (-n..=n).map(SignedElem)
}

/// `[-x, x] = {z : |z| <= |x|}`.
pub fn interval(x: SignedElem) -> HyperSet {
    elements(x.mag()).collect()
}

fn check_rank(x: SignedElem, n: i64) -> Result<()> {
    if x.mag() > n {
        return Err(Error::arg("x", format!("{x} is not in the chain of rank {n}")));
    }
    Ok(())
}

/// The multivalued sum of two elements, both already in range.
pub fn smile(x: SignedElem, y: SignedElem) -> HyperSet {
    if x == y || x.mag() > y.mag() {
        HyperSet::from([x])
    } else if x.mag() < y.mag() {
        HyperSet::from([y])
    } else {
        interval(x)
    }
}

/// `x ⌣ y` in `B^(n,1) ⊗ S`.
pub fn hyper_add(x: SignedElem, y: SignedElem, n: i64) -> Result<HyperSet> {
    if n < 0 {
        return Err(Error::arg("n", format!("rank must be >= 0, got {n}")));
    }
    check_rank(x, n)?;
    check_rank(y, n)?;
    Ok(smile(x, y))
}

/// `A ⌣ B`, the union of `a ⌣ b`.
pub fn smile_sets(a: &HyperSet, b: &HyperSet) -> HyperSet {
    a.iter().flat_map(|&x| b.iter().flat_map(move |&y| smile(x, y))).collect()
}

/// Exhaustive check of the canonical hypergroup axioms on `B^(n,1) ⊗ S`.
pub fn check_hypergroup(n: i64) -> bool {
    hypergroup_failures(n).is_empty()
}

/// Violated axioms, as `(axiom, witness)` pairs.
pub fn hypergroup_failures(n: i64) -> Vec<(&'static str, String)> {
    let mut out = Vec::new();
    let els: Vec<SignedElem> = elements(n).collect();
    for &x in &els {
        if smile(SignedElem::ZERO, x) != HyperSet::from([x]) || smile(x, SignedElem::ZERO) != HyperSet::from([x]) {
            out.push(("neutral", format!("{x}")));
        }
        let inverses: Vec<SignedElem> = els.iter().copied().filter(|&y| smile(x, y).contains(&SignedElem::ZERO)).collect();
        if inverses != [-x] {
            out.push(("unique_inverse", format!("{x}: {inverses:?}")));
        }
        for &y in &els {
            let xy = smile(x, y);
            if xy != smile(y, x) {
                out.push(("commutative", format!("{x}, {y}")));
            }
            for &z in &els {
                let yz = smile(y, z);
                if smile_sets(&xy, &HyperSet::from([z])) != smile_sets(&HyperSet::from([x]), &yz) {
                    out.push(("associative", format!("{x}, {y}, {z}")));
                }
                // x ∈ y ⌣ z  implies  z ∈ x ⌣ (-y)
                if yz.contains(&x) && !smile(x, -y).contains(&z) {
                    out.push(("reversible", format!("{x}, {y}, {z}")));
                }
            }
        }
    }
    out
}

/// Outcome of [`s_module_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SModuleReport {
    pub checked: u64,
    pub failures: Vec<String>,
    /// Cases `(λ + λ')v ⊊ λv ⌣ λ'v`, all with `λ' = -λ`.
    pub strict: Vec<(i64, i64, SignedElem)>,
}

impl SModuleReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

const SIGNS: [i64; 3] = [-1, 0, 1];

/// `λ(v ⌣ v') = λv ⌣ λv'` and `(λ + λ')v ⊆ λv ⌣ λ'v`, where `λ + λ'` is the
/// sum in the sign hyperfield.
pub fn s_module_check(n: i64) -> SModuleReport {
    let mut report = SModuleReport {
        checked: 0,
        failures: Vec::new(),
        strict: Vec::new(),
    };
    for l in SIGNS {
        for v in elements(n) {
            for w in elements(n) {
                report.checked += 1;
                let lhs: HyperSet = smile(v, w).into_iter().map(|z| z.scale(l)).collect();
                if lhs != smile(v.scale(l), w.scale(l)) {
                    report.failures.push(format!("λ = {l}: λ({v} ⌣ {w})"));
                }
            }
        }
        for l2 in SIGNS {
            let sum = smile(SignedElem(l), SignedElem(l2));
            for v in elements(n) {
                report.checked += 1;
                let lhs: HyperSet = sum.iter().map(|mu| v.scale(mu.value())).collect();
                let rhs = smile(v.scale(l), v.scale(l2));
                if !lhs.is_subset(&rhs) {
                    report.failures.push(format!("({l} + {l2}){v}"));
                } else if lhs != rhs {
                    if l2 != -l {
                        report.failures.push(format!("unexpected strict inclusion at ({l} + {l2}){v}"));
                    }
                    report.strict.push((l, l2, v));
                }
            }
        }
    }
    report
}

/// Checks `x ∨ y = u ∨ v  ⟹  ∃z: (x ∨ z = u, z ∨ v = y) or (x = u ∨ z, v = z ∨ y)`
/// on the chain monoid `({0..n}, max)`.
pub fn share_condition(n: i64) -> bool {
    let els = 0..=n;
    els.clone().all(|x| {
        els.clone().all(|y| {
            els.clone().all(|u| {
                els.clone().all(|v| {
                    x.max(y) != u.max(v)
                        || els.clone().any(|z| {
                            (x.max(z) == u && z.max(v) == y) || (x == u.max(z) && v == z.max(y))
                        })
                })
            })
        })
    })
}

/// A map `B^(n,1) ⊗ S -> B^(m,1) ⊗ S`, as its table on `-n..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedMap {
    pub src_rank: i64,
    pub dst_rank: i64,
    /// Image of `i - src_rank` at index `i`.
    pub table: Vec<SignedElem>,
}

impl SignedMap {
    pub fn apply(&self, x: SignedElem) -> SignedElem {
        self.table[(x.value() + self.src_rank) as usize]
    }
}

/// `(f ⊗ id) ∘ ε̃`, i.e. `±x -> ±ε(x) f(x)`.
///
/// `eps[i]` is the sign attached to the chain element `i + 1`.
pub fn tensor_morphism(f: &ChainMap, eps: &[i64]) -> Result<SignedMap> {
    let n = f.src_rank() as i64;
    if eps.len() as i64 != n {
        return Err(Error::invariant("eps_length", format!("expected {n} signs, got {}", eps.len())));
    }
    if let Some(&s) = eps.iter().find(|&&s| s != 1 && s != -1) {
        return Err(Error::arg("eps", format!("signs must be +1 or -1, got {s}")));
    }
    let table = elements(n)
        .map(|x| {
            if x == SignedElem::ZERO {
                return SignedElem::ZERO;
            }
            let e = eps[x.mag() as usize - 1];
            SignedElem(x.sign() * e * f.apply(x.mag() as u32) as i64)
        })
        .collect();
    Ok(SignedMap {
        src_rank: n,
        dst_rank: f.dst_rank() as i64,
        table,
    })
}

/// Recovers the unique `(f, ε)` with `g = (f ⊗ id) ∘ ε̃`, after checking that
/// `g` is a zero-reflecting S-module morphism.
pub fn decompose(g: &SignedMap) -> Result<(ChainMap, Vec<i64>)> {
    let (n, m) = (g.src_rank, g.dst_rank);
    if n < 0 || m < 0 || g.table.len() as i64 != 2 * n + 1 {
        return Err(Error::invariant("table_length", format!("expected {} entries", 2 * n + 1)));
    }
    if let Some(y) = g.table.iter().find(|y| y.mag() > m) {
        return Err(Error::invariant("in_range", format!("{y} is not in the chain of rank {m}")));
    }
    for x in elements(n) {
        if (g.apply(x) == SignedElem::ZERO) != (x == SignedElem::ZERO) {
            return Err(Error::invariant("zero_reflecting", format!("g({x}) = {}", g.apply(x))));
        }
        for l in SIGNS {
            if g.apply(x.scale(l)) != g.apply(x).scale(l) {
                return Err(Error::invariant("s_linear", format!("g({l}·{x}) != {l}·g({x})")));
            }
        }
        for y in elements(n) {
            let image: HyperSet = smile(x, y).into_iter().map(|z| g.apply(z)).collect();
            if !image.is_subset(&smile(g.apply(x), g.apply(y))) {
                return Err(Error::invariant("hypergroup_morphism", format!("g({x} ⌣ {y}) ⊄ g({x}) ⌣ g({y})")));
            }
        }
    }
    let table: Vec<u32> = (0..=n).map(|x| g.apply(SignedElem(x)).mag() as u32).collect();
    let eps = (1..=n).map(|x| g.apply(SignedElem(x)).sign()).collect();
    let f = ChainMap::new(n as u32, m as u32, crate::bmod::Orientation::Primal, table)?;
    Ok((f, eps))
}
