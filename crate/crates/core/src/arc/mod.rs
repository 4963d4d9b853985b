//! Morphisms between the skeletal archimedean sets `hat n = (Z, x -> x + n)`.
//!
//! A morphism `hat n -> hat m` of degree `k` is a non-decreasing map
//! `f: Z -> Z` with `f(x + n) = f(x) + k*m`. It is determined by its values on
//! the fundamental window `0..n`, and two maps are identified when they differ
//! by a multiple of `a*m`, where `a` is the `eqmod` of the ambient category
//! `Arc_a` (`a = 1` for the epicyclic category itself). The canonical
//! representative has `0 <= vals[0] < a*m`.
//!
//! Degree-1 morphisms with `eqmod = 1` form the cyclic category, all degrees
//! with `eqmod = 1` the epicyclic category, and degree-1 morphisms with
//! `eqmod = a` the `a`-cyclic category.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

mod circle;
mod correspondence;
mod generators;
mod orbit;

pub use circle::{circle_union, AbstractCircle, Segment};
pub use correspondence::{factor, forget, psi, psi_functor, psi_k_on_morphism, subdivide};
pub use generators::{delta, identity, pi, sigma, tau};
pub use orbit::{
    brute_force_equivariant_count, hom_count_sets, orbit_image, orbit_map, projective_points,
    submodule_from_subset, EquivariantSetMap,
};

pub(crate) type Vals = SmallVec<[i64; 8]>;

/// The object `hat n`, i.e. `[n - 1]` in bracket indexing and the semimodule
/// `F^(n)` in the projective picture.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcObject {
    period: i64,
}

impl ArcObject {
    pub fn new(period: i64) -> Result<Self> {
        check_period("period", period)?;
        Ok(ArcObject { period })
    }

    pub fn period(self) -> i64 {
        self.period
    }

    /// Bracket label `n - 1` of the corresponding object of the cyclic category.
    pub fn bracket(self) -> i64 {
        self.period - 1
    }

    /// The automorphism `theta(x) = x + n`.
    pub fn theta(self, x: i64) -> i64 {
        x + self.period
    }
}

impl fmt::Display for ArcObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.bracket())
    }
}

pub(crate) fn check_period(name: &'static str, p: i64) -> Result<()> {
    if p < 1 {
        return Err(Error::arg(name, format!("period must be >= 1, got {p}")));
    }
    Ok(())
}

/// Canonical representative of a morphism `hat src -> hat dst`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "MorphismWire", into = "MorphismWire")]
pub struct ArcMorphism {
    src: i64,
    dst: i64,
    deg: i64,
    eqmod: i64,
    vals: Vals,
}

/// JSON shape of a morphism. `eqmod` defaults to 1 on input and is omitted on
/// output when it equals 1.
#[derive(Serialize, Deserialize)]
struct MorphismWire {
    src: i64,
    dst: i64,
    deg: i64,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    eqmod: i64,
    vals: Vec<i64>,
}

fn one() -> i64 {
    1
}

fn is_one(x: &i64) -> bool {
    *x == 1
}

impl TryFrom<MorphismWire> for ArcMorphism {
    type Error = Error;

    fn try_from(w: MorphismWire) -> Result<Self> {
        normalize(w.src, w.dst, w.deg, &w.vals, w.eqmod)
    }
}

impl From<ArcMorphism> for MorphismWire {
    fn from(f: ArcMorphism) -> Self {
        MorphismWire {
            src: f.src,
            dst: f.dst,
            deg: f.deg,
            eqmod: f.eqmod,
            vals: f.vals.into_vec(),
        }
    }
}

/// Validates a raw representative and shifts it to canonical form.
///
/// The shift is the unique multiple of `eqmod * dst` placing `vals[0]` in
/// `[0, eqmod * dst)`.
pub fn normalize(src: i64, dst: i64, deg: i64, raw_vals: &[i64], eqmod: i64) -> Result<ArcMorphism> {
    check_period("src", src)?;
    check_period("dst", dst)?;
    if eqmod < 1 {
        return Err(Error::arg("eqmod", format!("must be >= 1, got {eqmod}")));
    }
    if deg < 0 {
        return Err(Error::invariant("degree_nonnegative", format!("deg = {deg}")));
    }
    if eqmod > 1 && deg != 1 {
        return Err(Error::invariant(
            "eqmod_degree",
            format!("morphisms of Arc_{eqmod} have degree 1, got {deg}"),
        ));
    }
    if raw_vals.len() as i64 != src {
        return Err(Error::invariant(
            "vals_length",
            format!("expected {src} values, got {}", raw_vals.len()),
        ));
    }
    if let Some(i) = raw_vals.windows(2).position(|w| w[0] > w[1]) {
        return Err(Error::invariant(
            "monotone",
            format!("vals[{i}] = {} > vals[{}] = {}", raw_vals[i], i + 1, raw_vals[i + 1]),
        ));
    }
    let first = raw_vals[0];
    let last = raw_vals[raw_vals.len() - 1];
    if last > first + deg * dst {
        return Err(Error::invariant(
            "periodicity",
            format!("vals[{}] = {last} exceeds vals[0] + deg*dst = {}", src - 1, first + deg * dst),
        ));
    }
    Ok(ArcMorphism::canonical(src, dst, deg, eqmod, raw_vals.iter().copied().collect()))
}

impl ArcMorphism {
    /// Normalizes data already known to satisfy the morphism invariants.
    pub(crate) fn canonical(src: i64, dst: i64, deg: i64, eqmod: i64, mut vals: Vals) -> Self {
        let modulus = eqmod * dst;
        let shift = Integer::div_floor(&vals[0], &modulus) * modulus;
        if shift != 0 {
            vals.iter_mut().for_each(|v| *v -= shift);
        }
        ArcMorphism {
            src,
            dst,
            deg,
            eqmod,
            vals,
        }
    }

    pub fn src(&self) -> i64 {
        self.src
    }

    pub fn dst(&self) -> i64 {
        self.dst
    }

    pub fn deg(&self) -> i64 {
        self.deg
    }

    pub fn eqmod(&self) -> i64 {
        self.eqmod
    }

    pub fn vals(&self) -> &[i64] {
        &self.vals
    }

    /// Value of the periodic extension at any integer, with floored division
    /// for negative arguments.
    pub fn eval(&self, x: i64) -> i64 {
        let (q, r) = x.div_mod_floor(&self.src);
        self.vals[r as usize] + q * self.deg * self.dst
    }

    /// Degree functor `Mod` to the multiplicative monoid, extended by 0 on
    /// constant maps.
    pub fn mod_degree(&self) -> i64 {
        self.deg
    }

    /// Whether the morphism is linear, i.e. lies in the cyclic category.
    pub fn is_linear(&self) -> bool {
        self.deg == 1
    }

    /// Constant (degree 0) morphisms are admitted but are not images of
    /// semifield endomorphisms.
    pub fn is_constant(&self) -> bool {
        self.deg == 0
    }

    /// Composition `self ∘ f`.
    pub fn compose(&self, f: &ArcMorphism) -> Result<ArcMorphism> {
        compose(self, f)
    }

    /// Same underlying representative viewed in `Arc_eqmod`.
    ///
    /// Unlike [`forget`], this may refine the class, so the caller decides
    /// which representative is meant.
    pub fn with_eqmod(&self, eqmod: i64) -> Result<ArcMorphism> {
        normalize(self.src, self.dst, self.deg, &self.vals, eqmod)
    }

    /// The raw representative shifted by `theta'^j`, i.e. `j * dst` added to
    /// every value, then renormalized.
    pub fn shifted(&self, j: i64) -> ArcMorphism {
        let vals = self.vals.iter().map(|v| v + j * self.dst).collect();
        ArcMorphism::canonical(self.src, self.dst, self.deg, self.eqmod, vals)
    }
}

impl fmt::Display for ArcMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] -> [{}] (hat {} -> hat {}), deg {}",
            self.src - 1,
            self.dst - 1,
            self.src,
            self.dst,
            self.deg
        )?;
        if self.eqmod != 1 {
            write!(f, ", Arc_{}", self.eqmod)?;
        }
        f.write_str(", vals (")?;
        for (i, v) in self.vals.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// `g ∘ f`: values `g(f(i))`, degree `deg(g) * deg(f)`, renormalized.
pub fn compose(g: &ArcMorphism, f: &ArcMorphism) -> Result<ArcMorphism> {
    if f.dst != g.src {
        return Err(Error::PeriodMismatch {
            target: f.dst,
            next_source: g.src,
        });
    }
    if f.eqmod != g.eqmod {
        return Err(Error::EqmodMismatch {
            left: g.eqmod,
            right: f.eqmod,
        });
    }
    let vals = f.vals.iter().map(|&v| g.eval(v)).collect();
    Ok(ArcMorphism::canonical(f.src, g.dst, g.deg * f.deg, f.eqmod, vals))
}

/// Every canonical morphism `hat src -> hat dst` of degree `deg` in `Arc_eqmod`.
pub fn enumerate(src: i64, dst: i64, deg: i64, eqmod: i64) -> Result<Vec<ArcMorphism>> {
    check_period("src", src)?;
    check_period("dst", dst)?;
    if deg < 0 || (eqmod > 1 && deg != 1) || eqmod < 1 {
        return Err(Error::arg("deg", format!("no morphisms of degree {deg} in Arc_{eqmod}")));
    }
    let mut out = Vec::new();
    let mut buf: Vals = SmallVec::with_capacity(src as usize);
    for v0 in 0..eqmod * dst {
        buf.clear();
        buf.push(v0);
        extend_monotone(&mut buf, src as usize, v0 + deg * dst, &mut |vals| {
            out.push(ArcMorphism {
                src,
                dst,
                deg,
                eqmod,
                vals: vals.clone(),
            })
        });
    }
    Ok(out)
}

fn extend_monotone(buf: &mut Vals, len: usize, cap: i64, emit: &mut impl FnMut(&Vals)) {
    if buf.len() == len {
        emit(buf);
        return;
    }
    let lo = *buf.last().expect("non-empty prefix");
    for v in lo..=cap {
        buf.push(v);
        extend_monotone(buf, len, cap, emit);
        buf.pop();
    }
}
