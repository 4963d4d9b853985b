//! Self-duality of the cyclic category: the transpose `f^t`, the F-valued
//! pairing and star transpose, and the finite-level twists `beta(z)`.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arc::{ArcMorphism, Vals};
use crate::error::{Error, Result};
use crate::tropic::{BElem, TropElem};

fn require_linear(op: &'static str, f: &ArcMorphism) -> Result<()> {
    if f.deg() != 1 {
        return Err(Error::UnsupportedDegree {
            op,
            deg: f.deg(),
            reason: "the transpose of a semilinear map is not semilinear",
        });
    }
    Ok(())
}

/// A representative `x -> vals[x mod n] + floor(x / n) step`, not normalized.
struct Periodic<'a> {
    vals: &'a [i64],
    step: i64,
}

impl Periodic<'_> {
    fn eval(&self, x: i64) -> i64 {
        let n = self.vals.len() as i64;
        let (q, r) = Integer::div_mod_floor(&x, &n);
        self.vals[r as usize] + q * self.step
    }

    /// `min {x : f(x) >= y}`, by bisection on a window bracketing the answer.
    fn least_preimage_above(&self, y: i64) -> i64 {
        let n = self.vals.len() as i64;
        let m = self.step;
        // f(q n) = vals[0] + q m >= y
        let hi_q = Integer::div_ceil(&(y - self.vals[0]), &m);
        // f(q n + n - 1) = vals[n-1] + q m < y
        let lo_q = Integer::div_floor(&(y - self.vals[n as usize - 1] - 1), &m);
        let (mut lo, mut hi) = (lo_q * n + n - 1, hi_q * n);
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if self.eval(mid) >= y {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    }

    fn transpose_vals(&self, dst: i64) -> Vec<i64> {
        (0..dst).map(|y| self.least_preimage_above(y)).collect()
    }
}

fn check_transposable(op: &'static str, f: &ArcMorphism) -> Result<()> {
    require_linear(op, f)?;
    if f.eqmod() != 1 {
        return Err(Error::arg("f", "transpose is defined on the cyclic category (eqmod 1)"));
    }
    Ok(())
}

fn raw(f: &ArcMorphism) -> Periodic<'_> {
    Periodic {
        vals: f.vals(),
        step: f.deg() * f.dst(),
    }
}

/// `f^t(y) = min {x : f(x) >= y}` for the canonical representative of `f`.
///
/// [`transpose`] returns the class of this map; its canonical representative
/// may differ from it by a multiple of `f.src()`.
pub fn transpose_at(f: &ArcMorphism, y: i64) -> Result<i64> {
    check_transposable("transpose", f)?;
    Ok(raw(f).least_preimage_above(y))
}

/// The transpose `f^t(y) = min {x : f(x) >= y}` of a linear morphism.
pub fn transpose(f: &ArcMorphism) -> Result<ArcMorphism> {
    check_transposable("transpose", f)?;
    let vals: Vals = raw(f).transpose_vals(f.dst()).into_iter().collect();
    Ok(ArcMorphism::canonical(f.dst(), f.src(), 1, 1, vals))
}

/// Checks `(f^t)^t(x + 1) = f(x) + 1` on one period of `x`, with both
/// transposes taken on exact representatives.
pub fn double_transpose_twist_check(f: &ArcMorphism) -> Result<bool> {
    check_transposable("double_transpose_twist_check", f)?;
    let t = raw(f).transpose_vals(f.dst());
    let t = Periodic {
        vals: &t,
        step: f.src(),
    };
    Ok((0..f.src()).all(|x| t.least_preimage_above(x + 1) == f.eval(x) + 1))
}

/// `<x, y>_F`: the least `u^k` with `x <= y + k n`.
pub fn f_pairing(x: i64, y: i64, n: i64) -> Result<TropElem> {
    if n < 1 {
        return Err(Error::arg("n", format!("period must be >= 1, got {n}")));
    }
    Ok(TropElem::Pow(Integer::div_ceil(&(x - y), &n)))
}

/// The linear form `F -> B` sending `x <= 1` to 0 and `x > 1` to 1.
pub fn re_b(t: TropElem) -> BElem {
    BElem::from_bool(matches!(t, TropElem::Pow(e) if e > 0))
}

/// The transpose for the F-valued pairing, `f*(y) = f^t(y + 1) - 1`.
///
/// This is the unique `g` with `g^t = f`.
pub fn star_transpose(f: &ArcMorphism) -> Result<ArcMorphism> {
    check_transposable("star_transpose", f)?;
    let r = raw(f);
    let vals: Vals = (0..f.dst()).map(|y| r.least_preimage_above(y + 1) - 1).collect();
    Ok(ArcMorphism::canonical(f.dst(), f.src(), 1, 1, vals))
}

/// Finitely many coordinates `z_a in Z/a` of an element of the profinite
/// completion.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<i64, i64>", into = "BTreeMap<i64, i64>")]
pub struct ZVector {
    entries: BTreeMap<i64, i64>,
}

impl TryFrom<BTreeMap<i64, i64>> for ZVector {
    type Error = Error;

    fn try_from(entries: BTreeMap<i64, i64>) -> Result<Self> {
        for (&a, &z) in &entries {
            if a < 1 {
                return Err(Error::arg("z", format!("period {a} must be >= 1")));
            }
            if !(0..a).contains(&z) {
                return Err(Error::invariant("residue_range", format!("z_{a} = {z} not in [0, {a})")));
            }
        }
        Ok(ZVector { entries })
    }
}

impl From<ZVector> for BTreeMap<i64, i64> {
    fn from(z: ZVector) -> Self {
        z.entries
    }
}

impl ZVector {
    pub fn new(entries: impl IntoIterator<Item = (i64, i64)>) -> Result<Self> {
        ZVector::try_from(entries.into_iter().collect::<BTreeMap<_, _>>())
    }

    /// Image of the integer `z` at each period of `support`.
    pub fn from_integer(z: i64, support: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for a in support {
            if a < 1 {
                return Err(Error::arg("support", format!("period {a} must be >= 1")));
            }
            entries.insert(a, z.mod_floor(&a));
        }
        Ok(ZVector { entries })
    }

    pub fn get(&self, a: i64) -> Result<i64> {
        self.entries
            .get(&a)
            .copied()
            .ok_or_else(|| Error::arg("z", format!("no residue stored for period {a}")))
    }

    pub fn entries(&self) -> &BTreeMap<i64, i64> {
        &self.entries
    }

    /// `z_b = z_a mod a` whenever `a | b`, on the stored support.
    pub fn is_compatible(&self) -> bool {
        self.entries.iter().all(|(&a, &za)| {
            self.entries
                .range(a..)
                .all(|(&b, &zb)| b % a != 0 || zb.mod_floor(&a) == za)
        })
    }
}

/// `beta(z)(f) = tau^{z_m} ∘ f ∘ tau^{-z_n}` for `f: hat n -> hat m`, i.e.
/// `x -> f(x + z_n) - z_m`.
pub fn beta_twist(f: &ArcMorphism, z: &ZVector) -> Result<ArcMorphism> {
    if f.deg() < 1 {
        return Err(Error::UnsupportedDegree {
            op: "beta_twist",
            deg: f.deg(),
            reason: "constant maps are not morphisms of the epicyclic category",
        });
    }
    let (zs, zd) = (z.get(f.src())?, z.get(f.dst())?);
    let vals: Vals = (0..f.src()).map(|x| f.eval(x + zs) - zd).collect();
    Ok(ArcMorphism::canonical(f.src(), f.dst(), f.deg(), f.eqmod(), vals))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::{self, enumerate, identity, normalize, psi, tau};

    fn linear_maps(max_period: i64) -> Vec<ArcMorphism> {
        let mut out = Vec::new();
        for n in 1..=max_period {
            for m in 1..=max_period {
                out.extend(enumerate(n, m, 1, 1).unwrap());
            }
        }
        out
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(transpose(&identity(3, 1).unwrap()).unwrap(), identity(3, 1).unwrap());
        let f = normalize(2, 2, 1, &[0, 0], 1).unwrap();
        assert_eq!(transpose(&f).unwrap().vals(), &[0, 2]);
        assert!(transpose(&psi(2, 2).unwrap()).is_err());
    }

    #[test]
    fn adjunction_on_windows() {
        for f in linear_maps(4) {
            let (n, m) = (f.src(), f.dst());
            for x in -2 * n..2 * n {
                for y in -2 * m..2 * m {
                    let t = transpose_at(&f, y).unwrap();
                    assert_eq!(f.eval(x) >= y, x >= t, "{f} at ({x},{y})");
                }
            }
        }
    }

    #[test]
    fn twist_and_star() {
        for n in 1..=6 {
            assert!(double_transpose_twist_check(&tau(n, 1).unwrap()).unwrap());
        }
        for f in linear_maps(4) {
            assert!(double_transpose_twist_check(&f).unwrap());
            let s = star_transpose(&f).unwrap();
            assert_eq!(transpose(&s).unwrap(), f);
        }
        assert_eq!(star_transpose(&identity(4, 1).unwrap()).unwrap(), identity(4, 1).unwrap());
    }

    #[test]
    fn shifted_representatives() {
        let f = normalize(2, 3, 1, &[1, 2], 1).unwrap();
        // f'(x) = f(x) - m  gives  f'^t(y) = f^t(y) + n
        let shifted: Vec<i64> = (0..3).map(|y| transpose_at(&f, y + 3).unwrap() - 2).collect();
        let exact: Vec<i64> = (0..3).map(|y| transpose_at(&f, y).unwrap()).collect();
        assert_eq!(shifted, exact);
        assert_eq!(transpose(&f).unwrap(), normalize(3, 2, 1, &exact, 1).unwrap());
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(f_pairing(4, 4, 3).unwrap(), TropElem::Pow(0));
        assert_eq!(f_pairing(5, 1, 3).unwrap(), TropElem::Pow(2));
        assert_eq!(f_pairing(-5, 1, 3).unwrap(), TropElem::Pow(-2));
        assert!(f_pairing(0, 0, 0).is_err());
        for n in 1..=4 {
            for x in -6..6 {
                for y in -6..6 {
                    let base = f_pairing(x, y, n).unwrap();
                    for j in -2..=2 {
                        assert_eq!(f_pairing(x + j * n, y, n).unwrap(), TropElem::Pow(j) * base);
                    }
                    assert_eq!(BElem::from_bool(x > y), re_b(base));
                }
            }
        }
        assert_eq!(re_b(TropElem::Pow(0)), BElem::Zero);
        assert_eq!(re_b(TropElem::Pow(3)), BElem::One);
        assert_eq!(re_b(TropElem::Zero), BElem::Zero);
    }

    #[test]
    fn zvector_validation() {
        assert!(ZVector::new([(3, 3)]).is_err());
        assert!(ZVector::new([(0, 0)]).is_err());
        assert!(ZVector::new([(2, 1), (4, 3)]).unwrap().is_compatible());
        assert!(!ZVector::new([(2, 0), (4, 3)]).unwrap().is_compatible());
        assert!(ZVector::from_integer(-7, 1..=6).unwrap().is_compatible());
        assert!(ZVector::new([(2, 0)]).unwrap().get(3).is_err());
    }

    #[test]
    fn beta_examples() {
        let zero = ZVector::from_integer(0, 1..=4).unwrap();
        let f = normalize(2, 3, 2, &[1, 4], 1).unwrap();
        assert_eq!(beta_twist(&f, &zero).unwrap(), f);
        let z = ZVector::new([(2, 1), (4, 3)]).unwrap();
        assert_eq!(beta_twist(&psi(2, 2).unwrap(), &z).unwrap(), psi(2, 2).unwrap());
        let z = ZVector::new([(2, 0), (4, 3)]).unwrap();
        assert_ne!(beta_twist(&psi(2, 2).unwrap(), &z).unwrap(), psi(2, 2).unwrap());
        let g = tau(3, 1).unwrap();
        let h = arc::compose(&g, &f).unwrap();
        let z = ZVector::new([(2, 1), (3, 2)]).unwrap();
        assert_eq!(
            beta_twist(&h, &z).unwrap(),
            arc::compose(&beta_twist(&g, &z).unwrap(), &beta_twist(&f, &z).unwrap()).unwrap()
        );
    }
}
