//! Orbit functors `F_a : Arc_a -> Sets_a`, free `mu_a`-sets, and the
//! subobjects of `F^(n)`.

use std::collections::BTreeSet;

use num_integer::Integer;

use super::{check_period, ArcMorphism};
use crate::error::{Error, Result};

/// A `mu_a`-equivariant map between free `mu_a`-sets.
///
/// The source is `Z / (a n)` and the generator of `mu_a` acts by `+n`; the
/// target is `Z / (a m)` with the generator acting by `+m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EquivariantSetMap {
    pub a: i64,
    pub src_size: i64,
    pub dst_size: i64,
    pub table: Vec<i64>,
}

impl EquivariantSetMap {
    /// Number of `mu_a`-orbits of the source.
    pub fn src_orbits(&self) -> i64 {
        self.src_size / self.a
    }

    pub fn dst_orbits(&self) -> i64 {
        self.dst_size / self.a
    }

    pub fn apply(&self, x: i64) -> i64 {
        self.table[x.mod_floor(&self.src_size) as usize]
    }

    /// `table(x + n) = table(x) + m` modulo the set sizes.
    pub fn is_equivariant(&self) -> bool {
        let (n, m) = (self.src_orbits(), self.dst_orbits());
        (0..self.src_size).all(|x| self.apply(x + n) == (self.apply(x) + m).mod_floor(&self.dst_size))
    }

    /// `Res : Sets_a -> Sets_b` for `a = k b`: same sets, action restricted to
    /// the subgroup `mu_b`, whose generator acts as the `k`-th power.
    pub fn restrict(&self, k: i64) -> Result<EquivariantSetMap> {
        if k < 1 || self.a % k != 0 {
            return Err(Error::arg("k", format!("{k} does not divide a = {}", self.a)));
        }
        Ok(EquivariantSetMap {
            a: self.a / k,
            ..self.clone()
        })
    }

    /// `- x_{mu_a} mu_b` for `b | a`: quotient by the subgroup `mu_(a/b)`,
    /// whose generator acts by `+b n`.
    pub fn quotient(&self, b: i64) -> Result<EquivariantSetMap> {
        if b < 1 || self.a % b != 0 {
            return Err(Error::arg("b", format!("{b} does not divide a = {}", self.a)));
        }
        let src_size = b * self.src_orbits();
        let dst_size = b * self.dst_orbits();
        let table = (0..src_size).map(|x| self.table[x as usize] % dst_size).collect();
        Ok(EquivariantSetMap {
            a: b,
            src_size,
            dst_size,
            table,
        })
    }
}

/// `F_a(f)`: the induced map `Z/(a n) -> Z/(a m)`.
///
/// For `a = 1` this is the functor on the whole epicyclic category; for
/// `a > 1` the morphism must be a degree-1 morphism of `Arc_a`.
pub fn orbit_map(f: &ArcMorphism, a: i64) -> Result<EquivariantSetMap> {
    if a < 1 {
        return Err(Error::arg("a", format!("must be >= 1, got {a}")));
    }
    if a > 1 && f.deg() != 1 {
        return Err(Error::UnsupportedDegree {
            op: "orbit_map",
            deg: f.deg(),
            reason: "F_a for a > 1 is defined on Arc_a, whose morphisms are linear",
        });
    }
    if f.eqmod() != a {
        return Err(Error::arg(
            "a",
            format!("morphism lives in Arc_{}, not Arc_{a}", f.eqmod()),
        ));
    }
    let src_size = a * f.src();
    let dst_size = a * f.dst();
    let table = (0..src_size).map(|x| f.eval(x).mod_floor(&dst_size)).collect();
    Ok(EquivariantSetMap {
        a,
        src_size,
        dst_size,
        table,
    })
}

/// Points of `P(F^(m))` hit by `f`, as residues modulo the target period.
pub fn orbit_image(f: &ArcMorphism) -> BTreeSet<i64> {
    (0..f.src()).map(|x| f.eval(x).mod_floor(&f.dst())).collect()
}

/// `(a m)^n`, the number of morphisms between free `mu_a`-sets with `n` and
/// `m` orbits.
pub fn hom_count_sets(n: i64, m: i64, a: i64) -> Result<u64> {
    check_period("n", n)?;
    check_period("m", m)?;
    check_period("a", a)?;
    let base = u64::try_from(a * m).map_err(|_| Error::arg("m", "overflow"))?;
    let exp = u32::try_from(n).map_err(|_| Error::arg("n", "too large"))?;
    base.checked_pow(exp)
        .ok_or_else(|| Error::arg("n", format!("({a}*{m})^{n} overflows u64")))
}

/// Counts equivariant maps `Z/(a n) -> Z/(a m)` by depth-first search over all
/// tables, pruning a branch as soon as an assigned pair `x - n, x` breaks
/// equivariance.
pub fn brute_force_equivariant_count(n: i64, m: i64, a: i64, bound: i64) -> Result<u64> {
    check_period("n", n)?;
    check_period("m", m)?;
    check_period("a", a)?;
    if a * n > bound || a * m > bound {
        return Err(Error::BoundExceeded {
            what: "free mu_a-set size",
            requested: a * n.max(m),
            bound,
        });
    }
    let (src, dst) = (a * n, a * m);
    let mut table = vec![0i64; src as usize];
    fn go(x: i64, src: i64, dst: i64, n: i64, m: i64, table: &mut [i64]) -> u64 {
        if x == src {
            // Close the cycle: the last assigned orbit step wraps to x = 0.
            let ok = (0..n).all(|r| table[r as usize] == (table[(src - n + r) as usize] + m) % dst);
            return ok as u64;
        }
        let mut count = 0;
        for v in 0..dst {
            if x >= n && v != (table[(x - n) as usize] + m) % dst {
                continue;
            }
            table[x as usize] = v;
            count += go(x + 1, src, dst, n, m, table);
        }
        count
    }
    Ok(go(0, src, dst, n, m, &mut table))
}

/// The injective morphism `hat k -> hat n` whose orbit image is `Y`:
/// `f(x) = y_(x mod k) + n * floor(x / k)`.
pub fn submodule_from_subset(n: i64, subset: &[i64]) -> Result<ArcMorphism> {
    check_period("n", n)?;
    let mut ys: Vec<i64> = subset.to_vec();
    ys.sort_unstable();
    ys.dedup();
    if ys.is_empty() {
        return Err(Error::arg("Y", "the empty subset is the zero submodule and has no embedding"));
    }
    if let Some(&y) = ys.iter().find(|&&y| !(0..n).contains(&y)) {
        return Err(Error::arg("Y", format!("element {y} outside 0..{n}")));
    }
    let k = ys.len() as i64;
    Ok(ArcMorphism::canonical(k, n, 1, 1, ys.into_iter().collect()))
}

/// Cardinality of `P(F^(n)) = (F^(n) \ {0}) / F^x`, computed by walking
/// `theta`-orbits through the window `-n..2n`.
pub fn projective_points(n: i64) -> Result<usize> {
    check_period("n", n)?;
    let window = -n..2 * n;
    let mut seen = BTreeSet::new();
    let mut orbits = 0;
    for x in window.clone() {
        if seen.contains(&x) {
            continue;
        }
        orbits += 1;
        let mut y = x;
        while window.contains(&y) {
            seen.insert(y);
            y += n;
        }
        let mut y = x - n;
        while window.contains(&y) {
            seen.insert(y);
            y -= n;
        }
    }
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::{identity, normalize, tau};

    #[test]
    fn orbit_map_examples() {
        let id = orbit_map(&identity(3, 1).unwrap(), 1).unwrap();
        assert_eq!(id.table, vec![0, 1, 2]);
        let t = orbit_map(&tau(3, 1).unwrap(), 1).unwrap();
        assert_eq!(t.table, vec![2, 0, 1]);
        let f = normalize(2, 3, 1, &[1, 4], 2).unwrap();
        let fa = orbit_map(&f, 2).unwrap();
        assert_eq!(fa.table, vec![1, 4, 4, 1]);
        assert!(fa.is_equivariant());
        assert!(orbit_map(&f, 1).is_err());
    }

    #[test]
    fn hom_counts() {
        assert_eq!(hom_count_sets(1, 2, 2).unwrap(), 4);
        assert_eq!(hom_count_sets(3, 2, 1).unwrap(), 8);
        assert_eq!(brute_force_equivariant_count(1, 2, 2, 16).unwrap(), 4);
        assert_eq!(brute_force_equivariant_count(2, 3, 1, 16).unwrap(), 9);
        assert!(brute_force_equivariant_count(9, 9, 9, 16).is_err());
    }

    #[test]
    fn subsets_embed() {
        let f = submodule_from_subset(3, &[0, 2]).unwrap();
        assert_eq!((f.src(), f.dst(), f.deg(), f.vals()), (2, 3, 1, &[0, 2][..]));
        assert_eq!(submodule_from_subset(4, &[3, 0, 1, 2]).unwrap(), identity(4, 1).unwrap());
        assert!(submodule_from_subset(3, &[]).is_err());
        assert!(submodule_from_subset(3, &[3]).is_err());
    }

    #[test]
    fn projective_space_has_n_points() {
        for n in 1..=8 {
            assert_eq!(projective_points(n).unwrap(), n as usize);
        }
    }
}
