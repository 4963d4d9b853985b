//! Generators of the cyclic categories in the archimedean-set model.
//!
//! Periods are used throughout: `delta(n, j)` is the face `[n-1] -> [n]`,
//! `sigma(n, j)` the degeneracy `[n] -> [n-1]`, and `tau(n)` generates
//! `Aut([n-1])` as `x -> x - 1`.

use super::{check_period, normalize, psi, ArcMorphism};
use crate::error::{Error, Result};

pub fn identity(n: i64, eqmod: i64) -> Result<ArcMorphism> {
    check_period("n", n)?;
    let vals: Vec<i64> = (0..n).collect();
    normalize(n, n, 1, &vals, eqmod)
}

/// Cyclic generator `x -> x - 1` on period `n`.
pub fn tau(n: i64, eqmod: i64) -> Result<ArcMorphism> {
    check_period("n", n)?;
    let vals: Vec<i64> = (-1..n - 1).collect();
    normalize(n, n, 1, &vals, eqmod)
}

/// Face `hat n -> hat (n+1)`: the increasing injection missing residue `j`.
pub fn delta(n: i64, j: i64, eqmod: i64) -> Result<ArcMorphism> {
    check_period("n", n)?;
    if !(0..=n).contains(&j) {
        return Err(Error::arg("j", format!("face index must lie in 0..={n}, got {j}")));
    }
    let vals: Vec<i64> = (0..n).map(|x| if x < j { x } else { x + 1 }).collect();
    normalize(n, n + 1, 1, &vals, eqmod)
}

/// Degeneracy `hat (n+1) -> hat n`: the non-decreasing surjection hitting
/// residue `j` twice.
pub fn sigma(n: i64, j: i64, eqmod: i64) -> Result<ArcMorphism> {
    check_period("n", n)?;
    if !(0..n).contains(&j) {
        return Err(Error::arg("j", format!("degeneracy index must lie in 0..{n}, got {j}")));
    }
    let vals: Vec<i64> = (0..=n).map(|x| if x <= j { x } else { x - 1 }).collect();
    normalize(n + 1, n, 1, &vals, eqmod)
}

/// Epicyclic generator `pi^k : hat (k n) -> hat n`, equal to `psi(n, k)`.
pub fn pi(n: i64, k: i64) -> Result<ArcMorphism> {
    psi(n, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::compose;

    #[test]
    fn generator_values() {
        assert_eq!(tau(3, 1).unwrap().vals(), &[2, 3, 4]);
        assert_eq!(tau(3, 2).unwrap().vals(), &[5, 6, 7]);
        assert_eq!(delta(2, 1, 1).unwrap().vals(), &[0, 2]);
        assert_eq!(delta(2, 0, 1).unwrap().vals(), &[1, 2]);
        assert_eq!(sigma(2, 0, 1).unwrap().vals(), &[0, 0, 1]);
        assert_eq!(sigma(2, 1, 1).unwrap().vals(), &[0, 1, 1]);
        assert!(delta(2, 3, 1).is_err());
        assert!(sigma(2, 2, 1).is_err());
    }

    #[test]
    fn tau_order_is_period_times_eqmod() {
        for a in 1..=3 {
            for n in 1..=4 {
                let t = tau(n, a).unwrap();
                let id = identity(n, a).unwrap();
                let mut acc = id.clone();
                for step in 1..=n * a {
                    acc = compose(&t, &acc).unwrap();
                    assert_eq!(acc == id, step == n * a, "n={n} a={a} step={step}");
                }
            }
        }
    }
}
