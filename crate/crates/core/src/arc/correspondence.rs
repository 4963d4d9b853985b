//! The functors `Psi_k`, the correspondences `Psi_k-bar`, the morphisms
//! `psi_k`, and the forgetful functors `Arc_a -> Arc_b`.

use std::collections::BTreeSet;

use super::{check_period, ArcMorphism, Vals};
use crate::error::{Error, Result};

/// `psi_k : Psi_k(hat n) = hat (k n) -> hat n`, the identity map of `Z`
/// viewed as a morphism of degree `k`.
pub fn psi(n: i64, k: i64) -> Result<ArcMorphism> {
    check_period("n", n)?;
    if k < 1 {
        return Err(Error::arg("k", format!("psi_k needs k >= 1, got {k}")));
    }
    let vals = (0..k * n).collect();
    Ok(ArcMorphism::canonical(k * n, n, k, 1, vals))
}

/// Values of the representative on `0..len`.
fn window(f: &ArcMorphism, len: i64) -> Vals {
    (0..len).map(|x| f.eval(x)).collect()
}

/// The functor `Psi_k : Arc_{k t} -> Arc_t` on a degree-1 morphism of
/// `Arc_a` with `k | a`.
pub fn psi_functor(f: &ArcMorphism, k: i64) -> Result<ArcMorphism> {
    if k < 1 {
        return Err(Error::arg("k", format!("need k >= 1, got {k}")));
    }
    if f.deg() != 1 {
        return Err(Error::UnsupportedDegree {
            op: "psi_functor",
            deg: f.deg(),
            reason: "Psi_k acts on Arc_a, whose morphisms have degree 1",
        });
    }
    if f.eqmod() % k != 0 {
        return Err(Error::arg(
            "k",
            format!("{k} does not divide the ambient eqmod {}", f.eqmod()),
        ));
    }
    let src = k * f.src();
    let dst = k * f.dst();
    Ok(ArcMorphism::canonical(src, dst, 1, f.eqmod() / k, window(f, src)))
}

/// `Psi_k-bar(f)`: the `k` classes `Psi_k(theta'^j ∘ f)`, `j = 0..k`.
pub fn psi_k_on_morphism(f: &ArcMorphism, k: i64) -> Result<BTreeSet<ArcMorphism>> {
    if f.deg() != 1 || f.eqmod() != 1 {
        return Err(Error::UnsupportedDegree {
            op: "psi_k_on_morphism",
            deg: f.deg(),
            reason: "the correspondence is defined on degree-1 morphisms of Arc",
        });
    }
    if k < 1 {
        return Err(Error::arg("k", format!("need k >= 1, got {k}")));
    }
    let src = k * f.src();
    let dst = k * f.dst();
    Ok((0..k)
        .map(|j| {
            let vals = (0..src).map(|x| f.eval(x) + j * f.dst()).collect();
            ArcMorphism::canonical(src, dst, 1, 1, vals)
        })
        .collect())
}

/// `f = psi_k ∘ h` with `k = Mod(f)` and `h` linear into `Psi_k(hat m)`.
pub fn factor(f: &ArcMorphism) -> Result<(ArcMorphism, ArcMorphism)> {
    let k = f.deg();
    if k < 1 {
        return Err(Error::UnsupportedDegree {
            op: "factor",
            deg: k,
            reason: "constant morphisms do not factor through psi_k",
        });
    }
    if k == 1 {
        return Ok((super::identity(f.dst(), f.eqmod())?, f.clone()));
    }
    let h = ArcMorphism::canonical(f.src(), k * f.dst(), 1, 1, f.vals.clone());
    Ok((psi(f.dst(), k)?, h))
}

/// Forgetful functor `Arc_a -> Arc_b` for `b | a`.
pub fn forget(f: &ArcMorphism, b: i64) -> Result<ArcMorphism> {
    if b < 1 || f.eqmod() % b != 0 {
        return Err(Error::arg(
            "b",
            format!("{b} does not divide the ambient eqmod {}", f.eqmod()),
        ));
    }
    Ok(ArcMorphism::canonical(f.src(), f.dst(), f.deg(), b, f.vals.clone()))
}

/// Barycentric subdivision `Sd_k`: the `k`-fold concatenation of a
/// simplicial map, as a linear morphism `hat (k n) -> hat (k m)`.
pub fn subdivide(alpha: &ArcMorphism, k: i64) -> Result<ArcMorphism> {
    if alpha.deg() != 1 || alpha.eqmod() != 1 {
        return Err(Error::UnsupportedDegree {
            op: "subdivide",
            deg: alpha.deg(),
            reason: "subdivision applies to simplicial (degree-1) maps",
        });
    }
    if k < 1 {
        return Err(Error::arg("k", format!("need k >= 1, got {k}")));
    }
    let mut vals = Vals::new();
    for copy in 0..k {
        vals.extend(alpha.vals().iter().map(|v| v + copy * alpha.dst()));
    }
    Ok(ArcMorphism::canonical(k * alpha.src(), k * alpha.dst(), 1, 1, vals))
}
