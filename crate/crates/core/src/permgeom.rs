//! The projection `P: P_F -> Fin`, cyclic descent numbers and the minimal
//! semilinear lift of a set map.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arc::{self, ArcMorphism, Vals};
use crate::error::{Error, Result};

/// Enumeration bound used by [`minimality_witness`] and [`fullness_check`]
/// when the caller does not supply one.
pub const DEFAULT_BOUND: i64 = 4;

/// An arbitrary map `{0..src-1} -> {0..dst-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SetMapWire", into = "SetMapWire")]
pub struct SetMapFin {
    src: i64,
    dst: i64,
    table: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct SetMapWire {
    src: i64,
    dst: i64,
    table: Vec<i64>,
}

impl TryFrom<SetMapWire> for SetMapFin {
    type Error = Error;

    fn try_from(w: SetMapWire) -> Result<Self> {
        SetMapFin::new(w.src, w.dst, w.table)
    }
}

impl From<SetMapFin> for SetMapWire {
    fn from(s: SetMapFin) -> Self {
        SetMapWire {
            src: s.src,
            dst: s.dst,
            table: s.table,
        }
    }
}

impl SetMapFin {
    pub fn new(src: i64, dst: i64, table: Vec<i64>) -> Result<Self> {
        arc::check_period("src", src)?;
        arc::check_period("dst", dst)?;
        if table.len() as i64 != src {
            return Err(Error::invariant(
                "table_length",
                format!("expected {src} entries, got {}", table.len()),
            ));
        }
        if let Some(&v) = table.iter().find(|&&v| !(0..dst).contains(&v)) {
            return Err(Error::invariant("in_range", format!("value {v} not in 0..{dst}")));
        }
        Ok(SetMapFin { src, dst, table })
    }

    pub fn identity(n: i64) -> Result<Self> {
        SetMapFin::new(n, n, (0..n).collect())
    }

    pub fn src(&self) -> i64 {
        self.src
    }

    pub fn dst(&self) -> i64 {
        self.dst
    }

    pub fn table(&self) -> &[i64] {
        &self.table
    }

    pub fn is_constant(&self) -> bool {
        self.table.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_permutation(&self) -> bool {
        self.src == self.dst && {
            let mut seen = vec![false; self.dst as usize];
            self.table.iter().all(|&v| !std::mem::replace(&mut seen[v as usize], true))
        }
    }

    /// All `dst^src` maps, in lexicographic order of tables.
    pub fn all(src: i64, dst: i64) -> Result<Vec<SetMapFin>> {
        arc::check_period("src", src)?;
        arc::check_period("dst", dst)?;
        let total = (dst as u64).checked_pow(src as u32).filter(|&t| t <= 1 << 24).ok_or(Error::BoundExceeded {
            what: "set maps",
            requested: i64::MAX,
            bound: 1 << 24,
        })?;
        Ok((0..total)
            .map(|mut code| {
                let mut table = vec![0; src as usize];
                for slot in table.iter_mut().rev() {
                    *slot = (code % dst as u64) as i64;
                    code /= dst as u64;
                }
                SetMapFin { src, dst, table }
            })
            .collect())
    }
}

impl fmt::Display for SetMapFin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] -> [{}] ", self.src - 1, self.dst - 1)?;
        let parts: Vec<String> = self.table.iter().enumerate().map(|(i, v)| format!("{i}->{v}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `P(f)`: `x -> f(x) mod q` on one period.
pub fn project(f: &ArcMorphism) -> Result<SetMapFin> {
    if f.eqmod() != 1 {
        return Err(Error::arg("f", "projection is defined for eqmod 1"));
    }
    let q = f.dst();
    Ok(SetMapFin {
        src: f.src(),
        dst: q,
        table: f.vals().iter().map(|v| v.rem_euclid(q)).collect(),
    })
}

fn is_descent(s: &SetMapFin, j: usize) -> bool {
    s.table[(j + 1) % s.table.len()] < s.table[j]
}

/// Number of `j` with `s(j + 1) < s(j)`, indices mod `src`.
pub fn cdesc(s: &SetMapFin) -> i64 {
    (0..s.table.len()).filter(|&j| is_descent(s, j)).count() as i64
}

/// The unique lift of minimal degree, `f(x) = s(x) + q c(x)` where `c(x)`
/// counts the descents before `x`.
///
/// Its degree is `cdesc(s)`; constant maps lift to degree 0.
pub fn lift(s: &SetMapFin) -> ArcMorphism {
    let mut c = 0;
    let mut vals = Vals::with_capacity(s.table.len());
    for x in 0..s.table.len() {
        if x > 0 && is_descent(s, x - 1) {
            c += 1;
        }
        vals.push(s.table[x] + s.dst * c);
    }
    ArcMorphism::canonical(s.src, s.dst, cdesc(s), 1, vals)
}

fn check_bound(s: &SetMapFin, bound: i64) -> Result<()> {
    let size = s.src.max(s.dst);
    if size > bound {
        return Err(Error::BoundExceeded {
            what: "enumeration period",
            requested: size,
            bound,
        });
    }
    Ok(())
}

/// Enumerates every morphism of degree `<= cdesc(s)`: confirms that none of
/// lower degree projects to `s` and exactly one of degree `cdesc(s)` does.
pub fn minimality_witness(s: &SetMapFin, bound: i64) -> Result<bool> {
    check_bound(s, bound)?;
    let k = cdesc(s);
    for d in 0..k {
        if arc::enumerate(s.src, s.dst, d, 1)?.iter().any(|f| project(f).as_ref() == Ok(s)) {
            return Ok(false);
        }
    }
    let hits = arc::enumerate(s.src, s.dst, k, 1)?
        .into_iter()
        .filter(|f| project(f).as_ref() == Ok(s))
        .count();
    Ok(hits == 1)
}

/// Every set map `{0..p-1} -> {0..q-1}` is the projection of its lift.
pub fn fullness_check(p: i64, q: i64, bound: i64) -> Result<bool> {
    let size = p.max(q);
    if size > bound {
        return Err(Error::BoundExceeded {
            what: "enumeration period",
            requested: size,
            bound,
        });
    }
    Ok(SetMapFin::all(p, q)?
        .iter()
        .all(|s| project(&lift(s)).as_ref() == Ok(s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::{identity, normalize, psi, tau};

    fn sm(p: i64, q: i64, t: &[i64]) -> SetMapFin {
        SetMapFin::new(p, q, t.to_vec()).unwrap()
    }

    #[test]
    fn projection_examples() {
        assert_eq!(project(&identity(3, 1).unwrap()).unwrap(), SetMapFin::identity(3).unwrap());
        assert_eq!(project(&tau(3, 1).unwrap()).unwrap().table(), &[2, 0, 1]);
        assert_eq!(project(&psi(2, 3).unwrap()).unwrap().table(), &[0, 1, 0, 1, 0, 1]);
        assert!(project(&tau(2, 2).unwrap()).is_err());
    }

    #[test]
    fn cdesc_examples() {
        assert_eq!(cdesc(&SetMapFin::identity(3).unwrap()), 1);
        assert_eq!(cdesc(&sm(3, 3, &[1, 1, 1])), 0);
        assert_eq!(cdesc(&sm(3, 3, &[2, 1, 0])), 2);
        assert_eq!(cdesc(&sm(1, 2, &[1])), 0);
    }

    #[test]
    fn lift_examples() {
        let shift = lift(&sm(3, 3, &[1, 2, 0]));
        assert_eq!((shift.deg(), shift.vals()), (1, &[1, 2, 3][..]));
        let rev = lift(&sm(3, 3, &[2, 1, 0]));
        assert_eq!((rev.deg(), rev.vals()), (2, &[2, 4, 6][..]));
        let c = lift(&sm(3, 2, &[1, 1, 1]));
        assert!(c.is_constant());
        assert_eq!(c.vals(), &[1, 1, 1]);
    }

    #[test]
    fn lift_is_already_canonical() {
        for s in SetMapFin::all(3, 3).unwrap() {
            let f = lift(&s);
            assert_eq!(f.vals()[0], s.table()[0]);
            assert_eq!(normalize(f.src(), f.dst(), f.deg(), f.vals(), 1).unwrap(), f);
        }
    }

    #[test]
    fn minimality_examples() {
        assert!(minimality_witness(&SetMapFin::identity(2).unwrap(), DEFAULT_BOUND).unwrap());
        let rev = sm(3, 3, &[2, 1, 0]);
        assert!(arc::enumerate(3, 3, 1, 1)
            .unwrap()
            .iter()
            .all(|f| project(f).unwrap() != rev));
        for s in SetMapFin::all(3, 3).unwrap() {
            assert!(minimality_witness(&s, DEFAULT_BOUND).unwrap(), "{s}");
        }
        assert!(matches!(
            minimality_witness(&SetMapFin::identity(5).unwrap(), DEFAULT_BOUND),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn fullness_examples() {
        assert!(fullness_check(1, 1, DEFAULT_BOUND).unwrap());
        assert!(fullness_check(3, 3, DEFAULT_BOUND).unwrap());
        assert!(fullness_check(2, 4, DEFAULT_BOUND).unwrap());
        assert_eq!(SetMapFin::all(2, 4).unwrap().len(), 16);
    }

    #[test]
    fn set_map_validation_and_json() {
        assert!(SetMapFin::new(2, 2, vec![0, 2]).is_err());
        assert!(SetMapFin::new(2, 2, vec![0]).is_err());
        let s: SetMapFin = serde_json::from_str(r#"{"src":3,"dst":3,"table":[2,1,0]}"#).unwrap();
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"src":3,"dst":3,"table":[2,1,0]}"#);
        assert!(serde_json::from_str::<SetMapFin>(r#"{"src":1,"dst":1,"table":[3]}"#).is_err());
        assert!(s.is_permutation());
        assert!(!sm(2, 2, &[0, 0]).is_permutation());
    }
}
