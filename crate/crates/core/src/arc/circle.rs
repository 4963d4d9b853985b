//! The abstract circle `hat n / theta`.
//!
//! Points are the residues `0..n`. A segment is the `theta`-orbit of a pair
//! `(x, y)` with `x <= y <= x + n`, stored as its start residue and length.

use std::fmt;

use super::check_period;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    pub start: i64,
    pub len: i64,
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, +{})", self.start, self.len)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AbstractCircle {
    n: i64,
}

impl AbstractCircle {
    pub fn new(n: i64) -> Result<Self> {
        check_period("n", n)?;
        Ok(AbstractCircle { n })
    }

    pub fn period(&self) -> i64 {
        self.n
    }

    pub fn points(&self) -> impl Iterator<Item = i64> {
        0..self.n
    }

    /// All `n (n + 1)` segments.
    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.points()
            .flat_map(move |start| (0..=self.n).map(move |len| Segment { start, len }))
    }

    pub fn segment(&self, start: i64, len: i64) -> Result<Segment> {
        if !(0..self.n).contains(&start) {
            return Err(Error::arg("start", format!("point {start} outside 0..{}", self.n)));
        }
        if !(0..=self.n).contains(&len) {
            return Err(Error::arg("len", format!("length {len} outside 0..={}", self.n)));
        }
        Ok(Segment { start, len })
    }

    pub fn boundary0(&self, s: Segment) -> i64 {
        s.start
    }

    pub fn boundary1(&self, s: Segment) -> i64 {
        (s.start + s.len) % self.n
    }

    pub fn zero(&self, x: i64) -> Segment {
        Segment { start: x, len: 0 }
    }

    pub fn one(&self, x: i64) -> Segment {
        Segment { start: x, len: self.n }
    }

    /// `(x, y)* = (y, theta(x))`.
    pub fn star(&self, s: Segment) -> Segment {
        Segment {
            start: self.boundary1(s),
            len: self.n - s.len,
        }
    }

    /// `(x, y) ∪ (y, z) = (x, z)` when `x <= y <= z <= theta(x)`.
    pub fn union(&self, s: Segment, t: Segment) -> Result<Segment> {
        if self.boundary1(s) != t.start {
            return Err(Error::invariant(
                "union_endpoints",
                format!("end of {s} is {}, start of {t} is {}", self.boundary1(s), t.start),
            ));
        }
        if s.len + t.len > self.n {
            return Err(Error::invariant(
                "union_length",
                format!("{s} and {t} together wrap past theta of the start point"),
            ));
        }
        Ok(Segment {
            start: s.start,
            len: s.len + t.len,
        })
    }
}

/// Convenience wrapper for `AbstractCircle::new(n)?.union(s, t)`.
pub fn circle_union(n: i64, s: Segment, t: Segment) -> Result<Segment> {
    AbstractCircle::new(n)?.union(s, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_identities() {
        let c = AbstractCircle::new(4).unwrap();
        assert_eq!(c.segments().count(), 20);
        for s in c.segments() {
            assert_eq!(c.union(c.zero(s.start), s).unwrap(), s);
            assert_eq!(c.star(c.star(s)), s);
            assert_eq!(c.boundary1(c.star(s)), s.start);
        }
        let s = c.segment(3, 2).unwrap();
        assert_eq!(c.boundary1(s), 1);
        assert_eq!(c.star(s), Segment { start: 1, len: 2 });
        assert!(c.union(s, c.segment(2, 1).unwrap()).is_err());
        assert!(c.union(s, c.segment(1, 3).unwrap()).is_err());
        assert_eq!(c.union(s, c.segment(1, 2).unwrap()).unwrap(), c.one(3));
        assert!(c.segment(4, 0).is_err());
        assert!(circle_union(0, s, s).is_err());
    }
}
