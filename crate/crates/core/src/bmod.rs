//! Free-rank-one semimodules over `B`: the chains `B^(n,1) = {0 < 1 < ... < n}`,
//! the simplicial category as their zero-reflecting linear maps, B-valued
//! duality, and the bridge maps into `F^(n)`.

use std::collections::BTreeSet;

use num_integer::binomial;

use crate::arc::{self, ArcMorphism};
use crate::error::{Error, Result};
use crate::tropic::{BElem, TropElem};

/// The chain `B^(n,1)`; elements are the integers `0..=rank`, with `0` the
/// zero of the semimodule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BChain {
    rank: u32,
}

impl BChain {
    pub fn new(rank: u32) -> Self {
        BChain { rank }
    }

    pub fn rank(self) -> u32 {
        self.rank
    }

    pub fn cardinality(self) -> usize {
        self.rank as usize + 1
    }

    pub fn elements(self) -> impl Iterator<Item = u32> + Clone {
        0..=self.rank
    }

    pub fn contains(self, x: u32) -> bool {
        x <= self.rank
    }

    pub fn join(self, x: u32, y: u32) -> u32 {
        x.max(y)
    }

    pub fn meet(self, x: u32, y: u32) -> u32 {
        x.min(y)
    }
}

/// Which order a [`ChainMap`] is monotone and zero-preserving for.
///
/// A dual chain `E*` is the same set with the opposite order, so its zero is
/// the top element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Primal,
    Dual,
}

/// A B-linear map between chains, stored as its full table on `0..=src_rank`.
///
/// For `Primal` maps `table[0] = 0`; for `Dual` maps (between dual chains)
/// `table[src_rank] = dst_rank`. In both cases the table is non-decreasing in
/// the integer order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainMap {
    src_rank: u32,
    dst_rank: u32,
    orientation: Orientation,
    table: Vec<u32>,
}

impl ChainMap {
    pub fn new(src_rank: u32, dst_rank: u32, orientation: Orientation, table: Vec<u32>) -> Result<Self> {
        if table.len() != src_rank as usize + 1 {
            return Err(Error::invariant(
                "table_length",
                format!("expected {} entries, got {}", src_rank + 1, table.len()),
            ));
        }
        if let Some(&v) = table.iter().find(|&&v| v > dst_rank) {
            return Err(Error::invariant("in_range", format!("value {v} exceeds rank {dst_rank}")));
        }
        if table.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::invariant("monotone", format!("{table:?} is not non-decreasing")));
        }
        let zero_ok = match orientation {
            Orientation::Primal => table[0] == 0,
            Orientation::Dual => table[src_rank as usize] == dst_rank,
        };
        if !zero_ok {
            return Err(Error::invariant("zero_preserving", format!("{table:?} does not fix the zero")));
        }
        Ok(ChainMap {
            src_rank,
            dst_rank,
            orientation,
            table,
        })
    }

    pub fn identity(rank: u32) -> Self {
        ChainMap {
            src_rank: rank,
            dst_rank: rank,
            orientation: Orientation::Primal,
            table: (0..=rank).collect(),
        }
    }

    pub fn src_rank(&self) -> u32 {
        self.src_rank
    }

    pub fn dst_rank(&self) -> u32 {
        self.dst_rank
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.table[x as usize]
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &ChainMap) -> Result<ChainMap> {
        if f.dst_rank != self.src_rank {
            return Err(Error::PeriodMismatch {
                target: f.dst_rank as i64,
                next_source: self.src_rank as i64,
            });
        }
        if f.orientation != self.orientation {
            return Err(Error::arg("f", "cannot compose maps of opposite orientation"));
        }
        Ok(ChainMap {
            src_rank: f.src_rank,
            dst_rank: self.dst_rank,
            orientation: self.orientation,
            table: f.table.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    /// The preimage of zero is exactly zero, for the orientation's zero.
    pub fn is_zero_reflecting(&self) -> bool {
        match self.orientation {
            Orientation::Primal => self.table.iter().skip(1).all(|&v| v != 0),
            Orientation::Dual => {
                let n = self.src_rank as usize;
                self.table[..n].iter().all(|&v| v != self.dst_rank)
            }
        }
    }

    /// Morphism of intervals: both end points are preserved.
    pub fn is_endpoint_preserving(&self) -> bool {
        self.table[0] == 0 && self.table[self.src_rank as usize] == self.dst_rank
    }
}

/// A morphism of the simplicial category, as a zero-reflecting map of chains.
///
/// `vals[i]` is the image of the nonzero element `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaMorphism {
    src_rank: u32,
    dst_rank: u32,
    vals: Vec<u32>,
}

impl DeltaMorphism {
    pub fn new(src_rank: u32, dst_rank: u32, vals: Vec<u32>) -> Result<Self> {
        if src_rank == 0 || dst_rank == 0 {
            return Err(Error::arg("rank", "simplicial objects have rank >= 1"));
        }
        if vals.len() != src_rank as usize {
            return Err(Error::invariant(
                "vals_length",
                format!("expected {src_rank} values, got {}", vals.len()),
            ));
        }
        if let Some(&v) = vals.iter().find(|&&v| v == 0 || v > dst_rank) {
            return Err(Error::invariant("in_range", format!("value {v} outside 1..={dst_rank}")));
        }
        if vals.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::invariant("monotone", format!("{vals:?} is not non-decreasing")));
        }
        Ok(DeltaMorphism {
            src_rank,
            dst_rank,
            vals,
        })
    }

    pub fn identity(rank: u32) -> Result<Self> {
        DeltaMorphism::new(rank, rank, (1..=rank).collect())
    }

    pub fn src_rank(&self) -> u32 {
        self.src_rank
    }

    pub fn dst_rank(&self) -> u32 {
        self.dst_rank
    }

    pub fn vals(&self) -> &[u32] {
        &self.vals
    }

    pub fn to_chain_map(&self) -> ChainMap {
        let mut table = Vec::with_capacity(self.vals.len() + 1);
        table.push(0);
        table.extend_from_slice(&self.vals);
        ChainMap {
            src_rank: self.src_rank,
            dst_rank: self.dst_rank,
            orientation: Orientation::Primal,
            table,
        }
    }

    /// Every non-decreasing map `{1..n} -> {1..m}`.
    pub fn enumerate(src_rank: u32, dst_rank: u32) -> Vec<DeltaMorphism> {
        fn go(buf: &mut Vec<u32>, n: usize, m: u32, out: &mut Vec<Vec<u32>>) {
            if buf.len() == n {
                out.push(buf.clone());
                return;
            }
            let lo = buf.last().copied().unwrap_or(1);
            for v in lo..=m {
                buf.push(v);
                go(buf, n, m, out);
                buf.pop();
            }
        }
        let mut tables = Vec::new();
        go(&mut Vec::new(), src_rank as usize, dst_rank, &mut tables);
        tables
            .into_iter()
            .map(|vals| DeltaMorphism {
                src_rank,
                dst_rank,
                vals,
            })
            .collect()
    }
}

/// `g ∘ f` in the simplicial category.
pub fn delta_compose(g: &DeltaMorphism, f: &DeltaMorphism) -> Result<DeltaMorphism> {
    if f.dst_rank != g.src_rank {
        return Err(Error::PeriodMismatch {
            target: f.dst_rank as i64,
            next_source: g.src_rank as i64,
        });
    }
    let vals = f.vals.iter().map(|&x| g.vals[x as usize - 1]).collect();
    Ok(DeltaMorphism {
        src_rank: f.src_rank,
        dst_rank: g.dst_rank,
        vals,
    })
}

/// Matrix over `B`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BElem>,
}

impl BMatrix {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> BElem) -> Self {
        let entries = (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).map(|(i, j)| f(i, j)).collect();
        BMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> BElem {
        self.entries[i * self.cols + j]
    }

    pub fn mul(&self, rhs: &BMatrix) -> Result<BMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::arg("rhs", format!("{}x{} times {}x{}", self.rows, self.cols, rhs.rows, rhs.cols)));
        }
        Ok(BMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(BElem::Zero, |acc, l| acc + self.get(i, l) * rhs.get(l, j))
        }))
    }

    pub fn apply(&self, v: &[BElem]) -> Vec<BElem> {
        (0..self.rows)
            .map(|i| (0..self.cols).fold(BElem::Zero, |acc, j| acc + self.get(i, j) * v[j]))
            .collect()
    }

    /// Image of every vector of `B^cols`.
    pub fn range(&self) -> BTreeSet<Vec<BElem>> {
        (0u64..1 << self.cols)
            .map(|mask| {
                let v: Vec<BElem> = (0..self.cols).map(|j| BElem::from_bool(mask >> j & 1 == 1)).collect();
                self.apply(&v)
            })
            .collect()
    }

    pub fn rows_as_strings(&self) -> Vec<String> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect::<Vec<_>>().join(" "))
            .collect()
    }
}

/// Lower-triangular all-ones idempotent whose range is `B^(n,1)`.
pub fn projection_matrix(n: usize) -> Result<BMatrix> {
    if n == 0 {
        return Err(Error::arg("n", "projection matrix needs n >= 1"));
    }
    Ok(BMatrix::from_fn(n, n, |i, j| BElem::from_bool(j <= i)))
}

/// `<x, y>_B`: zero when `x <= y`, one otherwise.
pub fn b_pairing(x: u32, y: u32) -> BElem {
    BElem::from_bool(x > y)
}

/// Transpose with respect to the B-valued pairing.
///
/// For a primal map `f: E -> F` this is `f*(y) = max {x : f(x) <= y}`, a map
/// `F* -> E*`. For a dual map it is `g*(t) = min {z : g(z) >= t}`, which is
/// the same formula read in the opposite orders, so transposition is an
/// involution.
pub fn b_transpose(f: &ChainMap) -> ChainMap {
    let (n, m) = (f.src_rank, f.dst_rank);
    let table = match f.orientation {
        Orientation::Primal => (0..=m)
            .map(|y| (0..=n).rev().find(|&x| f.apply(x) <= y).expect("f(0) = 0 <= y"))
            .collect(),
        Orientation::Dual => (0..=m)
            .map(|t| (0..=n).find(|&z| f.apply(z) >= t).expect("g(top) = top >= t"))
            .collect(),
    };
    ChainMap {
        src_rank: m,
        dst_rank: n,
        orientation: match f.orientation {
            Orientation::Primal => Orientation::Dual,
            Orientation::Dual => Orientation::Primal,
        },
        table,
    }
}

/// Number of rank-`k` subsemimodules of `B^(n,1)`: `C(n, k)`.
pub fn count_submodules(n: u32, k: u32) -> Result<u64> {
    if k > n {
        return Err(Error::arg("k", format!("rank {k} exceeds ambient rank {n}")));
    }
    Ok(binomial(n as u64, k as u64))
}

/// The increasing identification of `B^(n,1) \ {0}` with `{0..n-1}`.
pub fn iota_n(x: u32, n: u32) -> Result<i64> {
    if x == 0 {
        return Err(Error::arg("x", "zero has no point image"));
    }
    if x > n {
        return Err(Error::arg("x", format!("{x} is not in B^({n},1)")));
    }
    Ok(x as i64 - 1)
}

/// The linear lift `g(j + k n) = f(j) + k m` of a simplicial map.
pub fn delta_to_lambda(f: &DeltaMorphism) -> ArcMorphism {
    let vals = f.vals.iter().map(|&v| v as i64 - 1).collect();
    ArcMorphism::canonical(f.src_rank as i64, f.dst_rank as i64, 1, 1, vals)
}

/// `phi_n(u^k, j) = theta^k(iota(j)) = iota(j) + k n`.
pub fn phi_n(x: TropElem, j: u32, n: u32) -> Result<i64> {
    let e = x
        .exponent()
        .ok_or_else(|| Error::arg("x", "phi_n vanishes at the zero scalar"))?;
    Ok(iota_n(j, n)? + e * n as i64)
}

/// Whether `arc` is in the image of the simplicial category under
/// [`delta_to_lambda`], returning the preimage.
pub fn lambda_to_delta(f: &ArcMorphism) -> Option<DeltaMorphism> {
    if f.deg() != 1 || f.eqmod() != 1 || *f.vals().last()? >= f.dst() {
        return None;
    }
    let vals = f.vals().iter().map(|&v| v as u32 + 1).collect();
    DeltaMorphism::new(f.src() as u32, f.dst() as u32, vals).ok()
}

/// Convenience used by the CLI: the lift of a delta morphism composed in arc.
pub fn lift_compose(g: &DeltaMorphism, f: &DeltaMorphism) -> Result<ArcMorphism> {
    arc::compose(&delta_to_lambda(g), &delta_to_lambda(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_compose_examples() {
        let f = DeltaMorphism::new(2, 1, vec![1, 1]).unwrap();
        let g = DeltaMorphism::new(1, 2, vec![2]).unwrap();
        assert_eq!(delta_compose(&g, &f).unwrap().vals(), &[2, 2]);
        let id = DeltaMorphism::identity(2).unwrap();
        assert_eq!(delta_compose(&id, &g).unwrap(), g);
        assert!(delta_compose(&f, &f).is_err());
        assert!(DeltaMorphism::new(2, 2, vec![0, 1]).is_err());
        assert!(DeltaMorphism::new(2, 2, vec![2, 1]).is_err());
    }

    #[test]
    fn projection_matrix_shape() {
        let p = projection_matrix(2).unwrap();
        assert_eq!(p.rows_as_strings(), vec!["1 0", "1 1"]);
        assert!(projection_matrix(0).is_err());
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(b_pairing(1, 3), BElem::Zero);
        assert_eq!(b_pairing(3, 1), BElem::One);
        assert_eq!(b_pairing(2, 2), BElem::Zero);
    }

    #[test]
    fn transpose_example() {
        let f = DeltaMorphism::new(2, 3, vec![2, 3]).unwrap().to_chain_map();
        let t = b_transpose(&f);
        assert_eq!(t.table(), &[0, 0, 1, 2]);
        assert_eq!(t.orientation(), Orientation::Dual);
        assert_eq!(b_transpose(&t), f);
        assert_eq!(b_transpose(&ChainMap::identity(3)).table(), ChainMap::identity(3).table());
    }

    #[test]
    fn zero_reflection_swaps_with_endpoints() {
        let f = ChainMap::new(2, 2, Orientation::Primal, vec![0, 0, 2]).unwrap();
        assert!(!f.is_zero_reflecting());
        assert!(f.is_endpoint_preserving());
        let t = b_transpose(&f);
        assert!(t.is_zero_reflecting());
        assert!(!t.is_endpoint_preserving());
        let id = ChainMap::identity(2);
        assert!(id.is_zero_reflecting() && id.is_endpoint_preserving());
    }

    #[test]
    fn chain_map_validation() {
        assert!(ChainMap::new(2, 2, Orientation::Primal, vec![1, 1, 2]).is_err());
        assert!(ChainMap::new(2, 2, Orientation::Dual, vec![0, 1, 1]).is_err());
        assert!(ChainMap::new(2, 2, Orientation::Primal, vec![0, 3, 3]).is_err());
        assert!(ChainMap::new(2, 2, Orientation::Primal, vec![0, 1]).is_err());
    }

    #[test]
    fn submodule_counts() {
        assert_eq!(count_submodules(4, 2).unwrap(), 6);
        assert_eq!(count_submodules(5, 0).unwrap(), 1);
        assert!(count_submodules(2, 3).is_err());
    }

    #[test]
    fn bridge_maps() {
        assert_eq!(iota_n(1, 3).unwrap(), 0);
        assert_eq!(iota_n(3, 3).unwrap(), 2);
        assert!(iota_n(0, 3).is_err());
        assert!(iota_n(4, 3).is_err());
        assert_eq!(phi_n(TropElem::Pow(0), 1, 3).unwrap(), 0);
        assert_eq!(phi_n(TropElem::Pow(2), 2, 3).unwrap(), 7);
        assert!(phi_n(TropElem::Zero, 1, 3).is_err());
        assert!(phi_n(TropElem::Pow(1), 0, 3).is_err());
    }

    #[test]
    fn delta_to_lambda_examples() {
        let f = DeltaMorphism::new(2, 3, vec![1, 3]).unwrap();
        let g = delta_to_lambda(&f);
        assert_eq!((g.src(), g.dst(), g.deg(), g.vals()), (2, 3, 1, &[0, 2][..]));
        assert_eq!(lambda_to_delta(&g), Some(f));
        assert_eq!(
            delta_to_lambda(&DeltaMorphism::identity(4).unwrap()),
            arc::identity(4, 1).unwrap()
        );
        assert_eq!(lambda_to_delta(&arc::tau(3, 1).unwrap()), None);
    }
}
