//! Reduced root systems in doubled integer coordinates.
//!
//! Every root is stored as twice its vector in the standard Bourbaki
//! realization, so the half-integral roots of `F4` and the `E` series stay
//! integral. Positive roots are ordered by height, then lexicographically by
//! doubled coordinates; that order fixes the root indices used everywhere
//! else (including JSON output).
//!
//! Internally a root is addressed by a *signed index* in `0..2m`, where `m`
//! is the number of positive roots: `i < m` is the `i`-th positive root and
//! `m + i` is its negative.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// Cartan type and rank, e.g. `B3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemId {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemId {
    pub const MAX_RANK: usize = 8;

    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=Self::MAX_RANK).contains(&rank),
            Family::B | Family::C | Family::D => (2..=Self::MAX_RANK).contains(&rank),
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(RootSystemId { family, rank })
        } else {
            Err(Error::UnsupportedRank { family, rank })
        }
    }

    /// Whether all roots have the same length.
    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }
}

impl fmt::Display for RootSystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl Serialize for RootSystemId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for RootSystemId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::BadSystemId(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::BadSystemId(s.to_string()))?;
        RootSystemId::new(family, rank)
    }
}

/// Handle to a root of a particular system.
///
/// Cheap to copy; coordinates are looked up through the owning
/// [`RootSystem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Root {
    system: RootSystemId,
    index: u16,
    negative: bool,
}

impl Root {
    /// Ordinal of the root (or of its negative) in the positive-root list.
    pub fn index(&self) -> usize {
        self.index as usize
    }

    pub fn is_positive(&self) -> bool {
        !self.negative
    }

    pub fn system(&self) -> RootSystemId {
        self.system
    }

    pub fn negated(self) -> Root {
        Root {
            negative: !self.negative,
            ..self
        }
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Positive roots before negatives, each group in catalog order.
impl Ord for Root {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.system, self.negative, self.index).cmp(&(other.system, other.negative, other.index))
    }
}

/// A pair of positive roots summing to a third.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingularPair {
    pub alpha: Root,
    pub gamma: Root,
    pub beta: Root,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    id: RootSystemId,
    ambient: usize,
    dcoords: Vec<Vec<i32>>,
    fcoords: Vec<Vec<i32>>,
    heights: Vec<u32>,
    fundamentals: Vec<usize>,
    lookup: HashMap<Vec<i32>, usize>,
    gram: Vec<i64>,
    sums: Vec<u32>,
    coxeter_number: usize,
}

fn unit(n: usize, i: usize, c: i32) -> Vec<i32> {
    let mut v = vec![0; n];
    v[i] = c;
    v
}

fn diff(n: usize, i: usize, j: usize) -> Vec<i32> {
    let mut v = vec![0; n];
    v[i] = 2;
    v[j] = -2;
    v
}

/// Simple roots (doubled) in Bourbaki numbering, ambient dimension, and the
/// divisor applied to dot products.
fn simple_roots(id: RootSystemId) -> (Vec<Vec<i32>>, usize, i64) {
    let n = id.rank;
    match id.family {
        Family::A => ((0..n).map(|i| diff(n + 1, i, i + 1)).collect(), n + 1, 1),
        Family::B | Family::C | Family::D => {
            let mut s: Vec<Vec<i32>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            s.push(match id.family {
                Family::B => unit(n, n - 1, 2),
                Family::C => unit(n, n - 1, 4),
                _ => {
                    let mut v = vec![0; n];
                    v[n - 2] = 2;
                    v[n - 1] = 2;
                    v
                }
            });
            (s, n, 1)
        }
        // Hyperplane x1 + x2 + x3 = 0; the divisor normalizes the short root to length 1.
        Family::G => (vec![vec![2, -2, 0], vec![-4, 2, 2]], 3, 2),
        Family::F => (
            vec![
                vec![0, 2, -2, 0],
                vec![0, 0, 2, -2],
                vec![0, 0, 0, 2],
                vec![1, -1, -1, -1],
            ],
            4,
            1,
        ),
        Family::E => {
            let mut s = vec![vec![1, -1, -1, -1, -1, -1, -1, 1], {
                let mut v = vec![0; 8];
                v[0] = 2;
                v[1] = 2;
                v
            }];
            for i in 0..6 {
                s.push(diff(8, i + 1, i));
            }
            s.truncate(n);
            (s, 8, 1)
        }
    }
}

fn dot(a: &[i32], b: &[i32]) -> i64 {
    a.iter().zip(b).map(|(x, y)| *x as i64 * *y as i64).sum()
}

impl RootSystem {
    pub fn new(id: RootSystemId) -> Self {
        let (simple, ambient, scale) = simple_roots(id);
        let n = simple.len();
        let to_dcoords = |f: &[i32]| -> Vec<i32> {
            let mut v = vec![0; ambient];
            for (c, s) in f.iter().zip(&simple) {
                for (x, y) in v.iter_mut().zip(s) {
                    *x += c * y;
                }
            }
            v
        };

        // Grow the positive roots height by height along simple root strings.
        let mut known: HashMap<Vec<i32>, ()> = HashMap::new();
        let mut layers: Vec<Vec<Vec<i32>>> = vec![(0..n).map(|i| unit(n, i, 1)).collect()];
        for f in &layers[0] {
            known.insert(f.clone(), ());
        }
        loop {
            let mut next: Vec<Vec<i32>> = Vec::new();
            for f in layers.last().unwrap() {
                let d = to_dcoords(f);
                for (i, s) in simple.iter().enumerate() {
                    let mut down = 0;
                    let mut g = f.clone();
                    loop {
                        g[i] -= 1;
                        if known.contains_key(&g) {
                            down += 1;
                        } else {
                            break;
                        }
                    }
                    let cartan = 2 * dot(&d, s) / dot(s, s);
                    if down - cartan > 0 {
                        let mut up = f.clone();
                        up[i] += 1;
                        if !known.contains_key(&up) {
                            known.insert(up.clone(), ());
                            next.push(up);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            layers.push(next);
        }

        let mut roots: Vec<(u32, Vec<i32>, Vec<i32>)> = layers
            .into_iter()
            .flatten()
            .map(|f| {
                let h = f.iter().sum::<i32>() as u32;
                (h, to_dcoords(&f), f)
            })
            .collect();
        roots.sort();

        let m = roots.len();
        let mut dcoords = Vec::with_capacity(m);
        let mut fcoords = Vec::with_capacity(m);
        let mut heights = Vec::with_capacity(m);
        for (h, d, f) in roots {
            heights.push(h);
            dcoords.push(d);
            fcoords.push(f);
        }
        let mut lookup = HashMap::with_capacity(2 * m);
        for (i, d) in dcoords.iter().enumerate() {
            lookup.insert(d.clone(), i);
            lookup.insert(d.iter().map(|x| -x).collect(), i + m);
        }
        let fundamentals = (0..n)
            .map(|i| fcoords.iter().position(|f| *f == unit(n, i, 1)).unwrap())
            .collect();

        let mut gram = vec![0; m * m];
        for i in 0..m {
            for j in 0..m {
                gram[i * m + j] = dot(&dcoords[i], &dcoords[j]) / scale;
            }
        }

        let mut sums = vec![NONE; 4 * m * m];
        let signed = |s: usize| -> Vec<i32> {
            if s < m {
                dcoords[s].clone()
            } else {
                dcoords[s - m].iter().map(|x| -x).collect()
            }
        };
        for a in 0..2 * m {
            let da = signed(a);
            for b in 0..2 * m {
                let v: Vec<i32> = da.iter().zip(signed(b)).map(|(x, y)| x + y).collect();
                if let Some(&c) = lookup.get(&v) {
                    sums[a * 2 * m + b] = c as u32;
                }
            }
        }

        RootSystem {
            id,
            ambient,
            coxeter_number: 2 * m / n,
            dcoords,
            fcoords,
            heights,
            fundamentals,
            lookup,
            gram,
            sums,
        }
    }

    pub fn id(&self) -> RootSystemId {
        self.id
    }

    pub fn rank(&self) -> usize {
        self.id.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn num_positive(&self) -> usize {
        self.dcoords.len()
    }

    pub fn coxeter_number(&self) -> usize {
        self.coxeter_number
    }

    pub fn positive(&self, index: usize) -> Root {
        assert!(
            index < self.num_positive(),
            "positive root index out of range"
        );
        self.root_at(index)
    }

    pub fn positives(&self) -> impl Iterator<Item = Root> + '_ {
        (0..self.num_positive()).map(|i| self.root_at(i))
    }

    /// Fundamental roots in Bourbaki numbering.
    pub fn fundamentals(&self) -> Vec<Root> {
        self.fundamentals.iter().map(|&i| self.root_at(i)).collect()
    }

    pub fn check(&self, r: Root) -> Result<()> {
        if r.system != self.id || r.index() >= self.num_positive() {
            Err(Error::ForeignRoot { expected: self.id })
        } else {
            Ok(())
        }
    }

    pub fn dcoords(&self, r: Root) -> Vec<i32> {
        let d = &self.dcoords[r.index()];
        if r.negative {
            d.iter().map(|x| -x).collect()
        } else {
            d.clone()
        }
    }

    /// Coefficients over the fundamental roots (Bourbaki numbering).
    pub fn fcoords(&self, r: Root) -> Vec<i32> {
        let f = &self.fcoords[r.index()];
        if r.negative {
            f.iter().map(|x| -x).collect()
        } else {
            f.clone()
        }
    }

    pub fn height(&self, r: Root) -> i32 {
        let h = self.heights[r.index()] as i32;
        if r.negative {
            -h
        } else {
            h
        }
    }

    /// Four times the Euclidean inner product.
    pub fn inner4(&self, r1: Root, r2: Root) -> Result<i64> {
        self.check(r1)?;
        self.check(r2)?;
        Ok(self.inner_idx(self.signed(r1), self.signed(r2)))
    }

    pub fn is_root(&self, dcoords: &[i32]) -> Option<Root> {
        if dcoords.len() != self.ambient {
            return None;
        }
        self.lookup.get(dcoords).map(|&s| self.root(s))
    }

    /// `r1 + r2` if it is a root.
    pub fn add(&self, r1: Root, r2: Root) -> Result<Option<Root>> {
        self.check(r1)?;
        self.check(r2)?;
        Ok(self
            .sum_idx(self.signed(r1), self.signed(r2))
            .map(|s| self.root(s)))
    }

    /// All decompositions `beta = alpha + gamma` into positive roots, reported
    /// once each with `alpha` earlier in catalog order.
    pub fn singular_set(&self, beta: Root) -> Result<Vec<SingularPair>> {
        self.check(beta)?;
        if !beta.is_positive() {
            return Err(Error::NotPositive);
        }
        Ok(self
            .singular_pairs_idx(beta.index())
            .map(|(a, g)| SingularPair {
                alpha: self.root_at(a),
                gamma: self.root_at(g),
                beta,
            })
            .collect())
    }

    /// `S(beta)` as a set of roots, in catalog order.
    pub fn singular_roots(&self, beta: Root) -> Result<Vec<Root>> {
        let mut v: Vec<Root> = self
            .singular_set(beta)?
            .into_iter()
            .flat_map(|p| [p.alpha, p.gamma])
            .collect();
        v.sort();
        Ok(v)
    }

    /// `beta < alpha`: the difference `alpha - beta` is nonzero with
    /// nonnegative fundamental coefficients.
    pub fn precedes(&self, beta: Root, alpha: Root) -> Result<bool> {
        self.check(beta)?;
        self.check(alpha)?;
        Ok(self.precedes_idx(self.signed(beta), self.signed(alpha)))
    }

    pub fn maximal_elements(&self, roots: &[Root]) -> Result<Vec<Root>> {
        for &r in roots {
            self.check(r)?;
        }
        let idx: Vec<usize> = roots.iter().map(|&r| self.signed(r)).collect();
        Ok(roots
            .iter()
            .zip(&idx)
            .filter(|(_, &b)| !idx.iter().any(|&a| self.precedes_idx(b, a)))
            .map(|(r, _)| *r)
            .collect())
    }

    // ---- signed-index services used by the other modules ----

    pub(crate) fn signed(&self, r: Root) -> usize {
        if r.negative {
            r.index() + self.num_positive()
        } else {
            r.index()
        }
    }

    pub(crate) fn root(&self, s: usize) -> Root {
        let m = self.num_positive();
        Root {
            system: self.id,
            index: (s % m) as u16,
            negative: s >= m,
        }
    }

    fn root_at(&self, i: usize) -> Root {
        Root {
            system: self.id,
            index: i as u16,
            negative: false,
        }
    }

    pub(crate) fn neg_idx(&self, s: usize) -> usize {
        let m = self.num_positive();
        if s < m {
            s + m
        } else {
            s - m
        }
    }

    pub(crate) fn sum_idx(&self, a: usize, b: usize) -> Option<usize> {
        let m2 = 2 * self.num_positive();
        match self.sums[a * m2 + b] {
            NONE => None,
            c => Some(c as usize),
        }
    }

    /// Positive-root sum, restricted to positive inputs.
    pub(crate) fn pos_sum(&self, a: usize, b: usize) -> Option<usize> {
        self.sum_idx(a, b).filter(|&c| c < self.num_positive())
    }

    pub(crate) fn inner_idx(&self, a: usize, b: usize) -> i64 {
        let m = self.num_positive();
        let v = self.gram[(a % m) * m + (b % m)];
        if (a >= m) != (b >= m) {
            -v
        } else {
            v
        }
    }

    pub(crate) fn norm_idx(&self, a: usize) -> i64 {
        self.inner_idx(a, a)
    }

    pub(crate) fn precedes_idx(&self, beta: usize, alpha: usize) -> bool {
        if beta == alpha {
            return false;
        }
        let m = self.num_positive();
        let coeff = |s: usize, k: usize| {
            let c = self.fcoords[s % m][k];
            if s >= m {
                -c
            } else {
                c
            }
        };
        (0..self.rank()).all(|k| coeff(alpha, k) - coeff(beta, k) >= 0)
    }

    pub(crate) fn singular_pairs_idx(
        &self,
        beta: usize,
    ) -> impl Iterator<Item = (usize, usize)> + '_ {
        let m = self.num_positive();
        (0..m).filter_map(move |a| {
            let g = self.sum_idx(beta, a + m)?;
            (g < m && a < g).then_some((a, g))
        })
    }

    pub(crate) fn dcoords_idx(&self, s: usize) -> Vec<i32> {
        self.dcoords(self.root(s))
    }

    pub(crate) fn lookup_idx(&self, v: &[i32]) -> Option<usize> {
        self.lookup.get(v).copied()
    }

    pub(crate) fn raw_dot(&self, a: &[i32], b: &[i32]) -> i64 {
        dot(a, b)
    }
}

pub fn build_root_system(id: RootSystemId) -> RootSystem {
    RootSystem::new(id)
}
