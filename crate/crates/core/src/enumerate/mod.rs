//! Orthogonal subsets: enumeration, singular reduction, decomposition into
//! irreducible components, the non-admissible pattern scan and the
//! verification driver.

mod scan;
mod verify;

pub use scan::{scan_non_admissible, NonAdmissibleHit, SCAN_LIMIT};
pub use verify::{
    sample_orthogonal_subsets, verify_m_conditions, verify_main_theorem, verify_sweep,
    SweepOptions, VerifyReport, DEFAULT_SAMPLE_BUDGET,
};

use crate::form::OrthoSubset;
use crate::rootsys::{Root, RootSystem};

/// `compat[i]` has bit `j` set when roots `i` and `j` may share a subset.
fn compatibility(rs: &RootSystem, reduced_only: bool) -> Vec<u128> {
    let m = rs.num_positive();
    assert!(
        m <= 128,
        "bitset enumeration supports at most 128 positive roots"
    );
    (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| {
                    j != i
                        && rs.inner_idx(i, j) == 0
                        && !(reduced_only && (singular_to(rs, i, j) || singular_to(rs, j, i)))
                })
                .fold(0u128, |acc, j| acc | (1 << j))
        })
        .collect()
}

/// `a` is in `S(b)`.
pub(crate) fn singular_to(rs: &RootSystem, a: usize, b: usize) -> bool {
    let m = rs.num_positive();
    rs.sum_idx(b, a + m).is_some_and(|g| g < m)
}

/// Depth-first iterator over orthogonal subsets in lexicographic order of
/// their sorted index lists.
pub struct OrthogonalSubsets<'a> {
    rs: &'a RootSystem,
    compat: Vec<u128>,
    max_size: usize,
    current: Vec<usize>,
    /// `frames[k]`: candidates still to try at depth `k`.
    frames: Vec<u128>,
}

impl Iterator for OrthogonalSubsets<'_> {
    type Item = Vec<Root>;

    fn next(&mut self) -> Option<Vec<Root>> {
        loop {
            let depth = self.current.len();
            let cand = self.frames[depth];
            if depth < self.max_size && cand != 0 {
                let i = cand.trailing_zeros() as usize;
                self.frames[depth] &= !(1u128 << i);
                let rest = self.frames[depth] & self.compat[i];
                self.current.push(i);
                self.frames.push(rest);
                return Some(self.current.iter().map(|&k| self.rs.positive(k)).collect());
            }
            if depth == 0 {
                return None;
            }
            self.current.pop();
            self.frames.pop();
        }
    }
}

/// Every nonempty orthogonal subset of at most `max_size` positive roots,
/// exactly once. With `reduced_only`, subsets containing a root singular for
/// another member are skipped (and so are all their supersets).
pub fn enumerate_orthogonal_subsets(
    rs: &RootSystem,
    max_size: usize,
    reduced_only: bool,
) -> OrthogonalSubsets<'_> {
    let m = rs.num_positive();
    let all = if m == 128 {
        u128::MAX
    } else {
        (1u128 << m) - 1
    };
    OrthogonalSubsets {
        rs,
        compat: compatibility(rs, reduced_only),
        max_size,
        current: Vec::new(),
        frames: vec![all],
    }
}

pub fn reduce_singular(rs: &RootSystem, d: &OrthoSubset) -> OrthoSubset {
    d.reduce_singular(rs)
}

/// An irreducible component of the root system with the part of `D` inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub fundamentals: Vec<Root>,
    pub positives: Vec<Root>,
    pub d: Vec<Root>,
}

pub fn decompose_components(rs: &RootSystem, d: &[Root]) -> Vec<Component> {
    let n = rs.rank();
    let simple: Vec<usize> = rs.fundamentals().iter().map(|r| r.index()).collect();
    // Union-find over the Dynkin diagram.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for i in 0..n {
        for j in 0..i {
            if rs.inner_idx(simple[i], simple[j]) != 0 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let comp: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
    let mut reps = comp.clone();
    reps.sort();
    reps.dedup();
    let label = |r: Root| {
        let k = rs
            .fcoords(r)
            .iter()
            .position(|&c| c != 0)
            .expect("zero root");
        comp[k]
    };
    reps.iter()
        .map(|&c| Component {
            fundamentals: (0..n)
                .filter(|&i| comp[i] == c)
                .map(|i| rs.positive(simple[i]))
                .collect(),
            positives: rs.positives().filter(|&r| label(r) == c).collect(),
            d: d.iter().copied().filter(|&r| label(r) == c).collect(),
        })
        .collect()
}
