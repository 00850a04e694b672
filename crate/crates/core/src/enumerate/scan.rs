//! Exhaustive search for the four non-admissible root configurations.

use super::singular_to;
use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};

/// Largest number of positive roots the exhaustive scan accepts.
pub const SCAN_LIMIT: usize = 40;

/// One assignment of positive roots to the named slots of a pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonAdmissibleHit {
    pub pattern_type: u8,
    pub roots: Vec<(&'static str, Root)>,
}

impl NonAdmissibleHit {
    pub fn get(&self, name: &str) -> Option<Root> {
        self.roots.iter().find(|(n, _)| *n == name).map(|(_, r)| *r)
    }
}

pub const TYPE1: [&str; 10] = [
    "eta", "eta1", "eta2", "eta'", "theta", "theta'", "theta1", "theta2", "psi", "psi'",
];
pub const TYPE2: [&str; 9] = [
    "eta", "eta'", "eta1", "eta2", "theta", "theta'", "psi", "psi1", "psi2",
];
pub const TYPE3: [&str; 9] = [
    "eta", "eta1", "eta2", "eta3", "theta", "theta1", "psi", "psi2", "psi3",
];
pub const TYPE4: [&str; 10] = [
    "eta", "eta1", "eta'", "eta2", "theta", "theta1", "theta1'", "psi", "psi'", "psi1'",
];

struct Scanner<'a> {
    rs: &'a RootSystem,
    m: usize,
}

impl Scanner<'_> {
    /// `x - y` when it is a positive root.
    fn sub(&self, x: usize, y: usize) -> Option<usize> {
        self.rs.sum_idx(x, y + self.m).filter(|&c| c < self.m)
    }

    fn sum(&self, x: usize, y: usize) -> Option<usize> {
        self.rs.pos_sum(x, y)
    }

    fn orth(&self, x: usize, ys: &[usize]) -> bool {
        ys.iter().all(|&y| self.rs.inner_idx(x, y) == 0)
    }

    /// Ordered decompositions `eta = theta + psi`.
    fn splits(&self, eta: usize) -> Vec<(usize, usize)> {
        self.rs
            .singular_pairs_idx(eta)
            .flat_map(|(a, g)| [(a, g), (g, a)])
            .collect()
    }

    /// Distinctness and maximality of `eta` (the first root) among the
    /// first four, which are the eta-roots in every pattern.
    fn record(
        &self,
        hits: &mut Vec<NonAdmissibleHit>,
        ty: u8,
        names: &[&'static str],
        roots: &[usize],
    ) {
        let mut sorted = roots.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != roots.len() {
            return;
        }
        let eta = roots[0];
        if roots[1..4].iter().any(|&e| self.rs.precedes_idx(eta, e)) {
            return;
        }
        hits.push(NonAdmissibleHit {
            pattern_type: ty,
            roots: names
                .iter()
                .zip(roots)
                .map(|(n, &r)| (*n, self.rs.positive(r)))
                .collect(),
        });
    }

    fn type1(&self, hits: &mut Vec<NonAdmissibleHit>) {
        for eta in 0..self.m {
            let sp = self.splits(eta);
            for &(th, ps) in &sp {
                for &(thp, psp) in &sp {
                    if thp == th {
                        continue;
                    }
                    for eta1 in (0..self.m).filter(|&e| self.orth(e, &[eta])) {
                        let Some(th1) = self.sub(eta1, ps) else {
                            continue;
                        };
                        let Some(etap) = self.sum(th1, psp) else {
                            continue;
                        };
                        if !self.orth(etap, &[eta, eta1]) {
                            continue;
                        }
                        for eta2 in (0..self.m).filter(|&e| self.orth(e, &[eta, eta1, etap])) {
                            let Some(th2) = self.sub(eta2, ps) else {
                                continue;
                            };
                            self.record(
                                hits,
                                1,
                                &TYPE1,
                                &[eta, eta1, eta2, etap, th, thp, th1, th2, ps, psp],
                            );
                        }
                    }
                }
            }
        }
    }

    fn type2(&self, hits: &mut Vec<NonAdmissibleHit>) {
        for eta in 0..self.m {
            for (th, ps) in self.splits(eta) {
                for etap in (0..self.m).filter(|&e| self.orth(e, &[eta])) {
                    let Some(thp) = self.sub(etap, ps) else {
                        continue;
                    };
                    for eta1 in (0..self.m).filter(|&e| self.orth(e, &[eta, etap])) {
                        let Some(ps1) = self.sub(eta1, th) else {
                            continue;
                        };
                        for eta2 in (0..self.m).filter(|&e| self.orth(e, &[eta, etap, eta1])) {
                            let Some(ps2) = self.sub(eta2, th) else {
                                continue;
                            };
                            self.record(
                                hits,
                                2,
                                &TYPE2,
                                &[eta, etap, eta1, eta2, th, thp, ps, ps1, ps2],
                            );
                        }
                    }
                }
            }
        }
    }

    fn type3(&self, hits: &mut Vec<NonAdmissibleHit>) {
        for eta in 0..self.m {
            for (th, ps) in self.splits(eta) {
                for eta1 in (0..self.m).filter(|&e| self.orth(e, &[eta])) {
                    let Some(th1) = self.sub(eta1, ps) else {
                        continue;
                    };
                    for eta2 in (0..self.m).filter(|&e| self.orth(e, &[eta, eta1])) {
                        let Some(ps2) = self.sub(eta2, th) else {
                            continue;
                        };
                        for eta3 in (0..self.m).filter(|&e| self.orth(e, &[eta, eta1, eta2])) {
                            let Some(ps3) = self.sub(eta3, th1) else {
                                continue;
                            };
                            self.record(
                                hits,
                                3,
                                &TYPE3,
                                &[eta, eta1, eta2, eta3, th, th1, ps, ps2, ps3],
                            );
                        }
                    }
                }
            }
        }
    }

    fn type4(&self, hits: &mut Vec<NonAdmissibleHit>) {
        for eta in 0..self.m {
            let sp = self.splits(eta);
            for &(th, ps) in &sp {
                for &(th1p, ps1p) in &sp {
                    if th1p == th {
                        continue;
                    }
                    for eta1 in (0..self.m).filter(|&e| self.orth(e, &[eta])) {
                        let Some(th1) = self.sub(eta1, ps) else {
                            continue;
                        };
                        let Some(psp) = self.sub(eta1, th1p) else {
                            continue;
                        };
                        let Some(etap) = self.sum(th, psp) else {
                            continue;
                        };
                        if self.sum(th1, ps1p) != Some(etap) || !self.orth(etap, &[eta, eta1]) {
                            continue;
                        }
                        let six = [th, th1, th1p, ps, psp, ps1p];
                        for eta2 in (0..self.m).filter(|&e| self.orth(e, &[eta, eta1, etap])) {
                            if six.iter().any(|&x| singular_to(self.rs, x, eta2)) {
                                self.record(
                                    hits,
                                    4,
                                    &TYPE4,
                                    &[eta, eta1, etap, eta2, th, th1, th1p, ps, psp, ps1p],
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Every assignment of distinct positive roots realizing one of the four
/// patterns, with the eta-roots pairwise orthogonal and `eta` maximal among
/// them. Assignments differing only by a relabeling are reported separately.
pub fn scan_non_admissible(rs: &RootSystem) -> Result<Vec<NonAdmissibleHit>> {
    let m = rs.num_positive();
    if m > SCAN_LIMIT {
        return Err(Error::TooLarge {
            system: rs.id(),
            positives: m,
            limit: SCAN_LIMIT,
        });
    }
    let s = Scanner { rs, m };
    let mut hits = Vec::new();
    s.type1(&mut hits);
    s.type2(&mut hits);
    s.type3(&mut hits);
    s.type4(&mut hits);
    Ok(hits)
}
