//! Chevalley structure constants `N_{ab}` with `[e_a, e_b] = N_{ab} e_{a+b}`.
//!
//! Signs follow the extraspecial-pair convention: for every non-simple
//! positive root `x`, the decomposition `x = r + s` with `r` earliest in the
//! positive-root order gets `N_{rs} = +(p + 1)`, where `p` is the length of
//! the `r`-string through `s` below `s`. Every other constant is forced by
//! the identities
//!
//! * `N_{ba} = -N_{ab}`,
//! * `N_{-a,-b} = -N_{ab}`,
//! * `N_{ab} / |c|^2 = N_{bc} / |a|^2 = N_{ca} / |b|^2` when `a + b + c = 0`,
//! * the four-term identity for `a + b + c + d = 0` with no opposite pair.

use std::sync::Arc;

use crate::error::Result;
use crate::rootsys::{Root, RootSystem};

#[derive(Debug, Clone)]
pub struct ChevalleyTable {
    rs: Arc<RootSystem>,
    /// Dense `2m x 2m` table over signed indices; zero where the sum is not a root.
    n: Vec<i32>,
}

/// Exact `num / den`, panicking if the quotient is not integral.
fn exact_div(num: i64, den: i64) -> i64 {
    assert!(
        den != 0 && num % den == 0,
        "non-integral structure constant {num}/{den}"
    );
    num / den
}

struct Builder<'a> {
    rs: &'a RootSystem,
    m: usize,
    pos: Vec<i32>,
}

impl Builder<'_> {
    fn get_pos(&self, a: usize, b: usize) -> i64 {
        let v = self.pos[a * self.m + b];
        debug_assert!(v != 0, "positive constant used before it was set");
        v as i64
    }

    /// Constant for any pair of roots with a root sum, derived from the
    /// positive-pair table.
    fn any(&self, x: usize, y: usize) -> i64 {
        let rs = self.rs;
        let m = self.m;
        let w = rs.sum_idx(x, y).expect("pair does not sum to a root");
        match (x < m, y < m) {
            (true, true) => self.get_pos(x, y),
            (false, false) => -self.get_pos(x - m, y - m),
            (true, false) => {
                if w < m {
                    // x + y + (-w) = 0, with -y + w = x.
                    -exact_div(rs.norm_idx(w) * self.get_pos(y - m, w), rs.norm_idx(x))
                } else {
                    // z = -w positive, z + x = -y.
                    let z = w - m;
                    exact_div(rs.norm_idx(z) * self.get_pos(z, x), rs.norm_idx(y))
                }
            }
            (false, true) => -self.any(y, x),
        }
    }

    fn set(&mut self, a: usize, b: usize, v: i64) {
        let m = self.m;
        self.pos[a * m + b] = v as i32;
        self.pos[b * m + a] = -v as i32;
    }
}

/// Largest `p` with `s - p*r` a root.
fn string_below(rs: &RootSystem, r: usize, s: usize) -> i64 {
    let neg_r = rs.neg_idx(r);
    let mut p = 0;
    let mut cur = s;
    while let Some(next) = rs.sum_idx(cur, neg_r) {
        p += 1;
        cur = next;
    }
    p
}

pub fn structure_constants(rs: &Arc<RootSystem>) -> ChevalleyTable {
    let m = rs.num_positive();
    let mut b = Builder {
        rs,
        m,
        pos: vec![0; m * m],
    };

    // Positive roots are ordered by height, so every constant the formulas
    // below consume belongs to a sum of strictly smaller height.
    for x in 0..m {
        let pairs: Vec<(usize, usize)> = rs.singular_pairs_idx(x).collect();
        let Some(&(r, s)) = pairs.first() else {
            continue;
        };
        let n_rs = string_below(rs, r, s) + 1;
        b.set(r, s, n_rs);
        for &(a, c) in &pairs[1..] {
            // Four-term identity for (r, s, -a, -c).
            let na = rs.neg_idx(a);
            let nc = rs.neg_idx(c);
            let mut num = 0i64;
            let mut den = 1i64;
            let mut add_term = |t_num: i64, t_den: i64| {
                num = num * t_den + t_num * den;
                den *= t_den;
            };
            if let Some(sa) = rs.sum_idx(s, na) {
                add_term(b.any(s, na) * b.any(r, nc), rs.norm_idx(sa));
            }
            if let Some(ra) = rs.sum_idx(r, na) {
                add_term(b.any(na, r) * b.any(s, nc), rs.norm_idx(ra));
            }
            let v = exact_div(rs.norm_idx(x) * num, n_rs * den);
            b.set(a, c, v);
        }
    }

    let mut n = vec![0i32; 4 * m * m];
    for x in 0..2 * m {
        for y in 0..2 * m {
            if rs.sum_idx(x, y).is_some() {
                n[x * 2 * m + y] = b.any(x, y) as i32;
            }
        }
    }
    ChevalleyTable {
        rs: Arc::clone(rs),
        n,
    }
}

impl ChevalleyTable {
    pub fn new(rs: Arc<RootSystem>) -> Self {
        structure_constants(&rs)
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    /// `N_{alpha,gamma}`, or 0 when `alpha + gamma` is not a root.
    pub fn n_const(&self, alpha: Root, gamma: Root) -> Result<i32> {
        self.rs.check(alpha)?;
        self.rs.check(gamma)?;
        Ok(self.n_idx(self.rs.signed(alpha), self.rs.signed(gamma)))
    }

    pub(crate) fn n_idx(&self, a: usize, b: usize) -> i32 {
        self.n[a * 2 * self.rs.num_positive() + b]
    }

    /// Every stored entry `(alpha, gamma, alpha + gamma, N)`, positives first.
    pub fn entries(&self) -> Vec<(Root, Root, Root, i32)> {
        let rs = &self.rs;
        let m2 = 2 * rs.num_positive();
        let mut out = Vec::new();
        for a in 0..m2 {
            for b in 0..m2 {
                if let Some(c) = rs.sum_idx(a, b) {
                    out.push((rs.root(a), rs.root(b), rs.root(c), self.n_idx(a, b)));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(s: &str) -> ChevalleyTable {
        ChevalleyTable::new(Arc::new(RootSystem::new(s.parse().unwrap())))
    }

    fn by_f(t: &ChevalleyTable, f: &[i32]) -> Root {
        let rs = t.root_system();
        rs.positives().find(|&r| rs.fcoords(r) == f).unwrap()
    }

    #[test]
    fn simply_laced_magnitudes() {
        let t = table("A2");
        let a = t.root_system().fundamentals();
        assert_eq!(t.n_const(a[0], a[1]).unwrap().abs(), 1);
    }

    #[test]
    fn g2_magnitudes() {
        let t = table("G2");
        let a1 = by_f(&t, &[1, 0]);
        assert_eq!(t.n_const(a1, by_f(&t, &[1, 1])).unwrap().abs(), 2);
        assert_eq!(t.n_const(a1, by_f(&t, &[2, 1])).unwrap().abs(), 3);
        assert_eq!(t.n_const(a1, by_f(&t, &[3, 2])).unwrap(), 0);
    }

    #[test]
    fn diagonal_and_antisymmetric_partner() {
        let t = table("B3");
        let rs = t.root_system().clone();
        for r in rs.positives() {
            assert_eq!(t.n_const(r, r).unwrap(), 0);
            assert_eq!(t.n_const(r, r.negated()).unwrap(), 0);
        }
        let a = rs.is_root(&[2, -2, 0]).unwrap();
        let b = rs.is_root(&[0, 2, 2]).unwrap();
        let n = t.n_const(a, b).unwrap();
        assert_eq!(n.abs(), 1);
        assert_eq!(t.n_const(b, a).unwrap(), -n);
    }

    #[test]
    fn extraspecial_pairs_are_positive() {
        let t = table("F4");
        let rs = t.root_system().clone();
        for x in 0..rs.num_positive() {
            if let Some((r, s)) = rs.singular_pairs_idx(x).next() {
                assert!(t.n_idx(r, s) > 0);
            }
        }
    }

    #[test]
    fn reproducible() {
        assert_eq!(table("E6").n, table("E6").n);
    }
}
