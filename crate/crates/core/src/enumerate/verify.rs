//! The verification driver: orbit dimension against `l(sigma) - s(sigma)`
//! across primes and random scalars, plus the F4 `M`-subset conditions.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{enumerate_orthogonal_subsets, singular_to};
use crate::chevalley::ChevalleyTable;
use crate::error::{Error, Result};
use crate::form::{form_rank, OrthoSubset, PrimeField};
use crate::rootsys::{Family, Root, RootSystem, RootSystemId};
use crate::weyl;

/// Sampled subsets per E-series sweep unless overridden.
pub const DEFAULT_SAMPLE_BUDGET: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub system: RootSystemId,
    /// Positive-root indices of the subset as given.
    pub d: Vec<usize>,
    /// Indices after singular reduction; the bound is computed from these.
    pub reduced_d: Vec<usize>,
    pub primes: Vec<u32>,
    pub xi_samples: usize,
    /// One dimension per (prime, scalar sample), primes outermost.
    pub dims: Vec<usize>,
    pub dim: usize,
    pub bound: usize,
    pub l: usize,
    pub s: usize,
    pub xi_independent: bool,
    pub prime_independent: bool,
    pub bound_ok: bool,
    pub even_ok: bool,
    pub reduced_applied: bool,
    pub seed: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.xi_independent && self.prime_independent && self.bound_ok && self.even_ok
    }
}

fn random_xi(rng: &mut ChaCha8Rng, n: usize, p: u32) -> Vec<u32> {
    (0..n).map(|_| rng.gen_range(1..p)).collect()
}

/// Reduces `d`, then computes the form rank for every prime and for
/// `xi_samples` scalar assignments per prime (the all-ones assignment first,
/// the rest drawn from `seed`).
pub fn verify_main_theorem(
    tbl: &ChevalleyTable,
    d: &[Root],
    primes: &[u32],
    xi_samples: usize,
    seed: u64,
) -> Result<VerifyReport> {
    let rs = tbl.root_system();
    let fields: Vec<PrimeField> = if primes.is_empty() {
        vec![PrimeField::default_for(rs)]
    } else {
        primes
            .iter()
            .map(|&p| PrimeField::new(p))
            .collect::<Result<_>>()?
    };
    for f in &fields {
        f.check_coxeter(rs)?;
    }
    let samples = xi_samples.max(1);
    let skeleton = OrthoSubset::with_unit_xi(rs, d.to_vec(), fields[0])?;
    let reduced = skeleton.reduce_singular(rs);
    let stats = weyl::involution_stats(rs, reduced.roots())?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut dims = Vec::with_capacity(fields.len() * samples);
    let mut xi_independent = true;
    for &field in &fields {
        let first = dims.len();
        for k in 0..samples {
            let xi = if k == 0 {
                vec![1; reduced.len()]
            } else {
                random_xi(&mut rng, reduced.len(), field.p())
            };
            let sub = OrthoSubset::new(rs, reduced.roots().to_vec(), xi, field)?;
            dims.push(form_rank(tbl, &sub)?);
        }
        xi_independent &= dims[first..].iter().all(|&x| x == dims[first]);
    }
    let per_prime_first: Vec<usize> = dims.iter().step_by(samples).copied().collect();
    let dim = dims[0];
    Ok(VerifyReport {
        system: rs.id(),
        d: skeleton.roots().iter().map(|r| r.index()).collect(),
        reduced_d: reduced.roots().iter().map(|r| r.index()).collect(),
        primes: fields.iter().map(|f| f.p()).collect(),
        xi_samples: samples,
        prime_independent: per_prime_first.iter().all(|&x| x == dim),
        bound_ok: dims.iter().all(|&x| x <= stats.bound),
        even_ok: dims.iter().all(|&x| x % 2 == 0),
        dims,
        dim,
        bound: stats.bound,
        l: stats.l,
        s: stats.s,
        xi_independent,
        reduced_applied: !skeleton.is_reduced(),
        seed,
    })
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub max_size: usize,
    /// Empty means the default prime of the system.
    pub primes: Vec<u32>,
    pub xi_samples: usize,
    pub seed: u64,
    /// Sample this many random subsets instead of enumerating all of them.
    /// E-series systems are always sampled, with [`DEFAULT_SAMPLE_BUDGET`]
    /// when this is `None`.
    pub sample_budget: Option<usize>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            max_size: 8,
            primes: Vec::new(),
            xi_samples: 5,
            seed: 0,
            sample_budget: None,
        }
    }
}

/// Per-case seed derived from the global seed and the case index.
fn case_seed(seed: u64, index: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng.next_u64()
}

/// Up to `count` distinct random orthogonal subsets, each grown greedily from
/// a shuffled root order to a uniformly chosen target size.
pub fn sample_orthogonal_subsets(
    rs: &RootSystem,
    max_size: usize,
    count: usize,
    seed: u64,
) -> Vec<Vec<Root>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..rs.num_positive()).collect();
    let mut seen = BTreeSet::new();
    let mut attempts = 0;
    while seen.len() < count && attempts < 8 * count.max(1) {
        attempts += 1;
        let target = rng.gen_range(1..=max_size.max(1));
        order.shuffle(&mut rng);
        let mut d: Vec<usize> = Vec::new();
        for &i in &order {
            if d.len() == target {
                break;
            }
            if d.iter().all(|&j| rs.inner_idx(i, j) == 0) {
                d.push(i);
            }
        }
        d.sort_unstable();
        seen.insert(d);
    }
    seen.into_iter()
        .map(|d| d.into_iter().map(|i| rs.positive(i)).collect())
        .collect()
}

/// Verifies every orthogonal subset of at most `max_size` roots (or a random
/// sample of them), in parallel. Reports come back in enumeration order.
pub fn verify_sweep(tbl: &ChevalleyTable, opts: &SweepOptions) -> Result<Vec<VerifyReport>> {
    let rs = tbl.root_system();
    let budget = match (opts.sample_budget, rs.id().family) {
        (Some(b), _) => Some(b),
        (None, Family::E) => Some(DEFAULT_SAMPLE_BUDGET),
        (None, _) => None,
    };
    let cases: Vec<Vec<Root>> = match budget {
        Some(b) => sample_orthogonal_subsets(rs, opts.max_size, b, opts.seed),
        None => enumerate_orthogonal_subsets(rs, opts.max_size, false).collect(),
    };
    cases
        .par_iter()
        .enumerate()
        .map(|(i, d)| {
            verify_main_theorem(
                tbl,
                d,
                &opts.primes,
                opts.xi_samples,
                case_seed(opts.seed, i),
            )
        })
        .collect()
}

/// Checks the three conditions on a subset `M` of F4 positive roots that make
/// the span of the remaining roots `P` a maximal isotropic subspace:
///
/// 1. each decomposition `a + g = b` with `b` in `D` has exactly one of
///    `a`, `g` in `M`;
/// 2. each `g` in `M` has some `a` in `P` with `a + g` in `D`;
/// 3. for `a` in `P`, the roots `b` of `D` with `b - a` in `M` are at most
///    one, or exactly two `b`, `b~ = a + g~` where (for one of the two
///    labelings) `g~` is in `S(b)`, `a~ = b - g~` is in `P`, and `b` is the
///    only root of `D` hit from `a~`.
pub fn verify_m_conditions(rs: &RootSystem, d: &[Root], m_set: &[Root]) -> Result<bool> {
    let f4 = RootSystemId::new(Family::F, 4)?;
    if rs.id() != f4 {
        return Err(Error::WrongSystem {
            expected: f4,
            got: rs.id(),
        });
    }
    for &r in d.iter().chain(m_set) {
        rs.check(r)?;
        if !r.is_positive() {
            return Err(Error::NotPositive);
        }
    }
    let m = rs.num_positive();
    let mut in_m = vec![false; m];
    for r in m_set {
        in_m[r.index()] = true;
    }
    let d: Vec<usize> = d.iter().map(|r| r.index()).collect();
    let sub = |x: usize, y: usize| rs.sum_idx(x, y + m).filter(|&c| c < m);

    let cond1 = d
        .iter()
        .all(|&b| rs.singular_pairs_idx(b).all(|(a, g)| in_m[a] != in_m[g]));
    let cond2 = (0..m)
        .filter(|&g| in_m[g])
        .all(|g| d.iter().any(|&b| sub(b, g).is_some_and(|a| !in_m[a])));
    let hits = |a: usize| -> Vec<usize> {
        d.iter()
            .copied()
            .filter(|&b| sub(b, a).is_some_and(|g| in_m[g]))
            .collect()
    };
    let cond3 = (0..m).filter(|&a| !in_m[a]).all(|a| {
        let h = hits(a);
        match h.len() {
            0 | 1 => true,
            2 => [(h[0], h[1]), (h[1], h[0])].iter().any(|&(b, bt)| {
                let gt = sub(bt, a).expect("hit without a difference");
                singular_to(rs, gt, b) && sub(b, gt).is_some_and(|at| !in_m[at] && hits(at) == [b])
            }),
            _ => false,
        }
    });
    Ok(cond1 && cond2 && cond3)
}
