//! The canonical form `f = sum xi_b e_b^*` of an orthogonal subset and the
//! skew form `B[a, c] = f([e_a, e_c])` whose rank is the orbit dimension.

pub mod bareiss;
pub mod field;
mod linalg;

pub use bareiss::rational_rank;
pub use field::{is_prime, next_prime, PrimeField};

use crate::chevalley::ChevalleyTable;
use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, RootSystemId};
use crate::weyl;

/// Pairwise orthogonal positive roots with nonzero scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoSubset {
    system: RootSystemId,
    roots: Vec<Root>,
    xi: Vec<u32>,
    field: PrimeField,
    reduced: bool,
}

/// True iff no root of `d` is singular for another root of `d`.
pub(crate) fn is_reduced_idx(rs: &RootSystem, d: &[usize]) -> bool {
    let m = rs.num_positive();
    d.iter().all(|&b| {
        d.iter()
            .all(|&a| a == b || rs.sum_idx(b, a + m).is_none_or(|g| g >= m))
    })
}

impl OrthoSubset {
    /// Validates orthogonality and scalars; roots are stored in catalog order.
    pub fn new(rs: &RootSystem, roots: Vec<Root>, xi: Vec<u32>, field: PrimeField) -> Result<Self> {
        weyl::check_orthogonal(rs, &roots)?;
        if xi.len() != roots.len() {
            return Err(Error::XiMismatch {
                expected: roots.len(),
                got: xi.len(),
            });
        }
        let mut pairs: Vec<(Root, u32)> = roots
            .into_iter()
            .zip(xi)
            .map(|(r, x)| (r, x % field.p()))
            .collect();
        if let Some((r, _)) = pairs.iter().find(|(_, x)| *x == 0) {
            return Err(Error::ZeroXi(r.index()));
        }
        pairs.sort_by_key(|(r, _)| r.index());
        let (roots, xi): (Vec<Root>, Vec<u32>) = pairs.into_iter().unzip();
        let idx: Vec<usize> = roots.iter().map(|r| r.index()).collect();
        Ok(OrthoSubset {
            system: rs.id(),
            reduced: is_reduced_idx(rs, &idx),
            roots,
            xi,
            field,
        })
    }

    pub fn with_unit_xi(rs: &RootSystem, roots: Vec<Root>, field: PrimeField) -> Result<Self> {
        let n = roots.len();
        Self::new(rs, roots, vec![1; n], field)
    }

    pub fn system(&self) -> RootSystemId {
        self.system
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn xi(&self) -> &[u32] {
        &self.xi
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// `S(b) ∩ D = ∅` for every `b` in `D`.
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Repeatedly drops a root singular for another member, together with
    /// its scalar, until the subset is reduced.
    pub fn reduce_singular(&self, rs: &RootSystem) -> OrthoSubset {
        let m = rs.num_positive();
        let mut roots = self.roots.clone();
        let mut xi = self.xi.clone();
        loop {
            let hit = roots.iter().position(|b0| {
                roots.iter().any(|b1| {
                    b1 != b0
                        && rs
                            .sum_idx(b1.index(), b0.index() + m)
                            .is_some_and(|g| g < m)
                })
            });
            match hit {
                Some(k) => {
                    roots.remove(k);
                    xi.remove(k);
                }
                None => break,
            }
        }
        OrthoSubset {
            system: self.system,
            roots,
            xi,
            field: self.field,
            reduced: true,
        }
    }
}

/// A linear functional on `u`, in the basis dual to the positive root vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functional {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl Functional {
    pub fn zero(rs: &RootSystem, field: PrimeField) -> Self {
        Functional {
            field,
            coeffs: vec![0; rs.num_positive()],
        }
    }

    pub fn from_coeffs(field: PrimeField, coeffs: Vec<u32>) -> Self {
        let coeffs = coeffs.into_iter().map(|c| c % field.p()).collect();
        Functional { field, coeffs }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, r: Root) -> u32 {
        if r.is_positive() {
            self.coeffs[r.index()]
        } else {
            0
        }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len())
            .filter(|&i| self.coeffs[i] != 0)
            .collect()
    }
}

pub fn canonical_form(rs: &RootSystem, d: &OrthoSubset) -> Functional {
    let mut f = Functional::zero(rs, d.field);
    for (r, &x) in d.roots.iter().zip(&d.xi) {
        f.coeffs[r.index()] = x;
    }
    f
}

/// `B[a, c] = f(N_{ac} e_{a+c})` over `F_p`, indexed by positive roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormMatrix {
    field: PrimeField,
    n: usize,
    data: Vec<u32>,
}

impl FormMatrix {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.data
            .chunks(self.n.max(1))
            .take(self.n)
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn is_skew(&self) -> bool {
        let f = self.field;
        (0..self.n)
            .all(|i| self.get(i, i) == 0 && (0..i).all(|j| self.get(i, j) == f.neg(self.get(j, i))))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn rank(&self) -> usize {
        linalg::rank(self.rows(), self.field)
    }

    /// Rank of the submatrix on the given rows and columns.
    pub fn submatrix_rank(&self, rows: &[usize], cols: &[usize]) -> usize {
        let sub = rows
            .iter()
            .map(|&i| cols.iter().map(|&j| self.get(i, j)).collect())
            .collect();
        linalg::rank(sub, self.field)
    }

    /// Rank and a basis of the radical, in the positive-root coordinate basis.
    pub fn rank_and_radical(&self) -> (usize, Vec<Vec<u32>>) {
        let radical = linalg::kernel(self.rows(), self.n, self.field);
        (self.n - radical.len(), radical)
    }
}

pub fn rank_and_radical(b: &FormMatrix) -> (usize, Vec<Vec<u32>>) {
    b.rank_and_radical()
}

pub fn form_matrix(tbl: &ChevalleyTable, f: &Functional) -> Result<FormMatrix> {
    let rs = tbl.root_system();
    let field = f.field;
    field.check_coxeter(rs)?;
    let m = rs.num_positive();
    let mut data = vec![0; m * m];
    for a in 0..m {
        for c in 0..m {
            if let Some(s) = rs.pos_sum(a, c) {
                let fx = f.coeffs[s];
                if fx != 0 {
                    let n = field.reduce(tbl.n_idx(a, c) as i64);
                    data[a * m + c] = field.mul(fx, n);
                }
            }
        }
    }
    Ok(FormMatrix { field, n: m, data })
}

/// Integer form matrix for integer scalars, for the rational-rank oracle.
pub fn integer_form_matrix(tbl: &ChevalleyTable, roots: &[Root], xi: &[i64]) -> Vec<Vec<i64>> {
    let rs = tbl.root_system();
    let m = rs.num_positive();
    let mut coeff = vec![0i64; m];
    for (r, &x) in roots.iter().zip(xi) {
        coeff[r.index()] = x;
    }
    (0..m)
        .map(|a| {
            (0..m)
                .map(|c| match rs.pos_sum(a, c) {
                    Some(s) => coeff[s] * tbl.n_idx(a, c) as i64,
                    None => 0,
                })
                .collect()
        })
        .collect()
}

/// Rank of the form matrix of `d` as given, with no singular reduction.
pub fn form_rank(tbl: &ChevalleyTable, d: &OrthoSubset) -> Result<usize> {
    let f = canonical_form(tbl.root_system(), d);
    Ok(form_matrix(tbl, &f)?.rank())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitDimension {
    pub dim: usize,
    /// True when `d` was not reduced and singular roots were dropped first.
    pub reduced_applied: bool,
}

/// Rank of the form matrix of the reduced subset, reducing first when needed.
pub fn orbit_dimension(d: &OrthoSubset, tbl: &ChevalleyTable) -> Result<OrbitDimension> {
    if d.is_reduced() {
        Ok(OrbitDimension {
            dim: form_rank(tbl, d)?,
            reduced_applied: false,
        })
    } else {
        let r = d.reduce_singular(tbl.root_system());
        Ok(OrbitDimension {
            dim: form_rank(tbl, &r)?,
            reduced_applied: true,
        })
    }
}

impl ChevalleyTable {
    pub fn orbit_dimension(&self, d: &OrthoSubset) -> Result<OrbitDimension> {
        orbit_dimension(d, self)
    }
}

/// `[x, y]` in `u` for coefficient vectors over the positive roots.
fn bracket(tbl: &ChevalleyTable, field: PrimeField, x: &[u32], y: &[u32]) -> Vec<u32> {
    let rs = tbl.root_system();
    let m = rs.num_positive();
    let mut out = vec![0; m];
    for a in (0..m).filter(|&a| x[a] != 0) {
        for c in (0..m).filter(|&c| y[c] != 0) {
            if let Some(s) = rs.pos_sum(a, c) {
                let n = field.reduce(tbl.n_idx(a, c) as i64);
                out[s] = field.add(out[s], field.mul(field.mul(x[a], y[c]), n));
            }
        }
    }
    out
}

/// `exp(y).f = f o exp(ad(-y))`.
pub fn coadjoint_act(tbl: &ChevalleyTable, y: &[u32], f: &Functional) -> Result<Functional> {
    let rs = tbl.root_system();
    let field = f.field;
    field.check_coxeter(rs)?;
    let m = rs.num_positive();
    assert_eq!(y.len(), m, "coefficient vector has wrong length");
    let neg_y: Vec<u32> = y.iter().map(|&c| field.neg(c % field.p())).collect();
    let eval = |v: &[u32]| {
        v.iter()
            .zip(&f.coeffs)
            .fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
    };
    let mut out = vec![0; m];
    for (g, slot) in out.iter_mut().enumerate() {
        let mut term = vec![0; m];
        term[g] = 1;
        let mut acc = 0;
        let mut k: u32 = 0;
        let mut inv_fact = 1;
        while term.iter().any(|&c| c != 0) {
            acc = field.add(acc, field.mul(inv_fact, eval(&term)));
            term = bracket(tbl, field, &neg_y, &term);
            k += 1;
            // Nilpotency degree stays below p under the Coxeter bound.
            assert!(k < field.p() || term.iter().all(|&c| c == 0));
            if k < field.p() {
                inv_fact = field.mul(inv_fact, field.inv(k));
            }
        }
        *slot = acc;
    }
    Ok(Functional { field, coeffs: out })
}

/// `f([x, y]) = 0` for all `x, y` in the span of `p`.
pub fn check_isotropic(tbl: &ChevalleyTable, f: &Functional, p: &[Root]) -> Result<bool> {
    let rs = tbl.root_system();
    for &r in p {
        rs.check(r)?;
        if !r.is_positive() {
            return Err(Error::NotPositive);
        }
    }
    let b = form_matrix(tbl, f)?;
    Ok(p.iter()
        .all(|a| p.iter().all(|c| b.get(a.index(), c.index()) == 0)))
}

/// Maximality of an isotropic coordinate subspace, certified by
/// `rank B = 2 codim p`.
pub fn check_maximal_isotropic(tbl: &ChevalleyTable, f: &Functional, p: &[Root]) -> Result<bool> {
    if !check_isotropic(tbl, f, p)? {
        return Err(Error::NotIsotropic);
    }
    let mut idx: Vec<usize> = p.iter().map(|r| r.index()).collect();
    idx.sort_unstable();
    idx.dedup();
    let codim = tbl.root_system().num_positive() - idx.len();
    Ok(form_matrix(tbl, f)?.rank() == 2 * codim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn table(s: &str) -> ChevalleyTable {
        ChevalleyTable::new(Arc::new(RootSystem::new(s.parse().unwrap())))
    }

    fn by_f(rs: &RootSystem, f: &[i32]) -> Root {
        rs.positives().find(|&r| rs.fcoords(r) == f).unwrap()
    }

    fn subset(t: &ChevalleyTable, roots: Vec<Root>, xi: Vec<u32>, p: u32) -> OrthoSubset {
        OrthoSubset::new(t.root_system(), roots, xi, PrimeField::new(p).unwrap()).unwrap()
    }

    #[test]
    fn canonical_form_coeffs() {
        let t = table("G2");
        let rs = t.root_system().clone();
        let d = subset(
            &t,
            vec![by_f(&rs, &[1, 0]), by_f(&rs, &[3, 2])],
            vec![1, 1],
            7,
        );
        let f = canonical_form(&rs, &d);
        assert_eq!(f.support().len(), 2);
        assert_eq!(f.coeff(by_f(&rs, &[1, 0])), 1);
        assert_eq!(f.coeff(by_f(&rs, &[3, 2])), 1);
        let empty = subset(&t, vec![], vec![], 7);
        assert!(canonical_form(&rs, &empty).support().is_empty());

        let b3 = table("B3");
        let rs = b3.root_system().clone();
        let d = subset(
            &b3,
            vec![
                rs.is_root(&[2, 0, 0]).unwrap(),
                rs.is_root(&[0, 2, 2]).unwrap(),
            ],
            vec![2, 3],
            7,
        );
        assert_eq!(canonical_form(&rs, &d).support().len(), 2);
    }

    #[test]
    fn zero_form() {
        let t = table("B3");
        let f = Functional::zero(t.root_system(), PrimeField::new(7).unwrap());
        let b = form_matrix(&t, &f).unwrap();
        assert!(b.is_zero());
        let (rank, rad) = b.rank_and_radical();
        assert_eq!((rank, rad.len()), (0, 9));
    }

    #[test]
    fn known_ranks() {
        let g2 = table("G2");
        let rs = g2.root_system().clone();
        for xi in [[1, 1], [3, 5], [6, 2]] {
            let d = subset(
                &g2,
                vec![by_f(&rs, &[1, 1]), by_f(&rs, &[3, 1])],
                xi.to_vec(),
                7,
            );
            assert_eq!(form_rank(&g2, &d).unwrap(), 2);
        }
        let b3 = table("B3");
        let rs = b3.root_system().clone();
        let d = subset(
            &b3,
            vec![
                rs.is_root(&[2, 0, 0]).unwrap(),
                rs.is_root(&[0, 2, 2]).unwrap(),
            ],
            vec![1, 1],
            7,
        );
        let b = form_matrix(&b3, &canonical_form(&rs, &d)).unwrap();
        assert!(b.is_skew());
        let (rank, rad) = b.rank_and_radical();
        assert_eq!((rank, rad.len()), (4, 5));
        for v in &rad {
            for i in 0..9 {
                let s = (0..9).fold(0, |acc, j| {
                    b.field().add(acc, b.field().mul(b.get(i, j), v[j]))
                });
                assert_eq!(s, 0);
            }
        }
    }

    #[test]
    fn field_too_small() {
        let t = table("F4");
        let f = Functional::zero(t.root_system(), PrimeField::new(11).unwrap());
        assert!(matches!(
            form_matrix(&t, &f),
            Err(Error::FieldTooSmall { .. })
        ));
        assert!(matches!(
            coadjoint_act(&t, &[0; 24], &f),
            Err(Error::FieldTooSmall { .. })
        ));
    }

    #[test]
    fn subset_validation() {
        let t = table("A2");
        let rs = t.root_system().clone();
        let a = rs.fundamentals();
        let p = PrimeField::new(3).unwrap();
        assert!(matches!(
            OrthoSubset::new(&rs, a.clone(), vec![1, 1], p),
            Err(Error::NotOrthogonal(..))
        ));
        assert!(matches!(
            OrthoSubset::new(&rs, vec![a[0]], vec![1, 1], p),
            Err(Error::XiMismatch {
                expected: 1,
                got: 2
            })
        ));
        assert!(matches!(
            OrthoSubset::new(&rs, vec![a[0]], vec![3], p),
            Err(Error::ZeroXi(_))
        ));
        assert!(matches!(
            OrthoSubset::new(&rs, vec![a[0].negated()], vec![1], p),
            Err(Error::NotPositive)
        ));
    }

    #[test]
    fn orbit_dims() {
        let g2 = table("G2");
        let rs = g2.root_system().clone();
        let d = subset(
            &g2,
            vec![by_f(&rs, &[1, 0]), by_f(&rs, &[3, 2])],
            vec![1, 1],
            7,
        );
        assert_eq!(g2.orbit_dimension(&d).unwrap().dim, 4);
        let d = subset(
            &g2,
            vec![by_f(&rs, &[0, 1]), by_f(&rs, &[2, 1])],
            vec![1, 1],
            7,
        );
        assert_eq!(g2.orbit_dimension(&d).unwrap().dim, 2);
        for a in rs.fundamentals() {
            let d = subset(&g2, vec![a], vec![1], 7);
            assert_eq!(g2.orbit_dimension(&d).unwrap().dim, 0);
        }
    }

    #[test]
    fn reduction_fires_in_c2() {
        let t = table("C2");
        let rs = t.root_system().clone();
        let d = subset(
            &t,
            vec![rs.is_root(&[2, -2]).unwrap(), rs.is_root(&[2, 2]).unwrap()],
            vec![1, 1],
            5,
        );
        assert!(!d.is_reduced());
        let r = d.reduce_singular(&rs);
        assert_eq!(r.roots(), &[rs.is_root(&[2, 2]).unwrap()]);
        assert_eq!(r.reduce_singular(&rs), r);
        let od = t.orbit_dimension(&d).unwrap();
        assert!(od.reduced_applied);
        assert_eq!(od.dim, form_rank(&t, &d).unwrap());
    }

    #[test]
    fn coadjoint_identity_and_c2_mechanism() {
        let t = table("C2");
        let rs = t.root_system().clone();
        let field = PrimeField::new(5).unwrap();
        let top = rs.is_root(&[2, 2]).unwrap();
        let long = rs.is_root(&[0, 4]).unwrap();
        let short = rs.is_root(&[2, -2]).unwrap();
        let d = OrthoSubset::new(&rs, vec![top], vec![3], field).unwrap();
        let f = canonical_form(&rs, &d);
        assert_eq!(coadjoint_act(&t, &[0; 4], &f).unwrap(), f);
        let mut y = vec![0; 4];
        y[long.index()] = 2;
        let g = coadjoint_act(&t, &y, &f).unwrap();
        let n = t.n_const(long, short).unwrap() as i64;
        assert_eq!(g.coeff(short), field.reduce(-2 * n * 3));
        assert_ne!(g.coeff(short), 0);
        assert_eq!(g.coeff(top), 3);
    }

    #[test]
    fn isotropic_subspaces_g2() {
        let t = table("G2");
        let rs = t.root_system().clone();
        let field = PrimeField::new(7).unwrap();
        let d = OrthoSubset::with_unit_xi(&rs, vec![by_f(&rs, &[1, 0]), by_f(&rs, &[3, 2])], field)
            .unwrap();
        let f = canonical_form(&rs, &d);
        let m = [by_f(&rs, &[0, 1]), by_f(&rs, &[1, 1])];
        let p: Vec<Root> = rs.positives().filter(|r| !m.contains(r)).collect();
        assert!(check_isotropic(&t, &f, &p).unwrap());
        assert!(check_maximal_isotropic(&t, &f, &p).unwrap());
        assert!(check_isotropic(&t, &f, &[]).unwrap());
        assert!(check_isotropic(&t, &f, &[rs.positive(3)]).unwrap());
        let all: Vec<Root> = rs.positives().collect();
        assert!(!check_isotropic(&t, &f, &all).unwrap());
        assert_eq!(
            check_maximal_isotropic(&t, &f, &all),
            Err(Error::NotIsotropic)
        );

        let d = OrthoSubset::with_unit_xi(&rs, vec![by_f(&rs, &[1, 1]), by_f(&rs, &[3, 1])], field)
            .unwrap();
        let f = canonical_form(&rs, &d);
        let a1 = by_f(&rs, &[1, 0]);
        let p: Vec<Root> = rs.positives().filter(|&r| r != a1).collect();
        assert!(check_maximal_isotropic(&t, &f, &p).unwrap());
        // A smaller isotropic subspace is not maximal.
        assert!(!check_maximal_isotropic(&t, &f, &p[1..]).unwrap());
    }
}
