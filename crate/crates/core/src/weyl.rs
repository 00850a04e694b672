//! Reflections, the involution attached to an orthogonal subset, and its
//! length statistics.

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, RootSystemId};

/// A Weyl group element stored as a signed permutation of the positive
/// roots: `image[i]` is the signed index of the image of positive root `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    system: RootSystemId,
    image: Vec<u32>,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement {
            system: rs.id(),
            image: (0..rs.num_positive() as u32).collect(),
        }
    }

    /// The reflection in the hyperplane orthogonal to `alpha`.
    pub fn reflection(rs: &RootSystem, alpha: Root) -> Result<Self> {
        rs.check(alpha)?;
        let image = (0..rs.num_positive())
            .map(|i| reflect_idx(rs, rs.signed(alpha), i).map(|s| s as u32))
            .collect::<Result<_>>()?;
        Ok(WeylElement {
            system: rs.id(),
            image,
        })
    }

    fn m(&self) -> usize {
        self.image.len()
    }

    pub(crate) fn apply_idx(&self, s: usize) -> usize {
        let m = self.m();
        if s < m {
            self.image[s] as usize
        } else {
            let t = self.image[s - m] as usize;
            if t < m {
                t + m
            } else {
                t - m
            }
        }
    }

    pub fn apply(&self, rs: &RootSystem, r: Root) -> Result<Root> {
        rs.check(r)?;
        if rs.id() != self.system {
            return Err(Error::ForeignRoot {
                expected: self.system,
            });
        }
        Ok(rs.root(self.apply_idx(rs.signed(r))))
    }

    /// `self * other`: apply `other` first.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(
            self.system, other.system,
            "composing elements of different Weyl groups"
        );
        WeylElement {
            system: self.system,
            image: other
                .image
                .iter()
                .map(|&s| self.apply_idx(s as usize) as u32)
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &s)| s as usize == i)
    }

    /// Positive roots sent to negative roots, as positive indices.
    pub fn inversions(&self) -> Vec<usize> {
        let m = self.m();
        (0..m).filter(|&i| self.image[i] as usize >= m).collect()
    }

    /// `l(w)`, the number of inversions.
    pub fn length(&self) -> usize {
        let m = self.m();
        self.image.iter().filter(|&&s| s as usize >= m).count()
    }
}

fn reflect_idx(rs: &RootSystem, alpha: usize, v: usize) -> Result<usize> {
    let da = rs.dcoords_idx(alpha);
    let dv = rs.dcoords_idx(v);
    let num = 2 * rs.raw_dot(&dv, &da);
    let den = rs.raw_dot(&da, &da);
    debug_assert_eq!(num % den, 0);
    let k = (num / den) as i32;
    let w: Vec<i32> = dv.iter().zip(&da).map(|(x, a)| x - k * a).collect();
    rs.lookup_idx(&w).ok_or(Error::NotARoot)
}

/// `r_alpha(v) = v - <v, alpha^vee> alpha`.
pub fn reflect(rs: &RootSystem, alpha: Root, v: Root) -> Result<Root> {
    rs.check(alpha)?;
    rs.check(v)?;
    reflect_idx(rs, rs.signed(alpha), rs.signed(v)).map(|s| rs.root(s))
}

pub(crate) fn check_orthogonal(rs: &RootSystem, d: &[Root]) -> Result<()> {
    for (i, &a) in d.iter().enumerate() {
        rs.check(a)?;
        if !a.is_positive() {
            return Err(Error::NotPositive);
        }
        for &b in &d[..i] {
            if a == b {
                return Err(Error::DuplicateRoot(a.index()));
            }
            if rs.inner4(a, b)? != 0 {
                return Err(Error::NotOrthogonal(b.index(), a.index()));
            }
        }
    }
    Ok(())
}

/// `sigma_D`, the product of the (commuting) reflections in `d`.
pub fn involution_of(rs: &RootSystem, d: &[Root]) -> Result<WeylElement> {
    check_orthogonal(rs, d)?;
    let reflections = d
        .iter()
        .map(|&b| WeylElement::reflection(rs, b))
        .collect::<Result<Vec<_>>>()?;
    let forward = reflections
        .iter()
        .fold(WeylElement::identity(rs), |acc, r| acc.compose(r));
    debug_assert_eq!(
        forward,
        reflections
            .iter()
            .rev()
            .fold(WeylElement::identity(rs), |acc, r| acc.compose(r))
    );
    Ok(forward)
}

#[derive(Debug, Clone)]
pub struct InvolutionStats {
    pub sigma: WeylElement,
    /// `l(sigma) = |phi_sigma|`.
    pub l: usize,
    /// `s(sigma) = |D|`.
    pub s: usize,
    /// `l - s`.
    pub bound: usize,
    pub phi_sigma: Vec<Root>,
}

pub fn involution_stats(rs: &RootSystem, d: &[Root]) -> Result<InvolutionStats> {
    let sigma = involution_of(rs, d)?;
    let phi_sigma: Vec<Root> = sigma
        .inversions()
        .into_iter()
        .map(|i| rs.positive(i))
        .collect();
    let l = phi_sigma.len();
    let s = d.len();
    debug_assert!(l >= s);
    Ok(InvolutionStats {
        sigma,
        l,
        s,
        bound: l - s,
        phi_sigma,
    })
}

/// `(n-2) + (n-4) + ...` over the positive terms.
pub fn mu(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::Domain(format!("mu({n}) is undefined for n < 2")));
    }
    Ok((1..=n / 2).map(|k| n - 2 * k).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn by_f(rs: &RootSystem, f: &[i32]) -> Root {
        rs.positives().find(|&r| rs.fcoords(r) == f).unwrap()
    }

    #[test]
    fn reflect_basics() {
        let rs = sys("G2");
        let a1 = by_f(&rs, &[1, 0]);
        let a2 = by_f(&rs, &[0, 1]);
        assert_eq!(reflect(&rs, a1, a1).unwrap(), a1.negated());
        assert_eq!(reflect(&rs, a1, a2).unwrap(), by_f(&rs, &[3, 1]));
        let b3 = sys("B3");
        let e1 = b3.is_root(&[2, 0, 0]).unwrap();
        let e23 = b3.is_root(&[0, 2, 2]).unwrap();
        assert_eq!(reflect(&b3, e1, e23).unwrap(), e23);
    }

    #[test]
    fn simple_reflection() {
        let rs = sys("B3");
        for a in rs.fundamentals() {
            let w = involution_of(&rs, &[a]).unwrap();
            assert_eq!(w.inversions(), vec![a.index()]);
        }
        assert!(involution_of(&rs, &[]).unwrap().is_identity());
    }

    #[test]
    fn longest_element_of_a3() {
        let rs = sys("A3");
        let d = [
            rs.is_root(&[2, 0, 0, -2]).unwrap(),
            rs.is_root(&[0, 2, -2, 0]).unwrap(),
        ];
        let st = involution_stats(&rs, &d).unwrap();
        assert_eq!(st.l, 6);
        assert_eq!(st.phi_sigma.len(), rs.num_positive());
        assert_eq!((st.s, st.bound), (2, 4));
        assert_eq!(st.bound as u64, 2 * mu(4).unwrap());
    }

    #[test]
    fn known_stats() {
        let g2 = sys("G2");
        let st = involution_stats(&g2, &[by_f(&g2, &[1, 0]), by_f(&g2, &[3, 2])]).unwrap();
        assert_eq!((st.l, st.s, st.bound), (6, 2, 4));
        let b3 = sys("B3");
        let d = [
            b3.is_root(&[2, 0, 0]).unwrap(),
            b3.is_root(&[0, 2, 2]).unwrap(),
        ];
        assert_eq!(involution_stats(&b3, &d).unwrap().bound, 6);
    }

    #[test]
    fn non_orthogonal_rejected() {
        let rs = sys("A2");
        let a = rs.fundamentals();
        assert_eq!(
            involution_of(&rs, &a),
            Err(Error::NotOrthogonal(a[0].index(), a[1].index()))
        );
    }

    #[test]
    fn mu_values() {
        assert_eq!(mu(4).unwrap(), 2);
        assert_eq!(mu(2).unwrap(), 0);
        assert_eq!(mu(7).unwrap(), 9);
        assert_eq!(mu(3).unwrap(), 1);
        assert!(mu(1).is_err());
    }
}
