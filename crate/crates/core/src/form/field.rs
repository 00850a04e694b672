use crate::error::{Error, Result};
use crate::rootsys::RootSystem;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime `>= n`.
pub fn next_prime(n: u64) -> u64 {
    (n.max(2)..).find(|&k| is_prime(k)).unwrap()
}

/// The prime field `F_p`, elements in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if is_prime(p as u64) {
            Ok(PrimeField { p })
        } else {
            Err(Error::NotPrime(p as u64))
        }
    }

    /// Smallest prime not below the Coxeter number of `rs`.
    pub fn default_for(rs: &RootSystem) -> Self {
        PrimeField {
            p: next_prime(rs.coxeter_number() as u64) as u32,
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn check_coxeter(&self, rs: &RootSystem) -> Result<()> {
        if (self.p as usize) < rs.coxeter_number() {
            Err(Error::FieldTooSmall {
                p: self.p,
                coxeter: rs.coxeter_number(),
                system: rs.id(),
            })
        } else {
            Ok(())
        }
    }

    pub fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.sub(0, a)
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p as u64 - 2)
    }
}
