//! The prime field GF(p) for a small odd prime p.
//!
//! Elements are canonical residues in `0..p` stored as `u64`. The field
//! itself is a lightweight descriptor passed by value; all arithmetic is
//! exact.

use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    /// Builds the field, rejecting anything that is not an odd prime.
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(Fp { p })
    }

    #[inline]
    pub fn reduce(self, a: i64) -> u64 {
        let p = self.p as i64;
        (((a % p) + p) % p) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse; `a` must be nonzero mod p.
    pub fn inv(self, a: u64) -> Result<u64> {
        let a = a % self.p;
        if a == 0 {
            return Err(Error::NonUnit("0 in GF(p)".into()));
        }
        Ok(self.pow(a, self.p - 2))
    }

    /// n! mod p (valid input n < p; larger n would vanish anyway).
    pub fn factorial(self, n: u64) -> u64 {
        let mut r = 1;
        for k in 2..=n {
            r = self.mul(r, k % self.p);
        }
        r
    }

    /// Binomial coefficient C(n, k) mod p for small n.
    pub fn binom(self, n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        // n stays below ~2p in every caller, so Lucas is overkill; do it
        // with exact u128 arithmetic and reduce.
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for i in 0..k {
            num *= (n - i) as u128;
            den *= (i + 1) as u128;
        }
        let q = num / den;
        (q % self.p as u128) as u64
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_odd_primes() {
        assert!(Fp::new(2).is_err());
        assert!(Fp::new(4).is_err());
        assert!(Fp::new(1).is_err());
        assert!(Fp::new(3).is_ok());
        assert!(Fp::new(5).is_ok());
    }

    #[test]
    fn field_axioms_small() {
        for p in [3u64, 5, 7] {
            let f = Fp::new(p).unwrap();
            for a in 0..p {
                for b in 0..p {
                    assert_eq!(f.add(a, b), (a + b) % p);
                    assert_eq!(f.mul(a, b), (a * b) % p);
                    assert_eq!(f.add(f.sub(a, b), b), a);
                }
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
            }
        }
    }

    #[test]
    fn binomials() {
        let f = Fp::new(3).unwrap();
        assert_eq!(f.binom(3, 1), 0); // 3 mod 3
        assert_eq!(f.binom(4, 2), 0); // 6 mod 3
        assert_eq!(f.binom(2, 1), 2);
        let f5 = Fp::new(5).unwrap();
        assert_eq!(f5.binom(4, 2), 1); // 6 mod 5
    }
}
