//! The truncated coefficient ring F_p[h]/h^m.
//!
//! Elements carry exactly m residues. Units are the elements with nonzero
//! constant term; they invert by the terminating geometric series (h is
//! nilpotent here).

use crate::error::{Error, Result};
use crate::scalars::fp::Fp;
use crate::scalars::hpoly::{Chart, HPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HTrunc {
    pub m: usize,
    /// Always of length exactly m.
    coeffs: Vec<u64>,
}

impl HTrunc {
    pub fn new(fp: Fp, m: usize, coeffs: &[u64]) -> Self {
        assert!(m >= 1, "truncation order must be at least 1");
        let mut c = vec![0u64; m];
        for (i, &x) in coeffs.iter().enumerate().take(m) {
            c[i] = x % fp.p;
        }
        HTrunc { m, coeffs: c }
    }

    pub fn zero(m: usize) -> Self {
        HTrunc { m, coeffs: vec![0; m] }
    }

    pub fn one(m: usize) -> Self {
        let mut c = vec![0; m];
        c[0] = 1;
        HTrunc { m, coeffs: c }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn from_hpoly(fp: Fp, m: usize, p: &HPoly) -> Result<Self> {
        if p.val().map_or(false, |v| v < 0) {
            return Err(Error::ChartMismatch(
                "negative h-powers cannot be truncated into F_p[h]/h^m".into(),
            ));
        }
        let coeffs: Vec<u64> = (0..m as i64).map(|k| p.coeff(k)).collect();
        Ok(HTrunc::new(fp, m, &coeffs))
    }

    pub fn to_hpoly(&self, fp: Fp) -> HPoly {
        HPoly::from_coeffs(fp, Chart::Zero, 0, self.coeffs.clone())
            .expect("nonnegative support always fits chart 0")
    }

    pub fn add(&self, fp: Fp, other: &HTrunc) -> HTrunc {
        assert_eq!(self.m, other.m, "truncation orders differ");
        let coeffs: Vec<u64> = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| fp.add(a, b))
            .collect();
        HTrunc { m: self.m, coeffs }
    }

    pub fn mul(&self, fp: Fp, other: &HTrunc) -> HTrunc {
        assert_eq!(self.m, other.m, "truncation orders differ");
        let mut c = vec![0u64; self.m];
        for i in 0..self.m {
            if self.coeffs[i] == 0 {
                continue;
            }
            for j in 0..self.m - i {
                c[i + j] = fp.add(c[i + j], fp.mul(self.coeffs[i], other.coeffs[j]));
            }
        }
        HTrunc { m: self.m, coeffs: c }
    }

    /// Two-sided inverse mod h^m; requires a nonzero constant term.
    pub fn invert(&self, fp: Fp) -> Result<HTrunc> {
        let c0 = self.coeffs[0];
        if c0 == 0 {
            return Err(Error::NonUnit("constant term is zero mod h".into()));
        }
        let c0_inv = fp.inv(c0)?;
        // self = c0 (1 - n) with n of positive valuation;
        // inverse = c0^{-1} (1 + n + n^2 + ...), a finite sum here.
        let mut n = HTrunc::zero(self.m);
        for k in 1..self.m {
            n.coeffs[k] = fp.neg(fp.mul(self.coeffs[k], c0_inv));
        }
        let mut acc = HTrunc::one(self.m);
        let mut pow = HTrunc::one(self.m);
        for _ in 1..self.m {
            pow = pow.mul(fp, &n);
            acc = acc.add(fp, &pow);
        }
        Ok(acc.mul(fp, &HTrunc::new(fp, self.m, &[c0_inv])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Fp {
        Fp::new(3).unwrap()
    }

    #[test]
    fn invert_one() {
        let fp = f3();
        let one = HTrunc::one(3);
        assert_eq!(one.invert(fp).unwrap(), one);
    }

    #[test]
    fn invert_geometric() {
        let fp = f3();
        // (1 + h)^{-1} = 1 + 2h + h^2 mod h^3 over GF(3)
        let a = HTrunc::new(fp, 3, &[1, 1]);
        let inv = a.invert(fp).unwrap();
        assert_eq!(inv, HTrunc::new(fp, 3, &[1, 2, 1]));
        assert_eq!(a.mul(fp, &inv), HTrunc::one(3));
        assert_eq!(inv.mul(fp, &a), HTrunc::one(3));
    }

    #[test]
    fn invert_non_unit() {
        let fp = f3();
        let h = HTrunc::new(fp, 3, &[0, 1]);
        assert!(matches!(h.invert(fp), Err(Error::NonUnit(_))));
    }

    #[test]
    fn two_sided_inverse_random() {
        let fp = Fp::new(5).unwrap();
        for seed in 0..200u64 {
            let m = 6;
            let mut coeffs = vec![0u64; m];
            let mut s = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            for c in coeffs.iter_mut() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                *c = (s >> 33) % 5;
            }
            if coeffs[0] == 0 {
                coeffs[0] = 1;
            }
            let a = HTrunc::new(fp, m, &coeffs);
            let inv = a.invert(fp).unwrap();
            assert_eq!(a.mul(fp, &inv), HTrunc::one(m));
            assert_eq!(inv.mul(fp, &a), HTrunc::one(m));
        }
    }
}
