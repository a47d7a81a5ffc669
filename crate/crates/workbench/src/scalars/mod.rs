//! Exact coefficient arithmetic: the prime field and the h-rings built on it.

pub mod fp;
pub mod hpoly;
pub mod htrunc;

pub use fp::Fp;
pub use hpoly::{Chart, HPoly};
pub use htrunc::HTrunc;

use crate::error::Result;

/// Global parameters every computation is relative to: the odd prime p,
/// the number n of symplectic coordinate pairs, and the h-truncation
/// order m used when working modulo h^m.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Context {
    pub fp: Fp,
    pub n: usize,
    pub m: usize,
}

impl Context {
    /// Default truncation order m = p + 1: the smallest order at which the
    /// restricted-power extraction mod h^p stays visible after one more
    /// correction digit.
    pub fn new(p: u64, n: usize) -> Result<Self> {
        let fp = Fp::new(p)?;
        Ok(Context { fp, n, m: p as usize + 1 })
    }

    pub fn with_m(p: u64, n: usize, m: usize) -> Result<Self> {
        let fp = Fp::new(p)?;
        assert!(m >= 1, "truncation order must be >= 1");
        Ok(Context { fp, n, m })
    }

    pub fn p(&self) -> u64 {
        self.fp.p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_poly(p: u64) -> impl Strategy<Value = HPoly> {
        let fp = Fp::new(p).unwrap();
        proptest::collection::vec(0..p, 0..6)
            .prop_map(move |c| HPoly::from_coeffs(fp, Chart::Zero, 0, c).unwrap())
    }

    proptest! {
        #[test]
        fn ring_axioms_gf3(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
            let fp = Fp::new(3).unwrap();
            let ab_c = a.mul(fp, &b).unwrap().mul(fp, &c).unwrap();
            let a_bc = a.mul(fp, &b.mul(fp, &c).unwrap()).unwrap();
            prop_assert_eq!(&ab_c, &a_bc);
            let lhs = a.mul(fp, &b.add(fp, &c).unwrap()).unwrap();
            let rhs = a.mul(fp, &b).unwrap().add(fp, &a.mul(fp, &c).unwrap()).unwrap();
            prop_assert_eq!(&lhs, &rhs);
            prop_assert_eq!(a.add(fp, &b).unwrap(), b.add(fp, &a).unwrap());
        }

        #[test]
        fn trunc_inverse_two_sided_gf3(c in proptest::collection::vec(0..3u64, 4)) {
            let fp = Fp::new(3).unwrap();
            let mut c = c;
            if c[0] == 0 { c[0] = 1; }
            let a = HTrunc::new(fp, 4, &c);
            let inv = a.invert(fp).unwrap();
            prop_assert_eq!(a.mul(fp, &inv), HTrunc::one(4));
            prop_assert_eq!(inv.mul(fp, &a), HTrunc::one(4));
        }
    }
}
