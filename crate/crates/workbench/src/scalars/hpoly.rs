//! Polynomials in the quantization parameter h, in three flavours: the
//! coordinate ring of the chart at 0 (`F_p[h]`), of the chart at infinity
//! (`F_p[h^-1]`), and windowed Laurent elements on the overlap.
//!
//! Every element is kept in canonical form: no leading or trailing zero
//! coefficients are stored, the zero element has an empty coefficient
//! vector. Equality is structural equality of canonical forms. Laurent
//! windows are explicit and operations that would leave them fail with
//! `WindowOverflow` instead of truncating.

use crate::error::{Error, Result};
use crate::scalars::fp::Fp;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chart {
    /// F_p[h], nonnegative powers of h only.
    Zero,
    /// F_p[h^{-1}], nonpositive powers of h only.
    Infinity,
    /// Bounded-window Laurent elements of F_p[h, h^{-1}].
    Laurent { lo: i64, hi: i64 },
}

impl Chart {
    fn bounds(self) -> (i64, i64) {
        match self {
            Chart::Zero => (0, i64::MAX),
            Chart::Infinity => (i64::MIN, 0),
            Chart::Laurent { lo, hi } => (lo, hi),
        }
    }

    /// Chart of the result of a binary operation. Laurent absorbs both
    /// affine charts; two Laurent windows merge into their union.
    pub fn combine(self, other: Chart) -> Result<Chart> {
        use Chart::*;
        Ok(match (self, other) {
            (Zero, Zero) => Zero,
            (Infinity, Infinity) => Infinity,
            (Laurent { lo: a, hi: b }, Laurent { lo: c, hi: d }) => Laurent {
                lo: a.min(c),
                hi: b.max(d),
            },
            (Laurent { lo, hi }, Zero) | (Zero, Laurent { lo, hi }) => Laurent { lo, hi },
            (Laurent { lo, hi }, Infinity) | (Infinity, Laurent { lo, hi }) => Laurent { lo, hi },
            (Zero, Infinity) | (Infinity, Zero) => {
                return Err(Error::ChartMismatch(
                    "cannot mix chart-0 and chart-infinity elements without a Laurent window"
                        .into(),
                ))
            }
        })
    }
}

/// An exact polynomial / Laurent polynomial in h over GF(p).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HPoly {
    pub chart: Chart,
    /// Degree of `coeffs[0]`.
    lo: i64,
    /// Canonical: first and last entries nonzero unless empty.
    coeffs: Vec<u64>,
}

impl HPoly {
    pub fn zero(chart: Chart) -> Self {
        HPoly { chart, lo: 0, coeffs: vec![] }
    }

    pub fn one(chart: Chart) -> Self {
        HPoly { chart, lo: 0, coeffs: vec![1] }
    }

    pub fn constant(fp: Fp, c: u64, chart: Chart) -> Self {
        Self::from_coeffs(fp, chart, 0, vec![c]).expect("degree 0 fits every chart")
    }

    /// h^k in the given chart (checked against the chart's bounds).
    pub fn h_power(chart: Chart, k: i64) -> Result<Self> {
        let (lo, hi) = chart.bounds();
        if k < lo || k > hi {
            return Err(Error::WindowOverflow { degree: k, lo, hi });
        }
        Ok(HPoly { chart, lo: k, coeffs: vec![1] })
    }

    /// Builds from raw coefficients (`coeffs[i]` is the coefficient of
    /// h^(lo+i)), reducing mod p and trimming to canonical form.
    pub fn from_coeffs(fp: Fp, chart: Chart, lo: i64, coeffs: Vec<u64>) -> Result<Self> {
        let mut c: Vec<u64> = coeffs.into_iter().map(|x| x % fp.p).collect();
        let mut lo = lo;
        while let Some(&last) = c.last() {
            if last == 0 {
                c.pop();
            } else {
                break;
            }
        }
        while let Some(&first) = c.first() {
            if first == 0 {
                c.remove(0);
                lo += 1;
            } else {
                break;
            }
        }
        if c.is_empty() {
            return Ok(HPoly::zero(chart));
        }
        let (blo, bhi) = chart.bounds();
        let hi_deg = lo + c.len() as i64 - 1;
        if lo < blo {
            return Err(Error::WindowOverflow { degree: lo, lo: blo, hi: bhi });
        }
        if hi_deg > bhi {
            return Err(Error::WindowOverflow { degree: hi_deg, lo: blo, hi: bhi });
        }
        Ok(HPoly { chart, lo, coeffs: c })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest stored degree (valuation); None for the zero element.
    pub fn val(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.lo)
        }
    }

    /// Highest stored degree; None for the zero element.
    pub fn deg(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.lo + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, k: i64) -> u64 {
        if self.is_zero() || k < self.lo {
            return 0;
        }
        let idx = (k - self.lo) as usize;
        *self.coeffs.get(idx).unwrap_or(&0)
    }

    pub fn iter_terms(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.lo + i as i64, c))
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.lo == 0 && self.coeffs.len() == 1)
    }

    pub fn constant_term(&self) -> u64 {
        self.coeff(0)
    }

    pub fn add(&self, fp: Fp, other: &HPoly) -> Result<HPoly> {
        let chart = self.chart.combine(other.chart)?;
        if self.is_zero() {
            return Ok(HPoly { chart, ..other.clone() });
        }
        if other.is_zero() {
            return Ok(HPoly { chart, ..self.clone() });
        }
        let lo = self.lo.min(other.lo);
        let hi = self.deg().unwrap().max(other.deg().unwrap());
        let mut c = vec![0u64; (hi - lo + 1) as usize];
        for (k, v) in self.iter_terms() {
            c[(k - lo) as usize] = fp.add(c[(k - lo) as usize], v);
        }
        for (k, v) in other.iter_terms() {
            c[(k - lo) as usize] = fp.add(c[(k - lo) as usize], v);
        }
        HPoly::from_coeffs(fp, chart, lo, c)
    }

    pub fn neg(&self, fp: Fp) -> HPoly {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c = fp.neg(*c);
        }
        out
    }

    pub fn sub(&self, fp: Fp, other: &HPoly) -> Result<HPoly> {
        self.add(fp, &other.neg(fp))
    }

    pub fn scale(&self, fp: Fp, c: u64) -> HPoly {
        if c % fp.p == 0 {
            return HPoly::zero(self.chart);
        }
        let mut out = self.clone();
        for x in &mut out.coeffs {
            *x = fp.mul(*x, c);
        }
        out
    }

    pub fn mul(&self, fp: Fp, other: &HPoly) -> Result<HPoly> {
        let chart = self.chart.combine(other.chart)?;
        if self.is_zero() || other.is_zero() {
            return Ok(HPoly::zero(chart));
        }
        let lo = self.lo + other.lo;
        let len = self.coeffs.len() + other.coeffs.len() - 1;
        let mut c = vec![0u64; len];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = fp.add(c[i + j], fp.mul(a, b));
            }
        }
        HPoly::from_coeffs(fp, chart, lo, c)
    }

    /// Multiplication by h^k (checked against the chart window).
    pub fn shift(&self, fp: Fp, k: i64) -> Result<HPoly> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        HPoly::from_coeffs(fp, self.chart, self.lo + k, self.coeffs.clone())
    }

    /// Exact division by h^k; errors unless the valuation allows it.
    pub fn div_h_exact(&self, fp: Fp, k: i64) -> Result<HPoly> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        if self.lo < k {
            return Err(Error::NoSolution(format!(
                "element has valuation {} < {}, not divisible by h^{}",
                self.lo, k, k
            )));
        }
        HPoly::from_coeffs(fp, self.chart, self.lo - k, self.coeffs.clone())
    }

    /// Discards all terms of degree >= m (reduction mod h^m for chart-0
    /// truncated coefficient rings).
    pub fn truncate(&self, fp: Fp, m: usize) -> HPoly {
        let coeffs: Vec<u64> = (0..m as i64).map(|k| self.coeff(k)).collect();
        HPoly::from_coeffs(fp, self.chart, 0, coeffs).expect("truncation shrinks support")
    }

    /// Evaluation h -> c for chart-0 / Laurent-with-c-nonzero data.
    pub fn eval(&self, fp: Fp, c: u64) -> Result<u64> {
        let c = c % fp.p;
        let mut acc = 0u64;
        for (k, v) in self.iter_terms() {
            let factor = if k >= 0 {
                fp.pow(c, k as u64)
            } else {
                // negative powers need c invertible
                fp.pow(fp.inv(c)?, (-k) as u64)
            };
            acc = fp.add(acc, fp.mul(v, factor));
        }
        Ok(acc)
    }

    /// Evaluation at infinity, i.e. h^{-1} -> 0: picks the degree-0 term.
    /// Errors when positive powers of h are present.
    pub fn eval_at_infinity(&self) -> Result<u64> {
        if let Some(d) = self.deg() {
            if d > 0 {
                return Err(Error::ChartMismatch(
                    "element has positive h-powers, undefined at infinity".into(),
                ));
            }
        }
        Ok(self.coeff(0))
    }

    /// Moves the element to another chart, verifying the support fits.
    pub fn rechart(&self, fp: Fp, chart: Chart) -> Result<HPoly> {
        HPoly::from_coeffs(fp, chart, self.lo, self.coeffs.clone())
    }
}

impl std::fmt::Display for HPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.iter_terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "h")?,
                1 => write!(f, "{c}*h")?,
                _ if c == 1 => write!(f, "h^{k}")?,
                _ => write!(f, "{c}*h^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Fp {
        Fp::new(3).unwrap()
    }

    #[test]
    fn poly_identity_examples() {
        let fp = f3();
        // (1 + h)*(1 - h) = 1 - h^2 at p = 3
        let a = HPoly::from_coeffs(fp, Chart::Zero, 0, vec![1, 1]).unwrap();
        let b = HPoly::from_coeffs(fp, Chart::Zero, 0, vec![1, 2]).unwrap();
        let prod = a.mul(fp, &b).unwrap();
        assert_eq!(prod, HPoly::from_coeffs(fp, Chart::Zero, 0, vec![1, 0, 2]).unwrap());
    }

    #[test]
    fn laurent_unit_relation() {
        let fp = f3();
        let w = Chart::Laurent { lo: -4, hi: 4 };
        let h = HPoly::h_power(w, 1).unwrap();
        let hinv = HPoly::h_power(w, -1).unwrap();
        assert_eq!(h.mul(fp, &hinv).unwrap(), HPoly::one(w));
    }

    #[test]
    fn truncated_product_collapses() {
        let fp = f3();
        // (1+2h)*(1+h+h^2) = 1 mod h^3 over GF(3)
        let a = HPoly::from_coeffs(fp, Chart::Zero, 0, vec![1, 2]).unwrap();
        let b = HPoly::from_coeffs(fp, Chart::Zero, 0, vec![1, 1, 1]).unwrap();
        let prod = a.mul(fp, &b).unwrap().truncate(fp, 3);
        assert_eq!(prod, HPoly::one(Chart::Zero));
    }

    #[test]
    fn window_overflow_is_loud() {
        let fp = f3();
        let w = Chart::Laurent { lo: -1, hi: 1 };
        let h = HPoly::h_power(w, 1).unwrap();
        assert!(matches!(
            h.mul(fp, &h),
            Err(Error::WindowOverflow { degree: 2, .. })
        ));
    }

    #[test]
    fn charts_do_not_mix_silently() {
        let fp = f3();
        let a = HPoly::one(Chart::Zero);
        let b = HPoly::one(Chart::Infinity);
        assert!(a.add(fp, &b).is_err());
    }

    #[test]
    fn canonical_forms() {
        let fp = f3();
        let a = HPoly::from_coeffs(fp, Chart::Zero, 0, vec![0, 1, 0, 0]).unwrap();
        assert_eq!(a.val(), Some(1));
        assert_eq!(a.deg(), Some(1));
        let z = HPoly::from_coeffs(fp, Chart::Zero, 2, vec![0, 0]).unwrap();
        assert!(z.is_zero());
        assert_eq!(z, HPoly::zero(Chart::Zero));
    }

    #[test]
    fn eval_and_infinity() {
        let fp = f3();
        let a = HPoly::from_coeffs(fp, Chart::Zero, 0, vec![1, 1]).unwrap(); // 1 + h
        assert_eq!(a.eval(fp, 1).unwrap(), 2);
        assert_eq!(a.eval(fp, 0).unwrap(), 1);
        let b = HPoly::from_coeffs(fp, Chart::Infinity, -1, vec![1, 2]).unwrap(); // h^-1 + 2
        assert_eq!(b.eval_at_infinity().unwrap(), 2);
        assert!(a.eval_at_infinity().is_err());
    }
}
