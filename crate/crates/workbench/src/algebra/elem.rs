//! Normal-form elements of the model algebras and their arithmetic.
//!
//! An element is a finitely supported map from ordered monomials x^I y^J
//! (positions leftmost) to coefficients. Multiplication rewrites products
//! into normal form with the per-pair commutation rule
//!
//!     mom_i^j pos_i^k = sum_t  t! C(j,t) C(k,t) c^t  pos_i^{k-t} mom_i^{j-t}
//!
//! where c = [mom_i, pos_i] is the spec's commutator scalar, and then
//! kills monomials that violate a nilpotency bound. Distinct index pairs
//! commute, so the rewriting factorizes over the pairs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalars::{Fp, HPoly};

use super::model::{basis_monomials, AlgebraSpec, CoeffMode, CommVal, Monomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgElem {
    pub spec: AlgebraSpec,
    pub terms: BTreeMap<Monomial, HPoly>,
}

impl AlgElem {
    pub fn zero(spec: AlgebraSpec) -> Self {
        AlgElem { spec, terms: BTreeMap::new() }
    }

    pub fn one(spec: AlgebraSpec) -> Self {
        if spec.is_matrix_algebra() {
            let k = spec.positions;
            let fp = spec.fp();
            let mut terms = BTreeMap::new();
            for i in 0..k {
                terms.insert(Monomial::matrix_unit(i, i), HPoly::constant(fp, 1, spec.coeff.chart()));
            }
            return AlgElem { spec, terms };
        }
        let mut e = AlgElem::zero(spec);
        e.add_term(Monomial::unit(&spec), HPoly::one(spec.coeff.chart()));
        e
    }

    pub fn gen(spec: AlgebraSpec, slot: usize) -> Self {
        let mut e = AlgElem::zero(spec);
        e.add_term(Monomial::gen(&spec, slot), HPoly::one(spec.coeff.chart()));
        e
    }

    pub fn monomial(spec: AlgebraSpec, mono: Monomial) -> Self {
        let mut e = AlgElem::zero(spec);
        e.add_term(mono, HPoly::one(spec.coeff.chart()));
        e
    }

    pub fn scalar(spec: AlgebraSpec, c: u64) -> Self {
        AlgElem::one(spec).scale_fp(c)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, HPoly)>>(
        spec: AlgebraSpec,
        it: I,
    ) -> Self {
        let mut e = AlgElem::zero(spec);
        for (m, c) in it {
            e.add_term(m, c);
        }
        e
    }

    /// Reduction a coefficient must undergo for this spec's ring.
    fn reduce_coeff(spec: &AlgebraSpec, c: HPoly) -> HPoly {
        match spec.coeff {
            CoeffMode::Trunc { m } => c.truncate(spec.fp(), m),
            _ => c,
        }
    }

    /// Adds `c * mono` in place, keeping canonical form.
    pub fn add_term(&mut self, mono: Monomial, c: HPoly) {
        assert!(
            mono.respects_bounds(&self.spec),
            "monomial violates the spec's exponent bounds"
        );
        let fp = self.spec.fp();
        let c = Self::reduce_coeff(&self.spec, c);
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&mono) {
            None => {
                self.terms.insert(mono, c);
            }
            Some(old) => {
                let s = old.add(fp, &c).expect("coefficients share a chart");
                let s = Self::reduce_coeff(&self.spec, s);
                if !s.is_zero() {
                    self.terms.insert(mono, s);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &Monomial) -> HPoly {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(|| HPoly::zero(self.spec.coeff.chart()))
    }

    pub fn add(&self, other: &AlgElem) -> AlgElem {
        assert_eq!(self.spec, other.spec, "algebra mismatch in add");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> AlgElem {
        let fp = self.spec.fp();
        let mut out = AlgElem::zero(self.spec);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c.neg(fp));
        }
        out
    }

    pub fn sub(&self, other: &AlgElem) -> AlgElem {
        self.add(&other.neg())
    }

    pub fn scale_fp(&self, c: u64) -> AlgElem {
        let fp = self.spec.fp();
        if c % fp.p == 0 {
            return AlgElem::zero(self.spec);
        }
        let mut out = AlgElem::zero(self.spec);
        for (m, co) in &self.terms {
            out.terms.insert(m.clone(), co.scale(fp, c));
        }
        out
    }

    pub fn scale(&self, c: &HPoly) -> Result<AlgElem> {
        let fp = self.spec.fp();
        let mut out = AlgElem::zero(self.spec);
        for (m, co) in &self.terms {
            out.add_term(m.clone(), co.mul(fp, c)?);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &AlgElem) -> Result<AlgElem> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch(format!(
                "{} vs {}",
                self.spec.kind_str(),
                other.spec.kind_str()
            )));
        }
        let spec = self.spec;
        let fp = spec.fp();
        let mut out = AlgElem::zero(spec);
        if spec.is_matrix_algebra() {
            for (m1, c1) in &self.terms {
                for (m2, c2) in &other.terms {
                    if m1.0[1] == m2.0[0] {
                        let c = c1.mul(fp, c2)?;
                        out.add_term(Monomial(vec![m1.0[0], m2.0[1]]), c);
                    }
                }
            }
            return Ok(out);
        }
        let comm = spec.comm_poly(fp);
        let pos = spec.positions;
        let mom = spec.momenta;
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let base = c1.mul(fp, c2)?;
                // Factorized reordering over the pairs. t[i] counts how many
                // momentum/position swaps fire at pair i.
                let mut tmax = Vec::with_capacity(mom);
                for i in 0..mom {
                    let j = m1.0[pos + i] as u64; // momenta of the left factor
                    let k = m2.0[i] as u64; // positions of the right factor
                    tmax.push(j.min(k));
                }
                let mut t = vec![0u64; mom];
                loop {
                    // scalar factor and total swap count for this t-vector
                    let mut scalar = 1u64;
                    let mut tot = 0u64;
                    for i in 0..mom {
                        let j = m1.0[pos + i] as u64;
                        let k = m2.0[i] as u64;
                        let ti = t[i];
                        tot += ti;
                        let f = fp.mul(
                            fp.factorial(ti),
                            fp.mul(fp.binom(j, ti), fp.binom(k, ti)),
                        );
                        scalar = fp.mul(scalar, f);
                    }
                    if scalar != 0 && (tot == 0 || spec.comm != CommVal::Zero) {
                        // assemble the resulting monomial
                        let mut exps = vec![0u16; pos + mom];
                        let mut dead = false;
                        for s in 0..pos {
                            let e = m1.0[s] as u64 + m2.0[s] as u64
                                - if s < mom { t[s] } else { 0 };
                            if let Some(b) = spec.exp_bound(s) {
                                if e >= b {
                                    dead = true;
                                    break;
                                }
                            }
                            exps[s] = e as u16;
                        }
                        if !dead {
                            for i in 0..mom {
                                let e = m1.0[pos + i] as u64 + m2.0[pos + i] as u64 - t[i];
                                if let Some(b) = spec.exp_bound(pos + i) {
                                    if e >= b {
                                        dead = true;
                                        break;
                                    }
                                }
                                exps[pos + i] = e as u16;
                            }
                        }
                        if !dead {
                            let mut c = base.scale(fp, scalar);
                            for _ in 0..tot {
                                c = c.mul(fp, &comm)?;
                            }
                            out.add_term(Monomial(exps), c);
                        }
                    }
                    // odometer over the t-vector
                    let mut i = 0;
                    loop {
                        if i == mom {
                            break;
                        }
                        t[i] += 1;
                        if t[i] <= tmax[i] {
                            break;
                        }
                        t[i] = 0;
                        i += 1;
                    }
                    if i == mom {
                        break;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, other: &AlgElem) -> Result<AlgElem> {
        Ok(self.mul(other)?.sub(&other.mul(self)?))
    }

    pub fn pow(&self, k: u64) -> Result<AlgElem> {
        let mut acc = AlgElem::one(self.spec);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// a^p for the spec's prime; the restricted power of the associative
    /// algebra seen as a restricted Lie algebra.
    pub fn pth_power(&self) -> Result<AlgElem> {
        self.pow(self.spec.p())
    }

    /// The scalar part: coefficient of the unit monomial, evaluated at the
    /// origin of the coefficient chart (h = 0, or h^-1 = 0 at infinity).
    pub fn scalar_part(&self) -> u64 {
        if self.spec.is_matrix_algebra() {
            panic!("scalar_part is not defined for matrix algebras");
        }
        self.coeff(&Monomial::unit(&self.spec)).constant_term()
    }

    /// Evaluation of all generators at 0 composed with h -> 0.
    pub fn ev0(&self) -> u64 {
        self.scalar_part()
    }

    /// Two-sided inverse by inverting the scalar part and summing the
    /// terminating nilpotent-correction series. The augmentation ideal
    /// must actually be nilpotent (Fp or Trunc coefficients, or an
    /// h-free polynomial element).
    pub fn invert_unit(&self) -> Result<AlgElem> {
        let spec = self.spec;
        let fp = spec.fp();
        let s = self.scalar_part();
        if s == 0 {
            return Err(Error::NonUnit(
                "scalar part (generators and h evaluated at 0) vanishes".into(),
            ));
        }
        let s_inv = fp.inv(s)?;
        // self = s (1 - n) with n in the augmentation ideal
        let n_elem = AlgElem::one(spec).sub(&self.scale_fp(s_inv));
        let mut acc = AlgElem::one(spec);
        let mut pow = AlgElem::one(spec);
        // nilpotency bound: generator degrees are capped and h is nilpotent
        // in Trunc mode; a safe iteration cap follows.
        let gen_cap = spec.num_gens() as u64 * (spec.p() - 1);
        let h_cap = match spec.coeff {
            CoeffMode::Trunc { m } => m as u64,
            _ => 1,
        };
        let cap = gen_cap + h_cap + 1;
        for _ in 0..cap {
            pow = pow.mul(&n_elem)?;
            if pow.is_zero() {
                break;
            }
            acc = acc.add(&pow);
        }
        if !pow.is_zero() {
            return Err(Error::NonUnit(
                "correction series did not terminate; element is not a unit here".into(),
            ));
        }
        let inv = acc.scale_fp(s_inv);
        debug_assert_eq!(inv.mul(self).unwrap(), AlgElem::one(spec));
        Ok(inv)
    }

    /// Coordinates of the element over GF(p): one slot per (basis monomial,
    /// h-degree) pair. `hdegs` lists which h-degrees are tracked.
    pub fn coordinates(&self, basis: &[Monomial], hdegs: &[i64]) -> Vec<u64> {
        let index: BTreeMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut out = vec![0u64; basis.len() * hdegs.len()];
        for (m, c) in &self.terms {
            let mi = *index.get(m).expect("monomial outside the coordinate basis");
            for (pos, &d) in hdegs.iter().enumerate() {
                out[mi * hdegs.len() + pos] = c.coeff(d);
            }
            // every stored degree must be tracked
            for (d, v) in c.iter_terms() {
                if v != 0 {
                    assert!(hdegs.contains(&d), "untracked h-degree {d} in coordinates");
                }
            }
        }
        out
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let ms = m.display(&self.spec);
            let cs = format!("{c}");
            if cs == "1" {
                parts.push(ms);
            } else if ms == "1" {
                parts.push(format!("({cs})"));
            } else {
                parts.push(format!("({cs})*{ms}"));
            }
        }
        parts.join(" + ")
    }
}

impl std::fmt::Display for AlgElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}

/// Full monomial basis of a finite spec (panics on free momenta).
pub fn finite_basis(spec: &AlgebraSpec) -> Vec<Monomial> {
    basis_monomials(spec, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::model::ModelKind;
    use crate::scalars::Context;

    fn weyl0_31() -> AlgebraSpec {
        AlgebraSpec::new(ModelKind::Weyl0, Context::new(3, 1).unwrap())
    }

    fn a0_31() -> AlgebraSpec {
        AlgebraSpec::new(ModelKind::A0, Context::new(3, 1).unwrap())
    }

    #[test]
    fn weyl_rewrite_rule() {
        // y * x = x y + h in the chart-0 reduced Weyl algebra
        let s = weyl0_31();
        let x = AlgElem::gen(s, 0);
        let y = AlgElem::gen(s, 1);
        let prod = y.mul(&x).unwrap();
        let mut expected = AlgElem::zero(s);
        expected.add_term(Monomial(vec![1, 1]), HPoly::one(s.coeff.chart()));
        expected.add_term(
            Monomial(vec![0, 0]),
            HPoly::h_power(s.coeff.chart(), 1).unwrap(),
        );
        assert_eq!(prod, expected);
    }

    #[test]
    fn nilpotency() {
        let s = a0_31();
        let x = AlgElem::gen(s, 0);
        let x2 = x.mul(&x).unwrap();
        assert!(x.mul(&x2).unwrap().is_zero());
    }

    #[test]
    fn xy_squared() {
        // (xy)*(xy) = x^2 y^2 + h x y at p = 3, n = 1
        let s = weyl0_31();
        let x = AlgElem::gen(s, 0);
        let y = AlgElem::gen(s, 1);
        let xy = x.mul(&y).unwrap();
        let sq = xy.mul(&xy).unwrap();
        let mut expected = AlgElem::zero(s);
        expected.add_term(Monomial(vec![2, 2]), HPoly::one(s.coeff.chart()));
        expected.add_term(Monomial(vec![1, 1]), HPoly::h_power(s.coeff.chart(), 1).unwrap());
        assert_eq!(sq, expected);
    }

    #[test]
    fn pth_powers_pinned() {
        let s = weyl0_31();
        let x = AlgElem::gen(s, 0);
        let y = AlgElem::gen(s, 1);
        // (x + y)^3 = 0: the commutator is central so Jacobson terms vanish
        assert!(x.add(&y).pth_power().unwrap().is_zero());
        // (xy)^3 = h^2 xy
        let xy = x.mul(&y).unwrap();
        let cube = xy.pth_power().unwrap();
        let mut expected = AlgElem::zero(s);
        expected.add_term(Monomial(vec![1, 1]), HPoly::h_power(s.coeff.chart(), 2).unwrap());
        assert_eq!(cube, expected);
    }

    #[test]
    fn matrix_algebra_mul() {
        let ctx = Context::new(3, 1).unwrap();
        let s = AlgebraSpec::new(ModelKind::MatAlg(2), ctx);
        let e12 = AlgElem::monomial(s, Monomial::matrix_unit(0, 1));
        let e21 = AlgElem::monomial(s, Monomial::matrix_unit(1, 0));
        let prod = e12.mul(&e21).unwrap();
        assert_eq!(prod, AlgElem::monomial(s, Monomial::matrix_unit(0, 0)));
        assert!(e12.mul(&e12).unwrap().is_zero());
        let one = AlgElem::one(s);
        assert_eq!(one.mul(&e12).unwrap(), e12);
    }

    #[test]
    fn invert_unit_examples() {
        let s = a0_31();
        let one = AlgElem::one(s);
        let x = AlgElem::gen(s, 0);
        // (1+x)^{-1} = 1 + 2x + x^2 at p = 3
        let u = one.add(&x);
        let inv = u.invert_unit().unwrap();
        let expected = one
            .add(&x.scale_fp(2))
            .add(&x.mul(&x).unwrap());
        assert_eq!(inv, expected);
        assert_eq!(u.mul(&inv).unwrap(), one);
        assert_eq!(inv.mul(&u).unwrap(), one);
        assert!(x.invert_unit().is_err());
        assert_eq!(one.invert_unit().unwrap(), one);
    }

    #[test]
    fn associativity_random() {
        // exact associativity on pseudo-random triples in Weyl0 mod h^4
        let s = weyl0_31().truncated(4);
        let basis = finite_basis(&s);
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut rnd = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        for _ in 0..30 {
            let mut mk = || {
                let mut e = AlgElem::zero(s);
                for m in &basis {
                    let c = HPoly::from_coeffs(
                        s.fp(),
                        s.coeff.chart(),
                        0,
                        vec![rnd() % 3, rnd() % 3, rnd() % 3, rnd() % 3],
                    )
                    .unwrap();
                    e.add_term(m.clone(), c);
                }
                e
            };
            let (a, b, c) = (mk(), mk(), mk());
            let left = a.mul(&b).unwrap().mul(&c).unwrap();
            let right = a.mul(&b.mul(&c).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }
}
