//! Jacobson's sum formula: (a+b)^p = a^p + b^p + sum_i L_i(a,b), where
//! L_i(a,b) is i^{-1} times the coefficient of t^{i-1} in ad(a+tb)^{p-1}(b).
//!
//! The extraction adjoins a formal variable t and expands the iterated
//! adjoint there; the same machinery runs over any bracket (commutator or
//! Poisson), so the restricted Poisson axioms reuse it.

use crate::error::Result;
use crate::scalars::Fp;

use super::elem::AlgElem;

/// The L_1 .. L_{p-1} for an arbitrary bilinear bracket.
pub fn jacobson_terms_with<F>(fp: Fp, p: u64, a: &AlgElem, b: &AlgElem, bracket: F) -> Result<Vec<AlgElem>>
where
    F: Fn(&AlgElem, &AlgElem) -> Result<AlgElem>,
{
    let spec = a.spec;
    // v[k] = coefficient of t^k in ad(a+tb)^j (b); degree never exceeds p-1
    let mut v: Vec<AlgElem> = vec![AlgElem::zero(spec); p as usize];
    v[0] = b.clone();
    for _ in 0..(p - 1) {
        let mut next = vec![AlgElem::zero(spec); p as usize];
        for (k, vk) in v.iter().enumerate() {
            if vk.is_zero() {
                continue;
            }
            let from_a = bracket(a, vk)?;
            next[k] = next[k].add(&from_a);
            if k + 1 < p as usize {
                let from_b = bracket(b, vk)?;
                next[k + 1] = next[k + 1].add(&from_b);
            }
        }
        v = next;
    }
    let mut out = Vec::with_capacity(p as usize - 1);
    for i in 1..p {
        let inv_i = fp.inv(i)?;
        out.push(v[(i - 1) as usize].scale_fp(inv_i));
    }
    Ok(out)
}

/// Jacobson terms for the associative commutator bracket.
pub fn jacobson_terms(a: &AlgElem, b: &AlgElem) -> Result<Vec<AlgElem>> {
    let fp = a.spec.fp();
    let p = a.spec.p();
    if a.spec != b.spec {
        return Err(crate::error::Error::SpecMismatch("jacobson_terms".into()));
    }
    jacobson_terms_with(fp, p, a, b, |x, y| x.commutator(y))
}

/// Checks the identity (a+b)^p = a^p + b^p + sum L_i(a,b) exactly.
pub fn jacobson_identity_holds(a: &AlgElem, b: &AlgElem) -> Result<bool> {
    let lhs = a.add(b).pth_power()?;
    let mut rhs = a.pth_power()?.add(&b.pth_power()?);
    for term in jacobson_terms(a, b)? {
        rhs = rhs.add(&term);
    }
    Ok(lhs == rhs)
}

/// ad(a)^p(b) == ad(a^p)(b), the restricted-power compatibility of the
/// commutator bracket; both sides are computed independently.
pub fn adjoint_power_check(a: &AlgElem, b: &AlgElem) -> Result<bool> {
    let p = a.spec.p();
    let mut lhs = b.clone();
    for _ in 0..p {
        lhs = a.commutator(&lhs)?;
    }
    let rhs = a.pth_power()?.commutator(b)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::model::{AlgebraSpec, ModelKind, Monomial};
    use crate::scalars::Context;

    #[test]
    fn mat2_f3_pinned() {
        // a = E12, b = E21: L1 = E12, L2 = E21, and (a+b)^3 - a^3 - b^3 = a + b
        let ctx = Context::new(3, 1).unwrap();
        let s = AlgebraSpec::new(ModelKind::MatAlg(2), ctx);
        let a = AlgElem::monomial(s, Monomial::matrix_unit(0, 1));
        let b = AlgElem::monomial(s, Monomial::matrix_unit(1, 0));
        let terms = jacobson_terms(&a, &b).unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0], a);
        assert_eq!(terms[1], b);
        let diff = a
            .add(&b)
            .pth_power()
            .unwrap()
            .sub(&a.pth_power().unwrap())
            .sub(&b.pth_power().unwrap());
        assert_eq!(diff, a.add(&b));
        assert!(jacobson_identity_holds(&a, &b).unwrap());
    }

    #[test]
    fn commuting_elements_give_zero_terms() {
        let ctx = Context::new(3, 1).unwrap();
        let s = AlgebraSpec::new(ModelKind::A0, ctx);
        let a = AlgElem::gen(s, 0);
        let b = AlgElem::gen(s, 1);
        for t in jacobson_terms(&a, &b).unwrap() {
            assert!(t.is_zero());
        }
    }

    #[test]
    fn weyl_generators() {
        // [y, x] = h is central, so all L_i vanish and (x+y)^p = 0
        let ctx = Context::new(3, 1).unwrap();
        let s = AlgebraSpec::new(ModelKind::Weyl0, ctx);
        let x = AlgElem::gen(s, 0);
        let y = AlgElem::gen(s, 1);
        for t in jacobson_terms(&x, &y).unwrap() {
            assert!(t.is_zero());
        }
        assert!(x.add(&y).pth_power().unwrap().is_zero());
        assert!(jacobson_identity_holds(&x, &y).unwrap());
    }

    #[test]
    fn adjoint_power_examples() {
        let ctx = Context::new(3, 1).unwrap();
        let s = AlgebraSpec::new(ModelKind::MatAlg(2), ctx);
        let a = AlgElem::monomial(s, Monomial::matrix_unit(0, 1));
        let b = AlgElem::monomial(s, Monomial::matrix_unit(1, 0));
        assert!(adjoint_power_check(&a, &b).unwrap());
        let one = AlgElem::one(s);
        assert!(adjoint_power_check(&one, &b).unwrap());
    }
}
