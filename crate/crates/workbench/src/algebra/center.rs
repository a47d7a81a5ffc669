//! Centers of the model algebras, computed as the nullspace of the
//! stacked commutator-with-generators map on a bounded monomial window.

use crate::linalg::MatFp;
use crate::scalars::HPoly;

use super::elem::AlgElem;
use super::model::{basis_monomials, AlgebraSpec, CoeffMode, Monomial};

/// Basis of { z : [z, g] = 0 for every generator g } over the coefficient
/// ring. `degree_bound` limits the momentum degree for unbounded models
/// and the h-degree window for polynomial coefficients. The default bound
/// used by callers is p, where the model centers are generated.
pub fn center_basis(spec: &AlgebraSpec, degree_bound: u64) -> Vec<AlgElem> {
    let fp = spec.fp();
    let free_momenta = !spec.momenta_nilpotent && !spec.is_matrix_algebra();
    let window = if free_momenta { Some(degree_bound) } else { None };
    let basis = basis_monomials(spec, window);
    // bigger ambient window: commutators with generators raise the momentum
    // degree by at most one before cancellation
    let ambient = if free_momenta {
        basis_monomials(spec, Some(degree_bound + 1))
    } else {
        basis.clone()
    };

    let hdegs: Vec<i64> = match spec.coeff {
        CoeffMode::Fp => vec![0],
        CoeffMode::Trunc { m } => (0..m as i64).collect(),
        CoeffMode::PolyZero => (0..=degree_bound as i64 + 1).collect(),
        CoeffMode::PolyInf => (-(degree_bound as i64) - 1..=0).collect(),
        CoeffMode::Laurent { lo, hi } => (lo..=hi).collect(),
    };
    // unknown h-degrees exclude the extra slack degree reserved for targets
    let unknown_hdegs: Vec<i64> = match spec.coeff {
        CoeffMode::PolyZero => (0..=degree_bound as i64).collect(),
        CoeffMode::PolyInf => (-(degree_bound as i64)..=0).collect(),
        _ => hdegs.clone(),
    };

    // elements to commute against: generators, or every basis monomial for
    // matrix algebras (which have no distinguished generating set here)
    let test_elems: Vec<AlgElem> = if spec.is_matrix_algebra() {
        basis.iter().map(|m| AlgElem::monomial(*spec, m.clone())).collect()
    } else {
        (0..spec.num_gens()).map(|g| AlgElem::gen(*spec, g)).collect()
    };

    let cols = basis.len() * unknown_hdegs.len();
    let rows_per = ambient.len() * hdegs.len();
    let mut mat = MatFp::zeros(fp, rows_per * test_elems.len(), cols);
    for (bi, mono) in basis.iter().enumerate() {
        for (di, &d) in unknown_hdegs.iter().enumerate() {
            let col = bi * unknown_hdegs.len() + di;
            let unknown = AlgElem::monomial(*spec, mono.clone())
                .scale(&HPoly::h_power(spec.coeff.chart(), d).expect("degree fits chart"))
                .expect("chart consistent");
            for (ti, t) in test_elems.iter().enumerate() {
                let comm = unknown.commutator(t).expect("window commutator");
                let coords = comm.coordinates(&ambient, &hdegs);
                for (r, &v) in coords.iter().enumerate() {
                    mat[(ti * rows_per + r, col)] = v;
                }
            }
        }
    }

    let nullspace = mat.nullspace();
    let to_elem = |v: &[u64]| {
        let mut e = AlgElem::zero(*spec);
        for (bi, mono) in basis.iter().enumerate() {
            for (di, &d) in unknown_hdegs.iter().enumerate() {
                let c = v[bi * unknown_hdegs.len() + di];
                if c != 0 {
                    let mut hp = HPoly::h_power(spec.coeff.chart(), d).unwrap();
                    hp = hp.scale(fp, c);
                    e.add_term(mono.clone(), hp);
                }
            }
        }
        e
    };

    if matches!(spec.coeff, CoeffMode::Fp) {
        return nullspace.iter().map(|v| to_elem(v)).collect();
    }

    // Module basis over F_p[h]-style rings: keep vectors whose reduction
    // at the chart origin grows the rank (the center is h-saturated, so
    // lifts of a basis of N/hN generate N).
    let origin: i64 = 0;
    let mut sel: Vec<AlgElem> = Vec::new();
    let mut reduced_rows: Vec<Vec<u64>> = Vec::new();
    for v in &nullspace {
        let elem = to_elem(v);
        let mut red = vec![0u64; basis.len()];
        for (bi, mono) in basis.iter().enumerate() {
            red[bi] = elem.coeff(mono).coeff(origin);
        }
        if red.iter().all(|&x| x == 0) {
            continue;
        }
        let mut candidate = reduced_rows.clone();
        candidate.push(red.clone());
        let rank_new = MatFp::from_rows(fp, candidate.clone()).rank();
        if rank_new > reduced_rows.len() {
            reduced_rows.push(red);
            sel.push(elem);
        }
    }
    sel
}

/// Convenience: does z commute with every monomial of the window basis?
pub fn commutes_with_window(z: &AlgElem, degree_bound: u64) -> bool {
    let spec = z.spec;
    let free = !spec.momenta_nilpotent && !spec.is_matrix_algebra();
    let window = if free { Some(degree_bound) } else { None };
    for mono in basis_monomials(&spec, window) {
        let m = AlgElem::monomial(spec, mono);
        if !z.commutator(&m).expect("same spec").is_zero() {
            return false;
        }
    }
    true
}

/// The distinguished central element d_i^p of the differential-operator
/// models (theta of the i-th coordinate derivation; its restricted power
/// vanishes on the model).
pub fn theta_momentum(spec: &AlgebraSpec, i: usize) -> AlgElem {
    let mono = {
        let mut e = vec![0u16; spec.num_gens()];
        e[spec.positions + i] = spec.p() as u16;
        Monomial(e)
    };
    AlgElem::monomial(*spec, mono)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::model::ModelKind;
    use crate::scalars::Context;

    #[test]
    fn dy_center_is_one_and_dp() {
        let ctx = Context::new(3, 1).unwrap();
        let spec = AlgebraSpec::new(ModelKind::DY, ctx);
        let basis = center_basis(&spec, 3);
        assert_eq!(basis.len(), 2);
        let one = AlgElem::one(spec);
        let d3 = theta_momentum(&spec, 0);
        assert!(basis.contains(&one));
        assert!(basis.contains(&d3));
        for z in &basis {
            assert!(commutes_with_window(z, 3));
        }
    }

    #[test]
    fn a0_center_is_everything() {
        let ctx = Context::new(3, 1).unwrap();
        let spec = AlgebraSpec::new(ModelKind::A0, ctx);
        assert_eq!(center_basis(&spec, 3).len(), 9);
    }

    #[test]
    fn weyl0_center_is_the_coefficient_ring() {
        let ctx = Context::new(3, 1).unwrap();
        let spec = AlgebraSpec::new(ModelKind::Weyl0, ctx).truncated(4);
        let basis = center_basis(&spec, 3);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], AlgElem::one(spec));
    }

    #[test]
    fn matrix_center_is_scalars() {
        let ctx = Context::new(3, 1).unwrap();
        let spec = AlgebraSpec::new(ModelKind::MatAlg(3), ctx);
        let basis = center_basis(&spec, 1);
        assert_eq!(basis.len(), 1);
    }
}
