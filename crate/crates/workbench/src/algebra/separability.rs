//! The h-separability test for commutative F_p[h]-algebras presented by
//! structure constants on a finite free basis.
//!
//! An h-torsion-free algebra R is h-separable when the map
//! delta: alpha_p(R/h) -> hR/h^pR, a |-> (any lift)^p, vanishes. The test
//! computes alpha_p(R/h) as the kernel of the (F_p-linear) Frobenius,
//! lifts a kernel basis, takes p-th powers mod h^p and reports delta.

use crate::error::{Error, Result};
use crate::linalg::MatFp;
use crate::scalars::{Chart, Fp, HPoly};

/// A commutative algebra, free of finite rank over F_p[h] (or over
/// F_p[h, h^{-1}] when `h_inverted` is set), presented by structure
/// constants: mul[i][j][k] is the e_k-coordinate of e_i * e_j.
#[derive(Clone, Debug)]
pub struct HAlgebraPresentation {
    pub fp: Fp,
    pub dim: usize,
    /// Coordinates of the unit element.
    pub unit: Vec<u64>,
    pub mul: Vec<Vec<Vec<HPoly>>>,
    pub h_inverted: bool,
    /// Declared h-torsion (basis index -> h-power annihilating it);
    /// any entry makes the separability test inapplicable.
    pub torsion: Vec<Option<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Separability {
    Separable,
    /// A class in alpha_p(R/h) whose lifted p-th power is nonzero mod h^p.
    Witness { class: Vec<u64>, delta: Vec<HPoly> },
}

impl HAlgebraPresentation {
    /// The constant algebra C tensor F_p[h] for a commutative F_p-algebra C
    /// given by structure constants.
    pub fn constant_algebra(fp: Fp, dim: usize, unit: Vec<u64>, mul0: Vec<Vec<Vec<u64>>>) -> Self {
        let mul = mul0
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|cs| {
                        cs.into_iter()
                            .map(|c| HPoly::constant(fp, c, Chart::Zero))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        HAlgebraPresentation { fp, dim, unit, mul, h_inverted: false, torsion: vec![None; dim] }
    }

    /// F_p[h^{1/p}] on the basis 1, h^{1/p}, ..., h^{(p-1)/p}.
    pub fn root_of_h(fp: Fp) -> Self {
        let p = fp.p as usize;
        let mut mul = vec![vec![vec![HPoly::zero(Chart::Zero); p]; p]; p];
        for i in 0..p {
            for j in 0..p {
                if i + j < p {
                    mul[i][j][i + j] = HPoly::one(Chart::Zero);
                } else {
                    mul[i][j][i + j - p] = HPoly::h_power(Chart::Zero, 1).unwrap();
                }
            }
        }
        let mut unit = vec![0; p];
        unit[0] = 1;
        HAlgebraPresentation { fp, dim: p, unit, mul, h_inverted: false, torsion: vec![None; p] }
    }

    /// The localization pattern: mark h as inverted (second condition of
    /// separability becomes vacuous).
    pub fn with_h_inverted(mut self) -> Self {
        self.h_inverted = true;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.mul.len() != self.dim {
            return Err(Error::InvalidInput("structure constant table has wrong size".into()));
        }
        for row in &self.mul {
            if row.len() != self.dim || row.iter().any(|c| c.len() != self.dim) {
                return Err(Error::InvalidInput("structure constant table has wrong size".into()));
            }
        }
        // commutativity (the separability notion lives over commutative rings)
        for i in 0..self.dim {
            for j in 0..self.dim {
                if self.mul[i][j] != self.mul[j][i] {
                    return Err(Error::InvalidInput(
                        "presentation is not commutative".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Product of coordinate vectors with HPoly entries, truncated mod h^cap.
    fn mul_vectors(&self, a: &[HPoly], b: &[HPoly], cap: usize) -> Vec<HPoly> {
        let fp = self.fp;
        let mut out = vec![HPoly::zero(Chart::Zero); self.dim];
        for i in 0..self.dim {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if b[j].is_zero() {
                    continue;
                }
                let ab = a[i].mul(fp, &b[j]).expect("chart 0");
                for k in 0..self.dim {
                    let c = self.mul[i][j][k].clone();
                    if c.is_zero() {
                        continue;
                    }
                    let t = ab.mul(fp, &c).expect("chart 0").truncate(fp, cap);
                    out[k] = out[k].add(fp, &t).expect("chart 0").truncate(fp, cap);
                }
            }
        }
        out
    }

    pub fn separability_test(&self) -> Result<Separability> {
        self.validate()?;
        if let Some(idx) = self.torsion.iter().position(|t| t.is_some()) {
            return Err(Error::TorsionDetected(format!(
                "basis element {idx} is annihilated by a power of h"
            )));
        }
        if self.h_inverted {
            // R/h = 0, the delta condition is vacuous
            return Ok(Separability::Separable);
        }
        let fp = self.fp;
        let p = fp.p as usize;

        // Frobenius on R/h as an F_p-linear map (x -> x^p is additive and
        // fixes F_p); columns are e_i^p at h = 0.
        let mut frob = MatFp::zeros(fp, self.dim, self.dim);
        for i in 0..self.dim {
            let mut v: Vec<HPoly> = vec![HPoly::zero(Chart::Zero); self.dim];
            v[i] = HPoly::one(Chart::Zero);
            let mut acc = self.unit_vec();
            for _ in 0..p {
                acc = self.mul_vectors(&acc, &v, 1); // mod h: cap 1
            }
            for k in 0..self.dim {
                frob[(k, i)] = acc[k].constant_term();
            }
        }
        let kernel = frob.nullspace();

        for class in kernel {
            // lift with the same coordinates and cube/p-th power mod h^p
            let lift: Vec<HPoly> = class
                .iter()
                .map(|&c| {
                    if c == 0 {
                        HPoly::zero(Chart::Zero)
                    } else {
                        HPoly::constant(fp, c, Chart::Zero)
                    }
                })
                .collect();
            let mut acc = self.unit_vec();
            for _ in 0..p {
                acc = self.mul_vectors(&acc, &lift, p);
            }
            // delta lands in hR/h^pR; the constant term vanishes since the
            // class was in the Frobenius kernel
            let delta: Vec<HPoly> = acc
                .iter()
                .map(|c| {
                    let mut shifted = c.clone();
                    if shifted.coeff(0) != 0 {
                        panic!("kernel lift has nonzero p-th power mod h");
                    }
                    shifted = shifted.truncate(fp, p);
                    shifted
                })
                .collect();
            if delta.iter().any(|c| !c.is_zero()) {
                return Ok(Separability::Witness { class, delta });
            }
        }
        Ok(Separability::Separable)
    }

    fn unit_vec(&self) -> Vec<HPoly> {
        self.unit
            .iter()
            .map(|&c| {
                if c == 0 {
                    HPoly::zero(Chart::Zero)
                } else {
                    HPoly::constant(self.fp, c, Chart::Zero)
                }
            })
            .collect()
    }
}
