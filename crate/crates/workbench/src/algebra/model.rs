//! The family of model algebras: the Frobenius-neighborhood algebra A0,
//! the reduced Weyl algebra charts over F_p[h] and F_p[h^-1], truncated
//! differential operators, their 4n-generator variants, and full matrix
//! algebras (used as a reference restricted Lie algebra).
//!
//! A spec pins down generators, relations and the coefficient ring; the
//! element type in `elem` interprets monomials against it.

use crate::error::{Error, Result};
use crate::scalars::{Chart, Context, Fp, HPoly};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModelKind {
    /// Commutative F_p[x_i, y_j] / (x^p, y^p), 2n generators.
    A0,
    /// F_p[h]<x_i, y_j>, [y_j, x_i] = h d_ij, x^p = y^p = 0.
    Weyl0,
    /// F_p[h^-1]<x'_i, y'_j>, [y'_j, x'_i] = d_ij, x'^p = y'^p = 0.
    WeylInf,
    /// Differential operators on the Frobenius neighborhood: x^p = 0,
    /// momenta free, [d_j, x_i] = d_ij.
    DY,
    /// DY with the extra relation d_i^p = 0 (central reduction at 0).
    DY0,
    /// Rees algebra of DY for the order filtration: generators x_i and
    /// h*d_i, so [mom_j, x_i] = h d_ij with momenta free, over F_p[h].
    DYRees,
    /// Commutative 4n-generator variant (fiber at 0 of the flat family).
    A0Flat,
    /// 4n generators x, y, u, v over F_p[h]: [u_i, x_j] = [v_i, y_j] = h d_ij.
    Weyl0Flat,
    /// Primed 4n-generator chart over F_p[h^-1] with commutator 1.
    WeylInfFlat,
    /// Full matrix algebra Mat_k(F_p); basis E_ij.
    MatAlg(usize),
}

/// Value of the basic commutator [momentum_i, position_i].
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum CommVal {
    Zero,
    One,
    H,
    Const(u64),
}

/// Which coefficient ring the algebra is defined over.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoeffMode {
    /// Plain GF(p) scalars.
    Fp,
    /// F_p[h].
    PolyZero,
    /// F_p[h^-1].
    PolyInf,
    /// Windowed Laurent coefficients.
    Laurent { lo: i64, hi: i64 },
    /// F_p[h]/h^m.
    Trunc { m: usize },
}

impl CoeffMode {
    pub fn chart(self) -> Chart {
        match self {
            CoeffMode::Fp | CoeffMode::PolyZero | CoeffMode::Trunc { .. } => Chart::Zero,
            CoeffMode::PolyInf => Chart::Infinity,
            CoeffMode::Laurent { lo, hi } => Chart::Laurent { lo, hi },
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraSpec {
    pub kind: ModelKind,
    pub ctx: Context,
    pub coeff: CoeffMode,
    pub comm: CommVal,
    /// Number of commuting nilpotent "position" generators.
    pub positions: usize,
    /// Number of momentum generators; momentum i pairs with position i.
    pub momenta: usize,
    pub momenta_nilpotent: bool,
}

impl AlgebraSpec {
    /// The standard model for a kind, with its natural coefficient ring.
    pub fn new(kind: ModelKind, ctx: Context) -> Self {
        let n = ctx.n;
        match kind {
            ModelKind::A0 => AlgebraSpec {
                kind,
                ctx,
                coeff: CoeffMode::Fp,
                comm: CommVal::Zero,
                positions: 2 * n,
                momenta: 0,
                momenta_nilpotent: true,
            },
            ModelKind::Weyl0 => AlgebraSpec {
                kind,
                ctx,
                coeff: CoeffMode::PolyZero,
                comm: CommVal::H,
                positions: n,
                momenta: n,
                momenta_nilpotent: true,
            },
            ModelKind::WeylInf => AlgebraSpec {
                kind,
                ctx,
                coeff: CoeffMode::PolyInf,
                comm: CommVal::One,
                positions: n,
                momenta: n,
                momenta_nilpotent: true,
            },
            ModelKind::DY => AlgebraSpec {
                kind,
                ctx,
                coeff: CoeffMode::Fp,
                comm: CommVal::One,
                positions: n,
                momenta: n,
                momenta_nilpotent: false,
            },
            ModelKind::DY0 => AlgebraSpec {
                kind,
                ctx,
                coeff: CoeffMode::Fp,
                comm: CommVal::One,
                positions: n,
                momenta: n,
                momenta_nilpotent: true,
            },
            ModelKind::DYRees => AlgebraSpec {
                kind,
                ctx,
                coeff: CoeffMode::PolyZero,
                comm: CommVal::H,
                positions: n,
                momenta: n,
                momenta_nilpotent: false,
            },
            ModelKind::A0Flat => AlgebraSpec {
                kind,
                ctx,
                coeff: CoeffMode::Fp,
                comm: CommVal::Zero,
                positions: 4 * n,
                momenta: 0,
                momenta_nilpotent: true,
            },
            ModelKind::Weyl0Flat => AlgebraSpec {
                kind,
                ctx,
                coeff: CoeffMode::PolyZero,
                comm: CommVal::H,
                positions: 2 * n,
                momenta: 2 * n,
                momenta_nilpotent: true,
            },
            ModelKind::WeylInfFlat => AlgebraSpec {
                kind,
                ctx,
                coeff: CoeffMode::PolyInf,
                comm: CommVal::One,
                positions: 2 * n,
                momenta: 2 * n,
                momenta_nilpotent: true,
            },
            ModelKind::MatAlg(k) => AlgebraSpec {
                kind,
                ctx,
                coeff: CoeffMode::Fp,
                comm: CommVal::Zero,
                positions: k,
                momenta: 0,
                momenta_nilpotent: true,
            },
        }
    }

    pub fn fp(&self) -> Fp {
        self.ctx.fp
    }

    pub fn p(&self) -> u64 {
        self.ctx.fp.p
    }

    pub fn with_coeff(mut self, coeff: CoeffMode) -> Self {
        self.coeff = coeff;
        self
    }

    /// Same presentation with coefficients in F_p[h]/h^m.
    pub fn truncated(self, m: usize) -> Self {
        self.with_coeff(CoeffMode::Trunc { m })
    }

    pub fn is_matrix_algebra(&self) -> bool {
        matches!(self.kind, ModelKind::MatAlg(_))
    }

    pub fn is_commutative(&self) -> bool {
        self.momenta == 0 && !self.is_matrix_algebra()
    }

    /// Total number of generators (positions then momenta).
    pub fn num_gens(&self) -> usize {
        self.positions + self.momenta
    }

    /// Exponent bound for a coordinate slot; None = unbounded (free momenta).
    pub fn exp_bound(&self, slot: usize) -> Option<u64> {
        if let ModelKind::MatAlg(k) = self.kind {
            return Some(k as u64);
        }
        if slot < self.positions {
            Some(self.p())
        } else if self.momenta_nilpotent {
            Some(self.p())
        } else {
            None
        }
    }

    pub fn comm_poly(&self, fp: Fp) -> HPoly {
        let chart = self.coeff.chart();
        match self.comm {
            CommVal::Zero => HPoly::zero(chart),
            CommVal::One => HPoly::one(chart),
            CommVal::H => HPoly::h_power(chart, 1).expect("h must fit the coefficient chart"),
            CommVal::Const(c) => HPoly::constant(fp, c, chart),
        }
    }

    /// Display name of generator `slot` (positions first, then momenta).
    pub fn gen_name(&self, slot: usize) -> String {
        let n = self.ctx.n;
        let prime = matches!(self.kind, ModelKind::WeylInf | ModelKind::WeylInfFlat);
        let tick = if prime { "'" } else { "" };
        match self.kind {
            ModelKind::MatAlg(_) => format!("g{slot}"),
            ModelKind::A0 => {
                if slot < n {
                    format!("x{}", slot + 1)
                } else {
                    format!("y{}", slot - n + 1)
                }
            }
            ModelKind::A0Flat => {
                let names = ["x", "y", "u", "v"];
                format!("{}{}", names[slot / n], slot % n + 1)
            }
            ModelKind::Weyl0 | ModelKind::WeylInf => {
                if slot < n {
                    format!("x{tick}{}", slot + 1)
                } else {
                    format!("y{tick}{}", slot - n + 1)
                }
            }
            ModelKind::DY | ModelKind::DY0 | ModelKind::DYRees => {
                if slot < n {
                    format!("x{}", slot + 1)
                } else {
                    format!("d{}", slot - n + 1)
                }
            }
            ModelKind::Weyl0Flat | ModelKind::WeylInfFlat => {
                let names = ["x", "y", "u", "v"];
                format!("{}{tick}{}", names[slot / n], slot % n + 1)
            }
        }
    }

    /// All kinds a CLI string can name.
    pub fn kind_from_str(s: &str) -> Result<ModelKind> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "a0" => ModelKind::A0,
            "weyl0" => ModelKind::Weyl0,
            "weylinf" => ModelKind::WeylInf,
            "dy" => ModelKind::DY,
            "dy0" => ModelKind::DY0,
            "dyrees" => ModelKind::DYRees,
            "a0flat" => ModelKind::A0Flat,
            "weyl0flat" => ModelKind::Weyl0Flat,
            "weylinfflat" => ModelKind::WeylInfFlat,
            other => {
                if let Some(k) = other.strip_prefix("mat") {
                    let k: usize = k
                        .parse()
                        .map_err(|_| Error::InvalidInput(format!("unknown algebra '{other}'")))?;
                    ModelKind::MatAlg(k)
                } else {
                    return Err(Error::InvalidInput(format!("unknown algebra '{other}'")));
                }
            }
        })
    }

    pub fn kind_str(&self) -> String {
        match self.kind {
            ModelKind::A0 => "a0".into(),
            ModelKind::Weyl0 => "weyl0".into(),
            ModelKind::WeylInf => "weylinf".into(),
            ModelKind::DY => "dy".into(),
            ModelKind::DY0 => "dy0".into(),
            ModelKind::DYRees => "dyrees".into(),
            ModelKind::A0Flat => "a0flat".into(),
            ModelKind::Weyl0Flat => "weyl0flat".into(),
            ModelKind::WeylInfFlat => "weylinfflat".into(),
            ModelKind::MatAlg(k) => format!("mat{k}"),
        }
    }
}

/// A basis label. For the Weyl-type models this is the exponent vector
/// of the ordered monomial x^I y^J d^K (positions first, momenta last);
/// for Mat_k it is the index pair (i, j) of E_ij.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn unit(spec: &AlgebraSpec) -> Self {
        if spec.is_matrix_algebra() {
            // the unit of Mat_k is a sum of basis elements, not a monomial;
            // this constructor is only meaningful for the Weyl-type models
            panic!("matrix algebras have no unit monomial");
        }
        Monomial(vec![0; spec.num_gens()])
    }

    pub fn gen(spec: &AlgebraSpec, slot: usize) -> Self {
        assert!(slot < spec.num_gens(), "generator slot out of range");
        let mut e = vec![0u16; spec.num_gens()];
        e[slot] = 1;
        Monomial(e)
    }

    pub fn matrix_unit(i: usize, j: usize) -> Self {
        Monomial(vec![i as u16, j as u16])
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Total momentum degree (order of the differential operator part).
    pub fn momentum_degree(&self, spec: &AlgebraSpec) -> u64 {
        self.0[spec.positions..].iter().map(|&e| e as u64).sum()
    }

    pub fn respects_bounds(&self, spec: &AlgebraSpec) -> bool {
        if spec.is_matrix_algebra() {
            let k = spec.positions as u16;
            return self.0.len() == 2 && self.0[0] < k && self.0[1] < k;
        }
        if self.0.len() != spec.num_gens() {
            return false;
        }
        self.0.iter().enumerate().all(|(slot, &e)| match spec.exp_bound(slot) {
            Some(b) => (e as u64) < b,
            None => true,
        })
    }

    pub fn display(&self, spec: &AlgebraSpec) -> String {
        if spec.is_matrix_algebra() {
            return format!("E{}{}", self.0[0] + 1, self.0[1] + 1);
        }
        let mut parts = Vec::new();
        for (slot, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(spec.gen_name(slot)),
                _ => parts.push(format!("{}^{}", spec.gen_name(slot), e)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

/// Enumerates the monomial basis of a finite-dimensional spec, or of the
/// momentum-degree window `<= dbound` when momenta are free.
pub fn basis_monomials(spec: &AlgebraSpec, dbound: Option<u64>) -> Vec<Monomial> {
    if let ModelKind::MatAlg(k) = spec.kind {
        let mut out = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                out.push(Monomial::matrix_unit(i, j));
            }
        }
        return out;
    }
    let slots = spec.num_gens();
    let mut bounds = Vec::with_capacity(slots);
    for slot in 0..slots {
        match spec.exp_bound(slot) {
            Some(b) => bounds.push(b),
            None => {
                let d = dbound.expect("free momenta require an explicit degree bound") + 1;
                bounds.push(d);
            }
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0u16; slots];
    loop {
        let mono = Monomial(cur.clone());
        let ok = match dbound {
            Some(d) => mono.momentum_degree(spec) <= d,
            None => true,
        };
        if ok {
            out.push(mono);
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == slots {
                out.sort();
                return out;
            }
            cur[i] += 1;
            if (cur[i] as u64) < bounds[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_ranks() {
        let ctx = Context::new(3, 1).unwrap();
        assert_eq!(basis_monomials(&AlgebraSpec::new(ModelKind::A0, ctx), None).len(), 9);
        assert_eq!(basis_monomials(&AlgebraSpec::new(ModelKind::Weyl0, ctx), None).len(), 9);
        assert_eq!(basis_monomials(&AlgebraSpec::new(ModelKind::DY0, ctx), None).len(), 9);
        assert_eq!(
            basis_monomials(&AlgebraSpec::new(ModelKind::Weyl0Flat, ctx), None).len(),
            81
        );
        assert_eq!(basis_monomials(&AlgebraSpec::new(ModelKind::MatAlg(2), ctx), None).len(), 4);
        let ctx52 = Context::new(5, 2).unwrap();
        assert_eq!(basis_monomials(&AlgebraSpec::new(ModelKind::A0, ctx52), None).len(), 625);
    }

    #[test]
    fn dy_window() {
        let ctx = Context::new(3, 1).unwrap();
        let dy = AlgebraSpec::new(ModelKind::DY, ctx);
        // x^a d^k with a < 3, k <= 3
        assert_eq!(basis_monomials(&dy, Some(3)).len(), 12);
    }
}
