//! Pairings between SAYD modules and contramodules, and the contratensor
//! coequalizer `L(N, M)`.

use std::sync::Arc;

use crate::error::{HccError, Result};
use crate::hopf::HopfAlgebra;
use crate::linear::rational::format_rational;
use crate::linear::{cokernel, operator_matrix, rat, Matrix, SlotMap, VectorSpace};
use crate::report::Report;

use super::contra::SaydContramodule;
use super::module::SaydModule;

/// `<n | m>` as a `1 x dim(N) dim(M)` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatiblePair {
    pub module: SaydModule,
    pub contramodule: SaydContramodule,
    pub pairing: Matrix,
}

impl CompatiblePair {
    pub fn new(module: SaydModule, contramodule: SaydContramodule, pairing: Matrix) -> Self {
        assert_eq!(
            (pairing.nrows(), pairing.ncols()),
            (1, module.dim() * contramodule.dim()),
            "pairing shape"
        );
        CompatiblePair {
            module,
            contramodule,
            pairing,
        }
    }

    /// `(N, N*, <n | f> = f(n))`.
    pub fn evaluation(module: SaydModule) -> Self {
        let contra = SaydContramodule::dual_of(&module);
        let pairing = diagonal_pairing(module.dim());
        CompatiblePair::new(module, contra, pairing)
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.module.hopf
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new("compatible pair");
        let (n, m) = (&self.module, &self.contramodule);
        let (dn, dm) = (n.dim(), m.dim());
        let (i_n, i_m) = (Matrix::identity(dn), Matrix::identity(dm));
        r.identity(
            "<n.h | m> = <n | h.m>",
            &self.pairing.mul(&n.action.kron(&i_m)),
            &self.pairing.mul(&i_n.kron(&m.action)),
        );
        r.identity(
            "<n | alpha(f)> = <n_0 | f(n_-1)>",
            &self.pairing.mul(&i_n.kron(&m.alpha)),
            &self.pairing.mul(&coaction_evaluation(n, dm)),
        );
        r
    }
}

/// `n (x) f -> n_0 (x) f(n_-1)` as a matrix `N (x) H* (x) M -> N (x) M`.
pub fn coaction_evaluation(n: &SaydModule, dm: usize) -> Matrix {
    let (dh, dn) = (n.hopf.dim(), n.dim());
    let ev = SlotMap::new(&diagonal_pairing(dh), &[dh, dh], &[1]);
    let co = n.coaction_slot();
    operator_matrix(&[dn, dh, dm], &[dn, dm], |t| {
        t.apply(0, &co)
            .move_slot(2, 1)
            .apply(0, &ev)
            .reshape(&[dn, dm])
    })
}

/// `1 x d^2` matrix with ones at `(i, i)`.
pub fn diagonal_pairing(d: usize) -> Matrix {
    Matrix::from_entries(1, d * d, (0..d).map(|i| (0, i * d + i, rat(1))))
}

/// `L(N, M)` with its projection from and a section into `N (x) M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contratensor {
    pub space: VectorSpace,
    pub projection: Matrix,
    pub section: Matrix,
    /// `N (x)_H M -> L`, kept to check that the projection factors through it.
    pub balanced_projection: Matrix,
}

impl Contratensor {
    pub fn new(n: &SaydModule, m: &SaydContramodule) -> Result<Self> {
        if n.hopf != m.hopf {
            return Err(HccError::Precondition(
                "module and contramodule are over different Hopf algebras".into(),
            ));
        }
        let (dn, dm) = (n.dim(), m.dim());
        let (i_n, i_m) = (Matrix::identity(dn), Matrix::identity(dm));
        // N (x)_H M
        let relation = n.action.kron(&i_m).sub(&i_n.kron(&m.action));
        let q1 = cokernel(&relation);
        let lifted_alpha = i_n.kron(&m.alpha);
        let lifted_coaction = coaction_evaluation(n, dm);
        let difference = q1.projection().mul(&lifted_alpha.sub(&lifted_coaction));
        let q2 = cokernel(&difference);
        let tensor = n.space.tensor(&m.space);
        let balanced = tensor.select(q1.kept());
        let space = balanced.select(q2.kept());
        Ok(Contratensor {
            space,
            projection: q2.projection().mul(q1.projection()),
            section: q1.section().mul(&q2.section()),
            balanced_projection: q2.projection().clone(),
        })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Checks that the projection coequalizes both maps and kills the balancing relation.
    pub fn check(&self, n: &SaydModule, m: &SaydContramodule) -> Report {
        let mut r = Report::new("contratensor");
        let (dn, dm) = (n.dim(), m.dim());
        let (i_n, i_m) = (Matrix::identity(dn), Matrix::identity(dm));
        let relation = n.action.kron(&i_m).sub(&i_n.kron(&m.action));
        let zero_rel = Matrix::zeros(self.dim(), relation.ncols());
        r.identity("projection kills n.h (x) m - n (x) h.m", &self.projection.mul(&relation), &zero_rel);
        let lifted_alpha = i_n.kron(&m.alpha);
        let lifted_coaction = coaction_evaluation(n, dm);
        r.identity(
            "projection coequalizes",
            &self.projection.mul(&lifted_alpha),
            &self.projection.mul(&lifted_coaction),
        );
        r.identity(
            "projection is onto",
            &self.projection.mul(&self.section),
            &Matrix::identity(self.dim()),
        );
        r
    }
}

/// `E : L(N, M) -> Q` induced by the pairing.
pub fn collapse_map(pair: &CompatiblePair, l: &Contratensor) -> Result<Matrix> {
    let e = pair.pairing.mul(&l.section);
    let back = e.mul(&l.projection);
    match back.first_mismatch(&pair.pairing) {
        None => Ok(e),
        Some(bad) => Err(HccError::NotWellDefined {
            what: "pairing on L(N, M)".into(),
            residual: format!(
                "E∘projection differs from the pairing at {}: residual {}",
                l_label(pair, bad.col),
                format_rational(&(&bad.left - &bad.right))
            ),
        }),
    }
}

fn l_label(pair: &CompatiblePair, col: usize) -> String {
    pair.module.space.tensor(&pair.contramodule.space).label(col).to_string()
}

/// Trivial SAYD module and contramodule with the product pairing.
pub fn trivial_coefficients(hopf: Arc<HopfAlgebra>) -> CompatiblePair {
    CompatiblePair::new(
        SaydModule::trivial(hopf.clone()),
        SaydContramodule::trivial(hopf),
        Matrix::identity(1),
    )
}
