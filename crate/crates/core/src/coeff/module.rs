//! Right-left stable anti-Yetter-Drinfeld modules.

use std::sync::Arc;

use crate::linear::{operator_matrix, rat, Matrix, Rational, SlotMap, VectorSpace};
use crate::report::Report;
use crate::hopf::{Group, HopfAlgebra};

/// `action : M (x) H -> M` (right), `coaction : M -> H (x) M` (left).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaydModule {
    pub hopf: Arc<HopfAlgebra>,
    pub space: VectorSpace,
    pub action: Matrix,
    pub coaction: Matrix,
}

impl SaydModule {
    pub fn new(hopf: Arc<HopfAlgebra>, space: VectorSpace, action: Matrix, coaction: Matrix) -> Self {
        let (dh, dm) = (hopf.dim(), space.dim());
        assert_eq!((action.nrows(), action.ncols()), (dm, dm * dh), "action shape");
        assert_eq!((coaction.nrows(), coaction.ncols()), (dh * dm, dm), "coaction shape");
        SaydModule {
            hopf,
            space,
            action,
            coaction,
        }
    }

    /// `Q` with `n.h = eps(h) n` and `n -> 1 (x) n`.
    pub fn trivial(hopf: Arc<HopfAlgebra>) -> Self {
        let action = hopf.counit.clone();
        let coaction = hopf.unit.clone();
        SaydModule::new(hopf, VectorSpace::ground(), action, coaction)
    }

    /// `Q` with `n.h = delta(h) n` and `n -> sigma (x) n` for a character
    /// `delta` (values on the basis) and a vector `sigma` of `H`.
    pub fn modular_pair(hopf: Arc<HopfAlgebra>, delta: &[Rational], sigma: &[Rational]) -> Self {
        assert_eq!(delta.len(), hopf.dim());
        assert_eq!(sigma.len(), hopf.dim());
        SaydModule::new(
            hopf,
            VectorSpace::ground(),
            Matrix::row_vector(delta),
            Matrix::column_vector(sigma),
        )
    }

    /// The group algebra as a module over itself by conjugation
    /// `n . h = h^-1 n h`, with `g -> g (x) g`.
    pub fn conjugation(group: &Group, hopf: Arc<HopfAlgebra>) -> Self {
        let n = group.order();
        assert_eq!(n, hopf.dim(), "group and Hopf algebra differ");
        let mut act = Vec::new();
        for x in 0..n {
            for h in 0..n {
                let y = group.table[group.table[group.inverse[h]][x]][h];
                act.push((y, x * n + h, rat(1)));
            }
        }
        let coaction = hopf.comul.clone();
        SaydModule::new(
            hopf,
            VectorSpace::new(group.labels.clone()),
            Matrix::from_entries(n, n * n, act),
            coaction,
        )
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn action_slot(&self) -> SlotMap {
        let (dh, dm) = (self.hopf.dim(), self.dim());
        SlotMap::new(&self.action, &[dm, dh], &[dm])
    }

    pub fn coaction_slot(&self) -> SlotMap {
        let (dh, dm) = (self.hopf.dim(), self.dim());
        SlotMap::new(&self.coaction, &[dm], &[dh, dm])
    }

    /// `m -> m . h` for a basis element `h`.
    pub fn acting(&self, h: usize) -> Matrix {
        let e = Matrix::from_entries(self.hopf.dim(), 1, vec![(h, 0, rat(1))]);
        self.action.mul(&Matrix::identity(self.dim()).kron(&e))
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new("SAYD module");
        let h = &self.hopf;
        let (dh, dm) = (h.dim(), self.dim());
        let (ih, im) = (Matrix::identity(dh), Matrix::identity(dm));
        let (act, co) = (&self.action, &self.coaction);
        r.identity("right module associativity", &act.mul(&act.kron(&ih)), &act.mul(&im.kron(&h.mul)));
        r.identity("right module unit", &act.mul(&im.kron(&h.unit)), &im);
        r.identity("left comodule coassociativity", &h.comul.kron(&im).mul(co), &ih.kron(co).mul(co));
        r.identity("left comodule counit", &h.counit.kron(&im).mul(co), &im);

        // S(h_3) m_-1 h_1 (x) m_0 . h_2
        let (a, c, dl, m, s) = (
            self.action_slot(),
            self.coaction_slot(),
            h.comul_slot(),
            h.mul_slot(),
            h.antipode_slot(),
        );
        let rhs = operator_matrix(&[dm, dh], &[dh, dm], |t| {
            t.apply(1, &dl)
                .apply(2, &dl)
                .apply(0, &c)
                .move_slot(3, 2)
                .apply(1, &a)
                .apply(3, &s)
                .move_slot(3, 0)
                .move_slot(3, 2)
                .apply(1, &m)
                .apply(0, &m)
        });
        r.identity("anti-Yetter-Drinfeld", &co.mul(act), &rhs);
        let stab = operator_matrix(&[dm], &[dm], |t| t.apply(0, &c).permute(&[1, 0]).apply(0, &a));
        r.identity("stability", &stab, &im);
        r
    }
}
