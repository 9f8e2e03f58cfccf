//! Module algebras, module coalgebras, comodule algebras and coalgebra actions.

use std::sync::Arc;

use crate::linear::{operator_matrix, Matrix, SlotMap, VectorSpace};
use crate::report::Report;

use super::algebra::{swap_matrix, Algebra, HopfAlgebra};

/// A left `H`-module algebra `A`; `action : H (x) A -> A`.
#[derive(Debug, Clone)]
pub struct ModuleAlgebra {
    pub hopf: Arc<HopfAlgebra>,
    pub algebra: Algebra,
    pub action: Matrix,
}

impl ModuleAlgebra {
    pub fn new(hopf: Arc<HopfAlgebra>, algebra: Algebra, action: Matrix) -> Self {
        let (dh, da) = (hopf.dim(), algebra.dim());
        assert_eq!((action.nrows(), action.ncols()), (da, dh * da), "action shape");
        ModuleAlgebra { hopf, algebra, action }
    }

    /// `H` acting on itself by `h . a = h_1 a S(h_2)`.
    pub fn adjoint(hopf: Arc<HopfAlgebra>) -> Self {
        let action = adjoint_action(&hopf);
        ModuleAlgebra::new(hopf.clone(), hopf.algebra(), action)
    }

    /// `h . a = epsilon(h) a`.
    pub fn trivial(hopf: Arc<HopfAlgebra>, algebra: Algebra) -> Self {
        let action = hopf.counit.kron(&Matrix::identity(algebra.dim()));
        ModuleAlgebra::new(hopf, algebra, action)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn action_slot(&self) -> SlotMap {
        let (dh, da) = (self.hopf.dim(), self.dim());
        SlotMap::new(&self.action, &[dh, da], &[da])
    }

    /// `a -> h . a` for a basis element `h`.
    pub fn acting(&self, h: usize) -> Matrix {
        self.action
            .mul(&basis_column(self.hopf.dim(), h).kron(&Matrix::identity(self.dim())))
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new("module algebra");
        let h = &self.hopf;
        let (dh, da) = (h.dim(), self.dim());
        let (ih, ia) = (Matrix::identity(dh), Matrix::identity(da));
        self.algebra.check(&mut r, "algebra ");
        r.identity(
            "module associativity",
            &self.action.mul(&h.mul.kron(&ia)),
            &self.action.mul(&ih.kron(&self.action)),
        );
        r.identity("module unit", &self.action.mul(&h.unit.kron(&ia)), &ia);
        // h.(ab) = (h_1.a)(h_2.b)
        let lhs = self.action.mul(&ih.kron(&self.algebra.mul));
        let rhs = self
            .algebra
            .mul
            .mul(&self.action.kron(&self.action))
            .mul(&ih.kron(&swap_matrix(dh, da)).kron(&ia))
            .mul(&h.comul.kron(&ia).kron(&ia));
        r.identity("h.(ab) = (h1.a)(h2.b)", &lhs, &rhs);
        r.identity(
            "h.1 = eps(h) 1",
            &self.action.mul(&ih.kron(&self.algebra.unit)),
            &self.algebra.unit.mul(&h.counit),
        );
        r
    }
}

/// A left `H`-module coalgebra `C`.
#[derive(Debug, Clone)]
pub struct ModuleCoalgebra {
    pub hopf: Arc<HopfAlgebra>,
    pub space: VectorSpace,
    pub comul: Matrix,
    pub counit: Matrix,
    /// `H (x) C -> C`
    pub action: Matrix,
}

impl ModuleCoalgebra {
    pub fn new(hopf: Arc<HopfAlgebra>, space: VectorSpace, comul: Matrix, counit: Matrix, action: Matrix) -> Self {
        let (dh, dc) = (hopf.dim(), space.dim());
        assert_eq!((comul.nrows(), comul.ncols()), (dc * dc, dc), "comultiplication shape");
        assert_eq!((counit.nrows(), counit.ncols()), (1, dc), "counit shape");
        assert_eq!((action.nrows(), action.ncols()), (dc, dh * dc), "action shape");
        ModuleCoalgebra {
            hopf,
            space,
            comul,
            counit,
            action,
        }
    }

    /// `H` acting on itself by left multiplication.
    pub fn regular(hopf: Arc<HopfAlgebra>) -> Self {
        let h = hopf.clone();
        ModuleCoalgebra::new(
            hopf,
            h.space.clone(),
            h.comul.clone(),
            h.counit.clone(),
            h.mul.clone(),
        )
    }

    /// The ground field with `h . 1 = epsilon(h)`.
    pub fn ground(hopf: Arc<HopfAlgebra>) -> Self {
        let counit = hopf.counit.clone();
        ModuleCoalgebra::new(
            hopf,
            VectorSpace::ground(),
            Matrix::identity(1),
            Matrix::identity(1),
            counit,
        )
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn comul_slot(&self) -> SlotMap {
        let d = self.dim();
        SlotMap::new(&self.comul, &[d], &[d, d])
    }

    pub fn counit_slot(&self) -> SlotMap {
        SlotMap::new(&self.counit, &[self.dim()], &[1])
    }

    pub fn action_slot(&self) -> SlotMap {
        let (dh, dc) = (self.hopf.dim(), self.dim());
        SlotMap::new(&self.action, &[dh, dc], &[dc])
    }

    /// `c -> h . c` for a basis element `h`.
    pub fn acting(&self, h: usize) -> Matrix {
        self.action
            .mul(&basis_column(self.hopf.dim(), h).kron(&Matrix::identity(self.dim())))
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new("module coalgebra");
        let h = &self.hopf;
        let (dh, dc) = (h.dim(), self.dim());
        let (ih, ic) = (Matrix::identity(dh), Matrix::identity(dc));
        let (dl, eps, act) = (&self.comul, &self.counit, &self.action);
        r.identity("coassociativity", &dl.kron(&ic).mul(dl), &ic.kron(dl).mul(dl));
        r.identity("left counit", &eps.kron(&ic).mul(dl), &ic);
        r.identity("right counit", &ic.kron(eps).mul(dl), &ic);
        r.identity("module associativity", &act.mul(&h.mul.kron(&ic)), &act.mul(&ih.kron(act)));
        r.identity("module unit", &act.mul(&h.unit.kron(&ic)), &ic);
        // Delta(h.c) = h_1.c_1 (x) h_2.c_2
        let rhs = act
            .kron(act)
            .mul(&ih.kron(&swap_matrix(dh, dc)).kron(&ic))
            .mul(&h.comul.kron(dl));
        r.identity("Delta(h.c) = h1.c1 (x) h2.c2", &dl.mul(act), &rhs);
        r.identity("eps(h.c) = eps(h) eps(c)", &eps.mul(act), &h.counit.kron(eps));
        r
    }
}

/// A left `H`-comodule algebra `B`; `coaction : B -> H (x) B`.
#[derive(Debug, Clone)]
pub struct ComoduleAlgebra {
    pub hopf: Arc<HopfAlgebra>,
    pub algebra: Algebra,
    pub coaction: Matrix,
}

impl ComoduleAlgebra {
    pub fn new(hopf: Arc<HopfAlgebra>, algebra: Algebra, coaction: Matrix) -> Self {
        let (dh, db) = (hopf.dim(), algebra.dim());
        assert_eq!((coaction.nrows(), coaction.ncols()), (dh * db, db), "coaction shape");
        ComoduleAlgebra {
            hopf,
            algebra,
            coaction,
        }
    }

    /// `H` coacting on itself by its comultiplication.
    pub fn regular(hopf: Arc<HopfAlgebra>) -> Self {
        let coaction = hopf.comul.clone();
        ComoduleAlgebra::new(hopf.clone(), hopf.algebra(), coaction)
    }

    /// `b -> 1 (x) b`.
    pub fn trivial(hopf: Arc<HopfAlgebra>, algebra: Algebra) -> Self {
        let coaction = hopf.unit.kron(&Matrix::identity(algebra.dim()));
        ComoduleAlgebra::new(hopf, algebra, coaction)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn coaction_slot(&self) -> SlotMap {
        let (dh, db) = (self.hopf.dim(), self.dim());
        SlotMap::new(&self.coaction, &[db], &[dh, db])
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new("comodule algebra");
        let h = &self.hopf;
        let (dh, db) = (h.dim(), self.dim());
        let (ih, ib) = (Matrix::identity(dh), Matrix::identity(db));
        let co = &self.coaction;
        self.algebra.check(&mut r, "algebra ");
        r.identity("coaction coassociativity", &h.comul.kron(&ib).mul(co), &ih.kron(co).mul(co));
        r.identity("coaction counit", &h.counit.kron(&ib).mul(co), &ib);
        let rhs = h
            .mul
            .kron(&self.algebra.mul)
            .mul(&ih.kron(&swap_matrix(db, dh)).kron(&ib))
            .mul(&co.kron(co));
        r.identity("coaction is multiplicative", &co.mul(&self.algebra.mul), &rhs);
        r.identity(
            "coaction is unital",
            &co.mul(&self.algebra.unit),
            &h.unit.kron(&self.algebra.unit),
        );
        r
    }
}

/// A module coalgebra `C` acting on a module algebra `A`; `action : C (x) A -> A`.
#[derive(Debug, Clone)]
pub struct CoalgebraAction {
    pub coalgebra: ModuleCoalgebra,
    pub algebra: ModuleAlgebra,
    pub action: Matrix,
}

impl CoalgebraAction {
    pub fn new(coalgebra: ModuleCoalgebra, algebra: ModuleAlgebra, action: Matrix) -> Self {
        let (dc, da) = (coalgebra.dim(), algebra.dim());
        assert_eq!((action.nrows(), action.ncols()), (da, dc * da), "action shape");
        assert!(Arc::ptr_eq(&coalgebra.hopf, &algebra.hopf) || coalgebra.hopf == algebra.hopf);
        CoalgebraAction {
            coalgebra,
            algebra,
            action,
        }
    }

    /// `C = H` (left regular) acting on `A = H` (adjoint) by `c . a = c_1 a S(c_2)`.
    pub fn adjoint(hopf: Arc<HopfAlgebra>) -> Self {
        let action = adjoint_action(&hopf);
        CoalgebraAction::new(
            ModuleCoalgebra::regular(hopf.clone()),
            ModuleAlgebra::adjoint(hopf),
            action,
        )
    }

    /// The ground coalgebra acting by the identity.
    pub fn ground(algebra: ModuleAlgebra) -> Self {
        let d = algebra.dim();
        CoalgebraAction::new(
            ModuleCoalgebra::ground(algebra.hopf.clone()),
            algebra,
            Matrix::identity(d),
        )
    }

    pub fn action_slot(&self) -> SlotMap {
        let (dc, da) = (self.coalgebra.dim(), self.algebra.dim());
        SlotMap::new(&self.action, &[dc, da], &[da])
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new("coalgebra action");
        let h = &self.coalgebra.hopf;
        let (dh, dc, da) = (h.dim(), self.coalgebra.dim(), self.algebra.dim());
        let (ih, ic, ia) = (Matrix::identity(dh), Matrix::identity(dc), Matrix::identity(da));
        let act = &self.action;
        r.merge("coalgebra ", self.coalgebra.check());
        r.merge("algebra ", self.algebra.check());
        r.identity(
            "(h.c).a = h.(c.a)",
            &act.mul(&self.coalgebra.action.kron(&ia)),
            &self.algebra.action.mul(&ih.kron(act)),
        );
        let rhs = self
            .algebra
            .algebra
            .mul
            .mul(&act.kron(act))
            .mul(&ic.kron(&swap_matrix(dc, da)).kron(&ia))
            .mul(&self.coalgebra.comul.kron(&ia).kron(&ia));
        r.identity(
            "c.(ab) = (c1.a)(c2.b)",
            &act.mul(&ic.kron(&self.algebra.algebra.mul)),
            &rhs,
        );
        r.identity(
            "c.1 = eps(c) 1",
            &act.mul(&ic.kron(&self.algebra.algebra.unit)),
            &self.algebra.algebra.unit.mul(&self.coalgebra.counit),
        );
        r
    }
}

/// `h (x) a -> h_1 a S(h_2)`.
pub fn adjoint_action(h: &HopfAlgebra) -> Matrix {
    let d = h.dim();
    let (m, dl, s) = (h.mul_slot(), h.comul_slot(), h.antipode_slot());
    operator_matrix(&[d, d], &[d], |t| {
        t.apply(0, &dl)
            .apply(1, &s)
            .move_slot(1, 2)
            .apply(0, &m)
            .apply(0, &m)
    })
}

fn basis_column(d: usize, i: usize) -> Matrix {
    Matrix::from_entries(d, 1, vec![(i, 0, crate::linear::rat(1))])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtin::{group_algebra_cyclic, group_algebra_s3, sweedler_h4};

    fn all(hs: &[HopfAlgebra]) -> Vec<Arc<HopfAlgebra>> {
        hs.iter().cloned().map(Arc::new).collect()
    }

    #[test]
    fn regular_structures_pass() {
        for h in all(&[group_algebra_cyclic(2), group_algebra_s3(), sweedler_h4()]) {
            let r = ModuleAlgebra::adjoint(h.clone()).check();
            assert!(r.all_passed(), "{}", r.render_text());
            let r = ModuleCoalgebra::regular(h.clone()).check();
            assert!(r.all_passed(), "{}", r.render_text());
            let r = ComoduleAlgebra::regular(h.clone()).check();
            assert!(r.all_passed(), "{}", r.render_text());
            let r = CoalgebraAction::adjoint(h).check();
            assert!(r.all_passed(), "{}", r.render_text());
        }
    }

    #[test]
    fn adjoint_on_group_is_conjugation() {
        let h = Arc::new(group_algebra_s3());
        let act = adjoint_action(&h);
        // (12) . (123) = (12)(123)(12) = (132)
        assert_eq!(act.get(5, 6 + 4), crate::linear::rat(1));
    }

    #[test]
    fn broken_action_is_reported() {
        let h = Arc::new(group_algebra_cyclic(2));
        let mut ma = ModuleAlgebra::adjoint(h.clone());
        // g acts by zero
        ma.action = Matrix::from_entries(2, 4, vec![(0, 0, crate::linear::rat(1)), (1, 1, crate::linear::rat(1))]);
        let r = ma.check();
        assert!(!r.passed("h.1 = eps(h) 1"));
    }
}
