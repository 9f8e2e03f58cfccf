//! Left-right stable anti-Yetter-Drinfeld contramodules.
//!
//! `Hom(H, M)` is stored as `H* (x) M`: the coordinate `k * dim(M) + m` of `f`
//! is the `m`-th coordinate of `f(h_k)`.

use std::sync::Arc;

use crate::hopf::HopfAlgebra;
use crate::linear::{operator_matrix, rat, Matrix, Tensor, VectorSpace};
use crate::report::Report;

use super::module::SaydModule;

/// `action : H (x) M -> M` (left), `alpha : H* (x) M -> M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaydContramodule {
    pub hopf: Arc<HopfAlgebra>,
    pub space: VectorSpace,
    pub action: Matrix,
    pub alpha: Matrix,
}

impl SaydContramodule {
    pub fn new(hopf: Arc<HopfAlgebra>, space: VectorSpace, action: Matrix, alpha: Matrix) -> Self {
        let (dh, dm) = (hopf.dim(), space.dim());
        assert_eq!((action.nrows(), action.ncols()), (dm, dh * dm), "action shape");
        assert_eq!((alpha.nrows(), alpha.ncols()), (dm, dh * dm), "alpha shape");
        SaydContramodule {
            hopf,
            space,
            action,
            alpha,
        }
    }

    /// `Q` with `h.m = eps(h) m` and `alpha(f) = f(1)`.
    pub fn trivial(hopf: Arc<HopfAlgebra>) -> Self {
        let action = hopf.counit.clone();
        let alpha = hopf.unit.transpose();
        SaydContramodule::new(hopf, VectorSpace::ground(), action, alpha)
    }

    /// `M*` with `(h.f)(m) = f(m.h)` and `alpha(f)(m) = f(m_-1)(m_0)`.
    pub fn dual_of(module: &SaydModule) -> Self {
        let (dh, dm) = (module.hopf.dim(), module.dim());
        // (h.f)(m) = f(m.h): entry [f'][(h, f)] = action[f][(f', h)]
        let mut act = Vec::new();
        for (i, col, v) in module.action.entries() {
            let (m, h) = (col / dh, col % dh);
            act.push((m, h * dm + i, v.clone()));
        }
        SaydContramodule::new(
            module.hopf.clone(),
            module.space.dual(),
            Matrix::from_entries(dm, dh * dm, act),
            module.coaction.transpose(),
        )
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `m -> h . m` for a basis element `h`.
    pub fn acting(&self, h: usize) -> Matrix {
        let e = Matrix::from_entries(self.hopf.dim(), 1, vec![(h, 0, rat(1))]);
        self.action.mul(&e.kron(&Matrix::identity(self.dim())))
    }

    /// `f -> h_2 . f(S(h_3) (-) h_1)` on `H* (x) M`.
    pub fn twisted_argument(&self, h: usize) -> Matrix {
        let hopf = &self.hopf;
        let (dh, dm) = (hopf.dim(), self.dim());
        let legs = hopf.iterated_comul(2);
        let (mul, s) = (hopf.mul_slot(), hopf.antipode_slot());
        let mut total = Matrix::zeros(dh * dm, dh * dm);
        for (row, c) in legs.column(h).into_iter().enumerate().filter(|(_, c)| !num_traits::Zero::is_zero(c)) {
            let (h1, h2, h3) = (row / (dh * dh), (row / dh) % dh, row % dh);
            // k -> S(h3) k h1
            let conj = operator_matrix(&[dh], &[dh], |t: Tensor| {
                t.insert_basis_slot(0, dh, h3)
                    .apply(0, &s)
                    .apply(0, &mul)
                    .insert_basis_slot(1, dh, h1)
                    .apply(0, &mul)
            });
            total = total.combine(&conj.transpose().kron(&self.acting(h2)), c);
        }
        total
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new("SAYD contramodule");
        let h = &self.hopf;
        let (dh, dm) = (h.dim(), self.dim());
        let (ih, im) = (Matrix::identity(dh), Matrix::identity(dm));
        let (act, alpha) = (&self.action, &self.alpha);
        r.identity("left module associativity", &act.mul(&h.mul.kron(&im)), &act.mul(&ih.kron(act)));
        r.identity("left module unit", &act.mul(&h.unit.kron(&im)), &im);
        r.identity(
            "contramodule associativity",
            &alpha.mul(&ih.kron(alpha)),
            &alpha.mul(&h.comul.transpose().kron(&im)),
        );
        r.identity("contramodule counit", &alpha.mul(&h.counit.transpose().kron(&im)), &im);
        let mut ayd = Report::new("");
        for k in 0..dh {
            ayd.identity(
                format!("h{k}"),
                &self.acting(k).mul(alpha),
                &alpha.mul(&self.twisted_argument(k)),
            );
        }
        match ayd.failed().next() {
            None => r.condition("anti-Yetter-Drinfeld", true, None),
            Some(bad) => {
                let mut c = bad.clone();
                c.note = Some(format!("at h = {}", h.space.label(bad.name[1..].parse().unwrap())));
                c.name = "anti-Yetter-Drinfeld".into();
                r.checks.push(c);
                false
            }
        };
        // r_m(h) = h . m, i.e. r[(k, m'), m] = act[m'][(k, m)]
        let mut rm = Vec::new();
        for (i, col, v) in act.entries() {
            let (k, m) = (col / dm, col % dm);
            rm.push((k * dm + i, m, v.clone()));
        }
        let r_map = Matrix::from_entries(dh * dm, dm, rm);
        r.identity("stability", &alpha.mul(&r_map), &im);
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{group_algebra_cyclic, group_algebra_s3, sweedler_h4, trivial_hopf, Group};
    use crate::linear::Rational;

    #[test]
    fn trivial_contramodule_over_groups() {
        for h in [trivial_hopf(), group_algebra_cyclic(2), group_algebra_s3()] {
            let r = SaydContramodule::trivial(Arc::new(h)).check();
            assert!(r.all_passed(), "{}", r.render_text());
        }
    }

    #[test]
    fn dual_of_trivial_is_trivial() {
        let h = Arc::new(group_algebra_cyclic(2));
        let d = SaydContramodule::dual_of(&SaydModule::trivial(h.clone()));
        let t = SaydContramodule::trivial(h);
        assert_eq!(d.action, t.action);
        assert_eq!(d.alpha, t.alpha);
    }

    #[test]
    fn duals_of_verified_modules_pass() {
        let g = Group::symmetric3();
        let s3 = Arc::new(g.hopf_algebra("Q[S3]"));
        let h4 = Arc::new(sweedler_h4());
        let z2 = Arc::new(group_algebra_cyclic(2));
        let v = |xs: &[i64]| xs.iter().map(|&x| rat(x)).collect::<Vec<Rational>>();
        let modules = [
            SaydModule::conjugation(&g, s3),
            SaydModule::modular_pair(h4.clone(), &v(&[1, -1, 0, 0]), &v(&[1, 0, 0, 0])),
            SaydModule::modular_pair(h4, &v(&[1, 1, 0, 0]), &v(&[0, 1, 0, 0])),
            SaydModule::modular_pair(z2.clone(), &v(&[1, -1]), &v(&[1, 0])),
            SaydModule::modular_pair(z2, &v(&[1, 1]), &v(&[0, 1])),
        ];
        for m in &modules {
            assert!(m.check().all_passed());
            let d = SaydContramodule::dual_of(m);
            assert_eq!(d.dim(), m.dim());
            let r = d.check();
            assert!(r.all_passed(), "{}", r.render_text());
        }
    }

    #[test]
    fn evaluation_at_grouplike_is_the_dual_of_a_twisted_coaction() {
        let h = Arc::new(group_algebra_cyclic(2));
        let mut c = SaydContramodule::trivial(h.clone());
        c.alpha = Matrix::from_entries(1, 2, vec![(0, 1, rat(1))]);
        assert!(c.check().all_passed());
        let twisted = SaydModule::modular_pair(h, &[rat(1), rat(1)], &[rat(0), rat(1)]);
        assert_eq!(SaydContramodule::dual_of(&twisted), SaydContramodule { space: c.space.dual(), ..c });
    }

    #[test]
    fn summed_evaluation_breaks_counit() {
        let h = Arc::new(group_algebra_cyclic(2));
        let mut c = SaydContramodule::trivial(h);
        c.alpha = Matrix::from_entries(1, 2, vec![(0, 0, rat(1)), (0, 1, rat(1))]);
        let r = c.check();
        assert!(!r.passed("contramodule counit"));
    }
}
