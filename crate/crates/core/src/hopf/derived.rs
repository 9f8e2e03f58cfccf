//! Algebras built from the basic structures: the convolution algebra of a
//! coalgebra action and the crossed product of a module and comodule algebra.

use crate::error::{HccError, Result};
use crate::linear::{operator_matrix, solve_constrained_subspace, Matrix, Rational, Subspace, VectorSpace};
use crate::report::Report;

use super::algebra::Algebra;
use super::structures::{CoalgebraAction, ComoduleAlgebra, ModuleAlgebra};

/// `Hom_H(C, A)` with the convolution product, and `iota : A -> Hom_H(C, A)`.
///
/// Maps are stored in `Hom(C, A)` with coordinate `c * dim(A) + a`.
#[derive(Debug, Clone)]
pub struct ConvolutionAlgebra {
    pub algebra: Algebra,
    pub maps: Subspace,
    pub iota: Matrix,
    dim_c: usize,
    dim_a: usize,
}

impl ConvolutionAlgebra {
    pub fn new(action: &CoalgebraAction) -> Result<Self> {
        let coalg = &action.coalgebra;
        let alg = &action.algebra;
        let (dh, dc, da) = (coalg.hopf.dim(), coalg.dim(), alg.dim());
        let ic = Matrix::identity(dc);
        let ia = Matrix::identity(da);
        let constraints: Vec<Matrix> = (0..dh)
            .map(|h| coalg.acting(h).transpose().kron(&ia).sub(&ic.kron(&alg.acting(h))))
            .collect();
        let maps = solve_constrained_subspace(dc * da, &constraints);
        let d = maps.dim();
        let as_matrix = |v: &[Rational]| unvec(v, dc, da);
        let basis: Vec<Matrix> = (0..d).map(|k| as_matrix(&maps.basis_vector(k))).collect();

        let coords = |f: &Matrix, what: &str| -> Result<Vec<Rational>> {
            maps.coordinates(&vec_of(f)).ok_or_else(|| HccError::NotWellDefined {
                what: what.to_string(),
                residual: "result is not H-linear".into(),
            })
        };

        let mut mul = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let p = alg.algebra.mul.mul(&basis[i].kron(&basis[j])).mul(&coalg.comul);
                for (k, c) in coords(&p, "convolution product")?.into_iter().enumerate() {
                    mul.push((k, i * d + j, c));
                }
            }
        }
        let unit_map = alg.algebra.unit.mul(&coalg.counit);
        let unit = coords(&unit_map, "convolution unit")?;

        let mut iota = Vec::new();
        for a in 0..da {
            // iota(a)(c) = c . a
            let f = action.action.mul(&ic.kron(&unit_column(da, a)));
            for (k, c) in coords(&f, "iota")?.into_iter().enumerate() {
                iota.push((k, a, c));
            }
        }
        let algebra = Algebra::new(
            VectorSpace::standard("f", d),
            Matrix::from_entries(d, d * d, mul),
            Matrix::column_vector(&unit),
        );
        Ok(ConvolutionAlgebra {
            algebra,
            maps,
            iota: Matrix::from_entries(d, da, iota),
            dim_c: dc,
            dim_a: da,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Basis map `k` as a `dim(A) x dim(C)` matrix.
    pub fn map_matrix(&self, k: usize) -> Matrix {
        unvec(&self.maps.basis_vector(k), self.dim_c, self.dim_a)
    }

    pub fn check(&self, source: &ModuleAlgebra) -> Report {
        let mut r = Report::new("convolution algebra");
        self.algebra.check(&mut r, "");
        r.identity(
            "iota is multiplicative",
            &self.iota.mul(&source.algebra.mul),
            &self.algebra.mul.mul(&self.iota.kron(&self.iota)),
        );
        r.identity(
            "iota is unital",
            &self.iota.mul(&source.algebra.unit),
            &self.algebra.unit,
        );
        r
    }
}

/// `A # B` with `(a # b)(a' # b') = a (b_{-1} . a') # b_0 b'`.
pub fn crossed_product(a: &ModuleAlgebra, b: &ComoduleAlgebra) -> Result<Algebra> {
    if a.hopf != b.hopf {
        return Err(HccError::Precondition(
            "module algebra and comodule algebra are over different Hopf algebras".into(),
        ));
    }
    let (da, db) = (a.dim(), b.dim());
    let (co, act, ma, mb) = (
        b.coaction_slot(),
        a.action_slot(),
        a.algebra.mul_slot(),
        b.algebra.mul_slot(),
    );
    let mul = operator_matrix(&[da, db, da, db], &[da, db], |t| {
        t.apply(1, &co)
            .move_slot(3, 2)
            .apply(1, &act)
            .apply(0, &ma)
            .apply(1, &mb)
    });
    let unit = a.algebra.unit.kron(&b.algebra.unit);
    let alg = Algebra::new(a.algebra.space.tensor(&b.algebra.space), mul, unit);
    let mut r = Report::new("crossed product");
    alg.check(&mut r, "");
    if let Some(bad) = r.failed().next() {
        return Err(HccError::Structure(format!(
            "crossed product fails {}: {:?}",
            bad.name, bad.violation
        )));
    }
    Ok(alg)
}

fn unit_column(d: usize, i: usize) -> Matrix {
    Matrix::from_entries(d, 1, vec![(i, 0, crate::linear::rat(1))])
}

/// `dim(A) x dim(C)` matrix of a map stored at `c * dim(A) + a`.
fn unvec(v: &[Rational], dc: usize, da: usize) -> Matrix {
    let mut entries = Vec::new();
    for c in 0..dc {
        for a in 0..da {
            let x = &v[c * da + a];
            if !num_traits::Zero::is_zero(x) {
                entries.push((a, c, x.clone()));
            }
        }
    }
    Matrix::from_entries(da, dc, entries)
}

fn vec_of(f: &Matrix) -> Vec<Rational> {
    let (da, dc) = (f.nrows(), f.ncols());
    let mut v = vec![crate::linear::rat(0); da * dc];
    for (a, c, x) in f.entries() {
        v[c * da + a] = x.clone();
    }
    v
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::hopf::builtin::{group_algebra_cyclic, group_algebra_s3, sweedler_h4};

    #[test]
    fn convolution_algebra_over_group_algebras() {
        for h in [group_algebra_cyclic(2), group_algebra_s3(), sweedler_h4()] {
            let h = Arc::new(h);
            let action = CoalgebraAction::adjoint(h.clone());
            let conv = ConvolutionAlgebra::new(&action).unwrap();
            let r = conv.check(&action.algebra);
            assert!(r.all_passed(), "{}", r.render_text());
        }
    }

    #[test]
    fn ground_coalgebra_gives_original_algebra() {
        let h = Arc::new(group_algebra_cyclic(3));
        let action = CoalgebraAction::ground(ModuleAlgebra::adjoint(h));
        let conv = ConvolutionAlgebra::new(&action).unwrap();
        assert_eq!(conv.dim(), 3);
        assert_eq!(crate::linear::rank(&conv.iota), 3);
    }

    #[test]
    fn crossed_product_is_associative_and_dimension_multiplies() {
        for h in [group_algebra_cyclic(2), sweedler_h4()] {
            let h = Arc::new(h);
            let a = ModuleAlgebra::adjoint(h.clone());
            let b = ComoduleAlgebra::regular(h.clone());
            let ab = crossed_product(&a, &b).unwrap();
            assert_eq!(ab.dim(), h.dim() * h.dim());
        }
    }
}
