//! Finite-dimensional Hopf algebras as structure-constant matrices.

use num_traits::Zero;

use crate::linear::{operator_matrix, Matrix, Rational, SlotMap, Tensor, VectorSpace};
use crate::report::Report;

/// An associative unital algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    pub space: VectorSpace,
    /// `A (x) A -> A`
    pub mul: Matrix,
    /// `Q -> A`
    pub unit: Matrix,
}

impl Algebra {
    pub fn new(space: VectorSpace, mul: Matrix, unit: Matrix) -> Self {
        let d = space.dim();
        assert_eq!((mul.nrows(), mul.ncols()), (d, d * d), "multiplication shape");
        assert_eq!((unit.nrows(), unit.ncols()), (d, 1), "unit shape");
        Algebra { space, mul, unit }
    }

    /// The ground field.
    pub fn ground() -> Self {
        Algebra::new(VectorSpace::ground(), Matrix::identity(1), Matrix::identity(1))
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn mul_slot(&self) -> SlotMap {
        let d = self.dim();
        SlotMap::new(&self.mul, &[d, d], &[d])
    }

    pub fn unit_vector(&self) -> Vec<Rational> {
        self.unit.column(0)
    }

    /// Index of the unit if it is a basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        let u = self.unit_vector();
        let nz: Vec<usize> = (0..u.len()).filter(|&i| !u[i].is_zero()).collect();
        (nz.len() == 1 && u[nz[0]] == crate::linear::rat(1)).then(|| nz[0])
    }

    /// Product of two vectors.
    pub fn product(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut ab = Vec::with_capacity(a.len() * b.len());
        for x in a {
            for y in b {
                ab.push(x * y);
            }
        }
        self.mul.apply(&ab)
    }

    pub fn check(&self, report: &mut Report, prefix: &str) {
        let d = self.dim();
        let id = Matrix::identity(d);
        report.identity(
            format!("{prefix}associativity"),
            &self.mul.mul(&self.mul.kron(&id)),
            &self.mul.mul(&id.kron(&self.mul)),
        );
        report.identity(format!("{prefix}left unit"), &self.mul.mul(&self.unit.kron(&id)), &id);
        report.identity(format!("{prefix}right unit"), &self.mul.mul(&id.kron(&self.unit)), &id);
    }
}

/// `(H, mu, eta, Delta, epsilon, S, S^-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfAlgebra {
    pub name: String,
    pub space: VectorSpace,
    pub mul: Matrix,
    pub unit: Matrix,
    pub comul: Matrix,
    pub counit: Matrix,
    pub antipode: Matrix,
    pub antipode_inv: Matrix,
}

impl HopfAlgebra {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn algebra(&self) -> Algebra {
        Algebra::new(self.space.clone(), self.mul.clone(), self.unit.clone())
    }

    pub fn mul_slot(&self) -> SlotMap {
        let d = self.dim();
        SlotMap::new(&self.mul, &[d, d], &[d])
    }

    pub fn comul_slot(&self) -> SlotMap {
        let d = self.dim();
        SlotMap::new(&self.comul, &[d], &[d, d])
    }

    pub fn counit_slot(&self) -> SlotMap {
        SlotMap::new(&self.counit, &[self.dim()], &[1])
    }

    pub fn antipode_slot(&self) -> SlotMap {
        let d = self.dim();
        SlotMap::new(&self.antipode, &[d], &[d])
    }

    pub fn antipode_inv_slot(&self) -> SlotMap {
        let d = self.dim();
        SlotMap::new(&self.antipode_inv, &[d], &[d])
    }

    /// `Delta^(k) : H -> H^(x)(k+1)`, with `Delta^(0) = id`.
    pub fn iterated_comul(&self, k: usize) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::identity(d);
        for i in 0..k {
            // split the last leg
            let left = Matrix::identity(d.pow(i as u32));
            m = left.kron(&self.comul).mul(&m);
        }
        m
    }

    /// `swap : H (x) H -> H (x) H`.
    pub fn swap(&self) -> Matrix {
        swap_matrix(self.dim(), self.dim())
    }

    pub fn unit_vector(&self) -> Vec<Rational> {
        self.unit.column(0)
    }

    pub fn counit_value(&self, h: usize) -> Rational {
        self.counit.get(0, h)
    }

    /// Verifies every Hopf algebra axiom as an exact matrix identity.
    pub fn check_axioms(&self) -> Report {
        let mut r = Report::new(format!("hopf algebra {}", self.name));
        let d = self.dim();
        let id = Matrix::identity(d);
        self.algebra().check(&mut r, "");
        let (m, e, dl, eps) = (&self.mul, &self.unit, &self.comul, &self.counit);
        r.identity("coassociativity", &dl.kron(&id).mul(dl), &id.kron(dl).mul(dl));
        r.identity("left counit", &eps.kron(&id).mul(dl), &id);
        r.identity("right counit", &id.kron(eps).mul(dl), &id);
        let middle_swap = id.kron(&self.swap()).kron(&id);
        r.identity(
            "comultiplication is multiplicative",
            &dl.mul(m),
            &m.kron(m).mul(&middle_swap).mul(&dl.kron(dl)),
        );
        r.identity("comultiplication is unital", &dl.mul(e), &e.kron(e));
        r.identity("counit is multiplicative", &eps.mul(m), &eps.kron(eps));
        r.identity("counit is unital", &eps.mul(e), &Matrix::identity(1));
        let unit_counit = e.mul(eps);
        r.identity(
            "left antipode",
            &m.mul(&self.antipode.kron(&id)).mul(dl),
            &unit_counit,
        );
        r.identity(
            "right antipode",
            &m.mul(&id.kron(&self.antipode)).mul(dl),
            &unit_counit,
        );
        r.identity("S^-1 S = id", &self.antipode_inv.mul(&self.antipode), &id);
        r.identity("S S^-1 = id", &self.antipode.mul(&self.antipode_inv), &id);
        r
    }

    /// Left multiplication by basis element `h` as a `d x d` matrix.
    pub fn left_mul(&self, h: usize) -> Matrix {
        let d = self.dim();
        operator_matrix(&[d], &[d], |t| {
            t.insert_basis_slot(0, d, h).apply(0, &self.mul_slot())
        })
    }
}

/// `swap : V (x) W -> W (x) V`.
pub fn swap_matrix(dv: usize, dw: usize) -> Matrix {
    operator_matrix(&[dv, dw], &[dw, dv], |t: Tensor| t.permute(&[1, 0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtin::{group_algebra_cyclic, sweedler_h4, trivial_hopf};

    #[test]
    fn trivial_hopf_passes() {
        assert!(trivial_hopf().check_axioms().all_passed());
    }

    #[test]
    fn iterated_comul_of_grouplike() {
        let h = group_algebra_cyclic(2);
        let d3 = h.iterated_comul(2);
        // g -> g (x) g (x) g
        assert_eq!(d3.column(1).iter().filter(|x| !x.is_zero()).count(), 1);
        assert_eq!(d3.get(7, 1), crate::linear::rat(1));
    }

    #[test]
    fn iterated_comul_is_coassociative_split() {
        let h = sweedler_h4();
        let id = Matrix::identity(4);
        let two = h.iterated_comul(2);
        assert_eq!(two, h.comul.kron(&id).mul(&h.comul));
    }
}
