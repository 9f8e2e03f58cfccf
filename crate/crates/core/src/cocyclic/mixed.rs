//! Hochschild and cyclic cohomology: the `b`-complex, Connes' lambda-complex
//! and the `(b, B)` total complex.

use serde::Serialize;

use crate::error::{HccError, Result};
use crate::linear::{cokernel, kernel, solve, Matrix, Rational, Subspace};
use crate::report::Report;

use super::module::{is_zero_vector, CocyclicModule, Realization};

/// Cohomology in one degree with representative cocycles as columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cohomology {
    pub degree: usize,
    pub dim: usize,
    #[serde(skip)]
    pub representatives: Matrix,
}

/// `ker(d_n) / im(d_(n-1))` where the cocycles are given by `z` and the
/// previous differential has already been restricted to land in `C^n`.
fn cohomology_of(degree: usize, z_emb: &Matrix, z_ret: &Matrix, incoming: &Matrix) -> Cohomology {
    let image = z_ret.mul(incoming);
    let q = cokernel(&image);
    let representatives = z_emb.mul(&q.section());
    Cohomology {
        degree,
        dim: q.dim(),
        representatives,
    }
}

fn check_b_squared(x: &CocyclicModule, n: usize) -> Result<()> {
    if n >= 1 {
        let bb = x.hochschild_b(n).mul(&x.hochschild_b(n - 1));
        if !bb.is_zero() {
            return Err(HccError::Structure(format!(
                "{}: b^2 != 0 from degree {} to {}",
                x.name,
                n - 1,
                n + 1
            )));
        }
    }
    Ok(())
}

fn require_next(x: &CocyclicModule, n: usize) -> Result<()> {
    x.require_degree(n + 1)
}

/// Hochschild cohomology `ker b_n / im b_(n-1)`.
pub fn hochschild_cohomology(x: &CocyclicModule, n: usize) -> Result<Cohomology> {
    require_next(x, n)?;
    check_b_squared(x, n)?;
    let z = kernel(&x.hochschild_b(n));
    let incoming = if n == 0 {
        Matrix::zeros(x.dim(0), 0)
    } else {
        x.hochschild_b(n - 1)
    };
    Ok(cohomology_of(n, &z.embedding(), &z.retraction(), &incoming))
}

/// `ker(1 - lambda)` in degree `n`.
pub fn cyclic_cochains(x: &CocyclicModule, n: usize) -> Subspace {
    kernel(&Matrix::identity(x.dim(n)).sub(&x.lambda(n)))
}

/// Cyclic cohomology as the cohomology of `(ker(1 - lambda), b)`.
pub fn cyclic_cohomology(x: &CocyclicModule, n: usize) -> Result<Cohomology> {
    require_next(x, n)?;
    check_b_squared(x, n)?;
    let k = cyclic_cochains(x, n);
    let w = kernel(&x.hochschild_b(n).mul(&k.embedding()));
    let z_emb = k.embedding().mul(&w.embedding());
    let z_ret = w.retraction().mul(&k.retraction());
    let incoming = if n == 0 {
        Matrix::zeros(x.dim(0), 0)
    } else {
        x.hochschild_b(n - 1).mul(&cyclic_cochains(x, n - 1).embedding())
    };
    Ok(cohomology_of(n, &z_emb, &z_ret, &incoming))
}

/// `b` maps `ker(1 - lambda_n)` into `ker(1 - lambda_(n+1))` for every `n < cap`.
pub fn verify_lambda_compatibility(x: &CocyclicModule) -> Report {
    let mut r = Report::new(format!("lambda-complex of {}", x.name));
    for n in 0..x.cap() {
        let image = x.hochschild_b(n).mul(&cyclic_cochains(x, n).embedding());
        let lambda = x.lambda(n + 1);
        r.identity(format!("degree {n}: lambda b = b on cyclic cochains"), &lambda.mul(&image), &image);
    }
    r
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassKind {
    HochschildCocycle,
    CyclicCocycle,
}

/// A cochain claimed to be a Hochschild or cyclic cocycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainClass {
    pub degree: usize,
    pub representative: Vec<Rational>,
    pub kind: ClassKind,
}

impl CochainClass {
    /// Checks the cocycle conditions against `x`.
    pub fn new(x: &CocyclicModule, degree: usize, representative: Vec<Rational>, kind: ClassKind) -> Result<Self> {
        require_next(x, degree)?;
        if representative.len() != x.dim(degree) {
            return Err(HccError::Dimension(format!(
                "cochain of length {} in degree {degree} of dimension {}",
                representative.len(),
                x.dim(degree)
            )));
        }
        let b = x.hochschild_b(degree).apply(&representative);
        if !is_zero_vector(&b) {
            return Err(HccError::Precondition(format!("cochain in degree {degree} is not a b-cocycle")));
        }
        if kind == ClassKind::CyclicCocycle && x.lambda(degree).apply(&representative) != representative {
            return Err(HccError::Precondition(format!(
                "cochain in degree {degree} is not invariant under (-1)^n t"
            )));
        }
        Ok(CochainClass {
            degree,
            representative,
            kind,
        })
    }
}

/// A mixed complex `(C, b, B)` up to a degree cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedComplex {
    pub name: String,
    pub dims: Vec<usize>,
    /// `b[n] : C^n -> C^(n+1)` for `n < cap`.
    pub b: Vec<Matrix>,
    /// `big_b[n] : C^n -> C^(n-1)`; `big_b[0]` is `0 x dim(C^0)`.
    pub big_b: Vec<Matrix>,
}

impl MixedComplex {
    /// The whole cocyclic module with `B = N s_(n-1) (t - (-1)^n)`.
    pub fn of_cocyclic(x: &CocyclicModule) -> Self {
        MixedComplex {
            name: x.name.clone(),
            dims: (0..=x.cap()).map(|n| x.dim(n)).collect(),
            b: (0..x.cap()).map(|n| x.hochschild_b(n)).collect(),
            big_b: (0..=x.cap()).map(|n| x.connes_b(n)).collect(),
        }
    }

    /// Normalized cochains with `B = N s_(n-1) t`, and the subspaces they span.
    pub fn normalized(x: &CocyclicModule) -> Result<(Self, Vec<Subspace>)> {
        let subs: Vec<Subspace> = (0..=x.cap()).map(|n| x.normalized(n)).collect();
        let real: Vec<Realization> = subs.iter().cloned().map(Realization::Sub).collect();
        let mut b = Vec::new();
        for n in 0..x.cap() {
            b.push(real[n].descend(&x.hochschild_b(n), &real[n + 1], &format!("normalized b in degree {n}"))?);
        }
        let mut big_b = vec![Matrix::zeros(0, subs[0].dim())];
        for n in 1..=x.cap() {
            big_b.push(real[n].descend(
                &x.connes_b_normalized(n),
                &real[n - 1],
                &format!("normalized B in degree {n}"),
            )?);
        }
        let mc = MixedComplex {
            name: format!("normalized {}", x.name),
            dims: subs.iter().map(Subspace::dim).collect(),
            b,
            big_b,
        };
        Ok((mc, subs))
    }

    pub fn cap(&self) -> usize {
        self.dims.len() - 1
    }

    /// `b^2 = 0`, `B^2 = 0`, `bB + Bb = 0`.
    pub fn check(&self) -> Report {
        let mut r = Report::new(format!("mixed complex {}", self.name));
        let cap = self.cap();
        for n in 0..cap.saturating_sub(1) {
            r.identity(
                format!("degree {n}: b b = 0"),
                &self.b[n + 1].mul(&self.b[n]),
                &Matrix::zeros(self.dims[n + 2], self.dims[n]),
            );
        }
        for n in 2..=cap {
            r.identity(
                format!("degree {n}: B B = 0"),
                &self.big_b[n - 1].mul(&self.big_b[n]),
                &Matrix::zeros(self.dims[n - 2], self.dims[n]),
            );
        }
        for n in 0..cap {
            let mut lhs = self.big_b[n + 1].mul(&self.b[n]);
            if n >= 1 {
                lhs = lhs.add(&self.b[n - 1].mul(&self.big_b[n]));
            }
            r.identity(format!("degree {n}: b B + B b = 0"), &lhs, &Matrix::zeros(self.dims[n], self.dims[n]));
        }
        r
    }

    /// Block sizes of `Tot^n = C^n + C^(n-2) + ...`.
    pub fn tot_blocks(&self, n: usize) -> Vec<usize> {
        (0..=n / 2).map(|k| self.dims[n - 2 * k]).collect()
    }

    pub fn tot_dim(&self, n: usize) -> usize {
        self.tot_blocks(n).iter().sum()
    }

    /// `b + B : Tot^n -> Tot^(n+1)`.
    pub fn total_differential(&self, n: usize) -> Matrix {
        let src = self.tot_blocks(n);
        let tgt = self.tot_blocks(n + 1);
        let (rows, cols) = (tgt.iter().sum(), src.iter().sum());
        let offsets = |v: &[usize]| -> Vec<usize> {
            v.iter()
                .scan(0, |acc, &d| {
                    let o = *acc;
                    *acc += d;
                    Some(o)
                })
                .collect()
        };
        let (so, to) = (offsets(&src), offsets(&tgt));
        let mut d = Matrix::zeros(rows, cols);
        for k in 0..src.len() {
            let p = n - 2 * k;
            d = d.add(&self.b[p].embed_block(rows, cols, to[k], so[k]));
            if p >= 1 {
                d = d.add(&self.big_b[p].embed_block(rows, cols, to[k + 1], so[k]));
            }
        }
        d
    }

    /// Cyclic cohomology from the `(b, B)` total complex.
    pub fn cyclic_bb(&self, n: usize) -> Result<Cohomology> {
        if n + 1 > self.cap() {
            return Err(HccError::DegreeOutOfRange {
                degree: n,
                cap: self.cap(),
            });
        }
        let z = kernel(&self.total_differential(n));
        let incoming = if n == 0 {
            Matrix::zeros(self.tot_dim(0), 0)
        } else {
            self.total_differential(n - 1)
        };
        Ok(cohomology_of(n, &z.embedding(), &z.retraction(), &incoming))
    }

    /// `true` iff `v` is `(b + B)` of something in `Tot^(n-1)`.
    pub fn is_total_coboundary(&self, n: usize, v: &[Rational]) -> bool {
        if n == 0 {
            return is_zero_vector(v);
        }
        solve(&self.total_differential(n - 1), v).is_some()
    }

    /// Hochschild cohomology of the `b`-part.
    pub fn hochschild(&self, n: usize) -> Result<Cohomology> {
        if n + 1 > self.cap() {
            return Err(HccError::DegreeOutOfRange {
                degree: n,
                cap: self.cap(),
            });
        }
        let z = kernel(&self.b[n]);
        let incoming = if n == 0 {
            Matrix::zeros(self.dims[0], 0)
        } else {
            self.b[n - 1].clone()
        };
        Ok(cohomology_of(n, &z.embedding(), &z.retraction(), &incoming))
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocyclic::plain_algebra_cocyclic;
    use crate::hopf::{group_algebra_cyclic, Algebra};
    use crate::linear::{rank, rat, VectorSpace};

    fn plain(a: &Algebra, cap: usize) -> CocyclicModule {
        plain_algebra_cocyclic(a, &VectorSpace::ground(), cap).unwrap()
    }

    // dim ker b_n - rank b_(n-1), straight from ranks
    fn hh_by_rank(x: &CocyclicModule, n: usize) -> usize {
        let incoming = if n == 0 { 0 } else { rank(&x.hochschild_b(n - 1)) };
        x.dim(n) - rank(&x.hochschild_b(n)) - incoming
    }

    #[test]
    fn ground_field_hochschild_and_cyclic() {
        let x = plain(&Algebra::ground(), 4);
        assert_eq!(hochschild_cohomology(&x, 0).unwrap().dim, 1);
        assert_eq!(hochschild_cohomology(&x, 1).unwrap().dim, 0);
        let hc: Vec<usize> = (0..4).map(|n| cyclic_cohomology(&x, n).unwrap().dim).collect();
        assert_eq!(hc, vec![1, 0, 1, 0]);
        let point = CocyclicModule::point(4);
        let hc_point: Vec<usize> = (0..4).map(|n| cyclic_cohomology(&point, n).unwrap().dim).collect();
        assert_eq!(hc_point, hc);
    }

    #[test]
    fn z2_group_algebra_degree_zero() {
        let x = plain(&group_algebra_cyclic(2).algebra(), 3);
        assert_eq!(hochschild_cohomology(&x, 0).unwrap().dim, 2);
        assert_eq!(cyclic_cohomology(&x, 0).unwrap().dim, 2);
        for n in 0..3 {
            assert_eq!(hochschild_cohomology(&x, n).unwrap().dim, hh_by_rank(&x, n));
        }
    }

    #[test]
    fn lambda_and_bb_routes_agree() {
        let s3 = crate::hopf::group_algebra_s3().algebra();
        for x in [plain(&group_algebra_cyclic(3).algebra(), 3), plain(&Algebra::ground(), 4), plain(&s3, 2)] {
            assert!(verify_lambda_compatibility(&x).all_passed());
            let full = MixedComplex::of_cocyclic(&x);
            let (norm, _) = MixedComplex::normalized(&x).unwrap();
            for n in 0..x.cap() {
                let lambda = cyclic_cohomology(&x, n).unwrap().dim;
                assert_eq!(full.cyclic_bb(n).unwrap().dim, lambda, "degree {n}");
                assert_eq!(norm.cyclic_bb(n).unwrap().dim, lambda, "degree {n}");
                assert_eq!(norm.hochschild(n).unwrap().dim, hh_by_rank(&x, n));
            }
        }
    }

    #[test]
    fn representatives_are_cocycles() {
        let x = plain(&group_algebra_cyclic(2).algebra(), 3);
        for n in 0..3 {
            let hc = cyclic_cohomology(&x, n).unwrap();
            for k in 0..hc.dim {
                let rep = hc.representatives.column(k);
                CochainClass::new(&x, n, rep, ClassKind::CyclicCocycle).unwrap();
            }
        }
    }

    #[test]
    fn degree_beyond_cap_is_rejected() {
        let x = plain(&Algebra::ground(), 2);
        assert_eq!(
            cyclic_cohomology(&x, 2).unwrap_err(),
            HccError::DegreeOutOfRange { degree: 3, cap: 2 }
        );
        assert!(hochschild_cohomology(&x, 5).is_err());
    }

    #[test]
    fn cochain_class_rejects_non_cocycles() {
        let x = plain(&group_algebra_cyclic(2).algebra(), 3);
        // phi(a0, a1) = coefficient of 1 (x) 1 is not a b-cocycle
        let not_cyclic = vec![rat(1), rat(0), rat(0), rat(0)];
        assert!(CochainClass::new(&x, 1, not_cyclic, ClassKind::HochschildCocycle).is_err());
        let trace = vec![rat(0), rat(1)];
        assert!(CochainClass::new(&x, 0, trace, ClassKind::CyclicCocycle).is_ok());
    }
}
