//! Cyclic maps from the diagonal of a bicocyclic module to the plain cochains
//! of an algebra: `Psi` into the convolution algebra and `Phi` into the
//! crossed product, each with values either scalar (through a pairing) or in
//! `L(N, M)` (through its projection).

use crate::cocyclic::{plain_algebra_cocyclic, pullback, verify_cyclic_map, CocyclicModule};
use crate::error::{HccError, Result};
use crate::hopf::{Algebra, ComoduleAlgebra, ConvolutionAlgebra, ModuleAlgebra};
use crate::linear::rational::format_rational;
use crate::linear::{operator_matrix, operator_on_columns, Matrix, SlotMap, Tensor, VectorSpace};
use crate::report::Report;

/// `N (x) M -> V`: the pairing (`V = Q`) or the projection onto `L(N, M)`.
#[derive(Debug, Clone)]
pub struct Coupling {
    pub values: VectorSpace,
    /// `dim(V) x dim(N) dim(M)`, column index `n * dim(M) + m`.
    pub matrix: Matrix,
    pub dim_n: usize,
    pub dim_m: usize,
}

impl Coupling {
    pub fn new(values: VectorSpace, matrix: Matrix, dim_n: usize, dim_m: usize) -> Self {
        assert_eq!((matrix.nrows(), matrix.ncols()), (values.dim(), dim_n * dim_m), "coupling shape");
        Coupling {
            values,
            matrix,
            dim_n,
            dim_m,
        }
    }

    fn slot(&self) -> SlotMap {
        SlotMap::new(&self.matrix, &[self.dim_n, self.dim_m], &[self.values.dim()])
    }

    pub fn dim(&self) -> usize {
        self.values.dim()
    }
}

/// Degreewise matrices of a map of cocyclic modules with its source and target.
#[derive(Debug, Clone)]
pub struct CyclicMap {
    pub label: String,
    pub maps: Vec<Matrix>,
    pub target: CocyclicModule,
}

impl CyclicMap {
    pub fn verify(&self, source: &CocyclicModule) -> Report {
        verify_cyclic_map(&self.label, &self.maps, source, &self.target)
    }
}

/// `Psi(phi (x) (n (x) c^0 .. c^q))(f^0 .. f^q) = <n | phi(f^0(c^0) .. f^q(c^q))>`
/// on the diagonal of `C_H(A, M) (x) C_H(C, N)`.
///
/// `x` must be the contramodule complex of `A` and `y` the coalgebra complex
/// of `C`, both at the same cap. Fails if the `(x)_H` relations of `y` are not
/// annihilated.
pub fn psi_map(
    conv: &ConvolutionAlgebra,
    dim_a: usize,
    dim_c: usize,
    coupling: &Coupling,
    x: &CocyclicModule,
    y: &CocyclicModule,
    cap: usize,
) -> Result<CyclicMap> {
    x.require_degree(cap)?;
    y.require_degree(cap)?;
    let db = conv.dim();
    let (dm, dn, dl) = (coupling.dim_m, coupling.dim_n, coupling.dim());
    let mut g = Vec::new();
    for f in 0..db {
        for (a, c, v) in conv.map_matrix(f).entries() {
            g.push((f, a * dim_c + c, v.clone()));
        }
    }
    let g = SlotMap::new(&Matrix::from_entries(db, dim_a * dim_c, g), &[dim_a, dim_c], &[db]);
    let v = coupling.slot();
    let mut maps = Vec::new();
    for n in 0..=cap {
        let k = n + 1;
        let mut src = vec![dim_a; k];
        src.push(dm);
        src.push(dn);
        src.extend(std::iter::repeat_n(dim_c, k));
        let mut tgt = vec![db; k];
        tgt.push(dl);
        // (a.., m, n, c..) -> (a0 c0 .. an cn, n, m)
        let mut perm = Vec::with_capacity(2 * k + 2);
        for i in 0..k {
            perm.push(i);
            perm.push(k + 2 + i);
        }
        perm.push(k + 1);
        perm.push(k);
        let f = |t: Tensor| {
            let mut t = t.permute(&perm);
            for i in 0..k {
                t = t.apply(i, &g);
            }
            t.apply(k, &v)
        };
        let (rx, ry) = (&x.realizations[n], &y.realizations[n]);
        if let Some(rel) = ry.null_relations() {
            let killed = operator_on_columns(&rx.lift().kron(rel), &src, &tgt, f);
            let first = killed.entries().next().map(|(i, j, val)| (i, j, format_rational(val)));
            if let Some((i, j, val)) = first {
                return Err(HccError::NotWellDefined {
                    what: format!("Psi in degree {n}"),
                    residual: format!("relation {j} maps to {val} at cochain coordinate {i}"),
                });
            }
        }
        maps.push(operator_on_columns(&rx.lift().kron(&ry.lift()), &src, &tgt, f));
    }
    let target = plain_algebra_cocyclic(&conv.algebra, &coupling.values, cap)?;
    Ok(CyclicMap {
        label: "Psi".into(),
        maps,
        target,
    })
}

/// `iota^* : C^n(B, V) -> C^n(A, V)` for an algebra map `iota : A -> B`.
pub fn pullback_along(iota: &Matrix, source: &Algebra, values: &VectorSpace, cap: usize) -> Result<CyclicMap> {
    let mut maps = Vec::new();
    let mut power = Matrix::identity(1);
    for _ in 0..=cap {
        power = power.kron(iota);
        maps.push(pullback(&power, values.dim()));
    }
    Ok(CyclicMap {
        label: "iota*".into(),
        maps,
        target: plain_algebra_cocyclic(source, values, cap)?,
    })
}

/// `Phi(psi (x) phi)(a^0 b^0 .. a^n b^n) =
/// <psi(b^0_0 .. b^n_0) | phi(S^-1(b^0_-1 .. b^n_-1) . a^0, .., S^-1(b^n_(-n-1)) . a^n)>`
/// on the diagonal of `^H C(B, N) (x) C_H(A, M)`, into cochains on `A # B`.
///
/// `b^k` carries `k + 1` coaction legs; slot `i` multiplies the legs `-(i+1)`
/// of `b^i, .., b^n` in that order.
pub fn phi_map(
    a: &ModuleAlgebra,
    b: &ComoduleAlgebra,
    crossed: &Algebra,
    coupling: &Coupling,
    x: &CocyclicModule,
    y: &CocyclicModule,
    cap: usize,
) -> Result<CyclicMap> {
    x.require_degree(cap)?;
    y.require_degree(cap)?;
    let hopf = &a.hopf;
    let (dh, da, db) = (hopf.dim(), a.dim(), b.dim());
    let (dm, dn, dl) = (coupling.dim_m, coupling.dim_n, coupling.dim());
    let (mul, s_inv, act) = (hopf.mul_slot(), hopf.antipode_inv_slot(), a.action_slot());
    let v = coupling.slot();
    let mut maps = Vec::new();
    for n in 0..=cap {
        let k = n + 1;
        // b -> b_(-k') .. b_(-1) (x) b_0 for k' = j + 1 legs
        let expand: Vec<SlotMap> = (0..k)
            .map(|j| {
                let m = hopf.iterated_comul(j).kron(&Matrix::identity(db)).mul(&b.coaction);
                let mut out = vec![dh; j + 1];
                out.push(db);
                SlotMap::new(&m, &[db], &out)
            })
            .collect();
        // start of the block of b^j after expansion
        let block = |j: usize| k + j * (j + 3) / 2;
        let mut order = Vec::new();
        for i in 0..k {
            for j in i..k {
                order.push(block(j) + (j - i));
            }
            order.push(i);
        }
        for j in 0..k {
            order.push(block(j) + j + 1);
        }
        let mut src_perm: Vec<usize> = (0..k).map(|i| 2 * i).collect();
        src_perm.extend((0..k).map(|i| 2 * i + 1));
        let t_matrix = operator_matrix(&[da, db].repeat(k), &[vec![db; k], vec![da; k]].concat(), |t| {
            let mut t = t.permute(&src_perm);
            for j in (0..k).rev() {
                t = t.apply(k + j, &expand[j]);
            }
            let mut t = t.permute(&order);
            for i in 0..k {
                // legs for slot i, then a^i
                for _ in i + 1..k {
                    t = t.apply(i, &mul);
                }
                t = t.apply(i, &s_inv).apply(i, &act);
            }
            // (a'.., b_0..) -> (b_0.., a'..)
            let mut back: Vec<usize> = (k..2 * k).collect();
            back.extend(0..k);
            t.permute(&back)
        });
        // (b.., n) (x) (a.., m) -> functional on (b.., a..) valued in V
        let mut src = vec![db; k];
        src.push(dn);
        src.extend(std::iter::repeat_n(da, k));
        src.push(dm);
        let mut tgt = vec![db; k];
        tgt.extend(std::iter::repeat_n(da, k));
        tgt.push(dl);
        let (rx, ry) = (&x.realizations[n], &y.realizations[n]);
        let values = operator_on_columns(&rx.lift().kron(&ry.lift()), &src, &tgt, |t| {
            t.move_slot(k, 2 * k).apply(2 * k, &v)
        });
        maps.push(pullback(&t_matrix, dl).mul(&values));
    }
    let target = plain_algebra_cocyclic(crossed, &coupling.values, cap)?;
    Ok(CyclicMap {
        label: "Phi".into(),
        maps,
        target,
    })
}

/// `(id (x) e) f` degreewise: post-composition of `V`-valued cochains with `e : V -> W`.
pub fn postcompose(maps: &[Matrix], e: &Matrix) -> Vec<Matrix> {
    maps.iter()
        .map(|m| {
            let k = m.nrows() / e.ncols();
            Matrix::identity(k).kron(e).mul(m)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::cocyclic::{algebra_contra_cocyclic, coalgebra_cocyclic, comodule_algebra_cocyclic};
    use crate::coeff::{collapse_map, CompatiblePair, Contratensor, SaydModule};
    use crate::cup::Bicocyclic;
    use crate::hopf::{crossed_product, group_algebra_cyclic, CoalgebraAction, HopfAlgebra};
    use crate::linear::{rat, Rational};

    fn z2() -> Arc<HopfAlgebra> {
        Arc::new(group_algebra_cyclic(2))
    }

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    fn pairs(h: &Arc<HopfAlgebra>) -> Vec<CompatiblePair> {
        vec![
            crate::coeff::trivial_coefficients(h.clone()),
            CompatiblePair::evaluation(SaydModule::modular_pair(h.clone(), &v(&[1, -1]), &v(&[1, 0]))),
        ]
    }

    fn couplings(pair: &CompatiblePair) -> (Coupling, Coupling, Matrix) {
        let (dn, dm) = (pair.module.dim(), pair.contramodule.dim());
        let scalar = Coupling::new(VectorSpace::standard("k", 1), pair.pairing.clone(), dn, dm);
        let l = Contratensor::new(&pair.module, &pair.contramodule).unwrap();
        let e = collapse_map(pair, &l).unwrap();
        (scalar, Coupling::new(l.space.clone(), l.projection.clone(), dn, dm), e)
    }

    #[test]
    fn psi_is_a_cyclic_map_and_factors_through_l() {
        let h = z2();
        let cap = 3;
        let action = CoalgebraAction::adjoint(h.clone());
        let conv = ConvolutionAlgebra::new(&action).unwrap();
        for pair in pairs(&h) {
            let x = algebra_contra_cocyclic(&action.algebra, &pair.contramodule, cap).unwrap();
            let y = coalgebra_cocyclic(&action.coalgebra, &pair.module, cap).unwrap();
            let d = Bicocyclic::new(x.clone(), y.clone()).unwrap().diagonal();
            let (scalar, l, e) = couplings(&pair);
            let psi = psi_map(&conv, action.algebra.dim(), action.coalgebra.dim(), &scalar, &x, &y, cap).unwrap();
            let r = psi.verify(&d);
            assert!(r.all_passed(), "{}", r.render_text());
            let psi_l = psi_map(&conv, action.algebra.dim(), action.coalgebra.dim(), &l, &x, &y, cap).unwrap();
            let r = psi_l.verify(&d);
            assert!(r.all_passed(), "{}", r.render_text());
            assert_eq!(postcompose(&psi_l.maps, &e), psi.maps);
            let back = pullback_along(&conv.iota, &action.algebra.algebra, &scalar.values, cap).unwrap();
            let r = back.verify(&psi.target);
            assert!(r.all_passed(), "{}", r.render_text());
        }
    }

    #[test]
    fn phi_is_a_cyclic_map_and_factors_through_l() {
        let h = z2();
        let cap = 3;
        let a = ModuleAlgebra::adjoint(h.clone());
        let b = ComoduleAlgebra::regular(h.clone());
        let crossed = crossed_product(&a, &b).unwrap();
        for pair in pairs(&h) {
            let x = comodule_algebra_cocyclic(&b, &pair.module, cap).unwrap();
            let y = algebra_contra_cocyclic(&a, &pair.contramodule, cap).unwrap();
            let d = Bicocyclic::new(x.clone(), y.clone()).unwrap().diagonal();
            let (scalar, l, e) = couplings(&pair);
            let phi = phi_map(&a, &b, &crossed, &scalar, &x, &y, cap).unwrap();
            let r = phi.verify(&d);
            assert!(r.all_passed(), "{}", r.render_text());
            let phi_l = phi_map(&a, &b, &crossed, &l, &x, &y, cap).unwrap();
            let r = phi_l.verify(&d);
            assert!(r.all_passed(), "{}", r.render_text());
            assert_eq!(postcompose(&phi_l.maps, &e), phi.maps);
        }
    }

    #[test]
    fn degree_zero_psi_over_the_ground_field() {
        let h = Arc::new(crate::hopf::trivial_hopf());
        let action = CoalgebraAction::adjoint(h.clone());
        let conv = ConvolutionAlgebra::new(&action).unwrap();
        let pair = crate::coeff::trivial_coefficients(h);
        let x = algebra_contra_cocyclic(&action.algebra, &pair.contramodule, 1).unwrap();
        let y = coalgebra_cocyclic(&action.coalgebra, &pair.module, 1).unwrap();
        let (scalar, _, _) = couplings(&pair);
        let psi = psi_map(&conv, 1, 1, &scalar, &x, &y, 1).unwrap();
        assert_eq!(psi.maps[0], Matrix::identity(1));
        assert_eq!(psi.maps[1], Matrix::identity(1));
    }
}
