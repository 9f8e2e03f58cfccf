//! The cocyclic modules attached to Hopf-symmetric coalgebras and algebras.
//!
//! Every construction writes its operators on a raw tensor space (`M (x) C^(n+1)`
//! or maps out of `A^(n+1)`) and descends them to the realized space.

use crate::coeff::{SaydContramodule, SaydModule};
use crate::error::Result;
use crate::hopf::{Algebra, ComoduleAlgebra, HopfAlgebra, ModuleAlgebra, ModuleCoalgebra};
use crate::linear::{operator_matrix, solve_constrained_subspace, Matrix, SlotMap, Tensor, VectorSpace};
use crate::report::Report;

use super::module::{pullback, twisted_pullback, CocyclicModule, Realization};

/// `[h0 .. h(dh-1)]` where `D(h)` is the diagonal action of `h` on `X^(x)k`,
/// for a left action `H (x) X -> X`.
pub fn diagonal_action(hopf: &HopfAlgebra, action: &Matrix, dx: usize, k: usize) -> Vec<Matrix> {
    let dh = hopf.dim();
    let act = SlotMap::new(action, &[dh, dx], &[dx]);
    let legs = SlotMap::new(&hopf.iterated_comul(k - 1), &[dh], &vec![dh; k]);
    let mut perm = Vec::with_capacity(2 * k);
    for i in 0..k {
        perm.push(i);
        perm.push(k + i);
    }
    let mut src = vec![dh];
    src.extend(std::iter::repeat_n(dx, k));
    let full = operator_matrix(&src, &vec![dx; k], |t| {
        let mut t = t.apply(0, &legs).permute(&perm);
        for i in 0..k {
            t = t.apply(i, &act);
        }
        t
    });
    let n = dx.pow(k as u32);
    (0..dh).map(|h| full.block(0, n, h * n, n)).collect()
}

/// Slices `C_j` of the diagonal left coaction `x -> x_-1 (x) x_0` on `X^(x)k`,
/// `x_-1 = (x^0)_-1 ... (x^(k-1))_-1`.
pub fn diagonal_coaction(hopf: &HopfAlgebra, coaction: &Matrix, dx: usize, k: usize) -> Vec<Matrix> {
    let dh = hopf.dim();
    let co = SlotMap::new(coaction, &[dx], &[dh, dx]);
    let mul = hopf.mul_slot();
    let mut perm: Vec<usize> = (0..k).map(|i| 2 * i).collect();
    perm.extend((0..k).map(|i| 2 * i + 1));
    let mut tgt = vec![dh];
    tgt.extend(std::iter::repeat_n(dx, k));
    let full = operator_matrix(&vec![dx; k], &tgt, |t| {
        let mut t = t;
        for i in 0..k {
            t = t.apply(2 * i, &co);
        }
        let mut t = t.permute(&perm);
        for _ in 1..k {
            t = t.apply(0, &mul);
        }
        t
    });
    let n = dx.pow(k as u32);
    (0..dh).map(|j| full.block(j * n, n, 0, n)).collect()
}

fn unit_insert(alg: &Algebra) -> SlotMap {
    SlotMap::new(&alg.unit, &[], &[alg.dim()])
}

fn dims(first: &[usize], d: usize, k: usize) -> Vec<usize> {
    let mut v = first.to_vec();
    v.extend(std::iter::repeat_n(d, k));
    v
}

/// `M (x)_H C^(x)(n+1)` with the coalgebra faces, counit degeneracies and the
/// twisted rotation `m_0 (x) c^1 .. c^n (x) m_-1 . c^0`.
pub fn coalgebra_cocyclic(c: &ModuleCoalgebra, m: &SaydModule, cap: usize) -> Result<CocyclicModule> {
    let hopf = &c.hopf;
    let (dh, dc, dm) = (hopf.dim(), c.dim(), m.dim());
    let realizations = (0..=cap)
        .map(|n| {
            let k = n + 1;
            let diag = diagonal_action(hopf, &c.action, dc, k);
            let id_c = Matrix::identity(dc.pow(k as u32));
            let id_m = Matrix::identity(dm);
            let blocks: Vec<Matrix> = (0..dh)
                .map(|h| m.acting(h).kron(&id_c).sub(&id_m.kron(&diag[h])))
                .collect();
            Realization::quotient(Matrix::hstack(dm * id_c.nrows(), &blocks))
        })
        .collect();
    let raw_spaces = (0..=cap)
        .map(|n| m.space.tensor(&c.space.tensor_power(n + 1)))
        .collect();
    let (comul, act, co) = (c.comul_slot(), c.action_slot(), m.coaction_slot());
    let counit = SlotMap::new(&c.counit, &[dc], &[]);
    let rotate = |t: Tensor| t.apply(0, &co).move_slot(0, 1).apply(1, &act);
    CocyclicModule::from_raw(
        format!("C_H({}, M)", hopf.name),
        raw_spaces,
        realizations,
        |n, i| {
            operator_matrix(&dims(&[dm], dc, n + 1), &dims(&[dm], dc, n + 2), |t| {
                if i <= n {
                    t.apply(1 + i, &comul)
                } else {
                    rotate(t.apply(1, &comul)).move_slot(1, n + 2)
                }
            })
        },
        |n, j| operator_matrix(&dims(&[dm], dc, n + 1), &dims(&[dm], dc, n), |t| t.apply(j + 2, &counit)),
        |n| operator_matrix(&dims(&[dm], dc, n + 1), &dims(&[dm], dc, n + 1), |t| rotate(t).move_slot(1, n + 1)),
    )
}

/// Functionals on `M (x) A^(x)(n+1)` with `phi(m.h (x) a) = phi(m (x) h.a)`.
pub fn algebra_module_cocyclic(a: &ModuleAlgebra, m: &SaydModule, cap: usize) -> Result<CocyclicModule> {
    let hopf = &a.hopf;
    let (dh, da, dm) = (hopf.dim(), a.dim(), m.dim());
    let realizations = (0..=cap)
        .map(|n| {
            let k = n + 1;
            let diag = diagonal_action(hopf, &a.action, da, k);
            let id_a = Matrix::identity(da.pow(k as u32));
            let id_m = Matrix::identity(dm);
            let constraints: Vec<Matrix> = (0..dh)
                .map(|h| m.acting(h).kron(&id_a).sub(&id_m.kron(&diag[h])).transpose())
                .collect();
            Realization::Sub(solve_constrained_subspace(dm * id_a.nrows(), &constraints))
        })
        .collect();
    let raw_spaces = (0..=cap)
        .map(|n| m.space.tensor(&a.algebra.space.tensor_power(n + 1)).dual())
        .collect();
    let (mul, act, co) = (a.algebra.mul_slot(), a.action_slot(), m.coaction_slot());
    let s_inv = hopf.antipode_inv_slot();
    let unit = unit_insert(&a.algebra);
    // m (x) a^0 .. a^k -> m_0 (x) S^-1(m_-1) . a^k (x) a^0 .. a^(k-1)
    let rotate = |t: Tensor, last: usize| {
        t.apply(0, &co)
            .move_slot(last + 2, 2)
            .move_slot(0, 1)
            .apply(1, &s_inv)
            .apply(1, &act)
    };
    CocyclicModule::from_raw(
        format!("C_H(A, M) over {}", hopf.name),
        raw_spaces,
        realizations,
        |n, i| {
            operator_matrix(&dims(&[dm], da, n + 2), &dims(&[dm], da, n + 1), |t| {
                if i <= n {
                    t.apply(1 + i, &mul)
                } else {
                    rotate(t, n + 1).apply(1, &mul)
                }
            })
            .transpose()
        },
        |n, j| operator_matrix(&dims(&[dm], da, n), &dims(&[dm], da, n + 1), |t| t.apply(j + 2, &unit)).transpose(),
        |n| operator_matrix(&dims(&[dm], da, n + 1), &dims(&[dm], da, n + 1), |t| rotate(t, n)).transpose(),
    )
}

/// Colinear maps `B^(x)(n+1) -> N` for the diagonal coaction on the source.
pub fn comodule_algebra_cocyclic(b: &ComoduleAlgebra, nmod: &SaydModule, cap: usize) -> Result<CocyclicModule> {
    let hopf = &b.hopf;
    let (dh, db, dn) = (hopf.dim(), b.dim(), nmod.dim());
    let n_slices: Vec<Matrix> = (0..dh).map(|j| nmod.coaction.block(j * dn, dn, 0, dn)).collect();
    let realizations = (0..=cap)
        .map(|n| {
            let k = n + 1;
            let diag = diagonal_coaction(hopf, &b.coaction, db, k);
            let dx = db.pow(k as u32);
            let constraints: Vec<Matrix> = (0..dh)
                .map(|j| {
                    diag[j]
                        .transpose()
                        .kron(&Matrix::identity(dn))
                        .sub(&Matrix::identity(dx).kron(&n_slices[j]))
                })
                .collect();
            Realization::Sub(solve_constrained_subspace(dx * dn, &constraints))
        })
        .collect();
    let raw_spaces = (0..=cap)
        .map(|n| b.algebra.space.tensor_power(n + 1).dual().tensor(&nmod.space))
        .collect();
    let (mul, co) = (b.algebra.mul_slot(), b.coaction_slot());
    let unit = unit_insert(&b.algebra);
    let acting: Vec<Matrix> = (0..dh).map(|h| nmod.acting(h)).collect();
    // a^0 .. a^k -> (a^k)_-1 (x) (a^k)_0 (x) a^0 .. a^(k-1)
    let rotate = |t: Tensor, last: usize| t.apply(last, &co).move_slot(last + 1, 0).move_slot(last + 1, 0);
    let twisted = |g: Matrix, rows: usize| -> Matrix {
        let terms: Vec<(Matrix, Matrix)> = (0..dh)
            .map(|h| (g.block(h * rows, rows, 0, g.ncols()), acting[h].clone()))
            .collect();
        twisted_pullback(&terms)
    };
    CocyclicModule::from_raw(
        format!("^H C(B, N) over {}", hopf.name),
        raw_spaces,
        realizations,
        |n, i| {
            let src = vec![db; n + 2];
            if i <= n {
                pullback(&operator_matrix(&src, &vec![db; n + 1], |t| t.apply(i, &mul)), dn)
            } else {
                let g = operator_matrix(&src, &dims(&[dh], db, n + 1), |t| {
                    t.apply(n + 1, &co)
                        .move_slot(n + 2, 0)
                        .apply(0, &mul)
                        .move_slot(n + 1, 0)
                });
                twisted(g, db.pow(n as u32 + 1))
            }
        },
        |n, j| pullback(&operator_matrix(&vec![db; n], &vec![db; n + 1], |t| t.apply(j + 1, &unit)), dn),
        |n| {
            let g = operator_matrix(&vec![db; n + 1], &dims(&[dh], db, n + 1), |t| rotate(t, n));
            twisted(g, db.pow(n as u32 + 1))
        },
    )
}

/// `Hom_H(A^(x)(n+1), M)` for a SAYD contramodule `M`, with the last face and
/// the rotation assembled through `alpha`.
pub fn algebra_contra_cocyclic(a: &ModuleAlgebra, m: &SaydContramodule, cap: usize) -> Result<CocyclicModule> {
    let hopf = &a.hopf;
    let (dh, da, dm) = (hopf.dim(), a.dim(), m.dim());
    let realizations = (0..=cap)
        .map(|n| {
            let k = n + 1;
            let diag = diagonal_action(hopf, &a.action, da, k);
            let dx = da.pow(k as u32);
            let constraints: Vec<Matrix> = (0..dh)
                .map(|h| {
                    diag[h]
                        .transpose()
                        .kron(&Matrix::identity(dm))
                        .sub(&Matrix::identity(dx).kron(&m.acting(h)))
                })
                .collect();
            Realization::Sub(solve_constrained_subspace(dx * dm, &constraints))
        })
        .collect();
    let raw_spaces = (0..=cap)
        .map(|n| a.algebra.space.tensor_power(n + 1).dual().tensor(&m.space))
        .collect();
    let (mul, act) = (a.algebra.mul_slot(), a.action_slot());
    let s_inv = hopf.antipode_inv_slot();
    let unit = unit_insert(&a.algebra);
    // alpha_k = alpha(e_k^* (x) -)
    let alphas: Vec<Matrix> = (0..dh).map(|k| m.alpha.block(0, dm, k * dm, dm)).collect();
    // a^0 .. a^k -> S^-1(h_j) . a^k (x) a^0 .. a^(k-1)
    let rotate = |t: Tensor, j: usize, last: usize| {
        t.insert_basis_slot(0, dh, j)
            .move_slot(last + 1, 1)
            .apply(0, &s_inv)
            .apply(0, &act)
    };
    let through_alpha = |src: usize, tgt: usize, with_mul: bool| -> Matrix {
        let terms: Vec<(Matrix, Matrix)> = (0..dh)
            .map(|j| {
                let g = operator_matrix(&vec![da; src], &vec![da; tgt], |t| {
                    let r = rotate(t, j, src - 1);
                    if with_mul {
                        r.apply(0, &mul)
                    } else {
                        r
                    }
                });
                (g, alphas[j].clone())
            })
            .collect();
        twisted_pullback(&terms)
    };
    CocyclicModule::from_raw(
        format!("C_H(A, M*) over {}", hopf.name),
        raw_spaces,
        realizations,
        |n, i| {
            if i <= n {
                pullback(&operator_matrix(&vec![da; n + 2], &vec![da; n + 1], |t| t.apply(i, &mul)), dm)
            } else {
                through_alpha(n + 2, n + 1, true)
            }
        },
        |n, j| pullback(&operator_matrix(&vec![da; n], &vec![da; n + 1], |t| t.apply(j + 1, &unit)), dm),
        |n| through_alpha(n + 1, n + 1, false),
    )
}

/// All linear maps `A^(x)(n+1) -> V` with the untwisted operators.
pub fn plain_algebra_cocyclic(a: &Algebra, v: &VectorSpace, cap: usize) -> Result<CocyclicModule> {
    let (da, dv) = (a.dim(), v.dim());
    let raw_spaces = (0..=cap)
        .map(|n| a.space.tensor_power(n + 1).dual().tensor(v))
        .collect();
    let realizations = (0..=cap)
        .map(|n| Realization::full(da.pow(n as u32 + 1) * dv))
        .collect();
    let mul = a.mul_slot();
    let unit = unit_insert(a);
    CocyclicModule::from_raw(
        "C(A, V)",
        raw_spaces,
        realizations,
        |n, i| {
            pullback(
                &operator_matrix(&vec![da; n + 2], &vec![da; n + 1], |t| {
                    if i <= n {
                        t.apply(i, &mul)
                    } else {
                        t.move_slot(n + 1, 0).apply(0, &mul)
                    }
                }),
                dv,
            )
        },
        |n, j| pullback(&operator_matrix(&vec![da; n], &vec![da; n + 1], |t| t.apply(j + 1, &unit)), dv),
        |n| pullback(&operator_matrix(&vec![da; n + 1], &vec![da; n + 1], |t| t.move_slot(n, 0)), dv),
    )
}

/// Degreewise maps `I : C_H(A, M) -> C_H(A, M*)` and `J` back.
#[derive(Debug, Clone)]
pub struct Isomorphism {
    pub forward: Vec<Matrix>,
    pub backward: Vec<Matrix>,
}

/// `I(phi)(a)(m) = phi(m (x) a)` between the module and contramodule complexes.
pub fn iso_i(source: &CocyclicModule, target: &CocyclicModule, dm: usize) -> Result<Isomorphism> {
    let mut forward = Vec::new();
    let mut backward = Vec::new();
    for n in 0..=source.cap().min(target.cap()) {
        let (rs, rt) = (&source.realizations[n], &target.realizations[n]);
        let dx = rs.raw_dim() / dm;
        // (m, a) <-> (a, m)
        let p = Matrix::from_entries(dx * dm, dm * dx, (0..dm).flat_map(|m| {
            (0..dx).map(move |x| (x * dm + m, m * dx + x, crate::linear::rat(1)))
        }));
        forward.push(rs.descend(&p, rt, &format!("I in degree {n}"))?);
        backward.push(rt.descend(&p.transpose(), rs, &format!("J in degree {n}"))?);
    }
    Ok(Isomorphism { forward, backward })
}

/// `J I = id`, `I J = id` and `I` commuting with every face, degeneracy and `t`.
pub fn verify_morphism(iso: &Isomorphism, x: &CocyclicModule, y: &CocyclicModule) -> Report {
    let mut r = Report::new(format!("isomorphism {} -> {}", x.name, y.name));
    let f = &iso.forward;
    for n in 0..f.len() {
        r.identity(format!("degree {n}: J I = id"), &iso.backward[n].mul(&f[n]), &Matrix::identity(x.dim(n)));
        r.identity(format!("degree {n}: I J = id"), &f[n].mul(&iso.backward[n]), &Matrix::identity(y.dim(n)));
    }
    r.merge("", verify_cyclic_map("I", f, x, y));
    r
}

/// `f` commutes with every face, degeneracy and `t`, where `f[n] : X^n -> Y^n`.
pub fn verify_cyclic_map(label: &str, f: &[Matrix], x: &CocyclicModule, y: &CocyclicModule) -> Report {
    let mut r = Report::new(format!("{label} : {} -> {}", x.name, y.name));
    for n in 0..f.len() {
        if n + 1 < f.len() {
            for i in 0..=n + 1 {
                r.identity(
                    format!("degree {n}: {label} d{i} = d{i} {label}"),
                    &f[n + 1].mul(x.face(n, i)),
                    &y.face(n, i).mul(&f[n]),
                );
            }
        }
        for j in 0..n {
            r.identity(
                format!("degree {n}: {label} s{j} = s{j} {label}"),
                &f[n - 1].mul(x.degeneracy(n, j)),
                &y.degeneracy(n, j).mul(&f[n]),
            );
        }
        r.identity(format!("degree {n}: {label} t = t {label}"), &f[n].mul(x.tau(n)), &y.tau(n).mul(&f[n]));
    }
    r
}
