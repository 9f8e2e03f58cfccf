//! Tensor products of cocyclic modules: the bicocyclic module, its diagonal,
//! the normalized total mixed complex and the Alexander-Whitney map.

use crate::cocyclic::{verify_cocyclic, CocyclicModule, MixedComplex, Realization};
use crate::error::{HccError, Result};
use crate::linear::{rat, Matrix, Subspace};
use crate::report::Report;

/// `C^(p,q) = X^p (x) Y^q`; vertical operators act on `X`, horizontal ones on `Y`.
#[derive(Debug, Clone)]
pub struct Bicocyclic {
    pub vertical: CocyclicModule,
    pub horizontal: CocyclicModule,
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl Bicocyclic {
    pub fn new(vertical: CocyclicModule, horizontal: CocyclicModule) -> Result<Self> {
        if vertical.cap() != horizontal.cap() {
            return Err(HccError::Precondition(format!(
                "degree caps differ: {} has {}, {} has {}",
                vertical.name,
                vertical.cap(),
                horizontal.name,
                horizontal.cap()
            )));
        }
        Ok(Bicocyclic { vertical, horizontal })
    }

    pub fn cap(&self) -> usize {
        self.vertical.cap()
    }

    pub fn dim(&self, p: usize, q: usize) -> usize {
        self.vertical.dim(p) * self.horizontal.dim(q)
    }

    fn id_x(&self, p: usize) -> Matrix {
        Matrix::identity(self.vertical.dim(p))
    }

    fn id_y(&self, q: usize) -> Matrix {
        Matrix::identity(self.horizontal.dim(q))
    }

    pub fn h_face(&self, p: usize, q: usize, i: usize) -> Matrix {
        self.id_x(p).kron(self.horizontal.face(q, i))
    }

    pub fn h_degeneracy(&self, p: usize, q: usize, j: usize) -> Matrix {
        self.id_x(p).kron(self.horizontal.degeneracy(q, j))
    }

    pub fn h_tau(&self, p: usize, q: usize) -> Matrix {
        self.id_x(p).kron(self.horizontal.tau(q))
    }

    pub fn v_face(&self, p: usize, q: usize, i: usize) -> Matrix {
        self.vertical.face(p, i).kron(&self.id_y(q))
    }

    pub fn v_degeneracy(&self, p: usize, q: usize, j: usize) -> Matrix {
        self.vertical.degeneracy(p, j).kron(&self.id_y(q))
    }

    pub fn v_tau(&self, p: usize, q: usize) -> Matrix {
        self.vertical.tau(p).kron(&self.id_y(q))
    }

    /// Row `p` as a cocyclic module in `q`.
    pub fn row(&self, p: usize) -> CocyclicModule {
        let y = &self.horizontal;
        let cap = self.cap();
        CocyclicModule {
            name: format!("row {p}"),
            spaces: (0..=cap).map(|q| self.vertical.spaces[p].tensor(&y.spaces[q])).collect(),
            faces: (0..cap).map(|q| (0..=q + 1).map(|i| self.h_face(p, q, i)).collect()).collect(),
            degeneracies: (0..=cap).map(|q| (0..q).map(|j| self.h_degeneracy(p, q, j)).collect()).collect(),
            cyclic: (0..=cap).map(|q| self.h_tau(p, q)).collect(),
            realizations: (0..=cap).map(|q| Realization::full(self.dim(p, q))).collect(),
        }
    }

    /// Column `q` as a cocyclic module in `p`.
    pub fn column(&self, q: usize) -> CocyclicModule {
        let x = &self.vertical;
        let cap = self.cap();
        CocyclicModule {
            name: format!("column {q}"),
            spaces: (0..=cap).map(|p| x.spaces[p].tensor(&self.horizontal.spaces[q])).collect(),
            faces: (0..cap).map(|p| (0..=p + 1).map(|i| self.v_face(p, q, i)).collect()).collect(),
            degeneracies: (0..=cap).map(|p| (0..p).map(|j| self.v_degeneracy(p, q, j)).collect()).collect(),
            cyclic: (0..=cap).map(|p| self.v_tau(p, q)).collect(),
            realizations: (0..=cap).map(|p| Realization::full(self.dim(p, q))).collect(),
        }
    }

    /// `d_i = h d_i v d_i`, `s_j = h s_j v s_j`, `t = h t v t` on `X^n (x) Y^n`.
    pub fn diagonal(&self) -> CocyclicModule {
        let (x, y) = (&self.vertical, &self.horizontal);
        let cap = self.cap();
        CocyclicModule {
            name: format!("D({} (x) {})", x.name, y.name),
            spaces: (0..=cap).map(|n| x.spaces[n].tensor(&y.spaces[n])).collect(),
            faces: (0..cap)
                .map(|n| (0..=n + 1).map(|i| x.face(n, i).kron(y.face(n, i))).collect())
                .collect(),
            degeneracies: (0..=cap)
                .map(|n| (0..n).map(|j| x.degeneracy(n, j).kron(y.degeneracy(n, j))).collect())
                .collect(),
            cyclic: (0..=cap).map(|n| x.tau(n).kron(y.tau(n))).collect(),
            realizations: (0..=cap).map(|n| Realization::full(self.dim(n, n))).collect(),
        }
    }

    /// Every row and column is cocyclic and every horizontal operator commutes
    /// with every vertical one, on all bidegrees up to the cap.
    pub fn verify(&self) -> Report {
        let mut r = Report::new(format!("bicocyclic {} (x) {}", self.vertical.name, self.horizontal.name));
        let cap = self.cap();
        for p in 0..=cap {
            r.summarize(format!("row {p} is cocyclic"), verify_cocyclic(&self.row(p)));
        }
        for q in 0..=cap {
            r.summarize(format!("column {q} is cocyclic"), verify_cocyclic(&self.column(q)));
        }
        for p in 0..=cap {
            for q in 0..=cap {
                let mut sub = Report::new("");
                let hs = self.h_ops(p, q);
                let vs = self.v_ops(p, q);
                for (hn, hq, h_here) in &hs {
                    for (vn, vp, v_here) in &vs {
                        // h after v, evaluated on the shifted bidegree, and v after h
                        let h_there = self.h_op_at(hn, *vp, q);
                        let v_there = self.v_op_at(vn, p, *hq);
                        sub.identity(format!("{hn} {vn}"), &h_there.mul(v_here), &v_there.mul(h_here));
                    }
                }
                r.summarize(format!("bidegree ({p}, {q}): horizontal and vertical operators commute"), sub);
            }
        }
        r
    }

    /// `(name, target q, matrix)` for every horizontal generator leaving `(p, q)`.
    fn h_ops(&self, p: usize, q: usize) -> Vec<(String, usize, Matrix)> {
        let mut ops = Vec::new();
        if q < self.cap() {
            ops.extend((0..=q + 1).map(|i| (format!("d{i}"), q + 1, self.h_face(p, q, i))));
        }
        ops.extend((0..q).map(|j| (format!("s{j}"), q - 1, self.h_degeneracy(p, q, j))));
        ops.push(("t".to_string(), q, self.h_tau(p, q)));
        ops
    }

    fn v_ops(&self, p: usize, q: usize) -> Vec<(String, usize, Matrix)> {
        let mut ops = Vec::new();
        if p < self.cap() {
            ops.extend((0..=p + 1).map(|i| (format!("d{i}"), p + 1, self.v_face(p, q, i))));
        }
        ops.extend((0..p).map(|j| (format!("s{j}"), p - 1, self.v_degeneracy(p, q, j))));
        ops.push(("t".to_string(), p, self.v_tau(p, q)));
        ops
    }

    fn h_op_at(&self, name: &str, p: usize, q: usize) -> Matrix {
        op_at(name, |i| self.h_face(p, q, i), |j| self.h_degeneracy(p, q, j), || self.h_tau(p, q))
    }

    fn v_op_at(&self, name: &str, p: usize, q: usize) -> Matrix {
        op_at(name, |i| self.v_face(p, q, i), |j| self.v_degeneracy(p, q, j), || self.v_tau(p, q))
    }

    /// `AW_(p,q) = (-1)^(p+q) (v d0)^q (h d_n ... h d_(q+1))` on realized coordinates.
    pub fn aw_block(&self, p: usize, q: usize) -> Matrix {
        let n = p + q;
        let mut xs = Matrix::identity(self.vertical.dim(p));
        for k in p..n {
            xs = self.vertical.face(k, 0).mul(&xs);
        }
        let mut ys = Matrix::identity(self.horizontal.dim(q));
        for k in q..n {
            ys = self.horizontal.face(k, k + 1).mul(&ys);
        }
        xs.kron(&ys).scale(&rat(sign(n)))
    }
}

fn op_at(name: &str, face: impl Fn(usize) -> Matrix, degeneracy: impl Fn(usize) -> Matrix, tau: impl Fn() -> Matrix) -> Matrix {
    let (kind, idx) = name.split_at(1);
    match kind {
        "d" => face(idx.parse().expect("face index")),
        "s" => degeneracy(idx.parse().expect("degeneracy index")),
        _ => tau(),
    }
}

/// The normalized total mixed complex `Tot^n = sum_(p+q=n) N(X^p) (x) N(Y^q)`.
///
/// Blocks of `Tot^n` are ordered by `p = 0 ..= n`.
#[derive(Debug, Clone)]
pub struct TotalComplex {
    pub mixed: MixedComplex,
    pub vertical: MixedComplex,
    pub horizontal: MixedComplex,
    pub vertical_normal: Vec<Subspace>,
    pub horizontal_normal: Vec<Subspace>,
}

impl TotalComplex {
    pub fn new(w: &Bicocyclic) -> Result<Self> {
        let (vx, sx) = MixedComplex::normalized(&w.vertical)?;
        let (hy, sy) = MixedComplex::normalized(&w.horizontal)?;
        let cap = w.cap();
        let block = |p: usize, q: usize| vx.dims[p] * hy.dims[q];
        let dims: Vec<usize> = (0..=cap).map(|n| (0..=n).map(|p| block(p, n - p)).sum()).collect();
        let offset = |n: usize, p: usize| -> usize { (0..p).map(|k| block(k, n - k)).sum() };

        let mut b = Vec::new();
        for n in 0..cap {
            let mut m = Matrix::zeros(dims[n + 1], dims[n]);
            for p in 0..=n {
                let q = n - p;
                let (ix, iy) = (Matrix::identity(vx.dims[p]), Matrix::identity(hy.dims[q]));
                let h = ix.kron(&hy.b[q]).scale(&rat(-1));
                let v = vx.b[p].kron(&iy).scale(&rat(-sign(q)));
                m = m.add(&h.embed_block(dims[n + 1], dims[n], offset(n + 1, p), offset(n, p)));
                m = m.add(&v.embed_block(dims[n + 1], dims[n], offset(n + 1, p + 1), offset(n, p)));
            }
            b.push(m);
        }
        let mut big_b = vec![Matrix::zeros(0, dims[0])];
        for n in 1..=cap {
            let mut m = Matrix::zeros(dims[n - 1], dims[n]);
            for p in 0..=n {
                let q = n - p;
                let (ix, iy) = (Matrix::identity(vx.dims[p]), Matrix::identity(hy.dims[q]));
                if q >= 1 {
                    let h = ix.kron(&hy.big_b[q]).scale(&rat(-1));
                    m = m.add(&h.embed_block(dims[n - 1], dims[n], offset(n - 1, p), offset(n, p)));
                }
                if p >= 1 {
                    let v = vx.big_b[p].kron(&iy).scale(&rat(-sign(q)));
                    m = m.add(&v.embed_block(dims[n - 1], dims[n], offset(n - 1, p - 1), offset(n, p)));
                }
            }
            big_b.push(m);
        }
        Ok(TotalComplex {
            mixed: MixedComplex {
                name: format!("Tot({} (x) {})", w.vertical.name, w.horizontal.name),
                dims,
                b,
                big_b,
            },
            vertical: vx,
            horizontal: hy,
            vertical_normal: sx,
            horizontal_normal: sy,
        })
    }

    pub fn cap(&self) -> usize {
        self.mixed.cap()
    }

    /// Start of block `(p, n - p)` inside `Tot^n`.
    pub fn offset(&self, n: usize, p: usize) -> usize {
        (0..p).map(|k| self.vertical.dims[k] * self.horizontal.dims[n - k]).sum()
    }

    /// Normalized coordinates of `x (x) y` placed in block `(p, q)` of `Tot^(p+q)`.
    pub fn embed(&self, p: usize, x: &[crate::linear::Rational], q: usize, y: &[crate::linear::Rational]) -> Result<Vec<crate::linear::Rational>> {
        let xn = self.vertical_normal[p].coordinates(x).ok_or_else(|| {
            HccError::Precondition(format!("vertical cochain in degree {p} is not normalized"))
        })?;
        let yn = self.horizontal_normal[q].coordinates(y).ok_or_else(|| {
            HccError::Precondition(format!("horizontal cochain in degree {q} is not normalized"))
        })?;
        let n = p + q;
        let mut v = vec![rat(0); self.mixed.dims[n]];
        let o = self.offset(n, p);
        for (i, a) in xn.iter().enumerate() {
            for (j, c) in yn.iter().enumerate() {
                v[o + i * yn.len() + j] = a * c;
            }
        }
        Ok(v)
    }
}

/// The normalized diagonal with its subspaces and the normalized `AW^(n)`.
#[derive(Debug, Clone)]
pub struct AlexanderWhitney {
    pub diagonal: CocyclicModule,
    pub diagonal_mixed: MixedComplex,
    pub diagonal_normal: Vec<Subspace>,
    /// `maps[n] : Tot^n -> N(D^n)`.
    pub maps: Vec<Matrix>,
}

impl AlexanderWhitney {
    pub fn new(w: &Bicocyclic, tot: &TotalComplex) -> Result<Self> {
        let diagonal = w.diagonal();
        let (diagonal_mixed, diagonal_normal) = MixedComplex::normalized(&diagonal)?;
        let mut maps = Vec::new();
        for n in 0..=w.cap() {
            let mut blocks = Vec::new();
            for p in 0..=n {
                let q = n - p;
                let emb = tot.vertical_normal[p].embedding().kron(&tot.horizontal_normal[q].embedding());
                let image = w.aw_block(p, q).mul(&emb);
                if !diagonal_normal[n].contains_columns(&image) {
                    return Err(HccError::NotWellDefined {
                        what: format!("AW_({p},{q}) on normalized cochains"),
                        residual: "image is not normalized".into(),
                    });
                }
                blocks.push(diagonal_normal[n].retraction().mul(&image));
            }
            maps.push(Matrix::hstack(diagonal_mixed.dims[n], &blocks));
        }
        Ok(AlexanderWhitney {
            diagonal,
            diagonal_mixed,
            diagonal_normal,
            maps,
        })
    }

    /// `b_D AW = AW b_T` from `Tot^n` for every `n < cap`.
    pub fn verify_chain_map(&self, tot: &TotalComplex) -> Report {
        let mut r = Report::new("Alexander-Whitney map");
        for n in 0..tot.cap() {
            r.identity(
                format!("degree {n}: b_D AW = AW b_T"),
                &self.diagonal_mixed.b[n].mul(&self.maps[n]),
                &self.maps[n + 1].mul(&tot.mixed.b[n]),
            );
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::cocyclic::{algebra_contra_cocyclic, coalgebra_cocyclic};
    use crate::coeff::{SaydContramodule, SaydModule};
    use crate::hopf::{group_algebra_cyclic, ModuleAlgebra, ModuleCoalgebra};

    fn z2_pair(cap: usize) -> Bicocyclic {
        let h = Arc::new(group_algebra_cyclic(2));
        let x = algebra_contra_cocyclic(&ModuleAlgebra::adjoint(h.clone()), &SaydContramodule::trivial(h.clone()), cap)
            .unwrap();
        let y = coalgebra_cocyclic(&ModuleCoalgebra::regular(h.clone()), &SaydModule::trivial(h), cap).unwrap();
        Bicocyclic::new(x, y).unwrap()
    }

    #[test]
    fn point_tensor_point() {
        let w = Bicocyclic::new(CocyclicModule::point(3), CocyclicModule::point(3)).unwrap();
        assert!(w.verify().all_passed());
        let (d, pt) = (w.diagonal(), CocyclicModule::point(3));
        assert_eq!((&d.faces, &d.degeneracies, &d.cyclic), (&pt.faces, &pt.degeneracies, &pt.cyclic));
        assert_eq!(w.aw_block(0, 0), Matrix::identity(1));
        assert_eq!(w.aw_block(1, 1), Matrix::identity(1));
        let tot = TotalComplex::new(&w).unwrap();
        // degree 0 survives normalization, nothing else does
        assert_eq!(tot.mixed.dims, vec![1, 0, 0, 0]);
    }

    #[test]
    fn z2_bicocyclic_and_total_complex() {
        let w = z2_pair(3);
        let r = w.verify();
        assert!(r.all_passed(), "{}", r.render_text());
        let d = w.diagonal();
        assert_eq!(d.tau(2).pow(3), Matrix::identity(d.dim(2)));
        let r = verify_cocyclic(&d);
        assert!(r.all_passed(), "{}", r.render_text());
        let tot = TotalComplex::new(&w).unwrap();
        let r = tot.mixed.check();
        assert!(r.all_passed(), "{}", r.render_text());
        let aw = AlexanderWhitney::new(&w, &tot).unwrap();
        let r = aw.verify_chain_map(&tot);
        assert!(r.all_passed(), "{}", r.render_text());
    }
}
