//! Extending a chain map of `b`-complexes to a map of `(b, B)` total complexes.
//!
//! A map `F = F_0 + F_1 + ...` with `F_j : M^m -> N^(m-2j)` commutes with
//! `b + B` iff for every `j >= 1`
//!
//! `b F_j - F_j b = F_(j-1) B - B F_(j-1)`.
//!
//! Given `F_0`, the higher components are found by one exact linear solve.

use crate::cocyclic::MixedComplex;
use crate::error::{HccError, Result};
use crate::linear::rational::format_rational;
use crate::linear::{rat, solve, Matrix, Rational};
use crate::report::Report;

/// `components[j][m] : M^m -> N^(m-2j)`, present for `2j <= m <= top + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SMap {
    pub top: usize,
    pub components: Vec<Vec<Option<Matrix>>>,
}

impl SMap {
    pub fn component(&self, j: usize, m: usize) -> Option<&Matrix> {
        self.components.get(j).and_then(|c| c.get(m)).and_then(Option::as_ref)
    }

    /// `(F_0 v, F_1 v, ...)` for `v` in `M^m`, ordered like `Tot^m` of the target.
    pub fn apply(&self, m: usize, v: &[Rational]) -> Vec<Vec<Rational>> {
        (0..=m / 2)
            .map(|j| self.component(j, m).expect("component within range").apply(v))
            .collect()
    }

    /// `b + B` commutes with the map on `Tot^m` for every `m <= top`.
    pub fn verify(&self, source: &MixedComplex, target: &MixedComplex) -> Report {
        let mut r = Report::new("S-map");
        for m in 0..=self.top {
            let d_src = source.total_differential(m);
            let d_tgt = target.total_differential(m);
            let lhs = d_tgt.mul(&self.total(m, source, target));
            let rhs = self.total(m + 1, source, target).mul(&d_src);
            r.identity(format!("degree {m}: (b + B) F = F (b + B)"), &lhs, &rhs);
        }
        r
    }

    /// The block matrix `Tot^m(source) -> Tot^m(target)`.
    pub fn total(&self, m: usize, source: &MixedComplex, target: &MixedComplex) -> Matrix {
        let src = source.tot_blocks(m);
        let tgt = target.tot_blocks(m);
        let (rows, cols) = (tgt.iter().sum::<usize>(), src.iter().sum::<usize>());
        let mut out = Matrix::zeros(rows, cols);
        let mut col = 0;
        for (k, width) in src.iter().enumerate() {
            let mut row: usize = tgt[..k].iter().sum();
            for j in 0..tgt.len() - k {
                if let Some(f) = self.component(j, m - 2 * k) {
                    out = out.add(&f.embed_block(rows, cols, row, col));
                }
                row += tgt[k + j];
            }
            col += width;
        }
        out
    }
}

/// Index of each unknown block `F_j^(m)` inside the solution vector.
struct Layout {
    blocks: Vec<(usize, usize, usize, usize, usize)>,
    width: usize,
}

impl Layout {
    fn find(&self, j: usize, m: usize) -> Option<(usize, usize, usize)> {
        self.blocks
            .iter()
            .find(|b| b.0 == j && b.1 == m)
            .map(|&(_, _, off, r, c)| (off, r, c))
    }
}

/// Solves for `F_1, F_2, ...` given the chain map `f0[m] : M^m -> N^m` for `m <= top + 1`.
pub fn extend_to_s_map(source: &MixedComplex, target: &MixedComplex, f0: &[Matrix], top: usize) -> Result<SMap> {
    if top + 1 > source.cap() || top + 1 > target.cap() || f0.len() < top + 2 {
        return Err(HccError::DegreeOutOfRange {
            degree: top + 1,
            cap: source.cap().min(target.cap()),
        });
    }
    let max_j = top.div_ceil(2);
    let mut blocks = Vec::new();
    let mut width = 0;
    for j in 1..=max_j {
        for m in 2 * j..=top + 1 {
            let (r, c) = (target.dims[m - 2 * j], source.dims[m]);
            blocks.push((j, m, width, r, c));
            width += r * c;
        }
    }
    let layout = Layout { blocks, width };

    let mut entries = Vec::new();
    let mut rhs = Vec::new();
    let mut row0 = 0;
    for j in 1..=max_j {
        for m in (2 * j - 1)..=top {
            let t = m + 1 - 2 * j;
            let (nr, nc) = (target.dims[t], source.dims[m]);
            // unknown terms as (A, block, B) meaning A X B
            let mut terms: Vec<(Matrix, usize, usize, Matrix)> = Vec::new();
            if m >= 2 * j {
                terms.push((target.b[m - 2 * j].clone(), j, m, Matrix::identity(nc)));
            }
            terms.push((Matrix::identity(nr).scale(&rat(-1)), j, m + 1, source.b[m].clone()));
            let mut known = Matrix::zeros(nr, nc);
            if j == 1 {
                known = f0[m - 1].mul(&source.big_b[m]).sub(&target.big_b[m].mul(&f0[m]));
            } else {
                terms.push((target.big_b[m + 2 - 2 * j].clone(), j - 1, m, Matrix::identity(nc)));
                if m > 2 * (j - 1) {
                    terms.push((Matrix::identity(nr).scale(&rat(-1)), j - 1, m - 1, source.big_b[m].clone()));
                }
            }
            for (a, bj, bm, b) in &terms {
                let (off, xr, xc) = layout.find(*bj, *bm).expect("unknown block in layout");
                // vec_r(A X B) = (A (x) B^T) vec_r(X)
                let k = a.kron(&b.transpose());
                debug_assert_eq!((k.nrows(), k.ncols()), (nr * nc, xr * xc));
                for (i, jj, v) in k.entries() {
                    entries.push((row0 + i, off + jj, v.clone()));
                }
            }
            let mut dense = vec![rat(0); nr * nc];
            for (i, jj, v) in known.entries() {
                dense[i * nc + jj] = v.clone();
            }
            rhs.extend(dense);
            row0 += nr * nc;
        }
    }
    let system = Matrix::from_entries(row0, layout.width, entries);
    let x = solve(&system, &rhs).ok_or_else(|| HccError::Infeasible {
        degree: top,
        residual: residual_note(&rhs),
    })?;

    let mut components: Vec<Vec<Option<Matrix>>> = vec![f0.iter().take(top + 2).cloned().map(Some).collect()];
    for j in 1..=max_j {
        let mut row = vec![None; top + 2];
        for (m, slot) in row.iter_mut().enumerate().skip(2 * j) {
            let (off, r, c) = layout.find(j, m).expect("block");
            let e = (0..r * c).map(|k| (k / c, k % c, x[off + k].clone()));
            *slot = Some(Matrix::from_entries(r, c, e));
        }
        components.push(row);
    }
    Ok(SMap { top, components })
}

fn residual_note(rhs: &[Rational]) -> String {
    match rhs.iter().enumerate().find(|(_, v)| !num_traits::Zero::is_zero(*v)) {
        Some((i, v)) => format!("obstruction has entry {} at position {i}", format_rational(v)),
        None => "homogeneous system without solution".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(dims: Vec<usize>, b: Vec<Matrix>, big_b: Vec<Matrix>) -> MixedComplex {
        MixedComplex {
            name: "test".into(),
            dims,
            b,
            big_b,
        }
    }

    #[test]
    fn identity_needs_no_correction() {
        let one = Matrix::identity(1);
        let mc = complex(
            vec![1, 1, 1, 1],
            vec![Matrix::zeros(1, 1); 3],
            vec![Matrix::zeros(0, 1), Matrix::zeros(1, 1), one.clone(), Matrix::zeros(1, 1)],
        );
        let f0 = vec![one.clone(); 4];
        let s = extend_to_s_map(&mc, &mc, &f0, 2).unwrap();
        assert!(s.component(1, 2).unwrap().is_zero());
        assert!(s.verify(&mc, &mc).all_passed());
    }

    #[test]
    fn mismatched_operators_are_corrected_through_b() {
        // the source B : C^2 -> C^1 is absorbed by the target b : C^0 -> C^1
        let zero = Matrix::zeros(1, 1);
        let src = complex(
            vec![1, 1, 1, 1],
            vec![zero.clone(); 3],
            vec![Matrix::zeros(0, 1), zero.clone(), Matrix::identity(1), zero.clone()],
        );
        let tgt = complex(
            vec![1, 1, 1, 1],
            vec![Matrix::identity(1), zero.clone(), zero.clone()],
            vec![Matrix::zeros(0, 1), zero.clone(), zero.clone(), zero.clone()],
        );
        let f0 = vec![zero.clone(), Matrix::identity(1), Matrix::identity(1), Matrix::identity(1)];
        let s = extend_to_s_map(&src, &tgt, &f0, 2).unwrap();
        assert_eq!(s.component(1, 2).unwrap(), &Matrix::identity(1));
        assert!(s.verify(&src, &tgt).all_passed());
    }

    #[test]
    fn obstructed_extension_is_infeasible() {
        // source B: C^2 -> C^1 is the identity and the target has no room to absorb it
        let src = complex(
            vec![1, 1, 1, 1],
            vec![Matrix::zeros(1, 1); 3],
            vec![Matrix::zeros(0, 1), Matrix::zeros(1, 1), Matrix::identity(1), Matrix::zeros(1, 1)],
        );
        let tgt = complex(
            vec![1, 1, 1, 1],
            vec![Matrix::zeros(1, 1); 3],
            vec![Matrix::zeros(0, 1), Matrix::zeros(1, 1), Matrix::zeros(1, 1), Matrix::zeros(1, 1)],
        );
        let f0 = vec![Matrix::identity(1); 4];
        let err = extend_to_s_map(&src, &tgt, &f0, 2).unwrap_err();
        assert!(matches!(err, HccError::Infeasible { .. }));
    }
}
