//! Cocyclic modules as explicit matrices up to a degree cap.

use num_traits::Zero;

use crate::error::{HccError, Result};
use crate::linear::rational::{format_rational, sign};
use crate::linear::{solve_constrained_subspace, Matrix, Quotient, Rational, Subspace, VectorSpace};
use crate::report::Report;

/// How a degree-`n` space sits inside the raw tensor space its operators are
/// written on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Realization {
    /// A subspace of the raw space, e.g. equivariant maps.
    Sub(Subspace),
    /// The raw space modulo the column span of `relations`.
    Quotient { quotient: Quotient, relations: Matrix },
}

impl Realization {
    pub fn full(raw: usize) -> Self {
        Realization::Sub(Subspace::full(raw))
    }

    pub fn quotient(relations: Matrix) -> Self {
        Realization::Quotient {
            quotient: crate::linear::cokernel(&relations),
            relations,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Realization::Sub(s) => s.dim(),
            Realization::Quotient { quotient, .. } => quotient.dim(),
        }
    }

    pub fn raw_dim(&self) -> usize {
        match self {
            Realization::Sub(s) => s.ambient(),
            Realization::Quotient { quotient, .. } => quotient.ambient(),
        }
    }

    /// `raw x dim`: a representative of each basis vector.
    pub fn lift(&self) -> Matrix {
        match self {
            Realization::Sub(s) => s.embedding(),
            Realization::Quotient { quotient, .. } => quotient.section(),
        }
    }

    /// `dim x raw`: coordinates of raw vectors (for `Sub`, valid on the subspace).
    pub fn reduce(&self) -> Matrix {
        match self {
            Realization::Sub(s) => s.retraction(),
            Realization::Quotient { quotient, .. } => quotient.projection().clone(),
        }
    }

    /// Raw vectors that represent zero.
    pub fn null_relations(&self) -> Option<&Matrix> {
        match self {
            Realization::Sub(_) => None,
            Realization::Quotient { relations, .. } => Some(relations),
        }
    }

    /// Labels: raw labels for a full space or a quotient, fresh labels otherwise.
    pub fn labels(&self, raw: &VectorSpace, prefix: &str) -> VectorSpace {
        match self {
            Realization::Sub(s) if s.dim() == s.ambient() => raw.clone(),
            Realization::Sub(s) => VectorSpace::standard(prefix, s.dim()),
            Realization::Quotient { quotient, .. } => raw.select(quotient.kept()),
        }
    }

    /// Matrix in reduced coordinates of a raw operator `self -> to`, after
    /// checking that it preserves the subspace or kills the relations.
    pub fn descend(&self, raw: &Matrix, to: &Realization, what: &str) -> Result<Matrix> {
        if let Some(rel) = self.null_relations() {
            let image = raw.mul(rel);
            let killed = match to {
                Realization::Sub(_) => image,
                Realization::Quotient { quotient, .. } => quotient.projection().mul(&image),
            };
            let first = killed.entries().next().map(|(i, j, v)| (i, j, format_rational(v)));
            if let Some((i, j, v)) = first {
                return Err(HccError::NotWellDefined {
                    what: what.to_string(),
                    residual: format!("relation {j} maps to {v} in coordinate {i}"),
                });
            }
        }
        let lifted = raw.mul(&self.lift());
        match to {
            Realization::Sub(s) => {
                let coords = s.retraction().mul(&lifted);
                let back = s.embedding().mul(&coords);
                if let Some(m) = back.first_mismatch(&lifted) {
                    return Err(HccError::NotWellDefined {
                        what: what.to_string(),
                        residual: format!(
                            "image of basis vector {} leaves the subspace at raw coordinate {} (residual {})",
                            m.col,
                            m.row,
                            format_rational(&(&m.right - &m.left))
                        ),
                    });
                }
                Ok(coords)
            }
            Realization::Quotient { quotient, .. } => Ok(quotient.projection().mul(&lifted)),
        }
    }
}

/// Spaces `C^0 .. C^cap` with faces `d_i : C^n -> C^(n+1)` (`0 <= i <= n+1`),
/// degeneracies `s_j : C^n -> C^(n-1)` (`0 <= j <= n-1`) and the cyclic
/// operator `t : C^n -> C^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocyclicModule {
    pub name: String,
    pub spaces: Vec<VectorSpace>,
    /// `faces[n][i]`, defined for `n < cap`.
    pub faces: Vec<Vec<Matrix>>,
    /// `degeneracies[n][j]`; empty in degree 0.
    pub degeneracies: Vec<Vec<Matrix>>,
    pub cyclic: Vec<Matrix>,
    pub realizations: Vec<Realization>,
}

impl CocyclicModule {
    /// Builds the module from raw operators, descending each to the realized spaces.
    pub fn from_raw<F, S, T>(
        name: impl Into<String>,
        raw_spaces: Vec<VectorSpace>,
        realizations: Vec<Realization>,
        raw_face: F,
        raw_degeneracy: S,
        raw_cyclic: T,
    ) -> Result<Self>
    where
        F: Fn(usize, usize) -> Matrix,
        S: Fn(usize, usize) -> Matrix,
        T: Fn(usize) -> Matrix,
    {
        let name = name.into();
        let cap = realizations.len() - 1;
        let spaces = realizations
            .iter()
            .zip(&raw_spaces)
            .enumerate()
            .map(|(n, (r, raw))| r.labels(raw, &format!("c{n}_")))
            .collect();
        let r = &realizations;
        let mut faces = Vec::new();
        let mut degeneracies = Vec::new();
        let mut cyclic = Vec::new();
        for n in 0..=cap {
            if n < cap {
                let mut fs = Vec::new();
                for i in 0..=n + 1 {
                    fs.push(r[n].descend(&raw_face(n, i), &r[n + 1], &format!("{name}: d{i} in degree {n}"))?);
                }
                faces.push(fs);
            }
            let mut ss = Vec::new();
            for j in 0..n {
                ss.push(r[n].descend(&raw_degeneracy(n, j), &r[n - 1], &format!("{name}: s{j} in degree {n}"))?);
            }
            degeneracies.push(ss);
            cyclic.push(r[n].descend(&raw_cyclic(n), &r[n], &format!("{name}: t in degree {n}"))?);
        }
        Ok(CocyclicModule {
            name,
            spaces,
            faces,
            degeneracies,
            cyclic,
            realizations,
        })
    }

    /// Every space `Q`, every operator the identity.
    pub fn point(cap: usize) -> Self {
        let id = Matrix::identity(1);
        CocyclicModule {
            name: "point".into(),
            spaces: vec![VectorSpace::ground(); cap + 1],
            faces: (0..cap).map(|n| vec![id.clone(); n + 2]).collect(),
            degeneracies: (0..=cap).map(|n| vec![id.clone(); n]).collect(),
            cyclic: vec![id.clone(); cap + 1],
            realizations: vec![Realization::full(1); cap + 1],
        }
    }

    pub fn cap(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.spaces[n].dim()
    }

    pub fn face(&self, n: usize, i: usize) -> &Matrix {
        &self.faces[n][i]
    }

    pub fn degeneracy(&self, n: usize, j: usize) -> &Matrix {
        &self.degeneracies[n][j]
    }

    pub fn tau(&self, n: usize) -> &Matrix {
        &self.cyclic[n]
    }

    /// `lambda = (-1)^n t`.
    pub fn lambda(&self, n: usize) -> Matrix {
        self.tau(n).scale(&sign(n))
    }

    /// `b = sum (-1)^i d_i : C^n -> C^(n+1)`.
    pub fn hochschild_b(&self, n: usize) -> Matrix {
        let mut b = Matrix::zeros(self.dim(n + 1), self.dim(n));
        for (i, d) in self.faces[n].iter().enumerate() {
            b = b.combine(d, sign(i));
        }
        b
    }

    /// `N = sum_i lambda^i` on `C^n`.
    pub fn norm_operator(&self, n: usize) -> Matrix {
        let lambda = self.lambda(n);
        let mut power = Matrix::identity(self.dim(n));
        let mut total = Matrix::zeros(self.dim(n), self.dim(n));
        for _ in 0..=n {
            total = total.add(&power);
            power = lambda.mul(&power);
        }
        total
    }

    /// Connes' operator `B = N s_(n-1) (t - (-1)^n) : C^n -> C^(n-1)`.
    pub fn connes_b(&self, n: usize) -> Matrix {
        if n == 0 {
            return Matrix::zeros(0, self.dim(0));
        }
        let shifted = self.tau(n).combine(&Matrix::identity(self.dim(n)), -sign(n));
        self.norm_operator(n - 1).mul(self.degeneracy(n, n - 1)).mul(&shifted)
    }

    /// `B = N s_(n-1) t`, the form of Connes' operator on normalized cochains.
    pub fn connes_b_normalized(&self, n: usize) -> Matrix {
        if n == 0 {
            return Matrix::zeros(0, self.dim(0));
        }
        self.norm_operator(n - 1).mul(self.degeneracy(n, n - 1)).mul(self.tau(n))
    }

    /// Cochains killed by every degeneracy.
    pub fn normalized(&self, n: usize) -> Subspace {
        solve_constrained_subspace(self.dim(n), &self.degeneracies[n])
    }

    /// Restricts the module to degrees `0 ..= cap`.
    pub fn truncate(&self, cap: usize) -> Self {
        assert!(cap <= self.cap());
        CocyclicModule {
            name: self.name.clone(),
            spaces: self.spaces[..=cap].to_vec(),
            faces: self.faces[..cap].to_vec(),
            degeneracies: self.degeneracies[..=cap].to_vec(),
            cyclic: self.cyclic[..=cap].to_vec(),
            realizations: self.realizations[..=cap].to_vec(),
        }
    }

    pub fn require_degree(&self, n: usize) -> Result<()> {
        if n > self.cap() {
            return Err(HccError::DegreeOutOfRange {
                degree: n,
                cap: self.cap(),
            });
        }
        Ok(())
    }
}

/// Checks every cosimplicial and cyclic identity up to the cap.
pub fn verify_cocyclic(x: &CocyclicModule) -> Report {
    let mut report = Report::new(format!("cocyclic identities of {}", x.name));
    let cap = x.cap();
    let d = |n: usize, i: usize| x.face(n, i);
    let s = |n: usize, j: usize| x.degeneracy(n, j);
    let t = |n: usize| x.tau(n);
    for n in 0..=cap {
        if n + 2 <= cap {
            let mut sub = Report::new("");
            for j in 0..=n + 2 {
                for i in 0..j {
                    sub.identity(
                        format!("d{j} d{i} = d{i} d{}", j - 1),
                        &d(n + 1, j).mul(d(n, i)),
                        &d(n + 1, i).mul(d(n, j - 1)),
                    );
                }
            }
            report.summarize(format!("degree {n}: d_j d_i = d_i d_(j-1) for i < j"), sub);
        }
        if n >= 2 {
            let mut sub = Report::new("");
            for j in 0..=n - 2 {
                for i in 0..=j {
                    sub.identity(
                        format!("s{j} s{i} = s{i} s{}", j + 1),
                        &s(n - 1, j).mul(s(n, i)),
                        &s(n - 1, i).mul(s(n, j + 1)),
                    );
                }
            }
            report.summarize(format!("degree {n}: s_j s_i = s_i s_(j+1) for i <= j"), sub);
        }
        if n < cap {
            let mut sub = Report::new("");
            let id = Matrix::identity(x.dim(n));
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let lhs = s(n + 1, j).mul(d(n, i));
                    let name = format!("s{j} d{i}");
                    if i < j {
                        sub.identity(name, &lhs, &d(n - 1, i).mul(s(n, j - 1)));
                    } else if i == j || i == j + 1 {
                        sub.identity(name, &lhs, &id);
                    } else {
                        sub.identity(name, &lhs, &d(n - 1, i - 1).mul(s(n, j)));
                    }
                }
            }
            report.summarize(format!("degree {n}: degeneracy after face"), sub);

            let mut sub = Report::new("");
            sub.identity("t d0 = d(n+1)", &t(n + 1).mul(d(n, 0)), d(n, n + 1));
            for i in 1..=n + 1 {
                sub.identity(format!("t d{i} = d{} t", i - 1), &t(n + 1).mul(d(n, i)), &d(n, i - 1).mul(t(n)));
            }
            report.summarize(format!("degree {n}: t d_i"), sub);
        }
        if n >= 1 {
            let mut sub = Report::new("");
            sub.identity(
                "t s0 = s(n-1) t^2",
                &t(n - 1).mul(s(n, 0)),
                &s(n, n - 1).mul(&t(n).pow(2)),
            );
            for j in 1..n {
                sub.identity(format!("t s{j} = s{} t", j - 1), &t(n - 1).mul(s(n, j)), &s(n, j - 1).mul(t(n)));
            }
            report.summarize(format!("degree {n}: t s_j"), sub);
        }
        report.identity(format!("degree {n}: t^(n+1) = id"), &t(n).pow(n + 1), &Matrix::identity(x.dim(n)));
    }
    report
}

/// Sum of `kron(G_k^T, rho_k)`: the operator `phi -> sum rho_k . phi . G_k` on
/// maps stored with coordinate `x * dim(V) + v`.
pub fn twisted_pullback(terms: &[(Matrix, Matrix)]) -> Matrix {
    let (g, rho) = &terms[0];
    let mut total = Matrix::zeros(g.ncols() * rho.nrows(), g.nrows() * rho.ncols());
    for (g, rho) in terms {
        total = total.add(&g.transpose().kron(rho));
    }
    total
}

/// `phi -> phi . g` on maps into a space of dimension `dv`.
pub fn pullback(g: &Matrix, dv: usize) -> Matrix {
    g.transpose().kron(&Matrix::identity(dv))
}

pub(crate) fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}
