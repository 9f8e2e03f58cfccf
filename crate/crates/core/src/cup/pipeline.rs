//! The cup-product pipelines: normalize the inputs, take their product in the
//! total complex, push it through the Alexander-Whitney S-map and a cyclic map
//! into plain cochains of an algebra.

use serde::Serialize;

use crate::cocyclic::{
    algebra_contra_cocyclic, coalgebra_cocyclic, comodule_algebra_cocyclic, plain_algebra_cocyclic, ClassKind,
    CochainClass, CocyclicModule, MixedComplex,
};
use crate::coeff::{CompatiblePair, Contratensor, SaydContramodule, SaydModule};
use crate::error::{HccError, Result};
use crate::hopf::{crossed_product, Algebra, CoalgebraAction, ComoduleAlgebra, ConvolutionAlgebra, ModuleAlgebra};
use crate::linear::rational::format_rational;
use crate::linear::{first_nonzero, rat, solve, vector_is_zero, Matrix, Rational, VectorSpace};
use crate::report::Report;

use super::bicocyclic::{AlexanderWhitney, Bicocyclic, TotalComplex};
use super::maps::{phi_map, psi_map, pullback_along, Coupling, CyclicMap};
use super::smap::extend_to_s_map;

/// `(y_0, y_1, ..)` with `y_k` in degree `degree - 2k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BbCocycle {
    pub degree: usize,
    #[serde(serialize_with = "serialize_components")]
    pub components: Vec<Vec<Rational>>,
}

fn serialize_components<S: serde::Serializer>(c: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let text: Vec<Vec<String>> = c.iter().map(|v| v.iter().map(format_rational).collect()).collect();
    text.serialize(s)
}

impl BbCocycle {
    pub fn top(&self) -> &[Rational] {
        &self.components[0]
    }

    /// The components concatenated as a vector of `Tot^n`.
    pub fn total_vector(&self) -> Vec<Rational> {
        self.components.concat()
    }

    /// `b y_0 = 0`, `B y_k + b y_(k+1) = 0` and `B y_last = 0` when it lands in degree 0.
    pub fn check(&self, mc: &MixedComplex) -> Report {
        let n = self.degree;
        let mut r = Report::new(format!("(b, B)-cocycle of degree {n} in {}", mc.name));
        let in_range = n < mc.cap() && self.components.len() == n / 2 + 1;
        let shapes = in_range
            && self
                .components
                .iter()
                .enumerate()
                .all(|(k, y)| y.len() == mc.dims[n - 2 * k]);
        if !r.condition("components match the complex", shapes, None) {
            return r;
        }
        let zero = |d: usize| Matrix::zeros(d, 1);
        let col = Matrix::column_vector;
        let y = &self.components;
        r.identity("b y_0 = 0", &mc.b[n].mul(&col(&y[0])), &zero(mc.dims[n + 1]));
        for k in 1..y.len() {
            let m = n - 2 * k;
            let lhs = mc.big_b[m + 2].mul(&col(&y[k - 1])).add(&mc.b[m].mul(&col(&y[k])));
            r.identity(format!("B y_{} + b y_{k} = 0", k - 1), &lhs, &zero(mc.dims[m + 1]));
        }
        let last = y.len() - 1;
        if n - 2 * last == 1 {
            r.identity(format!("B y_{last} = 0"), &mc.big_b[1].mul(&col(&y[last])), &zero(mc.dims[0]));
        }
        r
    }
}

/// Completes a Hochschild cocycle `y0` of degree `n` to a `(b, B)`-cocycle by
/// one exact solve for `y_1, y_2, ..`.
pub fn cyclic_complete(mc: &MixedComplex, y0: &[Rational], n: usize) -> Result<BbCocycle> {
    if n + 1 > mc.cap() {
        return Err(HccError::DegreeOutOfRange { degree: n, cap: mc.cap() });
    }
    if y0.len() != mc.dims[n] {
        return Err(HccError::Dimension(format!(
            "cochain of length {} in degree {n} of dimension {}",
            y0.len(),
            mc.dims[n]
        )));
    }
    if !vector_is_zero(&mc.b[n].apply(y0)) {
        return Err(HccError::Precondition(format!("cochain in degree {n} is not a b-cocycle")));
    }
    let top = n / 2;
    // unknowns y_1 .. y_top, stacked
    let offsets: Vec<usize> = (1..=top)
        .scan(0, |acc, k| {
            let o = *acc;
            *acc += mc.dims[n - 2 * k];
            Some(o)
        })
        .collect();
    let width = (1..=top).map(|k| mc.dims[n - 2 * k]).sum();
    let mut entries = Vec::new();
    let mut rhs = Vec::new();
    let mut row = 0;
    let put = |m: &Matrix, row: usize, col: usize, entries: &mut Vec<(usize, usize, Rational)>| {
        entries.extend(m.entries().map(|(i, j, v)| (row + i, col + j, v.clone())));
    };
    for k in 1..=top {
        let m = n - 2 * k;
        // B y_(k-1) + b y_k = 0 in degree m + 1
        put(&mc.b[m], row, offsets[k - 1], &mut entries);
        if k == 1 {
            rhs.extend(mc.big_b[n].apply(y0).into_iter().map(|v| -v));
        } else {
            put(&mc.big_b[m + 2], row, offsets[k - 2], &mut entries);
            rhs.extend(std::iter::repeat_n(rat(0), mc.dims[m + 1]));
        }
        row += mc.dims[m + 1];
    }
    if n % 2 == 1 {
        if top == 0 {
            rhs.extend(mc.big_b[1].apply(y0).into_iter().map(|v| -v));
        } else {
            put(&mc.big_b[1], row, offsets[top - 1], &mut entries);
            rhs.extend(std::iter::repeat_n(rat(0), mc.dims[0]));
        }
        row += mc.dims[0];
    }
    let system = Matrix::from_entries(row, width, entries);
    let x = solve(&system, &rhs).ok_or_else(|| HccError::Infeasible {
        degree: n,
        residual: match first_nonzero(&mc.big_b[n].apply(y0)) {
            Some((i, v)) => format!("B(y_0) has entry {v} at {i} and the descending system has no solution"),
            None => "the descending system has no solution".into(),
        },
    })?;
    let mut components = vec![y0.to_vec()];
    for k in 1..=top {
        let o = offsets[k - 1];
        components.push(x[o..o + mc.dims[n - 2 * k]].to_vec());
    }
    Ok(BbCocycle { degree: n, components })
}

/// A `(b, B)`-cocycle with normalized components, cohomologous to the cyclic cocycle `u` of degree `p`.
///
/// A cyclic cocycle `u` gives `(u, 0, ..)` in the unnormalized complex; the
/// normalized representative differs from it by `(b + B) w`.
pub fn normalized_representative(x: &CocyclicModule, p: usize, u: &[Rational]) -> Result<BbCocycle> {
    let mc = MixedComplex::of_cocyclic(x);
    let blocks = mc.tot_blocks(p);
    let mut c = vec![rat(0); mc.tot_dim(p)];
    c[..u.len()].clone_from_slice(u);
    // one stacked constraint per block: every degeneracy kills it
    let total_rows: usize = blocks
        .iter()
        .enumerate()
        .map(|(k, _)| (0..p - 2 * k).map(|j| x.degeneracy(p - 2 * k, j).nrows()).sum::<usize>())
        .sum();
    let mut parts = Vec::new();
    let (mut row, mut col) = (0, 0);
    for (k, width) in blocks.iter().enumerate() {
        let m = p - 2 * k;
        for j in 0..m {
            let s = x.degeneracy(m, j);
            parts.push(s.embed_block(total_rows, mc.tot_dim(p), row, col));
            row += s.nrows();
        }
        col += width;
    }
    let degenerate = parts.iter().fold(Matrix::zeros(total_rows, mc.tot_dim(p)), |acc, m| acc.add(m));
    let split = |v: &[Rational]| -> BbCocycle {
        let mut at = 0;
        let components = blocks
            .iter()
            .map(|&d| {
                at += d;
                v[at - d..at].to_vec()
            })
            .collect();
        BbCocycle { degree: p, components }
    };
    let defect = degenerate.apply(&c);
    if vector_is_zero(&defect) {
        return Ok(split(&c));
    }
    let d = mc.total_differential(p - 1);
    let w = solve(&degenerate.mul(&d), &defect.iter().map(|v| -v).collect::<Vec<_>>()).ok_or_else(|| {
        HccError::Precondition(format!("cochain in degree {p} has no normalized representative"))
    })?;
    let shift = d.apply(&w);
    let r: Vec<Rational> = c.iter().zip(&shift).map(|(a, b)| a + b).collect();
    Ok(split(&r))
}

/// Output of a cup-product pipeline.
#[derive(Debug, Clone)]
pub struct CupProduct {
    /// Image of the product under the Alexander-Whitney S-map and the cyclic maps.
    pub cocycle: BbCocycle,
    /// `cyclic_complete` of the top component, solved independently.
    pub completion: BbCocycle,
    /// Plain cochains of the target algebra at cap `degree + 1`.
    pub target: CocyclicModule,
    pub checks: Report,
}

impl CupProduct {
    pub fn mixed(&self) -> MixedComplex {
        MixedComplex::of_cocyclic(&self.target)
    }
}

fn validated(x: &CocyclicModule, class: &CochainClass, side: &str) -> Result<CochainClass> {
    CochainClass::new(x, class.degree, class.representative.clone(), ClassKind::CyclicCocycle)
        .map_err(|e| HccError::Precondition(format!("{side} input: {e}")))
}

fn require_compatible(pair: &CompatiblePair) -> Result<()> {
    match pair.check().failed().next() {
        None => Ok(()),
        Some(bad) => Err(HccError::Precondition(format!("pair is not compatible: {} fails", bad.name))),
    }
}

/// AW S-map, then `transport`, then the check against plain cochains of `algebra` valued in `values`.
fn run(
    x: CocyclicModule,
    u: &CochainClass,
    y: CocyclicModule,
    v: &CochainClass,
    transport: &[CyclicMap],
    algebra: &Algebra,
    values: &VectorSpace,
) -> Result<CupProduct> {
    let (p, q) = (u.degree, v.degree);
    let n = p + q;
    let ux = normalized_representative(&x, p, &u.representative)?;
    let vy = normalized_representative(&y, q, &v.representative)?;
    let w = Bicocyclic::new(x, y)?;
    let tot = TotalComplex::new(&w)?;
    let aw = AlexanderWhitney::new(&w, &tot)?;

    let mut c = vec![rat(0); tot.mixed.tot_dim(n)];
    let block_start = |j: usize| -> usize { (0..j).map(|i| tot.mixed.dims[n - 2 * i]).sum() };
    for (k, uk) in ux.components.iter().enumerate() {
        for (l, vl) in vy.components.iter().enumerate() {
            let piece = tot.embed(p - 2 * k, uk, q - 2 * l, vl)?;
            let o = block_start(k + l);
            for (i, a) in piece.into_iter().enumerate() {
                c[o + i] += a;
            }
        }
    }

    let smap = extend_to_s_map(&tot.mixed, &aw.diagonal_mixed, &aw.maps, n)?;
    let image = smap.total(n, &tot.mixed, &aw.diagonal_mixed).apply(&c);
    let mut components = Vec::new();
    let mut at = 0;
    for j in 0..=n / 2 {
        let m = n - 2 * j;
        let d = aw.diagonal_mixed.dims[m];
        let mut cochain = aw.diagonal_normal[m].embedding().apply(&image[at..at + d]);
        for f in transport {
            cochain = f.maps[m].apply(&cochain);
        }
        components.push(cochain);
        at += d;
    }
    let cocycle = BbCocycle { degree: n, components };

    let target = plain_algebra_cocyclic(algebra, values, n + 1)?;
    let mc = MixedComplex::of_cocyclic(&target);
    let mut checks = Report::new(format!("cup product in degree {n}"));
    checks.summarize("S-map commutes with b + B", smap.verify(&tot.mixed, &aw.diagonal_mixed));
    checks.merge("", cocycle.check(&mc));
    if let Some(bad) = checks.failed().next() {
        return Err(HccError::Structure(format!("cup product output fails {}", bad.name)));
    }
    let completion = cyclic_complete(&mc, cocycle.top(), n)?;
    checks.summarize("completion of the top component", completion.check(&mc));
    Ok(CupProduct {
        cocycle,
        completion,
        target,
        checks,
    })
}

fn coupling_of_pair(pair: &CompatiblePair) -> Coupling {
    Coupling::new(
        VectorSpace::ground(),
        pair.pairing.clone(),
        pair.module.dim(),
        pair.contramodule.dim(),
    )
}

fn coupling_of_l(n: &SaydModule, m: &SaydContramodule) -> Result<Coupling> {
    let l = Contratensor::new(n, m)?;
    Ok(Coupling::new(l.space, l.projection, n.dim(), m.dim()))
}

fn ac_with(
    action: &CoalgebraAction,
    n: &SaydModule,
    m: &SaydContramodule,
    coupling: &Coupling,
    phi: &CochainClass,
    omega: &CochainClass,
) -> Result<CupProduct> {
    let cap = phi.degree + omega.degree + 1;
    let x = algebra_contra_cocyclic(&action.algebra, m, cap)?;
    let y = coalgebra_cocyclic(&action.coalgebra, n, cap)?;
    let phi = validated(&x, phi, "left")?;
    let omega = validated(&y, omega, "right")?;
    let conv = ConvolutionAlgebra::new(action)?;
    let top = cap - 1;
    let psi = psi_map(&conv, action.algebra.dim(), action.coalgebra.dim(), coupling, &x, &y, top)?;
    let iota = pullback_along(&conv.iota, &action.algebra.algebra, &coupling.values, top)?;
    run(x, &phi, y, &omega, &[psi, iota], &action.algebra.algebra, &coupling.values)
}

fn aa_with(
    a: &ModuleAlgebra,
    b: &ComoduleAlgebra,
    n: &SaydModule,
    m: &SaydContramodule,
    coupling: &Coupling,
    psi: &CochainClass,
    phi: &CochainClass,
) -> Result<CupProduct> {
    let cap = phi.degree + psi.degree + 1;
    let x = comodule_algebra_cocyclic(b, n, cap)?;
    let y = algebra_contra_cocyclic(a, m, cap)?;
    let psi = validated(&x, psi, "left")?;
    let phi = validated(&y, phi, "right")?;
    let crossed = crossed_product(a, b)?;
    let map = phi_map(a, b, &crossed, coupling, &x, &y, cap - 1)?;
    run(x, &psi, y, &phi, &[map], &crossed, &coupling.values)
}

/// `HC^p_H(A, M) (x) HC^q_H(C, N) -> HC^(p+q)(A)` through the convolution algebra.
pub fn cup_ac(
    action: &CoalgebraAction,
    pair: &CompatiblePair,
    phi: &CochainClass,
    omega: &CochainClass,
) -> Result<CupProduct> {
    require_compatible(pair)?;
    ac_with(action, &pair.module, &pair.contramodule, &coupling_of_pair(pair), phi, omega)
}

/// `^H HC^q(B, N) (x) HC^p_H(A, M) -> HC^(p+q)(A # B)`.
pub fn cup_aa(
    a: &ModuleAlgebra,
    b: &ComoduleAlgebra,
    pair: &CompatiblePair,
    psi: &CochainClass,
    phi: &CochainClass,
) -> Result<CupProduct> {
    require_compatible(pair)?;
    aa_with(a, b, &pair.module, &pair.contramodule, &coupling_of_pair(pair), psi, phi)
}

/// `cup_ac` valued in `L(N, M)`; no compatibility needed.
pub fn cup_ac_general(
    action: &CoalgebraAction,
    n: &SaydModule,
    m: &SaydContramodule,
    phi: &CochainClass,
    omega: &CochainClass,
) -> Result<CupProduct> {
    ac_with(action, n, m, &coupling_of_l(n, m)?, phi, omega)
}

/// `cup_aa` valued in `L(N, M)`; no compatibility needed.
pub fn cup_aa_general(
    a: &ModuleAlgebra,
    b: &ComoduleAlgebra,
    n: &SaydModule,
    m: &SaydContramodule,
    psi: &CochainClass,
    phi: &CochainClass,
) -> Result<CupProduct> {
    aa_with(a, b, n, m, &coupling_of_l(n, m)?, psi, phi)
}

/// Applies `e : L -> W` to every component of an `L`-valued cocycle.
pub fn collapse_cocycle(c: &BbCocycle, e: &Matrix) -> BbCocycle {
    let components = c
        .components
        .iter()
        .map(|y| {
            let k = y.len() / e.ncols();
            Matrix::identity(k).kron(e).apply(y)
        })
        .collect();
    BbCocycle {
        degree: c.degree,
        components,
    }
}
