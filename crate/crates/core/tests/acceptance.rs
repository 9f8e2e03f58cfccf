//! The acceptance criteria, one PASS/FAIL line each.
//!
//! Built with `harness = false` so the lines are always printed; the process
//! exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use hcc_core::cocyclic::{
    algebra_contra_cocyclic, algebra_module_cocyclic, coalgebra_cocyclic, comodule_algebra_cocyclic, cyclic_cochains,
    cyclic_cohomology, iso_i, plain_algebra_cocyclic, verify_cocyclic, verify_morphism, ClassKind, CochainClass,
    CocyclicModule, MixedComplex,
};
use hcc_core::coeff::{collapse_map, trivial_coefficients, CompatiblePair, Contratensor, SaydContramodule, SaydModule};
use hcc_core::cup::{
    collapse_cocycle, cup_aa, cup_aa_general, cup_ac, cup_ac_general, phi_map, psi_map, AlexanderWhitney, Bicocyclic,
    Coupling, CupProduct, TotalComplex,
};
use hcc_core::hopf::{
    crossed_product, group_algebra_cyclic, sweedler_h4, trivial_hopf, Algebra, CoalgebraAction, ComoduleAlgebra,
    ConvolutionAlgebra, Group, HopfAlgebra, ModuleAlgebra, ModuleCoalgebra,
};
use hcc_core::linear::{kernel, rat, Matrix, Rational, VectorSpace};
use hcc_core::report::Report;

type Outcome = Result<String, String>;

fn v(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| rat(x)).collect()
}

fn q() -> Arc<HopfAlgebra> {
    Arc::new(trivial_hopf())
}

fn z2() -> Arc<HopfAlgebra> {
    Arc::new(group_algebra_cyclic(2))
}

/// The ground field and the group algebra of Z/2, each with trivial coefficients.
fn test_set() -> Vec<Arc<HopfAlgebra>> {
    vec![q(), z2()]
}

fn signed(h: &Arc<HopfAlgebra>) -> SaydModule {
    SaydModule::modular_pair(h.clone(), &v(&[1, -1]), &v(&[1, 0]))
}

struct Log<'a>(&'a mut Vec<Report>);

impl Log<'_> {
    fn require(&mut self, r: Report) -> Result<(), String> {
        let failure = r.failed().next().map(|c| format!("{}: {}", r.subject, c.name));
        self.0.push(r);
        failure.map_or(Ok(()), Err)
    }

    fn condition(&mut self, subject: &str, name: &str, passed: bool) -> Result<(), String> {
        let mut r = Report::new(subject);
        r.condition(name, passed, None);
        self.require(r)
    }
}

fn within(limit: Duration, start: Instant, what: &str) -> Outcome {
    let t = start.elapsed();
    if t < limit {
        Ok(format!("{what} in {:.2} s", t.as_secs_f64()))
    } else {
        Err(format!("{what} took {:.2} s, limit {} s", t.as_secs_f64(), limit.as_secs()))
    }
}

fn axiom_suites(log: &mut Log) -> Outcome {
    let start = Instant::now();
    let g = Group::symmetric3();
    let s3 = Arc::new(g.hopf_algebra("Q[S3]"));
    let h4 = Arc::new(sweedler_h4());
    let hopfs = [q(), z2(), s3.clone(), h4.clone()];
    for h in &hopfs {
        log.require(h.check_axioms())?;
        log.require(ModuleAlgebra::adjoint(h.clone()).check())?;
        log.require(ModuleCoalgebra::regular(h.clone()).check())?;
        log.require(ComoduleAlgebra::regular(h.clone()).check())?;
        log.require(CoalgebraAction::adjoint(h.clone()).check())?;
    }
    let modules = [
        SaydModule::trivial(q()),
        SaydModule::trivial(z2()),
        signed(&z2()),
        SaydModule::modular_pair(z2(), &v(&[1, 1]), &v(&[0, 1])),
        SaydModule::trivial(s3.clone()),
        SaydModule::conjugation(&g, s3.clone()),
        SaydModule::modular_pair(h4.clone(), &v(&[1, -1, 0, 0]), &v(&[1, 0, 0, 0])),
        SaydModule::modular_pair(h4, &v(&[1, 1, 0, 0]), &v(&[0, 1, 0, 0])),
    ];
    let count = modules.len();
    for m in modules {
        log.require(m.check())?;
        log.require(SaydContramodule::dual_of(&m).check())?;
        log.require(CompatiblePair::evaluation(m).check())?;
    }
    for h in [q(), z2(), s3] {
        log.require(SaydContramodule::trivial(h).check())?;
    }
    within(
        Duration::from_secs(5),
        start,
        &format!("4 Hopf algebras, {count} modules with their duals"),
    )
}

/// The four constructions with trivial coefficients at `cap`.
fn constructions(h: &Arc<HopfAlgebra>, cap: usize) -> Vec<CocyclicModule> {
    let n = SaydModule::trivial(h.clone());
    let m = SaydContramodule::trivial(h.clone());
    let a = ModuleAlgebra::adjoint(h.clone());
    vec![
        coalgebra_cocyclic(&ModuleCoalgebra::regular(h.clone()), &n, cap).unwrap(),
        algebra_module_cocyclic(&a, &n, cap).unwrap(),
        comodule_algebra_cocyclic(&ComoduleAlgebra::regular(h.clone()), &n, cap).unwrap(),
        algebra_contra_cocyclic(&a, &m, cap).unwrap(),
    ]
}

fn cocyclic_identities(log: &mut Log) -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for h in test_set() {
        for x in constructions(&h, 4) {
            let r = verify_cocyclic(&x);
            let t4 = x.tau(4).pow(5) == Matrix::identity(x.dim(4));
            log.require(r)?;
            log.condition(&x.name, "t^5 = id in degree 4", t4)?;
            count += 1;
        }
    }
    within(Duration::from_secs(60), start, &format!("{count} cocyclic modules to degree 4"))
}

fn isomorphism(log: &mut Log) -> Outcome {
    let h = z2();
    let a = ModuleAlgebra::adjoint(h.clone());
    for m in [SaydModule::trivial(h.clone()), signed(&h)] {
        let x = algebra_module_cocyclic(&a, &m, 3).map_err(|e| e.to_string())?;
        let y = algebra_contra_cocyclic(&a, &SaydContramodule::dual_of(&m), 3).map_err(|e| e.to_string())?;
        let iso = iso_i(&x, &y, m.dim()).map_err(|e| e.to_string())?;
        log.require(verify_morphism(&iso, &x, &y))?;
    }
    Ok("I and J inverse, I a cyclic map, degrees 0..3, trivial and signed coefficients".into())
}

/// `C_H(A, M) (x) C_H(C, N)` and `^H C(B, N) (x) C_H(A, M)` with trivial coefficients.
fn bicocyclics(h: &Arc<HopfAlgebra>, cap: usize) -> Vec<Bicocyclic> {
    let x = constructions(h, cap);
    let (c, b, a) = (x[0].clone(), x[2].clone(), x[3].clone());
    vec![Bicocyclic::new(a.clone(), c).unwrap(), Bicocyclic::new(b, a).unwrap()]
}

fn mixed_laws(log: &mut Log) -> Outcome {
    let mut count = 0;
    for h in test_set() {
        for x in constructions(&h, 4) {
            log.require(MixedComplex::of_cocyclic(&x).check())?;
            let (mc, _) = MixedComplex::normalized(&x).map_err(|e| e.to_string())?;
            log.require(mc.check())?;
            count += 1;
        }
        for w in bicocyclics(&h, 4) {
            log.require(w.verify())?;
            let tot = TotalComplex::new(&w).map_err(|e| e.to_string())?;
            log.require(tot.mixed.check())?;
            let aw = AlexanderWhitney::new(&w, &tot).map_err(|e| e.to_string())?;
            log.require(aw.diagonal_mixed.check())?;
            count += 1;
        }
    }
    Ok(format!("{count} mixed complexes and their totals/diagonals to degree 4"))
}

fn aw_chain_map(log: &mut Log) -> Outcome {
    for w in bicocyclics(&z2(), 4) {
        let tot = TotalComplex::new(&w).map_err(|e| e.to_string())?;
        let aw = AlexanderWhitney::new(&w, &tot).map_err(|e| e.to_string())?;
        log.require(aw.verify_chain_map(&tot))?;
    }
    Ok("b_D AW = AW b_T from every Tot^n with n <= 3".into())
}

fn couplings(pair: &CompatiblePair) -> (Coupling, Coupling) {
    let (dn, dm) = (pair.module.dim(), pair.contramodule.dim());
    let l = Contratensor::new(&pair.module, &pair.contramodule).unwrap();
    (
        Coupling::new(VectorSpace::ground(), pair.pairing.clone(), dn, dm),
        Coupling::new(l.space, l.projection, dn, dm),
    )
}

fn cyclic_maps(log: &mut Log) -> Outcome {
    let h = z2();
    let cap = 3;
    let action = CoalgebraAction::adjoint(h.clone());
    let conv = ConvolutionAlgebra::new(&action).map_err(|e| e.to_string())?;
    let a = ModuleAlgebra::adjoint(h.clone());
    let b = ComoduleAlgebra::regular(h.clone());
    let crossed = crossed_product(&a, &b).map_err(|e| e.to_string())?;
    let mut relations = 0;
    for pair in [trivial_coefficients(h.clone()), CompatiblePair::evaluation(signed(&h))] {
        let (scalar, l) = couplings(&pair);
        let x = algebra_contra_cocyclic(&action.algebra, &pair.contramodule, cap).unwrap();
        let y = coalgebra_cocyclic(&action.coalgebra, &pair.module, cap).unwrap();
        relations += y
            .realizations
            .iter()
            .filter_map(|r| r.null_relations())
            .map(Matrix::ncols)
            .sum::<usize>();
        let d = Bicocyclic::new(x.clone(), y.clone()).unwrap().diagonal();
        for c in [&scalar, &l] {
            let psi = psi_map(&conv, action.algebra.dim(), action.coalgebra.dim(), c, &x, &y, cap)
                .map_err(|e| e.to_string())?;
            log.require(psi.verify(&d))?;
        }
        let xb = comodule_algebra_cocyclic(&b, &pair.module, cap).unwrap();
        let ya = algebra_contra_cocyclic(&a, &pair.contramodule, cap).unwrap();
        let d = Bicocyclic::new(xb.clone(), ya.clone()).unwrap().diagonal();
        for c in [&scalar, &l] {
            let phi = phi_map(&a, &b, &crossed, c, &xb, &ya, cap).map_err(|e| e.to_string())?;
            log.require(phi.verify(&d))?;
        }
    }
    log.condition("Psi", "the (x)_H relation subspace is nonzero", relations > 0)?;
    Ok(format!(
        "Psi, Phi and their L-valued forms commute with faces, degeneracies and t to degree 3; {relations} relations annihilated"
    ))
}

/// A basis of the cyclic cocycles in degree `n`, or the zero cochain if there are none.
fn cyclic_cocycles(x: &CocyclicModule, n: usize) -> Vec<Vec<Rational>> {
    let k = cyclic_cochains(x, n);
    let w = kernel(&x.hochschild_b(n).mul(&k.embedding()));
    let z = k.embedding().mul(&w.embedding());
    if z.ncols() == 0 {
        return vec![vec![rat(0); x.dim(n)]];
    }
    (0..z.ncols()).map(|j| z.column(j)).collect()
}

fn class(x: &CocyclicModule, n: usize, u: Vec<Rational>) -> CochainClass {
    CochainClass::new(x, n, u, ClassKind::CyclicCocycle).unwrap()
}

fn valid(log: &mut Log, c: &CupProduct) -> Result<(), String> {
    log.require(c.checks.clone())?;
    log.require(c.cocycle.check(&c.mixed()))?;
    log.require(c.completion.check(&c.mixed()))
}

struct Inputs {
    action: CoalgebraAction,
    pair: CompatiblePair,
    a: ModuleAlgebra,
    b: ComoduleAlgebra,
}

impl Inputs {
    fn trivial(h: Arc<HopfAlgebra>) -> Self {
        Inputs {
            action: CoalgebraAction::adjoint(h.clone()),
            pair: trivial_coefficients(h.clone()),
            a: ModuleAlgebra::adjoint(h.clone()),
            b: ComoduleAlgebra::regular(h),
        }
    }

    /// Pairs of cyclic cocycle inputs for the ac and aa pipelines in degrees `(p, q)`.
    fn ac_inputs(&self, p: usize, q: usize) -> Vec<(CochainClass, CochainClass)> {
        let cap = p + q + 1;
        let x = algebra_contra_cocyclic(&self.action.algebra, &self.pair.contramodule, cap).unwrap();
        let y = coalgebra_cocyclic(&self.action.coalgebra, &self.pair.module, cap).unwrap();
        product(&x, p, &y, q)
    }

    fn aa_inputs(&self, p: usize, q: usize) -> Vec<(CochainClass, CochainClass)> {
        let cap = p + q + 1;
        let x = comodule_algebra_cocyclic(&self.b, &self.pair.module, cap).unwrap();
        let y = algebra_contra_cocyclic(&self.a, &self.pair.contramodule, cap).unwrap();
        product(&x, q, &y, p)
    }
}

fn product(x: &CocyclicModule, p: usize, y: &CocyclicModule, q: usize) -> Vec<(CochainClass, CochainClass)> {
    let mut out = Vec::new();
    for u in cyclic_cocycles(x, p) {
        for w in cyclic_cocycles(y, q) {
            out.push((class(x, p, u.clone()), class(y, q, w)));
        }
    }
    out
}

const LOW: [(usize, usize); 4] = [(0, 0), (0, 1), (1, 0), (1, 1)];

fn cup_pipelines(log: &mut Log) -> Outcome {
    let mut runs = 0;
    for h in test_set() {
        let s = Inputs::trivial(h);
        let (n, m) = (&s.pair.module, &s.pair.contramodule);
        for (p, q) in LOW {
            for (u, w) in s.ac_inputs(p, q) {
                valid(log, &cup_ac(&s.action, &s.pair, &u, &w).map_err(|e| e.to_string())?)?;
                valid(log, &cup_ac_general(&s.action, n, m, &u, &w).map_err(|e| e.to_string())?)?;
                runs += 2;
            }
            for (u, w) in s.aa_inputs(p, q) {
                valid(log, &cup_aa(&s.a, &s.b, &s.pair, &u, &w).map_err(|e| e.to_string())?)?;
                valid(log, &cup_aa_general(&s.a, &s.b, n, m, &u, &w).map_err(|e| e.to_string())?)?;
                runs += 2;
            }
        }
    }
    let units = unit_classes(log)?;
    let perturbed = perturbations(log)?;
    Ok(format!(
        "{runs} products valid; {units} unit-class products reproduce their input; {perturbed} perturbed pairs cohomologous"
    ))
}

/// Over `H = Q` the unit class on one side returns the other input.
fn unit_classes(log: &mut Log) -> Result<usize, String> {
    let h = q();
    let pair = trivial_coefficients(h.clone());
    let mut count = 0;
    for alg in [Algebra::ground(), group_algebra_cyclic(2).algebra()] {
        let a = ModuleAlgebra::trivial(h.clone(), alg.clone());
        let action = CoalgebraAction::ground(a.clone());
        let b = ComoduleAlgebra::trivial(h.clone(), Algebra::ground());
        for p in 0..=1 {
            let cap = p + 1;
            let x = algebra_contra_cocyclic(&a, &pair.contramodule, cap).unwrap();
            let y = coalgebra_cocyclic(&action.coalgebra, &pair.module, cap).unwrap();
            let xb = comodule_algebra_cocyclic(&b, &pair.module, cap).unwrap();
            for u in cyclic_cocycles(&x, p) {
                let expected = x.realizations[p].lift().apply(&u);
                let phi = class(&x, p, u);
                let c = cup_ac(&action, &pair, &phi, &class(&y, 0, vec![rat(1)])).map_err(|e| e.to_string())?;
                valid(log, &c)?;
                log.condition("unit class", &format!("ac, degree {p}: output is the input"), c.cocycle.top() == &expected[..])?;
                let c = cup_aa(&a, &b, &pair, &class(&xb, 0, vec![rat(1)]), &phi).map_err(|e| e.to_string())?;
                valid(log, &c)?;
                log.condition("unit class", &format!("aa, degree {p}: output is the input"), c.cocycle.top() == &expected[..])?;
                count += 2;
            }
        }
    }
    Ok(count)
}

/// A nonzero `b(eta)` for a cyclic cochain `eta` in degree `n - 1`, if any.
fn coboundary_shift(x: &CocyclicModule, n: usize) -> Option<Vec<Rational>> {
    if n == 0 {
        return None;
    }
    let etas = cyclic_cochains(x, n - 1).embedding();
    (0..etas.ncols())
        .map(|j| x.hochschild_b(n - 1).apply(&etas.column(j)))
        .find(|s| s.iter().any(|v| *v != rat(0)))
}

fn plus(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Shifting either input by a coboundary changes the output by a total coboundary.
fn perturbations(log: &mut Log) -> Result<usize, String> {
    let mut count = 0;
    let mut degrees = LOW.to_vec();
    degrees.push((2, 0));
    for h in [z2(), Arc::new(Group::symmetric3().hopf_algebra("Q[S3]"))] {
        let s = Inputs::trivial(h);
        for &(p, q) in &degrees {
            let cap = p + q + 1;
            let x = algebra_contra_cocyclic(&s.action.algebra, &s.pair.contramodule, cap).unwrap();
            let y = coalgebra_cocyclic(&s.action.coalgebra, &s.pair.module, cap).unwrap();
            let u = cyclic_cohomology(&x, p).map_err(|e| e.to_string())?;
            let w = cyclic_cohomology(&y, q).map_err(|e| e.to_string())?;
            if u.dim == 0 || w.dim == 0 {
                continue;
            }
            let (u, w) = (u.representatives.column(0), w.representatives.column(0));
            let mut variants = Vec::new();
            if let Some(shift) = coboundary_shift(&x, p) {
                variants.push((plus(&u, &shift), w.clone()));
            }
            if let Some(shift) = coboundary_shift(&y, q) {
                variants.push((u.clone(), plus(&w, &shift)));
            }
            let base = cup_ac(&s.action, &s.pair, &class(&x, p, u.clone()), &class(&y, q, w.clone()))
                .map_err(|e| e.to_string())?;
            for (u2, w2) in variants {
                let c = cup_ac(&s.action, &s.pair, &class(&x, p, u2), &class(&y, q, w2)).map_err(|e| e.to_string())?;
                valid(log, &c)?;
                let diff: Vec<Rational> = base
                    .cocycle
                    .total_vector()
                    .iter()
                    .zip(c.cocycle.total_vector())
                    .map(|(a, b)| a - b)
                    .collect();
                log.condition(
                    "perturbation",
                    &format!("degrees ({p}, {q}): outputs differ by a coboundary"),
                    base.mixed().is_total_coboundary(p + q, &diff),
                )?;
                count += 1;
            }
        }
    }
    log.condition("perturbation", "at least one nontrivial perturbation", count > 0)?;
    Ok(count)
}

fn collapse_consistency(log: &mut Log) -> Outcome {
    let mut count = 0;
    for h in test_set() {
        let s = Inputs::trivial(h);
        let (n, m) = (&s.pair.module, &s.pair.contramodule);
        let l = Contratensor::new(n, m).map_err(|e| e.to_string())?;
        let e = collapse_map(&s.pair, &l).map_err(|e| e.to_string())?;
        for (p, q) in LOW {
            for (u, w) in s.ac_inputs(p, q) {
                let plain = cup_ac(&s.action, &s.pair, &u, &w).map_err(|e| e.to_string())?;
                let general = cup_ac_general(&s.action, n, m, &u, &w).map_err(|e| e.to_string())?;
                let same = collapse_cocycle(&general.cocycle, &e) == plain.cocycle;
                log.condition("collapse", &format!("ac ({p}, {q})"), same)?;
                count += 1;
            }
            for (u, w) in s.aa_inputs(p, q) {
                let plain = cup_aa(&s.a, &s.b, &s.pair, &u, &w).map_err(|e| e.to_string())?;
                let general = cup_aa_general(&s.a, &s.b, n, m, &u, &w).map_err(|e| e.to_string())?;
                let same = collapse_cocycle(&general.cocycle, &e) == plain.cocycle;
                log.condition("collapse", &format!("aa ({p}, {q})"), same)?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} products agree componentwise after E"))
}

/// Rank over the rationals by elimination on dense rows.
fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i][c] != rat(0)) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = rat(1) / rows[r][c].clone();
        let head = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != rat(0) {
                let f = row[c].clone() * inv.clone();
                for (x, y) in row.iter_mut().zip(&head) {
                    *x -= f.clone() * y;
                }
            }
        }
        r += 1;
    }
    r
}

fn matmul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(rat(0), |acc, k| acc + row[k].clone() * b[k][j].clone()))
                .collect()
        })
        .collect()
}

/// Cyclic cohomology dimensions of an algebra from its structure constants,
/// through the projector onto lambda-invariant cochains.
struct LambdaOracle {
    d: usize,
    /// `prod[i][j][k]`: coefficient of `e_k` in `e_i e_j`.
    prod: Vec<Vec<Vec<Rational>>>,
}

impl LambdaOracle {
    fn new(a: &Algebra) -> Self {
        let d = a.space.dim();
        let mut prod = vec![vec![vec![rat(0); d]; d]; d];
        for (k, col, val) in a.mul.entries() {
            prod[col / d][col % d][k] = val.clone();
        }
        LambdaOracle { d, prod }
    }

    fn tuple(&self, mut index: usize, len: usize) -> Vec<usize> {
        let mut t = vec![0; len];
        for slot in t.iter_mut().rev() {
            *slot = index % self.d;
            index /= self.d;
        }
        t
    }

    fn index(&self, t: &[usize]) -> usize {
        t.iter().fold(0, |acc, &x| acc * self.d + x)
    }

    /// `(1/(n+1)) sum_k lambda^k` on `C^n`.
    fn projector(&self, n: usize) -> Vec<Vec<Rational>> {
        let size = self.d.pow(n as u32 + 1);
        let sgn = if n.is_multiple_of(2) { rat(1) } else { rat(-1) };
        let weight = rat(1) / rat(n as i64 + 1);
        let mut p = vec![vec![rat(0); size]; size];
        for row in 0..size {
            // (lambda^k phi)(a) = sgn^k phi(a rotated right by k)
            let mut t = self.tuple(row, n + 1);
            let mut s = rat(1);
            for _ in 0..=n {
                p[row][self.index(&t)] += s.clone() * weight.clone();
                t.rotate_right(1);
                s *= sgn.clone();
            }
        }
        p
    }

    /// Hochschild coboundary `C^n -> C^(n+1)`.
    fn coboundary(&self, n: usize) -> Vec<Vec<Rational>> {
        let (rows, cols) = (self.d.pow(n as u32 + 2), self.d.pow(n as u32 + 1));
        let mut b = vec![vec![rat(0); cols]; rows];
        for (row, out) in b.iter_mut().enumerate() {
            let t = self.tuple(row, n + 2);
            for i in 0..=n + 1 {
                let sign = if i % 2 == 0 { rat(1) } else { rat(-1) };
                let (x, y) = if i <= n { (t[i], t[i + 1]) } else { (t[n + 1], t[0]) };
                for k in 0..self.d {
                    let c = &self.prod[x][y][k];
                    if *c == rat(0) {
                        continue;
                    }
                    let mut s: Vec<usize> = if i <= n {
                        let mut s = t[..i].to_vec();
                        s.push(k);
                        s.extend_from_slice(&t[i + 2..]);
                        s
                    } else {
                        let mut s = vec![k];
                        s.extend_from_slice(&t[1..=n]);
                        s
                    };
                    s.truncate(n + 1);
                    out[self.index(&s)] += sign.clone() * c.clone();
                }
            }
        }
        b
    }

    fn cyclic_dims(&self, top: usize) -> Vec<usize> {
        let bp: Vec<(usize, usize)> = (0..=top)
            .map(|n| {
                let p = self.projector(n);
                (rank(p.clone()), rank(matmul(&self.coboundary(n), &p)))
            })
            .collect();
        (0..=top)
            .map(|n| bp[n].0 - bp[n].1 - if n == 0 { 0 } else { bp[n - 1].1 })
            .collect()
    }
}

fn classical(log: &mut Log) -> Outcome {
    let ground = Algebra::ground();
    let start = Instant::now();
    let x = plain_algebra_cocyclic(&ground, &VectorSpace::ground(), 4).map_err(|e| e.to_string())?;
    let dims: Vec<usize> = (0..=3).map(|n| cyclic_cohomology(&x, n).unwrap().dim).collect();
    let t_q = start.elapsed();
    let oracle = LambdaOracle::new(&ground).cyclic_dims(3);
    log.condition("HC of Q", "dims match the lambda-rank oracle", dims == oracle)?;
    log.condition("HC of Q", "dims are 1, 0, 1, 0", dims == [1, 0, 1, 0])?;

    let z2 = group_algebra_cyclic(2).algebra();
    let start = Instant::now();
    let y = plain_algebra_cocyclic(&z2, &VectorSpace::ground(), 1).map_err(|e| e.to_string())?;
    let hc0 = cyclic_cohomology(&y, 0).map_err(|e| e.to_string())?.dim;
    let t_z2 = start.elapsed();
    let oracle = LambdaOracle::new(&z2).cyclic_dims(0)[0];
    log.condition("HC^0 of Q[Z2]", "dim matches the trace-space oracle", hc0 == oracle && hc0 == 2)?;
    for (name, alg) in [("Q[Z2]", z2), ("Q[S3]", Group::symmetric3().hopf_algebra("Q[S3]").algebra())] {
        let x = plain_algebra_cocyclic(&alg, &VectorSpace::ground(), 3).map_err(|e| e.to_string())?;
        let lib: Vec<usize> = (0..=2).map(|n| cyclic_cohomology(&x, n).unwrap().dim).collect();
        let oracle = LambdaOracle::new(&alg).cyclic_dims(2);
        log.condition(&format!("HC of {name}"), "degrees 0..2 match the lambda-rank oracle", lib == oracle)?;
    }
    let limit = Duration::from_secs(1);
    if t_q >= limit || t_z2 >= limit {
        return Err(format!("took {:.2} s and {:.2} s, limit 1 s each", t_q.as_secs_f64(), t_z2.as_secs_f64()));
    }
    Ok(format!(
        "HC(Q) = {dims:?}, HC^0(Q[Z2]) = {hc0} in {:.3} s and {:.3} s",
        t_q.as_secs_f64(),
        t_z2.as_secs_f64()
    ))
}

type Criterion = fn(&mut Log) -> Outcome;

const CRITERIA: [(&str, Criterion); 9] = [
    ("axiom suites", axiom_suites),
    ("cocyclic identity suite", cocyclic_identities),
    ("module/contramodule isomorphism", isomorphism),
    ("mixed-complex laws", mixed_laws),
    ("Alexander-Whitney chain map", aw_chain_map),
    ("Psi and Phi are cyclic maps", cyclic_maps),
    ("cup-product pipelines", cup_pipelines),
    ("general and scalar products agree", collapse_consistency),
    ("classical sanity", classical),
];

fn run_suite() -> (Vec<Outcome>, Vec<Report>) {
    let mut reports = Vec::new();
    let outcomes = CRITERIA
        .iter()
        .map(|(_, f)| {
            let mut log = Log(&mut reports);
            catch_unwind(AssertUnwindSafe(|| f(&mut log))).unwrap_or_else(|e| {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                Err(format!("panicked: {msg}"))
            })
        })
        .collect();
    (outcomes, reports)
}

fn main() {
    // a `--list` probe from the test runner expects no output
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let (first, reports_a) = run_suite();
    let (_, reports_b) = run_suite();
    let json_a = serde_json::to_string(&reports_a).expect("serialize");
    let json_b = serde_json::to_string(&reports_b).expect("serialize");
    let determinism: Outcome = if json_a == json_b {
        Ok(format!("{} reports, {} bytes, identical on rerun", reports_a.len(), json_a.len()))
    } else {
        Err("reports differ between runs".into())
    };

    let mut failed = 0;
    let names = CRITERIA.iter().map(|(n, _)| *n).chain(["deterministic reports"]);
    for (i, (name, outcome)) in names.zip(first.into_iter().chain([determinism])).enumerate() {
        let (status, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("[{status}] {:>2}. {name}: {detail}", i + 1);
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
