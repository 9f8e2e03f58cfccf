//! The JSON catalog file: named Hopf algebras, algebras, coalgebras,
//! coefficients, pairings, cocyclic constructions and cochains.
//!
//! Linear maps are sparse lists of `[output, input, value]` triples. `output`
//! and `input` are a basis label, or a list of labels when the side is a
//! tensor product (`[]` for the ground field). Values are integers or
//! `"p/q"` strings; decimals are rejected.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::Value;

use hcc_core::cocyclic::{
    algebra_contra_cocyclic, algebra_module_cocyclic, coalgebra_cocyclic, comodule_algebra_cocyclic,
    plain_algebra_cocyclic, ClassKind, CocyclicModule,
};
use hcc_core::coeff::{diagonal_pairing, CompatiblePair, SaydContramodule, SaydModule};
use hcc_core::hopf::{
    adjoint_action, group_algebra, group_algebra_cyclic, group_algebra_s3, sweedler_h4, trivial_hopf, Algebra,
    CoalgebraAction, ComoduleAlgebra, Group, HopfAlgebra, ModuleAlgebra, ModuleCoalgebra,
};
use hcc_core::linear::{parse_rational, rat, solve, Matrix, Rational, VectorSpace};
use hcc_core::HccError;

use crate::error::CliError;

type Entries = Vec<(Value, Value, Value)>;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawSpec {
    #[serde(default)]
    pub hopf_algebras: BTreeMap<String, RawHopf>,
    #[serde(default)]
    pub module_algebras: BTreeMap<String, RawAlgebra>,
    #[serde(default)]
    pub module_coalgebras: BTreeMap<String, RawCoalgebra>,
    #[serde(default)]
    pub comodule_algebras: BTreeMap<String, RawAlgebra>,
    #[serde(default)]
    pub coalgebra_actions: BTreeMap<String, RawAction>,
    #[serde(default)]
    pub modules: BTreeMap<String, RawModule>,
    #[serde(default)]
    pub contramodules: BTreeMap<String, RawContra>,
    #[serde(default)]
    pub pairs: BTreeMap<String, RawPair>,
    #[serde(default)]
    pub constructions: BTreeMap<String, RawConstruction>,
    #[serde(default)]
    pub cochains: BTreeMap<String, RawCochain>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawGroup {
    pub labels: Vec<String>,
    pub table: Vec<Vec<String>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawHopf {
    pub builtin: Option<String>,
    pub group: Option<RawGroup>,
    pub basis: Option<Vec<String>>,
    pub mul: Option<Entries>,
    pub unit: Option<Entries>,
    pub comul: Option<Entries>,
    pub counit: Option<Entries>,
    pub antipode: Option<Entries>,
    pub antipode_inverse: Option<Entries>,
}

/// A module algebra (with `action`) or comodule algebra (with `coaction`).
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawAlgebra {
    pub hopf: String,
    pub builtin: Option<String>,
    pub basis: Option<Vec<String>>,
    pub mul: Option<Entries>,
    pub unit: Option<Entries>,
    pub action: Option<Entries>,
    pub coaction: Option<Entries>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCoalgebra {
    pub hopf: String,
    pub builtin: Option<String>,
    pub basis: Option<Vec<String>>,
    pub comul: Option<Entries>,
    pub counit: Option<Entries>,
    pub action: Option<Entries>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawAction {
    pub coalgebra: String,
    pub algebra: String,
    pub builtin: Option<String>,
    pub action: Option<Entries>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawModularPair {
    pub delta: Vec<Value>,
    pub sigma: Vec<Value>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawModule {
    pub hopf: String,
    pub builtin: Option<String>,
    pub modular_pair: Option<RawModularPair>,
    pub basis: Option<Vec<String>>,
    pub action: Option<Entries>,
    pub coaction: Option<Entries>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawContra {
    pub hopf: Option<String>,
    pub builtin: Option<String>,
    pub dual_of: Option<String>,
    pub basis: Option<Vec<String>>,
    pub action: Option<Entries>,
    pub alpha: Option<Entries>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawPair {
    pub module: String,
    pub contramodule: String,
    pub pairing: Value,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConstruction {
    pub kind: String,
    pub algebra: Option<String>,
    pub coalgebra: Option<String>,
    pub comodule_algebra: Option<String>,
    pub module: Option<String>,
    pub contramodule: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCochain {
    pub construction: String,
    pub degree: usize,
    pub values: Vec<Value>,
    #[serde(default)]
    pub kind: Option<String>,
}

/// Which cocyclic module a construction builds, by the names it refers to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    Coalgebra { coalgebra: String, module: String },
    AlgebraModule { algebra: String, module: String },
    AlgebraContra { algebra: String, contramodule: String },
    ComoduleAlgebra { comodule_algebra: String, module: String },
    /// Plain cochains of a module algebra, comodule algebra or Hopf algebra, scalar valued.
    Plain { algebra: String },
}

#[derive(Debug, Clone)]
pub struct Cochain {
    pub construction: String,
    pub degree: usize,
    pub values: Vec<Rational>,
    pub kind: ClassKind,
}

/// Every object of a catalog file, resolved and shape-checked.
#[derive(Debug, Default)]
pub struct Catalog {
    pub hopf: BTreeMap<String, Arc<HopfAlgebra>>,
    pub module_algebras: BTreeMap<String, ModuleAlgebra>,
    pub module_coalgebras: BTreeMap<String, ModuleCoalgebra>,
    pub comodule_algebras: BTreeMap<String, ComoduleAlgebra>,
    pub actions: BTreeMap<String, CoalgebraAction>,
    pub modules: BTreeMap<String, SaydModule>,
    pub contramodules: BTreeMap<String, SaydContramodule>,
    pub pairs: BTreeMap<String, CompatiblePair>,
    pub constructions: BTreeMap<String, Construction>,
    pub cochains: BTreeMap<String, Cochain>,
    /// `(coalgebra, algebra)` names of each coalgebra action.
    pub action_parts: BTreeMap<String, (String, String)>,
    /// `(module, contramodule)` names of each pair.
    pub pair_parts: BTreeMap<String, (String, String)>,
}

fn input(at: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{at}: {msg}"))
}

/// Reserved Hopf algebra names usable without a declaration.
pub fn builtin_hopf(name: &str) -> Option<HopfAlgebra> {
    match name {
        "trivial" => Some(trivial_hopf()),
        "group:S3" => Some(group_algebra_s3()),
        "sweedler4" => Some(sweedler_h4()),
        _ => {
            let n: usize = name.strip_prefix("group:Z")?.parse().ok()?;
            (n >= 1).then(|| group_algebra_cyclic(n))
        }
    }
}

pub fn scalar(v: &Value, at: &str) -> Result<Rational, CliError> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| input(at, e)),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()).map_err(|e| input(at, e)),
        Value::Number(n) => Err(input(at, format!("decimal literal {n} is not allowed; write p/q"))),
        other => Err(input(at, format!("expected a rational, found {other}"))),
    }
}

fn scalars(vs: &[Value], at: &str) -> Result<Vec<Rational>, CliError> {
    vs.iter()
        .enumerate()
        .map(|(i, v)| scalar(v, &format!("{at}[{i}]")))
        .collect()
}

/// Index of a basis tuple in the tensor product of `factors`.
fn tuple_index(v: &Value, factors: &[&VectorSpace], at: &str) -> Result<usize, CliError> {
    let labels: Vec<&str> = match v {
        Value::String(s) => vec![s.as_str()],
        Value::Array(xs) => xs
            .iter()
            .map(|x| x.as_str().ok_or_else(|| input(at, "basis labels must be strings")))
            .collect::<Result<_, _>>()?,
        other => return Err(input(at, format!("expected a label or list of labels, found {other}"))),
    };
    if labels.len() != factors.len() {
        return Err(CliError::Input(format!(
            "{at}: dimension mismatch: expected {} tensor factor(s), found {}",
            factors.len(),
            labels.len()
        )));
    }
    let mut index = 0;
    for (label, space) in labels.iter().zip(factors) {
        let i = space
            .index_of(label)
            .ok_or_else(|| input(at, format!("unknown basis label {label:?}")))?;
        index = index * space.dim() + i;
    }
    Ok(index)
}

/// Assembles a sparse map from triples; repeated positions add up.
pub fn map_from(entries: &Entries, out: &[&VectorSpace], inp: &[&VectorSpace], at: &str) -> Result<Matrix, CliError> {
    let rows = out.iter().map(|s| s.dim()).product();
    let cols = inp.iter().map(|s| s.dim()).product();
    let mut triples = Vec::with_capacity(entries.len());
    for (k, (o, i, v)) in entries.iter().enumerate() {
        let here = format!("{at}[{k}]");
        triples.push((
            tuple_index(o, out, &here)?,
            tuple_index(i, inp, &here)?,
            scalar(v, &here)?,
        ));
    }
    Ok(Matrix::from_entries(rows, cols, triples))
}

fn required<'a, T>(x: &'a Option<T>, at: &str, field: &str) -> Result<&'a T, CliError> {
    x.as_ref().ok_or_else(|| input(at, format!("missing field {field:?}")))
}

fn basis(x: &Option<Vec<String>>, at: &str) -> Result<VectorSpace, CliError> {
    let labels = required(x, at, "basis")?;
    let mut seen = std::collections::BTreeSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(input(at, format!("duplicate basis label {l:?}")));
        }
    }
    Ok(VectorSpace::new(labels.clone()))
}

fn inverse(m: &Matrix, at: &str) -> Result<Matrix, CliError> {
    let d = m.nrows();
    let mut cols = Vec::with_capacity(d);
    for j in 0..d {
        let e = Matrix::identity(d).column(j);
        cols.push(solve(m, &e).ok_or_else(|| input(at, "antipode is not invertible"))?);
    }
    Ok(Matrix::from_columns(d, &cols))
}

fn parse_hopf(name: &str, raw: &RawHopf) -> Result<HopfAlgebra, CliError> {
    let at = format!("hopf_algebras.{name}");
    if let Some(b) = &raw.builtin {
        let mut h = builtin_hopf(b).ok_or_else(|| input(&at, format!("unknown builtin {b:?}")))?;
        h.name = name.to_string();
        return Ok(h);
    }
    if let Some(g) = &raw.group {
        let index = |l: &String| {
            g.labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| input(&at, format!("unknown group element {l:?}")))
        };
        let table = g
            .table
            .iter()
            .map(|row| row.iter().map(index).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        return group_algebra(g.labels.clone(), table, name).map_err(|e| input(&at, e));
    }
    let space = basis(&raw.basis, &at)?;
    let s = &space;
    let field = |f: &Option<Entries>, key: &str, out: &[&VectorSpace], inp: &[&VectorSpace]| {
        map_from(required(f, &at, key)?, out, inp, &format!("{at}.{key}"))
    };
    let antipode = field(&raw.antipode, "antipode", &[s], &[s])?;
    let antipode_inv = match &raw.antipode_inverse {
        Some(e) => map_from(e, &[s], &[s], &format!("{at}.antipode_inverse"))?,
        None => inverse(&antipode, &at)?,
    };
    Ok(HopfAlgebra {
        name: name.to_string(),
        mul: field(&raw.mul, "mul", &[s], &[s, s])?,
        unit: field(&raw.unit, "unit", &[s], &[])?,
        comul: field(&raw.comul, "comul", &[s, s], &[s])?,
        counit: field(&raw.counit, "counit", &[], &[s])?,
        antipode,
        antipode_inv,
        space,
    })
}

fn parse_algebra(raw: &RawAlgebra, at: &str) -> Result<Algebra, CliError> {
    let space = basis(&raw.basis, at)?;
    let s = &space;
    let mul = map_from(required(&raw.mul, at, "mul")?, &[s], &[s, s], &format!("{at}.mul"))?;
    let unit = map_from(required(&raw.unit, at, "unit")?, &[s], &[], &format!("{at}.unit"))?;
    Ok(Algebra::new(space, mul, unit))
}

fn ground() -> VectorSpace {
    VectorSpace::ground()
}

impl Catalog {
    pub fn from_json(text: &str) -> Result<Catalog, CliError> {
        let raw: RawSpec = serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("parse error at line {}, column {}: {e}", e.line(), e.column())))?;
        Catalog::from_raw(&raw)
    }

    pub fn from_raw(raw: &RawSpec) -> Result<Catalog, CliError> {
        let mut c = Catalog::default();
        for (name, h) in &raw.hopf_algebras {
            if builtin_hopf(name).is_some() {
                return Err(input(&format!("hopf_algebras.{name}"), "name is reserved for a builtin"));
            }
            c.hopf.insert(name.clone(), Arc::new(parse_hopf(name, h)?));
        }
        for (name, r) in &raw.module_algebras {
            let at = format!("module_algebras.{name}");
            let h = c.hopf_named(&r.hopf, &at)?;
            if r.coaction.is_some() {
                return Err(input(&at, "module algebras take an action, not a coaction"));
            }
            let a = match r.builtin.as_deref() {
                Some("adjoint") => ModuleAlgebra::adjoint(h),
                Some(other) => return Err(input(&at, format!("unknown builtin {other:?}"))),
                None => {
                    let alg = parse_algebra(r, &at)?;
                    match &r.action {
                        None => ModuleAlgebra::trivial(h, alg),
                        Some(e) => {
                            let m = map_from(e, &[&alg.space], &[&h.space, &alg.space], &format!("{at}.action"))?;
                            ModuleAlgebra::new(h, alg, m)
                        }
                    }
                }
            };
            c.module_algebras.insert(name.clone(), a);
        }
        for (name, r) in &raw.module_coalgebras {
            let at = format!("module_coalgebras.{name}");
            let h = c.hopf_named(&r.hopf, &at)?;
            let co = match r.builtin.as_deref() {
                Some("regular") => ModuleCoalgebra::regular(h),
                Some("ground") => ModuleCoalgebra::ground(h),
                Some(other) => return Err(input(&at, format!("unknown builtin {other:?}"))),
                None => {
                    let space = basis(&r.basis, &at)?;
                    let s = &space;
                    let comul = map_from(required(&r.comul, &at, "comul")?, &[s, s], &[s], &format!("{at}.comul"))?;
                    let counit = map_from(required(&r.counit, &at, "counit")?, &[], &[s], &format!("{at}.counit"))?;
                    let action = map_from(
                        required(&r.action, &at, "action")?,
                        &[s],
                        &[&h.space, s],
                        &format!("{at}.action"),
                    )?;
                    ModuleCoalgebra::new(h, space, comul, counit, action)
                }
            };
            c.module_coalgebras.insert(name.clone(), co);
        }
        for (name, r) in &raw.comodule_algebras {
            let at = format!("comodule_algebras.{name}");
            let h = c.hopf_named(&r.hopf, &at)?;
            if r.action.is_some() {
                return Err(input(&at, "comodule algebras take a coaction, not an action"));
            }
            let b = match r.builtin.as_deref() {
                Some("regular") => ComoduleAlgebra::regular(h),
                Some(other) => return Err(input(&at, format!("unknown builtin {other:?}"))),
                None => {
                    let alg = parse_algebra(r, &at)?;
                    match &r.coaction {
                        None => ComoduleAlgebra::trivial(h, alg),
                        Some(e) => {
                            let m = map_from(e, &[&h.space, &alg.space], &[&alg.space], &format!("{at}.coaction"))?;
                            ComoduleAlgebra::new(h, alg, m)
                        }
                    }
                }
            };
            c.comodule_algebras.insert(name.clone(), b);
        }
        for (name, r) in &raw.coalgebra_actions {
            let at = format!("coalgebra_actions.{name}");
            let co = c.lookup(&c.module_coalgebras, &r.coalgebra, "module coalgebra", &at)?.clone();
            let a = c.lookup(&c.module_algebras, &r.algebra, "module algebra", &at)?.clone();
            if co.hopf != a.hopf {
                return Err(input(&at, "coalgebra and algebra are over different Hopf algebras"));
            }
            let (dc, da) = (co.dim(), a.dim());
            let action = match (r.builtin.as_deref(), &r.action) {
                (Some("adjoint"), None) => {
                    let h = &co.hopf;
                    if dc != h.dim() || da != h.dim() {
                        return Err(input(&at, "dimension mismatch: adjoint needs C and A of the Hopf dimension"));
                    }
                    adjoint_action(h)
                }
                (Some("ground"), None) => {
                    if dc != 1 {
                        return Err(input(&at, "dimension mismatch: ground action needs a one-dimensional coalgebra"));
                    }
                    Matrix::identity(da)
                }
                (Some(other), None) => return Err(input(&at, format!("unknown builtin {other:?}"))),
                (None, Some(e)) => map_from(e, &[&a.algebra.space], &[&co.space, &a.algebra.space], &format!("{at}.action"))?,
                _ => return Err(input(&at, "give exactly one of \"builtin\" and \"action\"")),
            };
            c.actions.insert(name.clone(), CoalgebraAction::new(co, a, action));
            c.action_parts.insert(name.clone(), (r.coalgebra.clone(), r.algebra.clone()));
        }
        for (name, r) in &raw.modules {
            let at = format!("modules.{name}");
            let h = c.hopf_named(&r.hopf, &at)?;
            let m = match (r.builtin.as_deref(), &r.modular_pair) {
                (Some("trivial"), None) => SaydModule::trivial(h),
                (Some("conjugation"), None) => {
                    let g = group_of(&h).ok_or_else(|| input(&at, "conjugation needs a group algebra"))?;
                    SaydModule::conjugation(&g, h)
                }
                (Some(other), None) => return Err(input(&at, format!("unknown builtin {other:?}"))),
                (None, Some(mp)) => {
                    let delta = scalars(&mp.delta, &format!("{at}.modular_pair.delta"))?;
                    let sigma = scalars(&mp.sigma, &format!("{at}.modular_pair.sigma"))?;
                    if delta.len() != h.dim() || sigma.len() != h.dim() {
                        return Err(input(&at, format!("dimension mismatch: modular pair vectors need length {}", h.dim())));
                    }
                    SaydModule::modular_pair(h, &delta, &sigma)
                }
                (None, None) => {
                    let space = basis(&r.basis, &at)?;
                    let s = &space;
                    let action =
                        map_from(required(&r.action, &at, "action")?, &[s], &[s, &h.space], &format!("{at}.action"))?;
                    let coaction = map_from(
                        required(&r.coaction, &at, "coaction")?,
                        &[&h.space, s],
                        &[s],
                        &format!("{at}.coaction"),
                    )?;
                    SaydModule::new(h, space, action, coaction)
                }
                _ => return Err(input(&at, "give at most one of \"builtin\" and \"modular_pair\"")),
            };
            c.modules.insert(name.clone(), m);
        }
        for (name, r) in &raw.contramodules {
            let at = format!("contramodules.{name}");
            let m = match (&r.dual_of, r.builtin.as_deref()) {
                (Some(n), None) => SaydContramodule::dual_of(c.lookup(&c.modules, n, "module", &at)?),
                (None, Some("trivial")) => {
                    SaydContramodule::trivial(c.hopf_named(required(&r.hopf, &at, "hopf")?, &at)?)
                }
                (None, Some(other)) => return Err(input(&at, format!("unknown builtin {other:?}"))),
                (None, None) => {
                    let h = c.hopf_named(required(&r.hopf, &at, "hopf")?, &at)?;
                    let space = basis(&r.basis, &at)?;
                    let s = &space;
                    let action =
                        map_from(required(&r.action, &at, "action")?, &[s], &[&h.space, s], &format!("{at}.action"))?;
                    // Hom(H, M) is indexed by the dual basis of H
                    let alpha =
                        map_from(required(&r.alpha, &at, "alpha")?, &[s], &[&h.space, s], &format!("{at}.alpha"))?;
                    SaydContramodule::new(h, space, action, alpha)
                }
                _ => return Err(input(&at, "give at most one of \"dual_of\" and \"builtin\"")),
            };
            c.contramodules.insert(name.clone(), m);
        }
        for (name, r) in &raw.pairs {
            let at = format!("pairs.{name}");
            let n = c.lookup(&c.modules, &r.module, "module", &at)?.clone();
            let m = c.lookup(&c.contramodules, &r.contramodule, "contramodule", &at)?.clone();
            if n.hopf != m.hopf {
                return Err(input(&at, "module and contramodule are over different Hopf algebras"));
            }
            let pairing = match &r.pairing {
                Value::String(s) if s == "evaluation" => {
                    if n.dim() != m.dim() {
                        return Err(input(&at, "dimension mismatch: evaluation needs equal dimensions"));
                    }
                    diagonal_pairing(n.dim())
                }
                Value::Array(xs) => {
                    let entries: Entries = serde_json::from_value(Value::Array(xs.clone()))
                        .map_err(|e| input(&at, format!("pairing entries: {e}")))?;
                    map_from(&entries, &[], &[&n.space, &m.space], &format!("{at}.pairing"))?
                }
                other => return Err(input(&at, format!("pairing must be \"evaluation\" or triples, found {other}"))),
            };
            c.pairs.insert(name.clone(), CompatiblePair::new(n, m, pairing));
            c.pair_parts.insert(name.clone(), (r.module.clone(), r.contramodule.clone()));
        }
        for (name, r) in &raw.constructions {
            let at = format!("constructions.{name}");
            let need = |x: &Option<String>, f: &str| required(x, &at, f).cloned();
            let k = match r.kind.as_str() {
                "coalgebra" => Construction::Coalgebra {
                    coalgebra: need(&r.coalgebra, "coalgebra")?,
                    module: need(&r.module, "module")?,
                },
                "algebra-module" => Construction::AlgebraModule {
                    algebra: need(&r.algebra, "algebra")?,
                    module: need(&r.module, "module")?,
                },
                "algebra-contra" => Construction::AlgebraContra {
                    algebra: need(&r.algebra, "algebra")?,
                    contramodule: need(&r.contramodule, "contramodule")?,
                },
                "comodule-algebra" => Construction::ComoduleAlgebra {
                    comodule_algebra: need(&r.comodule_algebra, "comodule_algebra")?,
                    module: need(&r.module, "module")?,
                },
                "plain" => Construction::Plain {
                    algebra: need(&r.algebra, "algebra")?,
                },
                other => return Err(input(&at, format!("unknown construction kind {other:?}"))),
            };
            c.validate_construction(&k, &at)?;
            c.constructions.insert(name.clone(), k);
        }
        for (name, r) in &raw.cochains {
            let at = format!("cochains.{name}");
            if !c.constructions.contains_key(&r.construction) {
                return Err(CliError::Input(format!(
                    "{at}: unresolved name: construction {:?}",
                    r.construction
                )));
            }
            let kind = match r.kind.as_deref() {
                None | Some("cyclic") => ClassKind::CyclicCocycle,
                Some("hochschild") => ClassKind::HochschildCocycle,
                Some(other) => return Err(input(&at, format!("unknown cochain kind {other:?}"))),
            };
            c.cochains.insert(
                name.clone(),
                Cochain {
                    construction: r.construction.clone(),
                    degree: r.degree,
                    values: scalars(&r.values, &format!("{at}.values"))?,
                    kind,
                },
            );
        }
        Ok(c)
    }

    /// A declared Hopf algebra or a reserved builtin, which is then recorded.
    fn hopf_named(&mut self, name: &str, at: &str) -> Result<Arc<HopfAlgebra>, CliError> {
        if let Some(h) = self.hopf.get(name) {
            return Ok(h.clone());
        }
        let h = Arc::new(
            builtin_hopf(name)
                .ok_or_else(|| CliError::Input(format!("{at}: unresolved name: Hopf algebra {name:?}")))?,
        );
        self.hopf.insert(name.to_string(), h.clone());
        Ok(h)
    }

    fn lookup<'a, T>(&self, map: &'a BTreeMap<String, T>, name: &str, what: &str, at: &str) -> Result<&'a T, CliError> {
        map.get(name)
            .ok_or_else(|| CliError::Input(format!("{at}: unresolved name: {what} {name:?}")))
    }

    fn validate_construction(&self, k: &Construction, at: &str) -> Result<(), CliError> {
        let same = |a: &HopfAlgebra, b: &HopfAlgebra| {
            if a == b {
                Ok(())
            } else {
                Err(input(at, "the pieces are over different Hopf algebras"))
            }
        };
        match k {
            Construction::Coalgebra { coalgebra, module } => same(
                &self.lookup(&self.module_coalgebras, coalgebra, "module coalgebra", at)?.hopf,
                &self.lookup(&self.modules, module, "module", at)?.hopf,
            ),
            Construction::AlgebraModule { algebra, module } => same(
                &self.lookup(&self.module_algebras, algebra, "module algebra", at)?.hopf,
                &self.lookup(&self.modules, module, "module", at)?.hopf,
            ),
            Construction::AlgebraContra { algebra, contramodule } => same(
                &self.lookup(&self.module_algebras, algebra, "module algebra", at)?.hopf,
                &self.lookup(&self.contramodules, contramodule, "contramodule", at)?.hopf,
            ),
            Construction::ComoduleAlgebra { comodule_algebra, module } => same(
                &self.lookup(&self.comodule_algebras, comodule_algebra, "comodule algebra", at)?.hopf,
                &self.lookup(&self.modules, module, "module", at)?.hopf,
            ),
            Construction::Plain { algebra } => self.plain_algebra(algebra, at).map(|_| ()),
        }
    }

    fn plain_algebra(&self, name: &str, at: &str) -> Result<Algebra, CliError> {
        if let Some(a) = self.module_algebras.get(name) {
            return Ok(a.algebra.clone());
        }
        if let Some(b) = self.comodule_algebras.get(name) {
            return Ok(b.algebra.clone());
        }
        if let Some(h) = self.hopf.get(name) {
            return Ok(h.algebra());
        }
        builtin_hopf(name)
            .map(|h| h.algebra())
            .ok_or_else(|| CliError::Input(format!("{at}: unresolved name: algebra {name:?}")))
    }

    /// Builds a named construction up to `cap`.
    pub fn build(&self, name: &str, cap: usize) -> Result<CocyclicModule, CliError> {
        let at = format!("construction {name:?}");
        let k = self
            .constructions
            .get(name)
            .ok_or_else(|| CliError::Input(format!("unknown construction {name:?}")))?;
        let mut x = match k {
            Construction::Coalgebra { coalgebra, module } => {
                coalgebra_cocyclic(&self.module_coalgebras[coalgebra], &self.modules[module], cap)
            }
            Construction::AlgebraModule { algebra, module } => {
                algebra_module_cocyclic(&self.module_algebras[algebra], &self.modules[module], cap)
            }
            Construction::AlgebraContra { algebra, contramodule } => {
                algebra_contra_cocyclic(&self.module_algebras[algebra], &self.contramodules[contramodule], cap)
            }
            Construction::ComoduleAlgebra { comodule_algebra, module } => {
                comodule_algebra_cocyclic(&self.comodule_algebras[comodule_algebra], &self.modules[module], cap)
            }
            Construction::Plain { algebra } => {
                plain_algebra_cocyclic(&self.plain_algebra(algebra, &at)?, &ground(), cap)
            }
        }
        .map_err(CliError::from)?;
        x.name = name.to_string();
        Ok(x)
    }

    /// Every object name with its kind, in a fixed order.
    pub fn names(&self) -> Vec<(&'static str, String)> {
        let mut out = Vec::new();
        let mut add = |kind: &'static str, keys: Vec<&String>| out.extend(keys.into_iter().map(|k| (kind, k.clone())));
        add("hopf algebra", self.hopf.keys().collect());
        add("module algebra", self.module_algebras.keys().collect());
        add("module coalgebra", self.module_coalgebras.keys().collect());
        add("comodule algebra", self.comodule_algebras.keys().collect());
        add("coalgebra action", self.actions.keys().collect());
        add("SAYD module", self.modules.keys().collect());
        add("SAYD contramodule", self.contramodules.keys().collect());
        add("pair", self.pairs.keys().collect());
        add("construction", self.constructions.keys().collect());
        add("cochain", self.cochains.keys().collect());
        out
    }
}

/// Recovers the group of a group algebra from its structure constants.
fn group_of(h: &HopfAlgebra) -> Option<Group> {
    let n = h.dim();
    let mut table = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let col = h.mul.column(a * n + b);
            let hits: Vec<usize> = (0..n).filter(|&k| col[k] != rat(0)).collect();
            if hits.len() != 1 || col[hits[0]] != rat(1) {
                return None;
            }
            table[a][b] = hits[0];
        }
    }
    Group::from_table(h.space.labels().to_vec(), table).ok()
}

impl From<HccError> for CliError {
    fn from(e: HccError) -> Self {
        CliError::Core(e)
    }
}
