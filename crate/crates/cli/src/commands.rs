//! The three subcommands, each producing an [`Output`].

use hcc_core::cocyclic::{
    cyclic_cohomology, hochschild_cohomology, verify_cocyclic, verify_lambda_compatibility, ClassKind,
    CochainClass, CocyclicModule, Cohomology, MixedComplex,
};
use hcc_core::coeff::{collapse_map, Contratensor, SaydContramodule, SaydModule};
use hcc_core::cup::{collapse_cocycle, cup_aa, cup_aa_general, cup_ac, cup_ac_general, CupProduct};
use hcc_core::linear::rational::format_rational;
use hcc_core::linear::{rat, Matrix};
use hcc_core::report::Report;

use crate::error::CliError;
use crate::output::{CohomologyRow, CohomologyTable, CupSummary, DegreeGroup, Output, TensorValue};
use crate::spec::{Catalog, Construction};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Ac,
    Aa,
    AcGeneral,
    AaGeneral,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Ac => "ac",
            Variant::Aa => "aa",
            Variant::AcGeneral => "ac-general",
            Variant::AaGeneral => "aa-general",
        }
    }

    fn general(self) -> bool {
        matches!(self, Variant::AcGeneral | Variant::AaGeneral)
    }
}

#[derive(Debug, Clone)]
pub struct CupRequest {
    pub variant: Variant,
    pub p: usize,
    pub q: usize,
    pub left: String,
    pub right: String,
    pub action: Option<String>,
    pub pair: Option<String>,
}

/// Runs the checks for `names`, or for every object when `names` is empty.
pub fn check(catalog: &Catalog, names: &[String], cap: usize) -> Result<Output, CliError> {
    let all = catalog.names();
    let selected: Vec<(&str, String)> = if names.is_empty() {
        all
    } else {
        names
            .iter()
            .map(|n| {
                all.iter()
                    .find(|(_, m)| m == n)
                    .cloned()
                    .ok_or_else(|| CliError::Input(format!("unresolved name: {n:?}")))
            })
            .collect::<Result<_, _>>()?
    };
    let sections = selected
        .into_iter()
        .map(|(kind, name)| check_one(catalog, kind, &name, cap))
        .collect();
    Ok(Output::new("check", cap, sections))
}

fn check_one(catalog: &Catalog, kind: &str, name: &str, cap: usize) -> Report {
    let mut r = match kind {
        "hopf algebra" => catalog.hopf[name].check_axioms(),
        "module algebra" => catalog.module_algebras[name].check(),
        "module coalgebra" => catalog.module_coalgebras[name].check(),
        "comodule algebra" => catalog.comodule_algebras[name].check(),
        "coalgebra action" => catalog.actions[name].check(),
        "SAYD module" => catalog.modules[name].check(),
        "SAYD contramodule" => catalog.contramodules[name].check(),
        "pair" => check_pair(catalog, name),
        "construction" => check_construction(catalog, name, cap),
        "cochain" => check_cochain(catalog, name),
        other => unreachable!("unknown kind {other}"),
    };
    r.subject = format!("{kind} {name}");
    r
}

fn check_pair(catalog: &Catalog, name: &str) -> Report {
    let pair = &catalog.pairs[name];
    let mut r = pair.check();
    r.summarize("module passes its checks", pair.module.check());
    r.summarize("contramodule passes its checks", pair.contramodule.check());
    match Contratensor::new(&pair.module, &pair.contramodule) {
        Ok(l) => {
            r.summarize("L(N, M) is the contratensor product", l.check(&pair.module, &pair.contramodule));
            let e = collapse_map(pair, &l);
            let note = e.as_ref().err().map(ToString::to_string);
            r.condition("the pairing factors through L(N, M)", e.is_ok(), note);
        }
        Err(e) => {
            r.condition("L(N, M) is the contratensor product", false, Some(e.to_string()));
        }
    }
    r
}

fn check_construction(catalog: &Catalog, name: &str, cap: usize) -> Report {
    let mut r = Report::new(name);
    let x = match catalog.build(name, cap) {
        Ok(x) => x,
        Err(e) => {
            r.condition("builds", false, Some(e.to_string()));
            return r;
        }
    };
    r.condition("builds", true, None);
    r.merge("", verify_cocyclic(&x));
    r.merge("", verify_lambda_compatibility(&x));
    r.merge("", MixedComplex::of_cocyclic(&x).check());
    match MixedComplex::normalized(&x) {
        Ok((mc, _)) => r.merge("normalized: ", mc.check()),
        Err(e) => {
            r.condition("normalized: restricts", false, Some(e.to_string()));
        }
    }
    r
}

fn check_cochain(catalog: &Catalog, name: &str) -> Report {
    let c = &catalog.cochains[name];
    let mut r = Report::new(name);
    let what = match c.kind {
        ClassKind::CyclicCocycle => "is a cyclic cocycle",
        ClassKind::HochschildCocycle => "is a Hochschild cocycle",
    };
    let verdict = catalog
        .build(&c.construction, c.degree + 1)
        .and_then(|x| CochainClass::new(&x, c.degree, c.values.clone(), c.kind).map_err(CliError::from));
    let note = verdict.as_ref().err().map(ToString::to_string);
    r.condition(what, verdict.is_ok(), note);
    r
}

fn columns(m: &Matrix) -> Vec<Vec<String>> {
    let mut cols = vec![vec![rat(0); m.nrows()]; m.ncols()];
    for (r, c, v) in m.entries() {
        cols[c][r] = v.clone();
    }
    cols.iter().map(|c| c.iter().map(format_rational).collect()).collect()
}

fn group(h: &Cohomology) -> DegreeGroup {
    DegreeGroup {
        dim: h.dim,
        representatives: columns(&h.representatives),
    }
}

/// Hochschild and cyclic cohomology in degrees `0..=max_degree`.
pub fn cohomology(catalog: &Catalog, construction: &str, max_degree: usize, cap: usize) -> Result<Output, CliError> {
    if max_degree > cap {
        return Err(CliError::Input(format!("degree {max_degree} is beyond the cap {cap}")));
    }
    let x = catalog.build(construction, max_degree + 1)?;
    let mut checks = Report::new(format!("cohomology of {construction}"));
    let (mc, _) = MixedComplex::normalized(&x)?;
    let mut degrees = Vec::new();
    for n in 0..=max_degree {
        let hh = hochschild_cohomology(&x, n)?;
        let hc = cyclic_cohomology(&x, n)?;
        let bb = mc.cyclic_bb(n)?;
        checks.condition(
            format!("degree {n}: lambda-complex and (b, B) dimensions agree"),
            bb.dim == hc.dim,
            (bb.dim != hc.dim).then(|| format!("lambda {} vs (b, B) {}", hc.dim, bb.dim)),
        );
        degrees.push(CohomologyRow {
            degree: n,
            cochains: x.dim(n),
            hochschild: group(&hh),
            cyclic: group(&hc),
        });
    }
    let mut out = Output::new("cohomology", cap, vec![checks]);
    out.cohomology = Some(CohomologyTable {
        construction: construction.to_string(),
        max_degree,
        degrees,
    });
    Ok(out)
}

fn class<'a>(
    catalog: &'a Catalog,
    name: &str,
    degree: usize,
    side: &str,
) -> Result<(CochainClass, &'a Construction), CliError> {
    let c = catalog
        .cochains
        .get(name)
        .ok_or_else(|| CliError::Input(format!("{side}: unresolved name: cochain {name:?}")))?;
    if c.degree != degree {
        return Err(CliError::Input(format!(
            "{side}: cochain {name:?} has degree {}, not {degree}",
            c.degree
        )));
    }
    let k = &catalog.constructions[&c.construction];
    let class = CochainClass {
        degree,
        representative: c.values.clone(),
        kind: c.kind,
    };
    Ok((class, k))
}

/// Picks `explicit` or the unique entry of `parts` equal to `want`.
fn pick(
    parts: &std::collections::BTreeMap<String, (String, String)>,
    explicit: Option<&String>,
    want: (&str, &str),
    what: &str,
) -> Result<Option<String>, CliError> {
    if let Some(name) = explicit {
        let found = parts
            .get(name)
            .ok_or_else(|| CliError::Input(format!("unresolved name: {what} {name:?}")))?;
        if (found.0.as_str(), found.1.as_str()) != want {
            return Err(CliError::Input(format!(
                "{what} {name:?} joins {:?} and {:?}, not {:?} and {:?}",
                found.0, found.1, want.0, want.1
            )));
        }
        return Ok(Some(name.clone()));
    }
    let hits: Vec<&String> = parts
        .iter()
        .filter(|(_, v)| (v.0.as_str(), v.1.as_str()) == want)
        .map(|(k, _)| k)
        .collect();
    match hits.as_slice() {
        [] => Ok(None),
        [one] => Ok(Some((*one).clone())),
        _ => Err(CliError::Input(format!(
            "several {what}s join {:?} and {:?}; choose one explicitly",
            want.0, want.1
        ))),
    }
}

struct Coefficients<'a> {
    module: (&'a str, &'a SaydModule),
    contramodule: (&'a str, &'a SaydContramodule),
}

/// The cup product of two stored cochains.
pub fn cup(catalog: &Catalog, req: &CupRequest, cap: usize) -> Result<Output, CliError> {
    let degree = req.p + req.q;
    if degree > cap {
        return Err(CliError::Input(format!("degree {degree} is beyond the cap {cap}")));
    }
    let mut sections = Vec::new();
    let (product, coeffs, pair_name) = match req.variant {
        Variant::Ac | Variant::AcGeneral => {
            let (phi, kl) = class(catalog, &req.left, req.p, "left")?;
            let (omega, kr) = class(catalog, &req.right, req.q, "right")?;
            let (Construction::AlgebraContra { algebra, contramodule }, Construction::Coalgebra { coalgebra, module }) =
                (kl, kr)
            else {
                return Err(CliError::Input(
                    "the ac cup takes an algebra-contra cochain on the left and a coalgebra cochain on the right".into(),
                ));
            };
            let action_name = pick(&catalog.action_parts, req.action.as_ref(), (coalgebra, algebra), "coalgebra action")?
                .ok_or_else(|| CliError::Input(format!("no coalgebra action of {coalgebra:?} on {algebra:?}")))?;
            let action = &catalog.actions[&action_name];
            let coeffs = Coefficients {
                module: (module, &catalog.modules[module]),
                contramodule: (contramodule, &catalog.contramodules[contramodule]),
            };
            let pair_name = pick(&catalog.pair_parts, req.pair.as_ref(), (module, contramodule), "pair")?;
            let product = if req.variant.general() {
                cup_ac_general(action, coeffs.module.1, coeffs.contramodule.1, &phi, &omega)?
            } else {
                let name = pair_name
                    .as_ref()
                    .ok_or_else(|| CliError::Input(format!("no pair joins {module:?} and {contramodule:?}")))?;
                cup_ac(action, &catalog.pairs[name], &phi, &omega)?
            };
            (product, coeffs, pair_name)
        }
        Variant::Aa | Variant::AaGeneral => {
            let (psi, kl) = class(catalog, &req.left, req.q, "left")?;
            let (phi, kr) = class(catalog, &req.right, req.p, "right")?;
            let (
                Construction::ComoduleAlgebra { comodule_algebra, module },
                Construction::AlgebraContra { algebra, contramodule },
            ) = (kl, kr)
            else {
                return Err(CliError::Input(
                    "the aa cup takes a comodule-algebra cochain on the left and an algebra-contra cochain on the right"
                        .into(),
                ));
            };
            let a = &catalog.module_algebras[algebra];
            let b = &catalog.comodule_algebras[comodule_algebra];
            let coeffs = Coefficients {
                module: (module, &catalog.modules[module]),
                contramodule: (contramodule, &catalog.contramodules[contramodule]),
            };
            let pair_name = pick(&catalog.pair_parts, req.pair.as_ref(), (module, contramodule), "pair")?;
            let product = if req.variant.general() {
                cup_aa_general(a, b, coeffs.module.1, coeffs.contramodule.1, &psi, &phi)?
            } else {
                let name = pair_name
                    .as_ref()
                    .ok_or_else(|| CliError::Input(format!("no pair joins {module:?} and {contramodule:?}")))?;
                cup_aa(a, b, &catalog.pairs[name], &psi, &phi)?
            };
            (product, coeffs, pair_name)
        }
    };
    sections.push(product.checks.clone());

    let values = if req.variant.general() {
        Contratensor::new(coeffs.module.1, coeffs.contramodule.1)?.space.labels().to_vec()
    } else {
        vec!["1".to_string()]
    };
    if req.variant.general() {
        if let Some(name) = &pair_name {
            sections.push(collapse_against_pair(catalog, req, name, &product, &coeffs, cap)?);
        }
    }

    let summary = CupSummary {
        variant: req.variant.name().to_string(),
        left: req.left.clone(),
        right: req.right.clone(),
        p: req.p,
        q: req.q,
        degree,
        values,
        top_values: top_values(&product),
        cocycle: product.cocycle,
        completion: product.completion,
    };
    let mut out = Output::new("cup", cap, sections);
    out.cup = Some(summary);
    Ok(out)
}

/// For a compatible pair, `E` applied to the general product gives the scalar one.
fn collapse_against_pair(
    catalog: &Catalog,
    req: &CupRequest,
    name: &str,
    general: &CupProduct,
    coeffs: &Coefficients,
    cap: usize,
) -> Result<Report, CliError> {
    let mut r = Report::new(format!(
        "collapse along pair {name} of {} and {}",
        coeffs.module.0, coeffs.contramodule.0
    ));
    let pair = &catalog.pairs[name];
    if !pair.check().all_passed() {
        r.condition("pair is compatible", false, Some("the collapse comparison needs a compatible pair".into()));
        return Ok(r);
    }
    let l = Contratensor::new(coeffs.module.1, coeffs.contramodule.1)?;
    let e = collapse_map(pair, &l)?;
    let scalar = cup(
        catalog,
        &CupRequest {
            variant: if req.variant == Variant::AcGeneral { Variant::Ac } else { Variant::Aa },
            pair: Some(name.to_string()),
            ..req.clone()
        },
        cap,
    )?;
    let plain = &scalar.cup.as_ref().expect("cup summary").cocycle;
    let collapsed = collapse_cocycle(&general.cocycle, &e);
    r.condition(
        "E applied to the general product equals the scalar product",
        &collapsed == plain,
        None,
    );
    Ok(r)
}

fn top_values(product: &CupProduct) -> Vec<TensorValue> {
    let target: &CocyclicModule = &product.target;
    let space = &target.spaces[product.cocycle.degree];
    product
        .cocycle
        .top()
        .iter()
        .enumerate()
        .filter(|(_, v)| **v != rat(0))
        .map(|(i, v)| TensorValue {
            tensor: space.label(i).to_string(),
            value: format_rational(v),
        })
        .collect()
}
