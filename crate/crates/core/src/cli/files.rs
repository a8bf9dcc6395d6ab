//! JSON schemas for algebras, maps, cochains, modules, data and extensions.
//!
//! Loading validates every invariant; serialization is canonical, so
//! `serialize(parse(f))` is stable after one round.

use serde::{Deserialize, Serialize};

use crate::cochains::{is_canonical, Cochain, Connection};
use crate::cohomology::GModule;
use crate::extensions::{ExtensionDatum, ExtensionTriple};
use crate::gvs::{format_scalar, parse_scalar, GradedLinearMap, Matrix, Parity, Scalar, SuperVectorSpace};
use crate::superlie::SuperLieAlgebra;

use super::CliError;

pub const MAP_CONVENTION: &str = "entry (i,j) = coefficient of codomain i in image of domain j";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisEntry {
    pub name: String,
    pub parity: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub basis: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub value: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub basis: Vec<BasisEntry>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub domain: String,
    pub codomain: String,
    pub degree: u8,
    pub matrix: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convention: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainEntry {
    pub args: Vec<String>,
    pub value: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainFile {
    pub source: String,
    pub target: String,
    pub arity: usize,
    pub weight: u8,
    #[serde(default)]
    pub entries: Vec<CochainEntry>,
}

/// One operator per named basis element of the acting algebra; omitted
/// generators act by zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionEntry {
    pub generator: String,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub algebra: String,
    pub basis: Vec<BasisEntry>,
    #[serde(default)]
    pub action: Vec<ActionEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumFile {
    pub g: AlgebraFile,
    pub h: AlgebraFile,
    #[serde(default)]
    pub alpha: Vec<ActionEntry>,
    pub rho: CochainFile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionFile {
    pub h: AlgebraFile,
    pub e: AlgebraFile,
    pub g: AlgebraFile,
    pub inclusion: MapFile,
    pub projection: MapFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section: Option<MapFile>,
}

/// Where in which file a problem sits.
#[derive(Clone, Debug)]
pub struct Ctx<'a> {
    pub file: &'a str,
    pub field: String,
}

impl<'a> Ctx<'a> {
    pub fn new(file: &'a str) -> Self {
        Ctx { file, field: String::new() }
    }

    pub fn at(&self, field: impl std::fmt::Display) -> Ctx<'a> {
        let field = field.to_string();
        let field = if self.field.is_empty() || field.starts_with('[') {
            format!("{}{field}", self.field)
        } else {
            format!("{}.{field}", self.field)
        };
        Ctx { file: self.file, field }
    }

    pub fn parse(&self, msg: impl Into<String>) -> CliError {
        CliError::Parse {
            file: self.file.to_string(),
            field: self.field.clone(),
            msg: msg.into(),
        }
    }

    pub fn invariant(&self, msg: impl Into<String>) -> CliError {
        CliError::Invariant {
            file: self.file.to_string(),
            field: self.field.clone(),
            msg: msg.into(),
        }
    }
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &str) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_string(),
        msg: e.to_string(),
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse {
        file: path.to_string(),
        field: format!("line {}, column {}", e.line(), e.column()),
        msg: e.to_string(),
    })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn scalar(ctx: &Ctx, text: &str) -> Result<Scalar, CliError> {
    parse_scalar(text).map_err(|_| ctx.parse(format!("`{text}` is not an exact rational")))
}

fn parity(ctx: &Ctx, bit: u8) -> Result<Parity, CliError> {
    Parity::from_bit(bit).ok_or_else(|| ctx.parse(format!("parity must be 0 or 1, found {bit}")))
}

fn space(ctx: &Ctx, basis: &[BasisEntry]) -> Result<SuperVectorSpace, CliError> {
    let mut names = Vec::with_capacity(basis.len());
    let mut parities = Vec::with_capacity(basis.len());
    for (k, b) in basis.iter().enumerate() {
        names.push(b.name.clone());
        parities.push(parity(&ctx.at(format!("basis[{k}].parity")), b.parity)?);
    }
    SuperVectorSpace::new(names, parities).map_err(|e| ctx.at("basis").invariant(e.to_string()))
}

fn basis_entries(space: &SuperVectorSpace) -> Vec<BasisEntry> {
    (0..space.dim())
        .map(|k| BasisEntry {
            name: space.name(k).to_string(),
            parity: space.parity(k).bit(),
        })
        .collect()
}

fn scalar_rows(ctx: &Ctx, rows: &[Vec<String>], nrows: usize, ncols: usize) -> Result<Matrix, CliError> {
    if rows.len() != nrows {
        return Err(ctx.invariant(format!("expected {nrows} rows, found {}", rows.len())));
    }
    let mut m = Matrix::zeros(nrows, ncols);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != ncols {
            return Err(ctx
                .at(format!("[{i}]"))
                .invariant(format!("expected {ncols} entries, found {}", row.len())));
        }
        for (j, text) in row.iter().enumerate() {
            m.set(i, j, scalar(&ctx.at(format!("[{i}][{j}]")), text)?);
        }
    }
    Ok(m)
}

fn string_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| format_scalar(m.get(i, j))).collect())
        .collect()
}

pub fn load_algebra(ctx: &Ctx, file: &AlgebraFile) -> Result<SuperLieAlgebra, CliError> {
    let space = space(ctx, &file.basis)?;
    let mut builder = SuperLieAlgebra::builder(file.name.clone(), space.clone());
    for (k, b) in file.brackets.iter().enumerate() {
        let here = ctx.at(format!("brackets[{k}]"));
        let mut value = Vec::with_capacity(b.value.len());
        for (t, term) in b.value.iter().enumerate() {
            let c = scalar(&here.at(format!("value[{t}].coeff")), &term.coeff)?;
            if space.index_of(&term.basis).is_none() {
                return Err(here.at(format!("value[{t}].basis")).invariant(format!("unknown basis element `{}`", term.basis)));
            }
            value.push((term.basis.clone(), c));
        }
        for name in [&b.left, &b.right] {
            if space.index_of(name).is_none() {
                return Err(here.invariant(format!("unknown basis element `{name}`")));
            }
        }
        builder
            .set(&b.left, &b.right, value)
            .map_err(|e| here.invariant(e.to_string()))?;
    }
    builder
        .build()
        .map_err(|e| ctx.at("brackets").invariant(e.to_string()))
}

pub fn algebra_file(alg: &SuperLieAlgebra) -> AlgebraFile {
    let space = alg.space();
    let n = alg.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i..n {
            let value: Vec<Term> = alg
                .bracket_basis(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(|(k, c)| Term {
                    basis: space.name(k).to_string(),
                    coeff: format_scalar(c),
                })
                .collect();
            if !value.is_empty() {
                brackets.push(BracketEntry {
                    left: space.name(i).to_string(),
                    right: space.name(j).to_string(),
                    value,
                });
            }
        }
    }
    AlgebraFile {
        name: alg.name().to_string(),
        basis: basis_entries(space),
        brackets,
    }
}

/// Loads a map between the named spaces.
pub fn load_map(
    ctx: &Ctx,
    file: &MapFile,
    domain: (&str, &SuperVectorSpace),
    codomain: (&str, &SuperVectorSpace),
) -> Result<GradedLinearMap, CliError> {
    if file.domain != domain.0 {
        return Err(ctx.at("domain").invariant(format!("expected `{}`, found `{}`", domain.0, file.domain)));
    }
    if file.codomain != codomain.0 {
        return Err(ctx
            .at("codomain")
            .invariant(format!("expected `{}`, found `{}`", codomain.0, file.codomain)));
    }
    let degree = parity(&ctx.at("degree"), file.degree)?;
    let m = scalar_rows(&ctx.at("matrix"), &file.matrix, codomain.1.dim(), domain.1.dim())?;
    GradedLinearMap::new(domain.1.clone(), codomain.1.clone(), degree, m)
        .map_err(|e| ctx.at("matrix").invariant(e.to_string()))
}

pub fn map_file(domain: &str, codomain: &str, map: &GradedLinearMap) -> MapFile {
    MapFile {
        domain: domain.to_string(),
        codomain: codomain.to_string(),
        degree: map.degree().bit(),
        matrix: string_rows(map.matrix()),
        convention: Some(MAP_CONVENTION.to_string()),
    }
}

pub fn load_cochain(
    ctx: &Ctx,
    file: &CochainFile,
    source: (&str, &SuperVectorSpace),
    target: (&str, &SuperVectorSpace),
) -> Result<Cochain, CliError> {
    if file.source != source.0 {
        return Err(ctx.at("source").invariant(format!("expected `{}`, found `{}`", source.0, file.source)));
    }
    if file.target != target.0 {
        return Err(ctx.at("target").invariant(format!("expected `{}`, found `{}`", target.0, file.target)));
    }
    let weight = parity(&ctx.at("weight"), file.weight)?;
    let mut c = Cochain::zero(source.1.clone(), target.1.clone(), file.arity, weight);
    let mut seen = std::collections::BTreeSet::new();
    for (k, entry) in file.entries.iter().enumerate() {
        let here = ctx.at(format!("entries[{k}]"));
        let mut tuple = Vec::with_capacity(entry.args.len());
        for name in &entry.args {
            tuple.push(
                source
                    .1
                    .index_of(name)
                    .ok_or_else(|| here.at("args").invariant(format!("unknown basis element `{name}`")))?,
            );
        }
        if tuple.len() != file.arity {
            return Err(here.at("args").invariant(format!("expected {} arguments", file.arity)));
        }
        if !is_canonical(&tuple, source.1.parities()) {
            return Err(here.at("args").invariant("arguments are not a canonical tuple"));
        }
        if entry.value.len() != target.1.dim() {
            return Err(here.at("value").invariant(format!("expected {} coefficients", target.1.dim())));
        }
        let mut value = Vec::with_capacity(entry.value.len());
        for (t, text) in entry.value.iter().enumerate() {
            value.push(scalar(&here.at(format!("value[{t}]")), text)?);
        }
        if !seen.insert(tuple.clone()) {
            return Err(here.at("args").invariant("tuple listed twice"));
        }
        c.set(&tuple, value).map_err(|e| here.invariant(e.to_string()))?;
    }
    Ok(c)
}

pub fn cochain_file(source: &str, target: &str, c: &Cochain) -> CochainFile {
    let entries = c
        .entries()
        .map(|(t, v)| CochainEntry {
            args: t.iter().map(|&i| c.source().name(i).to_string()).collect(),
            value: v.iter().map(format_scalar).collect(),
        })
        .collect();
    CochainFile {
        source: source.to_string(),
        target: target.to_string(),
        arity: c.arity(),
        weight: c.weight().bit(),
        entries,
    }
}

fn load_action(
    ctx: &Ctx,
    entries: &[ActionEntry],
    g: &SuperLieAlgebra,
    target: &SuperVectorSpace,
) -> Result<Connection, CliError> {
    let m = target.dim();
    let mut ops = vec![None; g.dim()];
    for (k, entry) in entries.iter().enumerate() {
        let here = ctx.at(format!("[{k}]"));
        let i = g
            .space()
            .index_of(&entry.generator)
            .ok_or_else(|| here.at("generator").invariant(format!("unknown basis element `{}`", entry.generator)))?;
        if ops[i].is_some() {
            return Err(here.at("generator").invariant("generator listed twice"));
        }
        let mat = scalar_rows(&here.at("matrix"), &entry.matrix, m, m)?;
        GradedLinearMap::new(target.clone(), target.clone(), g.parity(i), mat.clone())
            .map_err(|e| here.at("matrix").invariant(e.to_string()))?;
        ops[i] = Some(mat);
    }
    let ops = ops.into_iter().map(|o| o.unwrap_or_else(|| Matrix::zeros(m, m))).collect();
    Connection::from_matrices(g.space().clone(), target.clone(), ops).map_err(|e| ctx.invariant(e.to_string()))
}

fn action_entries(g: &SuperLieAlgebra, action: &Connection) -> Vec<ActionEntry> {
    (0..g.dim())
        .filter(|&i| !action.operator(i).is_zero())
        .map(|i| ActionEntry {
            generator: g.space().name(i).to_string(),
            matrix: string_rows(action.operator(i)),
        })
        .collect()
}

pub fn load_module(ctx: &Ctx, file: &ModuleFile, g: &SuperLieAlgebra) -> Result<GModule, CliError> {
    if file.algebra != g.name() {
        return Err(ctx.at("algebra").invariant(format!("expected `{}`, found `{}`", g.name(), file.algebra)));
    }
    let space = space(ctx, &file.basis)?;
    let action = load_action(&ctx.at("action"), &file.action, g, &space)?;
    GModule::new(g.clone(), action).map_err(|e| ctx.at("action").invariant(e.to_string()))
}

pub fn load_datum(ctx: &Ctx, file: &DatumFile) -> Result<ExtensionDatum, CliError> {
    let g = load_algebra(&ctx.at("g"), &file.g)?;
    let h = load_algebra(&ctx.at("h"), &file.h)?;
    let alpha = load_action(&ctx.at("alpha"), &file.alpha, &g, h.space())?;
    let rho = load_cochain(&ctx.at("rho"), &file.rho, (g.name(), g.space()), (h.name(), h.space()))?;
    if file.rho.arity != 2 || file.rho.weight != 0 {
        return Err(ctx.at("rho").invariant("ρ must be a 2-cochain of weight 0"));
    }
    ExtensionDatum::new(g, h, alpha, rho).map_err(|e| ctx.invariant(e.to_string()))
}

pub fn datum_file(d: &ExtensionDatum) -> DatumFile {
    DatumFile {
        g: algebra_file(d.g()),
        h: algebra_file(d.h()),
        alpha: action_entries(d.g(), d.alpha()),
        rho: cochain_file(d.g().name(), d.h().name(), d.rho()),
    }
}

pub fn load_extension(ctx: &Ctx, file: &ExtensionFile) -> Result<ExtensionTriple, CliError> {
    let h = load_algebra(&ctx.at("h"), &file.h)?;
    let e = load_algebra(&ctx.at("e"), &file.e)?;
    let g = load_algebra(&ctx.at("g"), &file.g)?;
    let i = load_map(&ctx.at("inclusion"), &file.inclusion, (h.name(), h.space()), (e.name(), e.space()))?;
    let p = load_map(&ctx.at("projection"), &file.projection, (e.name(), e.space()), (g.name(), g.space()))?;
    let s = match &file.section {
        Some(s) => Some(load_map(&ctx.at("section"), s, (g.name(), g.space()), (e.name(), e.space()))?),
        None => None,
    };
    ExtensionTriple::new(h, e, g, i, p, s).map_err(|e| ctx.invariant(e.to_string()))
}

pub fn extension_file(ext: &ExtensionTriple) -> ExtensionFile {
    let (h, e, g) = (ext.h().name(), ext.e().name(), ext.g().name());
    ExtensionFile {
        h: algebra_file(ext.h()),
        e: algebra_file(ext.e()),
        g: algebra_file(ext.g()),
        inclusion: map_file(h, e, ext.inclusion()),
        projection: map_file(e, g, ext.projection()),
        section: ext.section().map(|s| map_file(g, e, s)),
    }
}
