//! Scenario files: a line-oriented, sectioned `key = value` format.
//!
//! ```text
//! # comments run to the end of the line
//! name = S2
//! field = Q                      # or `Fp 2`
//!
//! [hopf]
//! kind = group, group = C2xC2    # group | dual_group | trivial | sweedler
//!
//! [cocycle]
//! kind = group_table             # trivial | group_table | table
//! values = 1 1 1 1 ; 1 1 -1 -1 ; 1 1 1 1 ; 1 1 -1 -1
//!
//! [algebra]
//! kind = ground                  # ground | group | functions | dual_numbers | matrix 2 | table
//!
//! [action]
//! kind = trivial                 # trivial | permutation | translation | table
//!
//! [compute]
//! max_degree = 2, max_p = 2, max_q = 2, cap = 200000
//! ```
//!
//! Several pairs may share a line, separated by commas. A line holding no `=`
//! continues the value of the previous key. Groups are given either by name
//! (`group = C3`, `group = C2xC2`, `group = S3`) or by a multiplication table
//! of element indices (`group_table = 0 1 ; 1 0`).
//!
//! Tables are row-major and `;` is only a visual separator:
//! - `[cocycle] table`: `σ(h_i, h_j)` at position `i·dim H + j`.
//! - `[algebra] table`: `dim = n`, `unit = n scalars`, `values = n³ scalars`
//!   with the coordinates of `e_i e_j` at positions `(i·n + j)·n ..`.
//! - `[action] permutation`: `perm = ` one row of `dim A` indices per group element.
//! - `[action] table`: `values = ` the coordinates of `h_i(a_j)` at `(i·dim A + j)·dim A ..`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::algebra::{
    dual_numbers, function_algebra, ground_algebra, group_algebra, matrix_algebra, FinDimAlgebra, FiniteGroup,
};
use crate::crossed::{ActionMap, Cocycle};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{dual_group_hopf, group_hopf, sweedler_hopf, trivial_hopf, HopfAlgebra};
use crate::linalg::{SparseVec, DEFAULT_DIM_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Named(String),
    Table(Vec<usize>),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Named(name) => FiniteGroup::by_name(name),
            GroupSpec::Table(table) => {
                let order = (table.len() as f64).sqrt().round() as usize;
                let labels = (0..order).map(|i| i.to_string()).collect();
                FiniteGroup::from_table("table", order, table.clone(), labels)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfSpec {
    Group(GroupSpec),
    DualGroup(GroupSpec),
    Trivial,
    Sweedler,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CocycleSpec {
    Trivial,
    GroupTable(Vec<Scalar>),
    Table(Vec<Scalar>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSpec {
    Ground,
    Group(GroupSpec),
    Functions(GroupSpec),
    DualNumbers,
    Matrix(usize),
    Table {
        dim: usize,
        unit: Vec<Scalar>,
        values: Vec<Scalar>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionSpec {
    Trivial,
    Permutation(Vec<Vec<usize>>),
    Translation,
    Table(Vec<Scalar>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComputeOptions {
    pub max_degree: usize,
    pub max_p: usize,
    pub max_q: usize,
    pub cap: usize,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        ComputeOptions {
            max_degree: 2,
            max_p: 2,
            max_q: 2,
            cap: DEFAULT_DIM_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scenario {
    pub name: Option<String>,
    pub field: FieldSpec,
    pub hopf: HopfSpec,
    pub cocycle: CocycleSpec,
    pub algebra: AlgebraSpec,
    pub action: ActionSpec,
    pub compute: ComputeOptions,
}

/// The library objects a scenario describes; axioms are not yet checked.
pub struct Built {
    pub hopf: Arc<HopfAlgebra>,
    pub algebra: Arc<FinDimAlgebra>,
    pub action: ActionMap,
    pub cocycle: Cocycle,
}

struct Entry {
    value: String,
    line: usize,
}

type Sections = BTreeMap<String, BTreeMap<String, Entry>>;

const SECTIONS: [&str; 6] = ["", "hopf", "cocycle", "algebra", "action", "compute"];

fn err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Input(format!("line {line}: {msg}"))
}

fn split_sections(text: &str) -> Result<Sections> {
    let mut sections: Sections = BTreeMap::new();
    sections.insert(String::new(), BTreeMap::new());
    let mut current = String::new();
    let mut last_key: Option<String> = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(rest) = body.strip_prefix('[') {
            let name = rest
                .strip_suffix(']')
                .ok_or_else(|| err(line, "unterminated section header"))?
                .trim()
                .to_string();
            if !SECTIONS.contains(&name.as_str()) || name.is_empty() {
                return Err(err(line, format!("unknown section [{name}]")));
            }
            if sections.contains_key(&name) {
                return Err(err(line, format!("duplicate section [{name}]")));
            }
            sections.insert(name.clone(), BTreeMap::new());
            current = name;
            last_key = None;
            continue;
        }
        let section = sections.get_mut(&current).expect("current section exists");
        if !body.contains('=') {
            let key = last_key
                .as_ref()
                .ok_or_else(|| err(line, format!("expected `key = value`, found `{body}`")))?;
            let entry = section.get_mut(key).expect("continued key exists");
            entry.value.push(' ');
            entry.value.push_str(body);
            continue;
        }
        for pair in body.split(',') {
            let (key, value) = pair
                .split_once('=')
                .ok_or_else(|| err(line, format!("expected `key = value`, found `{}`", pair.trim())))?;
            let key = key.trim().to_string();
            if key.is_empty() {
                return Err(err(line, "empty key"));
            }
            if section.contains_key(&key) {
                return Err(err(line, format!("duplicate key `{key}`")));
            }
            section.insert(
                key.clone(),
                Entry {
                    value: value.trim().to_string(),
                    line,
                },
            );
            last_key = Some(key);
        }
    }
    Ok(sections)
}

struct Section<'a> {
    name: &'a str,
    entries: BTreeMap<String, Entry>,
    header_line: usize,
}

impl Section<'_> {
    fn take(&mut self, key: &str) -> Option<Entry> {
        self.entries.remove(key)
    }

    fn require(&mut self, key: &str) -> Result<Entry> {
        self.take(key).ok_or_else(|| {
            err(
                self.header_line,
                format!("[{}] is missing `{key}`", if self.name.is_empty() { "top level" } else { self.name }),
            )
        })
    }

    fn finish(self) -> Result<()> {
        match self.entries.into_iter().next() {
            Some((key, e)) => Err(err(e.line, format!("unexpected key `{key}`"))),
            None => Ok(()),
        }
    }
}

fn tokens(value: &str) -> impl Iterator<Item = &str> {
    value.split(|c: char| c.is_whitespace() || c == ';').filter(|t| !t.is_empty())
}

fn parse_usize(e: &Entry, token: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| err(e.line, format!("expected a nonnegative integer, found `{token}`")))
}

fn parse_scalars(e: &Entry, field: FieldSpec) -> Result<Vec<Scalar>> {
    tokens(&e.value)
        .map(|t| field.parse_scalar(t).map_err(|x| err(e.line, x.to_string().trim_start_matches("invalid input: "))))
        .collect()
}

fn parse_indices(e: &Entry) -> Result<Vec<usize>> {
    tokens(&e.value).map(|t| parse_usize(e, t)).collect()
}

fn parse_field(e: &Entry) -> Result<FieldSpec> {
    let mut parts = e.value.split_whitespace();
    let field = match (parts.next(), parts.next(), parts.next()) {
        (Some("Q"), None, None) => Ok(FieldSpec::Rationals),
        (Some("Fp"), Some(p), None) => {
            let p: u64 = p.parse().map_err(|_| err(e.line, format!("malformed characteristic `{p}`")))?;
            FieldSpec::prime_field(p)
        }
        _ => return Err(err(e.line, format!("expected `Q` or `Fp <p>`, found `{}`", e.value))),
    };
    field.map_err(|x| err(e.line, x.to_string().trim_start_matches("invalid input: ")))
}

fn parse_group(sec: &mut Section<'_>) -> Result<GroupSpec> {
    match (sec.take("group"), sec.take("group_table")) {
        (Some(g), None) => {
            FiniteGroup::by_name(&g.value).map_err(|_| err(g.line, format!("unknown group `{}`", g.value)))?;
            Ok(GroupSpec::Named(g.value))
        }
        (None, Some(t)) => {
            let spec = GroupSpec::Table(parse_indices(&t)?);
            spec.build().map_err(|x| err(t.line, x.to_string().trim_start_matches("invalid input: ")))?;
            Ok(spec)
        }
        (Some(g), Some(_)) => Err(err(g.line, "give either `group` or `group_table`, not both")),
        (None, None) => Err(err(sec.header_line, format!("[{}] needs `group` or `group_table`", sec.name))),
    }
}

fn kind_of(sec: &mut Section<'_>) -> Result<(String, Option<String>, usize)> {
    let e = sec.require("kind")?;
    let mut parts = e.value.split_whitespace();
    let kind = parts.next().unwrap_or("").to_string();
    let arg = parts.next().map(str::to_string);
    if parts.next().is_some() {
        return Err(err(e.line, format!("malformed kind `{}`", e.value)));
    }
    Ok((kind, arg, e.line))
}

fn no_arg(arg: &Option<String>, line: usize, kind: &str) -> Result<()> {
    match arg {
        Some(a) => Err(err(line, format!("kind `{kind}` takes no argument, found `{a}`"))),
        None => Ok(()),
    }
}

fn header_lines(text: &str) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    for (k, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("").trim();
        if let Some(name) = body.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            out.entry(name.trim().to_string()).or_insert(k + 1);
        }
    }
    out
}

/// Parses and structurally validates a scenario. Axioms are checked later, by
/// the commands that use them, so that a broken identity is reported as a
/// failed check rather than as bad input. Group cocycles must be normalized.
pub fn parse_scenario(text: &str) -> Result<Scenario> {
    let mut raw = split_sections(text)?;
    let lines = header_lines(text);
    let last_line = text.lines().count().max(1);
    let mut section = |name: &'static str| -> Result<Section<'static>> {
        let header_line = lines.get(name).copied().unwrap_or(last_line);
        match raw.remove(name) {
            Some(entries) => Ok(Section {
                name,
                entries,
                header_line,
            }),
            None if name == "compute" => Ok(Section {
                name,
                entries: BTreeMap::new(),
                header_line,
            }),
            None => Err(err(last_line, format!("missing section [{name}]"))),
        }
    };

    let mut top = section("")?;
    let field = parse_field(&top.require("field")?)?;
    let name = top.take("name").map(|e| e.value);
    top.finish()?;

    let mut sec = section("hopf")?;
    let (kind, arg, line) = kind_of(&mut sec)?;
    no_arg(&arg, line, &kind)?;
    let hopf = match kind.as_str() {
        "group" => HopfSpec::Group(parse_group(&mut sec)?),
        "dual_group" => HopfSpec::DualGroup(parse_group(&mut sec)?),
        "trivial" => HopfSpec::Trivial,
        "sweedler" => HopfSpec::Sweedler,
        other => return Err(err(line, format!("unknown Hopf algebra kind `{other}`"))),
    };
    sec.finish()?;

    let mut sec = section("cocycle")?;
    let (kind, arg, line) = kind_of(&mut sec)?;
    no_arg(&arg, line, &kind)?;
    let cocycle = match kind.as_str() {
        "trivial" => CocycleSpec::Trivial,
        "group_table" => CocycleSpec::GroupTable(parse_scalars(&sec.require("values")?, field)?),
        "table" => CocycleSpec::Table(parse_scalars(&sec.require("values")?, field)?),
        "central" => {
            return Err(err(line, "central-valued cocycles are not supported; σ must be scalar valued"))
        }
        other => return Err(err(line, format!("unknown cocycle kind `{other}`"))),
    };
    sec.finish()?;

    let mut sec = section("algebra")?;
    let (kind, arg, line) = kind_of(&mut sec)?;
    let algebra = match kind.as_str() {
        "matrix" => {
            let n = arg.ok_or_else(|| err(line, "`matrix` needs a size, e.g. `matrix 2`"))?;
            let n: usize = n
                .parse()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| err(line, format!("malformed matrix size `{n}`")))?;
            AlgebraSpec::Matrix(n)
        }
        k => {
            no_arg(&arg, line, k)?;
            match k {
                "ground" => AlgebraSpec::Ground,
                "group" => AlgebraSpec::Group(parse_group(&mut sec)?),
                "functions" => AlgebraSpec::Functions(parse_group(&mut sec)?),
                "dual_numbers" => AlgebraSpec::DualNumbers,
                "table" => {
                    let d = sec.require("dim")?;
                    let dim = parse_usize(&d, &d.value)?;
                    let u = sec.require("unit")?;
                    let unit = parse_scalars(&u, field)?;
                    if unit.len() != dim {
                        return Err(err(u.line, format!("unit needs {dim} coordinates, got {}", unit.len())));
                    }
                    let v = sec.require("values")?;
                    let values = parse_scalars(&v, field)?;
                    if values.len() != dim * dim * dim {
                        return Err(err(v.line, format!("structure constants need {} scalars, got {}", dim * dim * dim, values.len())));
                    }
                    AlgebraSpec::Table { dim, unit, values }
                }
                other => return Err(err(line, format!("unknown algebra kind `{other}`"))),
            }
        }
    };
    sec.finish()?;

    let mut sec = section("action")?;
    let (kind, arg, line) = kind_of(&mut sec)?;
    no_arg(&arg, line, &kind)?;
    let action = match kind.as_str() {
        "trivial" => ActionSpec::Trivial,
        "translation" => ActionSpec::Translation,
        "permutation" => {
            let e = sec.require("perm")?;
            let rows = e
                .value
                .split(';')
                .map(|r| tokens(r).map(|t| parse_usize(&e, t)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            ActionSpec::Permutation(rows)
        }
        "table" => ActionSpec::Table(parse_scalars(&sec.require("values")?, field)?),
        other => return Err(err(line, format!("unknown action kind `{other}`"))),
    };
    sec.finish()?;

    let mut sec = section("compute")?;
    let mut compute = ComputeOptions::default();
    for (key, slot) in [
        ("max_degree", &mut compute.max_degree),
        ("max_p", &mut compute.max_p),
        ("max_q", &mut compute.max_q),
        ("cap", &mut compute.cap),
    ] {
        if let Some(e) = sec.take(key) {
            *slot = parse_usize(&e, &e.value)?;
        }
    }
    sec.finish()?;

    let scenario = Scenario {
        name,
        field,
        hopf,
        cocycle,
        algebra,
        action,
        compute,
    };
    let located = |section: &str, e: Error| match e {
        Error::Input(m) | Error::DimensionMismatch(m) | Error::Unsupported(m) => {
            err(lines.get(section).copied().unwrap_or(1), format!("[{section}] {m}"))
        }
        other => other,
    };
    let hopf = scenario.build_hopf().map_err(|e| located("hopf", e))?;
    scenario.build_cocycle(&hopf).map_err(|e| located("cocycle", e))?;
    let algebra = scenario.build_algebra().map_err(|e| located("algebra", e))?;
    scenario.build_action(&hopf, &algebra).map_err(|e| located("action", e))?;
    Ok(scenario)
}

fn emit_scalars(out: &mut String, values: &[Scalar], row: usize) {
    let rows: Vec<String> = values
        .chunks(row.max(1))
        .map(|c| c.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    out.push_str(&rows.join(" ; "));
}

fn emit_group(out: &mut String, g: &GroupSpec) {
    match g {
        GroupSpec::Named(n) => {
            let _ = write!(out, ", group = {n}");
        }
        GroupSpec::Table(t) => {
            let order = (t.len() as f64).sqrt().round() as usize;
            let rows: Vec<String> = t
                .chunks(order.max(1))
                .map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
                .collect();
            let _ = write!(out, ", group_table = {}", rows.join(" ; "));
        }
    }
}

impl Scenario {
    /// Canonical text; parsing it gives back an equal scenario.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        if let Some(n) = &self.name {
            let _ = writeln!(out, "name = {n}");
        }
        let _ = writeln!(out, "field = {}", self.field);
        out.push_str("\n[hopf]\nkind = ");
        match &self.hopf {
            HopfSpec::Group(g) => {
                out.push_str("group");
                emit_group(&mut out, g);
            }
            HopfSpec::DualGroup(g) => {
                out.push_str("dual_group");
                emit_group(&mut out, g);
            }
            HopfSpec::Trivial => out.push_str("trivial"),
            HopfSpec::Sweedler => out.push_str("sweedler"),
        }
        let dim_h = self.build_hopf().map(|h| h.dim()).unwrap_or(1);
        out.push_str("\n\n[cocycle]\nkind = ");
        match &self.cocycle {
            CocycleSpec::Trivial => out.push_str("trivial"),
            CocycleSpec::GroupTable(v) | CocycleSpec::Table(v) => {
                out.push_str(if matches!(self.cocycle, CocycleSpec::GroupTable(_)) { "group_table" } else { "table" });
                out.push_str("\nvalues = ");
                emit_scalars(&mut out, v, dim_h);
            }
        }
        out.push_str("\n\n[algebra]\nkind = ");
        match &self.algebra {
            AlgebraSpec::Ground => out.push_str("ground"),
            AlgebraSpec::Group(g) => {
                out.push_str("group");
                emit_group(&mut out, g);
            }
            AlgebraSpec::Functions(g) => {
                out.push_str("functions");
                emit_group(&mut out, g);
            }
            AlgebraSpec::DualNumbers => out.push_str("dual_numbers"),
            AlgebraSpec::Matrix(n) => {
                let _ = write!(out, "matrix {n}");
            }
            AlgebraSpec::Table { dim, unit, values } => {
                let _ = write!(out, "table\ndim = {dim}\nunit = ");
                emit_scalars(&mut out, unit, *dim);
                out.push_str("\nvalues = ");
                emit_scalars(&mut out, values, *dim);
            }
        }
        let dim_a = self.build_algebra().map(|a| a.dim()).unwrap_or(1);
        out.push_str("\n\n[action]\nkind = ");
        match &self.action {
            ActionSpec::Trivial => out.push_str("trivial"),
            ActionSpec::Translation => out.push_str("translation"),
            ActionSpec::Permutation(rows) => {
                let rows: Vec<String> = rows
                    .iter()
                    .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
                    .collect();
                let _ = write!(out, "permutation\nperm = {}", rows.join(" ; "));
            }
            ActionSpec::Table(v) => {
                out.push_str("table\nvalues = ");
                emit_scalars(&mut out, v, dim_a);
            }
        }
        let c = &self.compute;
        let _ = writeln!(
            out,
            "\n\n[compute]\nmax_degree = {}, max_p = {}, max_q = {}, cap = {}",
            c.max_degree, c.max_p, c.max_q, c.cap
        );
        out
    }

    fn hopf_group(&self) -> Option<&GroupSpec> {
        match &self.hopf {
            HopfSpec::Group(g) => Some(g),
            _ => None,
        }
    }

    fn build_hopf(&self) -> Result<Arc<HopfAlgebra>> {
        let f = self.field;
        Ok(Arc::new(match &self.hopf {
            HopfSpec::Group(g) => group_hopf(f, &g.build()?),
            HopfSpec::DualGroup(g) => dual_group_hopf(f, &g.build()?),
            HopfSpec::Trivial => trivial_hopf(f),
            HopfSpec::Sweedler => sweedler_hopf(f)?,
        }))
    }

    fn build_cocycle(&self, hopf: &Arc<HopfAlgebra>) -> Result<Cocycle> {
        match &self.cocycle {
            CocycleSpec::Trivial => Ok(Cocycle::trivial(Arc::clone(hopf))),
            CocycleSpec::Table(v) => Cocycle::from_table(Arc::clone(hopf), v.clone()),
            CocycleSpec::GroupTable(v) => {
                let group = self
                    .hopf_group()
                    .ok_or_else(|| Error::Input("group_table cocycles need `[hopf] kind = group`".into()))?
                    .build()?;
                let n = group.order();
                if v.len() != n * n {
                    return Err(Error::Input(format!("group cocycle needs {} values, got {}", n * n, v.len())));
                }
                let e = group.identity();
                let labels = group.labels();
                for x in 0..n {
                    if !v[e * n + x].is_one() {
                        return Err(Error::Input(format!("normality: c(e,{})≠1", labels[x])));
                    }
                    if !v[x * n + e].is_one() {
                        return Err(Error::Input(format!("normality: c({},e)≠1", labels[x])));
                    }
                }
                Cocycle::from_table(Arc::clone(hopf), v.clone())
            }
        }
    }

    fn build_algebra(&self) -> Result<Arc<FinDimAlgebra>> {
        let f = self.field;
        Ok(Arc::new(match &self.algebra {
            AlgebraSpec::Ground => ground_algebra(f),
            AlgebraSpec::Group(g) => group_algebra(f, &g.build()?),
            AlgebraSpec::Functions(g) => function_algebra(f, &g.build()?),
            AlgebraSpec::DualNumbers => dual_numbers(f),
            AlgebraSpec::Matrix(n) => matrix_algebra(f, *n),
            AlgebraSpec::Table { dim, unit, values } => {
                let table = values.chunks(*dim).map(SparseVec::from_dense).collect();
                let labels = (0..*dim).map(|i| format!("e{i}")).collect();
                FinDimAlgebra::new(f, labels, table, SparseVec::from_dense(unit))?
            }
        }))
    }

    fn build_action(&self, hopf: &Arc<HopfAlgebra>, algebra: &Arc<FinDimAlgebra>) -> Result<ActionMap> {
        let (h, a) = (Arc::clone(hopf), Arc::clone(algebra));
        match &self.action {
            ActionSpec::Trivial => Ok(ActionMap::trivial(h, a)),
            ActionSpec::Permutation(rows) => ActionMap::permutation(h, a, rows),
            ActionSpec::Translation => {
                let group = self
                    .hopf_group()
                    .ok_or_else(|| Error::Input("translation needs `[hopf] kind = group`".into()))?
                    .build()?;
                match &self.algebra {
                    AlgebraSpec::Functions(g) if g.build()?.table() == group.table() => {}
                    _ => {
                        return Err(Error::Input(
                            "translation needs `[algebra] kind = functions` on the Hopf algebra's group".into(),
                        ))
                    }
                }
                ActionMap::translation(h, a, &group)
            }
            ActionSpec::Table(v) => {
                let da = algebra.dim();
                if v.len() != hopf.dim() * da * da {
                    return Err(Error::Input(format!(
                        "action table needs {} scalars, got {}",
                        hopf.dim() * da * da,
                        v.len()
                    )));
                }
                let table = v.chunks(da).map(SparseVec::from_dense).collect();
                ActionMap::from_table(h, a, table)
            }
        }
    }

    /// Builds the Hopf algebra, algebra, action and cocycle.
    pub fn build(&self) -> Result<Built> {
        let hopf = self.build_hopf()?;
        let algebra = self.build_algebra()?;
        let cocycle = self.build_cocycle(&hopf)?;
        let action = self.build_action(&hopf, &algebra)?;
        Ok(Built {
            hopf,
            algebra,
            action,
            cocycle,
        })
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| "scenario".into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const S2: &str = "\
name = S2
field = Q

[hopf]
kind = group, group = C2xC2

[cocycle]
kind = group_table
values = 1 1 1 1 ; 1 1 -1 -1
         1 1 1 1 ; 1 1 -1 -1

[algebra]
kind = ground

[action]
kind = trivial
";

    fn input_message(r: Result<Scenario>) -> String {
        match r {
            Err(Error::Input(m)) => m,
            other => panic!("expected an input error, got {other:?}"),
        }
    }

    #[test]
    fn parses_s2() {
        let s = parse_scenario(S2).unwrap();
        assert_eq!(s.field, FieldSpec::Rationals);
        assert_eq!(s.hopf, HopfSpec::Group(GroupSpec::Named("C2xC2".into())));
        match &s.cocycle {
            CocycleSpec::GroupTable(v) => {
                assert_eq!(v.len(), 16);
                assert_eq!(v[1 * 4 + 2], -FieldSpec::Rationals.one());
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(s.compute, ComputeOptions::default());
        let b = s.build().unwrap();
        assert_eq!((b.hopf.dim(), b.algebra.dim()), (4, 1));
    }

    #[test]
    fn round_trip() {
        let s = parse_scenario(S2).unwrap();
        assert_eq!(parse_scenario(&s.emit()).unwrap(), s);
        let s3 = "field = Fp 3\n[hopf]\nkind = group, group_table = 0 1 ; 1 0\n[cocycle]\nkind = trivial\n\
                  [algebra]\nkind = table\ndim = 1\nunit = 1\nvalues = 1\n[action]\nkind = table\nvalues = 1 1\n\
                  [compute]\nmax_degree = 1, cap = 99\n";
        let s = parse_scenario(s3).unwrap();
        assert_eq!(s.compute.cap, 99);
        assert_eq!(parse_scenario(&s.emit()).unwrap(), s);
    }

    #[test]
    fn characteristic_must_be_prime() {
        let text = S2.replace("field = Q", "field = Fp 4");
        let m = input_message(parse_scenario(&text));
        assert!(m.contains("characteristic must be 0 or prime"), "{m}");
        assert!(m.starts_with("line 2:"), "{m}");
    }

    #[test]
    fn non_normalized_group_cocycle() {
        let text = S2.replace("values = 1 1 1 1 ; 1 1 -1 -1\n", "values = 1 -1 1 1 ; 1 1 -1 -1\n");
        let m = input_message(parse_scenario(&text));
        assert!(m.contains("c(e,"), "{m}");
        assert!(m.contains("≠1"), "{m}");
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let m = input_message(parse_scenario(&S2.replace("[algebra]", "[algebra")));
        assert!(m.starts_with("line 12:"), "{m}");
        let m = input_message(parse_scenario(&S2.replace("kind = ground", "kind = ground\nbogus = 1")));
        assert!(m.starts_with("line 14:") && m.contains("bogus"), "{m}");
        let m = input_message(parse_scenario(&S2.replace("kind = trivial\n", "kind = rotation\n")));
        assert!(m.contains("unknown action kind"), "{m}");
        let m = input_message(parse_scenario(&S2.replace("field = Q\n", "")));
        assert!(m.contains("field"), "{m}");
    }

    #[test]
    fn central_cocycles_are_rejected() {
        let text = S2.replace("kind = group_table\nvalues = 1 1 1 1 ; 1 1 -1 -1\n         1 1 1 1 ; 1 1 -1 -1\n", "kind = central\n");
        let m = input_message(parse_scenario(&text));
        assert!(m.contains("central"), "{m}");
    }

    #[test]
    fn wrong_sizes_are_input_errors() {
        let text = S2.replace("1 1 1 1 ; 1 1 -1 -1\n         1 1 1 1 ; 1 1 -1 -1", "1 1 1 1");
        assert!(input_message(parse_scenario(&text)).contains("[cocycle]"));
        let text = S2.replace("kind = trivial\n", "kind = translation\n");
        assert!(input_message(parse_scenario(&text)).contains("translation"));
    }
}
