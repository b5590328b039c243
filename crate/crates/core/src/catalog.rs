//! Bundled tables of expected results and the regression harness that
//! recomputes them.
//!
//! The data lives in `data/catalog.toml`; its header documents the schema.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::classify::{
    canonical_key, enumerate_case1, enumerate_case2, mtc_report, normal_holonomy, CandidateVerdict,
    CanonKey, HolonomyEntry, Levi,
};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::notation::{parse_group, parse_rep, Convention};
use crate::rep_calc::{dim_u64, RepExpr, Summand, TensorFactor};
use crate::root_data::{GroupSpec, Series, SimpleLieType, Weight};

const BUNDLED: &str = include_str!("../data/catalog.toml");

/// Parametrized module families referenced by catalog rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `SU(m)` on `C^m + (C^m)*`.
    SuPair,
    /// `SO(N) x SU(2)` on `R^N (x) C^2`, `N >= 5`.
    SoSu2,
}

/// Where a row's module comes from: fixed texts or a family instance.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Source {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub param: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_min: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WolfRow {
    pub key: String,
    pub wolf_space_name: String,
    pub group_name: String,
    pub rep_name: String,
    #[serde(flatten)]
    pub source: Source,
    pub expected_dim_c_pv: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleRow {
    pub key: String,
    pub group_name: String,
    pub rep_name: String,
    #[serde(flatten)]
    pub source: Source,
    #[serde(default)]
    pub degenerate: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub same_orbit_as: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonsimpleRow {
    pub key: String,
    pub group_name: String,
    pub rep_name: String,
    #[serde(flatten)]
    pub source: Source,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub same_orbit_as: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParallelRow {
    pub key: String,
    pub name: String,
    #[serde(flatten)]
    pub source: Source,
    pub ambient_n: String,
    pub levi_expected: String,
    pub normal_holonomy_dim: String,
    pub kahler_einstein: bool,
    pub reducible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub convention: Convention,
    #[serde(default)]
    pub wolf: Vec<WolfRow>,
    #[serde(default)]
    pub simple: Vec<SimpleRow>,
    #[serde(default)]
    pub nonsimple: Vec<NonsimpleRow>,
    #[serde(default)]
    pub parallel: Vec<ParallelRow>,
}

/// Names of the four tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKey {
    Wolf,
    Simple,
    Nonsimple,
    Parallel,
}

impl TableKey {
    pub const ALL: [TableKey; 4] = [
        TableKey::Wolf,
        TableKey::Simple,
        TableKey::Nonsimple,
        TableKey::Parallel,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TableKey::Wolf => "wolf",
            TableKey::Simple => "simple",
            TableKey::Nonsimple => "nonsimple",
            TableKey::Parallel => "parallel",
        }
    }
}

impl FromStr for TableKey {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TableKey::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::UnknownEntry(s.to_string()))
    }
}

impl fmt::Display for TableKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!(
                "unknown format `{other}` (expected text, json or csv)"
            )),
        }
    }
}

fn row_err(row: &str, message: impl fmt::Display) -> Error {
    Error::CatalogRow {
        row: row.to_string(),
        message: message.to_string(),
    }
}

fn eval(row: &str, src: &str, n: Option<i64>) -> Result<i64> {
    let e = Expr::parse(src).map_err(|e| row_err(row, e))?;
    e.eval(n.unwrap_or(0)).map_err(|e| row_err(row, e))
}

/// `SO(N)` as a simple type with its vector module, for `N >= 5`.
fn so_vector(n: i64) -> Option<(SimpleLieType, Weight)> {
    let mk = |s, r: i64| SimpleLieType::new(s, r as usize).ok();
    match n {
        5 => Some((mk(Series::C, 2)?, Weight(vec![0, 1]))),
        6 => Some((mk(Series::A, 3)?, Weight(vec![0, 1, 0]))),
        n if n >= 7 && n % 2 == 1 => {
            let ty = mk(Series::B, (n - 1) / 2)?;
            Some((ty, Weight::fundamental(ty.rank(), 0)))
        }
        n if n >= 8 => {
            let ty = mk(Series::D, n / 2)?;
            Some((ty, Weight::fundamental(ty.rank(), 0)))
        }
        _ => None,
    }
}

/// Semisimple factors and centre of `SO(N)`.
fn so_levi(n: i64) -> Option<(Vec<SimpleLieType>, usize)> {
    let a1 = SimpleLieType::new(Series::A, 1).ok()?;
    Some(match n {
        0 | 1 => (vec![], 0),
        2 => (vec![], 1),
        3 => (vec![a1], 0),
        4 => (vec![a1, a1], 0),
        n => (vec![so_vector(n)?.0], 0),
    })
}

fn family_instance(family: Family, p: i64) -> Option<(GroupSpec, RepExpr)> {
    match family {
        Family::SuPair => {
            if p < 2 {
                return None;
            }
            let ty = SimpleLieType::new(Series::A, (p - 1) as usize).ok()?;
            let w = Weight::fundamental(ty.rank(), 0);
            let one = |dual| Summand {
                multiplicity: 1,
                factors: vec![TensorFactor {
                    weight: w.clone(),
                    dual,
                }],
            };
            Some((
                GroupSpec::simple(ty),
                RepExpr {
                    summands: vec![one(false), one(true)],
                },
            ))
        }
        Family::SoSu2 => {
            let (ty, w) = so_vector(p)?;
            let a1 = SimpleLieType::new(Series::A, 1).ok()?;
            Some((
                GroupSpec::new(vec![ty, a1]).ok()?,
                RepExpr::irreducible(vec![w, Weight(vec![1])]),
            ))
        }
    }
}

/// One concrete module produced by a row.
#[derive(Debug, Clone)]
pub struct Instance {
    /// `key` for fixed rows, `key@n=N` for family rows.
    pub id: String,
    pub n: Option<i64>,
    pub group: GroupSpec,
    pub rep: RepExpr,
}

fn max_rank(g: &GroupSpec) -> usize {
    g.factors().iter().map(|t| t.rank()).max().unwrap_or(0)
}

impl Source {
    fn check(&self, row: &str, convention: Convention) -> Result<()> {
        match (&self.family, &self.group, &self.rep) {
            (Some(_), None, None) => {
                let p = self
                    .param
                    .as_deref()
                    .ok_or_else(|| row_err(row, "family row without `param`"))?;
                Expr::parse(p).map_err(|e| row_err(row, e))?;
                if self.n_min.is_none() {
                    return Err(row_err(row, "family row without `n_min`"));
                }
                Ok(())
            }
            (None, Some(g), Some(r)) => {
                let group = parse_group(g).map_err(|e| row_err(row, e))?;
                let rep = parse_rep(r, &group, convention).map_err(|e| row_err(row, e))?;
                rep.validate(&group).map_err(|e| row_err(row, e))
            }
            _ => Err(row_err(row, "need either `group` and `rep` or `family`")),
        }
    }

    /// Instances with every factor of rank `<= rank_cap`, in increasing `n`.
    pub fn instances(
        &self,
        key: &str,
        convention: Convention,
        rank_cap: usize,
    ) -> Result<Vec<Instance>> {
        if let (Some(g), Some(r)) = (&self.group, &self.rep) {
            let group = parse_group(g).map_err(|e| row_err(key, e))?;
            let rep = parse_rep(r, &group, convention).map_err(|e| row_err(key, e))?;
            if max_rank(&group) > rank_cap {
                return Ok(vec![]);
            }
            return Ok(vec![Instance {
                id: key.to_string(),
                n: None,
                group,
                rep,
            }]);
        }
        let family = self.family.ok_or_else(|| row_err(key, "no module"))?;
        let param = self.param.as_deref().unwrap_or("n");
        let mut out = Vec::new();
        let mut n = self.n_min.unwrap_or(0);
        loop {
            let p = eval(key, param, Some(n))?;
            let (group, rep) = family_instance(family, p).ok_or_else(|| {
                row_err(key, format!("family parameter {p} out of range at n = {n}"))
            })?;
            if max_rank(&group) > rank_cap {
                break;
            }
            out.push(Instance {
                id: format!("{key}@n={n}"),
                n: Some(n),
                group,
                rep,
            });
            n += 1;
        }
        Ok(out)
    }
}

/// Parses an isotropy description such as `U(n)`, `SO(n-1)+T1+T1` or
/// `E6+T1` at a given `n`.
pub fn parse_levi(src: &str, n: Option<i64>) -> std::result::Result<Levi, String> {
    let mut parts = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, c) in src.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 => {
                parts.push(&src[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&src[start..]);
    let mut factors = Vec::new();
    let mut center = 0usize;
    let arg = |tok: &str, head: &str| -> std::result::Result<i64, String> {
        let inner = tok[head.len()..]
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| format!("malformed `{tok}`"))?;
        let e = Expr::parse(inner).map_err(|e| e.to_string())?;
        e.eval(n.unwrap_or(0)).map_err(|e| e.to_string())
    };
    let a = |m: i64| SimpleLieType::new(Series::A, m as usize).map_err(|e| e.to_string());
    for tok in parts.iter().map(|s| s.trim()) {
        if let Some(rest) = tok.strip_prefix('T') {
            let k = if rest.starts_with('(') {
                arg(tok, "T")?
            } else {
                rest.parse().map_err(|_| format!("malformed `{tok}`"))?
            };
            center += k as usize;
        } else if tok.starts_with("SU(") {
            let m = arg(tok, "SU")?;
            if m >= 2 {
                factors.push(a(m - 1)?);
            }
        } else if tok.starts_with("U(") {
            let m = arg(tok, "U")?;
            if m >= 2 {
                factors.push(a(m - 1)?);
            }
            center += 1;
        } else if tok.starts_with("SO(") {
            let m = arg(tok, "SO")?;
            let (f, c) = so_levi(m).ok_or_else(|| format!("unsupported `{tok}`"))?;
            factors.extend(f);
            center += c;
        } else if tok.starts_with("Sp(") {
            let m = arg(tok, "Sp")?;
            factors.push(if m == 1 {
                a(1)?
            } else {
                SimpleLieType::new(Series::C, m as usize).map_err(|e| e.to_string())?
            });
        } else {
            let g = parse_group(tok).map_err(|e| e.to_string())?;
            factors.extend(g.factors().iter().copied());
        }
    }
    Ok(Levi::new(factors, center))
}

/// One recomputed value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub table: &'static str,
    pub row: String,
    pub field: &'static str,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerifyReport {
    pub rank_cap: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    fn push(
        &mut self,
        table: &'static str,
        row: &str,
        field: &'static str,
        expected: impl ToString,
        computed: impl ToString,
    ) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        self.checks.push(Check {
            table,
            row: row.to_string(),
            field,
            pass: expected == computed,
            expected,
            computed,
        });
    }

    pub fn diff(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn is_clean(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl Catalog {
    pub fn parse(src: &str) -> Result<Catalog> {
        let cat: Catalog = toml::from_str(src).map_err(|e| Error::CatalogFormat(e.to_string()))?;
        cat.validate()?;
        Ok(cat)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("catalog serializes")
    }

    fn validate(&self) -> Result<()> {
        let c = self.convention;
        let mut keys = std::collections::HashSet::new();
        let mut seen = |k: &str| -> Result<()> {
            if !keys.insert(k.to_string()) {
                return Err(row_err(k, "duplicate key"));
            }
            Ok(())
        };
        for r in &self.wolf {
            seen(&r.key)?;
            r.source.check(&r.key, c)?;
            Expr::parse(&r.expected_dim_c_pv).map_err(|e| row_err(&r.key, e))?;
        }
        for r in &self.simple {
            seen(&r.key)?;
            r.source.check(&r.key, c)?;
        }
        for r in &self.nonsimple {
            seen(&r.key)?;
            r.source.check(&r.key, c)?;
        }
        for r in &self.parallel {
            seen(&r.key)?;
            r.source.check(&r.key, c)?;
            for e in [&r.ambient_n, &r.normal_holonomy_dim] {
                Expr::parse(e).map_err(|err| row_err(&r.key, err))?;
            }
            parse_levi(&r.levi_expected, r.source.n_min).map_err(|e| row_err(&r.key, e))?;
        }
        Ok(())
    }

    /// Rows in lookup order: `(table, key, source, same_orbit_as)`.
    fn sources(&self) -> Vec<(&'static str, &str, &Source, Option<&str>)> {
        let mut v: Vec<(&'static str, &str, &Source, Option<&str>)> = Vec::new();
        for r in &self.simple {
            v.push(("simple", &r.key, &r.source, r.same_orbit_as.as_deref()));
        }
        for r in &self.nonsimple {
            v.push(("nonsimple", &r.key, &r.source, r.same_orbit_as.as_deref()));
        }
        for r in &self.wolf {
            v.push(("wolf", &r.key, &r.source, None));
        }
        for r in &self.parallel {
            v.push(("parallel", &r.key, &r.source, None));
        }
        v
    }

    /// Canonical keys of every row instance up to `rank_cap`, first row
    /// wins.
    pub fn index(&self, rank_cap: usize) -> Result<HashMap<CanonKey, String>> {
        let mut map = HashMap::new();
        for (_, key, src, _) in self.sources() {
            for inst in src.instances(key, self.convention, rank_cap)? {
                map.entry(canonical_key(&inst.group, &inst.rep))
                    .or_insert(inst.id);
            }
        }
        Ok(map)
    }

    fn orbit_partner(&self, id: &str) -> Option<String> {
        for (_, key, _, same) in self.sources() {
            if key == id {
                if let Some(s) = same {
                    return Some(s.to_string());
                }
            }
            if same == Some(id) {
                return Some(key.to_string());
            }
        }
        None
    }

    /// Sets `table_row` and `same_orbit_as` on a verdict that passes every
    /// applicable condition and matches a row.
    pub fn annotate(&self, v: &mut CandidateVerdict) {
        self.annotate_all(std::slice::from_mut(v));
    }

    pub fn annotate_all(&self, vs: &mut [CandidateVerdict]) {
        let cap = vs
            .iter()
            .map(|v| max_rank(&v.group))
            .max()
            .unwrap_or(1)
            .max(2);
        let Ok(index) = self.index(cap) else { return };
        for v in vs {
            if !v.passes() {
                continue;
            }
            if let Some(id) = index.get(&v.canonical_key()) {
                v.same_orbit_as = self.orbit_partner(id);
                v.table_row = Some(id.clone());
            }
        }
    }

    /// Module of a row, or of one family instance when `n` is given.
    pub fn resolve(&self, key: &str, n: Option<i64>) -> Result<Instance> {
        let (_, _, src, _) = self
            .sources()
            .into_iter()
            .find(|(_, k, _, _)| *k == key)
            .ok_or_else(|| Error::UnknownEntry(key.to_string()))?;
        if let Some(family) = src.family {
            let n = n.ok_or_else(|| row_err(key, "family row needs n"))?;
            let min = src.n_min.unwrap_or(0);
            if n < min {
                return Err(row_err(key, format!("n = {n} below n_min = {min}")));
            }
            let p = eval(key, src.param.as_deref().unwrap_or("n"), Some(n))?;
            let (group, rep) = family_instance(family, p)
                .ok_or_else(|| row_err(key, format!("family parameter {p} out of range")))?;
            return Ok(Instance {
                id: format!("{key}@n={n}"),
                n: Some(n),
                group,
                rep,
            });
        }
        let mut inst = src.instances(key, self.convention, usize::MAX)?;
        Ok(inst.remove(0))
    }

    /// Restricted normal holonomy of a parallel row.
    pub fn normal_holonomy(
        &self,
        key: &str,
        n: Option<i64>,
    ) -> Result<crate::classify::NormalHolonomy> {
        if !self.parallel.iter().any(|r| r.key == key) {
            return Err(Error::UnknownEntry(key.to_string()));
        }
        let inst = self.resolve(key, n)?;
        normal_holonomy(&HolonomyEntry::Parallel {
            group: inst.group,
            rep: inst.rep,
        })
    }

    /// Recomputes every expected value with the engine.
    pub fn verify(&self, rank_cap: usize) -> Result<VerifyReport> {
        if rank_cap < 2 {
            return Err(Error::RankCap(rank_cap));
        }
        let mut rep = VerifyReport {
            rank_cap,
            checks: Vec::new(),
        };
        let c = self.convention;

        for r in &self.wolf {
            for inst in r.source.instances(&r.key, c, rank_cap)? {
                let dim = dim_u64(&inst.rep.dim(&inst.group)?);
                let expected = eval(&r.key, &r.expected_dim_c_pv, inst.n)?;
                rep.push("wolf", &inst.id, "dim_c_pv", expected, dim - 1);
                let v = mtc_report(&inst.group, &inst.rep)?;
                rep.push("wolf", &inst.id, "is_mtc", true, v.orbit.is_mtc);
            }
        }

        let case1 = enumerate_case1(rank_cap)?;
        self.check_enumeration(&mut rep, "simple", &case1)?;
        for v in &case1 {
            if v.transitive {
                let ty = v.group.factors()[0];
                rep.push(
                    "simple",
                    &v.label(),
                    "transitive_is_sp_standard",
                    "C",
                    ty.series().to_string(),
                );
            } else if v.table_row.is_none() {
                rep.push("simple", &v.label(), "unexpected_row", "none", "present");
            }
        }
        let sp_count = case1.iter().filter(|v| v.transitive).count();
        rep.push(
            "simple",
            "sp_standard",
            "transitive_rows",
            rank_cap - 1,
            sp_count,
        );

        let case2 = enumerate_case2(rank_cap)?;
        self.check_enumeration(&mut rep, "nonsimple", &case2)?;
        for v in &case2 {
            if v.table_row.is_none() {
                rep.push("nonsimple", &v.label(), "unexpected_row", "none", "present");
            }
        }

        for r in &self.parallel {
            for inst in r.source.instances(&r.key, c, rank_cap)? {
                let id = &inst.id;
                let v = mtc_report(&inst.group, &inst.rep)?;
                rep.push("parallel", id, "is_mtc", true, v.orbit.is_mtc);
                rep.push(
                    "parallel",
                    id,
                    "ambient_n",
                    eval(&r.key, &r.ambient_n, inst.n)?,
                    v.orbit.ambient_n,
                );
                let levi = parse_levi(&r.levi_expected, inst.n).map_err(|e| row_err(&r.key, e))?;
                rep.push("parallel", id, "levi", &levi, &v.orbit.levi);
                let nh = normal_holonomy(&HolonomyEntry::Parallel {
                    group: inst.group.clone(),
                    rep: inst.rep.clone(),
                })?;
                rep.push(
                    "parallel",
                    id,
                    "normal_holonomy_dim",
                    eval(&r.key, &r.normal_holonomy_dim, inst.n)?,
                    nh.dim,
                );
                let acting = inst.rep.summands[0]
                    .factors
                    .iter()
                    .filter(|f| f.weight.label_sum() > 0)
                    .count();
                rep.push("parallel", id, "reducible", r.reducible, acting > 1);
                if inst.rep.is_irreducible() {
                    let dim = dim_u64(&inst.rep.dim(&inst.group)?);
                    rep.push(
                        "parallel",
                        id,
                        "half_dimension",
                        dim - 2,
                        2 * v.orbit.orbit_dim_c as u64,
                    );
                }
            }
        }
        Ok(rep)
    }

    /// Every row instance of `table` appears in `found` with that row as
    /// `table_row` and the recorded `same_orbit_as`.
    fn check_enumeration(
        &self,
        rep: &mut VerifyReport,
        table: &'static str,
        found: &[CandidateVerdict],
    ) -> Result<()> {
        let rows: Vec<(&str, &Source, Option<&str>, bool)> = match table {
            "simple" => self
                .simple
                .iter()
                .map(|r| {
                    (
                        r.key.as_str(),
                        &r.source,
                        r.same_orbit_as.as_deref(),
                        r.degenerate,
                    )
                })
                .collect(),
            _ => self
                .nonsimple
                .iter()
                .map(|r| (r.key.as_str(), &r.source, r.same_orbit_as.as_deref(), false))
                .collect(),
        };
        for (key, src, _, degenerate) in rows {
            for inst in src.instances(key, self.convention, rank_cap_of(found))? {
                let k = canonical_key(&inst.group, &inst.rep);
                match found.iter().find(|v| v.canonical_key() == k) {
                    None => rep.push(table, &inst.id, "present", true, false),
                    Some(v) => {
                        rep.push(
                            table,
                            &inst.id,
                            "table_row",
                            &inst.id,
                            v.table_row.as_deref().unwrap_or("-"),
                        );
                        rep.push(table, &inst.id, "degenerate", degenerate, v.degenerate);
                        let partner = self.orbit_partner(&inst.id);
                        rep.push(
                            table,
                            &inst.id,
                            "same_orbit_as",
                            partner.as_deref().unwrap_or("-"),
                            v.same_orbit_as.as_deref().unwrap_or("-"),
                        );
                    }
                }
            }
        }
        Ok(())
    }

    pub fn render(&self, format: Format, which: TableKey) -> String {
        match format {
            Format::Json => {
                let s = match which {
                    TableKey::Wolf => serde_json::to_string_pretty(&self.wolf),
                    TableKey::Simple => serde_json::to_string_pretty(&self.simple),
                    TableKey::Nonsimple => serde_json::to_string_pretty(&self.nonsimple),
                    TableKey::Parallel => serde_json::to_string_pretty(&self.parallel),
                };
                s.expect("rows serialize") + "\n"
            }
            Format::Text => render_text(&self.table_cells(which)),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                for row in self.table_cells(which) {
                    w.write_record(&row).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
            }
        }
    }

    /// Header plus one row of cells per table row.
    fn table_cells(&self, which: TableKey) -> Vec<Vec<String>> {
        fn src_cells(s: &Source) -> [String; 2] {
            match (&s.group, &s.rep, &s.family) {
                (Some(g), Some(r), _) => [g.clone(), r.clone()],
                (_, _, Some(f)) => {
                    let name = match f {
                        Family::SuPair => "su_pair",
                        Family::SoSu2 => "so_su2",
                    };
                    [
                        format!("{name}({})", s.param.as_deref().unwrap_or("n")),
                        format!("n >= {}", s.n_min.unwrap_or(0)),
                    ]
                }
                _ => [String::new(), String::new()],
            }
        }
        let opt = |o: &Option<String>| o.clone().unwrap_or_default();
        let mut out: Vec<Vec<String>> = Vec::new();
        match which {
            TableKey::Wolf => {
                out.push(
                    ["key", "wolf_space", "G", "rho", "group", "rep", "dim_c_pv"]
                        .map(String::from)
                        .to_vec(),
                );
                for r in &self.wolf {
                    let [g, rep] = src_cells(&r.source);
                    out.push(vec![
                        r.key.clone(),
                        r.wolf_space_name.clone(),
                        r.group_name.clone(),
                        r.rep_name.clone(),
                        g,
                        rep,
                        r.expected_dim_c_pv.clone(),
                    ]);
                }
            }
            TableKey::Simple => {
                out.push(
                    [
                        "key",
                        "G",
                        "rho",
                        "group",
                        "rep",
                        "degenerate",
                        "same_orbit_as",
                    ]
                    .map(String::from)
                    .to_vec(),
                );
                for r in &self.simple {
                    let [g, rep] = src_cells(&r.source);
                    out.push(vec![
                        r.key.clone(),
                        r.group_name.clone(),
                        r.rep_name.clone(),
                        g,
                        rep,
                        r.degenerate.to_string(),
                        opt(&r.same_orbit_as),
                    ]);
                }
            }
            TableKey::Nonsimple => {
                out.push(
                    ["key", "G", "rho", "group", "rep", "same_orbit_as"]
                        .map(String::from)
                        .to_vec(),
                );
                for r in &self.nonsimple {
                    let [g, rep] = src_cells(&r.source);
                    out.push(vec![
                        r.key.clone(),
                        r.group_name.clone(),
                        r.rep_name.clone(),
                        g,
                        rep,
                        opt(&r.same_orbit_as),
                    ]);
                }
            }
            TableKey::Parallel => {
                out.push(
                    [
                        "key",
                        "immersion",
                        "group",
                        "rep",
                        "ambient_n",
                        "levi",
                        "nu_dim",
                        "kahler_einstein",
                        "reducible",
                    ]
                    .map(String::from)
                    .to_vec(),
                );
                for r in &self.parallel {
                    let [g, rep] = src_cells(&r.source);
                    out.push(vec![
                        r.key.clone(),
                        r.name.clone(),
                        g,
                        rep,
                        r.ambient_n.clone(),
                        r.levi_expected.clone(),
                        r.normal_holonomy_dim.clone(),
                        r.kahler_einstein.to_string(),
                        r.reducible.to_string(),
                    ]);
                }
            }
        }
        out
    }

    pub fn row_count(&self, which: TableKey) -> usize {
        match which {
            TableKey::Wolf => self.wolf.len(),
            TableKey::Simple => self.simple.len(),
            TableKey::Nonsimple => self.nonsimple.len(),
            TableKey::Parallel => self.parallel.len(),
        }
    }
}

fn rank_cap_of(found: &[CandidateVerdict]) -> usize {
    found.iter().map(|v| max_rank(&v.group)).max().unwrap_or(2)
}

fn render_text(rows: &[Vec<String>]) -> String {
    let cols = rows.first().map_or(0, |r| r.len());
    let widths: Vec<usize> = (0..cols)
        .map(|i| rows.iter().map(|r| r[i].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for (k, r) in rows.iter().enumerate() {
        let line: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
        if k == 0 {
            let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
            out.push_str(&rule.join("  "));
            out.push('\n');
        }
    }
    out
}

/// The catalog shipped with the crate.
pub fn bundled() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| Catalog::parse(BUNDLED).expect("bundled catalog is valid"))
}

/// Source text of the bundled catalog.
pub fn bundled_source() -> &'static str {
    BUNDLED
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads() {
        let c = bundled();
        assert_eq!(c.wolf.len(), 8);
        assert_eq!(c.simple.len(), 6);
        assert_eq!(c.nonsimple.len(), 4);
        assert_eq!(c.parallel.len(), 8);
        assert_eq!(c.convention, Convention::Ov);
    }

    #[test]
    fn round_trip() {
        let c = bundled();
        let again = Catalog::parse(&c.to_toml()).unwrap();
        assert_eq!(&again, c);
        let json = c.render(Format::Json, TableKey::Wolf);
        let rows: Vec<WolfRow> = serde_json::from_str(&json).unwrap();
        assert_eq!(rows, c.wolf);
    }

    #[test]
    fn renders() {
        let c = bundled();
        let text = c.render(Format::Text, TableKey::Simple);
        assert_eq!(text.lines().count(), 2 + 6);
        let csv = c.render(Format::Csv, TableKey::Nonsimple);
        assert_eq!(csv.lines().count(), 1 + 4);
        assert_eq!(c.render(Format::Text, TableKey::Simple), text);
        assert!("table9".parse::<TableKey>().is_err());
    }

    #[test]
    fn levi_strings() {
        assert_eq!(parse_levi("U(n)", Some(4)).unwrap().to_string(), "A3+T1");
        assert_eq!(
            parse_levi("SO(n-1)+T1+T1", Some(6)).unwrap().to_string(),
            "C2+T2"
        );
        assert_eq!(
            parse_levi("SO(n-1)+T1+T1", Some(5)).unwrap().to_string(),
            "A1+A1+T2"
        );
        assert_eq!(
            parse_levi("SU(3)+SU(3)+T1", None).unwrap().to_string(),
            "A2+A2+T1"
        );
        assert_eq!(parse_levi("E6+T1", None).unwrap().to_string(), "E6+T1");
        assert_eq!(parse_levi("T3", None).unwrap().to_string(), "T3");
    }

    #[test]
    fn bad_rows_are_named() {
        let src = "convention = \"ov\"\n[[simple]]\nkey = \"x\"\ngroup_name = \"\"\nrep_name = \"\"\ngroup = \"A2\"\nrep = \"[1]\"\n";
        match Catalog::parse(src) {
            Err(Error::CatalogRow { row, .. }) => assert_eq!(row, "x"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn family_instances() {
        let c = bundled();
        let i = c.resolve("wolf.so_su2", Some(3)).unwrap();
        assert_eq!(i.group.to_string(), "C2xA1");
        let i = c.resolve("wolf.so_su2", Some(4)).unwrap();
        assert_eq!(i.group.to_string(), "A3xA1");
        let i = c.resolve("wolf.so_su2", Some(5)).unwrap();
        assert_eq!(i.group.to_string(), "B3xA1");
        assert!(c.resolve("wolf.so_su2", Some(2)).is_err());
        assert!(c.resolve("nope", None).is_err());
    }
}
