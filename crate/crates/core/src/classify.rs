//! Classification of homogeneous maximal totally complex orbits in `HP^n`.
//!
//! A compact group `G` acting on `HP^n` through a quaternionic module `V`
//! of complex dimension `2n + 2` is screened by:
//!
//! * the dimension bound `dim G - rk G >= dim V - 2`;
//! * for irreducible tensor products, the weight condition: every weight
//!   `mu != ±lambda` is `alpha ± lambda` for a root `alpha`;
//! * the half-dimension identity `2 dim_C(G.[v_lambda]) = dim V - 2` of the
//!   complex lift, the orbit of a highest weight line;
//! * for reducible modules `V = k V1 + s (W + W*)`, the estimates on `k`
//!   and `s` plus transitivity of `G` on `P(V1)` or `P(W)`.
//!
//! The highest-weight orbit `G/P` has complex dimension equal to the number
//! of positive roots not orthogonal to `lambda`, and its isotropy is the
//! Levi subgroup generated by the simple roots orthogonal to `lambda`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::notation::render_rep;
use crate::rep_calc::{
    canonical_irrep, concat, effective_weights, fs_type_in, summand_dim, summand_fs,
    tensor_weight_set, weyl_dim_in, FsType, Irrep, RepExpr,
};
use crate::root_data::{root_system, GroupSpec, RootSystem, Series, SimpleLieType, Weight};

/// Reductive isotropy: semisimple factors plus a central torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Levi {
    pub factors: Vec<SimpleLieType>,
    pub center_rank: usize,
}

impl Levi {
    /// Sorts factors in descending order; `B2` is written `C2`.
    pub fn new(mut factors: Vec<SimpleLieType>, center_rank: usize) -> Self {
        for f in factors.iter_mut() {
            if f.series() == Series::B && f.rank() == 2 {
                *f = SimpleLieType::new(Series::C, 2).unwrap();
            }
        }
        factors.sort_by(|a, b| b.cmp(a));
        Levi {
            factors,
            center_rank,
        }
    }

    pub fn semisimple_rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank()).sum()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.factors
            .iter()
            .map(|f| root_system(*f).positive_roots().len())
            .sum()
    }

    /// Real dimension of the compact Levi subgroup.
    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim()).sum::<usize>() + self.center_rank
    }

    pub fn merge(parts: impl IntoIterator<Item = Levi>) -> Levi {
        let mut factors = Vec::new();
        let mut center = 0;
        for p in parts {
            factors.extend(p.factors);
            center += p.center_rank;
        }
        Levi::new(factors, center)
    }
}

impl fmt::Display for Levi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.factors.iter().map(|t| t.to_string()).collect();
        if self.center_rank > 0 {
            parts.push(format!("T{}", self.center_rank));
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        f.write_str(&parts.join("+"))
    }
}

/// Identifies a connected Dynkin subdiagram of `rs` on `nodes`.
fn identify_component(rs: &RootSystem, nodes: &[usize]) -> SimpleLieType {
    let a = rs.cartan_matrix();
    let len = rs.root_lengths();
    let n = nodes.len();
    let mk = |s, r| SimpleLieType::new(s, r).unwrap();
    if n == 1 {
        return mk(Series::A, 1);
    }
    let neighbours = |i: usize| -> Vec<usize> {
        nodes
            .iter()
            .copied()
            .filter(|&j| j != i && a[i][j] != 0)
            .collect()
    };
    let mut max_bond = 1;
    let mut double = None;
    for &i in nodes {
        for j in neighbours(i) {
            let bond = a[i][j] * a[j][i];
            if bond > max_bond {
                max_bond = bond;
            }
            if bond == 2 {
                double = Some((i, j));
            }
        }
    }
    match max_bond {
        3 => return mk(Series::G, 2),
        2 => {
            if n == 2 {
                return mk(Series::C, 2);
            }
            let (i, j) = double.unwrap();
            let deg = |x: usize| neighbours(x).len();
            if deg(i) == 2 && deg(j) == 2 {
                return mk(Series::F, 4);
            }
            // the end of the chain lying at the double bond
            let end = if deg(i) == 1 { i } else { j };
            let other = if end == i { j } else { i };
            return if len[end] < len[other] {
                mk(Series::B, n)
            } else {
                mk(Series::C, n)
            };
        }
        _ => {}
    }
    let branch = nodes.iter().copied().find(|&i| neighbours(i).len() == 3);
    let Some(b) = branch else {
        return mk(Series::A, n);
    };
    let mut arms: Vec<usize> = neighbours(b)
        .into_iter()
        .map(|start| {
            let mut prev = b;
            let mut cur = start;
            let mut length = 1;
            loop {
                let next: Vec<usize> = neighbours(cur).into_iter().filter(|&x| x != prev).collect();
                match next.as_slice() {
                    [x] => {
                        prev = cur;
                        cur = *x;
                        length += 1;
                    }
                    _ => break,
                }
            }
            length
        })
        .collect();
    arms.sort();
    match arms.as_slice() {
        [1, 1, _] => mk(Series::D, n),
        [1, 2, 2] => mk(Series::E, 6),
        [1, 2, 3] => mk(Series::E, 7),
        [1, 2, 4] => mk(Series::E, 8),
        other => unreachable!("not a finite type diagram: arms {other:?}"),
    }
}

fn levi_in(rs: &RootSystem, lambda: &Weight) -> Levi {
    let a = rs.cartan_matrix();
    let zero: Vec<usize> = (0..rs.rank()).filter(|&i| lambda[i] == 0).collect();
    let center = rs.rank() - zero.len();
    let mut seen: HashSet<usize> = HashSet::new();
    let mut factors = Vec::new();
    for &start in &zero {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = vec![];
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(i) = stack.pop() {
            comp.push(i);
            for &j in &zero {
                if a[i][j] != 0 && seen.insert(j) {
                    stack.push(j);
                }
            }
        }
        comp.sort();
        factors.push(identify_component(rs, &comp));
    }
    Levi::new(factors, center)
}

fn orbit_dim_in(rs: &RootSystem, lambda: &Weight) -> usize {
    rs.positive_roots()
        .iter()
        .filter(|r| r.pair(lambda) != 0)
        .count()
}

fn check_dominant(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    rs.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(())
}

/// Levi isotropy of the highest weight line: semisimple part on the simple
/// roots with `<lambda, alpha_i^vee> = 0`, one circle per other node.
pub fn isotropy_levi(ty: SimpleLieType, lambda: &Weight) -> Result<Levi> {
    let rs = root_system(ty);
    check_dominant(&rs, lambda)?;
    Ok(levi_in(&rs, lambda))
}

/// Complex dimension of `G.[v_lambda]`.
pub fn complex_orbit_dim(ty: SimpleLieType, lambda: &Weight) -> Result<usize> {
    let rs = root_system(ty);
    check_dominant(&rs, lambda)?;
    Ok(orbit_dim_in(&rs, lambda))
}

/// `dim G - rk G >= dim V - 2` for a simple group.
pub fn dim_condition_simple(ty: SimpleLieType, lambda: &Weight) -> Result<bool> {
    let rs = root_system(ty);
    check_dominant(&rs, lambda)?;
    let budget = BigUint::from((rs.dim() - rs.rank() + 2) as u64);
    Ok(budget >= weyl_dim_in(&rs, lambda))
}

/// `dim G' - rk G' >= 2 dim V' - 2`, the bound for `SU(2) x G'` acting on
/// `C^2 (x) V'`.
pub fn su2_factor_condition(ty: SimpleLieType, lambda: &Weight) -> Result<bool> {
    let rs = root_system(ty);
    check_dominant(&rs, lambda)?;
    let budget = BigUint::from((rs.dim() - rs.rank() + 2) as u64);
    Ok(budget >= weyl_dim_in(&rs, lambda) * 2u32)
}

/// Every weight `mu != ±lambda` of the irreducible tensor product satisfies
/// `mu - lambda` or `mu + lambda` is a root of the product group.
pub fn weight_condition(group: &GroupSpec, rep: &RepExpr) -> Result<bool> {
    let weights = tensor_weight_set(group, rep)?;
    let lambda = concat(&effective_weights(group, &rep.summands[0]));
    let neg = lambda.neg();
    let roots: HashSet<Vec<i64>> = group.root_labels().into_iter().collect();
    Ok(weights
        .iter()
        .filter(|mu| **mu != lambda && **mu != neg)
        .all(|mu| roots.contains(&mu.sub(&lambda).0) || roots.contains(&mu.add(&lambda).0)))
}

/// `Sp(m)` acting on `HP^(m-1)` through its standard module: the one
/// irreducible action that is transitive on the quaternionic projective
/// space.
pub fn transitive_on_hp(ty: SimpleLieType, lambda: &Weight) -> bool {
    let (ty, w) = canonical_irrep(ty, lambda);
    ty.series() == Series::C && w == Weight::fundamental(ty.rank(), 0)
}

/// Whitelist of irreducible actions transitive on `P_C(W)`: `SU(m)` and
/// `Sp(m)` on their standard modules (`SU(2) = Sp(1)` included).
pub fn transitive_on_cp(ty: SimpleLieType, lambda: &Weight) -> bool {
    let (ty, w) = canonical_irrep(ty, lambda);
    matches!(ty.series(), Series::A | Series::C) && w == Weight::fundamental(ty.rank(), 0)
}

/// Orbit geometry of the complex lift.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub orbit_dim_c: usize,
    pub levi: Levi,
    /// `n` with `dim_C V = 2n + 2`.
    pub ambient_n: u64,
    /// `2 orbit_dim_c == dim_C V - 2`.
    pub is_mtc: bool,
}

/// Outcome of the screening conditions for one `(G, V)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateVerdict {
    pub group: GroupSpec,
    #[serde(serialize_with = "ser_rep")]
    pub rep: RepExpr,
    pub fs_type: FsType,
    pub dim_ok: bool,
    pub weight_ok: Option<bool>,
    pub transitive: bool,
    pub degenerate: bool,
    pub same_orbit_as: Option<String>,
    #[serde(flatten)]
    pub orbit: OrbitReport,
    pub table_row: Option<String>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub reducible: Option<ReducibleVerdict>,
}

fn ser_rep<S: serde::Serializer>(rep: &RepExpr, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&render_rep(rep))
}

impl CandidateVerdict {
    /// All applicable conditions hold (the MTC identity is waived for
    /// degenerate rows).
    pub fn passes(&self) -> bool {
        self.fs_type == FsType::Quaternionic
            && self.dim_ok
            && self.weight_ok != Some(false)
            && !self.transitive
            && (self.orbit.is_mtc || self.degenerate)
            && self.reducible.as_ref().is_none_or(|r| r.is_valid())
    }

    /// `group rep`, used to refer to a verdict in text.
    pub fn label(&self) -> String {
        format!("{} {}", self.group, render_rep(&self.rep))
    }

    /// Canonical identity of the pair up to automorphisms.
    pub fn canonical_key(&self) -> CanonKey {
        canonical_key(&self.group, &self.rep)
    }
}

/// Identity of a module up to reordering of factors and diagram
/// automorphisms of each factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CanonKey {
    Irreducible(Vec<(SimpleLieType, Weight)>),
    Reducible {
        base: Vec<(SimpleLieType, Weight)>,
        k: u32,
        s: u32,
    },
    Other,
}

fn canonical_pairs(group: &GroupSpec, weights: &[Weight]) -> Vec<(SimpleLieType, Weight)> {
    let mut v: Vec<(SimpleLieType, Weight)> = group
        .factors()
        .iter()
        .zip(weights)
        .map(|(t, w)| canonical_irrep(*t, w))
        .collect();
    v.sort_by(|a, b| b.cmp(a));
    v
}

pub fn canonical_key(group: &GroupSpec, rep: &RepExpr) -> CanonKey {
    if rep.is_irreducible() {
        let w = effective_weights(group, &rep.summands[0]);
        return CanonKey::Irreducible(canonical_pairs(group, &w));
    }
    match isotypic_decomposition(group, rep) {
        Ok(Isotypic::Spec { base, k, s }) => CanonKey::Reducible {
            base: canonical_pairs(group, &base),
            k,
            s,
        },
        _ => CanonKey::Other,
    }
}

/// Reorders the factors of an irreducible `(group, weights)` pair in
/// descending `(series, rank, labels)` order.
pub fn canonical_order(group: &GroupSpec, weights: &[Weight]) -> (GroupSpec, Vec<Weight>) {
    let mut pairs: Vec<(SimpleLieType, Weight)> = group
        .factors()
        .iter()
        .copied()
        .zip(weights.iter().cloned())
        .collect();
    pairs.sort_by(|a, b| b.cmp(a));
    let (f, w): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
    (GroupSpec::new(f).expect("non-empty"), w)
}

fn dim1_holds(group: &GroupSpec, dim_v: &BigUint) -> bool {
    BigUint::from((group.dim() - group.rank() + 2) as u64) >= *dim_v
}

fn ambient(dim_v: &BigUint) -> u64 {
    let d = crate::rep_calc::dim_u64(dim_v);
    (d / 2).saturating_sub(1)
}

/// Verdict for an irreducible tensor product, before catalog annotation.
fn evaluate_irreducible(group: &GroupSpec, rep: &RepExpr) -> Result<CandidateVerdict> {
    let s = &rep.summands[0];
    let fs = summand_fs(group, s);
    if fs != FsType::Quaternionic {
        return Err(Error::NotQuaternionic(fs.as_str()));
    }
    let weights = effective_weights(group, s);
    let dim_v = summand_dim(group, s);
    let mut orbit_dim = 0;
    let mut levis = Vec::new();
    for (ty, w) in group.factors().iter().zip(&weights) {
        let rs = root_system(*ty);
        orbit_dim += orbit_dim_in(&rs, w);
        levis.push(levi_in(&rs, w));
    }
    let ambient_n = ambient(&dim_v);
    let is_mtc = BigUint::from(2 * orbit_dim as u64 + 2) == dim_v;
    let transitive = match group.factors() {
        [ty] => transitive_on_hp(*ty, &weights[0]),
        _ => false,
    };
    Ok(CandidateVerdict {
        group: group.clone(),
        rep: rep.clone(),
        fs_type: fs,
        dim_ok: dim1_holds(group, &dim_v),
        weight_ok: Some(weight_condition(group, rep)?),
        transitive,
        degenerate: ambient_n < 2,
        same_orbit_as: None,
        orbit: OrbitReport {
            orbit_dim_c: orbit_dim,
            levi: Levi::merge(levis),
            ambient_n,
            is_mtc,
        },
        table_row: None,
        notes: Vec::new(),
        reducible: None,
    })
}

enum Isotypic {
    Spec { base: Vec<Weight>, k: u32, s: u32 },
    Mixed,
}

/// Splits a reducible module into `k V1 + s (W + W*)`. Errors when the
/// module carries no quaternionic structure.
fn isotypic_decomposition(group: &GroupSpec, rep: &RepExpr) -> Result<Isotypic> {
    let first = effective_weights(group, &rep.summands[0]);
    let dual: Vec<Weight> = first
        .iter()
        .zip(group.factors())
        .map(|(w, t)| root_system(*t).dominant_conjugate(&w.neg()))
        .collect();
    let mut plain = 0u32;
    let mut duals = 0u32;
    for s in &rep.summands {
        let w = effective_weights(group, s);
        if w == first {
            plain += s.multiplicity;
        } else if w == dual {
            duals += s.multiplicity;
        } else {
            return Ok(Isotypic::Mixed);
        }
    }
    let fs = summand_fs(group, &rep.summands[0]);
    match fs {
        FsType::Quaternionic => Ok(Isotypic::Spec {
            base: first,
            k: plain + duals,
            s: 0,
        }),
        FsType::Real => {
            let total = plain + duals;
            if total % 2 == 1 {
                return Err(Error::NotQuaternionic("real"));
            }
            Ok(Isotypic::Spec {
                base: first,
                k: 0,
                s: total / 2,
            })
        }
        FsType::Complex => {
            if plain != duals {
                return Err(Error::NotQuaternionic("complex"));
            }
            Ok(Isotypic::Spec {
                base: first,
                k: 0,
                s: plain,
            })
        }
    }
}

/// `V = k V1 + s (W + W*)` with `base` the module `V1` (when `k > 0`) or `W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducibleSpec {
    k: u32,
    s: u32,
    base: Irrep,
}

impl ReducibleSpec {
    pub fn new(k: u32, s: u32, base: Irrep) -> Result<Self> {
        if k == 0 && s == 0 {
            return Err(Error::InvalidReducible("k and s are both zero".into()));
        }
        if k > 0 && base.fs() != FsType::Quaternionic {
            return Err(Error::InvalidReducible(format!(
                "k = {k} needs a quaternionic V1, base is {}",
                base.fs()
            )));
        }
        Ok(ReducibleSpec { k, s, base })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn base(&self) -> &Irrep {
        &self.base
    }

    /// `k dim V1 + 2 s dim W`.
    pub fn total_dim(&self) -> BigUint {
        self.base.dim() * (self.k + 2 * self.s)
    }
}

/// Why a reducible module carries no MTC orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReducibleFailure {
    /// `k = 1, s = 0`: not reducible at all.
    Irreducible,
    /// `k >= 3`: the estimate `dim V <= 2 dim V1` forces `k <= 2`.
    KAtMostTwo,
    /// `k >= 1, s >= 1`: then `W = V1` and `dim V >= 3 dim V1`.
    MixedSummands,
    /// `k = 0, s >= 2`: the same estimate for `W` forces `s = 1`.
    SAtMostOne,
    /// Equality in the estimate needs `G` transitive on the projectivized
    /// summand (and `Sp(m)` when `k = 2`).
    NotTransitive,
    /// Summands not all isomorphic up to duality.
    NonIsotypic,
}

impl ReducibleFailure {
    pub fn reason(&self) -> &'static str {
        match self {
            ReducibleFailure::Irreducible => "k = 1, s = 0 is irreducible",
            ReducibleFailure::KAtMostTwo => "dimension estimate: k <= 2",
            ReducibleFailure::MixedSummands => {
                "dimension estimate: W = V1 gives dim V >= 3 dim V1"
            }
            ReducibleFailure::SAtMostOne => "dimension estimate: s <= 1",
            ReducibleFailure::NotTransitive => {
                "equality in the dimension estimate needs a transitive action on the projectivized summand"
            }
            ReducibleFailure::NonIsotypic => "summands are not isomorphic up to duality",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ReducibleVerdict {
    Valid {
        identification: String,
        ambient_n: u64,
    },
    Invalid {
        failure: ReducibleFailure,
        reason: &'static str,
    },
}

impl ReducibleVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, ReducibleVerdict::Valid { .. })
    }

    fn invalid(failure: ReducibleFailure) -> Self {
        ReducibleVerdict::Invalid {
            failure,
            reason: failure.reason(),
        }
    }
}

/// `CP^(2m-1) = Sp(m)/T1 x Sp(m-1)` inside `HP^(2m-1)`.
fn sp_line(m: u64) -> ReducibleVerdict {
    let n = 2 * m - 1;
    let iso = if m == 1 {
        "T1".to_string()
    } else {
        format!("T1xSp({})", m - 1)
    };
    ReducibleVerdict::Valid {
        identification: format!("CP^{n} = Sp({m})/{iso} in HP^{n}"),
        ambient_n: n,
    }
}

pub fn classify_reducible(spec: &ReducibleSpec) -> ReducibleVerdict {
    use ReducibleFailure::*;
    let (k, s) = (spec.k, spec.s);
    let base = &spec.base;
    let simple = base.simple_type();
    let hw = base.highest_weight();
    let on_cp = simple.is_some_and(|t| transitive_on_cp(t, hw));
    let d = crate::rep_calc::dim_u64(base.dim());
    let verdict = if k >= 1 && s >= 1 {
        ReducibleVerdict::invalid(MixedSummands)
    } else if k >= 3 {
        ReducibleVerdict::invalid(KAtMostTwo)
    } else if k == 1 {
        ReducibleVerdict::invalid(Irreducible)
    } else if k == 2 {
        // transitive on P(V1) and quaternionic: Sp(m), including Sp(1) = SU(2)
        if on_cp && base.fs() == FsType::Quaternionic {
            sp_line(d / 2)
        } else {
            ReducibleVerdict::invalid(NotTransitive)
        }
    } else if s >= 2 {
        ReducibleVerdict::invalid(SAtMostOne)
    } else if on_cp {
        let t = simple.unwrap();
        if t.series() == Series::C {
            sp_line(d / 2)
        } else {
            let m = d;
            ReducibleVerdict::Valid {
                identification: format!(
                    "CP^{} = SU({m})/S(U(1)xU({})) in HP^{}",
                    m - 1,
                    m - 1,
                    m - 1
                ),
                ambient_n: m - 1,
            }
        }
    } else {
        ReducibleVerdict::invalid(NotTransitive)
    };
    debug_assert!(!verdict.is_valid() || spec.total_dim() <= base.dim() * 2u32);
    verdict
}

fn evaluate_reducible(group: &GroupSpec, rep: &RepExpr) -> Result<CandidateVerdict> {
    let dim_v = rep.dim(group)?;
    let (base, spec) = match isotypic_decomposition(group, rep)? {
        Isotypic::Spec { base, k, s } => {
            let irrep = Irrep::new(group.clone(), concat(&base))?;
            let spec = ReducibleSpec::new(k, s, irrep)?;
            (base, Some(spec))
        }
        Isotypic::Mixed => (effective_weights(group, &rep.summands[0]), None),
    };
    let verdict = match &spec {
        Some(spec) => classify_reducible(spec),
        None => ReducibleVerdict::invalid(ReducibleFailure::NonIsotypic),
    };
    let mut orbit_dim = 0;
    let mut levis = Vec::new();
    for (ty, w) in group.factors().iter().zip(&base) {
        let rs = root_system(*ty);
        orbit_dim += orbit_dim_in(&rs, w);
        levis.push(levi_in(&rs, w));
    }
    let ambient_n = ambient(&dim_v);
    let is_mtc = verdict.is_valid() && BigUint::from(2 * orbit_dim as u64 + 2) == dim_v;
    let mut notes = Vec::new();
    if let Some(spec) = &spec {
        notes.push(format!("k = {}, s = {}", spec.k, spec.s));
    }
    match &verdict {
        ReducibleVerdict::Valid { identification, .. } => notes.push(identification.clone()),
        ReducibleVerdict::Invalid { reason, .. } => notes.push(reason.to_string()),
    }
    Ok(CandidateVerdict {
        group: group.clone(),
        rep: rep.clone(),
        fs_type: FsType::Quaternionic,
        dim_ok: dim1_holds(group, &dim_v),
        weight_ok: None,
        transitive: false,
        degenerate: ambient_n < 2,
        same_orbit_as: None,
        orbit: OrbitReport {
            orbit_dim_c: orbit_dim,
            levi: Levi::merge(levis),
            ambient_n,
            is_mtc,
        },
        table_row: None,
        notes,
        reducible: Some(verdict),
    })
}

/// Full report for one `(G, V)`: FS typing, the dimension bound, the weight
/// condition (irreducible) or the reducible analysis, and orbit data,
/// annotated with the bundled catalog.
pub fn mtc_report(group: &GroupSpec, rep: &RepExpr) -> Result<CandidateVerdict> {
    rep.validate(group)?;
    let mut v = if rep.is_irreducible() {
        evaluate_irreducible(group, rep)?
    } else {
        evaluate_reducible(group, rep)?
    };
    crate::catalog::bundled().annotate(&mut v);
    Ok(v)
}

/// All dominant weights of `rs` with Weyl dimension at most `bound`. Since
/// the dimension strictly increases with every label, each coordinate is
/// raised until the bound fails with the later coordinates still zero.
pub fn dominant_weights_bounded(rs: &RootSystem, bound: &BigUint) -> Vec<Weight> {
    fn rec(rs: &RootSystem, bound: &BigUint, i: usize, w: &mut Weight, out: &mut Vec<Weight>) {
        if i == rs.rank() {
            out.push(w.clone());
            return;
        }
        while weyl_dim_in(rs, w) <= *bound {
            rec(rs, bound, i + 1, w, out);
            w[i] += 1;
        }
        w[i] = 0;
    }
    let mut out = Vec::new();
    let mut w = Weight::zero(rs.rank());
    rec(rs, bound, 0, &mut w, &mut out);
    out
}

fn is_canonical(ty: SimpleLieType, w: &Weight) -> bool {
    canonical_irrep(ty, w) == (ty, w.clone())
}

fn sort_rows(rows: &mut [CandidateVerdict]) {
    rows.sort_by_key(|v| v.canonical_key());
}

/// Quaternionic irreducibles of simple groups of rank `<= rank_cap` that
/// satisfy the dimension bound, one per automorphism class, whether or not
/// the complex lift has half dimension.
pub fn case1_dimension_passers(rank_cap: usize) -> Result<Vec<CandidateVerdict>> {
    if rank_cap < 2 {
        return Err(Error::RankCap(rank_cap));
    }
    let types = SimpleLieType::all_up_to_rank(rank_cap);
    let mut rows: Vec<CandidateVerdict> = types
        .par_iter()
        .flat_map_iter(|ty| {
            let rs = root_system(*ty);
            let bound = BigUint::from((rs.dim() - rs.rank() + 2) as u64);
            dominant_weights_bounded(&rs, &bound)
                .into_iter()
                .filter(|w| w.label_sum() > 0 && is_canonical(*ty, w))
                .filter(|w| fs_type_in(&rs, w) == FsType::Quaternionic)
                .map(|w| {
                    let g = GroupSpec::simple(*ty);
                    let rep = RepExpr::irreducible(vec![w]);
                    evaluate_irreducible(&g, &rep).expect("quaternionic")
                })
                .collect::<Vec<_>>()
        })
        .collect();
    sort_rows(&mut rows);
    Ok(rows)
}

/// Simple `G`, irreducible `V`. Rank-one `SU(2)` is set aside and reported
/// as its single degenerate row; for rank at least two a candidate is kept
/// when it is the transitive standard action of `Sp(m)` (flagged) or its
/// complex lift has half dimension.
pub fn enumerate_case1(rank_cap: usize) -> Result<Vec<CandidateVerdict>> {
    let mut rows: Vec<CandidateVerdict> = case1_dimension_passers(rank_cap)?
        .into_iter()
        .filter(|v| v.group.rank() >= 2 && (v.transitive || v.orbit.is_mtc))
        .collect();
    let a1 = GroupSpec::simple(SimpleLieType::new(Series::A, 1)?);
    let mut su2 = evaluate_irreducible(&a1, &RepExpr::irreducible(vec![Weight(vec![1])]))?;
    su2.notes.push(
        "rank one: SU(2) on [3] (dim 4, HP^1) also meets the dimension bound; only the tabulated row is reported"
            .into(),
    );
    rows.push(su2);
    let cat = crate::catalog::bundled();
    for v in rows.iter_mut() {
        cat.annotate(v);
    }
    sort_rows(&mut rows);
    Ok(rows)
}

/// Simple `G'` times `SU(2)` on `V' (x) C^2` with `V'` real, plus
/// `SU(2)^3` on `C^2 (x) C^2 (x) C^2`. For `rk G' >= 2` the bound is
/// [`su2_factor_condition`]; for `G' = SU(2)` the dimension bound of the
/// whole product is used.
pub fn enumerate_case2(rank_cap: usize) -> Result<Vec<CandidateVerdict>> {
    if rank_cap < 2 {
        return Err(Error::RankCap(rank_cap));
    }
    let a1 = SimpleLieType::new(Series::A, 1)?;
    let types = SimpleLieType::all_up_to_rank(rank_cap);
    let mut rows: Vec<CandidateVerdict> = types
        .par_iter()
        .flat_map_iter(|ty| {
            let rs = root_system(*ty);
            // dim V' bound from each dimension condition
            let budget = (rs.dim() - rs.rank() + 2) as u64;
            let bound = if rs.rank() >= 2 {
                budget / 2
            } else {
                (budget + 2 + 2) / 2
            };
            dominant_weights_bounded(&rs, &BigUint::from(bound))
                .into_iter()
                .filter(|w| w.label_sum() > 0 && is_canonical(*ty, w))
                .filter(|w| fs_type_in(&rs, w) == FsType::Real)
                .filter_map(|w| {
                    let dim_ok = if rs.rank() >= 2 {
                        su2_factor_condition(*ty, &w).unwrap()
                    } else {
                        // dim(SU(2) x SU(2)) - 2 >= 2 dim V' - 2
                        BigUint::from(4u32 + 2) >= weyl_dim_in(&rs, &w) * 2u32
                    };
                    if !dim_ok {
                        return None;
                    }
                    let (g, ws) = canonical_order(
                        &GroupSpec::new(vec![*ty, a1]).unwrap(),
                        &[w, Weight(vec![1])],
                    );
                    let rep = RepExpr::irreducible(ws);
                    let v = evaluate_irreducible(&g, &rep).expect("quaternionic");
                    (v.weight_ok == Some(true)).then_some(v)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let triple = GroupSpec::new(vec![a1, a1, a1])?;
    let rep = RepExpr::irreducible(vec![Weight(vec![1]); 3]);
    rows.push(evaluate_irreducible(&triple, &rep)?);
    let cat = crate::catalog::bundled();
    for v in rows.iter_mut() {
        cat.annotate(v);
    }
    sort_rows(&mut rows);
    Ok(rows)
}

/// Brute-force check of the reduction behind [`enumerate_case2`]: every
/// product of 2 to `max_factors` simple factors of rank `<= max_rank`, with
/// every nontrivial irreducible on each factor, screened by quaternionic
/// type, the product dimension bound and the weight condition.
pub fn enumerate_case2_exhaustive(
    max_rank: usize,
    max_factors: usize,
) -> Result<Vec<CandidateVerdict>> {
    let types: Vec<SimpleLieType> = SimpleLieType::all_up_to_rank(max_rank.max(1))
        .into_iter()
        .filter(|t| t.rank() <= max_rank)
        .collect();
    let mut groups: Vec<Vec<SimpleLieType>> = Vec::new();
    fn multisets(
        types: &[SimpleLieType],
        start: usize,
        left: usize,
        cur: &mut Vec<SimpleLieType>,
        out: &mut Vec<Vec<SimpleLieType>>,
    ) {
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        if left == 0 {
            return;
        }
        for i in start..types.len() {
            cur.push(types[i]);
            multisets(types, i, left - 1, cur, out);
            cur.pop();
        }
    }
    multisets(&types, 0, max_factors, &mut Vec::new(), &mut groups);

    let mut rows: Vec<CandidateVerdict> = groups
        .par_iter()
        .flat_map_iter(|factors| {
            let group = GroupSpec::new(factors.clone()).unwrap();
            let budget = BigUint::from((group.dim() - group.rank() + 2) as u64);
            let per_factor: Vec<Vec<(Weight, BigUint)>> = factors
                .iter()
                .map(|t| {
                    let rs = root_system(*t);
                    dominant_weights_bounded(&rs, &budget)
                        .into_iter()
                        .filter(|w| w.label_sum() > 0)
                        .map(|w| {
                            let d = weyl_dim_in(&rs, &w);
                            (w, d)
                        })
                        .collect()
                })
                .collect();
            let mut found = Vec::new();
            let mut choice = Vec::new();
            combos(
                &group,
                &per_factor,
                &budget,
                BigUint::from(1u32),
                &mut choice,
                &mut found,
            );
            found
        })
        .collect();
    rows.sort_by_key(|v| v.canonical_key());
    rows.dedup_by_key(|v| v.canonical_key());
    let cat = crate::catalog::bundled();
    for v in rows.iter_mut() {
        cat.annotate(v);
    }
    Ok(rows)
}

fn combos(
    group: &GroupSpec,
    per_factor: &[Vec<(Weight, BigUint)>],
    budget: &BigUint,
    dim: BigUint,
    choice: &mut Vec<Weight>,
    found: &mut Vec<CandidateVerdict>,
) {
    let i = choice.len();
    if i == per_factor.len() {
        let rep = RepExpr::irreducible(choice.clone());
        if summand_fs(group, &rep.summands[0]) != FsType::Quaternionic {
            return;
        }
        let (g, ws) = canonical_order(group, choice);
        let rep = RepExpr::irreducible(ws);
        if let Ok(v) = evaluate_irreducible(&g, &rep) {
            if v.dim_ok && v.weight_ok == Some(true) {
                found.push(v);
            }
        }
        return;
    }
    for (w, d) in &per_factor[i] {
        let next = &dim * d;
        if next > *budget {
            continue;
        }
        choice.push(w.clone());
        combos(group, per_factor, budget, next, choice, found);
        choice.pop();
    }
}

/// Which restricted normal holonomy to compute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HolonomyEntry {
    /// A parallel MTC submanifold given by the module realizing it.
    Parallel { group: GroupSpec, rep: RepExpr },
    /// A non-parallel MTC submanifold of `HP^n`.
    NonParallel { n: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalHolonomy {
    pub description: String,
    pub dim: u64,
}

/// Non-parallel: `U(n)`. Parallel `G/K`: the slice representation of `K^0`,
/// whose dimension is that of the Levi isotropy of the complex lift.
pub fn normal_holonomy(entry: &HolonomyEntry) -> Result<NormalHolonomy> {
    match entry {
        HolonomyEntry::NonParallel { n } => Ok(NormalHolonomy {
            description: format!("U({n})"),
            dim: n * n,
        }),
        HolonomyEntry::Parallel { group, rep } => {
            let v = mtc_report(group, rep)?;
            if !v.orbit.is_mtc {
                return Err(Error::UnknownEntry(format!(
                    "{} is not a parallel MTC orbit",
                    v.label()
                )));
            }
            let levi = &v.orbit.levi;
            Ok(NormalHolonomy {
                description: format!("nu(K0), K0 = {levi}"),
                dim: levi.dim() as u64,
            })
        }
    }
}

/// Distinct weights of a reducible module: the union of the summands'
/// weight sets.
pub fn weight_union(group: &GroupSpec, rep: &RepExpr) -> Result<BTreeSet<Weight>> {
    let mut out = BTreeSet::new();
    for s in &rep.summands {
        let one = RepExpr {
            summands: vec![crate::rep_calc::Summand {
                multiplicity: 1,
                factors: s.factors.clone(),
            }],
        };
        out.extend(tensor_weight_set(group, &one)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::Series::*;

    fn t(s: Series, r: usize) -> SimpleLieType {
        SimpleLieType::new(s, r).unwrap()
    }

    fn fw(rank: usize, node: usize) -> Weight {
        Weight::fundamental(rank, node - 1)
    }

    fn levi(s: &str) -> String {
        s.to_string()
    }

    #[test]
    fn orbit_dims() {
        assert_eq!(complex_orbit_dim(t(C, 3), &fw(3, 3)).unwrap(), 6);
        assert_eq!(complex_orbit_dim(t(E, 7), &fw(7, 7)).unwrap(), 27);
        assert_eq!(complex_orbit_dim(t(A, 1), &Weight(vec![1])).unwrap(), 1);
        assert_eq!(complex_orbit_dim(t(A, 5), &fw(5, 3)).unwrap(), 9);
        assert_eq!(complex_orbit_dim(t(D, 6), &fw(6, 5)).unwrap(), 15);
        assert_eq!(complex_orbit_dim(t(B, 5), &fw(5, 5)).unwrap(), 15);
    }

    #[test]
    fn levis() {
        assert_eq!(
            isotropy_levi(t(C, 3), &fw(3, 3)).unwrap().to_string(),
            levi("A2+T1")
        );
        assert_eq!(
            isotropy_levi(t(A, 5), &fw(5, 3)).unwrap().to_string(),
            levi("A2+A2+T1")
        );
        assert_eq!(
            isotropy_levi(t(D, 6), &fw(6, 5)).unwrap().to_string(),
            levi("A5+T1")
        );
        assert_eq!(
            isotropy_levi(t(E, 7), &fw(7, 7)).unwrap().to_string(),
            levi("E6+T1")
        );
        assert_eq!(
            isotropy_levi(t(E, 7), &fw(7, 1)).unwrap().to_string(),
            levi("D6+T1")
        );
        assert_eq!(
            isotropy_levi(t(E, 8), &fw(8, 8)).unwrap().to_string(),
            levi("E7+T1")
        );
        assert_eq!(
            isotropy_levi(t(E, 8), &fw(8, 1)).unwrap().to_string(),
            levi("D7+T1")
        );
        assert_eq!(
            isotropy_levi(t(E, 6), &fw(6, 1)).unwrap().to_string(),
            levi("D5+T1")
        );
        assert_eq!(
            isotropy_levi(t(F, 4), &fw(4, 1)).unwrap().to_string(),
            levi("C3+T1")
        );
        assert_eq!(
            isotropy_levi(t(F, 4), &fw(4, 4)).unwrap().to_string(),
            levi("B3+T1")
        );
        assert_eq!(
            isotropy_levi(t(B, 4), &fw(4, 1)).unwrap().to_string(),
            levi("B3+T1")
        );
        assert_eq!(
            isotropy_levi(t(B, 3), &fw(3, 1)).unwrap().to_string(),
            levi("C2+T1")
        );
        assert_eq!(
            isotropy_levi(t(C, 4), &fw(4, 1)).unwrap().to_string(),
            levi("C3+T1")
        );
        assert_eq!(
            isotropy_levi(t(D, 5), &fw(5, 1)).unwrap().to_string(),
            levi("D4+T1")
        );
        assert_eq!(
            isotropy_levi(t(D, 5), &fw(5, 2)).unwrap().to_string(),
            levi("A3+A1+T1")
        );
        assert_eq!(
            isotropy_levi(t(G, 2), &fw(2, 1)).unwrap().to_string(),
            levi("A1+T1")
        );
        assert_eq!(
            isotropy_levi(t(A, 3), &Weight::zero(3))
                .unwrap()
                .to_string(),
            levi("A3")
        );
        assert_eq!(
            isotropy_levi(t(A, 1), &Weight(vec![1]))
                .unwrap()
                .to_string(),
            levi("T1")
        );
    }

    #[test]
    fn orbit_plus_levi_roots_is_all_roots() {
        for ty in SimpleLieType::all_up_to_rank(6) {
            let rs = root_system(ty);
            let bound = BigUint::from(u64::MAX);
            let mut checked = 0;
            let mut w = Weight::zero(ty.rank());
            // all label vectors with label sum <= 3
            fn each(i: usize, left: i64, w: &mut Weight, f: &mut dyn FnMut(&Weight)) {
                if i == w.len() {
                    f(w);
                    return;
                }
                for v in 0..=left {
                    w[i] = v;
                    each(i + 1, left - v, w, f);
                }
                w[i] = 0;
            }
            each(0, 3, &mut w, &mut |w: &Weight| {
                let levi = levi_in(&rs, w);
                assert_eq!(
                    orbit_dim_in(&rs, w) + levi.num_positive_roots(),
                    rs.positive_roots().len(),
                    "{ty} {w}"
                );
                assert_eq!(levi.semisimple_rank() + levi.center_rank, ty.rank());
                if w.label_sum() > 0 {
                    assert!(levi.center_rank >= 1);
                }
                checked += 1;
            });
            assert!(checked > 0);
            let _ = bound;
        }
    }

    #[test]
    fn dimension_conditions() {
        assert!(dim_condition_simple(t(A, 5), &fw(5, 3)).unwrap());
        assert!(!dim_condition_simple(t(B, 5), &fw(5, 4)).unwrap());
        assert!(dim_condition_simple(t(A, 1), &Weight(vec![1])).unwrap());
        assert!(su2_factor_condition(t(B, 3), &fw(3, 3)).unwrap());
        assert!(su2_factor_condition(t(G, 2), &fw(2, 1)).unwrap());
        assert!(!su2_factor_condition(t(A, 2), &Weight(vec![1, 1])).unwrap());
        // SO(6) as A3 with its 6-dimensional module
        assert!(su2_factor_condition(t(A, 3), &fw(3, 2)).unwrap());
    }

    #[test]
    fn weight_condition_examples() {
        let a1 = GroupSpec::simple(t(A, 1));
        assert!(weight_condition(&a1, &RepExpr::irreducible(vec![Weight(vec![1])])).unwrap());
        let g = GroupSpec::new(vec![t(D, 4), t(A, 1)]).unwrap();
        let rep = RepExpr::irreducible(vec![fw(4, 1), Weight(vec![1])]);
        assert!(weight_condition(&g, &rep).unwrap());
        let g = GroupSpec::new(vec![t(A, 1); 4]).unwrap();
        let rep = RepExpr::irreducible(vec![Weight(vec![1]); 4]);
        assert!(!weight_condition(&g, &rep).unwrap());
        // Spin(9) x SU(2) on 16 (x) 2 passes the dimension bound but fails here
        let g = GroupSpec::new(vec![t(B, 4), t(A, 1)]).unwrap();
        let rep = RepExpr::irreducible(vec![fw(4, 4), Weight(vec![1])]);
        assert!(su2_factor_condition(t(B, 4), &fw(4, 4)).unwrap());
        assert!(!weight_condition(&g, &rep).unwrap());
    }

    fn spec(k: u32, s: u32, ty: SimpleLieType, w: Weight) -> ReducibleSpec {
        ReducibleSpec::new(k, s, Irrep::simple(ty, w).unwrap()).unwrap()
    }

    #[test]
    fn reducible_cases() {
        let v = classify_reducible(&spec(2, 0, t(C, 3), fw(3, 1)));
        assert_eq!(
            v,
            ReducibleVerdict::Valid {
                identification: "CP^5 = Sp(3)/T1xSp(2) in HP^5".into(),
                ambient_n: 5
            }
        );
        let v = classify_reducible(&spec(0, 1, t(A, 3), fw(3, 1)));
        assert_eq!(
            v,
            ReducibleVerdict::Valid {
                identification: "CP^3 = SU(4)/S(U(1)xU(3)) in HP^3".into(),
                ambient_n: 3
            }
        );
        let v = classify_reducible(&spec(1, 1, t(C, 3), fw(3, 3)));
        assert_eq!(
            v,
            ReducibleVerdict::invalid(ReducibleFailure::MixedSummands)
        );
        let v = classify_reducible(&spec(3, 0, t(C, 3), fw(3, 1)));
        assert_eq!(v, ReducibleVerdict::invalid(ReducibleFailure::KAtMostTwo));
        let v = classify_reducible(&spec(0, 2, t(A, 3), fw(3, 1)));
        assert_eq!(v, ReducibleVerdict::invalid(ReducibleFailure::SAtMostOne));
        let v = classify_reducible(&spec(2, 0, t(C, 3), fw(3, 3)));
        assert_eq!(
            v,
            ReducibleVerdict::invalid(ReducibleFailure::NotTransitive)
        );
        assert!(
            ReducibleSpec::new(0, 0, Irrep::simple(t(A, 1), Weight(vec![1])).unwrap()).is_err()
        );
        assert!(ReducibleSpec::new(2, 0, Irrep::simple(t(A, 3), fw(3, 1)).unwrap()).is_err());
    }

    #[test]
    fn reports() {
        let g = GroupSpec::simple(t(A, 5));
        let v = mtc_report(&g, &RepExpr::irreducible(vec![fw(5, 3)])).unwrap();
        assert!(v.orbit.is_mtc);
        assert_eq!(v.orbit.ambient_n, 9);
        assert_eq!(v.orbit.levi.to_string(), "A2+A2+T1");
        assert!(v.passes());

        // SO(6) x SU(2): dim V = 12, P(V) of dimension 11, HP^5
        let g = GroupSpec::new(vec![t(A, 3), t(A, 1)]).unwrap();
        let v = mtc_report(&g, &RepExpr::irreducible(vec![fw(3, 2), Weight(vec![1])])).unwrap();
        assert!(v.orbit.is_mtc);
        assert_eq!(v.orbit.ambient_n, 5);
        assert_eq!(v.orbit.orbit_dim_c, 5);

        let g = GroupSpec::simple(t(C, 4));
        let v = mtc_report(&g, &RepExpr::irreducible(vec![fw(4, 1)])).unwrap();
        assert!(v.transitive);
        assert!(!v.orbit.is_mtc);
        assert!(v.table_row.is_none());

        let g = GroupSpec::simple(t(A, 5));
        assert!(matches!(
            mtc_report(&g, &RepExpr::irreducible(vec![fw(5, 1)])),
            Err(Error::NotQuaternionic("complex"))
        ));
    }

    #[test]
    fn reducible_reports() {
        let g = GroupSpec::simple(t(A, 4));
        let rep = crate::notation::parse_rep("L1+L1^d", &g, Default::default()).unwrap();
        let v = mtc_report(&g, &rep).unwrap();
        assert!(v.orbit.is_mtc);
        assert_eq!(v.orbit.ambient_n, 4);
        assert_eq!(v.orbit.orbit_dim_c, 4);
        assert!(v.passes());

        let g = GroupSpec::simple(t(C, 3));
        let rep = crate::notation::parse_rep("[1,0,0]+[1,0,0]^d", &g, Default::default()).unwrap();
        let v = mtc_report(&g, &rep).unwrap();
        assert!(v.orbit.is_mtc);
        assert_eq!(v.orbit.ambient_n, 5);

        let g = GroupSpec::simple(t(A, 4));
        let rep = crate::notation::parse_rep("L1+L1", &g, Default::default()).unwrap();
        assert!(matches!(
            mtc_report(&g, &rep),
            Err(Error::NotQuaternionic("complex"))
        ));
    }

    #[test]
    fn holonomy() {
        let nh = normal_holonomy(&HolonomyEntry::NonParallel { n: 5 }).unwrap();
        assert_eq!(nh.dim, 25);
        assert_eq!(nh.description, "U(5)");
        let g = GroupSpec::simple(t(C, 3));
        let nh = normal_holonomy(&HolonomyEntry::Parallel {
            group: g,
            rep: RepExpr::irreducible(vec![fw(3, 3)]),
        })
        .unwrap();
        assert_eq!(nh.dim, 9);
    }
}
