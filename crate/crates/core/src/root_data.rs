//! Root systems of the compact simple types, built from Cartan matrices.
//!
//! Nodes follow Bourbaki numbering. Roots are stored by their coefficients
//! over the simple roots, together with their Dynkin-label image and the
//! coefficients of the corresponding coroot over the simple coroots. Weights
//! are always in Dynkin-label (fundamental weight) coordinates.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::{Deref, DerefMut};
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl Series {
    pub fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

/// A simple type together with its rank, e.g. `C3` or `E7`.
///
/// Ordering is by series then rank, which is what canonical output relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleLieType {
    series: Series,
    rank: usize,
}

impl SimpleLieType {
    /// Validates the rank. `D2` and `D3` are rejected since they alias
    /// `A1xA1` and `A3`.
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let reason = match series {
            Series::A if rank < 1 => Some("A requires rank >= 1"),
            Series::B if rank < 2 => Some("B requires rank >= 2"),
            Series::C if rank < 2 => Some("C requires rank >= 2"),
            Series::D if rank < 4 => Some("D requires rank >= 4 (D2, D3 alias A1xA1, A3)"),
            Series::E if !(6..=8).contains(&rank) => Some("E exists in ranks 6, 7, 8 only"),
            Series::F if rank != 4 => Some("F exists in rank 4 only"),
            Series::G if rank != 2 => Some("G exists in rank 2 only"),
            _ => None,
        };
        match reason {
            Some(reason) => Err(Error::InvalidRank {
                series,
                rank,
                reason,
            }),
            None => Ok(SimpleLieType { series, rank }),
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Types of every series of rank at most `cap`, one per isomorphism
    /// class: `B2` is skipped in favour of `C2`.
    pub fn all_up_to_rank(cap: usize) -> Vec<SimpleLieType> {
        let mut out = Vec::new();
        for rank in 1..=cap {
            for series in [Series::A, Series::B, Series::C, Series::D] {
                if series == Series::B && rank == 2 {
                    continue;
                }
                if let Ok(t) = SimpleLieType::new(series, rank) {
                    out.push(t);
                }
            }
        }
        for (series, rank) in [
            (Series::E, 6),
            (Series::E, 7),
            (Series::E, 8),
            (Series::F, 4),
            (Series::G, 2),
        ] {
            if rank <= cap {
                out.push(SimpleLieType { series, rank });
            }
        }
        out.sort();
        out
    }

    /// Bourbaki Cartan matrix with `a[i][j] = <alpha_j, alpha_i^vee>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.series {
            Series::A | Series::B | Series::C => {
                for i in 1..n {
                    link(i - 1, i);
                }
            }
            Series::D => {
                for i in 1..n - 1 {
                    link(i - 1, i);
                }
                link(n - 3, n - 1);
            }
            Series::E => {
                link(0, 2);
                link(1, 3);
                for i in 3..n {
                    link(i - 1, i);
                }
            }
            Series::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Series::G => link(0, 1),
        }
        match self.series {
            Series::B => a[n - 1][n - 2] = -2,
            Series::C => a[n - 2][n - 1] = -2,
            Series::F => a[2][1] = -2,
            Series::G => a[0][1] = -3,
            _ => {}
        }
        a
    }

    /// Real dimension of the compact group, `n^2 + 2n` for `A_n` and so on.
    pub fn dim(&self) -> usize {
        self.rank + 2 * root_system(*self).positive_roots().len()
    }
}

impl fmt::Display for SimpleLieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

impl Serialize for SimpleLieType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Dynkin-label coordinates of a weight.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The `i`-th fundamental weight (0-based node index).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&l| l >= 0)
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|l| -l).collect())
    }

    pub fn add(&self, other: &[i64]) -> Weight {
        Weight(self.0.iter().zip(other).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &[i64]) -> Weight {
        Weight(self.0.iter().zip(other).map(|(a, b)| a - b).collect())
    }

    pub fn label_sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl Deref for Weight {
    type Target = Vec<i64>;
    fn deref(&self) -> &Vec<i64> {
        &self.0
    }
}

impl DerefMut for Weight {
    fn deref_mut(&mut self) -> &mut Vec<i64> {
        &mut self.0
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

/// A positive root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Coefficients over the simple roots.
    pub coeffs: Vec<i64>,
    /// Dynkin-label image, `A * coeffs`.
    pub labels: Vec<i64>,
    /// Coefficients of the coroot over the simple coroots.
    pub coroot: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// `<w, alpha^vee>`.
    pub fn pair(&self, w: &[i64]) -> i64 {
        self.coroot.iter().zip(w).map(|(c, l)| c * l).sum()
    }

    /// `<delta, alpha^vee>`: the height of the coroot.
    pub fn coheight(&self) -> i64 {
        self.coroot.iter().sum()
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: SimpleLieType,
    cartan: Vec<Vec<i64>>,
    /// Squared lengths of the simple roots in units of the shortest one.
    root_lengths: Vec<i64>,
    positive_roots: Vec<Root>,
    /// `(mu, nu) = mu^T form nu / form_scale`, long roots of squared length 2.
    form: Vec<Vec<i64>>,
    form_scale: i64,
}

impl RootSystem {
    pub fn new(ty: SimpleLieType) -> Self {
        let cartan = ty.cartan_matrix();
        let root_lengths = symmetrizer(&cartan);
        let positive_roots = close_positive_roots(&cartan, &root_lengths);
        let (form, form_scale) = weight_form(&cartan, &root_lengths);
        RootSystem {
            ty,
            cartan,
            root_lengths,
            positive_roots,
            form,
            form_scale,
        }
    }

    pub fn lie_type(&self) -> SimpleLieType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn root_lengths(&self) -> &[i64] {
        &self.root_lengths
    }

    /// Positive roots ordered by height, then by coefficient vector.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn dim(&self) -> usize {
        self.rank() + 2 * self.positive_roots.len()
    }

    /// Label vectors of all roots, positive and negative.
    pub fn root_labels(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        self.positive_roots.iter().flat_map(|r| {
            let neg = r.labels.iter().map(|l| -l).collect();
            [r.labels.clone(), neg]
        })
    }

    /// The Weyl vector `delta` (all labels one).
    pub fn weyl_vector(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    /// `sum over positive alpha of <w, alpha^vee>`, i.e. `<w, 2 delta^vee>`.
    pub fn sum_pos_coroots_pairing(&self, w: &[i64]) -> i64 {
        self.positive_roots.iter().map(|r| r.pair(w)).sum()
    }

    /// Label vector of the simple root `alpha_i`.
    pub fn simple_root_labels(&self, i: usize) -> Vec<i64> {
        self.cartan.iter().map(|row| row[i]).collect()
    }

    /// Simple reflection `s_i` on a weight.
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let m = w[i];
        Weight(
            w.iter()
                .zip(&self.cartan)
                .map(|(l, row)| l - m * row[i])
                .collect(),
        )
    }

    /// Unique dominant element of the Weyl orbit of `w`.
    pub fn dominant_conjugate(&self, w: &Weight) -> Weight {
        let mut w = w.clone();
        while let Some(i) = w.iter().position(|&l| l < 0) {
            w = self.reflect(&w, i);
        }
        w
    }

    /// Weyl-invariant inner product, normalized so long roots have squared
    /// length 2.
    pub fn inner_product(&self, a: &[i64], b: &[i64]) -> Ratio<i64> {
        Ratio::new(self.scaled_inner_product(a, b), self.form_scale)
    }

    /// `form_scale * (a, b)`, always an integer.
    pub(crate) fn scaled_inner_product(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (i, ai) in a.iter().enumerate() {
            if *ai == 0 {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                s += ai * self.form[i][j] * bj;
            }
        }
        s
    }

    pub fn check_weight(&self, w: &[i64]) -> Result<()> {
        if w.len() != self.rank() {
            return Err(Error::LabelCount {
                expected: self.rank(),
                got: w.len(),
            });
        }
        Ok(())
    }
}

/// Shared, lazily built root system for `ty`.
pub fn root_system(ty: SimpleLieType) -> Arc<RootSystem> {
    static CACHE: OnceLock<Mutex<HashMap<SimpleLieType, Arc<RootSystem>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(rs) = cache.lock().unwrap().get(&ty) {
        return rs.clone();
    }
    let rs = Arc::new(RootSystem::new(ty));
    cache.lock().unwrap().entry(ty).or_insert(rs).clone()
}

pub fn build_root_system(ty: SimpleLieType) -> RootSystem {
    RootSystem::new(ty)
}

pub fn dim_g(ty: SimpleLieType) -> usize {
    ty.dim()
}

pub fn dominant_conjugate(ty: SimpleLieType, w: &Weight) -> Result<Weight> {
    let rs = root_system(ty);
    rs.check_weight(w)?;
    Ok(rs.dominant_conjugate(w))
}

/// Integers `e_i` with `e_i a_ij = e_j a_ji`, shortest root scaled to 1.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut e: Vec<Option<Ratio<i64>>> = vec![None; n];
    e[0] = Some(Ratio::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && e[j].is_none() {
                let ei = e[i].unwrap();
                e[j] = Some(ei * cartan[i][j] / cartan[j][i]);
                stack.push(j);
            }
        }
    }
    let e: Vec<Ratio<i64>> = e
        .into_iter()
        .map(|x| x.expect("connected diagram"))
        .collect();
    let min = *e.iter().min().unwrap();
    e.iter()
        .map(|x| {
            let r = x / min;
            assert!(r.is_integer());
            r.to_integer()
        })
        .collect()
}

fn apply_cartan(cartan: &[Vec<i64>], coeffs: &[i64]) -> Vec<i64> {
    cartan
        .iter()
        .map(|row| row.iter().zip(coeffs).map(|(a, c)| a * c).sum())
        .collect()
}

fn make_root(cartan: &[Vec<i64>], lengths: &[i64], coeffs: Vec<i64>) -> Root {
    let labels = apply_cartan(cartan, &coeffs);
    // (alpha, alpha) in units where (alpha_i, alpha_j) = e_i a_ij / 2 ... times 2.
    let norm: i64 = coeffs
        .iter()
        .enumerate()
        .map(|(i, ci)| ci * lengths[i] * labels[i])
        .sum();
    // norm = 2 * e_alpha when (alpha_i, alpha_i) = 2 e_i.
    let e_alpha = norm / 2;
    let coroot = coeffs
        .iter()
        .zip(lengths)
        .map(|(c, e)| {
            debug_assert_eq!((c * e) % e_alpha, 0);
            c * e / e_alpha
        })
        .collect();
    Root {
        coeffs,
        labels,
        coroot,
    }
}

/// Generates the positive roots height by height using root strings: for a
/// root `beta` and simple `alpha_i` with `beta - p alpha_i` the bottom of the
/// string, `beta + alpha_i` is a root iff `p - <beta, alpha_i^vee> > 0`.
fn close_positive_roots(cartan: &[Vec<i64>], lengths: &[i64]) -> Vec<Root> {
    let n = cartan.len();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut c = vec![0; n];
            c[i] = 1;
            c
        })
        .collect();
    let mut all = Vec::new();
    while !layer.is_empty() {
        layer.sort();
        for c in &layer {
            known.insert(c.clone());
        }
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &layer {
            let labels = apply_cartan(cartan, beta);
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - labels[i] > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(layer);
        layer = next;
    }
    let mut roots: Vec<Root> = all
        .into_iter()
        .map(|c| make_root(cartan, lengths, c))
        .collect();
    roots.sort_by(|a, b| (a.height(), &a.coeffs).cmp(&(b.height(), &b.coeffs)));
    roots
}

/// Integer matrix `F` and scale `s` with `(w_i, w_k) = F[i][k] / s` for the
/// fundamental weights, using `(w_i, w_k) = (A^-1)[k][i] * d_k` where
/// `d_k = (alpha_k, alpha_k) / 2`.
fn weight_form(cartan: &[Vec<i64>], lengths: &[i64]) -> (Vec<Vec<i64>>, i64) {
    let n = cartan.len();
    let inv = invert(cartan);
    let emax = *lengths.iter().max().unwrap();
    let mut q = vec![vec![Ratio::<i64>::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            q[i][k] = inv[k][i] * Ratio::new(lengths[k], emax);
        }
    }
    let scale = q.iter().flatten().fold(1i64, |acc, r| lcm(acc, *r.denom()));
    let form = q
        .iter()
        .map(|row| {
            row.iter()
                .map(|r| (r * scale).to_integer())
                .collect::<Vec<_>>()
        })
        .collect();
    (form, scale)
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Ratio<i64>> = row.iter().map(|&x| Ratio::from_integer(x)).collect();
            r.extend((0..n).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

/// An ordered list of simple factors, `G1 x ... x Gs`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupSpec {
    factors: Vec<SimpleLieType>,
}

impl GroupSpec {
    pub fn new(factors: Vec<SimpleLieType>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyGroup);
        }
        Ok(GroupSpec { factors })
    }

    pub fn simple(ty: SimpleLieType) -> Self {
        GroupSpec { factors: vec![ty] }
    }

    pub fn factors(&self) -> &[SimpleLieType] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank()).sum()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim()).sum()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.factors
            .iter()
            .map(|f| root_system(*f).positive_roots().len())
            .sum()
    }

    /// Start offset of each factor inside a concatenated label vector.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = 0;
        self.factors
            .iter()
            .map(|f| {
                let o = off;
                off += f.rank();
                o
            })
            .collect()
    }

    /// Label vectors of every root of the product, in concatenated
    /// coordinates. A root of one factor is zero on all the others.
    pub fn root_labels(&self) -> Vec<Vec<i64>> {
        let total = self.rank();
        let mut out = Vec::new();
        for (f, off) in self.factors.iter().zip(self.offsets()) {
            for r in root_system(*f).root_labels() {
                let mut v = vec![0; total];
                v[off..off + r.len()].copy_from_slice(&r);
                out.push(v);
            }
        }
        out
    }

    /// True when factors are in descending `(series, rank)` order.
    pub fn is_canonical(&self) -> bool {
        self.factors.windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: Series, r: usize) -> SimpleLieType {
        SimpleLieType::new(s, r).unwrap()
    }

    /// Classical closed forms, tabulated independently of the root closure.
    fn closed_form_dim(ty: SimpleLieType) -> usize {
        let n = ty.rank();
        match ty.series() {
            Series::A => n * n + 2 * n,
            Series::B | Series::C => 2 * n * n + n,
            Series::D => 2 * n * n - n,
            Series::E => [78, 133, 248][n - 6],
            Series::F => 52,
            Series::G => 14,
        }
    }

    #[test]
    fn rank_validation() {
        assert!(SimpleLieType::new(Series::A, 0).is_err());
        assert!(SimpleLieType::new(Series::B, 1).is_err());
        assert!(SimpleLieType::new(Series::C, 1).is_err());
        assert!(SimpleLieType::new(Series::D, 2).is_err());
        assert!(SimpleLieType::new(Series::D, 3).is_err());
        assert!(SimpleLieType::new(Series::E, 5).is_err());
        assert!(SimpleLieType::new(Series::E, 9).is_err());
        assert!(SimpleLieType::new(Series::F, 3).is_err());
        assert!(SimpleLieType::new(Series::G, 3).is_err());
        assert!(SimpleLieType::new(Series::D, 4).is_ok());
        assert!(SimpleLieType::new(Series::B, 2).is_ok());
    }

    #[test]
    fn small_examples() {
        let a1 = RootSystem::new(t(Series::A, 1));
        assert_eq!(a1.positive_roots().len(), 1);
        assert_eq!(a1.dim(), 3);
        let g2 = RootSystem::new(t(Series::G, 2));
        assert_eq!(g2.positive_roots().len(), 6);
        assert_eq!(g2.dim(), 14);
        let e7 = RootSystem::new(t(Series::E, 7));
        assert_eq!(e7.positive_roots().len(), 63);
        assert_eq!(e7.dim(), 133);
        assert_eq!(dim_g(t(Series::A, 5)), 35);
        assert_eq!(dim_g(t(Series::C, 3)), 21);
    }

    #[test]
    fn dims_match_closed_forms() {
        for ty in SimpleLieType::all_up_to_rank(12) {
            assert_eq!(ty.dim(), closed_form_dim(ty), "{ty}");
        }
        assert_eq!(t(Series::B, 2).dim(), 10);
    }

    /// Independent closure oracle: saturate the full root set under simple
    /// reflections, starting from the simple roots.
    fn reflection_closure(ty: SimpleLieType) -> HashSet<Vec<i64>> {
        let rs = RootSystem::new(ty);
        let a = rs.cartan_matrix();
        let n = rs.rank();
        let mut set: HashSet<Vec<i64>> = HashSet::new();
        let mut stack: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut c = vec![0; n];
                c[i] = 1;
                c
            })
            .collect();
        while let Some(c) = stack.pop() {
            if !set.insert(c.clone()) {
                continue;
            }
            for i in 0..n {
                let label: i64 = (0..n).map(|j| a[i][j] * c[j]).sum();
                let mut d = c.clone();
                d[i] -= label;
                if !set.contains(&d) {
                    stack.push(d);
                }
            }
        }
        set
    }

    #[test]
    fn closure_matches_reflection_oracle() {
        for ty in SimpleLieType::all_up_to_rank(8) {
            let rs = RootSystem::new(ty);
            let oracle = reflection_closure(ty);
            let pos: HashSet<Vec<i64>> = oracle
                .iter()
                .filter(|c| c.iter().all(|&x| x >= 0))
                .cloned()
                .collect();
            assert_eq!(oracle.len(), 2 * pos.len(), "{ty}");
            let ours: HashSet<Vec<i64>> = rs
                .positive_roots()
                .iter()
                .map(|r| r.coeffs.clone())
                .collect();
            assert_eq!(ours, pos, "{ty}");
        }
    }

    #[test]
    fn closure_is_idempotent() {
        for ty in SimpleLieType::all_up_to_rank(8) {
            let rs = RootSystem::new(ty);
            let a = rs.cartan_matrix();
            let known: HashSet<&Vec<i64>> = rs.positive_roots().iter().map(|r| &r.coeffs).collect();
            for beta in rs.positive_roots() {
                for i in 0..rs.rank() {
                    let mut p = 0;
                    let mut d = beta.coeffs.clone();
                    loop {
                        d[i] -= 1;
                        if known.contains(&d) {
                            p += 1
                        } else {
                            break;
                        }
                    }
                    let q = p - beta.labels[i];
                    let mut up = beta.coeffs.clone();
                    up[i] += 1;
                    assert_eq!(q > 0, known.contains(&up), "{ty} {:?} {i}", beta.coeffs);
                }
            }
            let _ = a;
        }
    }

    #[test]
    fn labels_are_cartan_images_and_ordering_is_canonical() {
        for ty in SimpleLieType::all_up_to_rank(8) {
            let rs = RootSystem::new(ty);
            for r in rs.positive_roots() {
                assert_eq!(r.labels, apply_cartan(rs.cartan_matrix(), &r.coeffs));
                // <alpha, alpha^vee> = 2
                assert_eq!(r.pair(&r.labels), 2);
            }
            let keys: Vec<_> = rs
                .positive_roots()
                .iter()
                .map(|r| (r.height(), r.coeffs.clone()))
                .collect();
            let mut sorted = keys.clone();
            sorted.sort();
            assert_eq!(keys, sorted);
        }
    }

    #[test]
    fn long_roots_have_length_two() {
        for ty in SimpleLieType::all_up_to_rank(8) {
            let rs = RootSystem::new(ty);
            let emax = *rs.root_lengths().iter().max().unwrap();
            for (i, e) in rs.root_lengths().iter().enumerate() {
                let a = rs.simple_root_labels(i);
                let len = rs.inner_product(&a, &a);
                assert_eq!(len, Ratio::new(2 * e, emax), "{ty} node {i}");
            }
        }
    }

    #[test]
    fn dominant_conjugate_examples() {
        let a1 = t(Series::A, 1);
        assert_eq!(
            dominant_conjugate(a1, &Weight(vec![-3])).unwrap(),
            Weight(vec![3])
        );
        let c3 = t(Series::C, 3);
        let w = Weight(vec![1, 0, 2]);
        assert_eq!(dominant_conjugate(c3, &w).unwrap(), w);
    }

    /// Brute-force orbit of a weight under simple reflections.
    fn orbit(rs: &RootSystem, w: &Weight) -> HashSet<Weight> {
        let mut seen = HashSet::new();
        let mut stack = vec![w.clone()];
        while let Some(x) = stack.pop() {
            if seen.insert(x.clone()) {
                for i in 0..rs.rank() {
                    stack.push(rs.reflect(&x, i));
                }
            }
        }
        seen
    }

    #[test]
    fn dominant_conjugate_a2_against_orbit() {
        let rs = RootSystem::new(t(Series::A, 2));
        let w = Weight(vec![-1, 2]);
        let orb = orbit(&rs, &w);
        assert!(orb.len() <= 6);
        let dominant: Vec<_> = orb.iter().filter(|x| x.is_dominant()).collect();
        assert_eq!(dominant.len(), 1);
        assert_eq!(&rs.dominant_conjugate(&w), dominant[0]);
    }

    #[test]
    fn dominant_conjugate_is_weyl_invariant() {
        for ty in SimpleLieType::all_up_to_rank(4) {
            let rs = RootSystem::new(ty);
            let n = rs.rank();
            // every label vector in [-2, 2]^n for small rank
            let total = 5usize.pow(n as u32);
            for code in 0..total.min(625) {
                let mut c = code;
                let w = Weight(
                    (0..n)
                        .map(|_| {
                            let d = (c % 5) as i64 - 2;
                            c /= 5;
                            d
                        })
                        .collect(),
                );
                let d = rs.dominant_conjugate(&w);
                for i in 0..n {
                    assert_eq!(rs.dominant_conjugate(&rs.reflect(&w, i)), d);
                }
            }
        }
    }

    #[test]
    fn product_root_counts_add() {
        let g = GroupSpec::new(vec![t(Series::D, 4), t(Series::A, 1)]).unwrap();
        assert_eq!(g.num_positive_roots(), 12 + 1);
        assert_eq!(g.root_labels().len(), 2 * 13);
        assert_eq!(g.rank(), 5);
        assert_eq!(g.dim(), 28 + 3);
        assert!(g.is_canonical());
        assert!(GroupSpec::new(vec![]).is_err());
    }
}
