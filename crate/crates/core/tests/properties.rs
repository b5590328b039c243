use std::collections::BTreeSet;

use mtc_core::catalog::bundled;
use mtc_core::classify::{
    classify_reducible, enumerate_case1, enumerate_case2, weight_condition, ReducibleSpec,
};
use mtc_core::rep_calc::{
    dual_weight, effective_weights, freudenthal_multiplicities, fs_type, weight_set, weyl_dim,
    FsType, Irrep, RepExpr,
};
use mtc_core::root_data::{root_system, GroupSpec, Series, SimpleLieType, Weight};
use num_bigint::BigUint;
use proptest::prelude::*;

fn small_types() -> Vec<SimpleLieType> {
    SimpleLieType::all_up_to_rank(4)
}

fn dominant(max_sum: i64) -> impl Strategy<Value = (SimpleLieType, Weight)> {
    prop::sample::select(small_types()).prop_flat_map(move |ty| {
        prop::collection::vec(0..=max_sum, ty.rank())
            .prop_filter("label sum bound", move |v| v.iter().sum::<i64>() <= max_sum)
            .prop_map(move |v| (ty, Weight(v)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn freudenthal_sums_to_weyl_dim((ty, w) in dominant(4)) {
        let total: u64 = freudenthal_multiplicities(ty, &w).unwrap().values().sum();
        prop_assert_eq!(BigUint::from(total), weyl_dim(ty, &w).unwrap());
    }

    #[test]
    fn weight_sets_are_weyl_closed((ty, w) in dominant(3)) {
        let set = weight_set(ty, &w).unwrap();
        let rs = root_system(ty);
        for mu in &set {
            for i in 0..ty.rank() {
                prop_assert!(set.contains(&rs.reflect(mu, i)));
            }
        }
    }

    #[test]
    fn dual_is_an_involution((ty, w) in dominant(4)) {
        let d = dual_weight(ty, &w).unwrap();
        prop_assert_eq!(dual_weight(ty, &d).unwrap(), w.clone());
        prop_assert_eq!(weyl_dim(ty, &d).unwrap(), weyl_dim(ty, &w).unwrap());
    }

    #[test]
    fn weyl_dim_strictly_increases((ty, w) in dominant(3), node in 0usize..4) {
        let i = node % ty.rank();
        let mut up = w.clone();
        up[i] += 1;
        prop_assert!(weyl_dim(ty, &up).unwrap() > weyl_dim(ty, &w).unwrap());
    }
}

#[test]
fn classical_fs_families() {
    for rank in 1..=12 {
        let w = Weight::fundamental(rank, 0);
        if let Ok(c) = SimpleLieType::new(Series::C, rank) {
            if rank >= 2 {
                assert_eq!(fs_type(c, &w).unwrap(), FsType::Quaternionic, "C{rank}");
            }
        }
        for s in [Series::B, Series::D] {
            if let Ok(t) = SimpleLieType::new(s, rank) {
                assert_eq!(fs_type(t, &w).unwrap(), FsType::Real, "{t}");
            }
        }
        if rank >= 2 {
            let a = SimpleLieType::new(Series::A, rank).unwrap();
            assert_eq!(fs_type(a, &w).unwrap(), FsType::Complex, "A{rank}");
        }
    }
}

/// Multiplicities for every catalog module sum to its dimension.
#[test]
fn catalog_modules_freudenthal() {
    let cat = bundled();
    let mut seen = BTreeSet::new();
    let c = cat.convention;
    let mut instances = Vec::new();
    for r in &cat.wolf {
        instances.extend(r.source.instances(&r.key, c, 8).unwrap());
    }
    for r in &cat.simple {
        instances.extend(r.source.instances(&r.key, c, 8).unwrap());
    }
    for r in &cat.nonsimple {
        instances.extend(r.source.instances(&r.key, c, 8).unwrap());
    }
    for r in &cat.parallel {
        instances.extend(r.source.instances(&r.key, c, 8).unwrap());
    }
    for inst in instances {
        for s in &inst.rep.summands {
            for (ty, w) in inst
                .group
                .factors()
                .iter()
                .zip(effective_weights(&inst.group, s))
            {
                if !seen.insert((*ty, w.clone())) {
                    continue;
                }
                let total: u64 = freudenthal_multiplicities(*ty, &w).unwrap().values().sum();
                assert_eq!(BigUint::from(total), weyl_dim(*ty, &w).unwrap(), "{ty} {w}");
            }
        }
    }
    assert!(seen.len() >= 10);
}

#[test]
fn searches_grow_with_the_cap() {
    let mut prev1 = enumerate_case1(2).unwrap();
    let mut prev2 = enumerate_case2(2).unwrap();
    for cap in 3..=12 {
        let next1 = enumerate_case1(cap).unwrap();
        let next2 = enumerate_case2(cap).unwrap();
        for v in &prev1 {
            assert!(
                next1.iter().any(|x| x.canonical_key() == v.canonical_key()),
                "{}",
                v.label()
            );
        }
        for v in &prev2 {
            assert!(
                next2.iter().any(|x| x.canonical_key() == v.canonical_key()),
                "{}",
                v.label()
            );
        }
        prev1 = next1;
        prev2 = next2;
    }
}

#[test]
fn weight_condition_is_dual_invariant() {
    let mut rows = enumerate_case1(12).unwrap();
    rows.extend(enumerate_case2(12).unwrap());
    for v in rows {
        let weights = effective_weights(&v.group, &v.rep.summands[0]);
        let duals: Vec<Weight> = v
            .group
            .factors()
            .iter()
            .zip(&weights)
            .map(|(t, w)| dual_weight(*t, w).unwrap())
            .collect();
        let a = weight_condition(&v.group, &RepExpr::irreducible(weights)).unwrap();
        let b = weight_condition(&v.group, &RepExpr::irreducible(duals)).unwrap();
        assert_eq!(a, b, "{}", v.label());
    }
}

/// No valid verdict exceeds the estimate `k dim V1 + 2 s dim W <= 2 dim`.
#[test]
fn reducible_estimate_guard() {
    let mut bases = Vec::new();
    for ty in SimpleLieType::all_up_to_rank(4) {
        for i in 0..ty.rank() {
            for c in 1..=2 {
                let mut w = Weight::zero(ty.rank());
                w[i] = c;
                bases.push(Irrep::simple(ty, w).unwrap());
            }
        }
    }
    let g = GroupSpec::new(vec![SimpleLieType::new(Series::A, 1).unwrap(); 2]).unwrap();
    bases.push(Irrep::new(g, Weight(vec![1, 1])).unwrap());
    let mut valid = 0;
    for base in &bases {
        for k in 0..=4 {
            for s in 0..=3 {
                let Ok(spec) = ReducibleSpec::new(k, s, base.clone()) else {
                    continue;
                };
                let v = classify_reducible(&spec);
                if v.is_valid() {
                    valid += 1;
                    assert!(spec.total_dim() <= base.dim() * 2u32, "{k} {s} {:?}", base);
                }
            }
        }
    }
    assert!(valid > 0);
}
