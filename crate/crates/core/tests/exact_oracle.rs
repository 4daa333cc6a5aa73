//! Exact expectations by enumerating every attachment history of small
//! k-trees, weighted by its probability as a product of `1/|store|` factors.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

use ktree_lab::generator::{KTreeProcess, ProcessParams};
use ktree_lab::theory::{attachment_probability, expected_histogram_dp};
use ktree_lab::Exact;

type Dist = BTreeMap<usize, Exact>;

fn enumerate(p: &KTreeProcess, weight: Exact, n: usize, out: &mut BTreeMap<usize, Dist>) {
    let m = p.vertex_count();
    // record E[X_d(m)] contributions at every size along the way
    let at_m = out.entry(m).or_default();
    for &deg in p.degrees() {
        *at_m.entry(deg as usize).or_insert_with(Exact::zero) += weight.clone();
    }
    if m == n {
        return;
    }
    let choices = p.cliques().len();
    let w = weight / Exact::from_integer(BigInt::from(choices));
    for c in 0..choices {
        let mut next = p.clone();
        next.attach(c).unwrap();
        enumerate(&next, w.clone(), n, out);
    }
}

fn brute_force_expectations(k: usize, n: usize) -> BTreeMap<usize, Dist> {
    let p = KTreeProcess::new(ProcessParams { k, n, seed: 0 }).unwrap();
    let mut out = BTreeMap::new();
    enumerate(&p, Exact::one(), n, &mut out);
    out
}

#[test]
fn dp_matches_enumeration_exactly() {
    for (k, n_max) in [(2, 8), (3, 8), (4, 8)] {
        let brute = brute_force_expectations(k, n_max);
        for n in k + 2..=n_max {
            let dp = expected_histogram_dp::<Exact>(k, n, n).unwrap();
            assert!(dp.overflow.is_zero());
            let expected = &brute[&n];
            for d in k..=n {
                let want = expected.get(&d).cloned().unwrap_or_else(Exact::zero);
                assert_eq!(dp.get(d), want, "k={k} n={n} d={d}");
            }
            assert_eq!(dp.total(), Exact::from_integer(BigInt::from(n)));
        }
    }
}

#[test]
fn k2_five_vertices_by_hand() {
    // the 4-vertex diamond has degrees (3, 3, 2, 2) and 5 edges; the one
    // edge between the degree-3 vertices leaves three degree-2 vertices,
    // the other four leave two
    let brute = brute_force_expectations(2, 5);
    let at5 = &brute[&5];
    let r = |a: i64, b: i64| Ratio::new(BigInt::from(a), BigInt::from(b));
    assert_eq!(at5[&2], r(11, 5));
    let total: Exact = at5.values().cloned().sum();
    assert_eq!(total, r(5, 1));
}

#[test]
fn attachment_probability_is_expected_fraction_of_cliques() {
    // the chance that a fixed degree-d vertex is hit equals the fraction of
    // stored cliques containing it, for every reachable configuration
    for k in 2..=4 {
        for n in k + 2..k + 7 {
            let mut p = KTreeProcess::new(ProcessParams { k, n, seed: 0 }).unwrap();
            while p.vertex_count() < n {
                p.attach(p.cliques().len() - 1).unwrap();
            }
            let m = p.vertex_count();
            for v in 0..m {
                let d = p.degree(v);
                let hits = p
                    .cliques()
                    .iter()
                    .filter(|c| c.contains(&(v as u32)))
                    .count();
                let frac = Ratio::new(BigInt::from(hits), BigInt::from(p.cliques().len()));
                assert_eq!(attachment_probability::<Exact>(k, d, m).unwrap(), frac);
            }
        }
    }
}
