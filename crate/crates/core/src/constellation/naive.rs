//! Exhaustive reference implementations, independent of the breadth-first
//! canonical form. Only usable for small degrees.

use std::collections::{BTreeMap, BTreeSet};

use super::enumerate::all_perms;
use super::{is_transitive, product, Constellation, CycleType, Perm};

/// Least image encoding over all `d!` simultaneous conjugations.
pub fn naive_key(c: &Constellation) -> Vec<u8> {
    all_perms(c.degree())
        .iter()
        .map(|pi| {
            c.conjugate_by(pi)
                .perms()
                .iter()
                .flat_map(|p| p.images().to_vec())
                .collect::<Vec<u8>>()
        })
        .min()
        .expect("nonempty symmetric group")
}

/// Every transitive tuple with product one, not reduced by conjugation.
pub fn raw_tuples(k: usize, d: usize) -> Vec<Constellation> {
    let sym = all_perms(d);
    let mut out = Vec::new();
    let mut prefix: Vec<Vec<Perm>> = vec![Vec::new()];
    for _ in 0..k - 1 {
        prefix = prefix
            .into_iter()
            .flat_map(|p| {
                sym.iter().map(move |s| {
                    let mut q = p.clone();
                    q.push(s.clone());
                    q
                })
            })
            .collect();
    }
    for mut t in prefix {
        t.push(product(&t).inverse());
        if is_transitive(&t) {
            out.push(Constellation::new_unchecked(t));
        }
    }
    out
}

/// Number of conjugacy classes of transitive `k`-tuples by genus.
pub fn naive_class_counts(k: usize, d: usize) -> BTreeMap<usize, usize> {
    let keys: BTreeSet<(usize, Vec<u8>)> = raw_tuples(k, d)
        .iter()
        .map(|c| (c.genus().expect("valid tuple"), naive_key(c)))
        .collect();
    let mut out = BTreeMap::new();
    for (g, _) in keys {
        *out.entry(g).or_insert(0) += 1;
    }
    out
}

/// Braid orbits by closure over raw tuples, each reported as the sorted
/// set of classes (by [`naive_key`]) it meets; the list is sorted.
pub fn naive_braid_orbits(d: usize, passport: &[CycleType]) -> Vec<Vec<Vec<u8>>> {
    let mut want = passport.to_vec();
    want.sort();
    let tuples: Vec<Constellation> = raw_tuples(4, d)
        .into_iter()
        .filter(|c| c.passport_multiset() == want)
        .collect();
    let all: BTreeSet<Constellation> = tuples.iter().cloned().collect();
    let mut seen: BTreeSet<Constellation> = BTreeSet::new();
    let mut orbits = Vec::new();
    for t in &all {
        if seen.contains(t) {
            continue;
        }
        let mut queue = vec![t.clone()];
        seen.insert(t.clone());
        let mut classes = BTreeSet::new();
        while let Some(c) = queue.pop() {
            classes.insert(naive_key(&c));
            for i in 1..=3 {
                for n in [c.braid_act(i).expect("arity 4"), c.braid_act_inverse(i).expect("arity 4")] {
                    if seen.insert(n.clone()) {
                        queue.push(n);
                    }
                }
            }
        }
        orbits.push(classes.into_iter().collect::<Vec<_>>());
    }
    orbits.sort();
    orbits.dedup();
    orbits
}
