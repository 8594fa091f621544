use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};

use super::{is_transitive, product, Constellation, CycleType, Perm};

pub const DEFAULT_TRIPLE_BUDGET: usize = 8;
pub const DEFAULT_BRAID_BUDGET: usize = 6;

/// `CRITFILT_BUDGET` if set to a positive integer, else `default`.
pub fn budget_from_env(default: usize) -> usize {
    std::env::var("CRITFILT_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&b: &usize| b > 0)
        .unwrap_or(default)
}

/// Partitions of `d`, each weakly decreasing, in reverse lexicographic order.
pub fn partitions(d: usize) -> Vec<CycleType> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<CycleType>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out
}

/// The permutation with consecutive cycles of the given lengths.
pub(crate) fn class_representative(t: &[usize]) -> Perm {
    let d: usize = t.iter().sum();
    let mut img = vec![0u8; d];
    let mut start = 0;
    for &len in t {
        for i in 0..len {
            img[start + i] = (start + (i + 1) % len) as u8;
        }
        start += len;
    }
    Perm::from_raw(img)
}

/// All permutations of `0..d` in lexicographic order of images.
pub(crate) fn all_perms(d: usize) -> Vec<Perm> {
    let mut cur: Vec<u8> = (0..d as u8).collect();
    let mut out = vec![Perm::from_raw(cur.clone())];
    loop {
        let Some(i) = (1..d).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..d).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(Perm::from_raw(cur.clone()));
    }
}

/// All transitive `k`-constellations of degree `d` up to simultaneous
/// conjugation, sorted by canonical key.
///
/// `σ₁` runs over one representative per cycle type, `σ₂, …, σ_{k−1}` over
/// the whole symmetric group, and `σ_k` is forced by the product.
pub fn enumerate(k: usize, d: usize, budget: usize) -> Result<Vec<Constellation>> {
    enumerate_filtered(k, d, budget, &|_| true)
}

fn enumerate_filtered(
    k: usize,
    d: usize,
    budget: usize,
    keep_first: &(dyn Fn(&CycleType) -> bool + Sync),
) -> Result<Vec<Constellation>> {
    if d > budget {
        return Err(Error::BudgetExceeded { degree: d, budget });
    }
    if !(2..=4).contains(&k) || d == 0 {
        return Err(Error::MalformedTuple(format!("k = {k}, d = {d}")));
    }
    let sym = if k > 2 { all_perms(d) } else { Vec::new() };
    let types: Vec<CycleType> = partitions(d).into_iter().filter(|t| keep_first(t)).collect();
    let sets: Vec<BTreeSet<Vec<u8>>> = types
        .par_iter()
        .map(|t| {
            let s1 = class_representative(t);
            let mut keys = BTreeSet::new();
            let mut visit = |mut tuple: Vec<Perm>| {
                let last = product(&tuple).inverse();
                tuple.push(last);
                if is_transitive(&tuple) {
                    keys.insert(Constellation::new_unchecked(tuple).canonical_key());
                }
            };
            match k {
                2 => visit(vec![s1.clone()]),
                3 => {
                    for s2 in &sym {
                        visit(vec![s1.clone(), s2.clone()]);
                    }
                }
                _ => {
                    for s2 in &sym {
                        for s3 in &sym {
                            visit(vec![s1.clone(), s2.clone(), s3.clone()]);
                        }
                    }
                }
            }
            keys
        })
        .collect();
    let all: BTreeSet<Vec<u8>> = sets.into_iter().flatten().collect();
    Ok(all.iter().map(|key| Constellation::from_key(d, key)).collect())
}

/// Belyi dessins of degree `d`, optionally of one genus.
pub fn enumerate_triples(d: usize, genus: Option<usize>, budget: usize) -> Result<Vec<Constellation>> {
    let all = enumerate(3, d, budget)?;
    Ok(match genus {
        None => all,
        Some(g) => all
            .into_iter()
            .filter(|c| c.genus().ok() == Some(g))
            .collect(),
    })
}

/// `"2,1;2,1;2,1;2,1"`: four cycle types separated by `;`.
pub fn parse_passport(spec: &str, d: usize) -> Result<Vec<CycleType>> {
    let mut out = Vec::new();
    for part in spec.split(';') {
        let mut t: CycleType = Vec::new();
        for x in part.split(',') {
            let n: usize = x
                .trim()
                .parse()
                .map_err(|_| Error::MalformedTuple(format!("bad cycle length {x:?}")))?;
            if n == 0 {
                return Err(Error::MalformedTuple("zero cycle length".into()));
            }
            t.push(n);
        }
        t.sort_unstable_by(|a, b| b.cmp(a));
        if t.iter().sum::<usize>() != d {
            return Err(Error::MalformedTuple(format!("{part:?} is not a partition of {d}")));
        }
        out.push(t);
    }
    if out.len() != 4 {
        return Err(Error::MalformedTuple(format!("expected 4 cycle types, got {}", out.len())));
    }
    Ok(out)
}

/// One orbit of the braid action on classes with a given passport.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidOrbit {
    /// Least member by canonical key.
    pub representative: Constellation,
    pub size: usize,
    /// Members counted by their ordered tuple of cycle types.
    pub by_passport: BTreeMap<Vec<CycleType>, usize>,
    pub members: Vec<Constellation>,
}

/// Orbits of `σ₁, σ₂, σ₃` on the classes of transitive 4-constellations
/// whose cycle types form `passport` as a multiset, ordered by
/// representative.
pub fn braid_orbits(d: usize, passport: &[CycleType], budget: usize) -> Result<Vec<BraidOrbit>> {
    if passport.len() != 4 {
        return Err(Error::MalformedTuple(format!("passport of length {}", passport.len())));
    }
    let mut want: Vec<CycleType> = passport.to_vec();
    want.sort();
    let allowed: BTreeSet<CycleType> = want.iter().cloned().collect();
    let classes: Vec<Constellation> =
        enumerate_filtered(4, d, budget, &|t| allowed.contains(t))?
            .into_iter()
            .filter(|c| c.passport_multiset() == want)
            .collect();
    let index: HashMap<Vec<u8>, usize> = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.canonical_key(), i))
        .collect();
    let mut orbit_of = vec![usize::MAX; classes.len()];
    let mut orbits = Vec::new();
    for start in 0..classes.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_of[start] = id;
        let mut members = vec![start];
        let mut head = 0;
        while head < members.len() {
            let c = &classes[members[head]];
            head += 1;
            for i in 1..=3 {
                let next = c.braid_act(i)?.canonical_key();
                let j = index[&next];
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    members.push(j);
                }
            }
        }
        members.sort_unstable();
        let mut by_passport = BTreeMap::new();
        for &m in &members {
            *by_passport.entry(classes[m].cycle_types()).or_insert(0) += 1;
        }
        orbits.push(BraidOrbit {
            representative: classes[members[0]].clone(),
            size: members.len(),
            by_passport,
            members: members.iter().map(|&m| classes[m].clone()).collect(),
        });
    }
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_five() {
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(1), vec![vec![1]]);
        assert_eq!(all_perms(4).len(), 24);
    }

    #[test]
    fn unique_genus_one_cubic() {
        let cls = enumerate_triples(3, Some(1), 8).unwrap();
        assert_eq!(cls.len(), 1);
        assert_eq!(cls[0].cycle_types(), vec![vec![3], vec![3], vec![3]]);
    }

    #[test]
    fn pairs_are_cyclic() {
        for d in 1..=6 {
            let cls = enumerate(2, d, 8).unwrap();
            assert_eq!(cls.len(), 1);
            assert_eq!(cls[0].perms()[0].cycle_type(), vec![d]);
            assert_eq!(cls[0].genus().unwrap(), 0);
        }
    }

    #[test]
    fn budget() {
        assert_eq!(
            enumerate(3, 9, 8).unwrap_err(),
            Error::BudgetExceeded { degree: 9, budget: 8 }
        );
    }

    #[test]
    fn passport_parsing() {
        let p = parse_passport("2,1;1,2;2,1;2,1", 3).unwrap();
        assert_eq!(p[1], vec![2, 1]);
        assert!(parse_passport("2,1;2,1;2,1", 3).is_err());
        assert!(parse_passport("2,2;2,1;2,1;2,1", 3).is_err());
    }

    #[test]
    fn cubic_orbit_is_closed() {
        let pp = parse_passport("2,1;2,1;2,1;2,1", 3).unwrap();
        let orbits = braid_orbits(3, &pp, 6).unwrap();
        let total: usize = orbits.iter().map(|o| o.size).sum();
        assert!(total > 0);
        for o in &orbits {
            for m in &o.members {
                for i in 1..=3 {
                    let next = m.braid_act(i).unwrap().canonical_form();
                    assert!(o.members.contains(&next));
                }
            }
        }
    }
}
