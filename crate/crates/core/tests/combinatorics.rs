//! Class counts of dessins and braid orbits against frozen values.

use std::collections::BTreeMap;

use critfilt::constellation::naive::naive_class_counts;
use critfilt::constellation::{
    braid_orbits, dessin_dot, enumerate, enumerate_triples, parse_passport, Constellation, Perm,
};

fn by_genus(d: usize) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for c in enumerate(3, d, 8).unwrap() {
        *out.entry(c.genus().unwrap()).or_insert(0) += 1;
    }
    out
}

#[test]
fn totals_count_subgroups_of_the_free_group() {
    // Conjugacy classes of index-d subgroups of a free group of rank 2.
    let totals = [1usize, 3, 7, 26, 97, 624, 4163, 34470];
    for (i, &want) in totals.iter().enumerate() {
        assert_eq!(enumerate(3, i + 1, 8).unwrap().len(), want, "degree {}", i + 1);
    }
}

#[test]
fn genus_split() {
    let table: [(usize, &[(usize, usize)]); 4] = [
        (3, &[(0, 6), (1, 1)]),
        (4, &[(0, 20), (1, 6)]),
        (5, &[(0, 60), (1, 33), (2, 4)]),
        (6, &[(0, 291), (1, 285), (2, 48)]),
    ];
    for (d, want) in table {
        let want: BTreeMap<usize, usize> = want.iter().copied().collect();
        assert_eq!(by_genus(d), want, "degree {d}");
    }
    assert_eq!(naive_class_counts(3, 4), by_genus(4));
}

#[test]
fn genus_filter() {
    assert_eq!(enumerate_triples(5, Some(2), 8).unwrap().len(), 4);
    assert!(enumerate_triples(3, Some(2), 8).unwrap().is_empty());
}

#[test]
fn sextic_orbit() {
    let pp = parse_passport("2,1,1,1,1;2,1,1,1,1;5,1;5,1", 6).unwrap();
    let orbits = braid_orbits(6, &pp, 6).unwrap();
    let sizes: Vec<usize> = orbits.iter().map(|o| o.size).collect();
    assert_eq!(sizes, vec![60]);
}

#[test]
fn genus_one_cubic_dessin_export() {
    let s = |c: &[&[usize]]| Perm::from_cycles(3, c).unwrap();
    let c = Constellation::new(vec![s(&[&[1, 2, 3]]), s(&[&[1, 2, 3]]), s(&[&[1, 2, 3]])]).unwrap();
    let want = "digraph dessin {
  graph [degree=3, genus=1, faces=\"(1 2 3)\"];
  b1 [shape=circle, style=filled, fillcolor=black, rotation=\"1 2 3\"];
  w1 [shape=circle, rotation=\"1 2 3\"];
  b1 -> w1 [label=\"1\", taillabel=\"1\", headlabel=\"1\"];
  b1 -> w1 [label=\"2\", taillabel=\"2\", headlabel=\"2\"];
  b1 -> w1 [label=\"3\", taillabel=\"3\", headlabel=\"3\"];
}
";
    assert_eq!(dessin_dot(&c).unwrap(), want);
}
