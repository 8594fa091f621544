//! Permutation tuples with product one: the combinatorial side of Belyi
//! (three branch points) and Fried (four branch points) covers.
//!
//! Points are `0..d` internally and `1..=d` in every printed form. Products
//! read left to right: `στ` applies `σ` first.

mod dessin;
mod enumerate;
pub mod naive;

pub use dessin::{dessin_dot, Dessin};
pub use enumerate::{
    braid_orbits, budget_from_env, enumerate, enumerate_triples, parse_passport, partitions,
    BraidOrbit,
    DEFAULT_BRAID_BUDGET, DEFAULT_TRIPLE_BUDGET,
};

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `0..d` stored by images.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    img: Vec<u8>,
}

/// Weakly decreasing cycle lengths.
pub type CycleType = Vec<usize>;

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm {
            img: (0..d as u8).collect(),
        }
    }

    /// From 0-based images; errors unless a bijection of `0..d`.
    pub fn from_images(img: Vec<usize>) -> Result<Self> {
        let d = img.len();
        if d > 255 {
            return Err(Error::MalformedTuple(format!("degree {d} too large")));
        }
        let mut seen = vec![false; d];
        for &x in &img {
            if x >= d || seen[x] {
                return Err(Error::MalformedTuple(format!("{img:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Perm {
            img: img.into_iter().map(|x| x as u8).collect(),
        })
    }

    /// From 1-based cycles; unlisted points are fixed.
    pub fn from_cycles(d: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut img: Vec<usize> = (0..d).collect();
        let mut used = vec![false; d];
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                if x == 0 || x > d || used[x - 1] {
                    return Err(Error::MalformedTuple(format!("bad cycle {c:?}")));
                }
                used[x - 1] = true;
                img[x - 1] = c[(i + 1) % c.len()] - 1;
            }
        }
        Perm::from_images(img)
    }

    pub(crate) fn from_raw(img: Vec<u8>) -> Self {
        Perm { img }
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.img[x] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.img
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm {
            img: self.img.iter().map(|&x| other.img[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u8; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x as usize] = i as u8;
        }
        Perm { img }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Cycles in order of their least element, each starting there.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.img.len();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for s in 0..d {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.apply(s);
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// `π⁻¹ σ π`, i.e. relabel every point `x` as `π(x)`.
    pub fn conjugate_by(&self, pi: &Perm) -> Perm {
        pi.inverse().then(self).then(pi)
    }
}

/// Cycle notation on `1..=d`; fixed points are omitted, `()` is the identity.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles() {
            if c.len() > 1 {
                any = true;
                let s: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
                write!(f, "({})", s.join(" "))?;
            }
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

/// A transitive tuple `(σ₁, …, σ_k)`, `k ∈ {2, 3, 4}`, with
/// `σ₁σ₂⋯σ_k = 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Constellation {
    perms: Vec<Perm>,
}

pub(crate) fn is_transitive(perms: &[Perm]) -> bool {
    let d = perms[0].degree();
    let mut seen = vec![false; d];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for p in perms {
            let y = p.apply(x);
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == d
}

pub(crate) fn product(perms: &[Perm]) -> Perm {
    perms[1..].iter().fold(perms[0].clone(), |acc, p| acc.then(p))
}

impl Constellation {
    pub fn new(perms: Vec<Perm>) -> Result<Self> {
        let k = perms.len();
        if !(2..=4).contains(&k) {
            return Err(Error::MalformedTuple(format!("tuple length {k}")));
        }
        let d = perms[0].degree();
        if d == 0 || perms.iter().any(|p| p.degree() != d) {
            return Err(Error::MalformedTuple("degrees differ or are zero".into()));
        }
        if !product(&perms).is_identity() {
            return Err(Error::MalformedTuple("product is not the identity".into()));
        }
        if !is_transitive(&perms) {
            return Err(Error::MalformedTuple("group is not transitive".into()));
        }
        let c = Constellation { perms };
        c.genus()?;
        Ok(c)
    }

    pub(crate) fn new_unchecked(perms: Vec<Perm>) -> Self {
        Constellation { perms }
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn degree(&self) -> usize {
        self.perms[0].degree()
    }

    pub fn arity(&self) -> usize {
        self.perms.len()
    }

    pub fn cycle_types(&self) -> Vec<CycleType> {
        self.perms.iter().map(Perm::cycle_type).collect()
    }

    /// Sorted cycle types, i.e. the passport as a multiset.
    pub fn passport_multiset(&self) -> Vec<CycleType> {
        let mut t = self.cycle_types();
        t.sort();
        t
    }

    /// From `2 − 2g = Σ cycles(σᵢ) − (k − 2)d`.
    pub fn genus(&self) -> Result<usize> {
        let d = self.degree() as i64;
        let k = self.arity() as i64;
        let cycles: i64 = self.perms.iter().map(|p| p.cycles().len() as i64).sum();
        let chi = cycles - (k - 2) * d;
        if chi > 2 || chi % 2 != 0 {
            return Err(Error::MalformedTuple(format!("Euler characteristic {chi}")));
        }
        Ok(((2 - chi) / 2) as usize)
    }

    /// Relabels points in breadth-first order from `start`, following
    /// `σ₁, …, σ_k` in turn; returns the images of the relabeled tuple.
    fn relabeled(&self, start: usize) -> Vec<u8> {
        let d = self.degree();
        let mut label = vec![u8::MAX; d];
        let mut order = Vec::with_capacity(d);
        label[start] = 0;
        order.push(start);
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for p in &self.perms {
                let y = p.apply(x);
                if label[y] == u8::MAX {
                    label[y] = order.len() as u8;
                    order.push(y);
                }
            }
        }
        let mut out = Vec::with_capacity(d * self.arity());
        for p in &self.perms {
            for &x in &order {
                out.push(label[p.apply(x)]);
            }
        }
        out
    }

    /// Least relabeling over all starting points. Any conjugator sends the
    /// breadth-first order from `s` to the one from `π(s)`, so two tuples
    /// are simultaneously conjugate iff their keys agree.
    pub fn canonical_key(&self) -> Vec<u8> {
        (0..self.degree())
            .map(|s| self.relabeled(s))
            .min()
            .expect("degree at least 1")
    }

    pub fn canonical_form(&self) -> Constellation {
        Self::from_key(self.degree(), &self.canonical_key())
    }

    pub(crate) fn from_key(d: usize, key: &[u8]) -> Constellation {
        Constellation {
            perms: key.chunks(d).map(|c| Perm::from_raw(c.to_vec())).collect(),
        }
    }

    pub fn conjugate_by(&self, pi: &Perm) -> Constellation {
        Constellation {
            perms: self.perms.iter().map(|p| p.conjugate_by(pi)).collect(),
        }
    }

    /// `(…, σᵢ, σᵢ₊₁, …) ↦ (…, σᵢσᵢ₊₁σᵢ⁻¹, σᵢ, …)` for `i` in `1..=3`.
    pub fn braid_act(&self, i: usize) -> Result<Constellation> {
        if self.arity() != 4 || !(1..=3).contains(&i) {
            return Err(Error::WrongArity {
                arity: self.arity(),
                index: i,
            });
        }
        let (a, b) = (&self.perms[i - 1], &self.perms[i]);
        let mut perms = self.perms.clone();
        perms[i - 1] = a.then(b).then(&a.inverse());
        perms[i] = a.clone();
        Ok(Constellation { perms })
    }

    /// Inverse of [`Constellation::braid_act`]: `(a, b) ↦ (b, b⁻¹ab)`.
    pub fn braid_act_inverse(&self, i: usize) -> Result<Constellation> {
        if self.arity() != 4 || !(1..=3).contains(&i) {
            return Err(Error::WrongArity {
                arity: self.arity(),
                index: i,
            });
        }
        let (a, b) = (&self.perms[i - 1], &self.perms[i]);
        let mut perms = self.perms.clone();
        perms[i - 1] = b.clone();
        perms[i] = b.inverse().then(a).then(b);
        Ok(Constellation { perms })
    }
}

impl fmt::Display for Constellation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.perms.iter().map(Perm::to_string).collect();
        write!(f, "[{}]", s.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(d: usize, tuple: &[&[&[usize]]]) -> Constellation {
        Constellation::new(tuple.iter().map(|cy| Perm::from_cycles(d, cy).unwrap()).collect())
            .unwrap()
    }

    #[test]
    fn genus_examples() {
        let t = c(3, &[&[&[1, 2, 3]], &[&[1, 2, 3]], &[&[1, 2, 3]]]);
        assert_eq!(t.genus().unwrap(), 1);
        let one = Constellation::new(vec![Perm::identity(1); 3]).unwrap();
        assert_eq!(one.genus().unwrap(), 0);
        let z4 = c(4, &[&[&[1, 2, 3, 4]], &[&[1, 4, 3, 2]], &[]]);
        assert_eq!(z4.genus().unwrap(), 0);
    }

    #[test]
    fn malformed() {
        let p = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        assert!(Constellation::new(vec![p.clone(), p.clone(), p]).is_err());
        assert!(Perm::from_images(vec![0, 0]).is_err());
        let id = Perm::identity(2);
        assert!(Constellation::new(vec![id.clone(), id.clone(), id]).is_err());
    }

    #[test]
    fn inverse_three_cycles_are_conjugate() {
        let a = c(3, &[&[&[1, 2, 3]], &[&[1, 2, 3]], &[&[1, 2, 3]]]);
        let b = c(3, &[&[&[1, 3, 2]], &[&[1, 3, 2]], &[&[1, 3, 2]]]);
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert_eq!(a.canonical_form().canonical_form(), a.canonical_form());
    }

    #[test]
    fn braid_round_trip() {
        let t = c(3, &[&[&[1, 2]], &[&[1, 2]], &[&[2, 3]], &[&[2, 3]]]);
        for i in 1..=3 {
            let b = t.braid_act(i).unwrap();
            assert_eq!(b.braid_act_inverse(i).unwrap(), t);
            assert!(product(b.perms()).is_identity());
            assert_eq!(b.genus().unwrap(), t.genus().unwrap());
            assert_eq!(b.passport_multiset(), t.passport_multiset());
        }
        assert!(matches!(t.braid_act(4), Err(Error::WrongArity { .. })));
    }

    #[test]
    fn display() {
        let p = Perm::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap();
        assert_eq!(p.to_string(), "(1 3)(2 4)");
        assert_eq!(Perm::identity(2).to_string(), "()");
        assert_eq!(p.cycle_type(), vec![2, 2]);
    }
}
