use std::fmt::Write;

use crate::error::{Error, Result};

use super::Constellation;

/// A dessin read off a 3-constellation: black vertices are the cycles of
/// `σ₁`, white vertices the cycles of `σ₂`, faces the cycles of `σ₃`, and
/// edge `e` joins the black and white cycles through `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dessin {
    pub degree: usize,
    pub genus: usize,
    /// Cyclic order of edges (1-based) around each black vertex.
    pub black: Vec<Vec<usize>>,
    pub white: Vec<Vec<usize>>,
    pub faces: Vec<Vec<usize>>,
}

impl Dessin {
    pub fn new(c: &Constellation) -> Result<Self> {
        if c.arity() != 3 {
            return Err(Error::WrongArity {
                arity: c.arity(),
                index: 0,
            });
        }
        let one_based = |p: &super::Perm| -> Vec<Vec<usize>> {
            p.cycles()
                .into_iter()
                .map(|cy| cy.into_iter().map(|x| x + 1).collect())
                .collect()
        };
        Ok(Dessin {
            degree: c.degree(),
            genus: c.genus()?,
            black: one_based(&c.perms()[0]),
            white: one_based(&c.perms()[1]),
            faces: one_based(&c.perms()[2]),
        })
    }

    /// `V − E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        (self.black.len() + self.white.len() + self.faces.len()) as i64 - self.degree as i64
    }
}

fn locate(vertices: &[Vec<usize>], e: usize) -> (usize, usize) {
    for (v, rot) in vertices.iter().enumerate() {
        if let Some(i) = rot.iter().position(|&x| x == e) {
            return (v + 1, i + 1);
        }
    }
    unreachable!("edge {e} is on some vertex")
}

fn rotation(r: &[usize]) -> String {
    r.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

/// Graphviz text for a dessin; the layout is specified in
/// `docs/dessin-format.md`.
pub fn dessin_dot(c: &Constellation) -> Result<String> {
    let d = Dessin::new(c)?;
    let mut s = String::new();
    let w = &mut s;
    writeln!(w, "digraph dessin {{").expect("string write");
    writeln!(
        w,
        "  graph [degree={}, genus={}, faces=\"{}\"];",
        d.degree,
        d.genus,
        d.faces.iter().map(|f| format!("({})", rotation(f))).collect::<String>()
    )
    .expect("string write");
    for (i, r) in d.black.iter().enumerate() {
        writeln!(
            w,
            "  b{} [shape=circle, style=filled, fillcolor=black, rotation=\"{}\"];",
            i + 1,
            rotation(r)
        )
        .expect("string write");
    }
    for (i, r) in d.white.iter().enumerate() {
        writeln!(w, "  w{} [shape=circle, rotation=\"{}\"];", i + 1, rotation(r))
            .expect("string write");
    }
    for e in 1..=d.degree {
        let (b, bp) = locate(&d.black, e);
        let (wv, wp) = locate(&d.white, e);
        writeln!(
            w,
            "  b{b} -> w{wv} [label=\"{e}\", taillabel=\"{bp}\", headlabel=\"{wp}\"];"
        )
        .expect("string write");
    }
    writeln!(w, "}}").expect("string write");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constellation::Perm;

    #[test]
    fn single_edge() {
        let c = Constellation::new(vec![Perm::identity(1); 3]).unwrap();
        let d = Dessin::new(&c).unwrap();
        assert_eq!((d.black.len(), d.white.len(), d.faces.len()), (1, 1, 1));
        assert_eq!(
            dessin_dot(&c).unwrap(),
            "digraph dessin {\n  graph [degree=1, genus=0, faces=\"(1)\"];\n  \
             b1 [shape=circle, style=filled, fillcolor=black, rotation=\"1\"];\n  \
             w1 [shape=circle, rotation=\"1\"];\n  \
             b1 -> w1 [label=\"1\", taillabel=\"1\", headlabel=\"1\"];\n}\n"
        );
    }

    #[test]
    fn euler_count() {
        let t = Perm::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        let c = Constellation::new(vec![t.clone(), t.clone(), t]).unwrap();
        let d = Dessin::new(&c).unwrap();
        assert_eq!(d.euler_characteristic(), 0);
        assert_eq!(d.genus, 1);
        let z5 = Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]]).unwrap();
        let star = Constellation::new(vec![z5.clone(), Perm::identity(5), z5.inverse()]).unwrap();
        let d = Dessin::new(&star).unwrap();
        assert_eq!(d.euler_characteristic(), 2);
        assert_eq!(d.white.len(), 5);
    }
}
