//! Named example inputs, each stored as a JSON document.

use crate::deltamatroid::{enumerate_deltamatroids, DeltaMatroid};
use crate::error::{Error, Result};
use crate::io;
use crate::matroid::Matroid;
use crate::polyhedra::BnPolytope;
use crate::represent::{circ_uniform_matrix, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    DeltaMatroid,
    Matroid,
    Graph,
    Matrix,
    Polytope,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::DeltaMatroid => "delta-matroid",
            Kind::Matroid => "matroid",
            Kind::Graph => "graph",
            Kind::Matrix => "matrix",
            Kind::Polytope => "polytope",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub kind: Kind,
    pub description: String,
    pub document: String,
}

fn dm(n: usize, sets: &[&[i32]]) -> DeltaMatroid {
    let sets: Vec<Vec<i32>> = sets.iter().map(|s| s.to_vec()).collect();
    DeltaMatroid::from_signed(n, &sets).expect("fixture is a delta-matroid")
}

pub fn dplusminus() -> DeltaMatroid {
    dm(1, &[&[1], &[-1]])
}

pub fn circle() -> DeltaMatroid {
    dm(2, &[&[1, 2], &[-1, -2]])
}

/// Nine feasible sets on [4, 4̄] with no enveloping matroid.
pub fn duchamp() -> DeltaMatroid {
    dm(
        4,
        &[
            &[-1, -2, -3, -4],
            &[-1, -2, -3, 4],
            &[-1, 2, 3, -4],
            &[1, -2, 3, -4],
            &[1, 2, -3, -4],
            &[-1, 2, 3, 4],
            &[1, -2, 3, 4],
            &[1, 2, -3, 4],
            &[1, 2, 3, 4],
        ],
    )
}

fn named_graphs() -> Vec<(&'static str, Graph)> {
    let g = |n, e: &[(usize, usize)]| Graph::new(n, e).expect("fixture graph");
    vec![
        ("path3", Graph::path(3)),
        ("triangle", g(3, &[(1, 2), (1, 3), (2, 3)])),
        ("path4", Graph::path(4)),
        ("star4", g(4, &[(1, 2), (1, 3), (1, 4)])),
        ("cycle4", g(4, &[(1, 2), (2, 3), (3, 4), (1, 4)])),
        ("k4", g(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])),
    ]
}

fn zero_based(g: &Graph) -> Vec<(usize, usize)> {
    g.edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect()
}

fn push(out: &mut Vec<Fixture>, name: impl Into<String>, kind: Kind, description: impl Into<String>, document: String) {
    out.push(Fixture { name: name.into(), kind, description: description.into(), document });
}

pub fn catalog() -> Result<Vec<Fixture>> {
    let mut out = Vec::new();
    let d = Kind::DeltaMatroid;
    push(&mut out, "dplusminus", d, "D± on [1, 1̄]: both singletons feasible", io::write_dm(&dplusminus()));
    push(&mut out, "dplus", d, "D⁺ = {{1}}", io::write_dm(&dm(1, &[&[1]])));
    push(&mut out, "circle", d, "{12, 1̄2̄}", io::write_dm(&circle()));
    push(&mut out, "duchamp", d, "nine-set delta-matroid without an enveloping matroid", io::write_dm(&duchamp()));
    for n in 1..=2 {
        for (k, x) in enumerate_deltamatroids(n)?.iter().enumerate() {
            push(&mut out, format!("dm{n}_{k}"), d, format!("delta-matroid #{k} on n = {n}"), io::write_dm(x));
        }
    }
    for (r, n) in [(1, 6), (2, 8), (3, 10), (7, 20)] {
        let doc = serde_json::to_string_pretty(&io::circ_doc(r, n)).expect("serializable");
        push(&mut out, format!("circ_{r}_{n}"), d, format!("U°_{{{r},{n}}} by generator"), doc);
    }
    for (name, g) in named_graphs() {
        push(&mut out, name, Kind::Graph, format!("graph on {} vertices", g.n), io::write_graph(&g));
    }
    for k in 1..=4 {
        for r in 0..=k {
            let m = Matroid::uniform(r, k)?;
            push(&mut out, format!("uniform_{r}_{k}"), Kind::Matroid, format!("U_{{{r},{k}}}"), io::write_matroid(&m));
        }
    }
    for (name, g) in named_graphs() {
        let m = Matroid::graphic(g.n, &zero_based(&g))?;
        push(&mut out, format!("graphic_{name}"), Kind::Matroid, format!("cycle matroid of {name}"), io::write_matroid(&m));
    }
    let rep = circ_uniform_matrix(1, 3, 0)?;
    push(&mut out, "circ_1_3_matrix", Kind::Matrix, "a B_n representation of U°_{1,3}", io::write_matrix(&rep));
    let polys = [
        ("cube2", BnPolytope::cube(2)?, "the cube □ for n = 2"),
        ("diamond2", BnPolytope::cross_polytope(2)?, "the cross-polytope ◇ in dimension 2"),
        ("permutohedron2", BnPolytope::signed_permutohedron(2)?, "the B_2 permutohedron"),
        ("circle_polytope", BnPolytope::from_deltamatroid(&circle())?, "P of the circle delta-matroid"),
    ];
    for (name, p, desc) in polys {
        push(&mut out, name, Kind::Polytope, desc, io::write_polytope(&p)?);
    }
    Ok(out)
}

pub fn get(name: &str) -> Result<Fixture> {
    if let Some(rest) = name.strip_prefix("u_circ_") {
        let parts: Vec<&str> = rest.split('_').collect();
        if let [r, n] = parts[..] {
            let bad = |_| Error::InvalidArgument(format!("bad fixture name {name}"));
            let (r, n): (usize, usize) = (r.parse().map_err(bad)?, n.parse().map_err(bad)?);
            if r > n {
                return Err(Error::InvalidArgument(format!("U°_{{{r},{n}}} needs r ≤ n")));
            }
            let doc = serde_json::to_string_pretty(&io::circ_doc(r, n)).expect("serializable");
            return Ok(Fixture { name: name.into(), kind: Kind::DeltaMatroid, description: format!("U°_{{{r},{n}}}"), document: doc });
        }
    }
    catalog()?
        .into_iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::InvalidArgument(format!("no fixture named {name}")))
}
