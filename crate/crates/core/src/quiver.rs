//! Quivers, dimension vectors, Cartan and Coxeter matrices, the Euler form and
//! the canonical euclidean models.

use crate::error::{Error, Result};
use crate::linalg::{integer_kernel, IntMatrix};
use crate::tubes::{self, TubeData};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

pub type DimVec = Vec<i64>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<(usize, usize)>,
    index: HashMap<String, usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuiverJson {
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String)>,
}

impl Quiver {
    /// Builds a quiver from vertex names and arrows given by vertex index.
    pub fn new(vertices: Vec<String>, arrows: Vec<(usize, usize)>) -> Result<Quiver> {
        if vertices.is_empty() {
            return Err(Error::InvalidInput("quiver has no vertices".into()));
        }
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate vertex {v}")));
            }
        }
        for &(a, b) in &arrows {
            if a >= vertices.len() || b >= vertices.len() {
                return Err(Error::InvalidInput("arrow endpoint out of range".into()));
            }
            if a == b {
                return Err(Error::InvalidInput(format!("loop at vertex {}", vertices[a])));
            }
        }
        let q = Quiver { vertices, arrows, index };
        q.topological_order()?;
        Ok(q)
    }

    pub fn from_named(vertices: &[&str], arrows: &[(&str, &str)]) -> Result<Quiver> {
        let vs: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let idx: HashMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut arr = Vec::new();
        for (a, b) in arrows {
            let ia = *idx.get(a).ok_or_else(|| Error::InvalidInput(format!("unknown vertex {a}")))?;
            let ib = *idx.get(b).ok_or_else(|| Error::InvalidInput(format!("unknown vertex {b}")))?;
            arr.push((ia, ib));
        }
        Quiver::new(vs, arr)
    }

    pub fn from_json_str(s: &str) -> Result<Quiver> {
        let j: QuiverJson = serde_json::from_str(s)
            .map_err(|e| Error::Parse(format!("quiver file, line {} column {}: {e}", e.line(), e.column())))?;
        let names: Vec<&str> = j.vertices.iter().map(|s| s.as_str()).collect();
        let arrows: Vec<(&str, &str)> = j.arrows.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        Quiver::from_named(&names, &arrows)
    }

    pub fn to_json(&self) -> QuiverJson {
        QuiverJson {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|&(a, b)| (self.vertices[a].clone(), self.vertices[b].clone()))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    /// Sources of arrows ending at `i`, with multiplicity.
    pub fn in_neighbors(&self, i: usize) -> Vec<usize> {
        self.arrows.iter().filter(|a| a.1 == i).map(|a| a.0).collect()
    }

    /// Targets of arrows starting at `i`, with multiplicity.
    pub fn out_neighbors(&self, i: usize) -> Vec<usize> {
        self.arrows.iter().filter(|a| a.0 == i).map(|a| a.1).collect()
    }

    pub fn is_sink(&self, i: usize) -> bool {
        self.arrows.iter().all(|a| a.0 != i)
    }

    pub fn is_source(&self, i: usize) -> bool {
        self.arrows.iter().all(|a| a.1 != i)
    }

    /// Number of arrows `i -> j`.
    pub fn arrow_count(&self, i: usize, j: usize) -> i64 {
        self.arrows.iter().filter(|&&a| a == (i, j)).count() as i64
    }

    /// Vertices ordered so that every arrow goes from an earlier to a later vertex.
    /// Ties are broken by vertex index.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let n = self.len();
        let mut indeg = vec![0usize; n];
        for &(_, b) in &self.arrows {
            indeg[b] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut done = vec![false; n];
        while order.len() < n {
            let Some(v) = (0..n).find(|&v| !done[v] && indeg[v] == 0) else {
                return Err(Error::InvalidInput("quiver has an oriented cycle".into()));
            };
            done[v] = true;
            order.push(v);
            for &(a, b) in &self.arrows {
                if a == v {
                    indeg[b] -= 1;
                }
            }
        }
        Ok(order)
    }

    /// Multiset of unoriented edges `{min, max}` with multiplicity, sorted.
    pub fn underlying_edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self.arrows.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        e.sort();
        e
    }

    pub fn is_tree(&self) -> bool {
        let n = self.len();
        if self.arrows.len() + 1 != n {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.arrows {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Adjacency matrix `A(i, j)` = number of arrows `j -> i`.
    fn adjacency(&self) -> IntMatrix {
        let mut a = IntMatrix::zeros(self.len());
        for &(s, t) in &self.arrows {
            a.set(t, s, a.get(t, s) + 1);
        }
        a
    }
}

/// Cartan matrix: entry `(i, j)` counts paths from `j` to `i`, so column `i`
/// is `dim P_i` and row `i` is `dim I_i`.
pub fn cartan_matrix(q: &Quiver) -> IntMatrix {
    let n = q.len();
    let order = q.topological_order().expect("quiver is acyclic");
    let mut c = IntMatrix::zeros(n);
    // Column j: number of paths from j to each vertex, filled in topological order.
    for j in 0..n {
        let mut paths = vec![0i64; n];
        paths[j] = 1;
        for &v in &order {
            if paths[v] == 0 {
                continue;
            }
            for w in q.out_neighbors(v) {
                paths[w] += paths[v];
            }
        }
        for i in 0..n {
            c.set(i, j, paths[i]);
        }
    }
    c
}

/// Inverse of the Cartan matrix: `I - A` with `A(i, j)` = number of arrows `j -> i`.
pub fn cartan_inverse(q: &Quiver) -> IntMatrix {
    let n = q.len();
    let a = q.adjacency();
    let mut m = IntMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, m.get(i, j) - a.get(i, j));
        }
    }
    m
}

/// `(Φ, Φ⁻¹)` with `Φ = -Cᵀ C⁻¹` and `Φ⁻¹ = -C (C⁻¹)ᵀ`.
pub fn coxeter_matrix(q: &Quiver) -> (IntMatrix, IntMatrix) {
    let c = cartan_matrix(q);
    let ci = cartan_inverse(q);
    let phi = c.transpose().mul(&ci).neg();
    let phi_inv = c.mul(&ci.transpose()).neg();
    (phi, phi_inv)
}

/// `⟨d, e⟩ = Σ d_i e_i − Σ_{i→j} d_i e_j`.
pub fn euler_form(q: &Quiver, d: &[i64], e: &[i64]) -> i64 {
    assert_eq!(d.len(), q.len());
    assert_eq!(e.len(), q.len());
    let diag: i64 = d.iter().zip(e).map(|(a, b)| a * b).sum();
    let off: i64 = q.arrows().iter().map(|&(i, j)| d[i] * e[j]).sum();
    diag - off
}

/// Primitive positive generator of the fixed space of Φ.
pub fn radical_vector(q: &Quiver) -> Result<DimVec> {
    let (phi, _) = coxeter_matrix(q);
    let n = q.len();
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| phi.get(i, j) - if i == j { 1 } else { 0 }).collect())
        .collect();
    let ker = integer_kernel(&rows, n);
    if ker.len() != 1 {
        return Err(Error::InvalidInput(format!(
            "quiver is not euclidean: fixed space of the Coxeter matrix has dimension {}",
            ker.len()
        )));
    }
    let mut v = ker.into_iter().next().unwrap();
    if v.iter().all(|&x| x <= 0) {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    if v.iter().any(|&x| x <= 0) {
        return Err(Error::InvalidInput("quiver is not euclidean: no positive radical generator".into()));
    }
    Ok(v)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum EuclideanType {
    A(usize, usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl EuclideanType {
    pub fn validate(&self) -> Result<()> {
        match *self {
            EuclideanType::A(r, s) if r < 1 || s < 1 => Err(Error::InvalidInput("A:r:s needs r, s >= 1".into())),
            EuclideanType::D(n) if n < 1 => Err(Error::InvalidInput("D:n needs n >= 1".into())),
            _ => Ok(()),
        }
    }

    pub fn all_canonical_test_types() -> Vec<EuclideanType> {
        vec![
            EuclideanType::A(2, 1),
            EuclideanType::A(2, 2),
            EuclideanType::D(1),
            EuclideanType::D(2),
            EuclideanType::D(3),
            EuclideanType::E6,
            EuclideanType::E7,
            EuclideanType::E8,
        ]
    }
}

impl fmt::Display for EuclideanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EuclideanType::A(r, s) => write!(f, "A:{r}:{s}"),
            EuclideanType::D(n) => write!(f, "D:{n}"),
            EuclideanType::E6 => write!(f, "E6"),
            EuclideanType::E7 => write!(f, "E7"),
            EuclideanType::E8 => write!(f, "E8"),
        }
    }
}

impl FromStr for EuclideanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |x: &str| -> Result<usize> {
            x.parse::<usize>().map_err(|_| Error::Parse(format!("bad number {x:?} in type {s:?}")))
        };
        let t = match parts.as_slice() {
            ["A", r, s2] => EuclideanType::A(num(r)?, num(s2)?),
            ["D", n] => EuclideanType::D(num(n)?),
            ["E6"] => EuclideanType::E6,
            ["E7"] => EuclideanType::E7,
            ["E8"] => EuclideanType::E8,
            _ => return Err(Error::Parse(format!("unknown type {s:?}; expected A:r:s, D:n, E6, E7 or E8"))),
        };
        t.validate().map_err(|e| Error::Parse(e.to_string()))?;
        Ok(t)
    }
}

/// Oriented euclidean quiver with its radical vector, matrices and tube table.
#[derive(Clone, Debug)]
pub struct CanonicalModel {
    pub ty: EuclideanType,
    pub quiver: Quiver,
    pub e: usize,
    pub delta: DimVec,
    pub cartan: IntMatrix,
    pub coxeter: IntMatrix,
    pub coxeter_inverse: IntMatrix,
    pub tubes: Vec<TubeData>,
    /// Disagreements between printed tube labels and the labels recognised
    /// from their dimension vectors.
    pub table_notes: Vec<String>,
}

fn canonical_quiver(t: EuclideanType) -> Result<(Quiver, String)> {
    t.validate()?;
    let q = match t {
        EuclideanType::A(r, s) => {
            let n = r + s;
            let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
            let mut arrows = Vec::new();
            for i in 0..r {
                arrows.push((i, i + 1));
            }
            // Counter-clockwise chain 0 -> n-1 -> n-2 -> ... -> r.
            let mut prev = 0;
            for k in 0..s {
                let next = if k + 1 == s { r } else { n - 1 - k };
                arrows.push((prev, next));
                prev = next;
            }
            let q = Quiver::new(names, arrows)?;
            let e = (0..n).find(|&i| q.is_sink(i)).unwrap();
            let en = q.name(e).to_string();
            return Ok((q, en));
        }
        EuclideanType::D(n) => {
            let mut names = vec!["a1".to_string(), "a2".to_string()];
            names.extend((1..=n).map(|i| format!("c{i}")));
            names.push("b1".into());
            names.push("b2".into());
            let c = |i: usize| 1 + i;
            let mut arrows = vec![(0, c(1)), (1, c(1))];
            for i in 1..n {
                arrows.push((c(i), c(i + 1)));
            }
            arrows.push((c(n), n + 2));
            arrows.push((c(n), n + 3));
            return Ok((Quiver::new(names, arrows)?, "b1".into()));
        }
        EuclideanType::E6 => (
            Quiver::from_named(
                &["1", "2", "3", "4", "5", "6", "7"],
                &[("3", "2"), ("2", "1"), ("6", "1"), ("7", "6"), ("5", "4"), ("4", "1")],
            )?,
            "7",
        ),
        EuclideanType::E7 => (
            Quiver::from_named(
                &["1", "2", "3", "4", "5", "6", "7", "8"],
                &[("4", "3"), ("3", "2"), ("2", "1"), ("5", "1"), ("6", "1"), ("7", "6"), ("8", "7")],
            )?,
            "8",
        ),
        EuclideanType::E8 => (
            Quiver::from_named(
                &["1", "2", "3", "4", "5", "6", "7", "8", "9"],
                &[
                    ("3", "2"),
                    ("2", "1"),
                    ("4", "1"),
                    ("5", "1"),
                    ("6", "5"),
                    ("7", "6"),
                    ("8", "7"),
                    ("9", "8"),
                ],
            )?,
            "9",
        ),
    };
    Ok((q.0, q.1.to_string()))
}

impl CanonicalModel {
    pub fn build(t: EuclideanType) -> Result<CanonicalModel> {
        let (quiver, e_name) = canonical_quiver(t)?;
        let e = quiver.vertex_index(&e_name).unwrap();
        let delta = radical_vector(&quiver)?;
        let cartan = cartan_matrix(&quiver);
        let (coxeter, coxeter_inverse) = coxeter_matrix(&quiver);
        let mut model = CanonicalModel {
            ty: t,
            quiver,
            e,
            delta,
            cartan,
            coxeter,
            coxeter_inverse,
            tubes: Vec::new(),
            table_notes: Vec::new(),
        };
        let (tubes, notes) = tubes::tube_table(&model)?;
        model.tubes = tubes;
        model.table_notes = notes;
        Ok(model)
    }

    pub fn n(&self) -> usize {
        self.quiver.len()
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.quiver
            .vertex_index(name)
            .ok_or_else(|| Error::Parse(format!("unknown vertex {name:?} for type {}", self.ty)))
    }

    /// Variable names `u<vertex>` in vertex order.
    pub fn var_names(&self) -> Vec<String> {
        self.quiver.vertices().iter().map(|v| format!("u{v}")).collect()
    }

    pub fn euler(&self, d: &[i64], e: &[i64]) -> i64 {
        euler_form(&self.quiver, d, e)
    }

    /// `⟨δ, d⟩`: negative on postprojectives, positive on preinjectives, zero on regulars.
    pub fn defect(&self, d: &[i64]) -> i64 {
        self.euler(&self.delta, d)
    }

    pub fn dim_projective(&self, i: usize) -> DimVec {
        self.cartan.column(i)
    }

    pub fn dim_injective(&self, i: usize) -> DimVec {
        self.cartan.row(i)
    }

    pub fn dim_simple(&self, i: usize) -> DimVec {
        let mut v = vec![0; self.n()];
        v[i] = 1;
        v
    }

    /// `Φᵏ d` for any integer `k` (negative powers use Φ⁻¹).
    pub fn coxeter_power(&self, k: i64, d: &[i64]) -> DimVec {
        let m = if k >= 0 { &self.coxeter } else { &self.coxeter_inverse };
        let mut v = d.to_vec();
        for _ in 0..k.unsigned_abs() {
            v = m.apply(&v);
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_matrices() {
        let m = CanonicalModel::build(EuclideanType::A(1, 1)).unwrap();
        assert_eq!(m.quiver.arrows(), &[(0, 1), (0, 1)]);
        assert_eq!(m.e, 1);
        assert_eq!(m.cartan, IntMatrix::from_rows(&[vec![1, 0], vec![2, 1]]));
        assert_eq!(m.coxeter, IntMatrix::from_rows(&[vec![3, -2], vec![2, -1]]));
        assert_eq!(m.coxeter.mul(&m.coxeter_inverse), IntMatrix::identity(2));
        assert_eq!(euler_form(&m.quiver, &[1, 0], &[0, 1]), -2);
        assert_eq!(m.delta, vec![1, 1]);
    }

    #[test]
    fn e6_data() {
        let m = CanonicalModel::build(EuclideanType::E6).unwrap();
        assert_eq!(m.delta, vec![3, 2, 1, 2, 1, 2, 1]);
        assert_eq!(m.quiver.name(m.e), "7");
        assert_eq!(m.dim_projective(6), vec![1, 0, 0, 0, 0, 1, 1]);
        assert_eq!(m.dim_projective(0), vec![1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(m.defect(&m.dim_injective(6)), 1);
        assert_eq!(m.coxeter.apply(&m.delta), m.delta);
    }

    #[test]
    fn canonical_shapes() {
        let a = CanonicalModel::build(EuclideanType::A(2, 1)).unwrap();
        assert_eq!(a.quiver.arrows(), &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(a.quiver.name(a.e), "2");
        let a = CanonicalModel::build(EuclideanType::A(2, 3)).unwrap();
        assert_eq!(a.quiver.arrows(), &[(0, 1), (1, 2), (0, 4), (4, 3), (3, 2)]);
        let d = CanonicalModel::build(EuclideanType::D(1)).unwrap();
        assert_eq!(d.delta, vec![1, 1, 2, 1, 1]);
        assert_eq!(d.quiver.name(d.e), "b1");
        assert_eq!(CanonicalModel::build(EuclideanType::E7).unwrap().delta, vec![4, 3, 2, 1, 2, 3, 2, 1]);
        assert_eq!(CanonicalModel::build(EuclideanType::E8).unwrap().delta, vec![6, 4, 2, 3, 5, 4, 3, 2, 1]);
    }

    #[test]
    fn dynkin_is_rejected() {
        let q = Quiver::from_named(&["1", "2"], &[("1", "2")]).unwrap();
        assert!(radical_vector(&q).is_err());
        assert!(Quiver::from_named(&["1", "2"], &[("1", "2"), ("2", "1")]).is_err());
        assert!(Quiver::from_named(&["1"], &[("1", "1")]).is_err());
    }

    #[test]
    fn type_grammar() {
        assert_eq!("A:2:1".parse::<EuclideanType>().unwrap(), EuclideanType::A(2, 1));
        assert_eq!("D:3".parse::<EuclideanType>().unwrap(), EuclideanType::D(3));
        assert!("A:0:1".parse::<EuclideanType>().is_err());
        assert!("F4".parse::<EuclideanType>().is_err());
        assert_eq!(EuclideanType::E7.to_string(), "E7");
    }

    #[test]
    fn quiver_json() {
        let q = Quiver::from_json_str(r#"{"vertices":["a","b"],"arrows":[["a","b"],["a","b"]]}"#).unwrap();
        assert_eq!(q.arrow_count(0, 1), 2);
        let err = Quiver::from_json_str(r#"{"vertices":["a","b"], "arrows": [["a"]]}"#).unwrap_err();
        assert!(matches!(err, Error::Parse(ref s) if s.contains("line 1")));
        assert!(Quiver::from_json_str(r#"{"vertices":["a","b"],"arrows":[["a","b"],["b","a"]]}"#).is_err());
    }
}
