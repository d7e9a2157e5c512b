//! Cluster characters of arbitrary objects, Euler characteristics of complete
//! quiver grassmannians, and transport of characters to another orientation.

use crate::error::{Error, Result};
use crate::int::Int;
use crate::laurent::LaurentPoly;
use crate::quiver::{CanonicalModel, DimVec, Quiver};
use crate::reconstruct::reconstruct;
use crate::transjective::{
    label_dim, label_to_point, Frieze, FriezeRing, TransjectiveLabel, ZQPoint, DEFAULT_WINDOW,
};
use crate::tubes::{
    central_shift, chebyshev, dim_quasi_simple, exchange_points, quasi_simple_at, Lambda, RegularIndex,
};
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

/// An object of the cluster category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObjectSpec {
    Transjective(TransjectiveLabel),
    Regular(RegularIndex),
    DirectSum(Vec<ObjectSpec>),
}

impl ObjectSpec {
    /// Indecomposable summands, with nested sums flattened.
    pub fn summands(&self) -> Vec<&ObjectSpec> {
        match self {
            ObjectSpec::DirectSum(parts) => parts.iter().flat_map(|p| p.summands()).collect(),
            other => vec![other],
        }
    }

    pub fn is_module(&self) -> bool {
        self.summands()
            .iter()
            .all(|s| !matches!(s, ObjectSpec::Transjective(TransjectiveLabel::ShiftedProjective(_))))
    }
}

/// How symbolic characters are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Engine {
    /// Mesh recurrence close to the initial slice, modular reconstruction further out.
    #[default]
    Auto,
    /// Exact Laurent arithmetic along the mesh relations.
    Mesh,
    /// Values modulo primes, interpolated on the support predicted by the dimension vector.
    Modular,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Auto => "auto",
            Engine::Mesh => "mesh",
            Engine::Modular => "modular",
        })
    }
}

impl FromStr for Engine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Engine> {
        match s {
            "auto" => Ok(Engine::Auto),
            "mesh" => Ok(Engine::Mesh),
            "modular" => Ok(Engine::Modular),
            _ => Err(Error::Parse(format!("unknown engine '{s}'"))),
        }
    }
}

/// Slices reachable by the auto engine through exact mesh arithmetic.
pub const AUTO_MESH_DEPTH: i64 = 6;

/// Evaluation context for one model: engine choice, window and caches.
pub struct Evaluator<'m> {
    model: &'m CanonicalModel,
    engine: Engine,
    window: i64,
    symbolic: Frieze<LaurentPoly>,
    integer: Frieze<Int>,
    quasi: HashMap<(Lambda, i64), LaurentPoly>,
    points: HashMap<ZQPoint, LaurentPoly>,
}

impl<'m> Evaluator<'m> {
    pub fn new(model: &'m CanonicalModel) -> Self {
        let n = model.n();
        let init = (0..n).map(|i| LaurentPoly::var(n, i)).collect();
        Evaluator {
            model,
            engine: Engine::Auto,
            window: DEFAULT_WINDOW,
            symbolic: Frieze::new(&model.quiver, init),
            integer: Frieze::new(&model.quiver, vec![Int::one(); n]),
            quasi: HashMap::new(),
            points: HashMap::new(),
        }
    }

    pub fn with_engine(mut self, engine: Engine) -> Self {
        self.engine = engine;
        self
    }

    pub fn with_window(mut self, window: i64) -> Self {
        let n = self.model.n();
        let init = (0..n).map(|i| LaurentPoly::var(n, i)).collect();
        self.window = window;
        self.symbolic = Frieze::new(&self.model.quiver, init).with_window(window);
        self.integer = Frieze::new(&self.model.quiver, vec![Int::one(); n]).with_window(window);
        self.quasi.clear();
        self.points.clear();
        self
    }

    pub fn model(&self) -> &'m CanonicalModel {
        self.model
    }

    /// Exact divisions performed by the symbolic frieze so far.
    pub fn mesh_divisions(&self) -> u64 {
        self.symbolic.divisions()
    }

    fn check_window(&self, p: ZQPoint) -> Result<()> {
        if p.n.abs() > self.window {
            return Err(Error::CapExceeded(format!(
                "slice {} lies outside the window |n| <= {}",
                p.n, self.window
            )));
        }
        Ok(())
    }

    fn use_mesh(&self, depth: i64) -> bool {
        match self.engine {
            Engine::Mesh => true,
            Engine::Modular => false,
            Engine::Auto => depth <= AUTO_MESH_DEPTH,
        }
    }

    fn point_char(&mut self, p: ZQPoint) -> Result<LaurentPoly> {
        self.check_window(p)?;
        if p.n == 0 {
            return Ok(LaurentPoly::var(self.model.n(), p.i));
        }
        if let Some(v) = self.points.get(&p) {
            return Ok(v.clone());
        }
        let v = if self.use_mesh(p.n.abs()) {
            self.symbolic.value(p)?
        } else {
            let d = label_dim(self.model, crate::transjective::point_to_label(p)).unwrap();
            reconstruct(&self.model.quiver, &d, self.window, |f| f.value(p))?
        };
        self.points.insert(p, v.clone());
        Ok(v)
    }

    /// `X_{N_λ[k]}`.
    pub fn quasi_simple(&mut self, lambda: Lambda, k: i64) -> Result<LaurentPoly> {
        let model = self.model;
        let tube = *model.tube(lambda)?;
        let k = k.rem_euclid(tube.rank as i64);
        if let Some(v) = self.quasi.get(&(lambda, k)) {
            return Ok(v.clone());
        }
        let j = central_shift(model, &tube, k)?;
        let (b, bp, s) = exchange_points(model, &tube, j)?;
        for p in [b, bp, s] {
            self.check_window(p)?;
        }
        let depth = [b.n, bp.n, s.n].iter().map(|x| x.abs()).max().unwrap();
        let v = if self.use_mesh(depth) {
            quasi_simple_at(model, &tube, j, &mut self.symbolic)?
        } else {
            let d = dim_quasi_simple(model, &tube, k)?;
            reconstruct(&model.quiver, &d, self.window, |f| quasi_simple_at(model, &tube, j, f))?
        };
        self.quasi.insert((lambda, k), v.clone());
        Ok(v)
    }

    /// `X_{N_λ[k]^{(l)}}`.
    pub fn regular(&mut self, idx: RegularIndex) -> Result<LaurentPoly> {
        if idx.l == 0 {
            return Err(Error::InvalidInput("quasi-length must be at least 1".into()));
        }
        let p = self.model.tube(idx.lambda)?.rank as i64;
        let distinct = (idx.l as i64).min(p);
        let mut qs = Vec::with_capacity(distinct as usize);
        for j in 0..distinct {
            qs.push(self.quasi_simple(idx.lambda, idx.k + j)?);
        }
        let vals: Vec<LaurentPoly> = (0..idx.l as usize).map(|j| qs[j % distinct as usize].clone()).collect();
        Ok(chebyshev(&LaurentPoly::one(self.model.n()), &vals))
    }

    /// Cluster character of `obj` in the initial cluster `u`.
    pub fn character(&mut self, obj: &ObjectSpec) -> Result<LaurentPoly> {
        match obj {
            ObjectSpec::Transjective(l) => self.point_char(label_to_point(*l)),
            ObjectSpec::Regular(idx) => self.regular(*idx),
            ObjectSpec::DirectSum(parts) => {
                let mut acc = LaurentPoly::one(self.model.n());
                for p in parts {
                    acc = acc.mul(&self.character(p)?);
                }
                Ok(acc)
            }
        }
    }

    /// The same character evaluated at `u = 1` through the integer frieze.
    pub fn integer_value(&mut self, obj: &ObjectSpec) -> Result<Int> {
        let model = self.model;
        match obj {
            ObjectSpec::Transjective(l) => {
                let p = label_to_point(*l);
                self.check_window(p)?;
                self.integer.value(p)
            }
            ObjectSpec::Regular(idx) => {
                if idx.l == 0 {
                    return Err(Error::InvalidInput("quasi-length must be at least 1".into()));
                }
                let tube = *model.tube(idx.lambda)?;
                let p = tube.rank as i64;
                let mut vals = Vec::with_capacity(idx.l as usize);
                for j in 0..idx.l as i64 {
                    let k = (idx.k + j).rem_euclid(p);
                    let c = central_shift(model, &tube, k)?;
                    vals.push(quasi_simple_at(model, &tube, c, &mut self.integer)?);
                }
                Ok(chebyshev(&Int::one(), &vals))
            }
            ObjectSpec::DirectSum(parts) => {
                let mut acc = Int::one();
                for p in parts {
                    acc = acc.ring_mul(&self.integer_value(p)?);
                }
                Ok(acc)
            }
        }
    }

    /// `χ(Gr(M))`, computed as `ev₁(X_M)` and as the integer frieze value, which must agree.
    pub fn euler_characteristic(&mut self, obj: &ObjectSpec) -> Result<Int> {
        if !obj.is_module() {
            return Err(Error::NotAModule("shifted projectives have no quiver grassmannian".into()));
        }
        let symbolic = self.character(obj)?.eval_ones();
        let direct = self.integer_value(obj)?;
        if symbolic != direct {
            return Err(Error::InternalMismatch(format!(
                "ev1 of the character gives {symbolic}, the integer frieze gives {direct}"
            )));
        }
        Ok(direct)
    }

    pub fn report(&mut self, obj: &ObjectSpec) -> Result<CharacterReport> {
        Ok(CharacterReport::of(self.character(obj)?))
    }
}

/// Summary of a character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterReport {
    pub polynomial: LaurentPoly,
    /// Number of distinct Laurent monomials.
    pub monomial_count: usize,
    /// Number of unit monomials when every coefficient is expanded as a repeated sum, `Σ |c|`.
    pub monomials_with_multiplicity: Int,
    pub denominator_vector: DimVec,
    pub nonneg: bool,
}

impl CharacterReport {
    pub fn of(p: LaurentPoly) -> Self {
        let monomials_with_multiplicity = p.terms().map(|(_, c)| c.abs()).sum();
        let nonneg = p.terms().all(|(_, c)| !c.is_negative());
        CharacterReport {
            monomial_count: p.len(),
            monomials_with_multiplicity,
            denominator_vector: p.denominator_vector().into_iter().map(i64::from).collect(),
            nonneg,
            polynomial: p,
        }
    }
}

/// `X_obj` with the default engine.
pub fn cluster_character(model: &CanonicalModel, obj: &ObjectSpec) -> Result<LaurentPoly> {
    Evaluator::new(model).character(obj)
}

pub fn euler_complete_grassmannian(model: &CanonicalModel, obj: &ObjectSpec) -> Result<Int> {
    Evaluator::new(model).euler_characteristic(obj)
}

pub fn character_report(model: &CanonicalModel, obj: &ObjectSpec) -> Result<CharacterReport> {
    Evaluator::new(model).report(obj)
}

/// A section of `ℤQ′`: one slice index per vertex.
type Section = Vec<i64>;

/// Orientation induced on the underlying graph by a section: `i → k` when the
/// two section points lie on the same slice for a `Q′` arrow `i → k`, and
/// `k → i` when the head lies one slice later.
fn section_arrows(q: &Quiver, s: &Section) -> Option<Vec<(usize, usize)>> {
    let mut out = Vec::with_capacity(q.arrows().len());
    for &(i, k) in q.arrows() {
        match s[k] - s[i] {
            0 => out.push((i, k)),
            1 => out.push((k, i)),
            _ => return None,
        }
    }
    out.sort();
    Some(out)
}

/// Canonical vertex `i` sits at `vertex_map[i]` in `q_prime`.
fn resolve_map(model: &CanonicalModel, q_prime: &Quiver, vertex_map: &[(String, String)]) -> Result<Vec<usize>> {
    let n = model.n();
    if q_prime.len() != n || vertex_map.len() != n {
        return Err(Error::GraphMismatch(format!(
            "{} canonical vertices, {} in the new quiver, {} map entries",
            n,
            q_prime.len(),
            vertex_map.len()
        )));
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for (a, b) in vertex_map {
        let i = model
            .quiver
            .vertex_index(a)
            .ok_or_else(|| Error::GraphMismatch(format!("'{a}' is not a canonical vertex")))?;
        let j = q_prime
            .vertex_index(b)
            .ok_or_else(|| Error::GraphMismatch(format!("'{b}' is not a vertex of the new quiver")))?;
        if map[i] != usize::MAX || used[j] {
            return Err(Error::GraphMismatch(format!("vertex map is not a bijection at '{a}' -> '{b}'")));
        }
        map[i] = j;
        used[j] = true;
    }
    let mut mapped: Vec<(usize, usize)> =
        model.quiver.arrows().iter().map(|&(s, t)| (map[s].min(map[t]), map[s].max(map[t]))).collect();
    mapped.sort();
    if mapped != q_prime.underlying_edges() {
        return Err(Error::GraphMismatch("underlying graphs differ under the vertex map".into()));
    }
    Ok(map)
}

/// Searches sections of `ℤQ′` reachable by moving sinks forward and sources
/// backward until the induced orientation is `target`; breadth first, moves in
/// vertex order.
fn find_section(q: &Quiver, target: &[(usize, usize)], max_depth: usize) -> Option<Section> {
    let n = q.len();
    let start: Section = vec![0; n];
    let mut seen: HashSet<Section> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((s, depth)) = queue.pop_front() {
        let Some(arrows) = section_arrows(q, &s) else { continue };
        if arrows == target {
            return Some(s);
        }
        if depth == max_depth {
            continue;
        }
        for v in 0..n {
            let sink = arrows.iter().all(|&(a, _)| a != v);
            let source = arrows.iter().all(|&(_, b)| b != v);
            for (ok, step) in [(sink, 1), (source, -1)] {
                if !ok {
                    continue;
                }
                let mut t = s.clone();
                t[v] += step;
                if section_arrows(q, &t).is_some() && seen.insert(t.clone()) {
                    queue.push_back((t, depth + 1));
                }
            }
        }
    }
    None
}

fn diameter(q: &Quiver) -> usize {
    let n = q.len();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            q.arrows()
                .iter()
                .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
                .collect()
        })
        .collect();
    let mut best = 0;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        best = best.max(dist.into_iter().filter(|&d| d != usize::MAX).max().unwrap_or(0));
    }
    best
}

/// Images of the initial variables `u_i` in the cluster `x` of `q_prime`,
/// together with the section of `ℤQ′` they sit on.
pub fn reorientation_images(
    model: &CanonicalModel,
    q_prime: &Quiver,
    vertex_map: &[(String, String)],
) -> Result<(Vec<LaurentPoly>, Section)> {
    let map = resolve_map(model, q_prime, vertex_map)?;
    let mut target: Vec<(usize, usize)> = model.quiver.arrows().iter().map(|&(s, t)| (map[s], map[t])).collect();
    target.sort();
    let n = model.n();
    let depth = n * diameter(q_prime).max(1);
    let section = find_section(q_prime, &target, depth).ok_or_else(|| {
        Error::SectionSearchExhausted(format!("no section with the canonical orientation within {depth} moves"))
    })?;
    let init = (0..n).map(|i| LaurentPoly::var(n, i)).collect();
    let mut frieze = Frieze::new(q_prime, init);
    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        let j = map[i];
        images.push(frieze.value(ZQPoint::new(section[j], j))?);
    }
    Ok((images, section))
}

/// `X_obj` rewritten in the initial cluster `x` of another orientation `q_prime`
/// of the same graph; `vertex_map` pairs canonical vertex names with `q_prime` names.
pub fn reorient_character(
    model: &CanonicalModel,
    q_prime: &Quiver,
    vertex_map: &[(String, String)],
    obj: &ObjectSpec,
) -> Result<LaurentPoly> {
    let (images, _) = reorientation_images(model, q_prime, vertex_map)?;
    cluster_character(model, obj)?.substitute_as_fraction(&images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::EuclideanType;

    #[test]
    fn empty_sum_and_initial_variable() {
        let m = CanonicalModel::build(EuclideanType::E6).unwrap();
        assert!(cluster_character(&m, &ObjectSpec::DirectSum(vec![])).unwrap().is_one());
        let u3 = ObjectSpec::Transjective(TransjectiveLabel::ShiftedProjective(2));
        let r = character_report(&m, &u3).unwrap();
        assert_eq!(r.polynomial, LaurentPoly::var(7, 2));
        assert_eq!((r.monomial_count, r.denominator_vector, r.nonneg), (1, vec![0; 7], true));
        assert!(matches!(euler_complete_grassmannian(&m, &u3), Err(Error::NotAModule(_))));
    }

    #[test]
    fn engines_agree_on_e6() {
        let m = CanonicalModel::build(EuclideanType::E6).unwrap();
        let objs = [
            ObjectSpec::Regular(RegularIndex::new(Lambda::Zero, 1, 1)),
            ObjectSpec::Regular(RegularIndex::new(Lambda::One, 2, 2)),
            ObjectSpec::Transjective(TransjectiveLabel::PreInjective(6, 2)),
        ];
        let mut mesh = Evaluator::new(&m).with_engine(Engine::Mesh);
        let mut modular = Evaluator::new(&m).with_engine(Engine::Modular);
        for o in &objs {
            assert_eq!(mesh.character(o).unwrap(), modular.character(o).unwrap());
        }
    }

    #[test]
    fn simple_projective_has_two_subobjects() {
        let m = CanonicalModel::build(EuclideanType::E6).unwrap();
        let p1 = ObjectSpec::Transjective(TransjectiveLabel::PostProjective(0, 0));
        assert_eq!(euler_complete_grassmannian(&m, &p1).unwrap(), Int::from(2));
    }

    #[test]
    fn identity_reorientation() {
        let m = CanonicalModel::build(EuclideanType::D(1)).unwrap();
        let map: Vec<(String, String)> = m.quiver.vertices().iter().map(|v| (v.clone(), v.clone())).collect();
        let obj = ObjectSpec::Transjective(TransjectiveLabel::PostProjective(2, 1));
        assert_eq!(
            reorient_character(&m, &m.quiver, &map, &obj).unwrap(),
            cluster_character(&m, &obj).unwrap()
        );
    }
}
