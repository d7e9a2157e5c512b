//! The transjective component `ℤQ`: coordinates, object labels, recognition of
//! transjective dimension vectors and the mesh recurrence.
//!
//! The point `(n, i)` carries `τ⁻ⁿ(P_i[1])`, so `(0, i) = P_i[1]`,
//! `(m + 1, i) = τ⁻ᵐP_i` and `(-(m + 1), i) = τᵐI_i`. Since `[1] = τ`, the
//! shift `[k]` sends `(n, i)` to `(n - k, i)`.

use crate::error::{Error, Result};
use crate::int::Int;
use crate::laurent::LaurentPoly;
use crate::quiver::{CanonicalModel, DimVec, Quiver};
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ZQPoint {
    pub n: i64,
    pub i: usize,
}

impl ZQPoint {
    pub fn new(n: i64, i: usize) -> Self {
        ZQPoint { n, i }
    }

    /// The shift `[k]`.
    pub fn shift(self, k: i64) -> Self {
        ZQPoint { n: self.n - k, i: self.i }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TransjectiveLabel {
    /// `P_i[1]`
    ShiftedProjective(usize),
    /// `τ⁻ᵐ P_i`
    PostProjective(usize, u32),
    /// `τᵐ I_i`
    PreInjective(usize, u32),
}

impl TransjectiveLabel {
    pub fn vertex(&self) -> usize {
        match *self {
            TransjectiveLabel::ShiftedProjective(i)
            | TransjectiveLabel::PostProjective(i, _)
            | TransjectiveLabel::PreInjective(i, _) => i,
        }
    }

    pub fn display<'a>(&self, q: &'a Quiver) -> LabelDisplay<'a> {
        LabelDisplay { label: *self, q }
    }
}

pub struct LabelDisplay<'a> {
    label: TransjectiveLabel,
    q: &'a Quiver,
}

impl fmt::Display for LabelDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label {
            TransjectiveLabel::ShiftedProjective(i) => write!(f, "P{}[1]", self.q.name(i)),
            TransjectiveLabel::PostProjective(i, 0) => write!(f, "P{}", self.q.name(i)),
            TransjectiveLabel::PostProjective(i, m) => write!(f, "tau^-{m} P{}", self.q.name(i)),
            TransjectiveLabel::PreInjective(i, 0) => write!(f, "I{}", self.q.name(i)),
            TransjectiveLabel::PreInjective(i, m) => write!(f, "tau^{m} I{}", self.q.name(i)),
        }
    }
}

pub fn label_to_point(l: TransjectiveLabel) -> ZQPoint {
    match l {
        TransjectiveLabel::ShiftedProjective(i) => ZQPoint::new(0, i),
        TransjectiveLabel::PostProjective(i, m) => ZQPoint::new(m as i64 + 1, i),
        TransjectiveLabel::PreInjective(i, m) => ZQPoint::new(-(m as i64 + 1), i),
    }
}

pub fn point_to_label(p: ZQPoint) -> TransjectiveLabel {
    match p.n {
        0 => TransjectiveLabel::ShiftedProjective(p.i),
        n if n > 0 => TransjectiveLabel::PostProjective(p.i, (n - 1) as u32),
        n => TransjectiveLabel::PreInjective(p.i, (-n - 1) as u32),
    }
}

/// Dimension vector of a transjective module; `None` for shifted projectives.
pub fn label_dim(model: &CanonicalModel, l: TransjectiveLabel) -> Option<DimVec> {
    match l {
        TransjectiveLabel::ShiftedProjective(_) => None,
        TransjectiveLabel::PostProjective(i, m) => Some(model.coxeter_power(-(m as i64), &model.dim_projective(i))),
        TransjectiveLabel::PreInjective(i, m) => Some(model.coxeter_power(m as i64, &model.dim_injective(i))),
    }
}

/// Point of the simple `S_e`: `P_e` when `e` is a sink, `I_e` when `e` is a source.
pub fn simple_point(q: &Quiver, e: usize) -> Result<ZQPoint> {
    if q.is_sink(e) {
        Ok(ZQPoint::new(1, e))
    } else if q.is_source(e) {
        Ok(ZQPoint::new(-1, e))
    } else {
        Err(Error::InvalidInput(format!("vertex {} is neither a sink nor a source", q.name(e))))
    }
}

/// Names the indecomposable transjective module with dimension vector `d`.
pub fn recognize(model: &CanonicalModel, d: &[i64]) -> Result<TransjectiveLabel> {
    let n = model.n();
    if d.len() != n || d.iter().any(|&x| x < 0) || d.iter().all(|&x| x == 0) {
        return Err(Error::NotTransjective(format!("{d:?} is not a nonzero dimension vector")));
    }
    let defect = model.defect(d);
    if defect == 0 {
        return Err(Error::NotTransjective(format!("{d:?} has defect 0")));
    }
    let cap = d.iter().sum::<i64>() as u32 + n as u32 + 1;
    let post = defect < 0;
    let mut current: Vec<DimVec> = (0..n)
        .map(|i| if post { model.dim_projective(i) } else { model.dim_injective(i) })
        .collect();
    for m in 0..=cap {
        if let Some(i) = current.iter().position(|v| v.as_slice() == d) {
            return Ok(if post {
                TransjectiveLabel::PostProjective(i, m)
            } else {
                TransjectiveLabel::PreInjective(i, m)
            });
        }
        let step = if post { &model.coxeter_inverse } else { &model.coxeter };
        for v in current.iter_mut() {
            *v = step.apply(v);
        }
    }
    Err(Error::NotTransjective(format!("{d:?} not reached within {cap} translates")))
}

/// Values a frieze can take: anything with a unit, products and exact division.
pub trait FriezeRing: Clone {
    fn one_like(&self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn add_one(&self) -> Self;
    fn ring_div(&self, d: &Self) -> Result<Self>;
}

impl FriezeRing for LaurentPoly {
    fn one_like(&self) -> Self {
        LaurentPoly::one(self.nvars())
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn add_one(&self) -> Self {
        self.add_constant(1)
    }
    fn ring_div(&self, d: &Self) -> Result<Self> {
        self.exact_div(d)
    }
}

impl FriezeRing for Int {
    fn one_like(&self) -> Self {
        Int::one()
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn add_one(&self) -> Self {
        self + &Int::one()
    }
    fn ring_div(&self, d: &Self) -> Result<Self> {
        self.div_exact(d)
            .ok_or_else(|| Error::InexactDivision(format!("{self} is not divisible by {d}")))
    }
}

pub const DEFAULT_WINDOW: i64 = 64;

/// Memoised frieze on `ℤQ` with prescribed values on the slice `n = 0`.
///
/// Forward slices use `f(n,i)·f(n−1,i) = ∏_{j→i} f(n−1,j) · ∏_{i→k} f(n,k) + 1`
/// solved for `f(n,i)`, sinks first; backward slices solve the same relation for
/// `f(n−1,i)`, sources first.
pub struct Frieze<R: FriezeRing> {
    inn: Vec<Vec<usize>>,
    out: Vec<Vec<usize>>,
    cache: HashMap<ZQPoint, R>,
    window: i64,
    divisions: u64,
}

impl<R: FriezeRing> Frieze<R> {
    pub fn new(q: &Quiver, init: Vec<R>) -> Self {
        assert_eq!(init.len(), q.len());
        let n = q.len();
        let mut cache = HashMap::new();
        for (i, v) in init.into_iter().enumerate() {
            cache.insert(ZQPoint::new(0, i), v);
        }
        Frieze {
            inn: (0..n).map(|i| q.in_neighbors(i)).collect(),
            out: (0..n).map(|i| q.out_neighbors(i)).collect(),
            cache,
            window: DEFAULT_WINDOW,
            divisions: 0,
        }
    }

    pub fn with_window(mut self, window: i64) -> Self {
        self.window = window;
        self
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    /// Number of exact divisions performed so far.
    pub fn divisions(&self) -> u64 {
        self.divisions
    }

    pub fn cached(&self, p: ZQPoint) -> Option<&R> {
        self.cache.get(&p)
    }

    /// Points whose values must be known before `p` can be computed.
    fn deps(&self, p: ZQPoint) -> Vec<ZQPoint> {
        let ZQPoint { n, i } = p;
        let mut d = Vec::new();
        if n > 0 {
            d.push(ZQPoint::new(n - 1, i));
            d.extend(self.inn[i].iter().map(|&j| ZQPoint::new(n - 1, j)));
            d.extend(self.out[i].iter().map(|&k| ZQPoint::new(n, k)));
        } else if n < 0 {
            d.push(ZQPoint::new(n + 1, i));
            d.extend(self.inn[i].iter().map(|&j| ZQPoint::new(n, j)));
            d.extend(self.out[i].iter().map(|&k| ZQPoint::new(n + 1, k)));
        }
        d
    }

    fn compute(&mut self, p: ZQPoint) -> Result<R> {
        let ZQPoint { n, i } = p;
        let (base, prod_pts): (ZQPoint, Vec<ZQPoint>) = if n > 0 {
            let mut v: Vec<ZQPoint> = self.inn[i].iter().map(|&j| ZQPoint::new(n - 1, j)).collect();
            v.extend(self.out[i].iter().map(|&k| ZQPoint::new(n, k)));
            (ZQPoint::new(n - 1, i), v)
        } else {
            let mut v: Vec<ZQPoint> = self.inn[i].iter().map(|&j| ZQPoint::new(n, j)).collect();
            v.extend(self.out[i].iter().map(|&k| ZQPoint::new(n + 1, k)));
            (ZQPoint::new(n + 1, i), v)
        };
        let b = &self.cache[&base];
        let mut prod: Option<R> = None;
        for q in &prod_pts {
            let v = &self.cache[q];
            prod = Some(match prod {
                None => v.clone(),
                Some(acc) => acc.ring_mul(v),
            });
        }
        let num = match prod {
            None => b.one_like().add_one(),
            Some(pr) => pr.add_one(),
        };
        self.divisions += 1;
        num.ring_div(b).map_err(|e| match e {
            Error::InexactDivision(m) => Error::InexactDivision(format!("mesh division at ({n}, {i}): {m}")),
            other => other,
        })
    }

    /// Value of the frieze at `p`, computing and caching every point it depends on.
    pub fn value(&mut self, p: ZQPoint) -> Result<R> {
        if let Some(v) = self.cache.get(&p) {
            return Ok(v.clone());
        }
        if p.n.abs() > self.window {
            return Err(Error::CapExceeded(format!(
                "slice {} lies outside the window |n| <= {}",
                p.n, self.window
            )));
        }
        // Depth-first post-order over missing dependencies.
        let mut stack: Vec<(ZQPoint, bool)> = vec![(p, false)];
        while let Some((q, expanded)) = stack.pop() {
            if self.cache.contains_key(&q) {
                continue;
            }
            if expanded {
                let v = self.compute(q)?;
                self.cache.insert(q, v);
                continue;
            }
            stack.push((q, true));
            for d in self.deps(q) {
                if !self.cache.contains_key(&d) {
                    stack.push((d, false));
                }
            }
        }
        Ok(self.cache[&p].clone())
    }

    /// Checks the mesh relation at the mesh ending in `(n, i)`, `n >= 1`, or the
    /// mesh starting there for `n <= 0`: `f(m,i)·f(m−1,i) − ∏ f(m−1,j) · ∏ f(m,k) = 1`.
    pub fn mesh_residual_is_one(&mut self, m: i64, i: usize) -> Result<bool>
    where
        R: PartialEq,
    {
        let top = self.value(ZQPoint::new(m, i))?;
        let bottom = self.value(ZQPoint::new(m - 1, i))?;
        let mut prod = top.one_like();
        for j in self.inn[i].clone() {
            prod = prod.ring_mul(&self.value(ZQPoint::new(m - 1, j))?);
        }
        for k in self.out[i].clone() {
            prod = prod.ring_mul(&self.value(ZQPoint::new(m, k))?);
        }
        Ok(top.ring_mul(&bottom) == prod.add_one())
    }
}

/// Frieze with the initial seed `u` as slice 0.
pub fn symbolic_frieze(model: &CanonicalModel) -> Frieze<LaurentPoly> {
    let n = model.n();
    Frieze::new(&model.quiver, (0..n).map(|i| LaurentPoly::var(n, i)).collect())
}

/// Frieze with every initial value equal to 1.
pub fn integer_frieze(model: &CanonicalModel) -> Frieze<Int> {
    Frieze::new(&model.quiver, vec![Int::one(); model.n()])
}

/// Convenience wrapper for a single value.
pub fn frieze_value<R: FriezeRing>(cache: &mut Frieze<R>, p: ZQPoint) -> Result<R> {
    cache.value(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::EuclideanType;

    fn kron() -> CanonicalModel {
        CanonicalModel::build(EuclideanType::A(1, 1)).unwrap()
    }

    #[test]
    fn coordinates() {
        for l in [
            TransjectiveLabel::ShiftedProjective(2),
            TransjectiveLabel::PostProjective(1, 4),
            TransjectiveLabel::PreInjective(6, 3),
        ] {
            assert_eq!(point_to_label(label_to_point(l)), l);
        }
        assert_eq!(label_to_point(TransjectiveLabel::PreInjective(6, 3)), ZQPoint::new(-4, 6));
        assert_eq!(ZQPoint::new(0, 1).shift(-1), ZQPoint::new(1, 1));
    }

    #[test]
    fn kronecker_values() {
        let m = kron();
        let mut f = symbolic_frieze(&m);
        let names = m.var_names();
        let p = |s: &str| LaurentPoly::parse(s, &names).unwrap();
        assert_eq!(f.value(ZQPoint::new(1, 1)).unwrap(), p("u0^2*u1^-1 + u1^-1"));
        assert_eq!(
            f.value(ZQPoint::new(1, 0)).unwrap(),
            p("u0^3*u1^-2 + 2*u0*u1^-2 + u0^-1*u1^-2 + u0^-1")
        );
        // Backward solve reproduces the seed.
        let mut g = Frieze::new(
            &m.quiver,
            vec![f.value(ZQPoint::new(1, 0)).unwrap(), f.value(ZQPoint::new(1, 1)).unwrap()],
        );
        assert_eq!(g.value(ZQPoint::new(-1, 0)).unwrap(), p("u0"));
        assert_eq!(g.value(ZQPoint::new(-1, 1)).unwrap(), p("u1"));
    }

    #[test]
    fn recognition() {
        let m = CanonicalModel::build(EuclideanType::E6).unwrap();
        let l = recognize(&m, &[1, 1, 0, 1, 0, 1, 1]).unwrap();
        assert_eq!(l, TransjectiveLabel::PreInjective(6, 3));
        assert_eq!(recognize(&m, &m.dim_projective(2)).unwrap(), TransjectiveLabel::PostProjective(2, 0));
        assert!(matches!(recognize(&m, &m.delta), Err(Error::NotTransjective(_))));
    }

    #[test]
    fn integer_frieze_is_positive() {
        let m = CanonicalModel::build(EuclideanType::E6).unwrap();
        let mut f = integer_frieze(&m);
        for n in -4..=4 {
            for i in 0..7 {
                assert!(f.value(ZQPoint::new(n, i)).unwrap() > Int::zero());
            }
        }
        assert!(f.value(ZQPoint::new(65, 0)).is_err());
    }
}
