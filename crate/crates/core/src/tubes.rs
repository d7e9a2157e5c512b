//! Exceptional and homogeneous tubes: the transjective objects `B_λ`, `B'_λ`
//! attached to each tube, quasi-simple characters obtained from the exchange
//! relation `X_{N[k]} · f(S_e[k]) = f(B[k]) + f(B'[k])`, and the generalised
//! Chebyshev polynomials that fill in the rest of a tube.

use crate::error::{Error, Result};
use crate::quiver::{CanonicalModel, DimVec, EuclideanType};
use crate::transjective::{
    label_dim, label_to_point, point_to_label, recognize, simple_point, Frieze, FriezeRing, TransjectiveLabel, ZQPoint,
};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Lambda {
    Zero,
    One,
    Infinity,
    Homogeneous,
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lambda::Zero => "0",
            Lambda::One => "1",
            Lambda::Infinity => "inf",
            Lambda::Homogeneous => "hom",
        })
    }
}

impl FromStr for Lambda {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "0" => Ok(Lambda::Zero),
            "1" => Ok(Lambda::One),
            "inf" | "infinity" => Ok(Lambda::Infinity),
            "hom" => Ok(Lambda::Homogeneous),
            _ => Err(Error::Parse(format!("unknown tube tag {s:?}; expected 0, 1, inf or hom"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TubeData {
    pub lambda: Lambda,
    pub rank: usize,
    pub b: TransjectiveLabel,
    pub b_prime: TransjectiveLabel,
    pub e_used: usize,
}

/// Indecomposable regular object `N_λ[k]^{(l)}`: quasi-simple offset `k` along `τ`
/// and quasi-length `l`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RegularIndex {
    pub lambda: Lambda,
    pub k: i64,
    pub l: u32,
}

impl RegularIndex {
    pub fn new(lambda: Lambda, k: i64, l: u32) -> Self {
        RegularIndex { lambda, k, l }
    }
}

use TransjectiveLabel::{PostProjective as Post, PreInjective as Pre, ShiftedProjective as Shp};

/// Per-tube data and notes about printed labels that had to be corrected.
pub fn tube_table(model: &CanonicalModel) -> Result<(Vec<TubeData>, Vec<String>)> {
    let q = &model.quiver;
    let v = |name: &str| q.vertex_index(name).unwrap();
    let mut notes = Vec::new();
    let tubes = match model.ty {
        EuclideanType::A(r, s) => {
            let ip = r - 1;
            let im = if s >= 2 { r + 1 } else { 0 };
            let e = model.e;
            vec![
                TubeData { lambda: Lambda::Zero, rank: r, b: Post(ip, 0), b_prime: Shp(im), e_used: e },
                TubeData { lambda: Lambda::One, rank: s, b: Post(im, 0), b_prime: Shp(ip), e_used: e },
                homogeneous(model, e)?,
            ]
        }
        EuclideanType::D(n) => {
            let (a1, a2, cn, b2) = (v("a1"), v("a2"), v(&format!("c{n}")), v("b2"));
            let e = model.e;
            let d: DimVec = model
                .dim_projective(cn)
                .iter()
                .zip(model.dim_projective(b2))
                .map(|(x, y)| x - y)
                .collect();
            let b1 = recognize(model, &d).map_err(|err| Error::RecognitionFailed(format!("P_cn/P_b2: {err}")))?;
            let m = (n - 1) as u32;
            // B' = Coker f[-1], the cokernel being thin on one `a` vertex and the `c` chain.
            let mut b_prime = |a: usize, lambda: Lambda| -> Result<TransjectiveLabel> {
                let d: DimVec = (0..q.len()).map(|i| i64::from(i == a || (2..2 + n).contains(&i))).collect();
                let coker = recognize_as(model, &d, "cokernel")?;
                let found = shift_back(coker);
                if found != Pre(a, m) {
                    notes.push(format!(
                        "tube {lambda}: printed B' = I_{}[{}] but the cokernel has the dimension vector of {}, so B' = {}",
                        q.name(a),
                        m,
                        coker.display(q),
                        found.display(q)
                    ));
                }
                Ok(found)
            };
            let b0 = b_prime(a2, Lambda::Zero)?;
            let binf = b_prime(a1, Lambda::Infinity)?;
            vec![
                TubeData { lambda: Lambda::One, rank: n + 1, b: b1, b_prime: Shp(b2), e_used: e },
                TubeData { lambda: Lambda::Zero, rank: 2, b: Post(a1, 0), b_prime: b0, e_used: e },
                TubeData { lambda: Lambda::Infinity, rank: 2, b: Post(a2, 0), b_prime: binf, e_used: e },
                homogeneous(model, e)?,
            ]
        }
        EuclideanType::E6 => {
            let e = v("7");
            let printed = TubeData {
                lambda: Lambda::Homogeneous,
                rank: 1,
                b: Pre(v("7"), 7),
                b_prime: Post(v("7"), 4),
                e_used: e,
            };
            vec![
                TubeData { lambda: Lambda::Zero, rank: 2, b: Pre(v("7"), 3), b_prime: Post(v("7"), 1), e_used: e },
                TubeData { lambda: Lambda::One, rank: 3, b: Pre(v("5"), 2), b_prime: Post(v("3"), 0), e_used: e },
                TubeData {
                    lambda: Lambda::Infinity,
                    rank: 3,
                    b: Pre(v("5"), 2),
                    b_prime: Post(v("7"), 0),
                    e_used: v("3"),
                },
                checked_homogeneous(model, printed, &mut notes)?,
            ]
        }
        EuclideanType::E7 => {
            let e = v("8");
            let printed =
                TubeData { lambda: Lambda::Homogeneous, rank: 1, b: Pre(e, 12), b_prime: Post(e, 10), e_used: e };
            vec![
                TubeData { lambda: Lambda::Infinity, rank: 2, b: Pre(v("4"), 6), b_prime: Post(v("4"), 4), e_used: e },
                TubeData { lambda: Lambda::Zero, rank: 3, b: Pre(e, 4), b_prime: Post(e, 2), e_used: e },
                TubeData { lambda: Lambda::One, rank: 4, b: Pre(v("4"), 3), b_prime: Post(v("4"), 1), e_used: e },
                checked_homogeneous(model, printed, &mut notes)?,
            ]
        }
        EuclideanType::E8 => {
            let e = v("9");
            let printed =
                TubeData { lambda: Lambda::Homogeneous, rank: 1, b: Pre(e, 30), b_prime: Post(e, 28), e_used: e };
            vec![
                TubeData { lambda: Lambda::Infinity, rank: 2, b: Pre(e, 15), b_prime: Post(e, 13), e_used: e },
                TubeData { lambda: Lambda::Zero, rank: 3, b: Pre(e, 10), b_prime: Post(e, 8), e_used: e },
                TubeData { lambda: Lambda::One, rank: 5, b: Pre(e, 6), b_prime: Post(e, 4), e_used: e },
                checked_homogeneous(model, printed, &mut notes)?,
            ]
        }
    };
    Ok((tubes, notes))
}

fn recognize_as(model: &CanonicalModel, d: &[i64], what: &str) -> Result<TransjectiveLabel> {
    recognize(model, d).map_err(|err| Error::RecognitionFailed(format!("{what} with dimension vector {d:?}: {err}")))
}

/// `C[-1]` for a preinjective `C`.
fn shift_back(l: TransjectiveLabel) -> TransjectiveLabel {
    point_to_label(label_to_point(l).shift(-1))
}

/// `B` and `B'` of the homogeneous tubes, derived from dimension vectors.
pub fn homogeneous(model: &CanonicalModel, e: usize) -> Result<TubeData> {
    let delta = &model.delta;
    let se = model.dim_simple(e);
    let plus: DimVec = delta.iter().zip(&se).map(|(a, b)| a + b).collect();
    let b = recognize_as(model, &plus, "homogeneous B")?;
    let b_prime = if model.quiver.is_sink(e) {
        let minus: DimVec = delta.iter().zip(&se).map(|(a, b)| a - b).collect();
        shift_back(recognize_as(model, &minus, "homogeneous C")?)
    } else {
        let t = model.coxeter.apply(&se);
        if t.iter().zip(delta).all(|(x, d)| x <= d) {
            let k: DimVec = delta.iter().zip(&t).map(|(d, x)| d - x).collect();
            recognize_as(model, &k, "homogeneous B'")?
        } else if t.iter().zip(delta).all(|(x, d)| x >= d) {
            let c: DimVec = t.iter().zip(delta).map(|(x, d)| x - d).collect();
            shift_back(recognize_as(model, &c, "homogeneous C")?)
        } else {
            return Err(Error::RecognitionFailed("dim τS_e and δ are incomparable".into()));
        }
    };
    Ok(TubeData { lambda: Lambda::Homogeneous, rank: 1, b, b_prime, e_used: e })
}

fn checked_homogeneous(model: &CanonicalModel, printed: TubeData, notes: &mut Vec<String>) -> Result<TubeData> {
    let derived = homogeneous(model, printed.e_used)?;
    let q = &model.quiver;
    if derived.b != printed.b {
        notes.push(format!(
            "{} homogeneous tube: printed B = {} but the dimension vector is that of {}; using the latter",
            model.ty,
            printed.b.display(q),
            derived.b.display(q)
        ));
    }
    if derived.b_prime != printed.b_prime {
        notes.push(format!(
            "{} homogeneous tube: printed B' = {} but the dimension vector is that of {}; using the latter",
            model.ty,
            printed.b_prime.display(q),
            derived.b_prime.display(q)
        ));
    }
    Ok(derived)
}

impl CanonicalModel {
    pub fn tube(&self, lambda: Lambda) -> Result<&TubeData> {
        self.tubes
            .iter()
            .find(|t| t.lambda == lambda)
            .ok_or_else(|| Error::InvalidInput(format!("type {} has no tube {lambda}", self.ty)))
    }
}

/// `dim N_λ = dim B_λ − dim S_e`.
pub fn dim_mouth(model: &CanonicalModel, tube: &TubeData) -> Result<DimVec> {
    let b = label_dim(model, tube.b).ok_or_else(|| Error::InvalidInput("B is not a module".into()))?;
    Ok(b.iter().zip(model.dim_simple(tube.e_used)).map(|(x, s)| x - s).collect())
}

/// `dim N_λ[k] = Φᵏ dim N_λ`.
pub fn dim_quasi_simple(model: &CanonicalModel, tube: &TubeData, k: i64) -> Result<DimVec> {
    Ok(model.coxeter_power(k.rem_euclid(tube.rank as i64), &dim_mouth(model, tube)?))
}

/// Dimension vector of `N_λ[k]^{(l)}`.
pub fn dim_regular(model: &CanonicalModel, idx: RegularIndex) -> Result<DimVec> {
    let tube = *model.tube(idx.lambda)?;
    let mut d = vec![0; model.n()];
    for j in 0..idx.l as i64 {
        for (x, y) in d.iter_mut().zip(dim_quasi_simple(model, &tube, idx.k + j)?) {
            *x += y;
        }
    }
    Ok(d)
}

/// Checks `dim N_λ ≥ 0` and `Σ_{k<p} Φᵏ dim N_λ = δ`.
pub fn check_tube_consistency(model: &CanonicalModel, tube: &TubeData) -> Result<()> {
    let n = dim_mouth(model, tube)?;
    if n.iter().any(|&x| x < 0) {
        return Err(Error::InternalMismatch(format!("tube {}: dim B − dim S_e = {n:?} is not a dimension vector", tube.lambda)));
    }
    let mut sum = vec![0i64; model.n()];
    let mut cur = n;
    for _ in 0..tube.rank {
        for (s, c) in sum.iter_mut().zip(&cur) {
            *s += c;
        }
        cur = model.coxeter.apply(&cur);
    }
    if sum != model.delta {
        return Err(Error::InternalMismatch(format!(
            "tube {}: quasi-simple dimension vectors sum to {sum:?}, not δ = {:?}",
            tube.lambda, model.delta
        )));
    }
    Ok(())
}

/// The three points entering the exchange relation for `N_λ[k]`, as `(B[k], B'[k], S_e[k])`.
pub fn exchange_points(model: &CanonicalModel, tube: &TubeData, k: i64) -> Result<(ZQPoint, ZQPoint, ZQPoint)> {
    let s = simple_point(&model.quiver, tube.e_used)?;
    Ok((label_to_point(tube.b).shift(k), label_to_point(tube.b_prime).shift(k), s.shift(k)))
}

/// Representative of `k` modulo the rank that keeps the three exchange points
/// closest to the initial slice. All representatives give the same character.
pub fn central_shift(model: &CanonicalModel, tube: &TubeData, k: i64) -> Result<i64> {
    let p = tube.rank as i64;
    let (b, bp, s) = exchange_points(model, tube, 0)?;
    let depth = |j: i64| [b.n - j, bp.n - j, s.n - j].iter().map(|x| x.abs()).max().unwrap();
    let mid = (b.n + bp.n).div_euclid(2);
    let base = k.rem_euclid(p) + (mid - k.rem_euclid(p)).div_euclid(p) * p;
    let best = (-2..=2)
        .map(|t| base + t * p)
        .min_by_key(|&j| (depth(j), j.abs(), j))
        .unwrap();
    Ok(best)
}

/// `X_{N_λ[k]}` evaluated in the frieze ring of `cache`: the exchange relation
/// quotient at the representative `k` itself.
pub fn quasi_simple_at<R: FriezeRing>(
    model: &CanonicalModel,
    tube: &TubeData,
    k: i64,
    cache: &mut Frieze<R>,
) -> Result<R> {
    let (b, bp, s) = exchange_points(model, tube, k)?;
    let fb = cache.value(b)?;
    let fbp = cache.value(bp)?;
    let fs = cache.value(s)?;
    fb.ring_add(&fbp).ring_div(&fs).map_err(|e| match e {
        Error::InexactDivision(m) => Error::InexactDivision(format!(
            "exchange relation for tube {} at k = {k}: {m}",
            tube.lambda
        )),
        other => other,
    })
}

/// `X_{N_λ[k]}` using the central representative of `k`.
pub fn quasi_simple_char<R: FriezeRing>(
    model: &CanonicalModel,
    lambda: Lambda,
    k: i64,
    cache: &mut Frieze<R>,
) -> Result<R> {
    let tube = *model.tube(lambda)?;
    let j = central_shift(model, &tube, k)?;
    quasi_simple_at(model, &tube, j, cache)
}

/// `P_l(T_0, …, T_{l−1})` by the three-term recurrence.
pub fn chebyshev<R: FriezeRing>(one: &R, vals: &[R]) -> R {
    let mut prev: Option<R> = None;
    let mut cur = one.clone();
    for t in vals {
        let next = match &prev {
            None => t.ring_mul(&cur),
            Some(p) => t.ring_mul(&cur).ring_sub(p),
        };
        prev = Some(cur);
        cur = next;
    }
    cur
}

/// `X_{N_λ[k]^{(l)}} = P_l(q_k, q_{k+1}, …, q_{k+l−1})` with indices modulo the rank.
pub fn regular_char<R: FriezeRing>(model: &CanonicalModel, idx: RegularIndex, cache: &mut Frieze<R>) -> Result<R> {
    if idx.l == 0 {
        return Err(Error::InvalidInput("quasi-length must be at least 1".into()));
    }
    let tube = *model.tube(idx.lambda)?;
    let p = tube.rank as i64;
    let distinct = (idx.l as i64).min(p);
    let mut qs: Vec<R> = Vec::with_capacity(distinct as usize);
    for j in 0..distinct {
        qs.push(quasi_simple_char(model, idx.lambda, idx.k + j, cache)?);
    }
    let vals: Vec<R> = (0..idx.l as usize).map(|j| qs[j % distinct as usize].clone()).collect();
    let one = qs[0].one_like();
    Ok(chebyshev(&one, &vals))
}
