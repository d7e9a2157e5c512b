//! Cluster characters recovered from their values modulo primes.
//!
//! For a module `M` with `d = dim M` every monomial of `X_M` has exponent
//! `a₀ + B̃e` for some `0 ≤ e ≤ d`, where `a₀,i = −d_i + Σ_{i→j} d_j` and
//! `B̃_ij = #(j→i) − #(i→j)`. So `X_M = x^{a₀} G(y)` with `y_j = x^{B̃ col j}`
//! and `G` a polynomial of multidegree at most `d`. The `y_j` satisfy one
//! monomial relation per kernel vector of `B̃`; eliminating one coordinate per
//! relation leaves a polynomial in free variables, which is sampled on a tensor
//! grid of geometric nodes (the frieze evaluated modulo `p` at matching
//! points `x`) and interpolated axis by axis. Coefficients are lifted from
//! their residues by CRT until a fresh prime confirms the result at random
//! points.

use crate::error::{Error, Result};
use crate::int::Int;
use crate::laurent::LaurentPoly;
use crate::linalg::{integer_kernel, rref, solve_rational, Ratio};
use crate::modular::{Field, ModBatch, PRIMES};
use crate::quiver::Quiver;
use crate::transjective::Frieze;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest interpolation grid accepted.
pub const MAX_GRID: u64 = 1 << 26;
const BATCH: usize = 2048;

/// Interpolation grid for one dimension vector.
#[derive(Clone, Debug)]
pub struct Plan {
    n: usize,
    a0: Vec<i64>,
    kept: Vec<usize>,
    steps: Vec<Vec<i64>>,
    lo: Vec<i64>,
    width: Vec<usize>,
    alpha: Vec<Vec<i64>>,
    scale: i64,
}

fn combinations(n: usize, r: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, start: usize) {
    if cur.len() == r {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        cur.push(i);
        combinations(n, r, out, cur, i + 1);
        cur.pop();
    }
}

/// Kernel basis `R` with `R[r][pivots[s]] = δ_rs`, if it is integral.
fn unimodular_basis(kernel: &[Vec<i64>], pivots: &[usize], n: usize) -> Option<Vec<Vec<i64>>> {
    let order: Vec<usize> = pivots.iter().copied().chain((0..n).filter(|c| !pivots.contains(c))).collect();
    let mut m: Vec<Vec<Ratio>> =
        kernel.iter().map(|row| order.iter().map(|&c| Ratio::int(row[c] as i128)).collect()).collect();
    if rref(&mut m) != (0..pivots.len()).collect::<Vec<_>>() {
        return None;
    }
    let mut out = vec![vec![0i64; n]; kernel.len()];
    for (r, row) in m.iter().enumerate() {
        for (pos, x) in row.iter().enumerate() {
            if x.den != 1 {
                return None;
            }
            out[r][order[pos]] = x.num as i64;
        }
    }
    Some(out)
}

impl Plan {
    pub fn new(q: &Quiver, d: &[i64]) -> Result<Plan> {
        let n = q.len();
        if d.len() != n || d.iter().any(|&x| x < 0) {
            return Err(Error::InvalidInput(format!("{d:?} is not a dimension vector")));
        }
        // B̃ with B̃[i][j] = #(j→i) − #(i→j).
        let mut bt = vec![vec![0i64; n]; n];
        for &(s, t) in q.arrows() {
            bt[t][s] += 1;
            bt[s][t] -= 1;
        }
        let mut a0: Vec<i64> = d.iter().map(|&x| -x).collect();
        for &(s, t) in q.arrows() {
            a0[s] += d[t];
        }
        let kernel = integer_kernel(&bt, n);
        let r = kernel.len();
        let mut subsets = Vec::new();
        combinations(n, r, &mut subsets, &mut Vec::new(), 0);
        let mut best: Option<(f64, Vec<usize>, Vec<Vec<i64>>)> = None;
        for pivots in subsets {
            let Some(basis) = unimodular_basis(&kernel, &pivots, n) else { continue };
            let vol: f64 = (0..n)
                .filter(|j| !pivots.contains(j))
                .map(|j| {
                    let spread: i64 = (0..r).map(|k| (basis[k][j] * d[pivots[k]]).abs()).sum();
                    (d[j] + spread + 1) as f64
                })
                .product();
            if best.as_ref().map_or(true, |b| vol < b.0) {
                best = Some((vol, pivots, basis));
            }
        }
        let (_, pivots, basis) = best
            .ok_or_else(|| Error::InternalMismatch("exchange matrix kernel has no unimodular pivot set".into()))?;
        let kept: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
        let mut lo = Vec::new();
        let mut width = Vec::new();
        for &j in &kept {
            // e'_j = e_j − Σ_r R[r][j]·e_{P_r}
            let (mut l, mut h) = (0i64, d[j]);
            for k in 0..r {
                let c = -basis[k][j] * d[pivots[k]];
                l += c.min(0);
                h += c.max(0);
            }
            lo.push(l);
            width.push((h - l + 1) as usize);
        }
        // Discrete logs: y_j = g^{β_j}, x_i = g^{α_i}, β = B̃ᵀα.
        let bt_t: Vec<Vec<i64>> = (0..n).map(|j| (0..n).map(|i| bt[i][j]).collect()).collect();
        let mut sols = Vec::new();
        let mut scale: i128 = 1;
        for &j in &kept {
            let mut beta = vec![0i64; n];
            beta[j] = 1;
            for k in 0..r {
                beta[pivots[k]] = -basis[k][j];
            }
            let x = solve_rational(&bt_t, &beta)
                .ok_or_else(|| Error::InternalMismatch("grid direction outside the exchange lattice".into()))?;
            for v in &x {
                scale = scale.lcm(&v.den);
            }
            sols.push(x);
        }
        let alpha = sols.iter().map(|x| x.iter().map(|v| (v.num * (scale / v.den)) as i64).collect()).collect();
        let steps = kept.iter().map(|&j| (0..n).map(|i| bt[i][j]).collect()).collect();
        Ok(Plan { n, a0, kept, steps, lo, width, alpha, scale: scale as i64 })
    }

    /// Number of sample points.
    pub fn volume(&self) -> u64 {
        self.width.iter().map(|&w| w as u64).product()
    }

    fn exponent(&self, t: &[usize]) -> Vec<i32> {
        let mut e = self.a0.clone();
        for (j, &tj) in t.iter().enumerate() {
            let ej = tj as i64 + self.lo[j];
            for (x, s) in e.iter_mut().zip(&self.steps[j]) {
                *x += ej * s;
            }
        }
        e.into_iter().map(|x| x as i32).collect()
    }
}

/// Vandermonde inverse for nodes `h^0, …, h^{w−1}`: `c = M⁻¹ v` where `v_k = Σ_t c_t h^{kt}`.
fn vandermonde_inverse(f: &Field, h: u64, w: usize) -> Vec<u64> {
    let nodes: Vec<u64> = (0..w).map(|k| f.pow(h, k as u64)).collect();
    let mut a: Vec<Vec<u64>> = (0..w)
        .map(|k| {
            let mut row: Vec<u64> = (0..w).map(|t| f.pow(nodes[k], t as u64)).collect();
            row.extend((0..w).map(|c| if c == k { f.one() } else { 0 }));
            row
        })
        .collect();
    for c in 0..w {
        let p = (c..w).find(|&r| a[r][c] != 0).expect("distinct nodes");
        a.swap(c, p);
        let inv = f.inv(a[c][c]).unwrap();
        for x in a[c].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for r in 0..w {
            if r != c && a[r][c] != 0 {
                let m = a[r][c];
                for k in 0..2 * w {
                    let v = f.mul(m, a[c][k]);
                    a[r][k] = f.sub(a[r][k], v);
                }
            }
        }
    }
    a.into_iter().flat_map(|row| row[w..].to_vec()).collect()
}

struct Grid {
    h: u64,
    /// `xs[j][k][i] = x_i` contribution of digit `k` on axis `j`.
    xs: Vec<Vec<Vec<u64>>>,
    /// Correction turning `X(x)` into the shifted grid polynomial.
    factor: Vec<Vec<u64>>,
}

impl Grid {
    /// `None` when `g` gives coincident nodes.
    fn new(plan: &Plan, field: Field, g: u64) -> Option<Grid> {
        let f = field;
        let h = f.pow(g, plan.scale as u64);
        let maxw = plan.width.iter().copied().max().unwrap_or(1);
        let mut t = h;
        for _ in 1..maxw {
            if t == f.one() {
                return None;
            }
            t = f.mul(t, h);
        }
        let mut xs = Vec::new();
        let mut factor = Vec::new();
        for (j, &w) in plan.width.iter().enumerate() {
            let z: Vec<u64> = plan.alpha[j].iter().map(|&a| f.pow_signed(g, a)).collect();
            let mut axis = vec![vec![f.one(); plan.n]];
            for k in 1..w {
                let prev: &Vec<u64> = &axis[k - 1];
                axis.push(prev.iter().zip(&z).map(|(&a, &b)| f.mul(a, b)).collect());
            }
            xs.push(axis);
            let rho: i64 = plan.a0.iter().zip(&plan.alpha[j]).map(|(a, b)| a * b).sum::<i64>() + plan.scale * plan.lo[j];
            let step = f.pow_signed(g, -rho);
            let mut col = vec![f.one()];
            for k in 1..w {
                col.push(f.mul(col[k - 1], step));
            }
            factor.push(col);
        }
        Some(Grid { h, xs, factor })
    }
}

fn digits(mut s: u64, width: &[usize], out: &mut [usize]) {
    for j in (0..width.len()).rev() {
        out[j] = (s % width[j] as u64) as usize;
        s /= width[j] as u64;
    }
}

/// Residues of the grid polynomial's coefficients modulo `field.modulus()`,
/// in row-major grid order.
fn residues<E>(q: &Quiver, plan: &Plan, field: Field, g: u64, window: i64, eval: &E) -> Result<Option<Vec<u64>>>
where
    E: Fn(&mut Frieze<ModBatch>) -> Result<ModBatch>,
{
    let Some(grid) = Grid::new(plan, field, g) else { return Ok(None) };
    let f = field;
    let n = plan.n;
    let vol = plan.volume() as usize;
    let k = plan.kept.len();
    let mut vals = vec![0u64; vol];
    let mut dig = vec![0usize; k];
    let mut start = 0usize;
    while start < vol {
        let end = (start + BATCH).min(vol);
        let mut init = vec![Vec::with_capacity(end - start); n];
        let mut corr = Vec::with_capacity(end - start);
        for s in start..end {
            digits(s as u64, &plan.width, &mut dig);
            let mut x = vec![f.one(); n];
            let mut c = f.one();
            for j in 0..k {
                for (xi, z) in x.iter_mut().zip(&grid.xs[j][dig[j]]) {
                    *xi = f.mul(*xi, *z);
                }
                c = f.mul(c, grid.factor[j][dig[j]]);
            }
            for (col, xi) in init.iter_mut().zip(x) {
                col.push(xi);
            }
            corr.push(c);
        }
        let init = init.into_iter().map(|v| ModBatch::new(f, v)).collect();
        let mut frieze = Frieze::new(q, init).with_window(window);
        let out = match eval(&mut frieze) {
            Ok(v) => v,
            Err(Error::DegenerateSample(_)) => return Ok(None),
            Err(e) => return Err(e),
        };
        for (slot, (v, c)) in vals[start..end].iter_mut().zip(out.values.iter().zip(corr)) {
            *slot = f.mul(*v, c);
        }
        start = end;
    }
    // Axis-by-axis Vandermonde solves.
    let mut stride = 1usize;
    for j in (0..k).rev() {
        let w = plan.width[j];
        if w > 1 {
            let inv = vandermonde_inverse(&f, grid.h, w);
            let block = stride * w;
            let mut line = vec![0u64; w];
            for base in (0..vol).step_by(block) {
                for off in 0..stride {
                    for (t, l) in line.iter_mut().enumerate() {
                        *l = vals[base + off + t * stride];
                    }
                    for r in 0..w {
                        let row = &inv[r * w..(r + 1) * w];
                        let mut acc = 0u64;
                        for (a, b) in row.iter().zip(&line) {
                            acc = f.add(acc, f.mul(*a, *b));
                        }
                        vals[base + off + r * stride] = acc;
                    }
                }
            }
        }
        stride *= w;
    }
    for v in vals.iter_mut() {
        *v = f.to_u64(*v);
    }
    Ok(Some(vals))
}

fn candidate(plan: &Plan, coeffs: &[BigInt], modulus: &BigInt) -> LaurentPoly {
    let half: BigInt = modulus >> 1;
    let mut dig = vec![0usize; plan.kept.len()];
    let mut terms = Vec::new();
    for (s, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let c = if *c > half { c - modulus } else { c.clone() };
        digits(s as u64, &plan.width, &mut dig);
        terms.push((plan.exponent(&dig), Int::from_big(c)));
    }
    LaurentPoly::from_terms(plan.n, terms)
}

/// `p(x)` modulo the prime of `field`, `x` nonzero.
pub fn eval_mod(p: &LaurentPoly, field: &Field, x: &[u64]) -> u64 {
    let f = field;
    let inv: Vec<u64> = x.iter().map(|&v| f.inv(v).expect("nonzero point")).collect();
    let mut acc = 0u64;
    for (e, c) in p.terms() {
        let mut m = f.from_int(c);
        for (i, &ei) in e.iter().enumerate() {
            if ei > 0 {
                m = f.mul(m, f.pow(x[i], ei as u64));
            } else if ei < 0 {
                m = f.mul(m, f.pow(inv[i], ei.unsigned_abs() as u64));
            }
        }
        acc = f.add(acc, m);
    }
    acc
}

/// Checks `candidate = X` at random points modulo `field`.
fn confirms<E>(q: &Quiver, cand: &LaurentPoly, field: Field, window: i64, eval: &E, rng: &mut ChaCha8Rng) -> Result<bool>
where
    E: Fn(&mut Frieze<ModBatch>) -> Result<ModBatch>,
{
    let p = field.modulus();
    for _ in 0..4 {
        let pts: Vec<Vec<u64>> = (0..2).map(|_| (0..q.len()).map(|_| field.from_u64(rng.gen_range(1..p))).collect()).collect();
        let init = (0..q.len()).map(|i| ModBatch::new(field, pts.iter().map(|x| x[i]).collect())).collect();
        let mut frieze = Frieze::new(q, init).with_window(window);
        let got = match eval(&mut frieze) {
            Ok(v) => v,
            Err(Error::DegenerateSample(_)) => continue,
            Err(e) => return Err(e),
        };
        for (x, v) in pts.iter().zip(&got.values) {
            if eval_mod(cand, &field, x) != *v {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    Err(Error::DegenerateSample("no usable verification point".into()))
}

/// The character of a module of dimension vector `d` whose value at any
/// initial seed is produced by `eval` from a frieze over that seed.
pub fn reconstruct<E>(q: &Quiver, d: &[i64], window: i64, eval: E) -> Result<LaurentPoly>
where
    E: Fn(&mut Frieze<ModBatch>) -> Result<ModBatch>,
{
    let plan = Plan::new(q, d)?;
    if plan.volume() > MAX_GRID {
        return Err(Error::CapExceeded(format!(
            "interpolation grid of {} points exceeds {MAX_GRID}",
            plan.volume()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut acc: Option<(Vec<BigInt>, BigInt)> = None;
    let mut next = 0usize;
    while next < PRIMES.len() {
        let field = Field::new(PRIMES[next]);
        next += 1;
        let mut res = None;
        for _ in 0..4 {
            let g = field.from_u64(rng.gen_range(2..field.modulus()));
            if let Some(r) = residues(q, &plan, field, g, window, &eval)? {
                res = Some(r);
                break;
            }
        }
        let Some(res) = res else { continue };
        let p = BigInt::from(field.modulus());
        acc = Some(match acc {
            None => (res.into_iter().map(BigInt::from).collect(), p),
            Some((cs, m)) => {
                // x ≡ c (mod m), x ≡ r (mod p)
                let inv_m = BigInt::from(field.to_u64(field.inv(field.from_int(&Int::from_big(m.clone()))).unwrap()));
                let joined = cs
                    .into_iter()
                    .zip(res)
                    .map(|(c, r)| {
                        let t = ((BigInt::from(r) - &c) * &inv_m).mod_floor(&p);
                        c + &m * t
                    })
                    .collect();
                (joined, m * p)
            }
        });
        let (cs, m) = acc.as_ref().unwrap();
        let cand = candidate(&plan, cs, m);
        if next < PRIMES.len() && confirms(q, &cand, Field::new(PRIMES[next]), window, &eval, &mut rng)? {
            return Ok(cand);
        }
    }
    Err(Error::InternalMismatch(
        "modular reconstruction did not stabilise within the available primes".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{CanonicalModel, EuclideanType};
    use crate::transjective::{symbolic_frieze, ZQPoint};
    use crate::tubes::{dim_quasi_simple, quasi_simple_at, central_shift};
    use crate::transjective::{label_dim, point_to_label};

    #[test]
    fn transjective_points_match_the_mesh() {
        for t in [EuclideanType::A(1, 1), EuclideanType::A(2, 1), EuclideanType::D(1), EuclideanType::E6] {
            let m = CanonicalModel::build(t).unwrap();
            let mut f = symbolic_frieze(&m);
            for n in [-3i64, -1, 1, 3] {
                for i in 0..m.n() {
                    let p = ZQPoint::new(n, i);
                    let d = label_dim(&m, point_to_label(p)).unwrap();
                    let got = reconstruct(&m.quiver, &d, 64, |fr| fr.value(p)).unwrap();
                    assert_eq!(got, f.value(p).unwrap(), "{t:?} at {p:?}");
                }
            }
        }
    }

    #[test]
    fn e6_quasi_simples_match_the_mesh() {
        let m = CanonicalModel::build(EuclideanType::E6).unwrap();
        let mut f = symbolic_frieze(&m);
        for tube in m.tubes.clone() {
            if tube.rank == 1 {
                continue;
            }
            for k in 0..tube.rank as i64 {
                let j = central_shift(&m, &tube, k).unwrap();
                let d = dim_quasi_simple(&m, &tube, k).unwrap();
                let got = reconstruct(&m.quiver, &d, 64, |fr| quasi_simple_at(&m, &tube, j, fr)).unwrap();
                assert_eq!(got, quasi_simple_at(&m, &tube, j, &mut f).unwrap());
            }
        }
    }

    #[test]
    fn plan_grid_is_small_for_e8_delta() {
        let m = CanonicalModel::build(EuclideanType::E8).unwrap();
        let plan = Plan::new(&m.quiver, &m.delta).unwrap();
        assert_eq!(plan.kept.len(), 8);
        assert!(plan.volume() < 400_000, "{}", plan.volume());
    }
}
