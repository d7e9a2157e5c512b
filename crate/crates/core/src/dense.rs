//! Dense kernels for Laurent multiplication and exact division.
//!
//! Exponent vectors of the polynomials met in frieze computations lie in a
//! proper affine sublattice (cluster variables are homogeneous for the grading
//! given by the kernel of the exchange matrix). An [`AffineFrame`] records
//! integer relations `s·e_t + Σ_k c_k e_k = const` satisfied by every term of
//! the operands and drops the coordinates `t` they determine. The remaining
//! coordinates index a mixed-radix box that is processed one slab of the
//! leading coordinate at a time, so only a bounded window lives in memory.

use crate::int::Int;
use crate::laurent::{grlex_cmp, LaurentPoly};
use crate::linalg::{integer_kernel, rref, Ratio};

/// Memory budget for one dense window.
const DENSE_BYTES: u64 = 1 << 30;

#[derive(Clone, Debug)]
struct Relation {
    target: usize,
    scale: i64,
    coeffs: Vec<(usize, i64)>,
}

impl Relation {
    fn value(&self, e: &[i32]) -> i64 {
        self.scale * e[self.target] as i64 + self.coeffs.iter().map(|&(k, c)| c * e[k] as i64).sum::<i64>()
    }
}

#[derive(Clone, Debug)]
struct AffineFrame {
    keep: Vec<usize>,
    rels: Vec<Relation>,
}

fn sample_rows(p: &LaurentPoly, rows: &mut Vec<Vec<i64>>) {
    let e0 = p.exponent(0);
    let step = (p.len() / 24).max(1);
    let picks = (0..p.len().min(8)).chain((0..p.len()).step_by(step));
    for t in picks {
        let d: Vec<i64> = p.exponent(t).iter().zip(e0).map(|(a, b)| (a - b) as i64).collect();
        if d.iter().any(|&x| x != 0) {
            rows.push(d);
        }
    }
}

impl AffineFrame {
    /// Relations holding on every term of each of `polys` (each with its own
    /// constant). Dropped coordinates are chosen among the widest in `widths`.
    fn fit(polys: &[&LaurentPoly], widths: &[i64]) -> AffineFrame {
        let n = widths.len();
        let mut rows = Vec::new();
        for p in polys {
            sample_rows(p, &mut rows);
        }
        loop {
            let frame = Self::from_rows(&rows, n, widths);
            let mut violation = None;
            'outer: for p in polys {
                let e0 = p.exponent(0);
                let c0: Vec<i64> = frame.rels.iter().map(|r| r.value(e0)).collect();
                for t in 0..p.len() {
                    let e = p.exponent(t);
                    if frame.rels.iter().zip(&c0).any(|(r, c)| r.value(e) != *c) {
                        violation = Some(e.iter().zip(e0).map(|(a, b)| (a - b) as i64).collect::<Vec<_>>());
                        break 'outer;
                    }
                }
            }
            match violation {
                None => return frame,
                Some(v) => rows.push(v),
            }
        }
    }

    fn from_rows(rows: &[Vec<i64>], n: usize, widths: &[i64]) -> AffineFrame {
        let kernel = if rows.is_empty() {
            (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect()
        } else {
            integer_kernel(rows, n)
        };
        if kernel.is_empty() {
            return AffineFrame { keep: (0..n).collect(), rels: Vec::new() };
        }
        // Widest columns first, so pivots land on wide coordinates.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(widths[i]), i));
        let mut m: Vec<Vec<Ratio>> =
            kernel.iter().map(|w| order.iter().map(|&i| Ratio::int(w[i] as i128)).collect()).collect();
        let pivots = rref(&mut m);
        let mut rels = Vec::new();
        let mut dropped = vec![false; n];
        for (r, &pc) in pivots.iter().enumerate() {
            let den = m[r].iter().fold(1i128, |acc, x| num_integer::Integer::lcm(&acc, &x.den));
            let ints: Vec<i64> = m[r].iter().map(|x| (x.num * (den / x.den)) as i64).collect();
            let target = order[pc];
            dropped[target] = true;
            let coeffs = ints
                .iter()
                .enumerate()
                .filter(|&(c, &v)| c != pc && v != 0)
                .map(|(c, &v)| (order[c], v))
                .collect();
            rels.push(Relation { target, scale: ints[pc], coeffs });
        }
        AffineFrame { keep: (0..n).filter(|&i| !dropped[i]).collect(), rels }
    }

    fn constants(&self, p: &LaurentPoly) -> Vec<i64> {
        self.rels.iter().map(|r| r.value(p.exponent(0))).collect()
    }

    /// Fills the dropped coordinates of `e` from the kept ones; `false` if one
    /// of them is not an integer.
    fn lift(&self, consts: &[i64], e: &mut [i32]) -> bool {
        for (r, &c) in self.rels.iter().zip(consts) {
            let rest: i64 = r.coeffs.iter().map(|&(k, a)| a * e[k] as i64).sum();
            let num = c - rest;
            if num % r.scale != 0 {
                return false;
            }
            e[r.target] = (num / r.scale) as i32;
        }
        true
    }
}

/// Mixed-radix lex index over the kept coordinates `coords` (most significant
/// first). The leading digit is the slab number.
struct DenseBox {
    coords: Vec<usize>,
    width: Vec<u64>,
    stride: Vec<u64>,
    slabs: u64,
    slab_len: u64,
}

impl DenseBox {
    fn new(coords: Vec<usize>, lo: &[i32], hi: &[i32]) -> Option<DenseBox> {
        let k = coords.len();
        let width: Vec<u64> = coords.iter().map(|&i| (hi[i] as i64 - lo[i] as i64 + 1) as u64).collect();
        let mut stride = vec![1u64; k];
        let mut v: u64 = 1;
        for j in (0..k).rev() {
            stride[j] = v;
            v = v.checked_mul(width[j])?;
        }
        let (slabs, slab_len) = if k == 0 { (1, 1) } else { (width[0], stride[0]) };
        Some(DenseBox { coords, width, stride, slabs, slab_len })
    }

    fn volume(&self) -> u64 {
        self.slabs * self.slab_len
    }

    /// Key of `e` relative to the box corner `base` (indexed like `coords`).
    fn key(&self, e: &[i32], base: &[i32]) -> u64 {
        self.coords.iter().enumerate().map(|(j, &i)| (e[i] - base[j]) as u64 * self.stride[j]).sum()
    }

    fn corner(&self, lo: &[i32]) -> Vec<i32> {
        self.coords.iter().map(|&i| lo[i]).collect()
    }

    /// Writes the kept coordinates of `key + corner` into `e`.
    fn decode(&self, key: u64, corner: &[i32], e: &mut [i32]) {
        let mut r = key;
        for (j, &i) in self.coords.iter().enumerate() {
            e[i] = corner[j] + (r / self.stride[j]) as i32;
            r %= self.stride[j];
        }
    }
}

/// Kept coordinates ordered so that `lead` comes first.
fn coords_with_lead(frame: &AffineFrame, lead: usize) -> Vec<usize> {
    let mut c = vec![lead];
    c.extend(frame.keep.iter().copied().filter(|&i| i != lead));
    c
}

fn finish(n: usize, mut terms: Vec<(Vec<i32>, i128)>) -> LaurentPoly {
    terms.sort_unstable_by(|a, b| grlex_cmp(&b.0, &a.0));
    LaurentPoly::from_sorted_parts(
        n,
        terms.iter().flat_map(|t| t.0.iter().copied()).collect(),
        terms.into_iter().map(|t| Int::from_i128(t.1)).collect(),
    )
}

/// Multiply-accumulate cell; the caller rules out overflow.
trait Acc: Copy + Default + PartialEq {
    const BYTES: u64;
    fn mac(&mut self, a: i128, b: i128);
    fn get(self) -> i128;
}

impl Acc for i64 {
    const BYTES: u64 = 8;
    #[inline]
    fn mac(&mut self, a: i128, b: i128) {
        *self += (a as i64) * (b as i64);
    }
    fn get(self) -> i128 {
        self as i128
    }
}

impl Acc for i128 {
    const BYTES: u64 = 16;
    #[inline]
    fn mac(&mut self, a: i128, b: i128) {
        *self += a * b;
    }
    fn get(self) -> i128 {
        self
    }
}

/// `a · b` on dense slabs; `None` if the box is too sparse for this to pay off.
/// The caller guarantees that `Σ |ca|·|cb|` fits in `i128`, and in `i64` unless `wide`.
pub(crate) fn mul(a: &LaurentPoly, b: &LaurentPoly, ca: &[i128], cb: &[i128], wide: bool) -> Option<LaurentPoly> {
    let n = a.nvars();
    let (alo, ahi) = a.exponent_bounds()?;
    let (blo, bhi) = b.exponent_bounds()?;
    let lo: Vec<i32> = (0..n).map(|i| alo[i] + blo[i]).collect();
    let hi: Vec<i32> = (0..n).map(|i| ahi[i] + bhi[i]).collect();
    let widths: Vec<i64> = (0..n).map(|i| (hi[i] - lo[i] + 1) as i64).collect();
    let frame = AffineFrame::fit(&[a, b], &widths);
    let lead = *frame.keep.iter().max_by_key(|&&i| (widths[i], std::cmp::Reverse(i)))?;
    let bx = DenseBox::new(coords_with_lead(&frame, lead), &lo, &hi)?;
    let pairs = a.len() as u64 * b.len() as u64;
    if bx.volume() > 16 * pairs {
        return None;
    }
    let consts: Vec<i64> = frame.constants(a).iter().zip(frame.constants(b)).map(|(x, y)| x + y).collect();
    let job = MulJob {
        bx: &bx,
        frame: &frame,
        a,
        b,
        ca,
        cb,
        alo: bx.corner(&alo),
        blo: bx.corner(&blo),
        lo: bx.corner(&lo),
        consts,
    };
    Some(if wide { job.run::<i128>() } else { job.run::<i64>() })
}

struct MulJob<'a> {
    bx: &'a DenseBox,
    frame: &'a AffineFrame,
    a: &'a LaurentPoly,
    b: &'a LaurentPoly,
    ca: &'a [i128],
    cb: &'a [i128],
    alo: Vec<i32>,
    blo: Vec<i32>,
    lo: Vec<i32>,
    consts: Vec<i64>,
}

impl MulJob<'_> {
    fn run<A: Acc>(&self) -> LaurentPoly {
        let bx = self.bx;
        let n = self.a.nvars();
        let ss = bx.slab_len;
        // Terms grouped by slab digit, keys reduced to their in-slab offset.
        let group = |p: &LaurentPoly, corner: &[i32]| {
            let mut g: Vec<Vec<(u64, usize)>> = Vec::new();
            for t in 0..p.len() {
                let k = bx.key(p.exponent(t), corner);
                let s = (k / ss) as usize;
                if g.len() <= s {
                    g.resize(s + 1, Vec::new());
                }
                g[s].push((k % ss, t));
            }
            g
        };
        let ga = group(self.a, &self.alo);
        let gb = group(self.b, &self.blo);
        let chunk = ((DENSE_BYTES / A::BYTES) / ss).clamp(1, bx.slabs);
        let mut cells = vec![A::default(); (chunk * ss) as usize];
        let mut terms = Vec::new();
        let mut e = vec![0i32; n];
        let zero = A::default();
        let mut s0 = 0u64;
        while s0 < bx.slabs {
            let s1 = (s0 + chunk).min(bx.slabs);
            for (sa, ra) in ga.iter().enumerate() {
                for (sb, rb) in gb.iter().enumerate() {
                    let s = (sa + sb) as u64;
                    if s < s0 || s >= s1 || ra.is_empty() || rb.is_empty() {
                        continue;
                    }
                    let base = ((s - s0) * ss) as usize;
                    for &(ka, ta) in ra {
                        let cx = self.ca[ta];
                        let row = &mut cells[base + ka as usize..];
                        for &(kb, tb) in rb {
                            row[kb as usize].mac(cx, self.cb[tb]);
                        }
                    }
                }
            }
            for (off, c) in cells[..((s1 - s0) * ss) as usize].iter_mut().enumerate() {
                if *c == zero {
                    continue;
                }
                bx.decode(s0 * ss + off as u64, &self.lo, &mut e);
                let ok = self.frame.lift(&self.consts, &mut e);
                debug_assert!(ok);
                terms.push((e.clone(), c.get()));
                *c = zero;
            }
            s0 = s1;
        }
        finish(n, terms)
    }
}

pub(crate) enum DenseDiv {
    Done(LaurentPoly),
    Inexact(&'static str),
    Unsuitable,
}

/// Division cell with checked arithmetic; `None` means overflow.
trait Cell: Copy + Default + PartialEq {
    const BYTES: u64;
    fn from_i128(v: i128) -> Option<Self>;
    fn get(self) -> i128;
    fn div_exact(self, d: Self) -> Option<Option<Self>>;
    fn sub_mul(self, a: Self, b: Self) -> Option<Self>;
}

impl Cell for i64 {
    const BYTES: u64 = 8;
    fn from_i128(v: i128) -> Option<Self> {
        i64::try_from(v).ok()
    }
    fn get(self) -> i128 {
        self as i128
    }
    fn div_exact(self, d: Self) -> Option<Option<Self>> {
        Some((self.checked_rem(d)? == 0).then(|| self / d))
    }
    #[inline]
    fn sub_mul(self, a: Self, b: Self) -> Option<Self> {
        self.checked_sub(a.checked_mul(b)?)
    }
}

impl Cell for i128 {
    const BYTES: u64 = 16;
    fn from_i128(v: i128) -> Option<Self> {
        Some(v)
    }
    fn get(self) -> i128 {
        self
    }
    fn div_exact(self, d: Self) -> Option<Option<Self>> {
        Some((self.checked_rem(d)? == 0).then(|| self / d))
    }
    #[inline]
    fn sub_mul(self, a: Self, b: Self) -> Option<Self> {
        self.checked_sub(a.checked_mul(b)?)
    }
}

/// `num / den` by leading-term division in the lex order of the frame box,
/// sweeping slabs from the top. A quotient term found in slab `t` only touches
/// the `w` slabs ending at `t`, where `w` is the divisor's width in the
/// leading coordinate, so a ring of `w` slabs suffices.
pub(crate) fn div(num: &LaurentPoly, den: &LaurentPoly, cn: &[i128], cd: &[i128]) -> DenseDiv {
    let n = num.nvars();
    let (Some((nlo, nhi)), Some((dlo, dhi))) = (num.exponent_bounds(), den.exponent_bounds()) else {
        return DenseDiv::Unsuitable;
    };
    if (0..n).any(|i| nhi[i] - nlo[i] < dhi[i] - dlo[i]) {
        return DenseDiv::Inexact("exponent ranges incompatible");
    }
    let widths: Vec<i64> = (0..n).map(|i| (nhi[i] - nlo[i] + 1) as i64).collect();
    let frame = AffineFrame::fit(&[num, den], &widths);
    if frame.keep.is_empty() {
        return DenseDiv::Unsuitable;
    }
    // Lead with the coordinate giving the smallest window relative to the box.
    let ratio = |x: usize| (dhi[x] - dlo[x] + 1) as f64 / widths[x] as f64;
    let lead = *frame.keep.iter().min_by(|&&i, &&j| ratio(i).total_cmp(&ratio(j)).then(i.cmp(&j))).unwrap();
    let Some(bx) = DenseBox::new(coords_with_lead(&frame, lead), &nlo, &nhi) else {
        return DenseDiv::Unsuitable;
    };
    if bx.volume() > 256 * (num.len() as u64).max(den.len() as u64) {
        return DenseDiv::Unsuitable;
    }
    let job = DivJob {
        num,
        den,
        frame: &frame,
        bx: &bx,
        nlo: bx.corner(&nlo),
        dlo: bx.corner(&dlo),
        dhi: bx.corner(&dhi),
    };
    match job.run::<i64>(cn, cd) {
        Some(r) => r,
        None => job.run::<i128>(cn, cd).unwrap_or(DenseDiv::Unsuitable),
    }
}

struct DivJob<'a> {
    num: &'a LaurentPoly,
    den: &'a LaurentPoly,
    frame: &'a AffineFrame,
    bx: &'a DenseBox,
    nlo: Vec<i32>,
    dlo: Vec<i32>,
    dhi: Vec<i32>,
}

impl DivJob<'_> {
    /// `None` on overflow or when the window would exceed the memory budget.
    fn run<C: Cell>(&self, cn: &[i128], cd: &[i128]) -> Option<DenseDiv> {
        let (num, den, frame, bx) = (self.num, self.den, self.frame, self.bx);
        let n = num.nvars();
        let k = bx.coords.len();
        let ss = bx.slab_len;
        let ring = (self.dhi[0] - self.dlo[0] + 1) as u64;
        if ring.checked_mul(ss)?.checked_mul(C::BYTES)? > DENSE_BYTES {
            return None;
        }
        let cd: Vec<C> = cd.iter().map(|&c| C::from_i128(c)).collect::<Option<_>>()?;
        let mut by_slab: Vec<Vec<(u64, C)>> = vec![Vec::new(); bx.slabs as usize];
        for t in 0..num.len() {
            let key = bx.key(num.exponent(t), &self.nlo);
            by_slab[(key / ss) as usize].push((key % ss, C::from_i128(cn[t])?));
        }
        // Divisor terms as (slab digit, in-slab offset) relative to its own corner.
        let dterms: Vec<(u64, u64)> = (0..den.len())
            .map(|t| {
                let key = bx.key(den.exponent(t), &self.dlo);
                (key / ss, key % ss)
            })
            .collect();
        let lead_idx = (0..den.len()).max_by_key(|&t| dterms[t]).unwrap();
        let (lead_slab, lead_off) = dterms[lead_idx];
        let lead = cd[lead_idx];
        let zeros = vec![0i32; k];
        let mut lead_digits = vec![0i32; n];
        bx.decode(lead_off, &zeros, &mut lead_digits);
        let qw: Vec<i64> = (0..k).map(|j| bx.width[j] as i64 - (self.dhi[j] - self.dlo[j]) as i64).collect();
        let consts: Vec<i64> = frame.constants(num).iter().zip(frame.constants(den)).map(|(x, y)| x - y).collect();
        let qcorner: Vec<i32> = (0..k).map(|j| self.nlo[j] - self.dlo[j]).collect();
        let mut window = vec![C::default(); (ring * ss) as usize];
        let zero = C::default();
        let mut terms: Vec<(Vec<i32>, i128)> = Vec::new();
        let mut off_digits = vec![0i32; n];
        let mut e = vec![0i32; n];
        let mut rowbase = vec![0usize; ring as usize];
        let top = bx.slabs - 1;
        for i in 0..ring {
            let s = top - i;
            load(&mut window, &by_slab[s as usize], (s % ring) * ss);
        }
        for t in (0..bx.slabs).rev() {
            let base = ((t % ring) * ss) as usize;
            for off in (0..ss).rev() {
                let c = window[base + off as usize];
                if c == zero {
                    continue;
                }
                if t < lead_slab || off < lead_off {
                    return Some(DenseDiv::Inexact("nonzero remainder"));
                }
                let sq = t - lead_slab;
                bx.decode(off, &zeros, &mut off_digits);
                e[bx.coords[0]] = qcorner[0] + sq as i32;
                for j in 1..k {
                    let i = bx.coords[j];
                    let dq = off_digits[i] - lead_digits[i];
                    if dq < 0 || dq as i64 >= qw[j] {
                        return Some(DenseDiv::Inexact("nonzero remainder"));
                    }
                    e[i] = qcorner[j] + dq;
                }
                let Some(qc) = c.div_exact(lead)? else {
                    return Some(DenseDiv::Inexact("coefficient not divisible"));
                };
                let oq = off - lead_off;
                for (sd, rb) in rowbase.iter_mut().enumerate() {
                    *rb = (((sq + sd as u64) % ring) * ss + oq) as usize;
                }
                for (&(sd, od), &dj) in dterms.iter().zip(&cd) {
                    let slot = &mut window[rowbase[sd as usize] + od as usize];
                    *slot = slot.sub_mul(qc, dj)?;
                }
                if !frame.lift(&consts, &mut e) {
                    return Some(DenseDiv::Inexact("nonzero remainder"));
                }
                terms.push((e.clone(), qc.get()));
            }
            // Slab t is now zero; its storage takes the next slab entering the window.
            if t >= ring {
                let s = t - ring;
                load(&mut window, &by_slab[s as usize], (s % ring) * ss);
            }
        }
        Some(DenseDiv::Done(finish(n, terms)))
    }
}

fn load<C: Cell>(window: &mut [C], terms: &[(u64, C)], base: u64) {
    for &(off, c) in terms {
        window[(base + off) as usize] = c;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeMap;

    /// Random polynomial whose exponents satisfy `e0 + e1 + e2 = deg` and `e3 = -e1`.
    fn graded(rng: &mut ChaCha8Rng, deg: i32, terms: usize) -> LaurentPoly {
        let mut m: BTreeMap<Vec<i32>, i64> = BTreeMap::new();
        while m.len() < terms {
            let a = rng.gen_range(-6..=9);
            let b = rng.gen_range(-5..=8);
            let c = rng.gen_range(1..=50i64) * if rng.gen_bool(0.2) { -1 } else { 1 };
            m.insert(vec![a, b, deg - a - b, -b], c);
        }
        LaurentPoly::from_terms(4, m.into_iter().map(|(e, c)| (e, Int::from(c))))
    }

    fn coeffs(p: &LaurentPoly) -> Vec<i128> {
        p.terms().map(|(_, c)| c.as_i128().unwrap()).collect()
    }

    fn naive(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        let mut m: BTreeMap<Vec<i32>, i128> = BTreeMap::new();
        for (ea, ca) in a.terms() {
            for (eb, cb) in b.terms() {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *m.entry(e).or_default() += ca.as_i128().unwrap() * cb.as_i128().unwrap();
            }
        }
        LaurentPoly::from_terms(a.nvars(), m.into_iter().map(|(e, c)| (e, Int::from_i128(c))))
    }

    #[test]
    fn frame_detects_relations() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = graded(&mut rng, 3, 40);
        let frame = AffineFrame::fit(&[&a], &[16, 14, 30, 14]);
        assert_eq!(frame.keep.len(), 2);
        let consts = frame.constants(&a);
        for (e, _) in a.terms() {
            let mut f = e.to_vec();
            for r in &frame.rels {
                f[r.target] = 999;
            }
            assert!(frame.lift(&consts, &mut f));
            assert_eq!(f, e);
        }
    }

    #[test]
    fn dense_product_matches_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = graded(&mut rng, 2, 120);
        let b = graded(&mut rng, -1, 90);
        let want = naive(&a, &b);
        for wide in [false, true] {
            let got = mul(&a, &b, &coeffs(&a), &coeffs(&b), wide).expect("dense box");
            assert_eq!(got, want);
        }
    }

    #[test]
    fn dense_division_recovers_factor() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = graded(&mut rng, 4, 100);
        let b = graded(&mut rng, 0, 60);
        let p = naive(&a, &b);
        match div(&p, &b, &coeffs(&p), &coeffs(&b)) {
            DenseDiv::Done(q) => assert_eq!(q, a),
            DenseDiv::Inexact(why) => panic!("inexact: {why}"),
            DenseDiv::Unsuitable => panic!("unsuitable"),
        }
    }

    #[test]
    fn dense_division_reports_remainder() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = graded(&mut rng, 1, 80);
        let b = graded(&mut rng, 2, 50);
        let (lo, _) = a.exponent_bounds().unwrap();
        let mut e = b.exponent(0).to_vec();
        e[0] = lo[0] + e[0] + 1;
        e[1] = 0;
        e[3] = 0;
        e[2] = 3 - e[0];
        let p = naive(&a, &b).add(&LaurentPoly::monomial(&e, 1));
        assert!(matches!(div(&p, &b, &coeffs(&p), &coeffs(&b)), DenseDiv::Inexact(_)));
        // 3ab / 2b has non-integer coefficients unless every coefficient of a is even.
        let p = naive(&a, &b).scale(&Int::from(3));
        let b2 = b.scale(&Int::from(2));
        assert!(a.terms().any(|(_, c)| c.as_i64().unwrap() % 2 != 0));
        assert!(matches!(div(&p, &b2, &coeffs(&p), &coeffs(&b2)), DenseDiv::Inexact(_)));
    }
}
