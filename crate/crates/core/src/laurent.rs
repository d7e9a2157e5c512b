//! Sparse Laurent polynomials with integer coefficients.
//!
//! Terms are kept sorted in descending graded-lexicographic order (total degree
//! first, then the exponent of `u_1`, `u_2`, ...), with no zero coefficients, so
//! two polynomials are equal exactly when their term lists are equal.

use crate::dense::{self, DenseDiv};
use crate::error::{Error, Result};
use crate::int::Int;
use ahash::AHashMap;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::fmt::Write as _;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    exps: Vec<i32>,
    coeffs: Vec<Int>,
}

/// Term-pair count above which the dense kernels are tried.
const DENSE_WORK: usize = 1 << 16;

/// Graded-lexicographic comparison of two exponent vectors.
pub fn grlex_cmp(a: &[i32], b: &[i32]) -> Ordering {
    let da: i64 = a.iter().map(|&x| x as i64).sum();
    let db: i64 = b.iter().map(|&x| x as i64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// Mixed-radix packing of exponents inside a bounding box. The packed key of a
/// product is the sum of the packed keys of its factors, and keys compare like
/// the graded-lexicographic order of the exponents.
struct Packer {
    min: Vec<i32>,
    width: Vec<u128>,
    stride: Vec<u128>,
    radix: u128,
}

impl Packer {
    fn new(min: Vec<i32>, max: &[i32]) -> Result<Packer> {
        let n = min.len();
        let width: Vec<u128> = (0..n).map(|i| (max[i] as i64 - min[i] as i64 + 1) as u128).collect();
        let mut stride = vec![1u128; n];
        let mut radix: u128 = 1;
        for i in (0..n).rev() {
            stride[i] = radix;
            radix = radix
                .checked_mul(width[i])
                .ok_or_else(|| Error::CapExceeded("exponent box too large".into()))?;
        }
        let maxdeg: u128 = width.iter().map(|w| w - 1).sum();
        radix
            .checked_mul(maxdeg + 1)
            .ok_or_else(|| Error::CapExceeded("exponent box too large".into()))?;
        Ok(Packer { min, width, stride, radix })
    }

    /// Key of `e - shift` relative to this box's minimum, where `shift` is
    /// subtracted from the box minimum, i.e. offsets are `e - (min - shift)`.
    fn key_with_base(&self, e: &[i32], base: &[i32]) -> u128 {
        let mut lex = 0u128;
        let mut deg = 0u128;
        for i in 0..e.len() {
            let o = (e[i] - base[i]) as u128;
            lex += o * self.stride[i];
            deg += o;
        }
        deg * self.radix + lex
    }

    fn decode(&self, key: u128, out: &mut [i32]) {
        let mut lex = key % self.radix;
        for i in 0..out.len() {
            let o = lex / self.stride[i];
            lex %= self.stride[i];
            out[i] = self.min[i] + o as i32;
        }
    }
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, exps: Vec::new(), coeffs: Vec::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<Int>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        LaurentPoly { nvars, exps: vec![0; nvars], coeffs: vec![c] }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        LaurentPoly { nvars, exps: e, coeffs: vec![Int::one()] }
    }

    pub fn monomial(exps: &[i32], c: impl Into<Int>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero(exps.len());
        }
        LaurentPoly { nvars: exps.len(), exps: exps.to_vec(), coeffs: vec![c] }
    }

    /// Builds a polynomial from arbitrary terms, merging repeated exponents.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i32>, Int)>,
    {
        let mut map: AHashMap<Vec<i32>, Int> = AHashMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector has wrong length");
            let slot = map.entry(e).or_default();
            *slot += &c;
        }
        let mut v: Vec<(Vec<i32>, Int)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by(|a, b| grlex_cmp(&b.0, &a.0));
        let mut p = Self::zero(nvars);
        for (e, c) in v {
            p.exps.extend_from_slice(&e);
            p.coeffs.push(c);
        }
        p
    }

    pub(crate) fn from_sorted_parts(nvars: usize, exps: Vec<i32>, coeffs: Vec<Int>) -> Self {
        LaurentPoly { nvars, exps, coeffs }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.len() == 1 && self.coeffs[0].is_one() && self.exps.iter().all(|&x| x == 0)
    }

    pub fn exponent(&self, t: usize) -> &[i32] {
        &self.exps[t * self.nvars..(t + 1) * self.nvars]
    }

    pub fn coeff(&self, t: usize) -> &Int {
        &self.coeffs[t]
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &Int)> + '_ {
        (0..self.len()).map(move |t| (self.exponent(t), &self.coeffs[t]))
    }

    /// Coefficient of the monomial `u^e` (zero if absent).
    pub fn coefficient_of(&self, e: &[i32]) -> Int {
        let mut lo = 0;
        let mut hi = self.len();
        while lo < hi {
            let mid = (lo + hi) / 2;
            match grlex_cmp(self.exponent(mid), e) {
                Ordering::Equal => return self.coeffs[mid].clone(),
                Ordering::Greater => lo = mid + 1,
                Ordering::Less => hi = mid,
            }
        }
        Int::zero()
    }

    pub fn is_monomial(&self) -> bool {
        self.len() == 1
    }

    pub fn all_coefficients_positive(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative() && !c.is_zero())
    }

    /// Value at `u = (1, ..., 1)`.
    pub fn eval_ones(&self) -> Int {
        self.coeffs.iter().fold(Int::zero(), |acc, c| &acc + c)
    }

    /// Per-variable minimum and maximum exponents; `None` for the zero polynomial.
    pub fn exponent_bounds(&self) -> Option<(Vec<i32>, Vec<i32>)> {
        if self.is_zero() {
            return None;
        }
        let mut lo = self.exponent(0).to_vec();
        let mut hi = lo.clone();
        for t in 1..self.len() {
            for (i, &x) in self.exponent(t).iter().enumerate() {
                lo[i] = lo[i].min(x);
                hi[i] = hi[i].max(x);
            }
        }
        Some((lo, hi))
    }

    /// `d_i = max(0, -min exponent of u_i)`, so that `u^d * self` is a polynomial.
    pub fn denominator_vector(&self) -> Vec<i32> {
        match self.exponent_bounds() {
            None => vec![0; self.nvars],
            Some((lo, _)) => lo.iter().map(|&m| (-m).max(0)).collect(),
        }
    }

    pub fn mul_monomial(&self, e: &[i32]) -> Self {
        let mut p = self.clone();
        for t in 0..p.len() {
            for i in 0..self.nvars {
                p.exps[t * self.nvars + i] += e[i];
            }
        }
        // Shifting every exponent by the same vector keeps the order.
        p
    }

    pub fn scale(&self, c: &Int) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut p = self.clone();
        for x in p.coeffs.iter_mut() {
            *x = &*x * c;
        }
        p
    }

    pub fn neg(&self) -> Self {
        let mut p = self.clone();
        for x in p.coeffs.iter_mut() {
            *x = -x.clone();
        }
        p
    }

    fn merge(&self, other: &Self, sign: bool) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let n = self.nvars;
        let mut out = Self::zero(n);
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            let ord = if i == self.len() {
                Ordering::Less
            } else if j == other.len() {
                Ordering::Greater
            } else {
                grlex_cmp(self.exponent(i), other.exponent(j))
            };
            match ord {
                Ordering::Greater => {
                    out.exps.extend_from_slice(self.exponent(i));
                    out.coeffs.push(self.coeffs[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.exps.extend_from_slice(other.exponent(j));
                    out.coeffs.push(if sign { other.coeffs[j].clone() } else { -other.coeffs[j].clone() });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if sign { &self.coeffs[i] + &other.coeffs[j] } else { &self.coeffs[i] - &other.coeffs[j] };
                    if !c.is_zero() {
                        out.exps.extend_from_slice(self.exponent(i));
                        out.coeffs.push(c);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn add_constant(&self, c: impl Into<Int>) -> Self {
        self.add(&Self::constant(self.nvars, c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let n = self.nvars;
        if self.is_zero() || other.is_zero() {
            return Self::zero(n);
        }
        if self.is_monomial() && self.coeffs[0].is_one() {
            return other.mul_monomial(self.exponent(0));
        }
        if other.is_monomial() && other.coeffs[0].is_one() {
            return self.mul_monomial(other.exponent(0));
        }
        let (alo, ahi) = self.exponent_bounds().unwrap();
        let (blo, bhi) = other.exponent_bounds().unwrap();
        let lo: Vec<i32> = (0..n).map(|i| alo[i] + blo[i]).collect();
        let hi: Vec<i32> = (0..n).map(|i| ahi[i] + bhi[i]).collect();
        let packer = match Packer::new(lo.clone(), &hi) {
            Ok(p) => p,
            Err(_) => return self.mul_generic(other),
        };
        let ka: Vec<u128> = (0..self.len()).map(|t| packer.key_with_base(self.exponent(t), &alo)).collect();
        let kb: Vec<u128> = (0..other.len()).map(|t| packer.key_with_base(other.exponent(t), &blo)).collect();

        let small_bound = |p: &Self| -> Option<i128> {
            let mut m: i128 = 0;
            for c in &p.coeffs {
                m = m.max(c.as_i64()?.unsigned_abs() as i128);
            }
            Some(m)
        };
        let fits_i128 = match (small_bound(self), small_bound(other)) {
            (Some(ma), Some(mb)) => {
                let k = self.len().min(other.len()) as f64;
                (ma as f64) * (mb as f64) * k < 1.0e37
            }
            _ => false,
        };

        let mut out: Vec<(u128, Int)>;
        if fits_i128 {
            let ca: Vec<i128> = self.coeffs.iter().map(|c| c.as_i64().unwrap() as i128).collect();
            let cb: Vec<i128> = other.coeffs.iter().map(|c| c.as_i64().unwrap() as i128).collect();
            if self.len() * other.len() >= DENSE_WORK {
                let (ma, mb) = (small_bound(self).unwrap(), small_bound(other).unwrap());
                let wide = (ma as f64) * (mb as f64) * (self.len().min(other.len()) as f64) >= 9.0e18;
                if let Some(p) = dense::mul(self, other, &ca, &cb, wide) {
                    return p;
                }
            }
            let boxsize = packer.radix * (packer.width.iter().map(|w| w - 1).sum::<u128>() + 1);
            let pairs = (self.len() as u128) * (other.len() as u128);
            if boxsize <= (1 << 22) && boxsize <= 16 * pairs {
                let mut dense = vec![0i128; boxsize as usize];
                for (x, &kx) in ka.iter().enumerate() {
                    let cx = ca[x];
                    for (y, &ky) in kb.iter().enumerate() {
                        dense[(kx + ky) as usize] += cx * cb[y];
                    }
                }
                out = dense
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| **c != 0)
                    .map(|(k, c)| (k as u128, Int::from_i128(*c)))
                    .collect();
            } else {
                let mut map: AHashMap<u128, i128> = AHashMap::with_capacity((self.len() + other.len()) * 4);
                for (x, &kx) in ka.iter().enumerate() {
                    let cx = ca[x];
                    for (y, &ky) in kb.iter().enumerate() {
                        *map.entry(kx + ky).or_insert(0) += cx * cb[y];
                    }
                }
                out = map.into_iter().filter(|(_, c)| *c != 0).map(|(k, c)| (k, Int::from_i128(c))).collect();
            }
        } else {
            let mut map: AHashMap<u128, Int> = AHashMap::new();
            for (x, &kx) in ka.iter().enumerate() {
                for (y, &ky) in kb.iter().enumerate() {
                    map.entry(kx + ky).or_default().add_mul(&self.coeffs[x], &other.coeffs[y]);
                }
            }
            out = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        out.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut p = Self::zero(n);
        p.exps.resize(out.len() * n, 0);
        p.coeffs.reserve(out.len());
        for (t, (k, c)) in out.into_iter().enumerate() {
            packer.decode(k, &mut p.exps[t * n..(t + 1) * n]);
            p.coeffs.push(c);
        }
        p
    }

    fn mul_generic(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                terms.push((e, ca * cb));
            }
        }
        Self::from_terms(self.nvars, terms)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / d`. Fails with `InexactDivision` when `d` does not
    /// divide `self` in the Laurent polynomial ring.
    ///
    /// Heap-based division: quotient terms are produced in decreasing order and
    /// the partial products `q_i * d_j` are merged lazily.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        assert_eq!(self.nvars, d.nvars);
        let n = self.nvars;
        if d.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero(n));
        }
        if d.is_monomial() {
            let inv: Vec<i32> = d.exponent(0).iter().map(|x| -x).collect();
            let c = &d.coeffs[0];
            let mut q = self.mul_monomial(&inv);
            for x in q.coeffs.iter_mut() {
                *x = x.div_exact(c).ok_or_else(|| Error::InexactDivision("coefficient not divisible".into()))?;
            }
            return Ok(q);
        }
        let (alo, ahi) = self.exponent_bounds().unwrap();
        let (dlo, dhi) = d.exponent_bounds().unwrap();
        let qlo: Vec<i32> = (0..n).map(|i| alo[i] - dlo[i]).collect();
        let qhi: Vec<i32> = (0..n).map(|i| ahi[i] - dhi[i]).collect();
        if (0..n).any(|i| qlo[i] > qhi[i]) {
            return Err(Error::InexactDivision("exponent ranges incompatible".into()));
        }
        let small = |p: &Self| p.coeffs.iter().all(|c| c.as_i64().is_some_and(|v| v.unsigned_abs() < 1 << 62));
        if small(self) && small(d) && self.len() * d.len() >= DENSE_WORK {
            let a: Vec<i128> = self.coeffs.iter().map(|c| c.as_i64().unwrap() as i128).collect();
            let b: Vec<i128> = d.coeffs.iter().map(|c| c.as_i64().unwrap() as i128).collect();
            match dense::div(self, d, &a, &b) {
                DenseDiv::Done(q) => return Ok(q),
                DenseDiv::Inexact(why) => return Err(Error::InexactDivision(why.into())),
                DenseDiv::Unsuitable => {}
            }
        }
        let packer = Packer::new(alo.clone(), &ahi)?;
        let ka: Vec<u128> = (0..self.len()).map(|t| packer.key_with_base(self.exponent(t), &alo)).collect();
        let kd: Vec<u128> = (0..d.len()).map(|t| packer.key_with_base(d.exponent(t), &dlo)).collect();
        let job = DivJob { num: self, den: d, ka: &ka, kd: &kd, packer: &packer, qlo: &qlo, qhi: &qhi };
        if small(self) && small(d) {
            let a: Vec<i128> = self.coeffs.iter().map(|c| c.as_i64().unwrap() as i128).collect();
            let b: Vec<i128> = d.coeffs.iter().map(|c| c.as_i64().unwrap() as i128).collect();
            if let Some(q) = job.run(&a, &b)? {
                return Ok(q);
            }
        }
        Ok(job.run(&self.coeffs, &d.coeffs)?.expect("big integer division cannot overflow"))
    }

    /// Value at integer point `vals` as an exact rational `(num, den)`.
    pub fn eval_rational(&self, vals: &[Int]) -> (num_bigint::BigInt, num_bigint::BigInt) {
        use num_bigint::BigInt;
        let d = self.denominator_vector();
        let mut num = BigInt::from(0);
        for (e, c) in self.terms() {
            let mut t = c.to_big();
            for i in 0..self.nvars {
                t *= num_traits::pow(vals[i].to_big(), (e[i] + d[i]) as usize);
            }
            num += t;
        }
        let mut den = BigInt::from(1);
        for i in 0..self.nvars {
            den *= num_traits::pow(vals[i].to_big(), d[i] as usize);
        }
        (num, den)
    }

    /// Rewrites `self(u)` with `u_i` replaced by `images[i]`, all of which live
    /// in a common ring of Laurent polynomials. Fails if the result is not a
    /// Laurent polynomial.
    pub fn substitute_as_fraction(&self, images: &[LaurentPoly]) -> Result<LaurentPoly> {
        assert_eq!(images.len(), self.nvars);
        let m = images.first().map(|g| g.nvars).unwrap_or(0);
        let d = self.denominator_vector();
        let maxe: Vec<i32> = match self.exponent_bounds() {
            None => return Ok(LaurentPoly::zero(m)),
            Some((_, hi)) => hi,
        };
        let mut powers: Vec<Vec<LaurentPoly>> = Vec::with_capacity(self.nvars);
        for i in 0..self.nvars {
            let top = (maxe[i] + d[i]).max(d[i]) as usize;
            let mut row = vec![LaurentPoly::one(m)];
            for k in 1..=top {
                let next = row[k - 1].mul(&images[i]);
                row.push(next);
            }
            powers.push(row);
        }
        let mut num = LaurentPoly::zero(m);
        for (e, c) in self.terms() {
            let mut t = LaurentPoly::constant(m, c.clone());
            for i in 0..self.nvars {
                let k = (e[i] + d[i]) as usize;
                if k > 0 {
                    t = t.mul(&powers[i][k]);
                }
            }
            num = num.add(&t);
        }
        let mut den = LaurentPoly::one(m);
        for i in 0..self.nvars {
            if d[i] > 0 {
                den = den.mul(&powers[i][d[i] as usize]);
            }
        }
        num.exact_div(&den)
    }

    /// Text form such as `u1^2*u3^-1 + 2*u2 - 1`, terms in canonical order.
    pub fn render(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (t, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if t == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], x)),
                }
            }
            if factors.is_empty() {
                let _ = write!(s, "{a}");
            } else {
                if !a.is_one() {
                    let _ = write!(s, "{a}*");
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }

    /// Parses the text form produced by [`LaurentPoly::render`].
    pub fn parse(text: &str, names: &[String]) -> Result<LaurentPoly> {
        let n = names.len();
        let toks = tokenize(text)?;
        let mut pos = 0usize;
        let mut terms: Vec<(Vec<i32>, Int)> = Vec::new();
        let mut first = true;
        while pos < toks.len() || first {
            let mut sign = false;
            match toks.get(pos) {
                Some(Tok::Plus) if !first => pos += 1,
                Some(Tok::Minus) => {
                    sign = true;
                    pos += 1
                }
                Some(Tok::Plus) => pos += 1,
                _ if first => {}
                Some(t) => return Err(Error::Parse(format!("unexpected token {t:?}"))),
                None => break,
            }
            first = false;
            let mut e = vec![0i32; n];
            let mut c = Int::one();
            loop {
                match toks.get(pos) {
                    Some(Tok::Num(v)) => {
                        c = &c * &v.parse::<Int>().map_err(|e| Error::Parse(e.to_string()))?;
                        pos += 1;
                    }
                    Some(Tok::Ident(name)) => {
                        let i = names
                            .iter()
                            .position(|x| x == name)
                            .ok_or_else(|| Error::Parse(format!("unknown variable {name}")))?;
                        pos += 1;
                        let mut k = 1i32;
                        if let Some(Tok::Caret) = toks.get(pos) {
                            pos += 1;
                            let mut neg = false;
                            if let Some(Tok::Minus) = toks.get(pos) {
                                neg = true;
                                pos += 1;
                            }
                            match toks.get(pos) {
                                Some(Tok::Num(v)) => {
                                    k = v.parse::<i32>().map_err(|e| Error::Parse(e.to_string()))?;
                                    if neg {
                                        k = -k;
                                    }
                                    pos += 1;
                                }
                                _ => return Err(Error::Parse("expected exponent".into())),
                            }
                        }
                        e[i] += k;
                    }
                    _ => return Err(Error::Parse(format!("expected factor at token {pos}"))),
                }
                if let Some(Tok::Star) = toks.get(pos) {
                    pos += 1;
                } else {
                    break;
                }
            }
            if sign {
                c = -c;
            }
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(n, terms))
    }

    pub fn to_json(&self, names: &[String]) -> PolyJson {
        PolyJson {
            vars: names.to_vec(),
            terms: self.terms().map(|(e, c)| TermJson { c: c.to_string(), e: e.to_vec() }).collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<LaurentPoly> {
        let n = j.vars.len();
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            if t.e.len() != n {
                return Err(Error::Parse("exponent vector length differs from vars".into()));
            }
            let c: Int = t.c.parse().map_err(|_| Error::Parse(format!("bad coefficient {}", t.c)))?;
            terms.push((t.e.clone(), c));
        }
        Ok(LaurentPoly::from_terms(n, terms))
    }
}

impl std::fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("u{i}")).collect();
        write!(f, "{}", self.render(&names))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < cs.len() {
        let ch = cs[i];
        match ch {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            c if c.is_ascii_digit() => {
                let st = i;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Tok::Num(cs[st..i].iter().collect()));
            }
            c if c.is_alphabetic() || c == '_' => {
                let st = i;
                while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(cs[st..i].iter().collect()));
            }
            c => return Err(Error::Parse(format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

/// Coefficient arithmetic for exact division; `None` signals overflow.
trait DivCoeff: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn sub_mul(&self, a: &Self, b: &Self) -> Option<Self>;
    fn add(&self, a: &Self) -> Option<Self>;
    fn div_exact(&self, d: &Self) -> Option<Option<Self>>;
    fn into_int(self) -> Int;
}

impl DivCoeff for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn sub_mul(&self, a: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(a.checked_mul(*b)?)
    }
    fn add(&self, a: &Self) -> Option<Self> {
        self.checked_add(*a)
    }
    fn div_exact(&self, d: &Self) -> Option<Option<Self>> {
        if self.checked_rem(*d)? != 0 {
            return Some(None);
        }
        Some(Some(self.checked_div(*d)?))
    }
    fn into_int(self) -> Int {
        Int::from_i128(self)
    }
}

impl DivCoeff for Int {
    fn zero() -> Self {
        Int::zero()
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
    fn sub_mul(&self, a: &Self, b: &Self) -> Option<Self> {
        let mut r = self.clone();
        r.add_mul(&-a.clone(), b);
        Some(r)
    }
    fn add(&self, a: &Self) -> Option<Self> {
        Some(self + a)
    }
    fn div_exact(&self, d: &Self) -> Option<Option<Self>> {
        Some(Int::div_exact(self, d))
    }
    fn into_int(self) -> Int {
        self
    }
}

struct DivJob<'a> {
    num: &'a LaurentPoly,
    den: &'a LaurentPoly,
    ka: &'a [u128],
    kd: &'a [u128],
    packer: &'a Packer,
    qlo: &'a [i32],
    qhi: &'a [i32],
}

impl DivJob<'_> {
    /// Leading-term division. Contributions `q_t · d_j` are accumulated in a hash
    /// map and only distinct pending keys go through the heap. Every new
    /// contribution lies strictly below the key being processed, so a key never
    /// reappears once consumed.
    fn run<C: DivCoeff>(&self, a: &[C], b: &[C]) -> Result<Option<LaurentPoly>> {
        let n = self.num.nvars;
        let inexact = || Error::InexactDivision("nonzero remainder".into());
        let cap = (0..n).map(|i| (self.qhi[i] - self.qlo[i] + 1) as f64).product::<f64>();
        let mut acc: AHashMap<u128, C> = AHashMap::with_capacity(self.ka.len() * 2);
        let mut heap: BinaryHeap<u128> = BinaryHeap::new();
        let mut qexps: Vec<i32> = Vec::new();
        let mut qcoeffs: Vec<Int> = Vec::new();
        let mut buf = vec![0i32; n];
        let d0 = self.den.exponent(0);
        let lead = &b[0];
        let mut ai = 0usize;
        loop {
            let top_a = self.ka.get(ai).copied();
            let top_h = heap.peek().copied();
            let m = match (top_a, top_h) {
                (None, None) => break,
                (Some(x), None) => x,
                (None, Some(y)) => y,
                (Some(x), Some(y)) => x.max(y),
            };
            if top_h == Some(m) {
                heap.pop();
            }
            let mut c = acc.remove(&m).unwrap_or_else(C::zero);
            if top_a == Some(m) {
                c = match c.add(&a[ai]) {
                    Some(v) => v,
                    None => return Ok(None),
                };
                ai += 1;
            }
            if c.is_zero() {
                continue;
            }
            let qc = match c.div_exact(lead) {
                None => return Ok(None),
                Some(None) => return Err(Error::InexactDivision("coefficient not divisible".into())),
                Some(Some(v)) => v,
            };
            self.packer.decode(m, &mut buf);
            for i in 0..n {
                buf[i] -= d0[i];
                if buf[i] < self.qlo[i] || buf[i] > self.qhi[i] {
                    return Err(inexact());
                }
            }
            if qcoeffs.len() as f64 >= cap {
                return Err(inexact());
            }
            let qk = m - self.kd[0];
            for (j, &kj) in self.kd.iter().enumerate().skip(1) {
                let key = qk + kj;
                match acc.entry(key) {
                    std::collections::hash_map::Entry::Occupied(mut o) => match o.get().sub_mul(&qc, &b[j]) {
                        Some(v) => *o.get_mut() = v,
                        None => return Ok(None),
                    },
                    std::collections::hash_map::Entry::Vacant(v) => {
                        match C::zero().sub_mul(&qc, &b[j]) {
                            Some(x) => v.insert(x),
                            None => return Ok(None),
                        };
                        heap.push(key);
                    }
                }
            }
            qexps.extend_from_slice(&buf);
            qcoeffs.push(qc.into_int());
        }
        Ok(Some(LaurentPoly { nvars: n, exps: qexps, coeffs: qcoeffs }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("u{i}")).collect()
    }

    fn p(s: &str, n: usize) -> LaurentPoly {
        LaurentPoly::parse(s, &names(n)).unwrap()
    }

    #[test]
    fn canonical_order_and_render() {
        let f = p("1 + u2 + u1 + u1^2*u3^-1 + 2*u2*u3", 3);
        assert_eq!(f.render(&names(3)), "2*u2*u3 + u1^2*u3^-1 + u1 + u2 + 1");
        assert_eq!(p("u1 - u1", 2), LaurentPoly::zero(2));
        assert_eq!(p("-u1^-2 - 3", 2).render(&names(2)), "-3 - u1^-2");
    }

    #[test]
    fn kronecker_quotient() {
        let u1 = LaurentPoly::var(2, 0);
        let u2 = LaurentPoly::var(2, 1);
        let f = u1.pow(2).add_constant(1).exact_div(&u2).unwrap();
        assert_eq!(f, p("u1^2*u2^-1 + u2^-1", 2));
        assert!(u1.add_constant(1).exact_div(&u2.add_constant(1)).is_err());
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = p("u1^2 + 3*u1*u2^-1 - u3 + 7", 3);
        let b = p("u2 + u3^2 - 2*u1^-1", 3);
        let c = a.mul(&b);
        assert_eq!(c.exact_div(&b).unwrap(), a);
        assert_eq!(c.exact_div(&a).unwrap(), b);
        assert!(c.add_constant(1).exact_div(&a).is_err());
    }

    #[test]
    fn denominators_and_substitution() {
        let f = p("u1^2*u2^-1 + u2^-1", 2);
        assert_eq!(f.denominator_vector(), vec![0, 1]);
        assert_eq!(f.eval_ones(), Int::from(2));
        // u1 -> x1, u2 -> (x1^2+1)/x2 gives back x2.
        let g = vec![LaurentPoly::var(2, 0), f.clone()];
        assert_eq!(f.substitute_as_fraction(&g).unwrap(), LaurentPoly::var(2, 1));
    }

    #[test]
    fn json_round_trip() {
        let f = p("u1^2*u2^-1 - 12345678901234567890123*u2", 2);
        let j = f.to_json(&names(2));
        let s = serde_json::to_string(&j).unwrap();
        let back: PolyJson = serde_json::from_str(&s).unwrap();
        assert_eq!(LaurentPoly::from_json(&back).unwrap(), f);
    }
}
