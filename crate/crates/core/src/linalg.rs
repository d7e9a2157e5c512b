//! Small exact linear algebra over the integers and rationals.

use num_integer::Integer;
use std::fmt;

/// Dense square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, data: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), n, "matrix must be square");
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<i64> {
        self.data[i * self.n..(i + 1) * self.n].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn neg(&self) -> Self {
        IntMatrix { n: self.n, data: self.data.iter().map(|x| -x).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut r = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    r.data[i * n + j] += a * o.get(k, j);
                }
            }
        }
        r
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

/// Exact rational with `i128` parts, always reduced with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Ratio {
    pub num: i128,
    pub den: i128,
}

impl Ratio {
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0);
        let g = num.gcd(&den);
        let s = if den < 0 { -1 } else { 1 };
        Ratio { num: s * num / g, den: s * den / g }
    }

    pub fn int(v: i128) -> Self {
        Ratio { num: v, den: 1 }
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn add(self, o: Ratio) -> Ratio {
        Ratio::new(self.num * o.den + o.num * self.den, self.den * o.den)
    }

    pub fn sub(self, o: Ratio) -> Ratio {
        Ratio::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }

    pub fn mul(self, o: Ratio) -> Ratio {
        Ratio::new(self.num * o.num, self.den * o.den)
    }

    pub fn div(self, o: Ratio) -> Ratio {
        Ratio::new(self.num * o.den, self.den * o.num)
    }
}

/// Reduced row echelon form of a rectangular rational matrix; returns pivot columns.
pub fn rref(m: &mut [Vec<Ratio>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c];
        for x in m[r].iter_mut() {
            *x = x.div(inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in 0..cols {
                    let v = m[r][j].mul(f);
                    m[i][j] = m[i][j].sub(v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn to_ratio_rows(rows: &[Vec<i64>]) -> Vec<Vec<Ratio>> {
    rows.iter().map(|r| r.iter().map(|&x| Ratio::int(x as i128)).collect()).collect()
}

/// Primitive integer basis of the right kernel `{x : A x = 0}` of a rectangular matrix.
pub fn integer_kernel(rows: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    let mut m = to_ratio_rows(rows);
    let pivots = if m.is_empty() { Vec::new() } else { rref(&mut m) };
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![Ratio::int(0); cols];
        v[f] = Ratio::int(1);
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = Ratio::int(0).sub(m[r][f]);
        }
        basis.push(primitive(&v));
    }
    basis
}

/// Scales a rational vector to a primitive integer vector.
pub fn primitive(v: &[Ratio]) -> Vec<i64> {
    let l = v.iter().fold(1i128, |acc, x| acc.lcm(&x.den));
    let ints: Vec<i128> = v.iter().map(|x| x.num * (l / x.den)).collect();
    let g = ints.iter().fold(0i128, |acc, x| acc.gcd(x));
    ints.iter().map(|x| (if g == 0 { *x } else { x / g }) as i64).collect()
}

/// Rank of a rectangular integer matrix.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m = to_ratio_rows(rows);
    rref(&mut m).len()
}

/// Solves `A x = b` over the rationals; `None` if inconsistent. Free variables are set to zero.
pub fn solve_rational(rows: &[Vec<i64>], b: &[i64]) -> Option<Vec<Ratio>> {
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut m: Vec<Vec<Ratio>> = rows
        .iter()
        .zip(b)
        .map(|(r, &bi)| {
            let mut v: Vec<Ratio> = r.iter().map(|&x| Ratio::int(x as i128)).collect();
            v.push(Ratio::int(bi as i128));
            v
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Ratio::int(0); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m[r][cols];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_rank_one() {
        let k = integer_kernel(&[vec![1, 2, 3], vec![2, 4, 6]], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(v[0] + 2 * v[1] + 3 * v[2], 0);
        }
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
    }

    #[test]
    fn solve_small_system() {
        let x = solve_rational(&[vec![2, 1], vec![1, 3]], &[3, 5]).unwrap();
        assert_eq!(x, vec![Ratio::new(4, 5), Ratio::new(7, 5)]);
        assert!(solve_rational(&[vec![1, 1], vec![1, 1]], &[1, 2]).is_none());
    }

    #[test]
    fn matrix_product() {
        let a = IntMatrix::from_rows(&[vec![1, 2], vec![0, 1]]);
        let b = IntMatrix::from_rows(&[vec![1, -2], vec![0, 1]]);
        assert_eq!(a.mul(&b), IntMatrix::identity(2));
        assert_eq!(a.apply(&[1, 1]), vec![3, 1]);
    }
}
