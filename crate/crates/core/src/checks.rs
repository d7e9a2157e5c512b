//! Property checks shared by the command-line verifier and the test suites.

use crate::characters::{Evaluator, ObjectSpec, AUTO_MESH_DEPTH};
use crate::error::Result;
use crate::int::Int;
use crate::modular::{Field, ModBatch, PRIMES};
use crate::oracle::{
    default_primes, explicit_quasi_simples, grassmannian_chi, slice_transport_check, tridiagonal_det,
};
use crate::quiver::{CanonicalModel, DimVec, EuclideanType};
use crate::reconstruct::eval_mod;
use crate::transjective::{integer_frieze, recognize, symbolic_frieze, Frieze, TransjectiveLabel, ZQPoint, DEFAULT_WINDOW};
use crate::tubes::{check_tube_consistency, chebyshev, dim_quasi_simple, exchange_points, Lambda};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Number of items checked and the first failure, if any.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub checked: usize,
    pub failure: Option<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn fail(mut self, msg: String) -> Self {
        self.failure.get_or_insert(msg);
        self
    }
}

/// Mesh relations of the symbolic frieze on `|n| ≤ symbolic`, and of the
/// integer frieze on `|n| ≤ integer` together with positivity of its values.
pub fn mesh_window(model: &CanonicalModel, symbolic: i64, integer: i64) -> Result<Outcome> {
    let mut out = Outcome::default();
    let n = model.n();
    let mut sym = symbolic_frieze(model);
    for m in (1 - symbolic)..=symbolic {
        for i in 0..n {
            if !sym.mesh_residual_is_one(m, i)? {
                return Ok(out.fail(format!("symbolic mesh ending at ({m}, {})", model.quiver.name(i))));
            }
            out.checked += 1;
        }
    }
    let mut int = integer_frieze(model);
    for m in (1 - integer)..=integer {
        for i in 0..n {
            if !int.mesh_residual_is_one(m, i)? {
                return Ok(out.fail(format!("integer mesh ending at ({m}, {})", model.quiver.name(i))));
            }
            out.checked += 1;
        }
    }
    for m in -integer..=integer {
        for i in 0..n {
            let v = int.value(ZQPoint::new(m, i))?;
            if v <= Int::zero() {
                return Ok(out.fail(format!("integer frieze value {v} at ({m}, {})", model.quiver.name(i))));
            }
        }
    }
    Ok(out)
}

/// Three-term recurrence against the tridiagonal determinant on `samples`
/// random integer sequences of length `1..=max_len`.
pub fn chebyshev_cross_check(samples: usize, max_len: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Outcome::default();
    for _ in 0..samples {
        let l = rng.gen_range(1..=max_len);
        let t: Vec<Int> = (0..l).map(|_| Int::from(rng.gen_range(-50i64..=50))).collect();
        let rec = chebyshev(&Int::one(), &t);
        let det = tridiagonal_det(&t);
        if rec != det {
            return out.fail(format!("inputs {t:?}: recurrence {rec}, determinant {det}"));
        }
        out.checked += 1;
    }
    out
}

pub fn mutation(model: &CanonicalModel, n_max: i64) -> Outcome {
    let r = slice_transport_check(model, n_max);
    Outcome { checked: r.slices_checked, failure: r.divergence }
}

/// Point-count oracle against both Euler routes on the explicit quasi-simples of `model`.
pub fn grassmann(model: &CanonicalModel) -> Result<Outcome> {
    let mut out = Outcome::default();
    let mut ev = Evaluator::new(model);
    for x in explicit_quasi_simples(model)? {
        let oracle = grassmannian_chi(&x.module, &default_primes(&x.module))?;
        let frieze = ev.euler_characteristic(&ObjectSpec::Regular(x.index))?;
        if oracle != frieze {
            return Ok(out.fail(format!(
                "{} ({}, k = {}): point counts give {oracle}, the frieze gives {frieze}",
                x.name, x.index.lambda, x.index.k
            )));
        }
        out.checked += 1;
    }
    Ok(out)
}

/// A printed dimension vector and the label stated for it.
#[derive(Clone, Debug)]
pub struct PrintedRow {
    pub what: &'static str,
    pub dim: DimVec,
    pub label: TransjectiveLabel,
}

/// The dimension rows printed for the canonical `Ẽ₆` tubes, with the labels
/// the accompanying text assigns to them.
pub fn printed_rows(model: &CanonicalModel) -> Vec<PrintedRow> {
    use TransjectiveLabel::{PostProjective as Post, PreInjective as Pre};
    if model.ty != EuclideanType::E6 {
        return Vec::new();
    }
    let v = |s: &str| model.quiver.vertex_index(s).unwrap();
    let row = |s: &str| s.bytes().map(|b| i64::from(b - b'0')).collect::<DimVec>();
    vec![
        PrintedRow { what: "rank-2 tube B", dim: row("1101011"), label: Pre(v("7"), 3) },
        PrintedRow { what: "rank-2 tube B'", dim: row("1101000"), label: Post(v("7"), 1) },
        PrintedRow { what: "rank-3 tube B", dim: row("1101011"), label: Pre(v("5"), 2) },
        PrintedRow { what: "rank-3 tube B'", dim: row("1110000"), label: Post(v("3"), 0) },
        PrintedRow { what: "homogeneous B", dim: row("3212122"), label: Pre(v("7"), 6) },
        PrintedRow { what: "homogeneous B'", dim: row("3212111"), label: Post(v("7"), 4) },
    ]
}

/// Printed quasi-simple rows of `Ẽ₆`: `(tube, dim N)`.
pub fn printed_mouths(model: &CanonicalModel) -> Vec<(Lambda, DimVec)> {
    if model.ty != EuclideanType::E6 {
        return Vec::new();
    }
    vec![(Lambda::Zero, vec![1, 1, 0, 1, 0, 1, 0]), (Lambda::One, vec![1, 1, 1, 0, 0, 1, 0])]
}

/// Tube consistency for every exceptional tube.
pub fn tube_sums(model: &CanonicalModel) -> Outcome {
    let mut out = Outcome::default();
    for t in model.tubes.iter().filter(|t| t.lambda != Lambda::Homogeneous) {
        if let Err(e) = check_tube_consistency(model, t) {
            return out.fail(e.to_string());
        }
        out.checked += 1;
    }
    out
}

/// Printed dimension rows against recognition and against the tube data.
pub fn printed_tables(model: &CanonicalModel) -> Outcome {
    let mut out = Outcome::default();
    let q = &model.quiver;
    for r in printed_rows(model) {
        match recognize(model, &r.dim) {
            Ok(l) if l == r.label => out.checked += 1,
            Ok(l) => {
                out = out.fail(format!(
                    "{}: {:?} is {}, stated as {}",
                    r.what,
                    r.dim,
                    l.display(q),
                    r.label.display(q)
                ))
            }
            Err(e) => out = out.fail(format!("{}: {e}", r.what)),
        }
    }
    for (lambda, d) in printed_mouths(model) {
        match model.tube(lambda).and_then(|t| dim_quasi_simple(model, t, 0)) {
            Ok(ours) if ours == d => out.checked += 1,
            Ok(ours) => out = out.fail(format!("tube {lambda}: printed dim N {d:?}, computed {ours:?}")),
            Err(e) => out = out.fail(e.to_string()),
        }
    }
    out
}

pub fn tables(model: &CanonicalModel) -> Outcome {
    let a = tube_sums(model);
    let b = printed_tables(model);
    Outcome { checked: a.checked + b.checked, failure: a.failure.or(b.failure) }
}

/// `X_{N_λ[k]} · f(S_e[k]) = f(B_λ[k]) + f(B'_λ[k])`: as Laurent polynomials
/// when the three points are within the mesh depth, otherwise at random points
/// modulo a prime.
pub fn exchange_identity(ev: &mut Evaluator, lambda: Lambda, k: i64) -> Result<bool> {
    let model = ev.model();
    let tube = *model.tube(lambda)?;
    let x = ev.quasi_simple(lambda, k)?;
    let (b, bp, s) = exchange_points(model, &tube, k)?;
    let depth = [b.n, bp.n, s.n].iter().map(|v| v.abs()).max().unwrap();
    if depth <= AUTO_MESH_DEPTH {
        let mut f = symbolic_frieze(model);
        return Ok(x.mul(&f.value(s)?) == f.value(b)?.add(&f.value(bp)?));
    }
    let field = Field::new(PRIMES[PRIMES.len() - 1]);
    let mut rng = ChaCha8Rng::seed_from_u64(0xe1c4);
    let pts: Vec<Vec<u64>> =
        (0..8).map(|_| (0..model.n()).map(|_| field.from_u64(rng.gen_range(1..field.modulus()))).collect()).collect();
    let init = (0..model.n()).map(|i| ModBatch::new(field, pts.iter().map(|p| p[i]).collect())).collect();
    let mut f: Frieze<ModBatch> = Frieze::new(&model.quiver, init).with_window(depth.max(DEFAULT_WINDOW));
    let (fb, fbp, fs) = (f.value(b)?, f.value(bp)?, f.value(s)?);
    Ok(pts.iter().enumerate().all(|(j, p)| {
        field.mul(eval_mod(&x, &field, p), fs.values[j]) == field.add(fb.values[j], fbp.values[j])
    }))
}
