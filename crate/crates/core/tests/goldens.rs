//! Displayed regular characters of the canonical Ẽ₆ model.

mod common;

use common::{expected, E6_GOLDENS};
use euclid_frieze::{CanonicalModel, EuclideanType, Evaluator, Lambda, ObjectSpec, RegularIndex};

#[test]
fn e6_quasi_simples_match_the_displayed_expansions() {
    let m = CanonicalModel::build(EuclideanType::E6).unwrap();
    let names = m.var_names();
    let mut ev = Evaluator::new(&m);
    for (lambda, k, den, num) in E6_GOLDENS {
        let got = ev.character(&ObjectSpec::Regular(RegularIndex::new(lambda, k, 1))).unwrap();
        let want = expected(&names, den, num);
        assert_eq!(got, want, "N_{lambda}[{k}]:\n got  {}\n want {}", got.render(&names), want.render(&names));
    }
}

#[test]
fn displayed_expansions_are_positive() {
    let m = CanonicalModel::build(EuclideanType::E6).unwrap();
    let names = m.var_names();
    for (lambda, k, den, num) in E6_GOLDENS {
        assert!(expected(&names, den, num).all_coefficients_positive(), "N_{lambda}[{k}]");
    }
}

#[test]
fn second_row_of_the_rank_three_tube() {
    let m = CanonicalModel::build(EuclideanType::E6).unwrap();
    let names = m.var_names();
    let mut ev = Evaluator::new(&m);
    let r = ev.quasi_simple(Lambda::One, 0).unwrap();
    let r1 = ev.quasi_simple(Lambda::One, 1).unwrap();
    let r2 = ev.regular(RegularIndex::new(Lambda::One, 0, 2)).unwrap();
    assert_eq!(r2, r.mul(&r1).add_constant(-1));
    assert!(r2.all_coefficients_positive(), "{}", r2.render(&names));
}
