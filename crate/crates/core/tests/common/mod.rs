//! Data shared by the integration targets.

#![allow(dead_code)]

use euclid_frieze::{Lambda, LaurentPoly};

/// `(tube, offset, denominator, numerator)` of the displayed Ẽ₆ quasi-simples.
pub const E6_GOLDENS: [(Lambda, i64, &str, &str); 8] = [
    (
        Lambda::Zero,
        0,
        "u1*u2*u4*u6",
        "u2*u3*u4*u5*u6*u7 + u1^3 + u1^2*u3 + u1^2*u5 + u1*u3*u5 + u1^2*u7 + u1*u3*u7 + u1*u5*u7 + u3*u5*u7",
    ),
    (
        Lambda::Zero,
        1,
        "u1^2*u2*u3*u4*u5*u6*u7",
        "u2^2*u3*u4^2*u5*u6^2*u7 + u1*u2*u3*u4*u5*u6^2 + u1*u2*u3*u4^2*u6*u7 + u1*u2^2*u4*u5*u6*u7 \
         + u1^3*u2*u4*u6 + u1*u2*u3*u4*u5*u6 + u1*u2*u3*u4*u6*u7 + u1*u2*u4*u5*u6*u7 \
         + 2*u2*u3*u4*u5*u6*u7 + u1^3*u2*u4 + u1^3*u2*u6 + u1^3*u4*u6 + u1^2*u3*u4*u6 \
         + u1^2*u2*u5*u6 + u1^2*u2*u4*u7 + u1^3*u2 + u1^3*u4 + u1^2*u3*u4 + u1^2*u2*u5 \
         + u1^3*u6 + u1^2*u3*u6 + u1^2*u5*u6 + u1*u3*u5*u6 + u1^2*u2*u7 + u1^2*u4*u7 \
         + u1*u3*u4*u7 + u1*u2*u5*u7 + u1^3 + u1^2*u3 + u1^2*u5 + u1*u3*u5 \
         + u1^2*u7 + u1*u3*u7 + u1*u5*u7 + u3*u5*u7",
    ),
    (
        Lambda::One,
        0,
        "u1*u2*u3*u6",
        "u2*u3*u4*u6*u7 + u1^2*u2 + u1*u2*u7 + u1^2 + u1*u3 + u1*u7 + u3*u7",
    ),
    (
        Lambda::One,
        1,
        "u1*u2*u4*u5",
        "u2*u3*u4*u5*u6 + u1^2*u4 + u1*u3*u4 + u1^2 + u1*u3 + u1*u5 + u3*u5",
    ),
    (
        Lambda::One,
        2,
        "u1*u4*u6*u7",
        "u2*u4*u5*u6*u7 + u1^2*u6 + u1*u5*u6 + u1^2 + u1*u5 + u1*u7 + u5*u7",
    ),
    (
        Lambda::Infinity,
        0,
        "u1*u2*u6*u7",
        "u2*u3*u4*u6*u7 + u1^2*u6 + u1*u3*u6 + u1^2 + u1*u3 + u1*u7 + u3*u7",
    ),
    (
        Lambda::Infinity,
        1,
        "u1*u4*u5*u6",
        "u2*u4*u5*u6*u7 + u1^2*u4 + u1*u4*u7 + u1^2 + u1*u5 + u1*u7 + u5*u7",
    ),
    (
        Lambda::Infinity,
        2,
        "u1*u2*u3*u4",
        "u2*u3*u4*u5*u6 + u1^2*u2 + u1*u2*u5 + u1^2 + u1*u3 + u1*u5 + u3*u5",
    ),
];

pub fn expected(names: &[String], den: &str, num: &str) -> LaurentPoly {
    let num = LaurentPoly::parse(num, names).unwrap();
    let den = LaurentPoly::parse(den, names).unwrap();
    num.exact_div(&den).unwrap()
}
