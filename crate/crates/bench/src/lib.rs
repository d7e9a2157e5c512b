//! Shared fixtures for the criterion benches.

use euclid_frieze::{CanonicalModel, EuclideanType, Lambda, ObjectSpec, RegularIndex};

pub fn model(t: EuclideanType) -> CanonicalModel {
    CanonicalModel::build(t).expect("canonical model")
}

/// The quasi-simple at the mouth of a homogeneous tube.
pub fn homogeneous_mouth() -> ObjectSpec {
    ObjectSpec::Regular(RegularIndex::new(Lambda::Homogeneous, 0, 1))
}
