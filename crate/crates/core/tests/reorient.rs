use euclid_frieze::characters::{cluster_character, reorient_character, reorientation_images};
use euclid_frieze::oracle::{mutate, Seed};
use euclid_frieze::{CanonicalModel, Error, EuclideanType, Lambda, LaurentPoly, ObjectSpec, Quiver, RegularIndex, TransjectiveLabel};
use std::collections::HashSet;

fn identity(q: &Quiver) -> Vec<(String, String)> {
    q.vertices().iter().map(|v| (v.clone(), v.clone())).collect()
}

/// Every cluster variable reachable from the initial seed of `q` in at most `depth` mutations.
fn cluster_variables(q: &Quiver, depth: usize) -> HashSet<LaurentPoly> {
    let start = Seed::initial(q);
    let mut vars: HashSet<LaurentPoly> = start.cluster.iter().cloned().collect();
    let mut layer = vec![(start, usize::MAX)];
    for _ in 0..depth {
        let mut next = Vec::new();
        for (s, last) in &layer {
            for k in (0..s.len()).filter(|&k| k != *last) {
                let t = mutate(s, k).unwrap();
                vars.insert(t.cluster[k].clone());
                next.push((t, k));
            }
        }
        layer = next;
    }
    vars
}

#[test]
fn d4_with_a_reversed_arm_lands_on_cluster_variables() {
    let m = CanonicalModel::build(EuclideanType::D(1)).unwrap();
    let q = Quiver::from_named(
        &["a1", "a2", "c1", "b1", "b2"],
        &[("c1", "a1"), ("a2", "c1"), ("c1", "b1"), ("c1", "b2")],
    )
    .unwrap();
    let (_, section) = reorientation_images(&m, &q, &identity(&q)).unwrap();
    assert_eq!(section, vec![1, 0, 0, 0, 0]);
    let known = cluster_variables(&q, 5);
    let c1 = m.vertex("c1").unwrap();
    let a1 = m.vertex("a1").unwrap();
    let b2 = m.vertex("b2").unwrap();
    let objects = [
        ObjectSpec::Transjective(TransjectiveLabel::ShiftedProjective(c1)),
        ObjectSpec::Transjective(TransjectiveLabel::PostProjective(c1, 0)),
        ObjectSpec::Transjective(TransjectiveLabel::PostProjective(a1, 1)),
        ObjectSpec::Transjective(TransjectiveLabel::PreInjective(b2, 0)),
        ObjectSpec::Regular(RegularIndex::new(Lambda::Zero, 0, 1)),
        ObjectSpec::Regular(RegularIndex::new(Lambda::Infinity, 1, 1)),
    ];
    for obj in &objects {
        let x = reorient_character(&m, &q, &identity(&q), obj).unwrap();
        assert!(x.all_coefficients_positive(), "{obj:?}");
        assert!(known.contains(&x), "{obj:?} gave {}, not reached by mutation", x.render(&m.var_names()));
    }
}

#[test]
fn kronecker_with_swapped_names_permutes_variables() {
    let m = CanonicalModel::build(EuclideanType::A(1, 1)).unwrap();
    let q = Quiver::from_named(&["0", "1"], &[("1", "0"), ("1", "0")]).unwrap();
    let map = vec![("0".to_string(), "1".to_string()), ("1".to_string(), "0".to_string())];
    for obj in [
        ObjectSpec::Transjective(TransjectiveLabel::PostProjective(0, 2)),
        ObjectSpec::Transjective(TransjectiveLabel::PreInjective(1, 1)),
        ObjectSpec::Regular(RegularIndex::new(Lambda::Homogeneous, 0, 2)),
    ] {
        let direct = cluster_character(&m, &obj).unwrap();
        let swapped = LaurentPoly::from_terms(2, direct.terms().map(|(e, c)| (vec![e[1], e[0]], c.clone())));
        assert_eq!(reorient_character(&m, &q, &map, &obj).unwrap(), swapped, "{obj:?}");
    }
}

#[test]
fn mismatched_graphs_are_rejected() {
    let m = CanonicalModel::build(EuclideanType::D(1)).unwrap();
    let path = Quiver::from_named(
        &["a1", "a2", "c1", "b1", "b2"],
        &[("a1", "c1"), ("a2", "c1"), ("c1", "b1"), ("b1", "b2")],
    )
    .unwrap();
    let obj = ObjectSpec::Transjective(TransjectiveLabel::ShiftedProjective(0));
    assert!(matches!(reorient_character(&m, &path, &identity(&path), &obj), Err(Error::GraphMismatch(_))));
}
