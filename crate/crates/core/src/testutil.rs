//! Shared fixtures for unit tests.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{BoundQuiverAlgebra, Quiver, Relation};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::rep::Representation;

/// 1 -a-> 2, no relations.
pub(crate) fn a2(field: Field) -> BoundQuiverAlgebra {
    let q = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![("a".into(), "1".into(), "2".into())],
    )
    .unwrap();
    BoundQuiverAlgebra::new(q, vec![], field).unwrap()
}

/// 1 -a-> 2 -b-> 3, no relations.
pub(crate) fn a3(field: Field) -> BoundQuiverAlgebra {
    let q = Quiver::new(
        vec!["1".into(), "2".into(), "3".into()],
        vec![
            ("a".into(), "1".into(), "2".into()),
            ("b".into(), "2".into(), "3".into()),
        ],
    )
    .unwrap();
    BoundQuiverAlgebra::new(q, vec![], field).unwrap()
}

/// 1 -a-> 2 -b-> 3 -c-> 4 -d-> 5 -e-> 6 with cba = edc = 0.
pub(crate) fn nakayama6(field: Field) -> BoundQuiverAlgebra {
    let names: Vec<String> = (1..=6).map(|i| i.to_string()).collect();
    let arrows = vec![
        ("a".into(), "1".into(), "2".into()),
        ("b".into(), "2".into(), "3".into()),
        ("c".into(), "3".into(), "4".into()),
        ("d".into(), "4".into(), "5".into()),
        ("e".into(), "5".into(), "6".into()),
    ];
    let q = Quiver::new(names, arrows).unwrap();
    let one = field.one();
    // cba means: apply a, then b, then c
    let rel1 = Relation { terms: vec![(one.clone(), vec![0, 1, 2])] };
    let rel2 = Relation { terms: vec![(one, vec![2, 3, 4])] };
    BoundQuiverAlgebra::new(q, vec![rel1, rel2], field).unwrap()
}

/// Interval module through chain positions `lo..=hi` (0-based vertex
/// indices), inner arrow maps the identity.
pub(crate) fn interval(alg: &BoundQuiverAlgebra, lo: usize, hi: usize) -> Representation {
    let q = alg.quiver();
    let mut dims = vec![0; alg.vertex_count()];
    for v in lo..=hi {
        dims[v] = 1;
    }
    let maps = (0..q.arrow_count())
        .map(|a| {
            let (i, j) = (q.source(a), q.target(a));
            let mut m = Matrix::zero(alg.field(), dims[j], dims[i]);
            if dims[i] == 1 && dims[j] == 1 {
                m.set(0, 0, alg.field().one());
            }
            m
        })
        .collect();
    Representation { dims, maps }
}

use crate::complex::{AlgMatrix, ProjComplex};

fn arrow_entry(alg: &BoundQuiverAlgebra, source: usize, word: &[usize]) -> AlgMatrix {
    let idx = alg.path_index(source, word).expect("path survives the relations");
    let mut m = AlgMatrix::zero(1, 1);
    m.set(0, 0, crate::algebra::AlgebraElement::basis_element(alg, idx));
    m
}

/// The six two-term summands of the running Nakayama silting fixture.
pub(crate) fn nakayama6_silting(alg: &BoundQuiverAlgebra) -> Vec<ProjComplex> {
    vec![
        ProjComplex::stalk_projective(0, 0),                                  // P_1
        ProjComplex::two_term(vec![1], vec![0], arrow_entry(alg, 0, &[0])),   // P_2 -> P_1 via a
        ProjComplex::two_term(vec![2], vec![0], arrow_entry(alg, 0, &[0, 1])), // P_3 -> P_1 via ba
        ProjComplex::two_term(vec![5], vec![3], arrow_entry(alg, 3, &[3, 4])), // P_6 -> P_4 via ed
        ProjComplex::two_term(vec![5], vec![4], arrow_entry(alg, 4, &[4])),   // P_6 -> P_5 via e
        ProjComplex::stalk_projective(5, -1),                                 // Σ P_6
    ]
}

/// Two-term tilting fixture over A2: (0 -> P_1) ⊕ (P_2 -> P_1).
pub(crate) fn a2_silting(alg: &BoundQuiverAlgebra) -> Vec<ProjComplex> {
    vec![
        ProjComplex::stalk_projective(0, 0),
        ProjComplex::two_term(vec![1], vec![0], arrow_entry(alg, 0, &[0])),
    ]
}
