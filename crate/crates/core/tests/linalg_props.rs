//! Property tests for the exact linear algebra kernels.

use proptest::prelude::*;
use tilt_core::field::Field;
use tilt_core::matrix::Matrix;

fn small_matrix(field: Field) -> impl Strategy<Value = Matrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-4i64..=4, r * c).prop_map(move |entries| {
            let rows: Vec<Vec<_>> = entries
                .chunks(c)
                .map(|chunk| chunk.iter().map(|&n| field.from_i64(n)).collect())
                .collect();
            Matrix::from_rows(field, rows)
        })
    })
}

/// Exhaustive minor-rank oracle: the rank is the largest size of a square
/// submatrix with invertible restriction.
fn minor_rank(m: &Matrix) -> usize {
    let rows: Vec<usize> = (0..m.rows).collect();
    let cols: Vec<usize> = (0..m.cols).collect();
    for size in (1..=m.rows.min(m.cols)).rev() {
        for rsel in combinations(&rows, size) {
            for csel in combinations(&cols, size) {
                let mut sub = Matrix::zero(m.field, size, size);
                for (i, &r) in rsel.iter().enumerate() {
                    for (j, &c) in csel.iter().enumerate() {
                        sub.set(i, j, m.get(r, c).clone());
                    }
                }
                if sub.rank() == size {
                    return size;
                }
            }
        }
    }
    0
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

proptest! {
    #[test]
    fn kernel_annihilates_and_rank_nullity(m in small_matrix(Field::Rationals)) {
        let k = m.kernel_basis();
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(m.rank() + k.cols, m.cols);
        prop_assert_eq!(k.rank(), k.cols);
    }

    #[test]
    fn rref_is_idempotent(m in small_matrix(Field::Rationals)) {
        let r = m.rref();
        let again = r.matrix.rref();
        prop_assert_eq!(&again.matrix, &r.matrix);
        prop_assert_eq!(again.pivots, r.pivots);
    }

    #[test]
    fn solve_agrees_with_multiplication(
        m in small_matrix(Field::Rationals),
        xs in proptest::collection::vec(-3i64..=3, 1usize..=4),
    ) {
        // build a consistent system and check the returned solution solves it
        let x_len = m.cols.min(xs.len()).max(1);
        let mut x = Matrix::zero(Field::Rationals, m.cols, 1);
        for i in 0..m.cols {
            x.set(i, 0, Field::Rationals.from_i64(xs[i % x_len]));
        }
        let b = m.mul(&x);
        let sol = m.solve(&b).unwrap().expect("consistent by construction");
        prop_assert_eq!(m.mul(&sol), b);
    }

    #[test]
    fn fp_rank_matches_minor_enumeration(
        m in (2u64..=7).prop_filter("prime", |p| [2, 3, 5, 7].contains(p))
            .prop_flat_map(|p| small_matrix(Field::prime(p).unwrap()).prop_map(move |m| (p, m))),
    ) {
        let (_, m) = m;
        // only up to 3x3 to keep the minor enumeration honest and fast
        if m.rows <= 3 && m.cols <= 3 {
            prop_assert_eq!(m.rank(), minor_rank(&m));
        }
    }

    #[test]
    fn rational_rank_matches_minor_enumeration(m in small_matrix(Field::Rationals)) {
        if m.rows <= 3 && m.cols <= 3 {
            prop_assert_eq!(m.rank(), minor_rank(&m));
        }
    }
}
