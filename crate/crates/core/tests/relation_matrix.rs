use tourney_core::census::{census5, class_table, r_quantities, recover_matrix};
use tourney_core::{Seed, Tournament};

/// The published 14×12 relation matrix, rows in quantity order. Its column
/// order follows a drawing we cannot reconstruct, so only the multiset of
/// columns is compared.
const PUBLISHED: [[i128; 12]; 14] = [
    [1, 0, 0, 3, 0, 2, 0, 0, 0, 0, 0, 0],
    [0, 3, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0],
    [1, 0, 2, 3, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 3, 1, 1, 1, 0, 0, 0, 0],
    [1, 0, 0, 0, 3, 2, 0, 0, 0, 0, 0, 0],
    [1, 3, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 0],
    [1, 3, 0, 0, 3, 0, 1, 3, 0, 1, 0, 0],
    [0, 0, 1, 3, 0, 1, 0, 0, 1, 2, 3, 5],
    [0, 0, 2, 0, 0, 0, 1, 1, 1, 2, 3, 0],
    [0, 0, 0, 0, 0, 2, 1, 1, 1, 2, 3, 0],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 3, 2],
];

fn sorted_columns(m: &[[i128; 12]; 14]) -> Vec<[i128; 14]> {
    let mut cols: Vec<[i128; 14]> = (0..12).map(|j| std::array::from_fn(|i| m[i][j])).collect();
    cols.sort();
    cols
}

#[test]
fn recovered_matrix_equals_published_up_to_column_order() {
    assert_eq!(
        sorted_columns(&recover_matrix().m),
        sorted_columns(&PUBLISHED)
    );
}

#[test]
fn published_matrix_satisfies_row_relation() {
    let m = tourney_core::census::RelationMatrix { m: PUBLISHED };
    assert!(m.row_relation_holds());
}

#[test]
fn quantities_are_linear_in_the_census() {
    let m = recover_matrix();
    for i in 0..100u64 {
        let s = Seed(2024).derive(i);
        let n = 5 + (i % 6) as usize;
        let t = Tournament::random(n, 0.5, s).unwrap();
        assert_eq!(r_quantities(&t).values, m.predict(&census5(&t)), "{t}");
    }
}

#[test]
fn class_sizes_sum_to_all_labelings() {
    let table = class_table();
    let mut sizes = table.sizes.clone();
    sizes.sort();
    // 5!/|Aut(T)| for the twelve classes
    assert_eq!(
        sizes,
        vec![24, 40, 40, 40, 40, 120, 120, 120, 120, 120, 120, 120]
    );
}
