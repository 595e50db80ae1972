use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntegerMatrix;

/// Row-style Hermite normal form: returns `(H, U)` with `U` unimodular,
/// `U · A = H`, `H` in row echelon form with positive pivots and entries
/// above each pivot reduced into `[0, pivot)`.
///
/// `H` is a complete invariant of the orbit of `A` under left multiplication
/// by `GL(m, Z)`.
pub fn hermite_normal_form(a: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix) {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntegerMatrix::identity(m);
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        // Euclid down the column until only the pivot row is nonzero.
        loop {
            let pivot = (row..m)
                .filter(|&i| !h[(i, col)].is_zero())
                .min_by(|&x, &y| h[(x, col)].abs().cmp(&h[(y, col)].abs()).then(x.cmp(&y)));
            let Some(p) = pivot else { break };
            h.swap_rows(row, p);
            u.swap_rows(row, p);
            let mut done = true;
            for i in row + 1..m {
                if !h[(i, col)].is_zero() {
                    let q = -h[(i, col)].div_floor(&h[(row, col)]);
                    h.add_row_multiple(i, row, &q);
                    u.add_row_multiple(i, row, &q);
                    done &= h[(i, col)].is_zero();
                }
            }
            if done {
                break;
            }
        }
        if h[(row, col)].is_zero() {
            continue;
        }
        if h[(row, col)].is_negative() {
            h.negate_row(row);
            u.negate_row(row);
        }
        for i in 0..row {
            let q = -h[(i, col)].div_floor(&h[(row, col)]);
            if !q.is_zero() {
                h.add_row_multiple(i, row, &q);
                u.add_row_multiple(i, row, &q);
            }
        }
        row += 1;
    }
    (h, u)
}
