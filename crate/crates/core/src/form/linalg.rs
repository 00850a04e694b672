//! Dense Gaussian elimination over `F_p`.

use super::field::PrimeField;

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref(rows: &mut [Vec<u32>], f: PrimeField) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let k = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x = f.sub(*x, f.mul(k, y));
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rank(mut rows: Vec<Vec<u32>>, f: PrimeField) -> usize {
    rref(&mut rows, f).len()
}

/// Basis of `{x : A x = 0}`, one vector per free column.
pub(crate) fn kernel(mut rows: Vec<Vec<u32>>, ncols: usize, f: PrimeField) -> Vec<Vec<u32>> {
    let pivots = rref(&mut rows, f);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&j| !is_pivot[j])
        .map(|j| {
            let mut x = vec![0; ncols];
            x[j] = 1;
            for (k, &c) in pivots.iter().enumerate() {
                x[c] = f.neg(rows[k][j]);
            }
            x
        })
        .collect()
}
