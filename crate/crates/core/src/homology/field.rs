//! Arithmetic and matrix rank over `GF(q)` for primes `q < 2^32`.

/// Largest matrix (rows × columns) reduced densely.
const DENSE_CELL_LIMIT: usize = 1 << 24;
/// Column limit for the dense path.
const DENSE_COLUMN_LIMIT: usize = 4096;

/// Sparse column: `(row, value)` pairs sorted by row, values in `1..q`.
pub type SparseColumn = Vec<(u32, u64)>;

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, q: u64) -> u64 {
    let mut acc = 1u64;
    base %= q;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        exp >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, q: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(q));
    pow_mod(a, q - 2, q)
}

/// Rank of the matrix given by its columns.
pub fn rank(rows: usize, columns: &[SparseColumn], q: u64) -> usize {
    if columns.is_empty() || rows == 0 {
        return 0;
    }
    if columns.len() <= DENSE_COLUMN_LIMIT && rows.saturating_mul(columns.len()) <= DENSE_CELL_LIMIT {
        dense_rank(rows, columns, q)
    } else {
        sparse_rank(rows, columns, q)
    }
}

/// Gaussian elimination on the transposed matrix (one dense row per column).
pub fn dense_rank(rows: usize, columns: &[SparseColumn], q: u64) -> usize {
    let mut m: Vec<Vec<u64>> = columns
        .iter()
        .map(|col| {
            let mut row = vec![0u64; rows];
            for &(r, v) in col {
                row[r as usize] = v;
            }
            row
        })
        .collect();
    let mut rank = 0;
    for pivot_col in 0..rows {
        let Some(p) = (rank..m.len()).find(|&i| m[i][pivot_col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = inv_mod(m[rank][pivot_col], q);
        for x in m[rank][pivot_col..].iter_mut() {
            *x = *x * inv % q;
        }
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            let factor = row[pivot_col];
            if factor == 0 {
                continue;
            }
            for (x, &y) in row[pivot_col..].iter_mut().zip(&pivot_row[pivot_col..]) {
                *x = (*x + q - factor * y % q) % q;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Left-to-right column reduction keyed on the lowest nonzero row.
pub fn sparse_rank(rows: usize, columns: &[SparseColumn], q: u64) -> usize {
    // pivot_owner[row] = index into `reduced` of the column whose low is `row`
    let mut pivot_owner = vec![usize::MAX; rows];
    let mut reduced: Vec<SparseColumn> = Vec::new();
    let mut scratch = Vec::new();
    for col in columns {
        let mut cur = col.clone();
        while let Some(&(low, low_val)) = cur.last() {
            let owner = pivot_owner[low as usize];
            if owner == usize::MAX {
                let inv = inv_mod(low_val, q);
                for e in cur.iter_mut() {
                    e.1 = e.1 * inv % q;
                }
                pivot_owner[low as usize] = reduced.len();
                reduced.push(cur);
                break;
            }
            // pivot columns are normalised to have low value 1
            axpy(&mut cur, &reduced[owner], q - low_val, q, &mut scratch);
        }
    }
    reduced.len()
}

/// `x += a * y` over GF(q), dropping zeros.
fn axpy(x: &mut SparseColumn, y: &SparseColumn, a: u64, q: u64, scratch: &mut SparseColumn) {
    scratch.clear();
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            scratch.push(x[i]);
            i += 1;
        } else if take_y {
            scratch.push((y[j].0, a * y[j].1 % q));
            j += 1;
        } else {
            let v = (x[i].1 + a * y[j].1) % q;
            if v != 0 {
                scratch.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    std::mem::swap(x, scratch);
}
