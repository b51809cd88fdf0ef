//! Smallest enclosing ball (Welzl's recursion with move-to-front) and the
//! common-intersection test for closed balls built on it.

/// Relative slack on the radius comparison in [`balls_intersect`].
pub const RADIUS_TOLERANCE: f64 = 1e-10;

/// Relative slack used when testing whether a point lies in a candidate ball.
const CONTAINS_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone)]
struct Ball {
    center: Vec<f64>,
    sq_radius: f64,
}

impl Ball {
    fn contains(&self, p: &[f64]) -> bool {
        let d2: f64 = p
            .iter()
            .zip(&self.center)
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        d2 <= self.sq_radius * (1.0 + CONTAINS_TOLERANCE) + f64::MIN_POSITIVE
    }
}

/// Smallest ball with every point of `support` on its boundary, restricted to
/// the affine hull of the support. `None` for an empty support.
#[allow(clippy::needless_range_loop)]
fn circumball(points: &[&[f64]], support: &[usize]) -> Option<Ball> {
    let (&first, rest) = support.split_first()?;
    let p0 = points[first];
    let dim = p0.len();
    let m = rest.len();
    if m == 0 {
        return Some(Ball {
            center: p0.to_vec(),
            sq_radius: 0.0,
        });
    }
    let vs: Vec<Vec<f64>> = rest
        .iter()
        .map(|&j| points[j].iter().zip(p0).map(|(a, b)| a - b).collect())
        .collect();
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    // Gram system 2 V V^T lambda = |v_i|^2, augmented.
    let mut a: Vec<Vec<f64>> = (0..m)
        .map(|i| {
            let mut row: Vec<f64> = (0..m).map(|j| 2.0 * dot(&vs[i], &vs[j])).collect();
            row.push(dot(&vs[i], &vs[i]));
            row
        })
        .collect();
    let scale = a
        .iter()
        .map(|r| r[..m].iter().fold(0.0f64, |acc, x| acc.max(x.abs())))
        .fold(0.0f64, f64::max);
    let mut lambda = vec![0.0; m];
    let mut pivot_cols = Vec::with_capacity(m);
    let mut row = 0;
    for col in 0..m {
        let best = (row..m).max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()));
        let Some(best) = best else { break };
        if a[best][col].abs() <= 1e-13 * scale.max(f64::MIN_POSITIVE) {
            // affinely dependent support point
            continue;
        }
        a.swap(row, best);
        for r in 0..m {
            if r != row {
                let factor = a[r][col] / a[row][col];
                if factor != 0.0 {
                    for c in col..=m {
                        a[r][c] -= factor * a[row][c];
                    }
                }
            }
        }
        pivot_cols.push((row, col));
        row += 1;
    }
    for (r, c) in pivot_cols {
        lambda[c] = a[r][m] / a[r][c];
    }
    let mut offset = vec![0.0; dim];
    for (l, v) in lambda.iter().zip(&vs) {
        for (o, x) in offset.iter_mut().zip(v) {
            *o += l * x;
        }
    }
    let sq_radius = dot(&offset, &offset);
    let center = p0.iter().zip(&offset).map(|(a, b)| a + b).collect();
    Some(Ball { center, sq_radius })
}

fn move_to_front(
    points: &[&[f64]],
    order: &mut Vec<usize>,
    end: usize,
    support: &mut Vec<usize>,
    dim: usize,
) -> Option<Ball> {
    let mut ball = circumball(points, support);
    if support.len() == dim + 1 {
        return ball;
    }
    let mut i = 0;
    while i < end {
        let p = order[i];
        if !ball.as_ref().is_some_and(|b| b.contains(points[p])) {
            support.push(p);
            ball = move_to_front(points, order, i, support, dim);
            support.pop();
            order.remove(i);
            order.insert(0, p);
        }
        i += 1;
    }
    ball
}

/// Radius of the smallest closed ball containing all `points`.
/// Returns 0 for a single point and for an empty slice.
pub fn min_enclosing_radius(points: &[&[f64]]) -> f64 {
    if points.len() <= 1 {
        return 0.0;
    }
    let dim = points[0].len();
    let mut order: Vec<usize> = (0..points.len()).collect();
    let mut support = Vec::with_capacity(dim + 1);
    let end = order.len();
    move_to_front(points, &mut order, end, &mut support, dim)
        .map_or(0.0, |b| b.sq_radius.sqrt())
}

/// Whether the closed balls of radius `r` about `centers` share a point.
///
/// The intersection is nonempty exactly when the smallest ball enclosing the
/// centers has radius at most `r`; the comparison allows a relative slack of
/// [`RADIUS_TOLERANCE`].
pub fn balls_intersect(centers: &[&[f64]], r: f64) -> bool {
    assert!(!centers.is_empty(), "balls_intersect needs at least one center");
    min_enclosing_radius(centers) <= r * (1.0 + RADIUS_TOLERANCE)
}
