//! Integer matrices and lattices given by generating rows.
//!
//! Lattices are stored as Hermite normal forms: echelon rows with positive
//! pivots and entries above each pivot reduced into `[0, pivot)`.

use num_integer::Integer;

pub type IVec = Vec<i64>;
pub type IMat = Vec<Vec<i64>>;

pub fn identity(n: usize) -> IMat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `m * v` with `m` acting on column vectors.
pub fn mat_vec(m: &IMat, v: &[i64]) -> IVec {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn mat_mul(a: &IMat, b: &IMat) -> IMat {
    let k = b.len();
    let cols = if k == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..k).map(|l| row[l] * b[l][j]).sum())
                .collect()
        })
        .collect()
}

pub fn transpose(m: &IMat) -> IMat {
    if m.is_empty() {
        return vec![];
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j]).collect())
        .collect()
}

pub fn add(a: &[i64], b: &[i64]) -> IVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> IVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: i64, a: &[i64]) -> IVec {
    a.iter().map(|x| c * x).collect()
}

fn floor_div(a: i64, b: i64) -> i64 {
    Integer::div_floor(&a, &b)
}

fn row_axpy(rows: &mut [IVec], dst: usize, src: usize, c: i64) {
    if c == 0 {
        return;
    }
    let s = rows[src].clone();
    for (d, x) in rows[dst].iter_mut().zip(s) {
        *d -= c * x;
    }
}

/// Row echelon form over Z with the unimodular transform: returns `(h, t)`
/// with `t * rows = h`. Zero rows of `h` sit at the bottom.
pub fn echelon_with_transform(rows: &IMat, ncols: usize) -> (IMat, IMat) {
    let m = rows.len();
    let mut aug: Vec<IVec> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..m).map(|j| i64::from(i == j)));
            v
        })
        .collect();
    let mut prow = 0;
    for col in 0..ncols {
        if prow >= m {
            break;
        }
        loop {
            let best = (prow..m)
                .filter(|&i| aug[i][col] != 0)
                .min_by_key(|&i| aug[i][col].abs());
            let Some(b) = best else { break };
            aug.swap(prow, b);
            let mut done = true;
            for i in prow + 1..m {
                if aug[i][col] != 0 {
                    let q = floor_div(aug[i][col], aug[prow][col]);
                    row_axpy(&mut aug, i, prow, q);
                    if aug[i][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if aug[prow][col] == 0 {
            continue;
        }
        if aug[prow][col] < 0 {
            for x in aug[prow].iter_mut() {
                *x = -*x;
            }
        }
        for i in 0..prow {
            let q = floor_div(aug[i][col], aug[prow][col]);
            row_axpy(&mut aug, i, prow, q);
        }
        prow += 1;
    }
    let h = aug.iter().map(|r| r[..ncols].to_vec()).collect();
    let t = aug.iter().map(|r| r[ncols..].to_vec()).collect();
    (h, t)
}

/// Hermite normal form of the lattice spanned by `rows` (zero rows dropped).
pub fn hnf(rows: &IMat, ncols: usize) -> IMat {
    let (h, _) = echelon_with_transform(rows, ncols);
    h.into_iter().filter(|r| r.iter().any(|&x| x != 0)).collect()
}

/// Basis of the left kernel `{v : v * a = 0}`.
pub fn left_kernel(a: &IMat, ncols: usize) -> IMat {
    let (h, t) = echelon_with_transform(a, ncols);
    h.iter()
        .zip(t)
        .filter(|(r, _)| r.iter().all(|&x| x == 0))
        .map(|(_, v)| v)
        .collect()
}

/// Intersection of two lattices in `Z^dim`, returned in Hermite form.
pub fn intersect(l1: &IMat, l2: &IMat, dim: usize) -> IMat {
    let mut stacked = l1.clone();
    stacked.extend(l2.iter().cloned());
    let ker = left_kernel(&stacked, dim);
    let gens: IMat = ker
        .iter()
        .map(|v| {
            let mut acc = vec![0; dim];
            for (c, row) in v[..l1.len()].iter().zip(l1) {
                for (a, x) in acc.iter_mut().zip(row) {
                    *a += c * x;
                }
            }
            acc
        })
        .collect();
    hnf(&gens, dim)
}

/// Coordinates of `y` in an echelon basis, or `None` when `y` is outside.
pub fn coords(h: &IMat, y: &[i64]) -> Option<IVec> {
    let mut r = y.to_vec();
    let mut c = Vec::with_capacity(h.len());
    for row in h {
        let p = row.iter().position(|&x| x != 0)?;
        if r[p] % row[p] != 0 {
            return None;
        }
        let q = r[p] / row[p];
        for (a, x) in r.iter_mut().zip(row) {
            *a -= q * x;
        }
        c.push(q);
    }
    if r.iter().all(|&x| x == 0) {
        Some(c)
    } else {
        None
    }
}

pub fn contains(h: &IMat, y: &[i64]) -> bool {
    coords(h, y).is_some()
}

/// Reduce `y` modulo a full-rank Hermite basis into the box of
/// nonnegative coordinates below the pivots.
pub fn reduce_mod(h: &IMat, y: &[i64]) -> IVec {
    let mut r = y.to_vec();
    for (i, row) in h.iter().enumerate() {
        let q = floor_div(r[i], row[i]);
        if q != 0 {
            for (a, x) in r.iter_mut().zip(row) {
                *a -= q * x;
            }
        }
    }
    r
}

/// Diagonal of a full-rank Hermite basis, i.e. the box shape of the quotient.
pub fn pivots(h: &IMat) -> IVec {
    h.iter()
        .map(|row| *row.iter().find(|&&x| x != 0).unwrap_or(&0))
        .collect()
}

/// Nonzero Smith invariants `d_1 | d_2 | ...` of an integer matrix.
pub fn smith_invariants(m: &IMat) -> IVec {
    let mut a: IMat = m.clone();
    let rows = a.len();
    if rows == 0 {
        return vec![];
    }
    let cols = a[0].len();
    let mut out = vec![];
    let mut t = 0;
    while t < rows.min(cols) {
        let pos = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs());
        let Some((pi, pj)) = pos else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                let q = floor_div(a[i][t], a[t][t]);
                if q != 0 {
                    row_axpy(&mut a, i, t, q);
                }
                if a[i][t] != 0 {
                    a.swap(t, i);
                    changed = true;
                }
            }
            for j in t + 1..cols {
                let q = floor_div(a[t][j], a[t][t]);
                if q != 0 {
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                if a[t][j] != 0 {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    changed = true;
                }
            }
            if !changed {
                let p = a[t][t];
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i][j] % p != 0);
                match bad {
                    Some((i, _)) => {
                        let r = a[i].clone();
                        for (x, y) in a[t].iter_mut().zip(r) {
                            *x += y;
                        }
                    }
                    None => break,
                }
            }
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}

/// Determinant by fraction-free elimination.
pub fn det(m: &IMat) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    if n == 0 {
        1
    } else {
        (sign * a[n - 1][n - 1]) as i64
    }
}
