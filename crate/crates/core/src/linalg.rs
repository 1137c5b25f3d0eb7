//! Dense linear algebra over `F_p`: row reduction, kernels, rank.

use crate::field::PrimeField;

pub type Vector = Vec<u64>;

/// Index of the first nonzero entry.
pub fn pivot(v: &[u64]) -> Option<usize> {
    v.iter().position(|&c| c != 0)
}

pub fn is_zero(v: &[u64]) -> bool {
    v.iter().all(|&c| c == 0)
}

/// `a += c * b`
pub fn axpy(f: &PrimeField, a: &mut [u64], c: u64, b: &[u64]) {
    if c == 0 {
        return;
    }
    for (x, &y) in a.iter_mut().zip(b) {
        *x = f.add(*x, f.mul(c, y));
    }
}

/// Reduced row echelon form; zero rows are dropped and rows are sorted by pivot.
pub fn rref(f: &PrimeField, rows: impl IntoIterator<Item = Vector>) -> Vec<Vector> {
    let mut basis: Vec<Vector> = Vec::new();
    for mut v in rows {
        reduce_against(f, &basis, &mut v);
        let Some(p) = pivot(&v) else { continue };
        let inv = f.inv(v[p]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for b in basis.iter_mut() {
            let c = b[p];
            if c != 0 {
                axpy(f, b, f.neg(c), &v);
            }
        }
        let at = basis.partition_point(|b| pivot(b) < Some(p));
        basis.insert(at, v);
    }
    basis
}

/// Clears every pivot column of `basis` (an RREF) out of `v`.
/// The result is zero iff `v` lies in the row space.
pub fn reduce_against(f: &PrimeField, basis: &[Vector], v: &mut [u64]) {
    for b in basis {
        let p = pivot(b).expect("rref rows are nonzero");
        let c = v[p];
        if c != 0 {
            axpy(f, v, f.neg(c), b);
        }
    }
}

pub fn in_span(f: &PrimeField, basis: &[Vector], v: &[u64]) -> bool {
    let mut w = v.to_vec();
    reduce_against(f, basis, &mut w);
    is_zero(&w)
}

/// Coordinates of `v` with respect to an RREF basis (read off at pivots),
/// or `None` when `v` is outside the span.
pub fn coordinates(f: &PrimeField, basis: &[Vector], v: &[u64]) -> Option<Vector> {
    let coords: Vector = basis.iter().map(|b| v[pivot(b).expect("nonzero")]).collect();
    let mut w = v.to_vec();
    for (c, b) in coords.iter().zip(basis) {
        axpy(f, &mut w, f.neg(*c), b);
    }
    is_zero(&w).then_some(coords)
}

pub fn rank(f: &PrimeField, rows: &[Vector]) -> usize {
    rref(f, rows.iter().cloned()).len()
}

/// Basis of `{x : M x = 0}` for an `m x n` matrix given by rows.
pub fn kernel(f: &PrimeField, rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let r = rref(f, rows.iter().cloned());
    let pivots: Vec<usize> = r.iter().map(|row| pivot(row).expect("nonzero")).collect();
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![0; ncols];
        x[free] = 1;
        for (row, &p) in r.iter().zip(&pivots) {
            x[p] = f.neg(row[free]);
        }
        out.push(x);
    }
    out
}

/// Matrix-vector product `M v` with `M` given by rows.
pub fn apply(f: &PrimeField, rows: &[Vector], v: &[u64]) -> Vector {
    rows.iter()
        .map(|row| row.iter().zip(v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
        .collect()
}

/// Columns of a matrix with `ncols` columns given by rows.
pub fn transpose(rows: &[Vector], ncols: usize) -> Vec<Vector> {
    (0..ncols).map(|c| rows.iter().map(|r| r[c]).collect()).collect()
}
