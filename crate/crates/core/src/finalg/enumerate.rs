use super::{AlgebraError, FinAlgebra, IdealSubspace};
use crate::caps::Caps;
use crate::field::PrimeField;
use crate::linalg::{self, Vector};

impl FinAlgebra {
    /// Every ideal, sorted by dimension, then by pivot columns (ideals led by
    /// earlier basis monomials first), then by echelon basis.
    ///
    /// Local blocks are searched over all subspaces (one echelon form per
    /// pivot pattern and filling) filtered by closure under multiplication.
    /// In a product the ideals are the products of block ideals.
    pub fn enumerate_ideals(&self, caps: &Caps) -> Result<Vec<IdealSubspace>, AlgebraError> {
        let cap = caps.dim_cap(self.field.characteristic());
        for c in &self.components {
            if c.range.len() > cap {
                return Err(AlgebraError::EnumerationCapExceeded { dim: c.range.len(), cap });
            }
        }
        let mut out = if self.is_local() {
            self.enumerate_local_ideals()
        } else {
            let per_block: Vec<Vec<IdealSubspace>> = (0..self.components.len())
                .map(|i| {
                    let block = self.component_algebra(i);
                    block.enumerate_local_ideals().iter().map(|id| self.embed_from_component(i, id)).collect()
                })
                .collect();
            let mut acc = vec![self.zero_ideal()];
            for block in &per_block {
                acc = acc.iter().flat_map(|a| block.iter().map(move |b| self.ideal_sum(a, b))).collect();
            }
            acc
        };
        let pivots = |s: &IdealSubspace| -> Vec<usize> { s.rows().iter().filter_map(|r| linalg::pivot(r)).collect() };
        out.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| pivots(a).cmp(&pivots(b))).then_with(|| a.cmp(b)));
        Ok(out)
    }

    fn enumerate_local_ideals(&self) -> Vec<IdealSubspace> {
        let d = self.dim();
        let mut out = Vec::new();
        for_each_subspace(&self.field, d, |rows| {
            let s = IdealSubspace::from_rref(rows.to_vec(), d);
            if self.is_ideal(&s) {
                out.push(s);
            }
        });
        out
    }
}

/// Calls `visit` once for every subspace of `F_p^d`, given by its reduced
/// row echelon basis.
pub fn for_each_subspace(f: &PrimeField, d: usize, mut visit: impl FnMut(&[Vector])) {
    let p = f.characteristic();
    for mask in 0u32..(1u32 << d) {
        let pivots: Vec<usize> = (0..d).filter(|&c| mask & (1 << c) != 0).collect();
        // free slots: row r, column c > pivot r, c not a pivot column
        let slots: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| ((pc + 1)..d).filter(|&c| mask & (1 << c) == 0).map(move |c| (r, c)))
            .collect();
        let mut fill = vec![0u64; slots.len()];
        loop {
            let mut rows: Vec<Vector> = pivots
                .iter()
                .map(|&pc| {
                    let mut v = vec![0; d];
                    v[pc] = 1;
                    v
                })
                .collect();
            for (&(r, c), &val) in slots.iter().zip(&fill) {
                rows[r][c] = val;
            }
            visit(&rows);
            let mut k = 0;
            loop {
                if k == fill.len() {
                    break;
                }
                fill[k] += 1;
                if fill[k] < p {
                    break;
                }
                fill[k] = 0;
                k += 1;
            }
            if k == fill.len() {
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Gaussian binomial sum: number of subspaces of F_p^d.
    fn subspace_count(p: u64, d: usize) -> u64 {
        let mut total = 0;
        for k in 0..=d {
            let mut num = 1u64;
            let mut den = 1u64;
            for i in 0..k {
                num *= p.pow((d - i) as u32) - 1;
                den *= p.pow((i + 1) as u32) - 1;
            }
            total += num / den;
        }
        total
    }

    #[test]
    fn visits_every_subspace_once() {
        for (p, d) in [(2, 4), (3, 3), (2, 6), (5, 2)] {
            let f = PrimeField::new(p).unwrap();
            let mut seen = std::collections::HashSet::new();
            for_each_subspace(&f, d, |rows| {
                assert_eq!(crate::linalg::rref(&f, rows.iter().cloned()), rows.to_vec());
                assert!(seen.insert(rows.to_vec()));
            });
            assert_eq!(seen.len() as u64, subspace_count(p, d));
        }
    }
}
