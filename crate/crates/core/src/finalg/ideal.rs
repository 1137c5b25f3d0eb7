use super::FinAlgebra;
use crate::field::PrimeField;
use crate::linalg::{self, Vector};

/// An ideal stored as the reduced row echelon basis of its underlying
/// subspace, so equal ideals have equal representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealSubspace {
    rows: Vec<Vector>,
    ambient: usize,
}

impl IdealSubspace {
    /// Row-reduces arbitrary spanning vectors. Does not close under multiplication.
    pub fn from_rows(f: &PrimeField, rows: impl IntoIterator<Item = Vector>, ambient: usize) -> Self {
        IdealSubspace { rows: linalg::rref(f, rows), ambient }
    }

    /// Trusts that `rows` is already in reduced row echelon form.
    pub(crate) fn from_rref(rows: Vec<Vector>, ambient: usize) -> Self {
        IdealSubspace { rows, ambient }
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, f: &PrimeField, v: &[u64]) -> bool {
        linalg::in_span(f, &self.rows, v)
    }

    pub fn is_subset_of(&self, f: &PrimeField, other: &IdealSubspace) -> bool {
        self.rows.iter().all(|r| other.contains(f, r))
    }

    /// Coordinates of `v` in this basis.
    pub fn coordinates(&self, f: &PrimeField, v: &[u64]) -> Option<Vector> {
        linalg::coordinates(f, &self.rows, v)
    }

    /// Combines basis rows with the given coefficients.
    pub fn combine(&self, f: &PrimeField, coords: &[u64]) -> Vector {
        let mut out = vec![0; self.ambient];
        for (c, r) in coords.iter().zip(&self.rows) {
            linalg::axpy(f, &mut out, *c, r);
        }
        out
    }
}

impl FinAlgebra {
    /// Span of the vectors (not closed under multiplication).
    pub fn span(&self, vectors: impl IntoIterator<Item = Vector>) -> IdealSubspace {
        IdealSubspace::from_rows(&self.field, vectors, self.dim())
    }

    pub fn zero_ideal(&self) -> IdealSubspace {
        IdealSubspace::from_rref(Vec::new(), self.dim())
    }

    pub fn unit_ideal(&self) -> IdealSubspace {
        IdealSubspace::from_rref((0..self.dim()).map(|i| self.basis_vector(i)).collect(), self.dim())
    }

    /// True when the subspace is stable under multiplication by every basis element.
    pub fn is_ideal(&self, s: &IdealSubspace) -> bool {
        s.rows().iter().all(|v| (0..self.dim()).all(|k| s.contains(&self.field, &self.mul(&self.basis_vector(k), v))))
    }

    /// Smallest ideal containing `gens`: the span of all `b_k * g`.
    pub fn ideal_generate(&self, gens: &[Vector]) -> IdealSubspace {
        let products: Vec<Vector> = gens
            .iter()
            .flat_map(|g| (0..self.dim()).map(move |k| self.mul(&self.basis_vector(k), g)))
            .collect();
        self.span(products)
    }

    pub fn principal_ideal(&self, x: &[u64]) -> IdealSubspace {
        self.ideal_generate(&[x.to_vec()])
    }

    pub fn ideal_sum(&self, i: &IdealSubspace, j: &IdealSubspace) -> IdealSubspace {
        self.span(i.rows().iter().chain(j.rows()).cloned())
    }

    /// `IJ`, spanned by products of basis rows.
    pub fn ideal_product(&self, i: &IdealSubspace, j: &IdealSubspace) -> IdealSubspace {
        let prods: Vec<Vector> =
            i.rows().iter().flat_map(|u| j.rows().iter().map(move |v| self.mul(u, v))).collect();
        self.ideal_generate(&prods)
    }

    /// `I : J = {r : rJ ⊆ I}`, the kernel of `r ↦ (r w_t mod I)_t`.
    pub fn colon(&self, i: &IdealSubspace, j: &IdealSubspace) -> IdealSubspace {
        let f = self.field;
        let d = self.dim();
        // columns indexed by algebra basis k; one row per (generator of J, coordinate)
        let mut system: Vec<Vector> = Vec::with_capacity(d * j.dim());
        let images: Vec<Vec<Vector>> = (0..d)
            .map(|k| {
                let bk = self.basis_vector(k);
                j.rows()
                    .iter()
                    .map(|w| {
                        let mut v = self.mul(&bk, w);
                        linalg::reduce_against(&f, i.rows(), &mut v);
                        v
                    })
                    .collect()
            })
            .collect();
        for t in 0..j.dim() {
            for c in 0..d {
                system.push((0..d).map(|k| images[k][t][c]).collect());
            }
        }
        self.span(linalg::kernel(&f, &system, d))
    }

    pub fn annihilator(&self, i: &IdealSubspace) -> IdealSubspace {
        self.colon(&self.zero_ideal(), i)
    }

    /// `ann(ann((x)))`, which equals the trace of `(x)` in an artinian ring.
    pub fn trace_principal_via_ann(&self, x: &[u64]) -> IdealSubspace {
        self.annihilator(&self.annihilator(&self.principal_ideal(x)))
    }
}
