use super::{AlgebraError, FinAlgebra, IdealSubspace};
use crate::linalg::{self, Vector};

/// An `R`-linear map `I -> J` as a `dim J x dim I` matrix in the echelon
/// bases of the two ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomMap {
    pub matrix: Vec<Vector>,
}

/// An `F_p`-basis of `Hom_R(I, J)`.
#[derive(Debug, Clone)]
pub struct HomBasis {
    pub domain: IdealSubspace,
    pub codomain: IdealSubspace,
    pub maps: Vec<HomMap>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }
}

impl FinAlgebra {
    /// Solves the linearity constraints `φ(b_k u_l) = b_k φ(u_l)` for all
    /// basis elements `b_k` and domain basis rows `u_l`.
    pub fn hom_module(&self, i: &IdealSubspace, j: &IdealSubspace) -> HomBasis {
        let f = self.field;
        let (di, dj) = (i.dim(), j.dim());
        let unknowns = di * dj;
        // unknown a[l * dj + t] is the t-th coordinate of φ(u_l)
        let mut system: Vec<Vector> = Vec::new();
        for k in 0..self.dim() {
            let bk = self.basis_vector(k);
            let mu: Vec<Vector> = j
                .rows()
                .iter()
                .map(|w| j.coordinates(&f, &self.mul(&bk, w)).expect("J is an ideal"))
                .collect();
            for (l, u) in i.rows().iter().enumerate() {
                let lambda = i.coordinates(&f, &self.mul(&bk, u)).expect("I is an ideal");
                for t2 in 0..dj {
                    let mut row = vec![0; unknowns];
                    for (l2, &c) in lambda.iter().enumerate() {
                        row[l2 * dj + t2] = f.add(row[l2 * dj + t2], c);
                    }
                    for (t, m) in mu.iter().enumerate() {
                        row[l * dj + t] = f.sub(row[l * dj + t], m[t2]);
                    }
                    system.push(row);
                }
            }
        }
        let maps = linalg::kernel(&f, &system, unknowns)
            .into_iter()
            .map(|a| HomMap { matrix: (0..dj).map(|t| (0..di).map(|l| a[l * dj + t]).collect()).collect() })
            .collect();
        HomBasis { domain: i.clone(), codomain: j.clone(), maps }
    }

    /// Image of `v ∈ I` under a map `I -> J`.
    pub fn apply_hom(&self, hom: &HomBasis, map: &HomMap, v: &[u64]) -> Option<Vector> {
        let f = self.field;
        let coords = hom.domain.coordinates(&f, v)?;
        Some(hom.codomain.combine(&f, &linalg::apply(&f, &map.matrix, &coords)))
    }

    /// `tr I`: the ideal generated by `φ(u)` over all `φ ∈ Hom(I, R)` and `u ∈ I`.
    pub fn trace_ideal(&self, i: &IdealSubspace) -> IdealSubspace {
        let f = self.field;
        let r = self.unit_ideal();
        let hom = self.hom_module(i, &r);
        let images: Vec<Vector> = hom
            .maps
            .iter()
            .flat_map(|m| {
                let cols = linalg::transpose(&m.matrix, i.dim());
                cols.into_iter().map(|c| r.combine(&f, &c))
            })
            .collect();
        self.ideal_generate(&images)
    }

    /// An isomorphism `I -> J` if one exists, by exhaustive search of `Hom(I, J)`.
    pub fn find_isomorphism(
        &self,
        i: &IdealSubspace,
        j: &IdealSubspace,
        budget: u128,
    ) -> Result<Option<HomMap>, AlgebraError> {
        let f = self.field;
        let n = i.dim();
        if n != j.dim() {
            return Ok(None);
        }
        if i == j {
            let identity = (0..n).map(|r| (0..n).map(|c| u64::from(r == c)).collect()).collect();
            return Ok(Some(HomMap { matrix: identity }));
        }
        let hom = self.hom_module(i, j);
        let p = f.characteristic() as u128;
        let h = hom.dim() as u32;
        let size = p.checked_pow(h);
        match size {
            Some(s) if s <= budget => {}
            _ => {
                return Err(AlgebraError::SearchBudgetExceeded {
                    size: format!("{}^{}", f.characteristic(), h),
                    cap: budget,
                })
            }
        }
        let mut coeffs = vec![0u64; hom.dim()];
        loop {
            let mut m = vec![vec![0u64; n]; n];
            for (c, map) in coeffs.iter().zip(&hom.maps) {
                for (row, mrow) in m.iter_mut().zip(&map.matrix) {
                    linalg::axpy(&f, row, *c, mrow);
                }
            }
            if linalg::rank(&f, &m) == n {
                return Ok(Some(HomMap { matrix: m }));
            }
            // odometer over F_p^h
            let mut k = 0;
            loop {
                if k == coeffs.len() {
                    return Ok(None);
                }
                coeffs[k] += 1;
                if (coeffs[k] as u128) < p {
                    break;
                }
                coeffs[k] = 0;
                k += 1;
            }
        }
    }

    pub fn is_isomorphic(&self, i: &IdealSubspace, j: &IdealSubspace, budget: u128) -> Result<bool, AlgebraError> {
        self.find_isomorphism(i, j, budget).map(|m| m.is_some())
    }
}
