//! Ideal calculus in finite-dimensional commutative algebras over `F_p`.
//!
//! An algebra is a multiplication table on a monomial basis. It is either
//! local (residue field `F_p`, certified by a nilpotent maximal ideal) or an
//! explicit product of such blocks. Every non-unit of an artinian local ring
//! is a zerodivisor, so traces here come from the image of all homomorphisms
//! `I -> R` rather than from colon formulas.

mod enumerate;
mod hom;
mod ideal;

pub use hom::{HomBasis, HomMap};
pub use ideal::IdealSubspace;

use crate::field::{NotPrime, PrimeField};
use crate::linalg::{self, Vector};
use crate::polyfp::{self, MonomialOrder, PolyError, Polynomial};
use std::ops::Range;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Field(#[from] NotPrime),
    #[error(transparent)]
    Poly(PolyError),
    #[error("not zero-dimensional: {0}")]
    NotZeroDimensional(String),
    #[error("not local: {0}")]
    NotLocal(String),
    #[error("algebras over different fields ({0} vs {1})")]
    FieldMismatch(PrimeField, PrimeField),
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("search budget exceeded: Hom space has {size} elements, cap is {cap}")]
    SearchBudgetExceeded { size: String, cap: u128 },
    #[error("enumeration cap exceeded: dimension {dim} > cap {cap}")]
    EnumerationCapExceeded { dim: usize, cap: usize },
    #[error("element has length {got}, algebra has dimension {expected}")]
    BadElement { got: usize, expected: usize },
}

impl From<PolyError> for AlgebraError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::NotZeroDimensional(v) => {
                AlgebraError::NotZeroDimensional(format!("no pure power of `{v}` is a leading monomial"))
            }
            other => AlgebraError::Poly(other),
        }
    }
}

/// A local block of the algebra: its coordinate range and maximal ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub range: Range<usize>,
    pub maximal: IdealSubspace,
    pub nilpotency_index: usize,
}

#[derive(Debug, Clone)]
pub struct FinAlgebra {
    field: PrimeField,
    name: String,
    /// Per-coordinate label inside its block, e.g. `x*y`.
    base_labels: Vec<String>,
    /// `table[i][j]` is `b_i * b_j` in coordinates.
    table: Vec<Vec<Vector>>,
    unit: Vector,
    components: Vec<Component>,
}

impl FinAlgebra {
    /// `F_p[vars] / (relations)`, which must be local with residue field `F_p`.
    pub fn from_presentation(
        p: u64,
        vars: &[String],
        relations: &[Polynomial],
    ) -> Result<FinAlgebra, AlgebraError> {
        let field = PrimeField::new(p)?;
        let ord = MonomialOrder::DegRevLex;
        let nonzero: Vec<Polynomial> = relations.iter().filter(|r| !r.is_zero()).cloned().collect();
        for r in &nonzero {
            if r.field() != field {
                return Err(AlgebraError::FieldMismatch(field, r.field()));
            }
            if r.vars() != vars {
                return Err(PolyError::VariableMismatch(vars.to_vec(), r.vars().to_vec()).into());
            }
            if r.constant_term() != 0 {
                return Err(AlgebraError::NotLocal(format!(
                    "relation `{r}` has a unit constant term, so it is not inside the ideal of the variables"
                )));
            }
        }
        let name = describe(field, vars, &nonzero);
        if vars.is_empty() {
            return FinAlgebra::local_from_table(field, name, vec!["1".into()], vec![vec![vec![1]]]);
        }
        if nonzero.is_empty() {
            return Err(AlgebraError::NotZeroDimensional("no relations".into()));
        }
        let gb = polyfp::buchberger(&nonzero, ord)?;
        let basis = polyfp::standard_monomials(&gb, ord)?;
        let d = basis.len();
        let mut table = vec![vec![vec![0u64; d]; d]; d];
        for i in 0..d {
            for j in 0..d {
                let prod = Polynomial::monomial(field, vars, basis[i].mul(&basis[j]), 1);
                let nf = polyfp::normal_form(&prod, &gb, ord)?;
                for (m, c) in nf.terms() {
                    let k = basis.iter().position(|b| b == m).expect("normal forms use standard monomials");
                    table[i][j][k] = c;
                }
            }
        }
        let labels = basis.iter().map(|m| m.render(vars)).collect();
        FinAlgebra::local_from_table(field, name, labels, table)
    }

    /// Parses the relations with the polynomial grammar first.
    pub fn from_strings(p: u64, vars: &[&str], relations: &[&str]) -> Result<FinAlgebra, AlgebraError> {
        let field = PrimeField::new(p)?;
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let rels = relations
            .iter()
            .map(|r| Polynomial::parse(r, field, &vars))
            .collect::<Result<Vec<_>, _>>()?;
        FinAlgebra::from_presentation(p, &vars, &rels)
    }

    /// Builds a local algebra whose basis element 0 is the unit.
    fn local_from_table(
        field: PrimeField,
        name: String,
        base_labels: Vec<String>,
        table: Vec<Vec<Vector>>,
    ) -> Result<FinAlgebra, AlgebraError> {
        let d = table.len();
        let mut unit = vec![0; d];
        unit[0] = 1;
        let mut alg = FinAlgebra { field, name, base_labels, table, unit, components: Vec::new() };
        alg.validate_table()?;
        let maximal = alg.span((1..d).map(|i| alg.basis_vector(i)));
        let nilpotency_index = alg.nilpotency_index(&maximal).ok_or_else(|| {
            AlgebraError::NotLocal("the span of the non-constant standard monomials is not nilpotent".into())
        })?;
        alg.components = vec![Component { range: 0..d, maximal, nilpotency_index }];
        Ok(alg)
    }

    /// Smallest `k` with `m^k = 0`.
    fn nilpotency_index(&self, m: &IdealSubspace) -> Option<usize> {
        let mut power = self.unit_ideal();
        for k in 1..=self.dim() + 1 {
            if power.is_zero() {
                return Some(k - 1);
            }
            let next = self.ideal_product(&power, m);
            if next == power {
                return None;
            }
            power = next;
        }
        power.is_zero().then_some(self.dim() + 1)
    }

    fn validate_table(&self) -> Result<(), AlgebraError> {
        let d = self.dim();
        if self.table.iter().any(|row| row.len() != d || row.iter().any(|v| v.len() != d)) {
            return Err(AlgebraError::InvalidTable("table is not d x d x d".into()));
        }
        for i in 0..d {
            let b = self.basis_vector(i);
            if self.mul(&self.unit, &b) != b {
                return Err(AlgebraError::InvalidTable(format!("unit does not fix basis element {i}")));
            }
            for j in 0..d {
                if self.table[i][j] != self.table[j][i] {
                    return Err(AlgebraError::InvalidTable(format!("b{i}*b{j} != b{j}*b{i}")));
                }
                for k in 0..d {
                    let left = self.mul(&self.table[i][j], &self.basis_vector(k));
                    let right = self.mul(&b, &self.table[j][k]);
                    if left != right {
                        return Err(AlgebraError::InvalidTable(format!("(b{i}*b{j})*b{k} != b{i}*(b{j}*b{k})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// `A x B` with block-diagonal multiplication and unit `(1, 1)`.
    pub fn product(a: &FinAlgebra, b: &FinAlgebra) -> Result<FinAlgebra, AlgebraError> {
        if a.field != b.field {
            return Err(AlgebraError::FieldMismatch(a.field, b.field));
        }
        let (da, db) = (a.dim(), b.dim());
        let d = da + db;
        let mut table = vec![vec![vec![0u64; d]; d]; d];
        for i in 0..da {
            for j in 0..da {
                table[i][j][..da].copy_from_slice(&a.table[i][j]);
            }
        }
        for i in 0..db {
            for j in 0..db {
                table[da + i][da + j][da..].copy_from_slice(&b.table[i][j]);
            }
        }
        let pad = |v: &[u64], offset: usize| {
            let mut out = vec![0; d];
            out[offset..offset + v.len()].copy_from_slice(v);
            out
        };
        let mut components = Vec::new();
        for (alg, offset) in [(a, 0), (b, da)] {
            for c in &alg.components {
                let rows = c.maximal.rows().iter().map(|r| pad(r, offset)).collect::<Vec<_>>();
                components.push(Component {
                    range: c.range.start + offset..c.range.end + offset,
                    maximal: IdealSubspace::from_rref(rows, d),
                    nilpotency_index: c.nilpotency_index,
                });
            }
        }
        let mut unit = a.unit.clone();
        unit.extend_from_slice(&b.unit);
        let mut base_labels = a.base_labels.clone();
        base_labels.extend(b.base_labels.iter().cloned());
        let prod = FinAlgebra {
            field: a.field,
            name: format!("({}) × ({})", a.name, b.name),
            base_labels,
            table,
            unit,
            components,
        };
        prod.validate_table()?;
        Ok(prod)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Human-readable presentation, e.g. `F_2[x,y]/(x^2,y^2)`.
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.table.len()
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_local(&self) -> bool {
        self.components.len() == 1
    }

    pub fn multiplication_table(&self) -> &[Vec<Vector>] {
        &self.table
    }

    /// Label of basis element `i`; in products, prefixed by the block idempotent `e<k>`.
    pub fn label(&self, i: usize) -> String {
        let base = &self.base_labels[i];
        if self.is_local() {
            return base.clone();
        }
        let k = self.components.iter().position(|c| c.range.contains(&i)).expect("covered") + 1;
        if base == "1" {
            format!("e{k}")
        } else {
            format!("e{k}*{base}")
        }
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    pub fn zero(&self) -> Vector {
        vec![0; self.dim()]
    }

    pub fn check_element(&self, v: &[u64]) -> Result<(), AlgebraError> {
        if v.len() != self.dim() {
            return Err(AlgebraError::BadElement { got: v.len(), expected: self.dim() });
        }
        Ok(())
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vector {
        let f = &self.field;
        let mut out = self.zero();
        for (i, &ai) in a.iter().enumerate().filter(|(_, &c)| c != 0) {
            for (j, &bj) in b.iter().enumerate().filter(|(_, &c)| c != 0) {
                linalg::axpy(f, &mut out, f.mul(ai, bj), &self.table[i][j]);
            }
        }
        out
    }

    /// Every element of the algebra, in odometer order over coordinates.
    pub fn elements(&self) -> impl Iterator<Item = Vector> + '_ {
        let p = self.field.characteristic();
        let d = self.dim();
        let total = (p as u128).pow(d as u32);
        (0..total).map(move |mut n| {
            let mut v = vec![0; d];
            for c in v.iter_mut() {
                *c = (n % p as u128) as u64;
                n /= p as u128;
            }
            v
        })
    }

    /// Parses an element written in the basis labels, e.g. `x+2*x*y`.
    pub fn parse_element(&self, text: &str) -> Result<Vector, AlgebraError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |reason: &str| {
            AlgebraError::Poly(PolyError::Parse { input: text.to_string(), reason: reason.to_string() })
        };
        if compact.is_empty() {
            return Err(err("empty expression"));
        }
        let f = self.field;
        let mut out = self.zero();
        let labels: Vec<String> = (0..self.dim()).map(|i| self.label(i)).collect();
        for term in compact.split('+') {
            let (coeff, rest) = match term.split_once('*') {
                Some((c, rest)) if c.chars().all(|ch| ch.is_ascii_digit()) => (c, rest),
                _ if term.chars().all(|ch| ch.is_ascii_digit()) => (term, "1"),
                _ => ("1", term),
            };
            let c: u128 = coeff.parse().map_err(|_| err("bad coefficient"))?;
            let c = (c % f.characteristic() as u128) as u64;
            let idx = if rest == "1" && self.is_local() {
                Some(0)
            } else {
                labels.iter().position(|l| l == rest)
            };
            let idx = idx.ok_or_else(|| err(&format!("`{rest}` is not a basis label ({})", labels.join(", "))))?;
            out[idx] = f.add(out[idx], c);
        }
        Ok(out)
    }

    pub fn render_element(&self, v: &[u64]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let label = self.label(i);
                match (label.as_str(), c) {
                    ("1", _) => c.to_string(),
                    (_, 1) => label,
                    _ => format!("{c}*{label}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// Basis rows of the ideal written in the basis labels, e.g. `(x, y^2)`.
    pub fn render_ideal(&self, ideal: &IdealSubspace) -> String {
        if ideal.is_zero() {
            return "(0)".into();
        }
        let rows: Vec<String> = ideal.rows().iter().map(|r| self.render_element(r)).collect();
        format!("({})", rows.join(", "))
    }

    /// Inverse of [`FinAlgebra::render_ideal`]: the ideal generated by a
    /// comma-separated list of elements, with or without parentheses.
    pub fn parse_ideal(&self, text: &str) -> Result<IdealSubspace, AlgebraError> {
        let inner = text.trim();
        let inner = inner.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(inner);
        let gens = inner.split(',').map(|g| self.parse_element(g)).collect::<Result<Vec<_>, _>>()?;
        Ok(self.ideal_generate(&gens))
    }

    /// The block `i` as a local algebra of its own.
    pub fn component_algebra(&self, i: usize) -> FinAlgebra {
        let c = &self.components[i];
        let r = c.range.clone();
        let table = r
            .clone()
            .map(|a| r.clone().map(|b| self.table[a][b][r.clone()].to_vec()).collect())
            .collect();
        let maximal = IdealSubspace::from_rref(
            c.maximal.rows().iter().map(|row| row[r.clone()].to_vec()).collect(),
            r.len(),
        );
        FinAlgebra {
            field: self.field,
            name: format!("{} [block {}]", self.name, i + 1),
            base_labels: self.base_labels[r.clone()].to_vec(),
            table,
            unit: self.unit[r.clone()].to_vec(),
            components: vec![Component { range: 0..r.len(), maximal, nilpotency_index: c.nilpotency_index }],
        }
    }

    /// Embeds an ideal of block `i` into the full algebra.
    pub fn embed_from_component(&self, i: usize, ideal: &IdealSubspace) -> IdealSubspace {
        let r = self.components[i].range.clone();
        let rows = ideal
            .rows()
            .iter()
            .map(|row| {
                let mut v = self.zero();
                v[r.clone()].copy_from_slice(row);
                v
            })
            .collect();
        IdealSubspace::from_rref(rows, self.dim())
    }

    /// Projects an ideal onto block `i` (multiplication by the block idempotent).
    pub fn project_to_component(&self, i: usize, ideal: &IdealSubspace) -> IdealSubspace {
        let r = self.components[i].range.clone();
        let rows = ideal.rows().iter().map(|row| row[r.clone()].to_vec());
        IdealSubspace::from_rows(&self.field, rows, r.len())
    }

    /// Jacobson radical: the sum of the block maximal ideals.
    pub fn radical(&self) -> IdealSubspace {
        self.span(self.components.iter().flat_map(|c| c.maximal.rows().iter().cloned()))
    }

    /// The maximal ideal of a local algebra (the radical in general).
    pub fn maximal_ideal(&self) -> IdealSubspace {
        self.radical()
    }

    /// Artinian Gorenstein test: each block has a one-dimensional socle.
    pub fn is_gorenstein(&self) -> bool {
        let socle = self.annihilator(&self.radical());
        self.components.iter().enumerate().all(|(i, _)| self.project_to_component(i, &socle).dim() == 1)
    }

    pub fn socle(&self) -> IdealSubspace {
        self.annihilator(&self.radical())
    }
}

fn describe(field: PrimeField, vars: &[String], relations: &[Polynomial]) -> String {
    if vars.is_empty() {
        return field.to_string();
    }
    let rels: Vec<String> = relations.iter().map(|r| r.to_string()).collect();
    format!("{}[{}]/({})", field, vars.join(","), rels.join(","))
}

/// `A x B`.
pub fn product_algebra(a: &FinAlgebra, b: &FinAlgebra) -> Result<FinAlgebra, AlgebraError> {
    FinAlgebra::product(a, b)
}
