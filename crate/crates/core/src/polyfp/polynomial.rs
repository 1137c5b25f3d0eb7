use super::monomial::{Monomial, MonomialOrder};
use super::PolyError;
use crate::field::PrimeField;
use std::collections::BTreeMap;
use std::fmt;

/// Sparse polynomial over `F_p` in a fixed list of named variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: PrimeField,
    vars: Vec<String>,
    terms: BTreeMap<Monomial, u64>,
}

impl Polynomial {
    pub fn zero(field: PrimeField, vars: &[String]) -> Self {
        Polynomial { field, vars: vars.to_vec(), terms: BTreeMap::new() }
    }

    pub fn constant(field: PrimeField, vars: &[String], c: u64) -> Self {
        Self::monomial(field, vars, Monomial::one(vars.len()), c)
    }

    pub fn monomial(field: PrimeField, vars: &[String], m: Monomial, c: u64) -> Self {
        assert_eq!(m.nvars(), vars.len());
        let mut p = Self::zero(field, vars);
        let c = field.reduce(c);
        if c != 0 {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds from `(exponents, coefficient)` pairs; duplicate monomials are summed.
    pub fn from_terms(
        field: PrimeField,
        vars: &[String],
        terms: impl IntoIterator<Item = (Vec<u32>, u64)>,
    ) -> Self {
        let mut p = Self::zero(field, vars);
        for (e, c) in terms {
            p.add_term(Monomial::new(e), c);
        }
        p
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn constant_term(&self) -> u64 {
        self.coefficient(&Monomial::one(self.vars.len()))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, m: Monomial, c: u64) {
        let f = self.field;
        let c = f.reduce(c);
        if c == 0 {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot = f.add(*slot, c);
                if *slot == 0 {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn check_compatible(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.field != other.field {
            return Err(PolyError::FieldMismatch(self.field, other.field));
        }
        if self.vars != other.vars {
            return Err(PolyError::VariableMismatch(self.vars.clone(), other.vars.clone()));
        }
        Ok(())
    }

    /// Leading monomial and coefficient under `ord`.
    pub fn leading_term(&self, ord: MonomialOrder) -> Option<(&Monomial, u64)> {
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(a.0, b.0))
            .map(|(m, &c)| (m, c))
    }

    pub fn leading_monomial(&self, ord: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(ord).map(|(m, _)| m)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(self.field.neg(1)))
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let f = self.field;
        let c = f.reduce(c);
        let mut out = Self::zero(f, &self.vars);
        if c != 0 {
            out.terms = self.terms.iter().map(|(m, &a)| (m.clone(), f.mul(a, c))).collect();
        }
        out
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: u64) -> Polynomial {
        let f = self.field;
        let c = f.reduce(c);
        let mut out = Self::zero(f, &self.vars);
        if c != 0 {
            out.terms = self.terms.iter().map(|(t, &a)| (t.mul(m), f.mul(a, c))).collect();
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Self::zero(self.field, &self.vars);
        for (m, &c) in &other.terms {
            out = out.add(&self.mul_term(m, c));
        }
        out
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self, ord: MonomialOrder) -> Polynomial {
        match self.leading_term(ord) {
            Some((_, c)) => self.scale(self.field.inv(c)),
            None => self.clone(),
        }
    }

    /// Renders in the ingestion grammar, highest term first under `ord`.
    pub fn render(&self, ord: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| ord.cmp(b.0, a.0));
        terms
            .into_iter()
            .map(|(m, &c)| match (m.is_one(), c) {
                (true, _) => c.to_string(),
                (false, 1) => m.render(&self.vars),
                (false, _) => format!("{c}*{}", m.render(&self.vars)),
            })
            .collect::<Vec<_>>()
            .join("+")
    }

    /// Parses `terms joined by '+'`, each term a `*`-separated product of
    /// integers and powers `var` / `var^k`. Whitespace is ignored.
    pub fn parse(text: &str, field: PrimeField, vars: &[String]) -> Result<Polynomial, PolyError> {
        let err = |reason: String| PolyError::Parse { input: text.to_string(), reason };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty expression".into()));
        }
        let mut out = Self::zero(field, vars);
        for term in compact.split('+') {
            if term.is_empty() {
                return Err(err("empty term".into()));
            }
            let mut coeff = 1u64;
            let mut exps = vec![0u32; vars.len()];
            for factor in term.split('*') {
                if factor.is_empty() {
                    return Err(err(format!("empty factor in term `{term}`")));
                }
                if factor.chars().all(|c| c.is_ascii_digit()) {
                    let n: u128 = factor.parse().map_err(|_| err(format!("bad integer `{factor}`")))?;
                    let n = (n % field.characteristic() as u128) as u64;
                    coeff = field.mul(coeff, n);
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((name, e)) => {
                        let e: u32 = e.parse().map_err(|_| err(format!("bad exponent in `{factor}`")))?;
                        (name, e)
                    }
                    None => (factor, 1),
                };
                let idx = vars
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| err(format!("unknown variable `{name}`")))?;
                exps[idx] += exp;
            }
            out.add_term(Monomial::new(exps), coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(MonomialOrder::DegRevLex))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_and_render() {
        let f = PrimeField::new(3).unwrap();
        let v = vars(&["x", "y"]);
        let p = Polynomial::parse(" x^2 + 2*x*y + y + 4", f, &v).unwrap();
        assert_eq!(p.render(MonomialOrder::DegRevLex), "x^2+2*x*y+y+1");
        let q = Polynomial::parse(&p.render(MonomialOrder::DegRevLex), f, &v).unwrap();
        assert_eq!(p, q);
        // x*x^2 collects exponents; 3 vanishes mod 3
        let r = Polynomial::parse("x*x^2+3*y", f, &v).unwrap();
        assert_eq!(r.render(MonomialOrder::DegRevLex), "x^3");
    }

    #[test]
    fn parse_errors() {
        let f = PrimeField::new(2).unwrap();
        let v = vars(&["x"]);
        assert!(Polynomial::parse("z", f, &v).is_err());
        assert!(Polynomial::parse("x+", f, &v).is_err());
        assert!(Polynomial::parse("", f, &v).is_err());
        assert!(Polynomial::parse("x^a", f, &v).is_err());
    }

    #[test]
    fn cancellation_in_char_two() {
        let f = PrimeField::new(2).unwrap();
        let v = vars(&["x", "y"]);
        let p = Polynomial::parse("x+y", f, &v).unwrap();
        assert!(p.add(&p).is_zero());
        let sq = p.mul(&p);
        assert_eq!(sq.render(MonomialOrder::DegRevLex), "x^2+y^2");
    }
}
