use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::Polynomial;
use super::PolyError;
use std::cmp::Ordering;

/// Result of multivariate division: `f = sum(quotients[i] * g[i]) + remainder`.
#[derive(Debug, Clone)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

fn check_family(f: &Polynomial, g: &[Polynomial]) -> Result<(), PolyError> {
    if g.is_empty() {
        return Err(PolyError::EmptyGenerators);
    }
    for h in g {
        f.check_compatible(h)?;
    }
    Ok(())
}

/// Full reduction of `f` by `g`, keeping the multipliers.
///
/// The leading term of the running polynomial is cancelled by the first
/// divisor whose leading monomial divides it; otherwise it moves to the
/// remainder.
pub fn divide(f: &Polynomial, g: &[Polynomial], ord: MonomialOrder) -> Result<Division, PolyError> {
    check_family(f, g)?;
    let field = f.field();
    let vars = f.vars().to_vec();
    let leads: Vec<Option<(Monomial, u64)>> =
        g.iter().map(|h| h.leading_term(ord).map(|(m, c)| (m.clone(), c))).collect();
    let mut quotients = vec![Polynomial::zero(field, &vars); g.len()];
    let mut remainder = Polynomial::zero(field, &vars);
    let mut p = f.clone();
    while let Some((lm, lc)) = p.leading_term(ord).map(|(m, c)| (m.clone(), c)) {
        let hit = leads.iter().enumerate().find_map(|(i, lead)| {
            let (gm, gc) = lead.as_ref()?;
            gm.quotient_of(&lm).map(|t| (i, t, field.mul(lc, field.inv(*gc))))
        });
        match hit {
            Some((i, t, c)) => {
                p = p.sub(&g[i].mul_term(&t, c));
                quotients[i] = quotients[i].add(&Polynomial::monomial(field, &vars, t, c));
            }
            None => {
                let lt = Polynomial::monomial(field, &vars, lm, lc);
                p = p.sub(&lt);
                remainder = remainder.add(&lt);
            }
        }
    }
    Ok(Division { quotients, remainder })
}

/// Remainder of `f` modulo `g`: no term is divisible by a leading monomial of `g`.
pub fn normal_form(f: &Polynomial, g: &[Polynomial], ord: MonomialOrder) -> Result<Polynomial, PolyError> {
    divide(f, g, ord).map(|d| d.remainder)
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: MonomialOrder) -> Polynomial {
    let (fm, fc) = match f.leading_term(ord) {
        Some(t) => t,
        None => return f.clone(),
    };
    let (gm, gc) = match g.leading_term(ord) {
        Some(t) => t,
        None => return g.clone(),
    };
    let field = f.field();
    let l = fm.lcm(gm);
    let tf = fm.quotient_of(&l).expect("lcm is a multiple");
    let tg = gm.quotient_of(&l).expect("lcm is a multiple");
    f.mul_term(&tf, field.inv(fc)).sub(&g.mul_term(&tg, field.inv(gc)))
}

/// True when every S-polynomial of `g` reduces to zero.
pub fn is_groebner_basis(g: &[Polynomial], ord: MonomialOrder) -> Result<bool, PolyError> {
    let g: Vec<Polynomial> = g.iter().filter(|p| !p.is_zero()).cloned().collect();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            g[i].check_compatible(&g[j])?;
            if !normal_form(&s_polynomial(&g[i], &g[j], ord), &g, ord)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Reduced Gröbner basis of the ideal generated by `f`, sorted by
/// decreasing leading monomial.
///
/// Critical pairs are processed by increasing degree of the lcm of their
/// leading monomials, ties broken by pair index.
pub fn buchberger(f: &[Polynomial], ord: MonomialOrder) -> Result<Vec<Polynomial>, PolyError> {
    let first = f.first().ok_or(PolyError::EmptyGenerators)?;
    check_family(first, f)?;
    let mut basis: Vec<Polynomial> = f.iter().filter(|p| !p.is_zero()).map(|p| p.monic(ord)).collect();
    let mut pairs: Vec<(usize, usize)> =
        (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let lcm_degree = |basis: &[Polynomial], (i, j): (usize, usize)| {
        let a = basis[i].leading_monomial(ord).expect("nonzero");
        let b = basis[j].leading_monomial(ord).expect("nonzero");
        a.lcm(b).degree()
    };
    while !pairs.is_empty() {
        let (pos, _) = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &pair)| (lcm_degree(&basis, pair), pair))
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(pos);
        let s = s_polynomial(&basis[i], &basis[j], ord);
        let r = normal_form(&s, &basis, ord)?;
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r.monic(ord));
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    Ok(reduce_basis(basis, ord))
}

fn reduce_basis(basis: Vec<Polynomial>, ord: MonomialOrder) -> Vec<Polynomial> {
    // drop elements whose leading monomial is a multiple of an earlier-kept or other one
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (idx, p) in basis.iter().enumerate() {
        let lm = p.leading_monomial(ord).expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(jdx, q)| {
            let qm = q.leading_monomial(ord).expect("nonzero");
            jdx != idx && qm.divides(lm) && (qm != lm || jdx < idx)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> =
            minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, q)| q.clone()).collect();
        let r = if others.is_empty() {
            minimal[i].clone()
        } else {
            normal_form(&minimal[i], &others, ord).expect("compatible family")
        };
        reduced.push(r.monic(ord));
    }
    reduced.sort_by(|a, b| {
        ord.cmp(b.leading_monomial(ord).expect("nonzero"), a.leading_monomial(ord).expect("nonzero"))
    });
    reduced
}

/// Order used for listing quotient bases: total degree ascending, then
/// larger monomials first, so `1` comes first and `x` precedes `y`.
pub fn basis_order(ord: MonomialOrder, a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| ord.cmp(b, a))
}

/// Monomials divisible by no leading monomial of the Gröbner basis `g`.
pub fn standard_monomials(g: &[Polynomial], ord: MonomialOrder) -> Result<Vec<Monomial>, PolyError> {
    let first = g.first().ok_or(PolyError::EmptyGenerators)?;
    check_family(first, g)?;
    if !is_groebner_basis(g, ord)? {
        return Err(PolyError::NotGroebner);
    }
    let nvars = first.vars().len();
    let leads: Vec<Monomial> = g.iter().filter_map(|p| p.leading_monomial(ord).cloned()).collect();
    if leads.iter().any(|m| m.is_one()) {
        return Ok(Vec::new());
    }
    let mut bounds = vec![u32::MAX; nvars];
    for m in &leads {
        if let Some(v) = m.pure_power_var() {
            bounds[v] = bounds[v].min(m.exponents()[v]);
        }
    }
    if let Some(v) = bounds.iter().position(|&b| b == u32::MAX) {
        return Err(PolyError::NotZeroDimensional(first.vars()[v].clone()));
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    loop {
        let m = Monomial::new(exps.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        // odometer over the box of exponents below the pure-power bounds
        let mut k = 0;
        loop {
            if k == nvars {
                out.sort_by(|a, b| basis_order(ord, a, b));
                return Ok(out);
            }
            exps[k] += 1;
            if exps[k] < bounds[k] {
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}
