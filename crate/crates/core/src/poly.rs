//! Multivariate polynomials over an exact field with a chosen monomial order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::PolyError;
use crate::field::{Coeff, Field};

/// Ordered, duplicate-free list of indeterminate names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableContext {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VariableContext {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, PolyError> {
        let mut index = HashMap::with_capacity(names.len());
        let mut owned = Vec::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            let n = n.as_ref().to_string();
            if index.insert(n.clone(), i).is_some() {
                return Err(PolyError::DuplicateVariable(n));
            }
            owned.push(n);
        }
        Ok(VariableContext { names: owned, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

/// The polynomial ring `K[x_1..x_v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    field: Field,
    vars: VariableContext,
}

impl Ring {
    pub fn new<S: AsRef<str>>(field: Field, names: &[S]) -> Result<Arc<Ring>, PolyError> {
        Ok(Arc::new(Ring {
            field,
            vars: VariableContext::new(names)?,
        }))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &VariableContext {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Same field, with `extra` fresh variables placed in front.
    pub(crate) fn with_leading_vars(&self, extra: usize) -> Arc<Ring> {
        let mut names: Vec<String> = (0..extra).map(|i| format!("_elim{i}")).collect();
        names.extend(self.vars.names.iter().cloned());
        Arc::new(Ring {
            field: self.field,
            vars: VariableContext::new(&names).expect("fresh names are distinct"),
        })
    }

    pub fn same_as(self: &Arc<Self>, other: &Arc<Ring>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.names.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn total_degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub(crate) fn with_leading_zeros(&self, extra: usize) -> Monomial {
        let mut exps = vec![0; extra];
        exps.extend_from_slice(&self.exps);
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    pub(crate) fn drop_leading(&self, extra: usize) -> Monomial {
        Monomial::new(self.exps[extra..].to_vec())
    }

    pub fn render(&self, vars: &VariableContext) -> String {
        if self.is_one() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .support()
            .map(|i| match self.exps[i] {
                1 => vars.name(i).to_string(),
                e => format!("{}^{}", vars.name(i), e),
            })
            .collect();
        parts.join("*")
    }
}

/// Total monomial orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
    /// Block order: grevlex on the first `k` variables, ties broken by grevlex
    /// on the rest. Eliminates the first `k` variables.
    Elimination(usize),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    /// Compares two monomials of the same length.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.exps.len(), b.exps.len());
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Grevlex => a.degree.cmp(&b.degree).then_with(|| {
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::Elimination(k) => {
                let k = (*k).min(a.exps.len());
                grevlex(&a.exps[..k], &b.exps[..k])
                    .then_with(|| grevlex(&a.exps[k..], &b.exps[k..]))
            }
        }
    }
}

/// Context-checked comparison of two monomials.
pub fn compare_monomials(
    a: &Monomial,
    b: &Monomial,
    order: MonomialOrder,
) -> Result<Ordering, PolyError> {
    if a.nvars() != b.nvars() {
        return Err(PolyError::ContextMismatch);
    }
    Ok(order.cmp(a, b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Coeff,
    pub mono: Monomial,
}

/// A polynomial in canonical form: nonzero coefficients, strictly descending
/// monomials under `order`. The zero polynomial has no terms.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<Ring>,
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if !self.ring.same_as(&other.ring) {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.with_order(self.order).terms
        }
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            order: MonomialOrder::default(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Self {
        Self::from_terms(ring, MonomialOrder::default(), vec![(c, Monomial::one(ring.nvars()))])
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::from_monomial(ring, Monomial::var(ring.nvars(), i))
    }

    pub fn var_named(ring: &Arc<Ring>, name: &str) -> Result<Self, PolyError> {
        let i = ring
            .vars()
            .position(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.into()))?;
        Ok(Self::var(ring, i))
    }

    pub fn from_monomial(ring: &Arc<Ring>, m: Monomial) -> Self {
        Polynomial {
            ring: ring.clone(),
            order: MonomialOrder::default(),
            terms: vec![Term {
                coeff: Coeff::one(),
                mono: m,
            }],
        }
    }

    /// Builds a canonical polynomial from arbitrary terms: coefficients are
    /// mapped into the field, like monomials merged, zeros dropped.
    pub fn from_terms(ring: &Arc<Ring>, order: MonomialOrder, terms: Vec<(Coeff, Monomial)>) -> Self {
        let field = ring.field();
        let mut ts: Vec<Term> = terms
            .into_iter()
            .map(|(c, m)| {
                assert_eq!(m.nvars(), ring.nvars(), "monomial length must match the ring");
                Term {
                    coeff: field.element(&c).expect("coefficient not representable in field"),
                    mono: m,
                }
            })
            .collect();
        ts.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(ts.len());
        for t in ts {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = field.add(&last.coeff, &t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Polynomial {
            ring: ring.clone(),
            order,
            terms: out,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for a single term (including nonzero constants).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms
            .windows(2)
            .all(|w| w[0].mono.total_degree() == w[1].mono.total_degree())
    }

    pub fn constant_term(&self) -> Coeff {
        self.terms
            .iter()
            .find(|t| t.mono.is_one())
            .map(|t| t.coeff.clone())
            .unwrap_or_else(Coeff::zero)
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.total_degree()).max()
    }

    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial {
            ring: self.ring.clone(),
            order,
            terms,
        }
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let field = self.ring.field();
                let inv = field.inv(lc).expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring).with_order(self.order);
        }
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.mul(&t.coeff, c),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// `c * m * self`; order is preserved since monomial orders are multiplicative.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring).with_order(self.order);
        }
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.mul(&t.coeff, c),
                    mono: t.mono.mul(m),
                })
                .collect(),
        }
    }

    fn check(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch)
        }
    }

    /// `self + sign * other` by merging two sorted term lists.
    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let other = other.with_order(self.order);
        let field = self.ring.field();
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let signed = |t: &Term| -> Term {
            if negate {
                Term {
                    coeff: field.neg(&t.coeff),
                    mono: t.mono.clone(),
                }
            } else {
                t.clone()
            }
        };
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].mono, &b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(signed(&b[j]));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        field.sub(&a[i].coeff, &b[j].coeff)
                    } else {
                        field.add(&a[i].coeff, &b[j].coeff)
                    };
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            mono: a[i].mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(signed));
        Polynomial {
            ring: self.ring.clone(),
            order,
            terms: out,
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        let field = self.ring.field();
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for s in &self.terms {
            for t in &other.terms {
                raw.push(Term {
                    coeff: field.mul(&s.coeff, &t.coeff),
                    mono: s.mono.mul(&t.mono),
                });
            }
        }
        let order = self.order;
        raw.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = field.add(&last.coeff, &t.coeff),
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Ok(Polynomial {
            ring: self.ring.clone(),
            order,
            terms: out,
        })
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring).with_order(self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// In-place `self -= c * m * g`, the elementary reduction step.
    pub(crate) fn sub_mul_term(&mut self, c: &Coeff, m: &Monomial, g: &Polynomial) {
        let shifted = g.with_order(self.order).mul_term(c, m);
        *self = self.merge(&shifted, true);
    }

    /// Re-embeds into a ring with `extra` new leading variables.
    pub(crate) fn lift(&self, target: &Arc<Ring>, extra: usize, order: MonomialOrder) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| (t.coeff.clone(), t.mono.with_leading_zeros(extra)))
            .collect();
        Polynomial::from_terms(target, order, terms)
    }

    /// Inverse of [`Polynomial::lift`] for polynomials free of the leading variables.
    pub(crate) fn project(&self, target: &Arc<Ring>, extra: usize, order: MonomialOrder) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                debug_assert!(t.mono.exps[..extra].iter().all(|&e| e == 0));
                (t.coeff.clone(), t.mono.drop_leading(extra))
            })
            .collect();
        Polynomial::from_terms(target, order, terms)
    }

    /// Division by an ordered list of divisors under `order`.
    pub fn divide(&self, divisors: &[Polynomial], order: MonomialOrder) -> Result<Division, PolyError> {
        for g in divisors {
            self.check(g)?;
            if g.is_zero() {
                return Err(PolyError::DivisionByZero);
            }
        }
        let field = self.ring.field();
        let gs: Vec<Polynomial> = divisors.iter().map(|g| g.with_order(order)).collect();
        let mut p = self.with_order(order);
        let mut quotients: Vec<Vec<(Coeff, Monomial)>> = vec![Vec::new(); gs.len()];
        let mut remainder: Vec<Term> = Vec::new();
        while let Some(lt) = p.terms.first().cloned() {
            let hit = gs.iter().enumerate().find_map(|(i, g)| {
                let glt = g.leading_term().unwrap();
                lt.mono.div(&glt.mono).map(|m| (i, m, field.div(&lt.coeff, &glt.coeff).unwrap()))
            });
            match hit {
                Some((i, m, c)) => {
                    p.sub_mul_term(&c, &m, &gs[i]);
                    quotients[i].push((c, m));
                }
                None => {
                    remainder.push(lt);
                    p.terms.remove(0);
                }
            }
        }
        Ok(Division {
            quotients: quotients
                .into_iter()
                .map(|ts| Polynomial::from_terms(&self.ring, order, ts))
                .collect(),
            remainder: Polynomial {
                ring: self.ring.clone(),
                order,
                terms: remainder,
            },
        })
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

/// Result of [`Polynomial::divide`]: `f = sum q_i g_i + remainder`.
#[derive(Clone, Debug)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (k, t) in self.terms.iter().enumerate() {
            let neg = field.is_negative(&t.coeff);
            let mag = if neg { -t.coeff.clone() } else { t.coeff.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if t.mono.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", t.mono.render(self.ring.vars()))?;
            } else {
                write!(f, "{}*{}", mag, t.mono.render(self.ring.vars()))?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let field = self.ring.field();
        self.scale(&field.neg(&field.one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn ring(names: &[&str]) -> Arc<Ring> {
        Ring::new(Field::Rationals, names).unwrap()
    }

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn lex_and_grevlex_examples() {
        // x^2 vs xy under lex x > y
        assert_eq!(
            compare_monomials(&m(&[2, 0]), &m(&[1, 1]), MonomialOrder::Lex).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            compare_monomials(&m(&[1, 2, 3]), &m(&[1, 2, 3]), MonomialOrder::Grevlex).unwrap(),
            Ordering::Equal
        );
        // xz vs y^2 under grevlex x > y > z
        assert_eq!(
            compare_monomials(&m(&[1, 0, 1]), &m(&[0, 2, 0]), MonomialOrder::Grevlex).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            compare_monomials(&m(&[1, 0]), &m(&[1, 0, 0]), MonomialOrder::Lex),
            Err(PolyError::ContextMismatch)
        );
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring(&["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        assert_eq!(&(&x + &y) + &(-&y), x);
        assert_eq!((&x * &y).to_string(), "x*y");
        let prod = &(&x + &y) * &(&x - &y);
        assert_eq!(prod, &(&x * &x) - &(&y * &y));
        assert_eq!(prod.to_string(), "x^2 - y^2");
    }

    #[test]
    fn context_mismatch_is_reported() {
        let a = Polynomial::var(&ring(&["x", "y"]), 0);
        let b = Polynomial::var(&ring(&["u", "v"]), 0);
        assert_eq!(a.checked_add(&b), Err(PolyError::ContextMismatch));
        assert!(a.divide(&[b], MonomialOrder::Lex).is_err());
    }

    #[test]
    fn division_examples() {
        let r = ring(&["x", "y", "z"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let z = Polynomial::var(&r, 2);
        let xy = &x * &y;
        let d = xy.divide(&[xy.clone()], MonomialOrder::Grevlex).unwrap();
        assert!(d.remainder.is_zero());

        let x2 = &x * &x;
        let d = x2.divide(&[xy.clone()], MonomialOrder::Grevlex).unwrap();
        assert_eq!(d.remainder, x2);

        let f = &(&x2 * &y) + &z;
        let g = &xy - &z;
        let d = f.divide(&[g.clone()], MonomialOrder::Lex).unwrap();
        assert_eq!(d.remainder, &(&x * &z) + &z);
        assert_eq!(d.quotients[0], x);
    }

    #[test]
    fn rendering() {
        let r = ring(&["x", "y", "z"]);
        let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
        let p = Polynomial::from_terms(
            &r,
            MonomialOrder::Grevlex,
            vec![
                (BigRational::from_integer(3.into()), m(&[2, 1, 0])),
                (half, m(&[0, 0, 1])),
            ],
        );
        assert_eq!(p.to_string(), "3*x^2*y - 1/2*z");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        assert_eq!((-&Polynomial::one(&r)).to_string(), "-1");
    }

    #[test]
    fn prime_field_negation_renders_residue() {
        let r = Ring::new(Field::prime(5).unwrap(), &["x"]).unwrap();
        let p = -&Polynomial::var(&r, 0);
        assert_eq!(p.to_string(), "4*x");
    }
}
