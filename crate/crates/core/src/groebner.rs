//! Buchberger's algorithm and the ideal calculus built on it: membership,
//! equality, intersection, colon ideals, Krull dimension, and the depth tests.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::IdealError;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

pub const DEFAULT_GB_STEPS: usize = 200_000;

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Counts elementary reductions and pair treatments against a fixed budget.
struct StepCounter {
    used: usize,
    limit: usize,
}

impl StepCounter {
    fn tick(&mut self) -> Result<(), IdealError> {
        self.used += 1;
        if self.used > self.limit {
            Err(IdealError::BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }
}

/// Full normal form of `f` modulo `basis` (all polynomials already in `order`).
fn normal_form(
    f: &Polynomial,
    basis: &[Polynomial],
    steps: &mut StepCounter,
) -> Result<Polynomial, IdealError> {
    let field = f.ring().field();
    let mut p = f.clone();
    let mut rem: Vec<(num_rational::BigRational, Monomial)> = Vec::new();
    while let Some(lt) = p.leading_term().cloned() {
        let hit = basis.iter().find_map(|g| {
            let glt = g.leading_term()?;
            lt.mono.div(&glt.mono).map(|m| (g, m, field.div(&lt.coeff, &glt.coeff).unwrap()))
        });
        match hit {
            Some((g, m, c)) => {
                steps.tick()?;
                p.sub_mul_term(&c, &m, g);
            }
            None => {
                rem.push((lt.coeff.clone(), lt.mono.clone()));
                let tail = Polynomial::from_terms(p.ring(), p.order(), vec![(lt.coeff, lt.mono)]);
                p = &p - &tail;
            }
        }
    }
    Ok(Polynomial::from_terms(f.ring(), f.order(), rem))
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Polynomial {
    let field = f.ring().field();
    let (fl, gl) = (f.leading_term().unwrap(), g.leading_term().unwrap());
    let a = f.mul_term(&field.inv(&fl.coeff).unwrap(), &lcm.div(&fl.mono).unwrap());
    let b = g.mul_term(&field.inv(&gl.coeff).unwrap(), &lcm.div(&gl.mono).unwrap());
    &a - &b
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
///
/// The output is monic, inter-reduced and sorted by descending leading
/// monomial, so it is canonical for the pair (ideal, order).
pub fn groebner_basis(
    gens: &[Polynomial],
    order: MonomialOrder,
    step_budget: usize,
) -> Result<Vec<Polynomial>, IdealError> {
    let mut steps = StepCounter {
        used: 0,
        limit: step_budget,
    };
    let mut input: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_order(order).monic())
        .collect();
    if input.is_empty() {
        return Ok(Vec::new());
    }
    let ring = input[0].ring().clone();
    if input.iter().any(|g| g.is_constant()) {
        return Ok(vec![Polynomial::one(&ring).with_order(order)]);
    }
    // Deterministic start: smallest leading monomials first.
    input.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));

    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pending: Vec<Pair> = Vec::new();
    let mut pending_keys: HashSet<(usize, usize)> = HashSet::new();

    let push = |h: Polynomial,
                    basis: &mut Vec<Polynomial>,
                    pending: &mut Vec<Pair>,
                    keys: &mut HashSet<(usize, usize)>| {
        let k = basis.len();
        let lk = h.leading_monomial().unwrap().clone();
        for (i, g) in basis.iter().enumerate() {
            let li = g.leading_monomial().unwrap();
            if li.gcd_is_one(&lk) {
                // product criterion
                continue;
            }
            pending.push(Pair {
                i,
                j: k,
                lcm: li.lcm(&lk),
            });
            keys.insert((i, k));
        }
        basis.push(h);
    };

    for g in input {
        let h = normal_form(&g, &basis, &mut steps)?;
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![Polynomial::one(&ring).with_order(order)]);
        }
        push(h.monic(), &mut basis, &mut pending, &mut pending_keys);
    }

    while !pending.is_empty() {
        steps.tick()?;
        // normal strategy: smallest lcm, ties by index
        let mut best = 0;
        for (idx, p) in pending.iter().enumerate().skip(1) {
            let b = &pending[best];
            let c = order
                .cmp(&p.lcm, &b.lcm)
                .then_with(|| (p.j, p.i).cmp(&(b.j, b.i)));
            if c.is_lt() {
                best = idx;
            }
        }
        let pair = pending.swap_remove(best);
        pending_keys.remove(&(pair.i, pair.j));

        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].leading_monomial().unwrap().divides(&pair.lcm)
                && !pending_keys.contains(&(pair.i.min(k), pair.i.max(k)))
                && !pending_keys.contains(&(pair.j.min(k), pair.j.max(k)))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[pair.i], &basis[pair.j], &pair.lcm);
        let h = normal_form(&s, &basis, &mut steps)?;
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![Polynomial::one(&ring).with_order(order)]);
        }
        push(h.monic(), &mut basis, &mut pending, &mut pending_keys);
    }

    // Minimalize: drop elements whose leading monomial is divisible by another's.
    let lms: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial().unwrap().clone()).collect();
    let minimal: Vec<Polynomial> = basis
        .iter()
        .enumerate()
        .filter(|(i, _)| {
            !lms.iter().enumerate().any(|(j, lj)| {
                j != *i && lj.divides(&lms[*i]) && (lj != &lms[*i] || j < *i)
            })
        })
        .map(|(_, g)| g.clone())
        .collect();

    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, h)| h.clone())
            .collect();
        reduced.push(normal_form(g, &others, &mut steps)?.monic());
    }
    reduced.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    Ok(reduced)
}

/// Outcome of the depth-at-least-two search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DepthVerdict {
    /// `M ∈ Ass(T)`; depth is zero.
    DepthZero,
    /// `f` is regular on `T` and `M ∉ Ass(T/fT)`.
    AtLeastTwo { regular_element: Polynomial },
    /// `f` is regular on `T` and `M ∈ Ass(T/fT)`, so depth is exactly one.
    ExactlyOne { regular_element: Polynomial },
    /// No candidate in the budget turned out to be regular.
    Inconclusive { candidates_tried: usize },
}

impl DepthVerdict {
    /// `Some(answer)` when certified, `None` when the search was inconclusive.
    pub fn at_least_two(&self) -> Option<bool> {
        match self {
            DepthVerdict::AtLeastTwo { .. } => Some(true),
            DepthVerdict::DepthZero | DepthVerdict::ExactlyOne { .. } => Some(false),
            DepthVerdict::Inconclusive { .. } => None,
        }
    }

    pub fn certificate(&self) -> Option<&Polynomial> {
        match self {
            DepthVerdict::AtLeastTwo { regular_element }
            | DepthVerdict::ExactlyOne { regular_element } => Some(regular_element),
            _ => None,
        }
    }
}

/// Sums of `1, 2, 3, ...` distinct variables in declared order, truncated to `budget`.
pub fn regular_element_candidates(ring: &Arc<Ring>, budget: usize) -> Vec<Polynomial> {
    let v = ring.nvars();
    let mut out = Vec::new();
    for size in 1..=v {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            if out.len() >= budget {
                return out;
            }
            let mut f = Polynomial::zero(ring);
            for &i in &idx {
                f = &f + &Polynomial::var(ring, i);
            }
            out.push(f);
            // next combination in lexicographic order
            let mut k = size;
            while k > 0 && idx[k - 1] == v - size + k - 1 {
                k -= 1;
            }
            if k == 0 {
                break;
            }
            idx[k - 1] += 1;
            for t in k..size {
                idx[t] = idx[t - 1] + 1;
            }
        }
    }
    out
}

/// An ideal of `K[x_1..x_v]` with lazily computed, cached Gröbner data.
///
/// Caches are write-once: a reduced basis is unique for a fixed order, so
/// concurrent readers always observe the same value.
pub struct IdealHandle {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    step_budget: usize,
    order: MonomialOrder,
    bases: Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>,
    dimension: OnceLock<usize>,
    max_assoc: OnceLock<bool>,
}

impl Clone for IdealHandle {
    fn clone(&self) -> Self {
        IdealHandle {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            step_budget: self.step_budget,
            order: self.order,
            bases: Mutex::new(self.bases.lock().unwrap().clone()),
            dimension: self.dimension.clone(),
            max_assoc: self.max_assoc.clone(),
        }
    }
}

impl fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IdealHandle({self})")
    }
}

impl fmt::Display for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl IdealHandle {
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Self, IdealError> {
        for g in &generators {
            if !g.ring().same_as(ring) {
                return Err(crate::error::PolyError::ContextMismatch.into());
            }
        }
        Ok(IdealHandle {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            step_budget: DEFAULT_GB_STEPS,
            order: MonomialOrder::Grevlex,
            bases: Mutex::new(HashMap::new()),
            dimension: OnceLock::new(),
            max_assoc: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Self::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &Arc<Ring>) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    /// The ideal `M = (x_1, .., x_v)` of all variables.
    pub fn maximal(ring: &Arc<Ring>) -> Self {
        Self::new(ring, (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect()).unwrap()
    }

    pub fn with_step_budget(mut self, budget: usize) -> Self {
        self.step_budget = budget;
        self
    }

    pub fn step_budget(&self) -> usize {
        self.step_budget
    }

    /// Order used for membership, equality and dimension.
    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        self.order = order;
        self
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    fn derived(&self, generators: Vec<Polynomial>) -> Self {
        Self::new(&self.ring, generators)
            .expect("same ring")
            .with_step_budget(self.step_budget)
            .with_order(self.order)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner_basis(&self, order: MonomialOrder) -> Result<Arc<Vec<Polynomial>>, IdealError> {
        if let Some(gb) = self.bases.lock().unwrap().get(&order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(groebner_basis(&self.generators, order, self.step_budget)?);
        let mut cache = self.bases.lock().unwrap();
        Ok(cache.entry(order).or_insert(gb).clone())
    }

    pub fn reduced_basis(&self) -> Result<Arc<Vec<Polynomial>>, IdealError> {
        self.groebner_basis(self.order)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, IdealError> {
        if !f.ring().same_as(&self.ring) {
            return Err(crate::error::PolyError::ContextMismatch.into());
        }
        let gb = self.reduced_basis()?;
        let mut steps = StepCounter {
            used: 0,
            limit: usize::MAX,
        };
        normal_form(&f.with_order(self.order), &gb, &mut steps)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, IdealError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &IdealHandle) -> Result<bool, IdealError> {
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &IdealHandle) -> Result<bool, IdealError> {
        if !self.ring.same_as(&other.ring) {
            return Err(crate::error::PolyError::ContextMismatch.into());
        }
        // reduced bases are canonical only for a common order
        Ok(*self.reduced_basis()? == *other.groebner_basis(self.order)?)
    }

    pub fn is_unit(&self) -> Result<bool, IdealError> {
        Ok(self.reduced_basis()?.iter().any(|g| g.is_constant()))
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Whether the ideal is generated by monomials, decided on the reduced basis.
    pub fn is_monomial(&self) -> Result<bool, IdealError> {
        Ok(self.reduced_basis()?.iter().all(|g| g.is_monomial()))
    }

    /// Whether every generator has zero constant term, i.e. `I ⊆ M`.
    pub fn inside_maximal(&self) -> bool {
        self.generators.iter().all(|g| num_traits::Zero::is_zero(&g.constant_term()))
    }

    pub fn sum(&self, other: &IdealHandle) -> IdealHandle {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        self.derived(gens)
    }

    pub fn with_generator(&self, f: &Polynomial) -> IdealHandle {
        let mut gens = self.generators.clone();
        gens.push(f.clone());
        self.derived(gens)
    }

    /// `I ∩ J`. Monomial pairs use lcms of generators; anything else goes
    /// through elimination of an auxiliary variable.
    pub fn intersection(&self, other: &IdealHandle) -> Result<IdealHandle, IdealError> {
        if !self.ring.same_as(&other.ring) {
            return Err(crate::error::PolyError::ContextMismatch.into());
        }
        if self.is_zero() || other.is_zero() {
            return Ok(self.derived(Vec::new()));
        }
        if self.is_monomial()? && other.is_monomial()? {
            return self.intersection_of_monomial(other);
        }
        self.intersection_by_elimination(other)
    }

    fn intersection_of_monomial(&self, other: &IdealHandle) -> Result<IdealHandle, IdealError> {
        let a = self.reduced_basis()?;
        let b = other.reduced_basis()?;
        let mut lcms: Vec<Monomial> = Vec::new();
        for f in a.iter() {
            for g in b.iter() {
                lcms.push(f.leading_monomial().unwrap().lcm(g.leading_monomial().unwrap()));
            }
        }
        let gens = lcms
            .into_iter()
            .map(|m| Polynomial::from_monomial(&self.ring, m))
            .collect();
        Ok(self.derived(gens))
    }

    /// `I ∩ J = (t·I + (1 − t)·J) ∩ K[x]` with `t` eliminated by a block order.
    pub fn intersection_by_elimination(&self, other: &IdealHandle) -> Result<IdealHandle, IdealError> {
        if self.is_zero() || other.is_zero() {
            return Ok(self.derived(Vec::new()));
        }
        let order = MonomialOrder::Elimination(1);
        let big = self.ring.with_leading_vars(1);
        let t = Polynomial::var(&big, 0).with_order(order);
        let one_minus_t = &Polynomial::one(&big).with_order(order) - &t;
        let mut gens = Vec::new();
        for f in &self.generators {
            gens.push(&t * &f.lift(&big, 1, order));
        }
        for g in &other.generators {
            gens.push(&one_minus_t * &g.lift(&big, 1, order));
        }
        let gb = groebner_basis(&gens, order, self.step_budget)?;
        let kept = gb
            .iter()
            .filter(|g| g.leading_monomial().unwrap().exponent(0) == 0)
            .map(|g| g.project(&self.ring, 1, MonomialOrder::Grevlex))
            .collect();
        Ok(self.derived(kept))
    }

    /// `(I : f)`. `(I : 0)` is the unit ideal.
    pub fn quotient_by(&self, f: &Polynomial) -> Result<IdealHandle, IdealError> {
        if !f.ring().same_as(&self.ring) {
            return Err(crate::error::PolyError::ContextMismatch.into());
        }
        if f.is_zero() {
            return Ok(self.derived(vec![Polynomial::one(&self.ring)]));
        }
        let principal = self.derived(vec![f.clone()]);
        let meet = self.intersection(&principal)?;
        let mut gens = Vec::with_capacity(meet.generators.len());
        for h in &meet.generators {
            let d = h.divide(std::slice::from_ref(f), MonomialOrder::Grevlex)?;
            debug_assert!(d.remainder.is_zero(), "I ∩ (f) must be divisible by f");
            gens.push(d.quotients.into_iter().next().unwrap());
        }
        Ok(self.derived(gens))
    }

    /// `(I : J) = ∩_{f ∈ gens(J)} (I : f)`; `(I : (0))` is the unit ideal.
    pub fn quotient(&self, other: &IdealHandle) -> Result<IdealHandle, IdealError> {
        let mut acc: Option<IdealHandle> = None;
        for f in &other.generators {
            let q = self.quotient_by(f)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersection(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| self.derived(vec![Polynomial::one(&self.ring)])))
    }

    /// Whether `f` is a non-zero-divisor on `K[x]/I`, i.e. `(I : f) = I`.
    pub fn is_regular_element(&self, f: &Polynomial) -> Result<bool, IdealError> {
        if self.contains(f)? {
            return Err(IdealError::Degenerate(f.to_string()));
        }
        self.contains_ideal(&self.quotient_by(f)?)
    }

    /// `dim K[x]/I`, as the largest set of variables independent modulo the
    /// leading-term ideal.
    pub fn krull_dimension(&self) -> Result<usize, IdealError> {
        if let Some(d) = self.dimension.get() {
            return Ok(*d);
        }
        let gb = self.reduced_basis()?;
        if gb.iter().any(|g| g.is_constant()) {
            return Err(IdealError::UnitIdeal);
        }
        let v = self.ring.nvars();
        if v > 64 {
            return Err(IdealError::TooManyVariables(v));
        }
        let supports: Vec<u64> = gb
            .iter()
            .map(|g| g.leading_monomial().unwrap().support().fold(0u64, |m, i| m | 1 << i))
            .collect();
        let d = max_independent_set(&supports, v);
        Ok(*self.dimension.get_or_init(|| d))
    }

    /// `M ∈ Ass(K[x]/I)` for `M` the ideal of all variables, via `(I : M) ≠ I`.
    pub fn maximal_ideal_associated(&self) -> Result<bool, IdealError> {
        if let Some(b) = self.max_assoc.get() {
            return Ok(*b);
        }
        if self.is_unit()? {
            return Err(IdealError::UnitIdeal);
        }
        let v = self.ring.nvars();
        let mut colon: Option<IdealHandle> = None;
        let mut answer = true;
        for i in 0..v {
            let q = self.quotient_by(&Polynomial::var(&self.ring, i))?;
            let next = match colon {
                None => q,
                Some(c) => c.intersection(&q)?,
            };
            if self.contains_ideal(&next)? {
                answer = false;
                break;
            }
            colon = Some(next);
        }
        // v = 0: M = (0) and (I : 0) is the unit ideal
        Ok(*self.max_assoc.get_or_init(|| answer))
    }

    /// Checks a single candidate: `None` if `f` is not regular (or is zero in
    /// the quotient), otherwise whether `M ∉ Ass(T/fT)`.
    pub fn depth_two_via(&self, f: &Polynomial) -> Result<Option<bool>, IdealError> {
        if self.contains(f)? || !self.is_regular_element(f)? {
            return Ok(None);
        }
        let cut = self.with_generator(f);
        Ok(Some(!cut.maximal_ideal_associated()?))
    }

    /// Searches the deterministic candidate sequence for a regular element and
    /// decides depth ≥ 2 from the first one found.
    pub fn depth_at_least_two(&self, candidate_budget: usize) -> Result<DepthVerdict, IdealError> {
        if self.maximal_ideal_associated()? {
            return Ok(DepthVerdict::DepthZero);
        }
        let candidates = regular_element_candidates(&self.ring, candidate_budget);
        let tried = candidates.len();
        for f in candidates {
            match self.depth_two_via(&f)? {
                None => continue,
                Some(true) => return Ok(DepthVerdict::AtLeastTwo { regular_element: f }),
                Some(false) => return Ok(DepthVerdict::ExactlyOne { regular_element: f }),
            }
        }
        Ok(DepthVerdict::Inconclusive {
            candidates_tried: tried,
        })
    }
}

fn max_independent_set(supports: &[u64], v: usize) -> usize {
    fn go(i: usize, chosen: u64, size: usize, v: usize, supports: &[u64], best: &mut usize) {
        if size + (v - i) <= *best {
            return;
        }
        if i == v {
            *best = size;
            return;
        }
        let with = chosen | 1 << i;
        if supports.iter().all(|&s| s & !with != 0) {
            go(i + 1, with, size + 1, v, supports, best);
        }
        go(i + 1, chosen, size, v, supports, best);
    }
    let mut best = 0;
    go(0, 0, 0, v, supports, &mut best);
    best
}
