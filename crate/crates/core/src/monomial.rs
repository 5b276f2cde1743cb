//! Combinatorics of monomial ideals: minimal primes as minimal vertex covers,
//! associated primes through irreducible decomposition, and localization at
//! primes generated by variables.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::MonomialError;
use crate::groebner::IdealHandle;
use crate::poly::{Monomial, Polynomial, Ring, VariableContext};

/// A set of variable indices; as an ideal, the prime generated by those variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct VarSet(pub u64);

impl VarSet {
    pub fn empty() -> Self {
        VarSet(0)
    }

    pub fn all(nvars: usize) -> Self {
        if nvars == 64 {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << nvars) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(idx: I) -> Self {
        VarSet(idx.into_iter().fold(0, |m, i| m | 1 << i))
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(&self, i: usize) -> Self {
        VarSet(self.0 | 1 << i)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(&self, other: &VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(&self, other: &VarSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..64).filter(|&i| self.contains(i)).collect()
    }

    pub fn names(&self, vars: &VariableContext) -> Vec<String> {
        self.indices().into_iter().map(|i| vars.name(i).to_string()).collect()
    }

    /// `(x,y)` style rendering; the empty set is the zero ideal `(0)`.
    pub fn render(&self, vars: &VariableContext) -> String {
        if self.is_empty() {
            "(0)".into()
        } else {
            format!("({})", self.names(vars).join(","))
        }
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by size, then lexicographically by sorted index list.
impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.indices().cmp(&other.indices()))
    }
}

/// A monomial ideal given by its unique minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| !gens.iter().enumerate().any(|(j, h)| j != i && h.divides(g)))
        .collect();
    gens.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect()
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self, MonomialError> {
        if nvars > 64 {
            return Err(MonomialError::TooManyVariables(nvars));
        }
        if gens.iter().any(|g| g.nvars() != nvars) {
            return Err(MonomialError::ContextMismatch);
        }
        Ok(MonomialIdeal {
            nvars,
            gens: minimalize(gens),
        })
    }

    pub fn from_exponents(nvars: usize, gens: &[Vec<u32>]) -> Result<Self, MonomialError> {
        Self::new(nvars, gens.iter().map(|e| Monomial::new(e.clone())).collect())
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    /// Reads a monomial ideal off the reduced Gröbner basis of `ideal`.
    pub fn from_ideal(ideal: &IdealHandle) -> Result<Self, MonomialError> {
        let gb = ideal.reduced_basis()?;
        if !gb.iter().all(|g| g.is_monomial()) {
            return Err(MonomialError::NotMonomial);
        }
        Self::new(
            ideal.ring().nvars(),
            gb.iter().map(|g| g.leading_monomial().unwrap().clone()).collect(),
        )
    }

    pub fn to_ideal(&self, ring: &Arc<Ring>) -> IdealHandle {
        assert_eq!(ring.nvars(), self.nvars);
        IdealHandle::new(
            ring,
            self.gens.iter().map(|m| Polynomial::from_monomial(ring, m.clone())).collect(),
        )
        .unwrap()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.exponents().iter().all(|&e| e <= 1))
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn with_generator(&self, m: Monomial) -> Self {
        let mut gens = self.gens.clone();
        gens.push(m);
        MonomialIdeal {
            nvars: self.nvars,
            gens: minimalize(gens),
        }
    }

    /// Whether the prime generated by `p` contains the ideal.
    pub fn contained_in(&self, p: &VarSet) -> bool {
        self.supports().iter().all(|s| s.intersects(p))
    }

    fn supports(&self) -> Vec<VarSet> {
        self.gens.iter().map(|g| VarSet::from_indices(g.support())).collect()
    }

    pub fn radical(&self) -> Self {
        MonomialIdeal {
            nvars: self.nvars,
            gens: minimalize(
                self.gens
                    .iter()
                    .map(|g| Monomial::new(g.exponents().iter().map(|&e| e.min(1)).collect()))
                    .collect(),
            ),
        }
    }

    /// Minimal primes, as the minimal vertex covers of the generator supports.
    pub fn minimal_primes(&self) -> Result<Vec<VarSet>, MonomialError> {
        if self.is_unit() {
            return Err(MonomialError::UnitIdeal);
        }
        fn cover(edges: &[VarSet], chosen: VarSet, found: &mut Vec<VarSet>) {
            if found.iter().any(|f| f.is_subset(&chosen)) {
                return;
            }
            match edges.iter().find(|e| !e.intersects(&chosen)) {
                None => {
                    found.retain(|f| !chosen.is_subset(f));
                    found.push(chosen);
                }
                Some(e) => {
                    for i in e.indices() {
                        cover(edges, chosen.with(i), found);
                    }
                }
            }
        }
        let mut edges = self.radical().supports();
        edges.sort();
        let mut found = Vec::new();
        cover(&edges, VarSet::empty(), &mut found);
        found.sort();
        Ok(found)
    }

    /// Irredundant irreducible decomposition, by splitting a generator
    /// `m = x_i^a · m'` into `(I + x_i^a) ∩ (I + m')` until only pure powers remain.
    pub fn irreducible_decomposition(&self) -> Result<Vec<IrreducibleComponent>, MonomialError> {
        if self.is_unit() {
            return Err(MonomialError::UnitIdeal);
        }
        fn split(ideal: MonomialIdeal, seen: &mut HashSet<MonomialIdeal>, out: &mut Vec<IrreducibleComponent>) {
            if !seen.insert(ideal.clone()) {
                return;
            }
            let mixed = ideal.gens.iter().find(|g| g.support().nth(1).is_some()).cloned();
            match mixed {
                None => {
                    let mut exps = vec![0; ideal.nvars];
                    for g in &ideal.gens {
                        let i = g.support().next().unwrap();
                        exps[i] = g.exponent(i);
                    }
                    out.push(IrreducibleComponent { exps });
                }
                Some(m) => {
                    let i = m.support().next().unwrap();
                    let mut power = vec![0; ideal.nvars];
                    power[i] = m.exponent(i);
                    let power = Monomial::new(power);
                    let rest = m.div(&power).unwrap();
                    split(ideal.with_generator(power), seen, out);
                    split(ideal.with_generator(rest), seen, out);
                }
            }
        }
        let mut raw = Vec::new();
        split(self.clone(), &mut HashSet::new(), &mut raw);
        raw.sort_by(|a, b| a.exps.cmp(&b.exps));
        raw.dedup();
        let irredundant: Vec<IrreducibleComponent> = raw
            .iter()
            .filter(|c| !raw.iter().any(|d| d != *c && d.is_contained_in(c)))
            .cloned()
            .collect();
        Ok(irredundant)
    }

    /// `Ass(R/I)`: radicals of the irredundant irreducible components.
    pub fn associated_primes(&self) -> Result<Vec<VarSet>, MonomialError> {
        let mut primes: Vec<VarSet> = self
            .irreducible_decomposition()?
            .iter()
            .map(|c| c.radical())
            .collect();
        primes.sort();
        primes.dedup();
        Ok(primes)
    }

    /// Localization at the prime `q`: variables outside `q` become units and
    /// are dropped from every generator.
    pub fn localize(&self, q: &VarSet) -> Result<Localization, MonomialError> {
        if !self.contained_in(q) {
            return Err(MonomialError::EmptyLocalization(format!("{:?}", q.indices())));
        }
        let vars = q.indices();
        let gens = self
            .gens
            .iter()
            .map(|g| Monomial::new(vars.iter().map(|&i| g.exponent(i)).collect()))
            .collect();
        Ok(Localization {
            ideal: MonomialIdeal::new(vars.len(), gens)?,
            vars,
        })
    }

    pub fn render(&self, vars: &VariableContext) -> String {
        if self.gens.is_empty() {
            return "(0)".into();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.render(vars)).collect();
        format!("({})", parts.join(", "))
    }
}

/// An ideal generated by pure powers `x_i^{e_i}` (`e_i = 0` means absent).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IrreducibleComponent {
    exps: Vec<u32>,
}

impl IrreducibleComponent {
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn radical(&self) -> VarSet {
        VarSet::from_indices(self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i))
    }

    /// True when the component is the prime generated by its variables.
    pub fn is_prime(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Ideal containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &IrreducibleComponent) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&e, &f)| e == 0 || (f > 0 && f <= e))
    }
}

/// `(R/I)_Q` presented over the variables of `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Localization {
    pub ideal: MonomialIdeal,
    /// Original indices of the surviving variables, ascending.
    pub vars: Vec<usize>,
}

impl Localization {
    /// A ring over the surviving variables, named as in `ring`.
    pub fn ring(&self, ring: &Ring) -> Arc<Ring> {
        let names: Vec<&str> = self.vars.iter().map(|&i| ring.vars().name(i)).collect();
        Ring::new(ring.field(), &names).expect("subset of distinct names")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| format!("{:?}", g.exponents())).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}
