//! The poset of monomial primes containing a monomial ideal: heights,
//! saturated chains, the chain construction, and DOT rendering.
//!
//! Every node is a set of variables `S` whose prime `(S)` contains `I`.
//! Since `T/(S)` is a power series ring in the remaining variables,
//! `dim(T/(S)) = v - |S|` and the poset is graded by `|S|`.

use std::fmt::Write;
use std::sync::OnceLock;

use crate::error::{MonomialError, SpectraError};
use crate::monomial::{MonomialIdeal, VarSet};
use crate::poly::VariableContext;

pub const DEFAULT_MAX_POSET_VARS: usize = 16;
/// Above this many variables the node list is only built on request.
const EAGER_NODE_LIMIT: usize = 12;

#[derive(Debug)]
pub struct SpecPoset {
    nvars: usize,
    ideal: MonomialIdeal,
    minimal: Vec<VarSet>,
    associated: Vec<VarSet>,
    nodes: OnceLock<Vec<VarSet>>,
}

impl SpecPoset {
    pub fn build(ideal: &MonomialIdeal, max_vars: usize) -> Result<Self, SpectraError> {
        let nvars = ideal.nvars();
        if nvars > max_vars {
            return Err(SpectraError::TooManyVariables {
                vars: nvars,
                cap: max_vars,
            });
        }
        if ideal.is_unit() {
            return Err(MonomialError::UnitIdeal.into());
        }
        let poset = SpecPoset {
            nvars,
            ideal: ideal.clone(),
            minimal: ideal.minimal_primes()?,
            associated: ideal.associated_primes()?,
            nodes: OnceLock::new(),
        };
        if nvars <= EAGER_NODE_LIMIT {
            poset.nodes();
        }
        Ok(poset)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn top(&self) -> VarSet {
        VarSet::all(self.nvars)
    }

    pub fn minimal_primes(&self) -> &[VarSet] {
        &self.minimal
    }

    pub fn associated_primes(&self) -> &[VarSet] {
        &self.associated
    }

    pub fn contains(&self, q: &VarSet) -> bool {
        q.is_subset(&self.top()) && self.ideal.contained_in(q)
    }

    pub fn is_minimal(&self, q: &VarSet) -> bool {
        self.minimal.contains(q)
    }

    pub fn is_associated(&self, q: &VarSet) -> bool {
        self.associated.contains(q)
    }

    /// All nodes in canonical order (by size, then lexicographically).
    pub fn nodes(&self) -> &[VarSet] {
        self.nodes.get_or_init(|| {
            let mut out: Vec<VarSet> = (0..=self.top().0)
                .map(VarSet)
                .filter(|s| self.ideal.contained_in(s))
                .collect();
            out.sort();
            out
        })
    }

    /// Nodes covering `q`: one more variable. Every such set stays in the poset.
    pub fn covers_above(&self, q: &VarSet) -> Vec<VarSet> {
        (0..self.nvars).filter(|&i| !q.contains(i)).map(|i| q.with(i)).collect()
    }

    /// Covering pairs `(lower, upper)` of the Hasse diagram, in canonical order.
    pub fn cover_relations(&self) -> Vec<(VarSet, VarSet)> {
        let mut out = Vec::new();
        for q in self.nodes() {
            for up in self.covers_above(q) {
                out.push((*q, up));
            }
        }
        out
    }

    /// `dim(T/Q) = v - |Q|`.
    pub fn dim_quotient(&self, q: &VarSet) -> usize {
        self.nvars - q.len()
    }

    pub fn dim(&self) -> usize {
        self.minimal.iter().map(|p| self.dim_quotient(p)).max().unwrap_or(0)
    }

    /// `ht Q = max { dim(T/P) - dim(T/Q) : P ∈ Min, P ⊆ Q }`, valid because
    /// `T` is catenary and each `T/P` is a power series ring.
    pub fn height(&self, q: &VarSet) -> Result<usize, SpectraError> {
        if !self.contains(q) {
            return Err(SpectraError::NotInPoset(format!("{:?}", q.indices())));
        }
        Ok(self
            .minimal
            .iter()
            .filter(|p| p.is_subset(q))
            .map(|p| q.len() - p.len())
            .max()
            .expect("every node contains a minimal prime"))
    }

    /// A saturated chain `P ⊊ Q_1 ⊊ .. ⊊ Q_{n-1} ⊊ M` of length
    /// `n = dim(T/P)` whose interior primes are not associated and contain no
    /// minimal prime other than `P`.
    ///
    /// Each step adds one variable. Variables lying in no other minimal prime
    /// are preferred, then declared order; dead ends are backtracked, and
    /// infeasibility names the deepest step that could not be filled.
    pub fn construct_chain(&self, p: &VarSet) -> Result<PrimeChain, SpectraError> {
        if !self.is_minimal(p) {
            return Err(SpectraError::NotMinimal(format!("{:?}", p.indices())));
        }
        let n = self.dim_quotient(p);
        if n < 1 {
            return Err(SpectraError::Precondition("dim(T/P) >= 1".into()));
        }
        if self.is_associated(&self.top()) {
            return Err(SpectraError::Precondition("the maximal ideal is not associated".into()));
        }
        let others: VarSet = self
            .minimal
            .iter()
            .filter(|q| *q != p)
            .fold(VarSet::empty(), |acc, q| VarSet(acc.0 | q.0));
        let mut preference: Vec<usize> = (0..self.nvars).collect();
        preference.sort_by_key(|&i| (others.contains(i), i));

        let eligible = |q: &VarSet| {
            !self.is_associated(q) && !self.minimal.iter().any(|m| m != p && m.is_subset(q))
        };

        fn extend(
            path: &mut Vec<VarSet>,
            remaining: usize,
            preference: &[usize],
            eligible: &dyn Fn(&VarSet) -> bool,
            deepest: &mut usize,
        ) -> bool {
            *deepest = (*deepest).max(path.len());
            if remaining == 0 {
                return true;
            }
            let cur = *path.last().unwrap();
            for &i in preference {
                if cur.contains(i) {
                    continue;
                }
                let next = cur.with(i);
                if !eligible(&next) {
                    continue;
                }
                path.push(next);
                if extend(path, remaining - 1, preference, eligible, deepest) {
                    return true;
                }
                path.pop();
            }
            false
        }

        let mut path = vec![*p];
        let mut deepest = 0;
        if !extend(&mut path, n - 1, &preference, &eligible, &mut deepest) {
            return Err(SpectraError::Infeasible {
                step: deepest,
                from: format!("{:?}", p.indices()),
            });
        }
        path.push(self.top());
        Ok(PrimeChain { primes: path })
    }

    /// One entry per step of `chain`: the prime, its height and `dim(T/Q)`.
    pub fn annotate(&self, chain: &PrimeChain) -> Result<Vec<ChainLink>, SpectraError> {
        chain
            .primes
            .iter()
            .map(|q| {
                Ok(ChainLink {
                    prime: *q,
                    height: self.height(q)?,
                    dim: self.dim_quotient(q),
                })
            })
            .collect()
    }

    /// Hasse diagram of the whole poset.
    pub fn to_dot(&self, vars: &VariableContext) -> String {
        let mut out = String::from("digraph spec {\n  rankdir=BT;\n");
        for q in self.nodes() {
            writeln!(out, "  {};", self.dot_node(q, vars)).unwrap();
        }
        for (a, b) in self.cover_relations() {
            writeln!(out, "  {} -> {};", node_id(&a), node_id(&b)).unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// Union of the given chains; every chain contributes `length` edges.
    pub fn chains_to_dot(&self, chains: &[PrimeChain], vars: &VariableContext) -> String {
        let mut nodes: Vec<VarSet> = chains.iter().flat_map(|c| c.primes.iter().copied()).collect();
        nodes.sort();
        nodes.dedup();
        let mut edges: Vec<(VarSet, VarSet)> = chains
            .iter()
            .flat_map(|c| c.primes.windows(2).map(|w| (w[0], w[1])))
            .collect();
        edges.sort();
        edges.dedup();
        let mut out = String::from("digraph chains {\n  rankdir=BT;\n");
        for q in &nodes {
            writeln!(out, "  {};", self.dot_node(q, vars)).unwrap();
        }
        for (a, b) in edges {
            writeln!(out, "  {} -> {};", node_id(&a), node_id(&b)).unwrap();
        }
        out.push_str("}\n");
        out
    }

    fn dot_node(&self, q: &VarSet, vars: &VariableContext) -> String {
        let mut attrs = vec![format!("label=\"{}\"", q.render(vars))];
        if *q == self.top() {
            attrs.push("shape=doubleoctagon".into());
        } else if self.is_minimal(q) {
            attrs.push("shape=box".into());
        }
        if self.is_associated(q) {
            attrs.push("style=filled".into());
            attrs.push("fillcolor=\"#d9d9d9\"".into());
        }
        format!("{} [{}]", node_id(q), attrs.join(", "))
    }
}

fn node_id(q: &VarSet) -> String {
    format!("p{:x}", q.0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainLink {
    pub prime: VarSet,
    pub height: usize,
    pub dim: usize,
}

/// A strictly increasing chain of monomial primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeChain {
    pub primes: Vec<VarSet>,
}

impl PrimeChain {
    pub fn length(&self) -> usize {
        self.primes.len().saturating_sub(1)
    }

    pub fn start(&self) -> Option<&VarSet> {
        self.primes.first()
    }

    pub fn end(&self) -> Option<&VarSet> {
        self.primes.last()
    }

    pub fn interior(&self) -> &[VarSet] {
        if self.primes.len() < 2 {
            &[]
        } else {
            &self.primes[1..self.primes.len() - 1]
        }
    }

    /// Every step adds exactly one variable.
    pub fn is_saturated(&self) -> bool {
        self.primes
            .windows(2)
            .all(|w| w[0].is_subset(&w[1]) && w[1].len() == w[0].len() + 1)
    }

    pub fn render(&self, vars: &VariableContext) -> Vec<String> {
        self.primes.iter().map(|q| q.render(vars)).collect()
    }
}

/// Sorted (descending) multiset `{dim(T/P) : P ∈ Min T}`.
pub fn noncat_profile(ideal: &MonomialIdeal) -> Result<Vec<usize>, MonomialError> {
    let mut dims: Vec<usize> = ideal
        .minimal_primes()?
        .iter()
        .map(|p| ideal.nvars() - p.len())
        .collect();
    dims.sort_unstable_by(|a, b| b.cmp(a));
    Ok(dims)
}

/// Checks a constructed chain from first principles against the given
/// `minimal` and `associated` primes of an ideal in `nvars` variables.
pub fn verify_constructed_chain(
    chain: &PrimeChain,
    start: &VarSet,
    nvars: usize,
    minimal: &[VarSet],
    associated: &[VarSet],
) -> Result<(), String> {
    let top = VarSet::all(nvars);
    if chain.start() != Some(start) {
        return Err("chain does not start at the requested minimal prime".into());
    }
    if chain.end() != Some(&top) {
        return Err("chain does not end at the maximal ideal".into());
    }
    if !chain.is_saturated() {
        return Err("chain is not saturated".into());
    }
    if chain.length() != nvars - start.len() {
        return Err(format!(
            "length {} differs from dim(T/P) = {}",
            chain.length(),
            nvars - start.len()
        ));
    }
    for q in chain.interior() {
        if associated.contains(q) {
            return Err(format!("interior prime {:?} is associated", q.indices()));
        }
        if minimal.iter().any(|m| m != start && m.is_subset(q)) {
            return Err(format!("interior prime {:?} contains a second minimal prime", q.indices()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(idx: &[usize]) -> VarSet {
        VarSet::from_indices(idx.iter().copied())
    }

    /// (x) ∩ (y_1..y_a) over x, y_1..y_a, z_1..z_b
    fn ufd_family(a: usize, b: usize) -> MonomialIdeal {
        let n = 1 + a + b;
        let gens = (1..=a)
            .map(|i| {
                let mut e = vec![0; n];
                e[0] = 1;
                e[i] = 1;
                e
            })
            .collect::<Vec<_>>();
        MonomialIdeal::from_exponents(n, &gens).unwrap()
    }

    #[test]
    fn poset_of_the_domain_example() {
        // x, y, z, v
        let i = MonomialIdeal::from_exponents(4, &[vec![1, 1, 0, 0], vec![1, 0, 1, 0]]).unwrap();
        let p = SpecPoset::build(&i, 16).unwrap();
        assert_eq!(p.minimal_primes(), &[vs(&[0]), vs(&[1, 2])]);
        assert_eq!(p.top(), vs(&[0, 1, 2, 3]));
        assert!(p.nodes().contains(&vs(&[0])));
        assert!(!p.contains(&vs(&[1])));
        assert_eq!(p.height(&p.top()).unwrap(), 3);
        assert_eq!(p.height(&vs(&[1, 2])).unwrap(), 0);
        assert!(p.height(&vs(&[3])).is_err());
    }

    #[test]
    fn zero_and_maximal_posets() {
        let p = SpecPoset::build(&MonomialIdeal::zero(3), 16).unwrap();
        assert_eq!(p.nodes().len(), 8);
        let m = MonomialIdeal::from_exponents(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let p = SpecPoset::build(&m, 16).unwrap();
        assert_eq!(p.nodes(), &[vs(&[0, 1])]);
        assert!(matches!(
            SpecPoset::build(&MonomialIdeal::zero(17), 16),
            Err(SpectraError::TooManyVariables { vars: 17, cap: 16 })
        ));
    }

    #[test]
    fn height_in_ufd_family() {
        let (a, b) = (3, 2);
        let p = SpecPoset::build(&ufd_family(a, b), 16).unwrap();
        let q = vs(&[1, 2, 3, 4, 5]);
        assert_eq!(p.height(&q).unwrap(), b);
    }

    #[test]
    fn two_chains_in_the_ufd_family() {
        // x=0, y1=1, y2=2, z1=3, z2=4
        let p = SpecPoset::build(&ufd_family(2, 2), 16).unwrap();
        let right = p.construct_chain(&vs(&[1, 2])).unwrap();
        assert_eq!(
            right.primes,
            vec![vs(&[1, 2]), vs(&[1, 2, 3]), vs(&[1, 2, 3, 4]), vs(&[0, 1, 2, 3, 4])]
        );
        let left = p.construct_chain(&vs(&[0])).unwrap();
        assert_eq!(
            left.primes,
            vec![vs(&[0]), vs(&[0, 3]), vs(&[0, 3, 4]), vs(&[0, 1, 3, 4]), vs(&[0, 1, 2, 3, 4])]
        );
        for (c, s) in [(&left, vs(&[0])), (&right, vs(&[1, 2]))] {
            verify_constructed_chain(c, &s, 5, p.minimal_primes(), p.associated_primes()).unwrap();
        }
    }

    #[test]
    fn chain_in_power_series_ring() {
        let p = SpecPoset::build(&MonomialIdeal::zero(2), 16).unwrap();
        let c = p.construct_chain(&VarSet::empty()).unwrap();
        assert_eq!(c.primes, vec![vs(&[]), vs(&[0]), vs(&[0, 1])]);
        assert_eq!(c.length(), 2);
    }

    #[test]
    fn chain_preconditions() {
        // (x^2, xy): M is associated
        let i = MonomialIdeal::from_exponents(2, &[vec![2, 0], vec![1, 1]]).unwrap();
        let p = SpecPoset::build(&i, 16).unwrap();
        assert!(matches!(p.construct_chain(&vs(&[0])), Err(SpectraError::Precondition(_))));
        let p = SpecPoset::build(&ufd_family(2, 2), 16).unwrap();
        assert!(matches!(p.construct_chain(&vs(&[1])), Err(SpectraError::NotMinimal(_))));
    }

    #[test]
    fn infeasible_chain_is_reported() {
        // (xy) in x,y: from (x) the only step is M itself, fine; but in
        // (xy, xz) ∩ ... construct a case where every extension picks up a
        // second minimal prime: I = (x) ∩ (y) ∩ (z) = (xyz) in x,y,z.
        // From (x): (x,y) ⊇ (y), (x,z) ⊇ (z), so step 1 is impossible.
        let i = MonomialIdeal::from_exponents(3, &[vec![1, 1, 1]]).unwrap();
        let p = SpecPoset::build(&i, 16).unwrap();
        assert_eq!(
            p.construct_chain(&vs(&[0])),
            Err(SpectraError::Infeasible {
                step: 1,
                from: "[0]".into()
            })
        );
    }

    #[test]
    fn profile_examples() {
        let i = MonomialIdeal::from_exponents(4, &[vec![1, 1, 0, 0], vec![1, 0, 1, 0]]).unwrap();
        assert_eq!(noncat_profile(&i).unwrap(), vec![3, 2]);
        assert_eq!(noncat_profile(&ufd_family(2, 2)).unwrap(), vec![4, 3]);
    }

    #[test]
    fn dot_output() {
        let vars = VariableContext::new(&["x", "y"]).unwrap();
        let m = MonomialIdeal::from_exponents(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let p = SpecPoset::build(&m, 16).unwrap();
        let dot = p.to_dot(&vars);
        assert_eq!(dot.matches("label=").count(), 1);
        assert_eq!(dot.matches("->").count(), 0);

        let vars = VariableContext::new(&["x", "y1", "y2", "z1", "z2"]).unwrap();
        let p = SpecPoset::build(&ufd_family(2, 2), 16).unwrap();
        let chains = [p.construct_chain(&vs(&[0])).unwrap(), p.construct_chain(&vs(&[1, 2])).unwrap()];
        let dot = p.chains_to_dot(&chains, &vars);
        assert_eq!(dot.matches("->").count(), 7);
        assert_eq!(dot.matches("label=").count(), 8);
        assert!(dot.contains("label=\"(x,z1)\""));
        let single = p.chains_to_dot(&chains[1..], &vars);
        assert_eq!(single.matches("->").count(), 3);
    }
}
