//! Classification checks for a presented complete local ring `T = K[[x]]/I`.
//!
//! Each check evaluates the conditions of one characterization (completion of
//! a domain, of a noncatenary domain, of a UFD, of a noncatenary UFD, and the
//! forced-catenarity corollaries) and returns a three-valued verdict together
//! with the objects that certify it.
//!
//! Invariants are computed on the polynomial model `K[x]/I`. For monomial `I`
//! they agree with the power series quotient exactly; other inputs are
//! stamped `unverified-completion` and only the Gröbner-based checks run.

use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::{AnalyzeError, IdealError, MonomialError};
use crate::groebner::{DepthVerdict, IdealHandle, DEFAULT_GB_STEPS};
use crate::monomial::{MonomialIdeal, VarSet};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::spectra::{PrimeChain, SpecPoset, DEFAULT_MAX_POSET_VARS};

pub const DEFAULT_REGULAR_CANDIDATES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisConfig {
    pub gb_steps: usize,
    pub regular_candidates: usize,
    pub max_poset_vars: usize,
    pub order: MonomialOrder,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            gb_steps: DEFAULT_GB_STEPS,
            regular_candidates: DEFAULT_REGULAR_CANDIDATES,
            max_poset_vars: DEFAULT_MAX_POSET_VARS,
            order: MonomialOrder::Grevlex,
        }
    }
}

/// Three-valued outcome. `Inconclusive` means a bounded search ran out;
/// `Unsupported` means the input class has no in-scope test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    Inconclusive,
    Unsupported,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn from_option(b: Option<bool>) -> Self {
        b.map_or(Verdict::Inconclusive, Verdict::from_bool)
    }

    pub fn is_true(self) -> bool {
        self == Verdict::True
    }

    pub fn is_false(self) -> bool {
        self == Verdict::False
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            _ => None,
        }
    }

    /// Conjunction: a certified `False` wins, then `Unsupported`, then `Inconclusive`.
    pub fn and(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (False, _) | (_, False) => False,
            (Unsupported, _) | (_, Unsupported) => Unsupported,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => True,
        }
    }
}

/// `T = K[[x_1..x_v]]/I`, with the user's intersection components when the
/// ideal was written as `intersect(..)`.
#[derive(Clone, Debug)]
pub struct RingPresentation {
    pub ring: Arc<Ring>,
    pub ideal: IdealHandle,
    pub components: Vec<IdealHandle>,
}

impl RingPresentation {
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Self, IdealError> {
        Ok(RingPresentation {
            ring: ring.clone(),
            ideal: IdealHandle::new(ring, generators)?,
            components: Vec::new(),
        })
    }

    /// The intersection of `components`, keeping them as a user-supplied decomposition.
    pub fn intersection(ring: &Arc<Ring>, components: Vec<IdealHandle>) -> Result<Self, IdealError> {
        let mut iter = components.iter();
        let first = iter.next().cloned().unwrap_or_else(|| IdealHandle::unit(ring));
        let mut acc = first;
        for c in iter {
            acc = acc.intersection(c)?;
        }
        Ok(RingPresentation {
            ring: ring.clone(),
            ideal: acc,
            components,
        })
    }

    pub fn with_budget(mut self, config: &AnalysisConfig) -> Self {
        self.ideal = self
            .ideal
            .with_step_budget(config.gb_steps)
            .with_order(config.order);
        self.components = self
            .components
            .into_iter()
            .map(|c| c.with_step_budget(config.gb_steps).with_order(config.order))
            .collect();
        self
    }

    /// `Q[x,y]/(x*y)` style rendering.
    pub fn render(&self) -> String {
        let gens: Vec<String> = match self.ideal.reduced_basis() {
            Ok(gb) => gb.iter().map(|g| g.to_string()).collect(),
            Err(_) => self.ideal.generators().iter().map(|g| g.to_string()).collect(),
        };
        let gens = if gens.is_empty() { vec!["0".to_string()] } else { gens };
        format!("{}/({})", self.ring, gens.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Semantics {
    #[serde(rename = "monomial-exact")]
    MonomialExact,
    #[serde(rename = "unverified-completion")]
    UnverifiedCompletion,
}

/// The ring under analysis with its basic invariants computed once.
#[derive(Debug)]
pub struct LocalRing {
    presentation: RingPresentation,
    config: AnalysisConfig,
    monomial: Option<MonomialIdeal>,
    minimal: Option<Vec<VarSet>>,
    associated: Option<Vec<VarSet>>,
    dim: usize,
    is_field: bool,
    depth_zero: bool,
    depth: OnceLock<DepthVerdict>,
    poset: OnceLock<SpecPoset>,
}

impl LocalRing {
    pub fn new(presentation: RingPresentation, config: AnalysisConfig) -> Result<Self, AnalyzeError> {
        let presentation = presentation.with_budget(&config);
        let ideal = &presentation.ideal;
        if !ideal.inside_maximal() || ideal.is_unit()? {
            return Err(AnalyzeError::UnitIdeal);
        }
        let ring = presentation.ring.clone();
        let dim = ideal.krull_dimension()?;
        let is_field = ideal.equals(&IdealHandle::maximal(&ring))?;
        let depth_zero = ideal.maximal_ideal_associated()?;
        let monomial = match MonomialIdeal::from_ideal(ideal) {
            Ok(m) => Some(m),
            Err(MonomialError::NotMonomial) => None,
            Err(e) => return Err(e.into()),
        };
        let (minimal, associated) = match &monomial {
            Some(m) => (Some(m.minimal_primes()?), Some(m.associated_primes()?)),
            None => (None, None),
        };
        Ok(LocalRing {
            presentation,
            config,
            monomial,
            minimal,
            associated,
            dim,
            is_field,
            depth_zero,
            depth: OnceLock::new(),
            poset: OnceLock::new(),
        })
    }

    pub fn presentation(&self) -> &RingPresentation {
        &self.presentation
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.presentation.ring
    }

    pub fn ideal(&self) -> &IdealHandle {
        &self.presentation.ideal
    }

    pub fn config(&self) -> &AnalysisConfig {
        &self.config
    }

    pub fn nvars(&self) -> usize {
        self.ring().nvars()
    }

    pub fn monomial(&self) -> Option<&MonomialIdeal> {
        self.monomial.as_ref()
    }

    pub fn semantics(&self) -> Semantics {
        if self.monomial.is_some() {
            Semantics::MonomialExact
        } else {
            Semantics::UnverifiedCompletion
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `I = M`.
    pub fn is_field(&self) -> bool {
        self.is_field
    }

    /// `K[[x]]` itself, a DVR.
    pub fn is_dvr(&self) -> bool {
        self.nvars() == 1 && self.ideal().is_zero()
    }

    /// `M ∈ Ass T`.
    pub fn depth_zero(&self) -> bool {
        self.depth_zero
    }

    pub fn minimal_primes(&self) -> Option<&[VarSet]> {
        self.minimal.as_deref()
    }

    pub fn associated_primes(&self) -> Option<&[VarSet]> {
        self.associated.as_deref()
    }

    pub fn dim_quotient(&self, p: &VarSet) -> usize {
        self.nvars() - p.len()
    }

    /// `{dim(T/P) : P ∈ Min T}`, descending.
    pub fn profile(&self) -> Option<Vec<usize>> {
        self.minimal.as_ref().map(|min| {
            let mut d: Vec<usize> = min.iter().map(|p| self.dim_quotient(p)).collect();
            d.sort_unstable_by(|a, b| b.cmp(a));
            d
        })
    }

    /// Height of a monomial prime containing `I`.
    pub fn height(&self, q: &VarSet) -> Option<usize> {
        self.minimal
            .as_ref()?
            .iter()
            .filter(|p| p.is_subset(q))
            .map(|p| q.len() - p.len())
            .max()
    }

    pub fn depth(&self) -> Result<&DepthVerdict, AnalyzeError> {
        if let Some(d) = self.depth.get() {
            return Ok(d);
        }
        let d = self.ideal().depth_at_least_two(self.config.regular_candidates)?;
        Ok(self.depth.get_or_init(|| d))
    }

    pub fn depth_at_least_two(&self) -> Result<Verdict, AnalyzeError> {
        Ok(Verdict::from_option(self.depth()?.at_least_two()))
    }

    pub fn poset(&self) -> Result<&SpecPoset, AnalyzeError> {
        if let Some(p) = self.poset.get() {
            return Ok(p);
        }
        let m = self
            .monomial
            .as_ref()
            .ok_or_else(|| AnalyzeError::Unsupported("poset requires a monomial ideal".into()))?;
        let p = SpecPoset::build(m, self.config.max_poset_vars)?;
        Ok(self.poset.get_or_init(|| p))
    }

    /// First minimal prime (canonical order) with `lo < dim(T/P) < dim T`.
    fn qualifying_prime(&self, lo: usize) -> Option<VarSet> {
        self.minimal.as_ref()?.iter().copied().find(|p| {
            let d = self.dim_quotient(p);
            lo < d && d < self.dim
        })
    }

    pub fn render_prime(&self, p: &VarSet) -> Vec<String> {
        p.names(self.ring().vars())
    }
}

/// Completion of a local domain: no integer is a zero divisor (automatic over
/// a field) and, unless `T` is a field, `M ∉ Ass T`.
pub fn check_domain_completion(t: &LocalRing) -> Verdict {
    Verdict::from_bool(t.is_field() || !t.depth_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoncatDomain {
    pub verdict: Verdict,
    pub prime: Option<VarSet>,
    pub chain: Option<PrimeChain>,
    pub note: Option<String>,
}

/// Completion of a noncatenary local domain: `M ∉ Ass T` and some minimal
/// prime has `1 < dim(T/P) < dim T`. The witness chain is built from that `P`.
pub fn check_noncat_domain(t: &LocalRing) -> Result<NoncatDomain, AnalyzeError> {
    let lech_ii = Verdict::from_bool(!t.depth_zero());
    let Some(_) = t.minimal_primes() else {
        return Ok(NoncatDomain {
            verdict: lech_ii.and(Verdict::Unsupported),
            prime: None,
            chain: None,
            note: Some("minimal primes need a monomial ideal".into()),
        });
    };
    let prime = t.qualifying_prime(1);
    let verdict = lech_ii.and(Verdict::from_bool(prime.is_some()));
    let (mut chain, mut note) = (None, None);
    if verdict.is_true() {
        let p = prime.unwrap();
        match t.poset() {
            Ok(poset) => match poset.construct_chain(&p) {
                Ok(c) => chain = Some(c),
                Err(e) => note = Some(format!("chain witness: {e}")),
            },
            Err(e) if e.is_resource() => note = Some(format!("chain witness: {e}")),
            Err(e) => return Err(e),
        }
    }
    Ok(NoncatDomain {
        verdict,
        prime,
        chain,
        note,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UfdReason {
    Field,
    DiscreteValuationRing,
    Depth { regular_element: Polynomial },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UfdCompletion {
    pub verdict: Verdict,
    pub reason: Option<UfdReason>,
}

/// Completion of a UFD: a field, a DVR, or depth at least two (the prime
/// subring condition holds automatically over a field).
pub fn check_ufd_completion(t: &LocalRing) -> Result<UfdCompletion, AnalyzeError> {
    if t.is_field() {
        return Ok(UfdCompletion {
            verdict: Verdict::True,
            reason: Some(UfdReason::Field),
        });
    }
    if t.is_dvr() {
        return Ok(UfdCompletion {
            verdict: Verdict::True,
            reason: Some(UfdReason::DiscreteValuationRing),
        });
    }
    let depth = t.depth()?;
    let verdict = Verdict::from_option(depth.at_least_two());
    let reason = match depth {
        DepthVerdict::AtLeastTwo { regular_element } => Some(UfdReason::Depth {
            regular_element: regular_element.clone(),
        }),
        _ => None,
    };
    Ok(UfdCompletion { verdict, reason })
}

/// A prime `Q'` with `dim(T/Q') = 1`, `ht Q' + 1 < dim T` and `depth T_{Q'} > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UfdWitness {
    pub prime: VarSet,
    /// Minimal prime the chain starts from.
    pub source: VarSet,
    pub height: usize,
    /// `T`-regular element with `Q' ∉ Ass(T/xT)`.
    pub regular_element: Polynomial,
    /// Depth-two certificate inside the localization `T_{Q'}`.
    pub localized_certificate: Polynomial,
    pub chain: Option<PrimeChain>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessSearch {
    Found(UfdWitness),
    /// No minimal prime with `2 < dim(T/P) < dim T`, or `M ∈ Ass T`.
    PreconditionFails(String),
    Inconclusive(String),
    Unsupported(String),
}

impl WitnessSearch {
    pub fn witness(&self) -> Option<&UfdWitness> {
        match self {
            WitnessSearch::Found(w) => Some(w),
            _ => None,
        }
    }
}

/// `(R/I)_{Q}` as an ideal over the variables of `Q`, via the monomial engine.
fn localized_ideal(t: &LocalRing, q: &VarSet) -> Result<(Arc<Ring>, IdealHandle, Vec<usize>), AnalyzeError> {
    let m = t.monomial().expect("caller checked monomial");
    let loc = m.localize(q)?;
    let ring = loc.ring(t.ring());
    let handle = loc
        .ideal
        .to_ideal(&ring)
        .with_step_budget(t.config.gb_steps)
        .with_order(t.config.order);
    Ok((ring, handle, loc.vars))
}

/// A `T`-regular element `x` with `Q' ∉ Ass(T/xT)`: variables of `pool` first
/// (checked with the monomial engine), then sums of two of them (colon tests).
fn regular_element_avoiding(
    t: &LocalRing,
    q: &VarSet,
    pool: &VarSet,
) -> Result<Option<Polynomial>, AnalyzeError> {
    let m = t.monomial().expect("caller checked monomial");
    let ass = t.associated_primes().unwrap();
    for i in pool.indices() {
        if ass.iter().any(|p| p.contains(i)) {
            continue;
        }
        let cut = m.with_generator(Monomial::var(t.nvars(), i));
        if !cut.associated_primes()?.contains(q) {
            return Ok(Some(Polynomial::var(t.ring(), i)));
        }
    }
    let (lring, lideal, lvars) = localized_ideal(t, q)?;
    let idx = pool.indices();
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            let x = &Polynomial::var(t.ring(), i) + &Polynomial::var(t.ring(), j);
            match t.ideal().is_regular_element(&x) {
                Ok(true) => {}
                Ok(false) | Err(IdealError::Degenerate(_)) => continue,
                Err(e) => return Err(e.into()),
            }
            let li = lvars.iter().position(|&k| k == i).unwrap();
            let lj = lvars.iter().position(|&k| k == j).unwrap();
            let lx = &Polynomial::var(&lring, li) + &Polynomial::var(&lring, lj);
            if !lideal.with_generator(&lx).maximal_ideal_associated()? {
                return Ok(Some(x));
            }
        }
    }
    Ok(None)
}

/// Searches for the prime `Q'` of the UFD equivalence: first the last interior
/// prime of the chain built from a minimal `P` with `2 < dim(T/P) < dim T`,
/// then every other monomial prime of coheight one.
pub fn ufd_witness_prime(t: &LocalRing) -> Result<WitnessSearch, AnalyzeError> {
    if t.monomial().is_none() {
        return Ok(WitnessSearch::Unsupported("requires a monomial ideal".into()));
    }
    let Some(p) = t.qualifying_prime(2) else {
        return Ok(WitnessSearch::PreconditionFails(
            "no minimal prime with 2 < dim(T/P) < dim T".into(),
        ));
    };
    if t.depth_zero() {
        return Ok(WitnessSearch::PreconditionFails("M is an associated prime".into()));
    }
    let poset = match t.poset() {
        Ok(poset) => poset,
        Err(e) if e.is_resource() => return Ok(WitnessSearch::Inconclusive(e.to_string())),
        Err(e) => return Err(e),
    };
    let chain = poset.construct_chain(&p).ok();

    let v = t.nvars();
    let top = VarSet::all(v);
    let mut candidates: Vec<(VarSet, VarSet)> = Vec::new();
    if let Some(c) = &chain {
        let n = c.primes.len();
        candidates.push((c.primes[n - 2], c.primes[n.saturating_sub(3)]));
    }
    for w in 0..v {
        let q = VarSet(top.0 & !(1 << w));
        if poset.contains(&q) && !candidates.iter().any(|(c, _)| *c == q) {
            candidates.push((q, q));
        }
    }

    let mut inconclusive = None;
    for (q, pool) in candidates {
        let height = t.height(&q).expect("q contains I");
        if t.dim_quotient(&q) != 1 || height + 1 >= t.dim() {
            continue;
        }
        let (_, lideal, _) = localized_ideal(t, &q)?;
        let localized = match lideal.depth_at_least_two(t.config.regular_candidates)? {
            DepthVerdict::AtLeastTwo { regular_element } => regular_element,
            DepthVerdict::Inconclusive { candidates_tried } => {
                inconclusive = Some(format!(
                    "no regular element among {candidates_tried} candidates in the localization at {}",
                    q.render(t.ring().vars())
                ));
                continue;
            }
            _ => continue,
        };
        let Some(x) = regular_element_avoiding(t, &q, &pool)? else {
            inconclusive = Some(format!(
                "no regular element x with {} outside Ass(T/xT)",
                q.render(t.ring().vars())
            ));
            continue;
        };
        let on_chain = chain.as_ref().filter(|c| c.primes[c.primes.len() - 2] == q).cloned();
        return Ok(WitnessSearch::Found(UfdWitness {
            prime: q,
            source: p,
            height,
            regular_element: x,
            localized_certificate: localized,
            chain: on_chain,
        }));
    }
    // Only monomial primes were searched; the witness may be non-monomial.
    Ok(WitnessSearch::Inconclusive(inconclusive.unwrap_or_else(|| {
        "no monomial prime of coheight one qualifies; a witness would be non-monomial".into()
    })))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoncatUfd {
    pub verdict: Verdict,
    pub prime: Option<VarSet>,
    pub depth_certificate: Option<Polynomial>,
    pub witness: WitnessSearch,
}

/// Completion of a noncatenary local UFD: depth at least two and some
/// minimal prime with `2 < dim(T/P) < dim T`.
pub fn check_noncat_ufd(t: &LocalRing) -> Result<NoncatUfd, AnalyzeError> {
    let depth = t.depth_at_least_two()?;
    let depth_certificate = match t.depth()? {
        DepthVerdict::AtLeastTwo { regular_element } => Some(regular_element.clone()),
        _ => None,
    };
    let (exists, prime) = match t.minimal_primes() {
        None => (Verdict::Unsupported, None),
        Some(_) => {
            let p = t.qualifying_prime(2);
            (Verdict::from_bool(p.is_some()), p)
        }
    };
    let verdict = depth.and(exists);
    let witness = if verdict.is_true() {
        debug_assert!(t.dim() > 3, "the conditions force dim T > 3");
        ufd_witness_prime(t)?
    } else {
        WitnessSearch::PreconditionFails("the noncatenary-UFD conditions do not hold".into())
    };
    Ok(NoncatUfd {
        verdict,
        prime,
        depth_certificate,
        witness,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ForcedCatenary {
    /// Every local domain with completion `T` is catenary.
    pub domain_forced: Verdict,
    /// Every local UFD with completion `T` is catenary.
    pub ufd_forced: Verdict,
    /// `T` completes both a noncatenary local domain and a catenary local UFD.
    pub mixed: Verdict,
}

pub fn check_forced_catenary(t: &LocalRing) -> Result<ForcedCatenary, AnalyzeError> {
    let Some(profile) = t.profile() else {
        return Ok(ForcedCatenary {
            domain_forced: Verdict::Unsupported,
            ufd_forced: Verdict::Unsupported,
            mixed: Verdict::Unsupported,
        });
    };
    let dim = t.dim();
    let depth_pos = Verdict::from_bool(!t.depth_zero());
    let depth_two = t.depth_at_least_two()?;
    let low_or_top = |bound: usize| profile.iter().all(|&d| d <= bound || d == dim);
    let domain_forced = depth_pos.and(Verdict::from_bool(low_or_top(1)));
    let ufd_forced = depth_two.and(Verdict::from_bool(low_or_top(2)));
    let mixed = Verdict::from_bool(dim > 3)
        .and(depth_two)
        .and(Verdict::from_bool(low_or_top(2)))
        .and(Verdict::from_bool(profile.contains(&2)));
    Ok(ForcedCatenary {
        domain_forced,
        ufd_forced,
        mixed,
    })
}

/// Nonequidimensional `T` rules out a universally catenary domain with completion `T`.
pub fn check_universal_catenarity_obstruction(t: &LocalRing) -> Result<Verdict, AnalyzeError> {
    if let Some(profile) = t.profile() {
        return Ok(Verdict::from_bool(profile.windows(2).any(|w| w[0] != w[1])));
    }
    let comps = &t.presentation().components;
    if comps.len() < 2 {
        return Ok(Verdict::Unsupported);
    }
    let mut dims = Vec::with_capacity(comps.len());
    for c in comps {
        dims.push(c.krull_dimension()?);
    }
    Ok(Verdict::from_bool(dims.windows(2).any(|w| w[0] != w[1])))
}

/// Sufficient check for the regularity of `T_Q` at every `Q ⊆` some associated
/// prime, restricted to `Ass = Min` in characteristic zero: every primary
/// component must be the prime itself.
pub fn check_regularity_at_min(t: &LocalRing) -> Result<Verdict, AnalyzeError> {
    let (Some(m), Some(min), Some(ass)) = (t.monomial(), t.minimal_primes(), t.associated_primes())
    else {
        return Ok(Verdict::Unsupported);
    };
    if min != ass || t.ring().field().characteristic() != 0 {
        return Ok(Verdict::Unsupported);
    }
    Ok(Verdict::from_bool(
        m.irreducible_decomposition()?.iter().all(|c| c.is_prime()),
    ))
}

/// All checks on one ring.
#[derive(Debug)]
pub struct Analysis {
    pub ring: LocalRing,
    pub domain_completion: Verdict,
    pub noncat_domain: NoncatDomain,
    pub ufd_completion: UfdCompletion,
    pub noncat_ufd: NoncatUfd,
    pub forced: ForcedCatenary,
    pub obstruction: Verdict,
    pub regularity_at_min: Verdict,
    pub inconclusive: Vec<String>,
    pub unsupported: Vec<String>,
    pub notes: Vec<String>,
}

pub fn analyze(presentation: RingPresentation, config: AnalysisConfig) -> Result<Analysis, AnalyzeError> {
    let t = LocalRing::new(presentation, config)?;
    let domain_completion = check_domain_completion(&t);
    let noncat_domain = check_noncat_domain(&t)?;
    let ufd_completion = check_ufd_completion(&t)?;
    let noncat_ufd = check_noncat_ufd(&t)?;
    let forced = check_forced_catenary(&t)?;
    let obstruction = check_universal_catenarity_obstruction(&t)?;
    let regularity_at_min = check_regularity_at_min(&t)?;

    let mut notes = vec!["lech_i: no nonzero element of the prime subring is a zero divisor over a field (satisfied by construction)".to_string()];
    if t.ring().field().characteristic() != 0 {
        notes.push("char_p: regularity remark check unavailable".into());
    }
    if t.monomial().is_none() && t.presentation().components.len() >= 2 {
        notes.push("equidimensionality taken from the user-supplied intersection components (primality not verified)".into());
    }
    if let Some(n) = &noncat_domain.note {
        notes.push(n.clone());
    }

    let mut analysis = Analysis {
        ring: t,
        domain_completion,
        noncat_domain,
        ufd_completion,
        noncat_ufd,
        forced,
        obstruction,
        regularity_at_min,
        inconclusive: Vec::new(),
        unsupported: Vec::new(),
        notes,
    };
    let (inc, uns) = analysis.undecided();
    analysis.inconclusive = inc;
    analysis.unsupported = uns;
    Ok(analysis)
}

impl Analysis {
    fn verdict_table(&self) -> Vec<(&'static str, Verdict)> {
        vec![
            ("domain_completion", self.domain_completion),
            ("noncat_domain", self.noncat_domain.verdict),
            ("ufd_completion", self.ufd_completion.verdict),
            ("noncat_ufd", self.noncat_ufd.verdict),
            ("forced_cat_domain", self.forced.domain_forced),
            ("forced_cat_ufd", self.forced.ufd_forced),
            ("mixed_class", self.forced.mixed),
            ("universally_catenary_obstructed", self.obstruction),
            ("regularity_at_min", self.regularity_at_min),
        ]
    }

    fn undecided(&self) -> (Vec<String>, Vec<String>) {
        let mut inc = Vec::new();
        let mut uns = Vec::new();
        if let DepthVerdict::Inconclusive { candidates_tried } =
            self.ring.depth().cloned().unwrap_or(DepthVerdict::DepthZero)
        {
            inc.push(format!("depth_ge2: no regular element among {candidates_tried} candidates"));
        }
        for (name, v) in self.verdict_table() {
            match v {
                Verdict::Inconclusive => inc.push(name.to_string()),
                Verdict::Unsupported => uns.push(name.to_string()),
                _ => {}
            }
        }
        if self.noncat_ufd.verdict.is_true() {
            if let WitnessSearch::Inconclusive(why) = &self.noncat_ufd.witness {
                inc.push(format!("ufd_witness_prime: {why}"));
            }
        }
        (inc, uns)
    }

    pub fn conditions(&self) -> Conditions {
        let t = &self.ring;
        let profile = t.profile();
        Conditions {
            lech_i: Some(true),
            lech_ii: Some(t.is_field() || !t.depth_zero()),
            depth_ge1: Some(!t.depth_zero()),
            depth_ge2: t.depth_at_least_two().ok().and_then(Verdict::as_bool),
            exists_p_domain: t.minimal_primes().map(|_| t.qualifying_prime(1).is_some()),
            exists_p_ufd: t.minimal_primes().map(|_| t.qualifying_prime(2).is_some()),
            equidimensional: match &profile {
                Some(p) => Some(p.windows(2).all(|w| w[0] == w[1])),
                None => self.obstruction.as_bool().map(|b| !b),
            },
        }
    }

    /// Structural implications between verdicts; returns the violated ones.
    pub fn implication_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut check = |ok: bool, what: &str| {
            if !ok {
                out.push(what.to_string());
            }
        };
        let nd = self.noncat_domain.verdict;
        let nu = self.noncat_ufd.verdict;
        let dim = self.ring.dim();
        check(!nu.is_true() || nd.is_true(), "noncat_ufd => noncat_domain");
        check(!nd.is_true() || !self.forced.domain_forced.is_true(), "noncat_domain => !forced_cat_domain");
        check(!nu.is_true() || !self.forced.ufd_forced.is_true(), "noncat_ufd => !forced_cat_ufd");
        check(!nd.is_true() || self.obstruction.is_true(), "noncat_domain => universally_catenary_obstructed");
        check(!nu.is_true() || dim > 3, "noncat_ufd => dim T > 3");
        check(
            !(self.ufd_completion.verdict.is_true() && dim <= 3) || !nu.is_true(),
            "ufd_completion with dim <= 3 => !noncat_ufd",
        );
        check(!nu.is_true() || self.ufd_completion.verdict.is_true(), "noncat_ufd => ufd_completion");
        check(!nd.is_true() || self.domain_completion.is_true(), "noncat_domain => domain_completion");
        check(
            !self.forced.mixed.is_true() || (nd.is_true() && self.forced.ufd_forced.is_true()),
            "mixed_class => noncat_domain and forced_cat_ufd",
        );
        check(!nd.is_true() || self.noncat_domain.prime.is_some(), "noncat_domain carries P");
        check(
            !self.ufd_completion.verdict.is_true() || self.ufd_completion.reason.is_some(),
            "ufd_completion carries its reason",
        );
        check(
            !nu.is_true() || (self.noncat_ufd.prime.is_some() && self.noncat_ufd.depth_certificate.is_some()),
            "noncat_ufd carries P and a depth certificate",
        );
        out
    }

    /// Re-derives every witness from scratch: chains against freshly computed
    /// primes, regular elements by new colon computations, and the UFD witness
    /// prime by an independent localization.
    pub fn reverify(&self) -> Result<(), String> {
        let t = &self.ring;
        let ring = t.ring();
        let fresh = IdealHandle::new(ring, t.ideal().generators().to_vec()).map_err(|e| e.to_string())?;
        if let (Some(p), Some(chain)) = (&self.noncat_domain.prime, &self.noncat_domain.chain) {
            let m = MonomialIdeal::from_ideal(&fresh).map_err(|e| e.to_string())?;
            let min = m.minimal_primes().map_err(|e| e.to_string())?;
            let ass = m.associated_primes().map_err(|e| e.to_string())?;
            crate::spectra::verify_constructed_chain(chain, p, t.nvars(), &min, &ass)?;
        }
        if let Some(UfdReason::Depth { regular_element }) = &self.ufd_completion.reason {
            match fresh.depth_two_via(regular_element).map_err(|e| e.to_string())? {
                Some(true) => {}
                _ => return Err(format!("depth certificate {regular_element} does not re-verify")),
            }
        }
        if let Some(w) = self.noncat_ufd.witness.witness() {
            verify_ufd_witness(&fresh, w.prime, t.config.regular_candidates)?;
            match fresh.is_regular_element(&w.regular_element) {
                Ok(true) => {}
                _ => return Err(format!("x = {} is not T-regular", w.regular_element)),
            }
        }
        Ok(())
    }

    pub fn report(&self) -> AnalysisReport {
        let t = &self.ring;
        let vars = t.ring().vars();
        let names = |p: &VarSet| p.names(vars);
        let minimal_primes = t.minimal_primes().map(|min| {
            min.iter()
                .map(|p| PrimeEntry {
                    gens: names(p),
                    dim: t.dim_quotient(p),
                    height: t.height(p).unwrap_or(0),
                })
                .collect()
        });
        let ufd_witness = self.noncat_ufd.witness.witness();
        AnalysisReport {
            ring: Some(t.presentation().render()),
            dim: Some(t.dim()),
            semantics: Some(t.semantics()),
            notes: self.notes.clone(),
            minimal_primes,
            associated_primes: t.associated_primes().map(|a| a.iter().map(names).collect()),
            profile: t.profile(),
            conditions: self.conditions(),
            verdicts: Verdicts {
                domain_completion: self.domain_completion.as_bool(),
                noncat_domain: self.noncat_domain.verdict.as_bool(),
                ufd_completion: self.ufd_completion.verdict.as_bool(),
                noncat_ufd: self.noncat_ufd.verdict.as_bool(),
                forced_cat_domain: self.forced.domain_forced.as_bool(),
                forced_cat_ufd: self.forced.ufd_forced.as_bool(),
                mixed_class: self.forced.mixed.as_bool(),
                universally_catenary_obstructed: self.obstruction.as_bool(),
                regularity_at_min: self.regularity_at_min.as_bool(),
            },
            witnesses: Witnesses {
                p: self.noncat_domain.prime.as_ref().map(names),
                chain: self.noncat_domain.chain.as_ref().map(|c| c.primes.iter().map(names).collect()),
                regular_element: match &self.ufd_completion.reason {
                    Some(UfdReason::Depth { regular_element }) => Some(regular_element.to_string()),
                    _ => t.depth().ok().and_then(|d| d.certificate()).map(|f| f.to_string()),
                },
                p_ufd: self.noncat_ufd.prime.as_ref().map(names),
                ufd_witness_prime: ufd_witness.map(|w| names(&w.prime)),
                ufd_witness_certificate: ufd_witness.map(|w| UfdCertificate {
                    regular_element: w.regular_element.to_string(),
                    localized_regular_element: w.localized_certificate.to_string(),
                    height: w.height,
                }),
            },
            inconclusive: self.inconclusive.clone(),
            unsupported: self.unsupported.clone(),
        }
    }
}

/// Condition (i) of the UFD equivalence for a monomial prime `q`, computed
/// without the monomial engine's localization: outside variables are set to
/// one and the depth search runs on the result.
pub fn verify_ufd_witness(ideal: &IdealHandle, q: VarSet, candidates: usize) -> Result<(), String> {
    let ring = ideal.ring();
    let v = ring.nvars();
    if v - q.len() != 1 {
        return Err("dim(T/Q') is not 1".into());
    }
    let m = MonomialIdeal::from_ideal(ideal).map_err(|e| e.to_string())?;
    let min = m.minimal_primes().map_err(|e| e.to_string())?;
    let dim = min.iter().map(|p| v - p.len()).max().unwrap_or(0);
    let height = min
        .iter()
        .filter(|p| p.is_subset(&q))
        .map(|p| q.len() - p.len())
        .max()
        .ok_or("Q' does not contain I")?;
    if height + 1 >= dim {
        return Err(format!("ht Q' + dim(T/Q') = {} is not below dim T = {dim}", height + 1));
    }
    let keep = q.indices();
    let names: Vec<&str> = keep.iter().map(|&i| ring.vars().name(i)).collect();
    let sub = Ring::new(ring.field(), &names).map_err(|e| e.to_string())?;
    let mut gens = Vec::new();
    for g in ideal.generators() {
        let terms = g
            .terms()
            .iter()
            .map(|t| (t.coeff.clone(), Monomial::new(keep.iter().map(|&i| t.mono.exponent(i)).collect())))
            .collect();
        gens.push(Polynomial::from_terms(&sub, MonomialOrder::Grevlex, terms));
    }
    let local = IdealHandle::new(&sub, gens).map_err(|e| e.to_string())?;
    match local.depth_at_least_two(candidates).map_err(|e| e.to_string())? {
        DepthVerdict::AtLeastTwo { .. } => Ok(()),
        other => Err(format!("depth of T_Q' not certified at least two: {other:?}")),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PrimeEntry {
    pub gens: Vec<String>,
    pub dim: usize,
    pub height: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Conditions {
    pub lech_i: Option<bool>,
    pub lech_ii: Option<bool>,
    pub depth_ge1: Option<bool>,
    pub depth_ge2: Option<bool>,
    #[serde(rename = "exists_P_domain")]
    pub exists_p_domain: Option<bool>,
    #[serde(rename = "exists_P_ufd")]
    pub exists_p_ufd: Option<bool>,
    pub equidimensional: Option<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub domain_completion: Option<bool>,
    pub noncat_domain: Option<bool>,
    pub ufd_completion: Option<bool>,
    pub noncat_ufd: Option<bool>,
    pub forced_cat_domain: Option<bool>,
    pub forced_cat_ufd: Option<bool>,
    pub mixed_class: Option<bool>,
    pub universally_catenary_obstructed: Option<bool>,
    pub regularity_at_min: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UfdCertificate {
    pub regular_element: String,
    pub localized_regular_element: String,
    pub height: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    #[serde(rename = "P")]
    pub p: Option<Vec<String>>,
    pub chain: Option<Vec<Vec<String>>>,
    pub regular_element: Option<String>,
    #[serde(rename = "P_ufd")]
    pub p_ufd: Option<Vec<String>>,
    pub ufd_witness_prime: Option<Vec<String>>,
    pub ufd_witness_certificate: Option<UfdCertificate>,
}

/// Serializable form of an [`Analysis`]; field names are stable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub ring: Option<String>,
    pub dim: Option<usize>,
    pub semantics: Option<Semantics>,
    pub notes: Vec<String>,
    pub minimal_primes: Option<Vec<PrimeEntry>>,
    pub associated_primes: Option<Vec<Vec<String>>>,
    pub profile: Option<Vec<usize>>,
    pub conditions: Conditions,
    pub verdicts: Verdicts,
    pub witnesses: Witnesses,
    pub inconclusive: Vec<String>,
    pub unsupported: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn monomial_ring(names: &[&str], gens: &[&[u32]]) -> RingPresentation {
        let ring = Ring::new(Field::Rationals, names).unwrap();
        let gens = gens
            .iter()
            .map(|e| Polynomial::from_monomial(&ring, Monomial::new(e.to_vec())))
            .collect();
        RingPresentation::new(&ring, gens).unwrap()
    }

    fn local(names: &[&str], gens: &[&[u32]]) -> LocalRing {
        LocalRing::new(monomial_ring(names, gens), AnalysisConfig::default()).unwrap()
    }

    #[test]
    fn verdict_conjunction() {
        use Verdict::*;
        assert_eq!(True.and(False), False);
        assert_eq!(Inconclusive.and(False), False);
        assert_eq!(Unsupported.and(Inconclusive), Unsupported);
        assert_eq!(True.and(Inconclusive), Inconclusive);
        assert_eq!(True.and(True), True);
    }

    #[test]
    fn domain_completion_examples() {
        let t = local(&["x", "y", "z", "v"], &[&[1, 1, 0, 0], &[1, 0, 1, 0]]);
        assert_eq!(check_domain_completion(&t), Verdict::True);
        let t = local(&["x", "y"], &[&[2, 0], &[1, 1]]);
        assert_eq!(check_domain_completion(&t), Verdict::False);
        let t = local(&["x", "y"], &[&[1, 0], &[0, 1]]);
        assert!(t.is_field());
        assert_eq!(check_domain_completion(&t), Verdict::True);
    }

    #[test]
    fn unit_ideal_rejected() {
        let ring = Ring::new(Field::Rationals, &["x"]).unwrap();
        let x = Polynomial::var(&ring, 0);
        let p = RingPresentation::new(&ring, vec![&x - &Polynomial::one(&ring)]).unwrap();
        assert_eq!(LocalRing::new(p, AnalysisConfig::default()).unwrap_err(), AnalyzeError::UnitIdeal);
    }

    #[test]
    fn noncat_domain_examples() {
        let t = local(&["x", "y", "z", "v"], &[&[1, 1, 0, 0], &[1, 0, 1, 0]]);
        let r = check_noncat_domain(&t).unwrap();
        assert_eq!(r.verdict, Verdict::True);
        assert_eq!(r.prime, Some(VarSet::from_indices([1, 2])));
        // catenary family, n = 3
        let t = local(&["x", "y1", "y2", "y3"], &[&[1, 1, 0, 0], &[1, 0, 1, 0], &[1, 0, 0, 1]]);
        assert_eq!(check_noncat_domain(&t).unwrap().verdict, Verdict::False);
        let t = local(&["x", "y"], &[]);
        assert_eq!(check_noncat_domain(&t).unwrap().verdict, Verdict::False);
    }

    #[test]
    fn ufd_completion_examples() {
        let t = local(&["x", "y"], &[&[1, 1]]);
        assert_eq!(check_ufd_completion(&t).unwrap().verdict, Verdict::False);
        let t = local(&["x"], &[]);
        let r = check_ufd_completion(&t).unwrap();
        assert_eq!(r.verdict, Verdict::True);
        assert_eq!(r.reason, Some(UfdReason::DiscreteValuationRing));
    }

    #[test]
    fn regularity_examples() {
        let t = local(&["x", "y", "z", "v"], &[&[1, 1, 0, 0], &[1, 0, 1, 0]]);
        assert_eq!(check_regularity_at_min(&t).unwrap(), Verdict::True);
        let t = local(&["x", "y"], &[&[2, 1]]);
        assert_eq!(check_regularity_at_min(&t).unwrap(), Verdict::False);
        let t = local(&["x", "y"], &[&[1, 1]]);
        assert_eq!(check_regularity_at_min(&t).unwrap(), Verdict::True);
        // embedded prime: Ass ≠ Min
        let t = local(&["x", "y"], &[&[2, 0], &[1, 1]]);
        assert_eq!(check_regularity_at_min(&t).unwrap(), Verdict::Unsupported);
    }

    #[test]
    fn regularity_needs_characteristic_zero() {
        let ring = Ring::new(Field::prime(3).unwrap(), &["x", "y"]).unwrap();
        let xy = Polynomial::from_monomial(&ring, Monomial::new(vec![1, 1]));
        let t = LocalRing::new(RingPresentation::new(&ring, vec![xy]).unwrap(), AnalysisConfig::default()).unwrap();
        assert_eq!(check_regularity_at_min(&t).unwrap(), Verdict::Unsupported);
    }

    #[test]
    fn mixed_class_example() {
        // (x) ∩ (y,z,w) in x,y,z,v,w
        let t = local(
            &["x", "y", "z", "v", "w"],
            &[&[1, 1, 0, 0, 0], &[1, 0, 1, 0, 0], &[1, 0, 0, 0, 1]],
        );
        assert_eq!(t.profile().unwrap(), vec![4, 2]);
        let f = check_forced_catenary(&t).unwrap();
        assert_eq!(f.mixed, Verdict::True);
        assert_eq!(f.ufd_forced, Verdict::True);
        assert_eq!(f.domain_forced, Verdict::False);
        assert_eq!(check_noncat_domain(&t).unwrap().verdict, Verdict::True);
    }

    #[test]
    fn obstruction_examples() {
        let t = local(&["x", "y"], &[]);
        assert_eq!(check_universal_catenarity_obstruction(&t).unwrap(), Verdict::False);
        let t = local(&["x", "y", "z", "v"], &[&[1, 1, 0, 0], &[1, 0, 1, 0]]);
        assert_eq!(check_universal_catenarity_obstruction(&t).unwrap(), Verdict::True);
    }

    #[test]
    fn non_monomial_input_degrades() {
        let ring = Ring::new(Field::Rationals, &["x", "y", "z"]).unwrap();
        let x = Polynomial::var(&ring, 0);
        let y = Polynomial::var(&ring, 1);
        let z = Polynomial::var(&ring, 2);
        // (x^2 - y*z): a hypersurface, depth 2, not monomial
        let f = &(&x * &x) - &(&y * &z);
        let a = analyze(RingPresentation::new(&ring, vec![f]).unwrap(), AnalysisConfig::default()).unwrap();
        assert_eq!(a.ring.semantics(), Semantics::UnverifiedCompletion);
        assert_eq!(a.ring.dim(), 2);
        assert_eq!(a.domain_completion, Verdict::True);
        assert_eq!(a.ufd_completion.verdict, Verdict::True);
        assert_eq!(a.noncat_domain.verdict, Verdict::Unsupported);
        assert_eq!(a.forced.domain_forced, Verdict::Unsupported);
        assert!(a.unsupported.contains(&"noncat_domain".to_string()));
        assert!(a.implication_violations().is_empty());
    }

    #[test]
    fn empty_report_serializes_with_nulls() {
        let json = serde_json::to_value(AnalysisReport::default()).unwrap();
        assert!(json["witnesses"]["P"].is_null());
        assert!(json["witnesses"]["ufd_witness_prime"].is_null());
        assert!(json["verdicts"]["noncat_domain"].is_null());
    }
}
