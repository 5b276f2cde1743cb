//! Script execution and report emission (text, JSON, DOT).

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;

use serde_json::{json, Value};
use thiserror::Error;

use crate::analyzer::{analyze, Analysis, AnalysisConfig, LocalRing, RingPresentation, UfdReason, Verdict, WitnessSearch};
use crate::error::{AnalyzeError, IdealError, PolyError};
use crate::families::{ExpectedReport, FamilySpec};
use crate::groebner::IdealHandle;
use crate::monomial::VarSet;
use crate::poly::{Monomial, Polynomial, Ring};
use crate::script::{parse, Command, Expr, ParseError, PolyExpr, Script, Statement};
use crate::spectra::{ChainLink, PrimeChain};

/// JSON schema for the analysis report.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_UNSUPPORTED: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unknown format `{0}` (expected text, json or dot)")]
pub struct UnknownFormat(pub String);

impl FromStr for Format {
    type Err = UnknownFormat;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            other => Err(UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RunError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("`{command}`: {source}")]
    Analyze { command: String, source: AnalyzeError },
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Parse(_) => EXIT_PARSE,
            RunError::Analyze { source, .. } if source.is_resource() => EXIT_RESOURCE,
            RunError::Analyze { .. } => EXIT_UNSUPPORTED,
        }
    }
}

#[derive(Debug)]
pub enum Output {
    Analysis { name: String, analysis: Analysis },
    Profile { name: String, ring: LocalRing },
    Poset { name: String, ring: LocalRing },
    Chain { name: String, ring: LocalRing, chain: PrimeChain, links: Vec<ChainLink> },
    Family { spec: FamilySpec, analysis: Analysis, expected: ExpectedReport },
}

#[derive(Clone)]
struct Binding {
    ideal: IdealHandle,
    components: Vec<IdealHandle>,
}

fn to_polynomial(ring: &Arc<Ring>, p: &PolyExpr) -> Result<Polynomial, PolyError> {
    let field = ring.field();
    let mut terms = Vec::with_capacity(p.terms.len());
    for t in &p.terms {
        let mut exps = vec![0u32; ring.nvars()];
        for (v, e) in &t.factors {
            let i = ring.vars().position(v).ok_or_else(|| PolyError::UnknownVariable(v.clone()))?;
            exps[i] += e;
        }
        terms.push((field.element(&t.coeff)?, Monomial::new(exps)));
    }
    Ok(Polynomial::from_terms(ring, crate::poly::MonomialOrder::Grevlex, terms))
}

fn evaluate(ring: &Arc<Ring>, expr: &Expr, env: &HashMap<String, Binding>) -> Result<Binding, IdealError> {
    match expr {
        Expr::Generators(gens) => {
            let gens = gens.iter().map(|g| to_polynomial(ring, g)).collect::<Result<Vec<_>, _>>()?;
            let h = IdealHandle::new(ring, gens)?;
            Ok(Binding { ideal: h.clone(), components: vec![h] })
        }
        Expr::Intersect(a, b) => {
            let a = evaluate(ring, a, env)?;
            let b = evaluate(ring, b, env)?;
            let ideal = a.ideal.intersection(&b.ideal)?;
            let mut components = a.components;
            components.extend(b.components);
            Ok(Binding { ideal, components })
        }
        Expr::Ref(name) => {
            Ok(env[name].clone())
        }
    }
}

fn presentation(ring: &Arc<Ring>, b: &Binding) -> RingPresentation {
    RingPresentation {
        ring: ring.clone(),
        ideal: b.ideal.clone(),
        components: if b.components.len() >= 2 { b.components.clone() } else { Vec::new() },
    }
}

/// Runs every command of `script` in order.
pub fn run(script: &Script, config: &AnalysisConfig) -> Result<Vec<Output>, RunError> {
    let mut rings: Vec<Arc<Ring>> = Vec::new();
    let mut env: HashMap<String, (usize, Binding)> = HashMap::new();
    let mut outputs = Vec::new();
    for stmt in &script.statements {
        let label = stmt.to_string();
        let fail = |source: AnalyzeError| RunError::Analyze { command: label.clone(), source };
        match stmt {
            Statement::Ring(r) => {
                rings.push(Ring::new(r.field.field(), &r.vars).map_err(|e| fail(IdealError::from(e).into()))?);
            }
            Statement::Ideal(d) => {
                let ring = &rings[d.ring];
                let scope: HashMap<String, Binding> = env
                    .iter()
                    .filter(|(_, (r, _))| *r == d.ring)
                    .map(|(k, (_, b))| (k.clone(), b.clone()))
                    .collect();
                let budgeted = |h: IdealHandle| h.with_step_budget(config.gb_steps).with_order(config.order);
                let b = evaluate(ring, &d.expr, &scope).map_err(|e| fail(e.into()))?;
                let b = Binding { ideal: budgeted(b.ideal), components: b.components.into_iter().map(budgeted).collect() };
                env.insert(d.name.clone(), (d.ring, b));
            }
            Statement::Command(c) => {
                let local = |name: &str| -> Result<LocalRing, RunError> {
                    let (r, b) = &env[name];
                    LocalRing::new(presentation(&rings[*r], b), *config).map_err(fail)
                };
                let out = match c {
                    Command::Analyze(name) => {
                        let (r, b) = &env[name];
                        let analysis = analyze(presentation(&rings[*r], b), *config).map_err(fail)?;
                        Output::Analysis { name: name.clone(), analysis }
                    }
                    Command::Profile(name) => {
                        let ring = local(name)?;
                        if ring.profile().is_none() {
                            return Err(fail(AnalyzeError::Unsupported("profile requires a monomial ideal".into())));
                        }
                        Output::Profile { name: name.clone(), ring }
                    }
                    Command::Poset(name) => {
                        let ring = local(name)?;
                        ring.poset().map_err(fail)?;
                        Output::Poset { name: name.clone(), ring }
                    }
                    Command::Chain { ideal, from } => {
                        let ring = local(ideal)?;
                        let vars = ring.ring().vars();
                        let p = VarSet::from_indices(from.iter().map(|v| vars.position(v).expect("checked by parser")));
                        let poset = ring.poset().map_err(fail)?;
                        let chain = poset.construct_chain(&p).map_err(|e| fail(e.into()))?;
                        let links = poset.annotate(&chain).map_err(|e| fail(e.into()))?;
                        Output::Chain { name: ideal.clone(), ring, chain, links }
                    }
                    Command::Family(spec) => {
                        let (p, expected) = spec.instantiate().expect("validated by parser");
                        let analysis = analyze(p, *config).map_err(fail)?;
                        Output::Family { spec: *spec, analysis, expected }
                    }
                };
                outputs.push(out);
            }
        }
    }
    Ok(outputs)
}

fn show(v: Verdict) -> &'static str {
    match v {
        Verdict::True => "true",
        Verdict::False => "false",
        Verdict::Inconclusive => "inconclusive",
        Verdict::Unsupported => "unsupported",
    }
}

fn show_opt(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "-",
    }
}

fn render_chain(chain: &PrimeChain, ring: &Ring) -> String {
    chain.primes.iter().map(|q| q.render(ring.vars())).collect::<Vec<_>>().join(" < ")
}

fn profile_text(p: &[usize]) -> String {
    let p: Vec<String> = p.iter().map(|d| d.to_string()).collect();
    format!("{{{}}}", p.join(","))
}

fn analysis_text(title: &str, a: &Analysis) -> String {
    let t = &a.ring;
    let ring = t.ring();
    let report = a.report();
    let mut s = String::new();
    let row = |s: &mut String, k: &str, v: &str| writeln!(s, "  {k:<32} {v}").unwrap();
    writeln!(s, "== {title}").unwrap();
    row(&mut s, "ring", &t.presentation().render());
    row(&mut s, "semantics", &serde_json::to_value(t.semantics()).unwrap().as_str().unwrap().to_string());
    row(&mut s, "dim", &t.dim().to_string());
    if let Some(min) = &report.minimal_primes {
        let m: Vec<String> = min.iter().map(|p| format!("({}) dim {} ht {}", p.gens.join(","), p.dim, p.height)).collect();
        row(&mut s, "minimal primes", &m.join("; "));
    }
    if let Some(ass) = t.associated_primes() {
        let a: Vec<String> = ass.iter().map(|p| p.render(ring.vars())).collect();
        row(&mut s, "associated primes", &a.join(", "));
    }
    if let Some(p) = &report.profile {
        row(&mut s, "profile", &profile_text(p));
    }
    writeln!(s, "  conditions").unwrap();
    let c = &report.conditions;
    for (k, v) in [
        ("lech_i", c.lech_i),
        ("lech_ii", c.lech_ii),
        ("depth_ge1", c.depth_ge1),
        ("depth_ge2", c.depth_ge2),
        ("exists_P_domain", c.exists_p_domain),
        ("exists_P_ufd", c.exists_p_ufd),
        ("equidimensional", c.equidimensional),
    ] {
        row(&mut s, &format!("  {k}"), show_opt(v));
    }
    writeln!(s, "  verdicts").unwrap();
    for (k, v) in [
        ("domain_completion", a.domain_completion),
        ("noncat_domain", a.noncat_domain.verdict),
        ("ufd_completion", a.ufd_completion.verdict),
        ("noncat_ufd", a.noncat_ufd.verdict),
        ("forced_cat_domain", a.forced.domain_forced),
        ("forced_cat_ufd", a.forced.ufd_forced),
        ("mixed_class", a.forced.mixed),
        ("universally_catenary_obstructed", a.obstruction),
        ("regularity_at_min", a.regularity_at_min),
    ] {
        row(&mut s, &format!("  {k}"), show(v));
    }
    writeln!(s, "  witnesses").unwrap();
    if let Some(p) = &a.noncat_domain.prime {
        row(&mut s, "  P", &p.render(ring.vars()));
    }
    if let Some(c) = &a.noncat_domain.chain {
        row(&mut s, "  chain", &render_chain(c, ring));
    }
    match &a.ufd_completion.reason {
        Some(UfdReason::Depth { regular_element }) => row(&mut s, "  regular element", &regular_element.to_string()),
        Some(UfdReason::Field) => row(&mut s, "  ufd reason", "field"),
        Some(UfdReason::DiscreteValuationRing) => row(&mut s, "  ufd reason", "discrete valuation ring"),
        None => {}
    }
    if let Some(p) = &a.noncat_ufd.prime {
        row(&mut s, "  P (ufd)", &p.render(ring.vars()));
    }
    match &a.noncat_ufd.witness {
        WitnessSearch::Found(w) => {
            row(&mut s, "  Q'", &format!("{} (height {})", w.prime.render(ring.vars()), w.height));
            row(&mut s, "  x with Q' not in Ass(T/xT)", &w.regular_element.to_string());
            row(&mut s, "  depth certificate in T_Q'", &w.localized_certificate.to_string());
        }
        WitnessSearch::Inconclusive(why) => row(&mut s, "  Q'", &format!("not found: {why}")),
        _ => {}
    }
    for (k, list) in [("inconclusive", &a.inconclusive), ("unsupported", &a.unsupported), ("notes", &a.notes)] {
        if !list.is_empty() {
            writeln!(s, "  {k}").unwrap();
            for item in list {
                writeln!(s, "    - {item}").unwrap();
            }
        }
    }
    s
}

fn chain_json(ring: &Ring, links: &[ChainLink]) -> Value {
    Value::Array(
        links
            .iter()
            .map(|l| json!({"prime": l.prime.names(ring.vars()), "height": l.height, "dim": l.dim}))
            .collect(),
    )
}

fn to_json(out: &Output) -> Value {
    match out {
        Output::Analysis { analysis, .. } | Output::Family { analysis, .. } => {
            serde_json::to_value(analysis.report()).expect("report serializes")
        }
        Output::Profile { name, ring } => json!({
            "ideal": name,
            "semantics": ring.semantics(),
            "profile": ring.profile(),
        }),
        Output::Poset { name, ring } => {
            let poset = ring.poset().expect("built during run");
            let vars = ring.ring().vars();
            json!({
                "ideal": name,
                "nodes": poset.nodes().iter().map(|q| q.names(vars)).collect::<Vec<_>>(),
                "edges": poset.cover_relations().iter().map(|(a, b)| [a.names(vars), b.names(vars)]).collect::<Vec<_>>(),
            })
        }
        Output::Chain { name, ring, chain, links } => json!({
            "ideal": name,
            "length": chain.length(),
            "chain": chain_json(ring.ring(), links),
        }),
    }
}

fn analysis_dot(a: &Analysis) -> String {
    let t = &a.ring;
    match t.poset() {
        Ok(poset) => {
            let mut chains: Vec<PrimeChain> = a.noncat_domain.chain.iter().cloned().collect();
            if let Some(c) = a.noncat_ufd.witness.witness().and_then(|w| w.chain.clone()) {
                if !chains.contains(&c) {
                    chains.push(c);
                }
            }
            if chains.is_empty() {
                poset.to_dot(t.ring().vars())
            } else {
                poset.chains_to_dot(&chains, t.ring().vars())
            }
        }
        Err(e) => format!("// {e}\n"),
    }
}

fn to_dot(out: &Output) -> String {
    match out {
        Output::Analysis { analysis, .. } | Output::Family { analysis, .. } => analysis_dot(analysis),
        Output::Profile { ring, .. } | Output::Poset { ring, .. } => {
            ring.poset().expect("monomial").to_dot(ring.ring().vars())
        }
        Output::Chain { ring, chain, .. } => {
            ring.poset().expect("built during run").chains_to_dot(std::slice::from_ref(chain), ring.ring().vars())
        }
    }
}

fn to_text(out: &Output) -> String {
    match out {
        Output::Analysis { name, analysis } => analysis_text(&format!("analyze {name}"), analysis),
        Output::Family { spec, analysis, expected } => {
            let mut s = analysis_text(&format!("family {spec}"), analysis);
            let mismatches = expected.mismatches(&analysis.report());
            if mismatches.is_empty() {
                writeln!(s, "  expected values: all match").unwrap();
            } else {
                for m in mismatches {
                    writeln!(s, "  expected value mismatch: {m}").unwrap();
                }
            }
            s
        }
        Output::Profile { name, ring } => {
            format!("profile {name}: {}\n", profile_text(&ring.profile().unwrap_or_default()))
        }
        Output::Poset { name, ring } => {
            let poset = ring.poset().expect("built during run");
            let vars = ring.ring().vars();
            let mut s = format!("== poset {name}: {} primes\n", poset.nodes().len());
            for q in poset.nodes() {
                let mut tags = Vec::new();
                if poset.is_minimal(q) {
                    tags.push("minimal");
                }
                if poset.is_associated(q) {
                    tags.push("associated");
                }
                let above: Vec<String> = poset.covers_above(q).iter().map(|c| c.render(vars)).collect();
                writeln!(
                    s,
                    "  {:<24} dim {} {}{}",
                    q.render(vars),
                    poset.dim_quotient(q),
                    if tags.is_empty() { String::new() } else { format!("[{}] ", tags.join(", ")) },
                    if above.is_empty() { String::new() } else { format!("< {}", above.join(", ")) }
                )
                .unwrap();
            }
            s
        }
        Output::Chain { name, ring, chain, links } => {
            let vars = ring.ring().vars();
            let mut s = format!("== chain in {name}, length {}\n", chain.length());
            for l in links {
                writeln!(s, "  {:<24} height {} dim {}", l.prime.render(vars), l.height, l.dim).unwrap();
            }
            s
        }
    }
}

/// Renders all outputs. JSON is a single object for one output, an array otherwise.
pub fn emit(outputs: &[Output], format: Format) -> String {
    match format {
        Format::Text => outputs.iter().map(to_text).collect::<Vec<_>>().join("\n"),
        Format::Dot => outputs.iter().map(to_dot).collect(),
        Format::Json => {
            let mut values: Vec<Value> = outputs.iter().map(to_json).collect();
            let v = if values.len() == 1 { values.pop().unwrap() } else { Value::Array(values) };
            let mut s = serde_json::to_string_pretty(&v).expect("json");
            s.push('\n');
            s
        }
    }
}

/// Parse, run and emit: `(stdout, stderr, exit code)`.
pub fn execute(src: &str, config: &AnalysisConfig, format: Format) -> (String, String, i32) {
    let result = parse(src).map_err(RunError::from).and_then(|s| run(&s, config));
    match result {
        Ok(outputs) => (emit(&outputs, format), String::new(), EXIT_OK),
        Err(e) => (String::new(), format!("error: {e}\n"), e.exit_code()),
    }
}
