//! Named example rings with the verdicts they are known to produce.

use std::fmt;

use serde::Serialize;

use crate::analyzer::{AnalysisReport, RingPresentation};
use crate::error::FamilyError;
use crate::field::Field;
use crate::groebner::IdealHandle;
use crate::poly::{Polynomial, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `K[[x,y,z,v]]/((x)∩(y,z))`.
    ExampleDomain,
    /// `K[[x,y1..yn]]/((x)∩(y1..yn))`, `n > 1`.
    ExampleCatenary { n: usize },
    /// `K[[x,y1..ya,z1..zb]]/((x)∩(y1..ya))`, `a, b > 1`.
    ExampleUfd { a: usize, b: usize },
    /// The `(a,b) = (n-m+1, m-1)` ring, `1 < m < n`.
    Prop41 { m: usize, n: usize },
    /// As `Prop41` with `2 < m < n`.
    Prop42 { m: usize, n: usize },
}

impl FamilySpec {
    pub const NAMES: [&'static str; 5] = ["example_domain", "example_catenary", "example_ufd", "prop41", "prop42"];

    /// Builds a spec from a name and integer arguments, checking its constraints.
    pub fn from_name(name: &str, args: &[usize]) -> Result<Self, FamilyError> {
        let arity = |expected: usize| {
            if args.len() == expected {
                Ok(())
            } else {
                Err(FamilyError::Arity {
                    name: name.to_string(),
                    expected,
                    got: args.len(),
                })
            }
        };
        let spec = match name {
            "example_domain" => {
                arity(0)?;
                FamilySpec::ExampleDomain
            }
            "example_catenary" => {
                arity(1)?;
                FamilySpec::ExampleCatenary { n: args[0] }
            }
            "example_ufd" => {
                arity(2)?;
                FamilySpec::ExampleUfd { a: args[0], b: args[1] }
            }
            "prop41" => {
                arity(2)?;
                FamilySpec::Prop41 { m: args[0], n: args[1] }
            }
            "prop42" => {
                arity(2)?;
                FamilySpec::Prop42 { m: args[0], n: args[1] }
            }
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::ExampleDomain => "example_domain",
            FamilySpec::ExampleCatenary { .. } => "example_catenary",
            FamilySpec::ExampleUfd { .. } => "example_ufd",
            FamilySpec::Prop41 { .. } => "prop41",
            FamilySpec::Prop42 { .. } => "prop42",
        }
    }

    pub fn args(&self) -> Vec<usize> {
        match *self {
            FamilySpec::ExampleDomain => vec![],
            FamilySpec::ExampleCatenary { n } => vec![n],
            FamilySpec::ExampleUfd { a, b } => vec![a, b],
            FamilySpec::Prop41 { m, n } | FamilySpec::Prop42 { m, n } => vec![m, n],
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let fail = |s: String| Err(FamilyError::Constraint(s));
        match *self {
            FamilySpec::ExampleDomain => Ok(()),
            FamilySpec::ExampleCatenary { n } if n <= 1 => fail(format!("example_catenary needs n > 1, got n = {n}")),
            FamilySpec::ExampleUfd { a, .. } if a <= 1 => fail(format!("example_ufd needs a > 1, got a = {a}")),
            FamilySpec::ExampleUfd { b, .. } if b <= 1 => fail(format!("example_ufd needs b > 1, got b = {b}")),
            FamilySpec::Prop41 { m, .. } if m <= 1 => fail(format!("prop41 needs 1 < m, got m = {m}")),
            FamilySpec::Prop42 { m, .. } if m <= 2 => fail(format!("prop42 needs 2 < m, got m = {m}")),
            FamilySpec::Prop41 { m, n } | FamilySpec::Prop42 { m, n } if m >= n => {
                fail(format!("{} needs m < n, got m = {m}, n = {n}", self.name()))
            }
            _ => Ok(()),
        }
    }

    /// `(a, b)` of the underlying `(x)∩(y1..ya)` ring, if any.
    pub fn ufd_parameters(&self) -> Option<(usize, usize)> {
        match *self {
            FamilySpec::ExampleUfd { a, b } => Some((a, b)),
            FamilySpec::Prop41 { m, n } | FamilySpec::Prop42 { m, n } => Some((n - m + 1, m - 1)),
            _ => None,
        }
    }

    pub fn variable_names(&self) -> Vec<String> {
        let seq = |p: &'static str, k: usize| (1..=k).map(move |i| format!("{p}{i}"));
        match *self {
            FamilySpec::ExampleDomain => ["x", "y", "z", "v"].map(String::from).to_vec(),
            FamilySpec::ExampleCatenary { n } => std::iter::once("x".to_string()).chain(seq("y", n)).collect(),
            _ => {
                let (a, b) = self.ufd_parameters().unwrap();
                std::iter::once("x".to_string()).chain(seq("y", a)).chain(seq("z", b)).collect()
            }
        }
    }

    /// The two intersected primes, as variable indices.
    pub fn components(&self) -> (Vec<usize>, Vec<usize>) {
        match *self {
            FamilySpec::ExampleDomain => (vec![0], vec![1, 2]),
            FamilySpec::ExampleCatenary { n } => (vec![0], (1..=n).collect()),
            _ => {
                let (a, _) = self.ufd_parameters().unwrap();
                (vec![0], (1..=a).collect())
            }
        }
    }

    pub fn instantiate(&self) -> Result<(RingPresentation, ExpectedReport), FamilyError> {
        self.validate()?;
        let names = self.variable_names();
        let ring = Ring::new(Field::Rationals, &names).expect("family variable names are distinct");
        let (p1, p2) = self.components();
        let prime = |idx: &[usize]| {
            IdealHandle::new(&ring, idx.iter().map(|&i| Polynomial::var(&ring, i)).collect())
                .expect("variables share the ring")
        };
        let presentation = RingPresentation::intersection(&ring, vec![prime(&p1), prime(&p2)])
            .expect("monomial intersection needs no Gröbner steps");
        Ok((presentation, self.expected()))
    }

    /// Expected report values; fields left `None` are not asserted.
    pub fn expected(&self) -> ExpectedReport {
        let v = self.variable_names().len();
        let (p1, p2) = self.components();
        let mut profile = vec![v - p1.len(), v - p2.len()];
        profile.sort_unstable_by(|a, b| b.cmp(a));
        let mut e = ExpectedReport {
            dim: Some(profile[0]),
            profile: Some(profile),
            ..Default::default()
        };
        match *self {
            FamilySpec::ExampleDomain => {
                e.noncat_domain = Some(true);
                e.noncat_ufd = Some(false);
                e.regularity_at_min = Some(true);
                e.p = Some(vec!["y".into(), "z".into()]);
            }
            FamilySpec::ExampleCatenary { .. } => {
                e.noncat_domain = Some(false);
                e.forced_cat_domain = Some(true);
                e.universally_catenary_obstructed = Some(true);
            }
            _ => {
                let (a, b) = self.ufd_parameters().unwrap();
                let names = self.variable_names();
                e.noncat_domain = Some(true);
                e.noncat_ufd = Some(b + 1 > 2);
                e.universally_catenary_obstructed = Some(true);
                if b + 1 > 2 {
                    e.ufd_witness_prime = Some(names[1..=a + b].to_vec());
                }
            }
        }
        e
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args = self.args();
        if args.is_empty() {
            write!(f, "{}", self.name())
        } else {
            let args: Vec<String> = args.iter().map(|a| a.to_string()).collect();
            write!(f, "{}({})", self.name(), args.join(","))
        }
    }
}

/// A partial report: every `Some` field must match the analyzer's output.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ExpectedReport {
    pub dim: Option<usize>,
    pub profile: Option<Vec<usize>>,
    pub noncat_domain: Option<bool>,
    pub noncat_ufd: Option<bool>,
    pub forced_cat_domain: Option<bool>,
    pub universally_catenary_obstructed: Option<bool>,
    pub regularity_at_min: Option<bool>,
    #[serde(rename = "P")]
    pub p: Option<Vec<String>>,
    pub ufd_witness_prime: Option<Vec<String>>,
}

impl ExpectedReport {
    /// Fields where `actual` disagrees, as `name: expected vs actual`.
    pub fn mismatches(&self, actual: &AnalysisReport) -> Vec<String> {
        let mut out = Vec::new();
        fn cmp<T: PartialEq + fmt::Debug>(out: &mut Vec<String>, name: &str, want: &Option<T>, got: &Option<T>) {
            if let Some(w) = want {
                if got.as_ref() != Some(w) {
                    out.push(format!("{name}: expected {w:?}, got {got:?}"));
                }
            }
        }
        let v = &actual.verdicts;
        cmp(&mut out, "dim", &self.dim, &actual.dim);
        cmp(&mut out, "profile", &self.profile, &actual.profile);
        cmp(&mut out, "noncat_domain", &self.noncat_domain, &v.noncat_domain);
        cmp(&mut out, "noncat_ufd", &self.noncat_ufd, &v.noncat_ufd);
        cmp(&mut out, "forced_cat_domain", &self.forced_cat_domain, &v.forced_cat_domain);
        cmp(
            &mut out,
            "universally_catenary_obstructed",
            &self.universally_catenary_obstructed,
            &v.universally_catenary_obstructed,
        );
        cmp(&mut out, "regularity_at_min", &self.regularity_at_min, &v.regularity_at_min);
        cmp(&mut out, "P", &self.p, &actual.witnesses.p);
        cmp(&mut out, "ufd_witness_prime", &self.ufd_witness_prime, &actual.witnesses.ufd_witness_prime);
        out
    }
}
