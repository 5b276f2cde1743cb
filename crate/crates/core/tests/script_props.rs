use catena::analyzer::{analyze, AnalysisConfig, RingPresentation};
use catena::exec::{execute, Format, EXIT_OK, EXIT_PARSE};
use catena::families::FamilySpec;
use catena::field::Field;
use catena::poly::{Monomial, Polynomial, Ring};
use catena::script::{parse, Command, Expr, FieldSpec, IdealDecl, PolyExpr, RingDecl, Script, Statement, TermExpr};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const VAR_POOL: [&str; 6] = ["x", "y", "z", "v", "w1", "t_2"];

fn term(nvars: usize) -> impl Strategy<Value = TermExpr> {
    (
        -5i64..6,
        1i64..4,
        prop::collection::vec((0..nvars, 1u32..4), 0..3),
    )
        .prop_map(move |(n, d, f)| TermExpr {
            coeff: BigRational::new(BigInt::from(n), BigInt::from(d)),
            factors: f.into_iter().map(|(i, e)| (VAR_POOL[i].to_string(), e)).collect(),
        })
}

fn poly(nvars: usize) -> impl Strategy<Value = PolyExpr> {
    prop::collection::vec(term(nvars), 1..4).prop_map(|terms| PolyExpr { terms })
}

fn expr(nvars: usize, earlier: Vec<String>) -> BoxedStrategy<Expr> {
    let leaf = prop::collection::vec(poly(nvars), 1..3).prop_map(Expr::Generators).boxed();
    let leaf = if earlier.is_empty() {
        leaf
    } else {
        prop_oneof![leaf, prop::sample::select(earlier).prop_map(Expr::Ref)].boxed()
    };
    leaf.prop_recursive(2, 6, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| Expr::Intersect(Box::new(a), Box::new(b)))
    })
    .boxed()
}

/// A valid one-ring script: some ideals (later ones may refer to earlier ones) and commands.
fn script() -> impl Strategy<Value = Script> {
    (1usize..=VAR_POOL.len(), prop_oneof![Just(FieldSpec::Rationals), Just(FieldSpec::Prime(7))], 1usize..4)
        .prop_flat_map(|(nvars, field, nideals)| {
            let mut exprs: Vec<BoxedStrategy<Expr>> = Vec::new();
            for k in 0..nideals {
                exprs.push(expr(nvars, (0..k).map(|j| format!("I{j}")).collect()));
            }
            let commands = prop::collection::vec(
                (0..nideals, 0usize..5, prop::collection::vec(0..nvars, 1..3)),
                0..4,
            );
            (Just(nvars), Just(field), exprs, commands)
        })
        .prop_map(|(nvars, field, exprs, commands)| {
            let mut statements = vec![Statement::Ring(RingDecl {
                field,
                vars: VAR_POOL[..nvars].iter().map(|s| s.to_string()).collect(),
            })];
            for (k, e) in exprs.into_iter().enumerate() {
                statements.push(Statement::Ideal(IdealDecl { name: format!("I{k}"), ring: 0, expr: e }));
            }
            for (i, kind, from) in commands {
                let name = format!("I{i}");
                statements.push(Statement::Command(match kind {
                    0 => Command::Analyze(name),
                    1 => Command::Profile(name),
                    2 => Command::Poset(name),
                    3 => Command::Chain { ideal: name, from: from.iter().map(|&v| VAR_POOL[v].to_string()).collect() },
                    _ => Command::Family(FamilySpec::ExampleUfd { a: 2, b: 3 }),
                }));
            }
            Script { statements }
        })
}

/// Coefficients with a denominator divisible by 7 are invalid over F7; skip those.
fn valid_over_field(s: &Script) -> bool {
    let Some(Statement::Ring(r)) = s.statements.first() else { return true };
    if r.field == FieldSpec::Rationals {
        return true;
    }
    s.render().split(|c: char| !c.is_ascii_digit() && c != '/').all(|tok| {
        tok.split_once('/').is_none_or(|(_, d)| d.parse::<u64>().map_or(true, |d| d % 7 != 0))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn render_then_parse_is_identity(s in script()) {
        prop_assume!(valid_over_field(&s));
        let text = s.render();
        let parsed = parse(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert_eq!(&parsed, &s);
        prop_assert_eq!(parsed.render(), text);
    }

    #[test]
    fn corrupted_scripts_never_exit_zero(s in script(), cut in any::<prop::sample::Index>(), junk in prop::sample::select(vec!["$", "ideal", "(", "chain I0 from", "ring", "= =", "^", "analyze", "family nope", "@"])) {
        prop_assume!(valid_over_field(&s));
        let text = s.render();
        // splice a token that can never complete a statement at the end
        let at = cut.index(text.len() + 1);
        let at = (0..=at).rev().find(|&i| text.is_char_boundary(i)).unwrap();
        let broken = format!("{} {junk}", &text[..at]);
        if parse(&broken).is_err() {
            let (_, err, code) = execute(&broken, &AnalysisConfig::default(), Format::Json);
            prop_assert_eq!(code, EXIT_PARSE);
            prop_assert!(!err.is_empty());
        }
        // trailing junk alone is always rejected
        let (_, _, code) = execute(&format!("{text}\n{junk}"), &AnalysisConfig::default(), Format::Text);
        prop_assert_ne!(code, EXIT_OK);
    }

    #[test]
    fn arbitrary_bytes_that_fail_to_parse_never_exit_zero(src in "\\PC{0,60}") {
        if parse(&src).is_err() {
            let (out, _, code) = execute(&src, &AnalysisConfig::default(), Format::Text);
            prop_assert_eq!(code, EXIT_PARSE);
            prop_assert!(out.is_empty());
        }
    }

    #[test]
    fn random_monomial_rings_satisfy_the_implications(
        gens in prop::collection::vec(prop::collection::vec(0u32..3, 6), 0..5)
    ) {
        let ring = Ring::new(Field::Rationals, &VAR_POOL).unwrap();
        let gens: Vec<Polynomial> = gens
            .into_iter()
            .filter(|g| g.iter().any(|&e| e > 0))
            .map(|g| Polynomial::from_monomial(&ring, Monomial::new(g)))
            .collect();
        let a = analyze(RingPresentation::new(&ring, gens).unwrap(), AnalysisConfig::default()).unwrap();
        prop_assert_eq!(a.implication_violations(), Vec::<String>::new());
        prop_assert_eq!(a.reverify(), Ok(()));
    }
}

#[test]
fn parse_errors_carry_codes_for_each_class() {
    use catena::script::{codes, ErrorKind};
    let cases = [
        ("ring Q[x] ideal I = (x) ~", ErrorKind::Lexical, codes::UNEXPECTED_CHAR),
        ("ring Q[x] ideal I = (x", ErrorKind::Syntax, codes::UNEXPECTED_EOF),
        ("ring Q[x] ideal = (x)", ErrorKind::Syntax, codes::UNEXPECTED_TOKEN),
        ("ideal I = (x)", ErrorKind::Semantic, codes::NO_RING),
        ("ring Q[x] analyze I", ErrorKind::Semantic, codes::UNDECLARED_IDEAL),
        ("ring Q[x] ideal I = (y)", ErrorKind::Semantic, codes::UNKNOWN_VARIABLE),
        ("ring Q[x,x]", ErrorKind::Semantic, codes::DUPLICATE_VARIABLE),
    ];
    for (src, kind, code) in cases {
        let e = parse(src).unwrap_err();
        assert_eq!((e.kind, e.code), (kind, code), "{src}: {e}");
    }
}
