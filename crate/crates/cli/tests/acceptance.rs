//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Reference values for the parallel-spinor and Calabi-Yau tables are the
//! published ones, with thousands separators removed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rscount_core::charclass::{
    a_hat_genus, char_number, char_number_polynomial, rs_index, Chirality, CompleteIntersection,
};
use rscount_core::ring::{MultiPoly, Rational};
use rscount_core::rsbounds::{
    cy_hypersurface_bound_closed_form, exceeds_torus, max_parallel_spinors, rs_lower_bound,
    torus_rs_dimension,
};
use rscount_core::series::{std_series, PowerSeries, StdSeries};
use rscount_core::BigInt;

type Verdict = Result<(), String>;

const TABLE_1: [u64; 28] = [
    0, 0, 0, 2, 0, 0, 1, 4, 0, 0, 2, 8, 0, 2, 4, 16, 0, 4, 8, 32, 2, 8, 16, 64, 4, 16, 32, 128,
];

const TABLE_3: [(usize, &str, &str); 15] = [
    (2, "38", "12"),
    (4, "850", "112"),
    (6, "12736", "704"),
    (8, "184542", "3840"),
    (10, "2703838", "19456"),
    (12, "40116146", "94208"),
    (14, "601079752", "442368"),
    (16, "9075134398", "2031616"),
    (18, "137846527510", "9175040"),
    (20, "2104098961730", "40894464"),
    (22, "32247603679902", "180355072"),
    (24, "495918532942658", "788529152"),
    (26, "7648690600750682", "3422552064"),
    (28, "118264581564843242", "14763950080"),
    (30, "1832624140942555720", "63350767616"),
];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Verdict {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(s: &str) -> BigInt {
    s.parse().expect("decimal literal")
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

/// Binomial coefficients from Pascal's triangle, independent of the library.
fn pascal(n: usize, k: usize) -> BigInt {
    let mut row = vec![BigInt::from(1)];
    for _ in 0..n {
        let mut next = vec![BigInt::from(1); row.len() + 1];
        for j in 1..row.len() {
            next[j] = &row[j - 1] + &row[j];
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_default()
}

fn table_1() -> Verdict {
    for (i, &expected) in TABLE_1.iter().enumerate() {
        let n = i as u64 + 1;
        let got = max_parallel_spinors(n).map_err(|e| e.to_string())?;
        ensure(got == BigInt::from(expected), || format!("N({n}) = {got}, expected {expected}"))?;
    }
    Ok(())
}

fn table_3() -> Verdict {
    for &(m, rs, torus) in &TABLE_3 {
        let bound = cy_hypersurface_bound_closed_form(m).map_err(|e| e.to_string())?;
        let t = torus_rs_dimension(2 * m as u64).map_err(|e| e.to_string())?;
        ensure(bound == big(rs), || format!("m={m}: bound {bound}, expected {rs}"))?;
        ensure(t == big(torus), || format!("m={m}: RS(T^{}) {t}, expected {torus}", 2 * m))?;
    }
    Ok(())
}

fn dual_path() -> Verdict {
    for &(m, rs, _) in &TABLE_3 {
        let ci = CompleteIntersection::hypersurface(m, m as u64 + 2).unwrap();
        let series = char_number(&ci).map_err(|e| e.to_string())?;
        let closed = -2 * (pascal(2 * m + 3, m + 1) + 1 - BigInt::from((m + 2) * (m + 2)));
        ensure(series == closed, || format!("m={m}: series {series}, closed form {closed}"))?;
        let total = rs_lower_bound(&ci).map_err(|e| e.to_string())?.bound_total;
        ensure(total == big(rs), || format!("m={m}: boundTotal {total}, expected {rs}"))?;
    }
    Ok(())
}

fn hypersurface_polynomial() -> Verdict {
    for m in [2u32, 4, 6, 8] {
        let p = char_number_polynomial(m as usize, 1).map_err(|e| e.to_string())?;
        ensure(p.total_degree() == m as i64 + 1, || format!("m={m}: degree {}", p.total_degree()))?;
        let fact: BigInt = (1..=(m as u64 + 1)).map(BigInt::from).product();
        let num = BigInt::from(2 * m + 3) - BigInt::from(3).pow(m + 1);
        let expected = Rational::new(num, fact * BigInt::from(2).pow(m)).unwrap();
        let lead = p.coefficient(&[m + 1]);
        ensure(lead == expected, || format!("m={m}: leading {lead}, expected {expected}"))?;
    }
    let p2 = char_number_polynomial(2, 1).map_err(|e| e.to_string())?;
    let hand = MultiPoly::from_terms(1, [(vec![3], q(-5, 6)), (vec![1], q(10, 3))]).unwrap();
    ensure(p2 == hand, || format!("m=2 polynomial {p2}"))
}

fn symmetric_polynomial() -> Verdict {
    for (m, r) in [(2usize, 2usize), (2, 3), (4, 2)] {
        let p = char_number_polynomial(m, r).map_err(|e| e.to_string())?;
        ensure(p.is_symmetric(), || format!("(m,r)=({m},{r}) not symmetric"))?;
        for j in 0..r {
            let d = p.degree_in(j).map_err(|e| e.to_string())?;
            ensure(d == m as i64 + 1, || format!("(m,r)=({m},{r}) degree {d} in a{}", j + 1))?;
        }
        ensure(p.total_degree() == (m + r) as i64, || format!("(m,r)=({m},{r}) total degree {}", p.total_degree()))?;
        let hyper = char_number_polynomial(m, 1).map_err(|e| e.to_string())?;
        let fixed = p.fix_trailing(1, &Rational::one()).map_err(|e| e.to_string())?;
        ensure(fixed == hyper, || format!("(m,r)=({m},{r}) specialization {fixed} != {hyper}"))?;
    }
    for m in [3usize, 5, 7] {
        for r in [1usize, 2] {
            let p = char_number_polynomial(m, r).map_err(|e| e.to_string())?;
            ensure(p.is_zero(), || format!("(m,r)=({m},{r}) nonzero: {p}"))?;
        }
    }
    Ok(())
}

fn k3_anchor() -> Verdict {
    let k3 = CompleteIntersection::hypersurface(2, 4).unwrap();
    let cn = char_number(&k3).map_err(|e| e.to_string())?;
    ensure(cn == BigInt::from(-40), || format!("charnum {cn}"))?;
    let ah = a_hat_genus(&k3);
    ensure(ah == q(2, 1), || format!("A-hat {ah}"))?;
    let idx = rs_index(&k3, Chirality::Plus).map_err(|e| e.to_string())?;
    ensure(idx == BigInt::from(-38), || format!("index {idx}"))?;
    let total = rs_lower_bound(&k3).map_err(|e| e.to_string())?.bound_total;
    ensure(total == BigInt::from(38), || format!("bound {total}"))
}

fn torus_dominance() -> Verdict {
    for m in (2..=60).step_by(2) {
        ensure(exceeds_torus(m).map_err(|e| e.to_string())?, || format!("m={m} fails"))?;
    }
    Ok(())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-300i64..300, 1i64..40).prop_map(|(n, d)| q(n, d))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, 2), rational()), 0..5)
        .prop_map(|t| MultiPoly::from_terms(2, t).unwrap())
}

fn unit_series() -> impl Strategy<Value = PowerSeries<Rational>> {
    (prop::collection::vec(rational(), 6), rational().prop_filter("unit", |c| !c.is_zero()))
        .prop_map(|(mut c, c0)| {
            c[0] = c0;
            PowerSeries::from_coeffs(c).unwrap()
        })
}

fn property_suites() -> Verdict {
    let mut runner = TestRunner::new(Config { cases: 1000, failure_persistence: None, ..Config::default() });
    fn fail<T: std::fmt::Debug>(what: &str, e: proptest::test_runner::TestError<T>) -> String {
        format!("{what}: {e}")
    }

    runner
        .run(&(rational(), rational(), rational()), |(x, y, z)| {
            prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x + &y, &y + &x);
            let g = rscount_core::ring::reduced_gcd(&(&x * &y));
            prop_assert_eq!(g, BigInt::from(1));
            Ok(())
        })
        .map_err(|e| fail("rational axioms", e))?;

    runner
        .run(&(poly(), poly(), poly(), (rational(), rational())), |(p, r, s, (u, v))| {
            let pr = p.mul(&r).unwrap();
            prop_assert_eq!(p.mul(&r.add(&s).unwrap()).unwrap(), pr.add(&p.mul(&s).unwrap()).unwrap());
            prop_assert_eq!(pr.mul(&s).unwrap(), p.mul(&r.mul(&s).unwrap()).unwrap());
            prop_assert_eq!(&pr, &r.mul(&p).unwrap());
            let pt = [u, v];
            prop_assert_eq!(pr.eval(&pt).unwrap(), p.eval(&pt).unwrap() * r.eval(&pt).unwrap());
            Ok(())
        })
        .map_err(|e| fail("polynomial axioms", e))?;

    runner
        .run(&(unit_series(), unit_series(), rational()), |(f, g, c)| {
            let one = PowerSeries::one(&(), 5);
            prop_assert_eq!(f.mul(&f.invert().unwrap()).unwrap(), one);
            prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
            let lhs = f.mul(&g).unwrap().scale_arg(&c).unwrap();
            let rhs = f.scale_arg(&c).unwrap().mul(&g.scale_arg(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })
        .map_err(|e| fail("series axioms and inversion", e))?;

    let cosh = std_series::<Rational>(StdSeries::Cosh, 32, &());
    let sinh = std_series::<Rational>(StdSeries::Sinh, 32, &());
    let diff = cosh.mul(&cosh).unwrap().sub(&sinh.mul(&sinh).unwrap()).unwrap();
    ensure(diff == PowerSeries::one(&(), 32), || "cosh^2 - sinh^2 != 1 at order 32".into())
}

fn cli_goldens() -> Verdict {
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden");
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_rscount")).args(args).output().expect("spawn rscount")
    };
    let cases: &[(&str, &[&str])] = &[
        ("compute_k3.json", &["compute", "--complex-dim", "2", "--degrees", "4"]),
        ("table_parallel_spinors_28.json", &["table", "parallel-spinors", "--max-n", "28"]),
        ("table_calabi_yau_30.json", &["table", "calabi-yau", "--max-m", "30"]),
        ("table_calabi_yau_2.json", &["table", "calabi-yau", "--max-m", "2"]),
        ("verify_closed_form_30.json", &["verify", "closed-form", "--max-m", "30"]),
        ("verify_hypersurface_poly_4.json", &["verify", "hypersurface-poly", "--m", "4"]),
        ("verify_symmetric_poly_3_2.json", &["verify", "symmetric-poly", "--m", "3", "--r", "2"]),
        ("verify_symmetric_poly_2_2.json", &["verify", "symmetric-poly", "--m", "2", "--r", "2"]),
        ("search_2_100.json", &["search", "--complex-dim", "2", "--threshold", "100"]),
        ("search_2_1.json", &["search", "--complex-dim", "2", "--threshold", "1"]),
        ("product_sextic_t1.json", &["product", "--complex-dim", "2", "--degrees", "6", "--torus-dim", "1"]),
        ("product_k3_t2.json", &["product", "--complex-dim", "2", "--degrees", "4", "--torus-dim", "2"]),
        ("product_k3_t0.json", &["product", "--complex-dim", "2", "--degrees", "4", "--torus-dim", "0"]),
    ];
    for (file, args) in cases {
        let out = run(args);
        ensure(out.status.code() == Some(0), || format!("{file}: exit {:?}", out.status.code()))?;
        let expected = std::fs::read(golden.join(file)).map_err(|e| format!("{file}: {e}"))?;
        ensure(out.stdout == expected, || format!("{file}: output differs from golden"))?;
    }
    let codes: &[(&[&str], i32)] = &[
        (&["compute", "--complex-dim", "2", "--degrees", "5"], 2),
        (&["compute", "--complex-dim", "2", "--degrees", "2"], 2),
        (&["search", "--complex-dim", "3", "--threshold", "1"], 1),
        (&["compute", "--complex-dim", "2", "--bogus"], 1),
        (&["verify", "no-such-suite"], 1),
    ];
    for (args, code) in codes {
        let got = run(args).status.code();
        ensure(got == Some(*code), || format!("rscount {}: exit {got:?}, expected {code}", args.join(" ")))?;
    }
    Ok(())
}

struct Criterion {
    id: &'static str,
    name: &'static str,
    budget: Option<Duration>,
    check: fn() -> Verdict,
}

fn main() {
    let ms = Duration::from_millis;
    let criteria = [
        Criterion { id: "AC1", name: "parallel-spinor table (28 values)", budget: Some(ms(1)), check: table_1 },
        Criterion { id: "AC2", name: "Calabi-Yau table (15 rows, both columns)", budget: Some(ms(10)), check: table_3 },
        Criterion { id: "AC3", name: "series vs closed form, m = 2..30", budget: Some(ms(5000)), check: dual_path },
        Criterion { id: "AC4", name: "hypersurface polynomial degree and leading term", budget: Some(ms(5000)), check: hypersurface_polynomial },
        Criterion { id: "AC5", name: "symmetric polynomial, specialization, odd vanishing", budget: Some(ms(30000)), check: symmetric_polynomial },
        Criterion { id: "AC6", name: "K3 anchor (-40, 2, -38, 38)", budget: Some(ms(10)), check: k3_anchor },
        Criterion { id: "AC7", name: "torus dominance, m = 2..60", budget: Some(ms(100)), check: torus_dominance },
        Criterion { id: "AC8", name: "ring and series property suites (1000 cases each)", budget: None, check: property_suites },
        Criterion { id: "AC9", name: "CLI goldens and exit codes", budget: None, check: cli_goldens },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(c.check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let verdict = verdict.and_then(|()| match c.budget {
            Some(b) if elapsed > b => Err(format!("took {elapsed:?}, budget {b:?}")),
            _ => Ok(()),
        });
        let budget = c.budget.map(|b| format!(" / {b:?}")).unwrap_or_default();
        match verdict {
            Ok(()) => println!("[PASS] {} {} ({elapsed:.2?}{budget})", c.id, c.name),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {} {}: {msg}", c.id, c.name);
            }
        }
    }
    println!("acceptance: {} passed, {} failed", criteria.len() - failed, failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
