//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (run with `cargo test -p fuzcon --test acceptance -- --nocapture` to see
//! them).

use fuzcon::analysis::{
    check_law, classify_negation, extracted_negation_continuous, verify_theorem, LawId,
    LawOperands, TheoremId,
};
use fuzcon::catalog::{load_catalog, ExpectedNegation};
use fuzcon::connective::ConnectiveKind;
use fuzcon::fuzz::random_monotone_connective;
use fuzcon::induce::{
    disjunction_from_implication, disjunction_via_negation, implication_from_dn,
    natural_negation_of_conjunction, natural_negation_of_disjunction, negation_of_implication,
};
use fuzcon::{NumericConfig, Verdict};
use std::time::Instant;

fn pass(criterion: &str) {
    println!("acceptance {criterion}: PASS");
}

fn default_cfg() -> NumericConfig {
    NumericConfig::default()
}

/// 1001 uniform points merged with a function's breakpoints.
fn comparison_points(extra: &[f64]) -> Vec<f64> {
    let mut pts: Vec<f64> = (0..=1000).map(|i| i as f64 / 1000.0).collect();
    pts.extend_from_slice(extra);
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    pts
}

#[test]
fn criterion_01_table1_reproduction() {
    let started = Instant::now();
    let cfg = default_cfg();
    let cat = load_catalog().unwrap();

    let mut listed = 0;
    let mut flagged = 0;
    for name in [
        "C_0", "C_1", "C_2", "C_3", "C_4", "C_5", "T_M", "T_P", "T_L", "T_D", "T_nM",
    ] {
        let fixture = cat.conjunction_fixture(name).unwrap();
        let induced = natural_negation_of_conjunction(&fixture.connective, &cfg).unwrap();
        match &fixture.expected_negation {
            ExpectedNegation::Negation(expected) => {
                assert!(induced.is_negation, "{name} should induce a negation");
                let mut max_err = 0.0f64;
                for &x in &comparison_points(expected.breakpoints()) {
                    max_err = max_err.max((induced.function.eval(x) - expected.eval(x)).abs());
                }
                assert!(
                    max_err <= 1e-6,
                    "{name}: induced negation deviates by {max_err}"
                );
                listed += 1;
            }
            ExpectedNegation::NotANegation => {
                assert!(
                    !induced.is_negation,
                    "{name} must be flagged as inducing no negation"
                );
                assert!(
                    induced.function.eval(1.0).abs() > cfg.eps_eq,
                    "{name}: the flag must come from the value at 1"
                );
                flagged += 1;
            }
        }
    }
    assert_eq!(listed, 9);
    assert_eq!(flagged, 2);
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}");
    pass("criterion 1 (table 1 reproduction)");
}

#[test]
fn criterion_02_table2_reproduction() {
    let started = Instant::now();
    let cfg = default_cfg();
    let cat = load_catalog().unwrap();
    let grid: Vec<f64> = (0..=100).map(|i| i as f64 / 100.0).collect();

    for name in ["D_1", "D_2", "D_3", "D_4", "D_5", "D_6", "D_7"] {
        let fixture = cat.disjunction_fixture(name).unwrap();
        let induced = natural_negation_of_disjunction(&fixture.connective, &cfg).unwrap();
        assert!(induced.is_negation, "{name} induces a negation");
        let ExpectedNegation::Negation(expected_n) = &fixture.expected_negation else {
            panic!("{name} must list an expected negation");
        };
        let mut max_err = 0.0f64;
        for &x in &grid {
            max_err = max_err.max((induced.function.eval(x) - expected_n.eval(x)).abs());
        }
        assert!(max_err <= 1e-6, "{name}: negation deviates by {max_err}");

        let composed =
            implication_from_dn(&fixture.connective, &induced.function, &cfg).unwrap();
        let expected_i = fixture.expected_implication.as_ref().unwrap();
        let mut max_err = 0.0f64;
        for &x in &grid {
            for &y in &grid {
                max_err = max_err.max((composed.eval(x, y) - expected_i.eval(x, y)).abs());
            }
        }
        assert!(max_err <= 1e-6, "{name}: implication deviates by {max_err}");
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    pass("criterion 2 (table 2 reproduction)");
}

#[test]
fn criterion_03_table3_matrix() {
    let cfg = default_cfg();
    let cat = load_catalog().unwrap();
    for row in &cat.independence {
        let as_implication = row.function.with_kind(ConnectiveKind::Implication);
        let computed_fi =
            fuzcon::validate_connective(&as_implication, &cfg).holds_verdict();
        let computed_cond = check_law(
            LawId::Cond47,
            &LawOperands::implication(&row.function),
            &cfg,
        )
        .unwrap()
        .holds_verdict();
        let computed_cont = extracted_negation_continuous(&row.function, &cfg);
        assert_eq!(
            (computed_fi, computed_cond, computed_cont),
            (row.is_implication, row.section_condition, row.negation_continuous),
            "{} disagrees with the expected verdict row",
            row.function.name()
        );
    }
    pass("criterion 3 (independence matrix)");
}

#[test]
fn criterion_04_equivalence_consistency() {
    let started = Instant::now();
    let cat = load_catalog().unwrap();

    // catalog part at default tolerances and grids
    let cfg = default_cfg();
    for fixture in cat.conjunctions.iter().chain(&cat.disjunctions) {
        if !fixture.connective.flags().commutative {
            continue;
        }
        let induced = match fixture.connective.kind() {
            ConnectiveKind::Conjunction => {
                natural_negation_of_conjunction(&fixture.connective, &cfg).unwrap()
            }
            _ => natural_negation_of_disjunction(&fixture.connective, &cfg).unwrap(),
        };
        if !induced.is_negation {
            continue;
        }
        let report = classify_negation(&induced.function, &cfg);
        assert!(
            report.flags_agree(),
            "{}: flags {:?}",
            fixture.connective.name(),
            report.equivalence_flags()
        );
    }

    // 1000 fuzzed commutative instances; default tolerances, reduced grids
    let fuzz_cfg = NumericConfig {
        grid_1d: 513,
        grid_2d: 65,
        ..NumericConfig::default()
    };
    let mut disagreements = 0;
    for seed in 1..=1000u64 {
        let kind = if seed % 2 == 1 {
            ConnectiveKind::Conjunction
        } else {
            ConnectiveKind::Disjunction
        };
        let instance = random_monotone_connective(seed, 17, kind, true);
        let induced = match kind {
            ConnectiveKind::Conjunction => {
                natural_negation_of_conjunction(&instance, &fuzz_cfg).unwrap()
            }
            _ => natural_negation_of_disjunction(&instance, &fuzz_cfg).unwrap(),
        };
        if !induced.is_negation {
            continue;
        }
        let report = classify_negation(&induced.function, &fuzz_cfg);
        if !report.flags_agree() {
            disagreements += 1;
            eprintln!(
                "seed {seed}: flags {:?}",
                report.equivalence_flags()
            );
        }
    }
    assert_eq!(disagreements, 0);
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    pass("criterion 4 (equivalence-theorem consistency)");
}

#[test]
fn criterion_05_counterexample_detection() {
    let cfg = default_cfg();
    let cat = load_catalog().unwrap();

    // asymmetric sqrt form: continuous, strictly decreasing, not strong
    let ex_i = cat.conjunction_fixture("asym_sqrt_C").unwrap();
    let n_i = natural_negation_of_conjunction(&ex_i.connective, &cfg).unwrap();
    let report = classify_negation(&n_i.function, &cfg);
    assert!(report.continuous.holds);
    assert!(report.strictly_decreasing.holds);
    assert!(!report.strong.holds);
    let defect_at_half = (n_i.function.eval(n_i.function.eval(0.5)) - 0.5).abs();
    assert!(
        defect_at_half >= 0.06,
        "involution defect at 0.5 is {defect_at_half}, expected about 0.0625"
    );
    assert!((defect_at_half - 0.0625).abs() < 1e-6);

    // two-slope form: discontinuous at 0.5 with a jump of 0.25, strictly
    // decreasing
    let ex_ii = cat.conjunction_fixture("two_slope_C").unwrap();
    let n_ii = natural_negation_of_conjunction(&ex_ii.connective, &cfg).unwrap();
    let report = classify_negation(&n_ii.function, &cfg);
    assert!(!report.continuous.holds);
    assert!(report.strictly_decreasing.holds);
    let w = report.continuous.witness.unwrap();
    assert!((w.point[0] - 0.5).abs() < 1e-6, "jump located at {}", w.point[0]);
    assert!(w.values[0] >= 0.2, "jump size {}", w.values[0]);

    // both conjunctions flagged non-commutative, with reproducible witnesses
    for fixture in [ex_i, ex_ii] {
        let declared = fixture
            .connective
            .with_flags(fuzcon::DeclaredFlags::none().commutative(true));
        let check = fuzcon::validate_connective(&declared, &cfg);
        assert_eq!(check.verdict, Verdict::Fails);
        let w = check.witness.unwrap();
        let (x, y) = (w.point[0], w.point[1]);
        assert!(
            (fixture.connective.eval(x, y) - fixture.connective.eval(y, x)).abs() > cfg.eps_eq,
            "witness does not reproduce for {}",
            fixture.connective.name()
        );
    }
    pass("criterion 5 (counterexample detection)");
}

#[test]
fn criterion_06_lem_fails_but_inequalities_hold() {
    let cfg = default_cfg();
    let cat = load_catalog().unwrap();
    let d = cat.binary("remark41_D").unwrap();
    let n_s = cat.unary("N_S").unwrap();
    let ops = LawOperands::disjunction_negation(d, n_s);

    let lem = check_law(LawId::Lem, &ops, &cfg).unwrap();
    assert_eq!(lem.verdict, Verdict::Fails);
    let defect = (d.eval(n_s.eval(0.5), 0.5) - 1.0).abs();
    assert!(defect >= 0.4, "defect at 0.5 is {defect}");
    let w = lem.witness.unwrap();
    assert!((w.point[0] - 0.5).abs() < 1e-12, "worst witness at {}", w.point[0]);

    let ineq = check_law(LawId::LemIneq, &ops, &cfg).unwrap();
    assert_eq!(ineq.verdict, Verdict::Holds, "{ineq}");
    pass("criterion 6 (excluded middle vs inequalities)");
}

#[test]
fn criterion_07_roundtrip() {
    let cfg = default_cfg();
    let cat = load_catalog().unwrap();
    let grid: Vec<f64> = (0..=100).map(|i| i as f64 / 100.0).collect();

    for name in ["I_3", "I_4", "I_5", "I_RC"] {
        let i = cat.implication(name).unwrap();
        let n_i = negation_of_implication(i, &cfg).unwrap();
        let d = disjunction_from_implication(i, &cfg).unwrap();

        let mut sup = 0.0f64;
        for &x in &grid {
            let nx = n_i.eval(x);
            for &y in &grid {
                sup = sup.max((d.eval(nx, y) - i.eval(x, y)).abs());
            }
        }
        assert!(sup <= 1e-9, "{name}: round-trip distance {sup}");

        let mut neutral = 0.0f64;
        for &x in &grid {
            neutral = neutral.max((d.eval(x, 0.0) - x).abs());
        }
        assert!(neutral <= 1e-9, "{name}: right-neutral defect {neutral}");

        let thm = verify_theorem(TheoremId::Thm41, &LawOperands::implication(i), &cfg).unwrap();
        assert!(thm.holds_verdict(), "{thm}");
    }
    pass("criterion 7 (representation round-trip)");
}

#[test]
fn criterion_08_swapped_negation_context() {
    let cfg = default_cfg();
    let cat = load_catalog().unwrap();
    let i_rc = cat.implication("I_RC").unwrap();
    let rem42 = cat.unary("remark42_N").unwrap();

    let d = disjunction_via_negation(i_rc, rem42, &cfg).unwrap();
    // analytic jump of 0.5 at the origin
    let jump = (d.eval(1e-6, 0.0) - d.eval(0.0, 0.0)).abs();
    assert!(jump >= 0.4, "jump at the origin is {jump}");
    assert!((jump - 0.5).abs() < 1e-3);

    // matches the expected closed form of the rebuilt disjunction
    let expected = &cat.expected_swapped_context_disjunction;
    for i in 0..=50 {
        for j in 0..=50 {
            let (x, y) = (i as f64 / 50.0, j as f64 / 50.0);
            assert!(
                (d.eval(x, y) - expected.eval(x, y)).abs() <= 1e-9,
                "rebuilt disjunction deviates at ({x}, {y})"
            );
        }
    }

    let thm = verify_theorem(
        TheoremId::Thm42,
        &LawOperands::implication(i_rc).with_negation(rem42),
        &cfg,
    )
    .unwrap();
    assert_eq!(thm.verdict, Verdict::PreconditionFailed);
    assert!(
        thm.missing_hypothesis.as_deref().unwrap_or("").contains("strict"),
        "{thm}"
    );
    pass("criterion 8 (swapped negation context)");
}

#[test]
fn criterion_09_membership_suites_and_oracle() {
    let cat = load_catalog().unwrap();
    let cfg = NumericConfig {
        grid_1d: 1025,
        grid_2d: 129,
        ..NumericConfig::default()
    };

    // biconditionals for the one-sided-continuous fixtures
    for fixture in &cat.conjunctions {
        if !fixture.connective.flags().left_continuous {
            continue;
        }
        let r = verify_theorem(
            TheoremId::Prop31,
            &LawOperands {
                conjunction: Some(&fixture.connective),
                ..LawOperands::default()
            },
            &cfg,
        )
        .unwrap();
        assert!(r.holds_verdict(), "{}: {r}", fixture.connective.name());
    }
    for fixture in &cat.disjunctions {
        if !fixture.connective.flags().right_continuous {
            continue;
        }
        let r = verify_theorem(
            TheoremId::Prop33,
            &LawOperands {
                disjunction: Some(&fixture.connective),
                ..LawOperands::default()
            },
            &cfg,
        )
        .unwrap();
        assert!(r.holds_verdict(), "{}: {r}", fixture.connective.name());
    }

    // one-sided membership implications for every fixture, continuous or not
    let pts = cfg.grid_points_2d();
    for fixture in &cat.conjunctions {
        let c = &fixture.connective;
        let induced = natural_negation_of_conjunction(c, &cfg).unwrap();
        for &x in &pts {
            let ncx = induced.function.eval(x);
            for &y in &pts {
                let v = c.eval(x, y);
                if v <= cfg.eps_zero {
                    assert!(
                        y <= ncx + cfg.eps_eq,
                        "{}: zero at ({x}, {y}) above the supremum {ncx}",
                        c.name()
                    );
                }
                if y < ncx - cfg.eps_eq {
                    assert!(
                        v <= cfg.eps_zero,
                        "{}: positive value {v} below the supremum at ({x}, {y})",
                        c.name()
                    );
                }
            }
        }
    }
    for fixture in &cat.disjunctions {
        let d = &fixture.connective;
        let induced = natural_negation_of_disjunction(d, &cfg).unwrap();
        for &x in &pts {
            let ndx = induced.function.eval(x);
            for &y in &pts {
                let v = d.eval(x, y);
                if v >= 1.0 - cfg.eps_one {
                    assert!(
                        y >= ndx - cfg.eps_eq,
                        "{}: one at ({x}, {y}) below the infimum {ndx}",
                        d.name()
                    );
                }
                if y > ndx + cfg.eps_eq {
                    assert!(
                        v >= 1.0 - cfg.eps_one,
                        "{}: value {v} above the infimum at ({x}, {y})",
                        d.name()
                    );
                }
            }
        }
    }

    // bisection against the dense-scan oracle
    let scan_n = 1_000_000usize;
    let xs: Vec<f64> = (0..=8).map(|i| i as f64 / 8.0).collect();
    for fixture in &cat.conjunctions {
        let c = &fixture.connective;
        let induced = natural_negation_of_conjunction(c, &cfg).unwrap();
        for &x in &xs {
            let mut oracle = 0.0;
            for k in (0..=scan_n).rev() {
                let t = k as f64 / scan_n as f64;
                if c.eval(x, t) <= cfg.eps_zero {
                    oracle = t;
                    break;
                }
            }
            let got = induced.function.eval(x);
            assert!(
                (got - oracle).abs() <= 1e-5,
                "{}: x = {x}, bisection {got} vs oracle {oracle}",
                c.name()
            );
        }
    }
    for fixture in &cat.disjunctions {
        let d = &fixture.connective;
        let induced = natural_negation_of_disjunction(d, &cfg).unwrap();
        for &x in &xs {
            let mut oracle = 1.0;
            for k in 0..=scan_n {
                let t = k as f64 / scan_n as f64;
                if d.eval(x, t) >= 1.0 - cfg.eps_one {
                    oracle = t;
                    break;
                }
            }
            let got = induced.function.eval(x);
            assert!(
                (got - oracle).abs() <= 1e-5,
                "{}: x = {x}, bisection {got} vs oracle {oracle}",
                d.name()
            );
        }
    }
    // plus 100 fuzzed instances
    let fuzz_cfg = NumericConfig {
        grid_1d: 513,
        grid_2d: 65,
        ..NumericConfig::default()
    };
    let fuzz_xs: Vec<f64> = (0..=4).map(|i| i as f64 / 4.0).collect();
    for seed in 1..=100u64 {
        let kind = if seed % 2 == 1 {
            ConnectiveKind::Conjunction
        } else {
            ConnectiveKind::Disjunction
        };
        let instance = random_monotone_connective(seed, 17, kind, false);
        match kind {
            ConnectiveKind::Conjunction => {
                let induced = natural_negation_of_conjunction(&instance, &fuzz_cfg).unwrap();
                for &x in &fuzz_xs {
                    let mut oracle = 0.0;
                    for k in (0..=scan_n).rev() {
                        let t = k as f64 / scan_n as f64;
                        if instance.eval(x, t) <= fuzz_cfg.eps_zero {
                            oracle = t;
                            break;
                        }
                    }
                    assert!((induced.function.eval(x) - oracle).abs() <= 1e-5, "seed {seed}");
                }
            }
            _ => {
                let induced = natural_negation_of_disjunction(&instance, &fuzz_cfg).unwrap();
                for &x in &fuzz_xs {
                    let mut oracle = 1.0;
                    for k in 0..=scan_n {
                        let t = k as f64 / scan_n as f64;
                        if instance.eval(x, t) >= 1.0 - fuzz_cfg.eps_one {
                            oracle = t;
                            break;
                        }
                    }
                    assert!((induced.function.eval(x) - oracle).abs() <= 1e-5, "seed {seed}");
                }
            }
        }
    }
    pass("criterion 9 (membership suites and oracle agreement)");
}

#[test]
fn criterion_10_lemma_axiom_suite() {
    let started = Instant::now();
    let cat = load_catalog().unwrap();
    let cfg = NumericConfig {
        grid_1d: 513,
        grid_2d: 65,
        ..NumericConfig::default()
    };

    // classification consistency for every catalog and induced negation
    for n in &cat.negations {
        assert!(classify_negation(n, &cfg).consistent(), "{}", n.name());
    }
    for fixture in cat.conjunctions.iter() {
        let induced = natural_negation_of_conjunction(&fixture.connective, &cfg).unwrap();
        assert!(
            classify_negation(&induced.function, &cfg).consistent(),
            "{}",
            fixture.connective.name()
        );
    }
    for fixture in cat.disjunctions.iter() {
        let induced = natural_negation_of_disjunction(&fixture.connective, &cfg).unwrap();
        assert!(
            classify_negation(&induced.function, &cfg).consistent(),
            "{}",
            fixture.connective.name()
        );
    }

    // ordering property implies identity principle on every implication
    for i in &cat.implications {
        let op = check_law(LawId::Op, &LawOperands::implication(i), &cfg).unwrap();
        let ip = check_law(LawId::Ip, &LawOperands::implication(i), &cfg).unwrap();
        assert!(
            !op.holds_verdict() || ip.holds_verdict(),
            "{}: ordering holds but identity fails",
            i.name()
        );
    }

    // full cross-product: every composition is an implication, and the
    // identity principle agrees with the first excluded-middle half
    for fixture in &cat.disjunctions {
        let d = &fixture.connective;
        for n in &cat.negations {
            let composed = implication_from_dn(d, n, &cfg)
                .unwrap_or_else(|e| panic!("{} with {}: {e}", d.name(), n.name()));
            let check = fuzcon::validate_connective(&composed, &cfg);
            assert!(
                check.holds_verdict(),
                "{} with {}: {check}",
                d.name(),
                n.name()
            );
            let ip = check_law(LawId::Ip, &LawOperands::implication(&composed), &cfg).unwrap();
            let lem1 =
                check_law(LawId::Lem1, &LawOperands::disjunction_negation(d, n), &cfg).unwrap();
            assert_eq!(
                ip.holds_verdict(),
                lem1.holds_verdict(),
                "{} with {}: identity {} vs excluded-middle half {}",
                d.name(),
                n.name(),
                ip.verdict,
                lem1.verdict
            );
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    pass("criterion 10 (lemma and axiom suite)");
}
