//! The bundled connective catalog.
//!
//! Every fixture carries its closed form in the DSL, the flags it is declared
//! (and verified) to have, and the induced objects it is expected to produce:
//! table 1 maps conjunctions to their natural negations, table 2 maps
//! disjunctions to natural negations and the implications they induce with
//! them, and table 3 is the independence matrix showing that being an
//! implication, the equal-section condition and continuity of the extracted
//! negation are mutually independent. [`load_catalog`] validates everything
//! before handing it out; corrupted fixtures are a hard error, not a verdict.

use crate::config::NumericConfig;
use crate::connective::{
    BinaryConnective, ConnectiveKind, DeclaredFlags, NeutralElement, NeutralSide, UnaryFunction,
};
use crate::validate::{validate_connective, validate_negation};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use thiserror::Error;

/// What a conjunction/disjunction fixture is expected to induce.
#[derive(Debug, Clone)]
pub enum ExpectedNegation {
    /// The natural negation equals this closed form.
    Negation(UnaryFunction),
    /// The induced map misses an endpoint value and is not a negation.
    NotANegation,
}

/// One catalog entry: a connective, its expected induced objects, and the
/// verdicts the tables assert about it.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub connective: BinaryConnective,
    pub expected_negation: ExpectedNegation,
    /// For disjunctions: the expected `(D, N_D)`-implication.
    pub expected_implication: Option<BinaryConnective>,
    /// Documented keys: `commutative`, `n_continuous`,
    /// `n_strictly_decreasing`, `n_strong`, `lem_with_N_S`,
    /// `lem_ineq_with_N_S`.
    pub expected_verdicts: BTreeMap<String, bool>,
    /// Where the expectation comes from, in catalog-table coordinates.
    pub provenance: String,
}

/// One row of the independence matrix: a raw `[0,1]² -> [0,1]` map and the
/// three expected column verdicts.
#[derive(Debug, Clone)]
pub struct IndependenceRow {
    pub function: BinaryConnective,
    /// Column 1: the map satisfies the implication axioms.
    pub is_implication: bool,
    /// Column 2: sections through equal extracted-negation values coincide.
    pub section_condition: bool,
    /// Column 3: the extracted negation is continuous.
    pub negation_continuous: bool,
    pub provenance: String,
}

/// The full bundled catalog.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub conjunctions: Vec<Fixture>,
    pub disjunctions: Vec<Fixture>,
    pub negations: Vec<UnaryFunction>,
    pub implications: Vec<BinaryConnective>,
    pub independence: Vec<IndependenceRow>,
    /// Pseudo-inverse expected for the clipped-slope negation.
    pub expected_rem42_pseudo_inverse: UnaryFunction,
    /// Patched pseudo-inverse expected for the clipped-slope negation.
    pub expected_rem42_aleph: UnaryFunction,
    /// The discontinuous disjunction rebuilt from the linear implication
    /// under the clipped-slope negation context.
    pub expected_swapped_context_disjunction: BinaryConnective,
}

/// Catalog integrity failure.
#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("catalog fixture `{name}` is corrupt: {detail}")]
    Corrupt { name: String, detail: String },
}

fn corrupt(name: &str, detail: impl std::fmt::Display) -> CatalogError {
    CatalogError::Corrupt {
        name: name.to_string(),
        detail: detail.to_string(),
    }
}

fn binary(
    name: &str,
    kind: ConnectiveKind,
    flags: DeclaredFlags,
    src: &str,
) -> Result<BinaryConnective, CatalogError> {
    BinaryConnective::parse(name, kind, flags, src).map_err(|e| corrupt(name, e))
}

fn unary(name: &str, src: &str) -> Result<UnaryFunction, CatalogError> {
    UnaryFunction::parse(name, src).map_err(|e| corrupt(name, e))
}

fn t_norm_flags(left: bool, right: bool) -> DeclaredFlags {
    DeclaredFlags {
        commutative: true,
        associative: true,
        left_continuous: left,
        right_continuous: right,
        neutral: Some(NeutralElement {
            value: 1.0,
            side: NeutralSide::Both,
        }),
    }
}

fn verdicts(entries: &[(&str, bool)]) -> BTreeMap<String, bool> {
    entries
        .iter()
        .map(|(k, v)| (k.to_string(), *v))
        .collect()
}

/// Builds and validates the catalog.
///
/// Fixtures are code, not generated data: expected values are bit-identical
/// across runs. Validation at load uses a reduced grid; the acceptance suite
/// re-checks everything at its own stated resolutions.
pub fn load_catalog() -> Result<Catalog, CatalogError> {
    let n_s = unary("N_S", "1 - x")?;
    let n_g1 = unary("N_G1", "piece(x = 0 : 1 ; else : 0)")?;
    let n_g2 = unary("N_G2", "piece(x < 1 : 1 ; else : 0)")?;
    let rem42_n = unary("remark42_N", "piece(x <= 1/2 : 1 - 2*x ; else : 0)")?;
    let n_4 = unary("N_4", "sqrt(1 - pow(x, 2))")?;
    let n_5 = unary("N_5", "pow(1 - x, 2)")?;

    let mut conjunctions = Vec::new();
    let mut push_conj = |name: &str,
                         src: &str,
                         flags: DeclaredFlags,
                         expected: ExpectedNegation,
                         extra: BTreeMap<String, bool>,
                         provenance: &str|
     -> Result<(), CatalogError> {
        conjunctions.push(Fixture {
            connective: binary(name, ConnectiveKind::Conjunction, flags, src)?,
            expected_negation: expected,
            expected_implication: None,
            expected_verdicts: extra,
            provenance: provenance.to_string(),
        });
        Ok(())
    };

    push_conj(
        "C_0",
        "piece(x = 1 && y = 1 : 1 ; else : 0)",
        DeclaredFlags::none().commutative(true).right_continuous(true),
        ExpectedNegation::NotANegation,
        verdicts(&[("commutative", true)]),
        "table:1 row:C_0",
    )?;
    push_conj(
        "C_1",
        "piece(x = 0 : 0 ; y = 0 : 0 ; else : 1)",
        DeclaredFlags::none().commutative(true).left_continuous(true),
        ExpectedNegation::Negation(n_g1.clone()),
        verdicts(&[("commutative", true)]),
        "table:1 row:C_1",
    )?;
    push_conj(
        "C_2",
        "piece(x = 1 : y ; else : 0)",
        DeclaredFlags::none().right_continuous(true),
        ExpectedNegation::Negation(n_g2.clone()),
        verdicts(&[("commutative", false)]),
        "table:1 row:C_2",
    )?;
    push_conj(
        "C_3",
        "piece(y = 1 : x ; else : 0)",
        DeclaredFlags::none().right_continuous(true),
        ExpectedNegation::NotANegation,
        verdicts(&[("commutative", false)]),
        "table:1 row:C_3",
    )?;
    push_conj(
        "C_4",
        "piece(x + y <= 1 : 0 ; else : y)",
        DeclaredFlags::none().left_continuous(true),
        ExpectedNegation::Negation(n_s.clone()),
        verdicts(&[("commutative", false), ("n_strong", true)]),
        "table:1 row:C_4; also the free-star template instance",
    )?;
    push_conj(
        "C_5",
        "piece(y = 0 : 0 ; else : x)",
        DeclaredFlags::none().left_continuous(true),
        ExpectedNegation::Negation(n_g1.clone()),
        verdicts(&[("commutative", false)]),
        "table:1 row:C_5",
    )?;
    push_conj(
        "T_M",
        "min(x, y)",
        t_norm_flags(true, true),
        ExpectedNegation::Negation(n_g1.clone()),
        verdicts(&[("commutative", true)]),
        "table:1 row:T_M",
    )?;
    push_conj(
        "T_P",
        "x*y",
        t_norm_flags(true, true),
        ExpectedNegation::Negation(n_g1.clone()),
        verdicts(&[("commutative", true)]),
        "table:1 row:T_P",
    )?;
    push_conj(
        "T_L",
        "max(x + y - 1, 0)",
        t_norm_flags(true, true),
        ExpectedNegation::Negation(n_s.clone()),
        verdicts(&[("commutative", true), ("n_strong", true)]),
        "table:1 row:T_L",
    )?;
    push_conj(
        "T_D",
        "piece(x < 1 && y < 1 : 0 ; else : min(x, y))",
        t_norm_flags(false, true),
        ExpectedNegation::Negation(n_g2.clone()),
        verdicts(&[("commutative", true)]),
        "table:1 row:T_D",
    )?;
    push_conj(
        "T_nM",
        "piece(x + y <= 1 : 0 ; else : min(x, y))",
        t_norm_flags(true, false),
        ExpectedNegation::Negation(n_s.clone()),
        verdicts(&[("commutative", true), ("n_strong", true)]),
        "table:1 row:T_nM",
    )?;
    push_conj(
        "asym_sqrt_C",
        "max(x + sqrt(y) - 1, 0)",
        DeclaredFlags::none().left_continuous(true).right_continuous(true),
        ExpectedNegation::Negation(n_5.renamed("asym_sqrt_N")),
        verdicts(&[
            ("commutative", false),
            ("n_continuous", true),
            ("n_strictly_decreasing", true),
            ("n_strong", false),
        ]),
        "examples:asymmetric-sqrt",
    )?;
    push_conj(
        "two_slope_C",
        "piece(x < 1/2 : max(x/2 + y - 1, 0) ; else : max(x + y - 1, 0))",
        DeclaredFlags::none().right_continuous(true),
        ExpectedNegation::Negation(unary(
            "two_slope_N",
            "piece(x < 1/2 : 1 - x/2 ; else : 1 - x)",
        )?),
        verdicts(&[
            ("commutative", false),
            ("n_continuous", false),
            ("n_strictly_decreasing", true),
        ]),
        "examples:two-slope",
    )?;

    let i_d1 = binary(
        "I_D1",
        ConnectiveKind::Implication,
        DeclaredFlags::none(),
        "piece(x = 0 : 1 ; else : y)",
    )?;
    let i_gd = binary(
        "I_GD",
        ConnectiveKind::Implication,
        DeclaredFlags::none(),
        "piece(x <= y : 1 ; else : y)",
    )?;
    let i_3 = binary(
        "I_3",
        ConnectiveKind::Implication,
        DeclaredFlags::none(),
        "piece(x <= y : 1 ; else : 1 - x)",
    )?;
    let i_4 = binary(
        "I_4",
        ConnectiveKind::Implication,
        DeclaredFlags::none(),
        "min(1, 1 - pow(x, 2) + pow(y, 2))",
    )?;
    let i_5 = binary(
        "I_5",
        ConnectiveKind::Implication,
        DeclaredFlags::none(),
        "min(1, pow(1 - x, 2) + sqrt(y))",
    )?;
    let i_6 = binary(
        "I_6",
        ConnectiveKind::Implication,
        DeclaredFlags::none(),
        "piece(x = 1 && y < 1 : 0 ; else : 1)",
    )?;
    let i_wb = binary(
        "I_WB",
        ConnectiveKind::Implication,
        DeclaredFlags::none(),
        "piece(x < 1 : 1 ; else : y)",
    )?;
    let i_rs = binary(
        "I_RS",
        ConnectiveKind::Implication,
        DeclaredFlags::none(),
        "piece(x <= y : 1 ; else : 0)",
    )?;
    let i_rc = binary(
        "I_RC",
        ConnectiveKind::Implication,
        DeclaredFlags::none(),
        "1 - x + x*y",
    )?;

    let mut disjunctions = Vec::new();
    let mut push_disj = |name: &str,
                         src: &str,
                         flags: DeclaredFlags,
                         negation: UnaryFunction,
                         implication: Option<BinaryConnective>,
                         extra: BTreeMap<String, bool>,
                         provenance: &str|
     -> Result<(), CatalogError> {
        disjunctions.push(Fixture {
            connective: binary(name, ConnectiveKind::Disjunction, flags, src)?,
            expected_negation: ExpectedNegation::Negation(negation),
            expected_implication: implication,
            expected_verdicts: extra,
            provenance: provenance.to_string(),
        });
        Ok(())
    };

    push_disj(
        "D_1",
        "piece(x = 0 : y ; else : 1)",
        DeclaredFlags::none().left_continuous(true),
        n_g1.clone(),
        Some(i_d1.clone()),
        verdicts(&[("commutative", false)]),
        "table:2 row:D_1",
    )?;
    push_disj(
        "D_2",
        "piece(x + y >= 1 : 1 ; else : y)",
        DeclaredFlags::none().right_continuous(true),
        n_s.clone(),
        Some(i_gd.clone()),
        verdicts(&[("commutative", false)]),
        "table:2 row:D_2",
    )?;
    push_disj(
        "D_3",
        "piece(x + y >= 1 : 1 ; else : x)",
        DeclaredFlags::none().right_continuous(true),
        n_s.clone(),
        Some(i_3.clone()),
        verdicts(&[("commutative", false)]),
        "table:2 row:D_3",
    )?;
    push_disj(
        "D_4",
        "min(1, pow(x, 2) + pow(y, 2))",
        DeclaredFlags::none()
            .commutative(true)
            .left_continuous(true)
            .right_continuous(true),
        n_4.clone(),
        Some(i_4.clone()),
        verdicts(&[("commutative", true), ("n_strong", true)]),
        "table:2 row:D_4",
    )?;
    push_disj(
        "D_5",
        "min(1, x + sqrt(y))",
        DeclaredFlags::none().left_continuous(true).right_continuous(true),
        n_5.clone(),
        Some(i_5.clone()),
        verdicts(&[("commutative", false), ("n_strong", false)]),
        "table:2 row:D_5",
    )?;
    push_disj(
        "D_6",
        "piece(x = 0 && y = 0 : 0 ; x = 1 : 1 ; y = 1 : 1 ; else : x)",
        DeclaredFlags::none().right_continuous(true),
        n_g2.clone(),
        Some(i_6.clone()),
        verdicts(&[("commutative", false)]),
        "table:2 row:D_6",
    )?;
    push_disj(
        "D_7",
        "piece(x = 0 && y = 0 : 0 ; x = 1 : 1 ; y = 1 : 1 ; else : y)",
        DeclaredFlags::none().right_continuous(true),
        n_g2.clone(),
        Some(i_wb.clone()),
        verdicts(&[("commutative", false)]),
        "table:2 row:D_7",
    )?;
    push_disj(
        "remark41_D",
        "piece(x + y > 1 : 1 ; else : pow(x, 2) + pow(y, 2))",
        DeclaredFlags::none().commutative(true).left_continuous(true),
        n_s.clone(),
        None,
        verdicts(&[
            ("commutative", true),
            ("lem_with_N_S", false),
            ("lem_ineq_with_N_S", true),
        ]),
        "examples:lifted-square",
    )?;

    let independence = vec![
        IndependenceRow {
            function: i_rs.with_kind(ConnectiveKind::Raw).with_flags(DeclaredFlags::none()),
            is_implication: true,
            section_condition: false,
            negation_continuous: false,
            provenance: "table:3 row:1".to_string(),
        },
        IndependenceRow {
            function: binary(
                "F_2",
                ConnectiveKind::Raw,
                DeclaredFlags::none(),
                "piece(x = 0 : 1 ; x < 1/2 : 1/2 ; else : y)",
            )?,
            is_implication: false,
            section_condition: true,
            negation_continuous: false,
            provenance: "table:3 row:2".to_string(),
        },
        IndependenceRow {
            // clamped to the unit interval; the published form escapes it at
            // small x and large y, and the clamp changes none of the three
            // column verdicts
            function: binary(
                "F_3",
                ConnectiveKind::Raw,
                DeclaredFlags::none(),
                "piece(x <= 1/2 : min(max(y - 2*x + 1, 0), 1) ; else : 0)",
            )?,
            is_implication: false,
            section_condition: false,
            negation_continuous: true,
            provenance: "table:3 row:3".to_string(),
        },
        IndependenceRow {
            function: binary(
                "F_4",
                ConnectiveKind::Raw,
                DeclaredFlags::none(),
                "piece(x = 0 : 1 ; x <= 1/2 : max(1/2, y) ; else : y)",
            )?,
            is_implication: true,
            section_condition: true,
            negation_continuous: false,
            provenance: "table:3 row:4".to_string(),
        },
        IndependenceRow {
            function: binary(
                "F_5",
                ConnectiveKind::Raw,
                DeclaredFlags::none(),
                "piece(x > y : max(1 - 2*x, 0) ; else : 1)",
            )?,
            is_implication: true,
            section_condition: false,
            negation_continuous: true,
            provenance: "table:3 row:5".to_string(),
        },
        IndependenceRow {
            function: binary(
                "F_6",
                ConnectiveKind::Raw,
                DeclaredFlags::none(),
                "piece(y = 0 : 1 - x ; x < 1/2 : 0 ; else : 1)",
            )?,
            is_implication: false,
            section_condition: true,
            negation_continuous: true,
            provenance: "table:3 row:6".to_string(),
        },
    ];

    let catalog = Catalog {
        conjunctions,
        disjunctions,
        negations: vec![n_s, n_g1, n_g2, rem42_n, n_4, n_5],
        implications: vec![i_d1, i_gd, i_3, i_4, i_5, i_6, i_wb, i_rs, i_rc],
        independence,
        expected_rem42_pseudo_inverse: unary("remark42_pinv", "1/2 - x/2")?,
        expected_rem42_aleph: unary(
            "remark42_aleph",
            "piece(x = 0 : 1 ; else : 1/2 - x/2)",
        )?,
        expected_swapped_context_disjunction: binary(
            "swapped_context_D",
            ConnectiveKind::Disjunction,
            DeclaredFlags::none(),
            "piece(x = 0 : y ; else : (x + y - x*y + 1)/2)",
        )?,
    };
    catalog.self_check()?;
    Ok(catalog)
}

impl Catalog {
    /// Validation run at load time: every connective passes the checks for
    /// its declared kind and flags, every expected negation really is one.
    fn self_check(&self) -> Result<(), CatalogError> {
        let cfg = NumericConfig {
            grid_1d: 513,
            grid_2d: 65,
            ..NumericConfig::default()
        };
        for fixture in self.conjunctions.iter().chain(&self.disjunctions) {
            let r = validate_connective(&fixture.connective, &cfg);
            if !r.holds_verdict() {
                return Err(corrupt(fixture.connective.name(), r));
            }
            if let ExpectedNegation::Negation(n) = &fixture.expected_negation {
                let r = validate_negation(n, &cfg);
                if !r.holds_verdict() {
                    return Err(corrupt(n.name(), r));
                }
            }
            if let Some(i) = &fixture.expected_implication {
                let r = validate_connective(i, &cfg);
                if !r.holds_verdict() {
                    return Err(corrupt(i.name(), r));
                }
            }
        }
        for n in &self.negations {
            let r = validate_negation(n, &cfg);
            if !r.holds_verdict() {
                return Err(corrupt(n.name(), r));
            }
        }
        for i in &self.implications {
            let r = validate_connective(i, &cfg);
            if !r.holds_verdict() {
                return Err(corrupt(i.name(), r));
            }
        }
        for row in &self.independence {
            let r = validate_connective(&row.function, &cfg);
            if !r.holds_verdict() {
                return Err(corrupt(row.function.name(), r));
            }
        }
        let r = validate_connective(&self.expected_swapped_context_disjunction, &cfg);
        if !r.holds_verdict() {
            return Err(corrupt(self.expected_swapped_context_disjunction.name(), r));
        }
        Ok(())
    }

    /// Looks up any binary connective by name.
    pub fn binary(&self, name: &str) -> Option<&BinaryConnective> {
        self.conjunctions
            .iter()
            .chain(&self.disjunctions)
            .map(|f| &f.connective)
            .chain(self.disjunctions.iter().filter_map(|f| f.expected_implication.as_ref()))
            .chain(&self.implications)
            .chain(self.independence.iter().map(|r| &r.function))
            .chain(std::iter::once(&self.expected_swapped_context_disjunction))
            .find(|b| b.name() == name)
    }

    /// Looks up any unary function by name, including the expected induced
    /// negations attached to fixtures.
    pub fn unary(&self, name: &str) -> Option<&UnaryFunction> {
        self.negations
            .iter()
            .chain(
                self.conjunctions
                    .iter()
                    .chain(&self.disjunctions)
                    .filter_map(|f| match &f.expected_negation {
                        ExpectedNegation::Negation(n) => Some(n),
                        ExpectedNegation::NotANegation => None,
                    }),
            )
            .chain([&self.expected_rem42_pseudo_inverse, &self.expected_rem42_aleph])
            .find(|n| n.name() == name)
    }

    pub fn conjunction_fixture(&self, name: &str) -> Option<&Fixture> {
        self.conjunctions.iter().find(|f| f.connective.name() == name)
    }

    pub fn disjunction_fixture(&self, name: &str) -> Option<&Fixture> {
        self.disjunctions.iter().find(|f| f.connective.name() == name)
    }

    pub fn implication(&self, name: &str) -> Option<&BinaryConnective> {
        self.implications.iter().find(|i| i.name() == name)
    }

    /// Renders every expression-backed entry as a DSL definition file.
    pub fn to_definition_file(&self) -> String {
        let mut out = String::from("# fuzcon catalog export: one definition per line\n");
        let mut write_binary = |b: &BinaryConnective, section: &str| {
            if let Some(e) = b.expr() {
                let _ = writeln!(out, "# {section}\n{} := {}", b.name(), e.to_canonical_string());
            }
        };
        for f in &self.conjunctions {
            write_binary(&f.connective, &f.provenance);
        }
        for f in &self.disjunctions {
            write_binary(&f.connective, &f.provenance);
        }
        for i in &self.implications {
            write_binary(i, "implications");
        }
        for row in &self.independence {
            // the first row reuses the step implication under its own name
            if row.function.name() != "I_RS" {
                write_binary(&row.function, &row.provenance);
            }
        }
        write_binary(&self.expected_swapped_context_disjunction, "expected rebuilds");
        for n in &self.negations {
            if let Some(e) = n.expr() {
                let _ = writeln!(out, "{} := {}", n.name(), e.to_canonical_string());
            }
        }
        for n in [&self.expected_rem42_pseudo_inverse, &self.expected_rem42_aleph] {
            if let Some(e) = n.expr() {
                let _ = writeln!(out, "{} := {}", n.name(), e.to_canonical_string());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_definition_file;

    #[test]
    fn catalog_loads_and_validates() {
        let cat = load_catalog().unwrap();
        assert_eq!(cat.conjunctions.len(), 13);
        assert_eq!(cat.disjunctions.len(), 8);
        assert_eq!(cat.independence.len(), 6);
    }

    #[test]
    fn expected_negations_match_the_table() {
        let cat = load_catalog().unwrap();
        let t_l = cat.conjunction_fixture("T_L").unwrap();
        match &t_l.expected_negation {
            ExpectedNegation::Negation(n) => assert_eq!(n.name(), "N_S"),
            _ => panic!("T_L must induce a negation"),
        }
        assert!(matches!(
            cat.conjunction_fixture("C_0").unwrap().expected_negation,
            ExpectedNegation::NotANegation
        ));
        assert!(matches!(
            cat.conjunction_fixture("C_3").unwrap().expected_negation,
            ExpectedNegation::NotANegation
        ));
    }

    #[test]
    fn quadratic_row_expectations() {
        let cat = load_catalog().unwrap();
        let d4 = cat.disjunction_fixture("D_4").unwrap();
        let ExpectedNegation::Negation(n) = &d4.expected_negation else {
            panic!()
        };
        assert!((n.eval(0.6) - 0.8).abs() < 1e-12);
        let i = d4.expected_implication.as_ref().unwrap();
        assert_eq!(i.eval(0.6, 0.8), 1.0);
        assert!((i.eval(0.8, 0.3) - (1.0 - 0.64 + 0.09)).abs() < 1e-12);
    }

    #[test]
    fn independence_matrix_pattern() {
        let cat = load_catalog().unwrap();
        let pattern: Vec<[bool; 3]> = cat
            .independence
            .iter()
            .map(|r| [r.is_implication, r.section_condition, r.negation_continuous])
            .collect();
        assert_eq!(
            pattern,
            vec![
                [true, false, false],
                [false, true, false],
                [false, false, true],
                [true, true, false],
                [true, false, true],
                [false, true, true],
            ]
        );
    }

    #[test]
    fn export_reparses_and_agrees() {
        let cat = load_catalog().unwrap();
        let text = cat.to_definition_file();
        let defs = parse_definition_file(&text).unwrap();
        assert!(defs.len() > 25);
        let (_, t_l) = defs.iter().find(|(n, _)| n == "T_L").unwrap();
        let orig = cat.binary("T_L").unwrap();
        for i in 0..=20 {
            for j in 0..=20 {
                let (x, y) = (i as f64 / 20.0, j as f64 / 20.0);
                assert_eq!(t_l.eval2(x, y).unwrap(), orig.eval(x, y));
            }
        }
    }

    #[test]
    fn lookups_cover_all_namespaces() {
        let cat = load_catalog().unwrap();
        assert!(cat.binary("remark41_D").is_some());
        assert!(cat.binary("I_GD").is_some());
        assert!(cat.binary("F_4").is_some());
        assert!(cat.unary("N_S").is_some());
        assert!(cat.unary("remark42_N").is_some());
        assert!(cat.unary("two_slope_N").is_some());
        assert!(cat.binary("nonexistent").is_none());
    }
}
