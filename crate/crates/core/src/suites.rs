//! Named verification suites producing deterministic reports.

use crate::chartheory::{
    self, adams, builtin_tables, decompose, hgroup_table, inner_product, schur_character,
    trichotomy_classify, CaseLabel, ClassFunction, GroupTable,
};
use crate::delannoy::{
    self, binomial_class_dimension_check, check_deletion_injectivity, check_rigidity,
    delete_black, length2_relations, Weight,
};
use crate::exactnum::Cyclotomic;
use crate::ofrob::{
    self, build_etale_a, check_axioms, check_gamma_properties, check_structure_algebra,
    check_traces, ordered_model, orbit_count_identity, psi2_isomorphism_check,
    tournament_total_order_check,
};
use crate::report::{CheckResult, Report, SuiteParams};
use crate::scalaralg::{
    self, check_phi_relations, recog_dimension_eliminations, solve_case_iib_constants,
    solve_kappa, solve_lemma_key3, solve_lemma_key4, transport_mu_action, TraceData,
};
use crate::symfunc::{
    complete, elementary, plethysm, schur_in_powersums, verify_fixed_identity,
    Partition, PowerSumPoly, SymFuncError,
};
use crate::exactnum::{rat, ratio};
use serde_json::json;

pub const SUITE_NAMES: [&str; 7] = [
    "all",
    "lambda_identities",
    "hgroup",
    "trichotomy_scan",
    "delannoy",
    "ofrob",
    "scalars",
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?}; known suites: all, lambda_identities, hgroup, trichotomy_scan, delannoy, ofrob, scalars")]
    UnknownSuite(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

fn validate_params(params: &SuiteParams) -> Result<(), SuiteError> {
    if params.max_weight_length < 2 || params.max_weight_length > 16 {
        return Err(SuiteError::InvalidParameter(
            "max weight length must be between 2 and 16".into(),
        ));
    }
    if params.max_ordered_set < 1 || params.max_ordered_set > 6 {
        return Err(SuiteError::InvalidParameter(
            "max ordered set size must be between 1 and 6".into(),
        ));
    }
    if params.max_tournament < 1 || params.max_tournament > 8 {
        return Err(SuiteError::InvalidParameter(
            "max tournament size must be between 1 and 8".into(),
        ));
    }
    if params.degree_bound < 4 || params.degree_bound > 10 {
        return Err(SuiteError::InvalidParameter(
            "degree bound must be between 4 and 10".into(),
        ));
    }
    Ok(())
}

/// Run a named suite. `extra_table` joins the trichotomy scan when given.
pub fn run_suite(
    name: &str,
    params: SuiteParams,
    extra_table: Option<&GroupTable>,
) -> Result<Report, SuiteError> {
    validate_params(&params)?;
    let mut report = Report::new(name, params.clone());
    match name {
        "lambda_identities" => lambda_identities(&mut report, &params),
        "hgroup" => hgroup_suite(&mut report, &params),
        "trichotomy_scan" => trichotomy_scan(&mut report, &params, extra_table),
        "delannoy" => delannoy_suite(&mut report, &params),
        "ofrob" => ofrob_suite(&mut report, &params),
        "scalars" => scalars_suite(&mut report),
        "all" => {
            lambda_identities(&mut report, &params);
            hgroup_suite(&mut report, &params);
            trichotomy_scan(&mut report, &params, extra_table);
            delannoy_suite(&mut report, &params);
            ofrob_suite(&mut report, &params);
            scalars_suite(&mut report);
        }
        other => return Err(SuiteError::UnknownSuite(other.to_string())),
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// lambda_identities
// ---------------------------------------------------------------------------

fn lambda_identities(report: &mut Report, params: &SuiteParams) {
    let d = params.degree_bound;

    let run = |id: &str,
               description: &str,
               claim: &str,
               body: &dyn Fn() -> Result<(bool, serde_json::Value), SymFuncError>|
     -> CheckResult {
        match body() {
            Ok((ok, details)) => CheckResult::new(id, description, claim, ok, details),
            Err(e) => CheckResult::error(id, description, claim, e.to_string()),
        }
    };

    let fixed2 = |lhs: &PowerSumPoly, rhs: &PowerSumPoly| {
        Ok((verify_fixed_identity(lhs, rhs, &[2]), json!({})))
    };

    report.push(run(
        "lambda.sym3-splitting",
        "Sym^3 = wedge^3 + 2 wedge^2 + X for a square-fixed class",
        "sym-cube-splitting",
        &|| {
            let lhs = complete(3, d)?;
            let rhs = elementary(3, d)?
                .add(&elementary(2, d)?.scale(&rat(2)))
                .add(&elementary(1, d)?);
            fixed2(&lhs, &rhs)
        },
    ));

    report.push(run(
        "lambda.deg4-wedge4-s22",
        "wedge^4 + S_(2,2) = S_(2,1,1) + wedge^2 for a square-fixed class",
        "deg4-wedge4-identity",
        &|| {
            let lhs = elementary(4, d)?.add(&schur_in_powersums(&Partition::new(vec![2, 2]), d)?);
            let rhs = schur_in_powersums(&Partition::new(vec![2, 1, 1]), d)?
                .add(&elementary(2, d)?);
            fixed2(&lhs, &rhs)
        },
    ));

    report.push(run(
        "lambda.deg4-s31",
        "S_(3,1) = S_(2,1,1) + wedge^3 + S_(2,1) + wedge^2 for a square-fixed class",
        "deg4-s31-identity",
        &|| {
            let lhs = schur_in_powersums(&Partition::new(vec![3, 1]), d)?;
            let rhs = schur_in_powersums(&Partition::new(vec![2, 1, 1]), d)?
                .add(&elementary(3, d)?)
                .add(&schur_in_powersums(&Partition::new(vec![2, 1]), d)?)
                .add(&elementary(2, d)?);
            fixed2(&lhs, &rhs)
        },
    ));

    report.push(run(
        "lambda.deg4-sym4",
        "Sym^4 = wedge^4 + wedge^3 + S_(2,1) + wedge^2 + X for a square-fixed class",
        "deg4-sym4-identity",
        &|| {
            let lhs = complete(4, d)?;
            let rhs = elementary(4, d)?
                .add(&elementary(3, d)?)
                .add(&schur_in_powersums(&Partition::new(vec![2, 1]), d)?)
                .add(&elementary(2, d)?)
                .add(&elementary(1, d)?);
            fixed2(&lhs, &rhs)
        },
    ));

    report.push(run(
        "lambda.psi3-s21",
        "S_(2,1) = 2 wedge^3 + 2 wedge^2 when fixed under both square and cube",
        "s21-cube-square-identity",
        &|| {
            let lhs = schur_in_powersums(&Partition::new(vec![2, 1]), d)?;
            let rhs = elementary(3, d)?
                .add(&elementary(2, d)?)
                .scale(&rat(2));
            Ok((verify_fixed_identity(&lhs, &rhs, &[2, 3]), json!({})))
        },
    ));

    report.push(run(
        "lambda.psi3-s21-needs-cube",
        "the previous identity fails with only the square substitution",
        "s21-cube-square-identity",
        &|| {
            let lhs = schur_in_powersums(&Partition::new(vec![2, 1]), d)?;
            let rhs = elementary(3, d)?
                .add(&elementary(2, d)?)
                .scale(&rat(2));
            let fails = !verify_fixed_identity(&lhs, &rhs, &[2]);
            Ok((fails, json!({})))
        },
    ));

    let e2 = |d| elementary(2, d);
    let h2 = |d| complete(2, d);
    let pleth_cases: [(&str, &str, &str); 4] = [
        ("lambda.plethysm-wedge2-wedge2", "wedge^2 of wedge^2 is S_(2,1,1)", "classical-plethysms"),
        ("lambda.plethysm-wedge2-sym2", "wedge^2 of Sym^2 is S_(3,1)", "classical-plethysms"),
        ("lambda.plethysm-sym2-wedge2", "Sym^2 of wedge^2 is wedge^4 + S_(2,2)", "classical-plethysms"),
        ("lambda.plethysm-sym2-sym2", "Sym^2 of Sym^2 is Sym^4 + S_(2,2)", "classical-plethysms"),
    ];
    for (idx, (id, description, claim)) in pleth_cases.iter().enumerate() {
        report.push(run(id, description, claim, &|| {
            let s22 = schur_in_powersums(&Partition::new(vec![2, 2]), d)?;
            let (lhs, rhs) = match idx {
                0 => (
                    plethysm(&e2(d)?, &e2(d)?, d)?,
                    schur_in_powersums(&Partition::new(vec![2, 1, 1]), d)?,
                ),
                1 => (
                    plethysm(&e2(d)?, &h2(d)?, d)?,
                    schur_in_powersums(&Partition::new(vec![3, 1]), d)?,
                ),
                2 => (
                    plethysm(&h2(d)?, &e2(d)?, d)?,
                    elementary(4, d)?.add(&s22),
                ),
                _ => (
                    plethysm(&h2(d)?, &h2(d)?, d)?,
                    complete(4, d)?.add(&s22),
                ),
            };
            Ok((lhs == rhs, json!({})))
        }));
    }
}

// ---------------------------------------------------------------------------
// hgroup
// ---------------------------------------------------------------------------

fn irr<'a>(t: &'a GroupTable, name: &str) -> &'a ClassFunction {
    &t.irreducibles
        .iter()
        .find(|(n, _)| n == name)
        .expect("builtin irreducible")
        .1
}

fn hgroup_suite(report: &mut Report, params: &SuiteParams) {
    let t = hgroup_table();
    let d = params.degree_bound;
    let chi1 = irr(&t, "chi1").clone();
    let chi4 = irr(&t, "chi4").clone();
    let chi5 = irr(&t, "chi5").clone();

    let invariants = chartheory::check_invariants(&t);
    report.push(CheckResult::new(
        "hgroup.table-invariants",
        "the order-21 table satisfies every structural invariant",
        "order-21-group-table",
        invariants.iter().all(|c| c.ok),
        json!({ "checks": invariants }),
    ));

    report.push(CheckResult::new(
        "hgroup.chi4-square-fixed",
        "the 3-dimensional character is fixed by the square power operation",
        "chi4-square-fixed",
        adams(&chi4, 2, &t) == chi4,
        json!({}),
    ));

    report.push(CheckResult::new(
        "hgroup.chi4-cube-moves",
        "the cube power operation moves the 3-dimensional character",
        "chi4-cube-moves",
        adams(&chi4, 3, &t) != chi4,
        json!({}),
    ));

    let push_schur = |report: &mut Report,
                      id: &str,
                      description: &str,
                      claim: &str,
                      lambda: Vec<u32>,
                      expected: &ClassFunction| {
        match schur_character(&Partition::new(lambda), &chi4, &t, d) {
            Ok(v) => report.push(CheckResult::new(id, description, claim, v == *expected, json!({}))),
            Err(e) => report.push(CheckResult::error(id, description, claim, e.to_string())),
        }
    };

    push_schur(
        report,
        "hgroup.wedge3-chi4-trivial",
        "wedge^3 of the 3-dimensional character is trivial",
        "chi4-wedge-powers",
        vec![1, 1, 1],
        &chi1,
    );
    push_schur(
        report,
        "hgroup.wedge2-chi4-dual",
        "wedge^2 of the 3-dimensional character is its conjugate",
        "chi4-wedge-powers",
        vec![1, 1],
        &chi5,
    );

    let prod = chi4.pointwise_mul(&chi4.conj());
    match decompose(&prod, &t) {
        Ok(mults) => report.push(CheckResult::new(
            "hgroup.chi4-times-dual",
            "the character times its conjugate contains every irreducible once",
            "chi4-times-dual-decomposition",
            mults == vec![1, 1, 1, 1, 1],
            json!({ "multiplicities": mults }),
        )),
        Err(e) => report.push(CheckResult::error(
            "hgroup.chi4-times-dual",
            "the character times its conjugate contains every irreducible once",
            "chi4-times-dual-decomposition",
            e.to_string(),
        )),
    }

    let s21_id = "hgroup.chi4-in-s21";
    let s21_desc = "the 3-dimensional character appears once in its S_(2,1)";
    match schur_character(&Partition::new(vec![2, 1]), &chi4, &t, d) {
        Ok(s21) => match inner_product(&s21, &chi4, &t) {
            Ok(ip) => report.push(CheckResult::new(
                s21_id,
                s21_desc,
                "chi4-s21-multiplicity",
                ip == Cyclotomic::one(),
                json!({ "multiplicity": ip.to_string() }),
            )),
            Err(e) => report.push(CheckResult::error(s21_id, s21_desc, "chi4-s21-multiplicity", e.to_string())),
        },
        Err(e) => report.push(CheckResult::error(s21_id, s21_desc, "chi4-s21-multiplicity", e.to_string())),
    }

    match trichotomy_classify(&chi4, &t, d) {
        Ok(rep) => report.push(CheckResult::new(
            "hgroup.chi4-case-iii",
            "the 3-dimensional character lands in the third case",
            "chi4-case-iii",
            rep.case_label == CaseLabel::CaseIII,
            serde_json::to_value(&rep).unwrap_or(json!({})),
        )),
        Err(e) => report.push(CheckResult::error(
            "hgroup.chi4-case-iii",
            "the 3-dimensional character lands in the third case",
            "chi4-case-iii",
            e.to_string(),
        )),
    }
}

// ---------------------------------------------------------------------------
// trichotomy_scan
// ---------------------------------------------------------------------------

fn trichotomy_scan(report: &mut Report, params: &SuiteParams, extra_table: Option<&GroupTable>) {
    let d = params.degree_bound;
    let mut labels: Vec<(String, String, String)> = vec![];
    let mut errors: Vec<String> = vec![];
    let mut self_dual_fixed_nontrivial: Vec<(String, String)> = vec![];

    let builtin = builtin_tables();
    let builtin_count = builtin.len();
    let mut tables = builtin;
    if let Some(t) = extra_table {
        tables.push(t.clone());
    }

    let mut builtin_labels: Vec<(String, String, String)> = vec![];
    for (index, table) in tables.iter().enumerate() {
        for (name, chi) in &table.irreducibles {
            match trichotomy_classify(chi, table, d) {
                Ok(rep) => {
                    if rep.case_label != CaseLabel::NotApplicable {
                        let entry = (
                            table.name.clone(),
                            name.clone(),
                            format!("{:?}", rep.case_label),
                        );
                        if index < builtin_count {
                            builtin_labels.push(entry.clone());
                        }
                        labels.push(entry);
                    }
                }
                Err(e) => errors.push(format!("{}/{}: {}", table.name, name, e)),
            }
            let self_dual = chi.conj() == *chi;
            let fixed = adams(chi, 2, table) == *chi;
            let trivial = chi.values.iter().all(|v| *v == Cyclotomic::one());
            if self_dual && fixed && !trivial {
                self_dual_fixed_nontrivial.push((table.name.clone(), name.clone()));
            }
        }
    }

    let expected = [
        ("H21".to_string(), "chi4".to_string(), "CaseIII".to_string()),
        ("H21".to_string(), "chi5".to_string(), "CaseIII".to_string()),
    ];
    report.push(CheckResult::new(
        "trichotomy.scan-builtin",
        "the only applicable cases among builtin tables are the two 3-dimensional characters of the order-21 group, both in the third case",
        "trichotomy-scan",
        errors.is_empty() && builtin_labels == expected,
        json!({ "labels": labels, "errors": errors }),
    ));

    report.push(CheckResult::new(
        "trichotomy.no-self-dual-fixed",
        "no builtin table has a nontrivial self-conjugate square-fixed irreducible",
        "no-self-dual-fixed-simple",
        self_dual_fixed_nontrivial.is_empty(),
        json!({ "violations": self_dual_fixed_nontrivial }),
    ));
}

// ---------------------------------------------------------------------------
// delannoy
// ---------------------------------------------------------------------------

fn delannoy_suite(report: &mut Report, params: &SuiteParams) {
    let bbwb: Weight = "BBWB".parse().unwrap();
    let expected: delannoy::WeightMultiset = [("BWB", 2u64), ("BBW", 1)]
        .into_iter()
        .map(|(s, m)| (s.parse().unwrap(), m))
        .collect();
    report.push(CheckResult::new(
        "delannoy.deletion-example",
        "deleting one B from BBWB gives {BWB: 2, BBW: 1}",
        "deletion-multiset-example",
        delete_black(&bbwb) == expected,
        json!({}),
    ));

    let collisions2 = check_deletion_injectivity(2);
    let bw: Weight = "BW".parse().unwrap();
    let wb: Weight = "WB".parse().unwrap();
    report.push(CheckResult::new(
        "delannoy.collision-at-length-2",
        "the only deletion collision at length 2 is the pair (BW, WB)",
        "deletion-injectivity-sharp",
        collisions2 == vec![(bw, wb)],
        json!({ "collisions": collisions2 }),
    ));

    let mut failures = vec![];
    for ell in 3..=params.max_weight_length {
        let c = check_deletion_injectivity(ell);
        if !c.is_empty() {
            failures.push((ell, c));
        }
    }
    report.push(CheckResult::new(
        "delannoy.injectivity",
        "deletion multisets determine the word for every length from 3 up",
        "deletion-injectivity",
        failures.is_empty(),
        json!({ "max_length": params.max_weight_length, "failures": failures }),
    ));

    report.push(CheckResult::new(
        "delannoy.rigidity",
        "the identity is the only deletion-compatible permutation fixing short words",
        "deletion-rigidity",
        check_rigidity(params.rigidity_length()),
        json!({ "max_length": params.rigidity_length() }),
    ));

    report.push(CheckResult::new(
        "delannoy.binomial-dimensions",
        "all-B words have dimension equal to the binomial C(-1, n)",
        "binomial-dimension-rule",
        binomial_class_dimension_check(8),
        json!({ "max_length": 8 }),
    ));

    let relations = length2_relations();
    let balanced = relations.iter().all(|r| r.dimensions_balance());
    report.push(CheckResult::new(
        "delannoy.relation-dimensions",
        "both short product relations and the base-object decomposition balance dimensions",
        "short-relations",
        balanced,
        json!({ "relations": relations }),
    ));
}

// ---------------------------------------------------------------------------
// ofrob
// ---------------------------------------------------------------------------

fn ofrob_suite(report: &mut Report, params: &SuiteParams) {
    let n_max = params.max_ordered_set;

    let mut axiom_failures = vec![];
    let mut gamma_failures = vec![];
    let mut trace_failures = vec![];
    let mut split_failures = vec![];
    for n in 1..=n_max {
        let model = ordered_model(n);
        if !check_axioms(&model).all() {
            axiom_failures.push(n);
        }
        if !check_gamma_properties(&model).all() {
            gamma_failures.push(n);
        }
        let traces = check_traces(&model);
        let triangle = rat((n * (n + 1) / 2) as i64);
        if !(traces.trace_gamma_equals_beta_alpha
            && traces.trace_gamma_tau_equals_dim
            && traces.trace_gamma == triangle)
        {
            trace_failures.push(n);
        }
        if !psi2_isomorphism_check(&model) {
            split_failures.push(n);
        }
    }

    report.push(CheckResult::new(
        "ofrob.ordered-model-axioms",
        "all four structure axioms hold on every ordered model",
        "ordered-model-axioms",
        axiom_failures.is_empty(),
        json!({ "max_n": n_max, "failures": axiom_failures }),
    ));
    report.push(CheckResult::new(
        "ofrob.gamma-idempotents",
        "gamma and gamma' are commuting idempotents with product delta mu",
        "gamma-idempotents",
        gamma_failures.is_empty(),
        json!({ "max_n": n_max, "failures": gamma_failures }),
    ));
    report.push(CheckResult::new(
        "ofrob.trace-identities",
        "tr(gamma) = beta alpha = n(n+1)/2 and tr(gamma tau) = n",
        "trace-identities",
        trace_failures.is_empty(),
        json!({ "max_n": n_max, "failures": trace_failures }),
    ));
    report.push(CheckResult::new(
        "ofrob.sym2-splitting",
        "the symmetric square splits as the exterior square plus the object",
        "sym2-splitting",
        split_failures.is_empty(),
        json!({ "max_n": n_max, "failures": split_failures }),
    ));

    let mut etale_failures = vec![];
    for n in 1..=params.max_etale() {
        let checks = check_structure_algebra(&build_etale_a(&ordered_model(n)));
        if !checks.all() {
            etale_failures.push((n, checks));
        }
    }
    report.push(CheckResult::new(
        "ofrob.etale-algebra",
        "the associated (2n+1)-dimensional algebra is commutative, associative, and has a perfect trace pairing",
        "etale-algebra",
        etale_failures.is_empty(),
        json!({ "max_n": params.max_etale(), "failures": etale_failures }),
    ));

    let broken = ofrob::broken_model(3);
    let broken_axioms = check_axioms(&broken);
    let broken_algebra = check_structure_algebra(&build_etale_a(&broken));
    report.push(CheckResult::new(
        "ofrob.broken-model-fails",
        "the non-symmetric projection model fails symmetry and its algebra fails associativity",
        "broken-model-counterexample",
        !broken_axioms.symmetry && !broken_algebra.associative,
        json!({ "axioms": broken_axioms, "algebra": broken_algebra }),
    ));

    let expected = [1u64, 2, 2, 0, 0, 0];
    let counts: Vec<u64> = (1..=params.max_tournament)
        .map(tournament_total_order_check)
        .collect();
    let counts_ok = counts
        .iter()
        .enumerate()
        .all(|(i, &c)| expected.get(i).map(|&e| e == c).unwrap_or(c == 0));
    report.push(CheckResult::new(
        "ofrob.tournament-counts",
        "cyclically transitive tournament counts are 1, 2, 2 and then 0",
        "tournament-counts",
        counts_ok,
        json!({ "counts": counts }),
    ));

    let orbits = orbit_count_identity();
    report.push(CheckResult::new(
        "ofrob.orbit-identities",
        "invariant dimensions 1, 3, 13 match the orbit-count sums",
        "orbit-identities",
        orbits.iter().all(|o| o.ok),
        json!({ "identities": orbits }),
    ));
}

// ---------------------------------------------------------------------------
// scalars
// ---------------------------------------------------------------------------

fn scalars_suite(report: &mut Report) {
    let phi = check_phi_relations();
    report.push(CheckResult::new(
        "scalars.phi-relations",
        "the 2x2 matrix images satisfy every stated relation",
        "phi-matrix-relations",
        phi.all(),
        serde_json::to_value(phi).unwrap_or(json!({})),
    ));

    match solve_lemma_key3() {
        Ok((r, d)) => report.push(CheckResult::new(
            "scalars.key3-solve",
            "the multiplicity and dimension solve gives uniquely (1, -1)",
            "r-d-solve",
            r == 1 && d == rat(-1),
            json!({ "r": r, "d": d.to_string() }),
        )),
        Err(e) => report.push(CheckResult::error(
            "scalars.key3-solve",
            "the multiplicity and dimension solve gives uniquely (1, -1)",
            "r-d-solve",
            e.to_string(),
        )),
    }

    match solve_lemma_key4(&TraceData::reference_values()) {
        Ok((c, cp)) => report.push(CheckResult::new(
            "scalars.key4-solve",
            "the trace quotients give c = c' = 1/2",
            "c-constants-solve",
            c == ratio(1, 2) && cp == ratio(1, 2),
            json!({ "c": c.to_string(), "c_prime": cp.to_string() }),
        )),
        Err(e) => report.push(CheckResult::error(
            "scalars.key4-solve",
            "the trace quotients give c = c' = 1/2",
            "c-constants-solve",
            e.to_string(),
        )),
    }

    let iib = solve_case_iib_constants();
    report.push(CheckResult::new(
        "scalars.case-iib-constants",
        "the constant system has the unique solution (1, 2)",
        "c1-c2-solve",
        iib.unique && iib.c1 == rat(1) && iib.c2 == rat(2),
        serde_json::to_value(&iib).unwrap_or(json!({})),
    ));

    let kappa = solve_kappa();
    report.push(CheckResult::new(
        "scalars.kappa-constraint",
        "the coefficient constraint is equivalent to kappa^2 = -3, satisfied by both roots",
        "kappa-squared",
        kappa.all(),
        serde_json::to_value(&kappa).unwrap_or(json!({})),
    ));

    match transport_mu_action() {
        Ok(rows) => {
            let k = scalaralg::QuadraticScalar::kappa();
            let kinv = k.inverse().expect("kappa invertible");
            let q = |n: i64, den: i64| scalaralg::QuadraticScalar::from_rational(ratio(n, den));
            let quarter = q(1, 4);
            let half = q(1, 2);
            let one = scalaralg::QuadraticScalar::one();
            let two = scalaralg::QuadraticScalar::from_int(2);
            let expected: [scalaralg::MuBasisVector; 3] = [
                [
                    &quarter * &(&(&two - &k) - &kinv),
                    &quarter * &(&k - &kinv),
                    &half * &(&one + &kinv),
                ],
                [
                    &quarter * &(&kinv - &k),
                    &quarter * &(&(&two + &k) + &kinv),
                    &half * &(&one - &kinv),
                ],
                [
                    scalaralg::QuadraticScalar::zero(),
                    scalaralg::QuadraticScalar::zero(),
                    one.clone(),
                ],
            ];
            let rows_text: Vec<Vec<String>> = rows
                .iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect())
                .collect();
            report.push(CheckResult::new(
                "scalars.transport-rows",
                "the transported action reproduces the three displayed coefficient rows",
                "mu-transport-rows",
                rows == expected,
                json!({ "rows": rows_text }),
            ));
        }
        Err(e) => report.push(CheckResult::error(
            "scalars.transport-rows",
            "the transported action reproduces the three displayed coefficient rows",
            "mu-transport-rows",
            e.to_string(),
        )),
    }

    let elim = recog_dimension_eliminations();
    report.push(CheckResult::new(
        "scalars.dimension-eliminations",
        "each excluded symmetric-square shape leads to a vanishing binomial dimension",
        "dimension-eliminations",
        elim.iter().all(|c| c.ok),
        serde_json::to_value(&elim).unwrap_or(json!({})),
    ));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::CheckStatus;
    use std::collections::BTreeSet;

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(matches!(
            run_suite("nope", SuiteParams::default(), None),
            Err(SuiteError::UnknownSuite(_))
        ));
    }

    #[test]
    fn invalid_params_are_rejected() {
        let params = SuiteParams {
            max_ordered_set: 9,
            ..SuiteParams::default()
        };
        assert!(matches!(
            run_suite("ofrob", SuiteParams { max_weight_length: 1, ..SuiteParams::default() }, None),
            Err(SuiteError::InvalidParameter(_))
        ));
        assert!(matches!(
            run_suite("ofrob", params, None),
            Err(SuiteError::InvalidParameter(_))
        ));
    }

    #[test]
    fn every_named_suite_passes_with_fast_params() {
        let params = SuiteParams {
            max_weight_length: 8,
            max_ordered_set: 4,
            max_tournament: 5,
            ..SuiteParams::default()
        };
        for name in SUITE_NAMES {
            if name == "all" {
                continue;
            }
            let report = run_suite(name, params.clone(), None).unwrap();
            assert!(report.all_passed(), "{name}: {}", report.to_text());
            assert!(!report.checks.is_empty());
        }
    }

    #[test]
    fn check_ids_are_unique_in_all_suite() {
        let params = SuiteParams {
            max_weight_length: 6,
            max_ordered_set: 3,
            max_tournament: 4,
            ..SuiteParams::default()
        };
        let report = run_suite("all", params, None).unwrap();
        let ids: BTreeSet<&str> = report.checks.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids.len(), report.checks.len());
        assert!(report.all_passed(), "{}", report.to_text());
        assert!(report
            .checks
            .iter()
            .all(|c| c.status != CheckStatus::Skipped));
    }

    #[test]
    fn extra_table_joins_the_scan() {
        let params = SuiteParams {
            max_weight_length: 6,
            max_ordered_set: 3,
            max_tournament: 4,
            table_name: Some("C5".into()),
            ..SuiteParams::default()
        };
        let extra = crate::chartheory::cyclic_table(5);
        let report = run_suite("trichotomy_scan", params, Some(&extra)).unwrap();
        assert!(report.all_passed(), "{}", report.to_text());
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite("scalars", SuiteParams::default(), None).unwrap();
        let b = run_suite("scalars", SuiteParams::default(), None).unwrap();
        assert_eq!(a.to_json(), b.to_json());
    }
}
