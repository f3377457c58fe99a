use std::collections::BTreeSet;

use super::oracles::oracle_tables;
use super::report::{CheckId, CheckReport, Outcome};
use super::{Analysis, EntryState, Survey, Tag};
use crate::chartable::{tables_equivalent, CharacterTable};
use crate::cyclotomic::Cyclotomic;
use crate::families::GroupSpec;
use crate::permgroup::{Elements, DEFAULT_BUDGET};

fn fmt_set(set: &BTreeSet<u64>) -> String {
    let v: Vec<String> = set.iter().map(u64::to_string).collect();
    format!("{{{}}}", v.join(", "))
}

/// Calls `f` on every computed entry, recording skipped and failed ones.
fn each_entry(
    survey: &Survey,
    report: &mut CheckReport,
    mut f: impl FnMut(&Analysis, &mut CheckReport),
) {
    for (entry, state) in &survey.states {
        match state {
            EntryState::Computed(a) => f(a, report),
            EntryState::Skipped(why) => report.push(&entry.text, Outcome::Skipped(why.clone())),
            EntryState::Failed(e) => report.push(&entry.text, Outcome::Fail(e.to_string())),
        }
    }
}

fn reference_table(spec: GroupSpec) -> CharacterTable {
    let group = spec.build().expect("reference group builds");
    CharacterTable::compute(&group, DEFAULT_BUDGET).expect("reference table")
}

/// Tables of `PSL₂(5)` and `PGL₂(5)`.
pub fn exceptional_tables() -> [CharacterTable; 2] {
    [
        reference_table(GroupSpec::Psl2(5)),
        reference_table(GroupSpec::Pgl2(5)),
    ]
}

/// Quotient value sets, a column of distinct values for cyclic groups, and
/// zero in every non-abelian table.
pub fn check_lemma2(survey: &Survey) -> CheckReport {
    let mut report = CheckReport::new(CheckId::Lemma2);
    each_entry(survey, &mut report, |a, report| {
        let total = a.cv_len();
        let normals = a.table.kernels_and_normals();
        let mut worst = None;
        for n in &normals {
            match a.table.cv_of_quotient(&n.classes) {
                Ok(q) if q.len() <= total => {}
                Ok(q) => {
                    worst = Some(format!(
                        "|cv(G/N)| = {} > {total} for |N| = {}",
                        q.len(),
                        n.order
                    ));
                    break;
                }
                Err(e) => {
                    worst = Some(e.to_string());
                    break;
                }
            }
        }
        report.push(
            format!("{} (a)", a.name()),
            match worst {
                None => Outcome::Pass(format!(
                    "{} normal subgroups, all quotients within |cv| = {total}",
                    normals.len()
                )),
                Some(why) => Outcome::Fail(why),
            },
        );

        if let GroupSpec::Cyclic(n) = a.entry.spec {
            let n = n as usize;
            let k = a.table.num_classes();
            let distinct_column = (0..k).filter(|&c| n == 1 || c != 0).find(|&c| {
                let col: BTreeSet<&Cyclotomic> = a.table.values().iter().map(|r| &r[c]).collect();
                col.len() == n
            });
            report.push(
                format!("{} (b)", a.name()),
                Outcome::check(
                    distinct_column.is_some() && total == n,
                    format!(
                        "|cv| = {total}, column {:?} has {n} distinct values",
                        distinct_column
                    ),
                    format!("|cv| = {total}, distinct column {:?}", distinct_column),
                ),
            );
        }

        if !a.is_abelian() {
            let zero = Cyclotomic::zero(a.table.conductor());
            report.push(
                format!("{} (c)", a.name()),
                Outcome::check(
                    a.cv.contains(&zero),
                    "0 in cv",
                    "0 missing from cv of a non-abelian group",
                ),
            );
        }
    });
    report
}

/// Certificate that a group is `E ⋊ C₂` with `E` elementary abelian of
/// order `3ⁿ` inverted by every element outside it.
pub fn gd3_certificate(a: &Analysis) -> Result<String, String> {
    let order = a.order();
    let mut half = order / 2;
    let mut n = 0;
    while half.is_multiple_of(3) {
        half /= 3;
        n += 1;
    }
    if !order.is_multiple_of(2) || half != 1 || n == 0 {
        return Err(format!("order {order} is not 2·3^n"));
    }
    let derived_gens = a
        .derived
        .terms()
        .get(1)
        .ok_or("derived subgroup not recorded")?;
    let derived =
        Elements::closure(a.group.degree(), derived_gens, a.budget).map_err(|e| e.to_string())?;
    if derived.len() != order / 2 {
        return Err(format!(
            "derived subgroup has order {}, expected {}",
            derived.len(),
            order / 2
        ));
    }
    if derived.iter().any(|x| !x.is_identity() && x.order() != 3) {
        return Err("derived subgroup has an element of order other than 3".into());
    }
    for (i, x) in derived_gens.iter().enumerate() {
        if derived_gens[i + 1..].iter().any(|y| x.then(y) != y.then(x)) {
            return Err("derived subgroup is not abelian".into());
        }
    }
    let elements = a.table.conjugacy().elements();
    for g in elements.iter().filter(|g| !derived.contains(g)) {
        if derived_gens
            .iter()
            .any(|x| x.conjugate_by(g) != x.inverse())
        {
            return Err(format!("{g} does not invert the derived subgroup"));
        }
    }
    Ok(format!(
        "|G| = 2·3^{n}, G' elementary abelian of index 2, inverted outside"
    ))
}

/// Groups with at most four character values.
pub fn check_sakurai_small(survey: &Survey) -> CheckReport {
    let mut report = CheckReport::new(CheckId::Sakurai4);
    each_entry(survey, &mut report, |a, report| {
        let cv = a.cv_len();
        let is_gd3 = matches!(a.entry.spec, GroupSpec::GeneralizedDihedral { p: 3, .. });
        let outcome = if cv <= 3 {
            Outcome::check(
                a.is_abelian(),
                format!("|cv| = {cv}, abelian"),
                format!("|cv| = {cv} but non-abelian"),
            )
        } else if cv == 4 && !a.is_abelian() {
            match gd3_certificate(a) {
                Ok(msg) => Outcome::Pass(format!("|cv| = 4, {msg}")),
                Err(msg) => Outcome::Fail(format!("|cv| = 4, certificate failed: {msg}")),
            }
        } else if cv == 4 {
            Outcome::Pass("|cv| = 4, abelian".into())
        } else {
            Outcome::Pass(format!("|cv| = {cv}, nothing to certify"))
        };
        let outcome = match outcome {
            Outcome::Pass(_) if (is_gd3 || a.entry.has(Tag::Sakurai4)) && cv != 4 => {
                Outcome::Fail(format!("expected |cv| = 4, found {cv}"))
            }
            o => o,
        };
        report.push(a.name(), outcome);
    });
    report
}

/// Fewer than eight character values forces solvability.
pub fn check_theorem_a(survey: &Survey) -> CheckReport {
    let mut report = CheckReport::new(CheckId::ThmA);
    let mut covered = 0;
    each_entry(survey, &mut report, |a, report| {
        let cv = a.cv_len();
        let solvable = a.is_solvable();
        let series = format!("{:?}", a.derived.orders());
        let outcome = if cv < 8 {
            covered += 1;
            Outcome::check(
                solvable,
                format!("|cv| = {cv}, derived series {series}"),
                format!("|cv| = {cv} but derived series {series} does not reach 1"),
            )
        } else if a.entry.has(Tag::SolvableExpected) && !solvable {
            Outcome::Fail(format!("tagged solvable but derived series {series}"))
        } else {
            Outcome::Pass(format!("|cv| = {cv}, vacuous"))
        };
        report.push(a.name(), outcome);
    });
    report.push(
        "coverage",
        Outcome::check(
            covered >= 10,
            format!("{covered} entries with |cv| < 8"),
            format!("only {covered} entries with |cv| < 8, need at least 10"),
        ),
    );
    report
}

fn matches_exceptional(a: &Analysis, refs: &[CharacterTable; 2]) -> Option<&'static str> {
    let shape = a.table.shape();
    if tables_equivalent(&shape, &refs[0].shape()) {
        Some("PSL(2,5)")
    } else if tables_equivalent(&shape, &refs[1].shape()) {
        Some("PGL(2,5)")
    } else {
        None
    }
}

fn rational_values(cv: &BTreeSet<Cyclotomic>) -> BTreeSet<i64> {
    cv.iter().filter_map(Cyclotomic::to_integer).collect()
}

/// Non-solvable groups with exactly eight character values.
pub fn check_theorem_b(survey: &Survey) -> CheckReport {
    let mut report = CheckReport::new(CheckId::ThmB);
    let refs = exceptional_tables();
    for (name, t) in ["PSL(2,5)", "PGL(2,5)"].iter().zip(&refs) {
        let n = t.cv_set().len();
        report.push(
            format!("{name} (backward)"),
            Outcome::check(
                n == 8,
                format!("|cv| = {n}"),
                format!("|cv| = {n}, expected 8"),
            ),
        );
    }
    let pgl_values = rational_values(&refs[1].cv_set());
    let expected: BTreeSet<i64> = [-2, -1, 0, 1, 2, 4, 5, 6].into();
    report.push(
        "PGL(2,5) value set",
        Outcome::check(
            pgl_values == expected && refs[1].cv_set().len() == 8,
            format!("{pgl_values:?}"),
            format!("{pgl_values:?}"),
        ),
    );

    each_entry(survey, &mut report, |a, report| {
        if a.is_solvable() {
            return;
        }
        let cv = a.cv_len();
        let outcome = if cv == 8 {
            match matches_exceptional(a, &refs) {
                Some(name) if matches!(a.order(), 60 | 120) => {
                    Outcome::Pass(format!("|cv| = 8, table equivalent to {name}"))
                }
                _ => Outcome::Fail(format!(
                    "|cv| = 8, order {}, table matches neither PSL(2,5) nor PGL(2,5)",
                    a.order()
                )),
            }
        } else {
            Outcome::Pass(format!("non-solvable, |cv| = {cv}, vacuous"))
        };
        report.push(a.name(), outcome);

        if let GroupSpec::DirectProduct(left, right) = &a.entry.spec {
            if **left == GroupSpec::Psl2(5) && right.is_abelian_family() {
                report.push(format!("{} (product)", a.name()), product_outcome(a, right));
            }
        }
    });
    report
}

// PSL₂(5) × A with A abelian and nontrivial: the degree-5 character times a
// negative rational value k of A gives 5k < 0.
fn product_outcome(a: &Analysis, abelian: &GroupSpec) -> Outcome {
    let table = match abelian
        .build()
        .and_then(|g| CharacterTable::compute(&g, a.budget))
    {
        Ok(t) => t,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    let cv = a.cv_len();
    if cv < 9 {
        return Outcome::Fail(format!("|cv| = {cv} < 9"));
    }
    let ints = rational_values(&a.cv);
    match rational_values(&table.cv_set())
        .into_iter()
        .find(|&k| k < 0)
    {
        Some(k) => Outcome::check(
            ints.contains(&(5 * k)),
            format!("|cv| = {cv}, 5·({k}) = {} present", 5 * k),
            format!("5·({k}) missing from cv"),
        ),
        None => Outcome::Pass(format!(
            "|cv| = {cv}; {abelian} has no negative rational value, so no 5k witness"
        )),
    }
}

/// Almost simple groups have at least nine values, apart from the two
/// exceptional tables with eight.
pub fn check_almost_simple(survey: &Survey) -> CheckReport {
    let mut report = CheckReport::new(CheckId::AlmostSimple);
    let refs = exceptional_tables();
    each_entry(survey, &mut report, |a, report| {
        if !a.entry.has(Tag::AlmostSimple) {
            return;
        }
        let cv = a.cv_len();
        let outcome = if cv >= 9 {
            Outcome::Pass(format!("|cv| = {cv}, |cd| = {}", a.table.cd_set().len()))
        } else if cv == 8 {
            match matches_exceptional(a, &refs) {
                Some(name) => Outcome::Pass(format!("|cv| = 8, table of {name}")),
                None => Outcome::Fail("|cv| = 8 with an unexpected table".into()),
            }
        } else {
            Outcome::Fail(format!("|cv| = {cv} < 8"))
        };
        report.push(a.name(), outcome);
    });
    report
}

fn steinberg_outcome(a: &Analysis, q: u32) -> Outcome {
    let t = &a.table;
    let minus_one = Cyclotomic::integer(-1, t.conductor());
    let hit = (0..t.num_classes()).find_map(|r| {
        (t.degrees()[r] == q as u64)
            .then(|| t.values()[r].iter().position(|v| *v == minus_one))
            .flatten()
    });
    match hit {
        Some(c) => Outcome::Pass(format!(
            "degree-{q} row is -1 on class {}",
            t.class_names()[c]
        )),
        None => Outcome::Fail(format!("no degree-{q} row attains -1")),
    }
}

// Rows of degree 2(q±1) split over PSL₂(q) into two conjugate halves.
fn fusion_outcomes(a: &Analysis, q: u32, report: &mut CheckReport) {
    let sub = match GroupSpec::Psl2(q).build() {
        Ok(s) => s,
        Err(e) => return report.push(a.name(), Outcome::Fail(e.to_string())),
    };
    let t = &a.table;
    let qq = q as u64;
    for r in 0..t.num_classes() {
        let d = t.degrees()[r];
        let (half, witness) = if d == 2 * (qq + 1) {
            (qq + 1, 2)
        } else if d == 2 * (qq - 1) {
            (qq - 1, -2)
        } else {
            continue;
        };
        let subject = format!("{} row {} (degree {d})", a.name(), r + 1);
        let res = match t.restrict_and_decompose(&sub, r, a.budget) {
            Ok(res) => res,
            Err(e) => {
                report.push(subject, Outcome::Fail(e.to_string()));
                continue;
            }
        };
        let degs: Vec<(u64, u64)> = res
            .constituents
            .iter()
            .map(|&(row, m)| (res.sub_table.degrees()[row], m))
            .collect();
        let split = degs.len() == 2 && degs.iter().all(|&(deg, m)| deg == half && m == 1);
        let attains = res
            .restricted
            .iter()
            .any(|v| v.to_integer() == Some(witness));
        report.push(
            subject,
            Outcome::check(
                split && attains,
                format!("restricts to {half} + {half}, attains {witness}"),
                format!(
                    "constituents (degree, multiplicity) {degs:?}, attains {witness}: {attains}"
                ),
            ),
        );
    }
}

/// Steinberg value −1, splitting of doubled degrees over the socle, and
/// negative entries in every non-identity column.
pub fn check_proof_ingredients(survey: &Survey) -> CheckReport {
    let mut report = CheckReport::new(CheckId::ProofIngredients);
    each_entry(survey, &mut report, |a, report| {
        match &a.entry.spec {
            GroupSpec::Psl2(q) => {
                report.push(format!("{} steinberg", a.name()), steinberg_outcome(a, *q))
            }
            spec @ GroupSpec::Psl2Ext { q, .. }
                if spec.projective_outer().is_some_and(|(_, h)| h.order() == 2) => {
                    fusion_outcomes(a, *q, report);
                }
            _ => {}
        }
        let t = &a.table;
        let mut bad = Vec::new();
        for c in 1..t.num_classes() {
            match t.column_has_negative_real_part(c) {
                Some(true) => {}
                Some(false) => bad.push(format!("column {} has no negative real part", c)),
                None => bad.push(format!("column {} sign undecided", c)),
            }
            if !t.degree_weighted_column_sum(c).is_zero() {
                bad.push(format!("column {} has nonzero degree-weighted sum", c));
            }
        }
        report.push(
            format!("{} columns", a.name()),
            if bad.is_empty() {
                Outcome::Pass(format!("{} non-identity columns", t.num_classes() - 1))
            } else {
                Outcome::Fail(bad.join("; "))
            },
        );
    });
    report
}

/// Computed tables against hand-entered ones.
pub fn check_oracle_tables(budget: usize) -> CheckReport {
    let mut report = CheckReport::new(CheckId::OracleTables);
    for oracle in oracle_tables() {
        let computed = oracle
            .spec
            .parse::<GroupSpec>()
            .and_then(|s| s.build())
            .and_then(|g| CharacterTable::compute(&g, budget));
        let outcome = match computed {
            Ok(t) => Outcome::check(
                tables_equivalent(&t.shape(), &oracle.shape),
                format!("{} classes match", t.num_classes()),
                "computed table differs from the hand-entered one",
            ),
            Err(e) => Outcome::Fail(e.to_string()),
        };
        report.push(oracle.name, outcome);
    }
    report
}

/// Computed degree sets against the closed forms.
pub fn check_cd_predictions(survey: &Survey) -> CheckReport {
    let mut report = CheckReport::new(CheckId::CdPredictions);
    each_entry(survey, &mut report, |a, report| {
        let cd = a.table.cd_set();
        let outcome = match a.entry.spec.predicted_cd() {
            Ok(pred) => Outcome::check(
                pred == cd,
                fmt_set(&cd),
                format!("computed {}, predicted {}", fmt_set(&cd), fmt_set(&pred)),
            ),
            Err(_) => Outcome::Skipped(format!("no closed form; computed {}", fmt_set(&cd))),
        };
        report.push(a.name(), outcome);
        if let GroupSpec::Psl2(q) = a.entry.spec {
            if q % 2 == 1 && q > 5 {
                let q = q as u64;
                let eps: Vec<i64> = [1i64, -1]
                    .into_iter()
                    .filter(|&e| cd.contains(&(((q as i64 + e) / 2) as u64)))
                    .collect();
                report.note(format!(
                    "q = {q}: (q+e)/2 in cd for e in {eps:?}; q mod 4 = {}",
                    q % 4
                ));
            }
        }
    });
    report
}
