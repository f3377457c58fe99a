//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::collections::BTreeSet;
use std::time::Instant;

use charval::chartable::CharacterTable;
use charval::cyclotomic::Cyclotomic;
use charval::families::GroupSpec;
use charval::permgroup::DEFAULT_BUDGET;
use charval::theorems::{
    check_almost_simple, check_lemma2, check_oracle_tables, check_proof_ingredients,
    check_sakurai_small, check_theorem_a, Catalog, CheckReport, Outcome, Survey,
};

type Verdict = Result<String, String>;

fn table(spec: &str) -> CharacterTable {
    let g = spec.parse::<GroupSpec>().unwrap().build().unwrap();
    CharacterTable::compute(&g, DEFAULT_BUDGET).unwrap()
}

fn cd_of(spec: &str, survey: &Survey) -> BTreeSet<u64> {
    match survey.find(spec) {
        Some(a) => a.table.cd_set(),
        None => table(spec).cd_set(),
    }
}

fn cv_len(spec: &str, survey: &Survey) -> usize {
    match survey.find(spec) {
        Some(a) => a.cv_len(),
        None => table(spec).cv_set().len(),
    }
}

fn set(v: &[u64]) -> BTreeSet<u64> {
    v.iter().copied().collect()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn report_verdict(report: &CheckReport) -> Result<(), String> {
    if report.passed() {
        return Ok(());
    }
    let fails: Vec<String> = report
        .failures()
        .map(|o| match &o.outcome {
            Outcome::Fail(d) => format!("{}: {d}", o.subject),
            _ => unreachable!(),
        })
        .collect();
    Err(fails.join("; "))
}

fn criterion_1(survey: &Survey) -> Verdict {
    let psl = cv_len("PSL(2,5)", survey);
    let pgl_table = table("PGL(2,5)");
    let pgl = pgl_table.cv_set();
    ensure(psl == 8, format!("|cv(PSL(2,5))| = {psl}"))?;
    ensure(pgl.len() == 8, format!("|cv(PGL(2,5))| = {}", pgl.len()))?;
    let ints: BTreeSet<i64> = pgl.iter().filter_map(Cyclotomic::to_integer).collect();
    let expected: BTreeSet<i64> = [-2, -1, 0, 1, 2, 4, 5, 6].into();
    ensure(
        ints == expected && ints.len() == pgl.len(),
        format!("cv(PGL(2,5)) = {ints:?}"),
    )?;
    Ok("|cv| = 8 for both; cv(PGL(2,5)) = {-2,-1,0,1,2,4,5,6}".into())
}

fn criterion_2(survey: &Survey) -> Verdict {
    let mut eps_notes = Vec::new();
    for q in [5u64, 7, 9, 11, 13] {
        let cd = cd_of(&format!("PSL(2,{q})"), survey);
        let eps: i64 = if q % 4 == 1 { 1 } else { -1 };
        let half = ((q as i64 + eps) / 2) as u64;
        let expected = if q == 5 {
            // PSL₂(5) ≅ PSL₂(4): the degree q+1 does not occur
            set(&[1, half, q - 1, q])
        } else {
            set(&[1, half, q - 1, q, q + 1])
        };
        ensure(
            cd == expected,
            format!("cd(PSL(2,{q})) = {cd:?}, expected {expected:?}"),
        )?;
        let other = ((q as i64 - eps) / 2) as u64;
        ensure(!cd.contains(&other), format!("q = {q}: both signs fit"))?;
        eps_notes.push(format!("{q}:{eps:+}"));
    }
    let fixed = [
        ("PGammaL(2,8)", set(&[1, 7, 8, 21, 27])),
        ("PSLExt(2,16;ff)", set(&[1, 16, 17, 30, 34])),
        ("S(6)", set(&[1, 5, 9, 10, 16])),
    ];
    for (spec, expected) in fixed {
        let cd = cd_of(spec, survey);
        ensure(cd == expected, format!("cd({spec}) = {cd:?}"))?;
    }
    for q in [5u64, 7, 9] {
        let cd = cd_of(&format!("PGL(2,{q})"), survey);
        ensure(
            cd == set(&[1, q - 1, q, q + 1]),
            format!("cd(PGL(2,{q})) = {cd:?}"),
        )?;
    }
    let m10 = cd_of("M10", survey);
    ensure(m10.len() == 4, format!("|cd(M10)| = {}", m10.len()))?;
    Ok(format!(
        "all degree sets exact; epsilon by q: {}; cd(M10) = {m10:?}",
        eps_notes.join(" ")
    ))
}

fn criterion_3(survey: &Survey) -> Verdict {
    report_verdict(&check_theorem_a(survey))?;
    let small: Vec<&str> = survey
        .computed()
        .filter(|a| a.cv_len() < 8)
        .map(|a| a.name())
        .collect();
    ensure(
        small.len() >= 10,
        format!("only {} entries with |cv| < 8", small.len()),
    )?;
    let a4 = cv_len("A(4)", survey);
    let s4 = cv_len("S(4)", survey);
    ensure(a4 == 6, format!("|cv(A4)| = {a4}"))?;
    ensure(s4 == 5, format!("|cv(S4)| = {s4}"))?;
    Ok(format!(
        "{} entries with |cv| < 8, all solvable (|cv(A4)| = 6, |cv(S4)| = 5)",
        small.len()
    ))
}

fn criterion_4(survey: &Survey) -> Verdict {
    report_verdict(&check_almost_simple(survey))?;
    let required = [
        "A(5)",
        "A(6)",
        "A(7)",
        "PSL(2,7)",
        "PSL(2,8)",
        "PSL(2,9)",
        "PSL(2,11)",
        "PSL(2,13)",
        "PGL(2,5)",
        "PGL(2,7)",
        "PGL(2,9)",
        "S(5)",
        "S(6)",
        "S(7)",
        "PGammaL(2,8)",
        "PGammaL(2,9)",
        "M10",
        "PSLExt(2,16;ff)",
    ];
    let mut min_other = usize::MAX;
    for spec in required {
        let n = cv_len(spec, survey);
        let exceptional = matches!(spec, "A(5)" | "S(5)" | "PSL(2,5)" | "PGL(2,5)");
        if exceptional {
            ensure(n == 8, format!("|cv({spec})| = {n}, expected 8"))?;
        } else {
            ensure(n >= 9, format!("|cv({spec})| = {n} < 9"))?;
            min_other = min_other.min(n);
        }
    }
    ensure(cv_len("PSL(2,5)", survey) == 8, "|cv(PSL(2,5))| ≠ 8")?;
    Ok(format!(
        "{} groups; exceptional ones have 8, the rest at least {min_other}",
        required.len() + 1
    ))
}

fn criterion_5(survey: &Survey) -> Verdict {
    let expected: BTreeSet<i64> = [1, -1, 2, 0].into();
    for n in 1..=3 {
        let spec = format!("GD(3,{n})");
        let cv = match survey.find(&spec) {
            Some(a) => a.cv.clone(),
            None => table(&spec).cv_set(),
        };
        let ints: BTreeSet<i64> = cv.iter().filter_map(Cyclotomic::to_integer).collect();
        ensure(
            cv.len() == 4 && ints == expected,
            format!("cv({spec}) = {ints:?} ({} values)", cv.len()),
        )?;
    }
    report_verdict(&check_sakurai_small(survey))?;
    let certified = survey
        .computed()
        .filter(|a| a.cv_len() == 4 && !a.is_abelian())
        .count();
    let d5 = cv_len("GD(5,1)", survey);
    ensure(d5 != 4, "|cv(GD(5,1))| = 4")?;
    ensure(d5 == 6, format!("|cv(GD(5,1))| = {d5}, oracle gives 6"))?;
    Ok(format!("GD(3,1..3) have cv {{1,-1,2,0}}; {certified} non-abelian entries certified; |cv(D5)| = {d5}"))
}

fn criterion_6(survey: &Survey) -> Verdict {
    for n in 1..=30u32 {
        let t = table(&format!("C({n})"));
        let k = t.cv_set().len();
        ensure(k == n as usize, format!("|cv(C({n}))| = {k}"))?;
    }
    report_verdict(&check_lemma2(survey))?;
    let mut quotients = 0;
    for a in survey.computed().filter(|a| a.order() <= 200) {
        for n in a.table.kernels_and_normals() {
            let q = a
                .table
                .cv_of_quotient(&n.classes)
                .map_err(|e| e.to_string())?;
            ensure(
                q.len() <= a.cv_len(),
                format!("{}: |cv(G/N)| = {} > {}", a.name(), q.len(), a.cv_len()),
            )?;
            quotients += 1;
        }
        if !a.is_abelian() {
            ensure(
                a.cv.contains(&Cyclotomic::zero(a.table.conductor())),
                format!("0 ∉ cv({})", a.name()),
            )?;
        }
    }
    Ok(format!(
        "|cv(Cn)| = n for n ≤ 30; {quotients} quotients of entries with |G| ≤ 200 within bound"
    ))
}

fn criterion_7(survey: &Survey) -> Verdict {
    let report = check_proof_ingredients(survey);
    report_verdict(&report)?;
    for q in [5, 7, 8, 9, 11, 13] {
        let subject = format!("PSL(2,{q}) steinberg");
        ensure(
            report
                .outcomes
                .iter()
                .any(|o| o.subject == subject && matches!(o.outcome, Outcome::Pass(_))),
            format!("no Steinberg outcome for q = {q}"),
        )?;
    }
    let fusion: Vec<&str> = report
        .outcomes
        .iter()
        .filter(|o| o.subject.starts_with("PSLExt(2,16;ff) row"))
        .map(|o| o.subject.as_str())
        .collect();
    let degrees: BTreeSet<&str> = fusion
        .iter()
        .filter_map(|s| s.rsplit("degree ").next())
        .map(|s| s.trim_end_matches(')'))
        .collect();
    ensure(
        degrees == BTreeSet::from(["30", "34"]),
        format!("fusion rows checked: {fusion:?}"),
    )?;
    let columns: usize = survey.computed().map(|a| a.table.num_classes() - 1).sum();
    Ok(format!(
        "Steinberg -1 for q in 5,7,8,9,11,13; {} doubled rows split with ±2; {columns} columns negative and orthogonal to degrees",
        fusion.len()
    ))
}

fn criterion_8() -> Verdict {
    let report = check_oracle_tables(DEFAULT_BUDGET);
    report_verdict(&report)?;
    ensure(report.outcomes.len() == 9, "expected nine oracle tables")?;
    let names: Vec<&str> = report.outcomes.iter().map(|o| o.subject.as_str()).collect();
    Ok(format!("{} match", names.join(", ")))
}

fn criterion_9(survey: &Survey) -> Verdict {
    let mut count = 0;
    for a in survey.computed() {
        let t = &a.table;
        let sum: u64 = t.degrees().iter().map(|d| d * d).sum();
        ensure(
            sum == a.order() as u64,
            format!("{}: Σd² = {sum}", a.name()),
        )?;
        t.verify().map_err(|e| format!("{}: {e}", a.name()))?;
        count += 1;
    }
    let errors: Vec<String> = survey
        .errors()
        .map(|(e, err)| format!("{}: {err}", e.text))
        .collect();
    ensure(errors.is_empty(), errors.join("; "))?;
    Ok(format!("{count} tables verified exactly"))
}

fn main() {
    let start = Instant::now();
    let catalog = Catalog::default();
    let survey = Survey::compute(&catalog);
    println!(
        "acceptance: {} catalog entries computed in {:.2?}",
        survey.computed().count(),
        survey.elapsed
    );

    let criteria: Vec<(&str, Box<dyn Fn() -> Verdict + '_>)> = vec![
        (
            "1 exceptional value sets",
            Box::new(|| criterion_1(&survey)),
        ),
        ("2 degree set formulas", Box::new(|| criterion_2(&survey))),
        (
            "3 fewer than eight values",
            Box::new(|| criterion_3(&survey)),
        ),
        ("4 almost simple sweep", Box::new(|| criterion_4(&survey))),
        (
            "5 four-value classification",
            Box::new(|| criterion_5(&survey)),
        ),
        ("6 value set lemma", Box::new(|| criterion_6(&survey))),
        ("7 proof ingredients", Box::new(|| criterion_7(&survey))),
        ("8 oracle tables", Box::new(criterion_8)),
        ("9 engine self-checks", Box::new(|| criterion_9(&survey))),
    ];

    let mut failed = 0;
    for (name, run) in &criteria {
        let t0 = Instant::now();
        let verdict = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".into()));
        match verdict {
            Ok(detail) => println!("criterion {name}: PASS [{:.2?}] {detail}", t0.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("criterion {name}: FAIL [{:.2?}] {detail}", t0.elapsed());
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.2?}",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
