use charval::theorems::{verify, Catalog, CheckId, EntryState, Outcome, Survey, Tag};

fn small() -> Catalog {
    Catalog::parse(
        "S(3) solvable-expected\n\
         GD(3,2) sakurai4\n\
         A(5) almost-simple\n\
         PGL(2,5) almost-simple\n\
         PSL(2,5)*C(2)\n\
         A(7) skip-table\n\
         C(6)\n",
    )
    .unwrap()
}

#[test]
fn reports_are_deterministic() {
    let (_, a) = verify(&small(), &CheckId::ALL);
    let (_, b) = verify(&small(), &CheckId::ALL);
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.outcomes, y.outcomes);
        assert_eq!(x.notes, y.notes);
        assert_eq!(x.summary(), y.summary());
    }
}

#[test]
fn skip_tagged_entries_are_not_computed() {
    let survey = Survey::compute(&small());
    let (entry, state) = survey
        .states
        .iter()
        .find(|(e, _)| e.has(Tag::SkipTable))
        .unwrap();
    assert_eq!(entry.text, "A(7)");
    assert!(matches!(state, EntryState::Skipped(_)));
    let report = &survey.run(&[CheckId::AlmostSimple])[0];
    assert!(report
        .outcomes
        .iter()
        .any(|o| o.subject == "A(7)" && matches!(o.outcome, Outcome::Skipped(_))));
}

#[test]
fn exceptional_groups_and_products() {
    let survey = Survey::compute(&small());
    let reports = survey.run(&[CheckId::ThmB, CheckId::AlmostSimple]);
    assert!(reports.iter().all(|r| r.passed()));
    let thm_b = &reports[0];
    let find = |s: &str| {
        thm_b
            .outcomes
            .iter()
            .find(|o| o.subject == s)
            .unwrap()
            .outcome
            .clone()
    };
    assert!(matches!(find("A(5)"), Outcome::Pass(d) if d.contains("PSL(2,5)")));
    assert!(matches!(find("PGL(2,5)"), Outcome::Pass(d) if d.contains("PGL(2,5)")));
    assert!(matches!(find("PSL(2,5)*C(2) (product)"), Outcome::Pass(d) if d.contains("-5")));
    assert_eq!(survey.find("PSL(2,5)*C(2)").unwrap().cv_len(), 13);
}

#[test]
fn budget_errors_are_reported_per_entry() {
    let catalog = small().with_budget(50);
    let survey = Survey::compute(&catalog);
    assert!(survey.budget_exceeded());
    let failed: Vec<&str> = survey.errors().map(|(e, _)| e.text.as_str()).collect();
    assert_eq!(failed, vec!["A(5)", "PGL(2,5)", "PSL(2,5)*C(2)"]);
    let report = &survey.run(&[CheckId::ThmA])[0];
    assert!(!report.passed());
}

#[test]
fn check_id_lists() {
    assert_eq!(CheckId::parse_list("all").unwrap().len(), 8);
    assert_eq!(
        CheckId::parse_list("thmA, thmB,thmA").unwrap(),
        vec![CheckId::ThmA, CheckId::ThmB]
    );
    assert!(CheckId::parse_list("thmC").is_err());
    for id in CheckId::ALL {
        assert_eq!(id.to_string().parse::<CheckId>().unwrap(), id);
    }
}
