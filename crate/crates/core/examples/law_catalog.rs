//! Verify every catalog rule by exhaustive enumeration and show the
//! refutation fixtures.

use asymlogic::laws::{catalog, negative_fixtures, verify_rule, RuleStatus};

fn main() {
    let reports: Vec<_> = catalog().iter().map(verify_rule).collect();
    let proven = reports.iter().filter(|r| r.is_proven()).count();
    println!("{proven} of {} directed rules proven", reports.len());
    for r in reports.iter().take(6) {
        println!("  {}", r.to_record());
    }

    for f in negative_fixtures() {
        if let RuleStatus::Refuted(a) = verify_rule(&f).status {
            println!("{:<32} {} != {}   counterexample {a}", f.name, f.lhs.to_expr(), f.rhs.to_expr());
        }
    }
}
