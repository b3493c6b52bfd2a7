//! GK dimensions of simple modules over algebras of dimension n - 1.

use qtorus::cli::default_corpus;
use qtorus::representation::{survey_conjecture, SurveyOptions};

fn main() -> qtorus::Result<()> {
    let report = survey_conjecture(&default_corpus(), &SurveyOptions::default())?;
    for e in &report.entries {
        println!("{} (n = {}, dim {})", e.name, e.n, e.dimension);
        for m in &e.modules {
            println!(
                "  {:<24} certified {:<5} gk {:?}  {}",
                m.id, m.certified, m.gk, m.note
            );
        }
    }
    for s in &report.skipped {
        println!("skipped {s}");
    }
    println!("gk multiset {:?}, pass {}", report.multiset, report.pass);
    Ok(())
}
