//! Development probe: compute the observed matrix at maxLen 6 and list every
//! disagreement with the recorded expectations.

use tsadlab::properties::matrix::{conditional_profiles, expected_advanced_matrix, expected_matrix};
use tsadlab::properties::{check_property, PropertyFamily, PropertyId, Verdict};

fn main() {
    let max_len: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    let mut mismatches = 0;
    for row in expected_matrix().iter().chain(expected_advanced_matrix().iter()) {
        for idx in 1..=9u8 {
            let prop = match row.family {
                PropertyFamily::Simple => PropertyId::simple(idx),
                PropertyFamily::Advanced => PropertyId::advanced(idx),
            };
            let cell = row.cell(prop);
            let report = check_property(&row.metric, prop, max_len);
            let observed_sat = report.verdict == Verdict::NoCounterexampleUpToMaxLen;
            let tag = match cell.asserted_satisfied() {
                None => if observed_sat { "cond:sat" } else { "cond:viol" }.to_string(),
                Some(exp) if exp == observed_sat => "ok".to_string(),
                Some(exp) => {
                    mismatches += 1;
                    format!("MISMATCH expected_sat={exp} observed_sat={observed_sat} wit={:?}",
                        report.witnesses.first().map(|w| (w.g.clone(), w.p.clone(), w.q.clone())))
                }
            };
            if tag != "ok" {
                println!("{:28} {:3} cases={:8} skip={:7} {}", row.metric.id.to_string(), prop.name(),
                    report.cases_checked, report.skipped, tag);
            }
        }
    }
    for prof in conditional_profiles() {
        for (prop, cell) in &prof.cells {
            let report = check_property(&prof.metric, *prop, max_len);
            let observed_sat = report.verdict == Verdict::NoCounterexampleUpToMaxLen;
            match cell.asserted_satisfied() {
                Some(exp) if exp != observed_sat => {
                    mismatches += 1;
                    println!("{:28} {:3} PROFILE MISMATCH expected_sat={exp} observed_sat={observed_sat} wit={:?}",
                        prof.name, prop.name(),
                        report.witnesses.first().map(|w| (w.g.clone(), w.p.clone(), w.q.clone())));
                }
                _ => {}
            }
        }
    }
    println!("total mismatches: {mismatches}");
}
