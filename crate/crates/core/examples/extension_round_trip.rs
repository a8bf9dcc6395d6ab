//! Induced data of the example extensions, rebuilt from their data.

use superext::extensions::{build_extension, corpus};

fn main() {
    for (name, ext) in corpus::all() {
        let d = ext.data().expect("corpus sections are sections");
        let report = d.check();
        let rebuilt = build_extension(&d).expect("induced data are valid");
        let back = rebuilt.data().expect("canonical section");
        println!(
            "{name:<28} dim e = {}, α zero: {}, ρ entries: {}, conditions: {}, round trip: {}",
            ext.e().dim(),
            d.alpha().is_zero(),
            d.rho().entries().count(),
            if report.passed() { "ok" } else { "FAILED" },
            back == d
        );
    }
}
