//! The census for three parameters: a hyperbolic map, the golden-mean Siegel
//! map and `e^z`, whose singular value escapes along `0̄`.

use raycensus::census::{audit, AuditConfig};
use raycensus::geometry::SearchBox;
use raycensus::report::to_canonical_json;
use raycensus::{Complex64, MapModel};

fn main() {
    let theta = (5f64.sqrt() - 1.0) / 2.0;
    let z0 = Complex64::new(0.0, std::f64::consts::TAU * theta);
    let config = AuditConfig::new(SearchBox::new(-3.0, 3.0, -7.0, 7.0).unwrap(), 2, 1);
    for (name, c) in [
        ("c = -2", Complex64::new(-2.0, 0.0)),
        ("Siegel", z0 - z0.exp()),
        ("c = 0", Complex64::new(0.0, 0.0)),
    ] {
        let map = MapModel::exponential(c).unwrap();
        let report = audit(&map, &config);
        println!(
            "{name}: {:?}  N_indifferent = {}  N_invisible_candidates = {}  q_effective = {}  singular: {:?}",
            report.verdict,
            report.counts.indifferent,
            report.counts.invisible_candidates,
            report.inequality.q_effective,
            report.singular.status
        );
    }
    let map = MapModel::exponential(Complex64::new(-2.0, 0.0)).unwrap();
    let json = to_canonical_json(&audit(&map, &config)).unwrap();
    println!("report for c = -2: {} bytes of canonical JSON", json.len());
}
