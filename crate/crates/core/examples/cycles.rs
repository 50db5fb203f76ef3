//! Periodic orbits of `e^z - 2` and of the golden-mean Siegel parameter.

use raycensus::cycles::{find_cycles, CycleSearchOptions};
use raycensus::geometry::SearchBox;
use raycensus::{Complex64, MapModel};

fn main() {
    let theta = (5f64.sqrt() - 1.0) / 2.0;
    let z0 = Complex64::new(0.0, std::f64::consts::TAU * theta);
    let params = [("c = -2", Complex64::new(-2.0, 0.0)), ("Siegel", z0 - z0.exp())];
    let search_box = SearchBox::new(-3.0, 3.0, -7.0, 7.0).unwrap();
    for (name, c) in params {
        let map = MapModel::exponential(c).unwrap();
        let found = find_cycles(&map, 2, search_box, &CycleSearchOptions::default());
        println!("{name}: {} cycles in [-3,3]x[-7,7]", found.cycles.len());
        for cycle in &found.cycles {
            println!(
                "  period {} z0 = {:.10} |λ| = {:.6} {}",
                cycle.period,
                cycle.z0(),
                cycle.multiplier.norm(),
                cycle.class.name()
            );
        }
        for w in &found.warnings {
            println!("  warning: {w}");
        }
    }
}
