//! Landing points of the periodic rays with entries in [-1, 1] and period at
//! most 2, for `e^z - 2` and for `e^z` (where `0̄` carries the singular orbit).

use raycensus::rays::{landing_point, LandingOptions};
use raycensus::symbolic::enumerate_periodic;
use raycensus::{Complex64, MapModel};

fn main() {
    for c in [Complex64::new(-2.0, 0.0), Complex64::new(0.0, 0.0)] {
        let map = MapModel::exponential(c).unwrap();
        println!("c = {c}");
        let mut addresses = enumerate_periodic(1, 2);
        addresses.sort();
        addresses.dedup();
        for s in addresses {
            let r = landing_point(&map, &s, &LandingOptions::default()).unwrap();
            match r.point {
                Some(z) => println!(
                    "  {:>6}  {:?}  z = {:.10}  |λ| = {:.4}",
                    s.to_string(),
                    r.status,
                    z,
                    r.multiplier.unwrap().norm()
                ),
                None => println!("  {:>6}  {:?}  {}", s.to_string(), r.status, r.detail.unwrap_or_default()),
            }
        }
    }
}
