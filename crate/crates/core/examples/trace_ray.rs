//! Trace a few rays of `e^z - 2` and check `f(G_s) = G_{σs}` on them.

use raycensus::rays::{functional_equation_residual, trace_ray};
use raycensus::{Complex64, InfiniteAddress, MapModel};

fn main() {
    let map = MapModel::exponential(Complex64::new(-2.0, 0.0)).unwrap();
    let grid: Vec<f64> = (0..40).map(|i| 0.05 * 1.2f64.powi(i)).collect();
    for text in ["0", "1", "-1", "0,1", "2:0"] {
        let s: InfiniteAddress = text.parse().unwrap();
        let ray = trace_ray(&map, &s, 40, &grid).unwrap();
        let first = ray.samples.first().unwrap();
        let last = ray.samples.last().unwrap();
        let residual = functional_equation_residual(&map, &s, 40, &grid).unwrap();
        println!(
            "{text:>6}: G({:.3}) = {:.6}  G({:.1}) = {:.3}  converged {}  f(G_s) vs G_σs {:.1e}",
            first.t, first.z, last.t, last.z, ray.converged, residual
        );
    }
}
