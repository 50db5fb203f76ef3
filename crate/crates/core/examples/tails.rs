//! Tails and pieces for the ray `0̄` of `e^z - 2` around the repelling fixed
//! point near 1.1462: witnesses converge, pieces shrink by about `1/λ`.

use raycensus::cycles::Cycle;
use raycensus::regions::build_ray_graph;
use raycensus::tails::{TailContext, DEFAULT_HORIZON};
use raycensus::{Complex64, InfiniteAddress, MapModel};

fn main() {
    let map = MapModel::exponential(Complex64::new(-2.0, 0.0)).unwrap();
    let cycle = Cycle::from_point(&map, Complex64::new(1.146, 0.0), 1, 1e-6).unwrap();
    let graph = build_ray_graph(&map, 1, 1, 40);
    let ctx = TailContext::new(&map, &cycle, &graph, DEFAULT_HORIZON).unwrap();
    println!("r = {:.4}, arcs removed: {:?}", ctx.r, ctx.removed.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    let s = InfiniteAddress::constant(0);
    let mut previous = None;
    for n in 1..=15 {
        let rec = ctx.tail_exists(&s, n);
        let piece = ctx.piece_diameter(&s, n, 400);
        let ratio = previous.map(|d: f64| piece.diameter / d);
        println!(
            "n = {n:>2}: exists {} witness {:.12}  diam P_n = {:.3e} ({} points) ratio {}",
            rec.exists,
            rec.witness.unwrap(),
            piece.diameter,
            piece.valid,
            ratio.map(|r| format!("{r:.4}")).unwrap_or_default()
        );
        previous = Some(piece.diameter);
    }
    let check = ctx.piece_mapping_check(&s, 6, 400).unwrap();
    println!("f(P_6) in P_5: {}/{} samples", check.conforming, check.valid);
}
