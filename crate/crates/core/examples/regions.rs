//! The graph of landed fixed rays of `e^z - 2` and the regions it cuts out,
//! with the separation audit of the fixed points.

use raycensus::cycles::{find_cycles, CycleSearchOptions};
use raycensus::geometry::SearchBox;
use raycensus::regions::{build_ray_graph, interior_fixed_point_audit, itinerary};
use raycensus::{Complex64, MapModel};

fn main() {
    let map = MapModel::exponential(Complex64::new(-2.0, 0.0)).unwrap();
    for p in [1, 2] {
        let graph = build_ray_graph(&map, p, 1, 40);
        println!("p = {p}: {} arcs, {} stars, {} regions", graph.arcs.len(), graph.stars.len(), graph.regions().len());
        for arc in &graph.arcs {
            println!("  {:>5} lands at {:.10} ({} vertices)", arc.address.to_string(), arc.landing, arc.points.len());
        }
        let cycles = find_cycles(&map, p, SearchBox::new(-3.0, 3.0, -7.0, 7.0).unwrap(), &CycleSearchOptions::default()).cycles;
        let audit = interior_fixed_point_audit(&graph, &cycles);
        println!("  separation audit passed: {}", audit.passed);
        for (id, pts) in &audit.interior {
            for e in pts {
                println!("    region {id}: interior {} point {:.8}", e.class, e.point);
            }
        }
    }
    let graph = build_ray_graph(&map, 1, 1, 40);
    println!("itinerary of c: {:?}", itinerary(&map, &graph, map.c(), 5));
}
