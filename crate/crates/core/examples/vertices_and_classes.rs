//! Streams the vertices of K_{s-stab}(n, k) and groups them into rotation classes.
//!
//!     cargo run --example vertices_and_classes -- 9 3 2

use stable_kneser::{enumerate_classes, enumerate_vertices, gap_sequence, Params};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (n, k, s) = match args[..] {
        [n, k, s] => (n, k, s),
        _ => (9, 3, 2),
    };
    let p = Params::new(n, k, s)?;

    println!("vertices of K_{s}-stab({n}, {k}):");
    for v in enumerate_vertices(&p) {
        println!("  {v:<16} gaps {}", gap_sequence(&v, &p));
    }

    let catalog = enumerate_classes(&p);
    println!("\n{} classes, {} vertices", catalog.len(), catalog.total_vertices);
    for c in catalog.iter() {
        println!("  {:<20} d={} order={:<4} base {}", c.necklace.to_string(), c.period_d, c.order, c.base_vertex);
    }
    Ok(())
}
