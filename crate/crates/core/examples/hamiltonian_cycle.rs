//! Builds a Hamiltonian cycle by splicing rotation cycles along a spanning
//! tree of the friend-class graph, then checks it.
//!
//!     cargo run --release --example hamiltonian_cycle -- 40 5 2

use std::time::Instant;

use stable_kneser::verify::verify_vertices;
use stable_kneser::{Construction, Params};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (n, k, s) = match args[..] {
        [n, k, s] => (n, k, s),
        _ => (9, 3, 2),
    };
    let p = Params::new(n, k, s)?;

    let start = Instant::now();
    let c = Construction::build(&p)?;
    let built = start.elapsed();

    println!("{p}: {} classes, {} friend edges", c.sck.catalog.len(), c.sck.edges.len());
    for &idx in c.tree.order.iter().take(12) {
        let parent = c.tree.parent[idx].map(|(b, _)| c.sck.class(b).necklace.to_string());
        println!(
            "  level {} {} (order {}) under {}",
            c.tree.level[idx],
            c.sck.class(idx).necklace,
            c.indexing.orders[idx],
            parent.as_deref().unwrap_or("-")
        );
    }
    if c.tree.len() > 12 {
        println!("  ... {} more classes", c.tree.len() - 12);
    }

    let shown = c.cycle.len().min(20);
    println!("\nfirst {shown} of {} vertices:", c.cycle.len());
    for v in &c.cycle[..shown] {
        println!("  {v}");
    }

    let report = verify_vertices(&p, &c.cycle);
    println!("\nbuilt in {built:?}; verified: {}", report.ok);
    Ok(())
}
