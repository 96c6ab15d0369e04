//! Friend classes with their adjacency witnesses, the friend-class graph in
//! DOT, and the friend path from the root class to every class.
//!
//!     cargo run --example friend_graph -- 12 4 2 > sck.txt

use stable_kneser::format::write_sck_dot;
use stable_kneser::{build_sck, sck_path_to_root, Params};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (n, k, s) = match args[..] {
        [n, k, s] => (n, k, s),
        _ => (9, 3, 2),
    };
    let p = Params::new(n, k, s)?;
    let g = build_sck(&p);

    for e in &g.edges {
        let w = &e.witness;
        println!(
            "{} -> {} (move {}): {} and {} are disjoint",
            w.from_class.necklace, w.to_class.necklace, w.move_index, w.witness_u, w.witness_v
        );
    }

    println!();
    for class in g.catalog.iter() {
        let path: Vec<String> = sck_path_to_root(class, &p).iter().map(|c| c.necklace.to_string()).collect();
        println!("{}", path.join(" -> "));
    }

    println!();
    write_sck_dot(&mut std::io::stdout().lock(), &g)?;
    Ok(())
}
