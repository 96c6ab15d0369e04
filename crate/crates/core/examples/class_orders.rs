//! Orbit sizes n/d for K_{3-stab}(36, 6): one class for each period d dividing
//! gcd(k, n-k) = 6.

use std::collections::BTreeMap;

use stable_kneser::{class_order, enumerate_classes, GapSequence, Params};

fn main() -> Result<(), stable_kneser::Error> {
    let p = Params::new(36, 6, 3)?;
    let catalog = enumerate_classes(&p);

    for word in [vec![2, 2, 2, 2, 11, 11], vec![2, 2, 11, 2, 2, 11], vec![2, 8, 2, 8, 2, 8], vec![5; 6]] {
        let g = GapSequence::validated(word, &p)?;
        println!("{:<18} repeats {} times, order {}", g.to_string(), g.repetitions(), class_order(&g, &p));
    }

    let mut by_order: BTreeMap<u32, usize> = BTreeMap::new();
    for c in catalog.iter() {
        *by_order.entry(c.order).or_default() += 1;
    }
    println!("\n{} classes covering {} vertices", catalog.len(), catalog.total_vertices);
    for (order, count) in by_order {
        println!("  order {order:>2}: {count} classes");
    }
    Ok(())
}
