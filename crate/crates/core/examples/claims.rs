//! Replays the structural facts the construction relies on (rotation cycles,
//! class orders, rotation invariance, friend witnesses, degree bound,
//! connectivity of the friend-class graph) on a few instances.

use stable_kneser::verify::replay_claims;
use stable_kneser::Params;

fn main() -> Result<(), stable_kneser::Error> {
    for (n, k, s) in [(9, 3, 2), (12, 4, 2), (36, 6, 3)] {
        let p = Params::new(n, k, s)?;
        let report = replay_claims(&p);
        println!("{p}");
        for c in &report.claims {
            println!("  {:<20} {:?}: {}", c.name, c.status, c.detail);
        }
    }
    Ok(())
}
