//! Independent checking: the verifier on a constructed cycle and on
//! corrupted copies, and the backtracking oracle on small instances.

use stable_kneser::verify::{bruteforce_hamiltonian, verify_cycle, ORACLE_LIMIT};
use stable_kneser::{assemble_hamiltonian, Params, Vertex};

fn main() -> Result<(), stable_kneser::Error> {
    let p = Params::new(9, 3, 2)?;
    let cycle: Vec<Vec<u32>> = assemble_hamiltonian(&p)?.iter().map(Vertex::to_vec).collect();
    println!("constructed: {:?}", verify_cycle(&p, &cycle));

    let mut dropped = cycle.clone();
    dropped.pop();
    println!("dropped:     {:?}", verify_cycle(&p, &dropped));

    let mut duplicated = cycle.clone();
    duplicated[5] = cycle[0].clone();
    println!("duplicated:  {:?}", verify_cycle(&p, &duplicated));

    for (n, k, s) in [(6, 3, 2), (7, 3, 2), (8, 3, 2), (10, 3, 3)] {
        let q = Params::new(n, k, s)?;
        match bruteforce_hamiltonian(&q, ORACLE_LIMIT)? {
            Some(found) => println!("oracle {q}: cycle through {} vertices", found.len()),
            None => println!("oracle {q}: no Hamiltonian cycle"),
        }
    }
    Ok(())
}
