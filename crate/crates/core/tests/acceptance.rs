//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p stable-kneser --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use stable_kneser::enumerate::{count_vertices_formula, enumerate_classes, enumerate_vertices};
use stable_kneser::verify::{
    bruteforce_hamiltonian, replay_claims, verify_cycle, verify_vertices, ClaimStatus, ORACLE_LIMIT,
};
use stable_kneser::{assemble_hamiltonian, canonical_class, ClassInfo, Error, GapSequence, Params, Vertex};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn params(n: u32, k: u32, s: u32) -> Params {
    Params::new(n, k, s).expect("valid parameters")
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    if took < limit {
        Ok(took)
    } else {
        Err(format!("took {took:?}, limit {limit:?}"))
    }
}

/// Instances of the Hamiltonicity sweep that should have a cycle.
fn positive_sweep() -> Vec<Params> {
    let mut out = Vec::new();
    for k in 1..=4 {
        for n in 2 * k + 1..=2 * k + 8 {
            out.push(params(n, k, 2));
        }
    }
    for k in 1..=3 {
        for n in 3 * k..=3 * k + 6 {
            out.push(params(n, k, 3));
        }
    }
    for k in 1..=2 {
        for n in 4 * k..=4 * k + 6 {
            out.push(params(n, k, 4));
        }
    }
    out
}

fn class_order_table() -> Outcome {
    let start = Instant::now();
    let p = params(36, 6, 3);
    let catalog = enumerate_classes(&p);
    let rows: [(&[u32], u32); 4] = [
        (&[2, 2, 2, 2, 11, 11], 36),
        (&[2, 2, 11, 2, 2, 11], 18),
        (&[2, 8, 2, 8, 2, 8], 12),
        (&[6, 6, 6, 6, 6, 6], 6),
    ];
    let mut problems = Vec::new();
    for (word, order) in rows {
        let necklace = GapSequence::new(word.to_vec());
        match catalog.index_of(&necklace) {
            Some(i) if catalog.classes[i].order == order => {}
            Some(i) => problems.push(format!("{necklace} has order {}", catalog.classes[i].order)),
            None => {
                let total: u32 = word.iter().sum();
                let uniform = GapSequence::new(vec![(p.n - p.k) / p.k; p.k as usize]);
                let nearest = catalog
                    .index_of(&uniform)
                    .map_or("no class".to_string(), |i| format!("order {}", catalog.classes[i].order));
                problems.push(format!(
                    "{necklace} not a class (its gaps sum to {total}, a vertex has n-k = {} blanks; \
                     the uniform class {uniform} has {nearest})",
                    p.n - p.k
                ))
            }
        }
    }
    let took = within(Duration::from_secs(1), start)?;
    if problems.is_empty() {
        Ok(format!("{} classes, all four rows present ({took:?})", catalog.len()))
    } else {
        Err(problems.join("; "))
    }
}

fn grid_classes() -> Outcome {
    let start = Instant::now();
    let p = params(9, 3, 2);
    let class = |g: &[u32]| ClassInfo::from_gaps(&GapSequence::new(g.to_vec()), &p);
    let a = class(&[1, 2, 3]);
    let b = class(&[1, 3, 2]);
    let same = [class(&[2, 3, 1]), class(&[3, 1, 2])];
    // vertices drawn in the two grids: {1,3,6} + t and {1,3,7} + t
    let va = Vertex::from_elements(&[1, 3, 6], &p).map_err(|e| e.to_string())?;
    let vb = Vertex::from_elements(&[1, 3, 7], &p).map_err(|e| e.to_string())?;
    let grid_a: Vec<ClassInfo> = (0..9).map(|t| canonical_class(&va.rotate(t, &p), &p)).collect();
    let grid_b: Vec<ClassInfo> = (0..9).map(|t| canonical_class(&vb.rotate(t, &p), &p)).collect();
    let checks = [
        ("classes differ", a != b),
        ("orders are 9", a.order == 9 && b.order == 9),
        ("rotations agree", same.iter().all(|c| *c == a)),
        ("grid (a) rows share one class", grid_a.iter().all(|c| *c == a)),
        ("grid (b) rows share one class", grid_b.iter().all(|c| *c == b)),
    ];
    within(Duration::from_secs(1), start)?;
    match checks.iter().find(|(_, ok)| !ok) {
        Some((name, _)) => Err(format!("{name} failed")),
        None => Ok("(1,2,3) != (1,3,2), both order 9; (2,3,1), (3,1,2) ~ (1,2,3)".into()),
    }
}

fn hamiltonicity_sweep() -> Outcome {
    let start = Instant::now();
    let sweep = positive_sweep();
    let mut largest = 0;
    for p in &sweep {
        let cycle = assemble_hamiltonian(p).map_err(|e| format!("{p}: {e}"))?;
        let report = verify_vertices(p, &cycle);
        if !report.ok {
            return Err(format!("{p}: verifier rejected the cycle: {report:?}"));
        }
        largest = largest.max(cycle.len());
    }
    for k in 1..=4 {
        let p = params(2 * k, k, 2);
        match assemble_hamiltonian(&p) {
            Err(Error::NotHamiltonian { .. }) => {}
            other => return Err(format!("{p}: expected NotHamiltonian, got {other:?}")),
        }
    }
    let took = within(Duration::from_secs(60), start)?;
    Ok(format!(
        "{} instances verified (largest {largest} vertices), n = 2k rejected for k = 1..4 ({took:?})",
        sweep.len()
    ))
}

fn claim_suite() -> Outcome {
    let start = Instant::now();
    let mut replayed = 0;
    for p in positive_sweep() {
        if count_vertices_formula(&p) > 5000 {
            continue;
        }
        let report = replay_claims(&p);
        if let Some(bad) = report.claims.iter().find(|c| c.status != ClaimStatus::Pass) {
            return Err(format!("{p}: {} {:?}: {}", bad.name, bad.status, bad.detail));
        }
        replayed += 1;
    }
    let exhaustive = replay_claims(&params(9, 3, 2));
    let invariance = exhaustive.get("rotation_invariance").expect("claim present");
    if !invariance.detail.starts_with("all 900") {
        return Err(format!("rotation invariance on (9,3,2) was not exhaustive: {}", invariance.detail));
    }
    let took = within(Duration::from_secs(120), start)?;
    Ok(format!("7 claims pass on {replayed} instances ({took:?})"))
}

fn oracle_agreement() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for p in positive_sweep() {
        if p.r == 0 || count_vertices_formula(&p) > ORACLE_LIMIT {
            continue;
        }
        let found = bruteforce_hamiltonian(&p, ORACLE_LIMIT).map_err(|e| format!("{p}: {e}"))?;
        let oracle = found.ok_or_else(|| format!("{p}: oracle found no cycle"))?;
        let constructed = assemble_hamiltonian(&p).map_err(|e| format!("{p}: {e}"))?;
        if !verify_vertices(&p, &oracle).ok || !verify_vertices(&p, &constructed).ok {
            return Err(format!("{p}: verifier disagrees"));
        }
        checked += 1;
    }
    match bruteforce_hamiltonian(&params(6, 3, 2), ORACLE_LIMIT) {
        Ok(None) => {}
        other => return Err(format!("(6,3,2): expected Absent, got {other:?}")),
    }
    let took = within(Duration::from_secs(30), start)?;
    Ok(format!("oracle and construction agree on {checked} instances; (6,3,2) absent ({took:?})"))
}

fn peak_rss_kib() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    line.split_whitespace().nth(1)?.parse().ok()
}

fn scale() -> Outcome {
    let start = Instant::now();
    let p = params(40, 5, 2);
    let formula = count_vertices_formula(&p);
    let streamed = enumerate_vertices(&p).count() as u64;
    if formula != streamed {
        return Err(format!("formula {formula} vs stream {streamed}"));
    }
    let cycle = assemble_hamiltonian(&p).map_err(|e| e.to_string())?;
    let report = verify_vertices(&p, &cycle);
    if !report.ok || report.vertex_count as u64 != formula {
        return Err(format!("verification failed: ok={} count={}", report.ok, report.vertex_count));
    }
    let took = within(Duration::from_secs(60), start)?;
    let memory = match peak_rss_kib() {
        Some(kib) if kib < 1024 * 1024 => format!("peak RSS {} MiB", kib / 1024),
        Some(kib) => return Err(format!("peak RSS {} MiB exceeds 1 GiB", kib / 1024)),
        None => return Err("peak RSS unavailable".into()),
    };
    Ok(format!("{formula} vertices counted twice, cycle verified in {took:?}, {memory}"))
}

fn negative_controls() -> Outcome {
    let p = params(9, 3, 2);
    let good: Vec<Vec<u32>> = assemble_hamiltonian(&p)
        .map_err(|e| e.to_string())?
        .iter()
        .map(Vertex::to_vec)
        .collect();
    if !verify_cycle(&p, &good).ok {
        return Err("baseline cycle rejected".into());
    }
    // swap: first transposition that breaks adjacency
    let len = good.len();
    let swapped = (0..len)
        .flat_map(|i| (i + 1..len).map(move |j| (i, j)))
        .map(|(i, j)| {
            let mut s = good.clone();
            s.swap(i, j);
            s
        })
        .find(|s| s.iter().enumerate().any(|(i, v)| v.iter().any(|e| s[(i + 1) % len].contains(e))))
        .ok_or("no breaking swap")?;
    let r = verify_cycle(&p, &swapped);
    if r.ok || r.bad_edges.is_empty() {
        return Err(format!("swap not caught: {r:?}"));
    }
    let mut dropped = good.clone();
    dropped.remove(4);
    let r = verify_cycle(&p, &dropped);
    if r.ok || r.missing != 1 {
        return Err(format!("drop not caught: {r:?}"));
    }
    let mut duplicated = good.clone();
    duplicated[7] = good[3].clone();
    let r = verify_cycle(&p, &duplicated);
    if r.ok || r.duplicates != 1 {
        return Err(format!("duplicate not caught: {r:?}"));
    }
    Ok("swap -> bad_edges, drop -> missing, duplicate -> duplicates".into())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 class-order table replay (36,6,3)", class_order_table),
        ("2 grid classes (1,2,3) vs (1,3,2) in (9,3,2)", grid_classes),
        ("3 Hamiltonicity sweep", hamiltonicity_sweep),
        ("4 claim suite", claim_suite),
        ("5 backtracking oracle agreement", oracle_agreement),
        ("6 scale (40,5,2)", scale),
        ("7 negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("[PASS] criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 7 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
