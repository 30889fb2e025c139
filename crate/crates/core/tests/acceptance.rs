//! The twelve acceptance criteria, run in order inside one test so that the
//! global mutation switch of criterion 12 never overlaps another check.

use std::time::Instant;

use superimmanant::mutation::{self, Mutation};
use superimmanant::tableaux::partitions;
use superimmanant::verify::*;

struct Outcome {
    lines: Vec<String>,
    failed: Vec<usize>,
}

impl Outcome {
    fn record(&mut self, k: usize, title: &str, reports: &[CheckReport], extra_ok: bool, started: Instant) {
        let ok = extra_ok && reports.iter().all(|r| r.passed);
        let cases: usize = reports.iter().map(|r| r.cases).sum();
        let line = format!(
            "{} criterion {k:>2}: {title} ({cases} cases, {:.1}s)",
            if ok { "PASS" } else { "FAIL" },
            started.elapsed().as_secs_f64()
        );
        println!("{line}");
        for r in reports.iter().filter(|r| !r.passed) {
            println!("      {} {:?}: {:?}", r.name, r.params, r.witness);
        }
        for r in reports {
            for s in &r.skipped {
                println!("      skipped in {}: {s}", r.name);
            }
        }
        if !ok {
            self.failed.push(k);
        }
        self.lines.push(line);
    }
}

fn lr_oracles_agree(max: usize) -> bool {
    for r in 1..=max as u32 {
        for a in 0..=r {
            for mu in partitions(a) {
                for nu in partitions(r - a) {
                    if lr_expansion(&mu, &nu).is_err() {
                        println!("      LR oracles disagree on {mu}·{nu}");
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[test]
fn acceptance() {
    let mut out = Outcome { lines: vec![], failed: vec![] };
    mutation::set(Mutation::None);

    let t = Instant::now();
    let reps: Vec<_> = [(1, 1), (1, 2), (2, 1)].iter().map(|&(m, n)| check_vanishing(m, n, 4)).collect();
    out.record(1, "vanishing off the hook, r ≤ 4", &reps, true, t);

    let t = Instant::now();
    let reps = vec![check_kostant(1, 1, 3), check_kostant(2, 1, 3)];
    out.record(2, "Kostant supertrace formula", &reps, true, t);

    let t = Instant::now();
    let reps = vec![check_schur_weyl(1, 1, 3), check_schur_weyl(2, 1, 3)];
    out.record(3, "Schur–Weyl vector norms", &reps, true, t);

    let t = Instant::now();
    let reps = vec![
        check_macmahon(1, 1, 4),
        check_newton(1, 1, 4),
        check_macmahon(2, 1, 3),
        check_newton(2, 1, 3),
        check_macmahon(2, 2, 3),
        check_newton(2, 2, 3),
    ];
    out.record(4, "MacMahon and Newton series identities", &reps, true, t);

    let t = Instant::now();
    let reps = vec![check_goulden_jackson_all(1, 1, 4), check_goulden_jackson_all(2, 1, 3)];
    out.record(5, "Goulden–Jackson three-way equality", &reps, true, t);

    let t = Instant::now();
    let gate = lr_oracles_agree(4);
    let mut reps = Vec::new();
    for (m, n) in [(1, 1), (2, 1)] {
        reps.push(check_littlewood_i_all(m, n));
        reps.push(check_littlewood_ii_all(m, n, 4));
        reps.push(check_lmw_all(m, n, 4));
    }
    out.record(6, "Littlewood I, II and LMW (LR oracles gated)", &reps, gate, t);

    let t = Instant::now();
    let reps = vec![check_littlewood_iii_random(1, 1, 3, 2024, 10), check_littlewood_iii_random(2, 1, 3, 2024, 10)];
    let none_skipped = reps.iter().all(|r| r.skipped.is_empty());
    out.record(7, "Littlewood III at seeded Λ₄ points", &reps, none_skipped, t);

    let t = Instant::now();
    let reps = vec![check_hessenberg_all(1, 1, 3), check_hessenberg_all(2, 1, 3)];
    out.record(8, "Hessenberg power-sum immanant", &reps, true, t);

    let t = Instant::now();
    let reps = vec![check_phi(1, 1, 4), check_phi(2, 1, 4)];
    out.record(9, "Φ maps immanant sums onto 𝕊_λ, images independent", &reps, true, t);

    let t = Instant::now();
    let reps = vec![
        check_ring_axioms(10, 1000),
        check_idempotents(5),
        check_character_orthogonality(6),
        check_chain_oracles(1, 1, 3),
        check_chain_oracles(2, 1, 3),
    ];
    out.record(10, "kernel properties", &reps, true, t);

    let t = Instant::now();
    let reps = vec![check_classical_degeneration(4, 4)];
    out.record(11, "classical degeneration at n = 0", &reps, true, t);

    let t = Instant::now();
    let mut all_detected = true;
    let baseline = mutation_probe();
    let baseline_ok = baseline.iter().all(|r| r.passed);
    for m in mutation::ALL {
        mutation::set(m);
        let reps = mutation_probe();
        mutation::set(Mutation::None);
        let caught: Vec<&str> = reps.iter().filter(|r| !r.passed).map(|r| r.name.as_str()).collect();
        println!("      {:<20} detected by {:?}", m.name(), caught);
        all_detected &= !caught.is_empty();
    }
    out.record(12, "every sign mutation is detected", &baseline, baseline_ok && all_detected, t);

    println!("\n{}", out.lines.join("\n"));
    assert!(out.failed.is_empty(), "failed criteria: {:?}", out.failed);
}
