//! Acceptance gate: run the complete expectation suite, group the results
//! by criterion, and print one pass/fail line per criterion. Every check is
//! exact (equality of ring elements, valuations, symbols or multisets);
//! there are no tolerances anywhere.

use kummerlab_cli::verify::run_expectations;

const CRITERIA: [(u8, &str); 10] = [
    (1, "sign-involution curves over Z[w]: delta = 16, c4 = 0, j = 0, type II (m = 1), mu_2 with d = 1, admissible"),
    (2, "eight table curves: good reduction everywhere on minimal models, square two-division discriminant, ordinary above two, single and pair admissibility"),
    (3, "rejected equations: key elements 24i, 24, 4 with valuations 6, 6, 4 against 2, verdicts false"),
    (4, "tame cubic base change: val(delta) = 12, I0*, m = 5, bookkeeping 12 = 2 + 6 + 4"),
    (5, "potential good reduction: Galois order 6 with structure C2 x C3"),
    (6, "discriminant classifiers: 28, 41, 65 fundamental; -12 not; pure cubic m = 2 gives (6, -108) with the evenness criterion"),
    (7, "RDP predictor reproduces all five configuration rows with ranks in {16, 20}"),
    (8, "lattice suite: ADE graphs negative definite with Z^2 = -2, affine star degenerate, both resolution traces"),
    (9, "monodromy suite: Kronecker product law, exhaustive prime-field criterion checks, swap charpoly, multiplicity chain"),
    (10, "randomized identity suites: b/c identities, vanishing equivalence, covariance, valuations, norms, precision stability, verdict invariance"),
];

#[test]
fn acceptance() {
    let expectations = run_expectations(None).expect("the expectation suite runs");
    let mut all_ok = true;
    for (criterion, description) in CRITERIA {
        let group: Vec<_> = expectations
            .iter()
            .filter(|e| e.criterion == criterion)
            .collect();
        assert!(
            !group.is_empty(),
            "criterion {criterion} has no expectations wired up"
        );
        let ok = group.iter().all(|e| e.pass);
        all_ok &= ok;
        println!(
            "criterion {criterion:>2}: {} ({} checks) -- {}",
            if ok { "PASS" } else { "FAIL" },
            group.len(),
            description
        );
        if !ok {
            for e in group.iter().filter(|e| !e.pass) {
                println!("    failed: {} -- {}", e.name, e.detail);
            }
        }
    }
    println!(
        "acceptance total: {}/{} expectations",
        expectations.iter().filter(|e| e.pass).count(),
        expectations.len()
    );
    assert!(all_ok, "at least one acceptance criterion failed");
}
