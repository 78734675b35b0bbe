//! Acceptance gate: fifteen independent criteria covering the ring
//! identities, the claim catalogue, the Gray map, factorization, and CLI
//! determinism.  Each criterion prints exactly one [PASS]/[FAIL] line
//! (visible with `cargo test --test acceptance -- --nocapture`); the test
//! fails if any criterion fails.

use std::collections::HashSet;
use std::process::Command;

use constacyclic::{
    check, gray_image, recheck_counterexample, run_claims, Caps, ClaimId, ConstaCodeR,
    Counterexample, Fp, Grid, GrayLayout, PolyFp, RingCtx, SigmaTriple, Status, Strategy,
    TheoremCheck,
};

const SEED: u64 = 42;

fn caps() -> Caps {
    Caps { enum_cap: 100_000, sample_size: 1_000, distance_cap: 1_000_000 }
}

/// Ok carries an optional annotation for the PASS line.
type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg)
    }
}

fn run_check(id: ClaimId, p: u32, k: u32, m: Option<u32>) -> Result<TheoremCheck, String> {
    check(id, p, k, m, SEED, &caps()).map_err(|e| format!("{id} at ({p}, {k}, {m:?}): {e}"))
}

fn holding(id: ClaimId, p: u32, k: u32, m: u32) -> Result<TheoremCheck, String> {
    let row = run_check(id, p, k, Some(m))?;
    ensure(
        row.status == Status::Holds,
        format!("{id} at ({p}, {k}, {m}) reported {:?} ({:?})", row.status, row.reason),
    )?;
    Ok(row)
}

fn verified_failure(row: &TheoremCheck) -> Result<(), String> {
    ensure(
        row.status == Status::Fails,
        format!("{} at ({}, {}, {:?}) reported {:?}", row.claim, row.p, row.k, row.m, row.status),
    )?;
    match recheck_counterexample(row) {
        Ok(true) => Ok(()),
        Ok(false) => Err(format!("counterexample for {} did not re-verify", row.claim)),
        Err(e) => Err(format!("counterexample for {} rejected: {e}", row.claim)),
    }
}

/// 1. At k = 2 the three sigma elements are orthogonal idempotents summing
///    to one, with the lambda eigen-identities and lambda^2 = 1, exactly.
fn c01() -> Verdict {
    for p in [3u32, 5, 7, 11] {
        let ctx = RingCtx::new(p, 2).map_err(|e| e.to_string())?;
        let report = ctx.idempotent_report().map_err(|e| e.to_string())?;
        ensure(report.all_hold(), format!("an identity fails at p = {p}, k = 2:\n{report}"))?;
    }
    Ok("p in {3, 5, 7, 11}, all identities exact".to_string())
}

/// 2. For k in {3,...,6} the report must show exactly: lambda^2 = 1, the
///    sigma sum is 1, the lambda eigen-identities hold, sigma_1 stays
///    idempotent, and sigma_2^2 equals 4^{-1}(u^{k-2} + 2u^{k-1} + u^k)
///    rather than sigma_2.
fn c02() -> Verdict {
    let p = 5u32;
    let fp = Fp::new(p).map_err(|e| e.to_string())?;
    let inv4 = fp.inv(4).map_err(|e| e.to_string())?;
    for k in [3usize, 4, 5, 6] {
        let ctx = RingCtx::new(p, k).map_err(|e| e.to_string())?;
        let report = ctx.idempotent_report().map_err(|e| e.to_string())?;
        ensure(report.lambda_squared_is_one, format!("lambda^2 != 1 at k = {k}"))?;
        ensure(report.sum_is_one, format!("sigma sum != 1 at k = {k}"))?;
        ensure(
            report.lambda_product_expected == [true; 3],
            format!("a lambda sigma_i eigen-identity fails at k = {k}"),
        )?;
        ensure(
            report.square_is_idempotent == [true, false, false],
            format!(
                "idempotency pattern at k = {k} is {:?}, expected [true, false, false]",
                report.square_is_idempotent
            ),
        )?;
        ensure(
            report.pairwise_is_zero == [true, true, true, false, true, false],
            format!(
                "orthogonality pattern at k = {k} is {:?}",
                report.pairwise_is_zero
            ),
        )?;
        let mut coeffs = vec![0u32; k + 1];
        coeffs[k - 2] = inv4;
        coeffs[k - 1] = fp.mul(2, inv4);
        coeffs[k] = inv4;
        let residual = ctx.from_coeffs(coeffs);
        ensure(
            report.squares[1] == residual,
            format!(
                "sigma_2^2 at k = {k} is {} rather than the recorded residual {}",
                report.squares[1], residual
            ),
        )?;
    }
    Ok("p = 5, k in {3,...,6}; sigma_2^2 = 4^-1(u^(k-2) + 2u^(k-1) + u^k)".to_string())
}

/// 3. lambda^m = lambda for odd m and 1 for even m, m = 1..10, plus the
///    suite's parity rows on the default grid.
fn c03() -> Verdict {
    for p in [3u32, 5, 7] {
        for k in [2usize, 3] {
            let ctx = RingCtx::new(p, k).map_err(|e| e.to_string())?;
            let lam = ctx.lambda();
            for m in 1u64..=10 {
                let expected = if m % 2 == 1 { lam.clone() } else { ctx.one() };
                ensure(
                    lam.pow(m) == expected,
                    format!("lambda^{m} != {} at p = {p}, k = {k}", if m % 2 == 1 { "lambda" } else { "1" }),
                )?;
            }
        }
    }
    let report = run_claims(&[ClaimId::NoteParity], &Grid::default_grid(), SEED, &caps())
        .map_err(|e| e.to_string())?;
    for row in &report.checks {
        ensure(
            row.status == Status::Holds,
            format!("parity row at p = {} reported {:?}", row.p, row.status),
        )?;
    }
    Ok("direct for m = 1..10 and as suite rows".to_string())
}

/// 4. Claim T2.5 (a code is shift-invariant iff each component is an
///    ideal), both directions, exhaustively at (3, 2, m in {1, 2}).
fn c04() -> Verdict {
    for (m, expected_evidence) in [(1u32, 8u64), (2, 16)] {
        let row = holding(ClaimId::T2_5, 3, 2, m)?;
        ensure(
            row.strategy == Strategy::Exhaustive,
            format!("T2.5 at m = {m} was not exhaustive"),
        )?;
        ensure(
            row.evidence_count == expected_evidence,
            format!("T2.5 at m = {m} covered {} triples, expected {expected_evidence}", row.evidence_count),
        )?;
        let directions = row.directions.as_ref().ok_or("T2.5 row lacks direction reports")?;
        ensure(directions.len() == 2, format!("T2.5 at m = {m} has {} directions", directions.len()))?;
        for d in directions {
            ensure(
                d.violations == 0 && d.checked > 0,
                format!("direction {:?} at m = {m}: {} checked, {} violations", d.direction, d.checked, d.violations),
            )?;
        }
    }
    Ok("both directions, zero violations over 8 + 16 triples".to_string())
}

/// 5. Claim T2.6: |L| = p^(3m - sum deg h_i), confirmed by enumerating the
///    code, for all 16 divisor triples at (3, 2, 2).
fn c05() -> Verdict {
    let row = holding(ClaimId::T2_6, 3, 2, 2)?;
    ensure(row.strategy == Strategy::Exhaustive, "T2.6 was not exhaustive".to_string())?;
    ensure(
        row.evidence_count == 16,
        format!("T2.6 covered {} triples, expected 16", row.evidence_count),
    )?;
    Ok("size formula matches enumeration on all 16 triples".to_string())
}

/// 6. Claim T2.7: the single generator h(a) spans the triple-generated
///    code, same grid as criterion 5.
fn c06() -> Verdict {
    let row = holding(ClaimId::T2_7, 3, 2, 2)?;
    ensure(
        row.evidence_count == 16,
        format!("T2.7 covered {} triples, expected 16", row.evidence_count),
    )?;
    Ok("single-generator ideal equals the code on all 16 triples".to_string())
}

/// 7. Claim T2.9a: h(a) k(a) = a^m - lambda symbolically at (3, 2, m in
///    {2, 3}); claims L2.8/T2.9b: on triples with coprime cofactors the
///    Bezout combination u g + v k = 1 holds exactly.
fn c07() -> Verdict {
    for m in [2u32, 3] {
        holding(ClaimId::T2_9a, 3, 2, m)?;
        holding(ClaimId::L2_8, 3, 2, m)?;
    }
    for (m, expected_evidence) in [(2u32, 16u64), (3, 8)] {
        let row = holding(ClaimId::T2_9b, 3, 2, m)?;
        ensure(
            row.evidence_count == expected_evidence,
            format!(
                "T2.9b at m = {m} certified {} coprime triples, expected {expected_evidence}",
                row.evidence_count
            ),
        )?;
    }
    Ok("h k = a^m - lambda everywhere; Bezout exact on certified triples".to_string())
}

/// 8. Claim T2.10: the brute-force dual equals the reciprocal-polynomial
///    construction; claim C2.11: |dual| = p^(sum deg h_i); all 16 triples
///    at (3, 2, 2).
fn c08() -> Verdict {
    for id in [ClaimId::T2_10, ClaimId::C2_11] {
        let row = holding(id, 3, 2, 2)?;
        ensure(
            row.evidence_count == 16,
            format!("{id} covered {} triples, expected 16", row.evidence_count),
        )?;
    }
    Ok("reciprocal duals and the dual size formula on all 16 triples".to_string())
}

/// 9. Claim P2.3: a code is shift-invariant iff its dual is, over the
///    enumerated code set at (3, 2, 2).
fn c09() -> Verdict {
    let row = holding(ClaimId::P2_3, 3, 2, 2)?;
    ensure(
        row.strategy == Strategy::Exhaustive && row.evidence_count == 216,
        format!("P2.3 ran {:?} over {} codes, expected 216 exhaustive", row.strategy, row.evidence_count),
    )?;
    Ok("both directions over all 216 enumerated submodule triples".to_string())
}

/// 10. Claim T2.12: mu is a multiplicative bijection, exhaustively at
///     (5, 2, 1) and on 1000 seeded pairs at m = 3; claims C2.13/C2.14:
///     mu-bar carries enumerated cyclic codes to invariant codes and back
///     at (3, 2, 3).
fn c10() -> Verdict {
    let row = holding(ClaimId::T2_12, 5, 2, 1)?;
    ensure(
        row.strategy == Strategy::Exhaustive && row.evidence_count == 15_625,
        format!("T2.12 at m = 1 ran {:?} over {} pairs, expected 15625 exhaustive", row.strategy, row.evidence_count),
    )?;
    let row = holding(ClaimId::T2_12, 5, 2, 3)?;
    ensure(
        row.strategy == Strategy::Sampled && row.evidence_count == 1_000,
        format!("T2.12 at m = 3 ran {:?} over {} pairs, expected 1000 sampled", row.strategy, row.evidence_count),
    )?;
    holding(ClaimId::C2_13, 3, 2, 3)?;
    let row = holding(ClaimId::C2_14, 3, 2, 3)?;
    ensure(
        row.evidence_count == 128,
        format!("C2.14 covered {} cases, expected 128", row.evidence_count),
    )?;
    Ok("15625 exhaustive pairs at m = 1, 1000 sampled at m = 3, both code directions".to_string())
}

/// 11. The three catalogued refutations fail with re-verifiable
///     counterexamples: T2.1 with Phi(gamma(u)) = (0,4,0) != (0,0,1) =
///     alpha(Phi(u)) at (5, 2, 1); T2.2 with L = span{u, u^2} at
///     (3, 2, 1); P2.16 on the default grid.
fn c11() -> Verdict {
    let row = run_check(ClaimId::T2_1, 5, 2, Some(1))?;
    verified_failure(&row)?;
    match row.counterexample.as_ref() {
        Some(Counterexample::VectorPair { vector, lhs, rhs, .. }) => {
            ensure(
                vector == &vec![vec![0, 1, 0]] && lhs == &vec![0, 4, 0] && rhs == &vec![0, 0, 1],
                format!("T2.1 pinned witness mismatch: {vector:?}, {lhs:?}, {rhs:?}"),
            )?;
        }
        other => return Err(format!("T2.1 counterexample has the wrong shape: {other:?}")),
    }

    let row = run_check(ClaimId::T2_2, 3, 2, Some(1))?;
    verified_failure(&row)?;
    match row.counterexample.as_ref() {
        Some(Counterexample::TripleWitness { h1, h2, h3, .. }) => {
            let fp = Fp::new(3).map_err(|e| e.to_string())?;
            let ctx = RingCtx::new(3, 2).map_err(|e| e.to_string())?;
            let polys = [
                PolyFp::new(fp, h1.clone()),
                PolyFp::new(fp, h2.clone()),
                PolyFp::new(fp, h3.clone()),
            ];
            let code = SigmaTriple::from_divisors(fp, 1, [&polys[0], &polys[1], &polys[2]])
                .build(ctx)
                .map_err(|e| e.to_string())?;
            let span_u_u2 = ConstaCodeR::new(
                ctx,
                1,
                vec![vec![ctx.monomial(1)], vec![ctx.monomial(2)]],
            );
            ensure(
                code.equals(&span_u_u2),
                "the T2.2 witness code is not span{u, u^2}".to_string(),
            )?;
        }
        other => return Err(format!("T2.2 counterexample has the wrong shape: {other:?}")),
    }

    let report = run_claims(&[ClaimId::P2_16], &Grid::default_grid(), SEED, &caps())
        .map_err(|e| e.to_string())?;
    let mut failing = 0usize;
    for row in &report.checks {
        if row.m == Some(3) {
            verified_failure(row)?;
            failing += 1;
        }
    }
    ensure(failing == 2, format!("P2.16 failed at {failing} of the 2 odd-length-3 cells"))?;
    Ok("all three refutations re-verify from their stored witnesses".to_string())
}

/// 12. Factoring a^7 - 1 over F_2 yields exactly (a+1)(a^3+a+1)(a^3+a^2+1);
///     over p in {3, 5} that displayed product misses a^7 - 1 by exactly
///     2a^4 - 2a^3 (reduced mod p).
fn c12() -> Verdict {
    let f2 = Fp::new(2).map_err(|e| e.to_string())?;
    let factorization = PolyFp::binomial(f2, 7, 1).factor(0).map_err(|e| e.to_string())?;
    ensure(factorization.unit == 1, "a^7 - 1 over F_2 is monic".to_string())?;
    let expected: HashSet<Vec<u32>> = [
        vec![1u32, 1],
        vec![1, 1, 0, 1],
        vec![1, 0, 1, 1],
    ]
    .into_iter()
    .collect();
    let got: HashSet<Vec<u32>> = factorization
        .factors
        .iter()
        .map(|(g, e)| {
            ensure(*e == 1, format!("factor {g} has multiplicity {e}"))?;
            Ok(g.coeffs().to_vec())
        })
        .collect::<Result<_, String>>()?;
    ensure(
        got == expected && factorization.factors.len() == 3,
        format!("factors over F_2 are {got:?}"),
    )?;

    let out = Command::new(env!("CARGO_BIN_EXE_constacyclic"))
        .args(["factor", "--p", "2", "--poly", "a^7-1"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(
        out.status.success()
            && out.stdout == b"a^7 + 1 = (a + 1)(a^3 + a + 1)(a^3 + a^2 + 1)\n",
        format!("factor subcommand printed {:?}", String::from_utf8_lossy(&out.stdout)),
    )?;

    for (p, expected_diff) in [(3u32, vec![0u32, 0, 0, 1, 2]), (5, vec![0, 0, 0, 3, 2])] {
        let row = run_check(ClaimId::E2_19, p, 2, None)?;
        verified_failure(&row)?;
        match row.counterexample.as_ref() {
            Some(Counterexample::PolyIdentity { difference, .. }) => {
                ensure(
                    difference == &expected_diff,
                    format!("difference over F_{p} is {difference:?}, expected {expected_diff:?} (2a^4 - 2a^3)"),
                )?;
            }
            other => return Err(format!("E2.19 counterexample has the wrong shape: {other:?}")),
        }
    }
    Ok("three exact factors over F_2; defect 2a^4 - 2a^3 over F_3 and F_5".to_string())
}

/// 13. The Gray map is a bijection at k = 2 (exhaustive over R at m = 1
///     for p in {3, 5}; full-rank images for m <= 3) and has the recorded
///     nonzero kernel element at k = 3.
fn c13() -> Verdict {
    for p in [3u32, 5] {
        let ctx = RingCtx::new(p, 2).map_err(|e| e.to_string())?;
        let layout = GrayLayout::new(ctx);
        let mut images: HashSet<Vec<u32>> = HashSet::new();
        for c0 in 0..p {
            for c1 in 0..p {
                for c2 in 0..p {
                    let x = ctx.from_coeffs(vec![c0, c1, c2]);
                    let image = layout.gray_elem(&x);
                    ensure(
                        images.insert(image.clone()),
                        format!("Gray image collision at p = {p}: {image:?}"),
                    )?;
                    let back = layout.gray_inverse(&image).map_err(|e| e.to_string())?;
                    ensure(back == x, format!("Gray inverse fails over F_{p} on {image:?}"))?;
                }
            }
        }
        ensure(
            images.len() as u32 == p * p * p,
            format!("{} distinct images over F_{p}, expected {}", images.len(), p * p * p),
        )?;
        for m in 1usize..=3 {
            let full = ConstaCodeR::full(ctx, m);
            let image = gray_image(&layout, &full);
            ensure(
                image.dim() == 3 * m,
                format!("Gray image of R^{m} over F_{p} has rank {}, expected {}", image.dim(), 3 * m),
            )?;
        }
    }
    let ctx3 = RingCtx::new(3, 3).map_err(|e| e.to_string())?;
    let layout3 = GrayLayout::new(ctx3);
    let witness = layout3.kernel_witness().ok_or("no kernel witness at k = 3")?;
    ensure(witness != ctx3.zero(), "kernel witness at k = 3 is zero".to_string())?;
    ensure(
        layout3.gray_elem(&witness).iter().all(|&c| c == 0),
        "kernel witness at k = 3 has a nonzero image".to_string(),
    )?;
    Ok("bijective at k = 2; u^2 collapses to zero at k = 3".to_string())
}

/// 14. For every self-orthogonal code in the enumerated set at (3, 2,
///     m <= 2) the image self-orthogonality verdict is recorded; a failure
///     must carry a re-verifiable counterexample.  Either verdict is
///     acceptable.
fn c14() -> Verdict {
    let mut notes = Vec::new();
    for m in [1u32, 2] {
        let row = run_check(ClaimId::P2_4, 3, 2, Some(m))?;
        ensure(
            row.evidence_count >= 1,
            format!("no self-orthogonal codes were tested at m = {m} (the zero code always qualifies)"),
        )?;
        match row.status {
            Status::Holds => {}
            Status::Fails => verified_failure(&row)?,
            Status::NotApplicable => {
                return Err(format!("P2.4 at m = {m} reported not-applicable"))
            }
        }
        notes.push(format!(
            "m = {m}: {} on {} self-orthogonal codes",
            match row.status {
                Status::Holds => "holds",
                Status::Fails => "fails (witness re-verified)",
                Status::NotApplicable => unreachable!(),
            },
            row.evidence_count
        ));
    }
    Ok(notes.join("; "))
}

/// 15. Two runs of `theorems run` with identical flags and seed produce
///     byte-identical JSON.
fn c15() -> Verdict {
    let args = [
        "theorems", "run", "--p", "3,5", "--k", "2", "--m", "1,2,3", "--seed", "42",
        "--format", "json",
    ];
    let run_once = || -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_constacyclic"))
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(
            out.status.success(),
            format!("suite run failed: {}", String::from_utf8_lossy(&out.stderr)),
        )?;
        Ok(out.stdout)
    };
    let first = run_once()?;
    let second = run_once()?;
    ensure(!first.is_empty(), "suite run produced no output".to_string())?;
    ensure(first == second, "two identical suite runs differ".to_string())?;
    Ok(format!("{} bytes of JSON, byte-identical across runs", first.len()))
}

#[test]
fn acceptance() {
    let criteria: [(u32, &str, fn() -> Verdict); 15] = [
        (1, "sigma elements are orthogonal idempotents at k = 2", c01),
        (2, "general-k identity pattern with the recorded sigma_2^2 residual", c02),
        (3, "lambda power parity", c03),
        (4, "T2.5 shift-invariance equivalence, both directions", c04),
        (5, "T2.6 code-size formula against enumeration", c05),
        (6, "T2.7 single-generator presentation", c06),
        (7, "T2.9a generator cofactor product; L2.8/T2.9b Bezout identities", c07),
        (8, "T2.10/C2.11 duals via reciprocals and the dual size formula", c08),
        (9, "P2.3 dual invariance equivalence", c09),
        (10, "T2.12/C2.13/C2.14 quotient-ring isomorphism and code transport", c10),
        (11, "refutations T2.1, T2.2, P2.16 with verified counterexamples", c11),
        (12, "factorization of a^7 - 1 and the displayed-product defect", c12),
        (13, "Gray map bijectivity at k = 2 and kernel witness at k = 3", c13),
        (14, "image self-orthogonality verdicts recorded for P2.4", c14),
        (15, "byte-identical suite reports per seed", c15),
    ];
    let mut failures = Vec::new();
    for (number, title, criterion) in criteria {
        match criterion() {
            Ok(note) if note.is_empty() => println!("[PASS] criterion {number:>2}: {title}"),
            Ok(note) => println!("[PASS] criterion {number:>2}: {title} ({note})"),
            Err(message) => {
                println!("[FAIL] criterion {number:>2}: {title} — {message}");
                failures.push(format!("criterion {number}: {message}"));
            }
        }
    }
    assert!(
        failures.is_empty(),
        "{} acceptance criteria failed:\n{}",
        failures.len(),
        failures.join("\n")
    );
}
