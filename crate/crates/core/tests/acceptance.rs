//! End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use tward::braid::{to_braiding, BraidKind};
use tward::construct::{all_specs, build_twq, recover_structure, twq_spec_isomorphic};
use tward::enumerate::{dichotomy_report, enumerate_tw_left_quasigroups, enumerate_tw_quasigroups, twq_representatives};
use tward::groupcat::{counts_row, partition_number, q_count};
use tward::permgrp::Permutation;
use tward::qcore::{
    canonical_form, cayley_kernel, check_identity, is_congruence, kernel_size_report, squaring_kernel,
    IdentityKind,
};
use tward::CayleyTable;

type Outcome = Result<String, String>;

const ELL: [usize; 7] = [1, 3, 5, 14, 11, 31, 21];
const Q: [usize; 11] = [1, 1, 2, 5, 4, 5, 6, 25, 14, 9, 10];
const P: [u128; 11] = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56];
const BUDGET: Duration = Duration::from_secs(600);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn enumerated(n: usize) -> Result<Vec<CayleyTable>, String> {
    enumerate_tw_left_quasigroups(n, Some(BUDGET))
        .map(|r| r.representatives)
        .map_err(|e| format!("n = {n}: {e}"))
}

fn counts_table() -> Outcome {
    let mut seen = Vec::new();
    for (i, &expected) in ELL.iter().enumerate() {
        let n = i + 1;
        let start = Instant::now();
        let report = enumerate_tw_left_quasigroups(n, Some(BUDGET)).map_err(|e| format!("n = {n}: {e}"))?;
        let elapsed = start.elapsed();
        ensure(report.total == expected, || format!("ell({n}) = {}, expected {expected}", report.total))?;
        ensure(elapsed <= BUDGET, || format!("ell({n}) took {elapsed:?}"))?;
        seen.push(report.total);
    }
    Ok(format!("ell(1..7) = {seen:?}"))
}

fn q_counts() -> Outcome {
    let start = Instant::now();
    let mut seen = Vec::new();
    for (i, &expected) in Q.iter().enumerate() {
        let n = i + 1;
        let q = q_count(n).map_err(|e| e.to_string())?;
        ensure(q == expected, || format!("q({n}) = {q}, expected {expected}"))?;
        seen.push(q);
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("q(1..11) took {elapsed:?}"))?;
    for n in 1..=6 {
        let reps = enumerate_tw_quasigroups(n, Some(BUDGET)).map_err(|e| e.to_string())?;
        ensure(reps.len() == Q[n - 1], || format!("filter pipeline gives {} at n = {n}", reps.len()))?;
    }
    Ok(format!("q(1..11) = {seen:?} in {elapsed:?}; pipelines agree for n <= 6"))
}

fn partition_counts() -> Outcome {
    let seen: Vec<u128> = (1..=11).map(partition_number).collect();
    ensure(seen == P, || format!("p(1..11) = {seen:?}"))?;
    Ok(format!("p(1..11) = {seen:?}"))
}

fn prime_identity() -> Outcome {
    let mut lines = Vec::new();
    for p in [2usize, 3, 5, 7] {
        let row = counts_row(p, Some(BUDGET)).map_err(|e| e.to_string())?;
        let ell = row.ell.ok_or("ell missing")?;
        ensure(ell as u128 == (p - 1) as u128 + partition_number(p), || format!("{row}"))?;
        ensure(ell == ELL[p - 1], || format!("{row}"))?;
        lines.push(format!("{ell}={}+{}", row.q, row.p));
    }
    Ok(lines.join(", "))
}

fn dichotomy() -> Outcome {
    let mut lines = Vec::new();
    for p in [2usize, 3, 5, 7] {
        let d = dichotomy_report(p, Some(BUDGET)).map_err(|e| e.to_string())?;
        ensure(d.holds && d.witnesses.is_empty(), || format!("p = {p}: {} witnesses", d.witnesses.len()))?;
        lines.push(format!("p={p}: {} perm + {} quasi", d.permutational, d.quasigroups));
    }
    Ok(lines.join(", "))
}

/// The built map is always r^2 = r (idempotent), r^2 = 1 (involutive) or
/// derived, whether or not it is a braiding.
fn shape_holds(t: &CayleyTable, kind: BraidKind) -> Result<bool, String> {
    let p = to_braiding(t, kind).map_err(|e| e.to_string())?.properties();
    Ok(match kind {
        BraidKind::Derived => p.derived,
        BraidKind::Involutive => p.involutive,
        BraidKind::Idempotent => p.idempotent,
    })
}

fn correspondence() -> Outcome {
    let pairs = [
        (BraidKind::Derived, IdentityKind::Rack),
        (BraidKind::Involutive, IdentityKind::Rump),
        (BraidKind::Idempotent, IdentityKind::TwistedWard),
    ];
    let mut checked = 0usize;
    let mut discrepancies = Vec::new();
    for n in 1..=4 {
        common::for_each_left_quasigroup(n, |t| {
            for (kind, identity) in pairs {
                let braided = to_braiding(t, kind).unwrap().is_braiding().unwrap();
                let holds = check_identity(t, identity).unwrap();
                if braided != holds || !shape_holds(t, kind).unwrap() {
                    discrepancies.push(format!("{kind} on {t:?}"));
                }
            }
            checked += 1;
        });
    }
    let mut enumerated_count = 0;
    for n in 1..=6 {
        for t in enumerated(n)? {
            let b = to_braiding(&t, BraidKind::Idempotent).map_err(|e| e.to_string())?;
            if !b.is_braiding().map_err(|e| e.to_string())? || !b.properties().idempotent {
                discrepancies.push(format!("enumerated {t:?}"));
            }
            enumerated_count += 1;
        }
    }
    ensure(discrepancies.is_empty(), || format!("{} discrepancies, first {}", discrepancies.len(), discrepancies[0]))?;
    Ok(format!("{checked} left quasigroups (n <= 4) x 3 kinds, {enumerated_count} enumerated representatives; 0 discrepancies"))
}

fn degeneracy() -> Outcome {
    let mut count = 0;
    for n in 2..=6 {
        for t in enumerated(n)? {
            let p = to_braiding(&t, BraidKind::Idempotent).map_err(|e| e.to_string())?.properties();
            ensure(!p.nondegenerate, || format!("nondegenerate idempotent braiding from {t:?}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} idempotent braidings, all degenerate"))
}

fn structure_round_trip() -> Outcome {
    let mut count = 0;
    for n in 1..=8 {
        for t in twq_representatives(n).map_err(|e| e.to_string())? {
            let spec = recover_structure(&t).map_err(|e| format!("{t:?}: {e}"))?;
            let g = spec.group();
            let psi = spec.psi();
            let automorphic = (0..n).all(|x| (0..n).all(|y| psi.apply(g.mul(x, y)) == g.mul(psi.apply(x), psi.apply(y))));
            ensure(automorphic, || format!("psi not an automorphism for {t:?}"))?;
            ensure(canonical_form(&build_twq(&spec)) == t, || format!("rebuilt table differs for {t:?}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} twisted Ward quasigroups (n <= 8) recovered and rebuilt"))
}

fn isomorphism_dual_oracle() -> Outcome {
    let mut pairs = 0;
    for n in 1..=6 {
        let specs = all_specs(n).map_err(|e| e.to_string())?;
        let forms: Vec<CayleyTable> = specs.iter().map(|s| canonical_form(&build_twq(s))).collect();
        for i in 0..specs.len() {
            for j in 0..specs.len() {
                let by_spec = twq_spec_isomorphic(&specs[i], &specs[j]);
                let by_table = forms[i] == forms[j];
                ensure(by_spec == by_table, || format!("disagreement at n = {n}: {} vs {}", specs[i], specs[j]))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} ordered pairs of specs (n <= 6), 0 disagreements"))
}

fn kernel_laws() -> Outcome {
    let mut count = 0;
    for n in 1..=7 {
        for t in enumerated(n)? {
            let r = kernel_size_report(&t).map_err(|e| e.to_string())?;
            ensure(r.all_laws_hold(), || format!("kernel laws fail for {t:?}: {r:?}"))?;
            ensure(is_congruence(&t, &squaring_kernel(&t)).unwrap(), || format!("squaring kernel not a congruence for {t:?}"))?;
            count += 1;
        }
    }
    let four = tward::qcore::fixtures::four_element();
    ensure(!is_congruence(&four, &cayley_kernel(&four)).unwrap(), || "Cayley kernel of the 4-element table is a congruence".into())?;
    Ok(format!("{count} representatives (n <= 7); Cayley kernel of the 4-element table is not a congruence"))
}

fn fixture_tables() -> Outcome {
    let four: CayleyTable = "# 4-element table\n4\n0 2 1 3\n0 2 1 3\n3 1 2 0\n3 1 2 0\n".parse().map_err(|e: tward::Error| e.to_string())?;
    let six: CayleyTable = "6\n1 0 3 2 4 5\n2 3 0 1 5 4\n1 0 3 2 4 5\n2 3 0 1 5 4\n1 0 3 2 4 5\n2 3 0 1 5 4\n"
        .parse()
        .map_err(|e: tward::Error| e.to_string())?;
    let mut lines = Vec::new();
    for (t, sim, equiv) in [(four, 2, 2), (six, 3, 2)] {
        ensure(check_identity(&t, IdentityKind::TwistedWard).unwrap(), || format!("{t:?} is not twisted Ward"))?;
        let r = kernel_size_report(&t).map_err(|e| e.to_string())?;
        ensure(r.block_sizes_sim.iter().all(|&s| s == sim), || format!("Cayley blocks {:?}", r.block_sizes_sim))?;
        ensure(r.block_sizes_equiv.iter().all(|&s| s == equiv), || format!("squaring blocks {:?}", r.block_sizes_equiv))?;
        lines.push(format!("n={}: blocks {sim}/{equiv}", t.n()));
    }
    Ok(lines.join(", "))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("counts table ell(n)", counts_table),
        ("q(n) via group catalog", q_counts),
        ("p(n)", partition_counts),
        ("prime identity", prime_identity),
        ("prime dichotomy", dichotomy),
        ("correspondence suite", correspondence),
        ("degeneracy", degeneracy),
        ("structure round trip", structure_round_trip),
        ("isomorphism dual oracle", isomorphism_dual_oracle),
        ("kernel laws", kernel_laws),
        ("fixture tables", fixture_tables),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!("criterion {:2} PASS {name}: {detail} ({:.2?})", i + 1, start.elapsed()),
            Err(detail) => {
                println!("criterion {:2} FAIL {name}: {detail}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn identity_permutation_spec_is_ward() {
    // x*y = x^-1 y is the Ward quasigroup of the group
    let spec = all_specs(4).unwrap().into_iter().find(|s| s.psi() == &Permutation::identity(4) && s.c() == 0).unwrap();
    assert!(check_identity(&build_twq(&spec), IdentityKind::Ward).unwrap());
}
