//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use grder_core::derivation::{self, derivation_module_report, outer_vanishing_check, Derivation};
use grder_core::oracle::{self, span_invariants};
use grder_core::report::verify_document;
use grder_core::{FiniteGroup, GroupRing, Limits, RingSpec};

type Check = Result<String, String>;
type Criterion = (u32, fn() -> Check, Option<Duration>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Option<Duration>, elapsed: Duration) -> Result<(), String> {
    match limit {
        Some(l) if elapsed > l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
        _ => Ok(()),
    }
}

fn index(gr: &GroupRing, name: &str) -> usize {
    gr.group().index_of(name).unwrap()
}

fn is_transposition(name: &str) -> bool {
    name.len() == 4
}

/// Report for Z4[S3]: two outer classes of order 2, the central one equal to
/// the "2 on transposition diagonals" matrix, the other equal to "2 at
/// (e, transposition), 0 elsewhere".
fn criterion_1() -> Check {
    let gr = common::group_ring("S3", "Z4");
    let rep = derivation_module_report(&gr).map_err(|e| e.to_string())?;
    let g = gr.group();
    let outer = &rep.out_generators;
    ensure(outer.len() == 2, || {
        format!("{} outer generators", outer.len())
    })?;
    ensure(outer.iter().all(|o| o.additive_order == 2), || {
        "orders are not 2".into()
    })?;
    let ring = gr.ring();
    for o in outer {
        let twice = o.derivation.int_mul(ring, 2);
        ensure(derivation::is_inner(&gr, &twice) == Ok(true), || {
            "2·D is not inner".into()
        })?;
        ensure(
            derivation::is_inner(&gr, &o.derivation) == Ok(false),
            || "D is inner".into(),
        )?;
    }
    let d1 = outer
        .iter()
        .find(|o| o.class_representative == g.identity())
        .ok_or("no generator at [e]")?;
    let d2 = outer
        .iter()
        .find(|o| o.class_representative == index(&gr, "(12)"))
        .ok_or("no generator at [(12)]")?;
    let mut want_1 = Derivation::zero(gr.order());
    let mut want_2 = Derivation::zero(gr.order());
    for x in g.elements() {
        if is_transposition(g.name(x)) {
            want_1.set(x, x, 2);
            want_2.set(g.identity(), x, 2);
        }
    }
    ensure(d1.derivation == want_1, || {
        "first generator differs from the diagonal table".into()
    })?;
    let mismatched: Vec<String> = g
        .elements()
        .flat_map(|h| g.elements().map(move |x| (h, x)))
        .filter(|&(h, x)| d2.derivation.get(h, x) != want_2.get(h, x))
        .map(|(h, x)| format!("[{},{}]={}", g.name(h), g.name(x), d2.derivation.get(h, x)))
        .collect();
    ensure(mismatched.is_empty(), || {
        format!(
            "second generator differs from the expected table at {}; the expected table breaks Leibniz ({}) while ours satisfies it ({})",
            mismatched.join(" "),
            derivation::leibniz_check(&gr, &want_2),
            derivation::leibniz_check(&gr, &d2.derivation),
        )
    })?;
    Ok("two order-2 outer generators, both tables match".into())
}

fn criterion_2() -> Check {
    let gr = common::group_ring("S3", "Z4");
    let sol = oracle::solve_all_derivations(&gr, &Limits::default()).map_err(|e| e.to_string())?;
    ensure(sol.unknown_count == 36, || {
        format!("{} unknowns", sol.unknown_count)
    })?;
    ensure(sol.cardinality == 256u32.into(), || {
        format!("cardinality {}", sol.cardinality)
    })?;
    let want = vec![(2, 2), (2, 2), (2, 2), (2, 1), (2, 1)];
    ensure(sol.invariants == want, || {
        format!("invariants {:?}", sol.invariants)
    })?;
    let rep = derivation_module_report(&gr).map_err(|e| e.to_string())?;
    let verdict = oracle::compare(&gr, &rep, &sol);
    ensure(verdict.passed(), || format!("{verdict:?}"))?;
    Ok("256 = Z4^3 + Z2^2, compare passes (a)-(d)".into())
}

fn criterion_3() -> Check {
    let mut cases = vec![
        ("S3".to_string(), "Z4".to_string()),
        ("S3".into(), "Z2".into()),
    ];
    for n in 2..=4 {
        for m in 1..=2 {
            cases.push((format!("dihedral:{n}"), format!("GF:2:{m}")));
        }
    }
    for (g, r) in &cases {
        let gr = common::group_ring(g, r);
        let rep = derivation_module_report(&gr).map_err(|e| e.to_string())?;
        let expected = gr.order() - gr.classes().len();
        ensure(rep.inner_rank == expected, || {
            format!("{r}[{g}]: rank {} vs {expected}", rep.inner_rank)
        })?;
        if let Some(n) = g.strip_prefix("dihedral:") {
            let n: usize = n.parse().unwrap();
            ensure(rep.inner_rank == 3 * n - 3, || {
                format!("{r}[{g}]: rank {}", rep.inner_rank)
            })?;
        }
    }
    Ok(format!("{} cases", cases.len()))
}

fn criterion_4() -> Check {
    for n in 1..=6 {
        let g = FiniteGroup::dihedral(n);
        let classes = g.conjugacy_classes();
        ensure(classes.len() == n + 3, || {
            format!("dihedral({n}): {} classes", classes.len())
        })?;
        let mut sizes = classes.sizes();
        sizes.sort_unstable();
        let mut want = vec![1, 1, n, n];
        want.extend(std::iter::repeat_n(2, n - 1));
        want.sort_unstable();
        ensure(sizes == want, || format!("dihedral({n}): sizes {sizes:?}"))?;
        for x in g.elements() {
            let size = classes.classes[classes.class_of[x]].len();
            ensure(size * g.centralizer(x).order() == g.order(), || {
                format!("dihedral({n}): orbit-stabilizer fails at {}", g.name(x))
            })?;
        }
    }
    Ok("n = 1..6".into())
}

fn criterion_5() -> Check {
    let gr = common::group_ring("S3", "Z3");
    let rep = derivation_module_report(&gr).map_err(|e| e.to_string())?;
    let c = rep.criteria;
    ensure(c.prime_disjointness_criterion, || {
        "prime criterion does not predict inner only".into()
    })?;
    ensure(!c.exact_outer_trivial, || {
        "exact answer claims inner only".into()
    })?;
    ensure(c.conflict, || "conflict flag not set".into())?;
    let sol = oracle::solve_all_derivations(&gr, &Limits::default()).map_err(|e| e.to_string())?;
    let inner: Vec<Derivation> = rep.inner_basis.iter().map(|(_, d)| d.clone()).collect();
    let inner_size = derivation::invariants_cardinality(&span_invariants(gr.ring(), &inner));
    ensure(&sol.cardinality / &inner_size == 3u32.into(), || {
        format!("|Der| / |Inn| = {} / {}", sol.cardinality, inner_size)
    })?;
    let verdict = oracle::compare(&gr, &rep, &sol);
    ensure(verdict.passed(), || format!("{verdict:?}"))?;
    let doc = verify_document(&"S3".parse().unwrap(), &"Z3".parse().unwrap(), verdict, c);
    ensure(
        doc.notes
            .iter()
            .any(|n| n.starts_with("criterion-conflict")),
        || "no conflict note".into(),
    )?;
    Ok(format!(
        "|Der| = {}, |Inn| = {inner_size}, outer Z3, flagged",
        sol.cardinality
    ))
}

fn criterion_6() -> Check {
    for n in 1..=6 {
        let g = FiniteGroup::dihedral(n);
        let s = g.index_of("s").unwrap();
        let z = g.centralizer(s);
        let half = g
            .index_of(&if n == 1 {
                "r".to_string()
            } else {
                format!("r^{n}")
            })
            .unwrap();
        ensure(z.order() == 4 && z.contains(half), || {
            format!("dihedral({n}): |Z(s)| = {}", z.order())
        })?;
    }
    for n in 2..=3 {
        for m in 1..=2 {
            let gr = common::group_ring(&format!("dihedral:{n}"), &format!("GF:2:{m}"));
            let s = index(&gr, "s");
            let rep_s = gr.class_index(s);
            ensure(
                gr.centralizer_quotient(gr.representatives()[rep_s])
                    .domain()
                    .order()
                    == 4,
                || "report uses a different centralizer".into(),
            )?;
            let rep = derivation_module_report(&gr).map_err(|e| e.to_string())?;
            let sol = oracle::solve_all_derivations(&gr, &Limits::default())
                .map_err(|e| e.to_string())?;
            let verdict = oracle::compare(&gr, &rep, &sol);
            ensure(verdict.passed(), || {
                format!("dihedral({n}), GF(2,{m}): {verdict:?}")
            })?;
        }
    }
    Ok("|Z(s)| = 4 for n = 1..6; compare passes for n = 2,3 and m = 1,2".into())
}

fn criterion_7() -> Check {
    let mut counts = [0usize; 6];
    for g in common::SMALL_GROUPS {
        for r in common::SMALL_RINGS {
            let gr = common::group_ring(g, r);
            let rep = derivation_module_report(&gr).map_err(|e| e.to_string())?;
            let tag = |e: String| format!("{r}[{g}]: {e}");
            counts[0] += common::check_character_additivity(&gr, &rep).map_err(tag)?;
            counts[1] += common::check_section_split(&gr, &rep).map_err(tag)?;
            counts[2] += common::check_leibniz(&gr, &rep).map_err(tag)?;
            counts[3] += common::check_class_sums(&gr).map_err(tag)?;
            if gr.order() <= 8 {
                counts[4] += common::check_bracket(&gr, &rep).map_err(tag)?;
            }
            counts[5] += common::check_round_trip(&gr, &rep, 0x5eed, 4).map_err(tag)?;
        }
    }
    ensure(counts.iter().all(|&c| c >= 100), || {
        format!("too few cases: {counts:?}")
    })?;
    Ok(format!(
        "additivity {}, split {}, Leibniz {}, class sums {}, bracket {}, round trip {}",
        counts[0], counts[1], counts[2], counts[3], counts[4], counts[5]
    ))
}

fn criterion_8() -> Check {
    let mut groups: Vec<&str> = common::SMALL_GROUPS.to_vec();
    groups.extend(["S4", "dihedral:4", "dihedral:6", "C5xS3"]);
    for g in &groups {
        let c = outer_vanishing_check(&common::group(g), &RingSpec::Integers, 256)
            .map_err(|e| e.to_string())?;
        ensure(c.exact_outer_trivial, || {
            format!("{g}: outer part reported nonzero")
        })?;
    }
    Ok(format!("{} groups", groups.len()))
}

fn criterion_9() -> Check {
    let brute = common::check_hom_arithmetic()?;
    let cyclic = common::check_cyclic_hom_law()?;
    Ok(format!(
        "{brute} (H, A) pairs by brute force, {cyclic} cyclic prime-power pairs"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, criterion_1, Some(Duration::from_secs(1))),
        (2, criterion_2, Some(Duration::from_secs(5))),
        (3, criterion_3, None),
        (4, criterion_4, None),
        (5, criterion_5, Some(Duration::from_secs(5))),
        (6, criterion_6, Some(Duration::from_secs(30))),
        (7, criterion_7, None),
        (8, criterion_8, None),
        (9, criterion_9, None),
    ];
    let mut failed = 0;
    for (id, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|msg| within(limit, elapsed).map(|()| msg));
        match outcome {
            Ok(msg) => println!("criterion {id}: PASS ({elapsed:.2?}) {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {id}: FAIL ({elapsed:.2?}) {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
