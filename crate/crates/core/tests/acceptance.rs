//! Acceptance suite: one line per criterion, non-zero exit on any failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{brute_class_count, plus_k1};
use induced_free::classifier::{
    feasibility_verdict, tnf_infeasible_region, turan_number, witness, TnfKind, Verdict,
};
use induced_free::constructions::{
    h_graph, k3k2_decompose, k3k2_witness, split_pack_witness, uep_witness, HParams,
};
use induced_free::enumeration::{
    enumerate_nonisomorphic, extremal_stats, feasible_pairs, interval_check_p3k1, FamilySpec,
};
use induced_free::graph::{choose2, Graph};
use induced_free::iso::contains_induced;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn p3_k1() -> Graph {
    plus_k1(&Graph::path(3).unwrap())
}

fn k3_k1() -> Graph {
    plus_k1(&Graph::complete(3).unwrap())
}

fn dispatcher_sweep() -> Outcome {
    let start = Instant::now();
    let mut forbidden = 0;
    let mut classes = 0;
    let mut checked = 0u64;
    for order in 2..=5 {
        for g in enumerate_nonisomorphic(order).unwrap() {
            classes += 1;
            if feasibility_verdict(g) != Verdict::Feasible {
                continue;
            }
            forbidden += 1;
            for n in 0..=10 {
                for m in 0..=choose2(n) {
                    let cert =
                        witness(g, n, m, true).map_err(|e| format!("{g:?} ({n},{m}): {e}"))?;
                    ensure!(cert.verified, "{g:?} ({n},{m}) not verified");
                    ensure!(
                        cert.graph.order() == n && cert.graph.edge_count() == m,
                        "{g:?} ({n},{m}) wrong counts"
                    );
                    checked += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed <= Duration::from_secs(300), "took {elapsed:?}");
    Ok(format!(
        "{forbidden} non-TNF forbidden graphs of {classes} classes on 2..=5 vertices, \
         {checked} verified witnesses in {elapsed:.2?}"
    ))
}

fn tnf_converse() -> Outcome {
    let mut tables = 0;
    for kind in TnfKind::ALL {
        for k in 2..=5 {
            let fam = FamilySpec::single(kind.graph(k).unwrap()).unwrap();
            for n in 1..=7 {
                let table = feasible_pairs(&fam, n).unwrap();
                let region = tnf_infeasible_region(kind, k, n).unwrap();
                if n >= k {
                    ensure!(!table.all_feasible(), "{kind} k={k} n={n}: no infeasible m");
                }
                for m in region.edge_counts() {
                    ensure!(
                        !table.is_feasible(m),
                        "{kind} k={k} n={n}: m={m} is feasible"
                    );
                }
                if matches!(kind, TnfKind::Clique | TnfKind::Empty) {
                    ensure!(region.exact, "{kind} region not marked exact");
                    ensure!(
                        region.edge_counts() == table.infeasible(),
                        "{kind} k={k} n={n}: region {:?} vs enumeration {:?}",
                        region.range,
                        table.infeasible()
                    );
                }
                tables += 1;
            }
        }
    }
    let k3 = FamilySpec::single(Graph::complete(3).unwrap()).unwrap();
    for (n, ex) in [(5, 6), (6, 9)] {
        ensure!(turan_number(n, 3).unwrap() == ex, "ex({n},K3) formula");
        let (f, _) = extremal_stats(&k3, n).unwrap();
        ensure!(f == Some(ex + 1), "ex({n},K3) by enumeration: f = {f:?}");
    }
    Ok(format!(
        "{tables} tables; Turán ex(5,K3)=6, ex(6,K3)=9 confirmed"
    ))
}

fn section_four_claims() -> Outcome {
    let co = FamilySpec::new([p3_k1(), k3_k1()]).unwrap();
    let pc = FamilySpec::new([Graph::paw(), Graph::claw()]).unwrap();
    ensure!(
        !feasible_pairs(&co, 5).unwrap().is_feasible(3),
        "(5,3) feasible"
    );
    ensure!(
        !feasible_pairs(&co, 6).unwrap().is_feasible(4),
        "(6,4) feasible"
    );
    ensure!(
        !feasible_pairs(&pc, 5).unwrap().is_feasible(7),
        "(5,7) feasible"
    );
    ensure!(
        !feasible_pairs(&pc, 6).unwrap().is_feasible(11),
        "(6,11) feasible"
    );
    for n in 5..=7 {
        let t = feasible_pairs(&co, n).unwrap();
        let (lo, hi) = interval_check_p3k1(n).unwrap();
        for m in lo..=hi {
            ensure!(
                !t.is_feasible(m),
                "n={n}: m={m} in forcing interval is feasible"
            );
        }
        ensure!(
            t.min_infeasible == Some(n / 2 + 1),
            "n={n}: f = {:?}",
            t.min_infeasible
        );
        let (_, big_f) = extremal_stats(&pc, n).unwrap();
        let expected = choose2(n) - n / 2 - 1;
        ensure!(
            big_f == Some(expected),
            "n={n}: F(paw,claw) = {big_f:?}, want {expected}"
        );
    }
    Ok("(5,3) (6,4) (5,7) (6,11) infeasible; intervals, f and F match for n=5,6,7".into())
}

fn split_pack_feasibility() -> Outcome {
    let family = FamilySpec::new([p3_k1(), plus_k1(&Graph::complete(4).unwrap())]).unwrap();
    let complement_family = FamilySpec::new([Graph::paw(), Graph::star(4).unwrap()]).unwrap();
    let mut count = 0;
    for n in 3..=12 {
        for m in 0..=choose2(n) {
            let g = split_pack_witness(n, m).map_err(|e| format!("({n},{m}): {e}"))?;
            ensure!(
                g.order() == n && g.edge_count() == m,
                "({n},{m}) wrong counts"
            );
            ensure!(family.is_member(&g), "({n},{m}) not in F(P3∪K1, K4∪K1)");
            let co = g.complement();
            ensure!(
                complement_family.is_member(&co),
                "complement of ({n},{m}) not in F(paw,K_1,4)"
            );
            count += 1;
        }
    }
    Ok(format!(
        "{count} pairs covered for 3 <= n <= 12, complements paw- and K_1,4-free"
    ))
}

fn k3k2_decomposition() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for n in 2..=40 {
        for t in 0..=n - 2 {
            let (x, y) = k3k2_decompose(n, t).map_err(|e| e.to_string())?;
            ensure!(
                3 * x + y == t && 3 * x + 2 * y <= n,
                "({n},{t}) -> ({x},{y}) invalid"
            );
            let candidates: Vec<(usize, usize)> = (0..=t / 3)
                .map(|bx| (bx, t - 3 * bx))
                .filter(|&(bx, by)| 3 * bx + 2 * by <= n)
                .collect();
            ensure!(
                !candidates.is_empty(),
                "({n},{t}): brute force found nothing"
            );
            ensure!(
                candidates.contains(&(x, y)),
                "({n},{t}) not among brute-force solutions"
            );
            ensure!(
                candidates.iter().max() == Some(&(x, y)),
                "({n},{t}): not the most-triangle solution"
            );
            let min_x = (2 * t).saturating_sub(n).div_ceil(3);
            ensure!(
                candidates.iter().min() == Some(&(min_x, t - 3 * min_x)),
                "({n},{t}): fewest-triangle form disagrees with brute force"
            );
            cases += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed <= Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!(
        "{cases} (n,t) cases agree with brute force in {elapsed:.2?}"
    ))
}

fn uep_small_forbidden() -> Outcome {
    let forbidden = [
        Graph::claw(),
        Graph::matching(2).unwrap(),
        Graph::path(4).unwrap(),
    ];
    let mut count = 0;
    for n in 0..=12 {
        for m in 0..=choose2(n) {
            let g = uep_witness(n, m).unwrap();
            for f in &forbidden {
                ensure!(
                    contains_induced(&g, f).is_none(),
                    "uep({n},{m}) contains {f:?}"
                );
            }
            count += 1;
        }
    }
    Ok(format!("{count} UEP witnesses free of claw, 2K2, P4"))
}

fn q_family_freeness() -> Outcome {
    let mut patterns = Vec::new();
    for p in 4..=8 {
        for q in 2..=p - 2 {
            for r in 0..=2 {
                patterns.push(((p, q, r), h_graph(HParams::new(p, q, r).unwrap()).unwrap()));
            }
        }
    }
    let mut checks = 0;
    for n in 0..=10 {
        for m in 0..=choose2(n) {
            let g = k3k2_witness(n, m).unwrap();
            for ((p, q, r), h) in &patterns {
                ensure!(
                    contains_induced(&g, h).is_none(),
                    "k3k2({n},{m}) contains H({p},{q},{r})"
                );
                checks += 1;
            }
        }
    }
    Ok(format!(
        "{} patterns, {checks} checks, no induced copies",
        patterns.len()
    ))
}

fn complement_duality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1d0c_ed0f);
    let mut random_graph = |lo: usize, hi: usize| {
        let n = rng.gen_range(lo..=hi);
        let density: f64 = rng.gen();
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                if rng.gen_bool(density) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    };
    let mut hits = 0;
    for _ in 0..10_000 {
        let host = random_graph(0, 8);
        let pattern = random_graph(1, 8);
        let direct = contains_induced(&host, &pattern).is_some();
        let dual = contains_induced(&host.complement(), &pattern.complement()).is_some();
        ensure!(
            direct == dual,
            "violation: host {host:?}, pattern {pattern:?}"
        );
        hits += direct as usize;
    }
    Ok(format!(
        "10000 pairs, 0 violations ({hits} contain the pattern)"
    ))
}

fn enumeration_self_check() -> Outcome {
    let expected = [1, 2, 4, 11, 34, 156, 1044, 12346];
    for (i, &want) in expected.iter().enumerate() {
        let n = i + 1;
        let got = enumerate_nonisomorphic(n).unwrap().len();
        ensure!(got == want, "n={n}: {got} classes, want {want}");
        if n <= 6 {
            let brute = brute_class_count(n);
            ensure!(brute == want, "n={n}: brute-force orbit count {brute}");
        }
    }
    Ok("1, 2, 4, 11, 34, 156, 1044, 12346; n <= 6 confirmed by orbit dedup".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1 witness dispatcher sweep", dispatcher_sweep),
        ("AC2 TNF converse and Turán regions", tnf_converse),
        (
            "AC3 non-feasibility of F(paw,claw) and F(P3∪K1,K3∪K1)",
            section_four_claims,
        ),
        (
            "AC4 F(paw,K_1,4) feasibility via split packing",
            split_pack_feasibility,
        ),
        ("AC5 triangle/edge decomposition", k3k2_decomposition),
        ("AC6 UEP witnesses avoid claw, 2K2, P4", uep_small_forbidden),
        ("AC7 Q-graphs avoid H(p,q,r), q >= 2", q_family_freeness),
        ("AC8 complement duality, randomized", complement_duality),
        ("AC9 enumeration counts", enumeration_self_check),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
