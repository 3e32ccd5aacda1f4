//! Acceptance criteria, one pass/fail line each.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use kfock::exact::{Exact, Ground};
use kfock::fockrep::relations::{verify_relation, Relation, RelationParams};
use kfock::fockrep::{commutator_ef, gamma_one_closed, verify_coefficient_oracles, verify_gamma};
use kfock::partitions::TieBreak;
use kfock::report::{ensure, first_failure, Check};
use kfock::shufflealg::{
    generator, k_element, verify_homomorphism, verify_k_commute, verify_order_independence,
    verify_wheel, ShuffleElement,
};
use kfock::suite::{self, run_suite, Suite, SuiteConfig};
use kfock::symfun::{BasisTables, MacdonaldTable};
use kfock::theta::{
    verify_c_ratio, verify_heisenberg_commute, verify_intertwining, verify_single_box, verify_theta,
};

fn params(n_max: usize) -> RelationParams {
    RelationParams {
        i_range: -2..=2,
        j_range: -2..=2,
        n_max,
        series_order: 8,
    }
}

fn relation(g: &Exact, rel: Relation, n_max: usize) -> Vec<Check> {
    verify_relation(g, rel, &params(n_max)).unwrap_or_else(|e| {
        vec![Check::run(
            format!("relation{}", rel.number()),
            rel.anchor(),
            || Err(e.to_string()),
        )]
    })
}

fn exchange(g: &Exact) -> Vec<Check> {
    let mut out = relation(g, Relation::EE, 5);
    out.extend(relation(g, Relation::FF, 5));
    out
}

fn commutators(g: &Exact) -> Vec<Check> {
    let mut out = relation(g, Relation::EF, 5);
    out.push(Check::run(
        "e0-f0-eigenvalue",
        "[e_0, f_0] is a constant",
        || {
            let r = commutator_ef(g, 0, 0, 5).map_err(|e| e.to_string())?;
            for (lam, ev) in &r.eigen {
                ensure(*ev == -g.box_weight(), || {
                    format!("{lam}: {}", g.render(ev))
                })?;
            }
            Ok(())
        },
    ));
    out.push(Check::run(
        "e0-f1-eigenvalue",
        "[e_0, f_1] shifts the constant by the box weights",
        || {
            let r = commutator_ef(g, 0, 1, 5).map_err(|e| e.to_string())?;
            for (lam, ev) in &r.eigen {
                ensure(*ev == gamma_one_closed(g, lam), || {
                    format!("{lam}: {}", g.render(ev))
                })?;
            }
            Ok(())
        },
    ));
    out
}

fn edge_local(g: &Exact) -> Vec<Check> {
    let mut out = relation(g, Relation::PsiE, 6);
    out.extend(relation(g, Relation::PsiF, 6));
    out
}

fn oracles(g: &Exact) -> Vec<Check> {
    // every coefficient out of a diagram of size <= 6 lands in size <= 7
    verify_coefficient_oracles(g, 7, -2..=2)
}

fn gammas(g: &Exact) -> Vec<Check> {
    (0..=3).map(|s| verify_gamma(g, s, 5)).collect()
}

fn k_family(g: &Exact) -> Vec<Check> {
    let mut out = Vec::new();
    for m in 1..=4 {
        for n in m..=5 - m {
            out.extend(verify_k_commute(g, m, n, 5));
        }
    }
    out
}

fn generators(g: &Exact) -> Vec<(String, ShuffleElement<<Exact as Ground>::F>)> {
    let mut gens: Vec<_> = (-1..=1).map(|r| (format!("x^{r}"), generator(r))).collect();
    gens.push(("K2".to_string(), k_element(g, 2).unwrap()));
    gens
}

fn representation(g: &Exact) -> Vec<Check> {
    let gens = generators(g);
    let mut out = Vec::new();
    for (a, f) in &gens {
        for (b, h) in &gens {
            out.push(verify_homomorphism(g, (a.as_str(), f), (b.as_str(), h), 4));
        }
        out.push(verify_order_independence(g, (a.as_str(), f), 4));
    }
    out
}

fn wheel(g: &Exact) -> Vec<Check> {
    verify_wheel(g, &[-2, -1, 0, 1, 2])
}

fn macdonald(g: &Exact) -> Vec<Check> {
    suite::macdonald(g, 5).unwrap_or_else(|e| {
        vec![Check::run("macdonald", "Macdonald polynomials", || {
            Err(e.to_string())
        })]
    })
}

fn theta(g: &Exact) -> Vec<Check> {
    let mut out = vec![verify_c_ratio(g, 6), verify_single_box(g, 6)];
    out.extend((1..=3).map(|n| verify_theta(g, n, 6)));
    out
}

fn heisenberg(g: &Exact) -> Vec<Check> {
    let mut out = verify_heisenberg_commute(g, 3, 5);
    let gq = g.qt();
    let tables = BasisTables::new(5);
    let table = MacdonaldTable::build(&gq, &tables, 5, TieBreak::ReverseLex).unwrap();
    out.extend((1..=3).map(|i| verify_intertwining(g, &tables, &table, i)));
    out
}

fn full_run(_: &Exact) -> Vec<Check> {
    let config = SuiteConfig::default();
    let mut out = Vec::new();
    let mut texts = Vec::new();
    for attempt in 1..=2 {
        let report = run_suite(Suite::All, &config);
        let check = Check::run(
            format!("run-all[{attempt}]"),
            "every suite at the defaults",
            || {
                let report = report.as_ref().map_err(|e| e.to_string())?;
                if let Some(c) = report.first_failure() {
                    return Err(format!(
                        "{}: {}",
                        c.id,
                        c.witness.clone().unwrap_or_default()
                    ));
                }
                ensure(report.elapsed < Duration::from_secs(600), || {
                    format!("took {:.1} s", report.elapsed.as_secs_f64())
                })?;
                texts.push(report.to_json(false).to_string());
                Ok(())
            },
        );
        out.push(check.with_note(match &report {
            Ok(r) => format!("{:.1} s", r.elapsed.as_secs_f64()),
            Err(_) => String::new(),
        }));
    }
    out.push(Check::run(
        "run-all-deterministic",
        "reports are byte-identical",
        || {
            ensure(texts.len() == 2 && texts[0] == texts[1], || {
                "the two reports differ".into()
            })
        },
    ));
    out
}

type Criterion = (&'static str, fn(&Exact) -> Vec<Check>);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("exchange relations for e and f, sizes <= 5", exchange),
        (
            "[e_a, f_b] diagonal with the psi eigenvalues, sizes <= 5",
            commutators,
        ),
        (
            "psi exchange relations edge by edge, sizes <= 6",
            edge_local,
        ),
        (
            "row-product and box-product coefficients agree, sizes <= 6",
            oracles,
        ),
        (
            "gamma_s for s in 0..=3 by both formulas and the action, sizes <= 5",
            gammas,
        ),
        ("K_m and K_n commute, m + n <= 5, sizes <= 5", k_family),
        (
            "shuffle action is a homomorphism and order independent, sizes <= 4",
            representation,
        ),
        ("wheel condition on triple products", wheel),
        (
            "Macdonald orthogonality, Pieri, single boxes and Newton",
            macdonald,
        ),
        (
            "renormalized K_n against Pieri coefficients, sizes <= 6",
            theta,
        ),
        (
            "Heisenberg generators commute and intertwine, sizes <= 5",
            heisenberg,
        ),
        (
            "full run at the defaults, under ten minutes and deterministic",
            full_run,
        ),
    ];
    let g = Exact::new();
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let checks = run(&g);
        let secs = start.elapsed().as_secs_f64();
        let notes: Vec<String> = checks
            .iter()
            .filter_map(|c| c.note.as_ref().map(|n| format!("{}: {n}", c.id)))
            .collect();
        let notes = if notes.is_empty() {
            String::new()
        } else {
            format!(" [{}]", notes.join("; "))
        };
        match first_failure(&checks) {
            None if !checks.is_empty() => {
                println!(
                    "PASS {:>2} {title} ({} checks, {secs:.1} s){notes}",
                    i + 1,
                    checks.len()
                );
            }
            failure => {
                failed += 1;
                let why = failure
                    .map(|c| format!("{}: {}", c.id, c.witness.clone().unwrap_or_default()))
                    .unwrap_or_else(|| "no checks ran".into());
                println!("FAIL {:>2} {title}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
