//! Acceptance criteria. Each prints one `PASS`/`FAIL` line; any failure exits nonzero.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;

use vistab::cli::generator_family;
use vistab::grothendieck::VirtualRep;
use vistab::irreps::{enumerate_irreps, IrrepLabel};
use vistab::oracles::{count_injections_bruteforce, pieri_oracle_check};
use vistab::partition::partitions_up_to;
use vistab::qfunc::{gl_order, QPoly};
use vistab::vi::{
    dim_polynomial_module, free_module_dim_symbolic, free_module_level, injection_count_formula,
    injection_count_poly, module_level, stable_counts, stable_multiplicities, VIModuleSpec,
};

fn report(id: u32, name: &str, budget: Duration, start: Instant, failures: &[String]) -> bool {
    let elapsed = start.elapsed();
    let in_time = elapsed <= budget;
    let ok = failures.is_empty() && in_time;
    println!(
        "{} criterion {id}: {name} ({:.2}s, budget {}s){}",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs(),
        match (failures.first(), in_time) {
            (Some(f), _) => format!(": {} failure(s), first: {f}", failures.len()),
            (None, false) => ": over budget".to_string(),
            (None, true) => String::new(),
        }
    );
    ok
}

fn rat(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

fn criterion_1_pieri_equivalence() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0;
    for lambda in partitions_up_to(6) {
        for r in 0..=4 {
            cases += 1;
            match pieri_oracle_check(&lambda, r) {
                Ok(true) => {}
                Ok(false) => failures.push(format!("s_{lambda} h_{r}")),
                Err(e) => failures.push(format!("s_{lambda} h_{r}: {e}")),
            }
        }
    }
    assert_eq!(cases, 30 * 5);
    report(1, "Pieri rule equals tableau expansion", Duration::from_secs(30), start, &failures)
}

fn criterion_2_sum_of_squares() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    for q in 2u64..=5 {
        for n in 1u32..=4 {
            let sum: BigInt = enumerate_irreps(n, q)
                .iter()
                .map(|l| {
                    let d = l.dim_at(q);
                    &d * &d
                })
                .sum();
            let order = gl_order(n, &BigInt::from(q));
            if sum != order {
                failures.push(format!("n={n} q={q}: {sum} vs {order}"));
            }
        }
    }
    report(2, "sum of squared dimensions equals group order", Duration::from_secs(60), start, &failures)
}

fn criterion_3_brute_force_grounding() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases: Vec<(u32, u32, u64)> = Vec::new();
    for p in [2u64, 3] {
        for m in 0..=2 {
            for n in 0..=4 {
                cases.push((m, n, p));
            }
        }
    }
    cases.push((3, 4, 2));
    for (m, n, p) in cases {
        match count_injections_bruteforce(m, n, p) {
            Ok(c) if BigInt::from(c) == injection_count_formula(m, n, p) => {}
            Ok(c) => failures.push(format!("m={m} n={n} p={p}: {c}")),
            Err(e) => failures.push(format!("m={m} n={n} p={p}: {e}")),
        }
    }
    for (n, order) in [(2, 6u64), (3, 168)] {
        match count_injections_bruteforce(n, n, 2) {
            Ok(c) if c == order => {}
            other => failures.push(format!("|GL_{n}(F_2)| = {other:?}")),
        }
    }
    report(3, "brute-force injection counts match formula", Duration::from_secs(60), start, &failures)
}

fn criterion_4_free_module_dimension() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    for q in [2u64, 3] {
        for m in 0..=3 {
            for n in m..=6 {
                let v = free_module_level(m, n, q);
                let expected = injection_count_formula(m, n, q);
                let symbolic = v.dim_symbolic().map(|p| p.eval_int(&BigInt::from(q)));
                if v.dim_at(q) != expected || symbolic != Ok(rat(expected.clone())) {
                    failures.push(format!("m={m} n={n} q={q}"));
                }
            }
        }
    }
    for m in 0..=3 {
        for n in m..=6 {
            let target = injection_count_poly(m, n);
            let power = |k: u32| QPoly::monomial(rat(1.into()), k as usize);
            let direct = (0..m).fold(QPoly::one(), |acc, i| acc * (power(n) - power(i)));
            match free_module_dim_symbolic(m, n) {
                Ok(p) if p == target && p == direct => {}
                Ok(p) => failures.push(format!("m={m} n={n}: {p}")),
                Err(e) => failures.push(format!("m={m} n={n}: {e}")),
            }
        }
    }
    report(4, "free-module dimension identity", Duration::from_secs(60), start, &failures)
}

fn spec_family() -> Vec<(VIModuleSpec, u64)> {
    let mut out = Vec::new();
    for q in [2u64, 3] {
        for gens in generator_family(3, 3) {
            out.push((VIModuleSpec::new(gens), q));
        }
    }
    out
}

fn criterion_5_representation_stability() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    let family = spec_family();
    assert_eq!(family.len(), 2 * 34);
    for (spec, q) in family {
        let r = match stable_multiplicities(&spec, q) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{spec} q={q}: {e}"));
                continue;
            }
        };
        for n in r.onset..=r.onset + 5 {
            if stable_counts(&module_level(&spec, n, q)) != r.stable {
                failures.push(format!("{spec} q={q}: changes at n={n}"));
            }
        }
        if r.weight > spec.max_generator() {
            failures.push(format!("{spec} q={q}: weight {}", r.weight));
        }
    }
    report(5, "stable multiplicities persist from onset", Duration::from_secs(120), start, &failures)
}

fn criterion_6_dimension_polynomial() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (spec, q) in spec_family() {
        let weight = match stable_multiplicities(&spec, q) {
            Ok(r) => r.weight,
            Err(e) => {
                failures.push(format!("{spec} q={q}: {e}"));
                continue;
            }
        };
        let (p, onset) = match dim_polynomial_module(&spec, q) {
            Ok(x) => x,
            Err(e) => {
                failures.push(format!("{spec} q={q}: {e}"));
                continue;
            }
        };
        if p.degree().is_some_and(|d| d as u32 > weight) {
            failures.push(format!("{spec} q={q}: degree exceeds weight {weight}"));
        }
        for n in onset..=onset + 5 {
            let direct = module_level(&spec, n, q).dim_at(q);
            if p.eval_int(&BigInt::from(q).pow(n)) != rat(direct) {
                failures.push(format!("{spec} q={q}: P(q^{n}) differs"));
            }
        }
    }
    let t = QPoly::x();
    let golden = [
        (vec![1], 2u64, &t - &QPoly::one()),
        (vec![2], 2, (&t - &QPoly::one()) * (&t - &QPoly::from_int(2))),
        (vec![2], 3, (&t - &QPoly::one()) * (&t - &QPoly::from_int(3))),
    ];
    for (gens, q, want) in golden {
        match dim_polynomial_module(&VIModuleSpec::new(gens.clone()), q) {
            Ok((p, _)) if p == want => {}
            other => failures.push(format!("golden {gens:?} q={q}: {other:?}")),
        }
    }
    report(6, "dimension polynomial matches direct dimensions", Duration::from_secs(60), start, &failures)
}

fn criterion_7_frobenius_shadow() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    for q in [2u64, 3] {
        let by_norm: Vec<Vec<IrrepLabel>> = (0..=6).map(|n| enumerate_irreps(n, q)).collect();
        for nu in by_norm[..=3].iter().flatten() {
            let base = nu.norm();
            for r in 0..=3 {
                let induced = VirtualRep::irreducible(nu.clone()).times_trivial(r);
                for mu in &by_norm[(base + r) as usize] {
                    let invariants = VirtualRep::irreducible(mu.clone())
                        .h_invariants(base)
                        .expect("level within range");
                    if induced.multiplicity(mu) != invariants.multiplicity(nu) {
                        failures.push(format!("nu={nu} mu={mu} r={r} q={q}"));
                    }
                }
            }
        }
    }
    report(7, "induction and invariants multiplicities agree", Duration::from_secs(60), start, &failures)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn run_json(args: &[&str]) -> (Option<i32>, serde_json::Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_vistab"))
        .args(args)
        .env_remove("VISTAB_HORIZON")
        .output()
        .expect("binary runs");
    let text = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(&text).unwrap_or(serde_json::Value::Null);
    (out.status.code(), value, text)
}

fn criterion_8_cli_contract() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut expect = |cond: bool, what: &str| {
        if !cond {
            failures.push(what.to_string());
        }
    };

    let (code, v, text) = run_json(&["stabilize", "--gens", "1", "--q", "2", "--format", "json"]);
    expect(code == Some(0), "stabilize exit status");
    expect(text == golden("stabilize_gens1_q2.json"), "stabilize bytes");
    expect(v["weight"] == 1, "stabilize weight 1");
    expect(v["onset"].is_u64(), "stabilize onset");
    expect(v["stable"].as_array().map(Vec::len) == Some(2), "stabilize two labels");
    expect(v["dim_poly_T"] == serde_json::json!(["-1/1", "1/1"]), "stabilize T - 1");

    let (code, v, text) = run_json(&["enumerate", "--level", "2", "--q", "2", "--format", "json"]);
    expect(code == Some(0), "enumerate exit status");
    expect(text == golden("enumerate_level2_q2.json"), "enumerate bytes");
    let dims: Vec<&str> = v["irreps"]
        .as_array()
        .map(|a| a.iter().filter_map(|i| i["dim"].as_str()).collect())
        .unwrap_or_default();
    expect(dims == ["1", "2", "1"], "enumerate dims 1,2,1");
    expect(v["sum_of_squares"] == "6" && v["group_order"] == "6", "enumerate sum 6");
    expect(v["verdict"] == "PASS", "enumerate PASS");

    let (code, v, text) =
        run_json(&["decompose", "--gen", "3", "--level", "2", "--q", "2", "--format", "json"]);
    expect(code == Some(0), "decompose exit status");
    expect(text == golden("decompose_gen3_level2_q2.json"), "decompose bytes");
    expect(v["zero_module"] == true, "decompose zero module notice");

    let (code, v, _) = run_json(&["verify", "--format", "json"]);
    expect(code == Some(0), "verify exit status");
    expect(v["verdict"] == "PASS", "verify PASS");

    report(8, "CLI examples and verify", Duration::from_secs(120), start, &failures)
}

fn main() {
    let criteria: [fn() -> bool; 8] = [
        criterion_1_pieri_equivalence,
        criterion_2_sum_of_squares,
        criterion_3_brute_force_grounding,
        criterion_4_free_module_dimension,
        criterion_5_representation_stability,
        criterion_6_dimension_polynomial,
        criterion_7_frobenius_shadow,
        criterion_8_cli_contract,
    ];
    let mut failed = 0;
    for (i, criterion) in criteria.iter().enumerate() {
        match std::panic::catch_unwind(criterion) {
            Ok(true) => {}
            Ok(false) => failed += 1,
            Err(_) => {
                println!("FAIL criterion {}: panicked", i + 1);
                failed += 1;
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
