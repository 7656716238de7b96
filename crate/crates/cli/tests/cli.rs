use e8kit::emit::Emitted;
use e8kit::report::{Status, SuiteReport};
use e8kit_core::lie::LieAlgebra;
use e8kit_core::linalg::Scalar;
use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn tmp(name: &str) -> PathBuf {
    let d = Path::new(env!("CARGO_TARGET_TMPDIR")).join("e8kit-cli");
    std::fs::create_dir_all(&d).unwrap();
    d.join(name)
}

fn e8kit(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_e8kit")).args(args).env("E8KIT_CACHE_DIR", cache).output().unwrap()
}

fn shared_cache() -> PathBuf {
    tmp("cache")
}

fn run_suite(name: &str, seed: u64, threads: usize, out: &str) -> (i32, String) {
    let path = tmp(out);
    let o = e8kit(
        &["suite", name, "--seed", &seed.to_string(), "--threads", &threads.to_string(), "--out", path.to_str().unwrap()],
        &shared_cache(),
    );
    (o.status.code().unwrap(), std::fs::read_to_string(path).unwrap())
}

fn emit(selector: &str) -> Emitted {
    let path = tmp(&format!("emit-{selector}.json"));
    let o = e8kit(&["emit", selector, "--out", path.to_str().unwrap()], &shared_cache());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.ends_with('\n'));
    serde_json::from_str(&text).unwrap()
}

#[test]
fn ledger_suite_reports_dim_56() {
    let (code, text) = run_suite("ledger", 0, 1, "ledger.json");
    assert_eq!(code, 0);
    assert!(text.ends_with("}\n"));
    let r: SuiteReport = serde_json::from_str(&text).unwrap();
    let c = r.checks.iter().find(|c| c.id == "ledger.lemma-6.1-dim56").unwrap();
    assert_eq!((c.status, c.expected.clone(), c.got.clone()), (Status::Pass, Value::from(56), Value::from(56)));
    assert!(c.runtime_ms.is_none());
    assert_eq!(r.checks.len(), e8kit::ledger::ledger_ids().len());
}

#[test]
fn ledger_command_lists_every_claim() {
    let path = tmp("ledger-cmd.json");
    let o = e8kit(&["ledger", "--out", path.to_str().unwrap()], &shared_cache());
    assert_eq!(o.status.code(), Some(0));
    let l: e8kit::ledger::Ledger = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let ids: Vec<&str> = l.entries.iter().map(|e| e.id.as_str()).collect();
    assert_eq!(ids, e8kit::ledger::ledger_ids());
    for (id, n) in [("lemma-3.1-dim9", 9), ("lemma-4.1-dim18", 18), ("prop-5.1-dim28", 28), ("prop-3.3-dim69", 69)] {
        let e = l.get(id).unwrap();
        assert_eq!((e.expected, e.computed), (n, n));
    }
}

#[test]
fn jacobi_report_does_not_depend_on_thread_count() {
    let (c1, one) = run_suite("jacobi", 0, 1, "jacobi-1.json");
    let (c8, eight) = run_suite("jacobi", 0, 8, "jacobi-8.json");
    assert_eq!((c1, c8), (0, 0));
    assert_eq!(one, eight);
    let r: SuiteReport = serde_json::from_str(&one).unwrap();
    assert!(r.passed());
}

#[test]
fn w_variety_includes_one_lower_membership() {
    let (code, text) = run_suite("w-variety", 7, 4, "w7.json");
    assert_eq!(code, 0);
    let r: SuiteReport = serde_json::from_str(&text).unwrap();
    assert_eq!(r.seed, 7);
    let c = r.checks.iter().find(|c| c.id == "w-variety.one-lower-in-w").unwrap();
    assert_eq!(c.status, Status::Pass);
}

#[test]
fn reports_are_reproducible() {
    let (_, a) = run_suite("orbits", 3, 1, "orbits-a.json");
    let (_, b) = run_suite("orbits", 3, 1, "orbits-b.json");
    assert_eq!(a, b);
}

#[test]
fn f4_commutant_table_is_antisymmetric() {
    let e = emit("f4-commutant");
    let sc = &e.structure_constants;
    assert_eq!(sc.dim, 28);
    assert!(sc.entries.iter().all(|(i, j, _, _)| i < j));
    let g = e.algebra().unwrap();
    for i in 0..28 {
        assert!(g.bracket_basis(i, i).is_empty());
        for j in 0..28 {
            let neg: Vec<(usize, Scalar)> = g.bracket_basis(j, i).iter().map(|(k, c)| (*k, -c)).collect();
            assert_eq!(g.bracket_basis(i, j), &neg);
        }
    }
    assert!(g.jacobi_violation().is_none());
}

#[test]
fn fixed_56_table_is_block_diagonal() {
    let e = emit("fixed-56");
    assert_eq!(e.blocks, vec![28, 28]);
    assert_eq!(e.basis.len(), 56);
    let block = |i: usize| i / 28;
    for (i, j, k, _) in &e.structure_constants.entries {
        assert_eq!(block(*i), block(*j), "cross-ideal constant [{i}, {j}]");
        assert_eq!(block(*k), block(*i));
    }
    // the basis vectors are members of the σ, σ′-fixed subalgebra
    let h = e8kit_core::e8::fixed::e8_fixed_subalgebra(
        &[e8kit_core::e7::Involution::Sigma, e8kit_core::e7::Involution::SigmaPrime],
        false,
        false,
    );
    assert!(e.basis.iter().all(|v| h.contains_sparse(v)));
}

#[test]
fn e8_jacobi_replay_matches_in_memory_result() {
    let e = emit("e8");
    let replayed = e.algebra().unwrap();
    let g = e8kit_core::e8::algebra();
    assert_eq!(&replayed, g);
    let probes = e8kit_core::e8::probe_set();
    let n = probes.len();
    let mut replay_failures = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if !replayed.jacobi(&probes[i], &probes[j], &probes[k]).is_empty() {
                    replay_failures.push((i, j, k));
                }
            }
        }
    }
    assert_eq!(replay_failures, e8kit_core::e8::jacobi_probe_failures());
    assert!(replay_failures.is_empty());
}

#[test]
fn compact_table_is_real() {
    let e = emit("compact-e8");
    assert_eq!(e.structure_constants.dim, 248);
    assert!(e.structure_constants.entries.iter().all(|(_, _, _, c)| c.is_real()));
    let g = LieAlgebra::from_structure_constants(&e.structure_constants).unwrap();
    assert!(g.killing_matrix().is_real());
}

#[test]
fn usage_errors_exit_with_2() {
    let cache = shared_cache();
    assert_eq!(e8kit(&["suite", "bogus"], &cache).status.code(), Some(2));
    assert_eq!(e8kit(&["emit", "e9", "--out", tmp("x.json").to_str().unwrap()], &cache).status.code(), Some(2));
    assert_eq!(e8kit(&["suite", "ledger", "--out", "/nonexistent-dir/r.json"], &cache).status.code(), Some(2));
    assert_eq!(e8kit(&["suite", "ledger", "--threads", "0"], &cache).status.code(), Some(2));
    assert_eq!(e8kit(&["frobnicate"], &cache).status.code(), Some(2));
    assert_eq!(e8kit(&["--help"], &cache).status.code(), Some(0));
}

#[test]
fn suite_without_out_writes_stdout() {
    let o = e8kit(&["suite", "phi-generators"], &shared_cache());
    assert_eq!(o.status.code(), Some(0));
    let r: SuiteReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r.suite, "phi-generators");
}

#[test]
fn corrupt_cache_is_rebuilt() {
    let cache = tmp("corrupt-cache");
    std::fs::create_dir_all(&cache).unwrap();
    let file = cache.join(format!("e8-{}.json", e8kit::cache::fingerprint()));
    std::fs::write(&file, "{\"dim\": 248, \"entries\": []}\n").unwrap();
    let out = tmp("corrupt-ledger.json");
    let o = e8kit(&["suite", "compact", "--out", out.to_str().unwrap()], &cache);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&file).unwrap();
    let sc: e8kit_core::lie::StructureConstants = serde_json::from_str(&text).unwrap();
    assert!(!sc.entries.is_empty());
}
