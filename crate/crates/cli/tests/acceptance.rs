//! Acceptance suite, CLI half: criterion 12 — sweep output is
//! byte-identical across runs and across worker counts.

use std::process::Command;

fn run(id: u32, name: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("criterion {id:2} PASS — {name}"),
        Err(msg) => {
            println!("criterion {id:2} FAIL — {name}: {msg}");
            panic!("criterion {id} failed: {msg}");
        }
    }
}

fn sweep_json(extra: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_leray"))
        .args(["verify", "--max-n", "25", "--max-m", "25", "--format", "json"])
        .args(extra)
        .output()
        .map_err(|e| format!("binary failed to run: {e}"))?;
    if out.status.code() != Some(0) {
        return Err(format!(
            "exit {:?}, stderr: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(out.stdout)
}

#[test]
fn criterion_12_sweep_output_is_deterministic() {
    run(
        12,
        "25x25 JSON sweep is byte-identical across runs and worker counts",
        || {
            let default_jobs = sweep_json(&[])?;
            let repeat = sweep_json(&[])?;
            let one_job = sweep_json(&["--jobs", "1"])?;
            let four_jobs = sweep_json(&["--jobs", "4"])?;
            if default_jobs.is_empty() {
                return Err("sweep produced no output".into());
            }
            if repeat != default_jobs {
                return Err("two identical runs differed".into());
            }
            if one_job != default_jobs {
                return Err("--jobs 1 differed from the default".into());
            }
            if four_jobs != default_jobs {
                return Err("--jobs 4 differed from the default".into());
            }
            let text = String::from_utf8(default_jobs)
                .map_err(|e| format!("sweep output is not utf-8: {e}"))?;
            let doc: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| format!("sweep output is not JSON: {e}"))?;
            if doc["failed"] != 0 {
                return Err(format!("sweep reported failures: {}", doc["failed"]));
            }
            Ok(())
        },
    );
}
