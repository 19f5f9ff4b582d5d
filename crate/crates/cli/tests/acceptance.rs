//! One PASS/FAIL line per acceptance criterion; exits non-zero on any failure.

use std::process::{Command, ExitCode};

use congruent::suite;
use congruent::Exec;

fn main() -> ExitCode {
    let mut failed = 0;
    for c in suite::verify_all(Exec::default()) {
        let tag = if c.pass() { "PASS" } else { "FAIL" };
        println!("{tag} criterion {:>2}: {} ({} checks)", c.id, c.title, c.checks.len());
        for k in c.checks.iter().filter(|k| !k.pass) {
            println!("       {k}");
        }
        failed += usize::from(!c.pass());
    }
    let out = Command::new(env!("CARGO_BIN_EXE_congruent")).arg("verify-all").env_remove("CONGRUENT_FORMAT").output();
    let (ok, detail) = match out {
        Ok(o) => (o.status.success(), format!("exit {:?}", o.status.code())),
        Err(e) => (false, e.to_string()),
    };
    println!("{} criterion 14: verify-all exits 0 ({detail})", if ok { "PASS" } else { "FAIL" });
    failed += usize::from(!ok);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
