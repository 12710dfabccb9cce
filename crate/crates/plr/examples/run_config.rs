//! Programmatic use of the run configuration: hashing, overrides and the subcommands.
use plr::cli::*;

fn main() -> plr::Result<()> {
    let cfg = RunConfig::from_json(
        r#"{ "lambda1": [1.0, 0.813211], "lambda2": [-1.0, 0.813211], "kind": "t", "n": 3,
             "Lambda0": "auto-critical:t",
             "grid": { "s_range": [0, 1], "t_range": [0, 0], "s_steps": 4, "t_steps": 1 } }"#,
    )?;
    println!("config sha256 {}", cfg.hash());
    let closure = cmd_closure(&cfg)?;
    println!("closure passed: {}", closure.passed);
    print!("{}", cmd_curve(&cfg)?.text);
    let ov = Overrides { n: Some(1), ..Overrides::default() };
    let base = ov.resolve()?;
    println!("defaults with n overridden: n = {}, hash {}", base.n, base.hash());
    Ok(())
}
