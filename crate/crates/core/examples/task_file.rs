//! Driving the command pipeline from a task description, as the CLI does.

use serde_json::json;
use support_forge::cli::{run_task, RunOptions, TaskFile};
use support_forge::io::canonical_json;

fn main() -> support_forge::Result<()> {
    let task: TaskFile = serde_json::from_value(json!({
        "command": "realize",
        "ring": {"p": 2, "vars": [{"name": "x", "deg": 1}, {"name": "y", "deg": 1}], "f": ["x^2", "y^2"]},
        "params": {"D": 10, "w": 2, "e": 2},
        "args": {"target": ["x1 + x2"]}
    }))?;
    let outcome = run_task("realize", &task, &RunOptions::default())?;
    print!("{}", canonical_json(&outcome.report)?);
    eprintln!("exit code {}", outcome.exit_code);
    Ok(())
}
