//! Command-line front end. [`run`] is the whole program; the binary only
//! forwards `std::env::args` and the standard streams.
//!
//! Exit codes: 0 on success, 1 when a property fails or a computation is
//! rejected, 2 when the arguments do not parse.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::diagram::diagram_of_object;
use crate::error::Error;
use crate::geometry::{stratum_dim, Dimensions};
use crate::hom::{delta_hom_vector, hom_indec, hom_leq, hom_obj};
use crate::lr::lr_coefficient;
use crate::objects::S2Object;
use crate::oracle::oracle_hom_dim;
use crate::order::{arc_leq, Poset};
use crate::partition::Partition;
use crate::reduction::{reduction_steps, Strategy};
use crate::verify::run_all;

#[derive(Parser, Debug)]
#[command(
    name = "arcorder",
    version,
    about = "Arc diagrams and degeneration orders for invariant subspaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every stratum of a type with α, crossings and dimension.
    Enumerate {
        #[arg(long)]
        beta: Partition,
        #[arg(long, default_value = "")]
        gamma: Partition,
        #[arg(long)]
        json: bool,
    },
    /// Write the Hasse diagram of a type as Graphviz DOT (`-` for stdout).
    Hasse {
        #[arg(long)]
        beta: Partition,
        #[arg(long, default_value = "")]
        gamma: Partition,
        #[arg(long)]
        dot: PathBuf,
    },
    /// Compare two objects of the same type in the arc and hom orders.
    Order {
        #[arg(long)]
        y: S2Object,
        #[arg(long)]
        z: S2Object,
    },
    /// A chain of down-moves from Z to Y.
    Reduce {
        #[arg(long)]
        y: S2Object,
        #[arg(long)]
        z: S2Object,
        #[arg(long, default_value = "canonical")]
        strategy: Strategy,
    },
    /// Stratum and orbit dimensions of an object.
    Dim {
        #[arg(long)]
        object: S2Object,
    },
    /// Hom dimensions from the table, and δH when the types agree.
    Hom {
        #[arg(long)]
        x: S2Object,
        #[arg(long)]
        y: S2Object,
    },
    /// Hom dimension from explicit matrices over F_p, next to the table value.
    Oracle {
        #[arg(long)]
        x: S2Object,
        #[arg(long)]
        y: S2Object,
        #[arg(long, default_value_t = 101)]
        prime: u64,
    },
    /// A Littlewood-Richardson coefficient c^β_{α,γ}.
    Lr {
        #[arg(long, default_value = "")]
        alpha: Partition,
        #[arg(long, default_value = "")]
        gamma: Partition,
        #[arg(long)]
        beta: Partition,
    },
    /// Run the property suite on every type with |β| <= N.
    Verify {
        #[arg(long = "beta-max")]
        beta_max: u32,
    },
}

enum Failure {
    Property(String),
    Compute(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn print_json(out: &mut dyn Write, value: &impl Serialize) -> std::io::Result<()> {
    // through Value so that keys come out sorted
    let v = serde_json::to_value(value).map_err(std::io::Error::other)?;
    let text = serde_json::to_string_pretty(&v).map_err(std::io::Error::other)?;
    writeln!(out, "{text}")
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Property(msg)) => {
            let _ = writeln!(err, "property failed: {msg}");
            1
        }
        Err(Failure::Compute(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "i/o error: {e}");
            1
        }
    }
}

#[derive(Serialize)]
struct Row {
    object: String,
    diagram: String,
    alpha: Partition,
    crossings: u64,
    dimension: i128,
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Enumerate { beta, gamma, json } => {
            if !beta.contains(&gamma) {
                return Err(Error::NotContained { beta, gamma }.into());
            }
            let poset = Poset::new(&beta, &gamma);
            let rows: Vec<Row> = poset
                .objects()
                .iter()
                .zip(poset.diagrams())
                .map(|(o, d)| Row {
                    object: o.to_string(),
                    diagram: d.to_string(),
                    alpha: o.alpha(),
                    crossings: d.crossings(),
                    dimension: stratum_dim(o),
                })
                .collect();
            if json {
                print_json(out, &rows)?;
            } else {
                for r in &rows {
                    writeln!(
                        out,
                        "{:>5}  x={:<2} alpha=({})  {}  [{}]",
                        r.dimension, r.crossings, r.alpha, r.object, r.diagram
                    )?;
                }
                writeln!(out, "{} strata", rows.len())?;
            }
        }
        Command::Hasse { beta, gamma, dot } => {
            if !beta.contains(&gamma) {
                return Err(Error::NotContained { beta, gamma }.into());
            }
            let poset = Poset::new(&beta, &gamma);
            let text = poset.to_dot();
            if dot.as_os_str() == "-" {
                write!(out, "{text}")?;
            } else {
                std::fs::write(&dot, text)?;
                writeln!(
                    out,
                    "wrote {} nodes and {} cover edges to {}",
                    poset.len(),
                    poset.hasse().len(),
                    dot.display()
                )?;
            }
        }
        Command::Order { y, z } => {
            let arc = arc_leq(&y, &z)?;
            let hom = hom_leq(&y, &z)?;
            print_json(
                out,
                &json!({"arc_leq": arc, "hom_leq": hom, "agree": arc == hom}),
            )?;
            if arc != hom {
                return Err(Failure::Property(format!("orders disagree on {y} vs {z}")));
            }
        }
        Command::Reduce { y, z, strategy } => {
            let steps = reduction_steps(&y, &z, strategy)?;
            print_json(out, &steps)?;
        }
        Command::Dim { object } => {
            let mut v =
                serde_json::to_value(Dimensions::of(&object)).map_err(std::io::Error::other)?;
            v["object"] = Value::String(object.to_string());
            v["diagram"] = Value::String(diagram_of_object(&object).to_string());
            print_json(out, &v)?;
        }
        Command::Hom { x, y } => {
            let mut table = BTreeMap::new();
            for a in x.summands() {
                for b in y.summands() {
                    table.insert(format!("[{a}, {b}]"), hom_indec(*a, *b));
                }
            }
            let delta = if x.object_type() == y.object_type() {
                let vec: BTreeMap<String, i64> = delta_hom_vector(&x, &y)?
                    .into_iter()
                    .map(|(k, v)| (k.to_string(), v))
                    .collect();
                json!(vec)
            } else {
                Value::Null
            };
            print_json(
                out,
                &json!({
                    "x": x.to_string(),
                    "y": y.to_string(),
                    "hom": hom_obj(&x, &y),
                    "hom_reverse": hom_obj(&y, &x),
                    "table": table,
                    "delta_hom": delta,
                }),
            )?;
        }
        Command::Oracle { x, y, prime } => {
            let oracle = oracle_hom_dim(&x, &y, prime)?;
            let table = hom_obj(&x, &y);
            print_json(
                out,
                &json!({"oracle": oracle, "table": table, "prime": prime, "agree": oracle == table}),
            )?;
            if oracle != table {
                return Err(Failure::Property(format!(
                    "oracle {oracle} vs table {table}"
                )));
            }
        }
        Command::Lr { alpha, gamma, beta } => {
            writeln!(out, "{}", lr_coefficient(&alpha, &gamma, &beta))?;
        }
        Command::Verify { beta_max } => {
            let checks = run_all(beta_max);
            let mut failed = Vec::new();
            for c in &checks {
                let status = if c.passed() { "PASS" } else { "FAIL" };
                writeln!(out, "{status}  {:<45} {} cases", c.name, c.cases)?;
                for f in &c.failures {
                    writeln!(out, "      {f}")?;
                }
                if !c.passed() {
                    failed.push(c.name);
                }
            }
            if !failed.is_empty() {
                return Err(Failure::Property(failed.join(", ")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["arcorder"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn enumerate_figure_type() {
        let (code, out, _) = call(&[
            "enumerate",
            "--beta",
            "4,3,3,2,1",
            "--gamma",
            "3,2,1,1",
            "--json",
        ]);
        assert_eq!(code, 0);
        let rows: Vec<Value> = serde_json::from_str(&out).unwrap();
        let mut dims: Vec<i64> = rows
            .iter()
            .map(|r| r["dimension"].as_i64().unwrap())
            .collect();
        dims.sort();
        assert_eq!(dims, vec![156, 157, 158, 158, 159, 159, 159, 159, 160, 160]);
    }

    #[test]
    fn enumerate_single_block() {
        let (code, out, _) = call(&["enumerate", "--beta", "2", "--gamma", "2", "--json"]);
        assert_eq!(code, 0);
        let rows: Vec<Value> = serde_json::from_str(&out).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0]["object"], "P0(2)");
        assert_eq!(rows[0]["dimension"], 2);
    }

    #[test]
    fn order_agrees() {
        let (code, out, _) = call(&[
            "order",
            "--y",
            "B(7,3)+B(6,2)+P2(5)+P0(4)+P1(1)",
            "--z",
            "B(6,3)+B(5,1)+P1(7)+P1(4)+P1(2)",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v, json!({"arc_leq": true, "hom_leq": true, "agree": true}));
        // keys are sorted
        assert!(out.find("agree").unwrap() < out.find("arc_leq").unwrap());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["dim", "--object", "B(3,3)"]).0, 2);
        assert_eq!(call(&["lr", "--beta", "1,2"]).0, 2);
        assert_eq!(call(&["bogus"]).0, 2);
        let (code, _, err) = call(&["reduce", "--y", "P1(2)+P1(1)", "--z", "P2(2)+P0(1)"]);
        assert_eq!(code, 1);
        assert!(err.contains("not below"));
        assert_eq!(
            call(&["oracle", "--x", "P1(1)", "--y", "P1(1)", "--prime", "9"]).0,
            1
        );
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn other_commands() {
        let (code, out, _) = call(&["reduce", "--y", "P2(2)+P0(1)", "--z", "P1(2)+P1(1)"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(
            v,
            json!([{"kind": "E", "points": [2, 1], "before": "P1(2)+P1(1)", "after": "P2(2)+P0(1)"}])
        );
        let (_, out, _) = call(&["dim", "--object", "P1(1)"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["subspace_orbit_dim"], 1);
        let (_, out, _) = call(&["hom", "--x", "B(5,2)", "--y", "B(4,2)"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["hom"], 9);
        assert_eq!(v["delta_hom"], Value::Null);
        let (code, out, _) = call(&["oracle", "--x", "B(5,2)", "--y", "B(4,2)", "--prime", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"oracle\": 9"));
        let (_, out, _) = call(&[
            "lr", "--alpha", "2,2", "--gamma", "2,2,1", "--beta", "3,3,2,1",
        ]);
        assert_eq!(out.trim(), "1");
        let (code, out, _) = call(&[
            "hasse", "--beta", "3,3,2,1", "--gamma", "2,2,1", "--dot", "-",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out.matches(" -> ").count(), 4);
        let (code, out, _) = call(&["verify", "--beta-max", "4"]);
        assert_eq!(code, 0, "{out}");
    }

    #[test]
    fn output_is_deterministic() {
        let a = call(&["enumerate", "--beta", "4,3,3,2,1", "--gamma", "3,2,1,1"]);
        let b = call(&["enumerate", "--beta", "4,3,3,2,1", "--gamma", "3,2,1,1"]);
        assert_eq!(a, b);
    }
}
