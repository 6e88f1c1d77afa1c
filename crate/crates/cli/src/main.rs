mod json;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kinematica::ckgeom::{
    distance, exp_gen, project_to_model, region_svg, unproject, Generator, KappaPair, SigmaPoint,
};
use kinematica::clifford::{axis_vector, rotor, sandwich, Multivector, UnitAxis};
use kinematica::conformal::{
    claimed_table_diff, jacobi_residual, render_combination, structure_constants, ConformalTag,
    DiffStatus,
};
use kinematica::gencomplex::GenComplex;
use kinematica::kinclass::{
    classify_all, contract_named, contraction_graph, graph_to_dot, ContractionType, KinematicsName,
};
use kinematica::spin::{cover_to_so3, spin_exp, spin_exp_axis, SpinElement};
use kinematica::Error;
use serde_json::Value;

use json::{matrix, num, nums, Obj};

#[derive(Parser)]
#[command(
    name = "kinematica",
    version,
    about = "Two-parameter kinematics toolkit"
)]
struct Cli {
    /// Write output to a file instead of stdout
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Kappa {
    #[arg(long, allow_negative_numbers = true)]
    kappa1: f64,
    #[arg(long, allow_negative_numbers = true)]
    kappa2: f64,
}

impl Kappa {
    fn pair(self) -> KappaPair<f64> {
        KappaPair::new(self.kappa1, self.kappa2)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the 27 bracket structures and name their classes
    Classify,
    /// Contract a named kinematics
    Contract {
        #[arg(long)]
        from: String,
        #[arg(long = "type")]
        kind: String,
    },
    /// Contraction graph of the kinematical classes
    Graph {
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
    },
    /// One-parameter subgroup of a generator, with its spin lift
    Exp {
        #[command(flatten)]
        kappa: Kappa,
        #[arg(long)]
        generator: String,
        #[arg(long, allow_negative_numbers = true)]
        param: f64,
    },
    /// Central projection of a point (z,t,x) to the model plane
    Project {
        #[command(flatten)]
        kappa: Kappa,
        #[arg(long, allow_hyphen_values = true, value_parser = list::<3>)]
        point: [f64; 3],
    },
    /// Lift a model point back to the quadric
    Unproject {
        #[command(flatten)]
        kappa: Kappa,
        #[arg(long, allow_hyphen_values = true, value_parser = list::<2>)]
        w: [f64; 2],
    },
    /// Distance between two model points
    Distance {
        #[command(flatten)]
        kappa: Kappa,
        #[arg(long, allow_hyphen_values = true, value_parser = list::<2>)]
        w1: [f64; 2],
        #[arg(long, allow_hyphen_values = true, value_parser = list::<2>)]
        w2: [f64; 2],
    },
    /// Rotor sandwich rotation of a vector
    Rotate {
        #[command(flatten)]
        kappa: Kappa,
        #[arg(long, allow_hyphen_values = true, value_parser = list::<3>)]
        axis: [f64; 3],
        #[arg(long, allow_negative_numbers = true)]
        angle: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = list::<3>)]
        vector: [f64; 3],
    },
    /// Spin element of an axis rotation and its covered rotation
    Spin {
        #[command(flatten)]
        kappa: Kappa,
        #[arg(long, allow_hyphen_values = true, value_parser = list::<3>)]
        axis: [f64; 3],
        #[arg(long, allow_negative_numbers = true)]
        angle: f64,
    },
    /// Structure constants of the conformal algebra
    ConformalTable {
        #[command(flatten)]
        kappa: Kappa,
        /// Compare against the printed bracket table
        #[arg(long = "diff-paper")]
        diff_claimed: bool,
    },
    /// Model region of a geometry
    Region {
        #[command(flatten)]
        kappa: Kappa,
        /// Emit an SVG drawing
        #[arg(long)]
        svg: bool,
    },
}

fn list<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!("expected {N} comma-separated numbers"));
    }
    let mut out = [0.0; N];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p.parse().map_err(|_| format!("not a number: {p:?}"))?;
    }
    Ok(out)
}

enum Output {
    Json(Value),
    Text(String),
}

fn run(command: Command) -> Result<Output, Error> {
    Ok(match command {
        Command::Classify => Output::Json(classify()),
        Command::Contract { from, kind } => {
            let from: KinematicsName = from.parse()?;
            let kind: ContractionType = kind.parse()?;
            let to = contract_named(from, kind)?;
            Output::Json(Obj::new().put("to", to.ascii()).into())
        }
        Command::Graph { format } => {
            let edges = contraction_graph();
            match format {
                GraphFormat::Dot => Output::Text(graph_to_dot(&edges)),
                GraphFormat::Json => {
                    let nodes: Vec<Value> = KinematicsName::KINEMATICAL
                        .iter()
                        .map(|n| Value::from(n.ascii()))
                        .collect();
                    let edges: Vec<Value> = edges
                        .iter()
                        .map(|e| {
                            Obj::new()
                                .put("from", e.from.ascii())
                                .put("to", e.to.ascii())
                                .put("type", e.kind.label())
                                .into()
                        })
                        .collect();
                    Output::Json(Obj::new().put("nodes", nodes).put("edges", edges).into())
                }
            }
        }
        Command::Exp {
            kappa,
            generator,
            param,
        } => {
            let kp = kappa.pair();
            let g: Generator = generator.parse()?;
            let m = exp_gen(&kp, g, param);
            let s = spin_exp(&kp, g, param);
            Output::Json(
                Obj::new()
                    .put("generator", g.to_string())
                    .put("param", num(param))
                    .put("matrix", matrix(&m.0))
                    .put("spin", spin_json(&s))
                    .into(),
            )
        }
        Command::Project { kappa, point } => {
            let kp = kappa.pair();
            let p = SigmaPoint::new(point[0], point[1], point[2]);
            let m = project_to_model(&kp, &p)?;
            Output::Json(
                Obj::new()
                    .put("w", nums(&[m.w.re, m.w.im]))
                    .put("boundary", m.boundary)
                    .into(),
            )
        }
        Command::Unproject { kappa, w } => {
            let kp = kappa.pair();
            let s = unproject(&kp, GenComplex::new(w[0], w[1], kp.kappa2))?;
            Output::Json(Obj::new().put("point", nums(&[s.z, s.t, s.x])).into())
        }
        Command::Distance { kappa, w1, w2 } => {
            let kp = kappa.pair();
            let d = distance(
                &kp,
                GenComplex::new(w1[0], w1[1], kp.kappa2),
                GenComplex::new(w2[0], w2[1], kp.kappa2),
            )?;
            Output::Json(Obj::new().put("distance", num(d)).into())
        }
        Command::Rotate {
            kappa,
            axis,
            angle,
            vector,
        } => {
            let kp = kappa.pair();
            let n = UnitAxis::new(axis)?;
            let r = rotor(&kp, &n, angle);
            let image = sandwich(&r, &Multivector::vector(&kp, vector))?;
            Output::Json(
                Obj::new()
                    .put("rotor", nums(&r.0.coeffs))
                    .put("axis_vector", nums(&axis_vector(&kp, &n).vector_part()))
                    .put("image", nums(&image.vector_part()))
                    .into(),
            )
        }
        Command::Spin { kappa, axis, angle } => {
            let kp = kappa.pair();
            let n = UnitAxis::new(axis)?;
            let s = spin_exp_axis(&kp, n.n, angle);
            let r = cover_to_so3(&s)?;
            Output::Json(
                Obj::new()
                    .put("spin", spin_json(&s))
                    .put("rotation", matrix(&r.0))
                    .into(),
            )
        }
        Command::ConformalTable {
            kappa,
            diff_claimed,
        } => Output::Json(conformal_table(&kappa.pair(), diff_claimed)?),
        Command::Region { kappa, svg } => {
            let kp = kappa.pair();
            if svg {
                Output::Text(region_svg(&kp))
            } else {
                let (k1, k2) = (kp.kappa1, kp.kappa2);
                Output::Json(
                    Obj::new()
                        .put("kappa1", num(k1))
                        .put("kappa2", num(k2))
                        .put("bounded", k1 > 0.0 && k2 > 0.0)
                        .put("has_absolute", k1 < 0.0)
                        .put("null_cone", k2 <= 0.0)
                        .into(),
                )
            }
        }
    })
}

fn spin_json(s: &SpinElement<f64>) -> Value {
    Obj::new()
        .put("alpha", nums(&[s.alpha.re, s.alpha.im]))
        .put("beta", nums(&[s.beta.re, s.beta.im]))
        .into()
}

fn classify() -> Value {
    let rows = classify_all();
    let kinematical = rows.iter().filter(|r| r.kinematical).count();
    let mut classes: Vec<_> = rows
        .iter()
        .filter(|r| r.kinematical)
        .map(|r| r.canonical)
        .collect();
    classes.sort();
    classes.dedup();
    let triple = |t: kinematica::kinclass::BracketTriple| Value::from(vec![t.k, t.h, t.p]);
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            Obj::new()
                .put("triple", triple(r.triple))
                .put("kinematical", r.kinematical)
                .put("canonical", triple(r.canonical))
                .put("name", r.name.ascii())
                .into()
        })
        .collect();
    Obj::new()
        .put(
            "counts",
            Obj::new()
                .put("total", rows.len())
                .put("kinematical", kinematical)
                .put("classes", classes.len())
                .put("non_kinematical", rows.len() - kinematical),
        )
        .put("rows", rows)
        .into()
}

fn conformal_table(kp: &KappaPair<f64>, diff_claimed: bool) -> Result<Value, Error> {
    let c = structure_constants(kp)?;
    let mut brackets = Vec::new();
    for x in ConformalTag::ALL {
        for y in ConformalTag::ALL {
            if x >= y {
                continue;
            }
            let coeffs = &c[x.index()][y.index()];
            brackets.push(Value::from(
                Obj::new()
                    .put("x", x.label())
                    .put("y", y.label())
                    .put("coeffs", nums(coeffs))
                    .put("combination", render_combination(coeffs)),
            ));
        }
    }
    let basis: Vec<Value> = ConformalTag::ALL
        .iter()
        .map(|t| Value::from(t.label()))
        .collect();
    let mut out = Obj::new()
        .put("kappa1", num(kp.kappa1))
        .put("kappa2", num(kp.kappa2))
        .put("basis", basis)
        .put("brackets", brackets)
        .put("jacobi_residual", num(jacobi_residual(&c)));
    if diff_claimed {
        let diff = claimed_table_diff(kp)?;
        let count = |s: DiffStatus| diff.iter().filter(|d| d.status == s).count();
        let status = |s: DiffStatus| match s {
            DiffStatus::Match => "match",
            DiffStatus::Mismatch => "mismatch",
            DiffStatus::UndefinedSymbol => "undefined_symbol",
        };
        let entries: Vec<Value> = diff
            .iter()
            .filter(|d| d.status != DiffStatus::Match)
            .map(|d| {
                Obj::new()
                    .put("row", d.row.label())
                    .put("col", d.col.label())
                    .put("claimed", d.claimed.clone())
                    .put("computed", d.computed.clone())
                    .put("status", status(d.status))
                    .into()
            })
            .collect();
        out = out.put(
            "claimed_diff",
            Obj::new()
                .put("matches", count(DiffStatus::Match))
                .put("mismatches", count(DiffStatus::Mismatch))
                .put("undefined", count(DiffStatus::UndefinedSymbol))
                .put("entries", entries),
        );
    }
    Ok(out.into())
}

fn emit(path: Option<&PathBuf>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

fn fail(code: &str, message: &str) -> ExitCode {
    let line = Obj::new().put("error", code).put("message", message);
    eprintln!("{}", Value::from(line));
    ExitCode::from(1)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = match run(cli.command) {
        Ok(Output::Json(v)) => {
            let mut s = serde_json::to_string_pretty(&v).expect("serializable");
            s.push('\n');
            s
        }
        Ok(Output::Text(s)) => s,
        Err(e) => return fail(e.code(), &e.to_string()),
    };
    match emit(cli.output.as_ref(), &text) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail("IoError", &e.to_string()),
    }
}
