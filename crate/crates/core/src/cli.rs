//! Command-line front end. `run` is the whole program; `main` only wires it
//! to the process streams.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{cocenter, graded_basis, GradedBasis, RelationSet};
use crate::corner::{
    bimodule_generators, corner_generators, corner_presentation, quotient_lambda,
    CornerPresentation,
};
use crate::error::{Error, Result};
use crate::io::{
    module_text, module_to_json, parse_module_json, parse_quiver_file, rational_json,
    to_json_string, QuiverFile,
};
use crate::linalg::rational_to_string;
use crate::modrep::{
    check_relations, generated_by_framing, induce_module, invariant_fingerprint, FramedModule,
    ModuleRep,
};
use crate::poly::{
    buchberger, nilpotent_witness_search, parse_polynomial_list, MonomialOrder, Polynomial, Ring,
    WitnessSearch, DEFAULT_SEED, DEFAULT_STEP_BUDGET,
};
use crate::quiver::{delta, delta_k, DimensionVector, DynkinType, Path, Quiver};
use crate::repscheme::{
    build_acircledast, build_astar, default_cycle_bound, lbp_generators, rep_ideal, RepCoordinates,
};

#[derive(Parser, Debug)]
#[command(name = "quiverkit", version, about = "Quivers with relations, exactly")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct Input {
    /// Quiver file
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Highest degree computed or verified
    #[arg(long, default_value_t = 6)]
    cutoff: usize,
}

#[derive(Args, Debug)]
struct ModuleInput {
    #[command(flatten)]
    input: Input,
    /// Module as JSON
    #[arg(long, value_name = "FILE")]
    module: PathBuf,
}

#[derive(Args, Debug)]
struct Bounds {
    /// Longest traced cycle (default: λ if finite, else (Σ_I v_i)²)
    #[arg(long)]
    cycle_bound: Option<usize>,
    /// Longest framing-to-framing path (default: the cycle bound)
    #[arg(long)]
    path_bound: Option<usize>,
}

#[derive(Args, Debug)]
struct PolyInput {
    /// Polynomial list, one per line; with --rep, a quiver file with a dimension line
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Use the representation ideal of the quiver file
    #[arg(long)]
    rep: bool,
    #[arg(long, default_value = "degrevlex")]
    order: String,
    /// Buchberger step budget
    #[arg(long, default_value_t = DEFAULT_STEP_BUDGET)]
    steps: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degreewise basis of the quotient algebra
    Basis(Input),
    /// Degreewise dimensions of A/[A,A]
    Cocenter(Input),
    /// Generators of the cornered algebra e_H A e_H
    Corner(Input),
    /// Truncated presentation of the cornered algebra
    CornerPresent(Input),
    /// Generators of A e_H as a right module
    BimoduleGens(Input),
    /// Trace and entry invariants at the file's dimension vector
    Invariants {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Ideal of the representation scheme at the file's dimension vector
    RepIdeal {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "degrevlex")]
        order: String,
    },
    /// Reduced Gröbner basis
    Groebner(PolyInput),
    /// Search for a nilpotent element of the quotient ring
    Nilwitness {
        #[command(flatten)]
        poly: PolyInput,
        #[arg(long, default_value_t = 3)]
        max_deg: u32,
        #[arg(long, default_value_t = 4)]
        max_pow: u32,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Normal-form budget
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Check a module against the relations
    CheckModule(ModuleInput),
    /// Induce a module over A from one over the corner presentation
    Induce {
        #[command(flatten)]
        module: ModuleInput,
        /// Largest truncation degree tried
        #[arg(long, default_value_t = 16)]
        budget: usize,
    },
    /// Values of the invariants on a module
    Fingerprint {
        #[command(flatten)]
        module: ModuleInput,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Framed stability: is the module generated by its framing part
    Stability(ModuleInput),
    /// Minimal imaginary root of an affine diagram
    Delta {
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        rank: usize,
        /// Drop the affine vertex
        #[arg(long)]
        restrict: bool,
    },
    /// Add every arrow from K into the J vertex as a relation
    Astar(Input),
    /// Quotient of A* by the framing vertices
    Acircledast(Input),
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = std::result::Result<(Value, String), Failure>;

/// Run the program; returns the exit code (0 ok, 1 domain error, 2 usage, 3 budget).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok((value, text)) => {
            let s = match cli.format {
                Format::Json => to_json_string(&value),
                Format::Text => text,
            };
            let _ = out.write_all(s.as_bytes());
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_budget() {
                3
            } else {
                1
            }
        }
    }
}

fn read(path: &PathBuf) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load(input: &Input) -> std::result::Result<QuiverFile, Failure> {
    Ok(parse_quiver_file(&read(&input.input)?)?)
}

fn load_module(q: &Quiver, path: &PathBuf) -> std::result::Result<ModuleRep, Failure> {
    Ok(parse_module_json(Arc::new(q.clone()), &read(path)?)?)
}

fn dimension(file: &QuiverFile) -> Result<DimensionVector> {
    file.dimension()
        .cloned()
        .ok_or_else(|| Error::Module("the quiver file has no `dimension` line".into()))
}

fn order(s: &str) -> std::result::Result<MonomialOrder, Failure> {
    MonomialOrder::parse(s).ok_or_else(|| Failure::Usage(format!("unknown monomial order `{s}`")))
}

/// Graded basis deep enough for corner computations through `cutoff`.
fn corner_basis(file: &QuiverFile, cutoff: usize) -> Result<GradedBasis> {
    let lambda = quotient_lambda(&file.quiver, &file.relations)?;
    graded_basis(&file.quiver, &file.relations, cutoff.max(lambda + 2))
}

fn paths_json(q: &Quiver, paths: &[Path]) -> Value {
    Value::Array(
        paths
            .iter()
            .map(|p| json!({ "degree": p.weight(q), "path": p.display(q).to_string() }))
            .collect(),
    )
}

fn quiver_json(q: &Quiver, rels: &RelationSet) -> Value {
    let vertices: Vec<Value> = q
        .vertices()
        .iter()
        .map(|v| json!({ "name": v.name, "tag": v.tag.as_str() }))
        .collect();
    let arrows: Vec<Value> = q
        .arrows()
        .iter()
        .map(|a| {
            json!({
                "name": a.name,
                "source": q.vertex(a.source).name,
                "target": q.vertex(a.target).name,
                "weight": a.weight,
            })
        })
        .collect();
    json!({ "arrows": arrows, "relations": relation_strings(q, rels), "vertices": vertices })
}

fn relation_strings(q: &Quiver, rels: &RelationSet) -> Vec<String> {
    rels.relations()
        .iter()
        .map(|r| r.display(q).to_string())
        .collect()
}

fn polys_json(ps: &[Polynomial]) -> Value {
    Value::Array(ps.iter().map(|p| Value::String(p.to_string())).collect())
}

/// `vars` line plus one polynomial per line, readable by `groebner --in`.
fn polys_text(ring: &Ring, ps: &[Polynomial]) -> String {
    let mut s = format!("vars {}\n", ring.names().join(" "));
    for p in ps {
        let _ = writeln!(s, "{p}");
    }
    s
}

fn load_ideal(p: &PolyInput) -> std::result::Result<(Arc<Ring>, Vec<Polynomial>), Failure> {
    let ord = order(&p.order)?;
    let text = read(&p.input)?;
    if p.rep {
        let file = parse_quiver_file(&text)?;
        let (_, ideal) = rep_ideal(&file.quiver, &file.relations, &dimension(&file)?)?;
        let ideal = ideal.with_order(ord)?;
        let gens = ideal.nonzero_generators();
        Ok((ideal.ring, gens))
    } else {
        Ok(parse_polynomial_list(&text, ord)?)
    }
}

fn bounds(
    file: &QuiverFile,
    v: &DimensionVector,
    b: &Bounds,
    cutoff: usize,
) -> Result<(usize, usize)> {
    let cycle = match b.cycle_bound {
        Some(c) => c,
        None => {
            let basis = graded_basis(&file.quiver, &file.relations, cutoff)?;
            default_cycle_bound(&file.quiver, v, basis.lambda())
        }
    };
    Ok((cycle, b.path_bound.unwrap_or(cycle)))
}

fn presentation(file: &QuiverFile, cutoff: usize) -> Result<(GradedBasis, CornerPresentation)> {
    let b = corner_basis(file, cutoff)?;
    let gens = corner_generators(&b, cutoff)?;
    let pres = corner_presentation(&b, &gens, cutoff)?;
    Ok((b, pres))
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Basis(input) => {
            let file = load(&input)?;
            let b = graded_basis(&file.quiver, &file.relations, input.cutoff)?;
            let q = &file.quiver;
            let mut text = String::new();
            let mut bases = Vec::new();
            for (d, dim) in b.dims().into_iter().enumerate() {
                let names: Vec<String> = b
                    .basis(d)?
                    .iter()
                    .map(|p| p.display(q).to_string())
                    .collect();
                let _ = writeln!(text, "{d}: {dim}  {}", names.join(" "));
                bases.push(names);
            }
            if let Some(l) = b.lambda() {
                let _ = writeln!(text, "finite, top degree {l}, total {}", b.total_dim());
            }
            let value = json!({
                "basis": bases,
                "cutoff": b.cutoff(),
                "degree_dims": b.dims(),
                "finite": b.is_finite(),
                "lambda": b.lambda(),
            });
            Ok((value, text))
        }
        Command::Cocenter(input) => {
            let file = load(&input)?;
            let b = graded_basis(&file.quiver, &file.relations, input.cutoff)?;
            let c = cocenter(&b)?;
            let text = c
                .degree_dims
                .iter()
                .enumerate()
                .map(|(d, n)| format!("{d}: {n}\n"))
                .collect();
            Ok((json!({ "degree_dims": c.degree_dims }), text))
        }
        Command::Corner(input) => {
            let file = load(&input)?;
            let b = corner_basis(&file, input.cutoff)?;
            let g = corner_generators(&b, input.cutoff)?;
            let q = &file.quiver;
            let mut text = format!("lambda {}\n", g.lambda);
            for p in &g.generators {
                let _ = writeln!(text, "{}  (degree {})", p.display(q), p.weight(q));
            }
            let value = json!({
                "generators": paths_json(q, &g.generators),
                "lambda": g.lambda,
                "verified_through": g.verified_through,
            });
            Ok((value, text))
        }
        Command::CornerPresent(input) => {
            let file = load(&input)?;
            let (b, pres) = presentation(&file, input.cutoff)?;
            let q = b.quiver();
            let images: serde_json::Map<String, Value> = pres
                .quiver
                .arrows()
                .iter()
                .zip(&pres.arrow_images)
                .map(|(a, p)| (a.name.clone(), Value::String(p.display(q).to_string())))
                .collect();
            let mut text = format!("# {}\n", pres.completeness());
            for (a, p) in pres.quiver.arrows().iter().zip(&pres.arrow_images) {
                let _ = writeln!(text, "# {} = {}", a.name, p.display(q));
            }
            text.push_str(
                &QuiverFile::new(pres.quiver.clone(), pres.relations.clone()).to_string(),
            );
            let mut value = quiver_json(&pres.quiver, &pres.relations);
            value["completeness"] = json!(pres.completeness());
            value["images"] = Value::Object(images);
            Ok((value, text))
        }
        Command::BimoduleGens(input) => {
            let file = load(&input)?;
            let b = corner_basis(&file, input.cutoff)?;
            let g = bimodule_generators(&b, input.cutoff)?;
            let q = &file.quiver;
            let mut text = format!("lambda {}, r = {}\n", g.lambda, g.r());
            for p in &g.generators {
                let _ = writeln!(text, "{}", p.display(q));
            }
            let value = json!({
                "generators": paths_json(q, &g.generators),
                "lambda": g.lambda,
                "r": g.r(),
                "verified_through": g.verified_through,
            });
            Ok((value, text))
        }
        Command::Invariants { input, bounds: bd } => {
            let file = load(&input)?;
            let v = dimension(&file)?;
            let (cb, pb) = bounds(&file, &v, &bd, input.cutoff)?;
            let coords = RepCoordinates::new(&file.quiver, &v)?;
            let gens = lbp_generators(&coords, cb, pb)?;
            let mut text = String::new();
            let mut list = Vec::new();
            for g in &gens {
                let name = g.describe(&file.quiver);
                let _ = writeln!(text, "{name} = {}", g.polynomial);
                list.push(json!({ "generator": name, "polynomial": g.polynomial.to_string() }));
            }
            Ok((
                json!({ "cycle_bound": cb, "generators": list, "path_bound": pb }),
                text,
            ))
        }
        Command::RepIdeal { input, order: o } => {
            let file = load(&input)?;
            let (_, ideal) = rep_ideal(&file.quiver, &file.relations, &dimension(&file)?)?;
            let ideal = ideal.with_order(order(&o)?)?;
            let gens = ideal.nonzero_generators();
            let value = json!({
                "generators": polys_json(&gens),
                "order": ideal.ring.order().as_str(),
                "variables": ideal.ring.names(),
            });
            Ok((value, polys_text(&ideal.ring, &gens)))
        }
        Command::Groebner(p) => {
            let (ring, gens) = load_ideal(&p)?;
            let gb = buchberger(&ring, &gens, p.steps)?;
            let value = json!({
                "basis": polys_json(gb.basis()),
                "order": ring.order().as_str(),
                "variables": ring.names(),
            });
            Ok((value, polys_text(&ring, gb.basis())))
        }
        Command::Nilwitness {
            poly,
            max_deg,
            max_pow,
            seed,
            budget,
        } => {
            let (ring, gens) = load_ideal(&poly)?;
            let gb = buchberger(&ring, &gens, poly.steps)?;
            let mut opts = WitnessSearch::new(max_deg, max_pow);
            opts.seed = seed;
            if let Some(b) = budget {
                opts.budget = b;
            }
            match nilpotent_witness_search(&gb, &opts)? {
                Some(w) => Ok((
                    json!({ "witness": { "f": w.f.to_string(), "k": w.k } }),
                    format!("f = {}\nk = {}\n", w.f, w.k),
                )),
                None => Ok((json!({ "witness": null }), "none within bounds\n".into())),
            }
        }
        Command::CheckModule(mi) => {
            let file = load(&mi.input)?;
            let m = load_module(&file.quiver, &mi.module)?;
            let check = check_relations(&m, &file.relations)?;
            let violated: Vec<String> = relation_strings(&file.quiver, &file.relations)
                .into_iter()
                .zip(&check.residuals)
                .filter(|(_, r)| !r.is_zero())
                .map(|(s, _)| s)
                .collect();
            let mut text = format!("{}\n", if check.is_valid() { "valid" } else { "invalid" });
            for r in &violated {
                let _ = writeln!(text, "violated: {r}");
            }
            Ok((
                json!({ "valid": check.is_valid(), "violated": violated }),
                text,
            ))
        }
        Command::Induce { module: mi, budget } => {
            let file = load(&mi.input)?;
            let b = corner_basis(&file, mi.input.cutoff.max(budget))?;
            let gens = corner_generators(&b, mi.input.cutoff)?;
            let pres = corner_presentation(&b, &gens, mi.input.cutoff)?;
            let bim = bimodule_generators(&b, mi.input.cutoff)?;
            let vh = load_module(&pres.quiver, &mi.module)?;
            let v = induce_module(&vh, &pres, &bim, &b, budget)?;
            Ok((module_to_json(&v), module_text(&v)))
        }
        Command::Fingerprint {
            module: mi,
            bounds: bd,
        } => {
            let file = load(&mi.input)?;
            let m = load_module(&file.quiver, &mi.module)?;
            let (cb, pb) = bounds(&file, m.dims(), &bd, mi.input.cutoff)?;
            let coords = RepCoordinates::new(&file.quiver, m.dims())?;
            let gens = lbp_generators(&coords, cb, pb)?;
            let values = invariant_fingerprint(&m, &gens)?;
            let mut text = String::new();
            let mut list = Vec::new();
            for (g, x) in gens.iter().zip(&values) {
                let name = g.describe(&file.quiver);
                let _ = writeln!(text, "{name} = {}", rational_to_string(x));
                list.push(json!({ "generator": name, "value": rational_json(x) }));
            }
            Ok((json!({ "fingerprint": list }), text))
        }
        Command::Stability(mi) => {
            let file = load(&mi.input)?;
            let m = load_module(&file.quiver, &mi.module)?;
            if !check_relations(&m, &file.relations)?.is_valid() {
                return Err(Error::Module("module violates the relations".into()).into());
            }
            let total = m.dims().total();
            let generated = generated_by_framing(&FramedModule::new(m.clone())?, total + 1)?;
            let mut value = json!({ "generated_by_framing": generated });
            let mut text = format!("generated by framing: {generated}\n");
            if let Some(z) = &file.stability {
                let pairing: i64 =
                    z.0.iter()
                        .zip(&m.dims().0)
                        .map(|(a, &b)| a * b as i64)
                        .sum();
                value["stability_pairing"] = json!(pairing);
                let _ = writeln!(text, "stability pairing: {pairing}");
            }
            Ok((value, text))
        }
        Command::Delta {
            kind,
            rank,
            restrict,
        } => {
            let ty = DynkinType::parse(&kind)
                .ok_or_else(|| Failure::Usage(format!("unknown type `{kind}`")))?;
            let d = if restrict {
                delta_k(ty, rank)?
            } else {
                delta(ty, rank)?
            };
            let text =
                d.0.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
                    + "\n";
            Ok((json!(d.0), text))
        }
        Command::Astar(input) => {
            let file = load(&input)?;
            let astar = build_astar(&file.quiver, &file.relations)?;
            let mut out = QuiverFile::new(file.quiver.clone(), astar.clone());
            out.dimensions = file.dimensions.clone();
            Ok((quiver_json(&file.quiver, &astar), out.to_string()))
        }
        Command::Acircledast(input) => {
            let file = load(&input)?;
            let astar = build_astar(&file.quiver, &file.relations)?;
            let (q, rels) = build_acircledast(&file.quiver, &astar)?;
            let text = QuiverFile::new(q.clone(), rels.clone()).to_string();
            Ok((quiver_json(&q, &rels), text))
        }
    }
}
