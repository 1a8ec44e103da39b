use crate::{Cli, Command, Functor, Sample, Via};
use posetlab::intres;
use posetlab::io;
use posetlab::io::json::{GldimJson, SCHEMA_VERSION};
use posetlab::pmod::{self, split_interval_summands};
use posetlab::poset::expand_diagram;
use posetlab::{gen, AnSegment, Field, InteriorSystem, PersistenceModule, Poset};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

pub struct Output {
    /// False when the command ran but its check failed (exit 1).
    pub ok: bool,
    pub json: Value,
    pub text: String,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output { ok: true, json, text }
    }
}

#[derive(Debug)]
pub enum CliError {
    Read(PathBuf, std::io::Error),
    Lib(Option<PathBuf>, posetlab::Error),
}

impl CliError {
    /// 2 for unreadable or malformed input, 1 for failed preconditions.
    pub fn code(&self) -> u8 {
        match self {
            CliError::Read(..) => 2,
            CliError::Lib(_, e) if e.is_parse() => 2,
            CliError::Lib(..) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Read(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Lib(Some(p), e) => write!(f, "{}: {e}", p.display()),
            CliError::Lib(None, e) => write!(f, "{e}"),
        }
    }
}

impl From<posetlab::Error> for CliError {
    fn from(e: posetlab::Error) -> Self {
        CliError::Lib(None, e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Read(path.to_path_buf(), e))
}

fn in_file<T>(path: &Path, r: posetlab::Result<T>) -> Result<T> {
    r.map_err(|e| CliError::Lib(Some(path.to_path_buf()), e))
}

fn load_poset(path: &Path) -> Result<Arc<Poset>> {
    let text = read(path)?;
    Ok(Arc::new(in_file(path, io::parse_poset(&text))?))
}

fn load_module(path: &Path, p: &Arc<Poset>) -> Result<PersistenceModule> {
    let text = read(path)?;
    in_file(path, io::parse_pmod(&text, p.clone()))
}

fn system(p: &Arc<Poset>, sub: &[String]) -> Result<InteriorSystem> {
    let q = p.subset(sub)?;
    Ok(InteriorSystem::new(p.clone(), &q)?)
}

fn field(cli: &Cli) -> Result<Field> {
    Ok(Field::new(cli.field)?)
}

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Check { poset, module } => check(poset, module.as_deref()),
        Command::Intervals { poset } => intervals(poset),
        Command::Gldim {
            poset,
            via,
            op,
            timings,
        } => gldim(cli, poset, *via, *op, *timings),
        Command::Cover { poset, module } => cover(poset, module),
        Command::Resolve { poset, module, max_len } => resolve(poset, module, *max_len),
        Command::Functor {
            which,
            poset,
            module,
            sub,
        } => functor(*which, poset, module, sub),
        Command::Interior { poset, sub } => interior(poset, sub),
        Command::Aligned { poset, sub } => aligned(poset, sub),
        Command::Contract { poset, segment, auto } => contract(poset, segment, *auto),
        Command::Reflect { poset, at } => reflect(poset, at),
        Command::Decompose { poset, module } => decompose(poset, module),
        Command::Dot { poset } => {
            let p = load_poset(poset)?;
            let dot = io::to_dot(&p);
            Ok(Output::new(
                json!({ "schema_version": SCHEMA_VERSION, "dot": dot }),
                dot,
            ))
        }
        Command::Expand { diagram, lengths } => expand(diagram, lengths),
        Command::Sample { what } => sample(cli, what),
    }
}

fn check(poset: &Path, module: Option<&Path>) -> Result<Output> {
    let p = load_poset(poset)?;
    let leaves = p.leaves();
    let mut j = json!({
        "schema_version": SCHEMA_VERSION,
        "poset": p.name(),
        "elements": p.n(),
        "covers": p.covers().len(),
        "connected": p.is_poset_connected(),
        "tree": p.is_tree(),
        "leaves": leaves.iter().map(|&a| p.label(a)).collect::<Vec<_>>(),
        "sources": p.sources().iter().map(|&a| p.label(a)).collect::<Vec<_>>(),
        "sinks": p.sinks().iter().map(|&a| p.label(a)).collect::<Vec<_>>(),
    });
    let mut text = format!(
        "poset {}: {} elements, {} covers, connected {}, tree {}\n",
        p.name(),
        p.n(),
        p.covers().len(),
        p.is_poset_connected(),
        p.is_tree()
    );
    if let Some(path) = module {
        let m = load_module(path, &p)?;
        j["module"] = json!({
            "field": m.field().p(),
            "dims": m.dims(),
            "total_dim": m.total_dim(),
        });
        let _ = writeln!(
            text,
            "module over GF({}): dims {:?}, total {}",
            m.field().p(),
            m.dims(),
            m.total_dim()
        );
    }
    Ok(Output::new(j, text))
}

fn intervals(poset: &Path) -> Result<Output> {
    let p = load_poset(poset)?;
    let all = p.enumerate_intervals();
    let list: Vec<Vec<String>> = all.iter().map(|s| p.set_labels(s.members())).collect();
    let mut text = String::new();
    for s in &all {
        let _ = writeln!(text, "{}", p.fmt_set(s.members()));
    }
    let j = json!({ "schema_version": SCHEMA_VERSION, "poset": p.name(), "count": all.len(), "intervals": list });
    Ok(Output::new(j, text))
}

fn gldim(cli: &Cli, poset: &Path, via: Via, op: bool, timings: bool) -> Result<Output> {
    let p = load_poset(poset)?;
    let f = field(cli)?;
    let one = |q: &Poset| -> Result<(usize, Value)> {
        let t = Instant::now();
        let (d, mut j) = match via {
            Via::Engine => {
                let r = intres::intresgldim_over(q, f)?;
                (
                    r.gldim,
                    serde_json::to_value(GldimJson::new(q, &r)).expect("serialisable"),
                )
            }
            Via::Formula => {
                let d = intres::tree_gldim(q)?;
                (
                    d,
                    json!({ "schema_version": SCHEMA_VERSION, "poset": q.name(), "gldim": d, "via": "formula" }),
                )
            }
            Via::Contract => {
                let (d, steps, reduced) = intres::gldim_via_contraction(q)?;
                let steps: Vec<Value> = steps
                    .iter()
                    .map(|s| json!({ "segment": s.segment, "equioriented": s.equioriented, "removed": s.removed }))
                    .collect();
                let j = json!({
                    "schema_version": SCHEMA_VERSION,
                    "poset": q.name(),
                    "gldim": d,
                    "via": "contract",
                    "steps": steps,
                    "reduced_elements": reduced.n(),
                });
                (d, j)
            }
        };
        if timings {
            j["timings_ms"] = json!(BTreeMap::from([("total", t.elapsed().as_millis() as u64)]));
        }
        Ok((d, j))
    };
    let (d, j) = one(&p)?;
    if !op {
        let text = format!("{d}\n");
        return Ok(Output::new(j, text));
    }
    let (dop, jop) = one(&p.opposite())?;
    let equal = d == dop;
    let j = json!({ "schema_version": SCHEMA_VERSION, "poset": j, "opposite": jop, "equal": equal });
    let text = format!("P: {d}\nP^op: {dop}\n{}\n", if equal { "equal" } else { "NOT EQUAL" });
    Ok(Output {
        ok: equal,
        json: j,
        text,
    })
}

fn multiplicity_json(p: &Poset, m: &[(posetlab::Interval, usize)]) -> Vec<Value> {
    m.iter()
        .map(|(s, k)| json!({ "S": p.set_labels(s.members()), "multiplicity": k }))
        .collect()
}

fn multiplicity_text(p: &Poset, m: &[(posetlab::Interval, usize)]) -> String {
    if m.is_empty() {
        return "0".into();
    }
    m.iter()
        .map(|(s, k)| {
            let b = p.fmt_set(s.members());
            if *k == 1 {
                format!("I{b}")
            } else {
                format!("I{b}^{k}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn cover(poset: &Path, module: &Path) -> Result<Output> {
    let p = load_poset(poset)?;
    let m = load_module(module, &p)?;
    let c = intres::interval_cover(&m)?;
    let j = json!({
        "schema_version": SCHEMA_VERSION,
        "summands": multiplicity_json(&p, &c.multiplicities),
        "kernel_dims": c.kernel.dims(),
    });
    let text = format!(
        "cover: {}\nkernel dims: {:?}\n",
        multiplicity_text(&p, &c.multiplicities),
        c.kernel.dims()
    );
    Ok(Output::new(j, text))
}

fn resolve(poset: &Path, module: &Path, max_len: Option<usize>) -> Result<Output> {
    let p = load_poset(poset)?;
    let m = load_module(module, &p)?;
    let r = intres::interval_resolution(&m, max_len.unwrap_or_else(|| intres::default_max_len(&m)))?;
    let terms = r.terms();
    let j = json!({
        "schema_version": SCHEMA_VERSION,
        "intresdim": r.dim(),
        "terms": terms.iter().map(|t| multiplicity_json(&p, t)).collect::<Vec<_>>(),
    });
    let mut text = format!("intresdim {}\n", r.dim());
    for (i, t) in terms.iter().enumerate() {
        let _ = writeln!(text, "F{i} = {}", multiplicity_text(&p, t));
    }
    Ok(Output::new(j, text))
}

fn functor(which: Functor, poset: &Path, module: &Path, sub: &[String]) -> Result<Output> {
    let p = load_poset(poset)?;
    let sys = system(&p, sub)?;
    let text = read(module)?;
    let over = match which {
        Functor::Res | Functor::Cont => p.clone(),
        Functor::Ind | Functor::Coind => sys.sub_poset().clone(),
    };
    let m = in_file(module, io::parse_pmod(&text, over))?;
    let out = match which {
        Functor::Res => pmod::res(&sys, &m)?,
        Functor::Ind => pmod::induct(&sys, &m)?,
        Functor::Cont => pmod::contract(&sys, &m)?,
        Functor::Coind => pmod::coinduct(&sys, &m)?,
    };
    let text = io::write_pmod(&out);
    let q = out.poset();
    let j = json!({
        "schema_version": SCHEMA_VERSION,
        "over": q.labels(),
        "dims": out.dims(),
        "module": text,
    });
    Ok(Output::new(j, text))
}

fn interior(poset: &Path, sub: &[String]) -> Result<Output> {
    let p = load_poset(poset)?;
    let sys = system(&p, sub)?;
    let q = sys.sub_poset();
    let floors: BTreeMap<&str, &str> = (0..p.n()).map(|x| (p.label(x), q.label(sys.floor(x)))).collect();
    let fibers: Vec<Value> = (0..q.n())
        .map(|y| json!({ "y": q.label(y), "fiber": p.set_labels(sys.fiber(y)) }))
        .collect();
    let mut text = String::new();
    for x in 0..p.n() {
        let _ = writeln!(text, "floor({}) = {}", p.label(x), q.label(sys.floor(x)));
    }
    for y in 0..q.n() {
        let _ = writeln!(text, "fiber({}) = {}", q.label(y), p.fmt_set(sys.fiber(y)));
    }
    let _ = writeln!(text, "aligned: {}", sys.is_aligned());
    let j = json!({
        "schema_version": SCHEMA_VERSION,
        "floor": floors,
        "fibers": fibers,
        "aligned": sys.is_aligned(),
    });
    Ok(Output::new(j, text))
}

fn aligned(poset: &Path, sub: &[String]) -> Result<Output> {
    let p = load_poset(poset)?;
    let sys = system(&p, sub)?;
    let q = sys.sub_poset();
    let is = sys.is_aligned();
    let mut text = format!("aligned: {is}\n");
    let mut j = json!({ "schema_version": SCHEMA_VERSION, "aligned": is });
    if is {
        let mut nu = BTreeMap::new();
        for y in 0..q.n() {
            let v = p.label(sys.nu(y)?);
            let _ = writeln!(text, "nu({}) = {v}", q.label(y));
            nu.insert(q.label(y), v);
        }
        j["nu"] = json!(nu);
    }
    Ok(Output::new(j, text))
}

fn contract(poset: &Path, segment: &[String], auto: bool) -> Result<Output> {
    let p = load_poset(poset)?;
    if auto {
        let (d, steps, reduced) = intres::gldim_via_contraction(&p)?;
        let text = io::write_poset(&reduced);
        let j = json!({
            "schema_version": SCHEMA_VERSION,
            "gldim": d,
            "steps": steps.iter().map(|s| json!({ "segment": s.segment, "removed": s.removed })).collect::<Vec<_>>(),
            "poset": text,
        });
        return Ok(Output::new(j, text));
    }
    let ids = segment
        .iter()
        .map(|l| p.id_of(l))
        .collect::<posetlab::Result<Vec<_>>>()?;
    let seg = AnSegment::new(&p, ids)?;
    let out = p.contract_segment(&seg)?;
    let text = io::write_poset(&out);
    let j = json!({ "schema_version": SCHEMA_VERSION, "equioriented": seg.is_equioriented(), "poset": text });
    Ok(Output::new(j, text))
}

fn reflect(poset: &Path, at: &str) -> Result<Output> {
    let p = load_poset(poset)?;
    let a = p.id_of(at)?;
    let out = p.reflect(a)?;
    let text = io::write_poset(&out);
    let j = json!({ "schema_version": SCHEMA_VERSION, "hypothesis": p.mutation_hypothesis(a), "poset": text });
    Ok(Output::new(j, text))
}

fn decompose(poset: &Path, module: &Path) -> Result<Output> {
    let p = load_poset(poset)?;
    let m = load_module(module, &p)?;
    let split = split_interval_summands(&m)?;
    let j = json!({
        "schema_version": SCHEMA_VERSION,
        "summands": multiplicity_json(&p, &split.summands),
        "residual_dims": split.residual.dims(),
        "interval_decomposable": split.is_interval_decomposable(),
    });
    let mut text = format!("summands: {}\n", multiplicity_text(&p, &split.summands));
    let _ = writeln!(text, "residual dims: {:?}", split.residual.dims());
    let _ = writeln!(text, "interval decomposable: {}", split.is_interval_decomposable());
    Ok(Output::new(j, text))
}

fn expand(diagram: &Path, lengths: &[(usize, usize)]) -> Result<Output> {
    let text = read(diagram)?;
    let d = in_file(diagram, io::parse_diagram(&text))?;
    let map: HashMap<usize, usize> = lengths.iter().copied().collect();
    let p = expand_diagram(&d, &map)?;
    let text = io::write_poset(&p);
    let j = json!({ "schema_version": SCHEMA_VERSION, "elements": p.n(), "poset": text });
    Ok(Output::new(j, text))
}

fn sample(cli: &Cli, what: &Sample) -> Result<Output> {
    let (text, seed) = match what {
        Sample::Poset { n, density, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (
                io::write_poset(&gen::random_connected_poset(&mut rng, *n, *density)),
                *seed,
            )
        }
        Sample::Tree { n, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (io::write_poset(&gen::random_tree(&mut rng, *n)), *seed)
        }
        Sample::Module { poset, max_dim, seed } => {
            let p = load_poset(poset)?;
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (
                io::write_pmod(&gen::random_module(&mut rng, &p, field(cli)?, *max_dim)?),
                *seed,
            )
        }
    };
    let j = json!({ "schema_version": SCHEMA_VERSION, "seed": seed, "text": text });
    Ok(Output::new(j, text))
}
