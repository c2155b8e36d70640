//! Resolution of diagram, biquandle and endomorphism arguments.

use std::fs;
use std::io::Read;
use std::sync::OnceLock;

use anyhow::{anyhow, Context};
use vbridge_core::algebra::{
    biquandle_example4, biquandle_t, biquandle_z, enumerate_endos, make_dihedral, make_linear_biquandle,
    parse_biquandle, parse_tables, Endomorphism, FiniteBiquandle, Quandle,
};
use vbridge_core::diagram::{builtin_knots, chain, parse_knot_table, parse_pd, pretzel, torus_2n, KnotTable, SemiarcDiagram};

use crate::Failure;

pub const DIAGRAM_HELP: &str =
    "PD file, '-' for stdin, knot:NAME, torus2:N, chain:K, pretzel:A,B,C or unknot";
pub const BIQUANDLE_HELP: &str = "R<n>, Z, T, EX4, trivial:N, linear:N,A,B,C,D or a table file";

static KNOTS: OnceLock<KnotTable> = OnceLock::new();

/// Replaces the shipped knot table for this process.
pub fn load_knot_table(path: &str) -> Result<(), Failure> {
    let text = read_source(path)?;
    let table = parse_knot_table(&text).with_context(|| format!("parsing knot table {path}"))?;
    KNOTS.set(table).map_err(|_| anyhow!("knot table already loaded"))?;
    Ok(())
}

pub fn knots() -> &'static KnotTable {
    KNOTS.get().unwrap_or_else(|| builtin_knots())
}

fn read_source(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    Ok(fs::read_to_string(path).with_context(|| format!("reading {path}"))?)
}

/// Reads `spec` as a file once every token form has been ruled out.
fn read_named(spec: &str, expected: &str) -> Result<String, Failure> {
    if spec != "-" && !std::path::Path::new(spec).exists() {
        return Err(Failure::Usage(format!("{spec:?} is neither a known token nor an existing file; expected {expected}")));
    }
    read_source(spec)
}

fn numbers<T: std::str::FromStr>(what: &str, list: &str) -> Result<Vec<T>, Failure> {
    list.split(',')
        .map(|t| t.trim().parse::<T>().map_err(|_| Failure::Usage(format!("{what}: cannot parse {t:?} as a number"))))
        .collect()
}

pub fn diagram(spec: &str) -> Result<SemiarcDiagram, Failure> {
    let built = |r: Result<SemiarcDiagram, _>| r.map_err(|e| Failure::Usage(format!("diagram {spec}: {e}")));
    if spec == "unknot" {
        return Ok(SemiarcDiagram::unknot());
    }
    if let Some(name) = spec.strip_prefix("knot:") {
        let rec = knots().get(name).ok_or_else(|| {
            let names: Vec<&str> = knots().names().collect();
            Failure::Usage(format!("unknown knot {name:?}; shipped knots: {}", names.join(" ")))
        })?;
        return Ok(rec.diagram.clone());
    }
    if let Some(n) = spec.strip_prefix("torus2:") {
        return built(torus_2n(numbers::<usize>(spec, n)?[0]));
    }
    if let Some(k) = spec.strip_prefix("chain:") {
        return built(chain(numbers::<usize>(spec, k)?[0]));
    }
    if let Some(t) = spec.strip_prefix("pretzel:") {
        return built(pretzel(&numbers::<i64>(spec, t)?));
    }
    let text = read_named(spec, DIAGRAM_HELP)?;
    Ok(parse_pd(&text).with_context(|| format!("parsing {spec}"))?)
}

pub fn biquandle(spec: &str) -> Result<FiniteBiquandle, Failure> {
    let usage = |e: vbridge_core::algebra::AlgebraError| Failure::Usage(format!("biquandle {spec}: {e}"));
    match spec {
        "Z" => return Ok(biquandle_z()),
        "T" => return Ok(biquandle_t()),
        "EX4" => return Ok(biquandle_example4()),
        _ => {}
    }
    if let Some(n) = spec.strip_prefix('R').and_then(|n| n.parse::<usize>().ok()) {
        return make_dihedral(n).map(Quandle::into_biquandle).map_err(usage);
    }
    if let Some(n) = spec.strip_prefix("trivial:") {
        let n = numbers::<usize>(spec, n)?[0];
        if n == 0 || n > vbridge_core::algebra::MAX_ORDER {
            return Err(Failure::Usage(format!("biquandle {spec}: order must be in 1..={}", vbridge_core::algebra::MAX_ORDER)));
        }
        return Ok(Quandle::trivial(n).into_biquandle());
    }
    if let Some(p) = spec.strip_prefix("linear:") {
        let v = numbers::<i64>(spec, p)?;
        if v.len() != 5 || v[0] <= 0 {
            return Err(Failure::Usage(format!("biquandle {spec}: expected linear:N,A,B,C,D with N > 0")));
        }
        return make_linear_biquandle(v[0] as usize, v[1], v[2], v[3], v[4]).map_err(usage);
    }
    let text = read_named(spec, BIQUANDLE_HELP)?;
    Ok(parse_biquandle(&text).with_context(|| format!("parsing {spec}"))?)
}

/// Raw tables for validation, without insisting that they form a biquandle.
pub fn tables(spec: &str) -> Result<(Vec<Vec<usize>>, Vec<Vec<usize>>), Failure> {
    let named = ["Z", "T", "EX4"].contains(&spec)
        || spec.starts_with("trivial:")
        || spec.starts_with("linear:")
        || spec.strip_prefix('R').is_some_and(|n| n.parse::<usize>().is_ok());
    if named {
        return Ok(biquandle(spec)?.to_tables());
    }
    let text = read_named(spec, BIQUANDLE_HELP)?;
    Ok(parse_tables(&text).with_context(|| format!("parsing {spec}"))?)
}

pub fn quandle(spec: &str) -> Result<Quandle, Failure> {
    Quandle::try_from(biquandle(spec)?).map_err(|e| Failure::Usage(format!("{spec}: {e}")))
}

/// `--endo` maps (1-based image lists) or every endomorphism.
pub fn endos(y: &FiniteBiquandle, maps: &[String], all: bool) -> Result<Vec<Endomorphism>, Failure> {
    if all {
        return Ok(enumerate_endos(y));
    }
    if maps.is_empty() {
        return Err(Failure::Usage("give at least one --endo MAP or --all-endos".into()));
    }
    maps.iter()
        .map(|m| {
            let f = Endomorphism::parse(m).ok_or_else(|| Failure::Usage(format!("--endo {m}: expected a list like 2,4,2,4")))?;
            if f.images().len() != y.order() {
                return Err(Failure::Usage(format!("--endo {m}: has {} images, target has {}", f.images().len(), y.order())));
            }
            Ok(f)
        })
        .collect()
}
