//! Command results and their JSON, CSV and text renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::de::Deserializer;
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

/// A map keyed by a small index, serialized in index order. JSON object keys
/// are strings, so a `BTreeMap<String, _>` would order `"10"` before `"2"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Indexed<T>(pub Vec<(usize, T)>);

impl<T: Serialize> Serialize for Indexed<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(&k.to_string(), v)?;
        }
        map.end()
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Indexed<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let map = BTreeMap::<usize, T>::deserialize(deserializer)?;
        Ok(Indexed(map.into_iter().collect()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerreVerdict {
    pub theorem: bool,
    pub literal_s1: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub vars: Vec<String>,
    pub gens: Vec<String>,
    pub char: u32,
    pub dim: usize,
    pub depth: usize,
    pub strata: Vec<usize>,
    /// `null` stands for dimension `-∞`.
    pub dual_dims: Indexed<Option<usize>>,
    pub ass: Vec<Vec<String>>,
    pub unmixed: bool,
    pub equidimensional: bool,
    pub serre: Indexed<SerreVerdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Piece {
    pub vars: Vec<String>,
    pub gens: Vec<String>,
    pub char: u32,
    pub a: Vec<i32>,
    pub j: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub vars: Vec<String>,
    pub gens: Vec<String>,
    pub char: u32,
    pub classes: u128,
    pub dual_dims: Indexed<Option<usize>>,
    /// A degree class realizing each finite dual dimension.
    pub witnesses: Indexed<Option<String>>,
    pub depth: usize,
    pub strata: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletonEntry {
    pub i: usize,
    pub gens: Vec<String>,
    /// `null` when the skeleton is the unit ideal.
    pub dim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletonDepthRecord {
    pub r: usize,
    pub direct: usize,
    pub via_skeletons: usize,
    pub passes: Vec<bool>,
    pub vacuous: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skeletons {
    pub vars: Vec<String>,
    pub gens: Vec<String>,
    pub char: u32,
    pub g: Vec<i32>,
    pub skeletons: Vec<SkeletonEntry>,
    pub serre_depths: Vec<SkeletonDepthRecord>,
    pub s1_divergences: Vec<usize>,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerRecord {
    pub k: usize,
    pub dim: usize,
    pub depth: usize,
    pub strata: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Powers {
    pub vars: Vec<String>,
    pub gens: Vec<String>,
    pub char: u32,
    pub rows: Vec<PowerRecord>,
    pub stable: bool,
    pub onset: Option<usize>,
    pub window: usize,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub vars: Vec<String>,
    pub gens: Vec<String>,
    pub components: Vec<Vec<String>>,
    pub ass: Vec<Vec<String>>,
    pub min_primes: Vec<Vec<String>>,
    pub unmixed: bool,
    pub equidimensional: bool,
    pub has_embedded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub vars: Vec<String>,
    pub gens: Vec<String>,
    pub char: u32,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Output {
    Analysis(Analysis),
    Piece(Piece),
    Profile(Profile),
    Skeletons(Skeletons),
    Powers(Powers),
    Decomposition(Decomposition),
    Verification(Verification),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Output {
    /// Cross-check failures that must turn into a nonzero exit.
    pub fn failed_checks(&self) -> Vec<&CheckRecord> {
        let checks = match self {
            Output::Skeletons(s) => &s.checks,
            Output::Verification(v) => &v.checks,
            _ => return Vec::new(),
        };
        checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => {
                let mut text = serde_json::to_string_pretty(self).map_err(|e| e.to_string())?;
                text.push('\n');
                Ok(text)
            }
            Format::Csv => self.csv(),
            Format::Text => Ok(self.text()),
        }
    }

    fn csv(&self) -> Result<String, String> {
        let mut out = String::new();
        match self {
            Output::Powers(p) => {
                let width = p.rows.iter().map(|r| r.strata.len()).max().unwrap_or(1);
                out.push_str("k,dim,depth");
                for r in 1..=width {
                    write!(out, ",S_{r}").unwrap();
                }
                out.push('\n');
                for row in &p.rows {
                    write!(out, "{},{},{}", row.k, row.dim, row.depth).unwrap();
                    for r in 0..width {
                        out.push(',');
                        if let Some(s) = row.strata.get(r) {
                            write!(out, "{s}").unwrap();
                        }
                    }
                    out.push('\n');
                }
            }
            Output::Profile(p) => {
                out.push_str("j,dual_dim,witness\n");
                for ((j, d), (_, w)) in p.dual_dims.0.iter().zip(&p.witnesses.0) {
                    let d = d.map_or_else(|| "-inf".to_string(), |d| d.to_string());
                    let w = w.as_deref().map_or(String::new(), |w| format!("\"{w}\""));
                    writeln!(out, "{j},{d},{w}").unwrap();
                }
            }
            Output::Skeletons(s) => {
                out.push_str("i,dim,gens\n");
                for entry in &s.skeletons {
                    let d = entry.dim.map_or_else(|| "-inf".to_string(), |d| d.to_string());
                    writeln!(out, "{},{d},\"{}\"", entry.i, entry.gens.join(",")).unwrap();
                }
            }
            _ => return Err("csv output is available for powers, profile and skeletons".to_string()),
        }
        Ok(out)
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let ideal = |vars: &[String], gens: &[String]| format!("({}) in K[{}]", gens.join(", "), vars.join(", "));
        match self {
            Output::Analysis(a) => {
                writeln!(out, "ideal            {}", ideal(&a.vars, &a.gens)).unwrap();
                writeln!(out, "characteristic   {}", a.char).unwrap();
                writeln!(out, "dim              {}", a.dim).unwrap();
                writeln!(out, "depth            {}", a.depth).unwrap();
                writeln!(out, "strata           {:?}", a.strata).unwrap();
                writeln!(out, "dual dims        {}", dims_text(&a.dual_dims)).unwrap();
                writeln!(out, "ass              {}", primes_text(&a.ass)).unwrap();
                writeln!(out, "unmixed          {}", a.unmixed).unwrap();
                writeln!(out, "equidimensional  {}", a.equidimensional).unwrap();
                for (r, v) in &a.serre.0 {
                    writeln!(out, "S_{r:<15}theorem={} literal_s1={}", v.theorem, v.literal_s1).unwrap();
                }
            }
            Output::Piece(p) => {
                writeln!(out, "ideal            {}", ideal(&p.vars, &p.gens)).unwrap();
                writeln!(out, "characteristic   {}", p.char).unwrap();
                writeln!(out, "dim D(H^{})_{:?} = {}", p.j, p.a, p.dim).unwrap();
            }
            Output::Profile(p) => {
                writeln!(out, "ideal            {}", ideal(&p.vars, &p.gens)).unwrap();
                writeln!(out, "characteristic   {}", p.char).unwrap();
                writeln!(out, "degree classes   {}", p.classes).unwrap();
                for ((j, d), (_, w)) in p.dual_dims.0.iter().zip(&p.witnesses.0) {
                    let d = d.map_or_else(|| "-inf".to_string(), |d| d.to_string());
                    match w {
                        Some(w) => writeln!(out, "j={j:<3} dim {d:<5} witness {w}").unwrap(),
                        None => writeln!(out, "j={j:<3} dim {d}").unwrap(),
                    }
                }
                writeln!(out, "depth            {}", p.depth).unwrap();
                writeln!(out, "strata           {:?}", p.strata).unwrap();
            }
            Output::Skeletons(s) => {
                writeln!(out, "ideal            {}", ideal(&s.vars, &s.gens)).unwrap();
                writeln!(out, "characteristic   {}", s.char).unwrap();
                writeln!(out, "g                {:?}", s.g).unwrap();
                for e in &s.skeletons {
                    writeln!(out, "Sigma_{}          ({})", e.i, e.gens.join(", ")).unwrap();
                }
                for d in &s.serre_depths {
                    writeln!(
                        out,
                        "S_{}-depth        direct {} via skeletons {} passes {:?}",
                        d.r, d.direct, d.via_skeletons, d.passes
                    )
                    .unwrap();
                }
                writeln!(out, "s1 divergences   {:?}", s.s1_divergences).unwrap();
                checks_text(&mut out, s.passed, &s.checks);
            }
            Output::Powers(p) => {
                writeln!(out, "ideal            {}", ideal(&p.vars, &p.gens)).unwrap();
                writeln!(out, "characteristic   {}", p.char).unwrap();
                for row in &p.rows {
                    writeln!(
                        out,
                        "k={:<3} dim {} depth {} strata {:?}",
                        row.k, row.dim, row.depth, row.strata
                    )
                    .unwrap();
                }
                match p.onset {
                    Some(k) => writeln!(out, "stable from k={k} (window {})", p.window).unwrap(),
                    None => writeln!(out, "not stable within window {}", p.window).unwrap(),
                }
                writeln!(out, "note: {}", p.note).unwrap();
            }
            Output::Decomposition(d) => {
                writeln!(out, "ideal            {}", ideal(&d.vars, &d.gens)).unwrap();
                for c in &d.components {
                    writeln!(out, "component        ({})", c.join(", ")).unwrap();
                }
                writeln!(out, "ass              {}", primes_text(&d.ass)).unwrap();
                writeln!(out, "minimal primes   {}", primes_text(&d.min_primes)).unwrap();
                writeln!(out, "unmixed          {}", d.unmixed).unwrap();
                writeln!(out, "equidimensional  {}", d.equidimensional).unwrap();
                writeln!(out, "embedded primes  {}", d.has_embedded).unwrap();
            }
            Output::Verification(v) => {
                writeln!(out, "ideal            {}", ideal(&v.vars, &v.gens)).unwrap();
                writeln!(out, "characteristic   {}", v.char).unwrap();
                checks_text(&mut out, v.passed, &v.checks);
            }
        }
        out
    }
}

fn dims_text(dims: &Indexed<Option<usize>>) -> String {
    let parts: Vec<String> = dims
        .0
        .iter()
        .map(|(j, d)| format!("{j}:{}", d.map_or_else(|| "-inf".to_string(), |d| d.to_string())))
        .collect();
    parts.join(" ")
}

fn primes_text(primes: &[Vec<String>]) -> String {
    let parts: Vec<String> = primes.iter().map(|p| format!("({})", p.join(", "))).collect();
    parts.join(" ")
}

fn checks_text(out: &mut String, passed: bool, checks: &[CheckRecord]) {
    for c in checks {
        let mark = if c.passed { "ok  " } else { "FAIL" };
        writeln!(out, "{mark} {}", c.name).unwrap();
        if !c.passed {
            writeln!(out, "     {}", c.witness).unwrap();
        }
    }
    writeln!(
        out,
        "{}",
        if passed {
            "all checks passed"
        } else {
            "cross-check failure"
        }
    )
    .unwrap();
}
