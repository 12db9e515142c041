//! Content-addressed result cache.
//!
//! Entries are the JSON form of a command's [`Output`], stored under the
//! SHA-256 of the canonical request. A hit is rendered exactly like a fresh
//! result, so the cache never changes what is printed.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use sha2::{Digest, Sha256};

use crate::output::Output;

/// Everything a result depends on, in a fixed textual form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Request {
    pub command: &'static str,
    pub vars: Vec<String>,
    pub gens: Vec<String>,
    pub char: u32,
    /// `name=value` pairs in a fixed order per command.
    pub params: Vec<(&'static str, String)>,
}

impl Request {
    pub fn canonical(&self) -> String {
        let mut text = format!(
            "serre-cache v1\ncommand={}\nvars={}\ngens={}\nchar={}\n",
            self.command,
            self.vars.join(","),
            self.gens.join(","),
            self.char
        );
        for (name, value) in &self.params {
            text.push_str(name);
            text.push('=');
            text.push_str(value);
            text.push('\n');
        }
        text
    }

    pub fn key(&self) -> String {
        hex::encode(Sha256::digest(self.canonical().as_bytes()))
    }
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: &Path) -> io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    fn path(&self, request: &Request) -> PathBuf {
        self.dir.join(format!("{}.json", request.key()))
    }

    /// A stored result, or `None` on a miss or an unreadable entry.
    pub fn load(&self, request: &Request) -> Option<Output> {
        let text = fs::read_to_string(self.path(request)).ok()?;
        decode(request.command, &text)
    }

    /// Writes through a temporary file so readers never see a partial entry.
    pub fn store(&self, request: &Request, output: &Output) -> io::Result<()> {
        let path = self.path(request);
        let tmp = path.with_extension(format!("json.{}.tmp", std::process::id()));
        let text = serde_json::to_string(output).map_err(io::Error::other)?;
        fs::write(&tmp, text)?;
        fs::rename(&tmp, &path)
    }
}

fn parse<T: DeserializeOwned>(text: &str) -> Option<T> {
    serde_json::from_str(text).ok()
}

/// Decodes an entry as the output type of `command`.
pub fn decode(command: &str, text: &str) -> Option<Output> {
    Some(match command {
        "analyze" => Output::Analysis(parse(text)?),
        "piece" => Output::Piece(parse(text)?),
        "profile" => Output::Profile(parse(text)?),
        "skeletons" => Output::Skeletons(parse(text)?),
        "powers" => Output::Powers(parse(text)?),
        "decompose" => Output::Decomposition(parse(text)?),
        "verify" => Output::Verification(parse(text)?),
        _ => return None,
    })
}
