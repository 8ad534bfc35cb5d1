use std::io::Read;
use std::path::Path;

use anyhow::{Context, Result};

/// Reads a sequence of integers from a file or standard input (`-`):
/// either whitespace/newline-separated decimals or a JSON array.
pub fn read_integers(source: &str) -> Result<Vec<i64>> {
    let text = if source == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading standard input")?;
        buf
    } else {
        std::fs::read_to_string(source).with_context(|| format!("reading {source}"))?
    };
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        return serde_json::from_str(trimmed).context("parsing JSON integer array");
    }
    trimmed
        .split_whitespace()
        .map(|tok| {
            tok.parse::<i64>()
                .with_context(|| format!("parsing integer {tok:?}"))
        })
        .collect()
}

/// Writes the finished output to the path, or standard output when absent.
pub fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
