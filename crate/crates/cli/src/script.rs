//! Line-oriented choice scripts. One choice per line; `#` starts a comment.

use std::fmt::Display;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::CliError;

pub fn parse_script<C: FromStr<Err = String>>(text: &str) -> Result<Vec<C>, CliError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        out.push(
            body.parse()
                .map_err(|e| CliError::Input(format!("script line {}: {e}", i + 1)))?,
        );
    }
    Ok(out)
}

/// One line per choice, each followed by a comment from `annotate`.
pub fn render_script<C: Display>(choices: &[C], annotate: impl Fn(&C) -> String) -> String {
    let mut out = String::new();
    for c in choices {
        let line = c.to_string();
        let note = annotate(c);
        if note.is_empty() {
            out.push_str(&format!("{line}\n"));
        } else {
            out.push_str(&format!("{line:<20}# {note}\n"));
        }
    }
    out
}

pub fn read_script<C: FromStr<Err = String>>(path: &Path) -> Result<Vec<C>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_script(&text)
}

pub fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}
