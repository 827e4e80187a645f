//! Minimal CSV emission: header row, comma separated, dB values at 4 decimals.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::HarnessError;

/// dB value at 4 decimals; `-inf` marks an exact zero ratio.
pub fn db(v: f64) -> String {
    if v == f64::NEG_INFINITY {
        "-inf".into()
    } else {
        format!("{v:.4}")
    }
}

/// Probabilities and other small linear quantities.
pub fn sci(v: f64) -> String {
    format!("{v:.6e}")
}

pub fn render(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut s = header.join(",");
    s.push('\n');
    for r in rows {
        let _ = writeln!(s, "{}", r.join(","));
    }
    s
}

pub fn write(dir: &Path, name: &str, content: &str) -> Result<std::path::PathBuf, HarnessError> {
    let io = |source, p: &Path| HarnessError::Io { path: p.display().to_string(), source };
    std::fs::create_dir_all(dir).map_err(|e| io(e, dir))?;
    let path = dir.join(name);
    std::fs::write(&path, content).map_err(|e| io(e, &path))?;
    Ok(path)
}
