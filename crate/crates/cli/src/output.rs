//! Rendering payloads: JSON with 17 significant digits, or CSV.

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use parity_wilson::config::OutputFormat;
use parity_wilson::verify::fmt17;
use serde::Serialize;
use serde_json::ser::{CompactFormatter, Formatter};
use serde_json::Value;

/// Output of one subcommand in both formats.
pub struct Payload {
    pub json: Value,
    pub csv: String,
}

/// Writes every double as `{:.16e}`.
struct Sig17;

impl Formatter for Sig17 {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(fmt17(value).as_bytes())
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }

    fn write_u64<W: ?Sized + Write>(&mut self, writer: &mut W, value: u64) -> io::Result<()> {
        CompactFormatter.write_u64(writer, value)
    }
}

pub fn json_string(v: &Value) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Sig17);
    v.serialize(&mut ser).expect("serializing a Value cannot fail");
    buf.push(b'\n');
    String::from_utf8(buf).expect("JSON is UTF-8")
}

pub fn render(payload: &Payload, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => json_string(&payload.json),
        OutputFormat::Csv => payload.csv.clone(),
    }
}

pub const OUT_DIR_ENV: &str = "PARITY_WILSON_OUT_DIR";

/// `--out` wins; otherwise `$PARITY_WILSON_OUT_DIR/<command>.<ext>`; otherwise stdout.
pub fn destination(out: Option<&Path>, command: &str, format: OutputFormat) -> Option<PathBuf> {
    if let Some(p) = out {
        return Some(p.to_path_buf());
    }
    let dir = std::env::var_os(OUT_DIR_ENV).filter(|d| !d.is_empty())?;
    let ext = match format {
        OutputFormat::Json => "json",
        OutputFormat::Csv => "csv",
    };
    Some(PathBuf::from(dir).join(format!("{command}.{ext}")))
}

pub fn emit(text: &str, dest: Option<&Path>) -> io::Result<()> {
    match dest {
        Some(p) => {
            if let Some(parent) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent)?;
            }
            std::fs::write(p, text)
        }
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}
