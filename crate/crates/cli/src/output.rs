use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use paraquant::report::round_sig6;
use serde::Serialize;
use serde_json::Value;

/// Rounds every non-integer number to six significant digits.
pub fn humanize(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_sig6(n.as_f64().unwrap_or(f64::NAN));
            serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(humanize).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, humanize(v))).collect()),
        other => other,
    }
}

pub fn print_json<T: Serialize>(value: &T) -> io::Result<()> {
    let v = humanize(serde_json::to_value(value).map_err(io::Error::other)?);
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, &v).map_err(io::Error::other)?;
    writeln!(out)
}

pub fn write_csv_file(path: &Path, write: impl FnOnce(&mut BufWriter<File>) -> io::Result<()>) -> io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write(&mut w)?;
    w.flush()
}
