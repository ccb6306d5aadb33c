//! JSON-lines and CSV emitters.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Streams records in the order they are pushed.
pub enum Sink<W: Write> {
    Json(W),
    Csv {
        writer: Box<csv::Writer<W>>,
        header: Option<Vec<String>>,
    },
}

impl<W: Write> Sink<W> {
    pub fn new(format: Format, out: W) -> Self {
        match format {
            Format::Json => Sink::Json(out),
            Format::Csv => Sink::Csv {
                writer: Box::new(
                    csv::WriterBuilder::new()
                        .has_headers(false)
                        .from_writer(out),
                ),
                header: None,
            },
        }
    }

    pub fn push<T: Serialize>(&mut self, record: &T) -> io::Result<()> {
        match self {
            Sink::Json(out) => {
                serde_json::to_writer(&mut *out, record)?;
                out.write_all(b"\n")
            }
            Sink::Csv { writer, header } => {
                let Value::Object(map) = serde_json::to_value(record)? else {
                    return Err(io::Error::new(
                        io::ErrorKind::InvalidData,
                        "record is not an object",
                    ));
                };
                let keys: Vec<String> = map.keys().cloned().collect();
                match header {
                    None => {
                        writer.write_record(&keys)?;
                        *header = Some(keys);
                    }
                    Some(h) if *h != keys => {
                        return Err(io::Error::new(
                            io::ErrorKind::InvalidData,
                            "CSV records differ in shape",
                        ));
                    }
                    Some(_) => {}
                }
                writer.write_record(map.values().map(cell))?;
                Ok(())
            }
        }
    }

    pub fn finish(self) -> io::Result<()> {
        match self {
            Sink::Json(mut out) => out.flush(),
            Sink::Csv { mut writer, .. } => writer.flush(),
        }
    }
}

/// Scalars print bare; lists of scalars are space separated; anything
/// deeper stays as compact JSON.
fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            items.iter().map(cell).collect::<Vec<_>>().join(" ")
        }
        other => other.to_string(),
    }
}
