//! Number formatting and output sinks shared by all commands.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use maclaurin_core::Units;

/// Significant digits kept in every emitted number.
pub const SIG_DIGITS: usize = 12;

pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIG_DIGITS - 1, x).parse().unwrap_or(x)
}

pub fn fmt_num(x: f64) -> String {
    format!("{}", round_sig(x))
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) if !(n.is_i64() || n.is_u64()) => {
            if let Some(x) = n.as_f64() {
                if let Some(r) = serde_json::Number::from_f64(round_sig(x)) {
                    *n = r;
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_value),
        Value::Object(map) => map.values_mut().for_each(round_value),
        _ => {}
    }
}

/// Pretty JSON with every float rounded to [`SIG_DIGITS`].
pub fn to_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut v = serde_json::to_value(value)?;
    round_value(&mut v);
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct UnitsHeader {
    #[serde(rename = "G")]
    pub g: f64,
    pub rho0: f64,
    #[serde(rename = "T")]
    pub t: f64,
    #[serde(rename = "R")]
    pub r: f64,
    pub pi_g_rho0: f64,
}

impl From<&Units> for UnitsHeader {
    fn from(u: &Units) -> Self {
        Self {
            g: u.gravitational_constant(),
            rho0: u.density(),
            t: u.t(),
            r: u.r(),
            pi_g_rho0: u.pi_g_rho(),
        }
    }
}

/// Comment line opening every CSV table.
pub fn csv_units_comment(u: &Units) -> String {
    let h = UnitsHeader::from(u);
    format!(
        "# units: G={} rho0={} T={} R={} pi_G_rho0={}\n",
        fmt_num(h.g),
        fmt_num(h.rho0),
        fmt_num(h.t),
        fmt_num(h.r),
        fmt_num(h.pi_g_rho0)
    )
}

/// Render a CSV table with a units comment line and a header row.
pub fn csv_table(u: &Units, header: &[&str], rows: &[Vec<String>]) -> io::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    let body = w
        .into_inner()
        .map_err(|e| io::Error::other(e.to_string()))?;
    let mut out = csv_units_comment(u);
    out.push_str(&String::from_utf8(body).map_err(io::Error::other)?);
    Ok(out)
}

/// Write to `path`, or to standard output when no path is given.
pub fn emit(text: &str, path: Option<&Path>) -> io::Result<()> {
    match path {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p)?);
            w.write_all(text.as_bytes())?;
            w.flush()
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(text.as_bytes())?;
            lock.flush()
        }
    }
}
