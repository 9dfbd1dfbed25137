use std::fmt::Write;

use serde_json::Value;

use crate::commands::Format;

/// Renders a report as canonical JSON (sorted keys, one trailing newline) or
/// as an indented human-readable listing.
pub fn render(report: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            pretty(&mut s, report, 0);
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
    }
}

fn is_matrix(v: &Value) -> Option<(usize, usize, &Vec<Value>)> {
    let obj = v.as_object()?;
    let rows = obj.get("rows")?.as_u64()? as usize;
    let cols = obj.get("cols")?.as_u64()? as usize;
    let data = obj.get("data")?.as_array()?;
    (data.len() == rows * cols).then_some((rows, cols, data))
}

fn entry(v: &Value) -> String {
    let re = v[0].as_f64().unwrap_or(f64::NAN);
    let im = v[1].as_f64().unwrap_or(f64::NAN);
    if im == 0.0 {
        format!("{re:.6}")
    } else {
        format!("{re:.6}{im:+.6}i")
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Number(n) => match n.as_f64() {
            Some(x) if n.is_f64() => format!("{x:.6e}"),
            _ => n.to_string(),
        },
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn pretty(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    if let Some((rows, cols, data)) = is_matrix(v) {
        let cells: Vec<String> = data.iter().map(entry).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for r in 0..rows {
            let line: Vec<String> = (0..cols)
                .map(|c| format!("{:>width$}", cells[r * cols + c]))
                .collect();
            let _ = writeln!(out, "{pad}[ {} ]", line.join("  "));
        }
        return;
    }
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                if val.is_object() || (val.is_array() && !is_flat(val)) {
                    let _ = writeln!(out, "{pad}{k}:");
                    pretty(out, val, indent + 1);
                } else {
                    let _ = writeln!(out, "{pad}{k}: {}", inline(val));
                }
            }
        }
        Value::Array(items) if !is_flat(v) => {
            for (i, item) in items.iter().enumerate() {
                let _ = writeln!(out, "{pad}[{i}]");
                pretty(out, item, indent + 1);
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", inline(other));
        }
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_object() && is_flat(x)),
        Value::Object(_) => false,
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(inline).collect::<Vec<_>>().join(", ")
        ),
        other => scalar(other),
    }
}
