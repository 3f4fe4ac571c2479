//! Text and CSV views of a JSON report.

use serde_json::Value;

use crate::Format;

pub fn render(report: &Value, format: Format) -> Result<String, String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).map_err(|e| e.to_string())?;
            s.push('\n');
            Ok(s)
        }
        Format::Text => {
            let mut out = String::new();
            text(report, 0, &mut out);
            Ok(out)
        }
        Format::Csv => csv_rows(report),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Array(items) if items.iter().all(Value::is_array) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(items) => items.iter().all(|i| !i.is_object()),
        _ => true,
    }
}

fn text(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                if is_flat(val) {
                    out.push_str(&format!("{pad}{k}: {}\n", scalar(val)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    text(val, depth + 1, out);
                }
            }
        }
        Value::Array(items) if items.iter().all(|i| i.as_object().is_some_and(|m| m.values().all(is_flat))) && !items.is_empty() => {
            table(items, depth, out)
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                out.push_str(&format!("{pad}- [{}]\n", i + 1));
                text(item, depth + 1, out);
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

/// Aligned table for an array of flat objects; columns in key order of the
/// first row.
fn table(rows: &[Value], depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    let cols: Vec<String> = rows[0].as_object().map(|m| m.keys().cloned().collect()).unwrap_or_default();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| cols.iter().map(|c| r.get(c).map_or("-".into(), scalar)).collect())
        .collect();
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| cells.iter().map(|r| r[j].chars().count()).chain([c.chars().count()]).max().unwrap_or(0))
        .collect();
    let line = |vals: Vec<&str>| -> String {
        let parts: Vec<String> = vals
            .iter()
            .zip(&widths)
            .map(|(v, w)| format!("{v}{}", " ".repeat(w - v.chars().count())))
            .collect();
        format!("{pad}{}\n", parts.join("  ").trim_end())
    };
    out.push_str(&line(cols.iter().map(String::as_str).collect()));
    for r in &cells {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
}

/// CSV of the `rows` array of a table report.
fn csv_rows(report: &Value) -> Result<String, String> {
    let rows = report
        .get("rows")
        .and_then(Value::as_array)
        .ok_or("CSV output is only available for `table`")?;
    let cols: Vec<String> = rows
        .first()
        .and_then(Value::as_object)
        .map(|m| m.keys().cloned().collect())
        .unwrap_or_default();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&cols).map_err(|e| e.to_string())?;
    for r in rows {
        let rec: Vec<String> = cols
            .iter()
            .map(|c| match r.get(c) {
                Some(Value::Array(items)) => items.iter().map(scalar).collect::<Vec<_>>().join(";"),
                Some(v) => scalar(v),
                None => String::new(),
            })
            .collect();
        w.write_record(&rec).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_tables_follow_json() {
        let v = json!({"pass": true, "rows": [{"a": 1, "b": "x"}, {"a": 22, "b": "yy"}]});
        let t = render(&v, Format::Text).unwrap();
        assert_eq!(t, "pass: true\nrows:\n  a   b\n  1   x\n  22  yy\n");
    }

    #[test]
    fn csv_joins_lists() {
        let v = json!({"rows": [{"t": "A1", "l": [1, 2]}]});
        assert_eq!(render(&v, Format::Csv).unwrap(), "t,l\nA1,1;2\n");
        assert!(render(&json!({"x": 1}), Format::Csv).is_err());
    }
}
