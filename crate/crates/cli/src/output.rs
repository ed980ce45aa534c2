use num_rational::BigRational;
use semiclassical::weingarten::{LaurentSeries, RationalFunction};
use serde_json::{json, Map, Value};

/// Exact rationals travel as decimal strings so consumers never overflow.
pub fn rational(q: &BigRational) -> Value {
    json!({ "num": q.numer().to_string(), "den": q.denom().to_string() })
}

pub fn rational_function(f: &RationalFunction) -> Value {
    json!({ "numerator": f.numerator().to_string(), "denominator": f.denominator().to_string() })
}

pub fn series(s: &LaurentSeries) -> Value {
    let terms: Vec<Value> = s.terms().map(|(k, c)| json!({ "order": k, "coefficient": rational(c) })).collect();
    json!({ "text": s.to_string(), "max_order": s.max_order(), "terms": terms })
}

/// Indented `key: value` rendering of a report.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Object(m) if m.len() == 2 && m.contains_key("num") && m.contains_key("den") => {
            let (num, den) = (scalar(&m["num"])?, scalar(&m["den"])?);
            Some(if den == "1" { num } else { format!("{num}/{den}") })
        }
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            Some(items.iter().filter_map(scalar).collect::<Vec<_>>().join(", "))
        }
        _ => None,
    }
}

/// A flat object on one line: `order: 3, coefficient: -1`.
fn inline(v: &Value) -> Option<String> {
    let Value::Object(m) = v else { return None };
    let fields: Option<Vec<String>> = m
        .iter()
        .map(|(k, v)| if v.is_array() { None } else { scalar(v).map(|s| format!("{k}: {s}")) })
        .collect();
    fields.map(|f| f.join(", "))
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    match v {
        Value::Object(m) => write_object(out, m, indent),
        Value::Array(items) => {
            for item in items {
                match scalar(item).or_else(|| inline(item)) {
                    Some(s) => out.push_str(&format!("{:indent$}- {s}\n", "")),
                    None => {
                        out.push_str(&format!("{:indent$}-\n", ""));
                        write_value(out, item, indent + 2);
                    }
                }
            }
        }
        other => out.push_str(&format!("{:indent$}{}\n", "", scalar(other).unwrap_or_default())),
    }
}

fn write_object(out: &mut String, m: &Map<String, Value>, indent: usize) {
    for (k, v) in m {
        match scalar(v) {
            Some(s) => out.push_str(&format!("{:indent$}{k}: {s}\n", "")),
            None => {
                out.push_str(&format!("{:indent$}{k}:\n", ""));
                write_value(out, v, indent + 2);
            }
        }
    }
}
