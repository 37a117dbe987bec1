//! Report rendering. JSON mode prints every float with 17 significant
//! digits (`{:.16e}`), which round-trips any IEEE-754 double; object keys
//! are emitted in sorted order. Both together make reports byte-stable for
//! identical inputs.

use serde_json::Value;

pub fn render_json(value: &Value) -> String {
    let mut out = String::new();
    write_value(value, 0, &mut out);
    out.push('\n');
    out
}

fn write_indent(depth: usize, out: &mut String) {
    for _ in 0..depth {
        out.push_str("  ");
    }
}

fn write_value(value: &Value, depth: usize, out: &mut String) {
    match value {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                out.push_str(&i.to_string());
            } else if let Some(u) = n.as_u64() {
                out.push_str(&u.to_string());
            } else {
                let x = n.as_f64().expect("JSON number");
                out.push_str(&format!("{x:.16e}"));
            }
        }
        Value::String(s) => {
            out.push_str(&Value::String(s.clone()).to_string());
        }
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str("[]");
                return;
            }
            // scalar arrays stay on one line; nested structures get indented
            let scalar = items
                .iter()
                .all(|v| !matches!(v, Value::Array(_) | Value::Object(_)));
            if scalar {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    write_value(item, depth, out);
                }
                out.push(']');
            } else {
                out.push_str("[\n");
                for (i, item) in items.iter().enumerate() {
                    write_indent(depth + 1, out);
                    write_value(item, depth + 1, out);
                    if i + 1 < items.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                write_indent(depth, out);
                out.push(']');
            }
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push_str("{\n");
            // serde_json's default map is a BTreeMap, so iteration order is
            // already sorted by key
            let len = map.len();
            for (i, (key, item)) in map.iter().enumerate() {
                write_indent(depth + 1, out);
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(item, depth + 1, out);
                if i + 1 < len {
                    out.push(',');
                }
                out.push('\n');
            }
            write_indent(depth, out);
            out.push('}');
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn floats_carry_17_significant_digits() {
        let rendered = render_json(&json!({"x": 0.1}));
        assert!(rendered.contains("1.0000000000000001e-1"));
    }

    #[test]
    fn integers_stay_integers() {
        let rendered = render_json(&json!({"n": -1, "seed": 42}));
        assert!(rendered.contains("\"n\": -1"));
        assert!(rendered.contains("\"seed\": 42"));
    }

    #[test]
    fn keys_are_sorted() {
        let rendered = render_json(&json!({"b": 1, "a": 2}));
        let a = rendered.find("\"a\"").unwrap();
        let b = rendered.find("\"b\"").unwrap();
        assert!(a < b);
    }

    #[test]
    fn rendered_floats_round_trip() {
        for &x in &[0.1, -3.25e-11, 1.0 / 3.0, 6.02e23, f64::MIN_POSITIVE] {
            let rendered = render_json(&serde_json::json!(x));
            let back: f64 = serde_json::from_str(rendered.trim()).unwrap();
            assert_eq!(back, x);
        }
    }
}
