//! Text rendering of a command's JSON payload.

use serde_json::Value;

/// Finite abelian groups serialize as `{"free_rank", "factors"}`.
fn as_group(v: &Value) -> Option<String> {
    let obj = v.as_object()?;
    if obj.len() != 2 {
        return None;
    }
    let free = obj.get("free_rank")?.as_u64()?;
    let factors = obj.get("factors")?.as_array()?;
    let mut parts = Vec::new();
    match free {
        0 => {}
        1 => parts.push("Z".to_string()),
        r => parts.push(format!("Z^{r}")),
    }
    for f in factors {
        parts.push(format!("Z/{}", f.as_u64()?));
    }
    Some(if parts.is_empty() { "0".into() } else { parts.join(" x ") })
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Object(map) if map.is_empty() => Some("{}".into()),
        Value::Array(items) if items.iter().all(|x| x.is_number()) => {
            Some(format!("[{}]", items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
        }
        _ => as_group(v),
    }
}

fn render_into(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_into(x, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn groups_render_compactly() {
        assert_eq!(as_group(&json!({"free_rank": 0, "factors": []})).unwrap(), "0");
        assert_eq!(as_group(&json!({"free_rank": 1, "factors": [2, 6]})).unwrap(), "Z x Z/2 x Z/6");
        assert!(as_group(&json!({"free_rank": 0, "factors": [], "x": 1})).is_none());
    }

    #[test]
    fn nested_rendering() {
        let v = json!({"a": 1, "b": {"c": [1, 2]}, "d": [{"e": true}]});
        assert_eq!(render_text(&v), "a: 1\nb:\n  c: [1, 2]\nd:\n  -\n    e: true\n");
    }
}
