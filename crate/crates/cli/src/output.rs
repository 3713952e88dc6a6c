use std::fmt::Write;

use base64::engine::general_purpose::STANDARD;
use base64::Engine;
use serde_json::{json, Value};

use multiorder::order::{OrderKind, OrderMatrix, Sandwich};

pub const SCHEMA: &str = "multiorder/1";

/// `{schema, universe, kind, bits}` with `bits` the base64 of the row-major
/// relation; `forced` carries `▷` for the sandwich kind.
pub fn order_matrix_json(m: &OrderMatrix) -> Value {
    let mut v = json!({
        "schema": SCHEMA,
        "universe": m.universe,
        "kind": m.kind,
        "bits": STANDARD.encode(m.rel.to_bytes()),
    });
    if let Some(f) = &m.forced {
        v["forced"] = json!(STANDARD.encode(f.to_bytes()));
    }
    v
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram in DOT; adjacency is drawn undirected.
pub fn dot_graph(m: &OrderMatrix) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph {} {{", m.kind);
    let _ = writeln!(s, "  rankdir=TB;");
    let _ = writeln!(s, "  node [shape=box];");
    for (k, p) in m.universe.iter().enumerate() {
        let _ = writeln!(s, "  n{k} [label={}];", quote(&p.to_string()));
    }
    let edges = if m.kind == OrderKind::Adjacency {
        m.rel.clone()
    } else {
        m.reduction()
    };
    for a in 0..edges.dim() {
        for b in edges.row_ones(a) {
            match m.kind {
                OrderKind::Adjacency if b > a => {
                    let _ = writeln!(s, "  n{a} -> n{b} [dir=none];");
                }
                OrderKind::Adjacency => {}
                OrderKind::Sandwich => {
                    let tag = m.tag(a, b).expect("sandwich matrices carry tags");
                    let colour = match tag {
                        Sandwich::ForcedAbove => "black",
                        _ => "red",
                    };
                    let _ = writeln!(
                        s,
                        "  n{a} -> n{b} [color={colour}, label={}];",
                        quote(&tag.to_string())
                    );
                }
                _ => {
                    let _ = writeln!(s, "  n{a} -> n{b};");
                }
            }
        }
    }
    s.push_str("}\n");
    s
}
