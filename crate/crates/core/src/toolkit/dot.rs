//! Graphviz export of 1-skeleta.

use std::fmt::Write;

use crate::complex::Complex;

fn quoted(token: &str) -> String {
    let mut out = String::with_capacity(token.len() + 2);
    out.push('"');
    for ch in token.chars() {
        if ch == '"' || ch == '\\' {
            out.push('\\');
        }
        out.push(ch);
    }
    out.push('"');
    out
}

/// Undirected DOT graph of the 1-skeleton, nodes and edges in canonical order.
pub fn export_dot(c: &Complex) -> String {
    let mut out = String::from("graph complex {\n");
    for v in c.vertices() {
        let _ = writeln!(out, "  {};", quoted(v.as_str()));
    }
    for (u, v) in c.edges() {
        let _ = writeln!(out, "  {} -- {};", quoted(u.as_str()), quoted(v.as_str()));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toolkit::fixtures::{path, point};

    fn counts(dot: &str) -> (usize, usize) {
        let edges = dot.lines().filter(|l| l.contains(" -- ")).count();
        let nodes = dot.lines().filter(|l| l.ends_with(';')).count() - edges;
        (nodes, edges)
    }

    #[test]
    fn point_and_path() {
        assert_eq!(counts(&export_dot(point().complex())), (1, 0));
        let dot = export_dot(path(3).complex());
        assert_eq!(counts(&dot), (3, 2));
        assert_eq!(
            dot,
            "graph complex {\n  \"a\";\n  \"b\";\n  \"c\";\n  \"a\" -- \"b\";\n  \"b\" -- \"c\";\n}\n"
        );
    }

    #[test]
    fn quotes_are_escaped() {
        assert_eq!(quoted("a\"b"), "\"a\\\"b\"");
    }
}
