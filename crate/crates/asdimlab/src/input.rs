//! Line-oriented defining-graph file format.
//!
//! ```text
//! # comment
//! kind artin
//! vertex a
//! vertex b
//! edge a b 3
//! ```
//!
//! One statement per line; `#` starts a comment; blank lines are ignored.
//! The kind must be declared exactly once before any edge, vertices must be
//! declared before use, and duplicate vertex or edge declarations are
//! errors. Edge labels are integers `>= 2` for `artin`/`coxeter` and relator
//! words (`a.b.a^-1.b^-1` syntax) for `graphgroup`.

use thiserror::Error;

use crate::graph::{DefiningGraph, EdgeLabel, GroupKind, VertexId};
use crate::word::{Word, WordError};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Parsed statements with their source lines, before graph construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputDocument {
    pub kind: GroupKind,
    pub kind_line: usize,
    pub vertices: Vec<(VertexId, usize)>,
    pub edges: Vec<(VertexId, VertexId, EdgeLabel, usize)>,
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<InputDocument, ParseError> {
        let mut kind: Option<(GroupKind, usize)> = None;
        let mut vertices: Vec<(VertexId, usize)> = Vec::new();
        let mut edges: Vec<(VertexId, VertexId, EdgeLabel, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields[0] {
                "kind" => {
                    if fields.len() != 2 {
                        return err(lineno, "expected: kind artin|coxeter|graphgroup");
                    }
                    if let Some((_, prev)) = kind {
                        return err(lineno, format!("kind already declared on line {prev}"));
                    }
                    match fields[1].parse::<GroupKind>() {
                        Ok(k) => kind = Some((k, lineno)),
                        Err(msg) => return err(lineno, msg),
                    }
                }
                "vertex" => {
                    if fields.len() != 2 {
                        return err(lineno, "expected: vertex NAME");
                    }
                    let v = match VertexId::new(fields[1]) {
                        Ok(v) => v,
                        Err(e) => return err(lineno, e.to_string()),
                    };
                    if vertices.iter().any(|(u, _)| *u == v) {
                        return err(lineno, format!("duplicate vertex `{v}`"));
                    }
                    vertices.push((v, lineno));
                }
                "edge" => {
                    let (k, _) = match kind {
                        Some(k) => k,
                        None => return err(lineno, "edge before kind declaration"),
                    };
                    if fields.len() != 4 {
                        return err(lineno, "expected: edge NAME NAME LABEL");
                    }
                    let endpoint = |name: &str| -> Result<VertexId, ParseError> {
                        let v = VertexId::new(name).map_err(|e| ParseError {
                            line: lineno,
                            message: e.to_string(),
                        })?;
                        if vertices.iter().any(|(u, _)| *u == v) {
                            Ok(v)
                        } else {
                            err(lineno, format!("undeclared vertex `{name}`"))
                        }
                    };
                    let a = endpoint(fields[1])?;
                    let b = endpoint(fields[2])?;
                    if a == b {
                        return err(lineno, format!("loop edge at `{a}`"));
                    }
                    if edges
                        .iter()
                        .any(|(x, y, _, _)| (x == &a && y == &b) || (x == &b && y == &a))
                    {
                        return err(lineno, format!("duplicate edge [{a}, {b}]"));
                    }
                    let label = parse_label(k, fields[3], &a, &b, lineno)?;
                    edges.push((a, b, label, lineno));
                }
                other => return err(lineno, format!("unknown directive `{other}`")),
            }
        }
        let (kind, kind_line) = match kind {
            Some(k) => k,
            None => return err(text.lines().count() + 1, "missing kind declaration"),
        };
        Ok(InputDocument {
            kind,
            kind_line,
            vertices,
            edges,
        })
    }

    pub fn into_graph(self) -> Result<DefiningGraph, ParseError> {
        let kind_line = self.kind_line;
        DefiningGraph::new(
            self.kind,
            self.vertices.into_iter().map(|(v, _)| v).collect(),
            self.edges
                .into_iter()
                .map(|(a, b, l, _)| (a, b, l))
                .collect(),
        )
        .map_err(|e| ParseError {
            line: kind_line,
            message: e.to_string(),
        })
    }
}

fn parse_label(
    kind: GroupKind,
    text: &str,
    a: &VertexId,
    b: &VertexId,
    lineno: usize,
) -> Result<EdgeLabel, ParseError> {
    match kind {
        GroupKind::Artin | GroupKind::Coxeter => match text.parse::<u32>() {
            Ok(m) if m >= 2 => Ok(EdgeLabel::Coefficient(m)),
            Ok(_) => err(lineno, "label must be >= 2"),
            Err(_) => err(
                lineno,
                format!("label must be an integer >= 2, got `{text}`"),
            ),
        },
        GroupKind::GraphGroup => {
            let word = Word::parse(text).map_err(|e| ParseError {
                line: lineno,
                message: e.to_string(),
            })?;
            let word = crate::word::validate_edge_word(word, a, b).map_err(|e| ParseError {
                line: lineno,
                message: match e {
                    WordError::ForbiddenForm => "forbidden relator form".to_owned(),
                    other => other.to_string(),
                },
            })?;
            Ok(EdgeLabel::Relator(word))
        }
    }
}

/// Parses the file format into a validated defining graph.
pub fn parse_input(text: &str) -> Result<DefiningGraph, ParseError> {
    InputDocument::parse(text)?.into_graph()
}

/// Canonical text rendering: kind line, sorted vertex lines, sorted edge
/// lines. Parsing the canonical text reproduces the graph, and the
/// certificate fingerprint hashes exactly this string.
pub fn canonical_text(g: &DefiningGraph) -> String {
    let mut out = format!("kind {}\n", g.kind());
    for v in g.vertices() {
        out.push_str(&format!("vertex {v}\n"));
    }
    for (a, b, label) in g.edges() {
        out.push_str(&format!("edge {a} {b} {label}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::clique_number;

    #[test]
    fn parses_single_edge_artin() {
        let g = parse_input("kind artin\nvertex a\nvertex b\nedge a b 3\n").unwrap();
        assert_eq!(g.kind(), GroupKind::Artin);
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        assert_eq!(
            g.label(&VertexId::new("a").unwrap(), &VertexId::new("b").unwrap()),
            Some(&EdgeLabel::Coefficient(3))
        );
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a triangle\nkind coxeter\n\nvertex a\nvertex b # trailing\nvertex c\nedge a b 3\nedge b c 3\nedge a c 3\n";
        let g = parse_input(text).unwrap();
        assert_eq!(clique_number(&g), 3);
    }

    #[test]
    fn label_below_two_is_rejected() {
        let e = parse_input("kind artin\nvertex a\nvertex b\nedge a b 1\n").unwrap_err();
        assert_eq!(e.line, 4);
        assert!(e.message.contains("label must be >= 2"), "{e}");
    }

    #[test]
    fn forbidden_relator_is_rejected() {
        let e = parse_input("kind graphgroup\nvertex a\nvertex b\nedge a b b.b.a.b\n").unwrap_err();
        assert_eq!(e.line, 4);
        assert!(e.message.contains("forbidden relator form"), "{e}");
    }

    #[test]
    fn graphgroup_accepts_artin_relator() {
        let g = parse_input("kind graphgroup\nvertex a\nvertex b\nedge a b a.b.a.b^-1.a^-1.b^-1\n")
            .unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn diagnostics_cover_the_error_menu() {
        let cases: &[(&str, &str)] = &[
            ("kind artin\nkind artin\n", "already declared"),
            ("kind elves\n", "unknown kind"),
            ("kind artin\nvertex a\nvertex a\n", "duplicate vertex"),
            ("kind artin\nvertex a\nedge a b 3\n", "undeclared vertex"),
            ("kind artin\nvertex a\nedge a a 3\n", "loop edge"),
            (
                "kind artin\nvertex a\nvertex b\nedge a b 3\nedge b a 5\n",
                "duplicate edge",
            ),
            ("vertex a\nedge a a 2\n", "edge before kind"),
            ("vertex a\n", "missing kind"),
            ("kind artin\nfrobnicate a\n", "unknown directive"),
            ("kind artin\nvertex 9a\n", "invalid vertex name"),
            ("kind artin\nvertex a\nvertex b\nedge a b x\n", "integer"),
        ];
        for (text, needle) in cases {
            let e = parse_input(text).unwrap_err();
            assert!(
                e.message.contains(needle),
                "input {text:?} produced {e}, wanted {needle:?}"
            );
        }
    }

    #[test]
    fn normalization_fixpoint() {
        let scrambled = "kind artin\nvertex z\nvertex m\nvertex a\nedge z a 5\nedge m z 2\n";
        let g = parse_input(scrambled).unwrap();
        let canon = canonical_text(&g);
        let reparsed = parse_input(&canon).unwrap();
        assert_eq!(reparsed, g);
        assert_eq!(canonical_text(&reparsed), canon);
        // vertices and edges come out sorted
        assert!(canon.find("vertex a").unwrap() < canon.find("vertex m").unwrap());
        assert!(canon.find("edge a z").unwrap() < canon.find("edge m z").unwrap());
    }

    #[test]
    fn canonical_text_of_graphgroup_words() {
        let text = "kind graphgroup\nvertex a\nvertex b\nedge a b a.b.a.b^-1.a^-1.b^-1\n";
        let g = parse_input(text).unwrap();
        assert_eq!(canonical_text(&g), text);
    }
}
