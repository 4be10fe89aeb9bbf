use super::Graph;
use crate::error::{Error, Result};

/// Parses the edge-list text format.
///
/// ```text
/// # optional comments
/// n 4
/// 1 2
/// 2 3
/// ```
///
/// The `n` header is optional; without it the vertex count is the largest
/// endpoint. Vertices are 1-indexed.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut pairs = Vec::new();
    let mut max_vertex = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("expected a non-negative integer, found `{s}`"),
            })
        };
        match fields.as_slice() {
            ["n", count] => {
                if n.is_some() || !pairs.is_empty() {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "the `n` header must come first and only once".into(),
                    });
                }
                n = Some(parse(count)?);
            }
            [a, b] => {
                let (a, b) = (parse(a)?, parse(b)?);
                max_vertex = max_vertex.max(a).max(b);
                pairs.push((line_no, a, b));
            }
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected `i j` or `n <count>`, found `{line}`"),
                })
            }
        }
    }
    let n = n.unwrap_or(max_vertex);
    let mut edges = Vec::with_capacity(pairs.len());
    for &(line_no, a, b) in &pairs {
        edges.push((a, b));
        if let Err(e) = Graph::from_edges(n, &edges[edges.len() - 1..]) {
            return Err(Error::Parse {
                line: line_no,
                message: e.to_string(),
            });
        }
        let (i, j) = (a.min(b), a.max(b));
        if edges[..edges.len() - 1]
            .iter()
            .any(|&(c, d)| (c.min(d), c.max(d)) == (i, j))
        {
            return Err(Error::Parse {
                line: line_no,
                message: Error::DuplicateEdge { i, j }.to_string(),
            });
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_header_and_comments() {
        let g = parse_edge_list("# path\nn 4\n1 2\n2 3  # middle\n\n3 4\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), &[(1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn header_is_optional() {
        let g = parse_edge_list("1 3\n").unwrap();
        assert_eq!(g.n(), 3);
        let g = parse_edge_list("n 5\n1 2\n").unwrap();
        assert_eq!(g.n(), 5);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_edge_list("1 2\n2 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_edge_list("1 2\n\n2 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_edge_list("n 2\n1 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_edge_list("1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_edge_list("1 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }
}
