//! graph6 and edge-list text formats.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Graph;
use crate::error::{Error, Result, MAX_VERTICES};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    Graph6,
    Edgelist,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edgelist" | "edges" => Ok(GraphFormat::Edgelist),
            other => Err(Error::InvalidParameter(format!("unknown format {other:?}"))),
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::Graph6 => "graph6",
            GraphFormat::Edgelist => "edgelist",
        })
    }
}

impl GraphFormat {
    /// Parses every graph in `text`: one per non-empty line for graph6, a
    /// single graph for edge lists.
    pub fn parse_all(self, text: &str) -> Result<Vec<Graph>> {
        match self {
            GraphFormat::Graph6 => text
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty())
                .map(|(i, l)| {
                    Graph::from_graph6(l).map_err(|e| match e {
                        Error::Parse { message, .. } => Error::parse(i + 1, message),
                        other => other,
                    })
                })
                .collect(),
            GraphFormat::Edgelist => Ok(vec![Graph::from_edge_list(text)?]),
        }
    }

    pub fn write(self, g: &Graph) -> String {
        match self {
            GraphFormat::Graph6 => {
                let mut s = g.to_graph6();
                s.push('\n');
                s
            }
            GraphFormat::Edgelist => g.to_edge_list(),
        }
    }
}

const HEADER: &str = ">>graph6<<";

// Graphs serialize as their graph6 string.
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_graph6())
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Graph::from_graph6(&s).map_err(serde::de::Error::custom)
    }
}

impl Graph {
    /// Upper triangle in column-major order: `(0,1), (0,2), (1,2), (0,3), ...`,
    /// six bits per printable byte offset by 63.
    pub fn to_graph6(&self) -> String {
        let mut out = Vec::with_capacity(1 + (self.n * self.n) / 12 + 4);
        if self.n <= 62 {
            out.push(self.n as u8 + 63);
        } else {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push(((self.n >> shift) & 63) as u8 + 63);
            }
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..self.n {
            for i in 0..j {
                acc = acc << 1 | self.has_edge(i, j) as u8;
                filled += 1;
                if filled == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        String::from_utf8(out).expect("graph6 bytes are ASCII")
    }

    pub fn from_graph6(line: &str) -> Result<Graph> {
        let line = line.trim_end_matches(['\r', '\n']);
        let line = line.strip_prefix(HEADER).unwrap_or(line);
        let bytes = line.as_bytes();
        if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
            return Err(Error::parse(1, format!("invalid graph6 byte 0x{b:02x}")));
        }
        let (n, body) = match bytes {
            [] => return Err(Error::parse(1, "empty graph6 string")),
            [126, 126, ..] => return Err(Error::TooManyVertices(usize::MAX)),
            [126, rest @ ..] => {
                if rest.len() < 3 {
                    return Err(Error::parse(1, "truncated graph6 order"));
                }
                let n = rest[..3]
                    .iter()
                    .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
                (n, &rest[3..])
            }
            [first, rest @ ..] => ((first - 63) as usize, rest),
        };
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let bits = n * n.saturating_sub(1) / 2;
        let expected = bits.div_ceil(6);
        if body.len() != expected {
            return Err(Error::parse(
                1,
                format!(
                    "graph6 body has {} bytes, expected {expected} for n={n}",
                    body.len()
                ),
            ));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = body[k / 6] - 63;
                if byte >> (5 - k % 6) & 1 == 1 {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
                k += 1;
            }
        }
        Ok(Graph { n, adj })
    }

    /// `n <order>` followed by one `u v` line per edge, `u < v`, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Parses the edge-list format. `#` starts a comment; duplicate edges
    /// are merged; loops and out-of-range endpoints are errors.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut graph: Option<Graph> = None;
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match (&mut graph, fields.as_slice()) {
                (None, ["n", count]) => {
                    let n: usize = count
                        .parse()
                        .map_err(|_| Error::parse(lineno, format!("bad vertex count {count:?}")))?;
                    graph = Some(Graph::empty(n)?);
                }
                (None, _) => {
                    return Err(Error::parse(lineno, "expected header line \"n <count>\""));
                }
                (Some(g), [a, b]) => {
                    let parse = |s: &str| {
                        s.parse::<usize>()
                            .map_err(|_| Error::parse(lineno, format!("bad vertex {s:?}")))
                    };
                    let (u, v) = (parse(a)?, parse(b)?);
                    g.insert_edge(u, v)
                        .map_err(|e| Error::parse(lineno, e.to_string()))?;
                }
                (Some(_), _) => {
                    return Err(Error::parse(
                        lineno,
                        format!("expected \"u v\", got {line:?}"),
                    ));
                }
            }
        }
        graph.ok_or_else(|| Error::parse(1, "missing header line \"n <count>\""))
    }
}
