//! Named graph families, their deterministic generators, and the compact
//! text form used on the command line (`path:5`, `tree:8:seed=7`,
//! `prism(union(complete:3,path:1))`, ...).

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{FamilyError, ParseError};
use crate::graph::Graph;

/// Default recursion depth of random cotrees.
pub const DEFAULT_COTREE_DEPTH: u32 = 4;

/// A symbolic description of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `P_n`, edges `{i, i+1}`.
    Path(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// `K_n`.
    Complete(usize),
    /// `K_{1,leaves}` with center `0`.
    Star(usize),
    /// Uniform labeled tree decoded from a seeded Prüfer sequence.
    Tree {
        n: usize,
        seed: u64,
    },
    /// Seeded random cotree evaluated to a graph on exactly `n` vertices.
    Cograph {
        n: usize,
        seed: u64,
        depth: u32,
    },
    /// Erdős–Rényi graph, each pair present with probability `percent / 100`.
    Gnp {
        n: usize,
        percent: u32,
        seed: u64,
    },
    /// `K_n` on `0..n` plus pendant vertices `n` and `n + 1` attached to
    /// clique vertices `0` and `1`.
    Theorem9(usize),
    /// Explicit edge list.
    Edges {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
    /// Disjoint union of the listed graphs, blocks in order.
    Union(Vec<FamilySpec>),
    /// Join of the listed graphs.
    Join(Vec<FamilySpec>),
    Complement(Box<FamilySpec>),
    Prism(Box<FamilySpec>),
}

fn domain(
    kind: &'static str,
    param: &'static str,
    value: usize,
    requirement: &'static str,
) -> FamilyError {
    FamilyError {
        kind,
        param,
        value: value as i64,
        requirement,
    }
}

impl FamilySpec {
    pub fn kind(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::Star(_) => "star",
            FamilySpec::Tree { .. } => "tree",
            FamilySpec::Cograph { .. } => "cograph",
            FamilySpec::Gnp { .. } => "gnp",
            FamilySpec::Theorem9(_) => "theorem9",
            FamilySpec::Edges { .. } => "edges",
            FamilySpec::Union(_) => "union",
            FamilySpec::Join(_) => "join",
            FamilySpec::Complement(_) => "complement",
            FamilySpec::Prism(_) => "prism",
        }
    }

    /// Checks parameter domains, recursively.
    pub fn validate(&self) -> Result<(), FamilyError> {
        let kind = self.kind();
        match self {
            FamilySpec::Path(n) if *n < 1 => Err(domain(kind, "n", *n, "n >= 1")),
            FamilySpec::Cycle(n) if *n < 3 => Err(domain(kind, "n", *n, "n >= 3")),
            FamilySpec::Star(n) if *n < 1 => Err(domain(kind, "n", *n, "n >= 1 leaves")),
            FamilySpec::Tree { n, .. } if *n < 1 => Err(domain(kind, "n", *n, "n >= 1")),
            FamilySpec::Cograph { n, .. } if *n < 1 => Err(domain(kind, "n", *n, "n >= 1")),
            FamilySpec::Cograph { depth, .. } if *depth < 1 => {
                Err(domain(kind, "depth", *depth as usize, "depth >= 1"))
            }
            FamilySpec::Gnp { percent, .. } if *percent > 100 => {
                Err(domain(kind, "p", *percent as usize, "0 <= p <= 100"))
            }
            FamilySpec::Theorem9(n) if *n < 2 => Err(domain(kind, "n", *n, "n >= 2")),
            FamilySpec::Edges { n, edges } => {
                for &(u, v) in edges {
                    if u >= *n || v >= *n {
                        return Err(domain(kind, "edge", u.max(v), "endpoints < n"));
                    }
                    if u == v {
                        return Err(domain(kind, "edge", u, "no self-loops"));
                    }
                }
                Ok(())
            }
            FamilySpec::Union(parts) | FamilySpec::Join(parts) => {
                if parts.is_empty() {
                    return Err(domain(kind, "arguments", 0, "at least one argument"));
                }
                parts.iter().try_for_each(FamilySpec::validate)
            }
            FamilySpec::Complement(inner) | FamilySpec::Prism(inner) => inner.validate(),
            _ => Ok(()),
        }
    }

    /// Builds the described graph. The same spec always yields the same graph.
    pub fn generate(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        Ok(self.build())
    }

    fn build(&self) -> Graph {
        match self {
            FamilySpec::Path(n) => Graph::from_edge_iter(*n, (1..*n).map(|i| (i - 1, i))),
            FamilySpec::Cycle(n) => Graph::from_edge_iter(*n, (0..*n).map(|i| (i, (i + 1) % n))),
            FamilySpec::Complete(n) => Graph::complete(*n),
            FamilySpec::Star(leaves) => {
                Graph::from_edge_iter(leaves + 1, (1..=*leaves).map(|i| (0, i)))
            }
            FamilySpec::Tree { n, seed } => random_tree(*n, *seed),
            FamilySpec::Cograph { n, seed, depth } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                random_cotree(&mut rng, *n, 0, *depth)
            }
            FamilySpec::Gnp { n, percent, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let p = f64::from(*percent) / 100.0;
                let mut edges = Vec::new();
                for u in 0..*n {
                    for v in u + 1..*n {
                        if rng.gen_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edge_iter(*n, edges)
            }
            FamilySpec::Theorem9(n) => {
                let clique = (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v)));
                Graph::from_edge_iter(n + 2, clique.chain([(0, *n), (1, n + 1)]))
            }
            FamilySpec::Edges { n, edges } => Graph::from_edge_iter(*n, edges.iter().copied()),
            FamilySpec::Union(parts) => {
                Graph::disjoint_union(&parts.iter().map(FamilySpec::build).collect::<Vec<_>>())
            }
            FamilySpec::Join(parts) => {
                Graph::join(&parts.iter().map(FamilySpec::build).collect::<Vec<_>>())
            }
            FamilySpec::Complement(inner) => inner.build().complement(),
            FamilySpec::Prism(inner) => inner.build().complementary_prism(),
        }
    }

    /// Parses the family text, using `default_seed` for seeded kinds that
    /// do not name a seed.
    pub fn parse_with_seed(input: &str, default_seed: u64) -> Result<Self, ParseError> {
        let mut parser = Parser {
            input,
            pos: 0,
            default_seed,
        };
        let spec = parser.expr()?;
        parser.skip_ws();
        if parser.pos != input.len() {
            return Err(parser.error(&input[parser.pos..], "trailing input"));
        }
        spec.validate()?;
        Ok(spec)
    }
}

impl FromStr for FamilySpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        FamilySpec::parse_with_seed(s, 0)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, name: &str, parts: &[FamilySpec]) -> fmt::Result {
    write!(f, "{name}(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(")")
}

/// Canonical text form; parses back to an equal spec.
impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Tree { n, seed } => write!(f, "tree:{n}:seed={seed}"),
            FamilySpec::Cograph { n, seed, depth } => {
                write!(f, "cograph:{n}:seed={seed}")?;
                if *depth != DEFAULT_COTREE_DEPTH {
                    write!(f, ":depth={depth}")?;
                }
                Ok(())
            }
            FamilySpec::Gnp { n, percent, seed } => write!(f, "gnp:{n}:p={percent}:seed={seed}"),
            FamilySpec::Theorem9(n) => write!(f, "theorem9:{n}"),
            FamilySpec::Edges { n, edges } => {
                write!(f, "edges:{n}")?;
                for (i, (u, v)) in edges.iter().enumerate() {
                    f.write_str(if i == 0 { ":" } else { "/" })?;
                    write!(f, "{u}-{v}")?;
                }
                Ok(())
            }
            FamilySpec::Union(parts) => write_list(f, "union", parts),
            FamilySpec::Join(parts) => write_list(f, "join", parts),
            FamilySpec::Complement(inner) => write!(f, "complement({inner})"),
            FamilySpec::Prism(inner) => write!(f, "prism({inner})"),
        }
    }
}

/// Prüfer decoding with the smallest available leaf taken first.
fn random_tree(n: usize, seed: u64) -> Graph {
    if n <= 2 {
        return Graph::from_edge_iter(n, (1..n).map(|i| (0, i)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a leaf exists");
        edges.push((leaf.min(c), leaf.max(c)));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(std::cmp::Reverse(c));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().expect("two leaves remain");
    let std::cmp::Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a.min(b), a.max(b)));
    Graph::from_edge_iter(n, edges)
}

/// Each internal node is a union or a join with equal probability. Its first
/// child is a single leaf with probability 1/2, otherwise the vertex budget
/// is split uniformly. At the depth limit the node takes all remaining
/// vertices as leaf children.
fn random_cotree(rng: &mut ChaCha8Rng, n: usize, depth: u32, max_depth: u32) -> Graph {
    if n == 1 {
        return Graph::empty(1);
    }
    let join = rng.gen_bool(0.5);
    let children: Vec<Graph> = if depth + 1 >= max_depth {
        vec![Graph::empty(1); n]
    } else {
        let first = if rng.gen_bool(0.5) {
            1
        } else {
            rng.gen_range(1..n)
        };
        vec![
            random_cotree(rng, first, depth + 1, max_depth),
            random_cotree(rng, n - first, depth + 1, max_depth),
        ]
    };
    if join {
        Graph::join(&children)
    } else {
        Graph::disjoint_union(&children)
    }
}

struct Parser<'a> {
    input: &'a str,
    pos: usize,
    default_seed: u64,
}

impl Parser<'_> {
    fn error(&self, token: &str, message: &str) -> ParseError {
        ParseError::Family {
            input: self.input.to_string(),
            token: token.to_string(),
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.input[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.input[self.pos..].chars().next()
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !pred(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.input[start..self.pos]
    }

    fn expr(&mut self) -> Result<FamilySpec, ParseError> {
        self.skip_ws();
        let name = self.take_while(|c| c.is_ascii_alphanumeric()).to_string();
        if name.is_empty() {
            let rest = self.input[self.pos..].chars().take(1).collect::<String>();
            return Err(self.error(&rest, "expected a family name"));
        }
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let mut args = vec![self.expr()?];
                loop {
                    self.skip_ws();
                    match self.peek() {
                        Some(',') => {
                            self.pos += 1;
                            args.push(self.expr()?);
                        }
                        Some(')') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.error(&name, "unclosed argument list")),
                    }
                }
                match name.as_str() {
                    "union" | "disconnected" => Ok(FamilySpec::Union(args)),
                    "join" => Ok(FamilySpec::Join(args)),
                    "complement" | "prism" => {
                        if args.len() != 1 {
                            return Err(self.error(&name, "expects exactly one argument"));
                        }
                        let inner = Box::new(args.pop().expect("one argument"));
                        Ok(if name == "prism" {
                            FamilySpec::Prism(inner)
                        } else {
                            FamilySpec::Complement(inner)
                        })
                    }
                    _ => Err(self.error(&name, "unknown combinator")),
                }
            }
            Some(':') => {
                self.pos += 1;
                let params = self
                    .take_while(|c| c != ',' && c != ')' && !c.is_whitespace())
                    .to_string();
                self.atom(&name, &params)
            }
            _ => Err(self.error(&name, "expected `:` or `(` after family name")),
        }
    }

    fn number<T: FromStr>(&self, token: &str) -> Result<T, ParseError> {
        token
            .parse()
            .map_err(|_| self.error(token, "expected a non-negative integer"))
    }

    fn atom(&self, name: &str, params: &str) -> Result<FamilySpec, ParseError> {
        let mut parts = params.split(':');
        let first = parts.next().unwrap_or("");
        if name == "edges" {
            let n = self.number(first)?;
            let mut edges = Vec::new();
            if let Some(list) = parts.next() {
                for tok in list.split('/').filter(|t| !t.is_empty()) {
                    let (u, v) = tok
                        .split_once('-')
                        .ok_or_else(|| self.error(tok, "expected an edge `u-v`"))?;
                    edges.push((self.number(u)?, self.number(v)?));
                }
            }
            if let Some(extra) = parts.next() {
                return Err(self.error(extra, "unexpected parameter"));
            }
            return Ok(FamilySpec::Edges { n, edges });
        }
        let n: usize = self.number(first)?;
        let mut seed = self.default_seed;
        let mut percent = None;
        let mut depth = DEFAULT_COTREE_DEPTH;
        for kv in parts {
            let (key, value) = kv
                .split_once('=')
                .ok_or_else(|| self.error(kv, "expected `key=value`"))?;
            match (name, key) {
                ("tree" | "cograph" | "gnp", "seed") => seed = self.number(value)?,
                ("cograph", "depth") => depth = self.number(value)?,
                ("gnp", "p") => percent = Some(self.number(value)?),
                _ => return Err(self.error(kv, "unknown parameter")),
            }
        }
        Ok(match name {
            "path" => FamilySpec::Path(n),
            "cycle" => FamilySpec::Cycle(n),
            "complete" => FamilySpec::Complete(n),
            "star" => FamilySpec::Star(n),
            "tree" => FamilySpec::Tree { n, seed },
            "cograph" => FamilySpec::Cograph { n, seed, depth },
            "gnp" => FamilySpec::Gnp {
                n,
                percent: percent.ok_or_else(|| self.error(params, "gnp needs `p=<percent>`"))?,
                seed,
            },
            "theorem9" => FamilySpec::Theorem9(n),
            _ => return Err(self.error(name, "unknown family")),
        })
    }
}
