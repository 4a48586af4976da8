//! Parser for inline graph expressions such as `direct(paw,complete(2))`.
//!
//! ```text
//! expr := name [ "(" arg { "," arg } ")" ]
//! arg  := expr | integer
//! ```
//!
//! Names: `path(n)`, `cycle(n)`, `complete(n)`, `star(n)`, `empty(n)`, `paw`,
//! `F(k)`, `D15`, `G(r)`, `corona(G)`, `corona(G, H)` (same `H` everywhere),
//! `corona(G, H1, ..., Hn)`, `cartesian(G, H)`, `direct(G, H)`.

use crate::error::{GraphError, ParseError};
use crate::families::*;
use crate::graph::Graph;

const MAX_DEPTH: usize = 32;

pub fn parse_family_spec(text: &str) -> Result<Graph, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let g = p.expr(0)?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(g)
}

enum Arg {
    Int(usize),
    Graph(Graph),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::FamilySpec {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, pred: impl Fn(u8) -> bool) -> &str {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|&b| pred(b)) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ASCII slice")
    }

    fn arg(&mut self, depth: usize) -> Result<Arg, ParseError> {
        self.skip_ws();
        match self.src.get(self.pos) {
            Some(b) if b.is_ascii_digit() => {
                let at = self.pos;
                let digits = self.take_while(|b| b.is_ascii_digit()).to_owned();
                digits
                    .parse()
                    .map(Arg::Int)
                    .map_err(|_| ParseError::FamilySpec {
                        offset: at,
                        message: format!("integer `{digits}` is too large"),
                    })
            }
            _ => self.expr(depth).map(Arg::Graph),
        }
    }

    fn expr(&mut self, depth: usize) -> Result<Graph, ParseError> {
        if depth > MAX_DEPTH {
            return Err(self.error("expression nested too deeply"));
        }
        self.skip_ws();
        let at = self.pos;
        let name = self
            .take_while(|b| b.is_ascii_alphanumeric() || b == b'_')
            .to_owned();
        if name.is_empty() {
            return Err(self.error("expected a family name"));
        }
        let mut args = Vec::new();
        if self.eat(b'(') {
            loop {
                args.push(self.arg(depth + 1)?);
                if self.eat(b',') {
                    continue;
                }
                if self.eat(b')') {
                    break;
                }
                return Err(self.error("expected `,` or `)`"));
            }
        }
        build(&name, args).map_err(|e| match e {
            BuildError::Usage(message) => ParseError::FamilySpec {
                offset: at,
                message,
            },
            BuildError::Graph(g) => ParseError::Graph(g),
        })
    }
}

enum BuildError {
    Usage(String),
    Graph(GraphError),
}

impl From<GraphError> for BuildError {
    fn from(e: GraphError) -> Self {
        BuildError::Graph(e)
    }
}

fn build(name: &str, args: Vec<Arg>) -> Result<Graph, BuildError> {
    let arity = |want: &str| BuildError::Usage(format!("`{name}` takes {want}"));
    let int = |args: &[Arg]| match args {
        [Arg::Int(n)] => Ok(*n),
        _ => Err(arity("one integer argument")),
    };
    let graphs = || -> Result<Vec<Graph>, BuildError> {
        args.iter()
            .map(|a| match a {
                Arg::Graph(g) => Ok(g.clone()),
                Arg::Int(_) => Err(BuildError::Usage(format!("`{name}` takes graph arguments"))),
            })
            .collect()
    };
    let g = match name {
        "path" => path(int(&args)?)?,
        "cycle" => cycle(int(&args)?)?,
        "complete" | "K" => complete(int(&args)?)?,
        "star" => star(int(&args)?)?,
        "empty" => empty(int(&args)?)?,
        "F" => family_f(int(&args)?)?,
        "G" => family_g(int(&args)?)?,
        "paw" | "D15" => {
            if !args.is_empty() {
                return Err(arity("no arguments"));
            }
            if name == "paw" {
                paw()
            } else {
                family_d15()
            }
        }
        "cartesian" | "direct" => match graphs()?.as_slice() {
            [a, b] if name == "cartesian" => a.cartesian_product(b)?,
            [a, b] => a.direct_product(b)?,
            _ => return Err(arity("two graph arguments")),
        },
        "corona" => {
            let gs = graphs()?;
            match gs.split_first() {
                None => return Err(arity("at least one graph argument")),
                Some((base, [])) => base.corona()?,
                Some((base, [h])) => base.generalized_corona(&vec![h.clone(); base.order()])?,
                Some((base, hs)) => base.generalized_corona(hs)?,
            }
        }
        _ => return Err(BuildError::Usage(format!("unknown family `{name}`"))),
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_families() {
        assert_eq!(parse_family_spec("cycle(6)").unwrap(), cycle(6).unwrap());
        assert_eq!(parse_family_spec(" paw ").unwrap(), paw());
        assert_eq!(parse_family_spec("G(3)").unwrap(), family_g(3).unwrap());
        assert_eq!(parse_family_spec("D15").unwrap(), family_d15());
    }

    #[test]
    fn nested() {
        let k2 = complete(2).unwrap();
        assert_eq!(
            parse_family_spec("direct(paw,complete(2))").unwrap(),
            paw().direct_product(&k2).unwrap()
        );
        assert_eq!(
            parse_family_spec("corona(cycle(3))").unwrap(),
            cycle(3).unwrap().corona().unwrap()
        );
        assert_eq!(
            parse_family_spec("corona(path(3), complete(2), complete(1), complete(2))").unwrap(),
            path(3)
                .unwrap()
                .generalized_corona(&[k2.clone(), complete(1).unwrap(), k2.clone()])
                .unwrap()
        );
        assert_eq!(
            parse_family_spec("corona(path(2), empty(3))")
                .unwrap()
                .order(),
            8
        );
        assert_eq!(
            parse_family_spec("cartesian(cycle(5), cycle(5))")
                .unwrap()
                .size(),
            50
        );
    }

    #[test]
    fn errors() {
        let usage = |s: &str| matches!(parse_family_spec(s), Err(ParseError::FamilySpec { .. }));
        assert!(usage("hypercube(3)"));
        assert!(usage("path"));
        assert!(usage("path(1,2)"));
        assert!(usage("paw(1)"));
        assert!(usage("direct(paw)"));
        assert!(usage("direct(paw,3)"));
        assert!(usage("cycle(5"));
        assert!(usage("cycle(5))"));
        assert!(usage(""));
        assert!(usage("path(99999999999999999999999)"));
        let deep = "corona(".repeat(40) + "paw" + &")".repeat(40);
        assert!(usage(&deep));
        assert_eq!(
            parse_family_spec("path(65)"),
            Err(ParseError::Graph(GraphError::CapacityExceeded(65)))
        );
        assert!(matches!(
            parse_family_spec("cycle(2)"),
            Err(ParseError::Graph(GraphError::FamilyParameter { .. }))
        ));
        assert!(matches!(
            parse_family_spec("corona(path(3), paw, paw)"),
            Err(ParseError::Graph(GraphError::CoronaArity {
                expected: 3,
                got: 2
            }))
        ));
    }
}
