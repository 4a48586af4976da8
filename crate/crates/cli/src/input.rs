use std::fs;
use std::io::Read;

use clap::Args;
use domgame_core::family_spec::parse_family_spec;
use domgame_core::io::{parse_edge_list, parse_graph6_lines};
use domgame_core::Graph;

use crate::CliError;

#[derive(Debug, Args)]
#[group(id = "input", multiple = false)]
pub struct InputArgs {
    /// File with one graph6 string per line (`-` for stdin)
    #[arg(long, value_name = "FILE")]
    pub graph6: Option<String>,
    /// Edge-list file: a header `n m`, then one `u v` pair per line (`-` for stdin)
    #[arg(long, value_name = "FILE")]
    pub edges: Option<String>,
    /// Named family (`G_r`, `F_4k`, `D15`, `paw`, ...) or an expression such as `direct(paw,complete(2))`
    #[arg(long, value_name = "NAME")]
    pub family: Option<String>,
}

#[derive(Debug, Args)]
pub struct FamilyParams {
    /// Parameter for `G_r` and other one-parameter families
    #[arg(long, requires = "family")]
    pub r: Option<usize>,
    /// Parameter for `F_4k` and other one-parameter families
    #[arg(long, requires = "family")]
    pub k: Option<usize>,
}

impl InputArgs {
    pub fn is_given(&self) -> bool {
        self.graph6.is_some() || self.edges.is_some() || self.family.is_some()
    }

    pub fn load(&self, params: &FamilyParams) -> Result<Vec<Graph>, CliError> {
        if let Some(path) = &self.graph6 {
            let graphs = parse_graph6_lines(&read(path)?)
                .map_err(|e| CliError::Input(format!("{path}: {e}")))?;
            if graphs.is_empty() {
                return Err(CliError::Input(format!("{path}: no graphs")));
            }
            Ok(graphs)
        } else if let Some(path) = &self.edges {
            let g = parse_edge_list(&read(path)?)
                .map_err(|e| CliError::Input(format!("{path}: {e}")))?;
            Ok(vec![g])
        } else if let Some(name) = &self.family {
            let spec = family_expression(name, params)?;
            let g =
                parse_family_spec(&spec).map_err(|e| CliError::Input(format!("`{spec}`: {e}")))?;
            Ok(vec![g])
        } else {
            Err(CliError::Usage(
                "one of --graph6, --edges or --family is required".into(),
            ))
        }
    }
}

fn read(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

/// Maps `--family NAME [--r R | --k K]` onto the expression grammar.
fn family_expression(name: &str, params: &FamilyParams) -> Result<String, CliError> {
    let name = name.trim();
    let (base, wants) = match name {
        "G_r" | "G" => ("G", Some("r")),
        "F_4k" | "F" => ("F", Some("k")),
        "D_15" => ("D15", None),
        other => (other, None),
    };
    let param = match (params.r, params.k, wants) {
        (Some(_), Some(_), _) => {
            return Err(CliError::Usage("give at most one of --r and --k".into()))
        }
        (None, None, _) => None,
        (Some(_), None, Some("k")) => return Err(CliError::Usage(format!("{name} takes --k"))),
        (None, Some(_), Some("r")) => return Err(CliError::Usage(format!("{name} takes --r"))),
        (r, k, _) => r.or(k),
    };
    match param {
        None if wants.is_some() => Err(CliError::Usage(format!(
            "{name} needs --{}",
            wants.unwrap()
        ))),
        None => Ok(base.to_string()),
        Some(_) if base.contains('(') => Err(CliError::Usage(format!(
            "`{name}` already has arguments; drop --r/--k"
        ))),
        Some(p) => Ok(format!("{base}({p})")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(r: Option<usize>, k: Option<usize>) -> FamilyParams {
        FamilyParams { r, k }
    }

    #[test]
    fn family_names() {
        assert_eq!(
            family_expression("G_r", &params(Some(3), None)).unwrap(),
            "G(3)"
        );
        assert_eq!(
            family_expression("F_4k", &params(None, Some(2))).unwrap(),
            "F(2)"
        );
        assert_eq!(
            family_expression("D_15", &params(None, None)).unwrap(),
            "D15"
        );
        assert_eq!(
            family_expression("cycle", &params(None, Some(5))).unwrap(),
            "cycle(5)"
        );
        assert_eq!(
            family_expression("direct(paw,complete(2))", &params(None, None)).unwrap(),
            "direct(paw,complete(2))"
        );
    }

    #[test]
    fn family_param_errors() {
        assert!(family_expression("G_r", &params(None, None)).is_err());
        assert!(family_expression("G_r", &params(None, Some(3))).is_err());
        assert!(family_expression("F", &params(Some(2), None)).is_err());
        assert!(family_expression("path", &params(Some(2), Some(2))).is_err());
        assert!(family_expression("cycle(4)", &params(Some(2), None)).is_err());
    }
}
