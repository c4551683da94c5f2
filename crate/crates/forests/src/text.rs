use std::fmt;

use crate::forest::{ForestError, RootedForest, Vertex};

/// Failure to read a forest from its text form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Syntax(String),
    Invalid(ForestError),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax(msg) => write!(f, "{msg}"),
            ParseError::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ParseError {}

/// Renders a forest as one line: `s m : 1->P1 2->P2 .. m->Pm`, where each
/// parent is a car label or `0g` for root `g`.
pub fn format_forest(forest: &RootedForest) -> String {
    let mut out = format!("{} {} :", forest.roots(), forest.cars());
    for c in 1..=forest.cars() {
        out.push_str(&format!(" {c}->{}", forest.parent_of(c)));
    }
    out
}

/// Reads the line format produced by [`format_forest`]. Every car must
/// appear exactly once on the left of an arrow; order is free.
pub fn parse_forest(line: &str) -> Result<RootedForest, ParseError> {
    let (head, tail) = line
        .split_once(':')
        .ok_or_else(|| ParseError::Syntax("expected `s m : c->p ..`".into()))?;
    let header: Vec<&str> = head.split_whitespace().collect();
    let [roots, cars] = header.as_slice() else {
        return Err(ParseError::Syntax(format!(
            "header must be `s m`, got `{}`",
            head.trim()
        )));
    };
    let roots: usize = parse_number(roots)?;
    let cars: usize = parse_number(cars)?;

    let mut parent: Vec<Option<Vertex>> = vec![None; cars];
    for token in tail.split_whitespace() {
        let (child, par) = token
            .split_once("->")
            .ok_or_else(|| ParseError::Syntax(format!("`{token}` is not `child->parent`")))?;
        let child: usize = parse_number(child)?;
        if child < 1 || child > cars {
            return Err(ParseError::Syntax(format!(
                "car {child} out of range 1..={cars}"
            )));
        }
        if parent[child - 1].is_some() {
            return Err(ParseError::Syntax(format!("car {child} listed twice")));
        }
        parent[child - 1] = Some(parse_parent(par)?);
    }
    let parent: Vec<Vertex> = parent
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.ok_or_else(|| ParseError::Syntax(format!("car {} missing", i + 1))))
        .collect::<Result<_, _>>()?;
    RootedForest::new(roots, parent).map_err(ParseError::Invalid)
}

fn parse_parent(token: &str) -> Result<Vertex, ParseError> {
    if let Some(rest) = token.strip_prefix('0') {
        if !rest.is_empty() {
            return Ok(Vertex::Root(parse_number(rest)?));
        }
    }
    Ok(Vertex::Car(parse_number(token)?))
}

fn parse_number(token: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::Syntax(format!("`{token}` is not a number")))
}

/// Renders a forest in DOT for graphviz: roots as boxes on one rank,
/// edges from parent down to child.
pub fn forest_to_dot(forest: &RootedForest) -> String {
    let mut out = String::from("digraph forest {\n  rankdir=TB;\n  node [shape=circle];\n");
    out.push_str("  { rank=source;");
    for g in 1..=forest.roots() {
        out.push_str(&format!(" r{g};"));
    }
    out.push_str(" }\n");
    for g in 1..=forest.roots() {
        out.push_str(&format!("  r{g} [label=\"0{g}\", shape=square];\n"));
    }
    for c in 1..=forest.cars() {
        out.push_str(&format!("  v{c} [label=\"{c}\"];\n"));
    }
    for c in 1..=forest.cars() {
        match forest.parent_of(c) {
            Vertex::Root(g) => out.push_str(&format!("  r{g} -> v{c};\n")),
            Vertex::Car(p) => out.push_str(&format!("  v{p} -> v{c};\n")),
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata::running_example;

    #[test]
    fn round_trips() {
        let f = running_example();
        let line = format_forest(&f);
        assert_eq!(
            line,
            "4 9 : 1->4 2->01 3->04 4->01 5->3 6->03 7->4 8->5 9->3"
        );
        assert_eq!(parse_forest(&line).unwrap(), f);

        let empty = RootedForest::new(2, vec![]).unwrap();
        assert_eq!(parse_forest(&format_forest(&empty)).unwrap(), empty);
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(parse_forest("1 1 :"), Err(ParseError::Syntax(_))));
        assert!(matches!(parse_forest("1 2 : 1->01 1->01"), Err(ParseError::Syntax(_))));
        assert!(matches!(
            parse_forest("1 1 : 1->2"),
            Err(ParseError::Invalid(ForestError::CarOutOfRange { .. }))
        ));
        assert!(matches!(
            parse_forest("1 2 : 1->2 2->1"),
            Err(ParseError::Invalid(ForestError::Cycle { .. }))
        ));
        assert!(matches!(
            parse_forest("1 1 : 1->02"),
            Err(ParseError::Invalid(ForestError::RootOutOfRange { .. }))
        ));
    }

    #[test]
    fn dot_mentions_every_edge() {
        let dot = forest_to_dot(&running_example());
        assert!(dot.contains("r1 -> v2;"));
        assert!(dot.contains("v5 -> v8;"));
        assert!(dot.starts_with("digraph"));
    }
}
