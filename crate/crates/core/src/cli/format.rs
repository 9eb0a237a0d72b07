//! The lattice text format and DOT export.
//!
//! ```text
//! n=3
//! 0: up=[1] label=0
//! 1: up=[2]
//! 2: up=[]
//! ```
//!
//! Up lists are written left to right; down lists are derived. An optional
//! `down=[...]` field is checked against the derived list.

use std::fmt::{self, Write as _};

use crate::lattice::{LatticeDiagram, RawDiagram};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn column(&self) -> usize {
        self.pos + 1
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_spaces(&mut self) {
        let r = self.rest();
        self.pos += r.len() - r.trim_start_matches(' ').len();
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(err(self.line, self.column(), format!("expected `{token}`")))
        }
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        let r = self.rest();
        let len = r.len() - r.trim_start_matches(|c: char| c.is_ascii_digit()).len();
        if len == 0 {
            return Err(err(self.line, self.column(), "expected a number"));
        }
        let v = r[..len]
            .parse()
            .map_err(|_| err(self.line, self.column(), "number too large"))?;
        self.pos += len;
        Ok(v)
    }

    fn list(&mut self) -> Result<Vec<usize>, ParseError> {
        self.expect("[")?;
        let mut out = Vec::new();
        self.skip_spaces();
        if self.rest().starts_with(']') {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            self.skip_spaces();
            out.push(self.number()?);
            self.skip_spaces();
            if self.rest().starts_with(']') {
                self.pos += 1;
                return Ok(out);
            }
            self.expect(",")?;
        }
    }
}

/// The raw diagram plus any down lists given explicitly.
pub type ParsedRaw = (RawDiagram, Vec<Option<Vec<usize>>>);

/// Parses the up lists, labels and optional down lists without validating
/// the diagram.
pub fn parse_raw(text: &str) -> Result<ParsedRaw, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim_end()))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (first_no, first) = lines.next().ok_or_else(|| err(1, 1, "empty input"))?;
    let mut c = Cursor {
        text: first,
        pos: 0,
        line: first_no,
    };
    c.expect("n=")?;
    let n = c.number()?;
    if !c.rest().trim().is_empty() {
        return Err(err(first_no, c.column(), "trailing text after the element count"));
    }
    let mut up = vec![None; n];
    let mut labels = vec![None; n];
    let mut downs = vec![None; n];
    let mut seen = 0;
    for (no, line) in lines {
        let mut c = Cursor {
            text: line,
            pos: 0,
            line: no,
        };
        c.skip_spaces();
        let col = c.column();
        let i = c.number()?;
        if i >= n {
            return Err(err(no, col, format!("element {i} out of range (n = {n})")));
        }
        if up[i].is_some() {
            return Err(err(no, col, format!("element {i} defined twice")));
        }
        c.expect(":")?;
        c.skip_spaces();
        c.expect("up=")?;
        let list_col = c.column();
        let ups = c.list()?;
        if let Some(&bad) = ups.iter().find(|&&y| y >= n) {
            return Err(err(no, list_col, format!("element {i}: cover {bad} out of range")));
        }
        up[i] = Some(ups);
        loop {
            c.skip_spaces();
            if c.rest().is_empty() {
                break;
            }
            if c.rest().starts_with("down=") {
                c.pos += 5;
                downs[i] = Some(c.list()?);
            } else if c.rest().starts_with("label=") {
                c.pos += 6;
                labels[i] = Some(c.rest().to_string());
                break;
            } else {
                return Err(err(no, c.column(), "expected `down=` or `label=`"));
            }
        }
        seen += 1;
    }
    if seen != n {
        let missing = up.iter().position(Option::is_none).unwrap();
        return Err(err(first_no, 1, format!("element {missing} is never defined")));
    }
    let up = up.into_iter().map(Option::unwrap).collect();
    Ok((RawDiagram::from_up_lists(up, labels), downs))
}

/// Parses and validates a diagram.
pub fn parse_lattice(text: &str) -> Result<LatticeDiagram, ParseError> {
    let (raw, downs) = parse_raw(text)?;
    for (i, given) in downs.iter().enumerate() {
        if let Some(given) = given {
            if *given != raw.down[i] {
                return Err(err(
                    line_of(text, i),
                    1,
                    format!(
                        "element {i}: down list {given:?} does not match the derived {:?}",
                        raw.down[i]
                    ),
                ));
            }
        }
    }
    LatticeDiagram::from_raw(raw).map_err(|e| err(1, 1, e.to_string()))
}

fn line_of(text: &str, element: usize) -> usize {
    let prefix = format!("{element}:");
    text.lines()
        .position(|l| l.trim_start().starts_with(&prefix))
        .map_or(1, |k| k + 1)
}

fn join_ids(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn emit_lattice(d: &LatticeDiagram) -> String {
    let mut s = format!("n={}\n", d.len());
    for x in d.elements() {
        write!(s, "{x}: up=[{}]", join_ids(d.up(x))).unwrap();
        if let Some(l) = d.label(x) {
            write!(s, " label={l}").unwrap();
        }
        s.push('\n');
    }
    s
}

/// DOT with one rank per height, nodes of a rank ordered left to right.
/// `groups` are drawn as dashed clusters, for kernel classes of a map.
pub fn emit_dot(d: &LatticeDiagram, groups: &[Vec<usize>]) -> String {
    let mut s = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n");
    for x in d.elements() {
        writeln!(s, "  n{x} [label=\"{}\"];", d.name(x).replace('"', "\\\"")).unwrap();
    }
    let max_h = d.height(d.top());
    for h in 0..=max_h {
        let mut row: Vec<usize> = d.elements().filter(|&x| d.height(x) == h).collect();
        row.sort_by(|&a, &b| match d.left_of(a, b) {
            Ok(true) => std::cmp::Ordering::Less,
            Ok(false) => std::cmp::Ordering::Greater,
            Err(_) => a.cmp(&b),
        });
        let ids: Vec<String> = row.iter().map(|x| format!("n{x}")).collect();
        writeln!(s, "  {{ rank=same; {}; }}", ids.join("; ")).unwrap();
        if row.len() > 1 {
            writeln!(s, "  {} [style=invis];", ids.join(" -> ")).unwrap();
        }
    }
    for x in d.elements() {
        for &y in d.up(x) {
            writeln!(s, "  n{x} -> n{y} [arrowhead=none];").unwrap();
        }
    }
    for (k, g) in groups.iter().enumerate() {
        writeln!(
            s,
            "  subgraph cluster_k{k} {{ style=dashed; {}; }}",
            g.iter().map(|x| format!("n{x}")).collect::<Vec<_>>().join("; ")
        )
        .unwrap();
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trip_fixtures() {
        for d in fixtures::all() {
            let text = emit_lattice(&d);
            let back = parse_lattice(&text).unwrap();
            assert_eq!(back, d);
            assert_eq!(emit_lattice(&back), text);
        }
    }

    #[test]
    fn s7_text() {
        let text = emit_lattice(&fixtures::s7());
        assert!(text.starts_with("n=7\n0: up=[1,2] label=0\n"));
    }

    #[test]
    fn inconsistent_down_list_names_the_element() {
        let text = "n=4\n0: up=[1,2]\n1: up=[3]\n2: up=[3]\n3: up=[] down=[2,1]\n";
        let e = parse_lattice(text).unwrap_err();
        assert!(e.message.contains("element 3"), "{e}");
        assert_eq!(e.line, 5);
        assert!(parse_lattice(&text.replace("[2,1]", "[1,2]")).is_ok());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let e = parse_lattice("n=2\n0: up=[1\n1: up=[]\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 9));
        let e = parse_lattice("n=2\n0: up=[5]\n1: up=[]\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_lattice("n=2\n0: up=[1]\n").unwrap_err();
        assert!(e.message.contains("element 1"));
        let e = parse_lattice("x=2\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
    }

    #[test]
    fn invalid_diagram_rejected() {
        // two tops
        assert!(parse_lattice("n=3\n0: up=[1,2]\n1: up=[]\n2: up=[]\n").is_err());
    }

    #[test]
    fn dot_of_s7() {
        let dot = emit_dot(&fixtures::s7(), &[]);
        assert_eq!(dot.matches("[label=").count(), 7);
        assert_eq!(dot.matches("arrowhead=none").count(), 9);
        assert_eq!(dot, emit_dot(&fixtures::s7(), &[]));
    }
}
