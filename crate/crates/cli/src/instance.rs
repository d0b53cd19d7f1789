//! Plain-text instance files: a `n m` header, then `m` lines `u v`, one arc
//! each, 0-based. Lines starting with `#` are comments; blank lines are skipped.

use std::fmt::Write as _;
use std::path::Path;

use hamdisc::Digraph;

use crate::error::CliError;

fn parse_err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse { line, msg: msg.into() }
}

fn two_numbers(line_no: usize, line: &str) -> Result<(usize, usize), CliError> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, CliError> {
        let tok = it.next().ok_or_else(|| parse_err(line_no, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| parse_err(line_no, format!("{what} `{tok}` is not a non-negative integer")))
    };
    let a = next("first number")?;
    let b = next("second number")?;
    if let Some(extra) = it.next() {
        return Err(parse_err(line_no, format!("unexpected token `{extra}`")));
    }
    Ok((a, b))
}

pub fn parse_instance(text: &str) -> Result<Digraph, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let (n, m) = two_numbers(hline, header)?;
    let mut d = Digraph::new(n);
    let mut seen = 0;
    for (line_no, line) in lines {
        if seen == m {
            return Err(parse_err(line_no, format!("more than the {m} arcs announced in the header")));
        }
        let (u, v) = two_numbers(line_no, line)?;
        if u >= n || v >= n {
            return Err(parse_err(line_no, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(parse_err(line_no, format!("self-loop at {u}")));
        }
        if d.has_arc(u, v) {
            return Err(parse_err(line_no, format!("duplicate arc {u} {v}")));
        }
        d.add_arc(u, v).expect("checked above");
        seen += 1;
    }
    if seen < m {
        let last = text.lines().count().max(1);
        return Err(parse_err(last, format!("header announces {m} arcs, found {seen}")));
    }
    Ok(d)
}

pub fn read_instance(path: &Path) -> Result<Digraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    parse_instance(&text)
}

/// Serializes arcs in lexicographic order after optional comment lines.
pub fn format_instance(d: &Digraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "# {c}").unwrap();
    }
    writeln!(out, "{} {}", d.n(), d.arc_count()).unwrap();
    for (u, v) in d.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let text = format_instance(&d, &["triangle".into()]);
        assert_eq!(parse_instance(&text).unwrap(), d);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = "# c\n3 2\n0 1\n0 x\n";
        match parse_instance(bad) {
            Err(CliError::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_instance("2 1\n0 0\n"), Err(CliError::Parse { line: 2, .. })));
        assert!(matches!(parse_instance("2 2\n0 1\n0 1\n"), Err(CliError::Parse { line: 3, .. })));
        assert!(matches!(parse_instance("2 1\n0 5\n"), Err(CliError::Parse { line: 2, .. })));
        assert!(matches!(parse_instance("2 2\n0 1\n"), Err(CliError::Parse { .. })));
    }
}
