//! Shared helpers for the line-oriented text formats.

use crate::error::{Error, Result};
use crate::hilbert::QVector;

/// Non-empty, non-comment lines with their 1-based line numbers.
pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_count(token: &str, line: usize) -> Result<usize> {
    token.parse::<usize>().map_err(|_| Error::Parse {
        line,
        message: format!("invalid count `{token}`"),
    })
}

/// Reads a single vector in the vector text form (`4n` reals on one line).
pub fn parse_vector(text: &str) -> Result<QVector> {
    let mut lines = data_lines(text);
    let (line_no, line) = lines.next().ok_or(Error::Parse { line: 1, message: "empty vector file".into() })?;
    let v = QVector::parse_line(line, line_no)?;
    if let Some((extra, _)) = lines.next() {
        return Err(Error::Parse { line: extra, message: "vector file must contain one line".into() });
    }
    Ok(v)
}

/// Reads one real per line.
pub fn parse_reals(text: &str) -> Result<Vec<f64>> {
    data_lines(text)
        .map(|(line_no, line)| {
            let mut toks = line.split_whitespace();
            let v = crate::quaternion::parse_real(toks.next().expect("nonempty line"), line_no)?;
            if toks.next().is_some() {
                return Err(Error::Parse { line: line_no, message: "expected one real per line".into() });
            }
            Ok(v)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_with_comments() {
        let v = parse_reals("# weights\n1\n\n  -2.5e0\n# end\n3").unwrap();
        assert_eq!(v, vec![1.0, -2.5, 3.0]);
        assert!(matches!(parse_reals("1\n2 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_reals("1\nabc\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn vector_file() {
        let v = parse_vector("# h\n1 0 0 0 0 0 0 0\n").unwrap();
        assert_eq!(v.dim(), 2);
        assert!(parse_vector("1 0 0 0\n1 0 0 0\n").is_err());
        assert!(parse_vector("").is_err());
    }
}
