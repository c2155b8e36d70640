//! Text format: a line with `n`, `n` rows of the `⊼` table, a blank line, `n`
//! rows of the `⊻` table. Entries are 1-based and whitespace separated.

use super::{AlgebraError, FiniteBiquandle};

pub fn parse_biquandle(text: &str) -> Result<FiniteBiquandle, AlgebraError> {
    let (over, under) = parse_tables(text)?;
    FiniteBiquandle::from_tables(&over, &under)
}

/// The raw 1-based `(⊼, ⊻)` tables, checked for shape only.
pub fn parse_tables(text: &str) -> Result<(Vec<Vec<usize>>, Vec<Vec<usize>>), AlgebraError> {
    let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| AlgebraError::Parse {
                    line: i + 1,
                    msg: format!("expected an integer, found {t:?}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((i + 1, nums));
    }
    let Some((first_line, header)) = rows.first() else {
        return Err(AlgebraError::Parse { line: 1, msg: "empty input".into() });
    };
    if header.len() != 1 {
        return Err(AlgebraError::Parse {
            line: *first_line,
            msg: "first line must hold the order n".into(),
        });
    }
    let n = header[0];
    if n == 0 {
        return Err(AlgebraError::Parse { line: *first_line, msg: "order must be positive".into() });
    }
    let body = &rows[1..];
    if body.len() != 2 * n {
        let line = body.last().map_or(*first_line, |r| r.0);
        return Err(AlgebraError::Parse {
            line,
            msg: format!("expected {} table rows, found {}", 2 * n, body.len()),
        });
    }
    for (line, row) in body {
        if row.len() != n {
            return Err(AlgebraError::Parse {
                line: *line,
                msg: format!("expected {n} entries, found {}", row.len()),
            });
        }
    }
    let over: Vec<Vec<usize>> = body[..n].iter().map(|r| r.1.clone()).collect();
    let under: Vec<Vec<usize>> = body[n..].iter().map(|r| r.1.clone()).collect();
    Ok((over, under))
}

pub fn serialize_biquandle(b: &FiniteBiquandle) -> String {
    let (over, under) = b.to_tables();
    let mut out = format!("{}\n", b.order());
    let render = |t: &[Vec<usize>], out: &mut String| {
        for row in t {
            let line: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
    };
    render(&over, &mut out);
    out.push('\n');
    render(&under, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{biquandle_t, biquandle_z, make_dihedral};

    #[test]
    fn round_trip() {
        for b in [biquandle_t(), biquandle_z(), make_dihedral(5).unwrap().into_biquandle()] {
            let text = serialize_biquandle(&b);
            let back = parse_biquandle(&text).unwrap();
            assert_eq!(back.to_tables(), b.to_tables());
        }
    }

    #[test]
    fn layout() {
        let text = serialize_biquandle(&make_dihedral(3).unwrap().into_biquandle());
        assert_eq!(text, "3\n1 1 1\n2 2 2\n3 3 3\n\n1 3 2\n3 2 1\n2 1 3\n");
    }

    #[test]
    fn errors_carry_lines() {
        let err = parse_biquandle("2\n1 1\n2 x\n\n1 1\n2 2\n").unwrap_err();
        assert_eq!(err, AlgebraError::Parse { line: 3, msg: "expected an integer, found \"x\"".into() });
        assert!(matches!(parse_biquandle("2\n1 1\n2 2\n"), Err(AlgebraError::Parse { .. })));
        assert!(matches!(parse_biquandle("2\n1 2\n1 2\n\n1 1\n2 2\n"), Err(AlgebraError::Axiom(_))));
    }
}
