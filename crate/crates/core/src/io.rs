//! Matrix input: four whitespace-separated rows of four rationals with `#`
//! comments, or a JSON object `{"matrix": [[...], ...]}` whose entries are
//! integers or rational strings.

use serde_json::Value;

use crate::error::ParseError;
use crate::matrix::Matrix4;
use crate::rational::Rational;

pub fn parse_matrix(text: &str) -> Result<Matrix4, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_rows(text)
    }
}

fn parse_rows(text: &str) -> Result<Matrix4, ParseError> {
    let mut rows: Vec<[Rational; 4]> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let lineno = n + 1;
        if rows.len() == 4 {
            return Err(ParseError::new("more than four rows").at(format!("line {lineno}")));
        }
        let mut row = Vec::with_capacity(4);
        let mut col = 0;
        for token in line.split_whitespace() {
            // Byte offset of the token within the line, for the message.
            let offset = line[col..].find(token).map_or(col, |k| col + k);
            col = offset + token.len();
            let x: Rational = token.parse().map_err(|e: ParseError| {
                ParseError::new(format!("{} in {token:?}", e.message)).at(format!("line {lineno}, column {}", offset + 1))
            })?;
            row.push(x);
        }
        if row.len() != 4 {
            return Err(ParseError::new(format!("expected 4 entries, found {}", row.len())).at(format!("line {lineno}")));
        }
        rows.push([row[0], row[1], row[2], row[3]]);
    }
    if rows.len() != 4 {
        return Err(ParseError::new(format!("expected 4 rows, found {}", rows.len())).at("end of input"));
    }
    Ok(Matrix4([rows[0], rows[1], rows[2], rows[3]]))
}

fn json_entry(v: &Value, i: usize, j: usize) -> Result<Rational, ParseError> {
    let at = || format!("matrix[{i}][{j}]");
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(k) => Ok(Rational::from_int(k)),
            None => Err(ParseError::new(format!("{n} is not an integer; write fractions as strings")).at(at())),
        },
        Value::String(s) => s.parse().map_err(|e: ParseError| ParseError::new(e.message).at(at())),
        other => Err(ParseError::new(format!("expected a number or string, found {other}")).at(at())),
    }
}

fn parse_json(text: &str) -> Result<Matrix4, ParseError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| ParseError::new(e.to_string()).at(format!("line {}, column {}", e.line(), e.column())))?;
    let rows = value
        .get("matrix")
        .and_then(Value::as_array)
        .ok_or_else(|| ParseError::new("missing array field \"matrix\""))?;
    if rows.len() != 4 {
        return Err(ParseError::new(format!("expected 4 rows, found {}", rows.len())).at("matrix"));
    }
    let mut m = Matrix4::zero();
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .filter(|r| r.len() == 4)
            .ok_or_else(|| ParseError::new("expected an array of 4 entries").at(format!("matrix[{i}]")))?;
        for (j, v) in row.iter().enumerate() {
            m.0[i][j] = json_entry(v, i, j)?;
        }
    }
    Ok(m)
}
