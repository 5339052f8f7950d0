//! Text formats: generator matrices (`.gen`), Boolean maps (`.pmap`),
//! factor sets (`.fs`).

use crate::boolean_map::BooleanMap;
use crate::error::{Error, Result};
use crate::gf2::{BitVector, LinearCode};
use crate::loops::FactorSet;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_bits(line: usize, s: &str) -> Result<BitVector> {
    s.parse().map_err(|e| match e {
        Error::Parse { msg, .. } => parse_err(line, msg),
        other => other,
    })
}

pub fn parse_code(text: &str) -> Result<LinearCode> {
    let mut rows = Vec::new();
    for (line, s) in content_lines(text) {
        let row = parse_bits(line, s)?;
        if let Some(first) = rows.first() {
            let first: &BitVector = first;
            if first.len() != row.len() {
                return Err(parse_err(
                    line,
                    format!("row length {} differs from {}", row.len(), first.len()),
                ));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(parse_err(0, "no generator rows"));
    }
    LinearCode::new(rows[0].len(), rows)
}

pub fn write_code(code: &LinearCode) -> String {
    let mut out = String::new();
    for row in code.rows() {
        out.push_str(&row.to_string());
        out.push('\n');
    }
    out
}

/// Parses a `.pmap` file. With `pointed` set, `P(0) = 1` is rejected.
pub fn parse_map(text: &str, pointed: bool) -> Result<BooleanMap> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(0, "missing header"))?;
    let m: usize = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["m", n] => n
            .parse()
            .map_err(|_| parse_err(hline, format!("bad dimension {n:?}")))?,
        _ => return Err(parse_err(hline, "expected `m <int>`")),
    };
    if m == 0 || m > crate::boolean_map::MAX_DIM {
        return Err(parse_err(hline, format!("unsupported dimension {m}")));
    }
    let mut table = vec![false; 1 << m];
    let mut listed = vec![false; 1 << m];
    for (line, s) in lines {
        let (point, value) = match s.split_whitespace().collect::<Vec<_>>()[..] {
            [point, value] => (point, value),
            _ => return Err(parse_err(line, "expected `<bitstring> <0|1>`")),
        };
        if point.len() != m {
            return Err(parse_err(
                line,
                format!("bitstring length {} differs from m = {m}", point.len()),
            ));
        }
        let bits = parse_bits(line, point)?;
        let x = (0..m).filter(|&i| bits.get(i)).fold(0usize, |acc, i| acc | 1 << i);
        let value = match value {
            "0" => false,
            "1" => true,
            other => return Err(parse_err(line, format!("bad value {other:?}"))),
        };
        if listed[x] {
            return Err(parse_err(line, format!("duplicate vector {point}")));
        }
        listed[x] = true;
        table[x] = value;
    }
    let p = BooleanMap::new(m, table)?;
    if pointed {
        p.ensure_pointed()?;
    }
    Ok(p)
}

/// Point `x` as a bitstring, leftmost character = coordinate 1.
pub fn point_string(m: usize, x: usize) -> String {
    (0..m).map(|i| if x >> i & 1 == 1 { '1' } else { '0' }).collect()
}

/// Writes only the points where the map is 1.
pub fn write_map(p: &BooleanMap) -> String {
    let mut out = format!("m {}\n", p.dim());
    for x in (0..p.size()).filter(|&x| p.eval(x)) {
        out.push_str(&format!("{} 1\n", point_string(p.dim(), x)));
    }
    out
}

pub fn parse_factor_set(text: &str) -> Result<FactorSet> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(0, "missing header"))?;
    let k: usize = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["dim", n] => n
            .parse()
            .map_err(|_| parse_err(hline, format!("bad dimension {n:?}")))?,
        _ => return Err(parse_err(hline, "expected `dim <int>`")),
    };
    if k > 12 {
        return Err(parse_err(hline, format!("dimension {k} too large")));
    }
    let n = 1usize << k;
    let mut table = Vec::with_capacity(n * n);
    let mut rows = 0;
    for (line, s) in lines {
        let row = parse_bits(line, s)?;
        if row.len() != n {
            return Err(parse_err(line, format!("row has {} entries, expected {n}", row.len())));
        }
        table.extend(row.iter());
        rows += 1;
    }
    if rows != n {
        return Err(parse_err(0, format!("expected {n} rows, found {rows}")));
    }
    FactorSet::new(k, table)
}

pub fn write_factor_set(fs: &FactorSet) -> String {
    let n = fs.size();
    let mut out = format!("dim {}\n", fs.dim());
    for c in 0..n {
        out.extend((0..n).map(|d| if fs.get(c, d) { '1' } else { '0' }));
        out.push('\n');
    }
    out
}
