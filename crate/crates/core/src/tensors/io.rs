use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::scalar::ComplexScalar;

use super::Tensor;

const MAGIC: &str = "# g2kit tensor v1";

/// Text form: magic line, header, then `<i1> ... <ir> <scalar>` per nonzero
/// entry, 1-based, lexicographic.
pub fn render_tensor(t: &Tensor) -> String {
    let dims: Vec<String> = t.dims.iter().map(usize::to_string).collect();
    let mut out = format!(
        "{MAGIC}\nname={} rank={} dims={} indexbase=1\n",
        t.name,
        t.rank(),
        dims.join(",")
    );
    for (idx, v) in t.nonzeros() {
        for i in idx {
            let _ = write!(out, "{} ", i + 1);
        }
        out.push_str(&ComplexScalar::real(v.clone()).render());
        out.push('\n');
    }
    out
}

fn header_field<'a>(line: &'a str, key: &str, lineno: usize) -> Result<&'a str> {
    line.split_whitespace()
        .find_map(|kv| kv.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
        .ok_or_else(|| Error::parse_at(lineno, key, "missing"))
}

pub fn parse_tensor(text: &str) -> Result<Tensor> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l));
    match lines.next() {
        Some((_, l)) if l.trim() == MAGIC => {}
        _ => return Err(Error::parse_at(1, "magic", format!("expected {MAGIC:?}"))),
    }
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse_at(2, "header", "missing header line"))?;
    let name = header_field(header, "name", hl)?;
    let rank: usize = header_field(header, "rank", hl)?
        .parse()
        .map_err(|_| Error::parse_at(hl, "rank", "not an integer"))?;
    let dims: Vec<usize> = header_field(header, "dims", hl)?
        .split(',')
        .map(|d| d.parse::<usize>().ok().filter(|&d| d > 0))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::parse_at(hl, "dims", "expected positive integers separated by commas"))?;
    if dims.len() != rank {
        return Err(Error::parse_at(
            hl,
            "dims",
            format!("{} dims for rank {rank}", dims.len()),
        ));
    }
    if header_field(header, "indexbase", hl)? != "1" {
        return Err(Error::parse_at(hl, "indexbase", "only 1 is supported"));
    }
    let mut t = Tensor::zeros(name, &dims);
    for (lineno, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != rank + 1 {
            return Err(Error::parse_at(
                lineno,
                "entry",
                format!("expected {rank} indices and a scalar, found {} fields", parts.len()),
            ));
        }
        let mut idx = Vec::with_capacity(rank);
        for (p, tok) in parts[..rank].iter().enumerate() {
            let field = format!("index{}", p + 1);
            let i: usize = tok
                .parse()
                .map_err(|_| Error::parse_at(lineno, field.clone(), format!("not an index: {tok:?}")))?;
            if i == 0 || i > dims[p] {
                return Err(Error::parse_at(
                    lineno,
                    field,
                    format!("{i} out of range 1..={}", dims[p]),
                ));
            }
            idx.push(i - 1);
        }
        let v = ComplexScalar::parse(parts[rank]).map_err(|e| Error::parse_at(lineno, "scalar", e.to_string()))?;
        if !v.im.is_zero() {
            return Err(Error::parse_at(lineno, "scalar", "tensor entries must be real"));
        }
        t.set(&idx, v.re);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensors::build_psi;

    #[test]
    fn round_trip_and_header() {
        let psi = build_psi();
        let text = render_tensor(&psi);
        assert!(text.starts_with("# g2kit tensor v1\nname=psi_abc rank=3 dims=7,7,7 indexbase=1\n"));
        assert_eq!(text.lines().count(), 2 + 42);
        assert_eq!(parse_tensor(&text).unwrap(), psi);
    }

    #[test]
    fn errors_name_line_and_field() {
        let bad = "# g2kit tensor v1\nname=x rank=2 dims=2,2 indexbase=1\n1 1 1\n1 3 1\n";
        let e = parse_tensor(bad).unwrap_err().to_string();
        assert!(e.contains("line 4") && e.contains("index2"), "{e}");
        let bad = "# g2kit tensor v1\nname=x rank=2 dims=2,2 indexbase=1\n1 1 1/0\n";
        let e = parse_tensor(bad).unwrap_err().to_string();
        assert!(e.contains("line 3") && e.contains("scalar"), "{e}");
        let e = parse_tensor("nope").unwrap_err().to_string();
        assert!(e.contains("line 1"), "{e}");
        let bad = "# g2kit tensor v1\nname=x rank=3 dims=2,2 indexbase=1\n";
        assert!(parse_tensor(bad).unwrap_err().to_string().contains("dims"));
    }
}
