//! Parsing of index and argument specifications given on the command line.

use anyhow::{anyhow, bail, Context, Result};
use mpl_core::wordalg::{ArgSymbol, ArgVector, Index};
use mpl_core::Complex64;

/// Accepts Unicode minus signs as well as ASCII ones.
fn normalize(s: &str) -> String {
    s.trim().replace(['−', '–'], "-").replace(' ', "")
}

/// `"2,1,3"` → `(2,1,3)`; the empty string gives the empty index.
pub fn parse_index(s: &str) -> Result<Index> {
    let s = normalize(s);
    if s.is_empty() {
        return Ok(Index::empty());
    }
    let parts = s
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|p| p.parse::<u32>().with_context(|| format!("bad index entry {p:?}")))
        .collect::<Result<Vec<_>>>()?;
    Index::new(parts).map_err(|e| anyhow!("{e}"))
}

/// Complex literal: `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let s = normalize(s);
    if s.is_empty() {
        bail!("empty complex literal");
    }
    let Some(body) = s.strip_suffix('i') else {
        let re: f64 = s.parse().with_context(|| format!("bad number {s:?}"))?;
        return Ok(Complex64::new(re, 0.0));
    };
    // split at the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let mut cut = 0;
    for (pos, &c) in bytes.iter().enumerate().skip(1) {
        if (c == b'+' || c == b'-') && !matches!(bytes[pos - 1], b'e' | b'E') {
            cut = pos;
        }
    }
    let (re_part, im_part) = body.split_at(cut);
    let re = if re_part.is_empty() {
        0.0
    } else {
        re_part.parse().with_context(|| format!("bad real part in {s:?}"))?
    };
    let im = match im_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => t.parse().with_context(|| format!("bad imaginary part in {s:?}"))?,
    };
    Ok(Complex64::new(re, im))
}

/// Comma-separated arguments; `rN:j` stands for `e^{2πi j/N}`.
pub fn parse_args(s: &str) -> Result<ArgVector> {
    let s = normalize(s);
    if s.is_empty() {
        return Ok(ArgVector::empty());
    }
    let mut entries = Vec::new();
    for (i, tok) in s.trim_matches(|c| c == '(' || c == ')').split(',').enumerate() {
        if let Some(root) = tok.strip_prefix('r') {
            let (n, j) = root
                .split_once(':')
                .ok_or_else(|| anyhow!("root shorthand must look like rN:j, got {tok:?}"))?;
            let n: u32 = n.parse().with_context(|| format!("bad root order in {tok:?}"))?;
            let j: i64 = j.parse().with_context(|| format!("bad root exponent in {tok:?}"))?;
            if n == 0 {
                bail!("root order must be positive");
            }
            entries.push(ArgSymbol::root_of_unity(n, j));
        } else {
            entries.push(ArgSymbol::slot(i as u32, parse_complex(tok)?));
        }
    }
    Ok(ArgVector::new(entries))
}
