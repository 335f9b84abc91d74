use std::io::{BufRead, Write};

use super::{GroupElement, GroupError};

/// First line of a subgroup dump.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DumpHeader {
    /// Matrix size.
    pub n: usize,
    pub p: u64,
    pub m: usize,
    /// Modulus of `k` over `F_p`.
    pub g: String,
    /// Modulus of the quotient ring over `k`.
    pub f: String,
    /// Digits per entry, `m * deg f`.
    pub width: usize,
}

const MAGIC: &str = "hdx-subgroup v1";

/// Writes the header line and one line per element: row-major entries
/// separated by spaces, each entry its `F_p` digits separated by commas.
pub fn write_dump<W: Write>(
    out: &mut W,
    header: &DumpHeader,
    elements: &[GroupElement],
) -> std::io::Result<()> {
    writeln!(
        out,
        "{MAGIC} n={} p={} m={} g={} f={} width={} order={}",
        header.n,
        header.p,
        header.m,
        header.g,
        header.f,
        header.width,
        elements.len()
    )?;
    for e in elements {
        let entries: Vec<String> = e
            .entries()
            .iter()
            .map(|&code| {
                let mut c = code;
                (0..header.width)
                    .map(|_| {
                        let d = c % header.p;
                        c /= header.p;
                        d.to_string()
                    })
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        writeln!(out, "{}", entries.join(" "))?;
    }
    Ok(())
}

pub fn read_dump<R: BufRead>(input: R) -> Result<(DumpHeader, Vec<GroupElement>), GroupError> {
    let bad = |msg: String| GroupError::Invalid(format!("subgroup dump: {msg}"));
    let mut lines = input.lines();
    let first = lines
        .next()
        .ok_or_else(|| bad("empty input".into()))?
        .map_err(|e| bad(e.to_string()))?;
    let rest = first
        .strip_prefix(MAGIC)
        .ok_or_else(|| bad(format!("missing {MAGIC:?} header")))?;
    let field = |name: &str| -> Result<String, GroupError> {
        rest.split_whitespace()
            .find_map(|kv| kv.strip_prefix(&format!("{name}=")).map(str::to_string))
            .ok_or_else(|| bad(format!("header lacks {name}")))
    };
    let num = |name: &str| -> Result<u64, GroupError> {
        field(name)?.parse().map_err(|_| bad(format!("bad {name}")))
    };
    let header = DumpHeader {
        n: num("n")? as usize,
        p: num("p")?,
        m: num("m")? as usize,
        g: field("g")?,
        f: field("f")?,
        width: num("width")? as usize,
    };
    let order = num("order")? as usize;
    let mut elements = Vec::with_capacity(order);
    for line in lines {
        let line = line.map_err(|e| bad(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let entries = line
            .split_whitespace()
            .map(|tok| {
                let digits = tok
                    .split(',')
                    .map(|d| {
                        d.parse::<u64>()
                            .map_err(|_| bad(format!("bad digit in {tok:?}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if digits.len() != header.width || digits.iter().any(|&d| d >= header.p) {
                    return Err(bad(format!("bad entry {tok:?}")));
                }
                Ok(digits.iter().rev().fold(0, |acc, &d| acc * header.p + d))
            })
            .collect::<Result<Vec<u64>, _>>()?;
        if entries.len() != header.n * header.n {
            return Err(bad(format!("row has {} entries", entries.len())));
        }
        elements.push(GroupElement(entries.into_boxed_slice()));
    }
    if elements.len() != order {
        return Err(bad(format!(
            "expected {order} elements, found {}",
            elements.len()
        )));
    }
    Ok((header, elements))
}
