use std::io::{BufRead, Write};

use super::{ComplexError, ComplexMeta, CosetComplex};

const MAGIC: &str = "hdx-complex v1";

/// Line-oriented text form: a header (`rank`, `order`, `types`, `param`
/// lines), then `vertices N` followed by `type key_hex` lines, then
/// `faces M` followed by vertex-id tuples, then `end`.
pub fn write_complex<W: Write>(out: &mut W, x: &CosetComplex) -> std::io::Result<()> {
    writeln!(out, "{MAGIC}")?;
    writeln!(out, "rank {}", x.rank())?;
    writeln!(out, "order {}", x.meta.group_order)?;
    let types: Vec<String> = x.types().iter().map(|t| t.to_string()).collect();
    writeln!(out, "types {}", types.join(" "))?;
    for (k, v) in &x.meta.params {
        writeln!(out, "param {k} {v}")?;
    }
    writeln!(out, "vertices {}", x.num_vertices())?;
    for v in 0..x.num_vertices() as u32 {
        let hex: String = x.vertex_key(v).iter().map(|b| format!("{b:02x}")).collect();
        writeln!(
            out,
            "{} {}",
            x.vertex_type[v as usize],
            if hex.is_empty() { "-" } else { &hex }
        )?;
    }
    writeln!(out, "faces {}", x.maximal_faces().len())?;
    for f in x.maximal_faces() {
        let ids: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", ids.join(" "))?;
    }
    writeln!(out, "end")
}

pub fn read_complex<R: BufRead>(input: R) -> Result<CosetComplex, ComplexError> {
    let mut lines = input.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut next = || -> Result<(usize, String), ComplexError> {
        match lines.next() {
            Some((n, Ok(l))) => Ok((n, l)),
            Some((n, Err(e))) => Err(ComplexError::Format {
                line: n,
                reason: e.to_string(),
            }),
            None => Err(ComplexError::Format {
                line: 0,
                reason: "unexpected end of input".into(),
            }),
        }
    };
    let err = |line: usize, reason: &str| ComplexError::Format {
        line,
        reason: reason.to_string(),
    };
    let (n, first) = next()?;
    if first.trim() != MAGIC {
        return Err(err(n, "missing hdx-complex v1 header"));
    }
    let mut rank = None;
    let mut meta = ComplexMeta::default();
    let mut types = Vec::new();
    let num_vertices;
    loop {
        let (n, line) = next()?;
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("rank") => rank = parts.next().and_then(|s| s.parse::<usize>().ok()),
            Some("order") => {
                meta.group_order = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| err(n, "bad order"))?
            }
            Some("types") => {
                types = parts
                    .map(|s| s.parse::<usize>().map_err(|_| err(n, "bad type label")))
                    .collect::<Result<_, _>>()?
            }
            Some("param") => {
                let k = parts.next().ok_or_else(|| err(n, "param without name"))?;
                meta.params
                    .push((k.to_string(), parts.collect::<Vec<_>>().join(" ")));
            }
            Some("vertices") => {
                num_vertices = parts
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| err(n, "bad vertex count"))?;
                break;
            }
            _ => return Err(err(n, "unexpected header line")),
        }
    }
    let rank = rank.ok_or_else(|| err(0, "missing rank"))?;
    if types.len() != rank {
        return Err(err(0, "types do not match rank"));
    }
    let mut vertex_type = Vec::with_capacity(num_vertices);
    let mut vertex_key = Vec::with_capacity(num_vertices);
    for _ in 0..num_vertices {
        let (n, line) = next()?;
        let (t, key) = line
            .split_once(' ')
            .ok_or_else(|| err(n, "bad vertex line"))?;
        let t: u8 = t.parse().map_err(|_| err(n, "bad vertex type"))?;
        if t as usize >= rank {
            return Err(err(n, "vertex type out of range"));
        }
        let key = key.trim();
        let bytes = if key == "-" {
            Vec::new()
        } else {
            if key.len() % 2 != 0 {
                return Err(err(n, "odd-length key"));
            }
            (0..key.len() / 2)
                .map(|i| {
                    u8::from_str_radix(&key[2 * i..2 * i + 2], 16)
                        .map_err(|_| err(n, "bad key hex"))
                })
                .collect::<Result<Vec<u8>, _>>()?
        };
        vertex_type.push(t);
        vertex_key.push(bytes);
    }
    let (n, line) = next()?;
    let num_faces: usize = line
        .strip_prefix("faces ")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| err(n, "expected faces line"))?;
    let mut faces = Vec::with_capacity(num_faces);
    for _ in 0..num_faces {
        let (n, line) = next()?;
        let f = line
            .split_whitespace()
            .map(|s| s.parse::<u32>().map_err(|_| err(n, "bad vertex id")))
            .collect::<Result<Vec<u32>, _>>()?;
        if f.len() != rank || f.iter().any(|&v| v as usize >= num_vertices) {
            return Err(err(n, "bad face"));
        }
        faces.push(f.into_boxed_slice());
    }
    let (n, line) = next()?;
    if line.trim() != "end" {
        return Err(err(n, "expected end"));
    }
    let x = CosetComplex::from_faces(types, vertex_type, vertex_key, faces, meta);
    if !x.is_partite() {
        return Err(err(0, "faces are not partite"));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let x = CosetComplex::from_faces(
            vec![0, 1],
            vec![0, 0, 1],
            vec![vec![0, 1], vec![0xab], vec![]],
            vec![vec![0, 2].into(), vec![1, 2].into()],
            ComplexMeta {
                group_order: 2,
                params: vec![("f".into(), "t^2+t+1".into())],
            },
        );
        let mut buf = Vec::new();
        write_complex(&mut buf, &x).unwrap();
        let y = read_complex(&buf[..]).unwrap();
        assert_eq!(x, y);
        let mut again = Vec::new();
        write_complex(&mut again, &y).unwrap();
        assert_eq!(buf, again);
    }

    #[test]
    fn rejects_truncated() {
        let text = "hdx-complex v1\nrank 2\norder 1\ntypes 0 1\nvertices 2\n0 -\n1 -\nfaces 1\n";
        assert!(matches!(
            read_complex(text.as_bytes()),
            Err(ComplexError::Format { .. })
        ));
    }
}
