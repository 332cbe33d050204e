//! On-disk form of a cycle.
//!
//! Text form: a header line followed by one vertex per line.
//!
//! ```text
//! # k=3 h=1 encoding=tuples closed=true
//! 0 0 0
//! 1 0 0
//! ...
//! ```
//!
//! Tuples are written leftmost coordinate first. In the `ints` encoding each
//! line is the vertex word in decimal with the leftmost coordinate in the
//! least significant bit, which the header records as `bit_order=lsb-first`.
//! The JSON form is a single object with the same fields and integer
//! vertices.

use std::fmt;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::constructor::CycleCertificate;
use crate::path::VertexPath;

pub const BIT_ORDER: &str = "lsb-first";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Encoding {
    Tuples,
    Ints,
}

impl Encoding {
    pub fn as_str(self) -> &'static str {
        match self {
            Encoding::Tuples => "tuples",
            Encoding::Ints => "ints",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDocument {
    pub k: u32,
    pub h: u64,
    pub encoding: Encoding,
    pub closed: bool,
    /// Vertex words; may hold values that do not fit `k` when read from
    /// untrusted input.
    pub cycle: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

fn perr(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonBody {
    Ints(Vec<u64>),
    Tuples(Vec<Vec<u8>>),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDocument {
    k: u32,
    h: u64,
    encoding: Encoding,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bit_order: Option<String>,
    cycle: JsonBody,
    closed: bool,
}

impl CycleDocument {
    pub fn from_path(path: &VertexPath, h: u64, encoding: Encoding, closed: bool) -> Self {
        CycleDocument {
            k: path.dim().k(),
            h,
            encoding,
            closed,
            cycle: path.words().to_vec(),
        }
    }

    pub fn from_cycle(cycle: &CycleCertificate, encoding: Encoding) -> Self {
        Self::from_path(cycle.path(), cycle.step().h(), encoding, true)
    }

    pub fn header(&self) -> String {
        let mut s = format!(
            "# k={} h={} encoding={} closed={}",
            self.k,
            self.h,
            self.encoding.as_str(),
            self.closed
        );
        if self.encoding == Encoding::Ints {
            s.push_str(" bit_order=");
            s.push_str(BIT_ORDER);
        }
        s
    }

    pub fn write_text<W: Write + ?Sized>(&self, w: &mut W) -> io::Result<()> {
        writeln!(w, "{}", self.header())?;
        let mut line = String::with_capacity(2 * self.k as usize + 1);
        for &v in &self.cycle {
            line.clear();
            match self.encoding {
                Encoding::Ints => line.push_str(&v.to_string()),
                Encoding::Tuples => {
                    for i in 0..self.k {
                        if i > 0 {
                            line.push(' ');
                        }
                        line.push(if (v >> i) & 1 == 1 { '1' } else { '0' });
                    }
                }
            }
            line.push('\n');
            w.write_all(line.as_bytes())?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_text(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("document text is ASCII")
    }

    pub fn to_json(&self) -> String {
        let cycle = match self.encoding {
            Encoding::Ints => JsonBody::Ints(self.cycle.clone()),
            Encoding::Tuples => JsonBody::Tuples(
                self.cycle
                    .iter()
                    .map(|&v| (0..self.k).map(|i| ((v >> i) & 1) as u8).collect())
                    .collect(),
            ),
        };
        let doc = JsonDocument {
            k: self.k,
            h: self.h,
            encoding: self.encoding,
            bit_order: (self.encoding == Encoding::Ints).then(|| BIT_ORDER.to_string()),
            cycle,
            closed: self.closed,
        };
        serde_json::to_string(&doc).expect("document serializes")
    }

    /// Accepts either the text or the JSON form.
    pub fn parse(input: &str) -> Result<Self, ParseError> {
        match input.trim_start().chars().next() {
            None => Err(perr(1, 1, "empty document")),
            Some('{') => Self::parse_json(input),
            Some(_) => Self::parse_text(input),
        }
    }

    fn parse_json(input: &str) -> Result<Self, ParseError> {
        let doc: JsonDocument =
            serde_json::from_str(input).map_err(|e| perr(e.line(), e.column(), e.to_string()))?;
        if let Some(order) = &doc.bit_order {
            if order != BIT_ORDER {
                return Err(perr(1, 1, format!("unsupported bit_order {order:?}")));
            }
        }
        let cycle = match (doc.encoding, doc.cycle) {
            (Encoding::Ints, JsonBody::Ints(v)) => v,
            // An empty array deserializes as Ints.
            (Encoding::Tuples, JsonBody::Ints(v)) if v.is_empty() => v,
            (Encoding::Tuples, JsonBody::Tuples(rows)) => rows
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    tuple_word(row.iter().copied(), doc.k)
                        .map_err(|m| perr(1, 1, format!("vertex {i}: {m}")))
                })
                .collect::<Result<_, _>>()?,
            (enc, _) => {
                return Err(perr(
                    1,
                    1,
                    format!("cycle entries do not match encoding {}", enc.as_str()),
                ))
            }
        };
        Ok(CycleDocument {
            k: doc.k,
            h: doc.h,
            encoding: doc.encoding,
            closed: doc.closed,
            cycle,
        })
    }

    fn parse_text(input: &str) -> Result<Self, ParseError> {
        let mut lines = input.lines().enumerate().map(|(i, l)| (i + 1, l));
        let (header_no, header) = lines
            .by_ref()
            .find(|(_, l)| !l.trim().is_empty())
            .ok_or_else(|| perr(1, 1, "empty document"))?;
        let (k, h, encoding, closed) = parse_header(header_no, header)?;

        let mut cycle = Vec::new();
        for (no, line) in lines {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let word = match encoding {
                Encoding::Ints => {
                    let col = column_of(line, trimmed);
                    trimmed
                        .parse::<u64>()
                        .map_err(|e| perr(no, col, format!("bad vertex {trimmed:?}: {e}")))?
                }
                Encoding::Tuples => parse_tuple_line(no, line, k)?,
            };
            cycle.push(word);
        }
        Ok(CycleDocument {
            k,
            h,
            encoding,
            closed,
            cycle,
        })
    }
}

fn column_of(line: &str, token: &str) -> usize {
    token.as_ptr() as usize - line.as_ptr() as usize + 1
}

fn tuple_word(coords: impl Iterator<Item = u8>, k: u32) -> Result<u64, String> {
    let mut word = 0u64;
    let mut n = 0u32;
    for c in coords {
        if n >= k {
            return Err(format!("more than k={k} coordinates"));
        }
        match c {
            0 => {}
            1 => word |= 1 << n,
            other => return Err(format!("coordinate {} is {other}, expected 0 or 1", n + 1)),
        }
        n += 1;
    }
    if n != k {
        return Err(format!("{n} coordinates, expected k={k}"));
    }
    Ok(word)
}

fn parse_tuple_line(no: usize, line: &str, k: u32) -> Result<u64, ParseError> {
    let mut word = 0u64;
    let mut n = 0u32;
    for tok in line.split_whitespace() {
        let col = column_of(line, tok);
        if n >= k {
            return Err(perr(no, col, format!("more than k={k} coordinates")));
        }
        match tok {
            "0" => {}
            "1" => word |= 1 << n,
            _ => return Err(perr(no, col, format!("coordinate {tok:?} is not 0 or 1"))),
        }
        n += 1;
    }
    if n != k {
        return Err(perr(
            no,
            line.len() + 1,
            format!("{n} coordinates, expected k={k}"),
        ));
    }
    Ok(word)
}

fn parse_header(no: usize, line: &str) -> Result<(u32, u64, Encoding, bool), ParseError> {
    let body = line.trim_start().strip_prefix('#').ok_or_else(|| {
        perr(
            no,
            1,
            "expected header `# k=<k> h=<h> encoding=<enc> closed=<bool>`",
        )
    })?;
    let (mut k, mut h, mut encoding, mut closed, mut order) = (None, None, None, None, None);
    for tok in body.split_whitespace() {
        let col = column_of(line, tok);
        let (key, value) = tok
            .split_once('=')
            .ok_or_else(|| perr(no, col, format!("expected key=value, got {tok:?}")))?;
        let bad = |what: &str| perr(no, col, format!("bad {what} value {value:?}"));
        match key {
            "k" => k = Some(value.parse::<u32>().map_err(|_| bad("k"))?),
            "h" => h = Some(value.parse::<u64>().map_err(|_| bad("h"))?),
            "encoding" => {
                encoding = Some(match value {
                    "tuples" => Encoding::Tuples,
                    "ints" => Encoding::Ints,
                    _ => return Err(bad("encoding")),
                })
            }
            "closed" => closed = Some(value.parse::<bool>().map_err(|_| bad("closed"))?),
            "bit_order" => {
                if value != BIT_ORDER {
                    return Err(bad("bit_order"));
                }
                order = Some(());
            }
            _ => return Err(perr(no, col, format!("unknown header field {key:?}"))),
        }
    }
    let missing = |f: &str| perr(no, line.len() + 1, format!("header is missing {f}"));
    let encoding = encoding.ok_or_else(|| missing("encoding"))?;
    if order.is_some() && encoding != Encoding::Ints {
        return Err(perr(no, 1, "bit_order only applies to the ints encoding"));
    }
    Ok((
        k.ok_or_else(|| missing("k"))?,
        h.ok_or_else(|| missing("h"))?,
        encoding,
        closed.ok_or_else(|| missing("closed"))?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(encoding: Encoding) -> CycleDocument {
        CycleDocument {
            k: 3,
            h: 1,
            encoding,
            closed: true,
            cycle: vec![0, 1, 3, 2, 6, 7, 5, 4],
        }
    }

    #[test]
    fn text_layout() {
        let t = doc(Encoding::Tuples).to_text();
        let mut lines = t.lines();
        assert_eq!(lines.next(), Some("# k=3 h=1 encoding=tuples closed=true"));
        assert_eq!(lines.next(), Some("0 0 0"));
        assert_eq!(lines.next(), Some("1 0 0"));
        assert_eq!(lines.next(), Some("1 1 0"));
        let i = doc(Encoding::Ints).to_text();
        assert!(i.starts_with("# k=3 h=1 encoding=ints closed=true bit_order=lsb-first\n0\n1\n3\n"));
    }

    #[test]
    fn json_layout() {
        assert_eq!(
            doc(Encoding::Ints).to_json(),
            r#"{"k":3,"h":1,"encoding":"ints","bit_order":"lsb-first","cycle":[0,1,3,2,6,7,5,4],"closed":true}"#
        );
        assert!(doc(Encoding::Tuples)
            .to_json()
            .contains(r#""cycle":[[0,0,0],[1,0,0],[1,1,0]"#));
    }

    #[test]
    fn round_trips() {
        for enc in [Encoding::Tuples, Encoding::Ints] {
            let d = doc(enc);
            assert_eq!(CycleDocument::parse(&d.to_text()).unwrap(), d);
            assert_eq!(CycleDocument::parse(&d.to_json()).unwrap(), d);
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!(
            CycleDocument::parse("").unwrap_err().message,
            "empty document"
        );
        assert_eq!(
            CycleDocument::parse("  \n\n").unwrap_err().message,
            "empty document"
        );

        let e = CycleDocument::parse("# k=3 h=1 encoding=tuples closed=true\n0 0 0\n1 2 0\n")
            .unwrap_err();
        assert_eq!((e.line, e.column), (3, 3));

        let e = CycleDocument::parse("# k=3 h=1 encoding=tuples closed=true\n0 0\n").unwrap_err();
        assert_eq!(e.line, 2);

        let e = CycleDocument::parse("# k=3 h=x encoding=tuples closed=true\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 7));

        let e = CycleDocument::parse("0 0 0\n").unwrap_err();
        assert_eq!(e.line, 1);

        let e =
            CycleDocument::parse("# k=3 h=1 encoding=ints closed=true\n0\nseven\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 1));

        let e = CycleDocument::parse("{\"k\":3,\n\"h\":}").unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn ints_may_exceed_dimension() {
        let d = CycleDocument::parse("# k=2 h=1 encoding=ints closed=true\n0\n9\n").unwrap();
        assert_eq!(d.cycle, vec![0, 9]);
    }
}
