//! Line-oriented text formats for graphs, samples, rotations, interval
//! representations and verification reports. `#` starts a comment.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{Endpoint, IntervalRepresentation};
use crate::planar::RotationSystem;
use crate::sample::{Sample, Sign};
use crate::verify::{Failure, VerificationReport};

/// A whitespace token with its 1-based position.
#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn number(&self) -> Result<usize> {
        self.text
            .parse()
            .map_err(|_| self.error(format!("expected a nonnegative integer, found {:?}", self.text)))
    }
}

/// Non-empty lines with comments removed, tokenized.
fn lines(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut toks = Vec::new();
        let mut start = None;
        for (j, ch) in body.char_indices().chain(std::iter::once((body.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(j),
                (true, Some(s)) => {
                    toks.push(Token {
                        text: &body[s..j],
                        line: i + 1,
                        column: s + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !toks.is_empty() {
            out.push(toks);
        }
    }
    out
}

fn eof(text: &str, message: &str) -> Error {
    Error::Parse {
        line: text.lines().count().max(1),
        column: 1,
        message: message.into(),
    }
}

fn expect_len(toks: &[Token<'_>], len: usize, what: &str) -> Result<()> {
    match toks.get(len) {
        Some(extra) => Err(extra.error(format!("trailing token in {what}"))),
        None if toks.len() < len => Err(toks[0].error(format!("{what} needs {len} fields"))),
        None => Ok(()),
    }
}

/// `n m` header, then `m` lines `u v`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let ls = lines(text);
    let header = ls.first().ok_or_else(|| eof(text, "missing header"))?;
    expect_len(header, 2, "header")?;
    let (n, m) = (header[0].number()?, header[1].number()?);
    let mut edges = Vec::with_capacity(m);
    for l in &ls[1..] {
        expect_len(l, 2, "edge line")?;
        let (u, v) = (l[0].number()?, l[1].number()?);
        for (t, x) in [(l[0], u), (l[1], v)] {
            if x >= n {
                return Err(t.error(format!("vertex {x} out of range for n={n}")));
            }
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(eof(text, &format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Lines `+ v` / `- v` over `n` vertices; unlisted vertices are unlabeled.
pub fn parse_sample(text: &str, n: usize) -> Result<Sample> {
    let mut x = Sample::zero(n);
    for l in lines(text) {
        expect_len(&l, 2, "sample line")?;
        let sign = match l[0].text {
            "+" => Sign::Pos,
            "-" => Sign::Neg,
            other => return Err(l[0].error(format!("expected '+' or '-', found {other:?}"))),
        };
        let v = l[1].number()?;
        if v >= n {
            return Err(l[1].error(format!("vertex {v} out of range for n={n}")));
        }
        if x.get(v).is_some_and(|s| s != sign) {
            return Err(l[1].error(format!("vertex {v} labeled both ways")));
        }
        x.set(v, Some(sign));
    }
    Ok(x)
}

pub fn write_sample(x: &Sample) -> String {
    x.support()
        .into_iter()
        .map(|v| format!("{} {v}\n", x.get(v).unwrap().symbol()))
        .collect()
}

/// Lines `v: w1 w2 ...` in clockwise order; unlisted vertices get an empty
/// rotation.
pub fn parse_rotation(text: &str, n: usize) -> Result<RotationSystem> {
    let mut order: Vec<Option<Vec<usize>>> = vec![None; n];
    for l in lines(text) {
        let head = l[0];
        let label = head.text.strip_suffix(':').ok_or_else(|| head.error("expected `v:`"))?;
        let v = Token { text: label, ..head }.number()?;
        if v >= n {
            return Err(head.error(format!("vertex {v} out of range for n={n}")));
        }
        if order[v].is_some() {
            return Err(head.error(format!("rotation for {v} given twice")));
        }
        let nb = l[1..].iter().map(|t| t.number()).collect::<Result<Vec<_>>>()?;
        order[v] = Some(nb);
    }
    Ok(RotationSystem::new(order.into_iter().map(Option::unwrap_or_default).collect()))
}

pub fn write_rotation(rot: &RotationSystem) -> String {
    rot.to_string()
}

fn parse_endpoint(t: &Token<'_>) -> Result<Endpoint> {
    let bad = || t.error(format!("expected a rational like 3, -1/2 or 0.75, found {:?}", t.text));
    if let Some((p, q)) = t.text.split_once('/') {
        let (p, q): (i64, i64) = (p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?);
        if q == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(p, q));
    }
    if let Some((int, frac)) = t.text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 12 {
            return Err(bad());
        }
        let scale = 10i64.pow(frac.len() as u32);
        let whole: i64 = format!("{int}{frac}").parse().map_err(|_| bad())?;
        return Ok(Ratio::new(whole, scale));
    }
    t.text.parse::<i64>().map(Ratio::from_integer).map_err(|_| bad())
}

/// Lines `v s e`; every vertex `0..n` must appear once.
pub fn parse_intervals(text: &str) -> Result<IntervalRepresentation> {
    let mut segs: Vec<Option<(Endpoint, Endpoint)>> = Vec::new();
    let ls = lines(text);
    for l in &ls {
        expect_len(l, 3, "interval line")?;
        let v = l[0].number()?;
        if v >= segs.len() {
            segs.resize(v + 1, None);
        }
        if segs[v].is_some() {
            return Err(l[0].error(format!("interval for {v} given twice")));
        }
        segs[v] = Some((parse_endpoint(&l[1])?, parse_endpoint(&l[2])?));
    }
    if let Some(v) = segs.iter().position(Option::is_none) {
        return Err(eof(text, &format!("no interval for vertex {v}")));
    }
    Ok(IntervalRepresentation::new(segs.into_iter().flatten().collect()))
}

pub fn write_intervals(rep: &IntervalRepresentation) -> String {
    rep.to_string()
}

/// Compact sample form `+0 -3 +4`, or `{}` for the empty sample.
pub fn parse_compact_sample(text: &str, n: usize) -> Result<Sample> {
    let mut x = Sample::zero(n);
    let bad = |msg: String| Error::MalformedInput(msg);
    if text.trim() == "{}" {
        return Ok(x);
    }
    for tok in text.split_whitespace() {
        let (sign, rest) = match tok.split_at_checked(1) {
            Some(("+", r)) => (Sign::Pos, r),
            Some(("-", r)) => (Sign::Neg, r),
            _ => return Err(bad(format!("bad sample entry {tok:?}"))),
        };
        let v: usize = rest.parse().map_err(|_| bad(format!("bad sample entry {tok:?}")))?;
        if v >= n {
            return Err(Error::VertexOutOfRange(v));
        }
        x.set(v, Some(sign));
    }
    Ok(x)
}

/// Header `scheme=… samples=… failures=… max_support=…` followed by one
/// `fail <sample> : <reason>` line per failure.
pub fn parse_report(text: &str, n: usize) -> Result<VerificationReport> {
    let ls = lines(text);
    let header = ls.first().ok_or_else(|| eof(text, "missing report header"))?;
    expect_len(header, 4, "report header")?;
    let field = |t: &Token<'_>, key: &str| -> Result<String> {
        t.text
            .strip_prefix(key)
            .and_then(|r| r.strip_prefix('='))
            .map(str::to_string)
            .ok_or_else(|| t.error(format!("expected {key}=…")))
    };
    let int = |i: usize, key: &str| -> Result<usize> {
        let t = header[i];
        let v = field(&t, key)?;
        Token { text: &v, ..t }.number()
    };
    let scheme = field(&header[0], "scheme")?;
    let (samples, count, max_support) = (int(1, "samples")?, int(2, "failures")?, int(3, "max_support")?);
    let mut failures = Vec::new();
    for (i, raw) in text.lines().enumerate().skip_while(|(_, l)| !l.starts_with("scheme=")).skip(1) {
        let Some(rest) = raw.strip_prefix("fail ") else {
            continue;
        };
        let (sample, reason) = rest.split_once(" : ").ok_or(Error::Parse {
            line: i + 1,
            column: 6,
            message: "expected `fail <sample> : <reason>`".into(),
        })?;
        let sample = parse_compact_sample(sample, n).map_err(|e| Error::Parse {
            line: i + 1,
            column: 6,
            message: e.to_string(),
        })?;
        failures.push(Failure {
            sample,
            reason: reason.to_string(),
        });
    }
    if failures.len() != count {
        return Err(eof(text, &format!("header announces {count} failures, found {}", failures.len())));
    }
    Ok(VerificationReport {
        scheme,
        samples_tested: samples,
        failures,
        max_support,
        properness_violations: 0,
        approx: None,
    })
}

pub fn write_report(rep: &VerificationReport) -> String {
    format!("{rep}\n")
}
