//! Plain-text tensor files.
//!
//! ```text
//! kind=alt order=3 dim=8 algebra=su(3)
//! 1 2 3 1 1
//! 1 4 7 0.5 1/2
//! ```
//!
//! One header line, then one line per stored entry: 1-based canonical
//! indices, the value in shortest round-trip decimal form and, optionally,
//! an exact radical form `a*sqrt(b)/c`. Lines are sorted by index tuple.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::combinat::Index;
use crate::error::{LieError, Result};
use crate::tensor::{AltTensor, SymTensor, DROP_TOL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Sym,
    Alt,
}

#[derive(Clone, Debug, PartialEq)]
pub enum AnyTensor {
    Sym(SymTensor),
    Alt(AltTensor),
}

impl AnyTensor {
    pub fn kind(&self) -> Kind {
        match self {
            AnyTensor::Sym(_) => Kind::Sym,
            AnyTensor::Alt(_) => Kind::Alt,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            AnyTensor::Sym(t) => t.order(),
            AnyTensor::Alt(t) => t.order(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyTensor::Sym(t) => t.dim(),
            AnyTensor::Alt(t) => t.dim(),
        }
    }

    pub fn nnz(&self) -> usize {
        match self {
            AnyTensor::Sym(t) => t.nnz(),
            AnyTensor::Alt(t) => t.nnz(),
        }
    }

    pub fn entries(&self) -> Vec<(&[u8], f64)> {
        match self {
            AnyTensor::Sym(t) => t.iter().collect(),
            AnyTensor::Alt(t) => t.iter().collect(),
        }
    }
}

impl From<SymTensor> for AnyTensor {
    fn from(t: SymTensor) -> Self {
        AnyTensor::Sym(t)
    }
}

impl From<AltTensor> for AnyTensor {
    fn from(t: AltTensor) -> Self {
        AnyTensor::Alt(t)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TensorFile {
    pub algebra: String,
    pub tensor: AnyTensor,
}

#[derive(Serialize)]
struct JsonEntry {
    index: Vec<usize>,
    value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<String>,
}

#[derive(Serialize)]
struct JsonTensor<'a> {
    kind: Kind,
    order: usize,
    dim: usize,
    algebra: &'a str,
    entries: Vec<JsonEntry>,
}

const RADICALS: [u32; 4] = [1, 2, 3, 6];
const MAX_DEN: u32 = 144;
const MAX_NUM: f64 = 10_000.0;
const EXACT_TOL: f64 = 1e-12;

/// Recognize v = a sqrt(b)/c with b in {1, 2, 3, 6}, c <= 144 and a an
/// integer, preferring the smallest denominator.
pub fn exact_form(v: f64) -> Option<String> {
    if !v.is_finite() {
        return None;
    }
    if v == 0.0 {
        return Some("0".into());
    }
    for c in 1..=MAX_DEN {
        for b in RADICALS {
            let root = f64::from(b).sqrt();
            let a = v * f64::from(c) / root;
            let ar = a.round();
            if ar == 0.0 || ar.abs() > MAX_NUM {
                continue;
            }
            if (ar * root / f64::from(c) - v).abs() <= EXACT_TOL * v.abs().max(1.0) {
                return Some(render(ar as i64, b, c));
            }
        }
    }
    None
}

fn render(a: i64, b: u32, c: u32) -> String {
    let mut s = String::new();
    match (a, b) {
        (1, 1) => s.push('1'),
        (-1, 1) => s.push_str("-1"),
        (1, _) => {}
        (-1, _) => s.push('-'),
        _ => write!(s, "{a}").unwrap(),
    }
    if b != 1 {
        if a.abs() != 1 {
            s.push('*');
        }
        write!(s, "sqrt({b})").unwrap();
    }
    if c != 1 {
        write!(s, "/{c}").unwrap();
    }
    s
}

/// Inverse of [`exact_form`]: accepts `a`, `a/c`, `a*sqrt(b)/c`,
/// `-sqrt(b)/c` and the like.
pub fn parse_exact(s: &str) -> Option<f64> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d.parse::<u32>().ok().filter(|&d| d > 0)?),
        None => (s, 1),
    };
    let (coef, root) = match num.find("sqrt(") {
        Some(pos) => {
            let inner = num[pos + 5..].strip_suffix(')')?;
            let b: u32 = inner.parse().ok()?;
            let head = num[..pos].trim_end_matches('*');
            let a: i64 = match head {
                "" => 1,
                "-" => -1,
                h => h.parse().ok()?,
            };
            (a, f64::from(b).sqrt())
        }
        None => (num.parse::<i64>().ok()?, 1.0),
    };
    Some(coef as f64 * root / f64::from(den))
}

pub fn to_text(tensor: &AnyTensor, algebra: &str, exact: bool) -> String {
    let kind = match tensor.kind() {
        Kind::Sym => "sym",
        Kind::Alt => "alt",
    };
    let mut out = format!("kind={kind} order={} dim={} algebra={algebra}\n", tensor.order(), tensor.dim());
    for (key, v) in tensor.entries() {
        for &i in key {
            write!(out, "{} ", i as usize + 1).unwrap();
        }
        // Display for f64 is the shortest string that parses back to the same bits
        write!(out, "{v}").unwrap();
        if exact {
            if let Some(e) = exact_form(v) {
                write!(out, " {e}").unwrap();
            }
        }
        out.push('\n');
    }
    out
}

pub fn to_json(tensor: &AnyTensor, algebra: &str, exact: bool) -> String {
    let entries = tensor
        .entries()
        .into_iter()
        .map(|(k, v)| JsonEntry {
            index: k.iter().map(|&i| i as usize + 1).collect(),
            value: v,
            exact: if exact { exact_form(v) } else { None },
        })
        .collect();
    let doc = JsonTensor { kind: tensor.kind(), order: tensor.order(), dim: tensor.dim(), algebra, entries };
    serde_json::to_string_pretty(&doc).expect("tensor json")
}

fn perr(line: usize, msg: impl Into<String>) -> LieError {
    LieError::Parse { line, msg: msg.into() }
}

fn header_field<'a>(line: usize, tok: Option<&'a str>, key: &str) -> Result<&'a str> {
    let tok = tok.ok_or_else(|| perr(line, format!("missing `{key}=` in header")))?;
    tok.strip_prefix(key)
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| perr(line, format!("expected `{key}=`, found `{tok}`")))
}

pub fn parse_text(text: &str) -> Result<TensorFile> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines.next().ok_or_else(|| perr(1, "empty file"))?;
    let mut toks = header.split_whitespace();
    let kind = match header_field(hl, toks.next(), "kind")? {
        "sym" => Kind::Sym,
        "alt" => Kind::Alt,
        k => return Err(perr(hl, format!("unknown kind `{k}`"))),
    };
    let order: usize = header_field(hl, toks.next(), "order")?.parse().map_err(|_| perr(hl, "order is not an integer"))?;
    let dim: usize = header_field(hl, toks.next(), "dim")?.parse().map_err(|_| perr(hl, "dim is not an integer"))?;
    let algebra = header_field(hl, toks.next(), "algebra")?.to_string();
    if let Some(extra) = toks.next() {
        return Err(perr(hl, format!("unexpected header field `{extra}`")));
    }
    if order == 0 || !(1..=255).contains(&dim) {
        return Err(perr(hl, "order must be positive and dim within 1..=255"));
    }
    let mut sym = SymTensor::zeros(order, dim);
    let mut alt = AltTensor::zeros(order, dim);
    let mut prev: Option<Index> = None;
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != order + 1 && toks.len() != order + 2 {
            return Err(perr(ln, format!("expected {order} indices and a value, found {} fields", toks.len())));
        }
        let mut key = Index::with_capacity(order);
        for t in &toks[..order] {
            let i: usize = t.parse().map_err(|_| perr(ln, format!("bad index `{t}`")))?;
            if !(1..=dim).contains(&i) {
                return Err(perr(ln, format!("index {i} outside 1..={dim}")));
            }
            key.push((i - 1) as u8);
        }
        let canonical = match kind {
            Kind::Sym => key.windows(2).all(|w| w[0] <= w[1]),
            Kind::Alt => key.windows(2).all(|w| w[0] < w[1]),
        };
        if !canonical {
            let want = if kind == Kind::Sym { "nondecreasing" } else { "strictly increasing" };
            return Err(perr(ln, format!("indices must be {want}")));
        }
        if let Some(p) = &prev {
            if *p >= key {
                return Err(perr(ln, "entries must be sorted and unique"));
            }
        }
        let v: f64 = toks[order].parse().map_err(|_| perr(ln, format!("bad value `{}`", toks[order])))?;
        if !v.is_finite() || v.abs() <= DROP_TOL {
            return Err(perr(ln, format!("value {v} is not a finite nonzero entry")));
        }
        if let Some(e) = toks.get(order + 1) {
            let ev = parse_exact(e).ok_or_else(|| perr(ln, format!("bad exact value `{e}`")))?;
            if (ev - v).abs() > EXACT_TOL * v.abs().max(1.0) {
                return Err(perr(ln, format!("exact value `{e}` disagrees with {v}")));
            }
        }
        match kind {
            Kind::Sym => sym.set_sorted(key.clone(), v),
            Kind::Alt => alt.set_sorted(key.clone(), v),
        }
        prev = Some(key);
    }
    let tensor = match kind {
        Kind::Sym => AnyTensor::Sym(sym),
        Kind::Alt => AnyTensor::Alt(alt),
    };
    Ok(TensorFile { algebra, tensor })
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| LieError::Io { path: path.display().to_string(), source })
}

pub fn read_file(path: &Path) -> Result<TensorFile> {
    let text = std::fs::read_to_string(path).map_err(|source| LieError::Io { path: path.display().to_string(), source })?;
    parse_text(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radicals() {
        assert_eq!(exact_form(0.25).as_deref(), Some("1/4"));
        assert_eq!(exact_form(-3f64.sqrt() / 6.0).as_deref(), Some("-sqrt(3)/6"));
        assert_eq!(exact_form(-2.0 * 6f64.sqrt() / 9.0).as_deref(), Some("-2*sqrt(6)/9"));
        assert_eq!(exact_form(std::f64::consts::PI), None);
        for s in ["1/4", "-sqrt(3)/6", "-2*sqrt(6)/9", "3", "sqrt(2)"] {
            let v = parse_exact(s).unwrap();
            assert_eq!(exact_form(v).as_deref(), Some(s));
        }
    }

    #[test]
    fn header_errors_carry_line() {
        let e = parse_text("\n\nkind=foo order=3 dim=8 algebra=su(3)\n").unwrap_err();
        assert!(matches!(e, LieError::Parse { line: 3, .. }), "{e}");
    }
}
