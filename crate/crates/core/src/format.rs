//! Text format for presentations.
//!
//! ```text
//! # the Koszul dga of the dual numbers
//! [algebra]
//! name = koszul
//! basis = 1:0, x:0, y:1, xy:1
//! unit = 1
//!
//! [mult]
//! x*y = xy
//! y*x = xy
//!
//! [diff]
//! y = x
//! ```
//!
//! A right-hand side is a sum of terms `c label` or `label`, where `c` is an
//! integer or a fraction `a/b` with `b > 0`, separated by `+` or `-`. `0`
//! denotes the empty sum. Products with the unit default to the unit law.
//!
//! Categories use `[category]` (with `name`), `[objects]` lines
//! `X = id_X`, one `[hom X Y]` section per nonzero hom space with a `basis`
//! line, `[compose]` lines `f*g = …` meaning "f, then g", and `[diff]`.

use std::collections::{HashMap, HashSet};
use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::linalg::{format_rat, parse_rat, Rat};
use crate::presentation::{
    CategoryPresentation, DgaPresentation, DiffEntry, HomDecl, Presentation, ProductEntry, Terms,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        column,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Section {
    None,
    Algebra,
    Category,
    Objects,
    Hom(String, String),
    Mult,
    Diff,
}

struct Line<'a> {
    no: usize,
    text: &'a str,
    /// Column of `text` within the raw line, 1-based.
    col: usize,
}

fn lines(src: &str) -> impl Iterator<Item = Line<'_>> {
    src.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim_start();
        let col = body.len() - trimmed.len() + 1;
        let text = trimmed.trim_end();
        (!text.is_empty()).then_some(Line { no: i + 1, text, col })
    })
}

fn key_value<'a>(l: &Line<'a>) -> Result<(&'a str, &'a str, usize), ParseError> {
    match l.text.split_once('=') {
        Some((k, v)) => {
            let vcol = l.col + k.len() + 1 + (v.len() - v.trim_start().len());
            Ok((k.trim(), v.trim(), vcol))
        }
        None => err(l.no, l.col, "expected `key = value`"),
    }
}

fn is_label(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '_' | '\'' | '.' | '^'))
}

/// Parses `c label + c label - label …`.
pub fn parse_terms(s: &str, line: usize, col: usize) -> Result<Terms, ParseError> {
    let s_trim = s.trim();
    if s_trim == "0" {
        return Ok(Vec::new());
    }
    let mut terms = Vec::new();
    let lead = s.len() - s.trim_start().len();
    let (mut neg, mut start) = match s[lead..].chars().next() {
        Some('-') => (true, lead + 1),
        Some('+') => (false, lead + 1),
        _ => (false, lead),
    };
    let mut pieces: Vec<(bool, usize, &str)> = Vec::new();
    let from = start;
    for (i, ch) in s.char_indices().filter(|(i, _)| *i >= from) {
        if ch == '+' || ch == '-' {
            let piece = &s[start..i];
            if piece.trim().is_empty() {
                return err(line, col + i, "missing term before sign");
            }
            pieces.push((neg, start, piece));
            neg = ch == '-';
            start = i + 1;
        }
    }
    if s[start..].trim().is_empty() {
        return err(line, col + s.len(), "expected a term");
    }
    pieces.push((neg, start, &s[start..]));
    for (neg, off, piece) in pieces {
        let toks: Vec<&str> = piece.split_whitespace().collect();
        let tcol = col + off + (piece.len() - piece.trim_start().len());
        let (coef, label) = match toks.as_slice() {
            [label] => (Rat::from_integer(1.into()), *label),
            [c, label] => match parse_rat(c) {
                Some(r) => (r, *label),
                None => return err(line, tcol, format!("malformed rational `{c}`")),
            },
            _ => return err(line, tcol, format!("cannot read term `{}`", piece.trim())),
        };
        if !is_label(label) {
            return err(line, tcol, format!("malformed label `{label}`"));
        }
        let coef = if neg { -coef } else { coef };
        terms.push((coef, label.to_string()));
    }
    Ok(terms)
}

fn parse_basis(v: &str, line: usize, col: usize) -> Result<Vec<(String, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut off = 0;
    for item in v.split(',') {
        let icol = col + off + (item.len() - item.trim_start().len());
        off += item.len() + 1;
        let item = item.trim();
        let Some((l, d)) = item.split_once(':') else {
            return err(line, icol, format!("basis entry `{item}` must be `label:degree`"));
        };
        let (l, d) = (l.trim(), d.trim());
        if !is_label(l) {
            return err(line, icol, format!("malformed label `{l}`"));
        }
        let Ok(d) = d.parse::<usize>() else {
            return err(line, icol, format!("degree `{d}` must be a non-negative integer"));
        };
        if !seen.insert(l.to_string()) {
            return err(line, icol, format!("label `{l}` declared twice"));
        }
        out.push((l.to_string(), d));
    }
    Ok(out)
}

fn parse_product(l: &Line<'_>, labels: &HashSet<String>) -> Result<ProductEntry, ParseError> {
    let (k, v, vcol) = key_value(l)?;
    let Some((left, right)) = k.split_once('*') else {
        return err(l.no, l.col, "expected `a*b = …`");
    };
    let (left, right) = (left.trim(), right.trim());
    for lab in [left, right] {
        if !labels.contains(lab) {
            let c = l.col + l.text.find(lab).unwrap_or(0);
            return err(l.no, c, format!("unknown label `{lab}`"));
        }
    }
    let terms = parse_terms(v, l.no, vcol)?;
    check_terms(&terms, labels, l, vcol)?;
    Ok(ProductEntry {
        left: left.into(),
        right: right.into(),
        terms,
        line: Some(l.no),
    })
}

fn parse_diff(l: &Line<'_>, labels: &HashSet<String>) -> Result<DiffEntry, ParseError> {
    let (k, v, vcol) = key_value(l)?;
    if !labels.contains(k) {
        return err(l.no, l.col, format!("unknown label `{k}`"));
    }
    let terms = parse_terms(v, l.no, vcol)?;
    check_terms(&terms, labels, l, vcol)?;
    Ok(DiffEntry {
        source: k.into(),
        terms,
        line: Some(l.no),
    })
}

fn check_terms(terms: &Terms, labels: &HashSet<String>, l: &Line<'_>, vcol: usize) -> Result<(), ParseError> {
    for (_, lab) in terms {
        if !labels.contains(lab) {
            let off = l.text[vcol - l.col..].find(lab.as_str()).unwrap_or(0);
            return err(l.no, vcol + off, format!("unknown label `{lab}`"));
        }
    }
    Ok(())
}

/// Parses a presentation file.
pub fn parse(src: &str) -> Result<Presentation, ParseError> {
    let all: Vec<Line<'_>> = lines(src).collect();
    let mut section = Section::None;
    let mut kind: Option<bool> = None; // Some(true) = algebra
    let mut name: Option<String> = None;
    let mut basis: Option<Vec<(String, usize)>> = None;
    let mut unit: Option<String> = None;
    let mut objects: Vec<(String, String)> = Vec::new();
    let mut homs: Vec<HomDecl> = Vec::new();
    let mut products: Vec<&Line<'_>> = Vec::new();
    let mut diffs: Vec<&Line<'_>> = Vec::new();

    for l in &all {
        if l.text.starts_with('[') {
            let Some(inner) = l.text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) else {
                return err(l.no, l.col, "unterminated section header");
            };
            let words: Vec<&str> = inner.split_whitespace().collect();
            section = match words.as_slice() {
                ["algebra"] => Section::Algebra,
                ["category"] => Section::Category,
                ["objects"] => Section::Objects,
                ["mult"] | ["compose"] => Section::Mult,
                ["diff"] => Section::Diff,
                ["hom", x, y] => {
                    homs.push(HomDecl {
                        source: x.to_string(),
                        target: y.to_string(),
                        basis: Vec::new(),
                    });
                    Section::Hom(x.to_string(), y.to_string())
                }
                _ => return err(l.no, l.col, format!("unknown section `[{inner}]`")),
            };
            match section {
                Section::Algebra | Section::Category => {
                    let is_alg = section == Section::Algebra;
                    if kind.is_some() {
                        return err(l.no, l.col, "a file holds exactly one algebra or category");
                    }
                    kind = Some(is_alg);
                }
                Section::Objects | Section::Hom(..) if kind == Some(true) => {
                    return err(l.no, l.col, "object sections belong to a category");
                }
                _ => {}
            }
            continue;
        }
        match &section {
            Section::None => return err(l.no, l.col, "content before the first section"),
            Section::Algebra | Section::Category => {
                let (k, v, vcol) = key_value(l)?;
                match (k, &section) {
                    ("name", _) => name = Some(v.to_string()),
                    ("basis", Section::Algebra) => {
                        if basis.is_some() {
                            return err(l.no, l.col, "duplicate basis line");
                        }
                        basis = Some(parse_basis(v, l.no, vcol)?);
                    }
                    ("unit", Section::Algebra) => unit = Some(v.to_string()),
                    _ => return err(l.no, l.col, format!("unknown key `{k}`")),
                }
            }
            Section::Objects => {
                let (k, v, vcol) = key_value(l)?;
                if !is_label(k) || !is_label(v) {
                    return err(l.no, vcol, "expected `object = identity_label`");
                }
                if objects.iter().any(|(o, _)| o == k) {
                    return err(l.no, l.col, format!("object `{k}` declared twice"));
                }
                objects.push((k.to_string(), v.to_string()));
            }
            Section::Hom(..) => {
                let (k, v, vcol) = key_value(l)?;
                if k != "basis" {
                    return err(l.no, l.col, format!("unknown key `{k}`"));
                }
                let h = homs.last_mut().expect("hom section");
                if !h.basis.is_empty() {
                    return err(l.no, l.col, "duplicate basis line");
                }
                h.basis = parse_basis(v, l.no, vcol)?;
            }
            Section::Mult => products.push(l),
            Section::Diff => diffs.push(l),
        }
    }

    let Some(is_alg) = kind else {
        return err(1, 1, "missing `[algebra]` or `[category]` section");
    };
    let name = name.unwrap_or_else(|| "unnamed".to_string());
    let labels: HashSet<String> = if is_alg {
        basis.iter().flatten().map(|(l, _)| l.clone()).collect()
    } else {
        let mut set = HashSet::new();
        for h in &homs {
            for (l, _) in &h.basis {
                if !set.insert(l.clone()) {
                    let line = all.iter().find(|x| x.text.contains(l.as_str())).map_or(1, |x| x.no);
                    return err(line, 1, format!("label `{l}` declared twice"));
                }
            }
        }
        set
    };
    let mut mult = Vec::new();
    let mut seen_products = HashMap::new();
    for l in products {
        let e = parse_product(l, &labels)?;
        if let Some(prev) = seen_products.insert((e.left.clone(), e.right.clone()), l.no) {
            return err(l.no, l.col, format!("duplicate product entry (first on line {prev})"));
        }
        mult.push(e);
    }
    let mut diff = Vec::new();
    let mut seen_diffs = HashMap::new();
    for l in diffs {
        let e = parse_diff(l, &labels)?;
        if let Some(prev) = seen_diffs.insert(e.source.clone(), l.no) {
            return err(
                l.no,
                l.col,
                format!("duplicate differential entry (first on line {prev})"),
            );
        }
        diff.push(e);
    }

    if is_alg {
        let Some(basis) = basis else {
            return err(1, 1, "missing basis");
        };
        let Some(unit) = unit else {
            return err(1, 1, "missing unit");
        };
        if !labels.contains(&unit) {
            let line = all.iter().find(|x| x.text.starts_with("unit")).map_or(1, |x| x.no);
            return err(line, 1, format!("unknown label `{unit}` given as unit"));
        }
        Ok(Presentation::Algebra(DgaPresentation {
            name,
            basis,
            unit,
            mult,
            diff,
        }))
    } else {
        let object_names: HashSet<&str> = objects.iter().map(|(o, _)| o.as_str()).collect();
        for h in &homs {
            for o in [&h.source, &h.target] {
                if !object_names.contains(o.as_str()) {
                    let line = all.iter().find(|x| x.text.starts_with("[hom")).map_or(1, |x| x.no);
                    return err(line, 1, format!("unknown object `{o}`"));
                }
            }
        }
        for (o, id) in &objects {
            if !labels.contains(id) {
                let line = all.iter().find(|x| x.text.starts_with(o.as_str())).map_or(1, |x| x.no);
                return err(line, 1, format!("unknown label `{id}` given as identity of `{o}`"));
            }
        }
        Ok(Presentation::Category(CategoryPresentation {
            name,
            objects,
            homs,
            compose: mult,
            diff,
        }))
    }
}

struct TermsFmt<'a>(&'a Terms);

impl fmt::Display for TermsFmt<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, l)) in self.0.iter().enumerate() {
            let neg = c < &Rat::from_integer(0.into());
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if abs == Rat::from_integer(1.into()) {
                f.write_str(l)?;
            } else {
                write!(f, "{} {l}", format_rat(&abs))?;
            }
        }
        Ok(())
    }
}

fn basis_line(b: &[(String, usize)]) -> String {
    b.iter().map(|(l, d)| format!("{l}:{d}")).collect::<Vec<_>>().join(", ")
}

/// Writes a presentation in the text format; [`parse`] reads it back.
pub fn emit(p: &Presentation) -> String {
    let mut s = String::new();
    let (products, diffs) = match p {
        Presentation::Algebra(a) => {
            let _ = writeln!(
                s,
                "[algebra]\nname = {}\nbasis = {}\nunit = {}",
                a.name,
                basis_line(&a.basis),
                a.unit
            );
            s.push_str("\n[mult]\n");
            (&a.mult, &a.diff)
        }
        Presentation::Category(c) => {
            let _ = writeln!(s, "[category]\nname = {}\n\n[objects]", c.name);
            for (o, id) in &c.objects {
                let _ = writeln!(s, "{o} = {id}");
            }
            for h in &c.homs {
                let _ = writeln!(s, "\n[hom {} {}]\nbasis = {}", h.source, h.target, basis_line(&h.basis));
            }
            s.push_str("\n[compose]\n");
            (&c.compose, &c.diff)
        }
    };
    for e in products {
        let _ = writeln!(s, "{}*{} = {}", e.left, e.right, TermsFmt(&e.terms));
    }
    s.push_str("\n[diff]\n");
    for e in diffs {
        let _ = writeln!(s, "{} = {}", e.source, TermsFmt(&e.terms));
    }
    s
}

/// Drops source-line annotations so parsed and built presentations compare.
pub fn strip_lines(p: &Presentation) -> Presentation {
    let mut p = p.clone();
    let (m, d) = match &mut p {
        Presentation::Algebra(a) => (&mut a.mult, &mut a.diff),
        Presentation::Category(c) => (&mut c.compose, &mut c.diff),
    };
    m.iter_mut().for_each(|e| e.line = None);
    d.iter_mut().for_each(|e| e.line = None);
    p
}
