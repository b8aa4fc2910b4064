//! The catalog file format and the built-in catalog.
//!
//! Catalogs are line-oriented text. A file starts with `format 1`, then
//! holds `algebra` and `module` stanzas. Coefficients must be written in
//! canonical form (lowest terms over Q, plain residues over GF(p));
//! non-canonical input is rejected rather than normalized, which is what
//! makes `parse` and `emit` exact inverses.
//!
//! ```text
//! format 1
//!
//! algebra r2 {
//!   field: Q
//!   kind: lie
//!   dim: 2
//!   bracket 1 2 -> 2:1
//!   bracket 2 1 -> 2:-1
//! }
//!
//! module lambda over r2 {
//!   dim: 1
//!   left 1 -> [1]
//! }
//! ```
//!
//! Within an algebra stanza the `field`, `kind` and `dim` lines come in
//! that order, before any `bracket` line. Unspecified products are zero;
//! zero coefficients and duplicate `(i, j)` bracket lines are rejected.
//! Module stanzas give one matrix per acting basis element (`left i ->
//! [rows; ...]`, optionally `right i -> ...`); omitted indices act as
//! zero, and a right action that is entirely zero is the same as no
//! right action at all.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::algebra::{AlgebraKind, AlgebraPresentation};
use crate::error::{Error, Result};
use crate::matrix::MatrixExact;
use crate::module::ModulePresentation;
use crate::scalar::{FieldTag, Scalar};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogEntry {
    Algebra(AlgebraPresentation),
    Module(ModulePresentation),
}

impl CatalogEntry {
    pub fn name(&self) -> &str {
        match self {
            CatalogEntry::Algebra(a) => a.name(),
            CatalogEntry::Module(m) => m.name(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogDocument {
    pub format_version: u32,
    pub entries: Vec<CatalogEntry>,
}

impl CatalogDocument {
    pub fn empty() -> Self {
        CatalogDocument {
            format_version: FORMAT_VERSION,
            entries: Vec::new(),
        }
    }

    pub fn algebra(&self, name: &str) -> Option<&AlgebraPresentation> {
        self.entries.iter().find_map(|e| match e {
            CatalogEntry::Algebra(a) if a.name() == name => Some(a),
            _ => None,
        })
    }

    pub fn module(&self, name: &str) -> Option<&ModulePresentation> {
        self.entries.iter().find_map(|e| match e {
            CatalogEntry::Module(m) if m.name() == name => Some(m),
            _ => None,
        })
    }

    pub fn algebras(&self) -> impl Iterator<Item = &AlgebraPresentation> {
        self.entries.iter().filter_map(|e| match e {
            CatalogEntry::Algebra(a) => Some(a),
            _ => None,
        })
    }

    pub fn modules(&self) -> impl Iterator<Item = &ModulePresentation> {
        self.entries.iter().filter_map(|e| match e {
            CatalogEntry::Module(m) => Some(m),
            _ => None,
        })
    }

    /// Adds an entry, enforcing the unique-name invariant and the name
    /// syntax of the file format.
    pub fn add_entry(&mut self, entry: CatalogEntry) -> Result<()> {
        check_name(entry.name())?;
        if self.entries.iter().any(|e| e.name() == entry.name()) {
            return Err(Error::InvalidName(format!(
                "duplicate catalog name `{}`",
                entry.name()
            )));
        }
        if let CatalogEntry::Module(m) = &entry {
            let base = self
                .algebra(m.algebra().name())
                .ok_or_else(|| Error::UnknownEntry(m.algebra().name().to_string()))?;
            if !base.same_structure(m.algebra()) {
                return Err(Error::InvalidName(format!(
                    "module `{}` disagrees with catalog algebra `{}`",
                    m.name(),
                    base.name()
                )));
            }
        }
        self.entries.push(entry);
        Ok(())
    }

    /// Appends all entries of `other`; names must stay unique.
    pub fn merge(mut self, other: CatalogDocument) -> Result<CatalogDocument> {
        for entry in other.entries {
            self.add_entry(entry)?;
        }
        Ok(self)
    }
}

fn check_name(name: &str) -> Result<()> {
    let mut chars = name.chars();
    let ok = match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {
            chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        }
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidName(format!(
            "`{name}` is not a valid catalog name"
        )))
    }
}

// ---------------------------------------------------------------------
// parsing

struct Scan<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    text: &'a str,
}

impl<'a> Scan<'a> {
    fn new(text: &'a str, line: usize) -> Self {
        Scan {
            chars: text.chars().collect(),
            pos: 0,
            line,
            text,
        }
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, self.col(), message)
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.get(self.pos), Some(' ') | Some('\t')) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.err(format!("unexpected trailing input in `{}`", self.text.trim())))
        }
    }

    fn expect_char(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.chars.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> Result<(String, usize)> {
        self.skip_ws();
        let start = self.pos;
        match self.chars.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => return Err(self.err("expected identifier")),
        }
        while matches!(self.chars.get(self.pos), Some(c) if c.is_ascii_alphanumeric() || *c == '_')
        {
            self.pos += 1;
        }
        Ok((self.chars[start..self.pos].iter().collect(), start + 1))
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        let (word, wcol) = self.ident()?;
        if word == kw {
            Ok(())
        } else {
            Err(Error::parse(self.line, wcol, format!("expected `{kw}`, found `{word}`")))
        }
    }

    fn number(&mut self) -> Result<(usize, usize)> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.chars.get(self.pos), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        if text.len() > 1 && text.starts_with('0') {
            return Err(Error::parse(self.line, start + 1, "leading zero in number"));
        }
        let value = text
            .parse::<usize>()
            .map_err(|_| Error::parse(self.line, start + 1, "number out of range"))?;
        Ok((value, start + 1))
    }

    /// A scalar literal: characters up to whitespace or a delimiter.
    fn literal(&mut self) -> Result<(String, usize)> {
        self.skip_ws();
        let start = self.pos;
        while let Some(&c) = self.chars.get(self.pos) {
            if c.is_whitespace() || matches!(c, ',' | ';' | ']') {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a coefficient"));
        }
        Ok((self.chars[start..self.pos].iter().collect(), start + 1))
    }
}

fn parse_scalar_at(field: FieldTag, text: &str, line: usize, col: usize) -> Result<Scalar> {
    Scalar::parse_canonical(field, text).map_err(|e| match e {
        Error::BadLiteral { text, reason } => {
            Error::parse(line, col, format!("invalid coefficient `{text}`: {reason}"))
        }
        other => other,
    })
}

struct AlgebraDraft {
    name: String,
    header_line: usize,
    field: Option<FieldTag>,
    kind: Option<AlgebraKind>,
    dim: Option<usize>,
    terms: Vec<(usize, usize, usize, Scalar)>,
    seen_pairs: BTreeMap<(usize, usize), usize>,
}

struct ModuleDraft {
    name: String,
    header_line: usize,
    algebra: AlgebraPresentation,
    dim: Option<usize>,
    left: BTreeMap<usize, MatrixExact>,
    right: BTreeMap<usize, MatrixExact>,
}

enum State {
    ExpectFormat,
    TopLevel,
    InAlgebra(AlgebraDraft),
    InModule(ModuleDraft),
}

/// Parses catalog text into a document, or reports a positioned error.
pub fn parse_catalog(text: &str) -> Result<CatalogDocument> {
    let mut doc = CatalogDocument::empty();
    let mut state = State::ExpectFormat;
    for (idx, raw) in text.lines().enumerate() {
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut scan = Scan::new(raw, idx + 1);
        state = step(&mut doc, state, &mut scan)?;
    }
    match state {
        State::TopLevel => Ok(doc),
        State::ExpectFormat => Err(Error::parse(1, 1, "missing `format 1` header")),
        State::InAlgebra(d) => Err(Error::parse(
            d.header_line,
            1,
            format!("algebra `{}` is never closed", d.name),
        )),
        State::InModule(d) => Err(Error::parse(
            d.header_line,
            1,
            format!("module `{}` is never closed", d.name),
        )),
    }
}

fn step(doc: &mut CatalogDocument, state: State, scan: &mut Scan) -> Result<State> {
    match state {
        State::ExpectFormat => {
            scan.keyword("format")?;
            let (version, col) = scan.number()?;
            if version as u32 != FORMAT_VERSION {
                return Err(Error::parse(
                    scan.line,
                    col,
                    format!("unsupported format version {version}"),
                ));
            }
            scan.finish()?;
            Ok(State::TopLevel)
        }
        State::TopLevel => {
            let (word, col) = scan.ident()?;
            match word.as_str() {
                "algebra" => {
                    let (name, ncol) = scan.ident()?;
                    check_name(&name)
                        .map_err(|_| Error::parse(scan.line, ncol, "invalid algebra name"))?;
                    if doc.entries.iter().any(|e| e.name() == name) {
                        return Err(Error::parse(
                            scan.line,
                            ncol,
                            format!("duplicate name `{name}`"),
                        ));
                    }
                    scan.expect_char('{')?;
                    scan.finish()?;
                    Ok(State::InAlgebra(AlgebraDraft {
                        name,
                        header_line: scan.line,
                        field: None,
                        kind: None,
                        dim: None,
                        terms: Vec::new(),
                        seen_pairs: BTreeMap::new(),
                    }))
                }
                "module" => {
                    let (name, ncol) = scan.ident()?;
                    check_name(&name)
                        .map_err(|_| Error::parse(scan.line, ncol, "invalid module name"))?;
                    if doc.entries.iter().any(|e| e.name() == name) {
                        return Err(Error::parse(
                            scan.line,
                            ncol,
                            format!("duplicate name `{name}`"),
                        ));
                    }
                    scan.keyword("over")?;
                    let (base, bcol) = scan.ident()?;
                    let algebra = doc
                        .algebra(&base)
                        .ok_or_else(|| {
                            Error::parse(scan.line, bcol, format!("unknown algebra `{base}`"))
                        })?
                        .clone();
                    scan.expect_char('{')?;
                    scan.finish()?;
                    Ok(State::InModule(ModuleDraft {
                        name,
                        header_line: scan.line,
                        algebra,
                        dim: None,
                        left: BTreeMap::new(),
                        right: BTreeMap::new(),
                    }))
                }
                _ => Err(Error::parse(
                    scan.line,
                    col,
                    format!("expected `algebra` or `module`, found `{word}`"),
                )),
            }
        }
        State::InAlgebra(mut draft) => {
            if scan.peek() == Some('}') {
                scan.expect_char('}')?;
                scan.finish()?;
                let algebra = finish_algebra(draft, scan.line)?;
                doc.entries.push(CatalogEntry::Algebra(algebra));
                return Ok(State::TopLevel);
            }
            let (word, col) = scan.ident()?;
            match word.as_str() {
                "field" => {
                    if draft.field.is_some() {
                        return Err(Error::parse(scan.line, col, "duplicate `field` line"));
                    }
                    scan.expect_char(':')?;
                    draft.field = Some(parse_field(scan)?);
                    scan.finish()?;
                }
                "kind" => {
                    if draft.field.is_none() || draft.kind.is_some() {
                        return Err(Error::parse(
                            scan.line,
                            col,
                            "`kind` must follow `field` exactly once",
                        ));
                    }
                    scan.expect_char(':')?;
                    let (value, vcol) = scan.ident()?;
                    draft.kind = Some(match value.as_str() {
                        "lie" => AlgebraKind::Lie,
                        "leibniz" => AlgebraKind::Leibniz,
                        _ => {
                            return Err(Error::parse(
                                scan.line,
                                vcol,
                                format!("unknown kind `{value}`"),
                            ))
                        }
                    });
                    scan.finish()?;
                }
                "dim" => {
                    if draft.kind.is_none() || draft.dim.is_some() {
                        return Err(Error::parse(
                            scan.line,
                            col,
                            "`dim` must follow `kind` exactly once",
                        ));
                    }
                    scan.expect_char(':')?;
                    let (value, _) = scan.number()?;
                    draft.dim = Some(value);
                    scan.finish()?;
                }
                "bracket" => {
                    let (field, dim) = match (draft.field, draft.dim) {
                        (Some(f), Some(d)) => (f, d),
                        _ => {
                            return Err(Error::parse(
                                scan.line,
                                col,
                                "`bracket` lines must follow `field`, `kind` and `dim`",
                            ))
                        }
                    };
                    let (i, icol) = scan.number()?;
                    let (j, jcol) = scan.number()?;
                    for (v, c) in [(i, icol), (j, jcol)] {
                        if v == 0 || v > dim {
                            return Err(Error::parse(
                                scan.line,
                                c,
                                format!("basis index {v} out of range 1..={dim}"),
                            ));
                        }
                    }
                    if draft.seen_pairs.insert((i, j), scan.line).is_some() {
                        return Err(Error::parse(
                            scan.line,
                            icol,
                            format!("duplicate bracket line for pair ({i}, {j})"),
                        ));
                    }
                    scan.expect_char('-')?;
                    scan.expect_char('>')?;
                    let mut seen_targets = Vec::new();
                    loop {
                        let (k, kcol) = scan.number()?;
                        if k == 0 || k > dim {
                            return Err(Error::parse(
                                scan.line,
                                kcol,
                                format!("basis index {k} out of range 1..={dim}"),
                            ));
                        }
                        if seen_targets.contains(&k) {
                            return Err(Error::parse(
                                scan.line,
                                kcol,
                                format!("duplicate target index {k}"),
                            ));
                        }
                        seen_targets.push(k);
                        scan.expect_char(':')?;
                        let (lit, lcol) = scan.literal()?;
                        let value = parse_scalar_at(field, &lit, scan.line, lcol)?;
                        if value.is_zero() {
                            return Err(Error::parse(
                                scan.line,
                                lcol,
                                "zero coefficients must be omitted",
                            ));
                        }
                        draft.terms.push((i - 1, j - 1, k - 1, value));
                        if scan.peek() == Some(',') {
                            scan.expect_char(',')?;
                            continue;
                        }
                        break;
                    }
                    scan.finish()?;
                }
                _ => {
                    return Err(Error::parse(
                        scan.line,
                        col,
                        format!("unknown algebra field `{word}`"),
                    ))
                }
            }
            Ok(State::InAlgebra(draft))
        }
        State::InModule(mut draft) => {
            if scan.peek() == Some('}') {
                scan.expect_char('}')?;
                scan.finish()?;
                let module = finish_module(draft, scan.line)?;
                doc.entries.push(CatalogEntry::Module(module));
                return Ok(State::TopLevel);
            }
            let (word, col) = scan.ident()?;
            match word.as_str() {
                "dim" => {
                    if draft.dim.is_some() {
                        return Err(Error::parse(scan.line, col, "duplicate `dim` line"));
                    }
                    scan.expect_char(':')?;
                    let (value, vcol) = scan.number()?;
                    if value == 0 {
                        return Err(Error::parse(
                            scan.line,
                            vcol,
                            "module dimension must be positive",
                        ));
                    }
                    draft.dim = Some(value);
                    scan.finish()?;
                }
                "left" | "right" => {
                    let dim = draft.dim.ok_or_else(|| {
                        Error::parse(scan.line, col, "action lines must follow `dim`")
                    })?;
                    let (i, icol) = scan.number()?;
                    if i == 0 || i > draft.algebra.dim() {
                        return Err(Error::parse(
                            scan.line,
                            icol,
                            format!(
                                "basis index {i} out of range 1..={}",
                                draft.algebra.dim()
                            ),
                        ));
                    }
                    scan.expect_char('-')?;
                    scan.expect_char('>')?;
                    let matrix = parse_matrix(scan, draft.algebra.field(), dim)?;
                    let slot = if word == "left" {
                        &mut draft.left
                    } else {
                        &mut draft.right
                    };
                    if slot.insert(i, matrix).is_some() {
                        return Err(Error::parse(
                            scan.line,
                            icol,
                            format!("duplicate `{word}` line for index {i}"),
                        ));
                    }
                    scan.finish()?;
                }
                _ => {
                    return Err(Error::parse(
                        scan.line,
                        col,
                        format!("unknown module field `{word}`"),
                    ))
                }
            }
            Ok(State::InModule(draft))
        }
    }
}

fn parse_field(scan: &mut Scan) -> Result<FieldTag> {
    let (word, col) = scan.ident()?;
    match word.as_str() {
        "Q" => Ok(FieldTag::Q),
        "GF" => {
            scan.expect_char('(')?;
            let (p, pcol) = scan.number()?;
            scan.expect_char(')')?;
            let tag = FieldTag::GF(p as u64);
            tag.validate()
                .map_err(|_| Error::parse(scan.line, pcol, format!("{p} is not prime")))?;
            Ok(tag)
        }
        _ => Err(Error::parse(
            scan.line,
            col,
            format!("unknown field `{word}` (expected Q or GF(p))"),
        )),
    }
}

fn parse_matrix(scan: &mut Scan, field: FieldTag, dim: usize) -> Result<MatrixExact> {
    scan.expect_char('[')?;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut row: Vec<Scalar> = Vec::new();
    loop {
        let (lit, lcol) = scan.literal()?;
        row.push(parse_scalar_at(field, &lit, scan.line, lcol)?);
        match scan.peek() {
            Some(',') => {
                scan.expect_char(',')?;
            }
            Some(';') => {
                scan.expect_char(';')?;
                rows.push(std::mem::take(&mut row));
            }
            Some(']') => {
                scan.expect_char(']')?;
                rows.push(std::mem::take(&mut row));
                break;
            }
            _ => return Err(scan.err("expected `,`, `;` or `]` in matrix")),
        }
    }
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(scan.err(format!("matrix must be {dim}x{dim}")));
    }
    MatrixExact::from_rows(field, rows)
}

fn finish_algebra(draft: AlgebraDraft, close_line: usize) -> Result<AlgebraPresentation> {
    let field = draft
        .field
        .ok_or_else(|| Error::parse(close_line, 1, "algebra stanza is missing `field`"))?;
    let kind = draft
        .kind
        .ok_or_else(|| Error::parse(close_line, 1, "algebra stanza is missing `kind`"))?;
    let dim = draft
        .dim
        .ok_or_else(|| Error::parse(close_line, 1, "algebra stanza is missing `dim`"))?;
    AlgebraPresentation::new(draft.name, field, kind, dim, draft.terms)
}

fn finish_module(draft: ModuleDraft, close_line: usize) -> Result<ModulePresentation> {
    let dim = draft
        .dim
        .ok_or_else(|| Error::parse(close_line, 1, "module stanza is missing `dim`"))?;
    let field = draft.algebra.field();
    let zero = MatrixExact::zero(field, dim, dim);
    let left: Vec<MatrixExact> = (1..=draft.algebra.dim())
        .map(|i| draft.left.get(&i).cloned().unwrap_or_else(|| zero.clone()))
        .collect();
    let right = if draft.right.is_empty() {
        None
    } else {
        Some(
            (1..=draft.algebra.dim())
                .map(|i| draft.right.get(&i).cloned().unwrap_or_else(|| zero.clone()))
                .collect(),
        )
    };
    ModulePresentation::new(draft.name, draft.algebra, dim, left, right)
}

// ---------------------------------------------------------------------
// emission

/// Canonical text for one algebra stanza.
pub fn emit_algebra(a: &AlgebraPresentation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebra {} {{", a.name());
    let _ = writeln!(out, "  field: {}", a.field());
    let _ = writeln!(out, "  kind: {}", a.kind());
    let _ = writeln!(out, "  dim: {}", a.dim());
    let mut by_pair: BTreeMap<(usize, usize), Vec<(usize, Scalar)>> = BTreeMap::new();
    for (i, j, k, c) in a.bracket_terms() {
        by_pair.entry((i, j)).or_default().push((k, c));
    }
    for ((i, j), mut targets) in by_pair {
        targets.sort_by_key(|(k, _)| *k);
        let parts: Vec<String> = targets
            .iter()
            .map(|(k, c)| format!("{}:{}", k + 1, c))
            .collect();
        let _ = writeln!(out, "  bracket {} {} -> {}", i + 1, j + 1, parts.join(", "));
    }
    out.push_str("}\n");
    out
}

/// Canonical text for one module stanza.
pub fn emit_module(m: &ModulePresentation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "module {} over {} {{", m.name(), m.algebra().name());
    let _ = writeln!(out, "  dim: {}", m.dim_v());
    let emit_side = |out: &mut String, label: &str, mats: Vec<&MatrixExact>| {
        for (i, mat) in mats.iter().enumerate() {
            if mat.is_zero() {
                continue;
            }
            let rows: Vec<String> = (0..mat.rows())
                .map(|r| {
                    (0..mat.cols())
                        .map(|c| mat.get(r, c).to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                })
                .collect();
            let _ = writeln!(out, "  {} {} -> [{}]", label, i + 1, rows.join("; "));
        }
    };
    emit_side(
        &mut out,
        "left",
        (0..m.algebra().dim()).map(|i| m.left(i)).collect(),
    );
    if m.has_right_action() {
        emit_side(
            &mut out,
            "right",
            (0..m.algebra().dim()).map(|i| m.right(i).unwrap()).collect(),
        );
    }
    out.push_str("}\n");
    out
}

/// Canonical serialization; `parse_catalog(emit_catalog(d)) = d`.
pub fn emit_catalog(doc: &CatalogDocument) -> String {
    let mut out = format!("format {}\n", doc.format_version);
    for entry in &doc.entries {
        out.push('\n');
        match entry {
            CatalogEntry::Algebra(a) => out.push_str(&emit_algebra(a)),
            CatalogEntry::Module(m) => out.push_str(&emit_module(m)),
        }
    }
    out
}

/// The catalog shipped with the crate.
pub mod builtin {
    use std::sync::OnceLock;

    use super::{parse_catalog, CatalogDocument};
    use crate::algebra::AlgebraPresentation;
    use crate::module::ModulePresentation;

    pub fn text() -> &'static str {
        include_str!("builtin.cat")
    }

    fn cached() -> &'static CatalogDocument {
        static DOC: OnceLock<CatalogDocument> = OnceLock::new();
        DOC.get_or_init(|| parse_catalog(text()).expect("builtin catalog parses"))
    }

    pub fn document() -> CatalogDocument {
        cached().clone()
    }

    pub fn algebra(name: &str) -> AlgebraPresentation {
        cached()
            .algebra(name)
            .unwrap_or_else(|| panic!("no builtin algebra `{name}`"))
            .clone()
    }

    pub fn module(name: &str) -> ModulePresentation {
        cached()
            .module(name)
            .unwrap_or_else(|| panic!("no builtin module `{name}`"))
            .clone()
    }

    pub fn ab1() -> AlgebraPresentation {
        algebra("ab1")
    }

    pub fn r2() -> AlgebraPresentation {
        algebra("r2")
    }

    pub fn h3() -> AlgebraPresentation {
        algebra("h3")
    }

    pub fn sl2() -> AlgebraPresentation {
        algebra("sl2")
    }

    pub fn r2_gf2() -> AlgebraPresentation {
        algebra("r2_gf2")
    }

    pub fn r2_gf3() -> AlgebraPresentation {
        algebra("r2_gf3")
    }

    pub fn e4_gf2() -> AlgebraPresentation {
        algebra("e4_gf2")
    }

    pub fn p3() -> AlgebraPresentation {
        algebra("p3")
    }

    pub fn p4_gf2() -> AlgebraPresentation {
        algebra("p4_gf2")
    }
}
