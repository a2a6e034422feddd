//! The `hopf-presentation 1` text format and the `hopf-matrix 1` format.
//!
//! See `docs/presentation-format.md` for the grammar. Indices are 1-based
//! in files. Serialization is canonical: fixed section order, tensor
//! entries sorted by (i, j, k), zero entries omitted, witnesses sorted by
//! name.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::ihopf::IAlgebra;
use crate::linalg::Matrix;
use crate::presentation::{BialgebraPresentation, StructureTensor};
use crate::scalar::{parse_field_spec, parse_scalar, Field, Scalar};

pub const PRESENTATION_HEADER: &str = "hopf-presentation 1";
pub const MATRIX_HEADER: &str = "hopf-matrix 1";

/// Contents of a presentation file. Bialgebra files carry `comult` and
/// `counit`; algebra-only files (such as ı-algebras) omit them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationFile {
    pub field: Field,
    pub labels: Vec<String>,
    pub mult: StructureTensor,
    pub comult: Option<StructureTensor>,
    pub unit: Vec<Scalar>,
    pub counit: Option<Vec<Scalar>>,
    pub antipode: Option<Matrix>,
    pub witnesses: BTreeMap<String, Matrix>,
    pub note: Option<String>,
}

impl PresentationFile {
    pub fn from_presentation(p: &BialgebraPresentation) -> Self {
        PresentationFile {
            field: p.field().clone(),
            labels: p.labels().to_vec(),
            mult: p.mult().clone(),
            comult: Some(p.comult().clone()),
            unit: p.unit().to_vec(),
            counit: Some(p.counit().to_vec()),
            antipode: p.antipode().cloned(),
            witnesses: BTreeMap::new(),
            note: None,
        }
    }

    pub fn from_ialgebra(a: &IAlgebra) -> Self {
        PresentationFile {
            field: a.field().clone(),
            labels: a.labels().to_vec(),
            mult: a.mult().clone(),
            comult: None,
            unit: a.unit().to_vec(),
            counit: None,
            antipode: None,
            witnesses: BTreeMap::new(),
            note: Some(format!("i-algebra, {} construction, from a {}", a.construction(), a.source())),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn with_note(mut self, note: &str) -> Self {
        let flat: Vec<&str> = note.split_whitespace().collect();
        self.note = (!flat.is_empty()).then(|| flat.join(" "));
        self
    }

    pub fn with_witness(mut self, name: &str, m: Matrix) -> Self {
        self.witnesses.insert(name.to_string(), m);
        self
    }

    pub fn witness(&self, name: &str) -> Option<&Matrix> {
        self.witnesses.get(name)
    }

    /// The bialgebra described by the file; fails for algebra-only files.
    pub fn to_presentation(&self) -> Result<BialgebraPresentation> {
        let (Some(comult), Some(counit)) = (&self.comult, &self.counit) else {
            return Err(Error::InvalidPresentation(
                "file has no comult/counit sections".into(),
            ));
        };
        BialgebraPresentation::new(
            self.labels.clone(),
            self.mult.clone(),
            comult.clone(),
            self.unit.clone(),
            counit.clone(),
            self.antipode.clone(),
        )
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{PRESENTATION_HEADER}").unwrap();
        writeln!(out, "field {}", self.field.spec()).unwrap();
        writeln!(out, "dim {}", self.dim()).unwrap();
        if let Some(note) = &self.note {
            writeln!(out, "note {note}").unwrap();
        }
        writeln!(out, "labels {}", self.labels.join(" ")).unwrap();
        writeln!(out, "unit {}", join_row(&self.unit)).unwrap();
        if let Some(counit) = &self.counit {
            writeln!(out, "counit {}", join_row(counit)).unwrap();
        }
        write_tensor(&mut out, "mult", &self.mult);
        if let Some(comult) = &self.comult {
            write_tensor(&mut out, "comult", comult);
        }
        if let Some(a) = &self.antipode {
            out.push_str("antipode\n");
            write_matrix_rows(&mut out, a);
            out.push_str("end\n");
        }
        for (name, m) in &self.witnesses {
            writeln!(out, "witness {name}").unwrap();
            write_matrix_rows(&mut out, m);
            out.push_str("end\n");
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).presentation()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&read(path.as_ref())?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        write(path.as_ref(), &self.serialize())
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn join_row(v: &[Scalar]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

fn write_tensor(out: &mut String, name: &str, t: &StructureTensor) {
    writeln!(out, "{name}").unwrap();
    for ((i, j, k), v) in t.nonzero() {
        writeln!(out, "{} {} {} {v}", i + 1, j + 1, k + 1).unwrap();
    }
    out.push_str("end\n");
}

fn write_matrix_rows(out: &mut String, m: &Matrix) {
    for r in 0..m.rows() {
        writeln!(out, "{}", join_row(m.row(r))).unwrap();
    }
}

/// Serializes a square matrix in the `hopf-matrix 1` format.
pub fn matrix_to_text(m: &Matrix) -> String {
    let mut out = String::new();
    writeln!(out, "{MATRIX_HEADER}").unwrap();
    writeln!(out, "field {}", m.field().spec()).unwrap();
    writeln!(out, "dim {}", m.rows()).unwrap();
    out.push_str("matrix\n");
    write_matrix_rows(&mut out, m);
    out.push_str("end\n");
    out
}

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    Parser::new(text).matrix_file()
}

pub fn load_matrix(path: impl AsRef<Path>) -> Result<Matrix> {
    parse_matrix(&read(path.as_ref())?)
}

pub fn save_matrix(m: &Matrix, path: impl AsRef<Path>) -> Result<()> {
    write(path.as_ref(), &matrix_to_text(m))
}

struct Parser<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
    last_line: usize,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let last_line = text.lines().count().max(1);
        Parser {
            lines,
            pos: 0,
            last_line,
        }
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let item = self.lines.get(self.pos).copied();
        self.pos += 1;
        item
    }

    fn header(&mut self, expected: &str) -> Result<()> {
        match self.next() {
            Some((_, l)) if l == expected => Ok(()),
            Some((n, l)) => Err(err(n, format!("expected header `{expected}`, found `{l}`"))),
            None => Err(err(1, format!("empty file, expected header `{expected}`"))),
        }
    }

    /// Lines up to the closing `end`.
    fn block(&mut self, opened_at: usize, name: &str) -> Result<Vec<(usize, &'a str)>> {
        let mut out = Vec::new();
        loop {
            match self.next() {
                Some((_, "end")) => return Ok(out),
                Some(line) => out.push(line),
                None => return Err(err(self.last_line, format!("`{name}` block opened on line {opened_at} has no `end`"))),
            }
        }
    }

    fn presentation(mut self) -> Result<PresentationFile> {
        self.header(PRESENTATION_HEADER)?;
        let mut field: Option<Field> = None;
        let mut dim: Option<usize> = None;
        let mut labels = None;
        let mut note = None;
        let mut unit = None;
        let mut counit = None;
        let mut mult = None;
        let mut comult = None;
        let mut antipode = None;
        let mut witnesses = BTreeMap::new();

        while let Some((n, line)) = self.next() {
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            let dup = |present: bool| -> Result<()> {
                if present {
                    Err(err(n, format!("duplicate `{key}`")))
                } else {
                    Ok(())
                }
            };
            let need_field = |f: &Option<Field>| f.clone().ok_or_else(|| err(n, format!("`{key}` before `field`")));
            let need_dim = |d: Option<usize>| d.ok_or_else(|| err(n, format!("`{key}` before `dim`")));
            match key {
                "field" => {
                    dup(field.is_some())?;
                    let spec = parse_field_spec(rest).map_err(|e| err(n, e.to_string()))?;
                    field = Some(Field::from_spec(spec).map_err(|e| err(n, e.to_string()))?);
                }
                "dim" => {
                    dup(dim.is_some())?;
                    let d: usize = rest.parse().map_err(|_| err(n, format!("invalid dimension `{rest}`")))?;
                    if d == 0 {
                        return Err(err(n, "dimension must be positive"));
                    }
                    dim = Some(d);
                }
                "note" => {
                    dup(note.is_some())?;
                    note = Some(rest.to_string());
                }
                "labels" => {
                    dup(labels.is_some())?;
                    let d = need_dim(dim)?;
                    let l: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                    if l.len() != d {
                        return Err(err(n, format!("expected {d} labels, found {}", l.len())));
                    }
                    labels = Some(l);
                }
                "unit" | "counit" => {
                    let slot = if key == "unit" { &mut unit } else { &mut counit };
                    dup(slot.is_some())?;
                    let f = need_field(&field)?;
                    let d = need_dim(dim)?;
                    *slot = Some(parse_row(&f, n, rest, d)?);
                }
                "mult" | "comult" => {
                    let present = if key == "mult" { mult.is_some() } else { comult.is_some() };
                    dup(present)?;
                    let f = need_field(&field)?;
                    let d = need_dim(dim)?;
                    let body = self.block(n, key)?;
                    let t = parse_tensor(&f, d, &body)?;
                    if key == "mult" {
                        mult = Some(t);
                    } else {
                        comult = Some(t);
                    }
                }
                "antipode" => {
                    dup(antipode.is_some())?;
                    let f = need_field(&field)?;
                    let d = need_dim(dim)?;
                    let body = self.block(n, key)?;
                    antipode = Some(parse_matrix_rows(&f, d, n, &body)?);
                }
                "witness" => {
                    if rest.is_empty() || rest.contains(char::is_whitespace) {
                        return Err(err(n, "witness needs a single-word name"));
                    }
                    if witnesses.contains_key(rest) {
                        return Err(err(n, format!("duplicate witness `{rest}`")));
                    }
                    let f = need_field(&field)?;
                    let d = need_dim(dim)?;
                    let body = self.block(n, key)?;
                    witnesses.insert(rest.to_string(), parse_matrix_rows(&f, d, n, &body)?);
                }
                _ => return Err(err(n, format!("unknown key `{key}`"))),
            }
        }

        let end = self.last_line;
        let missing = |what: &str| err(end, format!("missing `{what}`"));
        let field = field.ok_or_else(|| missing("field"))?;
        let dim = dim.ok_or_else(|| missing("dim"))?;
        let labels = labels.ok_or_else(|| missing("labels"))?;
        let mult = mult.ok_or_else(|| missing("mult"))?;
        let unit = unit.ok_or_else(|| missing("unit"))?;
        if comult.is_some() != counit.is_some() {
            return Err(err(end, "`comult` and `counit` must appear together"));
        }
        debug_assert_eq!(labels.len(), dim);
        let file = PresentationFile {
            field,
            labels,
            mult,
            comult,
            unit,
            counit,
            antipode,
            witnesses,
            note,
        };
        if file.comult.is_some() {
            file.to_presentation().map_err(|e| err(end, e.to_string()))?;
        }
        Ok(file)
    }

    fn matrix_file(mut self) -> Result<Matrix> {
        self.header(MATRIX_HEADER)?;
        let mut field = None;
        let mut dim = None;
        let mut matrix = None;
        while let Some((n, line)) = self.next() {
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match key {
                "field" if field.is_none() => {
                    let spec = parse_field_spec(rest).map_err(|e| err(n, e.to_string()))?;
                    field = Some(Field::from_spec(spec).map_err(|e| err(n, e.to_string()))?);
                }
                "dim" if dim.is_none() => {
                    let d: usize = rest.parse().map_err(|_| err(n, format!("invalid dimension `{rest}`")))?;
                    dim = Some(d);
                }
                "matrix" if matrix.is_none() => {
                    let f: &Field = field.as_ref().ok_or_else(|| err(n, "`matrix` before `field`"))?;
                    let d = dim.ok_or_else(|| err(n, "`matrix` before `dim`"))?;
                    let body = self.block(n, key)?;
                    matrix = Some(parse_matrix_rows(f, d, n, &body)?);
                }
                _ => return Err(err(n, format!("unexpected `{line}`"))),
            }
        }
        matrix.ok_or_else(|| err(self.last_line, "missing `matrix` block"))
    }
}

fn parse_row(field: &Field, line: usize, text: &str, dim: usize) -> Result<Vec<Scalar>> {
    let row: Vec<Scalar> = text
        .split(';')
        .map(|s| parse_scalar(field, s).map_err(|e| err(line, e.to_string())))
        .collect::<Result<_>>()?;
    if row.len() != dim {
        return Err(err(line, format!("expected {dim} entries, found {}", row.len())));
    }
    Ok(row)
}

fn parse_matrix_rows(field: &Field, dim: usize, opened_at: usize, body: &[(usize, &str)]) -> Result<Matrix> {
    if body.len() != dim {
        let line = body.last().map_or(opened_at, |(n, _)| *n);
        return Err(err(line, format!("expected {dim} matrix rows, found {}", body.len())));
    }
    let rows = body
        .iter()
        .map(|(n, l)| parse_row(field, *n, l, dim))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, rows).map_err(|e| err(opened_at, e.to_string()))
}

fn parse_tensor(field: &Field, dim: usize, body: &[(usize, &str)]) -> Result<StructureTensor> {
    let mut t = StructureTensor::zeros(field, dim);
    let mut seen = std::collections::HashSet::new();
    for &(n, line) in body {
        let mut parts = line.splitn(4, char::is_whitespace);
        let mut index = || -> Result<usize> {
            let tok = parts.next().unwrap_or("");
            let v: usize = tok
                .parse()
                .map_err(|_| err(n, format!("invalid index `{tok}`, expected `i j k scalar`")))?;
            if v == 0 || v > dim {
                return Err(err(n, format!("index {v} out of range 1..={dim}")));
            }
            Ok(v - 1)
        };
        let (i, j, k) = (index()?, index()?, index()?);
        let value_text = parts.next().unwrap_or("").trim();
        if value_text.is_empty() {
            return Err(err(n, "missing scalar after indices"));
        }
        let v = parse_scalar(field, value_text).map_err(|e| err(n, e.to_string()))?;
        if !seen.insert((i, j, k)) {
            return Err(err(n, format!("duplicate entry ({} {} {})", i + 1, j + 1, k + 1)));
        }
        t.set(i, j, k, v);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn taft2_round_trip() {
        let h = catalog::taft(2, &Field::rational()).unwrap();
        let file = PresentationFile::from_presentation(&h).with_witness("phi", catalog::taft2_witness(h.field()).unwrap().matrix().clone());
        let text = file.serialize();
        let back = PresentationFile::parse(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_presentation().unwrap(), h);
        assert_eq!(back.serialize(), text);
    }

    #[test]
    fn cyclotomic_round_trip() {
        let k = Field::cyclotomic(8).unwrap();
        let h = catalog::taft(2, &k).unwrap();
        let file = PresentationFile::from_presentation(&h).with_note("H2 over  Q(zeta8)\nsecond line");
        assert_eq!(file.note.as_deref(), Some("H2 over Q(zeta8) second line"));
        let text = file.serialize();
        assert_eq!(PresentationFile::parse(&text).unwrap().serialize(), text);
    }

    fn tiny(body: &str) -> String {
        format!("hopf-presentation 1\nfield rational\ndim 1\nlabels 1\nunit 1\n{body}")
    }

    #[test]
    fn diagnostics() {
        let bad_index = tiny("mult\n1 1 5 1\nend\n");
        let e = PresentationFile::parse(&bad_index).unwrap_err();
        assert_eq!(
            e,
            Error::Format {
                line: 7,
                message: "index 5 out of range 1..=1".into()
            }
        );
        let e = PresentationFile::parse(&tiny("mult\n1 1 1 1/0\nend\n")).unwrap_err();
        assert!(matches!(e, Error::Format { line: 7, .. }), "{e}");
        let e = PresentationFile::parse(&tiny("mult\n1 1 1 1\n")).unwrap_err();
        assert!(e.to_string().contains("no `end`"));
        let e = PresentationFile::parse(&tiny("mult\n1 1 1 [1, 0] @ zeta(4)\nend\n")).unwrap_err();
        assert!(e.to_string().contains("field mismatch"), "{e}");
        assert!(PresentationFile::parse("hopf-presentation 2\n").is_err());
        assert!(PresentationFile::parse(&tiny("mult\n1 1 1 1\n1 1 1 2\nend\n")).is_err());
        assert!(PresentationFile::parse(&tiny("")).is_err());
        assert!(PresentationFile::parse(&tiny("mult\n1 1 1 1\nend\nbogus 3\n")).is_err());
    }

    #[test]
    fn algebra_only_file() {
        let text = tiny("mult\n1 1 1 1\nend\n");
        let file = PresentationFile::parse(&text).unwrap();
        assert!(file.comult.is_none());
        assert!(file.to_presentation().is_err());
        assert_eq!(file.serialize(), text);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a comment\nhopf-presentation 1\n\nfield rational\ndim 1\nlabels 1\nunit 1\nmult\n# inside\n1 1 1 1\nend\n";
        assert!(PresentationFile::parse(text).is_ok());
    }

    #[test]
    fn matrix_files() {
        let k = Field::cyclotomic(8).unwrap();
        let m = Matrix::from_rows(
            &k,
            vec![
                vec![k.root_of_unity(1).unwrap(), k.zero()],
                vec![k.from_integer(-3), k.one()],
            ],
        )
        .unwrap();
        let text = matrix_to_text(&m);
        assert_eq!(parse_matrix(&text).unwrap(), m);
        assert!(parse_matrix("hopf-matrix 1\nfield rational\ndim 2\nmatrix\n1; 0\nend\n").is_err());
    }
}
