//! Plain-text multiplication tables.

use num_traits::Signed;

use crate::presentation::StructureTensor;
use crate::scalar::Scalar;

/// One cell: Σₖ T(i,j,k)·label_k, e.g. `0`, `d4`, `-d4`, `d1 - 2*d3`.
pub fn render_cell(t: &StructureTensor, labels: &[String], i: usize, j: usize) -> String {
    let mut out = String::new();
    for (k, label) in labels.iter().enumerate() {
        let c = t.get(i, j, k);
        if c.is_zero() {
            continue;
        }
        let (negative, magnitude) = split_sign(c);
        let term = if magnitude.is_one() {
            label.clone()
        } else {
            format!("{}*{label}", coefficient_text(&magnitude))
        };
        match (out.is_empty(), negative) {
            (true, false) => out.push_str(&term),
            (true, true) => {
                out.push('-');
                out.push_str(&term);
            }
            (false, false) => {
                out.push_str(" + ");
                out.push_str(&term);
            }
            (false, true) => {
                out.push_str(" - ");
                out.push_str(&term);
            }
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Rational coefficients carry their sign outside the term; prime-field
/// residues and irrational cyclotomic values are printed whole.
fn split_sign(c: &Scalar) -> (bool, Scalar) {
    match c {
        Scalar::Prime { .. } => (false, c.clone()),
        _ => match c.as_rational() {
            Some(r) if r.is_negative() => (true, -c),
            _ => (false, c.clone()),
        },
    }
}

fn coefficient_text(c: &Scalar) -> String {
    match c {
        Scalar::Cyclotomic { .. } => match c.as_rational() {
            Some(r) => Scalar::Rational(r).to_string(),
            None => format!("({c})"),
        },
        _ => c.to_string(),
    }
}

/// The full table: a header row of labels, then one row per left factor.
/// Columns are left-aligned and separated by two spaces; trailing spaces
/// are trimmed.
pub fn render_table(t: &StructureTensor, labels: &[String]) -> String {
    let n = t.dim();
    assert_eq!(labels.len(), n, "one label per basis element");
    let mut grid: Vec<Vec<String>> = Vec::with_capacity(n + 1);
    let mut header = vec![String::new()];
    header.extend(labels.iter().cloned());
    grid.push(header);
    for i in 0..n {
        let mut row = vec![labels[i].clone()];
        row.extend((0..n).map(|j| render_cell(t, labels, i, j)));
        grid.push(row);
    }
    let widths: Vec<usize> = (0..=n)
        .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &grid {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            line.extend(std::iter::repeat_n(' ', widths[c] - cell.chars().count()));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
