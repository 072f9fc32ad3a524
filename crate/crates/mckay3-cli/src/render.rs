//! Small text/CSV rendering helpers shared by the subcommands.

use std::fmt::Display;

/// Renders a matrix with right-aligned cells, one row per line.
pub fn matrix_text<T: Display>(m: &[Vec<T>]) -> String {
    let cells: Vec<Vec<String>> = m
        .iter()
        .map(|row| row.iter().map(|v| v.to_string()).collect())
        .collect();
    let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
    cells
        .iter()
        .map(|row| {
            let padded: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            format!("  {}", padded.join(" "))
        })
        .collect::<Vec<String>>()
        .join("\n")
}

/// Quotes a CSV field when it contains a delimiter, quote, or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Joins already-escaped fields into one CSV row.
pub fn csv_row(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<String>>()
        .join(",")
}

/// Formats a vertex list as `{0,2}`.
pub fn vertex_list(vs: &[usize]) -> String {
    let inner: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Formats an arrow support as `(0,1) (1,1)`.
pub fn support_list(pairs: &[[usize; 2]]) -> String {
    pairs
        .iter()
        .map(|[k, f]| format!("({k},{f})"))
        .collect::<Vec<String>>()
        .join(" ")
}
