//! Input documents, reports and their text and JSON renderings.

mod input;
mod report;
mod selfcheck;

pub use input::{
    load_spec, parse_document, parse_spec, spec_from_document, GlobalInput, InputDocument,
    SingularityEntry, Spec,
};
pub use report::{
    analyze, compare, render_comparison, render_report, ReportDocument, SpectrumEntry,
};
pub use selfcheck::{render_selfcheck, selfcheck, CheckResult, CheckStatus, SelfCheckReport};

/// Left-aligned text table with one space of padding between columns.
pub(crate) fn text_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        format!("  {}\n", padded.join("  ").trim_end())
    };
    let mut out = line(headers.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligned_columns() {
        let t = text_table(
            &["a", "bb"],
            &[
                vec!["xyz".into(), "1".into()],
                vec!["p".into(), "22".into()],
            ],
        );
        assert_eq!(t, "  a    bb\n  xyz  1\n  p    22\n");
    }
}
