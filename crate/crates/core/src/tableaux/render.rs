//! LaTeX and SVG pictures of a tableau.

use std::fmt::Write;

use super::{row_name, QueueTableau};

/// A standalone LaTeX document with the tableau as a tabular, top row first.
pub fn render_latex(tab: &QueueTableau) -> String {
    let cols = tab.n.max(1);
    let mut out = String::new();
    out.push_str("\\documentclass{standalone}\n\\begin{document}\n");
    let _ = writeln!(out, "\\begin{{tabular}}{{r|{}}}", "c".repeat(cols));
    for k in (0..tab.n_rows()).rev() {
        let cells: Vec<String> = (0..tab.n)
            .map(|i| match tab.get(i, k) {
                Some(v) if v < 0 => format!("$\\overline{{{}}}$", -v),
                Some(v) => v.to_string(),
                None => String::new(),
            })
            .collect();
        let label = row_name(k).replace('\'', "$'$");
        let _ = writeln!(out, "{label} & {} \\\\", cells.join(" & "));
        if k % 2 == 0 {
            out.push_str("\\hline\n");
        }
    }
    out.push_str("\\end{tabular}\n\\end{document}\n");
    out
}

/// A self-contained SVG drawing of the doubled diagram; negative entries
/// are bold red with a bar.
pub fn render_svg(tab: &QueueTableau) -> String {
    const CELL: usize = 32;
    let rows = tab.n_rows();
    let width = CELL * (tab.n.max(1) + 1);
    let height = CELL * (rows.max(1) + 1);
    let mut out = String::new();
    let _ = writeln!(out, "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" font-family=\"sans-serif\" font-size=\"14\">");
    for k in 0..rows {
        let y = height - CELL * (k + 2) + CELL / 2;
        let _ = writeln!(out, "<text x=\"4\" y=\"{}\">{}</text>", y + CELL / 2 + 5, row_name(k));
        for i in 0..tab.n {
            let Some(v) = tab.get(i, k) else { continue };
            let x = CELL * (i + 1);
            let fill = if k % 2 == 1 { "#eef" } else { "#fff" };
            let _ = writeln!(out, "<rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"{fill}\" stroke=\"black\"/>");
            let style = if v < 0 { " fill=\"#b00\" font-weight=\"bold\" text-decoration=\"overline\"" } else { "" };
            let _ = writeln!(out, "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\"{style}>{}</text>", x + CELL / 2, y + CELL / 2 + 5, v.abs());
        }
    }
    out.push_str("</svg>\n");
    out
}
