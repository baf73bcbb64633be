use std::fmt::Write;
use std::str::FromStr;

use crate::board::{BoardSpec, Square};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::placements::{ChainEdge, ChainGraph, ChainVertex};
use crate::views::GridGraph;

use super::document::Document;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Dot,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(Format::Ascii),
            "dot" => Ok(Format::Dot),
            _ => Err(Error::Domain(format!("unknown format \"{s}\""))),
        }
    }
}

/// Text picture of a document. Boards, placements, matrices and triangles
/// draw as ascii; graphs and the objects living on them as dot. Other
/// pairings are [`Error::Unsupported`].
pub fn render(doc: &Document, format: Format) -> Result<String> {
    match (format, doc) {
        (Format::Ascii, Document::Placement(p)) => Ok(ascii_boards(p.board(), p.squares())),
        (Format::Ascii, Document::Permutation(p)) => Ok(ascii_boards(p.board(), p.to_placement().squares())),
        (Format::Ascii, Document::OneLine(o)) => {
            let p = o.to_permutation()?.to_placement();
            Ok(ascii_boards(p.board(), p.squares()))
        }
        (Format::Ascii, Document::Asm(a)) => Ok(ascii_matrices(a.matrices())),
        (Format::Ascii, Document::PlainAsm(a)) => Ok(ascii_matrices(std::slice::from_ref(a.matrix()))),
        (Format::Ascii, Document::Triangles(t)) => Ok(ascii_triangles(t.triangles())),
        (Format::Dot, Document::Matching(m)) => Ok(chain_dot(&m.graph(), m.edges().iter())),
        (Format::Dot, Document::Ice(c)) => {
            let g = c.graph();
            let mut out = dot_header("digraph", "ice", &g);
            for (e, &h) in c.heads() {
                let (a, b) = g.endpoints(e);
                let t = if h == a { b } else { a };
                writeln!(out, "  \"{t}\" -> \"{h}\" [id=\"{e}\"];").unwrap();
            }
            out.push_str("}\n");
            Ok(out)
        }
        (Format::Dot, Document::Fpl(f)) => {
            let g = f.graph();
            let mut out = dot_header("graph", "fpl", &g);
            for e in f.edges() {
                let (a, b) = g.endpoints(e);
                writeln!(out, "  \"{a}\" -- \"{b}\" [id=\"{e}\"];").unwrap();
            }
            out.push_str("}\n");
            Ok(out)
        }
        (format, doc) => Err(Error::Unsupported(format!(
            "{} documents have no {} rendering",
            doc.family(),
            match format {
                Format::Ascii => "ascii",
                Format::Dot => "dot",
            }
        ))),
    }
}

/// The full chain graph, parallel edges and loops included.
pub fn render_chain_graph(g: &ChainGraph) -> String {
    chain_dot(g, g.edges().iter())
}

pub fn render_grid_graph(g: &GridGraph) -> String {
    let mut out = dot_header("graph", "grid", g);
    for e in g.edges() {
        let (a, b) = g.endpoints(e);
        writeln!(out, "  \"{a}\" -- \"{b}\" [id=\"{e}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}

fn chain_vertex(v: ChainVertex) -> String {
    format!("{}:{}", v.row, v.index)
}

fn chain_dot<'a>(g: &ChainGraph, edges: impl Iterator<Item = &'a ChainEdge>) -> String {
    let mut out = String::from("graph chain {\n");
    for &v in g.vertices() {
        writeln!(out, "  \"{}\";", chain_vertex(v)).unwrap();
    }
    for e in edges {
        let (a, b) = e.endpoints(g.board());
        writeln!(out, "  \"{}\" -- \"{}\" [id=\"{e}\"];", chain_vertex(a), chain_vertex(b)).unwrap();
    }
    out.push_str("}\n");
    out
}

fn dot_header(kind: &str, name: &str, g: &GridGraph) -> String {
    let mut out = format!("{kind} {name} {{\n");
    for v in g.vertices() {
        let attr = if v.is_interior() { "" } else { " [shape=point]" };
        writeln!(out, "  \"{v}\"{attr};").unwrap();
    }
    out
}

/// One character per square, `R` for a rook; boards side by side.
fn ascii_boards(board: &BoardSpec, squares: &[Square]) -> String {
    let n = board.n();
    let mut grid = vec![vec![vec!['.'; n]; n]; board.k()];
    for s in squares {
        grid[s.board - 1][s.row - 1][s.col - 1] = 'R';
    }
    let mut out = String::new();
    for i in 0..n {
        let line: Vec<String> = grid.iter().map(|b| b[i].iter().collect()).collect();
        out.push_str(&line.join("  "));
        out.push('\n');
    }
    out
}

fn ascii_matrices(ms: &[Matrix]) -> String {
    let n = ms.first().map_or(0, Matrix::size);
    let mut out = String::new();
    for i in 0..n {
        let line: Vec<String> = ms
            .iter()
            .map(|m| m.row(i).iter().map(|x| format!("{x:>2}")).collect::<Vec<_>>().join(" "))
            .collect();
        out.push_str(&line.join(" | "));
        out.push('\n');
    }
    out
}

/// Each triangle centred on its bottom row, triangles separated by a
/// blank line.
fn ascii_triangles(ts: &[Vec<Vec<usize>>]) -> String {
    let mut out = String::new();
    for (l, t) in ts.iter().enumerate() {
        if l > 0 {
            out.push('\n');
        }
        let w = t.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
        // odd cell width keeps the half-cell indent whole
        let w = w | 1;
        for (m, row) in t.iter().enumerate() {
            let pad = " ".repeat((t.len() - 1 - m) * (w + 1) / 2);
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>w$}")).collect();
            out.push_str(&format!("{pad}{}\n", cells.join(" ")));
        }
    }
    out
}
