//! ASCII and SVG pictures of cup diagrams on the actual numberline.

use std::collections::BTreeSet;
use std::fmt::Write;

use superdim::weight::decompress;
use superdim::{compact, CupDiagram, Label, Result, SuperWeight};

/// Cups with their endpoints on the actual line and their height, i.e. one
/// more than the tallest cup nested inside.
struct Layout {
    labels: Vec<(i64, Label)>,
    cups: Vec<(i64, i64, usize)>,
    sectors: Vec<(i64, i64)>,
    segments: Vec<(i64, i64)>,
}

fn layout(w: &SuperWeight) -> Result<Layout> {
    let c = compact(w)?;
    let lab = w.labeling();
    let crosses: BTreeSet<i64> = c.crosses().iter().copied().collect();
    let cups = CupDiagram::build(c.vees());
    let actual = |(a, b): (i64, i64)| (decompress(a, &crosses), decompress(b, &crosses));

    let mut by_width = cups.cups.clone();
    by_width.sort_by_key(|&(a, b)| b - a);
    let mut heights: Vec<((i64, i64), usize)> = Vec::new();
    for &(a, b) in &by_width {
        let inner = heights
            .iter()
            .filter(|((x, y), _)| a < *x && *y < b)
            .map(|(_, h)| *h)
            .max()
            .unwrap_or(0);
        heights.push(((a, b), inner + 1));
    }
    heights.sort();

    let (mut lo, mut hi) = lab.window();
    let placed: Vec<(i64, i64, usize)> = heights
        .into_iter()
        .map(|(span, h)| {
            let (a, b) = actual(span);
            (a, b, h)
        })
        .collect();
    for &(a, b, _) in &placed {
        lo = lo.min(a - 1);
        hi = hi.max(b + 1);
    }
    Ok(Layout {
        labels: (lo..=hi).map(|x| (x, lab.label_at(x))).collect(),
        cups: placed,
        sectors: cups.sectors.iter().map(|&s| actual(s)).collect(),
        segments: cups.segments.iter().map(|&s| actual(s)).collect(),
    })
}

fn ascii_symbol(l: Label) -> char {
    match l {
        Label::Vee => 'v',
        Label::Up => '^',
        Label::Cross => 'x',
        Label::Circle => 'o',
    }
}

fn spans(xs: &[(i64, i64)]) -> String {
    let parts: Vec<String> = xs.iter().map(|(a, b)| format!("[{a},{b}]")).collect();
    parts.join(" ")
}

const CELL: usize = 3;

pub fn ascii(w: &SuperWeight) -> Result<String> {
    let l = layout(w)?;
    let lo = l.labels.first().map_or(0, |p| p.0);
    let col = |x: i64| (x - lo) as usize * CELL + 1;
    let width = l.labels.len() * CELL;
    let mut out = String::new();

    let mut ruler = String::new();
    let mut marks = String::new();
    for &(x, label) in &l.labels {
        let _ = write!(ruler, "{:^CELL$}", ascii_symbol(label));
        let tick = if x == 0 { "0".to_string() } else if x % 5 == 0 { x.to_string() } else { ".".into() };
        let _ = write!(marks, "{tick:^CELL$}");
    }
    out.push_str(marks.trim_end());
    out.push('\n');
    out.push_str(ruler.trim_end());
    out.push('\n');

    let rows = l.cups.iter().map(|c| c.2).max().unwrap_or(0);
    for row in 1..=rows {
        let mut line = vec![' '; width];
        for &(a, b, h) in &l.cups {
            if h > row {
                line[col(a)] = '|';
                line[col(b)] = '|';
            } else if h == row {
                line[col(a)] = '\\';
                line[col(b)] = '/';
                for cell in line.iter_mut().take(col(b)).skip(col(a) + 1) {
                    *cell = '_';
                }
            }
        }
        let s: String = line.into_iter().collect();
        out.push_str(s.trim_end());
        out.push('\n');
    }
    let _ = writeln!(out, "sectors: {}", spans(&l.sectors));
    let _ = writeln!(out, "segments: {}", spans(&l.segments));
    Ok(out)
}

pub fn svg(w: &SuperWeight) -> Result<String> {
    let l = layout(w)?;
    let step = 30i64;
    let lo = l.labels.first().map_or(0, |p| p.0);
    let x_of = |x: i64| (x - lo) * step + step;
    let base = 40i64;
    let rows = l.cups.iter().map(|c| c.2).max().unwrap_or(0) as i64;
    let width = (l.labels.len() as i64 + 1) * step;
    let height = base + rows * 20 + 60;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="monospace" font-size="14">"#
    );
    let _ = writeln!(
        s,
        r#"  <line x1="{}" y1="{base}" x2="{}" y2="{base}" stroke="black"/>"#,
        step / 2,
        width - step / 2
    );
    for &(x, label) in &l.labels {
        let _ = writeln!(
            s,
            r#"  <text x="{}" y="{}" text-anchor="middle">{}</text>"#,
            x_of(x),
            base - 8,
            label.symbol()
        );
        let _ = writeln!(
            s,
            r#"  <text x="{}" y="{}" text-anchor="middle" font-size="9">{x}</text>"#,
            x_of(x),
            base - 26
        );
    }
    for &(a, b, h) in &l.cups {
        let (xa, xb) = (x_of(a), x_of(b));
        let _ = writeln!(
            s,
            r#"  <path d="M {xa} {base} A {} {} 0 0 0 {xb} {base}" fill="none" stroke="black"/>"#,
            (xb - xa) / 2,
            h * 20
        );
    }
    let note = format!("sectors: {}   segments: {}", spans(&l.sectors), spans(&l.segments));
    let _ = writeln!(
        s,
        r#"  <text x="{}" y="{}">{note}</text>"#,
        step / 2,
        height - 12
    );
    s.push_str("</svg>\n");
    Ok(s)
}
