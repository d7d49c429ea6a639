//! Digital-path drawings: `0` is a unit step right, `1` a unit step up.

use std::fmt::Write as _;

use christoffel_words::christoffel::{lower_christoffel, upper_christoffel};
use christoffel_words::{BinaryWord, WordError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Debug, Clone)]
pub struct RenderSpec {
    pub word: BinaryWord,
    pub show_bar: bool,
    pub show_segment: bool,
    pub format: RenderFormat,
    pub cell_size: u32,
}

/// Lattice points visited by the path of `w`, starting at the origin.
pub fn path_points(w: &BinaryWord) -> Vec<(u64, u64)> {
    let mut points = Vec::with_capacity(w.len() + 1);
    let (mut x, mut y) = (0, 0);
    points.push((x, y));
    for letter in w.letters() {
        if letter == 0 {
            x += 1;
        } else {
            y += 1;
        }
        points.push((x, y));
    }
    points
}

pub fn render(spec: &RenderSpec) -> Result<String, WordError> {
    if spec.word.is_empty() {
        return Err(WordError::EmptyWord);
    }
    if spec.cell_size == 0 {
        return Err(WordError::Precondition("cell size must be at least 1".into()));
    }
    let p = spec.word.parikh();
    let bar = if spec.show_bar {
        if p.zeros == 0 || p.ones == 0 {
            return Err(WordError::DegenerateBar { a: p.zeros, b: p.ones });
        }
        Some((lower_christoffel(p.zeros, p.ones)?, upper_christoffel(p.zeros, p.ones)?))
    } else {
        None
    };
    Ok(match spec.format {
        RenderFormat::Ascii => ascii(spec, bar.as_ref()),
        RenderFormat::Svg => svg(spec, bar.as_ref()),
    })
}

/// Character grid with lattice points on even rows and columns. The path is
/// drawn with `o`, `-` and `|`, the bar boundaries with `+`, `.` and `:`,
/// and the segment with `*` wherever nothing else was drawn.
fn ascii(spec: &RenderSpec, bar: Option<&(BinaryWord, BinaryWord)>) -> String {
    let p = spec.word.parikh();
    let (a, b) = (p.zeros as usize, p.ones as usize);
    let (width, height) = (2 * a + 1, 2 * b + 1);
    let mut canvas = vec![vec![' '; width]; height];

    let trace = |w: &BinaryWord, point: char, across: char, up: char, canvas: &mut Vec<Vec<char>>| {
        let points = path_points(w);
        for pair in points.windows(2) {
            let (x0, y0) = (pair[0].0 as usize, pair[0].1 as usize);
            let (x1, y1) = (pair[1].0 as usize, pair[1].1 as usize);
            let (cx, cy) = (x0 + x1, y0 + y1);
            canvas[cy][cx] = if y1 == y0 { across } else { up };
        }
        for (x, y) in points {
            canvas[2 * y as usize][2 * x as usize] = point;
        }
    };
    if let Some((lower, upper)) = bar {
        trace(lower, '+', '.', ':', &mut canvas);
        trace(upper, '+', '.', ':', &mut canvas);
    }
    trace(&spec.word, 'o', '-', '|', &mut canvas);

    if spec.show_segment {
        let mut mark = |cx: usize, cy: usize| {
            if canvas[cy][cx] == ' ' {
                canvas[cy][cx] = '*';
            }
        };
        if a == 0 {
            (0..height).for_each(|cy| mark(0, cy));
        } else if b == 0 {
            (0..width).for_each(|cx| mark(cx, 0));
        } else {
            for cx in 0..width {
                mark(cx, (2 * cx * b + a) / (2 * a));
            }
            for cy in 0..height {
                mark((2 * cy * a + b) / (2 * b), cy);
            }
        }
    }

    let mut out = String::new();
    for row in canvas.iter().rev() {
        let line: String = row.iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn polyline_points(points: &[(u64, u64)], cell: u64, top: u64) -> String {
    let mut out = String::new();
    for (i, (x, y)) in points.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{},{}", cell + x * cell, cell + (top - y) * cell);
    }
    out
}

/// Standalone SVG with one user unit per pixel and `y` growing upward.
fn svg(spec: &RenderSpec, bar: Option<&(BinaryWord, BinaryWord)>) -> String {
    let p = spec.word.parikh();
    let (a, b) = (p.zeros, p.ones);
    let cell = u64::from(spec.cell_size);
    let (width, height) = ((a + 2) * cell, (b + 2) * cell);
    let px = |x: u64| cell + x * cell;
    let py = |y: u64| cell + (b - y) * cell;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(out, "  <title>{}</title>", spec.word);
    out.push_str("  <g id=\"grid\" stroke=\"#d0d0d0\" stroke-width=\"1\">\n");
    for x in 0..=a {
        let _ = writeln!(
            out,
            "    <line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>",
            px(x),
            py(b),
            py(0)
        );
    }
    for y in 0..=b {
        let _ = writeln!(
            out,
            "    <line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\"/>",
            px(0),
            py(y),
            px(a)
        );
    }
    out.push_str("  </g>\n");
    if let Some((lower, upper)) = bar {
        for (id, w) in [("lower", lower), ("upper", upper)] {
            let _ = writeln!(
                out,
                "  <polyline id=\"{id}\" fill=\"none\" stroke=\"#4a7fc1\" stroke-width=\"2\" stroke-dasharray=\"4 3\" points=\"{}\"/>",
                polyline_points(&path_points(w), cell, b)
            );
        }
    }
    if spec.show_segment {
        let _ = writeln!(
            out,
            "  <line id=\"segment\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#c14a4a\" stroke-width=\"1.5\"/>",
            px(0),
            py(0),
            px(a),
            py(b)
        );
    }
    let _ = writeln!(
        out,
        "  <polyline id=\"path\" fill=\"none\" stroke=\"#000000\" stroke-width=\"3\" points=\"{}\"/>",
        polyline_points(&path_points(&spec.word), cell, b)
    );
    out.push_str("</svg>\n");
    out
}
