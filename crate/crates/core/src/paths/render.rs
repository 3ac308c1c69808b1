use super::path2::{on_wall, Path2};

/// Wall character for `H_m`: `:` when `p ∤ m` (or `p = 0`), `|` when
/// `p` exactly divides `m`, `#` when `p^2 | m`.
fn wall_char(m: usize, p: usize) -> char {
    if p < 2 {
        return ':';
    }
    let mut v = 0;
    let mut m = m;
    while m.is_multiple_of(p) && v < 2 {
        m /= p;
        v += 1;
    }
    match v {
        0 => ':',
        1 => '|',
        _ => '#',
    }
}

/// ASCII wall diagram: one row per point `π(a)`, heights running left to
/// right, walls drawn at `me - 1`, the point marked `o`. Each row ends with
/// the position, the height and the degree of the step into that point.
pub fn render_ascii(path: &Path2, e: usize, p: usize) -> String {
    let width = (path.max_height().max(e as i64 - 1) + 2) as usize;
    let mut out = String::new();
    for (a, &h) in path.heights().iter().enumerate() {
        let mut row: Vec<char> = (0..width)
            .map(|x| {
                if on_wall(x as i64, e) {
                    wall_char((x + 1) / e, p)
                } else {
                    ' '
                }
            })
            .collect();
        row[h as usize] = 'o';
        let line: String = row.into_iter().collect();
        let mark = if a == 0 {
            String::new()
        } else {
            match path.step_degree(a, e) {
                1 => "+1".into(),
                -1 => "-1".into(),
                _ => String::new(),
            }
        };
        out.push_str(&format!("{a:>3} {h:>3} {} {mark}", line.trim_end_matches(' ')));
        out.push('\n');
    }
    out.lines()
        .map(str::trim_end)
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}
