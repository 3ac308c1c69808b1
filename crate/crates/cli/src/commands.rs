use serde::Serialize;
use specht_core::characters::{ch_q_simple, ch_q_specht};
use specht_core::decomposition::{adjustment_matrix, decomp_matrix, decomp_matrix_combinatorial};
use specht_core::paths::render_ascii;
use specht_core::regularisation::{in_theorem_scope, r_e, reg_prime_path};
use specht_core::tableaux::{column_word_string, enumerate_std, enumerate_std_with_residue};
use specht_core::verification::{run_suite, Grid, Suite};
use specht_core::{
    AdjustmentMatrix, Character, Error, GradedDecompMatrix, Partition, Path2, ResidueSequence,
    StandardTableau,
};

use crate::{
    CharKind, CharacterArgs, Cli, Command, DecompArgs, Failure, Format, Output, RegulariseArgs,
    TableauxArgs, VerifyArgs, EXIT_USAGE,
};

pub fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Tableaux(args) => tableaux(args, cli.format),
        Command::Regularise(args) => regularise(args, cli.format),
        Command::Decomp(args) => decomp(args, cli.format),
        Command::Character(args) => character(args, cli.format),
        Command::Verify(args) => verify(args, cli.format),
    }
}

fn ok(text: String) -> Result<Output, Failure> {
    Ok(Output { text, passed: true })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    for row in rows {
        out.push_str(&line(row.clone()));
    }
    out
}

fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",") + "\n";
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| csv_field(c)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn parse_shape(s: &str) -> Result<Partition, Failure> {
    s.parse::<Partition>().map_err(Failure::from)
}

fn column_word(t: &StandardTableau) -> String {
    let w = t.column_word();
    if t.shape().num_columns() <= 9 {
        column_word_string(&w)
    } else {
        w.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(".")
    }
}

#[derive(Serialize)]
struct TableauRecord {
    rows: Vec<Vec<usize>>,
    column_word: String,
    degree: i64,
    residues: String,
}

#[derive(Serialize)]
struct TableauxOut<'a> {
    shape: String,
    e: usize,
    residues: Option<String>,
    count: usize,
    tableaux: &'a [TableauRecord],
}

fn tableaux(args: &TableauxArgs, format: Format) -> Result<Output, Failure> {
    let shape = parse_shape(&args.shape)?;
    if args.e < 2 {
        return Err(Error::InvalidParameter(format!("e must be at least 2, got {}", args.e)).into());
    }
    let list: Vec<StandardTableau> = match &args.residues {
        Some(r) => {
            let i = ResidueSequence::parse(args.e, r)?;
            if i.len() != shape.size() {
                return Err(Error::InvalidParameter(format!(
                    "residue sequence has length {}, shape has size {}",
                    i.len(),
                    shape.size()
                ))
                .into());
            }
            enumerate_std_with_residue(&shape, &i)
        }
        None => enumerate_std(&shape).collect(),
    };
    let records: Vec<TableauRecord> = list
        .iter()
        .map(|t| TableauRecord {
            rows: t.rows(),
            column_word: column_word(t),
            degree: t.degree(args.e),
            residues: t.residue_sequence(args.e).to_string(),
        })
        .collect();
    let header = ["index", "rows", "column_word", "degree", "residues"];
    let rows: Vec<Vec<String>> = list
        .iter()
        .zip(&records)
        .enumerate()
        .map(|(k, (t, r))| {
            vec![
                (k + 1).to_string(),
                t.to_string(),
                r.column_word.clone(),
                r.degree.to_string(),
                r.residues.clone(),
            ]
        })
        .collect();
    ok(match format {
        Format::Json => to_json(&TableauxOut {
            shape: shape.to_string(),
            e: args.e,
            residues: args.residues.clone(),
            count: records.len(),
            tableaux: &records,
        }),
        Format::Csv => csv(&header, &rows),
        Format::Pretty => format!(
            "{} standard tableaux of shape {shape}, e = {}\n{}",
            records.len(),
            args.e,
            table(&header, &rows)
        ),
    })
}

#[derive(Serialize)]
struct PathInfo {
    step_word: String,
    shape: String,
    endpoint: i64,
    degree: i64,
    residues: String,
    diagram: Vec<String>,
}

impl PathInfo {
    fn new(pi: &Path2, e: usize, p: usize) -> Self {
        Self {
            step_word: pi.step_word(),
            shape: pi.shape().to_string(),
            endpoint: pi.endpoint(),
            degree: pi.degree(e),
            residues: pi.residue_sequence(e).to_string(),
            diagram: render_ascii(pi, e, p).lines().map(str::to_string).collect(),
        }
    }
}

#[derive(Serialize)]
struct StageInfo {
    z: u32,
    modulus: usize,
    wall: usize,
    position: usize,
    path: PathInfo,
}

#[derive(Serialize)]
struct Trace {
    e: usize,
    p: usize,
    in_theorem_scope: bool,
    input: PathInfo,
    r_e: u8,
    stages: Vec<StageInfo>,
    z: Vec<u32>,
    w: Vec<usize>,
    output: PathInfo,
    reg_prime: PathInfo,
}

fn regularise(args: &RegulariseArgs, format: Format) -> Result<Output, Failure> {
    let (e, p) = (args.e, args.p);
    let pi = match (&args.word, &args.runs) {
        (Some(w), _) => Path2::from_step_word(w)?,
        (None, Some(r)) => Path2::from_runs(r)?,
        (None, None) => {
            return Err(Failure {
                code: EXIT_USAGE,
                message: "one of --word or --runs is required".into(),
            })
        }
    };
    let rp = reg_prime_path(&pi, e, p)?;
    let trace = Trace {
        e,
        p,
        in_theorem_scope: in_theorem_scope(e, p),
        input: PathInfo::new(&pi, e, p),
        r_e: r_e(&pi, e),
        stages: rp
            .chain
            .stages
            .iter()
            .map(|s| StageInfo {
                z: s.z,
                modulus: s.modulus,
                wall: s.wall,
                position: s.position,
                path: PathInfo::new(&s.path, e, p),
            })
            .collect(),
        z: rp.chain.zset(),
        w: rp.w.0.clone(),
        output: PathInfo::new(rp.chain.output(), e, p),
        reg_prime: PathInfo::new(&rp.output, e, p),
    };
    let header = ["label", "z", "modulus", "wall", "position", "step_word", "shape", "degree"];
    let row = |label: String, s: Option<&StageInfo>, info: &PathInfo| {
        let opt = |v: Option<String>| v.unwrap_or_default();
        vec![
            label,
            opt(s.map(|s| s.z.to_string())),
            opt(s.map(|s| s.modulus.to_string())),
            opt(s.map(|s| s.wall.to_string())),
            opt(s.map(|s| s.position.to_string())),
            info.step_word.clone(),
            info.shape.clone(),
            info.degree.to_string(),
        ]
    };
    let mut rows = vec![row("input".into(), None, &trace.input)];
    for (k, s) in trace.stages.iter().enumerate() {
        rows.push(row(format!("stage{}", k + 1), Some(s), &s.path));
    }
    rows.push(row("reg_prime".into(), None, &trace.reg_prime));
    ok(match format {
        Format::Json => to_json(&trace),
        Format::Csv => csv(&header, &rows),
        Format::Pretty => {
            let mut out = format!(
                "e = {e}, p = {p}{}\nr_e = {}, Z = {:?}, w = {:?}\n",
                if trace.in_theorem_scope { "" } else { " (outside the certified range)" },
                trace.r_e,
                trace.z,
                trace.w
            );
            out.push_str(&table(&header, &rows));
            out.push_str("\ninput\n");
            out.push_str(&trace.input.diagram.join("\n"));
            out.push_str("\n\nreg'\n");
            out.push_str(&trace.reg_prime.diagram.join("\n"));
            out.push('\n');
            out
        }
    })
}

#[derive(Serialize)]
struct DecompOut<'a> {
    decomposition: &'a GradedDecompMatrix,
    #[serde(skip_serializing_if = "Option::is_none")]
    adjustment: Option<&'a AdjustmentMatrix>,
}

fn decomp(args: &DecompArgs, format: Format) -> Result<Output, Failure> {
    let (n, e, p) = (args.n, args.e, args.p);
    let d = if args.combinatorial {
        decomp_matrix_combinatorial(n, e, p)?
    } else {
        decomp_matrix(n, e, p)?
    };
    if d.extrapolated {
        eprintln!("specht: (e, p) = ({e}, {p}) is outside the certified range; output is extrapolated");
    }
    let a = if args.adjustment {
        Some(adjustment_matrix(n, e, p)?)
    } else {
        None
    };
    ok(match format {
        Format::Json => to_json(&DecompOut {
            decomposition: &d,
            adjustment: a.as_ref(),
        }),
        Format::Csv => {
            let mut out = d.to_csv();
            if let Some(a) = &a {
                out.push('\n');
                out.push_str(&a.to_csv());
            }
            out
        }
        Format::Pretty => {
            let mut out = format!("D^{p}(q), n = {n}, e = {e}\n{}", d.to_pretty());
            if let Some(a) = &a {
                out.push_str(&format!("\nadjustment matrix, p = {p}\n{}", a.to_pretty()));
            }
            out
        }
    })
}

#[derive(Serialize)]
struct CharacterOut<'a> {
    shape: String,
    kind: &'static str,
    e: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<usize>,
    mass: i64,
    character: &'a Character,
}

fn character(args: &CharacterArgs, format: Format) -> Result<Output, Failure> {
    let shape = parse_shape(&args.shape)?;
    let ch = match args.kind {
        CharKind::Specht => ch_q_specht(&shape, args.e)?,
        CharKind::Simple => ch_q_simple(&shape, args.e, args.p)?,
    };
    let kind = match args.kind {
        CharKind::Specht => "specht",
        CharKind::Simple => "simple",
    };
    let rows: Vec<Vec<String>> = ch.iter().map(|(i, f)| vec![i.to_string(), f.to_string()]).collect();
    let header = ["residues", "coefficient"];
    ok(match format {
        Format::Json => to_json(&CharacterOut {
            shape: shape.to_string(),
            kind,
            e: args.e,
            p: (args.kind == CharKind::Simple).then_some(args.p),
            mass: ch.mass(),
            character: &ch,
        }),
        Format::Csv => csv(&header, &rows),
        Format::Pretty => format!(
            "ch_q of the {kind} module for {shape}, e = {}: {} residue sequences, dimension {}\n{}",
            args.e,
            ch.len(),
            ch.mass(),
            table(&header, &rows)
        ),
    })
}

fn verify(args: &VerifyArgs, format: Format) -> Result<Output, Failure> {
    let suite: Suite = args.suite.parse()?;
    let grid = if args.e.is_empty() && args.p.is_empty() {
        Grid::standard(args.max_n)
    } else {
        let es: Vec<usize> = if args.e.is_empty() { (2..=6).collect() } else { args.e.clone() };
        let ps: Vec<usize> = if args.p.is_empty() { vec![0] } else { args.p.clone() };
        Grid::product(args.max_n, &es, &ps)
    };
    let rep = run_suite(suite, &grid)?;
    let header = ["case", "status", "checked"];
    let rows: Vec<Vec<String>> = rep
        .cases
        .iter()
        .map(|c| {
            vec![
                c.case.clone(),
                if c.passed { "pass" } else { "FAIL" }.to_string(),
                c.checked.to_string(),
            ]
        })
        .collect();
    let text = match format {
        Format::Json => to_json(&rep),
        Format::Csv => csv(&header, &rows),
        Format::Pretty => {
            let mut out = table(&header, &rows);
            for s in &rep.skipped {
                out.push_str(&format!("skipped: {s}\n"));
            }
            if !rep.exploratory.is_empty() {
                let bad = rep.exploratory.iter().filter(|c| !c.passed).count();
                out.push_str(&format!(
                    "exploratory (non-gating): {} cases, {bad} failing\n",
                    rep.exploratory.len()
                ));
            }
            if let Some(cx) = &rep.first_counterexample {
                out.push_str(&format!("first counterexample: {cx}\n"));
            }
            out.push_str(&format!(
                "suite {suite}: {} ({} cases, {} objects checked)\n",
                if rep.passed { "PASS" } else { "FAIL" },
                rep.cases.len(),
                rep.checked()
            ));
            out
        }
    };
    Ok(Output {
        text,
        passed: rep.passed,
    })
}
