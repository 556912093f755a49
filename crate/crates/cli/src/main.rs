mod golden;

use std::fmt::Write as _;
use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gfan_core::corpus::{random_skew_symmetrizable, rng};
use gfan_core::fan::{DEFAULT_DEPTH, DEFAULT_MAX_CONES};
use gfan_core::io::parse_matrix;
use gfan_core::rank2::{rank2_word, slope};
use gfan_core::{
    fan_type, g_sequence, lifted_sequences, limit_rays, limit_vectors, pair_asymptotics, rank2_matrices,
    render_svg, vertex_type, Direction, Error, ExchangeMatrix, ExploreOptions, Fan, QuadraticNumber,
    RenderOptions, Seed, SeedReport,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "gfan", version, about = "Exact G-fan mutation, classification, exploration and rendering")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Args)]
struct Output {
    /// Write the result here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct Caps {
    #[arg(long, default_value_t = DEFAULT_DEPTH)]
    depth: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_CONES)]
    max_cones: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Vertex types, fan type, Markov constant and limit rays of a rank-3 matrix.
    Classify {
        /// Matrix document `{"n": 3, "b": [[..], ..]}`, or `-` for stdin.
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Breadth-first G-fan exploration; writes the fan document.
    Explore {
        input: PathBuf,
        #[command(flatten)]
        caps: Caps,
        #[command(flatten)]
        output: Output,
    },
    /// SVG picture of a fan, from a fan document or a matrix.
    Render {
        input: PathBuf,
        #[command(flatten)]
        caps: Caps,
        #[command(flatten)]
        output: Output,
        /// Also write the id-to-cone map here.
        #[arg(long)]
        sidecar: Option<PathBuf>,
        /// Degrees between samples along arcs.
        #[arg(long, default_value_t = 2.0)]
        arc_resolution: f64,
        #[arg(long, default_value_t = -0.95, allow_hyphen_values = true)]
        clip_cosine: f64,
        #[arg(long)]
        no_frontier: bool,
        #[arg(long)]
        label_normals: bool,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 800)]
        height: u32,
    },
    /// g-vector tables and limit slopes of `[[0, -b], [a, 0]]`.
    Rank2 {
        #[arg(long, allow_hyphen_values = true)]
        a: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        b: BigInt,
        #[arg(long, default_value_t = 7)]
        steps: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Limit rays of alternating mutations in the pair `(i, j)`, any rank.
    Pair {
        input: PathBuf,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Seed invariants of a matrix to a depth, or the reference suite when
    /// no input is given.
    Verify {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 5)]
        depth: usize,
        /// Seed of the randomized corpus in the reference suite.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
}

/// The text and JSON renderings of a result, plus whether every requested
/// check passed.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_matrix(path: &Path) -> Result<ExchangeMatrix> {
    Ok(parse_matrix(&read_input(path)?)?)
}

fn write_output(out: Option<&Path>, content: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, content).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn emit(report: &Report, output: &Output) -> Result<()> {
    let body = match output.format.unwrap_or(Format::Text) {
        Format::Text => report.text.clone(),
        Format::Json => serde_json::to_string_pretty(&report.json)? + "\n",
        Format::Svg => bail!("svg output is only available for render"),
    };
    write_output(output.out.as_deref(), &body)
}

fn qn_json(x: &QuadraticNumber) -> Value {
    json!({"exact": x.to_string(), "approx": x.to_f64()})
}

fn ray_text(v: &[QuadraticNumber]) -> String {
    let exact: Vec<String> = v.iter().map(ToString::to_string).collect();
    let approx: Vec<String> = v.iter().map(|x| format!("{:.6}", x.to_f64())).collect();
    format!("({})  ~ ({})", exact.join(", "), approx.join(", "))
}

fn pair_text(g: &[BigInt]) -> String {
    let parts: Vec<String> = g.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn classify(b: &ExchangeMatrix) -> Result<Report> {
    if b.rank() != 3 {
        return Err(Error::RankMismatch { expected: 3, found: b.rank() }.into());
    }
    let mut text = String::new();
    let mut vertices = Vec::new();
    for i in 1..=3 {
        match vertex_type(b, i) {
            Ok(r) => {
                let (v, vp) = limit_rays(b, i)?;
                let (c0, d0) = r.c0_d0();
                let band = r
                    .band_index
                    .map(|n| format!(", N = {n}{}", if r.boundary_equality { " (boundary)" } else { "" }))
                    .unwrap_or_default();
                writeln!(
                    text,
                    "v{i}: type {}{band}  (a, b) = ({}, {})  (c0, d0) = ({c0}, {d0})  pair {:?}{}",
                    r.subtype().map_or(r.tag.to_string(), |s| subtype_label(s).to_owned()),
                    r.frame.a,
                    r.frame.b,
                    r.frame.pair,
                    if r.swap_applied() { "  swapped" } else { "" }
                )?;
                writeln!(text, "    v~  = {}", ray_text(&v))?;
                writeln!(text, "    v~' = {}", ray_text(&vp))?;
                let mut j = serde_json::to_value(&r)?;
                j["limit_ray"] = Value::Array(v.iter().map(qn_json).collect());
                j["limit_ray_prime"] = Value::Array(vp.iter().map(qn_json).collect());
                vertices.push(j);
            }
            Err(e @ Error::PairNotInfinite { .. }) => {
                writeln!(text, "v{i}: unclassified ({e})")?;
                vertices.push(json!({"vertex": i, "error": e.to_string()}));
            }
            Err(e) => return Err(e.into()),
        }
    }
    let cp = b.cyclic_presentation()?;
    let cyclic = cp.is_cyclic();
    let markov = cyclic.then(|| cp.markov_constant());
    let cluster_cyclic = if cyclic { Some(b.is_cluster_cyclic()?) } else { None };
    writeln!(
        text,
        "p = ({}, {}, {})  p' = ({}, {}, {})  {}",
        cp.p[0],
        cp.p[1],
        cp.p[2],
        cp.p_prime[0],
        cp.p_prime[1],
        cp.p_prime[2],
        if cyclic { "cyclic" } else { "acyclic" }
    )?;
    if let (Some(c), Some(cc)) = (&markov, cluster_cyclic) {
        writeln!(text, "Markov constant C(B) = {c}, cluster-cyclic: {cc}")?;
    }
    let fan = match fan_type(b) {
        Ok(r) => {
            writeln!(
                text,
                "fan type {} case {}{}",
                gfan_core::rank3::triplet_string(&r.triplet),
                r.case_label,
                if r.normalization_swap { " (indices 1, 2 exchanged to make p3 > 0)" } else { "" }
            )?;
            json!({
                "triplet": r.triplet,
                "case_label": r.case_label,
                "markov_constant": r.markov_constant.as_ref().map(gfan_core::io::bigint_value),
                "normalization_swap": r.normalization_swap,
            })
        }
        Err(e @ Error::NotTotallyInfinite) => {
            writeln!(text, "fan type: not available ({e})")?;
            Value::Null
        }
        Err(e) => return Err(e.into()),
    };
    let json = json!({
        "matrix": gfan_core::io::matrix_to_value(b),
        "vertices": vertices,
        "cyclic": cyclic,
        "markov_constant": markov.as_ref().map(gfan_core::io::bigint_value),
        "cluster_cyclic": cluster_cyclic,
        "fan_type": fan,
    });
    Ok(Report { text, json, ok: true })
}

fn subtype_label(s: gfan_core::rank3::Subtype) -> &'static str {
    use gfan_core::rank3::Subtype::*;
    match s {
        T421 => "4-2-1",
        T422 => "4-2-2",
        T431 => "4-3-1",
        T432 => "4-3-2",
    }
}

fn explore_opts(caps: &Caps) -> ExploreOptions {
    ExploreOptions {
        depth: caps.depth,
        max_cones: caps.max_cones,
        ..ExploreOptions::default()
    }
}

fn explore(b: &ExchangeMatrix, caps: &Caps, output: &Output) -> Result<()> {
    let fan = Fan::explore(b, &explore_opts(caps))?;
    let body = match output.format.unwrap_or(Format::Json) {
        Format::Json => fan.save() + "\n",
        Format::Text => {
            let mut s = format!(
                "{} cones, {} adjacencies, {} frontier facets at depth {}\n",
                fan.len(),
                fan.adjacency().len(),
                fan.frontier().len(),
                fan.depth()
            );
            match fan.find_negative_orthant() {
                Some(w) => writeln!(s, "negative orthant reached by {w:?}")?,
                None => writeln!(s, "negative orthant not reached")?,
            }
            s
        }
        Format::Svg => bail!("use the render subcommand for svg output"),
    };
    write_output(output.out.as_deref(), &body)
}

fn load_fan_or_explore(path: &Path, caps: &Caps) -> Result<Fan> {
    let text = read_input(path)?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Error::MalformedDocument(e.to_string()))?;
    if value.get("cones").is_some() {
        Ok(Fan::from_json(&value)?)
    } else {
        let b = gfan_core::io::matrix_from_value(&value)?;
        Ok(Fan::explore(&b, &explore_opts(caps))?)
    }
}

fn rank2(a: &BigInt, b: &BigInt, steps: usize) -> Result<Report> {
    let fwd = g_sequence(Direction::Forward, steps, a, b)?;
    let bwd = g_sequence(Direction::Backward, steps, a, b)?;
    let (v, vp) = limit_vectors(a, b)?;
    let mut text = format!("(a, b) = ({a}, {b})\n  m  g_m            g'_m\n");
    for m in 0..steps {
        writeln!(text, "{:>3}  {:<13} {}", m + 1, pair_text(&fwd[m]), pair_text(&bwd[m]))?;
    }
    writeln!(text, "v  = {}", ray_text(&v))?;
    writeln!(text, "v' = {}", ray_text(&vp))?;
    let slopes = |seq: &[[BigInt; 2]]| -> Vec<Value> {
        seq.iter()
            .map(|g| slope(g).map_or(Value::Null, |r| json!(r.to_string())))
            .collect()
    };
    let json = json!({
        "a": gfan_core::io::bigint_value(a),
        "b": gfan_core::io::bigint_value(b),
        "forward": fwd.iter().map(|g| gfan_core::io::int_vec_value(g)).collect::<Vec<_>>(),
        "backward": bwd.iter().map(|g| gfan_core::io::int_vec_value(g)).collect::<Vec<_>>(),
        "forward_slopes": slopes(&fwd),
        "backward_slopes": slopes(&bwd),
        "v": v.iter().map(qn_json).collect::<Vec<_>>(),
        "v_prime": vp.iter().map(qn_json).collect::<Vec<_>>(),
    });
    Ok(Report { text, json, ok: true })
}

fn pair(b: &ExchangeMatrix, i: usize, j: usize) -> Result<Report> {
    let (v, vp) = pair_asymptotics(b, i, j)?;
    let text = format!("v~  = {}\nv~' = {}\n", ray_text(&v), ray_text(&vp));
    let json = json!({
        "pair": [i, j],
        "limit_ray": v.iter().map(qn_json).collect::<Vec<_>>(),
        "limit_ray_prime": vp.iter().map(qn_json).collect::<Vec<_>>(),
    });
    Ok(Report { text, json, ok: true })
}

/// Tallies of seed checks over every seed within `depth` steps.
#[derive(Default)]
struct Tally {
    seeds: usize,
    failures: [usize; 5],
    first_failure: Option<Vec<usize>>,
}

impl Tally {
    fn add(&mut self, seed: &Seed, report: &SeedReport) {
        self.seeds += 1;
        for (slot, (_, ok)) in self.failures.iter_mut().zip(report.checks()) {
            if !ok {
                *slot += 1;
            }
        }
        if !report.all_pass() && self.first_failure.is_none() {
            self.first_failure = Some(seed.word().to_vec());
        }
    }

    fn ok(&self) -> bool {
        self.failures.iter().all(|&f| f == 0)
    }
}

fn tally_seeds(b: &ExchangeMatrix, depth: usize) -> Result<Tally> {
    let mut tally = Tally::default();
    let root = Seed::initial(b.clone());
    tally.add(&root, &root.verify());
    let mut level = vec![(root, 0usize)];
    for _ in 0..depth {
        let mut next = Vec::new();
        for (s, last) in &level {
            for k in (1..=b.rank()).filter(|k| k != last) {
                let child = s.mutate(k)?;
                tally.add(&child, &child.verify());
                next.push((child, k));
            }
        }
        level = next;
    }
    Ok(tally)
}

fn tally_json(t: &Tally) -> Value {
    let names = SeedReport {
        det_c_unimodular: true,
        det_g_unimodular: true,
        sign_coherence: true,
        duality: true,
        d_orthogonality: true,
    }
    .checks();
    json!({
        "seeds": t.seeds,
        "checks": names.iter().zip(t.failures).map(|((name, _), f)| json!({"check": name, "failures": f, "pass": f == 0})).collect::<Vec<_>>(),
        "first_failure": t.first_failure,
    })
}

fn tally_text(out: &mut String, t: &Tally) -> std::fmt::Result {
    let names = ["det C = +-1", "det G = +-1", "sign coherence", "duality", "D-orthogonality"];
    for (name, f) in names.iter().zip(t.failures) {
        writeln!(out, "  [{}] {name}: {} of {} seeds", if f == 0 { "PASS" } else { "FAIL" }, t.seeds - f, t.seeds)?;
    }
    Ok(())
}

fn verify_matrix(b: &ExchangeMatrix, depth: usize) -> Result<Report> {
    let t = tally_seeds(b, depth)?;
    let mut text = format!("{} seeds within depth {depth}\n", t.seeds);
    tally_text(&mut text, &t)?;
    Ok(Report {
        text,
        json: tally_json(&t),
        ok: t.ok(),
    })
}

fn check(text: &mut String, results: &mut Vec<Value>, name: String, ok: bool) -> std::fmt::Result {
    results.push(json!({"check": name, "pass": ok}));
    writeln!(text, "[{}] {name}", if ok { "PASS" } else { "FAIL" })
}

fn big3(v: &[i64; 3]) -> [BigInt; 3] {
    v.map(BigInt::from)
}

fn verify_reference(depth: usize, seed: u64) -> Result<Report> {
    let mut text = String::new();
    let mut results = Vec::new();
    let (a, b) = (BigInt::from(3), BigInt::from(2));

    let fwd = g_sequence(Direction::Forward, 7, &a, &b)?;
    let bwd = g_sequence(Direction::Backward, 5, &a, &b)?;
    let ok = fwd.iter().zip(golden::RANK2_FORWARD).all(|(g, e)| g == &e.map(BigInt::from))
        && bwd.iter().zip(golden::RANK2_BACKWARD).all(|(g, e)| g == &e.map(BigInt::from));
    check(&mut text, &mut results, "rank-2 table (a, b) = (3, 2)".into(), ok)?;

    let mut ok = true;
    for (a, b) in [(3, 2), (2, 2), (4, 1), (5, 1)] {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let root = Seed::initial(ExchangeMatrix::rank2(&a, &b)?);
        for t in -12..=12 {
            let s = root.apply_word(&rank2_word(t))?;
            let (c, g) = rank2_matrices(t, &a, &b)?;
            ok &= s.c() == &c && s.g() == &g;
        }
    }
    check(&mut text, &mut results, "rank-2 closed forms, |t| <= 12".into(), ok)?;

    for (name, c0, d0, fwd, bwd) in golden::LIFTED {
        let m = ExchangeMatrix::rank3_frame(&a, &b, &BigInt::from(c0), &BigInt::from(d0))?;
        let seqs = lifted_sequences(&m, 3, 7)?;
        let tag = vertex_type(&m, 3)?;
        let label = tag.subtype().map_or(tag.tag.to_string(), |s| subtype_label(s).to_owned());
        let ok = label == name
            && fwd.iter().zip(&seqs.forward).all(|(e, g)| &big3(e) == g)
            && bwd.iter().zip(&seqs.backward).all(|(e, g)| &big3(e) == g);
        check(&mut text, &mut results, format!("type {name} example ({c0}, {d0})"), ok)?;
    }

    for (name, rows, c, cc) in golden::MARKOV {
        let m = ExchangeMatrix::from_i64(&rows)?;
        let ok = m.markov_constant()? == BigInt::from(c) && m.is_cluster_cyclic()? == cc;
        check(&mut text, &mut results, format!("{name}: C(B) = {c}"), ok)?;
    }

    writeln!(text, "randomized corpus: seed {seed}, 20 matrices, depth {depth}")?;
    let mut r = rng(seed);
    let mut all = Tally::default();
    for idx in 0..20 {
        let m = random_skew_symmetrizable(&mut r, 2 + idx % 3, 3, 3);
        let t = tally_seeds(&m, depth)?;
        all.seeds += t.seeds;
        for (acc, f) in all.failures.iter_mut().zip(t.failures) {
            *acc += f;
        }
    }
    tally_text(&mut text, &all)?;
    let ok = results.iter().all(|r| r["pass"] == json!(true)) && all.ok();
    let json = json!({"reference": results, "corpus": {"seed": seed, "depth": depth, "tally": tally_json(&all)}, "pass": ok});
    Ok(Report { text, json, ok })
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Classify { input, output } => {
            let r = classify(&read_matrix(&input)?)?;
            emit(&r, &output)?;
            Ok(r.ok)
        }
        Command::Explore { input, caps, output } => {
            explore(&read_matrix(&input)?, &caps, &output)?;
            Ok(true)
        }
        Command::Render {
            input,
            caps,
            output,
            sidecar,
            arc_resolution,
            clip_cosine,
            no_frontier,
            label_normals,
            width,
            height,
        } => {
            let opts = RenderOptions {
                arc_resolution,
                clip_cosine,
                shade_frontier: !no_frontier,
                label_normals,
                width,
                height,
                ..RenderOptions::default()
            };
            let fan = load_fan_or_explore(&input, &caps)?;
            let r = render_svg(&fan, &opts)?;
            let body = match output.format.unwrap_or(Format::Svg) {
                Format::Svg => r.svg.clone(),
                Format::Json => serde_json::to_string_pretty(&r.sidecar)? + "\n",
                Format::Text => bail!("render produces svg or json"),
            };
            write_output(output.out.as_deref(), &body)?;
            if let Some(p) = sidecar {
                write_output(Some(&p), &(serde_json::to_string_pretty(&r.sidecar)? + "\n"))?;
            }
            Ok(true)
        }
        Command::Rank2 { a, b, steps, output } => {
            let r = rank2(&a, &b, steps)?;
            emit(&r, &output)?;
            Ok(r.ok)
        }
        Command::Pair { input, i, j, output } => {
            let r = pair(&read_matrix(&input)?, i, j)?;
            emit(&r, &output)?;
            Ok(r.ok)
        }
        Command::Verify { input, depth, seed, output } => {
            let r = match input {
                Some(p) => verify_matrix(&read_matrix(&p)?, depth)?,
                None => verify_reference(depth, seed)?,
            };
            emit(&r, &output)?;
            Ok(r.ok)
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<std::io::Error>().is_some() {
        return 2;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::ConeBudgetExceeded { .. }) => 3,
        Some(
            Error::MalformedDocument(_)
            | Error::VersionMismatch { .. }
            | Error::NotSquare { .. }
            | Error::Ragged { .. }
            | Error::RankTooSmall(_)
            | Error::NotSkewSymmetrizable(_)
            | Error::InvalidOption(_),
        ) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
