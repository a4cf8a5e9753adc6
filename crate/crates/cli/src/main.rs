//! `tropgr`: seeds, tropical points, distinguished lifts, cone checks,
//! building-oracle certificates and puzzle diagrams from the command line.
//!
//! Exit status is 0 on success or membership, 1 on non-membership and 2 on
//! errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use tropgr::building::building_oracle;
use tropgr::catalog::{confa_seed, grassmannian_seed, Triangulation};
use tropgr::cluster::{apply_path, mutate_a_series, LabeledSeed, Mode, PointInChart};
use tropgr::diagram::render_hive_svg;
use tropgr::error::Error;
use tropgr::hive::{
    act_lineality, cone_check, cone_representative, distinguished_lift, distinguished_lift_on, hive_check,
    random_hive_point,
};
use tropgr::points::{fan_chart, pushforward_pi, random_trop_point, tropicalize, PluckerVector, SeriesPoint, TropPoint};
use tropgr::semifield::{qi, rational_to_json, PosSeries, Rational, DEFAULT_PRECISION};

#[derive(Parser)]
#[command(name = "tropgr", version, about = "Tropical points of Grassmannian cones and hive cones")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// Seed of the random generator.
    #[arg(long, global = true, default_value_t = 0)]
    rng_seed: u64,
    /// Relative precision (grid units) of series division.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION)]
    precision: i64,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Count points on the boundary of a cone as non-members.
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeedKind {
    Gr,
    Confa,
}

#[derive(Clone, Copy, ValueEnum)]
enum MutationMode {
    A,
    X,
}

#[derive(Clone, Copy, ValueEnum)]
enum RandKind {
    /// Tropical point of the fan chart.
    Fan,
    /// Integral point of the hive cone on the fan chart.
    Hive,
    /// Tropical Plücker vector of a random fan point.
    Plucker,
    /// Tropical Plücker vector inside the hive cone.
    Member,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit a Grassmannian or flag-configuration seed.
    Seed {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "gr")]
        kind: SeedKind,
        /// Triangles such as `1,2,3;1,3,4` (default: fan at vertex 1).
        #[arg(long)]
        triangulation: Option<String>,
    },
    /// Mutate a seed, or a tropical point on it, along a path.
    Mutate {
        /// Seed JSON, or a point JSON carrying its chart.
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated mutable indices.
        #[arg(long)]
        path: String,
        #[arg(long, value_enum, default_value = "a")]
        mode: MutationMode,
    },
    /// Negated valuations of a series point, optionally after mutations.
    Tropicalize {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        path: Option<String>,
    },
    /// Distinguished lift of a tropical Plücker vector.
    Lift {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        triangulation: Option<String>,
    },
    /// Cone inequalities of a Plücker vector next to the hive inequalities
    /// of its lift, or the hive inequalities of a point.
    CheckCone {
        #[arg(long)]
        input: PathBuf,
    },
    /// Compare a hive point with the lattices of its monomial lift.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        /// Largest search bound tried before giving up.
        #[arg(long, default_value_t = 3)]
        bound: u32,
    },
    /// Torus action on a Plücker vector, or the closed-form cone
    /// representative of its orbit.
    Lineality {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated coefficients `c_i` (rationals as `p/q`).
        #[arg(long, conflicts_with = "representative")]
        c: Option<String>,
        #[arg(long)]
        representative: bool,
    },
    /// Reproducible random points.
    Rand {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "hive")]
        kind: RandKind,
        #[arg(long, default_value_t = 3)]
        range: i64,
    },
    /// SVG puzzle picture of a hive point.
    Diagram {
        #[arg(long)]
        input: PathBuf,
        /// One triangle such as `1,2,3` (default: the whole polygon).
        #[arg(long)]
        triangle: Option<String>,
    },
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(m) | CliError::Usage(m) => f.write_str(m),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Output text and whether the input was a member.
struct Outcome {
    text: String,
    member: bool,
}

impl Outcome {
    fn ok(v: Value) -> Self {
        Outcome { text: pretty(&v), member: true }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn read_json(p: &Path) -> CliResult<Value> {
    let text = std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Lib(Error::Malformed(format!("{}: {e}", p.display()))))
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> CliResult<Vec<T>> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| x.trim().parse().map_err(|_| CliError::Usage(format!("bad {what} entry `{x}`"))))
        .collect()
}

fn parse_triangle(s: &str) -> CliResult<[usize; 3]> {
    let v: Vec<usize> = parse_list(s, "triangle")?;
    v.try_into().map_err(|_| CliError::Usage(format!("a triangle needs three vertices: `{s}`")))
}

fn parse_triangulation(n: usize, s: &str) -> CliResult<Triangulation> {
    let tris = s.split(';').map(parse_triangle).collect::<CliResult<Vec<_>>>()?;
    Ok(Triangulation::new(n, tris)?)
}

fn parse_rational(s: &str) -> CliResult<Rational> {
    s.trim().parse::<Rational>().map_err(|_| CliError::Usage(format!("bad rational `{s}`")))
}

/// Point files carry their chart: `{"chart": seed, "chart-id": .., "coords": ..}`.
fn point_json(p: &TropPoint) -> Value {
    let mut v = p.to_json();
    v["chart"] = p.chart.to_json();
    v
}

fn read_chart(v: &Value) -> CliResult<Arc<LabeledSeed>> {
    let c = v.get("chart").ok_or_else(|| Error::Malformed("point file lacks its chart".into()))?;
    Ok(Arc::new(LabeledSeed::from_json(c)?))
}

fn read_point(v: &Value) -> CliResult<TropPoint> {
    Ok(TropPoint::from_json(v, read_chart(v)?)?)
}

fn read_series_point(v: &Value) -> CliResult<SeriesPoint> {
    let chart = read_chart(v)?;
    let coords = v.get("coords").and_then(Value::as_object).ok_or_else(|| Error::Malformed("missing coords".into()))?;
    let mut out: Vec<Option<PosSeries>> = vec![None; chart.len()];
    for (key, val) in coords {
        let l = tropgr::catalog::Label::parse(key, chart.n())?;
        let i = chart.index_of(&l).ok_or_else(|| Error::LabelNotFound(key.clone()))?;
        let s: PosSeries = serde_json::from_value(val.clone()).map_err(|e| Error::Malformed(format!("{key}: {e}")))?;
        out[i] = Some(s);
    }
    let coords = out
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.ok_or_else(|| Error::Malformed(format!("missing coordinate {}", chart.label(i)))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PointInChart { chart, coords })
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    let g = &cli.global;
    let mut rng = ChaCha8Rng::seed_from_u64(g.rng_seed);
    match &cli.cmd {
        Cmd::Seed { k, n, kind, triangulation } => {
            let seed = match kind {
                SeedKind::Gr => grassmannian_seed(*k, *n)?,
                SeedKind::Confa => {
                    let t = match triangulation {
                        Some(s) => parse_triangulation(*n, s)?,
                        None => Triangulation::fan(*n, 1)?,
                    };
                    confa_seed(*k, &t)?
                }
            };
            Ok(Outcome::ok(seed.to_json()))
        }
        Cmd::Mutate { input, path, mode } => {
            let v = read_json(input)?;
            let path: Vec<usize> = parse_list(path, "path")?;
            if v.get("coords").is_some() {
                let p = read_point(&v)?;
                let m = match mode {
                    MutationMode::A => Mode::A,
                    MutationMode::X => Mode::X,
                };
                let q = TropPoint::from_semifield(&apply_path(&p.to_semifield(), &path, m)?)?;
                Ok(Outcome::ok(point_json(&q)))
            } else {
                let s = LabeledSeed::from_json(&v)?.apply_path(&path)?;
                Ok(Outcome::ok(s.to_json()))
            }
        }
        Cmd::Tropicalize { input, path } => {
            let mut p = read_series_point(&read_json(input)?)?;
            if let Some(path) = path {
                for k in parse_list::<usize>(path, "path")? {
                    p = mutate_a_series(&p, k, g.precision)?;
                }
            }
            Ok(Outcome::ok(point_json(&tropicalize(&p))))
        }
        Cmd::Lift { input, triangulation } => {
            let y = PluckerVector::from_json(&read_json(input)?)?;
            let h = match triangulation {
                Some(s) => distinguished_lift_on(&y, &parse_triangulation(y.n(), s)?)?,
                None => distinguished_lift(&y)?,
            };
            Ok(Outcome::ok(point_json(&h)))
        }
        Cmd::CheckCone { input } => {
            let v = read_json(input)?;
            let member = |r: &tropgr::hive::ConeReport| if g.strict { r.strict_member() } else { r.member };
            if v.get("values").is_some() {
                let y = PluckerVector::from_json(&v)?;
                let cone = cone_check(&y)?;
                let hive = hive_check(&distinguished_lift(&y)?)?;
                let out = json!({
                    "member": member(&hive),
                    "cone": cone.to_json(g.strict),
                    "hive": hive.to_json(g.strict),
                    "agree": member(&cone) == member(&hive),
                });
                Ok(Outcome { text: pretty(&out), member: member(&hive) })
            } else {
                let hive = hive_check(&read_point(&v)?)?;
                Ok(Outcome { text: pretty(&hive.to_json(g.strict)), member: member(&hive) })
            }
        }
        Cmd::Oracle { input, bound } => {
            let r = building_oracle(&read_point(&read_json(input)?)?, *bound)?;
            Ok(Outcome { text: pretty(&r.to_json()), member: r.passed() })
        }
        Cmd::Lineality { input, c, representative } => {
            let y = PluckerVector::from_json(&read_json(input)?)?;
            if *representative {
                let (c, z) = cone_representative(&y)?;
                let c: Vec<Value> = c.iter().map(rational_to_json).collect();
                return Ok(Outcome::ok(json!({ "c": c, "point": z.to_json() })));
            }
            let c: Vec<Rational> = match c {
                Some(s) => s.split(',').map(parse_rational).collect::<CliResult<_>>()?,
                None => return Err(CliError::Usage("give --c or --representative".into())),
            };
            if c.len() != y.n() {
                return Err(CliError::Usage(format!("--c needs {} entries", y.n())));
            }
            Ok(Outcome::ok(act_lineality(&y, &c).to_json()))
        }
        Cmd::Rand { k, n, kind, range } => {
            let den = *k as i64;
            let v = match kind {
                RandKind::Fan => point_json(&random_trop_point(fan_chart(*k, *n)?, &mut rng, *range, 1)),
                RandKind::Hive => point_json(&random_hive_point(*k, *n, &mut rng, *range)?),
                RandKind::Plucker => pushforward_pi(&random_trop_point(fan_chart(*k, *n)?, &mut rng, *range, den))?.to_json(),
                RandKind::Member => {
                    // a large shift along the lineality directions lands in the hive cone
                    let mut found = None;
                    for _ in 0..100 {
                        let y = pushforward_pi(&random_trop_point(fan_chart(*k, *n)?, &mut rng, *range, den))?;
                        let c: Vec<Rational> = (0..*n).map(|_| qi(rng.gen_range(30..=60))).collect();
                        let z = act_lineality(&y, &c);
                        if hive_check(&distinguished_lift(&z)?)?.member {
                            found = Some(z);
                            break;
                        }
                    }
                    found.ok_or(Error::Unconverged(100))?.to_json()
                }
            };
            Ok(Outcome::ok(v))
        }
        Cmd::Diagram { input, triangle } => {
            let p = read_point(&read_json(input)?)?;
            let tri = triangle.as_deref().map(parse_triangle).transpose()?;
            Ok(Outcome { text: render_hive_svg(&p, tri)?, member: true })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.global.out {
                Some(p) => std::fs::write(p, &out.text).map_err(|e| format!("{}: {e}", p.display())),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            match written {
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
                Ok(()) if out.member => ExitCode::SUCCESS,
                Ok(()) => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
