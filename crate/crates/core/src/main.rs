use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use jordiv::algebra::{split_null_extension, AlgebraTable, Identity, LinearMap};
use jordiv::constructions::{
    albert_type, cayley_dickson, field_algebra, hermitian_subalgebra, matrix_algebra, plus_algebra, spin_factor,
    CdParams, GammaParams,
};
use jordiv::derivations::{
    derivation_space, div_reduction, div_search, has_invertible_values, spin_div_criterion, Caps, SpinCriterion,
};
use jordiv::error::Error;
use jordiv::exactmath::{FieldSpec, Matrix, Scalar};
use jordiv::format::{parse_element, parse_list, read_algebra, read_map, write_algebra, write_map};
use jordiv::jordan::{albert_norm, jordan_inverse, peirce_frame, peirce_single, spin_norm};
use jordiv::suite::{self, RunConfig};

#[derive(Parser)]
#[command(name = "jordiv", version, about = "Exact computations with Jordan algebras and their derivations")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to FILE instead of stdout.
    #[arg(short = 'o', long = "output", global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Enumeration cap for exhaustive checks and searches.
    #[arg(long, global = true)]
    cap: Option<u64>,
    /// Report wall-clock times (output then differs between runs).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an algebra and print its definition.
    #[command(subcommand)]
    Build(Build),
    /// Check commutativity, associativity and the Jordan identity.
    Check {
        file: PathBuf,
        #[arg(long, default_value = "all")]
        identity: String,
    },
    /// Basis of the derivation algebra.
    Derivations { file: PathBuf },
    /// Does a derivation have invertible values?
    Divcheck { file: PathBuf, map: PathBuf },
    /// All DIV derivations of an algebra over GF(p).
    Divsearch { file: PathBuf },
    /// Quotient by the largest ideal in the kernel, with the induced map.
    Reduce {
        file: PathBuf,
        map: PathBuf,
        /// Also write the quotient algebra here.
        #[arg(long, value_name = "FILE")]
        quotient: Option<PathBuf>,
    },
    /// Inverse of an element (coordinates `a,b,...` or a basis label).
    Invert {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Norm of an Albert-type or spin-factor element.
    Norm {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Peirce decomposition relative to an idempotent, or the diagonal frame.
    Peirce {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Look for a witness pair for a diagonal spin form.
    Spincriterion {
        #[arg(long)]
        field: FieldSpec,
        #[arg(long, allow_hyphen_values = true)]
        diag: String,
    },
    /// Run the full check battery.
    VerifyPaper {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Run a single named check.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Subcommand)]
enum Build {
    /// Spin factor of a diagonal form.
    Spin {
        #[arg(long)]
        field: FieldSpec,
        #[arg(long, allow_hyphen_values = true)]
        diag: String,
    },
    /// 27-dimensional Albert-type algebra.
    Albert {
        #[arg(long)]
        field: FieldSpec,
        #[arg(long, default_value = "-1,-1,-1", allow_hyphen_values = true)]
        mu: String,
        #[arg(long, default_value = "1,1,1", allow_hyphen_values = true)]
        gamma: String,
    },
    /// n x n matrices over a coefficient algebra (a file or a field such as GF:3).
    Matn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        coeff: String,
    },
    /// The plus algebra of a table.
    Plus { file: PathBuf },
    /// Fixed points of an involution under the symmetrized product.
    Hermitian {
        file: PathBuf,
        #[arg(long = "inv")]
        involution: PathBuf,
    },
    /// Cayley-Dickson doubling of the field.
    Cd(CdArgs),
    /// Split null extension J + J eps.
    Extend {
        file: PathBuf,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        lambda: String,
    },
}

#[derive(Args)]
struct CdArgs {
    #[arg(long)]
    field: FieldSpec,
    #[arg(long, default_value_t = 3)]
    stages: usize,
    /// One parameter per stage.
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
}

/// Text lines plus the JSON fields of one command.
struct Report {
    command: &'static str,
    inputs: Map<String, Value>,
    verdict: Value,
    witness: Value,
    method: Value,
    extra: Map<String, Value>,
    text: String,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Report {
            command,
            inputs: Map::new(),
            verdict: Value::Null,
            witness: Value::Null,
            method: Value::Null,
            extra: Map::new(),
            text: String::new(),
        }
    }

    fn input(&mut self, k: &str, v: impl Into<Value>) {
        self.inputs.insert(k.into(), v.into());
    }

    fn extra(&mut self, k: &str, v: impl Into<Value>) {
        self.extra.insert(k.into(), v.into());
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn render(&self, as_json: bool, millis: Option<u128>) -> String {
        if !as_json {
            let mut s = self.text.clone();
            if let Some(ms) = millis {
                s.push_str(&format!("time: {ms} ms\n"));
            }
            return s;
        }
        let mut obj = Map::new();
        obj.insert("command".into(), self.command.into());
        obj.insert("inputs".into(), Value::Object(self.inputs.clone()));
        obj.insert("verdict".into(), self.verdict.clone());
        obj.insert("witness".into(), self.witness.clone());
        obj.insert("method".into(), self.method.clone());
        obj.insert("timings".into(), millis.map_or(Value::Null, |ms| json!({ "total_ms": ms })));
        for (k, v) in &self.extra {
            obj.insert(k.clone(), v.clone());
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("json values serialize");
        s.push('\n');
        s
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse { line: 0, message: format!("cannot read {}: {e}", path.display()) })
}

fn load_algebra(path: &Path) -> Result<AlgebraTable, Error> {
    read_algebra(&read_file(path)?)
}

fn load_map(path: &Path, field: FieldSpec) -> Result<LinearMap, Error> {
    read_map(&read_file(path)?, field)
}

/// A basis label such as `x11`, or coordinates.
fn element(t: &AlgebraTable, text: &str) -> Result<Vec<Scalar>, Error> {
    if let Some(i) = t.labels().and_then(|l| l.iter().position(|s| s == text)) {
        return Ok(t.basis_element(i).into_coords());
    }
    parse_element(text, t.field(), t.dim())
}

fn coords(v: &[Scalar]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn three(list: Vec<Scalar>, what: &str) -> Result<[Scalar; 3], Error> {
    <[Scalar; 3]>::try_from(list).map_err(|l| Error::BadParams(format!("--{what} needs 3 values, got {}", l.len())))
}

fn build(b: &Build, r: &mut Report) -> Result<AlgebraTable, Error> {
    Ok(match b {
        Build::Spin { field, diag } => {
            r.input("field", field.to_string());
            r.input("diag", diag.as_str());
            spin_factor(&Matrix::diagonal(*field, &parse_list(diag, *field)?))?
        }
        Build::Albert { field, mu, gamma } => {
            r.input("field", field.to_string());
            r.input("mu", mu.as_str());
            r.input("gamma", gamma.as_str());
            let cd = CdParams::new(three(parse_list(mu, *field)?, "mu")?)?;
            let g = GammaParams::new(three(parse_list(gamma, *field)?, "gamma")?)?;
            albert_type(*field, &cd, &g)?
        }
        Build::Matn { n, coeff } => {
            r.input("n", *n);
            r.input("coeff", coeff.as_str());
            if *n == 0 {
                return Err(Error::BadParams("--n must be positive".into()));
            }
            let a = match coeff.parse::<FieldSpec>() {
                Ok(f) => field_algebra(f),
                Err(_) => load_algebra(Path::new(coeff))?,
            };
            matrix_algebra(&a, *n)?
        }
        Build::Plus { file } => {
            r.input("file", file.display().to_string());
            plus_algebra(&load_algebra(file)?)
        }
        Build::Hermitian { file, involution } => {
            r.input("file", file.display().to_string());
            r.input("inv", involution.display().to_string());
            let a = load_algebra(file)?;
            let sigma = load_map(involution, a.field())?;
            hermitian_subalgebra(&a, &sigma)?.table
        }
        Build::Cd(CdArgs { field, stages, mu }) => {
            r.input("field", field.to_string());
            r.input("stages", *stages);
            r.input("mu", mu.as_str());
            let mut m = parse_list(mu, *field)?;
            if m.len() != *stages {
                return Err(Error::BadParams(format!("--mu needs {stages} values, got {}", m.len())));
            }
            // unused stages still need nonzero parameters
            m.resize(3, field.one());
            cayley_dickson(*field, &CdParams::new(three(m, "mu")?)?, *stages)?.0
        }
        Build::Extend { file, lambda } => {
            r.input("file", file.display().to_string());
            r.input("lambda", lambda.as_str());
            let j = load_algebra(file)?;
            let l = j.field().parse(lambda)?;
            split_null_extension(&j, &l)?.table
        }
    })
}

fn run(cli: &Cli) -> Result<(Report, bool), Error> {
    let mut caps = Caps::default();
    if let Some(c) = cli.cap {
        caps.enumeration = c;
        caps.derivations = c;
    }
    let mut ok = true;
    let r = match &cli.command {
        Command::Build(b) => {
            let mut r = Report::new("build");
            let t = build(b, &mut r)?;
            let text = write_algebra(&t);
            if cli.json {
                r.extra("dim", t.dim());
                r.extra("algebra", text);
            } else {
                r.text = text;
            }
            r
        }
        Command::Check { file, identity } => {
            let mut r = Report::new("check");
            r.input("file", file.display().to_string());
            r.input("identity", identity.as_str());
            let t = load_algebra(file)?;
            let which: Vec<Identity> = if identity == "all" {
                vec![Identity::Commutative, Identity::Associative, Identity::Jordan]
            } else {
                vec![identity.parse()?]
            };
            let mut results = Map::new();
            for w in which {
                let name = format!("{w:?}").to_lowercase();
                let v = match t.check_identity_with_cap(w, caps.enumeration) {
                    Ok(b) => b.to_string(),
                    Err(Error::Undecidable(m)) => format!("undecided ({m})"),
                    Err(e) => return Err(e),
                };
                r.line(format!("{name}: {v}"));
                results.insert(name, v.into());
            }
            r.verdict = Value::Object(results);
            r
        }
        Command::Derivations { file } => {
            let mut r = Report::new("derivations");
            r.input("file", file.display().to_string());
            let t = load_algebra(file)?;
            let der = derivation_space(&t)?;
            r.line(format!("dim Der = {}", der.dim()));
            let maps: Vec<String> = der.basis.iter().map(write_map).collect();
            for m in &maps {
                r.text.push_str(m);
            }
            r.verdict = der.dim().into();
            r.extra("basis", maps);
            r
        }
        Command::Divcheck { file, map } => {
            let mut r = Report::new("divcheck");
            r.input("file", file.display().to_string());
            r.input("map", map.display().to_string());
            let t = load_algebra(file)?;
            let d = load_map(map, t.field())?;
            let rep = has_invertible_values(&t, &d, &caps)?;
            r.line(format!("verdict: {}", rep.verdict.as_str()));
            r.line(format!("method: {}", rep.method.as_str()));
            r.line(format!("dim ker = {}, dim im = {}", rep.kernel.dim(), rep.image.dim()));
            r.verdict = rep.verdict.as_str().into();
            r.method = rep.method.as_str().into();
            if let Some(x) = &rep.witness {
                let v = d.apply(x);
                r.line(format!("witness x = ({}), D(x) = ({}) is not invertible", coords(x), coords(&v)));
                r.witness = json!({ "x": coords(x), "value": coords(&v) });
            }
            if let Some(n) = &rep.note {
                r.line(format!("note: {n}"));
                r.extra("note", n.as_str());
            }
            r
        }
        Command::Divsearch { file } => {
            let mut r = Report::new("divsearch");
            r.input("file", file.display().to_string());
            let t = load_algebra(file)?;
            let found = div_search(&t, &caps)?;
            r.line(format!("{} DIV derivations", found.len()));
            let maps: Vec<String> = found.iter().map(|f| write_map(&f.map)).collect();
            for m in &maps {
                r.text.push_str(m);
            }
            r.verdict = found.len().into();
            r.method = "exhaustive".into();
            r.extra("maps", maps);
            r
        }
        Command::Reduce { file, map, quotient } => {
            let mut r = Report::new("reduce");
            r.input("file", file.display().to_string());
            r.input("map", map.display().to_string());
            let t = load_algebra(file)?;
            let d = load_map(map, t.field())?;
            let red = div_reduction(&t, &d, &caps)?;
            r.line(format!("dim M = {}", red.m.dim()));
            r.line(format!("dim quotient = {}", red.quotient.table.dim()));
            r.line(format!("verdict: {}", red.verdict.as_str()));
            if let Some(v) = red.induced_verdict {
                r.line(format!("induced verdict: {}", v.as_str()));
                r.extra("induced_verdict", v.as_str());
            }
            if let Some(s) = red.simplicity {
                r.line(format!("quotient: {}", s.as_str()));
                r.extra("simplicity", s.as_str());
            }
            r.text.push_str(&write_map(&red.induced));
            r.verdict = red.verdict.as_str().into();
            r.extra("dim_m", red.m.dim());
            r.extra("induced", write_map(&red.induced));
            if let Some(q) = quotient {
                std::fs::write(q, write_algebra(&red.quotient.table))
                    .map_err(|e| Error::BadParams(format!("cannot write {}: {e}", q.display())))?;
            }
            r
        }
        Command::Invert { file, element: e } => {
            let mut r = Report::new("invert");
            r.input("file", file.display().to_string());
            r.input("element", e.as_str());
            let t = load_algebra(file)?;
            let x = element(&t, e)?;
            let norm = if t.albert().is_some() {
                Some(albert_norm(&t, &x)?)
            } else if t.spin_form().is_some() {
                Some(spin_norm(&t, &x)?)
            } else {
                None
            };
            let suffix = norm.as_ref().map(|n| format!(", n(A) = {n}")).unwrap_or_default();
            match jordan_inverse(&t, &x)? {
                Some(inv) => {
                    r.line(format!("inverse ({}){suffix}", coords(&inv)));
                    r.verdict = "invertible".into();
                    r.witness = coords(&inv).into();
                }
                None => {
                    r.line(format!("not invertible{suffix}"));
                    r.verdict = "not_invertible".into();
                }
            }
            if let Some(n) = norm {
                r.extra("norm", n.to_string());
            }
            r
        }
        Command::Norm { file, element: e } => {
            let mut r = Report::new("norm");
            r.input("file", file.display().to_string());
            r.input("element", e.as_str());
            let t = load_algebra(file)?;
            let x = element(&t, e)?;
            let n = if t.albert().is_some() { albert_norm(&t, &x)? } else { spin_norm(&t, &x)? };
            r.line(format!("n = {n}"));
            r.verdict = n.to_string().into();
            r
        }
        Command::Peirce { file, element: e } => {
            let mut r = Report::new("peirce");
            r.input("file", file.display().to_string());
            let t = load_algebra(file)?;
            let dec = match e {
                Some(e) => {
                    r.input("element", e.as_str());
                    peirce_single(&t, &element(&t, e)?)?
                }
                None => peirce_frame(&t)?,
            };
            let mut dims = Map::new();
            for (name, s) in &dec.components {
                r.line(format!("{name}: dim {}", s.dim()));
                dims.insert(name.clone(), s.dim().into());
            }
            r.verdict = Value::Object(dims);
            r
        }
        Command::Spincriterion { field, diag } => {
            let mut r = Report::new("spincriterion");
            r.input("field", field.to_string());
            r.input("diag", diag.as_str());
            let g = Matrix::diagonal(*field, &parse_list(diag, *field)?);
            match spin_div_criterion(&g, &caps)? {
                SpinCriterion::Pair { x, y } => {
                    r.line(format!("pair x = ({}), y = ({})", coords(&x), coords(&y)));
                    r.verdict = "pair".into();
                    r.witness = json!({ "x": coords(&x), "y": coords(&y) });
                }
                SpinCriterion::NoPair => {
                    r.line("no pair");
                    r.verdict = "no_pair".into();
                }
                SpinCriterion::Inconclusive => {
                    r.line("inconclusive");
                    r.verdict = "unknown".into();
                }
            }
            r
        }
        Command::VerifyPaper { seed, only } => {
            let mut r = Report::new("verify-paper");
            r.input("seed", *seed);
            let cfg = RunConfig { seed: *seed, caps, timings: cli.timings, only: only.clone() };
            let res = suite::run(&cfg)?;
            ok = res.ok();
            r.text = res.render_text();
            r.verdict = (if ok { "pass" } else { "fail" }).into();
            r.extra("report", res.to_json());
            r
        }
    };
    Ok((r, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (report, ok) = match run(&cli) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            return match e {
                Error::Parse { .. } | Error::BadParams(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            };
        }
    };
    let millis = cli.timings.then(|| start.elapsed().as_millis());
    let out = report.render(cli.json, millis);
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, out) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{out}"),
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
