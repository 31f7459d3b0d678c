//! Command-line front end: construction, verification, coverage census,
//! the coverage comparison table, and hypergraph checks.
//!
//! Exit codes: 0 on success, 1 on verification failure, 2 on usage errors.
//! All output is deterministic.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use ooa_core::construct::{build_rts_ooa, build_runs_ooa};
use ooa_core::field::FieldSpec;
use ooa_core::hyper;
use ooa_core::lfsr::LfsrSpec;
use ooa_core::ooa::{self, OoaArray};
use ooa_core::poly::{enumerate_primitive, Poly};
use ooa_core::table::table1_stats;

#[derive(Parser)]
#[command(
    name = "ooa",
    version,
    about = "Ordered orthogonal arrays from LFSR sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Only left-justified column sets (the OOA property).
    LeftJustified,
    /// Every t-subset of columns (the census of the comparison table).
    AllTsets,
}

#[derive(Subcommand)]
enum Cmd {
    /// Field parameters and the canonical modulus for GF(q), optionally
    /// also for the extension GF(q^t).
    FieldInfo {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: Option<u32>,
    },
    /// All monic primitive polynomials of degree t over F_q, one per line,
    /// as comma-separated coefficient codes (constant term first).
    PrimitivePolys {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: u32,
    },
    /// One full period of the LFSR sequence.
    Lfsr {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: Option<u32>,
        /// Characteristic polynomial, e.g. 1,1,0,0,1; defaults to the
        /// canonical primitive polynomial of degree t.
        #[arg(long)]
        poly: Option<String>,
        /// Seed symbols b_0,...,b_{t-1}; defaults to the impulse seed
        /// 0,...,0,1.
        #[arg(long)]
        seed: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the OOA(t, q+1, t, q) from the LFSR subinterval array.
    RunsOoa {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: Option<u32>,
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        seed: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the Reed-Solomon OOA(t, q+1, t, q) with the same parameters.
    RtsOoa {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify coverage of an array file; exits 1 on failure.
    Verify {
        #[arg(long)]
        file: PathBuf,
        /// Override the declared coverage multiplicity.
        #[arg(long)]
        lambda: Option<u64>,
        #[arg(long, value_enum, default_value = "left-justified")]
        mode: Mode,
    },
    /// Coverage census of an array file (reported, never fails).
    Coverage {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_enum, default_value = "all-tsets")]
        mode: Mode,
    },
    /// Coverage comparison row: censuses every primitive polynomial's
    /// array and the Reed-Solomon array for (q, t).
    Table1 {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: u32,
    },
    /// Check the hypergraph picture at (q, t): the column vertex map is a
    /// homomorphism into the projective independence hypergraph, the
    /// subinterval array is a VOA over it, the pullback reproduces the
    /// runs-ooa array, and projective points embed into the linear
    /// independence hypergraph.
    HypergraphCheck {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: Option<u32>,
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        seed: Option<String>,
        /// Write the left-justified hypergraph H(t, q+1, t) to a file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode> {
    match cmd {
        Cmd::FieldInfo { q, t } => field_info(q, t),
        Cmd::PrimitivePolys { q, t } => {
            let base = FieldSpec::with_cardinality(q)?;
            for f in enumerate_primitive(&base, t)? {
                println!("{}", f.to_code_string());
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Lfsr {
            q,
            t,
            poly,
            seed,
            out,
        } => {
            let spec = build_spec(q, t, poly.as_deref(), seed.as_deref())?;
            let mut text = spec.period_sequence().text();
            text.push('\n');
            emit(out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::RunsOoa {
            q,
            t,
            poly,
            seed,
            out,
        } => {
            let spec = build_spec(q, t, poly.as_deref(), seed.as_deref())?;
            let array = build_runs_ooa(&spec)?;
            emit(out.as_deref(), &array.to_text())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::RtsOoa { q, t, out } => {
            let base = FieldSpec::with_cardinality(q)?;
            let array = build_rts_ooa(&base, t)?;
            emit(out.as_deref(), &array.to_text())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { file, lambda, mode } => verify(&file, lambda, mode),
        Cmd::Coverage { file, mode } => coverage(&file, mode),
        Cmd::Table1 { q, t } => {
            let row = table1_stats(q, t)?;
            println!("{}", row.line());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::HypergraphCheck {
            q,
            t,
            poly,
            seed,
            out,
        } => hypergraph_check(q, t, poly.as_deref(), seed.as_deref(), out.as_deref()),
    }
}

fn field_info(q: u64, t: Option<u32>) -> Result<ExitCode> {
    let base = FieldSpec::with_cardinality(q)?;
    println!("q={} p={} n={}", base.q(), base.p(), base.n());
    println!("modulus={}", codes_csv(base.modulus()));
    println!("generator={}", base.generator().0);
    if let Some(t) = t {
        let ext = FieldSpec::build(base.p(), base.n() * t)?;
        println!("ext q^t={} p={} n={}", ext.q(), ext.p(), ext.n());
        println!("ext modulus={}", codes_csv(ext.modulus()));
    }
    Ok(ExitCode::SUCCESS)
}

fn codes_csv(codes: &[u64]) -> String {
    codes
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn build_spec(q: u64, t: Option<u32>, poly: Option<&str>, seed: Option<&str>) -> Result<LfsrSpec> {
    let base = FieldSpec::with_cardinality(q)?;
    let f = match poly {
        Some(text) => Poly::parse(&base, text)?,
        None => {
            let t = t.context("either --t or --poly is required")?;
            enumerate_primitive(&base, t)?
                .into_iter()
                .next()
                .context("no primitive polynomial of that degree")?
        }
    };
    if let (Some(t), Some(d)) = (t, f.degree()) {
        if d != t as usize {
            bail!("--poly has degree {d} but --t is {t}");
        }
    }
    let degree = f.degree().context("zero polynomial")?;
    let seed_codes: Vec<u64> = match seed {
        Some(text) => text
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u64>()
                    .with_context(|| format!("bad seed symbol {tok:?}"))
            })
            .collect::<Result<_>>()?,
        None => {
            let mut s = vec![0u64; degree];
            *s.last_mut().context("empty seed")? = 1;
            s
        }
    };
    Ok(LfsrSpec::new(base, f, &seed_codes)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn read_array(file: &Path, lambda: Option<u64>) -> Result<OoaArray> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let array = OoaArray::from_text(&text)?;
    match lambda {
        Some(l) if l != array.lambda() => Ok(OoaArray::new(
            array.t(),
            array.m(),
            array.s(),
            array.v(),
            l,
            array.rows().to_vec(),
        )?),
        _ => Ok(array),
    }
}

fn verify(file: &Path, lambda: Option<u64>, mode: Mode) -> Result<ExitCode> {
    let array = read_array(file, lambda)?;
    match mode {
        Mode::LeftJustified => {
            let report = ooa::verify_ooa(&array);
            println!("{}", report.summary_line());
            for failure in &report.failures {
                println!("uncovered {failure}");
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Mode::AllTsets => {
            let report = ooa::coverage_ratio(&array)?;
            println!("{}", report.summary_line());
            Ok(if report.covered == report.total {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn coverage(file: &Path, mode: Mode) -> Result<ExitCode> {
    let array = read_array(file, None)?;
    let report = match mode {
        Mode::AllTsets => ooa::coverage_ratio(&array)?,
        Mode::LeftJustified => ooa::left_justified_ratio(&array)?,
    };
    println!("{}", report.summary_line());
    Ok(ExitCode::SUCCESS)
}

fn binomial_capped(n: u64, k: u64, cap: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > cap {
            return cap + 1;
        }
    }
    acc
}

fn hypergraph_check(
    q: u64,
    t: Option<u32>,
    poly: Option<&str>,
    seed: Option<&str>,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let spec = build_spec(q, t, poly, seed)?;
    let t = spec.t();
    let k = spec.window();
    const CAP: u128 = 10_000_000;
    if binomial_capped(k, t as u64, CAP) > CAP || binomial_capped(q.pow(t), t as u64, CAP) > CAP {
        bail!("parameters too large for hypergraph-check; try smaller q or t");
    }
    let base = spec.base().clone();
    let d = t - 1;

    let h = hyper::left_justified_hypergraph(t, q as u32 + 1, t)?;
    let pi = hyper::projective_independence_hypergraph(&base, d)?;
    let map = hyper::runs_projective_map(&spec)?;
    let mut ok = true;

    let hom = hyper::is_homomorphism(&h, &pi, &map)?;
    println!(
        "homomorphism H({t},{},{t}) -> PI({d},{q}): {}",
        q + 1,
        verdict(hom)
    );
    ok &= hom;

    let voa = hyper::subinterval_voa(&spec)?;
    let report = hyper::verify_voa(&voa, &pi, 1)?;
    println!(
        "subinterval array is a VOA over PI({d},{q}): {}",
        verdict(report.passed())
    );
    ok &= report.passed();

    let pulled = hyper::pull_back(&voa, &h, &pi, &map)?;
    let runs = build_runs_ooa(&spec)?.to_voa();
    let equal = pulled == runs;
    println!(
        "pullback along the column map equals runs-ooa: {}",
        verdict(equal)
    );
    ok &= equal;

    let li = hyper::linear_independence_hypergraph(&base, t)?;
    let p2v = hyper::point_to_vector_map(&base, d);
    let hom = hyper::is_homomorphism(&pi, &li, &p2v)?;
    println!("homomorphism PI({d},{q}) -> LI({t},{q}): {}", verdict(hom));
    ok &= hom;

    if let Some(path) = out {
        fs::write(path, h.to_text()).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}
