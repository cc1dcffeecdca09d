use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ordim::battery::theorem_battery;
use ordim::blocks::{basic_block_of_rc, build_lr, fundamental_basic_block_of, BasicBlockForm};
use ordim::dimension::{verify_realizer, ExactOptions, DEFAULT_EXTENSION_CAP};
use ordim::io::{
    parse_extensions, parse_poset_with_warnings, serialize_extensions, serialize_poset, to_dot,
    Highlight,
};
use ordim::lattice::Lattice;
use ordim::poset::Poset;
use ordim::rc::{dimension_of, is_rc, rc_dimension, ClassifyError, RcError};

const CAP_ENV: &str = "ORDIM_EXACT_CAP";

#[derive(Parser)]
#[command(
    name = "ordim",
    version,
    about = "Order dimension of finite posets and RC-lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the complete fundamental basic block L_r.
    GenLr {
        r: usize,
        /// Poset file to write (standard output when absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// DOT file to write; `-` for standard output.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Dimension of a poset.
    Dim {
        file: PathBuf,
        /// Linear-extension cap for the exhaustive search.
        #[arg(long)]
        exact_cap: Option<usize>,
        /// Print the realizer found.
        #[arg(long)]
        witness: bool,
    },
    /// Check a family of linear extensions against a poset.
    Realizer {
        file: PathBuf,
        #[arg(long)]
        check: PathBuf,
    },
    /// Basic block of an RC-lattice.
    BasicBlock { file: PathBuf },
    /// Fundamental basic block of an RC-lattice.
    Fbb { file: PathBuf },
    /// RC test and dimension of a lattice.
    Rc { file: PathBuf },
    /// Randomized checks against the exhaustive oracle.
    Battery {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
    },
    /// Hasse diagram as DOT, reducibles shaded.
    Dot { file: PathBuf },
}

/// Exit code 1 carries a negative answer, 2 an input problem.
enum Failure {
    Negative(String),
    Input(String),
}

type Outcome = Result<String, Failure>;

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (text, code) = match run(cli.command) {
        Ok(out) => (out, 0),
        Err(Failure::Negative(out)) => (out, 1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes());
    ExitCode::from(code)
}

fn read_poset(path: &Path) -> Result<Poset, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let (p, warnings) = parse_poset_with_warnings(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    for w in warnings {
        eprintln!("warning: dropped {w:?}");
    }
    Ok(p)
}

fn read_lattice(path: &Path) -> Result<Lattice, Failure> {
    Lattice::new(read_poset(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_target(path: &Path, text: &str, stdout: &mut String) -> Result<(), Failure> {
    if path == Path::new("-") {
        stdout.push_str(text);
        Ok(())
    } else {
        fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }
}

fn exact_cap(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("{CAP_ENV}={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_EXTENSION_CAP),
    }
}

fn block_text(b: &BasicBlockForm, l: &Lattice) -> Result<String, Failure> {
    let lat = b.to_lattice(l).map_err(input)?;
    let names = |xs: &[usize]| {
        xs.iter()
            .map(|&x| l.poset().display_name(x))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = format!("chain {}\n", names(&b.chain));
    for (c, pair) in &b.ears {
        out.push_str(&format!(
            "ear {} on {}\n",
            names(&[*c]),
            names(&[pair.a, pair.b])
        ));
    }
    out.push_str(&format!("elements {}\n", names(&b.elements())));
    out.push_str(&serialize_poset(lat.poset()));
    Ok(out)
}

fn rc_error(e: RcError) -> Failure {
    match e {
        RcError::NotRc { x, y } => Failure::Negative(format!("not RC\nwitness {x} {y}\n")),
        e => Failure::Input(e.to_string()),
    }
}

fn run(command: Command) -> Outcome {
    let mut out = String::new();
    match command {
        Command::GenLr { r, out: file, dot } => {
            let b = build_lr(r).map_err(input)?;
            let text = serialize_poset(b.poset());
            match &file {
                Some(path) => write_target(path, &text, &mut out)?,
                None if dot.is_none() => out.push_str(&text),
                None => {}
            }
            if let Some(path) = dot {
                let hl = Highlight::reducibles(b.poset());
                write_target(&path, &to_dot(b.poset(), Some(&hl)), &mut out)?;
            }
        }
        Command::Dim {
            file,
            exact_cap: cap,
            witness,
        } => {
            let p = read_poset(&file)?;
            let opts = ExactOptions {
                max_extensions: exact_cap(cap)?,
                ..ExactOptions::default()
            };
            let rep = dimension_of(&p, &opts).map_err(|e| match e {
                ClassifyError::Exact(e) => Failure::Negative(format!("undecided: {e}\n")),
                e => input(e),
            })?;
            out.push_str(&format!("dim {}\nmethod {}\n", rep.dim, rep.method));
            if let Some(planar) = rep.planar {
                out.push_str(&format!("planar {}\n", if planar { "yes" } else { "no" }));
            }
            if witness {
                out.push_str(&serialize_extensions(&rep.witness));
            }
        }
        Command::Realizer { file, check } => {
            let p = read_poset(&file)?;
            let text = fs::read_to_string(&check)
                .map_err(|e| Failure::Input(format!("{}: {e}", check.display())))?;
            let r = parse_extensions(&text, p.len())
                .map_err(|e| Failure::Input(format!("{}: {e}", check.display())))?;
            match verify_realizer(&p, &r) {
                Ok(()) => out.push_str(&format!("valid realizer of {} extensions\n", r.len())),
                Err(e) => return Err(Failure::Negative(format!("invalid: {e}\n"))),
            }
        }
        Command::BasicBlock { file } => {
            let l = read_lattice(&file)?;
            let b = basic_block_of_rc(&l).map_err(|e| match e {
                ordim::blocks::BlockError::NotRc { x, y } => rc_error(RcError::NotRc { x, y }),
                e => input(e),
            })?;
            out.push_str(&block_text(&b, &l)?);
        }
        Command::Fbb { file } => {
            let l = read_lattice(&file)?;
            let b = basic_block_of_rc(&l).map_err(|e| match e {
                ordim::blocks::BlockError::NotRc { x, y } => rc_error(RcError::NotRc { x, y }),
                e => input(e),
            })?;
            out.push_str(&block_text(&fundamental_basic_block_of(&b), &l)?);
        }
        Command::Rc { file } => {
            let l = read_lattice(&file)?;
            let v = is_rc(&l);
            if let Some((x, y)) = v.witness {
                return Err(rc_error(RcError::NotRc { x, y }));
            }
            let rep = rc_dimension(&l).map_err(rc_error)?;
            out.push_str(&format!(
                "RC\nreducibles {}\ndim {}\nmethod {}\nplanar {}\n",
                l.poset().reducibles().len(),
                rep.dim,
                rep.method,
                if rep.dim <= 2 { "yes" } else { "no" }
            ));
        }
        Command::Battery {
            seed,
            trials,
            max_n,
        } => {
            let report = theorem_battery(seed, trials, max_n);
            out.push_str(&report.to_string());
            if !report.all_passed() {
                return Err(Failure::Negative(out));
            }
        }
        Command::Dot { file } => {
            let p = read_poset(&file)?;
            out.push_str(&to_dot(&p, Some(&Highlight::reducibles(&p))));
        }
    }
    Ok(out)
}
