use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use tward::braid::{from_braiding, to_braiding, BraidKind};
use tward::construct::{
    build_affine, build_block, build_permutational, build_twq, recover_structure, twq_spec_isomorphic,
    BlockFamily, TwqSpec,
};
use tward::enumerate::{dichotomy_report, enumerate_tw_left_quasigroups, BUDGET_ENV};
use tward::groupcat::{automorphism_class_count, counts_row, enumerate_groups, partition_number, q_count, FiniteGroup};
use tward::permgrp::{multiplication_groups, Permutation};
use tward::qcore::{
    canonical_form, classify_structure, cayley_kernel, find_isomorphism, identity_witness, is_congruence,
    kernel_size_report, squaring_kernel, IdentityKind,
};
use tward::{CayleyTable, Error};

#[derive(Parser)]
#[command(name = "tward", version, about = "Twisted Ward left quasigroups and idempotent braidings")]
struct Cli {
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check an identity on a table
    Check {
        file: PathBuf,
        /// rack, rump, tw, ward, rack-div, rump-div or tw-div
        #[arg(long)]
        identity: IdentityKind,
    },
    /// Structure flags and multiplication group orders
    Props { file: PathBuf },
    /// Cayley and squaring kernels of a twisted Ward left quasigroup
    Kernels { file: PathBuf },
    /// Build a table
    Construct {
        #[command(subcommand)]
        builder: Builder,
    },
    /// Recover (group, psi, c) from a twisted Ward quasigroup
    Recover { file: PathBuf },
    /// Decide isomorphism of two tables, or of two presentations with --via-spec
    Iso {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        via_spec: bool,
    },
    /// Build the braiding of a left quasigroup
    Braiding {
        file: PathBuf,
        #[arg(long)]
        kind: Kind,
        /// Check the braid relation and report properties
        #[arg(long)]
        verify: bool,
    },
    /// Groups of order N up to isomorphism
    Groups { n: usize },
    /// q(N), p(N), or the row (ell, q, p)
    Count {
        which: CountKind,
        n: usize,
        /// Seconds allowed for computing ell
        #[arg(long, env = BUDGET_ENV, default_value_t = 600)]
        budget: u64,
    },
    /// Twisted Ward left quasigroups of order N up to isomorphism
    Enumerate {
        n: usize,
        #[arg(long, env = BUDGET_ENV, default_value_t = 600)]
        budget: u64,
        /// Directory for the representative tables and summary.txt
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// For prime P: every twisted Ward left quasigroup is permutational or a quasigroup
    Dichotomy {
        p: usize,
        #[arg(long, env = BUDGET_ENV, default_value_t = 600)]
        budget: u64,
    },
}

#[derive(Subcommand)]
enum Builder {
    /// x*y = c psi(x^-1 y) from a spec file
    Twq { spec: PathBuf },
    /// x*y = phi(x) + psi(y) + c over an abelian group table
    Affine {
        group: PathBuf,
        /// images of phi, space separated
        #[arg(long)]
        phi: String,
        /// images of psi, space separated
        #[arg(long)]
        psi: String,
        #[arg(long, default_value_t = 0)]
        c: usize,
    },
    /// Every row equal to the permutation F
    Perm {
        /// images, space separated
        f: String,
    },
    /// (x,a)*(y,b) = f_x(y,b) from a block family file
    Block { family: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Derived,
    Involutive,
    Idempotent,
}

impl From<Kind> for BraidKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Derived => BraidKind::Derived,
            Kind::Involutive => BraidKind::Involutive,
            Kind::Idempotent => BraidKind::Idempotent,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CountKind {
    Q,
    P,
    Row,
}

/// A verdict line and the report that follows it.
struct Report {
    code: u8,
    verdict: String,
    body: String,
}

impl Report {
    fn new(code: u8, verdict: impl Into<String>) -> Self {
        Report { code, verdict: verdict.into(), body: String::new() }
    }

    fn line(mut self, s: impl AsRef<str>) -> Self {
        self.body.push_str(s.as_ref());
        if !self.body.ends_with('\n') {
            self.body.push('\n');
        }
        self
    }
}

fn failure(e: &Error) -> Report {
    match e {
        Error::IdentityViolation { identity, witness: (x, y, z) } => Report::new(1, "fails")
            .line(format!("identity {identity} fails"))
            .line(format!("witness {x} {y} {z}")),
        Error::Budget { completed, total } => {
            Report::new(3, "budget-exceeded").line(format!("partial: {completed} of {total} work units completed"))
        }
        Error::Consistency(msg) => Report::new(1, "inconsistent").line(msg),
        Error::Structural(msg) => Report::new(2, "structural-error").line(msg),
        other => Report::new(2, "input-error").line(other.to_string()),
    }
}

fn read(path: &Path) -> tward::Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_table(path: &Path) -> tward::Result<CayleyTable> {
    read(path)?.parse()
}

fn budget(secs: u64) -> Option<Duration> {
    Some(Duration::from_secs(secs))
}

fn flag(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn run(command: Command) -> tward::Result<Report> {
    match command {
        Command::Check { file, identity } => {
            let t = read_table(&file)?;
            Ok(match identity_witness(&t, identity)? {
                None => Report::new(0, "holds").line(format!("identity {identity} holds")),
                Some((x, y, z)) => Report::new(1, "fails")
                    .line(format!("identity {identity} fails"))
                    .line(format!("witness {x} {y} {z}")),
            })
        }
        Command::Props { file } => {
            let t = read_table(&file)?;
            let f = classify_structure(&t);
            let mut r = Report::new(0, "ok")
                .line(format!("left_quasigroup {}", flag(f.is_left_quasigroup)))
                .line(format!("quasigroup {}", flag(f.is_quasigroup)))
                .line(format!("permutational {}", flag(f.is_permutational)))
                .line(format!("faithful {}", flag(f.is_faithful)));
            if f.is_left_quasigroup {
                match multiplication_groups(&t) {
                    Ok(g) => {
                        r = r
                            .line(format!("lmlt_order {}", g.lmlt.order()))
                            .line(format!("dis_plus_order {}", g.dis_plus.order()))
                            .line(format!("dis_minus_order {}", g.dis_minus.order()))
                            .line(format!("dis_order {}", g.dis.order()))
                            .line(format!("dis_plus_regular {}", flag(g.dis_plus.is_regular())));
                    }
                    Err(Error::Overflow { cap }) => r = r.line(format!("multiplication groups exceed {cap} elements")),
                    Err(e) => return Err(e),
                }
            }
            Ok(r)
        }
        Command::Kernels { file } => {
            let t = read_table(&file)?;
            let report = kernel_size_report(&t)?;
            let sim = cayley_kernel(&t);
            let equiv = squaring_kernel(&t);
            let sim_congruence = is_congruence(&t, &sim)?;
            let equiv_congruence = is_congruence(&t, &equiv)?;
            let sizes = |v: &[usize]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ");
            let holds = report.all_laws_hold() && equiv_congruence;
            Ok(Report::new(if holds { 0 } else { 1 }, if holds { "holds" } else { "fails" })
                .line(format!("sim_blocks {}", sizes(&report.block_sizes_sim)))
                .line(format!("equiv_blocks {}", sizes(&report.block_sizes_equiv)))
                .line(format!("sim_classes {}", report.sim_classes))
                .line(format!("equiv_classes {}", report.equiv_classes))
                .line(format!("product_law {}", flag(report.product_law_holds)))
                .line(format!("sim_congruence {}", flag(sim_congruence)))
                .line(format!("equiv_congruence {}", flag(equiv_congruence))))
        }
        Command::Construct { builder } => construct(builder),
        Command::Recover { file } => {
            let t = read_table(&file)?;
            let spec = recover_structure(&t)?;
            Ok(Report::new(0, "recovered").line(spec.to_string()))
        }
        Command::Iso { first, second, via_spec } => {
            if via_spec {
                let (a, b) = (read_spec(&first)?, read_spec(&second)?);
                let iso = twq_spec_isomorphic(&a, &b);
                Ok(Report::new(if iso { 0 } else { 1 }, if iso { "isomorphic" } else { "non-isomorphic" })
                    .line(format!("orders {} {}", a.order(), b.order())))
            } else {
                let (a, b) = (read_table(&first)?, read_table(&second)?);
                Ok(match find_isomorphism(&a, &b) {
                    Some(map) => Report::new(0, "isomorphic").line(format!(
                        "map {}",
                        map.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                    )),
                    None => {
                        let mut r = Report::new(1, "non-isomorphic");
                        if a.n() != b.n() {
                            r = r.line(format!("orders differ: {} and {}", a.n(), b.n()));
                        } else {
                            r = r
                                .line("canonical form of the first table:")
                                .line(canonical_form(&a).to_string())
                                .line("canonical form of the second table:")
                                .line(canonical_form(&b).to_string());
                        }
                        r
                    }
                })
            }
        }
        Command::Braiding { file, kind, verify } => {
            let t = read_table(&file)?;
            let b = to_braiding(&t, kind.into())?;
            if !verify {
                return Ok(Report::new(0, "built").line(b.to_string()));
            }
            let p = b.properties();
            let back = from_braiding(&b)? == t;
            let mut r = match b.yb_witness()? {
                None => Report::new(0, "braiding"),
                Some(w) => Report::new(1, "not-braiding").line(format!("witness YB{} {} {} {}", w.law, w.x, w.y, w.z)),
            };
            r = r
                .line(format!("kind {}", BraidKind::from(kind)))
                .line("convention x o y = x\\y")
                .line(format!("derived {}", flag(p.derived)))
                .line(format!("involutive {}", flag(p.involutive)))
                .line(format!("idempotent {}", flag(p.idempotent)))
                .line(format!("left_nondegenerate {}", flag(p.left_nondegenerate)))
                .line(format!("nondegenerate {}", flag(p.nondegenerate)))
                .line(format!("latin {}", flag(p.latin)))
                .line(format!("round_trip {}", flag(back)));
            Ok(r)
        }
        Command::Groups { n } => {
            let groups = enumerate_groups(n)?;
            let mut r = Report::new(0, "ok").line(format!("groups {}", groups.len()));
            for g in &groups {
                r = r.line(format!("# aut_classes {}", automorphism_class_count(g))).line(g.to_string());
            }
            Ok(r)
        }
        Command::Count { which, n, budget: secs } => {
            let line = match which {
                CountKind::Q => format!("n={n} q={}", q_count(n)?),
                CountKind::P => format!("n={n} p={}", partition_number(n)),
                CountKind::Row => counts_row(n, budget(secs))?.to_string(),
            };
            Ok(Report::new(0, "ok").line(line))
        }
        Command::Enumerate { n, budget: secs, out } => {
            let report = enumerate_tw_left_quasigroups(n, budget(secs))?;
            if let Some(dir) = out {
                report.write_to(&dir)?;
            }
            Ok(Report::new(0, "ok").line(report.summary_line()))
        }
        Command::Dichotomy { p, budget: secs } => {
            let d = dichotomy_report(p, budget(secs))?;
            let mut r = Report::new(if d.holds { 0 } else { 1 }, if d.holds { "holds" } else { "fails" }).line(format!(
                "{} {} {} {}",
                d.n,
                d.permutational,
                d.quasigroups,
                d.witnesses.len()
            ));
            for w in &d.witnesses {
                r = r.line("# witness").line(w.to_string());
            }
            Ok(r)
        }
    }
}

/// A presentation file, or a table from which one is recovered.
fn read_spec(path: &Path) -> tward::Result<TwqSpec> {
    let text = read(path)?;
    match text.parse::<TwqSpec>() {
        Ok(spec) => Ok(spec),
        Err(spec_err) => match text.parse::<CayleyTable>() {
            Ok(t) => recover_structure(&t),
            Err(_) => Err(spec_err),
        },
    }
}

fn parse_images(s: &str) -> tward::Result<Vec<usize>> {
    s.split_whitespace()
        .map(|tok| tok.parse::<usize>().map_err(|_| Error::Input(format!("'{tok}' is not an integer"))))
        .collect()
}

fn construct(builder: Builder) -> tward::Result<Report> {
    match builder {
        Builder::Twq { spec } => {
            let spec: TwqSpec = read(&spec)?.parse()?;
            Ok(Report::new(0, "built").line(build_twq(&spec).to_string()))
        }
        Builder::Affine { group, phi, psi, c } => {
            let group = FiniteGroup::from_table(&read_table(&group)?)?;
            let psi = Permutation::from_images(parse_images(&psi)?)?;
            let out = build_affine(&group, &parse_images(&phi)?, &psi, c)?;
            let verdict = if out.twisted_ward { "twisted-ward" } else { "conditions-fail" };
            Ok(Report::new(0, verdict).line(out.table.to_string()))
        }
        Builder::Perm { f } => {
            let f = Permutation::from_images(parse_images(&f)?)?;
            Ok(Report::new(0, "built").line(build_permutational(&f).to_string()))
        }
        Builder::Block { family } => {
            let fam: BlockFamily = read(&family)?.parse()?;
            Ok(match build_block(&fam) {
                Ok(t) => Report::new(0, "built").line(t.to_string()),
                Err(w) => Report::new(1, "rejected").line(format!("witness {} {} {} {}", w.x1, w.x2, w.y, w.b)),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            println!("RESULT: usage-error");
            eprint!("{e}");
            return ExitCode::from(2);
        }
    };
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            println!("RESULT: usage-error");
            eprintln!("cannot configure {k} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let report = run(cli.command).unwrap_or_else(|e| failure(&e));
    let mut out = String::new();
    let _ = writeln!(out, "RESULT: {}", report.verdict);
    out.push_str(&report.body);
    print!("{out}");
    ExitCode::from(report.code)
}
