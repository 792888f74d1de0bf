//! Command implementations behind the `relres` binary.
//!
//! Every command returns an [`Outcome`]: the report text and an exit code
//! (0 success, 1 semantic failure with a printed witness, 2 input error).
//! Reports only depend on their inputs, so identical inputs give
//! byte-identical output.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::congruence::{all_congruences_with_budget, FiniteAlgebra, DEFAULT_BUDGET, ONE, ZERO};
use crate::constructions::{
    direct_product, enumerate, fixture, product_op, Filter, FixtureName, IMP, MUL, STAR,
};
use crate::error::{Error, Result};
use crate::format::{parse, StructureFile};
use crate::lattice::LatticeOps;
use crate::operator::{
    canonical_operators, check_operator_axioms_with_limit, operator_consequences,
    EXHAUSTIVE_SUBSET_LIMIT,
};
use crate::poset::Poset;
use crate::pseudocomplement::{
    classify_with, meet_semidistributivity_witness, sectional_table_poset, synthesize_sectional,
    ClassificationReport, Flag, Synthesis,
};
use crate::residuation::{
    check_divisible, check_rrl, check_variety_v, one_sided_adjointness, residuation_consequences,
    rrl_from_sectional, RrlCandidate, VARIETY_CONCLUSION,
};
use crate::verdict::{AxiomReport, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Check {
        file: PathBuf,
    },
    Synthesize {
        file: PathBuf,
        output: Option<PathBuf>,
    },
    Congruences {
        file: PathBuf,
    },
    Product {
        left: PathBuf,
        right: PathBuf,
        output: Option<PathBuf>,
    },
    Properties {
        file: PathBuf,
    },
    Operators {
        file: PathBuf,
        exhaustive_subsets: bool,
    },
    Enumerate {
        size: usize,
        filter: String,
        labeled: bool,
    },
    Fixture {
        name: String,
    },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Options {
    /// Raises the carrier limits of congruence enumeration and of the
    /// exhaustive subset scan.
    pub budget: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn input_error(e: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: format!("error: {e}\n"),
            code: EXIT_INPUT,
        }
    }
}

pub fn run(cmd: &Command, opts: &Options) -> Outcome {
    match cmd {
        Command::Check { file } => with_file(file, check),
        Command::Synthesize { file, output } => with_file(file, |s| {
            let out = synthesize(s);
            deliver(out, output.as_deref())
        }),
        Command::Congruences { file } => with_file(file, |s| congruences(s, opts)),
        Command::Product {
            left,
            right,
            output,
        } => {
            let (l, r) = match (load(left), load(right)) {
                (Ok(l), Ok(r)) => (l, r),
                (Err(e), _) | (_, Err(e)) => return e,
            };
            deliver(product(&l, &r), output.as_deref())
        }
        Command::Properties { file } => with_file(file, properties),
        Command::Operators {
            file,
            exhaustive_subsets,
        } => with_file(file, |s| operators(s, *exhaustive_subsets, opts)),
        Command::Enumerate {
            size,
            filter,
            labeled,
        } => enumerate_cmd(*size, filter, !labeled),
        Command::Fixture { name } => fixture_cmd(name),
    }
}

fn load(path: &Path) -> Result<StructureFile, Outcome> {
    let text = fs::read_to_string(path)
        .map_err(|e| Outcome::input_error(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| Outcome::input_error(format!("{}: {e}", path.display())))
}

fn with_file(path: &Path, f: impl FnOnce(&StructureFile) -> Outcome) -> Outcome {
    match load(path) {
        Ok(s) => f(&s),
        Err(o) => o,
    }
}

/// Commands producing a structure file either write it to `output` or
/// print it.
enum Produced {
    File {
        summary: String,
        file: StructureFile,
    },
    Done(Outcome),
}

fn deliver(produced: Produced, output: Option<&Path>) -> Outcome {
    match produced {
        Produced::Done(o) => o,
        Produced::File { summary, file } => match output {
            None => Outcome {
                stdout: file.render(),
                code: EXIT_OK,
            },
            Some(path) => match fs::write(path, file.render()) {
                Ok(()) => Outcome {
                    stdout: format!("{summary}\nwrote {}\n", path.display()),
                    code: EXIT_OK,
                },
                Err(e) => Outcome::input_error(format!("{}: {e}", path.display())),
            },
        },
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn flag_line(out: &mut String, poset: &Poset, report: &ClassificationReport, flag: Flag) {
    let Some(value) = report.flag(flag) else {
        return;
    };
    let _ = write!(out, "{flag}: {}", yes_no(value));
    if let Some(w) = report.witness(flag).filter(|_| !value) {
        let _ = write!(out, " (witness {})", poset.fmt_tuple(w));
    }
    out.push('\n');
}

fn poset_of(s: &StructureFile) -> Result<Poset, Outcome> {
    s.poset().map_err(Outcome::input_error)
}

/// Classify the structure; check any `*`, `mul`/`imp` tables it carries.
pub fn check(s: &StructureFile) -> Outcome {
    let poset = match poset_of(s) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let star = s.op(STAR);
    let report = classify_with(&poset, star);
    let mut out = String::new();
    let mut code = EXIT_OK;

    let _ = writeln!(out, "elements: {}", poset.len());
    flag_line(&mut out, &poset, &report, Flag::Lattice);
    let (bottom, top) = poset.bounds();
    let _ = writeln!(out, "top: {}", top.map_or("none", |t| poset.name(t)));
    let _ = writeln!(out, "bottom: {}", bottom.map_or("none", |b| poset.name(b)));
    for flag in [
        Flag::Modular,
        Flag::Distributive,
        Flag::MeetSemidistributive,
        Flag::SectionallyPc,
        Flag::RelativelyPc,
        Flag::StarTableMatches,
    ] {
        flag_line(&mut out, &poset, &report, flag);
    }
    if report.star_table_matches == Some(false) {
        code = EXIT_FAILURE;
    }

    if let (Some(mul), Some(imp)) = (s.op(MUL), s.op(IMP)) {
        let verdict = poset
            .as_lattice()
            .map_err(Error::from)
            .and_then(|l| RrlCandidate::new(l, mul.clone(), imp.clone()));
        match verdict {
            Err(e) => {
                let _ = writeln!(out, "relatively residuated: no ({e})");
                code = EXIT_FAILURE;
            }
            Ok(cand) => {
                let axioms = check_rrl(&cand);
                let _ = writeln!(out, "relatively residuated: {}", yes_no(axioms.all_hold()));
                if !axioms.all_hold() {
                    code = EXIT_FAILURE;
                    for (name, w) in axioms.failures() {
                        let _ = writeln!(out, "  {name}: fails (witness {})", w.render(&poset));
                    }
                }
                let _ = writeln!(
                    out,
                    "divisible: {}",
                    check_divisible(&cand, None).render(&poset)
                );
            }
        }
    }
    Outcome { stdout: out, code }
}

fn synthesize(s: &StructureFile) -> Produced {
    let poset = match poset_of(s) {
        Ok(p) => p,
        Err(o) => return Produced::Done(o),
    };
    let table = match poset.as_lattice() {
        Ok(lattice) => match synthesize_sectional(&lattice) {
            Err(e) => return Produced::Done(failure(format!("synthesis failed: {e}"))),
            Ok(Synthesis::Failed { a, b }) => {
                let mut msg = format!(
                    "synthesis failed at ({},{}): join of solutions of (a ∨ b) ∧ x = b is not a solution",
                    poset.name(a),
                    poset.name(b)
                );
                if let Some(w) = meet_semidistributivity_witness(&lattice) {
                    let _ = write!(
                        msg,
                        "\nnot meet-semidistributive (witness {})",
                        poset.fmt_tuple(&w)
                    );
                }
                return Produced::Done(failure(msg));
            }
            Ok(Synthesis::Total(t)) => t,
        },
        Err(_) => {
            let t = sectional_table_poset(&poset);
            if let Some((a, b)) = t.first_undefined() {
                return Produced::Done(failure(format!(
                    "synthesis failed: no sectional pseudocomplement at ({},{})",
                    poset.name(a),
                    poset.name(b)
                )));
            }
            t
        }
    };
    let mut file = s.clone();
    file.set_op(STAR, table);
    Produced::File {
        summary: format!("synthesized * on {} elements", poset.len()),
        file,
    }
}

fn failure(msg: String) -> Outcome {
    Outcome {
        stdout: msg + "\n",
        code: EXIT_FAILURE,
    }
}

/// The algebra a structure file describes: lattice operations when the
/// order is a lattice, every table in the file, constants `one`/`zero` from
/// the bounds unless the file declares its own.
pub fn algebra_of(s: &StructureFile, poset: &Poset) -> Result<FiniteAlgebra> {
    let mut alg = match poset.as_lattice() {
        Ok(l) => FiniteAlgebra::from_lattice(&l),
        Err(_) => {
            let mut alg = FiniteAlgebra::new(poset.names().to_vec());
            if let Some(t) = poset.top() {
                alg = alg.with_constant(ONE, t)?;
            }
            if let Some(b) = poset.bottom() {
                alg = alg.with_constant(ZERO, b)?;
            }
            alg
        }
    };
    for (name, table) in &s.ops {
        alg = alg.with_op(name, table.clone())?;
    }
    for (name, v) in &s.constants {
        alg = alg.with_constant(name, *v)?;
    }
    Ok(alg)
}

fn congruences(s: &StructureFile, opts: &Options) -> Outcome {
    let poset = match poset_of(s) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let alg = match algebra_of(s, &poset) {
        Ok(a) => a,
        Err(e) => return Outcome::input_error(e),
    };
    let con = match all_congruences_with_budget(&alg, opts.budget.unwrap_or(DEFAULT_BUDGET)) {
        Ok(c) => c,
        Err(e) => return Outcome::input_error(e),
    };
    let names = alg.names();
    let mut out = String::new();
    let mut code = EXIT_OK;
    let op_names: Vec<&str> = alg.ops().iter().map(|(n, _)| n.as_str()).collect();
    let _ = writeln!(out, "operations: {}", op_names.join(" "));
    let _ = writeln!(out, "|Con| = {}", con.len());
    for (i, c) in con.iter().enumerate() {
        let _ = writeln!(out, "  #{i}: {}", c.render(names));
    }
    match con.check_permutable() {
        Ok(()) => out.push_str("permutable: yes\n"),
        Err(w) => {
            code = EXIT_FAILURE;
            let _ = writeln!(
                out,
                "permutable: no (witness #{} ∘ #{} contains ({},{}))",
                w.theta, w.phi, names[w.a], names[w.c]
            );
        }
    }
    match con.check_distributive() {
        Ok(()) => out.push_str("distributive: yes\n"),
        Err(w) => {
            code = EXIT_FAILURE;
            let _ = writeln!(
                out,
                "distributive: no (witness #{},#{},#{})",
                w.theta, w.phi, w.psi
            );
        }
    }
    match con.check_weakly_regular(&alg) {
        Err(e) => {
            let _ = writeln!(out, "weakly regular: n/a ({e})");
        }
        Ok(wr) => {
            match wr.kernel {
                Ok(()) => out.push_str("weakly regular: yes\n"),
                Err(w) => {
                    code = EXIT_FAILURE;
                    let _ = writeln!(
                        out,
                        "weakly regular: no (witness #{} and #{} share the class of 1)",
                        w.theta, w.phi
                    );
                }
            }
            match wr.terms {
                None => {}
                Some(Ok(())) => out.push_str("x → y = y → x = 1 iff x = y: yes\n"),
                Some(Err((x, y))) => {
                    code = EXIT_FAILURE;
                    let _ = writeln!(
                        out,
                        "x → y = y → x = 1 iff x = y: no (witness {},{})",
                        names[x], names[y]
                    );
                }
            }
        }
    }
    Outcome { stdout: out, code }
}

fn product(l: &StructureFile, r: &StructureFile) -> Produced {
    let (p, q) = match (poset_of(l), poset_of(r)) {
        (Ok(p), Ok(q)) => (p, q),
        (Err(o), _) | (_, Err(o)) => return Produced::Done(o),
    };
    let prod = match direct_product(&p, &q) {
        Ok(x) => x,
        Err(e) => return Produced::Done(Outcome::input_error(e)),
    };
    let mut file = StructureFile::from_poset(&prod);
    for (name, left) in &l.ops {
        if let Some(right) = r.op(name) {
            file.ops.push((name.clone(), product_op(left, right)));
        }
    }
    Produced::File {
        summary: format!("product has {} elements", prod.len()),
        file,
    }
}

fn report_section(out: &mut String, title: &str, poset: &Poset, report: &AxiomReport) {
    let _ = writeln!(out, "{title}:");
    for line in report.render(poset).lines() {
        let _ = writeln!(out, "  {line}");
    }
}

fn rrl_candidate(s: &StructureFile, lattice: &LatticeOps) -> Result<Option<RrlCandidate>> {
    if let (Some(mul), Some(imp)) = (s.op(MUL), s.op(IMP)) {
        return RrlCandidate::new(lattice.clone(), mul.clone(), imp.clone()).map(Some);
    }
    let star = match s.op(STAR) {
        Some(t) => t.clone(),
        None => match synthesize_sectional(lattice)? {
            Synthesis::Total(t) => t,
            Synthesis::Failed { .. } => return Ok(None),
        },
    };
    if !star.is_total() {
        return Ok(None);
    }
    rrl_from_sectional(lattice, &star).map(Some)
}

/// Property suites that apply to the structure: residuation consequences,
/// the variety conditions and the one-sided adjointness lemma for lattices;
/// operator residuation consequences for posets with a total `*`.
fn properties(s: &StructureFile) -> Outcome {
    let poset = match poset_of(s) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let mut out = String::new();
    let mut code = EXIT_OK;

    if let Ok(lattice) = poset.as_lattice() {
        match rrl_candidate(s, &lattice) {
            Err(e) => return Outcome::input_error(e),
            Ok(None) => out.push_str("residuation: no total * or mul/imp tables\n"),
            Ok(Some(cand)) => {
                let axioms = check_rrl(&cand);
                report_section(&mut out, "relatively residuated axioms", &poset, &axioms);
                match residuation_consequences(&cand) {
                    Ok(r) => {
                        if !r.all_hold() {
                            code = EXIT_FAILURE;
                        }
                        report_section(&mut out, "residuation consequences", &poset, &r);
                    }
                    Err(e) => {
                        code = EXIT_FAILURE;
                        let _ = writeln!(out, "residuation consequences: skipped ({e})");
                    }
                }
                let variety = check_variety_v(&cand);
                if variety
                    .get(VARIETY_CONCLUSION)
                    .is_some_and(Verdict::is_failure)
                {
                    code = EXIT_FAILURE;
                }
                report_section(&mut out, "variety conditions", &poset, &variety);
                let lemma = one_sided_adjointness(&lattice, cand.mult_table(), cand.imp_table());
                match lemma {
                    Ok(v) => {
                        if v.is_failure() {
                            code = EXIT_FAILURE;
                        }
                        let _ = writeln!(out, "one-sided adjointness lemma: {}", v.render(&poset));
                    }
                    Err(e) => {
                        let _ = writeln!(out, "one-sided adjointness lemma: hypotheses fail ({e})");
                    }
                }
            }
        }
    } else {
        out.push_str("residuation: not a lattice\n");
    }

    let star = s
        .op(STAR)
        .cloned()
        .unwrap_or_else(|| sectional_table_poset(&poset));
    match canonical_operators(&poset, &star) {
        Err(e) => {
            let _ = writeln!(out, "operator residuation: skipped ({e})");
        }
        Ok(op) => match operator_consequences(&op) {
            Ok(r) => {
                if !r.all_hold() {
                    code = EXIT_FAILURE;
                }
                report_section(&mut out, "operator residuation consequences", &poset, &r);
            }
            Err(e) => {
                code = EXIT_FAILURE;
                let _ = writeln!(out, "operator residuation consequences: skipped ({e})");
            }
        },
    }
    Outcome { stdout: out, code }
}

fn operators(s: &StructureFile, exhaustive: bool, opts: &Options) -> Outcome {
    let poset = match poset_of(s) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let star = s
        .op(STAR)
        .cloned()
        .unwrap_or_else(|| sectional_table_poset(&poset));
    let op = match canonical_operators(&poset, &star) {
        Ok(op) => op,
        Err(e) => return failure(format!("cannot build canonical operators: {e}")),
    };
    // the powerset of a carrier beyond ~24 elements is out of reach anyway
    let limit = opts.budget.unwrap_or(EXHAUSTIVE_SUBSET_LIMIT).min(24);
    let axioms = match check_operator_axioms_with_limit(&op, exhaustive, limit) {
        Ok(r) => r,
        Err(e) => return Outcome::input_error(e),
    };
    let mut out = String::new();
    let scope = if exhaustive {
        "all subsets"
    } else {
        "generated family"
    };
    report_section(
        &mut out,
        &format!("operator axioms ({scope})"),
        &poset,
        &axioms,
    );
    if !axioms.all_hold() {
        return Outcome {
            stdout: out,
            code: EXIT_FAILURE,
        };
    }
    let mut code = EXIT_OK;
    match operator_consequences(&op) {
        Ok(r) => {
            if !r.all_hold() {
                code = EXIT_FAILURE;
            }
            report_section(&mut out, "consequences", &poset, &r);
        }
        Err(e) => {
            code = EXIT_FAILURE;
            let _ = writeln!(out, "consequences: skipped ({e})");
        }
    }
    Outcome { stdout: out, code }
}

fn enumerate_cmd(size: usize, filter: &str, dedup: bool) -> Outcome {
    let filter: Filter = match filter.parse() {
        Ok(f) => f,
        Err(e) => return Outcome::input_error(e),
    };
    let catalog = match enumerate(size, filter, dedup) {
        Ok(c) => c,
        Err(e) => return Outcome::input_error(e),
    };
    let mut out = format!("{} structures\n", catalog.len());
    for (i, p) in catalog.iter().enumerate() {
        let covers: Vec<String> = p
            .covers()
            .into_iter()
            .map(|(a, b)| format!("{}<{}", p.name(a), p.name(b)))
            .collect();
        let _ = writeln!(
            out,
            "#{i}: elements: {} covers: {}",
            p.names().join(" "),
            covers.join(" ")
        );
    }
    Outcome {
        stdout: out,
        code: EXIT_OK,
    }
}

fn fixture_cmd(name: &str) -> Outcome {
    let f = match name.parse::<FixtureName>().and_then(fixture) {
        Ok(f) => f,
        Err(e) => return Outcome::input_error(e),
    };
    let mut file = StructureFile::from_poset(&f.poset);
    file.ops = f.tables;
    Outcome {
        stdout: file.render(),
        code: EXIT_OK,
    }
}

/// Structure file for a fixture, including its printed tables.
pub fn fixture_file(name: FixtureName) -> Result<StructureFile> {
    let f = fixture(name)?;
    let mut file = StructureFile::from_poset(&f.poset);
    file.ops = f.tables;
    Ok(file)
}

/// Parse and check in one step, for callers holding text rather than a file.
pub fn check_text(text: &str) -> Outcome {
    match parse(text) {
        Ok(s) => check(&s),
        Err(e) => Outcome::input_error(e),
    }
}
