//! Command-line front door: parse matrix files, run the operations, emit and
//! verify certificate files.
//!
//! File formats are JSON with rationals as canonical strings (`"p"` or
//! `"p/q"`, `q > 0`, lowest terms) — floats cannot represent `1/3` and would
//! silently break exactness. Exit codes are a fixed contract:
//!
//! * `0` — the computation succeeded / the checked claim holds
//! * `1` — the claim is verifiably false (unequal rank sequences, a tampered
//!   certificate)
//! * `2` — a precondition is violated (non-square input, `ABA != ACA`, no
//!   group inverse, power below the index, invalid generator config)
//! * `3` — I/O or parse failure
//!
//! Distinguishing `1` from `2` lets scripts separate "the theorem says no"
//! from "bad input". All commands print to standard output; files are written
//! only when an explicit output path is given.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gen_inverse::{drazin, group_inverse};
use crate::instances::{random_triple, GenConfig};
use crate::matrix::Matrix;
use crate::similarity::{
    drazin_similarity_certificate, full_similarity, group_similarity_certificate,
    power_similarity, rank_sequence, validate_triple, Relation, SimilarityCertificate,
    SimilarityOutcome,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

/// On-disk matrix: shape plus a 2-D array of rational strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixDocument {
    pub fn from_matrix(m: &Matrix) -> Self {
        let entries = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect())
            .collect();
        MatrixDocument { rows: m.rows(), cols: m.cols(), entries }
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        if self.entries.len() != self.rows {
            return Err(Error::Parse(format!(
                "document declares {} rows but has {}",
                self.rows,
                self.entries.len()
            )));
        }
        let mut rows = Vec::with_capacity(self.rows);
        for row in &self.entries {
            if row.len() != self.cols {
                return Err(Error::Parse(format!(
                    "document declares {} cols but a row has {}",
                    self.cols,
                    row.len()
                )));
            }
            rows.push(row.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>()?);
        }
        Matrix::from_rows(rows)
    }
}

/// Output of the `drazin` command.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DrazinDocument {
    pub index: usize,
    pub inverse: MatrixDocument,
}

/// Self-contained certificate file: verification needs only the multiplication
/// in [`SimilarityCertificate::verify`], never a recomputation of the
/// construction. `meta` is free-form provenance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub relation: String,
    pub u: MatrixDocument,
    pub u_inv: MatrixDocument,
    pub lhs: MatrixDocument,
    pub rhs: MatrixDocument,
    #[serde(default)]
    pub meta: serde_json::Map<String, serde_json::Value>,
}

impl CertificateDocument {
    pub fn from_certificate(
        cert: &SimilarityCertificate,
        meta: serde_json::Map<String, serde_json::Value>,
    ) -> Self {
        CertificateDocument {
            relation: cert.relation.as_str().to_string(),
            u: MatrixDocument::from_matrix(&cert.u),
            u_inv: MatrixDocument::from_matrix(&cert.u_inv),
            lhs: MatrixDocument::from_matrix(&cert.lhs),
            rhs: MatrixDocument::from_matrix(&cert.rhs),
            meta,
        }
    }

    pub fn to_certificate(&self) -> Result<SimilarityCertificate> {
        Ok(SimilarityCertificate {
            u: self.u.to_matrix()?,
            u_inv: self.u_inv.to_matrix()?,
            lhs: self.lhs.to_matrix()?,
            rhs: self.rhs.to_matrix()?,
            relation: Relation::parse(&self.relation)?,
        })
    }
}

pub fn read_matrix(path: &Path) -> Result<Matrix> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let doc: MatrixDocument = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    doc.to_matrix()
}

pub fn write_matrix(path: &Path, m: &Matrix) -> Result<()> {
    let doc = MatrixDocument::from_matrix(m);
    let text = serde_json::to_string_pretty(&doc).expect("document serializes");
    fs::write(path, text + "\n").map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn read_certificate(path: &Path) -> Result<SimilarityCertificate> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let doc: CertificateDocument = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    doc.to_certificate()
}

pub fn write_certificate_document(path: &Path, doc: &CertificateDocument) -> Result<()> {
    let text = serde_json::to_string_pretty(doc).expect("document serializes");
    fs::write(path, text + "\n").map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Exit code for an error that escaped a command: parse problems are 3,
/// everything else is a violated precondition.
fn error_exit(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        _ => EXIT_PRECONDITION,
    }
}

fn fail(e: &Error) -> i32 {
    eprintln!("error: {e}");
    error_exit(e)
}

pub fn cmd_drazin(input: &Path) -> i32 {
    let run = || -> Result<DrazinDocument> {
        let a = read_matrix(input)?;
        let d = drazin(&a)?;
        Ok(DrazinDocument { index: d.index, inverse: MatrixDocument::from_matrix(&d.inverse) })
    };
    match run() {
        Ok(doc) => {
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializes"));
            EXIT_OK
        }
        Err(e) => fail(&e),
    }
}

pub fn cmd_group(input: &Path) -> i32 {
    let run = || -> Result<MatrixDocument> {
        let a = read_matrix(input)?;
        Ok(MatrixDocument::from_matrix(&group_inverse(&a)?))
    };
    match run() {
        Ok(doc) => {
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializes"));
            EXIT_OK
        }
        Err(e) => fail(&e),
    }
}

pub fn cmd_index(input: &Path) -> i32 {
    let run = || -> Result<usize> { crate::decomposition::index(&read_matrix(input)?) };
    match run() {
        Ok(k) => {
            println!("{k}");
            EXIT_OK
        }
        Err(e) => fail(&e),
    }
}

pub fn cmd_check_triple(a: &Path, b: &Path, c: &Path) -> i32 {
    let load = || -> Result<(Matrix, Matrix, Matrix)> {
        Ok((read_matrix(a)?, read_matrix(b)?, read_matrix(c)?))
    };
    let (a, b, c) = match load() {
        Ok(ms) => ms,
        Err(e) => return fail(&e),
    };
    match validate_triple(a, b, c) {
        Ok(_) => {
            println!("ok: ABA = ACA");
            EXIT_OK
        }
        // the checked claim itself is false, not a precondition
        Err(e @ Error::ConstraintViolated { .. }) => {
            println!("violated: {e}");
            EXIT_FALSE
        }
        Err(e) => fail(&e),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CertifyMode {
    Group,
    Drazin,
    Full,
    Power,
}

pub fn cmd_certify(
    a: &Path,
    b: &Path,
    c: &Path,
    mode: CertifyMode,
    s: Option<usize>,
    out: Option<&Path>,
) -> i32 {
    let load = || -> Result<(Matrix, Matrix, Matrix)> {
        Ok((read_matrix(a)?, read_matrix(b)?, read_matrix(c)?))
    };
    let (ma, mb, mc) = match load() {
        Ok(ms) => ms,
        Err(e) => return fail(&e),
    };
    let triple = match validate_triple(ma, mb, mc) {
        Ok(t) => t,
        Err(e) => return fail(&e),
    };

    let cert = match mode {
        CertifyMode::Group => match group_similarity_certificate(&triple) {
            Ok((cert, _, _)) => cert,
            Err(e) => return fail(&e),
        },
        CertifyMode::Drazin => drazin_similarity_certificate(&triple).0,
        CertifyMode::Full => match full_similarity(&triple) {
            SimilarityOutcome::Similar(cert) => *cert,
            SimilarityOutcome::NotSimilar(w) => {
                println!(
                    "not similar: rank((AC)^{}) = {} but rank((BA)^{}) = {}",
                    w.witness_power, w.rank_lhs, w.witness_power, w.rank_rhs
                );
                return EXIT_FALSE;
            }
        },
        CertifyMode::Power => {
            let Some(s) = s else {
                return fail(&Error::InvalidConfig("--s is required for mode power".into()));
            };
            match power_similarity(&triple, s) {
                Ok(cert) => cert,
                Err(e) => return fail(&e),
            }
        }
    };

    let mut meta = serde_json::Map::new();
    meta.insert("tool".into(), format!("flanders {}", env!("CARGO_PKG_VERSION")).into());
    meta.insert(
        "inputs".into(),
        serde_json::json!([a.display().to_string(), b.display().to_string(), c.display().to_string()]),
    );
    if let Some(s) = s {
        meta.insert("s".into(), s.into());
    }
    let doc = CertificateDocument::from_certificate(&cert, meta);
    println!("{}", serde_json::to_string_pretty(&doc).expect("serializes"));
    if let Some(out) = out {
        if let Err(e) = write_certificate_document(out, &doc) {
            return fail(&e);
        }
    }
    EXIT_OK
}

pub fn cmd_rank_seq(a: &Path, b: &Path, c: &Path) -> i32 {
    let load = || -> Result<(Matrix, Matrix, Matrix)> {
        Ok((read_matrix(a)?, read_matrix(b)?, read_matrix(c)?))
    };
    let (ma, mb, mc) = match load() {
        Ok(ms) => ms,
        Err(e) => return fail(&e),
    };
    let triple = match validate_triple(ma, mb, mc) {
        Ok(t) => t,
        Err(e) => return fail(&e),
    };
    let (ac_ranks, ba_ranks) = rank_sequence(&triple);
    println!("k rank(AC)^k rank(BA)^k");
    let mut witness = None;
    for (k, (ra, rb)) in ac_ranks.iter().zip(&ba_ranks).enumerate() {
        let marker = if ra != rb && witness.is_none() {
            witness = Some(k + 1);
            "  <- first mismatch"
        } else {
            ""
        };
        println!("{} {ra} {rb}{marker}", k + 1);
    }
    match witness {
        None => EXIT_OK,
        Some(_) => EXIT_FALSE,
    }
}

pub fn cmd_gen(n: usize, seed: u64, rank_deficit: usize, bound: u64, outdir: &Path) -> i32 {
    let cfg = GenConfig { n, seed, entry_bound: bound, rank_deficit, max_rejects: 64 };
    if let Err(e) = cfg.validate() {
        return fail(&e);
    }
    let triple = match random_triple(&cfg) {
        Ok(t) => t,
        Err(e) => return fail(&e),
    };
    if let Err(e) = fs::create_dir_all(outdir) {
        return fail(&Error::Parse(format!("{}: {e}", outdir.display())));
    }
    for (name, m) in [("a.json", triple.a()), ("b.json", triple.b()), ("c.json", triple.c())] {
        let path = outdir.join(name);
        if let Err(e) = write_matrix(&path, m) {
            return fail(&e);
        }
        println!("wrote {}", path.display());
    }
    EXIT_OK
}

pub fn cmd_verify_cert(cert: &Path) -> i32 {
    match read_certificate(cert) {
        Ok(cert) => {
            if cert.verify() {
                println!("certificate verifies: {}", cert.relation.as_str());
                EXIT_OK
            } else {
                println!("certificate FAILED verification");
                EXIT_FALSE
            }
        }
        Err(e) => fail(&e),
    }
}

/// Exact Drazin and group inverses of rational matrices, with verifiable
/// similarity certificates for products sharing the `ABA = ACA` constraint.
#[derive(Debug, Parser)]
#[command(name = "flanders", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Drazin inverse and index of a square matrix
    Drazin { input: PathBuf },
    /// Group inverse of a square matrix with index at most 1
    Group { input: PathBuf },
    /// Index: the least k with rank(A^(k+1)) = rank(A^k)
    Index { input: PathBuf },
    /// Check the constraint ABA = ACA for three matrices
    CheckTriple { a: PathBuf, b: PathBuf, c: PathBuf },
    /// Construct a similarity certificate for a valid triple
    Certify {
        a: PathBuf,
        b: PathBuf,
        c: PathBuf,
        /// Which similarity to certify
        #[arg(long, value_enum)]
        mode: CertifyMode,
        /// Power for mode `power`
        #[arg(long)]
        s: Option<usize>,
        /// Also write the certificate to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print rank((AC)^k) and rank((BA)^k) for k = 1..n
    RankSeq { a: PathBuf, b: PathBuf, c: PathBuf },
    /// Generate a deterministic valid triple as a.json, b.json, c.json
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Target rank deficiency of A
        #[arg(long, default_value_t = 0)]
        rank_deficit: usize,
        /// Bound on numerators and denominators of generated entries
        #[arg(long, default_value_t = 3)]
        bound: u64,
        #[arg(long)]
        outdir: PathBuf,
    },
    /// Verify a certificate file by exact multiplication alone
    VerifyCert { cert: PathBuf },
}

fn dispatch(cli: Cli) -> i32 {
    match cli.command {
        Command::Drazin { input } => cmd_drazin(&input),
        Command::Group { input } => cmd_group(&input),
        Command::Index { input } => cmd_index(&input),
        Command::CheckTriple { a, b, c } => cmd_check_triple(&a, &b, &c),
        Command::Certify { a, b, c, mode, s, out } => {
            cmd_certify(&a, &b, &c, mode, s, out.as_deref())
        }
        Command::RankSeq { a, b, c } => cmd_rank_seq(&a, &b, &c),
        Command::Gen { n, seed, rank_deficit, bound, outdir } => {
            cmd_gen(n, seed, rank_deficit, bound, &outdir)
        }
        Command::VerifyCert { cert } => cmd_verify_cert(&cert),
    }
}

/// Entry point for the binary: parses `std::env::args`.
pub fn run() -> i32 {
    run_from(std::env::args())
}

/// Testable entry point; returns the process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(cli),
        Err(e) => {
            // help and version are successful exits, usage errors are not
            let code = if e.use_stderr() { EXIT_PRECONDITION } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}
