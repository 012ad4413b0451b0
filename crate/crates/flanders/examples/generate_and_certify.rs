//! Pipeline demo: deterministically generate a valid triple, certify it,
//! serialize the certificate, and re-verify it from the file — the same
//! round trip the CLI performs.
//!
//! ```bash
//! cargo run -p flanders --example generate_and_certify
//! ```

use flanders::cli::{
    cmd_verify_cert, write_certificate_document, CertificateDocument,
};
use flanders::instances::{random_triple, GenConfig};
use flanders::similarity::drazin_similarity_certificate;

fn main() {
    let cfg = GenConfig { rank_deficit: 1, ..GenConfig::new(4, 2024) };
    let triple = random_triple(&cfg).unwrap();
    println!("generated a deterministic valid triple (n = {}, seed = {})", cfg.n, cfg.seed);
    println!("A:\n{}\nB:\n{}\nC:\n{}", triple.a(), triple.b(), triple.c());

    let (cert, _, _) = drazin_similarity_certificate(&triple);
    println!("(AC)^D ~ (BA)^D certificate verifies in memory: {}", cert.verify());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("certificate.json");
    let mut meta = serde_json::Map::new();
    meta.insert("seed".into(), cfg.seed.into());
    let doc = CertificateDocument::from_certificate(&cert, meta);
    write_certificate_document(&path, &doc).unwrap();
    println!("wrote {}", path.display());

    let exit = cmd_verify_cert(&path);
    println!("verify-cert exit code: {exit}");
    assert_eq!(exit, 0);
}
