//! Emission of the four canonical tables. These files are committed under
//! `golden/` and diffed by the test suite, so the output must stay
//! byte-deterministic.

use std::fs;
use std::io;
use std::path::Path;

use detquartic::{
    enumerate_c1_effective, enumerate_c1_noneffective, full_classification, generate_table_a,
    CandidateList, DivisorClass, GramLattice, Outcome,
};
use serde::Serialize;

pub const GOLDEN_FILES: [&str; 4] = [
    "effective-candidates.csv",
    "noneffective-candidates.csv",
    "table-a.csv",
    "main-theorem.json",
];

fn candidate_csv(list: &CandidateList, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str("x,y,label\n");
    for class in &list.classes {
        out.push_str(&format!("{},{},{}\n", class.x, class.y, class));
    }
    out
}

fn table_a_csv() -> String {
    let table = generate_table_a();
    let mut out = String::new();
    out.push_str(
        "# reference presentation lists the c1 groups in descending order (6h down to 0);\n\
         # rows below are in canonical (x, y) lexicographic order\n",
    );
    for warning in &table.deviations {
        out.push_str(&format!("# {}\n", warning.message));
    }
    out.push_str("c1_x,c1_y,c1,d_x,d_y,d,residual_x,residual_y,residual,residual_effective\n");
    for row in &table.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            row.c1.x,
            row.c1.y,
            row.c1,
            row.d.x,
            row.d.y,
            row.d,
            row.residual.x,
            row.residual.y,
            row.residual,
            if row.residual_effective { "y" } else { "n" }
        ));
    }
    out
}

#[derive(Serialize)]
struct MainTheoremEntry {
    c1: DivisorClass,
    c2_set: Vec<i64>,
    zero_locus: Vec<detquartic::ZeroLocus>,
    ulrich: bool,
    citations: Vec<detquartic::ExistenceSource>,
}

#[derive(Serialize)]
struct EliminatedEntry {
    c1: DivisorClass,
    rule: String,
}

#[derive(Serialize)]
struct MainTheoremFile {
    schema_version: u32,
    realized: Vec<MainTheoremEntry>,
    eliminated: Vec<EliminatedEntry>,
    warnings: Vec<detquartic::Warning>,
}

fn main_theorem_json() -> String {
    let classification = full_classification();
    let mut realized = Vec::new();
    let mut eliminated = Vec::new();
    for verdict in &classification.verdicts {
        match &verdict.outcome {
            Outcome::Realized(r) => realized.push(MainTheoremEntry {
                c1: verdict.c1,
                c2_set: r.c2_set.clone(),
                zero_locus: r.zero_locus.clone(),
                ulrich: r.ulrich,
                citations: r.citations.clone(),
            }),
            Outcome::Eliminated { trace } => eliminated.push(EliminatedEntry {
                c1: verdict.c1,
                rule: trace.last().map(|s| s.rule.to_string()).unwrap_or_default(),
            }),
        }
    }
    let file = MainTheoremFile {
        schema_version: crate::envelope::SCHEMA_VERSION,
        realized,
        eliminated,
        warnings: classification.warnings,
    };
    let mut json = serde_json::to_string_pretty(&file).expect("golden json");
    json.push('\n');
    json
}

/// Write the four canonical tables into `out_dir`, returning the file names.
pub fn emit_golden_tables(out_dir: &Path) -> io::Result<Vec<String>> {
    fs::create_dir_all(out_dir)?;
    let lattice = GramLattice::determinantal_quartic();
    let effective = enumerate_c1_effective(32, &lattice).expect("default box");
    let noneffective = enumerate_c1_noneffective(32, &lattice).expect("default box");

    let contents = [
        candidate_csv(
            &effective,
            &["canonical (x, y) lexicographic order, which is also the reference presentation order"],
        ),
        candidate_csv(
            &noneffective,
            &[
                "reference presentation order: -h, 3A-2h, A-h, 2A-h, 2h-A, 5h-2A, 7h-3A",
                "rows below are in canonical (x, y) lexicographic order",
            ],
        ),
        table_a_csv(),
        main_theorem_json(),
    ];
    for (name, body) in GOLDEN_FILES.iter().zip(contents) {
        fs::write(out_dir.join(name), body)?;
    }
    Ok(GOLDEN_FILES.iter().map(|s| s.to_string()).collect())
}
