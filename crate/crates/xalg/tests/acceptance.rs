//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`; a failed assertion marks the
//! criterion as failed either way).

use std::collections::BTreeSet;
use std::process::Command;
use std::sync::Arc;
use xalg::algebra::{augmentation_ideal, group_algebra, Algebra};
use xalg::cat1alg::{cat1_by_endomorphisms, Cat1Alg};
use xalg::census::{
    compute_row, cyclic_end_oracle, elementary_abelian_gf2_end_oracle, format_csv, paper_table,
    run_census, session_replay, CensusFilter, PaperRow,
};
use xalg::equiv::{roundtrip_iso_cat1, roundtrip_iso_xmod};
use xalg::ffield::FieldSpec;
use xalg::groups;
use xalg::homs::{all_homs, idempotent_endos, AlgHom};
use xalg::xmodalg::{xmod_by_ideal, XModAlg};
use xalg::DEFAULT_MAX_ELEMENTS;

fn verdict(criterion: &str, pass: bool, detail: &str) {
    println!(
        "ACCEPTANCE {criterion}: {}{}",
        if pass { "PASS" } else { "FAIL" },
        if detail.is_empty() {
            String::new()
        } else {
            format!(" ({detail})")
        }
    );
    assert!(pass, "{criterion}: {detail}");
}

/// The rows required by criterion 1, with their (end, ie, cat1) triples.
#[allow(clippy::type_complexity)]
fn criterion1_rows() -> Vec<(&'static str, (u32, u32), (u64, u64, u64))> {
    vec![
        ("GF(2)", (1, 1), (2, 2, 1)),
        ("GF(3)", (1, 1), (2, 2, 1)),
        ("GF(2)", (2, 1), (3, 3, 2)),
        ("GF(3)", (2, 1), (9, 6, 3)),
        ("GF(4)", (2, 1), (5, 3, 2)),
        ("GF(2)", (3, 1), (8, 5, 1)),
        ("GF(3)", (3, 1), (10, 3, 1)),
        ("GF(4)", (3, 1), (64, 23, 7)),
        ("GF(2)", (4, 1), (9, 3, 1)),
        ("GF(3)", (4, 1), (45, 18, 3)),
        ("GF(2)", (4, 2), (65, 15, 13)),
        ("GF(2)", (5, 1), (12, 5, 1)),
        ("GF(2)", (6, 2), (39, 14, 4)),
        ("GF(2)", (9, 1), (80, 17, 1)),
        ("GF(2)", (9, 2), (20000, 809, 73)),
    ]
}

fn find_row(field: &str, id: (u32, u32)) -> PaperRow {
    paper_table()
        .into_iter()
        .find(|r| r.field == field && r.gap_id == id)
        .expect("row present")
}

#[test]
fn criterion_1_table_reproduction() {
    let mut failures = Vec::new();
    for (field, id, (end, ie, cat1)) in criterion1_rows() {
        let row = compute_row(&find_row(field, id), DEFAULT_MAX_ELEMENTS).unwrap();
        let c = row.computed.expect("row computed");
        if (c.end, c.ie, c.cat1) != (end, ie, cat1) || !row.flags.is_clean() {
            failures.push(format!(
                "{field}/{id:?}: got ({}, {}, {}), want ({end}, {ie}, {cat1})",
                c.end, c.ie, c.cat1
            ));
        }
    }
    verdict(
        "criterion 1 (table reproduction, 15 rows)",
        failures.is_empty(),
        &failures.join("; "),
    );
}

#[test]
fn criterion_2_full_table_with_flags() {
    let rows = run_census(&CensusFilter::default(), DEFAULT_MAX_ELEMENTS).unwrap();
    let mut failures = Vec::new();
    if rows.len() != 45 {
        failures.push(format!("expected 45 rows, got {}", rows.len()));
    }
    for r in &rows {
        let key = (r.paper.field, r.paper.gap_id);
        let expected_flags: &[&str] = match key {
            ("GF(4)", (7, 1)) => &["size_mismatch"],
            ("GF(2)", (8, 5)) => &["end_mismatch", "ie_mismatch", "cat1_mismatch"],
            _ => &[],
        };
        if r.flags.list() != expected_flags {
            failures.push(format!("{key:?}: flags {:?}", r.flags.list()));
        }
    }
    // the acceptance condition on the disputed values is agreement with the
    // independent closed-form oracles, not with the printed numbers
    let eight_five = rows
        .iter()
        .find(|r| r.paper.field == "GF(2)" && r.paper.gap_id == (8, 5))
        .and_then(|r| r.computed);
    if eight_five.map(|c| c.end) != Some(elementary_abelian_gf2_end_oracle(3)) {
        failures.push("GF(2)/[8,5] end disagrees with the closed-form oracle".into());
    }
    for r in &rows {
        let q = FieldSpec::parse(r.paper.field).unwrap().order;
        let n = r.paper.gap_id.0 as u64;
        let cyclic = groups::catalog(r.paper.gap_id).unwrap().name == format!("C{n}");
        if cyclic {
            if let (Some(oracle), Some(c)) = (cyclic_end_oracle(q, n), r.computed) {
                if oracle != c.end {
                    failures.push(format!(
                        "{}/{:?}: enumeration {} vs cyclic oracle {}",
                        r.paper.field, r.paper.gap_id, c.end, oracle
                    ));
                }
            }
        }
    }
    verdict(
        "criterion 2 (full table with mismatch flags and oracles)",
        failures.is_empty(),
        &failures.join("; "),
    );
}

#[test]
fn criterion_3_size_column() {
    let mut failures = Vec::new();
    for r in paper_table() {
        let q = FieldSpec::parse(r.field).unwrap().order as u128;
        let a = group_algebra(
            &FieldSpec::parse(r.field).unwrap(),
            &groups::catalog(r.gap_id).unwrap(),
        );
        if a.element_count() != q.pow(r.gap_id.0) {
            failures.push(format!("{}/{:?}", r.field, r.gap_id));
        }
    }
    verdict(
        "criterion 3 (size_fg = |F|^|G| on all 45 rows)",
        failures.is_empty(),
        &failures.join("; "),
    );
}

/// Brute force: every matrix over the target whose columns define a map
/// that is multiplicative on all basis pairs.
fn brute_force_homs(src: &Arc<Algebra>, tgt: &Arc<Algebra>) -> BTreeSet<Vec<Vec<u16>>> {
    let q = src.field.order;
    let cells = src.dim * tgt.dim;
    let total = (q as u128).pow(cells as u32);
    let mut out = BTreeSet::new();
    for code in 0..total {
        let mut c = code;
        let mut cols = vec![vec![0u16; tgt.dim]; src.dim];
        for col in cols.iter_mut() {
            for entry in col.iter_mut() {
                *entry = (c % q as u128) as u16;
                c /= q as u128;
            }
        }
        let apply = |v: &[u16]| -> Vec<u16> {
            let mut out = tgt.zero_vec();
            for (j, &coef) in v.iter().enumerate() {
                out = tgt.add_vec(&out, &tgt.scale_vec(coef, &cols[j]));
            }
            out
        };
        let mut ok = true;
        'pairs: for i in 0..src.dim {
            for j in 0..src.dim {
                let lhs = apply(&src.mul_vec(&src.basis_vec(i), &src.basis_vec(j)));
                let rhs = tgt.mul_vec(&cols[i], &cols[j]);
                if lhs != rhs {
                    ok = false;
                    break 'pairs;
                }
            }
        }
        if ok {
            out.insert(cols);
        }
    }
    out
}

#[test]
fn criterion_4_hom_enumeration_oracle() {
    let mut failures = Vec::new();
    for field in ["GF(2)", "GF(3)"] {
        let f = FieldSpec::parse(field).unwrap();
        let algebras: Vec<Arc<Algebra>> = [(1, 1), (2, 1), (3, 1)]
            .iter()
            .map(|&id| group_algebra(&f, &groups::catalog(id).unwrap()))
            .collect();
        for src in &algebras {
            for tgt in &algebras {
                let fast: BTreeSet<Vec<Vec<u16>>> = all_homs(src, tgt, DEFAULT_MAX_ELEMENTS)
                    .unwrap()
                    .into_iter()
                    .map(|h| h.cols)
                    .collect();
                let brute = brute_force_homs(src, tgt);
                if fast != brute {
                    failures.push(format!(
                        "{field} {} -> {}: {} vs brute {}",
                        src.name,
                        tgt.name,
                        fast.len(),
                        brute.len()
                    ));
                }
            }
        }
    }
    verdict(
        "criterion 4 (all_homs matches brute-force matrix filtering)",
        failures.is_empty(),
        &failures.join("; "),
    );
}

#[test]
fn criterion_5_session_replay() {
    let checks = session_replay();
    let failures: Vec<String> = checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect();
    verdict(
        &format!("criterion 5 (session replay, {} checks)", checks.len()),
        failures.is_empty(),
        &failures.join("; "),
    );
}

/// All xmod_by_ideal crossed modules over GF(2) and GF(3) for groups of
/// order at most 6, built from the augmentation ideal.
fn xmod_corpus() -> Vec<XModAlg> {
    let mut out = Vec::new();
    for field in ["GF(2)", "GF(3)"] {
        let f = FieldSpec::parse(field).unwrap();
        for id in [
            (1, 1),
            (2, 1),
            (3, 1),
            (4, 1),
            (4, 2),
            (5, 1),
            (6, 1),
            (6, 2),
        ] {
            let a = group_algebra(&f, &groups::catalog(id).unwrap());
            let i = augmentation_ideal(&a).unwrap();
            if i.dim() > 0 || id == (1, 1) {
                out.push(xmod_by_ideal(&a, &i).unwrap());
            }
        }
    }
    out
}

/// All valid cat1 structures on FG for one criterion-1 row, materialized as
/// Cat1Alg values from the idempotent endomorphism pairs.
fn cat1_corpus_for(field: &str, id: (u32, u32)) -> Vec<Cat1Alg> {
    let a = group_algebra(
        &FieldSpec::parse(field).unwrap(),
        &groups::catalog(id).unwrap(),
    );
    let (_, idems) = idempotent_endos(&a, DEFAULT_MAX_ELEMENTS).unwrap();
    // pairs can only be valid within an image class
    let mut by_image: std::collections::BTreeMap<Vec<Vec<u16>>, Vec<&AlgHom>> =
        std::collections::BTreeMap::new();
    for h in &idems {
        by_image.entry(h.image().basis).or_default().push(h);
    }
    let mut out = Vec::new();
    for members in by_image.values() {
        for s in members {
            for t in members {
                if let Ok(c) = cat1_by_endomorphisms(s, t) {
                    out.push(c);
                }
            }
        }
    }
    out
}

#[test]
fn criterion_6_axiom_suite() {
    let mut failures = Vec::new();
    let mut xmods = 0;
    for x in xmod_corpus() {
        xmods += 1;
        if let Err(e) = x.check() {
            failures.push(format!("{}: {e}", x.name));
        }
    }
    let mut cat1s = 0;
    for (field, id, (_, _, expect_cat1)) in criterion1_rows() {
        let corpus = cat1_corpus_for(field, id);
        if corpus.len() as u64 != expect_cat1 {
            failures.push(format!(
                "{field}/{id:?}: materialized {} cat1s, census says {expect_cat1}",
                corpus.len()
            ));
        }
        for c in corpus {
            cat1s += 1;
            if let Err(e) = c.check() {
                failures.push(format!("{field}/{id:?} {}: {e}", c.name));
            }
        }
    }
    verdict(
        &format!("criterion 6 (axiom suite: {xmods} crossed modules, {cat1s} cat1-algebras)"),
        failures.is_empty(),
        &failures.join("; "),
    );
}

#[test]
fn criterion_7_equivalence_roundtrip() {
    let mut failures = Vec::new();
    let mut total = 0;
    for x in xmod_corpus() {
        total += 1;
        let x = Arc::new(x);
        match roundtrip_iso_xmod(&x) {
            Ok((back, iso)) => {
                if back.size() != x.size() || !iso.is_bijective() {
                    failures.push(format!("{}: roundtrip not isomorphic", x.name));
                }
            }
            Err(e) => failures.push(format!("{}: {e}", x.name)),
        }
    }
    for (field, id, _) in criterion1_rows() {
        for c in cat1_corpus_for(field, id) {
            total += 1;
            let c = Arc::new(c);
            match roundtrip_iso_cat1(&c) {
                Ok((back, iso)) => {
                    if back.size() != c.size() || !iso.is_bijective() {
                        failures.push(format!("{field}/{id:?} {}: not isomorphic", c.name));
                    }
                }
                Err(e) => failures.push(format!("{field}/{id:?} {}: {e}", c.name)),
            }
        }
    }
    verdict(
        &format!("criterion 7 (equivalence roundtrip on {total} objects)"),
        failures.is_empty(),
        &failures.join("; "),
    );
}

#[test]
fn criterion_8_worker_count_determinism() {
    let bin = env!("CARGO_BIN_EXE_xalg");
    let mut args = vec!["census".to_string()];
    for (_, id, _) in criterion1_rows() {
        args.push("--rows".into());
        args.push(format!("{},{}", id.0, id.1));
    }
    let mut outputs = Vec::new();
    for jobs in ["1", "4", "8"] {
        let out = Command::new(bin)
            .args(&args)
            .args(["--jobs", jobs])
            .output()
            .expect("census run");
        assert!(out.status.success(), "census --jobs {jobs} failed");
        outputs.push(out.stdout);
    }
    let identical = outputs[0] == outputs[1] && outputs[1] == outputs[2];
    // and the output must be the expected CSV, not merely self-consistent
    let expected = {
        let filter = CensusFilter {
            rows: criterion1_rows().iter().map(|&(_, id, _)| id).collect(),
            ..Default::default()
        };
        format_csv(&run_census(&filter, DEFAULT_MAX_ELEMENTS).unwrap())
    };
    let matches_library = outputs[0] == expected.as_bytes();
    verdict(
        "criterion 8 (byte-identical CSV for --jobs 1/4/8)",
        identical && matches_library,
        if identical { "" } else { "outputs differ" },
    );
}
