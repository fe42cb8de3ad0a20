mod common;

use common::{both_bracketings, nf, table_rows};
use pcgroup::consistency::{
    check_consistency, consistency_triples, run_triples, unrestricted_triples,
};
use pcgroup::families::{build_family, x, y, Epsilon, FamilySpec, Z};
use pcgroup::pc::{NormalWord, PcPresentation};
use rayon::prelude::*;

#[test]
fn normal_form_table_for_n_four() {
    let n = 4;
    for eps in Epsilon::all() {
        let pres = build_family(FamilySpec::new(n, eps).unwrap());
        let rows = table_rows(&pres, n, eps.bits());
        // 4 + 6(n-2) + 12 + 6(n-2) + 4 rows across the 15 row shapes
        assert_eq!(rows.len(), 20 + 12 * (n - 2));
        for (a, b, c, expected) in rows {
            let (left, right) = both_bracketings(&pres, a, b, c);
            let label = format!(
                "eps {eps} ({}, {}, {})",
                pres.names()[a],
                pres.names()[b],
                pres.names()[c]
            );
            assert_eq!(
                pres.display(&left).to_string(),
                pres.display(&expected).to_string(),
                "{label} (ab)c"
            );
            assert_eq!(
                pres.display(&right).to_string(),
                pres.display(&expected).to_string(),
                "{label} a(bc)"
            );
        }
    }
}

#[test]
fn y1_times_ys_row_reads_as_printed_for_s_above_one() {
    // for s >= 2 the row (y_s, x_3, x_1) is literally x_1 x_3 y_1 y_s
    let pres = build_family(FamilySpec::new(4, Epsilon([0; 4])).unwrap());
    let (left, _) = both_bracketings(&pres, y(2), x(3), x(1));
    assert_eq!(
        left,
        nf(&pres, &[(x(1), 1), (x(3), 1), (y(1), 1), (y(2), 1)])
    );
}

#[test]
fn omitted_triples_hold() {
    // triples through the central z, or with two y's, agree without being listed
    for n in 1..=5 {
        for eps in Epsilon::all() {
            let pres = build_family(FamilySpec::new(n, eps).unwrap());
            let ys: Vec<usize> = (1..=n).map(y).collect();
            let mut triples = Vec::new();
            for a in 0..pres.ngens() {
                for b in 0..pres.ngens() {
                    for c in 0..pres.ngens() {
                        let with_z = [a, b, c].contains(&Z);
                        let two_ys = [a, b, c].iter().filter(|g| ys.contains(g)).count() >= 2;
                        if with_z || two_ys {
                            triples.push((a, b, c));
                        }
                    }
                }
            }
            for (a, b, c) in triples {
                let (l, r) = both_bracketings(&pres, a, b, c);
                assert_eq!(l, r, "n {n} eps {eps} ({a},{b},{c})");
            }
        }
    }
}

#[test]
fn families_pass_weighted_and_unrestricted_tests() {
    for n in 1..=8 {
        for eps in Epsilon::all() {
            let pres = build_family(FamilySpec::new(n, eps).unwrap());
            let r = check_consistency(&pres, n as u32 + 1).unwrap();
            assert!(r.consistent, "n {n} eps {eps}: {:?}", r.failures.first());
            assert!(r.triples_checked == consistency_triples(&pres, n as u32 + 1).len());
            if n <= 4 {
                assert!(run_triples(&pres, &unrestricted_triples(&pres)).consistent);
            }
        }
    }
}

// Ground truth: the collected product is associative. It suffices to test
// (ab)x_k = a(b x_k) for normal words a, b and pc-generators x_k.
fn associative(pres: &PcPresentation) -> bool {
    let n = pres.ngens();
    let elems: Vec<NormalWord> = (0..1u32 << n)
        .map(|m| {
            let exps: Vec<u8> = (0..n).map(|k| (m >> (n - 1 - k) & 1) as u8).collect();
            NormalWord::from_exponents(exps)
        })
        .collect();
    let gens: Vec<NormalWord> = (0..n).map(|k| pres.generator(k)).collect();
    elems.par_iter().all(|a| {
        elems.iter().all(|b| {
            let ab = pres.multiply(a, b);
            gens.iter()
                .all(|g| pres.multiply(&ab, g) == pres.multiply(a, &pres.multiply(b, g)))
        })
    })
}

fn toggled(w: &NormalWord, k: usize) -> NormalWord {
    let mut exps = w.exponents().to_vec();
    exps[k] ^= 1;
    NormalWord::from_exponents(exps)
}

#[test]
fn weighted_verdict_matches_associativity_on_perturbations() {
    let n = 2;
    let class = n as u32 + 1;
    let pres = build_family(FamilySpec::new(n, Epsilon([0, 1, 1, 0])).unwrap());
    let ng = pres.ngens();
    let w = |k: usize| pres.weight(k);
    let mut variants: Vec<(String, PcPresentation)> = Vec::new();
    for i in 0..ng {
        let rhs = pres.power_rhs(i);
        for k in (i + 1..ng).filter(|&k| w(k) > w(i)) {
            variants.push((
                format!("power {i} toggle {k}"),
                pres.with_power_rhs(i, toggled(rhs, k)),
            ));
        }
        for j in i + 1..ng {
            let tail = pres.conj_tail(i, j);
            if !tail.is_identity() {
                variants.push((
                    format!("conj {i},{j} deleted"),
                    pres.with_conj_tail(i, j, pres.identity()),
                ));
            }
            for k in (j + 1..ng).filter(|&k| w(k) >= w(i) + w(j)) {
                variants.push((
                    format!("conj {i},{j} toggle {k}"),
                    pres.with_conj_tail(i, j, toggled(tail, k)),
                ));
            }
        }
    }
    let verdicts: Vec<(String, bool, bool, bool)> = variants
        .par_iter()
        .map(|(label, p)| {
            let weighted = check_consistency(p, class).unwrap().consistent;
            let full = run_triples(p, &unrestricted_triples(p)).consistent;
            (label.clone(), weighted, full, associative(p))
        })
        .collect();
    for (label, weighted, full, truth) in &verdicts {
        assert_eq!(weighted, truth, "{label}");
        assert_eq!(full, truth, "{label}");
    }
    assert!(verdicts.iter().any(|v| !v.3));
    assert!(verdicts.iter().any(|v| v.3));
    assert!(verdicts
        .iter()
        .any(|v| v.0 == format!("conj {},{} deleted", x(1), y(1)) && !v.3));
}
