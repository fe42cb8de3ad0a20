//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use pcgroup::analysis::{enumerate_elements, EnumeratedGroup, DEFAULT_ELEMENT_CAP};
use pcgroup::automorphism::{out_c, DEFAULT_AUT_CAP};
use pcgroup::consistency::check_consistency;
use pcgroup::families::{build_family, Epsilon, FamilySpec};
use pcgroup::pc::NormalWord;
use pcgroup::quadform::{classify_epsilons, group_bilinear, group_quad, vectors};
use pcgroup::report::{
    dichotomy_counterexample, expected_center, expected_series_orders, theta_report,
};
use rand::{rngs::StdRng, Rng, SeedableRng};
use rayon::prelude::*;

struct Family {
    spec: FamilySpec,
    group: EnumeratedGroup,
}

fn label(s: FamilySpec) -> String {
    format!("H_{}^{}", s.n(), s.epsilon())
}

fn families(n_max: usize) -> Vec<Family> {
    let specs: Vec<FamilySpec> = (1..=n_max)
        .flat_map(|n| Epsilon::all().map(move |e| FamilySpec::new(n, e).unwrap()))
        .collect();
    specs
        .into_par_iter()
        .map(|spec| Family {
            spec,
            group: EnumeratedGroup::new(&build_family(spec), DEFAULT_ELEMENT_CAP).unwrap(),
        })
        .collect()
}

fn verdict(failures: &[String]) -> Result<(), String> {
    match failures.first() {
        None => Ok(()),
        Some(f) => Err(format!("{} violation(s), first: {f}", failures.len())),
    }
}

fn consistency_and_order() -> Result<String, String> {
    let failures: Vec<String> = (1..=8)
        .flat_map(|n| Epsilon::all().map(move |e| FamilySpec::new(n, e).unwrap()))
        .collect::<Vec<_>>()
        .par_iter()
        .filter_map(|&s| {
            let pres = build_family(s);
            let r = check_consistency(&pres, s.class() as u32).unwrap();
            if !r.consistent {
                return Some(format!("{} inconsistent", label(s)));
            }
            let mut elems = enumerate_elements(&pres, DEFAULT_ELEMENT_CAP).unwrap();
            elems.sort();
            elems.dedup();
            (elems.len() != 1 << (s.n() + 5))
                .then(|| format!("{} has {} elements", label(s), elems.len()))
        })
        .collect();
    verdict(&failures).map(|_| "n = 1..8, all 16 eps: consistent, |G| = 2^(n+5)".into())
}

fn class_and_series(fams: &[Family]) -> Result<String, String> {
    let failures: Vec<String> = fams
        .par_iter()
        .filter_map(|f| {
            let orders: Vec<usize> = f
                .group
                .lower_central_series()
                .iter()
                .map(|s| s.len())
                .collect();
            let class = orders.len() - 1;
            (class != f.spec.n() + 1 || orders != expected_series_orders(f.spec.n()))
                .then(|| format!("{}: series {orders:?}", label(f.spec)))
        })
        .collect();
    verdict(&failures)
        .map(|_| "class n+1, |gamma_2| = 2^(n+1), |gamma_j| = 2^(n-j+2), n = 1..8".into())
}

fn center(fams: &[Family]) -> Result<String, String> {
    let failures: Vec<String> = fams
        .par_iter()
        .filter(|f| f.group.center().elems() != expected_center(&f.group, f.spec.n()).as_slice())
        .map(|f| label(f.spec))
        .collect();
    verdict(&failures).map(|_| "Z(H) = {1, z, y_n, z*y_n}, n = 1..8".into())
}

fn normal_form_table() -> Result<String, String> {
    let n = 4;
    let mut failures = Vec::new();
    let mut rows_checked = 0;
    for eps in Epsilon::all() {
        let pres = build_family(FamilySpec::new(n, eps).unwrap());
        for (a, b, c, expected) in common::table_rows(&pres, n, eps.bits()) {
            let (left, right) = common::both_bracketings(&pres, a, b, c);
            rows_checked += 1;
            if left != expected || right != expected {
                failures.push(format!(
                    "eps {eps} ({},{},{}): {} / {} vs {}",
                    pres.names()[a],
                    pres.names()[b],
                    pres.names()[c],
                    pres.display(&left),
                    pres.display(&right),
                    pres.display(&expected)
                ));
            }
        }
    }
    verdict(&failures).map(|_| format!("{rows_checked} table instances at n = 4, both bracketings"))
}

fn theta(fams: &[Family]) -> Result<String, String> {
    let failures: Vec<String> = fams
        .par_iter()
        .filter(|f| f.spec.n() <= 6)
        .filter_map(|f| {
            let t = theta_report(&f.group, f.spec);
            (!t.holds()).then(|| format!("{}: {t}", label(f.spec)))
        })
        .collect();
    verdict(&failures)
        .map(|_| "theta induced, automorphism, not inner, class-preserving, n = 1..6".into())
}

fn dichotomy(fams: &[Family]) -> Result<String, String> {
    let failures: Vec<String> = fams
        .par_iter()
        .filter(|f| f.spec.n() <= 6)
        .filter_map(|f| {
            dichotomy_counterexample(&f.group)
                .map(|h| format!("{}: {}", label(f.spec), f.group.presentation().display(&h)))
        })
        .collect();
    verdict(&failures)
        .map(|_| "every h with x4-exponent 1 has h^x2 = hz or h^(x1*x3) = hz, n = 1..6".into())
}

fn quad_classes() -> Result<String, String> {
    let classes = classify_epsilons();
    let class_of = |e: Epsilon| {
        classes
            .iter()
            .position(|c| c.members.iter().any(|(m, _)| *m == e))
    };
    let mut idx: Vec<Option<usize>> = Epsilon::representatives()
        .iter()
        .map(|&r| class_of(r))
        .collect();
    idx.sort();
    idx.dedup();
    if classes.len() != 4 || idx.len() != 4 || idx.contains(&None) {
        return Err(format!(
            "{} classes, listed vectors in {} classes",
            classes.len(),
            idx.len()
        ));
    }
    let sizes: Vec<String> = classes
        .iter()
        .map(|c| format!("{}:{}", c.representative, c.members.len()))
        .collect();
    Ok(format!("4 classes, sizes {}", sizes.join(" ")))
}

fn outc_order_64() -> Result<String, String> {
    let mut shown = Vec::new();
    let mut failures = Vec::new();
    for eps in Epsilon::representatives() {
        let g = EnumeratedGroup::new(
            &build_family(FamilySpec::new(1, eps).unwrap()),
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap();
        match out_c(&g, DEFAULT_AUT_CAP) {
            Ok(o) if o.out_c_order >= 2 => shown.push(format!(
                "{eps}: |Aut|={} |Aut_c|={} |Inn|={} |Out_c|={}",
                o.aut_order, o.aut_c_order, o.inn_order, o.out_c_order
            )),
            Ok(o) => failures.push(format!("{eps}: |Out_c| = {}", o.out_c_order)),
            Err(e) => failures.push(format!("{eps}: {e}")),
        }
    }
    verdict(&failures).map(|_| shown.join("; "))
}

fn properties(fams: &[Family]) -> Result<String, String> {
    const TRIPLES: usize = 10_000;
    let mut failures: Vec<String> = fams
        .par_iter()
        .filter_map(|f| {
            let pres = f.group.presentation();
            let n = pres.ngens();
            let eps_index = f
                .spec
                .epsilon()
                .bits()
                .iter()
                .fold(0u64, |acc, &b| acc << 1 | b as u64);
            let mut rng = StdRng::seed_from_u64(f.spec.n() as u64 * 16 + eps_index);
            let mut random =
                || NormalWord::from_exponents((0..n).map(|_| rng.gen_range(0..2u8)).collect());
            let e = pres.identity();
            for _ in 0..TRIPLES {
                let (a, b, c) = (random(), random(), random());
                let ab = pres.multiply(&a, &b);
                let ok = pres.multiply(&ab, &c) == pres.multiply(&a, &pres.multiply(&b, &c))
                    && pres.multiply(&a, &e) == a
                    && pres.multiply(&e, &a) == a
                    && pres.multiply(&a, &pres.inverse(&a)) == e
                    && pres.inverse(&ab) == pres.multiply(&pres.inverse(&b), &pres.inverse(&a));
                if !ok {
                    return Some(format!("{}: group law at {a:?} {b:?} {c:?}", label(f.spec)));
                }
            }
            let g = &f.group;
            let classes = g.conjugacy_classes();
            if classes.sizes().iter().sum::<usize>() != g.order() {
                return Some(format!("{}: class equation", label(f.spec)));
            }
            for (rep, class) in classes.representatives().zip(classes.classes()) {
                if class.len() * g.centralizer(rep).len() != g.order() {
                    return Some(format!("{}: orbit-stabilizer at {rep}", label(f.spec)));
                }
            }
            None
        })
        .collect();
    for eps in Epsilon::all() {
        let pres = build_family(FamilySpec::new(2, eps).unwrap());
        for u in vectors() {
            for v in vectors() {
                let sum = [u[0] ^ v[0], u[1] ^ v[1], u[2] ^ v[2], u[3] ^ v[3]];
                if group_bilinear(&pres, u, v)
                    != group_quad(&pres, sum) + group_quad(&pres, u) + group_quad(&pres, v)
                {
                    failures.push(format!("polarization eps {eps} u {u:?} v {v:?}"));
                }
            }
        }
    }
    verdict(&failures).map(|_| {
        format!(
            "{} presentations x {TRIPLES} triples, class equation and orbit-stabilizer on each, polarization 16 x 256",
            fams.len()
        )
    })
}

type Criterion<'a> = Box<dyn Fn() -> Result<String, String> + 'a>;

fn main() -> ExitCode {
    let start = Instant::now();
    let fams = families(8);
    let criteria: Vec<(u32, Criterion)> = vec![
        (1, Box::new(consistency_and_order)),
        (2, Box::new(|| class_and_series(&fams))),
        (3, Box::new(|| center(&fams))),
        (4, Box::new(normal_form_table)),
        (5, Box::new(|| theta(&fams))),
        (6, Box::new(|| dichotomy(&fams))),
        (7, Box::new(quad_classes)),
        (8, Box::new(outc_order_64)),
        (9, Box::new(|| properties(&fams))),
    ];
    let mut all = true;
    for (k, run) in criteria {
        let t = Instant::now();
        let result = run();
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {k}: PASS ({secs:.2}s) {detail}"),
            Err(detail) => {
                all = false;
                println!("criterion {k}: FAIL ({secs:.2}s) {detail}");
            }
        }
    }
    println!(
        "acceptance: {} in {:.1}s",
        if all { "PASS" } else { "FAIL" },
        start.elapsed().as_secs_f64()
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
