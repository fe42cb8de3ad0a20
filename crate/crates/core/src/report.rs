//! Batch verification runs over the families and report generation for
//! directories of presentation documents.

use std::fmt;
use std::io;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{EnumeratedGroup, DEFAULT_ELEMENT_CAP};
use crate::automorphism::{induce, is_automorphism, is_class_preserving, is_inner, out_c, OutC};
use crate::consistency::check_consistency;
use crate::families::{build_family, theta, x, y, Epsilon, FamilySpec, Z};
use crate::pc::{load_presentation_file, NormalWord, PcPresentation};
use crate::quadform::classify_epsilons;

/// Whole-group invariants of one presentation.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GroupSummary {
    pub order: usize,
    pub class: usize,
    pub series_orders: Vec<usize>,
    pub center_order: usize,
    pub center: Vec<String>,
    pub class_count: usize,
}

pub fn summarize(group: &EnumeratedGroup) -> GroupSummary {
    let pres = group.presentation();
    let series = group.lower_central_series();
    let center = group.center();
    GroupSummary {
        order: group.order(),
        class: series.len() - 1,
        series_orders: series.iter().map(|s| s.len()).collect(),
        center_order: center.len(),
        center: center
            .iter()
            .map(|e| pres.display(&group.word(e)).to_string())
            .collect(),
        class_count: group.conjugacy_classes().len(),
    }
}

/// Results of the θ checks on one group.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ThetaReport {
    pub homomorphism: bool,
    pub automorphism: bool,
    pub inner_witness: Option<String>,
    pub class_preserving: bool,
    pub violated: Option<String>,
}

impl ThetaReport {
    /// An automorphism that preserves classes and is not inner.
    pub fn holds(&self) -> bool {
        self.homomorphism
            && self.automorphism
            && self.inner_witness.is_none()
            && self.class_preserving
    }
}

impl fmt::Display for ThetaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = &self.violated {
            return write!(f, "not a homomorphism ({v})");
        }
        write!(
            f,
            "automorphism {}, inner {}, class-preserving {}",
            self.automorphism,
            self.inner_witness.as_deref().unwrap_or("no"),
            self.class_preserving
        )
    }
}

pub fn theta_report(group: &EnumeratedGroup, spec: FamilySpec) -> ThetaReport {
    match induce(group, &theta(spec)) {
        Err(e) => ThetaReport {
            homomorphism: false,
            automorphism: false,
            inner_witness: None,
            class_preserving: false,
            violated: Some(e.to_string()),
        },
        Ok(m) => {
            let pres = group.presentation();
            let classes = group.conjugacy_classes();
            ThetaReport {
                homomorphism: true,
                automorphism: is_automorphism(group, &m),
                inner_witness: is_inner(group, &m)
                    .map(|g| pres.display(&group.word(g)).to_string()),
                class_preserving: is_class_preserving(group, &m, &classes),
                violated: None,
            }
        }
    }
}

/// Returns an element `h` with `x_4`-exponent 1 for which neither
/// `h^{x_2} = hz` nor `h^{x_1 x_3} = hz` holds.
pub fn dichotomy_counterexample(group: &EnumeratedGroup) -> Option<NormalWord> {
    let x2 = group.generator(x(2));
    let x13 = group.mul(group.generator(x(1)), group.generator(x(3)));
    let z = group.generator(Z);
    group
        .elements()
        .filter(|&h| group.exponent(h, x(4)) == 1)
        .find(|&h| {
            let hz = group.mul(h, z);
            group.conj(h, x2) != hz && group.conj(h, x13) != hz
        })
        .map(|h| group.word(h))
}

/// `{1, z, y_n, z y_n}` in `H_n^eps`.
pub fn expected_center(group: &EnumeratedGroup, n: usize) -> Vec<u32> {
    let z = group.generator(Z);
    let yn = group.generator(y(n));
    let mut c = vec![group.identity(), z, yn, group.mul(z, yn)];
    c.sort_unstable();
    c
}

/// `|G| = 2^{n+5}`, `|gamma_2| = 2^{n+1}`, `|gamma_j| = 2^{n-j+2}` for
/// `3 <= j <= n+1`, then the trivial group.
pub fn expected_series_orders(n: usize) -> Vec<usize> {
    let mut v = vec![1usize << (n + 5), 1 << (n + 1)];
    v.extend((3..=n + 1).map(|j| 1usize << (n + 2 - j)));
    v.push(1);
    v
}

/// The family presentation with `y_1^{x_1} = y_1`, a relation whose
/// removal leaves an inconsistent presentation once `n >= 2`.
pub fn corrupted_family(spec: FamilySpec) -> PcPresentation {
    let pres = build_family(spec);
    pres.with_conj_tail(x(1), y(1), pres.identity())
}

/// Everything the reproduction run checks on one `H_n^eps`.
#[derive(Clone, Debug)]
pub struct FamilyFacts {
    pub n: usize,
    pub eps: Epsilon,
    pub failing_triple: Option<String>,
    pub summary: Option<GroupSummary>,
    pub center_matches: bool,
    pub theta: Option<ThetaReport>,
    pub dichotomy_counterexample: Option<String>,
    pub error: Option<String>,
}

pub fn family_facts(spec: FamilySpec, corrupt: bool, elem_cap: u64) -> FamilyFacts {
    let pres = if corrupt {
        corrupted_family(spec)
    } else {
        build_family(spec)
    };
    let mut facts = FamilyFacts {
        n: spec.n(),
        eps: spec.epsilon(),
        failing_triple: None,
        summary: None,
        center_matches: false,
        theta: None,
        dichotomy_counterexample: None,
        error: None,
    };
    match check_consistency(&pres, spec.class() as u32) {
        Ok(r) => {
            facts.failing_triple = r.failures.first().map(|f| {
                format!(
                    "{}: {} vs {}",
                    f.triple.display(&pres),
                    pres.display(&f.left),
                    pres.display(&f.right)
                )
            })
        }
        Err(e) => facts.error = Some(e.to_string()),
    }
    let group = match EnumeratedGroup::new(&pres, elem_cap) {
        Ok(g) => g,
        Err(e) => {
            facts.error = Some(e.to_string());
            return facts;
        }
    };
    let summary = summarize(&group);
    facts.center_matches = group.center().elems() == expected_center(&group, spec.n()).as_slice();
    facts.summary = Some(summary);
    facts.theta = Some(theta_report(&group, spec));
    facts.dichotomy_counterexample =
        dichotomy_counterexample(&group).map(|h| pres.display(&h).to_string());
    facts
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Claim {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict}  {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ReproduceOptions {
    pub n_max: usize,
    pub elem_cap: u64,
    pub aut_cap: u64,
    /// Replace every family by [`corrupted_family`].
    pub corrupt: bool,
}

impl Default for ReproduceOptions {
    fn default() -> Self {
        ReproduceOptions {
            n_max: 6,
            elem_cap: DEFAULT_ELEMENT_CAP,
            aut_cap: crate::automorphism::DEFAULT_AUT_CAP,
            corrupt: false,
        }
    }
}

fn claim(name: &str, failures: Vec<String>, ok_detail: String) -> Claim {
    let passed = failures.is_empty();
    let detail = if passed {
        ok_detail
    } else {
        let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
        format!("{} failure(s); {}", failures.len(), shown.join("; "))
    };
    Claim {
        name: name.to_string(),
        passed,
        detail,
    }
}

fn label(f: &FamilyFacts) -> String {
    format!("H_{}^{}", f.n, f.eps)
}

/// Runs every desk-scale claim and returns one verdict per claim, in a
/// fixed order.
pub fn reproduce(opts: ReproduceOptions) -> Vec<Claim> {
    let specs: Vec<FamilySpec> = (1..=opts.n_max)
        .flat_map(|n| Epsilon::all().map(move |e| FamilySpec::new(n, e).expect("n >= 1")))
        .collect();
    let range = format!("n = 1..{}, all 16 eps", opts.n_max);

    let (facts, (quad, outc)) = rayon::join(
        || {
            specs
                .par_iter()
                .map(|&s| family_facts(s, opts.corrupt, opts.elem_cap))
                .collect::<Vec<_>>()
        },
        || rayon::join(quad_claim, || outc_claim(opts)),
    );

    let mut claims = Vec::new();
    let errors = |f: &FamilyFacts| f.error.as_ref().map(|e| format!("{}: {e}", label(f)));

    claims.push(claim(
        "consistency",
        facts
            .iter()
            .filter_map(|f| {
                errors(f).or_else(|| {
                    f.failing_triple
                        .as_ref()
                        .map(|t| format!("{}: {t}", label(f)))
                })
            })
            .collect(),
        format!("{range} consistent"),
    ));
    claims.push(claim(
        "order",
        facts
            .iter()
            .filter_map(|f| match &f.summary {
                Some(s) if s.order == 1 << (f.n + 5) => None,
                Some(s) => Some(format!("{}: order {}", label(f), s.order)),
                None => errors(f),
            })
            .collect(),
        format!("|H_n| = 2^(n+5) for {range}"),
    ));
    claims.push(claim(
        "class",
        facts
            .iter()
            .filter_map(|f| match &f.summary {
                Some(s) if s.series_orders == expected_series_orders(f.n) => None,
                Some(s) => Some(format!("{}: series {:?}", label(f), s.series_orders)),
                None => errors(f),
            })
            .collect(),
        format!("class n+1 and lower central series orders for {range}"),
    ));
    claims.push(claim(
        "center",
        facts
            .iter()
            .filter_map(|f| match &f.summary {
                Some(_) if f.center_matches => None,
                Some(s) => Some(format!("{}: center {{{}}}", label(f), s.center.join(", "))),
                None => errors(f),
            })
            .collect(),
        format!("Z = {{1, z, y_n, z*y_n}} for {range}"),
    ));
    claims.push(claim(
        "theta",
        facts
            .iter()
            .filter_map(|f| match &f.theta {
                Some(t) if t.holds() => None,
                Some(t) => Some(format!("{}: {t}", label(f))),
                None => errors(f),
            })
            .collect(),
        format!("x4 -> x4*z is a non-inner class-preserving automorphism for {range}"),
    ));
    claims.push(claim(
        "dichotomy",
        facts
            .iter()
            .filter_map(|f| match (&f.summary, &f.dichotomy_counterexample) {
                (Some(_), None) => None,
                (Some(_), Some(h)) => Some(format!("{}: h = {h}", label(f))),
                (None, _) => errors(f),
            })
            .collect(),
        format!("h^x2 = hz or h^(x1*x3) = hz whenever h has x4-exponent 1, {range}"),
    ));
    claims.push(quad);
    claims.push(outc);
    claims
}

fn quad_claim() -> Claim {
    let classes = classify_epsilons();
    let reps = Epsilon::representatives();
    let class_of = |e: Epsilon| {
        classes
            .iter()
            .position(|c| c.members.iter().any(|(m, _)| *m == e))
    };
    let mut failures = Vec::new();
    if classes.len() != 4 {
        failures.push(format!("{} classes", classes.len()));
    }
    let idx: Vec<Option<usize>> = reps.iter().map(|&r| class_of(r)).collect();
    for i in 0..4 {
        for j in i + 1..4 {
            if idx[i] == idx[j] {
                failures.push(format!("{} and {} pseudo-isometric", reps[i], reps[j]));
            }
        }
    }
    let sizes: Vec<String> = classes
        .iter()
        .map(|c| format!("{}:{}", c.representative, c.members.len()))
        .collect();
    claim(
        "quadclass",
        failures,
        format!("4 classes, sizes {}", sizes.join(" ")),
    )
}

fn outc_claim(opts: ReproduceOptions) -> Claim {
    let results: Vec<(Epsilon, crate::Result<OutC>)> = Epsilon::representatives()
        .par_iter()
        .map(|&e| {
            let pres = if opts.corrupt {
                corrupted_family(FamilySpec::new(1, e).expect("n = 1"))
            } else {
                build_family(FamilySpec::new(1, e).expect("n = 1"))
            };
            let r =
                EnumeratedGroup::new(&pres, opts.elem_cap).and_then(|g| out_c(&g, opts.aut_cap));
            (e, r)
        })
        .collect();
    let mut failures = Vec::new();
    let mut values = Vec::new();
    for (e, r) in &results {
        match r {
            Ok(o) if o.out_c_order >= 2 => values.push(format!("{e}:{}", o.out_c_order)),
            Ok(o) => failures.push(format!("H_1^{e}: |Out_c| = {}", o.out_c_order)),
            Err(err) => failures.push(format!("H_1^{e}: {err}")),
        }
    }
    claim(
        "outc",
        failures,
        format!(
            "|Out_c(H_1)| >= 2 for the representatives ({})",
            values.join(" ")
        ),
    )
}

/// One line of a survey report.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum SurveyRow {
    Ok {
        file: String,
        order: usize,
        class: usize,
        aut: usize,
        aut_c: usize,
        inn: usize,
        out_c: usize,
    },
    Skipped {
        file: String,
        reason: String,
    },
    Error {
        file: String,
        reason: String,
    },
}

impl SurveyRow {
    pub fn file(&self) -> &str {
        match self {
            SurveyRow::Ok { file, .. }
            | SurveyRow::Skipped { file, .. }
            | SurveyRow::Error { file, .. } => file,
        }
    }
}

pub const SURVEY_HEADER: [&str; 7] = [
    "file", "|G|", "class", "|Aut|", "|Aut_c|", "|Inn|", "|Out_c|",
];

impl fmt::Display for SurveyRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurveyRow::Ok {
                file,
                order,
                class,
                aut,
                aut_c,
                inn,
                out_c,
            } => write!(
                f,
                "{file}\t{order}\t{class}\t{aut}\t{aut_c}\t{inn}\t{out_c}"
            ),
            SurveyRow::Skipped { file, reason } => write!(f, "{file}\tSKIPPED\t{reason}"),
            SurveyRow::Error { file, reason } => write!(f, "{file}\tERROR\t{reason}"),
        }
    }
}

pub fn survey_file(path: &Path, elem_cap: u64, aut_cap: u64) -> SurveyRow {
    let file = path.file_name().map_or_else(
        || path.display().to_string(),
        |n| n.to_string_lossy().into_owned(),
    );
    let pres = match load_presentation_file(path) {
        Ok(p) => p,
        Err(e) => {
            return SurveyRow::Error {
                file,
                reason: e.to_string(),
            }
        }
    };
    let order = pres.formal_order();
    if order > aut_cap as u128 {
        return SurveyRow::Skipped {
            file,
            reason: format!("order {order} exceeds automorphism cap {aut_cap}"),
        };
    }
    let result = EnumeratedGroup::new(&pres, elem_cap)
        .and_then(|g| out_c(&g, aut_cap).map(|o| (g.nilpotency_class(), o)));
    match result {
        Ok((class, o)) => SurveyRow::Ok {
            file,
            order: o.group_order,
            class,
            aut: o.aut_order,
            aut_c: o.aut_c_order,
            inn: o.inn_order,
            out_c: o.out_c_order,
        },
        Err(e) => SurveyRow::Error {
            file,
            reason: e.to_string(),
        },
    }
}

/// Surveys every regular file in `dir`, in lexicographic order of file name.
pub fn survey(dir: &Path, elem_cap: u64, aut_cap: u64) -> io::Result<Vec<SurveyRow>> {
    let mut paths: Vec<PathBuf> = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let entry = entry?;
        if entry.file_type()?.is_file() {
            paths.push(entry.path());
        }
    }
    paths.sort();
    Ok(paths
        .par_iter()
        .map(|p| survey_file(p, elem_cap, aut_cap))
        .collect())
}

pub fn render_survey(rows: &[SurveyRow]) -> String {
    let mut out = SURVEY_HEADER.join("\t");
    out.push('\n');
    for r in rows {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}
