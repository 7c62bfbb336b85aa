//! Command reports. JSON keys use 1-based variable and component indices;
//! components are numbered in canonical order.

use std::fmt::Write as _;

use monosize::corpus::CorpusCheck;
use monosize::deformation::generic_violation;
use monosize::fuzz::FuzzReport;
use monosize::polarization::TopBase;
use monosize::{
    enumerate_top_bases_with, find_generic_deformation, irreducible_decomposition_with, is_generic,
    is_strongly_generic, minimal_covers_with, polarize_with, predict_equality_with,
    size_of_decomposition_with, size_under_deformation_with, validate_deformation, verify_equality_with,
    Decomposition, DeformationVectors, Limits, MonomialIdeal, PowerMatrix,
};
use serde::Serialize;

use crate::Failure;

pub struct Report {
    json: String,
    text: String,
    violation: Option<String>,
}

impl Report {
    fn new(value: &impl Serialize, text: String) -> Self {
        Report { json: serde_json::to_string(value).expect("reports serialize"), text, violation: None }
    }

    fn violating(mut self, reason: Option<String>) -> Self {
        self.violation = reason;
        self
    }

    pub fn json(&self) -> String {
        format!("{}\n", self.json)
    }

    pub fn text(&self) -> String {
        self.text.clone()
    }

    pub fn violation(&self) -> Option<&str> {
        self.violation.as_deref()
    }
}

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|i| i + 1).collect()
}

fn set_text(indices: &[usize]) -> String {
    let parts: Vec<String> = indices.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn component_texts(d: &Decomposition) -> Vec<String> {
    d.components().iter().map(|c| c.to_string()).collect()
}

fn numbered_components(out: &mut String, d: &Decomposition) {
    for (i, c) in d.components().iter().enumerate() {
        let _ = writeln!(out, "  Q{} = {c}", i + 1);
    }
}

#[derive(Serialize)]
struct DecomposeOut {
    n: usize,
    decomposition: String,
    components: Vec<Vec<u32>>,
    primes: Vec<Vec<usize>>,
}

pub fn decompose(ideal: &MonomialIdeal, limits: &Limits) -> Result<Report, Failure> {
    let d = irreducible_decomposition_with(ideal, limits)?;
    let out = DecomposeOut {
        n: d.n(),
        decomposition: d.to_string(),
        components: d.components().iter().map(|c| c.exps().to_vec()).collect(),
        primes: d.components().iter().map(|c| c.support().map(|k| k + 1).collect()).collect(),
    };
    let text = format!("I = {}\n", d.render(" ∩ "));
    Ok(Report::new(&out, text))
}

#[derive(Serialize)]
struct SizeOut {
    v: usize,
    h: usize,
    n: usize,
    size: usize,
    inessential: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    components: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    covers: Option<Vec<Vec<usize>>>,
}

pub fn size(ideal: &MonomialIdeal, with_covers: bool, limits: &Limits) -> Result<Report, Failure> {
    let d = irreducible_decomposition_with(ideal, limits)?;
    let r = size_of_decomposition_with(&d, limits)?;
    let covers = if with_covers {
        let family = minimal_covers_with(&d, limits)?;
        Some(family.covers.iter().map(|c| one_based(c)).collect::<Vec<_>>())
    } else {
        None
    };
    let mut text = format!("size I = {} (v = {}, h = {}, n = {})\n", r.size, r.v, r.h, r.n);
    if !r.inessential.is_empty() {
        let vars: Vec<String> = r.inessential.iter().map(|k| format!("x{k}")).collect();
        let _ = writeln!(text, "inessential: {}", vars.join(", "));
    }
    if let Some(covers) = &covers {
        numbered_components(&mut text, &d);
        let sets: Vec<String> = covers.iter().map(|c| set_text(c)).collect();
        let _ = writeln!(text, "A = {{{}}}", sets.join(", "));
    }
    let out = SizeOut {
        v: r.v,
        h: r.h,
        n: r.n,
        size: r.size,
        inessential: r.inessential,
        components: with_covers.then(|| component_texts(&d)),
        covers,
    };
    Ok(Report::new(&out, text))
}

#[derive(Serialize)]
struct PolarizeOut {
    n: usize,
    n_prime: usize,
    c: usize,
    bounds: Vec<u32>,
    var_map: Vec<String>,
    ideal: String,
}

pub fn polarize(ideal: &MonomialIdeal, limits: &Limits) -> Result<Report, Failure> {
    let pol = polarize_with(ideal, limits)?;
    let out = PolarizeOut {
        n: ideal.n(),
        n_prime: pol.n_prime(),
        c: pol.c,
        bounds: pol.bounds.clone(),
        var_map: pol.var_map.iter().map(|v| v.to_string()).collect(),
        ideal: pol.render_ideal(),
    };
    let text = format!("I^p = {}\nn' = {}, c = {}\n", out.ideal, out.n_prime, out.c);
    Ok(Report::new(&out, text))
}

#[derive(Serialize)]
struct EntryOut {
    value: u32,
    row: usize,
    column: usize,
}

#[derive(Serialize)]
struct TopBaseOut {
    values: Vec<u32>,
    entries: Vec<Option<EntryOut>>,
}

impl From<&TopBase> for TopBaseOut {
    fn from(tb: &TopBase) -> Self {
        TopBaseOut {
            values: tb.values(),
            entries: tb
                .entries
                .iter()
                .map(|e| e.map(|e| EntryOut { value: e.value, row: e.row + 1, column: e.column + 1 }))
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct TopOut {
    matrix: Vec<Vec<u32>>,
    column_max: Vec<u32>,
    top_base: TopBaseOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    top_bases: Option<Vec<TopBaseOut>>,
}

fn matrix_text(out: &mut String, m: &PowerMatrix) {
    let width = m.rows().iter().flatten().map(|e| e.to_string().len()).max().unwrap_or(1) + 1;
    for (i, row) in m.rows().iter().enumerate() {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(k, e)| {
                let mark = if m.is_top_power(i, k) { "*" } else { " " };
                format!("{e:>width$}{mark}")
            })
            .collect();
        let _ = writeln!(out, "  [{} ]", cells.join(""));
    }
}

fn top_base_text(tb: &TopBase) -> String {
    let values: Vec<String> = tb.values().iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", values.join(","))
}

pub fn topbase(ideal: &MonomialIdeal, all: bool, limits: &Limits) -> Result<Report, Failure> {
    let d = irreducible_decomposition_with(ideal, limits)?;
    let m = PowerMatrix::from_decomposition(&d);
    let tb = monosize::build_top_base(&m);
    let every = if all { Some(enumerate_top_bases_with(&m, limits)?) } else { None };
    let mut text = String::from("M (top powers starred):\n");
    matrix_text(&mut text, &m);
    let _ = writeln!(text, "top base: {}", top_base_text(&tb));
    if let Some(every) = &every {
        let list: Vec<String> = every.iter().map(top_base_text).collect();
        let _ = writeln!(text, "all top bases: {}", list.join(", "));
    }
    let out = TopOut {
        matrix: m.rows().to_vec(),
        column_max: m.column_max().to_vec(),
        top_base: TopBaseOut::from(&tb),
        top_bases: every.map(|e| e.iter().map(TopBaseOut::from).collect()),
    };
    Ok(Report::new(&out, text))
}

#[derive(Serialize)]
struct TluOut {
    var: usize,
    t: Vec<usize>,
    l: Vec<usize>,
    u: Vec<usize>,
    condition_1: bool,
    condition_2a: bool,
    condition_2b: bool,
    holds: bool,
}

#[derive(Serialize)]
struct ActualOut {
    size_p: usize,
    size_i: usize,
    c: usize,
    equal: bool,
    agree: bool,
}

#[derive(Serialize)]
struct EqualityOut {
    predicted: bool,
    shape_ok: bool,
    shape_violations: Vec<usize>,
    components: Vec<String>,
    covers: Vec<Vec<usize>>,
    tlu: Vec<TluOut>,
    /// `sdepth I >= size I + 1` is known to apply: predicted equality or squarefree.
    sdepth_bound_applies: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    actual: Option<ActualOut>,
}

pub fn equality(ideal: &MonomialIdeal, verify: bool, limits: &Limits) -> Result<Report, Failure> {
    let d = irreducible_decomposition_with(ideal, limits)?;
    let verdict =
        if verify { verify_equality_with(ideal, limits)? } else { predict_equality_with(&d, limits)? };
    let actual = verdict.actual.as_ref().map(|a| ActualOut {
        size_p: a.size_p,
        size_i: a.size_i,
        c: a.c,
        equal: a.equal,
        agree: a.equal == verdict.predicted,
    });
    let out = EqualityOut {
        predicted: verdict.predicted,
        shape_ok: verdict.shape_ok,
        shape_violations: one_based(&verdict.shape_violations),
        components: component_texts(&d),
        covers: verdict.covers.covers.iter().map(|c| one_based(c)).collect(),
        tlu: verdict
            .per_variable
            .iter()
            .map(|v| TluOut {
                var: v.var + 1,
                t: one_based(&v.tlu.t),
                l: one_based(&v.tlu.l),
                u: one_based(&v.tlu.u),
                condition_1: v.condition_1,
                condition_2a: v.condition_2a,
                condition_2b: v.condition_2b,
                holds: v.holds,
            })
            .collect(),
        sdepth_bound_applies: verdict.predicted || ideal.is_squarefree(),
        actual,
    };

    let mut text = String::new();
    numbered_components(&mut text, &d);
    let sets: Vec<String> = out.covers.iter().map(|c| set_text(c)).collect();
    let _ = writeln!(text, "A = {{{}}}", sets.join(", "));
    if out.shape_ok {
        let _ = writeln!(text, "shape: ok");
    } else {
        let _ = writeln!(text, "shape: fails at Q{}", set_text(&out.shape_violations));
    }
    for v in &out.tlu {
        let verdict = match (v.condition_1, v.condition_2a, v.condition_2b) {
            (true, _, _) => "(1)".to_string(),
            (false, true, true) => "(2)".to_string(),
            (false, a, b) => {
                let mut failed = Vec::new();
                if !a {
                    failed.push("(2)(A)");
                }
                if !b {
                    failed.push("(2)(B)");
                }
                format!("fails {}", failed.join(" and "))
            }
        };
        let _ = writeln!(
            text,
            "x{}: T = {}, L = {}, U = {}: {verdict}",
            v.var,
            set_text(&v.t),
            set_text(&v.l),
            set_text(&v.u)
        );
    }
    let _ = writeln!(text, "predicted: size I^p {} size I + c", if out.predicted { "=" } else { "<" });
    let mut violation = None;
    if let Some(a) = &out.actual {
        let relation = if a.equal { "=" } else { "<" };
        let _ =
            writeln!(text, "actual: size I^p = {} {relation} {} + {} = size I + c", a.size_p, a.size_i, a.c);
        let _ = writeln!(text, "agree: {}", a.agree);
        if !a.agree {
            violation = Some(format!(
                "prediction {} but size I^p = {}, size I + c = {}",
                out.predicted,
                a.size_p,
                a.size_i + a.c
            ));
        }
    }
    Ok(Report::new(&out, text).violating(violation))
}

#[derive(Serialize)]
struct DeformOut {
    seed: u64,
    generators: String,
    eps: Vec<Vec<u32>>,
    deformed: String,
    strongly_generic: bool,
}

pub fn deform(ideal: &MonomialIdeal, seed: u64) -> Result<Report, Failure> {
    let eps = find_generic_deformation(ideal, seed)?;
    let deformed = monosize::apply_deformation(ideal, &eps)?;
    let out = DeformOut {
        seed,
        generators: ideal.to_string(),
        eps: eps.shifts.clone(),
        deformed: deformed.to_string(),
        strongly_generic: is_strongly_generic(&deformed),
    };
    let text = format!("I = {}\neps = {:?}\nI_eps = {}\n", out.generators, out.eps, out.deformed);
    Ok(Report::new(&out, text))
}

#[derive(Serialize)]
struct GenericOut {
    generators: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    generic: Option<bool>,
    /// 1-based generator pair with a shared degree and no third generator strictly dividing their lcm.
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    strongly_generic: Option<bool>,
}

pub fn check_generic(ideal: &MonomialIdeal, strong: bool) -> Report {
    let gens = ideal.generators();
    if strong {
        let s = is_strongly_generic(ideal);
        let out = GenericOut {
            generators: ideal.to_string(),
            generic: None,
            violation: None,
            strongly_generic: Some(s),
        };
        return Report::new(&out, format!("strongly generic: {s}\n"));
    }
    let violation = generic_violation(ideal);
    let mut text = format!("generic: {}\n", violation.is_none());
    if let Some((i, j)) = violation {
        let _ = writeln!(text, "no third generator strictly divides lcm({}, {})", gens[i], gens[j]);
    }
    let out = GenericOut {
        generators: ideal.to_string(),
        generic: Some(is_generic(ideal)),
        violation: violation.map(|(i, j)| [i + 1, j + 1]),
        strongly_generic: None,
    };
    Report::new(&out, text)
}

#[derive(Serialize)]
struct DeformSizeOut {
    size_i: usize,
    size_eps: usize,
    generic: bool,
    inequality_holds: bool,
    deformed: String,
    eps: Vec<Vec<u32>>,
}

/// Size before and after `eps` (or a synthesized generic deformation). A
/// failing inequality is a violation only when the deformed ideal is generic.
pub fn deform_size(
    ideal: &MonomialIdeal,
    eps: Option<DeformationVectors>,
    seed: u64,
    limits: &Limits,
) -> Result<Report, Failure> {
    let eps = match eps {
        Some(eps) => eps,
        None => find_generic_deformation(ideal, seed)?,
    };
    if !validate_deformation(ideal, &eps)? {
        return Err(Failure::Usage(
            "--eps changes the order or the zero pattern of some variable's degrees".into(),
        ));
    }
    let r = size_under_deformation_with(ideal, &eps, limits)?;
    let mut text = format!(
        "I_eps = {}\nsize I = {}, size I_eps = {}\ngeneric: {}\n",
        r.deformed, r.size_i, r.size_eps, r.generic
    );
    let violation = if r.inequality_holds {
        None
    } else if r.generic {
        Some(format!("size I = {} < size I_eps = {}", r.size_i, r.size_eps))
    } else {
        let _ = writeln!(text, "warning: size I < size I_eps for a non-generic deformation");
        eprintln!("warning: size I = {} < size I_eps = {}; deformation is not generic", r.size_i, r.size_eps);
        None
    };
    let out = DeformSizeOut {
        size_i: r.size_i,
        size_eps: r.size_eps,
        generic: r.generic,
        inequality_holds: r.inequality_holds,
        deformed: r.deformed,
        eps: eps.shifts,
    };
    Ok(Report::new(&out, text).violating(violation))
}

pub fn fuzz(report: FuzzReport) -> Report {
    let mut text = format!("seed {}, {} instances\n", report.seed, report.instances);
    for (property, count) in &report.checks {
        let failures = report.counterexamples.iter().filter(|c| c.property == *property).count();
        let _ = writeln!(text, "  {:<24}{count:>6} checked{failures:>6} failed", property.name());
    }
    let _ = writeln!(text, "strict deformation inequalities: {}", report.strict_deformations);
    for c in &report.counterexamples {
        let _ = writeln!(
            text,
            "counterexample [{}] {} (n = {}): {}",
            c.property.name(),
            c.ideal,
            c.n,
            c.observed
        );
    }
    let violation = (!report.passed()).then(|| format!("{} counterexamples", report.counterexamples.len()));
    Report::new(&report, text).violating(violation)
}

#[derive(Serialize)]
struct ExamplesOut {
    passed: usize,
    failed: usize,
    checks: Vec<CorpusCheck>,
}

pub fn examples(checks: Vec<CorpusCheck>) -> Report {
    let failed = checks.iter().filter(|c| !c.passed).count();
    let mut text = String::new();
    for c in &checks {
        let mark = if c.passed { "ok  " } else { "FAIL" };
        let _ = write!(text, "{mark} {}: {}", c.name, c.observed);
        if !c.passed {
            let _ = write!(text, " (expected {})", c.expected);
        }
        text.push('\n');
    }
    let _ = writeln!(text, "{} passed, {failed} failed", checks.len() - failed);
    let violation = (failed > 0).then(|| format!("{failed} reference values not reproduced"));
    let out = ExamplesOut { passed: checks.len() - failed, failed, checks };
    Report::new(&out, text).violating(violation)
}
