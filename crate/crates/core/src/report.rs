//! Commands over a scenario, and their report in human and machine form.
//!
//! The machine rendering is pretty-printed JSON of [`Report`]; the human
//! rendering prints the same fields as aligned text. Neither contains timings,
//! so repeated runs are byte-identical.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::validate_algebra;
use crate::crossed::{build_crossed_product, validate_cocycle, validate_weak_action, verify_action_upgrade};
use crate::cyclic::{check_cyclic, normalized_mixed_complex, AlgebraCyclic};
use crate::cylinder::{
    check_bimodule, check_cylindrical, check_module_law, filtration_check, maclane_check, mq_action_matches,
    row_identification_check, shuffle_f0_check, tot_mixed_complex, twisted_hopf_algebra, BimoduleMq,
    HopfCrossedCylinder, MqAction, PhiPsiCheck,
};
use crate::error::{Error, Result};
use crate::hopf::{is_cocommutative, is_semisimple, validate_hopf};
use crate::scenario::{Built, Scenario};
use crate::spectral::{collapse_check, compute_e1, compute_e2, CollapseReport, SpectralPage};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Verify,
    Hc,
    E1,
    E2,
    Collapse,
    Report,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Verify => "verify",
            Command::Hc => "hc",
            Command::E1 => "e1",
            Command::E2 => "e2",
            Command::Collapse => "collapse",
            Command::Report => "report",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The check could not run: invalid input, an unsupported request or a resource cap.
    Error,
    Skipped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErrorKind {
    Input,
    Unsupported,
    Cap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyTable {
    pub name: String,
    pub dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScenarioEcho {
    pub name: String,
    pub field: String,
    pub dim_h: usize,
    pub dim_a: usize,
    pub semisimple: Option<bool>,
    pub max_degree: usize,
    pub max_p: usize,
    pub max_q: usize,
    pub cap: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub scenario: ScenarioEcho,
    pub checks: Vec<CheckResult>,
    pub homology: Vec<HomologyTable>,
    pub pages: Vec<SpectralPage>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub collapse: Option<CollapseReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| matches!(c.status, Status::Pass | Status::Skipped))
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// 0 all passed, 1 a mathematical check failed, 2 invalid input or an
    /// unsupported request, 3 a dimension cap was hit.
    pub fn exit_code(&self) -> i32 {
        let errors = |k: ErrorKind| self.checks.iter().any(|c| c.error == Some(k));
        if errors(ErrorKind::Input) || errors(ErrorKind::Unsupported) {
            2
        } else if self.checks.iter().any(|c| c.status == Status::Fail) {
            1
        } else if errors(ErrorKind::Cap) {
            3
        } else {
            0
        }
    }

    fn record(&mut self, name: impl Into<String>, outcome: Result<()>) -> bool {
        let name = name.into();
        let (status, error, detail) = match outcome {
            Ok(()) => (Status::Pass, None, None),
            Err(Error::Violation(v)) => (Status::Fail, None, Some(v.to_string())),
            Err(e @ Error::NotWellDefined(_)) => (Status::Fail, None, Some(e.to_string())),
            Err(e @ Error::DimensionCap { .. }) => (Status::Error, Some(ErrorKind::Cap), Some(e.to_string())),
            Err(e @ Error::Unsupported(_)) => (Status::Error, Some(ErrorKind::Unsupported), Some(e.to_string())),
            Err(e @ (Error::Input(_) | Error::DimensionMismatch(_))) => {
                (Status::Error, Some(ErrorKind::Input), Some(e.to_string()))
            }
        };
        let ok = status == Status::Pass;
        self.checks.push(CheckResult {
            name,
            status,
            error,
            detail,
        });
        ok
    }

    fn skip(&mut self, name: impl Into<String>, why: &str) {
        self.checks.push(CheckResult {
            name: name.into(),
            status: Status::Skipped,
            error: None,
            detail: Some(why.into()),
        });
    }

    fn record_value<T>(&mut self, name: &str, outcome: Result<T>) -> Option<T> {
        match outcome {
            Ok(v) => {
                self.record(name, Ok(()));
                Some(v)
            }
            Err(e) => {
                self.record(name, Err(e));
                None
            }
        }
    }
}

/// A report for a scenario that failed to load.
pub fn input_error_report(command: Command, file: &str, error: Error) -> Report {
    let mut r = Report {
        command: command.name().into(),
        scenario: ScenarioEcho {
            name: file.into(),
            field: String::new(),
            dim_h: 0,
            dim_a: 0,
            semisimple: None,
            max_degree: 0,
            max_p: 0,
            max_q: 0,
            cap: 0,
        },
        checks: Vec::new(),
        homology: Vec::new(),
        pages: Vec::new(),
        collapse: None,
    };
    let error = match error {
        e @ Error::DimensionCap { .. } => e,
        Error::Input(m) => Error::Input(m),
        other => Error::Input(other.to_string()),
    };
    r.record("load scenario", Err(error));
    r
}

fn ingestion(r: &mut Report, b: &Built) -> bool {
    let hopf_ok = r.record("Hopf axioms", validate_hopf(&b.hopf).map_err(Into::into));
    let alg_ok = r.record("algebra axioms", validate_algebra(&b.algebra).map_err(Into::into));
    let cocomm = r.record(
        "cocommutativity",
        if is_cocommutative(&b.hopf) {
            Ok(())
        } else {
            Err(crate::Violation::new("cocommutativity", "coproduct table").into())
        },
    );
    let action_ok = hopf_ok && alg_ok && r.record("weak action", validate_weak_action(&b.action).map_err(Into::into));
    if !action_ok {
        r.skip("cocycle conditions", "structure axioms failed");
        return false;
    }
    if r.record("cocycle conditions", validate_cocycle(&b.cocycle, &b.action).map_err(Into::into)) {
        r.record("action upgrade", verify_action_upgrade(&b.action, &b.cocycle).map_err(Into::into));
    }
    cocomm
}

fn verify(r: &mut Report, s: &Scenario, cyl: &HopfCrossedCylinder) {
    let c = &s.compute;
    r.record(
        format!("cylindrical identities through ({},{})", c.max_p, c.max_q),
        check_cylindrical(cyl, c.max_p, c.max_q).map_err(Into::into),
    );
    r.record(
        format!("diagonal is cyclic through {}", c.max_degree),
        check_cyclic(&cyl.diagonal(), c.max_degree).map_err(Into::into),
    );
    let phi_psi = (|| -> Result<()> {
        let cp = build_crossed_product(cyl.action(), cyl.cocycle())?;
        for n in 0..=c.max_degree {
            let res = PhiPsiCheck::run(cyl, &cp, n);
            if !res.passed() {
                return Err(crate::Violation::new("Φ/Ψ cyclic isomorphism", format!("{res:?}")).into());
            }
        }
        Ok(())
    })();
    r.record(format!("Φ/Ψ through degree {}", c.max_degree), phi_psi);
    let hs = match twisted_hopf_algebra(cyl.hopf(), cyl.cocycle()) {
        Ok(hs) => hs,
        Err(e) => {
            r.record("H_σ", Err(e));
            return;
        }
    };
    let modules = (|| -> Result<()> {
        for q in 0..=c.max_q {
            check_bimodule(&BimoduleMq { cyl, q }, &hs)
                .map_err(|v| crate::Violation::new(v.axiom, format!("M_{q}: {}", v.location)))?;
            check_module_law(&MqAction { cyl, q }, cyl.hopf())
                .map_err(|v| crate::Violation::new(v.axiom, format!("M_{q}: {}", v.location)))?;
            mq_action_matches(cyl, q)?;
        }
        Ok(())
    })();
    r.record(format!("M_q bimodules and E¹ action through q={}", c.max_q), modules);
    let rows = (0..=c.max_q).try_for_each(|q| row_identification_check(cyl, &hs, q, c.max_p));
    r.record(format!("rows are Hochschild complexes through p={}", c.max_p), rows.map_err(Into::into));
    let maclane = (0..=c.max_q).try_for_each(|q| {
        maclane_check(&hs, cyl.hopf(), cyl.cocycle(), &BimoduleMq { cyl, q }, c.max_p)
            .map_err(|v| crate::Violation::new(v.axiom, format!("q={q}, {}", v.location)))
    });
    r.record(format!("Mac Lane isomorphism through ({},{})", c.max_p, c.max_q), maclane.map_err(Into::into));
    if let Some(tot) = r.record_value("Tot mixed complex", tot_mixed_complex(cyl, c.max_degree, c.cap)) {
        r.record("filtration", filtration_check(&tot, c.max_degree).map_err(Into::into));
        r.record("shuffle map f₀", shuffle_f0_check(cyl, &tot, c.max_degree, c.cap));
    }
}

fn hc(r: &mut Report, s: &Scenario, cyl: &HopfCrossedCylinder) {
    let c = &s.compute;
    let n = c.max_degree;
    let direct = (|| -> Result<(Vec<usize>, Vec<usize>)> {
        let cp = build_crossed_product(cyl.action(), cyl.cocycle())?;
        let natural = AlgebraCyclic::new(Arc::new(cp.product));
        let (mc, _) = normalized_mixed_complex(&natural, n + 1, c.cap)?;
        mc.check()?;
        Ok((mc.hochschild(n)?.dims, mc.cyclic(n)?.dims))
    })();
    let direct = r.record_value("HC of the crossed product", direct);
    let tot = (|| -> Result<(Vec<usize>, Vec<usize>)> {
        let tot = tot_mixed_complex(cyl, n + 1, c.cap)?;
        Ok((tot.mixed.hochschild(n)?.dims, tot.mixed.cyclic(n)?.dims))
    })();
    let tot = r.record_value("HC via Tot", tot);
    let diagonal = (|| -> Result<Vec<usize>> {
        let diag = cyl.diagonal();
        let (mc, _) = normalized_mixed_complex(&diag, n + 1, c.cap)?;
        mc.check()?;
        Ok(mc.cyclic(n)?.dims)
    })();
    let diagonal = r.record_value("HC of the diagonal", diagonal);
    if let Some((hh, hcd)) = &direct {
        r.homology.push(HomologyTable {
            name: "HH(A#H)".into(),
            dims: hh.clone(),
        });
        r.homology.push(HomologyTable {
            name: "HC(A#H)".into(),
            dims: hcd.clone(),
        });
    }
    if let Some((hh, hct)) = &tot {
        r.homology.push(HomologyTable {
            name: "HH(Tot)".into(),
            dims: hh.clone(),
        });
        r.homology.push(HomologyTable {
            name: "HC(Tot)".into(),
            dims: hct.clone(),
        });
    }
    if let Some(d) = &diagonal {
        r.homology.push(HomologyTable {
            name: "HC(diagonal)".into(),
            dims: d.clone(),
        });
    }
    if let (Some((_, a)), Some((_, b)), Some(d)) = (&direct, &tot, &diagonal) {
        let agree = if a == b && a == d {
            Ok(())
        } else {
            Err(crate::Violation::new("HC(A#H) = HC(Tot) = HC(diagonal)", format!("{a:?}, {b:?}, {d:?}")).into())
        };
        r.record("HC agrees across Tot, diagonal and A#H", agree);
    }
}

fn e1(r: &mut Report, s: &Scenario, cyl: &HopfCrossedCylinder) -> Option<SpectralPage> {
    let c = &s.compute;
    let page = r.record_value("E¹ (row homology = Hopf homology)", compute_e1(cyl, c.max_p, c.max_q, c.cap))?;
    r.pages.push(page.clone());
    Some(page)
}

fn e2(r: &mut Report, s: &Scenario, cyl: &HopfCrossedCylinder, e1_page: Option<SpectralPage>) {
    let c = &s.compute;
    let Some(e2_page) = r.record_value("E² (induced cyclic columns)", compute_e2(cyl, c.max_p, c.max_q, c.cap)) else {
        return;
    };
    if let Some(e1_page) = e1_page {
        let bad = (0..=c.max_p)
            .flat_map(|p| (0..=c.max_q).map(move |q| (p, q)))
            .find(|&(p, q)| e2_page.get(p, q) > e1_page.get(p, q));
        let outcome = match bad {
            None => Ok(()),
            Some((p, q)) => Err(crate::Violation::new("dim E² ≤ dim E¹", format!("(p,q)=({p},{q})")).into()),
        };
        r.record("E² entries bounded by E¹", outcome);
    }
    r.pages.push(e2_page);
}

fn collapse(r: &mut Report, s: &Scenario, cyl: &HopfCrossedCylinder, required: bool) {
    let c = &s.compute;
    if !required && r.scenario.semisimple != Some(true) {
        r.skip("collapse HC(N₀) = HC(A#H)", "non-semisimple Hopf algebra");
        return;
    }
    let outcome = collapse_check(cyl, c.max_degree, c.cap);
    let report = match outcome {
        Ok(rep) => rep,
        Err(e) => {
            r.record("collapse HC(N₀) = HC(A#H)", Err(e));
            return;
        }
    };
    let outcome = if report.passed {
        Ok(())
    } else {
        Err(crate::Violation::new(
            "HC(N₀) = HC(A#H)",
            format!("{:?} vs {:?}", report.invariant_complex, report.crossed_product),
        )
        .into())
    };
    r.record("collapse HC(N₀) = HC(A#H)", outcome);
    r.collapse = Some(report);
}

/// Runs `command` on a parsed scenario. Mathematical failures and resource
/// limits are recorded in the report, never raised.
pub fn run_command(command: Command, s: &Scenario) -> Report {
    let built = s.build();
    let mut r = Report {
        command: command.name().into(),
        scenario: ScenarioEcho {
            name: s.label(),
            field: s.field.to_string(),
            dim_h: built.as_ref().map_or(0, |b| b.hopf.dim()),
            dim_a: built.as_ref().map_or(0, |b| b.algebra.dim()),
            semisimple: built.as_ref().ok().and_then(|b| is_semisimple(&b.hopf).ok()),
            max_degree: s.compute.max_degree,
            max_p: s.compute.max_p,
            max_q: s.compute.max_q,
            cap: s.compute.cap,
        },
        checks: Vec::new(),
        homology: Vec::new(),
        pages: Vec::new(),
        collapse: None,
    };
    let b = match built {
        Ok(b) => b,
        Err(e) => {
            r.record("load scenario", Err(e));
            return r;
        }
    };
    let structure_ok = ingestion(&mut r, &b);
    let axioms_ok = r.passed();
    if !structure_ok {
        return r;
    }
    let cyl = HopfCrossedCylinder::new_unchecked(b.action, b.cocycle);
    if command == Command::Verify || command == Command::Report {
        verify(&mut r, s, &cyl);
    }
    if !axioms_ok {
        return r;
    }
    match command {
        Command::Verify => {}
        Command::Hc => hc(&mut r, s, &cyl),
        Command::E1 => {
            e1(&mut r, s, &cyl);
        }
        Command::E2 => {
            let page = e1(&mut r, s, &cyl);
            e2(&mut r, s, &cyl, page);
        }
        Command::Collapse => collapse(&mut r, s, &cyl, true),
        Command::Report => {
            hc(&mut r, s, &cyl);
            let page = e1(&mut r, s, &cyl);
            e2(&mut r, s, &cyl, page);
            collapse(&mut r, s, &cyl, false);
        }
    }
    r
}

pub fn render_machine(r: &Report) -> String {
    let mut out = serde_json::to_string_pretty(r).expect("report serializes");
    out.push('\n');
    out
}

fn render_page(out: &mut String, page: &SpectralPage) {
    let _ = writeln!(out, "E{} page (rows q, columns p):", if page.page == 1 { "¹" } else { "²" });
    let _ = write!(out, "  {:>4}", "q\\p");
    for p in 0..=page.max_p() {
        let _ = write!(out, " {p:>4}");
    }
    out.push('\n');
    for q in (0..=page.max_q()).rev() {
        let _ = write!(out, "  {q:>4}");
        for p in 0..=page.max_p() {
            let _ = write!(out, " {:>4}", page.get(p, q));
        }
        out.push('\n');
    }
}

pub fn render_human(r: &Report) -> String {
    let mut out = String::new();
    let s = &r.scenario;
    let _ = writeln!(out, "hclab {} :: {}", r.command, s.name);
    if !s.field.is_empty() {
        let semisimple = match s.semisimple {
            Some(true) => "yes",
            Some(false) => "no",
            None => "undecided",
        };
        let _ = writeln!(
            out,
            "field {}  dim H = {}  dim A = {}  semisimple H: {}",
            s.field, s.dim_h, s.dim_a, semisimple
        );
        let _ = writeln!(
            out,
            "max_degree {}  max_p {}  max_q {}  cap {}",
            s.max_degree, s.max_p, s.max_q, s.cap
        );
    }
    out.push('\n');
    let width = r.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
    for c in &r.checks {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
            Status::Skipped => "SKIP",
        };
        let _ = write!(out, "{tag:<5} {}", c.name);
        if let Some(d) = &c.detail {
            let pad = width - c.name.chars().count();
            let _ = write!(out, "{}  {d}", " ".repeat(pad));
        }
        out.push('\n');
    }
    if !r.homology.is_empty() {
        out.push('\n');
        for h in &r.homology {
            let dims: Vec<String> = h.dims.iter().map(|d| d.to_string()).collect();
            let _ = writeln!(out, "{:<14} {}", h.name, dims.join(", "));
        }
    }
    for page in &r.pages {
        out.push('\n');
        render_page(&mut out, page);
    }
    if let Some(c) = &r.collapse {
        let show = |v: &[usize]| v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ");
        let _ = writeln!(
            out,
            "\ncollapse: HC(A#H) = {}  HC(N0) = {}  {}",
            show(&c.crossed_product),
            show(&c.invariant_complex),
            if c.passed { "PASS" } else { "FAIL" }
        );
    }
    let _ = writeln!(out, "\nresult: {} (exit {})", if r.passed() { "PASS" } else { "FAIL" }, r.exit_code());
    out
}
