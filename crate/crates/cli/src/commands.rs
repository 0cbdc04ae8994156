//! One function per subcommand; each builds a report from library calls.

use superbider_core::bider::{
    self, biderivation_space, special_biderivation_space, BiderivationSpace,
};
use superbider_core::maps::{self, CommutingWitness, MapSpace};
use superbider_core::subspaces::{self, HypothesisReport};
use superbider_core::{lsa, Error, LieSuperalgebra, Parity, Result, ValidationReport};

use crate::report::{Report, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SpaceKind {
    Der,
    Centroid,
    Commuting,
    Bider,
    Special,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TheoremKind {
    BiderCentroid,
    CommutingCentroid,
    SpecialZero,
    LemmaSuite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum DegreeArg {
    Even,
    Odd,
    Both,
}

impl DegreeArg {
    pub fn parities(self) -> &'static [Parity] {
        match self {
            DegreeArg::Even => &[Parity::Even],
            DegreeArg::Odd => &[Parity::Odd],
            DegreeArg::Both => &Parity::BOTH,
        }
    }
}

/// The algebra together with where it came from.
pub struct Loaded {
    pub algebra: LieSuperalgebra,
    pub source: String,
}

fn header(report: &mut Report, loaded: &Loaded) {
    let l = &loaded.algebra;
    report.set("algebra.name", l.name());
    report.set("algebra.source", loaded.source.as_str());
    report.set("dims", format!("({}|{})", l.dim_even(), l.dim_odd()));
}

fn hypotheses(report: &mut Report, algebra: &LieSuperalgebra) -> HypothesisReport {
    let h = subspaces::hypotheses(algebra);
    report.set("hyp.perfect", h.is_perfect);
    report.set("hyp.centerless", h.is_centerless);
    report.set("hyp.derived_dim", h.derived_dim);
    report.set("hyp.center_dim", h.center_dim);
    report.set("hyp.centralizer_of_derived_dim", h.centralizer_of_derived_dim);
    h
}

fn list_violations(report: &mut Report, prefix: &str, violations: &[impl ToString]) {
    report.set(format!("{prefix}.count"), violations.len());
    for (i, v) in violations.iter().enumerate() {
        report.set(format!("{prefix}.{i}"), v.to_string());
    }
}

pub fn info(loaded: &Loaded) -> Report {
    let mut report = Report::new("info");
    header(&mut report, loaded);
    let l = &loaded.algebra;
    hypotheses(&mut report, l);
    report.set("dim.commuting", maps::commuting_map_space(l).dim());
    for &p in &Parity::BOTH {
        let name = p.name();
        report.set(format!("dim.der.{name}"), maps::derivation_space(l, p).dim());
        report.set(format!("dim.centroid.{name}"), maps::centroid_space(l, p).dim());
        report.set(format!("dim.bider.{name}"), biderivation_space(l, p).dim());
        report.set(format!("dim.special.{name}"), special_biderivation_space(l, p).dim());
    }
    report
}

pub fn verify(loaded: &Loaded) -> Report {
    let mut report = Report::new("verify");
    header(&mut report, loaded);
    verification(&mut report, &loaded.algebra.validate());
    report
}

/// Renders a failed validation, used both by `verify` and for files the loader rejects.
pub fn verification(report: &mut Report, validation: &ValidationReport) {
    report.set("valid", validation.is_empty());
    list_violations(report, "violation", &validation.violations);
    if !validation.is_empty() {
        report.escalate(Status::Failed);
    }
}

fn map_space(report: &mut Report, space: &MapSpace, key: &str) {
    report.set(format!("dim.{key}"), space.dim());
    for (i, m) in space.basis.iter().enumerate() {
        report.set(format!("basis.{key}.{i}"), m.to_string());
    }
}

fn bider_space(report: &mut Report, space: &BiderivationSpace, key: &str) {
    report.set(format!("dim.{key}"), space.dim());
    for (i, d) in space.basis.iter().enumerate() {
        report.set(format!("basis.{key}.{i}"), d.to_string());
    }
}

pub fn compute(loaded: &Loaded, kind: SpaceKind, degree: DegreeArg) -> Report {
    let mut report = Report::new("compute");
    header(&mut report, loaded);
    let l = &loaded.algebra;
    if kind == SpaceKind::Commuting {
        map_space(&mut report, &maps::commuting_map_space(l), "commuting");
        return report;
    }
    for &p in degree.parities() {
        let name = p.name();
        match kind {
            SpaceKind::Der => map_space(&mut report, &maps::derivation_space(l, p), &format!("der.{name}")),
            SpaceKind::Centroid => {
                map_space(&mut report, &maps::centroid_space(l, p), &format!("centroid.{name}"))
            }
            SpaceKind::Bider => bider_space(&mut report, &biderivation_space(l, p), &format!("bider.{name}")),
            SpaceKind::Special => bider_space(
                &mut report,
                &special_biderivation_space(l, p),
                &format!("special.{name}"),
            ),
            SpaceKind::Commuting => unreachable!(),
        }
    }
    report
}

fn certificate(report: &mut Report, outcome: &str, reason: Option<String>) {
    report.set("certificate", outcome);
    let summary = match &reason {
        Some(r) => {
            report.set("certificate.reason", r.as_str());
            format!("{}: {r}", outcome.replace('-', " "))
        }
        None => outcome.to_string(),
    };
    report.set("summary", summary);
    if outcome == "fail" {
        report.escalate(Status::Critical);
    }
}

fn not_perfect_centerless(h: &HypothesisReport) -> Option<String> {
    if !h.is_perfect {
        Some("L not perfect".into())
    } else if !h.is_centerless {
        Some("L not centerless".into())
    } else {
        None
    }
}

pub fn theorem(loaded: &Loaded, kind: TheoremKind) -> Result<Report> {
    let mut report = Report::new("theorem");
    header(&mut report, loaded);
    report.set(
        "theorem",
        match kind {
            TheoremKind::BiderCentroid => "bider-centroid",
            TheoremKind::CommutingCentroid => "commuting-centroid",
            TheoremKind::SpecialZero => "special-zero",
            TheoremKind::LemmaSuite => "lemma-suite",
        },
    );
    let l = &loaded.algebra;
    let h = hypotheses(&mut report, l);
    match kind {
        TheoremKind::BiderCentroid => bider_centroid(&mut report, l, &h)?,
        TheoremKind::CommutingCentroid => commuting_centroid(&mut report, l)?,
        TheoremKind::SpecialZero => special_zero(&mut report, l, &h),
        TheoremKind::LemmaSuite => lemma_suite(&mut report, l, &h)?,
    }
    Ok(report)
}

fn bider_centroid(report: &mut Report, l: &LieSuperalgebra, h: &HypothesisReport) -> Result<()> {
    if let Some(reason) = not_perfect_centerless(h) {
        certificate(report, "not-applicable", Some(reason));
        return Ok(());
    }
    let mut failure = None;
    for &p in &Parity::BOTH {
        let name = p.name();
        let bder = biderivation_space(l, p);
        let gamma = maps::centroid_space(l, p);
        let rank = bider::centroid_embedding_rank(l, p);
        report.set(format!("dim.bider.{name}"), bder.dim());
        report.set(format!("dim.centroid.{name}"), gamma.dim());
        report.set(format!("embedding_rank.{name}"), rank);
        let mut decomposed = 0;
        for (i, delta) in bder.basis.iter().enumerate() {
            match bider::decompose_via_centroid(l, delta) {
                Ok(g) => {
                    report.set(format!("gamma.{name}.{i}"), g.to_string());
                    decomposed += 1;
                }
                Err(Error::TheoremViolation(msg)) => {
                    failure.get_or_insert(format!("basis element {i} of degree {name}: {msg}"));
                }
                Err(e) => return Err(e),
            }
        }
        report.set(format!("decomposed.{name}"), decomposed);
        if rank != gamma.dim() {
            failure.get_or_insert(format!("γ ↦ γ([·,·]) is not injective in degree {name}"));
        }
        if gamma.dim() != bder.dim() {
            failure.get_or_insert(format!(
                "dim Γ_{name} = {} but dim BDer_{name} = {}",
                gamma.dim(),
                bder.dim()
            ));
        }
    }
    match failure {
        None => certificate(report, "pass", None),
        Some(reason) => certificate(report, "fail", Some(reason)),
    }
    Ok(())
}

fn commuting_centroid(report: &mut Report, l: &LieSuperalgebra) -> Result<()> {
    let cert = match maps::verify_commuting_in_centroid(l) {
        Ok(cert) => cert,
        Err(Error::Precondition(reason)) => {
            certificate(report, "not-applicable", Some(reason));
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    report.set("dim.commuting", cert.commuting_dim);
    report.set("dim.centroid.even", cert.centroid_dim);
    match cert.witness {
        None => certificate(report, "pass", None),
        Some(CommutingWitness::NotInCentroid { map_index, pair }) => certificate(
            report,
            "fail",
            Some(format!(
                "commuting basis map {map_index} fails f([x,y]) = [x,f(y)] at ({},{})",
                pair.0, pair.1
            )),
        ),
        Some(CommutingWitness::DoubleBracket { map_index, tuple }) => certificate(
            report,
            "fail",
            Some(format!(
                "commuting basis map {map_index} breaks the double-bracket identity at {tuple:?}"
            )),
        ),
    }
    Ok(())
}

fn special_zero(report: &mut Report, l: &LieSuperalgebra, h: &HypothesisReport) {
    if let Some(reason) = not_perfect_centerless(h) {
        certificate(report, "not-applicable", Some(reason));
        return;
    }
    let mut failure = None;
    for &p in &Parity::BOTH {
        let dim = special_biderivation_space(l, p).dim();
        report.set(format!("dim.special.{}", p.name()), dim);
        if dim != 0 {
            failure.get_or_insert(format!("nonzero special super-biderivations in degree {}", p.name()));
        }
    }
    certificate(report, if failure.is_some() { "fail" } else { "pass" }, failure);
}

/// Every identity the biderivation results rest on, over every computed basis element.
fn lemma_suite(report: &mut Report, l: &LieSuperalgebra, h: &HypothesisReport) -> Result<()> {
    let mut failures: Vec<String> = Vec::new();

    let commuting = maps::commuting_map_space(l);
    let mut from_commuting = 0;
    for (i, f) in commuting.basis.iter().enumerate() {
        let delta = bider::from_commuting_map(l, f)?;
        match bider::is_biderivation(l, &delta).first() {
            None => from_commuting += 1,
            Some(v) => failures.push(format!("[x, f_{i}(y)] is not a biderivation: {v}")),
        }
    }
    report.set("constructor.commuting.checked", commuting.dim());
    report.set("constructor.commuting.passed", from_commuting);

    for &p in &Parity::BOTH {
        let name = p.name();
        let centroid = maps::centroid_space(l, p);
        let mut from_centroid = 0;
        for (i, g) in centroid.basis.iter().enumerate() {
            let delta = bider::from_centroid(l, g)?;
            match bider::is_biderivation(l, &delta).first() {
                None => from_centroid += 1,
                Some(v) => failures.push(format!("γ_{i}([x,y]) ({name}) is not a biderivation: {v}")),
            }
        }
        report.set(format!("constructor.centroid.{name}.checked"), centroid.dim());
        report.set(format!("constructor.centroid.{name}.passed"), from_centroid);

        let space = biderivation_space(l, p);
        report.set(format!("dim.bider.{name}"), space.dim());
        let (mut cross, mut residual, mut signed, mut perfect, mut quotient) = (0, 0, 0, 0, 0);
        let (mut leibniz, mut trivial) = (0, 0);
        for (i, delta) in space.basis.iter().enumerate() {
            let tag = format!("basis element {i} of degree {name}");
            let v = bider::check_cross_identity(l, delta)?;
            match v.first() {
                None => cross += 1,
                Some(v) => failures.push(format!("{tag}: {v}")),
            }
            let r = bider::residual_membership(l, delta)?;
            match r.failures.first() {
                None => residual += 1,
                Some(f) => failures.push(format!(
                    "{tag}: residual at {:?} not in Z_L(L')",
                    f.triple
                )),
            }
            if r.signed_variant_failures.is_empty() {
                signed += 1;
            }
            if h.is_perfect {
                match bider::check_perfect_identity(l, delta)?.first() {
                    None => perfect += 1,
                    Some(v) => failures.push(format!("{tag}: {v}")),
                }
            }
            match bider::induced_on_quotient(l, delta) {
                Ok(_) => quotient += 1,
                Err(Error::TheoremViolation(msg)) => failures.push(format!("{tag}: {msg}")),
                Err(e) => return Err(e),
            }
            if bider::check_second_slot_leibniz(l, delta)?.is_empty() {
                leibniz += 1;
            }
            if bider::check_triviality(l, delta)? {
                trivial += 1;
            }
        }
        report.set(format!("lemma.cross_bracket.{name}.passed"), cross);
        report.set(format!("lemma.residual.{name}.passed"), residual);
        report.set(format!("lemma.residual_signed_variant.{name}.passed"), signed);
        if h.is_perfect {
            report.set(format!("lemma.perfect_identity.{name}.passed"), perfect);
        }
        report.set(format!("lemma.quotient.{name}.passed"), quotient);
        report.set(format!("info.second_slot_leibniz.{name}.holds"), leibniz);
        report.set(format!("info.trivial.{name}"), trivial);
    }
    if !h.is_perfect {
        report.set("lemma.perfect_identity", "not applicable: L not perfect");
    }
    list_violations(report, "failure", &failures);
    match failures.first() {
        None => certificate(report, "pass", None),
        Some(first) => certificate(report, "fail", Some(first.clone())),
    }
    Ok(())
}

pub fn dump(loaded: &Loaded, json: bool) -> String {
    let text = lsa::dump(&loaded.algebra);
    if !json {
        return text;
    }
    let mut report = Report::new("dump");
    header(&mut report, loaded);
    report.set("lsa", text);
    report.to_json()
}
