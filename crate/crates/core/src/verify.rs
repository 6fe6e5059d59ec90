//! The verification harness: exhaustive desk-scale sweeps over (λ;R)
//! families, one suite per identity group.
//!
//! Conjectural identities are *measured*: a failure never aborts the sweep,
//! it is reported as a counterexample with a serialized witness carrying
//! both sides of the failed identity.

use crate::catabolism::{ct_polynomial, enumerate_cct, enumerate_ct, ct_transpose};
use crate::error::Error;
use crate::kostka::{default_max_deg, k_poly_recurrence, k_poly_symmetrizer};
use crate::lrtab::{
    act_reduced_word, charge_r_min, charge_r_orbit, dual_tableau_context, embed_cover,
    enumerate_lrt, lex_first_reduced_word, lr_multiplicity, lr_transpose, permutations,
    LRContext,
};
use crate::par::{map_slice, ExecMode};
use crate::partition::Partition;
use crate::qpoly::{mirror, QPolynomial};
use crate::rect::{Rect, RectangleSequence};
use crate::riggedconf::{
    charge_rc, cocharge_rc, enumerate_configurations, enumerate_riggings, enumerate_size_valid,
    fishel_m_poly, m_matrix, omega_complement, rc_duality, rc_polynomial, rc_transpose,
    zeta_embed, AdmissibleMode, Configuration, RcRoute,
};
use crate::tableau::{evacuation, Tableau};
use crate::word::conj_automorphism_word;
use serde::Serialize;
use serde_json::json;
use std::fmt;

/// Size caps for the instance family.
#[derive(Clone, Copy, Debug)]
pub struct SweepBounds {
    /// total cells of the rectangle sequence (= |λ|)
    pub max_cells: i64,
    /// bounding box for each rectangle
    pub max_rect_rows: i64,
    pub max_rect_cols: i64,
    /// number of rectangles
    pub max_seq: usize,
    /// assignment cap for the minimal-decomposition charge
    pub charge_min_cap: u64,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds {
            max_cells: 8,
            max_rect_rows: 3,
            max_rect_cols: 3,
            max_seq: 3,
            charge_min_cap: 1 << 22,
        }
    }
}

/// Outcome of one check on one instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedCap,
}

/// One line of a verification report.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub instance: String,
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

impl CheckReport {
    fn pass(suite: &str, instance: &str, check: &str) -> Self {
        CheckReport {
            suite: suite.into(),
            instance: instance.into(),
            check: check.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    fn fail(suite: &str, instance: &str, check: &str, witness: serde_json::Value) -> Self {
        CheckReport {
            suite: suite.into(),
            instance: instance.into(),
            check: check.into(),
            status: Status::Fail,
            witness: Some(witness),
        }
    }

    fn skipped(suite: &str, instance: &str, check: &str) -> Self {
        CheckReport {
            suite: suite.into(),
            instance: instance.into(),
            check: check.into(),
            status: Status::SkippedCap,
            witness: None,
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::SkippedCap => "skipped-cap",
        };
        write!(f, "[{tag}] {} :: {} :: {}", self.suite, self.instance, self.check)?;
        if let Some(w) = &self.witness {
            write!(f, " :: {w}")?;
        }
        Ok(())
    }
}

/// The named verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Routes,
    Reordering,
    Duality,
    Transpose,
    Monotonicity,
    LemmaVacancy,
    ChargeR,
    Catabolism,
    Zeta,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Routes,
        Suite::Reordering,
        Suite::Duality,
        Suite::Transpose,
        Suite::Monotonicity,
        Suite::LemmaVacancy,
        Suite::ChargeR,
        Suite::Catabolism,
        Suite::Zeta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Routes => "routes",
            Suite::Reordering => "reordering",
            Suite::Duality => "duality",
            Suite::Transpose => "transpose",
            Suite::Monotonicity => "monotonicity",
            Suite::LemmaVacancy => "lemma-vacancy",
            Suite::ChargeR => "charge-r",
            Suite::Catabolism => "catabolism",
            Suite::Zeta => "zeta",
        }
    }

    pub fn parse(name: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|s| s.name() == name)
    }
}

/// All rectangle sequences within the bounds, canonical order.
pub fn rect_sequences(bounds: &SweepBounds) -> Vec<RectangleSequence> {
    let mut types = Vec::new();
    for rows in 1..=bounds.max_rect_rows {
        for cols in 1..=bounds.max_rect_cols {
            if rows * cols <= bounds.max_cells {
                types.push(Rect::new(rows, cols));
            }
        }
    }
    let mut out = Vec::new();
    fn rec(
        types: &[Rect],
        left: i64,
        max_len: usize,
        acc: &mut Vec<Rect>,
        out: &mut Vec<RectangleSequence>,
    ) {
        if !acc.is_empty() {
            out.push(RectangleSequence::new(acc.clone()));
        }
        if acc.len() == max_len {
            return;
        }
        for &r in types {
            if r.size() <= left {
                acc.push(r);
                rec(types, left - r.size(), max_len, acc, out);
                acc.pop();
            }
        }
    }
    rec(&types, bounds.max_cells, bounds.max_seq, &mut Vec::new(), &mut out);
    out.sort_by_key(|r| {
        (r.total_cells(), r.len(), r.rects().iter().map(|x| (x.rows, x.cols)).collect::<Vec<_>>())
    });
    out
}

/// All (λ, R) instances within the bounds, canonical order.
pub fn instances(bounds: &SweepBounds) -> Vec<(Partition, RectangleSequence)> {
    let mut out = Vec::new();
    for rects in rect_sequences(bounds) {
        let size = rects.total_cells();
        for lambda in Partition::enumerate(size, size) {
            out.push((lambda, rects.clone()));
        }
    }
    out
}

fn instance_name(lambda: &Partition, rects: &RectangleSequence) -> String {
    format!("λ={lambda} R={rects}")
}

/// Run a suite over the bounded family; reports appear in canonical
/// instance order regardless of execution mode.
pub fn run_suite(suite: Suite, bounds: &SweepBounds, mode: ExecMode) -> Vec<CheckReport> {
    let family = instances(bounds);
    let nested = map_slice(mode, &family, |(lambda, rects)| match suite {
        Suite::Routes => check_routes(lambda, rects, bounds),
        Suite::Reordering => check_reordering(lambda, rects),
        Suite::Duality => check_duality(lambda, rects),
        Suite::Transpose => check_transpose(lambda, rects),
        Suite::Monotonicity => check_monotonicity(lambda, rects, bounds),
        Suite::LemmaVacancy => check_lemma_vacancy(lambda, rects),
        Suite::ChargeR => check_charge_r(lambda, rects, bounds),
        Suite::Catabolism => check_catabolism(lambda, rects),
        Suite::Zeta => check_zeta(lambda, rects),
    });
    nested.into_iter().flatten().collect()
}

fn poly_json(p: &QPolynomial) -> serde_json::Value {
    serde_json::to_value(p).expect("polynomial serializes")
}

fn tableau_json(t: &Tableau) -> serde_json::Value {
    serde_json::to_value(t).expect("tableau serializes")
}

// ---------------------------------------------------------------------------
// routes
// ---------------------------------------------------------------------------

fn check_routes(
    lambda: &Partition,
    rects: &RectangleSequence,
    bounds: &SweepBounds,
) -> Vec<CheckReport> {
    let suite = "routes";
    let name = instance_name(lambda, rects);
    let mut out = Vec::new();
    let recurrence = k_poly_recurrence(lambda, rects);

    // fermionic vs enumeration, every instance
    let rc_enum = rc_polynomial(lambda, rects, RcRoute::Enumerate).expect("admissible");
    let rc_ferm = rc_polynomial(lambda, rects, RcRoute::Fermionic).expect("admissible");
    if rc_enum == rc_ferm {
        out.push(CheckReport::pass(suite, &name, "rc-enumerate = rc-fermionic"));
    } else {
        out.push(CheckReport::fail(
            suite,
            &name,
            "rc-enumerate = rc-fermionic",
            json!({"enumerate": poly_json(&rc_enum), "fermionic": poly_json(&rc_ferm)}),
        ));
    }

    // |LRT| = |RC| and the LR coefficient, every instance
    let lrt = enumerate_lrt(lambda, rects);
    let lr = lr_multiplicity(lambda, rects);
    if lrt.len() as i64 == rc_enum.eval(1) && lr == lrt.len() as i64 {
        out.push(CheckReport::pass(suite, &name, "|LRT| = |RC| = LR coefficient"));
    } else {
        out.push(CheckReport::fail(
            suite,
            &name,
            "|LRT| = |RC| = LR coefficient",
            json!({"lrt": lrt.len(), "rc": rc_enum.eval(1), "lr": lr}),
        ));
    }

    if !rects.is_dominant() {
        return out;
    }

    // the five polynomial routes on dominant sequences
    let symmetrizer = k_poly_symmetrizer(lambda, rects, default_max_deg(rects), ExecMode::Sequential);
    let n_r = rects.n_stat();
    let rc_mirrored = if rc_enum.is_zero() || rc_enum.degree() <= n_r {
        mirror(&rc_enum, n_r).ok()
    } else {
        None
    };
    let ct = ct_polynomial(lambda, rects);
    let lrt_orbit = {
        let ctx = LRContext::new(rects.clone());
        let mut poly = QPolynomial::zero();
        let mut failed = None;
        for t in &lrt {
            match charge_r_orbit(t, &ctx) {
                Ok(c) => poly.add_term(c, 1),
                Err(e) => {
                    failed = Some(e);
                    break;
                }
            }
        }
        match failed {
            None => Ok(poly),
            Some(e) => Err(e),
        }
    };
    let mut routes: Vec<(&str, Option<QPolynomial>)> = vec![
        ("symmetrizer", Some(symmetrizer.clone())),
        ("rc-mirror", rc_mirrored),
        ("ct", ct.ok()),
        ("lrt-orbit", lrt_orbit.ok()),
    ];
    let _ = bounds;
    for (route, poly) in routes.drain(..) {
        match poly {
            Some(p) if p == recurrence => {
                out.push(CheckReport::pass(suite, &name, &format!("recurrence = {route}")));
            }
            Some(p) => out.push(CheckReport::fail(
                suite,
                &name,
                &format!("recurrence = {route}"),
                json!({"recurrence": poly_json(&recurrence), route: poly_json(&p)}),
            )),
            None => out.push(CheckReport::fail(
                suite,
                &name,
                &format!("recurrence = {route}"),
                json!({"error": "route failed to produce a polynomial"}),
            )),
        }
    }

    // positivity and the degree bound (dominant)
    if recurrence.is_nonnegative() && (recurrence.is_zero() || recurrence.degree() <= n_r) {
        out.push(CheckReport::pass(suite, &name, "positivity and degree <= n(R)"));
    } else {
        out.push(CheckReport::fail(
            suite,
            &name,
            "positivity and degree <= n(R)",
            json!({"k": poly_json(&recurrence), "n_stat": n_r}),
        ));
    }

    // |CT| agrees on dominant instances
    let ct_count = enumerate_ct(lambda, rects).len() as i64;
    if ct_count == lrt.len() as i64 {
        out.push(CheckReport::pass(suite, &name, "|CT| = |LRT|"));
    } else {
        out.push(CheckReport::fail(
            suite,
            &name,
            "|CT| = |LRT|",
            json!({"ct": ct_count, "lrt": lrt.len()}),
        ));
    }
    out
}

// ---------------------------------------------------------------------------
// reordering
// ---------------------------------------------------------------------------

fn dominant_rearrangements(rects: &RectangleSequence) -> Vec<RectangleSequence> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for u in permutations(rects.len()) {
        let r = rects.permuted(&u);
        if r.is_dominant() && seen.insert(format!("{r}")) {
            out.push(r);
        }
    }
    out
}

fn check_reordering(lambda: &Partition, rects: &RectangleSequence) -> Vec<CheckReport> {
    let suite = "reordering";
    let name = instance_name(lambda, rects);
    let mut out = Vec::new();
    if !rects.is_dominant() {
        return out;
    }
    let base = k_poly_recurrence(lambda, rects);
    for other in dominant_rearrangements(rects) {
        if other == *rects {
            continue;
        }
        let k = k_poly_recurrence(lambda, &other);
        if k == base {
            out.push(CheckReport::pass(suite, &name, &format!("K equal for {other}")));
        } else {
            out.push(CheckReport::fail(
                suite,
                &name,
                &format!("K equal for {other}"),
                json!({"base": poly_json(&base), "other": poly_json(&k)}),
            ));
        }
    }
    // evacuation: involution and image LRT(λ;rev R)
    let n = rects.total_rows();
    let lrt = enumerate_lrt(lambda, rects);
    let mut images = Vec::new();
    let mut ok = true;
    for t in &lrt {
        let ev = evacuation(t, n).expect("straight tableau in range");
        if evacuation(&ev, n).expect("straight") != *t {
            ok = false;
            out.push(CheckReport::fail(
                suite,
                &name,
                "evacuation involution",
                tableau_json(t),
            ));
        }
        images.push(ev);
    }
    if ok {
        out.push(CheckReport::pass(suite, &name, "evacuation involution"));
    }
    images.sort_by_key(|t| t.row_word());
    let rev_set = enumerate_lrt(lambda, &rects.reverse());
    if images == rev_set {
        out.push(CheckReport::pass(suite, &name, "evacuation image is LRT(λ;rev R)"));
    } else {
        out.push(CheckReport::fail(
            suite,
            &name,
            "evacuation image is LRT(λ;rev R)",
            json!({"images": images.len(), "target": rev_set.len()}),
        ));
    }
    out
}

// ---------------------------------------------------------------------------
// duality
// ---------------------------------------------------------------------------

fn check_duality(lambda: &Partition, rects: &RectangleSequence) -> Vec<CheckReport> {
    let suite = "duality";
    let name = instance_name(lambda, rects);
    let mut out = Vec::new();
    if rects.is_empty() || lambda.size() != rects.total_cells() {
        return out;
    }
    let max_mu = rects.rects().iter().map(|r| r.cols).max().unwrap_or(0);
    let k = lambda.part(1).max(max_mu) + 1;
    let n = rects.total_rows();
    let (dual_lambda, dual_rects) = dual_tableau_context(lambda, rects, k, n);

    if rects.is_dominant() {
        // contragredient duality of K (proven)
        let base = k_poly_recurrence(lambda, rects);
        let dual = k_poly_recurrence(&dual_lambda, &dual_rects.reverse());
        if base == dual {
            out.push(CheckReport::pass(suite, &name, "K = K(dual, reversed)"));
        } else {
            out.push(CheckReport::fail(
                suite,
                &name,
                "K = K(dual, reversed)",
                json!({"base": poly_json(&base), "dual": poly_json(&dual)}),
            ));
        }
    }

    // dual_tableau: bijection LRT(λ;R) -> LRT(λ̃;R̃) preserving orbit charge
    let lrt = enumerate_lrt(lambda, rects);
    let ctx = LRContext::new(rects.clone());
    let dual_ctx = LRContext::new(dual_rects.clone());
    let mut images = Vec::new();
    let mut ok = true;
    for t in &lrt {
        let image = crate::tableau::dual_tableau(t, k, n).expect("in range");
        match (charge_r_orbit(t, &ctx), charge_r_orbit(&image, &dual_ctx)) {
            (Ok(a), Ok(b)) if a == b => {}
            (a, b) => {
                ok = false;
                out.push(CheckReport::fail(
                    suite,
                    &name,
                    "dual_tableau preserves orbit charge",
                    json!({"tableau": tableau_json(t), "charge": format!("{a:?}"), "dual": format!("{b:?}")}),
                ));
            }
        }
        // involution
        if crate::tableau::dual_tableau(&image, k, n).expect("in range") != *t {
            ok = false;
            out.push(CheckReport::fail(suite, &name, "dual involution", tableau_json(t)));
        }
        images.push(image);
    }
    if ok {
        out.push(CheckReport::pass(suite, &name, "dual_tableau charge + involution"));
    }
    images.sort_by_key(|t| t.row_word());
    let target = enumerate_lrt(&dual_lambda, &dual_rects);
    if images == target {
        out.push(CheckReport::pass(suite, &name, "dual_tableau image is LRT(λ̃;R̃)"));
    } else {
        out.push(CheckReport::fail(
            suite,
            &name,
            "dual_tableau image is LRT(λ̃;R̃)",
            json!({"images": images.len(), "target": target.len()}),
        ));
    }

    // CCT duality (proven)
    let cct: Vec<Tableau> = enumerate_cct(lambda, rects)
        .iter()
        .map(|s| crate::tableau::dual_tableau(s, k, n).expect("in range"))
        .collect();
    let mut cct_sorted = cct.clone();
    cct_sorted.sort_by_key(|t| t.row_word());
    let cct_target = enumerate_cct(&dual_lambda, &dual_rects);
    if cct_sorted == cct_target {
        out.push(CheckReport::pass(suite, &name, "CCT duality"));
    } else {
        out.push(CheckReport::fail(
            suite,
            &name,
            "CCT duality",
            json!({"images": cct_sorted.len(), "target": cct_target.len()}),
        ));
    }

    // rc duality on the transposed type
    let t_lambda = lambda.transpose();
    let t_rects = rects.transpose();
    let k_rc = t_lambda.len().max(
        t_rects.rects().iter().map(|r| r.rows).max().unwrap_or(0) as usize,
    ) as i64
        + 1;
    let mut ok = true;
    for config in enumerate_configurations(&t_lambda, &t_rects) {
        for rigging in enumerate_riggings(&config).expect("admissible") {
            match rc_duality(&rigging, k_rc) {
                Ok(image) => {
                    let same_cocharge =
                        cocharge_rc(&rigging).unwrap() == cocharge_rc(&image).unwrap();
                    let symmetric = (1..k_rc).all(|i| {
                        (1..=config.width_bound())
                            .all(|j| config.vacancy(i, j) == image.config().vacancy(k_rc - i, j))
                    });
                    let back = rc_duality(&image, k_rc).map(|b| b == rigging).unwrap_or(false);
                    if !(same_cocharge && symmetric && back) {
                        ok = false;
                        out.push(CheckReport::fail(
                            suite,
                            &name,
                            "rc duality",
                            json!({
                                "rigging": serde_json::to_value(&rigging).unwrap(),
                                "cocharge_preserved": same_cocharge,
                                "vacancy_symmetric": symmetric,
                                "involution": back,
                            }),
                        ));
                    }
                }
                Err(e) => {
                    ok = false;
                    out.push(CheckReport::fail(
                        suite,
                        &name,
                        "rc duality",
                        json!({"error": e.to_string()}),
                    ));
                }
            }
        }
    }
    if ok {
        out.push(CheckReport::pass(suite, &name, "rc duality"));
    }
    out
}

// ---------------------------------------------------------------------------
// transpose
// ---------------------------------------------------------------------------

fn check_transpose(lambda: &Partition, rects: &RectangleSequence) -> Vec<CheckReport> {
    let suite = "transpose";
    let name = instance_name(lambda, rects);
    let mut out = Vec::new();
    if lambda.size() != rects.total_cells() {
        return out;
    }
    let n_r = rects.n_stat();

    // RC transpose: involution, statistic complement, polynomial mirror (proven)
    let mut ok = true;
    for config in enumerate_configurations(lambda, rects) {
        let m = m_matrix(&config);
        for rigging in enumerate_riggings(&config).expect("admissible") {
            let image = match rc_transpose(&rigging) {
                Ok(image) => image,
                Err(e) => {
                    ok = false;
                    out.push(CheckReport::fail(
                        suite,
                        &name,
                        "rc transpose",
                        json!({"error": e.to_string()}),
                    ));
                    continue;
                }
            };
            let statistic =
                cocharge_rc(&rigging).unwrap() + cocharge_rc(&image).unwrap() == n_r;
            let involution = rc_transpose(&image).map(|b| b == rigging).unwrap_or(false);
            // exchange identity at supported sizes
            let exchange = (1..=config.depth_bound()).all(|k| {
                (1..=config.width_bound()).all(|n| {
                    config.m_multiplicity(k, n) == 0
                        || (config.m_multiplicity(k, n) == image.config().vacancy(n, k)
                            && config.vacancy(k, n) == image.config().m_multiplicity(n, k))
                })
            });
            if !(statistic && involution && exchange) {
                ok = false;
                out.push(CheckReport::fail(
                    suite,
                    &name,
                    "rc transpose",
                    json!({
                        "rigging": serde_json::to_value(&rigging).unwrap(),
                        "statistic_complement": statistic,
                        "involution": involution,
                        "exchange": exchange,
                    }),
                ));
            }
        }
        let _ = m;
    }
    if ok {
        out.push(CheckReport::pass(suite, &name, "rc transpose"));
    }
    let rc = rc_polynomial(lambda, rects, RcRoute::Fermionic).expect("admissible");
    let rc_t =
        rc_polynomial(&lambda.transpose(), &rects.transpose(), RcRoute::Fermionic)
            .expect("admissible");
    let mirrored = if rc.is_zero() || rc.degree() <= n_r { mirror(&rc, n_r).ok() } else { None };
    if mirrored.as_ref() == Some(&rc_t) {
        out.push(CheckReport::pass(suite, &name, "RC transpose polynomial mirror"));
    } else {
        out.push(CheckReport::fail(
            suite,
            &name,
            "RC transpose polynomial mirror",
            json!({"rc": poly_json(&rc), "rc_transposed": poly_json(&rc_t), "n_stat": n_r}),
        ));
    }

    // LR transpose bijection + involution
    let ctx = LRContext::new(rects.clone());
    let ctx_t = LRContext::new(rects.transpose());
    let lrt = enumerate_lrt(lambda, rects);
    let mut images = Vec::new();
    let mut ok = true;
    for t in &lrt {
        let image = lr_transpose(t, &ctx).expect("LR tableau");
        if lr_transpose(&image, &ctx_t).expect("LR tableau") != *t {
            ok = false;
            out.push(CheckReport::fail(suite, &name, "LR transpose involution", tableau_json(t)));
        }
        images.push(image);
    }
    images.sort_by_key(|t| t.row_word());
    if images == enumerate_lrt(&lambda.transpose(), &rects.transpose()) && ok {
        out.push(CheckReport::pass(suite, &name, "LR transpose bijection"));
    } else if ok {
        out.push(CheckReport::fail(
            suite,
            &name,
            "LR transpose bijection",
            json!({"images": images.len()}),
        ));
    }

    // transpose symmetry of K (conjecture): any dominant rearrangement of R^t
    if rects.is_dominant() {
        if let Some(rearranged) = dominant_rearrangements(&rects.transpose()).into_iter().next() {
            let lhs = k_poly_recurrence(&lambda.transpose(), &rearranged);
            let k = k_poly_recurrence(lambda, rects);
            let rhs = if k.is_zero() || k.degree() <= n_r { mirror(&k, n_r).ok() } else { None };
            if rhs.as_ref() == Some(&lhs) {
                out.push(CheckReport::pass(suite, &name, "K transpose symmetry"));
            } else {
                out.push(CheckReport::fail(
                    suite,
                    &name,
                    "K transpose symmetry",
                    json!({"transposed": poly_json(&lhs), "mirrored": format!("{rhs:?}")}),
                ));
            }
        }

        // CT transpose bijection (conjecture; needs R and R^t dominant)
        if rects.transpose().is_dominant() {
            let ct = enumerate_ct(lambda, rects);
            let mut images = Vec::new();
            let mut ok = true;
            for s in &ct {
                match ct_transpose(s, rects) {
                    Ok(u) => images.push(u),
                    Err(e) => {
                        ok = false;
                        out.push(CheckReport::fail(
                            suite,
                            &name,
                            "CT transpose",
                            json!({"tableau": tableau_json(s), "error": e.to_string()}),
                        ));
                    }
                }
            }
            images.sort_by_key(|t| t.row_word());
            images.dedup();
            let target = enumerate_cct(&lambda.transpose(), &rects.transpose());
            if ok && images == target && images.len() == ct.len() {
                out.push(CheckReport::pass(suite, &name, "CT transpose bijection"));
            } else if ok {
                out.push(CheckReport::fail(
                    suite,
                    &name,
                    "CT transpose bijection",
                    json!({"images": images.len(), "target": target.len(), "source": ct.len()}),
                ));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// monotonicity
// ---------------------------------------------------------------------------

fn check_monotonicity(
    lambda: &Partition,
    rects: &RectangleSequence,
    bounds: &SweepBounds,
) -> Vec<CheckReport> {
    let suite = "monotonicity";
    let name = instance_name(lambda, rects);
    let mut out = Vec::new();
    if !rects.is_dominant() || lambda.size() != rects.total_cells() {
        return out;
    }
    // partners: dominant R' within bounds with R ⊵ R', R ≠ R' as τ-data
    let base_k = k_poly_recurrence(lambda, rects);
    for other in rect_sequences(bounds) {
        if other.total_cells() != rects.total_cells()
            || !other.is_dominant()
            || !rects.seq_dominates(&other)
            || other.seq_dominates(rects)
        {
            continue;
        }
        let other_k = k_poly_recurrence(lambda, &other);
        if base_k.le_coefficientwise(&other_k) {
            out.push(CheckReport::pass(suite, &name, &format!("K ≤ K for {other}")));
        } else {
            out.push(CheckReport::fail(
                suite,
                &name,
                &format!("K ≤ K for {other}"),
                json!({"base": poly_json(&base_k), "other": poly_json(&other_k)}),
            ));
        }
        // RC inclusion object-by-object on the transposed types
        let t_lambda = lambda.transpose();
        let mut ok = true;
        for config in enumerate_configurations(&t_lambda, &rects.transpose()) {
            for rigging in enumerate_riggings(&config).expect("admissible") {
                let rebuilt = Configuration::new(
                    t_lambda.clone(),
                    other.transpose(),
                    config.nus().to_vec(),
                )
                .ok()
                .filter(|c| c.is_admissible(AdmissibleMode::Direct))
                .and_then(|c| {
                    crate::riggedconf::RiggedConfiguration::new(
                        c,
                        rigging.labels().to_vec(),
                        rigging.convention(),
                    )
                    .ok()
                });
                match rebuilt {
                    Some(image) => {
                        if cocharge_rc(&image).unwrap() != cocharge_rc(&rigging).unwrap() {
                            ok = false;
                        }
                    }
                    None => ok = false,
                }
            }
        }
        if ok {
            out.push(CheckReport::pass(suite, &name, &format!("RC inclusion into {other}")));
        } else {
            out.push(CheckReport::fail(
                suite,
                &name,
                &format!("RC inclusion into {other}"),
                json!({"target": format!("{other}")}),
            ));
        }
    }

    // covering-step embedding in normalized position
    if let Some(first) = rects.rects().first().copied() {
        let rest_ok = rects.rects().get(1).map_or(true, |s| s.cols != first.cols);
        if first.rows >= 2 && rest_ok {
            // split cover ((k^a), rest) -> ((k^{a-1}), (k), rest)
            let mut target = vec![Rect::new(first.rows - 1, first.cols), Rect::new(1, first.cols)];
            target.extend_from_slice(&rects.rects()[1..]);
            let target = RectangleSequence::new(target);
            let ctx = LRContext::new(rects.clone());
            let lrt = enumerate_lrt(lambda, rects);
            let mut images = Vec::new();
            let mut ok = true;
            for t in &lrt {
                match embed_cover(t, &ctx, &target) {
                    Ok(image) => images.push(image),
                    Err(e) => {
                        ok = false;
                        out.push(CheckReport::fail(
                            suite,
                            &name,
                            "embed_cover",
                            json!({"tableau": tableau_json(t), "error": e.to_string()}),
                        ));
                    }
                }
            }
            let mut dedup = images.clone();
            dedup.sort_by_key(|t| t.row_word());
            dedup.dedup();
            if ok && dedup.len() == lrt.len() {
                out.push(CheckReport::pass(suite, &name, "embed_cover injective"));
            } else if ok {
                out.push(CheckReport::fail(
                    suite,
                    &name,
                    "embed_cover injective",
                    json!({"images": dedup.len(), "source": lrt.len()}),
                ));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// lemma-vacancy
// ---------------------------------------------------------------------------

fn check_lemma_vacancy(lambda: &Partition, rects: &RectangleSequence) -> Vec<CheckReport> {
    let suite = "lemma-vacancy";
    let name = instance_name(lambda, rects);
    let mut out = Vec::new();
    if lambda.size() != rects.total_cells() {
        return out;
    }
    let mut ok = true;
    for config in enumerate_size_valid(lambda, rects, false) {
        let direct = config.is_admissible(AdmissibleMode::Direct);
        let support = config.is_admissible(AdmissibleMode::Support);
        let strengthened = config.is_admissible(AdmissibleMode::Strengthened);
        if !(direct == support && support == strengthened) {
            ok = false;
            out.push(CheckReport::fail(
                suite,
                &name,
                "three admissibility modes agree",
                json!({
                    "nus": config.nus().iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
                    "direct": direct, "support": support, "strengthened": strengthened,
                }),
            ));
        }
        if direct {
            let depth = config.depth_bound();
            let width = config.width_bound();
            for k in 1..=depth {
                // m_n(ν^k) = 0 whenever n > λ_{k+1}
                for n in lambda.part(k as usize + 1) + 1..=width {
                    if config.m_multiplicity(k, n) != 0 {
                        ok = false;
                        out.push(CheckReport::fail(
                            suite,
                            &name,
                            "m_n(nu^k) = 0 beyond λ_{k+1}",
                            json!({"k": k, "n": n}),
                        ));
                    }
                }
                // large-n closed form
                let n_large = width;
                let closed: i64 = lambda.part(k as usize) - lambda.part(k as usize + 1)
                    + rects
                        .rects()
                        .iter()
                        .filter(|r| r.rows == k)
                        .map(|r| (n_large - r.cols).min(0))
                        .sum::<i64>();
                if config.vacancy(k, n_large) != closed {
                    ok = false;
                    out.push(CheckReport::fail(
                        suite,
                        &name,
                        "large-n vacancy closed form",
                        json!({"k": k, "n": n_large, "vacancy": config.vacancy(k, n_large), "closed": closed}),
                    ));
                }
                // partial convexity at supported sizes
                for n in 1..=width {
                    if config.m_multiplicity(k, n) > 0
                        && 2 * config.vacancy(k, n)
                            < config.vacancy(k, n - 1) + config.vacancy(k, n + 1)
                    {
                        ok = false;
                        out.push(CheckReport::fail(
                            suite,
                            &name,
                            "partial convexity",
                            json!({"k": k, "n": n}),
                        ));
                    }
                }
            }
        }
    }
    if ok {
        out.push(CheckReport::pass(suite, &name, "lemma-vacancy checks"));
    }
    out
}

// ---------------------------------------------------------------------------
// charge-r
// ---------------------------------------------------------------------------

fn check_charge_r(
    lambda: &Partition,
    rects: &RectangleSequence,
    bounds: &SweepBounds,
) -> Vec<CheckReport> {
    let suite = "charge-r";
    let name = instance_name(lambda, rects);
    let mut out = Vec::new();
    if lambda.size() != rects.total_cells() {
        return out;
    }
    let ctx = LRContext::new(rects.clone());
    let lrt = enumerate_lrt(lambda, rects);
    let t_count = rects.len();

    let mut ok_int = true;
    let mut ok_orbit = true;
    for t in &lrt {
        let base = match charge_r_orbit(t, &ctx) {
            Ok(c) => c,
            Err(Error::NonIntegral { numer, denom }) => {
                ok_int = false;
                out.push(CheckReport::fail(
                    suite,
                    &name,
                    "orbit charge integral",
                    json!({"tableau": tableau_json(t), "numer": numer, "denom": denom}),
                ));
                continue;
            }
            Err(e) => {
                ok_int = false;
                out.push(CheckReport::fail(
                    suite,
                    &name,
                    "orbit charge integral",
                    json!({"error": e.to_string()}),
                ));
                continue;
            }
        };
        for u in permutations(t_count) {
            let (tu, ctx_u) = crate::lrtab::act_permutation(&u, t, &ctx).expect("switch");
            match charge_r_orbit(&tu, &ctx_u) {
                Ok(c) if c == base => {}
                other => {
                    ok_orbit = false;
                    out.push(CheckReport::fail(
                        suite,
                        &name,
                        "orbit invariance",
                        json!({"tableau": tableau_json(t), "u": u, "value": format!("{other:?}"), "base": base}),
                    ));
                }
            }
        }
    }
    if ok_int && !lrt.is_empty() {
        out.push(CheckReport::pass(suite, &name, "orbit charge integral"));
    }
    if ok_orbit && !lrt.is_empty() {
        out.push(CheckReport::pass(suite, &name, "orbit invariance"));
    }

    // reduced-word independence for every u (conjecture)
    let mut ok_words = true;
    for t in &lrt {
        for u in permutations(t_count) {
            let canonical = lex_first_reduced_word(&u);
            let reference = act_reduced_word(&canonical, t, &ctx).expect("switch").0;
            for word in all_reduced_words(&u) {
                let image = act_reduced_word(&word, t, &ctx).expect("switch").0;
                if image != reference {
                    ok_words = false;
                    out.push(CheckReport::fail(
                        suite,
                        &name,
                        "reduced-word independence",
                        json!({"tableau": tableau_json(t), "word": word, "u": u}),
                    ));
                }
            }
        }
    }
    if ok_words && !lrt.is_empty() {
        out.push(CheckReport::pass(suite, &name, "reduced-word independence"));
    }

    // minimal decomposition agrees with the orbit value (conjectural)
    if rects.is_dominant() {
        let mut ok_min = true;
        let mut skipped = false;
        for t in &lrt {
            match (charge_r_min(t, &ctx, bounds.charge_min_cap), charge_r_orbit(t, &ctx)) {
                (Ok(min), Ok(orbit)) if min == orbit => {}
                (Err(Error::CapExceeded { .. }), _) => skipped = true,
                (min, orbit) => {
                    ok_min = false;
                    out.push(CheckReport::fail(
                        suite,
                        &name,
                        "charge_r min = orbit",
                        json!({"tableau": tableau_json(t), "min": format!("{min:?}"), "orbit": format!("{orbit:?}")}),
                    ));
                }
            }
        }
        if skipped {
            out.push(CheckReport::skipped(suite, &name, "charge_r min = orbit"));
        } else if ok_min && !lrt.is_empty() {
            out.push(CheckReport::pass(suite, &name, "charge_r min = orbit"));
        }
    }
    out
}

/// All reduced words of a permutation (t is tiny here).
pub fn all_reduced_words(u: &[usize]) -> Vec<Vec<usize>> {
    fn length(u: &[usize]) -> usize {
        let mut inv = 0;
        for i in 0..u.len() {
            for j in i + 1..u.len() {
                if u[i] > u[j] {
                    inv += 1;
                }
            }
        }
        inv
    }
    let len = length(u);
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for a in 1..u.len() {
        // u = s_a * v with ℓ(v) = ℓ(u) - 1: descend when value a sits after a+1
        let pos_a = u.iter().position(|&v| v == a).unwrap();
        let pos_a1 = u.iter().position(|&v| v == a + 1).unwrap();
        if pos_a > pos_a1 {
            let mut v = u.to_vec();
            for entry in v.iter_mut() {
                if *entry == a {
                    *entry = a + 1;
                } else if *entry == a + 1 {
                    *entry = a;
                }
            }
            for mut word in all_reduced_words(&v) {
                word.insert(0, a);
                out.push(word);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// catabolism
// ---------------------------------------------------------------------------

fn check_catabolism(lambda: &Partition, rects: &RectangleSequence) -> Vec<CheckReport> {
    let suite = "catabolism";
    let name = instance_name(lambda, rects);
    let mut out = Vec::new();
    if lambda.size() != rects.total_cells() {
        return out;
    }
    let ct = enumerate_ct(lambda, rects);
    // every catabolizable tableau has content γ(R)
    let gamma = rects.gamma_weight();
    let n = rects.total_rows();
    if ct.iter().all(|s| s.content(Some(n)) == gamma.entries()) {
        out.push(CheckReport::pass(suite, &name, "CT content is γ(R)"));
    } else {
        out.push(CheckReport::fail(suite, &name, "CT content is γ(R)", json!({})));
    }
    if !rects.is_dominant() {
        return out;
    }
    let lrt_count = enumerate_lrt(lambda, rects).len();
    let rc = rc_polynomial(lambda, rects, RcRoute::Fermionic).expect("admissible");
    if ct.len() == lrt_count && ct.len() as i64 == rc.eval(1) {
        out.push(CheckReport::pass(suite, &name, "|CT| = |LRT| = |RC|"));
    } else {
        out.push(CheckReport::fail(
            suite,
            &name,
            "|CT| = |LRT| = |RC|",
            json!({"ct": ct.len(), "lrt": lrt_count, "rc": rc.eval(1)}),
        ));
    }
    // CT polynomial mirrors RC (paired conjectures)
    let ct_poly = ct_polynomial(lambda, rects).expect("dominant");
    let n_r = rects.n_stat();
    let mirrored = if ct_poly.is_zero() || ct_poly.degree() <= n_r {
        mirror(&ct_poly, n_r).ok()
    } else {
        None
    };
    if mirrored.as_ref() == Some(&rc) {
        out.push(CheckReport::pass(suite, &name, "CT = mirror(RC)"));
    } else {
        out.push(CheckReport::fail(
            suite,
            &name,
            "CT = mirror(RC)",
            json!({"ct": poly_json(&ct_poly), "rc": poly_json(&rc), "n_stat": n_r}),
        ));
    }
    // CT symmetry: shortest conjugation permutation between dominant
    // rearrangements maps CT onto CT (conjecture)
    for other in dominant_rearrangements(rects) {
        if other == *rects {
            continue;
        }
        let target_gamma = other.gamma_weight();
        let mut images = Vec::new();
        for s in &ct {
            let mut word = s.row_word();
            // sort the content by adjacent conjugation moves, shortest path
            let mut current = gamma.entries().to_vec();
            loop {
                let target = target_gamma.entries();
                let Some(i) = (0..current.len() - 1)
                    .find(|&i| current[i] != target[i] && current[i + 1] == target[i])
                else {
                    break;
                };
                word = conj_automorphism_word(i as i64 + 1, &word);
                current.swap(i, i + 1);
            }
            images.push(crate::tableau::p_symbol_row(&word));
        }
        images.sort_by_key(|t| t.row_word());
        images.dedup();
        let target_ct = enumerate_ct(lambda, &other);
        if images == target_ct {
            out.push(CheckReport::pass(suite, &name, &format!("CT symmetry to {other}")));
        } else {
            out.push(CheckReport::fail(
                suite,
                &name,
                &format!("CT symmetry to {other}"),
                json!({"images": images.len(), "target": target_ct.len()}),
            ));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// zeta
// ---------------------------------------------------------------------------

fn check_zeta(lambda: &Partition, rects: &RectangleSequence) -> Vec<CheckReport> {
    let suite = "zeta";
    let name = instance_name(lambda, rects);
    let mut out = Vec::new();
    if lambda.size() != rects.total_cells() {
        return out;
    }
    let mut ok = true;
    let mut images = Vec::new();
    for config in enumerate_configurations(lambda, rects) {
        for rigging in enumerate_riggings(&config).expect("admissible") {
            let quantum = omega_complement(&rigging);
            match zeta_embed(&quantum) {
                Ok(image) => {
                    if charge_rc(&image).unwrap() != charge_rc(&quantum).unwrap() {
                        ok = false;
                        out.push(CheckReport::fail(
                            suite,
                            &name,
                            "ζ preserves charge",
                            serde_json::to_value(&quantum).unwrap(),
                        ));
                    }
                    if !image.config().is_admissible(AdmissibleMode::Direct) {
                        ok = false;
                        out.push(CheckReport::fail(
                            suite,
                            &name,
                            "ζ image admissible",
                            serde_json::to_value(&image).unwrap(),
                        ));
                    }
                    images.push(image);
                }
                Err(e) => {
                    ok = false;
                    out.push(CheckReport::fail(
                        suite,
                        &name,
                        "ζ embeds",
                        json!({"error": e.to_string()}),
                    ));
                }
            }
        }
    }
    let mut dedup: Vec<String> = images.iter().map(|i| format!("{i}")).collect();
    let total = dedup.len();
    dedup.sort();
    dedup.dedup();
    if dedup.len() != total {
        ok = false;
        out.push(CheckReport::fail(suite, &name, "ζ injective", json!({"images": total})));
    }
    if ok {
        out.push(CheckReport::pass(suite, &name, "ζ charge-preserving embedding"));
    }

    // Fishel specialization against the rc and K routes when R has the shape
    if let Some((n, r, k)) = fishel_shape(rects) {
        let fishel = fishel_m_poly(lambda, n, r, k).expect("legal parameters");
        let rc = rc_polynomial(lambda, rects, RcRoute::Fermionic).expect("admissible");
        let n_r = rects.n_stat();
        let rc_mirrored = if rc.is_zero() || rc.degree() <= n_r { mirror(&rc, n_r).ok() } else { None };
        if rc_mirrored.as_ref() == Some(&fishel) {
            out.push(CheckReport::pass(suite, &name, "fishel = mirror(rc)"));
        } else {
            out.push(CheckReport::fail(
                suite,
                &name,
                "fishel = mirror(rc)",
                json!({"fishel": poly_json(&fishel), "rc": poly_json(&rc)}),
            ));
        }
        let k_poly = k_poly_recurrence(lambda, rects);
        if k_poly == fishel {
            out.push(CheckReport::pass(suite, &name, "fishel = K"));
        } else {
            out.push(CheckReport::fail(
                suite,
                &name,
                "fishel = K",
                json!({"fishel": poly_json(&fishel), "k": poly_json(&k_poly)}),
            ));
        }
    }
    out
}

/// Recognize ((2)^{r-k}, (1,1)^k, (1)^{n-2r}) and return (n, r, k).
fn fishel_shape(rects: &RectangleSequence) -> Option<(i64, i64, i64)> {
    let mut twos = 0i64;
    let mut columns = 0i64;
    let mut singles = 0i64;
    let mut phase = 0;
    for r in rects.rects() {
        let kind = match (r.rows, r.cols) {
            (1, 2) => 0,
            (2, 1) => 1,
            (1, 1) => 2,
            _ => return None,
        };
        if kind < phase {
            return None;
        }
        phase = kind;
        match kind {
            0 => twos += 1,
            1 => columns += 1,
            _ => singles += 1,
        }
    }
    let r = twos + columns;
    let n = 2 * r + singles;
    Some((n, r, columns))
}

/// Convenience: run every suite.
pub fn run_all(bounds: &SweepBounds, mode: ExecMode) -> Vec<CheckReport> {
    Suite::ALL.iter().flat_map(|&s| run_suite(s, bounds, mode)).collect()
}
