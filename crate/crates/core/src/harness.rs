//! Randomized batch verification.
//!
//! Each suite runs `trials` independent trials. Trial `t` of suite `s` draws
//! everything from a ChaCha8 generator seeded with
//! `trial_seed(master_seed, s, t)` (SplitMix64 mixing, see
//! [`crate::random::trial_seed`]), so any record can be reproduced from its
//! statement id and witness seed alone via [`reproduce`].
//!
//! Every statement produces one nonnegative residual per trial; the trial
//! fails when the residual exceeds `tol × factor`, where `factor` is fixed
//! per statement. Boolean statements report `0` or `1` against a fixed
//! threshold of `0.5`.

use std::fmt::Write as _;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::controlled::{self, random_commuting_positive, random_noncommuting_positive};
use crate::embed;
use crate::error::{Error, Result};
use crate::frames::{self, Frame, FRAME_TOL};
use crate::hilbert::QVector;
use crate::multiplier::{self, Symbol};
use crate::operator::{positivity_equivalence, QOperator};
use crate::random::{
    random_gl_plus, random_operator, random_orthonormal_basis, random_quaternion, random_self_adjoint, random_vector,
    rng_from_seed, trial_seed, TrialRng,
};

/// Sampled vectors per trial for inequality and identity checks.
pub const SAMPLES_PER_TRIAL: usize = 64;

/// Frames are redrawn until their lower bound exceeds this.
pub const MIN_LOWER_BOUND: f64 = 1e-6;

pub const MAX_GENERATION_ATTEMPTS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Generator {
    /// Components uniform in `[-1, 1]`.
    Uniform,
    /// Random orthonormal bases (`m = n`).
    OrthonormalBasis,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialConfig {
    /// Space dimension, or its upper bound when `vary_dims` is set.
    pub dim: usize,
    /// Frame cardinality, or its upper bound when `vary_dims` is set.
    pub count: usize,
    /// Draw `n ∈ [1, dim]` and `m ∈ [n, count]` per trial.
    pub vary_dims: bool,
    pub trials: usize,
    pub master_seed: u64,
    pub tol: f64,
    pub generator: Generator,
}

impl Default for TrialConfig {
    fn default() -> Self {
        Self { dim: 8, count: 24, vary_dims: true, trials: 100, master_seed: 0, tol: 1e-9, generator: Generator::Uniform }
    }
}

impl TrialConfig {
    pub fn validate(&self) -> Result<()> {
        if !(1..=8).contains(&self.dim) {
            return Err(Error::InvalidConfig(format!("dimension {} outside [1, 8]", self.dim)));
        }
        if self.count < self.dim || self.count > 24 {
            return Err(Error::InvalidConfig(format!("count {} outside [{}, 24]", self.count, self.dim)));
        }
        if !(self.tol > 0.0) {
            return Err(Error::InvalidConfig("tolerance must be positive".into()));
        }
        Ok(())
    }

    fn draw_dims(&self, rng: &mut TrialRng) -> (usize, usize) {
        if self.vary_dims {
            let n = rng.random_range(1..=self.dim);
            let m = rng.random_range(n..=self.count.max(n));
            (n, m)
        } else {
            (self.dim, self.count)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Axioms,
    Frames,
    Controlled,
    Multipliers,
    All,
}

impl Suite {
    pub const EACH: [Suite; 4] = [Suite::Axioms, Suite::Frames, Suite::Controlled, Suite::Multipliers];

    fn stream(self) -> u64 {
        match self {
            Suite::Axioms => 1,
            Suite::Frames => 2,
            Suite::Controlled => 3,
            Suite::Multipliers => 4,
            Suite::All => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Frames => "frames",
            Suite::Controlled => "controlled",
            Suite::Multipliers => "multipliers",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "axioms" => Ok(Suite::Axioms),
            "frames" => Ok(Suite::Frames),
            "controlled" => Ok(Suite::Controlled),
            "multipliers" => Ok(Suite::Multipliers),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidConfig(format!("unknown suite `{other}`"))),
        }
    }
}

/// One statement's outcome in a single trial.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub id: &'static str,
    pub residual: f64,
    /// Threshold as a multiple of the configured tolerance; `None` marks a
    /// boolean statement.
    pub factor: Option<f64>,
}

impl Outcome {
    fn numeric(id: &'static str, residual: f64, factor: f64) -> Self {
        Self { id, residual, factor: Some(factor) }
    }

    fn boolean(id: &'static str, ok: bool) -> Self {
        Self { id, residual: if ok { 0.0 } else { 1.0 }, factor: None }
    }

    pub fn threshold(&self, tol: f64) -> f64 {
        self.factor.map_or(0.5, |f| f * tol)
    }

    pub fn failed(&self, tol: f64) -> bool {
        // NaN residuals count as failures
        !(self.residual <= self.threshold(tol))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatementRecord {
    pub statement_id: String,
    pub trials: usize,
    pub failures: usize,
    pub max_residual: f64,
    pub witness_seed: u64,
    pub threshold: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub config: TrialConfig,
    pub suite: Suite,
    pub records: Vec<StatementRecord>,
}

impl VerificationReport {
    pub fn failures(&self) -> usize {
        self.records.iter().map(|r| r.failures).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn record(&self, id: &str) -> Option<&StatementRecord> {
        self.records.iter().find(|r| r.statement_id == id)
    }

    /// `statement_id trials failures max_residual witness_seed`, one per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.records {
            writeln!(s, "{} {} {} {:e} {}", r.statement_id, r.trials, r.failures, r.max_residual, r.witness_seed).unwrap();
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable report")
    }
}

fn samples(rng: &mut TrialRng, n: usize) -> Vec<QVector> {
    (0..SAMPLES_PER_TRIAL).map(|_| random_vector(rng, n)).collect()
}

/// Draws a frame with lower bound above [`MIN_LOWER_BOUND`].
pub fn gen_frame_with(rng: &mut TrialRng, generator: Generator, n: usize, m: usize) -> Result<Frame> {
    for _ in 0..MAX_GENERATION_ATTEMPTS {
        let frame = match generator {
            Generator::Uniform => Frame::with_dim(n, (0..m).map(|_| random_vector(rng, n)).collect())?,
            Generator::OrthonormalBasis => Frame::with_dim(n, random_orthonormal_basis(rng, n))?,
        };
        if frame.optimal_bounds().0 > MIN_LOWER_BOUND {
            return Ok(frame);
        }
    }
    Err(Error::GenerationExhausted { attempts: MAX_GENERATION_ATTEMPTS })
}

/// The frame for trial `trial`, a pure function of `(master_seed, trial)`.
pub fn gen_frame(cfg: &TrialConfig, trial: u64) -> Result<Frame> {
    cfg.validate()?;
    let mut rng = rng_from_seed(trial_seed(cfg.master_seed, 0, trial));
    let (n, m) = cfg.draw_dims(&mut rng);
    gen_frame_with(&mut rng, cfg.generator, n, m)
}

/// A family spanning a proper subspace of `ℍⁿ` (all zeros when `n = 1`).
fn gen_deficient(rng: &mut TrialRng, n: usize, m: usize) -> Result<Frame> {
    let span: Vec<QVector> = (0..n.saturating_sub(1)).map(|_| random_vector(rng, n)).collect();
    let vectors = (0..m)
        .map(|_| {
            let mut v = QVector::zeros(n);
            for s in &span {
                v.axpy(random_quaternion(rng), s);
            }
            v
        })
        .collect();
    Frame::with_dim(n, vectors)
}

fn axioms_trial(cfg: &TrialConfig, seed: u64) -> Result<Vec<Outcome>> {
    let mut rng = rng_from_seed(seed);
    let n = if cfg.vary_dims { rng.random_range(1..=cfg.dim) } else { cfg.dim };
    let f = random_vector(&mut rng, n);
    let g = random_vector(&mut rng, n);
    let h = random_vector(&mut rng, n);
    let q = random_quaternion(&mut rng);
    let ip = |a: &QVector, b: &QVector| a.inner(b).expect("equal dims");
    let dq = |a: crate::Quaternion, b: crate::Quaternion| (a - b).norm();

    let mut out = Vec::new();
    out.push(Outcome::numeric("inner.conjugate_symmetry", dq(ip(&f, &g).conj(), ip(&g, &f)), 0.1));
    let ff = ip(&f, &f);
    out.push(Outcome::numeric("inner.real_positive", ff.imag_norm() + (-ff.w).max(0.0), 0.1));
    out.push(Outcome::numeric("inner.additive", dq(ip(&f, &(&g + &h)), ip(&f, &g) + ip(&f, &h)), 0.1));
    out.push(Outcome::numeric("inner.left_linear", dq(ip(&f.left_scale(q), &g), q * ip(&f, &g)), 0.1));
    out.push(Outcome::numeric("inner.conjugate_right", dq(ip(&f, &g.left_scale(q)), ip(&f, &g) * q.conj()), 0.1));
    out.push(Outcome::numeric("inner.cauchy_schwarz", (ip(&f, &g).norm() - f.norm() * g.norm()).max(0.0), 0.1));

    let t = random_operator(&mut rng, n);
    let u = random_operator(&mut rng, n);
    let lhs = ip(&g, &t.apply(&f)?);
    let rhs = ip(&t.adjoint().apply(&g)?, &f);
    out.push(Outcome::numeric("operator.adjoint_identity", dq(lhs, rhs), 0.1));
    let lin = t.apply(&f.left_scale(q))?.max_abs_diff(&t.apply(&f)?.left_scale(q));
    out.push(Outcome::numeric("operator.left_linear", lin, 0.1));
    out.push(Outcome::numeric("operator.adjoint_antihomomorphism", (&t * &u).adjoint().max_abs_diff(&(&u.adjoint() * &t.adjoint())), 0.1));
    let inv_res = match t.inverse() {
        Ok(inv) => {
            let id = QOperator::identity(n);
            (&t * &inv).max_abs_diff(&id).max((&inv * &t).max_abs_diff(&id)) / n as f64
        }
        Err(_) => f64::INFINITY,
    };
    out.push(Outcome::numeric("operator.inverse_two_sided", inv_res, 1.0));

    let (ct, cu) = (embed::to_complex(&t), embed::to_complex(&u));
    let hom = (embed::to_complex(&(&t * &u)) - &cu * &ct).iter().map(|z| z.norm()).fold(0.0, f64::max);
    out.push(Outcome::numeric("embed.homomorphism", hom, 1e-3));
    let adj = (embed::to_complex(&t.adjoint()) - ct.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
    out.push(Outcome::numeric("embed.adjoint", adj, 1e-3));

    let sa = random_self_adjoint(&mut rng, n);
    out.push(Outcome::boolean("embed.eigenvalue_pairing", embed::spectrum_self_adjoint(&sa).is_ok()));

    let p = random_gl_plus(&mut rng, n);
    let smp = samples(&mut rng, n);
    let sqrt_res = match p.sqrt_psd() {
        Ok(r) => (&r * &r).max_abs_diff(&p) / p.op_norm() + r.self_adjoint_deviation() / p.op_norm(),
        Err(_) => f64::INFINITY,
    };
    out.push(Outcome::numeric("operator.sqrt_psd", sqrt_res, 10.0));
    let eq = positivity_equivalence(&p, &smp, cfg.tol.max(1e-12));
    out.push(Outcome::boolean("operator.positivity_equivalence", eq.consistent() && eq.in_gl_plus));
    Ok(out)
}

fn frames_trial(cfg: &TrialConfig, seed: u64) -> Result<Vec<Outcome>> {
    let mut rng = rng_from_seed(seed);
    let (n, m) = cfg.draw_dims(&mut rng);
    let frame = gen_frame_with(&mut rng, cfg.generator, n, m)?;
    let s = frame.frame_operator();
    let (a, b) = frame.optimal_bounds();
    let scale = s.max_abs().max(1.0);
    let smp = samples(&mut rng, n);

    let mut out = Vec::new();
    out.push(Outcome::numeric("frames.self_adjoint", s.self_adjoint_deviation() / scale, 0.1));
    out.push(Outcome::boolean("frames.positive", s.is_positive(1e-10)?));
    out.push(Outcome::numeric("frames.composition", frames::synthesis_analysis_operator(&frame).max_abs_diff(s) / scale, 0.1));

    let mut form = 0.0f64;
    let mut ineq = 0.0f64;
    let mut recon_a = 0.0f64;
    let mut recon_s = 0.0f64;
    let dual = frame.canonical_dual()?;
    for psi in &smp {
        let np = psi.norm_sqr();
        let sum = frame.frame_sum(psi)?;
        let q = s.quadratic_form(psi)?;
        form = form.max(((q.w - sum).abs() + q.imag_norm()) / sum.max(f64::MIN_POSITIVE));
        ineq = ineq.max(((a * np - sum).max(sum - b * np)).max(0.0) / (b * np));
        let nrm = psi.norm();
        recon_a = recon_a.max(frame.reconstruct_with(&dual, psi)?.distance(psi) / nrm);
        recon_s = recon_s.max(dual.reconstruct_with(&frame, psi)?.distance(psi) / nrm);
    }
    out.push(Outcome::numeric("frames.quadratic_form", form, 0.1));
    out.push(Outcome::numeric("frames.inequality", ineq, 1.0));
    out.push(Outcome::numeric("frames.reconstruction_dual_coefficients", recon_a, 1.0));
    out.push(Outcome::numeric("frames.reconstruction_dual_vectors", recon_s, 1.0));

    let (lo, hi) = frame.bound_witnesses()?;
    out.push(Outcome::numeric("frames.witness_lower", (frame.frame_sum(&lo)? - a).abs() / a, 1e3));
    out.push(Outcome::numeric("frames.witness_upper", (frame.frame_sum(&hi)? - b).abs() / b, 1e3));

    let inv = s.inverse()?;
    out.push(Outcome::numeric("frames.dual_operator", dual.frame_operator().max_abs_diff(&inv) / inv.max_abs().max(1.0), 1.0));
    if cfg.generator == Generator::OrthonormalBasis {
        out.push(Outcome::numeric("frames.orthonormal_bounds", (a - 1.0).abs().max((b - 1.0).abs()), 1e-3));
    }
    Ok(out)
}

fn controlled_trial(cfg: &TrialConfig, seed: u64) -> Result<Vec<Outcome>> {
    let mut rng = rng_from_seed(seed);
    let (n, m) = cfg.draw_dims(&mut rng);
    let frame = gen_frame_with(&mut rng, cfg.generator, n, m)?;
    let c = random_commuting_positive(&frame, rng.random());
    let smp = samples(&mut rng, n);
    let tol = cfg.tol;

    let mut out = Vec::new();
    let check = controlled::check_controlled(&frame, &c, tol, &smp)?;
    out.push(Outcome::boolean("controlled.check", check.is_controlled && check.form_within_bounds));
    let sc = controlled::controlled_frame_operator(&frame, &c)?;
    out.push(Outcome::numeric("controlled.form_real", check.max_imaginary / sc.op_norm(), 0.1));
    let nc = controlled::verify_prop_nc(&frame, &c, tol, &smp)?;
    out.push(Outcome::boolean("controlled.base_is_frame", nc.base_is_frame));
    out.push(Outcome::numeric("controlled.commutation", nc.commutation, 1.0));
    out.push(Outcome::numeric("controlled.two_sums", nc.two_sums, 1.0));
    out.push(Outcome::numeric("controlled.recovered_frame_operator", nc.recovered, 1.0));
    let cf = controlled::verify_prop_cfpro(&frame, &c, tol, &smp)?;
    out.push(Outcome::boolean("controlled.cfpro_commuting", cf.forward && cf.backward && cf.controlled && cf.commuting));

    // counterexample: positive controller that does not commute with S
    let counter = match random_noncommuting_positive(&frame, &mut rng) {
        Some(cc) => {
            let rep = controlled::verify_prop_cfpro(&frame, &cc, tol, &smp)?;
            !rep.controlled && !rep.commuting && rep.forward && rep.backward
        }
        // n = 1 frame operators commute with every real-scalar controller;
        // any draw that does not commute in ℍ¹ still goes through the branch
        // above, so reaching here means the draw was a genuine commutant
        None => true,
    };
    out.push(Outcome::boolean("controlled.counterexample_rejected", counter));

    let inv = frame.frame_operator().inverse()?;
    let ic = controlled::check_controlled(&frame, &inv, tol, &smp)?;
    let dev = (ic.lower - 1.0).abs().max((ic.upper - 1.0).abs());
    out.push(Outcome::numeric("controlled.inverse_controller_bounds", if ic.is_controlled { dev } else { f64::INFINITY }, 1.0));
    Ok(out)
}

fn multipliers_trial(cfg: &TrialConfig, seed: u64) -> Result<Vec<Outcome>> {
    let mut rng = rng_from_seed(seed);
    let (n, m) = cfg.draw_dims(&mut rng);
    let frame = gen_frame_with(&mut rng, cfg.generator, n, m)?;
    let tol = cfg.tol;
    let weights: Vec<f64> = (0..m).map(|_| rng.random_range(0.1..=2.0)).collect();
    let signed: Vec<f64> = weights.iter().map(|&w| if rng.random_bool(0.5) { w } else { -w }).collect();
    let w = Symbol::Real(weights.clone());

    let mut out = Vec::new();
    out.push(Outcome::numeric("multiplier.wl1", multiplier::verify_wl1(&frame, &Symbol::Real(signed), tol)?.violation, 1.0));
    let two = multiplier::verify_wl1(&frame, &Symbol::constant(2.0, m), tol)?;
    let (a, b) = frame.optimal_bounds();
    let dev = ((two.scaled_bounds.0 - 4.0 * a).abs() / (4.0 * a)).max((two.scaled_bounds.1 - 4.0 * b).abs() / (4.0 * b));
    out.push(Outcome::numeric("multiplier.wl1_constant_two", dev, 1.0));

    let pos = multiplier::verify_wl2(&frame, &w, tol)?;
    out.push(Outcome::numeric("multiplier.wl2_positive", if pos.self_adjoint && pos.definite && pos.invertible { pos.residual } else { f64::INFINITY }, 0.1));
    let neg_sym = Symbol::Real(weights.iter().map(|x| -x).collect());
    let neg = multiplier::verify_wl2(&frame, &neg_sym, tol)?;
    out.push(Outcome::numeric("multiplier.wl2_negative", if neg.self_adjoint && neg.definite && neg.invertible { neg.residual } else { f64::INFINITY }, 0.1));

    let mop = multiplier::Multiplier::new(&w, &frame, &frame)?.operator()?;
    out.push(Outcome::numeric("multiplier.self_adjoint", mop.self_adjoint_deviation() / mop.max_abs().max(1.0), 0.1));
    let wb = multiplier::weighted_frame_bounds(&frame, &w)?;
    let roots: Vec<f64> = weights.iter().map(|x| x.sqrt()).collect();
    let (ra, rb) = frame.scaled(&roots)?.optimal_bounds();
    out.push(Outcome::numeric("multiplier.weighted_bounds", ((wb.lower - ra).abs()).max((wb.upper - rb).abs()) / rb, 1e-3));

    let th = multiplier::verify_theorem_equiv(&frame, &w, FRAME_TOL)?;
    out.push(Outcome::boolean("multiplier.theorem_equivalence", th.agree() && th.frame));
    let deficient = gen_deficient(&mut rng, n, m)?;
    let dw = Symbol::Real((0..m).map(|_| rng.random_range(0.1..=2.0)).collect());
    let dth = multiplier::verify_theorem_equiv(&deficient, &dw, FRAME_TOL)?;
    out.push(Outcome::boolean("multiplier.theorem_deficient", dth.agree() && !dth.frame));

    let p44 = multiplier::verify_prop44(rng.random(), tol)?;
    let p44_res = if p44.omega_in_range && p44.semi_normalized && p44.positive { p44.reconstruction.max(p44.eigen_residual) } else { f64::INFINITY };
    out.push(Outcome::numeric("multiplier.diagonal_construction", p44_res, 1.0));
    Ok(out)
}

/// Runs one trial of `suite` (not `All`) from an explicit seed.
pub fn run_trial(cfg: &TrialConfig, suite: Suite, seed: u64) -> Result<Vec<Outcome>> {
    match suite {
        Suite::Axioms => axioms_trial(cfg, seed),
        Suite::Frames => frames_trial(cfg, seed),
        Suite::Controlled => controlled_trial(cfg, seed),
        Suite::Multipliers => multipliers_trial(cfg, seed),
        Suite::All => Err(Error::InvalidConfig("a single trial needs a concrete suite".into())),
    }
}

/// Residual of `statement_id` recomputed from a witness seed.
pub fn reproduce(cfg: &TrialConfig, statement_id: &str, seed: u64) -> Result<f64> {
    let suite = suite_of(statement_id);
    let outcomes = run_trial(cfg, suite, seed)?;
    outcomes
        .into_iter()
        .find(|o| o.id == statement_id)
        .map(|o| o.residual)
        .ok_or_else(|| Error::InvalidConfig(format!("statement `{statement_id}` not produced")))
}

fn suite_of(statement_id: &str) -> Suite {
    match statement_id.split('.').next() {
        Some("frames") => Suite::Frames,
        Some("controlled") => Suite::Controlled,
        Some("multiplier") => Suite::Multipliers,
        _ => Suite::Axioms,
    }
}

fn run_single(cfg: &TrialConfig, suite: Suite) -> Result<Vec<StatementRecord>> {
    let results: Vec<(u64, Result<Vec<Outcome>>)> = (0..cfg.trials as u64)
        .into_par_iter()
        .map(|t| {
            let seed = trial_seed(cfg.master_seed, suite.stream(), t);
            (seed, run_trial(cfg, suite, seed))
        })
        .collect();

    let mut records: Vec<StatementRecord> = Vec::new();
    // sequential reduction in trial order keeps witness selection stable
    for (seed, res) in results {
        let outcomes = res.unwrap_or_else(|e| {
            eprintln!("trial error (seed {seed}): {e}");
            vec![Outcome::numeric(generation_id(suite), f64::INFINITY, 1.0)]
        });
        for o in outcomes {
            let failed = o.failed(cfg.tol);
            let rec = match records.iter_mut().find(|r| r.statement_id == o.id) {
                Some(r) => r,
                None => {
                    records.push(StatementRecord {
                        statement_id: o.id.to_string(),
                        trials: 0,
                        failures: 0,
                        max_residual: f64::NEG_INFINITY,
                        witness_seed: seed,
                        threshold: o.threshold(cfg.tol),
                    });
                    records.last_mut().expect("just pushed")
                }
            };
            rec.trials += 1;
            rec.failures += failed as usize;
            if o.residual > rec.max_residual || o.residual.is_nan() {
                rec.max_residual = o.residual;
                rec.witness_seed = seed;
            }
        }
    }
    Ok(records)
}

fn generation_id(suite: Suite) -> &'static str {
    match suite {
        Suite::Axioms => "axioms.trial_error",
        Suite::Frames => "frames.trial_error",
        Suite::Controlled => "controlled.trial_error",
        Suite::Multipliers => "multiplier.trial_error",
        Suite::All => "trial_error",
    }
}

/// Runs `suite` and aggregates one record per statement.
pub fn run_suite(cfg: &TrialConfig, suite: Suite) -> Result<VerificationReport> {
    cfg.validate()?;
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut records = Vec::new();
    for s in suites {
        records.extend(run_single(cfg, s)?);
    }
    Ok(VerificationReport { config: cfg.clone(), suite, records })
}
