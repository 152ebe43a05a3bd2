use std::f64::consts::TAU;

use hbspace::annulus::{
    annulus_compose_experiment, harmonic_measure_inner, solve_period, Annulus, GeneralizedBlaschke,
    GreenFunction, LaurentFn,
};
use hbspace::boundary::toeplitz_apply;
use hbspace::composition::{
    cross_norm_probe, cross_space_experiment, operator_norm_probe, structure_check, DiskSelfMap, FiniteBlaschke,
    MobiusMap,
};
use hbspace::expr::{parse_complex_list, parse_rational};
use hbspace::fejer_riesz::{abs_squared, fejer_riesz};
use hbspace::hb::{
    classify_extreme, decompose, defect_norm_oracle, density_experiment, hb_inner, isometry_j, membership,
    model_space_density, plus_function, pythagorean_mate, Extremality, HbSpace, Membership, MembershipConfig,
    PythagoreanPair, DEFAULT_SUPPORT_DELTA,
};
use hbspace::rational::BoundaryZero;
use hbspace::sampling::Sampler;
use hbspace::{BoundaryGrid, Error, HardyFn, Poly, RationalFn, TrigSymbol, C64};
use rand::Rng;

use crate::config::ExperimentConfig;
use crate::record::{Check, ResultRecord, Series};

pub type Outcome = Result<ResultRecord, Error>;

/// Random members drawn per structural check.
const MEMBERS: usize = 20;

pub fn fmt_c(z: C64) -> String {
    let re = if z.re == 0.0 { 0.0 } else { z.re };
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    if im == 0.0 {
        format!("{re}")
    } else {
        format!("{re}{}{}i", if im < 0.0 { "-" } else { "+" }, im.abs())
    }
}

fn fmt_poly(p: &Poly) -> String {
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.norm() > 1e-14)
        .map(|(k, c)| match k {
            0 => format!("({})", fmt_c(*c)),
            1 => format!("({})z", fmt_c(*c)),
            _ => format!("({})z^{k}", fmt_c(*c)),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn coeff_pairs(cs: &[C64]) -> Vec<[f64; 2]> {
    cs.iter().map(|c| [c.re, c.im]).collect()
}

fn fmt_rational(r: &RationalFn) -> String {
    format!("[{}] / [{}]", fmt_poly(r.num()), fmt_poly(r.den()))
}

fn pair_from(b: &str, a: Option<&str>) -> Result<PythagoreanPair, Error> {
    let b = parse_rational(b)?;
    match a {
        Some(a) => PythagoreanPair::new(b, parse_rational(a)?),
        None => pythagorean_mate(&b),
    }
}

fn top(cfg: &ExperimentConfig) -> usize {
    *cfg.orders.last().expect("validated")
}

/// `W g + p` with random `g` of degree `< 8` and `p` in `P_{n-1}`.
fn random_member(s: &mut Sampler, space: &HbSpace) -> HardyFn {
    let g = s.poly(7);
    let p = s.poly(space.n().saturating_sub(1));
    HardyFn::from(&(&(space.divisor() * &g) + &p))
}

fn min_root_modulus(p: &Poly) -> Result<f64, Error> {
    if p.degree() == 0 {
        return Ok(f64::INFINITY);
    }
    Ok(p.roots()?.iter().map(|r| r.norm()).fold(f64::INFINITY, f64::min))
}

/// A rational self-map of the disk given by an expression.
pub struct RationalMap(pub RationalFn);

impl DiskSelfMap for RationalMap {
    fn eval(&self, z: C64) -> C64 {
        self.0.eval(z)
    }

    fn degree(&self) -> usize {
        self.0.degree()
    }
}

pub fn classify(id: &str, b: &str, expected: Option<Extremality>, cfg: &ExperimentConfig) -> Outcome {
    let mut r = ResultRecord::new(id, cfg);
    r.input("b", b);
    let class = classify_extreme(&parse_rational(b)?)?;
    r.output("class", format!("{:?}", class.tag));
    r.output("log_integral", if class.diagnostic.is_finite() { Some(class.diagnostic) } else { None });
    if let Some(e) = expected {
        r.check(Check::flag("expected_class", class.tag == e));
    }
    Ok(r)
}

pub fn mate(id: &str, b: &str, a: Option<&str>, cfg: &ExperimentConfig) -> Outcome {
    let mut r = ResultRecord::new(id, cfg);
    r.input("b", b);
    if let Some(a) = a {
        r.input("a", a);
    }
    let pair = pair_from(b, a)?;
    r.output("a", fmt_rational(pair.a()));
    r.output("a_numerator", coeff_pairs(pair.a().num().coeffs()));
    r.output("a_denominator", coeff_pairs(pair.a().den().coeffs()));
    r.check(Check::below("pythagorean_residual", pair.residual(), cfg.tol("pair")));
    let outer = min_root_modulus(pair.a().num())?;
    r.output("min_zero_modulus_of_a", if outer.is_finite() { Some(outer) } else { None });
    r.check(Check::flag("a_outer", outer >= 1.0 - 1e-6));
    Ok(r)
}

pub fn norm(id: &str, b: &str, a: Option<&str>, f: &str, cfg: &ExperimentConfig) -> Outcome {
    let mut r = ResultRecord::new(id, cfg);
    r.input("b", b).input("f", f);
    let pair = pair_from(b, a)?;
    let fr = parse_rational(f)?;
    let mut rel = Vec::new();
    let mut oracle = Vec::new();
    let mut star = Vec::new();
    for &n in &cfg.orders {
        let fn_ = HardyFn::new(fr.taylor(n));
        let s = hb_inner(&fn_, &fn_, &pair)?.re;
        let o = defect_norm_oracle(&fn_, pair.b(), n)?.norm.powi(2);
        rel.push(if s > 0.0 { (s - o).abs() / s } else { o.abs() });
        star.push(s);
        oracle.push(o);
    }
    let tol = cfg.tol("norm");
    r.series(Series::new("hb_norm_sq", &cfg.orders, &star));
    r.series(Series::new("oracle_norm_sq", &cfg.orders, &oracle));
    r.series(Series::new("relative_gap", &cfg.orders, &rel).judged(tol, |_, v| v <= tol));
    r.output("hb_norm_sq", star.last());
    r.check(Check::below("relative_gap", *rel.last().unwrap(), tol));
    let fh = HardyFn::new(fr.taylor(top(cfg)));
    let grid = cfg.grid.max((4 * (top(cfg) + 1)).next_power_of_two());
    let j = isometry_j(&fh, &pair, DEFAULT_SUPPORT_DELTA, Some(grid))?;
    r.output("j_norm_sq", j.norm_sq());
    let scale = j.hb_norm_sq.max(f64::MIN_POSITIVE);
    r.check(Check::below("isometry_defect", j.isometry_defect() / scale, cfg.tol("isometry")));
    Ok(r)
}

/// The space of a decomposition: from a symbol `b` (and optionally `a`), or
/// from boundary zeros of the mate, repeated points counting multiplicity.
pub enum Space<'a> {
    Symbol(&'a str, Option<&'a str>),
    Zeros(&'a str),
}

fn space_from(space: &Space, order: usize, r: &mut ResultRecord) -> Result<HbSpace, Error> {
    let pair = match space {
        Space::Symbol(b, a) => {
            r.input("b", b);
            pair_from(b, *a)?
        }
        Space::Zeros(z) => {
            r.input("boundary_zeros", z);
            let mut zeros: Vec<BoundaryZero> = Vec::new();
            for p in parse_complex_list(z)? {
                match zeros.iter_mut().find(|x| (x.point - p).norm() < 1e-12) {
                    Some(x) => x.multiplicity += 1,
                    None => zeros.push(BoundaryZero { point: p, multiplicity: 1 }),
                }
            }
            PythagoreanPair::with_boundary_zeros(&zeros)?
        }
    };
    HbSpace::new(pair, order)
}

pub fn decomposition(id: &str, space: Space, f: &str, cfg: &ExperimentConfig) -> Outcome {
    let mut r = ResultRecord::new(id, cfg);
    r.input("f", f);
    let space = space_from(&space, top(cfg), &mut r)?;
    r.output("boundary_zeros", space.zeros().iter().map(|z| (fmt_c(z.point), z.multiplicity)).collect::<Vec<_>>());
    let fr = parse_rational(f)?;
    let taylor = fr.taylor(top(cfg));
    let fh = HardyFn::new(taylor.clone());
    let d = decompose(&fh, &space)?;
    r.output("p", fmt_poly(&d.p));
    r.output("g_leading", coeff_pairs(&d.g.coeffs()[..d.g.coeffs().len().min(8)]));
    let tol = cfg.tol("decompose");
    r.check(Check::below("round_trip", d.residual / fh.h2_norm().max(1.0), tol));
    r.check(Check::below("interpolation", d.interpolation_defect(&fh, &space), tol));
    if cfg.orders.len() >= 2 {
        let m = membership(|k| taylor[k], &space, &cfg.orders, MembershipConfig::default())?;
        r.output("membership", format!("{:?}", m.verdict));
        r.series(Series::new("g_norm", &m.curve.orders, &m.curve.values));
    }
    Ok(r)
}

pub fn witness(id: &str, cfg: &ExperimentConfig) -> Outcome {
    let mut r = ResultRecord::new(id, cfg);
    r.input("b", "(1+z)/2").input("f", "sum z^n/(n+1)");
    let space = HbSpace::new(pair_from("(1+z)/2", None)?, 64)?;
    let growth = cfg.tol("growth");
    let m = membership(|k| C64::new(1.0 / (k + 1) as f64, 0.0), &space, &cfg.orders, MembershipConfig {
        growth_ratio: growth,
        ..MembershipConfig::default()
    })?;
    r.output("membership", format!("{:?}", m.verdict));
    r.series(Series::new("g_norm", &m.curve.orders, &m.curve.values));
    let worst = m.curve.ratios().into_iter().fold(f64::INFINITY, f64::min);
    r.output("smallest_ratio", worst);
    r.check(Check::flag("out_of_space", m.verdict == Membership::OutOfSpace && worst > growth));
    Ok(r)
}

pub fn density(id: &str, b: &str, a: Option<&str>, f: &str, cfg: &ExperimentConfig) -> Outcome {
    let mut r = ResultRecord::new(id, cfg);
    r.input("b", b).input("f", f);
    let br = parse_rational(b)?;
    let fr = parse_rational(f)?;
    let fh = HardyFn::new(fr.taylor(top(cfg).max(256)));
    let extreme = a.is_none() && classify_extreme(&br)?.tag == Extremality::Extreme;
    let (curve, conditions) = if extreme {
        (model_space_density(&fh, &cfg.orders), None)
    } else {
        let space = HbSpace::new(pair_from(b, a)?, top(cfg))?;
        let rep = density_experiment(&fh, &space, &cfg.orders)?;
        (rep.curve, Some(rep.gram_condition))
    };
    r.output("model_space", extreme);
    if let Some(c) = conditions {
        r.output("gram_condition", c);
    }
    let tol = cfg.tol("density");
    r.series(Series::new("error", &curve.orders, &curve.values));
    r.check(Check::flag("nonincreasing", curve.is_nonincreasing(1e-12)));
    r.check(Check::below("final_error", curve.last().unwrap(), tol));
    if fr.den().degree() == 0 {
        let deg = fr.num().degree();
        let exact = curve
            .points()
            .filter(|(d, _)| *d >= deg)
            .map(|(_, v)| v)
            .fold(0.0, f64::max);
        r.check(Check::below("exact_beyond_degree", exact, cfg.tol("exact")));
    }
    Ok(r)
}

pub fn compop(id: &str, b: &str, a: Option<&str>, phi: &str, cfg: &ExperimentConfig) -> Outcome {
    let mut r = ResultRecord::new(id, cfg);
    r.input("b", b).input("phi", phi);
    let space = HbSpace::new(pair_from(b, a)?, 64)?;
    let map = parse_rational(phi)?;
    let sup = map.sup_norm()?;
    if sup > 1.0 + 1e-12 {
        return Err(Error::NotContractive { norm: sup });
    }
    if map.degree() == 1 {
        let (n, d) = (map.num(), map.den());
        let m = MobiusMap::new(n.coeff(1), n.coeff(0), d.coeff(1), d.coeff(0))?;
        r.output("class", format!("{:?}", m.classify()));
    }
    let map = RationalMap(map);
    let mut s = Sampler::new(cfg.seed);
    let (mut residual, mut fixed) = (0.0f64, 0.0f64);
    for _ in 0..MEMBERS {
        let f = random_member(&mut s, &space);
        let c = structure_check(&f, &map, &space)?;
        residual = residual.max(c.residual / f.h2_norm().max(1.0));
        fixed = fixed.max(c.fixed_point_defect);
    }
    let tol = cfg.tol("structure");
    r.check(Check::below("structure_residual", residual, tol));
    r.check(Check::below("fixed_point_defect", fixed, tol));
    let probe = operator_norm_probe(&map, &space, &cfg.orders)?;
    r.output("norm_estimate", probe.curve.last());
    r.output("ill_conditioned", probe.ill_conditioned.iter().any(|x| *x));
    r.series(Series::new("operator_norm", &probe.curve.orders, &probe.curve.values));
    if let Some(g) = probe.curve.final_relative_growth() {
        r.check(Check::below("final_relative_growth", g, cfg.tol("plateau")));
    }
    Ok(r)
}

pub fn crossop(id: &str, b: &str, target: &str, zeros: &str, cfg: &ExperimentConfig) -> Outcome {
    let mut r = ResultRecord::new(id, cfg);
    r.input("b", b).input("target", target).input("blaschke_zeros", zeros);
    let source = HbSpace::new(pair_from(b, None)?, 64)?;
    let dest = HbSpace::new(pair_from(target, None)?, 64)?;
    let blaschke = FiniteBlaschke::new(parse_complex_list(zeros)?, C64::new(1.0, 0.0))?;
    let mut s = Sampler::new(cfg.seed);
    let (mut residual, mut ratio) = (0.0f64, 0.0f64);
    for _ in 0..MEMBERS {
        let f = random_member(&mut s, &source);
        let rep = cross_space_experiment(&f, &blaschke, &source, &dest)?;
        residual = residual.max(rep.residual / rep.image.h2_norm().max(1.0));
        ratio = ratio.max(rep.norm_ratio);
    }
    r.output("max_norm_ratio", ratio);
    r.check(Check::below("decomposition_residual", residual, cfg.tol("structure")));
    r.check(Check::flag("norm_ratio_finite", ratio.is_finite()));
    let probe = cross_norm_probe(&blaschke, &source, &dest, &cfg.orders)?;
    r.output("norm_estimate", probe.curve.last());
    r.series(Series::new("operator_norm", &probe.curve.orders, &probe.curve.values));
    if let Some(g) = probe.curve.final_relative_growth() {
        r.check(Check::below("final_relative_growth", g, cfg.tol("plateau")));
    }
    Ok(r)
}

fn annulus_point(s: &mut Sampler, a: &Annulus) -> C64 {
    let r = s.rng().gen_range(a.q() + 0.05 * (1.0 - a.q())..1.0 - 0.05 * (1.0 - a.q()));
    C64::from_polar(r, s.rng().gen_range(0.0..TAU))
}

pub fn annulus(id: &str, q: f64, cfg: &ExperimentConfig) -> Outcome {
    let mut r = ResultRecord::new(id, cfg);
    r.input("q", q);
    let a = Annulus::new(q)?;
    r.output("truncation", a.truncation());
    let mut s = Sampler::new(cfg.seed);
    let (mut boundary, mut symmetry, mut prime, mut harmonic, mut constants) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let mut positive = true;
    let nodes = cfg.grid.min(256);
    for _ in 0..16 {
        let (z, w) = (annulus_point(&mut s, &a), annulus_point(&mut s, &a));
        let g = GreenFunction::new(a, w)?;
        for k in 0..nodes {
            let t = TAU * k as f64 / nodes as f64;
            boundary = boundary
                .max(g.eval(C64::from_polar(1.0, t))?.abs())
                .max(g.eval(C64::from_polar(q, t))?.abs());
        }
        let (c1, c2) = g.constants();
        let (e1, e2) = g.analytic_constants();
        constants = constants.max((c1 - e1).abs()).max((c2 - e2).abs());
        if (z - w).norm() > 1e-3 {
            let gz = g.eval(z)?;
            positive &= gz > 0.0;
            symmetry = symmetry.max((gz - GreenFunction::new(a, z)?.eval(w)?).abs());
        }
        let zeta = C64::from_polar(s.rng().gen_range(0.3..3.0), s.rng().gen_range(0.0..TAU));
        let pz = a.prime(zeta)?;
        prime = prime.max((a.prime(zeta.inv())? + pz / zeta).norm() / pz.norm().max(1.0));
        let t = s.rng().gen_range(0.0..TAU);
        harmonic = harmonic
            .max(harmonic_measure_inner(C64::from_polar(1.0, t), &a)?.abs())
            .max((harmonic_measure_inner(C64::from_polar(q, t), &a)? - 1.0).abs());
    }
    r.output("calibration_gap", constants);
    r.check(Check::below("green_boundary", boundary, cfg.tol("green_boundary")));
    r.check(Check::below("green_symmetry", symmetry, cfg.tol("symmetry")));
    r.check(Check::flag("green_positive", positive));
    r.check(Check::below("prime_identity", prime, cfg.tol("prime")));
    r.check(Check::below("harmonic_measure_boundary", harmonic, cfg.tol("prime")));
    Ok(r)
}

/// `f` with at most a pole at zero: `p(z) / (c z^k)`.
fn parse_laurent(src: &str) -> Result<LaurentFn, Error> {
    let f = parse_rational(src)?;
    let den = f.den();
    let k = den.degree();
    if den.coeffs()[..k].iter().any(|c| c.norm() > 1e-14) {
        return Err(Error::InvalidParameter(format!("'{src}' has poles away from zero")));
    }
    let lead = den.leading();
    Ok(LaurentFn::new(-(k as i64), f.num().coeffs().iter().map(|c| c / lead).collect()))
}

pub fn gblaschke(id: &str, q: f64, zeros: &str, c: Option<f64>, f: &str, cfg: &ExperimentConfig) -> Outcome {
    let mut r = ResultRecord::new(id, cfg);
    r.input("q", q).input("zeros", zeros).input("f", f);
    if let Some(c) = c {
        r.input("c", c);
    }
    let a = Annulus::new(q)?;
    let zs = parse_complex_list(zeros)?;
    let sol = solve_period(&zs, &a)?;
    r.output("closing_c", sol.c);
    r.output("closing_winding", sol.winding);
    r.output("radial_adjustment", sol.radial.map(|x| (x.index, x.radius)));
    let phi = GeneralizedBlaschke::new(&zs, c.unwrap_or(sol.c), &a)?;
    r.output("c", phi.c());
    r.output("period", phi.period());
    r.output("numeric_period", phi.numeric_period());
    r.output("single_valued", phi.single_valued());
    r.check(Check::below("period_agreement", (phi.period() - phi.numeric_period()).abs(), cfg.tol("period")));
    let nt = cfg.grid.min(1024);
    let sup = phi.sup_on_grid(nt / 4, nt)?;
    r.output("sup_modulus", sup);
    let [outer, inner] = phi.boundary_moduli(nt)?;
    r.output("outer_modulus", outer);
    r.output("inner_modulus", inner);
    let modulus = cfg.tol("modulus");
    r.check(Check::below("sup_excess", (sup - 1.0).max(0.0), cfg.tol("sup")));
    r.check(Check::below("boundary_spread", (outer.1 - outer.0).max(inner.1 - inner.0), modulus));
    let at_zeros = zs.iter().map(|z| phi.modulus(*z)).collect::<Result<Vec<_>, _>>()?;
    r.check(Check::below("modulus_at_zeros", at_zeros.into_iter().fold(0.0, f64::max), modulus));
    if phi.single_valued() {
        let k = (phi.numeric_period() / TAU).round();
        r.output("winding", phi.winding());
        r.check(Check::below("period_closure", (phi.numeric_period() - TAU * k).abs(), cfg.tol("period")));
        let curve = annulus_compose_experiment(&parse_laurent(f)?, &phi, &cfg.orders)?;
        r.series(Series::new("composition_ratio", &curve.orders, &curve.values));
        if let Some(g) = curve.final_relative_growth() {
            r.check(Check::below("composition_growth", g, cfg.tol("plateau")));
        }
    }
    Ok(r)
}

pub fn fejer_riesz_sweep(id: &str, cfg: &ExperimentConfig) -> Outcome {
    let mut r = ResultRecord::new(id, cfg);
    r.input("cases", 100).input("max_degree", 16);
    let mut s = Sampler::new(cfg.seed);
    let (mut fit, mut root) = (0.0f64, f64::INFINITY);
    for i in 0..100 {
        let w = if i % 5 == 0 {
            let xi = s.unit();
            abs_squared(&(&Poly::new(vec![-xi, C64::new(1.0, 0.0)]) * &s.poly(7)))
        } else {
            s.nonnegative_trig(16)
        };
        let q = fejer_riesz(&w)?;
        let back = abs_squared(&q);
        let m = w.degree().max(back.degree()) as i64;
        let err: f64 = (-m..=m).map(|k| (back.coeff(k) - w.coeff(k)).norm()).sum();
        let scale: f64 = (-m..=m).map(|k| w.coeff(k).norm()).sum();
        fit = fit.max(err / scale.max(1.0));
        root = root.min(min_root_modulus(&q)?);
    }
    r.output("min_root_modulus", root);
    r.check(Check::below("factorization_error", fit, cfg.tol("fejer_riesz")));
    r.check(Check::flag("roots_outside_disk", root >= 1.0 - 1e-6));
    Ok(r)
}

pub fn intertwining_sweep(id: &str, cfg: &ExperimentConfig) -> Outcome {
    let mut r = ResultRecord::new(id, cfg);
    r.input("cases", 100);
    let mut s = Sampler::new(cfg.seed);
    let grid = BoundaryGrid::new(256)?;
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let pair = pythagorean_mate(&s.non_extreme_rational(3))?;
        let h = s.hardy(24);
        let deg = s.rng().gen_range(0..=4);
        let phi = s.poly(deg);
        let sym = TrigSymbol::coanalytic(&phi.coeffs().iter().map(|x| x.conj()).collect::<Vec<_>>());
        let left = plus_function(&toeplitz_apply(&grid, &sym, &h)?, &pair)?.plus;
        let right = toeplitz_apply(&grid, &sym, &plus_function(&h, &pair)?.plus)?;
        let n = h.order();
        worst = worst.max(left.resized(n).distance(&right.resized(n)) / right.h2_norm().max(1.0));
    }
    r.check(Check::below("intertwining_defect", worst, cfg.tol("intertwining")));
    Ok(r)
}

/// Every experiment with its reference inputs.
pub fn suite(cfg: &ExperimentConfig) -> Result<Vec<ResultRecord>, Error> {
    let half = "(1+z)/2";
    let two = "(1+z^2)/2";
    let mut closed = ResultRecord::new("closed_forms", cfg);
    let one = hb_inner(&HardyFn::monomial(0), &HardyFn::monomial(0), &pair_from(half, None)?)?.re;
    let z = hb_inner(&HardyFn::monomial(1), &HardyFn::monomial(1), &pair_from("z/2", None)?)?.re;
    closed.output("one_in_half", one).output("z_in_small", z);
    closed.check(Check::below("one_in_half", (one - 2.0).abs(), cfg.tol("closed_form")));
    closed.check(Check::below("z_in_small", (z - 4.0 / 3.0).abs(), cfg.tol("closed_form")));
    Ok(vec![
        classify("classify_inner", "z", Some(Extremality::Extreme), cfg)?,
        classify("classify_half", half, Some(Extremality::NonExtreme), cfg)?,
        fejer_riesz_sweep("fejer_riesz", cfg)?,
        mate("mate_half", half, None, cfg)?,
        closed,
        norm("norm_half_one", half, None, "1", cfg)?,
        norm("norm_half_z2", half, None, "z^2", cfg)?,
        norm("norm_small_z", "z/2", None, "z", cfg)?,
        intertwining_sweep("intertwining", cfg)?,
        decomposition("decompose_half", Space::Symbol(half, None), "1/(2-z)", cfg)?,
        decomposition("decompose_double", Space::Zeros("1, 1, -1"), "z^5 + 2i z - 1", cfg)?,
        witness("membership_witness", cfg)?,
        density("density_half", half, None, "(z-1)(1-(z/2)^21)/(1-z/2)", cfg)?,
        density("density_inner", "z^3", None, "1/(1-0.7z)", cfg)?,
        compop("compop_hyperbolic", two, None, "(z+0.5)/(1+0.5z)", cfg)?,
        compop("compop_parabolic", half, None, "((2i-0.5)z+0.5)/(0.5+2i-0.5z)", cfg)?,
        crossop("crossop_square", half, two, "0,0", cfg)?,
        annulus("annulus_q0.2", 0.2, cfg)?,
        annulus("annulus_q0.5", 0.5, cfg)?,
        gblaschke("gblaschke_two_zeros", 0.3, "0.5+0.2i; -0.1-0.6i", None, "z", cfg)?,
    ])
}
