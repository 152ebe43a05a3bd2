//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::f64::consts::TAU;
use std::time::Instant;

use hbspace::annulus::{
    generalized_blaschke, harmonic_measure_inner, solve_period, Annulus, GeneralizedBlaschke, GreenFunction,
};
use hbspace::boundary::toeplitz_apply;
use hbspace::composition::{
    cross_norm_probe, cross_space_experiment, operator_norm_probe, structure_check, FiniteBlaschke, MobiusMap,
};
use hbspace::fejer_riesz::{abs_squared, fejer_riesz};
use hbspace::hb::{
    decompose, defect_norm_oracle, density_experiment, hb_inner, isometry_j, membership, model_space_density,
    plus_function, pythagorean_mate, complement_inner, HbSpace, Membership, MembershipConfig, PythagoreanPair,
    DEFAULT_SUPPORT_DELTA,
};
use hbspace::rational::BoundaryZero;
use hbspace::sampling::Sampler;
use hbspace::{BoundaryGrid, HardyFn, Poly, RationalFn, TrigSymbol, C64};
use rand::Rng;

type Outcome = Result<String, String>;

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

fn poly_b(coeffs: &[f64]) -> RationalFn {
    RationalFn::new(Poly::from_real(coeffs), Poly::one()).unwrap()
}

fn check(ok: bool, msg: String) -> Outcome {
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn fejer_riesz_factorization() -> Outcome {
    let mut s = Sampler::new(1);
    let (mut worst_fit, mut min_root) = (0.0f64, f64::INFINITY);
    for i in 0..100 {
        let w = if i % 5 == 0 {
            // boundary root: |(z - xi) p|^2
            let xi = s.unit();
            let p = &Poly::new(vec![-xi, c(1.0)]) * &s.poly(7);
            abs_squared(&p)
        } else {
            s.nonnegative_trig(16)
        };
        let q = fejer_riesz(&w).map_err(|e| format!("case {i}: {e}"))?;
        let fit = abs_squared(&q);
        let m = w.degree().max(fit.degree()) as i64;
        let err = (-m..=m).map(|k| (fit.coeff(k) - w.coeff(k)).norm()).sum::<f64>();
        let scale = (-m..=m).map(|k| w.coeff(k).norm()).sum::<f64>().max(1.0);
        worst_fit = worst_fit.max(err / scale);
        if q.degree() > 0 {
            for r in q.roots().map_err(|e| e.to_string())? {
                min_root = min_root.min(r.norm());
            }
        }
    }
    check(
        worst_fit < 1e-9 && min_root >= 1.0 - 1e-6,
        format!("sup | |q|^2 - w | = {worst_fit:.2e}, min |root| = {min_root:.9}"),
    )
}

fn pythagorean_pairs() -> Outcome {
    let mut s = Sampler::new(2);
    let (mut worst, mut min_root) = (0.0f64, f64::INFINITY);
    for i in 0..50 {
        let b = s.non_extreme_rational(6);
        let pair = pythagorean_mate(&b).map_err(|e| format!("case {i}: {e}"))?;
        worst = worst.max(pair.residual());
        for r in pair.a().num().roots().map_err(|e| e.to_string())? {
            min_root = min_root.min(r.norm());
        }
    }
    let pair = pythagorean_mate(&poly_b(&[0.5, 0.5])).map_err(|e| e.to_string())?;
    let expected = |z: C64| (c(1.0) - z) / 2.0;
    let z0 = C64::new(0.3, 0.1);
    let gamma = pair.a().eval(z0) / expected(z0);
    let worked = [C64::new(-0.5, 0.2), C64::new(0.1, -0.7), c(0.0)]
        .iter()
        .map(|z| (pair.a().eval(*z) - gamma * expected(*z)).norm())
        .fold((gamma.norm() - 1.0).abs(), f64::max);
    check(
        worst < 1e-9 && min_root >= 1.0 - 1e-6 && worked < 1e-10,
        format!("sup residual = {worst:.2e}, min |zero of a| = {min_root:.6}, (1+z)/2 mate defect = {worked:.1e}"),
    )
}

fn norm_consistency() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for (name, b) in [("(1+z)/2", poly_b(&[0.5, 0.5])), ("z/2", poly_b(&[0.0, 0.5]))] {
        let pair = pythagorean_mate(&b).map_err(|e| e.to_string())?;
        for k in 0..3 {
            let f = HardyFn::monomial(k);
            let star = hb_inner(&f, &f, &pair).map_err(|e| e.to_string())?.re;
            let oracle = defect_norm_oracle(&f, &b, 512).map_err(|e| e.to_string())?;
            let rel = (star - oracle.norm * oracle.norm).abs() / star;
            ok &= rel < 1e-4;
            lines.push(format!(
                "b={name} f=z^{k}: {star:.10} vs {:.10} (raw {:.6}/{:.6}) rel {rel:.1e}",
                oracle.norm.powi(2),
                oracle.coarse.norm.powi(2),
                oracle.fine.norm.powi(2)
            ));
        }
    }
    let one = hb_inner(&HardyFn::monomial(0), &HardyFn::monomial(0), &pythagorean_mate(&poly_b(&[0.5, 0.5])).unwrap())
        .unwrap()
        .re;
    let z = hb_inner(&HardyFn::monomial(1), &HardyFn::monomial(1), &pythagorean_mate(&poly_b(&[0.0, 0.5])).unwrap())
        .unwrap()
        .re;
    ok &= (one - 2.0).abs() < 1e-8 && (z - 4.0 / 3.0).abs() < 1e-8;
    lines.push(format!("closed forms: <1,1> = {one:.12}, <z,z> = {z:.12}"));
    check(ok, lines.join("; "))
}

fn intertwining() -> Outcome {
    let mut s = Sampler::new(4);
    let grid = BoundaryGrid::new(256).unwrap();
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let pair = pythagorean_mate(&s.non_extreme_rational(3)).map_err(|e| e.to_string())?;
        let h = s.hardy(24);
        let deg = s.rng().gen_range(0..=4);
        let phi = s.poly(deg);
        let sym = TrigSymbol::coanalytic(&phi.coeffs().iter().map(|x| x.conj()).collect::<Vec<_>>());
        let left = plus_function(&toeplitz_apply(&grid, &sym, &h).unwrap(), &pair).unwrap().plus;
        let right = toeplitz_apply(&grid, &sym, &plus_function(&h, &pair).unwrap().plus).unwrap();
        let scale = right.h2_norm().max(1.0);
        worst = worst.max(left.resized(h.order()).distance(&right.resized(h.order())) / scale);
    }
    check(worst < 1e-7, format!("max relative defect = {worst:.2e}"))
}

fn decomposition() -> Outcome {
    let mut s = Sampler::new(5);
    let layouts: [&[(f64, usize)]; 4] = [&[(0.0, 1)], &[(0.5, 1), (2.5, 1)], &[(1.0, 2)], &[(0.3, 1), (2.0, 1), (4.0, 1)]];
    let (mut round_trip, mut interp) = (0.0f64, 0.0f64);
    for i in 0..100 {
        let zeros: Vec<BoundaryZero> = layouts[i % 4]
            .iter()
            .map(|(t, m)| BoundaryZero { point: C64::from_polar(1.0, *t), multiplicity: *m })
            .collect();
        let space = HbSpace::new(PythagoreanPair::with_boundary_zeros(&zeros).unwrap(), 64).unwrap();
        let n = space.n();
        let deg = s.rng().gen_range(0..12);
        let g = s.poly(deg);
        let p0 = s.poly(n - 1);
        let f = HardyFn::from(&(&(space.divisor() * &g) + &p0));
        let d = decompose(&f, &space).map_err(|e| e.to_string())?;
        round_trip = round_trip.max(d.residual);
        for z in space.zeros() {
            interp = interp.max((d.p.eval(z.point) - f.evaluate(z.point)).norm());
        }
    }
    let half = HbSpace::new(pythagorean_mate(&poly_b(&[0.5, 0.5])).unwrap(), 64).unwrap();
    let witness = membership(|k| c(1.0 / (k + 1) as f64), &half, &[64, 128, 256, 512, 1024], MembershipConfig::default())
        .map_err(|e| e.to_string())?;
    let ratios = witness.curve.ratios();
    let grows = witness.verdict == Membership::OutOfSpace && ratios.iter().all(|r| *r > 1.05);
    check(
        round_trip < 1e-10 && interp < 1e-10 && grows,
        format!(
            "round trip = {round_trip:.1e}, interpolation = {interp:.1e}, witness ratios = [{}]",
            ratios.iter().map(|r| format!("{r:.3}")).collect::<Vec<_>>().join(", ")
        ),
    )
}

fn isometry() -> Outcome {
    let mut s = Sampler::new(6);
    let (mut defect, mut ortho) = (0.0f64, 0.0f64);
    for _ in 0..50 {
        let pair = pythagorean_mate(&s.non_extreme_rational(3)).map_err(|e| e.to_string())?;
        let f = s.hardy(12);
        let j = isometry_j(&f, &pair, DEFAULT_SUPPORT_DELTA, None).map_err(|e| e.to_string())?;
        defect = defect.max(j.isometry_defect() / j.hb_norm_sq);
        let h = s.hardy(8);
        let ip = complement_inner(&j, &h, &pair).map_err(|e| e.to_string())?;
        ortho = ortho.max(ip.norm() / (j.hb_norm_sq.sqrt() * h.h2_norm()));
    }
    check(
        defect < 1e-6 && ortho < 1e-6,
        format!("relative isometry defect = {defect:.1e}, orthogonality = {ortho:.1e}"),
    )
}

fn density() -> Outcome {
    let degrees: Vec<usize> = vec![0, 1, 2, 4, 8, 16, 24, 32, 48, 64];
    let half = HbSpace::new(pythagorean_mate(&poly_b(&[0.5, 0.5])).unwrap(), 64).unwrap();
    let small = HbSpace::new(pythagorean_mate(&poly_b(&[0.0, 0.5])).unwrap(), 64).unwrap();
    let tail = HardyFn::from_series(20, |k| c(0.5f64.powi(k as i32)));
    let documented = HardyFn::from(&(&Poly::from_real(&[-1.0, 1.0]) * &tail.to_poly()));
    let geometric = HardyFn::from_series(200, |k| c(0.7f64.powi(k as i32)));
    let cases = [("(z-1)*sum z^n/2^n", &half, &documented), ("sum 0.7^n z^n", &half, &geometric), ("sum 0.7^n z^n, b=z/2", &small, &geometric)];
    let mut ok = true;
    let mut lines = Vec::new();
    for (name, space, f) in cases {
        let r = density_experiment(f, space, &degrees).map_err(|e| e.to_string())?;
        let last = r.curve.last().unwrap();
        ok &= r.is_nonincreasing(1e-12) && last < 1e-3;
        lines.push(format!("{name}: error at 64 = {last:.1e}"));
    }
    let exact = density_experiment(&documented, &half, &[21, 22, 32]).map_err(|e| e.to_string())?;
    let exact_max = exact.curve.values.iter().cloned().fold(0.0, f64::max);
    ok &= exact_max <= 1e-9;
    lines.push(format!("degree >= 21 error = {exact_max:.1e}"));
    let model = model_space_density(&geometric, &degrees);
    ok &= model.is_nonincreasing(0.0) && model.last().unwrap() < 1e-3;
    lines.push(format!("inner b tail at 64 = {:.1e}", model.last().unwrap()));
    check(ok, lines.join("; "))
}

fn fixed_point_composition() -> Outcome {
    let mut s = Sampler::new(8);
    let orders = [32, 64, 128, 256, 512];
    let two = HbSpace::new(pythagorean_mate(&poly_b(&[0.5, 0.0, 0.5])).unwrap(), 64).unwrap();
    let one = HbSpace::new(pythagorean_mate(&poly_b(&[0.5, 0.5])).unwrap(), 64).unwrap();
    let hyperbolic = MobiusMap::hyperbolic(c(1.0), c(-1.0), 0.5).unwrap();
    let parabolic = MobiusMap::parabolic(c(1.0), 0.5).unwrap();
    let mut ok = true;
    let mut lines = Vec::new();
    for (name, phi, space) in [("hyperbolic", &hyperbolic, &two), ("parabolic", &parabolic, &one)] {
        let mut worst = 0.0f64;
        for _ in 0..50 {
            let g = s.hardy(8);
            let p = s.poly(space.n() - 1);
            let f = HardyFn::from(&(&(space.divisor() * &g.to_poly()) + &p));
            let r = structure_check(&f, phi, space).map_err(|e| e.to_string())?;
            worst = worst.max(r.residual).max(r.fixed_point_defect);
        }
        let probe = operator_norm_probe(phi, space, &orders).map_err(|e| e.to_string())?;
        let growth = probe.curve.final_relative_growth().unwrap();
        ok &= worst < 1e-9 && probe.plateaus();
        lines.push(format!(
            "{name}: structure residual = {worst:.1e}, norm at 512 = {:.6}, final growth = {growth:.1e}",
            probe.curve.last().unwrap()
        ));
    }
    check(ok, lines.join("; "))
}

fn cross_space() -> Outcome {
    let mut s = Sampler::new(9);
    let source = HbSpace::new(pythagorean_mate(&poly_b(&[0.5, 0.5])).unwrap(), 64).unwrap();
    let target = HbSpace::new(pythagorean_mate(&poly_b(&[0.5, 0.0, 0.5])).unwrap(), 64).unwrap();
    let b = FiniteBlaschke::power(2);
    let (mut worst, mut ratio) = (0.0f64, 0.0f64);
    for _ in 0..50 {
        let g = s.hardy(8);
        let f = HardyFn::from(&(&(source.divisor() * &g.to_poly()) + &Poly::constant(s.complex())));
        let r = cross_space_experiment(&f, &b, &source, &target).map_err(|e| e.to_string())?;
        worst = worst.max(r.residual);
        ratio = ratio.max(r.norm_ratio);
    }
    let probe = cross_norm_probe(&b, &source, &target, &[32, 64, 128, 256, 512]).map_err(|e| e.to_string())?;
    check(
        worst < 1e-9 && ratio.is_finite() && probe.plateaus(),
        format!(
            "residual = {worst:.1e}, max norm ratio = {ratio:.4}, probe at 512 = {:.6}, final growth = {:.1e}",
            probe.curve.last().unwrap(),
            probe.curve.final_relative_growth().unwrap()
        ),
    )
}

fn annulus_suite() -> Outcome {
    let mut s = Sampler::new(10);
    let (mut boundary, mut symmetry, mut prime) = (0.0f64, 0.0f64, 0.0f64);
    let (mut sup, mut flat, mut zero_val, mut closure) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for (i, q) in [0.2, 0.5].into_iter().enumerate() {
        let a = Annulus::new(q).unwrap();
        let point = |s: &mut Sampler| {
            let r = s.rng().gen_range(q + 0.05..0.95);
            C64::from_polar(r, s.rng().gen_range(0.0..TAU))
        };
        for _ in 0..10 {
            let (z, w) = (point(&mut s), point(&mut s));
            let g = GreenFunction::new(a, w).map_err(|e| e.to_string())?;
            for k in 0..64 {
                let t = TAU * k as f64 / 64.0;
                boundary = boundary
                    .max(g.eval(C64::from_polar(1.0, t)).unwrap().abs())
                    .max(g.eval(C64::from_polar(q, t)).unwrap().abs());
            }
            let gz = g.eval(z).unwrap();
            let gw = GreenFunction::new(a, z).unwrap().eval(w).unwrap();
            symmetry = symmetry.max((gz - gw).abs());
            let zeta = C64::from_polar(s.rng().gen_range(0.3..3.0), s.rng().gen_range(0.0..TAU));
            let pz = a.prime(zeta).unwrap();
            prime = prime.max((a.prime(zeta.inv()).unwrap() + pz / zeta).norm() / pz.norm().max(1.0));
        }
        let zeros = [point(&mut s), point(&mut s), point(&mut s)];
        let phi = generalized_blaschke(&zeros[..1 + i], &a).map_err(|e| e.to_string())?;
        sup = sup.max(phi.sup_on_grid(64, 256).unwrap());
        let [outer, inner] = phi.boundary_moduli(512).unwrap();
        flat = flat.max(outer.1 - outer.0).max(inner.1 - inner.0);
        for z in phi.zeros() {
            zero_val = zero_val.max(phi.eval(*z).unwrap().norm());
        }
        for _ in 0..10 {
            let zero = point(&mut s);
            let sol = solve_period(&[zero], &a).map_err(|e| e.to_string())?;
            let phi = GeneralizedBlaschke::new(&[zero], sol.c, &a).unwrap();
            let p = phi.numeric_period();
            closure = closure.max((p - TAU * (p / TAU).round()).abs());
            let _ = harmonic_measure_inner(zero, &a);
        }
    }
    check(
        boundary < 1e-6 && symmetry < 1e-8 && prime < 1e-12 && sup <= 1.0 + 1e-8 && flat < 1e-6 && zero_val < 1e-6 && closure < 1e-6,
        format!(
            "green boundary = {boundary:.1e}, symmetry = {symmetry:.1e}, prime identity = {prime:.1e}, \
             sup |Phi| = {sup:.12}, boundary spread = {flat:.1e}, |Phi(a)| = {zero_val:.1e}, period closure = {closure:.1e}"
        ),
    )
}

fn main() {
    let criteria: [(&str, f64, fn() -> Outcome); 10] = [
        ("fejer-riesz factorization", 5.0, fejer_riesz_factorization),
        ("pythagorean pairs", 5.0, pythagorean_pairs),
        ("norm consistency", 30.0, norm_consistency),
        ("intertwining", 10.0, intertwining),
        ("boundary decomposition", 10.0, decomposition),
        ("isometry", 20.0, isometry),
        ("polynomial density", 60.0, density),
        ("fixed-point composition", 120.0, fixed_point_composition),
        ("cross-space composition", 60.0, cross_space),
        ("annulus suite", 120.0, annulus_suite),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        let (verdict, detail) = match outcome {
            Ok(d) if secs < *limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over time limit")),
            Err(d) => ("FAIL", d),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!("criterion {:>2} {name}: {verdict} ({secs:.2} s / {limit} s) {detail}", i + 1);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
