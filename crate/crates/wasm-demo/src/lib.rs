//! Browser bindings: each call returns a JSON document for the page to plot.

use std::f64::consts::TAU;

use hbspace::annulus::{generalized_blaschke, Annulus};
use hbspace::composition::{operator_norm_probe, DiskSelfMap};
use hbspace::expr::{parse_complex_list, parse_rational};
use hbspace::hb::{pythagorean_mate, HbSpace};
use hbspace::{RationalFn, C64};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn poly_json(cs: &[C64]) -> serde_json::Value {
    json!(cs.iter().map(|c| [c.re, c.im]).collect::<Vec<_>>())
}

/// Mate of `b` with `|a|^2` and `|b|^2` sampled at `samples` angles.
#[wasm_bindgen]
pub fn mate_curves(b: &str, samples: usize) -> Result<String, String> {
    let pair = pythagorean_mate(&parse_rational(b).map_err(err)?).map_err(err)?;
    let n = samples.clamp(8, 4096);
    let theta: Vec<f64> = (0..n).map(|k| TAU * k as f64 / n as f64).collect();
    let on = |f: &RationalFn| -> Vec<f64> { theta.iter().map(|t| f.eval(C64::from_polar(1.0, *t)).norm_sqr()).collect() };
    Ok(json!({
        "a_numerator": poly_json(pair.a().num().coeffs()),
        "a_denominator": poly_json(pair.a().den().coeffs()),
        "residual": pair.residual(),
        "theta": theta,
        "b_sq": on(pair.b()),
        "a_sq": on(pair.a()),
    })
    .to_string())
}

/// `|Phi|` on an `nr x nt` polar grid for the closing generalized Blaschke
/// product with the given zeros; rows run from the inner to the outer circle.
#[wasm_bindgen]
pub fn blaschke_grid(q: f64, zeros: &str, nr: usize, nt: usize) -> Result<String, String> {
    let annulus = Annulus::new(q).map_err(err)?;
    let zs = parse_complex_list(zeros).map_err(err)?;
    let phi = generalized_blaschke(&zs, &annulus).map_err(err)?;
    let (nr, nt) = (nr.clamp(2, 256), nt.clamp(8, 1024));
    let mut modulus = Vec::with_capacity(nr * nt);
    for i in 0..nr {
        let r = q + (1.0 - q) * i as f64 / (nr - 1) as f64;
        for k in 0..nt {
            modulus.push(phi.modulus(C64::from_polar(r, TAU * k as f64 / nt as f64)).map_err(err)?);
        }
    }
    Ok(json!({
        "q": q,
        "nr": nr,
        "nt": nt,
        "c": phi.c(),
        "winding": phi.winding(),
        "period": phi.numeric_period(),
        "zeros": poly_json(&zs),
        "modulus": modulus,
    })
    .to_string())
}

struct Map(RationalFn);

impl DiskSelfMap for Map {
    fn eval(&self, z: C64) -> C64 {
        self.0.eval(z)
    }

    fn degree(&self) -> usize {
        self.0.degree()
    }
}

/// Lower bounds for the norm of composition by `phi` on `H(b)` over the
/// comma separated ascending `orders`.
#[wasm_bindgen]
pub fn norm_curve(b: &str, phi: &str, orders: &str) -> Result<String, String> {
    let orders: Vec<usize> = orders
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(err))
        .collect::<Result<_, _>>()?;
    if orders.iter().any(|o| *o > 256) {
        return Err("orders above 256 are too slow for the page".into());
    }
    let space = HbSpace::new(pythagorean_mate(&parse_rational(b).map_err(err)?).map_err(err)?, 64).map_err(err)?;
    let map = parse_rational(phi).map_err(err)?;
    let sup = map.sup_norm().map_err(err)?;
    if sup > 1.0 + 1e-12 {
        return Err(format!("phi is not a self-map of the disk: sup |phi| = {sup}"));
    }
    let probe = operator_norm_probe(&Map(map), &space, &orders).map_err(err)?;
    Ok(json!({
        "orders": probe.curve.orders,
        "values": probe.curve.values,
        "ill_conditioned": probe.ill_conditioned,
    })
    .to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> serde_json::Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn mate_curves_sum_to_one() {
        let v = parse(&mate_curves("(1+z)/2", 64).unwrap());
        let (a, b) = (v["a_sq"].as_array().unwrap(), v["b_sq"].as_array().unwrap());
        assert_eq!(a.len(), 64);
        for (x, y) in a.iter().zip(b) {
            assert!((x.as_f64().unwrap() + y.as_f64().unwrap() - 1.0).abs() < 1e-12);
        }
        assert!(mate_curves("2z", 16).is_err());
    }

    #[test]
    fn blaschke_grid_is_bounded() {
        let v = parse(&blaschke_grid(0.3, "0.6; -0.5i", 8, 32).unwrap());
        let m = v["modulus"].as_array().unwrap();
        assert_eq!(m.len(), 8 * 32);
        assert!(m.iter().all(|x| x.as_f64().unwrap() <= 1.0 + 1e-8));
        assert!(blaschke_grid(0.3, "0.1", 8, 32).is_err());
    }

    #[test]
    fn norm_curve_for_rotation() {
        let v = parse(&norm_curve("(1+z)/2", "z", "4,8").unwrap());
        for x in v["values"].as_array().unwrap() {
            assert!((x.as_f64().unwrap() - 1.0).abs() < 1e-10);
        }
        assert!(norm_curve("(1+z)/2", "2z", "4,8").is_err());
        assert!(norm_curve("(1+z)/2", "z", "4,x").is_err());
    }
}
