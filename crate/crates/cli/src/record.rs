use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use crate::config::ExperimentConfig;

/// One verdict: `value` compared against `tolerance`, or a plain flag.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub tolerance: Option<f64>,
    pub pass: bool,
}

impl Check {
    pub fn below(name: &str, value: f64, tolerance: f64) -> Self {
        Self { name: name.into(), value, tolerance: Some(tolerance), pass: value <= tolerance }
    }

    pub fn flag(name: &str, pass: bool) -> Self {
        Self { name: name.into(), value: if pass { 1.0 } else { 0.0 }, tolerance: None, pass }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Point {
    pub order: usize,
    pub value: f64,
    pub verdict: Option<bool>,
}

/// A per-order curve; written as its own CSV.
#[derive(Debug, Clone, Serialize)]
pub struct Series {
    pub name: String,
    pub tolerance: Option<f64>,
    pub points: Vec<Point>,
}

impl Series {
    pub fn new(name: &str, orders: &[usize], values: &[f64]) -> Self {
        let points = orders
            .iter()
            .zip(values)
            .map(|(o, v)| Point { order: *o, value: *v, verdict: None })
            .collect();
        Self { name: name.into(), tolerance: None, points }
    }

    /// Mark every point against `tolerance` with `pass(value, tolerance)`.
    pub fn judged(mut self, tolerance: f64, pass: impl Fn(usize, f64) -> bool) -> Self {
        self.tolerance = Some(tolerance);
        for p in &mut self.points {
            p.verdict = Some(pass(p.order, p.value));
        }
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ResultRecord {
    pub experiment: String,
    pub input: BTreeMap<String, String>,
    pub config: ExperimentConfig,
    pub outputs: BTreeMap<String, Value>,
    pub series: Vec<Series>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl ResultRecord {
    pub fn new(experiment: &str, config: &ExperimentConfig) -> Self {
        Self {
            experiment: experiment.into(),
            input: BTreeMap::new(),
            config: config.clone(),
            outputs: BTreeMap::new(),
            series: Vec::new(),
            checks: Vec::new(),
            pass: true,
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.input.insert(key.into(), value.to_string());
        self
    }

    pub fn output(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.outputs.insert(key.into(), serde_json::to_value(value).unwrap_or(Value::Null));
        self
    }

    pub fn check(&mut self, check: Check) -> &mut Self {
        self.pass &= check.pass;
        self.checks.push(check);
        self
    }

    pub fn series(&mut self, series: Series) -> &mut Self {
        self.series.push(series);
        self
    }

    pub fn summary(&self) -> String {
        let mut out = format!("{}: {}\n", self.experiment, if self.pass { "PASS" } else { "FAIL" });
        for (k, v) in &self.input {
            out += &format!("  input  {k} = {v}\n");
        }
        for (k, v) in &self.outputs {
            out += &format!("  output {k} = {v}\n");
        }
        for s in &self.series {
            let vals: Vec<String> = s.points.iter().map(|p| format!("{}:{:.6e}", p.order, p.value)).collect();
            out += &format!("  series {} = [{}]\n", s.name, vals.join(", "));
        }
        for c in &self.checks {
            let tol = c.tolerance.map(|t| format!(" (tol {t:e})")).unwrap_or_default();
            out += &format!(
                "  check  {} = {:e}{tol} {}\n",
                c.name,
                c.value,
                if c.pass { "pass" } else { "FAIL" }
            );
        }
        out
    }

    pub fn write(&self, dir: &Path, json: bool, csv: bool) -> std::io::Result<()> {
        std::fs::create_dir_all(dir)?;
        if json {
            let text = serde_json::to_string_pretty(self).map_err(std::io::Error::other)?;
            write_atomic(dir, &format!("{}.json", self.experiment), text.as_bytes())?;
        }
        if csv {
            for s in &self.series {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["order", "value", "tolerance", "verdict"])?;
                let tol = s.tolerance.map(|t| format!("{t:e}")).unwrap_or_default();
                for p in &s.points {
                    let verdict = match p.verdict {
                        Some(true) => "pass",
                        Some(false) => "fail",
                        None => "",
                    };
                    w.write_record([p.order.to_string(), format!("{:e}", p.value), tol.clone(), verdict.into()])?;
                }
                let bytes = w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?;
                write_atomic(dir, &format!("{}_{}.csv", self.experiment, s.name), &bytes)?;
            }
        }
        Ok(())
    }
}

/// Write to a temporary file in `dir` and rename it over `name`.
pub fn write_atomic(dir: &Path, name: &str, bytes: &[u8]) -> std::io::Result<()> {
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(dir.join(name)).map_err(|e| e.error)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_fold_into_verdict() {
        let mut r = ResultRecord::new("x", &ExperimentConfig::default());
        r.check(Check::below("a", 1e-12, 1e-9));
        assert!(r.pass);
        r.check(Check::flag("b", false));
        assert!(!r.pass);
        assert!(r.summary().contains("FAIL"));
    }

    #[test]
    fn writes_json_and_csv() {
        let dir = tempfile::tempdir().unwrap();
        let mut r = ResultRecord::new("demo", &ExperimentConfig::default());
        r.series(Series::new("curve", &[1, 2], &[0.5, 0.25]).judged(0.3, |_, v| v < 0.3));
        r.write(dir.path(), true, true).unwrap();
        let csv = std::fs::read_to_string(dir.path().join("demo_curve.csv")).unwrap();
        assert_eq!(csv.lines().next().unwrap(), "order,value,tolerance,verdict");
        assert!(csv.contains("1,5e-1,3e-1,fail"));
        assert!(dir.path().join("demo.json").exists());
    }
}
