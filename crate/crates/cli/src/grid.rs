//! Axis grid specs of the form `min:max:count` and their tensor products.

use std::str::FromStr;

#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl GridSpec {
    /// Evenly spaced points, endpoints included. `count == 1` yields `min`.
    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.min];
        }
        let step = (self.max - self.min) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| self.min + step * i as f64)
            .collect()
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("grid spec `{s}` is not of the form min:max:count"));
        }
        let min: f64 = parts[0]
            .parse()
            .map_err(|_| format!("bad grid minimum `{}`", parts[0]))?;
        let max: f64 = parts[1]
            .parse()
            .map_err(|_| format!("bad grid maximum `{}`", parts[1]))?;
        let count: usize = parts[2]
            .parse()
            .map_err(|_| format!("bad grid count `{}`", parts[2]))?;
        if count == 0 {
            return Err("grid count must be at least 1".into());
        }
        if !min.is_finite() || !max.is_finite() {
            return Err("grid endpoints must be finite".into());
        }
        Ok(GridSpec { min, max, count })
    }
}

/// Expand per-command grid flags to one spec per required axis: either one
/// spec per axis, or a single spec broadcast to all axes.
pub fn per_axis(specs: &[GridSpec], axes: usize) -> Result<Vec<GridSpec>, String> {
    match specs.len() {
        1 => Ok(vec![specs[0].clone(); axes]),
        n if n == axes => Ok(specs.to_vec()),
        n => Err(format!("expected 1 or {axes} --grid specs, got {n}")),
    }
}

/// Row-major cartesian product of the axis point lists (last axis fastest).
pub fn product(axes: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let total: usize = axes.iter().map(Vec::len).product();
    let mut out = Vec::with_capacity(total);
    for flat in 0..total {
        let mut point = Vec::with_capacity(axes.len());
        let mut rem = flat;
        for axis in axes.iter().rev() {
            point.push(axis[rem % axis.len()]);
            rem /= axis.len();
        }
        point.reverse();
        out.push(point);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_spaces() {
        let g: GridSpec = "-1:1:5".parse().unwrap();
        assert_eq!(g.points(), vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
        let single: GridSpec = "2.5:9:1".parse().unwrap();
        assert_eq!(single.points(), vec![2.5]);
    }

    #[test]
    fn rejects_malformed() {
        assert!("1:2".parse::<GridSpec>().is_err());
        assert!("a:2:3".parse::<GridSpec>().is_err());
        assert!("1:2:0".parse::<GridSpec>().is_err());
    }

    #[test]
    fn product_order() {
        let p = product(&[vec![0.0, 1.0], vec![5.0, 6.0]]);
        assert_eq!(
            p,
            vec![
                vec![0.0, 5.0],
                vec![0.0, 6.0],
                vec![1.0, 5.0],
                vec![1.0, 6.0],
            ]
        );
    }
}
