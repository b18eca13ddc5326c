use std::fmt::Write as _;

use num::ToPrimitive;
use serde::Serialize;

use super::{FanSigma, Ray};
use crate::error::{Error, Result};
use crate::index_set::IndexSet;

#[derive(Debug, Clone, Serialize)]
pub struct RayJson {
    pub name: String,
    pub coords: Vec<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConeJson {
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    #[serde(rename = "K")]
    pub k: Vec<usize>,
    pub dim: usize,
}

/// Serializable dump of a fan; index sets are 1-based.
#[derive(Debug, Clone, Serialize)]
pub struct FanJson {
    #[serde(rename = "type")]
    pub type_name: String,
    pub rank: usize,
    pub rays: Vec<RayJson>,
    pub cones: Vec<ConeJson>,
    pub f_vector: Vec<u64>,
    pub h_vector: Vec<i64>,
}

pub fn fan_json(f: &FanSigma) -> FanJson {
    let rays = f
        .rays()
        .into_iter()
        .map(|r| RayJson {
            name: r.name(),
            coords: r
                .vector(&f.cartan)
                .iter()
                .map(|x| x.to_integer().to_i64().expect("Cartan entries are small"))
                .collect(),
        })
        .collect();
    let cones = f
        .cones
        .iter()
        .map(|c| ConeJson {
            j: c.j.one_based(),
            k: c.k.one_based(),
            dim: c.dim,
        })
        .collect();
    FanJson {
        type_name: f.cartan.name(),
        rank: f.rank(),
        rays,
        cones,
        f_vector: f.f_vector(),
        h_vector: f.h_vector(),
    }
}

const SIZE: f64 = 400.0;
const REACH: f64 = 170.0;
const PALETTE: [&str; 4] = ["#e41a1c", "#377eb8", "#4daf4a", "#984ea3"];

/// SVG picture of a rank-2 fan: four rays, four shaded maximal cones.
pub fn fan_svg(f: &FanSigma) -> Result<String> {
    if f.rank() != 2 {
        return Err(Error::UnsupportedRank(f.rank()));
    }
    let c = &f.cartan;
    let dir = |r: Ray| -> (f64, f64) {
        let v = r.vector(c);
        let x = v[0].to_f64().unwrap_or(0.0);
        let y = v[1].to_f64().unwrap_or(0.0);
        let len = (x * x + y * y).sqrt();
        (x / len, y / len)
    };
    let scale = f
        .rays()
        .iter()
        .map(|r| {
            let v = r.vector(c);
            v.iter().map(|x| x.to_f64().unwrap_or(0.0).abs()).fold(0.0, f64::max)
        })
        .fold(1.0, f64::max);
    let centre = SIZE / 2.0;
    // y grows downwards in SVG
    let to_px = |x: f64, y: f64| (centre + x, centre - y);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(s, "<title>fan of {}</title>", c.name());

    for (idx, j) in IndexSet::all_subsets(2).enumerate() {
        let rays = f.maximal_cone(j).rays();
        let (a, b) = (dir(rays[0]), dir(rays[1]));
        let mid = (a.0 + b.0, a.1 + b.1);
        let ml = (mid.0 * mid.0 + mid.1 * mid.1).sqrt().max(1e-9);
        let pts = [
            to_px(0.0, 0.0),
            to_px(REACH * a.0, REACH * a.1),
            to_px(REACH * 1.4 * mid.0 / ml, REACH * 1.4 * mid.1 / ml),
            to_px(REACH * b.0, REACH * b.1),
        ];
        let pts: Vec<String> = pts.iter().map(|(x, y)| format!("{x:.3},{y:.3}")).collect();
        let _ = writeln!(
            s,
            r#"<polygon points="{}" fill="{}" fill-opacity="0.25" stroke="none"><title>sigma_{}</title></polygon>"#,
            pts.join(" "),
            PALETTE[idx],
            j
        );
    }
    for r in f.rays() {
        let v = r.vector(c);
        let (x, y) = (
            v[0].to_f64().unwrap_or(0.0) / scale * REACH,
            v[1].to_f64().unwrap_or(0.0) / scale * REACH,
        );
        let (x0, y0) = to_px(0.0, 0.0);
        let (x1, y1) = to_px(x, y);
        let _ = writeln!(
            s,
            r#"<line x1="{x0:.3}" y1="{y0:.3}" x2="{x1:.3}" y2="{y1:.3}" stroke="black" stroke-width="2"/>"#
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.3}" y="{:.3}" font-size="12" font-family="sans-serif">{}</text>"#,
            x1 + 4.0,
            y1 - 4.0,
            r.name()
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanMatrix;

    #[test]
    fn svg_has_four_rays_and_cones() {
        let f = FanSigma::new(&CartanMatrix::parse("B2").unwrap());
        let svg = fan_svg(&f).unwrap();
        assert_eq!(svg.matches("<line").count(), 4);
        assert_eq!(svg.matches("<polygon").count(), 4);
        assert_eq!(svg, fan_svg(&f).unwrap());
        let f3 = FanSigma::new(&CartanMatrix::parse("A3").unwrap());
        assert!(fan_svg(&f3).is_err());
    }

    #[test]
    fn json_lists_every_cone() {
        let f = FanSigma::new(&CartanMatrix::parse("A2").unwrap());
        let j = fan_json(&f);
        assert_eq!(j.cones.len(), 9);
        assert_eq!(j.rays[0].coords, vec![-2, 1]);
        assert_eq!(j.rays[2].coords, vec![1, 0]);
    }
}
