use num_traits::Zero;

use super::build::PlumbingGraph;
use crate::error::{Error, Result};
use crate::invariants::counting::{for_each_point, level};
use crate::invariants::isolated_test;
use crate::newton::{DualFan, NewtonData};

/// Tree-shaped resolution graph with all genera zero.
pub fn graph_criterion(g: &PlumbingGraph) -> bool {
    g.is_tree() && (0..g.num_core()).all(|v| g.vertices[v].genus.is_zero())
}

/// Every lattice point of the Newton diagram lies on its boundary, that
/// is on the face of some boundary ray.
pub fn diagram_criterion(fan: &DualFan) -> Result<bool> {
    let overflow = || Error::EnumerationCap("diagram exceeds the 64-bit enumeration range".into());
    let all = fan.rays.iter().map(|r| level(&r.ell, &r.m)).collect::<Result<Vec<_>>>()?;
    for n in fan.nodes() {
        let verts = &fan.rays[n].face.vertices;
        let coords: Vec<Vec<i64>> =
            verts.iter().map(|v| v.to_i64().ok_or_else(overflow)).collect::<Result<_>>()?;
        let lo: Vec<i64> = (0..3).map(|k| coords.iter().map(|c| c[k]).min().unwrap()).collect();
        let hi: Vec<i64> = (0..3).map(|k| coords.iter().map(|c| c[k]).max().unwrap()).collect();
        let size: u128 = lo.iter().zip(&hi).map(|(a, b)| (b - a + 1) as u128).product();
        if size > crate::invariants::counting::BOX_CAP {
            return Err(Error::EnumerationCap("facet bounding box too large".into()));
        }
        let mut ok = true;
        for_each_point(&lo, &hi, |q| {
            if !ok || all[n].excess(q) != 0 || all.iter().any(|l| l.excess(q) < 0) {
                return;
            }
            let on_boundary = fan.rays.iter().zip(&all).any(|(r, l)| r.on_boundary && l.excess(q) == 0);
            if !on_boundary {
                ok = false;
            }
        });
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the link is a rational homology sphere, by the graph and by
/// the diagram; the two must agree.
pub fn is_qhs_link(g: &PlumbingGraph, nd: &NewtonData, fan: &DualFan) -> Result<bool> {
    if !isolated_test(nd, fan)?.isolated {
        return Err(Error::Hypothesis("the singularity is not isolated".into()));
    }
    if g.num_core() == 0 {
        return Err(Error::Hypothesis("the resolution graph is empty".into()));
    }
    let a = graph_criterion(g);
    let b = diagram_criterion(fan)?;
    if a != b {
        return Err(Error::Internal(format!("graph criterion gives {a}, diagram criterion gives {b}")));
    }
    Ok(a)
}
