//! Voronoi maps and four-colouring.
//!
//! Each region is the Voronoi cell of a site, built by clipping the unit
//! square against the perpendicular bisector of every other site. Two
//! regions are adjacent when they share a boundary segment of positive
//! length; touching at a single point does not count.

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::Rng;
use crate::search::ExactCover;

pub type Point = (f64, f64);

/// Shared boundaries shorter than this are treated as point contacts.
pub const MIN_SHARED_EDGE: f64 = 1e-6;
/// Vertices are rounded to this grid after clipping.
pub const SNAP: f64 = 1e-9;
pub const MIN_SITE_SEPARATION: f64 = 0.05;

const MAP_ATTEMPTS: usize = 100;
const INSTANCE_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Colour {
    Red,
    Green,
    Blue,
    Yellow,
}

impl Colour {
    pub const ALL: [Colour; 4] = [Colour::Red, Colour::Green, Colour::Blue, Colour::Yellow];

    pub fn name(self) -> &'static str {
        match self {
            Colour::Red => "red",
            Colour::Green => "green",
            Colour::Blue => "blue",
            Colour::Yellow => "yellow",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanarMap {
    pub sites: Vec<Point>,
    pub polygons: Vec<Vec<Point>>,
    /// Sorted neighbour lists.
    pub adjacency: Vec<Vec<usize>>,
}

impl PlanarMap {
    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    /// Each adjacent pair once, as `(low, high)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, ns) in self.adjacency.iter().enumerate() {
            out.extend(ns.iter().filter(|&&b| b > a).map(|&b| (a, b)));
        }
        out
    }

    /// Builds the clipped Voronoi cells and their adjacency for `sites`.
    pub fn from_sites(sites: Vec<Point>) -> Self {
        let polygons: Vec<Vec<Point>> = (0..sites.len()).map(|i| voronoi_cell(&sites, i)).collect();
        let n = sites.len();
        let mut adjacency = vec![Vec::new(); n];
        for i in 0..n {
            for j in i + 1..n {
                if shared_length(&sites, &polygons[i], i, j) > MIN_SHARED_EDGE {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
        PlanarMap {
            sites,
            polygons,
            adjacency,
        }
    }

    /// Renumbers regions so that new region `k` is old region `order[k]`.
    pub fn relabel(&self, order: &[usize]) -> PlanarMap {
        let mut inverse = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            inverse[old] = new;
        }
        PlanarMap {
            sites: order.iter().map(|&o| self.sites[o]).collect(),
            polygons: order.iter().map(|&o| self.polygons[o].clone()).collect(),
            adjacency: order
                .iter()
                .map(|&o| {
                    let mut ns: Vec<usize> =
                        self.adjacency[o].iter().map(|&x| inverse[x]).collect();
                    ns.sort_unstable();
                    ns
                })
                .collect(),
        }
    }
}

fn snap(v: f64) -> f64 {
    libm::round(v / SNAP) * SNAP
}

/// Keeps the part of `poly` where `a·x + b·y <= c`.
fn clip(poly: &[Point], (a, b, c): (f64, f64, f64)) -> Vec<Point> {
    let side = |p: Point| a * p.0 + b * p.1 - c;
    let mut out = Vec::with_capacity(poly.len() + 1);
    for k in 0..poly.len() {
        let p = poly[k];
        let q = poly[(k + 1) % poly.len()];
        let (sp, sq) = (side(p), side(q));
        if sp <= 0.0 {
            out.push(p);
        }
        if (sp < 0.0 && sq > 0.0) || (sp > 0.0 && sq < 0.0) {
            let t = sp / (sp - sq);
            out.push((p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1)));
        }
    }
    out
}

/// Half-plane of points at least as close to site `i` as to site `j`.
fn bisector(sites: &[Point], i: usize, j: usize) -> (f64, f64, f64) {
    let (si, sj) = (sites[i], sites[j]);
    let a = sj.0 - si.0;
    let b = sj.1 - si.1;
    let c = (sj.0 * sj.0 + sj.1 * sj.1 - si.0 * si.0 - si.1 * si.1) / 2.0;
    (a, b, c)
}

fn voronoi_cell(sites: &[Point], i: usize) -> Vec<Point> {
    let mut poly = vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
    for j in 0..sites.len() {
        if j != i {
            poly = clip(&poly, bisector(sites, i, j));
        }
    }
    let mut out: Vec<Point> = Vec::with_capacity(poly.len());
    for (x, y) in poly {
        let p = (snap(x), snap(y));
        if out.last() != Some(&p) && out.first() != Some(&p) {
            out.push(p);
        }
    }
    out
}

/// Length of cell `i`'s boundary lying on the bisector with site `j`.
fn shared_length(sites: &[Point], poly: &[Point], i: usize, j: usize) -> f64 {
    let (a, b, c) = bisector(sites, i, j);
    let norm = libm::sqrt(a * a + b * b);
    let on = |p: Point| libm::fabs(a * p.0 + b * p.1 - c) / norm < 1e-7;
    let mut total = 0.0;
    for k in 0..poly.len() {
        let p = poly[k];
        let q = poly[(k + 1) % poly.len()];
        if on(p) && on(q) {
            total += libm::hypot(q.0 - p.0, q.1 - p.1);
        }
    }
    total
}

/// Shoelace area of a simple polygon.
pub fn polygon_area(poly: &[Point]) -> f64 {
    let mut twice = 0.0;
    for k in 0..poly.len() {
        let p = poly[k];
        let q = poly[(k + 1) % poly.len()];
        twice += p.0 * q.1 - q.0 * p.1;
    }
    libm::fabs(twice) / 2.0
}

pub fn polygon_centroid(poly: &[Point]) -> Point {
    let (mut cx, mut cy, mut twice) = (0.0, 0.0, 0.0);
    for k in 0..poly.len() {
        let p = poly[k];
        let q = poly[(k + 1) % poly.len()];
        let cross = p.0 * q.1 - q.0 * p.1;
        twice += cross;
        cx += (p.0 + q.0) * cross;
        cy += (p.1 + q.1) * cross;
    }
    (cx / (3.0 * twice), cy / (3.0 * twice))
}

pub fn build_voronoi_map(rng: &mut Rng, n_regions: usize) -> Result<PlanarMap> {
    if !(12..=18).contains(&n_regions) {
        return Err(Error::invalid("region count must be between 12 and 18"));
    }
    'attempt: for _ in 0..MAP_ATTEMPTS {
        let mut sites: Vec<Point> = Vec::with_capacity(n_regions);
        for _ in 0..n_regions {
            let p = (rng.unit(), rng.unit());
            let too_close = sites
                .iter()
                .any(|s| libm::hypot(s.0 - p.0, s.1 - p.1) < MIN_SITE_SEPARATION);
            if too_close {
                continue 'attempt;
            }
            sites.push(p);
        }
        return Ok(PlanarMap::from_sites(sites));
    }
    Err(Error::gave_up(
        MAP_ATTEMPTS,
        "sites kept landing too close together",
    ))
}

/// Exact-cover matrix for proper colourings: one primary column per region,
/// one secondary column per (edge, colour). `allowed(region)` lists the
/// colours that region may take.
fn colouring_matrix(
    map: &PlanarMap,
    allowed: impl Fn(usize) -> Vec<Colour>,
) -> (ExactCover, Vec<(usize, Colour)>) {
    let n = map.len();
    let edges = map.edges();
    let mut m = ExactCover::new(n, edges.len() * 4);
    let mut rows = Vec::new();
    // Higher-degree regions first, so conflicts surface early.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(map.adjacency[v].len()), v));
    for v in order {
        for colour in allowed(v) {
            let mut cols = vec![v];
            for (e, &(a, b)) in edges.iter().enumerate() {
                if a == v || b == v {
                    cols.push(n + e * 4 + colour as usize);
                }
            }
            m.add_row(&cols);
            rows.push((v, colour));
        }
    }
    (m, rows)
}

fn decode(n: usize, rows: &[(usize, Colour)], chosen: &[usize]) -> Vec<Colour> {
    let mut out = vec![Colour::Red; n];
    for &r in chosen {
        let (v, c) = rows[r];
        out[v] = c;
    }
    out
}

/// Every proper four-colouring, indexed by region, in lexicographic order.
pub fn enumerate_colourings(map: &PlanarMap) -> Vec<Vec<Colour>> {
    let (mut m, rows) = colouring_matrix(map, |_| Colour::ALL.to_vec());
    let mut out = Vec::new();
    m.for_each_solution(|chosen| {
        out.push(decode(map.len(), &rows, chosen));
        true
    });
    out.sort();
    out
}

pub fn is_proper(map: &PlanarMap, colours: &[Colour]) -> bool {
    map.edges().iter().all(|&(a, b)| colours[a] != colours[b])
}

/// A map with some regions coloured and the rest masked.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ColouringInstance {
    pub map: PlanarMap,
    /// Colour of each region, `None` for masked regions.
    pub fixed: Vec<Option<Colour>>,
    pub masked: Vec<usize>,
}

impl ColouringInstance {
    pub fn validate(&self) -> Result<()> {
        let n = self.map.len();
        if self.fixed.len() != n {
            return Err(Error::invalid("one entry per region required"));
        }
        let unset: Vec<usize> = (0..n).filter(|&v| self.fixed[v].is_none()).collect();
        let mut masked = self.masked.clone();
        masked.sort_unstable();
        if unset != masked {
            return Err(Error::invalid(
                "masked regions must be exactly the uncoloured ones",
            ));
        }
        for (a, b) in self.map.edges() {
            if let (Some(x), Some(y)) = (self.fixed[a], self.fixed[b]) {
                if x == y {
                    return Err(Error::invalid("adjacent fixed regions share a colour"));
                }
            }
        }
        Ok(())
    }
}

/// Number of ways to colour the masked regions.
pub fn count_completions(inst: &ColouringInstance) -> Result<u64> {
    inst.validate()?;
    let (mut m, _) = colouring_matrix(&inst.map, |v| match inst.fixed[v] {
        Some(c) => vec![c],
        None => Colour::ALL.to_vec(),
    });
    match m.count() as u64 {
        0 => Err(Error::invalid("the fixed colours admit no completion")),
        k => Ok(k),
    }
}

/// Random map, random base colouring, random mask with 1 to 8 completions.
/// Regions are renumbered so the coloured ones come first.
pub fn gen_mapcolour(rng: &mut Rng) -> Result<ColouringInstance> {
    let mut attempts = 0;
    while attempts < INSTANCE_ATTEMPTS {
        let n = rng.range_usize(12, 18);
        let map = build_voronoi_map(rng, n)?;
        let all = enumerate_colourings(&map);
        assert!(!all.is_empty(), "a planar map always has a four-colouring");
        for _ in 0..20 {
            attempts += 1;
            let base = rng.choose(&all);
            let k = rng.range_usize(2, 6);
            let mut masked = rng.sample_indices(n, k);
            masked.sort_unstable();
            let count = all
                .iter()
                .filter(|c| (0..n).all(|v| masked.contains(&v) || c[v] == base[v]))
                .count();
            if !(1..=8).contains(&count) {
                continue;
            }
            let order: Vec<usize> = (0..n)
                .filter(|v| !masked.contains(v))
                .chain(masked.iter().copied())
                .collect();
            let fixed = order
                .iter()
                .map(|&o| {
                    if masked.contains(&o) {
                        None
                    } else {
                        Some(base[o])
                    }
                })
                .collect();
            return Ok(ColouringInstance {
                map: map.relabel(&order),
                fixed,
                masked: (n - k..n).collect(),
            });
        }
    }
    Err(Error::gave_up(
        INSTANCE_ATTEMPTS,
        "no mask gave between 1 and 8 completions",
    ))
}
