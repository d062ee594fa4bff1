//! Combinatorial models for type-A cluster categories and their derived
//! categories: polygon diagonals with the flip graph, and the repetition
//! quiver ZA_n with mesh knitting.
//!
//! Degrees of cluster variables become an exact tropical frieze on these
//! models: values add across meshes, the rotation (suspension) flips signs,
//! and for even rank a nonzero frieze on the strip fails to descend to the
//! cluster category. Nothing here is assumed: the suspension action and the
//! strip/diagonal correspondence are cross-validated by the callers' tests
//! at odd rank before the even-rank phenomena are trusted.

use num_bigint::BigInt;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;
use std::ops::Range;

use crate::cluster::{deg_to_string, mutate_seed, DegVec, GradedSeed};
use crate::error::Error;
use crate::explore::CheckReport;
use crate::laurent::LaurentPoly;
use crate::roots::{DynkinType, Family};

/// A proper diagonal of an N-gon with vertices 0..N-1: endpoints
/// non-adjacent, stored with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal {
    pub i: usize,
    pub j: usize,
}

impl Diagonal {
    pub fn new(n_gon: usize, a: usize, b: usize) -> Result<Self, Error> {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        if j >= n_gon || j - i < 2 || j - i > n_gon - 2 {
            return Err(Error::Parse(format!(
                "({a},{b}) is not a proper diagonal of an {n_gon}-gon"
            )));
        }
        Ok(Diagonal { i, j })
    }

    /// Rotate both endpoints by one vertex: the combinatorial suspension.
    pub fn rotate(&self, n_gon: usize) -> Diagonal {
        Diagonal::new(n_gon, (self.i + 1) % n_gon, (self.j + 1) % n_gon)
            .expect("rotation preserves properness")
    }
}

/// Vertex (p, q) of the repetition quiver ZA_n: p runs over Z, q over
/// 1..=n; arrows (p,q) -> (p,q+1) and (p,q) -> (p+1,q-1); the translate is
/// tau(p,q) = (p-1,q).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StripVertex {
    pub p: i64,
    pub q: usize,
}

/// A point of one of the two combinatorial models.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModelPoint {
    Diagonal(Diagonal),
    Strip(StripVertex),
}

/// Degree vectors attached to model points.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FriezeAssignment {
    values: BTreeMap<ModelPoint, DegVec>,
}

impl FriezeAssignment {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ModelPoint, &DegVec)> {
        self.values.iter()
    }

    pub fn diagonal(&self, d: Diagonal) -> Option<&DegVec> {
        self.values.get(&ModelPoint::Diagonal(d))
    }

    pub fn strip(&self, p: i64, q: usize) -> Option<&DegVec> {
        self.values.get(&ModelPoint::Strip(StripVertex { p, q }))
    }

    fn insert_diagonal(&mut self, d: Diagonal, v: DegVec) {
        self.values.insert(ModelPoint::Diagonal(d), v);
    }

    fn insert_strip(&mut self, p: i64, q: usize, v: DegVec) {
        self.values
            .insert(ModelPoint::Strip(StripVertex { p, q }), v);
    }
}

/// All proper diagonals of the N-gon, N >= 4.
pub fn diagonals(n_gon: usize) -> Result<Vec<Diagonal>, Error> {
    if n_gon < 4 {
        return Err(Error::Parse(format!("{n_gon}-gon has no proper diagonals")));
    }
    let mut out = Vec::with_capacity(n_gon * (n_gon - 3) / 2);
    for i in 0..n_gon {
        for j in i + 2..n_gon {
            if !(i == 0 && j == n_gon - 1) {
                out.push(Diagonal { i, j });
            }
        }
    }
    Ok(out)
}

fn require_type_a(t: DynkinType) -> Result<usize, Error> {
    if t.family != Family::A {
        return Err(Error::UnsupportedType(format!(
            "{t}: polygon and strip models exist for type A only"
        )));
    }
    Ok(t.rank)
}

/// The zigzag ("snake") triangulation of the N-gon, ordered so consecutive
/// diagonals share a triangle; its quiver is the bipartite A_{N-3} quiver
/// up to a global sign.
fn snake_triangulation(n_gon: usize) -> Vec<Diagonal> {
    let n = n_gon - 3;
    let mut out = Vec::with_capacity(n);
    let (mut lo, mut hi) = (1usize, n_gon - 1);
    out.push(Diagonal { i: lo, j: hi });
    for c in 2..=n {
        if c % 2 == 0 {
            lo += 1;
        } else {
            hi -= 1;
        }
        out.push(Diagonal { i: lo, j: hi });
    }
    out
}

/// Faces of a triangulation: vertex triples whose three sides are all
/// boundary edges or diagonals. In convex position no vertex can lie inside
/// such a triangle, so this is exactly the face set.
fn faces(n_gon: usize, diags: &[Diagonal]) -> Vec<[usize; 3]> {
    let diag_set: BTreeSet<Diagonal> = diags.iter().copied().collect();
    let is_edge = |a: usize, b: usize| -> bool {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        j - i == 1 || (i == 0 && j == n_gon - 1) || diag_set.contains(&Diagonal { i, j })
    };
    let mut out = Vec::with_capacity(n_gon - 2);
    for a in 0..n_gon {
        for b in a + 1..n_gon {
            if !is_edge(a, b) {
                continue;
            }
            for c in b + 1..n_gon {
                if is_edge(b, c) && is_edge(a, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Signed arrow counts between the diagonals of a triangulation: within
/// each face, an arrow from each side to the next in counterclockwise
/// order. Entry (r, s) counts arrows r -> s minus arrows s -> r.
fn triangulation_quiver(n_gon: usize, diags: &[Diagonal]) -> Vec<Vec<i64>> {
    let idx: BTreeMap<Diagonal, usize> = diags.iter().enumerate().map(|(i, d)| (*d, i)).collect();
    let n = diags.len();
    let mut q = vec![vec![0i64; n]; n];
    for [a, b, c] in faces(n_gon, diags) {
        // Vertices appear counterclockwise as a < b < c.
        let sides = [(a, b), (b, c), (a, c)];
        let ids: Vec<Option<usize>> = sides
            .iter()
            .map(|&(x, y)| idx.get(&Diagonal { i: x, j: y }).copied())
            .collect();
        for s in 0..3 {
            let t = (s + 1) % 3;
            if let (Some(from), Some(to)) = (ids[s], ids[t]) {
                q[from][to] += 1;
                q[to][from] -= 1;
            }
        }
    }
    q
}

/// Flip a diagonal: it is the shared side of two faces forming a
/// quadrilateral; replace it with the other diagonal of that quadrilateral.
fn flip(n_gon: usize, diags: &[Diagonal], k: usize) -> Result<Diagonal, Error> {
    let target = diags[k];
    let mut thirds = Vec::new();
    for f in faces(n_gon, diags) {
        if f.contains(&target.i) && f.contains(&target.j) {
            let third = f.into_iter().find(|&v| v != target.i && v != target.j);
            thirds.extend(third);
        }
    }
    if thirds.len() != 2 {
        return Err(Error::Internal(format!(
            "diagonal ({},{}) bounds {} faces",
            target.i,
            target.j,
            thirds.len()
        )));
    }
    Diagonal::new(n_gon, thirds[0], thirds[1])
}

/// Label every diagonal of the (n+3)-gon with the degree of its cluster
/// variable by walking the flip graph and the exchange graph in lockstep.
///
/// The initial triangulation is the snake, whose quiver must agree with the
/// seed's exchange matrix up to a global sign (seed mutation is invariant
/// under that sign). Any desynchronization, i.e. one diagonal reached with
/// two different variables, is a hard failure.
pub fn label_diagonals(t: DynkinType, seed: &GradedSeed) -> Result<FriezeAssignment, Error> {
    let n = require_type_a(t)?;
    let n_gon = n + 3;
    if seed.num_vars() != n || seed.pattern().num_mutable() != n {
        return Err(Error::DimensionMismatch(format!(
            "seed has {} variables, type {t} needs {n} mutable variables",
            seed.num_vars()
        )));
    }
    let snake = snake_triangulation(n_gon);
    let quiver = triangulation_quiver(n_gon, &snake);
    let b = seed.pattern().b().to_i64_rows()?;
    let matches_plus = (0..n).all(|r| (0..n).all(|c| quiver[r][c] == b[r][c]));
    let matches_minus = (0..n).all(|r| (0..n).all(|c| quiver[r][c] == -b[r][c]));
    if !matches_plus && !matches_minus {
        return Err(Error::Internal(
            "snake triangulation quiver does not match the seed pattern".into(),
        ));
    }

    // diagonal -> (variable, degree); the variable pins down consistency.
    let mut assignment: BTreeMap<Diagonal, (LaurentPoly, DegVec)> = BTreeMap::new();
    for (k, d) in snake.iter().enumerate() {
        assignment.insert(
            *d,
            (seed.cluster()[k].clone(), seed.grading().row_degree(k)),
        );
    }

    let mut seen: BTreeSet<Vec<Diagonal>> = BTreeSet::new();
    let canon = |ds: &[Diagonal]| {
        let mut v = ds.to_vec();
        v.sort_unstable();
        v
    };
    seen.insert(canon(&snake));
    let mut queue: VecDeque<(Vec<Diagonal>, GradedSeed)> = VecDeque::new();
    queue.push_back((snake, seed.clone()));

    while let Some((diags, state)) = queue.pop_front() {
        for k in 0..n {
            let new_diag = flip(n_gon, &diags, k)?;
            let new_seed = mutate_seed(&state, k)?;
            let var = new_seed.cluster()[k].clone();
            let deg = new_seed.grading().row_degree(k);
            match assignment.get(&new_diag) {
                Some((existing, existing_deg)) => {
                    if existing != &var || existing_deg != &deg {
                        return Err(Error::Internal(format!(
                            "flip/mutation desynchronized at diagonal ({},{})",
                            new_diag.i, new_diag.j
                        )));
                    }
                }
                None => {
                    assignment.insert(new_diag, (var, deg));
                }
            }
            let mut next = diags.clone();
            next[k] = new_diag;
            if seen.insert(canon(&next)) {
                queue.push_back((next, new_seed));
            }
        }
    }

    let expected = n_gon * (n_gon - 3) / 2;
    if assignment.len() != expected {
        return Err(Error::Internal(format!(
            "labelled {} of {} diagonals",
            assignment.len(),
            expected
        )));
    }
    let mut out = FriezeAssignment::default();
    for (d, (_, deg)) in assignment {
        out.insert_diagonal(d, deg);
    }
    Ok(out)
}

/// Check `deg(rotate(d)) = -deg(d)` for every diagonal, plus the forced
/// zeros: a diagonal fixed by an odd power of the rotation must have degree
/// zero.
pub fn check_sigma_sign_flip(assignment: &FriezeAssignment, n_gon: usize) -> CheckReport {
    let mut report = CheckReport::default();
    for (point, deg) in assignment.iter() {
        let ModelPoint::Diagonal(d) = point else {
            continue;
        };
        report.checked += 1;
        let rotated = d.rotate(n_gon);
        match assignment.diagonal(rotated) {
            None => report
                .failures
                .push(format!("rotation of ({},{}) is unlabelled", d.i, d.j)),
            Some(rdeg) => {
                let neg: DegVec = deg.iter().map(|x| -x).collect();
                if rdeg != &neg {
                    report.failures.push(format!(
                        "deg({},{}) = {} but deg of its rotation is {}, not the negative",
                        d.i,
                        d.j,
                        deg_to_string(deg),
                        deg_to_string(rdeg)
                    ));
                }
            }
        }
        // Orbit parity: sigma^m d = d with m odd forces degree zero.
        let mut m = 0usize;
        let mut cur = *d;
        loop {
            cur = cur.rotate(n_gon);
            m += 1;
            if cur == *d {
                break;
            }
        }
        if m % 2 == 1 && deg.iter().any(|x| x != &BigInt::from(0)) {
            report.failures.push(format!(
                "diagonal ({},{}) has odd rotation order {m} but nonzero degree {}",
                d.i,
                d.j,
                deg_to_string(deg)
            ));
        }
    }
    report
}

const KNIT_WINDOW_BOUND: usize = 4096;

/// Propagate an initial slice across the repetition quiver ZA_n by the
/// exact mesh rule `f(x) + f(tau x) = sum of f over arrows into x`:
/// column by column,
/// `f(p,q) = f(p,q-1) + f(p-1,q+1) - f(p-1,q)` with missing neighbours
/// contributing zero.
pub fn knit_strip(
    t: DynkinType,
    initial_slice: &[DegVec],
    window: Range<i64>,
) -> Result<FriezeAssignment, Error> {
    let n = require_type_a(t)?;
    if initial_slice.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "slice has {} values, type {t} needs {n}",
            initial_slice.len()
        )));
    }
    let d = initial_slice.first().map_or(0, |v| v.len());
    if initial_slice.iter().any(|v| v.len() != d) {
        return Err(Error::DimensionMismatch("ragged slice".into()));
    }
    let cols = window.end.saturating_sub(window.start).max(0) as usize;
    if cols == 0 {
        return Err(Error::Parse("empty knitting window".into()));
    }
    if cols > KNIT_WINDOW_BOUND {
        return Err(Error::WindowTooLarge {
            requested: cols,
            bound: KNIT_WINDOW_BOUND,
        });
    }
    let mut out = FriezeAssignment::default();
    for (q, v) in initial_slice.iter().enumerate() {
        out.insert_strip(window.start, q + 1, v.clone());
    }
    let zero: DegVec = vec![BigInt::from(0); d];
    for p in window.start + 1..window.end {
        for q in 1..=n {
            let below = if q > 1 {
                out.strip(p, q - 1).expect("filled in this column").clone()
            } else {
                zero.clone()
            };
            let above_prev = if q < n {
                out.strip(p - 1, q + 1).expect("previous column").clone()
            } else {
                zero.clone()
            };
            let prev = out.strip(p - 1, q).expect("previous column");
            let val: DegVec = below
                .iter()
                .zip(above_prev.iter())
                .zip(prev.iter())
                .map(|((a, b), c)| a + b - c)
                .collect();
            out.insert_strip(p, q, val);
        }
    }
    Ok(out)
}

/// The identification functor on ZA_n whose quotient is the cluster
/// category: `F = tau^{-1} Sigma` with the suspension acting as
/// `(p, q) -> (p + q, n + 1 - q)`, so `F(p, q) = (p + q + 1, n + 1 - q)`.
pub fn cluster_identification(t: DynkinType, v: StripVertex) -> Result<StripVertex, Error> {
    let n = require_type_a(t)?;
    Ok(StripVertex {
        p: v.p + v.q as i64 + 1,
        q: n + 1 - v.q,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DescentVerdict {
    Consistent,
    Inconsistent,
}

#[derive(Clone, Debug)]
pub struct DescentReport {
    pub verdict: DescentVerdict,
    pub pairs_checked: usize,
    /// First offending pair: the two identified vertices and their values.
    pub witness: Option<(StripVertex, StripVertex, DegVec, DegVec)>,
}

/// Check whether a strip frieze descends to the cluster category: vertices
/// identified by `F = tau^{-1} Sigma` must carry equal values.
pub fn check_descent(t: DynkinType, strip: &FriezeAssignment) -> Result<DescentReport, Error> {
    require_type_a(t)?;
    let mut report = DescentReport {
        verdict: DescentVerdict::Consistent,
        pairs_checked: 0,
        witness: None,
    };
    for (point, deg) in strip.iter() {
        let ModelPoint::Strip(v) = point else {
            continue;
        };
        let fv = cluster_identification(t, *v)?;
        let Some(other) = strip.strip(fv.p, fv.q) else {
            continue;
        };
        report.pairs_checked += 1;
        if other != deg && report.witness.is_none() {
            report.verdict = DescentVerdict::Inconsistent;
            report.witness = Some((*v, fv, deg.clone(), other.clone()));
        }
    }
    if report.pairs_checked == 0 {
        return Err(Error::Parse(
            "window too narrow: no identified pairs to compare".into(),
        ));
    }
    Ok(report)
}

/// The diagonal of the (n+3)-gon corresponding to a strip vertex:
/// `{p, p + q + 1}` modulo N. The translate tau(p,q) = (p-1,q) matches
/// rotating the diagonal backwards, and the two strip representatives of a
/// diagonal are exactly an F-orbit.
pub fn strip_to_diagonal(t: DynkinType, v: StripVertex) -> Result<Diagonal, Error> {
    let n = require_type_a(t)?;
    let n_gon = n + 3;
    let m = n_gon as i64;
    let a = ((v.p % m) + m) % m;
    let b = (((v.p + v.q as i64 + 1) % m) + m) % m;
    Diagonal::new(n_gon, a as usize, b as usize)
}

/// The slice of fan diagonals `{0, q+1}`: the strip column at p = 0.
pub fn fan_slice(t: DynkinType, diagonals: &FriezeAssignment) -> Result<Vec<DegVec>, Error> {
    let n = require_type_a(t)?;
    let n_gon = n + 3;
    (1..=n)
        .map(|q| {
            let d = Diagonal::new(n_gon, 0, q + 1)?;
            diagonals
                .diagonal(d)
                .cloned()
                .ok_or_else(|| Error::Internal(format!("fan diagonal (0,{}) unlabelled", q + 1)))
        })
        .collect()
}

fn display_degree(v: &[BigInt]) -> String {
    match v.len() {
        0 => "0".to_string(),
        1 => v[0].to_string(),
        _ => {
            let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            format!("({})", inner.join(","))
        }
    }
}

/// Fixed-width diagonal-grid rendering of a knitted strip: row q = n at the
/// top, one value per vertex, mesh neighbours offset by one cell.
pub fn render_strip(t: DynkinType, strip: &FriezeAssignment, window: Range<i64>) -> String {
    let n = t.rank;
    let mut cells: BTreeMap<(usize, i64), String> = BTreeMap::new();
    let mut width = 1;
    for (point, deg) in strip.iter() {
        let ModelPoint::Strip(v) = point else {
            continue;
        };
        if v.p < window.start || v.p >= window.end {
            continue;
        }
        let s = display_degree(deg);
        width = width.max(s.len());
        // Triangular coordinates: column 2p + q makes both arrow directions
        // unit diagonal steps.
        cells.insert((n - v.q, 2 * v.p + v.q as i64), s);
    }
    let min_col = cells.keys().map(|&(_, c)| c).min().unwrap_or(0);
    let max_col = cells.keys().map(|&(_, c)| c).max().unwrap_or(0);
    let cell_w = width + 1;
    let mut out = String::new();
    for row in 0..n {
        let mut line = String::new();
        for col in min_col..=max_col {
            match cells.get(&(row, col)) {
                Some(s) => {
                    line.push_str(s);
                    line.push_str(&" ".repeat(cell_w - s.len()));
                }
                None => line.push_str(&" ".repeat(cell_w)),
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// SVG rendering with the same cell contents as [`render_strip`], plus the
/// mesh arrows.
pub fn render_strip_svg(t: DynkinType, strip: &FriezeAssignment, window: Range<i64>) -> String {
    let n = t.rank;
    let step = 40i64;
    let pos = |v: &StripVertex| -> (i64, i64) {
        let x = (2 * v.p + v.q as i64 - (2 * window.start + 1)) * step + step;
        let y = ((n - v.q) as i64) * step + step;
        (x, y)
    };
    let in_window = |v: &StripVertex| v.p >= window.start && v.p < window.end;
    let mut texts = String::new();
    let mut lines = String::new();
    let mut max_x = 0;
    for (point, deg) in strip.iter() {
        let ModelPoint::Strip(v) = point else {
            continue;
        };
        if !in_window(v) {
            continue;
        }
        let (x, y) = pos(v);
        max_x = max_x.max(x);
        let _ = write!(
            texts,
            "  <text x=\"{x}\" y=\"{y}\" text-anchor=\"middle\">{}</text>\n",
            display_degree(deg)
        );
        for target in [
            StripVertex { p: v.p, q: v.q + 1 },
            StripVertex {
                p: v.p + 1,
                q: v.q.wrapping_sub(1),
            },
        ] {
            if target.q >= 1
                && target.q <= n
                && in_window(&target)
                && strip.strip(target.p, target.q).is_some()
            {
                let (x2, y2) = pos(&target);
                let _ = write!(
                    lines,
                    "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"gray\"/>\n",
                    x + step / 4,
                    y + (y2 - y).signum() * step / 4,
                    x2 - step / 4,
                    y2 - (y2 - y).signum() * step / 4
                );
            }
        }
    }
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\">\n{lines}{texts}</svg>\n",
        max_x + step,
        (n as i64 + 1) * step
    )
}
