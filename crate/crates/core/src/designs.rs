//! Block designs: Steiner triple systems, maximum partial triple systems,
//! projective and affine planes, truncated planes and cyclic planes.
//!
//! Points are `0..point_count`. Blocks are sorted vertex sets; except for
//! cyclic planes (whose block `i` is the translate `D + i`) the block list is
//! sorted too.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::graph::{is_isomorphic, Graph, VertexSet};

/// Plane orders with a projective and affine plane available.
pub const PLANE_ORDERS: [u64; 9] = [2, 3, 4, 5, 7, 8, 9, 11, 13];
/// Plane orders with a cyclic (difference set) presentation.
pub const CYCLIC_ORDERS: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];

/// Default seed for the randomized partial triple system search.
pub const DEFAULT_SEED: u64 = 0x5EED;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DesignSource {
    Bose,
    Skolem,
    Pg,
    Ag,
    Truncated,
    DifferenceSet,
    Greedy,
    Exhaustive,
    Input,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PlaneKind {
    Projective,
    Affine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneInfo {
    pub kind: PlaneKind,
    pub q: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDesign {
    pub point_count: usize,
    pub blocks: Vec<VertexSet>,
    pub source: DesignSource,
    /// Every pair of points lies in exactly one block (otherwise at most one).
    pub complete: bool,
    /// Set for untruncated planes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plane: Option<PlaneInfo>,
}

impl BlockDesign {
    fn new(
        point_count: usize,
        blocks: Vec<Vec<usize>>,
        source: DesignSource,
        complete: bool,
    ) -> Self {
        let mut blocks: Vec<VertexSet> = blocks.into_iter().map(VertexSet::new).collect();
        if source != DesignSource::DifferenceSet {
            blocks.sort();
        }
        BlockDesign {
            point_count,
            blocks,
            source,
            complete,
            plane: None,
        }
    }

    /// Sorted list of block sizes with multiplicities, as `(size, count)`.
    pub fn size_census(&self) -> Vec<(usize, usize)> {
        let mut m: HashMap<usize, usize> = HashMap::new();
        for b in &self.blocks {
            *m.entry(b.len()).or_default() += 1;
        }
        let mut v: Vec<_> = m.into_iter().collect();
        v.sort_unstable();
        v
    }

    /// Pairs not covered by any block.
    pub fn uncovered_pairs(&self) -> Graph {
        let mut es = Vec::new();
        let cov = self.pair_counts();
        for u in 0..self.point_count {
            for v in u + 1..self.point_count {
                if cov.get(&(u, v)).copied().unwrap_or(0) == 0 {
                    es.push((u, v));
                }
            }
        }
        Graph::from_edges_dedup(self.point_count, es)
    }

    fn pair_counts(&self) -> HashMap<(usize, usize), usize> {
        let mut cov = HashMap::new();
        for b in &self.blocks {
            let s = b.as_slice();
            for (i, &u) in s.iter().enumerate() {
                for &v in &s[i + 1..] {
                    *cov.entry((u, v)).or_insert(0) += 1;
                }
            }
        }
        cov
    }
}

/// Checks that no pair lies in two blocks and, for complete designs, that
/// every pair lies in one.
pub fn validate_pairwise(d: &BlockDesign) -> Result<()> {
    if let Some(b) = d
        .blocks
        .iter()
        .find(|b| b.as_slice().iter().any(|&v| v >= d.point_count))
    {
        return Err(Error::Validation(format!(
            "block {:?} has a point outside 0..{}",
            b.as_slice(),
            d.point_count
        )));
    }
    let cov = d.pair_counts();
    let mut over: Vec<_> = cov
        .iter()
        .filter(|(_, &c)| c > 1)
        .map(|(p, _)| *p)
        .collect();
    over.sort_unstable();
    if !over.is_empty() {
        over.truncate(10);
        return Err(Error::Validation(format!(
            "pairs in several blocks: {over:?}"
        )));
    }
    if d.complete {
        let missing = d.uncovered_pairs();
        if missing.size() > 0 {
            let mut m = missing.edges().to_vec();
            m.truncate(10);
            return Err(Error::Validation(format!("pairs in no block: {m:?}")));
        }
    }
    Ok(())
}

/// Steiner triple system on `n ≡ 1, 3 (mod 6)` points.
pub fn steiner_triple_system(n: usize) -> Result<BlockDesign> {
    match n % 6 {
        3 => Ok(bose(n)),
        1 if n >= 7 => Ok(skolem(n)),
        _ => domain(format!(
            "no Steiner triple system on {n} points (need n = 1, 3 mod 6, n >= 3)"
        )),
    }
}

fn bose(n: usize) -> BlockDesign {
    let m = n / 3;
    let half = m.div_ceil(2);
    let op = |x: usize, y: usize| (x + y) * half % m;
    let pt = |x: usize, i: usize| i * m + x;
    let mut blocks = Vec::new();
    for x in 0..m {
        blocks.push(vec![pt(x, 0), pt(x, 1), pt(x, 2)]);
    }
    for i in 0..3 {
        for x in 0..m {
            for y in x + 1..m {
                blocks.push(vec![pt(x, i), pt(y, i), pt(op(x, y), (i + 1) % 3)]);
            }
        }
    }
    BlockDesign::new(n, blocks, DesignSource::Bose, true)
}

fn skolem(n: usize) -> BlockDesign {
    let m = (n - 1) / 3;
    let v = m / 2;
    let op = |x: usize, y: usize| {
        let s = (x + y) % m;
        if s.is_multiple_of(2) {
            s / 2
        } else {
            v + (s - 1) / 2
        }
    };
    let pt = |x: usize, i: usize| i * m + x;
    let inf = n - 1;
    let mut blocks = Vec::new();
    for x in 0..v {
        blocks.push(vec![pt(x, 0), pt(x, 1), pt(x, 2)]);
        for i in 0..3 {
            blocks.push(vec![inf, pt(x + v, i), pt(x, (i + 1) % 3)]);
        }
    }
    for i in 0..3 {
        for x in 0..m {
            for y in x + 1..m {
                blocks.push(vec![pt(x, i), pt(y, i), pt(op(x, y), (i + 1) % 3)]);
            }
        }
    }
    BlockDesign::new(n, blocks, DesignSource::Skolem, true)
}

/// The leave graph a maximum partial triple system on `n` points has.
pub fn expected_leave(n: usize) -> Graph {
    match n % 6 {
        1 | 3 => Graph::empty(n),
        0 | 2 => Graph::from_edges_dedup(n, (0..n / 2).map(|i| (2 * i, 2 * i + 1))),
        4 => Graph::from_edges_dedup(
            n,
            [(0, 1), (0, 2), (0, 3)]
                .into_iter()
                .chain((2..n / 2).map(|i| (2 * i, 2 * i + 1))),
        ),
        _ => Graph::from_edges_dedup(n, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    }
}

/// Maximum partial triple system on `n ≥ 3` points and its leave graph.
pub fn max_partial_triple_system(n: usize) -> Result<(BlockDesign, Graph)> {
    max_partial_triple_system_seeded(n, DEFAULT_SEED)
}

pub fn max_partial_triple_system_seeded(n: usize, seed: u64) -> Result<(BlockDesign, Graph)> {
    if n < 3 {
        return domain("partial triple system needs n >= 3");
    }
    let d = if n < 7 {
        exhaustive_packing(n)
    } else {
        match n % 6 {
            1 | 3 => steiner_triple_system(n)?,
            0 | 2 => {
                let sts = steiner_triple_system(n + 1)?;
                let blocks = sts
                    .blocks
                    .into_iter()
                    .filter(|b| !b.contains(n))
                    .map(VertexSet::into_vec)
                    .collect();
                BlockDesign::new(n, blocks, DesignSource::Truncated, false)
            }
            _ => {
                let leave = expected_leave(n);
                let h = leave.complement();
                let blocks = triangle_decomposition(&h, seed)?;
                BlockDesign::new(n, blocks, DesignSource::Greedy, false)
            }
        }
    };
    let mut d = d;
    d.complete = false;
    let leave = d.uncovered_pairs();
    assert!(
        is_isomorphic(&leave, &expected_leave(n)),
        "leave graph of the partial triple system on {n} points has the wrong shape"
    );
    Ok((d, leave))
}

/// Maximum edge-disjoint triangle packing of `K_n` by exhaustive search.
fn exhaustive_packing(n: usize) -> BlockDesign {
    let mut tris = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                tris.push([a, b, c]);
            }
        }
    }
    fn go(
        i: usize,
        tris: &[[usize; 3]],
        used: &mut Vec<Vec<bool>>,
        cur: &mut Vec<[usize; 3]>,
        best: &mut Vec<[usize; 3]>,
    ) {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        if i == tris.len() || cur.len() + (tris.len() - i) <= best.len() {
            return;
        }
        let [a, b, c] = tris[i];
        if !used[a][b] && !used[a][c] && !used[b][c] {
            for (x, y) in [(a, b), (a, c), (b, c)] {
                used[x][y] = true;
            }
            cur.push(tris[i]);
            go(i + 1, tris, used, cur, best);
            cur.pop();
            for (x, y) in [(a, b), (a, c), (b, c)] {
                used[x][y] = false;
            }
        }
        go(i + 1, tris, used, cur, best);
    }
    let mut best = Vec::new();
    go(
        0,
        &tris,
        &mut vec![vec![false; n]; n],
        &mut Vec::new(),
        &mut best,
    );
    BlockDesign::new(
        n,
        best.into_iter().map(|t| t.to_vec()).collect(),
        DesignSource::Exhaustive,
        false,
    )
}

/// Triangle decomposition of `h` by Stinson-style hill climbing. `h` must
/// have even degrees and a multiple of three edges.
fn triangle_decomposition(h: &Graph, seed: u64) -> Result<Vec<Vec<usize>>> {
    const NONE: usize = usize::MAX;
    let n = h.order();
    if !h.size().is_multiple_of(3) || (0..n).any(|v| h.degree(v) % 2 == 1) {
        return domain("graph cannot be split into triangles");
    }
    let target = h.size() / 3;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _attempt in 0..50 {
        let mut third = vec![vec![NONE; n]; n];
        let mut blocks = 0;
        let budget = 2000 * h.size().max(1);
        for _ in 0..budget {
            if blocks == target {
                break;
            }
            let live: Vec<usize> = (0..n)
                .filter(|&x| h.neighbors(x).iter().any(|&y| third[x][y] == NONE))
                .collect();
            let x = live[rng.gen_range(0..live.len())];
            let mut unc: Vec<usize> = h
                .neighbors(x)
                .iter()
                .copied()
                .filter(|&y| third[x][y] == NONE)
                .collect();
            unc.shuffle(&mut rng);
            let pair = unc
                .iter()
                .enumerate()
                .flat_map(|(i, &y)| unc[i + 1..].iter().map(move |&z| (y, z)))
                .find(|&(y, z)| h.has_edge(y, z));
            let Some((y, z)) = pair else { continue };
            let w = third[y][z];
            if w == NONE {
                blocks += 1;
            } else {
                for (a, b) in [(y, z), (y, w), (z, w)] {
                    third[a][b] = NONE;
                    third[b][a] = NONE;
                }
            }
            for (a, b, c) in [(x, y, z), (x, z, y), (y, z, x)] {
                third[a][b] = c;
                third[b][a] = c;
            }
        }
        if blocks == target {
            let mut out = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    let c = third[a][b];
                    if c != NONE && c > b {
                        out.push(vec![a, b, c]);
                    }
                }
            }
            return Ok(out);
        }
    }
    Err(Error::Domain(
        "triangle decomposition search did not converge".into(),
    ))
}

fn check_prime(q: u64) -> Result<()> {
    if !PLANE_ORDERS.contains(&q) {
        return domain(format!(
            "plane order {q} unsupported; supported orders are {PLANE_ORDERS:?}"
        ));
    }
    Ok(())
}

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Projective plane `PG(2,q)`.
pub fn projective_plane(q: u64) -> Result<BlockDesign> {
    check_prime(q)?;
    let mut d = if is_prime(q) {
        let q = q as usize;
        let mut lines = affine_lines(q);
        let inf = |slope: usize| q * q + slope; // slope q is vertical
        for (i, l) in lines.iter_mut().enumerate() {
            // affine_lines emits q lines per slope class, slopes 0..q in order.
            l.push(inf(i / q));
        }
        lines.push((0..=q).map(inf).collect());
        BlockDesign::new(q * q + q + 1, lines, DesignSource::Pg, true)
    } else {
        let (c, _) = cyclic_plane_difference_set(q)?;
        BlockDesign::new(
            c.point_count,
            c.blocks.into_iter().map(VertexSet::into_vec).collect(),
            DesignSource::Pg,
            true,
        )
    };
    d.plane = Some(PlaneInfo {
        kind: PlaneKind::Projective,
        q,
    });
    Ok(d)
}

/// Lines of `AG(2,q)` for prime `q`, grouped by slope (vertical last).
fn affine_lines(q: usize) -> Vec<Vec<usize>> {
    let pt = |x: usize, y: usize| x * q + y;
    let mut lines = Vec::new();
    for m in 0..q {
        for b in 0..q {
            lines.push((0..q).map(|x| pt(x, (m * x + b) % q)).collect());
        }
    }
    for c in 0..q {
        lines.push((0..q).map(|y| pt(c, y)).collect());
    }
    lines
}

/// Affine plane `AG(2,q)`.
pub fn affine_plane(q: u64) -> Result<BlockDesign> {
    check_prime(q)?;
    let mut d = if is_prime(q) {
        let q = q as usize;
        BlockDesign::new(q * q, affine_lines(q), DesignSource::Ag, true)
    } else {
        let pg = projective_plane(q)?;
        let mut d = delete_line(&pg, 0);
        d.source = DesignSource::Ag;
        d
    };
    d.plane = Some(PlaneInfo {
        kind: PlaneKind::Affine,
        q,
    });
    Ok(d)
}

/// Removes a line and its points; the other lines keep their remaining
/// points. Blocks of size one are kept so the block count is `b − 1`.
fn delete_line(d: &BlockDesign, line: usize) -> BlockDesign {
    let gone = &d.blocks[line];
    let mut relabel = vec![usize::MAX; d.point_count];
    let mut next = 0;
    for (p, slot) in relabel.iter_mut().enumerate() {
        if !gone.contains(p) {
            *slot = next;
            next += 1;
        }
    }
    let blocks = d
        .blocks
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != line)
        .map(|(_, b)| {
            b.as_slice()
                .iter()
                .filter(|&&p| relabel[p] != usize::MAX)
                .map(|&p| relabel[p])
                .collect()
        })
        .collect();
    BlockDesign::new(next, blocks, DesignSource::Truncated, d.complete)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TruncateMode {
    DeletePoint,
    DeleteLine,
}

/// Deletes the last point (from every line through it), or for affine
/// planes the first line together with its points.
pub fn truncate_plane(d: &BlockDesign, mode: TruncateMode) -> Result<BlockDesign> {
    let Some(info) = d.plane else {
        return domain("truncation needs an untruncated projective or affine plane");
    };
    match mode {
        TruncateMode::DeletePoint => {
            let x = d.point_count - 1;
            let blocks = d
                .blocks
                .iter()
                .map(|b| b.as_slice().iter().copied().filter(|&p| p != x).collect())
                .collect();
            Ok(BlockDesign::new(
                x,
                blocks,
                DesignSource::Truncated,
                d.complete,
            ))
        }
        TruncateMode::DeleteLine => {
            if info.kind != PlaneKind::Affine {
                return domain("deleting a line is only defined for affine planes");
            }
            Ok(delete_line(d, 0))
        }
    }
}

fn difference_set(q: u64) -> Option<&'static [u64]> {
    Some(match q {
        2 => &[1, 2, 4],
        3 => &[0, 1, 3, 9],
        4 => &[0, 1, 4, 14, 16],
        5 => &[0, 1, 3, 8, 12, 18],
        7 => &[0, 1, 3, 13, 32, 36, 43, 52],
        8 => &[0, 1, 3, 7, 15, 31, 36, 54, 63],
        9 => &[0, 1, 3, 9, 27, 49, 56, 61, 77, 81],
        _ => return None,
    })
}

/// Checks that every non-zero residue mod `v` is exactly one difference.
pub fn is_perfect_difference_set(d: &[u64], v: u64) -> bool {
    let mut seen = vec![false; v as usize];
    for &a in d {
        for &b in d {
            if a != b {
                let x = ((a + v - b) % v) as usize;
                if seen[x] {
                    return false;
                }
                seen[x] = true;
            }
        }
    }
    seen.iter().skip(1).all(|&s| s)
}

/// `PG(2,q)` with line `i = D + i − d₀` and point `i` on line `i`, so that
/// `i ↦ i + 1` is an automorphism. Returns the difference set as certificate.
pub fn cyclic_plane_difference_set(q: u64) -> Result<(BlockDesign, Vec<u64>)> {
    let Some(ds) = difference_set(q) else {
        return domain(format!(
            "no cyclic plane stored for q={q}; supported orders are {CYCLIC_ORDERS:?}"
        ));
    };
    let v = q * q + q + 1;
    debug_assert!(is_perfect_difference_set(ds, v));
    let d0 = ds[0];
    let blocks = (0..v)
        .map(|i| {
            ds.iter()
                .map(|&d| ((d + v - d0 + i) % v) as usize)
                .collect()
        })
        .collect();
    let mut d = BlockDesign::new(v as usize, blocks, DesignSource::DifferenceSet, true);
    d.plane = Some(PlaneInfo {
        kind: PlaneKind::Projective,
        q,
    });
    Ok((d, ds.to_vec()))
}
