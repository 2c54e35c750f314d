//! Brute-force Kauffman bracket of a braid closure, kept free of the
//! library's own polynomial and trace code.

#![allow(dead_code)]

use std::collections::BTreeMap;

/// Laurent polynomial in `A` as exponent → coefficient.
pub type APoly = BTreeMap<i32, i64>;

fn add_into(acc: &mut APoly, p: &APoly, scale: i64, shift: i32) {
    for (e, c) in p {
        *acc.entry(e + shift).or_insert(0) += c * scale;
    }
    acc.retain(|_, c| *c != 0);
}

fn mul(a: &APoly, b: &APoly) -> APoly {
    let mut out = APoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea + eb).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Loops in the closure of a Temperley–Lieb state: `smooth[k]` says whether
/// crossing `k` is replaced by a cup-cap pair.
fn loops(strands: usize, gens: &[i32], smooth: &[bool]) -> usize {
    let levels = gens.len();
    // node (p, k): strand position p at height k; height `levels` is glued to 0
    let id = |p: usize, k: usize| (k % levels.max(1)) * strands + p;
    let total = strands * levels.max(1);
    let mut parent: Vec<usize> = (0..total).collect();
    let join = |a: usize, b: usize, parent: &mut Vec<usize>| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    };
    if levels == 0 {
        return strands;
    }
    for (k, &g) in gens.iter().enumerate() {
        let i = g.unsigned_abs() as usize - 1;
        for p in 0..strands {
            if smooth[k] && (p == i || p == i + 1) {
                continue;
            }
            join(id(p, k), id(p, k + 1), &mut parent);
        }
        if smooth[k] {
            join(id(i, k), id(i + 1, k), &mut parent);
            join(id(i, k + 1), id(i + 1, k + 1), &mut parent);
        }
    }
    (0..total).filter(|&x| find(&mut parent, x) == x).count()
}

/// `⟨L⟩` with `⟨○⟩ = 1`, from `⟨σ⟩ = A⟨‖⟩ + A⁻¹⟨≍⟩` and
/// `⟨σ⁻¹⟩ = A⁻¹⟨‖⟩ + A⟨≍⟩`.
pub fn bracket(strands: usize, gens: &[i32]) -> APoly {
    let delta: APoly = [(2, -1), (-2, -1)].into_iter().collect();
    let n = gens.len();
    let mut total = APoly::new();
    for mask in 0u64..(1u64 << n) {
        let smooth: Vec<bool> = (0..n).map(|k| mask >> k & 1 == 1).collect();
        let mut a_exp = 0;
        for (k, &g) in gens.iter().enumerate() {
            let sign = if g > 0 { 1 } else { -1 };
            a_exp += if smooth[k] { -sign } else { sign };
        }
        let mut term: APoly = [(a_exp, 1)].into_iter().collect();
        for _ in 1..loops(strands, gens, &smooth) {
            term = mul(&term, &delta);
        }
        add_into(&mut total, &term, 1, 0);
    }
    total
}

/// `(−A³)^{−w} ⟨L⟩`: the writhe-normalized bracket, a link invariant.
pub fn normalized_bracket(strands: usize, gens: &[i32]) -> APoly {
    let w: i32 = gens.iter().map(|g| g.signum()).sum();
    let b = bracket(strands, gens);
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let mut out = APoly::new();
    add_into(&mut out, &b, sign, -3 * w);
    out
}

/// Rewrites a polynomial in `A²` through `A² = −q^{s}`, `s = ±1`.
/// Returns `None` if an odd power of `A` appears.
pub fn a_squared_to_q(p: &APoly, s: i32) -> Option<BTreeMap<i32, i64>> {
    let mut out = BTreeMap::new();
    for (&e, &c) in p {
        if e % 2 != 0 {
            return None;
        }
        let k = e / 2;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        *out.entry(s * k).or_insert(0) += sign * c;
    }
    out.retain(|_, c| *c != 0);
    Some(out)
}

pub fn closure_components(strands: usize, gens: &[i32]) -> usize {
    let mut at: Vec<usize> = (0..strands).collect();
    for g in gens {
        let i = g.unsigned_abs() as usize - 1;
        at.swap(i, i + 1);
    }
    let mut perm = vec![0; strands];
    for (pos, &s) in at.iter().enumerate() {
        perm[s] = pos;
    }
    let mut seen = vec![false; strands];
    let mut c = 0;
    for s in 0..strands {
        if !seen[s] {
            c += 1;
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                p = perm[p];
            }
        }
    }
    c
}
