//! Brute-force set models used as oracles. Nothing here calls the library's
//! arithmetic; sets are explicit boolean windows.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// `z ∈ <gens>` for `0 <= z < limit`, by a forward sieve.
pub fn sieve(gens: &[i64], limit: usize) -> Vec<bool> {
    let mut member = vec![false; limit];
    member[0] = true;
    for z in 1..limit {
        member[z] = gens.iter().any(|&g| g as usize <= z && member[z - g as usize]);
    }
    member
}

/// Largest gap, or -1 when every nonnegative integer is a member.
pub fn frobenius(member: &[bool]) -> i64 {
    member.iter().rposition(|&m| !m).map_or(-1, |z| z as i64)
}

/// A monomial set on the window `[lo, hi)`; everything at or above `hi` is a
/// member by assumption.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
    pub bits: Vec<bool>,
}

impl Window {
    pub fn from_fn(lo: i64, hi: i64, f: impl Fn(i64) -> bool) -> Self {
        Self {
            lo,
            hi,
            bits: (lo..hi).map(f).collect(),
        }
    }

    pub fn has(&self, z: i64) -> bool {
        if z < self.lo {
            false
        } else if z >= self.hi {
            true
        } else {
            self.bits[(z - self.lo) as usize]
        }
    }

    pub fn members(&self) -> Vec<i64> {
        (self.lo..self.hi).filter(|&z| self.has(z)).collect()
    }
}

/// Brute-force model of `H` with enough room for the ideals used in tests.
pub struct Model {
    pub gens: Vec<i64>,
    pub member: Vec<bool>,
}

impl Model {
    pub fn new(gens: &[i64], limit: usize) -> Self {
        Self {
            gens: gens.to_vec(),
            member: sieve(gens, limit),
        }
    }

    pub fn in_h(&self, z: i64) -> bool {
        z >= 0 && (z as usize >= self.member.len() || self.member[z as usize])
    }

    /// `∪ (g + H)` on `[lo, hi)`.
    pub fn ideal(&self, gens: &[i64], lo: i64, hi: i64) -> Window {
        Window::from_fn(lo, hi, |z| gens.iter().any(|&g| self.in_h(z - g)))
    }

    pub fn sumset(&self, a: &Window, b: &Window, lo: i64, hi: i64) -> Window {
        let am = a.members();
        Window::from_fn(lo, hi, |z| z >= hi || am.iter().any(|&x| b.has(z - x)))
    }

    /// `{z : z + F ⊆ E}` on `[lo, hi)`. The tail of `F` past its window
    /// must land in the tail of `E`.
    pub fn colon(&self, e: &Window, f: &Window, lo: i64, hi: i64) -> Window {
        assert!(lo + f.hi >= e.hi, "window of F too short for the colon");
        let fm = f.members();
        Window::from_fn(lo, hi, |z| fm.iter().all(|&y| e.has(z + y)))
    }

    /// Elements of `E` not in `E + (H \ {0})`.
    pub fn minimal_generators(&self, e: &Window) -> Vec<i64> {
        e.members()
            .into_iter()
            .filter(|&z| !(1..=z - e.lo).any(|s| self.in_h(s) && e.has(z - s)))
            .collect()
    }
}

/// Rank over `F_p` of an integer matrix, `p = 2^31 − 1`.
pub fn rank_mod_p(mut rows: Vec<Vec<i64>>) -> usize {
    const P: i64 = 2_147_483_647;
    let inv = |a: i64| {
        let (mut r, mut base, mut e) = (1i64, a.rem_euclid(P), P - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        r
    };
    for row in rows.iter_mut() {
        for x in row.iter_mut() {
            *x = x.rem_euclid(P);
        }
    }
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let scale = inv(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = *x * scale % P;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, &p) in row.iter_mut().zip(&pivot) {
                    *x = (*x - f * p).rem_euclid(P);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Every non-parameter Ulrich ideal `E` with `min(E) <= bound`, found by
/// walking all co-ideals `G = H \ E` and testing the definition directly.
pub fn naive_ulrich(gens: &[i64], bound: i64) -> BTreeSet<Vec<i64>> {
    let probe = Model::new(gens, 512);
    let f = frobenius(&probe.member);
    let max_gen = *gens.iter().max().unwrap();
    let mut out = BTreeSet::new();
    for a in (1..=bound).filter(|&a| probe.in_h(a)) {
        // E ⊇ a + H, so G lies in H ∩ [0, a + F] minus a + H.
        let free: Vec<i64> = (a + 1..=a + f)
            .filter(|&z| probe.in_h(z) && !probe.in_h(z - a))
            .collect();
        let forced: Vec<i64> = (0..a).filter(|&z| probe.in_h(z)).collect();
        let hi = 2 * (a + f + 1) + max_gen + 4;
        let mut g = forced;
        walk(&probe, &free, 0, &mut g, &mut |co| {
            let e = Window::from_fn(0, hi, |z| probe.in_h(z) && co.binary_search(&z).is_err());
            let square = probe.sumset(&e, &e, 0, hi);
            let mingens = probe.minimal_generators(&e);
            if mingens.len() < 2 {
                return;
            }
            let stable = mingens.iter().any(|&x| {
                let shifted = Window::from_fn(0, hi, |z| e.has(z - x));
                shifted == square
            });
            let conormal = (0..hi).filter(|&z| e.has(z) && !square.has(z)).count();
            if stable && conormal == mingens.len() * co.len() {
                out.insert(mingens);
            }
        });
    }
    out
}

fn walk(h: &Model, free: &[i64], next: usize, g: &mut Vec<i64>, leaf: &mut dyn FnMut(&[i64])) {
    if next == free.len() {
        leaf(g);
        return;
    }
    walk(h, free, next + 1, g, leaf);
    let z = free[next];
    let closed = h
        .gens
        .iter()
        .filter(|&&s| h.in_h(z - s))
        .all(|&s| g.binary_search(&(z - s)).is_ok());
    if closed {
        g.push(z);
        walk(h, free, next + 1, g, leaf);
        g.pop();
    }
}
