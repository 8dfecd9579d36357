//! Brute-force group computations that use nothing from the library except
//! element enumeration and permutation composition.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use plocal_core::groups::p_part;
use plocal_core::{FiniteGroup, Limits, Perm, Subgroup};

pub type Set = BTreeSet<u32>;

/// Multiplication table built from `Perm::then` directly.
pub struct Table {
    pub n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl Table {
    pub fn of(g: &FiniteGroup) -> Self {
        let n = g.order();
        let perms: Vec<Perm> = (0..n as u32).map(|i| g.perm(i).clone()).collect();
        let index = |p: &Perm| perms.binary_search(p).expect("closed") as u32;
        let mut mul = vec![0; n * n];
        let mut inv = vec![0; n];
        for a in 0..n {
            for b in 0..n {
                let c = index(&perms[a].then(&perms[b]));
                mul[a * n + b] = c;
                if c == 0 {
                    inv[a] = b as u32;
                }
            }
        }
        Table { n, mul, inv }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.n + b as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn closure(&self, gens: &Set) -> Set {
        let mut set: Set = [0].into();
        let mut queue: VecDeque<u32> = [0].into();
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set
    }

    pub fn is_closed(&self, s: &Set) -> bool {
        s.contains(&0)
            && s.iter()
                .all(|&a| s.iter().all(|&b| s.contains(&self.mul(a, b))))
    }

    /// Every subset containing the identity that is closed under products.
    pub fn subgroups_by_subsets(&self) -> BTreeSet<Set> {
        assert!(self.n <= 16);
        let mut out = BTreeSet::new();
        for mask in 0u32..(1 << (self.n - 1)) {
            let s: Set = std::iter::once(0)
                .chain((1..self.n as u32).filter(|i| mask >> (i - 1) & 1 == 1))
                .collect();
            if self.is_closed(&s) {
                out.insert(s);
            }
        }
        out
    }

    /// Closures of `H ∪ {x}`, starting from the trivial subgroup.
    pub fn subgroups_by_closure(&self) -> BTreeSet<Set> {
        let mut seen: BTreeSet<Set> = BTreeSet::new();
        let mut queue: VecDeque<Set> = VecDeque::new();
        let trivial: Set = [0].into();
        seen.insert(trivial.clone());
        queue.push_back(trivial);
        while let Some(h) = queue.pop_front() {
            for x in 0..self.n as u32 {
                if h.contains(&x) {
                    continue;
                }
                let mut gens = h.clone();
                gens.insert(x);
                let k = self.closure(&gens);
                if seen.insert(k.clone()) {
                    queue.push_back(k);
                }
            }
        }
        seen
    }

    pub fn is_normal_in(&self, a: &Set, b: &Set) -> bool {
        a.is_subset(b)
            && a.iter().all(|&x| {
                b.iter()
                    .all(|&y| a.contains(&self.mul(self.mul(self.inv(y), x), y)))
            })
    }

    /// A chain `h = H_0 ⊴ H_1 ⊴ … ⊴ k` through members of `subgroups`.
    pub fn is_subnormal(&self, h: &Set, k: &Set, subgroups: &[Set]) -> bool {
        if !h.is_subset(k) {
            return false;
        }
        let inside: Vec<&Set> = subgroups
            .iter()
            .filter(|s| h.is_subset(s) && s.is_subset(k))
            .collect();
        let mut reached: BTreeSet<&Set> = [h].into();
        let mut queue: VecDeque<&Set> = [h].into();
        while let Some(a) = queue.pop_front() {
            if a == k {
                return true;
            }
            for &b in &inside {
                if !reached.contains(b) && self.is_normal_in(a, b) {
                    reached.insert(b);
                    queue.push_back(b);
                }
            }
        }
        false
    }

    pub fn element_order(&self, a: u32) -> usize {
        let (mut x, mut k) = (a, 1);
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_p_group(&self, s: &Set, p: u32) -> bool {
        let mut n = s.len();
        while n.is_multiple_of(p as usize) {
            n /= p as usize;
        }
        n == 1
    }

    /// The `p`-subgroups of `k` of the largest order.
    pub fn sylows(&self, k: &Set, p: u32, subgroups: &[Set]) -> Vec<Set> {
        let ps: Vec<&Set> = subgroups
            .iter()
            .filter(|s| s.is_subset(k) && self.is_p_group(s, p))
            .collect();
        let top = ps.iter().map(|s| s.len()).max().unwrap_or(1);
        ps.into_iter().filter(|s| s.len() == top).cloned().collect()
    }

    /// The largest normal `p`-subgroup of `k`.
    pub fn op(&self, k: &Set, p: u32, subgroups: &[Set]) -> Set {
        subgroups
            .iter()
            .filter(|s| self.is_p_group(s, p) && self.is_normal_in(s, k))
            .max_by_key(|s| s.len())
            .cloned()
            .unwrap_or_else(|| [0].into())
    }

    pub fn centralizer(&self, k: &Set, x: &Set) -> Set {
        k.iter()
            .copied()
            .filter(|&g| x.iter().all(|&y| self.mul(g, y) == self.mul(y, g)))
            .collect()
    }
}

pub fn set_of(h: &Subgroup) -> Set {
    h.elements().iter().copied().collect()
}

pub fn primes_dividing(mut n: usize) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while n > 1 {
        if n.is_multiple_of(d) {
            out.push(d as u32);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    out
}

fn perm(s: &str, degree: usize) -> Perm {
    let cycles: Vec<Vec<u32>> = s
        .split(')')
        .filter(|c| !c.trim().is_empty())
        .map(|c| {
            c.trim_start_matches('(')
                .split_whitespace()
                .map(|n| n.parse().unwrap())
                .collect()
        })
        .collect();
    Perm::from_cycles(degree, &cycles).unwrap()
}

pub fn group(degree: usize, gens: &[&str]) -> FiniteGroup {
    let gens: Vec<Perm> = gens.iter().map(|g| perm(g, degree)).collect();
    FiniteGroup::generate(&gens, Limits::default()).unwrap()
}

/// The subgroup `h` of `g` as a group in its own right.
pub fn as_group(g: &FiniteGroup, h: &Subgroup) -> FiniteGroup {
    let mut gens: Vec<Perm> = g
        .generating_set(h)
        .into_iter()
        .map(|e| g.perm(e).clone())
        .collect();
    if gens.is_empty() {
        gens.push(Perm::identity(g.degree()));
    }
    FiniteGroup::generate(&gens, Limits::default()).unwrap()
}

/// Groups of order at most 24: every subgroup of `S5` and of `GL(2,3)` of
/// that order (distinct as element sets), plus a list of groups that do
/// not embed in either.
pub fn catalogue() -> Vec<(String, FiniteGroup)> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for (name, big) in [
        ("S5", group(5, &["(0 1 2 3 4)", "(0 1)"])),
        (
            "GL(2,3)",
            group(
                8,
                &["(2 3 4)(5 7 6)", "(0 2 1 5)(3 4 7 6)", "(2 5)(3 6)(4 7)"],
            ),
        ),
    ] {
        for (i, h) in big
            .all_subgroups(&big.whole())
            .unwrap()
            .into_iter()
            .enumerate()
        {
            if h.order() > 24 {
                continue;
            }
            let perms: Vec<Perm> = h.elements().iter().map(|&e| big.perm(e).clone()).collect();
            if seen.insert(perms) {
                out.push((
                    format!("{name} subgroup {i} of order {}", h.order()),
                    as_group(&big, &h),
                ));
            }
        }
    }
    let extra: &[(&str, usize, &[&str])] = &[
        ("C2^3", 6, &["(0 1)", "(2 3)", "(4 5)"]),
        ("C3^2", 6, &["(0 1 2)", "(3 4 5)"]),
        ("C4xC2", 6, &["(0 1 2 3)", "(4 5)"]),
        ("C6xC2", 7, &["(0 1 2)(3 4)", "(5 6)"]),
        (
            "C2xQ8",
            10,
            &["(0 2 1 5)(3 4 7 6)", "(0 3 1 7)(4 2 6 5)", "(8 9)"],
        ),
        ("C2xA4", 6, &["(0 1 2)", "(0 1)(2 3)", "(4 5)"]),
        ("C3xS3", 6, &["(0 1 2)", "(3 4 5)", "(3 4)"]),
        ("C3^2:C2", 6, &["(0 1 2)", "(3 4 5)", "(0 1)(3 4)"]),
        ("C7", 7, &["(0 1 2 3 4 5 6)"]),
        ("D14", 7, &["(0 1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"]),
        ("C7:C3", 7, &["(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"]),
        ("C9", 9, &["(0 1 2 3 4 5 6 7 8)"]),
        ("C11", 11, &["(0 1 2 3 4 5 6 7 8 9 10)"]),
        ("C13", 13, &["(0 1 2 3 4 5 6 7 8 9 10 11 12)"]),
        ("D16", 8, &["(0 1 2 3 4 5 6 7)", "(1 7)(2 6)(3 5)"]),
        ("C2xD8", 6, &["(0 1 2 3)", "(0 2)", "(4 5)"]),
        ("C4xC4", 8, &["(0 1 2 3)", "(4 5 6 7)"]),
        (
            "D24",
            12,
            &["(0 1 2 3 4 5 6 7 8 9 10 11)", "(1 11)(2 10)(3 9)(4 8)(5 7)"],
        ),
        ("C2xC2xS3", 7, &["(0 1 2)", "(0 1)", "(3 4)", "(5 6)"]),
        ("C5:C4", 5, &["(0 1 2 3 4)", "(1 2 4 3)"]),
    ];
    for (name, degree, gens) in extra {
        out.push((name.to_string(), group(*degree, gens)));
    }
    out
}

/// Checks subgroup enumeration, subnormality, Sylow subgroups and `O_p`
/// of `g` against the brute-force versions. Returns the number of
/// comparisons made.
pub fn compare(name: &str, g: &FiniteGroup) -> usize {
    let t = Table::of(g);
    let lib: Vec<_> = g.all_subgroups(&g.whole()).unwrap();
    let lib_sets: BTreeSet<Set> = lib.iter().map(set_of).collect();
    assert_eq!(lib_sets.len(), lib.len(), "{name}: duplicate subgroups");
    let brute = t.subgroups_by_closure();
    assert_eq!(lib_sets, brute, "{name}: subgroup lists differ");
    if g.order() <= 12 {
        assert_eq!(
            brute,
            t.subgroups_by_subsets(),
            "{name}: closure oracle disagrees with subset scan"
        );
    }
    let subs: Vec<Set> = brute.into_iter().collect();
    let mut checks = 1;
    for (h, hs) in lib.iter().zip(lib.iter().map(set_of)) {
        for (k, ks) in lib.iter().zip(lib.iter().map(set_of)) {
            if !hs.is_subset(&ks) {
                continue;
            }
            assert_eq!(
                g.is_subnormal(h, k),
                t.is_subnormal(&hs, &ks, &subs),
                "{name}: subnormality of order {} in order {}",
                h.order(),
                k.order()
            );
            checks += 1;
        }
        for p in primes_dividing(g.order()) {
            let sylows = t.sylows(&hs, p, &subs);
            assert_eq!(sylows[0].len(), p_part(h.order(), p), "{name}: Sylow order");
            assert!(
                sylows.contains(&set_of(&g.sylow(h, p))),
                "{name}: sylow() is not a Sylow subgroup"
            );
            for (c, cs) in lib.iter().zip(lib.iter().map(set_of)) {
                assert_eq!(
                    g.is_sylow(c, h, p),
                    sylows.contains(&cs),
                    "{name}: is_sylow"
                );
            }
            let op = t.op(&hs, p, &subs);
            let meet = sylows
                .iter()
                .fold(hs.clone(), |acc, s| acc.intersection(s).copied().collect());
            assert_eq!(op, meet, "{name}: the two O_p oracles disagree");
            assert_eq!(set_of(&g.core_op(h, p)), op, "{name}: O_p");
            let char_p = t.centralizer(&hs, &op).is_subset(&op);
            assert_eq!(
                g.is_characteristic_p(h, p),
                char_p,
                "{name}: characteristic p"
            );
            checks += 4;
        }
    }
    checks
}
