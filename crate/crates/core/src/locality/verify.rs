use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::Locality;
use crate::fusion::FusionSystem;
use crate::groups::{Elem, Subgroup};

/// Words up to this many candidates are enumerated outright; beyond it
/// the check walks domain words prefix by prefix.
const EXHAUSTIVE_WORDS: usize = 300_000;

/// Which words the partial-group axioms are checked on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WordFragment {
    /// Words of length at most 3.
    #[default]
    Standard,
    /// Words of length at most 4 when `|L| ≤ 30`, otherwise as `Standard`.
    Full,
}

impl WordFragment {
    pub fn max_len(self, size: usize) -> usize {
        match self {
            WordFragment::Full if size <= 30 => 4,
            _ => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub cases: u64,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.witness.is_none())
    }

    pub fn failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.witness.is_some())
    }

    pub fn cases(&self) -> u64 {
        self.checks.iter().map(|c| c.cases).sum()
    }

    fn push(&mut self, axiom: &'static str, cases: u64, witness: Option<String>) {
        self.checks.push(AxiomCheck {
            axiom,
            cases,
            witness,
        });
    }

    fn extend(&mut self, other: AxiomReport) {
        self.checks.extend(other.checks);
    }
}

impl Locality {
    fn show(&self, word: &[Elem]) -> String {
        let parts: Vec<String> = word
            .iter()
            .map(|&f| format!("{}", self.group().perm(f)))
            .collect();
        format!("[{}]", parts.join(", "))
    }

    /// Subword closure, splicing and inversion for one word of `D`.
    fn word_axioms(&self, w: &[Elem]) -> Option<String> {
        let n = w.len();
        for i in 0..=n {
            for j in i..=n {
                if !self.in_domain(&w[i..j]) {
                    return Some(format!(
                        "subword {} of {} not in D",
                        self.show(&w[i..j]),
                        self.show(w)
                    ));
                }
                let mut spliced = Vec::with_capacity(n + 1);
                spliced.extend_from_slice(&w[..i]);
                spliced.push(self.product(&w[i..j]));
                spliced.extend_from_slice(&w[j..]);
                if !self.in_domain(&spliced) || self.product(&spliced) != self.product(w) {
                    return Some(format!("splicing {} at {i}..{j} leaves D", self.show(w)));
                }
            }
        }
        let mut inv: Vec<Elem> = w.iter().rev().map(|&f| self.inv(f)).collect();
        inv.extend_from_slice(w);
        if !self.in_domain(&inv) || self.product(&inv) != self.unit() {
            return Some(format!("inverse word of {} fails", self.show(w)));
        }
        None
    }

    /// Partial-group axioms on the checked word fragment.
    pub fn verify_partial_group(&self, fragment: WordFragment) -> AxiomReport {
        let mut report = AxiomReport::default();
        let elems = self.element_list();
        let witness = elems
            .iter()
            .find(|&&f| !self.in_domain(&[f]) || self.product(&[f]) != f)
            .map(|&f| format!("letter {} is not a word of D", self.group().perm(f)));
        report.push("letters", elems.len() as u64, witness);
        let witness = (!self.in_domain(&[]) || self.product(&[]) != self.unit())
            .then(|| String::from("empty word"));
        report.push("unit", 1, witness);

        let max_len = self.fragment_len(fragment);
        let mut cases = 0u64;
        let mut witness = None;
        let exhaustive = elems
            .len()
            .checked_pow(max_len as u32)
            .is_some_and(|c| c <= EXHAUSTIVE_WORDS);
        let mut word = Vec::with_capacity(max_len);
        self.walk_words(&elems, max_len, exhaustive, &mut word, &mut |w| {
            cases += 1;
            witness = self.word_axioms(w);
            witness.is_none()
        });
        report.push("words", cases, witness);
        report
    }

    fn fragment_len(&self, fragment: WordFragment) -> usize {
        fragment.max_len(self.size())
    }

    /// Calls `visit` on every word of `D` of length `1..=max_len`, stopping
    /// when it returns false. With `exhaustive`, every word over `L` is
    /// tested for membership; otherwise only extensions of domain words.
    fn walk_words(
        &self,
        elems: &[Elem],
        max_len: usize,
        exhaustive: bool,
        word: &mut Vec<Elem>,
        visit: &mut dyn FnMut(&[Elem]) -> bool,
    ) -> bool {
        if word.len() == max_len {
            return true;
        }
        for &f in elems {
            word.push(f);
            let inside = self.in_domain(word);
            let mut go_on = !inside || visit(word);
            if go_on && (inside || exhaustive) {
                go_on = self.walk_words(elems, max_len, exhaustive, word, visit);
            }
            word.pop();
            if !go_on {
                return false;
            }
        }
        true
    }

    /// Locality axioms: partial group, `Δ` closed under overgroups and
    /// conjugation, `S_f ∈ Δ` for `f ∈ L`, `D` equal to the `Δ`-words
    /// (checked against chain search on words of length ≤ 2), `S` a maximal
    /// `p`-subgroup, and `N_L(P)` a subgroup for `P ∈ Δ`.
    pub fn verify_locality(&self, fragment: WordFragment) -> AxiomReport {
        let mut report = self.verify_partial_group(fragment);
        let g = &**self.group();
        let lattice = self.lattice();
        let objects = self.objects();

        let mut witness = None;
        for p in &objects {
            if let Some(q) = lattice
                .subgroups()
                .iter()
                .find(|q| p.is_subgroup_of(q) && !self.is_object(q))
            {
                witness = Some(format!(
                    "overgroup of order {} of an object of order {}",
                    q.order(),
                    p.order()
                ));
                break;
            }
        }
        report.push(
            "objects closed under overgroups",
            objects.len() as u64,
            witness,
        );

        let elems = self.element_list();
        let mut witness = None;
        'outer: for p in &objects {
            for &f in &elems {
                if p.is_subgroup_of(self.s_f(f)) && !self.is_object(&g.conjugate_subgroup(p, f)) {
                    witness = Some(format!(
                        "{} conjugates an object of order {} out",
                        g.perm(f),
                        p.order()
                    ));
                    break 'outer;
                }
            }
        }
        report.push(
            "objects closed under conjugation",
            (objects.len() * elems.len()) as u64,
            witness,
        );

        let witness = self
            .malformed_s_f()
            .map(|f| format!("S_f for {} is not a subgroup", g.perm(f)));
        report.push("S_f subgroups", elems.len() as u64, witness);

        let witness = elems
            .iter()
            .find(|&&f| !self.is_object(self.s_f(f)))
            .map(|&f| format!("S_f for {} is not an object", g.perm(f)));
        report.push("S_f objects", elems.len() as u64, witness);

        let mut cases = 0u64;
        let mut witness = None;
        'words: for &a in &elems {
            for len in 1..=2 {
                let iter: Vec<Vec<Elem>> = if len == 1 {
                    alloc::vec![alloc::vec![a]]
                } else {
                    elems.iter().map(|&b| alloc::vec![a, b]).collect()
                };
                for w in iter {
                    cases += 1;
                    if self.in_domain(&w) != self.has_object_chain(&w, &objects) {
                        witness = Some(format!(
                            "membership of {} disagrees with object chains",
                            self.show(&w)
                        ));
                        break 'words;
                    }
                }
            }
        }
        report.push("objectivity", cases, witness);

        let base = self.base();
        let witness = if !self.is_object(base) {
            Some(String::from("the base is not an object"))
        } else if !base.elements().iter().all(|&s| self.contains(s)) {
            Some(String::from("the base is not contained in L"))
        } else {
            let n = self.normalizer(base);
            match g.subgroup_from_elements(n.elements().iter().copied()) {
                Err(_) => Some(String::from("N_L(S) is not a subgroup")),
                Ok(n) if !g.is_sylow(base, &n, self.p()) => Some(format!(
                    "the base of order {} is not Sylow in N_L(S) of order {}",
                    base.order(),
                    n.order()
                )),
                Ok(_) => None,
            }
        };
        report.push("maximal p-subgroup", 1, witness);

        let witness = objects.iter().find_map(|p| {
            let n = self.normalizer(p);
            g.subgroup_from_elements(n.elements().iter().copied())
                .is_err()
                .then(|| format!("N_L(P) for P of order {} is not a subgroup", p.order()))
        });
        report.push("normalizers are subgroups", objects.len() as u64, witness);
        report
    }

    /// Independent membership test: some object `P_0` whose successive
    /// conjugates along `w` are all objects.
    fn has_object_chain(&self, w: &[Elem], objects: &[Subgroup]) -> bool {
        if !w.iter().all(|&f| self.contains(f)) {
            return false;
        }
        let g = &**self.group();
        objects.iter().any(|p0| {
            let mut p = p0.clone();
            w.iter().all(|&f| {
                p = g.conjugate_subgroup(&p, f);
                self.is_object(&p)
            })
        })
    }

    /// Locality axioms plus `F_S(L) = F`, `Δ = F^s` and `N_L(P)` of
    /// characteristic `p` for every object `P`.
    pub fn verify_subcentric_locality(
        &self,
        f: &FusionSystem,
        fragment: WordFragment,
    ) -> AxiomReport {
        let mut report = AxiomReport::default();
        report.extend(self.verify_locality(fragment));
        let g = &**self.group();

        let witness = match self.fusion() {
            Ok(fl) if fl == *f => None,
            Ok(_) => Some(String::from("F_S(L) differs from F")),
            Err(e) => Some(format!("F_S(L) could not be formed: {e}")),
        };
        report.push("fusion system", f.morphism_count() as u64, witness);

        let witness = match f.subcentric_set() {
            Ok(ids) => {
                let fs: Vec<Subgroup> = ids.into_iter().map(|i| f.subgroup(i).clone()).collect();
                let objects = self.objects();
                if let Some(p) = fs.iter().find(|p| !objects.contains(p)) {
                    Some(format!(
                        "subcentric subgroup of order {} is not an object",
                        p.order()
                    ))
                } else {
                    objects
                        .iter()
                        .find(|p| !fs.contains(p))
                        .map(|p| format!("object of order {} is not subcentric", p.order()))
                }
            }
            Err(e) => Some(format!("{e}")),
        };
        report.push(
            "objects are the subcentric subgroups",
            self.objects().len() as u64,
            witness,
        );

        let objects = self.objects();
        let witness = objects.iter().find_map(|p| {
            let n = self.normalizer(p);
            let n = g
                .subgroup_from_elements(n.elements().iter().copied())
                .ok()?;
            (!g.is_characteristic_p(&n, self.p())).then(|| {
                format!(
                    "N_L(P) of order {} for P of order {} is not of characteristic p",
                    n.order(),
                    p.order()
                )
            })
        });
        report.push(
            "normalizers of characteristic p",
            objects.len() as u64,
            witness,
        );
        report
    }
}
