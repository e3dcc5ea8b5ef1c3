//! Permutation groups backed by a deterministic Schreier–Sims stabilizer chain.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap on explicit element listings.
pub const ELEMENT_LISTING_BOUND: usize = 100_000;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// `transversal[x] = Some(u)` with `u(base) = x` for `x` in the orbit.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        Self { base, gens: Vec::new(), transversal, orbit: vec![base] }
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.base] = Some(Permutation::identity(degree));
        self.orbit = vec![self.base];
        let mut k = 0;
        while k < self.orbit.len() {
            let x = self.orbit[k];
            for s in &self.gens {
                let y = s.apply(x);
                if self.transversal[y].is_none() {
                    let u = s.compose(self.transversal[x].as_ref().unwrap());
                    self.transversal[y] = Some(u);
                    self.orbit.push(y);
                }
            }
            k += 1;
        }
    }
}

/// Base and strong generating set.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    fn build(degree: usize, generators: &[Permutation], base_prefix: &[usize]) -> Self {
        let mut chain = StabChain { degree, levels: Vec::new() };
        for &b in base_prefix {
            chain.levels.push(Level::new(b, degree));
        }
        let gens: Vec<Permutation> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            return chain;
        }
        for g in &gens {
            if chain.levels.iter().all(|l| g.apply(l.base) == l.base) {
                let b = (0..degree).find(|&x| g.apply(x) != x).unwrap();
                chain.levels.push(Level::new(b, degree));
            }
        }
        for i in 0..chain.levels.len() {
            let fixed: Vec<usize> = chain.levels[..i].iter().map(|l| l.base).collect();
            chain.levels[i].gens =
                gens.iter().filter(|g| fixed.iter().all(|&b| g.apply(b) == b)).cloned().collect();
            chain.levels[i].rebuild_orbit(degree);
        }

        let mut i = chain.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let lvl = i as usize;
            let orbit = chain.levels[lvl].orbit.clone();
            let gens = chain.levels[lvl].gens.clone();
            for &x in &orbit {
                for s in &gens {
                    let ux = chain.levels[lvl].transversal[x].as_ref().unwrap();
                    let usx = chain.levels[lvl].transversal[s.apply(x)].as_ref().unwrap();
                    let schreier = usx.inverse().compose(s).compose(ux);
                    let (residue, depth) = chain.sift(&schreier, lvl + 1);
                    if depth == chain.levels.len() && residue.is_identity() {
                        continue;
                    }
                    if depth == chain.levels.len() {
                        let b = (0..degree).find(|&y| residue.apply(y) != y).unwrap();
                        chain.levels.push(Level::new(b, degree));
                    }
                    for j in lvl + 1..=depth {
                        chain.levels[j].gens.push(residue.clone());
                        chain.levels[j].rebuild_orbit(degree);
                    }
                    i = depth as isize;
                    continue 'outer;
                }
            }
            i -= 1;
        }
        chain
    }

    /// Sifts `g` through levels `start..`; returns the residue and the level
    /// at which sifting stopped (`levels.len()` if it went all the way).
    fn sift(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (j, level) in self.levels.iter().enumerate().skip(start) {
            let y = h.apply(level.base);
            match &level.transversal[y] {
                Some(u) => h = u.inverse().compose(&h),
                None => return (h, j),
            }
        }
        (h, self.levels.len())
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (r, _) = self.sift(g, 0);
        r.is_identity()
    }

    /// Element from a choice of one orbit point per level.
    fn element_from_choices(&self, choices: &[usize]) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for (level, &k) in self.levels.iter().zip(choices) {
            let x = level.orbit[k];
            g = g.compose(level.transversal[x].as_ref().unwrap());
        }
        g
    }

    /// Depth-first walk over `u_0 ∘ u_1 ∘ ... ∘ u_{k-1}`. `prune(level, prefix)`
    /// may reject a partial product; the prefix already determines the image
    /// of `base[level]`.
    fn walk(&self, prune: &mut dyn FnMut(usize, &Permutation) -> bool, out: &mut dyn FnMut(Permutation)) {
        fn rec(
            chain: &StabChain,
            level: usize,
            prefix: Permutation,
            prune: &mut dyn FnMut(usize, &Permutation) -> bool,
            out: &mut dyn FnMut(Permutation),
        ) {
            if level == chain.levels.len() {
                out(prefix);
                return;
            }
            let l = &chain.levels[level];
            for &x in &l.orbit {
                let next = prefix.compose(l.transversal[x].as_ref().unwrap());
                if prune(level, &next) {
                    continue;
                }
                rec(chain, level + 1, next, prune, out);
            }
        }
        rec(self, 0, Permutation::identity(self.degree), prune, out);
    }
}

/// A finite permutation group given by generators. The stabilizer chain is
/// built on first use and cached; after that every query is read-only.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidInput(format!(
                "generator of degree {} in a group of degree {degree}",
                g.degree()
            )));
        }
        Ok(Self { degree, generators, chain: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> Self {
        Self { degree, generators: Vec::new(), chain: OnceLock::new() }
    }

    /// Symmetric group on `n` points.
    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[&[0, 1]]).unwrap());
            let cyc: Vec<u32> = (0..n as u32).collect();
            gens.push(Permutation::from_cycles(n, &[&cyc]).unwrap());
        }
        Self::new(n, gens).unwrap()
    }

    /// Cyclic group generated by an `n`-cycle on `n` points.
    pub fn cyclic(n: usize) -> Self {
        let cyc: Vec<u32> = (0..n as u32).collect();
        Self::new(n, vec![Permutation::from_cycles(n, &[&cyc]).unwrap()]).unwrap()
    }

    /// Same group, with a stabilizer chain whose base starts at `prefix`.
    pub fn with_base_prefix(&self, prefix: &[usize]) -> Self {
        let g = Self::new(self.degree, self.generators.clone()).unwrap();
        let _ = g.chain.set(StabChain::build(self.degree, &self.generators, prefix));
        g
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| StabChain::build(self.degree, &self.generators, &[]))
    }

    /// Exact group order.
    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity)
    }

    /// All elements, in a deterministic order. Fails above `bound`.
    pub fn elements_bounded(&self, bound: usize) -> Result<Vec<Permutation>> {
        if self.order() > bound as u128 {
            return Err(Error::TooLarge { what: "group order", bound });
        }
        let mut out = Vec::with_capacity(self.order() as usize);
        self.chain().walk(&mut |_, _| false, &mut |g| out.push(g));
        Ok(out)
    }

    pub fn elements(&self) -> Result<Vec<Permutation>> {
        self.elements_bounded(ELEMENT_LISTING_BOUND)
    }

    /// Uniformly random element, driven by the caller's index source.
    pub fn element_from_indices(&self, mut next: impl FnMut(usize) -> usize) -> Permutation {
        let chain = self.chain();
        let choices: Vec<usize> = chain.levels.iter().map(|l| next(l.orbit.len())).collect();
        chain.element_from_choices(&choices)
    }

    /// Least common multiple of element orders.
    pub fn exponent_bounded(&self, bound: usize) -> Result<u64> {
        Ok(self.elements_bounded(bound)?.iter().fold(1u64, |acc, g| acc.lcm(&g.order())))
    }

    pub fn exponent(&self) -> Result<u64> {
        self.exponent_bounded(ELEMENT_LISTING_BOUND)
    }

    /// Orbit of a point under the generators, sorted.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = BTreeSet::from([x]);
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            for g in &self.generators {
                let z = g.apply(y);
                if seen.insert(z) {
                    stack.push(z);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn stabilizes_set(&self, set: &[usize]) -> bool {
        let s: BTreeSet<usize> = set.iter().copied().collect();
        self.generators.iter().all(|g| s.iter().all(|&x| s.contains(&g.apply(x))))
    }

    /// Number of orbits of the group on a set it stabilizes.
    pub fn orbit_count(&self, set: &[usize]) -> Result<usize> {
        if set.iter().any(|&x| x >= self.degree) || !self.stabilizes_set(set) {
            return Err(Error::NotStabilized);
        }
        let s: BTreeSet<usize> = set.iter().copied().collect();
        let mut seen = BTreeSet::new();
        let mut count = 0;
        for &x in &s {
            if seen.contains(&x) {
                continue;
            }
            count += 1;
            seen.extend(self.orbit(x));
        }
        Ok(count)
    }

    /// Subgroup generated by `elements`, keeping only the generators needed.
    pub fn generated_by(degree: usize, elements: impl IntoIterator<Item = Permutation>) -> Self {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = PermGroup::trivial(degree);
        for g in elements {
            if g.is_identity() || current.contains(&g) {
                continue;
            }
            gens.push(g);
            current = PermGroup::new(degree, gens.clone()).unwrap();
        }
        current
    }

    /// `{g ∈ G : g(S) = S}` by backtracking over the stabilizer chain, with a
    /// base that starts at the points of `S`.
    pub fn setwise_stabilizer(&self, set: &[usize]) -> Result<PermGroup> {
        if set.iter().any(|&x| x >= self.degree) {
            return Err(Error::InvalidInput("point outside the group's domain".into()));
        }
        let mut in_set = vec![false; self.degree];
        for &x in set {
            in_set[x] = true;
        }
        let based = self.with_base_prefix(set);
        let chain = based.chain();
        let base = chain.base();
        let mut elements = Vec::new();
        chain.walk(
            &mut |level, prefix| {
                let b = base[level];
                in_set[b] != in_set[prefix.apply(b)]
            },
            &mut |g| {
                if set.iter().all(|&x| in_set[g.apply(x)]) {
                    elements.push(g)
                }
            },
        );
        Ok(Self::generated_by(self.degree, elements))
    }

    /// Normal closure of `elements` in `self`.
    pub fn normal_closure(&self, elements: &[Permutation]) -> PermGroup {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = PermGroup::trivial(self.degree);
        let mut queue: Vec<Permutation> = elements.to_vec();
        while let Some(g) = queue.pop() {
            if g.is_identity() || current.contains(&g) {
                continue;
            }
            gens.push(g.clone());
            current = PermGroup::new(self.degree, gens.clone()).unwrap();
            for x in &self.generators {
                queue.push(x.conjugate(&g));
            }
        }
        current
    }

    /// Commutator subgroup `[G, G]`.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = a.inverse().compose(&b.inverse()).compose(a).compose(b);
                comms.push(c);
            }
        }
        self.normal_closure(&comms)
    }

    pub fn is_solvable(&self) -> bool {
        let mut g = self.clone();
        loop {
            if g.order() == 1 {
                return true;
            }
            let d = g.derived_subgroup();
            if d.order() == g.order() {
                return false;
            }
            g = d;
        }
    }

    /// Generator images, sorted, for deterministic ordering of groups.
    pub fn sort_key(&self) -> (u128, Vec<Vec<u32>>) {
        let mut imgs: Vec<Vec<u32>> = self.generators.iter().map(|g| g.images().to_vec()).collect();
        imgs.sort();
        (self.order(), imgs)
    }
}
