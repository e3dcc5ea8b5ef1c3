//! Subgroups of small groups through an explicit multiplication table.
//!
//! Conjugacy classes of subgroups of a solvable group are found by cyclic
//! extension: every subgroup `K` of a solvable group has a normal subgroup
//! `H` of prime index, and `K = <H, g>` for any `g ∈ K \ H`. Starting from
//! the trivial group and extending one class representative at a time
//! therefore reaches a conjugate of every subgroup.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// Default cap on the group order for subgroup enumeration.
pub const SUBGROUP_ENUMERATION_BOUND: usize = 10_000;

/// Fixed-size bitset over element indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ElementSet(Vec<u64>);

impl ElementSet {
    fn empty(n: usize) -> Self {
        Self(vec![0; n.div_ceil(64)])
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| k * 64 + b)
        })
    }
}

/// The elements of a group with full multiplication and inverse tables.
pub struct ElementTable {
    elements: Vec<Permutation>,
    index: HashMap<Vec<u32>, usize>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
    /// conjugacy class id of each element
    class_of: Vec<u32>,
    class_count: usize,
}

impl ElementTable {
    pub fn new(group: &PermGroup, bound: usize) -> Result<Self> {
        let elements = group.elements_bounded(bound)?;
        let n = elements.len();
        let index: HashMap<Vec<u32>, usize> =
            elements.iter().enumerate().map(|(i, g)| (g.images().to_vec(), i)).collect();
        let mut mul = vec![0u32; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                mul[i * n + j] = index[a.compose(b).images()] as u32;
            }
        }
        let identity = elements.iter().position(Permutation::is_identity).unwrap();
        let inv: Vec<u32> = (0..n)
            .map(|i| (0..n).find(|&j| mul[i * n + j] as usize == identity).unwrap() as u32)
            .collect();
        let mut table =
            Self { elements, index, mul, inv, identity, class_of: vec![u32::MAX; n], class_count: 0 };
        table.compute_classes();
        Ok(table)
    }

    fn compute_classes(&mut self) {
        let n = self.len();
        let mut next = 0u32;
        for g in 0..n {
            if self.class_of[g] != u32::MAX {
                continue;
            }
            for x in 0..n {
                let c = self.conj(x, g);
                self.class_of[c] = next;
            }
            next += 1;
        }
        self.class_count = next as usize;
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g.images()).copied()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `x g x⁻¹`
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(x, g), self.inv(x))
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    /// Closure of a generating set as an element bitset.
    pub fn closure(&self, gens: &[usize]) -> ElementSet {
        let mut set = ElementSet::empty(self.len());
        set.insert(self.identity);
        let mut list = vec![self.identity];
        let mut k = 0;
        while k < list.len() {
            let a = list[k];
            for &g in gens {
                let b = self.mul(a, g);
                if !set.contains(b) {
                    set.insert(b);
                    list.push(b);
                }
            }
            k += 1;
        }
        set
    }

    fn class_profile(&self, set: &ElementSet) -> Vec<u32> {
        let mut counts = vec![0u32; self.class_count];
        for i in set.iter() {
            counts[self.class_of[i] as usize] += 1;
        }
        counts
    }

    /// Whether some `x` conjugates the subgroup generated by `gens_h` (of the
    /// same order as `k`) into `k`.
    pub fn conjugate_into(&self, gens_h: &[usize], k: &ElementSet) -> Option<usize> {
        (0..self.len()).find(|&x| gens_h.iter().all(|&h| k.contains(self.conj(x, h))))
    }

    /// The group acting on its own element indices by left multiplication.
    pub fn regular_representation(&self) -> PermGroup {
        let n = self.len();
        let perms = (0..n)
            .filter(|&g| g != self.identity)
            .map(|g| Permutation::from_images((0..n).map(|x| self.mul(g, x) as u32).collect()).unwrap());
        PermGroup::generated_by(n, perms)
    }

    /// Every cyclic subgroup exactly once, each generated by its first
    /// generating element.
    pub fn cyclic_subgroups(&self) -> Vec<TableSubgroup> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for g in 0..self.len() {
            let elements = self.closure(&[g]);
            if seen.insert(elements.clone()) {
                out.push(TableSubgroup { generators: vec![g], elements });
            }
        }
        out
    }

    /// A table subgroup as a permutation group on the original points.
    pub fn subgroup(&self, sub: &TableSubgroup) -> PermGroup {
        self.to_group(self.elements[0].degree(), &sub.generators)
    }

    fn to_group(&self, degree: usize, gens: &[usize]) -> PermGroup {
        let mut perms: Vec<Permutation> = gens.iter().map(|&g| self.elements[g].clone()).collect();
        perms.sort();
        PermGroup::new(degree, perms).unwrap()
    }
}

/// A subgroup of the tabulated group.
#[derive(Clone, Debug)]
pub struct TableSubgroup {
    pub generators: Vec<usize>,
    pub elements: ElementSet,
}

impl TableSubgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// One representative per conjugacy class of subgroups, as table subgroups.
pub fn subgroup_classes(table: &ElementTable) -> Vec<TableSubgroup> {
    let n = table.len();
    let mut reps: Vec<TableSubgroup> = vec![TableSubgroup {
        generators: Vec::new(),
        elements: table.closure(&[]),
    }];
    let mut buckets: HashMap<(usize, Vec<u32>), Vec<usize>> = HashMap::new();
    buckets.entry((1, table.class_profile(&reps[0].elements))).or_default().push(0);
    let mut seen: HashSet<ElementSet> = HashSet::new();
    seen.insert(reps[0].elements.clone());

    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    while let Some(r) = queue.pop_front() {
        let h = reps[r].clone();
        let mut covered = h.elements.clone();
        for g in 0..n {
            if covered.contains(g) {
                continue;
            }
            if !h.generators.iter().all(|&x| h.elements.contains(table.conj(g, x))) {
                continue;
            }
            // smallest k with g^k ∈ H must be prime
            let mut k = 1;
            let mut p = g;
            while !h.elements.contains(p) {
                p = table.mul(p, g);
                k += 1;
            }
            if !is_prime(k) {
                continue;
            }
            let mut ext = h.elements.clone();
            let mut coset_rep = g;
            for _ in 1..k {
                for x in h.elements.iter() {
                    ext.insert(table.mul(x, coset_rep));
                }
                coset_rep = table.mul(coset_rep, g);
            }
            for x in ext.iter() {
                covered.insert(x);
            }
            if !seen.insert(ext.clone()) {
                continue;
            }
            let mut gens = h.generators.clone();
            gens.push(g);
            let key = (ext.len(), table.class_profile(&ext));
            let bucket = buckets.entry(key).or_default();
            if bucket.iter().any(|&j| table.conjugate_into(&gens, &reps[j].elements).is_some()) {
                continue;
            }
            bucket.push(reps.len());
            queue.push_back(reps.len());
            reps.push(TableSubgroup { generators: gens, elements: ext });
        }
    }
    reps
}

fn is_prime(k: usize) -> bool {
    k >= 2 && (2..k).take_while(|d| d * d <= k).all(|d| !k.is_multiple_of(d))
}

/// Representatives of the conjugacy classes of subgroups of a solvable
/// group, sorted by order and then by generator images.
pub fn subgroups_up_to_conjugacy(group: &PermGroup) -> Result<Vec<PermGroup>> {
    subgroups_up_to_conjugacy_bounded(group, SUBGROUP_ENUMERATION_BOUND)
}

pub fn subgroups_up_to_conjugacy_bounded(group: &PermGroup, bound: usize) -> Result<Vec<PermGroup>> {
    if group.order() > bound as u128 {
        return Err(Error::TooLarge { what: "group order for subgroup enumeration", bound });
    }
    if !group.is_solvable() {
        return Err(Error::NotSolvable);
    }
    let table = ElementTable::new(group, bound)?;
    let mut out: Vec<PermGroup> = subgroup_classes(&table)
        .iter()
        .map(|s| table.to_group(group.degree(), &s.generators))
        .collect();
    out.sort_by_cached_key(PermGroup::sort_key);
    Ok(out)
}

/// Whether two subgroups of `ambient` are conjugate in it.
pub fn are_conjugate(ambient: &ElementTable, a: &PermGroup, b: &PermGroup) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let gens_a: Vec<usize> = a.generators().iter().map(|g| ambient.index_of(g).unwrap()).collect();
    let gens_b: Vec<usize> = b.generators().iter().map(|g| ambient.index_of(g).unwrap()).collect();
    let elements_b = ambient.closure(&gens_b);
    ambient.conjugate_into(&gens_a, &elements_b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn s3_has_four_classes() {
        let s = subgroups_up_to_conjugacy(&PermGroup::symmetric(3)).unwrap();
        let orders: Vec<u128> = s.iter().map(PermGroup::order).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }

    #[test]
    fn c4_has_three_classes() {
        let s = subgroups_up_to_conjugacy(&PermGroup::cyclic(4)).unwrap();
        let orders: Vec<u128> = s.iter().map(PermGroup::order).collect();
        assert_eq!(orders, vec![1, 2, 4]);
    }

    #[test]
    fn s4_has_eleven_classes() {
        let s = subgroups_up_to_conjugacy(&PermGroup::symmetric(4)).unwrap();
        assert_eq!(s.len(), 11);
    }

    #[test]
    fn rejects_nonsolvable_and_large() {
        assert_eq!(subgroups_up_to_conjugacy(&PermGroup::symmetric(5)).unwrap_err(), Error::NotSolvable);
        assert!(matches!(
            subgroups_up_to_conjugacy(&PermGroup::symmetric(8)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn table_basics() {
        let g = PermGroup::new(4, vec![perm(4, &[&[0, 1, 2, 3]]), perm(4, &[&[0, 2]])]).unwrap();
        let t = ElementTable::new(&g, 100).unwrap();
        assert_eq!(t.len(), 8);
        // D4 has 5 conjugacy classes
        assert_eq!(t.class_count(), 5);
        for a in 0..8 {
            assert_eq!(t.mul(a, t.inv(a)), t.identity);
        }
    }
}
