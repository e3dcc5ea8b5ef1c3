//! Invariants and first cohomology of finite groups acting on lattices and
//! on finite modules `(Z/n)^r`.
//!
//! `H¹(G, M)` for a lattice `M` is computed from the sequence
//! `0 → M --n--> M → M/nM → 0`: whenever `n` annihilates `H¹(G, M)`,
//! `H¹(G, M) ≅ (M/nM)^G / image(M^G)`. We take `n = |G|`, which always
//! annihilates it. The group exponent does not (see `h1_with_modulus`).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::linalg::{
    kernel_basis, lattice_quotient, mod_kernel, mod_kernel_lattice, modulo, scaled_identity,
    subgroup_structure_mod, FinAbGroup, IntMatrix,
};
use crate::perm::{PermGroup, Permutation, ELEMENT_LISTING_BOUND};

/// A lattice `Z^rank` with a left action of a permutation group, given by
/// one unimodular matrix per group generator.
#[derive(Clone, Debug)]
pub struct LatticeGModule {
    rank: usize,
    group: PermGroup,
    action: Vec<IntMatrix>,
}

impl LatticeGModule {
    pub fn new(group: PermGroup, action: Vec<IntMatrix>, rank: usize) -> Result<Self> {
        if action.len() != group.generators().len() {
            return Err(Error::InvalidInput(format!(
                "{} action matrices for {} generators",
                action.len(),
                group.generators().len()
            )));
        }
        for m in &action {
            if m.nrows() != rank || m.ncols() != rank {
                return Err(Error::InvalidInput("action matrix has the wrong shape".into()));
            }
            if m.determinant().abs() != BigInt::one() {
                return Err(Error::InvalidInput("action matrix is not unimodular".into()));
            }
        }
        Ok(Self { rank, group, action })
    }

    /// Module with trivial action.
    pub fn trivial_action(group: PermGroup, rank: usize) -> Self {
        let action = vec![IntMatrix::identity(rank); group.generators().len()];
        Self { rank, group, action }
    }

    /// The permutation module `Z^degree` on which `G` permutes coordinates.
    pub fn permutation_module(group: PermGroup) -> Self {
        let n = group.degree();
        let action = group.generators().iter().map(permutation_matrix).collect();
        Self { rank: n, group, action }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn action(&self) -> &[IntMatrix] {
        &self.action
    }

    /// Same module in a new basis: every action matrix becomes `P⁻¹ A P`.
    pub fn change_basis(&self, p: &IntMatrix, p_inv: &IntMatrix) -> Self {
        let action = self.action.iter().map(|a| &(p_inv * a) * p).collect();
        Self { rank: self.rank, group: self.group.clone(), action }
    }

    /// Matrix of every group element, keyed by permutation images. Fails if
    /// the generator assignment does not extend to a homomorphism.
    pub fn element_matrices(&self) -> Result<HashMap<Permutation, IntMatrix>> {
        let order = self.group.order();
        if order > ELEMENT_LISTING_BOUND as u128 {
            return Err(Error::TooLarge { what: "group order", bound: ELEMENT_LISTING_BOUND });
        }
        let id = Permutation::identity(self.group.degree());
        let mut map = HashMap::from([(id.clone(), IntMatrix::identity(self.rank))]);
        let mut queue = vec![id];
        while let Some(g) = queue.pop() {
            let mg = map[&g].clone();
            for (s, ms) in self.group.generators().iter().zip(&self.action) {
                let h = s.compose(&g);
                let mh = ms * &mg;
                match map.get(&h) {
                    Some(existing) if *existing != mh => {
                        return Err(Error::InvalidInput(
                            "action matrices do not define a homomorphism".into(),
                        ))
                    }
                    Some(_) => {}
                    None => {
                        map.insert(h.clone(), mh);
                        queue.push(h);
                    }
                }
            }
        }
        Ok(map)
    }

    /// Vertical stack of `(A_g - I)` over the generators.
    fn augmentation_stack(&self) -> IntMatrix {
        let id = IntMatrix::identity(self.rank);
        self.action
            .iter()
            .fold(IntMatrix::zeros(0, self.rank), |acc, a| acc.vstack(&a.sub(&id)))
    }
}

pub fn permutation_matrix(g: &Permutation) -> IntMatrix {
    let n = g.degree();
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        m[(g.apply(i), i)] = BigInt::one();
    }
    m
}

/// Basis (as columns) of the invariant sublattice `M^G`.
pub fn invariants_lattice(m: &LatticeGModule) -> IntMatrix {
    kernel_basis(&m.augmentation_stack())
}

/// `(M/nM)^G / image(M^G)`. Equals `H¹(G, M)` whenever `n` annihilates it.
pub fn h1_with_modulus(m: &LatticeGModule, n: u64) -> FinAbGroup {
    if n == 1 || m.rank == 0 {
        return FinAbGroup::trivial();
    }
    let n = BigInt::from(n);
    let k = mod_kernel_lattice(&m.augmentation_stack(), &n);
    let mut sub = invariants_lattice(m).columns_vec();
    sub.extend(scaled_identity(m.rank, &n));
    lattice_quotient(&k, &sub, m.rank).expect("image of M^G lies in (M/nM)^G")
}

/// `H¹(G, M)` as an abstract group; always finite.
pub fn h1_lattice(m: &LatticeGModule) -> Result<FinAbGroup> {
    let order = m.group.order();
    if order > ELEMENT_LISTING_BOUND as u128 {
        return Err(Error::TooLarge { what: "group order", bound: ELEMENT_LISTING_BOUND });
    }
    Ok(h1_with_modulus(m, order as u64))
}

/// `H¹` of a cyclic group `<σ>` of order `k`: `ker(N) / im(σ - 1)` with
/// `N = 1 + σ + ... + σ^(k-1)`. Independent of [`h1_lattice`].
pub fn h1_cyclic_oracle(m: &LatticeGModule) -> Result<FinAbGroup> {
    let order = m.group.order();
    let elements = m.group.elements()?;
    let sigma = elements
        .iter()
        .find(|g| g.order() as u128 == order)
        .ok_or(Error::NotCyclic)?;
    let matrices = m.element_matrices()?;
    let s = &matrices[sigma];
    let mut norm = IntMatrix::zeros(m.rank, m.rank);
    let mut power = IntMatrix::identity(m.rank);
    for _ in 0..order {
        norm = norm.add(&power);
        power = s * &power;
    }
    let ker = kernel_basis(&norm).columns_vec();
    let image = s.sub(&IntMatrix::identity(m.rank)).columns_vec();
    Ok(lattice_quotient(&ker, &image, m.rank).expect("im(σ-1) lies in ker N"))
}

/// `(Z/n)^rank` with generator action matrices read mod `n`.
#[derive(Clone, Debug)]
pub struct FiniteGModule {
    modulus: u64,
    rank: usize,
    action: Vec<IntMatrix>,
}

impl FiniteGModule {
    pub fn new(modulus: u64, rank: usize, action: Vec<IntMatrix>) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidInput("modulus must be at least 2".into()));
        }
        let n = BigInt::from(modulus);
        for a in &action {
            if a.nrows() != rank || a.ncols() != rank {
                return Err(Error::InvalidInput("action matrix has the wrong shape".into()));
            }
            let det = modulo(&a.determinant(), &n);
            if num_integer::Integer::gcd(&det, &n) != BigInt::one() {
                return Err(Error::InvalidInput("action matrix is not invertible mod n".into()));
            }
        }
        Ok(Self { modulus, rank, action })
    }

    /// Rank-one module where generator `i` multiplies by `scalars[i]`.
    pub fn scalar(modulus: u64, scalars: &[i64]) -> Result<Self> {
        let action = scalars.iter().map(|&c| IntMatrix::diagonal(&[BigInt::from(c)])).collect();
        Self::new(modulus, 1, action)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn augmentation_stack(&self) -> IntMatrix {
        let id = IntMatrix::identity(self.rank);
        self.action
            .iter()
            .fold(IntMatrix::zeros(0, self.rank), |acc, a| acc.vstack(&a.sub(&id)))
    }

    /// Every invariant vector, by exhaustive enumeration. Fails above `10⁶` elements.
    pub fn invariant_elements_brute(&self) -> Result<Vec<Vec<u64>>> {
        const LIMIT: u128 = 1_000_000;
        let total = (self.modulus as u128).checked_pow(self.rank as u32).unwrap_or(u128::MAX);
        if total > LIMIT {
            return Err(Error::TooLarge { what: "module size for enumeration", bound: LIMIT as usize });
        }
        let n = self.modulus as i128;
        let mats: Vec<Vec<i128>> = self
            .action
            .iter()
            .map(|a| a.entries().iter().map(|x| i128::try_from(modulo(x, &BigInt::from(n))).unwrap()).collect())
            .collect();
        let mut out = Vec::new();
        let mut x = vec![0u64; self.rank];
        for mut code in 0..total as u64 {
            for xi in x.iter_mut() {
                *xi = code % self.modulus;
                code /= self.modulus;
            }
            let fixed = mats.iter().all(|a| {
                (0..self.rank).all(|i| {
                    let gi: i128 = (0..self.rank).map(|j| a[i * self.rank + j] * x[j] as i128).sum();
                    (gi - x[i] as i128).rem_euclid(n) == 0
                })
            });
            if fixed {
                out.push(x.clone());
            }
        }
        Ok(out)
    }
}

/// Isomorphism type of `M^G` for a finite module.
pub fn invariants_finite(m: &FiniteGModule) -> FinAbGroup {
    if m.action.is_empty() {
        return FinAbGroup::new(0, &vec![m.modulus; m.rank]);
    }
    let n = BigInt::from(m.modulus);
    let gens = mod_kernel(&m.augmentation_stack(), &n);
    subgroup_structure_mod(&gens, &n, m.rank)
}

/// Same as [`invariants_finite`] but from the exhaustively enumerated
/// invariant set.
pub fn invariants_finite_brute(m: &FiniteGModule) -> Result<FinAbGroup> {
    let elems = m.invariant_elements_brute()?;
    let n = BigInt::from(m.modulus);
    let gens: Vec<Vec<BigInt>> = elems
        .iter()
        .filter(|v| v.iter().any(|&x| x != 0))
        .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    Ok(subgroup_structure_mod(&gens, &n, m.rank))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int_matrix;

    fn c(n: usize) -> PermGroup {
        PermGroup::cyclic(n)
    }

    #[test]
    fn lattice_invariants() {
        let m = LatticeGModule::trivial_action(c(2), 2);
        assert_eq!(invariants_lattice(&m).ncols(), 2);
        let neg = LatticeGModule::new(c(2), vec![int_matrix(&[&[-1]])], 1).unwrap();
        assert_eq!(invariants_lattice(&neg).ncols(), 0);
        let swap = LatticeGModule::permutation_module(c(2));
        let inv = invariants_lattice(&swap);
        assert_eq!(inv.ncols(), 1);
        assert_eq!(inv[(0, 0)].abs(), BigInt::one());
        assert_eq!(inv[(0, 0)], inv[(1, 0)]);
    }

    #[test]
    fn h1_sign_character() {
        // Norm = 0, σ - 1 = -2, so H¹ = Z/2.
        let neg = LatticeGModule::new(c(2), vec![int_matrix(&[&[-1]])], 1).unwrap();
        assert_eq!(h1_lattice(&neg).unwrap(), FinAbGroup::cyclic(2));
        assert_eq!(h1_cyclic_oracle(&neg).unwrap(), FinAbGroup::cyclic(2));
    }

    #[test]
    fn h1_trivial_group_and_regular_module() {
        let m = LatticeGModule::trivial_action(PermGroup::trivial(1), 3);
        assert!(h1_lattice(&m).unwrap().is_trivial());
        let reg = LatticeGModule::permutation_module(c(2));
        assert!(h1_lattice(&reg).unwrap().is_trivial());
        assert!(h1_cyclic_oracle(&reg).unwrap().is_trivial());
    }

    #[test]
    fn cyclic_oracle_examples() {
        let shift = LatticeGModule::permutation_module(c(3));
        assert!(h1_cyclic_oracle(&shift).unwrap().is_trivial());
        let rot = LatticeGModule::new(c(4), vec![int_matrix(&[&[0, -1], &[1, 0]])], 2).unwrap();
        // N = I + R + R² + R³ = 0, R - I has determinant 2: H¹ = Z/2
        assert_eq!(h1_cyclic_oracle(&rot).unwrap(), FinAbGroup::cyclic(2));
        assert_eq!(h1_lattice(&rot).unwrap(), FinAbGroup::cyclic(2));
        let s3 = LatticeGModule::permutation_module(PermGroup::symmetric(3));
        assert_eq!(h1_cyclic_oracle(&s3), Err(Error::NotCyclic));
    }

    #[test]
    fn exponent_modulus_is_not_enough() {
        // Klein four acting on its augmentation ideal: H¹ = Ĥ⁰(G, Z) = Z/4
        // although exp(G) = 2.
        let a = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        let b = Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap();
        let v4 = PermGroup::new(4, vec![a.clone(), b.clone()]).unwrap();
        // basis of the augmentation ideal: g_i - g_0 for i = 1, 2, 3
        let basis = int_matrix(&[&[-1, -1, -1], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let restrict = |p: &Permutation| {
            let img = &permutation_matrix(p) * &basis;
            // coordinates: drop the first row
            img.select_rows(1..4)
        };
        let m = LatticeGModule::new(v4, vec![restrict(&a), restrict(&b)], 3).unwrap();
        assert_eq!(h1_lattice(&m).unwrap(), FinAbGroup::cyclic(4));
        assert_ne!(h1_with_modulus(&m, 2), FinAbGroup::cyclic(4));
    }

    #[test]
    fn homomorphism_check() {
        let bad = LatticeGModule::new(c(3), vec![int_matrix(&[&[-1]])], 1).unwrap();
        assert!(bad.element_matrices().is_err());
        let good = LatticeGModule::permutation_module(PermGroup::symmetric(3));
        assert_eq!(good.element_matrices().unwrap().len(), 6);
    }

    #[test]
    fn finite_invariants_examples() {
        let triv = FiniteGModule::new(6, 1, vec![]).unwrap();
        assert_eq!(invariants_finite(&triv), FinAbGroup::cyclic(6));
        let neg = FiniteGModule::scalar(4, &[-1]).unwrap();
        assert_eq!(invariants_finite(&neg), FinAbGroup::cyclic(2));
        // 3m = m mod 8 iff 2m = 0 mod 8 iff m in {0, 4}
        let three = FiniteGModule::scalar(8, &[3]).unwrap();
        assert_eq!(invariants_finite(&three), FinAbGroup::cyclic(2));
        assert_eq!(three.invariant_elements_brute().unwrap(), vec![vec![0], vec![4]]);
        assert_eq!(invariants_finite_brute(&three).unwrap(), FinAbGroup::cyclic(2));
        assert!(FiniteGModule::scalar(4, &[2]).is_err());
    }
}
