use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Isomorphism type of a finitely generated abelian group: `Z^free_rank`
/// plus the invariant-factor chain `d_1 | d_2 | ...`, all `d_i > 1`.
///
/// The representation is canonical, so `==` is isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawFinAbGroup")]
pub struct FinAbGroup {
    free_rank: usize,
    factors: Vec<u64>,
}

#[derive(Deserialize)]
struct RawFinAbGroup {
    free_rank: usize,
    factors: Vec<u64>,
}

impl TryFrom<RawFinAbGroup> for FinAbGroup {
    type Error = String;
    fn try_from(raw: RawFinAbGroup) -> Result<Self, String> {
        let g = FinAbGroup::new(raw.free_rank, &raw.factors);
        if g.factors != raw.factors {
            return Err(format!("factors {:?} are not in canonical form", raw.factors));
        }
        Ok(g)
    }
}

fn prime_powers(mut n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut q = 1;
            while n.is_multiple_of(p) {
                n /= p;
                q *= p;
            }
            out.push((p, q));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, n));
    }
    out
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        Self { free_rank: 0, factors: Vec::new() }
    }

    pub fn cyclic(n: u64) -> Self {
        Self::new(0, &[n])
    }

    /// Canonicalizes a direct sum `Z^free_rank + Z/c_1 + Z/c_2 + ...` where
    /// the `c_i` are arbitrary positive orders. A `0` entry counts as a copy of `Z`.
    pub fn new(free_rank: usize, cyclic_orders: &[u64]) -> Self {
        let mut free_rank = free_rank;
        // primary components per prime, largest first
        let mut by_prime: std::collections::BTreeMap<u64, Vec<u64>> = Default::default();
        for &c in cyclic_orders {
            if c == 0 {
                free_rank += 1;
                continue;
            }
            for (p, q) in prime_powers(c) {
                by_prime.entry(p).or_default().push(q);
            }
        }
        let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; len];
        for qs in by_prime.values_mut() {
            qs.sort_unstable_by(|a, b| b.cmp(a));
            for (k, q) in qs.iter().enumerate() {
                factors[len - 1 - k] *= q;
            }
        }
        Self { free_rank, factors }
    }

    /// From Smith-form diagonal entries of a relation matrix together with
    /// the number of generators.
    pub fn from_smith_diagonal(generators: usize, diagonal: &[BigInt]) -> Self {
        let nonzero: Vec<&BigInt> = diagonal.iter().filter(|d| !d.is_zero()).collect();
        let orders: Vec<u64> = nonzero
            .iter()
            .map(|d| d.abs().to_u64().expect("invariant factor exceeds u64"))
            .collect();
        Self::new(generators - nonzero.len(), &orders)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| self.factors.iter().product())
    }

    /// Exponent of the torsion part.
    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    /// Size of the `k`-torsion of the torsion part: prod gcd(k, d_i).
    pub fn torsion_count(&self, k: u64) -> u64 {
        self.factors.iter().map(|&d| d.gcd(&k)).product()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut all = self.factors.clone();
        all.extend_from_slice(&other.factors);
        Self::new(self.free_rank + other.free_rank, &all)
    }

    /// Elementary-divisor rendering, e.g. `Z/2 x Z/3` for `Z/6`.
    pub fn primary_string(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 { "Z".into() } else { format!("Z^{}", self.free_rank) });
        }
        let mut pp: Vec<u64> = self.factors.iter().flat_map(|&d| prime_powers(d)).map(|(_, q)| q).collect();
        pp.sort_unstable();
        parts.extend(pp.iter().map(|q| format!("Z/{q}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" x ")
        }
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 { "Z".into() } else { format!("Z^{}", self.free_rank) });
        }
        let mut i = 0;
        while i < self.factors.len() {
            let d = self.factors[i];
            let run = self.factors[i..].iter().take_while(|&&x| x == d).count();
            parts.push(if run == 1 { format!("Z/{d}") } else { format!("(Z/{d})^{run}") });
            i += run;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(FinAbGroup::new(0, &[2, 3]), FinAbGroup::cyclic(6));
        assert_eq!(FinAbGroup::new(0, &[1, 1]), FinAbGroup::trivial());
        assert_eq!(FinAbGroup::new(0, &[4, 2]).invariant_factors(), &[2, 4]);
        assert_eq!(FinAbGroup::new(0, &[6, 4]).invariant_factors(), &[2, 12]);
        assert_eq!(FinAbGroup::new(1, &[0, 2]).free_rank(), 2);
    }

    #[test]
    fn rendering() {
        assert_eq!(FinAbGroup::new(0, &[2, 2, 4]).to_string(), "(Z/2)^2 x Z/4");
        assert_eq!(FinAbGroup::cyclic(6).primary_string(), "Z/2 x Z/3");
        assert_eq!(FinAbGroup::trivial().to_string(), "0");
        assert_eq!(FinAbGroup::new(1, &[2]).to_string(), "Z x Z/2");
    }

    #[test]
    fn json_shape() {
        let g = FinAbGroup::new(0, &[2, 4]);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"free_rank":0,"factors":[2,4]}"#);
        assert_eq!(serde_json::from_str::<FinAbGroup>(&s).unwrap(), g);
        assert!(serde_json::from_str::<FinAbGroup>(r#"{"free_rank":0,"factors":[4,2]}"#).is_err());
        assert_eq!(
            serde_json::to_string(&FinAbGroup::trivial()).unwrap(),
            r#"{"free_rank":0,"factors":[]}"#
        );
    }

    #[test]
    fn torsion_counts() {
        let g = FinAbGroup::new(0, &[2, 4]);
        assert_eq!(g.torsion_count(2), 4);
        assert_eq!(g.torsion_count(4), 8);
        assert_eq!(g.order(), Some(8));
    }
}
