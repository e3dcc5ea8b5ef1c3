//! Randomized invariants across the linear algebra, arithmetic and
//! rational-example layers.

use brauer_core::brauer::{twist_invariants, GaloisType};
use brauer_core::checks::smith_identities_hold;
use brauer_core::cohomology::h1_lattice;
use brauer_core::cubic::CubicLattice;
use brauer_core::linalg::{mod_kernel, subgroup_structure_mod, IntMatrix};
use brauer_core::perm::{ElementTable, SUBGROUP_ENUMERATION_BOUND};
use brauer_core::rational::{
    certified_roots, cubic_galois_type, general_position, rational_roots, sextic, triple_sum_determinant,
    ComplexInterval, Rounded,
};
use brauer_core::{FinAbGroup, PermGroup, QPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use std::sync::OnceLock;

fn matrix(rows: usize, cols: usize, entries: &[i64]) -> IntMatrix {
    IntMatrix::from_vec(rows, cols, entries.iter().take(rows * cols).map(|&x| BigInt::from(x)).collect())
}

/// Number of `x ∈ (Z/n)^c` with `Ax ≡ 0`, by enumeration.
fn brute_kernel_size(a: &[Vec<i64>], cols: usize, n: i64) -> u64 {
    let total = (n as u64).pow(cols as u32);
    (0..total)
        .filter(|&code| {
            let mut c = code;
            let x: Vec<i64> = (0..cols)
                .map(|_| {
                    let v = (c % n as u64) as i64;
                    c /= n as u64;
                    v
                })
                .collect();
            a.iter().all(|row| row.iter().zip(&x).map(|(p, q)| p * q).sum::<i64>().rem_euclid(n) == 0)
        })
        .count() as u64
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn stabilizer_table() -> &'static (CubicLattice, ElementTable) {
    static CELL: OnceLock<(CubicLattice, ElementTable)> = OnceLock::new();
    CELL.get_or_init(|| {
        let lat = CubicLattice::new();
        let stab = lat.trio_stabilizer(&lat.trios()[0]);
        let table = ElementTable::new(&stab, SUBGROUP_ENUMERATION_BOUND).unwrap();
        (lat, table)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_identities(rows in 1usize..=5, cols in 1usize..=5, entries in prop::collection::vec(-30i64..=30, 25)) {
        prop_assert!(smith_identities_hold(&matrix(rows, cols, &entries)));
    }

    #[test]
    fn modular_kernel_size(rows in 1usize..=3, cols in 1usize..=3, n in 2i64..=8, entries in prop::collection::vec(-9i64..=9, 9)) {
        let a: Vec<Vec<i64>> = (0..rows).map(|i| entries[i * cols..(i + 1) * cols].to_vec()).collect();
        let m = matrix(rows, cols, &a.concat());
        let nb = BigInt::from(n);
        let kernel = subgroup_structure_mod(&mod_kernel(&m, &nb), &nb, cols);
        prop_assert_eq!(kernel.order(), Some(brute_kernel_size(&a, cols, n)));
    }

    #[test]
    fn galois_type_invariant_under_scaling_and_shift(
        c in prop::collection::vec(-6i64..=6, 3), scale in 1i64..=7, neg in any::<bool>(), shift in -5i64..=5, den in 1i64..=3
    ) {
        let f = QPoly::from_integers(&[c[0], c[1], c[2], 1]);
        prop_assume!(!f.discriminant().is_zero());
        let s = if neg { -scale } else { scale };
        let g = f.shift(&BigRational::new(shift.into(), den.into())).scale(&BigRational::new(s.into(), den.into()));
        prop_assert_eq!(cubic_galois_type(&f).unwrap(), cubic_galois_type(&g).unwrap());
    }

    #[test]
    fn square_discriminant_iff_not_s3(c in prop::collection::vec(-9i64..=9, 3)) {
        let f = QPoly::from_integers(&[c[0], c[1], c[2], 1]);
        prop_assume!(!f.discriminant().is_zero() && rational_roots(&f).unwrap().is_empty());
        let disc = f.discriminant();
        let square = disc.is_positive() && {
            let n = disc.numer().sqrt();
            &n * &n == *disc.numer()
        };
        let t = cubic_galois_type(&f).unwrap();
        prop_assert_eq!(square, t == GaloisType::C3);
        prop_assert!(matches!(t, GaloisType::C3 | GaloisType::S3(_)));
    }

    #[test]
    fn twist_depends_on_square_class(d in prop::sample::select(vec![-1i64, -3, 2, -2, 3, 5, -5, 6, 7, -7]), m in 1i64..=5,
                                     n in prop::sample::select(vec![2u64, 4, 8, 3, 9, 5, 25, 7])) {
        prop_assert_eq!(twist_invariants(d, n).unwrap(), twist_invariants(d * m * m, n).unwrap());
    }

    #[test]
    fn twist_stabilizes(d in prop::sample::select(vec![-1i64, -3, 2, -2, 3, 5, -5, 6, 7, -7, 11, -11])) {
        for i in 2..=4u32 {
            prop_assert_eq!(twist_invariants(d, 1 << i).unwrap(), twist_invariants(d, 1 << (i + 1)).unwrap());
        }
        for i in 1..=2u32 {
            prop_assert_eq!(twist_invariants(d, 3u64.pow(i)).unwrap(), twist_invariants(d, 3u64.pow(i + 1)).unwrap());
        }
        for p in [5u64, 7, 11] {
            for i in 1..=2u32 {
                prop_assert!(twist_invariants(d, p.pow(i)).unwrap().is_trivial());
            }
        }
    }

    #[test]
    fn cohomology_killed_by_group_order(a in 0usize..1152, b in 0usize..1152, two in any::<bool>()) {
        let (lat, table) = stabilizer_table();
        let mut gens = vec![table.element(a).clone()];
        if two {
            gens.push(table.element(b).clone());
        }
        let group = PermGroup::generated_by(27, gens);
        let order = group.order() as u64;
        let trio = &lat.trios()[0];
        for m in [lat.pic_module(&group).unwrap(), lat.quotient_by_trio(trio, &group).unwrap().module().unwrap()] {
            let h = h1_lattice(&m).unwrap();
            prop_assert!(h.is_finite());
            prop_assert_eq!(order % h.exponent(), 0);
        }
    }

    #[test]
    fn group_json_round_trip(factors in prop::collection::vec(1u64..=12, 0..5), free in 0usize..3) {
        let g = FinAbGroup::new(free, &factors);
        let s = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<FinAbGroup>(&s).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// `det D` lies in the interval product of the 20 triple sums of
    /// certified roots of `H`.
    #[test]
    fn triple_sum_determinant_matches_roots(c in prop::collection::vec(-5i64..=5, 3), a in 1i64..=4) {
        let f = QPoly::from_integers(&[c[0], c[1], c[2], 1]);
        let a = q(a);
        let h = sextic(&f, &a);
        prop_assume!(!h.discriminant().is_zero());
        let roots = certified_roots(&h, 160).unwrap();
        let r = Rounded { bits: 160 };
        let mut prod = ComplexInterval::real(q(1));
        for i in 0..6 {
            for j in i + 1..6 {
                for k in j + 1..6 {
                    let s = r.add(&r.add(&roots[i], &roots[j]), &roots[k]);
                    prod = r.mul(&prod, &s);
                }
            }
        }
        let det = triple_sum_determinant(&f, &a);
        let exact = ComplexInterval::real(det.clone());
        prop_assert!(prod.re.contains(&exact.re.lo) && prod.im.contains_zero());
        prop_assert_eq!(general_position(&f, &a).unwrap().no_zero_triple_sum, !det.is_zero());
    }
}

#[test]
fn vanishing_degree5_coefficient_detected() {
    // t² coefficient p of the monic cubic; the t⁵ coefficient of H is 2p - 3a
    for p in [-4i64, -1, 2, 3, 5] {
        let f = QPoly::from_integers(&[1, 2, p, 1]);
        let a = BigRational::new(BigInt::from(2 * p), BigInt::from(3));
        let gp = general_position(&f, &a).unwrap();
        assert!(!gp.degree5_nonzero);
        assert!(!gp.passed());
    }
}
