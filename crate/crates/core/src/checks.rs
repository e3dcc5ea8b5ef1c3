//! The reproduction suite: one check per acceptance criterion, each with a
//! pass/fail verdict and a short diagnostic. Shared by the `acceptance`
//! test target and the command-line `--seed-check` flag.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::prime_power;
use crate::brauer::{
    pairs_for_orbit_count, residue_kernel_check, sqrt_in_cyclotomic, transcendental_bound, trio_subgroup_records,
    twist_invariants, BoundaryDescriptor, ConicIntersection, GaloisType, QuadraticClass, SingularCubicKind,
    TablePair,
};
use crate::cohomology::{h1_cyclic_oracle, h1_lattice, LatticeGModule};
use crate::cubic::{lines27, torsion_free_line_conic, tritangent_trios, CubicLattice, HYPERPLANE};
use crate::linalg::{snf, unimodular_inverse, FinAbGroup, IntMatrix};
use crate::perm::{ElementTable, PermGroup, SUBGROUP_ENUMERATION_BOUND};
use crate::rational::{search_shift, QPoly};

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl CheckOutcome {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2}. {} ({:.2}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.seconds,
            self.detail
        )
    }
}

fn timed(id: u32, name: &'static str, budget: Duration, f: impl FnOnce() -> (bool, String)) -> CheckOutcome {
    let start = Instant::now();
    let (ok, mut detail) = f();
    let elapsed = start.elapsed();
    let in_time = elapsed <= budget;
    if !in_time {
        detail.push_str(&format!("; over the {:?} budget", budget));
    }
    CheckOutcome { id, name, passed: ok && in_time, detail, seconds: elapsed.as_secs_f64() }
}

fn g(factors: &[u64]) -> FinAbGroup {
    FinAbGroup::new(0, factors)
}

fn pair(br1: &[u64], brx: &[u64]) -> TablePair {
    TablePair { br1: g(br1), brx: g(brx) }
}

/// Expected `(Br₁(U), Br(X))` pairs for one, two and three orbits on the trio.
pub fn expected_table(case: usize) -> BTreeSet<TablePair> {
    let v = match case {
        1 => vec![
            pair(&[], &[]),
            pair(&[2], &[]),
            pair(&[2], &[2]),
            pair(&[2, 2], &[]),
            pair(&[2, 2], &[2]),
            pair(&[2, 2], &[2, 2]),
            pair(&[4], &[2]),
            pair(&[3], &[3]),
            pair(&[3, 3], &[3, 3]),
        ],
        2 => vec![
            pair(&[2], &[]),
            pair(&[2, 2], &[]),
            pair(&[2, 2], &[2]),
            pair(&[2, 2, 2], &[2]),
            pair(&[2, 2, 2], &[2, 2]),
            pair(&[4], &[2]),
            pair(&[2, 4], &[2, 2]),
        ],
        3 => vec![
            pair(&[], &[]),
            pair(&[2], &[]),
            pair(&[2], &[2]),
            pair(&[2, 2], &[]),
            pair(&[2, 2], &[2]),
            pair(&[2, 2, 2], &[]),
            pair(&[2, 2, 2], &[2]),
            pair(&[2, 2, 2, 2], &[2, 2]),
            pair(&[4], &[2]),
            pair(&[2, 4], &[2]),
        ],
        _ => panic!("orbit case must be 1, 2 or 3"),
    };
    v.into_iter().collect()
}

fn show_pairs<'a>(it: impl IntoIterator<Item = &'a TablePair>) -> String {
    it.into_iter().map(|p| format!("({}, {})", p.br1, p.brx)).collect::<Vec<_>>().join(", ")
}

pub fn check_lattice_combinatorics() -> CheckOutcome {
    timed(1, "lines, trios, W(E6) and trio stabilizer", Duration::from_secs(10), || {
        let lines = lines27();
        let lines_ok = lines.len() == 27
            && lines.iter().all(|l| l.self_intersection() == -1 && l.dot(&HYPERPLANE) == 1);
        let trios = tritangent_trios();
        let lat = CubicLattice::new();
        let w = lat.weyl_group().order();
        let stab = lat.trio_stabilizer(&lat.trios()[0]).order();
        let ok = lines_ok && trios.len() == 45 && w == 51840 && stab == 1152;
        (ok, format!("{} lines (all valid: {lines_ok}), {} trios, |W| = {w}, |Stab| = {stab}", lines.len(), trios.len()))
    })
}

pub fn check_algebraic_tables() -> CheckOutcome {
    timed(2, "algebraic Brauer tables for a trio boundary", Duration::from_secs(30 * 60), || {
        let records = match trio_subgroup_records(&CubicLattice::new()) {
            Ok(r) => r,
            Err(e) => return (false, format!("enumeration failed: {e}")),
        };
        let mut ok = true;
        let mut parts = vec![format!("{} subgroup classes", records.len())];
        for case in 1..=3 {
            let got = pairs_for_orbit_count(&records, case);
            let want = expected_table(case);
            if got == want {
                parts.push(format!("case {case}: {} pairs match", got.len()));
            } else {
                ok = false;
                let missing: Vec<_> = want.difference(&got).collect();
                let extra: Vec<_> = got.difference(&want).collect();
                parts.push(format!(
                    "case {case}: computed {} vs expected {}; missing [{}]; extra [{}]",
                    got.len(),
                    want.len(),
                    show_pairs(missing),
                    show_pairs(extra)
                ));
            }
        }
        (ok, parts.join("; "))
    })
}

pub fn check_torsion_freeness() -> CheckOutcome {
    timed(3, "torsion-free boundary quotients", Duration::from_secs(5), || {
        let report = torsion_free_line_conic();
        let lc_ok = report.all_torsion_free();
        let bad_trios: Vec<usize> = tritangent_trios()
            .iter()
            .enumerate()
            .filter(|(_, t)| !crate::cubic::boundary_invariant_factors(&t.classes).iter().all(One::is_one))
            .map(|(i, _)| i)
            .collect();
        let ok = lc_ok && bad_trios.is_empty();
        (
            ok,
            format!(
                "{}/27 line + conic quotients torsion-free, {}/45 trio quotients torsion-free",
                report.verdicts.iter().filter(|v| v.torsion_free).count(),
                45 - bad_trios.len()
            ),
        )
    })
}

pub const TWIST_TABLE_D: [i64; 6] = [-1, -3, 2, -2, 5, -5];
pub const TWIST_TABLE_N: [u64; 11] = [2, 4, 8, 16, 3, 9, 27, 5, 25, 7, 49];

/// Table entry: `Z/2` for `n = 2ⁱ` with `√d ∉ Q(ζ_n)`, `Z/4` for `d = -1`,
/// `n = 2ⁱ` (`i >= 2`), `Z/3` for `d = -3`, `n = 3ⁱ`, else `0`.
pub fn expected_twist_entry(d: i64, n: u64) -> FinAbGroup {
    let (p, i) = prime_power(n).expect("prime power");
    if p == 2 && !sqrt_in_cyclotomic(d, p, i) {
        g(&[2])
    } else if d == -1 && p == 2 && i >= 2 {
        g(&[4])
    } else if d == -3 && p == 3 {
        g(&[3])
    } else {
        FinAbGroup::trivial()
    }
}

pub fn check_twist_table() -> CheckOutcome {
    timed(4, "twisted invariants case table", Duration::from_secs(5), || {
        let mut wrong = Vec::new();
        for d in TWIST_TABLE_D {
            for n in TWIST_TABLE_N {
                match twist_invariants(d, n) {
                    Ok(got) if got == expected_twist_entry(d, n) => {}
                    Ok(got) => wrong.push(format!("(d={d}, n={n}): got {got}, table {}", expected_twist_entry(d, n))),
                    Err(e) => wrong.push(format!("(d={d}, n={n}): {e}")),
                }
            }
        }
        let total = TWIST_TABLE_D.len() * TWIST_TABLE_N.len();
        if wrong.is_empty() {
            (true, format!("{total}/{total} cells match"))
        } else {
            (false, format!("{}/{total} cells match; mismatches: {}", total - wrong.len(), wrong.join("; ")))
        }
    })
}

pub fn check_rational_examples() -> CheckOutcome {
    timed(5, "end-to-end rational examples", Duration::from_secs(60), || {
        let cases = [
            ("(t^2 - 2)(t + 1)", [-2, -2, 1, 1], g(&[2])),
            ("(t^2 + 1)(t + 1)", [1, 1, 1, 1], g(&[4])),
            ("(t^2 + 3)(t + 1)", [3, 3, 1, 1], g(&[2, 3])),
        ];
        let mut ok = true;
        let mut parts = Vec::new();
        for (name, coeffs, want) in cases {
            match search_shift(&QPoly::from_integers(&coeffs), 20, crate::rational::eckardt::DEFAULT_PRECISION_CAP) {
                Ok(rep) => {
                    let good = rep.brauer == want;
                    ok &= good;
                    parts.push(format!("{name}: {} at a = {} ({} bits)", rep.brauer, rep.a, rep.eckardt.bits));
                }
                Err(e) => {
                    ok = false;
                    parts.push(format!("{name}: {e}"));
                }
            }
        }
        (ok, parts.join("; "))
    })
}

pub fn check_cyclic_oracle() -> CheckOutcome {
    timed(6, "cohomology agrees with the cyclic formula", Duration::from_secs(5 * 60), || {
        let lat = CubicLattice::new();
        let trio = &lat.trios()[0];
        let stab = lat.trio_stabilizer(trio);
        let table = match ElementTable::new(&stab, SUBGROUP_ENUMERATION_BOUND) {
            Ok(t) => t,
            Err(e) => return (false, e.to_string()),
        };
        let cyclic = table.cyclic_subgroups();
        let mut cases = 0;
        let mut bad = Vec::new();
        for sub in &cyclic {
            let group = table.subgroup(sub);
            let modules = [
                ("Pic X", lat.pic_module(&group)),
                ("Pic U", lat.quotient_by_trio(trio, &group).and_then(|q| q.module())),
            ];
            for (which, m) in modules {
                cases += 1;
                let agree = m.and_then(|m| Ok(h1_lattice(&m)? == h1_cyclic_oracle(&m)?));
                if !matches!(agree, Ok(true)) {
                    bad.push(format!("{which} for a cyclic group of order {}", sub.order()));
                }
            }
        }
        (bad.is_empty(), format!("{} cyclic subgroups, {cases} modules, {} disagreements{}", cyclic.len(), bad.len(), suffix(&bad)))
    })
}

fn random_matrix(rng: &mut ChaCha8Rng) -> IntMatrix {
    let r = rng.gen_range(1..=6);
    let c = rng.gen_range(1..=6);
    let data = (0..r * c).map(|_| BigInt::from(rng.gen_range(-50..=50))).collect();
    IntMatrix::from_vec(r, c, data)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn minor_gcd(a: &IntMatrix, k: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for rows in subsets(a.nrows(), k) {
        for cols in subsets(a.ncols(), k) {
            let m = IntMatrix::from_vec(
                k,
                k,
                rows.iter().flat_map(|&i| cols.iter().map(move |&j| a[(i, j)].clone())).collect(),
            );
            acc = acc.gcd(&m.determinant());
        }
    }
    acc
}

/// `UAV = S`, unimodular `U`, `V`, divisibility chain and the gcd of `k x k`
/// minors equal to `d₁⋯d_k`.
pub fn smith_identities_hold(a: &IntMatrix) -> bool {
    let f = snf(a);
    let unit = |m: &IntMatrix| m.determinant().abs().is_one();
    if &(&f.u * a) * &f.v != f.s || !unit(&f.u) || !unit(&f.v) {
        return false;
    }
    for i in 0..f.s.nrows() {
        for j in 0..f.s.ncols() {
            if i != j && !f.s[(i, j)].is_zero() {
                return false;
            }
        }
    }
    let diag = f.diagonal();
    if diag.iter().any(|d| d.is_negative()) || diag.windows(2).any(|w| !w[0].is_zero() && !(&w[1] % &w[0]).is_zero() || w[0].is_zero() && !w[1].is_zero()) {
        return false;
    }
    let mut prod = BigInt::one();
    for k in 1..=diag.len() {
        prod *= &diag[k - 1];
        if minor_gcd(a, k) != prod {
            return false;
        }
    }
    true
}

fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut p = IntMatrix::identity(n);
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        match rng.gen_range(0..3) {
            0 if i != j => p.add_row_multiple(i, j, &BigInt::from(rng.gen_range(-2..=2))),
            1 => p.swap_rows(i, j),
            _ => p.negate_row(i),
        }
    }
    p
}

pub fn check_property_suites() -> CheckOutcome {
    timed(7, "property suites", Duration::from_secs(2 * 60), || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut parts = Vec::new();
        let mut ok = true;

        let snf_ok = (0..1000).filter(|_| smith_identities_hold(&random_matrix(&mut rng))).count();
        ok &= snf_ok == 1000;
        parts.push(format!("SNF {snf_ok}/1000"));

        let groups: Vec<(&str, PermGroup)> = vec![
            ("C2", PermGroup::cyclic(2)),
            ("C3", PermGroup::cyclic(3)),
            ("C4", PermGroup::cyclic(4)),
            ("S3", PermGroup::symmetric(3)),
        ];
        let mut shapiro = Vec::new();
        for (name, grp) in groups {
            let regular = ElementTable::new(&grp, 100).unwrap().regular_representation();
            let h = h1_lattice(&LatticeGModule::permutation_module(regular));
            let vanishes = matches!(&h, Ok(x) if x.is_trivial());
            ok &= vanishes;
            shapiro.push(format!("{name}:{}", if vanishes { "0" } else { "nonzero" }));
        }
        parts.push(format!("H1(G, Z[G]) {}", shapiro.join(" ")));

        let residue_ok = (2..=30u64)
            .filter(|&n| residue_kernel_check(n).is_ok_and(|r| r.structure == FinAbGroup::cyclic(n) && r.diagonal))
            .count();
        ok &= residue_ok == 29;
        parts.push(format!("residue kernels {residue_ok}/29"));

        let lat = CubicLattice::new();
        let stab = lat.trio_stabilizer(&lat.trios()[0]);
        let table = ElementTable::new(&stab, SUBGROUP_ENUMERATION_BOUND).unwrap();
        let mut conj_ok = 0;
        for _ in 0..100 {
            let gens: Vec<usize> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(0..table.len())).collect();
            let group = PermGroup::generated_by(27, gens.iter().map(|&i| table.element(i).clone()));
            let m = lat.pic_module(&group).unwrap();
            let p = random_unimodular(&mut rng, 7);
            let conj = m.change_basis(&p, &unimodular_inverse(&p));
            if h1_lattice(&m).ok() == h1_lattice(&conj).ok() {
                conj_ok += 1;
            }
        }
        ok &= conj_ok == 100;
        parts.push(format!("basis changes {conj_ok}/100"));
        (ok, parts.join(", "))
    })
}

/// Independent encoding of the transcendental bound per boundary type.
pub fn expected_bound(b: &BoundaryDescriptor) -> FinAbGroup {
    let by_d = |d: QuadraticClass| match d.value() {
        -1 => g(&[4]),
        -3 => g(&[2, 3]),
        _ => g(&[2]),
    };
    match *b {
        BoundaryDescriptor::LineConic { intersection } => match intersection {
            ConicIntersection::Tangent => FinAbGroup::trivial(),
            ConicIntersection::TwoRational => g(&[2]),
            ConicIntersection::Quadratic(d) => by_d(d),
        },
        BoundaryDescriptor::Irreducible { kind } => match kind {
            SingularCubicKind::Cuspidal => FinAbGroup::trivial(),
            SingularCubicKind::NodalSplit => g(&[2]),
            SingularCubicKind::NodalNonsplit(d) => by_d(d),
        },
        BoundaryDescriptor::ThreeLines { eckardt: true, .. } => FinAbGroup::trivial(),
        BoundaryDescriptor::ThreeLines { galois, .. } => match galois {
            GaloisType::Trivial | GaloisType::C3 => g(&[2]),
            GaloisType::C2(d) | GaloisType::S3(d) => by_d(d),
        },
    }
}

pub fn check_classifier_composition() -> CheckOutcome {
    timed(8, "boundary classifier composition", Duration::from_secs(60), || {
        let ds: Vec<QuadraticClass> =
            [-1, -3, 2, -2, 3, 5, -5, 6, -6, 7, -7, 10, -15].iter().map(|&d| QuadraticClass::new(d).unwrap()).collect();
        let variants = BoundaryDescriptor::all_variants(&ds);
        let allowed = [g(&[]), g(&[2]), g(&[4]), g(&[2, 3])];
        let mut bad = Vec::new();
        for b in &variants {
            match transcendental_bound(b) {
                Ok(x) if x == expected_bound(b) && allowed.contains(&x) => {}
                Ok(x) => bad.push(format!("{b}: {x}")),
                Err(e) => bad.push(format!("{b}: {e}")),
            }
        }
        (bad.is_empty(), format!("{}/{} descriptors consistent{}", variants.len() - bad.len(), variants.len(), suffix(&bad)))
    })
}

fn suffix(bad: &[String]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!(": {}", bad.join("; "))
    }
}

pub fn run_all() -> Vec<CheckOutcome> {
    vec![
        check_lattice_combinatorics(),
        check_algebraic_tables(),
        check_torsion_freeness(),
        check_twist_table(),
        check_rational_examples(),
        check_cyclic_oracle(),
        check_property_suites(),
        check_classifier_composition(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int_matrix;

    #[test]
    fn smith_identity_examples() {
        assert!(smith_identities_hold(&int_matrix(&[&[2, 4], &[6, 8]])));
        assert!(smith_identities_hold(&int_matrix(&[&[0, 0], &[0, 0]])));
        assert!(smith_identities_hold(&int_matrix(&[&[4, 6, 0], &[6, 9, 15]])));
    }

    #[test]
    fn minor_gcds() {
        let a = int_matrix(&[&[4, 6, 0], &[6, 9, 15]]);
        assert_eq!(minor_gcd(&a, 1), BigInt::from(1));
        assert_eq!(minor_gcd(&a, 2), BigInt::from(30));
        assert_eq!(subsets(4, 2).len(), 6);
    }

    #[test]
    fn expected_tables_sizes() {
        assert_eq!(expected_table(1).len(), 9);
        assert_eq!(expected_table(2).len(), 7);
        assert_eq!(expected_table(3).len(), 10);
    }
}
