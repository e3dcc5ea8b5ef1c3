//! Subgroup class enumeration against exhaustive search on small groups.

use std::collections::{BTreeSet, HashSet};

use brauer_core::perm::{subgroups_up_to_conjugacy, PermGroup, Permutation};
use brauer_core::cubic::CubicLattice;

type Elems = BTreeSet<Permutation>;

fn closure(gens: &[Permutation], degree: usize) -> Elems {
    let mut set: Elems = [Permutation::identity(degree)].into_iter().collect();
    let mut frontier: Vec<Permutation> = set.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.compose(g);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

/// Every subgroup, by repeatedly adjoining one element to known subgroups.
fn all_subgroups(group: &PermGroup) -> HashSet<Elems> {
    let degree = group.degree();
    let elements = group.elements().unwrap();
    let mut found: HashSet<Elems> = HashSet::new();
    let mut queue = vec![closure(&[], degree)];
    found.insert(queue[0].clone());
    while let Some(h) = queue.pop() {
        let gens: Vec<Permutation> = h.iter().cloned().collect();
        for g in &elements {
            if h.contains(g) {
                continue;
            }
            let mut ext = gens.clone();
            ext.push(g.clone());
            let k = closure(&ext, degree);
            if found.insert(k.clone()) {
                queue.push(k);
            }
        }
    }
    found
}

fn canonical(h: &Elems, elements: &[Permutation]) -> Vec<Permutation> {
    elements
        .iter()
        .map(|x| {
            let mut c: Vec<Permutation> = h.iter().map(|y| x.conjugate(y)).collect();
            c.sort();
            c
        })
        .min()
        .unwrap()
}

fn check(group: &PermGroup) {
    let elements = group.elements().unwrap();
    let brute = all_subgroups(group);
    let classes: HashSet<Vec<Permutation>> = brute.iter().map(|h| canonical(h, &elements)).collect();
    let reps = subgroups_up_to_conjugacy(group).unwrap();
    assert_eq!(reps.len(), classes.len(), "class count for a group of order {}", group.order());
    let rep_classes: HashSet<Vec<Permutation>> = reps
        .iter()
        .map(|r| {
            let e: Elems = r.elements().unwrap().into_iter().collect();
            assert!(brute.contains(&e));
            canonical(&e, &elements)
        })
        .collect();
    assert_eq!(rep_classes, classes, "representatives are pairwise non-conjugate and cover every class");
    let orders: Vec<u128> = reps.iter().map(PermGroup::order).collect();
    assert!(orders.windows(2).all(|w| w[0] <= w[1]));
}

fn perm(degree: usize, cycles: &[&[u32]]) -> Permutation {
    Permutation::from_cycles(degree, cycles).unwrap()
}

#[test]
fn small_groups() {
    check(&PermGroup::cyclic(6));
    check(&PermGroup::symmetric(3));
    check(&PermGroup::symmetric(4));
    // dihedral of order 8
    check(&PermGroup::new(4, vec![perm(4, &[&[0, 1, 2, 3]]), perm(4, &[&[0, 2]])]).unwrap());
    // elementary abelian of order 8
    check(&PermGroup::new(6, vec![perm(6, &[&[0, 1]]), perm(6, &[&[2, 3]]), perm(6, &[&[4, 5]])]).unwrap());
    // A4
    check(&PermGroup::new(4, vec![perm(4, &[&[0, 1, 2]]), perm(4, &[&[0, 1], &[2, 3]])]).unwrap());
}

#[test]
fn groups_of_order_36_and_48() {
    // S3 x S3
    check(
        &PermGroup::new(
            6,
            vec![perm(6, &[&[0, 1, 2]]), perm(6, &[&[0, 1]]), perm(6, &[&[3, 4, 5]]), perm(6, &[&[3, 4]])],
        )
        .unwrap(),
    );
    // S4 x C2
    check(
        &PermGroup::new(6, vec![perm(6, &[&[0, 1, 2, 3]]), perm(6, &[&[0, 1]]), perm(6, &[&[4, 5]])]).unwrap(),
    );
}

#[test]
fn subgroup_of_the_trio_stabilizer() {
    let lat = CubicLattice::new();
    let stab = lat.trio_stabilizer(&lat.trios()[0]);
    let reps = subgroups_up_to_conjugacy(&stab).unwrap();
    let h = reps.iter().find(|h| h.order() == 48).unwrap();
    check(h);
}
