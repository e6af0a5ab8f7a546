use frieze_core::affine3::{
    chamber_scan, determinant_classes_of, simpliciality_of, AffineRootSet, DomainConfig,
};
use frieze_core::exactgeom::{int_rat, intersect, IntLine};
use frieze_core::frieze::{classify_dense, is_dense};
use frieze_core::quiddity::{enumerate_cycles, is_quiddity_cycle, Triangulation};
use frieze_core::{catalan, FriezeTable, Int, QuiddityCycle};
use proptest::prelude::*;
use proptest::sample::Index;

fn cyc(v: &[i64]) -> QuiddityCycle {
    QuiddityCycle::from_i64s(v).unwrap()
}

fn dense_five() -> Vec<QuiddityCycle> {
    [
        &[1, 1, 1][..],
        &[1, 2, 1, 2],
        &[1, 3, 1, 3, 1, 3],
        &[1, 3, 1, 4, 1, 3, 1, 4],
        &[1, 3, 1, 5, 1, 3, 1, 5, 1, 3, 1, 5],
    ]
    .iter()
    .map(|v| cyc(v))
    .collect()
}

#[test]
fn catalan_counts_to_fourteen() {
    for n in 2..=14 {
        assert_eq!(
            enumerate_cycles(n).unwrap().len() as u64,
            catalan(n as u64 - 2),
            "n = {n}"
        );
    }
}

#[test]
fn operations_preserve_cycles() {
    for n in 2..=10 {
        for c in enumerate_cycles(n).unwrap() {
            for k in 0..n as isize {
                assert!(is_quiddity_cycle(c.rotate(k).entries()));
            }
            assert!(is_quiddity_cycle(c.reverse().entries()));
            assert!(is_quiddity_cycle(c.psi_inv().entries()));
            for i in 1..=n {
                assert!(is_quiddity_cycle(c.insert_ear(i).unwrap().entries()));
            }
        }
    }
}

#[test]
fn ear_removal_reaches_base_in_n_minus_two_steps() {
    for n in 3..=10 {
        for c in enumerate_cycles(n).unwrap() {
            let mut cur = c.clone();
            let mut steps = 0;
            while cur.len() > 2 {
                cur = cur.remove_ear(cur.ears()[0]).unwrap();
                steps += 1;
            }
            assert_eq!((cur, steps), (QuiddityCycle::base(), n - 2), "{c}");
        }
    }
}

#[test]
fn psi_is_a_bijection() {
    let mut hit = 0;
    for n in (4..=12).step_by(2) {
        for c in enumerate_cycles(n).unwrap() {
            if c.entries()
                .iter()
                .skip(1)
                .step_by(2)
                .all(|x| *x == Int::from(1))
            {
                let image = c.psi().unwrap();
                assert_eq!(image.psi_inv(), c);
                hit += 1;
            }
        }
    }
    // Images of lengths 2..=6 account for every preimage.
    let expected: u64 = (2..=6).map(|m| catalan(m - 2)).sum();
    assert_eq!(hit, expected);
}

#[test]
fn monotone_runs_between_ears() {
    for n in 3..=10 {
        for c in enumerate_cycles(n).unwrap() {
            let t = FriezeTable::new(&c).unwrap();
            for i in 1..=n as isize {
                // Walk forward from i while the interior entries exceed 1.
                let mut j = i + 1;
                while j < i + n as isize - 1 && *c.entry(j) > Int::from(1) {
                    assert!(
                        t.phi(i, j) < t.phi(i, j + 1),
                        "{c}: φ_{i} not increasing at {j}"
                    );
                    j += 1;
                }
            }
        }
    }
}

#[test]
fn dense_cycles_alternate_ones() {
    for c in dense_five() {
        let n = c.len();
        let t = FriezeTable::new(&c).unwrap();
        if n > 3 {
            assert_eq!(n % 2, 0);
            let odd_ones = c.entries().iter().step_by(2).all(|x| *x == Int::from(1));
            let even_ones = c
                .entries()
                .iter()
                .skip(1)
                .step_by(2)
                .all(|x| *x == Int::from(1));
            assert!(odd_ones || even_ones, "{c}");
        }
        if n > 4 {
            let sizes = t.m_sizes();
            let alt = |first: usize| {
                (0..n).all(|k| sizes[k] == if k % 2 == 0 { first } else { 3 - first })
            };
            assert!(alt(1) || alt(2), "{c}: {sizes:?}");
        }
        for e in c.ears() {
            assert!(
                (1..=n).any(|i| t.m_set(i).members.contains(&e)),
                "{c}: ear {e} in no m_i"
            );
        }
    }
}

#[test]
fn dense_maximizers_are_ear_pairs() {
    for c in dense_five().into_iter().filter(|c| c.len() > 4) {
        let n = c.len();
        let t = FriezeTable::new(&c).unwrap();
        let ears = c.ears();
        let plus2 = |e: usize| (e + 1) % n + 1;
        let sets: Vec<Vec<usize>> = (1..=n).map(|i| t.m_set(i).members).collect();
        for m in &sets {
            let ok = ears.iter().any(|&e| {
                let mut pair = vec![e, plus2(e)];
                pair.sort();
                *m == vec![e] || *m == pair
            });
            assert!(ok, "{c}: m = {m:?}");
        }
        for &e in &ears {
            let mut pair = vec![e, plus2(e)];
            pair.sort();
            assert!(sets.contains(&pair), "{c}: no m_i = {{{e}, {}}}", plus2(e));
        }
    }
}

#[test]
fn dense_fans_are_small() {
    for n in 3..=12 {
        for c in enumerate_cycles(n).unwrap() {
            if c.is_fan_shaped() && is_dense(&c) {
                assert!(n == 3 || n == 4, "{c}");
            }
        }
    }
}

#[test]
fn dense_classes_are_reversal_closed() {
    let classes = classify_dense(12).unwrap();
    assert_eq!(classes, dense_five());
    for c in &classes {
        assert!(classes.contains(&c.reverse().min_rotation()), "{c}");
    }
}

#[test]
fn affine_results_do_not_depend_on_chamber() {
    for c in dense_five() {
        let scan = chamber_scan(&c, &DomainConfig::unit()).unwrap();
        assert_eq!(scan.len(), c.len());
        let first = &scan[0];
        for s in &scan {
            assert_eq!(
                (s.cells, s.simplicial, &s.det_classes),
                (first.cells, first.simplicial, &first.det_classes)
            );
        }
    }
}

#[test]
fn fundamental_cells_agree_across_windows() {
    let mut cycles: Vec<QuiddityCycle> =
        (3..=6).flat_map(|n| enumerate_cycles(n).unwrap()).collect();
    cycles.extend(dense_five());
    let wide = DomainConfig {
        margin: int_rat(2),
        ..DomainConfig::default()
    };
    for c in &cycles {
        let set = AffineRootSet::new(c, 1).unwrap();
        let unit = set.fundamental_cells_with(&DomainConfig::unit());
        assert_eq!(unit, set.fundamental_cells(), "{c}");
        if c.len() <= 4 || is_dense(c) {
            assert_eq!(unit, set.fundamental_cells_with(&wide), "{c}");
        }
    }
}

#[test]
fn shifted_domains_give_translated_cells() {
    for c in dense_five().into_iter().take(4) {
        let set = AffineRootSet::new(&c, 2).unwrap();
        let base = set.fundamental_cells_with(&DomainConfig::unit());
        for (dx, dy) in [(1, 0), (0, -1), (2, 3)] {
            let moved: Vec<_> = base.iter().map(|cell| cell.translated(dx, dy)).collect();
            let got = set.fundamental_cells_with(&DomainConfig::unit().shifted(dx, dy));
            assert_eq!(got, moved, "{c} shifted by ({dx}, {dy})");
        }
    }
}

#[test]
fn simplicial_cells_have_independent_walls() {
    for c in dense_five().into_iter().filter(|c| c.len() != 8) {
        let cells = AffineRootSet::new(&c, 1)
            .unwrap()
            .fundamental_cells_with(&DomainConfig::unit());
        assert!(simpliciality_of(&cells).simplicial);
        for cell in &cells {
            let det = cell.det_abs.clone().unwrap();
            assert!(det > Int::from(0), "{c}: {cell}");
        }
        let classes = determinant_classes_of(&cells).unwrap();
        assert_eq!(classes.total(), cells.len());
    }
}

fn cycle_from(steps: &[Index]) -> QuiddityCycle {
    steps.iter().fold(QuiddityCycle::base(), |c, ix| {
        let i = ix.index(c.len()) + 1;
        c.insert_ear(i).unwrap()
    })
}

proptest! {
    #[test]
    fn ear_insertion_yields_cycles(steps in prop::collection::vec(any::<Index>(), 1..16)) {
        let c = cycle_from(&steps);
        prop_assert!(is_quiddity_cycle(c.entries()));
        let n = c.len() as i64;
        prop_assert_eq!(c.entries().iter().sum::<Int>(), Int::from(3 * n - 6));
        prop_assert!(c.ears().len() >= 2);
    }

    #[test]
    fn rotations_and_reversal_stay_cycles(steps in prop::collection::vec(any::<Index>(), 1..16), k in -20isize..20) {
        let c = cycle_from(&steps);
        prop_assert!(is_quiddity_cycle(c.rotate(k).entries()));
        prop_assert!(is_quiddity_cycle(c.reverse().entries()));
        prop_assert_eq!(c.rotate(k).min_rotation(), c.min_rotation());
        prop_assert_eq!(c.rotate(k).rotate(-k), c.clone());
    }

    #[test]
    fn triangulation_round_trip(steps in prop::collection::vec(any::<Index>(), 1..16)) {
        let c = cycle_from(&steps);
        let t = c.to_triangulation().unwrap();
        prop_assert_eq!(t.to_cycle(), c.clone());
        let rebuilt = Triangulation::new(t.n(), t.triangles().to_vec()).unwrap();
        prop_assert_eq!(rebuilt.to_cycle(), c);
    }

    #[test]
    fn ear_removal_inverts_insertion(steps in prop::collection::vec(any::<Index>(), 1..14), at in any::<Index>()) {
        let c = cycle_from(&steps);
        let i = at.index(c.len()) + 1;
        let bigger = c.insert_ear(i).unwrap();
        prop_assert_eq!(bigger.remove_ear(i % bigger.len() + 1).unwrap(), c);
    }

    #[test]
    fn frieze_rows_are_symmetric(steps in prop::collection::vec(any::<Index>(), 1..12)) {
        let c = cycle_from(&steps);
        let t = FriezeTable::new(&c).unwrap();
        let n = c.len() as isize;
        for i in 1..=n {
            for j in 1..=n {
                prop_assert_eq!(t.phi(i, j), t.phi(j, i));
            }
        }
        let rows = t.pattern_rows();
        for k in 0..rows.len() {
            let mut a = rows[k].clone();
            let mut b = rows[rows.len() - 1 - k].clone();
            a.sort();
            b.sort();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn psi_round_trip(steps in prop::collection::vec(any::<Index>(), 1..10)) {
        let c = cycle_from(&steps);
        if c.len() >= 3 {
            let lifted = c.psi_inv();
            prop_assert!(is_quiddity_cycle(lifted.entries()));
            prop_assert_eq!(lifted.psi().unwrap(), c);
        }
    }

    #[test]
    fn lines_are_canonical(a in -20i64..20, b in -20i64..20, d in -50i64..50, k in 1i64..7, neg in any::<bool>()) {
        prop_assume!(a != 0 || b != 0);
        let s = if neg { -k } else { k };
        prop_assert_eq!(IntLine::new(a * s, b * s, d * s).unwrap(), IntLine::new(a, b, d).unwrap());
    }

    #[test]
    fn intersections_lie_on_both_lines(
        a1 in -9i64..9, b1 in -9i64..9, d1 in -9i64..9,
        a2 in -9i64..9, b2 in -9i64..9, d2 in -9i64..9,
    ) {
        prop_assume!((a1, b1) != (0, 0) && (a2, b2) != (0, 0));
        let (l1, l2) = (IntLine::new(a1, b1, d1).unwrap(), IntLine::new(a2, b2, d2).unwrap());
        match intersect(&l1, &l2) {
            Some(p) => {
                prop_assert!(l1.contains(&p) && l2.contains(&p));
                prop_assert_eq!(intersect(&l2, &l1), Some(p));
            }
            None => prop_assert!(l1.is_parallel(&l2)),
        }
    }
}
