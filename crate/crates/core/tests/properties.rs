use numsemi::conjecture::{
    change_of_rings, classify, enumerate_ideals, is_stable, membership_conditions,
    residue_conditions, search, DEFAULT_CAP,
};
use numsemi::torsion::{
    inverse_square_defect, syzygy_generators, torsion_length, torsion_self, torsion_two_generated,
};
use numsemi::{MonomialIdeal, NumericalSemigroup};
use proptest::prelude::*;

fn semigroup_strategy() -> impl Strategy<Value = NumericalSemigroup> {
    (2i64..9, prop::collection::vec(0i64..16, 0..4)).prop_map(|(e, extra)| {
        let mut gens = vec![e, e + 1];
        gens.extend(extra.into_iter().map(|x| e + 2 + x));
        NumericalSemigroup::new(&gens).unwrap()
    })
}

fn ideal_strategy() -> impl Strategy<Value = (NumericalSemigroup, Vec<i64>, Vec<i64>)> {
    (
        semigroup_strategy(),
        prop::collection::vec(-6i64..30, 1..5),
        prop::collection::vec(-6i64..30, 1..5),
    )
}

/// Subset-sum membership, independent of the Apéry-set construction.
fn generated(gens: &[i64], n: i64) -> bool {
    if n < 0 {
        return false;
    }
    let mut reach = vec![false; n as usize + 1];
    reach[0] = true;
    for k in 1..=n as usize {
        reach[k] = gens.iter().any(|&g| g as usize <= k && reach[k - g as usize]);
    }
    reach[n as usize]
}

/// Exponent set of `J : I` by the definition `{x : x + E_I ⊆ E_J}`, scanning
/// `E_I` well past both tails.
fn colon_by_definition(j: &MonomialIdeal, i: &MonomialIdeal, n: i64) -> bool {
    let end = i.tail_start().max(j.tail_start()) + 2 * i.semigroup().conductor() + 10;
    (i.offset()..end).all(|m| !i.contains(m) || j.contains(n + m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn membership_matches_subset_sum(h in semigroup_strategy()) {
        let gens = h.generators().to_vec();
        for n in -2..=3 * h.conductor() + 3 {
            prop_assert_eq!(h.contains(n), generated(&gens, n), "n = {}", n);
        }
        let gaps = h.gaps();
        if let Some(&a) = gaps.last() {
            prop_assert_eq!(a, h.frobenius());
        }
        prop_assert!(!h.contains(h.frobenius()));
        prop_assert!(h.conductor() <= 2 * h.genus() as i64);
    }

    #[test]
    fn generators_are_minimal(h in semigroup_strategy()) {
        let gens = h.generators().to_vec();
        for k in 0..gens.len() {
            let rest: Vec<i64> = gens.iter().enumerate().filter(|&(x, _)| x != k).map(|(_, &g)| g).collect();
            prop_assert!(!generated(&rest, gens[k]));
        }
    }

    #[test]
    fn alphas_are_residue_maxima(h in semigroup_strategy()) {
        let p = h.alpha_profile().unwrap();
        let e = h.multiplicity();
        prop_assert_eq!(p.values.len() as i64, e - 1);
        prop_assert_eq!(p.a, h.frobenius());
        let mut residues: Vec<i64> = p.values.iter().map(|v| v.rem_euclid(e)).collect();
        residues.sort();
        residues.dedup();
        prop_assert_eq!(residues.len() as i64, e - 1);
        for &(i, alpha) in &p.alphas {
            prop_assert!(alpha >= i);
            prop_assert!(!h.contains(alpha) && h.contains(alpha + e));
        }
        let socle = h.generators().iter().all(|&g| h.contains(p.b + g));
        prop_assert_eq!(h.min_alpha_in_socle().unwrap(), socle);
    }

    #[test]
    fn ideals_are_closed_and_canonical((h, gi, _) in ideal_strategy()) {
        let i = MonomialIdeal::from_generators(&h, &gi).unwrap();
        for n in i.offset()..i.tail_start() + 5 {
            for &g in h.generators() {
                prop_assert!(!i.contains(n) || i.contains(n + g));
            }
        }
        prop_assert!(i.contains(i.offset()) && !i.contains(i.offset() - 1));
        if i.tail_start() > i.offset() {
            prop_assert!(!i.contains(i.tail_start() - 1));
        }
        // the minimal generators regenerate the ideal
        let again = MonomialIdeal::from_generators(&h, i.minimal_generators()).unwrap();
        prop_assert_eq!(&again, &i);
        prop_assert!(i.mu() >= 1);
    }

    #[test]
    fn colon_matches_definition((h, gi, gj) in ideal_strategy()) {
        let i = MonomialIdeal::from_generators(&h, &gi).unwrap();
        let j = MonomialIdeal::from_generators(&h, &gj).unwrap();
        let c = j.colon(&i).unwrap();
        for n in c.offset() - 3..c.tail_start() + 3 {
            prop_assert_eq!(c.contains(n), colon_by_definition(&j, &i, n), "n = {}", n);
        }
    }

    #[test]
    fn product_laws((h, gi, gj) in ideal_strategy(), gk in prop::collection::vec(-3i64..20, 1..3)) {
        let i = MonomialIdeal::from_generators(&h, &gi).unwrap();
        let j = MonomialIdeal::from_generators(&h, &gj).unwrap();
        let k = MonomialIdeal::from_generators(&h, &gk).unwrap();
        let r = MonomialIdeal::ring(&h);
        prop_assert_eq!(i.product(&j).unwrap(), j.product(&i).unwrap());
        prop_assert_eq!(
            i.product(&j).unwrap().product(&k).unwrap(),
            i.product(&j.product(&k).unwrap()).unwrap()
        );
        prop_assert_eq!(i.product(&r).unwrap(), i.clone());
        // Minkowski sum checked pointwise
        let p = i.product(&j).unwrap();
        for n in p.offset() - 2..p.tail_start() + 2 {
            let brute = (i.offset()..=n - j.offset()).any(|a| i.contains(a) && j.contains(n - a));
            prop_assert_eq!(p.contains(n), brute);
        }
    }

    #[test]
    fn reflexive_and_canonical((h, gi, _) in ideal_strategy()) {
        let i = MonomialIdeal::from_generators(&h, &gi).unwrap();
        prop_assert_eq!(i.dual().dual(), i.clone());
        let k = MonomialIdeal::canonical(&h);
        let a = h.frobenius();
        // generators of K_R are a - s for the pseudo-Frobenius numbers s
        let mut expected: Vec<i64> = h.pseudo_frobenius_numbers().iter().map(|s| a - s).collect();
        expected.sort();
        prop_assert_eq!(k.minimal_generators(), &expected[..]);
        prop_assert!(k.contains_ideal(&MonomialIdeal::ring(&h)));
        prop_assert!(MonomialIdeal::normalization(&h).contains_ideal(&k));
    }

    #[test]
    fn end_ring_matches_brute_force((h, gi, _) in ideal_strategy()) {
        let i = MonomialIdeal::from_generators(&h, &gi).unwrap();
        let b = i.end_ring();
        for n in 0..h.conductor() + 20 {
            prop_assert_eq!(b.semigroup.contains(n), colon_by_definition(&i, &i, n));
        }
        for n in 0..h.conductor() {
            prop_assert!(!h.contains(n) || b.semigroup.contains(n));
        }
        prop_assert!(b.canonical_over_r.is_shift_of(&MonomialIdeal::canonical(&b.semigroup)));
    }

    #[test]
    fn graded_route_agrees_with_colon_route(h in semigroup_strategy(), gap_pick in 0usize..64, gj in prop::collection::vec(-6i64..30, 1..5), shift in -7i64..7) {
        let gaps = h.gaps();
        let c = gaps[gap_pick % gaps.len()];
        let i = MonomialIdeal::from_generators(&h, &[shift, shift + c]).unwrap();
        prop_assert_eq!(i.mu(), 2);
        let j = MonomialIdeal::from_generators(&h, &gj).unwrap();
        let general = torsion_length(&i, &j).unwrap();
        let two = torsion_two_generated(&i, &j).unwrap();
        prop_assert_eq!(general.length, two.length);
        let shifted: Vec<i64> = two.witness_degrees.iter().map(|x| x + 2 * shift + c).collect();
        prop_assert_eq!(general.witness_degrees, shifted);
        prop_assert!(general.per_degree.iter().all(|&(_, k)| k == 1));
    }

    #[test]
    fn torsion_invariances((h, gi, gj) in ideal_strategy(), q in -9i64..9) {
        let i = MonomialIdeal::from_generators(&h, &gi).unwrap();
        let j = MonomialIdeal::from_generators(&h, &gj).unwrap();
        let r = MonomialIdeal::ring(&h);
        let base = torsion_length(&i, &j).unwrap();
        prop_assert_eq!(torsion_length(&i.shift(q), &j).unwrap().length, base.length);
        prop_assert_eq!(torsion_length(&i, &j.shift(q)).unwrap().length, base.length);
        prop_assert!(torsion_length(&i, &r).unwrap().torsionfree);
        prop_assert!(torsion_length(&r, &j).unwrap().torsionfree);
        prop_assert_eq!(base.length, base.per_degree.iter().map(|&(_, k)| k).sum::<u64>());
        prop_assert_eq!(base.torsionfree, base.length == 0);
        if let (Some(&(first, _)), Some(&(last, _))) = (base.per_degree.first(), base.per_degree.last()) {
            let syz = syzygy_generators(&i);
            let stop = syz.iter().map(|s| s.degree).max().unwrap() + j.tail_start();
            prop_assert!(first >= i.offset() + j.offset());
            prop_assert!(last < stop);
        }
        prop_assert_eq!(torsion_self(&i).torsionfree, torsion_self(&i.dual()).torsionfree);
    }

    #[test]
    fn syzygy_degrees_lie_in_both_cosets((h, gi, _) in ideal_strategy()) {
        let i = MonomialIdeal::from_generators(&h, &gi).unwrap();
        let gens = i.minimal_generators();
        for s in syzygy_generators(&i) {
            prop_assert!(h.contains(s.degree - gens[s.pair.0]));
            prop_assert!(h.contains(s.degree - gens[s.pair.1]));
        }
    }

    #[test]
    fn inverse_defect_is_torsion_against_inverse(h in semigroup_strategy(), gap_pick in 0usize..64) {
        let gaps = h.gaps();
        let i = MonomialIdeal::from_generators(&h, &[0, gaps[gap_pick % gaps.len()]]).unwrap();
        let inverse = MonomialIdeal::ring(&h).colon(&i).unwrap();
        prop_assert_eq!(
            inverse_square_defect(&i).unwrap().length,
            torsion_two_generated(&i, &inverse).unwrap().length
        );
    }

    #[test]
    fn json_round_trips((h, gi, _) in ideal_strategy()) {
        let text = serde_json::to_string(&h).unwrap();
        let back: NumericalSemigroup = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &h);
        let i = MonomialIdeal::from_generators(&h, &gi).unwrap();
        let rec: numsemi::ideal::IdealRecord = serde_json::from_str(&serde_json::to_string(&i.record()).unwrap()).unwrap();
        prop_assert_eq!(MonomialIdeal::from_record(&h, &rec).unwrap(), i.clone());
        let rep = torsion_self(&i);
        let back: numsemi::TorsionReport = serde_json::from_str(&serde_json::to_string(&rep).unwrap()).unwrap();
        prop_assert_eq!(back, rep);
    }
}

#[test]
fn semigroup_json_layout() {
    let h = NumericalSemigroup::new(&[2, 3]).unwrap();
    assert_eq!(
        serde_json::to_string(&h).unwrap(),
        r#"{"generators":[2,3],"frobenius":1,"conductor":2,"multiplicity":2,"genus":1,"gaps":[1]}"#
    );
    let bad = r#"{"generators":[2,3],"frobenius":5,"conductor":2,"multiplicity":2,"genus":1,"gaps":[1]}"#;
    assert!(serde_json::from_str::<NumericalSemigroup>(bad).is_err());
}

#[test]
fn enumeration_matches_subset_filter() {
    let h = NumericalSemigroup::new(&[8, 11, 14, 15]).unwrap();
    let gaps = h.gaps();
    assert_eq!(gaps.len(), 15);
    let mut closed = 0;
    for mask in 0u32..1 << gaps.len() {
        let inside = |n: i64| h.contains(n) || gaps.iter().position(|&g| g == n).is_some_and(|k| mask >> k & 1 == 1);
        let ok = gaps.iter().enumerate().all(|(k, &g)| {
            mask >> k & 1 == 0 || h.generators().iter().all(|&a| inside(g + a))
        });
        if ok {
            closed += 1;
        }
    }
    let ideals = enumerate_ideals(&h, DEFAULT_CAP).unwrap();
    assert_eq!(ideals.len(), closed);
    let mut distinct = ideals.clone();
    distinct.dedup();
    assert_eq!(distinct.len(), ideals.len());
    assert!(ideals.iter().all(|i| i.offset() == 0));
}


#[test]
fn factorization_hits_satisfy_arithmetic_conditions() {
    let list = [
        vec![8, 9, 10, 13],
        vec![8, 11, 12, 13],
        vec![8, 11, 14, 15],
        vec![8, 11, 14, 23],
        vec![8, 13, 17, 18],
        vec![8, 13, 18, 25],
        vec![9, 10, 11, 12, 15],
    ];
    for gens in list {
        let h = NumericalSemigroup::new(&gens).unwrap();
        let rep = search(&h, DEFAULT_CAP).unwrap();
        assert!(!rep.factorization_hits.is_empty(), "{h}");
        for hit in &rep.factorization_hits {
            let i = MonomialIdeal::from_generators(&h, &hit.generators).unwrap();
            assert_eq!(membership_conditions(&i).unwrap(), [true; 6], "{i:?}");
            assert_eq!(residue_conditions(&i).unwrap(), [true; 2], "{i:?}");
            assert!(h.multiplicity() >= 8);
        }
    }
}

#[test]
fn stable_torsionfree_ideals_are_principal() {
    for h in NumericalSemigroup::all_up_to_genus(8, i64::MAX) {
        for i in enumerate_ideals(&h, DEFAULT_CAP).unwrap() {
            if is_stable(&i) && torsion_self(&i).torsionfree {
                assert_eq!(i.mu(), 1, "{i:?}");
            }
        }
    }
}

#[test]
fn change_of_rings_is_consistent() {
    for gens in [vec![9, 10, 11, 12, 15], vec![8, 11, 14, 15], vec![5, 6, 7, 8], vec![4, 6, 7]] {
        let h = NumericalSemigroup::new(&gens).unwrap();
        for i in enumerate_ideals(&h, DEFAULT_CAP).unwrap() {
            let c = change_of_rings(&i);
            assert!(c.consistent, "{i:?}");
            assert_eq!(c.over_end_ring.end_semigroup, c.end_ring);
        }
    }
}

#[test]
fn gorenstein_family_end_rings_contain_frobenius() {
    for a in 3..=6i64 {
        let gens: Vec<i64> = (a..=2 * a - 2).collect();
        let h = NumericalSemigroup::new(&gens).unwrap();
        assert_eq!(h.frobenius(), 2 * a - 1);
        for i in enumerate_ideals(&h, DEFAULT_CAP).unwrap() {
            if i.mu() > 1 {
                assert!(i.end_ring().semigroup.contains(2 * a - 1), "{i:?}");
            }
            let inverse = MonomialIdeal::ring(&h).colon(&i).unwrap();
            if torsion_length(&i, &inverse).unwrap().torsionfree {
                assert_eq!(i.mu(), 1, "{i:?}");
            }
        }
    }
}

#[test]
fn torsionfree_nontrivial_ideals_factor_the_canonical_ideal() {
    for h in NumericalSemigroup::all_up_to_genus(9, i64::MAX) {
        for i in enumerate_ideals(&h, DEFAULT_CAP).unwrap() {
            let c = classify(&i);
            if c.torsionfree && c.mu >= 2 && c.mu_dual >= 2 {
                assert!(c.factors_canonical, "{i:?}");
            }
        }
    }
}

#[test]
fn small_multiplicity_has_no_counterexamples() {
    let reports = numsemi::conjecture::scan(7, 15, DEFAULT_CAP).unwrap();
    assert_eq!(reports.len(), 1711);
    for rep in &reports {
        assert!(rep.counterexamples.is_empty(), "{}", rep.semigroup);
    }
}

#[test]
fn interval_semigroups_have_no_counterexamples() {
    for a in 2..=6i64 {
        let gens: Vec<i64> = (a..2 * a).collect();
        let rep = search(&NumericalSemigroup::new(&gens).unwrap(), DEFAULT_CAP).unwrap();
        assert!(rep.counterexamples.is_empty(), "{}", rep.semigroup);
    }
}

#[test]
fn socle_hypothesis_excludes_nontrivial_factorizations() {
    for h in NumericalSemigroup::all_up_to_genus(10, i64::MAX) {
        if h.multiplicity() < 2 || !h.min_alpha_in_socle().unwrap() {
            continue;
        }
        for i in enumerate_ideals(&h, DEFAULT_CAP).unwrap() {
            let c = classify(&i);
            if c.torsionfree && c.factors_canonical {
                assert!(c.is_principal || c.is_canonical, "{i:?}");
            }
        }
    }
}
