use std::collections::BTreeSet;

use proptest::prelude::*;

use monosize::polarization::{enumerate_top_bases, PowerMatrix};
use monosize::{
    apply_deformation, build_top_base, find_generic_deformation, irreducible_decomposition, irredundantize,
    is_generic, is_strongly_generic, minimal_covers, minimalize, parse_ideal, polarize, polarize_component,
    predict_equality, radical, recompose, size, size_of_decomposition, size_of_polarization,
    validate_deformation, Decomposition, IrreducibleComponent, Monomial, MonomialIdeal,
};

fn exponent_rows(n: usize, max_rows: usize, max_exp: u32) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_rows)
}

/// A proper nonzero ideal in `n <= max_n` variables.
fn ideal_in(max_n: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n)
        .prop_flat_map(move |n| (Just(n), exponent_rows(n, max_gens, max_exp)))
        .prop_map(|(n, rows)| minimalize(rows.into_iter().map(Monomial::new), n).unwrap())
        .prop_filter("proper and nonzero", |i| i.ensure_proper().is_ok())
}

fn small_ideal() -> impl Strategy<Value = MonomialIdeal> {
    ideal_in(4, 4, 3)
}

/// Two or three ideals in the same ambient ring.
fn ideals_sharing_ambient(count: usize) -> impl Strategy<Value = Vec<MonomialIdeal>> {
    (1..=3usize).prop_flat_map(move |n| {
        prop::collection::vec(exponent_rows(n, 3, 3), count).prop_map(move |all| {
            all.into_iter().map(|rows| minimalize(rows.into_iter().map(Monomial::new), n).unwrap()).collect()
        })
    })
}

/// A decomposition drawn as random components.
fn small_decomposition() -> impl Strategy<Value = Decomposition> {
    (1..=4usize).prop_flat_map(|n| (Just(n), exponent_rows(n, 4, 3))).prop_filter_map(
        "some nonzero component",
        |(n, rows)| {
            let comps: Vec<IrreducibleComponent> =
                rows.into_iter().filter_map(|r| IrreducibleComponent::new(r).ok()).collect();
            irredundantize(comps, n).ok()
        },
    )
}

fn box_monomials(n: usize, max: u32) -> Vec<Monomial> {
    let side = max + 1;
    (0..side.pow(n as u32))
        .map(|code| Monomial::new((0..n).map(|k| (code / side.pow(k as u32)) % side).collect()))
        .collect()
}

fn has_nested_primes(d: &Decomposition) -> bool {
    let supports: Vec<BTreeSet<usize>> = d.components().iter().map(|c| c.support().collect()).collect();
    supports.iter().any(|a| supports.iter().any(|b| a != b && a.is_subset(b)))
}

/// `v` by trying subsets in order of increasing cardinality.
fn v_by_enumeration(d: &Decomposition) -> usize {
    let supports: Vec<BTreeSet<usize>> = d.components().iter().map(|c| c.support().collect()).collect();
    let total: BTreeSet<usize> = supports.iter().flatten().copied().collect();
    let r = supports.len();
    (1..=r)
        .find(|&k| {
            (0u32..1 << r).filter(|mask| mask.count_ones() as usize == k).any(|mask| {
                let u: BTreeSet<usize> = (0..r)
                    .filter(|i| mask & (1 << i) != 0)
                    .flat_map(|i| supports[i].iter().copied())
                    .collect();
                u == total
            })
        })
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn intersection_laws(ideals in ideals_sharing_ambient(3)) {
        let (a, b, c) = (&ideals[0], &ideals[1], &ideals[2]);
        prop_assert_eq!(a.intersect(b).unwrap(), b.intersect(a).unwrap());
        prop_assert_eq!(
            a.intersect(&b.intersect(c).unwrap()).unwrap(),
            a.intersect(b).unwrap().intersect(c).unwrap()
        );
        prop_assert_eq!(&a.intersect(a).unwrap(), a);
    }

    #[test]
    fn membership_in_intersection_and_sum(ideals in ideals_sharing_ambient(2)) {
        let (a, b) = (&ideals[0], &ideals[1]);
        let meet = a.intersect(b).unwrap();
        let join = a.sum(b).unwrap();
        for m in box_monomials(a.n(), 4) {
            let (in_a, in_b) = (a.contains(&m).unwrap(), b.contains(&m).unwrap());
            prop_assert_eq!(meet.contains(&m).unwrap(), in_a && in_b);
            prop_assert_eq!(join.contains(&m).unwrap(), in_a || in_b);
        }
    }

    #[test]
    fn minimalize_is_idempotent_and_order_free(
        n in 1..=3usize,
        rows in exponent_rows(3, 6, 3),
        seed in any::<u64>(),
    ) {
        let gens: Vec<Monomial> = rows.into_iter().map(|r| Monomial::new(r[..n].to_vec())).collect();
        let once = minimalize(gens.clone(), n).unwrap();
        prop_assert_eq!(&minimalize(once.generators().to_vec(), n).unwrap(), &once);
        let mut shuffled = gens;
        let len = shuffled.len();
        shuffled.rotate_left((seed as usize) % len);
        shuffled.reverse();
        prop_assert_eq!(minimalize(shuffled, n).unwrap(), once);
    }

    #[test]
    fn decomposition_round_trip(ideal in ideal_in(5, 5, 4)) {
        let d = irreducible_decomposition(&ideal).unwrap();
        prop_assert_eq!(recompose(&d), ideal);
        for (i, a) in d.components().iter().enumerate() {
            for (j, b) in d.components().iter().enumerate() {
                prop_assert!(i == j || !a.is_subset_of(b));
            }
        }
    }

    #[test]
    fn irredundantize_ignores_order(d in small_decomposition(), extra in exponent_rows(4, 3, 3), shift in 0..8usize) {
        // add redundant copies and supersets, then scramble
        let mut comps = d.components().to_vec();
        for row in extra {
            if let Ok(c) = IrreducibleComponent::new(row[..d.n()].to_vec()) {
                if d.components().iter().any(|q| q.is_subset_of(&c)) {
                    comps.push(c);
                }
            }
        }
        comps.extend(d.components().iter().cloned());
        let len = comps.len();
        comps.rotate_right(shift % len);
        prop_assert_eq!(irredundantize(comps, d.n()).unwrap(), d);
    }

    #[test]
    fn decomposition_of_recomposed_is_identity(d in small_decomposition()) {
        prop_assert_eq!(irreducible_decomposition(&recompose(&d)).unwrap(), d);
    }

    #[test]
    fn radical_is_squarefree_fixed_point(d in small_decomposition()) {
        let rad = radical(&d);
        prop_assert!(rad.components().iter().all(|c| c.is_squarefree()));
        prop_assert_eq!(&radical(&rad), &rad);
        let minimal: BTreeSet<BTreeSet<usize>> = d
            .components()
            .iter()
            .map(|c| c.support().collect::<BTreeSet<usize>>())
            .collect::<BTreeSet<_>>()
            .iter()
            .filter(|p| !d.components().iter().any(|q| {
                let s: BTreeSet<usize> = q.support().collect();
                s.is_subset(p) && &&s != p
            }))
            .cloned()
            .collect();
        let got: BTreeSet<BTreeSet<usize>> = rad.components().iter().map(|c| c.support().collect()).collect();
        prop_assert_eq!(got, minimal);
    }

    #[test]
    fn extra_variables_add_to_size(ideal in small_ideal(), extra in 1..=3usize) {
        let base = size(&ideal).unwrap();
        let wide = size(&ideal.embed(extra)).unwrap();
        prop_assert_eq!(wide.size, base.size + extra);
        let expected: Vec<usize> = base.inessential.iter().copied().chain(ideal.n() + 1..=ideal.n() + extra).collect();
        prop_assert_eq!(wide.inessential, expected);
    }

    #[test]
    fn more_associated_primes_never_raise_size(d in small_decomposition(), keep in any::<u32>()) {
        let kept: Vec<IrreducibleComponent> = d
            .components()
            .iter()
            .enumerate()
            .filter(|(i, _)| keep & (1 << i) != 0)
            .map(|(_, c)| c.clone())
            .collect();
        prop_assume!(!kept.is_empty());
        let sub = irredundantize(kept, d.n()).unwrap();
        prop_assert!(size_of_decomposition(&sub).unwrap().size >= size_of_decomposition(&d).unwrap().size);
    }

    #[test]
    fn cover_search_matches_enumeration(d in small_decomposition()) {
        let report = size_of_decomposition(&d).unwrap();
        prop_assert_eq!(report.v, v_by_enumeration(&d));
        prop_assert_eq!(report.size, report.v + (report.n - report.h) - 1);
    }

    #[test]
    fn every_listed_cover_covers(d in small_decomposition()) {
        let family = minimal_covers(&d).unwrap();
        let total: BTreeSet<usize> = d.components().iter().flat_map(|c| c.support()).collect();
        prop_assert!(!family.covers.is_empty());
        for cover in &family.covers {
            prop_assert_eq!(cover.len(), family.cardinality);
            let u: BTreeSet<usize> = cover.iter().flat_map(|&i| d.components()[i].support()).collect();
            prop_assert_eq!(&u, &total);
        }
        let sorted = family.covers.windows(2).all(|w| w[0] < w[1]);
        prop_assert!(sorted);
    }

    #[test]
    fn polarization_splits_over_components(d in small_decomposition()) {
        let ideal = recompose(&d);
        let pol = polarize(&ideal).unwrap();
        let pieces: Vec<IrreducibleComponent> = d
            .components()
            .iter()
            .flat_map(|q| polarize_component(q, &pol.bounds).unwrap())
            .collect();
        let joined = recompose(&irredundantize(pieces, pol.n_prime()).unwrap());
        prop_assert_eq!(joined, pol.ideal.clone());
        prop_assert!(pol.ideal.is_squarefree());
        prop_assert_eq!(pol.c, pol.n_prime() - ideal.n());
    }

    #[test]
    fn top_bases_use_distinct_columns_and_column_maxima(d in small_decomposition()) {
        let m = PowerMatrix::from_decomposition(&d);
        let c = m.column_max().iter().map(|&a| a.max(1) as u64).sum::<u64>() - d.n() as u64;
        for tb in enumerate_top_bases(&m).unwrap() {
            let cols: Vec<usize> = tb.entries.iter().flatten().map(|e| e.column).collect();
            let distinct: BTreeSet<usize> = cols.iter().copied().collect();
            prop_assert_eq!(distinct.len(), cols.len());
            for e in tb.entries.iter().flatten() {
                prop_assert!(m.column_max().contains(&e.value));
                prop_assert!(m.is_top_power(e.row, e.column));
            }
            prop_assert!(tb.total() <= c + d.len() as u64);
        }
        prop_assert!(enumerate_top_bases(&m).unwrap().contains(&build_top_base(&m)));
    }

    #[test]
    fn polarization_bound(d in small_decomposition()) {
        let sizes = size_of_polarization(&recompose(&d)).unwrap();
        prop_assert!(sizes.size_p <= sizes.size_i + sizes.c);
    }

    #[test]
    fn missing_column_maximum_forces_strict_inequality(d in small_decomposition()) {
        // only without nested primes; see `missing_column_maximum_with_embedded_prime`
        prop_assume!(!has_nested_primes(&d));
        let m = PowerMatrix::from_decomposition(&d);
        let chosen: BTreeSet<u32> = build_top_base(&m).values().into_iter().collect();
        let missing = m.column_max().iter().any(|&a| a > 1 && !chosen.contains(&a));
        if missing {
            let sizes = size_of_polarization(&recompose(&d)).unwrap();
            prop_assert!(sizes.size_p < sizes.size_i + sizes.c);
        }
    }

    #[test]
    fn predicted_equality_holds(d in small_decomposition()) {
        if predict_equality(&d).unwrap().predicted {
            let sizes = size_of_polarization(&recompose(&d)).unwrap();
            prop_assert!(sizes.is_equality(), "{} {:?}", d, sizes);
        }
    }

    #[test]
    fn synthesized_deformations(ideal in ideal_in(5, 5, 3), seed in any::<u64>()) {
        let eps = find_generic_deformation(&ideal, seed).unwrap();
        prop_assert!(validate_deformation(&ideal, &eps).unwrap());
        let deformed = apply_deformation(&ideal, &eps).unwrap();
        prop_assert!(is_strongly_generic(&deformed));
        prop_assert!(is_generic(&deformed));
        prop_assert_eq!(deformed.generators().len(), ideal.generators().len());
        prop_assert!(size(&ideal).unwrap().size >= size(&deformed).unwrap().size);
    }

    #[test]
    fn strongly_generic_implies_generic(ideal in ideal_in(4, 5, 4)) {
        if is_strongly_generic(&ideal) {
            prop_assert!(is_generic(&ideal));
        }
    }

    #[test]
    fn render_then_parse(ideal in small_ideal()) {
        let text = ideal.to_string();
        let back = monosize::parse_ideal_with(&text, Some(ideal.n()), &monosize::Limits::default()).unwrap();
        prop_assert_eq!(back, ideal.clone());
        let d = irreducible_decomposition(&ideal).unwrap();
        let again = monosize::parse_ideal_with(&d.to_string(), Some(ideal.n()), &monosize::Limits::default()).unwrap();
        prop_assert_eq!(again, ideal);
    }
}

#[test]
fn squarefree_components_are_minimal_primes() {
    let ideal = parse_ideal("(x1*x2, x2*x3, x3*x4)").unwrap();
    let d = irreducible_decomposition(&ideal).unwrap();
    assert_eq!(d.to_string(), "(x2,x4) & (x2,x3) & (x1,x3)");
    assert_eq!(radical(&d), d);
}

#[test]
fn missing_column_maximum_with_embedded_prime() {
    // (x1) & (x1^2,x2^3): the only top base is (0, 3), so the column maximum 2
    // is never chosen, yet I^p = (x1_1) & (x1_2,x2_1) & (x1_2,x2_2) & (x1_2,x2_3)
    // needs all four primes: size 3 = size I + c.
    let d = irredundantize(
        vec![IrreducibleComponent::new(vec![1, 0]).unwrap(), IrreducibleComponent::new(vec![2, 3]).unwrap()],
        2,
    )
    .unwrap();
    assert_eq!(build_top_base(&PowerMatrix::from_decomposition(&d)).values(), vec![0, 3]);
    let sizes = size_of_polarization(&recompose(&d)).unwrap();
    assert_eq!((sizes.size_i, sizes.c, sizes.size_p), (0, 3, 3));
}
