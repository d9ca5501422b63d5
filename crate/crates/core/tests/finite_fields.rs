mod common;

use std::collections::BTreeMap;

use phi_irred::fppoly::{distinct_degree_factor_mod_p, FpPoly};

use common::{divides, irreducible_by_trial_division, lift, monic_polys, rabin_disagreements};

#[test]
fn rabin_agrees_with_trial_division() {
    let (bad, compared) = rabin_disagreements();
    assert_eq!(compared, 930);
    assert_eq!(bad, 0);
}

/// Factor-degree multiset by repeatedly stripping the smallest-degree
/// irreducible divisor.
fn brute_force_pattern(f: &FpPoly, irreducibles: &[FpPoly]) -> Vec<(usize, usize)> {
    let mut rest = f.clone();
    let mut tally: BTreeMap<usize, usize> = BTreeMap::new();
    'outer: while rest.degree().unwrap() > 0 {
        for g in irreducibles {
            if divides(g, &rest) {
                rest = rest.divrem(g).unwrap().0;
                *tally.entry(g.degree().unwrap()).or_default() += 1;
                continue 'outer;
            }
        }
        unreachable!("a monic polynomial of positive degree has an irreducible factor");
    }
    tally.into_iter().collect()
}

#[test]
fn distinct_degree_matches_brute_force_mod_7() {
    let irreducibles: Vec<FpPoly> = (1..=4)
        .flat_map(|d| monic_polys(7, d))
        .filter(irreducible_by_trial_division)
        .collect();
    for d in 1..=4 {
        for f in monic_polys(7, d) {
            assert_eq!(
                distinct_degree_factor_mod_p(&lift(&f), 7).unwrap(),
                brute_force_pattern(&f, &irreducibles),
                "f = {:?}",
                f.coeffs()
            );
        }
    }
}

#[test]
fn distinct_degree_on_repeated_factors() {
    // (x+1)^2 (x^2+1) over F_3 and x^5 + 1 = (x+1)^5 over F_5
    let f: phi_irred::IntPoly = "(x+1)^2(x^2+1)".parse().unwrap();
    assert_eq!(distinct_degree_factor_mod_p(&f, 3).unwrap(), vec![(1, 2), (2, 1)]);
    let g: phi_irred::IntPoly = "x^5+1".parse().unwrap();
    assert_eq!(distinct_degree_factor_mod_p(&g, 5).unwrap(), vec![(1, 5)]);
}
