#![allow(dead_code)]

use phi_irred::fppoly::{is_irreducible_mod_p, FpPoly};
use phi_irred::IntPoly;

/// Every monic polynomial of degree `d` over F_p.
pub fn monic_polys(p: u64, d: usize) -> Vec<FpPoly> {
    let count = p.pow(d as u32);
    (0..count)
        .map(|mut idx| {
            let mut coeffs = Vec::with_capacity(d + 1);
            for _ in 0..d {
                coeffs.push(idx % p);
                idx /= p;
            }
            coeffs.push(1);
            FpPoly::new(p, coeffs).unwrap()
        })
        .collect()
}

pub fn lift(f: &FpPoly) -> IntPoly {
    IntPoly::from_i64s(&f.coeffs().iter().map(|&c| c as i64).collect::<Vec<_>>())
}

pub fn divides(g: &FpPoly, f: &FpPoly) -> bool {
    f.rem(g).unwrap().is_zero()
}

/// Irreducibility by trial division with every monic polynomial of degree
/// at most `deg f / 2`.
pub fn irreducible_by_trial_division(f: &FpPoly) -> bool {
    let n = f.degree().unwrap();
    (1..=n / 2).all(|d| monic_polys(f.modulus(), d).iter().all(|g| !divides(g, f)))
}

/// Count of monic polynomials of degree <= 4 over p in {2, 3, 5} on which
/// Rabin's test and trial division disagree, and the number compared.
pub fn rabin_disagreements() -> (usize, usize) {
    let mut compared = 0;
    let mut disagreements = 0;
    for p in [2u64, 3, 5] {
        for d in 1..=4 {
            for f in monic_polys(p, d) {
                compared += 1;
                if is_irreducible_mod_p(&lift(&f), p).unwrap() != irreducible_by_trial_division(&f) {
                    disagreements += 1;
                }
            }
        }
    }
    (disagreements, compared)
}
