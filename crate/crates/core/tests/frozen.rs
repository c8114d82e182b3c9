//! Values frozen from an independent exact implementation (polynomial
//! remainders modulo Phi_n, brute-force tuple enumeration).

use qmhs::sums::{y_dp, z_dp};
use qmhs::{Composition, MultisetIndex, Rational};

fn coeffs(v: &[&str]) -> Vec<Rational> {
    v.iter().map(|s| s.parse().unwrap()).collect()
}

fn z(n: u32, c: &str) -> Vec<Rational> {
    z_dp(n, &c.parse::<Composition>().unwrap()).unwrap().coeffs()
}

fn y(n: u32, seq: &[i64]) -> Vec<Rational> {
    let mut pairs = std::collections::BTreeMap::new();
    for &e in seq {
        *pairs.entry(e).or_insert(0usize) += 1;
    }
    let pairs: Vec<(i64, usize)> = pairs.into_iter().collect();
    y_dp(n, &MultisetIndex::from_pairs(&pairs).unwrap()).unwrap().coeffs()
}

#[test]
fn frozen_z_values() {
    assert_eq!(z(6, "2,1"), coeffs(&["-23/36", "19/9"]));
    assert_eq!(z(7, "1,-2"), coeffs(&["13", "12", "9", "8", "4", "3"]));
    assert_eq!(z(8, "3,-1,2"), coeffs(&["13/2", "17", "225/16", "205/16"]));
    assert_eq!(z(5, "-3"), coeffs(&["5", "0", "0", "0"]));
    assert_eq!(z(9, "1,2,1"), coeffs(&["0"; 6]));
    assert_eq!(z(12, "2,2"), coeffs(&["517/36", "0", "0", "0"]));
}

#[test]
fn frozen_y_values() {
    let pad = |head: &str, d: usize| {
        let mut v = vec![head];
        v.resize(d, "0");
        coeffs(&v)
    };
    assert_eq!(y(9, &[3, 3]), pad("352/27", 6));
    assert_eq!(y(9, &[3, 1]), pad("-224/9", 6));
    assert_eq!(y(9, &[2, 2, 2, 1, 1]), pad("140/9", 6));
    assert_eq!(y(9, &[2, -1, -1]), pad("-124", 6));
    assert_eq!(y(7, &[3, 2, 1]), pad("-12/7", 6));
    assert_eq!(y(10, &[1, 1, 1, 2]), pad("42/5", 4));
}
