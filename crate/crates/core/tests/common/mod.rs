//! Shared curve constructors for the integration tests: the two admissible
//! curves over Z[ω], the three explicit non-admissible equations over Z[i]
//! and Z[√-2], and the eight good-reduction-everywhere curves over real
//! quadratic fields.

#![allow(dead_code)]

use kummerlab_core::numring::NumberRing;
use kummerlab_core::weierstrass::WeierstrassModel;

/// y² = x³ ± (1+ω)x² + ωx over Z[ω].
pub fn pinch(sign: i64) -> WeierstrassModel {
    let r = NumberRing::quadratic(-3).unwrap();
    let a2 = r.quad(1, 1).mul_i64(sign);
    WeierstrassModel::new(r, [r.zero(), a2, r.zero(), r.quad(0, 1), r.zero()]).unwrap()
}

/// y² + (1+i)xy = x³ + ix² + 2x + 3i over Z[i].
pub fn reject_gaussian() -> WeierstrassModel {
    let g = NumberRing::quadratic(-1).unwrap();
    WeierstrassModel::new(
        g,
        [g.quad(1, 1), g.quad(0, 1), g.zero(), g.from_i64(2), g.quad(0, 3)],
    )
    .unwrap()
}

/// y² + πxy = x³ - x² - 2x + 3 over Z[√-2], π = √-2.
pub fn reject_sqrt_m2_first() -> WeierstrassModel {
    let r = NumberRing::quadratic(-2).unwrap();
    let pi = r.quad(0, 1);
    WeierstrassModel::new(
        r,
        [pi, r.from_i64(-1), r.zero(), r.from_i64(-2), r.from_i64(3)],
    )
    .unwrap()
}

/// y² + πxy + πy = x³ - x² - x over Z[√-2].
pub fn reject_sqrt_m2_second() -> WeierstrassModel {
    let r = NumberRing::quadratic(-2).unwrap();
    let pi = r.quad(0, 1);
    WeierstrassModel::new(
        r,
        [pi.clone(), r.from_i64(-1), pi, r.from_i64(-1), r.zero()],
    )
    .unwrap()
}

/// The eight curves y² = x³ + a₂x² + a₄x with good reduction everywhere
/// over the quadratic fields of discriminant 28, 41, 65, indexed 0..8.
pub fn table_curve(idx: usize) -> WeierstrassModel {
    let (ring, a2, a4) = table_data(idx);
    WeierstrassModel::new(ring, [ring.zero(), a2.clone(), ring.zero(), a4.clone(), ring.zero()])
        .unwrap()
}

pub fn table_field_m(idx: usize) -> i64 {
    [7, 7, 41, 41, 65, 65, 65, 65][idx]
}

fn table_data(idx: usize) -> (NumberRing, kummerlab_core::RingElement, kummerlab_core::RingElement) {
    match idx {
        // d_F = 28, ε = 8 + 3√7: a₂ = -(1+2ε²), a₄ = 16ε³
        0 => {
            let r = NumberRing::quadratic(7).unwrap();
            (r, r.quad_sqrt_basis(-255, -96), r.quad_sqrt_basis(32384, 12240))
        }
        // conjugate
        1 => {
            let r = NumberRing::quadratic(7).unwrap();
            (r, r.quad_sqrt_basis(-255, 96), r.quad_sqrt_basis(32384, -12240))
        }
        // d_F = 41, ε = 32 + 5√41: a₂ = (3ε-1)/2, a₄ = (ε²-ε)/2 (θ-basis)
        2 => {
            let r = NumberRing::quadratic(41).unwrap();
            (r, r.quad(40, 15), r.quad(851, 315))
        }
        // a₂ = (-3ε⁻¹-1)/2, a₄ = (ε⁻²+ε⁻¹)/2
        3 => {
            let r = NumberRing::quadratic(41).unwrap();
            (r, r.quad(55, -15), r.quad(1166, -315))
        }
        // d_F = 65, ε = 8 + √65: a₂ = 2ε²-1, a₄ = 16ε³
        4 => {
            let r = NumberRing::quadratic(65).unwrap();
            (r, r.quad_sqrt_basis(257, 32), r.quad_sqrt_basis(33152, 4112))
        }
        // a₂ = 10ε²-5, a₄ = 400ε³ (quadratic twist by 5)
        5 => {
            let r = NumberRing::quadratic(65).unwrap();
            (r, r.quad_sqrt_basis(1285, 160), r.quad_sqrt_basis(828800, 102800))
        }
        // a₂ = 8ε+1, a₄ = 16ε²
        6 => {
            let r = NumberRing::quadratic(65).unwrap();
            (r, r.quad_sqrt_basis(65, 8), r.quad_sqrt_basis(2064, 256))
        }
        // a₂ = 40ε+5, a₄ = 400ε²
        7 => {
            let r = NumberRing::quadratic(65).unwrap();
            (r, r.quad_sqrt_basis(325, 40), r.quad_sqrt_basis(51600, 6400))
        }
        _ => panic!("table has eight curves"),
    }
}
