mod common;

use common::{point, pythagorean, random_poly, rng};
use num_bigint::BigInt;
use num_traits::Zero;
use polargroup::exactnum::{factor_gaussian, hilbert90, GaussianInteger, GaussianRational};
use polargroup::polyalg::{gcd_monic, LaurentQi, PolyQi, RatFuncQi};
use polargroup::splitter::{split_poly, split_ratfunc, Split, SplitForm};
use proptest::prelude::*;
use rand::Rng;

fn is_prime(n: &BigInt) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return false;
        }
        d += 1;
    }
    true
}

#[test]
fn conj_is_an_involutive_ring_homomorphism() {
    let mut r = rng(1);
    for _ in 0..10_000 {
        let (a, b) = (point(&mut r), point(&mut r));
        assert_eq!(a.conj().conj(), a);
        assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }
}

#[test]
fn norm_is_z_times_conj_and_multiplicative() {
    let mut r = rng(2);
    for _ in 0..10_000 {
        let (a, b) = (point(&mut r), point(&mut r));
        assert_eq!(GaussianRational::real(a.norm_sq()), &a * &a.conj());
        assert_eq!((&a * &b).norm_sq(), a.norm_sq() * b.norm_sq());
    }
}

#[test]
fn hilbert90_solves_conj_u_over_u() {
    let mut r = rng(3);
    for _ in 0..1_000 {
        let w = pythagorean(&mut r);
        let u = hilbert90(&w).unwrap();
        assert_eq!(u.conj().checked_div(&u).unwrap(), w);
    }
    assert!(hilbert90(&GaussianRational::from_int(2)).is_err());
}

proptest! {
    #[test]
    fn gaussian_factorization_reassembles(a in -400i64..400, b in -400i64..400) {
        prop_assume!(a != 0 || b != 0);
        let n = GaussianInteger::new(a, b);
        let f = factor_gaussian(&n).unwrap();
        prop_assert_eq!(f.product(), n);
        prop_assert!(f.unit.is_unit());
        for (p, _) in &f.factors {
            let norm = p.norm();
            // a Gaussian prime has prime norm, or norm q^2 for a rational prime q = 3 mod 4
            let ok = is_prime(&norm) || {
                let q = num_integer::Roots::sqrt(&norm);
                &q * &q == norm && is_prime(&q) && (&q % 4u32) == BigInt::from(3)
            };
            prop_assert!(ok, "{} has norm {}", p, norm);
            prop_assert_eq!(p.canonical_associate().0, p.clone());
        }
    }

    #[test]
    fn gcd_is_a_common_divisor(s1 in any::<u64>()) {
        let mut r = rng(s1);
        let (f, g, h) = (random_poly(&mut r, 4), random_poly(&mut r, 4), random_poly(&mut r, 2));
        prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
        let d = gcd_monic(&f, &g).unwrap();
        prop_assert!(f.div_exact(&d).is_some());
        prop_assert!(g.div_exact(&d).is_some());
        let dh = gcd_monic(&(&f * &h), &(&g * &h)).unwrap();
        prop_assert_eq!(dh, (&d * &h).monic());
    }
}

#[test]
fn real_imag_split_reassembles() {
    let mut r = rng(4);
    for _ in 0..10_000 {
        let f = random_poly(&mut r, 5);
        let pair = f.real_imag_split();
        assert!(pair.f1.is_real() && pair.f2.is_real());
        assert_eq!(pair.reassemble_poly(), f);
    }
}

#[test]
fn norm_trace_match_the_matrix_form() {
    let mut r = rng(5);
    for _ in 0..2_000 {
        let f = random_poly(&mut r, 5);
        let pair = f.real_imag_split();
        let (norm, trace) = f.norm_trace();
        assert_eq!(norm, &(&pair.f1 * &pair.f1) + &(&pair.f2 * &pair.f2));
        assert_eq!(trace, pair.f1.scale(&GaussianRational::from_int(2)));
    }
}

#[test]
fn laurent_agrees_with_polynomials() {
    let mut r = rng(6);
    for _ in 0..2_000 {
        let (p, q) = (random_poly(&mut r, 4), random_poly(&mut r, 4));
        if p.is_zero() || q.is_zero() {
            continue;
        }
        let (a, b) = (r.gen_range(-3..=3), r.gen_range(-3..=3));
        let lp = LaurentQi::new(a, p.clone()).unwrap();
        let lq = LaurentQi::new(b, q.clone()).unwrap();
        let prod = &lp * &lq;
        // clear t^order on both sides
        let cleared = RatFuncQi::from_laurent(&prod);
        let expect = &RatFuncQi::from_poly(&p * &q) * &RatFuncQi::var_pow(a + b);
        assert_eq!(cleared, expect);
        assert_eq!(prod.order() - (a + b), (&p * &q).low_order() as i64);
    }
}

fn random_split<R: Rng>(r: &mut R) -> SplitForm {
    let roots: Vec<(GaussianRational, i64)> = (0..r.gen_range(0..5)).map(|_| (point(r), r.gen_range(1..=3))).collect();
    let mut s = SplitForm::unit_only(common::nonzero_scalar(r));
    for (z, e) in roots {
        s = s.mul(&SplitForm::new(GaussianRational::one(), 0, [(z, e)]));
    }
    s
}

#[test]
fn split_inverts_assemble() {
    let mut r = rng(7);
    for _ in 0..1_000 {
        let s = random_split(&mut r);
        let f = s.assemble_poly().unwrap();
        match split_poly(&f).unwrap() {
            Split::Full(back) => assert_eq!(back.absorb_zero_root(), s.clone().absorb_zero_root()),
            Split::Partial(p) => panic!("residual {}", p.residual),
        }
    }
}

#[test]
fn split_commutes_with_conj_and_products() {
    let mut r = rng(8);
    for _ in 0..500 {
        let (s, t) = (random_split(&mut r), random_split(&mut r));
        let f = s.assemble();
        let g = t.assemble();
        let sf = split_ratfunc(&f, false).unwrap();
        assert_eq!(split_ratfunc(&f.conj(), false).unwrap(), sf.conj());
        let sg = split_ratfunc(&g, false).unwrap();
        assert_eq!(split_ratfunc(&(&f * &g), false).unwrap(), sf.mul(&sg));
    }
}

#[test]
fn irrational_roots_are_certified() {
    let cases: [&[i64]; 20] = [
        &[-2, 0, 1],
        &[-3, 0, 1],
        &[2, 0, 1],
        &[-5, 0, 1],
        &[1, 1, 1],
        &[-1, -1, 1],
        &[-2, 0, 0, 1],
        &[1, 0, 0, 0, 1],
        &[-6, 0, 1],
        &[3, 0, 1],
        &[-2, 0, 0, 0, 1],
        &[1, 0, 1, 0, 1],
        &[-7, 0, 1],
        &[5, 0, 1],
        &[1, 3, 1],
        &[-10, 0, 1],
        &[3, 2, 1],
        &[-3, 0, 0, 1],
        &[6, 0, 1],
        &[-1, 1, 0, 1],
    ];
    for c in cases {
        let f = PolyQi::from_ints(c);
        match split_poly(&f).unwrap() {
            Split::Partial(p) => assert!(p.residual.degree().unwrap() >= 2),
            Split::Full(_) => panic!("{} split over Q(i)", f),
        }
    }
}
