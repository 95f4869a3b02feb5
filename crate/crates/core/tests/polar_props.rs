mod common;

use common::{contexts, element, element_sized, nonzero_scalar, ring_element, rng};
use polargroup::exactnum::GaussianRational;
use polargroup::polar::{
    class_of, delta_membership, localization_map, newly_inverted, polar_factorize, polar_factorize_with,
    projective_include, ClassOrder, FactorMethod, Payload, PolarClass,
};
use polargroup::polyalg::{gcd_monic, RatFuncQi};
use polargroup::ringctx::RingContext;
use polargroup::splitter::split_ratfunc;
use rand::Rng;

/// An element whose class is trivial: unit times a sigma-fixed element.
fn trivial_element<R: Rng>(ctx: &RingContext, r: &mut R) -> RatFuncQi {
    let h = element_sized(ctx, r, 2);
    let mut k = &h * &ctx.apply_sigma(&h);
    k = k.scale(&nonzero_scalar(r));
    match ctx {
        RingContext::AffineLine { inverted } if !inverted.is_empty() => {
            let p = &inverted[r.gen_range(0..inverted.len())];
            k = &k * &RatFuncQi::linear(p).pow(r.gen_range(-2..=2)).unwrap();
        }
        RingContext::CircleForm | RingContext::ImaginaryCircleForm => {
            k = &k * &RatFuncQi::var_pow(r.gen_range(-3..=3));
        }
        RingContext::PrimeLocal { point } => {
            // any element without zeros or poles at the two points is a unit
            let mut w = common::point(r);
            while w == *point || w == point.conj() {
                w = common::point(r);
            }
            k = &k * &RatFuncQi::linear(&w);
        }
        _ => {}
    }
    if *ctx == RingContext::ProjectiveLine && k.degree() != Some(0) {
        let d = k.degree().unwrap();
        k = &k * &RatFuncQi::linear(&GaussianRational::from_int(7)).pow(-d).unwrap();
    }
    k
}

#[test]
fn class_equality_matches_the_oracle() {
    let mut r = rng(21);
    for ctx in contexts() {
        let mut agree = [0usize; 2];
        for _ in 0..300 {
            let f = element(&ctx, &mut r);
            let g = if r.gen_bool(0.5) { &f * &trivial_element(&ctx, &mut r) } else { element(&ctx, &mut r) };
            let eq = class_of(&ctx, &f).unwrap() == class_of(&ctx, &g).unwrap();
            let oracle = ctx.triviality_oracle(&f.checked_div(&g).unwrap()).unwrap();
            assert_eq!(eq, oracle, "{}: f = {}, g = {}", ctx.tag(), f, g);
            agree[eq as usize] += 1;
        }
        assert!(agree[0] > 30 && agree[1] > 30, "{} {:?}", ctx.tag(), agree);
    }
}

#[test]
fn class_of_is_a_homomorphism() {
    let mut r = rng(22);
    for ctx in contexts() {
        for _ in 0..200 {
            let (f, g) = (element_sized(&ctx, &mut r, 3), element_sized(&ctx, &mut r, 3));
            let (cf, cg) = (class_of(&ctx, &f).unwrap(), class_of(&ctx, &g).unwrap());
            assert_eq!(class_of(&ctx, &(&f * &g)).unwrap(), cf.mul(&cg).unwrap(), "{}", ctx.tag());
            assert_eq!(class_of(&ctx, &ctx.apply_sigma(&f)).unwrap(), cf.inv(), "{}", ctx.tag());
            assert_eq!(class_of(&ctx, &cf.representative()).unwrap(), cf, "{}", ctx.tag());
        }
    }
}

fn factorable() -> Vec<RingContext> {
    vec![
        RingContext::line(),
        RingContext::affine_line([GaussianRational::zero()]).unwrap(),
        RingContext::affine_line([GaussianRational::i(), -GaussianRational::i()]).unwrap(),
        RingContext::prime_local(GaussianRational::i()).unwrap(),
        RingContext::CircleForm,
        RingContext::ImaginaryCircleForm,
    ]
}

#[test]
fn polar_factorization_properties() {
    let mut r = rng(23);
    for ctx in factorable() {
        for _ in 0..200 {
            let f = ring_element(&ctx, &mut r, 4);
            let pf = polar_factorize(&ctx, &f).unwrap();
            assert!(ctx.is_sigma_fixed(&pf.real_part), "{} {}", ctx.tag(), f);
            assert!(delta_membership(&ctx, &pf.delta_part).unwrap(), "{} {}", ctx.tag(), f);
            assert_eq!(&pf.real_part * &pf.delta_part, f);
        }
    }
}

#[test]
fn delta_part_is_unique_up_to_units() {
    let mut r = rng(24);
    for ctx in [
        RingContext::line(),
        RingContext::affine_line([GaussianRational::zero()]).unwrap(),
        RingContext::ImaginaryCircleForm,
    ] {
        for _ in 0..200 {
            let f = ring_element(&ctx, &mut r, 4);
            let mut u = RatFuncQi::constant(nonzero_scalar(&mut r));
            if ctx != RingContext::line() {
                u = &u * &RatFuncQi::var_pow(r.gen_range(-2..=2));
            }
            let a = polar_factorize(&ctx, &f).unwrap();
            let b = polar_factorize(&ctx, &(&f * &u)).unwrap();
            assert!(ctx.is_unit(&a.delta_part.checked_div(&b.delta_part).unwrap()), "{} {}", ctx.tag(), f);
            let p = polar_factorize_with(&ctx, &f, FactorMethod::Pairing).unwrap();
            assert!(ctx.is_unit(&a.delta_part.checked_div(&p.delta_part).unwrap()), "{} {}", ctx.tag(), f);
            if ctx == RingContext::line() {
                let monic = |d: &RatFuncQi| d.num().monic();
                assert_eq!(monic(&a.delta_part), monic(&b.delta_part));
            }
        }
    }
}

#[test]
fn delta_is_closed_under_divisors() {
    let mut r = rng(25);
    for ctx in factorable() {
        for _ in 0..300 {
            let (f, g) = (ring_element(&ctx, &mut r, 3), ring_element(&ctx, &mut r, 3));
            if delta_membership(&ctx, &(&f * &g)).unwrap() {
                assert!(delta_membership(&ctx, &f).unwrap() && delta_membership(&ctx, &g).unwrap(), "{}", ctx.tag());
            }
        }
    }
}

#[test]
fn delta_is_closed_under_powers_on_lines() {
    let mut r = rng(26);
    for ctx in &factorable()[..3] {
        let mut hits = 0;
        for _ in 0..200 {
            let f = ring_element(ctx, &mut r, 3);
            if delta_membership(ctx, &f).unwrap() {
                hits += 1;
                for n in 2..=5 {
                    assert!(delta_membership(ctx, &f.pow(n).unwrap()).unwrap(), "{} {}^{}", ctx.tag(), f, n);
                }
            }
        }
        assert!(hits > 20);
    }
}

#[test]
fn coprime_norms_keep_products_in_delta() {
    let mut r = rng(27);
    for ctx in &factorable()[..3] {
        let RingContext::AffineLine { inverted } = ctx else { unreachable!() };
        let mut hits = 0;
        for _ in 0..400 {
            let (f, g) = (ring_element(ctx, &mut r, 3), ring_element(ctx, &mut r, 3));
            if !delta_membership(ctx, &f).unwrap() || !delta_membership(ctx, &g).unwrap() {
                continue;
            }
            let nf = (&f * &ctx.apply_sigma(&f)).num().clone();
            let ng = (&g * &ctx.apply_sigma(&g)).num().clone();
            let common = split_ratfunc(&RatFuncQi::from_poly(gcd_monic(&nf, &ng).unwrap()), false).unwrap();
            if common.roots.keys().all(|z| inverted.contains(z)) {
                hits += 1;
                assert!(delta_membership(ctx, &(&f * &g)).unwrap(), "{}: {} * {}", ctx.tag(), f, g);
            }
        }
        assert!(hits > 20, "{} {}", ctx.tag(), hits);
    }
}

#[test]
fn torsion_lives_only_on_the_circle() {
    let mut r = rng(28);
    for ctx in contexts() {
        for _ in 0..200 {
            let c = class_of(&ctx, &element(&ctx, &mut r)).unwrap();
            let order = c.order();
            if ctx == RingContext::CircleForm {
                if c.free_table().is_empty() && !c.is_identity() {
                    assert_eq!(order, ClassOrder::Two);
                    assert!(c.pow(2).is_identity());
                }
            } else {
                assert_ne!(order, ClassOrder::Two, "{}", ctx.tag());
            }
        }
    }
    let circle = RingContext::CircleForm;
    for _ in 0..100 {
        let z = common::pythagorean(&mut r);
        assert!(!circle.triviality_oracle(&RatFuncQi::linear(&z)).unwrap());
    }
}

#[test]
fn localization_kernel_is_supported_on_new_points() {
    let mut r = rng(29);
    let small = RingContext::line();
    for large in [
        RingContext::affine_line([GaussianRational::i(), -GaussianRational::i()]).unwrap(),
        RingContext::affine_line([
            GaussianRational::zero(),
            GaussianRational::from_ints(1, 1),
            GaussianRational::from_ints(1, -1),
        ])
        .unwrap(),
    ] {
        let new = newly_inverted(&small, &large).unwrap();
        let mut seen = [0usize; 2];
        for _ in 0..300 {
            let f = element(&large, &mut r);
            let c = class_of(&small, &f).unwrap();
            let image = localization_map(&c, &large).unwrap();
            let supported = c.free_table().keys().all(|z| new.contains(z));
            assert_eq!(image.is_identity(), supported, "{}", f);
            assert_eq!(image.is_identity(), large.triviality_oracle(&f).unwrap());
            seen[supported as usize] += 1;
        }
        assert!(seen[0] > 30 && seen[1] > 30, "{:?}", seen);
    }
}

#[test]
fn projective_inclusion_kernels() {
    let mut r = rng(30);
    let line = RingContext::ProjectiveLine;
    for _ in 0..200 {
        let (f, g) = (element(&line, &mut r), element(&line, &mut r));
        let (cf, cg) = (class_of(&line, &f).unwrap(), class_of(&line, &g).unwrap());
        let same = projective_include(&cf).unwrap() == projective_include(&cg).unwrap();
        assert_eq!(same, cf == cg);
        assert_eq!(same, RingContext::line().triviality_oracle(&f.checked_div(&g).unwrap()).unwrap());
    }
    let (conic, icircle) = (RingContext::ProjectiveConic, RingContext::ImaginaryCircleForm);
    let t = PolarClass::from_payload(&conic, Payload::Conic { t0: 1, free: Default::default() }).unwrap();
    assert!(!t.is_identity());
    assert!(projective_include(&t).unwrap().is_identity());
    let mut seen = [0usize; 2];
    for _ in 0..200 {
        let f = element(&conic, &mut r);
        let g = if r.gen_bool(0.5) {
            (&f * &t.representative()).pow(r.gen_range(1..=2)).unwrap()
        } else {
            element(&conic, &mut r)
        };
        let image = |h: &RatFuncQi| projective_include(&class_of(&conic, h).unwrap()).unwrap();
        let same = image(&f) == image(&g);
        assert_eq!(same, icircle.triviality_oracle(&f.checked_div(&g).unwrap()).unwrap(), "{} {}", f, g);
        seen[same as usize] += 1;
    }
    assert!(seen[0] > 20, "{:?}", seen);
}
