use macdonald_interp::algebra::{rat, BigRat, Ctx, Poly, PointSampler, RatQT};
use macdonald_interp::comb::{compositions_up_to, partitions_up_to};
use macdonald_interp::interp::{Interpolator, VanishingSystem};

#[test]
fn one_variable_degree_one() {
    let interp = Interpolator::new(1, Ctx::symbolic());
    let e = interp.e_star(&[1]).unwrap();
    let expect: Poly<RatQT> = Poly::linear(1, 0, RatQT::one());
    assert_eq!(e, expect);
    assert_eq!(interp.e_star(&[0]).unwrap(), Poly::one(1));
}

#[test]
fn graded_matches_direct_symbolic_n2() {
    let ctx = Ctx::symbolic();
    let interp = Interpolator::new(2, ctx.clone());
    for mu in compositions_up_to(3, 2) {
        let direct = VanishingSystem::nonsymmetric(&mu, &ctx).solve().unwrap();
        assert_eq!(interp.e_star(&mu).unwrap(), direct, "E*_{mu:?}");
    }
    for lambda in partitions_up_to(3, 2) {
        let direct = VanishingSystem::symmetric(&lambda, &ctx).solve().unwrap();
        assert_eq!(interp.p_star(&lambda).unwrap(), direct, "P*_{lambda:?}");
    }
}

#[test]
fn graded_matches_direct_specialized_n3() {
    let mut sampler = PointSampler::new(7, 12);
    let ctx: Ctx<BigRat> = sampler.next_ctx();
    let interp = Interpolator::new(3, ctx.clone());
    for mu in compositions_up_to(3, 3) {
        let direct = VanishingSystem::nonsymmetric(&mu, &ctx).solve().unwrap();
        assert_eq!(interp.e_star(&mu).unwrap(), direct, "E*_{mu:?}");
    }
    for lambda in partitions_up_to(3, 3) {
        let direct = VanishingSystem::symmetric(&lambda, &ctx).solve().unwrap();
        assert_eq!(interp.p_star(&lambda).unwrap(), direct, "P*_{lambda:?}");
    }
}

#[test]
fn hecke_recursion_matches_word() {
    let ctx = Ctx::specialized(rat(2, 3), rat(-3, 5));
    let interp = Interpolator::new(3, ctx);
    for mu in compositions_up_to(3, 3) {
        assert_eq!(interp.f_star(&mu).unwrap(), interp.f_star_word(&mu).unwrap(), "{mu:?}");
    }
}

#[test]
fn recursive_strategy_matches_solver() {
    let sym = Ctx::symbolic();
    let solve = Interpolator::new(2, sym.clone());
    let rec = Interpolator::recursive(2, sym);
    for mu in compositions_up_to(3, 2) {
        assert_eq!(rec.e_star(&mu).unwrap(), solve.e_star(&mu).unwrap(), "E*_{mu:?}");
    }
    let ctx: Ctx<BigRat> = PointSampler::new(11, 12).next_ctx();
    let solve = Interpolator::new(3, ctx.clone());
    let rec = Interpolator::recursive(3, ctx);
    for mu in compositions_up_to(3, 3) {
        assert_eq!(rec.e_star(&mu).unwrap(), solve.e_star(&mu).unwrap(), "E*_{mu:?}");
        assert_eq!(rec.f_star(&mu).unwrap(), solve.f_star(&mu).unwrap(), "f*_{mu:?}");
    }
    for lambda in partitions_up_to(3, 3) {
        assert_eq!(rec.p_star(&lambda).unwrap(), solve.p_star(&lambda).unwrap(), "P*_{lambda:?}");
    }
}
