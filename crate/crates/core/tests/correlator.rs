use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use semiclassical::correlator::{
    correlator, correlator_function, moment, moment_bruteforce, parse_elements, Block, CorrelatorSpec, Element,
    MomentSpec,
};
use semiclassical::weingarten::Ensemble;

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn corr(z: &str, zstar: &str, ensemble: Ensemble, n: u32) -> BigRational {
    let spec = CorrelatorSpec::new(parse_elements(z).unwrap(), parse_elements(zstar).unwrap(), ensemble, n).unwrap();
    correlator(&spec).unwrap()
}

#[test]
fn four_point_cue_example() {
    for n in 3..8i64 {
        let expected = q(1, n * n - 1) - q(1, n * (n * n - 1));
        assert_eq!(corr("1,2;3,2", "1,2;3,2", Ensemble::Cue, n as u32), expected);
    }
}

#[test]
fn unbalanced_and_mismatched_vanish() {
    assert!(corr("1,2", "2,1", Ensemble::Cue, 3).is_zero());
    assert!(corr("1,2;1,2", "1,2", Ensemble::Cue, 3).is_zero());
    assert!(corr("1,2", "1,3", Ensemble::Coe, 3).is_zero());
}

#[test]
fn coe_two_point_values() {
    for n in 2..7i64 {
        assert_eq!(corr("1,2", "1,2", Ensemble::Coe, n as u32), q(1, n + 1));
        assert_eq!(corr("1,1", "1,1", Ensemble::Coe, n as u32), q(2, n + 1));
    }
}

#[test]
fn entry_moments_have_closed_form() {
    // ⟨|U₁₁|^{2k}⟩ = k! (N-1)! / (N+k-1)!
    for k in 1..=4usize {
        let z = vec!["1,1"; k].join(";");
        for n in 1..6i64 {
            let mut expected = q(1, 1);
            for i in 0..k as i64 {
                expected *= q(i + 1, n + i);
            }
            assert_eq!(corr(&z, &z, Ensemble::Cue, n as u32), expected, "k={k} N={n}");
        }
    }
}

#[test]
fn symbolic_correlator_evaluates_consistently() {
    let a = parse_elements("1,2;2,3").unwrap();
    let f = correlator_function(&a, &a, Ensemble::Coe).unwrap();
    for n in 3..7u32 {
        let at = f.evaluate(&BigRational::from_integer(BigInt::from(n))).unwrap();
        assert_eq!(at, corr("1,2;2,3", "1,2;2,3", Ensemble::Coe, n));
    }
}

#[test]
fn channel_range_is_checked() {
    let a = vec![Element { row: 4, col: 1 }];
    assert!(CorrelatorSpec::new(a.clone(), a, Ensemble::Cue, 3).is_err());
}

#[test]
fn moments_match_channel_sums_on_the_grid() {
    let shapes: [&[usize]; 6] = [&[1], &[2], &[1, 1], &[3], &[2, 1], &[1, 1, 1]];
    for ensemble in [Ensemble::Cue, Ensemble::Coe] {
        for block in [Block::Transmission, Block::Reflection] {
            for n1 in 1..=3 {
                for n2 in 1..=3 {
                    for traces in shapes {
                        let spec = MomentSpec::new(traces.to_vec(), n1, n2, block, ensemble).unwrap();
                        assert_eq!(moment(&spec).unwrap(), moment_bruteforce(&spec).unwrap(), "{spec:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn first_cue_moment_depends_on_product_and_sum() {
    for n1 in 1..=6u32 {
        for n2 in 1..=6u32 {
            let spec = MomentSpec::new(vec![1], n1, n2, Block::Transmission, Ensemble::Cue).unwrap();
            assert_eq!(moment(&spec).unwrap(), q((n1 * n2) as i64, (n1 + n2) as i64));
            let coe = MomentSpec { ensemble: Ensemble::Coe, ..spec };
            assert_eq!(moment(&coe).unwrap(), q((n1 * n2) as i64, (n1 + n2 + 1) as i64));
        }
    }
}

#[test]
fn reflection_and_transmission_first_moments_sum_to_lead_size() {
    // rows of S in lead 1 have unit norm, so Tr(rr†) + Tr(tt†) = N₁
    for ensemble in [Ensemble::Cue, Ensemble::Coe] {
        for (n1, n2) in [(1, 2), (3, 2), (2, 2)] {
            let t = moment(&MomentSpec::new(vec![1], n1, n2, Block::Transmission, ensemble).unwrap()).unwrap();
            let r = moment(&MomentSpec::new(vec![1], n1, n2, Block::Reflection, ensemble).unwrap()).unwrap();
            assert_eq!(t + r, q(n1 as i64, 1));
        }
    }
}

#[test]
fn large_cue_moment_is_feasible() {
    let spec = MomentSpec::new(vec![4, 4], 3, 2, Block::Transmission, Ensemble::Cue).unwrap();
    let v = moment(&spec).unwrap();
    assert!(v.to_f64().unwrap() > 0.0);
    let too_big = MomentSpec::new(vec![5, 4], 3, 2, Block::Transmission, Ensemble::Cue).unwrap();
    assert!(moment(&too_big).is_err());
}
