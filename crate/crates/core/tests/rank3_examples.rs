mod common;

use common::*;
use gfan_core::rank3::{expected_mismatches, relevant_mismatches, sign_pattern, Frame, Subtype};
use gfan_core::{
    fan_type, find_band_index, lifted_sequences, limit_rays, pair_asymptotics, vertex_type, CaseLabel,
    ExchangeMatrix, QuadraticNumber, Sign, VertexType,
};
use num_bigint::BigInt;

fn as_big(v: &[[i64; 3]]) -> Vec<[BigInt; 3]> {
    v.iter().map(|&[x, y, z]| [big(x), big(y), big(z)]).collect()
}

#[test]
fn worked_examples_have_expected_tags() {
    use VertexType::*;
    let expected = [
        (T1, None, None),
        (T2, None, None),
        (T3, None, None),
        (T41, None, None),
        (T42, Some(3), Some(Subtype::T421)),
        (T42, Some(4), Some(Subtype::T422)),
        (T43, Some(3), Some(Subtype::T431)),
        (T43, Some(4), Some(Subtype::T432)),
    ];
    for (ex, (tag, n, sub)) in WORKED_EXAMPLES.iter().zip(expected) {
        let r = vertex_type(&frame32(ex.c0, ex.d0), 3).unwrap();
        assert_eq!(r.tag, tag, "{}", ex.name);
        assert_eq!(r.band_index, n, "{}", ex.name);
        assert_eq!(r.subtype(), sub, "{}", ex.name);
        assert!(!r.swap_applied());
    }
}

#[test]
fn listed_lifted_vectors_are_reproduced() {
    for (ex, (fwd, bwd)) in WORKED_EXAMPLES.iter().zip(GOLDEN_LIFTED) {
        let seqs = lifted_sequences(&frame32(ex.c0, ex.d0), 3, 7).unwrap();
        assert_eq!(&seqs.forward[..fwd.len()], &as_big(fwd)[..], "{}", ex.name);
        assert_eq!(&seqs.backward[..bwd.len()], &as_big(bwd)[..], "{}", ex.name);
    }
}

#[test]
fn closed_forms_agree_with_mutation() {
    for ex in &WORKED_EXAMPLES {
        let b = frame32(ex.c0, ex.d0);
        let seqs = lifted_sequences(&b, 3, 12).unwrap();
        let (fwd, bwd) = alternating_by_mutation(&b, 1, 2, 12);
        let flat = |v: &[[BigInt; 3]]| v.iter().map(|x| x.to_vec()).collect::<Vec<_>>();
        assert_eq!(flat(&seqs.forward), fwd, "{}", ex.name);
        assert_eq!(flat(&seqs.backward), bwd, "{}", ex.name);
    }
}

#[test]
fn banded_third_components_switch_at_n_plus_2() {
    let seqs = lifted_sequences(&frame32(-100, 159), 3, 12).unwrap();
    assert_eq!(seqs.forward[3], [big(2), big(-5), big(5)]);
    assert_eq!(seqs.forward[4], [big(5), big(-12), big(0)]);
    assert!(seqs.forward[4..].iter().all(|g| g[2] == big(0)));

    let seqs = lifted_sequences(&frame32(-50, 21), 3, 12).unwrap();
    assert!(seqs.backward[..4].iter().all(|g| g[2] == big(0)));
    assert!(seqs.backward[4..].iter().all(|g| g[2] > big(0)));
    assert_eq!(seqs.backward[5], [big(71), big(-45), big(5)]);
}

fn signs(s: &str) -> Vec<Sign> {
    s.split_whitespace()
        .map(|c| if c == "+" { Sign::Plus } else { Sign::Minus })
        .collect()
}

#[test]
fn printed_sign_rows() {
    let eps1 = signs("- + - + + - - + - + -");
    let eps2 = signs("+ - + - + + - - + - +");
    let cases = [
        ((2, 2), eps1.clone(), eps2.clone()),
        ((2, -2), eps1.clone(), signs("+ - + + - - + - + - +")),
        ((-2, -2), signs("- + + - - + - + - + -"), signs("+ - + + - - + - + - +")),
        ((-2, 2), signs("- + - + - + - + - + -"), signs("+ - + - + - + - + - +")),
    ];
    for ((c0, d0), c_row, d_row) in cases {
        let frame = Frame::for_vertex(&frame32(c0, d0), 3).unwrap();
        let rows = sign_pattern(&frame, -4, 6).unwrap();
        let c: Vec<Sign> = rows.iter().map(|r| r.c).collect();
        let d: Vec<Sign> = rows.iter().map(|r| r.d).collect();
        assert_eq!(rows.iter().map(|r| r.eps1).collect::<Vec<_>>(), eps1);
        assert_eq!(rows.iter().map(|r| r.eps2).collect::<Vec<_>>(), eps2);
        assert_eq!(c, c_row, "c row for ({c0},{d0})");
        assert_eq!(d, d_row, "d row for ({c0},{d0})");
    }
}

#[test]
fn sign_replay_mismatches_match_types() {
    for ex in &WORKED_EXAMPLES {
        let frame = Frame::for_vertex(&frame32(ex.c0, ex.d0), 3).unwrap();
        let rows = sign_pattern(&frame, -8, 10).unwrap();
        assert_eq!(
            relevant_mismatches(&rows),
            expected_mismatches(&frame).unwrap(),
            "{}",
            ex.name
        );
    }
}

fn normalized(g: &[BigInt]) -> Vec<f64> {
    let alpha = to_f64(&g[0]);
    g.iter().map(|x| to_f64(x) / alpha).collect()
}

fn close(x: &[f64], v: &[QuadraticNumber], tol: f64) -> bool {
    x.iter().zip(v).all(|(a, b)| (a - b.to_f64()).abs() < tol)
}

#[test]
fn limit_rays_match_long_mutation_runs() {
    for ex in &WORKED_EXAMPLES {
        let b = frame32(ex.c0, ex.d0);
        let (v, vp) = limit_rays(&b, 3).unwrap();
        let (fwd, bwd) = alternating_by_mutation(&b, 1, 2, 40);
        assert!(close(&normalized(&fwd[39]), &v, 1e-6), "{}: {:?}", ex.name, v);
        assert!(close(&normalized(&bwd[39]), &vp, 1e-6), "{}: {:?}", ex.name, vp);
    }
}

#[test]
fn type2_limit_ray_closed_form() {
    let (v, _) = limit_rays(&frame32(2, -2), 3).unwrap();
    let s3 = QuadraticNumber::sqrt(big(3));
    let three = QuadraticNumber::from_integer(big(3));
    let half = num_rational::BigRational::new(big(-1), big(2));
    assert_eq!(v[0], QuadraticNumber::one());
    assert_eq!(v[1], (&three + &s3).scale(&half));
    assert_eq!(v[2], &three + &s3);
}

#[test]
fn affine_pair_has_coincident_limits() {
    let b = ExchangeMatrix::rank3_frame(&big(2), &big(2), &big(-1), &big(1)).unwrap();
    assert_eq!(vertex_type(&b, 3).unwrap().tag, VertexType::T41);
    let (v, vp) = limit_rays(&b, 3).unwrap();
    assert_eq!(v, vp);

    let b = ExchangeMatrix::from_i64(&[[0, -2, 5, -2], [2, 0, 3, 7], [-5, -3, 0, 1], [2, -7, -1, 0]]).unwrap();
    let (v, vp) = pair_asymptotics(&b, 1, 2).unwrap();
    assert_eq!(v, vp);
}

#[test]
fn rank4_pair_asymptotics_against_mutation() {
    let b = ExchangeMatrix::from_i64(&[[0, -2, -4, -4], [3, 0, -6, 6], [2, 2, 0, 0], [2, -2, 0, 0]]).unwrap();
    let (v, vp) = pair_asymptotics(&b, 1, 2).unwrap();
    assert!(v[2].is_zero());
    let (lv, _) = limit_rays(&frame32(2, -2), 3).unwrap();
    assert_eq!(v[3], lv[2]);

    let (fwd, bwd) = alternating_by_mutation(&b, 1, 2, 40);
    assert!(close(&normalized(&fwd[39]), &v, 1e-6));
    assert!(close(&normalized(&bwd[39]), &vp, 1e-6));
}

#[test]
fn rank3_pair_asymptotics_equal_limit_rays() {
    for b in [wing(), pinwheel(), c5_family(7)] {
        for i in 1..=3 {
            let (j, k) = [(2, 3), (3, 1), (1, 2)][i - 1];
            let (v, vp) = limit_rays(&b, i).unwrap();
            let (pv, pvp) = pair_asymptotics(&b, j, k).unwrap();
            let (qv, qvp) = pair_asymptotics(&b, k, j).unwrap();
            assert_eq!(pv, v.to_vec());
            assert_eq!(pvp, vp.to_vec());
            assert_eq!((qv, qvp), (pv, pvp));
        }
    }
}

#[test]
fn band_index_examples() {
    let (a, b) = (big(3), big(2));
    assert_eq!(find_band_index(&big(-100), &big(159), &a, &b, VertexType::T42).unwrap(), (3, false));
    assert_eq!(find_band_index(&big(-50), &big(79), &a, &b, VertexType::T42).unwrap(), (4, false));
    assert_eq!(find_band_index(&big(-12), &big(19), &a, &b, VertexType::T42).unwrap(), (3, true));
}

#[test]
fn affine_frames_agree_with_mutation() {
    for (a, b) in [(2, 2), (4, 1), (1, 4)] {
        for c0 in -9..0 {
            for d0 in 1..20 {
                let m = ExchangeMatrix::rank3_frame(&big(a), &big(b), &big(c0), &big(d0)).unwrap();
                let seqs = lifted_sequences(&m, 3, 10).unwrap();
                let (fwd, bwd) = alternating_by_mutation(&m, 1, 2, 10);
                let flat = |v: &[[BigInt; 3]]| v.iter().map(|x| x.to_vec()).collect::<Vec<_>>();
                assert_eq!(flat(&seqs.forward), fwd, "({a},{b}) ({c0},{d0})");
                assert_eq!(flat(&seqs.backward), bwd, "({a},{b}) ({c0},{d0})");
            }
        }
    }
}

#[test]
fn fan_types_of_named_matrices() {
    use VertexType::*;
    let r = fan_type(&wing()).unwrap();
    assert_eq!(r.triplet, [T3, T2, T1]);
    assert_eq!(r.case_label, CaseLabel::A);
    assert_eq!(r.markov_constant, None);

    let r = fan_type(&markov()).unwrap();
    assert_eq!(r.triplet, [T41, T41, T41]);
    assert_eq!(r.case_label, CaseLabel::C1);
    assert_eq!(r.markov_constant, Some(big(4)));

    let r = fan_type(&c5_family(7)).unwrap();
    assert_eq!(r.triplet, [T42, T41, T43]);
    assert_eq!(r.case_label, CaseLabel::C5);
}

#[test]
fn markov_constants_and_cyclicity() {
    let cases = [
        (markov(), 4, true),
        (pinwheel(), 2, true),
        (tunnel(), 28, false),
        (wide_tunnel(), 11, false),
        (close_up(), 39, false),
    ];
    for (b, c, cyclic) in cases {
        assert_eq!(b.markov_constant().unwrap(), big(c));
        assert_eq!(b.is_cluster_cyclic().unwrap(), cyclic);
    }
}

#[test]
fn tunnel_word_reaches_acyclic_matrix() {
    let b = tunnel().mutate_word(&[2, 1, 2, 1, 3]).unwrap();
    assert_eq!(b, m3([[0, -2, -2], [3, 0, 2], [3, -2, 0]]));
    assert!(!b.cyclic_presentation().unwrap().is_cyclic());
}

#[test]
fn c5_family_members_classify_as_c5() {
    for p2 in 7..=30 {
        let r = fan_type(&c5_family(p2)).unwrap();
        assert_eq!(r.case_label, CaseLabel::C5, "p2 = {p2}");
    }
}
