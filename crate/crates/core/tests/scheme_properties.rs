use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use proptest::prelude::*;

use ballcomp::ball::{enumerate_balls, member_sets, sample_realizable, vc_dimension};
use ballcomp::generators::{concept_to_split_graph, random_connected};
use ballcomp::graph::{gate, interval};
use ballcomp::interval::farthest_pair;
use ballcomp::planar::potential_centers;
use ballcomp::{
    generate, hyperbolicity, split_partition, ApproxParams, Ball, GenSpec, Graph, GraphClass, HalfInt,
    HyperbolicScheme, Sample, VerifyOptions,
};

fn gen(class: GraphClass, n: usize, seed: u64) -> Graph {
    generate(&GenSpec::new(class, n, seed)).unwrap().graph
}

fn all_balls(dm: &ballcomp::DistanceMatrix) -> Vec<(usize, u32, Ball)> {
    let mut out = Vec::new();
    for x in 0..dm.n() {
        for r in 0..=dm.eccentricity(x) {
            out.push((x, r, Ball::new(dm, x, r)));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn tree_balls_through_a_diametral_pair_hold_all_positives(n in 1usize..12, seed in any::<u64>(), r in 0u32..5) {
        let t = gen(GraphClass::Tree, n, seed);
        let dm = t.distances();
        let family = enumerate_balls(&dm, Some(r));
        for x in sample_realizable(n, &family, 100, seed) {
            let Some((u, v)) = dm.diametral_pair(&x.positives()) else { continue };
            for c in 0..n {
                if dm.get(c, u) <= r && dm.get(c, v) <= r {
                    prop_assert!(x.positives().iter().all(|&p| dm.get(c, p) <= r));
                }
            }
        }
    }

    #[test]
    fn tree_blocked_samples_have_a_negative_at_r_plus_one(n in 1usize..12, seed in any::<u64>(), r in 0u32..5) {
        let t = gen(GraphClass::Tree, n, seed);
        let dm = t.distances();
        let family = enumerate_balls(&dm, Some(r));
        for x in sample_realizable(n, &family, 100, seed) {
            let (pos, neg) = (x.positives(), x.negatives());
            let covering: Vec<usize> = (0..n).filter(|&c| pos.iter().all(|&p| dm.get(c, p) <= r)).collect();
            let blocked = covering.iter().any(|&c| neg.iter().any(|&q| dm.get(c, q) <= r));
            if blocked {
                let witness = covering.iter().any(|&c| {
                    neg.iter().all(|&q| dm.get(c, q) > r) && neg.iter().any(|&q| dm.get(c, q) == r + 1)
                });
                prop_assert!(witness, "{}", x);
            }
        }
    }

    #[test]
    fn interval_balls_are_closed_under_segment_nesting(n in 1usize..11, seed in any::<u64>()) {
        let out = generate(&GenSpec::new(GraphClass::Interval, n, seed)).unwrap();
        let (g, rep) = (out.graph, out.intervals.unwrap());
        let dm = g.distances();
        let (s, e) = (|v| rep.start(v), |v| rep.end(v));
        for (_, _, b) in all_balls(&dm) {
            for u in b.vertices() {
                for v in b.vertices() {
                    for z in 0..n {
                        if s(u) < s(v) && s(z) < s(v) && e(u) < e(v) && e(u) < e(z) {
                            prop_assert!(b.contains(z));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn interval_farthest_pair_pins_positives(n in 1usize..11, seed in any::<u64>()) {
        let out = generate(&GenSpec::new(GraphClass::Interval, n, seed)).unwrap();
        let (g, rep) = (out.graph, out.intervals.unwrap());
        let dm = g.distances();
        let balls = all_balls(&dm);
        for x in sample_realizable(n, &enumerate_balls(&dm, None), 100, seed) {
            let pos = x.positives();
            if pos.is_empty() {
                continue;
            }
            let (u, v) = farthest_pair(&rep, &pos);
            for (_, r, b) in &balls {
                if *r > 0 && b.contains(u) && b.contains(v) {
                    prop_assert!(pos.iter().all(|&p| b.contains(p)));
                }
            }
        }
    }

    #[test]
    fn interval_exclusion_propagates_outward(n in 1usize..11, seed in any::<u64>()) {
        let out = generate(&GenSpec::new(GraphClass::Interval, n, seed)).unwrap();
        let (g, rep) = (out.graph, out.intervals.unwrap());
        let dm = g.distances();
        for (x, _, b) in all_balls(&dm) {
            for p in (0..n).filter(|&p| !b.contains(p)) {
                for z in 0..n {
                    if rep.end(p) < rep.start(x) && rep.end(z) < rep.end(p) {
                        prop_assert!(!b.contains(z));
                    }
                    if rep.end(x) < rep.start(p) && rep.start(p) < rep.start(z) {
                        prop_assert!(!b.contains(z));
                    }
                }
            }
        }
    }

    #[test]
    fn cfmedian_gate_projection_still_realizes(n in 2usize..14, seed in any::<u64>()) {
        let g = gen(GraphClass::CfMedian, n, seed);
        let dm = g.distances();
        let family = enumerate_balls(&dm, None);
        for x in sample_realizable(g.n(), &family, 60, seed) {
            let Some((u, v)) = dm.diametral_pair(&x.positives()) else { continue };
            let i = interval(&dm, u, v);
            for (c, r, b) in all_balls(&dm) {
                if !b.realizes(&x) {
                    continue;
                }
                let c2 = gate(&dm, &i, c).unwrap();
                let r2 = r - dm.get(c, c2);
                prop_assert!(Ball::new(&dm, c2, r2).realizes(&x), "B_{}({}) -> B_{}({}) on {}", r, c, r2, c2, x);
            }
        }
    }

    #[test]
    fn split_partitions_are_maximal(n in 1usize..12, seed in any::<u64>()) {
        let g = gen(GraphClass::Split, n, seed);
        let p = split_partition(&g).unwrap();
        let verts: BTreeSet<usize> = p.clique.iter().chain(&p.independent).copied().collect();
        prop_assert_eq!(verts.len(), n);
        prop_assert_eq!(p.clique.len() + p.independent.len(), n);
        for &a in &p.clique {
            for &b in &p.clique {
                prop_assert!(a == b || g.has_edge(a, b));
            }
        }
        for &a in &p.independent {
            for &b in &p.independent {
                prop_assert!(!g.has_edge(a, b));
            }
            // No independent vertex could join the clique.
            prop_assert!(p.clique.iter().any(|&c| !g.has_edge(a, c)));
        }
    }

    #[test]
    fn reduction_keeps_vc_dimension(
        ground in 1usize..=6,
        raw in prop::collection::vec(prop::collection::btree_set(0usize..6, 1..=6), 1..=12),
    ) {
        let concepts: Vec<Vec<usize>> = raw
            .into_iter()
            .map(|c| c.into_iter().map(|v| v % ground).collect::<BTreeSet<_>>().into_iter().collect())
            .collect::<BTreeSet<Vec<usize>>>()
            .into_iter()
            .collect();
        let sets: Vec<FixedBitSet> = concepts
            .iter()
            .map(|c| {
                let mut b = FixedBitSet::with_capacity(ground);
                c.iter().for_each(|&v| b.insert(v));
                b
            })
            .collect();
        let red = concept_to_split_graph(ground, &concepts).unwrap();
        let dm = red.graph.distances();
        let units: Vec<Ball> = (0..concepts.len()).map(|i| Ball::new(&dm, red.concept_vertex(i), 1)).collect();
        for (i, b) in units.iter().enumerate() {
            let mut want = concepts[i].clone();
            want.push(red.concept_vertex(i));
            want.sort_unstable();
            prop_assert_eq!(b.vertices(), want);
        }
        prop_assert_eq!(vc_dimension(&member_sets(&units), red.graph.n()), vc_dimension(&sets, ground));
    }

    #[test]
    fn planar_tight_samples_have_few_potential_centers(n in 3usize..13, seed in any::<u64>()) {
        let g = gen(GraphClass::PlanarRot, n, seed);
        let dm = g.distances();
        for x in sample_realizable(g.n(), &enumerate_balls(&dm, Some(1)), 300, seed) {
            let pos = x.positives();
            let tight = pos.len() >= 3 && pos.iter().all(|&p| g.neighbors(p).iter().any(|&q| x.get(q) == Some(ballcomp::Sign::Neg)));
            if tight {
                prop_assert!(potential_centers(&g, &x).len() <= 2, "{}", x);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn hyperbolicity_ignores_labels(n in 1usize..16, seed in any::<u64>(), perm_seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let g = gen(GraphClass::Random, n, seed);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(perm_seed));
        let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        let h = Graph::new(n, &edges).unwrap();
        prop_assert_eq!(hyperbolicity(&g.distances()).delta, hyperbolicity(&h.distances()).delta);
    }

    #[test]
    fn hyperbolic_decoder_stays_within_slack(n in 2usize..=30, seed in any::<u64>(), p in 0.08f64..0.4) {
        use rand::SeedableRng;
        let g = random_connected(n, p, &mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let s = HyperbolicScheme::new(&g);
        let dm = g.distances();
        let d2 = s.hyperbolicity().delta.twice();
        let samples: Vec<Sample> = sample_realizable(n, &enumerate_balls(&dm, None), 1000, seed);
        let loose = VerifyOptions {
            approx: Some(ApproxParams { rho: HalfInt(2 * d2), mu: HalfInt(3 * d2 + 2) }),
            ..VerifyOptions::exact(2)
        };
        let rep = ballcomp::verify_scheme(&dm, &s, &loose, &samples);
        prop_assert!(rep.passed(), "{}", rep);
        let even: Vec<Sample> = samples
            .into_iter()
            .filter(|x| dm.diametral_pair(&x.positives()).is_none_or(|(a, b)| dm.get(a, b) % 2 == 0))
            .collect();
        let sharp = VerifyOptions {
            approx: Some(ApproxParams { rho: HalfInt(2 * d2), mu: HalfInt(3 * d2) }),
            ..VerifyOptions::exact(2)
        };
        let rep = ballcomp::verify_scheme(&dm, &s, &sharp, &even);
        prop_assert!(rep.passed(), "{}", rep);
        for x in &even {
            prop_assert_eq!(s.params_for(x).mu, HalfInt(3 * d2));
        }
    }
}
