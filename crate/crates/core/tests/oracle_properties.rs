use std::collections::BTreeSet;

use proptest::prelude::*;

use ballcomp::ball::{enumerate_balls, enumerate_realizable_samples, realizing_balls, sample_realizable};
use ballcomp::graph::{block_cut_tree, dfs_sphere_order, gate, interval, sphere};
use ballcomp::{generate, Ball, CompressedSample, DistanceMatrix, GenSpec, Graph, GraphClass, Result, Sample, Scheme};
use ballcomp::{verify_scheme, VerifyOptions};

/// Cycles need three vertices; every other class accepts any `n >= 1`.
fn gen(class: GraphClass, n: usize, seed: u64) -> Graph {
    let n = if class == GraphClass::Cycle { n.max(3) } else { n };
    generate(&GenSpec::new(class, n, seed)).unwrap().graph
}

fn any_class() -> impl Strategy<Value = GraphClass> {
    prop::sample::select(GraphClass::ALL.to_vec())
}

/// Keeps the first `k` labeled vertices and decodes to the first ball of the
/// family that realizes what was kept.
struct Identity {
    family: Vec<Ball>,
    k: usize,
}

impl Scheme for Identity {
    fn id(&self) -> String {
        "identity".into()
    }

    fn compress(&self, x: &Sample) -> Result<CompressedSample> {
        let kept: Vec<_> = x.support().into_iter().take(self.k).map(|v| (v, x.get(v).unwrap())).collect();
        Ok(CompressedSample::from_entries(&kept))
    }

    fn reconstruct(&self, y: &CompressedSample) -> Result<Ball> {
        let n = self.family[0].members().len();
        let mut x = Sample::zero(n);
        for (v, s) in y.entries() {
            x.set(v, Some(s));
        }
        Ok(realizing_balls(&x, &self.family).into_iter().next().unwrap_or_else(|| Ball::empty(n)))
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn distance_is_a_graph_metric(class in any_class(), n in 1usize..12, seed in any::<u64>()) {
        let g = gen(class, n, seed);
        let dm = g.distances();
        for u in 0..g.n() {
            prop_assert_eq!(dm.get(u, u), 0);
            for v in 0..g.n() {
                prop_assert_eq!(dm.get(u, v), dm.get(v, u));
                prop_assert_eq!(dm.get(u, v) == 1, g.has_edge(u, v));
                for w in 0..g.n() {
                    prop_assert!(dm.get(u, w).abs_diff(dm.get(v, w)) <= dm.get(u, v));
                }
            }
        }
    }

    #[test]
    fn intervals_and_gates(class in any_class(), n in 1usize..12, seed in any::<u64>()) {
        let g = gen(class, n, seed);
        let dm = g.distances();
        for u in 0..g.n() {
            for v in 0..g.n() {
                let i = interval(&dm, u, v);
                prop_assert!(i.contains(&u) && i.contains(&v));
                prop_assert_eq!(&i, &interval(&dm, v, u));
                for x in 0..g.n() {
                    let near = i.iter().map(|&z| dm.get(x, z)).min().unwrap();
                    let closest: Vec<usize> = i.iter().copied().filter(|&z| dm.get(x, z) == near).collect();
                    let gated = i.iter().all(|&z| dm.get(x, z) == near + dm.get(closest[0], z));
                    match gate(&dm, &i, x) {
                        Ok(c) => prop_assert!(closest == vec![c] && gated),
                        Err(_) => prop_assert!(closest.len() > 1 || !gated),
                    }
                }
            }
        }
    }

    #[test]
    fn blocks_partition_edges(class in any_class(), n in 1usize..14, seed in any::<u64>()) {
        let g = gen(class, n, seed);
        let bt = block_cut_tree(&g);
        for &(u, v) in g.edges() {
            let owners = bt.blocks.iter().filter(|b| b.contains(&u) && b.contains(&v)).count();
            prop_assert_eq!(owners, 1);
        }
        // Block-cut graph is a tree: one edge per (block, cut vertex) incidence.
        if g.n() > 1 {
            let nodes = bt.blocks.len() + bt.cut_vertices.len();
            let links: usize = bt.cut_vertices.iter().map(|&c| bt.incidence[c].len()).sum();
            prop_assert_eq!(links + 1, nodes);
        }
    }

    #[test]
    fn sphere_traces_are_circular_intervals(n in 1usize..13, seed in any::<u64>()) {
        let t = gen(GraphClass::Tree, n, seed);
        let dm = t.distances();
        for s in 0..n {
            for r in 0..dm.eccentricity(s) {
                let so = dfs_sphere_order(&t, s, r + 1);
                prop_assert_eq!(so.order.iter().copied().collect::<BTreeSet<_>>(), sphere(&dm, s, r + 1).into_iter().collect());
                for v in 0..n {
                    let hits: Vec<bool> = so.order.iter().map(|&z| dm.get(v, z) <= r).collect();
                    let starts = (0..hits.len()).filter(|&i| hits[i] && !hits[(i + hits.len() - 1) % hits.len()]).count();
                    prop_assert!(starts <= 1, "s={} r={} v={} {:?}", s, r, v, hits);
                }
            }
        }
    }

    #[test]
    fn enumerated_balls_are_distinct_and_exact(class in any_class(), n in 1usize..12, seed in any::<u64>(), radius in prop::option::of(0u32..4)) {
        let g = gen(class, n, seed);
        let dm = g.distances();
        let family = enumerate_balls(&dm, radius);
        let sets: BTreeSet<Vec<usize>> = family.iter().map(Ball::vertices).collect();
        prop_assert_eq!(sets.len(), family.len());
        for b in &family {
            let c = b.center_vertex().unwrap();
            let r = b.radius();
            prop_assert!(radius.is_none_or(|want| r.twice() == 2 * want));
            let direct: Vec<usize> = (0..g.n()).filter(|&z| 2 * dm.get(c, z) <= r.twice()).collect();
            prop_assert_eq!(b.vertices(), direct);
        }
        for x in sample_realizable(g.n(), &family, 200, seed) {
            prop_assert!(!realizing_balls(&x, &family).is_empty());
        }
    }

    #[test]
    fn verifier_agrees_with_direct_check(class in any_class(), n in 1usize..9, seed in any::<u64>(), k in 1usize..4) {
        let g = gen(class, n, seed);
        let dm: DistanceMatrix = g.distances();
        let family = enumerate_balls(&dm, None);
        let samples = enumerate_realizable_samples(g.n(), &family, None);
        let s = Identity { family: family.clone(), k };
        let rep = verify_scheme(&dm, &s, &VerifyOptions::exact(k), &samples);
        let flagged: BTreeSet<String> = rep.failures.iter().map(|f| f.sample.to_string()).collect();
        let direct: BTreeSet<String> = samples
            .iter()
            .filter(|x| !s.reconstruct(&s.compress(x).unwrap()).unwrap().realizes(x))
            .map(|x| x.to_string())
            .collect();
        prop_assert_eq!(flagged, direct);
        prop_assert_eq!(rep.passed(), rep.failures.is_empty());
    }
}
