//! Gromov hyperbolicity and the two-point approximate scheme.

use rayon::prelude::*;

use crate::ball::Ball;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::sample::{CompressedSample, HalfInt, Sample, Sign};
use crate::verify::{ApproxParams, Scheme};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hyperbolicity {
    pub delta: HalfInt,
    /// A quadruple attaining `delta`; `None` below four vertices.
    pub witness: Option<[usize; 4]>,
}

/// Gap between the two largest of the three pair sums (twice the
/// quadruple's hyperbolicity).
pub fn four_point_gap(dm: &DistanceMatrix, q: [usize; 4]) -> u32 {
    let [a, b, c, d] = q;
    let mut s = [
        dm.get(a, b) + dm.get(c, d),
        dm.get(a, c) + dm.get(b, d),
        dm.get(a, d) + dm.get(b, c),
    ];
    s.sort_unstable();
    s[2] - s[1]
}

/// Exact four-point hyperbolicity over all quadruples, parallel over the
/// first index. Ties keep the lexicographically smallest witness.
pub fn hyperbolicity(dm: &DistanceMatrix) -> Hyperbolicity {
    let n = dm.n();
    let best = (0..n)
        .into_par_iter()
        .filter_map(|a| {
            let mut local: Option<(u32, [usize; 4])> = None;
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let gap = four_point_gap(dm, [a, b, c, d]);
                        if local.is_none_or(|(g, _)| gap > g) {
                            local = Some((gap, [a, b, c, d]));
                        }
                    }
                }
            }
            local
        })
        .reduce_with(|x, y| if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) { y } else { x });
    match best {
        Some((gap, q)) => Hyperbolicity {
            delta: HalfInt(gap),
            witness: Some(q),
        },
        None => Hyperbolicity {
            delta: HalfInt(0),
            witness: None,
        },
    }
}

/// Keeps a diametral pair of the positives and decodes it to the ball around
/// the middle of the canonical geodesic.
pub struct HyperbolicScheme {
    g: Graph,
    dm: DistanceMatrix,
    hyp: Hyperbolicity,
}

impl HyperbolicScheme {
    pub fn new(g: &Graph) -> Self {
        let dm = g.distances();
        let hyp = hyperbolicity(&dm);
        HyperbolicScheme { g: g.clone(), dm, hyp }
    }

    pub fn hyperbolicity(&self) -> Hyperbolicity {
        self.hyp
    }

    /// Guaranteed slack for `x`: `(2δ, 3δ)`, with one more unit on the
    /// negative side when the kept pair is at odd distance.
    pub fn params_for(&self, x: &Sample) -> ApproxParams {
        let d = self.dm.diametral_pair(&x.positives()).map_or(0, |(a, b)| self.dm.get(a, b));
        let delta = self.hyp.delta.twice();
        ApproxParams {
            rho: HalfInt(2 * delta),
            mu: HalfInt(3 * delta + 2 * (d % 2)),
        }
    }
}

impl Scheme for HyperbolicScheme {
    fn id(&self) -> String {
        "hyperbolic".into()
    }

    fn compress(&self, x: &Sample) -> Result<CompressedSample> {
        let mut out = CompressedSample::blank(&[2]);
        match self.dm.diametral_pair(&x.positives()) {
            None => {}
            Some((a, b)) if a == b => out.slots[0] = Some((a, Sign::Pos)),
            Some((a, b)) => {
                out.slots[0] = Some((a, Sign::Pos));
                out.slots[1] = Some((b, Sign::Pos));
            }
        }
        Ok(out)
    }

    fn reconstruct(&self, y: &CompressedSample) -> Result<Ball> {
        y.expect_groups(&[2])?;
        match y.slots[..] {
            [None, None] => Ok(Ball::empty(self.g.n())),
            [Some((a, Sign::Pos)), None] => Ok(Ball::new(&self.dm, a, 0)),
            [Some((a, Sign::Pos)), Some((b, Sign::Pos))] => {
                let (a, b) = (a.min(b), a.max(b));
                let d = self.dm.get(a, b);
                let path = self.g.canonical_path(&self.dm, a, b);
                Ok(Ball::new(&self.dm, path[(d / 2) as usize], d.div_ceil(2)))
            }
            _ => Err(Error::MalformedInput(format!("unexpected code [{y}]"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::{enumerate_balls, enumerate_realizable_samples};
    use crate::generators::{cycle, generate, GenSpec, GraphClass};
    use crate::verify::{verify_scheme, VerifyOptions};

    #[test]
    fn delta_examples() {
        let c4 = cycle(4).unwrap();
        let h = hyperbolicity(&c4.distances());
        assert_eq!((h.delta, h.witness), (HalfInt(2), Some([0, 1, 2, 3])));
        assert_eq!(hyperbolicity(&cycle(5).unwrap().distances()).delta, HalfInt(1));
        for seed in 0..10 {
            let t = generate(&GenSpec::new(GraphClass::Tree, 9, seed)).unwrap().graph;
            assert_eq!(hyperbolicity(&t.distances()).delta, HalfInt(0));
        }
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(hyperbolicity(&k1.distances()).witness, None);
    }

    #[test]
    fn examples() {
        let c6 = cycle(6).unwrap();
        let s = HyperbolicScheme::new(&c6);
        let y = s.compress(&Sample::from_sets(6, &[0, 2, 3], &[])).unwrap();
        assert_eq!(y.to_string(), "+0 +3");
        let b = s.reconstruct(&y).unwrap();
        assert_eq!((b.center_vertex(), b.radius()), (Some(1), HalfInt::from_int(2)));
        let y = s.compress(&Sample::from_sets(6, &[3], &[1])).unwrap();
        assert_eq!(s.reconstruct(&y).unwrap().vertices(), vec![3]);
        assert!(s.reconstruct(&s.compress(&Sample::zero(6)).unwrap()).unwrap().is_empty());
    }

    /// Runs the verifier once per slack level (even and odd kept pairs).
    fn check(g: &Graph) {
        let s = HyperbolicScheme::new(g);
        let dm = g.distances();
        let samples = enumerate_realizable_samples(g.n(), &enumerate_balls(&dm, None), None);
        let mut groups: Vec<(ApproxParams, Vec<Sample>)> = Vec::new();
        for x in samples {
            let p = s.params_for(&x);
            match groups.iter_mut().find(|gr| gr.0 == p) {
                Some(gr) => gr.1.push(x),
                None => groups.push((p, vec![x])),
            }
        }
        for (p, part) in groups {
            let mut opts = VerifyOptions::exact(2);
            opts.approx = Some(p);
            let rep = verify_scheme(&dm, &s, &opts, &part);
            assert!(rep.passed(), "{:?}\n{}", g.edges(), rep);
        }
    }

    #[test]
    fn random_graphs() {
        for seed in 0..40 {
            let n = 2 + seed as usize % 8;
            check(&generate(&GenSpec::new(GraphClass::Random, n, seed)).unwrap().graph);
        }
        for n in 3..=9 {
            check(&cycle(n).unwrap());
        }
    }

    #[test]
    fn trees_are_exact() {
        for seed in 0..20 {
            let t = generate(&GenSpec::new(GraphClass::Tree, 8, seed)).unwrap().graph;
            let s = HyperbolicScheme::new(&t);
            let dm = t.distances();
            let samples: Vec<Sample> = enumerate_realizable_samples(8, &enumerate_balls(&dm, None), None)
                .into_iter()
                .filter(|x| s.params_for(x).mu == HalfInt(0))
                .collect();
            let rep = verify_scheme(&dm, &s, &VerifyOptions::exact(2), &samples);
            assert!(rep.passed(), "{rep}");
        }
    }
}
