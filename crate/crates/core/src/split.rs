//! Split graphs: clique/independent-set partition and the size-ω scheme.

use crate::ball::Ball;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::sample::{CompressedSample, Sample, Sign};
use crate::verify::Scheme;

/// A maximum clique `clique` (sorted) and the independent rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

impl SplitPartition {
    pub fn omega(&self) -> usize {
        self.clique.len()
    }
}

/// Degree-sequence partition: with degrees sorted decreasingly, the first
/// `m = max{i : d_i >= i - 1}` vertices form a maximum clique exactly when
/// the graph is split.
pub fn split_partition(g: &Graph) -> Result<SplitPartition> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = (1..=n).rev().find(|&i| g.degree(order[i - 1]) + 1 >= i).unwrap_or(1);
    let mut clique = order[..m].to_vec();
    let mut independent = order[m..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    let is_clique = clique.iter().enumerate().all(|(i, &a)| clique[i + 1..].iter().all(|&b| g.has_edge(a, b)));
    let is_stable = independent
        .iter()
        .enumerate()
        .all(|(i, &a)| independent[i + 1..].iter().all(|&b| !g.has_edge(a, b)));
    if !is_clique || !is_stable {
        return Err(Error::NotSplit);
    }
    Ok(SplitPartition { clique, independent })
}

pub struct SplitScheme {
    g: Graph,
    dm: DistanceMatrix,
    part: SplitPartition,
    in_clique: Vec<bool>,
    k: usize,
}

impl SplitScheme {
    pub fn new(g: &Graph) -> Result<Self> {
        let part = split_partition(g)?;
        let mut in_clique = vec![false; g.n()];
        for &w in &part.clique {
            in_clique[w] = true;
        }
        let k = part.omega().max(2);
        Ok(SplitScheme {
            g: g.clone(),
            dm: g.distances(),
            part,
            in_clique,
            k,
        })
    }

    pub fn partition(&self) -> &SplitPartition {
        &self.part
    }

    /// Number of slots, `max(2, ω)`.
    pub fn slots(&self) -> usize {
        self.k
    }

    fn realizes(&self, x: &Sample, c: usize, r: u32) -> bool {
        x.is_realized_by(|v| self.dm.get(c, v) <= r)
    }

    /// Per clique vertex: a fresh negative neighbor, else `fallback`.
    fn witnesses(
        &self,
        x: &Sample,
        fallback: impl Fn(usize, &[usize]) -> Option<usize>,
    ) -> CompressedSample {
        let mut out = CompressedSample::blank(&[self.k]);
        let mut used = Vec::new();
        for (i, &w) in self.part.clique.iter().enumerate() {
            let pick = self
                .g
                .neighbors(w)
                .iter()
                .copied()
                .find(|&y| x.get(y) == Some(Sign::Neg) && !used.contains(&y))
                .or_else(|| fallback(w, &used));
            if let Some(v) = pick {
                used.push(v);
                out.slots[i] = Some((v, x.get(v).unwrap()));
            }
        }
        out
    }

    fn covering_ball(&self) -> Ball {
        let c = (0..self.g.n()).min_by_key(|&c| (self.dm.eccentricity(c), c)).unwrap();
        Ball::new(&self.dm, c, self.dm.eccentricity(c))
    }
}

impl Scheme for SplitScheme {
    fn id(&self) -> String {
        "split".into()
    }

    fn compress(&self, x: &Sample) -> Result<CompressedSample> {
        let mut out = CompressedSample::blank(&[self.k]);
        let pos = x.positives();
        if pos.is_empty() {
            return Ok(out);
        }
        if x.negatives().is_empty() {
            out.slots[0] = Some((pos[0], Sign::Pos));
            return Ok(out);
        }
        if let [u] = pos.as_slice() {
            out.slots[1] = Some((*u, Sign::Pos));
            return Ok(out);
        }
        let indep = &self.part.independent;
        if let Some(&u) = indep.iter().find(|&&u| x.get(u) == Some(Sign::Pos) && self.realizes(x, u, 1)) {
            let v = *self.g.neighbors(u).iter().find(|&&v| x.get(v) == Some(Sign::Pos)).unwrap();
            out.slots[0] = Some((u, Sign::Pos));
            out.slots[1] = Some((v, Sign::Pos));
            return Ok(out);
        }
        if let Some(&u) = indep.iter().find(|&&u| x.get(u).is_none() && self.realizes(x, u, 1)) {
            for (i, &w) in self.part.clique.iter().enumerate() {
                out.slots[i] = x.get(w).map(|s| (w, s));
            }
            if self.reconstruct(&out).is_ok_and(|b| b.realizes(x)) {
                return Ok(out);
            }
            // A negative independent vertex shadows the center. Name one in the
            // slot of a clique vertex the center misses; decoding then starts
            // right after it.
            let i = self.part.clique.iter().position(|&w| !self.g.has_edge(u, w)).unwrap();
            for t in indep.iter().copied().filter(|&t| x.get(t) == Some(Sign::Neg)) {
                out.slots[i] = Some((t, Sign::Neg));
                if self.reconstruct(&out).is_ok_and(|b| b.realizes(x)) {
                    return Ok(out);
                }
            }
            return Err(Error::NotRealizable);
        }
        if self.part.clique.iter().any(|&u| self.realizes(x, u, 1)) {
            return Ok(self.witnesses(x, |w, used| {
                pos.iter()
                    .copied()
                    .find(|&z| z != w && !self.g.has_edge(w, z) && !used.contains(&z))
            }));
        }
        let u = *indep
            .iter()
            .find(|&&u| self.realizes(x, u, 2))
            .ok_or(Error::NotRealizable)?;
        Ok(self.witnesses(x, |w, used| {
            if !self.g.has_edge(w, u) {
                return None;
            }
            self.g
                .neighbors(w)
                .iter()
                .copied()
                .find(|&z| x.get(z) == Some(Sign::Pos) && !self.in_clique[z] && !used.contains(&z))
        }))
    }

    fn reconstruct(&self, y: &CompressedSample) -> Result<Ball> {
        y.expect_groups(&[self.k])?;
        let filled: Vec<(usize, usize, Sign)> = y
            .slots
            .iter()
            .enumerate()
            .filter_map(|(i, s)| s.map(|(v, sign)| (i, v, sign)))
            .collect();
        let pos: Vec<usize> = y.with_sign(Sign::Pos);
        let neg: Vec<usize> = y.with_sign(Sign::Neg);
        let agrees = |c: usize, r: u32| {
            pos.iter().all(|&v| self.dm.get(c, v) <= r) && neg.iter().all(|&v| self.dm.get(c, v) > r)
        };
        let indep = &self.part.independent;
        let none = || Error::MalformedInput(format!("no center fits [{y}]"));
        match filled.as_slice() {
            [] => return Ok(Ball::empty(self.g.n())),
            [(0, _, Sign::Pos)] => return Ok(self.covering_ball()),
            [(1, u, Sign::Pos)] => return Ok(Ball::new(&self.dm, *u, 0)),
            [(0, u, Sign::Pos), (1, v, Sign::Pos)] if !self.in_clique[*u] && self.in_clique[*v] => {
                return Ok(Ball::new(&self.dm, *u, 1));
            }
            _ => {}
        }
        if pos.iter().filter(|&&v| self.in_clique[v]).count() >= 2 {
            let pointer = filled.iter().find(|f| !self.in_clique[f.1]);
            let fits: Vec<usize> = indep
                .iter()
                .copied()
                .filter(|&u| agrees(u, 1))
                .filter(|&u| pointer.is_none_or(|&(i, _, _)| !self.g.has_edge(u, self.part.clique[i])))
                .collect();
            let pick = match pointer {
                None => fits.first(),
                Some(&(_, t, _)) => fits.iter().find(|&&u| u > t).or(fits.first()),
            };
            return pick.map(|&u| Ball::new(&self.dm, u, 1)).ok_or_else(none);
        }
        let far_from_slot = filled
            .iter()
            .filter(|f| f.2 == Sign::Pos)
            .all(|&(j, v, _)| {
                let w = self.part.clique.get(j).copied();
                w.is_none_or(|w| v != w && !self.g.has_edge(v, w))
            });
        if !neg.is_empty() && far_from_slot {
            return self
                .part
                .clique
                .iter()
                .enumerate()
                .find(|&(t, &w)| y.slots[t].is_none() && agrees(w, 1))
                .map(|(_, &w)| Ball::new(&self.dm, w, 1))
                .ok_or_else(none);
        }
        indep
            .iter()
            .find(|&&u| {
                neg.iter().all(|&v| self.dm.get(u, v) > 2)
                    && filled
                        .iter()
                        .filter(|f| f.2 == Sign::Pos)
                        .all(|&(t, _, _)| self.part.clique.get(t).is_some_and(|&w| self.g.has_edge(u, w)))
            })
            .map(|&u| Ball::new(&self.dm, u, 2))
            .ok_or_else(none)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::{enumerate_balls, enumerate_realizable_samples};
    use crate::verify::{verify_scheme, VerifyOptions};

    fn fixture() -> Graph {
        Graph::new(5, &[(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2)]).unwrap()
    }

    #[test]
    fn partitions() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let p = split_partition(&g).unwrap();
        assert_eq!((p.clique, p.independent), (vec![0, 1, 2], vec![3]));
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let p = split_partition(&star).unwrap();
        assert_eq!((p.clique, p.independent), (vec![0, 1], vec![2, 3]));
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(split_partition(&c4), Err(Error::NotSplit));
    }

    #[test]
    fn examples() {
        let s = SplitScheme::new(&fixture()).unwrap();
        let y = s.compress(&Sample::from_sets(5, &[3, 0], &[4])).unwrap();
        assert_eq!(y.to_string(), "+3 +0 *");
        assert_eq!(s.reconstruct(&y).unwrap().vertices(), vec![0, 1, 3]);
        let y = s.compress(&Sample::from_sets(5, &[0, 3], &[])).unwrap();
        assert_eq!(y.to_string(), "+0 * *");
        let b = s.reconstruct(&y).unwrap();
        assert_eq!((b.center_vertex(), b.len()), (Some(1), 5));
        let y = s.compress(&Sample::from_sets(5, &[3], &[0])).unwrap();
        assert_eq!(y.to_string(), "* +3 *");
        assert_eq!(s.reconstruct(&y).unwrap().vertices(), vec![3]);
    }

    #[test]
    fn shadowed_center() {
        let g = Graph::new(
            7,
            &[(0, 1), (0, 3), (0, 4), (0, 5), (0, 6), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (3, 6), (4, 5), (5, 6)],
        )
        .unwrap();
        let s = SplitScheme::new(&g).unwrap();
        assert_eq!(s.partition().independent, vec![2, 6]);
        // Vertex 2 matches the clique part of the sample but is itself negative.
        let x = Sample::from_sets(7, &[3, 5], &[2]);
        let y = s.compress(&x).unwrap();
        assert_eq!(y.to_string(), "* * +3 -2 +5");
        assert_eq!(s.reconstruct(&y).unwrap().center_vertex(), Some(6));
    }

    #[test]
    fn fixture_exhaustive() {
        let g = fixture();
        let dm = g.distances();
        let samples = enumerate_realizable_samples(5, &enumerate_balls(&dm, None), None);
        let rep = verify_scheme(&dm, &SplitScheme::new(&g).unwrap(), &VerifyOptions::exact(3), &samples);
        assert!(rep.passed(), "{rep}");
    }
}

#[cfg(test)]
mod stress {
    use super::*;
    use crate::ball::{enumerate_balls, enumerate_realizable_samples};
    use crate::generators::{generate, GenSpec, GraphClass};
    use crate::verify::{verify_scheme, VerifyOptions};

    #[test]
    fn random_split_graphs() {
        for seed in 0..150 {
            let n = 1 + (seed as usize % 9);
            let g = generate(&GenSpec::new(GraphClass::Split, n, seed)).unwrap().graph;
            let s = SplitScheme::new(&g).unwrap();
            let dm = g.distances();
            let samples = enumerate_realizable_samples(n, &enumerate_balls(&dm, None), None);
            let rep = verify_scheme(&dm, &s, &VerifyOptions::exact(s.slots()), &samples);
            assert!(rep.passed(), "{:?} {:?}\n{}", g.edges(), s.partition(), rep);
        }
    }
}
