//! The scheme interface and the generic roundtrip verifier.

use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::ball::{enumerate_balls, Ball, Center};
use crate::error::Result;
use crate::graph::DistanceMatrix;
use crate::sample::{CompressedSample, HalfInt, Sample, Sign};

/// A compressor/reconstructor pair bound to one graph.
///
/// Both maps must be pure so samples can be checked in parallel.
pub trait Scheme: Sync {
    fn id(&self) -> String;
    fn compress(&self, x: &Sample) -> Result<CompressedSample>;
    fn reconstruct(&self, y: &CompressedSample) -> Result<Ball>;
}

/// Additive slack of an approximate scheme: positives must lie in
/// `B_{r+rho}(x)`, negatives outside `B_{r-mu}(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ApproxParams {
    pub rho: HalfInt,
    pub mu: HalfInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Bound on the number of filled slots.
    pub k: usize,
    /// Require reconstructed balls to belong to the family.
    pub proper: bool,
    /// Restrict the family to balls of this radius.
    pub radius: Option<u32>,
    pub approx: Option<ApproxParams>,
}

impl VerifyOptions {
    pub fn exact(k: usize) -> Self {
        VerifyOptions {
            k,
            proper: true,
            radius: None,
            approx: None,
        }
    }

    pub fn with_radius(mut self, r: u32) -> Self {
        self.radius = Some(r);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub sample: Sample,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub scheme: String,
    pub samples_tested: usize,
    pub failures: Vec<Failure>,
    pub max_support: usize,
    pub properness_violations: usize,
    pub approx: Option<ApproxParams>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Folds another report for the same scheme into this one.
    pub fn merge(&mut self, other: VerificationReport) {
        self.samples_tested += other.samples_tested;
        self.failures.extend(other.failures);
        self.max_support = self.max_support.max(other.max_support);
        self.properness_violations += other.properness_violations;
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "scheme={} samples={} failures={} max_support={}",
            self.scheme,
            self.samples_tested,
            self.failures.len(),
            self.max_support
        )?;
        for fail in &self.failures {
            write!(f, "\nfail {} : {}", fail.sample, fail.reason)?;
        }
        Ok(())
    }
}

struct Outcome {
    support: usize,
    improper: bool,
    failure: Option<String>,
}

/// Runs `compress` then `reconstruct` on every sample and checks the
/// compression bound, `α(X) ⪯ X`, consistency (exact or approximate) and
/// properness.
pub fn verify_scheme(
    dm: &DistanceMatrix,
    scheme: &dyn Scheme,
    opts: &VerifyOptions,
    samples: &[Sample],
) -> VerificationReport {
    let family: HashSet<FixedBitSet> = if opts.proper {
        enumerate_balls(dm, opts.radius)
            .into_iter()
            .map(|b| b.members().clone())
            .collect()
    } else {
        HashSet::new()
    };
    let outcomes: Vec<Outcome> = samples
        .par_iter()
        .map(|x| check_one(dm, scheme, opts, &family, x))
        .collect();
    let mut report = VerificationReport {
        scheme: scheme.id(),
        samples_tested: samples.len(),
        failures: Vec::new(),
        max_support: 0,
        properness_violations: 0,
        approx: opts.approx,
    };
    for (x, o) in samples.iter().zip(outcomes) {
        report.max_support = report.max_support.max(o.support);
        report.properness_violations += usize::from(o.improper);
        if let Some(reason) = o.failure {
            report.failures.push(Failure {
                sample: x.clone(),
                reason,
            });
        }
    }
    report
}

fn check_one(
    dm: &DistanceMatrix,
    scheme: &dyn Scheme,
    opts: &VerifyOptions,
    family: &HashSet<FixedBitSet>,
    x: &Sample,
) -> Outcome {
    let mut out = Outcome {
        support: 0,
        improper: false,
        failure: None,
    };
    let y = match scheme.compress(x) {
        Ok(y) => y,
        Err(e) => {
            out.failure = Some(format!("compress: {e}"));
            return out;
        }
    };
    out.support = y.support_size();
    if !y.is_subsample_of(x) {
        out.failure = Some(format!("compressed sample [{y}] is not a subsample"));
        return out;
    }
    if out.support > opts.k {
        out.failure = Some(format!("support {} exceeds {}", out.support, opts.k));
        return out;
    }
    let ball = match scheme.reconstruct(&y) {
        Ok(b) => b,
        Err(e) => {
            out.failure = Some(format!("reconstruct [{y}]: {e}"));
            return out;
        }
    };
    let positives = x.positives();
    if opts.proper {
        let ok = if ball.is_empty() {
            positives.is_empty()
        } else {
            family.contains(ball.members())
        };
        if !ok {
            out.improper = true;
            out.failure = Some(format!("reconstructed set from [{y}] is not in the family"));
            return out;
        }
    }
    let consistent = match opts.approx {
        None => ball.realizes(x),
        Some(a) => approx_consistent(dm, &ball, x, a),
    };
    if !consistent {
        out.failure = Some(format!(
            "[{y}] reconstructs to {:?} which is inconsistent",
            ball.vertices()
        ));
    }
    out
}

fn approx_consistent(dm: &DistanceMatrix, ball: &Ball, x: &Sample, a: ApproxParams) -> bool {
    let (c, r2) = match ball.center() {
        None => return x.positives().is_empty(),
        Some(Center::Vertex(c)) => (c, ball.radius().twice()),
        Some(Center::Midpoint(..)) => return false,
    };
    x.signs().iter().enumerate().all(|(v, s)| {
        let d2 = 2 * dm.get(c, v);
        match s {
            Some(Sign::Pos) => d2 <= r2 + a.rho.twice(),
            Some(Sign::Neg) => r2 < a.mu.twice() || d2 > r2 - a.mu.twice(),
            None => true,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::{enumerate_realizable_samples, realizing_balls};
    use crate::graph::Graph;

    /// Keeps the whole sample and decodes it to its first realizing ball.
    struct Identity {
        family: Vec<Ball>,
        n: usize,
    }

    impl Scheme for Identity {
        fn id(&self) -> String {
            "identity".into()
        }
        fn compress(&self, x: &Sample) -> Result<CompressedSample> {
            let e: Vec<_> = x.support().into_iter().map(|v| (v, x.get(v).unwrap())).collect();
            Ok(CompressedSample::from_entries(&e))
        }
        fn reconstruct(&self, y: &CompressedSample) -> Result<Ball> {
            let x = Sample::from_sets(self.n, &y.with_sign(Sign::Pos), &y.with_sign(Sign::Neg));
            Ok(realizing_balls(&x, &self.family)[0].clone())
        }
    }

    struct AlwaysZero(DistanceMatrix);

    impl Scheme for AlwaysZero {
        fn id(&self) -> String {
            "broken".into()
        }
        fn compress(&self, _: &Sample) -> Result<CompressedSample> {
            Ok(CompressedSample::from_entries(&[]))
        }
        fn reconstruct(&self, _: &CompressedSample) -> Result<Ball> {
            Ok(Ball::new(&self.0, 0, 0))
        }
    }

    #[test]
    fn identity_scheme_matches_direct_check() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let dm = g.distances();
        let family = enumerate_balls(&dm, None);
        let samples = enumerate_realizable_samples(4, &family, None);
        let id = Identity { family, n: 4 };
        let report = verify_scheme(&dm, &id, &VerifyOptions::exact(2), &samples);
        let too_big = samples.iter().filter(|x| x.support_size() > 2).count();
        assert_eq!(report.failures.len(), too_big);
        assert!(report.failures.iter().all(|f| f.sample.support_size() > 2));
        let report = verify_scheme(&dm, &id, &VerifyOptions::exact(4), &samples);
        assert!(report.passed());
        assert_eq!(report.max_support, 4);
    }

    #[test]
    fn broken_reconstructor_is_caught() {
        let dm = Graph::new(3, &[(0, 1), (1, 2)]).unwrap().distances();
        let x = Sample::from_sets(3, &[2], &[]);
        let report = verify_scheme(&dm, &AlwaysZero(dm.clone()), &VerifyOptions::exact(2), std::slice::from_ref(&x));
        assert_eq!(report.failures.len(), 1);
        assert_eq!(report.failures[0].sample, x);
        assert!(report.to_string().starts_with("scheme=broken samples=1 failures=1 max_support=0"));
    }
}
