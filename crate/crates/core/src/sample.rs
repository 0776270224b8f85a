//! Samples (sign vectors over the vertex set) and compressed samples.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

/// A sign assignment `V -> {+1, -1, 0}`; `None` is the zero label.
///
/// The derived order is lexicographic with `0 < + < -` per vertex, so the
/// all-zero sample comes first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sample {
    signs: Vec<Option<Sign>>,
}

impl Sample {
    pub fn zero(n: usize) -> Self {
        Sample {
            signs: vec![None; n],
        }
    }

    pub fn from_sets(n: usize, pos: &[usize], neg: &[usize]) -> Self {
        let mut s = Sample::zero(n);
        for &v in pos {
            s.signs[v] = Some(Sign::Pos);
        }
        for &v in neg {
            assert!(s.signs[v].is_none(), "vertex {v} is both positive and negative");
            s.signs[v] = Some(Sign::Neg);
        }
        s
    }

    pub fn from_signs(signs: Vec<Option<Sign>>) -> Self {
        Sample { signs }
    }

    pub fn n(&self) -> usize {
        self.signs.len()
    }

    pub fn get(&self, v: usize) -> Option<Sign> {
        self.signs[v]
    }

    pub fn set(&mut self, v: usize, s: Option<Sign>) {
        self.signs[v] = s;
    }

    pub fn signs(&self) -> &[Option<Sign>] {
        &self.signs
    }

    fn with(&self, sign: Sign) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.signs[v] == Some(sign)).collect()
    }

    /// `X⁺`, ascending.
    pub fn positives(&self) -> Vec<usize> {
        self.with(Sign::Pos)
    }

    /// `X⁻`, ascending.
    pub fn negatives(&self) -> Vec<usize> {
        self.with(Sign::Neg)
    }

    /// Vertices with a nonzero label, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.signs[v].is_some()).collect()
    }

    pub fn support_size(&self) -> usize {
        self.signs.iter().filter(|s| s.is_some()).count()
    }

    /// Whether `set` contains every positive and no negative vertex.
    pub fn is_realized_by(&self, contains: impl Fn(usize) -> bool) -> bool {
        self.signs.iter().enumerate().all(|(v, s)| match s {
            Some(Sign::Pos) => contains(v),
            Some(Sign::Neg) => !contains(v),
            None => true,
        })
    }
}

impl fmt::Display for Sample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, s) in self.signs.iter().enumerate() {
            if let Some(s) = s {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}{}", s.symbol(), v)?;
                first = false;
            }
        }
        if first {
            f.write_str("{}")?;
        }
        Ok(())
    }
}

/// Nonnegative multiples of one half, stored as twice the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt(pub u32);

impl HalfInt {
    pub fn from_int(v: u32) -> Self {
        HalfInt(2 * v)
    }

    pub fn twice(self) -> u32 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0.is_multiple_of(2)
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.0) / 2.0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// An ordered vector of slots, each a signed vertex or empty (`*`), split
/// into consecutive groups (e.g. `2+4+8+8`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompressedSample {
    pub slots: Vec<Option<(usize, Sign)>>,
    pub groups: Vec<usize>,
}

impl CompressedSample {
    /// All slots empty.
    pub fn blank(groups: &[usize]) -> Self {
        CompressedSample {
            slots: vec![None; groups.iter().sum()],
            groups: groups.to_vec(),
        }
    }

    /// A single group holding `entries` in order.
    pub fn from_entries(entries: &[(usize, Sign)]) -> Self {
        CompressedSample {
            slots: entries.iter().copied().map(Some).collect(),
            groups: vec![entries.len()],
        }
    }

    pub fn support_size(&self) -> usize {
        self.slots.iter().filter(|s| s.is_some()).count()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, Sign)> + '_ {
        self.slots.iter().flatten().copied()
    }

    pub fn with_sign(&self, sign: Sign) -> Vec<usize> {
        self.entries().filter(|e| e.1 == sign).map(|e| e.0).collect()
    }

    /// Slot `i` as a vertex, ignoring its sign.
    pub fn vertex(&self, i: usize) -> Option<usize> {
        self.slots[i].map(|e| e.0)
    }

    /// Whether every filled slot agrees with the sample (`α(X) ⪯ X`).
    pub fn is_subsample_of(&self, x: &Sample) -> bool {
        self.entries()
            .all(|(v, s)| v < x.n() && x.get(v) == Some(s))
    }

    /// Errors unless the slot layout equals `groups`.
    pub fn expect_groups(&self, groups: &[usize]) -> Result<()> {
        if self.groups == groups && self.slots.len() == groups.iter().sum::<usize>() {
            Ok(())
        } else {
            Err(Error::MalformedInput(format!(
                "expected slot groups {groups:?}, got {:?}",
                self.groups
            )))
        }
    }

    /// Parses the `Display` form, e.g. `+0 * | -3`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut slots = Vec::new();
        let mut groups = Vec::new();
        for part in text.split('|') {
            let before = slots.len();
            for tok in part.split_whitespace() {
                if tok == "*" {
                    slots.push(None);
                    continue;
                }
                let (sign, rest) = match tok.chars().next() {
                    Some('+') => (Sign::Pos, &tok[1..]),
                    Some('-') => (Sign::Neg, &tok[1..]),
                    _ => return Err(Error::MalformedInput(format!("bad slot {tok:?}"))),
                };
                let v = rest
                    .parse()
                    .map_err(|_| Error::MalformedInput(format!("bad slot {tok:?}")))?;
                slots.push(Some((v, sign)));
            }
            groups.push(slots.len() - before);
        }
        Ok(CompressedSample { slots, groups })
    }
}

impl fmt::Display for CompressedSample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        for (gi, &len) in self.groups.iter().enumerate() {
            if gi > 0 {
                f.write_str(" |")?;
            }
            for j in 0..len {
                if gi > 0 || j > 0 {
                    f.write_str(" ")?;
                }
                match self.slots[i] {
                    Some((v, s)) => write!(f, "{}{}", s.symbol(), v)?,
                    None => f.write_str("*")?,
                }
                i += 1;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_views() {
        let x = Sample::from_sets(5, &[0, 3], &[4]);
        assert_eq!(x.positives(), vec![0, 3]);
        assert_eq!(x.negatives(), vec![4]);
        assert_eq!(x.support(), vec![0, 3, 4]);
        assert_eq!(x.to_string(), "+0 +3 -4");
        assert!(Sample::zero(3) < Sample::from_sets(3, &[2], &[]));
        assert!(Sample::from_sets(3, &[2], &[]) < Sample::from_sets(3, &[], &[2]));
    }

    #[test]
    fn compressed_text_roundtrip() {
        let mut c = CompressedSample::blank(&[2, 1]);
        c.slots[0] = Some((0, Sign::Pos));
        c.slots[2] = Some((3, Sign::Neg));
        let text = c.to_string();
        assert_eq!(text, "+0 * | -3");
        assert_eq!(CompressedSample::parse(&text).unwrap(), c);
        let empty = CompressedSample::from_entries(&[]);
        assert_eq!(CompressedSample::parse(&empty.to_string()).unwrap(), empty);
    }

    #[test]
    fn subsample_order() {
        let x = Sample::from_sets(4, &[1], &[2]);
        assert!(CompressedSample::from_entries(&[(1, Sign::Pos)]).is_subsample_of(&x));
        assert!(!CompressedSample::from_entries(&[(2, Sign::Pos)]).is_subsample_of(&x));
    }

    #[test]
    fn half_int_display() {
        assert_eq!(HalfInt(3).to_string(), "3/2");
        assert_eq!(HalfInt::from_int(2).to_string(), "2");
    }
}
