use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// A monotone subsequence, given by strictly increasing positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotoneWitness {
    pub indices: Vec<usize>,
    pub direction: Direction,
    pub length: usize,
}

impl MonotoneWitness {
    /// Whether the positions are increasing and the values at them strictly
    /// monotone in the stated direction.
    pub fn verify<T: Ord>(&self, seq: &[T]) -> bool {
        self.length == self.indices.len()
            && self.indices.iter().all(|&i| i < seq.len())
            && self.indices.windows(2).all(|w| {
                w[0] < w[1]
                    && match self.direction {
                        Direction::Increasing => seq[w[0]] < seq[w[1]],
                        Direction::Decreasing => seq[w[0]] > seq[w[1]],
                    }
            })
    }

    /// Keep only the first `len` positions.
    pub fn truncate(&mut self, len: usize) {
        self.indices.truncate(len);
        self.length = self.indices.len();
    }
}

/// Longest strictly increasing subsequence positions, by the quadratic DP.
fn longest_increasing<T: Ord>(seq: &[T], less: impl Fn(&T, &T) -> bool) -> Vec<usize> {
    let n = seq.len();
    let mut len = vec![1usize; n];
    let mut prev = vec![usize::MAX; n];
    for j in 0..n {
        for i in 0..j {
            if less(&seq[i], &seq[j]) && len[i] + 1 > len[j] {
                len[j] = len[i] + 1;
                prev[j] = i;
            }
        }
    }
    let Some(mut j) = (0..n).max_by_key(|&j| (len[j], std::cmp::Reverse(j))) else {
        return Vec::new();
    };
    let mut out = vec![j];
    while prev[j] != usize::MAX {
        j = prev[j];
        out.push(j);
    }
    out.reverse();
    out
}

/// A longest increasing subsequence if it reaches length `a`, otherwise a
/// longest decreasing one, which then reaches length `b` whenever the
/// sequence has at least `(a-1)(b-1)+1` distinct entries.
///
/// ```
/// use minorlab::constructions::{es_monotone, Direction};
/// let w = es_monotone(&[3, 1, 4, 5, 9, 2, 6], 3, 4).unwrap();
/// assert_eq!((w.direction, w.length), (Direction::Increasing, 4));
/// ```
pub fn es_monotone<T: Ord + Clone>(seq: &[T], a: usize, b: usize) -> Result<MonotoneWitness> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter("targets must be positive".into()));
    }
    let needed = (a - 1) * (b - 1) + 1;
    if seq.len() < needed {
        return Err(Error::Precondition(format!(
            "sequence of length {} is shorter than (a-1)(b-1)+1 = {needed}",
            seq.len()
        )));
    }
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Precondition("sequence entries must be distinct".into()));
    }
    let inc = longest_increasing(seq, |x, y| x < y);
    if inc.len() >= a {
        return Ok(MonotoneWitness {
            length: inc.len(),
            indices: inc,
            direction: Direction::Increasing,
        });
    }
    let dec = longest_increasing(seq, |x, y| x > y);
    if dec.len() < b {
        return Err(Error::Internal("no monotone subsequence of the guaranteed length".into()));
    }
    Ok(MonotoneWitness {
        length: dec.len(),
        indices: dec,
        direction: Direction::Decreasing,
    })
}
