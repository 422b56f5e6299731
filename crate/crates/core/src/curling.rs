//! Curling numbers of sequences and graphs.
//!
//! The string curling number of `s` is the largest `k` such that `s` can be
//! written as `X Y^k` with `Y` non-empty. For a graph the non-increasing
//! degree sequence is split into maximal constant runs `X_i^{k_i}`; the
//! curling number is `max k_i` and the compound curling number is `prod k_i`.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::multiset::DegreeMultiset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurlingError {
    EmptySequence,
    /// The sequence increases at `index` (`s[index - 1] < s[index]`).
    NotSorted {
        index: usize,
    },
    /// A compound curling number (or a product multiplicity) does not fit in
    /// 64 bits.
    Overflow,
}

impl fmt::Display for CurlingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurlingError::EmptySequence => f.write_str("sequence is empty"),
            CurlingError::NotSorted { index } => {
                write!(f, "sequence is not non-increasing at index {index}")
            }
            CurlingError::Overflow => f.write_str("arithmetic overflow"),
        }
    }
}

impl core::error::Error for CurlingError {}

/// Curling number of a finite sequence.
///
/// Scans every trailing block length `t` and counts how many consecutive
/// copies of the final `t` elements end the sequence. Block lengths that
/// cannot beat the current best are skipped.
pub fn string_curling_number<T: PartialEq>(s: &[T]) -> Result<usize, CurlingError> {
    let n = s.len();
    if n == 0 {
        return Err(CurlingError::EmptySequence);
    }
    let mut best = 1;
    for t in 1..=n / 2 {
        if n / t <= best {
            break;
        }
        let tail = &s[n - t..];
        let mut k = 1;
        while (k + 1) * t <= n && &s[n - (k + 1) * t..n - k * t] == tail {
            k += 1;
        }
        best = best.max(k);
    }
    Ok(best)
}

/// Exhaustive reference for [`string_curling_number`].
///
/// Tries every prefix length and every block length dividing the remainder,
/// and keeps the largest repeat count whose blocks are all equal.
pub fn string_curling_oracle<T: PartialEq>(s: &[T]) -> Result<usize, CurlingError> {
    let n = s.len();
    if n == 0 {
        return Err(CurlingError::EmptySequence);
    }
    let mut best = 0;
    for prefix in 0..n {
        let rest = &s[prefix..];
        for block in 1..=rest.len() {
            if !rest.len().is_multiple_of(block) {
                continue;
            }
            let first = &rest[..block];
            if rest.chunks(block).all(|c| c == first) {
                best = best.max(rest.len() / block);
            }
        }
    }
    Ok(best)
}

/// One maximal constant run of a sorted sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Run {
    pub value: usize,
    pub length: usize,
}

/// Maximal constant runs of a non-increasing sequence, values strictly
/// decreasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RunDecomposition {
    runs: Vec<Run>,
}

impl RunDecomposition {
    /// Runs of the degree sequence described by a multiset.
    pub fn from_multiset(m: &DegreeMultiset) -> Self {
        let runs = m
            .iter()
            .rev()
            .map(|(value, length)| Run { value, length })
            .collect();
        RunDecomposition { runs }
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    /// Number of runs, `l`.
    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Run> {
        self.runs.iter()
    }

    /// Sum of run lengths.
    pub fn total_length(&self) -> usize {
        self.runs.iter().map(|r| r.length).sum()
    }

    /// Largest run length; the curling number.
    pub fn max_length(&self) -> usize {
        self.runs.iter().map(|r| r.length).max().unwrap_or(0)
    }

    /// Product of run lengths; the compound curling number.
    pub fn length_product(&self) -> Result<u64, CurlingError> {
        self.runs.iter().try_fold(1u64, |acc, r| {
            u64::try_from(r.length)
                .ok()
                .and_then(|len| acc.checked_mul(len))
                .ok_or(CurlingError::Overflow)
        })
    }

    /// String curling number of the sequence these runs spell out.
    ///
    /// In a non-increasing sequence a block repeated twice or more must be
    /// constant, so the answer is the length of the last run.
    pub fn string_curling_number(&self) -> usize {
        self.runs.last().map_or(0, |r| r.length)
    }

    pub fn to_sequence(&self) -> Vec<usize> {
        let mut seq = Vec::with_capacity(self.total_length());
        for r in &self.runs {
            seq.extend(core::iter::repeat_n(r.value, r.length));
        }
        seq
    }
}

/// Splits a non-increasing sequence into maximal constant runs.
pub fn run_decomposition(sorted: &[usize]) -> Result<RunDecomposition, CurlingError> {
    if sorted.is_empty() {
        return Err(CurlingError::EmptySequence);
    }
    if let Some(i) = sorted.windows(2).position(|w| w[0] < w[1]) {
        return Err(CurlingError::NotSorted { index: i + 1 });
    }
    let runs = sorted
        .chunk_by(|a, b| a == b)
        .map(|c| Run {
            value: c[0],
            length: c.len(),
        })
        .collect();
    Ok(RunDecomposition { runs })
}

/// `cn(G)`: the largest multiplicity of any degree value.
pub fn graph_curling_number(g: &Graph) -> usize {
    multiset_curling_number(&g.degree_multiset())
}

/// `cn^c(G)`: the product of all degree multiplicities.
pub fn compound_curling_number(g: &Graph) -> Result<u64, CurlingError> {
    multiset_compound_curling_number(&g.degree_multiset())
}

pub fn multiset_curling_number(m: &DegreeMultiset) -> usize {
    m.max_multiplicity().unwrap_or(0)
}

pub fn multiset_compound_curling_number(m: &DegreeMultiset) -> Result<u64, CurlingError> {
    m.iter().try_fold(1u64, |acc, (_, c)| {
        u64::try_from(c)
            .ok()
            .and_then(|c| acc.checked_mul(c))
            .ok_or(CurlingError::Overflow)
    })
}

/// Everything the crate computes about a single graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurlingReport {
    pub order: usize,
    pub size: usize,
    /// Non-increasing.
    pub degree_sequence: Vec<usize>,
    pub runs: RunDecomposition,
    pub cn: usize,
    pub cnc: u64,
    /// String curling number of `degree_sequence`.
    pub string_cn: usize,
}

pub fn curling_report(g: &Graph) -> Result<CurlingReport, CurlingError> {
    let degree_sequence = g.degree_sequence();
    let runs = run_decomposition(&degree_sequence)?;
    let string_cn = string_curling_number(&degree_sequence)?;
    Ok(CurlingReport {
        order: g.order(),
        size: g.size(),
        cn: runs.max_length(),
        cnc: runs.length_product()?,
        runs,
        degree_sequence,
        string_cn,
    })
}
