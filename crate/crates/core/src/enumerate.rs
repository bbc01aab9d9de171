//! Lazy enumeration of partitions of a fixed degree.

use alloc::vec::Vec;

use crate::partition::Partition;

/// Partitions of `r` in lexicographically descending order, optionally bounded
/// in length and largest part.
#[derive(Clone, Debug)]
pub struct PartitionsOf {
    current: Option<Vec<usize>>,
    max_len: usize,
    max_part: usize,
}

/// Every partition of `r`, lexicographically descending.
pub fn partitions_of(r: usize) -> PartitionsOf {
    PartitionsOf::new(r, None, None)
}

/// Every partition of every degree `0..=max_degree`, degree by degree.
pub fn partitions_up_to(max_degree: usize) -> impl Iterator<Item = Partition> {
    (0..=max_degree).flat_map(partitions_of)
}

/// Fills `rest` greedily with parts of size at most `cap`; `None` if `slots` is too few.
fn fill(out: &mut Vec<usize>, mut rest: usize, cap: usize, slots: usize) -> Option<()> {
    if rest == 0 {
        return Some(());
    }
    if cap == 0 || rest.div_ceil(cap) > slots {
        return None;
    }
    while rest > 0 {
        let p = rest.min(cap);
        out.push(p);
        rest -= p;
    }
    Some(())
}

impl PartitionsOf {
    pub fn new(r: usize, max_len: Option<usize>, max_part: Option<usize>) -> Self {
        let max_len = max_len.unwrap_or(r);
        let max_part = max_part.unwrap_or(r);
        let mut first = Vec::new();
        let current = fill(&mut first, r, max_part.min(r), max_len).map(|_| first);
        PartitionsOf { current, max_len, max_part }
    }

    fn advance(&self, a: &[usize]) -> Option<Vec<usize>> {
        let mut tail: usize = 0;
        for k in (0..a.len()).rev() {
            tail += a[k];
            if a[k] > 1 {
                let mut next = a[..k].to_vec();
                let p = a[k] - 1;
                next.push(p);
                let rest = tail - p;
                if fill(&mut next, rest, p.min(self.max_part), self.max_len - k - 1).is_some() {
                    return Some(next);
                }
            }
        }
        None
    }
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let a = self.current.take()?;
        self.current = self.advance(&a);
        Some(Partition::new(a).expect("enumerated parts are decreasing"))
    }
}
