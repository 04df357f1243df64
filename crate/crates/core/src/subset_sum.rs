//! Subset Sum with a target range, by reachability over partial sums.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetSumInstance {
    pub values: Vec<usize>,
    pub lo: usize,
    pub hi: usize,
}

impl SubsetSumInstance {
    pub fn new(values: Vec<usize>, lo: usize, hi: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Parameter("subset sum needs at least one value".into()));
        }
        if values.contains(&0) {
            return Err(Error::Parameter("subset sum values must be positive".into()));
        }
        if lo > hi {
            return Err(Error::Parameter(format!("empty target range [{lo}, {hi}]")));
        }
        Ok(Self { values, lo, hi })
    }
}

/// Indices of a subset whose sum lies in `[lo, hi]`, if one exists. The empty
/// subset counts, with sum 0. The smallest reachable sum in range is chosen.
pub fn solve_subset_sum_range(inst: &SubsetSumInstance) -> Option<Vec<usize>> {
    let total: usize = inst.values.iter().sum();
    if inst.lo > total {
        return None;
    }
    // from[σ] = index of the item that first reached σ; following the pointers
    // visits strictly decreasing indices, so no item is used twice.
    const UNREACHED: usize = usize::MAX;
    const ORIGIN: usize = usize::MAX - 1;
    let mut from = vec![UNREACHED; total + 1];
    from[0] = ORIGIN;
    for (i, &a) in inst.values.iter().enumerate() {
        for sigma in (a..=total).rev() {
            if from[sigma] == UNREACHED && from[sigma - a] != UNREACHED {
                from[sigma] = i;
            }
        }
    }
    let sigma = (inst.lo..=inst.hi.min(total)).find(|&s| from[s] != UNREACHED)?;
    let mut picked = Vec::new();
    let mut rest = sigma;
    while rest > 0 {
        let i = from[rest];
        picked.push(i);
        rest -= inst.values[i];
    }
    picked.sort_unstable();
    Some(picked)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(values: &[usize], lo: usize, hi: usize) -> Option<Vec<usize>> {
        solve_subset_sum_range(&SubsetSumInstance::new(values.to_vec(), lo, hi).unwrap())
    }

    #[test]
    fn examples() {
        let picked = solve(&[1, 2, 3], 3, 4).unwrap();
        let sum: usize = picked.iter().map(|&i| [1, 2, 3][i]).sum();
        assert!((3..=4).contains(&sum));
        assert_eq!(solve(&[5, 5], 1, 4), None);
        assert_eq!(solve(&[2, 2, 2], 2, 2).map(|p| p.len()), Some(1));
        assert_eq!(solve(&[4], 0, 0), Some(vec![]));
    }

    #[test]
    fn back_pointers_use_each_item_once() {
        let picked = solve(&[3, 3, 3], 9, 9).unwrap();
        assert_eq!(picked, vec![0, 1, 2]);
        assert_eq!(solve(&[3], 6, 6), None);
    }

    #[test]
    fn invalid_instances() {
        assert!(SubsetSumInstance::new(vec![], 0, 1).is_err());
        assert!(SubsetSumInstance::new(vec![1, 0], 0, 1).is_err());
        assert!(SubsetSumInstance::new(vec![1], 2, 1).is_err());
    }

    #[test]
    fn agrees_with_enumeration() {
        let values = [1, 4, 4, 7, 2];
        for lo in 0..20 {
            for hi in lo..20 {
                let brute = (0u32..32).any(|mask| {
                    let s: usize = (0..5).filter(|&i| mask & (1 << i) != 0).map(|i| values[i]).sum();
                    (lo..=hi).contains(&s)
                });
                let got = solve(&values, lo, hi);
                assert_eq!(got.is_some(), brute, "lo={lo} hi={hi}");
                if let Some(p) = got {
                    let s: usize = p.iter().map(|&i| values[i]).sum();
                    assert!((lo..=hi).contains(&s));
                }
            }
        }
    }
}
