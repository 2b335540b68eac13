//! Set partitions as restricted growth strings.

/// All restricted growth strings of length `n`: `s[0] = 0` and
/// `s[i] <= 1 + max(s[..i])`. Block `b` of the partition is `{i : s[i] = b}`.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(s: &mut Vec<usize>, n: usize, blocks: usize, out: &mut Vec<Vec<usize>>) {
        if s.len() == n {
            out.push(s.clone());
            return;
        }
        for b in 0..=blocks {
            s.push(b);
            go(s, n, blocks.max(b + 1), out);
            s.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), n, 0, &mut out);
    out
}

/// Number of set partitions of an `n`-element set, by enumeration.
pub fn count_set_partitions(n: usize) -> u64 {
    set_partitions(n).len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Partitions of {0..n} built by inserting each element into an existing
    /// block or a new one, compared as sets of blocks.
    fn by_insertion(n: usize) -> BTreeSet<BTreeSet<BTreeSet<usize>>> {
        let mut parts: Vec<Vec<BTreeSet<usize>>> = vec![Vec::new()];
        for x in 0..n {
            let mut next = Vec::new();
            for p in &parts {
                for k in 0..p.len() {
                    let mut q = p.clone();
                    q[k].insert(x);
                    next.push(q);
                }
                let mut q = p.clone();
                q.push(BTreeSet::from([x]));
                next.push(q);
            }
            parts = next;
        }
        parts.into_iter().map(|p| p.into_iter().collect()).collect()
    }

    #[test]
    fn counts() {
        assert_eq!(count_set_partitions(0), 1);
        assert_eq!(count_set_partitions(1), 1);
        assert_eq!(count_set_partitions(3), 5);
        assert_eq!(count_set_partitions(5), 52);
    }

    #[test]
    fn growth_strings_are_the_partitions() {
        for n in 0..=6 {
            let from_rgs: BTreeSet<BTreeSet<BTreeSet<usize>>> = set_partitions(n)
                .iter()
                .map(|s| {
                    let blocks = s.iter().max().map_or(0, |m| m + 1);
                    (0..blocks)
                        .map(|b| (0..n).filter(|&i| s[i] == b).collect())
                        .collect()
                })
                .collect();
            assert_eq!(from_rgs.len(), set_partitions(n).len());
            assert_eq!(from_rgs, by_insertion(n));
        }
    }
}
