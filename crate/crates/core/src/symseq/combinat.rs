//! Enumeration of permutations, subsets and set partitions of label lists.

/// All orderings of `items`, in lexicographic order when `items` is sorted.
pub fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Set partitions of `items` with blocks listed by increasing minimum and
/// each block sorted.
pub fn set_partitions(items: &[u32]) -> Vec<Vec<Vec<u32>>> {
    let mut sorted = items.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    let mut current: Vec<Vec<u32>> = Vec::new();
    fn rec(rest: &[u32], current: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        let Some((&x, tail)) = rest.split_first() else {
            out.push(current.clone());
            return;
        };
        for i in 0..current.len() {
            current[i].push(x);
            rec(tail, current, out);
            current[i].pop();
        }
        current.push(vec![x]);
        rec(tail, current, out);
        current.pop();
    }
    rec(&sorted, &mut current, &mut out);
    out
}

/// Ordered set partitions: every ordering of the blocks of every set partition.
pub fn ordered_set_partitions(items: &[u32]) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    for p in set_partitions(items) {
        let idx: Vec<u32> = (0..p.len() as u32).collect();
        for order in permutations(&idx) {
            out.push(order.iter().map(|&i| p[i as usize].clone()).collect());
        }
    }
    out
}

/// Ways of splitting `items` into an ordered pair of nonempty disjoint
/// subsets, both sorted.
pub fn proper_splits(items: &[u32]) -> Vec<(Vec<u32>, Vec<u32>)> {
    let n = items.len();
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    for mask in 1..(1u64 << n) - 1 {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (i, &x) in items.iter().enumerate() {
            if mask & (1 << i) != 0 {
                a.push(x);
            } else {
                b.push(x);
            }
        }
        out.push((a, b));
    }
    out
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
