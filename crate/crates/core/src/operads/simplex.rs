//! Simplices of permutations: faces, variations and text encoding.
//!
//! A permutation of an input set is stored as the word listing the inputs
//! in order; a simplex is a sequence of such words. A simplex with two equal
//! consecutive vertices is degenerate and vanishes in normalized chains.

use crate::symseq::fmt_labels;

use super::OperadError;

/// An ordering of an input set, as a word of labels.
pub type Perm = Vec<u32>;

pub fn is_degenerate(s: &[Perm]) -> bool {
    s.windows(2).any(|w| w[0] == w[1])
}

/// The alternating sum of faces, with degenerate faces dropped.
pub fn faces(s: &[Perm]) -> Vec<(Vec<Perm>, i64)> {
    if s.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(s.len());
    for i in 0..s.len() {
        // Removing an interior vertex can only create a repeat at i.
        if i > 0 && i + 1 < s.len() && s[i - 1] == s[i + 1] {
            continue;
        }
        let mut f = Vec::with_capacity(s.len() - 1);
        f.extend_from_slice(&s[..i]);
        f.extend_from_slice(&s[i + 1..]);
        out.push((f, if i % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// Restriction of an ordering to the two labels `e` and `f`: true when `e`
/// comes first.
pub fn pair_order(w: &[u32], e: u32, f: u32) -> bool {
    for &x in w {
        if x == e {
            return true;
        }
        if x == f {
            return false;
        }
    }
    panic!("labels {e} and {f} are not both present in {w:?}")
}

/// Number of changes in the restricted orderings of the pair `{e, f}` along
/// the simplex.
pub fn pair_variations(s: &[Perm], e: u32, f: u32) -> u32 {
    let mut count = 0;
    let mut prev: Option<bool> = None;
    for w in s {
        let o = pair_order(w, e, f);
        if prev.is_some_and(|p| p != o) {
            count += 1;
        }
        prev = Some(o);
    }
    count
}

/// Position of each label in an ordering, indexed through a sorted label list.
fn positions(w: &[u32], labels: &[u32]) -> Vec<usize> {
    let mut pos = vec![0; labels.len()];
    for (i, x) in w.iter().enumerate() {
        let k = labels.binary_search(x).expect("label of the input set");
        pos[k] = i;
    }
    pos
}

/// Maximal pairwise variation count (zero in arity 1).
pub fn max_variations(s: &[Perm]) -> u32 {
    let Some(first) = s.first() else {
        return 0;
    };
    let mut labels = first.clone();
    labels.sort_unstable();
    let r = labels.len();
    let pos: Vec<Vec<usize>> = s.iter().map(|w| positions(w, &labels)).collect();
    let mut best = 0;
    for a in 0..r {
        for b in a + 1..r {
            let mut count = 0;
            for t in 1..pos.len() {
                if (pos[t - 1][a] < pos[t - 1][b]) != (pos[t][a] < pos[t][b]) {
                    count += 1;
                }
            }
            best = best.max(count);
        }
    }
    best
}

/// One plus the maximal pairwise variation count: the least `n` such that
/// the simplex lies in the E_n filtration.
pub fn filtration_level(s: &[Perm]) -> u32 {
    1 + max_variations(s)
}

/// Text form `[w_0|w_1|...]`.
pub fn encode_simplex(s: &[Perm]) -> String {
    format!(
        "[{}]",
        s.iter().map(|w| fmt_labels(w)).collect::<Vec<_>>().join("|")
    )
}

/// Parses `[12|21]` (digits) or `[1,2|2,1]` (comma separated labels).
pub fn parse_simplex(text: &str) -> Result<Vec<Perm>, OperadError> {
    let bad = || OperadError::Parse(text.to_string());
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(bad)?;
    let mut out = Vec::new();
    for part in inner.split('|') {
        let w: Option<Vec<u32>> = if part.contains(',') {
            part.split(',').map(|x| x.trim().parse::<u32>().ok()).collect()
        } else {
            part.chars().map(|c| c.to_digit(10)).collect()
        };
        out.push(w.ok_or_else(bad)?);
    }
    let mut first = out.first().cloned().ok_or_else(bad)?;
    first.sort_unstable();
    for w in &out {
        let mut s = w.clone();
        s.sort_unstable();
        if s != first || s.windows(2).any(|p| p[0] == p[1]) {
            return Err(bad());
        }
    }
    Ok(out)
}
