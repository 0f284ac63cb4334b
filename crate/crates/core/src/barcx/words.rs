//! Level words, generator shapes and decorated composites.
//!
//! A level-`n` word on `s` leaves is stored flat: `seps[i]` is the level at
//! which leaves `i` and `i + 1` (counted from 0) part ways, an integer in
//! `1..=n`. The top-level factors are the runs between separators equal to
//! `n`, each of them a word of level `n - 1`, and so on down to single
//! leaves at level 0. Every level contributes one suspension per factor, so
//! the degree of the bare word is `n + Σ seps`.
//!
//! A generator shape is a separator vector alone: the leaves are then
//! `1, ..., s` from left to right, and every block at every level is an
//! interval. A [`Composite`] attaches a decoration to each leaf; with
//! commutative decorations (blocks of labels) it is a basis element of
//! `T^n ∘ C`, with simplices it is a basis element of `T^n ∘ E`.

use std::hash::Hash;
use std::ops::Range;

use crate::operads::{encode_simplex, Perm};
use crate::symseq::{fmt_labels, fmt_word, Bijection};

/// Leaf decorations of composites.
pub trait Leaf: Clone + Eq + Hash + Ord + Send + Sync + std::fmt::Debug {
    fn degree(&self) -> i64;
    /// Sorted input labels.
    fn labels(&self) -> Vec<u32>;
    fn encode(&self) -> String;
}

/// A commutative decoration: the block of labels a leaf carries.
pub type Block = Vec<u32>;

/// A Barratt-Eccles decoration.
pub type Simplex = Vec<Perm>;

impl Leaf for Block {
    fn degree(&self) -> i64 {
        0
    }

    fn labels(&self) -> Vec<u32> {
        self.clone()
    }

    fn encode(&self) -> String {
        fmt_labels(self)
    }
}

impl Leaf for Simplex {
    fn degree(&self) -> i64 {
        self.len() as i64 - 1
    }

    fn labels(&self) -> Vec<u32> {
        let mut l = self[0].clone();
        l.sort_unstable();
        l
    }

    fn encode(&self) -> String {
        encode_simplex(self)
    }
}

/// A level word whose leaves carry decorations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composite<D> {
    pub level: u8,
    pub seps: Vec<u8>,
    pub leaves: Vec<D>,
}

impl<D: Leaf> Composite<D> {
    pub fn new(level: u8, seps: Vec<u8>, leaves: Vec<D>) -> Self {
        debug_assert_eq!(seps.len() + 1, leaves.len());
        debug_assert!(seps.iter().all(|&s| s >= 1 && s <= level));
        Composite {
            level,
            seps,
            leaves,
        }
    }

    pub fn arity(&self) -> usize {
        self.leaves.len()
    }

    /// Degree of the underlying word.
    pub fn word_degree(&self) -> i64 {
        word_degree(self.level, &self.seps)
    }

    /// Total degree: word plus decorations.
    pub fn degree(&self) -> i64 {
        self.word_degree() + self.leaves.iter().map(|d| d.degree()).sum::<i64>()
    }

    /// Sorted labels of all inputs.
    pub fn labels(&self) -> Vec<u32> {
        let mut l: Vec<u32> = self.leaves.iter().flat_map(|d| d.labels()).collect();
        l.sort_unstable();
        l
    }

    /// Leaf ranges of the top-level factors.
    pub fn factors(&self) -> Vec<Range<usize>> {
        factor_ranges(&self.seps, self.level)
    }

    /// The factor on a leaf range, as a word of level `level - 1`.
    pub fn sub(&self, r: Range<usize>) -> Composite<D> {
        Composite {
            level: self.level - 1,
            seps: self.seps[r.start..r.end - 1].to_vec(),
            leaves: self.leaves[r].to_vec(),
        }
    }

    /// Concatenation of level `level - 1` words into a level `level` word.
    pub fn join(level: u8, parts: &[&Composite<D>]) -> Composite<D> {
        let mut seps = Vec::new();
        let mut leaves = Vec::new();
        for (i, p) in parts.iter().enumerate() {
            debug_assert_eq!(p.level + 1, level);
            if i > 0 {
                seps.push(level);
            }
            seps.extend_from_slice(&p.seps);
            leaves.extend(p.leaves.iter().cloned());
        }
        Composite {
            level,
            seps,
            leaves,
        }
    }

    /// The same leaves read as a level `level + 1` word with one factor.
    pub fn suspend(&self) -> Composite<D> {
        Composite {
            level: self.level + 1,
            seps: self.seps.clone(),
            leaves: self.leaves.clone(),
        }
    }

    /// Nested-bracket text, e.g. `((1)(2))((3))`.
    pub fn encode(&self) -> String {
        let leaves: Vec<String> = self.leaves.iter().map(|d| d.encode()).collect();
        fmt_word(self.level, &self.seps, &leaves)
    }
}

/// `n + Σ seps`.
pub fn word_degree(level: u8, seps: &[u8]) -> i64 {
    level as i64 + seps.iter().map(|&s| s as i64).sum::<i64>()
}

/// Leaf ranges of the factors of a word at `level`.
pub fn factor_ranges(seps: &[u8], level: u8) -> Vec<Range<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, &s) in seps.iter().enumerate() {
        if s >= level {
            out.push(start..i + 1);
            start = i + 1;
        }
    }
    out.push(start..seps.len() + 1);
    out
}

/// All generator shapes of `G^n(s)`, lexicographically: `n^(s-1)` of them.
pub fn generator_shapes(n: u8, s: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 1..s {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..=n).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

/// The generator of shape `seps` with singleton leaves `1, ..., s`.
pub fn generator(n: u8, seps: &[u8]) -> Composite<Block> {
    Composite::new(
        n,
        seps.to_vec(),
        (1..=seps.len() as u32 + 1).map(|i| vec![i]).collect(),
    )
}

/// Level of separation of leaves `i < j`: the largest separator between them.
pub fn separation_level(seps: &[u8], i: usize, j: usize) -> u8 {
    debug_assert!(i < j);
    seps[i..j].iter().copied().max().expect("distinct leaves")
}

/// A level word with labelled leaves, the basis of `T^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LevelWord {
    pub level: u8,
    pub seps: Vec<u8>,
    pub leaves: Vec<u32>,
}

impl LevelWord {
    pub fn degree(&self) -> i64 {
        word_degree(self.level, &self.seps)
    }

    pub fn encode(&self) -> String {
        let l: Vec<String> = self.leaves.iter().map(|x| x.to_string()).collect();
        fmt_word(self.level, &self.seps, &l)
    }

    /// The generator shape and the bijection `i ↦ leaves[i-1]` carrying the
    /// generator to this word. Relabelling keeps every factor in place, so
    /// no sign arises.
    pub fn canonicalize(&self) -> (Vec<u8>, Bijection, i64) {
        let u = Bijection::from_values(self.leaves.clone()).expect("distinct leaves");
        (self.seps.clone(), u, 1)
    }

    /// Relabels the leaves along `u`.
    pub fn relabel(&self, u: &Bijection) -> LevelWord {
        LevelWord {
            level: self.level,
            seps: self.seps.clone(),
            leaves: self.leaves.iter().map(|&x| u.apply(x)).collect(),
        }
    }

    /// Parses nested-bracket text such as `((1)(2))((3))`.
    pub fn parse(text: &str) -> Option<LevelWord> {
        // Depth of the outermost brackets gives the level.
        let chars: Vec<char> = text.trim().chars().collect();
        let level = chars.iter().take_while(|&&c| c == '(').count();
        if level == 0 || level > u8::MAX as usize {
            return None;
        }
        let mut depth = 0usize;
        let mut leaves = Vec::new();
        let mut seps = Vec::new();
        let mut min_depth_since_leaf = usize::MAX;
        let mut number = String::new();
        for &c in &chars {
            match c {
                '(' => depth += 1,
                ')' => {
                    if !number.is_empty() {
                        leaves.push(number.parse().ok()?);
                        number.clear();
                        min_depth_since_leaf = depth;
                    }
                    depth = depth.checked_sub(1)?;
                    min_depth_since_leaf = min_depth_since_leaf.min(depth);
                }
                d if d.is_ascii_digit() => {
                    if number.is_empty() && !leaves.is_empty() {
                        // brackets closed down to depth k separate at level n - k
                        seps.push((level - min_depth_since_leaf) as u8);
                    }
                    if depth != level {
                        return None;
                    }
                    number.push(d);
                }
                _ => return None,
            }
        }
        if depth != 0 || leaves.is_empty() {
            return None;
        }
        let w = LevelWord {
            level: level as u8,
            seps,
            leaves,
        };
        (w.encode() == text.trim()).then_some(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_and_degrees() {
        assert_eq!(generator_shapes(2, 3).len(), 4);
        assert_eq!(generator_shapes(3, 1), vec![Vec::<u8>::new()]);
        let g = generator(2, &[1, 2]);
        assert_eq!(g.encode(), "((1)(2))((3))");
        assert_eq!(g.degree(), 5);
        assert_eq!(generator(3, &[]).degree(), 3);
        assert_eq!(g.factors(), vec![0..2, 2..3]);
        assert_eq!(g.sub(0..2).encode(), "(1)(2)");
        assert_eq!(separation_level(&[1, 2, 1], 0, 1), 1);
        assert_eq!(separation_level(&[1, 2, 1], 0, 3), 2);
    }

    #[test]
    fn join_and_suspend() {
        let g = generator(2, &[1, 2, 1]);
        let parts: Vec<Composite<Block>> = g.factors().into_iter().map(|r| g.sub(r)).collect();
        let refs: Vec<&Composite<Block>> = parts.iter().collect();
        assert_eq!(Composite::join(2, &refs), g);
        let s = generator(1, &[1]).suspend();
        assert_eq!(s.encode(), "((1)(2))");
        assert_eq!(s.degree(), generator(1, &[1]).degree() + 1);
    }

    #[test]
    fn word_text_round_trips() {
        for t in ["((1)(2))((3))", "(2)(1)", "(((1)))", "((2)(3))((1)(4))", "((1))((2))"] {
            let w = LevelWord::parse(t).unwrap();
            assert_eq!(w.encode(), t);
        }
        assert!(LevelWord::parse("((1)(2)").is_none());
        assert!(LevelWord::parse("((1)2)").is_none());
    }

    #[test]
    fn canonical_form_round_trips() {
        let w = LevelWord::parse("((2)(3))((1)(4))").unwrap();
        let (shape, u, sign) = w.canonicalize();
        assert_eq!(sign, 1);
        let g = LevelWord {
            level: 2,
            seps: shape,
            leaves: vec![1, 2, 3, 4],
        };
        assert_eq!(g.relabel(&u), w);
    }
}
