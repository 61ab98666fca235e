//! Braid words on `f` strands, their statistics, and Markov moves.
//!
//! Text form: `B<f>: <letter> <letter> ...`, where a letter is a nonzero
//! signed generator index with an optional `^<m>` power. Letters may be
//! separated by whitespace or commas; `B3:` alone is the identity in `B_3`.

use std::fmt;
use std::str::FromStr;

use crate::diagram::PlanarDiagram;

/// One generator `sigma_index^(+-1)`; `index` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub positive: bool,
}

impl Letter {
    pub fn new(index: usize, positive: bool) -> Self {
        Letter { index, positive }
    }

    pub fn exponent(self) -> i64 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    pub fn inverse(self) -> Self {
        Letter { index: self.index, positive: !self.positive }
    }
}

/// A braid word with every letter expanded to exponent `+-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("at byte {pos}: expected `B<f>:` prefix")]
    MissingPrefix { pos: usize },
    #[error("at byte {pos}: strand count must be at least 1")]
    BadStrandCount { pos: usize },
    #[error("at byte {pos}: malformed letter `{token}`")]
    MalformedLetter { pos: usize, token: String },
    #[error("at byte {pos}: generator index 0 is not allowed")]
    ZeroIndex { pos: usize },
    #[error("at byte {pos}: generator {index} out of range for {strands} strands")]
    IndexOutOfRange { pos: usize, index: usize, strands: usize },
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1, "a braid needs at least one strand");
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::BadStrandCount { pos: 0 });
        }
        for l in &letters {
            if l.index == 0 {
                return Err(BraidError::ZeroIndex { pos: 0 });
            }
            if l.index >= strands {
                return Err(BraidError::IndexOutOfRange { pos: 0, index: l.index, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from signed indices, e.g. `[1, -2]` for `sigma_1 sigma_2^-1`.
    pub fn from_signed(strands: usize, signed: &[i64]) -> Result<Self, BraidError> {
        let mut letters = Vec::with_capacity(signed.len());
        for &i in signed {
            if i == 0 {
                return Err(BraidError::ZeroIndex { pos: 0 });
            }
            letters.push(Letter::new(i.unsigned_abs() as usize, i > 0));
        }
        BraidWord::new(strands, letters)
    }

    /// `sigma_1^m` on two strands.
    pub fn torus2(m: i64) -> Self {
        let letter = Letter::new(1, m > 0);
        BraidWord { strands: 2, letters: vec![letter; m.unsigned_abs() as usize] }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.index as i64 * l.exponent()).collect()
    }

    /// `e(b)`: the sum of the letter exponents.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.exponent()).sum()
    }

    /// Product of the transpositions `(i, i+1)` in word order.
    pub fn closure_permutation(&self) -> Permutation {
        let mut image: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            image.swap(l.index - 1, l.index);
        }
        Permutation(image)
    }

    /// Number of link components of the canonical closure.
    pub fn component_count(&self) -> usize {
        self.closure_permutation().cycle_count()
    }

    /// Cancels adjacent `sigma_i sigma_i^-1` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Self {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    /// `a b a^-1`.
    pub fn conjugate(&self, a: &BraidWord) -> Self {
        a.concat(self).concat(&a.inverse())
    }

    /// Embeds into `B_(f+1)` and appends `sigma_f^(+-1)`.
    pub fn stabilize(&self, positive: bool) -> Self {
        let mut letters = self.letters.clone();
        letters.push(Letter::new(self.strands, positive));
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Every word obtained by one application of
    /// `sigma_i sigma_(i+1) sigma_i = sigma_(i+1) sigma_i sigma_(i+1)`
    /// (either direction, both exponent signs) at some position.
    pub fn braid_relation_rewrites(&self) -> Vec<BraidWord> {
        let mut out = Vec::new();
        for (pos, w) in self.letters.windows(3).enumerate() {
            let same_sign = w[0].positive == w[1].positive && w[1].positive == w[2].positive;
            if !same_sign || w[0].index != w[2].index || w[0].index.abs_diff(w[1].index) != 1 {
                continue;
            }
            let mut letters = self.letters.clone();
            letters[pos] = w[1];
            letters[pos + 1] = w[0];
            letters[pos + 2] = w[1];
            out.push(BraidWord { strands: self.strands, letters });
        }
        out
    }

    pub fn closure_diagram(&self) -> PlanarDiagram {
        PlanarDiagram::braid_closure(self)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for i in self.signed() {
            write!(f, " {i}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(text: &str) -> Result<Self, BraidError> {
        parse_braid(text)
    }
}

fn digits_end(s: &str) -> usize {
    s.find(|c: char| !c.is_ascii_digit()).unwrap_or(s.len())
}

pub fn parse_braid(text: &str) -> Result<BraidWord, BraidError> {
    let lead = text.len() - text.trim_start().len();
    let body = &text[lead..];
    let rest = body
        .strip_prefix('B')
        .ok_or(BraidError::MissingPrefix { pos: lead })?;
    let n_len = digits_end(rest);
    let colon = rest[n_len..].trim_start();
    if n_len == 0 || !colon.starts_with(':') {
        return Err(if n_len == 0 {
            BraidError::BadStrandCount { pos: lead + 1 }
        } else {
            BraidError::MissingPrefix { pos: lead }
        });
    }
    let strands: usize = rest[..n_len]
        .parse()
        .map_err(|_| BraidError::BadStrandCount { pos: lead + 1 })?;
    if strands == 0 {
        return Err(BraidError::BadStrandCount { pos: lead + 1 });
    }
    let letters_at = text.len() - colon.len() + 1;

    let mut letters = Vec::new();
    let mut offset = letters_at;
    for piece in text[letters_at..].split(|c: char| c.is_whitespace() || c == ',') {
        let pos = offset;
        offset += piece.len() + 1;
        if piece.is_empty() {
            continue;
        }
        let malformed = || BraidError::MalformedLetter { pos, token: piece.to_string() };
        let (gen, power) = match piece.split_once('^') {
            Some((g, p)) => (g, Some(p)),
            None => (piece, None),
        };
        let index: i64 = parse_signed(gen).ok_or_else(malformed)?;
        let power: i64 = match power {
            Some(p) => parse_signed(p).ok_or_else(malformed)?,
            None => 1,
        };
        if index == 0 {
            return Err(BraidError::ZeroIndex { pos });
        }
        let abs = index.unsigned_abs() as usize;
        if abs >= strands {
            return Err(BraidError::IndexOutOfRange { pos, index: abs, strands });
        }
        let positive = (index > 0) == (power > 0);
        letters.extend(std::iter::repeat(Letter::new(abs, positive)).take(power.unsigned_abs() as usize));
    }
    Ok(BraidWord { strands, letters })
}

fn parse_signed(s: &str) -> Option<i64> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// A permutation of `{0, .., f-1}` given by its image list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn image(&self) -> &[usize] {
        &self.0
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.0.len()];
        let mut cycles = 0;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
            }
        }
        cycles
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(text: &str) -> BraidWord {
        text.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(b("B2: 1 1 1").signed(), vec![1, 1, 1]);
        assert_eq!(b("B3: 1 -2").signed(), vec![1, -2]);
        assert_eq!(b("B2: 1^3"), b("B2: 1 1 1"));
        assert_eq!(b("B3: 1,-2 , 1^-2").signed(), vec![1, -2, -1, -1]);
        assert_eq!(b("B4:").strands(), 4);
        assert!(b("B4:").is_empty());
        assert_eq!(b("  B3 : -1^-1").signed(), vec![1]);
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!(
            "B2: 3".parse::<BraidWord>(),
            Err(BraidError::IndexOutOfRange { pos: 4, index: 3, strands: 2 })
        );
        assert_eq!("B3: 1 0".parse::<BraidWord>(), Err(BraidError::ZeroIndex { pos: 6 }));
        assert_eq!("B0: 1".parse::<BraidWord>(), Err(BraidError::BadStrandCount { pos: 1 }));
        assert_eq!("1 2".parse::<BraidWord>(), Err(BraidError::MissingPrefix { pos: 0 }));
        assert_eq!("B: 1".parse::<BraidWord>(), Err(BraidError::BadStrandCount { pos: 1 }));
        assert!(matches!(
            "B3: 1 x2".parse::<BraidWord>(),
            Err(BraidError::MalformedLetter { pos: 6, .. })
        ));
        assert!(matches!("B3: 1^".parse::<BraidWord>(), Err(BraidError::MalformedLetter { .. })));
    }

    #[test]
    fn display_round_trips() {
        let w = b("B3: 1 -2 1^2");
        assert_eq!(w.to_string(), "B3: 1 -2 1 1");
        assert_eq!(b(&w.to_string()), w);
        assert_eq!(BraidWord::identity(2).to_string(), "B2:");
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(BraidWord::torus2(3).exponent_sum(), 3);
        assert_eq!(BraidWord::identity(5).exponent_sum(), 0);
        assert_eq!(b("B3: 1 -2").exponent_sum(), 0);
    }

    #[test]
    fn component_counts() {
        assert_eq!(BraidWord::identity(2).component_count(), 2);
        assert_eq!(BraidWord::torus2(1).component_count(), 1);
        assert_eq!(BraidWord::torus2(2).component_count(), 2);
        assert_eq!(b("B3: 1 2").component_count(), 1);
        assert_eq!(b("B4: 1 3").component_count(), 2);
    }

    #[test]
    fn free_reduction() {
        assert_eq!(b("B2: 1 -1").free_reduce(), BraidWord::identity(2));
        assert_eq!(b("B3: 1 2 -2 1").free_reduce(), b("B3: 1 1"));
        assert_eq!(b("B3: 1 2 -1").free_reduce(), b("B3: 1 2 -1"));
    }

    #[test]
    fn markov_moves() {
        let t = BraidWord::torus2(3);
        assert_eq!(t.conjugate(&b("B2: 1")).free_reduce(), t);
        assert_eq!(b("B2: 1").stabilize(true), b("B3: 1 2"));
        assert_eq!(BraidWord::identity(1).stabilize(true), b("B2: 1"));
        assert_eq!(b("B2: 1").stabilize(false), b("B3: 1 -2"));
    }

    #[test]
    fn braid_relation_rewrites() {
        assert_eq!(b("B3: 1 2 1").braid_relation_rewrites(), vec![b("B3: 2 1 2")]);
        assert_eq!(b("B3: -2 -1 -2").braid_relation_rewrites(), vec![b("B3: -1 -2 -1")]);
        assert!(b("B3: 1 -2 1").braid_relation_rewrites().is_empty());
        assert_eq!(b("B4: 3 1 2 1").braid_relation_rewrites(), vec![b("B4: 3 2 1 2")]);
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        fn word() -> impl Strategy<Value = BraidWord> {
            (2usize..=5).prop_flat_map(|f| {
                prop::collection::vec((1..f, any::<bool>()), 0..10).prop_map(move |ls| {
                    BraidWord::new(f, ls.into_iter().map(|(i, p)| Letter::new(i, p)).collect()).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn components_invariant_under_markov_moves(w in word(), a in word(), pos in any::<bool>()) {
                let a = BraidWord::new(w.strands(), a.letters().iter().copied()
                    .filter(|l| l.index < w.strands()).collect()).unwrap();
                prop_assert_eq!(w.conjugate(&a).component_count(), w.component_count());
                prop_assert_eq!(w.stabilize(pos).component_count(), w.component_count());
            }

            #[test]
            fn free_reduce_keeps_exponent_sum(w in word()) {
                let red = w.free_reduce();
                prop_assert_eq!(red.exponent_sum(), w.exponent_sum());
                prop_assert!(red.letters().windows(2).all(|p| p[0] != p[1].inverse()));
            }

            #[test]
            fn text_round_trip(w in word()) {
                prop_assert_eq!(w.to_string().parse::<BraidWord>().unwrap(), w);
            }
        }
    }
}
