//! Boundary words of vertex inflation.
//!
//! A boundary vertex touching one outermost tile is an `a`, one between two
//! outermost tiles is a `b`. One inflation step replaces every letter by its
//! image word; for `{5,4}` that is `a -> abaab`, `b -> ab`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{GeometryError, TilingParams};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum InflationError {
    #[error("invalid letter {0:?}: expected 'a' or 'b'")]
    InvalidLetter(char),
    #[error("a cyclic sequence cannot be empty")]
    EmptyCyclic,
    #[error("{0}")]
    Geometry(#[from] GeometryError),
    #[error("no explicit inflation rule for {{{n},{k}}}: need n >= 4 and k >= 4")]
    UnsupportedTiling { n: u32, k: u32 },
    #[error("{0}")]
    Parse(#[from] ParseFailure),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseFailure {
    #[error("no decomposition into image blocks (parse stops at letter {position})")]
    NoParse { position: usize },
    #[error("{count} distinct block decompositions; first ambiguity at letter {position}")]
    Ambiguous { count: usize, position: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    #[serde(rename = "a")]
    A,
    #[serde(rename = "b")]
    B,
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::A => 0,
            Letter::B => 1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }

    pub fn from_char(c: char) -> Result<Self, InflationError> {
        match c {
            'a' => Ok(Letter::A),
            'b' => Ok(Letter::B),
            other => Err(InflationError::InvalidLetter(other)),
        }
    }

    /// Number of outermost tiles meeting at a boundary vertex of this type.
    pub fn boundary_tiles(self) -> usize {
        self.index() + 1
    }
}

/// A word over `{a, b}`. Cyclic words are stored linearly from their anchor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LetterSequence {
    letters: Vec<Letter>,
    cyclic: bool,
    layer: u32,
}

impl LetterSequence {
    pub fn new(letters: Vec<Letter>, cyclic: bool, layer: u32) -> Result<Self, InflationError> {
        if cyclic && letters.is_empty() {
            return Err(InflationError::EmptyCyclic);
        }
        Ok(Self { letters, cyclic, layer })
    }

    pub fn parse(word: &str, cyclic: bool, layer: u32) -> Result<Self, InflationError> {
        let letters = word.chars().map(Letter::from_char).collect::<Result<_, _>>()?;
        Self::new(letters, cyclic, layer)
    }

    /// Linear word at layer 0.
    pub fn linear(word: &str) -> Result<Self, InflationError> {
        Self::parse(word, false, 0)
    }

    /// The boundary of a single tile: `a^n`, cyclic, layer 0.
    pub fn seed(n: usize) -> Self {
        Self {
            letters: vec![Letter::A; n.max(1)],
            cyclic: true,
            layer: 0,
        }
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

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn layer(&self) -> u32 {
        self.layer
    }

    /// Letter at a position, wrapping around for cyclic words.
    pub fn at(&self, i: usize) -> Letter {
        self.letters[i % self.letters.len()]
    }

    /// Cyclic substring starting at `start`.
    pub fn window(&self, start: usize, len: usize) -> LetterSequence {
        let letters = (0..len).map(|i| self.at(start + i)).collect();
        LetterSequence {
            letters,
            cyclic: false,
            layer: self.layer,
        }
    }

    /// The same cyclic word read from another anchor.
    pub fn rotated(&self, by: usize) -> LetterSequence {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            letters.rotate_left(by % self.len());
        }
        LetterSequence { letters, ..*self }
    }
}

impl fmt::Display for LetterSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for LetterSequence {
    type Err = InflationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::linear(s)
    }
}

impl Serialize for LetterSequence {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn letter_counts(seq: &LetterSequence) -> (usize, usize) {
    let b = seq.letters.iter().filter(|&&l| l == Letter::B).count();
    (seq.len() - b, b)
}

/// Letters produced per input letter: `m[source][produced]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubstitutionMatrix {
    pub m: [[u64; 2]; 2],
}

impl SubstitutionMatrix {
    pub fn identity() -> Self {
        Self { m: [[1, 0], [0, 1]] }
    }

    pub fn trace(&self) -> u64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn determinant(&self) -> i128 {
        self.m[0][0] as i128 * self.m[1][1] as i128 - self.m[0][1] as i128 * self.m[1][0] as i128
    }

    /// Image-word lengths per letter.
    pub fn row_sums(&self) -> [u64; 2] {
        [self.m[0][0] + self.m[0][1], self.m[1][0] + self.m[1][1]]
    }

    /// Letter counts after one step: `counts · M`.
    pub fn apply(&self, counts: (u64, u64)) -> (u64, u64) {
        (
            counts.0 * self.m[0][0] + counts.1 * self.m[1][0],
            counts.0 * self.m[0][1] + counts.1 * self.m[1][1],
        )
    }

    pub fn multiply(&self, other: &SubstitutionMatrix) -> SubstitutionMatrix {
        let mut m = [[0u64; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.m[i][0] * other.m[0][j] + self.m[i][1] * other.m[1][j];
            }
        }
        SubstitutionMatrix { m }
    }

    pub fn power(&self, e: u32) -> SubstitutionMatrix {
        (0..e).fold(Self::identity(), |acc, _| acc.multiply(self))
    }
}

/// Largest eigenvalue of a nonnegative 2×2 matrix.
pub fn perron_eigenvalue(m: &SubstitutionMatrix) -> f64 {
    let t = m.trace() as f64;
    let disc = (t * t - 4.0 * m.determinant() as f64).max(0.0);
    (t + disc.sqrt()) / 2.0
}

/// `lambda = (2 + f + sqrt((4 + f) f)) / 2` with `f = nk - 2(n + k)`.
pub fn scale_factor(p: &TilingParams) -> Result<f64, GeometryError> {
    let f = p.f();
    if f < 0 {
        return Err(GeometryError::NotHyperbolic { n: p.n, k: p.k, f });
    }
    let f = f as f64;
    Ok((2.0 + f + ((4.0 + f) * f).sqrt()) / 2.0)
}

/// Preimage found by [`SubstitutionRule::deflate`]. `anchor` is the index in
/// the deflated word where the image of `preimage[0]` starts.
#[derive(Debug, Clone, PartialEq)]
pub struct Deflation {
    pub preimage: LetterSequence,
    pub anchor: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubstitutionRule {
    images: [Vec<Letter>; 2],
}

impl SubstitutionRule {
    pub fn new(image_a: Vec<Letter>, image_b: Vec<Letter>) -> Self {
        Self {
            images: [image_a, image_b],
        }
    }

    /// `a -> abaab`, `b -> ab`.
    pub fn pentagon() -> Self {
        use Letter::{A, B};
        Self::new(vec![A, B, A, A, B], vec![A, B])
    }

    /// Vertex inflation of `{n,k}` for `n, k >= 4`. A boundary vertex with
    /// `t` outer tiles gets `k - t - 1` outward edges; its image is
    /// `a^(n-4) b (a^(n-3) b)^(k-t-2)`.
    pub fn for_tiling(n: u32, k: u32) -> Result<Self, InflationError> {
        if n < 4 || k < 4 {
            return Err(InflationError::UnsupportedTiling { n, k });
        }
        let image = |t: u32| {
            let out = (k - t - 1) as usize;
            let mut w = vec![Letter::A; n as usize - 4];
            w.push(Letter::B);
            for _ in 1..out {
                w.extend(std::iter::repeat_n(Letter::A, n as usize - 3));
                w.push(Letter::B);
            }
            w
        };
        Ok(Self::new(image(1), image(2)))
    }

    pub fn image(&self, letter: Letter) -> &[Letter] {
        &self.images[letter.index()]
    }

    pub fn matrix(&self) -> SubstitutionMatrix {
        let mut m = [[0u64; 2]; 2];
        for (src, image) in self.images.iter().enumerate() {
            for l in image {
                m[src][l.index()] += 1;
            }
        }
        SubstitutionMatrix { m }
    }

    pub fn inflate(&self, seq: &LetterSequence) -> LetterSequence {
        let letters = seq
            .letters
            .iter()
            .flat_map(|&l| self.image(l).iter().copied())
            .collect();
        LetterSequence {
            letters,
            cyclic: seq.cyclic,
            layer: seq.layer + 1,
        }
    }

    /// Inverts [`inflate`](Self::inflate). Linear words must decompose into
    /// image blocks from the first letter; cyclic words may start anywhere,
    /// but all block-aligned readings must agree on the block boundaries.
    pub fn deflate(&self, seq: &LetterSequence) -> Result<Deflation, ParseFailure> {
        if !seq.cyclic {
            let blocks = self.parse_linear(&seq.letters)?;
            let preimage = LetterSequence {
                letters: blocks.into_iter().map(|(_, l)| l).collect(),
                cyclic: false,
                layer: seq.layer.saturating_sub(1),
            };
            return Ok(Deflation { preimage, anchor: 0 });
        }
        let len = seq.len();
        let max_block = self.images.iter().map(Vec::len).max().unwrap_or(1);
        let mut parses: Vec<Vec<(usize, Letter)>> = Vec::new();
        let mut first_failure = 0;
        for offset in 0..max_block.min(len) {
            let rotated = seq.rotated(offset);
            match self.parse_linear(&rotated.letters) {
                Ok(blocks) => {
                    let mut blocks: Vec<(usize, Letter)> =
                        blocks.into_iter().map(|(s, l)| ((s + offset) % len, l)).collect();
                    blocks.sort_unstable_by_key(|&(s, _)| s);
                    if !parses.contains(&blocks) {
                        parses.push(blocks);
                    }
                }
                Err(ParseFailure::NoParse { position }) => {
                    first_failure = first_failure.max((position + offset) % len)
                }
                Err(e) => return Err(e),
            }
        }
        match parses.len() {
            0 => Err(ParseFailure::NoParse {
                position: first_failure,
            }),
            1 => {
                let blocks = parses.pop().expect("one parse");
                let anchor = blocks[0].0;
                Ok(Deflation {
                    preimage: LetterSequence {
                        letters: blocks.into_iter().map(|(_, l)| l).collect(),
                        cyclic: true,
                        layer: seq.layer.saturating_sub(1),
                    },
                    anchor,
                })
            }
            count => {
                let position = (0..len)
                    .find(|p| {
                        let first = parses[0].iter().any(|&(s, _)| s == *p);
                        parses.iter().any(|b| b.iter().any(|&(s, _)| s == *p) != first)
                    })
                    .unwrap_or(0);
                Err(ParseFailure::Ambiguous { count, position })
            }
        }
    }

    /// Unique decomposition of a linear word into image blocks, as
    /// (block start, source letter) pairs.
    fn parse_linear(&self, word: &[Letter]) -> Result<Vec<(usize, Letter)>, ParseFailure> {
        let n = word.len();
        // ways[i]: number of parses of word[i..], capped at 2
        let mut ways = vec![0u8; n + 1];
        ways[n] = 1;
        for i in (0..n).rev() {
            let mut w = 0u8;
            for letter in [Letter::A, Letter::B] {
                let img = self.image(letter);
                if !img.is_empty() && word[i..].starts_with(img) {
                    w = (w + ways[i + img.len()]).min(2);
                }
            }
            ways[i] = w;
        }
        if ways[0] == 0 {
            let mut reach = 0;
            while reach < n {
                let step = [Letter::A, Letter::B]
                    .into_iter()
                    .map(|l| self.image(l))
                    .find(|img| !img.is_empty() && word[reach..].starts_with(img) && ways[reach + img.len()] > 0);
                match step {
                    Some(img) => reach += img.len(),
                    None => break,
                }
            }
            return Err(ParseFailure::NoParse { position: reach });
        }
        let mut blocks = Vec::new();
        let mut i = 0;
        while i < n {
            let options: Vec<Letter> = [Letter::A, Letter::B]
                .into_iter()
                .filter(|&l| {
                    let img = self.image(l);
                    !img.is_empty() && word[i..].starts_with(img) && ways[i + img.len()] > 0
                })
                .collect();
            if options.len() > 1 || ways[i] > 1 {
                return Err(ParseFailure::Ambiguous { count: 2, position: i });
            }
            let letter = options[0];
            blocks.push((i, letter));
            i += self.image(letter).len();
        }
        Ok(blocks)
    }
}

impl Default for SubstitutionRule {
    fn default() -> Self {
        Self::pentagon()
    }
}

pub fn inflate(seq: &LetterSequence) -> LetterSequence {
    SubstitutionRule::pentagon().inflate(seq)
}

pub fn deflate(seq: &LetterSequence) -> Result<LetterSequence, ParseFailure> {
    SubstitutionRule::pentagon().deflate(seq).map(|d| d.preimage)
}

/// Start offsets of `pattern` in `word`. Cyclic words are searched on the
/// doubled word, so matches may wrap; an empty pattern matches everywhere.
pub fn find_occurrences(pattern: &[Letter], word: &LetterSequence) -> Vec<usize> {
    let n = word.len();
    if pattern.is_empty() {
        return (0..n).collect();
    }
    let last_start = if word.cyclic {
        n
    } else {
        (n + 1).saturating_sub(pattern.len())
    };
    (0..last_start)
        .filter(|&s| {
            (word.cyclic || s + pattern.len() <= n)
                && pattern.iter().enumerate().all(|(i, &l)| word.at(s + i) == l)
        })
        .collect()
}

/// Offsets where the inflation of `block` occurs in `target`.
pub fn find_inflated_occurrences(block: &LetterSequence, target: &LetterSequence) -> Vec<usize> {
    find_occurrences(inflate(block).letters(), target)
}

/// Where a letter of layer `i + 1` comes from in layer `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParentLink {
    pub parent: usize,
    pub offset: usize,
}

/// Successive inflation layers with their parent maps.
#[derive(Debug, Clone)]
pub struct MqaStack {
    rule: SubstitutionRule,
    layers: Vec<LetterSequence>,
    parents: Vec<Vec<ParentLink>>,
    image_starts: Vec<Vec<usize>>,
}

impl MqaStack {
    pub fn build(rule: &SubstitutionRule, seed: LetterSequence, steps: u32) -> Self {
        let mut stack = Self {
            rule: rule.clone(),
            layers: vec![seed],
            parents: Vec::new(),
            image_starts: Vec::new(),
        };
        for _ in 0..steps {
            let prev = stack.layers.last().expect("seed present");
            let mut links = Vec::new();
            let mut starts = Vec::with_capacity(prev.len());
            for (p, &l) in prev.letters().iter().enumerate() {
                starts.push(links.len());
                links.extend((0..rule.image(l).len()).map(|offset| ParentLink { parent: p, offset }));
            }
            let next = rule.inflate(prev);
            stack.layers.push(next);
            stack.parents.push(links);
            stack.image_starts.push(starts);
        }
        stack
    }

    pub fn rule(&self) -> &SubstitutionRule {
        &self.rule
    }

    pub fn layers(&self) -> &[LetterSequence] {
        &self.layers
    }

    pub fn layer(&self, i: usize) -> &LetterSequence {
        &self.layers[i]
    }

    pub fn top(&self) -> &LetterSequence {
        self.layers.last().expect("stack is never empty")
    }

    pub fn steps(&self) -> usize {
        self.layers.len() - 1
    }

    /// Parent links of the letters of `layer` (`layer >= 1`).
    pub fn parents(&self, layer: usize) -> &[ParentLink] {
        &self.parents[layer - 1]
    }

    pub fn parent(&self, layer: usize, pos: usize) -> ParentLink {
        self.parents[layer - 1][pos]
    }

    /// Position of the ancestor `levels` layers up.
    pub fn ancestor(&self, layer: usize, pos: usize, levels: usize) -> usize {
        (0..levels).fold(pos, |p, i| self.parent(layer - i, p).parent)
    }

    /// Start and length, in layer `layer + 1`, of the image of a letter.
    pub fn image_range(&self, layer: usize, pos: usize) -> (usize, usize) {
        let start = self.image_starts[layer][pos];
        (start, self.rule.image(self.layers[layer].letters()[pos]).len())
    }

    /// Interval of layer `layer + levels` that descends from the interval
    /// `(start, len)` of `layer`, computed from letter counts rather than by
    /// inflating. Intervals are cyclic.
    pub fn descendant_interval(&self, layer: usize, start: usize, len: usize, levels: usize) -> (usize, usize) {
        let m = self.rule.matrix();
        let lengths: [u64; 2] = {
            let p = m.power(levels as u32);
            p.row_sums()
        };
        let word = &self.layers[layer];
        let cyclic_len = |from: usize, count: usize| -> usize {
            (0..count)
                .map(|i| lengths[word.at(from + i).index()] as usize)
                .sum()
        };
        let first = cyclic_len(0, start % word.len().max(1));
        (first, cyclic_len(start, len))
    }

    /// The largest cyclic gap between consecutive occurrences of any factor of
    /// length `1..=max_len` of layer `layer`.
    pub fn max_recurrence_gap(&self, layer: usize, max_len: usize) -> usize {
        let word = &self.layers[layer];
        let n = word.len();
        let mut worst = 0;
        for len in 1..=max_len.min(n) {
            let mut seen: HashMap<Vec<Letter>, Vec<usize>> = HashMap::new();
            for s in 0..n {
                seen.entry(word.window(s, len).letters).or_default().push(s);
            }
            for starts in seen.values() {
                let gaps = starts.windows(2).map(|w| w[1] - w[0]);
                let wrap = starts[0] + n - starts[starts.len() - 1];
                worst = worst.max(gaps.max().unwrap_or(0).max(wrap));
            }
        }
        worst
    }
}

pub fn mqa_build(seed: LetterSequence, steps: u32) -> MqaStack {
    MqaStack::build(&SubstitutionRule::pentagon(), seed, steps)
}
