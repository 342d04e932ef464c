//! Combinatorial descriptions of span categories: natural-number matrices for
//! `Q(F)`, words for `Q(F(as)_2)`, and matrices of permutations together with
//! shuffles for `Q(F(as))`.

use serde::{Deserialize, Serialize};

use crate::doublecat::DoubleKind;
use crate::error::{Error, Result};
use crate::ncset::{NcMap, Permutation};

use super::span::Span;

fn expect_kind(s: &Span, kind: DoubleKind) -> Result<()> {
    if s.kind() == kind {
        Ok(())
    } else {
        Err(Error::Kind {
            expected: kind,
            found: s.kind(),
        })
    }
}

/// An `rows × cols` matrix of natural numbers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawNatMatrix")]
pub struct NatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawNatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<usize>>,
}

impl TryFrom<RawNatMatrix> for NatMatrix {
    type Error = Error;
    fn try_from(raw: RawNatMatrix) -> Result<Self> {
        NatMatrix::new(raw.rows, raw.cols, raw.entries)
    }
}

impl NatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Vec<usize>>) -> Result<NatMatrix> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::invalid(
                "matrix",
                format!("entries do not form a {rows}x{cols} array"),
            ));
        }
        Ok(NatMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn identity(n: usize) -> NatMatrix {
        let entries = (0..n)
            .map(|i| (0..n).map(|j| usize::from(i == j)).collect())
            .collect();
        NatMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i - 1][j - 1]
    }

    /// `self · other`.
    pub fn mul(&self, other: &NatMatrix) -> Result<NatMatrix> {
        if self.cols != other.rows {
            return Err(Error::Arity(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = (0..self.rows)
            .map(|i| {
                (0..other.cols)
                    .map(|j| (0..self.cols).map(|k| self.entries[i][k] * other.entries[k][j]).sum())
                    .collect()
            })
            .collect();
        Ok(NatMatrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }
}

/// For `n <-phi- U -f-> m` the `m × n` matrix counting `phi^{-1}(j) ∩ f^{-1}(i)`.
pub fn qf_to_matrix(s: &Span) -> Result<NatMatrix> {
    expect_kind(s, DoubleKind::F)?;
    let mut entries = vec![vec![0; s.src()]; s.dst()];
    let phi = s.phi().values();
    for (u, &i) in s.f().values().iter().enumerate() {
        entries[i - 1][phi[u] - 1] += 1;
    }
    NatMatrix::new(s.dst(), s.src(), entries)
}

pub fn qf_from_matrix(m: &NatMatrix) -> Span {
    let mut phi_values = Vec::new();
    let mut f_values = Vec::new();
    for j in 1..=m.cols() {
        for i in 1..=m.rows() {
            for _ in 0..m.get(i, j) {
                phi_values.push(j);
                f_values.push(i);
            }
        }
    }
    let phi = NcMap::from_values(m.cols(), &phi_values);
    let f = NcMap::from_values(m.rows(), &f_values);
    Span::new(DoubleKind::F, phi, f).expect("legs share a source")
}

/// `n` words over the alphabet `x_1, ..., x_m`; letter `x_k` is stored as `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawWordTuple")]
pub struct WordTuple {
    alphabet: usize,
    words: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawWordTuple {
    alphabet: usize,
    words: Vec<Vec<usize>>,
}

impl TryFrom<RawWordTuple> for WordTuple {
    type Error = Error;
    fn try_from(raw: RawWordTuple) -> Result<Self> {
        WordTuple::new(raw.alphabet, raw.words)
    }
}

impl WordTuple {
    pub fn new(alphabet: usize, words: Vec<Vec<usize>>) -> Result<WordTuple> {
        if let Some(&bad) = words.iter().flatten().find(|&&x| x == 0 || x > alphabet) {
            return Err(Error::invalid(
                "word",
                format!("letter {bad} outside x_1..x_{alphabet}"),
            ));
        }
        Ok(WordTuple { alphabet, words })
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn words(&self) -> &[Vec<usize>] {
        &self.words
    }
}

/// The `i`-th word lists `f(u)` along the ordered fiber `phi^{-1}(i)`.
pub fn mon_words_of_span(s: &Span) -> Result<WordTuple> {
    expect_kind(s, DoubleKind::Fas2)?;
    let f = s.f().values();
    let words = s
        .phi()
        .fibers()
        .iter()
        .map(|fiber| fiber.iter().map(|&u| f[u - 1]).collect())
        .collect();
    WordTuple::new(s.dst(), words)
}

pub fn mon_span_of_words(w: &WordTuple) -> Span {
    let mut next = 0;
    let fibers = w
        .words()
        .iter()
        .map(|word| {
            let block = (next + 1..=next + word.len()).collect();
            next += word.len();
            block
        })
        .collect();
    let phi = NcMap::new(next, fibers).expect("consecutive blocks");
    let letters: Vec<usize> = w.words().iter().flatten().copied().collect();
    let f = NcMap::from_values(w.alphabet(), &letters);
    Span::new(DoubleKind::Fas2, phi, f).expect("legs share a source")
}

/// A permutation of `a_1 + ... + a_m` that increases on each consecutive block
/// of sizes `a_1, ..., a_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawShuffle")]
pub struct Shuffle {
    #[serde(rename = "type")]
    block_type: Vec<usize>,
    images: Vec<usize>,
}

#[derive(Deserialize)]
struct RawShuffle {
    #[serde(rename = "type")]
    block_type: Vec<usize>,
    images: Vec<usize>,
}

impl TryFrom<RawShuffle> for Shuffle {
    type Error = Error;
    fn try_from(raw: RawShuffle) -> Result<Self> {
        Shuffle::new(raw.block_type, raw.images)
    }
}

impl Shuffle {
    pub fn new(block_type: Vec<usize>, images: Vec<usize>) -> Result<Shuffle> {
        if block_type.iter().sum::<usize>() != images.len() {
            return Err(Error::invalid(
                "shuffle",
                "block sizes do not add up to the length",
            ));
        }
        Permutation::new(images.clone())?;
        let mut start = 0;
        for &a in &block_type {
            if images[start..start + a].windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::invalid(
                    "shuffle",
                    format!("not increasing on block starting at {}", start + 1),
                ));
            }
            start += a;
        }
        Ok(Shuffle { block_type, images })
    }

    pub fn trivial(len: usize) -> Shuffle {
        Shuffle {
            block_type: vec![len],
            images: (1..=len).collect(),
        }
    }

    pub fn block_type(&self) -> &[usize] {
        &self.block_type
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Offset of the first element of block `c` (1-based) in the source.
    fn block_start(&self, c: usize) -> usize {
        self.block_type[..c - 1].iter().sum()
    }
}

/// Block `c` lists, in increasing order, the positions where the letter
/// `x_c` occurs.
pub fn word_to_shuffle(word: &[usize], alphabet: usize) -> Result<Shuffle> {
    let mut blocks = vec![Vec::new(); alphabet];
    for (pos, &letter) in word.iter().enumerate() {
        if letter == 0 || letter > alphabet {
            return Err(Error::invalid(
                "word",
                format!("letter {letter} outside x_1..x_{alphabet}"),
            ));
        }
        blocks[letter - 1].push(pos + 1);
    }
    let block_type = blocks.iter().map(Vec::len).collect();
    Ok(Shuffle {
        block_type,
        images: blocks.concat(),
    })
}

pub fn shuffle_to_word(sh: &Shuffle) -> Vec<usize> {
    let mut word = vec![0; sh.images.len()];
    let mut start = 0;
    for (c, &a) in sh.block_type.iter().enumerate() {
        for &pos in &sh.images[start..start + a] {
            word[pos - 1] = c + 1;
        }
        start += a;
    }
    word
}

/// One block of a [`QfasEncoding`]: the number of elements over a given
/// (target, source) pair and their relative order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QfasEntry {
    pub count: usize,
    pub sigma: Permutation,
}

/// A span `n -> m` of `Q(F(as))` as an `m × n` matrix of pairs `(a_ij, sigma_ij)`,
/// a shuffle of type `(a_1c, ..., a_mc)` for each source `c`, and a shuffle of
/// type `(a_r1, ..., a_rn)` for each target `r`.
///
/// Entry `(r, c)` describes the elements `u` with `phi(u) = c` and `f(u) = r`:
/// `sigma_rc(k)` is the position, among them in horizontal order, of the
/// `k`-th one in vertical order. The source shuffle of `c` records where the
/// letters `r` sit in the vertical fiber of `c`; the target shuffle of `r`
/// records where the sources `c` sit in the horizontal fiber of `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QfasEncoding {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<QfasEntry>>,
    pub source_shuffles: Vec<Shuffle>,
    pub target_shuffles: Vec<Shuffle>,
}

impl QfasEncoding {
    /// The natural-number matrix left after forgetting orderings.
    pub fn counts(&self) -> NatMatrix {
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.count).collect())
            .collect();
        NatMatrix::new(self.rows, self.cols, entries).expect("rows have equal length")
    }
}

pub fn qfas_encode(s: &Span) -> Result<QfasEncoding> {
    expect_kind(s, DoubleKind::Fas)?;
    let (n, m) = (s.src(), s.dst());
    let phi_values = s.phi().values();
    let f_values = s.f().values();
    let phi_ranks = s.phi().ranks();
    let f_ranks = s.f().ranks();

    let source_shuffles = s
        .phi()
        .fibers()
        .iter()
        .map(|fiber| {
            let word: Vec<usize> = fiber.iter().map(|&u| f_values[u - 1]).collect();
            word_to_shuffle(&word, m)
        })
        .collect::<Result<Vec<_>>>()?;
    let target_shuffles = s
        .f()
        .fibers()
        .iter()
        .map(|fiber| {
            let word: Vec<usize> = fiber.iter().map(|&u| phi_values[u - 1]).collect();
            word_to_shuffle(&word, n)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut entries = Vec::with_capacity(m);
    for r in 1..=m {
        let mut row = Vec::with_capacity(n);
        for c in 1..=n {
            // block elements in vertical order, then their horizontal ranks
            let block: Vec<usize> = s
                .phi()
                .fiber(c)
                .iter()
                .copied()
                .filter(|&u| f_values[u - 1] == r)
                .collect();
            let mut by_horizontal = block.clone();
            by_horizontal.sort_by_key(|&u| f_ranks[u - 1]);
            let images = block
                .iter()
                .map(|u| by_horizontal.iter().position(|v| v == u).unwrap() + 1)
                .collect();
            debug_assert!(block.windows(2).all(|w| phi_ranks[w[0] - 1] < phi_ranks[w[1] - 1]));
            row.push(QfasEntry {
                count: block.len(),
                sigma: Permutation::new(images)?,
            });
        }
        entries.push(row);
    }
    Ok(QfasEncoding {
        rows: m,
        cols: n,
        entries,
        source_shuffles,
        target_shuffles,
    })
}

pub fn qfas_decode(enc: &QfasEncoding) -> Result<Span> {
    let (m, n) = (enc.rows, enc.cols);
    let bad = |reason: String| Error::invalid("Q(F(as)) encoding", reason);
    if enc.entries.len() != m
        || enc.entries.iter().any(|row| row.len() != n)
        || enc.source_shuffles.len() != n
        || enc.target_shuffles.len() != m
    {
        return Err(bad(format!("shape does not match {m}x{n}")));
    }
    for (r, row) in enc.entries.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            if e.sigma.len() != e.count {
                return Err(bad(format!("entry ({}, {}) has a permutation of the wrong size", r + 1, c + 1)));
            }
        }
    }
    for c in 1..=n {
        let expected: Vec<usize> = (1..=m).map(|r| enc.entries[r - 1][c - 1].count).collect();
        if enc.source_shuffles[c - 1].block_type() != expected.as_slice() {
            return Err(bad(format!("source shuffle {c} has the wrong type")));
        }
    }
    for r in 1..=m {
        let expected: Vec<usize> = (1..=n).map(|c| enc.entries[r - 1][c - 1].count).collect();
        if enc.target_shuffles[r - 1].block_type() != expected.as_slice() {
            return Err(bad(format!("target shuffle {r} has the wrong type")));
        }
    }

    let mut next = 0;
    let mut phi_fibers = Vec::with_capacity(n);
    let mut f_fibers: Vec<Vec<usize>> = (1..=m)
        .map(|r| vec![0; enc.target_shuffles[r - 1].images().len()])
        .collect();
    for c in 1..=n {
        let word = shuffle_to_word(&enc.source_shuffles[c - 1]);
        let mut seen = vec![0; m];
        let mut fiber = Vec::with_capacity(word.len());
        for &r in &word {
            next += 1;
            fiber.push(next);
            seen[r - 1] += 1;
            let within_block = enc.entries[r - 1][c - 1].sigma.apply(seen[r - 1]);
            let psi = &enc.target_shuffles[r - 1];
            let position = psi.images()[psi.block_start(c) + within_block - 1];
            f_fibers[r - 1][position - 1] = next;
        }
        phi_fibers.push(fiber);
    }
    let phi = NcMap::new(next, phi_fibers)?;
    let f = NcMap::new(next, f_fibers)?;
    Span::new(DoubleKind::Fas, phi, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qprop::endo::{endo_to_span, EndoPair};

    fn nc(n: usize, fibers: &[&[usize]]) -> NcMap {
        NcMap::new(n, fibers.iter().map(|f| f.to_vec()).collect()).unwrap()
    }

    #[test]
    fn paper_word_shuffle() {
        // x^2 y x y^3 x^2 with x = 1, y = 2
        let word = [1, 1, 2, 1, 2, 2, 2, 1, 1];
        let sh = word_to_shuffle(&word, 2).unwrap();
        assert_eq!(sh.block_type(), &[5, 4]);
        assert_eq!(sh.images(), &[1, 2, 4, 8, 9, 3, 5, 6, 7]);
        assert_eq!(shuffle_to_word(&sh), word);
        assert_eq!(word_to_shuffle(&[1], 1).unwrap(), Shuffle::trivial(1));
    }

    #[test]
    fn shuffle_validation() {
        assert!(Shuffle::new(vec![2, 1], vec![2, 1, 3]).is_err());
        assert!(Shuffle::new(vec![2, 1], vec![1, 3, 2]).is_ok());
        assert!(Shuffle::new(vec![2], vec![1, 2, 3]).is_err());
    }

    #[test]
    fn matrix_examples() {
        let id = Span::identity(DoubleKind::F, 3);
        assert_eq!(qf_to_matrix(&id).unwrap(), NatMatrix::identity(3));
        let three = Span::new(DoubleKind::F, nc(3, &[&[1, 2, 3]]), nc(3, &[&[1, 2, 3]])).unwrap();
        assert_eq!(qf_to_matrix(&three).unwrap().entries(), &[vec![3]]);
        assert_eq!(qf_from_matrix(&qf_to_matrix(&three).unwrap()), three);
        assert!(qf_to_matrix(&Span::identity(DoubleKind::Fas, 1)).is_err());
    }

    #[test]
    fn word_example() {
        let s = Span::new(
            DoubleKind::Fas2,
            nc(3, &[&[2, 1, 3]]),
            nc(3, &[&[1, 3], &[2]]),
        )
        .unwrap();
        let w = mon_words_of_span(&s).unwrap();
        assert_eq!(w.words(), &[vec![2, 1, 1]]);
        assert_eq!(mon_span_of_words(&w), s);
        let id = mon_words_of_span(&Span::identity(DoubleKind::Fas2, 1)).unwrap();
        assert_eq!(id.words(), &[vec![1]]);
    }

    #[test]
    fn endomorphism_encoding() {
        let sigma = Permutation::new(vec![3, 1, 2]).unwrap();
        let enc = qfas_encode(&endo_to_span(&EndoPair::new(sigma.clone()))).unwrap();
        assert_eq!(enc.entries, vec![vec![QfasEntry { count: 3, sigma }]]);
        assert_eq!(enc.source_shuffles, vec![Shuffle::trivial(3)]);
        assert_eq!(enc.target_shuffles, vec![Shuffle::trivial(3)]);
    }

    #[test]
    fn identity_encoding() {
        let enc = qfas_encode(&Span::identity(DoubleKind::Fas, 2)).unwrap();
        assert_eq!(enc.counts(), NatMatrix::identity(2));
        for (r, row) in enc.entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                assert_eq!(e.sigma, Permutation::identity(usize::from(r == c)));
            }
        }
        assert_eq!(qfas_decode(&enc).unwrap(), Span::identity(DoubleKind::Fas, 2));
    }

    #[test]
    fn target_interleaving_is_recorded() {
        // two sources feeding one ordered target fiber in both interleavings
        let a = Span::new(DoubleKind::Fas, nc(2, &[&[1], &[2]]), nc(2, &[&[1, 2]])).unwrap();
        let b = Span::new(DoubleKind::Fas, nc(2, &[&[1], &[2]]), nc(2, &[&[2, 1]])).unwrap();
        let (ea, eb) = (qfas_encode(&a).unwrap(), qfas_encode(&b).unwrap());
        assert_eq!(ea.entries, eb.entries);
        assert_eq!(ea.source_shuffles, eb.source_shuffles);
        assert_ne!(ea.target_shuffles, eb.target_shuffles);
        assert_eq!(qfas_decode(&ea).unwrap(), a);
        assert_eq!(qfas_decode(&eb).unwrap(), b);
    }
}
