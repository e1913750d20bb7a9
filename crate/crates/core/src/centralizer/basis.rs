use serde::{Deserialize, Serialize};

use super::words::{is_filtered, BraidWord, Exclusion};
use super::Centralizer;
use crate::error::Result;
use crate::linalg::{rank, Echelon, Fp, SparseVec};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    /// The accepted words reached the modular nullity of the commutator system.
    ModularBound,
    /// Every word of some length was filtered or dependent.
    Exhausted,
}

/// Accepted words with their coordinates on the determining set.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    pub n: usize,
    pub d: i64,
    pub mu: i64,
    pub words: Vec<BraidWord>,
    pub vectors: Vec<SparseVec<Scalar>>,
    /// Number of words tested for independence.
    pub tested: usize,
    pub stop: StopReason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub n: usize,
    pub d: i64,
    pub mu: i64,
    pub words: Vec<Vec<u8>>,
    pub dim: usize,
}

impl SpanBasis {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Recompute the rank of the stored vectors from scratch.
    pub fn verify_witness(&self) -> bool {
        rank(&self.vectors) == self.words.len()
    }

    pub fn to_json(&self) -> BasisJson {
        BasisJson {
            n: self.n,
            d: self.d,
            mu: self.mu,
            words: self.words.iter().map(|w| w.letters().to_vec()).collect(),
            dim: self.words.len(),
        }
    }
}

/// Greedy deglex scan: words are generated length by length, filtered words are skipped,
/// and a word is accepted iff it is independent of the words accepted before it.
pub fn enumerate_basis(cz: &Centralizer) -> Result<SpanBasis> {
    enumerate_basis_with(cz, Exclusion::default())
}

/// [`enumerate_basis`] under a chosen `n >= 4` exclusion rule.
pub fn enumerate_basis_with(cz: &Centralizer, rule: Exclusion) -> Result<SpanBasis> {
    let det = cz.determining_set()?;
    let bound = det.entries.len();
    let mut echelon: Echelon<Scalar> = Echelon::new();
    let mut words = Vec::new();
    let mut vectors = Vec::new();
    let mut tested = 1;

    let start = cz.unit_columns(&det);
    let v = Centralizer::restrict(&det, &start);
    echelon.insert(&v);
    words.push(BraidWord::empty());
    vectors.push(v);

    let mut layer = vec![(BraidWord::empty(), start)];
    let stop = loop {
        if words.len() >= bound {
            break StopReason::ModularBound;
        }
        let mut next = Vec::new();
        for (w, cols) in &layer {
            for i in 1..cz.n() as u8 {
                let mut letters = vec![i];
                letters.extend_from_slice(w.letters());
                let word = BraidWord(letters);
                if is_filtered(&word, cz.n(), rule) {
                    continue;
                }
                let cols = cols.iter().map(|v| cz.apply_letter(i, v)).collect::<Vec<_>>();
                next.push((word, cols));
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        let mut accepted = false;
        for (word, cols) in &next {
            if words.len() >= bound {
                break;
            }
            tested += 1;
            let v = Centralizer::restrict(&det, cols);
            if echelon.insert(&v) {
                accepted = true;
                words.push(word.clone());
                vectors.push(v);
            }
        }
        if words.len() >= bound {
            break StopReason::ModularBound;
        }
        if !accepted {
            break StopReason::Exhausted;
        }
        layer = next;
    };
    Ok(SpanBasis { n: cz.n(), d: cz.d(), mu: cz.mu(), words, vectors, tested, stop })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanRank {
    pub rank: usize,
    /// `modular_rank_attains_commutant_dimension` or `exact_elimination`.
    pub method: String,
}

/// Exact rank of the span of a family of words.
///
/// The rank modulo a prime is a lower bound and the commutant dimension an upper bound;
/// when they meet no exact elimination is needed.
pub fn span_rank(cz: &Centralizer, words: &[BraidWord]) -> Result<SpanRank> {
    let mut ech: Echelon<Fp> = Echelon::new();
    let dim = cz.commutant_dimension()?.dim;
    for w in words {
        ech.insert(&cz.word_vector_mod(w)?);
        if ech.rank() == dim {
            return Ok(SpanRank { rank: dim, method: "modular_rank_attains_commutant_dimension".into() });
        }
    }
    let mut exact: Echelon<Scalar> = Echelon::new();
    for w in words {
        exact.insert(&cz.word_vector(w)?);
    }
    Ok(SpanRank { rank: exact.rank(), method: "exact_elimination".into() })
}
