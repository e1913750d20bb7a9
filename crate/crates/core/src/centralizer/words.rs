use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A word `g_{i1} g_{i2} ... g_{iL}` in the braid generators, stored as 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BraidWord(pub Vec<u8>);

impl BraidWord {
    pub fn empty() -> BraidWord {
        BraidWord(Vec::new())
    }

    pub fn new(indices: &[u8]) -> BraidWord {
        BraidWord(indices.to_vec())
    }

    /// Parse `"1 2 2"`, `"g1 g2^2"` or `"1"`; the empty string is the empty word.
    pub fn parse(text: &str) -> Option<BraidWord> {
        let mut out = Vec::new();
        for tok in text.split_whitespace() {
            let tok = tok.trim_start_matches('g');
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b, e.parse::<usize>().ok()?),
                None => (tok, 1),
            };
            let i: u8 = base.parse().ok()?;
            if i == 0 {
                return None;
            }
            out.extend(std::iter::repeat_n(i, exp));
        }
        Some(BraidWord(out))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn max_index(&self) -> u8 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        BraidWord(v)
    }

    pub fn contains(&self, sub: &[u8]) -> bool {
        sub.is_empty() || self.0.windows(sub.len()).any(|w| w == sub)
    }
}

/// Degree-lexicographic: shorter words first, then lexicographic with `g1 < g2 < ...`.
impl Ord for BraidWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for BraidWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        let mut k = 0;
        while k < self.0.len() {
            let i = self.0[k];
            let mut e = 1;
            while k + e < self.0.len() && self.0[k + e] == i {
                e += 1;
            }
            parts.push(if e == 1 { format!("g{i}") } else { format!("g{i}^{e}") });
            k += e;
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Subwords excluded from the enumeration once `g3` is available.
pub const EXCLUDED_SUBWORDS: [&[u8]; 3] = [&[1, 3, 2, 2, 3], &[3, 2, 2, 1, 3], &[3, 2, 2, 1, 1, 3]];

/// Extra exclusions applied for `n >= 4`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exclusion {
    /// Words where the top generator `g_{n-1}` occurs in two separated blocks, except
    /// `a g_{n-1} g_{n-2}^2 g_{n-1}` with `a` a word in `g_1, ..., g_{n-4}`.
    #[default]
    SeparatedTopGenerator,
    /// Only the three subwords in [`EXCLUDED_SUBWORDS`].
    ListedSubwords,
}

fn separated_top(s: &[u8], n: usize) -> bool {
    let t = (n - 1) as u8;
    let (Some(a), Some(b)) = (s.iter().position(|&x| x == t), s.iter().rposition(|&x| x == t)) else {
        return false;
    };
    if s[a..=b].iter().all(|&x| x == t) {
        return false;
    }
    let special = s.len() >= 4 && s[s.len() - 4..] == [t, t - 1, t - 1, t] && s[..s.len() - 4].iter().all(|&x| x + 3 <= t);
    !special
}

/// Words rewritable into smaller words by the cubic, far commutation or the braid relation,
/// plus the `n >= 4` exclusion.
pub fn is_filtered(w: &BraidWord, n: usize, rule: Exclusion) -> bool {
    let s = w.letters();
    if s.windows(3).any(|t| t[0] == t[1] && t[1] == t[2]) {
        return true;
    }
    if s.windows(2).any(|t| t[0] >= t[1] + 2) {
        return true;
    }
    if s.windows(3).any(|t| t[0] == t[2] && t[0] == t[1] + 1) {
        return true;
    }
    if n < 4 {
        return false;
    }
    match rule {
        Exclusion::SeparatedTopGenerator => separated_top(s, n),
        Exclusion::ListedSubwords => EXCLUDED_SUBWORDS.iter().any(|e| w.contains(e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex_order() {
        let mut ws: Vec<BraidWord> = ["2 1", "1", "", "1 1", "2", "1 2"].iter().map(|t| BraidWord::parse(t).unwrap()).collect();
        ws.sort();
        let shown: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["1", "g1", "g2", "g1^2", "g1 g2", "g2 g1"]);
    }

    #[test]
    fn parse_forms_agree() {
        assert_eq!(BraidWord::parse("g1^2 g2"), BraidWord::parse("1 1 2"));
        assert_eq!(BraidWord::parse(""), Some(BraidWord::empty()));
        assert_eq!(BraidWord::parse("g0"), None);
    }

    #[test]
    fn filter_patterns() {
        let f = |t: &str, n| is_filtered(&BraidWord::parse(t).unwrap(), n, Exclusion::ListedSubwords);
        assert!(f("1 1 1", 3));
        assert!(f("3 1", 4));
        assert!(!f("1 3", 4));
        assert!(f("2 1 2", 3));
        assert!(!f("1 2 1", 3));
        assert!(f("1 3 2 2 3", 4));
        assert!(!f("1 3 2 2 3", 5 - 2));
        assert!(!f("2 1 1 2", 3));
    }

    #[test]
    fn separated_top_generator_covers_listed_subwords() {
        let f = |t: &str| is_filtered(&BraidWord::parse(t).unwrap(), 4, Exclusion::SeparatedTopGenerator);
        for e in EXCLUDED_SUBWORDS {
            assert!(f(&BraidWord::new(e).letters().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")));
        }
        assert!(!f("3 2 2 3"));
        assert!(f("1 3 2 2 3"));
        assert!(f("2 3 2 2 3"));
        assert!(!f("1 2 3 3 2 1"));
        assert!(!is_filtered(&BraidWord::parse("1 1 4 3 3 4").unwrap(), 5, Exclusion::SeparatedTopGenerator));
        assert!(is_filtered(&BraidWord::parse("2 4 3 3 4").unwrap(), 5, Exclusion::SeparatedTopGenerator));
    }
}
