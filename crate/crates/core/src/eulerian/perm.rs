use std::fmt;
use std::str::FromStr;

use super::EulerianError;

/// A permutation of `[d]` in one-line notation, letters `1..=d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self, EulerianError> {
        let d = word.len();
        let mut seen = vec![false; d + 1];
        for &x in &word {
            if x == 0 || x > d || seen[x] {
                return Err(EulerianError::NotAPermutation(word));
            }
            seen[x] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(d: usize) -> Self {
        Permutation {
            word: (1..=d).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Positions `i` in `1..d` with `σ_i > σ_{i+1}` (1-based).
    pub fn descent_set(&self) -> Vec<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn descents(&self) -> usize {
        self.word.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Descent set plus `d` when the last letter is at least `d + 1 - j`.
    pub fn j_descent_set(&self, j: usize) -> Result<Vec<usize>, EulerianError> {
        let d = self.len();
        if j > d {
            return Err(EulerianError::IndexOutOfRange { index: j, min: 0, max: d });
        }
        let mut set = self.descent_set();
        if j > 0 && self.word[d - 1] + j > d {
            set.push(d);
        }
        Ok(set)
    }

    /// Iterator over `S_d` in lexicographic order.
    pub fn all(d: usize) -> Permutations {
        Permutations {
            next: Some((1..=d).collect()),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, self.word.iter().map(|&x| (x, false)), self.len())
    }
}

fn write_word(
    f: &mut fmt::Formatter<'_>,
    letters: impl Iterator<Item = (usize, bool)>,
    d: usize,
) -> fmt::Result {
    for (i, (x, neg)) in letters.enumerate() {
        if d > 9 && i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{x}{}", if neg { "'" } else { "" })?;
    }
    Ok(())
}

/// Rearranges `word` into its lexicographic successor; false at the last one.
pub(crate) fn next_permutation(word: &mut [usize]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| word[i] < word[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| word[j] > word[i]).unwrap();
    word.swap(i, j);
    word[i + 1..].reverse();
    true
}

pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { word: current })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn apply(self, x: usize) -> i64 {
        match self {
            Sign::Plus => x as i64,
            Sign::Minus => -(x as i64),
        }
    }
}

/// A signed permutation `(σ, ε)`; letters with a minus sign print with `'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    word: Permutation,
    signs: Vec<Sign>,
}

impl SignedPermutation {
    pub fn new(word: Permutation, signs: Vec<Sign>) -> Result<Self, EulerianError> {
        if signs.len() != word.len() {
            return Err(EulerianError::SignLength {
                letters: word.len(),
                signs: signs.len(),
            });
        }
        Ok(SignedPermutation { word, signs })
    }

    /// From signed letters `ε_i σ_i`.
    pub fn from_signed(letters: &[i64]) -> Result<Self, EulerianError> {
        let word = Permutation::new(letters.iter().map(|x| x.unsigned_abs() as usize).collect())?;
        let signs = letters
            .iter()
            .map(|&x| if x < 0 { Sign::Minus } else { Sign::Plus })
            .collect();
        Ok(SignedPermutation { word, signs })
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &Permutation {
        &self.word
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// `ε_i σ_i` for `i = 1..=d`.
    pub fn signed_letters(&self) -> Vec<i64> {
        self.word
            .word()
            .iter()
            .zip(&self.signs)
            .map(|(&x, &s)| s.apply(x))
            .collect()
    }

    /// Positions `i` in `0..d` with `ε_i σ_i > ε_{i+1} σ_{i+1}`, where
    /// position 0 compares against the virtual letter `σ_0 = 0`.
    pub fn descent_set(&self) -> Vec<usize> {
        signed_descents(&self.signed_letters()).collect()
    }

    pub fn descents(&self) -> usize {
        signed_descents(&self.signed_letters()).count()
    }

    /// Descent set plus `d` when `ε_d σ_d >= d + 1 - l`.
    pub fn l_descent_set(&self, l: usize) -> Result<Vec<usize>, EulerianError> {
        let d = self.len();
        if l > d {
            return Err(EulerianError::IndexOutOfRange { index: l, min: 0, max: d });
        }
        let letters = self.signed_letters();
        let mut set: Vec<usize> = signed_descents(&letters).collect();
        if l > 0 && d > 0 && letters[d - 1] + l as i64 > d as i64 {
            set.push(d);
        }
        Ok(set)
    }

    /// Iterator over all `2^d d!` signed permutations.
    pub fn all(d: usize) -> impl Iterator<Item = SignedPermutation> {
        Permutation::all(d).flat_map(move |p| {
            (0u64..1 << d).map(move |mask| {
                let signs = (0..d)
                    .map(|i| if mask >> i & 1 == 1 { Sign::Minus } else { Sign::Plus })
                    .collect();
                SignedPermutation { word: p.clone(), signs }
            })
        })
    }
}

pub(crate) fn signed_descents(letters: &[i64]) -> impl Iterator<Item = usize> + '_ {
    (0..letters.len()).filter(move |&i| {
        let left = if i == 0 { 0 } else { letters[i - 1] };
        left > letters[i]
    })
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(
            f,
            self.word
                .word()
                .iter()
                .zip(&self.signs)
                .map(|(&x, &s)| (x, s == Sign::Minus)),
            self.len(),
        )
    }
}

/// Parses `4'2'13'5` (single-digit letters) or whitespace/comma separated
/// tokens such as `10' 2 1`.
impl FromStr for SignedPermutation {
    type Err = EulerianError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || EulerianError::Parse(s.to_string());
        let tokens: Vec<String> = if s.contains([' ', ',']) {
            s.split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(str::to_string)
                .collect()
        } else {
            let mut out: Vec<String> = Vec::new();
            for ch in s.chars() {
                if ch == '\'' {
                    out.last_mut().ok_or_else(bad)?.push(ch);
                } else {
                    out.push(ch.to_string());
                }
            }
            out
        };
        let letters = tokens
            .iter()
            .map(|t| {
                let (digits, neg) = match t.strip_suffix('\'') {
                    Some(rest) => (rest, true),
                    None => (t.as_str(), false),
                };
                let x: i64 = digits.parse().map_err(|_| bad())?;
                Ok(if neg { -x } else { x })
            })
            .collect::<Result<Vec<_>, EulerianError>>()?;
        SignedPermutation::from_signed(&letters)
    }
}

impl FromStr for Permutation {
    type Err = EulerianError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let sp: SignedPermutation = s.parse()?;
        if sp.signs.contains(&Sign::Minus) {
            return Err(EulerianError::Parse(s.to_string()));
        }
        Ok(sp.word)
    }
}
