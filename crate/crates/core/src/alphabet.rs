use std::fmt;

use crate::error::{Error, Result};

/// Index of a letter in its [`Alphabet`], `0..m`.
pub type Letter = usize;

/// A word as a sequence of letter indices.
pub type Word = Vec<Letter>;

/// Ordered finite alphabet `a_1 < a_2 < ... < a_m`.
///
/// The order is significant: Parikh vectors, the sorted word `g(v)` and the
/// letter-index selection all refer to positions in this list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    letters: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        if letters.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        for (i, l) in letters.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::InvalidAlphabet("empty symbol name".into()));
            }
            if letters[..i].contains(l) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol `{l}`")));
            }
        }
        Ok(Alphabet { letters })
    }

    /// Alphabet `{a, b, c, ...}` of the given size (single-character names).
    pub fn standard(m: usize) -> Self {
        assert!((1..=26).contains(&m), "standard alphabets have 1..=26 letters");
        Alphabet {
            letters: (0..m).map(|i| ((b'a' + i as u8) as char).to_string()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.letters[letter]
    }

    pub fn index_of(&self, name: &str) -> Option<Letter> {
        self.letters.iter().position(|l| l == name)
    }

    /// The one-letter alphabet containing only `letter`.
    pub fn restrict(&self, letter: Letter) -> Alphabet {
        Alphabet {
            letters: vec![self.letters[letter].clone()],
        }
    }

    pub fn check_letter(&self, letter: Letter) -> Result<()> {
        if letter < self.len() {
            Ok(())
        } else {
            Err(Error::LetterOutOfRange(letter, self.len()))
        }
    }

    pub fn check_word(&self, word: &[Letter]) -> Result<()> {
        word.iter().try_for_each(|&l| self.check_letter(l))
    }

    fn single_chars(&self) -> bool {
        self.letters.iter().all(|l| l.chars().count() == 1)
    }

    /// Parses a word. With single-character symbols the word is read
    /// character by character; otherwise symbols are separated by whitespace.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        if self.single_chars() {
            text.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| {
                    let s = c.to_string();
                    self.index_of(&s).ok_or(Error::UnknownLetter(s))
                })
                .collect()
        } else {
            text.split_whitespace()
                .map(|s| self.index_of(s).ok_or_else(|| Error::UnknownLetter(s.to_string())))
                .collect()
        }
    }

    pub fn format_word(&self, word: &[Letter]) -> String {
        let sep = if self.single_chars() { "" } else { " " };
        word.iter()
            .map(|&l| self.letters[l].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.letters.join(", "))
    }
}

/// All words over `m` letters of length exactly `len`, in lexicographic order.
pub fn words_of_length(m: usize, len: usize) -> impl Iterator<Item = Word> {
    let total = if len == 0 { 1 } else { m.checked_pow(len as u32).unwrap_or(usize::MAX) };
    (0..total).map(move |mut code| {
        let mut w = vec![0; len];
        for slot in w.iter_mut().rev() {
            *slot = code % m;
            code /= m;
        }
        w
    })
}

/// All words over `m` letters of length at most `bound`, shortest first.
pub fn words_up_to(m: usize, bound: usize) -> impl Iterator<Item = Word> {
    (0..=bound).flat_map(move |len| words_of_length(m, len))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty() {
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(["a", "b"]).is_ok());
    }

    #[test]
    fn parse_and_format() {
        let ab = Alphabet::standard(2);
        assert_eq!(ab.parse_word("abba").unwrap(), vec![0, 1, 1, 0]);
        assert!(ab.parse_word("abc").is_err());
        let long = Alphabet::new(["x1", "x2"]).unwrap();
        let w = long.parse_word("x2 x1 x2").unwrap();
        assert_eq!(w, vec![1, 0, 1]);
        assert_eq!(long.format_word(&w), "x2 x1 x2");
    }

    #[test]
    fn word_enumeration_counts() {
        assert_eq!(words_up_to(2, 3).count(), 1 + 2 + 4 + 8);
        assert_eq!(words_of_length(3, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
    }
}
