use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A generator `x_gen` (1-based) raised to `exp = ±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(usize, i64)", into = "(usize, i64)")]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl TryFrom<(usize, i64)> for Letter {
    type Error = Error;
    fn try_from((gen, exp): (usize, i64)) -> Result<Self> {
        if gen == 0 {
            return Err(Error::invalid("letter", "generators are numbered from 1"));
        }
        match exp {
            1 => Ok(Letter::new(gen)),
            -1 => Ok(Letter::new(gen).inv()),
            _ => Err(Error::invalid("letter", format!("exponent {exp} is not ±1"))),
        }
    }
}

impl From<Letter> for (usize, i64) {
    fn from(l: Letter) -> Self {
        (l.gen, if l.inverse { -1 } else { 1 })
    }
}

impl Letter {
    pub fn new(gen: usize) -> Letter {
        Letter { gen, inverse: false }
    }

    pub fn inv(self) -> Letter {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

/// A freely reduced word in the free group on `x_1, x_2, ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<Letter>", into = "Vec<Letter>")]
pub struct GroupWord(Vec<Letter>);

impl From<Vec<Letter>> for GroupWord {
    fn from(letters: Vec<Letter>) -> Self {
        GroupWord::reduce(letters)
    }
}

impl From<GroupWord> for Vec<Letter> {
    fn from(w: GroupWord) -> Self {
        w.0
    }
}

impl GroupWord {
    /// Free reduction: cancel adjacent `x x^{-1}` and `x^{-1} x` until none remain.
    pub fn reduce(letters: impl IntoIterator<Item = Letter>) -> GroupWord {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GroupWord(out)
    }

    pub fn identity() -> GroupWord {
        GroupWord(Vec::new())
    }

    pub fn generator(gen: usize) -> GroupWord {
        GroupWord(vec![Letter::new(gen)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest generator index that occurs, 0 for the empty word.
    pub fn max_gen(&self) -> usize {
        self.0.iter().map(|l| l.gen).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &GroupWord) -> GroupWord {
        GroupWord::reduce(self.0.iter().chain(&other.0).copied())
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// Replace every generator by a word and reduce.
    pub fn substitute(&self, image: impl Fn(usize) -> GroupWord) -> GroupWord {
        let mut letters = Vec::new();
        for l in &self.0 {
            let w = image(l.gen);
            if l.inverse {
                letters.extend(w.inverse().0);
            } else {
                letters.extend(w.0);
            }
        }
        GroupWord::reduce(letters)
    }
}

/// `x1^-1 x2 x1`; the empty word prints as `1`.
impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| {
                if l.inverse {
                    format!("x{}^-1", l.gen)
                } else {
                    format!("x{}", l.gen)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Whitespace-separated tokens `x<i>` or `x<i>^<k>` with `k` a nonzero
/// integer; `1` denotes the empty word.
impl FromStr for GroupWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupWord> {
        let mut letters = Vec::new();
        for token in s.split_whitespace() {
            if token == "1" {
                continue;
            }
            let bad = || Error::Parse(format!("bad letter {token:?} in word {s:?}"));
            let rest = token.strip_prefix('x').ok_or_else(bad)?;
            let (gen, exp) = match rest.split_once('^') {
                Some((g, e)) => (g, e.parse::<i64>().map_err(|_| bad())?),
                None => (rest, 1),
            };
            let gen: usize = gen.parse().map_err(|_| bad())?;
            if gen == 0 || exp == 0 {
                return Err(bad());
            }
            let letter = if exp > 0 { Letter::new(gen) } else { Letter::new(gen).inv() };
            letters.extend(std::iter::repeat(letter).take(exp.unsigned_abs() as usize));
        }
        Ok(GroupWord::reduce(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GroupWord {
        s.parse().unwrap()
    }

    #[test]
    fn reduction() {
        assert_eq!(w("x1 x1^-1"), GroupWord::identity());
        assert_eq!(w("x2 x1 x1^-1 x2^-1 x3"), w("x3"));
        assert_eq!(w("x1^2 x3").to_string(), "x1 x1 x3");
        assert_eq!(w("x1^-2").len(), 2);
        assert_eq!(GroupWord::identity().to_string(), "1");
    }

    #[test]
    fn parse_errors() {
        assert!("y1".parse::<GroupWord>().is_err());
        assert!("x0".parse::<GroupWord>().is_err());
        assert!("x1^0".parse::<GroupWord>().is_err());
        assert!("x1^a".parse::<GroupWord>().is_err());
    }

    #[test]
    fn inverse_and_substitution() {
        let a = w("x1^-1 x2 x1");
        assert_eq!(a.mul(&a.inverse()), GroupWord::identity());
        let swapped = a.substitute(|g| GroupWord::generator(3 - g));
        assert_eq!(swapped, w("x2^-1 x1 x2"));
    }

    #[test]
    fn json_letters() {
        let a = w("x1^-1 x2");
        assert_eq!(serde_json::to_string(&a).unwrap(), "[[1,-1],[2,1]]");
        let back: GroupWord = serde_json::from_str("[[1,1],[1,-1],[2,1]]").unwrap();
        assert_eq!(back, w("x2"));
        assert!(serde_json::from_str::<GroupWord>("[[1,2]]").is_err());
    }
}
