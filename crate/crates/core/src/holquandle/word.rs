use std::fmt;

use crate::error::{Error, Result};

const INV: &str = "^-1";

/// One letter of a group word: a generator name and an exponent of ±1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: String,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: impl Into<String>, inverse: bool) -> Self {
        Letter {
            generator: generator.into(),
            inverse,
        }
    }

    pub fn inverted(&self) -> Letter {
        Letter::new(self.generator.clone(), !self.inverse)
    }

    pub fn exponent(&self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.inverse, self.generator.strip_suffix(INV)) {
            (false, _) => f.write_str(&self.generator),
            // the inverse of a generator named `x^-1` prints as `x`
            (true, Some(base)) => f.write_str(base),
            (true, None) => write!(f, "{}{INV}", self.generator),
        }
    }
}

/// A freely reduced word in the generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord::default()
    }

    pub fn generator(name: impl Into<String>) -> Self {
        GroupWord {
            letters: vec![Letter::new(name, false)],
        }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = GroupWord::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Parses space-separated tokens against a generator list.
    ///
    /// A token naming a generator is that generator. Otherwise a trailing
    /// `^-1` marks an inverse, and a bare token `t` whose `t^-1` is a
    /// generator stands for that generator's inverse. `""` and `"1"` are the
    /// identity.
    pub fn parse(text: &str, generators: &[String]) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "1" {
            return Ok(GroupWord::identity());
        }
        let known = |name: &str| generators.iter().any(|g| g == name);
        let mut w = GroupWord::identity();
        for token in text.split_whitespace() {
            let letter = if known(token) {
                Letter::new(token, false)
            } else if let Some(base) = token.strip_suffix(INV).filter(|b| known(b)) {
                Letter::new(base, true)
            } else if known(&format!("{token}{INV}")) {
                Letter::new(format!("{token}{INV}"), true)
            } else if token.is_empty() || token.contains(['(', ')', '*']) {
                return Err(Error::MalformedWord(text.to_string()));
            } else {
                return Err(Error::UnknownGenerator(token.to_string()));
            };
            w.push(letter);
        }
        Ok(w)
    }

    /// Appends a letter, cancelling against the last one if possible.
    pub fn push(&mut self, letter: Letter) {
        if self.letters.last() == Some(&letter.inverted()) {
            self.letters.pop();
        } else {
            self.letters.push(letter);
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

    pub fn inverse(&self) -> GroupWord {
        GroupWord {
            letters: self.letters.iter().rev().map(Letter::inverted).collect(),
        }
    }

    /// The reduced product `self · other`.
    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut w = self.clone();
        for l in &other.letters {
            w.push(l.clone());
        }
        w
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &GroupWord) -> GroupWord {
        g.inverse().concat(self).concat(g)
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_and_print() {
        let g = gens(&["x", "y", "z", "w"]);
        let w = GroupWord::parse("z^-1 y z", &g).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.to_string(), "z^-1 y z");
        assert_eq!(GroupWord::parse("x x^-1 y", &g).unwrap().to_string(), "y");
        assert!(GroupWord::parse("", &g).unwrap().is_empty());
        assert!(GroupWord::parse("1", &g).unwrap().is_empty());
        assert!(matches!(
            GroupWord::parse("q", &g),
            Err(Error::UnknownGenerator(_))
        ));
    }

    #[test]
    fn reversed_generator_names() {
        let g = gens(&["x^-1", "y^-1", "z^-1", "w^-1"]);
        let w = GroupWord::parse("x^-1", &g).unwrap();
        assert_eq!(w.letters(), &[Letter::new("x^-1", false)]);
        let w = GroupWord::parse("z x^-1 z^-1", &g).unwrap();
        assert_eq!(
            w.letters(),
            &[
                Letter::new("z^-1", true),
                Letter::new("x^-1", false),
                Letter::new("z^-1", false)
            ]
        );
        assert_eq!(w.to_string(), "z x^-1 z^-1");
        assert_eq!(GroupWord::parse(&w.to_string(), &g).unwrap(), w);
    }

    #[test]
    fn inverse_and_conjugation_reduce() {
        let g = gens(&["x", "y"]);
        let x = GroupWord::parse("x", &g).unwrap();
        let y = GroupWord::parse("y", &g).unwrap();
        let xy = x.concat(&y);
        assert!(xy.concat(&xy.inverse()).is_empty());
        assert_eq!(x.conjugate_by(&x), x);
        assert_eq!(x.conjugate_by(&y).to_string(), "y^-1 x y");
    }
}
