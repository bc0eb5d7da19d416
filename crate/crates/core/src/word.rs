//! The generating set {x0, x1, c, pi} and words over it.

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use crate::element::Element;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    X0,
    X1,
    C,
    Pi,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::X0, Generator::X1, Generator::C, Generator::Pi];

    pub fn name(self) -> &'static str {
        match self {
            Generator::X0 => "x0",
            Generator::X1 => "x1",
            Generator::C => "c",
            Generator::Pi => "pi",
        }
    }

    /// Diagram of the generator in element text format.
    pub fn diagram_text(self) -> &'static str {
        match self {
            Generator::X0 => "(.,(.,.))|((.,.),.)|[1,2,3]",
            Generator::X1 => "(.,(.,(.,.)))|(.,((.,.),.))|[1,2,3,4]",
            Generator::C => "(.,(.,.))|(.,(.,.))|[2,3,1]",
            Generator::Pi => "(.,(.,.))|(.,(.,.))|[2,1,3]",
        }
    }

    pub fn element(self) -> &'static Element {
        &GENERATOR_ELEMENTS[self as usize]
    }
}

static GENERATOR_ELEMENTS: LazyLock<[Element; 4]> = LazyLock::new(|| {
    Generator::ALL.map(|g| {
        g.diagram_text()
            .parse()
            .expect("generator diagrams are well formed")
    })
});

static INVERSE_ELEMENTS: LazyLock<[Element; 4]> =
    LazyLock::new(|| Generator::ALL.map(|g| g.element().inverse()));

/// x0, x1, c, pi as elements.
pub fn standard_generators() -> Vec<Element> {
    Generator::ALL.iter().map(|g| g.element().clone()).collect()
}

/// One line per generator, `name=diagram`, for report metadata.
pub fn generator_metadata() -> String {
    Generator::ALL
        .iter()
        .map(|g| format!("{}={}", g.name(), g.diagram_text()))
        .collect::<Vec<_>>()
        .join(" ")
}

/// A generator raised to `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    /// The eight letters in a fixed order: each generator, then its inverse.
    pub const ALL: [Letter; 8] = [
        Letter::pos(Generator::X0),
        Letter::neg(Generator::X0),
        Letter::pos(Generator::X1),
        Letter::neg(Generator::X1),
        Letter::pos(Generator::C),
        Letter::neg(Generator::C),
        Letter::pos(Generator::Pi),
        Letter::neg(Generator::Pi),
    ];

    pub const fn pos(generator: Generator) -> Self {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub const fn neg(generator: Generator) -> Self {
        Letter {
            generator,
            inverse: true,
        }
    }

    pub fn exponent(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inverted(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    pub fn element(self) -> &'static Element {
        if self.inverse {
            &INVERSE_ELEMENTS[self.generator as usize]
        } else {
            self.generator.element()
        }
    }

    pub(crate) fn index(self) -> u8 {
        (self.generator as u8) * 2 + self.inverse as u8
    }

    pub(crate) fn from_index(i: u8) -> Self {
        Letter::ALL[i as usize]
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.generator.name())?;
        if self.inverse {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new() -> Self {
        Word::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    /// `generator^exponent` as a word of `|exponent|` letters.
    pub fn power(generator: Generator, exponent: i64) -> Self {
        let letter = if exponent < 0 {
            Letter::neg(generator)
        } else {
            Letter::pos(generator)
        };
        Word {
            letters: vec![letter; exponent.unsigned_abs() as usize],
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

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    pub fn extend(&mut self, other: &Word) {
        self.letters.extend_from_slice(&other.letters);
    }

    pub fn concat<'a, I: IntoIterator<Item = &'a Word>>(parts: I) -> Word {
        let mut out = Word::new();
        for p in parts {
            out.extend(p);
        }
        out
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    /// Cancels adjacent `a a^-1` pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverted()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    pub fn uses_only(&self, allowed: &[Generator]) -> bool {
        self.letters.iter().all(|l| allowed.contains(&l.generator))
    }

    /// Left-to-right product of the letters, reduced. The empty word is the
    /// identity.
    pub fn evaluate(&self) -> Element {
        self.letters
            .iter()
            .fold(Element::identity(), |acc, l| acc.multiply(l.element()))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Whitespace-separated symbols, each `x0`, `x1`, `c` or `pi` with an
    /// optional integer exponent such as `^-1` or `^3`.
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let base = s.as_ptr() as usize;
        for token in s.split_whitespace() {
            let offset = token.as_ptr() as usize - base;
            let (name, exponent) = match token.split_once('^') {
                Some((n, e)) => {
                    let e = e.parse::<i64>().map_err(|_| {
                        Error::parse(offset + n.len() + 1, format!("bad exponent in '{token}'"))
                    })?;
                    (n, e)
                }
                None => (token, 1),
            };
            let generator = match name {
                "x0" => Generator::X0,
                "x1" => Generator::X1,
                "c" => Generator::C,
                "pi" => Generator::Pi,
                _ => {
                    return Err(Error::parse(
                        offset,
                        format!("unknown generator symbol '{token}'"),
                    ))
                }
            };
            letters.extend_from_slice(Word::power(generator, exponent).letters());
        }
        Ok(Word { letters })
    }
}
