//! Words in the affine Weyl group and its extension by the diagram
//! automorphism.
//!
//! A [`WeylWord`] stores its letters leftmost first; the associated operator
//! word acts right-to-left, so the rightmost letter is applied first. The
//! two constructors build the standard alternating family (length `N`,
//! rightmost letter `s_j`) and its sigma-extended variant `(sigma s_j)^N` in
//! the normalized form `sigma^(N mod 2) * standard`.

use std::fmt;
use std::str::FromStr;

/// One letter of an extended Weyl-group word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Generator {
    S0,
    S1,
    Sigma,
}

impl Generator {
    pub fn token(self) -> &'static str {
        match self {
            Generator::S0 => "s0",
            Generator::S1 => "s1",
            Generator::Sigma => "sigma",
        }
    }
}

/// Index of a simple reflection, `s0` or `s1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Simple {
    S0,
    S1,
}

impl Simple {
    pub fn other(self) -> Self {
        match self {
            Simple::S0 => Simple::S1,
            Simple::S1 => Simple::S0,
        }
    }

    pub fn generator(self) -> Generator {
        match self {
            Simple::S0 => Generator::S0,
            Simple::S1 => Generator::S1,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Simple::S0 => 0,
            Simple::S1 => 1,
        }
    }

    pub fn from_index(j: u8) -> Option<Self> {
        match j {
            0 => Some(Simple::S0),
            1 => Some(Simple::S1),
            _ => None,
        }
    }
}

/// Ordered sequence of generators, leftmost letter applied last.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WeylWord {
    letters: Vec<Generator>,
}

impl WeylWord {
    pub fn new(letters: Vec<Generator>) -> Self {
        Self { letters }
    }

    /// Letters leftmost first.
    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    /// Number of simple reflections in the word, ignoring sigma letters.
    /// This is the length `N` indexing the standard families.
    pub fn reflection_length(&self) -> usize {
        self.letters
            .iter()
            .filter(|g| !matches!(g, Generator::Sigma))
            .count()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// The alternating word of length `len` whose rightmost letter is `s_j`;
/// `len = 0` gives the empty word.
pub fn standard_word(len: u32, j: Simple) -> WeylWord {
    let letters = (0..len)
        .map(|idx| {
            let from_right = len - 1 - idx;
            if from_right.is_multiple_of(2) {
                j
            } else {
                j.other()
            }
            .generator()
        })
        .collect();
    WeylWord::new(letters)
}

/// `(sigma s_j)^len` in normalized form: `sigma^(len mod 2)` followed by the
/// standard word of the same length.
pub fn extended_word(len: u32, j: Simple) -> WeylWord {
    let mut letters = Vec::with_capacity(len as usize + 1);
    if len % 2 == 1 {
        letters.push(Generator::Sigma);
    }
    letters.extend_from_slice(standard_word(len, j).letters());
    WeylWord::new(letters)
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", g.token())?;
            first = false;
        }
        Ok(())
    }
}

/// Error parsing a word from its token form.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
#[error("unknown generator token `{0}` (expected s0, s1 or sigma)")]
pub struct ParseWordError(String);

impl FromStr for WeylWord {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::new();
        for token in s.split_whitespace() {
            let g = match token {
                "s0" => Generator::S0,
                "s1" => Generator::S1,
                "sigma" => Generator::Sigma,
                other => return Err(ParseWordError(other.to_owned())),
            };
            letters.push(g);
        }
        Ok(WeylWord::new(letters))
    }
}
