//! Finite presentations: validated generator/relator data, a text format,
//! and abelianization through integer Smith normal form.

mod catalog;
mod parse;
pub mod snf;

pub use catalog::{catalog_entries, catalog_lookup, CatalogEntry, CatalogError};
pub use parse::{parse_presentation, ParseError};
pub use snf::{smith_normal_form, IntegerMatrix};

use thiserror::Error;

use crate::word::Word;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("rank must be at least 1")]
    EmptyAlphabet,
    #[error("generator names must be distinct (`{0}` repeats)")]
    DuplicateName(String),
    #[error("relator {0} is empty")]
    EmptyRelator(usize),
    #[error("relator {index} uses letter {letter}, outside rank {rank}")]
    LetterOutOfRange { index: usize, letter: i32, rank: usize },
}

/// A finite presentation: named generators plus freely reduced, nonempty
/// relator words over them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    name: String,
    gen_names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(
        name: String,
        gen_names: Vec<String>,
        relators: Vec<Word>,
    ) -> Result<Self, PresentationError> {
        if gen_names.is_empty() {
            return Err(PresentationError::EmptyAlphabet);
        }
        for (i, n) in gen_names.iter().enumerate() {
            if gen_names[..i].contains(n) {
                return Err(PresentationError::DuplicateName(n.clone()));
            }
        }
        let rank = gen_names.len();
        for (index, r) in relators.iter().enumerate() {
            if r.is_empty() {
                return Err(PresentationError::EmptyRelator(index));
            }
            if r.max_letter() > rank {
                let letter = *r
                    .letters()
                    .iter()
                    .find(|l| l.unsigned_abs() as usize > rank)
                    .unwrap();
                return Err(PresentationError::LetterOutOfRange { index, letter, rank });
            }
        }
        Ok(Presentation { name, gen_names, relators })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn rank(&self) -> usize {
        self.gen_names.len()
    }

    pub fn gen_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Renders in the parseable text format, one relator per `rels:` line.
    pub fn render(&self) -> String {
        let mut out = String::from("gens:");
        for n in &self.gen_names {
            out.push(' ');
            out.push_str(n);
        }
        out.push('\n');
        for r in &self.relators {
            out.push_str("rels: ");
            out.push_str(&self.render_word(r));
            out.push('\n');
        }
        out
    }

    /// One term in the relator grammar: a bare power for single-run words,
    /// otherwise a parenthesized product of powers.
    pub fn render_word(&self, word: &Word) -> String {
        let mut runs: Vec<(i32, i32)> = Vec::new();
        for &letter in word.letters() {
            match runs.last_mut() {
                Some((l, count)) if *l == letter => *count += 1,
                _ => runs.push((letter, 1)),
            }
        }
        let piece = |&(letter, count): &(i32, i32)| -> String {
            let name = &self.gen_names[(letter.unsigned_abs() as usize) - 1];
            let exponent = if letter > 0 { count } else { -count };
            if exponent == 1 {
                name.clone()
            } else {
                format!("{name}^{exponent}")
            }
        };
        match runs.len() {
            0 => "()".to_owned(),
            1 => piece(&runs[0]),
            _ => {
                let inner: Vec<String> = runs.iter().map(piece).collect();
                format!("({})", inner.join(" "))
            }
        }
    }

    /// Relator-by-generator exponent-sum matrix.
    pub fn relation_matrix(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::new(self.relators.len(), self.rank());
        for (i, r) in self.relators.iter().enumerate() {
            for &letter in r.letters() {
                let c = letter.unsigned_abs() as usize - 1;
                let delta = if letter > 0 { 1 } else { -1 };
                m.set(i, c, m.at(i, c) + delta);
            }
        }
        m
    }

    /// Abelianization from the Smith normal form of the relation matrix.
    pub fn abelianization(&self) -> Abelianization {
        let diag = smith_normal_form(&self.relation_matrix());
        let nonzero = diag.iter().filter(|d| **d != 0).count();
        let free_rank = self.rank() - nonzero;
        let mut torsion: Vec<u64> = Vec::new();
        for &d in &diag {
            if d > 1 {
                torsion.extend(prime_power_parts(d as u64));
            }
        }
        torsion.sort_unstable();
        if free_rank == 0 {
            Abelianization::Finite(torsion)
        } else {
            Abelianization::Infinite { free_rank, torsion }
        }
    }

    /// The same group with all generator-pair commutators added as relators.
    pub fn abelianized_presentation(&self) -> Presentation {
        let mut relators = self.relators.clone();
        for i in 1..=self.rank() {
            for j in i + 1..=self.rank() {
                relators.push(Word::commutator(&Word::generator(i), &Word::generator(j)));
            }
        }
        Presentation::new(format!("{}_ab", self.name), self.gen_names.clone(), relators)
            .expect("abelianized relators stay valid")
    }
}

/// Outcome of abelianization. A positive free rank (infinite abelianization)
/// is a reportable result, not a failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Abelianization {
    Finite(Vec<u64>),
    Infinite { free_rank: usize, torsion: Vec<u64> },
}

impl Abelianization {
    /// Torsion invariants when the abelianization is finite.
    pub fn finite_invariants(&self) -> Option<&[u64]> {
        match self {
            Abelianization::Finite(t) => Some(t),
            Abelianization::Infinite { .. } => None,
        }
    }
}

/// Splits `n > 1` into its prime-power components, ascending.
pub fn prime_power_parts(mut n: u64) -> Vec<u64> {
    let mut parts = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut q = 1;
            while n % p == 0 {
                q *= p;
                n /= p;
            }
            parts.push(q);
        }
        p += 1;
    }
    if n > 1 {
        parts.push(n);
    }
    parts.sort_unstable();
    parts
}
