//! Free-group words, integral group-ring elements, Fox derivatives, and
//! verification of identities among relations.

use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// A freely reduced word, run-length encoded as (generator index, exponent).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Default)]
pub struct Word {
    letters: Vec<(u32, i32)>,
}

impl Word {
    pub fn one() -> Word {
        Word::default()
    }

    pub fn generator(i: u32) -> Word {
        Word {
            letters: vec![(i, 1)],
        }
    }

    pub fn generator_power(i: u32, e: i32) -> Word {
        if e == 0 {
            Word::one()
        } else {
            Word {
                letters: vec![(i, e)],
            }
        }
    }

    pub fn from_letters(letters: &[(u32, i32)]) -> Word {
        let mut w = Word::one();
        for &(g, e) in letters {
            w.push(g, e);
        }
        w
    }

    fn push(&mut self, g: u32, e: i32) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.0 == g {
                last.1 += e;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((g, e));
    }

    pub fn is_one(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[(u32, i32)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.iter().map(|(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_one()
    }

    pub fn mul(&self, o: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &o.letters {
            w.push(g, e);
        }
        w
    }

    pub fn inv(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn pow(&self, n: i32) -> Word {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut out = Word::one();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn max_generator(&self) -> Option<u32> {
        self.letters.iter().map(|&(g, _)| g).max()
    }

    /// Image under the homomorphism sending generator i to images[i].
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Word::one();
        for &(g, e) in &self.letters {
            out = out.mul(&images[g as usize].pow(e));
        }
        out
    }
}

/// A finite integral linear combination of words.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        GroupRingElement::default()
    }

    pub fn one() -> Self {
        GroupRingElement::from_word(Word::one())
    }

    pub fn from_word(w: Word) -> Self {
        let mut t = BTreeMap::new();
        t.insert(w, 1);
        GroupRingElement { terms: t }
    }

    pub fn from_terms(terms: &[(Word, i64)]) -> Self {
        let mut out = GroupRingElement::zero();
        for (w, c) in terms {
            out.insert(w.clone(), *c);
        }
        out
    }

    pub fn insert(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(w).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in o.terms() {
            out.insert(w.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupRingElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = GroupRingElement::zero();
        for (w1, c1) in self.terms() {
            for (w2, c2) in o.terms() {
                out.insert(w1.mul(w2), c1 * c2);
            }
        }
        out
    }

    pub fn left_mul_word(&self, w: &Word) -> Self {
        GroupRingElement {
            terms: self.terms.iter().map(|(v, &c)| (w.mul(v), c)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return GroupRingElement::zero();
        }
        GroupRingElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// Augmentation: total coefficient sum (every group element to 1).
    pub fn augmentation(&self) -> i64 {
        self.terms.values().sum()
    }
}

/// The Fox derivative d(w)/d(x_i), characterized by d(x_j)/d(x_i) = delta_ij
/// and the product rule d(uv) = d(u) + u d(v).
pub fn fox_derivative(w: &Word, i: u32) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::one();
    for &(g, e) in w.letters() {
        if g == i {
            if e > 0 {
                // d(x^e) = 1 + x + ... + x^{e-1}
                for k in 0..e {
                    out.insert(prefix.mul(&Word::generator_power(g, k)), 1);
                }
            } else {
                // d(x^{-m}) = -(x^{-1} + ... + x^{-m})
                for k in 1..=(-e) {
                    out.insert(prefix.mul(&Word::generator_power(g, -k)), -1);
                }
            }
        }
        prefix = prefix.mul(&Word::generator_power(g, e));
    }
    out
}

/// A group presentation <x_1..x_g | r_1..r_k>. Complex builders require the
/// balanced (genus-g Heegaard) form k = g; the Alexander pathway accepts any
/// relator count.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generators: usize,
    pub names: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let g = names.len();
        for r in &relators {
            if let Some(m) = r.max_generator() {
                if m as usize >= g {
                    return Err(Error::validation(format!(
                        "relator mentions generator index {m}, but only {g} generators declared"
                    )));
                }
            }
        }
        Ok(Presentation {
            generators: g,
            names,
            relators,
        })
    }

    pub fn is_balanced(&self) -> bool {
        self.generators == self.relators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| i as u32)
    }
}

/// An identity among relations: a product of conjugated relator symbols
/// (w_k, j_k, eps_k) standing for prod w_k r_{j_k}^{eps_k} w_k^{-1}.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityWord {
    pub factors: Vec<(Word, usize, i8)>,
}

impl IdentityWord {
    pub fn new(factors: Vec<(Word, usize, i8)>) -> Self {
        IdentityWord { factors }
    }
}

/// True iff substituting the relators for the relator symbols yields the
/// freely trivial word.
pub fn verify_identity(p: &Presentation, w: &IdentityWord) -> bool {
    let mut acc = Word::one();
    for (conj, j, eps) in &w.factors {
        let r = match p.relators.get(*j) {
            Some(r) => r,
            None => return false,
        };
        let body = if *eps >= 0 { r.clone() } else { r.inv() };
        acc = acc.mul(conj).mul(&body).mul(&conj.inv());
    }
    acc.is_one()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    format!("g{g}")
                } else {
                    format!("g{g}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Parse a word over declared generator names: whitespace-separated tokens
/// `g`, `g^-1`, `g^3`; `1` denotes the empty word.
pub fn parse_word(input: &str, names: &[String]) -> Result<Word> {
    let mut w = Word::one();
    let mut offset = 0usize;
    for tok in input.split_whitespace() {
        let pos = input[offset..].find(tok).map(|p| p + offset).unwrap_or(offset);
        offset = pos + tok.len();
        if tok == "1" {
            continue;
        }
        let (name, exp) = match tok.split_once('^') {
            Some((n, e)) => {
                let exp: i32 = e
                    .parse()
                    .map_err(|_| Error::parse(pos, format!("bad exponent in '{tok}'")))?;
                (n, exp)
            }
            None => (tok, 1),
        };
        let idx = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::parse(pos, format!("unknown generator '{name}'")))?;
        w = w.mul(&Word::generator_power(idx as u32, exp));
    }
    Ok(w)
}

/// Parse an identity as a sequence of "(w, j, +)" / "(w, j, -)" triples with
/// 1-based relator indices.
pub fn parse_identity(input: &str, names: &[String], relator_count: usize) -> Result<IdentityWord> {
    let mut factors = vec![];
    let mut rest = input;
    let mut offset = 0usize;
    while let Some(start) = rest.find('(') {
        let end = rest[start..]
            .find(')')
            .ok_or_else(|| Error::parse(offset + start, "unclosed identity factor"))?
            + start;
        let body = &rest[start + 1..end];
        let parts: Vec<&str> = body.split(',').map(|s| s.trim()).collect();
        if parts.len() != 3 {
            return Err(Error::parse(
                offset + start,
                "identity factor needs (word, relator index, sign)",
            ));
        }
        let w = parse_word(parts[0], names)?;
        let j: usize = parts[1]
            .parse()
            .map_err(|_| Error::parse(offset + start, "bad relator index"))?;
        if j == 0 || j > relator_count {
            return Err(Error::parse(
                offset + start,
                format!("relator index {j} out of range 1..{relator_count}"),
            ));
        }
        let eps = match parts[2] {
            "+" | "+1" => 1,
            "-" | "-1" => -1,
            other => {
                return Err(Error::parse(
                    offset + start,
                    format!("bad sign '{other}' in identity factor"),
                ))
            }
        };
        factors.push((w, j - 1, eps));
        offset += end + 1;
        rest = &rest[end + 1..];
    }
    Ok(IdentityWord::new(factors))
}
