//! Words in Weyl group and extended Weyl group generators.
//!
//! Grammar (juxtaposition is the product, read left to right):
//!
//! ```text
//! word   := term* "'"?
//! term   := base post*
//! base   := atom | "(" term* ")"
//! post   := "^" int | "^{" int "}" | "^" atom | "^{" term* "}"
//! atom   := "s"<j> | "r"<j> | "n"<j> | "w0" | "wG" | "g" | "1"
//! ```
//!
//! `x^atom` and `x^{word}` are conjugation `c^-1 x c`. A trailing `'` marks "any
//! primitive power of", which evaluation leaves to the caller.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    /// reflection in root number j
    S(usize),
    /// representative of W-class j
    R(usize),
    /// extended Weyl group lift of the reflection in root number j
    N(usize),
    W0,
    /// longest element of the reflection subgroup in context
    WG,
    /// the distinguished element of order 2 in the extended Weyl group
    Gamma,
    One,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Post {
    Pow(i64),
    Conj(Atom),
    ConjWord(Vec<Term>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Base {
    Atom(Atom),
    Group(Vec<Term>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Term {
    base: Base,
    post: Vec<Post>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    terms: Vec<Term>,
    pub primed: bool,
    pub text: String,
}

pub trait WordGroup {
    type Elt: Clone;
    fn one(&self) -> Self::Elt;
    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn inv(&self, a: &Self::Elt) -> Self::Elt;
    fn atom(&self, a: &Atom) -> Result<Self::Elt>;

    fn pow(&self, a: &Self::Elt, k: i64) -> Self::Elt {
        let b = if k < 0 { self.inv(a) } else { a.clone() };
        let mut out = self.one();
        for _ in 0..k.unsigned_abs() {
            out = self.mul(&out, &b);
        }
        out
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("word {:?} at {}: {}", self.text, self.i, msg))
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        if start == self.i {
            return Err(self.err("expected a number"));
        }
        self.text[start..self.i].parse().map_err(|_| self.err("bad number"))
    }

    fn signed(&mut self) -> Result<i64> {
        let neg = self.peek() == Some(b'-');
        if neg {
            self.i += 1;
        }
        let n = self.number()? as i64;
        Ok(if neg { -n } else { n })
    }

    fn atom(&mut self) -> Result<Atom> {
        let c = self.peek().ok_or_else(|| self.err("unexpected end"))?;
        self.i += 1;
        match c {
            b's' => Ok(Atom::S(self.number()?)),
            b'r' => Ok(Atom::R(self.number()?)),
            b'n' => Ok(Atom::N(self.number()?)),
            b'g' => Ok(Atom::Gamma),
            b'1' => Ok(Atom::One),
            b'w' => match self.peek() {
                Some(b'0') => {
                    self.i += 1;
                    Ok(Atom::W0)
                }
                Some(b'G') => {
                    self.i += 1;
                    Ok(Atom::WG)
                }
                _ => Err(self.err("expected w0 or wG")),
            },
            _ => {
                self.i -= 1;
                Err(self.err("unexpected character"))
            }
        }
    }

    fn terms(&mut self) -> Result<Vec<Term>> {
        self.terms_until(b')')
    }

    fn terms_until(&mut self, close: u8) -> Result<Vec<Term>> {
        let mut out = Vec::new();
        while let Some(c) = self.peek() {
            if c == close || c == b'\'' {
                break;
            }
            out.push(self.term()?);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<Term> {
        let base = if self.peek() == Some(b'(') {
            self.i += 1;
            let inner = self.terms()?;
            if self.peek() != Some(b')') {
                return Err(self.err("unbalanced parenthesis"));
            }
            self.i += 1;
            Base::Group(inner)
        } else {
            Base::Atom(self.atom()?)
        };
        let mut post = Vec::new();
        while self.peek() == Some(b'^') {
            self.i += 1;
            match self.peek() {
                Some(b'{') => {
                    self.i += 1;
                    let numeric = matches!(self.peek(), Some(c) if c == b'-' || c.is_ascii_digit());
                    if numeric {
                        post.push(Post::Pow(self.signed()?));
                    } else {
                        post.push(Post::ConjWord(self.terms_until(b'}')?));
                    }
                    if self.peek() != Some(b'}') {
                        return Err(self.err("expected }"));
                    }
                    self.i += 1;
                }
                Some(c) if c == b'-' || c.is_ascii_digit() => post.push(Post::Pow(self.signed()?)),
                _ => post.push(Post::Conj(self.atom()?)),
            }
        }
        Ok(Term { base, post })
    }
}

impl Word {
    pub fn parse(text: &str) -> Result<Word> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { s: compact.as_bytes(), i: 0, text: &compact };
        let terms = p.terms()?;
        let mut primed = false;
        if p.peek() == Some(b'\'') {
            primed = true;
            p.i += 1;
        }
        if p.i != p.s.len() {
            return Err(p.err("trailing input"));
        }
        if terms.is_empty() {
            return Err(p.err("empty word"));
        }
        Ok(Word { terms, primed, text: text.trim().to_string() })
    }

    /// Atoms occurring in the word, in order of appearance.
    pub fn atoms(&self) -> Vec<Atom> {
        fn walk(ts: &[Term], out: &mut Vec<Atom>) {
            for t in ts {
                match &t.base {
                    Base::Atom(a) => out.push(a.clone()),
                    Base::Group(g) => walk(g, out),
                }
                for p in &t.post {
                    match p {
                        Post::Conj(a) => out.push(a.clone()),
                        Post::ConjWord(g) => walk(g, out),
                        Post::Pow(_) => {}
                    }
                }
            }
        }
        let mut out = Vec::new();
        walk(&self.terms, &mut out);
        out
    }

    pub fn eval<G: WordGroup>(&self, g: &G) -> Result<G::Elt> {
        eval_terms(&self.terms, g)
    }
}

fn eval_terms<G: WordGroup>(ts: &[Term], g: &G) -> Result<G::Elt> {
    let mut acc = g.one();
    for t in ts {
        let mut x = match &t.base {
            Base::Atom(a) => g.atom(a)?,
            Base::Group(inner) => eval_terms(inner, g)?,
        };
        for p in &t.post {
            x = match p {
                Post::Pow(k) => g.pow(&x, *k),
                Post::Conj(a) => {
                    let c = g.atom(a)?;
                    g.mul(&g.mul(&g.inv(&c), &x), &c)
                }
                Post::ConjWord(ts) => {
                    let c = eval_terms(ts, g)?;
                    g.mul(&g.mul(&g.inv(&c), &x), &c)
                }
            };
        }
        acc = g.mul(&acc, &x);
    }
    Ok(acc)
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Integers mod 1000 under addition, with s_j = j.
    struct Z;

    impl WordGroup for Z {
        type Elt = i64;
        fn one(&self) -> i64 {
            0
        }
        fn mul(&self, a: &i64, b: &i64) -> i64 {
            (a + b).rem_euclid(1000)
        }
        fn inv(&self, a: &i64) -> i64 {
            (-a).rem_euclid(1000)
        }
        fn atom(&self, a: &Atom) -> Result<i64> {
            match a {
                Atom::S(j) | Atom::N(j) => Ok(*j as i64),
                Atom::One => Ok(0),
                _ => Ok(500),
            }
        }
    }

    #[test]
    fn greedy_indices_and_powers() {
        let w = Word::parse("s12s11").unwrap();
        assert_eq!(w.atoms(), vec![Atom::S(12), Atom::S(11)]);
        assert_eq!(w.eval(&Z).unwrap(), 23);
        assert_eq!(Word::parse("n4n3^2").unwrap().eval(&Z).unwrap(), 10);
        assert_eq!(Word::parse("(s4s9)^2").unwrap().eval(&Z).unwrap(), 26);
        assert_eq!(Word::parse("s3^{-1}").unwrap().eval(&Z).unwrap(), 997);
    }

    #[test]
    fn primes_and_conjugation() {
        let w = Word::parse("(w0s4s19wG)'").unwrap();
        assert!(w.primed);
        assert_eq!(w.atoms(), vec![Atom::W0, Atom::S(4), Atom::S(19), Atom::WG]);
        let c = Word::parse("(n4n17)^n3n22").unwrap();
        assert_eq!(c.atoms(), vec![Atom::N(4), Atom::N(17), Atom::N(3), Atom::N(22)]);
        assert_eq!(c.eval(&Z).unwrap(), 43);
        let b = Word::parse("(n4n17)^{n3n22n3^2}").unwrap();
        assert_eq!(b.atoms(), vec![Atom::N(4), Atom::N(17), Atom::N(3), Atom::N(22), Atom::N(3)]);
        assert_eq!(b.eval(&Z).unwrap(), 21);
    }

    #[test]
    fn rejects_garbage() {
        assert!(Word::parse("s").is_err());
        assert!(Word::parse("(s1").is_err());
        assert!(Word::parse("x1").is_err());
        assert!(Word::parse("").is_err());
    }
}
