//! Polygon words: a closed surface presented as a polygon whose sides are
//! glued in pairs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::Surface;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Symbol {
    pub label: String,
    pub inverse: bool,
}

impl Symbol {
    pub fn new(label: impl Into<String>, inverse: bool) -> Self {
        Symbol {
            label: label.into(),
            inverse,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}'", self.label)
        } else {
            f.write_str(&self.label)
        }
    }
}

/// An orientable surface word: every label occurs exactly twice, once
/// plain and once inverted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurfaceWord {
    symbols: Vec<Symbol>,
}

impl SurfaceWord {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::MalformedWord("empty word".into()));
        }
        let mut seen: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for s in &symbols {
            let slot = seen.entry(&s.label).or_default();
            if s.inverse {
                slot.1 += 1;
            } else {
                slot.0 += 1;
            }
        }
        for (label, &(plain, inv)) in &seen {
            if plain + inv != 2 {
                return Err(Error::MalformedWord(format!(
                    "label {label} occurs {} times",
                    plain + inv
                )));
            }
        }
        if seen.values().any(|&(plain, _)| plain != 1) {
            return Err(Error::NonOrientableWord);
        }
        Ok(SurfaceWord { symbols })
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Genus of the glued polygon.
    ///
    /// Corner `i` sits between sides `i-1` and `i`. Side `i` runs from
    /// corner `i` to corner `i+1`, reversed when the symbol is inverted.
    /// Gluing a pair identifies tail with tail and head with head; the
    /// identified corners are the surface's vertices, with `len/2` edges and
    /// a single face.
    pub fn genus(&self) -> Surface {
        let n = self.symbols.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut first: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for (i, s) in self.symbols.iter().enumerate() {
            let (tail, head) = if s.inverse { ((i + 1) % n, i) } else { (i, (i + 1) % n) };
            match first.get(s.label.as_str()) {
                None => {
                    first.insert(&s.label, (tail, head));
                }
                Some(&(t, h)) => {
                    for (a, b) in [(t, tail), (h, head)] {
                        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                        parent[ra] = rb;
                    }
                }
            }
        }
        let vertices = (0..n).filter(|&i| find(&mut parent, i) == i).count();
        let chi = vertices as i64 - (n / 2) as i64 + 1;
        Surface::from_euler_characteristic(chi).expect("orientable words glue to closed orientable surfaces")
    }

    fn positions(&self, label: &str) -> Result<(usize, usize)> {
        let plain = self.symbols.iter().position(|s| s.label == label && !s.inverse);
        let inv = self.symbols.iter().position(|s| s.label == label && s.inverse);
        match (plain, inv) {
            (Some(i), Some(j)) if i < j => Ok((i, j)),
            (Some(_), Some(_)) => Err(Error::InvalidRewrite(format!("{label} must occur before {label}'"))),
            _ => Err(Error::InvalidRewrite(format!("label {label} not in word"))),
        }
    }

    /// `α X β γ X' δ  ~  α X γ β X' δ`, where `split` is the index at which
    /// `γ` starts (`i < split <= j` for `X` at `i` and `X'` at `j`).
    pub fn rewrite_right_to_left(&self, x: &str, split: usize) -> Result<SurfaceWord> {
        let (i, j) = self.positions(x)?;
        if split <= i || split > j {
            return Err(Error::InvalidRewrite(format!("split {split} outside ({i}, {j}]")));
        }
        let s = &self.symbols;
        let symbols = s[..=i]
            .iter()
            .chain(&s[split..j])
            .chain(&s[i + 1..split])
            .chain(&s[j..])
            .cloned()
            .collect();
        Ok(SurfaceWord { symbols })
    }

    /// `α β X γ X' δ  ~  α X γ X' β δ`, where `split` is the index at which
    /// `β` starts (`split <= i` for `X` at `i`).
    pub fn rewrite_left_to_right(&self, x: &str, split: usize) -> Result<SurfaceWord> {
        let (i, j) = self.positions(x)?;
        if split > i {
            return Err(Error::InvalidRewrite(format!("split {split} after {x} at {i}")));
        }
        let s = &self.symbols;
        let symbols = s[..split]
            .iter()
            .chain(&s[i..=j])
            .chain(&s[split..i])
            .chain(&s[j + 1..])
            .cloned()
            .collect();
        Ok(SurfaceWord { symbols })
    }
}

impl fmt::Display for SurfaceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.symbols.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

fn strip_inverse(token: &str) -> (&str, bool) {
    for suffix in ["^{-1}", "^-1", "'"] {
        if let Some(base) = token.strip_suffix(suffix) {
            return (base, true);
        }
    }
    (token, false)
}

/// Accepts `A B A' B'` (whitespace separated, `^-1` also means inverse) or a
/// compact form of single-character labels such as `ABA'B'` / `ABA^-1B^-1`.
impl FromStr for SurfaceWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let mut symbols = Vec::new();
        if text.contains(char::is_whitespace) {
            for token in text.split_whitespace() {
                let (label, inverse) = strip_inverse(token);
                if label.is_empty() {
                    return Err(Error::Parse(format!("bad token {token:?}")));
                }
                symbols.push(Symbol::new(label, inverse));
            }
        } else {
            let mut rest = text;
            while let Some(c) = rest.chars().next() {
                if !c.is_alphanumeric() {
                    return Err(Error::Parse(format!("unexpected {c:?} in {text:?}")));
                }
                rest = &rest[c.len_utf8()..];
                let mut inverse = false;
                for suffix in ["^{-1}", "^-1", "'"] {
                    if let Some(r) = rest.strip_prefix(suffix) {
                        rest = r;
                        inverse = true;
                        break;
                    }
                }
                symbols.push(Symbol::new(c.to_string(), inverse));
            }
        }
        SurfaceWord::new(symbols)
    }
}
