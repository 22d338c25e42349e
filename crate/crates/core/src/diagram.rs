//! Formal functor words and 2-cell expressions, with exact evaluation into
//! [`LinMap`].
//!
//! Every functor in scope is tensor-type, `X ⊗ –`, so a word of functor
//! symbols evaluates to the Kronecker product of the letter carriers and a
//! 2-cell evaluates to a single matrix: generators to their bodies, vertical
//! composition to matrix composition, whiskering to tensoring with the
//! identity of the whiskering word's carrier.
//!
//! Equality of parallel cells is decided only by evaluation in this linear
//! model, never by symbolic normalization.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::ring::ExactRing;

/// A composite of functor symbols; the empty word is the identity functor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FunctorWord(pub Vec<String>);

impl FunctorWord {
    pub fn empty() -> Self {
        FunctorWord(Vec::new())
    }

    pub fn concat(&self, other: &FunctorWord) -> FunctorWord {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        FunctorWord(v)
    }
}

/// Build a word from symbol names.
pub fn word(letters: &[&str]) -> FunctorWord {
    FunctorWord(letters.iter().map(|s| s.to_string()).collect())
}

impl fmt::Display for FunctorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "I")
        } else {
            write!(f, "{}", self.0.join(" "))
        }
    }
}

#[derive(Debug, Clone)]
pub struct Generator {
    pub name: String,
    pub source: FunctorWord,
    pub target: FunctorWord,
    pub body: LinMap,
}

/// A signature: the functor symbols with their carrier dimensions and the
/// generator 2-cells with their matrix bodies.
#[derive(Debug, Clone)]
pub struct Signature {
    ring: ExactRing,
    symbols: BTreeMap<String, usize>,
    gens: BTreeMap<String, Generator>,
}

impl Signature {
    pub fn new(ring: ExactRing) -> Self {
        Signature {
            ring,
            symbols: BTreeMap::new(),
            gens: BTreeMap::new(),
        }
    }

    pub fn ring(&self) -> ExactRing {
        self.ring
    }

    pub fn add_symbol(&mut self, name: &str, carrier_dim: usize) -> Result<()> {
        if self.symbols.insert(name.to_string(), carrier_dim).is_some() {
            return Err(Error::Invalid(format!("duplicate functor symbol `{name}`")));
        }
        Ok(())
    }

    pub fn add_gen(
        &mut self,
        name: &str,
        source: FunctorWord,
        target: FunctorWord,
        body: LinMap,
    ) -> Result<()> {
        let src_dim = self.carrier_dim(&source)?;
        let tgt_dim = self.carrier_dim(&target)?;
        if body.rows() != tgt_dim || body.cols() != src_dim {
            return Err(Error::DimMismatch {
                expected: tgt_dim * src_dim,
                got: body.rows() * body.cols(),
                context: "generator body shape vs boundary carriers",
            });
        }
        if body.ring() != self.ring {
            return Err(Error::RingMismatch);
        }
        if self
            .gens
            .insert(
                name.to_string(),
                Generator {
                    name: name.to_string(),
                    source,
                    target,
                    body,
                },
            )
            .is_some()
        {
            return Err(Error::Invalid(format!("duplicate generator `{name}`")));
        }
        Ok(())
    }

    pub fn symbol_dim(&self, name: &str) -> Result<usize> {
        self.symbols
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn generator(&self, name: &str) -> Result<&Generator> {
        self.gens
            .get(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Product of the letter dimensions; empty word has carrier 1.
    pub fn carrier_dim(&self, w: &FunctorWord) -> Result<usize> {
        let mut d = 1usize;
        for letter in &w.0 {
            d *= self.symbol_dim(letter)?;
        }
        Ok(d)
    }
}

/// A formal 2-cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellExpr {
    Gen(String),
    Id(FunctorWord),
    /// `Vert(second, first)`: apply `first`, then `second`.
    Vert(Box<CellExpr>, Box<CellExpr>),
    Whisker(FunctorWord, Box<CellExpr>, FunctorWord),
}

impl CellExpr {
    pub fn gen(name: &str) -> CellExpr {
        CellExpr::Gen(name.to_string())
    }

    pub fn id(w: FunctorWord) -> CellExpr {
        CellExpr::Id(w)
    }

    pub fn whisker(left: FunctorWord, inner: CellExpr, right: FunctorWord) -> CellExpr {
        CellExpr::Whisker(left, Box::new(inner), right)
    }
}

/// Vertical composite in application order: `seq([a, b, c])` applies `a`
/// first, matching the left-to-right arrow chains the laws are written in.
pub fn seq(cells: Vec<CellExpr>) -> CellExpr {
    let mut iter = cells.into_iter();
    let first = iter.next().expect("seq of no cells");
    iter.fold(first, |acc, next| {
        CellExpr::Vert(Box::new(next), Box::new(acc))
    })
}

impl fmt::Display for CellExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellExpr::Gen(n) => write!(f, "{n}"),
            CellExpr::Id(w) => write!(f, "id({w})"),
            CellExpr::Vert(second, first) => write!(f, "{second} . {first}"),
            CellExpr::Whisker(l, inner, r) => {
                if l.0.is_empty() && r.0.is_empty() {
                    write!(f, "{inner}")
                } else {
                    write!(f, "(")?;
                    if !l.0.is_empty() {
                        write!(f, "{} ", l)?;
                    }
                    write!(f, "{inner}")?;
                    if !r.0.is_empty() {
                        write!(f, " {}", r)?;
                    }
                    write!(f, ")")
                }
            }
        }
    }
}

/// Source and target words of a cell, by structural recursion.
pub fn boundary(cell: &CellExpr, sig: &Signature) -> Result<(FunctorWord, FunctorWord)> {
    match cell {
        CellExpr::Gen(name) => {
            let g = sig.generator(name)?;
            Ok((g.source.clone(), g.target.clone()))
        }
        CellExpr::Id(w) => {
            sig.carrier_dim(w)?; // validate letters
            Ok((w.clone(), w.clone()))
        }
        CellExpr::Vert(second, first) => {
            let (src1, tgt1) = boundary(first, sig)?;
            let (src2, tgt2) = boundary(second, sig)?;
            if tgt1 != src2 {
                return Err(Error::IllTypedVert {
                    first_target: tgt1.to_string(),
                    second_source: src2.to_string(),
                });
            }
            Ok((src1, tgt2))
        }
        CellExpr::Whisker(l, inner, r) => {
            let (src, tgt) = boundary(inner, sig)?;
            sig.carrier_dim(l)?;
            sig.carrier_dim(r)?;
            Ok((
                l.concat(&src).concat(r),
                l.concat(&tgt).concat(r),
            ))
        }
    }
}

/// Evaluate a cell to its matrix in the linear model.
pub fn evaluate(cell: &CellExpr, sig: &Signature) -> Result<LinMap> {
    match cell {
        CellExpr::Gen(name) => Ok(sig.generator(name)?.body.clone()),
        CellExpr::Id(w) => Ok(LinMap::identity(sig.ring(), sig.carrier_dim(w)?)),
        CellExpr::Vert(second, first) => {
            // boundary check first so ill-typed cells error out rather than
            // failing deep inside a dimension assert
            boundary(cell, sig)?;
            let f = evaluate(first, sig)?;
            let s = evaluate(second, sig)?;
            LinMap::compose(&s, &f)
        }
        CellExpr::Whisker(l, inner, r) => {
            let body = evaluate(inner, sig)?;
            let left = LinMap::identity(sig.ring(), sig.carrier_dim(l)?);
            let right = LinMap::identity(sig.ring(), sig.carrier_dim(r)?);
            LinMap::tensor(&left, &LinMap::tensor(&body, &right)?)
        }
    }
}

/// Outcome of deciding one equation between parallel cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawResult {
    pub holds: bool,
    /// On failure: one basis input (column index) where the two evaluations
    /// differ.
    pub witness: Option<usize>,
}

impl LawResult {
    pub fn pass() -> Self {
        LawResult {
            holds: true,
            witness: None,
        }
    }
}

/// Decide whether two parallel cells evaluate to the same matrix.
pub fn check_equation(lhs: &CellExpr, rhs: &CellExpr, sig: &Signature) -> Result<LawResult> {
    let (lsrc, ltgt) = boundary(lhs, sig)?;
    let (rsrc, rtgt) = boundary(rhs, sig)?;
    if sig.carrier_dim(&lsrc)? != sig.carrier_dim(&rsrc)?
        || sig.carrier_dim(&ltgt)? != sig.carrier_dim(&rtgt)?
    {
        return Err(Error::NotParallel {
            lhs_src: lsrc.to_string(),
            lhs_tgt: ltgt.to_string(),
            rhs_src: rsrc.to_string(),
            rhs_tgt: rtgt.to_string(),
        });
    }
    let l = evaluate(lhs, sig)?;
    let r = evaluate(rhs, sig)?;
    if l == r {
        Ok(LawResult::pass())
    } else {
        Ok(LawResult {
            holds: false,
            witness: l.first_differing_column(&r),
        })
    }
}
