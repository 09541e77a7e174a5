//! Finite Σ-trees and tree automata evaluated by their run map.

use std::collections::HashMap;
use std::fmt;

use crate::error::RuleError;
use crate::lattice::{ElementId, Lattice};

/// Operation symbols with their arities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    symbols: Vec<(String, usize)>,
}

impl Signature {
    pub fn new() -> Self {
        Signature::default()
    }

    pub fn with(mut self, name: impl Into<String>, arity: usize) -> Self {
        self.symbols.push((name.into(), arity));
        self
    }

    pub fn arity(&self, name: &str) -> Option<usize> {
        self.symbols.iter().find(|(s, _)| s == name).map(|&(_, a)| a)
    }

    pub fn symbols(&self) -> &[(String, usize)] {
        &self.symbols
    }
}

/// A finite labelled tree: variables at leaves, symbols at the other nodes
/// (nullary symbols are leaves too).
#[derive(Clone, PartialEq, Eq)]
pub enum TermTree {
    Var(String),
    Op(String, Vec<TermTree>),
}

impl TermTree {
    pub fn var(name: impl Into<String>) -> Self {
        TermTree::Var(name.into())
    }

    pub fn op(symbol: impl Into<String>, children: Vec<TermTree>) -> Self {
        TermTree::Op(symbol.into(), children)
    }

    pub fn leaf(symbol: impl Into<String>) -> Self {
        TermTree::Op(symbol.into(), Vec::new())
    }

    /// Checks every symbol against `sig` and its child count against the arity.
    pub fn check(&self, sig: &Signature) -> Result<(), RuleError> {
        match self {
            TermTree::Var(_) => Ok(()),
            TermTree::Op(s, kids) => {
                let arity = sig
                    .arity(s)
                    .ok_or_else(|| RuleError::MalformedTree(format!("unknown symbol `{s}`")))?;
                if arity != kids.len() {
                    return Err(RuleError::MalformedTree(format!(
                        "`{s}` has arity {arity} but {} children",
                        kids.len()
                    )));
                }
                kids.iter().try_for_each(|k| k.check(sig))
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            TermTree::Var(_) => 0,
            TermTree::Op(_, kids) => kids.iter().map(|k| k.depth() + 1).max().unwrap_or(0),
        }
    }
}

impl fmt::Debug for TermTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermTree::Var(v) => write!(f, "{v}"),
            TermTree::Op(s, kids) if kids.is_empty() => write!(f, "{s}"),
            TermTree::Op(s, kids) => {
                write!(f, "{s}(")?;
                for (i, k) in kids.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{k:?}")?;
                }
                write!(f, ")")
            }
        }
    }
}

type Operation<Q> = Box<dyn Fn(&[Q]) -> Q + Send + Sync>;

/// A tree automaton: a state set `Q`, one operation per symbol and an output
/// map applied at the root.
pub struct TreeAutomaton<Q, O> {
    signature: Signature,
    ops: HashMap<String, Operation<Q>>,
    output: Box<dyn Fn(&Q) -> O + Send + Sync>,
}

impl<Q: Clone, O> TreeAutomaton<Q, O> {
    pub fn new(signature: Signature, output: impl Fn(&Q) -> O + Send + Sync + 'static) -> Self {
        TreeAutomaton { signature, ops: HashMap::new(), output: Box::new(output) }
    }

    pub fn operation(mut self, symbol: &str, op: impl Fn(&[Q]) -> Q + Send + Sync + 'static) -> Self {
        assert!(self.signature.arity(symbol).is_some(), "`{symbol}` is not in the signature");
        self.ops.insert(symbol.to_string(), Box::new(op));
        self
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    /// State reached at the root of `t` with variables bound by `init`.
    pub fn state(&self, init: &HashMap<String, Q>, t: &TermTree) -> Result<Q, RuleError> {
        match t {
            TermTree::Var(v) => init.get(v).cloned().ok_or_else(|| RuleError::UnboundVariable(v.clone())),
            TermTree::Op(s, kids) => {
                let arity = self
                    .signature
                    .arity(s)
                    .ok_or_else(|| RuleError::MalformedTree(format!("unknown symbol `{s}`")))?;
                if arity != kids.len() {
                    return Err(RuleError::MalformedTree(format!(
                        "`{s}` has arity {arity} but {} children",
                        kids.len()
                    )));
                }
                let op = self
                    .ops
                    .get(s)
                    .ok_or_else(|| RuleError::MalformedTree(format!("no operation for `{s}`")))?;
                let args = kids
                    .iter()
                    .map(|k| self.state(init, k))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(op(&args))
            }
        }
    }

    /// The run map followed by the output map.
    pub fn run(&self, init: &HashMap<String, Q>, t: &TermTree) -> Result<O, RuleError> {
        Ok((self.output)(&self.state(init, t)?))
    }
}

/// Name of the phantom constant for corner `c`.
pub fn corner_symbol(c: usize) -> String {
    format!("c{c}")
}

pub fn voter_variable(i: usize) -> String {
    format!("x{}", i + 1)
}

/// The median automaton over `l`: a ternary `μ`, nullary `⊥`, `⊤` and one
/// phantom per corner value.
pub fn median_automaton(l: &Lattice, corners: &[ElementId]) -> TreeAutomaton<ElementId, ElementId> {
    let mut sig = Signature::new().with("μ", 3).with("⊥", 0).with("⊤", 0);
    for c in 0..corners.len() {
        sig = sig.with(corner_symbol(c), 0);
    }
    let lat = l.clone();
    let (bot, top) = (l.bottom(), l.top());
    let mut a = TreeAutomaton::new(sig, |q: &ElementId| *q)
        .operation("μ", move |xs| lat.median(xs[0], xs[1], xs[2]))
        .operation("⊥", move |_| bot)
        .operation("⊤", move |_| top);
    for (c, &v) in corners.iter().enumerate() {
        a = a.operation(&corner_symbol(c), move |_| v);
    }
    a
}

/// The canonical nested-median term over variables `x1..xn`.
pub fn canonical_term(n: usize) -> TermTree {
    fn build(n: usize, k: usize, prefix: usize) -> TermTree {
        if k == n {
            return TermTree::leaf(corner_symbol(prefix));
        }
        TermTree::op(
            "μ",
            vec![build(n, k + 1, prefix << 1), TermTree::var(voter_variable(k)), build(n, k + 1, prefix << 1 | 1)],
        )
    }
    build(n, 0, 0)
}

/// Binds `x1..xn` to the given ballots.
pub fn ballot_bindings(ballots: &[ElementId]) -> HashMap<String, ElementId> {
    ballots
        .iter()
        .enumerate()
        .map(|(i, &b)| (voter_variable(i), b))
        .collect()
}
