//! The line-based graph file format.
//!
//! ```text
//! # strings with no 011
//! @type nfa-setspec
//! @alphabet 012
//! @initial i
//! @final i s f
//! i [0] s
//! i [^0] i
//! ```
//!
//! A transition line is `<source> <label> <target>`. State names are made of
//! letters, digits and `_`. `#` starts a comment, except as the value of
//! `@alphabet`, where `#n` is the numeric alphabet.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;
use std::str::FromStr;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::graph::{GraphKind, Label, LabelledGraph, StateId};
use crate::pairspec::{LetterPair, PairingSpec};
use crate::setspec::SetSpec;

/// A graph of any of the four label kinds.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AnyGraph {
    Nfa(LabelledGraph<Letter>),
    NfaSetSpec(LabelledGraph<SetSpec>),
    Transducer(LabelledGraph<LetterPair>),
    TransducerSetSpec(LabelledGraph<PairingSpec>),
}

/// Applies a generic expression to the graph inside an [`AnyGraph`].
#[macro_export]
macro_rules! with_graph {
    ($any:expr, $g:ident => $body:expr) => {
        match $any {
            $crate::format::AnyGraph::Nfa($g) => $body,
            $crate::format::AnyGraph::NfaSetSpec($g) => $body,
            $crate::format::AnyGraph::Transducer($g) => $body,
            $crate::format::AnyGraph::TransducerSetSpec($g) => $body,
        }
    };
}

impl AnyGraph {
    pub fn kind(&self) -> GraphKind {
        match self {
            AnyGraph::Nfa(_) => GraphKind::Nfa,
            AnyGraph::NfaSetSpec(_) => GraphKind::NfaSetSpec,
            AnyGraph::Transducer(_) => GraphKind::Transducer,
            AnyGraph::TransducerSetSpec(_) => GraphKind::TransducerSetSpec,
        }
    }

    pub fn check_labels(&self, gamma: &Alphabet) -> Result<()> {
        with_graph!(self, g => g.check_labels(gamma))
    }

    pub fn write(&self, gamma: Option<&Alphabet>) -> String {
        with_graph!(self, g => write_graph(g, gamma))
    }

    /// The same behaviour with set-spec or pairing-spec labels.
    pub fn into_spec_nfa(self) -> Option<LabelledGraph<SetSpec>> {
        match self {
            AnyGraph::Nfa(g) => Some(crate::nfa::from_letters(&g)),
            AnyGraph::NfaSetSpec(g) => Some(g),
            _ => None,
        }
    }

    pub fn into_spec_transducer(self) -> Option<LabelledGraph<PairingSpec>> {
        match self {
            AnyGraph::Transducer(g) => Some(crate::transducer::from_letter_pairs(&g)),
            AnyGraph::TransducerSetSpec(g) => Some(g),
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphFile {
    pub alphabet: Option<Alphabet>,
    pub graph: AnyGraph,
}

impl GraphFile {
    pub fn write(&self) -> String {
        self.graph.write(self.alphabet.as_ref())
    }
}

fn kind_from_name(name: &str) -> Option<GraphKind> {
    [
        GraphKind::Nfa,
        GraphKind::NfaSetSpec,
        GraphKind::Transducer,
        GraphKind::TransducerSetSpec,
    ]
    .into_iter()
    .find(|k| k.name() == name)
}

fn is_state_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || c == '_')
}

struct Raw {
    line: usize,
    source: String,
    label: String,
    target: String,
}

/// Parses a graph file. Labels are checked against the file's own
/// `@alphabet` when it has one.
pub fn parse_graph(text: &str) -> Result<GraphFile> {
    parse_graph_in(text, None)
}

/// Like [`parse_graph`], with `gamma` as the alphabet when the file has no
/// `@alphabet`. A file alphabet different from `gamma` is an error.
pub fn parse_graph_in(text: &str, gamma: Option<&Alphabet>) -> Result<GraphFile> {
    let mut kind = None;
    let mut alphabet: Option<Alphabet> = None;
    let mut names: HashMap<String, StateId> = HashMap::new();
    let mut order: Vec<String> = Vec::new();
    let mut initial = Vec::new();
    let mut finals = Vec::new();
    let mut raws = Vec::new();
    let mut state = |name: &str, line: usize| -> Result<StateId> {
        if !is_state_name(name) {
            return Err(Error::parse(line, name, "invalid state name"));
        }
        Ok(*names.entry(name.to_string()).or_insert_with(|| {
            order.push(name.to_string());
            order.len() - 1
        }))
    };

    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw_line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("@alphabet") {
            let value = rest.split_whitespace().next().unwrap_or("");
            if value.is_empty() {
                return Err(Error::parse(line, "@alphabet", "missing alphabet"));
            }
            if rest
                .split_whitespace()
                .nth(1)
                .is_some_and(|t| !t.starts_with('#'))
            {
                return Err(Error::parse(
                    line,
                    trimmed,
                    "the alphabet must be one token",
                ));
            }
            if alphabet.is_some() {
                return Err(Error::parse(line, "@alphabet", "duplicate @alphabet"));
            }
            let parsed =
                Alphabet::parse(value).map_err(|e| Error::parse(line, value, e.to_string()))?;
            if let Some(given) = gamma.filter(|g| **g != parsed) {
                return Err(Error::parse(
                    line,
                    value,
                    format!("file alphabet differs from `{given}`"),
                ));
            }
            alphabet = Some(parsed);
            continue;
        }
        let content = match trimmed.find('#') {
            Some(i) => trimmed[..i].trim(),
            None => trimmed,
        };
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let head = tokens.next().unwrap_or("");
        match head {
            "@type" => {
                let name = tokens.next().unwrap_or("");
                let k = kind_from_name(name).ok_or_else(|| {
                    Error::parse(
                        line,
                        if name.is_empty() { "@type" } else { name },
                        "expected nfa, nfa-setspec, transducer or transducer-setspec",
                    )
                })?;
                if let Some(extra) = tokens.next() {
                    return Err(Error::parse(line, extra, "unexpected token"));
                }
                if kind.is_some() {
                    return Err(Error::parse(line, "@type", "duplicate @type"));
                }
                kind = Some(k);
            }
            "@initial" => {
                for t in tokens {
                    initial.push(state(t, line)?);
                }
            }
            "@final" => {
                for t in tokens {
                    finals.push(state(t, line)?);
                }
            }
            h if h.starts_with('@') => return Err(Error::parse(line, h, "unknown directive")),
            source => {
                let parts: Vec<&str> = content.split_whitespace().collect();
                if parts.len() < 3 {
                    return Err(Error::parse(
                        line,
                        content,
                        "expected `<source> <label> <target>`",
                    ));
                }
                let target = parts[parts.len() - 1];
                let label_start = content[source.len()..].trim_start();
                let label = label_start[..label_start.len() - target.len()].trim_end();
                state(source, line)?;
                state(target, line)?;
                raws.push(Raw {
                    line,
                    source: source.to_string(),
                    label: label.to_string(),
                    target: target.to_string(),
                });
            }
        }
    }

    let kind = kind.ok_or_else(|| Error::parse(1, "<end>", "missing @type"))?;
    if initial.is_empty() {
        return Err(Error::parse(
            text.lines().count().max(1),
            "<end>",
            "missing @initial",
        ));
    }
    let alphabet = alphabet.or_else(|| gamma.cloned());
    let build = Build {
        count: order.len(),
        names: &names,
        initial: &initial,
        finals: &finals,
        raws: &raws,
        alphabet: alphabet.as_ref(),
    };
    let graph = match kind {
        GraphKind::Nfa => AnyGraph::Nfa(build.graph()?),
        GraphKind::NfaSetSpec => AnyGraph::NfaSetSpec(build.graph()?),
        GraphKind::Transducer => AnyGraph::Transducer(build.graph()?),
        GraphKind::TransducerSetSpec => AnyGraph::TransducerSetSpec(build.graph()?),
    };
    Ok(GraphFile { alphabet, graph })
}

struct Build<'a> {
    count: usize,
    names: &'a HashMap<String, StateId>,
    initial: &'a [StateId],
    finals: &'a [StateId],
    raws: &'a [Raw],
    alphabet: Option<&'a Alphabet>,
}

impl Build<'_> {
    fn graph<L: Label + FromStr<Err = Error>>(&self) -> Result<LabelledGraph<L>> {
        let mut g = LabelledGraph::new();
        g.add_states(self.count);
        for &q in self.initial {
            g.set_initial(q);
        }
        for &q in self.finals {
            g.set_final(q);
        }
        for r in self.raws {
            let label: L = r.label.parse().map_err(|e| match e {
                Error::Parse { token, message, .. } if token != "<end>" => {
                    Error::parse(r.line, token, message)
                }
                Error::Parse { message, .. } => Error::parse(r.line, &r.label, message),
                other => Error::parse(r.line, &r.label, other.to_string()),
            })?;
            if let Some(gamma) = self.alphabet {
                if !label.respects(gamma) {
                    return Err(Error::parse(
                        r.line,
                        &r.label,
                        format!("label does not respect alphabet `{gamma}`"),
                    ));
                }
            }
            g.add_transition(self.names[&r.source], label, self.names[&r.target]);
        }
        Ok(g)
    }
}

/// State numbering in breadth-first discovery order from the initial
/// states; unreachable states follow in id order.
pub fn canonical_order<L: Label>(g: &LabelledGraph<L>) -> Vec<StateId> {
    let out = g.outgoing();
    let mut rank: BTreeMap<StateId, usize> = BTreeMap::new();
    let mut seen = vec![false; g.num_states()];
    let mut queue = VecDeque::new();
    for &i in g.initial() {
        if !seen[i] {
            seen[i] = true;
            queue.push_back(i);
        }
    }
    let mut order = Vec::new();
    while let Some(p) = queue.pop_front() {
        order.push(p);
        for t in &out[p] {
            if !seen[t.target] {
                seen[t.target] = true;
                queue.push_back(t.target);
            }
        }
    }
    order.extend((0..g.num_states()).filter(|q| !seen[*q]));
    for (i, q) in order.iter().enumerate() {
        rank.insert(*q, i);
    }
    (0..g.num_states()).map(|q| rank[&q]).collect()
}

/// Writes `g` with states renamed `q0`, `q1`, … in canonical order.
pub fn write_graph<L: Label>(g: &LabelledGraph<L>, gamma: Option<&Alphabet>) -> String {
    let rank = canonical_order(g);
    let name = |q: StateId| format!("q{}", rank[q]);
    let list = |qs: &mut Vec<StateId>| -> String {
        qs.sort_by_key(|q| rank[*q]);
        qs.iter().map(|q| format!(" {}", name(*q))).collect()
    };
    let mut s = String::new();
    let _ = writeln!(s, "@type {}", L::KIND);
    if let Some(gamma) = gamma {
        let _ = writeln!(s, "@alphabet {}", gamma.literal());
    }
    let _ = writeln!(
        s,
        "@initial{}",
        list(&mut g.initial().iter().copied().collect())
    );
    let _ = writeln!(
        s,
        "@final{}",
        list(&mut g.finals().iter().copied().collect())
    );
    let mut by_source = vec![Vec::new(); g.num_states()];
    for t in g.transitions() {
        by_source[rank[t.source]].push(t);
    }
    for ts in by_source {
        for t in ts {
            let _ = writeln!(s, "{} {} {}", name(t.source), t.label, name(t.target));
        }
    }
    s
}

/// Renumbers states into canonical order.
pub fn canonicalize<L: Label>(g: &LabelledGraph<L>) -> LabelledGraph<L> {
    let rank = canonical_order(g);
    let mut out = LabelledGraph::new();
    out.add_states(g.num_states());
    for &q in g.initial() {
        out.set_initial(rank[q]);
    }
    for &q in g.finals() {
        out.set_final(rank[q]);
    }
    let mut ts: Vec<_> = g.transitions().collect();
    ts.sort_by_key(|t| rank[t.source]);
    for t in ts {
        out.add_transition(rank[t.source], t.label.clone(), rank[t.target]);
    }
    out
}
