//! Brute-force oracles and random generators shared by the integration
//! tests. Everything here works on plain letters and explicit sets, using
//! the library only for its data types.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use symspec::alphabet::{Alphabet, Letter, SortedWord, Symbol};
use symspec::graph::LabelledGraph;
use symspec::pairspec::{LetterPair, PairingSpec};
use symspec::regex::Regex;
use symspec::setspec::SetSpec;

pub use rand::SeedableRng;
pub type Rng8 = ChaCha8Rng;

pub type Word = Vec<Symbol>;
/// `None` is the empty word.
pub type Lit = Option<Symbol>;
pub type Pairs = BTreeSet<(Word, Word)>;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn word(s: &str) -> Word {
    s.chars().map(Symbol::from_char).collect()
}

pub fn alphabet(s: &str) -> Alphabet {
    Alphabet::from_chars(s).unwrap()
}

pub fn all_words(gamma: &Alphabet, k: usize) -> Vec<Word> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Word> = vec![vec![]];
    for _ in 0..k {
        layer = layer
            .iter()
            .flat_map(|u| {
                gamma
                    .symbols()
                    .iter()
                    .map(move |s| [u.as_slice(), &[*s]].concat())
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

// ---------------------------------------------------------------- labels

pub fn set_lang(f: &SetSpec, gamma: &Alphabet) -> BTreeSet<Lit> {
    match f {
        SetSpec::Eps => BTreeSet::from([None]),
        SetSpec::All => gamma.symbols().iter().map(|s| Some(*s)).collect(),
        SetSpec::In(w) => w.symbols().iter().map(|s| Some(*s)).collect(),
        SetSpec::NotIn(w) => gamma
            .symbols()
            .iter()
            .filter(|s| !w.symbols().contains(s))
            .map(|s| Some(*s))
            .collect(),
    }
}

pub fn pair_rel(p: &PairingSpec, gamma: &Alphabet) -> BTreeSet<(Lit, Lit)> {
    let eps = BTreeSet::from([None]);
    let cross = |a: &BTreeSet<Lit>, b: &BTreeSet<Lit>| -> BTreeSet<(Lit, Lit)> {
        a.iter()
            .flat_map(|x| b.iter().map(move |y| (*x, *y)))
            .collect()
    };
    match p {
        PairingSpec::EpsEps => cross(&eps, &eps),
        PairingSpec::EpsTo(g) => cross(&eps, &set_lang(g, gamma)),
        PairingSpec::ToEps(f) => cross(&set_lang(f, gamma), &eps),
        PairingSpec::Cross(f, g) => cross(&set_lang(f, gamma), &set_lang(g, gamma)),
        PairingSpec::Same(f) => set_lang(f, gamma).into_iter().map(|x| (x, x)).collect(),
        PairingSpec::Diff(f, g) => cross(&set_lang(f, gamma), &set_lang(g, gamma))
            .into_iter()
            .filter(|(x, y)| x != y)
            .collect(),
    }
}

fn lit(l: Letter) -> Lit {
    match l {
        Letter::Eps => None,
        Letter::Sym(s) => Some(s),
    }
}

/// Every set spec whose word is a nonempty subset of Γ, plus `\e` and `@`.
/// With `respecting`, `[Γ]` and `[^Γ]` are left out.
pub fn all_set_specs(gamma: &Alphabet, respecting: bool) -> Vec<SetSpec> {
    let syms = gamma.symbols();
    let n = syms.len();
    let mut out = vec![SetSpec::Eps, SetSpec::All];
    for mask in 1u32..(1 << n) {
        if respecting && mask == (1 << n) - 1 {
            continue;
        }
        let w = SortedWord::from_symbols((0..n).filter(|i| mask & (1 << i) != 0).map(|i| syms[i]))
            .unwrap();
        out.push(SetSpec::In(w.clone()));
        out.push(SetSpec::NotIn(w));
    }
    out
}

/// Every pairing spec whose components respect Γ.
pub fn all_pairing_specs(gamma: &Alphabet) -> Vec<PairingSpec> {
    let sides: Vec<SetSpec> = all_set_specs(gamma, true)
        .into_iter()
        .filter(|f| !f.is_eps())
        .collect();
    let mut out = vec![PairingSpec::EpsEps];
    for f in &sides {
        out.push(PairingSpec::EpsTo(f.clone()));
        out.push(PairingSpec::ToEps(f.clone()));
        out.push(PairingSpec::Same(f.clone()));
        for g in &sides {
            out.push(PairingSpec::Cross(f.clone(), g.clone()));
            out.push(PairingSpec::Diff(f.clone(), g.clone()));
        }
    }
    out
}

// ---------------------------------------------------------------- machines

#[derive(Clone, Debug, Default)]
pub struct LetterNfa {
    pub n: usize,
    pub trans: Vec<(usize, Lit, usize)>,
    pub init: BTreeSet<usize>,
    pub fin: BTreeSet<usize>,
}

#[derive(Clone, Debug, Default)]
pub struct LetterFst {
    pub n: usize,
    pub trans: Vec<(usize, Lit, Lit, usize)>,
    pub init: BTreeSet<usize>,
    pub fin: BTreeSet<usize>,
}

fn frame<L: symspec::graph::Label>(
    g: &LabelledGraph<L>,
) -> (usize, BTreeSet<usize>, BTreeSet<usize>) {
    (g.num_states(), g.initial().clone(), g.finals().clone())
}

pub fn expand_nfa(g: &LabelledGraph<SetSpec>, gamma: &Alphabet) -> LetterNfa {
    let (n, init, fin) = frame(g);
    let trans = g
        .transitions()
        .flat_map(|t| {
            set_lang(&t.label, gamma)
                .into_iter()
                .map(move |x| (t.source, x, t.target))
        })
        .collect();
    LetterNfa {
        n,
        trans,
        init,
        fin,
    }
}

pub fn letter_nfa(g: &LabelledGraph<Letter>) -> LetterNfa {
    let (n, init, fin) = frame(g);
    let trans = g
        .transitions()
        .map(|t| (t.source, lit(t.label), t.target))
        .collect();
    LetterNfa {
        n,
        trans,
        init,
        fin,
    }
}

pub fn expand_fst(g: &LabelledGraph<PairingSpec>, gamma: &Alphabet) -> LetterFst {
    let (n, init, fin) = frame(g);
    let trans = g
        .transitions()
        .flat_map(|t| {
            pair_rel(&t.label, gamma)
                .into_iter()
                .map(move |(x, y)| (t.source, x, y, t.target))
        })
        .collect();
    LetterFst {
        n,
        trans,
        init,
        fin,
    }
}

pub fn letter_fst(g: &LabelledGraph<LetterPair>) -> LetterFst {
    let (n, init, fin) = frame(g);
    let trans = g
        .transitions()
        .map(|t| (t.source, lit(t.label.input), lit(t.label.output), t.target))
        .collect();
    LetterFst {
        n,
        trans,
        init,
        fin,
    }
}

pub fn fst_to_graph(t: &LetterFst) -> LabelledGraph<LetterPair> {
    let mut g = LabelledGraph::new();
    g.add_states(t.n);
    let letter = |x: Lit| x.map_or(Letter::Eps, Letter::Sym);
    for &(p, x, y, q) in &t.trans {
        g.add_transition(p, LetterPair::new(letter(x), letter(y)), q);
    }
    for &i in &t.init {
        g.set_initial(i);
    }
    for &f in &t.fin {
        g.set_final(f);
    }
    g
}

fn push(w: &Word, x: Lit) -> Word {
    let mut w = w.clone();
    w.extend(x);
    w
}

/// Accepted words of length at most `k`.
pub fn nfa_words(a: &LetterNfa, k: usize) -> BTreeSet<Word> {
    let mut seen: HashSet<(usize, Word)> = HashSet::new();
    let mut queue: VecDeque<(usize, Word)> = a.init.iter().map(|&i| (i, vec![])).collect();
    seen.extend(queue.iter().cloned());
    let mut out = BTreeSet::new();
    while let Some((p, w)) = queue.pop_front() {
        if a.fin.contains(&p) {
            out.insert(w.clone());
        }
        for &(s, x, q) in &a.trans {
            if s != p {
                continue;
            }
            let w2 = push(&w, x);
            if w2.len() <= k && seen.insert((q, w2.clone())) {
                queue.push_back((q, w2));
            }
        }
    }
    out
}

/// Accepted pairs with both sides of length at most `k`.
pub fn fst_pairs(t: &LetterFst, k: usize) -> Pairs {
    fst_pairs_capped(t, k, k)
}

pub fn fst_pairs_capped(t: &LetterFst, k_in: usize, k_out: usize) -> Pairs {
    let mut seen: HashSet<(usize, Word, Word)> = HashSet::new();
    let mut queue: VecDeque<(usize, Word, Word)> =
        t.init.iter().map(|&i| (i, vec![], vec![])).collect();
    seen.extend(queue.iter().cloned());
    let mut out = BTreeSet::new();
    while let Some((p, u, v)) = queue.pop_front() {
        if t.fin.contains(&p) {
            out.insert((u.clone(), v.clone()));
        }
        for &(s, x, y, q) in &t.trans {
            if s != p {
                continue;
            }
            let (u2, v2) = (push(&u, x), push(&v, y));
            if u2.len() <= k_in && v2.len() <= k_out && seen.insert((q, u2.clone(), v2.clone())) {
                queue.push_back((q, u2, v2));
            }
        }
    }
    out
}

/// Output sets per input word, inputs up to `k_in`, outputs up to `k_out`.
pub fn outputs_by_input(
    t: &LetterFst,
    k_in: usize,
    k_out: usize,
) -> BTreeMap<Word, BTreeSet<Word>> {
    let mut m: BTreeMap<Word, BTreeSet<Word>> = BTreeMap::new();
    for (u, v) in fst_pairs_capped(t, k_in, k_out) {
        m.entry(u).or_default().insert(v);
    }
    m
}

/// The textbook ε-NFA product: equal letters move together, ε moves alone.
pub fn nfa_product(a: &LetterNfa, b: &LetterNfa) -> LetterNfa {
    let id = |p: usize, q: usize| p * b.n + q;
    let mut trans = Vec::new();
    for &(p, x, p2) in &a.trans {
        for q in 0..b.n {
            if x.is_none() {
                trans.push((id(p, q), None, id(p2, q)));
            }
        }
        for &(q, y, q2) in &b.trans {
            if x.is_some() && x == y {
                trans.push((id(p, q), x, id(p2, q2)));
            }
        }
    }
    for &(q, y, q2) in &b.trans {
        if y.is_none() {
            for p in 0..a.n {
                trans.push((id(p, q), None, id(p, q2)));
            }
        }
    }
    LetterNfa {
        n: a.n * b.n,
        trans,
        init: a
            .init
            .iter()
            .flat_map(|&i| b.init.iter().map(move |&j| id(i, j)))
            .collect(),
        fin: a
            .fin
            .iter()
            .flat_map(|&i| b.fin.iter().map(move |&j| id(i, j)))
            .collect(),
    }
}

/// Runs `t` then `s`: middle letters must agree; an ε on the middle tape
/// moves one machine alone.
pub fn fst_compose(t: &LetterFst, s: &LetterFst) -> LetterFst {
    let id = |p: usize, q: usize| p * s.n + q;
    let mut trans = Vec::new();
    for &(p, x, y, p2) in &t.trans {
        if y.is_none() {
            for q in 0..s.n {
                trans.push((id(p, q), x, None, id(p2, q)));
            }
        } else {
            for &(q, y2, z, q2) in &s.trans {
                if y == y2 {
                    trans.push((id(p, q), x, z, id(p2, q2)));
                }
            }
        }
    }
    for &(q, y, z, q2) in &s.trans {
        if y.is_none() {
            for p in 0..t.n {
                trans.push((id(p, q), None, z, id(p, q2)));
            }
        }
    }
    LetterFst {
        n: t.n * s.n,
        trans,
        init: t
            .init
            .iter()
            .flat_map(|&i| s.init.iter().map(move |&j| id(i, j)))
            .collect(),
        fin: t
            .fin
            .iter()
            .flat_map(|&i| s.fin.iter().map(move |&j| id(i, j)))
            .collect(),
    }
}

pub fn fst_inverse(t: &LetterFst) -> LetterFst {
    LetterFst {
        trans: t.trans.iter().map(|&(p, x, y, q)| (p, y, x, q)).collect(),
        ..t.clone()
    }
}

/// The identity transducer of `L(a)`.
pub fn nfa_identity(a: &LetterNfa) -> LetterFst {
    LetterFst {
        n: a.n,
        trans: a.trans.iter().map(|&(p, x, q)| (p, x, x, q)).collect(),
        init: a.init.clone(),
        fin: a.fin.clone(),
    }
}

pub fn fst_restrict_in(t: &LetterFst, a: &LetterNfa) -> LetterFst {
    fst_compose(&nfa_identity(a), t)
}

pub fn fst_restrict_out(t: &LetterFst, a: &LetterNfa) -> LetterFst {
    fst_compose(t, &nfa_identity(a))
}

// ---------------------------------------------------------------- regexes

fn cat_words(x: &BTreeSet<Word>, y: &BTreeSet<Word>, k: usize) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for a in x {
        for b in y {
            if a.len() + b.len() <= k {
                out.insert([a.as_slice(), b.as_slice()].concat());
            }
        }
    }
    out
}

/// Words of `L(r)` of length at most `k`, straight from the definition.
pub fn regex_words(r: &Regex<SetSpec>, gamma: &Alphabet, k: usize) -> BTreeSet<Word> {
    match r {
        Regex::EmptySet => BTreeSet::new(),
        Regex::Neutral => BTreeSet::from([vec![]]),
        Regex::Label(f) => set_lang(f, gamma)
            .into_iter()
            .map(|x| x.into_iter().collect::<Word>())
            .filter(|w| w.len() <= k)
            .collect(),
        Regex::Union(a, b) => &regex_words(a, gamma, k) | &regex_words(b, gamma, k),
        Regex::Concat(a, b) => cat_words(&regex_words(a, gamma, k), &regex_words(b, gamma, k), k),
        Regex::Star(a) => {
            let base = regex_words(a, gamma, k);
            let mut acc = BTreeSet::from([vec![]]);
            loop {
                let next = &acc | &cat_words(&acc, &base, k);
                if next == acc {
                    return acc;
                }
                acc = next;
            }
        }
    }
}

fn cat_pairs(x: &Pairs, y: &Pairs, k: usize) -> Pairs {
    let mut out = BTreeSet::new();
    for (a, b) in x {
        for (c, d) in y {
            if a.len() + c.len() <= k && b.len() + d.len() <= k {
                out.insert(([a.as_slice(), c].concat(), [b.as_slice(), d].concat()));
            }
        }
    }
    out
}

pub fn regex_pairs(r: &Regex<PairingSpec>, gamma: &Alphabet, k: usize) -> Pairs {
    match r {
        Regex::EmptySet => BTreeSet::new(),
        Regex::Neutral => BTreeSet::from([(vec![], vec![])]),
        Regex::Label(p) => pair_rel(p, gamma)
            .into_iter()
            .map(|(x, y)| (x.into_iter().collect(), y.into_iter().collect()))
            .collect(),
        Regex::Union(a, b) => &regex_pairs(a, gamma, k) | &regex_pairs(b, gamma, k),
        Regex::Concat(a, b) => cat_pairs(&regex_pairs(a, gamma, k), &regex_pairs(b, gamma, k), k),
        Regex::Star(a) => {
            let base = regex_pairs(a, gamma, k);
            let mut acc = BTreeSet::from([(vec![], vec![])]);
            loop {
                let next = &acc | &cat_pairs(&acc, &base, k);
                if next == acc {
                    return acc;
                }
                acc = next;
            }
        }
    }
}

// ---------------------------------------------------------------- random

pub fn random_alphabet(rng: &mut Rng8, max: u32) -> Alphabet {
    Alphabet::numeric(rng.gen_range(2..=max)).unwrap()
}

/// A random non-`\e` set spec respecting Γ.
pub fn random_set_spec(rng: &mut Rng8, gamma: &Alphabet) -> SetSpec {
    let specs = all_set_specs(gamma, true);
    // favour small classes so that singletons are common
    if rng.gen_bool(0.4) {
        return SetSpec::In(SortedWord::single(*gamma.symbols().choose(rng).unwrap()));
    }
    specs[1..].choose(rng).unwrap().clone()
}

pub fn random_pairing_spec(rng: &mut Rng8, gamma: &Alphabet) -> PairingSpec {
    let f = random_set_spec(rng, gamma);
    let g = random_set_spec(rng, gamma);
    match rng.gen_range(0..12) {
        0 => PairingSpec::EpsEps,
        1 | 2 => PairingSpec::EpsTo(g),
        3 | 4 => PairingSpec::ToEps(f),
        5..=7 => PairingSpec::Cross(f, g),
        8 | 9 => PairingSpec::Same(f),
        _ => PairingSpec::Diff(f, g),
    }
}

pub fn random_graph<L: symspec::graph::Label>(
    rng: &mut Rng8,
    max_states: usize,
    max_trans: usize,
    mut label: impl FnMut(&mut Rng8) -> L,
) -> LabelledGraph<L> {
    let mut g = LabelledGraph::new();
    let n = rng.gen_range(1..=max_states);
    g.add_states(n);
    for _ in 0..rng.gen_range(0..=max_trans) {
        let (p, q) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let l = label(rng);
        g.add_transition(p, l, q);
    }
    g.set_initial(0);
    if n > 1 && rng.gen_bool(0.3) {
        g.set_initial(rng.gen_range(1..n));
    }
    for q in 0..n {
        if rng.gen_bool(0.4) {
            g.set_final(q);
        }
    }
    g
}

pub fn random_nfa(
    rng: &mut Rng8,
    gamma: &Alphabet,
    max_states: usize,
    max_trans: usize,
) -> LabelledGraph<SetSpec> {
    random_graph(rng, max_states, max_trans, |r| {
        if r.gen_bool(0.1) {
            SetSpec::Eps
        } else {
            random_set_spec(r, gamma)
        }
    })
}

pub fn random_transducer(
    rng: &mut Rng8,
    gamma: &Alphabet,
    max_states: usize,
    max_trans: usize,
) -> LabelledGraph<PairingSpec> {
    random_graph(rng, max_states, max_trans, |r| {
        random_pairing_spec(r, gamma)
    })
}

/// A random expression with exactly `labels` label leaves, built without
/// the simplifying constructors.
pub fn random_regex(rng: &mut Rng8, gamma: &Alphabet, labels: usize) -> Regex<SetSpec> {
    let node = if labels <= 1 {
        if labels == 0 || rng.gen_bool(0.05) {
            Regex::Neutral
        } else {
            Regex::Label(if rng.gen_bool(0.05) {
                SetSpec::All
            } else {
                random_set_spec(rng, gamma)
            })
        }
    } else {
        let left = rng.gen_range(1..labels);
        let a = Box::new(random_regex(rng, gamma, left));
        let b = Box::new(random_regex(rng, gamma, labels - left));
        if rng.gen_bool(0.5) {
            Regex::Union(a, b)
        } else {
            Regex::Concat(a, b)
        }
    };
    if rng.gen_bool(0.25) {
        Regex::Star(Box::new(node))
    } else {
        node
    }
}

pub fn random_rel_regex(rng: &mut Rng8, gamma: &Alphabet, labels: usize) -> Regex<PairingSpec> {
    let node = if labels <= 1 {
        Regex::Label(random_pairing_spec(rng, gamma))
    } else {
        let left = rng.gen_range(1..labels);
        let a = Box::new(random_rel_regex(rng, gamma, left));
        let b = Box::new(random_rel_regex(rng, gamma, labels - left));
        if rng.gen_bool(0.5) {
            Regex::Union(a, b)
        } else {
            Regex::Concat(a, b)
        }
    };
    if rng.gen_bool(0.2) {
        Regex::Star(Box::new(node))
    } else {
        node
    }
}
