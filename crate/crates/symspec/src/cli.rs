//! The `symspec` command line.
//!
//! Exit status 0 means the predicate holds, 1 that it fails, and 2 a usage
//! or input error.

use std::fs;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::alphabet::{show_word, Alphabet};
use crate::error::Error;
use crate::format::{parse_graph_in, write_graph, AnyGraph, GraphFile};
use crate::graph::{self, Composition, Intersection, Label, LabelledGraph};
use crate::nfa;
use crate::pairspec::PairingSpec;
use crate::regex::{state_eliminate, thompson, Regex};
use crate::setspec::SetSpec;
use crate::syntax::parse_word;
use crate::transducer::{self, SpecTransducer};

#[derive(Parser, Debug)]
#[command(
    name = "symspec",
    version,
    about = "Automata and transducers with set-spec labels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
struct Common {
    /// Alphabet as characters (`01`) or `#n`; required if the input has none.
    #[arg(long, global = true)]
    alphabet: Option<String>,

    /// Output file instead of standard output.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Regular expressions.
    Re {
        #[command(subcommand)]
        command: ReCommand,
        #[command(flatten)]
        common: Common,
    },
    /// Automata.
    Nfa {
        #[command(subcommand)]
        command: NfaCommand,
        #[command(flatten)]
        common: Common,
    },
    /// Transducers.
    T {
        #[command(subcommand)]
        command: TCommand,
        #[command(flatten)]
        common: Common,
    },
    /// Graph constructions on any kind.
    Graph {
        #[command(subcommand)]
        command: GraphCommand,
        #[command(flatten)]
        common: Common,
    },
    /// Graph files.
    Fmt {
        #[command(subcommand)]
        command: FmtCommand,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
enum Kind {
    #[default]
    Lang,
    Rel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
enum Method {
    #[default]
    Thompson,
    Pd,
    /// Thompson followed by trim.
    Totd,
}

#[derive(Subcommand, Debug)]
enum ReCommand {
    /// Print the expression in canonical form.
    Parse {
        expr: String,
        #[arg(long, value_enum, default_value_t)]
        kind: Kind,
    },
    /// Compile the expression to a graph.
    Tonfa {
        expr: String,
        #[arg(long, value_enum, default_value_t)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t)]
        method: Method,
    },
    /// Convert a graph to an expression by state elimination.
    Fromnfa { file: String },
}

#[derive(Subcommand, Debug)]
enum NfaCommand {
    /// Exit 0 iff the language is empty.
    Empty { file: String },
    /// Print some accepted word.
    Witness { file: String },
    /// Exit 0 iff the word is accepted (`\e` is the empty word).
    Member { file: String, word: String },
    /// Product automaton of the intersection.
    Intersect { a: String, b: String },
}

#[derive(Subcommand, Debug)]
enum TCommand {
    /// `a` followed by `b`.
    Compose { a: String, b: String },
    /// Exit 0 iff the transducer realizes an identity.
    Identity { file: String },
    /// Exit 0 iff the transducer is functional.
    Functional { file: String },
    /// Swap input and output tapes.
    Invert { file: String },
    /// Print some pair of the relation.
    Witness { file: String },
    /// Exit 0 iff the pair is in the relation.
    Member {
        file: String,
        input: String,
        output: String,
    },
    /// Exit 0 iff the language is independent for the transducer.
    Satisfies {
        /// `sub2`, `px` or a transducer file.
        #[arg(long)]
        prop: String,
        #[arg(long)]
        lang: String,
        /// Print a violating pair.
        #[arg(long)]
        witness: bool,
    },
}

#[derive(Subcommand, Debug)]
enum GraphCommand {
    Expand {
        file: String,
    },
    Trim {
        file: String,
    },
    Union {
        a: String,
        b: String,
    },
    Concat {
        a: String,
        b: String,
    },
    Star {
        file: String,
    },
    /// Intersection for automata, composition for transducers.
    Product {
        a: String,
        b: String,
    },
}

#[derive(Subcommand, Debug)]
enum FmtCommand {
    /// Validate a file and print it in canonical form.
    Check { file: String },
}

struct Failure(String);

impl Failure {
    fn at(origin: &str, e: Error) -> Failure {
        match e {
            Error::Parse {
                line,
                token,
                message,
            } => Failure(format!("{origin}:{line}: {message} at `{token}`")),
            other => Failure(format!("{origin}: {other}")),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

struct Session<'a> {
    common: Common,
    gamma: Option<Alphabet>,
    out: &'a mut dyn Write,
}

impl Session<'_> {
    fn new(common: Common, out: &mut dyn Write) -> Result<Session<'_>, Failure> {
        let gamma = match &common.alphabet {
            Some(a) => Some(Alphabet::parse(a).map_err(|e| Failure::at("--alphabet", e))?),
            None => None,
        };
        Ok(Session { common, gamma, out })
    }

    /// Loads a graph file; the first file with an alphabet fixes the
    /// session alphabet for later ones.
    fn load(&mut self, path: &str) -> Result<GraphFile, Failure> {
        let text = fs::read_to_string(path).map_err(|e| Failure(format!("{path}: {e}")))?;
        let file = parse_graph_in(&text, self.gamma.as_ref()).map_err(|e| Failure::at(path, e))?;
        if self.gamma.is_none() {
            self.gamma = file.alphabet.clone();
        }
        Ok(file)
    }

    fn alphabet(&self) -> Result<&Alphabet, Failure> {
        self.gamma.as_ref().ok_or_else(|| {
            Failure("no alphabet: pass --alphabet or add @alphabet to the input".into())
        })
    }

    fn load_nfa(&mut self, path: &str) -> Result<LabelledGraph<SetSpec>, Failure> {
        let file = self.load(path)?;
        let kind = file.graph.kind();
        file.graph
            .into_spec_nfa()
            .ok_or_else(|| Failure(format!("{path}: expected an automaton, found a {kind}")))
    }

    fn load_transducer(&mut self, path: &str) -> Result<SpecTransducer, Failure> {
        let file = self.load(path)?;
        let kind = file.graph.kind();
        file.graph
            .into_spec_transducer()
            .ok_or_else(|| Failure(format!("{path}: expected a transducer, found a {kind}")))
    }

    fn emit(&mut self, text: &str) -> Result<(), Failure> {
        match &self.common.output {
            Some(path) => fs::write(path, text).map_err(|e| Failure(format!("{path}: {e}"))),
            None => self
                .out
                .write_all(text.as_bytes())
                .map_err(|e| Failure(e.to_string())),
        }
    }

    fn emit_graph<L: Label>(&mut self, g: &LabelledGraph<L>) -> Outcome {
        let text = write_graph(g, self.gamma.as_ref());
        self.emit(&text)?;
        Ok(0)
    }

    fn emit_any(&mut self, g: &AnyGraph) -> Outcome {
        let text = g.write(self.gamma.as_ref());
        self.emit(&text)?;
        Ok(0)
    }

    fn verdict(&mut self, holds: bool) -> Outcome {
        self.emit(if holds { "true\n" } else { "false\n" })?;
        Ok(if holds { 0 } else { 1 })
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "symspec: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Re { command, common } => re(command, &mut Session::new(common, out)?),
        Command::Nfa { command, common } => nfa_cmd(command, &mut Session::new(common, out)?),
        Command::T { command, common } => t_cmd(command, &mut Session::new(common, out)?),
        Command::Graph { command, common } => graph_cmd(command, &mut Session::new(common, out)?),
        Command::Fmt { command, common } => {
            let s = &mut Session::new(common, out)?;
            match command {
                FmtCommand::Check { file } => {
                    let f = s.load(&file)?;
                    s.emit_any(&f.graph)
                }
            }
        }
    }
}

fn check<L: Label>(s: &Session, g: &LabelledGraph<L>) -> Result<(), Failure> {
    if let Some(gamma) = &s.gamma {
        g.check_labels(gamma)
            .map_err(|e| Failure::at("expression", e))?;
    }
    Ok(())
}

fn re(command: ReCommand, s: &mut Session) -> Outcome {
    let parse_err = |e| Failure::at("expression", e);
    match command {
        ReCommand::Parse { expr, kind } => {
            let text = match kind {
                Kind::Lang => Regex::<SetSpec>::parse(&expr)
                    .map_err(parse_err)?
                    .to_string(),
                Kind::Rel => Regex::<PairingSpec>::parse(&expr)
                    .map_err(parse_err)?
                    .to_string(),
            };
            s.emit(&format!("{text}\n"))?;
            Ok(0)
        }
        ReCommand::Tonfa { expr, kind, method } => match kind {
            Kind::Lang => {
                let r = Regex::<SetSpec>::parse(&expr).map_err(parse_err)?;
                let g = match method {
                    Method::Thompson => thompson(&r),
                    Method::Totd => thompson(&r).trim(),
                    Method::Pd => r.pd_automaton(),
                };
                check(s, &g)?;
                s.emit_graph(&g)
            }
            Kind::Rel => {
                let r = Regex::<PairingSpec>::parse(&expr).map_err(parse_err)?;
                let g = match method {
                    Method::Thompson => thompson(&r),
                    Method::Totd => thompson(&r).trim(),
                    Method::Pd => return Err(Failure("--method pd needs --kind lang".into())),
                };
                check(s, &g)?;
                s.emit_graph(&g)
            }
        },
        ReCommand::Fromnfa { file } => {
            let text = match s.load(&file)?.graph {
                AnyGraph::Nfa(g) => state_eliminate(&nfa::from_letters(&g)).to_string(),
                AnyGraph::NfaSetSpec(g) => state_eliminate(&g).to_string(),
                AnyGraph::Transducer(g) => {
                    state_eliminate(&transducer::from_letter_pairs(&g)).to_string()
                }
                AnyGraph::TransducerSetSpec(g) => state_eliminate(&g).to_string(),
            };
            s.emit(&format!("{text}\n"))?;
            Ok(0)
        }
    }
}

fn nfa_cmd(command: NfaCommand, s: &mut Session) -> Outcome {
    match command {
        NfaCommand::Empty { file } => {
            let g = s.load_nfa(&file)?;
            if let Some(gamma) = &s.gamma {
                g.check_labels(gamma)?;
            }
            s.verdict(nfa::is_empty(&g))
        }
        NfaCommand::Witness { file } => {
            let g = s.load_nfa(&file)?;
            match nfa::non_empty_witness(&g, s.alphabet()?)? {
                Some(w) => {
                    s.emit(&format!("{}\n", show_word(&w)))?;
                    Ok(0)
                }
                None => Ok(1),
            }
        }
        NfaCommand::Member { file, word } => {
            let g = s.load_nfa(&file)?;
            let w = parse_word(&word).map_err(|e| Failure::at("word", e))?;
            let holds = nfa::member(&w, &g, s.alphabet()?)?;
            s.verdict(holds)
        }
        NfaCommand::Intersect { a, b } => {
            let (a, b) = (s.load_nfa(&a)?, s.load_nfa(&b)?);
            let g = nfa::intersect(&a, &b, s.alphabet()?)?;
            s.emit_graph(&g)
        }
    }
}

fn t_cmd(command: TCommand, s: &mut Session) -> Outcome {
    match command {
        TCommand::Compose { a, b } => {
            let (a, b) = (s.load_transducer(&a)?, s.load_transducer(&b)?);
            let g = transducer::compose_t(&a, &b, s.alphabet()?)?;
            s.emit_graph(&g)
        }
        TCommand::Identity { file } => {
            let t = s.load_transducer(&file)?;
            let holds = transducer::realizes_identity(&t, s.alphabet()?)?;
            s.verdict(holds)
        }
        TCommand::Functional { file } => {
            let t = s.load_transducer(&file)?;
            let holds = transducer::is_functional(&t, s.alphabet()?)?;
            s.verdict(holds)
        }
        TCommand::Invert { file } => {
            let t = s.load_transducer(&file)?;
            s.emit_graph(&transducer::inverse_t(&t))
        }
        TCommand::Witness { file } => {
            let t = s.load_transducer(&file)?;
            match transducer::non_empty_witness_pair(&t, s.alphabet()?)? {
                Some(w) => {
                    s.emit(&format!("{w}\n"))?;
                    Ok(0)
                }
                None => Ok(1),
            }
        }
        TCommand::Member {
            file,
            input,
            output,
        } => {
            let t = s.load_transducer(&file)?;
            let u = parse_word(&input).map_err(|e| Failure::at("input word", e))?;
            let v = parse_word(&output).map_err(|e| Failure::at("output word", e))?;
            let holds = transducer::pair_member(&u, &v, &t, s.alphabet()?)?;
            s.verdict(holds)
        }
        TCommand::Satisfies {
            prop,
            lang,
            witness,
        } => {
            let a = s.load_nfa(&lang)?;
            let t = if transducer::BUILTIN_NAMES.contains(&prop.as_str()) {
                transducer::builtin(&prop)?.gamma_version(s.alphabet()?)
            } else {
                s.load_transducer(&prop)?
            };
            match transducer::satisfies_property(&t, &a, s.alphabet()?)? {
                None => s.verdict(true),
                Some(pair) if witness => {
                    s.emit(&format!("{pair}\n"))?;
                    Ok(1)
                }
                Some(_) => s.verdict(false),
            }
        }
    }
}

macro_rules! same_kind {
    ($a:expr, $b:expr, $path:expr, ($x:ident, $y:ident) => $body:expr) => {
        match ($a, $b) {
            (AnyGraph::Nfa($x), AnyGraph::Nfa($y)) => AnyGraph::Nfa($body),
            (AnyGraph::NfaSetSpec($x), AnyGraph::NfaSetSpec($y)) => AnyGraph::NfaSetSpec($body),
            (AnyGraph::Transducer($x), AnyGraph::Transducer($y)) => AnyGraph::Transducer($body),
            (AnyGraph::TransducerSetSpec($x), AnyGraph::TransducerSetSpec($y)) => {
                AnyGraph::TransducerSetSpec($body)
            }
            (x, y) => {
                return Err(Failure(format!(
                    "{}: kind {} does not match {}",
                    $path,
                    y.kind(),
                    x.kind()
                )))
            }
        }
    };
}

macro_rules! each_kind {
    ($a:expr, $x:ident => $body:expr) => {
        match $a {
            AnyGraph::Nfa($x) => AnyGraph::Nfa($body),
            AnyGraph::NfaSetSpec($x) => AnyGraph::NfaSetSpec($body),
            AnyGraph::Transducer($x) => AnyGraph::Transducer($body),
            AnyGraph::TransducerSetSpec($x) => AnyGraph::TransducerSetSpec($body),
        }
    };
}

fn graph_cmd(command: GraphCommand, s: &mut Session) -> Outcome {
    match command {
        GraphCommand::Expand { file } => {
            let g = s.load(&file)?.graph;
            let gamma = s.alphabet()?.clone();
            let expanded = match g {
                AnyGraph::Nfa(g) => AnyGraph::Nfa(g.expand(&gamma)?),
                AnyGraph::NfaSetSpec(g) => AnyGraph::Nfa(g.expand(&gamma)?),
                AnyGraph::Transducer(g) => AnyGraph::Transducer(g.expand(&gamma)?),
                AnyGraph::TransducerSetSpec(g) => AnyGraph::Transducer(g.expand(&gamma)?),
            };
            s.emit_any(&expanded)
        }
        GraphCommand::Trim { file } => {
            let g = s.load(&file)?.graph;
            s.emit_any(&each_kind!(g, g => g.trim()))
        }
        GraphCommand::Star { file } => {
            let g = s.load(&file)?.graph;
            s.emit_any(&each_kind!(g, g => graph::star(&g)))
        }
        GraphCommand::Union { a, b } => {
            let (ga, gb) = (s.load(&a)?.graph, s.load(&b)?.graph);
            s.emit_any(&same_kind!(ga, gb, b, (x, y) => graph::union(&x, &y)))
        }
        GraphCommand::Concat { a, b } => {
            let (ga, gb) = (s.load(&a)?.graph, s.load(&b)?.graph);
            s.emit_any(&same_kind!(ga, gb, b, (x, y) => graph::concat(&x, &y)))
        }
        GraphCommand::Product { a, b } => {
            let (ga, gb) = (s.load(&a)?.graph, s.load(&b)?.graph);
            let gamma = s.alphabet()?.clone();
            ga.check_labels(&gamma).map_err(|e| Failure::at(&a, e))?;
            gb.check_labels(&gamma).map_err(|e| Failure::at(&b, e))?;
            let g = match (ga, gb) {
                (AnyGraph::Nfa(x), AnyGraph::Nfa(y)) => AnyGraph::Nfa(
                    graph::product(&x.trim(), &y.trim(), &Intersection(&gamma)).trim(),
                ),
                (AnyGraph::NfaSetSpec(x), AnyGraph::NfaSetSpec(y)) => AnyGraph::NfaSetSpec(
                    graph::product(&x.trim(), &y.trim(), &Intersection(&gamma)).trim(),
                ),
                (AnyGraph::Transducer(x), AnyGraph::Transducer(y)) => AnyGraph::Transducer(
                    graph::product(&x.trim(), &y.trim(), &Composition(&gamma)).trim(),
                ),
                (AnyGraph::TransducerSetSpec(x), AnyGraph::TransducerSetSpec(y)) => {
                    AnyGraph::TransducerSetSpec(transducer::compose_t(&x, &y, &gamma)?)
                }
                (x, y) => {
                    return Err(Failure(format!(
                        "{b}: kind {} does not match {}",
                        y.kind(),
                        x.kind()
                    )))
                }
            };
            s.emit_any(&g)
        }
    }
}
