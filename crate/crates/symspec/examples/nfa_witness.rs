//! Emptiness, witnesses and membership on set-spec automata.

use symspec::alphabet::show_word;
use symspec::alphabet::Alphabet;
use symspec::format::parse_graph;
use symspec::nfa;
use symspec::syntax::parse_word;

// Words over {0,1} with no factor 011.
const NO_011: &str = "
@type nfa-setspec
@alphabet 01
@initial a
@final a b c
a [1] a
a [0] b
b [0] b
b [1] c
c [0] b
";

fn main() -> symspec::error::Result<()> {
    let gamma = Alphabet::from_chars("01")?;
    let a = parse_graph(NO_011)?.graph.into_spec_nfa().unwrap();
    for w in ["\\e", "0101", "0110", "1110"] {
        println!("{w:>5} ∈ L: {}", nfa::member(&parse_word(w)?, &a, &gamma)?);
    }

    let ends_11 =
        parse_graph("@type nfa-setspec\n@initial s\n@final u\ns @ s\ns [1] t\nt [1] u\n")?
            .graph
            .into_spec_nfa()
            .unwrap();
    let both = nfa::intersect(&a, &ends_11, &gamma)?;
    match nfa::non_empty_witness(&both, &gamma)? {
        Some(w) => println!("no 011 and ends in 11, e.g. {}", show_word(&w)),
        None => println!("no word avoids 011 and ends in 11"),
    }

    let starts_0 =
        parse_graph("@type nfa-setspec\n@initial s\n@final v\ns [0] t\nt [1] u\nu [1] v\nv @ v\n")?
            .graph
            .into_spec_nfa()
            .unwrap();
    let none = nfa::intersect(&a, &starts_0, &gamma)?;
    println!("011 @* avoiding 011 is empty: {}", nfa::is_empty(&none));
    Ok(())
}
