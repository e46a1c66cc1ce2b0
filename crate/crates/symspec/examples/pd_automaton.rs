//! Partial derivative automata stay within ||r|| + 1 states.

use symspec::alphabet::Alphabet;
use symspec::format::write_graph;
use symspec::regex::{thompson, Regex};
use symspec::setspec::SetSpec;
use symspec::syntax::parse_word;

fn main() -> symspec::error::Result<()> {
    let gamma = Alphabet::from_chars("012")?;
    for text in ["[0]([1])*", "([0]+[^0])*[1][2]", "(@[^2])*+[2]*"] {
        let r = Regex::<SetSpec>::parse(text)?;
        let (pd, states) = r.pd_automaton_with_states();
        println!(
            "{r}: ||r|| = {}, {} PD states vs {} Thompson states",
            r.alphabetic_size(),
            pd.num_states(),
            thompson(&r).num_states()
        );
        for (i, d) in states.iter().enumerate() {
            println!("    q{i} = {d}");
        }
        for w in ["0", "011", "21", "012"] {
            println!("    {w}: {}", r.matches(&parse_word(w)?, &gamma));
        }
    }
    let r = Regex::<SetSpec>::parse("[0]([1])*")?;
    print!("{}", write_graph(&r.pd_automaton(), Some(&gamma)));
    Ok(())
}
