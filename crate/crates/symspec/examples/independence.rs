//! Checking that a language is independent with respect to a transducer
//! property, or finding a pair of words that breaks it.

use symspec::alphabet::Alphabet;
use symspec::graph::union;
use symspec::nfa::{self, SpecNfa};
use symspec::syntax::parse_word;
use symspec::transducer::{builtin, satisfies_property};

fn finite(words: &[&str], gamma: &Alphabet) -> SpecNfa {
    let lines: Vec<SpecNfa> = words
        .iter()
        .map(|w| nfa::line_automaton(&parse_word(w).unwrap(), gamma).unwrap())
        .collect();
    lines[1..]
        .iter()
        .fold(lines[0].clone(), |acc, g| union(&acc, g))
}

fn main() -> symspec::error::Result<()> {
    let gamma = Alphabet::from_chars("01")?;
    let checks: [(&str, &[&str]); 4] = [
        ("px", &["00", "01", "11"]),
        ("px", &["0", "01"]),
        ("sub2", &["000", "111"]),
        ("sub2", &["0000", "0011", "1111"]),
    ];
    for (prop, words) in checks {
        let t = builtin(prop)?.gamma_version(&gamma);
        match satisfies_property(&t, &finite(words, &gamma), &gamma)? {
            None => println!("{prop}: {words:?} satisfies it"),
            Some(w) => println!(
                "{prop}: {words:?} fails, witness {}",
                w.to_string().replace('\t', " / ")
            ),
        }
    }
    Ok(())
}
