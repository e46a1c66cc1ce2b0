//! Composition, inversion and restriction of set-spec transducers.

use symspec::alphabet::{show_word, Alphabet};
use symspec::format::{parse_graph, write_graph};
use symspec::transducer::{self, builtin};

fn main() -> symspec::error::Result<()> {
    let gamma = Alphabet::from_chars("01")?;
    let sub2 = builtin("sub2")?.gamma_version(&gamma);
    let px = builtin("px")?.gamma_version(&gamma);
    println!(
        "sub2: {} states, {} transitions",
        sub2.num_states(),
        sub2.num_transitions()
    );

    // Run px, then sub2: drop a nonempty suffix, then substitute up to two symbols.
    let both = transducer::compose_t(&px, &sub2, &gamma)?;
    println!(
        "px ; sub2: {} states, {} transitions",
        both.num_states(),
        both.num_transitions()
    );
    let pairs = both.behaviour(&gamma, 2)?;
    for (u, v) in pairs.iter().filter(|(u, _)| u.len() == 2) {
        println!("    {} -> {}", show_word(u), show_word(v));
    }

    let inv = transducer::inverse_t(&px);
    print!("inverse of px:\n{}", write_graph(&inv, None));

    let lang = parse_graph("@type nfa-setspec\n@initial s\n@final t\ns [0] s\ns [1] t\n")?
        .graph
        .into_spec_nfa()
        .unwrap();
    let restricted = transducer::restrict_input(&sub2, &lang, &gamma)?;
    if let Some(w) = transducer::non_empty_witness_pair(&restricted, &gamma)? {
        println!(
            "sub2 on 0*1 relates {}",
            w.to_string().replace('\t', " -> ")
        );
    }
    Ok(())
}
