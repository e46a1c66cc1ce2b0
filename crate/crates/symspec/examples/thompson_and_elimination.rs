//! Expressions to graphs and back, for languages and for relations.

use symspec::alphabet::Alphabet;
use symspec::pairspec::PairingSpec;
use symspec::regex::{state_eliminate, thompson, Regex};
use symspec::setspec::SetSpec;

fn main() -> symspec::error::Result<()> {
    let gamma = Alphabet::from_chars("01")?;

    let r = Regex::<SetSpec>::parse("([0]+[1][1])*[^0]")?;
    let g = thompson(&r);
    println!(
        "{r} -> {} states, {} transitions",
        g.num_states(),
        g.num_transitions()
    );
    let back = state_eliminate(&g);
    println!("eliminated: {back}");
    println!(
        "same words up to length 4: {}",
        g.behaviour(&gamma, 4)? == thompson(&back).behaviour(&gamma, 4)?
    );

    let t = Regex::<PairingSpec>::parse("(@/=)*([0]/[1]+[1]/[0])(@/=)*")?;
    let g = thompson(&t).trim();
    println!("{t} -> {} states", g.num_states());
    println!("eliminated: {}", state_eliminate(&g));
    for pair in g.behaviour(&gamma, 2)? {
        println!(
            "    {} -> {}",
            symspec::alphabet::show_word(&pair.0),
            symspec::alphabet::show_word(&pair.1)
        );
    }
    Ok(())
}
