//! Set specs: a constant-size description of a subset of Γ ∪ {ε}.

use symspec::alphabet::Alphabet;
use symspec::setspec::SetSpec;

fn main() -> symspec::error::Result<()> {
    let gamma = Alphabet::from_chars("0123456789")?;
    for (f, g) in [
        ("[035]", "[1358]"),
        ("[^035]", "[1358]"),
        ("[^035]", "[^1358]"),
        ("[01]", "[^01]"),
    ] {
        let (f, g): (SetSpec, SetSpec) = (f.parse()?, g.parse()?);
        match f.meet(&g, &gamma) {
            Some(h) => println!("{f} ∩ {g} = {h}"),
            None => println!("{f} ∩ {g} = ∅"),
        }
    }

    // A word covering all of Γ is rewritten: `[01]` over {0,1} is `@`, `[^01]` is empty.
    let small = Alphabet::from_chars("01")?;
    for f in ["[01]", "[^01]", "[^0]"] {
        let f: SetSpec = f.parse()?;
        match f.clone().normalize(&small)? {
            Some(g) => println!("{f} over {small} normalizes to {g}"),
            None => println!("{f} over {small} is empty"),
        }
    }

    let letters = "[^35]".parse::<SetSpec>()?.language(&gamma)?;
    let shown: Vec<String> = letters.iter().map(ToString::to_string).collect();
    println!("L([^35]) = {{{}}}", shown.join(", "));
    Ok(())
}
