//! Deciding whether a transducer realizes the identity or a function.

use symspec::alphabet::Alphabet;
use symspec::format::parse_graph;
use symspec::transducer::{identity_precheck, is_functional, realizes_identity, SpecTransducer};

fn load(text: &str) -> SpecTransducer {
    parse_graph(text)
        .unwrap()
        .graph
        .into_spec_transducer()
        .unwrap()
}

fn main() -> symspec::error::Result<()> {
    let gamma = Alphabet::from_chars("012")?;
    let cases = [
        (
            "copy",
            "@type transducer-setspec\n@initial p\n@final p\np @/= p\n",
        ),
        (
            "copy, split",
            "@type transducer-setspec\n@initial p\n@final p\np [0]/= p\np [^0]/= p\n",
        ),
        (
            "delay",
            "@type transducer-setspec\n@initial p\n@final q\np [0]/\\e q\nq \\e/[0] q\n",
        ),
        (
            "erase",
            "@type transducer-setspec\n@initial p\n@final p\np @/\\e p\n",
        ),
        (
            "insert",
            "@type transducer-setspec\n@initial p\n@final p\np \\e/@ p\n",
        ),
        (
            "substitute",
            "@type transducer-setspec\n@initial p\n@final q\np @/= p\np @/!@ q\nq @/= q\n",
        ),
    ];
    for (name, text) in cases {
        let t = load(text);
        let pre = match identity_precheck(&t, &gamma) {
            Some((label, cond)) => format!("fails {cond:?} at {label}"),
            None => "passes precheck".to_string(),
        };
        println!(
            "{name:>10}: identity {}, functional {} ({pre})",
            realizes_identity(&t, &gamma)?,
            is_functional(&t, &gamma)?
        );
    }
    Ok(())
}
