//! The text format: parse a structure, synthesize its table through the
//! command layer, and round-trip the result.

use relres::cli::{run, Command, Options};
use relres::format::parse;

const CHAIN: &str = "\
# three-element chain, no tables yet
elements: 0 m 1
covers: 0<m m<1
";

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("relres-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let input = dir.join("chain.txt");
    std::fs::write(&input, CHAIN)?;

    let out = run(
        &Command::Synthesize {
            file: input.clone(),
            output: None,
        },
        &Options::default(),
    );
    print!("{}", out.stdout);
    let parsed = parse(&out.stdout)?;
    assert_eq!(parsed.render(), out.stdout);

    std::fs::write(&input, &out.stdout)?;
    let check = run(&Command::Check { file: input }, &Options::default());
    print!("{}", check.stdout);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
