//! Runs the whole pipeline on an input document, as the `report`
//! subcommand does. Pass a path, or run without arguments for a built-in
//! example.

use toric_nnd::report::{parse_input, read_input, Command, Session, Settings};

fn main() -> toric_nnd::Result<()> {
    let spec = match std::env::args().nth(1) {
        Some(path) => read_input(path.as_ref())?,
        None => parse_input(r#"{"rank":3,"cone":[[1,0,0],[0,1,0],[0,0,1]],"support":[[3,0,0],[1,3,0],[0,0,5]]}"#)?,
    };
    let settings = Settings::from_spec(&spec);
    let out = Session::new(spec, settings).run(Command::Report);
    print!("{}", out.render());
    Ok(())
}
