use corrfront::runner::{parse_config, run};

const USAGE: &str = "\
corrfront: correlation-front dynamics of lattice free fermions

USAGE:
    corrfront [COMMAND] [FLAGS]

COMMANDS (default: moments):
    front       |C_{m,n}(t)| grids around the light cone
    moments     lattice moments M1, M2 against their soft-edge predictions
    rmt         Tracy-Widom CDF and GSE/GOE generating functions
    initstate   raw and rescaled moment curves for a periodic pattern
    verify      run the invariant suite, one pass/fail line per check

FLAGS:
    --t LIST            comma-separated times, e.g. 10,100,1000
    --s MIN:MAX:STEP    rescaled-coordinate grid, e.g. -6:4:0.25
    --lambda LIST       comma-separated lambda values for rmt tables
    --pattern BITS      initial occupation cell, e.g. 10 or 110100
    --nodes N           Gauss-Legendre nodes for Fredholm determinants
    --out PATH          write CSV here instead of stdout
    --config PATH       key = value file; explicit flags win
    --verbose           chatter about overrides and outputs on stderr

EXIT CODES: 0 ok, 1 invalid configuration, 2 numerical failure, 3 i/o failure.";

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.iter().any(|a| a == "--help" || a == "-h") {
        println!("{USAGE}");
        return;
    }
    let config = match parse_config(&args) {
        Ok(config) => config,
        Err(errors) => {
            eprintln!("configuration errors:");
            for e in &errors {
                eprintln!("  - {e}");
            }
            eprintln!("run with --help for usage");
            std::process::exit(1);
        }
    };
    if let Err(e) = run(&config) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
