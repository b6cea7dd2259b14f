use clap::Parser;

fn main() {
    let code = match nilschur_cli::Cli::try_parse() {
        Ok(cli) => nilschur_cli::run(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock()),
        Err(e) => {
            let _ = e.print();
            // Usage mistakes are input errors; 2 is reserved for internal failures.
            if e.use_stderr() {
                nilschur_cli::EXIT_INPUT
            } else {
                nilschur_cli::EXIT_OK
            }
        }
    };
    std::process::exit(code);
}
