use std::io;

fn main() {
    let status = mixture_riemann::cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(status.code());
}
