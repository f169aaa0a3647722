use clap::Parser;
use gamow_cli::{execute, Cli, RunConfig};

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = RunConfig::from_cli(cli).and_then(|cfg| execute(&cfg));
    if let Err(e) = result {
        eprintln!("gamow: {e}");
        std::process::exit(e.exit_code());
    }
}
