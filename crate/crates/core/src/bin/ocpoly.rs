fn main() {
    std::process::exit(order_chain::cli::run(std::env::args_os()));
}
