fn main() { deloop::cli::main(); }
