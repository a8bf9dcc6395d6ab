fn main() {
    superext::cli::main()
}
