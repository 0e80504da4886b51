fn main() {
    std::process::exit(foliage::cli::run());
}
