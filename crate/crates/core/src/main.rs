fn main() {
    std::process::exit(slitmap_core::cli::run());
}
