fn main() {
    // CLI arrives with the cli module.
}
