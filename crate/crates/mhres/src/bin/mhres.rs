fn main() {
    // Placeholder until the cli module lands.
}
