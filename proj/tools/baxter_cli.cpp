// Placeholder; the full command set is wired up once the library lands.
int main() { return 0; }
