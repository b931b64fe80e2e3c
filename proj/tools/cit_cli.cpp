#include <cstdio>
int main() { std::puts("cit_cli: not wired yet"); return 2; }
