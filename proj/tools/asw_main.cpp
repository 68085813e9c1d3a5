#include <cstdio>

// Subcommands are wired up in cli.hpp as the library modules land.
int main(int argc, char** argv) {
    (void)argc;
    (void)argv;
    std::fprintf(stderr, "asw: no subcommands available yet\n");
    return 1;
}
