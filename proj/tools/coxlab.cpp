#include <cstdio>

int main() {
    std::puts("coxlab: subcommands not wired up yet");
    return 2;
}
