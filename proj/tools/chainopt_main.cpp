#include <cstdio>

int main() {
    std::puts("chainopt: not yet wired up");
    return 0;
}
