#include <cstdio>
int main(){ std::puts("spingpc: not wired yet"); return 0; }
