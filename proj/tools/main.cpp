#include <cstdio>

int main() {
  std::puts("helmlab: CLI not wired up yet");
  return 1;
}
