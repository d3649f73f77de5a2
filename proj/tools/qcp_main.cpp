#include <iostream>

int main() {
  std::cout << "qcp\n";
  return 0;
}
