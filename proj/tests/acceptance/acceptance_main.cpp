#include <iostream>

#include "acceptance.hpp"

int main() { return symalg::acceptance::run_all(std::cout); }
