#include <iostream>

#include "tenorlab/acceptance.hpp"

int main() {
    const int failed = tenorlab::acceptance::run_all(std::cout);
    return failed == 0 ? 0 : 1;
}
