// Acceptance suite: runs every criterion at full scale and exits with the
// number of failed criteria.
#include <iostream>

#include "sliced/selftest.hpp"

int main() {
    const auto results = sliced::selftest::run(sliced::selftest::Level::Full, std::cout);
    return sliced::selftest::count_failures(results);
}
