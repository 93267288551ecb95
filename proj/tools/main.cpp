#include <iostream>

#include "kcycles/app.hpp"

int main(int argc, char** argv) { return kcycles::cli::run(argc, argv, std::cout, std::cerr); }
