#include <iostream>

#include "ybekit/cli.hpp"

int main(int argc, char** argv) { return ybekit::cli::run(argc, argv, std::cout, std::cerr); }
