#include <iostream>

#include "kmark_cli.hpp"

int main(int argc, char** argv) { return kmark::cli::run(argc, argv, std::cout, std::cerr); }
