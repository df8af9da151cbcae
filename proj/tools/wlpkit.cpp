#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) { return wlpkit::cli::main_dispatch(argc, argv, std::cout, std::cerr); }
